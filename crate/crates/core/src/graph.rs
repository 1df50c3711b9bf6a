//! Common-divisor graph on a set of integers greater than 1: two distinct
//! vertices are adjacent when their gcd exceeds 1.

use std::collections::VecDeque;

use petgraph::unionfind::UnionFind;

use crate::arith::gcd;
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CDGraph {
    vertices: Vec<u64>,
    adj: Vec<Vec<bool>>,
    components: Vec<Vec<usize>>,
}

impl CDGraph {
    /// Builds the graph on the distinct values of `sizes`. Every value must
    /// exceed 1.
    pub fn build(sizes: &[u64]) -> Result<Self> {
        if let Some(&bad) = sizes.iter().find(|&&s| s <= 1) {
            return Err(Error::InvalidVertex(bad));
        }
        let mut vertices = sizes.to_vec();
        vertices.sort_unstable();
        vertices.dedup();
        let n = vertices.len();
        let mut adj = vec![vec![false; n]; n];
        for i in 0..n {
            for j in i + 1..n {
                let e = gcd(vertices[i], vertices[j]) > 1;
                adj[i][j] = e;
                adj[j][i] = e;
            }
        }
        let components = components_union_find(&adj);
        Ok(CDGraph {
            vertices,
            adj,
            components,
        })
    }

    pub fn vertices(&self) -> &[u64] {
        &self.vertices
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn index_of(&self, v: u64) -> Result<usize> {
        self.vertices
            .binary_search(&v)
            .map_err(|_| Error::UnknownVertex(v))
    }

    pub fn adjacent(&self, v: u64, w: u64) -> Result<bool> {
        Ok(self.adj[self.index_of(v)?][self.index_of(w)?])
    }

    pub fn adjacent_idx(&self, i: usize, j: usize) -> bool {
        self.adj[i][j]
    }

    /// Every adjacent pair `(v, w)` with `v < w`, sorted.
    pub fn edges(&self) -> Vec<(u64, u64)> {
        let n = self.len();
        let mut out = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                if self.adj[i][j] {
                    out.push((self.vertices[i], self.vertices[j]));
                }
            }
        }
        out
    }

    /// `v` together with every vertex adjacent to it, sorted.
    pub fn closed_neighborhood(&self, v: u64) -> Result<Vec<u64>> {
        let i = self.index_of(v)?;
        Ok(self.closed_neighborhood_idx(i))
    }

    fn closed_neighborhood_idx(&self, i: usize) -> Vec<u64> {
        (0..self.len())
            .filter(|&j| j == i || self.adj[i][j])
            .map(|j| self.vertices[j])
            .collect()
    }

    /// Open-neighborhood size.
    pub fn degree(&self, v: u64) -> Result<usize> {
        Ok(self.degree_idx(self.index_of(v)?))
    }

    fn degree_idx(&self, i: usize) -> usize {
        self.adj[i].iter().filter(|&&b| b).count()
    }

    pub fn degrees(&self) -> Vec<usize> {
        (0..self.len()).map(|i| self.degree_idx(i)).collect()
    }

    /// All degrees equal; vacuously true on at most one vertex.
    pub fn is_regular(&self) -> bool {
        let d = self.degrees();
        d.windows(2).all(|w| w[0] == w[1])
    }

    /// Every pair adjacent; vacuously true on at most one vertex.
    pub fn is_complete(&self) -> bool {
        let n = self.len();
        (0..n).all(|i| (i + 1..n).all(|j| self.adj[i][j]))
    }

    /// Connected components as sorted vertex lists, ordered by least vertex.
    pub fn components(&self) -> Vec<Vec<u64>> {
        self.components
            .iter()
            .map(|c| c.iter().map(|&i| self.vertices[i]).collect())
            .collect()
    }

    pub fn component_count(&self) -> usize {
        self.components.len()
    }

    /// At most one component (the empty graph counts as connected).
    pub fn is_connected(&self) -> bool {
        self.component_count() <= 1
    }

    /// Component count by breadth-first traversal, independent of the
    /// union-find pass used at construction.
    pub fn component_count_bfs(&self) -> usize {
        let n = self.len();
        let mut seen = vec![false; n];
        let mut count = 0;
        for s in 0..n {
            if seen[s] {
                continue;
            }
            count += 1;
            seen[s] = true;
            let mut queue = VecDeque::from([s]);
            while let Some(i) = queue.pop_front() {
                for j in 0..n {
                    if self.adj[i][j] && !seen[j] {
                        seen[j] = true;
                        queue.push_back(j);
                    }
                }
            }
        }
        count
    }

    /// Distinct vertices with identical closed neighborhoods.
    pub fn are_partners(&self, v: u64, w: u64) -> Result<bool> {
        let (i, j) = (self.index_of(v)?, self.index_of(w)?);
        Ok(i != j && self.closed_neighborhood_idx(i) == self.closed_neighborhood_idx(j))
    }

    /// Equivalence classes of "equal closed neighborhood", each sorted, ordered
    /// by least vertex.
    pub fn partner_classes(&self) -> Vec<Vec<u64>> {
        let hoods: Vec<Vec<u64>> = (0..self.len()).map(|i| self.closed_neighborhood_idx(i)).collect();
        let mut class_of: Vec<Option<usize>> = vec![None; self.len()];
        let mut classes: Vec<Vec<u64>> = Vec::new();
        for i in 0..self.len() {
            if class_of[i].is_some() {
                continue;
            }
            let id = classes.len();
            let mut class = Vec::new();
            for j in i..self.len() {
                if class_of[j].is_none() && hoods[j] == hoods[i] {
                    class_of[j] = Some(id);
                    class.push(self.vertices[j]);
                }
            }
            classes.push(class);
        }
        classes
    }
}

fn components_union_find(adj: &[Vec<bool>]) -> Vec<Vec<usize>> {
    let n = adj.len();
    let mut uf = UnionFind::<usize>::new(n);
    for i in 0..n {
        for j in i + 1..n {
            if adj[i][j] {
                uf.union(i, j);
            }
        }
    }
    let labels = uf.into_labeling();
    let mut comps: Vec<Vec<usize>> = Vec::new();
    let mut slot: Vec<Option<usize>> = vec![None; n];
    for i in 0..n {
        let root = labels[i];
        match slot[root] {
            Some(c) => comps[c].push(i),
            None => {
                slot[root] = Some(comps.len());
                comps.push(vec![i]);
            }
        }
    }
    comps
}
