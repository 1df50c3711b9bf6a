//! Brute-force oracles shared by the integration tests. Nothing here goes
//! through the library's orbit, normal-subgroup or centralizer code.

#![allow(dead_code)]

use std::collections::{BTreeMap, BTreeSet};

use ccsgraph::FiniteGroup;

/// A permutation as 0-based images.
pub type Raw = Vec<usize>;

/// `p ∘ q`: apply `q` first.
pub fn raw_compose(p: &Raw, q: &Raw) -> Raw {
    q.iter().map(|&j| p[j]).collect()
}

pub fn raw_inverse(p: &Raw) -> Raw {
    let mut inv = vec![0; p.len()];
    for (i, &j) in p.iter().enumerate() {
        inv[j] = i;
    }
    inv
}

/// Parses "(1 2 3)(4 5)" into 0-based images.
pub fn raw_parse(s: &str, degree: usize) -> Raw {
    let mut images: Raw = (0..degree).collect();
    for cyc in s.split(')').map(|c| c.trim().trim_start_matches('(')) {
        let pts: Vec<usize> = cyc.split_whitespace().map(|t| t.parse::<usize>().unwrap() - 1).collect();
        for k in 0..pts.len() {
            images[pts[k]] = pts[(k + 1) % pts.len()];
        }
    }
    images
}

/// Every element of the group generated by `gens`, by repeated multiplication
/// until no new products appear.
pub fn raw_closure(degree: usize, gens: &[Raw]) -> BTreeSet<Raw> {
    let mut set: BTreeSet<Raw> = BTreeSet::new();
    set.insert((0..degree).collect());
    loop {
        let mut added = Vec::new();
        for a in &set {
            for g in gens {
                let p = raw_compose(a, g);
                if !set.contains(&p) {
                    added.push(p);
                }
            }
        }
        if added.is_empty() {
            return set;
        }
        set.extend(added);
    }
}

/// Multiset of G-conjugacy class sizes of the elements in `n`, computed by
/// conjugating each element by every element of `g`.
pub fn raw_class_sizes(g: &BTreeSet<Raw>, n: &BTreeSet<Raw>) -> Vec<usize> {
    let mut seen: BTreeSet<Raw> = BTreeSet::new();
    let mut sizes = Vec::new();
    for x in n {
        if seen.contains(x) {
            continue;
        }
        let class: BTreeSet<Raw> = g
            .iter()
            .map(|h| raw_compose(&raw_compose(h, x), &raw_inverse(h)))
            .collect();
        sizes.push(class.len());
        seen.extend(class);
    }
    sizes.sort_unstable();
    sizes
}

pub fn distinct(v: &[usize]) -> Vec<u64> {
    let s: BTreeSet<u64> = v.iter().map(|&x| x as u64).collect();
    s.into_iter().collect()
}

/// Closure of a seed under the group multiplication, by fixed-point iteration.
fn closure_by_index(g: &FiniteGroup, seed: &BTreeSet<usize>) -> BTreeSet<usize> {
    let mut set = seed.clone();
    set.insert(0);
    loop {
        let items: Vec<usize> = set.iter().copied().collect();
        let mut grew = false;
        for &a in &items {
            for &b in &items {
                grew |= set.insert(g.mul(a, b));
            }
        }
        if !grew {
            return set;
        }
    }
}

/// The full subgroup lattice: cyclic subgroups, then joins of pairs until no
/// new subgroup appears. Every subgroup is the join of its cyclic subgroups.
pub fn all_subgroups(g: &FiniteGroup) -> BTreeSet<BTreeSet<usize>> {
    let mut subs: BTreeSet<BTreeSet<usize>> = BTreeSet::new();
    for x in 0..g.order() {
        subs.insert(closure_by_index(g, &BTreeSet::from([x])));
    }
    loop {
        let list: Vec<BTreeSet<usize>> = subs.iter().cloned().collect();
        let mut grew = false;
        for (i, a) in list.iter().enumerate() {
            for b in &list[i + 1..] {
                if a.is_subset(b) || b.is_subset(a) {
                    continue;
                }
                let u: BTreeSet<usize> = a.union(b).copied().collect();
                grew |= subs.insert(closure_by_index(g, &u));
            }
        }
        if !grew {
            return subs;
        }
    }
}

/// Normal subgroups by exhaustive conjugation over the whole lattice.
pub fn brute_normal_subgroups(g: &FiniteGroup) -> Vec<Vec<usize>> {
    let mut out: Vec<Vec<usize>> = all_subgroups(g)
        .into_iter()
        .filter(|h| {
            (0..g.order()).all(|x| h.iter().all(|&k| h.contains(&g.mul(g.mul(x, k), g.inv(x)))))
        })
        .map(|h| h.into_iter().collect())
        .collect();
    out.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
    out
}

/// Raw permutations of a library group, index-aligned.
pub fn raw_elements(g: &FiniteGroup) -> Vec<Raw> {
    (0..g.order())
        .map(|i| g.permutation(i).unwrap().images().iter().map(|&x| x - 1).collect())
        .collect()
}

pub fn histogram(v: &[usize]) -> BTreeMap<usize, usize> {
    let mut m = BTreeMap::new();
    for &x in v {
        *m.entry(x).or_default() += 1;
    }
    m
}
