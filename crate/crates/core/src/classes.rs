//! G-conjugacy classes of a normal subgroup N and the central subgroups
//! Z(G), Z(N) and N ∩ Z(G).

use crate::arith::is_prime_power;
use crate::arith::PrimePower;
use crate::error::Result;
use crate::graph::CDGraph;
use crate::group::FiniteGroup;
use crate::subgroup::Subgroup;

/// One G-conjugacy class contained in N.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConjClass {
    /// Least element index in the class.
    pub representative: usize,
    /// Sorted member indices.
    pub members: Vec<usize>,
    pub size: u64,
}

const NOT_IN_N: u32 = u32::MAX;

#[derive(Clone, Debug)]
pub struct ClassData<'g> {
    group: &'g FiniteGroup,
    normal: Subgroup,
    classes: Vec<ConjClass>,
    class_of: Vec<u32>,
    orders: Vec<u32>,
    zg: Subgroup,
    zn: Subgroup,
    n_cap_zg: Subgroup,
    cs_values: Vec<u64>,
    vertex_sizes: Vec<u64>,
}

impl<'g> ClassData<'g> {
    /// Orbits of the conjugation action of `g` on the members of `n`, ordered by
    /// representative. Fails with a witness when `n` is not normal.
    pub fn compute(g: &'g FiniteGroup, n: &Subgroup) -> Result<Self> {
        g.require_normal(n)?;
        let mut class_of = vec![NOT_IN_N; g.order()];
        let mut classes = Vec::new();
        for &x in n.members() {
            if class_of[x] != NOT_IN_N {
                continue;
            }
            let members = g.conjugation_orbit(x);
            for &m in &members {
                class_of[m] = classes.len() as u32;
            }
            classes.push(ConjClass {
                representative: members[0],
                size: members.len() as u64,
                members,
            });
        }

        let mut orders = vec![0u32; g.order()];
        for &x in n.members() {
            orders[x] = g.element_order(x) as u32;
        }

        let zg = g.center();
        let n_cap_zg = n.intersection(&zg);
        let n_gens = g.generating_set(n);
        let zn = Subgroup::from_members(
            g.order(),
            n.members()
                .iter()
                .copied()
                .filter(|&x| n_gens.iter().all(|&s| g.commute(x, s)))
                .collect(),
        );

        let mut cs_values: Vec<u64> = classes.iter().map(|c| c.size).collect();
        cs_values.sort_unstable();
        cs_values.dedup();
        let vertex_sizes = cs_values.iter().copied().filter(|&s| s > 1).collect();

        Ok(ClassData {
            group: g,
            normal: n.clone(),
            classes,
            class_of,
            orders,
            zg,
            zn,
            n_cap_zg,
            cs_values,
            vertex_sizes,
        })
    }

    pub fn group(&self) -> &'g FiniteGroup {
        self.group
    }

    pub fn normal(&self) -> &Subgroup {
        &self.normal
    }

    pub fn classes(&self) -> &[ConjClass] {
        &self.classes
    }

    pub fn center_of_group(&self) -> &Subgroup {
        &self.zg
    }

    /// Z(N): elements of N commuting with all of N.
    pub fn center_of_normal(&self) -> &Subgroup {
        &self.zn
    }

    pub fn normal_cap_center(&self) -> &Subgroup {
        &self.n_cap_zg
    }

    /// cs_G(N), including 1.
    pub fn cs_values(&self) -> &[u64] {
        &self.cs_values
    }

    /// cs_G(N) without 1: the vertex set of Γ_G(N).
    pub fn vertex_sizes(&self) -> &[u64] {
        &self.vertex_sizes
    }

    pub fn graph(&self) -> CDGraph {
        CDGraph::build(&self.vertex_sizes).expect("vertex sizes exceed 1")
    }

    pub fn class_of(&self, x: usize) -> Option<&ConjClass> {
        match self.class_of.get(x) {
            Some(&c) if c != NOT_IN_N => Some(&self.classes[c as usize]),
            _ => None,
        }
    }

    /// |x^G| for `x` in N.
    pub fn class_size(&self, x: usize) -> Option<u64> {
        self.class_of(x).map(|c| c.size)
    }

    pub fn element_order(&self, x: usize) -> usize {
        match self.orders.get(x) {
            Some(&o) if o > 0 => o as usize,
            _ => self.group.element_order(x),
        }
    }

    pub fn is_noncentral(&self, x: usize) -> bool {
        self.normal.contains(x) && !self.n_cap_zg.contains(x)
    }

    /// |N / (N ∩ Z(G))|.
    pub fn central_quotient_order(&self) -> u64 {
        (self.normal.order() / self.n_cap_zg.order()) as u64
    }

    /// N ∖ Z(G), sorted.
    pub fn noncentral_elements(&self) -> Vec<usize> {
        self.normal
            .members()
            .iter()
            .copied()
            .filter(|&x| !self.n_cap_zg.contains(x))
            .collect()
    }

    /// Elements of N whose order is a power of `p` (the identity counts as
    /// `p^0` unless `noncentral_only` is set).
    pub fn p_elements(&self, p: u64, noncentral_only: bool) -> Vec<usize> {
        self.normal
            .members()
            .iter()
            .copied()
            .filter(|&x| !noncentral_only || !self.n_cap_zg.contains(x))
            .filter(|&x| match is_prime_power(self.element_order(x) as u64) {
                Some(PrimePower::Trivial) => true,
                Some(PrimePower::Prime(q)) => q == p,
                None => false,
            })
            .collect()
    }

    /// Every commuting pair `(x0, y0)` of a noncentral `p1`-element and a
    /// noncentral `p2`-element, in lexicographic index order.
    pub fn commuting_cross_prime_pairs(&self, p1: u64, p2: u64) -> Vec<(usize, usize)> {
        assert_ne!(p1, p2, "cross-prime pair needs distinct primes");
        let xs = self.p_elements(p1, true);
        let ys = self.p_elements(p2, true);
        let mut out = Vec::new();
        for &x in &xs {
            for &y in &ys {
                if self.group.commute(x, y) {
                    out.push((x, y));
                }
            }
        }
        out
    }

    /// The lexicographically least commuting cross-prime pair, if any.
    pub fn commuting_cross_prime_pair(&self, p1: u64, p2: u64) -> Option<(usize, usize)> {
        assert_ne!(p1, p2, "cross-prime pair needs distinct primes");
        let ys = self.p_elements(p2, true);
        self.p_elements(p1, true)
            .into_iter()
            .find_map(|x| ys.iter().find(|&&y| self.group.commute(x, y)).map(|&y| (x, y)))
    }
}
