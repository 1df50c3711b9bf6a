//! Fully enumerated finite groups.
//!
//! A [`FiniteGroup`] stores every element and answers multiplication by index.
//! Permutation groups multiply through composition and a hash lookup, with a
//! precomputed Cayley table when the order is small enough; quotient groups are
//! always table-backed.

use std::collections::{HashMap, HashSet, VecDeque};

use crate::error::{Error, Result};
use crate::perm::Permutation;
use crate::subgroup::Subgroup;

pub const DEFAULT_ORDER_CAP: usize = 20_000;

/// Permutation groups up to this order get a full Cayley table.
const CAYLEY_TABLE_LIMIT: usize = 1024;

/// Largest quotient we are willing to materialize as a table.
const QUOTIENT_TABLE_LIMIT: usize = 4096;

/// Index of the identity in every group.
pub const IDENTITY: usize = 0;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Element {
    Perm(Permutation),
    /// A coset, labelled by its least-index representative in the parent group.
    Coset { representative: usize },
}

#[derive(Clone, Debug)]
enum Backing {
    Perm {
        degree: usize,
        lookup: HashMap<Permutation, u32>,
        table: Option<Vec<u32>>,
    },
    Table {
        table: Vec<u32>,
    },
}

#[derive(Clone, Debug)]
pub struct FiniteGroup {
    elements: Vec<Element>,
    backing: Backing,
    inverses: Vec<u32>,
    generators: Vec<usize>,
}

/// Order cap from `CCSGRAPH_ORDER_CAP`, falling back to [`DEFAULT_ORDER_CAP`].
pub fn order_cap_from_env() -> usize {
    std::env::var("CCSGRAPH_ORDER_CAP")
        .ok()
        .and_then(|v| v.trim().parse().ok())
        .unwrap_or(DEFAULT_ORDER_CAP)
}

impl FiniteGroup {
    /// Closes `gens` under composition, breadth-first from the identity.
    ///
    /// Elements are indexed in discovery order (identity first); each dequeued
    /// element `x` is extended by `x·g` for every generator `g` in list order.
    pub fn generate(degree: usize, gens: &[Permutation], cap: usize) -> Result<Self> {
        if let Some(g) = gens.iter().find(|g| g.degree() != degree) {
            return Err(Error::DegreeMismatch {
                left: degree,
                right: g.degree(),
            });
        }
        let identity = Permutation::identity(degree);
        let mut perms = vec![identity.clone()];
        let mut lookup = HashMap::new();
        lookup.insert(identity, 0u32);
        let mut next = 0;
        while next < perms.len() {
            for g in gens {
                let prod = perms[next].compose_unchecked(g);
                if !lookup.contains_key(&prod) {
                    if perms.len() >= cap {
                        return Err(Error::OrderCapExceeded { cap });
                    }
                    lookup.insert(prod.clone(), perms.len() as u32);
                    perms.push(prod);
                }
            }
            next += 1;
        }
        let generators = gens.iter().map(|g| lookup[g] as usize).collect();
        Ok(Self::from_permutations(degree, perms, lookup, generators))
    }

    fn from_permutations(
        degree: usize,
        perms: Vec<Permutation>,
        lookup: HashMap<Permutation, u32>,
        generators: Vec<usize>,
    ) -> Self {
        let n = perms.len();
        let inverses = perms.iter().map(|p| lookup[&p.inverse()]).collect();
        let table = (n <= CAYLEY_TABLE_LIMIT).then(|| {
            let mut t = Vec::with_capacity(n * n);
            for a in &perms {
                for b in &perms {
                    t.push(lookup[&a.compose_unchecked(b)]);
                }
            }
            t
        });
        FiniteGroup {
            elements: perms.into_iter().map(Element::Perm).collect(),
            backing: Backing::Perm {
                degree,
                lookup,
                table,
            },
            inverses,
            generators,
        }
    }

    fn from_table(elements: Vec<Element>, table: Vec<u32>, generators: Vec<usize>) -> Self {
        let n = elements.len();
        let mut inverses = vec![0u32; n];
        for a in 0..n {
            let row = &table[a * n..(a + 1) * n];
            inverses[a] = row.iter().position(|&c| c == 0).expect("group table has inverses") as u32;
        }
        FiniteGroup {
            elements,
            backing: Backing::Table { table },
            inverses,
            generators,
        }
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn identity(&self) -> usize {
        IDENTITY
    }

    pub fn generators(&self) -> &[usize] {
        &self.generators
    }

    pub fn element(&self, x: usize) -> &Element {
        &self.elements[x]
    }

    pub fn permutation(&self, x: usize) -> Option<&Permutation> {
        match &self.elements[x] {
            Element::Perm(p) => Some(p),
            Element::Coset { .. } => None,
        }
    }

    /// Degree of the underlying permutation representation, if any.
    pub fn degree(&self) -> Option<usize> {
        match &self.backing {
            Backing::Perm { degree, .. } => Some(*degree),
            Backing::Table { .. } => None,
        }
    }

    pub fn index_of(&self, p: &Permutation) -> Option<usize> {
        match &self.backing {
            Backing::Perm { lookup, .. } => lookup.get(p).map(|&i| i as usize),
            Backing::Table { .. } => None,
        }
    }

    /// Human-readable label: cycle notation, or `coset(<rep>)`.
    pub fn label(&self, x: usize) -> String {
        match &self.elements[x] {
            Element::Perm(p) => p.to_string(),
            Element::Coset { representative } => format!("coset({representative})"),
        }
    }

    pub fn check_index(&self, x: usize) -> Result<()> {
        if x < self.order() {
            Ok(())
        } else {
            Err(Error::InvalidElement(x))
        }
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        match &self.backing {
            Backing::Table { table } => table[a * self.order() + b] as usize,
            Backing::Perm {
                table: Some(table), ..
            } => table[a * self.order() + b] as usize,
            Backing::Perm { lookup, .. } => {
                let (Element::Perm(pa), Element::Perm(pb)) = (&self.elements[a], &self.elements[b])
                else {
                    unreachable!("permutation backing holds permutations")
                };
                lookup[&pa.compose_unchecked(pb)] as usize
            }
        }
    }

    #[inline]
    pub fn inv(&self, a: usize) -> usize {
        self.inverses[a] as usize
    }

    /// `g·x·g⁻¹`.
    #[inline]
    pub fn conjugate(&self, g: usize, x: usize) -> usize {
        self.mul(self.mul(g, x), self.inv(g))
    }

    #[inline]
    pub fn commute(&self, a: usize, b: usize) -> bool {
        self.mul(a, b) == self.mul(b, a)
    }

    pub fn element_order(&self, x: usize) -> usize {
        let mut k = 1;
        let mut y = x;
        while y != IDENTITY {
            y = self.mul(y, x);
            k += 1;
        }
        k
    }

    /// `x^a` for any integer `a`, reduced modulo the order of `x`.
    pub fn power(&self, x: usize, a: i64) -> usize {
        let ord = self.element_order(x) as i64;
        let mut e = a.rem_euclid(ord);
        let mut base = x;
        let mut acc = IDENTITY;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        acc
    }

    /// True when every pair of generators commutes.
    pub fn is_abelian(&self) -> bool {
        let gens = &self.generators;
        gens.iter()
            .enumerate()
            .all(|(i, &a)| gens[i + 1..].iter().all(|&b| self.commute(a, b)))
    }

    /// Exhaustive check of associativity, two-sided identity and inverses.
    pub fn check_axioms(&self) -> bool {
        let n = self.order();
        for a in 0..n {
            if self.mul(a, IDENTITY) != a || self.mul(IDENTITY, a) != a {
                return false;
            }
            if self.mul(a, self.inv(a)) != IDENTITY || self.mul(self.inv(a), a) != IDENTITY {
                return false;
            }
            for b in 0..n {
                let ab = self.mul(a, b);
                for c in 0..n {
                    if self.mul(ab, c) != self.mul(a, self.mul(b, c)) {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// The subgroup generated by the stored generators must be the whole group.
    pub fn generators_span(&self) -> bool {
        self.subgroup_generated(&self.generators).is_whole()
    }

    pub fn centralizer(&self, x: usize) -> Subgroup {
        Subgroup::from_members(
            self.order(),
            (0..self.order()).filter(|&g| self.commute(g, x)).collect(),
        )
    }

    /// Elements commuting with every generator, which is the intersection of all
    /// centralizers.
    pub fn center(&self) -> Subgroup {
        Subgroup::from_members(
            self.order(),
            (0..self.order())
                .filter(|&g| self.generators.iter().all(|&s| self.commute(g, s)))
                .collect(),
        )
    }

    /// Breadth-first closure of the identity under right multiplication by `gens`.
    fn closure_mask(&self, gens: &[usize]) -> Vec<bool> {
        let mut mask = vec![false; self.order()];
        mask[IDENTITY] = true;
        let mut queue = VecDeque::from([IDENTITY]);
        while let Some(x) = queue.pop_front() {
            for &g in gens {
                let y = self.mul(x, g);
                if !mask[y] {
                    mask[y] = true;
                    queue.push_back(y);
                }
            }
        }
        mask
    }

    /// Generated subgroup together with the irredundant prefix of `seed` that
    /// was actually needed to generate it.
    fn generate_with_gens(&self, seed: &[usize]) -> (Subgroup, Vec<usize>) {
        let mut gens = Vec::new();
        let mut mask = vec![false; self.order()];
        mask[IDENTITY] = true;
        for &s in seed {
            if !mask[s] {
                gens.push(s);
                mask = self.closure_mask(&gens);
            }
        }
        (Subgroup::from_mask(&mask), gens)
    }

    pub fn subgroup_generated(&self, seed: &[usize]) -> Subgroup {
        self.generate_with_gens(seed).0
    }

    /// A small generating set for `h`, picked greedily in index order.
    pub fn generating_set(&self, h: &Subgroup) -> Vec<usize> {
        self.generate_with_gens(h.members()).1
    }

    /// A conjugate `g·h·g⁻¹` escaping `h_sub`, searching `g` over the generators.
    pub fn normality_witness(&self, h_sub: &Subgroup) -> Option<(usize, usize, usize)> {
        self.normality_witness_over(h_sub, &self.generators)
    }

    fn normality_witness_over(&self, h_sub: &Subgroup, conjugators: &[usize]) -> Option<(usize, usize, usize)> {
        for &g in conjugators {
            for &h in h_sub.members() {
                let c = self.conjugate(g, h);
                if !h_sub.contains(c) {
                    return Some((g, h, c));
                }
            }
        }
        None
    }

    /// Normality tested against generators only; closure under conjugation by
    /// generators implies closure under conjugation by every word in them.
    pub fn is_normal(&self, h_sub: &Subgroup) -> bool {
        self.normality_witness(h_sub).is_none()
    }

    /// Normality tested against every element of the group.
    pub fn is_normal_exhaustive(&self, h_sub: &Subgroup) -> bool {
        let all: Vec<usize> = (0..self.order()).collect();
        self.normality_witness_over(h_sub, &all).is_none()
    }

    pub fn require_normal(&self, h_sub: &Subgroup) -> Result<()> {
        match self.normality_witness(h_sub) {
            None => Ok(()),
            Some((g, h, image)) => Err(Error::NotNormal { g, h, image }),
        }
    }

    /// Orbit of `x` under conjugation, explored through the generators.
    pub fn conjugation_orbit(&self, x: usize) -> Vec<usize> {
        let mut seen = HashSet::from([x]);
        let mut orbit = vec![x];
        let mut next = 0;
        while next < orbit.len() {
            let y = orbit[next];
            for &g in &self.generators {
                let c = self.conjugate(g, y);
                if seen.insert(c) {
                    orbit.push(c);
                }
            }
            next += 1;
        }
        orbit.sort_unstable();
        orbit
    }

    /// Every normal subgroup, sorted by order and then by member list.
    ///
    /// A subgroup is normal exactly when it is a union of conjugacy classes, so
    /// each normal subgroup is the join of the normal closures of the classes it
    /// contains. We start from those closures and the trivial subgroup and close
    /// the family under pairwise joins.
    pub fn normal_subgroups(&self) -> Vec<Subgroup> {
        let n = self.order();
        let mut found: Vec<(Subgroup, Vec<usize>)> = vec![(Subgroup::trivial(n), Vec::new())];
        let mut index: HashSet<Subgroup> = HashSet::from([Subgroup::trivial(n)]);
        let mut classified = vec![false; n];
        for x in 0..n {
            if classified[x] {
                continue;
            }
            let class = self.conjugation_orbit(x);
            for &c in &class {
                classified[c] = true;
            }
            let (sub, gens) = self.generate_with_gens(&class);
            if index.insert(sub.clone()) {
                found.push((sub, gens));
            }
        }
        let mut i = 0;
        while i < found.len() {
            for j in 0..i {
                let (a, ga) = &found[i];
                let (b, gb) = &found[j];
                if a.is_subset_of(b) || b.is_subset_of(a) {
                    continue;
                }
                let seed: Vec<usize> = ga.iter().chain(gb).copied().collect();
                let (join, gens) = self.generate_with_gens(&seed);
                if index.insert(join.clone()) {
                    found.push((join, gens));
                }
            }
            i += 1;
        }
        let mut subs: Vec<Subgroup> = found.into_iter().map(|(s, _)| s).collect();
        subs.sort_by(|a, b| a.order().cmp(&b.order()).then_with(|| a.members().cmp(b.members())));
        subs
    }

    /// `G/K` as a table-backed group. Cosets are numbered by their least-index
    /// representative, so the identity coset is index 0.
    pub fn quotient_group(&self, k: &Subgroup) -> Result<FiniteGroup> {
        self.require_normal(k)?;
        let n = self.order();
        let m = n / k.order();
        if m > QUOTIENT_TABLE_LIMIT {
            return Err(Error::OrderCapExceeded {
                cap: QUOTIENT_TABLE_LIMIT,
            });
        }
        let mut coset_of = vec![u32::MAX; n];
        let mut reps = Vec::with_capacity(m);
        for g in 0..n {
            if coset_of[g] != u32::MAX {
                continue;
            }
            let id = reps.len() as u32;
            reps.push(g);
            for &h in k.members() {
                coset_of[self.mul(g, h)] = id;
            }
        }
        let mut table = Vec::with_capacity(m * m);
        for &a in &reps {
            for &b in &reps {
                table.push(coset_of[self.mul(a, b)]);
            }
        }
        let mut generators = Vec::new();
        for &g in &self.generators {
            let c = coset_of[g] as usize;
            if c != IDENTITY && !generators.contains(&c) {
                generators.push(c);
            }
        }
        let elements = reps
            .into_iter()
            .map(|representative| Element::Coset { representative })
            .collect();
        Ok(FiniteGroup::from_table(elements, table, generators))
    }

    /// A subgroup re-indexed as a group in its own right. The `i`-th element of
    /// the result is `h.members()[i]`, so the identity stays at index 0.
    pub fn subgroup_as_group(&self, h: &Subgroup) -> FiniteGroup {
        let members = h.members();
        let (_, gens) = self.generate_with_gens(members);
        let mut pos = HashMap::with_capacity(members.len());
        for (i, &x) in members.iter().enumerate() {
            pos.insert(x, i);
        }
        let generators: Vec<usize> = gens.iter().map(|g| pos[g]).collect();
        match &self.backing {
            Backing::Perm { degree, .. } => {
                let perms: Vec<Permutation> = members
                    .iter()
                    .map(|&x| self.permutation(x).expect("permutation element").clone())
                    .collect();
                let lookup = perms
                    .iter()
                    .enumerate()
                    .map(|(i, p)| (p.clone(), i as u32))
                    .collect();
                FiniteGroup::from_permutations(*degree, perms, lookup, generators)
            }
            Backing::Table { .. } => {
                let m = members.len();
                let mut table = Vec::with_capacity(m * m);
                for &a in members {
                    for &b in members {
                        table.push(pos[&self.mul(a, b)] as u32);
                    }
                }
                let elements = members.iter().map(|&x| self.elements[x].clone()).collect();
                FiniteGroup::from_table(elements, table, generators)
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn perm(s: &str, d: usize) -> Permutation {
        Permutation::parse(s, d).unwrap()
    }

    fn group(d: usize, gens: &[&str]) -> FiniteGroup {
        let gens: Vec<_> = gens.iter().map(|s| perm(s, d)).collect();
        FiniteGroup::generate(d, &gens, DEFAULT_ORDER_CAP).unwrap()
    }

    fn s3() -> FiniteGroup {
        group(3, &["(1 2)", "(1 2 3)"])
    }

    fn s4() -> FiniteGroup {
        group(4, &["(1 2)", "(1 2 3 4)"])
    }

    fn d8() -> FiniteGroup {
        group(4, &["(1 2 3 4)", "(1 3)"])
    }

    fn idx(g: &FiniteGroup, s: &str) -> usize {
        g.index_of(&perm(s, g.degree().unwrap())).unwrap()
    }

    #[test]
    fn closure_orders() {
        assert_eq!(s3().order(), 6);
        assert_eq!(group(1, &[]).order(), 1);
        assert_eq!(d8().order(), 8);
        assert_eq!(s4().order(), 24);
    }

    #[test]
    fn identity_is_index_zero_and_axioms_hold() {
        for g in [s3(), d8(), s4()] {
            assert!(g.permutation(0).unwrap().is_identity());
            assert!(g.check_axioms());
            assert!(g.generators_span());
        }
    }

    #[test]
    fn order_cap_is_an_error() {
        let gens = [perm("(1 2)", 5), perm("(1 2 3 4 5)", 5)];
        let err = FiniteGroup::generate(5, &gens, 100).unwrap_err();
        assert!(matches!(err, Error::OrderCapExceeded { cap: 100 }));
        assert!(err.is_resource());
    }

    #[test]
    fn generator_degree_mismatch() {
        let gens = [perm("(1 2)", 3)];
        assert!(FiniteGroup::generate(4, &gens, 100).is_err());
    }

    #[test]
    fn mul_matches_composition() {
        let g = s4();
        for a in 0..g.order() {
            for b in 0..g.order() {
                let expect = g.permutation(a).unwrap().compose(g.permutation(b).unwrap()).unwrap();
                assert_eq!(g.permutation(g.mul(a, b)).unwrap(), &expect);
            }
        }
    }

    #[test]
    fn centralizer_examples() {
        let g = s3();
        assert_eq!(g.centralizer(idx(&g, "(1 2 3)")).order(), 3);
        assert!(g.centralizer(0).is_whole());
        let c6 = group(6, &["(1 2 3 4 5 6)"]);
        for x in 0..6 {
            assert!(c6.centralizer(x).is_whole());
        }
    }

    #[test]
    fn center_examples() {
        assert!(s3().center().is_trivial());
        let d = d8();
        let z = d.center();
        assert_eq!(z.order(), 2);
        assert!(z.contains(idx(&d, "(1 3)(2 4)")));
        let c6 = group(6, &["(1 2 3 4 5 6)"]);
        assert!(c6.center().is_whole());
    }

    #[test]
    fn subgroup_generated_examples() {
        let g = s3();
        assert!(g.subgroup_generated(&[]).is_trivial());
        assert_eq!(g.subgroup_generated(&[idx(&g, "(1 2)")]).order(), 2);
        let s = s4();
        let klein = s.subgroup_generated(&[idx(&s, "(1 2)(3 4)"), idx(&s, "(1 3)(2 4)")]);
        assert_eq!(klein.order(), 4);
        assert!(klein.contains(idx(&s, "(1 4)(2 3)")));
    }

    #[test]
    fn normality_examples() {
        let s = s4();
        let klein = s.subgroup_generated(&[idx(&s, "(1 2)(3 4)"), idx(&s, "(1 3)(2 4)")]);
        assert!(s.is_normal(&klein));
        assert!(s.is_normal_exhaustive(&klein));
        let g = s3();
        let t = g.subgroup_generated(&[idx(&g, "(1 2)")]);
        assert!(!g.is_normal(&t));
        assert!(!g.is_normal_exhaustive(&t));
        assert!(g.is_normal(&Subgroup::whole(6)));
        let err = g.require_normal(&t).unwrap_err();
        let Error::NotNormal { g: c, h, image } = err else { panic!() };
        assert_eq!(g.conjugate(c, h), image);
        assert!(t.contains(h) && !t.contains(image));
    }

    #[test]
    fn normal_subgroup_examples() {
        let orders = |g: &FiniteGroup| g.normal_subgroups().iter().map(|s| s.order()).collect::<Vec<_>>();
        assert_eq!(orders(&s4()), vec![1, 4, 12, 24]);
        let a5 = group(5, &["(1 2 3)", "(1 2 3 4 5)"]);
        assert_eq!(a5.order(), 60);
        assert_eq!(orders(&a5), vec![1, 60]);
        let c6 = group(6, &["(1 2 3 4 5 6)"]);
        assert_eq!(orders(&c6), vec![1, 2, 3, 6]);
    }

    #[test]
    fn quotient_examples() {
        let s = s4();
        let klein = s.subgroup_generated(&[idx(&s, "(1 2)(3 4)"), idx(&s, "(1 3)(2 4)")]);
        let q = s.quotient_group(&klein).unwrap();
        assert_eq!(q.order(), 6);
        assert!(!q.is_abelian());
        assert!(q.check_axioms());
        assert!(q.generators_span());

        let whole = s.quotient_group(&Subgroup::whole(24)).unwrap();
        assert_eq!(whole.order(), 1);

        let same = s.quotient_group(&Subgroup::trivial(24)).unwrap();
        assert_eq!(same.order(), 24);
        // trivial quotient: coset i is {i}, so the table coincides with G's
        for a in 0..24 {
            for b in 0..24 {
                assert_eq!(same.mul(a, b), s.mul(a, b));
            }
        }
    }

    #[test]
    fn quotient_requires_normal() {
        let g = s3();
        let t = g.subgroup_generated(&[idx(&g, "(1 2)")]);
        assert!(matches!(g.quotient_group(&t), Err(Error::NotNormal { .. })));
    }

    #[test]
    fn orders_and_powers() {
        let g = s3();
        let x = idx(&g, "(1 2 3)");
        assert_eq!(g.element_order(x), 3);
        assert_eq!(g.power(x, 2), g.mul(x, x));
        assert_eq!(g.power(x, 0), IDENTITY);
        let d = d8();
        let r = idx(&d, "(1 2 3 4)");
        assert_eq!(d.element_order(r), 4);
        assert_eq!(d.power(r, -1), d.mul(r, d.mul(r, r)));
        assert_eq!(d.power(r, -1), d.inv(r));
        assert_eq!(d.power(r, 9), r);
    }

    #[test]
    fn abelian_examples() {
        assert!(group(6, &["(1 2 3 4 5 6)"]).is_abelian());
        assert!(!s3().is_abelian());
        assert!(group(1, &[]).is_abelian());
    }

    #[test]
    fn subgroup_as_group_keeps_structure() {
        let s = s4();
        let a4 = s.subgroup_generated(&[idx(&s, "(1 2 3)"), idx(&s, "(2 3 4)")]);
        let h = s.subgroup_as_group(&a4);
        assert_eq!(h.order(), 12);
        assert!(h.check_axioms());
        assert!(h.generators_span());
        assert_eq!(h.center().order(), 1);

        let q = s.quotient_group(&Subgroup::trivial(24)).unwrap();
        let qa = q.subgroup_as_group(&a4);
        assert_eq!(qa.order(), 12);
        assert!(qa.check_axioms());
    }
}
