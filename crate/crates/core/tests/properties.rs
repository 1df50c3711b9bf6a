use ccsgraph::theorems::{check_two_component_characterization, Status};
use ccsgraph::{CDGraph, ClassData, FiniteGroup, Permutation, Subgroup, DEFAULT_ORDER_CAP};
use proptest::prelude::*;

fn perm(degree: usize) -> impl Strategy<Value = Permutation> {
    Just((1..=degree).collect::<Vec<usize>>())
        .prop_shuffle()
        .prop_map(|v| Permutation::from_images(&v).unwrap())
}

fn group() -> impl Strategy<Value = FiniteGroup> {
    (2usize..=6)
        .prop_flat_map(|d| (Just(d), prop::collection::vec(perm(d), 1..=3)))
        .prop_map(|(d, gens)| FiniteGroup::generate(d, &gens, DEFAULT_ORDER_CAP).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn axioms_and_identity(g in group()) {
        if g.order() <= 120 {
            prop_assert!(g.check_axioms());
        }
        prop_assert!(g.permutation(0).unwrap().is_identity());
        prop_assert!(g.generators_span());
    }

    #[test]
    fn lagrange(g in group()) {
        for n in g.normal_subgroups() {
            prop_assert_eq!(g.order() % n.order(), 0);
            prop_assert!(g.is_normal_exhaustive(&n));
        }
        for x in 0..g.order() {
            prop_assert_eq!(g.order() % g.element_order(x), 0);
            prop_assert_eq!(g.order() % g.centralizer(x).order(), 0);
        }
    }

    #[test]
    fn classes_partition_n(g in group()) {
        for n in g.normal_subgroups() {
            let cd = ClassData::compute(&g, &n).unwrap();
            let mut all: Vec<usize> = cd.classes().iter().flat_map(|c| c.members.clone()).collect();
            all.sort_unstable();
            prop_assert_eq!(&all[..], n.members());
            for c in cd.classes() {
                prop_assert_eq!(c.size as usize, c.members.len());
                prop_assert_eq!(g.order() % c.members.len(), 0);
                prop_assert_eq!(c.representative, c.members[0]);
            }
            let ones = cd.classes().iter().filter(|c| c.size == 1).count();
            prop_assert_eq!(ones, cd.normal_cap_center().order());
            prop_assert!(cd.vertex_sizes().iter().all(|&s| s > 1));
        }
    }

    #[test]
    fn quotient_orders(g in group()) {
        for n in g.normal_subgroups() {
            let q = g.quotient_group(&n).unwrap();
            prop_assert_eq!(q.order() * n.order(), g.order());
            if q.order() <= 120 {
                prop_assert!(q.check_axioms());
            }
        }
    }

    #[test]
    fn two_component_biconditional(g in group()) {
        let o = check_two_component_characterization(&g).unwrap();
        prop_assert_eq!(o.status, Status::Holds);
    }

    #[test]
    fn components_agree(sizes in prop::collection::vec(2u64..200, 0..10)) {
        let graph = CDGraph::build(&sizes).unwrap();
        prop_assert_eq!(graph.component_count(), graph.component_count_bfs());
    }

    #[test]
    fn whole_group_vertices_divide_order(g in group()) {
        let cd = ClassData::compute(&g, &Subgroup::whole(g.order())).unwrap();
        for &v in cd.vertex_sizes() {
            prop_assert_eq!(g.order() as u64 % v, 0);
        }
    }
}
