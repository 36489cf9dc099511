//! Graph laws on random permutation groups.

use ccg_core::graph::{
    build_class_graph, build_class_graph_with_representatives, build_enhanced_power_graph,
    find_triangle, oracle, GraphKind,
};
use ccg_core::{FiniteGroup, Permutation};
use proptest::prelude::*;

fn perm(degree: usize) -> impl Strategy<Value = Permutation> {
    Just((0..degree as u32).collect::<Vec<_>>())
        .prop_shuffle()
        .prop_map(|v| Permutation::from_images(v).unwrap())
}

fn group() -> impl Strategy<Value = FiniteGroup> {
    (2usize..=6)
        .prop_flat_map(|d| proptest::collection::vec(perm(d), 1..=2).prop_map(move |g| (d, g)))
        .prop_map(|(d, gens)| FiniteGroup::from_generators(d, gens).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn projection_and_subgraph(g in group()) {
        let d = build_class_graph(&g, GraphKind::CyclicCcc);
        let c = build_class_graph(&g, GraphKind::CommutingCcc);
        let epg = build_enhanced_power_graph(&g);
        prop_assert_eq!(&d, &oracle::class_graph_from_element_graph(&g, &epg));
        prop_assert_eq!(&d, &oracle::class_graph_full_scan(&g, GraphKind::CyclicCcc));
        for (i, j) in d.edges() {
            prop_assert!(c.adjacent(i, j));
        }
    }

    #[test]
    fn triangle_search_agrees_with_trace(g in group()) {
        let d = build_class_graph(&g, GraphKind::CyclicCcc);
        prop_assert_eq!(find_triangle(&d).is_none(), oracle::triangle_count(&d) == 0);
        if let Some((i, j, k)) = find_triangle(&d) {
            prop_assert!(i < j && j < k);
            prop_assert!(d.adjacent(i, j) && d.adjacent(j, k) && d.adjacent(i, k));
        }
    }

    #[test]
    fn any_representatives(g in group(), seed in any::<u64>()) {
        let cc = g.conjugacy_classes();
        let reps: Vec<usize> = (0..cc.len())
            .map(|c| cc.class(c)[(seed as usize).wrapping_mul(c + 7) % cc.class(c).len()])
            .collect();
        prop_assert_eq!(
            build_class_graph_with_representatives(&g, GraphKind::CyclicCcc, &reps),
            build_class_graph(&g, GraphKind::CyclicCcc)
        );
    }

    #[test]
    fn adjacency_is_symmetric_and_irreflexive(g in group()) {
        let d = build_class_graph(&g, GraphKind::CyclicCcc);
        for i in 0..d.vertex_count() {
            prop_assert!(!d.adjacent(i, i));
            for j in 0..d.vertex_count() {
                prop_assert_eq!(d.adjacent(i, j), d.adjacent(j, i));
            }
        }
    }
}
