//! Property tests for the structural invariants: relabeling equivariance,
//! search/check consistency, lifting round trips, and arrangement
//! canonicalization.

use proptest::prelude::*;

use braid_deform::arrangement::build_deformation;
use braid_deform::charpoly::{integer_root_split, IntPolynomial};
use braid_deform::digraph::{
    digraph_count, digraph_from_index, enumerate_digraphs, Digraph, PatternKind, VertexOrdering,
};
use braid_deform::signed_graph::{sign_map, ziegler_multiplicity, SignedGraph};

fn arb_permutation(n: usize) -> impl Strategy<Value = Vec<usize>> {
    Just((0..n).collect::<Vec<_>>()).prop_shuffle()
}

fn arb_digraph(max_n: usize) -> impl Strategy<Value = Digraph> {
    (2..=max_n).prop_flat_map(|n| {
        let count = digraph_count(n).unwrap();
        (0..count).prop_map(move |idx| digraph_from_index(n, idx).unwrap())
    })
}

/// A digraph together with a vertex relabeling and an ordering sequence.
fn arb_digraph_perm_ord(max_n: usize) -> impl Strategy<Value = (Digraph, Vec<usize>, Vec<usize>)> {
    (2..=max_n).prop_flat_map(|n| {
        let count = digraph_count(n).unwrap();
        (0..count, arb_permutation(n), arb_permutation(n))
            .prop_map(move |(idx, perm, seq)| (digraph_from_index(n, idx).unwrap(), perm, seq))
    })
}

fn arb_signed_graph(max_n: usize) -> impl Strategy<Value = SignedGraph> {
    (2..=max_n).prop_flat_map(|n| {
        let pairs = n * (n - 1) / 2;
        proptest::collection::vec(0u8..3, pairs).prop_map(move |signs| {
            let mut plus = Vec::new();
            let mut minus = Vec::new();
            let mut idx = 0;
            for i in 0..n {
                for j in (i + 1)..n {
                    match signs[idx] {
                        1 => plus.push((i, j)),
                        2 => minus.push((i, j)),
                        _ => {}
                    }
                    idx += 1;
                }
            }
            SignedGraph::new(n, &plus, &minus).unwrap()
        })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn a1_a2_check_is_relabeling_invariant((g, perm, seq) in arb_digraph_perm_ord(5)) {
        let ord = VertexOrdering::from_sequence(&seq).unwrap();
        let relabeled = g.relabel(&perm).unwrap();
        let ord_relabeled = ord.relabel(&perm).unwrap();
        prop_assert_eq!(
            g.satisfies_a1_a2_under(&ord),
            relabeled.satisfies_a1_a2_under(&ord_relabeled)
        );
    }

    #[test]
    fn found_ordering_satisfies(g in arb_digraph(4)) {
        if let Some(ord) = g.find_a1_a2_ordering() {
            prop_assert!(g.satisfies_a1_a2_under(&ord));
        }
    }

    #[test]
    fn planted_pattern_is_detected(
        n in 3usize..=5,
        kind_idx in 0usize..3,
        extra in proptest::collection::vec((0usize..5, 0usize..5), 0..6),
    ) {
        let kind = [PatternKind::Path, PatternKind::Cycle, PatternKind::CyclePlusChord][kind_idx];
        // Plant the pattern on vertices {0, 1, 2}; extra edges must avoid
        // having both endpoints inside the planted triple.
        let mut edges: Vec<(usize, usize)> = kind.edges().to_vec();
        for (i, j) in extra {
            let (i, j) = (i % n, j % n);
            if i != j && (i > 2 || j > 2) {
                edges.push((i, j));
            }
        }
        let g = Digraph::new(n, edges).unwrap();
        prop_assert!(g.find_forbidden_triple().is_some());
    }

    #[test]
    fn sign_map_is_equivariant((g, perm, _seq) in arb_digraph_perm_ord(5)) {
        prop_assert_eq!(
            sign_map(&g.relabel(&perm).unwrap()),
            sign_map(&g).relabel(&perm).unwrap()
        );
    }

    #[test]
    fn liftings_round_trip(sg in arb_signed_graph(4)) {
        let liftings: Vec<_> = sg.enumerate_liftings().collect();
        prop_assert_eq!(liftings.len(), 1 << sg.neutral_pairs().len());
        let mut masks = std::collections::HashSet::new();
        for lift in &liftings {
            prop_assert_eq!(&sign_map(lift), &sg);
            prop_assert!(masks.insert(lift.arc_mask().unwrap()));
        }
    }

    #[test]
    fn found_elimination_ordering_is_valid(sg in arb_signed_graph(4)) {
        if let Some(ord) = sg.find_elimination_ordering() {
            prop_assert!(sg.is_signed_eliminable_under(&ord));
        }
    }

    #[test]
    fn multiplicity_total_matches_hyperplane_count(g in arb_digraph(5), k in 0u32..=2) {
        let a = build_deformation(&g, k).unwrap();
        prop_assert_eq!(a.len() as u64, ziegler_multiplicity(&g, k).total());
    }

    #[test]
    fn deformation_commutes_with_relabeling(
        (g, perm, _seq) in arb_digraph_perm_ord(4),
        k in 0u32..=1,
    ) {
        let direct = build_deformation(&g.relabel(&perm).unwrap(), k).unwrap();
        let relabeled = build_deformation(&g, k).unwrap().relabel_coordinates(&perm).unwrap();
        prop_assert_eq!(direct, relabeled);
    }

    #[test]
    fn root_split_reconstructs_products(
        roots in proptest::collection::vec(-6i64..=6, 0..5),
    ) {
        let p = roots.iter().fold(
            IntPolynomial::from_coeffs(vec![1]),
            |acc, &r| acc.mul_linear(r),
        );
        let mut expected = roots.clone();
        expected.sort_unstable();
        prop_assert_eq!(integer_root_split(&p).unwrap(), Some(expected));
    }

    #[test]
    fn localization_projects_onto_induced_cone(g in arb_digraph(5), k in 0u32..=1) {
        prop_assume!(g.n() >= 3);
        let ca = build_deformation(&g, k).unwrap().cone();
        let n = g.n();
        for i in 0..n {
            for j in (i + 1)..n {
                for l in (j + 1)..n {
                    let loc = ca.localize_triple(i, j, l).unwrap();
                    let (dropped, gap) = loc.drop_unused_coordinates();
                    let induced = g.induced_subgraph(&[i, j, l]).unwrap();
                    let expected = build_deformation(&induced, k).unwrap().cone();
                    prop_assert_eq!(&dropped, &expected);
                    prop_assert_eq!(gap, n - 3);
                }
            }
        }
    }
}

/// The 3-vertex specialization of the equivalence: a forbidden triple
/// exists iff no (A1)/(A2) numbering does, checked over all 64 digraphs.
#[test]
fn forbidden_iff_no_ordering_on_three_vertices() {
    for g in enumerate_digraphs(3).unwrap() {
        assert_eq!(
            g.find_forbidden_triple().is_some(),
            g.find_a1_a2_ordering().is_none(),
            "{g}"
        );
    }
}

/// Satisfying (A1)/(A2) forces an eliminable signed graph (one direction
/// of the equivalence), exhaustively on up to 4 vertices.
#[test]
fn a1_a2_implies_eliminable_up_to_four_vertices() {
    for n in 2..=4 {
        for g in enumerate_digraphs(n).unwrap() {
            if g.find_a1_a2_ordering().is_some() {
                assert!(sign_map(&g).find_elimination_ordering().is_some(), "{g}");
            }
        }
    }
}

/// Enumeration yields exactly 2^(n(n-1)) distinct digraphs, restartably.
#[test]
fn enumeration_is_exact_and_restartable() {
    for n in 1..=4 {
        let stream = enumerate_digraphs(n).unwrap();
        let again = stream.clone();
        let masks: Vec<u64> = stream.map(|g| g.arc_mask().unwrap()).collect();
        let masks_again: Vec<u64> = again.map(|g| g.arc_mask().unwrap()).collect();
        assert_eq!(masks, masks_again);
        let distinct: std::collections::HashSet<_> = masks.iter().collect();
        assert_eq!(distinct.len() as u64, digraph_count(n).unwrap());
    }
}

/// All value types are shareable across threads, per the concurrency model.
#[test]
fn value_types_are_send_and_sync() {
    fn assert_send_sync<T: Send + Sync>() {}
    assert_send_sync::<Digraph>();
    assert_send_sync::<VertexOrdering>();
    assert_send_sync::<SignedGraph>();
    assert_send_sync::<braid_deform::arrangement::Arrangement>();
    assert_send_sync::<IntPolynomial>();
    assert_send_sync::<braid_deform::verify::AnalysisReport>();
}
