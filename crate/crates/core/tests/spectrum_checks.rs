//! Cross-checks for the verification harness itself.

use mdl_core::connectivity::is_biconnected;
use mdl_core::enumerate::{enumerate_all, EnumerationFilter};
use mdl_core::minor::{is_density_minimal_branchset, MinorEngine};
use mdl_core::spectrum::{enumerate_density_minimal, next_density};
use mdl_core::{Rational, SimpleGraph};

fn r(p: i64, q: i64) -> Rational {
    Rational::new(p, q)
}

/// The seven-vertex rank-four graph built around a theta: two degree-two
/// vertices in triangles on the long path, with one contractible edge left.
#[test]
fn seven_vertex_rank_four_graph_has_dense_minor() {
    // hubs 0, 1; x on the length-2 path; a, b on the length-3 path;
    // v in a triangle with 0 and a; w in a triangle with a and b
    let g = SimpleGraph::from_edges(
        7,
        &[
            (0, 1),
            (0, 2),
            (2, 1),
            (0, 3),
            (3, 4),
            (4, 1),
            (5, 0),
            (5, 3),
            (6, 3),
            (6, 4),
        ],
    )
    .unwrap();
    assert_eq!(g.rank(), 4);
    assert!(is_biconnected(&g));
    let mut engine = MinorEngine::new();
    assert!(engine.densest_density(&g).unwrap() >= r(3, 2));
}

/// Rank-4 biconnected graphs on at most 6 vertices are already at density
/// 3/2 themselves (m = n + 3, n ≤ 6).
#[test]
fn small_rank_four_graphs_are_dense_themselves() {
    let filter = EnumerationFilter::biconnected(6).with_exact_rank(4);
    let mut seen = 0;
    for g in enumerate_all(&filter).unwrap() {
        assert!(g.density() >= r(3, 2));
        seen += 1;
    }
    assert!(seen > 0);
}

/// The spectrum is identical when the density-minimality verdict comes from
/// the independent branch-set backend instead of the closure engine.
#[test]
fn spectrum_identical_under_both_backends() {
    let max_n = 6;
    let mut engine = MinorEngine::new();
    let report = enumerate_density_minimal(&mut engine, max_n, Some(r(3, 2))).unwrap();
    let closure_set: Vec<SimpleGraph> = report.entries.iter().map(|e| e.witness).collect();

    let filter = EnumerationFilter::connected(max_n).with_max_density(r(3, 2), true);
    let branch_set: Vec<SimpleGraph> = enumerate_all(&filter)
        .unwrap()
        .into_iter()
        .filter(is_density_minimal_branchset)
        .collect();

    let mut a = closure_set.clone();
    let mut b = branch_set.clone();
    a.sort_unstable();
    b.sort_unstable();
    assert_eq!(a, b);
}

/// Every density-minimal witness dominates its whole closure, with equality
/// only at the root.
#[test]
fn catalog_witnesses_dominate_their_closures() {
    let mut engine = MinorEngine::new();
    let report = enumerate_density_minimal(&mut engine, 6, Some(r(3, 2))).unwrap();
    for entry in &report.entries {
        let closure = engine.minor_closure(&entry.witness).unwrap();
        for member in closure.members.keys() {
            if *member == closure.root {
                assert_eq!(member.density(), entry.density);
            } else {
                assert!(member.density() < entry.density);
            }
        }
    }
}

/// Bounded-search analogue of the density jump at 4/3, at the scale where
/// the answer needs 8 vertices. The 9-vertex confirmation run takes about
/// two minutes, so it is ignored by default.
#[test]
fn next_density_above_four_thirds_at_8() {
    let mut engine = MinorEngine::new();
    assert_eq!(
        next_density(&mut engine, r(4, 3), 8).unwrap(),
        Some(r(11, 8))
    );
}

#[test]
#[ignore = "uncapped 9-vertex enumeration, ~90 s"]
fn next_density_above_four_thirds_at_9() {
    let mut engine = MinorEngine::new();
    assert_eq!(
        next_density(&mut engine, r(4, 3), 9).unwrap(),
        Some(r(11, 8))
    );
}
