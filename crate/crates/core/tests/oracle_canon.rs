//! Canonical labeling checked against brute-force permutation search.

use mdl_core::canon::{are_isomorphic, canonical_form, canonical_graph};
use mdl_core::graph::SimpleGraph;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Exhaustive isomorphism test over all n! vertex bijections.
fn brute_isomorphic(a: &SimpleGraph, b: &SimpleGraph) -> bool {
    if a.n() != b.n() || a.m() != b.m() {
        return false;
    }
    let n = a.n();
    let mut perm: Vec<u8> = (0..n as u8).collect();
    fn rec(a: &SimpleGraph, b: &SimpleGraph, perm: &mut Vec<u8>, k: usize) -> bool {
        let n = a.n();
        if k == n {
            return a.relabeled(perm) == *b;
        }
        for i in k..n {
            perm.swap(k, i);
            // partial consistency: edges among the first k+1 vertices
            let consistent =
                (0..k).all(|j| a.has_edge(j, k) == b.has_edge(perm[j] as usize, perm[k] as usize));
            if consistent && rec(a, b, perm, k + 1) {
                return true;
            }
            perm.swap(k, i);
        }
        false
    }
    rec(a, b, &mut perm, 0)
}

fn random_graph(rng: &mut ChaCha8Rng, n: usize, p: f64) -> SimpleGraph {
    let mut g = SimpleGraph::edgeless(n).unwrap();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                g.add_edge(u, v).unwrap();
            }
        }
    }
    g
}

fn random_relabel(rng: &mut ChaCha8Rng, g: &SimpleGraph) -> SimpleGraph {
    let n = g.n();
    let mut perm: Vec<u8> = (0..n as u8).collect();
    for i in (1..n).rev() {
        let j = rng.gen_range(0..=i);
        perm.swap(i, j);
    }
    g.relabeled(&perm)
}

#[test]
fn agrees_with_brute_force_on_random_pairs() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for round in 0..400 {
        let n = rng.gen_range(1..=7);
        let p = rng.gen_range(0.15..0.85);
        let a = random_graph(&mut rng, n, p);
        let relabeled = random_relabel(&mut rng, &a);
        let fresh = random_graph(&mut rng, n, p);
        let b = if round % 2 == 0 { relabeled } else { fresh };
        assert_eq!(
            are_isomorphic(&a, &b),
            brute_isomorphic(&a, &b),
            "disagreement on {a:?} vs {b:?}"
        );
    }
}

#[test]
fn canonical_form_invariant_under_relabeling() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for _ in 0..300 {
        let n = rng.gen_range(1..=9);
        let p = rng.gen_range(0.1..0.9);
        let g = random_graph(&mut rng, n, p);
        let h = random_relabel(&mut rng, &g);
        assert_eq!(canonical_graph(&g), canonical_graph(&h));
    }
}

#[test]
fn canonical_form_idempotent_and_witnessed() {
    let mut rng = ChaCha8Rng::seed_from_u64(13);
    for _ in 0..200 {
        let n = rng.gen_range(1..=9);
        let p = rng.gen_range(0.1..0.9);
        let g = random_graph(&mut rng, n, p);
        let cf = canonical_form(&g);
        assert_eq!(&g.relabeled(cf.permutation()), cf.graph());
        assert_eq!(canonical_graph(cf.graph()), *cf.graph());
    }
}
