//! Fan constructions: k copies of a base graph glued along a shared vertex
//! subset, plus the structure search that finds densest fan minors without
//! materializing large fans.

use std::collections::{HashSet, VecDeque};

use crate::canon::canonical_form_colored;
use crate::graph::{SimpleGraph, MAX_VERTICES};
use crate::minor::MinorEngine;
use crate::rational::Rational;
use crate::{Error, Result};

/// Fan(base, shared, count): `count` copies of `base` sharing the vertices
/// in `shared`, which must be a proper subset.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct FanSpec {
    pub base: SimpleGraph,
    pub shared: u32,
    pub count: usize,
}

impl FanSpec {
    pub fn new(base: SimpleGraph, shared: u32, count: usize) -> Result<Self> {
        if shared & !base.full_mask() != 0 {
            return Err(Error::FanHypothesis(
                "shared set mentions vertices outside the base".into(),
            ));
        }
        if shared == base.full_mask() {
            return Err(Error::FanHypothesis(
                "shared set must be a proper subset of the base vertices".into(),
            ));
        }
        if count == 0 {
            return Err(Error::FanHypothesis("count must be at least 1".into()));
        }
        Ok(FanSpec {
            base,
            shared,
            count,
        })
    }

    pub fn shared_size(&self) -> usize {
        self.shared.count_ones() as usize
    }

    /// k(n−s)+s.
    pub fn vertex_count(&self) -> usize {
        let (n, s) = (self.base.n(), self.shared_size());
        self.count * (n - s) + s
    }

    /// k·m − (k−1)·e_S where e_S counts base edges inside the shared set.
    pub fn edge_count(&self) -> usize {
        let m = self.base.m();
        let es = edges_inside(&self.base, self.shared);
        self.count * m - (self.count - 1) * es
    }

    /// Density of the fan, computed from the counting formulas.
    pub fn density(&self) -> Rational {
        Rational::new(self.edge_count() as i64, self.vertex_count() as i64)
    }
}

fn edges_inside(g: &SimpleGraph, mask: u32) -> usize {
    g.edges()
        .iter()
        .filter(|&&(u, v)| mask & (1 << u) != 0 && mask & (1 << v) != 0)
        .count()
}

/// Materializes the fan. Shared vertices come first, then the copies.
pub fn build_fan(spec: &FanSpec) -> Result<SimpleGraph> {
    let total = spec.vertex_count();
    if total > MAX_VERTICES {
        return Err(Error::SizeOverflow { vertices: total });
    }
    let n = spec.base.n();
    let s = spec.shared_size();
    let shared_index: Vec<usize> = (0..n).filter(|&v| spec.shared & (1 << v) != 0).collect();
    let mut fan = SimpleGraph::edgeless(total)?;
    let map = |v: usize, copy: usize| -> usize {
        if let Some(i) = shared_index.iter().position(|&w| w == v) {
            i
        } else {
            let below = (0..v).filter(|&w| spec.shared & (1 << w) == 0).count();
            s + copy * (n - s) + below
        }
    };
    for copy in 0..spec.count {
        for (u, v) in spec.base.edges() {
            let (mu, mv) = (map(u, copy), map(v, copy));
            if !fan.has_edge(mu, mv) {
                fan.add_edge(mu, mv)?;
            }
        }
    }
    Ok(fan)
}

/// Completes the shared set into a clique and reports the fan-count penalty
/// c = |S \ K| for a maximum clique K inside S. Preconditions of the
/// clique-completion lemma are enforced.
pub fn clique_completion(g: &SimpleGraph, shared: u32) -> Result<(SimpleGraph, usize)> {
    check_fan_hypotheses(g, shared, false)?;
    let mut completed = *g;
    let verts: Vec<usize> = (0..g.n()).filter(|&v| shared & (1 << v) != 0).collect();
    for (i, &u) in verts.iter().enumerate() {
        for &v in &verts[i + 1..] {
            if !completed.has_edge(u, v) {
                completed.add_edge(u, v)?;
            }
        }
    }
    let k = max_clique_in(g, shared);
    let c = shared.count_ones() as usize - k.count_ones() as usize;
    Ok((completed, c))
}

/// Lexicographically first maximum clique inside `mask` (only its size
/// matters to callers).
fn max_clique_in(g: &SimpleGraph, mask: u32) -> u32 {
    fn rec(g: &SimpleGraph, current: u32, candidates: u32, best: &mut u32) {
        if current.count_ones() + candidates.count_ones() <= best.count_ones() {
            return;
        }
        if candidates == 0 {
            if current.count_ones() > best.count_ones() {
                *best = current;
            }
            return;
        }
        let v = candidates.trailing_zeros() as usize;
        rec(g, current | (1 << v), candidates & g.neighbors(v), best);
        rec(g, current, candidates & !(1 << v), best);
    }
    let mut best = 0u32;
    rec(g, 0, mask, &mut best);
    best
}

fn check_fan_hypotheses(g: &SimpleGraph, shared: u32, require_clique: bool) -> Result<()> {
    if shared & !g.full_mask() != 0 {
        return Err(Error::FanHypothesis(
            "shared set mentions vertices outside the base".into(),
        ));
    }
    let outside = g.full_mask() & !shared;
    if outside == 0 {
        return Err(Error::FanHypothesis(
            "shared set must be a proper subset".into(),
        ));
    }
    if !g.connected_within(outside) {
        return Err(Error::FanHypothesis(
            "base minus the shared set must be connected".into(),
        ));
    }
    let mut rest = shared;
    while rest != 0 {
        let v = rest.trailing_zeros() as usize;
        rest &= rest - 1;
        if g.neighbors(v) & outside == 0 {
            return Err(Error::FanHypothesis(format!(
                "shared vertex {v} has no neighbor outside the shared set"
            )));
        }
    }
    if require_clique && !g.is_clique(shared) {
        return Err(Error::FanHypothesis(
            "shared set must induce a clique".into(),
        ));
    }
    Ok(())
}

/// A minor of the base graph together with the image of the shared set.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TrackedMinor {
    pub minor: SimpleGraph,
    pub shared_image: u32,
}

impl TrackedMinor {
    /// Density of Fan(minor, shared_image, k), by the counting formulas;
    /// with an empty image this is just the minor's own density.
    pub fn fan_density(&self, k: usize) -> Rational {
        let n = self.minor.n();
        let s = self.shared_image.count_ones() as usize;
        let m = self.minor.m();
        let es = edges_inside(&self.minor, self.shared_image);
        let vertices = k * (n - s) + s;
        let edges = k * m - (k - 1) * es;
        Rational::new(edges as i64, vertices as i64)
    }
}

/// All minors of `g` with the image of `shared` carried through each
/// operation, deduplicated by colored canonical form. Includes (g, shared)
/// itself.
pub fn tracked_minors(g: &SimpleGraph, shared: u32) -> Vec<TrackedMinor> {
    let canon_pair = |graph: &SimpleGraph, mask: u32| -> TrackedMinor {
        let cf = canonical_form_colored(graph, mask);
        let image = cf.image_mask(mask);
        TrackedMinor {
            minor: *cf.graph(),
            shared_image: image,
        }
    };
    // drop the bit for `removed` and shift the higher bits down by one
    let shift_mask = |mask: u32, removed: usize| -> u32 {
        let low = mask & ((1u32 << removed) - 1);
        low | (((mask as u64 >> (removed + 1)) << removed) as u32)
    };
    let root = canon_pair(g, shared);
    let mut seen: HashSet<(SimpleGraph, u32)> = HashSet::from([(root.minor, root.shared_image)]);
    let mut queue = VecDeque::from([root]);
    let mut out = Vec::new();
    while let Some(t) = queue.pop_front() {
        out.push(t);
        let (cur, mask) = (t.minor, t.shared_image);
        let mut push = |tm: TrackedMinor, queue: &mut VecDeque<TrackedMinor>| {
            if seen.insert((tm.minor, tm.shared_image)) {
                queue.push_back(tm);
            }
        };
        for (u, v) in cur.edges() {
            let del = crate::minor::delete_edge(&cur, u, v).expect("edge exists");
            push(canon_pair(&del, mask), &mut queue);
            let con = crate::minor::contract_edge(&cur, u, v).expect("edge exists");
            // merged vertex keeps the shared label if either endpoint had it
            let (a, b) = (u.min(v), u.max(v));
            let mut cmask = mask;
            if mask & (1 << b) != 0 {
                cmask |= 1 << a;
            }
            cmask &= !(1 << b);
            push(canon_pair(&con, shift_mask(cmask, b)), &mut queue);
        }
        if cur.n() >= 2 {
            for v in 0..cur.n() {
                let del = crate::minor::delete_vertex(&cur, v).expect("n ≥ 2");
                push(
                    canon_pair(&del, shift_mask(mask & !(1 << v), v)),
                    &mut queue,
                );
            }
        }
    }
    out.sort_unstable_by_key(|t| (t.minor, t.shared_image));
    out
}

/// Structure search for the densest fan minor: scores Fan(G′,S′,k) over all
/// tracked minors (G′,S′) of the base, never materializing the fan. Under
/// the lemma hypotheses this equals the densest minor of the built fan.
pub fn densest_fan_minor(spec: &FanSpec) -> Result<(TrackedMinor, Rational)> {
    check_fan_hypotheses(&spec.base, spec.shared, true)?;
    if spec.base.n() > crate::DEFAULT_GUARDRAIL {
        return Err(Error::Guardrail {
            n: spec.base.n(),
            limit: crate::DEFAULT_GUARDRAIL,
        });
    }
    let mut best: Option<(TrackedMinor, Rational)> = None;
    for t in tracked_minors(&spec.base, spec.shared) {
        let d = t.fan_density(spec.count);
        let better = match &best {
            None => true,
            Some((bt, bd)) => {
                d > *bd
                    || (d == *bd
                        && (t.minor.n(), t.minor, t.shared_image)
                            < (bt.minor.n(), bt.minor, bt.shared_image))
            }
        };
        if better {
            best = Some((t, d));
        }
    }
    Ok(best.expect("the base itself is always a tracked minor"))
}

/// Adds an apex joined to every base vertex and fans k copies around it.
/// Returns the fan and the predicted density (m+n)k/(nk+1), which the
/// built fan attains exactly.
pub fn apex_fan(g: &SimpleGraph, k: usize) -> Result<(SimpleGraph, Rational)> {
    let (n, m) = (g.n(), g.m());
    let total = n * k + 1;
    if total > MAX_VERTICES {
        return Err(Error::SizeOverflow { vertices: total });
    }
    if k == 0 {
        return Err(Error::FanHypothesis("count must be at least 1".into()));
    }
    let mut apexed = SimpleGraph::edgeless(n + 1)?;
    for (u, v) in g.edges() {
        apexed.add_edge(u, v)?;
    }
    for v in 0..n {
        apexed.add_edge(v, n)?;
    }
    let spec = FanSpec::new(apexed, 1 << n, k)?;
    let fan = build_fan(&spec)?;
    let predicted = Rational::new(((m + n) * k) as i64, (n * k + 1) as i64);
    debug_assert_eq!(fan.density(), predicted);
    Ok((fan, predicted))
}

/// Limiting density of the family of graphs whose components are minors of
/// `g`: the densest-minor density of `g`.
pub fn component_family_limiting_density(
    engine: &mut MinorEngine,
    g: &SimpleGraph,
) -> Result<Rational> {
    engine.densest_density(g)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::canon::are_isomorphic;
    use crate::graph::*;
    use crate::minor::is_minor;

    fn r(p: i64, q: i64) -> Rational {
        Rational::new(p, q)
    }

    #[test]
    fn fan_of_triangle_at_vertex_is_friendship() {
        let k3 = complete_graph(3).unwrap();
        let spec = FanSpec::new(k3, 0b001, 3).unwrap();
        let fan = build_fan(&spec).unwrap();
        assert!(are_isomorphic(&fan, &friendship(3).unwrap()));
        assert_eq!(spec.vertex_count(), 7);
        assert_eq!(spec.edge_count(), 9);
    }

    #[test]
    fn fan_of_triangle_at_edge_is_diamond() {
        let k3 = complete_graph(3).unwrap();
        let spec = FanSpec::new(k3, 0b011, 2).unwrap();
        let fan = build_fan(&spec).unwrap();
        assert!(are_isomorphic(&fan, &diamond()));
        // but the single-vertex fan of two triangles is F_2, not the diamond
        let f2 = build_fan(&FanSpec::new(k3, 0b001, 2).unwrap()).unwrap();
        assert!(!are_isomorphic(&f2, &diamond()));
    }

    #[test]
    fn fan_over_empty_set_is_disjoint_copies() {
        let k3 = complete_graph(3).unwrap();
        let spec = FanSpec::new(k3, 0, 3).unwrap();
        let fan = build_fan(&spec).unwrap();
        let expect = k3.disjoint_union(&k3).unwrap().disjoint_union(&k3).unwrap();
        assert!(are_isomorphic(&fan, &expect));
    }

    #[test]
    fn fan_spec_validation() {
        let k3 = complete_graph(3).unwrap();
        assert!(FanSpec::new(k3, 0b111, 2).is_err()); // not proper
        assert!(FanSpec::new(k3, 0b1000, 2).is_err()); // out of range
        assert!(FanSpec::new(k3, 0b001, 0).is_err()); // zero count
        let spec = FanSpec::new(k3, 0b001, 16).unwrap();
        assert!(build_fan(&spec).is_err()); // 33 vertices
    }

    #[test]
    fn clique_completion_star() {
        // star center 0, leaves 1 and 2; shared = the leaves
        let star = SimpleGraph::from_edges(3, &[(0, 1), (0, 2)]).unwrap();
        let (completed, c) = clique_completion(&star, 0b110).unwrap();
        assert!(are_isomorphic(&completed, &complete_graph(3).unwrap()));
        assert_eq!(c, 1);

        let k3 = complete_graph(3).unwrap();
        let (completed, c) = clique_completion(&k3, 0b011).unwrap();
        assert_eq!(completed, k3);
        assert_eq!(c, 0);
    }

    #[test]
    fn clique_completion_lemma_instance() {
        // Fan(K3, edge, k−1) is a minor of Fan(star, leaves, k) for k = 3..6
        let star = SimpleGraph::from_edges(3, &[(0, 1), (0, 2)]).unwrap();
        let k3 = complete_graph(3).unwrap();
        for k in 3..=5 {
            let host = build_fan(&FanSpec::new(star, 0b110, k).unwrap()).unwrap();
            let minor = build_fan(&FanSpec::new(k3, 0b011, k - 1).unwrap()).unwrap();
            assert!(
                is_minor(&minor, &host).is_some(),
                "k = {k}: completion minor missing"
            );
        }
    }

    #[test]
    fn clique_completion_rejects_bad_inputs() {
        // disconnected remainder
        let p3 = path_graph(3).unwrap();
        assert!(clique_completion(&p3, 0b010).is_err());
        // shared vertex with no outside neighbor
        let g = SimpleGraph::from_edges(3, &[(0, 1), (1, 2)]).unwrap();
        assert!(clique_completion(&g, 0b101).is_ok());
        let h = SimpleGraph::from_edges(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
        assert!(clique_completion(&h, 0b0011).is_ok());
        let isolated_inside = SimpleGraph::from_edges(3, &[(0, 1)]).unwrap();
        assert!(clique_completion(&isolated_inside, 0b100).is_err());
    }

    #[test]
    fn densest_fan_minor_friendship() {
        let k3 = complete_graph(3).unwrap();
        for k in [1usize, 2, 3, 5, 10] {
            let spec = FanSpec::new(k3, 0b001, k).unwrap();
            let (t, d) = densest_fan_minor(&spec).unwrap();
            assert_eq!(d, r(3 * k as i64, 2 * k as i64 + 1));
            assert!(are_isomorphic(&t.minor, &k3));
        }
    }

    #[test]
    fn densest_fan_minor_book() {
        let k3 = complete_graph(3).unwrap();
        for k in 2..=4 {
            let spec = FanSpec::new(k3, 0b011, k).unwrap();
            let (_, d) = densest_fan_minor(&spec).unwrap();
            assert_eq!(d, r(2 * k as i64 + 1, k as i64 + 2));
        }
    }

    #[test]
    fn densest_fan_minor_requires_clique() {
        let c4 = cycle_graph(4).unwrap();
        let spec = FanSpec::new(c4, 0b0101, 2).unwrap();
        assert!(densest_fan_minor(&spec).is_err());
    }

    #[test]
    fn apex_fan_examples() {
        // K2 base: friendship graphs
        let k2 = path_graph(2).unwrap();
        for k in 1..=5 {
            let (fan, d) = apex_fan(&k2, k).unwrap();
            assert!(are_isomorphic(&fan, &friendship(k).unwrap()));
            assert_eq!(d, r(3 * k as i64, 2 * k as i64 + 1));
        }
        // K1 base: stars
        let k1 = SimpleGraph::edgeless(1).unwrap();
        let (fan, d) = apex_fan(&k1, 4).unwrap();
        assert!(are_isomorphic(
            &fan,
            &SimpleGraph::from_edges(5, &[(0, 4), (1, 4), (2, 4), (3, 4)]).unwrap()
        ));
        assert_eq!(d, r(4, 5));
        // three-vertex path, k = 2
        let p3 = path_graph(3).unwrap();
        let (fan, d) = apex_fan(&p3, 2).unwrap();
        assert_eq!(d, r(10, 7));
        assert_eq!(fan.density(), d);
    }

    #[test]
    fn component_family_density_examples() {
        let mut engine = MinorEngine::new();
        assert_eq!(
            component_family_limiting_density(&mut engine, &friendship(2).unwrap()).unwrap(),
            r(6, 5)
        );
        assert_eq!(
            component_family_limiting_density(&mut engine, &cycle_graph(4).unwrap()).unwrap(),
            r(1, 1)
        );
        assert_eq!(
            component_family_limiting_density(&mut engine, &SimpleGraph::edgeless(1).unwrap())
                .unwrap(),
            r(0, 1)
        );
    }

    #[test]
    fn fan_counts_formula() {
        for (base, shared) in [
            (complete_graph(4).unwrap(), 0b0011u32),
            (cycle_graph(4).unwrap(), 0b0001),
            (path_graph(3).unwrap(), 0b100),
        ] {
            for k in 1..=4 {
                let spec = FanSpec::new(base, shared, k).unwrap();
                let fan = build_fan(&spec).unwrap();
                assert_eq!(fan.n(), spec.vertex_count());
                assert_eq!(fan.m(), spec.edge_count());
            }
        }
    }

    #[test]
    fn fan_contains_smaller_fan_as_minor() {
        let k3 = complete_graph(3).unwrap();
        for k in 2..=4 {
            let big = build_fan(&FanSpec::new(k3, 0b001, k).unwrap()).unwrap();
            let small = build_fan(&FanSpec::new(k3, 0b001, k - 1).unwrap()).unwrap();
            assert!(is_minor(&small, &big).is_some());
        }
    }
}
