//! Minor operations, minor containment with witnesses, closures, and
//! density-/rank-minimality. Two independent densest-minor algorithms live
//! here: a memoized closure fixed point and a branch-set partition search;
//! the verification harness requires them to agree.

use std::collections::{BTreeMap, HashMap, HashSet, VecDeque};

use crate::canon::canonical_graph;
use crate::graph::SimpleGraph;
use crate::rational::Rational;
use crate::{Error, Result, DEFAULT_GUARDRAIL};

fn remove_vertex_unchecked(g: &SimpleGraph, b: usize) -> SimpleGraph {
    let map = |w: usize| if w < b { w } else { w - 1 };
    let mut out = SimpleGraph::edgeless(g.n() - 1).expect("n ≥ 2");
    for (u, v) in g.edges() {
        if u != b && v != b {
            out.add_edge(map(u), map(v)).expect("mapped edge");
        }
    }
    out
}

/// Contracts edge uv: endpoints merge, parallel adjacencies collapse, the
/// loop disappears. One vertex fewer.
pub fn contract_edge(g: &SimpleGraph, u: usize, v: usize) -> Result<SimpleGraph> {
    if !g.has_edge(u, v) {
        return Err(Error::MissingEdge(u, v));
    }
    let (a, b) = (u.min(v), u.max(v));
    let mut merged = *g;
    let mut nb = g.neighbors(b) & !(1 << a);
    while nb != 0 {
        let w = nb.trailing_zeros() as usize;
        nb &= nb - 1;
        merged.add_edge(a, w)?;
    }
    Ok(remove_vertex_unchecked(&merged, b))
}

pub fn delete_edge(g: &SimpleGraph, u: usize, v: usize) -> Result<SimpleGraph> {
    let mut out = *g;
    out.remove_edge(u, v)?;
    Ok(out)
}

pub fn delete_vertex(g: &SimpleGraph, v: usize) -> Result<SimpleGraph> {
    if v >= g.n() {
        return Err(Error::VertexOutOfRange {
            vertex: v,
            n: g.n(),
        });
    }
    if g.n() == 1 {
        return Err(Error::LastVertex);
    }
    Ok(remove_vertex_unchecked(g, v))
}

/// Canonical forms of everything reachable in one deletion or contraction,
/// deduplicated and sorted.
pub fn one_step_minors(g: &SimpleGraph) -> Vec<SimpleGraph> {
    let mut seen = HashSet::new();
    for (u, v) in g.edges() {
        seen.insert(canonical_graph(&delete_edge(g, u, v).expect("edge exists")));
        seen.insert(canonical_graph(
            &contract_edge(g, u, v).expect("edge exists"),
        ));
    }
    if g.n() >= 2 {
        for v in 0..g.n() {
            seen.insert(canonical_graph(&delete_vertex(g, v).expect("n ≥ 2")));
        }
    }
    let mut out: Vec<SimpleGraph> = seen.into_iter().collect();
    out.sort_unstable();
    out
}

/// Disjoint connected branch sets in a host graph, one per minor vertex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MinorWitness {
    pub branch_sets: Vec<u32>,
}

/// Re-checks a witness from scratch: disjointness, connectivity, edge
/// coverage.
pub fn validate_witness(host: &SimpleGraph, minor: &SimpleGraph, w: &MinorWitness) -> Result<()> {
    let fail = |msg: String| Err(Error::Parse(msg));
    if w.branch_sets.len() != minor.n() {
        return fail(format!(
            "witness has {} branch sets for a {}-vertex minor",
            w.branch_sets.len(),
            minor.n()
        ));
    }
    let mut union = 0u32;
    for (i, &b) in w.branch_sets.iter().enumerate() {
        if b == 0 {
            return fail(format!("branch set {i} is empty"));
        }
        if b & !host.full_mask() != 0 {
            return fail(format!("branch set {i} leaves the host"));
        }
        if b & union != 0 {
            return fail(format!("branch set {i} overlaps an earlier one"));
        }
        union |= b;
        if !host.connected_within(b) {
            return fail(format!("branch set {i} is not connected"));
        }
    }
    for (i, j) in minor.edges() {
        let touch = host.neighbors_of_mask(w.branch_sets[i]) & w.branch_sets[j];
        if touch == 0 {
            return fail(format!("minor edge {i}-{j} has no host edge"));
        }
    }
    Ok(())
}

/// All connected subsets of `allowed` containing `root`, up to `max_size`
/// vertices.
fn connected_subsets_containing(
    g: &SimpleGraph,
    root: usize,
    allowed: u32,
    max_size: usize,
) -> Vec<u32> {
    let mut out = Vec::new();
    if max_size == 0 || allowed & (1 << root) == 0 {
        return out;
    }
    fn expand(
        g: &SimpleGraph,
        allowed: u32,
        max_size: usize,
        set: u32,
        ext: u32,
        out: &mut Vec<u32>,
    ) {
        out.push(set);
        if (set.count_ones() as usize) >= max_size {
            return;
        }
        let mut rest = ext;
        let mut avoid = 0u32;
        while rest != 0 {
            let v = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            let grown = set | (1 << v);
            let ext2 = (rest | (g.neighbors(v) & allowed & !grown)) & !avoid;
            expand(g, allowed, max_size, grown, ext2, out);
            avoid |= 1 << v;
        }
    }
    expand(
        g,
        allowed,
        max_size,
        1 << root,
        g.neighbors(root) & allowed,
        &mut out,
    );
    out
}

/// Branch-set backtracking search for H as a minor of G. Returns a
/// validating witness when one exists.
pub fn is_minor(minor: &SimpleGraph, host: &SimpleGraph) -> Option<MinorWitness> {
    if minor.n() > host.n() || minor.m() > host.m() || minor.rank() > host.rank() {
        return None;
    }
    // most-constrained vertices first
    let mut order: Vec<usize> = (0..minor.n()).collect();
    order.sort_by_key(|&v| std::cmp::Reverse(minor.degree(v)));

    fn search(
        minor: &SimpleGraph,
        host: &SimpleGraph,
        order: &[usize],
        placed: &mut Vec<u32>,
        used: u32,
    ) -> bool {
        let i = placed.len();
        if i == order.len() {
            return true;
        }
        let hv = order[i];
        let free = host.full_mask() & !used;
        let remaining = order.len() - i;
        if (free.count_ones() as usize) < remaining {
            return false;
        }
        let max_size = free.count_ones() as usize - (remaining - 1);
        let req: Vec<u32> = (0..i)
            .filter(|&j| minor.has_edge(order[j], hv))
            .map(|j| placed[j])
            .collect();
        let mut roots = free;
        while roots != 0 {
            let r = roots.trailing_zeros() as usize;
            roots &= roots - 1;
            for b in connected_subsets_containing(host, r, free, max_size) {
                let nb = host.neighbors_of_mask(b);
                if req.iter().any(|&earlier| nb & earlier == 0) {
                    continue;
                }
                placed.push(b);
                if search(minor, host, order, placed, used | b) {
                    return true;
                }
                placed.pop();
            }
        }
        false
    }

    let mut placed = Vec::new();
    if search(minor, host, &order, &mut placed, 0) {
        let mut branch_sets = vec![0u32; minor.n()];
        for (i, &b) in placed.iter().enumerate() {
            branch_sets[order[i]] = b;
        }
        let w = MinorWitness { branch_sets };
        debug_assert!(validate_witness(host, minor, &w).is_ok());
        Some(w)
    } else {
        None
    }
}

/// True when no single minor operation preserves the rank; single steps
/// suffice because every operation is rank non-increasing, so any deeper
/// equal-rank minor forces an equal-rank first step.
pub fn is_rank_minimal(g: &SimpleGraph) -> bool {
    let r = g.rank();
    for (u, v) in g.edges() {
        if delete_edge(g, u, v).expect("edge").rank() == r {
            return false;
        }
        if contract_edge(g, u, v).expect("edge").rank() == r {
            return false;
        }
    }
    if g.n() >= 2 {
        for v in 0..g.n() {
            if delete_vertex(g, v).expect("n ≥ 2").rank() == r {
                return false;
            }
        }
    }
    true
}

/// Everything reachable from a root by minor operations, with the densest
/// minor density memoized per member.
#[derive(Debug, Clone)]
pub struct MinorClosure {
    pub root: SimpleGraph,
    pub members: BTreeMap<SimpleGraph, Rational>,
}

/// Verdict plus the evidence: the densest proper minor with a validating
/// witness, when one exists.
#[derive(Debug, Clone)]
pub struct MinimalityCertificate {
    pub subject: SimpleGraph,
    pub verdict: bool,
    pub subject_density: Rational,
    pub best_proper_minor: Option<(SimpleGraph, Rational, MinorWitness)>,
}

/// Densest-minor engine with a global memo of densest-minor densities keyed
/// by canonical form, shared across every query in a session.
pub struct MinorEngine {
    guardrail: usize,
    memo: HashMap<SimpleGraph, Rational>,
}

impl Default for MinorEngine {
    fn default() -> Self {
        Self::new()
    }
}

impl MinorEngine {
    pub fn new() -> Self {
        Self::with_guardrail(DEFAULT_GUARDRAIL)
    }

    pub fn with_guardrail(guardrail: usize) -> Self {
        MinorEngine {
            guardrail,
            memo: HashMap::new(),
        }
    }

    pub fn guardrail(&self) -> usize {
        self.guardrail
    }

    pub fn memo_len(&self) -> usize {
        self.memo.len()
    }

    /// Memo contents, for cache persistence.
    pub fn memo_entries(&self) -> impl Iterator<Item = (&SimpleGraph, &Rational)> {
        self.memo.iter()
    }

    /// Seeds the memo (e.g. from a cache file). Keys are canonicalized.
    pub fn seed_memo(&mut self, g: &SimpleGraph, density: Rational) {
        self.memo.insert(canonical_graph(g), density);
    }

    fn check(&self, g: &SimpleGraph) -> Result<()> {
        if g.n() > self.guardrail {
            Err(Error::Guardrail {
                n: g.n(),
                limit: self.guardrail,
            })
        } else {
            Ok(())
        }
    }

    /// Density of the densest minor of `g`, including `g` itself.
    pub fn densest_density(&mut self, g: &SimpleGraph) -> Result<Rational> {
        self.check(g)?;
        Ok(self.densest_canon(canonical_graph(g)))
    }

    fn densest_canon(&mut self, cg: SimpleGraph) -> Rational {
        if let Some(&d) = self.memo.get(&cg) {
            return d;
        }
        let mut best = cg.density();
        for child in one_step_minors(&cg) {
            best = best.max(self.densest_canon(child));
        }
        self.memo.insert(cg, best);
        best
    }

    /// Density of the densest proper minor; `None` when there is none (K1).
    pub fn best_proper_density(&mut self, g: &SimpleGraph) -> Result<Option<Rational>> {
        self.check(g)?;
        let children = one_step_minors(g);
        Ok(children.into_iter().map(|c| self.densest_canon(c)).max())
    }

    /// Verdict only; use [`certify_density_minimal`] for the evidence.
    pub fn is_density_minimal(&mut self, g: &SimpleGraph) -> Result<bool> {
        self.check(g)?;
        let d = g.density();
        let children = one_step_minors(g);
        // cheap rejection first: a one-step minor already as dense
        if children.iter().any(|c| c.density() >= d) {
            return Ok(false);
        }
        for child in children {
            if self.densest_canon(child) >= d {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Explicit closure with per-member densest densities.
    pub fn minor_closure(&mut self, g: &SimpleGraph) -> Result<MinorClosure> {
        self.check(g)?;
        let root = canonical_graph(g);
        let mut members: BTreeMap<SimpleGraph, Rational> = BTreeMap::new();
        let mut queue = VecDeque::from([root]);
        let mut seen = HashSet::from([root]);
        while let Some(cur) = queue.pop_front() {
            for child in one_step_minors(&cur) {
                if seen.insert(child) {
                    queue.push_back(child);
                }
            }
            let d = self.densest_canon(cur);
            members.insert(cur, d);
        }
        Ok(MinorClosure { root, members })
    }

    /// A minor of `g` (possibly `g` itself) of maximum density; ties broken
    /// toward fewer vertices, then canonical order.
    pub fn densest_minor(
        &mut self,
        g: &SimpleGraph,
    ) -> Result<(SimpleGraph, Rational, MinorWitness)> {
        let closure = self.minor_closure(g)?;
        let best = *closure.members.values().max().expect("closure nonempty");
        let winner = closure
            .members
            .iter()
            .filter(|(h, _)| h.density() == best)
            .map(|(h, _)| *h)
            .min_by_key(|h| (h.n(), *h))
            .expect("some member attains the maximum");
        let witness = is_minor(&winner, g).expect("closure member is a minor");
        Ok((winner, best, witness))
    }

    /// Full density-minimality certificate with the densest proper minor as
    /// evidence.
    pub fn certify_density_minimal(&mut self, g: &SimpleGraph) -> Result<MinimalityCertificate> {
        let closure = self.minor_closure(g)?;
        let subject_density = g.density();
        let root = closure.root;
        let best_proper_minor = closure
            .members
            .keys()
            .filter(|&&h| h != root)
            .max_by(|a, b| {
                a.density()
                    .cmp(&b.density())
                    .then(b.n().cmp(&a.n()))
                    .then(b.cmp(a))
            })
            .map(|&h| {
                let w = is_minor(&h, g).expect("closure member is a minor");
                (h, h.density(), w)
            });
        let verdict = match &best_proper_minor {
            None => true,
            Some((_, d, _)) => *d < subject_density,
        };
        Ok(MinimalityCertificate {
            subject: *g,
            verdict,
            subject_density,
            best_proper_minor,
        })
    }
}

/// Independent densest-minor backend: searches over partitions of vertex
/// subsets into connected branch sets, scoring the quotient with all edges
/// kept. Edge deletions beyond simplification never help density, so the
/// maximum agrees with the closure fixed point.
pub fn densest_minor_branchset(g: &SimpleGraph) -> (SimpleGraph, Rational) {
    struct Best {
        density: Rational,
        blocks: usize,
        graph: Option<SimpleGraph>,
    }

    fn quotient(g: &SimpleGraph, blocks: &[u32]) -> SimpleGraph {
        let k = blocks.len();
        let mut q = SimpleGraph::edgeless(k).expect("k ≥ 1");
        for (i, &bi) in blocks.iter().enumerate() {
            let nb = g.neighbors_of_mask(bi);
            for (j, &bj) in blocks.iter().enumerate().skip(i + 1) {
                if nb & bj != 0 {
                    q.add_edge(i, j).expect("in range");
                }
            }
        }
        q
    }

    fn leaf(g: &SimpleGraph, blocks: &[u32], best: &mut Best) {
        let k = blocks.len();
        let mut edges = 0usize;
        for (i, &bi) in blocks.iter().enumerate() {
            let nb = g.neighbors_of_mask(bi);
            for &bj in &blocks[i + 1..] {
                if nb & bj != 0 {
                    edges += 1;
                }
            }
        }
        let d = Rational::new(edges as i64, k as i64);
        if d < best.density || (d == best.density && k > best.blocks) {
            return;
        }
        let q = canonical_graph(&quotient(g, blocks));
        if d > best.density || k < best.blocks || best.graph.is_none_or(|bg| q < bg) {
            best.density = d;
            best.blocks = k;
            best.graph = Some(q);
        }
    }

    fn rec(g: &SimpleGraph, remaining: u32, blocks: &mut Vec<u32>, best: &mut Best) {
        if remaining == 0 {
            if !blocks.is_empty() {
                leaf(g, blocks, best);
            }
            return;
        }
        let v = remaining.trailing_zeros() as usize;
        rec(g, remaining & !(1 << v), blocks, best);
        for b in connected_subsets_containing(g, v, remaining, g.n()) {
            blocks.push(b);
            rec(g, remaining & !b, blocks, best);
            blocks.pop();
        }
    }

    let mut best = Best {
        density: Rational::new(0, 1),
        blocks: usize::MAX,
        graph: None,
    };
    let mut blocks = Vec::new();
    rec(g, g.full_mask(), &mut blocks, &mut best);
    (best.graph.expect("at least one quotient"), best.density)
}

/// Branch-set counterpart of the density-minimality verdict. Only the
/// identity quotient is excluded from the maximization: every other proper
/// minor is dominated by a proper full quotient, and pure edge deletions
/// are strictly sparser than the graph itself, so the verdict agrees with
/// the closure-based one.
pub fn is_density_minimal_branchset(g: &SimpleGraph) -> bool {
    fn rec(
        g: &SimpleGraph,
        remaining: u32,
        edges_prefix: usize,
        blocks: &mut Vec<u32>,
        best: &mut Option<Rational>,
    ) {
        if remaining == 0 {
            let nblocks = blocks.len();
            if nblocks > 0 && nblocks != g.n() {
                let d = Rational::new(edges_prefix as i64, nblocks as i64);
                if best.is_none_or(|b| d > b) {
                    *best = Some(d);
                }
            }
            return;
        }
        let v = remaining.trailing_zeros() as usize;
        rec(g, remaining & !(1 << v), edges_prefix, blocks, best);
        for b in connected_subsets_containing(g, v, remaining, g.n()) {
            let nb = g.neighbors_of_mask(b);
            let extra = blocks.iter().filter(|&&o| nb & o != 0).count();
            blocks.push(b);
            rec(g, remaining & !b, edges_prefix + extra, blocks, best);
            blocks.pop();
        }
    }

    let mut blocks = Vec::new();
    let mut best: Option<Rational> = None;
    rec(g, g.full_mask(), 0, &mut blocks, &mut best);
    match best {
        None => true, // K1: no proper quotient at all
        Some(b) => b < g.density(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::canon::are_isomorphic;
    use crate::graph::*;

    fn r(p: i64, q: i64) -> Rational {
        Rational::new(p, q)
    }

    #[test]
    fn contraction_examples() {
        let k3 = complete_graph(3).unwrap();
        let g = contract_edge(&k3, 0, 1).unwrap();
        assert!(are_isomorphic(&g, &path_graph(2).unwrap()));
        let c4 = cycle_graph(4).unwrap();
        assert!(are_isomorphic(
            &contract_edge(&c4, 0, 1).unwrap(),
            &complete_graph(3).unwrap()
        ));
        // contracting the added vertex's edge in the diamond collapses a
        // parallel pair: m drops by 2
        let d = diamond();
        let g = contract_edge(&d, 3, 0).unwrap();
        assert!(are_isomorphic(&g, &complete_graph(3).unwrap()));
        assert_eq!(d.m() - g.m(), 2);
        assert!(contract_edge(&d, 2, 3).is_err());
    }

    #[test]
    fn deletion_examples() {
        let k4 = complete_graph(4).unwrap();
        assert!(are_isomorphic(&delete_edge(&k4, 0, 1).unwrap(), &diamond()));
        let k3 = complete_graph(3).unwrap();
        assert!(are_isomorphic(
            &delete_vertex(&k3, 1).unwrap(),
            &path_graph(2).unwrap()
        ));
        assert!(are_isomorphic(
            &delete_edge(&k3, 0, 2).unwrap(),
            &path_graph(3).unwrap()
        ));
        assert!(delete_vertex(&SimpleGraph::edgeless(1).unwrap(), 0).is_err());
        assert!(delete_edge(&k3, 0, 5).is_err());
    }

    #[test]
    fn one_step_of_small_graphs() {
        let k3 = complete_graph(3).unwrap();
        let got = one_step_minors(&k3);
        let expect = {
            let mut v = vec![
                canonical_graph(&path_graph(2).unwrap()),
                canonical_graph(&path_graph(3).unwrap()),
            ];
            v.sort_unstable();
            v
        };
        assert_eq!(got, expect);

        assert!(one_step_minors(&SimpleGraph::edgeless(1).unwrap()).is_empty());

        let k2 = path_graph(2).unwrap();
        let got = one_step_minors(&k2);
        assert_eq!(got.len(), 2);
        assert!(got.contains(&canonical_graph(&SimpleGraph::edgeless(1).unwrap())));
        assert!(got.contains(&canonical_graph(&SimpleGraph::edgeless(2).unwrap())));
    }

    #[test]
    fn closure_of_k3() {
        let mut engine = MinorEngine::new();
        let closure = engine.minor_closure(&complete_graph(3).unwrap()).unwrap();
        let expect: HashSet<SimpleGraph> = [
            complete_graph(3).unwrap(),
            path_graph(3).unwrap(),
            path_graph(2).unwrap(),
            path_graph(2)
                .unwrap()
                .disjoint_union(&SimpleGraph::edgeless(1).unwrap())
                .unwrap(),
            SimpleGraph::edgeless(1).unwrap(),
            SimpleGraph::edgeless(2).unwrap(),
            SimpleGraph::edgeless(3).unwrap(),
        ]
        .iter()
        .map(canonical_graph)
        .collect();
        let got: HashSet<SimpleGraph> = closure.members.keys().copied().collect();
        assert_eq!(got, expect);
        assert!(
            engine
                .minor_closure(&SimpleGraph::edgeless(1).unwrap())
                .unwrap()
                .members
                .len()
                == 1
        );
    }

    #[test]
    fn closure_guardrail() {
        let mut engine = MinorEngine::with_guardrail(4);
        assert!(engine.minor_closure(&complete_graph(5).unwrap()).is_err());
        assert!(engine.densest_density(&complete_graph(5).unwrap()).is_err());
    }

    #[test]
    fn is_minor_examples() {
        let k3 = complete_graph(3).unwrap();
        assert!(is_minor(&k3, &cycle_graph(6).unwrap()).is_some());
        assert!(is_minor(&diamond(), &complete_graph(4).unwrap()).is_some());
        assert!(is_minor(&complete_graph(4).unwrap(), &cycle_graph(4).unwrap()).is_none());
        let w = is_minor(&k3, &friendship(2).unwrap()).unwrap();
        validate_witness(&friendship(2).unwrap(), &k3, &w).unwrap();
    }

    #[test]
    fn witness_validation_rejects_bad_witnesses() {
        let host = complete_graph(4).unwrap();
        let k3 = complete_graph(3).unwrap();
        // overlapping sets
        let w = MinorWitness {
            branch_sets: vec![0b0011, 0b0010, 0b1000],
        };
        assert!(validate_witness(&host, &k3, &w).is_err());
        // disconnected branch set
        let host2 = path_graph(4).unwrap();
        let w = MinorWitness {
            branch_sets: vec![0b1001, 0b0010, 0b0100],
        };
        assert!(validate_witness(&host2, &k3, &w).is_err());
        // missing edge coverage
        let host3 = SimpleGraph::from_edges(3, &[(0, 1)]).unwrap();
        let w = MinorWitness {
            branch_sets: vec![0b001, 0b010, 0b100],
        };
        assert!(validate_witness(&host3, &k3, &w).is_err());
    }

    #[test]
    fn densest_minor_examples() {
        let mut engine = MinorEngine::new();
        let f3 = friendship(3).unwrap();
        let (g, d, w) = engine.densest_minor(&f3).unwrap();
        assert_eq!(d, r(9, 7));
        assert!(are_isomorphic(&g, &f3));
        validate_witness(&f3, &g, &w).unwrap();

        for tree in [path_graph(5).unwrap(), path_graph(7).unwrap()] {
            let (g, d, _) = engine.densest_minor(&tree).unwrap();
            assert!(are_isomorphic(&g, &tree));
            assert_eq!(d, tree.density());
        }

        let ct3 = cycle_of_triangles(3).unwrap();
        let (_, d, _) = engine.densest_minor(&ct3).unwrap();
        assert_eq!(d, r(3, 2));
    }

    #[test]
    fn density_minimality_examples() {
        let mut engine = MinorEngine::new();
        assert!(engine.is_density_minimal(&friendship(4).unwrap()).unwrap());
        assert!(engine
            .is_density_minimal(&SimpleGraph::edgeless(1).unwrap())
            .unwrap());
        // F_3 with three added degree-two vertices across three distinct
        // edges, leaving one triangle bare: density 3/2, and dropping the
        // bare triangle is a smaller minor of the same density
        let mut g = SimpleGraph::edgeless(10).unwrap();
        for (u, v) in friendship(3).unwrap().edges() {
            g.add_edge(u, v).unwrap();
        }
        for (x, a, b) in [(7usize, 1usize, 2usize), (8, 0, 1), (9, 3, 4)] {
            g.add_edge(x, a).unwrap();
            g.add_edge(x, b).unwrap();
        }
        assert_eq!(g.density(), r(3, 2));
        let cert = engine.certify_density_minimal(&g).unwrap();
        assert!(!cert.verdict);
        let (best, d, w) = cert.best_proper_minor.unwrap();
        assert_eq!(d, r(3, 2));
        assert!(best.n() < g.n());
        validate_witness(&g, &best, &w).unwrap();
    }

    #[test]
    fn rank_minimal_examples() {
        assert!(is_rank_minimal(&complete_graph(4).unwrap()));
        assert!(!is_rank_minimal(&cycle_graph(4).unwrap()));
        assert!(is_rank_minimal(&diamond()));
        assert!(is_rank_minimal(&SimpleGraph::edgeless(1).unwrap()));
        // contracting a tree edge preserves rank zero
        assert!(!is_rank_minimal(&path_graph(3).unwrap()));
    }

    #[test]
    fn branchset_backend_matches_engine_on_small_graphs() {
        let mut engine = MinorEngine::new();
        for g in [
            complete_graph(4).unwrap(),
            diamond(),
            friendship(2).unwrap(),
            cycle_graph(5).unwrap(),
            path_graph(4).unwrap(),
            theta(1, 2, 3).unwrap(),
        ] {
            let (eg, ed, _) = engine.densest_minor(&g).unwrap();
            let (bg, bd) = densest_minor_branchset(&g);
            assert_eq!(ed, bd, "density mismatch on {g:?}");
            assert_eq!(eg, bg, "argmax mismatch on {g:?}");
            let verdict_engine = engine.is_density_minimal(&g).unwrap();
            let verdict_branch = is_density_minimal_branchset(&g);
            assert_eq!(verdict_engine, verdict_branch, "verdict mismatch on {g:?}");
        }
    }

    #[test]
    fn closure_member_density_bound_for_f2() {
        let mut engine = MinorEngine::new();
        let f2 = friendship(2).unwrap();
        let closure = engine.minor_closure(&f2).unwrap();
        for (member, densest) in &closure.members {
            assert!(member.density() <= r(6, 5));
            assert!(*densest <= r(6, 5));
        }
    }
}
