//! Small labeled simple graphs as adjacency bitmasks, the universe every
//! other module computes over.

use std::fmt;

use crate::rational::Rational;
use crate::{Error, Result};

/// Hard cap on vertex count; adjacency rows are `u32` masks.
pub const MAX_VERTICES: usize = 32;

/// A simple graph on `1..=32` labeled vertices. No loops, no parallel
/// edges, adjacency kept symmetric. The empty graph is not a value.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SimpleGraph {
    n: u8,
    adj: [u32; MAX_VERTICES],
}

impl SimpleGraph {
    /// Edgeless graph on `n` vertices.
    pub fn edgeless(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::EmptyGraph);
        }
        if n > MAX_VERTICES {
            return Err(Error::TooManyVertices {
                requested: n,
                max: MAX_VERTICES,
            });
        }
        Ok(SimpleGraph {
            n: n as u8,
            adj: [0; MAX_VERTICES],
        })
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Self::edgeless(n)?;
        for &(u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    pub fn n(&self) -> usize {
        self.n as usize
    }

    pub fn m(&self) -> usize {
        self.adj[..self.n()]
            .iter()
            .map(|row| row.count_ones() as usize)
            .sum::<usize>()
            / 2
    }

    fn check_vertex(&self, v: usize) -> Result<()> {
        if v >= self.n() {
            Err(Error::VertexOutOfRange {
                vertex: v,
                n: self.n(),
            })
        } else {
            Ok(())
        }
    }

    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<()> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if u == v {
            return Err(Error::SelfLoop(u));
        }
        self.adj[u] |= 1 << v;
        self.adj[v] |= 1 << u;
        Ok(())
    }

    pub fn remove_edge(&mut self, u: usize, v: usize) -> Result<()> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if !self.has_edge(u, v) {
            return Err(Error::MissingEdge(u, v));
        }
        self.adj[u] &= !(1 << v);
        self.adj[v] &= !(1 << u);
        Ok(())
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n() && v < self.n() && self.adj[u] & (1 << v) != 0
    }

    /// Neighbor set of `v` as a bitmask.
    pub fn neighbors(&self, v: usize) -> u32 {
        self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    pub fn vertices(&self) -> impl Iterator<Item = usize> {
        0..self.n()
    }

    /// Mask with one bit per vertex.
    pub fn full_mask(&self) -> u32 {
        if self.n() == MAX_VERTICES {
            u32::MAX
        } else {
            (1u32 << self.n()) - 1
        }
    }

    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.m());
        for u in 0..self.n() {
            // neighbors above u only, so each edge appears once
            let mut higher = self.adj[u] & !(((1u64 << (u + 1)) - 1) as u32);
            while higher != 0 {
                let v = higher.trailing_zeros() as usize;
                higher &= higher - 1;
                out.push((u, v));
            }
        }
        out
    }

    /// m/n in lowest terms.
    pub fn density(&self) -> Rational {
        Rational::new(self.m() as i64, self.n() as i64)
    }

    /// Cycle rank m − n + c; equals m + 1 − n for connected graphs.
    pub fn rank(&self) -> usize {
        self.m() + self.component_count() - self.n()
    }

    /// Vertices reachable from `start` while staying inside `within`.
    pub fn reachable(&self, start: usize, within: u32) -> u32 {
        debug_assert!(within & (1 << start) != 0);
        let mut seen = 1u32 << start;
        let mut frontier = seen;
        while frontier != 0 {
            let mut next = 0u32;
            let mut f = frontier;
            while f != 0 {
                let v = f.trailing_zeros() as usize;
                f &= f - 1;
                next |= self.adj[v] & within & !seen;
            }
            seen |= next;
            frontier = next;
        }
        seen
    }

    /// Connected components as vertex masks, ordered by lowest vertex.
    pub fn components(&self) -> Vec<u32> {
        let mut remaining = self.full_mask();
        let mut out = Vec::new();
        while remaining != 0 {
            let v = remaining.trailing_zeros() as usize;
            let comp = self.reachable(v, remaining);
            out.push(comp);
            remaining &= !comp;
        }
        out
    }

    pub fn component_count(&self) -> usize {
        self.components().len()
    }

    pub fn is_connected(&self) -> bool {
        self.reachable(0, self.full_mask()) == self.full_mask()
    }

    /// Whether the subgraph induced by `mask` is connected (empty masks count
    /// as disconnected).
    pub fn connected_within(&self, mask: u32) -> bool {
        if mask == 0 {
            return false;
        }
        let v = mask.trailing_zeros() as usize;
        self.reachable(v, mask) == mask
    }

    pub fn is_clique(&self, mask: u32) -> bool {
        let mut rest = mask;
        while rest != 0 {
            let v = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            if self.adj[v] & mask != mask & !(1 << v) {
                return false;
            }
        }
        true
    }

    /// Induced subgraph on the vertices of `mask`, relabeled to 0..k in
    /// increasing original order. Returns the graph and the original labels.
    pub fn induced(&self, mask: u32) -> Result<(SimpleGraph, Vec<usize>)> {
        if mask == 0 {
            return Err(Error::EmptyGraph);
        }
        let labels: Vec<usize> = (0..self.n()).filter(|v| mask & (1 << v) != 0).collect();
        let mut g = SimpleGraph::edgeless(labels.len())?;
        for (i, &u) in labels.iter().enumerate() {
            for (j, &v) in labels.iter().enumerate().skip(i + 1) {
                if self.has_edge(u, v) {
                    g.add_edge(i, j)?;
                }
            }
        }
        Ok((g, labels))
    }

    /// Applies a relabeling permutation: vertex `v` becomes `perm[v]`.
    pub fn relabeled(&self, perm: &[u8]) -> SimpleGraph {
        let mut g = SimpleGraph {
            n: self.n,
            adj: [0; MAX_VERTICES],
        };
        for u in 0..self.n() {
            let pu = perm[u] as usize;
            let mut nb = self.adj[u];
            while nb != 0 {
                let v = nb.trailing_zeros() as usize;
                nb &= nb - 1;
                g.adj[pu] |= 1 << perm[v];
            }
        }
        g
    }

    /// Disjoint union, `other`'s vertices shifted past ours.
    pub fn disjoint_union(&self, other: &SimpleGraph) -> Result<SimpleGraph> {
        let n = self.n() + other.n();
        let mut g = SimpleGraph::edgeless(n)?;
        g.adj[..self.n()].copy_from_slice(&self.adj[..self.n()]);
        for v in 0..other.n() {
            g.adj[self.n() + v] = other.adj[v] << self.n();
        }
        Ok(g)
    }

    /// Union of the neighbor sets of the vertices in `mask`, minus `mask`.
    pub fn neighbors_of_mask(&self, mask: u32) -> u32 {
        let mut out = 0u32;
        let mut rest = mask;
        while rest != 0 {
            let v = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            out |= self.adj[v];
        }
        out & !mask
    }

    /// Degree multiset, ascending. Cheap isomorphism-invariant filter.
    pub fn degree_sequence(&self) -> Vec<usize> {
        let mut d: Vec<usize> = (0..self.n()).map(|v| self.degree(v)).collect();
        d.sort_unstable();
        d
    }
}

impl fmt::Debug for SimpleGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SimpleGraph({})", render_edge_list(self))
    }
}

/// Parses the plain text edge-list format `n=<k>; u-v, u-v, ...`.
pub fn parse_edge_list(text: &str) -> Result<SimpleGraph> {
    let mut parts = text.splitn(2, ';');
    let head = parts.next().unwrap_or("").trim();
    let n = head
        .strip_prefix("n=")
        .or_else(|| head.strip_prefix("n ="))
        .ok_or_else(|| Error::Parse(format!("expected `n=<k>` at the start of `{text}`")))?
        .trim()
        .parse::<usize>()
        .map_err(|_| Error::Parse(format!("bad vertex count in `{head}`")))?;
    let mut g = SimpleGraph::edgeless(n)?;
    if let Some(rest) = parts.next() {
        for tok in rest.split(',') {
            let tok = tok.trim();
            if tok.is_empty() {
                continue;
            }
            let (u, v) = tok
                .split_once('-')
                .ok_or_else(|| Error::Parse(format!("bad edge `{tok}`")))?;
            let u: usize = u
                .trim()
                .parse()
                .map_err(|_| Error::Parse(format!("bad edge `{tok}`")))?;
            let v: usize = v
                .trim()
                .parse()
                .map_err(|_| Error::Parse(format!("bad edge `{tok}`")))?;
            g.add_edge(u, v)?;
        }
    }
    Ok(g)
}

pub fn render_edge_list(g: &SimpleGraph) -> String {
    let edges: Vec<String> = g.edges().iter().map(|(u, v)| format!("{u}-{v}")).collect();
    if edges.is_empty() {
        format!("n={}", g.n())
    } else {
        format!("n={}; {}", g.n(), edges.join(", "))
    }
}

pub fn path_graph(n: usize) -> Result<SimpleGraph> {
    let mut g = SimpleGraph::edgeless(n)?;
    for v in 1..n {
        g.add_edge(v - 1, v)?;
    }
    Ok(g)
}

pub fn cycle_graph(n: usize) -> Result<SimpleGraph> {
    if n < 3 {
        return Err(Error::BadParams {
            family: "cycle".into(),
            reason: "needs at least 3 vertices".into(),
        });
    }
    let mut g = path_graph(n)?;
    g.add_edge(n - 1, 0)?;
    Ok(g)
}

pub fn complete_graph(n: usize) -> Result<SimpleGraph> {
    let mut g = SimpleGraph::edgeless(n)?;
    for u in 0..n {
        for v in u + 1..n {
            g.add_edge(u, v)?;
        }
    }
    Ok(g)
}

pub fn complete_bipartite(a: usize, b: usize) -> Result<SimpleGraph> {
    if a == 0 || b == 0 {
        return Err(Error::BadParams {
            family: "complete_bipartite".into(),
            reason: "both sides must be nonempty".into(),
        });
    }
    let mut g = SimpleGraph::edgeless(a + b)?;
    for u in 0..a {
        for v in a..a + b {
            g.add_edge(u, v)?;
        }
    }
    Ok(g)
}

/// i triangles sharing a central vertex 0; triangle j uses 2j−1 and 2j.
pub fn friendship(i: usize) -> Result<SimpleGraph> {
    if i == 0 {
        return Err(Error::BadParams {
            family: "friendship".into(),
            reason: "needs at least one triangle".into(),
        });
    }
    let mut g = SimpleGraph::edgeless(2 * i + 1)?;
    for j in 1..=i {
        let (a, b) = (2 * j - 1, 2 * j);
        g.add_edge(0, a)?;
        g.add_edge(0, b)?;
        g.add_edge(a, b)?;
    }
    Ok(g)
}

/// Friendship graph plus one vertex across the outer edge of triangle 1.
pub fn f_prime(i: usize) -> Result<SimpleGraph> {
    let mut g = friendship(i)?;
    let mut out = SimpleGraph::edgeless(2 * i + 2)?;
    out.adj[..2 * i + 1].copy_from_slice(&g.adj[..2 * i + 1]);
    g = out;
    let v = 2 * i + 1;
    g.add_edge(v, 1)?;
    g.add_edge(v, 2)?;
    Ok(g)
}

/// Friendship graph plus two vertices across distinct edges; for i ≥ 2 the
/// outer edges of triangles 1 and 2, for i = 1 two distinct triangle edges.
pub fn f_double_prime(i: usize) -> Result<SimpleGraph> {
    let g = f_prime(i)?;
    let mut out = SimpleGraph::edgeless(2 * i + 3)?;
    out.adj[..2 * i + 2].copy_from_slice(&g.adj[..2 * i + 2]);
    let w = 2 * i + 2;
    if i >= 2 {
        out.add_edge(w, 3)?;
        out.add_edge(w, 4)?;
    } else {
        out.add_edge(w, 0)?;
        out.add_edge(w, 1)?;
    }
    Ok(out)
}

/// Two hub vertices joined by three internally disjoint paths with `a`, `b`,
/// and `c` edges. At most one path may have length one.
pub fn theta(a: usize, b: usize, c: usize) -> Result<SimpleGraph> {
    if a == 0 || b == 0 || c == 0 {
        return Err(Error::BadParams {
            family: "theta".into(),
            reason: "path lengths must be positive".into(),
        });
    }
    if [a, b, c].iter().filter(|&&x| x == 1).count() > 1 {
        return Err(Error::BadParams {
            family: "theta".into(),
            reason: "two length-1 paths would form a parallel edge".into(),
        });
    }
    let n = a + b + c - 1;
    let mut g = SimpleGraph::edgeless(n)?;
    let mut next = 2;
    for len in [a, b, c] {
        let mut prev = 0;
        for _ in 1..len {
            g.add_edge(prev, next)?;
            prev = next;
            next += 1;
        }
        g.add_edge(prev, 1)?;
    }
    Ok(g)
}

/// K4 minus one edge.
pub fn diamond() -> SimpleGraph {
    SimpleGraph::from_edges(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3)]).unwrap()
}

/// Cycle a_0..a_{t−1} plus b_i adjacent to a_i and a_{i+1 mod t}; t ≥ 3.
pub fn cycle_of_triangles(t: usize) -> Result<SimpleGraph> {
    if t < 3 {
        return Err(Error::BadParams {
            family: "cycle_of_triangles".into(),
            reason: "needs at least 3 triangles".into(),
        });
    }
    let mut g = SimpleGraph::edgeless(2 * t)?;
    for i in 0..t {
        let j = (i + 1) % t;
        g.add_edge(i, j)?;
        g.add_edge(t + i, i)?;
        g.add_edge(t + i, j)?;
    }
    Ok(g)
}

/// k triangles sharing the edge 0-1.
pub fn book(k: usize) -> Result<SimpleGraph> {
    if k == 0 {
        return Err(Error::BadParams {
            family: "book".into(),
            reason: "needs at least one page".into(),
        });
    }
    let mut g = SimpleGraph::edgeless(k + 2)?;
    g.add_edge(0, 1)?;
    for p in 2..k + 2 {
        g.add_edge(0, p)?;
        g.add_edge(1, p)?;
    }
    Ok(g)
}

/// Builds a named family member; `params` per family:
/// path/cycle/complete: vertex count; complete_bipartite: both sides;
/// friendship/f_prime/f_double_prime: triangle count; theta: three path
/// lengths; diamond: none; cycle_of_triangles/book: replication count.
pub fn make_named(name: &str, params: &[usize]) -> Result<SimpleGraph> {
    let want = |k: usize| -> Result<()> {
        if params.len() == k {
            Ok(())
        } else {
            Err(Error::BadParams {
                family: name.into(),
                reason: format!("expected {k} parameter(s), got {}", params.len()),
            })
        }
    };
    match name {
        "path" => {
            want(1)?;
            path_graph(params[0])
        }
        "cycle" => {
            want(1)?;
            cycle_graph(params[0])
        }
        "complete" => {
            want(1)?;
            complete_graph(params[0])
        }
        "complete_bipartite" => {
            want(2)?;
            complete_bipartite(params[0], params[1])
        }
        "friendship" => {
            want(1)?;
            friendship(params[0])
        }
        "f_prime" => {
            want(1)?;
            f_prime(params[0])
        }
        "f_double_prime" => {
            want(1)?;
            f_double_prime(params[0])
        }
        "theta" => {
            want(3)?;
            theta(params[0], params[1], params[2])
        }
        "diamond" => {
            want(0)?;
            Ok(diamond())
        }
        "cycle_of_triangles" => {
            want(1)?;
            cycle_of_triangles(params[0])
        }
        "book" => {
            want(1)?;
            book(params[0])
        }
        other => Err(Error::UnknownFamily(other.into())),
    }
}
