//! Multigraph minors: bonds and self-loops survive contraction, which makes
//! the densest-minor theory collapse to a closed form that we also verify
//! by brute-force closure.

use std::collections::{BTreeSet, HashSet, VecDeque};

use crate::rational::Rational;
use crate::{Error, Result};

/// Vertex cap for multigraphs; canonicalization is brute force over
/// permutations, which desk-scale closures keep honest.
pub const MG_MAX: usize = 8;

/// A small multigraph: per-pair edge multiplicities plus per-vertex loop
/// counts. Each loop counts once toward the edge total.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Multigraph {
    n: u8,
    mult: [[u8; MG_MAX]; MG_MAX],
    loops: [u8; MG_MAX],
}

impl std::fmt::Debug for Multigraph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Multigraph({})", render_multigraph(self))
    }
}

impl Multigraph {
    pub fn edgeless(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::EmptyGraph);
        }
        if n > MG_MAX {
            return Err(Error::TooManyVertices {
                requested: n,
                max: MG_MAX,
            });
        }
        Ok(Multigraph {
            n: n as u8,
            mult: [[0; MG_MAX]; MG_MAX],
            loops: [0; MG_MAX],
        })
    }

    pub fn n(&self) -> usize {
        self.n as usize
    }

    /// Total edge count: bond multiplicities plus loops.
    pub fn m(&self) -> usize {
        let mut m = 0usize;
        for u in 0..self.n() {
            m += self.loops[u] as usize;
            for v in u + 1..self.n() {
                m += self.mult[u][v] as usize;
            }
        }
        m
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

    pub fn multiplicity(&self, u: usize, v: usize) -> usize {
        self.mult[u][v] as usize
    }

    pub fn loops_at(&self, v: usize) -> usize {
        self.loops[v] as usize
    }

    pub fn add_edges(&mut self, u: usize, v: usize, count: usize) -> Result<()> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if u == v {
            return self.add_loops(u, count);
        }
        let total = self.mult[u][v] as usize + count;
        if total > u8::MAX as usize {
            return Err(Error::Parse(format!("bond {u}-{v} multiplicity over 255")));
        }
        self.mult[u][v] = total as u8;
        self.mult[v][u] = total as u8;
        Ok(())
    }

    pub fn add_loops(&mut self, v: usize, count: usize) -> Result<()> {
        self.check_vertex(v)?;
        let total = self.loops[v] as usize + count;
        if total > u8::MAX as usize {
            return Err(Error::Parse(format!("loop count at {v} over 255")));
        }
        self.loops[v] = total as u8;
        Ok(())
    }

    pub fn density(&self) -> Rational {
        Rational::new(self.m() as i64, self.n() as i64)
    }

    /// Skeleton components (loops do not connect anything).
    pub fn components(&self) -> Vec<u32> {
        let mut seen = 0u32;
        let mut out = Vec::new();
        for start in 0..self.n() {
            if seen & (1 << start) != 0 {
                continue;
            }
            let mut comp = 1u32 << start;
            let mut stack = vec![start];
            while let Some(u) = stack.pop() {
                for v in 0..self.n() {
                    if v != u && self.mult[u][v] > 0 && comp & (1 << v) == 0 {
                        comp |= 1 << v;
                        stack.push(v);
                    }
                }
            }
            seen |= comp;
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() == 1
    }

    /// Rank m − n + c, which a single vertex realizes as its loop count.
    pub fn rank(&self) -> usize {
        self.m() + self.components().len() - self.n()
    }

    pub fn is_tree(&self) -> bool {
        self.is_connected() && self.rank() == 0
    }

    /// Induced sub-multigraph on `mask`, relabeled.
    pub fn induced(&self, mask: u32) -> Result<Multigraph> {
        let verts: Vec<usize> = (0..self.n()).filter(|&v| mask & (1 << v) != 0).collect();
        let mut g = Multigraph::edgeless(verts.len())?;
        for (i, &u) in verts.iter().enumerate() {
            g.loops[i] = self.loops[u];
            for (j, &v) in verts.iter().enumerate().skip(i + 1) {
                g.mult[i][j] = self.mult[u][v];
                g.mult[j][i] = self.mult[u][v];
            }
        }
        Ok(g)
    }
}

/// Canonical form by brute force over vertex permutations: the
/// lexicographically smallest (loops, multiplicity matrix) relabeling.
pub fn mg_canonical(g: &Multigraph) -> Multigraph {
    let n = g.n();
    let mut perm: Vec<usize> = (0..n).collect();
    let mut best: Option<Multigraph> = None;
    permute(&mut perm, 0, &mut |p| {
        let mut h = Multigraph::edgeless(n).expect("same n");
        for u in 0..n {
            h.loops[p[u]] = g.loops[u];
            for v in u + 1..n {
                h.mult[p[u]][p[v]] = g.mult[u][v];
                h.mult[p[v]][p[u]] = g.mult[u][v];
            }
        }
        if best.is_none_or(|b| h < b) {
            best = Some(h);
        }
    });
    best.expect("at least the identity permutation")
}

fn permute(perm: &mut Vec<usize>, k: usize, f: &mut impl FnMut(&[usize])) {
    if k == perm.len() {
        f(perm);
        return;
    }
    for i in k..perm.len() {
        perm.swap(k, i);
        permute(perm, k + 1, f);
        perm.swap(k, i);
    }
}

pub fn mg_are_isomorphic(a: &Multigraph, b: &Multigraph) -> bool {
    a.n() == b.n() && a.m() == b.m() && mg_canonical(a) == mg_canonical(b)
}

/// Contracts one instance of a non-loop edge: the other parallel instances
/// become loops, multiplicities toward other vertices add up, and exactly
/// one edge disappears.
pub fn mg_contract(g: &Multigraph, u: usize, v: usize) -> Result<Multigraph> {
    g.check_vertex(u)?;
    g.check_vertex(v)?;
    if u == v {
        return Err(Error::LoopContraction);
    }
    if g.mult[u][v] == 0 {
        return Err(Error::MissingMultiEdge(u, v));
    }
    let (a, b) = (u.min(v), u.max(v));
    let mut out = Multigraph::edgeless(g.n() - 1)?;
    let map = |w: usize| if w < b { w } else { w - 1 };
    for w in 0..g.n() {
        if w == b {
            continue;
        }
        let mut loops = g.loops[w] as usize;
        if w == a {
            loops += g.loops[b] as usize + (g.mult[a][b] as usize - 1);
        }
        out.loops[map(w)] = loops as u8;
        for x in w + 1..g.n() {
            if x == b {
                continue;
            }
            let mut mult = g.mult[w][x] as usize;
            if w == a {
                mult += g.mult[b][x] as usize;
            } else if x == a {
                mult += g.mult[b][w] as usize;
            }
            out.mult[map(w)][map(x)] = mult as u8;
            out.mult[map(x)][map(w)] = mult as u8;
        }
    }
    Ok(out)
}

/// Removes one instance of the bond u-v.
pub fn mg_delete_edge(g: &Multigraph, u: usize, v: usize) -> Result<Multigraph> {
    g.check_vertex(u)?;
    g.check_vertex(v)?;
    if u == v {
        return mg_delete_loop(g, u);
    }
    if g.mult[u][v] == 0 {
        return Err(Error::MissingMultiEdge(u, v));
    }
    let mut out = *g;
    out.mult[u][v] -= 1;
    out.mult[v][u] -= 1;
    Ok(out)
}

pub fn mg_delete_loop(g: &Multigraph, v: usize) -> Result<Multigraph> {
    g.check_vertex(v)?;
    if g.loops[v] == 0 {
        return Err(Error::MissingLoop(v));
    }
    let mut out = *g;
    out.loops[v] -= 1;
    Ok(out)
}

pub fn mg_delete_vertex(g: &Multigraph, v: usize) -> Result<Multigraph> {
    g.check_vertex(v)?;
    if g.n() == 1 {
        return Err(Error::LastVertex);
    }
    g.induced(((1u64 << g.n()) as u32).wrapping_sub(1) & !(1 << v))
}

/// Canonical forms of all one-operation minors.
pub fn mg_one_step_minors(g: &Multigraph) -> Vec<Multigraph> {
    let mut seen = HashSet::new();
    for u in 0..g.n() {
        if g.loops[u] > 0 {
            seen.insert(mg_canonical(&mg_delete_loop(g, u).expect("loop present")));
        }
        for v in u + 1..g.n() {
            if g.mult[u][v] > 0 {
                seen.insert(mg_canonical(
                    &mg_delete_edge(g, u, v).expect("bond present"),
                ));
                seen.insert(mg_canonical(&mg_contract(g, u, v).expect("bond present")));
            }
        }
    }
    if g.n() >= 2 {
        for v in 0..g.n() {
            seen.insert(mg_canonical(&mg_delete_vertex(g, v).expect("n ≥ 2")));
        }
    }
    let mut out: Vec<Multigraph> = seen.into_iter().collect();
    out.sort_unstable();
    out
}

/// Single vertex with `r` loops.
pub fn bouquet(r: usize) -> Multigraph {
    assert!(r <= u8::MAX as usize, "loop count over 255");
    let mut g = Multigraph::edgeless(1).expect("one vertex");
    g.loops[0] = r as u8;
    g
}

/// Densest minor in closed form: a connected multigraph with any cycle,
/// loop, or bond contracts to a single vertex whose loop count is the rank;
/// forests keep their largest-density tree component. Disconnected inputs
/// take the best component.
pub fn mg_densest_minor(g: &Multigraph) -> (Multigraph, Rational) {
    let mut best: Option<(Multigraph, Rational)> = None;
    for comp in g.components() {
        let sub = g.induced(comp).expect("component nonempty");
        let candidate = if sub.rank() >= 1 {
            let b = bouquet(sub.rank());
            let d = b.density();
            (b, d)
        } else {
            let c = mg_canonical(&sub);
            let d = c.density();
            (c, d)
        };
        let better = match &best {
            None => true,
            Some((bg, bd)) => {
                candidate.1 > *bd
                    || (candidate.1 == *bd && (candidate.0.n(), candidate.0) < (bg.n(), *bg))
            }
        };
        if better {
            best = Some(candidate);
        }
    }
    best.expect("multigraphs have at least one component")
}

/// Brute-force closure over canonical forms; the oracle for the closed form.
pub fn mg_minor_closure(g: &Multigraph) -> Result<BTreeSet<Multigraph>> {
    if g.n() > 6 || g.m() > 12 {
        return Err(Error::Guardrail {
            n: g.n().max(g.m()),
            limit: 6,
        });
    }
    let root = mg_canonical(g);
    let mut seen: BTreeSet<Multigraph> = BTreeSet::from([root]);
    let mut queue = VecDeque::from([root]);
    while let Some(cur) = queue.pop_front() {
        for child in mg_one_step_minors(&cur) {
            if seen.insert(child) {
                queue.push_back(child);
            }
        }
    }
    Ok(seen)
}

/// Densest minor by exhaustive closure, with the same tie-breaks as the
/// closed form (fewest vertices, then canonical order).
pub fn mg_densest_minor_closure(g: &Multigraph) -> Result<(Multigraph, Rational)> {
    let closure = mg_minor_closure(g)?;
    let best = closure
        .iter()
        .map(|h| h.density())
        .max()
        .expect("closure contains the root");
    let winner = closure
        .iter()
        .filter(|h| h.density() == best)
        .min_by_key(|h| (h.n(), **h))
        .expect("some member attains the maximum");
    Ok((*winner, best))
}

/// True iff no proper minor has equal or greater density, by closure. The
/// root cannot reappear among its proper minors (each operation strictly
/// shrinks m+n), so it is excluded by identity.
pub fn mg_is_density_minimal(g: &Multigraph) -> Result<bool> {
    let d = g.density();
    let root = mg_canonical(g);
    let closure = mg_minor_closure(&root)?;
    Ok(closure
        .iter()
        .filter(|h| **h != root)
        .all(|h| h.density() < d))
}

/// Generators of a component family: the family of all multigraphs whose
/// components are minors of some generator.
#[derive(Debug, Clone)]
pub struct MgFamilyDescriptor {
    pub generators: Vec<Multigraph>,
}

impl MgFamilyDescriptor {
    pub fn new(generators: Vec<Multigraph>) -> Result<Self> {
        if generators.is_empty() {
            return Err(Error::Parse("family needs at least one generator".into()));
        }
        Ok(MgFamilyDescriptor { generators })
    }
}

/// Limiting density of the component family: the densest minor density over
/// the generators. Always an integer or a superparticular ratio i/(i+1).
pub fn mg_component_family_density(desc: &MgFamilyDescriptor) -> Rational {
    desc.generators
        .iter()
        .map(|g| mg_densest_minor(g).1)
        .max()
        .expect("nonempty by construction")
}

/// Parses `n=<k>; u-v:mult, ...; loops v:count, ...`.
pub fn parse_multigraph(text: &str) -> Result<Multigraph> {
    let mut g: Option<Multigraph> = None;
    for (i, seg) in text.split(';').enumerate() {
        let seg = seg.trim();
        if i == 0 {
            let n = seg
                .strip_prefix("n=")
                .or_else(|| seg.strip_prefix("n ="))
                .ok_or_else(|| Error::Parse(format!("expected `n=<k>` at the start of `{text}`")))?
                .trim()
                .parse::<usize>()
                .map_err(|_| Error::Parse(format!("bad vertex count in `{seg}`")))?;
            g = Some(Multigraph::edgeless(n)?);
            continue;
        }
        let graph = g.as_mut().expect("set on first segment");
        if seg.is_empty() {
            continue;
        }
        if let Some(loopspec) = seg.strip_prefix("loops") {
            for tok in loopspec.split(',') {
                let tok = tok.trim();
                if tok.is_empty() {
                    continue;
                }
                let (v, count) = tok
                    .split_once(':')
                    .ok_or_else(|| Error::Parse(format!("bad loop spec `{tok}`")))?;
                let v: usize = v
                    .trim()
                    .parse()
                    .map_err(|_| Error::Parse(format!("bad loop spec `{tok}`")))?;
                let count: usize = count
                    .trim()
                    .parse()
                    .map_err(|_| Error::Parse(format!("bad loop spec `{tok}`")))?;
                graph.add_loops(v, count)?;
            }
        } else {
            for tok in seg.split(',') {
                let tok = tok.trim();
                if tok.is_empty() {
                    continue;
                }
                let (pair, mult) = match tok.split_once(':') {
                    Some((p, m)) => (
                        p,
                        m.trim()
                            .parse::<usize>()
                            .map_err(|_| Error::Parse(format!("bad multiplicity in `{tok}`")))?,
                    ),
                    None => (tok, 1),
                };
                let (u, v) = pair
                    .split_once('-')
                    .ok_or_else(|| Error::Parse(format!("bad bond `{tok}`")))?;
                let u: usize = u
                    .trim()
                    .parse()
                    .map_err(|_| Error::Parse(format!("bad bond `{tok}`")))?;
                let v: usize = v
                    .trim()
                    .parse()
                    .map_err(|_| Error::Parse(format!("bad bond `{tok}`")))?;
                if u == v {
                    return Err(Error::Parse(format!(
                        "`{tok}`: use the loops section for self-loops"
                    )));
                }
                graph.add_edges(u, v, mult)?;
            }
        }
    }
    g.ok_or_else(|| Error::Parse("empty multigraph text".into()))
}

pub fn render_multigraph(g: &Multigraph) -> String {
    let mut bonds = Vec::new();
    for u in 0..g.n() {
        for v in u + 1..g.n() {
            if g.mult[u][v] > 0 {
                bonds.push(format!("{u}-{v}:{}", g.mult[u][v]));
            }
        }
    }
    let mut loops = Vec::new();
    for v in 0..g.n() {
        if g.loops[v] > 0 {
            loops.push(format!("{v}:{}", g.loops[v]));
        }
    }
    let mut out = format!("n={}", g.n());
    if !bonds.is_empty() {
        out.push_str("; ");
        out.push_str(&bonds.join(", "));
    }
    if !loops.is_empty() {
        out.push_str("; loops ");
        out.push_str(&loops.join(", "));
    }
    out
}

/// Simple-graph view of a multigraph with no bonds above 1 and no loops.
pub fn mg_from_simple(g: &crate::graph::SimpleGraph) -> Result<Multigraph> {
    let mut out = Multigraph::edgeless(g.n())?;
    for (u, v) in g.edges() {
        out.add_edges(u, v, 1)?;
    }
    Ok(out)
}
