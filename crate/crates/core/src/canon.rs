//! Canonical labeling by equitable degree refinement plus
//! individualization, with automorphism-orbit pruning. Adequate and fast
//! for the ≤ 32-vertex graphs this crate works with; correctness is
//! cross-checked against a brute-force permutation oracle in the tests.

use std::cmp::Ordering;

use crate::graph::{SimpleGraph, MAX_VERTICES};

/// Canonically relabeled graph plus the permutation that produced it.
/// Two graphs are isomorphic iff their canonical graphs are equal
/// (for the colored variant: iff graphs and color images are equal).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CanonicalForm {
    graph: SimpleGraph,
    permutation: Vec<u8>,
}

impl CanonicalForm {
    pub fn graph(&self) -> &SimpleGraph {
        &self.graph
    }

    pub fn into_graph(self) -> SimpleGraph {
        self.graph
    }

    /// Relabeling witness: original vertex `v` sits at position `perm[v]`.
    pub fn permutation(&self) -> &[u8] {
        &self.permutation
    }

    /// Image of an original vertex mask under the relabeling.
    pub fn image_mask(&self, mask: u32) -> u32 {
        let mut out = 0u32;
        let mut rest = mask;
        while rest != 0 {
            let v = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            out |= 1 << self.permutation[v];
        }
        out
    }

    /// Deterministic byte certificate: n, then the special-vertex count,
    /// then the packed upper-triangle adjacency of the canonical graph.
    pub fn certificate(&self, special: u32) -> Vec<u8> {
        let n = self.graph.n();
        let mut out = vec![n as u8, self.image_mask(special).count_ones() as u8];
        let mut acc = 0u8;
        let mut filled = 0;
        for v in 1..n {
            for u in 0..v {
                acc <<= 1;
                if self.graph.has_edge(u, v) {
                    acc |= 1;
                }
                filled += 1;
                if filled == 8 {
                    out.push(acc);
                    acc = 0;
                    filled = 0;
                }
            }
        }
        if filled > 0 {
            out.push(acc << (8 - filled));
        }
        out
    }
}

/// Canonical form ignoring colors.
pub fn canonical_form(g: &SimpleGraph) -> CanonicalForm {
    canonical_form_colored(g, 0)
}

/// Canonical form of a 2-colored graph; `special` marks the second color
/// class. Within each connected piece the plain vertices come first.
pub fn canonical_form_colored(g: &SimpleGraph, special: u32) -> CanonicalForm {
    let comps = g.components();
    if comps.len() == 1 {
        return canon_connected(g, special & g.full_mask());
    }
    // canonicalize per component, then order components by certificate
    let mut parts: Vec<(Vec<u8>, SimpleGraph, Vec<usize>, CanonicalForm)> = comps
        .iter()
        .map(|&mask| {
            let (sub, labels) = g.induced(mask).expect("component is nonempty");
            let sub_special: u32 = labels
                .iter()
                .enumerate()
                .filter(|(_, &orig)| special & (1 << orig) != 0)
                .map(|(i, _)| 1u32 << i)
                .sum();
            let cf = canon_connected(&sub, sub_special);
            let cert = cf.certificate(sub_special);
            (cert, sub, labels, cf)
        })
        .collect();
    parts.sort_by(|a, b| a.0.cmp(&b.0));

    let mut permutation = vec![0u8; g.n()];
    let mut assembled = SimpleGraph::edgeless(g.n()).expect("same vertex count");
    let mut offset = 0usize;
    for (_, _, labels, cf) in &parts {
        for (i, &orig) in labels.iter().enumerate() {
            permutation[orig] = (offset + cf.permutation()[i] as usize) as u8;
        }
        for (u, v) in cf.graph().edges() {
            assembled
                .add_edge(offset + u, offset + v)
                .expect("within bounds");
        }
        offset += labels.len();
    }
    CanonicalForm {
        graph: assembled,
        permutation,
    }
}

/// Canonical graph without the witness.
pub fn canonical_graph(g: &SimpleGraph) -> SimpleGraph {
    canonical_form(g).into_graph()
}

pub fn are_isomorphic(a: &SimpleGraph, b: &SimpleGraph) -> bool {
    a.n() == b.n()
        && a.m() == b.m()
        && a.degree_sequence() == b.degree_sequence()
        && canonical_graph(a) == canonical_graph(b)
}

// ---------------------------------------------------------------------
// connected-graph search

type Cells = Vec<Vec<u8>>;

const CERT_WORDS: usize = MAX_VERTICES * (MAX_VERTICES - 1) / 2 / 64 + 1;
type CertBits = [u64; CERT_WORDS];

struct Searcher<'a> {
    g: &'a SimpleGraph,
    n: usize,
    best_bits: Option<CertBits>,
    best_order: Vec<u8>, // position -> original vertex
    generators: Vec<Vec<u8>>,
}

fn mask_of(cell: &[u8]) -> u32 {
    cell.iter().map(|&v| 1u32 << v).sum()
}

impl<'a> Searcher<'a> {
    /// Splits cells by neighbor counts into other cells until equitable.
    fn refine(&self, cells: &mut Cells) {
        loop {
            let mut split_at = None;
            'scan: for s in 0..cells.len() {
                let smask = mask_of(&cells[s]);
                for (t, cell) in cells.iter().enumerate() {
                    if cell.len() <= 1 {
                        continue;
                    }
                    let first_key = (self.g.neighbors(cell[0] as usize) & smask).count_ones();
                    if cell
                        .iter()
                        .any(|&v| (self.g.neighbors(v as usize) & smask).count_ones() != first_key)
                    {
                        split_at = Some((s, t));
                        break 'scan;
                    }
                }
            }
            let Some((s, t)) = split_at else { break };
            let smask = mask_of(&cells[s]);
            let mut groups: Vec<(u32, Vec<u8>)> = Vec::new();
            for &v in &cells[t] {
                let key = (self.g.neighbors(v as usize) & smask).count_ones();
                match groups.binary_search_by_key(&key, |(k, _)| *k) {
                    Ok(i) => groups[i].1.push(v),
                    Err(i) => groups.insert(i, (key, vec![v])),
                }
            }
            cells.splice(t..=t, groups.into_iter().map(|(_, g)| g));
        }
    }

    fn leaf(&mut self, cells: &Cells) {
        let order: Vec<u8> = cells.iter().map(|c| c[0]).collect();
        let mut bits: CertBits = [0; CERT_WORDS];
        let mut idx = 0usize;
        for q in 1..self.n {
            let nb = self.g.neighbors(order[q] as usize);
            for &earlier in &order[..q] {
                if nb & (1 << earlier) != 0 {
                    bits[idx / 64] |= 1u64 << (63 - idx % 64);
                }
                idx += 1;
            }
        }
        match &self.best_bits {
            None => {
                self.best_bits = Some(bits);
                self.best_order = order;
            }
            Some(best) => match bits.cmp(best) {
                Ordering::Less => {
                    self.best_bits = Some(bits);
                    self.best_order = order;
                }
                Ordering::Equal => {
                    // two labelings with the same certificate give an automorphism
                    let mut auto = vec![0u8; self.n];
                    for p in 0..self.n {
                        auto[order[p] as usize] = self.best_order[p];
                    }
                    self.generators.push(auto);
                }
                Ordering::Greater => {}
            },
        }
    }

    /// Orbit partition of candidate vertices under the generators that fix
    /// every vertex of `prefix` pointwise.
    fn orbits(&self, prefix: &[u8]) -> Vec<u8> {
        let mut parent: Vec<u8> = (0..self.n as u8).collect();
        fn find(parent: &mut [u8], v: u8) -> u8 {
            let mut v = v;
            while parent[v as usize] != v {
                parent[v as usize] = parent[parent[v as usize] as usize];
                v = parent[v as usize];
            }
            v
        }
        for gen in &self.generators {
            if prefix.iter().any(|&p| gen[p as usize] != p) {
                continue;
            }
            for v in 0..self.n as u8 {
                let (a, b) = (find(&mut parent, v), find(&mut parent, gen[v as usize]));
                if a != b {
                    parent[a as usize] = b;
                }
            }
        }
        (0..self.n as u8).map(|v| find(&mut parent, v)).collect()
    }

    fn search(&mut self, mut cells: Cells, prefix: &mut Vec<u8>) {
        self.refine(&mut cells);
        let target = cells.iter().position(|c| c.len() > 1);
        let Some(t) = target else {
            self.leaf(&cells);
            return;
        };
        let candidates = cells[t].clone();
        let mut tried: Vec<u8> = Vec::new();
        for &v in &candidates {
            let orbit = self.orbits(prefix);
            if tried
                .iter()
                .any(|&u| orbit[u as usize] == orbit[v as usize])
            {
                continue;
            }
            tried.push(v);
            let mut child = Vec::with_capacity(cells.len() + 1);
            child.extend_from_slice(&cells[..t]);
            child.push(vec![v]);
            child.push(cells[t].iter().copied().filter(|&u| u != v).collect());
            child.extend_from_slice(&cells[t + 1..]);
            prefix.push(v);
            self.search(child, prefix);
            prefix.pop();
        }
    }
}

fn canon_connected(g: &SimpleGraph, special: u32) -> CanonicalForm {
    let n = g.n();
    let mut initial: Cells = Vec::new();
    let plain: Vec<u8> = (0..n as u8).filter(|&v| special & (1 << v) == 0).collect();
    let marked: Vec<u8> = (0..n as u8).filter(|&v| special & (1 << v) != 0).collect();
    if !plain.is_empty() {
        initial.push(plain);
    }
    if !marked.is_empty() {
        initial.push(marked);
    }
    let mut searcher = Searcher {
        g,
        n,
        best_bits: None,
        best_order: Vec::new(),
        generators: Vec::new(),
    };
    searcher.search(initial, &mut Vec::new());
    let order = searcher.best_order;
    let mut permutation = vec![0u8; n];
    for (pos, &v) in order.iter().enumerate() {
        permutation[v as usize] = pos as u8;
    }
    CanonicalForm {
        graph: g.relabeled(&permutation),
        permutation,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::*;

    #[test]
    fn relabeled_paths_agree() {
        let a = SimpleGraph::from_edges(3, &[(0, 1), (1, 2)]).unwrap();
        let b = SimpleGraph::from_edges(3, &[(1, 0), (0, 2)]).unwrap();
        assert_eq!(canonical_graph(&a), canonical_graph(&b));
        assert!(are_isomorphic(&a, &b));
    }

    #[test]
    fn path_vs_star() {
        let p4 = path_graph(4).unwrap();
        let star = SimpleGraph::from_edges(4, &[(0, 1), (0, 2), (0, 3)]).unwrap();
        assert_ne!(canonical_graph(&p4), canonical_graph(&star));
        assert!(!are_isomorphic(&cycle_graph(4).unwrap(), &star));
    }

    #[test]
    fn f_prime_is_diamond() {
        assert!(are_isomorphic(&f_prime(1).unwrap(), &diamond()));
    }

    #[test]
    fn theta_222_is_k23() {
        let t = theta(2, 2, 2).unwrap();
        let k23 = complete_bipartite(2, 3).unwrap();
        assert!(are_isomorphic(&t, &k23));
    }

    #[test]
    fn idempotent() {
        for g in [
            friendship(3).unwrap(),
            cycle_graph(6).unwrap(),
            complete_graph(5).unwrap(),
            SimpleGraph::edgeless(6).unwrap(),
            book(4).unwrap(),
        ] {
            let c = canonical_graph(&g);
            assert_eq!(c, canonical_graph(&c));
        }
    }

    #[test]
    fn permutation_witness_relabels_to_canonical() {
        let g = friendship(2).unwrap();
        let cf = canonical_form(&g);
        assert_eq!(&g.relabeled(cf.permutation()), cf.graph());
    }

    #[test]
    fn symmetric_graphs_do_not_blow_up() {
        // complete and empty graphs are the automorphism-heavy worst cases
        let k12 = complete_graph(12).unwrap();
        assert_eq!(canonical_graph(&k12), k12);
        let e12 = SimpleGraph::edgeless(12).unwrap();
        assert_eq!(canonical_graph(&e12), e12);
        let f10 = friendship(10).unwrap();
        assert_eq!(canonical_graph(&f10).m(), 30);
    }

    #[test]
    fn colored_canon_distinguishes_colorings() {
        // path a-b-c: marking an end vs the middle must differ
        let p3 = path_graph(3).unwrap();
        let end = canonical_form_colored(&p3, 0b001);
        let mid = canonical_form_colored(&p3, 0b010);
        assert_ne!(end.certificate(0b001), mid.certificate(0b010));
        // marking either end is the same coloring up to isomorphism
        let other_end = canonical_form_colored(&p3, 0b100);
        assert_eq!(end.certificate(0b001), other_end.certificate(0b100));
        assert_eq!(end.image_mask(0b001), other_end.image_mask(0b100));
    }

    #[test]
    fn disconnected_components_sorted() {
        let a = complete_graph(3)
            .unwrap()
            .disjoint_union(&path_graph(2).unwrap())
            .unwrap();
        let b = path_graph(2)
            .unwrap()
            .disjoint_union(&complete_graph(3).unwrap())
            .unwrap();
        assert_eq!(canonical_graph(&a), canonical_graph(&b));
    }
}
