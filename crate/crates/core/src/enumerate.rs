//! Isomorph-free exhaustive enumeration of small graphs: extend level n to
//! level n+1 by attaching one new vertex in every possible way, keeping one
//! canonical representative per class. Edge caps derived from the filter are
//! pushed into the levels so that sparse enumerations stay small.

use std::collections::HashSet;

use crate::canon::canonical_graph;
use crate::graph::SimpleGraph;
use crate::rational::Rational;
use crate::{Error, Result, ENUMERATION_GUARDRAIL};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Connectivity {
    Any,
    Connected,
    Biconnected,
}

/// What to enumerate. `max_density` bounds m/n on emitted graphs,
/// exclusively when `max_density_strict` is set.
#[derive(Debug, Clone)]
pub struct EnumerationFilter {
    pub max_n: usize,
    pub max_edges: Option<usize>,
    pub connectivity: Connectivity,
    pub exact_rank: Option<usize>,
    pub max_density: Option<Rational>,
    pub max_density_strict: bool,
}

impl EnumerationFilter {
    pub fn new(max_n: usize, connectivity: Connectivity) -> Self {
        EnumerationFilter {
            max_n,
            max_edges: None,
            connectivity,
            exact_rank: None,
            max_density: None,
            max_density_strict: false,
        }
    }

    pub fn connected(max_n: usize) -> Self {
        Self::new(max_n, Connectivity::Connected)
    }

    pub fn biconnected(max_n: usize) -> Self {
        Self::new(max_n, Connectivity::Biconnected)
    }

    pub fn with_exact_rank(mut self, rank: usize) -> Self {
        self.exact_rank = Some(rank);
        self
    }

    pub fn with_max_edges(mut self, m: usize) -> Self {
        self.max_edges = Some(m);
        self
    }

    pub fn with_max_density(mut self, d: Rational, strict: bool) -> Self {
        self.max_density = Some(d);
        self.max_density_strict = strict;
        self
    }

    /// Largest edge count an emitted graph on `n` vertices may have.
    fn edge_cap(&self, n: usize) -> usize {
        let mut cap = n * (n - 1) / 2;
        if let Some(m) = self.max_edges {
            cap = cap.min(m);
        }
        if let Some(d) = self.max_density {
            let (p, q) = (*d.numer(), *d.denom());
            debug_assert!(p >= 0 && q > 0);
            // m/n ≤ p/q, or m/n < p/q in strict mode
            let bound = if self.max_density_strict {
                ((p * n as i64 - 1).max(0) / q) as usize
            } else {
                (p * n as i64 / q) as usize
            };
            cap = cap.min(bound);
        }
        if let Some(r) = self.exact_rank {
            // rank = m − n + c and c ≥ 1, so m ≤ n − 1 + r
            cap = cap.min(n - 1 + r);
        }
        cap
    }

    /// Cap for graphs *kept* at level `n` as extension parents: a kept graph
    /// must still be able to reach some target level within its edge budget
    /// (each later vertex adds at least `min_step` edges).
    fn keep_cap(&self, n: usize) -> usize {
        let min_step = match self.connectivity {
            Connectivity::Any => 0,
            _ => 1,
        };
        (n..=self.max_n)
            .map(|j| {
                let c = self.edge_cap(j);
                c.saturating_sub(min_step * (j - n))
            })
            .max()
            .unwrap_or(0)
    }

    fn emits(&self, g: &SimpleGraph) -> bool {
        if g.m() > self.edge_cap(g.n()) {
            return false;
        }
        if let Some(r) = self.exact_rank {
            if g.rank() != r {
                return false;
            }
        }
        match self.connectivity {
            Connectivity::Any => true,
            Connectivity::Connected => true, // by construction
            Connectivity::Biconnected => crate::connectivity::is_biconnected(g),
        }
    }
}

/// Streams one canonical representative per isomorphism class satisfying
/// the filter, in deterministic order: by vertex count, then by canonical
/// form.
pub struct Enumeration {
    filter: EnumerationFilter,
    level: Vec<SimpleGraph>,
    n: usize,
    pending: std::vec::IntoIter<SimpleGraph>,
}

pub fn enumerate(filter: &EnumerationFilter) -> Result<Enumeration> {
    if filter.max_n > ENUMERATION_GUARDRAIL {
        return Err(Error::Guardrail {
            n: filter.max_n,
            limit: ENUMERATION_GUARDRAIL,
        });
    }
    if filter.max_n == 0 {
        return Err(Error::EmptyGraph);
    }
    let k1 = SimpleGraph::edgeless(1).expect("K1");
    let level = vec![k1];
    let pending: Vec<SimpleGraph> = level.iter().filter(|g| filter.emits(g)).copied().collect();
    Ok(Enumeration {
        filter: filter.clone(),
        level,
        n: 1,
        pending: pending.into_iter(),
    })
}

impl Enumeration {
    fn advance_level(&mut self) -> bool {
        if self.n >= self.filter.max_n {
            return false;
        }
        let k = self.n;
        let keep_cap = self.filter.keep_cap(k + 1);
        let lowest_mask = match self.filter.connectivity {
            Connectivity::Any => 0u32,
            _ => 1u32,
        };
        let mut seen: HashSet<SimpleGraph> = HashSet::new();
        for parent in &self.level {
            let budget = keep_cap.saturating_sub(parent.m());
            if budget == 0 && lowest_mask == 1 {
                continue;
            }
            for mask in lowest_mask..(1u32 << k) {
                let extra = mask.count_ones() as usize;
                if extra > budget {
                    continue;
                }
                let mut child = SimpleGraph::edgeless(k + 1).expect("within cap");
                for v in 0..k {
                    let mut nb = parent.neighbors(v);
                    while nb != 0 {
                        let w = nb.trailing_zeros() as usize;
                        nb &= nb - 1;
                        if w > v {
                            child.add_edge(v, w).expect("copied edge");
                        }
                    }
                }
                let mut nb = mask;
                while nb != 0 {
                    let v = nb.trailing_zeros() as usize;
                    nb &= nb - 1;
                    child.add_edge(v, k).expect("new edge");
                }
                seen.insert(canonical_graph(&child));
            }
        }
        let mut next: Vec<SimpleGraph> = seen.into_iter().collect();
        next.sort_unstable();
        self.n = k + 1;
        let emitted: Vec<SimpleGraph> = next
            .iter()
            .filter(|g| self.filter.emits(g))
            .copied()
            .collect();
        next.retain(|g| g.m() <= self.filter.keep_cap(self.n));
        self.level = next;
        self.pending = emitted.into_iter();
        true
    }
}

impl Iterator for Enumeration {
    type Item = SimpleGraph;

    fn next(&mut self) -> Option<SimpleGraph> {
        loop {
            if let Some(g) = self.pending.next() {
                return Some(g);
            }
            if !self.advance_level() {
                return None;
            }
        }
    }
}

/// Convenience wrapper collecting the stream.
pub fn enumerate_all(filter: &EnumerationFilter) -> Result<Vec<SimpleGraph>> {
    Ok(enumerate(filter)?.collect())
}
