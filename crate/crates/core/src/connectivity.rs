//! Block/articulation decomposition and open ear decomposition.

use crate::graph::SimpleGraph;
use crate::{Error, Result};

/// Blocks (maximal biconnected subgraphs or bridges) as vertex masks, plus
/// the articulation vertices. Isolated vertices belong to no block.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BlockDecomposition {
    pub blocks: Vec<u32>,
    pub articulation: u32,
}

struct BlockDfs<'a> {
    g: &'a SimpleGraph,
    disc: Vec<usize>,
    low: Vec<usize>,
    time: usize,
    edge_stack: Vec<(usize, usize)>,
    blocks: Vec<u32>,
    articulation: u32,
}

impl<'a> BlockDfs<'a> {
    fn dfs(&mut self, u: usize, parent: Option<usize>) {
        self.time += 1;
        self.disc[u] = self.time;
        self.low[u] = self.time;
        let mut children = 0usize;
        let mut nb = self.g.neighbors(u);
        while nb != 0 {
            let v = nb.trailing_zeros() as usize;
            nb &= nb - 1;
            if Some(v) == parent {
                continue;
            }
            if self.disc[v] == 0 {
                children += 1;
                self.edge_stack.push((u, v));
                self.dfs(v, Some(u));
                self.low[u] = self.low[u].min(self.low[v]);
                if self.low[v] >= self.disc[u] {
                    if parent.is_some() || children > 1 {
                        self.articulation |= 1 << u;
                    }
                    let mut block = 0u32;
                    while let Some(&(a, b)) = self.edge_stack.last() {
                        if self.disc[a] >= self.disc[v] {
                            block |= (1 << a) | (1 << b);
                            self.edge_stack.pop();
                        } else {
                            break;
                        }
                    }
                    let top = self.edge_stack.pop();
                    debug_assert_eq!(top, Some((u, v)));
                    block |= (1 << u) | (1 << v);
                    self.blocks.push(block);
                }
            } else if self.disc[v] < self.disc[u] {
                self.edge_stack.push((u, v));
                self.low[u] = self.low[u].min(self.disc[v]);
            }
        }
    }
}

/// Standard Hopcroft–Tarjan block decomposition, per component.
pub fn blocks(g: &SimpleGraph) -> BlockDecomposition {
    let mut dfs = BlockDfs {
        g,
        disc: vec![0; g.n()],
        low: vec![0; g.n()],
        time: 0,
        edge_stack: Vec::new(),
        blocks: Vec::new(),
        articulation: 0,
    };
    for v in 0..g.n() {
        if dfs.disc[v] == 0 {
            dfs.dfs(v, None);
        }
    }
    dfs.blocks.sort_unstable();
    BlockDecomposition {
        blocks: dfs.blocks,
        articulation: dfs.articulation,
    }
}

/// Biconnected: connected, at least three vertices, no articulation vertex.
pub fn is_biconnected(g: &SimpleGraph) -> bool {
    g.n() >= 3 && g.is_connected() && blocks(g).articulation == 0
}

/// Open ear decomposition: the first ear is a cycle, every later ear is a
/// path whose endpoints (and only they) lie on earlier ears. Ears are edge
/// sequences and partition the edge set; there are exactly rank(G) of them.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EarDecomposition {
    pub ears: Vec<Vec<(usize, usize)>>,
}

/// Chain decomposition (Schmidt): DFS, then one chain per back edge,
/// walked from the ancestor end down the back edge and up the tree until
/// hitting an already-traversed vertex.
pub fn ear_decomposition(g: &SimpleGraph) -> Result<EarDecomposition> {
    if !is_biconnected(g) {
        return Err(Error::NotBiconnected);
    }
    let n = g.n();
    let mut parent = vec![usize::MAX; n];
    let mut disc = vec![0usize; n];
    let mut order = Vec::with_capacity(n);
    let mut time = 0usize;
    // iterative DFS from 0
    let mut stack = vec![(0usize, usize::MAX)];
    while let Some((u, p)) = stack.pop() {
        if disc[u] != 0 {
            continue;
        }
        time += 1;
        disc[u] = time;
        parent[u] = p;
        order.push(u);
        let mut nb = g.neighbors(u);
        while nb != 0 {
            let v = nb.trailing_zeros() as usize;
            nb &= nb - 1;
            if disc[v] == 0 {
                stack.push((v, u));
            }
        }
    }
    let mut marked = vec![false; n];
    let mut ears: Vec<Vec<(usize, usize)>> = Vec::new();
    for &u in &order {
        // back edges with u as the ancestor endpoint
        let mut nb = g.neighbors(u);
        while nb != 0 {
            let v = nb.trailing_zeros() as usize;
            nb &= nb - 1;
            if disc[v] <= disc[u] || parent[v] == u {
                continue;
            }
            marked[u] = true;
            let mut ear = vec![(u, v)];
            let mut w = v;
            while !marked[w] {
                marked[w] = true;
                ear.push((w, parent[w]));
                w = parent[w];
            }
            ears.push(ear);
        }
    }
    let d = EarDecomposition { ears };
    validate_ears(g, &d)?;
    Ok(d)
}

/// Checks an ear decomposition from scratch: edges partitioned, first ear a
/// cycle, later ears open paths attached (only) at earlier vertices, ear
/// count equal to the rank.
pub fn validate_ears(g: &SimpleGraph, d: &EarDecomposition) -> Result<()> {
    let fail = |msg: String| Err(Error::Parse(msg));
    if d.ears.len() != g.rank() {
        return fail(format!(
            "expected {} ears, found {}",
            g.rank(),
            d.ears.len()
        ));
    }
    let mut seen_edges = std::collections::HashSet::new();
    let mut seen_vertices = 0u32;
    for (i, ear) in d.ears.iter().enumerate() {
        if ear.is_empty() {
            return fail(format!("ear {i} is empty"));
        }
        for &(a, b) in ear {
            if !g.has_edge(a, b) {
                return fail(format!("ear {i} uses a non-edge {a}-{b}"));
            }
            let key = (a.min(b), a.max(b));
            if !seen_edges.insert(key) {
                return fail(format!("edge {a}-{b} appears twice"));
            }
        }
        // the ear must be a walk
        for w in ear.windows(2) {
            if w[0].1 != w[1].0 {
                return fail(format!("ear {i} is not a contiguous walk"));
            }
        }
        let start = ear[0].0;
        let end = ear[ear.len() - 1].1;
        let internal: Vec<usize> = ear.iter().skip(1).map(|&(a, _)| a).collect();
        let mut distinct = internal.clone();
        distinct.sort_unstable();
        distinct.dedup();
        if distinct.len() != internal.len() {
            return fail(format!("ear {i} revisits an internal vertex"));
        }
        if i == 0 {
            if start != end {
                return fail("first ear is not a closed cycle".into());
            }
            if internal.contains(&start) {
                return fail("first ear revisits its start".into());
            }
        } else {
            if start == end {
                return fail(format!("ear {i} is closed; open path expected"));
            }
            for &v in [start, end].iter() {
                if seen_vertices & (1 << v) == 0 {
                    return fail(format!("ear {i} endpoint {v} not on earlier ears"));
                }
            }
            if internal.iter().any(|&v| seen_vertices & (1 << v) != 0) {
                return fail(format!("ear {i} passes through an earlier vertex"));
            }
        }
        for &(a, b) in ear {
            seen_vertices |= (1 << a) | (1 << b);
        }
    }
    if seen_edges.len() != g.m() {
        return fail(format!(
            "ears cover {} of {} edges",
            seen_edges.len(),
            g.m()
        ));
    }
    Ok(())
}
