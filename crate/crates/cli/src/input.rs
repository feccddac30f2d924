//! Graph and multigraph input sources for the CLI: named constructions,
//! inline graph6, edge-list text, files, and stdin.

use std::io::Read;
use std::path::PathBuf;

use anyhow::{anyhow, bail, Context, Result};
use clap::Args;
use mdl_core::graph::{make_named, parse_edge_list, SimpleGraph};
use mdl_core::graph6::decode_graph6;
use mdl_core::multigraph::{parse_multigraph, Multigraph};

/// Exactly one source for the primary graph argument.
#[derive(Debug, Args)]
pub struct GraphInput {
    /// Named construction, e.g. complete:4, friendship:3, theta:1,2,3
    #[arg(long, value_name = "NAME[:P,...]")]
    pub named: Option<String>,
    /// Inline graph6 string; "-" reads one line from stdin
    #[arg(long, value_name = "G6")]
    pub graph6: Option<String>,
    /// Edge-list text, e.g. "n=4; 0-1, 1-2"
    #[arg(long, value_name = "EDGES")]
    pub edges: Option<String>,
    /// File containing a graph6 line or an edge list
    #[arg(long, value_name = "PATH")]
    pub file: Option<PathBuf>,
}

impl GraphInput {
    pub fn load(&self) -> Result<SimpleGraph> {
        load_graph(&self.named, &self.graph6, &self.edges, &self.file)
    }
}

/// Second graph argument for minor containment queries.
#[derive(Debug, Args)]
pub struct MinorInput {
    /// Named construction for the candidate minor
    #[arg(long, value_name = "NAME[:P,...]")]
    pub minor_named: Option<String>,
    /// Inline graph6 for the candidate minor
    #[arg(long, value_name = "G6")]
    pub minor_graph6: Option<String>,
    /// Edge-list text for the candidate minor
    #[arg(long, value_name = "EDGES")]
    pub minor_edges: Option<String>,
    /// File for the candidate minor
    #[arg(long, value_name = "PATH")]
    pub minor_file: Option<PathBuf>,
}

impl MinorInput {
    pub fn load(&self) -> Result<SimpleGraph> {
        load_graph(
            &self.minor_named,
            &self.minor_graph6,
            &self.minor_edges,
            &self.minor_file,
        )
    }
}

fn load_graph(
    named: &Option<String>,
    graph6: &Option<String>,
    edges: &Option<String>,
    file: &Option<PathBuf>,
) -> Result<SimpleGraph> {
    let sources = [
        named.is_some(),
        graph6.is_some(),
        edges.is_some(),
        file.is_some(),
    ];
    match sources.iter().filter(|s| **s).count() {
        0 => bail!("no graph given: use --named, --graph6, --edges, or --file"),
        1 => {}
        _ => bail!("give exactly one graph source"),
    }
    if let Some(spec) = named {
        return parse_named(spec);
    }
    if let Some(g6) = graph6 {
        let text = if g6 == "-" {
            read_stdin_line()?
        } else {
            g6.clone()
        };
        return Ok(decode_graph6(&text)?);
    }
    if let Some(text) = edges {
        return Ok(parse_edge_list(text)?);
    }
    let path = file.as_ref().expect("checked above");
    let text =
        std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    let line = text
        .lines()
        .map(str::trim)
        .find(|l| !l.is_empty())
        .ok_or_else(|| anyhow!("{} is empty", path.display()))?;
    if line.starts_with("n=") || line.starts_with("n =") {
        Ok(parse_edge_list(line)?)
    } else {
        Ok(decode_graph6(line)?)
    }
}

pub fn parse_named(spec: &str) -> Result<SimpleGraph> {
    let (name, params) = match spec.split_once(':') {
        Some((name, rest)) => {
            let params: Vec<usize> = rest
                .split(',')
                .map(|p| {
                    p.trim()
                        .parse::<usize>()
                        .map_err(|_| anyhow!("bad parameter `{p}` in `{spec}`"))
                })
                .collect::<Result<_>>()?;
            (name, params)
        }
        None => (spec, Vec::new()),
    };
    Ok(make_named(name.trim(), &params)?)
}

fn read_stdin_line() -> Result<String> {
    let mut buf = String::new();
    std::io::stdin()
        .read_to_string(&mut buf)
        .context("reading stdin")?;
    buf.lines()
        .map(str::trim)
        .find(|l| !l.is_empty())
        .map(str::to_string)
        .ok_or_else(|| anyhow!("stdin was empty"))
}

/// Multigraph text source (`n=<k>; u-v:mult, ...; loops v:count`).
pub fn load_multigraph(text: &Option<String>, file: &Option<PathBuf>) -> Result<Multigraph> {
    match (text, file) {
        (Some(t), None) => Ok(parse_multigraph(t)?),
        (None, Some(p)) => {
            let text =
                std::fs::read_to_string(p).with_context(|| format!("reading {}", p.display()))?;
            let line = text
                .lines()
                .map(str::trim)
                .find(|l| !l.is_empty())
                .ok_or_else(|| anyhow!("{} is empty", p.display()))?;
            Ok(parse_multigraph(line)?)
        }
        (None, None) => bail!("no multigraph given: use --mg or --file"),
        (Some(_), Some(_)) => bail!("give exactly one multigraph source"),
    }
}

/// Parses a comma-separated vertex list into a mask.
pub fn parse_vertex_mask(list: &str, n: usize) -> Result<u32> {
    let mut mask = 0u32;
    for tok in list.split(',') {
        let tok = tok.trim();
        if tok.is_empty() {
            continue;
        }
        let v: usize = tok
            .parse()
            .map_err(|_| anyhow!("bad vertex `{tok}` in shared list"))?;
        if v >= n {
            bail!("vertex {v} out of range for a graph on {n} vertices");
        }
        mask |= 1 << v;
    }
    Ok(mask)
}
