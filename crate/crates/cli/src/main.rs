//! `mdl`: exact density/rank calculus on small graphs and their minors.

mod input;
mod output;

use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};

use mdl_core::connectivity::{blocks, ear_decomposition};
use mdl_core::enumerate::{enumerate_all, Connectivity, EnumerationFilter};
use mdl_core::fan::{apex_fan, build_fan, component_family_limiting_density, FanSpec};
use mdl_core::graph::SimpleGraph;
use mdl_core::graph6::{decode_graph6, encode_graph6};
use mdl_core::minor::{is_minor, is_rank_minimal, MinorEngine};
use mdl_core::multigraph::{
    mg_component_family_density, mg_densest_minor, mg_is_density_minimal, render_multigraph,
    MgFamilyDescriptor,
};
use mdl_core::rational::parse_rational;
use mdl_core::spectrum::{
    enumerate_density_minimal, next_density, predicted_low_spectrum, verify_fan_minimality,
    verify_low_density_classification, verify_multigraphs, verify_rank4,
    verify_rank_minimal_blocks,
};

use input::{load_multigraph, parse_vertex_mask, GraphInput, MinorInput};
use output::{mask_to_list, witness_json, OutputOpts};

const DEFAULT_VERIFY_MAX_N: usize = 8;

#[derive(Parser)]
#[command(
    name = "mdl",
    about = "Graph-minor density laboratory: exact densities, densest minors, fans, and exhaustive verification on desk-scale graphs",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct GuardOpts {
    /// Allow sizes above the guardrail (MDL_MAX_N, default 10)
    #[arg(long)]
    unsafe_large: bool,
    /// Persist the densest-minor memo between runs
    #[arg(long, value_name = "PATH")]
    cache: Option<PathBuf>,
}

impl GuardOpts {
    fn guardrail(&self) -> usize {
        std::env::var("MDL_MAX_N")
            .ok()
            .and_then(|v| v.parse().ok())
            .unwrap_or(mdl_core::DEFAULT_GUARDRAIL)
    }

    fn engine_for(&self, needed: usize) -> Result<MinorEngine> {
        let limit = self.guardrail();
        if needed > limit && !self.unsafe_large {
            bail!("size {needed} exceeds the guardrail of {limit}; pass --unsafe-large to proceed");
        }
        let mut engine = MinorEngine::with_guardrail(needed.max(limit));
        if let Some(path) = &self.cache {
            load_cache(&mut engine, path);
        }
        Ok(engine)
    }

    fn save(&self, engine: &MinorEngine) -> Result<()> {
        if let Some(path) = &self.cache {
            save_cache(engine, path)?;
        }
        Ok(())
    }
}

fn load_cache(engine: &mut MinorEngine, path: &PathBuf) {
    let Ok(text) = std::fs::read_to_string(path) else {
        return; // missing cache is a cold start, not an error
    };
    let mut entries = Vec::new();
    for line in text.lines() {
        let line = line.trim();
        if line.is_empty() {
            continue;
        }
        let parsed = line
            .split_once('\t')
            .and_then(|(g6, d)| decode_graph6(g6).ok().zip(parse_rational(d).ok()));
        match parsed {
            Some((g, d)) => entries.push((g, d)),
            None => {
                eprintln!(
                    "warning: cache {} is corrupt; starting cold",
                    path.display()
                );
                return;
            }
        }
    }
    for (g, d) in entries {
        engine.seed_memo(&g, d);
    }
}

fn save_cache(engine: &MinorEngine, path: &PathBuf) -> Result<()> {
    let mut lines: Vec<String> = engine
        .memo_entries()
        .map(|(g, d)| format!("{}\t{}", encode_graph6(g), d))
        .collect();
    lines.sort_unstable();
    lines.push(String::new());
    std::fs::write(path, lines.join("\n"))
        .with_context(|| format!("writing cache {}", path.display()))?;
    Ok(())
}

#[derive(Clone, Copy, ValueEnum)]
enum ConnectivityArg {
    Any,
    Connected,
    Biconnected,
}

impl From<ConnectivityArg> for Connectivity {
    fn from(c: ConnectivityArg) -> Connectivity {
        match c {
            ConnectivityArg::Any => Connectivity::Any,
            ConnectivityArg::Connected => Connectivity::Connected,
            ConnectivityArg::Biconnected => Connectivity::Biconnected,
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Exact density m/n
    Density {
        #[command(flatten)]
        input: GraphInput,
        #[command(flatten)]
        out: OutputOpts,
    },
    /// Cycle rank m − n + c
    Rank {
        #[command(flatten)]
        input: GraphInput,
        #[command(flatten)]
        out: OutputOpts,
    },
    /// Blocks and articulation vertices
    Blocks {
        #[command(flatten)]
        input: GraphInput,
        #[command(flatten)]
        out: OutputOpts,
    },
    /// Open ear decomposition of a biconnected graph
    Ears {
        #[command(flatten)]
        input: GraphInput,
        #[command(flatten)]
        out: OutputOpts,
    },
    /// Test whether one graph is a minor of another
    MinorTest {
        #[command(flatten)]
        host: GraphInput,
        #[command(flatten)]
        minor: MinorInput,
        #[command(flatten)]
        out: OutputOpts,
    },
    /// Densest minor with a branch-set witness
    DensestMinor {
        #[command(flatten)]
        input: GraphInput,
        #[command(flatten)]
        guard: GuardOpts,
        #[command(flatten)]
        out: OutputOpts,
    },
    /// Density-minimality certificate
    CheckMinimal {
        #[command(flatten)]
        input: GraphInput,
        #[command(flatten)]
        guard: GuardOpts,
        #[command(flatten)]
        out: OutputOpts,
    },
    /// Rank-minimality verdict
    CheckRankMinimal {
        #[command(flatten)]
        input: GraphInput,
        #[command(flatten)]
        out: OutputOpts,
    },
    /// Build Fan(G, S, k)
    Fan {
        #[command(flatten)]
        input: GraphInput,
        /// Shared vertices, comma separated (empty for none)
        #[arg(long, value_name = "V,V,...", default_value = "")]
        shared: String,
        /// Number of copies
        #[arg(long, short = 'k', value_name = "K")]
        count: usize,
        #[command(flatten)]
        out: OutputOpts,
    },
    /// Add an apex to G and fan k copies around it
    ApexFan {
        #[command(flatten)]
        input: GraphInput,
        /// Number of copies
        #[arg(long, short = 'k', value_name = "K")]
        count: usize,
        #[command(flatten)]
        out: OutputOpts,
    },
    /// Limiting density of the component family of G
    CfDensity {
        #[command(flatten)]
        input: GraphInput,
        #[command(flatten)]
        guard: GuardOpts,
        #[command(flatten)]
        out: OutputOpts,
    },
    /// Isomorph-free enumeration under filters
    Enumerate {
        #[arg(long, value_name = "N")]
        max_n: usize,
        #[arg(long, value_enum, default_value = "connected")]
        connectivity: ConnectivityArg,
        #[arg(long, value_name = "R")]
        exact_rank: Option<usize>,
        #[arg(long, value_name = "M")]
        max_edges: Option<usize>,
        /// Density bound m/n ≤ p/q (strict with --strict-density)
        #[arg(long, value_name = "P/Q")]
        max_density: Option<String>,
        #[arg(long)]
        strict_density: bool,
        #[command(flatten)]
        out: OutputOpts,
    },
    /// Density-minimal spectrum up to max-n
    Spectrum {
        #[arg(long, value_name = "N", default_value_t = DEFAULT_VERIFY_MAX_N)]
        max_n: usize,
        /// Exclusive density cap, e.g. 3/2
        #[arg(long, value_name = "P/Q")]
        cap: Option<String>,
        /// Print the predicted spectrum below 3/2 instead (family index bound)
        #[arg(long, value_name = "COUNT")]
        predicted: Option<usize>,
        #[command(flatten)]
        guard: GuardOpts,
        #[command(flatten)]
        out: OutputOpts,
    },
    /// Smallest density-minimal density above a threshold (bounded search)
    NextDensity {
        /// Threshold, e.g. 4/3
        #[arg(long, value_name = "P/Q")]
        above: String,
        #[arg(long, value_name = "N", default_value_t = DEFAULT_VERIFY_MAX_N)]
        max_n: usize,
        #[command(flatten)]
        guard: GuardOpts,
        #[command(flatten)]
        out: OutputOpts,
    },
    /// Exhaustive verification checks; exit 1 on failure
    Verify {
        #[command(subcommand)]
        check: VerifyCheck,
    },
    /// Multigraph operations
    Mg {
        #[command(subcommand)]
        cmd: MgCommand,
    },
    /// Encode a graph as graph6
    Encode {
        #[command(flatten)]
        input: GraphInput,
        #[command(flatten)]
        out: OutputOpts,
    },
    /// Decode graph6 to an edge list
    Decode {
        #[command(flatten)]
        input: GraphInput,
        #[command(flatten)]
        out: OutputOpts,
    },
}

#[derive(Subcommand)]
enum VerifyCheck {
    /// Classification of density-minimal densities below 3/2
    LowSpectrum {
        #[arg(long, value_name = "N", default_value_t = DEFAULT_VERIFY_MAX_N)]
        max_n: usize,
        /// Negative control: drop one density from the predicted set
        #[arg(long, value_name = "P/Q")]
        drop_density: Option<String>,
        #[command(flatten)]
        guard: GuardOpts,
        #[command(flatten)]
        out: OutputOpts,
    },
    /// Every biconnected rank-4 graph has a minor of density ≥ 3/2
    Rank4 {
        #[arg(long, value_name = "N", default_value_t = DEFAULT_VERIFY_MAX_N)]
        max_n: usize,
        #[command(flatten)]
        guard: GuardOpts,
        #[command(flatten)]
        out: OutputOpts,
    },
    /// The five rank-minimal biconnected graphs of rank 1..3
    Blocks {
        #[command(flatten)]
        out: OutputOpts,
    },
    /// Structure search equals brute force on small fans
    FanMinimality {
        #[command(flatten)]
        guard: GuardOpts,
        #[command(flatten)]
        out: OutputOpts,
    },
    /// Multigraph classification at n ≤ 4, m ≤ 6
    Multi {
        #[command(flatten)]
        out: OutputOpts,
    },
}

#[derive(Subcommand)]
enum MgCommand {
    /// Density and rank of a multigraph
    Density {
        #[arg(long, value_name = "TEXT")]
        mg: Option<String>,
        #[arg(long, value_name = "PATH")]
        file: Option<PathBuf>,
        #[command(flatten)]
        out: OutputOpts,
    },
    /// Densest minor (closed form)
    DensestMinor {
        #[arg(long, value_name = "TEXT")]
        mg: Option<String>,
        #[arg(long, value_name = "PATH")]
        file: Option<PathBuf>,
        #[command(flatten)]
        out: OutputOpts,
    },
    /// Density-minimality verdict
    CheckMinimal {
        #[arg(long, value_name = "TEXT")]
        mg: Option<String>,
        #[arg(long, value_name = "PATH")]
        file: Option<PathBuf>,
        #[command(flatten)]
        out: OutputOpts,
    },
    /// Limiting density of a component family from generators
    FamilyDensity {
        /// Generator multigraph (repeatable)
        #[arg(long, value_name = "TEXT")]
        mg: Vec<String>,
        #[command(flatten)]
        out: OutputOpts,
    },
}

fn main() -> ExitCode {
    // die quietly when a pipe closes early (e.g. `mdl enumerate | head`)
    #[cfg(unix)]
    unsafe {
        libc::signal(libc::SIGPIPE, libc::SIG_DFL);
    }
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

fn run(command: Command) -> Result<u8> {
    match command {
        Command::Density { input, out } => {
            let g = input.load()?;
            out.emit_rational("density", g.density())?;
        }
        Command::Rank { input, out } => {
            let g = input.load()?;
            out.emit_integer("rank", g.rank())?;
        }
        Command::Blocks { input, out } => {
            let g = input.load()?;
            let d = blocks(&g);
            let block_lists: Vec<Vec<usize>> = d.blocks.iter().map(|&b| mask_to_list(b)).collect();
            let articulation = mask_to_list(d.articulation);
            if out.json() {
                out.print_json(&serde_json::json!({
                    "blocks": block_lists,
                    "articulation": articulation,
                }))?;
            } else {
                for (i, b) in block_lists.iter().enumerate() {
                    println!("block {i}: {}", output::join(b));
                }
                println!("articulation: {}", output::join(&articulation));
            }
        }
        Command::Ears { input, out } => {
            let g = input.load()?;
            let ears = ear_decomposition(&g)?;
            if out.json() {
                let ears_json: Vec<Vec<[usize; 2]>> = ears
                    .ears
                    .iter()
                    .map(|ear| ear.iter().map(|&(a, b)| [a, b]).collect())
                    .collect();
                out.print_json(&serde_json::json!({ "ears": ears_json }))?;
            } else {
                for (i, ear) in ears.ears.iter().enumerate() {
                    let walk: Vec<String> = ear.iter().map(|&(a, b)| format!("{a}-{b}")).collect();
                    println!("ear {i}: {}", walk.join(" "));
                }
            }
        }
        Command::MinorTest { host, minor, out } => {
            let host_g = host.load()?;
            let minor_g = minor.load()?;
            match is_minor(&minor_g, &host_g) {
                Some(w) => {
                    if out.json() {
                        out.print_json(&serde_json::json!({
                            "present": true,
                            "witness": witness_json(&w),
                        }))?;
                    } else {
                        println!("present");
                        for (i, &b) in w.branch_sets.iter().enumerate() {
                            println!("branch set {i}: {}", output::join(&mask_to_list(b)));
                        }
                    }
                }
                None => {
                    if out.json() {
                        out.print_json(&serde_json::json!({ "present": false }))?;
                    } else {
                        println!("absent");
                    }
                }
            }
        }
        Command::DensestMinor { input, guard, out } => {
            let g = input.load()?;
            let mut engine = guard.engine_for(g.n())?;
            let (best, density, witness) = engine.densest_minor(&g)?;
            guard.save(&engine)?;
            if out.json() {
                out.print_json(&serde_json::json!({
                    "graph6": encode_graph6(&best),
                    "density": density.to_string(),
                    "witness": witness_json(&witness),
                }))?;
            } else {
                println!("graph6: {}", encode_graph6(&best));
                out.print_rational_line("density", density);
                for (i, &b) in witness.branch_sets.iter().enumerate() {
                    println!("branch set {i}: {}", output::join(&mask_to_list(b)));
                }
            }
        }
        Command::CheckMinimal { input, guard, out } => {
            let g = input.load()?;
            let mut engine = guard.engine_for(g.n())?;
            let cert = engine.certify_density_minimal(&g)?;
            guard.save(&engine)?;
            if out.json() {
                let best = cert.best_proper_minor.as_ref().map(|(h, d, w)| {
                    serde_json::json!({
                        "graph6": encode_graph6(h),
                        "density": d.to_string(),
                        "witness": witness_json(w),
                    })
                });
                out.print_json(&serde_json::json!({
                    "verdict": cert.verdict,
                    "density": cert.subject_density.to_string(),
                    "best_proper_minor": best,
                }))?;
            } else {
                println!("verdict: {}", cert.verdict);
                out.print_rational_line("density", cert.subject_density);
                if let Some((h, d, _)) = &cert.best_proper_minor {
                    println!("best proper minor: {} with density {}", encode_graph6(h), d);
                }
            }
        }
        Command::CheckRankMinimal { input, out } => {
            let g = input.load()?;
            let verdict = is_rank_minimal(&g);
            if out.json() {
                out.print_json(&serde_json::json!({
                    "verdict": verdict,
                    "rank": g.rank(),
                }))?;
            } else {
                println!("verdict: {verdict}");
                println!("rank: {}", g.rank());
            }
        }
        Command::Fan {
            input,
            shared,
            count,
            out,
        } => {
            let base = input.load()?;
            let mask = parse_vertex_mask(&shared, base.n())?;
            let spec = FanSpec::new(base, mask, count)?;
            let fan = build_fan(&spec)?;
            emit_graph_summary(&out, &fan)?;
        }
        Command::ApexFan { input, count, out } => {
            let g = input.load()?;
            let (fan, predicted) = apex_fan(&g, count)?;
            if out.json() {
                out.print_json(&serde_json::json!({
                    "graph6": encode_graph6(&fan),
                    "n": fan.n(),
                    "m": fan.m(),
                    "predicted_density": predicted.to_string(),
                    "measured_density": fan.density().to_string(),
                }))?;
            } else {
                println!("graph6: {}", encode_graph6(&fan));
                println!("n: {}  m: {}", fan.n(), fan.m());
                out.print_rational_line("predicted density", predicted);
                out.print_rational_line("measured density", fan.density());
            }
        }
        Command::CfDensity { input, guard, out } => {
            let g = input.load()?;
            let mut engine = guard.engine_for(g.n())?;
            let d = component_family_limiting_density(&mut engine, &g)?;
            guard.save(&engine)?;
            out.emit_rational("limiting_density", d)?;
        }
        Command::Enumerate {
            max_n,
            connectivity,
            exact_rank,
            max_edges,
            max_density,
            strict_density,
            out,
        } => {
            let mut filter = EnumerationFilter::new(max_n, connectivity.into());
            if let Some(r) = exact_rank {
                filter = filter.with_exact_rank(r);
            }
            if let Some(m) = max_edges {
                filter = filter.with_max_edges(m);
            }
            if let Some(d) = &max_density {
                filter = filter.with_max_density(parse_rational(d)?, strict_density);
            }
            let graphs = enumerate_all(&filter)?;
            match out.format_kind() {
                output::Kind::Csv => {
                    println!("graph6,n,m,density_num,density_den");
                    for g in &graphs {
                        let d = g.density();
                        println!(
                            "{},{},{},{},{}",
                            encode_graph6(g),
                            g.n(),
                            g.m(),
                            d.numer(),
                            d.denom()
                        );
                    }
                }
                output::Kind::Json => {
                    let items: Vec<serde_json::Value> = graphs
                        .iter()
                        .map(|g| {
                            serde_json::json!({
                                "graph6": encode_graph6(g),
                                "n": g.n(),
                                "m": g.m(),
                                "density": g.density().to_string(),
                            })
                        })
                        .collect();
                    out.print_json(&serde_json::json!({ "graphs": items }))?;
                }
                output::Kind::Text => {
                    for g in &graphs {
                        println!("{}", encode_graph6(g));
                    }
                }
            }
        }
        Command::Spectrum {
            max_n,
            cap,
            predicted,
            guard,
            out,
        } => {
            if let Some(count) = predicted {
                let seq = predicted_low_spectrum(count);
                match out.format_kind() {
                    output::Kind::Csv => {
                        println!("density_num,density_den");
                        for d in &seq {
                            println!("{},{}", d.numer(), d.denom());
                        }
                    }
                    output::Kind::Json => {
                        let items: Vec<String> = seq.iter().map(|d| d.to_string()).collect();
                        out.print_json(&serde_json::json!({ "predicted": items }))?;
                    }
                    output::Kind::Text => {
                        for d in &seq {
                            println!("{d}");
                        }
                    }
                }
                return Ok(0);
            }
            let cap = cap.map(|c| parse_rational(&c)).transpose()?;
            if max_n > guard.guardrail() && !guard.unsafe_large {
                bail!(
                    "max-n {max_n} exceeds the guardrail of {}; pass --unsafe-large",
                    guard.guardrail()
                );
            }
            let mut engine = guard.engine_for(max_n)?;
            let report = enumerate_density_minimal(&mut engine, max_n, cap)?;
            guard.save(&engine)?;
            match out.format_kind() {
                output::Kind::Csv => {
                    println!("density_num,density_den,witness_graph6,n,m");
                    for e in &report.entries {
                        println!(
                            "{},{},{},{},{}",
                            e.density.numer(),
                            e.density.denom(),
                            encode_graph6(&e.witness),
                            e.n,
                            e.m
                        );
                    }
                }
                output::Kind::Json => {
                    let items: Vec<serde_json::Value> = report
                        .entries
                        .iter()
                        .map(|e| {
                            serde_json::json!({
                                "density": e.density.to_string(),
                                "graph6": encode_graph6(&e.witness),
                                "n": e.n,
                                "m": e.m,
                            })
                        })
                        .collect();
                    out.print_json(&serde_json::json!({
                        "max_n": report.max_n,
                        "cap": report.density_cap.map(|c| c.to_string()),
                        "entries": items,
                    }))?;
                }
                output::Kind::Text => {
                    for e in &report.entries {
                        println!(
                            "{}  {}  n={} m={}",
                            e.density,
                            encode_graph6(&e.witness),
                            e.n,
                            e.m
                        );
                    }
                }
            }
        }
        Command::NextDensity {
            above,
            max_n,
            guard,
            out,
        } => {
            let threshold = parse_rational(&above)?;
            let mut engine = guard.engine_for(max_n)?;
            let next = next_density(&mut engine, threshold, max_n)?;
            guard.save(&engine)?;
            if out.json() {
                out.print_json(&serde_json::json!({
                    "above": threshold.to_string(),
                    "max_n": max_n,
                    "next_density": next.map(|d| d.to_string()),
                }))?;
            } else {
                match next {
                    Some(d) => println!("{d}"),
                    None => println!("none"),
                }
            }
        }
        Command::Verify { check } => return run_verify(check),
        Command::Mg { cmd } => return run_mg(cmd),
        Command::Encode { input, out } => {
            let g = input.load()?;
            if out.json() {
                out.print_json(&serde_json::json!({ "graph6": encode_graph6(&g) }))?;
            } else {
                println!("{}", encode_graph6(&g));
            }
        }
        Command::Decode { input, out } => {
            let g = input.load()?;
            emit_graph_summary(&out, &g)?;
        }
    }
    Ok(0)
}

fn emit_graph_summary(out: &OutputOpts, g: &SimpleGraph) -> Result<()> {
    if out.json() {
        out.print_json(&serde_json::json!({
            "graph6": encode_graph6(g),
            "edges": mdl_core::graph::render_edge_list(g),
            "n": g.n(),
            "m": g.m(),
            "density": g.density().to_string(),
        }))?;
    } else {
        println!("graph6: {}", encode_graph6(g));
        println!("edges: {}", mdl_core::graph::render_edge_list(g));
        println!("n: {}  m: {}", g.n(), g.m());
        out.print_rational_line("density", g.density());
    }
    Ok(())
}

fn run_verify(check: VerifyCheck) -> Result<u8> {
    let (report, out) = match check {
        VerifyCheck::LowSpectrum {
            max_n,
            drop_density,
            guard,
            out,
        } => {
            if max_n > guard.guardrail() && !guard.unsafe_large {
                bail!(
                    "max-n {max_n} exceeds the guardrail of {}; pass --unsafe-large",
                    guard.guardrail()
                );
            }
            let drop = drop_density.map(|d| parse_rational(&d)).transpose()?;
            let mut engine = guard.engine_for(max_n)?;
            let report = verify_low_density_classification(&mut engine, max_n, drop)?;
            guard.save(&engine)?;
            (report, out)
        }
        VerifyCheck::Rank4 { max_n, guard, out } => {
            if max_n > guard.guardrail() && !guard.unsafe_large {
                bail!(
                    "max-n {max_n} exceeds the guardrail of {}; pass --unsafe-large",
                    guard.guardrail()
                );
            }
            let mut engine = guard.engine_for(max_n)?;
            let report = verify_rank4(&mut engine, max_n)?;
            guard.save(&engine)?;
            (report, out)
        }
        VerifyCheck::Blocks { out } => (verify_rank_minimal_blocks()?, out),
        VerifyCheck::FanMinimality { guard, out } => {
            let mut engine = guard.engine_for(9)?;
            let report = verify_fan_minimality(&mut engine)?;
            guard.save(&engine)?;
            (report, out)
        }
        VerifyCheck::Multi { out } => (verify_multigraphs()?, out),
    };
    if out.json() {
        out.print_json(&serde_json::to_value(&report)?)?;
    } else {
        println!("check: {}", report.check);
        for (k, v) in &report.params {
            println!("param {k}: {v}");
        }
        for (k, v) in &report.counts {
            println!("count {k}: {v}");
        }
        println!("wall_time_ms: {}", report.wall_time_ms);
        if report.pass {
            println!("pass");
        } else {
            println!("FAIL");
            for c in &report.counterexamples {
                println!("counterexample: {c}");
            }
        }
    }
    Ok(if report.pass { 0 } else { 1 })
}

fn run_mg(cmd: MgCommand) -> Result<u8> {
    match cmd {
        MgCommand::Density { mg, file, out } => {
            let g = load_multigraph(&mg, &file)?;
            if out.json() {
                out.print_json(&serde_json::json!({
                    "density": g.density().to_string(),
                    "rank": g.rank(),
                    "n": g.n(),
                    "m": g.m(),
                }))?;
            } else {
                out.print_rational_line("density", g.density());
                println!("rank: {}", g.rank());
            }
        }
        MgCommand::DensestMinor { mg, file, out } => {
            let g = load_multigraph(&mg, &file)?;
            let (w, d) = mg_densest_minor(&g);
            if out.json() {
                out.print_json(&serde_json::json!({
                    "minor": render_multigraph(&w),
                    "density": d.to_string(),
                }))?;
            } else {
                println!("minor: {}", render_multigraph(&w));
                out.print_rational_line("density", d);
            }
        }
        MgCommand::CheckMinimal { mg, file, out } => {
            let g = load_multigraph(&mg, &file)?;
            let verdict = mg_is_density_minimal(&g)?;
            if out.json() {
                out.print_json(&serde_json::json!({
                    "verdict": verdict,
                    "density": g.density().to_string(),
                }))?;
            } else {
                println!("verdict: {verdict}");
                out.print_rational_line("density", g.density());
            }
        }
        MgCommand::FamilyDensity { mg, out } => {
            let generators = mg
                .iter()
                .map(|t| Ok(mdl_core::multigraph::parse_multigraph(t)?))
                .collect::<Result<Vec<_>>>()?;
            let desc = MgFamilyDescriptor::new(generators)?;
            let d = mg_component_family_density(&desc);
            out.emit_rational("limiting_density", d)?;
        }
    }
    Ok(0)
}
