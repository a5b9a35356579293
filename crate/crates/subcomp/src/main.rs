//! Command-line front end: solving, kernelizing, oracle runs, class
//! recognition, graph generation, and format conversion.

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use sha2::{Digest, Sha256};
use std::io::Read;
use std::time::Instant;
use subcomp::format::{decode_graph6, encode_graph6, parse_edge_list, write_edge_list};
use subcomp::mindeg::{self, MinDegreeError, MinDegreeInstance};
use subcomp::oracle::{self, OracleError, TargetClass};
use subcomp::stardiamond::{self, StarDiamondInstance};
use subcomp::{Answer, Graph, Verdict};

#[derive(Parser)]
#[command(name = "subcomp", version, about = "Subgraph complementation solvers with verified certificates")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Decide whether some subgraph complement of the input lands in the target class.
    Solve {
        #[command(subcommand)]
        target: SolveTarget,
    },
    /// Shrink a min-degree instance to its quadratic kernel.
    Kernelize {
        /// Minimum-degree target.
        #[arg(long)]
        k: usize,
        #[command(flatten)]
        io: IoArgs,
    },
    /// Brute-force ground truth over all 2^n subsets (desk scale only).
    Oracle {
        /// Target class: min-degree:<k> or star-diamond:<t>.
        #[arg(long)]
        target: String,
        /// List every solution subset instead of just the first.
        #[arg(long)]
        all: bool,
        #[command(flatten)]
        io: IoArgs,
    },
    /// Test whether the input graph itself is in the target class.
    Recognize {
        /// Target class: min-degree:<k> or star-diamond:<t>.
        #[arg(long)]
        target: String,
        #[command(flatten)]
        io: IoArgs,
    },
    /// Emit a generated graph on standard output.
    Gen {
        #[arg(long, value_enum)]
        family: Family,
        /// Vertex count (path, cycle, complete, gnp).
        #[arg(long)]
        n: Option<usize>,
        /// Edge probability (gnp).
        #[arg(long)]
        p: Option<f64>,
        /// Leaf count (star).
        #[arg(long)]
        t: Option<usize>,
        /// RNG seed (gnp); the generator is ChaCha8 seeded with this value.
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Constituent family for disjoint-union.
        #[arg(long, value_enum)]
        of: Option<Family>,
        /// Number of copies for disjoint-union.
        #[arg(long)]
        count: Option<usize>,
        /// Output format.
        #[arg(long, value_enum, default_value_t = Format::Graph6)]
        format: Format,
    },
    /// Convert between graph formats.
    Convert {
        #[arg(long, value_enum)]
        from: Format,
        #[arg(long, value_enum)]
        to: Format,
        /// Input path, or - for standard input.
        #[arg(long, default_value = "-")]
        input: String,
    },
}

#[derive(Subcommand)]
enum SolveTarget {
    /// Target class: minimum degree at least k.
    MinDegree {
        #[arg(long)]
        k: usize,
        #[command(flatten)]
        io: IoArgs,
    },
    /// Target class: {K_{1,t}, diamond}-free graphs, t >= 3.
    StarDiamond {
        #[arg(long)]
        t: usize,
        #[command(flatten)]
        io: IoArgs,
    },
}

#[derive(Args)]
struct IoArgs {
    /// Input path, or - for standard input.
    #[arg(long, default_value = "-")]
    input: String,
    /// Input format.
    #[arg(long, value_enum, default_value_t = Format::Graph6)]
    format: Format,
    /// Emit the report as a single JSON object instead of key=value lines.
    #[arg(long)]
    json: bool,
    /// Include the witness set in YES reports (default).
    #[arg(long, overrides_with = "no_certificate")]
    certificate: bool,
    /// Suppress the witness set in reports.
    #[arg(long)]
    no_certificate: bool,
    /// Verification budget for the star-diamond solver.
    #[arg(long)]
    budget: Option<u64>,
    /// Read one graph6 string per input line and emit one report per line.
    #[arg(long)]
    batch: bool,
}

impl IoArgs {
    fn emit_witness(&self) -> bool {
        !self.no_certificate
    }
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Graph6,
    Edgelist,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Family {
    Path,
    Cycle,
    Star,
    Complete,
    Diamond,
    DisjointUnion,
    Gnp,
}

/// Terminal failure with the exit code the shell should see.
struct Failure {
    code: i32,
    message: String,
}

fn usage(message: impl Into<String>) -> Failure {
    Failure { code: 2, message: message.into() }
}

fn budget_refused(message: impl Into<String>) -> Failure {
    Failure { code: 3, message: message.into() }
}

#[derive(Serialize)]
struct RunReport {
    answer: Answer,
    #[serde(skip_serializing_if = "Option::is_none")]
    witness: Option<Vec<usize>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    provenance: Option<String>,
    elapsed_ms: u128,
    input_digest: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    solutions: Option<Vec<Vec<usize>>>,
}

impl RunReport {
    fn from_verdict(v: &Verdict, emit_witness: bool, elapsed_ms: u128, digest: String) -> RunReport {
        RunReport {
            answer: v.answer,
            witness: if emit_witness {
                v.witness.as_ref().map(|w| w.to_vec())
            } else {
                None
            },
            provenance: Some(v.provenance.to_string()),
            elapsed_ms,
            input_digest: digest,
            solutions: None,
        }
    }

    fn print(&self, json: bool, single_line: bool) {
        if json {
            println!("{}", serde_json::to_string(self).expect("report serializes"));
            return;
        }
        let mut fields = vec![format!("answer={}", self.answer)];
        if let Some(w) = &self.witness {
            fields.push(format!("witness={}", fmt_list(w)));
        }
        if let Some(p) = &self.provenance {
            fields.push(format!("provenance={p}"));
        }
        fields.push(format!("elapsed_ms={}", self.elapsed_ms));
        fields.push(format!("input_digest={}", self.input_digest));
        if let Some(sols) = &self.solutions {
            for s in sols {
                fields.push(format!("solution={}", fmt_list(s)));
            }
        }
        if single_line {
            println!("{}", fields.join(" "));
        } else {
            for f in fields {
                println!("{f}");
            }
        }
    }
}

fn fmt_list(items: &[usize]) -> String {
    let inner: Vec<String> = items.iter().map(|v| v.to_string()).collect();
    format!("[{}]", inner.join(","))
}

fn read_input(path: &str) -> Result<String, Failure> {
    if path == "-" {
        let mut text = String::new();
        std::io::stdin()
            .read_to_string(&mut text)
            .map_err(|e| usage(format!("cannot read standard input: {e}")))?;
        Ok(text)
    } else {
        std::fs::read_to_string(path).map_err(|e| usage(format!("cannot read {path}: {e}")))
    }
}

fn parse_graph(text: &str, format: Format) -> Result<Graph, Failure> {
    match format {
        Format::Graph6 => decode_graph6(text.trim()).map_err(|e| usage(format!("bad graph6 input: {e}"))),
        Format::Edgelist => parse_edge_list(text).map_err(|e| usage(format!("bad edge list input: {e}"))),
    }
}

fn write_graph(g: &Graph, format: Format) -> String {
    match format {
        Format::Graph6 => encode_graph6(g),
        Format::Edgelist => write_edge_list(g),
    }
}

/// Content hash of the parsed graph: sha256 over its canonical graph6 form.
fn digest(g: &Graph) -> String {
    format!("sha256:{:x}", Sha256::digest(encode_graph6(g).as_bytes()))
}

fn parse_target(spec: &str) -> Result<TargetClass, Failure> {
    if let Some(k) = spec.strip_prefix("min-degree:") {
        let k: usize = k.parse().map_err(|_| usage(format!("bad min-degree parameter in {spec:?}")))?;
        Ok(TargetClass::MinDegreeAtLeast(k))
    } else if let Some(t) = spec.strip_prefix("star-diamond:") {
        let t: usize = t.parse().map_err(|_| usage(format!("bad star-diamond parameter in {spec:?}")))?;
        if t < 3 {
            return Err(usage("star-diamond requires t >= 3"));
        }
        Ok(TargetClass::StarDiamondFree(t))
    } else {
        Err(usage(format!(
            "unknown target {spec:?}; expected min-degree:<k> or star-diamond:<t>"
        )))
    }
}

fn map_mindeg_err(e: MinDegreeError) -> Failure {
    match e {
        MinDegreeError::BudgetExceeded { .. } => budget_refused(format!("budget refused: {e}")),
        other => usage(format!("min-degree solve failed: {other}")),
    }
}

fn solve_min_degree(g: &Graph, k: usize) -> Result<Verdict, Failure> {
    let inst = MinDegreeInstance::new(g.clone(), k).map_err(map_mindeg_err)?;
    mindeg::solve(&inst).map_err(map_mindeg_err)
}

fn solve_star_diamond(g: &Graph, t: usize, budget: Option<u64>) -> Result<Verdict, Failure> {
    let inst = StarDiamondInstance::new(g.clone(), t)
        .map_err(|e| usage(format!("star-diamond solve failed: {e}")))?;
    let result = match budget {
        Some(b) => stardiamond::solve_with_budget(&inst, b),
        None => stardiamond::solve(&inst),
    };
    result.map_err(|e| budget_refused(format!("budget refused: {e}")))
}

fn run_oracle(g: &Graph, target: &TargetClass, all: bool) -> Result<(Verdict, Option<Vec<Vec<usize>>>), Failure> {
    let map_err = |e: OracleError| budget_refused(format!("oracle refused: {e}"));
    let verdict = oracle::brute_force(g, target).map_err(map_err)?;
    let solutions = if all {
        let sols = oracle::all_solutions(g, target).map_err(map_err)?;
        Some(sols.iter().map(|s| s.to_vec()).collect())
    } else {
        None
    };
    Ok((verdict, solutions))
}

/// Run one decision per input graph, honoring batch mode.
fn for_each_input_graph(
    io: &IoArgs,
    mut decide: impl FnMut(&Graph) -> Result<RunReport, Failure>,
) -> Result<(), Failure> {
    let text = read_input(&io.input)?;
    if io.batch {
        for line in text.lines() {
            let line = line.trim();
            if line.is_empty() {
                continue;
            }
            let g = decode_graph6(line).map_err(|e| usage(format!("bad graph6 line {line:?}: {e}")))?;
            decide(&g)?.print(io.json, true);
        }
        Ok(())
    } else {
        let g = parse_graph(&text, io.format)?;
        decide(&g)?.print(io.json, false);
        Ok(())
    }
}

fn cmd_solve(target: SolveTarget) -> Result<(), Failure> {
    match target {
        SolveTarget::MinDegree { k, io } => for_each_input_graph(&io, |g| {
            let start = Instant::now();
            let v = solve_min_degree(g, k)?;
            Ok(RunReport::from_verdict(&v, io.emit_witness(), start.elapsed().as_millis(), digest(g)))
        }),
        SolveTarget::StarDiamond { t, io } => for_each_input_graph(&io, |g| {
            let start = Instant::now();
            let v = solve_star_diamond(g, t, io.budget)?;
            Ok(RunReport::from_verdict(&v, io.emit_witness(), start.elapsed().as_millis(), digest(g)))
        }),
    }
}

fn cmd_kernelize(k: usize, io: IoArgs) -> Result<(), Failure> {
    let text = read_input(&io.input)?;
    let g = parse_graph(&text, io.format)?;
    let inst = MinDegreeInstance::new(g, k).map_err(map_mindeg_err)?;
    let kernel = mindeg::kernelize(&inst);
    if io.json {
        #[derive(Serialize)]
        struct KernelReport {
            k: usize,
            graph: String,
        }
        let report = KernelReport {
            k: kernel.k,
            graph: encode_graph6(&kernel.graph),
        };
        println!("{}", serde_json::to_string(&report).expect("report serializes"));
    } else {
        println!("k={}", kernel.k);
        print!("{}", ensure_newline(write_graph(&kernel.graph, io.format)));
    }
    Ok(())
}

fn cmd_oracle(target_spec: &str, all: bool, io: IoArgs) -> Result<(), Failure> {
    let target = parse_target(target_spec)?;
    for_each_input_graph(&io, |g| {
        let start = Instant::now();
        let (v, solutions) = run_oracle(g, &target, all)?;
        let mut report =
            RunReport::from_verdict(&v, io.emit_witness(), start.elapsed().as_millis(), digest(g));
        report.solutions = solutions;
        Ok(report)
    })
}

fn cmd_recognize(target_spec: &str, io: IoArgs) -> Result<(), Failure> {
    let target = parse_target(target_spec)?;
    for_each_input_graph(&io, |g| {
        let start = Instant::now();
        let member = target.contains(g);
        Ok(RunReport {
            answer: if member { Answer::Yes } else { Answer::No },
            witness: None,
            provenance: None,
            elapsed_ms: start.elapsed().as_millis(),
            input_digest: digest(g),
            solutions: None,
        })
    })
}

fn require_n(n: Option<usize>, family: &str) -> Result<usize, Failure> {
    n.ok_or_else(|| usage(format!("{family} requires --n")))
}

fn build_family(
    family: Family,
    n: Option<usize>,
    p: Option<f64>,
    t: Option<usize>,
    seed: u64,
) -> Result<Graph, Failure> {
    use subcomp::generate;
    match family {
        Family::Path => Ok(generate::path(require_n(n, "path")?)),
        Family::Cycle => {
            let n = require_n(n, "cycle")?;
            if n < 3 {
                return Err(usage("cycle requires --n >= 3"));
            }
            Ok(generate::cycle(n))
        }
        Family::Star => {
            let t = t.ok_or_else(|| usage("star requires --t"))?;
            if t < 1 {
                return Err(usage("star requires --t >= 1"));
            }
            Ok(generate::star(t))
        }
        Family::Complete => Ok(generate::complete(require_n(n, "complete")?)),
        Family::Diamond => Ok(generate::diamond()),
        Family::Gnp => {
            let n = require_n(n, "gnp")?;
            let p = p.ok_or_else(|| usage("gnp requires --p"))?;
            if !(0.0..=1.0).contains(&p) {
                return Err(usage("gnp requires --p in [0,1]"));
            }
            Ok(generate::gnp(n, p, seed))
        }
        Family::DisjointUnion => Err(usage("disjoint-union is not a constituent family")),
    }
}

#[allow(clippy::too_many_arguments)]
fn cmd_gen(
    family: Family,
    n: Option<usize>,
    p: Option<f64>,
    t: Option<usize>,
    seed: u64,
    of: Option<Family>,
    count: Option<usize>,
    format: Format,
) -> Result<(), Failure> {
    use subcomp::generate;
    let g = if family == Family::DisjointUnion {
        let of = of.ok_or_else(|| usage("disjoint-union requires --of <family>"))?;
        let count = count.ok_or_else(|| usage("disjoint-union requires --count"))?;
        if of == Family::DisjointUnion {
            return Err(usage("disjoint-union cannot nest"));
        }
        let part = build_family(of, n, p, t, seed)?;
        let parts: Vec<Graph> = (0..count).map(|_| part.clone()).collect();
        generate::disjoint_union(&parts)
    } else {
        build_family(family, n, p, t, seed)?
    };
    print!("{}", ensure_newline(write_graph(&g, format)));
    Ok(())
}

fn cmd_convert(from: Format, to: Format, input: &str) -> Result<(), Failure> {
    let text = read_input(input)?;
    let g = parse_graph(&text, from)?;
    print!("{}", ensure_newline(write_graph(&g, to)));
    Ok(())
}

fn ensure_newline(mut s: String) -> String {
    if !s.ends_with('\n') {
        s.push('\n');
    }
    s
}

fn real_main() -> Result<(), Failure> {
    let cli = Cli::parse();
    match cli.command {
        Command::Solve { target } => cmd_solve(target),
        Command::Kernelize { k, io } => cmd_kernelize(k, io),
        Command::Oracle { target, all, io } => cmd_oracle(&target, all, io),
        Command::Recognize { target, io } => cmd_recognize(&target, io),
        Command::Gen { family, n, p, t, seed, of, count, format } => {
            cmd_gen(family, n, p, t, seed, of, count, format)
        }
        Command::Convert { from, to, input } => cmd_convert(from, to, &input),
    }
}

fn main() {
    if let Err(failure) = real_main() {
        eprintln!("error: {}", failure.message);
        std::process::exit(failure.code);
    }
}
