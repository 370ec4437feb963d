//! `gridcycles`: generate point clouds, solve cycle problems on their disk or
//! square graphs, and export kernels and decompositions.
//!
//! Exit codes: 0 YES, 1 NO, 2 error, 3 oracle disagreement.

use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use gridcycles::cliquegrid::{backbone_report, cell_graph, minimal_backbone, CliqueGridInstance};
use gridcycles::cycles::{exact_k_cycle, longest_cycle, longest_path, SolveResult, SolverOptions};
use gridcycles::decomp::{best_effort_decomposition, parse_pace, solver_cell_nctd, verify_tree_decomposition, DEFAULT_NODE_BUDGET};
use gridcycles::gen::{side_for_degree, uniform_cloud};
use gridcycles::geometry::{graph_to_gr, GeometricModel, PointCloud};
use gridcycles::hitting::{cycle_packing, fvs};
use gridcycles::kernel::{kernel_report, turing_kernel, KernelOutput, KernelProblem};
use gridcycles::oracle::{self, OracleBudget};
use gridcycles::witness::{verify_witness, Problem, Witness};
use serde_json::json;

#[derive(Parser, Debug)]
#[command(name = "gridcycles", version, about = "Cycle problems on unit disk and unit square graphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Worker threads (default: all cores). Answers do not depend on it.
    #[arg(long, global = true, env = "GRIDCYCLES_JOBS")]
    jobs: Option<usize>,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Write uniform random points in a box.
    Gen(GenArgs),
    /// Solve one problem on a point file.
    Solve(SolveArgs),
    /// Split an instance into kernel windows.
    Kernelize(KernelizeArgs),
    /// Export a decomposition or derived graph.
    Decompose(DecomposeArgs),
    /// Solve a batch of generated instances and print a table.
    Bench(BenchArgs),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum ModelArg {
    Disk,
    Square,
}

impl From<ModelArg> for GeometricModel {
    fn from(m: ModelArg) -> Self {
        match m {
            ModelArg::Disk => GeometricModel::Disk,
            ModelArg::Square => GeometricModel::Square,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum ProblemArg {
    ExactCycle,
    LongestPath,
    LongestCycle,
    Fvs,
    CyclePacking,
}

impl From<ProblemArg> for Problem {
    fn from(p: ProblemArg) -> Self {
        match p {
            ProblemArg::ExactCycle => Problem::ExactCycle,
            ProblemArg::LongestPath => Problem::LongestPath,
            ProblemArg::LongestCycle => Problem::LongestCycle,
            ProblemArg::Fvs => Problem::Fvs,
            ProblemArg::CyclePacking => Problem::CyclePacking,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum DecompKind {
    Tree,
    Nctd,
    CellGraph,
    Backbone,
}

#[derive(Args, Debug)]
struct GenArgs {
    #[arg(long, env = "GRIDCYCLES_N")]
    n: usize,
    /// Box width; defaults to the side giving `--degree` under the disk model.
    #[arg(long)]
    width: Option<f64>,
    #[arg(long)]
    height: Option<f64>,
    /// Target average degree when the box is not given.
    #[arg(long, default_value_t = 4.0)]
    degree: f64,
    #[arg(long, default_value_t = 0, env = "GRIDCYCLES_SEED")]
    seed: u64,
    #[arg(long, short)]
    out: Option<PathBuf>,
}

#[derive(Args, Debug, Clone)]
struct SolverFlags {
    #[arg(long, value_enum, env = "GRIDCYCLES_PROBLEM")]
    problem: ProblemArg,
    #[arg(long, short, env = "GRIDCYCLES_K")]
    k: usize,
    #[arg(long, value_enum, default_value = "disk", env = "GRIDCYCLES_MODEL")]
    model: ModelArg,
    /// Also run the brute-force oracle and compare.
    #[arg(long, env = "GRIDCYCLES_CHECK")]
    check: bool,
    /// Print the witness of a YES answer.
    #[arg(long, env = "GRIDCYCLES_WITNESS")]
    witness: bool,
    /// Use the worst-case state caps instead of the adaptive ones.
    #[arg(long, env = "GRIDCYCLES_FAITHFUL_CAPS")]
    faithful_caps: bool,
    /// Answer with the brute-force oracle instead of the solver.
    #[arg(long, env = "GRIDCYCLES_ORACLE")]
    oracle: bool,
}

#[derive(Args, Debug)]
struct SolveArgs {
    /// Point file (`x y` per line).
    input: PathBuf,
    #[command(flatten)]
    flags: SolverFlags,
    /// Also write the result record as JSON.
    #[arg(long)]
    json: Option<PathBuf>,
}

#[derive(Args, Debug)]
struct KernelizeArgs {
    input: PathBuf,
    #[arg(long, short, env = "GRIDCYCLES_K")]
    k: usize,
    #[arg(long, value_enum, default_value = "longest-cycle", env = "GRIDCYCLES_PROBLEM")]
    problem: ProblemArg,
    #[arg(long, value_enum, default_value = "disk", env = "GRIDCYCLES_MODEL")]
    model: ModelArg,
    /// Directory for one point file per window.
    #[arg(long)]
    out_dir: Option<PathBuf>,
}

#[derive(Args, Debug)]
struct DecomposeArgs {
    input: PathBuf,
    #[arg(long, value_enum)]
    kind: DecompKind,
    #[arg(long, value_enum, default_value = "disk", env = "GRIDCYCLES_MODEL")]
    model: ModelArg,
    #[arg(long, short)]
    out: Option<PathBuf>,
}

#[derive(Args, Debug)]
struct BenchArgs {
    #[command(flatten)]
    flags: SolverFlags,
    /// Number of seeds, starting at `--seed`.
    #[arg(long, default_value_t = 10)]
    count: u64,
    #[arg(long, default_value_t = 0, env = "GRIDCYCLES_SEED")]
    seed: u64,
    #[arg(long, default_value_t = 30)]
    n: usize,
    #[arg(long, default_value_t = 4.0)]
    degree: f64,
}

fn read_instance(path: &Path, model: ModelArg) -> Result<CliqueGridInstance> {
    let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    let cloud = PointCloud::parse(&text)?;
    Ok(CliqueGridInstance::from_cloud(&cloud, model.into())?)
}

fn write_or_print(out: Option<&Path>, text: &str) -> Result<()> {
    match out {
        Some(p) => fs::write(p, text).with_context(|| format!("writing {}", p.display())),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn run_solver(inst: &CliqueGridInstance, flags: &SolverFlags) -> Result<SolveResult> {
    let opts = SolverOptions {
        witness: flags.witness || flags.check,
        faithful_caps: flags.faithful_caps,
        ..SolverOptions::default()
    };
    let k = flags.k;
    Ok(match flags.problem {
        ProblemArg::ExactCycle => exact_k_cycle(inst, k, &opts)?,
        ProblemArg::LongestPath => longest_path(inst, k, &opts)?,
        ProblemArg::LongestCycle => longest_cycle(inst, k, &opts)?,
        ProblemArg::Fvs => fvs(inst, k, &opts)?,
        ProblemArg::CyclePacking => cycle_packing(inst, k, &opts)?,
    })
}

/// Oracle answer, with a witness where the oracle produces one.
fn run_oracle(inst: &CliqueGridInstance, problem: ProblemArg, k: usize) -> Result<(bool, Option<Witness>)> {
    let g = inst.graph();
    let b = OracleBudget::default();
    Ok(match problem {
        ProblemArg::ExactCycle => {
            let c = oracle::find_exact_cycle(g, k, &b)?;
            (c.is_some(), c.map(Witness::Cycle))
        }
        ProblemArg::LongestPath => (oracle::has_path_at_least(g, k, &b)?, None),
        ProblemArg::LongestCycle => (oracle::has_cycle_at_least(g, k, &b)?, None),
        ProblemArg::Fvs => {
            let s = oracle::find_fvs(g, k, &b)?;
            (s.is_some(), s.map(Witness::VertexSet))
        }
        ProblemArg::CyclePacking => {
            let f = oracle::find_cycle_packing(g, k, &b)?;
            (f.is_some(), f.map(Witness::CycleFamily))
        }
    })
}

fn witness_text(w: &Witness) -> String {
    let one = |vs: &[usize]| vs.iter().map(|v| (v + 1).to_string()).collect::<Vec<_>>().join(" ");
    match w {
        Witness::Cycle(v) | Witness::Path(v) | Witness::VertexSet(v) => one(v),
        Witness::CycleFamily(cs) => cs.iter().map(|c| one(c)).collect::<Vec<_>>().join(" | "),
    }
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "YES"
    } else {
        "NO"
    }
}

fn cmd_gen(a: &GenArgs) -> Result<ExitCode> {
    let side = side_for_degree(a.n, a.degree);
    let cloud = uniform_cloud(a.n, a.width.unwrap_or(side), a.height.unwrap_or(side), a.seed);
    write_or_print(a.out.as_deref(), &cloud.to_text())?;
    Ok(ExitCode::SUCCESS)
}

fn cmd_solve(a: &SolveArgs) -> Result<ExitCode> {
    let inst = read_instance(&a.input, a.flags.model)?;
    let f = &a.flags;
    let problem: Problem = f.problem.into();
    let t = Instant::now();
    let (answer, witness, stats) = if f.oracle {
        let (ans, w) = run_oracle(&inst, f.problem, f.k)?;
        (ans, w, None)
    } else {
        let r = run_solver(&inst, f)?;
        (r.answer, r.witness, Some(r.stats))
    };
    let ms = t.elapsed().as_secs_f64() * 1e3;
    let mut out = String::new();
    let _ = writeln!(out, "problem={problem}");
    let _ = writeln!(out, "k={}", f.k);
    let _ = writeln!(out, "n={}", inst.n());
    let _ = writeln!(out, "m={}", inst.graph().m());
    let _ = writeln!(out, "answer={}", yes_no(answer));
    if let Some(s) = &stats {
        let _ = writeln!(out, "windows={}", s.windows);
        let _ = writeln!(out, "members={}", s.members);
        let _ = writeln!(out, "dp_states={}", s.dp_states);
        let _ = writeln!(out, "peak_states={}", s.peak_states);
        let _ = writeln!(out, "contractions={}", s.contractions);
        let _ = writeln!(out, "shortcut={}", s.shortcut.as_deref().unwrap_or("none"));
    }
    let _ = writeln!(out, "time_ms={ms:.3}");
    let witness_ok = witness.as_ref().map(|w| verify_witness(inst.graph(), problem, f.k, w));
    if f.witness {
        if let Some(w) = &witness {
            let _ = writeln!(out, "witness={}", witness_text(w));
        }
    }
    let mut disagree = false;
    let mut check = "skipped";
    if f.check {
        let (truth, _) = run_oracle(&inst, f.problem, f.k)?;
        disagree = truth != answer || (answer && witness_ok == Some(false));
        check = if disagree { "disagreement" } else { "agreement" };
        let _ = writeln!(out, "oracle={}", yes_no(truth));
        if let Some(ok) = witness_ok {
            let _ = writeln!(out, "witness_valid={ok}");
        }
    }
    let _ = writeln!(out, "check={check}");
    print!("{out}");
    if let Some(path) = &a.json {
        let record = json!({
            "problem": problem.name(),
            "k": f.k,
            "n": inst.n(),
            "m": inst.graph().m(),
            "answer": answer,
            "witness": witness.as_ref().filter(|_| f.witness).map(|w| w.map_vertices(|v| v + 1)),
            "stats": stats,
            "time_ms": ms,
            "check": check,
        });
        fs::write(path, serde_json::to_string_pretty(&record)? + "\n")
            .with_context(|| format!("writing {}", path.display()))?;
    }
    Ok(if disagree {
        ExitCode::from(3)
    } else if answer {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}

fn cmd_kernelize(a: &KernelizeArgs) -> Result<ExitCode> {
    let text = fs::read_to_string(&a.input).with_context(|| format!("reading {}", a.input.display()))?;
    let cloud = PointCloud::parse(&text)?;
    let inst = CliqueGridInstance::from_cloud(&cloud, a.model.into())?;
    let problem = match a.problem {
        ProblemArg::LongestCycle => KernelProblem::LongestCycle,
        ProblemArg::ExactCycle | ProblemArg::LongestPath => KernelProblem::SubgraphIsomorphism,
        p => bail!("no kernel for {}", Problem::from(p)),
    };
    let out = turing_kernel(&inst, a.k, problem);
    print!("{}", kernel_report(&out, a.k));
    if let (Some(dir), KernelOutput::Windows(ws)) = (&a.out_dir, &out) {
        fs::create_dir_all(dir).with_context(|| format!("creating {}", dir.display()))?;
        for (i, w) in ws.iter().enumerate() {
            let sub = PointCloud::new(w.to_original.iter().map(|&v| cloud.points[v]).collect());
            fs::write(dir.join(format!("window_{i:04}.pts")), sub.to_text())?;
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_decompose(a: &DecomposeArgs) -> Result<ExitCode> {
    let inst = read_instance(&a.input, a.model)?;
    let text = match a.kind {
        DecompKind::Tree => {
            let td = best_effort_decomposition(inst.graph(), DEFAULT_NODE_BUDGET);
            let text = td.to_pace();
            if !verify_tree_decomposition(inst.graph(), &parse_pace(&text)?) {
                bail!("exported decomposition does not verify");
            }
            text
        }
        DecompKind::Nctd => {
            let nctd = solver_cell_nctd(&inst, DEFAULT_NODE_BUDGET);
            nctd.lifted(&inst).to_pace()
        }
        DecompKind::CellGraph => graph_to_gr(&cell_graph(&inst).graph),
        DecompKind::Backbone => backbone_report(&inst, &minimal_backbone(&inst)),
    };
    write_or_print(a.out.as_deref(), &text)?;
    Ok(ExitCode::SUCCESS)
}

fn cmd_bench(a: &BenchArgs) -> Result<ExitCode> {
    let f = &a.flags;
    let model: GeometricModel = f.model.into();
    let mut disagree = false;
    println!("seed\tn\tm\tanswer\ttime_ms\tdp_states\tpeak_states\tcheck");
    for seed in a.seed..a.seed + a.count {
        let side = side_for_degree(a.n, a.degree);
        let cloud = uniform_cloud(a.n, side, side, seed);
        let inst = CliqueGridInstance::from_cloud(&cloud, model)?;
        let t = Instant::now();
        let r = run_solver(&inst, f)?;
        let ms = t.elapsed().as_secs_f64() * 1e3;
        let check = if f.check {
            let (truth, _) = run_oracle(&inst, f.problem, f.k)?;
            let ok = truth == r.answer
                && r.witness.as_ref().is_none_or(|w| verify_witness(inst.graph(), f.problem.into(), f.k, w));
            disagree |= !ok;
            if ok {
                "agreement"
            } else {
                "disagreement"
            }
        } else {
            "skipped"
        };
        println!(
            "{seed}\t{}\t{}\t{}\t{ms:.3}\t{}\t{}\t{check}",
            inst.n(),
            inst.graph().m(),
            yes_no(r.answer),
            r.stats.dp_states,
            r.stats.peak_states
        );
    }
    Ok(if disagree { ExitCode::from(3) } else { ExitCode::SUCCESS })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(j) = cli.jobs {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(j.max(1)).build_global() {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    }
    let res = match &cli.command {
        Command::Gen(a) => cmd_gen(a),
        Command::Solve(a) => cmd_solve(a),
        Command::Kernelize(a) => cmd_kernelize(a),
        Command::Decompose(a) => cmd_decompose(a),
        Command::Bench(a) => cmd_bench(a),
    };
    res.unwrap_or_else(|e| {
        eprintln!("error: {e:#}");
        ExitCode::from(2)
    })
}
