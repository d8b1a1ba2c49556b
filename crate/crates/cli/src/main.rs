//! `diskcover` command-line tool.
//!
//! Exit codes: 0 success, 2 invalid input, 3 verification failure.
//! `DISKCOVER_THREADS` sets the worker thread count.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use anyhow::{anyhow, Context};
use clap::{Parser, Subcommand, ValueEnum};

use diskcover::bounds::bound_table;
use diskcover::io::{
    gen_clustered, gen_depth_reduction, gen_positioning_tradeoff, gen_random, gen_spirograph,
    instance_hash, parse_instance, parse_result, render_svg, serialize_instance, serialize_result,
    ResultFile, SvgOptions,
};
use diskcover::selector::{
    solve_basic_3colour, solve_kcolour, solve_rado_1colour, solve_square_2colour,
    solve_weighted_3colour, verify, Assignment, CoverageReport, SamplingSpec,
};
use diskcover::union_area::{exact_union_area, monte_carlo_union_area, scaled_union_area};
use diskcover::DiskSet;

const THREADS_ENV: &str = "DISKCOVER_THREADS";

#[derive(Parser)]
#[command(
    name = "diskcover",
    version,
    about = "Select and colour unit disks so same-coloured disks are disjoint"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Write a generated instance file.
    Generate(GenerateArgs),
    /// Select and colour disks of an instance; writes a result file.
    Solve(SolveArgs),
    /// Check a result file against its instance.
    Verify { instance: PathBuf, result: PathBuf },
    /// Union area of an instance.
    Area {
        instance: PathBuf,
        /// Also estimate the area by Monte Carlo with this many samples.
        #[arg(long)]
        mc_samples: Option<u64>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Also report the union area with every radius scaled by this factor in [0, 1].
        #[arg(long)]
        scale: Option<f64>,
    },
    /// Print the table of guaranteed ratios.
    Bounds {
        /// Colour counts for the k-colour rows.
        #[arg(long, value_delimiter = ',', default_values_t = [1i64, 3, 4, 7, 12])]
        k: Vec<i64>,
    },
    /// Draw an instance, optionally with a result's colours and lattice, as SVG.
    Render {
        instance: PathBuf,
        #[arg(long)]
        result: Option<PathBuf>,
        /// Draw the lattice points (needs --result).
        #[arg(long)]
        lattice_points: bool,
        /// Draw the lattice's Voronoi cells (needs --result).
        #[arg(long)]
        cells: bool,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Time every solver on a random instance.
    Bench {
        #[arg(long, default_value_t = 200)]
        n: usize,
        #[arg(long, default_value_t = 20.0)]
        box_side: f64,
        #[arg(long, default_value_t = 42)]
        seed: u64,
        /// Grid resolution for the weighted solver.
        #[arg(long, default_value_t = 32)]
        grid: usize,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Kind {
    /// Centers uniform in a square box.
    Random,
    /// Centers evenly spaced on a circle of radius 1 − epsilon.
    Spirograph,
    /// Centers grouped around random hubs.
    Clustered,
    /// Each disk of --input moved to its own lattice triangle.
    DepthReduction,
    /// Five disks where the deepest lattice positioning is not the heaviest.
    Tradeoff,
}

#[derive(clap::Args)]
struct GenerateArgs {
    #[arg(long, value_enum)]
    kind: Kind,
    #[arg(long, default_value_t = 50)]
    n: usize,
    #[arg(long, default_value_t = 10.0)]
    box_side: f64,
    #[arg(long, default_value_t = 0.01)]
    epsilon: f64,
    #[arg(long, default_value_t = 3)]
    clusters: usize,
    #[arg(long, default_value_t = 1.5)]
    spread: f64,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Source instance for depth-reduction.
    #[arg(long)]
    input: Option<PathBuf>,
    #[arg(short, long)]
    output: Option<PathBuf>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Colours {
    #[value(name = "1")]
    One,
    #[value(name = "2")]
    Two,
    #[value(name = "3")]
    Three,
    /// Any Löschian k, given with --k.
    #[value(name = "k")]
    K,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum SolveMethod {
    Basic,
    Weighted,
}

#[derive(clap::Args)]
struct SolveArgs {
    instance: PathBuf,
    #[arg(long, value_enum, default_value = "3")]
    colours: Colours,
    /// Offset choice for 3 colours.
    #[arg(long, value_enum, default_value = "basic")]
    method: SolveMethod,
    /// Colour count for --colours k; must be a^2 + ab + b^2.
    #[arg(long)]
    k: Option<i64>,
    /// Weighted solver: grid x grid offsets over the lattice cell.
    #[arg(long, default_value_t = 256)]
    grid: usize,
    /// Weighted solver: skip arrangement-vertex offsets.
    #[arg(long)]
    no_vertices: bool,
    #[arg(short, long)]
    output: Option<PathBuf>,
}

enum Failure {
    Invalid(anyhow::Error),
    Verification(anyhow::Error),
}

impl From<anyhow::Error> for Failure {
    fn from(e: anyhow::Error) -> Self {
        Failure::Invalid(e)
    }
}

impl From<diskcover::Error> for Failure {
    fn from(e: diskcover::Error) -> Self {
        Failure::Invalid(e.into())
    }
}

type CliResult = Result<(), Failure>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = configure_threads()
        .map_err(Failure::from)
        .and_then(|_| run(cli.command));
    match outcome {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Invalid(e)) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
        Err(Failure::Verification(e)) => {
            eprintln!("verification failed: {e:#}");
            ExitCode::from(3)
        }
    }
}

fn configure_threads() -> anyhow::Result<()> {
    let Ok(raw) = std::env::var(THREADS_ENV) else {
        return Ok(());
    };
    let n: usize = raw
        .trim()
        .parse()
        .ok()
        .filter(|&n| n > 0)
        .ok_or_else(|| anyhow!("{THREADS_ENV} must be a positive integer, got {raw:?}"))?;
    rayon::ThreadPoolBuilder::new()
        .num_threads(n)
        .build_global()
        .context("configuring worker threads")
}

fn run(command: Command) -> CliResult {
    match command {
        Command::Generate(args) => generate(args),
        Command::Solve(args) => solve(args),
        Command::Verify { instance, result } => verify_cmd(&instance, &result),
        Command::Area {
            instance,
            mc_samples,
            seed,
            scale,
        } => area(&instance, mc_samples, seed, scale),
        Command::Bounds { k } => bounds(&k),
        Command::Render {
            instance,
            result,
            lattice_points,
            cells,
            output,
        } => render(
            &instance,
            result.as_deref(),
            lattice_points,
            cells,
            output.as_deref(),
        ),
        Command::Bench {
            n,
            box_side,
            seed,
            grid,
        } => bench(n, box_side, seed, grid),
    }
}

fn read(path: &Path) -> anyhow::Result<String> {
    fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))
}

fn read_instance(path: &Path) -> anyhow::Result<DiskSet> {
    parse_instance(&read(path)?).with_context(|| format!("in instance {}", path.display()))
}

fn emit(output: Option<&Path>, text: &str) -> anyhow::Result<()> {
    match output {
        Some(p) => fs::write(p, text).with_context(|| format!("writing {}", p.display())),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn generate(a: GenerateArgs) -> CliResult {
    let disks = match a.kind {
        Kind::Random => gen_random(a.n, a.box_side, a.seed)?,
        Kind::Spirograph => gen_spirograph(a.n, a.epsilon, a.seed)?,
        Kind::Clustered => gen_clustered(a.n, a.clusters, a.box_side, a.spread, a.seed)?,
        Kind::DepthReduction => {
            let input = a
                .input
                .as_deref()
                .ok_or_else(|| anyhow!("--kind depth-reduction needs --input"))?;
            let red = gen_depth_reduction(&read_instance(input)?)?;
            eprintln!("lattice side {:.17e}", red.side);
            red.disks
        }
        Kind::Tradeoff => gen_positioning_tradeoff().disks,
    };
    emit(a.output.as_deref(), &serialize_instance(&disks))?;
    Ok(())
}

fn solve(a: SolveArgs) -> CliResult {
    let disks = read_instance(&a.instance)?;
    if a.method == SolveMethod::Weighted && a.colours != Colours::Three {
        return Err(anyhow!("--method weighted needs --colours 3").into());
    }
    if a.k.is_some() && a.colours != Colours::K {
        return Err(anyhow!("--k is only used with --colours k").into());
    }
    let mut params = String::new();
    let (assignment, report) = match (a.colours, a.method) {
        (Colours::One, _) => solve_rado_1colour(&disks)?,
        (Colours::Two, _) => solve_square_2colour(&disks)?,
        (Colours::Three, SolveMethod::Basic) => solve_basic_3colour(&disks)?,
        (Colours::Three, SolveMethod::Weighted) => {
            let spec = SamplingSpec {
                grid: a.grid,
                include_vertices: !a.no_vertices,
                include_centers: true,
            };
            params = format!(
                "grid={} vertices={} centers={}",
                spec.grid, spec.include_vertices, spec.include_centers
            );
            solve_weighted_3colour(&disks, &spec)?
        }
        (Colours::K, _) => {
            let k = a.k.ok_or_else(|| anyhow!("--colours k needs --k"))?;
            params = format!("k={k}");
            solve_kcolour(&disks, k)?
        }
    };
    eprintln!("{}", summary(&assignment, &report));
    let file = ResultFile {
        instance_sha256: instance_hash(&disks),
        params,
        assignment,
        report,
    };
    emit(a.output.as_deref(), &serialize_result(&file))?;
    Ok(())
}

fn summary(a: &Assignment, r: &CoverageReport) -> String {
    format!(
        "method {} k {}: selected {} of {}, A {:.6}, A_C {:.6}, ratio {:.6} (guarantee {:.6}), lattice points hit {}",
        a.method,
        a.k,
        a.selected_count(),
        a.labels.len(),
        r.union_area,
        r.selected_area,
        r.ratio,
        r.guarantee,
        r.lattice_points_hit
    )
}

fn close(a: f64, b: f64) -> bool {
    (a - b).abs() <= 1e-9 * a.abs().max(b.abs()).max(1.0)
}

fn verify_cmd(instance: &Path, result: &Path) -> CliResult {
    let disks = read_instance(instance)?;
    let file =
        parse_result(&read(result)?).with_context(|| format!("in result {}", result.display()))?;
    let hash = instance_hash(&disks);
    if file.instance_sha256 != hash {
        return Err(Failure::Verification(anyhow!(
            "result was produced for instance {}, not {} ({hash})",
            file.instance_sha256,
            instance.display()
        )));
    }
    let fresh = verify(&disks, &file.assignment).map_err(|e| Failure::Verification(e.into()))?;
    let stored = &file.report;
    let fields = [
        ("union_area", stored.union_area, fresh.union_area),
        ("selected_area", stored.selected_area, fresh.selected_area),
        ("ratio", stored.ratio, fresh.ratio),
        ("guarantee", stored.guarantee, fresh.guarantee),
        (
            "cell_accounting",
            stored.cell_accounting,
            fresh.cell_accounting,
        ),
    ];
    for (name, s, f) in fields {
        if !close(s, f) {
            return Err(Failure::Verification(anyhow!(
                "{name}: file says {s}, recomputed {f}"
            )));
        }
    }
    if stored.lattice_points_hit != fresh.lattice_points_hit {
        return Err(Failure::Verification(anyhow!(
            "lattice_points_hit: file says {}, recomputed {}",
            stored.lattice_points_hit,
            fresh.lattice_points_hit
        )));
    }
    println!("ok: {}", summary(&file.assignment, &fresh));
    Ok(())
}

fn area(instance: &Path, mc_samples: Option<u64>, seed: u64, scale: Option<f64>) -> CliResult {
    let disks = read_instance(instance)?;
    println!("exact {:.17e}", exact_union_area(&disks));
    if let Some(samples) = mc_samples {
        let mc = monte_carlo_union_area(&disks, samples, seed)?;
        println!(
            "monte_carlo {:.17e} std_error {:.3e} samples {}",
            mc.estimate, mc.std_error, mc.samples
        );
    }
    if let Some(r) = scale {
        println!("scaled {r} {:.17e}", scaled_union_area(&disks, r)?);
    }
    Ok(())
}

fn bounds(ks: &[i64]) -> CliResult {
    let t = bound_table();
    let rows = [
        ("c1_lb", t.c1_lb),
        ("delta", t.delta),
        ("c3_basic", t.c3_basic),
        ("weighted_constant", t.weighted_constant),
        ("c3_weighted", t.c3_weighted),
        ("delta_square", t.delta_square),
        ("c2_basic", t.c2_basic),
        ("c3_upper", t.c3_upper),
    ];
    for (name, v) in rows {
        println!("{name:<18} {v:.17e}  (1/{:.5})", 1.0 / v);
    }
    for &k in ks {
        let g = t.kcolour_guarantee(k)?;
        if k == 1 {
            println!(
                "k={k:<3} side-4 lattice      guarantee {g:.17e}  (1/{:.5})",
                1.0 / g
            );
        } else {
            println!(
                "k={k:<3} alpha {:.10} delta {:.10} guarantee {g:.17e}  (1/{:.5})",
                t.alpha_k(k),
                t.delta_k(k),
                1.0 / g
            );
        }
    }
    Ok(())
}

fn render(
    instance: &Path,
    result: Option<&Path>,
    lattice_points: bool,
    cells: bool,
    output: Option<&Path>,
) -> CliResult {
    let disks = read_instance(instance)?;
    let assignment = match result {
        Some(p) => {
            let file =
                parse_result(&read(p)?).with_context(|| format!("in result {}", p.display()))?;
            if file.assignment.labels.len() != disks.len() {
                return Err(anyhow!(
                    "result has {} labels but the instance has {} disks",
                    file.assignment.labels.len(),
                    disks.len()
                )
                .into());
            }
            Some(file.assignment)
        }
        None if lattice_points || cells => {
            return Err(anyhow!("--lattice-points and --cells need --result").into());
        }
        None => None,
    };
    let opts = SvgOptions {
        lattice_points,
        cells,
    };
    emit(
        output,
        &render_svg(&disks, assignment.as_ref(), None, &opts),
    )?;
    Ok(())
}

fn bench(n: usize, box_side: f64, seed: u64, grid: usize) -> CliResult {
    let disks = gen_random(n, box_side, seed)?;
    println!(
        "instance random n={n} box_side={box_side} seed={seed} threads={}",
        rayon::current_num_threads()
    );
    let spec = SamplingSpec {
        grid,
        include_vertices: true,
        include_centers: true,
    };
    type Solver<'a> = Box<dyn Fn() -> diskcover::Result<(Assignment, CoverageReport)> + 'a>;
    let solvers: Vec<(&str, Solver)> = vec![
        ("basic3", Box::new(|| solve_basic_3colour(&disks))),
        (
            "weighted3",
            Box::new(|| solve_weighted_3colour(&disks, &spec)),
        ),
        ("rado1", Box::new(|| solve_rado_1colour(&disks))),
        ("square2", Box::new(|| solve_square_2colour(&disks))),
        ("kcolour7", Box::new(|| solve_kcolour(&disks, 7))),
    ];
    let start = Instant::now();
    let a = exact_union_area(&disks);
    println!(
        "{:<10} {:>10.3} ms  A {a:.6}",
        "area",
        start.elapsed().as_secs_f64() * 1e3
    );
    for (name, f) in solvers {
        let start = Instant::now();
        let (_, r) = f()?;
        println!(
            "{name:<10} {:>10.3} ms  ratio {:.6}  guarantee {:.6}  hits {}",
            start.elapsed().as_secs_f64() * 1e3,
            r.ratio,
            r.guarantee,
            r.lattice_points_hit
        );
    }
    Ok(())
}
