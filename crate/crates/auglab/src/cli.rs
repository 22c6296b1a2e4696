//! Argument parsing and subcommand dispatch.

use std::fs;
use std::path::{Path, PathBuf};

use auglab_core::lab::{
    curve, curve_point, integer_levels, loose_classify, routing_loose_curve, verify_ra, verify_rate_augmentation, verify_slower_network,
    Engine, Instance, PerformanceCurve,
};
use auglab_core::paging::{
    gen_adaptive_adversary, gen_cyclic_adversary, gen_locality_workload, simulate as simulate_paging, LocalityParams, PageRequestSequence,
    Policy,
};
use auglab_core::rational::{self, Rational};
use auglab_core::routing::{
    gen_random_network, gen_random_parallel_links, gen_staircase, price_of_anarchy, solve, Objective, RoutingNetwork, SolverOptions,
};
use auglab_core::scheduling::{
    flow_metrics, gen_example_setf, gen_grid_jobs, gen_random_jobs, simulate as simulate_jobs, verify_idle_bound, verify_kp00,
    verify_pointwise_bound, JobSet, RandomJobParams, Scheduler,
};
use auglab_core::{Quantity, VerificationReport, DEFAULT_SEED};
use clap::{Args, Parser, Subcommand, ValueEnum};
use rayon::prelude::*;

use crate::jobs::{parse_jobs, write_jobs, write_timeline};
use crate::network::{objective_name, parse_network, write_network, FlowRecord, PoaRecord};
use crate::records::{ClassificationRecord, CurveRecord, PagingRecord, ReportBundle, RoutingLooseRecord};
use crate::trace::{parse_trace, write_trace};
use crate::{to_json, InputError};

#[derive(Debug, Parser)]
#[command(name = "auglab", version, about = "Resource augmentation experiments for paging, selfish routing and scheduling")]
pub struct Cli {
    /// Seed for every generator.
    #[arg(long, global = true, env = "AUGLAB_SEED", default_value_t = DEFAULT_SEED)]
    pub seed: u64,
    /// Artifact path; without it the artifact goes to standard output and
    /// the summary to standard error.
    #[arg(long, global = true, value_name = "PATH")]
    pub out: Option<PathBuf>,
    /// Write curves as CSV instead of JSON.
    #[arg(long, global = true)]
    pub csv: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Online paging.
    #[command(subcommand)]
    Page(PageCommand),
    /// Selfish routing.
    #[command(subcommand)]
    Route(RouteCommand),
    /// Single-machine scheduling.
    #[command(subcommand)]
    Sched(SchedCommand),
    /// Instance generators.
    #[command(subcommand)]
    Gen(GenCommand),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum PolicyArg {
    Lru,
    Fifo,
    Fif,
}

impl From<PolicyArg> for Policy {
    fn from(p: PolicyArg) -> Self {
        match p {
            PolicyArg::Lru => Policy::Lru,
            PolicyArg::Fifo => Policy::Fifo,
            PolicyArg::Fif => Policy::Fif,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SchedulerArg {
    Srpt,
    Setf,
}

impl From<SchedulerArg> for Scheduler {
    fn from(s: SchedulerArg) -> Self {
        match s {
            SchedulerArg::Srpt => Scheduler::Srpt,
            SchedulerArg::Setf => Scheduler::Setf,
        }
    }
}

#[derive(Debug, Clone, Args)]
pub struct Parallel {
    /// Worker threads for independent resource levels.
    #[arg(long = "jobs", short = 'j', value_name = "N", default_value_t = 1)]
    pub threads: usize,
}

#[derive(Debug, Clone, Args)]
pub struct Solver {
    /// Relative gap at which the solver stops.
    #[arg(long, default_value_t = 1e-6)]
    pub tol: f64,
    #[arg(long, default_value_t = 100_000)]
    pub max_iterations: usize,
}

#[derive(Debug, Subcommand)]
pub enum PageCommand {
    /// Fault count of one policy at one cache size.
    Sim {
        #[arg(long)]
        trace: PathBuf,
        #[arg(long, value_enum, default_value = "lru")]
        policy: PolicyArg,
        #[arg(long)]
        k: usize,
    },
    /// Fault counts at cache sizes `1..=max-k`.
    Curve {
        #[arg(long)]
        trace: PathBuf,
        #[arg(long, value_enum, default_value = "lru")]
        policy: PolicyArg,
        #[arg(long)]
        max_k: usize,
        #[command(flatten)]
        parallel: Parallel,
    },
    /// Loosely competitive classification of cache sizes `1..=n`.
    Loose {
        #[arg(long)]
        trace: PathBuf,
        #[arg(long, default_value_t = 20)]
        n: usize,
        #[arg(long, value_parser = parse_rational)]
        eps: Rational,
        #[arg(long, value_parser = parse_rational)]
        delta: Rational,
    },
    /// Faults at cache `k` against the optimum at cache `h`, for one pair
    /// or every `1 <= h <= k <= max-k`.
    VerifyRa {
        #[arg(long)]
        trace: PathBuf,
        #[arg(long, value_enum, default_value = "lru")]
        policy: PolicyArg,
        #[arg(long, default_value_t = 20, conflicts_with_all = ["k", "h"])]
        max_k: usize,
        #[arg(long, requires = "h")]
        k: Option<usize>,
        #[arg(long, requires = "k")]
        h: Option<usize>,
        #[command(flatten)]
        parallel: Parallel,
    },
}

#[derive(Debug, Subcommand)]
pub enum RouteCommand {
    /// Equilibrium flow.
    Eq {
        #[arg(long)]
        net: PathBuf,
        #[command(flatten)]
        solver: Solver,
    },
    /// Optimal flow.
    Opt {
        #[arg(long)]
        net: PathBuf,
        #[command(flatten)]
        solver: Solver,
    },
    /// Price of anarchy.
    Poa {
        #[arg(long)]
        net: PathBuf,
        #[command(flatten)]
        solver: Solver,
    },
    /// Equilibrium cost against the optimum at augmented rates.
    VerifyRt {
        #[arg(long)]
        net: PathBuf,
        #[arg(long, value_delimiter = ',', default_values_t = [0.25, 0.5, 1.0, 2.0])]
        delta: Vec<f64>,
        #[command(flatten)]
        solver: Solver,
        #[command(flatten)]
        parallel: Parallel,
    },
    /// Equilibrium cost on the slower network against the optimum.
    VerifyBicrit {
        #[arg(long)]
        net: PathBuf,
        #[command(flatten)]
        solver: Solver,
    },
    /// Price of anarchy at evenly spaced rates in `[r/2, r]`.
    Loose {
        #[arg(long)]
        net: PathBuf,
        #[arg(long, default_value_t = 11)]
        samples: usize,
        #[arg(long, default_value_t = 2.0)]
        beta: f64,
        #[command(flatten)]
        solver: Solver,
    },
}

#[derive(Debug, Subcommand)]
pub enum SchedCommand {
    /// Schedule a job file.
    Sim {
        #[arg(long)]
        jobs: PathBuf,
        #[arg(long, value_enum, default_value = "setf")]
        scheduler: SchedulerArg,
        #[arg(long, value_parser = parse_rational, default_value = "1")]
        speed: Rational,
    },
    /// SETF flow time at speed `1+eps` against the unit-speed optimum.
    VerifyKp00 {
        #[arg(long)]
        jobs: PathBuf,
        #[arg(long, value_parser = parse_rational)]
        eps: Rational,
    },
    /// Active jobs of SETF at speed `1+eps` against SRPT at every instant.
    VerifyPointwise {
        #[arg(long)]
        jobs: PathBuf,
        #[arg(long, value_parser = parse_rational)]
        eps: Rational,
    },
    /// Longest SETF idle period at speed `1+eps` against the optimum.
    VerifyIdle {
        #[arg(long)]
        jobs: PathBuf,
        #[arg(long, value_parser = parse_rational)]
        eps: Rational,
    },
}

#[derive(Debug, Subcommand)]
pub enum GenCommand {
    /// Trace cycling through `k+1` pages.
    Cyclic {
        #[arg(long)]
        k: usize,
        #[arg(long)]
        length: usize,
    },
    /// Trace always requesting the page missing from the policy's cache.
    Adaptive {
        #[arg(long, value_enum, default_value = "lru")]
        policy: PolicyArg,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        length: usize,
    },
    /// Seeded trace with tunable locality of reference.
    Locality {
        #[arg(long)]
        universe: u32,
        #[arg(long)]
        length: usize,
        #[arg(long)]
        locality: f64,
        #[arg(long, default_value_t = LocalityParams::DEFAULT_WINDOW)]
        window: usize,
    },
    /// Two links with costs `1` and `x`, rate 1.
    Pigou,
    /// Two links with costs `1` and `x^d`, rate 1.
    NonlinearPigou {
        #[arg(long)]
        degree: f64,
    },
    /// Seeded directed network with polynomial costs.
    RandomNetwork {
        #[arg(long, default_value_t = 10)]
        vertices: usize,
        #[arg(long)]
        two_commodities: bool,
    },
    /// Seeded parallel links with affine, monomial and M/M/1 costs.
    ParallelLinks {
        #[arg(long, default_value_t = 6)]
        max_links: usize,
    },
    /// Parallel links whose price of anarchy stays high across rates.
    Staircase {
        #[arg(long, default_value_t = 6)]
        m: usize,
        #[arg(long, default_value_t = 40.0)]
        degree: f64,
        #[arg(long, default_value_t = 4.0)]
        growth: f64,
    },
    /// Jobs on which SETF keeps many jobs active.
    ExampleSetf {
        #[arg(long, value_parser = parse_rational)]
        eps: Rational,
        #[arg(long, value_parser = parse_rational)]
        delta: Rational,
    },
    /// Seeded jobs with rational parameters.
    RandomJobs {
        #[arg(long, default_value_t = 12)]
        max_jobs: usize,
        #[arg(long, default_value_t = 10)]
        release_max: u32,
        #[arg(long, default_value_t = 4)]
        processing_max: u32,
        #[arg(long, default_value_t = 4)]
        max_denominator: u32,
    },
    /// Seeded jobs with integer parameters fitting a horizon.
    GridJobs {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        horizon: u32,
    },
}

fn parse_rational(text: &str) -> Result<Rational, String> {
    rational::parse(text).map_err(|e| e.to_string())
}

/// What a command produced.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub artifact: String,
    pub summary: String,
    /// False when a requested verification failed.
    pub pass: bool,
}

impl Outcome {
    fn new(artifact: String, summary: String) -> Self {
        Outcome { artifact, summary, pass: true }
    }

    fn verdict(artifact: String, summary: String, pass: bool) -> Self {
        Outcome { artifact, summary, pass }
    }
}

fn read(path: &Path) -> Result<String, InputError> {
    fs::read_to_string(path).map_err(|e| InputError::read(path, e))
}

fn load_trace(path: &Path) -> Result<PageRequestSequence, InputError> {
    parse_trace(&read(path)?).map_err(|e| in_file(path, e))
}

fn load_network(path: &Path) -> Result<RoutingNetwork, InputError> {
    parse_network(&read(path)?).map_err(|e| in_file(path, e))
}

fn load_jobs(path: &Path) -> Result<JobSet, InputError> {
    parse_jobs(&read(path)?).map_err(|e| in_file(path, e))
}

fn in_file(path: &Path, err: InputError) -> InputError {
    match err {
        InputError::Field { field, reason } => InputError::field(field, format!("{reason} (in {})", path.display())),
        other => other,
    }
}

fn instance_name(path: &Path) -> String {
    path.file_stem().map_or_else(|| path.display().to_string(), |s| s.to_string_lossy().into_owned())
}

fn pool(threads: usize) -> Result<rayon::ThreadPool, InputError> {
    if threads == 0 {
        return Err(InputError::field("jobs", "need at least one worker thread"));
    }
    rayon::ThreadPoolBuilder::new().num_threads(threads).build().map_err(|e| InputError::field("jobs", e.to_string()))
}

fn solver_options(solver: &Solver) -> Result<SolverOptions, InputError> {
    if !(solver.tol.is_finite() && solver.tol > 0.0) {
        return Err(InputError::field("tol", "must be finite and positive"));
    }
    if solver.max_iterations == 0 {
        return Err(InputError::field("max-iterations", "must be positive"));
    }
    Ok(SolverOptions { tol: solver.tol, max_iterations: solver.max_iterations, ..SolverOptions::default() })
}

fn positive(name: &str, q: &Rational) -> Result<(), InputError> {
    if *q <= rational::zero() {
        return Err(InputError::field(name, "must be positive"));
    }
    Ok(())
}

fn bundle_outcome(command: &str, reports: &[VerificationReport], detail: String) -> Outcome {
    let bundle = ReportBundle::new(command, reports);
    let verdict = if bundle.pass { "pass" } else { "FAIL" };
    let summary = format!("{command}: {verdict}, {} of {} checks failed{detail}", bundle.failures, reports.len());
    Outcome::verdict(to_json(&bundle), summary, bundle.pass)
}

fn curve_artifact(c: &PerformanceCurve, csv: bool) -> String {
    if csv {
        c.to_csv()
    } else {
        to_json(&CurveRecord::from(c))
    }
}

/// Runs one command without touching the output path.
pub fn run(cli: &Cli) -> Result<Outcome, InputError> {
    match &cli.command {
        Command::Page(cmd) => page(cmd, cli.csv),
        Command::Route(cmd) => route(cmd),
        Command::Sched(cmd) => sched(cmd),
        Command::Gen(cmd) => generate(cmd, cli.seed),
    }
}

fn page(cmd: &PageCommand, csv: bool) -> Result<Outcome, InputError> {
    match cmd {
        PageCommand::Sim { trace, policy, k } => {
            let z = load_trace(trace)?;
            let record = PagingRecord::from(&simulate_paging((*policy).into(), *k, &z)?);
            let summary = format!("{} k={}: {} faults over {} requests", record.policy, record.k, record.faults, record.len);
            Ok(Outcome::new(to_json(&record), summary))
        }
        PageCommand::Curve { trace, policy, max_k, parallel } => {
            if *max_k == 0 {
                return Err(InputError::field("max-k", "must be at least 1"));
            }
            let z = load_trace(trace)?;
            let engine = Engine::Paging((*policy).into());
            let levels = integer_levels(*max_k);
            let name = instance_name(trace);
            let c = if *policy == PolicyArg::Lru {
                curve(engine, Instance::Paging(&z), &name, &levels)?
            } else {
                let values = pool(parallel.threads)?
                    .install(|| levels.par_iter().map(|l| curve_point(engine, Instance::Paging(&z), l)).collect::<Result<Vec<_>, _>>())?;
                PerformanceCurve::new(engine.to_string(), name, levels, values)?
            };
            let summary = format!("{engine} curve over k=1..{max_k}: {} faults at k=1, {} at k={max_k}", c.values[0], c.values[max_k - 1]);
            Ok(Outcome::new(curve_artifact(&c, csv), summary))
        }
        PageCommand::Loose { trace, n, eps, delta } => {
            let z = load_trace(trace)?;
            let record = ClassificationRecord::from(&loose_classify(&z, *n, eps, delta)?);
            let verdict = if record.pass { "pass" } else { "FAIL" };
            let summary = format!(
                "loose classification n={n}: {verdict}, {} exempt (limit {}), b={}",
                record.exempt_count, record.exempt_limit, record.b
            );
            let pass = record.pass;
            Ok(Outcome::verdict(to_json(&record), summary, pass))
        }
        PageCommand::VerifyRa { trace, policy, max_k, k, h, parallel } => {
            let z = load_trace(trace)?;
            let policy: Policy = (*policy).into();
            let pairs: Vec<(usize, usize)> = match (k, h) {
                (Some(k), Some(h)) => vec![(*k, *h)],
                _ => (1..=*max_k).flat_map(|k| (1..=k).map(move |h| (k, h))).collect(),
            };
            if pairs.is_empty() {
                return Err(InputError::field("max-k", "must be at least 1"));
            }
            let reports = pool(parallel.threads)?
                .install(|| pairs.par_iter().map(|&(k, h)| verify_ra(policy, &z, k, h)).collect::<Result<Vec<_>, _>>())?;
            let worst = reports.iter().map(VerificationReport::margin).fold(f64::INFINITY, f64::min);
            Ok(bundle_outcome(&format!("page verify-ra {policy}"), &reports, format!(", smallest margin {worst}")))
        }
    }
}

fn route(cmd: &RouteCommand) -> Result<Outcome, InputError> {
    match cmd {
        RouteCommand::Eq { net, solver } | RouteCommand::Opt { net, solver } => {
            let objective = if matches!(cmd, RouteCommand::Eq { .. }) { Objective::Equilibrium } else { Objective::Optimal };
            let report = solve(&load_network(net)?, objective, &solver_options(solver)?)?;
            let summary = format!(
                "{} flow: total cost {}, relative gap {:e} after {} iterations{}",
                objective_name(objective),
                report.total_cost,
                report.relative_gap,
                report.iterations,
                if report.converged { "" } else { " (not converged)" }
            );
            Ok(Outcome::new(to_json(&FlowRecord::from(&report)), summary))
        }
        RouteCommand::Poa { net, solver } => {
            let report = price_of_anarchy(&load_network(net)?, &solver_options(solver)?)?;
            let ratio = report.ratio.map_or_else(|| String::from("undefined (zero optimal cost)"), |r| format!("{r:.6}"));
            let summary = format!(
                "price of anarchy {ratio}: equilibrium cost {}, optimal cost {}{}",
                report.equilibrium.total_cost,
                report.optimal.total_cost,
                if report.is_approximate() { " (not converged)" } else { "" }
            );
            Ok(Outcome::new(to_json(&PoaRecord::from(&report)), summary))
        }
        RouteCommand::VerifyRt { net, delta, solver, parallel } => {
            let network = load_network(net)?;
            let options = solver_options(solver)?;
            if delta.is_empty() {
                return Err(InputError::field("delta", "need at least one value"));
            }
            let reports = pool(parallel.threads)?
                .install(|| delta.par_iter().map(|&d| verify_rate_augmentation(&network, d, &options)).collect::<Result<Vec<_>, _>>())?;
            Ok(bundle_outcome("route verify-rt", &reports, String::new()))
        }
        RouteCommand::VerifyBicrit { net, solver } => {
            let report = verify_slower_network(&load_network(net)?, &solver_options(solver)?)?;
            let detail = format!(", slower equilibrium {} vs optimum {}", report.left, report.right);
            Ok(bundle_outcome("route verify-bicrit", &[report], detail))
        }
        RouteCommand::Loose { net, samples, beta, solver } => {
            let report = routing_loose_curve(&load_network(net)?, *samples, *beta, &solver_options(solver)?)?;
            let summary = match (report.pi, report.fraction) {
                (Some(pi), Some(f)) => format!("routing loose curve: pi {pi:.6}, fraction within beta ln pi {f:.6}"),
                _ => String::from("routing loose curve: pi undefined (zero equilibrium cost at half rate)"),
            };
            Ok(Outcome::new(to_json(&RoutingLooseRecord::from(&report)), summary))
        }
    }
}

fn sched(cmd: &SchedCommand) -> Result<Outcome, InputError> {
    match cmd {
        SchedCommand::Sim { jobs, scheduler, speed } => {
            positive("speed", speed)?;
            let tl = simulate_jobs((*scheduler).into(), &load_jobs(jobs)?, speed)?;
            let metrics = flow_metrics(&tl)?;
            let summary = format!(
                "{} at speed {}: total flow time {}, max idle {}",
                Scheduler::from(*scheduler),
                rational::format(speed),
                Quantity::Exact(metrics.total_flow_time),
                Quantity::Exact(metrics.max_idle_time)
            );
            Ok(Outcome::new(write_timeline(&tl), summary))
        }
        SchedCommand::VerifyKp00 { jobs, eps } | SchedCommand::VerifyPointwise { jobs, eps } | SchedCommand::VerifyIdle { jobs, eps } => {
            positive("eps", eps)?;
            let set = load_jobs(jobs)?;
            let (name, report) = match cmd {
                SchedCommand::VerifyKp00 { .. } => ("sched verify-kp00", verify_kp00(&set, eps)?),
                SchedCommand::VerifyPointwise { .. } => ("sched verify-pointwise", verify_pointwise_bound(&set, eps)?),
                _ => ("sched verify-idle", verify_idle_bound(&set, eps)?),
            };
            let lookup = |key: &str| report.context.iter().find(|(k, _)| k == key).map(|(_, v)| v.clone());
            let detail = match (lookup("ratio").or_else(|| lookup("max_ratio")), lookup("bound")) {
                (Some(ratio), Some(bound)) => format!(", ratio {ratio}, bound {bound}"),
                (Some(ratio), None) => format!(", largest ratio {ratio}"),
                _ => format!(", {} against {}", report.left, report.right),
            };
            Ok(bundle_outcome(name, &[report], detail))
        }
    }
}

fn generate(cmd: &GenCommand, seed: u64) -> Result<Outcome, InputError> {
    let trace = |z: PageRequestSequence, what: &str| {
        let summary = format!("{what} trace: {} requests over N={}", z.len(), z.universe());
        Ok(Outcome::new(write_trace(&z), summary))
    };
    let network = |net: RoutingNetwork, what: &str| {
        let summary =
            format!("{what} network: {} vertices, {} edges, {} commodities", net.vertices(), net.edges().len(), net.commodities().len());
        Ok(Outcome::new(write_network(&net), summary))
    };
    let jobs = |set: JobSet, what: &str| {
        let summary = format!("{what} jobs: {} jobs, total work {}", set.len(), Quantity::Exact(set.total_work()));
        Ok(Outcome::new(write_jobs(&set), summary))
    };
    match cmd {
        GenCommand::Cyclic { k, length } => trace(gen_cyclic_adversary(*k, *length)?, "cyclic"),
        GenCommand::Adaptive { policy, k, length } => trace(gen_adaptive_adversary((*policy).into(), *k, *length)?, "adaptive"),
        GenCommand::Locality { universe, length, locality, window } => {
            let params = LocalityParams { window: *window, ..LocalityParams::new(*universe, *length, *locality) };
            trace(gen_locality_workload(&params, seed)?, "locality")
        }
        GenCommand::Pigou => network(RoutingNetwork::pigou(), "pigou"),
        GenCommand::NonlinearPigou { degree } => {
            if !(degree.is_finite() && *degree >= 0.0) {
                return Err(InputError::field("degree", "must be finite and nonnegative"));
            }
            network(RoutingNetwork::nonlinear_pigou(*degree), "nonlinear pigou")
        }
        GenCommand::RandomNetwork { vertices, two_commodities } => {
            network(gen_random_network(*vertices, *two_commodities, seed)?, "random")
        }
        GenCommand::ParallelLinks { max_links } => network(gen_random_parallel_links(*max_links, seed)?, "parallel-link"),
        GenCommand::Staircase { m, degree, growth } => network(gen_staircase(*m, *degree, *growth)?, "staircase"),
        GenCommand::ExampleSetf { eps, delta } => jobs(gen_example_setf(eps, delta)?, "example"),
        GenCommand::RandomJobs { max_jobs, release_max, processing_max, max_denominator } => {
            let params = RandomJobParams {
                max_jobs: *max_jobs,
                release_max: *release_max,
                processing_max: *processing_max,
                max_denominator: *max_denominator,
            };
            jobs(gen_random_jobs(&params, seed)?, "random")
        }
        GenCommand::GridJobs { n, horizon } => jobs(gen_grid_jobs(*n, *horizon, seed)?, "grid"),
    }
}

/// Exit status: success, failed verification, rejected input.
pub const EXIT_PASS: u8 = 0;
pub const EXIT_FAIL: u8 = 1;
pub const EXIT_INPUT: u8 = 2;

/// Runs the command, writes the artifact and prints the summary.
pub fn dispatch(cli: &Cli) -> u8 {
    let outcome = match run(cli) {
        Ok(outcome) => outcome,
        Err(err) => {
            eprintln!("error: {err}");
            return EXIT_INPUT;
        }
    };
    match &cli.out {
        Some(path) => {
            if let Err(e) = fs::write(path, &outcome.artifact) {
                eprintln!("error: {}", InputError::write(path, e));
                return EXIT_INPUT;
            }
            println!("{}", outcome.summary);
        }
        None => {
            print!("{}", outcome.artifact);
            eprintln!("{}", outcome.summary);
        }
    }
    exit_code(&outcome)
}

fn exit_code(outcome: &Outcome) -> u8 {
    if outcome.pass {
        EXIT_PASS
    } else {
        EXIT_FAIL
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn parse(args: &[&str]) -> Cli {
        Cli::try_parse_from(std::iter::once("auglab").chain(args.iter().copied())).unwrap()
    }

    #[test]
    fn rationals_parse_exactly() {
        let cli = parse(&["sched", "verify-kp00", "--jobs", "x.json", "--eps", "0.1"]);
        let Command::Sched(SchedCommand::VerifyKp00 { eps, .. }) = cli.command else { panic!() };
        assert_eq!(eps, rational::ratio(1, 10));
        assert!(Cli::try_parse_from(["auglab", "sched", "verify-kp00", "--jobs", "x", "--eps", "1/0"]).is_err());
    }

    #[test]
    fn verify_ra_takes_a_pair_or_a_range() {
        parse(&["page", "verify-ra", "--trace", "t", "--k", "3", "--h", "2", "-j", "4"]);
        assert!(Cli::try_parse_from(["auglab", "page", "verify-ra", "--trace", "t", "--k", "3"]).is_err());
        assert!(Cli::try_parse_from(["auglab", "page", "verify-ra", "--trace", "t", "--k", "3", "--h", "1", "--max-k", "4"]).is_err());
    }

    #[test]
    fn seed_defaults_to_the_fixed_constant() {
        if std::env::var_os("AUGLAB_SEED").is_none() {
            assert_eq!(parse(&["gen", "pigou"]).seed, DEFAULT_SEED);
        }
        assert_eq!(parse(&["gen", "pigou", "--seed", "7"]).seed, 7);
    }

    #[test]
    fn nonpositive_tolerance_names_the_field() {
        let cli = parse(&["route", "eq", "--net", "missing.json", "--tol", "0"]);
        let Command::Route(RouteCommand::Eq { solver, .. }) = &cli.command else { panic!() };
        assert_eq!(solver_options(solver).unwrap_err().field_name(), "tol");
    }

    #[test]
    fn failed_checks_exit_one() {
        let good = VerificationReport::new("c", Quantity::count(1), Quantity::count(2), Quantity::count(0));
        let bad = VerificationReport::new("c", Quantity::count(3), Quantity::count(2), Quantity::count(0));
        let outcome = bundle_outcome("x", &[good.clone(), bad], String::new());
        assert_eq!(exit_code(&outcome), EXIT_FAIL);
        assert!(outcome.summary.starts_with("x: FAIL, 1 of 2"));
        assert_eq!(exit_code(&bundle_outcome("x", &[good], String::new())), EXIT_PASS);
    }

    #[test]
    fn generators_are_deterministic() {
        let a = run(&parse(&["gen", "locality", "--universe", "30", "--length", "200", "--locality", "0.8"])).unwrap();
        let b = run(&parse(&["gen", "locality", "--universe", "30", "--length", "200", "--locality", "0.8"])).unwrap();
        assert_eq!(a, b);
        let c = run(&parse(&["gen", "locality", "--universe", "30", "--length", "200", "--locality", "0.8", "--seed", "1"])).unwrap();
        assert_ne!(a.artifact, c.artifact);
    }
}
