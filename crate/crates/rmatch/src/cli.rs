//! Command-line front end.

use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use rmatch_core::asymptotics::{
    default_probe, growth_constant_with_tol, leg_growth, ln_lower_bound, ln_upper_bound, solve_s, table_row_with_tol,
};
use rmatch_core::extremal::{spider_growth_estimate, spider_vs_path, transform_leaf_reduction, SearchReport};
use rmatch_core::series::path_count_series;
use rmatch_core::{brute_force_count, count_r_matchings, BigCount, CanonicalCode, Error, Tree};
use thiserror::Error;

use crate::io::{read_tree_file, TreeFileError};
use crate::report::*;
use crate::search::{par_probe, par_search_extremal, resolve_threads};
use crate::verify::{run_suite, SUITES};

#[derive(Debug, Parser)]
#[command(name = "rmatch", version, about = "Exact counts of distance-r matchings in trees")]
pub struct RunConfig {
    /// Output format
    #[arg(long, value_enum, default_value_t, global = true)]
    pub format: Format,
    /// Worker threads for search and probe [default: RMATCH_THREADS, else all cores]
    #[arg(long, global = true)]
    pub threads: Option<usize>,
    /// Largest tree order the enumerator will visit
    #[arg(long, default_value_t = rmatch_core::enumerate::DEFAULT_LIMIT, global = true)]
    pub limit: usize,
    /// Root-finding tolerance
    #[arg(long, default_value_t = rmatch_core::asymptotics::DEFAULT_TOL, global = true)]
    pub tol: f64,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args)]
pub struct TreeArgs {
    #[arg(long)]
    pub r: u32,
    /// Tree file: vertex count, then one `u v` edge per line
    #[arg(long)]
    pub tree: PathBuf,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Count r-matchings of a tree
    Count {
        #[command(flatten)]
        input: TreeArgs,
        /// Use the subset-enumeration oracle instead of the tree DP
        #[arg(long)]
        brute_force: bool,
    },
    /// r-matching counts of paths on 0..=n-max vertices
    PathSeries {
        #[arg(long)]
        r: u32,
        #[arg(long)]
        n_max: usize,
    },
    /// Growth constants for one radius
    Constants {
        #[arg(long)]
        r: u32,
        /// Path length for the empirical path constant [default: 300 + 100 r]
        #[arg(long)]
        n_probe: Option<usize>,
    },
    /// Constants for a range of radii
    Table {
        #[arg(long, default_value_t = 2)]
        r_min: u32,
        #[arg(long, default_value_t = 11)]
        r_max: u32,
    },
    /// Compare a spider with the path on the same vertex count
    Spider {
        #[arg(long)]
        r: u32,
        /// Leg length in edges
        #[arg(long)]
        a: usize,
        /// Number of legs
        #[arg(long, conflicts_with = "b_max", required_unless_present = "b_max")]
        b: Option<usize>,
        /// Search b = 1..=b-max for the first spider beating the path
        #[arg(long)]
        b_max: Option<usize>,
    },
    /// Max and min over all trees on n vertices
    Search {
        #[arg(long)]
        r: u32,
        #[arg(long)]
        n: usize,
    },
    /// Whether paths are maximal for r in {3, 4, 5, 7, 9}, n = 1..=n-max
    #[command(name = "probe-4-4")]
    Probe {
        #[arg(long)]
        r: u32,
        #[arg(long)]
        n_max: usize,
    },
    /// Upper and lower bounds on the maximum count
    Bounds {
        #[arg(long)]
        r: u32,
        #[arg(long)]
        n: usize,
    },
    /// Apply the leaf-reduction transform
    Transform {
        #[command(flatten)]
        input: TreeArgs,
    },
    /// Run an invariant suite
    Verify {
        #[arg(value_parser = clap::builder::PossibleValuesParser::new(SUITES))]
        suite: String,
    },
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Input(String),
    #[error("internal invariant violated: {0}")]
    Invariant(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Input(_) => 1,
            CliError::Invariant(_) => 2,
        }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        CliError::Input(e.to_string())
    }
}

impl From<TreeFileError> for CliError {
    fn from(e: TreeFileError) -> Self {
        CliError::Input(e.to_string())
    }
}

/// Rendered report plus exit status (0, or 2 when a verify suite fails).
#[derive(Debug)]
pub struct Outcome {
    pub output: String,
    pub status: i32,
}

fn radius(r: u32, min: u32) -> Result<u32, CliError> {
    if r < min {
        return Err(Error::InvalidRadius { r, min }.into());
    }
    Ok(r)
}

fn at_least(name: &'static str, value: usize, min: usize) -> Result<usize, CliError> {
    if value < min {
        return Err(Error::ParameterOutOfRange {
            name,
            value: value as u64,
            min: min as u64,
        }
        .into());
    }
    Ok(value)
}

fn check_search_report(rep: &SearchReport) -> Result<(), CliError> {
    let ok = rep.min_count >= BigCount::from(rep.n)
        && rep.path_count <= rep.max_count
        && !rep.argmax_codes.is_empty()
        && !rep.argmin_codes.is_empty();
    if ok {
        Ok(())
    } else {
        Err(CliError::Invariant(format!("inconsistent search report at n = {}, r = {}", rep.n, rep.r)))
    }
}

impl RunConfig {
    fn validate(&self) -> Result<(), CliError> {
        if !(self.tol > 0.0 && self.tol <= 1e-3) {
            return Err(CliError::Input(format!("tol must lie in (0, 1e-3], got {}", self.tol)));
        }
        if self.threads == Some(0) {
            return Err(CliError::Input("threads must be ≥ 1".into()));
        }
        Ok(())
    }
}

pub fn run(config: &RunConfig) -> Result<Outcome, CliError> {
    config.validate()?;
    let fmt = config.format;
    let threads = || resolve_threads(config.threads);
    let ok = |output: String| Ok(Outcome { output, status: 0 });

    match &config.command {
        Command::Count { input, brute_force } => {
            let r = radius(input.r, 1)?;
            let tree = read_tree_file(&input.tree)?;
            let count = if *brute_force {
                brute_force_count(&tree, r)?
            } else {
                count_r_matchings(&tree, r)?
            };
            ok(CountReport::new(r, tree.n(), *brute_force, &count).render(fmt))
        }
        Command::PathSeries { r, n_max } => {
            let series = path_count_series(radius(*r, 1)?, *n_max)?;
            ok(PathSeriesReport::new(*r, series.values()).render(fmt))
        }
        Command::Constants { r, n_probe } => {
            let r = radius(*r, 2)?;
            let n_probe = at_least("n-probe", n_probe.unwrap_or_else(|| default_probe(r)), 50)?;
            let mut rec = table_row_with_tol(r, config.tol)?;
            let growth = growth_constant_with_tol(r, n_probe, config.tol)?;
            rec.c_empirical = growth.empirical;
            ok(ConstantsReport::new(&rec, &growth).render(fmt))
        }
        Command::Table { r_min, r_max } => {
            let r_min = radius(*r_min, 2)?;
            at_least("r-max", *r_max as usize, r_min as usize)?;
            let rows = (r_min..=*r_max)
                .map(|r| table_row_with_tol(r, config.tol).map(|rec| ConstantsRow::from(&rec)))
                .collect::<Result<_, _>>()?;
            ok(TableReport { rows }.render(fmt))
        }
        Command::Spider { r, a, b, b_max } => {
            let r = radius(*r, 1)?;
            let a = at_least("a", *a, 1)?;
            let (b, b_max) = match (b, b_max) {
                (Some(b), _) => (Some(at_least("b", *b, 1)?), None),
                (None, Some(m)) => (spider_vs_path(r, a, at_least("b-max", *m, 1)?)?, Some(*m)),
                (None, None) => return Err(CliError::Input("one of --b or --b-max is required".into())),
            };
            let mut rep = SpiderReport {
                r,
                a,
                b,
                b_max,
                n: None,
                spider_count: None,
                path_count: None,
                spider_beats_path: false,
                growth_estimate: None,
                leg_growth: sig10(leg_growth(r, a)),
            };
            if let Some(b) = b {
                let spider = Tree::spider(a, b)?;
                let sc = count_r_matchings(&spider, r)?;
                let pc = count_r_matchings(&Tree::path(spider.n())?, r)?;
                rep.n = Some(spider.n());
                rep.spider_beats_path = sc > pc;
                rep.spider_count = Some(sc.to_string());
                rep.path_count = Some(pc.to_string());
                rep.growth_estimate = Some(sig10(spider_growth_estimate(r, a, b)?));
            }
            ok(rep.render(fmt))
        }
        Command::Search { r, n } => {
            let r = radius(*r, 1)?;
            let n = at_least("n", *n, 1)?;
            let rep = par_search_extremal(r, n, config.limit, threads())?;
            check_search_report(&rep)?;
            ok(SearchReportDto::from(&rep).render(fmt))
        }
        Command::Probe { r, n_max } => {
            let n_max = at_least("n-max", *n_max, 1)?;
            let reports = par_probe(*r, n_max, config.limit, threads())?;
            for rep in &reports {
                check_search_report(rep)?;
            }
            ok(ProbeReport::new(*r, n_max, &reports).render(fmt))
        }
        Command::Bounds { r, n } => {
            let r = radius(*r, 2)?;
            let n = at_least("n", *n, 1)?;
            let path = path_count_series(r, n)?;
            let s = solve_s(r, config.tol)?;
            let rep = BoundsReport::new(
                r,
                n,
                s,
                (1.0 / (s + 1.0)).exp(),
                ln_upper_bound(r, n)?,
                ln_lower_bound(r, n)?,
                path.get(n).expect("series covers n"),
            );
            ok(rep.render(fmt))
        }
        Command::Transform { input } => {
            let r = radius(input.r, 1)?;
            let tree = read_tree_file(&input.tree)?;
            let rep = match transform_leaf_reduction(&tree, r) {
                Ok(out) => {
                    if out.output_count < out.input_count || (out.strict && out.output_count == out.input_count) {
                        return Err(CliError::Invariant(format!(
                            "transform lost matchings: {} -> {}",
                            out.input_count, out.output_count
                        )));
                    }
                    TransformReport::applied(r, &out)
                }
                Err(Error::NotApplicable(why)) => TransformReport::not_applicable(
                    r,
                    &CanonicalCode::of(&tree),
                    &count_r_matchings(&tree, r)?,
                    why.to_string(),
                ),
                Err(e) => return Err(e.into()),
            };
            ok(rep.render(fmt))
        }
        Command::Verify { suite } => {
            let rep = run_suite(suite, threads()).ok_or_else(|| CliError::Input(format!("unknown suite {suite:?}")))?;
            Ok(Outcome {
                output: rep.render(fmt),
                status: if rep.passed { 0 } else { 2 },
            })
        }
    }
}

/// Parses `args`, runs, and writes to stdout/stderr; returns the exit code.
pub fn main_with_args<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let config = match RunConfig::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { 1 } else { 0 };
        }
    };
    match run(&config) {
        Ok(out) => {
            print!("{}", out.output);
            out.status
        }
        Err(e) => {
            eprintln!("error: {e}");
            e.exit_code()
        }
    }
}
