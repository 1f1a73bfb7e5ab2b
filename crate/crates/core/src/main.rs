use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Duration;

use clap::{Args, Parser, Subcommand};

use chromasum::export::{to_dot, to_edge_list};
use chromasum::formulas;
use chromasum::verification::{self, Campaign, DeskCaps, ReportFormat, Summary};
use chromasum::{solve, Error, Family, FamilyKind, Quantity, SearchBudget};

const EXIT_USAGE: u8 = 1;
const EXIT_BUDGET: u8 = 2;
const EXIT_MISMATCH: u8 = 3;

#[derive(Parser)]
#[command(name = "chromasum", version, about = "Exact chromatic and b-chromatic sums of graph families")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print a family member as an edge list (default) or DOT.
    Generate {
        /// e.g. `helm:4`
        graph: Family,
        #[arg(long, conflicts_with = "edgelist")]
        dot: bool,
        #[arg(long)]
        edgelist: bool,
    },
    /// Solve one quantity and print the result as JSON.
    Solve {
        graph: Family,
        #[arg(long, short)]
        quantity: Quantity,
        #[command(flatten)]
        budget: BudgetArgs,
    },
    /// Compare solver output with the closed forms and write reports.
    Verify(VerifyArgs),
    /// Print closed-form predictions for a range of n.
    Table {
        #[arg(long)]
        family: FamilyKind,
        #[arg(long)]
        quantity: Quantity,
        #[arg(long)]
        n_min: Option<usize>,
        #[arg(long)]
        n_max: usize,
    },
}

#[derive(Args)]
struct BudgetArgs {
    #[arg(long)]
    budget_nodes: Option<u64>,
    #[arg(long)]
    budget_secs: Option<f64>,
}

impl BudgetArgs {
    fn budget(&self) -> Result<SearchBudget, String> {
        let mut b = SearchBudget::default();
        if let Some(n) = self.budget_nodes {
            b.max_nodes = n;
        }
        if let Some(s) = self.budget_secs {
            b.max_time = Duration::try_from_secs_f64(s).map_err(|e| format!("--budget-secs: {e}"))?;
        }
        Ok(b)
    }
}

#[derive(Args)]
struct VerifyArgs {
    #[arg(long, value_delimiter = ',', default_value = "double_wheel,helm,closed_helm,sunlet,web")]
    families: Vec<FamilyKind>,
    #[arg(long, default_value_t = 3)]
    n_min: usize,
    #[arg(long)]
    n_max: usize,
    #[arg(
        long,
        value_delimiter = ',',
        default_value = "chi,chi_sum_min,chi_sum_max,b_chromatic,b_sum_min,b_sum_max"
    )]
    quantities: Vec<Quantity>,
    #[arg(long, value_delimiter = ',', default_value = "csv")]
    format: Vec<ReportFormat>,
    #[arg(long)]
    out: PathBuf,
    /// Exit 3 if any row disagrees with its closed form.
    #[arg(long)]
    strict: bool,
    #[arg(long)]
    jobs: Option<usize>,
    /// Defaults to `$CHROMASUM_CACHE`, then `<out>/cache/results.json`.
    #[arg(long)]
    cache: Option<PathBuf>,
    /// Also solve pairs that have no closed form.
    #[arg(long)]
    include_uncovered: bool,
    /// Largest graph (vertices) attempted for b-chromatic quantities.
    #[arg(long)]
    b_cap: Option<usize>,
    /// Largest graph (vertices) attempted for the other quantities.
    #[arg(long)]
    chi_cap: Option<usize>,
    #[command(flatten)]
    budget: BudgetArgs,
}

fn usage(msg: impl std::fmt::Display) -> ExitCode {
    eprintln!("error: {msg}");
    ExitCode::from(EXIT_USAGE)
}

fn run(cli: Cli) -> Result<ExitCode, Error> {
    match cli.command {
        Command::Generate { graph, dot, .. } => {
            let g = graph.build()?;
            print!("{}", if dot { to_dot(&g) } else { to_edge_list(&g) });
        }
        Command::Solve {
            graph,
            quantity,
            budget,
        } => {
            let budget = match budget.budget() {
                Ok(b) => b,
                Err(e) => return Ok(usage(e)),
            };
            let g = graph.build()?;
            match solve(&g, quantity, &budget) {
                Ok(r) => println!("{}", serde_json::to_string(&r)?),
                Err(e @ Error::BudgetExhausted { .. }) => {
                    eprintln!("{graph} {quantity}: {e}");
                    return Ok(ExitCode::from(EXIT_BUDGET));
                }
                Err(e) => return Err(e),
            }
        }
        Command::Table {
            family,
            quantity,
            n_min,
            n_max,
        } => {
            let Some(e) = formulas::entry(family, quantity) else {
                return Err(Error::NotInPaper { family, quantity });
            };
            println!("n,{quantity}");
            for n in n_min.unwrap_or(family.min_n())..=n_max {
                println!("{n},{}", e.predict(n)?);
            }
        }
        Command::Verify(a) => {
            let budget = match a.budget.budget() {
                Ok(b) => b,
                Err(e) => return Ok(usage(e)),
            };
            let defaults = DeskCaps::default();
            let campaign = Campaign {
                budget,
                caps: DeskCaps {
                    b_max_vertices: a.b_cap.unwrap_or(defaults.b_max_vertices),
                    chi_max_vertices: a.chi_cap.unwrap_or(defaults.chi_max_vertices),
                },
                jobs: a.jobs,
                include_uncovered: a.include_uncovered,
                ..Campaign::new(a.families, a.n_min, a.n_max, a.quantities)
            };
            let cache = a
                .cache
                .unwrap_or_else(|| verification::default_cache_path(&a.out));
            let rows = verification::verify(&campaign, &a.out, &a.format, &cache)?;
            let summary = Summary::of(&rows);
            println!("{summary}");
            if a.strict && summary.mismatches > 0 {
                return Ok(ExitCode::from(EXIT_MISMATCH));
            }
            if summary.aborted > 0 {
                return Ok(ExitCode::from(EXIT_BUDGET));
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("warn")).init();
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() {
                ExitCode::from(EXIT_USAGE)
            } else {
                ExitCode::SUCCESS
            };
        }
    };
    match run(cli) {
        Ok(code) => code,
        Err(e @ (Error::InvalidParameter(_) | Error::NotInPaper { .. } | Error::UnknownFormat(_))) => usage(e),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::FAILURE
        }
    }
}
