use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand};
use ghw_cli::commands::{self, build_order, load_code, parse_order_spec, UnionOrders};
use ghw_cli::{exit_code, render_text, IdealKind, ResultDocument, Route};
use ghw_core::analysis::{CheckKind, SearchConfig};
use ghw_core::matrix_file::parse_matrix;
use ghw_core::{Characteristic, Code, OrderKind, TermOrder};

/// Generalized Hamming weights of binary linear codes.
///
/// Matrix files hold one generator row per line as space-separated 0/1
/// entries; blank lines and `#` comments are ignored. Set
/// GHW_UNSUPPORTED_SIZE_CAP to raise the length cap (default 24, unsupported).
#[derive(Parser)]
#[command(name = "ghw", version)]
struct Cli {
    /// Worker threads (default: all cores).
    #[arg(long, global = true)]
    threads: Option<usize>,
    /// Print the JSON result document instead of text.
    #[arg(long, global = true)]
    json: bool,
    /// Also write the JSON result document to this file.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone)]
struct OrderArgs {
    /// Order kind.
    #[arg(long, default_value = "degrevlex")]
    order: OrderKind,
    /// Variable priority, highest first, 1-based: "6,5,4,3,2,1".
    #[arg(long)]
    vars: Option<String>,
}

impl OrderArgs {
    fn build(&self, n: usize) -> Result<TermOrder> {
        build_order(self.order, self.vars.as_deref(), n)
    }
}

#[derive(Args, Clone)]
struct FieldArgs {
    /// Characteristic of the coefficient field for homology.
    #[arg(long, default_value_t = 2)]
    field_char: u32,
}

impl FieldArgs {
    fn get(&self) -> Result<Characteristic> {
        Ok(Characteristic::new(self.field_char)?)
    }
}

#[derive(Subcommand)]
enum Command {
    /// Weight hierarchy by one route.
    Ghw {
        file: PathBuf,
        #[arg(long, value_enum, default_value = "oracle")]
        route: Route,
        #[command(flatten)]
        order: OrderArgs,
        #[command(flatten)]
        field: FieldArgs,
    },
    /// Betti diagram of a monomial ideal attached to the code.
    Betti {
        file: PathBuf,
        #[arg(long, value_enum, default_value = "stanley-reisner")]
        ideal: IdealKind,
        #[command(flatten)]
        order: OrderArgs,
        #[command(flatten)]
        field: FieldArgs,
        /// Orders for union-testsets as KIND or KIND:VARS; repeatable.
        #[arg(long = "with-order")]
        with_order: Vec<String>,
        /// Sampled orders for union-testsets when the length exceeds 7.
        #[arg(long, default_value_t = 256)]
        samples: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Reduced Gröbner basis and test set.
    Gb {
        file: PathBuf,
        #[command(flatten)]
        order: OrderArgs,
    },
    /// Coset-leader decoding of one received word.
    Decode {
        file: PathBuf,
        /// Received word, coordinate 1 leftmost.
        word: String,
        #[command(flatten)]
        order: OrderArgs,
    },
    /// All theorem checks for one code and order.
    Verify {
        file: PathBuf,
        #[command(flatten)]
        order: OrderArgs,
        #[command(flatten)]
        field: FieldArgs,
    },
    /// Random search for codes whose test set misses the hierarchy.
    Search {
        #[arg(long = "n", required_unless_present = "config")]
        n: Option<usize>,
        #[arg(long = "k", required_unless_present = "config")]
        k: Option<usize>,
        #[arg(long, default_value_t = 100)]
        trials: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Orders applied to every code, KIND or KIND:VARS; repeatable.
        #[arg(long = "with-order")]
        with_order: Vec<String>,
        /// Extra random orders per code.
        #[arg(long, default_value_t = 3)]
        random_orders: usize,
        /// Generator matrix examined before the random trials; repeatable.
        #[arg(long)]
        fixture: Vec<PathBuf>,
        /// Read the whole search configuration from JSON.
        #[arg(long, conflicts_with_all = ["n", "k"])]
        config: Option<PathBuf>,
        /// Write the effective configuration as JSON for replay.
        #[arg(long)]
        save_config: Option<PathBuf>,
    },
}

fn read_matrix(path: &Path) -> Result<ghw_core::BinaryMatrix> {
    let text = std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    parse_matrix(&text).with_context(|| format!("parsing {}", path.display()))
}

fn orders_from(specs: &[String], n: usize) -> Result<Vec<TermOrder>> {
    specs.iter().map(|s| parse_order_spec(s, n)).collect()
}

fn search_config(command: &Command) -> Result<SearchConfig> {
    let Command::Search { n, k, trials, seed, with_order, random_orders, fixture, config, .. } = command else {
        unreachable!()
    };
    if let Some(path) = config {
        let text = std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
        return serde_json::from_str(&text).with_context(|| format!("parsing {}", path.display()));
    }
    let (n, k) = (n.expect("required by clap"), k.expect("required by clap"));
    if k == 0 || k > n {
        bail!("need 1 <= k <= n, got n = {n}, k = {k}");
    }
    Ok(SearchConfig {
        n,
        k,
        trials: *trials,
        seed: *seed,
        orders: orders_from(with_order, n)?,
        random_orders: *random_orders,
        fixtures: fixture.iter().map(|p| read_matrix(p)).collect::<Result<_>>()?,
    })
}

fn with_code(file: &Path, f: impl FnOnce(&Code) -> Result<ResultDocument>) -> Result<ResultDocument> {
    let code = load_code(file)?;
    f(&code)
}

fn run(cli: &Cli) -> Result<ResultDocument> {
    match &cli.command {
        Command::Ghw { file, route, order, field } => {
            with_code(file, |c| commands::cmd_ghw(c, *route, &order.build(c.len())?, field.get()?))
        }
        Command::Betti { file, ideal, order, field, with_order, samples, seed } => with_code(file, |c| {
            let union = UnionOrders { explicit: orders_from(with_order, c.len())?, samples: *samples, seed: *seed };
            commands::cmd_betti(c, *ideal, &order.build(c.len())?, &union, field.get()?)
        }),
        Command::Gb { file, order } => with_code(file, |c| commands::cmd_gb(c, &order.build(c.len())?)),
        Command::Decode { file, word, order } => {
            with_code(file, |c| commands::cmd_decode(c, word, &order.build(c.len())?))
        }
        Command::Verify { file, order, field } => {
            with_code(file, |c| commands::cmd_verify(c, &order.build(c.len())?, field.get()?))
        }
        search @ Command::Search { save_config, .. } => {
            let config = search_config(search)?;
            if let Some(path) = save_config {
                let text = serde_json::to_string_pretty(&config)? + "\n";
                std::fs::write(path, text).with_context(|| format!("writing {}", path.display()))?;
            }
            commands::cmd_search(&config)
        }
    }
}

fn emit(cli: &Cli, doc: &ResultDocument) -> Result<()> {
    let json = doc.to_json()?;
    if let Some(path) = &cli.out {
        std::fs::write(path, &json).with_context(|| format!("writing {}", path.display()))?;
    }
    if cli.json {
        print!("{json}");
    } else {
        print!("{}", render_text(doc));
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    if let Some(threads) = cli.threads {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(threads).build_global() {
            eprintln!("error: {e}");
            return ExitCode::from(1);
        }
    }
    let result = run(&cli).and_then(|doc| emit(&cli, &doc).map(|()| doc));
    match result {
        Ok(doc) => {
            let failed: Vec<String> = doc
                .verification
                .iter()
                .flat_map(|v| v.checks.iter())
                .filter(|c| c.kind == CheckKind::Proven && !c.passed)
                .map(|c| format!("{}: {}", c.name, c.detail))
                .collect();
            if failed.is_empty() {
                ExitCode::SUCCESS
            } else {
                eprintln!("error: proven property violated\n  {}", failed.join("\n  "));
                ExitCode::from(3)
            }
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(exit_code(&e) as u8)
        }
    }
}
