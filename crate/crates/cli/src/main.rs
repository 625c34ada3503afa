use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use qsym_cli::{cmd_expand, cmd_gfun, cmd_hilbert, cmd_normal_form, cmd_paths, cmd_verify, Basis};
use qsym_core::verify::Bounds;
use qsym_core::Ideal;

/// Quasi-symmetric ideals: Hilbert functions, Catalan paths, G-functions
/// and verification sweeps.
#[derive(Parser)]
#[command(name = "qsym", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Aligned tables and ASCII paths instead of JSON.
    #[arg(long, global = true)]
    pretty: bool,
    /// Print JSON (the default; combined with --pretty prints both).
    #[arg(long, global = true)]
    json: bool,
    /// Worker threads for parallel sweeps.
    #[arg(long, global = true)]
    threads: Option<usize>,
}

#[derive(Subcommand)]
enum Command {
    /// Quotient dimensions per degree with the Catalan bound.
    Hilbert {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 0)]
        e: u32,
        #[arg(long)]
        max_deg: Option<u32>,
    },
    /// Count (and optionally list) e-Catalan paths of length n.
    Paths {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 0)]
        e: u32,
        #[arg(long)]
        list: bool,
    },
    /// The G-function of a generalized composition such as 1,0,1.
    Gfun {
        alpha: String,
        #[arg(long)]
        n: usize,
    },
    /// Normal form of a monomial given by its exponents, e.g. 1,0.
    NormalForm {
        monomial: String,
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 0)]
        e: u32,
    },
    /// M or F quasi-symmetric polynomial of a composition.
    Expand {
        alpha: String,
        #[arg(long)]
        n: usize,
        #[arg(long, default_value = "F")]
        basis: String,
    },
    /// Run a verification suite, or "all".
    Verify {
        suite: String,
        #[command(flatten)]
        bounds: BoundArgs,
    },
}

#[derive(Args)]
struct BoundArgs {
    #[arg(long)]
    max_len: Option<usize>,
    #[arg(long)]
    max_deg: Option<u32>,
    /// Window size; each suite picks its own when omitted.
    #[arg(long)]
    n: Option<usize>,
    #[arg(long)]
    max_level: Option<u32>,
    #[arg(long)]
    samples: Option<usize>,
    #[arg(long)]
    seed: Option<u64>,
}

impl BoundArgs {
    fn bounds(&self) -> Bounds {
        let d = Bounds::default();
        Bounds {
            max_len: self.max_len.unwrap_or(d.max_len),
            max_deg: self.max_deg.unwrap_or(d.max_deg),
            window: self.n.or(d.window),
            max_level: self.max_level.unwrap_or(d.max_level),
            samples: self.samples.unwrap_or(d.samples),
            seed: self.seed.unwrap_or(d.seed),
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    if let Some(t) = cli.threads {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(t).build_global() {
            eprintln!("usage: cannot configure {t} threads: {e}");
            return ExitCode::from(2);
        }
    }
    let calc = Ideal::new();
    let outcome = match &cli.command {
        Command::Hilbert { n, e, max_deg } => cmd_hilbert(&calc, *n, *e, *max_deg),
        Command::Paths { n, e, list } => cmd_paths(*n, *e, *list),
        Command::Gfun { alpha, n } => cmd_gfun(&calc, alpha, *n),
        Command::NormalForm { monomial, n, e } => cmd_normal_form(&calc, monomial, *n, *e),
        Command::Expand { alpha, n, basis } => {
            basis.parse::<Basis>().and_then(|b| cmd_expand(&calc, alpha, *n, b))
        }
        Command::Verify { suite, bounds } => cmd_verify(&calc, suite, &bounds.bounds()),
    };
    match outcome {
        Ok(report) => {
            if cli.pretty {
                print!("{}", report.pretty);
            }
            if cli.json || !cli.pretty {
                println!("{}", report.to_json());
            }
            eprintln!("elapsed {:.3}s", report.timing.as_secs_f64());
            ExitCode::from(report.exit_code() as u8)
        }
        Err(e) => {
            eprintln!("{e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
