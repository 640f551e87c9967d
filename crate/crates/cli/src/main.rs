use std::fs;
use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use springer_sing::orbitgraph::HARD_MAX_N;
use springer_sing::{Error, LinkPattern, Oracle, TwoColumnTableau, DEFAULT_MAX_N};

mod commands;
mod text;

#[derive(Parser)]
#[command(version, about = "Singular loci of Springer fiber components over x^2 = 0")]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Largest n the orbit-graph oracle will build
    #[arg(long, global = true, env = "SPRINGER_SING_MAX_N", default_value_t = DEFAULT_MAX_N,
          value_parser = size_limit)]
    max_n: usize,

    /// Output format; each command accepts a subset
    #[arg(long, global = true, value_enum)]
    format: Option<Format>,

    /// Write output here instead of stdout
    #[arg(long, global = true)]
    out: Option<PathBuf>,
}

fn size_limit(s: &str) -> Result<usize, String> {
    let n: usize = s.parse().map_err(|e| format!("{e}"))?;
    if (1..=HARD_MAX_N).contains(&n) {
        Ok(n)
    } else {
        Err(format!("must be between 1 and {HARD_MAX_N}"))
    }
}

#[derive(Subcommand)]
enum Command {
    /// Tableau, rho and smoothness of a component
    Classify(Input),
    /// Components of the singular locus
    Sing {
        #[command(flatten)]
        input: Input,
        #[arg(long, value_enum, default_value_t = Method::Direct)]
        method: Method,
    },
    /// The orbit graph G_sigma
    Graph {
        #[command(flatten)]
        input: Input,
        /// Drop vertices of higher codimension from the DOT output
        #[arg(long)]
        max_codim: Option<usize>,
    },
    /// Draw a link pattern
    Render(Input),
    /// List I(n,k)
    Enumerate {
        #[arg(long)]
        n: usize,
        /// All k when omitted
        #[arg(long)]
        k: Option<usize>,
        #[arg(long)]
        maximal_only: bool,
    },
    /// Compare the direct construction with the oracle on every maximal pattern
    Crosscheck {
        /// Sweep n = 1..=N
        #[arg(long, default_value_t = 8)]
        n: usize,
    },
}

#[derive(Args)]
#[group(required = true, multiple = false, id = "source")]
struct Input {
    /// Link pattern, e.g. "n=6 (2,3)(4,5)"
    #[arg(long)]
    lp: Option<String>,
    /// File holding a two-column tableau, one row per line
    #[arg(long)]
    tableau: Option<PathBuf>,
    /// Number of points, when the pattern does not say
    #[arg(long, requires = "lp")]
    n: Option<usize>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Method {
    Direct,
    Graph,
    Both,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Dot,
    Svg,
    Ascii,
}

/// What went wrong, sorted into exit codes.
#[derive(Debug, thiserror::Error)]
enum Failure {
    #[error("{0}")]
    Parse(String),
    #[error("{0}")]
    Scope(String),
    #[error("{0}")]
    Size(String),
    #[error("{0}")]
    Mismatch(String),
    #[error(transparent)]
    Io(#[from] io::Error),
}

impl Failure {
    fn code(&self) -> u8 {
        match self {
            Failure::Parse(_) => 2,
            Failure::Scope(_) => 3,
            Failure::Size(_) => 4,
            Failure::Mismatch(_) => 5,
            Failure::Io(_) => 1,
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let msg = e.to_string();
        match e {
            Error::Parse(_) | Error::Tableau(_) | Error::TooManyArcs { .. } => Failure::Parse(msg),
            Error::SizeLimit { .. } => Failure::Size(msg),
            Error::Finding(_) => Failure::Mismatch(msg),
            _ => Failure::Scope(msg),
        }
    }
}

/// Where the pattern came from, so reports can show both forms.
struct Subject {
    sigma: LinkPattern,
    tableau: Option<TwoColumnTableau>,
}

impl Input {
    fn load(&self) -> Result<Subject, Failure> {
        if let Some(path) = &self.tableau {
            let body = fs::read_to_string(path)
                .map_err(|e| Failure::Parse(format!("{}: {e}", path.display())))?;
            let t: TwoColumnTableau = body.parse().map_err(|e| Failure::from(Error::Tableau(e)))?;
            return Ok(Subject {
                sigma: t.to_link_pattern(),
                tableau: Some(t),
            });
        }
        let raw = self.lp.as_deref().unwrap_or_default();
        let text = match self.n {
            Some(n) if !raw.contains('n') => format!("{raw} n={n}"),
            _ => raw.to_string(),
        };
        let sigma: LinkPattern = text.parse().map_err(|e| Failure::from(Error::Parse(e)))?;
        if let Some(n) = self.n {
            if n != sigma.n() {
                return Err(Failure::Parse(format!("--n {n} disagrees with {sigma}")));
            }
        }
        let tableau = TwoColumnTableau::from_link_pattern(&sigma).ok();
        Ok(Subject { sigma, tableau })
    }
}

/// Resolved output settings shared by every command.
pub(crate) struct Output {
    format: Option<Format>,
}

impl Output {
    fn pick(&self, allowed: &[Format], default: Format) -> Result<Format, Failure> {
        let f = self.format.unwrap_or(default);
        if allowed.contains(&f) {
            Ok(f)
        } else {
            let names: Vec<String> = allowed.iter().map(|a| format!("{a:?}").to_lowercase()).collect();
            Err(Failure::Parse(format!(
                "format {} is not available here; use one of {}",
                format!("{f:?}").to_lowercase(),
                names.join(", ")
            )))
        }
    }
}

fn run(cli: Cli) -> Result<(String, Result<(), Failure>), Failure> {
    let oracle = Oracle::new(cli.max_n);
    let out = Output { format: cli.format };
    match cli.command {
        Command::Classify(input) => commands::classify(&input.load()?, &oracle, &out),
        Command::Sing { input, method } => commands::sing(&input.load()?, method, &oracle, &out),
        Command::Graph { input, max_codim } => commands::graph(&input.load()?.sigma, max_codim, &oracle, &out),
        Command::Render(input) => commands::render(&input.load()?.sigma, &out),
        Command::Enumerate { n, k, maximal_only } => commands::enumerate(n, k, maximal_only, &out),
        Command::Crosscheck { n } => commands::crosscheck(n, &oracle, &out),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let target = cli.out.clone();
    let outcome = run(cli).and_then(|(body, verdict)| {
        match &target {
            Some(path) => fs::write(path, &body)?,
            None => io::stdout().lock().write_all(body.as_bytes())?,
        }
        verdict
    });
    match outcome {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("springer-sing: {e}");
            ExitCode::from(e.code())
        }
    }
}
