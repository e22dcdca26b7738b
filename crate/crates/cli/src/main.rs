use std::io::Write;
use std::ops::RangeInclusive;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use kbonacci::config::Config;
use kbonacci::oracle::{verify_critical_guarded, verify_invariants, verify_squares};
use kbonacci::squares::{
    critical_deficit, enumerate_squares, square_descriptors, SquareDescriptor,
};
use kbonacci::tables::{
    critical_table, power_table, render_critical_table, render_power_table, render_square_table,
    square_table, OutputFormat,
};
use kbonacci::{
    critical_exponent, critical_factor, finite_word_capped, infinite_prefix_capped, is_factor,
    word_length, Error, Strategy, VerificationReport, Word,
};
use serde_json::json;

#[derive(Parser)]
#[command(
    name = "kbonacci",
    version,
    about = "k-bonacci words over an infinite alphabet"
)]
struct Cli {
    /// TOML config file (defaults to $KBONACCI_CONFIG, then ./kbonacci.toml)
    #[arg(long, global = true)]
    config: Option<PathBuf>,
    /// Refuse words longer than this many symbols
    #[arg(long, global = true)]
    length_cap: Option<u64>,
    /// Largest word handed to the maximal-index oracle
    #[arg(long, global = true)]
    oracle_guard: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Paper,
    Csv,
}

impl From<Format> for OutputFormat {
    fn from(f: Format) -> Self {
        match f {
            Format::Json => OutputFormat::Json,
            Format::Paper => OutputFormat::Paper,
            Format::Csv => OutputFormat::Csv,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum Style {
    Plain,
    PaperExponent,
}

#[derive(Clone, Copy, ValueEnum)]
enum Suite {
    Squares,
    Critical,
    Invariants,
}

#[derive(Subcommand)]
enum Command {
    /// Print W_n, or the length-L prefix of the infinite word
    Gen {
        #[arg(long)]
        k: usize,
        #[arg(long, conflicts_with = "len", required_unless_present = "len")]
        n: Option<usize>,
        #[arg(long)]
        len: Option<usize>,
        #[arg(long, value_enum, default_value = "paper")]
        format: Format,
    },
    /// List the squares of W_n with their descriptors
    Squares {
        #[arg(long)]
        k: usize,
        #[arg(long)]
        n: usize,
        /// One line per distinct root
        #[arg(long)]
        distinct: bool,
        #[arg(long, value_enum, default_value = "paper")]
        format: Format,
    },
    /// Critical exponent and the first critical factors
    Critical {
        #[arg(long)]
        k: usize,
        #[arg(long, default_value_t = 1)]
        factor_count: usize,
        #[arg(long, value_enum, default_value = "plain")]
        style: Style,
        #[arg(long, value_enum, default_value = "paper")]
        format: Format,
    },
    /// Check closed forms against brute force over a range of levels
    Verify {
        #[arg(long)]
        k: usize,
        /// Inclusive range A..B
        #[arg(long, value_parser = parse_range)]
        n_range: RangeInclusive<usize>,
        #[arg(long, value_enum)]
        suite: Suite,
        #[arg(long, value_enum, default_value = "paper")]
        format: Format,
    },
    /// Regenerate table 1 (squares), 2 (powers) or 3 (critical factors)
    Table {
        #[arg(value_parser = clap::value_parser!(u8).range(1..=3))]
        which: u8,
        #[arg(long, value_enum, default_value = "paper")]
        format: Format,
    },
}

fn parse_range(s: &str) -> Result<RangeInclusive<usize>, String> {
    let (a, b) = s.split_once("..").ok_or("expected A..B")?;
    let b = b.strip_prefix('=').unwrap_or(b);
    let a: usize = a
        .trim()
        .parse()
        .map_err(|_| format!("bad range start {a:?}"))?;
    let b: usize = b
        .trim()
        .parse()
        .map_err(|_| format!("bad range end {b:?}"))?;
    if a > b {
        return Err(format!("empty range {a}..{b}"));
    }
    Ok(a..=b)
}

enum Failure {
    Usage(Error),
    Verification,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Usage(e)
    }
}

fn word_line(w: &Word, format: Format) -> String {
    match format {
        Format::Json => w.to_json(),
        Format::Paper => w.to_paper(),
        Format::Csv => w.iter().map(u64::to_string).collect::<Vec<_>>().join(","),
    }
}

fn descriptor_line(d: &SquareDescriptor, root: &Word, format: Format) -> String {
    match format {
        Format::Json => json!({"k": d.k, "n": d.n, "i": d.i, "j": d.j, "root": root}).to_string(),
        Format::Paper => format!(
            "C^({})({}i+W_{}) i={} | {}",
            d.j,
            d.k,
            d.base_level(),
            d.i,
            root.to_paper()
        ),
        Format::Csv => format!("{},{},{},{},{}", d.k, d.n, d.i, d.j, root.to_paper()),
    }
}

fn gen(
    k: usize,
    n: Option<usize>,
    len: Option<usize>,
    format: Format,
    cfg: &Config,
) -> Result<String, Failure> {
    let w = match (n, len) {
        (Some(n), _) => finite_word_capped(k, n, Strategy::Recursion, cfg.length_cap)?,
        (None, Some(len)) => infinite_prefix_capped(k, len, cfg.length_cap)?,
        (None, None) => unreachable!("clap requires --n or --len"),
    };
    Ok(word_line(&w, format) + "\n")
}

fn squares(
    k: usize,
    n: usize,
    distinct: bool,
    format: Format,
    cfg: &Config,
) -> Result<String, Failure> {
    let host = finite_word_capped(k, n, Strategy::Recursion, cfg.length_cap)?;
    let listing = if distinct {
        enumerate_squares(k, host.len() / 2, n / k, Some(&host))?
    } else {
        square_descriptors(k, host.len() / 2, n / k)?
            .into_iter()
            .filter(|(_, r)| is_factor(&r.concat(r), &host))
            .collect()
    };
    let mut out = String::new();
    if matches!(format, Format::Csv) {
        out.push_str(if distinct { "root\n" } else { "k,n,i,j,root\n" });
    }
    for (d, root) in &listing {
        let line = if distinct {
            word_line(root, format)
        } else {
            descriptor_line(d, root, format)
        };
        out.push_str(&line);
        out.push('\n');
    }
    Ok(out)
}

fn critical(k: usize, count: usize, style: Style, format: Format) -> Result<String, Failure> {
    let e = critical_exponent(k)?;
    let shown = match style {
        Style::Plain => e.to_string(),
        Style::PaperExponent => critical_deficit(k)?.to_paper_string(),
    };
    let factors = (1..=count)
        .map(|i| critical_factor(k, i))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(match format {
        Format::Json => {
            json!({"k": k, "exponent": e, "display": shown, "factors": factors}).to_string() + "\n"
        }
        Format::Paper => {
            let mut out = format!("{shown}\n");
            for f in &factors {
                out.push_str(&f.to_paper());
                out.push('\n');
            }
            out
        }
        Format::Csv => {
            let mut out = String::from("k,exponent,i,factor\n");
            for (i, f) in factors.iter().enumerate() {
                out.push_str(&format!("{k},{shown},{},{}\n", i + 1, f.to_paper()));
            }
            out
        }
    })
}

fn verify(
    k: usize,
    range: RangeInclusive<usize>,
    suite: Suite,
    format: Format,
    cfg: &Config,
) -> Result<(String, bool), Failure> {
    let mut reports: Vec<VerificationReport> = Vec::new();
    for n in range {
        if word_length(k, n)? > cfg.length_cap {
            return Err(Error::Size {
                what: "word".into(),
                needed: word_length(k, n)?,
                cap: cfg.length_cap,
            }
            .into());
        }
        match suite {
            Suite::Squares => reports.push(verify_squares(k, n)?),
            Suite::Critical => reports.push(verify_critical_guarded(k, n, cfg.oracle_guard)?),
            Suite::Invariants => reports.extend(verify_invariants(k, n)?),
        }
    }
    Ok(render_reports(&reports, format))
}

fn render_reports(reports: &[VerificationReport], format: Format) -> (String, bool) {
    let mut out = String::new();
    for r in reports {
        match format {
            Format::Json => out.push_str(&r.to_json_line()),
            _ if r.passed() && r.actual.canonical.len() <= 60 => {
                out.push_str(&format!("PASS {} = {}", r.subject, r.actual.canonical))
            }
            _ if r.passed() => out.push_str(&format!("PASS {}", r.subject)),
            _ => out.push_str(&format!("FAIL {}\n{}", r.subject, r.to_json_line())),
        }
        out.push('\n');
    }
    (out, reports.iter().all(VerificationReport::passed))
}

fn table(which: u8, format: Format) -> Result<String, Failure> {
    let format = OutputFormat::from(format);
    Ok(match which {
        1 => render_square_table(&square_table(3, 11, 3)?, format),
        2 => render_power_table(5, &power_table(5, 9..=17)?, format),
        _ => render_critical_table(&critical_table(3..=8)?, format),
    })
}

fn run(cli: Cli) -> Result<String, (String, Failure)> {
    let mut cfg = Config::load(cli.config.as_deref()).map_err(|e| (String::new(), e.into()))?;
    cfg.length_cap = cli.length_cap.unwrap_or(cfg.length_cap);
    cfg.oracle_guard = cli.oracle_guard.unwrap_or(cfg.oracle_guard);
    let plain = |r: Result<String, Failure>| r.map_err(|f| (String::new(), f));
    match cli.command {
        Command::Gen { k, n, len, format } => plain(gen(k, n, len, format, &cfg)),
        Command::Squares {
            k,
            n,
            distinct,
            format,
        } => plain(squares(k, n, distinct, format, &cfg)),
        Command::Critical {
            k,
            factor_count,
            style,
            format,
        } => plain(critical(k, factor_count, style, format)),
        Command::Verify {
            k,
            n_range,
            suite,
            format,
        } => match verify(k, n_range, suite, format, &cfg).map_err(|f| (String::new(), f))? {
            (out, true) => Ok(out),
            (out, false) => Err((out, Failure::Verification)),
        },
        Command::Table { which, format } => plain(table(which, format)),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let mut stdout = std::io::stdout().lock();
    match run(cli) {
        Ok(out) => {
            let _ = stdout.write_all(out.as_bytes());
            ExitCode::SUCCESS
        }
        Err((out, failure)) => {
            let _ = stdout.write_all(out.as_bytes());
            match &failure {
                Failure::Verification => eprintln!("kbonacci: verification failed"),
                Failure::Usage(e) => eprintln!("kbonacci: {e}"),
            }
            ExitCode::from(exit_status(&failure))
        }
    }
}

fn exit_status(f: &Failure) -> u8 {
    match f {
        Failure::Verification => 1,
        Failure::Usage(_) => 2,
    }
}
