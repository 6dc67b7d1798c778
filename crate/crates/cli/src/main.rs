use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use hurwitzkit::DEFAULT_TOLERANCE;
use hurwitzkit_cli::commands::{self, CorpusSpec, MethodChoice, Outcome, EXIT_USAGE};
use hurwitzkit_cli::input::{batch_lines, parse_polynomial, Order, PolynomialInput};
use rayon::prelude::*;

/// Exact Hurwitz stability tests for real polynomials.
///
/// Coefficients are ascending, a0 a1 ... an, unless --descending is given.
/// Pass them after `--` (needed when the first one is negative), as
/// positional arguments, or one polynomial per line with --file.
#[derive(Parser)]
#[command(name = "hurwitzkit", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Decide stability with the selected methods.
    Check(Flags),
    /// Routh chain and the factorization of the Hurwitz matrix.
    Factor(Flags),
    /// Leading principal minors of the Hurwitz matrix.
    Minors(Flags),
    /// Scan a Hurwitz matrix truncation for negative minors.
    Tnn(Flags),
    /// Interlacing of the zeros of the even and odd parts.
    Interlace(Flags),
    /// Floating-point roots and the oracle classification.
    Roots(Flags),
    /// Print a seeded corpus of test polynomials, one per line.
    Generate(Flags),
    /// Run every method on a seeded corpus and count disagreements.
    Crosscheck(Flags),
}

#[derive(Args)]
struct Flags {
    /// Print JSON instead of text.
    #[arg(long)]
    json: bool,
    /// Coefficients are given highest degree first.
    #[arg(long)]
    descending: bool,
    #[arg(long, value_enum, default_value_t = MethodChoice::All)]
    method: MethodChoice,
    #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
    rows: Option<u64>,
    #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
    cols: Option<u64>,
    /// Largest minor order scanned by `tnn`.
    #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
    order: Option<u64>,
    /// Number of leading principal minors.
    #[arg(long)]
    k: Option<usize>,
    #[arg(long, default_value_t = 100)]
    count: usize,
    #[arg(long, default_value_t = 10)]
    degree_max: usize,
    #[arg(long, default_value_t = 42)]
    seed: u64,
    #[arg(long, default_value_t = 20)]
    coeff_bound: i64,
    /// Relative half-width of the oracle's boundary band.
    #[arg(long, default_value_t = DEFAULT_TOLERANCE)]
    tol: f64,
    /// Read one polynomial per line from this file.
    #[arg(long, conflicts_with = "coefficients")]
    file: Option<PathBuf>,
    /// Coefficients, whitespace or comma separated.
        coefficients: Vec<String>,
}

impl Flags {
    fn order(&self) -> Order {
        if self.descending {
            Order::Descending
        } else {
            Order::Ascending
        }
    }

    fn corpus(&self) -> CorpusSpec {
        CorpusSpec {
            count: self.count,
            degree_max: self.degree_max,
            seed: self.seed,
            coeff_bound: self.coeff_bound,
        }
    }
}

fn per_polynomial(command: &Command, flags: &Flags, input: &PolynomialInput) -> Outcome {
    let size = |x: Option<u64>| x.map(|v| v as usize);
    match command {
        Command::Check(_) => commands::check(input, flags.method, flags.tol),
        Command::Factor(_) => commands::factor(input, size(flags.rows), size(flags.cols)),
        Command::Minors(_) => commands::minors(input, flags.k),
        Command::Tnn(_) => commands::tnn(input, size(flags.rows), size(flags.cols), size(flags.order)),
        Command::Interlace(_) => commands::interlace(input),
        Command::Roots(_) => commands::roots(input, flags.tol),
        Command::Generate(_) | Command::Crosscheck(_) => unreachable!("corpus commands take no polynomial"),
    }
}

fn one(command: &Command, flags: &Flags, raw: &str) -> Outcome {
    match parse_polynomial(raw, flags.order()) {
        Ok(input) => per_polynomial(command, flags, &input),
        Err(e) => Outcome::error(raw.trim(), &e.to_string(), EXIT_USAGE),
    }
}

/// Writes a line to stdout, ignoring a closed pipe.
fn emit(line: &str) {
    let _ = writeln!(std::io::stdout().lock(), "{line}");
}

fn print_single(out: &Outcome, json: bool) {
    if json {
        emit(&serde_json::to_string_pretty(&out.json).expect("serializable"));
    } else if out.json.get("error").is_some() {
        eprintln!("{}", out.text);
    } else {
        emit(&out.text);
    }
}

fn run(cli: Cli) -> i32 {
    let command = cli.command;
    let flags = match &command {
        Command::Check(f)
        | Command::Factor(f)
        | Command::Minors(f)
        | Command::Tnn(f)
        | Command::Interlace(f)
        | Command::Roots(f)
        | Command::Generate(f)
        | Command::Crosscheck(f) => f,
    };

    let corpus_outcome = match &command {
        Command::Generate(_) => Some(commands::generate(flags.corpus(), flags.order())),
        Command::Crosscheck(_) => Some(commands::crosscheck(flags.corpus(), flags.tol)),
        _ => None,
    };
    if let Some(out) = corpus_outcome {
        print_single(&out, flags.json);
        return out.exit;
    }

    if let Some(path) = &flags.file {
        let text = match std::fs::read_to_string(path) {
            Ok(text) => text,
            Err(e) => {
                eprintln!("error: cannot read {}: {e}", path.display());
                return EXIT_USAGE;
            }
        };
        let lines = batch_lines(&text);
        let outcomes: Vec<(usize, Outcome)> = lines
            .par_iter()
            .map(|(number, line)| (*number, one(&command, flags, line)))
            .collect();
        for (number, out) in &outcomes {
            if flags.json {
                let mut record = out.json.clone();
                record["line"] = (*number).into();
                emit(&serde_json::to_string(&record).expect("serializable"));
            } else {
                emit(&format!("{number}: {}", out.summary));
            }
        }
        return outcomes.iter().map(|(_, o)| o.exit).max().unwrap_or(EXIT_USAGE);
    }

    if flags.coefficients.is_empty() {
        eprintln!("error: no coefficients given (pass them after `--` or use --file)");
        return EXIT_USAGE;
    }
    let raw: Vec<&str> = flags.coefficients.iter().map(|c| c.trim()).collect();
    let out = one(&command, flags, &raw.join(" "));
    print_single(&out, flags.json);
    out.exit
}

/// Shields negative literals such as `-1/2` from the option parser; the
/// coefficient tokenizer strips the added space.
fn shield_negative(arg: String) -> String {
    let mut chars = arg.chars();
    match (chars.next(), chars.next()) {
        (Some('-'), Some(c)) if c.is_ascii_digit() || c == '.' => format!(" {arg}"),
        _ => arg,
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse_from(std::env::args().map(shield_negative)) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { 0 };
            let _ = e.print();
            return ExitCode::from(code as u8);
        }
    };
    ExitCode::from(run(cli) as u8)
}
