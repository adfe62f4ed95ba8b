//! The `degseq` command line.
//!
//! [`run`] takes argv and two writers and returns the exit status, so the
//! whole interface can be driven in-process.

use std::ffi::OsString;
use std::io::Write;

use clap::{Args, Parser, Subcommand, ValueEnum};
use degseq_core::bounds::counterexample_family;
use degseq_core::graphicality::{erdos_gallai_check, havel_hakimi_realize};
use degseq_core::search::{Mode, SearchConfig};
use degseq_core::sequence::parse_sequence;
use degseq_core::DegreeSequence;

use crate::driver::{compute_rows, default_parallelism};
use crate::output::{
    render_check, render_family, render_realization, render_report, render_rows, render_sequence,
    render_stats, CheckResult, OutputFormat,
};
use crate::table::{embedded_table, FIRST_N, LAST_N};
use crate::verify::verify_table;

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_MISMATCH: i32 = 3;

#[derive(Debug, Parser)]
#[command(name = "degseq", version, about = "Graphicality of degree sequences")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum ModeArg {
    Fast,
    Exhaustive,
}

impl From<ModeArg> for Mode {
    fn from(m: ModeArg) -> Mode {
        match m {
            ModeArg::Fast => Mode::Fast,
            ModeArg::Exhaustive => Mode::Exhaustive,
        }
    }
}

#[derive(Debug, Args)]
struct SeqArgs {
    /// Sequence such as `4^3,2^2` (terms `v` or `v^k`, any order)
    #[arg(allow_hyphen_values = true)]
    seq: String,
    #[arg(long, short, value_enum, default_value_t)]
    format: OutputFormat,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Statistics, Erdős–Gallai verdict and both certifiers
    Check(SeqArgs),
    /// Havel–Hakimi edge list, one `u v` pair per line
    Realize(SeqArgs),
    /// Complement sequence d -> n-1-d
    Complement(SeqArgs),
    /// Length, sum, mean, extremes, spread and rg
    Stats(SeqArgs),
    /// The sequence ((mu+c)^{n/2}, (mu-c)^{n/2}) and its verdict
    Family {
        #[arg(long)]
        n: usize,
        #[arg(long = "mean")]
        mu: u32,
        #[arg(long)]
        c: u32,
        #[arg(long, short, value_enum, default_value_t)]
        format: OutputFormat,
    },
    /// Compute m(n) with a witness for every n in a range
    Mn {
        #[arg(long)]
        from: usize,
        #[arg(long)]
        to: usize,
        #[arg(long, value_enum, default_value = "fast")]
        mode: ModeArg,
        #[arg(long, short, value_enum, default_value_t)]
        format: OutputFormat,
        /// Worker threads; output does not depend on it
        #[arg(long, short)]
        jobs: Option<usize>,
    },
    /// Recompute the reference table and check its witnesses
    VerifyTable {
        #[arg(long, default_value_t = FIRST_N)]
        from: usize,
        #[arg(long, default_value_t = LAST_N)]
        to: usize,
        #[arg(long, value_enum, default_value = "fast")]
        mode: ModeArg,
        #[arg(long, short, value_enum, default_value_t)]
        format: OutputFormat,
        #[arg(long, short)]
        jobs: Option<usize>,
    },
}

enum Outcome {
    Done(String),
    Mismatch(String),
}

fn parse(text: &str) -> crate::Result<DegreeSequence> {
    Ok(parse_sequence(text)?)
}

fn dispatch(command: Command) -> crate::Result<Outcome> {
    let text = match command {
        Command::Check(a) => render_check(&CheckResult::new(parse(&a.seq)?), a.format)?,
        Command::Realize(a) => {
            let seq = parse(&a.seq)?;
            render_realization(&havel_hakimi_realize(&seq), a.format)?
        }
        Command::Complement(a) => {
            let comp = parse(&a.seq)?.complement()?;
            render_sequence("complement", &comp, a.format)?
        }
        Command::Stats(a) => render_stats(&parse(&a.seq)?, a.format)?,
        Command::Family { n, mu, c, format } => {
            let seq = counterexample_family(n, mu, c)?;
            render_family(&seq, &erdos_gallai_check(&seq), format)?
        }
        Command::Mn {
            from,
            to,
            mode,
            format,
            jobs,
        } => {
            let rows = compute_rows(&SearchConfig {
                mode: mode.into(),
                n_range: from..=to,
                parallelism: jobs.unwrap_or_else(default_parallelism),
            })?;
            render_rows(&rows, &embedded_table(), format)?
        }
        Command::VerifyTable {
            from,
            to,
            mode,
            format,
            jobs,
        } => {
            let report = verify_table(
                from..=to,
                mode.into(),
                jobs.unwrap_or_else(default_parallelism),
            )?;
            let text = render_report(&report, format)?;
            if !report.passed() {
                return Ok(Outcome::Mismatch(text));
            }
            text
        }
    };
    Ok(Outcome::Done(text))
}

/// Runs one invocation. `args` includes the program name.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            if e.use_stderr() {
                let _ = write!(err, "{}", e.render());
                return EXIT_USAGE;
            }
            let _ = write!(out, "{}", e.render());
            return EXIT_OK;
        }
    };
    let (code, text) = match dispatch(cli.command) {
        Ok(Outcome::Done(text)) => (EXIT_OK, text),
        Ok(Outcome::Mismatch(text)) => {
            let _ = writeln!(err, "degseq: table mismatch");
            (EXIT_MISMATCH, text)
        }
        Err(e) => {
            let _ = writeln!(err, "degseq: {e}");
            return EXIT_USAGE;
        }
    };
    if out
        .write_all(text.as_bytes())
        .and_then(|_| out.flush())
        .is_err()
    {
        return 1;
    }
    code
}
