//! Command-line front end.
//!
//! Exit status: 0 when everything passes, 1 on a verification failure, 2 on a
//! usage error.

use std::fmt::Write as _;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::constructible::{all_constructible, ConstructibleCharacter, Ratio};
use crate::exec::Execution;
use crate::lusztig::{character_b, find_noncommon_family, lusztig_families, LusztigFamily, NoncommonWitness};
use crate::partition::{enumerate_bipartitions, Bipartition};
use crate::symbol::Symbol;
use crate::verify::{verify, VerifyReport};

pub const MAX_N: usize = 12;
pub const MAX_R: u32 = 16;

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILURE: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Debug, Parser)]
#[command(name = "bsymbols", version, about = "Constructible characters and b-invariants of type B_n")]
struct Cli {
    #[command(subcommand)]
    command: CommandArgs,
}

#[derive(Debug, Args)]
struct OutputArgs {
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Write to this file instead of standard output.
    #[arg(long)]
    output: Option<PathBuf>,
}

#[derive(Debug, Args)]
struct SingleArgs {
    #[arg(long)]
    n: usize,
    /// Positive integer ratio, or "nonintegral".
    #[arg(long, default_value = "1")]
    r: Ratio,
    #[command(flatten)]
    out: OutputArgs,
}

#[derive(Debug, Args)]
struct SweepArgs {
    #[arg(long, default_value_t = 5)]
    n_max: usize,
    #[arg(long, default_value_t = 4)]
    r_max: u32,
    #[command(flatten)]
    out: OutputArgs,
}

#[derive(Debug, Args)]
struct SearchArgs {
    #[arg(long)]
    n: usize,
    /// Ratios 1..=r-max are searched in ascending order.
    #[arg(long, default_value_t = 4)]
    r_max: u32,
    #[command(flatten)]
    out: OutputArgs,
}

#[derive(Debug, Subcommand)]
enum CommandArgs {
    /// Irreducible characters with their symbols and b-invariants.
    Irr(SingleArgs),
    /// Lusztig families with their minimal and special members.
    Families(SingleArgs),
    /// Constructible characters with their minimal constituents.
    Constructible(SingleArgs),
    /// Exhaustive verification over n <= n-max, r <= r-max.
    Verify(SweepArgs),
    /// Search for a family without a constituent common to all its constructibles.
    Counterexample(SearchArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Command {
    Irr,
    Families,
    Constructible,
    Verify,
    Counterexample,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RunConfig {
    pub command: Command,
    pub n: usize,
    pub r: Ratio,
    pub n_max: usize,
    pub r_max: u32,
    pub format: Format,
    pub output: Option<PathBuf>,
}

impl RunConfig {
    pub fn parse_from<I, T>(args: I) -> Result<Self, clap::Error>
    where
        I: IntoIterator<Item = T>,
        T: Into<std::ffi::OsString> + Clone,
    {
        let cli = Cli::try_parse_from(args)?;
        let (command, n, r, n_max, r_max, out) = match cli.command {
            CommandArgs::Irr(a) => (Command::Irr, a.n, a.r, 0, 0, a.out),
            CommandArgs::Families(a) => (Command::Families, a.n, a.r, 0, 0, a.out),
            CommandArgs::Constructible(a) => (Command::Constructible, a.n, a.r, 0, 0, a.out),
            CommandArgs::Verify(a) => (Command::Verify, 0, Ratio::Integral(1), a.n_max, a.r_max, a.out),
            CommandArgs::Counterexample(a) => (Command::Counterexample, a.n, Ratio::Integral(1), 0, a.r_max, a.out),
        };
        Ok(RunConfig { command, n, r, n_max, r_max, format: out.format, output: out.output })
    }

    fn validate(&self) -> Result<(), String> {
        match self.command {
            Command::Verify => {
                if self.n_max == 0 || self.r_max == 0 {
                    return Err("--n-max and --r-max must be positive".into());
                }
                if self.n_max > MAX_N || self.r_max > MAX_R {
                    return Err(format!("bounds above n = {MAX_N}, r = {MAX_R} are not supported"));
                }
            }
            Command::Counterexample => {
                if self.n > MAX_N || self.r_max == 0 || self.r_max > MAX_R {
                    return Err(format!("need n <= {MAX_N} and 1 <= r-max <= {MAX_R}"));
                }
            }
            _ => {
                if self.n > MAX_N {
                    return Err(format!("n above {MAX_N} is not supported"));
                }
                if let Ratio::Integral(r) = self.r {
                    if r > MAX_R {
                        return Err(format!("r above {MAX_R} is not supported"));
                    }
                }
            }
        }
        Ok(())
    }
}

/// Result of a run: exit status and the emitted document (or diagnostic).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub status: i32,
    pub document: String,
}

#[derive(Debug, Serialize)]
struct IrrRow {
    bipartition: Bipartition,
    symbol: Option<Symbol>,
    b: u64,
}

#[derive(Debug, Serialize)]
struct IrrDoc {
    n: usize,
    r: Ratio,
    characters: Vec<IrrRow>,
}

#[derive(Debug, Serialize)]
struct FamiliesDoc {
    n: usize,
    r: Ratio,
    families: Vec<LusztigFamily>,
}

#[derive(Debug, Serialize)]
struct ConstructibleDoc {
    n: usize,
    r: Ratio,
    characters: Vec<ConstructibleCharacter>,
}

#[derive(Debug, Serialize)]
struct CounterexampleDoc {
    n: usize,
    r_range: Vec<u32>,
    witness: Option<NoncommonWitness>,
}

fn to_json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("documents serialize");
    s.push('\n');
    s
}

fn list(items: &[Bipartition]) -> String {
    items.iter().map(ToString::to_string).collect::<Vec<_>>().join(" + ")
}

fn opt(b: &Option<Bipartition>) -> String {
    b.as_ref().map_or_else(|| "none".to_string(), ToString::to_string)
}

fn irr_doc(n: usize, r: Ratio) -> IrrDoc {
    let characters = enumerate_bipartitions(n)
        .into_iter()
        .map(|bip| {
            let symbol = match r {
                Ratio::Integral(r) => Some(Symbol::from_bipartition(&bip, n, r as usize).expect("k = n suffices")),
                Ratio::NonIntegral => None,
            };
            let b = character_b(&bip, r);
            IrrRow { bipartition: bip, symbol, b }
        })
        .collect();
    IrrDoc { n, r, characters }
}

fn irr_text(doc: &IrrDoc) -> String {
    let mut s = format!("# irreducible characters of B_{} (r = {})\n", doc.n, doc.r);
    for row in &doc.characters {
        let symbol = row.symbol.as_ref().map_or_else(|| "-".to_string(), ToString::to_string);
        writeln!(s, "{}\t{}\tb={}", row.bipartition, symbol, row.b).unwrap();
    }
    s
}

fn family_lines(s: &mut String, families: &[LusztigFamily]) {
    for f in families {
        let members: Vec<String> =
            f.members.iter().zip(&f.b).map(|(m, b)| format!("{m}:{b}")).collect();
        let key = f.key.as_ref().map_or_else(|| "-".to_string(), |k| format!("x={:?} z={:?}", k.x, k.z));
        writeln!(
            s,
            "family minimal={} special={} key={} members={}",
            opt(&f.minimal),
            opt(&f.special),
            key,
            members.join(" ")
        )
        .unwrap();
    }
}

fn constructible_lines(s: &mut String, chars: &[ConstructibleCharacter]) {
    for c in chars {
        let invs: Vec<String> = c
            .involutions
            .iter()
            .map(|i| format!("pairs={:?} fixed={:?}", i.pairs(), i.fixed()))
            .collect();
        writeln!(s, "{}\tminimal={}\tinvolutions=[{}]", list(&c.constituents), c.minimal, invs.join("; ")).unwrap();
    }
}

fn verify_text(report: &VerifyReport) -> String {
    let mut s = format!("# verification, n <= {}, r <= {}\n", report.n_max, report.r_max);
    for t in &report.theorem_l {
        writeln!(
            s,
            "{} n={} r={}: families match symbols={} unique family minimum={} unique constituent minimum={}",
            if t.passed() { "PASS" } else { "FAIL" },
            t.n,
            t.r,
            t.families_match_symbols,
            t.families_unique_minimum,
            t.constructibles_unique_minimum
        )
        .unwrap();
        family_lines(&mut s, &t.families);
        for c in &t.constructibles {
            let b: Vec<String> = c.b.iter().map(u64::to_string).collect();
            writeln!(s, "constructible {} b=[{}] minimal={}", list(&c.constituents), b.join(","), opt(&c.minimal)).unwrap();
        }
    }
    for c in &report.checks {
        writeln!(s, "{} {} ({} checked, {} failed)", if c.passed() { "PASS" } else { "FAIL" }, c.name, c.checked, c.failed).unwrap();
        for f in &c.failures {
            writeln!(s, "  {f}").unwrap();
        }
    }
    writeln!(s, "{}", if report.passed { "ALL PASSED" } else { "FAILED" }).unwrap();
    s
}

fn counterexample_text(doc: &CounterexampleDoc) -> String {
    let mut s = format!("# families of B_{} without a common constituent, r in {:?}\n", doc.n, doc.r_range);
    match &doc.witness {
        None => s.push_str("none\n"),
        Some(w) => {
            writeln!(s, "r={} x={:?} z={:?}", w.r, w.family.x, w.family.z).unwrap();
            writeln!(s, "members {}", list(&w.members)).unwrap();
            constructible_lines(&mut s, &w.constructibles);
        }
    }
    s
}

/// Executes a parsed configuration. Does not touch `config.output`.
pub fn run(config: &RunConfig) -> Outcome {
    if let Err(msg) = config.validate() {
        return Outcome { status: EXIT_USAGE, document: format!("error: {msg}\n") };
    }
    let json = config.format == Format::Json;
    let (status, document) = match config.command {
        Command::Irr => {
            let doc = irr_doc(config.n, config.r);
            (EXIT_OK, if json { to_json(&doc) } else { irr_text(&doc) })
        }
        Command::Families => match lusztig_families(config.n, config.r) {
            Ok(families) => {
                let doc = FamiliesDoc { n: config.n, r: config.r, families };
                let text = || {
                    let mut s = format!("# Lusztig families of B_{} (r = {})\n", doc.n, doc.r);
                    family_lines(&mut s, &doc.families);
                    s
                };
                (EXIT_OK, if json { to_json(&doc) } else { text() })
            }
            Err(e) => (EXIT_FAILURE, format!("error: {e}\n")),
        },
        Command::Constructible => {
            let doc = ConstructibleDoc { n: config.n, r: config.r, characters: all_constructible(config.n, config.r) };
            let text = || {
                let mut s = format!("# constructible characters of B_{} (r = {})\n", doc.n, doc.r);
                constructible_lines(&mut s, &doc.characters);
                s
            };
            (EXIT_OK, if json { to_json(&doc) } else { text() })
        }
        Command::Verify => {
            let report = verify(config.n_max, config.r_max, Execution::default());
            let status = if report.passed { EXIT_OK } else { EXIT_FAILURE };
            (status, if json { to_json(&report) } else { verify_text(&report) })
        }
        Command::Counterexample => {
            let r_range: Vec<u32> = (1..=config.r_max).collect();
            let witness = find_noncommon_family(config.n, &r_range);
            let doc = CounterexampleDoc { n: config.n, r_range, witness };
            (EXIT_OK, if json { to_json(&doc) } else { counterexample_text(&doc) })
        }
    };
    Outcome { status, document }
}
