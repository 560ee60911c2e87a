//! Command-line front end for the Twyst-off solver.
//!
//! Exit codes: 0 success (including N verdicts and passing suites),
//! 1 failed suite or runtime error, 2 usage error, 3 undecided infinite
//! position.

use std::error::Error;
use std::fs;
use std::io::{self, BufRead, Write};
use std::path::PathBuf;
use std::process::ExitCode;
use std::str::FromStr;

use clap::{Parser, Subcommand, ValueEnum};

use twystoff::infinite::{DecisionResult, InfiniteSolver, InfiniteSuite};
use twystoff::position::{apply, legal_moves, options, parse_stacks, Move, Position, RuleSet};
use twystoff::solver::{Outcome, Solver};
use twystoff::{analysis, build_f_table, explore_conjecture2, Suite, TableStyle};

#[derive(Parser)]
#[command(
    name = "twystoff",
    version,
    about = "Exact solver and verification laboratory for the Twyst-off stack game"
)]
struct Cli {
    /// Memo file: loaded before the command if it exists, saved back after.
    #[arg(long, global = true, value_name = "FILE")]
    cache: Option<PathBuf>,

    #[command(subcommand)]
    command: Command,
}

fn parse_rules(s: &str) -> Result<RuleSet, twystoff::ParseError> {
    RuleSet::from_str(s)
}

#[derive(Subcommand)]
enum Command {
    /// Decide whether a position is a previous-player (P) or
    /// next-player (N) win.
    Solve {
        /// Stack sizes, e.g. "4,2,2" or "4 2 2"; "()" is the empty position.
        position: String,
        #[arg(long, default_value = "standard", value_parser = parse_rules)]
        rules: RuleSet,
    },
    /// Print the Grundy value of a position.
    Grundy {
        position: String,
        #[arg(long, default_value = "standard", value_parser = parse_rules)]
        rules: RuleSet,
    },
    /// List the positions reachable in one move, sorted.
    Options {
        position: String,
        #[arg(long, default_value = "standard", value_parser = parse_rules)]
        rules: RuleSet,
    },
    /// Emit the table of unique P completions f(a, b).
    Table {
        #[arg(long)]
        amax: u64,
        #[arg(long)]
        bmax: u64,
        #[arg(long, value_enum, default_value_t = TableFormat::Txt)]
        format: TableFormat,
        /// Write to a file instead of stdout.
        #[arg(long, value_name = "FILE")]
        out: Option<PathBuf>,
        /// SVG fill colors: wythoff-pair, sum-pair, palindrome,
        /// non-palindrome.
        #[arg(long, value_name = "HEX,HEX,HEX,HEX")]
        colors: Option<String>,
        /// SVG cell edge in pixels.
        #[arg(long, default_value_t = 14)]
        cell: u32,
    },
    /// Run a verification suite and report counterexamples and findings.
    Verify {
        /// Suite name; see `verify --suite list`.
        #[arg(long)]
        suite: String,
        #[arg(long)]
        bound: u64,
    },
    /// Decide a position that may contain infinite stacks ("inf" or "∞").
    Infinite { position: String },
    /// Exploration probes for open questions.
    Explore {
        #[command(subcommand)]
        probe: Probe,
    },
    /// Play against the engine (you move first).
    Play {
        position: String,
        #[arg(long, default_value = "standard", value_parser = parse_rules)]
        rules: RuleSet,
    },
    /// Load or save solver memo files.
    Cache {
        #[command(subcommand)]
        op: CacheOp,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum TableFormat {
    Csv,
    Svg,
    Txt,
}

#[derive(Subcommand)]
enum Probe {
    /// Scan the undecided one-move options of seven infinite stacks.
    Seven {
        /// Largest finite stack value substituted during the scan.
        #[arg(long, default_value_t = 3)]
        budget: u64,
    },
    /// Search rows b in (a, bmax] of positions (a, b, c, a) for a P set
    /// that is an upward-closed ray in c.
    Conjecture2 {
        #[arg(long)]
        a: u64,
        #[arg(long)]
        bmax: u64,
        #[arg(long)]
        cmax: u64,
    },
}

#[derive(Subcommand)]
enum CacheOp {
    /// Load a memo file into the solver and report the record count.
    Load { file: PathBuf },
    /// Save the solver memo (possibly preloaded via --cache) to a file.
    Save { file: PathBuf },
}

const USAGE: u8 = 2;
const UNDECIDED: u8 = 3;

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
    }
}

fn run(cli: Cli) -> Result<ExitCode, Box<dyn Error>> {
    let solver = Solver::new();
    if let Some(path) = &cli.cache {
        if path.exists() {
            solver.load_memo(path)?;
        }
    }
    let code = dispatch(&solver, cli.command)?;
    if let Some(path) = &cli.cache {
        solver.save_memo(path)?;
    }
    Ok(code)
}

/// Parses a finite position, mapping bad input to a usage error.
fn parse_position(s: &str, rules: RuleSet) -> Result<Position, ExitCode> {
    match parse_stacks(s) {
        Ok(raw) => Ok(Position::normalize(&raw, rules)),
        Err(e) => {
            eprintln!("error: {e}");
            Err(ExitCode::from(USAGE))
        }
    }
}

fn dispatch(solver: &Solver, command: Command) -> Result<ExitCode, Box<dyn Error>> {
    match command {
        Command::Solve { position, rules } => {
            let pos = match parse_position(&position, rules) {
                Ok(p) => p,
                Err(code) => return Ok(code),
            };
            println!("{}", solver.outcome(&pos, rules)?);
            Ok(ExitCode::SUCCESS)
        }
        Command::Grundy { position, rules } => {
            let pos = match parse_position(&position, rules) {
                Ok(p) => p,
                Err(code) => return Ok(code),
            };
            println!("{}", solver.grundy(&pos, rules)?);
            Ok(ExitCode::SUCCESS)
        }
        Command::Options { position, rules } => {
            let pos = match parse_position(&position, rules) {
                Ok(p) => p,
                Err(code) => return Ok(code),
            };
            for opt in options(&pos, rules)? {
                println!("{opt}");
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Table { amax, bmax, format, out, colors, cell } => {
            if bmax == 0 {
                eprintln!("error: --bmax must be at least 1");
                return Ok(ExitCode::from(USAGE));
            }
            let table = build_f_table(solver, amax, bmax)?;
            let rendered = match format {
                TableFormat::Csv => table.to_csv(),
                TableFormat::Txt => table.to_txt(),
                TableFormat::Svg => {
                    let mut style = TableStyle { cell_px: cell, ..TableStyle::default() };
                    if let Some(spec) = colors {
                        let parts: Vec<&str> = spec.split(',').map(str::trim).collect();
                        if parts.len() != 4 || parts.iter().any(|p| !p.starts_with('#')) {
                            eprintln!(
                                "error: --colors needs four comma-separated hex colors, got {spec:?}"
                            );
                            return Ok(ExitCode::from(USAGE));
                        }
                        for (slot, part) in style.colors.iter_mut().zip(parts) {
                            *slot = part.to_string();
                        }
                    }
                    table.to_svg(&style)
                }
            };
            match out {
                Some(path) => fs::write(path, rendered)?,
                None => print!("{rendered}"),
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Verify { suite, bound } => {
            if suite == "list" {
                for s in Suite::ALL {
                    println!("{s}");
                }
                for s in InfiniteSuite::ALL {
                    println!("{s}");
                }
                return Ok(ExitCode::SUCCESS);
            }
            let report = if let Ok(s) = Suite::from_str(&suite) {
                analysis::verify(solver, s, bound)?
            } else if let Ok(s) = InfiniteSuite::from_str(&suite) {
                InfiniteSolver::new(solver).verify(s, bound)?
            } else {
                eprintln!("error: unknown suite {suite:?}; `--suite list` prints all names");
                return Ok(ExitCode::from(USAGE));
            };
            print!("{report}");
            Ok(if report.pass { ExitCode::SUCCESS } else { ExitCode::from(1) })
        }
        Command::Infinite { position } => {
            let raw = match twystoff::parse_ext_stacks(&position) {
                Ok(raw) => raw,
                Err(e) => {
                    eprintln!("error: {e}");
                    return Ok(ExitCode::from(USAGE));
                }
            };
            let decision = InfiniteSolver::new(solver).decide(&raw)?;
            println!("{decision}");
            Ok(match decision {
                DecisionResult::Undecided { .. } => ExitCode::from(UNDECIDED),
                _ => ExitCode::SUCCESS,
            })
        }
        Command::Explore { probe } => {
            match probe {
                Probe::Seven { budget } => {
                    println!("{}", InfiniteSolver::new(solver).explore_seven(budget)?);
                }
                Probe::Conjecture2 { a, bmax, cmax } => {
                    if a == 0 {
                        eprintln!("error: --a must be at least 1");
                        return Ok(ExitCode::from(USAGE));
                    }
                    println!("{}", explore_conjecture2(solver, a, bmax, cmax)?);
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Play { position, rules } => {
            let pos = match parse_position(&position, rules) {
                Ok(p) => p,
                Err(code) => return Ok(code),
            };
            play(solver, pos, rules)?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Cache { op } => {
            match op {
                CacheOp::Load { file } => {
                    let n = solver.load_memo(&file)?;
                    println!("loaded {n} records");
                }
                CacheOp::Save { file } => {
                    let n = solver.save_memo(&file)?;
                    println!("saved {n} records");
                }
            }
            Ok(ExitCode::SUCCESS)
        }
    }
}

/// The engine's move: to a P option when one exists (the engine is
/// winning), otherwise a delaying move. Deterministic tie-break: first by
/// resulting position, then by move order.
fn engine_move(
    solver: &Solver,
    pos: &Position,
    rules: RuleSet,
) -> Result<(Move, Position), Box<dyn Error>> {
    let mut candidates: Vec<(Position, Move)> = Vec::new();
    for mv in legal_moves(pos, rules)? {
        let next = apply(pos, mv, rules)?;
        candidates.push((next, mv));
    }
    candidates.sort();
    for (next, mv) in &candidates {
        if solver.outcome(next, rules)? == Outcome::P {
            return Ok((*mv, next.clone()));
        }
    }
    let (next, mv) = candidates.first().expect("nonempty position has moves");
    Ok((*mv, next.clone()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use twystoff::analysis::compositions;

    #[test]
    fn engine_move_always_lands_on_p_from_n_positions() {
        let solver = Solver::new();
        let rules = RuleSet::Standard;
        for total in 1..=12u64 {
            for len in 1..=total as usize {
                let mut all = Vec::new();
                compositions(total, len, &mut all);
                for raw in all {
                    let pos = Position::normalize(&raw, rules);
                    if solver.outcome(&pos, rules).unwrap() == Outcome::N {
                        let (_, next) = engine_move(&solver, &pos, rules).unwrap();
                        assert_eq!(
                            solver.outcome(&next, rules).unwrap(),
                            Outcome::P,
                            "engine left {pos} at the N position {next}"
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn engine_move_is_deterministic() {
        let solver = Solver::new();
        let pos = Position::normalize(&[4, 2, 2], RuleSet::Standard);
        let (mv, next) = engine_move(&solver, &pos, RuleSet::Standard).unwrap();
        let (mv2, next2) = engine_move(&solver, &pos, RuleSet::Standard).unwrap();
        assert_eq!((mv, next.clone()), (mv2, next2));
        assert_eq!(solver.outcome(&next, RuleSet::Standard).unwrap(), Outcome::P);
    }
}

/// Interactive loop: the user moves first; moves are `L k`, `R k`, or
/// `P i k`. Illegal or unparseable moves re-prompt.
fn play(solver: &Solver, mut pos: Position, rules: RuleSet) -> Result<(), Box<dyn Error>> {
    let stdin = io::stdin();
    let mut lines = stdin.lock().lines();
    println!("position: {pos}  (moves: `L k`, `R k`, `P i k`; `quit` to stop)");
    loop {
        if pos.is_empty() {
            println!("engine took the last tile and wins");
            return Ok(());
        }
        print!("> ");
        io::stdout().flush()?;
        let Some(line) = lines.next() else {
            println!("quit");
            return Ok(());
        };
        let line = line?;
        let trimmed = line.trim();
        if trimmed.is_empty() {
            continue;
        }
        if trimmed.eq_ignore_ascii_case("quit") || trimmed.eq_ignore_ascii_case("q") {
            println!("quit");
            return Ok(());
        }
        let mv = match Move::from_str(trimmed) {
            Ok(mv) => mv,
            Err(e) => {
                println!("{e}");
                continue;
            }
        };
        match apply(&pos, mv, rules) {
            Ok(next) => pos = next,
            Err(e) => {
                println!("illegal move: {e}");
                continue;
            }
        }
        println!("you: {mv} -> {pos}");
        if pos.is_empty() {
            println!("you took the last tile and win");
            return Ok(());
        }
        let (mv, next) = engine_move(solver, &pos, rules)?;
        pos = next;
        println!("engine: {mv} -> {pos}");
    }
}
