//! Exact solver and verification laboratory for **Twyst-off**, a multi-stack
//! generalization of Wythoff's game.
//!
//! A position is a finite sequence of token stacks. A move either removes
//! any positive number of tokens from one of the two *end* stacks, or
//! removes an equal positive number from two *adjacent* stacks. Emptied
//! stacks disappear: boundary zeros fall off, and an interior zero merges
//! its two neighbors into a single stack. Under normal play the player who
//! takes the last token wins, so the empty sequence is a P position.
//!
//! Two rule variants are also implemented: **frozen** (interior zeros stay
//! in place instead of merging their neighbors) and **heavy-handed** (on
//! three stacks, pair moves are restricted to the pair containing the
//! larger end stack).
//!
//! The crate provides:
//! - [`Position`], move generation, and rule-set handling ([`position`]);
//! - a memoized exact solver with Grundy values and persistence
//!   ([`Solver`]);
//! - an independent brute-force oracle for cross-checks ([`naive`]);
//! - exact golden-ratio (Beatty sequence) integer arithmetic ([`beatty`]);
//! - verification suites that machine-check the structural results the
//!   solver's outputs satisfy, plus a P-position table builder
//!   ([`analysis`]);
//! - an extension to positions containing infinite stacks ([`infinite`]).

pub mod analysis;
pub mod beatty;
pub mod infinite;
pub mod naive;
pub mod position;
pub mod report;
pub mod solver;

pub use analysis::{
    build_f_table, explore_conjecture2, AnalysisError, CellClass, Conjecture2Report, FCell,
    FTable, Suite, TableStyle,
};
pub use beatty::BeattyError;
pub use infinite::{
    parse_ext_stacks, DecisionResult, ExtPosition, ExtStack, InfiniteError, InfiniteSolver,
    InfiniteSuite, PatternClass, SevenReport,
};
pub use position::{parse_stacks, GameError, Move, ParseError, Position, RuleSet};
pub use report::VerificationReport;
pub use solver::{MemoError, Outcome, SolveError, Solver};
