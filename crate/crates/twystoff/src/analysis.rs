//! Verification suites, the P-completion table, and conjecture probes.
//!
//! Each suite machine-checks one structural statement about the game's P
//! positions over a bounded range and returns a [`VerificationReport`].
//! A handful of the statements, as classically formulated, are false on
//! edge cases the solver exposes; those suites check the corrected form,
//! fail loudly if even that is violated, and record the original
//! formulation's counterexamples as findings so nothing is silently
//! papered over.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use crate::beatty::{self, BeattyError};
use crate::position::{options, GameError, Position, RuleSet};
use crate::report::VerificationReport;
use crate::solver::{Outcome, SolveError, Solver};

#[derive(Debug, thiserror::Error)]
pub enum AnalysisError {
    #[error(transparent)]
    Solve(#[from] SolveError),
    #[error(transparent)]
    Game(#[from] GameError),
    #[error(transparent)]
    Beatty(#[from] BeattyError),
    #[error("table parse error at line {line}: {msg}")]
    Table { line: usize, msg: String },
}

// ----------------------------------------------------------------------
// The P-completion table f(a, b) = c
// ----------------------------------------------------------------------

/// Why a table cell holds the value it does.
///
/// Priority order matters only for a = 0 edge cells (a Wythoff-pair cell
/// is never reported as anything else); for positive a the classes are
/// mutually exclusive.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum CellClass {
    /// {a, b} is a cold pair of Wythoff's game, so c = 0.
    WythoffPair,
    /// b >= a and {a, b-a} is a cold pair: the position completes a pair
    /// move down to a cold pair.
    SumPair,
    /// c = a: the palindrome (a, b, a) is itself P.
    PalindromeP,
    /// Anything else.
    NonPalindrome,
}

impl CellClass {
    pub const ALL: [CellClass; 4] = [
        CellClass::WythoffPair,
        CellClass::SumPair,
        CellClass::PalindromeP,
        CellClass::NonPalindrome,
    ];

    pub fn label(self) -> &'static str {
        match self {
            CellClass::WythoffPair => "wythoff_pair",
            CellClass::SumPair => "sum_pair",
            CellClass::PalindromeP => "palindrome",
            CellClass::NonPalindrome => "non_palindrome",
        }
    }
}

impl fmt::Display for CellClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct FCell {
    pub a: u64,
    pub b: u64,
    pub c: u64,
    pub class: CellClass,
}

/// The table of unique P completions: for each column a in 0..=a_max and
/// row b in 1..=b_max, the unique c with (a, b, c) a P position.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FTable {
    pub a_max: u64,
    pub b_max: u64,
    cells: Vec<FCell>,
}

/// Rendering knobs for [`FTable::to_svg`]: cell edge in pixels and one
/// fill color per class in [`CellClass::ALL`] order.
#[derive(Clone, Debug)]
pub struct TableStyle {
    pub cell_px: u32,
    pub colors: [String; 4],
}

impl Default for TableStyle {
    fn default() -> Self {
        TableStyle {
            cell_px: 14,
            colors: [
                "#4CAF50".to_string(), // wythoff pair
                "#FF9800".to_string(), // sum pair
                "#FFFFFF".to_string(), // palindrome
                "#BBBBBB".to_string(), // non-palindrome
            ],
        }
    }
}

impl FTable {
    pub fn cell(&self, a: u64, b: u64) -> Option<&FCell> {
        if a > self.a_max || b == 0 || b > self.b_max {
            return None;
        }
        let idx = (b - 1) * (self.a_max + 1) + a;
        self.cells.get(idx as usize)
    }

    pub fn cells(&self) -> &[FCell] {
        &self.cells
    }

    /// CSV export: header `a,b,c,class`, rows in (b, a)-ascending order.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("a,b,c,class\n");
        for cell in &self.cells {
            out.push_str(&format!("{},{},{},{}\n", cell.a, cell.b, cell.c, cell.class.label()));
        }
        out
    }

    /// Parses the output of [`FTable::to_csv`]; the cell set must form a
    /// complete (a_max+1) x b_max grid.
    pub fn from_csv(text: &str) -> Result<FTable, AnalysisError> {
        let fail = |line: usize, msg: String| AnalysisError::Table { line: line + 1, msg };
        let mut lines = text.lines().enumerate();
        match lines.next() {
            Some((_, "a,b,c,class")) => {}
            Some((i, other)) => return Err(fail(i, format!("bad header {other:?}"))),
            None => return Err(fail(0, "empty file".into())),
        }
        let mut cells = Vec::new();
        for (i, line) in lines {
            if line.is_empty() {
                continue;
            }
            let parts: Vec<&str> = line.split(',').collect();
            let [a, b, c, class] = parts[..] else {
                return Err(fail(i, format!("expected 4 fields: {line:?}")));
            };
            let num =
                |s: &str| s.parse::<u64>().map_err(|_| fail(i, format!("bad number {s:?}")));
            let class = CellClass::ALL
                .into_iter()
                .find(|k| k.label() == class)
                .ok_or_else(|| fail(i, format!("unknown class {class:?}")))?;
            cells.push(FCell { a: num(a)?, b: num(b)?, c: num(c)?, class });
        }
        let a_max = cells.iter().map(|c| c.a).max().unwrap_or(0);
        let b_max = cells.iter().map(|c| c.b).max().unwrap_or(0);
        let expect: Vec<(u64, u64)> = (1..=b_max)
            .flat_map(|b| (0..=a_max).map(move |a| (a, b)))
            .collect();
        let got: Vec<(u64, u64)> = cells.iter().map(|c| (c.a, c.b)).collect();
        if expect != got {
            return Err(fail(0, "cells do not form a complete grid in (b, a) order".into()));
        }
        Ok(FTable { a_max, b_max, cells })
    }

    /// SVG grid, one square per cell, b increasing downward.
    pub fn to_svg(&self, style: &TableStyle) -> String {
        let px = style.cell_px.max(1);
        let w = (self.a_max + 1) as u32 * px;
        let h = self.b_max as u32 * px;
        let mut out = format!(
            "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{w}\" height=\"{h}\" \
             viewBox=\"0 0 {w} {h}\">\n"
        );
        for cell in &self.cells {
            let color_idx = CellClass::ALL.iter().position(|&k| k == cell.class).unwrap();
            let x = cell.a as u32 * px;
            let y = (cell.b - 1) as u32 * px;
            out.push_str(&format!(
                "<rect x=\"{x}\" y=\"{y}\" width=\"{px}\" height=\"{px}\" fill=\"{}\">\
                 <title>f({},{}) = {}</title></rect>\n",
                style.colors[color_idx], cell.a, cell.b, cell.c
            ));
        }
        out.push_str("</svg>\n");
        out
    }

    /// Plain-text rendering: one row per b, `c` values with a class mark
    /// (`*` Wythoff pair, `+` sum pair, `.` palindrome, `?` other).
    pub fn to_txt(&self) -> String {
        let mark = |class: CellClass| match class {
            CellClass::WythoffPair => '*',
            CellClass::SumPair => '+',
            CellClass::PalindromeP => '.',
            CellClass::NonPalindrome => '?',
        };
        let width = self.cells.iter().map(|c| c.c.to_string().len()).max().unwrap_or(1) + 1;
        let mut out = String::new();
        out.push_str("classes: * wythoff pair, + sum pair, . palindrome, ? other\n");
        for b in (1..=self.b_max).rev() {
            out.push_str(&format!("b={b:>3} |"));
            for a in 0..=self.a_max {
                let cell = self.cell(a, b).expect("complete grid");
                out.push_str(&format!(" {:>width$}{}", cell.c, mark(cell.class)));
            }
            out.push('\n');
        }
        out.push_str(&format!("        a = 0 ..= {}\n", self.a_max));
        out
    }
}

/// Classifies one completed cell.
fn classify(a: u64, b: u64, c: u64) -> Result<CellClass, BeattyError> {
    if beatty::is_wythoff_p(a, b)? {
        Ok(CellClass::WythoffPair)
    } else if b >= a && beatty::is_wythoff_p(a, b - a)? {
        Ok(CellClass::SumPair)
    } else if c == a {
        Ok(CellClass::PalindromeP)
    } else {
        Ok(CellClass::NonPalindrome)
    }
}

/// Builds the P-completion table for a in 0..=a_max, b in 1..=b_max under
/// standard rules, then re-verifies a deterministic 5% sample of the cells
/// directly against the solver.
pub fn build_f_table(solver: &Solver, a_max: u64, b_max: u64) -> Result<FTable, AnalysisError> {
    assert!(b_max >= 1, "b_max must be at least 1");
    let mut cells = Vec::with_capacity(((a_max + 1) * b_max) as usize);
    for b in 1..=b_max {
        for a in 0..=a_max {
            let c = solver.unique_c(a, b, RuleSet::Standard)?;
            cells.push(FCell { a, b, c, class: classify(a, b, c)? });
        }
    }
    let table = FTable { a_max, b_max, cells };

    // Spot re-check: every sampled cell must really be a P position.
    let sample = (table.cells.len() / 20).max(1);
    let mut state = 0x5EED_u64;
    for _ in 0..sample {
        let cell = &table.cells[(crate::solver::splitmix64(&mut state)
            % table.cells.len() as u64) as usize];
        let outcome = solver.outcome_raw(&[cell.a, cell.b, cell.c], RuleSet::Standard)?;
        assert_eq!(
            outcome,
            Outcome::P,
            "table cell ({}, {}, {}) failed its P re-check",
            cell.a,
            cell.b,
            cell.c
        );
    }
    Ok(table)
}

// ----------------------------------------------------------------------
// S positions: entries in {1, 2}, interior 1-runs of even length
// ----------------------------------------------------------------------

/// Membership in S: every stack is 1 or 2 and every maximal run of 1s
/// that touches neither end has even length. The empty position is in S.
pub fn is_in_s(pos: &Position) -> bool {
    let s = pos.stacks();
    if !s.iter().all(|&v| v == 1 || v == 2) {
        return false;
    }
    let mut i = 0;
    while i < s.len() {
        if s[i] == 1 {
            let start = i;
            while i < s.len() && s[i] == 1 {
                i += 1;
            }
            let interior = start > 0 && i < s.len();
            if interior && (i - start) % 2 == 1 {
                return false;
            }
        } else {
            i += 1;
        }
    }
    true
}

/// Total token count; paired with the mod-3 classification of S.
pub fn s_sum(pos: &Position) -> u64 {
    pos.total()
}

// ----------------------------------------------------------------------
// Suites
// ----------------------------------------------------------------------

/// One machine-checkable structural statement.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Suite {
    EqualTriples,
    NearPalindromes,
    UniqueCBounds,
    NonpalindromeOrder,
    WythoffTriplesN,
    PalindromeBands,
    FrozenEquivalence,
    FrozenInequality,
    HeavyHandedConjecture,
    FourStackSymmetric,
    FourStack1ab1,
    SMod3,
    RowInvolution,
    ColumnCofinite,
    A002251Column,
}

impl Suite {
    pub const ALL: [Suite; 15] = [
        Suite::EqualTriples,
        Suite::NearPalindromes,
        Suite::UniqueCBounds,
        Suite::NonpalindromeOrder,
        Suite::WythoffTriplesN,
        Suite::PalindromeBands,
        Suite::FrozenEquivalence,
        Suite::FrozenInequality,
        Suite::HeavyHandedConjecture,
        Suite::FourStackSymmetric,
        Suite::FourStack1ab1,
        Suite::SMod3,
        Suite::RowInvolution,
        Suite::ColumnCofinite,
        Suite::A002251Column,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::EqualTriples => "equal_triples",
            Suite::NearPalindromes => "near_palindromes",
            Suite::UniqueCBounds => "unique_c_bounds",
            Suite::NonpalindromeOrder => "nonpalindrome_order",
            Suite::WythoffTriplesN => "wythoff_triples_N",
            Suite::PalindromeBands => "palindrome_bands",
            Suite::FrozenEquivalence => "frozen_equivalence",
            Suite::FrozenInequality => "frozen_inequality",
            Suite::HeavyHandedConjecture => "heavy_handed_conjecture",
            Suite::FourStackSymmetric => "four_stack_symmetric",
            Suite::FourStack1ab1 => "four_stack_1ab1",
            Suite::SMod3 => "s_mod3",
            Suite::RowInvolution => "row_involution",
            Suite::ColumnCofinite => "column_cofinite",
            Suite::A002251Column => "a002251_column",
        }
    }

    /// True for suites probing an unproven conjecture: their reports may
    /// carry findings, and findings never fail the run.
    pub fn is_conjecture(self) -> bool {
        matches!(self, Suite::HeavyHandedConjecture)
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        Suite::ALL
            .into_iter()
            .find(|suite| suite.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| {
                let names: Vec<&str> = Suite::ALL.iter().map(|s| s.name()).collect();
                format!("unknown suite {s:?}; expected one of {}", names.join(", "))
            })
    }
}

/// Runs one suite at the given bound.
pub fn verify(solver: &Solver, suite: Suite, bound: u64) -> Result<VerificationReport, AnalysisError> {
    let mut r = VerificationReport::new(suite.name(), format!("bound {bound}"));
    match suite {
        Suite::EqualTriples => equal_triples(solver, bound, &mut r)?,
        Suite::NearPalindromes => near_palindromes(solver, bound, &mut r)?,
        Suite::UniqueCBounds => unique_c_bounds(solver, bound, &mut r)?,
        Suite::NonpalindromeOrder => nonpalindrome_order(solver, bound, &mut r)?,
        Suite::WythoffTriplesN => wythoff_triples_n(solver, bound, &mut r)?,
        Suite::PalindromeBands => palindrome_bands(solver, bound, &mut r)?,
        Suite::FrozenEquivalence => frozen_equivalence(solver, bound, &mut r)?,
        Suite::FrozenInequality => frozen_inequality(solver, bound, &mut r)?,
        Suite::HeavyHandedConjecture => heavy_handed_conjecture(solver, bound, &mut r)?,
        Suite::FourStackSymmetric => four_stack_symmetric(solver, bound, &mut r)?,
        Suite::FourStack1ab1 => four_stack_1ab1(solver, bound, &mut r)?,
        Suite::SMod3 => s_mod3(solver, bound, &mut r)?,
        Suite::RowInvolution => row_involution(solver, bound, &mut r)?,
        Suite::ColumnCofinite => column_cofinite(solver, bound, &mut r)?,
        Suite::A002251Column => a002251_column(solver, bound, &mut r)?,
    }
    Ok(r.finish())
}

fn is_p(solver: &Solver, raw: &[u64]) -> Result<bool, SolveError> {
    Ok(solver.outcome_raw(raw, RuleSet::Standard)? == Outcome::P)
}

/// (a, a, a) is P for every a.
fn equal_triples(s: &Solver, bound: u64, r: &mut VerificationReport) -> Result<(), AnalysisError> {
    for a in 0..=bound {
        if !is_p(s, &[a, a, a])? {
            r.counterexample(format!("({a},{a},{a}) is N"));
        }
    }
    Ok(())
}

/// (a, a+1, a) is P for a >= 3 and N for a in {0, 1, 2}.
fn near_palindromes(s: &Solver, bound: u64, r: &mut VerificationReport) -> Result<(), AnalysisError> {
    for a in 0..=bound.max(2) {
        let p = is_p(s, &[a, a + 1, a])?;
        let expect = a >= 3;
        if p != expect {
            r.counterexample(format!(
                "({a},{},{a}) is {}",
                a + 1,
                if p { "P" } else { "N" }
            ));
        }
    }
    r.note("a = 0 case contracts to the single stack (1), which is N");
    Ok(())
}

/// For every (a, b) with b > 0 there is a unique P completion c, inside
/// the window a+b+min(a,b)+1 with c < a+b when a > 0; the a = 0 column
/// contracts to two-stack play, where the completion is the Wythoff
/// partner of b (which can reach 2b, so the three-stack window does not
/// apply there).
fn unique_c_bounds(s: &Solver, bound: u64, r: &mut VerificationReport) -> Result<(), AnalysisError> {
    for a in 0..=bound {
        for b in 1..=bound {
            match s.unique_c(a, b, RuleSet::Standard) {
                Ok(c) => {
                    if a > 0 && c > a + b + a.min(b) + 1 {
                        r.counterexample(format!("unique_c({a},{b}) = {c} exceeds window"));
                    }
                    if a > 0 && c >= a + b {
                        r.counterexample(format!("({a},{b},{c}) is P with c >= a+b"));
                    }
                    if a == 0 {
                        let partner = beatty::wythoff_involution(b)?;
                        if c != partner {
                            r.counterexample(format!(
                                "unique_c(0,{b}) = {c}, Wythoff partner is {partner}"
                            ));
                        }
                    }
                }
                Err(e @ (SolveError::BoundViolation { .. } | SolveError::InequalityViolation { .. })) => {
                    r.counterexample(e.to_string());
                }
                Err(e) => return Err(e.into()),
            }
        }
    }
    r.note("the pigeonhole window and the c < a+b inequality require a > 0; at a = 0 the completion is wythoff_involution(b), checked exactly");
    Ok(())
}

/// A non-palindrome P triple (a, b, c) with a < c has a < b.
fn nonpalindrome_order(s: &Solver, bound: u64, r: &mut VerificationReport) -> Result<(), AnalysisError> {
    for a in 0..=bound {
        for b in 1..=bound {
            let c = s.unique_c(a, b, RuleSet::Standard)?;
            if c != a && a < c && a >= b {
                r.counterexample(format!("({a},{b},{c}) is P with a < c but a >= b"));
            }
        }
    }
    Ok(())
}

/// The Wythoff-derived N palindromes. For a cold pair (x, y) with x < y,
/// all four of (x,y,x), (y,x,y), (x,x+y,x), (y,x+y,y) are N; in Beatty
/// terms that is (a, ceil(phi a), a) and (a, ceil(phi^2 a), a) for lower
/// a, and (a, floor(a/phi), a) and (a, floor(phi a), a) for upper a.
///
/// Note the upper-a companion uses floor(phi a) = x + y. The variant with
/// ceil(phi a) = x + y + 1, which a naive transcription of the lower-a
/// form suggests, is simply a different palindrome and is not always N;
/// the suite reports where it is P as findings.
fn wythoff_triples_n(s: &Solver, bound: u64, r: &mut VerificationReport) -> Result<(), AnalysisError> {
    let mut ceil_exceptions = Vec::new();
    for a in 1..=bound {
        let partner = beatty::wythoff_involution(a)?;
        let lower = partner > a;
        let checks: [(u64, &str); 2] = if lower {
            [
                (beatty::ceil_phi(a)?, "(a, ceil(phi a), a)"),
                (beatty::ceil_phi2(a)?, "(a, ceil(phi^2 a), a)"),
            ]
        } else {
            [
                (beatty::floor_over_phi(a)?, "(a, floor(a/phi), a)"),
                (beatty::floor_phi(a)?, "(a, floor(phi a), a)"),
            ]
        };
        for (b, label) in checks {
            if is_p(s, &[a, b, a])? {
                r.counterexample(format!("{label} = ({a},{b},{a}) is P"));
            }
        }
        if !lower {
            let b = beatty::ceil_phi(a)?;
            if is_p(s, &[a, b, a])? {
                ceil_exceptions.push(a);
            }
        }
    }
    if !ceil_exceptions.is_empty() {
        r.finding(format!(
            "(a, ceil(phi a), a) is P at upper Wythoff a = {ceil_exceptions:?}; the sound upper-a form uses floor(phi a)"
        ));
    }
    Ok(())
}

/// Palindrome outcome bands around the golden-ratio lines.
///
/// - Above the band: (a, b, a) is P for all b > ceil(phi^2 a).
/// - Below the band (0 < b < ceil(a/phi)): (a, b, a) is P unless {a, b} is
///   a Wythoff cold pair, in which case it is N. (The pair cells are real:
///   (2,1,2) and (5,3,5) are N, so the unqualified "all P" form is wrong.)
/// - Confinement: every cell with f(a,b) != a either is a Wythoff-pair
///   cell (f = 0) or satisfies ceil(a/phi) <= b <= ceil(phi^2 a); the pair
///   cells below the band sit exactly at b = floor(a/phi).
/// - Sharpness: for lower a the N palindrome (a, ceil(phi^2 a), a) sits on
///   the upper boundary; for upper a the N palindrome (a, floor(a/phi), a)
///   sits on the top edge of the sub-band region.
fn palindrome_bands(s: &Solver, bound: u64, r: &mut VerificationReport) -> Result<(), AnalysisError> {
    for a in 1..=bound {
        let hi = beatty::ceil_phi2(a)?;
        for b in hi + 1..=hi + bound {
            if !is_p(s, &[a, b, a])? {
                r.counterexample(format!("({a},{b},{a}) is N above the band"));
            }
        }
        let lo = beatty::floor_over_phi(a)? + 1; // = ceil(a/phi) for a > 0
        for b in 1..lo {
            let p = is_p(s, &[a, b, a])?;
            let pair = beatty::is_wythoff_p(a, b)?;
            if p == pair {
                r.counterexample(format!(
                    "({a},{b},{a}) is {} below the band (wythoff pair: {pair})",
                    if p { "P" } else { "N" }
                ));
            }
        }
        // Confinement of non-palindrome completions.
        for b in 1..=hi + bound {
            let c = s.unique_c(a, b, RuleSet::Standard)?;
            if c == a {
                continue;
            }
            if beatty::is_wythoff_p(a, b)? {
                if c != 0 {
                    r.counterexample(format!("pair cell ({a},{b}) has completion {c}, not 0"));
                }
                if b < lo && b != lo - 1 {
                    r.counterexample(format!(
                        "sub-band pair cell ({a},{b}) is not at floor(a/phi) = {}",
                        lo - 1
                    ));
                }
            } else if !(lo <= b && b <= hi) {
                r.counterexample(format!(
                    "non-palindrome P triple ({a},{b},{c}) outside band [{lo},{hi}]"
                ));
            }
        }
        // Sharpness witnesses.
        let partner = beatty::wythoff_involution(a)?;
        if partner > a {
            if is_p(s, &[a, hi, a])? {
                r.counterexample(format!("({a},{hi},{a}) on the upper boundary is P"));
            }
        } else if lo >= 2 && is_p(s, &[a, lo - 1, a])? {
            // lo - 1 = floor(a/phi) is the Wythoff partner for upper a.
            r.counterexample(format!("({a},{},{a}) at the sub-band edge is P", lo - 1));
        }
    }
    r.note("the sub-band P statement requires excluding Wythoff-pair palindromes, e.g. (2,1,2) and (5,3,5) are N");
    r.note("pair cells with b < a are the only non-palindrome completions below the band; they sit at b = floor(a/phi) with c = 0");
    Ok(())
}

/// Standard and frozen rules give identical 3-stack outcomes except on
/// exactly the family (a, 0, a) with a > 0 (frozen P, standard N).
fn frozen_equivalence(s: &Solver, bound: u64, r: &mut VerificationReport) -> Result<(), AnalysisError> {
    for a in 0..=bound {
        for b in 0..=bound {
            for c in 0..=bound {
                let std = s.outcome_raw(&[a, b, c], RuleSet::Standard)?;
                let frz = s.outcome_raw(&[a, b, c], RuleSet::Frozen)?;
                let exception = b == 0 && a == c && a > 0;
                if exception {
                    if !(std == Outcome::N && frz == Outcome::P) {
                        r.counterexample(format!(
                            "({a},{b},{c}): expected standard N / frozen P, got {std}/{frz}"
                        ));
                    }
                } else if std != frz {
                    r.counterexample(format!(
                        "({a},{b},{c}): standard {std} but frozen {frz} outside the (a,0,a) family"
                    ));
                }
            }
        }
    }
    Ok(())
}

/// Frozen P triples (a, b, c) with a > 0 and b > 0 satisfy c < a + b.
/// With a = 0 the triple contracts to two-stack play where the inequality
/// genuinely fails, e.g. (0,1,2) is a frozen P position with c >= a + b.
fn frozen_inequality(s: &Solver, bound: u64, r: &mut VerificationReport) -> Result<(), AnalysisError> {
    for a in 1..=bound {
        for b in 1..=bound {
            match s.unique_c(a, b, RuleSet::Frozen) {
                Ok(c) => {
                    if c >= a + b {
                        r.counterexample(format!("frozen P triple ({a},{b},{c}) has c >= a+b"));
                    }
                }
                Err(e @ (SolveError::BoundViolation { .. } | SolveError::InequalityViolation { .. })) => {
                    r.counterexample(e.to_string());
                }
                Err(e) => return Err(e.into()),
            }
        }
    }
    for b in 1..=bound.min(8) {
        let c = s.unique_c(0, b, RuleSet::Frozen)?;
        if c >= b {
            r.finding(format!("(0,{b},{c}) is frozen P with c >= a+b: the inequality needs a > 0"));
        }
    }
    Ok(())
}

/// Probes the conjecture that the heavy-handed restriction does not change
/// any 3-stack outcome. Disagreements are findings, never failures.
fn heavy_handed_conjecture(s: &Solver, bound: u64, r: &mut VerificationReport) -> Result<(), AnalysisError> {
    let mut disagreements = 0usize;
    for a in 1..=bound {
        for b in 0..=bound {
            for c in 1..=bound {
                let std = s.outcome_raw(&[a, b, c], RuleSet::Standard)?;
                let heavy = s.outcome_raw(&[a, b, c], RuleSet::HeavyHanded)?;
                if std != heavy {
                    disagreements += 1;
                    if disagreements <= 10 {
                        r.finding(format!("({a},{b},{c}): standard {std} but heavy-handed {heavy}"));
                    }
                }
            }
        }
    }
    if disagreements == 0 {
        r.note(format!("P sets coincide on all 3-stack positions with entries <= {bound}"));
    } else {
        r.finding(format!("{disagreements} disagreements in total"));
    }
    Ok(())
}

/// (a, b, b, a) is P exactly for (a, b) = (1, 2) and for a > 1, b = 1;
/// and the five smallest four-stack P positions, up to reversal, are the
/// known total-6 set (with nothing below total 6).
fn four_stack_symmetric(s: &Solver, bound: u64, r: &mut VerificationReport) -> Result<(), AnalysisError> {
    for a in 1..=bound {
        for b in 1..=bound {
            let p = is_p(s, &[a, b, b, a])?;
            let expect = (a == 1 && b == 2) || (a > 1 && b == 1);
            if p != expect {
                r.counterexample(format!(
                    "({a},{b},{b},{a}) is {}, characterization says {}",
                    if p { "P" } else { "N" },
                    if expect { "P" } else { "N" }
                ));
            }
        }
    }

    let mut smallest: BTreeSet<Position> = BTreeSet::new();
    let mut comps = Vec::new();
    for total in 4..=6u64 {
        compositions(total, 4, &mut comps);
    }
    for comp in &comps {
        if is_p(s, comp)? {
            if comp.iter().sum::<u64>() < 6 {
                r.counterexample(format!("{comp:?} is a 4-stack P position with total < 6"));
            }
            smallest.insert(Position::normalize(comp, RuleSet::Standard).canonical_key());
        }
    }
    let expect: BTreeSet<Position> = [
        &[1u64, 1, 2, 2][..],
        &[1, 1, 3, 1],
        &[1, 2, 1, 2],
        &[1, 2, 2, 1],
        &[2, 1, 1, 2],
    ]
    .into_iter()
    .map(|s| Position::from(s))
    .collect();
    if smallest != expect {
        r.counterexample(format!(
            "smallest 4-stack P set (up to reversal) is {smallest:?}, expected {expect:?}"
        ));
    }
    Ok(())
}

/// Outcomes of (1, a, b, 1). The P set over positive (a, b) is
/// {(2,2)} ∪ {(1,3), (3,1)} ∪ {(3,b) : b > 5} ∪ {(a,3) : a > 5}.
///
/// The compact "a = b = 2 or a = 3, b > 5" form misses the reversal ray
/// and, more importantly, the pair {1, 3}: (1,1,3,1) is P — it is one of
/// the five smallest four-stack P positions. Deviations of the compact
/// form are reported as findings.
fn four_stack_1ab1(s: &Solver, bound: u64, r: &mut VerificationReport) -> Result<(), AnalysisError> {
    let mut literal_misses = Vec::new();
    for a in 1..=bound {
        for b in 1..=bound {
            let p = is_p(s, &[1, a, b, 1])?;
            let expect = (a == 2 && b == 2)
                || (a == 3 && b == 1)
                || (a == 1 && b == 3)
                || (a == 3 && b > 5)
                || (b == 3 && a > 5);
            if p != expect {
                r.counterexample(format!(
                    "(1,{a},{b},1) is {}, characterization says {}",
                    if p { "P" } else { "N" },
                    if expect { "P" } else { "N" }
                ));
            }
            let literal = (a == 2 && b == 2) || (a == 3 && b > 5);
            if p != literal {
                literal_misses.push((a, b));
            }
        }
    }
    if !literal_misses.is_empty() {
        r.finding(format!(
            "the compact form \"a=b=2 or a=3, b>5\" misses P cells at (a,b) = {literal_misses:?} (reversal ray plus the pair {{1,3}})"
        ));
    }
    Ok(())
}

/// Over S (entries in {1,2}, interior 1-runs even), P holds exactly when
/// the total is divisible by 3, and S is closed under taking options.
fn s_mod3(s: &Solver, bound: u64, r: &mut VerificationReport) -> Result<(), AnalysisError> {
    let mut members = 0usize;
    for len in 0..=bound as usize {
        let mut seq = vec![1u64; len];
        loop {
            let pos = Position::from(&seq[..]);
            if is_in_s(&pos) {
                members += 1;
                let p = is_p(s, &seq)?;
                let expect = s_sum(&pos) % 3 == 0;
                if p != expect {
                    r.counterexample(format!(
                        "{pos} in S has total {} but is {}",
                        s_sum(&pos),
                        if p { "P" } else { "N" }
                    ));
                }
                for opt in options(&pos, RuleSet::Standard)? {
                    if !is_in_s(&opt) {
                        r.counterexample(format!("option {opt} of {pos} leaves S"));
                    }
                }
            }
            // next sequence over {1,2}
            let mut i = 0;
            while i < len && seq[i] == 2 {
                seq[i] = 1;
                i += 1;
            }
            if i == len {
                break;
            }
            seq[i] = 2;
            if len == 0 {
                break;
            }
        }
    }
    r.note(format!("checked {members} members of S up to length {bound}"));
    Ok(())
}

/// Rows of the completion table are involutions: f(f(a,b), b) = a.
fn row_involution(s: &Solver, bound: u64, r: &mut VerificationReport) -> Result<(), AnalysisError> {
    for b in 1..=bound {
        for a in 0..=bound {
            let c = s.unique_c(a, b, RuleSet::Standard)?;
            let back = s.unique_c(c, b, RuleSet::Standard)?;
            if back != a {
                r.counterexample(format!("f(f({a},{b}),{b}) = f({c},{b}) = {back} != {a}"));
            }
        }
    }
    Ok(())
}

/// Columns are eventually constant: f(a, b) = a for all b past the band
/// (checked on a window of `bound` rows above it). The a = 0 column is
/// the lone exception — its completions follow the Wythoff involution and
/// never return to 0 — so the scan starts at a = 1.
fn column_cofinite(s: &Solver, bound: u64, r: &mut VerificationReport) -> Result<(), AnalysisError> {
    for a in 1..=bound {
        let hi = beatty::ceil_phi2(a)?;
        for b in hi + 1..=hi + bound {
            let c = s.unique_c(a, b, RuleSet::Standard)?;
            if c != a {
                r.counterexample(format!("f({a},{b}) = {c} != {a} above the band"));
            }
        }
    }
    r.note("column a = 0 excluded: f(0,b) is the Wythoff involution of b, nonzero for every b >= 1");
    Ok(())
}

/// The a = 0 column is the Wythoff involution (OEIS A002251 as a
/// 0-indexed sequence).
fn a002251_column(s: &Solver, bound: u64, r: &mut VerificationReport) -> Result<(), AnalysisError> {
    for b in 1..=bound {
        let c = s.unique_c(0, b, RuleSet::Standard)?;
        let partner = beatty::wythoff_involution(b)?;
        if c != partner {
            r.counterexample(format!("unique_c(0,{b}) = {c}, involution gives {partner}"));
        }
    }
    Ok(())
}

// ----------------------------------------------------------------------
// Conjecture probe: rays in (a, b, c, a)
// ----------------------------------------------------------------------

/// Window-limited search result for the upward-closed-ray conjecture on
/// positions (a, b0, c, a).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Conjecture2Report {
    pub a: u64,
    pub b_max: u64,
    pub c_max: u64,
    /// Smallest (b0, c0) with {c in (b0, c_max] : (a,b0,c,a) P} exactly
    /// equal to {c : c >= c0}, if any.
    pub candidate: Option<(u64, u64)>,
    pub notes: Vec<String>,
}

impl fmt::Display for Conjecture2Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "a = {}, b in ({}, {}], c in (b, {}]: ", self.a, self.a, self.b_max, self.c_max)?;
        match self.candidate {
            Some((b0, c0)) => write!(f, "candidate b0 = {b0}, c0 = {c0}")?,
            None => write!(f, "no ray candidate in window")?,
        }
        for note in &self.notes {
            write!(f, "\n  note: {note}")?;
        }
        Ok(())
    }
}

/// Searches b in (a, b_max] for the first b0 whose P set over c in
/// (b0, c_max] forms a nonempty upward-closed ray {c >= c0}. The result
/// is a window-limited observation, never a proof.
pub fn explore_conjecture2(
    solver: &Solver,
    a: u64,
    b_max: u64,
    c_max: u64,
) -> Result<Conjecture2Report, AnalysisError> {
    assert!(a >= 1, "a must be positive");
    let mut report = Conjecture2Report { a, b_max, c_max, candidate: None, notes: Vec::new() };
    if b_max <= a + 1 {
        report.notes.push("window too small".to_string());
        return Ok(report);
    }
    for b0 in a + 1..=b_max {
        let mut hits = Vec::new();
        for c in b0 + 1..=c_max {
            if solver.outcome_raw(&[a, b0, c, a], RuleSet::Standard)? == Outcome::P {
                hits.push(c);
            }
        }
        let Some(&c0) = hits.first() else { continue };
        let is_ray = hits.len() as u64 == c_max - c0 + 1;
        if is_ray {
            report.candidate = Some((b0, c0));
            report.notes.push(format!(
                "(a,{b0},c,a) is P for every scanned c in [{c0}, {c_max}] and N below within the window"
            ));
            break;
        }
    }
    report
        .notes
        .push("window-limited observation; P cells with c <= b0 are outside the searched ray".into());
    Ok(report)
}

/// All compositions of `total` into exactly `slots` positive parts,
/// appended to `out`. Sweep helper: every position with a given stack
/// count and token total is one of these.
pub fn compositions(total: u64, slots: usize, out: &mut Vec<Vec<u64>>) {
    fn rec(left: u64, slots: usize, acc: &mut Vec<u64>, out: &mut Vec<Vec<u64>>) {
        if slots == 1 {
            acc.push(left);
            out.push(acc.clone());
            acc.pop();
            return;
        }
        for v in 1..=left + 1 - slots as u64 {
            acc.push(v);
            rec(left - v, slots - 1, acc, out);
            acc.pop();
        }
    }
    if slots >= 1 && total >= slots as u64 {
        rec(total, slots, &mut Vec::new(), out);
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn solver() -> Solver {
        Solver::new()
    }

    #[test]
    fn table_classes_and_values() {
        let s = solver();
        let t = build_f_table(&s, 8, 8).unwrap();
        let cell = t.cell(1, 2).unwrap();
        assert_eq!((cell.c, cell.class), (0, CellClass::WythoffPair));
        let cell = t.cell(1, 3).unwrap();
        assert_eq!((cell.c, cell.class), (2, CellClass::SumPair));
        let cell = t.cell(0, 7).unwrap();
        assert_eq!(cell.c, 4);
        let cell = t.cell(4, 7).unwrap();
        assert_eq!(cell.c, 0);
        let cell = t.cell(5, 7).unwrap();
        assert_eq!(cell.c, 8);
        let cell = t.cell(8, 7).unwrap();
        assert_eq!(cell.c, 5);
    }

    #[test]
    fn table_csv_round_trip() {
        let s = solver();
        let t = build_f_table(&s, 5, 4).unwrap();
        let csv = t.to_csv();
        let back = FTable::from_csv(&csv).unwrap();
        assert_eq!(t, back);
        assert!(FTable::from_csv("nonsense\n1,2,3,wythoff_pair\n").is_err());
    }

    #[test]
    fn table_renderings_mention_every_cell() {
        let s = solver();
        let t = build_f_table(&s, 3, 3).unwrap();
        let svg = t.to_svg(&TableStyle::default());
        assert_eq!(svg.matches("<rect").count(), 12);
        assert!(svg.contains("#4CAF50"));
        let txt = t.to_txt();
        assert!(txt.contains("b=  3"));
    }

    #[test]
    fn s_membership() {
        let p = |v: &[u64]| Position::from(v);
        assert!(is_in_s(&p(&[])));
        assert!(is_in_s(&p(&[2, 1, 1, 2])));
        assert!(!is_in_s(&p(&[2, 1, 2])));
        assert!(is_in_s(&p(&[2, 1, 1, 1, 1, 1, 1, 1, 1, 2])));
        assert!(is_in_s(&p(&[1, 2, 1])));
        assert!(!is_in_s(&p(&[3])));
        assert_eq!(s_sum(&p(&[2, 1, 1, 2])), 6);
    }

    #[test]
    fn suite_names_round_trip() {
        for suite in Suite::ALL {
            assert_eq!(suite.name().parse::<Suite>().unwrap(), suite);
        }
        assert!("wythoff_triples_n".parse::<Suite>().is_ok());
        assert!("bogus".parse::<Suite>().is_err());
    }

    #[test]
    fn small_suites_pass() {
        let s = solver();
        for (suite, bound) in [
            (Suite::EqualTriples, 10),
            (Suite::NearPalindromes, 8),
            (Suite::UniqueCBounds, 8),
            (Suite::NonpalindromeOrder, 8),
            (Suite::WythoffTriplesN, 8),
            (Suite::PalindromeBands, 6),
            (Suite::FrozenEquivalence, 6),
            (Suite::FrozenInequality, 8),
            (Suite::FourStackSymmetric, 6),
            (Suite::FourStack1ab1, 8),
            (Suite::SMod3, 7),
            (Suite::RowInvolution, 6),
            (Suite::ColumnCofinite, 6),
            (Suite::A002251Column, 20),
        ] {
            let report = verify(&s, suite, bound).unwrap();
            assert!(report.pass, "suite {suite} failed:\n{report}");
        }
    }

    #[test]
    fn wythoff_triples_reports_ceil_form_exceptions() {
        let s = solver();
        let report = verify(&s, Suite::WythoffTriplesN, 13).unwrap();
        assert!(report.pass);
        assert!(
            report.findings.iter().any(|f| f.contains("a = [5, 13]")),
            "expected ceil-form exceptions at 5 and 13, got {:?}",
            report.findings
        );
    }

    #[test]
    fn heavy_conjecture_small_bound() {
        let s = solver();
        let report = verify(&s, Suite::HeavyHandedConjecture, 8).unwrap();
        assert!(report.pass, "conjecture suite must not fail:\n{report}");
    }

    #[test]
    fn conjecture2_windows() {
        let s = solver();
        let r = explore_conjecture2(&s, 1, 10, 12).unwrap();
        assert_eq!(r.candidate, Some((3, 6)));
        let r = explore_conjecture2(&s, 3, 12, 40).unwrap();
        assert_eq!(r.candidate, Some((5, 11)));
        let r = explore_conjecture2(&s, 5, 6, 10).unwrap();
        assert!(r.candidate.is_none());
        assert!(r.notes.iter().any(|n| n.contains("window too small")));
    }

    #[test]
    fn compositions_enumerate_exactly() {
        let mut out = Vec::new();
        compositions(4, 2, &mut out);
        assert_eq!(out, vec![vec![1, 3], vec![2, 2], vec![3, 1]]);
        out.clear();
        compositions(3, 4, &mut out);
        assert!(out.is_empty());
    }
}
