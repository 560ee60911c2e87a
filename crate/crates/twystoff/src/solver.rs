//! Memoized exact solving: P/N outcomes, Grundy values, the unique-third-
//! stack search, Grundy-completion search, and memo persistence.
//!
//! The solver is keyed on the reversal-minimal canonical form of a position
//! plus the rule set. Recursion is realized with an explicit work stack so
//! deep positions cannot overflow the call stack. Grundy values are computed
//! lazily and cached next to the outcome.

use std::fmt;
use std::fs;
use std::path::Path;
use std::str::FromStr;

use dashmap::mapref::entry::Entry as MapEntry;
use dashmap::DashMap;

use crate::position::{option_keys, parse_stacks, GameError, Position, RuleSet};

/// Who wins with optimal play: P = previous player (the one who just
/// moved), N = next player to move.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Outcome {
    P,
    N,
}

impl fmt::Display for Outcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Outcome::P => "P",
            Outcome::N => "N",
        })
    }
}

impl FromStr for Outcome {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "P" => Ok(Outcome::P),
            "N" => Ok(Outcome::N),
            other => Err(format!("not an outcome: {other:?}")),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum SolveError {
    #[error(transparent)]
    Game(#[from] GameError),
    /// The search window did not contain exactly one P completion.
    #[error("expected exactly one P completion for ({a},{b},c) under {rules} with c in 0..={window}, found {found:?}")]
    BoundViolation { a: u64, b: u64, rules: RuleSet, window: u64, found: Vec<u64> },
    /// A proven inequality (c < a+b) failed; indicates a solver bug.
    #[error("inequality c < a+b violated by P position ({a},{b},{c}) under {rules}")]
    InequalityViolation { a: u64, b: u64, c: u64, rules: RuleSet },
    /// Grundy-completion search exhausted its escalation cap.
    #[error("no completion of ({prefix}, x) with Grundy value {grundy} found for x <= {cap}")]
    SearchCapExceeded { prefix: Position, grundy: u64, cap: u64 },
    /// A sampled memo entry disagreed with its definitional recomputation.
    #[error("memo audit failed at {position} under {rules}: {detail}")]
    AuditFailed { position: Position, rules: RuleSet, detail: String },
}

#[derive(Debug, thiserror::Error)]
pub enum MemoError {
    #[error("memo i/o error: {0}")]
    Io(#[from] std::io::Error),
    #[error("memo format error at line {line}: {msg}")]
    Format { line: usize, msg: String },
}

/// One memo record. Outcomes are always known; Grundy values are filled in
/// on demand and must satisfy `grundy == 0 <=> outcome == P`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
struct Entry {
    outcome: Outcome,
    grundy: Option<u64>,
}

type Key = (RuleSet, Position);

/// Shared, thread-safe solver. Results are deterministic and entries are
/// immutable once written (Grundy values may be added to an existing
/// outcome-only entry), so concurrent duplicated work is benign.
pub struct Solver {
    memo: DashMap<Key, Entry>,
}

impl Default for Solver {
    fn default() -> Self {
        Self::new()
    }
}

/// Ceiling of the escalation schedule in `unique_last_for_grundy`.
const SEARCH_CAP_LIMIT: u64 = 1 << 20;

const MEMO_HEADER: &str = "TWYSTOFF-MEMO v1";

impl Solver {
    pub fn new() -> Self {
        Solver { memo: DashMap::new() }
    }

    /// Number of memoized entries (composite positions only; empty and
    /// single-stack positions are resolved arithmetically, never stored).
    pub fn len(&self) -> usize {
        self.memo.len()
    }

    pub fn is_empty(&self) -> bool {
        self.memo.is_empty()
    }

    // ------------------------------------------------------------------
    // Outcome and Grundy
    // ------------------------------------------------------------------

    pub fn outcome(&self, pos: &Position, rules: RuleSet) -> Result<Outcome, SolveError> {
        self.outcome_raw(pos.stacks(), rules)
    }

    /// Outcome of a raw (possibly non-canonical) stack sequence.
    pub fn outcome_raw(&self, raw: &[u64], rules: RuleSet) -> Result<Outcome, SolveError> {
        let key = Position::normalize(raw, rules).canonical_key();
        self.solve_outcome(key, rules)
    }

    pub fn grundy(&self, pos: &Position, rules: RuleSet) -> Result<u64, SolveError> {
        self.grundy_raw(pos.stacks(), rules)
    }

    /// Grundy value of a raw stack sequence: mex over option Grundy values;
    /// zero exactly at P positions.
    pub fn grundy_raw(&self, raw: &[u64], rules: RuleSet) -> Result<u64, SolveError> {
        let key = Position::normalize(raw, rules).canonical_key();
        self.solve_grundy(key, rules)
    }

    /// Empty and single-stack positions are exactly nim heaps; keeping them
    /// out of the memo keeps persistence files small and search caps cheap.
    fn trivial_entry(key: &Position) -> Option<Entry> {
        match key.stacks() {
            [] => Some(Entry { outcome: Outcome::P, grundy: Some(0) }),
            [n] => Some(Entry { outcome: Outcome::N, grundy: Some(*n) }),
            _ => None,
        }
    }

    fn lookup(&self, key: &Position, rules: RuleSet) -> Option<Entry> {
        if let Some(e) = Self::trivial_entry(key) {
            return Some(e);
        }
        self.memo.get(&(rules, key.clone())).map(|r| *r.value())
    }

    fn record_outcome(&self, key: Position, rules: RuleSet, outcome: Outcome) {
        // Insert-if-absent: an existing entry may already hold a Grundy
        // value, which an outcome-only write must not erase.
        self.memo
            .entry((rules, key))
            .or_insert(Entry { outcome, grundy: None });
    }

    fn record_grundy(&self, key: Position, rules: RuleSet, g: u64) {
        match self.memo.entry((rules, key)) {
            MapEntry::Occupied(mut o) => {
                let e = o.get_mut();
                assert_eq!(
                    e.outcome == Outcome::P,
                    g == 0,
                    "grundy/outcome inconsistency at {} ({:?}): g = {g}",
                    o.key().1,
                    o.key().0,
                );
                e.grundy = Some(g);
            }
            MapEntry::Vacant(v) => {
                let outcome = if g == 0 { Outcome::P } else { Outcome::N };
                v.insert(Entry { outcome, grundy: Some(g) });
            }
        }
    }

    fn solve_outcome(&self, root: Position, rules: RuleSet) -> Result<Outcome, SolveError> {
        if let Some(e) = self.lookup(&root, rules) {
            return Ok(e.outcome);
        }

        struct Frame {
            key: Position,
            children: Vec<Position>,
            next: usize,
        }
        enum Step {
            Descend(Position),
            Done(Outcome),
        }

        let frame = |key: Position| -> Result<Frame, SolveError> {
            let children = option_keys(&key, rules)?;
            Ok(Frame { key, children, next: 0 })
        };

        let mut stack = vec![frame(root.clone())?];
        while let Some(top) = stack.last_mut() {
            let mut step = None;
            while top.next < top.children.len() {
                match self.lookup(&top.children[top.next], rules) {
                    Some(e) if e.outcome == Outcome::P => {
                        step = Some(Step::Done(Outcome::N));
                        break;
                    }
                    Some(_) => top.next += 1,
                    None => {
                        step = Some(Step::Descend(top.children[top.next].clone()));
                        break;
                    }
                }
            }
            // All children are N: the position is P.
            match step.unwrap_or(Step::Done(Outcome::P)) {
                Step::Descend(child) => stack.push(frame(child)?),
                Step::Done(outcome) => {
                    let done = stack.pop().expect("nonempty stack");
                    self.record_outcome(done.key, rules, outcome);
                }
            }
        }
        Ok(self.lookup(&root, rules).expect("root was just solved").outcome)
    }

    fn solve_grundy(&self, root: Position, rules: RuleSet) -> Result<u64, SolveError> {
        if let Some(g) = self.lookup(&root, rules).and_then(|e| e.grundy) {
            return Ok(g);
        }

        struct Frame {
            key: Position,
            children: Vec<Position>,
            next: usize,
        }

        let grundy_of = |key: &Position| -> Option<u64> {
            self.lookup(key, rules).and_then(|e| e.grundy)
        };
        let frame = |key: Position| -> Result<Frame, SolveError> {
            let children = option_keys(&key, rules)?;
            Ok(Frame { key, children, next: 0 })
        };

        let mut stack = vec![frame(root.clone())?];
        while let Some(top) = stack.last_mut() {
            let mut descend = None;
            while top.next < top.children.len() {
                if grundy_of(&top.children[top.next]).is_some() {
                    top.next += 1;
                } else {
                    descend = Some(top.children[top.next].clone());
                    break;
                }
            }
            match descend {
                Some(child) => stack.push(frame(child)?),
                None => {
                    let done = stack.pop().expect("nonempty stack");
                    // mex: the smallest value not among the children's
                    // Grundy values; it cannot exceed the child count.
                    let mut seen = vec![false; done.children.len() + 1];
                    for child in &done.children {
                        let g = grundy_of(child).expect("children solved before parent");
                        if let Ok(i) = usize::try_from(g) {
                            if i < seen.len() {
                                seen[i] = true;
                            }
                        }
                    }
                    let mex = seen.iter().position(|&s| !s).expect("mex exists") as u64;
                    self.record_grundy(done.key, rules, mex);
                }
            }
        }
        Ok(self
            .lookup(&root, rules)
            .and_then(|e| e.grundy)
            .expect("root grundy was just solved"))
    }

    // ------------------------------------------------------------------
    // Derived searches
    // ------------------------------------------------------------------

    /// The unique c >= 0 making (a, b, c) a P position, for b > 0.
    ///
    /// The search window is the proven pigeonhole bound a+b+min{a,b}+1 when
    /// a > 0. For a = 0 the position contracts to the two-stack (b, c)
    /// whose unique completion can reach 2b, outside that bound, so the
    /// window widens to 2b+2. Exactly one hit in the window is required.
    ///
    /// The sharper inequality c < a+b is additionally enforced where it is
    /// proven: a > 0 under standard rules, a > 0 and b > 0 under frozen
    /// rules. (The heavy-handed game carries no proven inequality; callers
    /// compare its values against the standard game instead.)
    pub fn unique_c(&self, a: u64, b: u64, rules: RuleSet) -> Result<u64, SolveError> {
        let window = if a == 0 { 2 * b + 2 } else { a + b + a.min(b) + 1 };
        let mut found = Vec::new();
        for c in 0..=window {
            if self.outcome_raw(&[a, b, c], rules)? == Outcome::P {
                found.push(c);
            }
        }
        let [c] = found[..] else {
            return Err(SolveError::BoundViolation { a, b, rules, window, found });
        };
        let inequality_proven = match rules {
            RuleSet::Standard => a > 0,
            RuleSet::Frozen => a > 0 && b > 0,
            RuleSet::HeavyHanded => false,
        };
        if inequality_proven && c >= a + b {
            return Err(SolveError::InequalityViolation { a, b, c, rules });
        }
        Ok(c)
    }

    /// The least x >= 0 such that (prefix, x) has Grundy value g.
    ///
    /// The completion is unique and bounded, so an ascending scan finds it;
    /// the initial cap sum+min+g+2 mirrors the pigeonhole window and is
    /// doubled on failure up to 2^20 before giving up.
    pub fn unique_last_for_grundy(
        &self,
        prefix: &[u64],
        g: u64,
        rules: RuleSet,
    ) -> Result<u64, SolveError> {
        debug_assert!(
            !prefix.is_empty() && prefix.iter().all(|&v| v > 0),
            "prefix must be nonempty with positive entries"
        );
        let mut raw = prefix.to_vec();
        raw.push(0);
        let last = raw.len() - 1;
        let mut cap = self.grundy_search_cap(prefix, g);
        let mut x = 0u64;
        loop {
            while x <= cap {
                raw[last] = x;
                if self.grundy_raw(&raw, rules)? == g {
                    return Ok(x);
                }
                x += 1;
            }
            if cap >= SEARCH_CAP_LIMIT {
                return Err(SolveError::SearchCapExceeded {
                    prefix: Position::normalize(prefix, rules),
                    grundy: g,
                    cap,
                });
            }
            cap = (cap * 2).min(SEARCH_CAP_LIMIT);
        }
    }

    /// Initial cap of the Grundy-completion scan; exposed so sweeps can
    /// check uniqueness over the same window the search itself uses.
    pub fn grundy_search_cap(&self, prefix: &[u64], g: u64) -> u64 {
        let sum: u64 = prefix.iter().sum();
        let min = prefix.iter().copied().min().unwrap_or(0);
        sum + min + g + 2
    }

    // ------------------------------------------------------------------
    // Persistence
    // ------------------------------------------------------------------

    /// Writes the memo deterministically (records sorted) and returns the
    /// number of records. Format: a `TWYSTOFF-MEMO v1` header, then one
    /// `<ruleset>;<stacks>;<P|N>;<grundy or ->` record per line.
    pub fn save_memo(&self, path: &Path) -> Result<usize, MemoError> {
        let mut lines: Vec<String> = self
            .memo
            .iter()
            .map(|r| {
                let ((rules, pos), e) = (r.key().clone(), *r.value());
                let g = e.grundy.map_or_else(|| "-".to_string(), |g| g.to_string());
                format!("{rules};{pos};{};{g}", e.outcome)
            })
            .collect();
        lines.sort_unstable();
        let mut out = String::with_capacity(lines.len() * 24 + MEMO_HEADER.len() + 1);
        out.push_str(MEMO_HEADER);
        out.push('\n');
        for l in &lines {
            out.push_str(l);
            out.push('\n');
        }
        fs::write(path, out)?;
        Ok(lines.len())
    }

    /// Loads records saved by `save_memo`, validating every line: canonical
    /// keys, parseable fields, `grundy == 0 <=> P`, no duplicates, and no
    /// conflicts with entries already present. Returns the record count.
    pub fn load_memo(&self, path: &Path) -> Result<usize, MemoError> {
        let text = fs::read_to_string(path)?;
        let mut lines = text.lines().enumerate();
        let fail = |line: usize, msg: String| MemoError::Format { line: line + 1, msg };
        match lines.next() {
            Some((_, MEMO_HEADER)) => {}
            Some((i, other)) => {
                return Err(fail(i, format!("expected header {MEMO_HEADER:?}, found {other:?}")))
            }
            None => return Err(fail(0, "empty file".to_string())),
        }
        let mut loaded = 0usize;
        let mut seen_keys = std::collections::HashSet::new();
        for (i, line) in lines {
            if line.is_empty() {
                continue;
            }
            let fields: Vec<&str> = line.split(';').collect();
            let [rules, stacks, outcome, grundy] = fields[..] else {
                return Err(fail(i, format!("expected 4 `;`-separated fields: {line:?}")));
            };
            let rules: RuleSet = rules.parse().map_err(|e| fail(i, format!("{e}")))?;
            let stacks = parse_stacks(stacks).map_err(|e| fail(i, format!("{e}")))?;
            let pos = Position::from(&stacks[..]);
            if pos.len() < 2 {
                return Err(fail(i, format!("{pos} is trivial and never recorded")));
            }
            if Position::normalize(&stacks, rules) != pos || pos.canonical_key() != pos {
                return Err(fail(i, format!("{pos} is not a canonical key under {rules}")));
            }
            let outcome: Outcome = outcome.parse().map_err(|e| fail(i, e))?;
            let grundy = match grundy {
                "-" => None,
                g => Some(g.parse::<u64>().map_err(|_| fail(i, format!("bad grundy: {g:?}")))?),
            };
            if let Some(g) = grundy {
                if (g == 0) != (outcome == Outcome::P) {
                    return Err(fail(i, format!("grundy {g} inconsistent with outcome {outcome}")));
                }
            }
            let entry = Entry { outcome, grundy };
            if !seen_keys.insert((rules, pos.clone())) {
                return Err(fail(i, format!("duplicate record for {pos} under {rules}")));
            }
            match self.memo.entry((rules, pos)) {
                MapEntry::Occupied(o) => {
                    // Merging over an already-computed table is fine as
                    // long as the file agrees with it.
                    let old = *o.get();
                    if old.outcome != entry.outcome
                        || matches!((old.grundy, entry.grundy), (Some(a), Some(b)) if a != b)
                    {
                        return Err(fail(
                            i,
                            format!("{} conflicts with an existing entry", o.key().1),
                        ));
                    }
                }
                MapEntry::Vacant(v) => {
                    v.insert(entry);
                }
            }
            loaded += 1;
        }
        Ok(loaded)
    }

    // ------------------------------------------------------------------
    // Self-audit
    // ------------------------------------------------------------------

    /// Re-verifies a deterministic pseudo-random sample of memo entries
    /// against their definition (P iff all options N; Grundy = mex), as a
    /// guard against corrupted loads. Returns the number audited.
    pub fn audit_sample(&self, sample: usize, seed: u64) -> Result<usize, SolveError> {
        let mut keys: Vec<Key> = self.memo.iter().map(|r| r.key().clone()).collect();
        keys.sort_unstable();
        if keys.is_empty() || sample == 0 {
            return Ok(0);
        }
        let mut state = seed;
        let mut audited = 0;
        for _ in 0..sample {
            let (rules, key) = &keys[(splitmix64(&mut state) % keys.len() as u64) as usize];
            let entry = self.memo.get(&(*rules, key.clone())).map(|r| *r.value());
            let Some(entry) = entry else { continue };
            let children = option_keys(key, *rules)?;
            let mut any_p = false;
            let mut seen = vec![false; children.len() + 1];
            for child in &children {
                any_p |= self.solve_outcome(child.clone(), *rules)? == Outcome::P;
                if entry.grundy.is_some() {
                    let g = self.solve_grundy(child.clone(), *rules)?;
                    if let Ok(i) = usize::try_from(g) {
                        if i < seen.len() {
                            seen[i] = true;
                        }
                    }
                }
            }
            let expect = if any_p { Outcome::N } else { Outcome::P };
            if entry.outcome != expect {
                return Err(SolveError::AuditFailed {
                    position: key.clone(),
                    rules: *rules,
                    detail: format!("stored {}, definition gives {expect}", entry.outcome),
                });
            }
            if let Some(g) = entry.grundy {
                let mex = seen.iter().position(|&s| !s).expect("mex exists") as u64;
                if g != mex {
                    return Err(SolveError::AuditFailed {
                        position: key.clone(),
                        rules: *rules,
                        detail: format!("stored grundy {g}, mex of options is {mex}"),
                    });
                }
            }
            audited += 1;
        }
        Ok(audited)
    }
}

pub(crate) fn splitmix64(state: &mut u64) -> u64 {
    *state = state.wrapping_add(0x9E37_79B9_7F4A_7C15);
    let mut z = *state;
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn solver() -> Solver {
        Solver::new()
    }

    #[test]
    fn wythoff_base_cases() {
        let s = solver();
        assert_eq!(s.outcome_raw(&[], RuleSet::Standard).unwrap(), Outcome::P);
        assert_eq!(s.outcome_raw(&[1, 2], RuleSet::Standard).unwrap(), Outcome::P);
        assert_eq!(s.outcome_raw(&[2, 1], RuleSet::Standard).unwrap(), Outcome::P);
        for n in 1..10u64 {
            assert_eq!(s.outcome_raw(&[n], RuleSet::Standard).unwrap(), Outcome::N);
            assert_eq!(s.outcome_raw(&[n, n], RuleSet::Standard).unwrap(), Outcome::N);
        }
    }

    #[test]
    fn known_three_stack_outcomes() {
        let s = solver();
        assert_eq!(s.outcome_raw(&[1, 2, 1], RuleSet::Standard).unwrap(), Outcome::N);
        assert_eq!(s.outcome_raw(&[1, 3, 2], RuleSet::Standard).unwrap(), Outcome::P);
        assert_eq!(s.outcome_raw(&[2, 3, 1], RuleSet::Standard).unwrap(), Outcome::P);
        for a in 0..12u64 {
            assert_eq!(s.outcome_raw(&[a, a, a], RuleSet::Standard).unwrap(), Outcome::P);
        }
    }

    #[test]
    fn frozen_three_zero_three() {
        let s = solver();
        assert_eq!(s.outcome_raw(&[3, 0, 3], RuleSet::Frozen).unwrap(), Outcome::P);
        assert_eq!(s.outcome_raw(&[3, 0, 3], RuleSet::Standard).unwrap(), Outcome::N);
    }

    #[test]
    fn grundy_matches_nim_on_trivial_positions() {
        let s = solver();
        assert_eq!(s.grundy_raw(&[], RuleSet::Standard).unwrap(), 0);
        for n in 0..20u64 {
            assert_eq!(s.grundy_raw(&[n], RuleSet::Standard).unwrap(), n);
        }
        assert_eq!(s.grundy_raw(&[1, 2], RuleSet::Standard).unwrap(), 0);
    }

    #[test]
    fn grundy_zero_iff_p() {
        let s = solver();
        for a in 0..6u64 {
            for b in 0..6u64 {
                for c in 0..6u64 {
                    let g = s.grundy_raw(&[a, b, c], RuleSet::Standard).unwrap();
                    let o = s.outcome_raw(&[a, b, c], RuleSet::Standard).unwrap();
                    assert_eq!(g == 0, o == Outcome::P, "({a},{b},{c})");
                }
            }
        }
    }

    #[test]
    fn reversal_invariance() {
        let s = solver();
        for a in 0..5u64 {
            for b in 0..5u64 {
                for c in 0..5u64 {
                    for rules in [RuleSet::Standard, RuleSet::Frozen] {
                        assert_eq!(
                            s.outcome_raw(&[a, b, c], rules).unwrap(),
                            s.outcome_raw(&[c, b, a], rules).unwrap(),
                        );
                    }
                    assert_eq!(
                        s.grundy_raw(&[a, b, c], RuleSet::Standard).unwrap(),
                        s.grundy_raw(&[c, b, a], RuleSet::Standard).unwrap(),
                    );
                }
            }
        }
    }

    #[test]
    fn unique_c_row_seven_involution() {
        let s = solver();
        assert_eq!(s.unique_c(0, 7, RuleSet::Standard).unwrap(), 4);
        assert_eq!(s.unique_c(4, 7, RuleSet::Standard).unwrap(), 0);
        assert_eq!(s.unique_c(5, 7, RuleSet::Standard).unwrap(), 8);
        assert_eq!(s.unique_c(8, 7, RuleSet::Standard).unwrap(), 5);
    }

    #[test]
    fn unique_c_known_values() {
        let s = solver();
        assert_eq!(s.unique_c(2, 3, RuleSet::Standard).unwrap(), 1);
        assert_eq!(s.unique_c(1, 2, RuleSet::Standard).unwrap(), 0);
        for b in 4..12u64 {
            assert_eq!(s.unique_c(1, b, RuleSet::Standard).unwrap(), 1, "b = {b}");
        }
        // a = 0 contracts to two stacks; the completion is the Wythoff
        // partner, which exceeds the three-stack pigeonhole bound.
        assert_eq!(s.unique_c(0, 3, RuleSet::Standard).unwrap(), 5);
    }

    #[test]
    fn grundy_completion_search() {
        let s = solver();
        assert_eq!(s.unique_last_for_grundy(&[1], 0, RuleSet::Standard).unwrap(), 2);
        assert_eq!(s.unique_last_for_grundy(&[7], 0, RuleSet::Standard).unwrap(), 4);
        assert_eq!(s.unique_last_for_grundy(&[1, 2], 0, RuleSet::Standard).unwrap(), 0);
    }

    #[test]
    fn memo_round_trip_is_bit_exact() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("memo.txt");
        let s = solver();
        s.outcome_raw(&[4, 2, 2], RuleSet::Standard).unwrap();
        s.grundy_raw(&[2, 2], RuleSet::Standard).unwrap();
        s.outcome_raw(&[3, 0, 3], RuleSet::Frozen).unwrap();
        let saved = s.save_memo(&path).unwrap();
        assert_eq!(saved, s.len());

        let t = solver();
        assert_eq!(t.load_memo(&path).unwrap(), saved);
        assert_eq!(t.len(), s.len());
        let path2 = dir.path().join("memo2.txt");
        t.save_memo(&path2).unwrap();
        assert_eq!(
            fs::read_to_string(&path).unwrap(),
            fs::read_to_string(&path2).unwrap(),
        );
    }

    #[test]
    fn empty_memo_round_trips() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("empty.txt");
        let s = solver();
        assert_eq!(s.save_memo(&path).unwrap(), 0);
        let t = solver();
        assert_eq!(t.load_memo(&path).unwrap(), 0);
        assert!(t.is_empty());
    }

    #[test]
    fn corrupt_memo_files_are_rejected() {
        let dir = tempfile::tempdir().unwrap();
        let cases: &[(&str, &str)] = &[
            ("bad-header.txt", "TWYSTOFF-MEMO v2\n"),
            ("truncated.txt", "TWYSTOFF-MEMO v1\nstandard;1,2;P\n"),
            ("bad-outcome.txt", "TWYSTOFF-MEMO v1\nstandard;1,2;Q;0\n"),
            ("inconsistent.txt", "TWYSTOFF-MEMO v1\nstandard;1,2;N;0\n"),
            ("noncanonical.txt", "TWYSTOFF-MEMO v1\nstandard;2,1;P;0\n"),
            ("contractible.txt", "TWYSTOFF-MEMO v1\nstandard;1,0,2;P;0\n"),
            ("trivial.txt", "TWYSTOFF-MEMO v1\nstandard;5;N;5\n"),
            ("dup.txt", "TWYSTOFF-MEMO v1\nstandard;1,2;P;0\nstandard;1,2;P;0\n"),
        ];
        for (name, contents) in cases {
            let path = dir.path().join(name);
            fs::write(&path, contents).unwrap();
            let s = solver();
            assert!(
                matches!(s.load_memo(&path), Err(MemoError::Format { .. })),
                "{name} should be rejected"
            );
        }
    }

    #[test]
    fn audit_passes_on_honest_memo() {
        let s = solver();
        for a in 0..6u64 {
            for b in 0..6u64 {
                s.outcome_raw(&[a, b, 3], RuleSet::Standard).unwrap();
            }
        }
        let audited = s.audit_sample(50, 0xC0FFEE).unwrap();
        assert!(audited > 0);
    }
}
