//! Positions, rule sets, and exact move generation for Twyst-off.
//!
//! A position is an ordered sequence of tile stacks. A move removes k >= 1
//! tiles from an end stack, or the same k from two adjacent stacks. Under
//! the standard rules an interior stack reduced to zero merges its two
//! neighbours into one stack; empty end stacks simply fall off.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use smallvec::SmallVec;

pub(crate) type Stacks = SmallVec<[u64; 4]>;

/// Which variant of the game is being played.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum RuleSet {
    /// Full interior contraction: (x, 0, y) becomes (x + y).
    Standard,
    /// Interior zeros freeze in place; only end zeros are dropped.
    Frozen,
    /// Standard contraction, but on three stacks a pair move is legal only
    /// on the side of the larger outer stack (both sides on a tie).
    /// Undefined for positions longer than three stacks.
    HeavyHanded,
}

impl RuleSet {
    pub const ALL: [RuleSet; 3] = [RuleSet::Standard, RuleSet::Frozen, RuleSet::HeavyHanded];

    fn contracts_interior(self) -> bool {
        !matches!(self, RuleSet::Frozen)
    }
}

impl fmt::Display for RuleSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            RuleSet::Standard => "standard",
            RuleSet::Frozen => "frozen",
            RuleSet::HeavyHanded => "heavy",
        })
    }
}

impl FromStr for RuleSet {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Self, ParseError> {
        match s.to_ascii_lowercase().as_str() {
            "standard" => Ok(RuleSet::Standard),
            "frozen" => Ok(RuleSet::Frozen),
            "heavy" | "heavyhanded" | "heavy-handed" => Ok(RuleSet::HeavyHanded),
            _ => Err(ParseError::BadRuleSet(s.to_string())),
        }
    }
}

/// A sequence of stack sizes. The empty sequence is the terminal position.
///
/// Canonical form depends on the rule set: standard and heavy-handed
/// positions contain no zeros at all, frozen positions merely have nonzero
/// ends. `normalize` produces canonical form from any raw sequence.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Position {
    stacks: Stacks,
}

impl Position {
    pub fn empty() -> Self {
        Position { stacks: Stacks::new() }
    }

    /// Canonicalizes a raw stack sequence under the given rules.
    ///
    /// For the standard and heavy-handed games this drops end zeros and
    /// applies the contraction rewrite (x, 0, y) -> (x + y) to exhaustion;
    /// the rewrite is confluent, so a single deterministic pass suffices.
    /// A run of z consecutive interior zeros merges its flanking stacks
    /// exactly when z is odd. Under frozen rules only end zeros are dropped.
    pub fn normalize(raw: &[u64], rules: RuleSet) -> Self {
        let mut first = 0;
        let mut last = raw.len();
        while first < last && raw[first] == 0 {
            first += 1;
        }
        while last > first && raw[last - 1] == 0 {
            last -= 1;
        }
        let trimmed = &raw[first..last];

        let mut stacks = Stacks::new();
        if rules.contracts_interior() {
            let mut pending_zeros: usize = 0;
            for &v in trimmed {
                if v == 0 {
                    pending_zeros += 1;
                    continue;
                }
                if pending_zeros % 2 == 1 {
                    // Odd-length zero run: same-handed neighbours merge.
                    let left = stacks.pop().expect("trimmed sequence starts nonzero");
                    stacks.push(left.checked_add(v).expect("stack size overflow"));
                } else {
                    stacks.push(v);
                }
                pending_zeros = 0;
            }
        } else {
            stacks.extend_from_slice(trimmed);
        }
        Position { stacks }
    }

    pub fn stacks(&self) -> &[u64] {
        &self.stacks
    }

    pub fn len(&self) -> usize {
        self.stacks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.stacks.is_empty()
    }

    /// Total number of tiles on the board.
    pub fn total(&self) -> u64 {
        self.stacks
            .iter()
            .try_fold(0u64, |acc, &v| acc.checked_add(v))
            .expect("tile total overflow")
    }

    pub fn reversed(&self) -> Position {
        let mut stacks = self.stacks.clone();
        stacks.reverse();
        Position { stacks }
    }

    /// The lexicographically smaller of the position and its reversal.
    /// All rule sets are left-right symmetric, so this is a sound memo key.
    pub fn canonical_key(&self) -> Position {
        let rev = self.reversed();
        if rev.stacks < self.stacks {
            rev
        } else {
            self.clone()
        }
    }

    pub fn is_canonical(&self, rules: RuleSet) -> bool {
        if self.stacks.is_empty() {
            return true;
        }
        if rules.contracts_interior() {
            self.stacks.iter().all(|&v| v > 0)
        } else {
            self.stacks[0] > 0 && self.stacks[self.stacks.len() - 1] > 0
        }
    }

}

impl From<&[u64]> for Position {
    /// Wraps an already-canonical slice without normalizing. Prefer
    /// `normalize` for raw input.
    fn from(s: &[u64]) -> Self {
        Position { stacks: Stacks::from_slice(s) }
    }
}

impl fmt::Display for Position {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.stacks.is_empty() {
            return f.write_str("()");
        }
        for (i, v) in self.stacks.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{v}")?;
        }
        Ok(())
    }
}

/// Parses a raw stack sequence: integers separated by commas and/or
/// whitespace. The empty string and `()` denote the empty position.
pub fn parse_stacks(s: &str) -> Result<Vec<u64>, ParseError> {
    let t = s.trim();
    if t.is_empty() || t == "()" {
        return Ok(Vec::new());
    }
    t.split(|c: char| c == ',' || c.is_whitespace())
        .filter(|tok| !tok.is_empty())
        .map(|tok| {
            tok.parse::<u64>()
                .map_err(|_| ParseError::BadStack(tok.to_string()))
        })
        .collect()
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ParseError {
    #[error("not a stack size: {0:?}")]
    BadStack(String),
    #[error("unknown rule set: {0:?} (expected standard, frozen, or heavy)")]
    BadRuleSet(String),
    #[error("not a move: {0:?} (expected `L k`, `R k`, or `P i k`)")]
    BadMove(String),
}

/// A single move. `Pair { index: i, .. }` acts on stacks i and i + 1.
///
/// The derived ordering (left end moves, then right end moves, then pair
/// moves by index, counts ascending within each group) is the enumeration
/// order of `legal_moves` and the tie-break order for the play engine.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Move {
    LeftEnd { count: u64 },
    RightEnd { count: u64 },
    Pair { index: usize, count: u64 },
}

impl fmt::Display for Move {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Move::LeftEnd { count } => write!(f, "L {count}"),
            Move::RightEnd { count } => write!(f, "R {count}"),
            Move::Pair { index, count } => write!(f, "P {index} {count}"),
        }
    }
}

impl FromStr for Move {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Self, ParseError> {
        let toks: Vec<&str> = s.split_whitespace().collect();
        let bad = || ParseError::BadMove(s.to_string());
        let num = |t: &str| t.parse::<u64>().map_err(|_| bad());
        match toks.as_slice() {
            [kind, k] if kind.eq_ignore_ascii_case("l") => Ok(Move::LeftEnd { count: num(k)? }),
            [kind, k] if kind.eq_ignore_ascii_case("r") => Ok(Move::RightEnd { count: num(k)? }),
            [kind, i, k] if kind.eq_ignore_ascii_case("p") => Ok(Move::Pair {
                index: i.parse::<usize>().map_err(|_| bad())?,
                count: num(k)?,
            }),
            _ => Err(bad()),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum GameError {
    #[error("heavy-handed rules are only defined for at most 3 stacks (position has {len})")]
    HeavyHandedUndefined { len: usize },
    #[error("illegal move {mv} in position {pos}")]
    IllegalMove { pos: Position, mv: Move },
}

fn heavy_guard(pos: &Position, rules: RuleSet) -> Result<(), GameError> {
    if rules == RuleSet::HeavyHanded && pos.len() > 3 {
        return Err(GameError::HeavyHandedUndefined { len: pos.len() });
    }
    Ok(())
}

/// Heavy-handed pair legality on exactly three stacks: the pair containing
/// the larger outer stack may be reduced; on a tie both pairs may.
fn heavy_pair_allowed(s: &[u64], index: usize) -> bool {
    if s.len() != 3 {
        return true;
    }
    match index {
        0 => s[0] >= s[2],
        1 => s[2] >= s[0],
        _ => false,
    }
}

/// Enumerates every legal move, end moves first. On a single stack the left
/// and right end moves coincide and are emitted once, as `LeftEnd`.
pub fn legal_moves(pos: &Position, rules: RuleSet) -> Result<Vec<Move>, GameError> {
    heavy_guard(pos, rules)?;
    let s = pos.stacks();
    let mut moves = Vec::new();
    if s.is_empty() {
        return Ok(moves);
    }
    for count in 1..=s[0] {
        moves.push(Move::LeftEnd { count });
    }
    if s.len() > 1 {
        for count in 1..=s[s.len() - 1] {
            moves.push(Move::RightEnd { count });
        }
        for index in 0..s.len() - 1 {
            if rules == RuleSet::HeavyHanded && !heavy_pair_allowed(s, index) {
                continue;
            }
            for count in 1..=s[index].min(s[index + 1]) {
                moves.push(Move::Pair { index, count });
            }
        }
    }
    Ok(moves)
}

/// Applies a move and normalizes the result.
///
/// Validation is semantic rather than by set membership, so on a single
/// stack `RightEnd` is accepted as the same move as `LeftEnd`.
pub fn apply(pos: &Position, mv: Move, rules: RuleSet) -> Result<Position, GameError> {
    heavy_guard(pos, rules)?;
    let s = pos.stacks();
    let illegal = || GameError::IllegalMove { pos: pos.clone(), mv };
    let mut raw: Stacks = Stacks::from_slice(s);
    match mv {
        Move::LeftEnd { count } => {
            if s.is_empty() || count == 0 || count > s[0] {
                return Err(illegal());
            }
            raw[0] -= count;
        }
        Move::RightEnd { count } => {
            let last = s.len().wrapping_sub(1);
            if s.is_empty() || count == 0 || count > s[last] {
                return Err(illegal());
            }
            raw[last] -= count;
        }
        Move::Pair { index, count } => {
            if index + 1 >= s.len() || count == 0 || count > s[index].min(s[index + 1]) {
                return Err(illegal());
            }
            if rules == RuleSet::HeavyHanded && !heavy_pair_allowed(s, index) {
                return Err(illegal());
            }
            raw[index] -= count;
            raw[index + 1] -= count;
        }
    }
    Ok(Position::normalize(&raw, rules))
}

/// The set of positions reachable in one move, deduplicated.
pub fn options(pos: &Position, rules: RuleSet) -> Result<BTreeSet<Position>, GameError> {
    let mut set = BTreeSet::new();
    for mv in legal_moves(pos, rules)? {
        set.insert(apply(pos, mv, rules)?);
    }
    Ok(set)
}

/// Canonical keys of all options, deduplicated; the solver's inner loop.
pub(crate) fn option_keys(pos: &Position, rules: RuleSet) -> Result<Vec<Position>, GameError> {
    let mut keys: Vec<Position> = Vec::new();
    for mv in legal_moves(pos, rules)? {
        keys.push(apply(pos, mv, rules)?.canonical_key());
    }
    keys.sort_unstable();
    keys.dedup();
    Ok(keys)
}
