//! Exact integer arithmetic for the golden-ratio Beatty sequences.
//!
//! Everything here is computed with integer square roots over u128, never
//! floating point, so the results are exact for all u64 inputs that do not
//! overflow the intermediate 5n^2 term. The two Beatty sequences
//! floor(n*phi) and floor(n*phi^2) partition the positive integers; the
//! cold positions of two-stack Twyst-off (Wythoff's game) are exactly the
//! pairs (floor(n*phi), floor(n*phi^2)).

/// Errors from the exact Beatty computations.
#[derive(Debug, Clone, Copy, PartialEq, Eq, thiserror::Error)]
pub enum BeattyError {
    #[error("intermediate value overflows: floor({n} * phi) does not fit in u64")]
    Overflow { n: u64 },
}

/// floor(sqrt(n)) for u128, by Newton's method from above.
///
/// Starting at a power of two >= sqrt(n) makes the iteration monotonically
/// decreasing, so the first non-decreasing step is the answer.
pub(crate) fn isqrt_u128(n: u128) -> u128 {
    if n < 2 {
        return n;
    }
    let bits = 128 - n.leading_zeros();
    let mut x: u128 = 1 << bits.div_ceil(2);
    loop {
        let y = (x + n / x) / 2;
        if y >= x {
            break;
        }
        x = y;
    }
    debug_assert!(x * x <= n && (x + 1).checked_mul(x + 1).map_or(true, |sq| sq > n));
    x
}

/// floor(n * phi), where phi = (1 + sqrt 5) / 2.
///
/// n*phi = (n + sqrt(5 n^2)) / 2, and sqrt(5 n^2) is irrational for n > 0,
/// so flooring the square root before the division is exact.
pub fn floor_phi(n: u64) -> Result<u64, BeattyError> {
    let n2 = (n as u128) * (n as u128);
    let five_n2 = n2.checked_mul(5).ok_or(BeattyError::Overflow { n })?;
    let r = (n as u128 + isqrt_u128(five_n2)) / 2;
    u64::try_from(r).map_err(|_| BeattyError::Overflow { n })
}

/// ceil(a * phi). For a > 0 the product is irrational, so this is
/// floor(a*phi) + 1; ceil_phi(0) = 0.
pub fn ceil_phi(a: u64) -> Result<u64, BeattyError> {
    if a == 0 {
        return Ok(0);
    }
    floor_phi(a)?.checked_add(1).ok_or(BeattyError::Overflow { n: a })
}

/// ceil(a * phi^2); phi^2 = phi + 1, so this is ceil(a*phi) + a for a > 0.
pub fn ceil_phi2(a: u64) -> Result<u64, BeattyError> {
    ceil_phi(a)?.checked_add(a).ok_or(BeattyError::Overflow { n: a })
}

/// floor(b / phi). 1/phi = phi - 1, so this is floor(b*phi) - b.
pub fn floor_over_phi(b: u64) -> Result<u64, BeattyError> {
    Ok(floor_phi(b)? - b)
}

/// Is {lo, hi} (unordered) a cold pair of Wythoff's game, i.e. equal to
/// (floor(n*phi), floor(n*phi^2)) for some n >= 0?
///
/// The pair for n has difference exactly n and lower entry floor(n*phi).
pub fn is_wythoff_p(x: u64, y: u64) -> Result<bool, BeattyError> {
    let (lo, hi) = if x <= y { (x, y) } else { (y, x) };
    let n = hi - lo;
    Ok(lo == floor_phi(n)?)
}

/// The cold pair with index n: (floor(n*phi), floor(n*phi) + n).
pub fn wythoff_pair(n: u64) -> Result<(u64, u64), BeattyError> {
    let a = floor_phi(n)?;
    let b = a.checked_add(n).ok_or(BeattyError::Overflow { n })?;
    Ok((a, b))
}

/// The partner of x in the Wythoff cold-pair matching, with 0 paired to 0.
///
/// Every positive integer appears in exactly one cold pair: x = floor(n*phi)
/// pairs upward with floor(n*phi^2) = x + n, and x = floor(n*phi^2) pairs
/// downward with floor(n*phi) = n + floor(n/phi)... both cases are decided
/// by m = floor(x/phi): x is in the upper sequence iff floor((x-m)*phi) = m,
/// and then its partner is m; otherwise its partner is x + m + 1.
///
/// This function is an involution on u64 (OEIS A002251 when 0-indexed).
pub fn wythoff_involution(x: u64) -> Result<u64, BeattyError> {
    if x == 0 {
        return Ok(0);
    }
    let m = floor_over_phi(x)?;
    if floor_phi(x - m)? == m {
        // x = floor(n*phi^2) with n = x - m... the partner sits below.
        Ok(m)
    } else {
        // x = floor(n*phi) with n = m + 1; partner = x + n.
        x.checked_add(m + 1).ok_or(BeattyError::Overflow { n: x })
    }
}
