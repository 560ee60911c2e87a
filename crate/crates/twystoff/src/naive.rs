//! Independent brute-force oracle for the standard game.
//!
//! Everything here is deliberately written from scratch — its own
//! contraction (a rewrite-to-fixpoint loop rather than a single pass), its
//! own move enumeration, and plain recursion with no memo table — so that
//! agreement with [`crate::Solver`] is meaningful evidence rather than the
//! same code answering twice.

/// Contraction by repeated rewriting: drop a boundary zero or merge one
/// (x, 0, y) triple, then start over, until nothing applies.
fn contract(mut v: Vec<u64>) -> Vec<u64> {
    'rewrite: loop {
        if v.first() == Some(&0) {
            v.remove(0);
            continue;
        }
        if v.last() == Some(&0) {
            v.pop();
            continue;
        }
        for i in 1..v.len().saturating_sub(1) {
            if v[i] == 0 {
                let merged = v[i - 1] + v[i + 1];
                v.splice(i - 1..=i + 1, [merged]);
                continue 'rewrite;
            }
        }
        return v;
    }
}

/// All positions reachable in one move, already contracted.
fn children(v: &[u64]) -> Vec<Vec<u64>> {
    let mut out = Vec::new();
    if v.is_empty() {
        return out;
    }
    let last = v.len() - 1;
    for k in 1..=v[0] {
        let mut w = v.to_vec();
        w[0] -= k;
        out.push(contract(w));
    }
    if last > 0 {
        for k in 1..=v[last] {
            let mut w = v.to_vec();
            w[last] -= k;
            out.push(contract(w));
        }
    }
    for i in 0..last {
        for k in 1..=v[i].min(v[i + 1]) {
            let mut w = v.to_vec();
            w[i] -= k;
            w[i + 1] -= k;
            out.push(contract(w));
        }
    }
    out
}

fn is_p(v: &[u64]) -> bool {
    children(v).iter().all(|c| !is_p(c))
}

/// True if the position is a previous-player win under standard rules.
/// Exponential time; intended for cross-checks on small positions only.
pub fn naive_is_p(raw: &[u64]) -> bool {
    is_p(&contract(raw.to_vec()))
}

/// Grundy value by direct mex recursion, standard rules. Exponential.
pub fn naive_grundy(raw: &[u64]) -> u64 {
    fn grundy(v: &[u64]) -> u64 {
        let gs: Vec<u64> = children(v).iter().map(|c| grundy(c)).collect();
        let mut g = 0;
        while gs.contains(&g) {
            g += 1;
        }
        g
    }
    grundy(&contract(raw.to_vec()))
}
