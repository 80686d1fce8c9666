//! Neighbourhood sets on the terminal line. Positions run over `1..=n` with
//! sentinels 0 and n+1; `x` always holds sorted positions.

use matroid_zoo::{pre_nex, LaminarInstance};

use crate::EngineError;

/// Positions in `set` sorted and deduplicated.
fn normalise(mut set: Vec<usize>) -> Vec<usize> {
    set.sort_unstable();
    set.dedup();
    set
}

/// 𝓕_4(X, y): the two closest members of X on each side of y.
pub fn forbidden_four(x: &[usize], n: usize, y: usize) -> Vec<usize> {
    let (b, c) = pre_nex(x, n, y);
    let a = pre_nex(x, n, b).0;
    let d = pre_nex(x, n, c).1;
    normalise(vec![a, b, c, d])
}

/// I_4(X, y) as its endpoints.
pub fn interval_four(x: &[usize], n: usize, y: usize) -> (usize, usize) {
    let f = forbidden_four(x, n, y);
    (f[0], f[f.len() - 1])
}

/// 𝓕_3(X, y): π_X(y) and its two neighbours in X. Needs X nonempty.
pub fn forbidden_three(lam: &LaminarInstance, x: &[usize], y: usize) -> Result<Vec<usize>, EngineError> {
    let n = lam.terminal_count();
    let rep = lam.representative(x, y)?;
    let (a, c) = pre_nex(x, n, rep);
    Ok(normalise(vec![a, rep, c]))
}

/// I_3(X, y) as its endpoints.
pub fn interval_three(lam: &LaminarInstance, x: &[usize], y: usize) -> Result<(usize, usize), EngineError> {
    let f = forbidden_three(lam, x, y)?;
    Ok((f[0], f[f.len() - 1]))
}
