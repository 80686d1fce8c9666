use std::collections::HashMap;

use matroid_core::{Matroid, OptTracker, ValueOrder};

use crate::LayeredError;

/// (OPT(Z), Z⁺) where Z⁺ = {r ∈ others : r ∈ OPT(Z + r)}, both best first.
pub fn sample_optimum_and_improvers(
    m: &dyn Matroid,
    order: &ValueOrder,
    sample: &[usize],
    others: &[usize],
) -> (Vec<usize>, Vec<usize>) {
    let base = OptTracker::from_set(m, order, sample);
    let improvers = others
        .iter()
        .copied()
        .filter(|&r| base.clone().insert(m, order, r))
        .collect::<Vec<_>>();
    (base.members().to_vec(), order.sorted(&improvers))
}

/// Walks r¹, r², … and hands the coin `coins[i]` to r^{i+1} when it improves
/// V: coin 0 puts it in V, coin 1 in W. Returns (V, W) best first.
///
/// Every improving element with coin 1 lands in W, so all coins 1 gives
/// W = every non-loop.
pub fn coupling_procedure(m: &dyn Matroid, order: &ValueOrder, coins: &[bool]) -> Result<(Vec<usize>, Vec<usize>), LayeredError> {
    if coins.len() != order.len() {
        return Err(LayeredError::Malformed(format!("{} coins for {} elements", coins.len(), order.len())));
    }
    let mut v = OptTracker::new();
    let mut w = Vec::new();
    for (i, &coin) in coins.iter().enumerate() {
        let r = order.element_at(i);
        let mut probe = v.clone();
        if !probe.insert(m, order, r) {
            continue;
        }
        if coin {
            w.push(r);
        } else {
            v = probe;
        }
    }
    Ok((v.members().to_vec(), w))
}

/// Largest ground set [`coupling_fidelity`] will enumerate.
pub const COUPLING_LIMIT: usize = 8;

/// Exact comparison of the law of (V, W) under fair coins with the law of
/// (OPT(R_s), R_s⁺) under a uniform arrival order and s ∼ Bin(n, ½).
///
/// Both sides are counted with integer weights scaled by 2^n·n!, so the
/// answer involves no rounding. Returns the number of distinct pairs seen on
/// the coin side, or `None` when the histograms differ.
pub fn coupling_fidelity(m: &dyn Matroid, order: &ValueOrder) -> Result<Option<usize>, LayeredError> {
    let n = order.len();
    if n > COUPLING_LIMIT {
        return Err(LayeredError::Malformed(format!("{n} elements exceed the enumeration limit {COUPLING_LIMIT}")));
    }
    if m.ground_size() != n {
        return Err(LayeredError::Malformed(format!("order has {n} elements, matroid {}", m.ground_size())));
    }
    let factorial: u64 = (1..=n as u64).product();
    let mut coupled: HashMap<(Vec<usize>, Vec<usize>), u64> = HashMap::new();
    for mask in 0u32..1 << n {
        let coins: Vec<bool> = (0..n).map(|i| mask >> i & 1 == 1).collect();
        *coupled.entry(coupling_procedure(m, order, &coins)?).or_default() += factorial;
    }
    let mut sampled: HashMap<(Vec<usize>, Vec<usize>), u64> = HashMap::new();
    let mut arrivals: Vec<usize> = (0..n).collect();
    loop {
        let mut choose = 1u64;
        for s in 0..=n {
            let pair = sample_optimum_and_improvers(m, order, &arrivals[..s], &arrivals[s..]);
            *sampled.entry(pair).or_default() += choose;
            choose = choose * (n - s) as u64 / (s as u64 + 1);
        }
        if !next_permutation(&mut arrivals) {
            break;
        }
    }
    Ok((coupled == sampled).then_some(coupled.len()))
}

fn next_permutation(p: &mut [usize]) -> bool {
    let Some(i) = p.windows(2).rposition(|w| w[0] < w[1]) else {
        return false;
    };
    let j = p.iter().rposition(|&x| x > p[i]).expect("a larger element follows position i");
    p.swap(i, j);
    p[i + 1..].reverse();
    true
}
