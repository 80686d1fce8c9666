use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::{Binomial, Distribution};

/// Source of every random choice an engine makes.
///
/// Engines only draw through these four calls, so the same code runs under a
/// seeded generator and under [`enumerate_outcomes`], which walks every
/// sequence of discrete choices with its exact probability.
pub trait Randomness {
    /// Index `i` with probability `weights[i] / sum(weights)`.
    fn weighted(&mut self, weights: &[f64]) -> usize;

    /// Uniform on `0..n`; `n` must be positive.
    fn below(&mut self, n: usize) -> usize;

    fn binomial(&mut self, n: usize, p: f64) -> usize;

    /// Uniform on `[0, 1)`. Only continuous sources support it.
    fn unit(&mut self) -> f64;

    fn continuous(&self) -> bool;
}

/// SplitMix64 finaliser, used to derive per-trial seeds.
pub fn mix64(mut z: u64) -> u64 {
    z = z.wrapping_add(0x9e37_79b9_7f4a_7c15);
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    z ^ (z >> 31)
}

/// Seed of trial `index` under `master`; independent of how trials are
/// scheduled across workers.
pub fn trial_seed(master: u64, index: u64) -> u64 {
    mix64(master ^ mix64(index.wrapping_add(0x5851_f42d_4c95_7f2d)))
}

/// Seeded Monte Carlo source.
#[derive(Debug, Clone)]
pub struct ChaChaSource {
    rng: ChaCha8Rng,
}

impl ChaChaSource {
    pub fn new(seed: u64) -> Self {
        ChaChaSource { rng: ChaCha8Rng::seed_from_u64(seed) }
    }

    pub fn for_trial(master: u64, index: u64) -> Self {
        Self::new(trial_seed(master, index))
    }
}

impl Randomness for ChaChaSource {
    fn weighted(&mut self, weights: &[f64]) -> usize {
        let total: f64 = weights.iter().sum();
        let mut x = self.rng.random::<f64>() * total;
        for (i, &w) in weights.iter().enumerate() {
            if x < w {
                return i;
            }
            x -= w;
        }
        weights.iter().rposition(|&w| w > 0.0).unwrap_or(0)
    }

    fn below(&mut self, n: usize) -> usize {
        self.rng.random_range(0..n)
    }

    fn binomial(&mut self, n: usize, p: f64) -> usize {
        if n == 0 || p <= 0.0 {
            return 0;
        }
        if p >= 1.0 {
            return n;
        }
        Binomial::new(n as u64, p).expect("p lies strictly inside (0, 1)").sample(&mut self.rng) as usize
    }

    fn unit(&mut self) -> f64 {
        self.rng.random::<f64>()
    }

    fn continuous(&self) -> bool {
        true
    }
}

/// Probability mass function of Bin(n, p) as a vector over `0..=n`.
pub fn binomial_pmf(n: usize, p: f64) -> Vec<f64> {
    let mut pmf = vec![0.0; n + 1];
    if p <= 0.0 {
        pmf[0] = 1.0;
        return pmf;
    }
    if p >= 1.0 {
        pmf[n] = 1.0;
        return pmf;
    }
    // log-space keeps large n from underflowing term by term
    let (lp, lq) = (p.ln(), (1.0 - p).ln());
    let mut log_choose = 0.0;
    for (k, slot) in pmf.iter_mut().enumerate() {
        if k > 0 {
            log_choose += ((n - k + 1) as f64).ln() - (k as f64).ln();
        }
        *slot = (log_choose + k as f64 * lp + (n - k) as f64 * lq).exp();
    }
    pmf
}

#[derive(Debug, Clone)]
struct Choice {
    taken: usize,
    probs: Vec<f64>,
}

/// Replays one branch of the choice tree; see [`enumerate_outcomes`].
#[derive(Debug, Default)]
pub struct ScriptedSource {
    script: Vec<Choice>,
    cursor: usize,
    weight: f64,
}

impl ScriptedSource {
    fn choose(&mut self, probs: Vec<f64>) -> usize {
        let width = probs.len();
        if self.cursor == self.script.len() {
            let first = probs.iter().position(|&w| w > 0.0).expect("a choice needs a positive option");
            self.script.push(Choice { taken: first, probs });
        }
        let c = &self.script[self.cursor];
        debug_assert_eq!(c.probs.len(), width, "replay diverged from its script");
        self.weight *= c.probs[c.taken];
        self.cursor += 1;
        c.taken
    }

    /// Moves to the next branch; false once every branch has been visited.
    fn advance(&mut self) -> bool {
        self.script.truncate(self.cursor);
        while let Some(last) = self.script.last_mut() {
            if let Some(next) = (last.taken + 1..last.probs.len()).find(|&i| last.probs[i] > 0.0) {
                last.taken = next;
                return true;
            }
            self.script.pop();
        }
        false
    }
}

impl Randomness for ScriptedSource {
    fn weighted(&mut self, weights: &[f64]) -> usize {
        let total: f64 = weights.iter().sum();
        self.choose(weights.iter().map(|w| w / total).collect())
    }

    fn below(&mut self, n: usize) -> usize {
        self.choose(vec![1.0 / n as f64; n])
    }

    fn binomial(&mut self, n: usize, p: f64) -> usize {
        self.choose(binomial_pmf(n, p))
    }

    fn unit(&mut self) -> f64 {
        panic!("exhaustive enumeration has no continuous draws")
    }

    fn continuous(&self) -> bool {
        false
    }
}

/// Runs `body` once per branch of its discrete choice tree and hands every
/// result to `visit` with the branch probability. Probabilities sum to 1 as
/// long as `body` draws only through discrete calls.
pub fn enumerate_outcomes<T>(mut body: impl FnMut(&mut dyn Randomness) -> T, mut visit: impl FnMut(f64, T)) {
    let mut src = ScriptedSource::default();
    loop {
        src.cursor = 0;
        src.weight = 1.0;
        let out = body(&mut src);
        visit(src.weight, out);
        if !src.advance() {
            break;
        }
    }
}
