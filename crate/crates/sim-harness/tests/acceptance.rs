//! One PASS/FAIL line per acceptance criterion; exits nonzero if any fails.

use std::f64::consts::E;
use std::time::Instant;

use layered_msp::{coupling_fidelity, feldman_bound, FeldmanLayered, LayeredFixture};
use matroid_zoo::Instance;
use rand::seq::index;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use secretary_engines::{key_lemma_values, SampleRule};
use sim_harness::*;

struct Verdict {
    pass: bool,
    detail: String,
}

fn make(spec: &GeneratorSpec, seed: u64) -> Instance {
    generate_instance(spec, &mut ChaCha8Rng::seed_from_u64(seed)).expect("generator parameters are valid")
}

fn run(inst: &Instance, engine: EngineSpec, trials: u64, seed: u64) -> CompetitivenessReport {
    run_weighted(inst, engine, trials, seed, WeightPreset::Linear)
}

fn run_weighted(inst: &Instance, engine: EngineSpec, trials: u64, seed: u64, w: WeightPreset) -> CompetitivenessReport {
    estimate_measures(&TrialPlan::new("acceptance", inst, engine, trials, seed).with_weights(w))
        .expect("plan runs")
}

fn relative_gap(a: f64, b: f64) -> f64 {
    ((a - b) / b).abs()
}

fn key_lemma() -> Verdict {
    let cases = [
        (1, 1.0 / E, E),
        (2, 0.5, 4.0),
        (3, 3f64.powf(-0.5), 3.0 * 3f64.sqrt()),
        (4, 4f64.powf(-1.0 / 3.0), 4f64.powf(4.0 / 3.0)),
    ];
    let mut worst: f64 = 0.0;
    for (k, p, alpha) in cases {
        let v = key_lemma_values(k).expect("k ≥ 1");
        worst = worst.max(relative_gap(v.p, p)).max(relative_gap(v.alpha, alpha));
    }
    Verdict { pass: worst < 5e-13, detail: format!("largest relative error {worst:.1e}") }
}

/// min over OPT of the selection frequency, over several instances.
fn min_frequency(specs: &[GeneratorSpec], engine: EngineSpec, trials: u64, floor: f64) -> Verdict {
    let mut worst = f64::INFINITY;
    let mut parts = Vec::new();
    for (i, spec) in specs.iter().enumerate() {
        let inst = make(spec, 100 + i as u64);
        let r = run(&inst, engine, trials, 7 + i as u64);
        let f = r.min_opt_frequency();
        worst = worst.min(f);
        parts.push(format!("{} n={} rank={} min {f:.4}", spec.label(), r.n, r.rank));
    }
    Verdict { pass: worst >= floor, detail: format!("min {worst:.4} vs floor {floor:.4} [{}]", parts.join("; ")) }
}

fn transversal() -> Verdict {
    let spec = GeneratorSpec::Transversal { n: 30, left: 40, edge_prob: 0.3 };
    let floor = 1.0 / E - 3.0 * (0.25f64 / 5e4).sqrt();
    min_frequency(&[spec.clone(), spec.clone(), spec], EngineSpec::ForbiddenSet { p: Some(1.0 / E) }, 50_000, floor)
}

fn graphic() -> Verdict {
    let spec = GeneratorSpec::Graphic { vertices: 12, edges: 40, connected: true };
    min_frequency(&[spec.clone(), spec.clone(), spec], EngineSpec::ForbiddenSet { p: Some(0.5) }, 50_000, 0.25 - 0.007)
}

fn laminar_and_semiplanar() -> Verdict {
    let lam = GeneratorSpec::Laminar { n: 60 };
    let a = min_frequency(
        &[lam.clone(), lam.clone(), lam],
        EngineSpec::ForbiddenSet { p: Some(3f64.powf(-0.5)) },
        50_000,
        1.0 / (3.0 * 3f64.sqrt()) - 0.007,
    );
    let semi = GeneratorSpec::Semiplanar { n: 60 };
    let b = min_frequency(
        &[semi.clone(), semi.clone(), semi],
        EngineSpec::ForbiddenSet { p: Some(4f64.powf(-1.0 / 3.0)) },
        50_000,
        4f64.powf(-4.0 / 3.0) - 0.007,
    );
    Verdict { pass: a.pass && b.pass, detail: format!("laminar: {} | semiplanar: {}", a.detail, b.detail) }
}

fn framed() -> Verdict {
    let spec = GeneratorSpec::Sparse { rows: 20, cols: 40, k: 3, field_p: 2 };
    min_frequency(
        &[spec.clone(), spec.clone(), spec],
        EngineSpec::ForbiddenSet { p: Some(3f64.powf(-0.5)) },
        50_000,
        1.0 / (3.0 * 3f64.sqrt()) - 0.007,
    )
}

fn improving_greedy() -> Verdict {
    let floor = 1.0 - std::f64::consts::LN_2 - 0.01;
    let mut worst = f64::INFINITY;
    let mut parts = Vec::new();
    let specs = [
        GeneratorSpec::Graphic { vertices: 16, edges: 60, connected: true },
        GeneratorSpec::Graphic { vertices: 30, edges: 60, connected: true },
        GeneratorSpec::Laminar { n: 60 },
        GeneratorSpec::Laminar { n: 60 },
    ];
    for (i, spec) in specs.iter().enumerate() {
        let inst = make(spec, 200 + i as u64);
        let r = run(&inst, EngineSpec::ImprovingGreedy { sample: SampleRule::Half }, 50_000, 3);
        let share = r.expected_intersection / r.rank as f64;
        worst = worst.min(share);
        parts.push(format!("{} rank={} {share:.4}", spec.label(), r.rank));
    }
    Verdict { pass: worst >= floor, detail: format!("min E|ALG∩OPT|/|OPT| {worst:.4} vs {floor:.4} [{}]", parts.join("; ")) }
}

fn forbidden_suite() -> Verdict {
    let suite = verify_suite(VerifyLevel::Full).expect("fixtures build");
    let forbidden: Vec<&CheckResult> = suite.checks.iter().filter(|c| c.suite == "forbidden_sets").collect();
    let failures: Vec<String> = suite.failures().map(|c| format!("{} {}: {}", c.suite, c.subject, c.detail)).collect();
    Verdict {
        pass: failures.is_empty(),
        detail: if failures.is_empty() {
            format!("{} fixtures over n ≤ 7, no counterexample", forbidden.len())
        } else {
            failures.join("; ")
        },
    }
}

fn tpa() -> Verdict {
    let rho = 10;
    let inst = make(&GeneratorSpec::TpaLaminar { rho }, 0);
    let half = inst.n() / 2;
    let adversarial = run_weighted(&inst, EngineSpec::Tpa { weights: WeightPreset::TwoTier { split: half } }, 10_000, 5, WeightPreset::TwoTier { split: half });
    let hits = adversarial.expected_intersection;
    let plain = run(&inst, EngineSpec::Tpa { weights: WeightPreset::Linear }, 10_000, 6);
    let utility = plain.estimate(Measure::Utility);
    // sanity constant for the c·log ρ check
    let cap = 2.0 * (rho as f64).log2();
    Verdict {
        pass: hits <= 3.1 && utility <= cap,
        detail: format!("n={} E|ALG∩OPT| {hits:.4} ≤ 3.1; utility ratio {utility:.3} ≤ 2·log₂ρ = {cap:.3}", inst.n()),
    }
}

fn incomparability() -> Verdict {
    let block = make(&GeneratorSpec::BlockPartition { m: 4, big_m: 16 }, 0);
    let b = run(&block, EngineSpec::Greedy, 20_000, 9);
    let head = make(&GeneratorSpec::HeadPartition { m: 4 }, 0);
    let h = run(&head, EngineSpec::Greedy, 20_000, 10);
    let (bo, bi) = (b.estimate(Measure::Ordinal), b.estimate(Measure::Intersection));
    let (hi, ho) = (h.estimate(Measure::Intersection), h.estimate(Measure::Ordinal));
    Verdict {
        pass: bo <= 1.25 + 0.03 && bi >= 2.0 - 0.1 && hi <= 1.25 + 0.03 && ho >= 4.0 - 0.2,
        detail: format!("M_4,16 ordinal {bo:.4} intersection {bi:.4}; N_4 intersection {hi:.4} ordinal {ho:.4}"),
    }
}

fn uniform() -> Verdict {
    let rho = 128;
    let inst = make(&GeneratorSpec::Uniform { n: 1 << 14, rank: rho }, 0);
    let r = run(&inst, EngineSpec::Kleinberg, 20_000, 11);
    let last = r.frequencies[inst.order.element_at(rho - 1)];
    let a = last <= 0.85;

    let mut mins = Vec::new();
    let mut budget_ok = true;
    for rho in [16, 64, 256] {
        let inst = make(&GeneratorSpec::Uniform { n: 4096, rank: rho }, rho as u64);
        let r = run(&inst, EngineSpec::UniformVariant, 10_000, 12);
        budget_ok &= r.max_selected <= rho;
        mins.push((rho, r.min_opt_frequency(), r.max_selected));
    }
    let monotone = mins.windows(2).all(|w| w[0].1 <= w[1].1);
    let listed: Vec<String> = mins.iter().map(|(r, f, m)| format!("ρ={r}: min {f:.4}, max |ALG| {m}")).collect();
    Verdict {
        pass: a && monotone && budget_ok,
        detail: format!(
            "(a) Pr(r^128 ∈ ALG) = {last:.4} ≤ 0.85 at n=16384; (b) {} non-decreasing={monotone} budgets={budget_ok}",
            listed.join(", ")
        ),
    }
}

fn layered() -> Verdict {
    let mut coupling_ok = true;
    let mut coupled = 0;
    for spec in fixture_generators(6) {
        for seed in FIXTURE_SEEDS {
            let inst = make(&spec, seed);
            coupling_ok &= coupling_fidelity(&inst.family, &inst.order).expect("n ≤ 6").is_some();
            coupled += 1;
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let mut failures = Vec::new();
    let mut checked = 0;
    for spec in [
        GeneratorSpec::Uniform { n: 12, rank: 4 },
        GeneratorSpec::Graphic { vertices: 6, edges: 12, connected: true },
        GeneratorSpec::Laminar { n: 12 },
    ] {
        let inst = make(&spec, 31);
        for c in 1..=3 {
            let mut cuts = index::sample(&mut rng, 11, c).into_iter().map(|x| x + 1).collect::<Vec<_>>();
            cuts.sort_unstable();
            let fixture = LayeredFixture::new(&inst.family, &inst.order, (0..12).collect(), cuts.clone())
                .expect("cuts are increasing positions");
            let alpha = feldman_bound(c);
            for layer in fixture.estimate(&FeldmanLayered, 50_000, 40 + c as u64).expect("selections are valid") {
                checked += 1;
                if !layer.meets(alpha, 3.0) {
                    failures.push(format!(
                        "{} cuts {cuts:?} C_{}: E {:.4} ± {:.4} < {}/{alpha}",
                        spec.label(),
                        layer.layer,
                        layer.mean,
                        layer.ci95,
                        layer.opt
                    ));
                }
            }
        }
    }
    Verdict {
        pass: coupling_ok && failures.is_empty(),
        detail: format!(
            "coupling exact on {coupled} fixtures: {coupling_ok}; per-layer {}/{checked} layers hold{}",
            checked - failures.len(),
            if failures.is_empty() { String::new() } else { format!(" [{}]", failures.join("; ")) }
        ),
    }
}

/// |mc − exact| ≤ 3·CI. With fewer than 30 successes or failures the normal
/// interval is not reported, and the interval at the exact value stands in.
fn agrees(mc: f64, ci: f64, truth: f64, trials: u64, bernoulli: bool) -> bool {
    let t = trials as f64;
    let hits = mc * t;
    let ci = if bernoulli && (hits < SUCCESS_FLOOR || t - hits < SUCCESS_FLOOR) {
        Z95 * (truth * (1.0 - truth) / t).sqrt()
    } else {
        ci
    };
    (mc - truth).abs() <= 3.0 * ci + 1e-12
}

fn estimator_validation() -> Verdict {
    let trials = 20_000;
    let mut pairs: Vec<(Instance, EngineSpec)> = Vec::new();
    let general = [
        EngineSpec::ForbiddenSet { p: None },
        EngineSpec::ImprovingGreedy { sample: SampleRule::Half },
        EngineSpec::Greedy,
        EngineSpec::OfflineGreedy,
        EngineSpec::Tpa { weights: WeightPreset::Linear },
        EngineSpec::OrdinalReduction,
        EngineSpec::ProbabilityReduction,
    ];
    for spec in fixture_generators(6) {
        for seed in FIXTURE_SEEDS {
            for engine in general {
                pairs.push((make(&spec, seed), engine));
            }
        }
    }
    pairs.push((make(&GeneratorSpec::Uniform { n: 4, rank: 2 }, 1), EngineSpec::Kleinberg));
    pairs.push((make(&GeneratorSpec::Uniform { n: 6, rank: 3 }, 1), EngineSpec::UniformVariant));
    pairs.push((make(&GeneratorSpec::HeadPartition { m: 3 }, 1), EngineSpec::Greedy));
    let mut comparisons = 0;
    let mut failures = Vec::new();
    for (i, (inst, engine)) in pairs.iter().enumerate() {
        let truth = exhaustive_run("v", inst, engine, WeightPreset::Linear).expect("n ≤ 6");
        let mc = run(inst, *engine, trials, 1000 + i as u64);
        let label = format!("{} {} n={}", inst.family.name(), engine.name(), inst.n());
        let mut check = |what: String, ok: bool| {
            comparisons += 1;
            if !ok {
                failures.push(format!("{label} {what}"));
            }
        };
        for e in 0..inst.n() {
            let ok = agrees(mc.frequencies[e], mc.frequency_ci[e], truth.frequencies[e], trials, true);
            check(format!("Pr(e{e}) {} vs {}", mc.frequencies[e], truth.frequencies[e]), ok);
        }
        for (a, b) in mc.ordinal_curve.iter().zip(&truth.ordinal_curve) {
            check(format!("E|ALG∩R^{}|", a.k), agrees(a.expected, a.ci95, b.expected, trials, false));
        }
        check("E w(ALG)".into(), agrees(mc.expected_weight, mc.expected_weight_ci, truth.expected_weight, trials, false));
        check(
            "E|ALG∩OPT|".into(),
            agrees(mc.expected_intersection, mc.expected_intersection_ci, truth.expected_intersection, trials, false),
        );
        for m in Measure::ALL {
            let (a, b) = (mc.measure(m), truth.measure(m));
            if b.estimate.is_finite() && !a.insufficient {
                check(format!("{} ratio {} vs {}", m.name(), a.estimate, b.estimate), agrees(a.estimate, a.ci95, b.estimate, trials, false));
            }
        }
    }
    Verdict {
        pass: failures.is_empty(),
        detail: format!(
            "{} engine/fixture pairs, {}/{comparisons} comparisons within 3·CI{}",
            pairs.len(),
            comparisons - failures.len(),
            if failures.is_empty() { String::new() } else { format!(" [{}]", failures.join("; ")) }
        ),
    }
}

fn main() {
    let criteria: [(&str, fn() -> Verdict); 12] = [
        ("key-lemma values", key_lemma),
        ("transversal probability", transversal),
        ("graphic probability", graphic),
        ("laminar and semiplanar probability", laminar_and_semiplanar),
        ("framed probability", framed),
        ("improving greedy intersection", improving_greedy),
        ("forbidden-set verifier", forbidden_suite),
        ("threshold price on its bad instance", tpa),
        ("incomparability instances", incomparability),
        ("uniform matroids", uniform),
        ("layered machinery", layered),
        ("estimators against enumeration", estimator_validation),
    ];
    let only: Option<usize> = std::env::var("ACCEPTANCE_ONLY").ok().and_then(|v| v.parse().ok());
    let mut failed = Vec::new();
    for (i, (name, check)) in criteria.iter().enumerate() {
        let id = i + 1;
        if only.is_some_and(|o| o != id) {
            continue;
        }
        let start = Instant::now();
        let v = check();
        let verdict = if v.pass { "PASS" } else { "FAIL" };
        println!("criterion {id:>2} {verdict} {name} ({:.1}s): {}", start.elapsed().as_secs_f64(), v.detail);
        if !v.pass {
            failed.push(id);
        }
    }
    if !failed.is_empty() {
        println!("failed criteria: {failed:?}");
        std::process::exit(1);
    }
}
