use std::fmt::Write;

use secretary_engines::key_lemma_values;

/// A probability-competitive guarantee kept as an expression and evaluated
/// when printed.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum BoundExpr {
    /// α(k) = k^{k/(k−1)}, with α(1) = e.
    Alpha(usize),
    /// α(k) for a size supplied per instance (μ or k).
    Parametric(&'static str),
    /// 1 + O(√(log ρ / ρ)); no constant.
    Asymptotic,
}

impl BoundExpr {
    pub fn value(self) -> Option<f64> {
        match self {
            BoundExpr::Alpha(k) => key_lemma_values(k).ok().map(|v| v.alpha),
            _ => None,
        }
    }

    pub fn expression(self) -> String {
        match self {
            BoundExpr::Alpha(1) => "e".into(),
            BoundExpr::Alpha(2) => "4".into(),
            BoundExpr::Alpha(3) => "3√3".into(),
            BoundExpr::Alpha(k) => format!("{k}^{{{k}/{}}}", k - 1),
            BoundExpr::Parametric(s) => format!("{s}^{{{s}/({s}−1)}}"),
            BoundExpr::Asymptotic => "1+O(√(log ρ/ρ))".into(),
        }
    }

    /// `e ≈ 2.71828`; integers and value-free expressions print bare.
    pub fn describe(self) -> String {
        match self.value() {
            Some(v) if v.fract() != 0.0 => format!("{} ≈ {v:.5}", self.expression()),
            _ => self.expression(),
        }
    }
}

pub struct TableRow {
    pub class: &'static str,
    pub guarantee: BoundExpr,
    pub forbidden: &'static str,
}

pub fn table_rows() -> Vec<TableRow> {
    let row = |class, guarantee, forbidden| TableRow { class, guarantee, forbidden };
    vec![
        row("transversal", BoundExpr::Alpha(1), "1"),
        row("μ-exchangeable gammoids", BoundExpr::Parametric("μ"), "μ"),
        row("matching matroids", BoundExpr::Alpha(2), "2"),
        row("μ-exchangeable matroidal packings", BoundExpr::Parametric("μ"), "μ"),
        row("graphic", BoundExpr::Alpha(2), "2"),
        row("hypergraphic", BoundExpr::Alpha(2), "2"),
        row("k-sparse", BoundExpr::Parametric("k"), "k"),
        row("k-framed", BoundExpr::Parametric("k"), "k"),
        row("semiplanar gammoids", BoundExpr::Alpha(4), "4"),
        row("laminar", BoundExpr::Alpha(3), "3"),
        row("uniform U(n, ρ)", BoundExpr::Asymptotic, "-"),
    ]
}

/// The guarantee table followed by α(k) and its sampling probability for
/// small k.
pub fn render_table() -> String {
    let mut out = String::new();
    let _ = writeln!(out, "{:<36} {:<22} {}", "class", "p-guarantee", "forbidden size");
    for r in table_rows() {
        let _ = writeln!(out, "{:<36} {:<22} {}", r.class, r.guarantee.describe(), r.forbidden);
    }
    let _ = writeln!(out);
    let _ = writeln!(out, "{:<3} {:<12} {:<10} {}", "k", "α(k)", "value", "p(k)");
    for k in 1..=6 {
        let v = key_lemma_values(k).expect("k ≥ 1");
        let _ = writeln!(out, "{k:<3} {:<12} {:<10.5} {:.5}", BoundExpr::Alpha(k).expression(), v.alpha, v.p);
    }
    out
}
