//! Bound arithmetic: ψ, the slim-barred recursion `H` against its closed form `h`,
//! the r-sequence of the dimension induction, and its closed-form envelope.
//!
//! All logarithms are base 2. Quantities that overflow `f64` are handled as log2 values.

use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum BoundError {
    #[error("domain violation: {0}")]
    Domain(String),
    #[error("hypothesis violated: {0}")]
    Hypothesis(String),
}

/// Injected constants shared by the separator engine, the pipeline and the CLI.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(default)]
pub struct BoundParams {
    pub t: usize,
    /// Stable-set size of the (p, q)-slimness hypothesis.
    pub p: usize,
    pub q: usize,
    /// `None` means `⌈ψ(t, q)⌉`.
    pub r: Option<usize>,
    /// Certificate length used by the separator engine.
    pub x: usize,
    pub phi: f64,
    pub delta: f64,
    pub delta_prime: f64,
    pub d1: usize,
    pub d2: f64,
    pub d3: f64,
    /// `None` means `r₀ + 18·d₃`.
    pub c0: Option<f64>,
}

impl Default for BoundParams {
    fn default() -> Self {
        Self {
            t: 3,
            p: 3,
            q: 2,
            r: None,
            x: 10,
            phi: 1.0,
            delta: 2.0,
            delta_prime: 2.0,
            d1: 3,
            d2: 1.0,
            d3: 1.0,
            c0: None,
        }
    }
}

impl BoundParams {
    pub fn r(&self) -> usize {
        self.r.unwrap_or_else(|| (psi(self.t, self.q, self.phi) - 1e-9).ceil() as usize)
    }

    pub fn r0(&self) -> f64 {
        psi(self.t, self.q, self.phi).max((3.0 * self.t as f64 * (self.d1 * self.d1) as f64).powf(self.d2))
    }

    pub fn c0(&self) -> f64 {
        self.c0.unwrap_or_else(|| self.r0() + 18.0 * self.d3)
    }

    pub fn validate(&self) -> Result<(), BoundError> {
        let bad = |m: &str| Err(BoundError::Domain(m.into()));
        if self.t == 0 || self.q < 2 || self.p < 2 {
            return bad("need t ≥ 1, p ≥ 2, q ≥ 2");
        }
        if self.x == 0 {
            return bad("x must be positive");
        }
        for (name, v) in [("phi", self.phi), ("d2", self.d2), ("d3", self.d3), ("delta", self.delta)] {
            if !(v.is_finite() && v > 0.0) {
                return Err(BoundError::Domain(format!("{name} must be positive")));
            }
        }
        if self.d1 == 0 {
            return bad("d1 must be positive");
        }
        Ok(())
    }

    /// `c(n)`, `f(n)`, `g(n)` as used by the slim-pair separator engine (independent of `n`
    /// except for `g`).
    pub fn slim_barred(&self) -> BarredBounds {
        let (t, q, r, x) = (self.t as f64, self.q as f64, self.r() as f64, self.x as f64);
        let k = 4.0 + 2.0 * t;
        BarredBounds {
            c: BoundFn::Const { value: 100.0 / 99.0 * k * self.phi * r * (q - 1.0) * t },
            f: BoundFn::Const { value: 2.0 * x * r * (q - 1.0) },
            g: BoundFn::Linear { coef: 100.0 * k * k / x },
            p: 1.0,
        }
    }
}

/// `ψ(t, q) = (100²/99)·(4+2t)²·φ·(q−1)`.
pub fn psi(t: usize, q: usize, phi: f64) -> f64 {
    let k = 4.0 + 2.0 * t as f64;
    1e4 / 99.0 * k * k * phi * (q as f64 - 1.0)
}

/// log2 of `2^{5(log r + √(log n · log r))}`, the slim-pair separator size bound.
pub fn log2_sep_slim_bound(n: f64, r: f64) -> f64 {
    let (ln, lr) = (n.log2(), r.log2());
    5.0 * (lr + (ln * lr).max(0.0).sqrt())
}

/// `rp + (rp)²·2^{5(log r + √(log n log r))}`, the balanced-separator size bound.
pub fn smallsep_bound(n: f64, r: f64, p: f64) -> f64 {
    let rp = r * p;
    rp + rp * rp * log2_sep_slim_bound(n, r).exp2()
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum BoundFn {
    Const { value: f64 },
    Linear { coef: f64 },
    Power { coef: f64, exp: f64 },
}

impl BoundFn {
    pub fn eval(&self, n: f64) -> f64 {
        match *self {
            BoundFn::Const { value } => value,
            BoundFn::Linear { coef } => coef * n,
            BoundFn::Power { coef, exp } => coef * n.powf(exp),
        }
    }
}

/// The functions `c, f, g` and the component size `p` of the slim-barred property.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct BarredBounds {
    pub c: BoundFn,
    pub f: BoundFn,
    pub g: BoundFn,
    pub p: f64,
}

/// Closed form `20(f(n)+3c(n)²p²)·(c(n)p)^{2 log n / log(n/g(n))}`.
pub fn bound_h(n: f64, b: &BarredBounds) -> Result<f64, BoundError> {
    let g = b.g.eval(n);
    if !(g < n) || g <= 0.0 {
        return Err(BoundError::Hypothesis(format!("g({n}) = {g} is not in (0, n)")));
    }
    let (c, f) = (b.c.eval(n), b.f.eval(n));
    let cp = c * b.p;
    Ok(20.0 * (f + 3.0 * cp * cp) * cp.powf(2.0 * n.log2() / (n / g).log2()))
}

/// `H(n) = n` for `n ≤ 10`, else `f(N) + 3(c(N)p)² + (c(N)p)²·H(g(n))`.
#[allow(non_snake_case)]
pub fn bound_H_recursive(n: f64, big_n: f64, b: &BarredBounds) -> Result<f64, BoundError> {
    let cp = b.c.eval(big_n) * b.p;
    let k = b.f.eval(big_n) + 3.0 * cp * cp;
    let z = cp * cp;
    // Unroll: H(n) = K(1 + z + … + z^{j−1}) + z^j·n_j with n_{i+1} = g(n_i).
    let mut m = n;
    let mut acc = 0.0;
    let mut mult = 1.0;
    let mut steps = 0;
    while m > 10.0 {
        let next = b.g.eval(m);
        if !(next < m) {
            return Err(BoundError::Hypothesis(format!("g({m}) = {next} does not decrease")));
        }
        acc += mult * k;
        mult *= z;
        m = next;
        steps += 1;
        if steps > 100_000 {
            return Err(BoundError::Hypothesis("recursion does not reach the base case".into()));
        }
    }
    Ok(acc + mult * m)
}

/// Numerical check of the closed-form hypotheses at `n`: `g(n) < n`, `c, f, g` non-decreasing
/// on `[g(n), n]`, and `n/g(n)` non-increasing there.
pub fn hypotheses_at(n: f64, b: &BarredBounds) -> Vec<String> {
    let mut bad = Vec::new();
    let g = b.g.eval(n);
    if !(g < n) {
        bad.push(format!("g({n}) ≥ n"));
        return bad;
    }
    let lo = g.max(1.0);
    for (name, f) in [("c", &b.c), ("f", &b.f), ("g", &b.g)] {
        if f.eval(lo) > f.eval(n) + 1e-9 {
            bad.push(format!("{name} decreases on [{lo}, {n}]"));
        }
    }
    let ratio = |m: f64| m / b.g.eval(m);
    if ratio(lo) + 1e-9 < ratio(n) {
        bad.push(format!("n/g(n) increases on [{lo}, {n}]"));
    }
    bad
}

/// `log2 r_0, …, log2 r_{d₁²}` at `n`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct RSequence {
    pub n: f64,
    pub log2: Vec<f64>,
}

impl RSequence {
    /// `r_i` itself (may be `inf`).
    pub fn value(&self, i: usize) -> f64 {
        self.log2[i].exp2()
    }
}

fn check_n(n: f64) -> Result<(f64, f64), BoundError> {
    if !(n >= 2.0) || !n.is_finite() {
        return Err(BoundError::Domain(format!("n = {n} must be at least 2")));
    }
    let ln = n.log2();
    Ok((ln, ln.log2()))
}

/// `log r_{i+1} = 9·log(r_i log^{d₃} n) + 5·√(log(r_i log^{d₃} n)·log n)`.
pub fn bound_r_sequence(n: f64, params: &BoundParams) -> Result<RSequence, BoundError> {
    params.validate()?;
    let (ln, lln) = check_n(n)?;
    let mut log2 = vec![params.r0().log2()];
    for _ in 0..params.d1 * params.d1 {
        let inner = log2.last().unwrap() + params.d3 * lln;
        if inner <= 0.0 {
            return Err(BoundError::Domain("log(r_i log^{d3} n) must be positive".into()));
        }
        log2.push(9.0 * inner + 5.0 * (inner * ln).sqrt());
    }
    Ok(RSequence { n, log2 })
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ClosedFormCheck {
    pub n: f64,
    pub i: usize,
    /// `log r_i` from the recursion.
    pub lhs: f64,
    /// `16^i·c₀·log^{1−1/2^i} n`.
    pub rhs: f64,
    pub pass: bool,
}

/// `r_i ≤ 2^{16^i c₀ log^{1−1/2^i} n}`, with `r_i` from the recursion (any `i`, not only `≤ d₁²`).
pub fn closed_form_check(n: f64, i: usize, params: &BoundParams) -> Result<ClosedFormCheck, BoundError> {
    let extended = BoundParams { d1: 1, ..params.clone() };
    extended.validate()?;
    let (ln, lln) = check_n(n)?;
    let mut l = extended.r0().log2();
    for _ in 0..i {
        let inner = l + extended.d3 * lln;
        l = 9.0 * inner + 5.0 * (inner * ln).sqrt();
    }
    let rhs = 16f64.powi(i as i32) * params.c0() * ln.powf(1.0 - 0.5f64.powi(i as i32));
    Ok(ClosedFormCheck { n, i, lhs: l, rhs, pass: l <= rhs * (1.0 + 1e-12) })
}

/// The displayed chain `9c_i L^{1−ε} + 9d₃ log L + 5√c_i L^{1−ε/2} + 5√(d₃ log L · L) ≤ 16 c_i L^{1−ε/2}`
/// with `L = log n`, `c_i = 16^i c₀`, `ε = 2^{−i}`. Returns (lhs, rhs).
pub fn chain_check(n: f64, i: usize, params: &BoundParams) -> Result<(f64, f64), BoundError> {
    let (ln, lln) = check_n(n)?;
    let ci = 16f64.powi(i as i32) * params.c0();
    let eps = 0.5f64.powi(i as i32);
    let d3 = params.d3;
    let lhs = 9.0 * ci * ln.powf(1.0 - eps)
        + 9.0 * d3 * lln
        + 5.0 * ci.sqrt() * ln.powf(1.0 - eps / 2.0)
        + 5.0 * (d3 * lln * ln).sqrt();
    Ok((lhs, 16.0 * ci * ln.powf(1.0 - eps / 2.0)))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn psi_value() {
        let v = psi(1, 2, 1.0);
        assert!((v - 1e4 / 99.0 * 36.0).abs() < 1e-9);
        assert!((v - 3636.36).abs() < 0.01);
    }

    #[test]
    fn r0_is_max() {
        let p = BoundParams { t: 1, q: 2, d1: 10, d2: 2.0, ..Default::default() };
        assert_eq!(p.r0(), 90_000.0f64.max(psi(1, 2, 1.0)));
        let p = BoundParams { t: 1, q: 2, d1: 1, d2: 1.0, ..Default::default() };
        assert_eq!(p.r0(), psi(1, 2, 1.0));
    }

    #[test]
    fn h_recursion_small_cases() {
        let b = BarredBounds {
            c: BoundFn::Const { value: 2.0 },
            f: BoundFn::Const { value: 5.0 },
            g: BoundFn::Const { value: 7.0 },
            p: 1.0,
        };
        assert_eq!(bound_H_recursive(10.0, 10.0, &b).unwrap(), 10.0);
        assert_eq!(bound_H_recursive(11.0, 11.0, &b).unwrap(), 5.0 + 12.0 + 4.0 * 7.0);
        assert!(bound_h(5.0, &b).is_err());
    }

    #[test]
    fn sequence_and_closed_form() {
        let p = BoundParams::default();
        let s = bound_r_sequence(1024.0, &p).unwrap();
        assert_eq!(s.log2.len(), 10);
        assert!(s.log2.windows(2).all(|w| w[1] > w[0]));
        assert!(closed_form_check(1024.0, 3, &p).unwrap().pass);
        assert!(bound_r_sequence(1.0, &p).is_err());
    }
}
