//! Derivatives of compositions f(s) = exp(g(s)).
//!
//! The outage expressions need Σ_{t=0}^{m-1} ((-s)^t / t!) f^{(t)}(s) with
//! f an interference MGF. Successive derivatives follow the Leibniz-style
//! recurrence f^{(t)} = Σ_{j<t} C(t-1, j) f^{(j)} g^{(t-j)}, which is exact
//! and cheap for the small fading shape parameters in play.

use crate::error::{Error, Result};

/// Derivatives f^{(0)}..f^{(order)} of f = exp(g) at a fixed point, given
/// g's value `g0` and an evaluator for g^{(k)} at the same point (k >= 1).
pub fn exp_derivative_seq<G>(g0: f64, mut g_deriv: G, order: usize) -> Vec<f64>
where
    G: FnMut(usize) -> f64,
{
    let mut f = Vec::with_capacity(order + 1);
    f.push(g0.exp());
    if order == 0 {
        return f;
    }
    let g: Vec<f64> = (1..=order).map(|k| g_deriv(k)).collect();
    for t in 1..=order {
        // binomial C(t-1, j) built multiplicatively along the row
        let mut binom = 1.0_f64;
        let mut acc = 0.0_f64;
        for j in 0..t {
            acc += binom * f[j] * g[t - 1 - j];
            binom *= (t - 1 - j) as f64 / (j + 1) as f64;
        }
        f.push(acc);
    }
    f
}

/// t-th derivative of exp(-c s^p) with respect to s, evaluated at s.
///
/// `c > 0` scales the exponent, `p ∈ (0, 1)` is the stable-order power that
/// the path-loss exponent induces (p = 2/α).
pub fn mgf_exp_derivatives(c: f64, p: f64, s: f64, order: usize) -> Result<f64> {
    if !(c > 0.0) {
        return Err(Error::domain(
            "mgf_exp_derivatives",
            format!("coefficient must be > 0, got {c}"),
        ));
    }
    if !(p > 0.0 && p < 1.0) {
        // p = 1 is the degenerate exponential-exponent case; allow it since
        // the recurrence stays exact there (all higher g-derivatives vanish).
        if p != 1.0 {
            return Err(Error::domain(
                "mgf_exp_derivatives",
                format!("power must lie in (0, 1], got {p}"),
            ));
        }
    }
    if !(s > 0.0) {
        return Err(Error::domain(
            "mgf_exp_derivatives",
            format!("s must be > 0, got {s}"),
        ));
    }
    let g0 = -c * s.powf(p);
    let derivs = exp_derivative_seq(
        g0,
        |k| {
            // d^k/ds^k of -c s^p = -c · p (p-1) ... (p-k+1) · s^{p-k}
            let mut factor = -c;
            for j in 0..k {
                factor *= p - j as f64;
            }
            factor * s.powf(p - k as f64)
        },
        order,
    );
    Ok(derivs[order])
}

/// Σ_{t=0}^{m-1} ((-s)^t / t!) f^{(t)}(s) for f-derivative table `f_derivs`
/// (as produced by [`exp_derivative_seq`] with `order = m - 1`).
///
/// This is the gamma-fading success probability built from an interference
/// MGF; the result is clamped to [0, 1].
pub fn outage_success_sum(s: f64, f_derivs: &[f64]) -> f64 {
    let mut factor = 1.0_f64; // (-s)^t / t!
    let mut sum = 0.0_f64;
    for (t, fd) in f_derivs.iter().enumerate() {
        if t > 0 {
            factor *= -s / t as f64;
        }
        sum += factor * fd;
    }
    sum.clamp(0.0, 1.0)
}
