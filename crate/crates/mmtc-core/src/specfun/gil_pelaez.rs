//! Characteristic-function inversion for CDF evaluation.
//!
//! P(X <= x) = 1/2 - (1/π) ∫₀^∞ Im{φ(w) e^{-iwx}} / w dw.
//!
//! The head of the integral is handled by adaptive Gauss-Kronrod panels.
//! The oscillatory tail is summed over blocks delimited by the detected
//! zeros of the integrand, which yields an alternating series no matter
//! where the combined oscillation frequency of φ(w) e^{-iwx} lies; the
//! block series is accelerated by iterated averaging (Euler
//! transformation), so slowly decaying 1/w envelopes still converge to
//! tolerance within a few hundred blocks.

use super::quad::{gk15, QuadratureSpec};
use crate::error::{Error, Result};
use num_complex::Complex64;

const LOWER_LIMIT: f64 = 1e-12;
const MAX_BLOCKS: usize = 20_000;
const EULER_ROWS: usize = 48;
const ZERO_BISECTIONS: usize = 40;

/// Iterated-averaging accelerator over a sequence of partial sums.
struct EulerAccel {
    diag: Vec<f64>,
}

impl EulerAccel {
    fn new() -> Self {
        EulerAccel { diag: Vec::new() }
    }

    /// Feed the next partial sum; returns the current accelerated estimate.
    fn push(&mut self, partial: f64) -> f64 {
        let old = std::mem::take(&mut self.diag);
        let mut new = Vec::with_capacity(old.len() + 1);
        new.push(partial);
        for v in &old {
            let prev = *new.last().expect("non-empty");
            new.push(0.5 * (prev + v));
        }
        if new.len() > EULER_ROWS {
            new.remove(0);
        }
        self.diag = new;
        *self.diag.last().expect("non-empty after push")
    }
}

/// Evaluate P(X <= point) from the characteristic function `char_fn`,
/// clamped to [0, 1].
pub fn gil_pelaez_cdf<F>(char_fn: F, point: f64, spec: &QuadratureSpec) -> Result<f64>
where
    F: Fn(f64) -> Complex64,
{
    spec.validate()?;
    if !point.is_finite() {
        return Err(Error::domain("gil_pelaez_cdf", "point must be finite"));
    }
    let integrand = |w: f64| -> f64 {
        let phi = char_fn(w);
        let rot = Complex64::new(0.0, -w * point).exp();
        (phi * rot).im / w
    };

    // Nominal oscillation scale of the e^{-iwx} factor; φ's own phase drift
    // can shift the true frequency, which the zero detection absorbs.
    let freq = point.abs().max(1e-3);
    let half_period = std::f64::consts::PI / freq;

    let head_end = match spec.tail_cutoff {
        Some(w) => w.max(16.0 * LOWER_LIMIT).min(8.0 * half_period),
        None => 8.0 * half_period,
    };
    let head = super::quad::integrate(&integrand, LOWER_LIMIT, head_end, spec)?;

    let tail_limit = spec.tail_cutoff.unwrap_or(f64::INFINITY);
    if head_end >= tail_limit {
        let cdf = 0.5 - head / std::f64::consts::PI;
        return Ok(cdf.clamp(0.0, 1.0));
    }
    let tail = tail_blocks(&integrand, head_end, tail_limit, half_period, spec)?;

    let cdf = 0.5 - (head + tail) / std::f64::consts::PI;
    Ok(cdf.clamp(0.0, 1.0))
}

/// Sum the tail over zero-aligned blocks with Euler acceleration.
fn tail_blocks<F: Fn(f64) -> f64>(
    f: &F,
    start: f64,
    limit: f64,
    half_period_guess: f64,
    spec: &QuadratureSpec,
) -> Result<f64> {
    let mut scan_step = (half_period_guess / 6.0).min(1.0);
    let mut accel = EulerAccel::new();
    let mut partial = 0.0_f64;
    let mut estimate = 0.0_f64;
    let mut stable = 0;
    let mut tiny_blocks = 0;
    let mut block_start = start;
    let mut last_zero_spacing: Option<f64> = None;

    for _ in 0..MAX_BLOCKS {
        // scan for the next sign change, starting a nudge past the previous
        // zero so its residual sign cannot fake an immediate crossing
        let spacing_guess = last_zero_spacing.unwrap_or(6.0 * scan_step);
        let mut w_prev = block_start + 1e-3 * spacing_guess;
        let mut f_prev = f(w_prev);
        let mut block_end = None;
        let max_span = 16.0 * scan_step.max(half_period_guess / 6.0);
        let mut travelled = 0.0;
        while travelled < max_span {
            let w_next = (w_prev + scan_step).min(limit);
            let f_next = f(w_next);
            if !f_next.is_finite() {
                return Err(Error::Quadrature {
                    op: "gil_pelaez_cdf",
                    residual: f64::INFINITY,
                    tolerance: spec.abs_tol,
                });
            }
            if f_prev != 0.0 && f_next.signum() != f_prev.signum() {
                block_end = Some(bisect_zero(f, w_prev, w_next));
                break;
            }
            travelled += w_next - w_prev;
            w_prev = w_next;
            f_prev = f_next;
            if w_next >= limit {
                break;
            }
        }
        // fall back to a fixed-length block when no zero shows up (flat or
        // vanished integrand)
        let block_end = block_end
            .unwrap_or_else(|| (block_start + max_span).min(limit))
            .max(block_start + 1e-9 * scan_step);

        let (block, _) = gk15(f, block_start, block_end);
        if !block.is_finite() {
            return Err(Error::Quadrature {
                op: "gil_pelaez_cdf",
                residual: f64::INFINITY,
                tolerance: spec.abs_tol,
            });
        }
        partial += block;
        let new_estimate = accel.push(partial);
        let delta = (new_estimate - estimate).abs();
        estimate = new_estimate;

        // adapt the scan step to the observed zero spacing
        if let Some(prev) = last_zero_spacing {
            let spacing = 0.5 * (prev + (block_end - block_start));
            scan_step = (spacing / 6.0).clamp(1e-6, 1e6);
        }
        last_zero_spacing = Some(block_end - block_start);
        block_start = block_end;

        if delta < spec.abs_tol / 16.0 {
            stable += 1;
            if stable >= 6 {
                return Ok(estimate);
            }
        } else {
            stable = 0;
        }
        if block.abs() < 0.125 * spec.abs_tol {
            tiny_blocks += 1;
            if tiny_blocks >= 3 {
                // envelope has died off; the raw partial sum is converged
                return Ok(partial);
            }
        } else {
            tiny_blocks = 0;
        }
        if block_start >= limit {
            return Ok(partial);
        }
    }
    Err(Error::Quadrature {
        op: "gil_pelaez_cdf",
        residual: estimate.abs().max(spec.abs_tol),
        tolerance: spec.abs_tol,
    })
}

fn bisect_zero<F: Fn(f64) -> f64>(f: &F, mut lo: f64, mut hi: f64) -> f64 {
    let mut f_lo = f(lo);
    for _ in 0..ZERO_BISECTIONS {
        let mid = 0.5 * (lo + hi);
        let f_mid = f(mid);
        if f_mid == 0.0 {
            return mid;
        }
        if f_mid.signum() == f_lo.signum() {
            lo = mid;
            f_lo = f_mid;
        } else {
            hi = mid;
        }
    }
    0.5 * (lo + hi)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn spec() -> QuadratureSpec {
        QuadratureSpec::default()
    }

    #[test]
    fn point_mass_cdf_is_step() {
        // φ(w) = exp(iwμ) for a point mass at μ = 0.3
        let phi = |w: f64| Complex64::new(0.0, 0.3 * w).exp();
        let above = gil_pelaez_cdf(phi, 1.0, &spec()).unwrap();
        assert!((above - 1.0).abs() < 1e-6, "got {above}");
        let below = gil_pelaez_cdf(phi, -0.5, &spec()).unwrap();
        assert!(below.abs() < 1e-6, "got {below}");
    }

    #[test]
    fn unit_exponential_cdf() {
        // φ(w) = 1/(1 - iw); P(X <= 1) = 1 - e^{-1}
        let phi = |w: f64| (Complex64::new(1.0, -w)).inv();
        let got = gil_pelaez_cdf(phi, 1.0, &spec()).unwrap();
        let expected = 1.0 - (-1.0_f64).exp();
        assert!((got - expected).abs() < 1e-8, "got {got}");
    }

    #[test]
    fn standard_normal_median() {
        let phi = |w: f64| Complex64::new((-0.5 * w * w).exp(), 0.0);
        let got = gil_pelaez_cdf(phi, 0.0, &spec()).unwrap();
        assert!((got - 0.5).abs() < 1e-9, "got {got}");
    }

    #[test]
    fn standard_normal_quantiles() {
        let phi = |w: f64| Complex64::new((-0.5 * w * w).exp(), 0.0);
        // Φ(1) = 0.841344746068543, Φ(-1) = 1 - Φ(1)
        let got = gil_pelaez_cdf(phi, 1.0, &spec()).unwrap();
        assert!((got - 0.841_344_746_068_543).abs() < 1e-8, "got {got}");
        let got = gil_pelaez_cdf(&phi, -1.0, &spec()).unwrap();
        assert!((got - 0.158_655_253_931_457).abs() < 1e-8, "got {got}");
    }

    #[test]
    fn exponential_cdf_nondecreasing_on_grid() {
        let phi = |w: f64| (Complex64::new(1.0, -w)).inv();
        let mut last = -1.0;
        for i in 0..10 {
            let x = 0.25 + 0.5 * i as f64;
            let c = gil_pelaez_cdf(phi, x, &spec()).unwrap();
            assert!(c >= last - 1e-9, "cdf decreased at x={x}: {c} < {last}");
            last = c;
        }
    }

    #[test]
    fn explicit_tail_cutoff_is_honored() {
        // a gaussian CF is numerically dead beyond w = 12; cutting there
        // must reproduce the same quantile
        let phi = |w: f64| Complex64::new((-0.5 * w * w).exp(), 0.0);
        let cut = QuadratureSpec {
            tail_cutoff: Some(12.0),
            ..QuadratureSpec::default()
        };
        let got = gil_pelaez_cdf(phi, 1.0, &cut).unwrap();
        assert!((got - 0.841_344_746_068_543).abs() < 1e-7, "got {got}");
    }

    #[test]
    fn rejects_nonfinite_point() {
        let phi = |w: f64| Complex64::new((-0.5 * w * w).exp(), 0.0);
        assert!(gil_pelaez_cdf(phi, f64::NAN, &spec()).is_err());
    }
}
