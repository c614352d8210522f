//! Exponential integral E_n(z) = ∫₁^∞ e^{-zt} t^{-n} dt for integer order.
//!
//! Non-positive orders reduce to a finite sum (repeated integration by
//! parts), which is the case the active-channel distribution needs.
//! Positive orders follow the classic series / continued-fraction split.

use crate::error::{Error, Result};

const MAX_ITER: usize = 400;
const EPS: f64 = 1e-15;
const EULER_GAMMA: f64 = 0.577_215_664_901_532_9;

/// E_n(z) for z > 0 and any integer n.
pub fn expint_en(n: i64, z: f64) -> Result<f64> {
    if !(z > 0.0) {
        return Err(Error::domain(
            "expint_en",
            format!("z must be > 0, got {z}"),
        ));
    }
    if n <= 0 {
        // E_{-m}(z) = e^{-z} Σ_{j=0}^{m} m!/(m-j)! · z^{-(j+1)}
        let m = (-n) as u64;
        let mut coeff = 1.0_f64; // m!/(m-j)!
        let mut zpow = 1.0 / z;
        let mut sum = zpow;
        for j in 1..=m {
            coeff *= (m - j + 1) as f64;
            zpow /= z;
            sum += coeff * zpow;
        }
        return Ok((-z).exp() * sum);
    }
    let n = n as usize;
    if z > 1.0 {
        // Lentz continued fraction
        const TINY: f64 = 1e-300;
        let nf = n as f64;
        let mut b = z + nf;
        let mut c = 1.0 / TINY;
        let mut d = 1.0 / b;
        let mut h = d;
        for i in 1..=MAX_ITER {
            let a = -(i as f64) * (nf - 1.0 + i as f64);
            b += 2.0;
            d = 1.0 / (a * d + b);
            c = b + a / c;
            let delta = c * d;
            h *= delta;
            if (delta - 1.0).abs() < EPS {
                return Ok(h * (-z).exp());
            }
        }
        return Err(Error::NonConvergence {
            op: "expint_en",
            max_terms: MAX_ITER,
        });
    }
    // power series for 0 < z <= 1
    let nm1 = n - 1;
    let mut ans = if nm1 == 0 {
        -z.ln() - EULER_GAMMA
    } else {
        // ψ(n) - ln z multiplies the (-z)^{n-1}/(n-1)! term
        let mut psi = -EULER_GAMMA;
        for i in 1..=nm1 {
            psi += 1.0 / i as f64;
        }
        let mut fact = 1.0;
        for i in 1..=nm1 {
            fact *= -z / i as f64;
        }
        fact * (psi - z.ln())
    };
    let mut term = 1.0_f64;
    for l in 0..MAX_ITER {
        if l > 0 {
            term *= -z / l as f64;
        }
        if l != nm1 {
            ans -= term / (l as f64 - nm1 as f64);
        }
        if term.abs() < EPS * ans.abs().max(1e-30) && l > nm1 {
            return Ok(ans);
        }
    }
    Err(Error::NonConvergence {
        op: "expint_en",
        max_terms: MAX_ITER,
    })
}
