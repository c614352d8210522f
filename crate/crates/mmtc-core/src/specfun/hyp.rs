//! Generalized hypergeometric series ₂F₂ and the Gauss function ₂F₁ on the
//! negative real axis.
//!
//! ₂F₂ converges for every finite argument and is summed directly with
//! compensated accumulation; the enclosing formulas keep the exponential
//! prefactors in the log domain so the raw series value may be large.
//!
//! ₂F₁ is needed only for z <= 0. Three regimes are used:
//! direct series on (-1, 0], the Pfaff transformation on moderate negative
//! arguments, and the 1/z connection formula (DLMF 15.8.2) far out on the
//! axis where the transformed series would converge too slowly.

use super::gamma::gamma_signed;
use crate::error::{Error, Result};

const MAX_TERMS: usize = 10_000;
const SERIES_EPS: f64 = 1e-16;

fn is_nonpositive_integer(x: f64) -> bool {
    x <= 0.0 && (x - x.round()).abs() < 1e-12
}

/// ₂F₂[{a1, a2}; {b1, b2}; z] by direct series with Kahan summation.
pub fn hyp2f2(a1: f64, a2: f64, b1: f64, b2: f64, z: f64) -> Result<f64> {
    if is_nonpositive_integer(b1) || is_nonpositive_integer(b2) {
        return Err(Error::domain(
            "hyp2f2",
            format!("lower parameters must not be non-positive integers, got b1={b1}, b2={b2}"),
        ));
    }
    if z == 0.0 {
        return Ok(1.0);
    }
    let mut term = 1.0_f64;
    let mut sum = 1.0_f64;
    let mut comp = 0.0_f64; // Kahan compensation
    let mut small_streak = 0;
    for k in 0..MAX_TERMS {
        let kf = k as f64;
        term *= (a1 + kf) * (a2 + kf) / ((b1 + kf) * (b2 + kf)) * z / (kf + 1.0);
        let y = term - comp;
        let t = sum + y;
        comp = (t - sum) - y;
        sum = t;
        if term == 0.0 {
            return Ok(sum); // numerator parameter hit a non-positive integer
        }
        if term.abs() < SERIES_EPS * sum.abs() {
            small_streak += 1;
            if small_streak >= 3 {
                return Ok(sum);
            }
        } else {
            small_streak = 0;
        }
    }
    Err(Error::NonConvergence {
        op: "hyp2f2",
        max_terms: MAX_TERMS,
    })
}

/// Gauss hypergeometric function ₂F₁(a, b; c; z) for real z <= 0.
pub fn hyp2f1(a: f64, b: f64, c: f64, z: f64) -> Result<f64> {
    if is_nonpositive_integer(c) {
        return Err(Error::domain(
            "hyp2f1",
            format!("c must not be a non-positive integer, got {c}"),
        ));
    }
    if z > 0.0 {
        return Err(Error::domain(
            "hyp2f1",
            format!("only z <= 0 is supported, got {z}"),
        ));
    }
    if z == 0.0 {
        return Ok(1.0);
    }
    if z > -1.0 {
        return gauss_series(a, b, c, z);
    }
    // For a numerator parameter that terminates the series, the polynomial
    // is valid for any argument.
    if is_nonpositive_integer(a) || is_nonpositive_integer(b) {
        return gauss_series(a, b, c, z);
    }
    let ab_near_integer = ((a - b) - (a - b).round()).abs() < 1e-8;
    if z >= -24.0 || ab_near_integer {
        // Pfaff: F(a,b;c;z) = (1-z)^{-b} F(c-a, b; c; z/(z-1)), argument in (0,1)
        let u = z / (z - 1.0);
        let f = gauss_series(c - a, b, c, u)?;
        return Ok((1.0 - z).powf(-b) * f);
    }
    // DLMF 15.8.2 connection formula in 1/z; needs a - b non-integer.
    let gc = gamma_signed(c);
    let term = |p: f64, q: f64| -> Result<f64> {
        // Γ(c)Γ(q-p) / (Γ(q)Γ(c-p)) · (-z)^{-p} · F(p, p-c+1; p-q+1; 1/z)
        let coeff = gc * gamma_signed(q - p) / (gamma_signed(q) * gamma_signed(c - p));
        let f = gauss_series(p, p - c + 1.0, p - q + 1.0, 1.0 / z)?;
        Ok(coeff * (-z).powf(-p) * f)
    };
    Ok(term(a, b)? + term(b, a)?)
}

/// Plain Gauss series; caller guarantees |z| < 1 or a terminating parameter.
fn gauss_series(a: f64, b: f64, c: f64, z: f64) -> Result<f64> {
    if is_nonpositive_integer(c) {
        return Err(Error::domain(
            "hyp2f1",
            format!("series lower parameter hit a non-positive integer: {c}"),
        ));
    }
    let mut term = 1.0_f64;
    let mut sum = 1.0_f64;
    let mut comp = 0.0_f64;
    let mut small_streak = 0;
    for k in 0..MAX_TERMS {
        let kf = k as f64;
        term *= (a + kf) * (b + kf) / ((c + kf) * (kf + 1.0)) * z;
        let y = term - comp;
        let t = sum + y;
        comp = (t - sum) - y;
        sum = t;
        if term == 0.0 {
            return Ok(sum);
        }
        if term.abs() < SERIES_EPS * sum.abs().max(1e-30) {
            small_streak += 1;
            if small_streak >= 3 {
                return Ok(sum);
            }
        } else {
            small_streak = 0;
        }
    }
    Err(Error::NonConvergence {
        op: "hyp2f1",
        max_terms: MAX_TERMS,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn hyp2f2_at_zero_is_one() {
        assert_eq!(hyp2f2(1.0, 71.0, 72.0, 72.0, 0.0).unwrap(), 1.0);
    }

    #[test]
    fn hyp2f2_leading_terms_for_small_argument() {
        // ₂F₂[{1,1};{2,2};z] = 1 + z/4 + (2/36) z²/2 + ... from the Pochhammer ratios
        let z = 1e-4;
        let got = hyp2f2(1.0, 1.0, 2.0, 2.0, z).unwrap();
        let expected = 1.0 + z / 4.0 + z * z / 18.0;
        assert!((got - expected).abs() < 2e-13, "got {got}");
    }

    #[test]
    fn hyp2f2_rejects_bad_lower_parameters() {
        assert!(hyp2f2(1.0, 1.0, 0.0, 2.0, 1.0).is_err());
        assert!(hyp2f2(1.0, 1.0, 2.0, -3.0, 1.0).is_err());
    }

    #[test]
    fn hyp2f1_at_zero_is_one() {
        assert_eq!(hyp2f1(1.0, 0.5, 1.5, 0.0).unwrap(), 1.0);
    }

    #[test]
    fn hyp2f1_arctan_identity_direct_branch() {
        // ₂F₁(1, 1/2; 3/2; -z²) = arctan(z)/z
        let got = hyp2f1(1.0, 0.5, 1.5, -1.0).unwrap();
        let expected = std::f64::consts::FRAC_PI_4;
        assert!(((got - expected) / expected).abs() < 1e-12, "got {got}");
    }

    #[test]
    fn hyp2f1_arctan_identity_far_branch() {
        let got = hyp2f1(1.0, 0.5, 1.5, -100.0).unwrap();
        let expected = 10.0_f64.atan() / 10.0;
        assert!(((got - expected) / expected).abs() < 1e-11, "got {got}");
        // very far out as well, where only the 1/z formula is practical
        let got = hyp2f1(1.0, 0.5, 1.5, -1.0e8).unwrap();
        let expected = 1.0e4_f64.atan() / 1.0e4;
        assert!(((got - expected) / expected).abs() < 1e-10, "got {got}");
    }

    #[test]
    fn hyp2f1_pfaff_agrees_with_direct_series_on_overlap() {
        // both routes are valid on (-1, 0]; they must agree
        for z in [-0.05, -0.2, -0.5, -0.8, -0.95] {
            for (a, b, c) in [(1.0, 0.5, 1.5), (1.0, 0.6, 1.4), (0.3, 0.9, 2.2)] {
                let direct = gauss_series(a, b, c, z).unwrap();
                let u = z / (z - 1.0);
                let pfaff = (1.0 - z).powf(-b) * gauss_series(c - a, b, c, u).unwrap();
                assert!(
                    ((direct - pfaff) / direct).abs() < 1e-10,
                    "a={a} b={b} c={c} z={z}: {direct} vs {pfaff}"
                );
            }
        }
    }

    #[test]
    fn hyp2f1_rejects_positive_argument_and_bad_c() {
        assert!(hyp2f1(1.0, 0.5, 1.5, 0.5).is_err());
        assert!(hyp2f1(1.0, 0.5, -2.0, -0.5).is_err());
    }
}
