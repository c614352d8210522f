//! Canonical parameter set and shared result types.

/// Resource scheduling scheme applied by the aggregators.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SchedulingScheme {
    /// Random resource scheduling: channels go to uniformly chosen devices.
    Rrs,
    /// Channel-aware resource scheduling: the devices with the best fading
    /// gains are scheduled first.
    Crs,
}

impl SchedulingScheme {
    pub fn label(&self) -> &'static str {
        match self {
            SchedulingScheme::Rrs => "rrs",
            SchedulingScheme::Crs => "crs",
        }
    }
}

impl std::str::FromStr for SchedulingScheme {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "rrs" => Ok(SchedulingScheme::Rrs),
            "crs" => Ok(SchedulingScheme::Crs),
            other => Err(format!("unknown scheme '{other}', expected rrs or crs")),
        }
    }
}

/// Full parameter set of the two-phase network model.
///
/// Densities are per square meter, distances in meters, the SIR threshold
/// in linear scale, and the relaying resource `resource_tw` in the same
/// unit as the per-device payload `payload_d` (only their ratio matters).
#[derive(Debug, Clone, PartialEq)]
pub struct NetworkParams {
    /// Base-station density (per m²).
    pub lambda_b: f64,
    /// Aggregator density (per m²).
    pub lambda_a: f64,
    /// Serving-zone radius around each aggregator (m).
    pub r_s: f64,
    /// Mean number of devices per aggregator serving zone.
    pub m_bar: f64,
    /// Number of orthogonal channels in the aggregation phase.
    pub n_channels: u32,
    /// Path-loss exponent, 2 < α <= 6.
    pub alpha: f64,
    /// Nakagami shape of the desired link, aggregation phase.
    pub m1: u32,
    /// Nakagami shape of the desired link, relaying phase.
    pub m2: u32,
    /// Linear SIR threshold of the aggregation phase.
    pub gamma1: f64,
    /// Payload per device (bits, uncalibrated unit).
    pub payload_d: f64,
    /// Relaying capacity per cell, the time-bandwidth product, in units of
    /// `payload_d`.
    pub resource_tw: f64,
    /// Receiver sensitivity of the power control; fixed at 1 because the
    /// interference-limited SIR is insensitive to it.
    pub rho: f64,
}

/// A single validation finding on a parameter set.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Violation {
    pub field: &'static str,
    pub message: String,
    /// Hard violations invalidate the parameter set; soft ones only warn.
    pub hard: bool,
}

impl std::fmt::Display for Violation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let kind = if self.hard { "error" } else { "warning" };
        write!(f, "{kind}: {}: {}", self.field, self.message)
    }
}

/// Baseline parameter values: macro-cell station density 1/(π 500²) per m²,
/// aggregator density 10^-4.5 per m², 50 m serving zones, 70 devices per
/// aggregator on average, α = 4, 0 dB aggregation threshold, fading shapes
/// m₁ = 4 and m₂ = 2.
pub fn default_params() -> NetworkParams {
    NetworkParams {
        lambda_b: 1.0 / (std::f64::consts::PI * 500.0 * 500.0),
        lambda_a: 10f64.powf(-4.5),
        r_s: 50.0,
        m_bar: 70.0,
        n_channels: 70,
        alpha: 4.0,
        m1: 4,
        m2: 2,
        gamma1: 1.0,
        payload_d: 1.0,
        resource_tw: 150.0,
        rho: 1.0,
    }
}

/// Reduced-scale parameter set used for fast simulation cross-checks:
/// sparser aggregators and far fewer devices per zone, which keeps a
/// Monte-Carlo run tractable while exercising every code path.
pub fn desk_params() -> NetworkParams {
    NetworkParams {
        lambda_a: 1e-5,
        m_bar: 10.0,
        n_channels: 20,
        ..default_params()
    }
}

/// Check every structural invariant; returns all findings, hard and soft.
/// Never panics and never errors: an empty list means a fully valid set.
pub fn validate(params: &NetworkParams) -> Vec<Violation> {
    let mut v = Vec::new();
    let mut positive = |field: &'static str, value: f64| {
        if !(value > 0.0) || !value.is_finite() {
            v.push(Violation {
                field,
                message: format!("must be strictly positive and finite, got {value}"),
                hard: true,
            });
        }
    };
    positive("lambda_b", params.lambda_b);
    positive("lambda_a", params.lambda_a);
    positive("r_s", params.r_s);
    positive("m_bar", params.m_bar);
    positive("gamma1", params.gamma1);
    positive("payload_d", params.payload_d);
    positive("resource_tw", params.resource_tw);
    if !(params.alpha > 2.0 && params.alpha <= 6.0) {
        v.push(Violation {
            field: "alpha",
            message: format!("path-loss exponent must satisfy 2 < alpha <= 6, got {}", params.alpha),
            hard: true,
        });
    }
    if params.n_channels < 1 {
        v.push(Violation {
            field: "n_channels",
            message: "at least one channel is required".to_string(),
            hard: true,
        });
    }
    if params.m1 < 1 {
        v.push(Violation {
            field: "m1",
            message: "fading shape must be a positive integer".to_string(),
            hard: true,
        });
    }
    if params.m2 < 1 {
        v.push(Violation {
            field: "m2",
            message: "fading shape must be a positive integer".to_string(),
            hard: true,
        });
    }
    if (params.rho - 1.0).abs() > 1e-12 {
        v.push(Violation {
            field: "rho",
            message: "receiver sensitivity is fixed at 1 in the interference-limited model"
                .to_string(),
            hard: true,
        });
    }
    // The model assumes aggregators are much denser than stations; a small
    // ratio does not invalidate the formulas but degrades the cell-load
    // approximation, so it is only flagged.
    if params.lambda_b > 0.0 && params.lambda_a / params.lambda_b < 5.0 {
        v.push(Violation {
            field: "lambda_a",
            message: format!(
                "aggregator/station density ratio {:.2} is below 5; the cell-load \
                 approximation assumes a much denser aggregator layer",
                params.lambda_a / params.lambda_b
            ),
            hard: false,
        });
    }
    v
}

/// True when the set has no hard violations.
pub fn is_valid(params: &NetworkParams) -> bool {
    validate(params).iter().all(|v| !v.hard)
}

/// Finite (or truncated) discrete distribution over consecutive integers.
#[derive(Debug, Clone, PartialEq)]
pub struct Pmf {
    /// Support values, always consecutive and ascending.
    pub support: Vec<u32>,
    /// Probability mass per support point, same length as `support`.
    pub probs: Vec<f64>,
    /// Mass beyond the truncated support, 0 for exact finite distributions.
    pub truncation_residual: f64,
}

impl Pmf {
    /// Point mass at a single value.
    pub fn point_mass(value: u32) -> Pmf {
        Pmf {
            support: vec![value],
            probs: vec![1.0],
            truncation_residual: 0.0,
        }
    }

    pub fn mass_at(&self, value: u32) -> f64 {
        match self.support.binary_search(&value) {
            Ok(idx) => self.probs[idx],
            Err(_) => 0.0,
        }
    }

    pub fn total_mass(&self) -> f64 {
        self.probs.iter().sum::<f64>() + self.truncation_residual
    }

    pub fn mean(&self) -> f64 {
        self.support
            .iter()
            .zip(&self.probs)
            .map(|(k, p)| *k as f64 * p)
            .sum()
    }

    /// Largest |p(k) - other(k)| over the union of supports plus half the
    /// residual difference; used as a total-variation style distance.
    pub fn total_variation(&self, other: &Pmf) -> f64 {
        let lo = (*self.support.first().unwrap_or(&0)).min(*other.support.first().unwrap_or(&0));
        let hi = (*self.support.last().unwrap_or(&0)).max(*other.support.last().unwrap_or(&0));
        let mut tv = 0.0;
        for k in lo..=hi {
            tv += (self.mass_at(k) - other.mass_at(k)).abs();
        }
        0.5 * (tv + (self.truncation_residual - other.truncation_residual).abs())
    }
}

/// Headline metrics with the phase-level factors they are assembled from.
#[derive(Debug, Clone)]
pub struct MetricsReport {
    pub scheme: SchedulingScheme,
    /// Average channel occupation probability.
    pub p_occupy: f64,
    /// Average probability that a device is granted a channel.
    pub p_nondrop: f64,
    /// Average per-channel success probability, aggregation phase.
    pub p_suc1: f64,
    /// Average per-channel success probability, relaying phase.
    pub p_suc2: f64,
    /// Distribution of the number of active channels per aggregator.
    pub pmf_k1: Pmf,
    /// End-to-end device success probability.
    pub p_mtd_success: f64,
    /// Average number of devices per aggregator whose data reaches the
    /// station.
    pub avg_successful_mtds: f64,
    /// Probability that a channel is occupied and carries data end to end.
    pub p_channel_util: f64,
    /// Successfully served devices per km².
    pub successful_mtds_per_km2: f64,
}
