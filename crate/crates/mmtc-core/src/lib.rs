//! Analytical performance metrics and an independent Monte-Carlo simulator
//! for a two-phase cellular machine-type-communication network with data
//! aggregation and resource scheduling.
//!
//! The network under study is uplink and interference-limited. Machine-type
//! devices (MTDs) first transmit to aggregators over `N` orthogonal channels
//! (aggregation phase); each aggregator then relays its collected data to the
//! nearest base station (relaying phase). Aggregators schedule the limited
//! channels either uniformly at random (RRS) or by picking the MTDs with the
//! best fading gains (CRS).
//!
//! The crate is organised as follows:
//!
//! * [`specfun`] — self-contained special functions and transform-inversion
//!   numerics (incomplete gamma, hypergeometric series, exponential
//!   integrals, adaptive quadrature, characteristic-function inversion).
//! * [`domain`] — the parameter set and shared result types.
//! * [`aggregation`] — closed-form and semi-analytical quantities of the
//!   aggregation phase (occupation, non-drop, per-channel success).
//! * [`relaying`] — relaying-phase analytics (active-channel distribution,
//!   cell-load distribution, interference MGF, load-dependent success).
//! * [`metrics`] — assembly of the headline metrics and parameter sweeps.
//! * [`geometry`] — spatial sampling (Poisson processes on disks, clustered
//!   devices, nearest-station association).
//! * [`sim`] — the Monte-Carlo engine that serves as the independent oracle
//!   for every analytical path.
//! * [`config`] — the flat key-value configuration format used by the CLI.

pub mod aggregation;
pub mod config;
pub mod domain;
mod error;
pub mod geometry;
pub mod metrics;
pub mod relaying;
pub mod sim;
pub mod specfun;

pub use domain::{MetricsReport, NetworkParams, Pmf, SchedulingScheme};
pub use error::{Error, Result};
