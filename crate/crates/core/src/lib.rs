//! Rate analysis for the half-duplex Gaussian diamond relay channel.
//!
//! A source reaches a destination through two parallel half-duplex relays
//! with no source-destination or relay-relay link. Four transmission modes
//! exist (broadcast, two successive forwarding modes, multiple-access), and
//! a schedule assigns each mode a fraction of the transmission time. This
//! crate computes, for any set of link power gains:
//!
//! * the derived link capacities and channel parameters ([`channel`]),
//! * the cut-set bound as a small linear program, its explicit dual, and
//!   independent LP oracles ([`lp`]),
//! * closed-form achievable rates and schedules for the MDF, MDF-BC and
//!   MDF-MAC protocols ([`schemes`]),
//! * single-equation dual-based upper bounds with machine-checked
//!   feasibility certificates ([`bounds`]),
//! * region classification, gap formulas, and Monte-Carlo sweep harnesses
//!   ([`analysis`]),
//! * generalized-degrees-of-freedom and multiplexing-gain evaluation
//!   ([`gdof`]),
//! * a numeric check that relaxing constant to average power constraints
//!   raises the cut-set bound by at most 2/ln 2 bits ([`avgpower`]).
//!
//! All rates are in bits per channel use (logs base 2) and all channels are
//! normalized to unit transmit power and unit noise variance, so a link is
//! fully described by its power gain.

pub mod analysis;
pub mod avgpower;
pub mod bounds;
pub mod channel;
mod error;
pub mod gdof;
pub mod lp;
pub mod schemes;
pub mod verify;

pub use analysis::{analyze, RateReport, RegionId};
pub use bounds::UpperBound;
pub use channel::{ChannelGains, LinkCapacities, Sign};
pub use error::Error;
pub use schemes::{Schedule, SchemeId, SchemeResult};

/// Relative tolerance used everywhere a sign of Δ, Γ or Γ′ is classified.
///
/// The zero sets are measure-zero, but constructed tests must land on them
/// exactly even though the parameters are products of floating-point logs.
pub const DEFAULT_TOL: f64 = 1e-9;

/// Denominators smaller than this are treated as a dead branch by the
/// guarded-ratio rule: the affected ratio contributes rate 0.
pub const GUARD_EPS: f64 = 1e-12;

pub(crate) fn guarded_ratio(num: f64, den: f64) -> f64 {
    if den.abs() < GUARD_EPS {
        0.0
    } else {
        num / den
    }
}
