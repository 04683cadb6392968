//! Link gains, derived capacities, and the channel parameters that select
//! regions, schemes, and bounds.
//!
//! Node indices: 0 source, 1 and 2 relays, 3 destination. A link gain
//! `g_ab` is the power gain of the `a -> b` link with unit transmit power
//! and unit noise variance; only magnitudes enter any formula, so gains are
//! plain nonnegative reals.

use serde::{Deserialize, Serialize};

use crate::{Error, DEFAULT_TOL};

/// Gaussian point-to-point capacity `C(P) = 1/2 log2(1 + P)` in bits per
/// channel use.
///
/// Returns a domain error for negative or non-finite gains.
pub fn capacity_of(gain: f64) -> Result<f64, Error> {
    if !gain.is_finite() || gain < 0.0 {
        return Err(Error::InvalidGain(gain));
    }
    Ok(cap(gain))
}

/// `C(P)` for already-validated nonnegative gains.
#[inline]
pub(crate) fn cap(gain: f64) -> f64 {
    0.5 * (1.0 + gain).log2()
}

/// The four link power gains of a diamond channel.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ChannelGains {
    /// Source to relay 1.
    pub g01: f64,
    /// Source to relay 2.
    pub g02: f64,
    /// Relay 1 to destination.
    pub g13: f64,
    /// Relay 2 to destination.
    pub g23: f64,
}

impl ChannelGains {
    /// Validates that every gain is finite and nonnegative.
    pub fn new(g01: f64, g02: f64, g13: f64, g23: f64) -> Result<Self, Error> {
        for g in [g01, g02, g13, g23] {
            if !g.is_finite() || g < 0.0 {
                return Err(Error::InvalidGain(g));
            }
        }
        Ok(Self { g01, g02, g13, g23 })
    }

    /// Swaps the two relays (`g01 <-> g02`, `g13 <-> g23`).
    ///
    /// The channel model is invariant under this relabeling; it flips the
    /// signs of Γ and Γ′ and exchanges forwarding modes I and II.
    pub fn swap_relays(self) -> Self {
        Self {
            g01: self.g02,
            g02: self.g01,
            g13: self.g23,
            g23: self.g13,
        }
    }
}

/// All derived link capacities and channel parameters, in bits per channel
/// use (Δ, Γ, Γ′ are products of capacities, hence bits squared).
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct LinkCapacities {
    pub c01: f64,
    pub c02: f64,
    pub c13: f64,
    pub c23: f64,
    /// Broadcast cut from the source: `C(g01 + g02)`.
    pub c012: f64,
    /// Coherent multiple-access cut into the destination:
    /// `C((sqrt(g13) + sqrt(g23))^2)`.
    pub c123: f64,
    /// Multiple-access sum capacity with independent relay messages:
    /// `C(g13 + g23)`.
    pub c_mac: f64,
    /// Δ = C01·C02 − C13·C23, the parameter whose sign selects the scheme.
    pub delta: f64,
    /// Γ = C23·(C012 − C02) − C13·(C012 − C01).
    pub gamma: f64,
    /// Γ′ = C02·(C123 − C23) − C01·(C123 − C13).
    pub gamma_prime: f64,
    /// δ = max{C123 − (C13 + C23), 0}, the coherent-combining excess.
    pub small_delta: f64,
    /// ζ1 = C(g01 / (g01 + 1)), rate loss of the η1 superposition split.
    pub zeta1: f64,
    /// ζ2 = C(g02 / (g02 + 1)).
    pub zeta2: f64,
}

/// Derives every capacity and parameter from the raw gains.
pub fn derive(gains: ChannelGains) -> LinkCapacities {
    let ChannelGains { g01, g02, g13, g23 } = gains;
    let c01 = cap(g01);
    let c02 = cap(g02);
    let c13 = cap(g13);
    let c23 = cap(g23);
    let c012 = cap(g01 + g02);
    let c123 = cap((g13.sqrt() + g23.sqrt()).powi(2));
    let c_mac = cap(g13 + g23);
    LinkCapacities {
        c01,
        c02,
        c13,
        c23,
        c012,
        c123,
        c_mac,
        delta: c01 * c02 - c13 * c23,
        gamma: c23 * (c012 - c02) - c13 * (c012 - c01),
        gamma_prime: c02 * (c123 - c23) - c01 * (c123 - c13),
        small_delta: (c123 - (c13 + c23)).max(0.0),
        zeta1: cap(g01 / (g01 + 1.0)),
        zeta2: cap(g02 / (g02 + 1.0)),
    }
}

/// Sign of a tolerance-classified channel parameter.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Sign {
    Neg,
    Zero,
    Pos,
}

impl Sign {
    /// Zero is folded into the nonpositive side, matching the boundary
    /// conventions used throughout (Δ=0 → Δ≤0 row, Γ=0 → Γ≤0, ...).
    pub fn is_nonpos(self) -> bool {
        matches!(self, Sign::Neg | Sign::Zero)
    }
}

fn classify(value: f64, scale: f64, tol: f64) -> Sign {
    if value.abs() <= tol * scale {
        Sign::Zero
    } else if value > 0.0 {
        Sign::Pos
    } else {
        Sign::Neg
    }
}

/// Sign of Δ relative to `tol * max(1, C01·C02, C13·C23)`.
pub fn classify_delta(caps: &LinkCapacities, tol: f64) -> Sign {
    let scale = 1f64.max(caps.c01 * caps.c02).max(caps.c13 * caps.c23);
    classify(caps.delta, scale, tol)
}

/// Sign of Γ relative to the magnitudes of its two terms.
pub fn classify_gamma(caps: &LinkCapacities, tol: f64) -> Sign {
    let scale = 1f64
        .max((caps.c23 * (caps.c012 - caps.c02)).abs())
        .max((caps.c13 * (caps.c012 - caps.c01)).abs());
    classify(caps.gamma, scale, tol)
}

/// Sign of Γ′ relative to the magnitudes of its two terms.
pub fn classify_gamma_prime(caps: &LinkCapacities, tol: f64) -> Sign {
    let scale = 1f64
        .max((caps.c02 * (caps.c123 - caps.c23)).abs())
        .max((caps.c01 * (caps.c123 - caps.c13)).abs());
    classify(caps.gamma_prime, scale, tol)
}

impl LinkCapacities {
    pub fn delta_sign(&self) -> Sign {
        classify_delta(self, DEFAULT_TOL)
    }

    pub fn gamma_sign(&self) -> Sign {
        classify_gamma(self, DEFAULT_TOL)
    }

    pub fn gamma_prime_sign(&self) -> Sign {
        classify_gamma_prime(self, DEFAULT_TOL)
    }

    /// Whether the coherent excess `C123 - (C13 + C23)` is positive beyond
    /// tolerance. Only then does the δ-enlargement of a bound do anything.
    pub fn has_coherent_excess(&self) -> bool {
        self.c123 - (self.c13 + self.c23) > DEFAULT_TOL * 1f64.max(self.c123)
    }
}
