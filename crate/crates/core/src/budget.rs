//! Rounding-error constants and the running error budget.
//!
//! Every constant is a multiple of the unit roundoff `u` of the working
//! format. The budget keeps whole and fractional multiples apart so that it
//! can be compared against the certification limit without the sum itself
//! drifting as it grows.

use std::f64::consts::PI;

use serde::{Deserialize, Serialize};

/// Angle error of one triple addition with both operands of radius in `[1/2, 1]`.
pub const TRIPLE_SUM_ERROR: f64 = 2.829;
/// Relative error of one component of a floating-point normalized 3-vector.
pub const NORMALIZED_COMPONENT_ERROR: f64 = 3.415;
/// Absolute error of the dot product of two normalized difference vectors.
pub const UNIT_DOT_ERROR: f64 = 13.838;
/// Absolute error of `1 + d1 + d2 + d3` built from three such dot products.
pub const FOUR_TERM_SUM_ERROR: f64 = 57.515;
/// Absolute error of the triple product of three normalized difference vectors.
pub const TRIPLE_PRODUCT_ERROR: f64 = 23.26;
/// Coefficient of `1/R` in the a-posteriori segment-pair bound.
pub const RADIUS_ERROR_COEFF: f64 = 57.516;
/// Segment-pair error when both segments are no longer than the closest
/// endpoint distance.
pub const A_PRIORI_PAIR_ERROR: f64 = 117.861;
/// Per-pair total (pair error plus one addition) under the a-priori condition.
pub const A_PRIORI_PER_PAIR_TOTAL: f64 = 120.690;
/// `NM < PAIR_LIMIT_COEFF / u` guarantees certification under the a-priori condition.
pub const PAIR_LIMIT_COEFF: f64 = 0.0131;

/// A-posteriori error bound of one segment-pair angle, in units of `u`.
///
/// `r_first` and `r_second` are the floating-point radii of the two
/// intermediate directions. The result is rounded up by one ulp so the bound
/// is never under-reported by its own evaluation.
#[inline]
pub fn pair_error_bound(r_first: f64, r_second: f64) -> f64 {
    (TRIPLE_SUM_ERROR + RADIUS_ERROR_COEFF * (1.0 / r_first + 1.0 / r_second)).next_up()
}

/// Certification limit `floor(pi / (2u))` on the integer part of the budget.
pub fn integer_limit(unit_roundoff: f64) -> u64 {
    (PI / (2.0 * unit_roundoff)).floor() as u64
}

/// Accumulated error bound `(int_part + frac_part) * u`.
#[derive(Debug, Clone, Copy, PartialEq, Default, Serialize, Deserialize)]
pub struct ErrorBudget {
    int_part: u64,
    frac_part: f64,
}

impl ErrorBudget {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn int_part(&self) -> u64 {
        self.int_part
    }

    pub fn frac_part(&self) -> f64 {
        self.frac_part
    }

    /// Adds `amount` multiples of `u`.
    #[inline]
    pub fn charge(&mut self, amount: f64) {
        debug_assert!(amount >= 0.0);
        if !amount.is_finite() {
            self.int_part = u64::MAX;
            return;
        }
        let e = amount + self.frac_part;
        let whole = e.floor();
        self.int_part = self.int_part.saturating_add(whole as u64);
        self.frac_part = e - whole;
    }

    pub fn merge(&mut self, other: &ErrorBudget) {
        self.int_part = self.int_part.saturating_add(other.int_part);
        self.charge(other.frac_part);
    }

    /// Total bound in units of `u`.
    pub fn total(&self) -> f64 {
        if self.int_part == u64::MAX {
            return f64::INFINITY;
        }
        (self.int_part as f64 + self.frac_part).next_up()
    }

    pub fn within_limit(&self, unit_roundoff: f64) -> bool {
        self.int_part < integer_limit(unit_roundoff)
    }
}

/// A computed invariant with its rounding-error bound.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct CertifiedValue<T> {
    pub value: T,
    /// Bound on the accumulated angle error, in multiples of `u`.
    pub err_bound_u: f64,
    pub certified: bool,
}
