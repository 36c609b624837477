//! Reference computations for testing and verification.
//!
//! Nothing here calls into the triple arithmetic or the pair construction.
//! The pair angles are recomputed from half solid angles in double-double
//! arithmetic, linking numbers are also counted from projected crossings,
//! and single pairs can be integrated numerically from the Gauss integrand.

pub mod dd;
pub mod distance;
pub mod gauss;
pub mod projection;
pub mod solid;

pub use dd::Dd;
pub use distance::{min_distance, min_self_distance, segment_distance};
pub use gauss::gauss_pair_integral;
pub use projection::{crossing_count, default_direction, linking_by_projection, CrossingCount};
pub use solid::{linking_by_quadrature, pair_angle, triple_angle, writhe_by_quadrature};

/// Relative precision of the double-double references, about `2^-104`.
/// Tests scale their tolerances from this.
pub const PRECISION: f64 = 4.930_380_657_631_324e-32;
