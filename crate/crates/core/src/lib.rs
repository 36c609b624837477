//! Certified linking numbers and writhe of closed polygonal curves.
//!
//! The Gauss double integral over two polygons splits into one solid-angle
//! contribution per segment pair. Each contribution is built as an
//! [`AngleTriple`] `[x, y, sigma]` and the triples are folded with an exact
//! wrap counter, so the linking number is read off an integer instead of
//! being rounded from a floating-point sum. Every fold step also charges a
//! rigorous rounding-error bound, and a result is *certified* when the
//! accumulated bound proves the integer correct.
//!
//! ```
//! use certilink::{generate, linking_number};
//!
//! let (p, q) = generate::hopf(64);
//! let report = linking_number(&p, &q).unwrap();
//! assert!(report.result.certified);
//! assert_eq!(report.result.value.abs(), 1);
//! ```
//!
//! Modules:
//! - [`triple`]: angle triples and their arithmetic
//! - [`segment`]: the per-pair angle and its error bound
//! - [`linking`]: linking number and writhe accumulation
//! - [`chain`]: integer-weighted edge chains
//! - [`oracle`]: independent extended-precision and projection references
//! - [`io`], [`generate`], [`bench`](mod@bench), [`cli`]: files, test links, sweeps and
//!   the command-line front end

pub mod bench;
pub mod budget;
pub mod chain;
pub mod cli;
pub mod error;
pub mod float;
pub mod generate;
pub mod io;
pub mod linking;
pub mod oracle;
pub mod segment;
pub mod triple;
pub mod vec3;

pub use budget::{CertifiedValue, ErrorBudget};
pub use chain::{chain_linking, Chain, Edge, ZeroChain};
pub use error::{Error, Result};
pub use float::Real;
pub use linking::{
    linking_number, linking_number_with, writhe, writhe_with, Accumulator, LinkOptions,
    LinkReport, Mode, PolygonalCurve, Precision, WritheReport,
};
pub use segment::{a_priori_ok, build_angle, SegmentPairAngle};
pub use triple::{cross_detect, point_sign, AngleTriple, PointSign};
pub use vec3::{Point3, Vec3};
