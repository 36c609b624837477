//! Linking number and writhe by folding segment-pair triples.
//!
//! The fold keeps a running triple `[X, Y, l]` and the sign `S` of `(X, Y)`.
//! Each pair triple is multiplied in, `l` picks up the pair's own turn count
//! plus one more whenever the product swings across the negative x-axis, and
//! `(X, Y)` is rescaled by a power of two. In exact arithmetic the final
//! direction is `(X, 0)` with `X > 0` and `l` is the linking number; in
//! floating point the budget bounds how far the total angle may have
//! drifted, and the result is certified while that bound stays below
//! `pi / 2`.

use std::f64::consts::PI;
use std::ops::Range;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::budget::{CertifiedValue, ErrorBudget, TRIPLE_SUM_ERROR};
use crate::error::{Error, Result};
use crate::float::Real;
use crate::segment::{build_angle, SegmentPairAngle};
use crate::triple::{normalize_direction, AngleTriple, PointSign};
use crate::vec3::{Point3, Vec3};

/// Rows of the pair grid handled by one parallel task. Fixed so that the
/// reduction tree, and therefore the result, does not depend on the number
/// of worker threads.
const ROW_BLOCK: usize = 16;

/// Closed polyline; the last vertex connects back to the first.
#[derive(Debug, Clone, PartialEq)]
pub struct PolygonalCurve {
    vertices: Vec<Point3>,
}

impl PolygonalCurve {
    pub fn new(vertices: Vec<Point3>) -> Result<Self> {
        let n = vertices.len();
        if n < 3 {
            return Err(Error::CurveTooSmall { len: n });
        }
        if let Some(index) = vertices.iter().position(|v| !v.is_finite()) {
            return Err(Error::NonFiniteVertex { index });
        }
        for i in 0..n {
            let next = (i + 1) % n;
            if vertices[i] == vertices[next] {
                return Err(Error::RepeatedVertex { index: i, next });
            }
        }
        Ok(PolygonalCurve { vertices })
    }

    pub fn from_coords(coords: &[[f64; 3]]) -> Result<Self> {
        Self::new(coords.iter().map(|&c| Point3::from(c)).collect())
    }

    pub fn vertices(&self) -> &[Point3] {
        &self.vertices
    }

    /// Number of vertices, equal to the number of segments.
    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    /// Segment `i`, from vertex `i` to vertex `i + 1` (cyclically).
    pub fn segment(&self, i: usize) -> (Point3, Point3) {
        let n = self.vertices.len();
        (self.vertices[i % n], self.vertices[(i + 1) % n])
    }

    /// The same curve traversed backwards.
    pub fn reversed(&self) -> Self {
        let mut vertices = self.vertices.clone();
        vertices.reverse();
        PolygonalCurve { vertices }
    }

    /// All coordinates multiplied by `2^k`.
    pub fn scaled_pow2(&self, k: i32) -> Self {
        PolygonalCurve {
            vertices: self.vertices.iter().map(|v| v.scale_pow2(k)).collect(),
        }
    }

    /// Applies `f` to every vertex and revalidates.
    pub fn map(&self, f: impl Fn(Point3) -> Point3) -> Result<Self> {
        Self::new(self.vertices.iter().map(|&v| f(v)).collect())
    }

    fn cast<F: Real>(&self) -> Vec<Vec3<F>> {
        self.vertices.iter().map(|v| v.cast()).collect()
    }
}

/// Working precision of the fold.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Precision {
    /// IEEE double, `u = 2^-53`.
    #[default]
    Double,
    /// IEEE single, `u = 2^-24`. Inputs are rounded to single first.
    Single,
}

impl Precision {
    pub fn unit_roundoff(self) -> f64 {
        match self {
            Precision::Double => f64::UNIT_ROUNDOFF,
            Precision::Single => f32::UNIT_ROUNDOFF,
        }
    }
}

/// How the pair triples are folded.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Mode {
    /// Inline wrap counting with error accounting.
    #[default]
    Certified,
    /// Plain repeated triple addition without error accounting; the result
    /// is never certified.
    ExactStyle,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct LinkOptions {
    pub precision: Precision,
    pub mode: Mode,
    /// Split the pair grid into fixed row blocks folded on the rayon pool.
    pub parallel: bool,
}

/// Running triple `[X, Y, l]`, its sign and the error budget.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Accumulator<F: Real = f64> {
    triple: AngleTriple<F>,
    sign: PointSign,
    budget: ErrorBudget,
    pairs: u64,
}

impl<F: Real> Default for Accumulator<F> {
    fn default() -> Self {
        Self::new()
    }
}

impl<F: Real> Accumulator<F> {
    /// Starts at `[1, 0, 0]` with sign `-1` and an empty budget.
    pub fn new() -> Self {
        Accumulator {
            triple: AngleTriple::IDENTITY,
            sign: PointSign::Negative,
            budget: ErrorBudget::new(),
            pairs: 0,
        }
    }

    pub fn triple(&self) -> AngleTriple<F> {
        self.triple
    }

    pub fn sign(&self) -> PointSign {
        self.sign
    }

    pub fn budget(&self) -> ErrorBudget {
        self.budget
    }

    pub fn pairs(&self) -> u64 {
        self.pairs
    }

    /// The turn counter `l`.
    pub fn winding(&self) -> i64 {
        self.triple.sigma()
    }

    /// `atan2(Y, X)` of the running direction, the only trigonometric call.
    pub fn residual_angle(&self) -> f64 {
        self.triple.y().to_f64().atan2(self.triple.x().to_f64())
    }

    /// Folds one pair angle in and charges `err_bound + 2.829` to the budget.
    #[inline]
    pub fn accumulate(&mut self, pair: &SegmentPairAngle<F>) -> Result<()> {
        let (big_x, big_y) = (self.triple.x(), self.triple.y());
        let (x, y) = (pair.triple.x(), pair.triple.y());
        let xn = big_x * x - big_y * y;
        let yn = big_x * y + big_y * x;
        let mut turns = self.triple.sigma() + pair.triple.sigma();
        let new_sign = PointSign::of(xn, yn).ok_or(Error::DegenerateSum)?;
        let s = self.sign.value();
        if s * pair.sign.value() > 0 && s * new_sign.value() < 0 {
            turns -= new_sign.value();
        }
        let (xn, yn) = normalize_direction(xn, yn)?;
        self.triple = AngleTriple::from_parts(xn, yn, turns);
        self.sign = new_sign;
        self.budget.charge(pair.err_bound + TRIPLE_SUM_ERROR);
        self.pairs += 1;
        Ok(())
    }

    /// Adds another partial sum; charges one more triple addition.
    pub fn merge(&mut self, other: &Accumulator<F>) -> Result<()> {
        self.triple = self.triple.add(&other.triple)?;
        self.sign = self.triple.sign();
        self.budget.merge(&other.budget);
        self.budget.charge(TRIPLE_SUM_ERROR);
        self.pairs += other.pairs;
        Ok(())
    }
}

/// Linking number with its certificate and fold diagnostics.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LinkReport {
    pub result: CertifiedValue<i64>,
    /// `atan2(Y, X)` of the final direction; zero in exact arithmetic.
    pub residual_angle: f64,
    pub budget: ErrorBudget,
    pub pairs: u64,
    pub precision: Precision,
}

impl LinkReport {
    pub fn unit_roundoff(&self) -> f64 {
        self.precision.unit_roundoff()
    }
}

/// Writhe with its error bound.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct WritheReport {
    pub result: CertifiedValue<f64>,
    pub budget: ErrorBudget,
    pub pairs: u64,
    pub precision: Precision,
}

impl WritheReport {
    pub fn unit_roundoff(&self) -> f64 {
        self.precision.unit_roundoff()
    }
}

/// Linking number of two disjoint closed polygons in double precision.
pub fn linking_number(p: &PolygonalCurve, q: &PolygonalCurve) -> Result<LinkReport> {
    linking_number_with(p, q, &LinkOptions::default())
}

pub fn linking_number_with(
    p: &PolygonalCurve,
    q: &PolygonalCurve,
    options: &LinkOptions,
) -> Result<LinkReport> {
    match options.precision {
        Precision::Double => link_in::<f64>(p, q, options),
        Precision::Single => link_in::<f32>(p, q, options),
    }
}

fn link_in<F: Real>(
    p: &PolygonalCurve,
    q: &PolygonalCurve,
    options: &LinkOptions,
) -> Result<LinkReport> {
    let pv = p.cast::<F>();
    let qv = q.cast::<F>();
    let (n, m) = (pv.len(), qv.len());
    let pair = |i: usize, j: usize| {
        build_angle(pv[i], pv[(i + 1) % n], qv[j], qv[(j + 1) % m]).map(Some)
    };
    finish_link(fold(n, |_| 0..m, pair, options)?, options)
}

pub(crate) fn finish_link<F: Real>(folded: Folded<F>, options: &LinkOptions) -> Result<LinkReport> {
    let u = F::UNIT_ROUNDOFF;
    let acc = folded.acc;
    let result = if folded.tracked {
        CertifiedValue {
            value: acc.winding(),
            err_bound_u: acc.budget.total(),
            certified: acc.budget.within_limit(u),
        }
    } else {
        CertifiedValue {
            value: acc.winding(),
            err_bound_u: f64::INFINITY,
            certified: false,
        }
    };
    Ok(LinkReport {
        result,
        residual_angle: acc.residual_angle(),
        budget: acc.budget,
        pairs: acc.pairs,
        precision: options.precision,
    })
}

/// Writhe of a closed polygon without self-intersections, double precision.
pub fn writhe(p: &PolygonalCurve) -> Result<WritheReport> {
    writhe_with(p, &LinkOptions::default())
}

pub fn writhe_with(p: &PolygonalCurve, options: &LinkOptions) -> Result<WritheReport> {
    match options.precision {
        Precision::Double => writhe_in::<f64>(p, options),
        Precision::Single => writhe_in::<f32>(p, options),
    }
}

fn writhe_in<F: Real>(p: &PolygonalCurve, options: &LinkOptions) -> Result<WritheReport> {
    let pv = p.cast::<F>();
    let n = pv.len();
    // unordered non-adjacent pairs; segments 0 and n-1 share vertex 0
    let cols = |i: usize| {
        let end = if i == 0 { n - 1 } else { n };
        (i + 2).min(end)..end
    };
    let pair = |i: usize, j: usize| {
        build_angle(pv[i], pv[(i + 1) % n], pv[j], pv[(j + 1) % n]).map(Some)
    };
    let folded = fold(n, cols, pair, options)?;
    let acc = folded.acc;
    let u = F::UNIT_ROUNDOFF;

    let turns = acc.winding() as f64 + acc.residual_angle() / (2.0 * PI);
    let value = 2.0 * turns;
    let (err_bound_u, certified) = if folded.tracked {
        // final atan2 and turn conversion happen in double precision
        let eval = 2.0 * PI * (2.0 * value.abs() + 2.0) * f64::EPSILON / u;
        (2.0 * acc.budget.total() + eval, acc.budget.within_limit(u))
    } else {
        (f64::INFINITY, false)
    };
    Ok(WritheReport {
        result: CertifiedValue {
            value,
            err_bound_u,
            certified,
        },
        budget: acc.budget,
        pairs: acc.pairs,
        precision: options.precision,
    })
}

pub(crate) struct Folded<F: Real> {
    pub acc: Accumulator<F>,
    pub tracked: bool,
}

/// Folds `pair(i, j)` over `i in 0..rows`, `j in cols(i)` in row-major order.
/// `pair` may return `None` to skip a cell.
pub(crate) fn fold<F, C, P>(rows: usize, cols: C, pair: P, options: &LinkOptions) -> Result<Folded<F>>
where
    F: Real,
    C: Fn(usize) -> Range<usize> + Sync,
    P: Fn(usize, usize) -> Result<Option<SegmentPairAngle<F>>> + Sync,
{
    match options.mode {
        Mode::ExactStyle => {
            let mut total = AngleTriple::<F>::IDENTITY;
            let mut pairs = 0;
            for i in 0..rows {
                for j in cols(i) {
                    if let Some(pa) = pair(i, j)? {
                        total = total.add(&pa.triple)?;
                        pairs += 1;
                    }
                }
            }
            let acc = Accumulator {
                triple: total,
                sign: total.sign(),
                budget: ErrorBudget::new(),
                pairs,
            };
            Ok(Folded { acc, tracked: false })
        }
        Mode::Certified => {
            let fold_rows = |rows: Range<usize>| -> Result<Accumulator<F>> {
                let mut acc = Accumulator::new();
                for i in rows {
                    for j in cols(i) {
                        if let Some(pa) = pair(i, j)? {
                            acc.accumulate(&pa)?;
                        }
                    }
                }
                Ok(acc)
            };
            let acc = if options.parallel {
                let blocks: Vec<Range<usize>> = (0..rows)
                    .step_by(ROW_BLOCK)
                    .map(|s| s..(s + ROW_BLOCK).min(rows))
                    .collect();
                let partials: Vec<Result<Accumulator<F>>> =
                    blocks.into_par_iter().map(fold_rows).collect();
                let mut acc = Accumulator::new();
                for part in partials {
                    acc.merge(&part?)?;
                }
                acc
            } else {
                fold_rows(0..rows)?
            };
            Ok(Folded { acc, tracked: true })
        }
    }
}
