//! Integer-weighted edge chains and their linking number.
//!
//! A chain is a formal sum of directed edges `w * [p_i, p_j]`. Its boundary
//! sends each edge to `w * (p_i - p_j)`; a chain with zero boundary is a
//! generalized closed loop and has a well-defined linking number with any
//! other disjoint closed chain, bilinear in the weights.

use std::collections::BTreeMap;

use crate::budget::TRIPLE_SUM_ERROR;
use crate::error::{Error, Result};
use crate::linking::{finish_link, fold, LinkOptions, LinkReport, PolygonalCurve, Precision};
use crate::float::Real;
use crate::segment::{build_angle, SegmentPairAngle};
use crate::vec3::{Point3, Vec3};

/// Directed edge from point `i` to point `j` with weight `w`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Edge {
    pub i: usize,
    pub j: usize,
    pub w: i64,
}

impl Edge {
    pub fn new(i: usize, j: usize, w: i64) -> Self {
        Edge { i, j, w }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Chain {
    points: Vec<Point3>,
    edges: Vec<Edge>,
}

/// Boundary coefficients keyed by point index; zero coefficients are omitted.
pub type ZeroChain = BTreeMap<usize, i64>;

impl Chain {
    /// Validates indices and drops zero-weight edges.
    pub fn new(points: Vec<Point3>, edges: Vec<Edge>) -> Result<Self> {
        if let Some(index) = points.iter().position(|v| !v.is_finite()) {
            return Err(Error::NonFiniteVertex { index });
        }
        let n = points.len();
        for e in &edges {
            if e.i >= n || e.j >= n {
                return Err(Error::InvalidChain(format!(
                    "edge ({}, {}) references a point outside 0..{n}",
                    e.i, e.j
                )));
            }
            if e.i == e.j {
                return Err(Error::InvalidChain(format!("edge ({0}, {0}) is a loop", e.i)));
            }
        }
        let edges = edges.into_iter().filter(|e| e.w != 0).collect();
        Ok(Chain { points, edges })
    }

    /// The curve's segments as weight-1 edges over its own vertices.
    pub fn from_curve(curve: &PolygonalCurve) -> Self {
        let n = curve.len();
        Chain {
            points: curve.vertices().to_vec(),
            edges: (0..n).map(|i| Edge::new(i, (i + 1) % n, 1)).collect(),
        }
    }

    pub fn points(&self) -> &[Point3] {
        &self.points
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    /// Every weight multiplied by `a`; `a = 0` leaves an empty chain.
    pub fn scaled(&self, a: i64) -> Self {
        Chain {
            points: self.points.clone(),
            edges: self
                .edges
                .iter()
                .filter(|_| a != 0)
                .map(|e| Edge::new(e.i, e.j, e.w * a))
                .collect(),
        }
    }

    pub fn boundary(&self) -> ZeroChain {
        let mut d = ZeroChain::new();
        for e in &self.edges {
            *d.entry(e.i).or_insert(0) += e.w;
            *d.entry(e.j).or_insert(0) -= e.w;
        }
        d.retain(|_, c| *c != 0);
        d
    }

    pub fn is_closed(&self) -> bool {
        self.boundary().is_empty()
    }
}

/// Weighted linking number of two closed chains.
///
/// Each edge pair's triple is computed once, multiplied by the product of
/// the weights and folded like a curve pair. The pair is charged `|w|` times
/// its own bound plus `|w| - 1` triple additions.
pub fn chain_linking(c1: &Chain, c2: &Chain, options: &LinkOptions) -> Result<LinkReport> {
    for c in [c1, c2] {
        if let Some(&point) = c.boundary().keys().next() {
            return Err(Error::NotClosed { point });
        }
    }
    match options.precision {
        Precision::Double => chain_in::<f64>(c1, c2, options),
        Precision::Single => chain_in::<f32>(c1, c2, options),
    }
}

fn chain_in<F: Real>(c1: &Chain, c2: &Chain, options: &LinkOptions) -> Result<LinkReport> {
    let p: Vec<Vec3<F>> = c1.points.iter().map(|v| v.cast()).collect();
    let q: Vec<Vec3<F>> = c2.points.iter().map(|v| v.cast()).collect();
    let (e1, e2) = (&c1.edges, &c2.edges);
    let pair = |a: usize, b: usize| -> Result<Option<SegmentPairAngle<F>>> {
        let (ea, eb) = (e1[a], e2[b]);
        let base = build_angle(p[ea.i], p[ea.j], q[eb.i], q[eb.j])?;
        let w = ea.w * eb.w;
        if w == 1 {
            return Ok(Some(base));
        }
        let triple = base.triple.scalar_mul(w)?;
        let k = w.unsigned_abs() as f64;
        Ok(Some(SegmentPairAngle {
            triple,
            sign: triple.sign(),
            err_bound: k * base.err_bound + (k - 1.0) * TRIPLE_SUM_ERROR,
            radii: base.radii,
        }))
    };
    finish_link(fold(e1.len(), |_| 0..e2.len(), pair, options)?, options)
}
