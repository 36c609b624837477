//! JSON curve and chain files.
//!
//! Curve file: `{"curves": [{"name": ..., "vertices": [[x, y, z], ...]}]}`,
//! closure implicit. Chain file: `{"points": [[x, y, z], ...], "chains":
//! [{"name": ..., "edges": [[i, j, w], ...]}]}` with 0-based indices.
//! Numbers are written in shortest round-trip form, so reading a written
//! file gives back bit-identical coordinates.

use std::fs;
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::chain::{Chain, Edge};
use crate::error::{Error, Result};
use crate::linking::PolygonalCurve;
use crate::vec3::Point3;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct NamedCurve {
    pub name: String,
    pub vertices: Vec<[f64; 3]>,
}

#[derive(Debug, Clone, PartialEq, Default, Serialize, Deserialize)]
pub struct CurveFile {
    pub curves: Vec<NamedCurve>,
}

impl CurveFile {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn push(&mut self, name: impl Into<String>, curve: &PolygonalCurve) {
        self.curves.push(NamedCurve {
            name: name.into(),
            vertices: curve.vertices().iter().map(|&v| v.into()).collect(),
        });
    }

    pub fn with(mut self, name: impl Into<String>, curve: &PolygonalCurve) -> Self {
        self.push(name, curve);
        self
    }

    /// Parses and validates every curve.
    pub fn from_json(text: &str) -> Result<Self> {
        let file: CurveFile = serde_json::from_str(text)?;
        file.validate()?;
        Ok(file)
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("curve file serializes");
        s.push('\n');
        s
    }

    pub fn load(path: impl AsRef<Path>) -> Result<Self> {
        Self::from_json(&fs::read_to_string(path)?)
    }

    pub fn save(&self, path: impl AsRef<Path>) -> Result<()> {
        fs::write(path, self.to_json())?;
        Ok(())
    }

    pub fn validate(&self) -> Result<()> {
        for (i, c) in self.curves.iter().enumerate() {
            PolygonalCurve::from_coords(&c.vertices)
                .map_err(|e| Error::InvalidInput(format!("curve {:?} (#{i}): {e}", c.name)))?;
        }
        Ok(())
    }

    pub fn names(&self) -> impl Iterator<Item = &str> {
        self.curves.iter().map(|c| c.name.as_str())
    }

    pub fn curve(&self, name: &str) -> Result<PolygonalCurve> {
        let c = self
            .curves
            .iter()
            .find(|c| c.name == name)
            .ok_or_else(|| Error::UnknownCurve(name.to_string()))?;
        PolygonalCurve::from_coords(&c.vertices)
    }

    pub fn curve_at(&self, index: usize) -> Result<PolygonalCurve> {
        let c = self.curves.get(index).ok_or_else(|| {
            Error::InvalidInput(format!(
                "file holds {} curve(s), curve #{index} requested",
                self.curves.len()
            ))
        })?;
        PolygonalCurve::from_coords(&c.vertices)
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct NamedChain {
    pub name: String,
    pub edges: Vec<(usize, usize, i64)>,
}

#[derive(Debug, Clone, PartialEq, Default, Serialize, Deserialize)]
pub struct ChainFile {
    pub points: Vec<[f64; 3]>,
    pub chains: Vec<NamedChain>,
}

impl ChainFile {
    pub fn new(points: Vec<[f64; 3]>) -> Self {
        ChainFile {
            points,
            chains: Vec::new(),
        }
    }

    /// Appends a chain whose edges index this file's points.
    pub fn push_edges(&mut self, name: impl Into<String>, edges: &[Edge]) {
        self.chains.push(NamedChain {
            name: name.into(),
            edges: edges.iter().map(|e| (e.i, e.j, e.w)).collect(),
        });
    }

    /// Appends a curve's vertices as new points and its segments as a
    /// weight-`w` chain over them.
    pub fn push_curve(&mut self, name: impl Into<String>, curve: &PolygonalCurve, w: i64) {
        let base = self.points.len();
        let n = curve.len();
        self.points.extend(curve.vertices().iter().map(|&v| <[f64; 3]>::from(v)));
        self.chains.push(NamedChain {
            name: name.into(),
            edges: (0..n).map(|i| (base + i, base + (i + 1) % n, w)).collect(),
        });
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let file: ChainFile = serde_json::from_str(text)?;
        file.validate()?;
        Ok(file)
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("chain file serializes");
        s.push('\n');
        s
    }

    pub fn load(path: impl AsRef<Path>) -> Result<Self> {
        Self::from_json(&fs::read_to_string(path)?)
    }

    pub fn save(&self, path: impl AsRef<Path>) -> Result<()> {
        fs::write(path, self.to_json())?;
        Ok(())
    }

    pub fn validate(&self) -> Result<()> {
        for c in &self.chains {
            self.build(c)?;
        }
        Ok(())
    }

    pub fn names(&self) -> impl Iterator<Item = &str> {
        self.chains.iter().map(|c| c.name.as_str())
    }

    fn build(&self, c: &NamedChain) -> Result<Chain> {
        let points = self.points.iter().map(|&p| Point3::from(p)).collect();
        let edges = c.edges.iter().map(|&(i, j, w)| Edge::new(i, j, w)).collect();
        Chain::new(points, edges).map_err(|e| Error::InvalidInput(format!("chain {:?}: {e}", c.name)))
    }

    pub fn chain(&self, name: &str) -> Result<Chain> {
        let c = self
            .chains
            .iter()
            .find(|c| c.name == name)
            .ok_or_else(|| Error::UnknownCurve(name.to_string()))?;
        self.build(c)
    }

    pub fn chain_at(&self, index: usize) -> Result<Chain> {
        let c = self.chains.get(index).ok_or_else(|| {
            Error::InvalidInput(format!(
                "file holds {} chain(s), chain #{index} requested",
                self.chains.len()
            ))
        })?;
        self.build(c)
    }
}
