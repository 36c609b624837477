//! Size sweeps of the Hopf link for throughput and budget growth.

use std::io::Write;
use std::time::Instant;

use crate::error::Result;
use crate::generate;
use crate::linking::{linking_number_with, LinkOptions};

pub const CSV_HEADER: &str = "n,m,pairs,value,bound_u,certified,elapsed_ms";

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BenchRow {
    pub n: usize,
    pub m: usize,
    pub pairs: u64,
    pub value: i64,
    pub bound_u: f64,
    pub certified: bool,
    pub elapsed_ms: f64,
}

impl BenchRow {
    pub fn pairs_per_second(&self) -> f64 {
        self.pairs as f64 / (self.elapsed_ms.max(1e-6) * 1e-3)
    }

    pub fn csv_line(&self) -> String {
        format!(
            "{},{},{},{},{},{},{:.3}",
            self.n, self.m, self.pairs, self.value, self.bound_u, self.certified, self.elapsed_ms
        )
    }
}

/// Powers of two from `min` to `max`, inclusive; `min` is rounded up.
pub fn sizes(min: usize, max: usize) -> Vec<usize> {
    let mut n = min.max(4).next_power_of_two();
    let mut out = Vec::new();
    while n <= max {
        out.push(n);
        n *= 2;
    }
    out
}

/// Times the Hopf link at one size.
pub fn run_one(n: usize, options: &LinkOptions) -> Result<BenchRow> {
    let (p, q) = generate::hopf(n);
    let start = Instant::now();
    let r = linking_number_with(&p, &q, options)?;
    let elapsed_ms = start.elapsed().as_secs_f64() * 1e3;
    Ok(BenchRow {
        n,
        m: n,
        pairs: r.pairs,
        value: r.result.value,
        bound_u: r.result.err_bound_u,
        certified: r.result.certified,
        elapsed_ms,
    })
}

pub fn sweep(min: usize, max: usize, options: &LinkOptions) -> Result<Vec<BenchRow>> {
    sizes(min, max).into_iter().map(|n| run_one(n, options)).collect()
}

pub fn write_csv(rows: &[BenchRow], mut out: impl Write) -> std::io::Result<()> {
    writeln!(out, "{CSV_HEADER}")?;
    for r in rows {
        writeln!(out, "{}", r.csv_line())?;
    }
    Ok(())
}

/// Least-squares slope of bound against pair count through the origin.
pub fn budget_slope(rows: &[BenchRow]) -> f64 {
    let (num, den) = rows.iter().fold((0.0, 0.0), |(a, b), r| {
        let x = r.pairs as f64;
        (a + x * r.bound_u, b + x * x)
    });
    num / den
}
