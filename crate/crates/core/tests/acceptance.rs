//! End-to-end acceptance run. Prints one PASS/FAIL line per criterion and
//! exits nonzero if any fails.

mod common;

use std::f64::consts::TAU;
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::process::ExitCode;
use std::time::{Duration, Instant};

use certilink::budget::{A_PRIORI_PAIR_ERROR, TRIPLE_SUM_ERROR};
use certilink::oracle;
use certilink::{
    a_priori_ok, bench, build_angle, chain_linking, generate, linking_number, linking_number_with,
    writhe, Chain, Edge, LinkOptions, LinkReport, PolygonalCurve, Precision, WritheReport,
};
use common::*;

const CORPUS: usize = 100_000;

struct Outcome {
    pass: bool,
    detail: String,
}

fn outcome(pass: bool, detail: String) -> Outcome {
    Outcome { pass, detail }
}

fn secs(d: Duration) -> f64 {
    d.as_secs_f64()
}

fn triple_algebra() -> Outcome {
    let start = Instant::now();
    let mut rng = rng(1001);
    let mut worst = 0.0f64;
    let mut violations = 0;
    for _ in 0..CORPUS {
        let a = random_triple(&mut rng);
        let b = random_triple(&mut rng);
        let c = a.add(&b).unwrap();
        let err = (dd_angle(&c) - (dd_angle(&a) + dd_angle(&b))).abs().hi / U;
        worst = worst.max(err);
        if err > TRIPLE_SUM_ERROR {
            violations += 1;
        }
    }
    let t = start.elapsed();
    outcome(
        violations == 0 && t < Duration::from_secs(10),
        format!("{CORPUS} sums, worst {worst:.3} u <= {TRIPLE_SUM_ERROR} u, {violations} violations, {:.2} s", secs(t)),
    )
}

struct PairCorpus {
    checked: usize,
    violations: usize,
    worst_ratio: f64,
    loose: usize,
    a_priori: usize,
    a_priori_violations: usize,
    a_priori_worst: f64,
    elapsed: Duration,
}

fn pair_corpus() -> PairCorpus {
    let start = Instant::now();
    let mut rng = rng(1002);
    let mut c = PairCorpus {
        checked: 0,
        violations: 0,
        worst_ratio: 0.0,
        loose: 0,
        a_priori: 0,
        a_priori_violations: 0,
        a_priori_worst: 0.0,
        elapsed: Duration::ZERO,
    };
    while c.checked < CORPUS {
        let (p, pn, q, qn) = mixed_segment_pair(&mut rng);
        if oracle::segment_distance(p, pn, q, qn) == 0.0 {
            continue;
        }
        let (Ok(a), Ok(reference)) = (build_angle(p, pn, q, qn), oracle::pair_angle(p, pn, q, qn)) else {
            continue;
        };
        let err = (dd_angle(&a.triple) - reference).abs().hi / U;
        c.checked += 1;
        if a.err_bound > 1e3 {
            c.loose += 1;
        }
        c.worst_ratio = c.worst_ratio.max(err / a.err_bound);
        if err > a.err_bound {
            c.violations += 1;
        }
        if a_priori_ok(p, pn, q, qn) {
            c.a_priori += 1;
            c.a_priori_worst = c.a_priori_worst.max(err);
            if err > A_PRIORI_PAIR_ERROR {
                c.a_priori_violations += 1;
            }
        }
    }
    c.elapsed = start.elapsed();
    c
}

fn a_posteriori(c: &PairCorpus) -> Outcome {
    outcome(
        c.violations == 0 && c.elapsed < Duration::from_secs(60),
        format!(
            "{} pairs, worst error/bound {:.3}, {} with bound > 1e3 u, {} violations, {:.2} s",
            c.checked,
            c.worst_ratio,
            c.loose,
            c.violations,
            secs(c.elapsed)
        ),
    )
}

fn a_priori(c: &PairCorpus) -> Outcome {
    outcome(
        c.a_priori > 0 && c.a_priori_violations == 0,
        format!(
            "{} a-priori pairs, worst {:.3} u <= {A_PRIORI_PAIR_ERROR} u, {} violations",
            c.a_priori, c.a_priori_worst, c.a_priori_violations
        ),
    )
}

struct KnownCase {
    name: String,
    expected: i64,
    projected: i64,
    report: LinkReport,
}

fn known_cases() -> (Vec<KnownCase>, Duration) {
    let start = Instant::now();
    let mut cases = Vec::new();
    for n in [64, 256, 1024] {
        let mut links: Vec<(String, i64, (PolygonalCurve, PolygonalCurve))> = vec![
            (format!("unlink N={n}"), 0, generate::unlink(n)),
            (format!("Hopf N={n}"), 1, generate::hopf(n)),
        ];
        for k in 1..=8 {
            links.push((format!("T(2,{}) N={n}", 2 * k), k as i64, generate::torus_link(k, n)));
        }
        for (name, expected, (p, q)) in links {
            let report = linking_number(&p, &q).unwrap();
            let projected = oracle::linking_by_projection(&p, &q, oracle::default_direction()).unwrap();
            cases.push(KnownCase {
                name,
                expected,
                projected,
                report,
            });
        }
    }
    (cases, start.elapsed())
}

fn known_links(cases: &[KnownCase], elapsed: Duration) -> Outcome {
    let bad: Vec<&str> = cases
        .iter()
        .filter(|c| {
            !c.report.result.certified
                || c.report.result.value != c.expected
                || c.report.result.value != c.projected
        })
        .map(|c| c.name.as_str())
        .collect();
    outcome(
        bad.is_empty() && elapsed < Duration::from_secs(30),
        format!("{} cases certified and matching the projection oracle, {:.2} s{}", cases.len() - bad.len(), secs(elapsed), failures(&bad)),
    )
}

fn residuals(cases: &[KnownCase]) -> Outcome {
    let mut worst = 0.0f64;
    let bad: Vec<&str> = cases
        .iter()
        .filter(|c| {
            let bound = c.report.result.err_bound_u * c.report.unit_roundoff();
            worst = worst.max(c.report.residual_angle.abs() / bound);
            c.report.residual_angle.abs() > bound
        })
        .map(|c| c.name.as_str())
        .collect();
    outcome(
        bad.is_empty(),
        format!("{} cases, worst |residual| / ((I+R)u) = {worst:.2e}{}", cases.len(), failures(&bad)),
    )
}

fn failures(names: &[&str]) -> String {
    if names.is_empty() {
        String::new()
    } else {
        format!("; failed: {}", names.join(", "))
    }
}

fn fuzz() -> Outcome {
    let start = Instant::now();
    let (mut certified, mut wrong) = (0, Vec::new());
    let total = 1000u64;
    for seed in 0..total {
        let n = 8 + (seed as usize * 7) % 57;
        let (p, q) = generate::random_link(seed, n);
        let r = linking_number(&p, &q).unwrap();
        if !r.result.certified {
            continue;
        }
        certified += 1;
        let expected = oracle::linking_by_projection(&p, &q, oracle::default_direction()).unwrap();
        if r.result.value != expected {
            wrong.push(seed);
        }
    }
    outcome(
        wrong.is_empty(),
        format!(
            "{total} random links, {certified} certified, {} disagreements {:?}, {:.2} s",
            wrong.len(),
            wrong,
            secs(start.elapsed())
        ),
    )
}

fn desk_scale() -> Outcome {
    let start = Instant::now();
    let (p, q) = generate::hopf(4096);
    let r = linking_number(&p, &q).unwrap();
    let t = start.elapsed();
    let double_ok = r.result.certified && r.result.value == 1 && t < Duration::from_secs(120);

    let single = LinkOptions {
        precision: Precision::Single,
        ..Default::default()
    };
    let rows = bench::sweep(8, 1024, &single).unwrap();
    let lost_at = rows.iter().find(|r| !r.certified).map(|r| r.n);
    let small_ok = rows.iter().filter(|r| r.n <= 64).all(|r| r.certified);
    let certified_correct = rows.iter().filter(|r| r.certified).all(|r| r.value == 1);
    let last_ok = rows.iter().filter(|r| r.certified).map(|r| r.n).max();
    outcome(
        double_ok && lost_at.is_some() && small_ok && certified_correct,
        format!(
            "double N=4096: L = {} certified={} bound {:.3e} u in {:.2} s; single: certified up to N={:?}, lost at N={:?}",
            r.result.value,
            r.result.certified,
            r.result.err_bound_u,
            secs(t),
            last_ok,
            lost_at
        ),
    )
}

/// Absolute bound on a writhe value.
fn writhe_bound(r: &WritheReport) -> f64 {
    r.result.err_bound_u * r.unit_roundoff() / TAU
}

fn writhe_checks() -> Outcome {
    let mut notes = Vec::new();
    let mut pass = true;
    for n in [8, 64, 256] {
        let r = writhe(&generate::regular_polygon(n)).unwrap();
        let scaled = r.result.err_bound_u * r.unit_roundoff();
        let ok = r.result.value.abs() <= writhe_bound(&r) && scaled < 1e-9;
        pass &= ok;
        notes.push(format!("planar N={n} |W|={:.1e} bound*u={scaled:.1e}", r.result.value.abs()));
    }
    let t = generate::trefoil(64);
    let w = writhe(&t).unwrap();
    let quad = oracle::writhe_by_quadrature(&t).unwrap().to_f64();
    let diff = (w.result.value - quad).abs();
    let ok = w.result.certified && diff <= writhe_bound(&w) + 1e-20;
    pass &= ok;
    notes.push(format!("trefoil W={:.15} |W-quad|={diff:.1e} <= {:.1e}", w.result.value, writhe_bound(&w)));

    let m = writhe(&generate::mirror(&t)).unwrap();
    let sum = (w.result.value + m.result.value).abs();
    let ok = sum <= writhe_bound(&w) + writhe_bound(&m);
    pass &= ok;
    notes.push(format!("mirror |W+W'|={sum:.1e}"));
    outcome(pass, notes.join("; "))
}

fn chains() -> Outcome {
    let (p, q) = generate::hopf(64);
    let options = LinkOptions::default();
    let curve = linking_number(&p, &q).unwrap();
    let base = curve.result.value;
    let weighted = |c: &PolygonalCurve, w: i64| {
        let n = c.len();
        Chain::new(c.vertices().to_vec(), (0..n).map(|i| Edge::new(i, (i + 1) % n, w)).collect()).unwrap()
    };
    let mut bad = Vec::new();
    for a in [-2, -1, 1, 2] {
        for b in [-2, -1, 1, 2] {
            let r = chain_linking(&weighted(&p, a), &weighted(&q, b), &options).unwrap();
            if !r.result.certified || r.result.value != a * b * base {
                bad.push(format!("({a},{b})"));
            }
        }
    }
    let unit = chain_linking(&weighted(&p, 1), &weighted(&q, 1), &options).unwrap();
    let exact = unit.result == curve.result && unit.residual_angle.to_bits() == curve.residual_angle.to_bits();
    outcome(
        bad.is_empty() && exact,
        format!("16 weight pairs on Hopf (base {base}), weight-1 identical: {exact}{}", failures(&bad.iter().map(String::as_str).collect::<Vec<_>>())),
    )
}

fn invariance() -> Outcome {
    let mut bad = Vec::new();
    let links = [
        ("Hopf", generate::hopf(128)),
        ("T(2,6)", generate::torus_link(3, 128)),
        ("random", generate::random_link(77, 48)),
    ];
    for (name, (p, q)) in &links {
        let base = linking_number(p, q).unwrap().result;
        for k in -10..=10 {
            let r = linking_number(&p.scaled_pow2(k), &q.scaled_pow2(k)).unwrap().result;
            if r.value != base.value || r.err_bound_u.to_bits() != base.err_bound_u.to_bits() {
                bad.push(format!("{name} scale 2^{k}"));
            }
        }
        if linking_number(&p.reversed(), q).unwrap().result.value != -base.value {
            bad.push(format!("{name} reversal"));
        }
        if linking_number(q, p).unwrap().result.value != base.value {
            bad.push(format!("{name} swap"));
        }
    }
    let (p, q) = generate::hopf(64);
    let par = LinkOptions {
        parallel: true,
        ..Default::default()
    };
    let a = linking_number_with(&p, &q, &par).unwrap().result;
    let b = linking_number_with(&p.scaled_pow2(7), &q.scaled_pow2(7), &par).unwrap().result;
    if a != b {
        bad.push("parallel scale".into());
    }
    outcome(
        bad.is_empty(),
        format!("3 links x 21 scales, reversal, swap{}", failures(&bad.iter().map(String::as_str).collect::<Vec<_>>())),
    )
}

fn guarded(f: impl FnOnce() -> Outcome) -> Outcome {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(o) => o,
        Err(e) => {
            let msg = e
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| e.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_default();
            outcome(false, format!("panicked: {msg}"))
        }
    }
}

fn main() -> ExitCode {
    let corpus = pair_corpus();
    let known = catch_unwind(known_cases).ok();
    let results: Vec<(&str, Outcome)> = vec![
        ("triple algebra", guarded(triple_algebra)),
        ("a-posteriori pair bound", guarded(|| a_posteriori(&corpus))),
        ("a-priori pair bound", guarded(|| a_priori(&corpus))),
        (
            "known links",
            match &known {
                Some((cases, t)) => guarded(|| known_links(cases, *t)),
                None => outcome(false, "panicked".into()),
            },
        ),
        (
            "residual",
            match &known {
                Some((cases, _)) => guarded(|| residuals(cases)),
                None => outcome(false, "panicked".into()),
            },
        ),
        ("certified implies correct", guarded(fuzz)),
        ("desk-scale limits", guarded(desk_scale)),
        ("writhe", guarded(writhe_checks)),
        ("chain bilinearity", guarded(chains)),
        ("invariance", guarded(invariance)),
    ];
    let mut failed = 0;
    for (i, (name, o)) in results.iter().enumerate() {
        let tag = if o.pass { "PASS" } else { "FAIL" };
        println!("[{tag}] {:>2} {name}: {}", i + 1, o.detail);
        if !o.pass {
            failed += 1;
        }
    }
    println!("{} of {} criteria passed", results.len() - failed, results.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
