//! Exit criteria of the project, one check each, printed as a pass/fail
//! ledger. Run with `cargo test -p hypack-cli --test acceptance -- --nocapture`
//! to see the lines.

#[path = "../../core/tests/common/mod.rs"]
mod common;

use std::f64::consts::PI;
use std::process::Command;
use std::time::{Duration, Instant};

use hypack::coxeter::{invert, parse_symbol, schlafli_matrix, signature};
use hypack::lorentz::PointClass;
use hypack::volume::vol5_truncated_observed;
use hypack::{
    density, footpoint, lobachevsky, optimal_height, piece_volume, proper_distance, vertex,
    vol4_base, vol5_truncated, Angle, Matrix, QuadratureSettings64,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const SYMBOLS: [&str; 2] = ["[5,3,3,3,3]", "[5,3,3,3,4]"];

// published table, tolerance 1e-6 absolute
const TABLE_TOL: f64 = 1e-6;
const PUBLISHED: [(&str, [f64; 4]); 2] = [
    ("[5,3,3,3,3]", [0.000_767_30, 0.383_598_61, 0.000_387_60, 0.505_144_81]),
    ("[5,3,3,3,4]", [0.001_984_69, 0.530_637_53, 0.000_590_01, 0.297_279_79]),
];
const TABLE_TIME_LIMIT: Duration = Duration::from_secs(5);
const KNOWN_MAX_DENSITY_5D: f64 = 0.505_144_81;
const CLOSURE_TOL: f64 = 1e-9;
const HEIGHT_ROUTES_TOL: f64 = 1e-10;
const PERIOD_TOL: f64 = 1e-12;
const DUPLICATION_TOL: f64 = 1e-11;
const QUADRATURE_ORACLE_TOL: f64 = 1e-10;
const ARGMAX_TOL: f64 = 1e-6;
const RESIDUAL_TOL: f64 = 1e-10;
const TOL_HALVING_TOL: f64 = 1e-10;

struct Ledger {
    failures: Vec<String>,
}

impl Ledger {
    fn check(&mut self, id: &str, name: &str, result: Result<String, String>) {
        match result {
            Ok(detail) => println!("[PASS] {id} {name}: {detail}"),
            Err(detail) => {
                println!("[FAIL] {id} {name}: {detail}");
                self.failures.push(format!("{id} {name}: {detail}"));
            }
        }
    }
}

fn ensure(ok: bool, detail: String) -> Result<String, String> {
    if ok {
        Ok(detail)
    } else {
        Err(detail)
    }
}

fn l(x: f64) -> f64 {
    lobachevsky(Angle::new(x).unwrap())
}

fn table_reproduction() -> Result<String, String> {
    let start = Instant::now();
    let out = Command::new(env!("CARGO_BIN_EXE_hypack"))
        .args(["table", "--format", "json"])
        .output()
        .map_err(|e| e.to_string())?;
    let elapsed = start.elapsed();
    if !out.status.success() {
        return Err(format!("exit status {:?}", out.status.code()));
    }
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).map_err(|e| e.to_string())?;
    let mut worst = 0.0f64;
    for (symbol, expected) in PUBLISHED {
        let row = &v[symbol];
        for (key, want) in ["vol5", "height", "piece_volume", "density"].iter().zip(expected) {
            let got = row[key].as_f64().ok_or(format!("missing {symbol}.{key}"))?;
            let diff = (got - want).abs();
            if diff > TABLE_TOL {
                return Err(format!("{symbol}.{key} = {got}, published {want}"));
            }
            worst = worst.max(diff);
        }
    }
    ensure(
        elapsed < TABLE_TIME_LIMIT,
        format!("8 cells within {TABLE_TOL:e} (max deviation {worst:.1e}), {} ms", elapsed.as_millis()),
    )
}

fn known_max_density(q: &QuadratureSettings64) -> Result<String, String> {
    let d = density(&parse_symbol(SYMBOLS[0]).unwrap(), q).map_err(|e| e.to_string())?.density;
    ensure((d - KNOWN_MAX_DENSITY_5D).abs() <= TABLE_TOL, format!("delta = {d:.10}"))
}

fn alias(q: &QuadratureSettings64) -> Result<String, String> {
    let a = density(&parse_symbol("[5,3,3,3,3^{1,1}]").unwrap(), q).map_err(|e| e.to_string())?;
    let b = density(&parse_symbol("[5,3,3,3,3]").unwrap(), q).map_err(|e| e.to_string())?;
    ensure(
        a.density.to_bits() == b.density.to_bits(),
        format!("{} vs {}", a.density, b.density),
    )
}

fn closure(q: &QuadratureSettings64) -> Result<String, String> {
    let mut worst = 0.0f64;
    for s in SYMBOLS {
        let sym = parse_symbol(s).unwrap();
        let r = density(&sym, q).map_err(|e| e.to_string())?;
        let pv = piece_volume(PI * PI / 10800.0, r.height, 1.0).map_err(|e| e.to_string())?;
        let v5 = vol5_truncated(&sym, q).map_err(|e| e.to_string())?.value;
        worst = worst.max((pv / v5 - r.density).abs());
    }
    ensure(worst <= CLOSURE_TOL, format!("max |piece/vol5 - delta| = {worst:.1e}"))
}

fn height_routes() -> Result<String, String> {
    let mut worst = 0.0f64;
    for s in SYMBOLS {
        let g = invert(&schlafli_matrix::<f64>(&parse_symbol(s).unwrap())).map_err(|e| e.to_string())?;
        let closed = optimal_height(&g).map_err(|e| e.to_string())?;
        let foot = footpoint(&g, 4, 5).map_err(|e| e.to_string())?;
        let a4 = vertex(&g, 4).map_err(|e| e.to_string())?;
        let routed = proper_distance(&foot, &a4).map_err(|e| e.to_string())?;
        worst = worst.max((closed - routed).abs());
    }
    ensure(worst <= HEIGHT_ROUTES_TOL, format!("max difference {worst:.1e}"))
}

fn base_volume() -> Result<String, String> {
    let v = vol4_base::<f64>();
    let defect = 10800.0 * v - PI * PI;
    let shown = format!("{v:.8}");
    ensure(
        defect.abs() <= f64::EPSILON * PI * PI && shown == "0.00091385",
        format!("10800*V - pi^2 = {defect:e}, displayed {shown}"),
    )
}

fn lobachevsky_suite() -> Result<String, String> {
    let mut rng = ChaCha8Rng::seed_from_u64(0x4c6f_6261);
    for _ in 0..1000 {
        let w: f64 = rng.gen_range(0.0..10.0);
        if l(-w) != -l(w) {
            return Err(format!("oddness fails at {w}"));
        }
        let p = (l(w + PI) - l(w)).abs();
        if p > PERIOD_TOL {
            return Err(format!("periodicity off by {p:e} at {w}"));
        }
        let d: f64 = rng.gen_range(1e-9..PI / 2.0);
        let dup = (l(2.0 * d) - (2.0 * l(d) - 2.0 * l(PI / 2.0 - d))).abs();
        if dup > DUPLICATION_TOL {
            return Err(format!("duplication off by {dup:e} at {d}"));
        }
    }
    let mut worst = 0.0f64;
    for _ in 0..100 {
        let w: f64 = rng.gen_range(1e-9..PI);
        worst = worst.max((l(w) - common::lobachevsky_quadrature(w)).abs());
    }
    if worst > QUADRATURE_ORACLE_TOL {
        return Err(format!("quadrature oracle differs by {worst:e}"));
    }
    let coarse = (0..=3142)
        .map(|i| i as f64 * 1e-3)
        .max_by(|a, b| l(*a).total_cmp(&l(*b)))
        .unwrap();
    let argmax = (-20_000..=20_000)
        .map(|i| coarse + i as f64 * 1e-7)
        .max_by(|a, b| l(*a).total_cmp(&l(*b)))
        .unwrap();
    ensure(
        (argmax - PI / 6.0).abs() <= ARGMAX_TOL,
        format!("oracle diff {worst:.1e}, argmax - pi/6 = {:.1e}", argmax - PI / 6.0),
    )
}

fn rows(m: &Matrix<f64>) -> Vec<Vec<f64>> {
    (0..m.order()).map(|i| m.row(i).to_vec()).collect()
}

fn matrix_suite() -> Result<String, String> {
    let mut detail = Vec::new();
    for s in SYMBOLS {
        let c = schlafli_matrix::<f64>(&parse_symbol(s).unwrap());
        let g = invert(&c).map_err(|e| e.to_string())?;
        if g.residual() > RESIDUAL_TOL {
            return Err(format!("{s}: residual {:e}", g.residual()));
        }
        let signs: Vec<PointClass> = (0..6).map(|i| g.vertex_class(i, 0.0)).collect();
        let mut want = vec![PointClass::Proper; 5];
        want.push(PointClass::Outer);
        if signs != want {
            return Err(format!("{s}: vertex signs {signs:?}"));
        }
        let sig = signature(c.entries(), 1e-12);
        let oracle_neg = common::eigenvalues(&rows(c.entries())).iter().filter(|x| **x < 0.0).count();
        if sig.negative != 1 || oracle_neg != 1 || sig.zero != 0 {
            return Err(format!("{s}: signature {sig:?}, oracle negatives {oracle_neg}"));
        }
        detail.push(format!("{s} residual {:.1e}", g.residual()));
    }
    Ok(format!("{}; signs (-,-,-,-,-,+); one negative eigenvalue", detail.join(", ")))
}

fn quadrature_robustness() -> Result<String, String> {
    let coarse = QuadratureSettings64::new(1e-10, 60).unwrap();
    let fine = QuadratureSettings64::new(5e-11, 60).unwrap();
    let mut worst = 0.0f64;
    let mut count = 0;
    for s in SYMBOLS {
        let sym = parse_symbol(s).unwrap();
        let mut nodes = Vec::new();
        let a = vol5_truncated_observed(&sym, &coarse, |t, v| nodes.push((t, v))).map_err(|e| e.to_string())?;
        let b = vol5_truncated(&sym, &fine).map_err(|e| e.to_string())?;
        worst = worst.max((a.value - b.value).abs());
        if let Some((t, v)) = nodes.iter().find(|(_, v)| !(v.is_finite() && *v > 0.0)) {
            return Err(format!("{s}: integrand {v} at t = {t}"));
        }
        count += nodes.len();
        for t in [hypack::volume::lower_bound::<f64>(sym.prism_scheme().unwrap()), 2.0 * PI / 5.0] {
            let v = hypack::volume::prism_face_volume(t).map_err(|e| e.to_string())?;
            if !(v.is_finite() && v > 0.0) {
                return Err(format!("{s}: endpoint integrand {v} at t = {t}"));
            }
        }
    }
    ensure(
        worst <= TOL_HALVING_TOL,
        format!("halving changes Vol5 by {worst:.1e}; {count} nodes and 4 endpoints positive"),
    )
}

#[test]
fn acceptance_criteria() {
    let q = QuadratureSettings64::default();
    let mut ledger = Ledger { failures: Vec::new() };
    ledger.check("C1", "table reproduction", table_reproduction());
    ledger.check("C2", "known maximal density in dimension 5", known_max_density(&q));
    ledger.check("C3", "branched alias equals [5,3,3,3,3]", alias(&q));
    ledger.check("C4", "internal closure", closure(&q));
    ledger.check("C5", "height cross-check", height_routes());
    ledger.check("C6", "base volume", base_volume());
    ledger.check("C7", "Lobachevsky suite", lobachevsky_suite());
    ledger.check("C8", "matrix suite", matrix_suite());
    ledger.check("C9", "quadrature robustness", quadrature_robustness());
    println!("[EXCL] C10 global optimality over all hyperball packings: not checkable, excluded");
    assert!(ledger.failures.is_empty(), "failed criteria:\n{}", ledger.failures.join("\n"));
}
