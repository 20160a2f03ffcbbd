//! Independent reference computations used as test oracles. Nothing here
//! calls into the crate's quadrature, series or linear algebra.

#![allow(dead_code)]

use std::f64::consts::PI;

use nalgebra::{DMatrix, Matrix4, SymmetricEigen};

/// Nodes and weights of the `n`-point Gauss–Legendre rule on `[-1, 1]`,
/// by Newton iteration on `P_n`.
pub fn gauss_legendre(n: usize) -> Vec<(f64, f64)> {
    (1..=n)
        .map(|i| {
            let mut x = (PI * (i as f64 - 0.25) / (n as f64 + 0.5)).cos();
            let mut dp = 0.0;
            for _ in 0..100 {
                let (mut p0, mut p1) = (1.0, x);
                for k in 2..=n {
                    let k = k as f64;
                    let p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
                    p0 = p1;
                    p1 = p2;
                }
                dp = n as f64 * (x * p1 - p0) / (x * x - 1.0);
                let dx = p1 / dp;
                x -= dx;
                if dx.abs() < 1e-16 {
                    break;
                }
            }
            (x, 2.0 / ((1.0 - x * x) * dp * dp))
        })
        .collect()
}

/// Composite Gauss–Legendre with `panels` equal panels.
pub fn composite_gl(f: impl Fn(f64) -> f64, a: f64, b: f64, panels: usize, order: usize) -> f64 {
    let rule = gauss_legendre(order);
    let h = (b - a) / panels as f64;
    (0..panels)
        .map(|p| {
            let lo = a + p as f64 * h;
            let mid = lo + 0.5 * h;
            rule.iter().map(|&(x, w)| w * f(mid + 0.5 * h * x)).sum::<f64>() * 0.5 * h
        })
        .sum()
}

/// `−∫₀^ω log|2 sin t| dt` for `0 < ω ≤ π` by quadrature. The logarithmic
/// endpoint singularities are split off as `log t + log(π − t)` and
/// integrated in closed form; the smooth remainder goes to Gauss–Legendre.
pub fn lobachevsky_quadrature(omega: f64) -> f64 {
    assert!(omega > 0.0 && omega <= PI);
    let smooth = |t: f64| {
        let u = PI - t;
        let s = if t < 0.5 * PI { t.sin() } else { u.sin() };
        (2.0 * s / (t * u)).ln()
    };
    let log_t = omega * omega.ln() - omega;
    let u = PI - omega;
    let ulogu = if u > 0.0 { u * u.ln() } else { 0.0 };
    let log_pi_minus_t = -ulogu + u + PI * PI.ln() - PI;
    -(log_t + log_pi_minus_t + composite_gl(smooth, 0.0, omega, 32, 20))
}

/// `Vol₃([5,3,β])` by integrating the Schläfli differential
/// `dV = −½ ℓ(β) dβ` from the Euclidean boundary, where the volume vanishes.
/// `ℓ` is the length of the edge carrying the angle `β`, read off the
/// inverse of the 4×4 Gram matrix.
pub fn vol3_schlafli_oracle(beta: f64) -> f64 {
    let edge = |b: f64| {
        let c5 = (PI / 5.0).cos();
        let g = Matrix4::new(
            1.0, -c5, 0.0, 0.0,
            -c5, 1.0, -0.5, 0.0,
            0.0, -0.5, 1.0, -b.cos(),
            0.0, 0.0, -b.cos(), 1.0,
        );
        let h = g.try_inverse().expect("nonsingular Gram matrix");
        (h[(0, 1)].abs() / (h[(0, 0)] * h[(1, 1)]).sqrt()).acosh()
    };
    let euclidean = (1.0 / (2.0 * (PI / 5.0).sin())).asin();
    // b = euclidean − s², db = −2s ds
    composite_gl(|s| edge(euclidean - s * s) * s, 0.0, (euclidean - beta).sqrt(), 16, 20)
}

/// Eigenvalues from nalgebra's symmetric eigensolver.
pub fn eigenvalues(rows: &[Vec<f64>]) -> Vec<f64> {
    let n = rows.len();
    let m = DMatrix::from_fn(n, n, |i, j| rows[i][j]);
    let mut e: Vec<f64> = SymmetricEigen::new(m).eigenvalues.iter().copied().collect();
    e.sort_by(|a, b| a.partial_cmp(b).unwrap());
    e
}

/// Number of negative eigenvalues by Sylvester's law of inertia: sign
/// changes in the sequence of leading principal minors `1, D₁, …, D_n`.
pub fn negative_inertia_by_minors(rows: &[Vec<f64>]) -> usize {
    let n = rows.len();
    let m = DMatrix::from_fn(n, n, |i, j| rows[i][j]);
    let mut prev = 1.0f64;
    let mut changes = 0;
    for k in 1..=n {
        let d = m.view((0, 0), (k, k)).determinant();
        assert!(d.abs() > 1e-12, "vanishing leading minor");
        if d.signum() != prev.signum() {
            changes += 1;
        }
        prev = d;
    }
    changes
}

/// Direct inverse for residual cross-checks.
pub fn inverse(rows: &[Vec<f64>]) -> DMatrix<f64> {
    let n = rows.len();
    DMatrix::from_fn(n, n, |i, j| rows[i][j]).try_inverse().unwrap()
}
