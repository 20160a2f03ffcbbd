//! Projective model of hyperbolic n-space.
//!
//! A point is a ray of `R^{n+1}` equipped with the form
//! `⟨x, y⟩ = −x⁰y⁰ + x¹y¹ + … + xⁿyⁿ`. Rays inside the light cone are proper
//! points of the hyperbolic space, rays on it are points at infinity, and the
//! remaining rays are outer points, each of which is the pole of a hyperplane.

use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// Relative band `|⟨x,x⟩| ≤ tol·‖x‖²` inside which a point counts as ideal.
pub const DEFAULT_IDEAL_TOL: f64 = 1e-9;

/// Homogeneous coordinates `(x⁰, x¹, …, xⁿ)` of a projective point.
#[derive(Debug, Clone, PartialEq)]
pub struct LorentzVector<T> {
    coords: Vec<T>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum PointClass {
    Proper,
    Ideal,
    Outer,
}

impl<T: Scalar> LorentzVector<T> {
    /// Fails on fewer than two coordinates or on the zero vector.
    pub fn new(coords: Vec<T>) -> Result<Self> {
        if coords.len() < 2 {
            return Err(Error::TooFewCoordinates(coords.len()));
        }
        if coords.iter().all(|c| c.is_zero()) {
            return Err(Error::ZeroVector);
        }
        Ok(Self { coords })
    }

    /// Unit vector along axis `k` in `R^{1,n}`.
    pub fn axis(n: usize, k: usize) -> Self {
        let mut coords = vec![T::zero(); n + 1];
        coords[k] = T::one();
        Self { coords }
    }

    pub fn coords(&self) -> &[T] {
        &self.coords
    }

    /// Dimension `n` of the hyperbolic space the vector lives over.
    pub fn dim(&self) -> usize {
        self.coords.len() - 1
    }

    pub fn norm_sq(&self) -> T {
        lorentz_product_unchecked(&self.coords, &self.coords)
    }

    pub fn euclidean_norm_sq(&self) -> T {
        self.coords.iter().fold(T::zero(), |s, &c| s + c * c)
    }

    /// `a·x + b·y`. Fails on a dimension mismatch or a zero result.
    pub fn combine(a: T, x: &Self, b: T, y: &Self) -> Result<Self> {
        check_dims(x, y)?;
        let coords = x
            .coords
            .iter()
            .zip(&y.coords)
            .map(|(&xi, &yi)| a * xi + b * yi)
            .collect();
        Self::new(coords)
    }

    pub fn scaled(&self, s: T) -> Result<Self> {
        Self::new(self.coords.iter().map(|&c| c * s).collect())
    }

    /// `true` when `y` lies on the polar hyperplane `pol(self)`, i.e. the two
    /// are conjugate with respect to the quadric, within a relative band.
    pub fn is_conjugate(&self, y: &Self, tol: T) -> Result<bool> {
        let p = lorentz_product(self, y)?;
        let scale = (self.euclidean_norm_sq() * y.euclidean_norm_sq()).sqrt();
        Ok(p.abs() <= tol * scale)
    }
}

fn check_dims<T>(x: &LorentzVector<T>, y: &LorentzVector<T>) -> Result<()> {
    if x.coords.len() != y.coords.len() {
        return Err(Error::DimensionMismatch {
            left: x.coords.len(),
            right: y.coords.len(),
        });
    }
    Ok(())
}

fn lorentz_product_unchecked<T: Scalar>(x: &[T], y: &[T]) -> T {
    let time = -(x[0] * y[0]);
    x[1..]
        .iter()
        .zip(&y[1..])
        .fold(time, |s, (&a, &b)| s + a * b)
}

/// `⟨x, y⟩ = −x⁰y⁰ + Σ xᵏyᵏ`.
pub fn lorentz_product<T: Scalar>(x: &LorentzVector<T>, y: &LorentzVector<T>) -> Result<T> {
    check_dims(x, y)?;
    Ok(lorentz_product_unchecked(&x.coords, &y.coords))
}

/// Proper, ideal or outer according to the sign of `⟨x,x⟩`, with
/// `|⟨x,x⟩| ≤ tol·‖x‖²` mapped to ideal.
pub fn classify_point<T: Scalar>(x: &LorentzVector<T>, tol: T) -> Result<PointClass> {
    let e = x.euclidean_norm_sq();
    if e.is_zero() {
        return Err(Error::ZeroVector);
    }
    let q = x.norm_sq();
    Ok(if q.abs() <= tol * e {
        PointClass::Ideal
    } else if q < T::zero() {
        PointClass::Proper
    } else {
        PointClass::Outer
    })
}

/// `acosh(arg)` as `ln(arg + √(arg² − 1))`. Arguments in `[1 − tol, 1)` are
/// clamped to 1; anything lower is an error.
pub fn acosh_clamped<T: Scalar>(arg: T, tol: T) -> Result<T> {
    if arg.is_nan() || arg < T::one() - tol {
        return Err(Error::CoshBelowOne(arg.to_f64_lossy()));
    }
    let c = arg.max(T::one());
    Ok((c + (c * c - T::one()).sqrt()).ln())
}

/// Hyperbolic distance between proper points, in units with curvature −1.
pub fn proper_distance<T: Scalar>(x: &LorentzVector<T>, y: &LorentzVector<T>) -> Result<T> {
    proper_distance_with_tol(x, y, T::of(DEFAULT_IDEAL_TOL))
}

pub fn proper_distance_with_tol<T: Scalar>(
    x: &LorentzVector<T>,
    y: &LorentzVector<T>,
    tol: T,
) -> Result<T> {
    check_dims(x, y)?;
    for v in [x, y] {
        if classify_point(v, tol)? != PointClass::Proper {
            return Err(Error::NotProper(v.norm_sq().to_f64_lossy()));
        }
    }
    let xy = lorentz_product_unchecked(&x.coords, &y.coords);
    let cosh = (-xy / (x.norm_sq() * y.norm_sq()).sqrt()).abs();
    acosh_clamped(cosh, tol)
}
