//! Volumes of hyperbolic orthoschemes.
//!
//! A compact 3-orthoscheme with essential angles `α₁, α₂, α₃` has volume
//!
//! ```text
//! ¼ { L(α₁+θ) − L(α₁−θ) − L(π/2−α₂+θ) + L(π/2−α₂−θ) + L(α₃+θ) − L(α₃−θ) + 2L(π/2−θ) }
//! ```
//!
//! with `tan θ = √(cos²α₂ − sin²α₁ sin²α₃) / (cos α₁ cos α₃)`. The truncated
//! 5-orthoschemes `[5,3,3,3,w]` are reached by integrating the volume of the
//! 3-dimensional face `[5,3,β(t)]` along the one-parameter family whose last
//! dihedral angle runs from `π/w` to `2π/5`.

use crate::coxeter::{CoxeterSymbol, PrismScheme};
use crate::error::{Error, Result};
use crate::quadrature::{integrate, QuadratureSettings};
use crate::scalar::Scalar;
use crate::specfun::{lobachevsky_unchecked as lob, zeta3};

/// Radicands in `[−DOMAIN_TOL, 0)` are treated as zero.
const DOMAIN_TOL: f64 = 1e-12;

fn sqrt_radicand<T: Scalar>(value: T, what: &'static str) -> Result<T> {
    if value.is_nan() || value < -T::of(DOMAIN_TOL) {
        return Err(Error::Domain {
            what,
            value: value.to_f64_lossy(),
        });
    }
    Ok(value.max(T::zero()).sqrt())
}

/// `β(t) = arctan √(2 − cot²t)`.
pub fn beta_of_t<T: Scalar>(t: T) -> Result<T> {
    let cot = t.cos() / t.sin();
    let r = sqrt_radicand(T::of(2.0) - cot * cot, "beta(t): 2 - cot^2 t")?;
    Ok(r.atan())
}

/// `θ = arctan( √(1 − 4 sin²(π/5) sin²β) / (2 cos(π/5) cos β) )`.
pub fn theta_of_beta<T: Scalar>(beta: T) -> Result<T> {
    if !(beta > T::zero() && beta < T::FRAC_PI_2()) {
        return Err(Error::Domain {
            what: "theta(beta): beta outside (0, pi/2)",
            value: beta.to_f64_lossy(),
        });
    }
    let s5 = (T::PI() / T::of(5.0)).sin();
    let c5 = (T::PI() / T::of(5.0)).cos();
    let sb = beta.sin();
    let num = sqrt_radicand(
        T::one() - T::of(4.0) * s5 * s5 * sb * sb,
        "theta(beta): 1 - 4 sin^2(pi/5) sin^2 beta",
    )?;
    Ok((num / (T::of(2.0) * c5 * beta.cos())).atan())
}

/// Parameters of the face `[5,3,β(t)]` at integration point `t`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AngleParams<T> {
    pub t: T,
    pub beta: T,
    pub theta: T,
}

impl<T: Scalar> AngleParams<T> {
    pub fn at(t: T) -> Result<Self> {
        let beta = beta_of_t(t)?;
        let theta = theta_of_beta(beta)?;
        Ok(Self { t, beta, theta })
    }
}

/// Volume of the compact hyperbolic 3-orthoscheme with essential angles
/// `α₁, α₂, α₃`, each in `(0, π/2)`.
///
/// At the Euclidean boundary `cos²α₂ = sin²α₁ sin²α₃` the angle `θ` is zero
/// and the volume vanishes.
pub fn vol3_orthoscheme<T: Scalar>(alpha1: T, alpha2: T, alpha3: T) -> Result<T> {
    for a in [alpha1, alpha2, alpha3] {
        if !(a > T::zero() && a < T::FRAC_PI_2()) {
            return Err(Error::Domain {
                what: "orthoscheme angle outside (0, pi/2)",
                value: a.to_f64_lossy(),
            });
        }
    }
    let (s1, c1) = alpha1.sin_cos();
    let c2 = alpha2.cos();
    let (s3, c3) = alpha3.sin_cos();
    let r = sqrt_radicand(c2 * c2 - s1 * s1 * s3 * s3, "orthoscheme is not hyperbolic")?;
    let theta = (r / (c1 * c3)).atan();
    Ok(vol3_with_theta(alpha1, alpha2, alpha3, theta))
}

fn vol3_with_theta<T: Scalar>(a1: T, a2: T, a3: T, theta: T) -> T {
    let half_pi = T::FRAC_PI_2();
    let b = half_pi - a2;
    let sum = lob(a1 + theta) - lob(a1 - theta) - lob(b + theta) + lob(b - theta) + lob(a3 + theta)
        - lob(a3 - theta)
        + T::of(2.0) * lob(half_pi - theta);
    sum * T::of(0.25)
}

/// `Vol₃([5,3,β(t)])`, the integrand of the 5-volume.
pub fn prism_face_volume<T: Scalar>(t: T) -> Result<T> {
    let p = AngleParams::at(t)?;
    let pi = T::PI();
    Ok(vol3_with_theta(pi / T::of(5.0), pi / T::of(3.0), p.beta, p.theta))
}

/// Components of the 5-volume of a truncated orthoscheme.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Volume5Result<T> {
    pub value: T,
    /// `¼ ∫ Vol₃([5,3,β(t)]) dt`.
    pub integral_part: T,
    /// `ζ(3)/3200`.
    pub constant_part: T,
    pub estimated_error: T,
}

/// Lower end `π/w` of the integration range, `w` the last Coxeter weight.
pub fn lower_bound<T: Scalar>(scheme: PrismScheme) -> T {
    T::PI() / T::of(scheme.last_weight().into())
}

/// Upper end `2π/5`.
pub fn upper_bound<T: Scalar>() -> T {
    T::of(2.0) * T::PI() / T::of(5.0)
}

/// Volume of the truncated 5-orthoscheme `[5,3,3,3,3]` or `[5,3,3,3,4]`.
pub fn vol5_truncated<T: Scalar>(
    symbol: &CoxeterSymbol,
    settings: &QuadratureSettings<T>,
) -> Result<Volume5Result<T>> {
    vol5_truncated_observed(symbol, settings, |_, _| {})
}

/// [`vol5_truncated`], reporting every integrand evaluation `(t, Vol₃)`.
pub fn vol5_truncated_observed<T, O>(
    symbol: &CoxeterSymbol,
    settings: &QuadratureSettings<T>,
    observe: O,
) -> Result<Volume5Result<T>>
where
    T: Scalar,
    O: FnMut(T, T),
{
    let scheme = symbol.prism_scheme()?;
    vol5_from(lower_bound(scheme), settings, observe)
}

/// `¼ ∫_{lower}^{2π/5} Vol₃([5,3,β(t)]) dt + ζ(3)/3200`.
pub fn vol5_from<T, O>(lower: T, settings: &QuadratureSettings<T>, mut observe: O) -> Result<Volume5Result<T>>
where
    T: Scalar,
    O: FnMut(T, T),
{
    let integral = integrate(
        |t| {
            let v = prism_face_volume(t)?;
            observe(t, v);
            Ok(v)
        },
        lower,
        upper_bound(),
        settings,
    )?;
    let quarter = T::of(0.25);
    let integral_part = quarter * integral.value;
    let constant_part = zeta3::<T>() / T::of(3200.0);
    Ok(Volume5Result {
        value: integral_part + constant_part,
        integral_part,
        constant_part,
        estimated_error: quarter * integral.error,
    })
}

/// Volume `π²/10800` of the characteristic 4-simplex `[5,3,3,3]`.
pub fn vol4_base<T: Scalar>() -> T {
    T::PI() * T::PI() / T::of(10800.0)
}
