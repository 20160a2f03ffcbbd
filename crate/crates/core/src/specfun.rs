//! Lobachevsky function and Apéry's constant.

#![allow(clippy::excessive_precision)]

use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// Apéry's constant `ζ(3) = Σ 1/k³`.
///
/// Summed to `k = 10⁴` and corrected with the Euler–Maclaurin tail
/// `1/(2N²) − 1/(2N³) + 1/(4N⁴)`, then checked against a 30-digit
/// evaluation.
pub const ZETA3: f64 = 1.202_056_903_159_594_3;

/// `ζ(2k)` for `k = 1..=30`.
const ZETA_EVEN: [f64; 30] = [
    1.644_934_066_848_226_4,
    1.082_323_233_711_138_2,
    1.017_343_061_984_449_1,
    1.004_077_356_197_944_3,
    1.000_994_575_127_818_1,
    1.000_246_086_553_308,
    1.000_061_248_135_058_7,
    1.000_015_282_259_408_7,
    1.000_003_817_293_265,
    1.000_000_953_962_033_9,
    1.000_000_238_450_502_7,
    1.000_000_059_608_189_1,
    1.000_000_014_901_554_8,
    1.000_000_003_725_334,
    1.000_000_000_931_327_4,
    1.000_000_000_232_831_2,
    1.000_000_000_058_207_7,
    1.000_000_000_014_551_9,
    1.000_000_000_003_638,
    1.000_000_000_000_909_5,
    1.000_000_000_000_227_4,
    1.000_000_000_000_056_8,
    1.000_000_000_000_014_2,
    1.000_000_000_000_003_6,
    1.000_000_000_000_000_9,
    1.000_000_000_000_000_2,
    1.000_000_000_000_000_1,
    1.0,
    1.0,
    1.0,
];

pub fn zeta3<T: Scalar>() -> T {
    T::of(ZETA3)
}

/// An angle in radians; always finite.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd)]
pub struct Angle<T>(T);

impl<T: Scalar> Angle<T> {
    pub fn new(radians: T) -> Result<Self> {
        if !radians.is_finite() {
            return Err(Error::NonFinite(radians.to_f64_lossy()));
        }
        Ok(Self(radians))
    }

    pub fn radians(self) -> T {
        self.0
    }
}

/// `L(ω) = −∫₀^ω log|2 sin t| dt` for any finite `ω`.
pub fn lobachevsky<T: Scalar>(omega: Angle<T>) -> T {
    lobachevsky_unchecked(omega.radians())
}

/// Same as [`lobachevsky`] but on a bare scalar. Non-finite input gives NaN.
pub(crate) fn lobachevsky_unchecked<T: Scalar>(omega: T) -> T {
    if omega.is_sign_negative() {
        return -lobachevsky_unchecked(-omega);
    }
    // reduce to [0, π/2] via L(ω + π) = L(ω) and L(π − ω) = −L(ω)
    let pi = T::PI();
    let mut w = omega - pi * (omega / pi).floor();
    let mut sign = T::one();
    if w > T::FRAC_PI_2() {
        w = pi - w;
        sign = -sign;
    }
    sign * lobachevsky_reduced(w)
}

/// `L(ω) = ω − ω ln(2ω) + ω Σ_{k≥1} ζ(2k)/(k(2k+1)) (ω/π)^{2k}` for
/// `0 ≤ ω ≤ π/2`, where the ratio `(ω/π)² ≤ 1/4`.
fn lobachevsky_reduced<T: Scalar>(w: T) -> T {
    if w.is_zero() {
        return T::zero();
    }
    let x2 = {
        let x = w / T::PI();
        x * x
    };
    let mut power = T::one();
    let mut series = T::zero();
    for (i, &z) in ZETA_EVEN.iter().enumerate() {
        let k = T::of_usize(i + 1);
        power = power * x2;
        let term = T::of(z) * power / (k * (k + k + T::one()));
        series = series + term;
        if term < T::epsilon() * T::of(0.25) * series {
            break;
        }
    }
    w * (T::one() - (w + w).ln() + series)
}
