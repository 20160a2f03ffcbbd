//! Globally adaptive Gauss–Kronrod integration (7-point Gauss embedded in the
//! 15-point Kronrod rule), bisecting the subinterval with the largest error
//! estimate until the summed estimate meets the absolute tolerance.
//!
//! Evaluation and summation order are fixed, so equal inputs give
//! bit-identical results.

#![allow(clippy::excessive_precision)]

use crate::error::{Error, Result};
use crate::scalar::Scalar;

const XGK: [f64; 8] = [
    0.991_455_371_120_812_639_206_854_697_526_329,
    0.949_107_912_342_758_524_526_189_684_047_851,
    0.864_864_423_359_769_072_789_712_788_640_926,
    0.741_531_185_599_394_439_863_864_773_280_788,
    0.586_087_235_467_691_130_294_144_845_693_013,
    0.405_845_151_377_397_166_906_606_412_076_961,
    0.207_784_955_007_898_467_600_689_403_773_245,
    0.000_000_000_000_000_000_000_000_000_000_000,
];

const WGK: [f64; 8] = [
    0.022_935_322_010_529_224_963_732_008_058_970,
    0.063_092_092_629_978_553_290_700_663_189_204,
    0.104_790_010_322_250_183_839_876_322_541_518,
    0.140_653_259_715_525_918_745_189_590_510_238,
    0.169_004_726_639_267_902_826_583_426_598_550,
    0.190_350_578_064_785_409_913_256_402_421_014,
    0.204_432_940_075_298_892_414_161_999_234_649,
    0.209_482_141_084_727_828_012_999_174_891_714,
];

const WG: [f64; 4] = [
    0.129_484_966_168_869_693_270_611_432_679_082,
    0.279_705_391_489_276_667_901_467_771_423_780,
    0.381_830_050_505_118_944_950_369_775_488_975,
    0.417_959_183_673_469_387_755_102_040_816_327,
];

/// Tolerance and work limit for [`integrate`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QuadratureSettings<T> {
    abs_tol: T,
    max_subdivisions: usize,
}

impl<T: Scalar> QuadratureSettings<T> {
    pub const DEFAULT_ABS_TOL: f64 = 1e-11;
    pub const DEFAULT_MAX_SUBDIVISIONS: usize = 60;

    pub fn new(abs_tol: T, max_subdivisions: usize) -> Result<Self> {
        if !(abs_tol > T::zero()) || !abs_tol.is_finite() {
            return Err(Error::InvalidArgument {
                what: "absolute tolerance",
                value: abs_tol.to_f64_lossy(),
            });
        }
        if max_subdivisions < 1 {
            return Err(Error::InvalidArgument {
                what: "subdivision limit",
                value: 0.0,
            });
        }
        Ok(Self {
            abs_tol,
            max_subdivisions,
        })
    }

    pub fn abs_tol(&self) -> T {
        self.abs_tol
    }

    pub fn max_subdivisions(&self) -> usize {
        self.max_subdivisions
    }

    pub fn with_abs_tol(self, abs_tol: T) -> Result<Self> {
        Self::new(abs_tol, self.max_subdivisions)
    }
}

impl<T: Scalar> Default for QuadratureSettings<T> {
    fn default() -> Self {
        Self {
            abs_tol: T::of(Self::DEFAULT_ABS_TOL),
            max_subdivisions: Self::DEFAULT_MAX_SUBDIVISIONS,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Integral<T> {
    pub value: T,
    pub error: T,
    /// Number of subintervals in the final partition.
    pub intervals: usize,
}

#[derive(Debug, Clone, Copy)]
struct Segment<T> {
    a: T,
    b: T,
    value: T,
    error: T,
}

/// QUADPACK-style error scaling for the 15-point rule.
fn rescale_error<T: Scalar>(err: T, res_abs: T, res_asc: T) -> T {
    let mut err = err.abs();
    if !res_asc.is_zero() && !err.is_zero() {
        let scale = (T::of(200.0) * err / res_asc).powf(T::of(1.5));
        err = if scale < T::one() { res_asc * scale } else { res_asc };
    }
    let floor = T::of(50.0) * T::epsilon() * res_abs;
    if res_abs > T::min_positive_value() / (T::of(50.0) * T::epsilon()) && floor > err {
        err = floor;
    }
    err
}

fn gauss_kronrod<T, F>(f: &mut F, a: T, b: T) -> Result<Segment<T>>
where
    T: Scalar,
    F: FnMut(T) -> Result<T>,
{
    let half = T::of(0.5);
    let center = half * (a + b);
    let half_len = half * (b - a);
    let f_center = f(center)?;

    let mut res_gauss = f_center * T::of(WG[3]);
    let mut res_kronrod = f_center * T::of(WGK[7]);
    let mut res_abs = res_kronrod.abs();
    let mut fv1 = [T::zero(); 7];
    let mut fv2 = [T::zero(); 7];

    for j in 0..7 {
        let x = half_len * T::of(XGK[j]);
        let f1 = f(center - x)?;
        let f2 = f(center + x)?;
        fv1[j] = f1;
        fv2[j] = f2;
        let w = T::of(WGK[j]);
        res_kronrod = res_kronrod + w * (f1 + f2);
        res_abs = res_abs + w * (f1.abs() + f2.abs());
        if j % 2 == 1 {
            res_gauss = res_gauss + T::of(WG[j / 2]) * (f1 + f2);
        }
    }

    let mean = res_kronrod * half;
    let mut res_asc = T::of(WGK[7]) * (f_center - mean).abs();
    for j in 0..7 {
        res_asc = res_asc + T::of(WGK[j]) * ((fv1[j] - mean).abs() + (fv2[j] - mean).abs());
    }

    let scale = half_len.abs();
    let value = res_kronrod * half_len;
    let error = rescale_error((res_kronrod - res_gauss) * half_len, res_abs * scale, res_asc * scale);
    Ok(Segment { a, b, value, error })
}

/// `∫_a^b f(t) dt`. A zero-width range returns exactly zero without calling
/// `f`. Errors from `f` propagate; exhausting the subdivision limit returns
/// [`Error::NoConvergence`] carrying the best estimate.
pub fn integrate<T, F>(mut f: F, a: T, b: T, settings: &QuadratureSettings<T>) -> Result<Integral<T>>
where
    T: Scalar,
    F: FnMut(T) -> Result<T>,
{
    if !a.is_finite() || !b.is_finite() {
        return Err(Error::NonFinite(if a.is_finite() { b } else { a }.to_f64_lossy()));
    }
    if a == b {
        return Ok(Integral {
            value: T::zero(),
            error: T::zero(),
            intervals: 0,
        });
    }

    let mut segments = vec![gauss_kronrod(&mut f, a, b)?];
    loop {
        let value = segments.iter().fold(T::zero(), |s, seg| s + seg.value);
        let error = segments.iter().fold(T::zero(), |s, seg| s + seg.error);
        if error <= settings.abs_tol {
            return Ok(Integral {
                value,
                error,
                intervals: segments.len(),
            });
        }
        if segments.len() >= settings.max_subdivisions {
            return Err(Error::NoConvergence {
                estimate: value.to_f64_lossy(),
                error: error.to_f64_lossy(),
                subdivisions: segments.len(),
            });
        }
        let worst = segments
            .iter()
            .enumerate()
            .fold(0, |best, (i, s)| if s.error > segments[best].error { i } else { best });
        let seg = segments[worst];
        let mid = T::of(0.5) * (seg.a + seg.b);
        let left = gauss_kronrod(&mut f, seg.a, mid)?;
        let right = gauss_kronrod(&mut f, mid, seg.b)?;
        segments[worst] = left;
        segments.insert(worst + 1, right);
    }
}
