//! Hyperball packings of the 5-dimensional hyperbolic prism tilings built on
//! the compact Coxeter orthoschemes `[5,3,3,3,3]` and `[5,3,3,3,4]`.
//!
//! The crate works in the projective model of hyperbolic space, where points
//! are rays of a real vector space carrying a Lorentzian form of signature
//! `(1, n)`. From a Coxeter symbol it builds the Coxeter–Schläfli matrix,
//! inverts it to obtain vertex data, measures the height of the optimal
//! hyperball sitting on the truncating hyperplane, and compares the volume of
//! the hyperball piece with the volume of the truncated orthoscheme.
//!
//! Every numeric routine is generic over [`Scalar`] (`f32` or `f64`). The
//! `*64` aliases below fix the scalar to `f64`, which is what the published
//! eight-digit values require.
//!
//! ```
//! use hypack::{density, CoxeterSymbol, QuadratureSettings64};
//!
//! let symbol: CoxeterSymbol = "[5,3,3,3,3]".parse().unwrap();
//! let report = density::<f64>(&symbol, &QuadratureSettings64::default()).unwrap();
//! assert!((report.density - 0.50514481).abs() < 1e-6);
//! ```

// negated comparisons are used so that NaN fails validation
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod coxeter;
pub mod error;
pub mod hyperball;
pub mod linalg;
pub mod lorentz;
pub mod quadrature;
pub mod scalar;
pub mod specfun;
pub mod volume;

pub use coxeter::{
    edge_relation, invert, parse_symbol, schlafli_matrix, signature, CoxeterSymbol, EdgeRelation,
    GramInverse, PrismScheme, SchlafliMatrix, Signature,
};
pub use error::{Error, Result};
pub use hyperball::{
    density, footpoint, optimal_height, piece_volume, vertex, HyperballPiece, PackingReport,
    VertexFrame,
};
pub use linalg::Matrix;
pub use lorentz::{classify_point, lorentz_product, proper_distance, LorentzVector, PointClass};
pub use quadrature::{integrate, Integral, QuadratureSettings};
pub use scalar::Scalar;
pub use specfun::{lobachevsky, zeta3, Angle};
pub use volume::{
    beta_of_t, theta_of_beta, vol3_orthoscheme, vol4_base, vol5_truncated, AngleParams,
    Volume5Result,
};

pub type LorentzVector64 = LorentzVector<f64>;
pub type SchlafliMatrix64 = SchlafliMatrix<f64>;
pub type GramInverse64 = GramInverse<f64>;
pub type QuadratureSettings64 = QuadratureSettings<f64>;
pub type Volume5Result64 = Volume5Result<f64>;
pub type PackingReport64 = PackingReport<f64>;
pub type HyperballPiece64 = HyperballPiece<f64>;

pub type LorentzVector32 = LorentzVector<f32>;
pub type QuadratureSettings32 = QuadratureSettings<f32>;
