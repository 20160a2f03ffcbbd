//! Optimal hyperball packings of the prism tilings.
//!
//! The truncated orthoscheme `S_i` is cut by the polar hyperplane of its outer
//! vertex `A₅`. Hyperballs are grown around that hyperplane until they touch
//! the cover faces, which happens at height `h = d(A₄, P₄)`, `P₄` the foot of
//! the perpendicular from `A₄`. The density is the volume of the hyperball
//! piece over the characteristic simplex divided by `Vol₅(S_i)`.

use crate::coxeter::{invert, schlafli_matrix, CoxeterSymbol, GramInverse};
use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::lorentz::{acosh_clamped, LorentzVector, DEFAULT_IDEAL_TOL};
use crate::quadrature::QuadratureSettings;
use crate::scalar::Scalar;
use crate::volume::{vol4_base, vol5_truncated};

/// Concrete vectors in `R^{1,n}` realizing a Gram matrix: hyperplane normals
/// `bⁱ` with `⟨bⁱ,bʲ⟩ = c^{ij}` and vertices `a_i` with `⟨a_i,a_j⟩ = h_ij`.
#[derive(Debug, Clone, PartialEq)]
pub struct VertexFrame<T> {
    pub normals: Vec<LorentzVector<T>>,
    pub vertices: Vec<LorentzVector<T>>,
}

impl<T: Scalar> VertexFrame<T> {
    /// Builds normals from the unpivoted `L·D·Lᵀ` factorization of the
    /// source matrix, placing the single negative pivot on the time axis.
    pub fn new(gram: &GramInverse<T>) -> Result<Self> {
        let c = gram.source();
        let n1 = c.order();
        let (l, d) = c.ldlt()?;
        let negative: Vec<usize> = (0..n1).filter(|&k| d[k] < T::zero()).collect();
        if negative.len() != 1 {
            return Err(Error::FormSignature {
                positive: n1 - negative.len(),
                negative: negative.len(),
            });
        }
        // coordinate slot of each pivot: the negative one goes to x⁰
        let neg = negative[0];
        let slot = |k: usize| -> usize {
            if k == neg {
                0
            } else if k < neg {
                k + 1
            } else {
                k
            }
        };
        let scale: Vec<T> = d.iter().map(|v| v.abs().sqrt()).collect();
        let normals = (0..n1)
            .map(|i| {
                let mut coords = vec![T::zero(); n1];
                for k in 0..=i {
                    coords[slot(k)] = l[(i, k)] * scale[k];
                }
                LorentzVector::new(coords)
            })
            .collect::<Result<Vec<_>>>()?;

        let h = gram.entries();
        let vertices = (0..n1)
            .map(|i| {
                let mut coords = vec![T::zero(); n1];
                for (j, b) in normals.iter().enumerate() {
                    let hij = h[(i, j)];
                    for (c, &bj) in coords.iter_mut().zip(b.coords()) {
                        *c = *c + hij * bj;
                    }
                }
                LorentzVector::new(coords)
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Self { normals, vertices })
    }
}

/// Vertex `A_i` as a vector of `R^{1,n}`.
pub fn vertex<T: Scalar>(gram: &GramInverse<T>, index: usize) -> Result<LorentzVector<T>> {
    let mut frame = VertexFrame::new(gram)?;
    Ok(frame.vertices.swap_remove(index))
}

fn check_pair<T: Scalar>(gram: &GramInverse<T>, proper: usize, outer: usize) -> Result<()> {
    let n1 = gram.order();
    for idx in [proper, outer] {
        if idx >= n1 {
            return Err(Error::DimensionMismatch { left: n1, right: idx + 1 });
        }
    }
    let hp = gram.h(proper, proper);
    if !(hp < T::zero()) {
        return Err(Error::VertexClass {
            index: proper,
            expected: "a proper vertex (h_ii < 0)",
            value: hp.to_f64_lossy(),
        });
    }
    let ho = gram.h(outer, outer);
    if !(ho > T::zero()) {
        return Err(Error::VertexClass {
            index: outer,
            expected: "an outer vertex (h_ii > 0)",
            value: ho.to_f64_lossy(),
        });
    }
    Ok(())
}

/// Foot `p = a_p·h_oo − a_o·h_po` of the perpendicular dropped from the proper
/// vertex `a_p` to the polar hyperplane of the outer vertex `a_o`.
pub fn footpoint<T: Scalar>(gram: &GramInverse<T>, proper: usize, outer: usize) -> Result<LorentzVector<T>> {
    check_pair(gram, proper, outer)?;
    let frame = VertexFrame::new(gram)?;
    LorentzVector::combine(
        gram.h(outer, outer),
        &frame.vertices[proper],
        -gram.h(proper, outer),
        &frame.vertices[outer],
    )
}

/// Closed-form height `acosh √((h_pp h_oo − h_po²)/(h_pp h_oo))` between an
/// arbitrary proper/outer vertex pair.
pub fn height_between<T: Scalar>(gram: &GramInverse<T>, proper: usize, outer: usize) -> Result<T> {
    check_pair(gram, proper, outer)?;
    let hpp = gram.h(proper, proper);
    let hoo = gram.h(outer, outer);
    let hpo = gram.h(proper, outer);
    let ratio = (hpp * hoo - hpo * hpo) / (hpp * hoo);
    let tol = T::of(DEFAULT_IDEAL_TOL);
    if ratio < T::one() - tol {
        return Err(Error::CoshBelowOne(ratio.to_f64_lossy()));
    }
    acosh_clamped(ratio.max(T::one()).sqrt(), tol)
}

/// Height of the optimal hyperball: distance from the last proper vertex
/// `A_{n−1}` to the truncating hyperplane `pol(A_n)`.
pub fn optimal_height<T: Scalar>(gram: &GramInverse<T>) -> Result<T> {
    let n = gram.order() - 1;
    if n < 1 {
        return Err(Error::TooFewCoordinates(gram.order()));
    }
    height_between(gram, n - 1, n)
}

/// `(1/16)·A·k·(½ sinh(4h/k) + 4 sinh(2h/k)) + 3hA/8`: volume of the piece of
/// the hyperball of height `h` lying over a base of 4-volume `A`.
pub fn piece_volume<T: Scalar>(base_volume: T, h: T, k: T) -> Result<T> {
    if !(base_volume > T::zero()) || !base_volume.is_finite() {
        return Err(Error::InvalidArgument {
            what: "base volume",
            value: base_volume.to_f64_lossy(),
        });
    }
    if !(h >= T::zero()) || !h.is_finite() {
        return Err(Error::InvalidArgument {
            what: "height",
            value: h.to_f64_lossy(),
        });
    }
    if !(k > T::zero()) || !k.is_finite() {
        return Err(Error::InvalidArgument {
            what: "curvature unit k",
            value: k.to_f64_lossy(),
        });
    }
    let half = T::of(0.5);
    let four = T::of(4.0);
    let sinh_part = half * (four * h / k).sinh() + four * (T::of(2.0) * h / k).sinh();
    Ok(base_volume * k * sinh_part / T::of(16.0) + T::of(3.0) * h * base_volume / T::of(8.0))
}

/// A hyperball piece with its computed volume.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct HyperballPiece<T> {
    pub height: T,
    pub base_volume: T,
    pub k: T,
    pub piece_volume: T,
}

impl<T: Scalar> HyperballPiece<T> {
    pub fn new(height: T, base_volume: T, k: T) -> Result<Self> {
        let piece_volume = piece_volume(base_volume, height, k)?;
        Ok(Self {
            height,
            base_volume,
            k,
            piece_volume,
        })
    }
}

/// Everything computed for one symbol.
#[derive(Debug, Clone, PartialEq)]
pub struct PackingReport<T> {
    pub symbol: CoxeterSymbol,
    pub vol5: T,
    pub vol5_error: T,
    pub height: T,
    pub piece_volume: T,
    pub density: T,
}

/// Optimal hyperball packing density of the prism tiling of `symbol`.
///
/// The `3^{1,1}` alias yields the `[5,3,3,3,3]` numbers labeled with the
/// alias.
pub fn density<T: Scalar>(symbol: &CoxeterSymbol, settings: &QuadratureSettings<T>) -> Result<PackingReport<T>> {
    symbol.prism_scheme()?;
    let resolved = symbol.resolved();
    let gram = invert(&schlafli_matrix::<T>(&resolved))?;
    let height = optimal_height(&gram)?;
    let piece = HyperballPiece::new(height, vol4_base(), T::one())?;
    let vol5 = vol5_truncated(&resolved, settings)?;
    Ok(PackingReport {
        symbol: symbol.clone(),
        vol5: vol5.value,
        vol5_error: vol5.estimated_error,
        height,
        piece_volume: piece.piece_volume,
        density: piece.piece_volume / vol5.value,
    })
}

/// Vertex frame of an arbitrary nonsingular Gram matrix of signature `(n,1)`.
pub fn frame_from_matrix<T: Scalar>(m: &Matrix<T>) -> Result<VertexFrame<T>> {
    VertexFrame::new(&crate::coxeter::invert_matrix(m)?)
}
