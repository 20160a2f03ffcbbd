//! Coxeter symbols of linear diagrams, the Coxeter–Schläfli matrix of an
//! orthoscheme and its inverse.
//!
//! For a linear diagram with weights `w₁ … w_n` the bounding hyperplanes
//! `H⁰ … Hⁿ` of the orthoscheme have Gram matrix `c^{ij}` with unit diagonal,
//! `c^{i,i+1} = −cos(π/w_{i+1})` and zeros elsewhere. Its inverse `h_ij`
//! carries the vertex data: the sign of `h_ii` tells whether vertex `A_i` is
//! proper, ideal or outer.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::scalar::Scalar;

/// Token accepted in the last position as an alias for a trailing `3`.
pub const BRANCH_ALIAS: &str = "3^{1,1}";

/// Weights of a linear Coxeter diagram, e.g. `[5,3,3,3,3]`.
///
/// The branched symbol `[5,3,3,3,3^{1,1}]` is kept as an alias: its weights
/// resolve to `(5,3,3,3,3)` and only the label remembers the branch.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CoxeterSymbol {
    weights: Vec<u32>,
    branch_alias: bool,
}

/// The two prism tilings for which packing densities are computed.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum PrismScheme {
    /// `[5,3,3,3,3]`, also reached through `[5,3,3,3,3^{1,1}]`.
    LastThree,
    /// `[5,3,3,3,4]`.
    LastFour,
}

impl PrismScheme {
    /// Weight of the last diagram edge.
    pub fn last_weight(self) -> u32 {
        match self {
            PrismScheme::LastThree => 3,
            PrismScheme::LastFour => 4,
        }
    }
}

impl CoxeterSymbol {
    pub fn new(weights: Vec<u32>) -> Result<Self> {
        if weights.is_empty() {
            return Err(Error::Parse {
                text: String::new(),
                reason: "no weights".into(),
            });
        }
        if let Some(&w) = weights.iter().find(|&&w| w < 3) {
            return Err(Error::WeightTooSmall(w.into()));
        }
        Ok(Self {
            weights,
            branch_alias: false,
        })
    }

    pub fn weights(&self) -> &[u32] {
        &self.weights
    }

    /// Dimension of the hyperbolic space the orthoscheme lives in.
    pub fn dim(&self) -> usize {
        self.weights.len()
    }

    pub fn is_branch_alias(&self) -> bool {
        self.branch_alias
    }

    /// The same weights without the alias label.
    pub fn resolved(&self) -> Self {
        Self {
            weights: self.weights.clone(),
            branch_alias: false,
        }
    }

    /// Which packing computation this symbol selects, if any.
    pub fn prism_scheme(&self) -> Result<PrismScheme> {
        let unsupported = |reason: &str| Error::UnsupportedSymbol {
            symbol: self.to_string(),
            reason: reason.into(),
        };
        if self.weights.len() != 5 {
            return Err(unsupported(&format!(
                "unsupported dimension {}; packing densities exist for 5-dimensional schemes only",
                self.weights.len()
            )));
        }
        match self.weights[..] {
            [5, 3, 3, 3, 3] => Ok(PrismScheme::LastThree),
            [5, 3, 3, 3, 4] => Ok(PrismScheme::LastFour),
            _ => Err(unsupported(
                "supported schemes are [5,3,3,3,3], [5,3,3,3,4] and [5,3,3,3,3^{1,1}]",
            )),
        }
    }
}

impl fmt::Display for CoxeterSymbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let body = if self.branch_alias {
            let head = &self.weights[..self.weights.len() - 1];
            head.iter()
                .map(u32::to_string)
                .chain(std::iter::once(BRANCH_ALIAS.to_string()))
                .collect::<Vec<_>>()
        } else {
            self.weights.iter().map(u32::to_string).collect()
        };
        write!(f, "[{}]", body.join(","))
    }
}

impl FromStr for CoxeterSymbol {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        parse_symbol(s)
    }
}

/// Parses `[w₁, …, w_m]` with optional whitespace around every token and an
/// optional trailing `3^{1,1}` alias token.
pub fn parse_symbol(text: &str) -> Result<CoxeterSymbol> {
    let fail = |reason: &str| Error::Parse {
        text: text.to_string(),
        reason: reason.to_string(),
    };
    let inner = text
        .trim()
        .strip_prefix('[')
        .and_then(|t| t.strip_suffix(']'))
        .ok_or_else(|| fail("expected a bracketed list like [5,3,3,3,3]"))?;

    // the alias token contains a comma, so split it off before tokenizing
    let (inner, branch_alias) = match inner.trim_end().strip_suffix(BRANCH_ALIAS) {
        Some(head) => {
            let head = head.trim_end().strip_suffix(',').ok_or_else(|| {
                fail("the 3^{1,1} token is only allowed after at least one weight")
            })?;
            (head, true)
        }
        None => (inner, false),
    };
    if inner.contains('^') {
        return Err(fail("the 3^{1,1} token is only allowed in the last position"));
    }

    let tokens: Vec<&str> = inner.split(',').map(str::trim).collect();
    let mut weights = Vec::with_capacity(tokens.len() + 1);
    for tok in &tokens {
        if tok.is_empty() || !tok.bytes().all(|b| b.is_ascii_digit()) {
            return Err(fail(&format!("token {tok:?} is not a non-negative integer")));
        }
        let w: u64 = tok
            .parse()
            .map_err(|_| fail(&format!("weight {tok} is too large")))?;
        if w < 3 {
            return Err(Error::WeightTooSmall(w));
        }
        let w = u32::try_from(w).map_err(|_| fail(&format!("weight {tok} is too large")))?;
        weights.push(w);
    }
    if branch_alias {
        weights.push(3);
    }
    Ok(CoxeterSymbol {
        weights,
        branch_alias,
    })
}

/// Coxeter–Schläfli matrix of an orthoscheme: symmetric, unit diagonal,
/// tridiagonal.
#[derive(Debug, Clone, PartialEq)]
pub struct SchlafliMatrix<T> {
    entries: Matrix<T>,
}

impl<T: Scalar> SchlafliMatrix<T> {
    pub fn entries(&self) -> &Matrix<T> {
        &self.entries
    }

    pub fn order(&self) -> usize {
        self.entries.order()
    }

    /// Geometric relation between bounding hyperplanes `Hⁱ` and `Hʲ`.
    pub fn relation(&self, i: usize, j: usize) -> Result<EdgeRelation<T>> {
        edge_relation(self.entries[(i, j)])
    }
}

pub fn schlafli_matrix<T: Scalar>(symbol: &CoxeterSymbol) -> SchlafliMatrix<T> {
    let n = symbol.dim();
    let mut m = Matrix::identity(n + 1);
    for (i, &w) in symbol.weights().iter().enumerate() {
        let c = -(T::PI() / T::of(w.into())).cos();
        m[(i, i + 1)] = c;
        m[(i + 1, i)] = c;
    }
    SchlafliMatrix { entries: m }
}

/// Inertia of a symmetric matrix.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Signature {
    pub positive: usize,
    pub negative: usize,
    pub zero: usize,
}

/// Counts eigenvalue signs, with `|λ| ≤ tol` counted as zero.
pub fn signature<T: Scalar>(matrix: &Matrix<T>, tol: T) -> Signature {
    let mut sig = Signature {
        positive: 0,
        negative: 0,
        zero: 0,
    };
    for l in matrix.symmetric_eigenvalues() {
        if l.abs() <= tol {
            sig.zero += 1;
        } else if l > T::zero() {
            sig.positive += 1;
        } else {
            sig.negative += 1;
        }
    }
    sig
}

/// Inverse `h_ij` of a Coxeter–Schläfli matrix.
#[derive(Debug, Clone, PartialEq)]
pub struct GramInverse<T> {
    entries: Matrix<T>,
    source: Matrix<T>,
    residual: T,
}

impl<T: Scalar> GramInverse<T> {
    pub fn entries(&self) -> &Matrix<T> {
        &self.entries
    }

    /// The matrix this is the inverse of.
    pub fn source(&self) -> &Matrix<T> {
        &self.source
    }

    /// `max |C·H − I|`, measured after symmetrization.
    pub fn residual(&self) -> T {
        self.residual
    }

    pub fn order(&self) -> usize {
        self.entries.order()
    }

    pub fn h(&self, i: usize, j: usize) -> T {
        self.entries[(i, j)]
    }

    /// Sign classification of vertex `A_i`: negative proper, positive outer.
    pub fn vertex_class(&self, i: usize, tol: T) -> crate::lorentz::PointClass {
        use crate::lorentz::PointClass;
        let h = self.entries[(i, i)];
        if h.abs() <= tol {
            PointClass::Ideal
        } else if h < T::zero() {
            PointClass::Proper
        } else {
            PointClass::Outer
        }
    }
}

pub fn invert<T: Scalar>(matrix: &SchlafliMatrix<T>) -> Result<GramInverse<T>> {
    invert_matrix(&matrix.entries)
}

/// Inverts any square matrix into a [`GramInverse`], symmetrizing the result.
pub fn invert_matrix<T: Scalar>(m: &Matrix<T>) -> Result<GramInverse<T>> {
    let h = m.inverse()?.symmetrized();
    let residual = m.mul(&h)?.max_abs_diff(&Matrix::identity(m.order()));
    Ok(GramInverse {
        entries: h,
        source: m.clone(),
        residual,
    })
}

/// How two hyperplanes with Gram entry `g` meet.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum EdgeRelation<T> {
    Perpendicular,
    /// They meet at this dihedral angle.
    Intersecting(T),
    /// They meet at infinity.
    Parallel,
    /// They have a common perpendicular of this length.
    Divergent(T),
}

/// Classifies a non-positive Gram entry. Values within a few ulps of `0` or
/// `−1` snap to the perpendicular and parallel cases.
pub fn edge_relation<T: Scalar>(g: T) -> Result<EdgeRelation<T>> {
    let tol = T::of(64.0) * T::epsilon();
    if g.is_nan() {
        return Err(Error::NonFinite(g.to_f64_lossy()));
    }
    if g > tol {
        return Err(Error::PositiveGramEntry(g.to_f64_lossy()));
    }
    Ok(if g.abs() <= tol {
        EdgeRelation::Perpendicular
    } else if (g + T::one()).abs() <= tol {
        EdgeRelation::Parallel
    } else if g > -T::one() {
        EdgeRelation::Intersecting((-g).acos())
    } else {
        EdgeRelation::Divergent((-g).acosh())
    })
}
