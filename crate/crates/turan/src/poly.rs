//! Polynomial representations: factored form over a sorted real root list
//! and dense coefficient form, with evaluation, expansion, differentiation
//! and the mesh (minimal root gap).

use thiserror::Error;

use crate::scalar::Scalar;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PolyError {
    #[error("leading coefficient must be nonzero")]
    ZeroLeadingCoefficient,
    #[error("polynomial values must be finite")]
    NonFiniteValue,
    #[error("zero polynomial has no root structure")]
    ZeroPolynomial,
    #[error("polynomial is not real-rooted: {found} real roots (with multiplicity) for degree {degree}")]
    NotRealRooted { found: usize, degree: usize },
}

/// A real-rooted polynomial `leading * prod (x - root_i)` with the roots
/// kept sorted ascending. Ties are allowed and encode multiple roots.
#[derive(Debug, Clone, PartialEq)]
pub struct RootPoly<S> {
    leading: S,
    roots: Vec<S>,
}

impl<S: Scalar> RootPoly<S> {
    /// Builds the polynomial, sorting the roots. Rejects a zero or
    /// non-finite leading coefficient and non-finite roots.
    pub fn new(leading: S, mut roots: Vec<S>) -> Result<Self, PolyError> {
        if leading.is_zero() {
            return Err(PolyError::ZeroLeadingCoefficient);
        }
        if !leading.is_finite() || roots.iter().any(|r| !r.is_finite()) {
            return Err(PolyError::NonFiniteValue);
        }
        roots.sort_by(|a, b| a.partial_cmp(b).expect("finite values are ordered"));
        Ok(Self { leading, roots })
    }

    /// Monic polynomial with the given roots.
    pub fn monic(roots: Vec<S>) -> Result<Self, PolyError> {
        Self::new(S::one(), roots)
    }

    pub fn leading(&self) -> &S {
        &self.leading
    }

    pub fn roots(&self) -> &[S] {
        &self.roots
    }

    pub fn degree(&self) -> usize {
        self.roots.len()
    }

    /// Product-form evaluation; exact in rational mode.
    pub fn eval(&self, x: &S) -> S {
        self.roots
            .iter()
            .fold(self.leading.clone(), |acc, r| acc * (x.clone() - r.clone()))
    }

    /// Expands to coefficient form; exact in rational mode.
    pub fn expand(&self) -> DensePoly<S> {
        let mut coeffs = vec![self.leading.clone()];
        for root in &self.roots {
            // multiply by (x - root)
            let mut next = vec![S::zero(); coeffs.len() + 1];
            for (i, c) in coeffs.iter().enumerate() {
                next[i + 1] = next[i + 1].clone() + c.clone();
                next[i] = next[i].clone() - root.clone() * c.clone();
            }
            coeffs = next;
        }
        DensePoly::new(coeffs)
    }

    /// Minimal gap between consecutive roots; `None` means the gap set is
    /// empty (degree <= 1), i.e. the mesh is +infinity and any mesh
    /// precondition holds vacuously. Repeated roots give a zero mesh.
    pub fn mesh(&self) -> Option<S> {
        self.roots
            .windows(2)
            .map(|w| w[1].clone() - w[0].clone())
            .min_by(|a, b| a.partial_cmp(b).expect("finite values are ordered"))
    }

    /// `mesh(p) >= bound`, treating the empty gap set as +infinity.
    pub fn mesh_at_least(&self, bound: &S) -> bool {
        match self.mesh() {
            None => true,
            Some(m) => m >= *bound,
        }
    }

    /// The polynomial `p(x - c)`: every root shifted by `+c`.
    pub fn translate(&self, c: &S) -> Self {
        Self {
            leading: self.leading.clone(),
            roots: self.roots.iter().map(|r| r.clone() + c.clone()).collect(),
        }
    }
}

/// Coefficient-form polynomial, ascending powers; the zero polynomial is
/// the empty coefficient list and the top coefficient is always nonzero.
#[derive(Debug, Clone, PartialEq)]
pub struct DensePoly<S> {
    coeffs: Vec<S>,
}

impl<S: Scalar> DensePoly<S> {
    /// Builds from ascending coefficients, trimming trailing zeros.
    pub fn new(mut coeffs: Vec<S>) -> Self {
        while coeffs.last().map(Scalar::is_zero).unwrap_or(false) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    pub fn constant(c: S) -> Self {
        Self::new(vec![c])
    }

    pub fn coeffs(&self) -> &[S] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeff(&self, i: usize) -> S {
        self.coeffs.get(i).cloned().unwrap_or_else(S::zero)
    }

    /// Horner evaluation; exact in rational mode.
    pub fn eval(&self, x: &S) -> S {
        let mut acc = S::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x.clone() + c.clone();
        }
        acc
    }

    /// Exact k-th derivative.
    pub fn derivative(&self, order: u32) -> Self {
        let mut coeffs = self.coeffs.clone();
        for _ in 0..order {
            if coeffs.len() <= 1 {
                return Self::zero();
            }
            coeffs = coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| S::from_int(i as i64) * c.clone())
                .collect();
        }
        Self::new(coeffs)
    }

    pub fn scale(&self, c: &S) -> Self {
        Self::new(self.coeffs.iter().map(|a| a.clone() * c.clone()).collect())
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        Self::new((0..n).map(|i| self.coeff(i) + other.coeff(i)).collect())
    }

    pub fn sub(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        Self::new((0..n).map(|i| self.coeff(i) - other.coeff(i)).collect())
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let mut out = vec![S::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] = out[i + j].clone() + a.clone() * b.clone();
            }
        }
        Self::new(out)
    }

    pub fn neg(&self) -> Self {
        Self::new(self.coeffs.iter().map(|a| -a.clone()).collect())
    }
}
