//! The discrete Turán/Laguerre inequality functionals.
//!
//! The central object is the order-`m` discrete form
//!
//! ```text
//! V_m(f)(x) = sum_{j=-m}^{m} (-1)^j f(x-j) f(x+j) / ((m-j)! (m+j)!)
//! ```
//!
//! which is nonnegative for every real-rooted `f` whose consecutive zeros
//! are at least `sqrt(4 - 6/(m+2))` apart ([`delta_threshold`]). Alongside
//! it live the derivative-based analogue [`l_form`], the sequence form
//! [`sequence_form`], the mesh-1 corrected form [`u_form`], exact
//! structural identities for `V_m` (a root-peeling recursion and the
//! closed quadratic for degree `m+1`), two degree-sharpened continuous
//! Laguerre forms, and the conjectured discrete sharpening
//! [`conjecture_form`].
//!
//! Every functional is generic over the scalar mode: identity checks run
//! exactly over the rationals, scans run in floats.

use thiserror::Error;

use crate::poly::{DensePoly, RootPoly};
use crate::scalar::{factorial, Scalar};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FormError {
    #[error("the weight mu must be nonnegative")]
    NegativeMu,
    #[error("expected {expected} roots, got {got}")]
    ArityMismatch { expected: usize, got: usize },
    #[error("polynomial degree {got} is below the required {need}")]
    DegreeTooSmall { need: usize, got: usize },
}

/// Mesh threshold `sqrt(4 - 6/(m+2))` for the order-`m` form.
///
/// Strictly increasing in `m`: sqrt(2) at `m = 1`, approaching 2.
pub fn delta_threshold(m: u32) -> f64 {
    assert!(m >= 1, "the threshold is defined for m >= 1");
    (4.0 - 6.0 / (f64::from(m) + 2.0)).sqrt()
}

/// Exact square of [`delta_threshold`]: `4 - 6/(m+2)`.
///
/// Lets rational-mode code compare a squared mesh against the threshold
/// without leaving the rationals.
pub fn delta_threshold_sq<S: Scalar>(m: u32) -> S {
    assert!(m >= 1, "the threshold is defined for m >= 1");
    S::from_int(4) - S::from_int(6) / S::from_int(i64::from(m) + 2)
}

fn signed_term<S: Scalar>(total: S, j: i64, term: S) -> S {
    if j.rem_euclid(2) == 1 {
        total - term
    } else {
        total + term
    }
}

/// The order-`m` discrete form `V_m(f)` at `x`, summed exactly as written.
///
/// `f` is any evaluation callback, so recurrence-evaluated polynomials
/// plug in without expansion. For `g(x) = f(x) e^{beta x}` the form picks
/// up the positive factor `e^{2 beta x}` (each product term contributes
/// `e^{beta(x-j)} e^{beta(x+j)}`), leaving the sign unchanged.
pub fn v_form<S: Scalar>(f: impl Fn(&S) -> S, m: u32, x: &S) -> S {
    let m = i64::from(m);
    let mut total = S::zero();
    for j in -m..=m {
        let left = f(&(x.clone() - S::from_int(j)));
        let right = f(&(x.clone() + S::from_int(j)));
        let denom = factorial::<S>((m - j) as u32) * factorial::<S>((m + j) as u32);
        total = signed_term(total, j, left * right / denom);
    }
    total
}

/// The derivative-based order-`m` form
/// `sum_j (-1)^j p^(m-j)(x) p^(m+j)(x) / ((m-j)!(m+j)!)`,
/// equivalently `sum_i (-1)^{m+i} p^(i) p^(2m-i) / (i!(2m-i)!)`.
///
/// Order 1 is the classical Laguerre combination `p'^2 - p p''`.
pub fn l_form<S: Scalar>(p: &DensePoly<S>, m: u32, x: &S) -> S {
    let derivs: Vec<S> = (0..=2 * m).map(|i| p.derivative(i).eval(x)).collect();
    let m = i64::from(m);
    let mut total = S::zero();
    for j in -m..=m {
        let lo = (m - j) as usize;
        let hi = (m + j) as usize;
        let denom = factorial::<S>(lo as u32) * factorial::<S>(hi as u32);
        total = signed_term(total, j, derivs[lo].clone() * derivs[hi].clone() / denom);
    }
    total
}

/// A finite sequence `p_0..p_N` read as zero outside its index range.
#[derive(Debug, Clone)]
pub struct SequenceView<S> {
    values: Vec<S>,
}

impl<S: Scalar> SequenceView<S> {
    pub fn new(values: Vec<S>) -> Self {
        Self { values }
    }

    /// Binomial row `C(n, 0..=n)`.
    pub fn binomial_row(n: u32) -> Self {
        Self::new(
            (0..=u64::from(n))
                .map(|i| crate::scalar::binomial::<S>(u64::from(n), i))
                .collect(),
        )
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    /// `p_i`, with `p_i = 0` whenever `i` is outside `[0, N]`.
    pub fn get(&self, i: i64) -> S {
        usize::try_from(i)
            .ok()
            .and_then(|i| self.values.get(i).cloned())
            .unwrap_or_else(S::zero)
    }
}

/// The order-`m` Turán form on a sequence at index `k`:
/// `sum_j (-1)^j p_{k-j} p_{k+j} / ((m-j)!(m+j)!)`.
pub fn sequence_form<S: Scalar>(s: &SequenceView<S>, m: u32, k: i64) -> S {
    let m = i64::from(m);
    let mut total = S::zero();
    for j in -m..=m {
        let denom = factorial::<S>((m - j) as u32) * factorial::<S>((m + j) as u32);
        total = signed_term(total, j, s.get(k - j) * s.get(k + j) / denom);
    }
    total
}

/// The corrected order-1 form, nonnegative already for mesh >= 1:
/// `p(x)^2 - p(x-1)p(x+1) + (p(x+1) - mu p(x) + p(x-1))^2 / 4`.
pub fn u_form<S: Scalar>(f: impl Fn(&S) -> S, mu: &S, x: &S) -> Result<S, FormError> {
    if *mu < S::zero() {
        return Err(FormError::NegativeMu);
    }
    let center = f(x);
    let left = f(&(x.clone() - S::one()));
    let right = f(&(x.clone() + S::one()));
    let bracket = right.clone() - mu.clone() * center.clone() + left.clone();
    Ok(center.clone() * center - left * right
        + S::from_ratio(1, 4) * bracket.clone() * bracket)
}

/// Closed form of `V_m` for a monic polynomial of degree `m + 1` with the
/// given roots: the quadratic
/// `(m+1)x^2 - 2x sum(a_i) + sum(a_i^2) - C(2m+2, 3)/4`.
///
/// Exactly equal to [`v_form`] of that polynomial in rational mode.
pub fn v_form_closed_form<S: Scalar>(roots: &[S], m: u32, x: &S) -> Result<S, FormError> {
    let expected = m as usize + 1;
    if roots.len() != expected {
        return Err(FormError::ArityMismatch {
            expected,
            got: roots.len(),
        });
    }
    let sum = roots.iter().cloned().fold(S::zero(), |a, r| a + r);
    let sum_sq = roots
        .iter()
        .cloned()
        .fold(S::zero(), |a, r| a + r.clone() * r);
    let m = i64::from(m);
    // C(2m+2, 3) = (2m+2)(2m+1)(2m)/6
    let choose3 = S::from_int((2 * m + 2) * (2 * m + 1) * (2 * m) / 6);
    Ok(S::from_int(m + 1) * x.clone() * x.clone() - S::from_int(2) * x.clone() * sum + sum_sq
        - choose3 / S::from_int(4))
}

/// `V_m` computed by peeling one root at a time with the exact recursion
/// `V_m((x-a) q) = ((x-a)^2 - m^2) V_m(q) + V_{m-1}(q)`, bottoming out at
/// `V_m(q) = 0` for `deg q < m`, `1` for `deg q = m`, and `V_0(q) = q^2`.
///
/// Agrees with [`v_form`] exactly in rational mode.
pub fn v_form_via_recursion<S: Scalar>(p: &RootPoly<S>, m: u32, x: &S) -> S {
    fn rec<S: Scalar>(roots: &[S], m: u32, x: &S) -> S {
        if m == 0 {
            let q = roots
                .iter()
                .fold(S::one(), |acc, r| acc * (x.clone() - r.clone()));
            return q.clone() * q;
        }
        let k = roots.len();
        if k < m as usize {
            return S::zero();
        }
        if k == m as usize {
            return S::one();
        }
        let (rest, last) = roots.split_at(k - 1);
        let shift = x.clone() - last[0].clone();
        (shift.clone() * shift - S::from_int(i64::from(m) * i64::from(m))) * rec(rest, m, x)
            + rec(rest, m - 1, x)
    }
    let lead = p.leading().clone();
    lead.clone() * lead * rec(p.roots(), m, x)
}

/// Degree-aware sharpening of the Laguerre combination:
/// `(k-1) p'(x)^2 - k p(x) p''(x)` for `k = deg p >= 1`.
pub fn sharp_laguerre_1<S: Scalar>(p: &DensePoly<S>, x: &S) -> Result<S, FormError> {
    let k = p.degree().unwrap_or(0);
    if k < 1 {
        return Err(FormError::DegreeTooSmall { need: 1, got: k });
    }
    let d1 = p.derivative(1).eval(x);
    let d2 = p.derivative(2).eval(x);
    let k = k as i64;
    Ok(S::from_int(k - 1) * d1.clone() * d1 - S::from_int(k) * p.eval(x) * d2)
}

/// Second degree-aware sharpening:
/// `3(k-2)(k-3) p''^2 - 4(k-1)(k-3) p' p''' + k(k-1) p p''''`.
///
/// Meaningful as an inequality for `k >= 4`, computable for any degree.
pub fn sharp_laguerre_2<S: Scalar>(p: &DensePoly<S>, x: &S) -> S {
    let k = p.degree().unwrap_or(0) as i64;
    let d = |order: u32| p.derivative(order).eval(x);
    S::from_int(3 * (k - 2) * (k - 3)) * d(2).clone() * d(2)
        - S::from_int(4 * (k - 1) * (k - 3)) * d(1) * d(3)
        + S::from_int(k * (k - 1)) * d(0) * d(4)
}

/// The conjectured discrete degree-sharpened form for `k = deg p`:
/// `(k-1)(p(x+1) - p(x-1))^2 - 4k p(x)(p(x+1) - 2p(x) + p(x-1))`.
///
/// Conjectured nonnegative for real-rooted `p` with mesh >= 1; the
/// randomized search in [`crate::search`] looks for counterexamples and
/// never asserts the statement.
pub fn conjecture_form<S: Scalar>(f: impl Fn(&S) -> S, k: u32, x: &S) -> S {
    let center = f(x);
    let left = f(&(x.clone() - S::one()));
    let right = f(&(x.clone() + S::one()));
    let spread = right.clone() - left.clone();
    let second = right - S::from_int(2) * center.clone() + left;
    let k = i64::from(k);
    S::from_int(k - 1) * spread.clone() * spread - S::from_int(4 * k) * center * second
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::Rat;

    fn rat(n: i64, d: i64) -> Rat {
        Rat::from_ratio(n, d)
    }

    #[test]
    fn threshold_values() {
        assert!((delta_threshold(1) - 2.0_f64.sqrt()).abs() < 1e-15);
        assert!((delta_threshold(2) - 2.5_f64.sqrt()).abs() < 1e-15);
        assert!((delta_threshold(100) - 1.985_240_3).abs() < 1e-6);
        // monotone, approaching 2 from below
        let mut prev = 0.0;
        for m in 1..200 {
            let d = delta_threshold(m);
            assert!(d > prev && d < 2.0);
            prev = d;
        }
        assert_eq!(delta_threshold_sq::<Rat>(1), rat(2, 1));
        assert_eq!(delta_threshold_sq::<Rat>(2), rat(5, 2));
    }

    #[test]
    fn v_form_base_degrees() {
        // monic degree 1: V_m = 1 for every x when m = deg
        let a = rat(3, 2);
        let poly = move |x: &Rat| x.clone() - a.clone();
        for x in [rat(0, 1), rat(7, 3), rat(-5, 2)] {
            assert_eq!(v_form(&poly, 1, &x), Rat::from_int(1));
        }
        // constants sit below the order: V_1(c) = 0
        let c = rat(4, 7);
        assert_eq!(v_form(|_: &Rat| c.clone(), 1, &rat(9, 4)), Rat::zero());
    }

    #[test]
    fn v_form_vanishes_at_closed_form_double_root() {
        // f = x(x - sqrt 2), m = 1: the closed quadratic 2x^2 - 2 sqrt2 x + 1
        // has its double root at sqrt2/2
        let s = 2.0_f64.sqrt();
        let f = move |x: &f64| x * (x - s);
        let v = v_form(f, 1, &(s / 2.0));
        assert!(v.abs() < 1e-15, "{v}");
    }

    #[test]
    fn v_zero_is_the_square() {
        let p = RootPoly::new(rat(2, 1), vec![rat(1, 1), rat(-3, 1)]).unwrap();
        let x = rat(5, 3);
        assert_eq!(v_form(|u: &Rat| p.eval(u), 0, &x), p.eval(&x) * p.eval(&x));
    }

    #[test]
    fn l_form_examples() {
        // p = x^2 at x = 1: p'^2 - p p'' = 4 - 2 = 2
        let p = DensePoly::new(vec![0.0, 0.0, 1.0]);
        assert_eq!(l_form(&p, 1, &1.0), 2.0);
        // order 0 is the square
        let q = DensePoly::new(vec![1.0, 2.0, -1.0]);
        let x = 0.7;
        assert_eq!(l_form(&q, 0, &x), q.eval(&x) * q.eval(&x));
        // order above the degree: every term contains a vanished derivative
        assert_eq!(l_form(&q, 3, &x), 0.0);
    }

    #[test]
    fn l_form_order_one_is_laguerre_combination() {
        let p = DensePoly::new(vec![rat(-2, 1), rat(1, 3), rat(1, 1), rat(2, 1)]);
        for x in [rat(0, 1), rat(5, 2), rat(-7, 4)] {
            let expect = {
                let d1 = p.derivative(1).eval(&x);
                let d2 = p.derivative(2).eval(&x);
                d1.clone() * d1 - p.eval(&x) * d2
            };
            assert_eq!(l_form(&p, 1, &x), expect);
        }
    }

    #[test]
    fn sequence_form_binomial_rows() {
        let row = SequenceView::<Rat>::binomial_row(4);
        assert_eq!(sequence_form(&row, 1, 1), Rat::from_int(10));
        assert_eq!(sequence_form(&row, 2, 2), rat(15, 4));
        let singleton = SequenceView::new(vec![Rat::from_int(1)]);
        assert_eq!(sequence_form(&singleton, 1, 0), Rat::from_int(1));
    }

    #[test]
    fn u_form_examples() {
        // p = x(x-1) at x = 1/2 with mu = 0
        let p = |x: &f64| x * (x - 1.0);
        assert!((u_form(p, &0.0, &0.5).unwrap() - 0.0625).abs() < 1e-15);
        // constants: c^2 - c^2 + (2c)^2/4 = c^2
        let c = -2.25;
        assert_eq!(u_form(|_: &f64| c, &0.0, &3.1).unwrap(), c * c);
        // p = x at x = 1 with mu = 2: 1 - 0 + 0 = 1
        assert_eq!(u_form(|x: &f64| *x, &2.0, &1.0).unwrap(), 1.0);
        assert_eq!(u_form(|x: &f64| *x, &-0.5, &1.0), Err(FormError::NegativeMu));
    }

    #[test]
    fn closed_form_examples() {
        // m=1, roots {0, 0} at x=0: below-threshold mesh turns the form negative
        let v = v_form_closed_form(&[Rat::zero(), Rat::zero()], 1, &Rat::zero()).unwrap();
        assert_eq!(v, Rat::from_int(-1));
        assert_eq!(
            v_form_closed_form(&[Rat::zero()], 1, &Rat::zero()),
            Err(FormError::ArityMismatch { expected: 2, got: 1 })
        );
    }

    #[test]
    fn closed_form_touches_zero_at_the_threshold_vertex() {
        // roots {0, sqrt 2} sit exactly at the order-1 threshold; the
        // closed quadratic 2x^2 - 2 sqrt2 x + 1 bottoms out at zero
        let s = 2.0_f64.sqrt();
        let v = v_form_closed_form(&[0.0, s], 1, &(s / 2.0)).unwrap();
        assert!(v.abs() < 1e-15, "{v}");
    }

    #[test]
    fn closed_form_matches_direct_summation_exactly() {
        for m in 1..=5u32 {
            let roots: Vec<Rat> = (0..=m as i64).map(|i| rat(2 * i - 3, i + 1)).collect();
            let p = RootPoly::monic(roots.clone()).unwrap();
            for t in 0..m as i64 + 3 {
                let x = rat(3 * t - 4, 5);
                assert_eq!(
                    v_form_closed_form(&roots, m, &x).unwrap(),
                    v_form(|u: &Rat| p.eval(u), m, &x),
                    "m={m} x={x}"
                );
            }
        }
    }

    #[test]
    fn equally_spaced_threshold_roots_have_zero_discriminant() {
        // roots a_i = (i-1) d with d^2 = 4 - 6/(m+2): the closed quadratic's
        // discriminant 4(sum a)^2 - 4(m+1) sum a^2 + (m+1) C(2m+2,3) is
        // linear in d^2, so it evaluates exactly in the rationals -- to zero.
        for m in 1..=6i64 {
            let dsq = delta_threshold_sq::<Rat>(m as u32);
            let sum_coeff = rat(m * (m + 1) / 2, 1); // sum (i-1) = m(m+1)/2
            let sumsq_coeff = rat(m * (m + 1) * (2 * m + 1) / 6, 1);
            let choose3 = rat((2 * m + 2) * (2 * m + 1) * (2 * m) / 6, 1);
            let disc = Rat::from_int(4) * sum_coeff.clone() * sum_coeff * dsq.clone()
                - Rat::from_int(4 * (m + 1)) * sumsq_coeff * dsq
                + Rat::from_int(m + 1) * choose3;
            assert_eq!(disc, Rat::zero(), "m={m}");
        }
    }

    #[test]
    fn recursion_examples() {
        // degree m with no peeling: 1
        let p = RootPoly::monic(vec![rat(1, 2), rat(5, 2), rat(9, 2)]).unwrap();
        assert_eq!(v_form_via_recursion(&p, 3, &rat(1, 3)), Rat::from_int(1));
        // one peel of (x-a): ((x-a)^2 - 1) * 0 + 1 = 1
        let q = RootPoly::monic(vec![rat(-7, 3)]).unwrap();
        assert_eq!(v_form_via_recursion(&q, 1, &rat(4, 1)), Rat::from_int(1));
    }

    #[test]
    fn recursion_agrees_with_direct_summation() {
        let roots = vec![rat(-5, 2), rat(-1, 3), rat(0, 1), rat(7, 5), rat(3, 1), rat(4, 1)];
        let p = RootPoly::new(rat(-2, 3), roots).unwrap();
        let x = rat(7, 3);
        for m in 0..=4 {
            assert_eq!(
                v_form_via_recursion(&p, m, &x),
                v_form(|u: &Rat| p.eval(u), m, &x),
                "m={m}"
            );
        }
    }

    #[test]
    fn sharp_laguerre_examples() {
        let x2 = DensePoly::new(vec![0.0, 0.0, 1.0]);
        assert_eq!(sharp_laguerre_1(&x2, &0.0).unwrap(), 0.0);
        let x2m1 = DensePoly::new(vec![-1.0, 0.0, 1.0]);
        assert_eq!(sharp_laguerre_1(&x2m1, &0.0).unwrap(), 4.0);
        let x = DensePoly::new(vec![0.0, 1.0]);
        assert_eq!(sharp_laguerre_1(&x, &5.0).unwrap(), 0.0);
        assert_eq!(
            sharp_laguerre_1(&DensePoly::new(vec![3.0]), &0.0),
            Err(FormError::DegreeTooSmall { need: 1, got: 0 })
        );

        let x4 = DensePoly::new(vec![0.0, 0.0, 0.0, 0.0, 1.0]);
        assert_eq!(sharp_laguerre_2(&x4, &0.0), 0.0);
        // (x^2-1)^2 at 0: 3*2*1*16 + 4*3*1*24 = 384
        let p = DensePoly::new(vec![1.0, 0.0, -2.0, 0.0, 1.0]);
        assert_eq!(sharp_laguerre_2(&p, &0.0), 384.0);
    }

    #[test]
    fn conjecture_form_examples() {
        assert_eq!(conjecture_form(|x: &f64| *x, 1, &3.3), 0.0);
        let p = |x: &f64| x * (x - 1.0);
        assert!((conjecture_form(p, 2, &0.5) - 4.0).abs() < 1e-14);
        let q = |x: &f64| x * (x - 1.0) * (x - 2.0);
        assert!(conjecture_form(q, 3, &1.0).abs() < 1e-14);
    }

    #[test]
    fn exponential_factor_is_exp_two_beta_x() {
        let p = RootPoly::new(1.0, vec![0.0, 2.0, 4.0]).unwrap();
        let beta = 0.37;
        let g = |x: &f64| p.eval(x) * (beta * x).exp();
        for m in 1..=3 {
            for x in [-1.3, 0.9, 2.6, 5.0] {
                let lhs = v_form(g, m, &x);
                let rhs = (2.0 * beta * x).exp() * v_form(|u: &f64| p.eval(u), m, &x);
                assert!(
                    (lhs - rhs).abs() <= 1e-9 * rhs.abs().max(1.0),
                    "m={m} x={x}: {lhs} vs {rhs}"
                );
            }
        }
    }

    #[test]
    fn translation_scaling_reflection_exact() {
        let p = RootPoly::new(rat(3, 2), vec![rat(-2, 1), rat(1, 3), rat(5, 2)]).unwrap();
        let c = rat(11, 7);
        let x = rat(4, 5);
        for m in 0..=3 {
            // translation equivariance
            let shifted = p.translate(&c);
            assert_eq!(
                v_form(|u: &Rat| shifted.eval(u), m, &(x.clone() + c.clone())),
                v_form(|u: &Rat| p.eval(u), m, &x)
            );
            // quadratic scaling
            let s = rat(-7, 4);
            assert_eq!(
                v_form(|u: &Rat| s.clone() * p.eval(u), m, &x),
                s.clone() * s.clone() * v_form(|u: &Rat| p.eval(u), m, &x)
            );
            // reflection
            assert_eq!(
                v_form(|u: &Rat| p.eval(&-u.clone()), m, &x),
                v_form(|u: &Rat| p.eval(u), m, &-x.clone())
            );
        }
    }

    #[test]
    fn derivative_form_scales_quadratically() {
        let p = DensePoly::new(vec![rat(1, 2), rat(-3, 1), rat(0, 1), rat(2, 1)]);
        let c = rat(-7, 5);
        let x = rat(9, 4);
        for m in 0..=3 {
            assert_eq!(
                l_form(&p.scale(&c), m, &x),
                c.clone() * c.clone() * l_form(&p, m, &x)
            );
        }
    }

    #[test]
    fn summation_order_is_immaterial_exactly() {
        let p = RootPoly::monic(vec![rat(0, 1), rat(3, 2), rat(4, 1)]).unwrap();
        let x = rat(13, 6);
        let m = 2i64;
        let mut descending = Rat::zero();
        for j in (-m..=m).rev() {
            let term = p.eval(&(x.clone() - Rat::from_int(j))) * p.eval(&(x.clone() + Rat::from_int(j)))
                / (factorial::<Rat>((m - j) as u32) * factorial::<Rat>((m + j) as u32));
            descending = signed_term(descending, j, term);
        }
        assert_eq!(descending, v_form(|u: &Rat| p.eval(u), m as u32, &x));
    }
}
