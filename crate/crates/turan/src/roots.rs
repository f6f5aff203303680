//! Real-root isolation for rational-coefficient polynomials: Sturm-chain
//! sign counting over dyadic intervals, square-free splitting for
//! multiplicities, exact bisection refinement, and a float front end with
//! Newton polish.
//!
//! The real-rootedness precondition is checked, not assumed: when the
//! number of real roots counted with multiplicity falls short of the
//! degree, the input is rejected.

use crate::poly::{DensePoly, PolyError};
use crate::scalar::{rat_from_f64, Rat, Scalar};

fn sign(v: &Rat) -> i8 {
    if Scalar::is_zero(v) {
        0
    } else if *v > Rat::from_int(0) {
        1
    } else {
        -1
    }
}

/// Quotient and remainder of rational polynomial long division.
fn divrem(num: &DensePoly<Rat>, den: &DensePoly<Rat>) -> (DensePoly<Rat>, DensePoly<Rat>) {
    let dd = den.degree().expect("division by zero polynomial");
    let lead = den.coeff(dd);
    let mut rem = num.clone();
    let mut quot = vec![Rat::zero(); num.coeffs().len()];
    while let Some(rd) = rem.degree() {
        if rd < dd {
            break;
        }
        let factor = rem.coeff(rd) / lead.clone();
        let shift = rd - dd;
        quot[shift] = factor.clone();
        let mut coeffs = rem.coeffs().to_vec();
        for i in 0..=dd {
            coeffs[i + shift] = coeffs[i + shift].clone() - factor.clone() * den.coeff(i);
        }
        // the top coefficient cancels exactly
        coeffs[rd] = Rat::zero();
        rem = DensePoly::new(coeffs);
    }
    (DensePoly::new(quot), rem)
}

/// Exact division; panics if the remainder is nonzero.
fn exact_div(num: &DensePoly<Rat>, den: &DensePoly<Rat>) -> DensePoly<Rat> {
    let (q, r) = divrem(num, den);
    assert!(r.is_zero(), "exact_div with nonzero remainder");
    q
}

fn make_monic(p: &DensePoly<Rat>) -> DensePoly<Rat> {
    match p.degree() {
        None => p.clone(),
        Some(d) => {
            let lead = p.coeff(d);
            DensePoly::new(p.coeffs().iter().map(|c| c.clone() / lead.clone()).collect())
        }
    }
}

fn poly_gcd(a: &DensePoly<Rat>, b: &DensePoly<Rat>) -> DensePoly<Rat> {
    let mut x = a.clone();
    let mut y = b.clone();
    while !y.is_zero() {
        let (_, r) = divrem(&x, &y);
        x = y;
        y = r;
    }
    make_monic(&x)
}

/// Yun's square-free decomposition: returns monic pairwise-coprime factors
/// with their multiplicities, `p = lead * prod f_i^{m_i}`.
fn squarefree_decomposition(p: &DensePoly<Rat>) -> Vec<(DensePoly<Rat>, u32)> {
    let deg = p.degree().expect("zero polynomial");
    if deg == 0 {
        return Vec::new();
    }
    let dp = p.derivative(1);
    let g = poly_gcd(p, &dp);
    if g.degree() == Some(0) {
        return vec![(make_monic(p), 1)];
    }
    let mut out = Vec::new();
    let mut c = exact_div(p, &g);
    let mut d = exact_div(&dp, &g).sub(&c.derivative(1));
    let mut mult = 1u32;
    while c.degree() != Some(0) {
        let a = poly_gcd(&c, &d);
        if a.degree() != Some(0) {
            out.push((a.clone(), mult));
        }
        c = exact_div(&c, &a);
        d = exact_div(&d, &a).sub(&c.derivative(1));
        mult += 1;
    }
    out
}

/// Sturm chain `p, p', -rem(...)`, each element normalized by a positive
/// constant to curb coefficient growth.
struct SturmChain {
    polys: Vec<DensePoly<Rat>>,
}

impl SturmChain {
    fn build(p: &DensePoly<Rat>) -> Self {
        let mut polys = vec![p.clone()];
        let dp = p.derivative(1);
        if !dp.is_zero() {
            polys.push(dp);
        }
        loop {
            let n = polys.len();
            if n < 2 || polys[n - 1].degree() == Some(0) {
                break;
            }
            let (_, r) = divrem(&polys[n - 2], &polys[n - 1]);
            if r.is_zero() {
                break;
            }
            let lead = r.coeff(r.degree().unwrap()).abs();
            polys.push(r.neg().scale(&(Rat::one() / lead)));
        }
        Self { polys }
    }

    fn variations_at(&self, x: &Rat) -> usize {
        let mut count = 0;
        let mut last = 0i8;
        for p in &self.polys {
            let s = sign(&p.eval(x));
            if s != 0 {
                if last != 0 && s != last {
                    count += 1;
                }
                last = s;
            }
        }
        count
    }
}

/// Number of distinct real roots of `p` in the half-open interval `(a, b]`.
///
/// Neither endpoint may be a root of `p`.
pub fn sturm_count(p: &DensePoly<Rat>, a: &Rat, b: &Rat) -> usize {
    assert!(a < b, "interval must satisfy a < b");
    assert!(
        !Scalar::is_zero(&p.eval(a)) && !Scalar::is_zero(&p.eval(b)),
        "sturm_count endpoints must not be roots"
    );
    let chain = SturmChain::build(p);
    chain.variations_at(a) - chain.variations_at(b)
}

/// Cauchy root bound: every real root lies in (-M, M).
fn cauchy_bound(p: &DensePoly<Rat>) -> Rat {
    let d = p.degree().expect("zero polynomial");
    let lead = p.coeff(d).abs();
    let mut max = Rat::zero();
    for i in 0..d {
        let q = p.coeff(i).abs() / lead.clone();
        if q > max {
            max = q;
        }
    }
    Rat::one() + max
}

/// A point in `(lo, hi)` that is not a root of `g`, preferring the midpoint.
fn split_point(g: &DensePoly<Rat>, lo: &Rat, hi: &Rat) -> Rat {
    let width = hi.clone() - lo.clone();
    let mid = lo.clone() + width.clone() / Rat::from_int(2);
    if !Scalar::is_zero(&g.eval(&mid)) {
        return mid;
    }
    // finitely many roots: a short scan of distinct interior fractions wins
    for j in 0..=g.degree().unwrap_or(0) as i64 + 1 {
        let t = Rat::from_ratio(j + 1, 2 * j + 3);
        let cand = lo.clone() + width.clone() * t;
        if !Scalar::is_zero(&g.eval(&cand)) {
            return cand;
        }
    }
    unreachable!("more interior roots than the degree allows");
}

/// Isolating intervals `(lo, hi)` for every real root of squarefree `g`,
/// each containing exactly one root, endpoints never roots.
fn isolate_squarefree(g: &DensePoly<Rat>) -> Vec<(Rat, Rat)> {
    let chain = SturmChain::build(g);
    let bound = cauchy_bound(g);
    let lo = -bound.clone();
    let hi = bound;
    let total = chain.variations_at(&lo) - chain.variations_at(&hi);
    let mut isolated = Vec::new();
    let mut stack = vec![(lo, hi, total)];
    while let Some((lo, hi, count)) = stack.pop() {
        match count {
            0 => {}
            1 => isolated.push((lo, hi)),
            _ => {
                let mid = split_point(g, &lo, &hi);
                let v_mid = chain.variations_at(&mid);
                let left = chain.variations_at(&lo) - v_mid;
                let right = v_mid - chain.variations_at(&hi);
                stack.push((lo, mid.clone(), left));
                stack.push((mid, hi, right));
            }
        }
    }
    isolated.sort_by(|a, b| a.0.cmp(&b.0));
    isolated
}

/// Shrinks an isolating interval around a simple root by exact bisection
/// until its width is at most `target`. Returns the final bracket; a zero
/// hit collapses the bracket to the exact root.
fn refine_bisect(g: &DensePoly<Rat>, lo: Rat, hi: Rat, target: &Rat) -> (Rat, Rat) {
    let sign_lo = sign(&g.eval(&lo));
    debug_assert!(sign_lo != 0 && sign_lo != sign(&g.eval(&hi)));
    let (mut lo, mut hi) = (lo, hi);
    while hi.clone() - lo.clone() > *target {
        let mid = (lo.clone() + hi.clone()) / Rat::from_int(2);
        let s = sign(&g.eval(&mid));
        if s == 0 {
            return (mid.clone(), mid);
        }
        if s == sign_lo {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    (lo, hi)
}

fn bisect_width_cap(tol: &Rat) -> Rat {
    // 2^-40, then keep shrinking if the caller wants tighter
    let cap = Rat::from_ratio(1, 1 << 40);
    if *tol < cap && *tol > Rat::from_int(0) {
        tol.clone()
    } else {
        cap
    }
}

/// All real roots with multiplicity of a rational-coefficient polynomial,
/// sorted ascending, each within `tol` of a true root.
///
/// Errors with [`PolyError::NotRealRooted`] when the isolated real root
/// count (with multiplicity) falls short of the degree.
pub fn real_roots_exact(p: &DensePoly<Rat>, tol: &Rat) -> Result<Vec<Rat>, PolyError> {
    assert!(*tol > Rat::from_int(0), "tolerance must be positive");
    let degree = match p.degree() {
        None => return Err(PolyError::ZeroPolynomial),
        Some(0) => return Ok(Vec::new()),
        Some(d) => d,
    };
    let target = bisect_width_cap(tol);
    let mut found: Vec<(Rat, u32)> = Vec::new();
    let mut count = 0usize;
    for (factor, mult) in squarefree_decomposition(p) {
        for (lo, hi) in isolate_squarefree(&factor) {
            let (lo, hi) = refine_bisect(&factor, lo, hi, &target);
            let root = (lo + hi) / Rat::from_int(2);
            found.push((root, mult));
            count += mult as usize;
        }
    }
    if count != degree {
        return Err(PolyError::NotRealRooted {
            found: count,
            degree,
        });
    }
    found.sort_by(|a, b| a.0.cmp(&b.0));
    let mut out = Vec::with_capacity(degree);
    for (root, mult) in found {
        for _ in 0..mult {
            out.push(root.clone());
        }
    }
    Ok(out)
}

/// Float front end: exact isolation on the (exactly converted) rational
/// image, bisection to width `min(tol, 2^-40)`, then up to five Newton
/// steps on the square-free factor, re-validated against the bracket.
pub fn real_roots(p: &DensePoly<f64>, tol: f64) -> Result<Vec<f64>, PolyError> {
    assert!(tol > 0.0, "tolerance must be positive");
    if p.coeffs().iter().any(|c| !c.is_finite()) {
        return Err(PolyError::NonFiniteValue);
    }
    let degree = match p.degree() {
        None => return Err(PolyError::ZeroPolynomial),
        Some(0) => return Ok(Vec::new()),
        Some(d) => d,
    };
    let exact = DensePoly::new(p.coeffs().iter().map(|c| rat_from_f64(*c)).collect());
    let target = bisect_width_cap(&rat_from_f64(tol));
    let mut found: Vec<(f64, u32)> = Vec::new();
    let mut count = 0usize;
    for (factor, mult) in squarefree_decomposition(&exact) {
        let factor_f: DensePoly<f64> =
            DensePoly::new(factor.coeffs().iter().map(Scalar::to_f64).collect());
        let dfactor_f = factor_f.derivative(1);
        for (lo, hi) in isolate_squarefree(&factor) {
            let (lo, hi) = refine_bisect(&factor, lo, hi, &target);
            let (lo_f, hi_f) = (lo.to_f64(), hi.to_f64());
            let mut x = 0.5 * (lo_f + hi_f);
            for _ in 0..5 {
                let d = dfactor_f.eval(&x);
                if d == 0.0 {
                    break;
                }
                let next = x - factor_f.eval(&x) / d;
                // Newton may only sharpen inside the certified bracket
                if !next.is_finite() || next < lo_f - tol || next > hi_f + tol {
                    break;
                }
                if (next - x).abs() < f64::EPSILON * x.abs().max(1.0) {
                    x = next;
                    break;
                }
                x = next;
            }
            found.push((x, mult));
            count += mult as usize;
        }
    }
    if count != degree {
        return Err(PolyError::NotRealRooted {
            found: count,
            degree,
        });
    }
    found.sort_by(|a, b| a.0.partial_cmp(&b.0).unwrap());
    let mut out = Vec::with_capacity(degree);
    for (root, mult) in found {
        for _ in 0..mult {
            out.push(root);
        }
    }
    Ok(out)
}
