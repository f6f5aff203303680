//! Binary Krawtchouk polynomials `K_k^n` and the order-2 Turán form
//! machinery built on them: exact recurrence evaluation, the difference
//! identity, zero computation through the Jacobi-matrix Sturm count, the
//! quadratic-in-`t` factorization of `V_2(K_k)`, its discriminant surface,
//! explicit extreme-zero enclosures, the two-sided envelope for the ratio
//! `V_2(K_k(x+1)) / V_2(K_k(x))`, the perturbed form, a decay-rate probe
//! for `sqrt(R)/|Delta|`, and the mesh certificate derived from the sign
//! pattern of the difference-equation coefficients.
//!
//! Throughout, `s = n - 2k` (the letter `m` stays reserved for the order
//! of the Turán form) and `y = n - 2x`.

use thiserror::Error;

use crate::forms::v_form;
use crate::scalar::Scalar;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum KrawError {
    #[error("parameters out of range: need 0 <= k <= n, got n={n}, k={k}")]
    BadParams { n: u32, k: u32 },
    #[error("(n, k) = ({n}, {k}) is not admissible: need 2 <= k < n/2 - 2*3^(-3/4)*sqrt(n)")]
    NotAdmissible { n: u32, k: u32 },
    #[error("denominator K_k({x}) is within tolerance of zero")]
    NearZeroDenominator { x: f64 },
    #[error("leading coefficient A(x) vanishes; the quadratic in t degenerates")]
    DegenerateQuadratic,
    #[error("x is outside the bulk region: 4nx - s^2 - 4x^2 <= 0")]
    OutsideBulk,
    #[error("precondition failed: {condition}")]
    PreconditionFailed { condition: &'static str },
}

/// Parameter pair for `K_k^n` with the derived quantities used in the
/// order-2 analysis.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct KrawParams {
    pub n: u32,
    pub k: u32,
}

impl KrawParams {
    pub fn new(n: u32, k: u32) -> Result<Self, KrawError> {
        if k > n {
            return Err(KrawError::BadParams { n, k });
        }
        Ok(Self { n, k })
    }

    /// `s = n - 2k`.
    pub fn s(&self) -> i64 {
        i64::from(self.n) - 2 * i64::from(self.k)
    }

    /// The enclosure's validity range: `2 <= k < n/2 - 2*3^(-3/4)*sqrt(n)`.
    pub fn admissible(&self) -> bool {
        self.k >= 2 && f64::from(self.k) < admissibility_threshold(self.n)
    }

    /// Largest admissible `k` for this `n`, if any.
    pub fn max_admissible_k(n: u32) -> Option<u32> {
        let bound = admissibility_threshold(n);
        if bound <= 2.0 {
            return None;
        }
        let mut k = bound.ceil() as u32;
        while k >= 2 {
            if f64::from(k) < bound {
                return Some(k);
            }
            k -= 1;
        }
        None
    }
}

fn admissibility_threshold(n: u32) -> f64 {
    f64::from(n) / 2.0 - 2.0 * 3.0_f64.powf(-0.75) * f64::from(n).sqrt()
}

/// `K_0(x), ..., K_kmax(x)` in one pass of the degree recurrence
/// `(k+1) K_{k+1} = (n - 2x) K_k - (n - k + 1) K_{k-1}`, `K_0 = 1`,
/// `K_1 = n - 2x`. Exact in rational mode.
pub fn kraw_eval_seq<S: Scalar>(n: u32, kmax: u32, x: &S) -> Vec<S> {
    assert!(kmax <= n, "need k <= n");
    let n_i = i64::from(n);
    let mut values = Vec::with_capacity(kmax as usize + 1);
    values.push(S::one());
    if kmax >= 1 {
        values.push(S::from_int(n_i) - S::from_int(2) * x.clone());
    }
    for k in 1..i64::from(kmax) {
        let head = (S::from_int(n_i) - S::from_int(2) * x.clone()) * values[k as usize].clone();
        let tail = S::from_int(n_i - k + 1) * values[k as usize - 1].clone();
        values.push((head - tail) / S::from_int(k + 1));
    }
    values
}

/// `K_k^n(x)`; at integer `x` this equals `sum_j (-1)^j C(x,j) C(n-x,k-j)`.
pub fn kraw_eval<S: Scalar>(n: u32, k: u32, x: &S) -> S {
    kraw_eval_seq(n, k, x).pop().expect("sequence is never empty")
}

/// Residual of the difference identity
/// `(n-x) K_k(x+1) - (n-2k) K_k(x) + x K_k(x-1)`; identically zero, and
/// exactly zero in rational mode for every `n`, `k`, `x`.
pub fn difference_identity_residual<S: Scalar>(n: u32, k: u32, x: &S) -> S {
    let n_s = S::from_int(i64::from(n));
    let s = S::from_int(i64::from(n) - 2 * i64::from(k));
    let up = kraw_eval(n, k, &(x.clone() + S::one()));
    let mid = kraw_eval(n, k, x);
    let down = kraw_eval(n, k, &(x.clone() - S::one()));
    (n_s - x.clone()) * up - s * mid + x.clone() * down
}

/// Eigenvalue count below `x` of the k-by-k Jacobi matrix whose spectrum
/// is the zero set of `K_k^n` (diagonal `n/2`, off-diagonal squares
/// `j(n-j+1)/4`), by the classic pivot-sign sweep.
fn zero_count_below(n: u32, k: u32, x: f64) -> usize {
    let nf = f64::from(n);
    let mut count = 0;
    let mut pivot = 1.0_f64;
    for j in 1..=k {
        let off_sq = if j == 1 {
            0.0
        } else {
            let jj = f64::from(j - 1);
            jj * (nf - jj + 1.0) / 4.0
        };
        let mut d = (nf / 2.0 - x) - off_sq / pivot;
        if d == 0.0 {
            d = -1e-300;
        }
        if d < 0.0 {
            count += 1;
        }
        pivot = d;
    }
    count
}

/// The `k` zeros of `K_k^n`, ascending, each bisected to within `tol`.
///
/// Uses the orthogonal-polynomial Sturm property of the recurrence rather
/// than coefficient-form root isolation, so it stays stable at large `n`.
pub fn kraw_zeros(n: u32, k: u32, tol: f64) -> Vec<f64> {
    assert!(k >= 1 && k <= n, "need 1 <= k <= n");
    assert!(tol > 0.0, "tolerance must be positive");
    let mut zeros = Vec::with_capacity(k as usize);
    for i in 0..k as usize {
        let mut lo = 0.0;
        let mut hi = f64::from(n);
        for _ in 0..200 {
            if hi - lo <= tol {
                break;
            }
            let mid = 0.5 * (lo + hi);
            if zero_count_below(n, k, mid) <= i {
                lo = mid;
            } else {
                hi = mid;
            }
        }
        zeros.push(0.5 * (lo + hi));
    }
    zeros
}

fn y_of_x<S: Scalar>(n: u32, x: &S) -> S {
    S::from_int(i64::from(n)) - S::from_int(2) * x.clone()
}

/// Coefficients `(A, B, C)` of the quadratic in `t = K_k(x-1)/K_k(x)`
/// satisfying, away from zeros of `K_k` and for `1 < x < n-1`,
///
/// ```text
/// 12 (n-x)(n-x-1)(x-1) V_2(K_k)(x) = (A t^2 + B t + C) K_k(x)^2
/// ```
///
/// exactly (rational mode).
pub fn abc_coeffs<S: Scalar>(n: u32, k: u32, x: &S) -> (S, S, S) {
    let n_i = i64::from(n);
    let s_i = n_i - 2 * i64::from(k);
    let nn = S::from_int(n_i);
    let ss = S::from_int(s_i);
    let two = S::from_int(2);
    let four = S::from_int(4);
    let x2 = x.clone() * x.clone();
    let x3 = x2.clone() * x.clone();
    let s2 = ss.clone() * ss.clone();

    let a = -(x.clone()
        * (four.clone() * x2.clone() - four.clone() * nn.clone() * x.clone()
            + four.clone() * nn.clone()
            + s2.clone()
            - four.clone()));
    let b = ss.clone()
        * (four.clone() * x2.clone() - four.clone() * nn.clone() * x.clone()
            + two.clone() * x.clone()
            + S::from_int(3) * nn.clone()
            + s2.clone()
            - four.clone());
    let c = four.clone() * x3 - S::from_int(8) * nn.clone() * x2
        + (four.clone() * nn.clone() * nn.clone() + two.clone() * nn.clone() + s2.clone()
            - four.clone())
            * x.clone()
        - two * nn.clone() * nn.clone()
        - s2.clone() * nn.clone()
        + four * nn
        - s2;
    (a, b, c)
}

fn delta_disc_y<S: Scalar>(n: u32, s: i64, y: &S) -> S {
    let nn = S::from_int(i64::from(n));
    let one = S::one();
    let two = S::from_int(2);
    let n1 = nn.clone() - one.clone();
    let n1_sq = n1.clone() * n1;
    let s2 = S::from_int(s * s);
    let y2 = y.clone() * y.clone();
    let cube = y2.clone() - n1_sq.clone() + s2.clone() - one.clone();
    let square = y2.clone() + s2.clone() - one;
    cube.clone() * cube.clone() * cube - two.clone() * square.clone() * square
        + s2 * y2
        + two.clone() * n1_sq * (nn.clone() * nn - two * S::from_int(i64::from(n)) + S::from_int(5))
}

/// The discriminant `B^2 - 4AC` of the quadratic in `t`, in its closed
/// polynomial form in `y = n - 2x`:
///
/// ```text
/// (y^2-(n-1)^2+s^2-1)^3 - 2(y^2+s^2-1)^2 + s^2 y^2 + 2(n-1)^2(n^2-2n+5)
/// ```
///
/// Verified to equal `B^2 - 4AC` exactly (proportionality factor 1); the
/// test suite asserts the equality in rational mode. Negative throughout
/// the oscillatory region; in particular negative at the extreme zeros for
/// admissible `(n, k)`.
pub fn delta_disc<S: Scalar>(n: u32, k: u32, x: &S) -> S {
    let s = i64::from(n) - 2 * i64::from(k);
    delta_disc_y(n, s, &y_of_x(n, x))
}

/// The discriminant surface of the cubic (in `z = y^2`) behind
/// [`delta_disc`]: `(256(n-1)^2 - 27 s^4 + 32 s^2)(n^2 - s^2)((n-2)^2 - s^2)`.
///
/// Zero exactly where that cubic has a multiple root; its sign separates
/// the parameter regions with one and with two real roots in `z`.
pub fn discriminant_surface<S: Scalar>(n: u32, s: i64) -> S {
    let nn = S::from_int(i64::from(n));
    let one = S::one();
    let two = S::from_int(2);
    let s2 = S::from_int(s * s);
    let s4 = s2.clone() * s2.clone();
    let n1 = nn.clone() - one;
    let n2 = nn.clone() - two;
    let first = S::from_int(256) * n1.clone() * n1 - S::from_int(27) * s4 + S::from_int(32) * s2.clone();
    let second = nn.clone() * nn - s2.clone();
    let third = n2.clone() * n2 - s2;
    first * second * third
}

/// Per-pair record of the extreme-zero enclosure: every zero of `K_k^n`
/// lies in `n/2 +- half_width`, and the smallest exceeds `x1_lower`.
#[derive(Debug, Clone)]
pub struct BoundReport {
    pub n: u32,
    pub k: u32,
    /// `sqrt(k(n-k)) (1 - ((n-2k)/(k(n-k)))^(2/3) / 4)`.
    pub half_width: f64,
    /// `n/2 - sqrt((k-1)(n-k-1))`, from `A(x_1) > 0`.
    pub x1_lower: f64,
    pub zeros: Vec<f64>,
    /// `min_zero - (n/2 - half_width)`; nonnegative iff the low end holds.
    pub slack_low: f64,
    /// `(n/2 + half_width) - max_zero`; nonnegative iff the high end holds.
    pub slack_high: f64,
}

impl BoundReport {
    pub fn enclosure_holds(&self) -> bool {
        self.slack_low >= 0.0 && self.slack_high >= 0.0
    }

    pub fn min_zero(&self) -> f64 {
        *self.zeros.first().expect("k >= 2 zeros")
    }

    pub fn max_zero(&self) -> f64 {
        *self.zeros.last().expect("k >= 2 zeros")
    }
}

/// Computes the enclosure report for an admissible pair.
pub fn extreme_zero_bound(n: u32, k: u32) -> Result<BoundReport, KrawError> {
    let params = KrawParams::new(n, k)?;
    if !params.admissible() {
        return Err(KrawError::NotAdmissible { n, k });
    }
    let nf = f64::from(n);
    let kf = f64::from(k);
    let product = kf * (nf - kf);
    let s = nf - 2.0 * kf;
    let half_width = product.sqrt() * (1.0 - 0.25 * (s / product).powf(2.0 / 3.0));
    let x1_lower = nf / 2.0 - ((kf - 1.0) * (nf - kf - 1.0)).sqrt();
    let zeros = kraw_zeros(n, k, 1e-12);
    let slack_low = zeros.first().unwrap() - (nf / 2.0 - half_width);
    let slack_high = (nf / 2.0 + half_width) - zeros.last().unwrap();
    Ok(BoundReport {
        n,
        k,
        half_width,
        x1_lower,
        zeros,
        slack_low,
        slack_high,
    })
}

/// The back ratio `t(x) = K_k(x-1) / K_k(x)`.
///
/// Errors when `|K_k(x)| <= tol * max(1, |K_k(x-1)|)`; pass a zero
/// tolerance in rational mode for an exact zero test.
pub fn t_ratio<S: Scalar>(n: u32, k: u32, x: &S, tol: &S) -> Result<S, KrawError> {
    let denom = kraw_eval(n, k, x);
    let numer = kraw_eval(n, k, &(x.clone() - S::one()));
    let scale = if numer.abs() > S::one() {
        numer.abs()
    } else {
        S::one()
    };
    if denom.is_zero() || denom.abs() <= tol.clone() * scale {
        return Err(KrawError::NearZeroDenominator { x: x.to_f64() });
    }
    Ok(numer / denom)
}

/// The two real solutions of `A(x) t^2 + B(x) t + C(x) = 0` bounding the
/// back ratio where the discriminant is nonnegative; `None` when the
/// discriminant is negative (no real branch).
pub fn t_branch_bounds(n: u32, k: u32, x: f64) -> Result<Option<(f64, f64)>, KrawError> {
    let (a, b, c) = abc_coeffs::<f64>(n, k, &x);
    if a == 0.0 {
        return Err(KrawError::DegenerateQuadratic);
    }
    let disc = b * b - 4.0 * a * c;
    if disc < 0.0 {
        return Ok(None);
    }
    let r1 = (-b - disc.sqrt()) / (2.0 * a);
    let r2 = (-b + disc.sqrt()) / (2.0 * a);
    Ok(Some(if r1 <= r2 { (r1, r2) } else { (r2, r1) }))
}

/// The radicand `R` of the envelope formula at `y = n - 2x`:
/// `(n^2-y^2-2n+2y)(n^2-s^2)((n-2)^2-s^2)((n-1)^2-s^2-(y-1)^2)`.
pub fn envelope_radicand<S: Scalar>(n: u32, k: u32, x: &S) -> S {
    let s = i64::from(n) - 2 * i64::from(k);
    envelope_radicand_y(n, s, &y_of_x(n, x))
}

fn envelope_radicand_y<S: Scalar>(n: u32, s: i64, y: &S) -> S {
    let nn = S::from_int(i64::from(n));
    let one = S::one();
    let two = S::from_int(2);
    let s2 = S::from_int(s * s);
    let y2 = y.clone() * y.clone();
    let n1 = nn.clone() - one.clone();
    let n2 = nn.clone() - two.clone();
    let first = nn.clone() * nn.clone() - y2 - two.clone() * nn.clone() + two * y.clone();
    let second = nn.clone() * nn - s2.clone();
    let third = n2.clone() * n2 - s2.clone();
    let ym1 = y.clone() - one;
    let fourth = n1.clone() * n1 - s2 - ym1.clone() * ym1;
    first * second * third * fourth
}

/// `S(y) = y(y-2)(y-1)^2 - (n^2-2n-s^2+2)^2 + 7(n-1)^2`, the shift term of
/// the envelope numerator.
fn envelope_shift_y(n: u32, s: i64, y: f64) -> f64 {
    let nf = f64::from(n);
    let s2 = (s * s) as f64;
    let mid = nf * nf - 2.0 * nf - s2 + 2.0;
    y * (y - 2.0) * (y - 1.0) * (y - 1.0) - mid * mid + 7.0 * (nf - 1.0) * (nf - 1.0)
}

/// Two-sided envelope for `V_2(K_k(x+1)) / V_2(K_k(x))`: the ordered pair
///
/// ```text
/// z_{+,-} = (x-1)(Delta(x+1/2) - 3S -+ 6 sqrt(R)) / ((n-x-2) Delta(x))
/// ```
///
/// with `Delta` the closed-form discriminant [`delta_disc`], `S` and `R`
/// evaluated at `y = n - 2x`, and `Delta(x+1/2)` at `y - 1`.
///
/// Preconditions (each failure is reported by name): admissible `(n, k)`,
/// `x` and `x+1` inside `(1, n-2)`, `Delta(x) < 0`, and `R >= 0`.
pub fn ratio_envelope(n: u32, k: u32, x: f64) -> Result<(f64, f64), KrawError> {
    let params = KrawParams::new(n, k)?;
    if !params.admissible() {
        return Err(KrawError::PreconditionFailed {
            condition: "admissible(n, k)",
        });
    }
    let nf = f64::from(n);
    if !(x > 1.0 && x + 1.0 < nf - 2.0) {
        return Err(KrawError::PreconditionFailed {
            condition: "x and x+1 inside (1, n-2)",
        });
    }
    let s = params.s();
    let y = nf - 2.0 * x;
    let delta = delta_disc_y::<f64>(n, s, &y);
    if delta >= 0.0 {
        return Err(KrawError::PreconditionFailed {
            condition: "Delta(x) < 0",
        });
    }
    let radicand = envelope_radicand_y::<f64>(n, s, &y);
    if radicand < 0.0 {
        return Err(KrawError::PreconditionFailed {
            condition: "R >= 0",
        });
    }
    let delta_half = delta_disc_y::<f64>(n, s, &(y - 1.0));
    let shift = envelope_shift_y(n, s, y);
    let denom = (nf - x - 2.0) * delta;
    let z_plus = (x - 1.0) * (delta_half - 3.0 * shift + 6.0 * radicand.sqrt()) / denom;
    let z_minus = (x - 1.0) * (delta_half - 3.0 * shift - 6.0 * radicand.sqrt()) / denom;
    Ok(if z_plus <= z_minus {
        (z_plus, z_minus)
    } else {
        (z_minus, z_plus)
    })
}

/// The perturbed order-2 form
/// `V_2(K_k)(x) + (K_k(x+1) - K_k(x-1))^2 / (2(4nx - s^2 - 4x^2))`,
/// defined in the bulk `4nx - s^2 - 4x^2 > 0` (equivalently
/// `y^2 < n^2 - s^2`), where it dominates `V_2` pointwise.
pub fn perturbed_v2<S: Scalar>(n: u32, k: u32, x: &S) -> Result<S, KrawError> {
    let s = i64::from(n) - 2 * i64::from(k);
    let nn = S::from_int(i64::from(n));
    let four = S::from_int(4);
    let denom = four.clone() * nn * x.clone()
        - S::from_int(s * s)
        - four * x.clone() * x.clone();
    if denom <= S::zero() {
        return Err(KrawError::OutsideBulk);
    }
    let base = v_form(|u: &S| kraw_eval(n, k, u), 2, x);
    let spread = kraw_eval(n, k, &(x.clone() + S::one())) - kraw_eval(n, k, &(x.clone() - S::one()));
    Ok(base + spread.clone() * spread / (S::from_int(2) * denom))
}

/// Accepted slope window for the decay-rate probe; the underlying rate is
/// quadratic, and the window rejects first-order decay decisively.
pub const SCALING_SLOPE_WINDOW: (f64, f64) = (-2.5, -1.6);

#[derive(Debug, Clone)]
pub struct ScalingPoint {
    pub n: u32,
    pub k: u32,
    pub x: f64,
    pub sqrt_radicand: f64,
    pub abs_delta: f64,
}

impl ScalingPoint {
    pub fn ratio(&self) -> f64 {
        self.sqrt_radicand / self.abs_delta
    }
}

#[derive(Debug, Clone)]
pub struct ScalingFit {
    /// Least-squares slope of `log(sqrt(R)/|Delta|)` against `log n`.
    pub slope: f64,
    pub points: Vec<ScalingPoint>,
}

/// Fits the decay rate of `sqrt(R)/|Delta(x)|` along `x = n/2 +
/// eps*sqrt(k(n-k))` over the given `n` values, with `k` chosen per `n` by
/// `k_rule`. `eps` in `(-1, 1)` spans the bulk region `y^2 < n^2 - s^2`
/// (the boundary values land exactly on its edge and are excluded).
pub fn scaling_probe(
    eps: f64,
    k_rule: impl Fn(u32) -> u32,
    n_list: &[u32],
) -> Result<ScalingFit, KrawError> {
    if !(eps > -1.0 && eps < 1.0) {
        return Err(KrawError::PreconditionFailed {
            condition: "eps strictly inside (-1, 1)",
        });
    }
    if n_list.len() < 2 {
        return Err(KrawError::PreconditionFailed {
            condition: "at least two n values to fit a slope",
        });
    }
    let mut points = Vec::with_capacity(n_list.len());
    for &n in n_list {
        let k = k_rule(n);
        let params = KrawParams::new(n, k)?;
        if !params.admissible() {
            return Err(KrawError::NotAdmissible { n, k });
        }
        let nf = f64::from(n);
        let kf = f64::from(k);
        let x = nf / 2.0 + eps * (kf * (nf - kf)).sqrt();
        let s = params.s();
        let y = nf - 2.0 * x;
        let radicand = envelope_radicand_y::<f64>(n, s, &y);
        if radicand < 0.0 {
            return Err(KrawError::PreconditionFailed {
                condition: "R >= 0 along the probe line",
            });
        }
        let delta = delta_disc_y::<f64>(n, s, &y);
        if delta == 0.0 {
            return Err(KrawError::PreconditionFailed {
                condition: "Delta(x) != 0 along the probe line",
            });
        }
        points.push(ScalingPoint {
            n,
            k,
            x,
            sqrt_radicand: radicand.sqrt(),
            abs_delta: delta.abs(),
        });
    }
    let logs: Vec<(f64, f64)> = points
        .iter()
        .map(|p| (f64::from(p.n).ln(), p.ratio().ln()))
        .collect();
    let mean_x = logs.iter().map(|p| p.0).sum::<f64>() / logs.len() as f64;
    let mean_y = logs.iter().map(|p| p.1).sum::<f64>() / logs.len() as f64;
    let cov: f64 = logs.iter().map(|p| (p.0 - mean_x) * (p.1 - mean_y)).sum();
    let var: f64 = logs.iter().map(|p| (p.0 - mean_x) * (p.0 - mean_x)).sum();
    Ok(ScalingFit {
        slope: cov / var,
        points,
    })
}

/// Mesh lower bound certified by the sign pattern of the difference
/// equation `K(x+1) = b(x) K(x) - c(x) K(x-1)` on `(0, n)`, where
/// `b = (n-2k)/(n-x)` and `c = x/(n-x)`: `c > 0` always gives mesh >= 1,
/// and `b > 0` (that is, `k < n/2`) upgrades it to mesh >= 2.
pub fn mesh_certificate(n: u32, k: u32) -> u8 {
    assert!(k >= 1 && 2 * k <= n, "need 1 <= k <= n/2");
    if 2 * k < n {
        2
    } else {
        1
    }
}
