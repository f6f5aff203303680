//! Grid-scan verification drivers: sample an inequality functional over an
//! interval, record the minimum and every sample below `-tol`, and probe
//! the sharpness of the mesh threshold.
//!
//! Scans run in float mode; anything they flag should be re-verified in
//! exact mode before being believed (see [`crate::search`] and the
//! acceptance suite for the pattern).

use thiserror::Error;

use crate::forms::{v_form, v_form_closed_form};
use crate::poly::RootPoly;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GridError {
    #[error("grid step must be positive and finite")]
    BadStep,
    #[error("grid must satisfy start <= stop with finite endpoints")]
    BadRange,
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum LocateError {
    #[error("degree must be at least 2")]
    DegreeTooSmall,
    #[error("mesh must be at least 1")]
    MeshTooSmall,
    #[error("no violation at this point: p(x)^2 - p(x+1)p(x-1) >= 0")]
    NoViolation,
    #[error("no pair of consecutive roots brackets the point")]
    NotBracketed,
}

/// A uniform sampling grid `start, start+step, ..., <= stop`.
#[derive(Debug, Clone, PartialEq)]
pub struct Grid {
    pub start: f64,
    pub stop: f64,
    pub step: f64,
}

impl Grid {
    pub fn new(start: f64, stop: f64, step: f64) -> Result<Self, GridError> {
        if !step.is_finite() || step <= 0.0 {
            return Err(GridError::BadStep);
        }
        if !start.is_finite() || !stop.is_finite() || start > stop {
            return Err(GridError::BadRange);
        }
        Ok(Self { start, stop, step })
    }

    /// Default scan window for a root polynomial: step `min(0.1, mesh/8)`,
    /// span `[x_1 - 3, x_k + 3]`. Degenerate meshes (zero, infinite, or no
    /// roots) fall back to step 0.1 and a window around the root set.
    pub fn default_for(p: &RootPoly<f64>) -> Self {
        let (lo, hi) = match (p.roots().first(), p.roots().last()) {
            (Some(a), Some(b)) => (a - 3.0, b + 3.0),
            _ => (-3.0, 3.0),
        };
        let step = match p.mesh() {
            Some(m) if m > 0.0 => (m / 8.0).min(0.1),
            _ => 0.1,
        };
        Self { start: lo, stop: hi, step }
    }

    /// The sample points; index-generated so the count is deterministic.
    pub fn points(&self) -> impl Iterator<Item = f64> + '_ {
        let count = ((self.stop - self.start) / self.step + 1e-9).floor() as u64;
        (0..=count).map(move |i| self.start + i as f64 * self.step)
    }
}

/// Result of scanning a functional over a grid.
#[derive(Debug, Clone)]
pub struct FormReport {
    pub form_name: String,
    pub grid: Grid,
    pub min_value: f64,
    pub argmin: f64,
    /// Samples `(x, value)` with `value < -tol`, in grid order.
    pub violations: Vec<(f64, f64)>,
    pub tol: f64,
}

impl FormReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Evaluates `form` at every grid point.
pub fn scan(form: impl Fn(f64) -> f64, grid: &Grid) -> Vec<(f64, f64)> {
    grid.points().map(|x| (x, form(x))).collect()
}

/// Builds the report for already-computed samples.
pub fn report_from_samples(
    form_name: &str,
    grid: &Grid,
    samples: &[(f64, f64)],
    tol: f64,
) -> FormReport {
    let mut min_value = f64::INFINITY;
    let mut argmin = grid.start;
    let mut violations = Vec::new();
    for &(x, v) in samples {
        if v < min_value {
            min_value = v;
            argmin = x;
        }
        if v < -tol {
            violations.push((x, v));
        }
    }
    FormReport {
        form_name: form_name.to_owned(),
        grid: grid.clone(),
        min_value,
        argmin,
        violations,
        tol,
    }
}

/// Scans `form` over the grid and reports min, argmin and all samples
/// below `-tol`.
pub fn verify_nonneg(
    form_name: &str,
    form: impl Fn(f64) -> f64,
    grid: &Grid,
    tol: f64,
) -> FormReport {
    let samples = scan(form, grid);
    report_from_samples(form_name, grid, &samples, tol)
}

/// Minimum of `V_m` for the monic polynomial with equally spaced roots
/// `0, spacing, ..., m*spacing`, over a fine grid plus the vertex of the
/// underlying closed quadratic. Returns `(min_value, argmin)`.
///
/// At `spacing = delta_threshold(m)` the minimum is zero to within float
/// noise; just below the threshold it goes genuinely negative.
pub fn sharpness_probe(m: u32, spacing: f64) -> (f64, f64) {
    assert!(spacing > 0.0, "spacing must be positive");
    let roots: Vec<f64> = (0..=m as i64).map(|i| i as f64 * spacing).collect();
    let p = RootPoly::monic(roots.clone()).expect("finite roots");
    let form = |x: f64| v_form(|u: &f64| p.eval(u), m, &x);

    let grid = Grid {
        start: -3.0,
        stop: m as f64 * spacing + 3.0,
        step: 1e-4,
    };
    let mut best = (f64::INFINITY, grid.start);
    for x in grid.points() {
        let v = form(x);
        if v < best.0 {
            best = (v, x);
        }
    }
    // the quadratic's vertex is the true argmin for this construction
    let vertex = roots.iter().sum::<f64>() / (m as f64 + 1.0);
    let v = v_form_closed_form(&roots, m, &vertex).expect("arity matches by construction");
    if v < best.0 {
        best = (v, vertex);
    }
    best
}

/// Given a mesh->=1 polynomial of degree >= 2 and a point where
/// `p(x0)^2 - p(x0+1) p(x0-1) < 0`, returns the consecutive roots
/// bracketing `x0`; their gap is at most `sqrt(2)` plus float slack.
pub fn locate_violation(p: &RootPoly<f64>, x0: f64) -> Result<(f64, f64), LocateError> {
    if p.degree() < 2 {
        return Err(LocateError::DegreeTooSmall);
    }
    if !p.mesh_at_least(&(1.0 - 1e-12)) {
        return Err(LocateError::MeshTooSmall);
    }
    let value = p.eval(&x0) * p.eval(&x0) - p.eval(&(x0 + 1.0)) * p.eval(&(x0 - 1.0));
    if value >= 0.0 {
        return Err(LocateError::NoViolation);
    }
    let roots = p.roots();
    for w in roots.windows(2) {
        if w[0] < x0 && x0 < w[1] {
            return Ok((w[0], w[1]));
        }
    }
    Err(LocateError::NotBracketed)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::forms::{delta_threshold, u_form};

    #[test]
    fn grid_points_hit_both_ends() {
        let g = Grid::new(-3.0, 6.0, 0.1).unwrap();
        let pts: Vec<f64> = g.points().collect();
        assert_eq!(pts.len(), 91);
        assert_eq!(pts[0], -3.0);
        assert!((pts[90] - 6.0).abs() < 1e-9);
    }

    #[test]
    fn grid_validation() {
        assert_eq!(Grid::new(0.0, 1.0, 0.0).unwrap_err(), GridError::BadStep);
        assert_eq!(Grid::new(0.0, 1.0, -0.5).unwrap_err(), GridError::BadStep);
        assert_eq!(Grid::new(2.0, 1.0, 0.5).unwrap_err(), GridError::BadRange);
        // a single-point grid is legal
        let g = Grid::new(1.0, 1.0, 0.5).unwrap();
        assert_eq!(g.points().collect::<Vec<_>>(), vec![1.0]);
    }

    #[test]
    fn wide_mesh_scan_is_clean() {
        // mesh 1.5 > sqrt(2): order-1 form nonnegative everywhere
        let p = RootPoly::new(1.0, vec![0.0, 1.5, 3.0]).unwrap();
        let grid = Grid::default_for(&p);
        let report = verify_nonneg(
            "v1",
            |x| v_form(|u: &f64| p.eval(u), 1, &x),
            &grid,
            1e-12,
        );
        assert!(report.passed(), "min {}", report.min_value);
    }

    #[test]
    fn unit_mesh_u_form_is_clean() {
        let p = RootPoly::new(1.0, vec![0.0, 1.0, 2.0, 3.2]).unwrap();
        let grid = Grid::default_for(&p);
        let report = verify_nonneg(
            "u",
            |x| u_form(|u: &f64| p.eval(u), &0.0, &x).unwrap(),
            &grid,
            1e-12,
        );
        assert!(report.passed(), "min {}", report.min_value);
    }

    #[test]
    fn below_threshold_spacing_dips_negative_near_the_midpoint() {
        let m = 2;
        let spacing = 0.99 * delta_threshold(m);
        let roots: Vec<f64> = (0..=m as i64).map(|i| i as f64 * spacing).collect();
        let p = RootPoly::monic(roots.clone()).unwrap();
        let grid = Grid::default_for(&p);
        let report = verify_nonneg(
            "v2",
            |x| v_form(|u: &f64| p.eval(u), m, &x),
            &grid,
            1e-12,
        );
        assert!(report.min_value < 0.0);
        let mid = roots.iter().sum::<f64>() / roots.len() as f64;
        assert!((report.argmin - mid).abs() < 0.5, "argmin {}", report.argmin);
    }

    #[test]
    fn sharpness_probe_boundary_behaviour() {
        let (min_at, arg) = sharpness_probe(1, delta_threshold(1));
        assert!(min_at.abs() < 1e-10, "{min_at}");
        assert!((arg - 2.0_f64.sqrt() / 2.0).abs() < 1e-3, "{arg}");
        let (min_below, _) = sharpness_probe(1, 1.3);
        assert!(min_below < -1e-6);
        let (min_3, _) = sharpness_probe(3, delta_threshold(3));
        assert!(min_3.abs() < 1e-10);
    }

    #[test]
    fn locate_violation_examples() {
        let p = RootPoly::new(1.0, vec![0.0, 1.2, 4.0]).unwrap();
        assert_eq!(locate_violation(&p, 0.6).unwrap(), (0.0, 1.2));

        // p = x(x-1) at 1/2: 0.0625 - 0.5625 < 0, bracketed by (0, 1)
        let q = RootPoly::new(1.0, vec![0.0, 1.0]).unwrap();
        assert_eq!(locate_violation(&q, 0.5).unwrap(), (0.0, 1.0));

        // mesh >= sqrt(2): the sign precondition fails everywhere
        let wide = RootPoly::new(1.0, vec![0.0, 1.5, 3.0]).unwrap();
        for x0 in Grid::default_for(&wide).points() {
            assert_eq!(locate_violation(&wide, x0), Err(LocateError::NoViolation));
        }

        let small = RootPoly::new(1.0, vec![0.0, 0.3]).unwrap();
        assert_eq!(locate_violation(&small, 0.1), Err(LocateError::MeshTooSmall));
        let deg1 = RootPoly::new(1.0, vec![0.0]).unwrap();
        assert_eq!(locate_violation(&deg1, 0.1), Err(LocateError::DegreeTooSmall));
    }

    #[test]
    fn located_gap_is_within_the_tight_pair_bound() {
        let p = RootPoly::new(1.0, vec![0.0, 1.2, 4.0]).unwrap();
        let grid = Grid::default_for(&p);
        let mut found = 0;
        for x0 in grid.points() {
            if let Ok((a, b)) = locate_violation(&p, x0) {
                found += 1;
                assert!(b - a <= 2.0_f64.sqrt() + 1e-9);
            }
        }
        assert!(found > 0, "expected at least one violation in the scan");
    }
}
