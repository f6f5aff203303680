//! Seeded randomized search for counterexamples to the conjectured
//! discrete degree-sharpened Laguerre inequality.
//!
//! Candidate polynomials are real-rooted by construction (root lists on an
//! integer lattice with jitter, rescaled so the mesh is at least 1). Any
//! grid sample below `-tol` is re-verified in exact rational arithmetic
//! before it may count as a counterexample; float dips that do not survive
//! the exact recheck are reported but not flagged.

use rand::distributions::{Distribution, Uniform};
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::forms::conjecture_form;
use crate::poly::RootPoly;
use crate::scalar::{rat_from_f64, Rat, Scalar};
use crate::scan::Grid;

/// Search configuration; the seed fully determines the trial sequence.
#[derive(Debug, Clone)]
pub struct ConjectureSearch {
    pub max_degree: u32,
    pub trials: u64,
    pub seed: u64,
    /// Float threshold below which a sample becomes a recheck candidate.
    pub tol: f64,
}

impl ConjectureSearch {
    pub fn new(max_degree: u32, trials: u64, seed: u64, tol: f64) -> Self {
        Self {
            max_degree,
            trials,
            seed,
            tol,
        }
    }
}

#[derive(Debug, Clone)]
pub struct ConjectureReport {
    pub trials: u64,
    /// Smallest sampled value across all trials.
    pub min_value: f64,
    pub witness_leading: f64,
    pub witness_roots: Vec<f64>,
    pub witness_x: f64,
    /// Number of float samples below `-tol` (before exact recheck).
    pub float_candidates: u64,
    /// True only if some candidate re-verified strictly negative exactly.
    pub exact_counterexample: bool,
}

/// Exact re-verification: is the form strictly negative at this sample?
///
/// Roots, leading coefficient and sample point convert to rationals
/// exactly, so the verdict is a statement about the polynomial actually
/// tested, not about float rounding.
pub fn recheck_exact(leading: f64, roots: &[f64], x: f64) -> bool {
    let p = RootPoly::new(
        rat_from_f64(leading),
        roots.iter().copied().map(rat_from_f64).collect(),
    )
    .expect("finite candidate");
    let k = roots.len() as u32;
    let value = conjecture_form(|u: &Rat| p.eval(u), k, &rat_from_f64(x));
    value < Rat::zero()
}

/// Runs the randomized search and reports the global minimum with its
/// witness. Deterministic for a fixed configuration.
pub fn search_conjecture(cfg: &ConjectureSearch) -> ConjectureReport {
    assert!(cfg.max_degree >= 1, "need degree >= 1");
    assert!(cfg.trials >= 1, "need at least one trial");
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let degree_dist = Uniform::new_inclusive(1, cfg.max_degree);
    let lattice = Uniform::new_inclusive(-6i64, 6);
    let jitter = Uniform::new(0.0f64, 0.5);

    let mut report = ConjectureReport {
        trials: cfg.trials,
        min_value: f64::INFINITY,
        witness_leading: 1.0,
        witness_roots: Vec::new(),
        witness_x: 0.0,
        float_candidates: 0,
        exact_counterexample: false,
    };

    for _ in 0..cfg.trials {
        let degree = degree_dist.sample(&mut rng) as usize;
        let mut roots: Vec<f64> = (0..degree)
            .map(|_| lattice.sample(&mut rng) as f64 + jitter.sample(&mut rng))
            .collect();
        roots.sort_by(|a, b| a.partial_cmp(b).unwrap());
        let leading = [1.0, -1.0, 2.0][rng.gen_range(0..3usize)];
        let p = match RootPoly::new(leading, roots.clone()) {
            Ok(p) => p,
            Err(_) => continue,
        };
        // rescale the argument so the mesh is at least 1
        let p = match p.mesh() {
            Some(mesh) if mesh <= 0.0 => continue, // coincident lattice+jitter draw
            Some(mesh) if mesh < 1.0 => {
                let scaled: Vec<f64> = p.roots().iter().map(|r| r / mesh).collect();
                RootPoly::new(leading, scaled).expect("finite rescale")
            }
            _ => p,
        };
        let grid = Grid::default_for(&p);
        let k = p.degree() as u32;
        for x in grid.points() {
            let value = conjecture_form(|u: &f64| p.eval(u), k, &x);
            if value < report.min_value {
                report.min_value = value;
                report.witness_leading = *p.leading();
                report.witness_roots = p.roots().to_vec();
                report.witness_x = x;
            }
            if value < -cfg.tol {
                report.float_candidates += 1;
                if recheck_exact(*p.leading(), p.roots(), x) {
                    report.exact_counterexample = true;
                }
            }
        }
    }
    report
}
