//! Discrete Turán/Laguerre inequalities for real-rooted polynomials and
//! their application to binary Krawtchouk polynomials.
//!
//! The toolkit has three layers:
//!
//! - [`poly`] and [`roots`]: polynomial substrate — factored and dense
//!   representations over an exact-rational/float scalar tower
//!   ([`scalar`]), the mesh (minimal root gap), and Sturm-sequence real
//!   root isolation with the real-rootedness precondition checked.
//! - [`forms`] and [`scan`]: the inequality functionals (the discrete
//!   order-`m` form and its mesh threshold `sqrt(4 - 6/(m+2))`, the
//!   derivative form, the sequence form, the mesh-1 corrected form, exact
//!   structural identities, degree-sharpened variants) and grid-scan
//!   verification drivers with exact recheck of float candidates
//!   ([`search`]).
//! - [`krawtchouk`]: exact recurrence evaluation of `K_k^n`, zeros via the
//!   Jacobi-matrix Sturm count, the quadratic-in-`t` factorization of the
//!   order-2 form, explicit extreme-zero enclosures, the two-sided ratio
//!   envelope, and mesh certificates from the difference equation.
//!
//! Everything is pure and immutable: all functions are safe to call from
//! concurrent contexts without synchronization.
//!
//! The `turan` binary ([`cli`]) exposes the verification suites and bound
//! tables with CSV/JSON output; the `examples/` directory demonstrates
//! each capability as a small runnable program.

pub mod cli;
pub mod forms;
pub mod krawtchouk;
pub mod poly;
pub mod report;
pub mod roots;
pub mod scalar;
pub mod scan;
pub mod search;

pub use forms::{
    conjecture_form, delta_threshold, delta_threshold_sq, l_form, sequence_form, sharp_laguerre_1,
    sharp_laguerre_2, u_form, v_form, v_form_closed_form, v_form_via_recursion, FormError,
    SequenceView,
};
pub use krawtchouk::{
    abc_coeffs, delta_disc, difference_identity_residual, discriminant_surface,
    extreme_zero_bound, kraw_eval, kraw_eval_seq, kraw_zeros, mesh_certificate, perturbed_v2,
    ratio_envelope, scaling_probe, t_branch_bounds, t_ratio, BoundReport, KrawError, KrawParams,
    ScalingFit, ScalingPoint, SCALING_SLOPE_WINDOW,
};
pub use poly::{DensePoly, PolyError, RootPoly};
pub use roots::{real_roots, real_roots_exact, sturm_count};
pub use scalar::{binomial, factorial, rat_from_f64, Rat, Scalar};
pub use scan::{
    locate_violation, report_from_samples, scan, sharpness_probe, verify_nonneg, FormReport, Grid,
    GridError, LocateError,
};
pub use search::{recheck_exact, search_conjecture, ConjectureReport, ConjectureSearch};

#[cfg(test)]
mod tests {
    #[test]
    fn everything_is_send_and_sync() {
        fn check<T: Send + Sync>() {}
        check::<super::RootPoly<super::Rat>>();
        check::<super::DensePoly<f64>>();
        check::<super::SequenceView<super::Rat>>();
        check::<super::FormReport>();
        check::<super::BoundReport>();
        check::<super::ConjectureReport>();
    }
}
