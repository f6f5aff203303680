//! How fast does the envelope pinch? Along x = n/2 + eps*sqrt(k(n-k)) the
//! width-controlling quantity sqrt(R)/|Delta| decays quadratically in n;
//! the probe fits the log-log slope.

use turan::{perturbed_v2, scaling_probe, SCALING_SLOPE_WINDOW};

fn main() {
    let n_list = [64u32, 128, 256, 512, 1024];
    let fit = scaling_probe(0.5, |n| n / 4, &n_list).unwrap();
    println!("{:>6} {:>5} {:>10} {:>14}", "n", "k", "x", "sqrt(R)/|Delta|");
    for p in &fit.points {
        println!("{:>6} {:>5} {:>10.3} {:>14.6e}", p.n, p.k, p.x, p.ratio());
    }
    let (lo, hi) = SCALING_SLOPE_WINDOW;
    println!("\nfitted slope: {:.4} (accepted window ({lo}, {hi}))", fit.slope);
    assert!(fit.slope > lo && fit.slope < hi);

    // the perturbed form dominates the plain one in the bulk
    let plain = turan::v_form(|u: &f64| turan::kraw_eval(64, 16, u), 2, &32.0);
    let perturbed = perturbed_v2(64, 16, &32.0).unwrap();
    println!("\nperturbed vs plain order-2 form at (64, 16, x = 32): {perturbed:.6e} >= {plain:.6e}");
}
