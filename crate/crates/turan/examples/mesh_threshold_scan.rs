//! Scan the order-m discrete Turán form of a real-rooted polynomial and
//! watch the mesh threshold sqrt(4 - 6/(m+2)) do its work: roots spaced
//! above the threshold keep the form nonnegative, roots spaced below let
//! it dip.

use turan::{delta_threshold, v_form, verify_nonneg, Grid, RootPoly};

fn scan(label: &str, roots: &[f64], m: u32) {
    let p = RootPoly::new(1.0, roots.to_vec()).unwrap();
    let grid = Grid::default_for(&p);
    let report = verify_nonneg(label, |x| v_form(|u: &f64| p.eval(u), m, &x), &grid, 1e-12);
    println!(
        "{label}: mesh = {:?}, threshold = {:.5}, min = {:+.6e} at x = {:.3}, violations = {}",
        p.mesh(),
        delta_threshold(m),
        report.min_value,
        report.argmin,
        report.violations.len()
    );
}

fn main() {
    println!("order m = 1 (threshold sqrt(2) ~ 1.41421):");
    scan("  spacing 1.5  ", &[0.0, 1.5, 3.0], 1);
    scan("  spacing 1.0  ", &[0.0, 1.0, 2.0], 1);

    println!("\norder m = 2 (threshold sqrt(5/2) ~ 1.58114):");
    scan("  spacing 1.7  ", &[0.0, 1.7, 3.4, 5.1], 2);
    scan("  spacing 1.45 ", &[0.0, 1.45, 2.9, 4.35], 2);

    println!("\na repeated root has mesh 0, so no order applies:");
    scan("  double root  ", &[0.0, 0.0, 2.0], 1);
}
