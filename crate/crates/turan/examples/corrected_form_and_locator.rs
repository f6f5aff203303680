//! At mesh >= 1 the plain order-1 form can fail, but the corrected form
//! (with its squared bracket and any weight mu >= 0) cannot; and wherever
//! the plain form does fail, the failure point is trapped between two
//! roots less than sqrt(2) apart.

use turan::{locate_violation, u_form, v_form, verify_nonneg, Grid, RootPoly};

fn main() {
    // gaps 1.2 and 2.8: mesh 1.2 is above 1 but below sqrt(2)
    let p = RootPoly::new(1.0, vec![0.0, 1.2, 4.0]).unwrap();
    let grid = Grid::default_for(&p);

    let plain = verify_nonneg("order-1", |x| v_form(|u: &f64| p.eval(u), 1, &x), &grid, 1e-12);
    println!(
        "plain order-1 form: min {:+.4} at x = {:.2}, violations {}",
        plain.min_value,
        plain.argmin,
        plain.violations.len()
    );

    for mu in [0.0, 1.0, 2.5] {
        let corrected = verify_nonneg(
            "corrected",
            |x| u_form(|u: &f64| p.eval(u), &mu, &x).unwrap(),
            &grid,
            1e-12,
        );
        println!(
            "corrected form, mu = {mu}: min {:+.4e}, violations {}",
            corrected.min_value,
            corrected.violations.len()
        );
        assert!(corrected.passed());
    }

    println!("\nevery plain-form violation is bracketed by a tight root pair:");
    for (x, value) in plain.violations.iter().take(5) {
        let (a, b) = locate_violation(&p, *x).unwrap();
        println!("  x = {x:+.2} (value {value:+.3}) -> roots ({a}, {b}), gap {:.3} <= sqrt(2)", b - a);
        assert!(b - a <= 2.0_f64.sqrt() + 1e-9);
    }
}
