//! The two-sided envelope for V_2(K_k(x+1)) / V_2(K_k(x)) in the
//! oscillatory region, plus the branch bounds that confine the back ratio
//! t(x) = K_k(x-1)/K_k(x) where the quadratic has real roots.

use turan::{kraw_eval, ratio_envelope, t_branch_bounds, t_ratio, v_form};

fn main() {
    let (n, k) = (64u32, 16u32);
    println!("envelope for (n, k) = ({n}, {k}):");
    println!("{:>4} {:>14} {:>14} {:>14} {:>10}", "x", "lo", "ratio", "hi", "width/|r|");
    for x in (20..=44).step_by(4) {
        let xf = f64::from(x);
        let (lo, hi) = ratio_envelope(n, k, xf).unwrap();
        let v_here = v_form(|u: &f64| kraw_eval(n, k, u), 2, &xf);
        let v_next = v_form(|u: &f64| kraw_eval(n, k, u), 2, &(xf + 1.0));
        let ratio = v_next / v_here;
        assert!(lo <= ratio && ratio <= hi);
        println!(
            "{x:>4} {lo:>14.9} {ratio:>14.9} {hi:>14.9} {:>10.2e}",
            (hi - lo) / ratio.abs()
        );
    }

    // outside the oscillatory region the quadratic in t has real branches
    // that confine the back ratio; the smaller branch tracks it closely
    println!("\nback-ratio confinement at the left edge (x = 2..4):");
    for x in [2.0f64, 3.0, 4.0] {
        match t_branch_bounds(n, k, x).unwrap() {
            None => println!("  x = {x}: no real branch (negative discriminant)"),
            Some((t_lo, t_hi)) => {
                let t = t_ratio(n, k, &x, &1e-12).unwrap();
                println!(
                    "  x = {x}: t = {t:.6} in [{t_lo:.6}, {t_hi:.6}], |t - t_lo| = {:.2e}",
                    (t - t_lo).abs()
                );
            }
        }
    }
}
