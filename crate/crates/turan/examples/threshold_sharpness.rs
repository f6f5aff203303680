//! The mesh threshold is sharp: equally spaced roots exactly at
//! sqrt(4 - 6/(m+2)) drive the minimum of the order-m form to zero, and
//! any tighter spacing makes it genuinely negative.

use turan::{delta_threshold, sharpness_probe};

fn main() {
    println!("{:>3} {:>12} {:>16} {:>16}", "m", "threshold", "min at spacing", "min at 0.99x");
    for m in 1..=4 {
        let d = delta_threshold(m);
        let (at, _) = sharpness_probe(m, d);
        let (below, argmin) = sharpness_probe(m, 0.99 * d);
        println!("{m:>3} {d:>12.6} {at:>16.3e} {below:>16.3e}   (argmin {argmin:.4})");
    }
    println!("\nspacing well above the threshold stays comfortably positive:");
    let (min, argmin) = sharpness_probe(2, 2.5);
    println!("m = 2, spacing 2.5: min = {min:.6} at x = {argmin:.4}");
}
