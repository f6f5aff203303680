//! Zeros of binary Krawtchouk polynomials, the mesh certificate from the
//! difference equation, and the explicit enclosure of the extreme zeros
//! for admissible (n, k).

use turan::{extreme_zero_bound, kraw_zeros, mesh_certificate, KrawParams};

fn main() {
    let zeros = kraw_zeros(16, 2, 1e-12);
    println!("zeros of K_2^16: {zeros:?} (closed form: (16 +- 4)/2 = 6, 10)");

    for (n, k) in [(40u32, 10u32), (16, 2), (8, 4)] {
        let cert = mesh_certificate(n, k);
        let zs = kraw_zeros(n, k, 1e-12);
        let mesh = zs
            .windows(2)
            .map(|w| w[1] - w[0])
            .fold(f64::INFINITY, f64::min);
        println!("(n={n:>3}, k={k:>2}): certified mesh >= {cert}, computed mesh = {mesh:.4}");
    }

    println!();
    println!(
        "{:>4} {:>4} {:>12} {:>12} {:>12} {:>12} {:>11} {:>11}",
        "n", "k", "half_width", "x1_lower", "min_zero", "max_zero", "slack_low", "slack_high"
    );
    for (n, k) in [(16u32, 2u32), (64, 16), (100, 30), (200, 41), (200, 85)] {
        let r = extreme_zero_bound(n, k).unwrap();
        println!(
            "{:>4} {:>4} {:>12.5} {:>12.5} {:>12.5} {:>12.5} {:>11.5} {:>11.5}",
            r.n,
            r.k,
            r.half_width,
            r.x1_lower,
            r.min_zero(),
            r.max_zero(),
            r.slack_low,
            r.slack_high
        );
        assert!(r.enclosure_holds());
    }

    println!(
        "\nadmissibility: for n = 100 the enclosure applies to 2 <= k <= {}",
        KrawParams::max_admissible_k(100).unwrap()
    );
    println!(
        "k = 45 is rejected: {}",
        extreme_zero_bound(100, 45).unwrap_err()
    );
}
