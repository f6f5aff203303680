//! Shared generators and oracles for the integration suites.

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use turan::{rat_from_f64, v_form, Rat, RootPoly, Scalar};

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Random rational with numerator in [-24, 24] and denominator in [1, 6].
pub fn rand_rat(rng: &mut ChaCha8Rng) -> Rat {
    Rat::from_ratio(rng.gen_range(-24i64..=24), rng.gen_range(1i64..=6))
}

/// Random rational-root polynomial of degree up to `max_deg` with a
/// random nonzero rational leading coefficient.
pub fn rand_root_poly_rat(rng: &mut ChaCha8Rng, max_deg: usize) -> RootPoly<Rat> {
    let degree = rng.gen_range(0..=max_deg);
    let roots: Vec<Rat> = (0..degree).map(|_| rand_rat(rng)).collect();
    let mut leading = Rat::from_int(0);
    while Scalar::is_zero(&leading) {
        leading = Rat::from_ratio(rng.gen_range(-4i64..=4), rng.gen_range(1i64..=3));
    }
    RootPoly::new(leading, roots).expect("nonzero leading")
}

/// Random float-root polynomial whose consecutive-root gaps are at least
/// `min_gap * (1 + u)` for `u` drawn from `[pad_lo, pad_hi]`.
pub fn rand_mesh_poly(
    rng: &mut ChaCha8Rng,
    degree: usize,
    min_gap: f64,
    pad_lo: f64,
    pad_hi: f64,
) -> RootPoly<f64> {
    let mut roots = Vec::with_capacity(degree);
    let mut current = rng.gen_range(-6.0..6.0);
    roots.push(current);
    for _ in 1..degree {
        current += min_gap * (1.0 + rng.gen_range(pad_lo..=pad_hi));
        roots.push(current);
    }
    let leading = [1.0, -1.0, 2.0, -0.5][rng.gen_range(0..4usize)];
    RootPoly::new(leading, roots).expect("finite roots")
}

/// Exact value of the order-`m` form of a float-root polynomial at a
/// float point: all floats convert to rationals exactly, so this is the
/// ground truth for the sample actually tested.
pub fn v_form_exact(p: &RootPoly<f64>, m: u32, x: f64) -> Rat {
    let exact = RootPoly::new(
        rat_from_f64(*p.leading()),
        p.roots().iter().copied().map(rat_from_f64).collect(),
    )
    .expect("finite poly");
    v_form(|u: &Rat| exact.eval(u), m, &rat_from_f64(x))
}

/// `max(1, max |value|)` over a sample set: the scale used by the
/// relative violation thresholds.
pub fn sample_scale(samples: &[(f64, f64)]) -> f64 {
    samples
        .iter()
        .map(|&(_, v)| v.abs())
        .fold(1.0f64, f64::max)
}
