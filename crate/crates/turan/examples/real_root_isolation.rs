//! The polynomial substrate: exact Sturm-sequence root isolation with
//! multiplicities, the real-rootedness check, and the factored/dense
//! round trip.

use turan::{
    real_roots, real_roots_exact, sturm_count, DensePoly, PolyError, Rat, RootPoly, Scalar,
};

fn main() {
    // a clustered triple root next to a simple one
    let p = RootPoly::new(2.0, vec![1.0, 1.0, 1.0, 1.25]).unwrap();
    let dense = p.expand();
    println!("coefficients: {:?}", dense.coeffs());
    let roots = real_roots(&dense, 1e-12).unwrap();
    println!("recovered roots with multiplicity: {roots:?}");

    // exact mode returns dyadic rational approximants
    let exact = DensePoly::new(vec![
        Rat::from_int(-2),
        Rat::from_int(0),
        Rat::from_int(1),
    ]); // x^2 - 2
    let isolated = real_roots_exact(&exact, &Rat::from_ratio(1, 1_000_000_000_000)).unwrap();
    println!(
        "x^2 - 2 isolated exactly: [{:.12}, {:.12}]",
        isolated[0].to_f64(),
        isolated[1].to_f64()
    );

    // Sturm counting over an interval
    let count = sturm_count(&exact, &Rat::from_int(0), &Rat::from_int(2));
    println!("roots of x^2 - 2 in (0, 2]: {count}");

    // inputs with complex roots are rejected, not silently truncated
    let complex = DensePoly::new(vec![1.0, 0.0, 1.0]); // x^2 + 1
    match real_roots(&complex, 1e-12) {
        Err(PolyError::NotRealRooted { found, degree }) => {
            println!("x^2 + 1 rejected: {found} real roots for degree {degree}");
        }
        other => panic!("unexpected: {other:?}"),
    }
}
