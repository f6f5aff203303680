//! The structural identities behind the discrete Turán forms, checked in
//! exact rational arithmetic: the root-peeling recursion, the closed
//! quadratic for degree m+1, and the Krawtchouk difference identity.

use turan::{
    difference_identity_residual, v_form, v_form_closed_form, v_form_via_recursion, Rat, RootPoly,
    Scalar,
};

fn rat(n: i64, d: i64) -> Rat {
    Rat::from_ratio(n, d)
}

fn main() {
    // V_m((x-a) q) = ((x-a)^2 - m^2) V_m(q) + V_{m-1}(q), peeled to the base
    let p = RootPoly::new(
        rat(2, 3),
        vec![rat(-3, 1), rat(-1, 2), rat(1, 1), rat(5, 2), rat(4, 1)],
    )
    .unwrap();
    let x = rat(7, 3);
    for m in 0..=3 {
        let direct = v_form(|u: &Rat| p.eval(u), m, &x);
        let peeled = v_form_via_recursion(&p, m, &x);
        println!(
            "m = {m}: direct = {direct}, recursion = {peeled}, equal = {}",
            direct == peeled
        );
        assert_eq!(direct, peeled);
    }

    // for degree m+1 the form is the closed quadratic in x
    let roots = vec![rat(0, 1), rat(3, 2), rat(3, 1)];
    let q = RootPoly::monic(roots.clone()).unwrap();
    let at = rat(4, 5);
    let closed = v_form_closed_form(&roots, 2, &at).unwrap();
    let direct = v_form(|u: &Rat| q.eval(u), 2, &at);
    println!("\ndegree m+1 closed form at x = {at}: {closed} (direct {direct})");
    assert_eq!(closed, direct);

    // the Krawtchouk difference identity has residual exactly zero
    let mut checked = 0;
    for n in [7u32, 16, 33] {
        for k in 0..=n / 2 {
            for x in [rat(0, 1), rat(7, 2), rat(-5, 3)] {
                assert!(Scalar::is_zero(&difference_identity_residual(n, k, &x)));
                checked += 1;
            }
        }
    }
    println!("\ndifference identity residual: exactly 0 at {checked} (n, k, x) triples");
}
