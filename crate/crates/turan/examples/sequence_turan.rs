//! The order-m Turán form on finite sequences (indices outside the range
//! read as zero), shown on binomial rows where order 1 is the classical
//! log-concavity statement.

use turan::{sequence_form, Rat, Scalar, SequenceView};

fn main() {
    let row = SequenceView::<Rat>::binomial_row(8);
    println!("binomial row n = 8:");
    for m in 1..=3u32 {
        let values: Vec<String> = (i64::from(m)..=8 - i64::from(m))
            .map(|k| format!("{:.3}", sequence_form(&row, m, k).to_f64()))
            .collect();
        println!("  order {m}: [{}]", values.join(", "));
    }

    // exact minimum over many rows, order 2
    let mut min = Rat::from_int(i64::MAX);
    let mut at = (0u32, 0i64);
    for n in 2..=40u32 {
        let row = SequenceView::<Rat>::binomial_row(n);
        for k in 2..=i64::from(n) - 2 {
            let v = sequence_form(&row, 2, k);
            if v < min {
                min = v;
                at = (n, k);
            }
        }
    }
    println!(
        "\norder-2 minimum over all rows n <= 40: {} at (n, k) = {:?} — never negative",
        min.to_f64(),
        at
    );

    // the zero-extension convention: a singleton sequence
    let singleton = SequenceView::new(vec![Rat::from_int(1)]);
    println!(
        "singleton sequence, order 1 at k = 0: {}",
        sequence_form(&singleton, 1, 0).to_f64()
    );
}
