//! Randomized falsification attempt for the conjectured discrete
//! degree-sharpened Laguerre inequality: real-rooted candidates with mesh
//! at least 1, a grid scan per candidate, and exact rational recheck of
//! anything that dips below the tolerance.

use turan::{search_conjecture, ConjectureSearch};

fn main() {
    let cfg = ConjectureSearch::new(8, 20_000, 42, 1e-12);
    let report = search_conjecture(&cfg);
    println!("trials:                {}", report.trials);
    println!("minimum sampled value: {:.6e}", report.min_value);
    println!("witness leading:       {}", report.witness_leading);
    println!("witness roots:         {:?}", report.witness_roots);
    println!("witness x:             {:.6}", report.witness_x);
    println!("float candidates:      {}", report.float_candidates);
    println!("exact counterexample:  {}", report.exact_counterexample);
    if !report.exact_counterexample {
        println!("\nno counterexample at this scale; the statement remains open, not proven");
    }
}
