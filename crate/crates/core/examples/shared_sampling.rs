//! Competitive fitness sharing and shared-sample selection on a small,
//! hand-written defeat table.
//!
//!     cargo run --example shared_sampling

use rts_coevo::coevo::{build_shared_sample, shared_fitness, BitChromosome, EvaluationMatrix};

fn main() {
    // Rows: opponents from the previous generation; columns: our testers.
    // `true` = the opponent beat that tester.
    let x = true;
    let o = false;
    let defeats = vec![
        vec![x, x, x, o, o, o], // broad but ordinary
        vec![o, o, o, o, o, x], // the only one to beat tester 5
        vec![x, x, o, o, o, o],
        vec![o, o, o, x, x, o],
        vec![o, o, o, o, o, o],
    ];
    let matrix = EvaluationMatrix::from_defeats(&defeats);
    let fitness = shared_fitness(&matrix.transposed());
    println!("shared fitness of each tester (credit split among its victors):");
    for (i, f) in fitness.iter().enumerate() {
        println!("  tester {i}: {f:.3}");
    }

    let opponents: Vec<BitChromosome> = (0..defeats.len()).map(|i| BitChromosome::from_fields(&[i as u8])).collect();
    let sample = build_shared_sample(&matrix, &opponents, 4);
    println!("shared sample of 4 (greedy coverage, then padding): {:?}", sample.indices);
}
