//! Runs one 5-vulture vs 25-zealot skirmish between two random micro genomes
//! and prints the outcome, then times a small batch.
//!
//!     cargo run --release --example skirmish -- [seed]

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rts_coevo::{run_skirmish, BitChromosome, RangeTable, SkirmishConfig};
use std::time::Instant;

fn main() -> rts_coevo::Result<()> {
    let seed: u64 = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(1);
    let config = SkirmishConfig::one_type(5, 25);
    let ranges = RangeTable::default();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);

    let red = BitChromosome::random(96, &mut rng).decode(&ranges, 1)?;
    let blue = BitChromosome::random(96, &mut rng).decode(&ranges, 1)?;
    println!("red  {}", red[0]);
    println!("blue {}", blue[0]);
    let r = run_skirmish(&config, &red, &blue)?;
    println!(
        "winner {} after {} frames; scores red {:.1} blue {:.1}; survivors {:?}",
        r.winner, r.frames_elapsed, r.score_red, r.score_blue, r.survivors
    );

    let n = 50;
    let start = Instant::now();
    let mut frames = 0u64;
    for _ in 0..n {
        let a = BitChromosome::random(96, &mut rng).decode(&ranges, 1)?;
        let b = BitChromosome::random(96, &mut rng).decode(&ranges, 1)?;
        frames += u64::from(run_skirmish(&config, &a, &b)?.frames_elapsed);
    }
    let dt = start.elapsed().as_secs_f64();
    println!("{n} skirmishes in {dt:.2}s ({:.1} ms each, {:.0} frames mean)", 1e3 * dt / n as f64, frames as f64 / n as f64);
    Ok(())
}
