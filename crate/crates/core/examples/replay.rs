//! Records a replay trace, writes it as text, parses it back and prints the
//! first few frames.
//!
//!     cargo run --example replay

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rts_coevo::coevo::BitChromosome;
use rts_coevo::sim::{run_skirmish_traced, ReplayTrace};
use rts_coevo::{RangeTable, SkirmishConfig};

fn main() -> rts_coevo::Result<()> {
    let cfg = SkirmishConfig::one_type(2, 4).with_max_frames(600);
    let ranges = RangeTable::default();
    let mut rng = ChaCha8Rng::seed_from_u64(21);
    let red = BitChromosome::random(96, &mut rng).decode(&ranges, 1)?;
    let blue = BitChromosome::random(96, &mut rng).decode(&ranges, 1)?;

    let (result, trace) = run_skirmish_traced(&cfg, &red, &blue)?;
    let text = trace.to_text();
    let parsed = ReplayTrace::parse(&text)?;
    assert_eq!(parsed, trace);

    for line in text.lines().take(4) {
        println!("{line}");
    }
    println!("...");
    println!(
        "{} frames recorded, {} bytes; winner {} with hash {}",
        trace.frames.len(),
        text.len(),
        result.winner,
        result.hash()
    );
    Ok(())
}
