//! Scores a micro genome against a baseline from ten fresh starting
//! positions in each formation.
//!
//!     cargo run --release --example robustness

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rts_coevo::coevo::{BitChromosome, Evaluator};
use rts_coevo::harness::robustness_eval;
use rts_coevo::{FormationKind, RangeTable, Side, SkirmishConfig};

fn main() -> rts_coevo::Result<()> {
    let ev = Evaluator::new(SkirmishConfig::one_type(5, 25), RangeTable::default(), 1)?;
    let mut rng = ChaCha8Rng::seed_from_u64(12);
    let champion = BitChromosome::random(96, &mut rng);
    let baseline = BitChromosome::random(96, &mut rng);
    let report = robustness_eval(&ev, Side::Red, &champion, &baseline, &FormationKind::ALL, 10, 3)?;
    for e in &report.entries {
        println!(
            "{:<6} start {:>2}  champion {:>9.0}  baseline {:>9.0}  {}",
            e.formation, e.start_set, e.score_champion, e.score_baseline, e.winner
        );
    }
    for s in &report.summaries {
        println!(
            "{:<6} mean {:>9.0} (sd {:>8.0})  baseline mean {:>9.0}  win rate {:.2}",
            s.formation, s.mean_champion, s.std_champion, s.mean_baseline, s.win_rate
        );
    }
    Ok(())
}
