//! A small coevolution run in both modes, printing each generation's
//! champion scores against fixed baselines.
//!
//!     cargo run --release --example coevolve -- [generations]

use rts_coevo::coevo::{Coevolution, Evaluator, GaSettings};
use rts_coevo::harness::{build_baseline, BaselineSearch};
use rts_coevo::{EvolutionMode, RangeTable, Side, SkirmishConfig};

fn main() -> rts_coevo::Result<()> {
    let generations = std::env::args().nth(1).and_then(|a| a.parse().ok()).unwrap_or(10);
    let workers = std::thread::available_parallelism().map_or(1, |n| n.get());
    let ev = Evaluator::new(SkirmishConfig::one_type(3, 12).with_max_frames(1500), RangeTable::default(), workers)?;

    let baseline = |side| {
        let search = BaselineSearch {
            random_count: 40,
            candidate_count: 10,
            threshold: 0.0,
            ..BaselineSearch::new(side, 1)
        };
        build_baseline(&ev, &search).map(|b| b.chromosome)
    };
    let baselines = [baseline(Side::Red)?, baseline(Side::Blue)?];

    for mode in [EvolutionMode::Simple, EvolutionMode::Enhanced] {
        let settings = GaSettings {
            population_size: 24,
            generations,
            mode,
            ..GaSettings::default()
        };
        let mut co = Coevolution::new(settings, &ev, 5, Some(baselines.clone()))?;
        println!("== {mode}");
        println!("gen  evals  cumulative  red-vs-baseline  blue-vs-baseline");
        co.run(|o| {
            let r = &o.record;
            println!(
                "{:>3} {:>6} {:>11} {:>16.0} {:>17.0}",
                r.generation,
                r.evaluations,
                r.cumulative_evaluations,
                r.red_vs_baseline.unwrap_or_default(),
                r.blue_vs_baseline.unwrap_or_default()
            );
            Ok(())
        })?;
    }
    Ok(())
}
