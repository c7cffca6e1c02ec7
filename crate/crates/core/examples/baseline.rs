//! Random search for a baseline zealot micro that beats most random vulture
//! opponents.
//!
//!     cargo run --release --example baseline -- [opponents] [candidates]

use rts_coevo::coevo::Evaluator;
use rts_coevo::harness::{build_baseline, BaselineSearch};
use rts_coevo::{Error, RangeTable, Side, SkirmishConfig};

fn main() -> rts_coevo::Result<()> {
    let mut args = std::env::args().skip(1).map(|a| a.parse::<usize>().expect("numeric argument"));
    let opponents = args.next().unwrap_or(50);
    let candidates = args.next().unwrap_or(20);
    let workers = std::thread::available_parallelism().map_or(1, |n| n.get());
    let ev = Evaluator::new(SkirmishConfig::one_type(5, 25), RangeTable::default(), workers)?;
    let search = BaselineSearch {
        random_count: opponents,
        candidate_count: candidates,
        ..BaselineSearch::new(Side::Blue, 7)
    };
    match build_baseline(&ev, &search) {
        Ok(b) => {
            println!("baseline found: candidate {} wins {:.3} of {} opponents", b.candidate_index, b.win_rate, b.opponent_count);
            println!("chromosome {}", b.chromosome.to_hex());
            println!("genome {}", ev.decode(Side::Blue, &b.chromosome)?[0]);
        }
        Err(Error::BaselineNotFound { best, threshold, .. }) => {
            println!("no candidate reached {threshold}; best was {:.3} (try more candidates)", best.win_rate);
        }
        Err(e) => return Err(e),
    }
    println!("{} skirmishes played", ev.skirmish_count());
    Ok(())
}
