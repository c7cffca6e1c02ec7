//! A single vulture against a single zealot, with and without kiting.
//! Prints the vulture's position and mode frame by frame.
//!
//!     cargo run --example kiting

use rts_coevo::micro::MicroGenome;
use rts_coevo::sim::{spawn_skirmish, SkirmishConfig};
use rts_coevo::{FormationKind, FormationSpec, Vec2};

fn vulture(kite_distance: f64) -> MicroGenome {
    MicroGenome {
        influence_weight: 10.0,
        influence_range: 2.0,
        attract_coeff: 32.0,
        attract_exp: 1.0,
        repulse_coeff: 0.0,
        repulse_exp: -1.0,
        target_hp_threshold: 0.0,
        target_radius: 640.0,
        kite_distance,
        kite_wait: 3.0,
        kite_back_distance: 64.0,
        flee_hp_threshold: 0.0,
    }
}

fn main() -> rts_coevo::Result<()> {
    let cfg = SkirmishConfig::one_type(1, 1).with_formation(FormationSpec::new(FormationKind::Line, 0));
    let zealot = MicroGenome {
        kite_distance: 0.0,
        ..vulture(0.0)
    };
    for (label, g) in [("kiting", vulture(150.0)), ("standing", vulture(0.0))] {
        let mut sim = spawn_skirmish(&cfg, &[g], &[zealot])?;
        sim.place(0, Vec2::new(900.0, 1000.0));
        sim.place(1, Vec2::new(1060.0, 1000.0));
        println!("== {label}");
        while !sim.is_finished() {
            sim.step();
            let v = &sim.units()[0];
            let z = &sim.units()[1];
            if sim.frame() <= 40 || sim.is_finished() {
                println!(
                    "frame {:>4}  vulture x {:>7.2} hp {:>3} {:?}  zealot x {:>7.2} hp {:>3}",
                    sim.frame(),
                    v.position.x,
                    v.hitpoints,
                    v.mode,
                    z.position.x,
                    z.hitpoints
                );
            }
        }
        let r = sim.result();
        println!("{label}: winner {} after {} frames, vulture score {:.0}\n", r.winner, r.frames_elapsed, r.score_red);
    }
    Ok(())
}
