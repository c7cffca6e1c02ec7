//! Loads a run configuration, showing defaults, strict parsing and the
//! config hash.
//!
//!     cargo run --example config

use rts_coevo::run::RunConfig;

fn main() {
    let defaults = RunConfig::from_toml("").expect("empty config is valid");
    println!("defaults hash {}", defaults.hash());
    println!("{}", defaults.to_toml());

    let desk = RunConfig::from_toml(
        r#"
master_seed = 7
[ga]
population_size = 20
generations = 30
mode = "simple"
[skirmish]
zealots = 10
"#,
    )
    .expect("valid");
    println!("desk hash {} (population {}, mode {})", desk.hash(), desk.ga.population_size, desk.ga.mode);

    for bad in ["[ga]\ncrossover_rate = 1.5\n", "population = 50\n", "[skirmish]\nmax_frames = 0\n"] {
        match RunConfig::from_toml(bad) {
            Ok(_) => println!("unexpectedly accepted {bad:?}"),
            Err(e) => println!("rejected {bad:?}: {e}"),
        }
    }
}
