mod common;

use rts_coevo::micro::MicroGenome;
use rts_coevo::sim::{run_skirmish, spawn_skirmish, SkirmishConfig};
use rts_coevo::{BehaviorMode, FormationKind, FormationSpec, Side, Vec2, Winner};

fn genome(kite_distance: f64, kite_wait: f64, kite_back: f64) -> MicroGenome {
    MicroGenome {
        influence_weight: 10.0,
        influence_range: 3.0,
        attract_coeff: 32.0,
        attract_exp: 1.0,
        repulse_coeff: 16.0,
        repulse_exp: -1.0,
        target_hp_threshold: 0.0,
        target_radius: 640.0,
        kite_distance,
        kite_wait,
        kite_back_distance: kite_back,
        flee_hp_threshold: 0.0,
    }
}

fn duel() -> SkirmishConfig {
    SkirmishConfig::one_type(1, 1).with_formation(FormationSpec::new(FormationKind::Line, 1))
}

#[test]
fn kiting_holds_for_wait_frames_then_retreats() {
    let cfg = duel();
    let red = genome(200.0, 5.0, 64.0);
    let blue = genome(0.0, 0.0, 0.0);
    let mut sim = spawn_skirmish(&cfg, &[red], &[blue]).unwrap();
    sim.place(0, Vec2::new(900.0, 1000.0));
    sim.place(1, Vec2::new(1000.0, 1000.0));
    sim.record_trace();
    for _ in 0..8 {
        sim.step();
    }
    let trace = sim.take_trace().unwrap();
    let vulture_x = |f: usize| trace.frames[f].units.iter().find(|u| u.id == 0).unwrap().x;

    // Fires at frame t = 0 (snapshot 1 holds the result of frame 0).
    assert!(trace.frames[1].shots.iter().any(|s| s.attacker == 0 && s.target == 1));
    // Stationary during frames t..t+4.
    for f in 1..=5 {
        assert_eq!(vulture_x(f), 900.0, "moved during frame {}", f - 1);
    }
    // Retreats (away from the zealot, i.e. towards -x) from frame t+5 on.
    assert!(vulture_x(6) < 900.0);
    assert!(vulture_x(7) < vulture_x(6));
    assert_eq!(sim.units()[0].mode, BehaviorMode::KiteRetreat);
}

#[test]
fn no_kiting_stands_and_fights() {
    let cfg = duel();
    let mut sim = spawn_skirmish(&cfg, &[genome(0.0, 5.0, 64.0)], &[genome(0.0, 0.0, 0.0)]).unwrap();
    sim.place(0, Vec2::new(900.0, 1000.0));
    sim.place(1, Vec2::new(1000.0, 1000.0));
    for _ in 0..8 {
        sim.step();
    }
    assert_eq!(sim.units()[0].position.x, 900.0);
}

#[test]
fn zero_frame_cap_is_a_draw_at_spawn() {
    let cfg = SkirmishConfig::one_type(5, 25).with_max_frames(0);
    let g = genome(100.0, 5.0, 64.0);
    let r = run_skirmish(&cfg, &[g], &[g]).unwrap();
    assert_eq!(r.frames_elapsed, 0);
    assert_eq!(r.winner, Winner::Draw);
    assert_eq!(r.survivors, [5, 25]);
    // Nothing damaged: each side scores only its preserved value.
    assert_eq!(r.score_red, 5.0 * 400.0);
    assert_eq!(r.score_blue, 25.0 * 160.0);
}

#[test]
fn mirror_match_is_an_exact_draw() {
    for kind in FormationKind::ALL {
        let cfg = SkirmishConfig::two_type(3, 6).with_formation(FormationSpec::new(kind, 11));
        let g = [genome(120.0, 4.0, 48.0), genome(0.0, 0.0, 0.0)];
        let r = run_skirmish(&cfg, &g, &g).unwrap();
        assert_eq!(r.winner, Winner::Draw, "{kind}");
        assert_eq!(r.score_red, r.score_blue, "{kind}");
        assert_eq!(r.remaining_hitpoints[0], r.remaining_hitpoints[1], "{kind}");
    }
}

#[test]
fn final_scores_match_the_reference_formula() {
    for seed in 0..6 {
        let mut cfg = SkirmishConfig::one_type(5, 12).with_formation(FormationSpec::new(FormationKind::Circle, seed));
        cfg.normalize_damage = seed % 2 == 1;
        let mut sim = spawn_skirmish(&cfg, &[genome(150.0, 6.0, 60.0)], &[genome(0.0, 0.0, 0.0)]).unwrap();
        let r = sim.run_to_end();
        for side in Side::BOTH {
            let (p, d) = common::score_terms(side, sim.units(), &cfg);
            let got = r.score(side);
            assert!((got - (p + d)).abs() <= 1e-9 * (p + d).abs().max(1.0), "{side}: {got} vs {}", p + d);
        }
        let dealt: u64 = sim.units().iter().filter(|u| u.side == Side::Blue).map(|u| u64::from(160 - u.hitpoints)).sum();
        assert_eq!(r.damage_dealt[0], dealt);
    }
}

#[test]
fn timeout_goes_to_higher_hitpoint_fraction() {
    // Units spawn far apart and nobody targets anything, so a short cap ends
    // the skirmish untouched: equal fractions, a draw.
    let cfg = SkirmishConfig::one_type(2, 2).with_max_frames(3);
    let mut idle = genome(0.0, 0.0, 0.0);
    idle.target_radius = 0.0;
    idle.attract_coeff = 0.0;
    let r = run_skirmish(&cfg, &[idle], &[idle]).unwrap();
    assert_eq!(r.frames_elapsed, 3);
    assert_eq!(r.winner, Winner::Draw);
}
