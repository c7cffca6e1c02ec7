mod common;

use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rts_coevo::coevo::{
    build_shared_sample, crossover_at, mutate, shared_fitness, BitChromosome, EvaluationMatrix, HallOfFame,
};
use rts_coevo::micro::{
    build_influence_grid, group_move_vector, select_target_cell, GridSpec, MicroGenome, RangeTable, PARAM_COUNT,
};
use rts_coevo::sim::{run_skirmish, run_skirmish_traced, ReplayTrace, SkirmishConfig};
use rts_coevo::{Side, Vec2, Winner};

fn grid() -> GridSpec {
    GridSpec::covering(Vec2::new(2048.0, 2048.0), 32.0)
}

fn point() -> impl Strategy<Value = Vec2> {
    (0.0..=2048.0f64, 0.0..=2048.0f64).prop_map(|(x, y)| Vec2::new(x, y))
}

fn genome() -> impl Strategy<Value = MicroGenome> {
    prop::array::uniform12(any::<u8>()).prop_map(|f| RangeTable::default().decode(&f).unwrap())
}

fn defeats() -> impl Strategy<Value = Vec<Vec<bool>>> {
    (1usize..12, 1usize..12).prop_flat_map(|(m, o)| prop::collection::vec(prop::collection::vec(any::<bool>(), o), m))
}

proptest! {
    #[test]
    fn sharing_conserves_defeated_opponents(d in defeats()) {
        let f = shared_fitness(&EvaluationMatrix::from_defeats(&d));
        let beaten = (0..d[0].len()).filter(|j| d.iter().any(|r| r[*j])).count();
        prop_assert!((f.iter().sum::<f64>() - beaten as f64).abs() < 1e-9);
        for (a, b) in f.iter().zip(common::shared_fitness(&d)) {
            prop_assert!((a - b).abs() < 1e-12);
        }
    }

    #[test]
    fn influence_matches_double_loop(
        enemies in prop::collection::vec(point(), 1..30),
        weight in 0.0..64.0f64,
        range in 0.0..10.0f64,
    ) {
        let g = build_influence_grid(&enemies, weight, range, grid());
        prop_assert_eq!(&g.values, &common::influence(&enemies, weight, range, grid()));
        let cell = select_target_cell(&g, &enemies).unwrap();
        prop_assert_eq!(cell, common::target_cell(&g.values, &enemies, grid()));
    }

    #[test]
    fn target_cell_ignores_enemy_order(
        enemies in prop::collection::vec(point(), 1..20),
        weight in 0.0..64.0f64,
        range in 0.0..8.0f64,
        seed in any::<u64>(),
    ) {
        use rand::seq::SliceRandom;
        let mut shuffled = enemies.clone();
        shuffled.shuffle(&mut ChaCha8Rng::seed_from_u64(seed));
        let a = select_target_cell(&build_influence_grid(&enemies, weight, range, grid()), &enemies).unwrap();
        let b = select_target_cell(&build_influence_grid(&shuffled, weight, range, grid()), &shuffled).unwrap();
        prop_assert_eq!(a, b);
    }

    #[test]
    fn group_move_never_exceeds_speed(
        pos in point(),
        target in point(),
        friends in prop::collection::vec(point(), 0..20),
        g in genome(),
        speed in 0.5..10.0f64,
    ) {
        let v = group_move_vector(pos, speed, target, &friends, &g);
        prop_assert!(v.length() <= speed + 1e-9, "{:?} longer than {}", v, speed);
        prop_assert!(v.x.is_finite() && v.y.is_finite());
    }

    #[test]
    fn encoding_round_trips_at_field_resolution(fields in prop::array::uniform12(any::<u8>())) {
        let t = RangeTable::default();
        let g = t.decode(&fields).unwrap();
        prop_assert!(t.contains(&g));
        prop_assert_eq!(t.encode(&g), fields);
        let c = BitChromosome::from_fields(&fields);
        prop_assert_eq!(c.len(), 8 * PARAM_COUNT);
        prop_assert_eq!(BitChromosome::from_hex(&c.to_hex()).unwrap(), c.clone());
        prop_assert_eq!(c.decode(&t, 1).unwrap(), vec![g]);
    }

    #[test]
    fn crossover_swaps_tails(seed in any::<u64>(), cut in 0usize..=96) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let a = BitChromosome::random(96, &mut rng);
        let b = BitChromosome::random(96, &mut rng);
        let (c, d) = crossover_at(&a, &b, cut);
        for i in 0..96 {
            let (x, y) = if i < cut { (a.bits()[i], b.bits()[i]) } else { (b.bits()[i], a.bits()[i]) };
            prop_assert_eq!(c.bits()[i], x);
            prop_assert_eq!(d.bits()[i], y);
        }
    }

    #[test]
    fn mutation_extremes(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let a = BitChromosome::random(96, &mut rng);
        prop_assert_eq!(mutate(&a, 0.0, &mut rng), a.clone());
        let flipped = mutate(&a, 1.0, &mut rng);
        prop_assert!(a.bits().iter().zip(flipped.bits()).all(|(x, y)| x != y));
    }

    #[test]
    fn hall_of_fame_keeps_newest(n in 0usize..20, cap in 1usize..8) {
        let mut h = HallOfFame::new(cap);
        for i in 0..n {
            h.push(BitChromosome::from_fields(&[i as u8]));
        }
        prop_assert_eq!(h.len(), n.min(cap));
        let kept: Vec<u8> = h.iter().map(|c| c.fields()[0]).collect();
        let expect: Vec<u8> = (0..n).rev().take(cap).map(|i| i as u8).collect();
        prop_assert_eq!(kept, expect);
    }

    #[test]
    fn shared_sample_is_distinct_and_sized(d in defeats(), k in 1usize..8) {
        let m = EvaluationMatrix::from_defeats(&d);
        let pop: Vec<BitChromosome> = (0..d.len()).map(|i| BitChromosome::from_fields(&[i as u8])).collect();
        let s = build_shared_sample(&m, &pop, k);
        prop_assert_eq!(s.len(), k.min(d.len()));
        let mut idx = s.indices.clone();
        idx.sort();
        idx.dedup();
        prop_assert_eq!(idx.len(), s.len());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn skirmish_is_deterministic_and_well_formed(r in genome(), b in genome(), seed in 0u64..1000, frames in 0u32..400) {
        let mut cfg = SkirmishConfig::one_type(2, 4).with_max_frames(frames);
        cfg.formation.placement_seed = seed;
        let x = run_skirmish(&cfg, &[r], &[b]).unwrap();
        let (y, trace) = run_skirmish_traced(&cfg, &[r], &[b]).unwrap();
        prop_assert_eq!(&x, &y);
        prop_assert!(x.frames_elapsed <= frames);
        if x.frames_elapsed < frames {
            prop_assert!(x.survivors[0] == 0 || x.survivors[1] == 0);
        }
        prop_assert!(x.score_red >= 0.0 && x.score_blue >= 0.0);
        prop_assert_eq!(trace.frames.len() as u32, x.frames_elapsed + 1);
        prop_assert_eq!(ReplayTrace::parse(&trace.to_text()).unwrap(), trace);
    }

    #[test]
    fn identical_rosters_and_genomes_draw(g in prop::collection::vec(genome(), 2), seed in 0u64..1000) {
        let mut cfg = SkirmishConfig::two_type(2, 3).with_max_frames(600);
        cfg.formation.placement_seed = seed;
        let r = run_skirmish(&cfg, &g, &g).unwrap();
        prop_assert_eq!(r.winner, Winner::Draw);
        prop_assert_eq!(r.score_red, r.score_blue);
        prop_assert_eq!(r.survivors[0], r.survivors[1]);
        prop_assert_eq!(r.score(Side::Red), r.score(Side::Blue));
    }
}
