use crate::error::{Error, Result};
use crate::geom::Vec2;
use crate::harness::generate_formation;
use crate::micro::{build_influence_grid, decide_action, select_target_cell, Decision, GridSpec, MicroGenome, WorldView};
use crate::unit::{BehaviorMode, Side, UnitState};

use super::{compute_score, FrameSnapshot, ReplayTrace, Shot, SkirmishConfig, SkirmishResult, UnitSnapshot, Winner};

/// A skirmish in progress.
///
/// Units are stored red first, then blue, each side in roster order; a unit's
/// id is its index. Controllers decide in a side-local frame in which blue's
/// x axis is reflected, so both sides "face" the same way.
#[derive(Debug, Clone)]
pub struct SimulationState<'c> {
    config: &'c SkirmishConfig,
    genomes: [Vec<MicroGenome>; 2],
    grid: GridSpec,
    units: Vec<UnitState>,
    frame: u32,
    /// Side-local attack location per roster entry.
    attack_locations: [Vec<Option<Vec2>>; 2],
    damage_dealt: [u64; 2],
    trace: Option<ReplayTrace>,
}

/// Places both rosters per the configured formation at full health.
pub fn spawn_skirmish<'c>(
    config: &'c SkirmishConfig,
    red: &[MicroGenome],
    blue: &[MicroGenome],
) -> Result<SimulationState<'c>> {
    config.validate()?;
    for (side, g) in [(Side::Red, red), (Side::Blue, blue)] {
        let types = config.roster(side).len();
        if g.len() != types {
            return Err(Error::Config(format!(
                "{side} roster has {types} unit type(s) but {} genome(s) ({} parameters) were supplied",
                g.len(),
                g.len() * crate::micro::PARAM_COUNT
            )));
        }
    }
    let positions = generate_formation(&config.formation, &config.rosters, config.map_size)?;
    let mut units = Vec::with_capacity(positions[0].len() + positions[1].len());
    for side in Side::BOTH {
        let mut spots = positions[side.index()].iter();
        for (type_index, entry) in config.roster(side).iter().enumerate() {
            for _ in 0..entry.count {
                let position = *spots.next().expect("formation yields one spot per unit");
                if !position.within(config.map_size.x, config.map_size.y) {
                    return Err(Error::Config("spawn position outside the map".into()));
                }
                units.push(UnitState {
                    id: units.len() as u32,
                    side,
                    type_index,
                    position,
                    hitpoints: entry.unit.max_hitpoints,
                    cooldown_remaining: 0,
                    mode: BehaviorMode::Approach,
                    last_fired: None,
                    kite_waypoint: None,
                });
            }
        }
    }
    Ok(SimulationState {
        config,
        genomes: [red.to_vec(), blue.to_vec()],
        grid: GridSpec::covering(config.map_size, config.cell_size),
        attack_locations: [vec![None; red.len()], vec![None; blue.len()]],
        units,
        frame: 0,
        damage_dealt: [0, 0],
        trace: None,
    })
}

impl<'c> SimulationState<'c> {
    pub fn config(&self) -> &SkirmishConfig {
        self.config
    }

    pub fn frame(&self) -> u32 {
        self.frame
    }

    /// All units, including the dead (hitpoints 0).
    pub fn units(&self) -> &[UnitState] {
        &self.units
    }

    pub fn live_units(&self, side: Side) -> impl Iterator<Item = &UnitState> {
        self.units.iter().filter(move |u| u.side == side && u.is_alive())
    }

    pub fn live_count(&self, side: Side) -> usize {
        self.live_units(side).count()
    }

    pub fn damage_dealt(&self, side: Side) -> u64 {
        self.damage_dealt[side.index()]
    }

    /// One side has no live units left.
    pub fn is_terminal(&self) -> bool {
        self.live_count(Side::Red) == 0 || self.live_count(Side::Blue) == 0
    }

    pub fn is_finished(&self) -> bool {
        self.is_terminal() || self.frame >= self.config.max_frames
    }

    /// Moves unit `id` to `position` (rounded to the lattice and clamped to
    /// the map). Meant for scripted scenarios before the first step.
    pub fn place(&mut self, id: u32, position: Vec2) {
        let map = self.config.map_size;
        self.units[id as usize].position = position.quantize_round().clamp_to(map.x, map.y);
    }

    /// Starts recording a replay trace, beginning with the current frame.
    pub fn record_trace(&mut self) {
        let mut trace = ReplayTrace::default();
        trace.push(self.snapshot(Vec::new()));
        self.trace = Some(trace);
    }

    pub fn take_trace(&mut self) -> Option<ReplayTrace> {
        self.trace.take()
    }

    fn snapshot(&self, shots: Vec<Shot>) -> FrameSnapshot {
        FrameSnapshot {
            frame: self.frame,
            units: self
                .units
                .iter()
                .filter(|u| u.is_alive())
                .map(|u| UnitSnapshot {
                    id: u.id,
                    x: u.position.x,
                    y: u.position.y,
                    hp: u.hitpoints,
                })
                .collect(),
            shots,
        }
    }

    fn to_local(&self, side: Side, p: Vec2) -> Vec2 {
        match side {
            Side::Red => p,
            Side::Blue => Vec2::new(self.config.map_size.x - p.x, p.y),
        }
    }

    fn decide_side(&mut self, side: Side, out: &mut Vec<(usize, Decision)>) {
        let mut friends = Vec::new();
        let mut enemy_ids = Vec::new();
        let mut enemy_positions = Vec::new();
        let mut enemy_status = Vec::new();
        for u in self.units.iter().filter(|u| u.is_alive()) {
            let p = self.to_local(side, u.position);
            if u.side == side {
                friends.push((u.id, p));
            } else {
                enemy_ids.push(u.id);
                enemy_positions.push(p);
                enemy_status.push((p, u.hitpoints));
            }
        }

        if self.frame.is_multiple_of(self.config.retarget_interval) {
            let spec = self.grid;
            for (t, genome) in self.genomes[side.index()].iter().enumerate() {
                let grid = build_influence_grid(&enemy_positions, genome.influence_weight, genome.influence_range, spec);
                self.attack_locations[side.index()][t] =
                    select_target_cell(&grid, &enemy_positions).ok().map(|c| spec.center(c));
            }
        }

        let roster = self.config.roster(side);
        for (i, u) in self.units.iter().enumerate() {
            if u.side != side || !u.is_alive() {
                continue;
            }
            let mut local = u.clone();
            local.position = self.to_local(side, u.position);
            local.kite_waypoint = u.kite_waypoint.map(|w| self.to_local(side, w));
            let view = WorldView {
                frame: self.frame,
                map: self.config.map_size,
                friends: &friends,
                enemy_ids: &enemy_ids,
                enemy_positions: &enemy_positions,
                enemy_status: &enemy_status,
                attack_location: self.attack_locations[side.index()][u.type_index],
            };
            let mut d = decide_action(&local, &roster[u.type_index].unit, &view, &self.genomes[side.index()][u.type_index]);
            if side == Side::Blue {
                d.command.move_vector.x = -d.command.move_vector.x;
                d.waypoint = d.waypoint.map(|w| self.to_local(side, w));
            }
            out.push((i, d));
        }
    }

    /// Advances one frame.
    ///
    /// # Panics
    ///
    /// Panics when called on a terminal state.
    pub fn step(&mut self) {
        assert!(!self.is_terminal(), "step called on a terminal skirmish");
        let mut decisions = Vec::with_capacity(self.units.len());
        self.decide_side(Side::Red, &mut decisions);
        self.decide_side(Side::Blue, &mut decisions);

        let mut incoming = vec![0u32; self.units.len()];
        let mut shots = Vec::new();
        for (i, d) in &decisions {
            if let Some(target) = d.command.attack_target {
                let attacker = &self.units[*i];
                let spec = &self.config.rosters[attacker.side.index()][attacker.type_index].unit;
                let t = target as usize;
                debug_assert!(self.units[t].is_alive() && self.units[t].side != attacker.side);
                debug_assert!(attacker.position.distance(self.units[t].position) <= spec.attack_range);
                incoming[t] += spec.attack_damage;
                shots.push(Shot {
                    attacker: attacker.id,
                    target,
                });
            }
        }
        for (u, dmg) in self.units.iter_mut().zip(&incoming) {
            if *dmg > 0 {
                let dealt = (*dmg).min(u.hitpoints);
                u.hitpoints -= dealt;
                self.damage_dealt[u.side.opponent().index()] += u64::from(dealt);
            }
        }

        let map = self.config.map_size;
        for (i, d) in decisions {
            let u = &mut self.units[i];
            let spec = &self.config.rosters[u.side.index()][u.type_index].unit;
            if d.command.attack_target.is_some() {
                u.cooldown_remaining = spec.attack_cooldown;
                u.last_fired = Some(self.frame);
            } else {
                u.cooldown_remaining = u.cooldown_remaining.saturating_sub(1);
            }
            u.mode = d.mode;
            u.kite_waypoint = d.waypoint;
            if u.is_alive() {
                u.position = (u.position + d.command.move_vector).clamp_to(map.x, map.y);
            }
        }

        self.frame += 1;
        if self.trace.is_some() {
            let snap = self.snapshot(shots);
            if let Some(t) = &mut self.trace {
                t.push(snap);
            }
        }
    }

    /// Mean remaining hitpoint fraction over all of a side's units.
    pub fn hitpoint_fraction(&self, side: Side) -> f64 {
        let roster = self.config.roster(side);
        let (sum, n) = self
            .units
            .iter()
            .filter(|u| u.side == side)
            .fold((0.0, 0usize), |(s, n), u| {
                let max = f64::from(roster[u.type_index].unit.max_hitpoints);
                (s + f64::from(u.hitpoints) / max, n + 1)
            });
        sum / n as f64
    }

    pub fn winner(&self) -> Winner {
        let red = self.live_count(Side::Red);
        let blue = self.live_count(Side::Blue);
        match (red, blue) {
            (0, 0) => Winner::Draw,
            (_, 0) => Winner::Red,
            (0, _) => Winner::Blue,
            _ => {
                let r = self.hitpoint_fraction(Side::Red);
                let b = self.hitpoint_fraction(Side::Blue);
                if r > b {
                    Winner::Red
                } else if b > r {
                    Winner::Blue
                } else {
                    Winner::Draw
                }
            }
        }
    }

    pub fn result(&self) -> SkirmishResult {
        let remaining = |side: Side| {
            let mut v = vec![0u32; self.config.roster(side).len()];
            for u in self.units.iter().filter(|u| u.side == side) {
                v[u.type_index] += u.hitpoints;
            }
            v
        };
        SkirmishResult {
            score_red: compute_score(Side::Red, &self.units, self.config).total(),
            score_blue: compute_score(Side::Blue, &self.units, self.config).total(),
            survivors: [self.live_count(Side::Red), self.live_count(Side::Blue)],
            remaining_hitpoints: [remaining(Side::Red), remaining(Side::Blue)],
            damage_dealt: self.damage_dealt,
            frames_elapsed: self.frame,
            winner: self.winner(),
        }
    }

    /// Steps until a side is eliminated or the frame cap is hit.
    pub fn run_to_end(&mut self) -> SkirmishResult {
        while !self.is_finished() {
            self.step();
        }
        self.result()
    }
}

pub fn run_skirmish(config: &SkirmishConfig, red: &[MicroGenome], blue: &[MicroGenome]) -> Result<SkirmishResult> {
    Ok(spawn_skirmish(config, red, blue)?.run_to_end())
}

pub fn run_skirmish_traced(
    config: &SkirmishConfig,
    red: &[MicroGenome],
    blue: &[MicroGenome],
) -> Result<(SkirmishResult, ReplayTrace)> {
    let mut sim = spawn_skirmish(config, red, blue)?;
    sim.record_trace();
    let result = sim.run_to_end();
    let trace = sim.take_trace().expect("recording was enabled");
    Ok((result, trace))
}
