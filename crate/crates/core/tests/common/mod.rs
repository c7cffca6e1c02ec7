//! Independent reference implementations used as test oracles. They follow
//! the definitions directly and favour obviousness over speed.

#![allow(dead_code)]

use rts_coevo::micro::{Cell, GridSpec};
use rts_coevo::sim::SkirmishConfig;
use rts_coevo::{Side, UnitState, Vec2};

/// `(preserved, damage)` terms of the damage-based score, straight from the
/// definition: every friendly unit is worth `V1 * hp / hp_max`, every enemy
/// unit `V2 * (hp_max - hp)` (divided by `hp_max` when normalized).
pub fn score_terms(side: Side, units: &[UnitState], config: &SkirmishConfig) -> (f64, f64) {
    let w = &config.score_weights[side.index()];
    let mut preserved = 0.0;
    let mut damage = 0.0;
    for u in units {
        let unit = &config.rosters[u.side.index()][u.type_index].unit;
        if u.side == side {
            preserved += w.preserve[u.type_index] * f64::from(u.hitpoints) / f64::from(unit.max_hitpoints);
        } else {
            let lost = (unit.max_hitpoints - u.hitpoints) as u64;
            if config.normalize_damage {
                damage += w.damage[u.type_index] * lost as f64 / f64::from(unit.max_hitpoints);
            } else {
                damage += w.damage[u.type_index] * lost as f64;
            }
        }
    }
    (preserved, damage)
}

fn cell_of(spec: GridSpec, p: Vec2) -> (i64, i64) {
    let clamp = |v: f64, n: usize| ((v / spec.cell_size).floor() as i64).clamp(0, n as i64 - 1);
    (clamp(p.y, spec.height), clamp(p.x, spec.width))
}

/// Influence of every enemy on every cell, one (cell, enemy) pair at a time.
pub fn influence(enemies: &[Vec2], weight: f64, range: f64, spec: GridSpec) -> Vec<f64> {
    let mut out = vec![0.0; spec.width * spec.height];
    for row in 0..spec.height {
        for col in 0..spec.width {
            for e in enemies {
                let (er, ec) = cell_of(spec, *e);
                let d = (row as i64 - er).abs().max((col as i64 - ec).abs()) as f64;
                if d <= range {
                    out[row * spec.width + col] += weight * (range + 1.0 - d) / (range + 1.0);
                }
            }
        }
    }
    out
}

/// Weakest positive cell, then nearest enemy to the cell centre, then
/// `(row, col)`; the first enemy-occupied cell when nothing is positive.
pub fn target_cell(values: &[f64], enemies: &[Vec2], spec: GridSpec) -> Cell {
    let mut cells: Vec<(f64, f64, usize, usize)> = Vec::new();
    for row in 0..spec.height {
        for col in 0..spec.width {
            let v = values[row * spec.width + col];
            if v > 0.0 {
                let c = Vec2::new((col as f64 + 0.5) * spec.cell_size, (row as f64 + 0.5) * spec.cell_size);
                let d = enemies
                    .iter()
                    .map(|e| (c.x - e.x).powi(2) + (c.y - e.y).powi(2))
                    .fold(f64::INFINITY, f64::min);
                cells.push((v, d, row, col));
            }
        }
    }
    if cells.is_empty() {
        let (row, col) = enemies.iter().map(|e| cell_of(spec, *e)).min().unwrap();
        return Cell {
            row: row as usize,
            col: col as usize,
        };
    }
    cells.sort_by(|a, b| a.partial_cmp(b).unwrap());
    Cell {
        row: cells[0].2,
        col: cells[0].3,
    }
}

/// Competitive shared fitness from a defeat table (`defeats[i][j]`: member
/// `i` beat opponent `j`).
pub fn shared_fitness(defeats: &[Vec<bool>]) -> Vec<f64> {
    let opponents = defeats.first().map_or(0, |r| r.len());
    let beaten_by: Vec<usize> = (0..opponents).map(|j| defeats.iter().filter(|r| r[j]).count()).collect();
    defeats
        .iter()
        .map(|row| {
            (0..opponents)
                .filter(|j| row[*j])
                .map(|j| 1.0 / beaten_by[j] as f64)
                .sum()
        })
        .collect()
}
