//! Starting formations.
//!
//! Positions are generated for each side in its own frame (the red half of
//! the map, facing +x) and blue's are reflected across the vertical centre
//! line. Each side's stream is seeded from the placement seed and that side's
//! roster, so identical rosters yield exactly mirrored spawns.

use crate::error::{Error, Result};
use crate::geom::Vec2;
use crate::seed::rng_for;
use crate::sim::RosterEntry;
use rand::seq::index::sample;
use rand::Rng;
use serde::{Deserialize, Serialize};
use std::fmt;
use std::str::FromStr;

const MAX_ATTEMPTS_PER_UNIT: usize = 20_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum FormationKind {
    Circle,
    Line,
    Random,
}

impl FormationKind {
    pub const ALL: [FormationKind; 3] = [FormationKind::Circle, FormationKind::Line, FormationKind::Random];
}

impl fmt::Display for FormationKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            FormationKind::Circle => "circle",
            FormationKind::Line => "line",
            FormationKind::Random => "random",
        })
    }
}

impl FromStr for FormationKind {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "circle" => Ok(FormationKind::Circle),
            "line" => Ok(FormationKind::Line),
            "random" => Ok(FormationKind::Random),
            other => Err(Error::parse("formation kind", format!("unknown formation `{other}`"))),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields, default)]
pub struct FormationGeometry {
    /// Radius of the shared spawn circle.
    pub circle_radius: f64,
    /// Empty band between the two sides around the map's centre line.
    pub center_gap: f64,
    /// Distance between the two opposing lines.
    pub line_separation: f64,
    pub line_length: f64,
    /// Border kept free in random placement.
    pub random_margin: f64,
    /// Minimum distance between two units of the same side at spawn.
    pub min_spacing: f64,
}

impl Default for FormationGeometry {
    fn default() -> Self {
        FormationGeometry {
            circle_radius: 480.0,
            center_gap: 96.0,
            line_separation: 480.0,
            line_length: 960.0,
            random_margin: 64.0,
            min_spacing: 16.0,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct FormationSpec {
    pub kind: FormationKind,
    pub placement_seed: u64,
    pub geometry: FormationGeometry,
}

impl FormationSpec {
    pub fn new(kind: FormationKind, placement_seed: u64) -> Self {
        FormationSpec {
            kind,
            placement_seed,
            geometry: FormationGeometry::default(),
        }
    }
}

fn roster_label(roster: &[RosterEntry]) -> String {
    let mut s = String::from("formation");
    for e in roster {
        s.push_str(&format!("/{}x{}", e.unit.name, e.count));
    }
    s
}

/// Spawn positions per side, one per unit in roster order.
pub fn generate_formation(spec: &FormationSpec, rosters: &[Vec<RosterEntry>; 2], map: Vec2) -> Result<[Vec<Vec2>; 2]> {
    let red = side_positions(spec, &rosters[0], map)?;
    let blue = side_positions(spec, &rosters[1], map)?
        .into_iter()
        .map(|p| Vec2::new(map.x - p.x, p.y))
        .collect();
    Ok([red, blue])
}

fn side_positions(spec: &FormationSpec, roster: &[RosterEntry], map: Vec2) -> Result<Vec<Vec2>> {
    let n: usize = roster.iter().map(|e| e.count).sum();
    let mut rng = rng_for(spec.placement_seed, &roster_label(roster));
    let g = &spec.geometry;
    let center = map * 0.5;
    let half_gap = g.center_gap * 0.5;
    let positions = match spec.kind {
        FormationKind::Circle => {
            let r = g.circle_radius;
            let x_max = center.x - half_gap;
            if x_max <= center.x - r {
                return Err(Error::Config("circle radius smaller than the centre gap".into()));
            }
            scatter(n, g.min_spacing, &mut rng, (center.x - r, x_max), (center.y - r, center.y + r), |p| {
                p.distance_sq(center) <= r * r
            })?
        }
        FormationKind::Random => scatter(
            n,
            g.min_spacing,
            &mut rng,
            (g.random_margin, center.x - half_gap),
            (g.random_margin, map.y - g.random_margin),
            |_| true,
        )?,
        FormationKind::Line => {
            let slots = if g.min_spacing > 0.0 {
                (g.line_length / g.min_spacing).floor() as usize + 1
            } else {
                usize::MAX
            };
            if n > slots {
                return Err(Error::Config(format!(
                    "line formation holds {slots} units per side, roster has {n}"
                )));
            }
            let x = center.x - g.line_separation * 0.5;
            let y0 = center.y - g.line_length * 0.5;
            let spacing = if slots > 1 { g.line_length / (slots - 1) as f64 } else { 0.0 };
            sample(&mut rng, slots, n)
                .into_iter()
                .map(|k| Vec2::new(x, y0 + k as f64 * spacing).quantize_round())
                .collect()
        }
    };
    for p in &positions {
        if !p.within(map.x, map.y) {
            return Err(Error::Config(format!(
                "spawn position ({}, {}) outside the {}x{} map",
                p.x, p.y, map.x, map.y
            )));
        }
    }
    Ok(positions)
}

fn scatter(
    n: usize,
    spacing: f64,
    rng: &mut impl Rng,
    xs: (f64, f64),
    ys: (f64, f64),
    inside: impl Fn(Vec2) -> bool,
) -> Result<Vec<Vec2>> {
    if xs.0 > xs.1 || ys.0 > ys.1 {
        return Err(Error::Config("formation region is empty".into()));
    }
    let mut out: Vec<Vec2> = Vec::with_capacity(n);
    for _ in 0..n {
        let mut placed = false;
        for _ in 0..MAX_ATTEMPTS_PER_UNIT {
            let p = Vec2::new(rng.gen_range(xs.0..=xs.1), rng.gen_range(ys.0..=ys.1)).quantize_round();
            if inside(p) && out.iter().all(|q| q.distance_sq(p) >= spacing * spacing) {
                out.push(p);
                placed = true;
                break;
            }
        }
        if !placed {
            return Err(Error::Config(format!(
                "roster of {n} units does not fit the formation at spacing {spacing}"
            )));
        }
    }
    Ok(out)
}
