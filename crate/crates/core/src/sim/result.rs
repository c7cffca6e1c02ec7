use crate::unit::Side;
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};
use std::fmt;
use std::str::FromStr;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Winner {
    Red,
    Blue,
    Draw,
}

impl Winner {
    pub fn side(self) -> Option<Side> {
        match self {
            Winner::Red => Some(Side::Red),
            Winner::Blue => Some(Side::Blue),
            Winner::Draw => None,
        }
    }
}

impl From<Side> for Winner {
    fn from(s: Side) -> Self {
        match s {
            Side::Red => Winner::Red,
            Side::Blue => Winner::Blue,
        }
    }
}

impl fmt::Display for Winner {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Winner::Red => "red",
            Winner::Blue => "blue",
            Winner::Draw => "draw",
        })
    }
}

impl FromStr for Winner {
    type Err = crate::Error;
    fn from_str(s: &str) -> crate::Result<Self> {
        match s {
            "red" => Ok(Winner::Red),
            "blue" => Ok(Winner::Blue),
            "draw" => Ok(Winner::Draw),
            other => Err(crate::Error::parse("winner", format!("unknown winner `{other}`"))),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SkirmishResult {
    pub score_red: f64,
    pub score_blue: f64,
    /// Live units per side at the end.
    pub survivors: [usize; 2],
    /// Remaining hitpoints per side, summed per roster entry.
    pub remaining_hitpoints: [Vec<u32>; 2],
    /// Effective damage inflicted by each side (overkill excluded).
    pub damage_dealt: [u64; 2],
    pub frames_elapsed: u32,
    pub winner: Winner,
}

impl SkirmishResult {
    pub fn score(&self, side: Side) -> f64 {
        match side {
            Side::Red => self.score_red,
            Side::Blue => self.score_blue,
        }
    }

    pub fn won_by(&self, side: Side) -> bool {
        self.winner == Winner::from(side)
    }

    /// Win credit for `side`: 1 for a win, 0.5 for a draw, 0 for a loss.
    pub fn win_credit(&self, side: Side) -> f64 {
        match self.winner.side() {
            Some(s) if s == side => 1.0,
            Some(_) => 0.0,
            None => 0.5,
        }
    }

    /// Short content hash over every field, with floats taken bitwise.
    pub fn hash(&self) -> String {
        let mut h = Sha256::new();
        h.update(self.score_red.to_bits().to_le_bytes());
        h.update(self.score_blue.to_bits().to_le_bytes());
        for side in 0..2 {
            h.update((self.survivors[side] as u64).to_le_bytes());
            for hp in &self.remaining_hitpoints[side] {
                h.update(hp.to_le_bytes());
            }
            h.update(self.damage_dealt[side].to_le_bytes());
        }
        h.update(self.frames_elapsed.to_le_bytes());
        h.update(self.winner.to_string().as_bytes());
        hex::encode(&h.finalize()[..8])
    }
}

/// One row of the skirmish results table.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ResultRow {
    pub config_hash: String,
    pub seed: u64,
    pub score_red: f64,
    pub score_blue: f64,
    pub winner: Winner,
    pub frames: u32,
}

impl ResultRow {
    pub fn new(config_hash: &str, seed: u64, r: &SkirmishResult) -> Self {
        ResultRow {
            config_hash: config_hash.to_string(),
            seed,
            score_red: r.score_red,
            score_blue: r.score_blue,
            winner: r.winner,
            frames: r.frames_elapsed,
        }
    }
}
