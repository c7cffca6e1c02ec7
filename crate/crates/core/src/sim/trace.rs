//! Per-frame replay trace and its line-delimited text form.
//!
//! Each line is one frame: the frame index, then `id x y hp` for every live
//! unit, then optionally `|` followed by `attacker target` pairs for the
//! shots fired that frame. Coordinates are printed in shortest round-trip
//! form, so parsing a written trace gives back the identical values.

use crate::error::{Error, Result};
use std::fmt::Write as _;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct UnitSnapshot {
    pub id: u32,
    pub x: f64,
    pub y: f64,
    pub hp: u32,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Shot {
    pub attacker: u32,
    pub target: u32,
}

#[derive(Debug, Clone, PartialEq)]
pub struct FrameSnapshot {
    pub frame: u32,
    pub units: Vec<UnitSnapshot>,
    pub shots: Vec<Shot>,
}

#[derive(Debug, Clone, PartialEq, Default)]
pub struct ReplayTrace {
    pub frames: Vec<FrameSnapshot>,
}

impl ReplayTrace {
    pub fn push(&mut self, snapshot: FrameSnapshot) {
        debug_assert!(self.frames.last().is_none_or(|f| f.frame < snapshot.frame));
        self.frames.push(snapshot);
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for f in &self.frames {
            write!(out, "{}", f.frame).unwrap();
            for u in &f.units {
                write!(out, " {} {} {} {}", u.id, u.x, u.y, u.hp).unwrap();
            }
            if !f.shots.is_empty() {
                out.push_str(" |");
                for s in &f.shots {
                    write!(out, " {} {}", s.attacker, s.target).unwrap();
                }
            }
            out.push('\n');
        }
        out
    }

    pub fn parse(text: &str) -> Result<Self> {
        let mut trace = ReplayTrace::default();
        for (lineno, line) in text.lines().enumerate() {
            if line.trim().is_empty() {
                continue;
            }
            let ctx = || format!("trace line {}", lineno + 1);
            let bad = |what: &str| Error::parse(ctx(), what.to_string());
            let (units_part, shots_part) = match line.split_once('|') {
                Some((a, b)) => (a, Some(b)),
                None => (line, None),
            };
            let mut tok = units_part.split_whitespace();
            let frame = tok.next().ok_or_else(|| bad("empty line"))?.parse().map_err(|_| bad("bad frame index"))?;
            let rest: Vec<&str> = tok.collect();
            if !rest.len().is_multiple_of(4) {
                return Err(bad("unit records must have 4 fields"));
            }
            let units = rest
                .chunks(4)
                .map(|c| {
                    Ok(UnitSnapshot {
                        id: c[0].parse().map_err(|_| bad("bad unit id"))?,
                        x: c[1].parse().map_err(|_| bad("bad x"))?,
                        y: c[2].parse().map_err(|_| bad("bad y"))?,
                        hp: c[3].parse().map_err(|_| bad("bad hp"))?,
                    })
                })
                .collect::<Result<Vec<_>>>()?;
            let shots = match shots_part {
                None => Vec::new(),
                Some(s) => {
                    let t: Vec<&str> = s.split_whitespace().collect();
                    if !t.len().is_multiple_of(2) {
                        return Err(bad("shot records must have 2 fields"));
                    }
                    t.chunks(2)
                        .map(|c| {
                            Ok(Shot {
                                attacker: c[0].parse().map_err(|_| bad("bad attacker"))?,
                                target: c[1].parse().map_err(|_| bad("bad target"))?,
                            })
                        })
                        .collect::<Result<Vec<_>>>()?
                }
            };
            if trace.frames.last().is_some_and(|f: &FrameSnapshot| f.frame >= frame) {
                return Err(bad("frame indices must be strictly increasing"));
            }
            trace.frames.push(FrameSnapshot { frame, units, shots });
        }
        Ok(trace)
    }
}
