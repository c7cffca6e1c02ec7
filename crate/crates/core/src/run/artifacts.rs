//! On-disk formats.
//!
//! | file                     | contents                                             |
//! |--------------------------|------------------------------------------------------|
//! | `progress.csv`           | one [`ProgressRecord`] per generation                |
//! | `timing.csv`             | wall-clock seconds and skirmishes per generation     |
//! | `champions/gen_####.txt` | champion chromosomes, decoded genomes, pair hash     |
//! | `baseline.json`          | [`BaselineFile`]: one baseline record per side       |
//! | `robustness.csv`         | [`RobustnessRow`]s: 30 entries then summaries        |
//! | `results.csv`            | [`ResultRow`]s appended by `replay`                  |
//! | `replay.trace`           | one frame per line, see [`crate::sim::ReplayTrace`]  |
//! | `manifest.<verb>.json`   | [`RunManifest`]                                      |
//!
//! Wall-clock time only ever lands in `timing.csv` and manifests, so every
//! other file is a pure function of the configuration and master seed.

use crate::coevo::{BitChromosome, ProgressRecord};
use crate::error::{Error, Result};
use crate::harness::{BaselineRecord, FormationKind, RobustnessReport};
use crate::micro::MicroGenome;
use crate::sim::{ResultRow, Winner};
use crate::unit::Side;
use serde::{Deserialize, Serialize};
use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};

pub const PROGRESS_FILE: &str = "progress.csv";
pub const TIMING_FILE: &str = "timing.csv";
pub const CHAMPIONS_DIR: &str = "champions";
pub const BASELINE_FILE: &str = "baseline.json";
pub const ROBUSTNESS_FILE: &str = "robustness.csv";
pub const RESULTS_FILE: &str = "results.csv";
pub const TRACE_FILE: &str = "replay.trace";

pub fn write_csv<T: Serialize>(path: &Path, rows: &[T]) -> Result<()> {
    let mut w = csv::Writer::from_path(path)?;
    for r in rows {
        w.serialize(r)?;
    }
    w.flush()?;
    Ok(())
}

pub fn read_csv<T: for<'de> Deserialize<'de>>(path: &Path) -> Result<Vec<T>> {
    let mut r = csv::Reader::from_path(path)?;
    Ok(r.deserialize().collect::<std::result::Result<Vec<T>, _>>()?)
}

/// Appends rows, writing the header only when the file is new.
pub fn append_csv<T: Serialize>(path: &Path, rows: &[T]) -> Result<()> {
    let exists = path.exists() && fs::metadata(path)?.len() > 0;
    let file = fs::OpenOptions::new().create(true).append(true).open(path)?;
    let mut w = csv::WriterBuilder::new().has_headers(!exists).from_writer(file);
    for r in rows {
        w.serialize(r)?;
    }
    w.flush()?;
    Ok(())
}

pub fn read_progress(path: &Path) -> Result<Vec<ProgressRecord>> {
    read_csv(path)
}

pub fn read_results(path: &Path) -> Result<Vec<ResultRow>> {
    read_csv(path)
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TimingRow {
    pub generation: u32,
    pub seconds: f64,
    pub skirmishes: u64,
}

/// Both sides' baselines, tagged with the config they were built under.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BaselineFile {
    pub config_hash: String,
    pub threshold: f64,
    pub red: BaselineRecord,
    pub blue: BaselineRecord,
}

impl BaselineFile {
    pub fn get(&self, side: Side) -> &BaselineRecord {
        match side {
            Side::Red => &self.red,
            Side::Blue => &self.blue,
        }
    }

    pub fn chromosomes(&self) -> [BitChromosome; 2] {
        [self.red.chromosome.clone(), self.blue.chromosome.clone()]
    }

    pub fn load(path: &Path) -> Result<Self> {
        if !path.exists() {
            return Err(Error::MissingArtifact {
                path: path.to_path_buf(),
                hint: "run the `baseline` command first".into(),
            });
        }
        Ok(serde_json::from_str(&fs::read_to_string(path)?)?)
    }

    pub fn save(&self, path: &Path) -> Result<()> {
        fs::write(path, serde_json::to_string_pretty(self)? + "\n")?;
        Ok(())
    }
}

/// Champions of one generation.
#[derive(Debug, Clone, PartialEq)]
pub struct ChampionFile {
    pub generation: u32,
    pub red: BitChromosome,
    pub blue: BitChromosome,
    /// Result hash of red champion against blue champion in the training
    /// configuration.
    pub pair_hash: String,
}

impl ChampionFile {
    pub fn file_name(generation: u32) -> String {
        format!("gen_{generation:04}.txt")
    }

    pub fn chromosome(&self, side: Side) -> &BitChromosome {
        match side {
            Side::Red => &self.red,
            Side::Blue => &self.blue,
        }
    }

    /// Text form; decoded genomes are written as `#` comments so they are
    /// informative without being parsed back.
    pub fn to_text(&self, decoded: [&[MicroGenome]; 2], unit_names: [Vec<String>; 2]) -> String {
        let mut s = String::new();
        writeln!(s, "generation {}", self.generation).unwrap();
        for side in Side::BOTH {
            writeln!(s, "{side} {}", self.chromosome(side).to_hex()).unwrap();
            for (g, name) in decoded[side.index()].iter().zip(&unit_names[side.index()]) {
                writeln!(s, "# {side}.{name} {g}").unwrap();
            }
        }
        writeln!(s, "pair_hash {}", self.pair_hash).unwrap();
        s
    }

    pub fn parse(text: &str) -> Result<Self> {
        let (mut generation, mut red, mut blue, mut pair_hash) = (None, None, None, None);
        for line in text.lines().map(str::trim).filter(|l| !l.is_empty() && !l.starts_with('#')) {
            let (key, value) = line
                .split_once(' ')
                .ok_or_else(|| Error::parse("champion file", format!("malformed line `{line}`")))?;
            match key {
                "generation" => {
                    generation = Some(value.parse().map_err(|_| Error::parse("champion file", "bad generation"))?)
                }
                "red" => red = Some(BitChromosome::from_hex(value)?),
                "blue" => blue = Some(BitChromosome::from_hex(value)?),
                "pair_hash" => pair_hash = Some(value.to_string()),
                other => return Err(Error::parse("champion file", format!("unknown key `{other}`"))),
            }
        }
        let missing = |what: &str| Error::parse("champion file", format!("missing `{what}`"));
        Ok(ChampionFile {
            generation: generation.ok_or_else(|| missing("generation"))?,
            red: red.ok_or_else(|| missing("red"))?,
            blue: blue.ok_or_else(|| missing("blue"))?,
            pair_hash: pair_hash.ok_or_else(|| missing("pair_hash"))?,
        })
    }

    pub fn load(path: &Path) -> Result<Self> {
        Self::parse(&fs::read_to_string(path)?)
    }

    /// The highest-numbered champion file under `dir/champions`.
    pub fn latest_path(dir: &Path) -> Result<PathBuf> {
        let champions = dir.join(CHAMPIONS_DIR);
        let missing = || Error::MissingArtifact {
            path: champions.clone(),
            hint: "run the `coevolve` command first".into(),
        };
        let mut files: Vec<PathBuf> = fs::read_dir(&champions)
            .map_err(|_| missing())?
            .filter_map(|e| e.ok().map(|e| e.path()))
            .filter(|p| {
                p.file_name()
                    .and_then(|n| n.to_str())
                    .is_some_and(|n| n.starts_with("gen_") && n.ends_with(".txt"))
            })
            .collect();
        files.sort();
        files.pop().ok_or_else(missing)
    }
}

/// One line of `robustness.csv`. Entry rows carry a start set and winner;
/// summary rows carry the per-formation means.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RobustnessRow {
    pub kind: RowKind,
    pub side: Side,
    pub formation: FormationKind,
    pub start_set: Option<u32>,
    pub placement_seed: Option<u64>,
    pub score_champion: f64,
    pub score_baseline: f64,
    pub winner: Option<Winner>,
    pub std_champion: Option<f64>,
    pub win_rate: Option<f64>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum RowKind {
    Entry,
    Summary,
}

pub fn robustness_rows(report: &RobustnessReport) -> Vec<RobustnessRow> {
    let entries = report.entries.iter().map(|e| RobustnessRow {
        kind: RowKind::Entry,
        side: e.side,
        formation: e.formation,
        start_set: Some(e.start_set),
        placement_seed: Some(e.placement_seed),
        score_champion: e.score_champion,
        score_baseline: e.score_baseline,
        winner: Some(e.winner),
        std_champion: None,
        win_rate: None,
    });
    let summaries = report.summaries.iter().map(|s| RobustnessRow {
        kind: RowKind::Summary,
        side: s.side,
        formation: s.formation,
        start_set: None,
        placement_seed: None,
        score_champion: s.mean_champion,
        score_baseline: s.mean_baseline,
        winner: None,
        std_champion: Some(s.std_champion),
        win_rate: Some(s.win_rate),
    });
    entries.chain(summaries).collect()
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RunManifest {
    pub verb: String,
    pub config_hash: String,
    pub master_seed: u64,
    pub started_unix: u64,
    pub finished_unix: u64,
    /// Paths relative to the output directory.
    pub artifacts: Vec<String>,
    pub version: String,
}

impl RunManifest {
    pub fn file_name(verb: &str) -> String {
        format!("manifest.{verb}.json")
    }

    /// Artifacts listed in the manifest that do not exist under `dir`.
    pub fn missing_artifacts(&self, dir: &Path) -> Vec<String> {
        self.artifacts.iter().filter(|a| !dir.join(a).exists()).cloned().collect()
    }
}

pub fn unix_now() -> u64 {
    std::time::SystemTime::now()
        .duration_since(std::time::UNIX_EPOCH)
        .map(|d| d.as_secs())
        .unwrap_or(0)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn champion_file_round_trips() {
        let c = ChampionFile {
            generation: 7,
            red: BitChromosome::from_fields(&[1; 12]),
            blue: BitChromosome::from_fields(&[200; 12]),
            pair_hash: "00ff00ff00ff00ff".into(),
        };
        let g = MicroGenome::from_array([0.5; 12]);
        let text = c.to_text([&[g], &[g]], [vec!["vulture".into()], vec!["zealot".into()]]);
        assert!(text.contains("# red.vulture"));
        assert_eq!(ChampionFile::parse(&text).unwrap(), c);
        assert_eq!(ChampionFile::file_name(7), "gen_0007.txt");
    }

    #[test]
    fn champion_file_rejects_garbage() {
        assert!(ChampionFile::parse("generation 1\nred zz\n").is_err());
        assert!(ChampionFile::parse("generation 1\n").is_err());
    }

    #[test]
    fn missing_baseline_says_what_to_do() {
        let dir = tempfile::tempdir().unwrap();
        let e = BaselineFile::load(&dir.path().join(BASELINE_FILE)).unwrap_err();
        assert!(e.to_string().contains("run the `baseline` command first"), "{e}");
    }

    #[test]
    fn csv_append_writes_one_header() {
        let dir = tempfile::tempdir().unwrap();
        let p = dir.path().join("t.csv");
        let row = TimingRow {
            generation: 0,
            seconds: 1.5,
            skirmishes: 3,
        };
        append_csv(&p, std::slice::from_ref(&row)).unwrap();
        append_csv(&p, std::slice::from_ref(&row)).unwrap();
        assert_eq!(read_csv::<TimingRow>(&p).unwrap(), vec![row.clone(), row]);
    }
}
