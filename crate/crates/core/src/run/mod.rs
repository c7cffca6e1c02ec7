//! Configuration files, artifacts and the command dispatcher behind the
//! `rts-coevo` binary.

mod artifacts;
mod config;

pub use artifacts::{
    append_csv, read_csv, read_progress, read_results, robustness_rows, write_csv, BaselineFile, ChampionFile,
    RobustnessRow, RowKind, RunManifest, TimingRow, BASELINE_FILE, CHAMPIONS_DIR, PROGRESS_FILE, RESULTS_FILE,
    ROBUSTNESS_FILE, TIMING_FILE, TRACE_FILE,
};
pub use config::{load_config, BaselineSection, RobustnessSection, RunConfig, Scenario, SkirmishSection};

use crate::coevo::{Coevolution, Evaluator};
use crate::error::{Error, Result};
use crate::harness::{build_baseline, robustness_eval, RobustnessReport};
use crate::sim::{run_skirmish_traced, ResultRow};
use crate::unit::Side;
use std::fmt::Write as _;
use std::fs;
use std::path::Path;
use std::str::FromStr;
use std::time::Instant;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Verb {
    Coevolve,
    Baseline,
    Robustness,
    Replay,
    Inspect,
}

impl Verb {
    pub fn name(self) -> &'static str {
        match self {
            Verb::Coevolve => "coevolve",
            Verb::Baseline => "baseline",
            Verb::Robustness => "robustness",
            Verb::Replay => "replay",
            Verb::Inspect => "inspect",
        }
    }
}

impl FromStr for Verb {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        [Verb::Coevolve, Verb::Baseline, Verb::Robustness, Verb::Replay, Verb::Inspect]
            .into_iter()
            .find(|v| v.name() == s)
            .ok_or_else(|| Error::parse("verb", format!("unknown command `{s}`")))
    }
}

/// What a command produced.
#[derive(Debug, Clone, PartialEq)]
pub struct CommandOutput {
    pub manifest: Option<RunManifest>,
    /// Human-readable summary for the terminal.
    pub summary: String,
}

/// Runs `verb` with `workers` skirmish threads, writing artifacts under
/// `config.output_dir`.
pub fn run_command(verb: Verb, config: &RunConfig, workers: usize) -> Result<CommandOutput> {
    config.validate()?;
    let out = config.output_dir.clone();
    if verb == Verb::Inspect {
        return inspect(config, &out);
    }
    fs::create_dir_all(&out)?;
    let started = artifacts::unix_now();
    let evaluator = Evaluator::new(config.skirmish_config(), config.ranges, workers)?;
    let (artifacts, summary) = match verb {
        Verb::Coevolve => coevolve(config, &evaluator, &out)?,
        Verb::Baseline => baseline(config, &evaluator, &out)?,
        Verb::Robustness => robustness(config, &evaluator, &out)?,
        Verb::Replay => replay(config, &evaluator, &out)?,
        Verb::Inspect => unreachable!(),
    };
    fs::write(out.join("config.resolved.toml"), config.to_toml())?;
    let mut artifacts = artifacts;
    artifacts.push("config.resolved.toml".into());
    let manifest = RunManifest {
        verb: verb.name().into(),
        config_hash: config.hash(),
        master_seed: config.master_seed,
        started_unix: started,
        finished_unix: artifacts::unix_now(),
        artifacts,
        version: env!("CARGO_PKG_VERSION").into(),
    };
    let name = RunManifest::file_name(verb.name());
    fs::write(out.join(&name), serde_json::to_string_pretty(&manifest)? + "\n")?;
    debug_assert!(manifest.missing_artifacts(&out).is_empty());
    Ok(CommandOutput {
        manifest: Some(manifest),
        summary,
    })
}

fn unit_names(config: &RunConfig, side: Side) -> Vec<String> {
    config
        .skirmish_config()
        .roster(side)
        .iter()
        .map(|e| e.unit.name.clone())
        .collect()
}

fn baseline(config: &RunConfig, evaluator: &Evaluator, out: &Path) -> Result<(Vec<String>, String)> {
    let red = build_baseline(evaluator, &config.baseline_search(Side::Red))?;
    let blue = build_baseline(evaluator, &config.baseline_search(Side::Blue))?;
    let summary = format!(
        "baseline win rates: red {:.3}, blue {:.3} over {} random opponents",
        red.win_rate, blue.win_rate, red.opponent_count
    );
    let file = BaselineFile {
        config_hash: config.hash(),
        threshold: config.baseline_threshold(),
        red,
        blue,
    };
    file.save(&out.join(BASELINE_FILE))?;
    Ok((vec![BASELINE_FILE.into()], summary))
}

fn coevolve(config: &RunConfig, evaluator: &Evaluator, out: &Path) -> Result<(Vec<String>, String)> {
    let baselines = BaselineFile::load(&out.join(BASELINE_FILE))?;
    let champions_dir = out.join(CHAMPIONS_DIR);
    fs::create_dir_all(&champions_dir)?;
    let progress_path = out.join(PROGRESS_FILE);
    let timing_path = out.join(TIMING_FILE);
    for p in [&progress_path, &timing_path] {
        if p.exists() {
            fs::remove_file(p)?;
        }
    }

    let names = [unit_names(config, Side::Red), unit_names(config, Side::Blue)];
    let mut artifacts = vec![PROGRESS_FILE.to_string(), TIMING_FILE.to_string()];
    let mut engine = Coevolution::new(config.ga.clone(), evaluator, config.master_seed, Some(baselines.chromosomes()))?;
    let mut clock = Instant::now();
    let mut skirmishes = evaluator.skirmish_count();
    let records = engine.run(|outcome| {
        let [red, blue] = &outcome.champions;
        let pair = evaluator.play(&[(red, blue)])?;
        let file = ChampionFile {
            generation: outcome.record.generation,
            red: red.clone(),
            blue: blue.clone(),
            pair_hash: pair[0].hash(),
        };
        let decoded = [evaluator.decode(Side::Red, red)?, evaluator.decode(Side::Blue, blue)?];
        let name = ChampionFile::file_name(file.generation);
        fs::write(champions_dir.join(&name), file.to_text([&decoded[0], &decoded[1]], names.clone()))?;
        artifacts.push(format!("{CHAMPIONS_DIR}/{name}"));

        append_csv(&progress_path, std::slice::from_ref(&outcome.record))?;
        let now = evaluator.skirmish_count();
        append_csv(
            &timing_path,
            &[TimingRow {
                generation: outcome.record.generation,
                seconds: clock.elapsed().as_secs_f64(),
                skirmishes: now - skirmishes,
            }],
        )?;
        clock = Instant::now();
        skirmishes = now;
        Ok(())
    })?;

    let mut summary = format!("{} generations, {} fitness evaluations", records.len(), records.last().map_or(0, |r| r.cumulative_evaluations));
    if let Some(last) = records.last() {
        write!(
            summary,
            "; final champion vs baseline: red {:.1}, blue {:.1}",
            last.red_vs_baseline.unwrap_or(f64::NAN),
            last.blue_vs_baseline.unwrap_or(f64::NAN)
        )
        .unwrap();
    }
    Ok((artifacts, summary))
}

fn robustness(config: &RunConfig, evaluator: &Evaluator, out: &Path) -> Result<(Vec<String>, String)> {
    let champions = ChampionFile::load(&ChampionFile::latest_path(out)?)?;
    let baselines = BaselineFile::load(&out.join(BASELINE_FILE))?;
    let mut report = RobustnessReport::default();
    for side in Side::BOTH {
        let r = robustness_eval(
            evaluator,
            side,
            champions.chromosome(side),
            &baselines.get(side.opponent()).chromosome,
            &config.robustness.formations,
            config.robustness.start_sets,
            config.master_seed,
        )?;
        report = report.merge(r);
    }
    write_csv(&out.join(ROBUSTNESS_FILE), &robustness_rows(&report))?;
    let mut summary = format!("champions of generation {} against baselines:", champions.generation);
    for s in &report.summaries {
        write!(
            summary,
            "\n  {:<4} {:<6} mean {:>10.1} (sd {:.1}) baseline {:>10.1} win rate {:.2}",
            s.side, s.formation, s.mean_champion, s.std_champion, s.mean_baseline, s.win_rate
        )
        .unwrap();
    }
    Ok((vec![ROBUSTNESS_FILE.into()], summary))
}

fn replay(config: &RunConfig, evaluator: &Evaluator, out: &Path) -> Result<(Vec<String>, String)> {
    let path = ChampionFile::latest_path(out)?;
    let champions = ChampionFile::load(&path)?;
    let red = evaluator.decode(Side::Red, &champions.red)?;
    let blue = evaluator.decode(Side::Blue, &champions.blue)?;
    let (result, trace) = run_skirmish_traced(evaluator.config(), &red, &blue)?;
    let replayed = result.hash();
    if replayed != champions.pair_hash {
        return Err(Error::ReplayMismatch {
            stored: champions.pair_hash,
            replayed,
        });
    }
    fs::write(out.join(TRACE_FILE), trace.to_text())?;
    append_csv(
        &out.join(RESULTS_FILE),
        &[ResultRow::new(&config.hash(), config.master_seed, &result)],
    )?;
    let summary = format!(
        "replayed {}: winner {} after {} frames, scores red {:.1} blue {:.1}, hash {}",
        path.display(),
        result.winner,
        result.frames_elapsed,
        result.score_red,
        result.score_blue,
        replayed
    );
    Ok((vec![TRACE_FILE.into(), RESULTS_FILE.into()], summary))
}

fn inspect(config: &RunConfig, out: &Path) -> Result<CommandOutput> {
    let mut s = String::new();
    writeln!(s, "config hash {}", config.hash()).unwrap();
    writeln!(s, "output dir {}", out.display()).unwrap();
    let bits: Vec<usize> = Side::BOTH
        .iter()
        .map(|side| config.skirmish_config().roster(*side).len() * crate::coevo::BITS_PER_TYPE)
        .collect();
    writeln!(s, "chromosome bits red {} blue {}", bits[0], bits[1]).unwrap();
    let b = out.join(BASELINE_FILE);
    if let Ok(file) = BaselineFile::load(&b) {
        writeln!(s, "baseline win rates red {:.3} blue {:.3}", file.red.win_rate, file.blue.win_rate).unwrap();
    }
    let p = out.join(PROGRESS_FILE);
    if p.exists() {
        let rows = read_progress(&p)?;
        if let Some(last) = rows.last() {
            writeln!(
                s,
                "{} progress rows; last generation {} vs baseline red {:?} blue {:?}",
                rows.len(),
                last.generation,
                last.red_vs_baseline,
                last.blue_vs_baseline
            )
            .unwrap();
        }
    }
    if let Ok(path) = ChampionFile::latest_path(out) {
        let text = fs::read_to_string(&path)?;
        writeln!(s, "latest champions ({}):", path.display()).unwrap();
        s.push_str(&text);
    }
    s.push_str("\nresolved configuration:\n");
    s.push_str(&config.to_toml());
    Ok(CommandOutput {
        manifest: None,
        summary: s,
    })
}

