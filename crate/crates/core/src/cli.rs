//! Command-line frontend. [`run`] parses arguments, prints a JSON report on
//! standard output and diagnostics on standard error, and returns the exit code:
//! 0 on success, 1 when a verdict is negative or a computation fails, 2 on usage errors.

use std::io::Write;
use std::path::{Path, PathBuf};
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::constructions::{collinear_config, general_member, line_arrangement, pencil};
use crate::error::Error;
use crate::linsys::{
    check_hypothesis_star, classify_table_row, gap_sequence_at, NodalConfiguration,
};
use crate::semigroups::{
    family_max, family_n1, n_d, smooth_genus, table_row, table_rows, weight, FamilyParams,
    MaxVariant, NumericalSemigroup, TableRowId,
};

pub const VERSION: &str = env!("CARGO_PKG_VERSION");

#[derive(Debug, Parser)]
#[command(
    name = "nodalgaps",
    version,
    about = "Gap sequences at total inflection points of nodal plane curves"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Family {
    Nd,
    N1,
    Max,
    Max2,
    Max3,
    Max4,
    Row,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Kind {
    Lines,
    PencilMax,
    PencilMax2,
    Collinear,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Gaps, weight and conductor of one semigroup family member.
    Semigroup {
        #[arg(long, value_enum)]
        family: Family,
        #[arg(long)]
        d: u64,
        #[arg(long, default_value_t = 0)]
        delta: u64,
        /// Row index within the table block for `--family row`.
        #[arg(long)]
        row: Option<u8>,
    },
    /// Every table row for one degree.
    Table {
        #[arg(long)]
        d: u64,
    },
    /// Runs the certification chain on a configuration file.
    Verify {
        #[arg(long)]
        config: PathBuf,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Builds and certifies a witness configuration.
    Construct {
        #[arg(long, value_enum, required_unless_present = "certify_only")]
        kind: Option<Kind>,
        #[arg(long, required_unless_present = "certify_only")]
        d: Option<u32>,
        #[arg(long, required_unless_present = "certify_only")]
        delta: Option<usize>,
        #[arg(long)]
        include_p: bool,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Re-certify a configuration file instead of building one.
        #[arg(long, conflicts_with_all = ["kind", "d", "delta", "include_p"])]
        certify_only: Option<PathBuf>,
    },
    /// Gap sequence at `P` of a certified configuration.
    Gaps {
        #[arg(long)]
        config: PathBuf,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Table row realized by a certified configuration.
    Classify {
        #[arg(long)]
        config: PathBuf,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Runs a batch of checks described by a JSON file.
    Sweep {
        #[arg(long)]
        spec: PathBuf,
    },
}

/// Replayable output envelope.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub command: String,
    pub inputs: Value,
    pub results: Value,
    pub seeds: Vec<u64>,
    pub wall_ms: u64,
    pub version: String,
}

#[derive(Debug)]
enum Failure {
    Usage(String),
    Compute(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::InvalidArgument(_) | Error::Parse(_) => Failure::Usage(e.to_string()),
            other => Failure::Compute(other.to_string()),
        }
    }
}

/// Prefixes usage errors with the flags that produced them.
fn blame(flags: String) -> impl Fn(Failure) -> Failure {
    move |f| match f {
        Failure::Usage(msg) => Failure::Usage(format!("{flags}: {msg}")),
        other => other,
    }
}

struct Outcome {
    report: Report,
    ok: bool,
    diagnostic: Option<String>,
}

/// Entry point used by the binary; `argv[0]` is the program name.
pub fn run<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    run_with(
        argv,
        &mut std::io::stdout().lock(),
        &mut std::io::stderr().lock(),
    )
}

/// [`run`] with explicit output streams. Write errors are ignored so a closed pipe
/// (e.g. output piped into `head`) never turns into a panic.
pub fn run_with<I, T>(argv: I, out: &mut impl Write, err: &mut impl Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let (code, stream): (i32, &mut dyn Write) =
                if e.use_stderr() { (2, err) } else { (0, out) };
            let _ = write!(stream, "{}", e.render());
            return code;
        }
    };
    let start = Instant::now();
    match execute(cli.command, start) {
        Ok(outcome) => {
            let text = serde_json::to_string_pretty(&outcome.report).expect("report serializes");
            let _ = writeln!(out, "{text}");
            if let Some(msg) = outcome.diagnostic {
                let _ = writeln!(err, "{msg}");
            }
            if outcome.ok {
                0
            } else {
                1
            }
        }
        Err(Failure::Usage(msg)) => {
            let _ = writeln!(err, "usage error: {msg}");
            2
        }
        Err(Failure::Compute(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            1
        }
    }
}

fn report(command: &str, inputs: Value, results: Value, seeds: Vec<u64>, start: Instant) -> Report {
    Report {
        command: command.into(),
        inputs,
        results,
        seeds,
        wall_ms: start.elapsed().as_millis() as u64,
        version: VERSION.into(),
    }
}

fn read_config(path: &Path) -> Result<NodalConfiguration, Failure> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Failure::Usage(format!("--config {}: {e}", path.display())))?;
    NodalConfiguration::from_json(&text)
        .map_err(|e| Failure::Usage(format!("--config {}: {e}", path.display())))
}

fn semigroup_json(s: &NumericalSemigroup) -> Value {
    let gaps = s.gaps();
    json!({
        "gaps": gaps,
        "genus": gaps.len(),
        "weight": weight(&gaps),
        "conductor": s.conductor(),
        "is_semigroup": s.is_semigroup(),
    })
}

fn family_member(
    family: Family,
    d: u64,
    delta: u64,
    row: Option<u8>,
) -> Result<NumericalSemigroup, Failure> {
    let variant = |v| Ok(family_max(FamilyParams::new(d, delta)?, v)?);
    match family {
        Family::Nd => Ok(n_d(d)?),
        Family::N1 => Ok(family_n1(FamilyParams::new(d, delta)?)?),
        Family::Max => variant(MaxVariant::Max),
        Family::Max2 => variant(MaxVariant::Max2),
        Family::Max3 => variant(MaxVariant::Max3),
        Family::Max4 => variant(MaxVariant::Max4),
        Family::Row => {
            let j = row.ok_or_else(|| Failure::Usage("--family row needs --row".into()))?;
            let delta = u8::try_from(delta)
                .map_err(|_| Failure::Usage(format!("--delta {delta} is out of range")))?;
            let id = TableRowId::new(delta, j).validate()?;
            Ok(table_row(d, id)?)
        }
    }
}

fn execute(command: Command, start: Instant) -> Result<Outcome, Failure> {
    let done = |report: Report| {
        Ok(Outcome {
            report,
            ok: true,
            diagnostic: None,
        })
    };
    match command {
        Command::Semigroup {
            family,
            d,
            delta,
            row,
        } => {
            let s = family_member(family, d, delta, row)
                .map_err(blame(format!("--d {d} --delta {delta}")))?;
            let inputs = json!({"family": format!("{family:?}").to_lowercase(), "d": d, "delta": delta, "row": row});
            done(report(
                "semigroup",
                inputs,
                semigroup_json(&s),
                vec![],
                start,
            ))
        }
        Command::Table { d } => {
            let mut rows = Vec::new();
            for delta in 1..=5u8 {
                for r in table_rows(delta) {
                    let mut entry = match table_row(d, r.id) {
                        Ok(s) => semigroup_json(&s),
                        Err(e) => json!({"error": e.to_string()}),
                    };
                    entry["row"] = json!(r.id.to_string());
                    entry["delta"] = json!(delta);
                    entry["index"] = json!(r.id.index);
                    entry["condition"] = json!(r.condition);
                    entry["condition_text"] = json!(r.condition.to_string());
                    rows.push(entry);
                }
            }
            done(report(
                "table",
                json!({"d": d}),
                Value::Array(rows),
                vec![],
                start,
            ))
        }
        Command::Verify { config, seed } => {
            let cfg = read_config(&config)?;
            let cert = cfg.certify(seed);
            let ok = cert.certified;
            let diagnostic = cert.failure.clone();
            let results = json!({"certificate": cert});
            let report = report(
                "verify",
                json!({"config": config, "seed": seed}),
                results,
                vec![seed],
                start,
            );
            Ok(Outcome {
                report,
                ok,
                diagnostic,
            })
        }
        Command::Construct {
            certify_only: Some(path),
            seed,
            ..
        } => {
            let cfg = read_config(&path)?;
            let cert = cfg.certify(seed);
            let ok = cert.certified;
            let diagnostic = cert.failure.clone();
            let results = json!({"configuration": cfg, "certificate": cert});
            let report = report(
                "construct",
                json!({"certify_only": path, "seed": seed}),
                results,
                vec![seed],
                start,
            );
            Ok(Outcome {
                report,
                ok,
                diagnostic,
            })
        }
        Command::Construct {
            kind,
            d,
            delta,
            include_p,
            seed,
            certify_only: None,
        } => {
            let (kind, d, delta) = match (kind, d, delta) {
                (Some(k), Some(d), Some(delta)) => (k, d, delta),
                _ => {
                    return Err(Failure::Usage(
                        "--kind, --d and --delta are required".into(),
                    ))
                }
            };
            let inputs = json!({
                "kind": kind_name(kind),
                "d": d,
                "delta": delta,
                "include_p": include_p,
                "seed": seed,
            });
            let results = (|| -> Result<Value, Failure> {
                Ok(match kind {
                Kind::Lines => {
                    let arr = line_arrangement(d, delta, seed)?;
                    let star = check_hypothesis_star(&arr.configuration())?;
                    json!({"arrangement": arr, "configuration": arr.configuration(), "hypothesis_star": star})
                }
                Kind::PencilMax | Kind::PencilMax2 => {
                    let variant = if kind == Kind::PencilMax { MaxVariant::Max } else { MaxVariant::Max2 };
                    let spec = pencil(variant, d, delta, seed)?;
                    let cfg = general_member(&spec, seed)?;
                    json!({"pencil": spec, "configuration": cfg, "certificate": cfg.certify(seed)})
                }
                Kind::Collinear => {
                    let cfg = collinear_config(d, delta, include_p, seed)?;
                    json!({"configuration": cfg, "certificate": cfg.certify(seed)})
                }
                })
            })()
            .map_err(blame(format!("--kind {} --d {d} --delta {delta}", kind_name(kind))))?;
            done(report("construct", inputs, results, vec![seed], start))
        }
        Command::Gaps { config, seed } => {
            let cfg = read_config(&config)?;
            let cert = cfg.certify(seed);
            let inputs = json!({"config": config, "seed": seed});
            if !cert.certified {
                let diagnostic = Some(format!(
                    "configuration is not certified: {}",
                    cert.failure.clone().unwrap_or_default()
                ));
                let report = report(
                    "gaps",
                    inputs,
                    json!({"certificate": cert}),
                    vec![seed],
                    start,
                );
                return Ok(Outcome {
                    report,
                    ok: false,
                    diagnostic,
                });
            }
            let curve = cfg.require_curve()?;
            let gaps = gap_sequence_at(curve, &cfg.nodes, &cfg.p)?;
            let results = json!({"gaps": gaps, "weight": weight(&gaps), "genus": gaps.len(), "certificate": cert});
            done(report("gaps", inputs, results, vec![seed], start))
        }
        Command::Classify { config, seed } => {
            let cfg = read_config(&config)?;
            let cert = cfg.certify(seed);
            let inputs = json!({"config": config, "seed": seed});
            if !cert.certified {
                let diagnostic = Some(format!(
                    "configuration is not certified: {}",
                    cert.failure.clone().unwrap_or_default()
                ));
                let report = report(
                    "classify",
                    inputs,
                    json!({"certificate": cert}),
                    vec![seed],
                    start,
                );
                return Ok(Outcome {
                    report,
                    ok: false,
                    diagnostic,
                });
            }
            let curve = cfg.require_curve()?;
            let gaps = gap_sequence_at(curve, &cfg.nodes, &cfg.p)?;
            let (row, diagnostic) = match classify_table_row(&cfg) {
                Ok(id) => (Some(id.to_string()), None),
                Err(e) => (None, Some(e.to_string())),
            };
            let ok = row.is_some();
            let results = json!({"row": row, "gaps": gaps, "certificate": cert});
            let report = report("classify", inputs, results, vec![seed], start);
            Ok(Outcome {
                report,
                ok,
                diagnostic,
            })
        }
        Command::Sweep { spec } => {
            let text = std::fs::read_to_string(&spec)
                .map_err(|e| Failure::Usage(format!("--spec {}: {e}", spec.display())))?;
            let sweep: SweepSpec = serde_json::from_str(&text)
                .map_err(|e| Failure::Usage(format!("--spec {}: {e}", spec.display())))?;
            let cells = run_sweep(&sweep);
            if let Some(path) = &sweep.csv {
                write_csv(path, &cells)
                    .map_err(|e| Failure::Compute(format!("writing {}: {e}", path.display())))?;
            }
            let failed = cells.iter().filter(|c| !c.verdict).count();
            let seeds = sweep.seeds.clone();
            let results = json!({"cells": cells, "total": cells.len(), "failed": failed});
            let inputs = serde_json::to_value(&sweep).expect("sweep spec serializes");
            let diagnostic =
                (failed > 0).then(|| format!("{failed} of {} cells failed", cells.len()));
            let report = report("sweep", inputs, results, seeds, start);
            Ok(Outcome {
                report,
                ok: failed == 0,
                diagnostic,
            })
        }
    }
}

/// What a sweep checks in every cell.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SweepCheck {
    /// `N^(max)` (resp. `N^(max2)`) is a semigroup iff `d ≥ 2δ+1` (resp. `2δ`).
    #[serde(alias = "max-semigroup-iff")]
    MaxSemigroupIff,
    /// Hypothesis (*) on line-arrangement degenerations.
    Degeneration,
    /// General pencil members realize the maximal-weight families.
    Pencil,
}

/// JSON sweep description; ranges are inclusive `[from, to]` and empty when `from > to`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SweepSpec {
    pub check: SweepCheck,
    pub d: [u32; 2],
    /// Defaults to every `0 ≤ δ ≤ (d−1)(d−2)/2`.
    #[serde(default)]
    pub delta: Option<[usize; 2]>,
    #[serde(default)]
    pub variants: Vec<MaxVariant>,
    #[serde(default = "default_seeds")]
    pub seeds: Vec<u64>,
    #[serde(default)]
    pub csv: Option<PathBuf>,
}

fn default_seeds() -> Vec<u64> {
    vec![0]
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SweepCell {
    pub d: u32,
    pub delta: usize,
    pub variant: String,
    pub seed: u64,
    pub verdict: bool,
    pub gaps: Option<Vec<u64>>,
    pub weight: Option<u64>,
    pub wall_ms: u64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
}

fn sweep_keys(spec: &SweepSpec) -> Vec<(u32, usize, String, u64)> {
    let mut keys = Vec::new();
    for d in spec.d[0]..=spec.d[1] {
        let deltas = match spec.delta {
            Some([a, b]) => a..=b,
            None => 0..=smooth_genus(d as u64) as usize,
        };
        for delta in deltas {
            let variants: Vec<String> = match spec.check {
                SweepCheck::Degeneration => vec!["lines".into()],
                _ if spec.variants.is_empty() => vec!["max".into(), "max2".into()],
                _ => spec.variants.iter().map(|v| v.to_string()).collect(),
            };
            for v in variants {
                for &seed in &spec.seeds {
                    keys.push((d, delta, v.clone(), seed));
                }
            }
        }
    }
    keys.sort();
    keys
}

fn sweep_cell(check: SweepCheck, d: u32, delta: usize, variant: &str, seed: u64) -> SweepCell {
    let start = Instant::now();
    let mut cell = SweepCell {
        d,
        delta,
        variant: variant.into(),
        seed,
        verdict: false,
        gaps: None,
        weight: None,
        wall_ms: 0,
        detail: None,
    };
    let result: crate::Result<()> = (|| {
        match check {
            SweepCheck::MaxSemigroupIff => {
                let v: MaxVariant = variant.parse()?;
                let expected = match v {
                    MaxVariant::Max => d as usize > 2 * delta,
                    MaxVariant::Max2 => d as usize >= 2 * delta,
                    other => {
                        return Err(Error::InvalidArgument(format!(
                            "no semigroup criterion for {other}"
                        )))
                    }
                };
                let s = FamilyParams::new(d as u64, delta as u64).and_then(|p| family_max(p, v));
                let is_semigroup = match &s {
                    Ok(s) => {
                        let gaps = s.gaps();
                        cell.weight = Some(weight(&gaps));
                        cell.gaps = Some(gaps.0);
                        s.is_semigroup()
                    }
                    Err(_) => false,
                };
                cell.verdict = is_semigroup == expected;
                cell.detail = Some(format!("semigroup={is_semigroup} expected={expected}"));
            }
            SweepCheck::Degeneration => {
                let arr = line_arrangement(d, delta, seed)?;
                let star = check_hypothesis_star(&arr.configuration())?;
                cell.verdict = star.holds;
                cell.detail = Some(format!(
                    "k={} max_multiplicity={} attempts={}",
                    star.k, star.max_multiplicity_found, arr.attempts
                ));
            }
            SweepCheck::Pencil => {
                let v: MaxVariant = variant.parse()?;
                let cfg = general_member(&pencil(v, d, delta, seed)?, seed)?;
                let gaps = gap_sequence_at(cfg.require_curve()?, &cfg.nodes, &cfg.p)?;
                let expected = family_max(FamilyParams::new(d as u64, delta as u64)?, v)?.gaps();
                cell.verdict = gaps == expected;
                cell.weight = Some(weight(&gaps));
                cell.gaps = Some(gaps.0);
            }
        }
        Ok(())
    })();
    if let Err(e) = result {
        cell.verdict = false;
        cell.detail = Some(e.to_string());
    }
    cell.wall_ms = start.elapsed().as_millis() as u64;
    cell
}

/// Runs every cell of the sweep in parallel; the result is ordered by cell key.
pub fn run_sweep(spec: &SweepSpec) -> Vec<SweepCell> {
    sweep_keys(spec)
        .par_iter()
        .map(|(d, delta, v, seed)| sweep_cell(spec.check, *d, *delta, v, *seed))
        .collect()
}

pub fn write_csv(path: &Path, cells: &[SweepCell]) -> std::io::Result<()> {
    let mut w = csv::Writer::from_path(path)?;
    w.write_record([
        "d", "delta", "variant", "seed", "verdict", "gaps", "weight", "wall_ms",
    ])?;
    for c in cells {
        let gaps = c
            .gaps
            .as_ref()
            .map(|g| g.iter().map(u64::to_string).collect::<Vec<_>>().join(" "))
            .unwrap_or_default();
        w.write_record([
            c.d.to_string(),
            c.delta.to_string(),
            c.variant.clone(),
            c.seed.to_string(),
            c.verdict.to_string(),
            gaps,
            c.weight.map(|x| x.to_string()).unwrap_or_default(),
            c.wall_ms.to_string(),
        ])?;
    }
    w.flush()
}

fn kind_name(kind: Kind) -> String {
    kind.to_possible_value()
        .expect("no skipped variants")
        .get_name()
        .to_owned()
}
