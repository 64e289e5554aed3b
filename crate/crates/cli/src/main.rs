use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;
use std::sync::Arc;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};

use condensed::experiments::{
    exp_continuity, exp_epsilon, exp_orbit, exp_zmod_limit, ExperimentConfig, ExperimentReport,
};
use condensed::groups::{resolve_group, OracleConfig, Tower};
use condensed::hnn::DEFAULT_BUDGET;
use condensed::marked::{
    chabauty_disagreement, condense_with, max_agreement, orbit_witness, relation_ball, Agreement,
    BallConfig, ChabautyPoint, MarkedGroup,
};
use condensed::oracle::GroupOracle;
use condensed::presentation::SubgroupSpec;
use condensed::word::{ball, parse_relation, parse_word, Word};

#[derive(Parser)]
#[command(
    name = "condensed",
    version,
    about = "Word problems and marked-group experiments for B, G and E"
)]
struct Cli {
    #[command(flatten)]
    global: Global,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Global {
    /// Worker threads for ball sweeps (0: one per core).
    #[arg(long, global = true, default_value_t = 0)]
    workers: usize,
    /// Longest intermediate word allowed during Britton reduction.
    #[arg(long, global = true, default_value_t = DEFAULT_BUDGET)]
    budget: usize,
    /// Also write the JSON output to this file.
    #[arg(long, global = true)]
    json: Option<PathBuf>,
    /// Leave per-check timings out of experiment reports.
    #[arg(long, global = true)]
    no_timing: bool,
}

#[derive(Subcommand)]
enum Command {
    /// Decide whether a word is trivial.
    Wp {
        #[arg(long)]
        group: String,
        #[arg(long)]
        word: String,
    },
    /// Relation ball of a marked group.
    Ball {
        #[arg(long)]
        group: String,
        #[arg(long)]
        radius: usize,
        /// Write the ball in export format to this file.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Largest radius at which two marked groups agree.
    Compare {
        /// Exactly two groups.
        #[arg(long, num_args = 1, required = true)]
        group: Vec<String>,
        #[arg(long, default_value_t = 5)]
        max_radius: usize,
    },
    /// Compare two subgroups of G on the ball of a given radius.
    Chabauty {
        /// Exactly two subgroups: H2, HA, orbit:I or gen:WORD.
        #[arg(long, num_args = 1, required = true)]
        subgroup: Vec<String>,
        #[arg(long)]
        radius: usize,
    },
    /// Build E(G, K) and query it.
    Condense {
        /// H2, HA, orbit:I or gen:WORD.
        #[arg(long)]
        subgroup: String,
        #[arg(long)]
        word: Option<String>,
        #[arg(long)]
        radius: Option<usize>,
    },
    /// Named experiments with JSON reports.
    Experiment {
        #[command(subcommand)]
        which: Experiment,
    },
}

#[derive(Subcommand)]
enum Experiment {
    ZmodLimit {
        #[arg(long, default_value_t = 12)]
        imax: u64,
    },
    Orbit {
        #[arg(long, default_value_t = 1)]
        rho: usize,
    },
    Continuity {
        #[arg(long, default_value_t = 2)]
        radius: usize,
    },
    Epsilon {
        #[arg(
            long = "i",
            value_delimiter = ',',
            allow_hyphen_values = true,
            default_value = "1,2,3"
        )]
        indices: Vec<i64>,
        #[arg(long, default_value_t = 1)]
        rho: usize,
    },
}

/// Output document plus whether every check passed.
struct Outcome {
    json: Value,
    pass: bool,
}

impl Outcome {
    fn ok(json: Value) -> Self {
        Outcome { json, pass: true }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(&cli) {
        Ok(outcome) => {
            let text = serde_json::to_string_pretty(&outcome.json).expect("serializable output");
            // a closed pipe is not an error for a report printer
            let _ = writeln!(std::io::stdout().lock(), "{text}");
            if let Some(path) = &cli.global.json {
                if let Err(e) = std::fs::write(path, format!("{text}\n")) {
                    eprintln!("error: cannot write {}: {e}", path.display());
                    return ExitCode::from(2);
                }
            }
            ExitCode::from(if outcome.pass { 0 } else { 1 })
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: &Cli) -> Result<Outcome> {
    let g = &cli.global;
    let oracle = OracleConfig {
        budget: g.budget,
        ..OracleConfig::default()
    };
    let ball_cfg = BallConfig::with_workers(g.workers);
    match &cli.command {
        Command::Wp { group, word } => {
            let m = resolve_group(group, oracle)?;
            let w = parse_relation(m.alphabet(), word)?;
            let trivial = m.is_trivial(&w)?;
            Ok(Outcome::ok(json!({
                "group": m.name(),
                "word": m.alphabet().render(&w),
                "trivial": trivial,
            })))
        }
        Command::Ball { group, radius, out } => {
            let m = resolve_group(group, oracle)?;
            let b = relation_ball(&m, *radius, &ball_cfg)?;
            if let Some(path) = out {
                std::fs::write(path, b.export())
                    .with_context(|| format!("writing {}", path.display()))?;
            }
            let words: Vec<String> = b.words().iter().map(|w| m.alphabet().render(w)).collect();
            Ok(Outcome::ok(json!({
                "group": m.name(),
                "radius": radius,
                "count": b.len(),
                "fingerprint": b.fingerprint_hex(),
                "words": words,
            })))
        }
        Command::Compare { group, max_radius } => {
            let [a, b] = group.as_slice() else {
                bail!("compare takes exactly two --group arguments");
            };
            let (ma, mb) = (resolve_group(a, oracle)?, resolve_group(b, oracle)?);
            let found = max_agreement(&ma, &mb, *max_radius, &ball_cfg)?;
            let agreement = match found {
                Agreement::Exact(r) => json!(r),
                Agreement::AtLeast(r) => json!(format!(">= {r}")),
            };
            Ok(Outcome::ok(json!({
                "groups": [ma.name(), mb.name()],
                "max_radius": max_radius,
                "agreement": agreement,
            })))
        }
        Command::Chabauty { subgroup, radius } => {
            let [a, b] = subgroup.as_slice() else {
                bail!("chabauty takes exactly two --subgroup arguments");
            };
            let tower = Tower::new(oracle)?;
            let (ha, hb) = (subgroup_point(&tower, a)?, subgroup_point(&tower, b)?);
            let f: Vec<Word> = ball(tower.g.alphabet(), *radius).collect();
            let bad = chabauty_disagreement(&ha, &hb, &f)?;
            Ok(Outcome::ok(json!({
                "subgroups": [ha.label, hb.label],
                "radius": radius,
                "ball_size": f.len(),
                "agree": bad.is_none(),
                "disagreement": bad.map(|w| tower.g.alphabet().render(&w)),
            })))
        }
        Command::Condense {
            subgroup,
            word,
            radius,
        } => {
            let tower = Tower::new(oracle)?;
            let k = subgroup_point(&tower, subgroup)?;
            let e = condense_with(&MarkedGroup::new("G", tower.g.clone()), &k, oracle)?;
            let mut out = json!({ "group": e.name(), "marking": e.alphabet().names() });
            if let Some(word) = word {
                let w = parse_relation(e.alphabet(), word)?;
                out["word"] = json!(e.alphabet().render(&w));
                out["trivial"] = json!(e.is_trivial(&w)?);
            }
            if let Some(r) = radius {
                let b = relation_ball(&e, *r, &ball_cfg)?;
                out["radius"] = json!(r);
                out["count"] = json!(b.len());
                out["fingerprint"] = json!(b.fingerprint_hex());
            }
            Ok(Outcome::ok(out))
        }
        Command::Experiment { which } => {
            let config = ExperimentConfig {
                oracle,
                ball: ball_cfg,
            };
            let report = match which {
                Experiment::ZmodLimit { imax } => exp_zmod_limit(*imax, &config)?,
                Experiment::Orbit { rho } => exp_orbit(*rho, &config)?,
                Experiment::Continuity { radius } => exp_continuity(*radius, &config)?,
                Experiment::Epsilon { indices, rho } => exp_epsilon(indices, *rho, &config)?,
            };
            report_failures(&report);
            Ok(Outcome {
                json: report.to_value(!g.no_timing),
                pass: report.pass,
            })
        }
    }
}

fn report_failures(report: &ExperimentReport) {
    for c in report.failed() {
        eprintln!("FAILED {}: {} (witness: {})", c.id, c.anchor, c.witness);
    }
}

/// `H2`, `HA`, `orbit:I` for `(s b^I)^-1 <h^2> (s b^I)`, or `gen:WORD`.
fn subgroup_point(tower: &Tower, spec: &str) -> Result<ChabautyPoint> {
    if let Some(i) = spec.strip_prefix("orbit:") {
        let i: i64 = i
            .parse()
            .with_context(|| format!("bad orbit index in `{spec}`"))?;
        return Ok(orbit_witness(tower, i)?.subgroup);
    }
    let sub = match spec {
        "H2" | "HA" => SubgroupSpec::generated(spec, vec![]),
        _ => match spec.strip_prefix("gen:") {
            Some(w) => SubgroupSpec::generated(w, vec![parse_word(tower.g.alphabet(), w)?]),
            None => bail!("unknown subgroup `{spec}`: expected H2, HA, orbit:I or gen:WORD"),
        },
    };
    let handle = tower.subgroup_handle(&sub)?;
    Ok(ChabautyPoint::new(tower.g.clone() as Arc<_>, handle).with_label(spec))
}
