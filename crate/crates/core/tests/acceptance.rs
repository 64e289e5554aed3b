//! End-to-end acceptance run: one line per criterion, non-zero exit on any
//! failure.

use std::process::ExitCode;
use std::sync::Arc;
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use condensed::baumslag::BaumslagGroup;
use condensed::experiments::{
    exp_continuity, exp_epsilon, exp_orbit, exp_zmod_limit, ExperimentConfig,
};
use condensed::groups::{OracleConfig, Tower};
use condensed::hnn::PinchOrder;
use condensed::marked::{
    condense, max_agreement, orbit_witness, relation_ball, Agreement, BallConfig, ChabautyPoint,
    MarkedGroup,
};
use condensed::oracle::{CyclicGroup, GroupOracle};
use condensed::presentation::builtin;
use condensed::word::{parse_word, Letter, Sign, Word};

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome, Duration);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn err(e: condensed::Error) -> String {
    e.to_string()
}

fn relator_suite() -> Outcome {
    let tower = Tower::standard();
    let oracles: [(&str, Arc<dyn GroupOracle>, usize); 4] = [
        ("B", Arc::new(BaumslagGroup::default()), 4),
        ("ZxB", tower.base.clone(), 7),
        ("G", tower.g.clone(), 8),
        ("E", tower.e.clone(), 9),
    ];
    for (name, oracle, count) in oracles {
        let p = builtin(name).map_err(err)?;
        ensure(p.relators().len() == count, || {
            format!("{name} has {} relators", p.relators().len())
        })?;
        for r in p.relators() {
            ensure(oracle.is_trivial(r).map_err(err)?, || {
                format!("{name}: relator {} not trivial", p.alphabet().render(r))
            })?;
        }
    }
    Ok("B 4, ZxB 7, G 8, E 9 relators, all trivial".into())
}

fn zmod_limit() -> Outcome {
    let cfg = ExperimentConfig::default();
    let z = MarkedGroup::new("Z", Arc::new(CyclicGroup::integers()));
    for i in 2..=12u64 {
        let zi = MarkedGroup::new(
            format!("Z/{i}"),
            Arc::new(CyclicGroup::modulo(i).map_err(err)?),
        );
        let found = max_agreement(&zi, &z, i as usize + 1, &cfg.ball).map_err(err)?;
        ensure(found == Agreement::Exact(i as usize - 1), || {
            format!("i = {i}: {found}")
        })?;
    }
    let report = exp_zmod_limit(12, &cfg).map_err(err)?;
    ensure(report.pass && report.checks.len() == 11, || {
        report.canonical_json()
    })?;
    Ok("agreement radius i-1 for 2 <= i <= 12".into())
}

fn conjugate_identity() -> Outcome {
    let tower = Tower::standard();
    let al = tower.g.alphabet().clone();
    for i in -3..=3 {
        let w = |s: String| parse_word(&al, &s).map_err(err);
        let lhs = w(format!("(h^2)^(s b^{i})"))?;
        let rhs = w(format!("h a^(b^{i})"))?;
        ensure(tower.g.equal(&lhs, &rhs).map_err(err)?, || {
            format!("i = {i}: (h^2)^(s b^i) != h a^(b^i)")
        })?;
        ensure(
            tower.g.equal(&rhs.pow(2), &w("h^2".into())?).map_err(err)?,
            || format!("i = {i}: (h a^(b^i))^2 != h^2"),
        )?;
    }
    Ok("(h^2)^(s b^i) = h a^(b^i) and its square is h^2 for |i| <= 3".into())
}

fn orbit() -> Outcome {
    let cfg = ExperimentConfig::default();
    let mut found = Vec::new();
    for rho in [1, 2] {
        let r = exp_orbit(rho, &cfg).map_err(err)?;
        ensure(r.pass, || r.canonical_json())?;
        let i = &r.checks[0].witness["escape_index"];
        let z = &r.checks[1].witness["word"];
        found.push(format!("rho={rho}: i={i}, witness {z}"));
    }
    Ok(found.join("; "))
}

fn continuity() -> Outcome {
    let cfg = ExperimentConfig::default();
    let mut found = Vec::new();
    for r in [2, 3] {
        let report = exp_continuity(r, &cfg).map_err(err)?;
        ensure(report.pass, || report.canonical_json())?;
        let balls = report
            .checks
            .iter()
            .find(|c| c.id == "balls-coincide")
            .unwrap();
        found.push(format!("r={r}: {} relations", balls.witness["count_H"]));
        let control = report.checks.iter().find(|c| c.id == "control").unwrap();
        let len = control.witness["length"].as_u64().unwrap();
        ensure(len <= 8, || format!("control word has length {len}"))?;
    }
    // the control verdict computed directly through the marked-group API
    let tower = Tower::standard();
    let g = MarkedGroup::new("G", tower.g.clone());
    let e_h = condense(&g, &ChabautyPoint::new(tower.g.clone(), tower.h2.clone())).map_err(err)?;
    let e_k = condense(&g, &orbit_witness(&tower, 0).map_err(err)?.subgroup).map_err(err)?;
    let w = parse_word(e_h.alphabet(), "[h a, t]").map_err(err)?;
    ensure(
        e_k.is_trivial(&w).map_err(err)? && !e_h.is_trivial(&w).map_err(err)?,
        || "[h a, t] does not separate".into(),
    )?;
    found.push("control [h a, t] of length 6 separates".into());
    Ok(found.join("; "))
}

fn epsilon() -> Outcome {
    let r = exp_epsilon(&[1, 2, 3], 1, &ExperimentConfig::default()).map_err(err)?;
    ensure(r.pass, || r.canonical_json())?;
    for i in [2, 3] {
        let c = r
            .checks
            .iter()
            .find(|c| c.id == format!("collisions-{i}"))
            .unwrap();
        ensure(c.witness["collisions"] == 0, || {
            format!("i = {i}: {}", c.witness)
        })?;
    }
    ensure(r.checks.len() == 13, || {
        format!("{} checks", r.checks.len())
    })?;
    Ok("relator images, preimages, kernel witnesses and traces for i = 1, 2, 3; no collisions for i >= 2".into())
}

fn random_word(rng: &mut ChaCha8Rng, arity: u32, max_len: usize) -> Word {
    let len = rng.gen_range(0..=max_len);
    let mut w = Word::empty();
    while w.len() < len {
        let sign = if rng.gen_bool(0.5) {
            Sign::Pos
        } else {
            Sign::Neg
        };
        w.push_reduced(Letter::new(rng.gen_range(0..arity), sign));
    }
    w
}

fn oracle_properties() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(0x00C0_FFEE);
    let left = Tower::standard();
    let right = Tower::new(OracleConfig {
        order: PinchOrder::Rightmost,
        ..OracleConfig::default()
    })
    .map_err(err)?;
    let (e, e_right) = (left.e.clone(), right.e.clone());
    let p = builtin("E").map_err(err)?;
    let render = |w: &Word| p.alphabet().render(w);
    let mut trivial_seen = 0;
    for _ in 0..1000 {
        let w = random_word(&mut rng, 6, 12);
        let g = random_word(&mut rng, 6, 6);
        let verdict = e.is_trivial(&w).map_err(err)?;
        trivial_seen += usize::from(verdict);
        ensure(e.is_trivial(&w.concat(&w.inverse())).map_err(err)?, || {
            format!("w w^-1 for {}", render(&w))
        })?;
        let conj = w.conjugate(&g);
        ensure(e.is_trivial(&conj).map_err(err)? == verdict, || {
            format!("conjugating {} by {}", render(&w), render(&g))
        })?;
        let rel = &p.relators()[rng.gen_range(0..p.relators().len())];
        let rel = if rng.gen_bool(0.5) {
            rel.clone()
        } else {
            rel.inverse()
        };
        let cut = rng.gen_range(0..=w.len());
        let (head, tail) = w.letters().split_at(cut);
        let inserted = Word::product([
            &Word::from_letters(head.to_vec()),
            &rel.conjugate(&g),
            &Word::from_letters(tail.to_vec()),
        ]);
        ensure(e.is_trivial(&inserted).map_err(err)? == verdict, || {
            format!("inserting {} into {}", render(&rel), render(&w))
        })?;
        let relation = Word::product([
            &rel.conjugate(&g),
            &rel.inverse().conjugate(&w),
            &rel.conjugate(&conj),
        ]);
        ensure(e_right.is_trivial(&relation).map_err(err)?, || {
            format!("{} not trivial", render(&relation))
        })?;
        for x in [&w, &conj, &inserted, &relation] {
            ensure(
                e.is_trivial(x).map_err(err)? == e_right.is_trivial(x).map_err(err)?,
                || format!("pinch orders disagree on {}", render(x)),
            )?;
        }
    }
    Ok(format!(
        "1000 words, {trivial_seen} trivial; 4 properties hold"
    ))
}

fn determinism() -> Outcome {
    let n = std::thread::available_parallelism()
        .map(|n| n.get())
        .unwrap_or(4)
        .max(2);
    let run = |workers: usize| -> Result<Vec<String>, String> {
        let cfg = ExperimentConfig {
            ball: BallConfig::with_workers(workers),
            ..ExperimentConfig::default()
        };
        let mut out = Vec::new();
        for rho in [1, 2] {
            out.push(exp_orbit(rho, &cfg).map_err(err)?.canonical_json());
        }
        for r in [2, 3] {
            out.push(exp_continuity(r, &cfg).map_err(err)?.canonical_json());
        }
        let e = MarkedGroup::new("E", Tower::standard().e);
        out.push(relation_ball(&e, 4, &cfg.ball).map_err(err)?.export());
        Ok(out)
    };
    let one = run(1)?;
    let many = run(n)?;
    ensure(one == many, || {
        format!("outputs differ between 1 and {n} workers")
    })?;
    Ok(format!(
        "reports and radius-4 ball identical with 1 and {n} workers"
    ))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 8] = [
        ("relator suite", relator_suite, Duration::from_secs(1)),
        ("Z/iZ converges to Z", zmod_limit, Duration::from_secs(10)),
        (
            "conjugate identity",
            conjugate_identity,
            Duration::from_secs(1),
        ),
        (
            "orbit of <h^2> accumulates",
            orbit,
            Duration::from_secs(120),
        ),
        (
            "continuity of condensation",
            continuity,
            Duration::from_secs(300),
        ),
        ("epsilon endomorphisms", epsilon, Duration::from_secs(120)),
        (
            "oracle properties",
            oracle_properties,
            Duration::from_secs(60),
        ),
        (
            "determinism across workers",
            determinism,
            Duration::from_secs(300),
        ),
    ];
    let mut failures = 0;
    for (k, (name, run, limit)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = run();
        let took = start.elapsed();
        let outcome = match outcome {
            Ok(msg) if took > *limit => Err(format!("{msg}, but took {took:?} (limit {limit:?})")),
            other => other,
        };
        match outcome {
            Ok(msg) => println!("criterion {}: PASS {name}: {msg} ({took:.2?})", k + 1),
            Err(msg) => {
                failures += 1;
                println!("criterion {}: FAIL {name}: {msg} ({took:.2?})", k + 1);
            }
        }
    }
    if failures == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
