use serde_json::{json, Value};

use super::{ExperimentConfig, ExperimentReport};
use crate::error::{Error, Result};
use crate::groups::Tower;
use crate::marked::{
    chabauty_disagreement, condense_with, escape_index, max_agreement, orbit_witness,
    relation_ball, Agreement, ChabautyPoint, MarkedGroup,
};
use crate::oracle::{CyclicGroup, GroupOracle};
use crate::presentation::builtin;
use crate::word::{ball, Alphabet, Word};

fn rendered(al: &Alphabet, w: &Word) -> Value {
    Value::String(al.render(w))
}

fn agreement_value(a: Agreement) -> Value {
    match a {
        Agreement::Exact(r) => json!(r),
        Agreement::AtLeast(r) => json!(format!(">= {r}")),
    }
}

/// `(Z/iZ, (1))` agrees with `(Z, (1))` exactly up to radius `i - 1`.
pub fn exp_zmod_limit(i_max: u64, config: &ExperimentConfig) -> Result<ExperimentReport> {
    if i_max < 2 {
        return Err(Error::InvalidArgument(format!(
            "imax must be at least 2, got {i_max}"
        )));
    }
    let mut report = ExperimentReport::new("zmod-limit");
    report.param("imax", i_max);
    let z = MarkedGroup::new("Z", std::sync::Arc::new(CyclicGroup::integers()));
    for i in 2..=i_max {
        let zi = MarkedGroup::new(
            format!("Z/{i}"),
            std::sync::Arc::new(CyclicGroup::modulo(i)?),
        );
        report.check(
            format!("zmod-{i}"),
            "(Z/iZ,(1)) and (Z,(1)) have the same relations of length < i, and x^i separates them",
            || {
                let found = max_agreement(&zi, &z, i as usize + 1, &config.ball)?;
                let pass = found == Agreement::Exact(i as usize - 1);
                Ok((
                    pass,
                    json!({
                        "i": i,
                        "agreement": agreement_value(found),
                        "expected": i - 1,
                        "separating_word": format!("x^{i}"),
                    }),
                ))
            },
        )?;
    }
    Ok(report)
}

fn ball_words(tower: &Tower, r: usize, config: &ExperimentConfig) -> Result<Vec<Word>> {
    let al = tower.g.alphabet();
    let size = crate::word::ball_size(al.arity(), r);
    if size > u128::from(config.ball.max_words) {
        return Err(Error::BallBudget {
            radius: r,
            size,
            limit: config.ball.max_words,
        });
    }
    Ok(ball(al, r).collect())
}

/// Pushes the three orbit checks for `F` = the radius-`rho` ball of `G`.
fn orbit_checks(
    report: &mut ExperimentReport,
    tower: &Tower,
    f: &[Word],
    prefix: &str,
) -> Result<i64> {
    let al = tower.g.alphabet().clone();
    let i = escape_index(tower, f)?;
    let o = orbit_witness(tower, i)?;
    let h2 = ChabautyPoint::new(tower.g.clone(), tower.h2.clone()).with_label("H2");
    report.check(
        format!("{prefix}agree-on-ball"),
        "H ∩ F = gHg^-1 ∩ F for H = <h^2>, g = (s b^i)^-1, i the escape index of F",
        || {
            let bad = chabauty_disagreement(&h2, &o.subgroup, f)?;
            Ok((
                bad.is_none(),
                json!({
                    "escape_index": i,
                    "conjugator": rendered(&al, &o.conjugator),
                    "ball_size": f.len(),
                    "disagreement": bad.map(|w| rendered(&al, &w)),
                }),
            ))
        },
    )?;
    report.check(
        format!("{prefix}distinct"),
        "h a^(b^i) lies in gHg^-1 but not in H, so gHg^-1 ≠ H",
        || {
            let in_k = o.subgroup.contains(&o.witness)?;
            let in_h = h2.contains(&o.witness)?;
            Ok((
                in_k && !in_h,
                json!({ "word": rendered(&al, &o.witness), "in_K": in_k, "in_H": in_h }),
            ))
        },
    )?;
    report.check(
        format!("{prefix}conjugate-identity"),
        "(h^2)^(s b^i) = h a^(b^i) in G",
        || {
            let sb = al.generator("s")?.mul(&al.generator("b")?.pow(i));
            let lhs = al.generator("h")?.pow(2).conjugate(&sb);
            let eq = tower.g.equal(&lhs, &o.witness)?;
            Ok((
                eq,
                json!({ "lhs": rendered(&al, &lhs), "rhs": rendered(&al, &o.witness) }),
            ))
        },
    )?;
    Ok(i)
}

/// `<h^2>` is approximated in the Chabauty topology by a distinct conjugate.
pub fn exp_orbit(rho: usize, config: &ExperimentConfig) -> Result<ExperimentReport> {
    if rho > 3 {
        return Err(Error::InvalidArgument(format!(
            "rho must be at most 3, got {rho}"
        )));
    }
    let tower = Tower::new(config.oracle)?;
    let mut report = ExperimentReport::new("orbit");
    report.param("rho", rho);
    let f = ball_words(&tower, rho, config)?;
    orbit_checks(&mut report, &tower, &f, "")?;
    Ok(report)
}

/// Condensation is continuous at `<h^2>`: a subgroup agreeing with it on the
/// radius-`r` ball yields a marked group agreeing with `E` at radius `r`.
pub fn exp_continuity(r: usize, config: &ExperimentConfig) -> Result<ExperimentReport> {
    if !(1..=4).contains(&r) {
        return Err(Error::InvalidArgument(format!(
            "radius must be in 1..=4, got {r}"
        )));
    }
    let tower = Tower::new(config.oracle)?;
    let mut report = ExperimentReport::new("continuity");
    report.param("radius", r);
    let f = ball_words(&tower, r, config)?;
    let i = orbit_checks(&mut report, &tower, &f, "")?;

    let g = MarkedGroup::new("G", tower.g.clone());
    let h2 = ChabautyPoint::new(tower.g.clone(), tower.h2.clone()).with_label("H2");
    let o = orbit_witness(&tower, i)?;
    let e_h = condense_with(&g, &h2, config.oracle)?;
    let e_k = condense_with(&g, &o.subgroup, config.oracle)?;
    let al = e_h.alphabet().clone();

    report.check(
        "balls-coincide",
        "E(G,H) and E(G,K) have the same relations of length ≤ r when H ∩ F = K ∩ F for F the radius-r ball",
        || {
            let bh = relation_ball(&e_h, r, &config.ball)?;
            let bk = relation_ball(&e_k, r, &config.ball)?;
            Ok((
                bh.fingerprint() == bk.fingerprint(),
                json!({
                    "count_H": bh.len(),
                    "count_K": bk.len(),
                    "fingerprint_H": bh.fingerprint_hex(),
                    "fingerprint_K": bk.fingerprint_hex(),
                }),
            ))
        },
    )?;

    let t = al.generator("t")?;
    report.check(
        "separating-word",
        "[z, t] = 1 in E(G,K) and [z, t] ≠ 1 in E(G,H) for z ∈ K \\ H",
        || {
            let w = Word::commutator(&o.witness, &t);
            let in_k = e_k.is_trivial(&w)?;
            let in_h = e_h.is_trivial(&w)?;
            Ok((
                in_k && !in_h,
                json!({ "word": rendered(&al, &w), "length": w.len(), "trivial_in_K": in_k, "trivial_in_H": in_h }),
            ))
        },
    )?;

    report.check(
        "conjugation-isomorphism",
        "t -> g^-1 t g sends every relator of E(G,H) to a relation of E(G,gHg^-1)",
        || {
            let e = builtin("E")?;
            let sigma = e.conjugation_substitution(&o.conjugator, "t")?;
            let mut failures = Vec::new();
            for rel in e.relators() {
                if !e_k.is_trivial(&sigma.apply(rel))? {
                    failures.push(rendered(&al, rel));
                }
            }
            Ok((
                failures.is_empty(),
                json!({ "t_image": rendered(&al, &sigma.apply(&t)), "failures": failures }),
            ))
        },
    )?;

    let control = orbit_witness(&tower, 0)?;
    let e_c = condense_with(&g, &control.subgroup, config.oracle)?;
    report.check(
        "control",
        "for K = <h a> the commutator [h a, t] separates E(G,K) from E(G,H) at length ≤ 8",
        || {
            let w = Word::commutator(&control.witness, &t);
            let in_k = e_c.is_trivial(&w)?;
            let in_h = e_h.is_trivial(&w)?;
            Ok((
                in_k && !in_h && w.len() <= 8,
                json!({ "word": rendered(&al, &w), "length": w.len(), "trivial_in_K": in_k, "trivial_in_H": in_h }),
            ))
        },
    )?;
    Ok(report)
}
