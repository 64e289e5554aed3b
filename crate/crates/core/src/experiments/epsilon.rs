use rayon::prelude::*;
use serde_json::{json, Value};

use super::{ExperimentConfig, ExperimentReport};
use crate::error::{Error, Result};
use crate::groups::Tower;
use crate::oracle::GroupOracle;
use crate::presentation::{builtin, Derivation, DerivationBuilder, DerivationError, Presentation};
use crate::word::{ball, parse_word, Alphabet, Substitution, Word};

/// Longest accepted rewriting trace for a kernel witness.
pub const MAX_TRACE_STEPS: usize = 50;

/// The endomorphism `ε_i` of `E`: identity on `a, b, c, h, s` and
/// `t -> t^(s b^i)`.
pub fn epsilon_substitution(e: &Presentation, i: i64) -> Result<Substitution> {
    let al = e.alphabet();
    let sb = al.generator("s")?.mul(&al.generator("b")?.pow(i));
    e.conjugation_substitution(&sb, "t")
}

/// Words whose images under `ε_i` are the generators, in alphabet order.
pub fn surjectivity_preimages(al: &Alphabet, i: i64) -> Result<Vec<Word>> {
    let t = al.generator("t")?;
    let sb = al.generator("s")?.mul(&al.generator("b")?.pow(i));
    (0..al.arity())
        .map(|k| {
            let x = al.generator(al.name(k))?;
            Ok(if x == t {
                t.conjugate(&sb.inverse())
            } else {
                x
            })
        })
        .collect()
}

/// `[t, h a^(b^i)]`, a non-trivial element killed by `ε_i`.
pub fn kernel_witness(al: &Alphabet, i: i64) -> Result<Word> {
    let z = al
        .generator("h")?
        .mul(&al.generator("a")?.conjugate(&al.generator("b")?.pow(i)));
    Ok(Word::commutator(&al.generator("t")?, &z))
}

/// A relator-by-relator proof that `ε_i([t, h a^(b^i)])` is trivial in `E`:
/// move `h^-1` and `h` past the powers of `b`, trade `(h a)^±1` for the
/// conjugate of `h^±2` by `s`, and cancel the commutator of `t` with `h^2`.
pub fn kernel_derivation(e: &Presentation, i: i64) -> Result<Result<Derivation, DerivationError>> {
    let al = e.alphabet();
    let start = epsilon_substitution(e, i)?.apply(&kernel_witness(al, i)?);
    let w = |s: &str| parse_word(al, s);
    let (h_past_b, b_past_h) = if i >= 0 {
        ((w("h^-1 b^-1")?, w("b^-1 h^-1")?), (w("b h")?, w("h b")?))
    } else {
        ((w("h^-1 b")?, w("b h^-1")?), (w("b^-1 h")?, w("h b^-1")?))
    };
    let plan = [
        (w("a^-1 h^-1")?, w("s^-1 h^-1 h^-1 s")?),
        (w("h a")?, w("s^-1 h h s")?),
        (w("t^-1 h^-1 h^-1 t")?, w("h^-1 h^-1")?),
    ];
    let mut b = DerivationBuilder::new(e, start);
    let run = |b: &mut DerivationBuilder| -> std::result::Result<(), DerivationError> {
        for (from, to) in std::iter::repeat_n(&h_past_b, i.unsigned_abs() as usize)
            .chain(std::iter::repeat_n(&b_past_h, i.unsigned_abs() as usize))
            .chain(plan.iter())
        {
            b.rewrite(from, to)?;
            b.free_reduce();
        }
        Ok(())
    };
    Ok(run(&mut b).map(|_| b.finish()))
}

/// `ε_i` for each `i` in `indices`: well defined, onto, not injective, and
/// the number of collisions it produces on the radius-`rho` ball of `E`.
pub fn exp_epsilon(
    indices: &[i64],
    rho: usize,
    config: &ExperimentConfig,
) -> Result<ExperimentReport> {
    if rho > 2 {
        return Err(Error::InvalidArgument(format!(
            "rho must be at most 2, got {rho}"
        )));
    }
    if indices.is_empty() {
        return Err(Error::InvalidArgument("no values of i given".into()));
    }
    let tower = Tower::new(config.oracle)?;
    let e = builtin("E")?;
    let al = e.alphabet().clone();
    let oracle = tower.e.clone();
    let mut report = ExperimentReport::new("epsilon");
    report.param("i", indices.to_vec());
    report.param("rho", rho);
    let text = |w: &Word| Value::String(al.render(w));

    report.check("s-conjugates-h2", "s h^2 s^-1 = h^4 in E", || {
        let w = parse_word(&al, "s h^2 s^-1 h^-4")?;
        Ok((oracle.is_trivial(&w)?, json!({ "word": text(&w) })))
    })?;

    let f: Vec<Word> = ball(&al, rho).collect();
    for &i in indices {
        let eps = epsilon_substitution(&e, i)?;
        report.check(
            format!("well-defined-{i}"),
            "t -> t^(s b^i) sends every defining relator of E to the identity",
            || {
                let mut images = Vec::new();
                let mut pass = true;
                for rel in e.relators() {
                    let img = eps.apply(rel);
                    pass &= oracle.is_trivial(&img)?;
                    images.push(text(&img));
                }
                Ok((
                    pass && images.len() == 9,
                    json!({ "relator_images": images }),
                ))
            },
        )?;

        report.check(
            format!("surjective-{i}"),
            "every generator of E has an explicit preimage under t -> t^(s b^i)",
            || {
                let mut pass = true;
                let mut pre = serde_json::Map::new();
                for (k, p) in surjectivity_preimages(&al, i)?.iter().enumerate() {
                    pass &= oracle.equal(&eps.apply(p), &al.generator(al.name(k))?)?;
                    pre.insert(al.name(k).to_string(), text(p));
                }
                Ok((pass, json!({ "preimages": pre })))
            },
        )?;

        report.check(
            format!("kernel-{i}"),
            "[t, h a^(b^i)] ≠ 1 in E while its image under t -> t^(s b^i) is 1",
            || {
                let w = kernel_witness(&al, i)?;
                let img = eps.apply(&w);
                let w_trivial = oracle.is_trivial(&w)?;
                let img_trivial = oracle.is_trivial(&img)?;
                let (trace_ok, steps, relator_steps, reason) = match kernel_derivation(&e, i)? {
                    Ok(d) => {
                        let ok = d.proves_trivial(&e) && d.steps.len() <= MAX_TRACE_STEPS;
                        (ok, d.steps.len(), d.relator_steps(), Value::Null)
                    }
                    Err(err) => (false, 0, 0, json!(err.to_string())),
                };
                Ok((
                    !w_trivial && img_trivial && trace_ok,
                    json!({
                        "word": text(&w),
                        "image": text(&img),
                        "word_trivial": w_trivial,
                        "image_trivial": img_trivial,
                        "trace_steps": steps,
                        "trace_relator_steps": relator_steps,
                        "trace_error": reason,
                    }),
                ))
            },
        )?;

        report.check(
            format!("collisions-{i}"),
            "pairs u ≠ v in the ball with ε_i(u) = ε_i(v) (informational)",
            || {
                let images: Vec<Word> = f.iter().map(|u| eps.apply(u)).collect();
                let pairs: Vec<(usize, usize)> = (0..f.len())
                    .flat_map(|a| (a + 1..f.len()).map(move |b| (a, b)))
                    .collect();
                let hits = config.ball.run(|| {
                    pairs
                        .par_iter()
                        .map(|&(a, b)| -> Result<Option<(usize, usize)>> {
                            let collide = oracle.equal(&images[a], &images[b])?
                                && !oracle.equal(&f[a], &f[b])?;
                            Ok(collide.then_some((a, b)))
                        })
                        .collect::<Result<Vec<_>>>()
                })??;
                let hits: Vec<(usize, usize)> = hits.into_iter().flatten().collect();
                let examples: Vec<Value> = hits
                    .iter()
                    .take(5)
                    .map(|&(a, b)| json!([text(&f[a]), text(&f[b])]))
                    .collect();
                Ok((
                    true,
                    json!({ "ball_size": f.len(), "collisions": hits.len(), "examples": examples }),
                ))
            },
        )?;
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn kernel_trace_lengths() {
        let e = builtin("E").unwrap();
        for i in -3..=3i64 {
            let d = kernel_derivation(&e, i).unwrap().unwrap();
            assert!(d.proves_trivial(&e), "i = {i}");
            assert_eq!(d.relator_steps(), 2 * i.unsigned_abs() as usize + 3);
            assert!(d.steps.len() <= MAX_TRACE_STEPS);
        }
    }

    #[test]
    fn preimage_of_t() {
        let e = builtin("E").unwrap();
        let al = e.alphabet();
        let pre = surjectivity_preimages(al, 1).unwrap();
        assert_eq!(al.render(&pre[5]), "s b t b^-1 s^-1");
        assert_eq!(
            al.render(&epsilon_substitution(&e, 1).unwrap().apply(&pre[5])),
            "t"
        );
    }

    #[test]
    fn epsilon_one_on_small_ball() {
        let r = exp_epsilon(&[1], 1, &ExperimentConfig::default()).unwrap();
        assert!(r.pass, "{}", r.canonical_json());
        assert_eq!(r.checks.len(), 5);
    }
}
