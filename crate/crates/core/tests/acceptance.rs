//! Acceptance gate: one line per criterion, all exact.
#![allow(clippy::absurd_extreme_comparisons)]

mod common;

use std::time::Instant;

use constellation::axioms::{verify_category, verify_constellation, verify_constellation_alt, Axiom};
use constellation::congruences::{
    analyze_partition, canonical_closure, canonical_reconstruction, canonical_tilde, delta_category_of,
    enumerate_canonical, enumerate_congruences, maximal_canonical, principal_canonical, quotient, relatability,
    ENUMERATION_LIMIT,
};
use constellation::constructions::{
    canonical_extension, count_codx, count_cx, cx_fixed_domain, gen_codx, gen_cx, gen_sx, FunctionConstellation,
    PartialFunction,
};
use constellation::derived::{generated_subconstellation, is_normal, normality_witness, restrict};
use constellation::format::StructureDocument;
use constellation::morphisms::{cayley_embedding, find_category_isomorphism, find_delta_isomorphism, find_isomorphism};
use constellation::{Category, Constellation, Elem, PartialMagma, Partition};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use common::*;

/// Every criterion is exact: no discrepancy is tolerated.
const MAX_DISCREPANCIES: usize = 0;
const EXHAUSTIVE_MAX_N: usize = 3;
const RANDOM_SAMPLES: usize = 1000;
const RANDOM_MAX_SIZE: usize = 6;
const SEED: u64 = 0x5eed_c0de;

type Outcome = Result<String, String>;

fn check(cond: bool, what: impl Into<String>) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(what.into())
    }
}

fn tally(discrepancies: usize, checked: usize, what: &str) -> Outcome {
    if discrepancies <= MAX_DISCREPANCIES {
        Ok(format!("{checked} {what}, {discrepancies} discrepancies"))
    } else {
        Err(format!("{discrepancies} discrepancies over {checked} {what}"))
    }
}

/// `c` with elements renamed and listed in `order`.
fn reorder(c: &Constellation, order: &[&str], rename: &[(&str, &str)]) -> Constellation {
    let name = |x: Elem| {
        let l = c.label(x);
        rename.iter().find(|(from, _)| *from == l).map_or(l, |(_, to)| *to).to_string()
    };
    let pos = |x: Elem| order.iter().position(|o| *o == name(x)).expect("label in order");
    let n = c.len();
    let mut table = vec![None; n * n];
    for (a, b, p) in c.magma().products() {
        table[pos(a) * n + pos(b)] = Some(pos(p));
    }
    verify_constellation(&PartialMagma::from_table(order.to_vec(), table).unwrap(), None).unwrap()
}

fn without_comments(text: &str) -> String {
    text.lines().filter(|l| !l.starts_with('#')).map(|l| format!("{l}\n")).collect()
}

fn criterion_1_counting() -> Outcome {
    let cx = [(2, 9u128), (3, 64), (4, 625)];
    let codx = [(2, 18u128), (3, 170), (4, 2200)];
    for (n, want) in cx {
        check(count_cx(n).unwrap() == want, format!("count_cx({n}) != {want}"))?;
    }
    for (n, want) in codx {
        check(count_codx(n).unwrap() == want, format!("count_codx({n}) != {want}"))?;
    }
    for n in 1..=4 {
        let got = gen_cx(n).unwrap().constellation.len() as u128;
        check(got == count_cx(n).unwrap(), format!("gen_cx({n}) has {got} elements"))?;
    }
    for n in 1..=3 {
        let got = gen_codx(n).unwrap().category.len() as u128;
        check(got == count_codx(n).unwrap(), format!("gen_codx({n}) has {got} elements"))?;
    }
    Ok("9/64/625 and 18/170/2200; generated carriers agree for cx n<=4, codx n<=3".into())
}

fn criterion_2_golden_tables() -> Outcome {
    let sx = gen_sx(2).unwrap().category;
    let text = StructureDocument::from_category("sx2", &sx).serialize();
    check(text == data_text("sx2.const"), "gen_sx(2) differs from the golden 8x8 table")?;

    let golden = data_text("k6.const");
    let doc = structure("k6.const");
    check(doc.serialize() == golden, "K document does not reserialize byte-exactly")?;
    let k = verify_category(&doc.magma).map_err(|e| e.to_string())?;
    let labels = |xs: &[Elem]| xs.iter().map(|&x| k.label(x).to_string()).collect::<Vec<_>>();
    check(labels(k.domain_map()) == ["e", "e", "e", "e", "f", "g"], "D on K")?;
    check(labels(k.range_map()) == ["f", "g", "e", "f", "f", "g"], "R on K")?;
    Ok("S_X(2) table and K document byte-exact; K has the printed D and R".into())
}

fn criterion_3_canonical_suite() -> Outcome {
    let k = k6();
    let p = k.reduct();
    let d1 = delta("delta1.part", k.magma());
    let d2 = delta("delta2.part", k.magma());
    check(analyze_partition(&p, &d1).canonical, "delta1 not canonical")?;
    check(analyze_partition(&p, &d2).canonical, "delta2 not canonical")?;
    let maximal = maximal_canonical(&p, ENUMERATION_LIMIT).all.ok_or("K over the enumeration cap")?;
    check(maximal.contains(&d1) && maximal.contains(&d2), "delta1 or delta2 not maximal")?;

    let q1 = quotient(&p, &d1).unwrap().outcome.map_err(|e| e.to_string())?;
    let q2 = quotient(&p, &d2).unwrap().outcome.map_err(|e| e.to_string())?;
    check(
        StructureDocument::from_constellation("K/delta1", &q1).serialize() == data_text("kd1.const"),
        "K/delta1 table",
    )?;
    check(
        StructureDocument::from_constellation("K/delta2", &q2).serialize() == data_text("kd2.const"),
        "K/delta2 table",
    )?;
    check(find_isomorphism(&q1, &q2).unwrap().is_none(), "K/delta1 and K/delta2 isomorphic")?;

    let r = canonical_reconstruction(&k, &d1).map_err(|e| e.to_string())?;
    let image: Vec<String> = r
        .witness
        .map
        .iter()
        .map(|&y| r.extension.category.label(y).to_string())
        .collect();
    check(
        image == ["([e],f)", "([e],g)", "([e],[e])", "(a,f)", "(f,f)", "(g,g)"],
        format!("reconstruction map {image:?}"),
    )?;
    check(r.category_isomorphism() && r.delta_isomorphism, "reconstruction is not a delta-isomorphism")?;
    Ok(format!(
        "delta1, delta2 canonical and among {} maximal; quotient tables exact; not isomorphic; b->([e],f) c->([e],g) a->(a,f)",
        maximal.len()
    ))
}

fn criterion_4_sx_suite() -> Outcome {
    let sx = gen_sx(2).unwrap().category;
    let p = sx.reduct();
    let gamma = delta("gamma.part", sx.magma());
    check(analyze_partition(&p, &gamma).canonical, "gamma not canonical")?;
    let all = enumerate_canonical(&p, ENUMERATION_LIMIT).map_err(|e| e.to_string())?;
    check(all.contains(&gamma), "gamma missing from the enumeration")?;
    check(all.iter().all(|c| c.refines(&gamma)), "gamma is not the maximum")?;

    let q = quotient(&p, &gamma).unwrap().outcome.map_err(|e| e.to_string())?;
    let printed = reorder(&q, &["1", "[1_a]", "[1_b]", "f", "i"], &[("[f_a]", "f")]);
    check(
        StructureDocument::from_constellation("sx2/gamma", &printed).serialize() == without_comments(&data_text("sx2_gamma.const")),
        "S_X/gamma table",
    )?;
    let w = normality_witness(&q).ok_or("S_X/gamma is normal")?;
    check(
        (q.label(w.0), q.label(w.1)) == ("[1_a]", "[1_b]"),
        format!("normality witness ({}, {})", q.label(w.0), q.label(w.1)),
    )?;

    let normal: Vec<&Partition> = all
        .iter()
        .filter(|c| !c.is_diagonal())
        .filter(|c| quotient(&p, c).unwrap().outcome.map(|q| is_normal(&q)).unwrap_or(false))
        .collect();
    let fafb = Partition::from_labels(
        sx.magma(),
        &[vec!["1"], vec!["f_a", "f_b"], vec!["i"], vec!["1_a"], vec!["ab"], vec!["1_b"], vec!["ba"]],
    )
    .unwrap();
    check(normal == [&fafb], format!("{} non-trivial canonical congruences with normal quotient", normal.len()))?;
    Ok(format!(
        "gamma is the maximum of {} canonical congruences; 5x5 table exact; witness ([1_a],[1_b]); only {{f_a,f_b}} has a normal quotient",
        all.len()
    ))
}

fn criterion_5_axiomatizations() -> Outcome {
    let start = Instant::now();
    let mut checked = 0;
    let mut accepted = 0;
    let mut discrepancies = 0;
    for n in 1..=EXHAUSTIVE_MAX_N {
        for m in all_magmas(n) {
            checked += 1;
            let a = verify_constellation(&m, None).ok().map(|c| c.domain_map().to_vec());
            let b = verify_constellation_alt(&m).ok().map(|c| c.domain_map().to_vec());
            accepted += a.is_some() as usize;
            discrepancies += (a != b) as usize;
        }
    }
    tally(
        discrepancies,
        checked,
        &format!("partial magmas on 1..=3 points ({accepted} constellations, {:.1?})", start.elapsed()),
    )
}

fn corpus() -> Vec<Constellation> {
    let mut all = exhaustive_constellations(EXHAUSTIVE_MAX_N);
    all.extend(worked_examples().into_iter().map(|(_, c)| c));
    all.push(four_projection_example().reduct());
    all
}

/// `s` with `D(s) = g` composing with projections `e` and `f`, inside the
/// partial functions on three points.
fn four_projection_example() -> Category {
    let cx = gen_cx(3).unwrap();
    let f = |g: &[(usize, usize)]| cx.index_of(&PartialFunction::from_graph(3, g).unwrap()).unwrap();
    let seed = [f(&[(0, 1), (2, 1)]), f(&[(0, 0), (1, 1)]), f(&[(1, 1), (2, 2)])];
    let sub = generated_subconstellation(&cx.constellation, &seed).unwrap();
    let p = restrict(&cx.constellation, &sub).unwrap();
    assert_eq!(p.len(), 4);
    canonical_extension(&p).category
}

fn criterion_6_cayley(corpus: &[Constellation]) -> Outcome {
    let discrepancies = corpus
        .iter()
        .filter(|c| cayley_embedding(c).embedding() != is_normal(c))
        .count();
    tally(discrepancies, corpus.len(), "constellations")
}

fn criterion_7_roundtrips(corpus: &[Constellation]) -> Outcome {
    let mut failures = 0;
    let mut composable = 0;
    for p in corpus {
        let cp = canonical_extension(p);
        let ccp = canonical_extension(&cp.category.reduct());
        if find_category_isomorphism(&ccp.category, &cp.category).unwrap().is_none() {
            failures += 1;
        }
        let Ok((cp, tilde)) = canonical_tilde(p) else { continue };
        composable += 1;
        let q = quotient(&cp.category.reduct(), &tilde).unwrap().outcome;
        let ok = q.is_ok_and(|q| q.len() == p.len() && find_isomorphism(p, &q).unwrap().is_some());
        failures += (!ok) as usize;
    }
    let mut categories: Vec<Category> = exhaustive_categories(EXHAUSTIVE_MAX_N);
    categories.extend(worked_categories().into_iter().map(|(_, k)| k));
    categories.push(four_projection_example());
    let mut pairs = 0;
    for k in &categories {
        for d in enumerate_canonical(&k.reduct(), ENUMERATION_LIMIT).unwrap() {
            pairs += 1;
            let r = canonical_reconstruction(k, &d).unwrap();
            let back = delta_category_of(&r.quotient).unwrap();
            let ok = r.category_isomorphism()
                && r.delta_isomorphism
                && find_delta_isomorphism(k, &d, &back.category, &back.delta).unwrap().is_some();
            failures += (!ok) as usize;
        }
    }
    if failures <= MAX_DISCREPANCIES {
        Ok(format!(
            "C(C(P)) ~ C(P) for {}, C(P)/~ ~ P for {composable} composable, (K,delta) ~ (C(K/delta),~) for {pairs} pairs over {} categories",
            corpus.len(),
            categories.len()
        ))
    } else {
        Err(format!("{failures} roundtrip failures"))
    }
}

fn criterion_8_counterexamples() -> Outcome {
    // Four-element quotient: a = {s}, b = {t1, t2}, c = {u}.
    let four = four_element();
    let q = quotient(&four, &Partition::from_class_ids(&[0, 1, 1, 2])).unwrap();
    let err = q.outcome.err().ok_or("four-element quotient is a constellation")?;
    let c1 = err.report().and_then(|r| r.get(Axiom::C1)).ok_or("no (C1) violation")?;
    check(c1.witness_labels == ["s", "[t1]", "u"], format!("(C1) witness {:?}", c1.witness_labels))?;
    let (a, b, c) = (0, 1, 2);
    let bc = q.magma.mul(b, c).ok_or("b.c undefined")?;
    check(q.magma.mul(a, bc) == Some(a), "a.(b.c) != a")?;
    check(q.magma.mul(q.magma.mul(a, b).unwrap(), c).is_none(), "(a.b).c exists")?;

    // Fixed-domain partial functions: (Cat1) fails once Y has two points.
    let fails = |n: usize, y: &[usize]| -> Option<(String, String, String)> {
        let FunctionConstellation { constellation, .. } = cx_fixed_domain(n, y).unwrap();
        let m = constellation.magma();
        verify_category(m)
            .err()
            .and_then(|e| e.report().and_then(|r| r.get(Axiom::Cat1)).cloned())
            .map(|v| (v.witness_labels[0].clone(), v.witness_labels[1].clone(), v.witness_labels[2].clone()))
    };
    let (x, y, z) = fails(3, &[0, 1]).ok_or("(Cat1) holds for X={1,2,3}, Y={1,2}")?;
    check(x == z, format!("(Cat1) witness ({x}, {y}, {z}) is not of the form (s, t, s)"))?;
    check(fails(2, &[0]).is_none(), "literal X={1,2}, Y={1} unexpectedly fails (Cat1)")?;
    let cx = gen_cx(2).unwrap();
    let s = cx.index_of(&PartialFunction::from_graph(2, &[(0, 0)]).unwrap()).unwrap();
    let t = cx.index_of(&PartialFunction::from_graph(2, &[(0, 0), (1, 1)]).unwrap()).unwrap();
    let m = cx.constellation.magma();
    let st = m.mul(s, t).ok_or("s.t undefined")?;
    check(m.mul(st, s) == Some(s), "(s.t).s != s")?;
    check(m.mul(t, s).is_none(), "t.s exists")?;

    // {e}, {f, g} on e <= f, g: a constellation quotient from a congruence that is not right strong.
    let poset = worked_examples().into_iter().find(|(n, _)| n == "e<f,g").unwrap().1;
    let efg = Partition::from_class_ids(&[0, 1, 1]);
    let r = analyze_partition(&poset, &efg);
    check(r.congruence && !r.right_strong, "{e},{f,g} should be a non-right-strong congruence")?;
    check(quotient(&poset, &efg).unwrap().outcome.is_ok(), "{e},{f,g} quotient not a constellation")?;

    // Full relation on two incomparable projections.
    let anti = constellation::constructions::from_quasiorder(vec!["e", "f"], &[(0, 0), (1, 1)]).unwrap();
    let r = analyze_partition(&anti, &Partition::full(2));
    check(
        r.congruence && r.right_strong && !r.strong && !r.projection_separating,
        "full relation on {e, f}",
    )?;
    Ok(format!(
        "(C1) fails at (s,[t1],u); (Cat1) fails at ({x},{y},{z}) for Y={{1,2}} in X={{1,2,3}} and (s.t).s=s, t.s undefined in C_X; {{e}},{{f,g}} quotient valid; full relation right strong, not separating"
    ))
}

fn criterion_9_properties() -> Outcome {
    let mut corpus = Corpus::new(ChaCha8Rng::seed_from_u64(SEED), RANDOM_MAX_SIZE);
    let mut violations = 0;
    let mut congruences = 0;
    for _ in 0..RANDOM_SAMPLES {
        let c = corpus.constellation();
        for part in enumerate_congruences(&c, RANDOM_MAX_SIZE).unwrap() {
            congruences += 1;
            let r = analyze_partition(&c, &part);
            if (r.canonical && !r.projection_separating) || (r.projection_separating && !r.right_strong) {
                violations += 1;
            }
            if r.right_strong && quotient(&c, &part).unwrap().outcome.is_err() {
                violations += 1;
            }
        }
    }
    let mut relatable = 0;
    for _ in 0..RANDOM_SAMPLES {
        let k = corpus.category();
        let canon = enumerate_canonical(&k.reduct(), RANDOM_MAX_SIZE).unwrap();
        for a in 0..k.len() {
            for b in a + 1..k.len() {
                if relatability(&k, a, b).is_err() {
                    continue;
                }
                relatable += 1;
                let principal = principal_canonical(&k, a, b).unwrap();
                let meet = canon
                    .iter()
                    .filter(|d| d.related(a, b))
                    .fold(Partition::full(k.len()), |acc, d| acc.meet(d));
                let closure = canonical_closure(&k.reduct(), &join(k.len(), a, b));
                if principal != meet || closure.as_ref() != Some(&principal) {
                    violations += 1;
                }
            }
        }
    }
    tally(
        violations,
        2 * RANDOM_SAMPLES,
        &format!("random samples ({congruences} congruences, {relatable} relatable pairs)"),
    )
}

fn join(n: usize, a: Elem, b: Elem) -> Partition {
    let ids: Vec<usize> = (0..n).map(|x| if x == b { a } else { x }).collect();
    Partition::from_class_ids(&ids)
}

#[test]
fn acceptance() {
    let start = Instant::now();
    let corpus = corpus();
    let results: Vec<(&str, Outcome)> = vec![
        ("1 counting", criterion_1_counting()),
        ("2 golden tables", criterion_2_golden_tables()),
        ("3 canonical congruences on K", criterion_3_canonical_suite()),
        ("4 S_X suite", criterion_4_sx_suite()),
        ("5 axiomatization equivalence", criterion_5_axiomatizations()),
        ("6 Cayley iff normal", criterion_6_cayley(&corpus)),
        ("7 roundtrips", criterion_7_roundtrips(&corpus)),
        ("8 counterexamples", criterion_8_counterexamples()),
        ("9 property suite", criterion_9_properties()),
    ];
    let mut failed = Vec::new();
    for (name, outcome) in &results {
        match outcome {
            Ok(detail) => println!("PASS criterion {name}: {detail}"),
            Err(detail) => {
                println!("FAIL criterion {name}: {detail}");
                failed.push(*name);
            }
        }
    }
    println!("acceptance finished in {:.1?}", start.elapsed());
    assert!(failed.is_empty(), "failed criteria: {failed:?}");
}
