mod common;

use std::collections::BTreeSet;

use constellation::axioms::{verify_category, verify_constellation};
use constellation::congruences::{
    analyze_partition, canonical_closure, category_canonical_by_range, enumerate_canonical, enumerate_congruences,
    is_canonically_simple, maximal_elements, principal_canonical, quotient, quotient_map, relatability,
    satisfies_canonical_clauses, satisfies_category_canonical_clauses,
};
use constellation::constructions::{adjoin_identity, canonical_extension, star_extension};
use constellation::derived::{
    as_category, embeddable_in_category, is_categorial, is_composable, is_normal, standard_quasiorder,
};
use constellation::format::{parse_document, Document, PartitionDocument, StructureDocument};
use constellation::morphisms::{check_radiant, compose_maps, find_category_isomorphism, find_isomorphism, kernel_partition};
use constellation::{Category, Constellation, Elem, PartialMagma, Partition};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use common::*;

const MAX: usize = 6;

fn corpus(seed: u64) -> Corpus {
    Corpus::new(ChaCha8Rng::seed_from_u64(seed), MAX)
}

fn relabel(c: &Constellation, labels: &[String]) -> Constellation {
    let n = c.len();
    let mut table = vec![None; n * n];
    for (a, b, p) in c.magma().products() {
        table[a * n + b] = Some(p);
    }
    verify_constellation(&PartialMagma::from_table(labels.to_vec(), table).unwrap(), None).unwrap()
}

fn is_right_identity(m: &PartialMagma, e: Elem) -> bool {
    (0..m.len()).all(|x| m.mul(x, e).is_none_or(|p| p == x))
}

fn is_left_identity(m: &PartialMagma, e: Elem) -> bool {
    (0..m.len()).all(|x| m.mul(e, x).is_none_or(|p| p == x))
}

fn label_strategy() -> impl Strategy<Value = Vec<String>> {
    prop::collection::btree_set("[a-z0-9 _\"\\\\{}.=:#>\t\u{2192}-]{1,5}|undefined|kind", MAX)
        .prop_map(|s| s.into_iter().collect())
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 96, failure_persistence: None, ..ProptestConfig::default() })]

    #[test]
    fn documents_roundtrip_with_arbitrary_labels(seed in any::<u64>(), pool in label_strategy()) {
        let mut corpus = corpus(seed);
        let c = corpus.constellation();
        prop_assume!(pool.len() >= c.len());
        let c = relabel(&c, &pool[..c.len()]);
        let doc = StructureDocument::from_constellation("p q", &c);
        let text = doc.serialize();
        let Document::Structure(back) = parse_document(&text).unwrap() else { panic!("not a structure") };
        prop_assert_eq!(&back, &doc);
        prop_assert_eq!(back.serialize(), text);
        prop_assert_eq!(back.to_constellation().unwrap(), c.clone());

        let part = corpus.partition(c.len());
        let pdoc = PartitionDocument::from_partition("d", Some("p q".into()), &part, c.magma());
        let text = pdoc.serialize();
        let Document::Partition(pback) = parse_document(&text).unwrap() else { panic!("not a partition") };
        prop_assert_eq!(pback.resolve(c.magma()).unwrap(), part);
        prop_assert_eq!(pback.serialize(), text);
    }

    #[test]
    fn products_are_governed_by_domains(seed in any::<u64>()) {
        let c = corpus(seed).constellation();
        for s in 0..c.len() {
            for t in 0..c.len() {
                prop_assert_eq!(c.defined(s, t), c.defined(s, c.d(t)));
                if let Some(st) = c.mul(s, t) {
                    prop_assert_eq!(c.d(st), c.d(s));
                }
            }
        }
        let q = standard_quasiorder(&c);
        prop_assert!(q.is_reflexive() && q.is_transitive());
    }

    #[test]
    fn right_identities_of_categories_are_identities(seed in any::<u64>()) {
        let k = corpus(seed).category();
        prop_assert!(verify_constellation(k.magma(), None).is_ok());
        for e in 0..k.len() {
            if is_right_identity(k.magma(), e) {
                prop_assert!(is_left_identity(k.magma(), e));
                prop_assert!(k.identities().contains(&e));
            }
        }
    }

    #[test]
    fn categorial_constellations_embed(seed in any::<u64>()) {
        let c = corpus(seed).constellation();
        if is_categorial(&c) {
            prop_assert!(embeddable_in_category(&c));
            prop_assert!(verify_category(c.magma()).is_ok());
            let k = as_category(&c).unwrap();
            let cp = canonical_extension(&c);
            prop_assert!(find_category_isomorphism(&cp.category, &k).unwrap().is_some());
        }
        if is_normal(&c) {
            let sub: Vec<Elem> = (0..c.len()).filter(|&x| x % 2 == 0 || c.is_projection(x)).collect();
            if let Some(s) = constellation::derived::restrict(&c, &sub) {
                prop_assert!(is_normal(&s));
            }
        }
    }

    #[test]
    fn canonical_extension_is_idempotent(seed in any::<u64>()) {
        let p = corpus(seed).constellation();
        let cp = canonical_extension(&p);
        prop_assert!(verify_category(cp.category.magma()).is_ok());
        let ccp = canonical_extension(&cp.category.reduct());
        prop_assert!(find_category_isomorphism(&ccp.category, &cp.category).unwrap().is_some());
    }

    #[test]
    fn extensions_add_the_expected_element(seed in any::<u64>()) {
        let p = corpus(seed).constellation();
        let one = adjoin_identity(&p);
        let q = &one.constellation;
        prop_assert!((0..q.len()).all(|s| q.mul(s, one.new_element) == Some(s)));
        prop_assert!((0..p.len()).all(|s| (0..p.len()).all(|t| q.mul(s, t) == p.mul(s, t))));
        if let Ok(star) = star_extension(&p) {
            let mut want: BTreeSet<String> = p.projections().iter().map(|&e| p.label(e).to_string()).collect();
            want.insert(star.new_label().to_string());
            let got: BTreeSet<String> =
                star.constellation.projections().iter().map(|&e| star.constellation.label(e).to_string()).collect();
            prop_assert_eq!(got, want);
        }
    }

    #[test]
    fn isomorphism_search_is_symmetric(seed in any::<u64>()) {
        let mut corpus = corpus(seed);
        let a = corpus.constellation();
        let b = shuffle(&a, corpus.rng());
        prop_assert!(find_isomorphism(&a, &b).unwrap().is_some());
        prop_assert!(find_isomorphism(&b, &a).unwrap().is_some());
        let c = corpus.constellation();
        if c.len() == a.len() {
            prop_assert_eq!(
                find_isomorphism(&a, &c).unwrap().is_some(),
                find_isomorphism(&c, &a).unwrap().is_some()
            );
        }
    }

    #[test]
    fn congruence_properties_form_a_chain(seed in any::<u64>()) {
        let mut corpus = corpus(seed);
        let p = corpus.constellation();
        let part = corpus.partition(p.len());
        for d in enumerate_congruences(&p, MAX).unwrap().iter().chain([&part]) {
            let r = analyze_partition(&p, d);
            prop_assert!(!r.canonical || r.projection_separating);
            prop_assert!(!r.projection_separating || r.right_strong);
            prop_assert!(!r.strong || r.right_strong);
            prop_assert_eq!(r.canonical, satisfies_canonical_clauses(&p, d) && r.congruence);
            if r.right_strong {
                let q = quotient(&p, d).unwrap().outcome.unwrap();
                let want: BTreeSet<usize> = p.projections().iter().map(|&e| d.class_of(e)).collect();
                let got: BTreeSet<usize> = q.projections().iter().copied().collect();
                prop_assert_eq!(got, want);
            }
        }
    }

    #[test]
    fn canonical_forms_agree_on_categories(seed in any::<u64>()) {
        let mut corpus = corpus(seed);
        let k = corpus.category();
        let p = k.reduct();
        for d in enumerate_congruences(&p, MAX).unwrap().iter().chain([&corpus.partition(k.len())]) {
            let canonical = analyze_partition(&p, d).canonical;
            prop_assert_eq!(canonical, satisfies_category_canonical_clauses(&k, d));
            prop_assert_eq!(canonical, category_canonical_by_range(&k, d));
        }
    }

    #[test]
    fn canonical_congruences_are_closed_under_meets(seed in any::<u64>()) {
        let p = corpus(seed).constellation();
        let all = enumerate_canonical(&p, MAX).unwrap();
        let set: BTreeSet<&Partition> = all.iter().collect();
        for a in &all {
            for b in &all {
                prop_assert!(set.contains(&a.meet(b)));
            }
        }
    }

    #[test]
    fn principal_congruence_is_the_least(seed in any::<u64>()) {
        let k = corpus(seed).category();
        let all = enumerate_canonical(&k.reduct(), MAX).unwrap();
        for a in 0..k.len() {
            for b in a + 1..k.len() {
                let relating: Vec<&Partition> = all.iter().filter(|d| d.related(a, b)).collect();
                match relatability(&k, a, b) {
                    Ok(()) => {
                        let delta = principal_canonical(&k, a, b).unwrap();
                        let meet = relating.iter().fold(Partition::full(k.len()), |acc, d| acc.meet(d));
                        prop_assert_eq!(&delta, &meet);
                        let ids: Vec<usize> = (0..k.len()).map(|x| if x == b { a } else { x }).collect();
                        let seed = Partition::from_class_ids(&ids);
                        prop_assert_eq!(canonical_closure(&k.reduct(), &seed), Some(delta));
                    }
                    Err(_) => prop_assert!(relating.is_empty()),
                }
            }
        }
    }

    #[test]
    fn maximal_iff_simple_quotient(seed in any::<u64>()) {
        let p = corpus(seed).constellation();
        let all = enumerate_canonical(&p, MAX).unwrap();
        let maximal = maximal_elements(&all);
        for d in &all {
            let q = quotient(&p, d).unwrap().outcome.unwrap();
            prop_assert_eq!(maximal.contains(d), is_canonically_simple(&q).simple);
            if is_composable(&p) {
                let cp = canonical_extension(&p).category;
                let cq = canonical_extension(&q).category;
                prop_assert!(find_category_isomorphism(&cp, &cq).unwrap().is_some());
            }
        }
    }

    #[test]
    fn homomorphism_theorem(seed in any::<u64>()) {
        let p = corpus(seed).constellation();
        let separating: Vec<Partition> = enumerate_congruences(&p, MAX)
            .unwrap()
            .into_iter()
            .filter(|d| analyze_partition(&p, d).projection_separating)
            .collect();
        for d in &separating {
            let q = quotient(&p, d).unwrap();
            let target = q.outcome.as_ref().unwrap();
            let rho = q.natural_map();
            let w = check_radiant(&rho, &p, target).unwrap();
            prop_assert!(w.radiant && w.full && w.surjective);
            let back = quotient(&p, &kernel_partition(&rho)).unwrap().outcome.unwrap();
            prop_assert!(find_isomorphism(&back, target).unwrap().is_some());
            for g in separating.iter().filter(|g| d.refines(g)) {
                let (_, q2, w2) = quotient_map(&p, d, g).unwrap();
                prop_assert!(w2.radiant && w2.full && w2.surjective);
                let composite = compose_maps(&rho, &w2.map);
                prop_assert_eq!(&kernel_partition(&composite), g);
                let back = quotient(&p, &kernel_partition(&composite)).unwrap().outcome.unwrap();
                prop_assert!(find_isomorphism(&back, &q2).unwrap().is_some());
            }
        }
    }

    #[test]
    fn category_documents_roundtrip(seed in any::<u64>()) {
        let k: Category = corpus(seed).category();
        let text = StructureDocument::from_category("k", &k).serialize();
        let doc = parse_document(&text).unwrap();
        let Document::Structure(s) = doc else { panic!("not a structure") };
        prop_assert_eq!(s.serialize(), text);
        prop_assert_eq!(s.to_category().unwrap(), k);
    }
}
