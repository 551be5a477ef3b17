#![allow(dead_code)]

use std::path::PathBuf;

use constellation::axioms::{verify_category, verify_constellation};
use constellation::constructions::{canonical_extension, from_quasiorder, gen_codx, gen_cx, gen_sx};
use constellation::derived::{generated_subconstellation, restrict};
use constellation::format::{parse_document, Document, PartitionDocument, StructureDocument};
use constellation::{Category, Constellation, Elem, PartialMagma, Partition};
use rand::seq::SliceRandom;
use rand::Rng;
use rand_chacha::ChaCha8Rng;

pub fn data_path(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/data").join(name)
}

pub fn data_text(name: &str) -> String {
    std::fs::read_to_string(data_path(name)).unwrap()
}

pub fn structure(name: &str) -> StructureDocument {
    match parse_document(&data_text(name)).unwrap() {
        Document::Structure(s) => s,
        Document::Partition(_) => panic!("{name} is a partition"),
    }
}

pub fn partition_doc(name: &str) -> PartitionDocument {
    match parse_document(&data_text(name)).unwrap() {
        Document::Partition(p) => p,
        Document::Structure(_) => panic!("{name} is a structure"),
    }
}

pub fn k6() -> Category {
    structure("k6.const").to_category().unwrap()
}

pub fn delta(name: &str, m: &PartialMagma) -> Partition {
    partition_doc(name).resolve(m).unwrap()
}

/// Every partial magma on `n` labelled points, `(n + 1)^(n²)` of them.
pub fn all_magmas(n: usize) -> impl Iterator<Item = PartialMagma> {
    let cells = n * n;
    let total = (n as u64 + 1).pow(cells as u32);
    let labels: Vec<String> = (0..n).map(|i| ["a", "b", "c", "d"][i].to_string()).collect();
    (0..total).map(move |mut code| {
        let mut table = Vec::with_capacity(cells);
        for _ in 0..cells {
            let v = (code % (n as u64 + 1)) as usize;
            code /= n as u64 + 1;
            table.push(if v == 0 { None } else { Some(v - 1) });
        }
        PartialMagma::from_table(labels.clone(), table).unwrap()
    })
}

/// Every constellation on carriers of size 1 to `max_n`.
pub fn exhaustive_constellations(max_n: usize) -> Vec<Constellation> {
    (1..=max_n)
        .flat_map(all_magmas)
        .filter_map(|m| verify_constellation(&m, None).ok())
        .collect()
}

pub fn exhaustive_categories(max_n: usize) -> Vec<Category> {
    (1..=max_n)
        .flat_map(all_magmas)
        .filter_map(|m| verify_category(&m).ok())
        .collect()
}

fn chain(labels: &[&str]) -> Constellation {
    let n = labels.len();
    let leq: Vec<(Elem, Elem)> = (0..n).flat_map(|i| (i..n).map(move |j| (i, j))).collect();
    from_quasiorder(labels.to_vec(), &leq).unwrap()
}

/// The four-element poset `s < t1`, `t2 < u`.
pub fn four_element() -> Constellation {
    from_quasiorder(
        vec!["s", "t1", "t2", "u"],
        &[(0, 0), (1, 1), (2, 2), (3, 3), (0, 1), (2, 3)],
    )
    .unwrap()
}

/// Named structures from the worked examples.
pub fn worked_examples() -> Vec<(String, Constellation)> {
    let mut out = vec![
        ("K".to_string(), k6().reduct()),
        ("K/delta1".to_string(), structure("kd1.const").to_constellation().unwrap()),
        ("K/delta2".to_string(), structure("kd2.const").to_constellation().unwrap()),
        ("S_X".to_string(), structure("sx2.const").to_category().unwrap().reduct()),
        ("S_X/gamma".to_string(), structure("sx2_gamma.const").to_constellation().unwrap()),
        ("four".to_string(), four_element()),
        ("e<f".to_string(), chain(&["e", "f"])),
        ("e<f<g".to_string(), chain(&["e", "f", "g"])),
        ("C_X n=2".to_string(), gen_cx(2).unwrap().constellation),
        ("COD_X n=2".to_string(), gen_codx(2).unwrap().category.reduct()),
    ];
    let poset = from_quasiorder(vec!["e", "f", "g"], &[(0, 0), (1, 1), (2, 2), (0, 1)]).unwrap();
    out.push(("e<f,g".to_string(), poset));
    out
}

pub fn worked_categories() -> Vec<(String, Category)> {
    vec![
        ("K".to_string(), k6()),
        ("S_X".to_string(), gen_sx(2).unwrap().category),
        ("C(K/delta1)".to_string(), canonical_extension(&structure("kd1.const").to_constellation().unwrap()).category),
    ]
}

/// Relabels and reorders `c` by a random permutation.
pub fn shuffle(c: &Constellation, rng: &mut ChaCha8Rng) -> Constellation {
    let n = c.len();
    let mut perm: Vec<Elem> = (0..n).collect();
    perm.shuffle(rng);
    // new index perm[x] holds old element x
    let mut labels = vec![String::new(); n];
    for x in 0..n {
        labels[perm[x]] = format!("x{x}");
    }
    let mut table = vec![None; n * n];
    for (a, b, p) in c.magma().products() {
        table[perm[a] * n + perm[b]] = Some(perm[p]);
    }
    let m = PartialMagma::from_table(labels, table).unwrap();
    verify_constellation(&m, None).unwrap()
}

fn random_quasiorder(rng: &mut ChaCha8Rng, n: usize) -> Constellation {
    let mut leq = vec![vec![false; n]; n];
    for (i, row) in leq.iter_mut().enumerate() {
        row[i] = true;
    }
    for i in 0..n {
        for j in 0..n {
            if i != j && rng.gen_bool(0.25) {
                leq[i][j] = true;
            }
        }
    }
    for k in 0..n {
        for i in 0..n {
            for j in 0..n {
                if leq[i][k] && leq[k][j] {
                    leq[i][j] = true;
                }
            }
        }
    }
    let labels: Vec<String> = (0..n).map(|i| format!("e{i}")).collect();
    let pairs: Vec<(Elem, Elem)> = (0..n)
        .flat_map(|i| (0..n).map(move |j| (i, j)))
        .filter(|&(i, j)| leq[i][j])
        .collect();
    from_quasiorder(labels, &pairs).unwrap()
}

/// Subconstellation of `ambient` generated by a few random elements, if it
/// has at most `max` elements.
fn random_sub(ambient: &Constellation, rng: &mut ChaCha8Rng, max: usize) -> Option<Constellation> {
    let k = rng.gen_range(1..=3);
    let seed: Vec<Elem> = (0..k).map(|_| rng.gen_range(0..ambient.len())).collect();
    let sub = generated_subconstellation(ambient, &seed).ok()?;
    if sub.len() > max {
        return None;
    }
    restrict(ambient, &sub)
}

/// Seeded source of small constellations of at most `max` elements, mixing
/// quasiorders, subconstellations of partial-function and cod-function
/// structures, and canonical extensions.
pub struct Corpus {
    rng: ChaCha8Rng,
    cx3: Constellation,
    codx2: Category,
    sx2: Category,
    max: usize,
}

impl Corpus {
    pub fn new(rng: ChaCha8Rng, max: usize) -> Self {
        Self {
            rng,
            cx3: gen_cx(3).unwrap().constellation,
            codx2: gen_codx(2).unwrap().category,
            sx2: gen_sx(2).unwrap().category,
            max,
        }
    }

    pub fn rng(&mut self) -> &mut ChaCha8Rng {
        &mut self.rng
    }

    pub fn constellation(&mut self) -> Constellation {
        loop {
            let pick = self.rng.gen_range(0..5);
            let c = match pick {
                0 => {
                    let n = self.rng.gen_range(1..=self.max);
                    Some(random_quasiorder(&mut self.rng, n))
                }
                1 => random_sub(&self.cx3, &mut self.rng, self.max),
                2 => random_sub(&self.codx2.reduct(), &mut self.rng, self.max),
                3 => random_sub(&self.sx2.reduct(), &mut self.rng, self.max),
                _ => random_sub(&self.cx3, &mut self.rng, 3)
                    .map(|p| canonical_extension(&p).category.reduct())
                    .filter(|c| c.len() <= self.max),
            };
            if let Some(c) = c {
                return shuffle(&c, &mut self.rng);
            }
        }
    }

    /// A subcategory with at most `max` elements, generated by a few random
    /// elements and their ranges.
    pub fn category(&mut self) -> Category {
        loop {
            let ambient = match self.rng.gen_range(0..3) {
                0 => self.codx2.clone(),
                1 => self.sx2.clone(),
                _ => match random_sub(&self.cx3, &mut self.rng, 3) {
                    Some(p) => canonical_extension(&p).category,
                    None => continue,
                },
            };
            let k = self.rng.gen_range(1..=3);
            let mut seed: Vec<Elem> = (0..k).map(|_| self.rng.gen_range(0..ambient.len())).collect();
            let ranges: Vec<Elem> = seed.iter().map(|&s| ambient.r(s)).collect();
            seed.extend(ranges);
            let reduct = ambient.reduct();
            let Ok(sub) = generated_subconstellation(&reduct, &seed) else { continue };
            if sub.len() > self.max {
                continue;
            }
            let c = shuffle(&restrict(&reduct, &sub).unwrap(), &mut self.rng);
            return verify_category(c.magma()).expect("closed under D, R and products");
        }
    }

    pub fn partition(&mut self, n: usize) -> Partition {
        let blocks = self.rng.gen_range(1..=n);
        let ids: Vec<usize> = (0..n).map(|_| self.rng.gen_range(0..blocks)).collect();
        Partition::from_class_ids(&ids)
    }
}
