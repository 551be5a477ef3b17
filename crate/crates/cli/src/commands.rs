use std::fmt::Write as _;
use std::path::Path;

use constellation::congruences::{
    analyze_partition, canonical_reconstruction, canonical_tilde, enumerate_canonical, enumerate_congruences,
    maximal_canonical, maximal_elements, quotient as quotient_of, CongruenceFailure,
};
use constellation::constructions::{
    adjoin_identity, canonical_extension, count_codx, count_cx, gen_codx, gen_codx_with_cap, gen_cx,
    gen_cx_with_cap, gen_sx, gen_sx_with_cap, star_extension,
};
use constellation::derived::{
    categorial_range, embeddability, incomposable_witness, normality_witness, standard_quasiorder,
};
use constellation::error::{CongruenceError, ConstructionError, FormatError, VerifyError};
use constellation::format::{parse_document, Document, StructureDocument, StructureKind};
use constellation::morphisms::{cayley_embedding, find_category_isomorphism, find_delta_isomorphism, find_isomorphism};
use constellation::{Category, Constellation, Elem, PartialMagma, Partition};

use crate::{CountFamily, Family, VerifyAs};

/// A failed run: exit status, a short machine-readable code and a message.
#[derive(Debug)]
pub struct Failure {
    pub exit: u8,
    code: &'static str,
    position: Option<(usize, usize)>,
    message: String,
}

impl Failure {
    fn new(exit: u8, code: &'static str, message: impl Into<String>) -> Self {
        Self {
            exit,
            code,
            position: None,
            message: message.into(),
        }
    }

    pub fn usage(message: impl Into<String>) -> Self {
        Self::new(2, "usage", message)
    }

    fn invalid(code: &'static str, message: impl Into<String>) -> Self {
        Self::new(1, code, message)
    }

    pub fn error_line(&self) -> String {
        let mut line = format!("error: code={}", self.code);
        if let Some((l, c)) = self.position {
            write!(line, " line={l} column={c}").unwrap();
        }
        write!(line, " message={:?}", self.message).unwrap();
        line
    }
}

impl From<FormatError> for Failure {
    fn from(e: FormatError) -> Self {
        Self {
            exit: 2,
            code: "parse",
            position: Some((e.line, e.column)),
            message: e.message,
        }
    }
}

impl From<VerifyError> for Failure {
    fn from(e: VerifyError) -> Self {
        Self::invalid("invalid-structure", e.to_string())
    }
}

impl From<ConstructionError> for Failure {
    fn from(e: ConstructionError) -> Self {
        match e {
            ConstructionError::Cat1Violated { .. } => Self::invalid("cat1", e.to_string()),
            ConstructionError::SizeCap { .. } => Self::new(2, "size-cap", e.to_string()),
            _ => Self::usage(e.to_string()),
        }
    }
}

impl From<CongruenceError> for Failure {
    fn from(e: CongruenceError) -> Self {
        match e {
            CongruenceError::Verify(v) => v.into(),
            CongruenceError::SizeCap { .. } => Self::new(2, "size-cap", e.to_string()),
            CongruenceError::BadPartition(_) => Self::new(2, "bad-partition", e.to_string()),
            CongruenceError::NotACongruence => Self::invalid("not-a-congruence", e.to_string()),
            CongruenceError::NotCanonical => Self::invalid("not-canonical", e.to_string()),
            CongruenceError::NotComposable(_) => Self::invalid("not-composable", e.to_string()),
            _ => Self::invalid("congruence", e.to_string()),
        }
    }
}

fn load(path: &Path) -> Result<Document, Failure> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Failure::new(2, "io", format!("cannot read {}: {e}", path.display())))?;
    Ok(parse_document(&text)?)
}

fn load_structure(path: &Path) -> Result<StructureDocument, Failure> {
    match load(path)? {
        Document::Structure(s) => Ok(s),
        Document::Partition(_) => Err(Failure::usage(format!(
            "{} is a partition document, expected a structure",
            path.display()
        ))),
    }
}

fn is_categorical(doc: &StructureDocument) -> bool {
    matches!(doc.kind, StructureKind::Category | StructureKind::DeltaCategory)
}

/// Categories are taken through their `D`-reduct.
fn constellation_of(doc: &StructureDocument) -> Result<Constellation, Failure> {
    if is_categorical(doc) {
        Ok(doc.to_category()?.reduct())
    } else {
        Ok(doc.to_constellation()?)
    }
}

fn emit_or_print(doc: &StructureDocument, emit: Option<&Path>, out: &mut String) -> Result<(), Failure> {
    let text = doc.serialize();
    match emit {
        Some(path) => {
            std::fs::write(path, &text)
                .map_err(|e| Failure::new(2, "io", format!("cannot write {}: {e}", path.display())))?;
            writeln!(out, "wrote {} ({} elements)", path.display(), doc.magma.len()).unwrap();
        }
        None => out.push_str(&text),
    }
    Ok(())
}

fn labels(m: &PartialMagma, xs: impl IntoIterator<Item = Elem>) -> Vec<&str> {
    xs.into_iter().map(|x| m.label(x)).collect()
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn write_map(out: &mut String, name: &str, m: &PartialMagma, map: &[Elem], target: &PartialMagma) {
    writeln!(out, "{name}:").unwrap();
    for (x, &y) in map.iter().enumerate() {
        writeln!(out, "  {} -> {}", m.label(x), target.label(y)).unwrap();
    }
}

pub fn verify(path: &Path, as_kind: VerifyAs, out: &mut String) -> Result<(), Failure> {
    let doc = load_structure(path)?;
    let m = &doc.magma;
    let as_category = match as_kind {
        VerifyAs::Auto => is_categorical(&doc),
        VerifyAs::Category => true,
        VerifyAs::Constellation => false,
    };
    writeln!(out, "name: {}", doc.name).unwrap();
    writeln!(out, "elements: {}", m.len()).unwrap();
    writeln!(out, "checked as: {}", if as_category { "category" } else { "constellation" }).unwrap();
    let result = if as_category {
        doc.to_category().map(|k| (k.domain_map().to_vec(), Some(k)))
    } else {
        doc.to_constellation().map(|c| (c.domain_map().to_vec(), None))
    };
    let (domain, category) = match result {
        Ok(v) => v,
        Err(e) => {
            writeln!(out, "valid: no").unwrap();
            match e.report() {
                Some(report) => {
                    for v in &report.violations {
                        writeln!(
                            out,
                            "violation: {} at ({}) [{} witnesses]",
                            v.axiom,
                            v.witness_labels.join(", "),
                            v.count
                        )
                        .unwrap();
                    }
                }
                None => writeln!(out, "violation: {e}").unwrap(),
            }
            return Err(e.into());
        }
    };
    writeln!(out, "valid: yes").unwrap();
    writeln!(out, "D:").unwrap();
    for (x, &e) in domain.iter().enumerate() {
        writeln!(out, "  {} -> {}", m.label(x), m.label(e)).unwrap();
    }
    if let Some(k) = &category {
        writeln!(out, "R:").unwrap();
        for (x, &f) in k.range_map().iter().enumerate() {
            writeln!(out, "  {} -> {}", m.label(x), m.label(f)).unwrap();
        }
        if doc.kind == StructureKind::DeltaCategory && as_kind != VerifyAs::Constellation {
            let delta = doc.partition.as_ref().expect("delta-category documents carry a partition");
            let canonical = analyze_partition(&k.reduct(), delta).canonical;
            writeln!(out, "delta: {}", delta.render(m)).unwrap();
            writeln!(out, "delta canonical: {}", yes_no(canonical)).unwrap();
            if !canonical {
                return Err(Failure::invalid("not-canonical", "partition is not a canonical congruence"));
            }
        }
    }
    Ok(())
}

pub fn derive(path: &Path, out: &mut String) -> Result<(), Failure> {
    let doc = load_structure(path)?;
    let c = constellation_of(&doc)?;
    let m = c.magma();
    writeln!(out, "projections: {}", labels(m, c.projections().iter().copied()).join(" ")).unwrap();
    writeln!(out, "right projections:").unwrap();
    for s in 0..c.len() {
        writeln!(out, "  {}: {}", m.label(s), labels(m, c.right_projections(s)).join(" ")).unwrap();
    }
    let q = standard_quasiorder(&c);
    let pairs: Vec<String> = q
        .strict_pairs()
        .map(|(e, f)| format!("{} <= {}", m.label(e), m.label(f)))
        .collect();
    writeln!(out, "quasiorder (strict pairs): {}", pairs.join(", ")).unwrap();
    match normality_witness(&c) {
        None => writeln!(out, "normal: yes").unwrap(),
        Some((e, f)) => writeln!(out, "normal: no ({} <= {} <= {})", m.label(e), m.label(f), m.label(e)).unwrap(),
    }
    match incomposable_witness(&c) {
        None => writeln!(out, "composable: yes").unwrap(),
        Some(x) => writeln!(out, "composable: no ({})", m.label(x)).unwrap(),
    }
    match categorial_range(&c) {
        Some(r) => {
            let pairs: Vec<String> = (0..c.len()).map(|x| format!("{}->{}", m.label(x), m.label(r[x]))).collect();
            writeln!(out, "categorial: yes (R: {})", pairs.join(" ")).unwrap();
        }
        None => writeln!(out, "categorial: no").unwrap(),
    }
    let emb = embeddability(&c);
    match (emb.cat1_witness, emb.multiple_projections) {
        (None, None) => writeln!(out, "embeddable in a category: yes").unwrap(),
        (Some((x, y, z)), _) => writeln!(
            out,
            "embeddable in a category: no ((Cat1) fails at ({}, {}, {}))",
            m.label(x),
            m.label(y),
            m.label(z)
        )
        .unwrap(),
        (None, Some((s, e, f))) => writeln!(
            out,
            "embeddable in a category: no ({} composes with projections {} and {})",
            m.label(s),
            m.label(e),
            m.label(f)
        )
        .unwrap(),
    }
    Ok(())
}

#[derive(Clone, Copy, Debug)]
pub enum Extend {
    One,
    Star,
    Canonical,
}

pub fn extend(path: &Path, kind: Extend, emit: Option<&Path>, out: &mut String) -> Result<(), Failure> {
    let doc = load_structure(path)?;
    let c = constellation_of(&doc)?;
    let result = match kind {
        Extend::One => StructureDocument::from_constellation(format!("{}^1", doc.name), &adjoin_identity(&c).constellation),
        Extend::Star => StructureDocument::from_constellation(format!("{}*", doc.name), &star_extension(&c)?.constellation),
        Extend::Canonical => StructureDocument::from_category(format!("C({})", doc.name), &canonical_extension(&c).category),
    };
    emit_or_print(&result, emit, out)
}

fn render_congruence_failure(m: &PartialMagma, f: CongruenceFailure) -> String {
    match f {
        CongruenceFailure::Product { s1, t1, s2, t2 } => format!(
            "{} . {} and {} . {} land in different classes",
            m.label(s1),
            m.label(t1),
            m.label(s2),
            m.label(t2)
        ),
        CongruenceFailure::Domain { s1, s2 } => {
            format!("{} and {} are related but their domains are not", m.label(s1), m.label(s2))
        }
    }
}

pub fn quotient(path: &Path, partition: &Path, emit: Option<&Path>, out: &mut String) -> Result<(), Failure> {
    let doc = load_structure(path)?;
    let c = constellation_of(&doc)?;
    let m = c.magma();
    let pdoc = match load(partition)? {
        Document::Partition(p) => p,
        Document::Structure(_) => {
            return Err(Failure::usage(format!("{} is not a partition document", partition.display())))
        }
    };
    if let Some(s) = &pdoc.structure {
        if s != &doc.name {
            return Err(Failure::new(
                2,
                "bad-partition",
                format!("partition refers to structure `{s}`, not `{}`", doc.name),
            ));
        }
    }
    let part = pdoc
        .resolve(m)
        .map_err(|e| Failure::new(2, "bad-partition", e.to_string()))?;
    let r = analyze_partition(&c, &part);
    writeln!(out, "partition: {}", part.render(m)).unwrap();
    writeln!(out, "congruence: {}", yes_no(r.congruence)).unwrap();
    if let Some(f) = r.congruence_failure {
        writeln!(out, "  {}", render_congruence_failure(m, f)).unwrap();
        return Err(Failure::invalid("not-a-congruence", "partition is not a congruence"));
    }
    writeln!(out, "strong: {}", yes_no(r.strong)).unwrap();
    if let Some((s1, t1, s2, t2)) = r.strong_failure {
        writeln!(
            out,
            "  {} . {} is defined, {} . {} is not",
            m.label(s1),
            m.label(t1),
            m.label(s2),
            m.label(t2)
        )
        .unwrap();
    }
    writeln!(out, "right strong: {}", yes_no(r.right_strong)).unwrap();
    if let Some((s, t, t1)) = r.right_strong_failure {
        writeln!(
            out,
            "  {} . {} is defined, no class-mate of {} composes with {}",
            m.label(s),
            m.label(t),
            m.label(s),
            m.label(t1)
        )
        .unwrap();
    }
    writeln!(out, "projection separating: {}", yes_no(r.projection_separating)).unwrap();
    if let Some((e, f)) = r.separation_failure {
        writeln!(out, "  projections {} and {} are related", m.label(e), m.label(f)).unwrap();
    }
    writeln!(out, "canonical: {}", yes_no(r.canonical)).unwrap();
    if let (Some((a, b, e)), true) = (r.canonical_failure, r.projection_separating) {
        writeln!(out, "  {} and {} both compose with {}", m.label(a), m.label(b), m.label(e)).unwrap();
    }
    let q = quotient_of(&c, &part)?;
    let name = format!("{}/{}", doc.name, pdoc.name);
    let qdoc = match &q.outcome {
        Ok(qc) => {
            writeln!(out, "quotient: constellation ({} elements)", qc.len()).unwrap();
            StructureDocument::from_constellation(name, qc)
        }
        Err(e) => {
            writeln!(out, "quotient: not a constellation: {e}").unwrap();
            StructureDocument::from_magma(name, &q.magma)
        }
    };
    emit_or_print(&qdoc, emit, out)
}

pub fn congruences(path: &Path, canonical: bool, maximal: bool, limit: usize, out: &mut String) -> Result<(), Failure> {
    let doc = load_structure(path)?;
    let c = constellation_of(&doc)?;
    let m = c.magma();
    let list = if canonical {
        match enumerate_canonical(&c, limit) {
            Ok(list) => list,
            Err(CongruenceError::SizeCap { size, limit }) if maximal => {
                let greedy = maximal_canonical(&c, limit).greedy;
                writeln!(out, "enumeration skipped: {size} elements exceed the limit {limit}").unwrap();
                writeln!(out, "greedy maximal canonical congruence:").unwrap();
                writeln!(out, "{}", greedy.render(m)).unwrap();
                return Ok(());
            }
            Err(e) => return Err(e.into()),
        }
    } else {
        enumerate_congruences(&c, limit)?
    };
    let list = if maximal { maximal_elements(&list) } else { list };
    let mut title = Vec::new();
    if maximal {
        title.push("maximal");
    }
    if canonical {
        title.push("canonical");
    }
    title.push("congruences");
    writeln!(out, "{}: {}", title.join(" "), list.len()).unwrap();
    for part in &list {
        writeln!(out, "{}", part.render(m)).unwrap();
    }
    Ok(())
}

pub fn cayley(path: &Path, out: &mut String) -> Result<(), Failure> {
    let doc = load_structure(path)?;
    let c = constellation_of(&doc)?;
    let m = c.magma();
    let emb = cayley_embedding(&c);
    let normal = normality_witness(&c).is_none();
    writeln!(out, "normal: {}", yes_no(normal)).unwrap();
    writeln!(out, "radiant: {}", yes_no(emb.radiant)).unwrap();
    writeln!(out, "strong: {}", yes_no(emb.strong)).unwrap();
    writeln!(out, "injective: {}", yes_no(emb.injective)).unwrap();
    writeln!(out, "embedding: {}", yes_no(emb.embedding())).unwrap();
    if let Some((s, t)) = emb.collision {
        writeln!(out, "collision: {} and {} act identically", m.label(s), m.label(t)).unwrap();
    }
    if let Some((e, f)) = normality_witness(&c) {
        writeln!(out, "normality witness: {} . {} and {} . {} both defined", m.label(e), m.label(f), m.label(f), m.label(e))
            .unwrap();
    }
    writeln!(out, "right translations:").unwrap();
    for (s, f) in emb.functions.iter().enumerate() {
        let graph: Vec<String> = f
            .graph()
            .into_iter()
            .map(|(x, y)| format!("{}->{}", m.label(x), m.label(y)))
            .collect();
        writeln!(out, "  {}: {{{}}}", m.label(s), graph.join(", ")).unwrap();
    }
    Ok(())
}

fn delta_of(path: &Path) -> Result<(StructureDocument, Category, Partition), Failure> {
    let doc = load_structure(path)?;
    if doc.kind != StructureKind::DeltaCategory {
        return Err(Failure::usage(format!("{} is not a delta-category document", path.display())));
    }
    let dk = doc.to_delta_category()?;
    Ok((doc, dk.category, dk.delta))
}

pub fn iso(first: &Path, second: &Path, delta: bool, out: &mut String) -> Result<(), Failure> {
    let (a, b, found) = if delta {
        let (da, ka, pa) = delta_of(first)?;
        let (db, kb, pb) = delta_of(second)?;
        let found = if ka.len() == kb.len() {
            find_delta_isomorphism(&ka, &pa, &kb, &pb).expect("sizes match")
        } else {
            None
        };
        (da, db, found)
    } else {
        let da = load_structure(first)?;
        let db = load_structure(second)?;
        let found = if da.magma.len() != db.magma.len() {
            None
        } else if is_categorical(&da) && is_categorical(&db) {
            find_category_isomorphism(&da.to_category()?, &db.to_category()?).expect("sizes match")
        } else {
            find_isomorphism(&constellation_of(&da)?, &constellation_of(&db)?).expect("sizes match")
        };
        (da, db, found)
    };
    match found {
        Some(map) => {
            writeln!(out, "Isomorphic").unwrap();
            write_map(out, "map", &a.magma, &map, &b.magma);
        }
        None => writeln!(out, "NotIsomorphic").unwrap(),
    }
    Ok(())
}

pub fn generate(family: Family, n: usize, cap: Option<usize>, emit: Option<&Path>, out: &mut String) -> Result<(), Failure> {
    let doc = match family {
        Family::Cx => {
            let g = match cap {
                Some(cap) => gen_cx_with_cap(n, cap)?,
                None => gen_cx(n)?,
            };
            StructureDocument::from_constellation(format!("cx{n}"), &g.constellation)
        }
        Family::Codx => {
            let g = match cap {
                Some(cap) => gen_codx_with_cap(n, cap)?,
                None => gen_codx(n)?,
            };
            StructureDocument::from_category(format!("codx{n}"), &g.category)
        }
        Family::Sx => {
            let g = match cap {
                Some(cap) => gen_sx_with_cap(n, cap)?,
                None => gen_sx(n)?,
            };
            StructureDocument::from_category(format!("sx{n}"), &g.category)
        }
    };
    emit_or_print(&doc, emit, out)
}

pub fn count(family: CountFamily, n: usize, out: &mut String) -> Result<(), Failure> {
    let value = match family {
        CountFamily::Cx => count_cx(n)?,
        CountFamily::Codx => count_codx(n)?,
    };
    writeln!(out, "{value}").unwrap();
    Ok(())
}

pub fn roundtrip(path: &Path, out: &mut String) -> Result<(), Failure> {
    let doc = load_structure(path)?;
    if doc.kind == StructureKind::DeltaCategory {
        let dk = doc.to_delta_category()?;
        let r = canonical_reconstruction(&dk.category, &dk.delta)?;
        writeln!(out, "K/delta: {} elements", r.quotient.len()).unwrap();
        writeln!(out, "C(K/delta): {} elements", r.extension.len()).unwrap();
        write_map(out, "s -> ([s], [R(s)])", dk.category.magma(), &r.witness.map, r.extension.category.magma());
        writeln!(out, "category isomorphism: {}", yes_no(r.category_isomorphism())).unwrap();
        writeln!(out, "delta matches ~: {}", yes_no(r.delta_isomorphism)).unwrap();
        if r.category_isomorphism() && r.delta_isomorphism {
            writeln!(out, "roundtrip: ok").unwrap();
            return Ok(());
        }
        return Err(Failure::invalid("roundtrip-failed", "(K, delta) is not recovered from C(K/delta)"));
    }
    let c = constellation_of(&doc)?;
    let (cp, tilde) = canonical_tilde(&c)?;
    let q = quotient_of(&cp.category.reduct(), &tilde)?;
    let qc = q
        .outcome
        .map_err(|e| Failure::invalid("roundtrip-failed", format!("C(P)/~ is not a constellation: {e}")))?;
    writeln!(out, "C(P): {} elements", cp.len()).unwrap();
    writeln!(out, "C(P)/~: {} elements", qc.len()).unwrap();
    let found = if qc.len() == c.len() {
        find_isomorphism(&c, &qc).expect("sizes match")
    } else {
        None
    };
    match found {
        Some(map) => {
            write_map(out, "P -> C(P)/~", c.magma(), &map, qc.magma());
            writeln!(out, "roundtrip: ok").unwrap();
            Ok(())
        }
        None => Err(Failure::invalid("roundtrip-failed", "C(P)/~ is not isomorphic to P")),
    }
}
