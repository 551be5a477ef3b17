//! Line-oriented text format for structures and partitions.
//!
//! ```text
//! # the two-element chain
//! kind: constellation
//! name: chain
//! elements: e f
//! product:
//!   e . e = e
//!   e . f = e
//!   f . f = f
//! domain:
//!   e -> e
//!   f -> f
//! ```
//!
//! A header is `keyword:` at the start of a line; anything after the colon
//! belongs to that section, as do the lines that follow it. Labels are bare
//! words or double-quoted strings with `\"`, `\\`, `\n` and `\t` escapes.
//! Undefined products are left out, and the bare word `undefined` is
//! rejected. A delta-category carries a `partition:` section; a partition
//! document has `kind: partition` and may name its `structure:`.

use std::collections::HashMap;
use std::fmt::Write as _;

use crate::axioms::{verify_category, verify_constellation};
use crate::congruences::DeltaCategory;
use crate::error::{CongruenceError, FormatError, FormatErrorKind, VerifyError};
use crate::magma::{Elem, PartialMagma};
use crate::partition::{Partition, PartitionError};
use crate::structure::{Category, Constellation};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum StructureKind {
    Magma,
    Constellation,
    Category,
    DeltaCategory,
}

impl StructureKind {
    pub fn keyword(self) -> &'static str {
        match self {
            StructureKind::Magma => "magma",
            StructureKind::Constellation => "constellation",
            StructureKind::Category => "category",
            StructureKind::DeltaCategory => "delta-category",
        }
    }

    fn from_keyword(s: &str) -> Option<Self> {
        match s {
            "magma" => Some(StructureKind::Magma),
            "constellation" => Some(StructureKind::Constellation),
            "category" => Some(StructureKind::Category),
            "delta-category" => Some(StructureKind::DeltaCategory),
            _ => None,
        }
    }
}

/// A table with optional `D` entries and, for delta-categories, a partition.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StructureDocument {
    pub kind: StructureKind,
    pub name: String,
    pub magma: PartialMagma,
    /// `D` entries written in the document; `None` where left to the table.
    pub domain: Vec<Option<Elem>>,
    pub partition: Option<Partition>,
}

/// Blocks of labels, resolved against a structure when loaded.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PartitionDocument {
    pub name: String,
    pub structure: Option<String>,
    pub blocks: Vec<Vec<String>>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Document {
    Structure(StructureDocument),
    Partition(PartitionDocument),
}

impl StructureDocument {
    pub fn from_magma(name: impl Into<String>, m: &PartialMagma) -> Self {
        Self {
            kind: StructureKind::Magma,
            name: name.into(),
            magma: m.clone(),
            domain: vec![None; m.len()],
            partition: None,
        }
    }

    pub fn from_constellation(name: impl Into<String>, c: &Constellation) -> Self {
        Self {
            kind: StructureKind::Constellation,
            name: name.into(),
            magma: c.magma().clone(),
            domain: c.domain_map().iter().map(|&e| Some(e)).collect(),
            partition: None,
        }
    }

    pub fn from_category(name: impl Into<String>, k: &Category) -> Self {
        Self {
            kind: StructureKind::Category,
            name: name.into(),
            magma: k.magma().clone(),
            domain: k.domain_map().iter().map(|&e| Some(e)).collect(),
            partition: None,
        }
    }

    pub fn from_delta(name: impl Into<String>, dk: &DeltaCategory) -> Self {
        Self {
            kind: StructureKind::DeltaCategory,
            partition: Some(dk.delta.clone()),
            ..Self::from_category(name, &dk.category)
        }
    }

    /// Checks the constellation axioms. Written `D` entries must agree with
    /// the ones the table forces.
    pub fn to_constellation(&self) -> Result<Constellation, VerifyError> {
        if let Some(d) = self.domain.iter().copied().collect::<Option<Vec<Elem>>>() {
            return verify_constellation(&self.magma, Some(&d));
        }
        let c = verify_constellation(&self.magma, None)?;
        self.check_domain(c.domain_map())?;
        Ok(c)
    }

    pub fn to_category(&self) -> Result<Category, VerifyError> {
        let k = verify_category(&self.magma)?;
        self.check_domain(k.domain_map())?;
        Ok(k)
    }

    pub fn to_delta_category(&self) -> Result<DeltaCategory, CongruenceError> {
        let k = self.to_category().map_err(CongruenceError::Verify)?;
        let delta = self
            .partition
            .clone()
            .ok_or_else(|| CongruenceError::BadPartition("document has no partition".into()))?;
        DeltaCategory::new(k, delta)
    }

    fn check_domain(&self, derived: &[Elem]) -> Result<(), VerifyError> {
        let m = &self.magma;
        for (x, entry) in self.domain.iter().enumerate() {
            if let Some(e) = *entry {
                if e != derived[x] {
                    return Err(VerifyError::DomainMismatch {
                        element: x,
                        label: m.label(x).to_string(),
                        supplied: e,
                        supplied_label: m.label(e).to_string(),
                        derived: derived[x],
                        derived_label: m.label(derived[x]).to_string(),
                    });
                }
            }
        }
        Ok(())
    }

    /// Elements in carrier order, products row by row, `D` entries in
    /// carrier order.
    pub fn serialize(&self) -> String {
        let m = &self.magma;
        let mut out = String::new();
        writeln!(out, "kind: {}", self.kind.keyword()).unwrap();
        writeln!(out, "name: {}", quote(&self.name)).unwrap();
        let labels: Vec<String> = m.labels().iter().map(|l| quote(l)).collect();
        writeln!(out, "elements: {}", labels.join(" ")).unwrap();
        if m.product_count() > 0 {
            out.push_str("product:\n");
            for (a, b, c) in m.products() {
                writeln!(out, "  {} . {} = {}", labels[a], labels[b], labels[c]).unwrap();
            }
        }
        if self.domain.iter().any(Option::is_some) {
            out.push_str("domain:\n");
            for (x, e) in self.domain.iter().enumerate() {
                if let Some(e) = e {
                    writeln!(out, "  {} -> {}", labels[x], labels[*e]).unwrap();
                }
            }
        }
        if let Some(part) = &self.partition {
            let blocks: Vec<Vec<String>> = part
                .blocks()
                .iter()
                .map(|b| b.iter().map(|&x| m.label(x).to_string()).collect())
                .collect();
            write_blocks(&mut out, &blocks);
        }
        out
    }
}

impl PartitionDocument {
    pub fn from_partition(name: impl Into<String>, structure: Option<String>, part: &Partition, m: &PartialMagma) -> Self {
        Self {
            name: name.into(),
            structure,
            blocks: part
                .blocks()
                .iter()
                .map(|b| b.iter().map(|&x| m.label(x).to_string()).collect())
                .collect(),
        }
    }

    /// Resolves labels against `m`; blocks must be disjoint and cover it.
    pub fn resolve(&self, m: &PartialMagma) -> Result<Partition, PartitionError> {
        Partition::from_labels(m, &self.blocks)
    }

    pub fn serialize(&self) -> String {
        let mut out = String::new();
        out.push_str("kind: partition\n");
        writeln!(out, "name: {}", quote(&self.name)).unwrap();
        if let Some(s) = &self.structure {
            writeln!(out, "structure: {}", quote(s)).unwrap();
        }
        write_blocks(&mut out, &self.blocks);
        out
    }
}

impl Document {
    pub fn serialize(&self) -> String {
        match self {
            Document::Structure(s) => s.serialize(),
            Document::Partition(p) => p.serialize(),
        }
    }
}

fn write_blocks(out: &mut String, blocks: &[Vec<String>]) {
    let rendered: Vec<String> = blocks
        .iter()
        .map(|b| format!("{{{}}}", b.iter().map(|l| quote(l)).collect::<Vec<_>>().join(" ")))
        .collect();
    writeln!(out, "partition:\n  {}", rendered.join(" ")).unwrap();
}

const RESERVED: &str = "undefined";

fn is_bare_char(c: char) -> bool {
    !c.is_whitespace() && !matches!(c, '#' | '"' | '{' | '}' | '.' | '=' | ':' | '>')
}

/// A label as it is written: bare when possible, quoted otherwise.
pub fn quote(label: &str) -> String {
    if !label.is_empty() && label != RESERVED && !label.contains("->") && label.chars().all(is_bare_char) {
        return label.to_string();
    }
    let mut out = String::with_capacity(label.len() + 2);
    out.push('"');
    for c in label.chars() {
        match c {
            '"' => out.push_str("\\\""),
            '\\' => out.push_str("\\\\"),
            '\n' => out.push_str("\\n"),
            '\t' => out.push_str("\\t"),
            c => out.push(c),
        }
    }
    out.push('"');
    out
}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Tok {
    Word { text: String, quoted: bool },
    Dot,
    Eq,
    Arrow,
    Colon,
    Open,
    Close,
}

#[derive(Clone, Debug)]
struct Token {
    tok: Tok,
    line: usize,
    column: usize,
}

fn syntax(line: usize, column: usize, message: impl Into<String>) -> FormatError {
    FormatError {
        line,
        column,
        kind: FormatErrorKind::Syntax,
        message: message.into(),
    }
}

fn semantic(line: usize, column: usize, message: impl Into<String>) -> FormatError {
    FormatError {
        line,
        column,
        kind: FormatErrorKind::Semantic,
        message: message.into(),
    }
}

fn lex_line(text: &str, line: usize) -> Result<Vec<Token>, FormatError> {
    let chars: Vec<char> = text.chars().collect();
    let mut tokens = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        let column = i + 1;
        let simple = match c {
            '#' => break,
            c if c.is_whitespace() => {
                i += 1;
                continue;
            }
            '.' => Some(Tok::Dot),
            '=' => Some(Tok::Eq),
            ':' => Some(Tok::Colon),
            '{' => Some(Tok::Open),
            '}' => Some(Tok::Close),
            '-' if chars.get(i + 1) == Some(&'>') => {
                i += 1;
                Some(Tok::Arrow)
            }
            '>' => return Err(syntax(line, column, "unexpected `>`; quote labels containing it")),
            _ => None,
        };
        if let Some(tok) = simple {
            tokens.push(Token { tok, line, column });
            i += 1;
            continue;
        }
        let mut word = String::new();
        if c == '"' {
            i += 1;
            loop {
                match chars.get(i) {
                    None => return Err(syntax(line, column, "unterminated quoted label")),
                    Some('"') => break,
                    Some('\\') => {
                        let escaped = match chars.get(i + 1) {
                            Some('"') => '"',
                            Some('\\') => '\\',
                            Some('n') => '\n',
                            Some('t') => '\t',
                            _ => return Err(syntax(line, i + 1, "unknown escape in quoted label")),
                        };
                        word.push(escaped);
                        i += 2;
                    }
                    Some(&ch) => {
                        word.push(ch);
                        i += 1;
                    }
                }
            }
            i += 1;
            if word.is_empty() {
                return Err(syntax(line, column, "empty label"));
            }
            tokens.push(Token {
                tok: Tok::Word { text: word, quoted: true },
                line,
                column,
            });
        } else {
            while i < chars.len() && is_bare_char(chars[i]) && !(chars[i] == '-' && chars.get(i + 1) == Some(&'>')) {
                word.push(chars[i]);
                i += 1;
            }
            if word == RESERVED {
                return Err(semantic(
                    line,
                    column,
                    "`undefined` is not allowed; leave undefined products out",
                ));
            }
            tokens.push(Token {
                tok: Tok::Word { text: word, quoted: false },
                line,
                column,
            });
        }
    }
    Ok(tokens)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
enum Section {
    Kind,
    Name,
    Structure,
    Elements,
    Product,
    Domain,
    Partition,
}

impl Section {
    fn from_keyword(s: &str) -> Option<Self> {
        match s {
            "kind" => Some(Section::Kind),
            "name" => Some(Section::Name),
            "structure" => Some(Section::Structure),
            "elements" => Some(Section::Elements),
            "product" => Some(Section::Product),
            "domain" => Some(Section::Domain),
            "partition" => Some(Section::Partition),
            _ => None,
        }
    }

    fn keyword(self) -> &'static str {
        match self {
            Section::Kind => "kind",
            Section::Name => "name",
            Section::Structure => "structure",
            Section::Elements => "elements",
            Section::Product => "product",
            Section::Domain => "domain",
            Section::Partition => "partition",
        }
    }
}

type Word = (String, usize, usize);

#[derive(Default)]
struct Raw {
    headers: HashMap<Section, (usize, usize)>,
    kind: Option<Word>,
    name: Option<Word>,
    structure: Option<Word>,
    elements: Vec<Word>,
    products: Vec<[Word; 3]>,
    domain: Vec<[Word; 2]>,
    blocks: Vec<(Vec<Word>, usize, usize)>,
}

fn word(t: &Token) -> Option<Word> {
    match &t.tok {
        Tok::Word { text, .. } => Some((text.clone(), t.line, t.column)),
        _ => None,
    }
}

fn describe(t: &Token) -> String {
    match &t.tok {
        Tok::Word { text, quoted: true } => format!("label {}", quote(text)),
        Tok::Word { text, .. } => format!("label `{text}`"),
        Tok::Dot => "`.`".into(),
        Tok::Eq => "`=`".into(),
        Tok::Arrow => "`->`".into(),
        Tok::Colon => "`:`".into(),
        Tok::Open => "`{`".into(),
        Tok::Close => "`}`".into(),
    }
}

fn expect_shape<'a>(tokens: &'a [Token], shape: &[Option<Tok>], what: &str, line: usize, end: usize) -> Result<Vec<&'a Token>, FormatError> {
    let mut words = Vec::new();
    for (i, want) in shape.iter().enumerate() {
        let Some(t) = tokens.get(i) else {
            return Err(syntax(line, end, format!("incomplete {what}")));
        };
        let ok = match want {
            None => matches!(t.tok, Tok::Word { .. }),
            Some(tok) => &t.tok == tok,
        };
        if !ok {
            return Err(syntax(t.line, t.column, format!("unexpected {} in {what}", describe(t))));
        }
        if want.is_none() {
            words.push(t);
        }
    }
    if let Some(t) = tokens.get(shape.len()) {
        return Err(syntax(t.line, t.column, format!("unexpected {} after {what}", describe(t))));
    }
    Ok(words)
}

fn read_entries(raw: &mut Raw, section: Section, tokens: &[Token], line: usize, end: usize) -> Result<(), FormatError> {
    match section {
        Section::Kind | Section::Name | Section::Structure => {
            let w = expect_shape(tokens, &[None], section.keyword(), line, end)?;
            let value = word(w[0]);
            match section {
                Section::Kind => raw.kind = value,
                Section::Name => raw.name = value,
                _ => raw.structure = value,
            }
        }
        Section::Elements => {
            for t in tokens {
                raw.elements
                    .push(word(t).ok_or_else(|| syntax(t.line, t.column, format!("unexpected {} in element list", describe(t))))?);
            }
        }
        Section::Product => {
            let w = expect_shape(tokens, &[None, Some(Tok::Dot), None, Some(Tok::Eq), None], "product `a . b = c`", line, end)?;
            raw.products.push([word(w[0]).unwrap(), word(w[1]).unwrap(), word(w[2]).unwrap()]);
        }
        Section::Domain => {
            let w = expect_shape(tokens, &[None, Some(Tok::Arrow), None], "domain entry `a -> e`", line, end)?;
            raw.domain.push([word(w[0]).unwrap(), word(w[1]).unwrap()]);
        }
        Section::Partition => {
            let mut i = 0;
            while i < tokens.len() {
                let open = &tokens[i];
                if open.tok != Tok::Open {
                    return Err(syntax(open.line, open.column, format!("expected `{{`, found {}", describe(open))));
                }
                i += 1;
                let mut block = Vec::new();
                loop {
                    let Some(t) = tokens.get(i) else {
                        return Err(syntax(line, end, "unclosed block"));
                    };
                    i += 1;
                    match &t.tok {
                        Tok::Close => break,
                        Tok::Word { .. } => block.push(word(t).unwrap()),
                        _ => return Err(syntax(t.line, t.column, format!("unexpected {} in block", describe(t)))),
                    }
                }
                if block.is_empty() {
                    return Err(semantic(open.line, open.column, "empty block"));
                }
                raw.blocks.push((block, open.line, open.column));
            }
        }
    }
    Ok(())
}

fn read_raw(text: &str) -> Result<Raw, FormatError> {
    let mut raw = Raw::default();
    let mut current: Option<Section> = None;
    let mut last_line = 0;
    for (idx, line_text) in text.lines().enumerate() {
        let line = idx + 1;
        last_line = line;
        let tokens = lex_line(line_text, line)?;
        let end = line_text.chars().count() + 1;
        let Some(first) = tokens.first() else { continue };
        let header = match (&first.tok, tokens.get(1).map(|t| &t.tok)) {
            (Tok::Word { text, quoted: false }, Some(Tok::Colon)) => Section::from_keyword(text),
            _ => None,
        };
        let body = match header {
            Some(section) => {
                if raw.headers.insert(section, (line, first.column)).is_some() {
                    return Err(syntax(line, first.column, format!("`{}:` appears twice", section.keyword())));
                }
                current = Some(section);
                &tokens[2..]
            }
            None => {
                if let (Tok::Word { text, quoted: false }, Some(Tok::Colon)) = (&first.tok, tokens.get(1).map(|t| &t.tok)) {
                    return Err(syntax(line, first.column, format!("unknown header `{text}:`")));
                }
                &tokens[..]
            }
        };
        match current {
            Some(section @ (Section::Kind | Section::Name | Section::Structure)) => {
                if header.is_none() {
                    return Err(syntax(first.line, first.column, format!("`{}:` takes a single value on its own line", section.keyword())));
                }
                read_entries(&mut raw, section, body, line, end)?;
            }
            Some(section) => {
                if !body.is_empty() {
                    read_entries(&mut raw, section, body, line, end)?;
                }
            }
            None => return Err(syntax(line, first.column, "entry before any header")),
        }
    }
    if raw.kind.is_none() {
        return Err(syntax(last_line.max(1), 1, "missing `kind:` header"));
    }
    if raw.name.is_none() {
        return Err(syntax(last_line.max(1), 1, "missing `name:` header"));
    }
    Ok(raw)
}

fn reject_section(raw: &Raw, section: Section, kind: &str) -> Result<(), FormatError> {
    match raw.headers.get(&section) {
        Some(&(line, column)) => Err(semantic(
            line,
            column,
            format!("`{}:` is not allowed in a {kind} document", section.keyword()),
        )),
        None => Ok(()),
    }
}

fn resolve(index: &HashMap<&str, Elem>, w: &Word) -> Result<Elem, FormatError> {
    index
        .get(w.0.as_str())
        .copied()
        .ok_or_else(|| semantic(w.1, w.2, format!("unknown element {}", quote(&w.0))))
}

/// Parses either kind of document.
pub fn parse_document(text: &str) -> Result<Document, FormatError> {
    let raw = read_raw(text)?;
    let (kind_text, kl, kc) = raw.kind.clone().unwrap();
    let name = raw.name.clone().unwrap().0;
    if kind_text == "partition" {
        for s in [Section::Elements, Section::Product, Section::Domain] {
            reject_section(&raw, s, "partition")?;
        }
        let Some(&(line, column)) = raw.headers.get(&Section::Partition) else {
            return Err(syntax(kl, 1, "missing `partition:` section"));
        };
        if raw.blocks.is_empty() {
            return Err(semantic(line, column, "partition has no blocks"));
        }
        let mut seen: HashMap<&str, ()> = HashMap::new();
        for (block, _, _) in &raw.blocks {
            for w in block {
                if seen.insert(w.0.as_str(), ()).is_some() {
                    return Err(semantic(w.1, w.2, format!("element {} appears in two blocks", quote(&w.0))));
                }
            }
        }
        return Ok(Document::Partition(PartitionDocument {
            name,
            structure: raw.structure.map(|w| w.0),
            blocks: raw
                .blocks
                .into_iter()
                .map(|(b, _, _)| b.into_iter().map(|w| w.0).collect())
                .collect(),
        }));
    }

    let kind = StructureKind::from_keyword(&kind_text)
        .ok_or_else(|| semantic(kl, kc, format!("unknown kind `{kind_text}`")))?;
    reject_section(&raw, Section::Structure, kind.keyword())?;
    if kind != StructureKind::DeltaCategory {
        reject_section(&raw, Section::Partition, kind.keyword())?;
    }
    if raw.elements.is_empty() {
        let (line, column) = raw.headers.get(&Section::Elements).copied().unwrap_or((kl, 1));
        return Err(semantic(line, column, "no elements"));
    }

    let mut index: HashMap<&str, Elem> = HashMap::new();
    for (i, w) in raw.elements.iter().enumerate() {
        if index.insert(w.0.as_str(), i).is_some() {
            return Err(semantic(w.1, w.2, format!("element {} listed twice", quote(&w.0))));
        }
    }
    let mut magma = PartialMagma::new(raw.elements.iter().map(|w| w.0.clone()))
        .expect("labels are nonempty and distinct");
    for [a, b, c] in &raw.products {
        let (x, y, z) = (resolve(&index, a)?, resolve(&index, b)?, resolve(&index, c)?);
        if magma.defined(x, y) {
            return Err(semantic(a.1, a.2, format!("product {} . {} given twice", quote(&a.0), quote(&b.0))));
        }
        magma.set(x, y, Some(z));
    }
    let mut domain = vec![None; magma.len()];
    for [a, e] in &raw.domain {
        let (x, y) = (resolve(&index, a)?, resolve(&index, e)?);
        if domain[x].is_some() {
            return Err(semantic(a.1, a.2, format!("domain of {} given twice", quote(&a.0))));
        }
        domain[x] = Some(y);
    }
    let partition = if kind == StructureKind::DeltaCategory {
        let Some(&(line, column)) = raw.headers.get(&Section::Partition) else {
            return Err(syntax(kl, 1, "a delta-category needs a `partition:` section"));
        };
        Some(resolve_blocks(&raw.blocks, &index, magma.len(), line, column)?)
    } else {
        None
    };
    Ok(Document::Structure(StructureDocument {
        kind,
        name,
        magma,
        domain,
        partition,
    }))
}

fn resolve_blocks(
    blocks: &[(Vec<Word>, usize, usize)],
    index: &HashMap<&str, Elem>,
    n: usize,
    line: usize,
    column: usize,
) -> Result<Partition, FormatError> {
    let mut ids: Vec<Option<usize>> = vec![None; n];
    for (b, (block, _, _)) in blocks.iter().enumerate() {
        for w in block {
            let x = resolve(index, w)?;
            if ids[x].is_some() {
                return Err(semantic(w.1, w.2, format!("element {} appears in two blocks", quote(&w.0))));
            }
            ids[x] = Some(b);
        }
    }
    let ids: Vec<usize> = ids
        .iter()
        .enumerate()
        .map(|(x, id)| id.ok_or(x))
        .collect::<Result<_, _>>()
        .map_err(|x| {
            let label = index.iter().find(|&(_, &i)| i == x).map(|(l, _)| *l).unwrap_or("?");
            semantic(line, column, format!("partition does not cover element {}", quote(label)))
        })?;
    Ok(Partition::from_class_ids(&ids))
}

/// Parses a structure document.
pub fn parse_structure(text: &str) -> Result<StructureDocument, FormatError> {
    match parse_document(text)? {
        Document::Structure(s) => Ok(s),
        Document::Partition(_) => Err(semantic(1, 1, "expected a structure, found a partition document")),
    }
}

/// Parses a partition document.
pub fn parse_partition(text: &str) -> Result<PartitionDocument, FormatError> {
    match parse_document(text)? {
        Document::Partition(p) => Ok(p),
        Document::Structure(_) => Err(semantic(1, 1, "expected a partition, found a structure document")),
    }
}
