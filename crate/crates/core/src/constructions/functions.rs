//! Constellations and categories of partial functions on `X = {1..n}`.

use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;

use crate::error::ConstructionError;
use crate::magma::{Elem, PartialMagma};
use crate::structure::{Category, Constellation};

pub const CX_MAX_N: usize = 4;
pub const CODX_MAX_N: usize = 3;
pub const SX_MAX_N: usize = 4;

/// A partial function on `0..n`, stored as an image vector.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PartialFunction {
    images: Vec<Option<usize>>,
}

impl PartialFunction {
    pub fn new(images: Vec<Option<usize>>) -> Self {
        Self { images }
    }

    /// From `(input, output)` pairs; `None` if two pairs share an input or
    /// a point falls outside `0..n`.
    pub fn from_graph(n: usize, graph: &[(usize, usize)]) -> Option<Self> {
        let mut images = vec![None; n];
        for &(x, y) in graph {
            if x >= n || y >= n || images[x].is_some() {
                return None;
            }
            images[x] = Some(y);
        }
        Some(Self { images })
    }

    pub fn identity_on(n: usize, set: &[usize]) -> Self {
        let mut images = vec![None; n];
        for &x in set {
            images[x] = Some(x);
        }
        Self { images }
    }

    pub fn universe(&self) -> usize {
        self.images.len()
    }

    pub fn apply(&self, x: usize) -> Option<usize> {
        self.images[x]
    }

    pub fn images(&self) -> &[Option<usize>] {
        &self.images
    }

    /// Pairs sorted by input.
    pub fn graph(&self) -> Vec<(usize, usize)> {
        self.images
            .iter()
            .enumerate()
            .filter_map(|(x, y)| y.map(|y| (x, y)))
            .collect()
    }

    pub fn domain(&self) -> Vec<usize> {
        (0..self.images.len()).filter(|&x| self.images[x].is_some()).collect()
    }

    /// Sorted, without repeats.
    pub fn image(&self) -> Vec<usize> {
        let mut seen = vec![false; self.images.len()];
        for y in self.images.iter().flatten() {
            seen[*y] = true;
        }
        (0..seen.len()).filter(|&y| seen[y]).collect()
    }

    pub fn is_empty(&self) -> bool {
        self.images.iter().all(Option::is_none)
    }

    /// `x ↦ other(self(x))` on the domain of `self`, or `None` unless
    /// `Im(self) ⊆ Dom(other)`.
    pub fn then(&self, other: &PartialFunction) -> Option<PartialFunction> {
        let mut images = Vec::with_capacity(self.images.len());
        for y in &self.images {
            match y {
                None => images.push(None),
                Some(y) => images.push(Some(other.images[*y]?)),
            }
        }
        Some(PartialFunction { images })
    }

    /// `id` restricted to the domain.
    pub fn domain_identity(&self) -> PartialFunction {
        PartialFunction::identity_on(self.universe(), &self.domain())
    }

    /// `{1→2,2→2}` with points numbered from 1.
    pub fn render(&self) -> String {
        let inner: Vec<String> = self.graph().iter().map(|(x, y)| format!("{}→{}", x + 1, y + 1)).collect();
        format!("{{{}}}", inner.join(","))
    }
}

impl Ord for PartialFunction {
    fn cmp(&self, other: &Self) -> Ordering {
        self.graph()
            .cmp(&other.graph())
            .then(self.images.len().cmp(&other.images.len()))
    }
}

impl PartialOrd for PartialFunction {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for PartialFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

/// A function `Y → Z` with `Y, Z ⊆ X`: a partial function plus an explicit
/// codomain containing its image.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CodFunction {
    function: PartialFunction,
    codomain: Vec<usize>,
}

impl CodFunction {
    /// `None` unless the image lies inside `codomain`.
    pub fn new(function: PartialFunction, mut codomain: Vec<usize>) -> Option<Self> {
        codomain.sort_unstable();
        codomain.dedup();
        if codomain.iter().any(|&z| z >= function.universe()) {
            return None;
        }
        if function.image().iter().any(|y| codomain.binary_search(y).is_err()) {
            return None;
        }
        Some(Self { function, codomain })
    }

    pub fn identity_on(n: usize, set: &[usize]) -> Self {
        Self::new(PartialFunction::identity_on(n, set), set.to_vec()).expect("identity fits its codomain")
    }

    pub fn function(&self) -> &PartialFunction {
        &self.function
    }

    pub fn domain(&self) -> Vec<usize> {
        self.function.domain()
    }

    pub fn codomain(&self) -> &[usize] {
        &self.codomain
    }

    pub fn is_surjective(&self) -> bool {
        self.function.image() == self.codomain
    }

    /// Defined iff `Cod(self) = Dom(other)`.
    pub fn then(&self, other: &CodFunction) -> Option<CodFunction> {
        if self.codomain != other.domain() {
            return None;
        }
        let function = self.function.then(&other.function)?;
        Some(CodFunction {
            function,
            codomain: other.codomain.clone(),
        })
    }

    pub fn render(&self) -> String {
        let cod: Vec<String> = self.codomain.iter().map(|z| (z + 1).to_string()).collect();
        format!("{}|cod={{{}}}", self.function.render(), cod.join(","))
    }
}

impl fmt::Display for CodFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

/// A generated constellation together with the functions its elements
/// stand for.
#[derive(Clone, Debug)]
pub struct FunctionConstellation {
    pub constellation: Constellation,
    pub functions: Vec<PartialFunction>,
}

impl FunctionConstellation {
    pub fn index_of(&self, f: &PartialFunction) -> Option<Elem> {
        self.functions.binary_search(f).ok()
    }
}

#[derive(Clone, Debug)]
pub struct FunctionCategory {
    pub category: Category,
    pub functions: Vec<CodFunction>,
}

impl FunctionCategory {
    pub fn index_of(&self, f: &CodFunction) -> Option<Elem> {
        self.functions.iter().position(|g| g == f)
    }
}

fn check_size(generator: &'static str, n: usize, cap: usize) -> Result<(), ConstructionError> {
    if n == 0 {
        return Err(ConstructionError::ZeroSize);
    }
    if n > cap {
        return Err(ConstructionError::SizeCap { generator, n, cap });
    }
    Ok(())
}

/// Every partial function on `0..n`, sorted by graph.
pub fn all_partial_functions(n: usize) -> Vec<PartialFunction> {
    let mut out = Vec::new();
    let mut images = vec![None; n];
    fn rec(x: usize, n: usize, images: &mut Vec<Option<usize>>, out: &mut Vec<PartialFunction>) {
        if x == n {
            out.push(PartialFunction::new(images.clone()));
            return;
        }
        for y in std::iter::once(None).chain((0..n).map(Some)) {
            images[x] = y;
            rec(x + 1, n, images, out);
        }
    }
    rec(0, n, &mut images, &mut out);
    out.sort();
    out
}

fn subsets(n: usize) -> Vec<Vec<usize>> {
    (0u32..1 << n)
        .map(|mask| (0..n).filter(|&i| mask & (1 << i) != 0).collect())
        .collect()
}

fn constellation_of(functions: Vec<PartialFunction>, labels: Vec<String>) -> FunctionConstellation {
    let k = functions.len();
    let mut table = vec![None; k * k];
    for (i, s) in functions.iter().enumerate() {
        for (j, t) in functions.iter().enumerate() {
            if let Some(st) = s.then(t) {
                table[i * k + j] = functions.binary_search(&st).ok();
            }
        }
    }
    let domain = functions
        .iter()
        .map(|s| {
            functions
                .binary_search(&s.domain_identity())
                .expect("carrier contains every domain identity")
        })
        .collect();
    let magma = PartialMagma::from_table(labels, table).expect("function labels are unique");
    FunctionConstellation {
        constellation: Constellation::new_unchecked(magma, domain),
        functions,
    }
}

fn category_of(functions: Vec<CodFunction>, labels: Vec<String>) -> FunctionCategory {
    let k = functions.len();
    let index: HashMap<&CodFunction, Elem> = functions.iter().enumerate().map(|(i, f)| (f, i)).collect();
    let position = |f: &CodFunction| index.get(f).copied();
    let mut table = vec![None; k * k];
    for (i, s) in functions.iter().enumerate() {
        for (j, t) in functions.iter().enumerate() {
            if let Some(st) = s.then(t) {
                table[i * k + j] = position(&st);
            }
        }
    }
    let n = functions[0].function.universe();
    let domain = functions
        .iter()
        .map(|s| position(&CodFunction::identity_on(n, &s.domain())).expect("domain identity present"))
        .collect();
    let range = functions
        .iter()
        .map(|s| position(&CodFunction::identity_on(n, s.codomain())).expect("codomain identity present"))
        .collect();
    let magma = PartialMagma::from_table(labels, table).expect("function labels are unique");
    FunctionCategory {
        category: Category::new_unchecked(magma, domain, range),
        functions,
    }
}

/// `𝒞_X` for `X = {1..n}`: all partial functions, `s · t` the composite
/// (first `s`) when `Im(s) ⊆ Dom(t)`.
pub fn gen_cx(n: usize) -> Result<FunctionConstellation, ConstructionError> {
    gen_cx_with_cap(n, CX_MAX_N)
}

pub fn gen_cx_with_cap(n: usize, cap: usize) -> Result<FunctionConstellation, ConstructionError> {
    check_size("cx", n, cap)?;
    let functions = all_partial_functions(n);
    let labels = functions.iter().map(PartialFunction::render).collect();
    Ok(constellation_of(functions, labels))
}

/// `𝒞_X^Y`: the partial functions on `X = {0..n-1}` whose domain is
/// exactly `y`, a nonempty proper subset given by 0-based points.
pub fn cx_fixed_domain(n: usize, y: &[usize]) -> Result<FunctionConstellation, ConstructionError> {
    check_size("cx", n, CX_MAX_N)?;
    let mut y = y.to_vec();
    y.sort_unstable();
    y.dedup();
    if y.is_empty() || y.len() >= n || y.iter().any(|&p| p >= n) {
        return Err(ConstructionError::BadSubset { n });
    }
    let functions: Vec<PartialFunction> = all_partial_functions(n)
        .into_iter()
        .filter(|f| f.domain() == y)
        .collect();
    let labels = functions.iter().map(PartialFunction::render).collect();
    Ok(constellation_of(functions, labels))
}

/// `COD_X`: every function between subsets of `X = {1..n}`, composable
/// when the codomain of the first equals the domain of the second.
pub fn gen_codx(n: usize) -> Result<FunctionCategory, ConstructionError> {
    gen_codx_with_cap(n, CODX_MAX_N)
}

pub fn gen_codx_with_cap(n: usize, cap: usize) -> Result<FunctionCategory, ConstructionError> {
    check_size("codx", n, cap)?;
    let subsets = subsets(n);
    let mut functions: Vec<CodFunction> = all_partial_functions(n)
        .into_iter()
        .flat_map(|f| subsets.iter().filter_map(move |z| CodFunction::new(f.clone(), z.clone())))
        .collect();
    functions.sort();
    let labels = functions.iter().map(CodFunction::render).collect();
    Ok(category_of(functions, labels))
}

/// `𝒮_X`: the surjective nonempty cod-functions. For `n = 2` the elements
/// use the names `1, f_a, f_b, i, 1_a, ab, 1_b, ba` (with `a = 1`,
/// `b = 2`) in that order; otherwise graph labels in graph order.
pub fn gen_sx(n: usize) -> Result<FunctionCategory, ConstructionError> {
    gen_sx_with_cap(n, SX_MAX_N)
}

pub fn gen_sx_with_cap(n: usize, cap: usize) -> Result<FunctionCategory, ConstructionError> {
    check_size("sx", n, cap)?;
    if n == 2 {
        let named: [(&str, &[(usize, usize)]); 8] = [
            ("1", &[(0, 0), (1, 1)]),
            ("f_a", &[(0, 0), (1, 0)]),
            ("f_b", &[(0, 1), (1, 1)]),
            ("i", &[(0, 1), (1, 0)]),
            ("1_a", &[(0, 0)]),
            ("ab", &[(0, 1)]),
            ("1_b", &[(1, 1)]),
            ("ba", &[(1, 0)]),
        ];
        let mut functions = Vec::new();
        let mut labels = Vec::new();
        for (name, graph) in named {
            let f = PartialFunction::from_graph(2, graph).expect("valid graph");
            let image = f.image();
            functions.push(CodFunction::new(f, image).expect("surjective onto image"));
            labels.push(name.to_string());
        }
        return Ok(category_of(functions, labels));
    }
    let functions: Vec<CodFunction> = all_partial_functions(n)
        .into_iter()
        .filter(|f| !f.is_empty())
        .map(|f| {
            let image = f.image();
            CodFunction::new(f, image).expect("surjective onto image")
        })
        .collect();
    let labels = functions.iter().map(CodFunction::render).collect();
    Ok(category_of(functions, labels))
}
