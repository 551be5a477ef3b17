//! The Cayley map `s ↦ ρ_s` into the partial functions on the carrier.

use crate::constructions::{gen_cx_with_cap, FunctionConstellation, PartialFunction};
use crate::error::ConstructionError;
use crate::magma::Elem;
use crate::morphisms::radiant::{check_radiant, MorphismWitness};
use crate::structure::Constellation;

/// `ρ_s` for every `s`, where `x ρ_s = x · s` when defined. The radiant
/// and strong properties are checked directly against composition of
/// partial functions, without materializing `𝒞_P`.
#[derive(Clone, Debug)]
pub struct CayleyEmbedding {
    pub functions: Vec<PartialFunction>,
    pub radiant: bool,
    pub strong: bool,
    pub injective: bool,
    /// First pair `s < t` with `ρ_s = ρ_t`.
    pub collision: Option<(Elem, Elem)>,
}

impl CayleyEmbedding {
    pub fn embedding(&self) -> bool {
        self.radiant && self.strong && self.injective
    }

    /// The map into a generated `𝒞_X` with `|X| = |P|` and the full
    /// radiant check against it. Only feasible for tiny carriers.
    pub fn into_cx(
        &self,
        p: &Constellation,
        cap: usize,
    ) -> Result<(FunctionConstellation, MorphismWitness), ConstructionError> {
        let cx = gen_cx_with_cap(self.functions.len(), cap)?;
        let map: Vec<Elem> = self
            .functions
            .iter()
            .map(|f| cx.index_of(f).expect("every partial function is generated"))
            .collect();
        let witness = check_radiant(&map, p, &cx.constellation).expect("map is total and in range");
        Ok((cx, witness))
    }
}

pub fn cayley_embedding(p: &Constellation) -> CayleyEmbedding {
    let n = p.len();
    let functions: Vec<PartialFunction> = (0..n)
        .map(|s| PartialFunction::new((0..n).map(|x| p.mul(x, s)).collect()))
        .collect();
    let mut radiant = true;
    let mut strong = true;
    for s in 0..n {
        if functions[s].domain_identity() != functions[p.d(s)] {
            radiant = false;
        }
        for t in 0..n {
            let composite = functions[s].then(&functions[t]);
            match (p.mul(s, t), composite) {
                (Some(st), Some(f)) => radiant &= f == functions[st],
                (Some(_), None) => radiant = false,
                (None, Some(_)) => strong = false,
                (None, None) => {}
            }
        }
    }
    let collision = (0..n).find_map(|s| (s + 1..n).find(|&t| functions[s] == functions[t]).map(|t| (s, t)));
    CayleyEmbedding {
        functions,
        radiant,
        strong: radiant && strong,
        injective: collision.is_none(),
        collision,
    }
}
