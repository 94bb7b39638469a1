//! JSON shapes for input files and reports.

use serde::{Deserialize, Serialize};
use tqd::{Classification, Complex64, Cyclo, Triple};

/// Either a multiplication table or permutation generators.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum GroupFile {
    Table { order: usize, mult: Vec<Vec<usize>> },
    Permutations { perm_gens: Vec<Vec<usize>> },
}

/// `ω(x,y,z) = ζ_m^{dlog[(x·n + y)·n + z]}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CocycleFile {
    pub modulus: u64,
    pub dlog: Vec<u64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub index: Option<String>,
}

/// Bicharacter table for `invariants --triple`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BicharacterFile {
    pub dlog: Vec<u64>,
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct JsonComplex {
    pub re: f64,
    pub im: f64,
}

impl From<Complex64> for JsonComplex {
    fn from(z: Complex64) -> Self {
        JsonComplex { re: z.re, im: z.im }
    }
}

/// Exact element of `Q(ζ_N)` in the power basis.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct JsonCyclo {
    #[serde(rename = "N")]
    pub n: usize,
    pub coeffs: Vec<String>,
}

impl From<&Cyclo> for JsonCyclo {
    fn from(c: &Cyclo) -> Self {
        JsonCyclo {
            n: c.context().n(),
            coeffs: c.coefficients().iter().map(|q| format!("{}/{}", q.numer(), q.denom())).collect(),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Flags {
    pub symmetric: bool,
    pub isotropic: bool,
    pub lagrangian: bool,
    pub nondegenerate: bool,
}

impl From<Classification> for Flags {
    fn from(c: Classification) -> Self {
        Flags {
            symmetric: c.symmetric,
            isotropic: c.isotropic,
            lagrangian: c.lagrangian,
            nondegenerate: c.nondegenerate,
        }
    }
}

impl Flags {
    /// `sym,iso,lagr,nondeg` subset, or `-`.
    pub fn short(&self) -> String {
        let names: Vec<&str> = [
            (self.symmetric, "sym"),
            (self.isotropic, "iso"),
            (self.lagrangian, "lagr"),
            (self.nondegenerate, "nondeg"),
        ]
        .iter()
        .filter(|f| f.0)
        .map(|f| f.1)
        .collect();
        if names.is_empty() {
            "-".into()
        } else {
            names.join(",")
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TripleJson {
    pub k: Vec<usize>,
    pub h: Vec<usize>,
    pub root_order: u64,
    pub dlog: Vec<u64>,
}

impl From<&Triple> for TripleJson {
    fn from(t: &Triple) -> Self {
        TripleJson {
            k: t.k().members().to_vec(),
            h: t.h().members().to_vec(),
            root_order: t.bicharacter().root_order(),
            dlog: t.bicharacter().dlog().to_vec(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SubcatJson {
    pub id: usize,
    pub triple: TripleJson,
    pub dim: u64,
    pub simples: Vec<usize>,
    pub flags: Flags,
    pub gauss_sum: JsonCyclo,
    pub central_charge: JsonComplex,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct LatticeJson {
    pub group: String,
    pub group_order: usize,
    pub cocycle_modulus: u64,
    pub root_order: u64,
    pub nodes: Vec<SubcatJson>,
    /// Covering pairs `[lower, upper]` of the inclusion order.
    pub edges: Vec<[usize; 2]>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckJson {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerifyReport {
    pub group: String,
    pub cocycle_modulus: u64,
    pub passed: bool,
    pub checks: Vec<CheckJson>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct InvariantsJson {
    pub subcategory: SubcatJson,
    pub centralizer: TripleJson,
    pub muger_center: TripleJson,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub adjoint: Option<TripleJson>,
}
