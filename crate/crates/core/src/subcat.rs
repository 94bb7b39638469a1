//! Fusion subcategories `S(K, H, B)` of `Rep(D^ω(G))`: ω-bicharacters, the
//! triple bijection, the lattice and its invariants.
//!
//! Bicharacters are stored as discrete logs: `B(k, h) = ζ_N^{dlog(k, h)}`
//! with `N` the root order of the double.

use std::collections::HashMap;
use std::fmt;

use num_complex::Complex64;
use rayon::prelude::*;
use thiserror::Error;

use crate::cyclo::Cyclo;
use crate::double::{DoubleError, TwistedDouble};
use crate::group::{FiniteGroup, Subgroup};
use crate::zmod::LinearSystem;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SubcatError {
    #[error("DimensionMismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: u64, found: u64 },
    #[error("counting identity fails at a = {a}: expected {expected}, found {found}")]
    CountingIdentity { a: usize, expected: u64, found: u64 },
    #[error("NotASubcategory: {0}")]
    NotASubcategory(String),
    #[error("invalid ω-bicharacter: {0}")]
    InvalidBicharacter(String),
    #[error("triples {0} and {1} give the same simple set")]
    Duplicate(String, String),
    #[error("ψ is not well defined at ({a}, {g})")]
    PsiNotWellDefined { a: usize, g: usize },
    #[error("UnsupportedTriple: {0}")]
    UnsupportedTriple(&'static str),
    #[error("Gauss sum mismatch: formula {formula}, direct {direct}")]
    GaussSumMismatch { formula: String, direct: String },
    #[error("alternating test on representatives disagrees with the full test")]
    ReductionMismatch,
    #[error("inconsistent engine state: {0}")]
    Inconsistent(String),
    #[error(transparent)]
    Double(#[from] DoubleError),
}

/// A function `B: K × H → μ_N` stored as exponents, rows indexed by `K`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct OmegaBicharacter {
    k: Subgroup,
    h: Subgroup,
    root_order: u64,
    dlog: Vec<u64>,
}

impl OmegaBicharacter {
    /// Wraps a table without checking the bicharacter conditions.
    pub fn from_table(k: Subgroup, h: Subgroup, root_order: u64, dlog: Vec<u64>) -> Result<Self, SubcatError> {
        if dlog.len() != k.len() * h.len() {
            return Err(SubcatError::InvalidBicharacter(format!(
                "table has {} entries, expected {}",
                dlog.len(),
                k.len() * h.len()
            )));
        }
        let dlog = dlog.into_iter().map(|e| e % root_order).collect();
        Ok(OmegaBicharacter { k, h, root_order, dlog })
    }

    pub fn trivial(k: Subgroup, h: Subgroup, root_order: u64) -> Self {
        let dlog = vec![0; k.len() * h.len()];
        OmegaBicharacter { k, h, root_order, dlog }
    }

    fn tabulate(k: Subgroup, h: Subgroup, root_order: u64, f: impl Fn(usize, usize) -> u64) -> Self {
        let mut dlog = Vec::with_capacity(k.len() * h.len());
        for &x in k.members() {
            for &y in h.members() {
                dlog.push(f(x, y) % root_order);
            }
        }
        OmegaBicharacter { k, h, root_order, dlog }
    }

    pub fn k(&self) -> &Subgroup {
        &self.k
    }

    pub fn h(&self) -> &Subgroup {
        &self.h
    }

    pub fn root_order(&self) -> u64 {
        self.root_order
    }

    pub fn dlog(&self) -> &[u64] {
        &self.dlog
    }

    /// Exponent of `B(x, y)`; panics when `x ∉ K` or `y ∉ H`.
    pub fn exp(&self, x: usize, y: usize) -> u64 {
        let i = self.k.position(x).expect("first argument lies in K");
        let j = self.h.position(y).expect("second argument lies in H");
        self.dlog[i * self.h.len() + j]
    }

    pub fn is_trivial(&self) -> bool {
        self.dlog.iter().all(|&e| e == 0)
    }

    /// Checks conditions (i), (ii) and G-invariance exhaustively.
    pub fn validate(&self, d: &TwistedDouble) -> Result<(), SubcatError> {
        let g = &**d.group();
        let n = self.root_order;
        if n != d.root_order() {
            return Err(SubcatError::InvalidBicharacter(format!("root order {n}, double has {}", d.root_order())));
        }
        if !self.k.is_normal() || !self.h.is_normal() || !g.centralize_each_other(&self.k, &self.h) {
            return Err(SubcatError::InvalidBicharacter("K, H must be normal and centralize each other".into()));
        }
        let fail = |what: &str, args: [usize; 3]| {
            Err(SubcatError::InvalidBicharacter(format!("{what} fails at {args:?}")))
        };
        for &x in self.k.members() {
            for &y in self.h.members() {
                for &z in self.h.members() {
                    let lhs = self.exp(x, g.mul(y, z)) + d.beta_n(x, y, z);
                    if (lhs + 2 * n - self.exp(x, y) - self.exp(x, z)) % n != 0 {
                        return fail("condition (i)", [x, y, z]);
                    }
                }
            }
        }
        for &w in self.k.members() {
            for &x in self.k.members() {
                for &y in self.h.members() {
                    let rhs = d.beta_n(y, w, x) + self.exp(w, y) + self.exp(x, y);
                    if (self.exp(g.mul(w, x), y) + 3 * n - rhs) % n != 0 {
                        return fail("condition (ii)", [w, x, y]);
                    }
                }
            }
        }
        for x in 0..g.order() {
            for &k in self.k.members() {
                for &h in self.h.members() {
                    if (self.exp(g.conj(g.inv(x), k), h) + invariance_factor(d, k, x, h) + n
                        - self.exp(k, g.conj(x, h)))
                        % n
                        != 0
                    {
                        return fail("G-invariance", [x, k, h]);
                    }
                }
            }
        }
        Ok(())
    }
}

/// Exponent of `β_a(x,x⁻¹) / (β_a(x,h) β_a(xh,x⁻¹))`.
fn invariance_factor(d: &TwistedDouble, a: usize, x: usize, h: usize) -> u64 {
    let g = &**d.group();
    let n = d.root_order();
    let xi = g.inv(x);
    (d.beta_n(a, x, xi) + 2 * n - d.beta_n(a, x, h) - d.beta_n(a, g.mul(x, h), xi)) % n
}

/// The classifying datum `(K, H, B)` of a fusion subcategory.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Triple {
    b: OmegaBicharacter,
}

impl Triple {
    pub fn new(b: OmegaBicharacter) -> Self {
        Triple { b }
    }

    /// Builds and validates a triple from an exponent table.
    pub fn from_parts(d: &TwistedDouble, k: Subgroup, h: Subgroup, dlog: Vec<u64>) -> Result<Self, SubcatError> {
        let b = OmegaBicharacter::from_table(k, h, d.root_order(), dlog)?;
        b.validate(d)?;
        Ok(Triple { b })
    }

    pub fn k(&self) -> &Subgroup {
        &self.b.k
    }

    pub fn h(&self) -> &Subgroup {
        &self.b.h
    }

    pub fn bicharacter(&self) -> &OmegaBicharacter {
        &self.b
    }

    pub fn exp(&self, x: usize, y: usize) -> u64 {
        self.b.exp(x, y)
    }
}

impl fmt::Display for Triple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(K={}, H={}, B=[", self.k(), self.h())?;
        for (i, e) in self.b.dlog.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{e}")?;
        }
        write!(f, "]/{})", self.b.root_order)
    }
}

/// A fusion subcategory together with its triple.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FusionSubcat {
    pub triple: Triple,
    /// Sorted indices into the simples of the double.
    pub simples: Vec<usize>,
    pub dim: u64,
}

/// Answers of the symmetric / isotropic / Lagrangian / nondegenerate tests.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Classification {
    pub symmetric: bool,
    pub isotropic: bool,
    pub lagrangian: bool,
    pub nondegenerate: bool,
}

/// All `G`-invariant ω-bicharacters on `K × H`, sorted by table.
///
/// Conditions (i), (ii) and invariance are imposed on generators to keep the
/// linear system small; every candidate is then checked exhaustively.
pub fn enumerate_bicharacters(d: &TwistedDouble, k: &Subgroup, h: &Subgroup) -> Vec<OmegaBicharacter> {
    let g = &**d.group();
    let n = d.root_order();
    let nh = h.len();
    let var = |x: usize, y: usize| k.position(x).unwrap() * nh + h.position(y).unwrap();
    let mut sys = LinearSystem::new(n, k.len() * nh);
    let gens_h = g.generators_of(h);
    let gens_k = g.generators_of(k);
    let gens_g = g.generators_of(&g.whole());
    for &x in k.members() {
        for &y in h.members() {
            for &z in &gens_h {
                sys.add_equation(
                    &[(var(x, g.mul(y, z)), 1), (var(x, y), -1), (var(x, z), -1)],
                    -(d.beta_n(x, y, z) as i64),
                );
            }
        }
    }
    for &w in k.members() {
        for &x in &gens_k {
            for &y in h.members() {
                sys.add_equation(
                    &[(var(g.mul(w, x), y), 1), (var(w, y), -1), (var(x, y), -1)],
                    d.beta_n(y, w, x) as i64,
                );
            }
        }
    }
    for &x in &gens_g {
        let xi = g.inv(x);
        for &kk in k.members() {
            for &hh in h.members() {
                sys.add_equation(
                    &[(var(g.conj(xi, kk), hh), 1), (var(kk, g.conj(x, hh)), -1)],
                    -(invariance_factor(d, kk, x, hh) as i64),
                );
            }
        }
    }
    let Some(solutions) = sys.solve() else {
        return Vec::new();
    };
    solutions
        .enumerate()
        .into_iter()
        .map(|dlog| OmegaBicharacter { k: k.clone(), h: h.clone(), root_order: n, dlog })
        .filter(|b| b.validate(d).is_ok())
        .collect()
}

/// `S(K, H, B)`: simples `(a, χ)` with `a ∈ K` and `χ|_H = B(a, ·) deg χ`.
pub fn build_subcat(d: &TwistedDouble, t: &Triple) -> Result<FusionSubcat, SubcatError> {
    let g = &**d.group();
    let (k, h) = (t.k(), t.h());
    let mut simples = Vec::new();
    let mut weight: HashMap<usize, u64> = HashMap::new();
    for (i, s) in d.simples().iter().enumerate() {
        if !k.contains(s.rep) {
            continue;
        }
        let matches = h
            .members()
            .iter()
            .all(|&y| d.char_value(i, y).pure_exponent() == Some(t.exp(s.rep, y) as u32));
        if matches {
            simples.push(i);
            *weight.entry(s.rep).or_default() += (s.degree as u64).pow(2);
        }
    }
    for (cid, &a) in g.class_reps().iter().enumerate() {
        if !k.contains(a) {
            continue;
        }
        let expected = (g.class_centralizer(cid).len() / h.len()) as u64;
        let found = weight.get(&a).copied().unwrap_or(0);
        if found != expected {
            return Err(SubcatError::CountingIdentity { a, expected, found });
        }
    }
    let dim: u64 = simples.iter().map(|&i| d.dim(i).pow(2)).sum();
    let expected = (k.len() * g.order() / h.len()) as u64;
    if dim != expected {
        return Err(SubcatError::DimensionMismatch { expected, found: dim });
    }
    Ok(FusionSubcat { triple: t.clone(), simples, dim })
}

/// Recovers `(K_D, H_D, B_D)` from a simple set and checks it rebuilds the set.
pub fn triple_of(d: &TwistedDouble, simples: &[usize]) -> Result<Triple, SubcatError> {
    let g = &**d.group();
    let n = d.root_order();
    let bad = |msg: &str| SubcatError::NotASubcategory(msg.to_string());
    let mut set = simples.to_vec();
    set.sort_unstable();
    set.dedup();
    if set.iter().any(|&i| i >= d.len()) {
        return Err(bad("index out of range"));
    }
    let e = g.identity();
    if !set.iter().any(|&i| d.simple(i).rep == e && d.simple(i).degree == 1 && is_trivial_char(d, i)) {
        return Err(bad("unit object missing"));
    }
    let mut reps: Vec<usize> = set.iter().map(|&i| d.simple(i).rep).collect();
    reps.dedup();
    let k = g.normal_closure(&reps);
    let support: usize = reps.iter().map(|&a| g.class(g.class_of(a)).len()).sum();
    if support != k.len() {
        return Err(bad("support is not a subgroup"));
    }
    let mut h_members: Vec<usize> = (0..g.order()).collect();
    for &i in set.iter().filter(|&&i| d.simple(i).rep == e) {
        h_members.retain(|&y| d.char_value(i, y).pure_exponent() == Some(0));
    }
    let h = g.subgroup_from_members(&h_members).ok_or_else(|| bad("kernel intersection is not a subgroup"))?;
    if !g.centralize_each_other(&k, &h) {
        return Err(bad("support and kernel do not centralize each other"));
    }
    let mut dlog = Vec::with_capacity(k.len() * h.len());
    for &kk in k.members() {
        let a = g.rep_of(kk);
        let x = g.transversal(kk);
        for &y in h.members() {
            let xy = g.conj(x, y);
            let mut cell = None;
            for &i in set.iter().filter(|&&i| d.simple(i).rep == a) {
                let v = d.char_value(i, xy).pure_exponent().ok_or_else(|| bad("character not scalar on H"))? as u64;
                let val = (v + n - invariance_factor(d, a, x, y)) % n;
                if cell.is_some_and(|c| c != val) {
                    return Err(bad("B_D depends on the character"));
                }
                cell = Some(val);
            }
            let cell = cell.ok_or_else(|| bad("support class without simples"))?;
            dlog.push(cell);
        }
    }
    let t = Triple::from_parts(d, k, h, dlog).map_err(|err| bad(&err.to_string()))?;
    let rebuilt = build_subcat(d, &t).map_err(|err| bad(&err.to_string()))?;
    if rebuilt.simples != set {
        return Err(bad("recovered triple does not rebuild the set"));
    }
    Ok(t)
}

fn is_trivial_char(d: &TwistedDouble, i: usize) -> bool {
    let g = &**d.group();
    (0..g.order()).all(|y| d.char_value(i, y).pure_exponent() == Some(0))
}

/// Every fusion subcategory, sorted by triple; asserts the simple sets are distinct.
pub fn enumerate_subcats(d: &TwistedDouble) -> Result<Vec<FusionSubcat>, SubcatError> {
    let g = &**d.group();
    let mut triples: Vec<Triple> = g
        .centralizing_pairs()
        .into_par_iter()
        .flat_map_iter(|(k, h)| enumerate_bicharacters(d, &k, &h).into_iter().map(Triple::new))
        .collect();
    triples.sort();
    let subcats: Vec<FusionSubcat> =
        triples.par_iter().map(|t| build_subcat(d, t)).collect::<Result<_, _>>()?;
    let mut seen: HashMap<&[usize], &Triple> = HashMap::new();
    for s in &subcats {
        if let Some(prev) = seen.insert(&s.simples, &s.triple) {
            return Err(SubcatError::Duplicate(prev.to_string(), s.triple.to_string()));
        }
    }
    Ok(subcats)
}

pub fn enumerate_all(d: &TwistedDouble) -> Result<Vec<Triple>, SubcatError> {
    Ok(enumerate_subcats(d)?.into_iter().map(|s| s.triple).collect())
}

/// `S(K,H,B)′ = S(H, K, (B^op)⁻¹)`.
pub fn centralizer(t: &Triple) -> Triple {
    let n = t.b.root_order;
    Triple::new(OmegaBicharacter::tabulate(t.h().clone(), t.k().clone(), n, |y, x| n - t.exp(x, y)))
}

/// `t1 ⊆ t2`.
pub fn contains(t1: &Triple, t2: &Triple) -> bool {
    t1.k().is_subset(t2.k())
        && t2.h().is_subset(t1.h())
        && t1
            .k()
            .members()
            .iter()
            .all(|&x| t2.h().members().iter().all(|&y| t1.exp(x, y) == t2.exp(x, y)))
}

fn kernel_subgroup(g: &FiniteGroup, members: Vec<usize>) -> Result<Subgroup, SubcatError> {
    g.subgroup_from_members(&members)
        .ok_or_else(|| SubcatError::Inconsistent("kernel of φ is not a subgroup".into()))
}

fn collect_table(k: Subgroup, h: Subgroup, n: u64, cells: &[Option<u64>]) -> Result<Triple, SubcatError> {
    let dlog = cells
        .iter()
        .map(|c| c.ok_or_else(|| SubcatError::Inconsistent("product subgroup not covered".into())))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(Triple::new(OmegaBicharacter { k, h, root_order: n, dlog }))
}

/// `S(t1) ∩ S(t2) = S(ker φ, HH′, ψ)`.
pub fn meet(d: &TwistedDouble, t1: &Triple, t2: &Triple) -> Result<Triple, SubcatError> {
    let g = &**d.group();
    let n = d.root_order();
    let hh = g.intersection(t1.h(), t2.h());
    let ker = kernel_subgroup(
        g,
        g.intersection(t1.k(), t2.k())
            .members()
            .iter()
            .copied()
            .filter(|&a| hh.members().iter().all(|&y| t1.exp(a, y) == t2.exp(a, y)))
            .collect(),
    )?;
    let prod = g.join(t1.h(), t2.h());
    let mut cells = vec![None; ker.len() * prod.len()];
    for (i, &a) in ker.members().iter().enumerate() {
        for &y in t1.h().members() {
            for &z in t2.h().members() {
                let p = g.mul(y, z);
                let v = (n - d.beta_n(a, y, z) + t1.exp(a, y) + t2.exp(a, z)) % n;
                let cell = &mut cells[i * prod.len() + prod.position(p).unwrap()];
                match *cell {
                    Some(c) if c != v => return Err(SubcatError::PsiNotWellDefined { a, g: p }),
                    _ => *cell = Some(v),
                }
            }
        }
    }
    collect_table(ker, prod, n, &cells)
}

/// `S(t1) ∨ S(t2) = S(KK′, ker φ_{B^op,B′^op}, (ψ_{B^op,B′^op})^op)`.
pub fn join(d: &TwistedDouble, t1: &Triple, t2: &Triple) -> Result<Triple, SubcatError> {
    let g = &**d.group();
    let n = d.root_order();
    let kk = g.intersection(t1.k(), t2.k());
    let ker = kernel_subgroup(
        g,
        g.intersection(t1.h(), t2.h())
            .members()
            .iter()
            .copied()
            .filter(|&y| kk.members().iter().all(|&a| t1.exp(a, y) == t2.exp(a, y)))
            .collect(),
    )?;
    let prod = g.join(t1.k(), t2.k());
    let mut cells = vec![None; prod.len() * ker.len()];
    for (j, &y) in ker.members().iter().enumerate() {
        for &u in t1.k().members() {
            for &w in t2.k().members() {
                let p = g.mul(u, w);
                let v = (d.beta_n(y, u, w) + t1.exp(u, y) + t2.exp(w, y)) % n;
                let cell = &mut cells[prod.position(p).unwrap() * ker.len() + j];
                match *cell {
                    Some(c) if c != v => return Err(SubcatError::PsiNotWellDefined { a: y, g: p }),
                    _ => *cell = Some(v),
                }
            }
        }
    }
    collect_table(prod, ker, n, &cells)
}

/// `Z₂(S(K,H,B)) = S(ker φ_{B,(B^op)⁻¹}, HK, ψ_{B,(B^op)⁻¹})`.
pub fn muger_center(d: &TwistedDouble, t: &Triple) -> Result<Triple, SubcatError> {
    meet(d, t, &centralizer(t))
}

/// `L(x, y) + L(y, x)` on `K ∩ H`.
fn symmetrized(t: &Triple, x: usize, y: usize) -> u64 {
    (t.exp(x, y) + t.exp(y, x)) % t.b.root_order
}

pub fn classify(d: &TwistedDouble, t: &Triple) -> Result<Classification, SubcatError> {
    let g = &**d.group();
    let (k, h) = (t.k(), t.h());
    let inside = k.is_subset(h);
    let symmetric = inside
        && k.members().iter().all(|&x| k.members().iter().all(|&y| symmetrized(t, x, y) == 0));
    let alternating_all = inside && k.members().iter().all(|&x| t.exp(x, x) == 0);
    let alternating_reps =
        inside && g.class_reps().iter().filter(|&&a| k.contains(a)).all(|&a| t.exp(a, a) == 0);
    if alternating_all != alternating_reps {
        return Err(SubcatError::ReductionMismatch);
    }
    let inter = g.intersection(k, h);
    let radical_trivial = inter
        .members()
        .iter()
        .filter(|&&x| inter.members().iter().all(|&y| symmetrized(t, x, y) == 0))
        .count()
        == 1;
    let nondegenerate = g.join(k, h).len() == g.order() && radical_trivial;
    Ok(Classification {
        symmetric,
        isotropic: alternating_all,
        lagrangian: k == h && alternating_all,
        nondegenerate,
    })
}

fn is_endpoint(g: &FiniteGroup, t: &Triple) -> bool {
    (t.k().len() == g.order() && t.h().is_trivial()) || (t.k().is_trivial() && t.h().len() == g.order())
}

/// Nondegenerate triples other than the trivial and whole subcategories.
pub fn proper_nondegenerate(d: &TwistedDouble) -> Result<Vec<Triple>, SubcatError> {
    let g = &**d.group();
    let mut out = Vec::new();
    for t in enumerate_all(d)? {
        if !is_endpoint(g, &t) && classify(d, &t)?.nondegenerate {
            out.push(t);
        }
    }
    Ok(out)
}

pub fn is_prime(d: &TwistedDouble) -> Result<bool, SubcatError> {
    Ok(proper_nondegenerate(d)?.is_empty())
}

pub fn nondegenerate_count(d: &TwistedDouble) -> Result<usize, SubcatError> {
    Ok(proper_nondegenerate(d)?.len())
}

/// `τ = (|G|/|H|) Σ_{a ∈ K∩H∩R} |K_a| B(a,a)`, checked against `Σ θ d²`
/// and, for nondegenerate triples, against `(|K|/|K∩H|) Σ_{a ∈ K∩H} B(a,a)`.
pub fn gauss_sum(d: &TwistedDouble, t: &Triple) -> Result<Cyclo, SubcatError> {
    let g = &**d.group();
    let ctx = d.context();
    let inter = g.intersection(t.k(), t.h());
    let mut dense = vec![0i64; ctx.n()];
    for (cid, &a) in g.class_reps().iter().enumerate() {
        if inter.contains(a) {
            dense[t.exp(a, a) as usize] += g.class(cid).len() as i64;
        }
    }
    let formula = Cyclo::from_dense_exponents(ctx, &dense).scale_int((g.order() / t.h().len()) as i64);
    let direct = d.gauss_sum_direct(&build_subcat(d, t)?.simples);
    let mismatch = |other: &Cyclo| SubcatError::GaussSumMismatch {
        formula: formula.to_string(),
        direct: other.to_string(),
    };
    if formula != direct {
        return Err(mismatch(&direct));
    }
    if classify(d, t)?.nondegenerate {
        let mut dense = vec![0i64; ctx.n()];
        for &a in inter.members() {
            dense[t.exp(a, a) as usize] += 1;
        }
        let short = Cyclo::from_dense_exponents(ctx, &dense).scale_int((t.k().len() / inter.len()) as i64);
        if short != formula {
            return Err(mismatch(&short));
        }
    }
    Ok(formula)
}

/// `ζ = τ / √dim`, through `Σ_{a ∈ K∩H} B(a,a) / √|K∩H|` when nondegenerate.
pub fn central_charge(d: &TwistedDouble, t: &Triple) -> Result<Complex64, SubcatError> {
    let g = &**d.group();
    let tau = gauss_sum(d, t)?;
    if classify(d, t)?.nondegenerate {
        let inter = g.intersection(t.k(), t.h());
        let n = d.root_order() as f64;
        let sum: Complex64 = inter
            .members()
            .iter()
            .map(|&a| Complex64::from_polar(1.0, 2.0 * std::f64::consts::PI * t.exp(a, a) as f64 / n))
            .sum();
        return Ok(sum / (inter.len() as f64).sqrt());
    }
    let dim = (t.k().len() * g.order() / t.h().len()) as f64;
    Ok(tau.to_complex() / dim.sqrt())
}

fn require_untwisted(d: &TwistedDouble) -> Result<(), SubcatError> {
    if d.is_untwisted() {
        Ok(())
    } else {
        Err(SubcatError::UnsupportedTriple("only available for the trivial cocycle"))
    }
}

/// `S(K,H,1)_ad = S([G,K], C_G(K) ∩ π⁻¹(Z(G/H)), 1)`.
pub fn adjoint(d: &TwistedDouble, t: &Triple) -> Result<Triple, SubcatError> {
    require_untwisted(d)?;
    if !t.b.is_trivial() {
        return Err(SubcatError::UnsupportedTriple("adjoint needs B = 1"));
    }
    let g = &**d.group();
    let k = g.commutator_subgroup(t.k());
    let h = g.intersection(&g.centralizer_of(t.k()), &g.preimage_of_center_of_quotient(t.h()));
    Ok(Triple::new(OmegaBicharacter::trivial(k, h, d.root_order())))
}

fn central_parts(d: &TwistedDouble, n: usize) -> Result<(Subgroup, Subgroup), SubcatError> {
    require_untwisted(d)?;
    if n == 0 {
        return Err(SubcatError::UnsupportedTriple("central series terms start at n = 1"));
    }
    let g = &**d.group();
    let cs = g.central_series();
    let lower = cs.lower_term(n).clone();
    let other = g.intersection(&g.centralizer_of(cs.lower_term(n - 1)), cs.upper_term(n));
    Ok((lower, other))
}

/// `Rep(D(G))^{(n)} = S(C_n, C_G(C_{n−1}) ∩ C^n, 1)`.
pub fn upper_central_term(d: &TwistedDouble, n: usize) -> Result<Triple, SubcatError> {
    let (lower, other) = central_parts(d, n)?;
    Ok(Triple::new(OmegaBicharacter::trivial(lower, other, d.root_order())))
}

/// `Rep(D(G))_{(n)} = S(C_G(C_{n−1}) ∩ C^n, C_n, 1)`.
pub fn lower_central_term(d: &TwistedDouble, n: usize) -> Result<Triple, SubcatError> {
    let (lower, other) = central_parts(d, n)?;
    Ok(Triple::new(OmegaBicharacter::trivial(other, lower, d.root_order())))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cocycle::ThreeCocycle;
    use std::sync::Arc;

    fn untwisted(g: FiniteGroup) -> TwistedDouble {
        TwistedDouble::untwisted(Arc::new(g)).unwrap()
    }

    fn semion() -> TwistedDouble {
        TwistedDouble::new(ThreeCocycle::builtin_cyclic(2, 1).unwrap()).unwrap()
    }

    #[test]
    fn z2_counts_and_toric_code() {
        let d = untwisted(FiniteGroup::cyclic(2));
        let all = enumerate_subcats(&d).unwrap();
        assert_eq!(all.len(), 5);
        let g = d.group().clone();
        let whole = g.whole();
        let full = enumerate_bicharacters(&d, &whole, &whole);
        assert_eq!(full.len(), 2);
        let fermion = d.index_of(1, 1).unwrap();
        let unit = d.index_of(0, 0).unwrap();
        let t = triple_of(&d, &[unit, fermion]).unwrap();
        assert_eq!(t.exp(1, 1), d.root_order() / 2);
        assert!(gauss_sum(&d, &t).unwrap().is_zero());
        let c = classify(&d, &t).unwrap();
        assert!(c.symmetric && !c.isotropic && !c.nondegenerate);
    }

    #[test]
    fn semion_triples() {
        let d = semion();
        let n = d.root_order();
        let whole = d.group().whole();
        let bs = enumerate_bicharacters(&d, &whole, &whole);
        let mut exps: Vec<u64> = bs.iter().map(|b| b.exp(1, 1)).collect();
        exps.sort();
        assert_eq!(exps, vec![n / 4, 3 * n / 4]);
        assert_eq!(enumerate_all(&d).unwrap().len(), 5);
        assert!(!is_prime(&d).unwrap());
        assert_eq!(nondegenerate_count(&d).unwrap(), 2);
        for b in bs {
            let t = Triple::new(b);
            let tau = gauss_sum(&d, &t).unwrap().to_complex();
            let sign = if t.exp(1, 1) == n / 4 { 1.0 } else { -1.0 };
            assert!((tau - Complex64::new(1.0, sign)).norm() < 1e-12);
            assert!(muger_center(&d, &t).unwrap().k().is_trivial());
        }
    }

    #[test]
    fn s3_rotation_bicharacters() {
        let d = untwisted(FiniteGroup::symmetric(3));
        let g = d.group().clone();
        let a3 = g.normal_subgroups().iter().find(|s| s.len() == 3).unwrap().clone();
        assert_eq!(enumerate_bicharacters(&d, &a3, &a3).len(), 3);
        assert!(is_prime(&d).unwrap());
    }

    #[test]
    fn endpoints() {
        let d = untwisted(FiniteGroup::dihedral(4));
        let g = d.group().clone();
        let n = d.root_order();
        let whole = Triple::new(OmegaBicharacter::trivial(g.whole(), g.trivial_subgroup(), n));
        let unit = Triple::new(OmegaBicharacter::trivial(g.trivial_subgroup(), g.whole(), n));
        assert_eq!(build_subcat(&d, &whole).unwrap().simples.len(), d.len());
        assert_eq!(build_subcat(&d, &unit).unwrap().simples.len(), 1);
        assert_eq!(centralizer(&whole), unit);
        let adj = adjoint(&d, &whole).unwrap();
        assert_eq!(adj.k(), &g.center());
        assert_eq!(adj.h(), &g.center());
        assert_eq!(gauss_sum(&d, &whole).unwrap(), Cyclo::from_int(d.context(), 8));
        assert!((central_charge(&d, &whole).unwrap() - 1.0).norm() < 1e-12);
    }

    #[test]
    fn nondegenerate_counts_for_prime_cyclic() {
        assert_eq!(nondegenerate_count(&untwisted(FiniteGroup::cyclic(3))).unwrap(), 2);
        assert_eq!(nondegenerate_count(&untwisted(FiniteGroup::cyclic(5))).unwrap(), 4);
        assert_eq!(nondegenerate_count(&untwisted(FiniteGroup::cyclic(2))).unwrap(), 0);
        assert!(is_prime(&untwisted(FiniteGroup::cyclic(4))).unwrap());
    }
}
