//! Exact ordinary and projective character tables.
//!
//! Ordinary tables come from the class-algebra method: the class-sum
//! structure constants are diagonalized over `F_p` with `p ≡ 1 (mod N)`,
//! and each character value is lifted to a multiset of `N`-th roots of unity
//! by discrete Fourier inversion along the cyclic subgroup of an element.
//! Projective tables for a 2-cocycle `β` are read off the ordinary table of
//! the central extension `C ×_β Z/m'` through the section `x ↦ (x, 0)`.

use std::sync::Arc;

use num_integer::Integer;
use thiserror::Error;

use crate::cocycle::Cochain2;
use crate::cyclo::{Cyclo, CycloContext, RootSum};
use crate::group::{FiniteGroup, GroupError, Subgroup};
use crate::modp::{self, MatP};
use crate::zmod::LinearSystem;

/// Largest group order the table engine accepts.
pub const TABLE_ORDER_CAP: usize = 1 << 13;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CharacterError {
    #[error("LiftFailure: {0}")]
    LiftFailure(String),
    #[error("CapExceeded: group of order {order} exceeds the table cap {cap}")]
    CapExceeded { order: usize, cap: usize },
    #[error("group exponent {exponent} does not divide the root order {n}")]
    ExponentMismatch { exponent: usize, n: usize },
    #[error("orthogonality fails ({kind}) at ({i}, {j})")]
    Orthogonality { kind: &'static str, i: usize, j: usize },
    #[error("degree identity fails: Σ deg² = {got}, expected {expected}")]
    DegreeSum { got: u64, expected: u64 },
    #[error("2-cochain is not a normalized 2-cocycle at {0:?}")]
    NotACocycle((usize, usize, usize)),
    #[error(transparent)]
    Group(#[from] GroupError),
}

/// An irreducible character as root-of-unity multisets per conjugacy class.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct Character {
    pub degree: u32,
    pub class_values: Vec<RootSum>,
}

#[derive(Clone, Debug)]
pub struct CharacterTable {
    group: Arc<FiniteGroup>,
    n: u32,
    chars: Vec<Character>,
}

/// Deterministic pseudo-random coefficients for the class-matrix combination.
fn mix(seed: u64) -> u64 {
    let mut z = seed.wrapping_add(0x9E37_79B9_7F4A_7C15);
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

fn isqrt(n: u64) -> u64 {
    let mut r = (n as f64).sqrt() as u64;
    while r * r > n {
        r -= 1;
    }
    while (r + 1) * (r + 1) <= n {
        r += 1;
    }
    r
}

/// Accumulates `Σ sign·a·conj(b)` into a dense exponent vector.
fn pair_sum<'a>(pairs: impl Iterator<Item = (&'a RootSum, &'a RootSum, i64)>, n: usize) -> Vec<i64> {
    let mut dense = vec![0i64; n];
    for (a, b, w) in pairs {
        a.accumulate_product(b, true, w, &mut dense);
    }
    dense
}

fn dense_equals_int(ctx: &Arc<CycloContext>, dense: &[i64], k: i64) -> bool {
    Cyclo::from_dense_exponents(ctx, dense) == Cyclo::from_int(ctx, k)
}

impl CharacterTable {
    /// Exact table of `group` with values in `Q(ζ_N)`, `N = ctx.n()`.
    pub fn ordinary(group: Arc<FiniteGroup>, ctx: &Arc<CycloContext>) -> Result<Self, CharacterError> {
        let order = group.order();
        if order > TABLE_ORDER_CAP {
            return Err(CharacterError::CapExceeded { order, cap: TABLE_ORDER_CAP });
        }
        let n_root = ctx.n();
        let exponent = group.exponent();
        if n_root % exponent != 0 {
            return Err(CharacterError::ExponentMismatch { exponent, n: n_root });
        }
        let g = &*group;
        let k = g.num_classes();
        let reps = g.class_reps().to_vec();
        let sizes: Vec<u64> = (0..k).map(|c| g.class(c).len() as u64).collect();
        let inv_class: Vec<usize> = reps.iter().map(|&r| g.class_of(g.inv(r))).collect();
        let id_class = g.class_of(g.identity());

        let lower = (2.0 * (order as f64).powf(1.5)).ceil() as u64;
        let p = modp::find_prime(n_root as u64, lower.max(order as u64));
        let root_n = modp::pow_mod(modp::primitive_root(p), (p - 1) / n_root as u64, p);

        // c[j][kk][l] = #{x ∈ C_j : x⁻¹ r_l ∈ C_kk}
        let mut c = vec![0u64; k * k * k];
        for (l, &r) in reps.iter().enumerate() {
            for x in 0..order {
                let j = g.class_of(x);
                let kk = g.class_of(g.mul(g.inv(x), r));
                c[(j * k + kk) * k + l] += 1;
            }
        }

        // common eigenvectors of all class matrices through one generic combination
        let mut vectors: Option<Vec<Vec<u64>>> = None;
        for attempt in 0..64u64 {
            let mut m = MatP::zero(k, p);
            for j in 0..k {
                let r = mix(attempt * 1_000_003 + j as u64) % p;
                if r == 0 {
                    continue;
                }
                for kk in 0..k {
                    for l in 0..k {
                        let v = (m.get(kk, l) + r * (c[(j * k + kk) * k + l] % p)) % p;
                        m.set(kk, l, v);
                    }
                }
            }
            let roots = modp::roots(&m.charpoly(), p);
            if roots.len() != k {
                continue;
            }
            let mut vs = Vec::with_capacity(k);
            for lambda in roots {
                let space = m.eigenspace(lambda);
                if space.len() != 1 {
                    break;
                }
                let w = &space[0];
                let s = w[id_class];
                if s == 0 {
                    break;
                }
                let si = modp::inv_mod(s, p);
                vs.push(w.iter().map(|&x| x * si % p).collect::<Vec<u64>>());
            }
            if vs.len() == k {
                vectors = Some(vs);
                break;
            }
        }
        let vectors = vectors.ok_or_else(|| CharacterError::LiftFailure("class matrices not separated".into()))?;

        let max_deg = isqrt(order as u64);
        let mut chars = Vec::with_capacity(k);
        for w in &vectors {
            // χ(1)² = |G| / Σ_l w_l w_{l*} / |C_l|
            let s = (0..k).fold(0u64, |acc, l| {
                (acc + w[l] * w[inv_class[l]] % p * modp::inv_mod(sizes[l] % p, p)) % p
            });
            if s == 0 {
                return Err(CharacterError::LiftFailure("vanishing norm".into()));
            }
            let d2 = order as u64 % p * modp::inv_mod(s, p) % p;
            let d = (1..=max_deg)
                .find(|&d| d * d % p == d2)
                .ok_or_else(|| CharacterError::LiftFailure("degree not a small square".into()))?;
            let modp_values: Vec<u64> =
                (0..k).map(|l| w[l] * (d % p) % p * modp::inv_mod(sizes[l] % p, p) % p).collect();
            let mut class_values = Vec::with_capacity(k);
            for &r in &reps {
                let o = g.element_order(r);
                let step = n_root / o;
                let root_o = modp::pow_mod(root_n, step as u64, p);
                let inv_o = modp::inv_mod(o as u64 % p, p);
                let powers: Vec<u64> = {
                    let mut acc = g.identity();
                    (0..o)
                        .map(|_| {
                            let v = modp_values[g.class_of(acc)];
                            acc = g.mul(acc, r);
                            v
                        })
                        .collect()
                };
                let mut terms = Vec::new();
                let mut total = 0u64;
                for t in 0..o {
                    // m_t = o⁻¹ Σ_s χ(r^s) ζ_o^{−ts}
                    let base = modp::pow_mod(root_o, ((o - t) % o) as u64, p);
                    let mut zpow = 1u64;
                    let mut sum = 0u64;
                    for &v in &powers {
                        sum = (sum + v * zpow) % p;
                        zpow = zpow * base % p;
                    }
                    let mt = sum * inv_o % p;
                    if mt > d {
                        return Err(CharacterError::LiftFailure(format!("multiplicity {mt} exceeds degree {d}")));
                    }
                    total += mt;
                    terms.push(((t * step) as u32, mt as u32));
                }
                if total != d {
                    return Err(CharacterError::LiftFailure("multiplicities do not sum to the degree".into()));
                }
                class_values.push(RootSum::from_terms(terms));
            }
            chars.push(Character { degree: d as u32, class_values });
        }
        chars.sort();
        let table = CharacterTable { group, n: n_root as u32, chars };
        table.verify(ctx)?;
        Ok(table)
    }

    /// Row and column orthogonality plus `Σ deg² = |G|`, exactly.
    pub fn verify(&self, ctx: &Arc<CycloContext>) -> Result<(), CharacterError> {
        let g = &*self.group;
        let k = g.num_classes();
        let n = self.n as usize;
        let sizes: Vec<i64> = (0..k).map(|c| g.class(c).len() as i64).collect();
        let deg_sum: u64 = self.chars.iter().map(|c| (c.degree as u64).pow(2)).sum();
        if deg_sum != g.order() as u64 || self.chars.len() != k {
            return Err(CharacterError::DegreeSum { got: deg_sum, expected: g.order() as u64 });
        }
        for (i, a) in self.chars.iter().enumerate() {
            for (j, b) in self.chars.iter().enumerate().skip(i) {
                let dense = pair_sum((0..k).map(|l| (&a.class_values[l], &b.class_values[l], sizes[l])), n);
                let expected = if i == j { g.order() as i64 } else { 0 };
                if !dense_equals_int(ctx, &dense, expected) {
                    return Err(CharacterError::Orthogonality { kind: "rows", i, j });
                }
            }
        }
        for l1 in 0..k {
            for l2 in l1..k {
                let dense = pair_sum(self.chars.iter().map(|c| (&c.class_values[l1], &c.class_values[l2], 1)), n);
                let expected = if l1 == l2 { g.order() as i64 / sizes[l1] } else { 0 };
                if !dense_equals_int(ctx, &dense, expected) {
                    return Err(CharacterError::Orthogonality { kind: "columns", i: l1, j: l2 });
                }
            }
        }
        Ok(())
    }

    pub fn group(&self) -> &Arc<FiniteGroup> {
        &self.group
    }

    pub fn root_order(&self) -> u32 {
        self.n
    }

    pub fn len(&self) -> usize {
        self.chars.len()
    }

    pub fn is_empty(&self) -> bool {
        self.chars.is_empty()
    }

    pub fn characters(&self) -> &[Character] {
        &self.chars
    }

    pub fn degrees(&self) -> Vec<u32> {
        self.chars.iter().map(|c| c.degree).collect()
    }

    /// `χ_i(g)`.
    pub fn value(&self, i: usize, g: usize) -> &RootSum {
        &self.chars[i].class_values[self.group.class_of(g)]
    }
}

/// `E = C ×_β Z/m'` with `(x,i)(y,j) = (xy, i + j + β(x,y)/s)`, stored at `i·|C| + x`.
#[derive(Clone, Debug)]
pub struct CentralExtension {
    base: Arc<FiniteGroup>,
    modulus: u64,
    scale: u64,
    ext: Arc<FiniteGroup>,
}

impl CentralExtension {
    /// Builds and validates the extension; `m'` is the order of the subgroup
    /// of `Z/m` generated by the values of `β`.
    pub fn new(base: Arc<FiniteGroup>, beta: &Cochain2) -> Result<Self, CharacterError> {
        let n = base.order();
        assert_eq!(beta.n, n, "cochain size mismatch");
        if let Some(t) = beta.cocycle_violation(&base) {
            return Err(CharacterError::NotACocycle(t));
        }
        let e = base.identity();
        for x in 0..n {
            if beta.get(e, x) != 0 || beta.get(x, e) != 0 {
                return Err(CharacterError::NotACocycle((e, x, e)));
            }
        }
        let m = beta.modulus;
        let scale = beta.dlog.iter().fold(m, |acc, &v| acc.gcd(&v));
        let mp = m / scale;
        let size = n * mp as usize;
        if size > TABLE_ORDER_CAP {
            return Err(CharacterError::CapExceeded { order: size, cap: TABLE_ORDER_CAP });
        }
        let mut table = vec![vec![0usize; size]; size];
        for i in 0..mp as usize {
            for x in 0..n {
                for j in 0..mp as usize {
                    for y in 0..n {
                        let z = (i + j + (beta.get(x, y) / scale) as usize) % mp as usize;
                        table[i * n + x][j * n + y] = z * n + base.mul(x, y);
                    }
                }
            }
        }
        let ext = FiniteGroup::from_mult_table(&table, format!("{}~{}", base.name(), mp))?;
        Ok(CentralExtension { base, modulus: mp, scale, ext: Arc::new(ext) })
    }

    pub fn base(&self) -> &Arc<FiniteGroup> {
        &self.base
    }

    pub fn group(&self) -> &Arc<FiniteGroup> {
        &self.ext
    }

    /// `m'`.
    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    /// `m / m'`: every value of `β` is a multiple of it.
    pub fn scale(&self) -> u64 {
        self.scale
    }

    /// Index of `(x, 0)`.
    pub fn section(&self, x: usize) -> usize {
        x
    }

    /// Index of the central generator `(e, 1)`.
    pub fn central_generator(&self) -> usize {
        if self.modulus == 1 {
            0
        } else {
            self.base.order()
        }
    }
}

/// An irreducible `β`-character, valued per element of the base group.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct ProjCharacter {
    pub degree: u32,
    pub values: Vec<RootSum>,
}

impl ProjCharacter {
    /// `χ(x)` in the local indexing of the base group.
    pub fn value(&self, x: usize) -> &RootSum {
        &self.values[x]
    }
}

#[derive(Clone, Debug)]
pub struct ProjCharTable {
    cocycle: Cochain2,
    extension: CentralExtension,
    ext_table: CharacterTable,
    chars: Vec<ProjCharacter>,
}

impl ProjCharTable {
    /// Irreducible `β`-characters of `base`, where `β` has values in `μ_m`
    /// and `m · exponent(base)` divides `N = ctx.n()`.
    pub fn new(base: Arc<FiniteGroup>, beta: Cochain2, ctx: &Arc<CycloContext>) -> Result<Self, CharacterError> {
        let extension = CentralExtension::new(base.clone(), &beta)?;
        let ext_table = CharacterTable::ordinary(extension.group().clone(), ctx)?;
        let n_root = ctx.n() as u64;
        let mp = extension.modulus();
        let z = extension.central_generator();
        let faithful = (n_root / mp) as u32;
        let mut chars: Vec<ProjCharacter> = ext_table
            .characters()
            .iter()
            .enumerate()
            .filter(|(i, c)| mp == 1 || *ext_table.value(*i, z) == RootSum::pure(faithful, c.degree))
            .map(|(i, c)| ProjCharacter {
                degree: c.degree,
                values: (0..base.order()).map(|x| ext_table.value(i, extension.section(x)).clone()).collect(),
            })
            .collect();
        chars.sort();
        let table = ProjCharTable { cocycle: beta, extension, ext_table, chars };
        table.verify(ctx)?;
        Ok(table)
    }

    /// Row orthogonality `Σ_x χ_i(x) conj χ_j(x) = |C| δ_ij`, `χ(e) = deg χ`
    /// and `Σ deg² = |C|`.
    pub fn verify(&self, ctx: &Arc<CycloContext>) -> Result<(), CharacterError> {
        let base = self.extension.base();
        let order = base.order();
        let deg_sum: u64 = self.chars.iter().map(|c| (c.degree as u64).pow(2)).sum();
        if deg_sum != order as u64 {
            return Err(CharacterError::DegreeSum { got: deg_sum, expected: order as u64 });
        }
        let n = ctx.n();
        for (i, a) in self.chars.iter().enumerate() {
            if a.values[base.identity()] != RootSum::pure(0, a.degree) {
                return Err(CharacterError::Orthogonality { kind: "identity value", i, j: i });
            }
            for (j, b) in self.chars.iter().enumerate().skip(i) {
                let dense = pair_sum((0..order).map(|x| (&a.values[x], &b.values[x], 1)), n);
                let expected = if i == j { order as i64 } else { 0 };
                if !dense_equals_int(ctx, &dense, expected) {
                    return Err(CharacterError::Orthogonality { kind: "projective rows", i, j });
                }
            }
        }
        Ok(())
    }

    pub fn base(&self) -> &Arc<FiniteGroup> {
        self.extension.base()
    }

    pub fn cocycle(&self) -> &Cochain2 {
        &self.cocycle
    }

    pub fn extension(&self) -> &CentralExtension {
        &self.extension
    }

    pub fn extension_table(&self) -> &CharacterTable {
        &self.ext_table
    }

    pub fn characters(&self) -> &[ProjCharacter] {
        &self.chars
    }

    pub fn len(&self) -> usize {
        self.chars.len()
    }

    pub fn is_empty(&self) -> bool {
        self.chars.is_empty()
    }

    pub fn degrees(&self) -> Vec<u32> {
        self.chars.iter().map(|c| c.degree).collect()
    }
}

/// All `λ: H → μ_N` with `λ(h₁)λ(h₂) = β(h₁,h₂) λ(h₁h₂)`, as exponent vectors
/// indexed by position in `H`. `beta` gives exponents mod `m`, `m | N`.
pub fn degree_one_characters(
    g: &FiniteGroup,
    h: &Subgroup,
    beta: impl Fn(usize, usize) -> u64,
    m: u64,
    n_root: u64,
) -> Vec<Vec<u64>> {
    assert_eq!(n_root % m, 0, "cocycle modulus must divide the root order");
    let scale = (n_root / m) as i64;
    let mem = h.members();
    let mut sys = LinearSystem::new(n_root, mem.len());
    for (i, &x) in mem.iter().enumerate() {
        for (j, &y) in mem.iter().enumerate() {
            let k = h.position(g.mul(x, y)).expect("subgroup is closed");
            // L(xy) − L(x) − L(y) ≡ −(N/m)·β(x,y)
            sys.add_equation(&[(k, 1), (i, -1), (j, -1)], -scale * beta(x, y) as i64);
        }
    }
    sys.solve().map(|s| s.enumerate()).unwrap_or_default()
}
