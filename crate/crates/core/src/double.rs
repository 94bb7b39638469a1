//! Simple objects, twists and centralization in `Rep(D^ω(G))`, plus the
//! untwisted S-matrix and Verlinde fusion rules.

use std::collections::HashMap;
use std::sync::Arc;

use num_bigint::BigInt;
use num_rational::BigRational;
use rayon::prelude::*;
use thiserror::Error;

use crate::characters::{CharacterError, ProjCharTable};
use crate::cocycle::{CocycleError, ThreeCocycle};
use crate::cyclo::{Cyclo, CycloContext, RootSum};
use crate::group::{FiniteGroup, Subgroup};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum DoubleError {
    #[error(transparent)]
    Cocycle(#[from] CocycleError),
    #[error(transparent)]
    Character(#[from] CharacterError),
    #[error("cocycle lives on a group of order {cocycle}, expected {group}")]
    GroupMismatch { group: usize, cocycle: usize },
    #[error("twist of ({a}, χ_{index}) is not a root of unity")]
    TwistNotPure { a: usize, index: usize },
    #[error("the S-matrix formula needs a trivial cocycle")]
    TwistedSMatrix,
    #[error("VerlindeNonInteger: N_{{{i}{j}}}^{k} = {value}")]
    VerlindeNonInteger { i: usize, j: usize, k: usize, value: String },
    #[error("simple set has no unique dual for {0}")]
    NoDual(usize),
}

/// `(a, χ)` with `a` a class representative and `χ` an irreducible
/// `β_a`-character of `C_G(a)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SimpleObject {
    pub rep: usize,
    pub class_id: usize,
    pub char_index: usize,
    pub degree: u32,
    /// `|K_a| · deg χ`.
    pub dim: u64,
    /// `θ = ζ_N^twist_exp`.
    pub twist_exp: u32,
}

/// The simple objects Γ of `Rep(D^ω(G))` with the data every other module reads.
pub struct TwistedDouble {
    group: Arc<FiniteGroup>,
    cocycle: ThreeCocycle,
    ctx: Arc<CycloContext>,
    tables: Vec<ProjCharTable>,
    simples: Vec<SimpleObject>,
    index: HashMap<(usize, usize), usize>,
}

/// S, T, Verlinde fusion and duals of the untwisted double.
#[derive(Clone, Debug)]
pub struct ModularData {
    pub s: Vec<Vec<Cyclo>>,
    pub t: Vec<Cyclo>,
    size: usize,
    fusion: Vec<u32>,
    pub duals: Vec<usize>,
}

impl ModularData {
    /// `N_{ij}^k`.
    pub fn fusion(&self, i: usize, j: usize, k: usize) -> u32 {
        self.fusion[(i * self.size + j) * self.size + k]
    }

    pub fn size(&self) -> usize {
        self.size
    }

    /// `{k : N_{ij}^k > 0}`.
    pub fn constituents(&self, i: usize, j: usize) -> impl Iterator<Item = usize> + '_ {
        (0..self.size).filter(move |&k| self.fusion(i, j, k) > 0)
    }
}

impl TwistedDouble {
    pub fn new(cocycle: ThreeCocycle) -> Result<Self, DoubleError> {
        cocycle.validate()?;
        let group = cocycle.group().clone();
        let g = &*group;
        let n_root = cocycle.modulus() as usize * g.order();
        let ctx = CycloContext::new(n_root);
        let class_ids: Vec<usize> = (0..g.num_classes()).collect();
        let tables = class_ids
            .par_iter()
            .map(|&c| {
                let a = g.class_reps()[c];
                let cent = g.class_centralizer(c);
                let base = Arc::new(g.subgroup_as_group(cent, format!("C({a})")));
                ProjCharTable::new(base, cocycle.beta_on(a, cent), &ctx)
            })
            .collect::<Result<Vec<_>, _>>()?;
        let mut simples = Vec::new();
        let mut index = HashMap::new();
        for (c, table) in tables.iter().enumerate() {
            let a = g.class_reps()[c];
            let cent = g.class_centralizer(c);
            let pos_a = cent.position(a).expect("a centralizes itself");
            for (i, ch) in table.characters().iter().enumerate() {
                let twist_exp = ch
                    .value(pos_a)
                    .pure_exponent()
                    .ok_or(DoubleError::TwistNotPure { a, index: i })?;
                index.insert((a, i), simples.len());
                simples.push(SimpleObject {
                    rep: a,
                    class_id: c,
                    char_index: i,
                    degree: ch.degree,
                    dim: g.class(c).len() as u64 * ch.degree as u64,
                    twist_exp,
                });
            }
        }
        Ok(TwistedDouble { group, cocycle, ctx, tables, simples, index })
    }

    pub fn untwisted(group: Arc<FiniteGroup>) -> Result<Self, DoubleError> {
        Self::new(ThreeCocycle::trivial(group))
    }

    pub fn group(&self) -> &Arc<FiniteGroup> {
        &self.group
    }

    pub fn cocycle(&self) -> &ThreeCocycle {
        &self.cocycle
    }

    pub fn is_untwisted(&self) -> bool {
        self.cocycle.is_trivial()
    }

    pub fn context(&self) -> &Arc<CycloContext> {
        &self.ctx
    }

    /// `N = m·|G|`.
    pub fn root_order(&self) -> u64 {
        self.ctx.n() as u64
    }

    /// `N / m`: converts cocycle exponents into exponents of `ζ_N`.
    pub fn cocycle_scale(&self) -> u64 {
        self.root_order() / self.cocycle.modulus()
    }

    pub fn simples(&self) -> &[SimpleObject] {
        &self.simples
    }

    pub fn len(&self) -> usize {
        self.simples.len()
    }

    pub fn is_empty(&self) -> bool {
        self.simples.is_empty()
    }

    pub fn simple(&self, i: usize) -> &SimpleObject {
        &self.simples[i]
    }

    /// Index of `(a, χ_i)`.
    pub fn index_of(&self, rep: usize, char_index: usize) -> Option<usize> {
        self.index.get(&(rep, char_index)).copied()
    }

    /// The projective table of `C_G(a)` for the class with id `class_id`.
    pub fn table(&self, class_id: usize) -> &ProjCharTable {
        &self.tables[class_id]
    }

    pub fn centralizer(&self, i: usize) -> &Subgroup {
        self.group.class_centralizer(self.simples[i].class_id)
    }

    /// `χ(g)` for `g ∈ C_G(a)` (global element index).
    pub fn char_value(&self, i: usize, g: usize) -> &RootSum {
        let s = &self.simples[i];
        let pos = self.centralizer(i).position(g).expect("argument must centralize the representative");
        self.tables[s.class_id].characters()[s.char_index].value(pos)
    }

    /// `β_a(x,y)` as an exponent of `ζ_N`.
    pub fn beta_n(&self, a: usize, x: usize, y: usize) -> u64 {
        self.cocycle.beta_exp(a, x, y) * self.cocycle_scale()
    }

    pub fn dim(&self, i: usize) -> u64 {
        self.simples[i].dim
    }

    /// `θ(a, χ) = χ(a) / deg χ`.
    pub fn twist(&self, i: usize) -> Cyclo {
        Cyclo::root(&self.ctx, self.simples[i].twist_exp as usize)
    }

    /// `Σ d(X)²` over all of Γ.
    pub fn total_dim(&self) -> u64 {
        self.simples.iter().map(|s| s.dim * s.dim).sum()
    }

    /// `Σ θ(X) d(X)²` over a set of simples.
    pub fn gauss_sum_direct(&self, set: &[usize]) -> Cyclo {
        let mut dense = vec![0i64; self.ctx.n()];
        for &i in set {
            let s = &self.simples[i];
            dense[s.twist_exp as usize] += (s.dim * s.dim) as i64;
        }
        Cyclo::from_dense_exponents(&self.ctx, &dense)
    }

    /// Centralization: `K_a`, `K_b` commute elementwise and the
    /// scalar identity holds for all `x, y ∈ G`.
    pub fn centralize(&self, i: usize, j: usize) -> bool {
        let g = &*self.group;
        let (si, sj) = (&self.simples[i], &self.simples[j]);
        let (a, b) = (si.rep, sj.rep);
        let (ka, kb) = (g.class(si.class_id), g.class(sj.class_id));
        if !ka.iter().all(|&u| kb.iter().all(|&v| g.commute(u, v))) {
            return false;
        }
        let n = self.root_order();
        for x in 0..g.order() {
            let xi = g.inv(x);
            let xax = g.conj(xi, a);
            for y in 0..g.order() {
                let yi = g.inv(y);
                let yby = g.conj(yi, b);
                let u = g.conj(x, yby);
                let v = g.conj(y, xax);
                let (Some(e1), Some(e2)) = (self.char_value(i, u).pure_exponent(), self.char_value(j, v).pure_exponent())
                else {
                    return false;
                };
                let num = self.beta_n(a, x, yby)
                    + self.beta_n(a, g.mul(x, yby), xi)
                    + self.beta_n(b, y, xax)
                    + self.beta_n(b, g.mul(y, xax), yi);
                let den = self.beta_n(a, x, xi) + self.beta_n(b, y, yi);
                if (num + e1 as u64 + e2 as u64 + 2 * n - den % n) % n != 0 {
                    return false;
                }
            }
        }
        true
    }

    /// `S((a,χ),(b,χ'))` from the untwisted formula.
    pub fn s_entry(&self, i: usize, j: usize) -> Result<Cyclo, DoubleError> {
        if !self.is_untwisted() {
            return Err(DoubleError::TwistedSMatrix);
        }
        let g = &*self.group;
        let (a, b) = (self.simples[i].rep, self.simples[j].rep);
        let n = self.ctx.n() as u32;
        let mut dense = vec![0i64; n as usize];
        for x in 0..g.order() {
            let gbg = g.conj(x, b);
            if !g.commute(a, gbg) {
                continue;
            }
            let gag = g.conj(g.inv(x), a);
            let chi = self.char_value(i, gbg).conj(n);
            chi.accumulate_product(self.char_value(j, gag), true, 1, &mut dense);
        }
        let ca = self.centralizer(i).len() as i64;
        let cb = self.centralizer(j).len() as i64;
        let factor = BigRational::new(BigInt::from(g.order() as i64), BigInt::from(ca * cb));
        Ok(Cyclo::from_dense_exponents(&self.ctx, &dense).scale(&factor))
    }

    /// Untwisted modular data with Verlinde fusion.
    pub fn modular_data(&self) -> Result<ModularData, DoubleError> {
        if !self.is_untwisted() {
            return Err(DoubleError::TwistedSMatrix);
        }
        let size = self.len();
        let s: Vec<Vec<Cyclo>> = (0..size)
            .into_par_iter()
            .map(|i| (0..size).map(|j| self.s_entry(i, j)).collect::<Result<Vec<_>, _>>())
            .collect::<Result<_, _>>()?;
        let t: Vec<Cyclo> = (0..size).map(|i| self.twist(i)).collect();
        let g2 = (self.group.order() * self.group.order()) as i64;
        let ctx = &self.ctx;
        // A_{is} = S_is / (S_0s · |G|²)
        let a: Vec<Vec<Cyclo>> = (0..size)
            .map(|i| {
                (0..size)
                    .map(|sidx| {
                        let d = BigRational::new(BigInt::from(1), BigInt::from(self.dim(sidx) as i64 * g2));
                        s[i][sidx].scale(&d)
                    })
                    .collect()
            })
            .collect();
        let sc: Vec<Vec<Cyclo>> = s.iter().map(|row| row.iter().map(Cyclo::conj).collect()).collect();
        let rows: Vec<Vec<u32>> = (0..size)
            .into_par_iter()
            .map(|i| {
                let mut out = vec![0u32; size * size];
                for j in 0..size {
                    let prod: Vec<Cyclo> = (0..size).map(|sidx| &a[i][sidx] * &s[j][sidx]).collect();
                    for k in 0..size {
                        let v = (0..size).fold(Cyclo::zero(ctx), |acc, sidx| acc + &prod[sidx] * &sc[k][sidx]);
                        match v.as_integer().and_then(|z| u32::try_from(z).ok()) {
                            Some(z) => out[j * size + k] = z,
                            None => {
                                return Err(DoubleError::VerlindeNonInteger { i, j, k, value: v.to_string() });
                            }
                        }
                    }
                }
                Ok(out)
            })
            .collect::<Result<_, _>>()?;
        let fusion: Vec<u32> = rows.into_iter().flatten().collect();
        let mut duals = Vec::with_capacity(size);
        for i in 0..size {
            let ds: Vec<usize> = (0..size).filter(|&j| fusion[(i * size + j) * size] == 1).collect();
            match ds.as_slice() {
                [d] => duals.push(*d),
                _ => return Err(DoubleError::NoDual(i)),
            }
        }
        Ok(ModularData { s, t, size, fusion, duals })
    }

    /// `|S(X,Y)| = d(X)d(Y)`, decided through `|S|²`.
    pub fn magnitude_centralize(&self, i: usize, j: usize) -> Result<bool, DoubleError> {
        let s = self.s_entry(i, j)?;
        let dd = (self.dim(i) * self.dim(j)) as i64;
        Ok(s.norm_squared() == Cyclo::from_int(&self.ctx, dd * dd))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn untwisted(g: FiniteGroup) -> TwistedDouble {
        TwistedDouble::untwisted(Arc::new(g)).unwrap()
    }

    #[test]
    fn toric_code() {
        let d = untwisted(FiniteGroup::cyclic(2));
        assert_eq!(d.len(), 4);
        assert!(d.simples().iter().all(|s| s.dim == 1));
        let ctx = d.context().clone();
        let one = Cyclo::one(&ctx);
        assert_eq!(d.twist(0), one);
        // (1, sign) is the fermion
        let f = d.index_of(1, 1).unwrap();
        assert_eq!(d.twist(f), -&one);
        let md = d.modular_data().unwrap();
        let expected = [[1, 1, 1, 1], [1, 1, -1, -1], [1, -1, 1, -1], [1, -1, -1, 1]];
        for i in 0..4 {
            for j in 0..4 {
                assert_eq!(md.s[i][j], Cyclo::from_int(&ctx, expected[i][j]));
            }
        }
        // e = (0, sign), m = (1, trivial) braid nontrivially
        let e = d.index_of(0, 1).unwrap();
        let m = d.index_of(1, 0).unwrap();
        assert!(!d.centralize(e, m));
        assert!(d.magnitude_centralize(e, m).unwrap());
        assert!((0..4).all(|j| d.centralize(0, j)));
        assert_eq!(md.duals, vec![0, 1, 2, 3]);
    }

    #[test]
    fn semion_twists() {
        let w = ThreeCocycle::builtin_cyclic(2, 1).unwrap();
        let d = TwistedDouble::new(w).unwrap();
        assert_eq!(d.len(), 4);
        assert!(d.simples().iter().all(|s| s.dim == 1));
        let ctx = d.context().clone();
        let i = Cyclo::root(&ctx, 1);
        let s = d.index_of(1, 0).unwrap();
        assert_eq!(d.twist(s), i);
        assert_eq!(d.twist(d.index_of(1, 1).unwrap()), i.conj());
        assert_eq!(d.total_dim(), 4);
        assert!(d.modular_data().is_err());
        let tau = d.gauss_sum_direct(&(0..4).collect::<Vec<_>>());
        assert_eq!(tau, Cyclo::from_int(&ctx, 2));
    }

    #[test]
    fn s3_double() {
        let d = untwisted(FiniteGroup::symmetric(3));
        let dims: Vec<u64> = d.simples().iter().map(|s| s.dim).collect();
        assert_eq!(dims, vec![1, 1, 2, 3, 3, 2, 2, 2]);
        assert_eq!(d.total_dim(), 36);
        let md = d.modular_data().unwrap();
        let n = d.len();
        let ctx = d.context();
        for i in 0..n {
            assert_eq!(md.s[0][i], Cyclo::from_int(ctx, dims[i] as i64));
            for j in 0..n {
                assert_eq!(md.s[i][j], md.s[j][i]);
                let v = (0..n).fold(Cyclo::zero(ctx), |acc, k| acc + &md.s[i][k] * &md.s[j][k].conj());
                let expected = if i == j { 36 } else { 0 };
                assert_eq!(v, Cyclo::from_int(ctx, expected));
                assert_eq!(d.centralize(i, j), md.s[i][j] == Cyclo::from_int(ctx, (dims[i] * dims[j]) as i64));
            }
        }
        // fusion tensor laws
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    assert_eq!(md.fusion(i, j, k), md.fusion(j, i, k));
                    for l in 0..n {
                        let lhs: u32 = (0..n).map(|m| md.fusion(i, j, m) * md.fusion(m, k, l)).sum();
                        let rhs: u32 = (0..n).map(|m| md.fusion(j, k, m) * md.fusion(i, m, l)).sum();
                        assert_eq!(lhs, rhs);
                    }
                }
                let dim_sum: u64 = md.constituents(i, j).map(|k| md.fusion(i, j, k) as u64 * dims[k]).sum();
                assert_eq!(dim_sum, dims[i] * dims[j]);
            }
        }
        let tau = d.gauss_sum_direct(&(0..n).collect::<Vec<_>>());
        assert_eq!(tau, Cyclo::from_int(ctx, 6));
    }

    #[test]
    fn magnitude_note_special_case() {
        // (e, χ) vs (b, χ'): |S| = d d' iff χ is trivial on [G, b]
        let g = FiniteGroup::symmetric(3);
        let d = untwisted(g.clone());
        for i in (0..d.len()).filter(|&i| d.simple(i).rep == 0) {
            for j in 0..d.len() {
                let b = d.simple(j).rep;
                let comm = g.normal_closure(&(0..6).map(|x| g.commutator(x, b)).collect::<Vec<_>>());
                let deg = d.simple(i).degree;
                let trivial_on = comm.members().iter().all(|&h| *d.char_value(i, h) == RootSum::pure(0, deg));
                assert_eq!(d.magnitude_centralize(i, j).unwrap(), trivial_on);
            }
        }
    }
}
