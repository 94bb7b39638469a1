//! Exact arithmetic in the cyclotomic field `Q(ζ_N)`.
//!
//! Elements are rational polynomials reduced modulo the `N`-th cyclotomic
//! polynomial `Φ_N`, so coefficient equality is field equality. Numerators are
//! arbitrary-precision integers over one common positive denominator.
//!
//! Two lighter representations sit next to [`Cyclo`]:
//! [`RootExp`] (a single root of unity by its discrete log) and [`RootSum`]
//! (a multiset of `N`-th roots of unity, the eigenvalue data of a character
//! value). Both convert into [`Cyclo`] on demand.

use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use num_bigint::BigInt;
use num_complex::Complex64;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CycloError {
    #[error("DivisionByZero")]
    DivisionByZero,
    #[error("expected {expected} coefficients, got {got}")]
    CoefficientCount { expected: usize, got: usize },
    #[error("root of order {order} does not lie in Q(ζ_{n})")]
    OrderMismatch { order: u64, n: usize },
}

/// `Q(ζ_N)` presented as `Q[x]/Φ_N(x)`.
#[derive(Debug)]
pub struct CycloContext {
    n: usize,
    /// Monic `Φ_N`, lowest degree first.
    phi: Vec<i64>,
    /// `x^e mod Φ_N` for `e` in `0..N`.
    pow_table: Vec<Vec<i64>>,
}

fn poly_div_exact(num: &[i64], den: &[i64]) -> Vec<i64> {
    // den monic
    let mut rem = num.to_vec();
    let dd = den.len() - 1;
    let mut quot = vec![0i64; rem.len() - dd];
    for i in (0..quot.len()).rev() {
        let c = rem[i + dd];
        quot[i] = c;
        if c != 0 {
            for (j, &d) in den.iter().enumerate() {
                rem[i + j] -= c * d;
            }
        }
    }
    debug_assert!(rem.iter().all(|&r| r == 0), "inexact cyclotomic division");
    quot
}

/// `Φ_n` with memoization over the divisors of `n`.
pub fn cyclotomic_polynomial(n: usize) -> Vec<i64> {
    fn go(n: usize, memo: &mut HashMap<usize, Vec<i64>>) -> Vec<i64> {
        if let Some(p) = memo.get(&n) {
            return p.clone();
        }
        let mut p = vec![0i64; n + 1];
        p[0] = -1;
        p[n] = 1;
        for d in (1..n).filter(|d| n % d == 0) {
            let phi_d = go(d, memo);
            p = poly_div_exact(&p, &phi_d);
        }
        memo.insert(n, p.clone());
        p
    }
    assert!(n >= 1, "cyclotomic polynomial needs n ≥ 1");
    go(n, &mut HashMap::new())
}

impl CycloContext {
    pub fn new(n: usize) -> Arc<Self> {
        let phi = cyclotomic_polynomial(n);
        let d = phi.len() - 1;
        let mut pow_table = Vec::with_capacity(n);
        let mut cur = vec![0i64; d];
        cur[0] = 1;
        for _ in 0..n {
            pow_table.push(cur.clone());
            // multiply by x and reduce
            let top = cur[d - 1];
            let mut next = vec![0i64; d];
            next[1..d].copy_from_slice(&cur[..d - 1]);
            for j in 0..d {
                next[j] -= top * phi[j];
            }
            cur = next;
        }
        Arc::new(CycloContext { n, phi, pow_table })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// `φ(N)`.
    pub fn degree(&self) -> usize {
        self.phi.len() - 1
    }

    /// Coefficients of `Φ_N`, lowest degree first.
    pub fn phi(&self) -> &[i64] {
        &self.phi
    }

    /// Reduction of `x^e`, exponent taken mod `N`.
    pub fn power(&self, e: usize) -> &[i64] {
        &self.pow_table[e % self.n]
    }
}

/// An element of `Q(ζ_N)`.
#[derive(Clone)]
pub struct Cyclo {
    ctx: Arc<CycloContext>,
    num: Vec<BigInt>,
    den: BigInt,
}

impl fmt::Debug for Cyclo {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Cyclo[{}]({})", self.ctx.n, self)
    }
}

impl PartialEq for Cyclo {
    fn eq(&self, other: &Self) -> bool {
        self.ctx.n == other.ctx.n && self.den == other.den && self.num == other.num
    }
}

impl Eq for Cyclo {}

impl std::hash::Hash for Cyclo {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.ctx.n.hash(state);
        self.num.hash(state);
        self.den.hash(state);
    }
}

impl Cyclo {
    fn normalized(ctx: Arc<CycloContext>, mut num: Vec<BigInt>, mut den: BigInt) -> Self {
        debug_assert!(!den.is_zero());
        if den.is_negative() {
            den = -den;
            for c in &mut num {
                *c = -&*c;
            }
        }
        if num.iter().all(Zero::is_zero) {
            return Cyclo { ctx, num, den: BigInt::one() };
        }
        let g = num.iter().fold(den.clone(), |g, c| g.gcd(c));
        if !g.is_one() {
            for c in &mut num {
                *c = &*c / &g;
            }
            den /= &g;
        }
        Cyclo { ctx, num, den }
    }

    pub fn zero(ctx: &Arc<CycloContext>) -> Self {
        Cyclo { ctx: ctx.clone(), num: vec![BigInt::zero(); ctx.degree()], den: BigInt::one() }
    }

    pub fn one(ctx: &Arc<CycloContext>) -> Self {
        Self::from_int(ctx, 1)
    }

    pub fn from_int(ctx: &Arc<CycloContext>, k: i64) -> Self {
        Self::from_bigint(ctx, BigInt::from(k))
    }

    pub fn from_bigint(ctx: &Arc<CycloContext>, k: BigInt) -> Self {
        let mut z = Self::zero(ctx);
        z.num[0] = k;
        z
    }

    pub fn from_rational(ctx: &Arc<CycloContext>, q: &BigRational) -> Self {
        let mut num = vec![BigInt::zero(); ctx.degree()];
        num[0] = q.numer().clone();
        Self::normalized(ctx.clone(), num, q.denom().clone())
    }

    /// `ζ_N^e`.
    pub fn root(ctx: &Arc<CycloContext>, e: usize) -> Self {
        let num = ctx.power(e).iter().map(|&c| BigInt::from(c)).collect();
        Cyclo { ctx: ctx.clone(), num, den: BigInt::one() }
    }

    /// Builds an element from its reduced coefficient vector.
    pub fn from_coefficients(ctx: &Arc<CycloContext>, coeffs: &[BigRational]) -> Result<Self, CycloError> {
        if coeffs.len() != ctx.degree() {
            return Err(CycloError::CoefficientCount { expected: ctx.degree(), got: coeffs.len() });
        }
        let den = coeffs.iter().fold(BigInt::one(), |l, c| l.lcm(c.denom()));
        let num = coeffs.iter().map(|c| c.numer() * (&den / c.denom())).collect();
        Ok(Self::normalized(ctx.clone(), num, den))
    }

    /// Sum `Σ c_e ζ_N^e` of an unreduced integer vector indexed by exponent.
    pub fn from_dense_exponents(ctx: &Arc<CycloContext>, dense: &[i64]) -> Self {
        let d = ctx.degree();
        let mut acc = vec![0i128; d];
        for (e, &c) in dense.iter().enumerate() {
            if c != 0 {
                for (a, &p) in acc.iter_mut().zip(ctx.power(e)) {
                    *a += c as i128 * p as i128;
                }
            }
        }
        let num = acc.into_iter().map(BigInt::from).collect();
        Self::normalized(ctx.clone(), num, BigInt::one())
    }

    pub fn context(&self) -> &Arc<CycloContext> {
        &self.ctx
    }

    pub fn coefficients(&self) -> Vec<BigRational> {
        self.num
            .iter()
            .map(|c| BigRational::new(c.clone(), self.den.clone()))
            .collect()
    }

    pub fn is_zero(&self) -> bool {
        self.num.iter().all(Zero::is_zero)
    }

    /// The value as a rational number, if it is one.
    pub fn as_rational(&self) -> Option<BigRational> {
        self.num[1..]
            .iter()
            .all(Zero::is_zero)
            .then(|| BigRational::new(self.num[0].clone(), self.den.clone()))
    }

    pub fn as_integer(&self) -> Option<BigInt> {
        self.as_rational().filter(|q| q.is_integer()).map(|q| q.to_integer())
    }

    pub fn is_rational(&self) -> bool {
        self.num[1..].iter().all(Zero::is_zero)
    }

    fn check_same(&self, other: &Cyclo) {
        assert_eq!(self.ctx.n, other.ctx.n, "cyclotomic elements from different fields");
    }

    fn reduce_wide(ctx: &Arc<CycloContext>, wide: Vec<BigInt>, den: BigInt) -> Self {
        let d = ctx.degree();
        let mut out: Vec<BigInt> = wide[..d.min(wide.len())].to_vec();
        out.resize(d, BigInt::zero());
        for (k, c) in wide.iter().enumerate().skip(d) {
            if c.is_zero() {
                continue;
            }
            for (o, &p) in out.iter_mut().zip(ctx.power(k)) {
                if p != 0 {
                    *o += c * p;
                }
            }
        }
        Self::normalized(ctx.clone(), out, den)
    }

    pub fn scale(&self, q: &BigRational) -> Self {
        let num = self.num.iter().map(|c| c * q.numer()).collect();
        Self::normalized(self.ctx.clone(), num, &self.den * q.denom())
    }

    pub fn scale_int(&self, k: i64) -> Self {
        self.scale(&BigRational::from_integer(BigInt::from(k)))
    }

    /// Field automorphism `ζ ↦ ζ^k` for `gcd(k, N) = 1`.
    pub fn galois(&self, k: usize) -> Self {
        let n = self.ctx.n;
        debug_assert_eq!(k.gcd(&n), 1);
        let mut wide = vec![BigInt::zero(); n.max(1)];
        for (i, c) in self.num.iter().enumerate() {
            if !c.is_zero() {
                wide[(i * k) % n] += c;
            }
        }
        // exponents are already < N; reduce all of them through the table
        let d = self.ctx.degree();
        let mut out = vec![BigInt::zero(); d];
        for (e, c) in wide.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            for (o, &p) in out.iter_mut().zip(self.ctx.power(e)) {
                if p != 0 {
                    *o += c * p;
                }
            }
        }
        Self::normalized(self.ctx.clone(), out, self.den.clone())
    }

    /// Complex conjugation `ζ ↦ ζ⁻¹`.
    pub fn conj(&self) -> Self {
        if self.ctx.n <= 2 {
            return self.clone();
        }
        self.galois(self.ctx.n - 1)
    }

    /// `z · conj(z)`, the exact squared modulus.
    pub fn norm_squared(&self) -> Self {
        self * &self.conj()
    }

    /// Multiplicative inverse through the field norm.
    pub fn inv(&self) -> Result<Self, CycloError> {
        if self.is_zero() {
            return Err(CycloError::DivisionByZero);
        }
        let n = self.ctx.n;
        let mut others = Cyclo::one(&self.ctx);
        for k in 2..n.max(2) {
            if k.gcd(&n) == 1 {
                others = &others * &self.galois(k);
            }
        }
        let norm = (self * &others)
            .as_rational()
            .expect("field norm is rational");
        Ok(others.scale(&norm.recip()))
    }

    pub fn div(&self, other: &Cyclo) -> Result<Self, CycloError> {
        Ok(self * &other.inv()?)
    }

    /// Numerical value at `ζ_N = e^{2πi/N}`.
    pub fn to_complex(&self) -> Complex64 {
        let n = self.ctx.n as f64;
        let den = self.den.to_f64().unwrap_or(f64::NAN);
        self.num
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| {
                let angle = std::f64::consts::TAU * i as f64 / n;
                Complex64::from_polar(c.to_f64().unwrap_or(f64::NAN) / den, angle)
            })
            .sum()
    }
}

impl<'a> Add<&'a Cyclo> for &'a Cyclo {
    type Output = Cyclo;
    fn add(self, rhs: &'a Cyclo) -> Cyclo {
        self.check_same(rhs);
        let num = self
            .num
            .iter()
            .zip(&rhs.num)
            .map(|(a, b)| a * &rhs.den + b * &self.den)
            .collect();
        Cyclo::normalized(self.ctx.clone(), num, &self.den * &rhs.den)
    }
}

impl<'a> Sub<&'a Cyclo> for &'a Cyclo {
    type Output = Cyclo;
    fn sub(self, rhs: &'a Cyclo) -> Cyclo {
        self + &(-rhs)
    }
}

impl Neg for &Cyclo {
    type Output = Cyclo;
    fn neg(self) -> Cyclo {
        Cyclo {
            ctx: self.ctx.clone(),
            num: self.num.iter().map(|c| -c).collect(),
            den: self.den.clone(),
        }
    }
}

impl<'a> Mul<&'a Cyclo> for &'a Cyclo {
    type Output = Cyclo;
    fn mul(self, rhs: &'a Cyclo) -> Cyclo {
        self.check_same(rhs);
        let d = self.ctx.degree();
        let mut wide = vec![BigInt::zero(); 2 * d - 1];
        for (i, a) in self.num.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.num.iter().enumerate() {
                if !b.is_zero() {
                    wide[i + j] += a * b;
                }
            }
        }
        Cyclo::reduce_wide(&self.ctx, wide, &self.den * &rhs.den)
    }
}

macro_rules! owned_binop {
    ($tr:ident, $m:ident) => {
        impl $tr<Cyclo> for Cyclo {
            type Output = Cyclo;
            fn $m(self, rhs: Cyclo) -> Cyclo {
                (&self).$m(&rhs)
            }
        }
        impl<'a> $tr<&'a Cyclo> for Cyclo {
            type Output = Cyclo;
            fn $m(self, rhs: &'a Cyclo) -> Cyclo {
                (&self).$m(rhs)
            }
        }
    };
}
owned_binop!(Add, add);
owned_binop!(Sub, sub);
owned_binop!(Mul, mul);

impl Neg for Cyclo {
    type Output = Cyclo;
    fn neg(self) -> Cyclo {
        -&self
    }
}

impl fmt::Display for Cyclo {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, c) in self.num.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let q = BigRational::new(c.clone(), self.den.clone());
            let neg = q.is_negative();
            let mag = q.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            }
            first = false;
            match i {
                0 => write!(f, "{mag}")?,
                _ => {
                    if !mag.is_one() {
                        write!(f, "{mag}*")?;
                    }
                    write!(f, "z{}", self.ctx.n)?;
                    if i > 1 {
                        write!(f, "^{i}")?;
                    }
                }
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

/// A root of unity `ζ_m^e` stored by its exponent.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct RootExp {
    exp: u64,
    modulus: u64,
}

impl RootExp {
    pub fn new(exp: i64, modulus: u64) -> Self {
        RootExp { exp: exp.rem_euclid(modulus as i64) as u64, modulus }
    }

    pub fn one(modulus: u64) -> Self {
        RootExp { exp: 0, modulus }
    }

    pub fn exp(&self) -> u64 {
        self.exp
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    pub fn is_one(&self) -> bool {
        self.exp == 0
    }

    pub fn inv(self) -> Self {
        RootExp::new(-(self.exp as i64), self.modulus)
    }

    /// The same root written over modulus `n`, a multiple of the current one.
    pub fn lift(self, n: u64) -> Result<Self, CycloError> {
        if n % self.modulus != 0 {
            return Err(CycloError::OrderMismatch { order: self.modulus, n: n as usize });
        }
        Ok(RootExp { exp: self.exp * (n / self.modulus), modulus: n })
    }

    pub fn to_cyclo(self, ctx: &Arc<CycloContext>) -> Result<Cyclo, CycloError> {
        let r = self.lift(ctx.n() as u64)?;
        Ok(Cyclo::root(ctx, r.exp as usize))
    }
}

impl Mul for RootExp {
    type Output = RootExp;
    fn mul(self, rhs: RootExp) -> RootExp {
        assert_eq!(self.modulus, rhs.modulus);
        RootExp { exp: (self.exp + rhs.exp) % self.modulus, modulus: self.modulus }
    }
}

/// A multiset of `N`-th roots of unity: `Σ mult · ζ_N^exp`.
///
/// Character values are stored this way (the eigenvalues of the representing
/// matrix), so `|χ(g)| = deg χ` holds exactly when there is a single term.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RootSum {
    /// `(exponent mod N, multiplicity)`, sorted by exponent, multiplicities > 0.
    terms: Vec<(u32, u32)>,
}

impl RootSum {
    pub fn from_terms(mut terms: Vec<(u32, u32)>) -> Self {
        terms.retain(|&(_, m)| m > 0);
        terms.sort_unstable();
        let mut merged: Vec<(u32, u32)> = Vec::with_capacity(terms.len());
        for (e, m) in terms {
            match merged.last_mut() {
                Some(last) if last.0 == e => last.1 += m,
                _ => merged.push((e, m)),
            }
        }
        RootSum { terms: merged }
    }

    /// `mult · ζ_N^exp`.
    pub fn pure(exp: u32, mult: u32) -> Self {
        Self::from_terms(vec![(exp, mult)])
    }

    pub fn terms(&self) -> &[(u32, u32)] {
        &self.terms
    }

    /// Number of roots counted with multiplicity.
    pub fn count(&self) -> u32 {
        self.terms.iter().map(|t| t.1).sum()
    }

    /// `Some(e)` when every root equals `ζ_N^e`.
    pub fn pure_exponent(&self) -> Option<u32> {
        match self.terms.as_slice() {
            [(e, _)] => Some(*e),
            _ => None,
        }
    }

    pub fn conj(&self, n: u32) -> Self {
        Self::from_terms(self.terms.iter().map(|&(e, m)| ((n - e) % n, m)).collect())
    }

    /// Adds `sign · self · other` (optionally conjugating `other`) into a dense
    /// exponent-indexed accumulator of length `N`.
    pub fn accumulate_product(&self, other: &RootSum, conj_other: bool, sign: i64, dense: &mut [i64]) {
        let n = dense.len() as u32;
        for &(a, ma) in &self.terms {
            for &(b, mb) in &other.terms {
                let b = if conj_other { (n - b) % n } else { b };
                dense[((a + b) % n) as usize] += sign * (ma as i64) * (mb as i64);
            }
        }
    }

    pub fn accumulate(&self, scale: i64, dense: &mut [i64]) {
        for &(e, m) in &self.terms {
            dense[e as usize] += scale * m as i64;
        }
    }

    pub fn to_cyclo(&self, ctx: &Arc<CycloContext>) -> Cyclo {
        let mut dense = vec![0i64; ctx.n()];
        self.accumulate(1, &mut dense);
        Cyclo::from_dense_exponents(ctx, &dense)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn int(ctx: &Arc<CycloContext>, k: i64) -> Cyclo {
        Cyclo::from_int(ctx, k)
    }

    /// Product of `(x − ζ^k)` over primitive `k`, evaluated numerically.
    fn phi_numeric(n: usize) -> Vec<f64> {
        let mut poly = vec![Complex64::new(1.0, 0.0)];
        for k in (1..=n).filter(|k| k.gcd(&n) == 1) {
            let r = Complex64::from_polar(1.0, std::f64::consts::TAU * k as f64 / n as f64);
            let mut next = vec![Complex64::new(0.0, 0.0); poly.len() + 1];
            for (i, c) in poly.iter().enumerate() {
                next[i + 1] += c;
                next[i] -= c * r;
            }
            poly = next;
        }
        poly.iter().map(|c| c.re).collect()
    }

    #[test]
    fn small_cyclotomic_polynomials() {
        assert_eq!(cyclotomic_polynomial(1), vec![-1, 1]);
        assert_eq!(cyclotomic_polynomial(2), vec![1, 1]);
        assert_eq!(cyclotomic_polynomial(4), vec![1, 0, 1]);
        assert_eq!(cyclotomic_polynomial(12), vec![1, 0, -1, 0, 1]);
        for n in [1, 3, 5, 6, 8, 9, 12, 15, 24, 30] {
            let exact = cyclotomic_polynomial(n);
            let numeric = phi_numeric(n);
            assert_eq!(exact.len(), numeric.len());
            for (a, b) in exact.iter().zip(&numeric) {
                assert!((*a as f64 - b).abs() < 1e-8, "n={n}");
            }
        }
    }

    #[test]
    fn phi_vanishes_at_zeta() {
        for n in [1, 2, 4, 7, 12, 24, 64] {
            let ctx = CycloContext::new(n);
            let mut acc = Cyclo::zero(&ctx);
            for (i, &c) in ctx.phi().iter().enumerate() {
                acc = acc + Cyclo::root(&ctx, i).scale_int(c);
            }
            assert!(acc.is_zero(), "Φ_{n}(ζ) ≠ 0");
            assert_eq!(Cyclo::root(&ctx, n), Cyclo::one(&ctx));
        }
    }

    #[test]
    fn unit_identities() {
        let ctx = CycloContext::new(12);
        for k in 0..12 {
            assert_eq!(Cyclo::root(&ctx, k) * Cyclo::root(&ctx, 12 - k), Cyclo::one(&ctx));
            assert_eq!(Cyclo::root(&ctx, k).conj(), Cyclo::root(&ctx, (12 - k) % 12));
            assert_eq!(Cyclo::root(&ctx, k).norm_squared(), Cyclo::one(&ctx));
        }
        let c4 = CycloContext::new(4);
        let i = Cyclo::root(&c4, 1);
        let one = Cyclo::one(&c4);
        assert_eq!((&one + &i) * (&one - &i), int(&c4, 2));
        assert_eq!((&one + &i).norm_squared(), int(&c4, 2));
        let c3 = CycloContext::new(3);
        let s = Cyclo::one(&c3) + Cyclo::root(&c3, 1) + Cyclo::root(&c3, 2);
        assert!(s.is_zero());
        assert!(s.norm_squared().is_zero());
        assert_eq!(Cyclo::zero(&c3).inv(), Err(CycloError::DivisionByZero));
    }

    #[test]
    fn roots_sum_to_zero() {
        for n in 2..20 {
            let ctx = CycloContext::new(n);
            let s = (0..n).fold(Cyclo::zero(&ctx), |a, k| a + Cyclo::root(&ctx, k));
            assert!(s.is_zero());
        }
    }

    #[test]
    fn complex_evaluation() {
        let ctx = CycloContext::new(8);
        let z = Cyclo::one(&ctx).to_complex();
        assert!((z - Complex64::new(1.0, 0.0)).norm() < 1e-12);
        let z = Cyclo::root(&ctx, 4).to_complex();
        assert!((z - Complex64::new(-1.0, 0.0)).norm() < 1e-12);
        let z = (Cyclo::one(&ctx) + Cyclo::root(&ctx, 1)).to_complex();
        let h = std::f64::consts::FRAC_1_SQRT_2;
        assert!((z - Complex64::new(1.0 + h, h)).norm() < 1e-12);
    }

    #[test]
    fn coefficient_roundtrip_and_display() {
        let ctx = CycloContext::new(8);
        let z = (Cyclo::root(&ctx, 3).scale_int(3) - Cyclo::one(&ctx)).scale(&BigRational::new(1.into(), 2.into()));
        let back = Cyclo::from_coefficients(&ctx, &z.coefficients()).unwrap();
        assert_eq!(z, back);
        assert_eq!(z.to_string(), "-1/2 + 3/2*z8^3");
        assert!(Cyclo::from_coefficients(&ctx, &[]).is_err());
    }

    #[test]
    fn root_exp_and_root_sum() {
        let ctx = CycloContext::new(12);
        let a = RootExp::new(1, 4);
        let b = RootExp::new(3, 4);
        assert!((a * b).is_one());
        assert_eq!(a.inv(), b);
        assert_eq!(a.to_cyclo(&ctx).unwrap(), Cyclo::root(&ctx, 3));
        assert!(RootExp::new(1, 5).to_cyclo(&ctx).is_err());

        let s = RootSum::from_terms(vec![(3, 1), (0, 2), (3, 1), (5, 0)]);
        assert_eq!(s.terms(), &[(0, 2), (3, 2)]);
        assert_eq!(s.count(), 4);
        assert_eq!(s.pure_exponent(), None);
        assert_eq!(RootSum::pure(7, 3).pure_exponent(), Some(7));
        let expected = Cyclo::from_int(&ctx, 2) + Cyclo::root(&ctx, 3).scale_int(2);
        assert_eq!(s.to_cyclo(&ctx), expected);
        assert_eq!(s.conj(12).to_cyclo(&ctx), expected.conj());
    }

    fn arb_cyclo(n: usize) -> impl Strategy<Value = Vec<(i64, i64)>> {
        let _ = n;
        prop::collection::vec((-5i64..6, 1i64..4), 1..6)
    }

    fn build(ctx: &Arc<CycloContext>, parts: &[(i64, i64)]) -> Cyclo {
        parts.iter().enumerate().fold(Cyclo::zero(ctx), |acc, (i, &(c, d))| {
            acc + Cyclo::root(ctx, (i * 5 + c.unsigned_abs() as usize) % ctx.n())
                .scale(&BigRational::new(c.into(), d.into()))
        })
    }

    proptest! {
        #[test]
        fn field_laws(a in arb_cyclo(15), b in arb_cyclo(15), c in arb_cyclo(15)) {
            let ctx = CycloContext::new(15);
            let (a, b, c) = (build(&ctx, &a), build(&ctx, &b), build(&ctx, &c));
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
            prop_assert_eq!(&a * &b, &b * &a);
            if !a.is_zero() {
                prop_assert_eq!(&a * &a.inv().unwrap(), Cyclo::one(&ctx));
            }
            prop_assert_eq!((&a * &b).conj(), &a.conj() * &b.conj());
        }

        #[test]
        fn norm_squared_matches_float(a in arb_cyclo(24)) {
            let ctx = CycloContext::new(24);
            let a = build(&ctx, &a);
            let exact = a.norm_squared();
            prop_assert_eq!(exact.conj(), exact.clone());
            let float = a.to_complex().norm_sqr();
            prop_assert!((exact.to_complex().re - float).abs() < 1e-9);
            prop_assert!(exact.to_complex().im.abs() < 1e-9);
        }

        #[test]
        fn self_conjugate_rational_part(a in arb_cyclo(7)) {
            let ctx = CycloContext::new(7);
            let a = build(&ctx, &a);
            let r = &a + &a.conj();
            prop_assert_eq!(r.conj(), r.clone());
            prop_assert!(r.to_complex().im.abs() < 1e-9);
        }
    }
}
