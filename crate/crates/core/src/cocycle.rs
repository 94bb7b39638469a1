//! Normalized 3-cocycles `ω: G³ → μ_m` stored as exponent tables, and the
//! derived 2-cochains `β_a`, `η_a`, `γ_a`, `ν_a`.

use std::fmt;
use std::sync::Arc;

use num_integer::Integer;
use thiserror::Error;

use crate::cyclo::RootExp;
use crate::group::{FiniteGroup, Subgroup};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CocycleError {
    #[error("cocycle table has {got} entries, expected {expected}")]
    Shape { expected: usize, got: usize },
    #[error("cocycle modulus must be positive")]
    ZeroModulus,
    #[error("NotACocycle: cocycle condition fails at {0:?}")]
    NotACocycle([usize; 4]),
    #[error("NotNormalized: ω(g, e, l) ≠ 1 at (g, l) = {0:?}")]
    NotNormalized((usize, usize)),
    #[error("2-cochain is not normalized at {0:?}")]
    CochainNotNormalized((usize, usize)),
    #[error("IdentityViolation: {name} fails at {tuple:?}")]
    IdentityViolation { name: &'static str, tuple: Vec<usize> },
    #[error("builtin cyclic cocycle needs 0 ≤ q < n, got n={n}, q={q}")]
    BadBuiltin { n: usize, q: usize },
    #[error("map is not a homomorphism at {0:?}")]
    NotAHomomorphism((usize, usize)),
}

/// `ω(x, y, z) = ζ_m^{dlog[x][y][z]}`.
#[derive(Clone)]
pub struct ThreeCocycle {
    group: Arc<FiniteGroup>,
    modulus: u64,
    dlog: Vec<u32>,
}

impl fmt::Debug for ThreeCocycle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ThreeCocycle({}, m={}, trivial={})", self.group.name(), self.modulus, self.is_trivial())
    }
}

/// Which derived cochain to evaluate.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CochainKind {
    Beta,
    Eta,
    Gamma,
    Nu,
}

/// A 2-cochain on a group of order `n`, as exponents mod `modulus`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cochain2 {
    pub n: usize,
    pub modulus: u64,
    pub dlog: Vec<u64>,
}

impl Cochain2 {
    pub fn get(&self, x: usize, y: usize) -> u64 {
        self.dlog[x * self.n + y]
    }

    pub fn is_trivial(&self) -> bool {
        self.dlog.iter().all(|&e| e == 0)
    }

    /// First `(x, y, z)` where `α(x,y)α(xy,z) = α(x,yz)α(y,z)` fails.
    pub fn cocycle_violation(&self, g: &FiniteGroup) -> Option<(usize, usize, usize)> {
        let m = self.modulus;
        for x in 0..self.n {
            for y in 0..self.n {
                for z in 0..self.n {
                    let lhs = self.get(x, y) + self.get(g.mul(x, y), z);
                    let rhs = self.get(x, g.mul(y, z)) + self.get(y, z);
                    if (lhs + m - rhs % m) % m != 0 {
                        return Some((x, y, z));
                    }
                }
            }
        }
        None
    }
}

/// Counts of exhaustive identity checks that passed.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct IdentityReport {
    pub checks: Vec<(&'static str, usize)>,
}

impl IdentityReport {
    pub fn total(&self) -> usize {
        self.checks.iter().map(|c| c.1).sum()
    }
}

impl ThreeCocycle {
    /// Table without validation; see [`ThreeCocycle::validate`].
    pub fn new_unchecked(group: Arc<FiniteGroup>, modulus: u64, dlog: Vec<u64>) -> Result<Self, CocycleError> {
        let n = group.order();
        if modulus == 0 {
            return Err(CocycleError::ZeroModulus);
        }
        if dlog.len() != n * n * n {
            return Err(CocycleError::Shape { expected: n * n * n, got: dlog.len() });
        }
        let dlog = dlog.into_iter().map(|e| (e % modulus) as u32).collect();
        Ok(ThreeCocycle { group, modulus, dlog })
    }

    pub fn new(group: Arc<FiniteGroup>, modulus: u64, dlog: Vec<u64>) -> Result<Self, CocycleError> {
        let w = Self::new_unchecked(group, modulus, dlog)?;
        w.validate()?;
        Ok(w)
    }

    pub fn trivial(group: Arc<FiniteGroup>) -> Self {
        let n = group.order();
        ThreeCocycle { group, modulus: 1, dlog: vec![0; n * n * n] }
    }

    /// `ω_q(a,b,c) = ζ_n^{q·a·⌊(b+c)/n⌋}` on `Z/n`.
    pub fn builtin_cyclic(n: usize, q: usize) -> Result<Self, CocycleError> {
        if n == 0 || q >= n {
            return Err(CocycleError::BadBuiltin { n, q });
        }
        let group = Arc::new(FiniteGroup::cyclic(n));
        let mut dlog = Vec::with_capacity(n * n * n);
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    dlog.push((q * a * ((b + c) / n) % n) as u64);
                }
            }
        }
        Self::new_unchecked(group, n as u64, dlog)
    }

    /// `δμ(x,y,z) = μ(y,z) − μ(xy,z) + μ(x,yz) − μ(x,y)`.
    pub fn coboundary(group: Arc<FiniteGroup>, modulus: u64, mu: &[u64]) -> Result<Self, CocycleError> {
        let n = group.order();
        if modulus == 0 {
            return Err(CocycleError::ZeroModulus);
        }
        if mu.len() != n * n {
            return Err(CocycleError::Shape { expected: n * n, got: mu.len() });
        }
        let m = modulus as i64;
        let e = group.identity();
        for g in 0..n {
            if mu[e * n + g] % modulus != 0 || mu[g * n + e] % modulus != 0 {
                return Err(CocycleError::CochainNotNormalized((g, e)));
            }
        }
        let mu = |x: usize, y: usize| mu[x * n + y] as i64;
        let mut dlog = Vec::with_capacity(n * n * n);
        for x in 0..n {
            for y in 0..n {
                for z in 0..n {
                    let v = mu(y, z) - mu(group.mul(x, y), z) + mu(x, group.mul(y, z)) - mu(x, y);
                    dlog.push(v.rem_euclid(m) as u64);
                }
            }
        }
        Self::new_unchecked(group, modulus, dlog)
    }

    /// `(ω · ω')` with values in `μ_{lcm(m, m')}`.
    pub fn product(&self, other: &ThreeCocycle) -> Self {
        assert_eq!(self.group.order(), other.group.order(), "cocycles on different groups");
        let m = self.modulus.lcm(&other.modulus);
        let (s1, s2) = (m / self.modulus, m / other.modulus);
        let dlog = self
            .dlog
            .iter()
            .zip(&other.dlog)
            .map(|(&a, &b)| ((a as u64 * s1 + b as u64 * s2) % m) as u32)
            .collect();
        ThreeCocycle { group: self.group.clone(), modulus: m, dlog }
    }

    /// Pullback along a homomorphism `f: G' → G` given as an element map.
    pub fn pullback(&self, source: Arc<FiniteGroup>, f: &[usize]) -> Result<Self, CocycleError> {
        let n = source.order();
        if f.len() != n {
            return Err(CocycleError::Shape { expected: n, got: f.len() });
        }
        for x in 0..n {
            for y in 0..n {
                if f[source.mul(x, y)] != self.group.mul(f[x], f[y]) {
                    return Err(CocycleError::NotAHomomorphism((x, y)));
                }
            }
        }
        let mut dlog = Vec::with_capacity(n * n * n);
        for x in 0..n {
            for y in 0..n {
                for z in 0..n {
                    dlog.push(self.omega(f[x], f[y], f[z]));
                }
            }
        }
        Self::new_unchecked(source, self.modulus, dlog)
    }

    pub fn group(&self) -> &Arc<FiniteGroup> {
        &self.group
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    pub fn dlog_table(&self) -> Vec<u64> {
        self.dlog.iter().map(|&e| e as u64).collect()
    }

    pub fn is_trivial(&self) -> bool {
        self.dlog.iter().all(|&e| e == 0)
    }

    /// Exponent of `ω(x, y, z)`.
    pub fn omega(&self, x: usize, y: usize, z: usize) -> u64 {
        let n = self.group.order();
        self.dlog[(x * n + y) * n + z] as u64
    }

    /// Checks normalization and the 3-cocycle condition on all quadruples.
    pub fn validate(&self) -> Result<(), CocycleError> {
        let g = &*self.group;
        let n = g.order();
        let e = g.identity();
        for x in 0..n {
            for l in 0..n {
                if self.omega(x, e, l) != 0 {
                    return Err(CocycleError::NotNormalized((x, l)));
                }
            }
        }
        let m = self.modulus;
        for g1 in 0..n {
            for g2 in 0..n {
                let g12 = g.mul(g1, g2);
                for g3 in 0..n {
                    let g23 = g.mul(g2, g3);
                    let w123 = self.omega(g1, g2, g3);
                    for g4 in 0..n {
                        let lhs = self.omega(g2, g3, g4) + self.omega(g1, g23, g4) + w123;
                        let rhs = self.omega(g12, g3, g4) + self.omega(g1, g2, g.mul(g3, g4));
                        if (lhs + 2 * m - rhs) % m != 0 {
                            return Err(CocycleError::NotACocycle([g1, g2, g3, g4]));
                        }
                    }
                }
            }
        }
        Ok(())
    }

    fn quot(&self, a: u64, b: u64, c: u64) -> u64 {
        let m = self.modulus;
        (a + b + m - c) % m
    }

    /// `β_a(x,y) = ω(a,x,y)ω(x,y,y⁻¹x⁻¹axy)/ω(x,x⁻¹ax,y)`, as an exponent mod m.
    pub fn beta_exp(&self, a: usize, x: usize, y: usize) -> u64 {
        let g = &*self.group;
        let xy = g.mul(x, y);
        let t = g.conj(g.inv(xy), a);
        let s = g.conj(g.inv(x), a);
        self.quot(self.omega(a, x, y), self.omega(x, y, t), self.omega(x, s, y))
    }

    /// `η_a(x,y) = ω(x,y,a)ω(xyay⁻¹x⁻¹,x,y)/ω(x,yay⁻¹,y)`.
    pub fn eta_exp(&self, a: usize, x: usize, y: usize) -> u64 {
        let g = &*self.group;
        let t = g.conj(g.mul(x, y), a);
        let s = g.conj(y, a);
        self.quot(self.omega(x, y, a), self.omega(t, x, y), self.omega(x, s, y))
    }

    /// `γ_a(x,y) = ω(x,y,a)ω(a,a⁻¹xa,a⁻¹ya)/ω(x,a,a⁻¹ya)`.
    pub fn gamma_exp(&self, a: usize, x: usize, y: usize) -> u64 {
        let g = &*self.group;
        let ai = g.inv(a);
        let (xa, ya) = (g.conj(ai, x), g.conj(ai, y));
        self.quot(self.omega(x, y, a), self.omega(a, xa, ya), self.omega(x, a, ya))
    }

    /// `ν_a(x,y) = ω(axa⁻¹,aya⁻¹,a)ω(a,x,y)/ω(axa⁻¹,a,y)`.
    pub fn nu_exp(&self, a: usize, x: usize, y: usize) -> u64 {
        let g = &*self.group;
        let (xa, ya) = (g.conj(a, x), g.conj(a, y));
        self.quot(self.omega(xa, ya, a), self.omega(a, x, y), self.omega(xa, a, y))
    }

    pub fn cochain_exp(&self, kind: CochainKind, a: usize, x: usize, y: usize) -> u64 {
        match kind {
            CochainKind::Beta => self.beta_exp(a, x, y),
            CochainKind::Eta => self.eta_exp(a, x, y),
            CochainKind::Gamma => self.gamma_exp(a, x, y),
            CochainKind::Nu => self.nu_exp(a, x, y),
        }
    }

    pub fn beta(&self, a: usize, x: usize, y: usize) -> RootExp {
        RootExp::new(self.beta_exp(a, x, y) as i64, self.modulus)
    }

    pub fn eta(&self, a: usize, x: usize, y: usize) -> RootExp {
        RootExp::new(self.eta_exp(a, x, y) as i64, self.modulus)
    }

    pub fn gamma(&self, a: usize, x: usize, y: usize) -> RootExp {
        RootExp::new(self.gamma_exp(a, x, y) as i64, self.modulus)
    }

    pub fn nu(&self, a: usize, x: usize, y: usize) -> RootExp {
        RootExp::new(self.nu_exp(a, x, y) as i64, self.modulus)
    }

    /// `β_a` restricted to a subgroup, in the subgroup's local indexing.
    pub fn beta_on(&self, a: usize, s: &Subgroup) -> Cochain2 {
        let mem = s.members();
        let n = mem.len();
        let mut dlog = Vec::with_capacity(n * n);
        for &x in mem {
            for &y in mem {
                dlog.push(self.beta_exp(a, x, y));
            }
        }
        Cochain2 { n, modulus: self.modulus, dlog }
    }

    /// Exhaustive check of the derived-cochain identities; first violation wins.
    pub fn check_identities(&self) -> Result<IdentityReport, CocycleError> {
        let g = &*self.group;
        let n = g.order();
        let m = self.modulus;
        let zero = |v: u64| v % m == 0;
        let sub = |a: u64, b: u64| (a % m + m - b % m) % m;
        let mut report = IdentityReport::default();
        let fail = |name: &'static str, tuple: Vec<usize>| Err(CocycleError::IdentityViolation { name, tuple });

        // β_a(x,y)β_a(xy,z) = β_a(x,yz)β_{x⁻¹ax}(y,z)
        let mut count = 0;
        for a in 0..n {
            for x in 0..n {
                let xa = g.conj(g.inv(x), a);
                for y in 0..n {
                    let xy = g.mul(x, y);
                    for z in 0..n {
                        let lhs = self.beta_exp(a, x, y) + self.beta_exp(a, xy, z);
                        let rhs = self.beta_exp(a, x, g.mul(y, z)) + self.beta_exp(xa, y, z);
                        if !zero(sub(lhs, rhs)) {
                            return fail("beta relation", vec![a, x, y, z]);
                        }
                        count += 1;
                    }
                }
            }
        }
        report.checks.push(("beta relation", count));

        // β_a = η_a = γ_a = ν_a on C_G(a), and β_a is a 2-cocycle there
        let mut count = 0;
        for a in 0..n {
            let c = g.element_centralizer(a);
            for &x in c.members() {
                for &y in c.members() {
                    let b = self.beta_exp(a, x, y);
                    for (name, v) in [
                        ("eta agrees with beta on centralizer", self.eta_exp(a, x, y)),
                        ("gamma agrees with beta on centralizer", self.gamma_exp(a, x, y)),
                        ("nu agrees with beta on centralizer", self.nu_exp(a, x, y)),
                    ] {
                        if v != b {
                            return fail(name, vec![a, x, y]);
                        }
                    }
                    count += 1;
                }
            }
            if let Some((x, y, z)) = self.beta_on(a, &c).cocycle_violation(&g.subgroup_as_group(&c, "C")) {
                let mem = c.members();
                return fail("beta restricted to centralizer is a 2-cocycle", vec![a, mem[x], mem[y], mem[z]]);
            }
        }
        report.checks.push(("four cochains agree on centralizers", count));

        // γ_{ab}(x,y)/(γ_b(a⁻¹xa,a⁻¹ya)γ_a(x,y)) = β_x(a,b)β_y(a,b)/β_{xy}(a,b)
        // ν_{ab}(x,y)/(ν_a(bxb⁻¹,byb⁻¹)ν_b(x,y)) = η_x(a,b)η_y(a,b)/η_{xy}(a,b)
        let mut count = 0;
        for a in 0..n {
            let ai = g.inv(a);
            for b in 0..n {
                let ab = g.mul(a, b);
                for x in 0..n {
                    for y in 0..n {
                        let xy = g.mul(x, y);
                        let lhs = sub(self.gamma_exp(ab, x, y), self.gamma_exp(b, g.conj(ai, x), g.conj(ai, y)) + self.gamma_exp(a, x, y));
                        let rhs = sub(self.beta_exp(x, a, b) + self.beta_exp(y, a, b), self.beta_exp(xy, a, b));
                        if lhs != rhs {
                            return fail("gamma-beta relation", vec![a, b, x, y]);
                        }
                        let lhs = sub(self.nu_exp(ab, x, y), self.nu_exp(a, g.conj(b, x), g.conj(b, y)) + self.nu_exp(b, x, y));
                        let rhs = sub(self.eta_exp(x, a, b) + self.eta_exp(y, a, b), self.eta_exp(xy, a, b));
                        if lhs != rhs {
                            return fail("nu-eta relation", vec![a, b, x, y]);
                        }
                        count += 1;
                    }
                }
            }
        }
        report.checks.push(("gamma-beta and nu-eta relations", count));

        let mut count = 0;
        for h in 0..n {
            for k in 0..n {
                if !g.commute(h, k) {
                    continue;
                }
                for x in 0..n {
                    let xi = g.inv(x);
                    // (i)
                    let c = g.conj(x, h);
                    let lhs = sub(self.nu_exp(x, h, k), self.nu_exp(x, k, h));
                    let rhs = sub(self.beta_exp(c, x, xi), self.beta_exp(c, x, k) + self.beta_exp(c, g.mul(x, k), xi));
                    if lhs != rhs {
                        return fail("nu-beta identity (i)", vec![x, h, k]);
                    }
                    // (ii)
                    let (hx, kx) = (g.conj(xi, h), g.conj(xi, k));
                    let lhs = sub(self.nu_exp(x, hx, kx), self.nu_exp(x, kx, hx));
                    let rhs = sub(self.nu_exp(xi, k, h), self.nu_exp(xi, h, k));
                    if lhs != rhs {
                        return fail("nu-beta identity (ii)", vec![x, h, k]);
                    }
                    // (iii) with y = x, needing h to commute with yky⁻¹ as well
                    let y = x;
                    let yi = xi;
                    if !g.commute(h, g.conj(y, k)) {
                        count += 1;
                        continue;
                    }
                    let lhs = sub(self.beta_exp(k, yi, y), self.beta_exp(k, yi, h) + self.beta_exp(k, g.mul(yi, h), y));
                    let rhs = sub(self.beta_exp(h, y, yi), self.beta_exp(h, y, k) + self.beta_exp(h, g.mul(y, k), yi));
                    if lhs != rhs {
                        return fail("nu-beta identity (iii)", vec![y, h, k]);
                    }
                    count += 1;
                }
            }
        }
        report.checks.push(("nu-beta identity", count));
        Ok(report)
    }
}
