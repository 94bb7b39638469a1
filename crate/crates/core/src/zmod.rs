//! Linear systems over the residue ring `Z/N`.
//!
//! A system `A x ≡ b (mod N)` is brought to diagonal form `D = U A V` with
//! unimodular row and column operations (2×2 Bezout steps). Each diagonal
//! entry `d_i` then contributes `gcd(d_i, N)` solutions, each zero column a
//! free `Z/N` parameter, and the full solution set is the coset
//! `x₀ + span(generators)` mapped back through `V`.

use num_integer::Integer;

/// Sparse equation builder for `A x ≡ b (mod N)`.
#[derive(Clone, Debug)]
pub struct LinearSystem {
    modulus: i64,
    cols: usize,
    rows: Vec<Vec<i64>>,
    rhs: Vec<i64>,
}

/// Every solution of a consistent system: `particular + Σ k_i · g_i` with
/// `0 ≤ k_i < order_i`, each choice giving a distinct vector.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SolutionSet {
    pub modulus: u64,
    pub particular: Vec<u64>,
    pub generators: Vec<(Vec<u64>, u64)>,
}

/// `(g, s, u)` with `s·a + u·b = g`, preferring `(a, 1, 0)` when `a | b`
/// so that elimination leaves the pivot line untouched.
fn ext_gcd(a: i64, b: i64) -> (i64, i64, i64) {
    if b % a == 0 {
        return (a, 1, 0);
    }
    let e = a.extended_gcd(&b);
    (e.gcd, e.x, e.y)
}

impl LinearSystem {
    pub fn new(modulus: u64, cols: usize) -> Self {
        assert!(modulus >= 1 && modulus < (1 << 31), "modulus out of range");
        LinearSystem { modulus: modulus as i64, cols, rows: Vec::new(), rhs: Vec::new() }
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn num_equations(&self) -> usize {
        self.rows.len()
    }

    /// Adds `Σ c·x_j ≡ rhs`; repeated indices accumulate.
    pub fn add_equation(&mut self, terms: &[(usize, i64)], rhs: i64) {
        let n = self.modulus;
        let mut row = vec![0i64; self.cols];
        for &(j, c) in terms {
            row[j] = (row[j] + c).rem_euclid(n);
        }
        let rhs = rhs.rem_euclid(n);
        if row.iter().all(|&c| c == 0) && rhs == 0 {
            return;
        }
        self.rows.push(row);
        self.rhs.push(rhs);
    }

    /// Solution set, or `None` when inconsistent.
    pub fn solve(&self) -> Option<SolutionSet> {
        let n = self.modulus;
        let mut rows: Vec<(Vec<i64>, i64)> = self.rows.iter().cloned().zip(self.rhs.iter().copied()).collect();
        rows.sort();
        rows.dedup();
        let (mut a, mut c): (Vec<Vec<i64>>, Vec<i64>) = rows.into_iter().unzip();
        let r = a.len();
        let k = self.cols;
        // v tracks the column operations: x = v · y
        let mut v: Vec<Vec<i64>> = (0..k).map(|i| (0..k).map(|j| i64::from(i == j)).collect()).collect();
        let mut rank = 0;
        while rank < r.min(k) {
            let t = rank;
            let Some((pi, pj)) = (t..r).flat_map(|i| (t..k).map(move |j| (i, j))).find(|&(i, j)| a[i][j] != 0) else {
                break;
            };
            a.swap(t, pi);
            c.swap(t, pi);
            if pj != t {
                for row in a.iter_mut() {
                    row.swap(t, pj);
                }
                for row in v.iter_mut() {
                    row.swap(t, pj);
                }
            }
            loop {
                let mut changed = false;
                for i in t + 1..r {
                    if a[i][t] == 0 {
                        continue;
                    }
                    let (x, y) = (a[t][t], a[i][t]);
                    let (g, s, u) = ext_gcd(x, y);
                    let (p, q) = (y / g, x / g);
                    for j in t..k {
                        let (rt, ri) = (a[t][j], a[i][j]);
                        a[t][j] = (s * rt + u * ri).rem_euclid(n);
                        a[i][j] = (p * rt - q * ri).rem_euclid(n);
                    }
                    let (ct, ci) = (c[t], c[i]);
                    c[t] = (s * ct + u * ci).rem_euclid(n);
                    c[i] = (p * ct - q * ci).rem_euclid(n);
                    changed = true;
                }
                for j in t + 1..k {
                    if a[t][j] == 0 {
                        continue;
                    }
                    let (x, y) = (a[t][t], a[t][j]);
                    let (g, s, u) = ext_gcd(x, y);
                    let (p, q) = (y / g, x / g);
                    for row in a.iter_mut().skip(t).chain(v.iter_mut()) {
                        let (ct, cj) = (row[t], row[j]);
                        row[t] = (s * ct + u * cj).rem_euclid(n);
                        row[j] = (p * ct - q * cj).rem_euclid(n);
                    }
                    changed = true;
                }
                if !changed {
                    break;
                }
                if (t + 1..r).all(|i| a[i][t] == 0) && (t + 1..k).all(|j| a[t][j] == 0) {
                    break;
                }
            }
            rank += 1;
        }
        let nu = n as u64;
        let mut y0 = vec![0i64; k];
        let mut gens_y: Vec<(usize, i64, u64)> = Vec::new();
        for i in 0..r {
            let d = if i < rank { a[i][i] } else { 0 };
            if i >= rank {
                if c[i] != 0 {
                    return None;
                }
                continue;
            }
            let g = d.gcd(&n);
            if c[i] % g != 0 {
                return None;
            }
            let m = n / g;
            let inv = if m == 1 { 0 } else { (d / g).extended_gcd(&m).x.rem_euclid(m) };
            y0[i] = ((c[i] / g) % m * inv).rem_euclid(m);
            if g > 1 {
                gens_y.push((i, m, g as u64));
            }
        }
        for j in rank..k {
            gens_y.push((j, 1, nu));
        }
        let to_x = |y: &dyn Fn(usize) -> i64| -> Vec<u64> {
            (0..k)
                .map(|row| {
                    (0..k).fold(0i64, |s, col| (s + v[row][col] * y(col)).rem_euclid(n)) as u64
                })
                .collect()
        };
        let particular = to_x(&|j| y0[j]);
        let generators = gens_y
            .iter()
            .map(|&(j, step, order)| (to_x(&|col| if col == j { step } else { 0 }), order))
            .collect();
        Some(SolutionSet { modulus: nu, particular, generators })
    }
}

impl SolutionSet {
    pub fn count(&self) -> u128 {
        self.generators.iter().map(|g| g.1 as u128).product()
    }

    /// All solutions, sorted lexicographically.
    pub fn enumerate(&self) -> Vec<Vec<u64>> {
        let n = self.modulus;
        let mut out = Vec::with_capacity(self.count().min(1 << 20) as usize);
        let mut digits = vec![0u64; self.generators.len()];
        loop {
            let mut x = self.particular.clone();
            for (d, (g, _)) in digits.iter().zip(&self.generators) {
                if *d != 0 {
                    for (xi, gi) in x.iter_mut().zip(g) {
                        *xi = (*xi + d * gi) % n;
                    }
                }
            }
            out.push(x);
            let mut pos = 0;
            loop {
                if pos == digits.len() {
                    out.sort();
                    out.dedup();
                    return out;
                }
                digits[pos] += 1;
                if digits[pos] < self.generators[pos].1 {
                    break;
                }
                digits[pos] = 0;
                pos += 1;
            }
        }
    }
}
