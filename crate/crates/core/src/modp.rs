//! Arithmetic and dense linear algebra over a prime field `F_p` (`p < 2^32`).

pub fn pow_mod(mut b: u64, mut e: u64, p: u64) -> u64 {
    let mut r = 1 % p;
    b %= p;
    while e > 0 {
        if e & 1 == 1 {
            r = r * b % p;
        }
        b = b * b % p;
        e >>= 1;
    }
    r
}

pub fn inv_mod(a: u64, p: u64) -> u64 {
    debug_assert!(a % p != 0, "inverse of zero mod {p}");
    pow_mod(a, p - 2, p)
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// Smallest prime `p ≡ 1 (mod n)` with `p > lower`.
pub fn find_prime(n: u64, lower: u64) -> u64 {
    let mut p = (lower / n) * n + 1;
    while p <= lower || !is_prime(p) {
        p += n;
    }
    p
}

fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            out.push(d);
            while n % d == 0 {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

/// Smallest generator of `F_p^×`.
pub fn primitive_root(p: u64) -> u64 {
    if p == 2 {
        return 1;
    }
    let fs = prime_factors(p - 1);
    (2..p)
        .find(|&g| fs.iter().all(|&q| pow_mod(g, (p - 1) / q, p) != 1))
        .expect("a prime field has a primitive root")
}

/// Square matrix over `F_p`, row-major.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MatP {
    pub n: usize,
    pub p: u64,
    pub a: Vec<u64>,
}

impl MatP {
    pub fn zero(n: usize, p: u64) -> Self {
        MatP { n, p, a: vec![0; n * n] }
    }

    pub fn get(&self, i: usize, j: usize) -> u64 {
        self.a[i * self.n + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: u64) {
        self.a[i * self.n + j] = v % self.p;
    }

    /// Characteristic polynomial `det(xI − A)`, lowest degree first,
    /// by reduction to upper Hessenberg form.
    pub fn charpoly(&self) -> Vec<u64> {
        let (n, p) = (self.n, self.p);
        let mut h = self.a.clone();
        let idx = |i: usize, j: usize| i * n + j;
        for j in 0..n.saturating_sub(2) {
            let Some(piv) = (j + 1..n).find(|&i| h[idx(i, j)] != 0) else {
                continue;
            };
            if piv != j + 1 {
                for c in 0..n {
                    h.swap(idx(piv, c), idx(j + 1, c));
                }
                for r in 0..n {
                    h.swap(idx(r, piv), idx(r, j + 1));
                }
            }
            let inv = inv_mod(h[idx(j + 1, j)], p);
            for k in j + 2..n {
                let u = h[idx(k, j)] * inv % p;
                if u == 0 {
                    continue;
                }
                for c in 0..n {
                    h[idx(k, c)] = (h[idx(k, c)] + p - u * h[idx(j + 1, c)] % p) % p;
                }
                for r in 0..n {
                    h[idx(r, j + 1)] = (h[idx(r, j + 1)] + u * h[idx(r, k)]) % p;
                }
            }
        }
        let mut polys: Vec<Vec<u64>> = vec![vec![1]];
        for m in 1..=n {
            let prev = &polys[m - 1];
            let mut cur = vec![0u64; m + 1];
            let d = h[idx(m - 1, m - 1)];
            for (i, &c) in prev.iter().enumerate() {
                cur[i + 1] = (cur[i + 1] + c) % p;
                cur[i] = (cur[i] + p - c * d % p) % p;
            }
            let mut t = 1u64;
            for i in 1..m {
                t = t * h[idx(m - i, m - i - 1)] % p;
                let f = t * h[idx(m - i - 1, m - 1)] % p;
                if f == 0 {
                    continue;
                }
                for (k, &c) in polys[m - i - 1].iter().enumerate() {
                    cur[k] = (cur[k] + p - f * c % p) % p;
                }
            }
            polys.push(cur);
        }
        polys.pop().unwrap_or_else(|| vec![1])
    }

    /// Basis of the right null space of `A − λI`.
    pub fn eigenspace(&self, lambda: u64) -> Vec<Vec<u64>> {
        let mut m = self.clone();
        for i in 0..self.n {
            let v = (m.get(i, i) + self.p - lambda % self.p) % self.p;
            m.set(i, i, v);
        }
        nullspace(&m.a, self.n, self.n, self.p)
    }

    pub fn mul_vec(&self, v: &[u64]) -> Vec<u64> {
        (0..self.n)
            .map(|i| (0..self.n).fold(0, |s, j| (s + self.get(i, j) * v[j]) % self.p))
            .collect()
    }
}

/// Horner evaluation of a polynomial given lowest degree first.
pub fn eval_poly(poly: &[u64], x: u64, p: u64) -> u64 {
    poly.iter().rev().fold(0, |acc, &c| (acc * x + c) % p)
}

/// All roots in `F_p` of a polynomial, found by exhaustive scan.
pub fn roots(poly: &[u64], p: u64) -> Vec<u64> {
    let deg = poly.len().saturating_sub(1);
    let mut out = Vec::new();
    let mut rest = poly.to_vec();
    for x in 0..p {
        if out.len() == deg {
            break;
        }
        if eval_poly(&rest, x, p) == 0 {
            out.push(x);
            rest = deflate(&rest, x, p);
            while rest.len() > 1 && eval_poly(&rest, x, p) == 0 {
                rest = deflate(&rest, x, p);
            }
            if rest.len() == 1 {
                break;
            }
        }
    }
    out
}

/// Division by `(x − r)` for a known root `r`.
fn deflate(poly: &[u64], r: u64, p: u64) -> Vec<u64> {
    let d = poly.len() - 1;
    let mut q = vec![0u64; d];
    let mut carry = 0u64;
    for i in (0..d).rev() {
        carry = (poly[i + 1] + carry * r) % p;
        q[i] = carry;
    }
    q
}

/// Null space basis of a `rows × cols` matrix over `F_p`.
pub fn nullspace(a: &[u64], rows: usize, cols: usize, p: u64) -> Vec<Vec<u64>> {
    let mut m = a.to_vec();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(piv) = (r..rows).find(|&i| m[i * cols + c] != 0) else {
            continue;
        };
        for k in 0..cols {
            m.swap(piv * cols + k, r * cols + k);
        }
        let inv = inv_mod(m[r * cols + c], p);
        for k in 0..cols {
            m[r * cols + k] = m[r * cols + k] * inv % p;
        }
        for i in 0..rows {
            let f = m[i * cols + c];
            if i != r && f != 0 {
                for k in 0..cols {
                    m[i * cols + k] = (m[i * cols + k] + p - f * m[r * cols + k] % p) % p;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    let free: Vec<usize> = (0..cols).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut v = vec![0u64; cols];
            v[f] = 1;
            for (i, &pc) in pivots.iter().enumerate() {
                v[pc] = (p - m[i * cols + f]) % p;
            }
            v
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn primes_and_roots() {
        assert_eq!(find_prime(4, 10), 13);
        assert_eq!(find_prime(6, 1), 7);
        assert_eq!(find_prime(1, 1), 2);
        for p in [2u64, 3, 7, 13, 97, 241] {
            let g = primitive_root(p);
            let mut seen = std::collections::HashSet::new();
            for e in 0..p - 1 {
                seen.insert(pow_mod(g, e, p));
            }
            assert_eq!(seen.len() as u64, p - 1);
        }
        assert_eq!(inv_mod(3, 7), 5);
    }

    fn det_brute(m: &MatP, lambda: u64) -> u64 {
        // Leibniz expansion on tiny matrices
        fn perms(n: usize) -> Vec<Vec<usize>> {
            if n == 0 {
                return vec![vec![]];
            }
            let mut out = Vec::new();
            for q in perms(n - 1) {
                for pos in 0..n {
                    let mut v = q.clone();
                    v.insert(pos, n - 1);
                    out.push(v);
                }
            }
            out
        }
        let p = m.p;
        let mut total = 0u64;
        for s in perms(m.n) {
            let inversions = (0..m.n)
                .flat_map(|i| (i + 1..m.n).map(move |j| (i, j)))
                .filter(|&(i, j)| s[i] > s[j])
                .count();
            let mut prod = 1u64;
            for (i, &j) in s.iter().enumerate() {
                let entry = if i == j { (lambda + p - m.get(i, j)) % p } else { (p - m.get(i, j)) % p };
                prod = prod * entry % p;
            }
            total = if inversions % 2 == 0 { (total + prod) % p } else { (total + p - prod) % p };
        }
        total
    }

    #[test]
    fn charpoly_matches_determinant() {
        let p = 101;
        let mut m = MatP::zero(4, p);
        let vals = [3u64, 0, 7, 1, 0, 0, 5, 2, 9, 4, 0, 0, 1, 1, 1, 0];
        for (k, &v) in vals.iter().enumerate() {
            m.set(k / 4, k % 4, v);
        }
        let cp = m.charpoly();
        assert_eq!(cp.len(), 5);
        assert_eq!(cp[4], 1);
        for lambda in 0..p {
            assert_eq!(eval_poly(&cp, lambda, p), det_brute(&m, lambda));
        }
    }

    #[test]
    fn eigenspaces_of_diagonalizable_matrix() {
        let p = 13;
        // permutation matrix of a 3-cycle: eigenvalues are the cube roots of 1 mod 13
        let mut m = MatP::zero(3, p);
        m.set(0, 1, 1);
        m.set(1, 2, 1);
        m.set(2, 0, 1);
        let rs = roots(&m.charpoly(), p);
        assert_eq!(rs, vec![1, 3, 9]);
        for r in rs {
            let space = m.eigenspace(r);
            assert_eq!(space.len(), 1);
            let v = &space[0];
            let mv = m.mul_vec(v);
            assert!(mv.iter().zip(v).all(|(a, b)| *a == b * r % p));
        }
        assert_eq!(nullspace(&[1, 2, 2, 4], 2, 2, 7), vec![vec![5, 1]]);
    }
}
