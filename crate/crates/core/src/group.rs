//! Finite groups given by dense multiplication tables.
//!
//! Elements are the indices `0..n` with the identity pinned at index 0. Every
//! group carries its conjugacy structure (classes, minimal-index class
//! representatives, centralizers and a conjugating transversal) computed once
//! at construction. Subgroups are sorted member lists with a bitmask for
//! constant-time membership.

use std::cmp::Ordering;
use std::collections::{HashMap, VecDeque};
use std::fmt;
use std::sync::OnceLock;

use thiserror::Error;

/// Default upper bound on the order of groups built from generators.
pub const DEFAULT_ORDER_CAP: usize = 512;

/// Why a multiplication table fails to define a group.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GroupDefect {
    NoIdentity,
    NoInverse { element: usize },
    NonAssociative { x: usize, y: usize, z: usize },
}

impl fmt::Display for GroupDefect {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupDefect::NoIdentity => write!(f, "no two-sided identity element"),
            GroupDefect::NoInverse { element } => {
                write!(f, "element {element} has no two-sided inverse")
            }
            GroupDefect::NonAssociative { x, y, z } => {
                write!(f, "associativity fails at ({x}, {y}, {z})")
            }
        }
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GroupError {
    #[error("multiplication table is empty")]
    Empty,
    #[error("row {row} has {len} entries, expected {expected}")]
    Ragged { row: usize, len: usize, expected: usize },
    #[error("entry {value} at ({row}, {col}) is outside 0..{order}")]
    OutOfRange { row: usize, col: usize, value: usize, order: usize },
    #[error("NotAGroup: {0}")]
    NotAGroup(GroupDefect),
    #[error("GroupTooLarge: closure exceeds the order cap {cap}")]
    GroupTooLarge { cap: usize },
    #[error("generator {index} is not a permutation of 0..{degree}")]
    InvalidPermutation { index: usize, degree: usize },
    #[error("unknown builtin group {0:?}")]
    UnknownBuiltin(String),
}

/// A subgroup stored as its sorted member list.
#[derive(Clone, Debug)]
pub struct Subgroup {
    members: Vec<usize>,
    mask: Vec<u64>,
    normal: bool,
}

impl Subgroup {
    fn from_sorted(members: Vec<usize>, order: usize, normal: bool) -> Self {
        let mut mask = vec![0u64; order.div_ceil(64)];
        for &m in &members {
            mask[m / 64] |= 1 << (m % 64);
        }
        Subgroup { members, mask, normal }
    }

    pub fn members(&self) -> &[usize] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    /// Always false: a subgroup contains the identity.
    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn is_trivial(&self) -> bool {
        self.members.len() == 1
    }

    pub fn is_normal(&self) -> bool {
        self.normal
    }

    pub fn contains(&self, g: usize) -> bool {
        self.mask
            .get(g / 64)
            .is_some_and(|w| w & (1 << (g % 64)) != 0)
    }

    /// Position of `g` in the sorted member list.
    pub fn position(&self, g: usize) -> Option<usize> {
        self.members.binary_search(&g).ok()
    }

    pub fn is_subset(&self, other: &Subgroup) -> bool {
        self.len() <= other.len()
            && self
                .mask
                .iter()
                .zip(&other.mask)
                .all(|(a, b)| a & !b == 0)
    }
}

impl PartialEq for Subgroup {
    fn eq(&self, other: &Self) -> bool {
        self.members == other.members
    }
}

impl Eq for Subgroup {}

impl std::hash::Hash for Subgroup {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.members.hash(state);
    }
}

impl Ord for Subgroup {
    fn cmp(&self, other: &Self) -> Ordering {
        self.len()
            .cmp(&other.len())
            .then_with(|| self.members.cmp(&other.members))
    }
}

impl PartialOrd for Subgroup {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Subgroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, m) in self.members.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{m}")?;
        }
        write!(f, "}}")
    }
}

/// Conjugacy classes with minimal-index representatives.
#[derive(Clone, Debug)]
pub struct ConjStructure {
    classes: Vec<Vec<usize>>,
    reps: Vec<usize>,
    class_of: Vec<usize>,
    centralizers: Vec<Subgroup>,
    /// `transversal[k] = x` with `x⁻¹ · rep(class(k)) · x = k`.
    transversal: Vec<usize>,
}

impl ConjStructure {
    pub fn classes(&self) -> &[Vec<usize>] {
        &self.classes
    }

    pub fn reps(&self) -> &[usize] {
        &self.reps
    }
}

/// Upper and lower central series, each listed until it stabilizes.
#[derive(Clone, Debug)]
pub struct CentralSeries {
    /// `C^0 = {e} ⊆ C^1 = Z(G) ⊆ …`
    pub upper: Vec<Subgroup>,
    /// `C_0 = G ⊇ C_1 = [G, G] ⊇ …`
    pub lower: Vec<Subgroup>,
}

impl CentralSeries {
    /// `C^n(G)`; terms past stabilization repeat the last one.
    pub fn upper_term(&self, n: usize) -> &Subgroup {
        &self.upper[n.min(self.upper.len() - 1)]
    }

    /// `C_n(G)`; terms past stabilization repeat the last one.
    pub fn lower_term(&self, n: usize) -> &Subgroup {
        &self.lower[n.min(self.lower.len() - 1)]
    }
}

/// A finite group with identity at index 0.
#[derive(Clone, Debug)]
pub struct FiniteGroup {
    name: String,
    order: usize,
    mult: Vec<usize>,
    inv: Vec<usize>,
    conj: ConjStructure,
    normal_subgroups: OnceLock<Vec<Subgroup>>,
}

impl FiniteGroup {
    /// Validates a multiplication table and builds the group.
    ///
    /// If the identity is not at index 0 the labels of the identity and
    /// element 0 are swapped; defects are reported in the caller's labels.
    pub fn from_mult_table(table: &[Vec<usize>], name: impl Into<String>) -> Result<Self, GroupError> {
        let n = table.len();
        if n == 0 {
            return Err(GroupError::Empty);
        }
        for (row, r) in table.iter().enumerate() {
            if r.len() != n {
                return Err(GroupError::Ragged { row, len: r.len(), expected: n });
            }
            for (col, &value) in r.iter().enumerate() {
                if value >= n {
                    return Err(GroupError::OutOfRange { row, col, value, order: n });
                }
            }
        }
        let identity = (0..n)
            .find(|&e| (0..n).all(|x| table[e][x] == x && table[x][e] == x))
            .ok_or(GroupError::NotAGroup(GroupDefect::NoIdentity))?;
        for x in 0..n {
            if !(0..n).any(|y| table[x][y] == identity && table[y][x] == identity) {
                return Err(GroupError::NotAGroup(GroupDefect::NoInverse { element: x }));
            }
        }
        for x in 0..n {
            for y in 0..n {
                let xy = table[x][y];
                for z in 0..n {
                    if table[xy][z] != table[x][table[y][z]] {
                        return Err(GroupError::NotAGroup(GroupDefect::NonAssociative { x, y, z }));
                    }
                }
            }
        }
        // Relabel so that the identity sits at 0.
        let relabel = |i: usize| {
            if i == identity {
                0
            } else if i == 0 {
                identity
            } else {
                i
            }
        };
        let mut mult = vec![0; n * n];
        for x in 0..n {
            for y in 0..n {
                mult[relabel(x) * n + relabel(y)] = relabel(table[x][y]);
            }
        }
        Ok(Self::from_validated(mult, n, name.into()))
    }

    /// Closure of a set of permutations of `0..d` under composition.
    ///
    /// Elements are numbered in breadth-first discovery order, starting from
    /// the identity and multiplying on the right by the generators in
    /// lexicographic order. The product is composition `(p·q)(i) = p(q(i))`.
    pub fn from_permutation_generators(
        gens: &[Vec<usize>],
        name: impl Into<String>,
        cap: usize,
    ) -> Result<Self, GroupError> {
        let degree = gens.first().map_or(0, Vec::len);
        for (index, g) in gens.iter().enumerate() {
            let mut seen = vec![false; degree];
            let ok = g.len() == degree
                && g.iter().all(|&i| i < degree && !std::mem::replace(&mut seen[i], true));
            if !ok {
                return Err(GroupError::InvalidPermutation { index, degree });
            }
        }
        let mut sorted: Vec<Vec<usize>> = gens.to_vec();
        sorted.sort();
        sorted.dedup();

        let identity: Vec<usize> = (0..degree).collect();
        let mut elements = vec![identity.clone()];
        let mut index: HashMap<Vec<usize>, usize> = HashMap::from([(identity, 0)]);
        let mut queue = VecDeque::from([0usize]);
        while let Some(i) = queue.pop_front() {
            for g in &sorted {
                let p: Vec<usize> = g.iter().map(|&k| elements[i][k]).collect();
                if !index.contains_key(&p) {
                    if elements.len() == cap {
                        return Err(GroupError::GroupTooLarge { cap });
                    }
                    index.insert(p.clone(), elements.len());
                    queue.push_back(elements.len());
                    elements.push(p);
                }
            }
        }
        let n = elements.len();
        let mut mult = vec![0; n * n];
        for x in 0..n {
            for y in 0..n {
                let p: Vec<usize> = elements[y].iter().map(|&k| elements[x][k]).collect();
                mult[x * n + y] = index[&p];
            }
        }
        Ok(Self::from_validated(mult, n, name.into()))
    }

    fn from_validated(mult: Vec<usize>, n: usize, name: String) -> Self {
        let mut inv = vec![0; n];
        for x in 0..n {
            inv[x] = (0..n).find(|&y| mult[x * n + y] == 0).expect("validated group");
        }
        let conj = Self::conjugacy(&mult, &inv, n);
        FiniteGroup {
            name,
            order: n,
            mult,
            inv,
            conj,
            normal_subgroups: OnceLock::new(),
        }
    }

    fn conjugacy(mult: &[usize], inv: &[usize], n: usize) -> ConjStructure {
        let m = |a: usize, b: usize| mult[a * n + b];
        let mut class_of = vec![usize::MAX; n];
        let mut transversal = vec![0; n];
        let mut classes = Vec::new();
        let mut reps = Vec::new();
        let mut centralizers = Vec::new();
        for a in 0..n {
            if class_of[a] != usize::MAX {
                continue;
            }
            let id = classes.len();
            let mut class = Vec::new();
            let mut cent = Vec::new();
            for x in 0..n {
                let k = m(m(inv[x], a), x);
                if class_of[k] == usize::MAX {
                    class_of[k] = id;
                    transversal[k] = x;
                    class.push(k);
                }
                if k == a {
                    cent.push(x);
                }
            }
            class.sort_unstable();
            reps.push(a);
            classes.push(class);
            // centralizers are normal only in special cases; computed lazily by callers
            centralizers.push(Subgroup::from_sorted(cent, n, false));
        }
        ConjStructure { classes, reps, class_of, centralizers, transversal }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn identity(&self) -> usize {
        0
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.mult[a * self.order + b]
    }

    #[inline]
    pub fn inv(&self, a: usize) -> usize {
        self.inv[a]
    }

    /// `g a g⁻¹`.
    #[inline]
    pub fn conj(&self, g: usize, a: usize) -> usize {
        self.mul(self.mul(g, a), self.inv(g))
    }

    /// `g k g⁻¹ k⁻¹`.
    #[inline]
    pub fn commutator(&self, g: usize, k: usize) -> usize {
        self.mul(self.conj(g, k), self.inv(k))
    }

    #[inline]
    pub fn commute(&self, a: usize, b: usize) -> bool {
        self.mul(a, b) == self.mul(b, a)
    }

    pub fn pow(&self, g: usize, k: usize) -> usize {
        (0..k).fold(0, |acc, _| self.mul(acc, g))
    }

    pub fn element_order(&self, g: usize) -> usize {
        let mut x = g;
        let mut k = 1;
        while x != 0 {
            x = self.mul(x, g);
            k += 1;
        }
        k
    }

    /// Least common multiple of the element orders.
    pub fn exponent(&self) -> usize {
        (0..self.order).fold(1, |acc, g| num_integer::lcm(acc, self.element_order(g)))
    }

    pub fn is_abelian(&self) -> bool {
        (0..self.order).all(|a| (a + 1..self.order).all(|b| self.commute(a, b)))
    }

    /// The multiplication table as nested rows.
    pub fn mult_table(&self) -> Vec<Vec<usize>> {
        self.mult.chunks(self.order).map(<[usize]>::to_vec).collect()
    }

    pub fn conj_structure(&self) -> &ConjStructure {
        &self.conj
    }

    pub fn num_classes(&self) -> usize {
        self.conj.reps.len()
    }

    /// Class representatives `R`, each the minimal index of its class.
    pub fn class_reps(&self) -> &[usize] {
        &self.conj.reps
    }

    pub fn class_of(&self, g: usize) -> usize {
        self.conj.class_of[g]
    }

    pub fn class(&self, id: usize) -> &[usize] {
        &self.conj.classes[id]
    }

    /// Representative of the class of `g`.
    pub fn rep_of(&self, g: usize) -> usize {
        self.conj.reps[self.conj.class_of[g]]
    }

    pub fn is_rep(&self, g: usize) -> bool {
        self.rep_of(g) == g
    }

    /// `C_G(a)` for the representative of class `id`.
    pub fn class_centralizer(&self, id: usize) -> &Subgroup {
        &self.conj.centralizers[id]
    }

    /// An `x` with `x⁻¹ · rep_of(g) · x = g`.
    pub fn transversal(&self, g: usize) -> usize {
        self.conj.transversal[g]
    }

    /// `C_G(g)` for an arbitrary element.
    pub fn element_centralizer(&self, g: usize) -> Subgroup {
        self.make_subgroup((0..self.order).filter(|&x| self.commute(x, g)).collect())
    }

    /// Builds a subgroup record from a member set known to be closed.
    fn make_subgroup(&self, mut members: Vec<usize>) -> Subgroup {
        members.sort_unstable();
        members.dedup();
        let mut s = Subgroup::from_sorted(members, self.order, false);
        s.normal = s
            .members
            .iter()
            .all(|&k| (0..self.order).all(|g| s.contains(self.conj(g, k))));
        s
    }

    /// Returns the subgroup if `members` is closed under products and inverses.
    pub fn subgroup_from_members(&self, members: &[usize]) -> Option<Subgroup> {
        let s = Subgroup::from_sorted(
            {
                let mut m = members.to_vec();
                m.sort_unstable();
                m.dedup();
                m
            },
            self.order,
            false,
        );
        if !s.contains(0) || s.members.iter().any(|&x| x >= self.order) {
            return None;
        }
        let closed = s
            .members
            .iter()
            .all(|&x| s.contains(self.inv(x)) && s.members.iter().all(|&y| s.contains(self.mul(x, y))));
        closed.then(|| self.make_subgroup(s.members))
    }

    pub fn trivial_subgroup(&self) -> Subgroup {
        Subgroup::from_sorted(vec![0], self.order, true)
    }

    pub fn whole(&self) -> Subgroup {
        Subgroup::from_sorted((0..self.order).collect(), self.order, true)
    }

    /// Subgroup generated by `gens`.
    pub fn subgroup_generated(&self, gens: &[usize]) -> Subgroup {
        let mut seen = vec![false; self.order];
        seen[0] = true;
        let mut members = vec![0];
        let mut queue = VecDeque::from([0usize]);
        while let Some(x) = queue.pop_front() {
            for &g in gens {
                let y = self.mul(x, g);
                if !seen[y] {
                    seen[y] = true;
                    members.push(y);
                    queue.push_back(y);
                }
            }
        }
        self.make_subgroup(members)
    }

    /// Smallest normal subgroup containing `gens`.
    pub fn normal_closure(&self, gens: &[usize]) -> Subgroup {
        let mut conjugates: Vec<usize> = gens
            .iter()
            .flat_map(|&k| (0..self.order).map(move |g| (g, k)))
            .map(|(g, k)| self.conj(g, k))
            .collect();
        conjugates.sort_unstable();
        conjugates.dedup();
        self.subgroup_generated(&conjugates)
    }

    pub fn intersection(&self, a: &Subgroup, b: &Subgroup) -> Subgroup {
        self.make_subgroup(a.members.iter().copied().filter(|&x| b.contains(x)).collect())
    }

    /// The subgroup generated by `a ∪ b` (equal to `ab` when one side is normal).
    pub fn join(&self, a: &Subgroup, b: &Subgroup) -> Subgroup {
        let mut gens = a.members.clone();
        gens.extend_from_slice(&b.members);
        self.subgroup_generated(&gens)
    }

    /// True when every element of `a` commutes with every element of `b`.
    pub fn centralize_each_other(&self, a: &Subgroup, b: &Subgroup) -> bool {
        a.members
            .iter()
            .all(|&x| b.members.iter().all(|&y| self.commute(x, y)))
    }

    /// All normal subgroups sorted by `(size, members)`.
    ///
    /// Starts from normal closures of single elements and joins pairs until
    /// no new subgroup appears.
    pub fn normal_subgroups(&self) -> &[Subgroup] {
        self.normal_subgroups.get_or_init(|| {
            let mut found: Vec<Subgroup> = Vec::new();
            let mut known: std::collections::HashSet<Vec<usize>> = Default::default();
            for &rep in &self.conj.reps {
                let s = self.normal_closure(&[rep]);
                if known.insert(s.members.clone()) {
                    found.push(s);
                }
            }
            let mut frontier_start = 0;
            loop {
                let len = found.len();
                let mut fresh = Vec::new();
                for i in 0..len {
                    for j in frontier_start.max(i + 1)..len {
                        let s = self.join(&found[i], &found[j]);
                        if known.insert(s.members.clone()) {
                            fresh.push(s);
                        }
                    }
                }
                if fresh.is_empty() {
                    break;
                }
                frontier_start = len;
                found.extend(fresh);
            }
            found.sort();
            found
        })
    }

    /// Ordered pairs `(K, H)` of normal subgroups centralizing each other.
    pub fn centralizing_pairs(&self) -> Vec<(Subgroup, Subgroup)> {
        let normals = self.normal_subgroups();
        let mut pairs = Vec::new();
        for k in normals {
            for h in normals {
                if self.centralize_each_other(k, h) {
                    pairs.push((k.clone(), h.clone()));
                }
            }
        }
        pairs
    }

    /// `[G, K] = ⟨g k g⁻¹ k⁻¹⟩`, closed under conjugation.
    pub fn commutator_subgroup(&self, k: &Subgroup) -> Subgroup {
        let mut gens: Vec<usize> = (0..self.order)
            .flat_map(|g| k.members.iter().map(move |&x| (g, x)))
            .map(|(g, x)| self.commutator(g, x))
            .collect();
        gens.sort_unstable();
        gens.dedup();
        self.normal_closure(&gens)
    }

    /// `C_G(K)`.
    pub fn centralizer_of(&self, k: &Subgroup) -> Subgroup {
        self.make_subgroup(
            (0..self.order)
                .filter(|&g| k.members.iter().all(|&x| self.commute(g, x)))
                .collect(),
        )
    }

    pub fn center(&self) -> Subgroup {
        self.centralizer_of(&self.whole())
    }

    /// `π⁻¹(Z(G/H)) = {g : [g, x] ∈ H for all x}`.
    pub fn preimage_of_center_of_quotient(&self, h: &Subgroup) -> Subgroup {
        self.make_subgroup(
            (0..self.order)
                .filter(|&g| (0..self.order).all(|x| h.contains(self.commutator(g, x))))
                .collect(),
        )
    }

    pub fn central_series(&self) -> CentralSeries {
        let mut upper = vec![self.trivial_subgroup()];
        loop {
            let next = self.preimage_of_center_of_quotient(upper.last().unwrap());
            if &next == upper.last().unwrap() {
                break;
            }
            upper.push(next);
        }
        let mut lower = vec![self.whole()];
        loop {
            let next = self.commutator_subgroup(lower.last().unwrap());
            if &next == lower.last().unwrap() {
                break;
            }
            lower.push(next);
        }
        CentralSeries { upper, lower }
    }

    /// The subgroup as a standalone group, with local index `i` standing for
    /// the parent element `members()[i]`.
    pub fn subgroup_as_group(&self, s: &Subgroup, name: impl Into<String>) -> FiniteGroup {
        let n = s.len();
        let mut mult = vec![0; n * n];
        for (i, &x) in s.members.iter().enumerate() {
            for (j, &y) in s.members.iter().enumerate() {
                mult[i * n + j] = s.position(self.mul(x, y)).expect("closed subgroup");
            }
        }
        Self::from_validated(mult, n, name.into())
    }

    /// A generating set of `s`, chosen greedily in index order.
    pub fn generators_of(&self, s: &Subgroup) -> Vec<usize> {
        let mut gens = Vec::new();
        let mut cur = self.trivial_subgroup();
        for &m in s.members() {
            if !cur.contains(m) {
                gens.push(m);
                cur = self.subgroup_generated(&gens);
            }
        }
        gens
    }

    // --- builtin groups -------------------------------------------------

    /// `Z/n` with element `k` the residue `k`.
    pub fn cyclic(n: usize) -> FiniteGroup {
        let mult = (0..n * n).map(|i| (i / n + i % n) % n).collect();
        Self::from_validated(mult, n, format!("Z{n}"))
    }

    /// `G × H` with `(g, h)` stored at `g·|H| + h`.
    pub fn direct_product(a: &FiniteGroup, b: &FiniteGroup) -> FiniteGroup {
        let (na, nb) = (a.order, b.order);
        let n = na * nb;
        let mut mult = vec![0; n * n];
        for x in 0..n {
            for y in 0..n {
                mult[x * n + y] = a.mul(x / nb, y / nb) * nb + b.mul(x % nb, y % nb);
            }
        }
        Self::from_validated(mult, n, format!("{}x{}", a.name, b.name))
    }

    pub fn symmetric(d: usize) -> FiniteGroup {
        let mut gens = Vec::new();
        if d >= 2 {
            gens.push((0..d).map(|i| (i + 1) % d).collect());
            let mut t: Vec<usize> = (0..d).collect();
            t.swap(0, 1);
            gens.push(t);
        }
        Self::from_permutation_generators(&gens, format!("S{d}"), usize::MAX).expect("symmetric group")
    }

    /// Dihedral group of order `2n` acting on the vertices of an `n`-gon.
    pub fn dihedral(n: usize) -> FiniteGroup {
        let rot: Vec<usize> = (0..n).map(|i| (i + 1) % n).collect();
        let refl: Vec<usize> = (0..n).map(|i| (n - i) % n).collect();
        Self::from_permutation_generators(&[rot, refl], format!("D{n}"), usize::MAX).expect("dihedral group")
    }

    /// Quaternion group: indices `0..8` are `1, -1, i, -i, j, -j, k, -k`.
    pub fn quaternion() -> FiniteGroup {
        // unit products among 1, i, j, k as (sign, unit)
        const UNIT: [[(bool, usize); 4]; 4] = [
            [(false, 0), (false, 1), (false, 2), (false, 3)],
            [(false, 1), (true, 0), (false, 3), (true, 2)],
            [(false, 2), (true, 3), (true, 0), (false, 1)],
            [(false, 3), (false, 2), (true, 1), (true, 0)],
        ];
        let mut mult = vec![0; 64];
        for x in 0..8 {
            for y in 0..8 {
                let (s, u) = UNIT[x / 2][y / 2];
                let neg = s ^ (x % 2 == 1) ^ (y % 2 == 1);
                mult[x * 8 + y] = 2 * u + usize::from(neg);
            }
        }
        Self::from_validated(mult, 8, "Q8".into())
    }

    /// Builtin names: `Z<n>`, `Z2xZ2`, `S3`, `S4`, `D4`, `Q8`.
    pub fn builtin(name: &str) -> Result<FiniteGroup, GroupError> {
        match name {
            "Z2xZ2" => {
                let z2 = Self::cyclic(2);
                Ok(Self::direct_product(&z2, &z2))
            }
            "S3" => Ok(Self::symmetric(3)),
            "S4" => Ok(Self::symmetric(4)),
            "D4" => Ok(Self::dihedral(4)),
            "Q8" => Ok(Self::quaternion()),
            _ => name
                .strip_prefix('Z')
                .and_then(|n| n.parse::<usize>().ok())
                .filter(|&n| n >= 1)
                .map(Self::cyclic)
                .ok_or_else(|| GroupError::UnknownBuiltin(name.to_string())),
        }
    }
}
