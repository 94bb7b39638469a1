//! Brute-force cross-checks for the triple engine: Verlinde fusion closure
//! (trivial cocycle only) and predicate-based centralizers.

use std::collections::BTreeSet;

use rayon::prelude::*;
use thiserror::Error;

use crate::double::{DoubleError, ModularData, TwistedDouble};
use crate::subcat::{build_subcat, centralizer, enumerate_subcats, triple_of, SubcatError};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum OracleError {
    #[error("CapExceeded: {size} simples, cap {cap}")]
    CapExceeded { size: usize, cap: usize },
    #[error(transparent)]
    Double(#[from] DoubleError),
    #[error(transparent)]
    Subcat(#[from] SubcatError),
}

/// Fusion-closure engine over the Verlinde rules of an untwisted double.
pub struct FusionOracle<'a> {
    d: &'a TwistedDouble,
    md: ModularData,
}

impl<'a> FusionOracle<'a> {
    pub fn new(d: &'a TwistedDouble) -> Result<Self, OracleError> {
        Ok(FusionOracle { d, md: d.modular_data()? })
    }

    pub fn modular_data(&self) -> &ModularData {
        &self.md
    }

    /// Smallest set containing the unit and `seed`, closed under duals and fusion.
    pub fn fusion_closure(&self, seed: &[usize]) -> Vec<usize> {
        let n = self.md.size();
        let mut inside = vec![false; n];
        let mut members = Vec::new();
        let mut queue: Vec<usize> = std::iter::once(0).chain(seed.iter().copied()).collect();
        while let Some(x) = queue.pop() {
            if inside[x] {
                continue;
            }
            inside[x] = true;
            members.push(x);
            queue.push(self.md.duals[x]);
            for &y in &members {
                queue.extend(self.md.constituents(x, y).filter(|&k| !inside[k]));
            }
        }
        members.sort_unstable();
        members
    }

    /// Every fusion-closed set: atom closures joined pairwise to a fixpoint.
    pub fn all_subcategories(&self, cap: usize) -> Result<Vec<Vec<usize>>, OracleError> {
        let n = self.md.size();
        if n > cap {
            return Err(OracleError::CapExceeded { size: n, cap });
        }
        let atoms: BTreeSet<Vec<usize>> = (0..n).into_par_iter().map(|i| self.fusion_closure(&[i])).collect();
        let mut found: BTreeSet<Vec<usize>> = atoms.clone();
        found.insert(self.fusion_closure(&[]));
        let mut frontier: Vec<Vec<usize>> = found.iter().cloned().collect();
        while !frontier.is_empty() {
            let fresh: BTreeSet<Vec<usize>> = frontier
                .par_iter()
                .flat_map_iter(|s| {
                    atoms.iter().map(move |a| {
                        let mut u = s.clone();
                        u.extend_from_slice(a);
                        u
                    })
                })
                .map(|u| self.fusion_closure(&u))
                .collect();
            frontier = fresh.into_iter().filter(|s| !found.contains(s)).collect();
            found.extend(frontier.iter().cloned());
        }
        Ok(found.into_iter().collect())
    }

    /// Subcategory generated by the constituents of `X ⊗ X*`, `X` in `set`.
    pub fn adjoint(&self, set: &[usize]) -> Vec<usize> {
        let seed: Vec<usize> = set.iter().flat_map(|&x| self.md.constituents(x, self.md.duals[x])).collect();
        self.fusion_closure(&seed)
    }

    /// Subcategory generated by the simples `Y` with `Y ⊗ Y* ∈ set`.
    pub fn commutator(&self, set: &[usize]) -> Vec<usize> {
        let inside: BTreeSet<usize> = set.iter().copied().collect();
        let seed: Vec<usize> = (0..self.md.size())
            .filter(|&x| self.md.constituents(x, self.md.duals[x]).all(|k| inside.contains(&k)))
            .collect();
        self.fusion_closure(&seed)
    }

    /// Upper central series `C, C_ad, (C_ad)_ad, …` until it stabilizes.
    pub fn upper_series(&self) -> Vec<Vec<usize>> {
        let mut out = vec![(0..self.md.size()).collect::<Vec<_>>()];
        loop {
            let next = self.adjoint(out.last().unwrap());
            if &next == out.last().unwrap() {
                return out;
            }
            out.push(next);
        }
    }

    /// Lower central series `Vec, Vec^co, (Vec^co)^co, …` until it stabilizes.
    pub fn lower_series(&self) -> Vec<Vec<usize>> {
        let mut out = vec![vec![0]];
        loop {
            let next = self.commutator(out.last().unwrap());
            if &next == out.last().unwrap() {
                return out;
            }
            out.push(next);
        }
    }

    pub fn double(&self) -> &TwistedDouble {
        self.d
    }
}

/// `{Y : Y centralizes every X in set}` by the centralization predicate.
pub fn predicate_centralizer(d: &TwistedDouble, set: &[usize]) -> Vec<usize> {
    (0..d.len())
        .into_par_iter()
        .filter(|&y| set.iter().all(|&x| d.centralize(x, y)))
        .collect()
}

/// Outcome of comparing the triple engine with the brute-force checks.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ClosureReport {
    /// Oracle sets (untwisted) or enumerated sets (twisted).
    pub closed_sets: Vec<Vec<usize>>,
    pub matched: bool,
    pub mismatches: Vec<String>,
}

/// Untwisted: set equality between oracle closures and triple subcategories,
/// plus the round trip of every oracle set. Twisted: double centralizer and
/// dimension identities for every triple.
pub fn certify(d: &TwistedDouble, cap: usize) -> Result<ClosureReport, OracleError> {
    let subcats = enumerate_subcats(d)?;
    let g2 = (d.group().order() * d.group().order()) as u64;
    let mut mismatches = Vec::new();
    let closed_sets = if d.is_untwisted() {
        let oracle = FusionOracle::new(d)?;
        let sets = oracle.all_subcategories(cap)?;
        let from_triples: BTreeSet<&Vec<usize>> = subcats.iter().map(|s| &s.simples).collect();
        let from_oracle: BTreeSet<&Vec<usize>> = sets.iter().collect();
        for s in from_oracle.difference(&from_triples) {
            mismatches.push(format!("oracle set {s:?} has no triple"));
        }
        for s in from_triples.difference(&from_oracle) {
            mismatches.push(format!("triple set {s:?} is not fusion closed"));
        }
        for s in &sets {
            match triple_of(d, s) {
                Ok(t) if subcats.iter().any(|sc| sc.triple == t) => {}
                Ok(t) => mismatches.push(format!("triple_of({s:?}) = {t} is not enumerated")),
                Err(e) => mismatches.push(format!("triple_of({s:?}) failed: {e}")),
            }
        }
        sets
    } else {
        subcats.iter().map(|s| s.simples.clone()).collect()
    };
    for s in &subcats {
        let c = centralizer(&s.triple);
        if centralizer(&c) != s.triple {
            mismatches.push(format!("double centralizer of {} differs", s.triple));
        }
        let cs = build_subcat(d, &c)?;
        if s.dim * cs.dim != g2 {
            mismatches.push(format!("dim({}) · dim(centralizer) = {} ≠ {g2}", s.triple, s.dim * cs.dim));
        }
        let pc = predicate_centralizer(d, &s.simples);
        if pc != cs.simples {
            mismatches.push(format!("predicate centralizer of {} disagrees with the formula", s.triple));
        }
        if predicate_centralizer(d, &pc) != s.simples {
            mismatches.push(format!("predicate double centralizer of {} differs", s.triple));
        }
    }
    Ok(ClosureReport { closed_sets, matched: mismatches.is_empty(), mismatches })
}
