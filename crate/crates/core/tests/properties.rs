use std::sync::Arc;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use tqd::*;

fn double(name: &str) -> TwistedDouble {
    TwistedDouble::untwisted(Arc::new(FiniteGroup::builtin(name).unwrap())).unwrap()
}

fn semion() -> TwistedDouble {
    TwistedDouble::new(ThreeCocycle::builtin_cyclic(2, 1).unwrap()).unwrap()
}

fn trivial_triple(d: &TwistedDouble) -> Triple {
    let g = d.group();
    Triple::new(OmegaBicharacter::trivial(g.trivial_subgroup(), g.whole(), d.root_order()))
}

#[test]
fn contains_matches_subset_order() {
    for name in ["S3", "Z2xZ2", "D4"] {
        let d = double(name);
        let all = enumerate_subcats(&d).unwrap();
        for a in &all {
            for b in &all {
                let subset = a.simples.iter().all(|x| b.simples.contains(x));
                assert_eq!(contains(&a.triple, &b.triple), subset, "{name}: {} ⊆ {}", a.triple, b.triple);
            }
            assert!(contains(&trivial_triple(&d), &a.triple));
        }
    }
}

#[test]
fn formula_centralizer_matches_predicate_twisted_and_untwisted() {
    let cases = [double("S3"), double("Q8"), semion(), TwistedDouble::new(ThreeCocycle::builtin_cyclic(4, 1).unwrap()).unwrap()];
    for d in &cases {
        for s in enumerate_subcats(d).unwrap() {
            let c = build_subcat(d, &centralizer(&s.triple)).unwrap();
            assert_eq!(predicate_centralizer(d, &s.simples), c.simples, "{}", s.triple);
        }
    }
}

#[test]
fn muger_center_and_classification() {
    let cases = [double("S3"), double("D4"), double("Z3"), semion()];
    for d in &cases {
        let g2 = (d.group().order() * d.group().order()) as u64;
        for s in enumerate_subcats(d).unwrap() {
            let t = &s.triple;
            let z = muger_center(d, t).unwrap();
            assert_eq!(z, meet(d, t, &centralizer(t)).unwrap());
            let c = classify(d, t).unwrap();
            assert_eq!(c.nondegenerate, build_subcat(d, &z).unwrap().simples == vec![0], "{t}");
            if c.lagrangian {
                assert_eq!(s.dim * s.dim, g2);
            }
            if c.isotropic {
                assert!(c.symmetric);
                assert!(s.simples.iter().all(|&i| d.simple(i).twist_exp == 0), "{t}");
            }
            if c.symmetric {
                assert!(contains(t, &centralizer(t)));
            }
        }
    }
}

#[test]
fn known_examples_for_small_doubles() {
    let d = double("Z2");
    let g = d.group().clone();
    let n = d.root_order();
    let unit = trivial_triple(&d);
    let c = classify(&d, &unit).unwrap();
    assert!(c.symmetric && c.isotropic && !c.lagrangian && c.nondegenerate);
    assert_eq!(enumerate_bicharacters(&d, &g.trivial_subgroup(), &g.whole()).len(), 1);
    let toric = Triple::new(OmegaBicharacter::trivial(g.whole(), g.whole(), n));
    let flux = d.index_of(1, 0).unwrap();
    assert_eq!(build_subcat(&d, &toric).unwrap().simples, vec![0, flux]);
    let charge = d.index_of(0, 1).unwrap();
    let e_triple = triple_of(&d, &[0, charge]).unwrap();
    assert_eq!(muger_center(&d, &e_triple).unwrap(), e_triple);
    let ce = classify(&d, &e_triple).unwrap();
    assert!(ce.lagrangian && ce.isotropic && !ce.nondegenerate);
    assert_eq!(upper_central_term(&double("Z4"), 1).unwrap(), trivial_triple(&double("Z4")));
    let s3 = double("S3");
    let up = upper_central_term(&s3, 1).unwrap();
    assert_eq!(up.k().len(), 3);
    assert!(up.h().is_trivial());
    assert!(adjoint(&semion(), &trivial_triple(&semion())).is_err());
}

#[test]
fn adjoint_matches_fusion_oracle() {
    for name in ["S3", "D4"] {
        let d = double(name);
        let o = FusionOracle::new(&d).unwrap();
        for s in enumerate_subcats(&d).unwrap() {
            if !s.triple.bicharacter().is_trivial() {
                assert!(adjoint(&d, &s.triple).is_err());
                continue;
            }
            let adj = build_subcat(&d, &adjoint(&d, &s.triple).unwrap()).unwrap();
            assert_eq!(adj.simples, o.adjoint(&s.simples), "{name}: {}", s.triple);
        }
    }
}

#[test]
fn coboundary_twists_preserve_counts() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for name in ["Z4", "S3", "Z2xZ2"] {
        let g = Arc::new(FiniteGroup::builtin(name).unwrap());
        let base = enumerate_all(&double(name)).unwrap().len();
        for _ in 0..3 {
            let n = g.order();
            let mu: Vec<u64> = (0..n * n).map(|i| if i / n == 0 || i % n == 0 { 0 } else { rng.gen_range(0..4) }).collect();
            let w = ThreeCocycle::coboundary(g.clone(), 4, &mu).unwrap();
            let d = TwistedDouble::new(w).unwrap();
            assert_eq!(enumerate_all(&d).unwrap().len(), base, "{name}");
        }
    }
}

#[test]
fn rejects_invalid_input() {
    let d = double("Z2");
    let g = d.group().clone();
    assert!(Triple::from_parts(&d, g.whole(), g.whole(), vec![0, 0, 0]).is_err());
    assert!(Triple::from_parts(&d, g.whole(), g.whole(), vec![0, 1, 0, 0]).is_err());
    assert!(Triple::from_parts(&d, g.whole(), g.whole(), vec![0, 0, 0, 1]).is_ok());
    assert!(triple_of(&d, &[1]).is_err());
    let e = d.index_of(0, 1).unwrap();
    let m = d.index_of(1, 0).unwrap();
    assert!(triple_of(&d, &[0, e, m]).is_err());
}
