//! Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any failure.

use std::sync::Arc;
use std::time::{Duration, Instant};

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use tqd::*;

const FLOAT_TOL: f64 = 1e-9;
const BIJECTION_BUDGET: Duration = Duration::from_secs(60);
const COCYCLE_BUDGET: Duration = Duration::from_secs(60);
const S4_BUDGET: Duration = Duration::from_secs(600);
const S4_CAP: usize = 24;
const ORACLE_CAP: usize = 256;
const SEED: u64 = 0x5eed_2009;

type Check = Result<String, String>;

fn group(name: &str) -> Arc<FiniteGroup> {
    Arc::new(FiniteGroup::builtin(name).expect("builtin group"))
}

fn untwisted(name: &str) -> TwistedDouble {
    TwistedDouble::untwisted(group(name)).expect("untwisted double")
}

fn fail(msg: impl Into<String>) -> Check {
    Err(msg.into())
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

const UNTWISTED: [&str; 7] = ["Z2", "Z3", "Z4", "Z2xZ2", "S3", "D4", "Q8"];

/// Random normalized 2-cochain with values mod `m`.
fn random_cochain(rng: &mut ChaCha8Rng, n: usize, m: u64) -> Vec<u64> {
    (0..n * n)
        .map(|i| if i / n == 0 || i % n == 0 { 0 } else { rng.gen_range(0..m) })
        .collect()
}

/// Every `(G, ω)` the property criteria run on.
fn test_cases() -> Vec<(String, TwistedDouble)> {
    let mut out: Vec<(String, TwistedDouble)> =
        UNTWISTED.iter().map(|&n| (n.to_string(), untwisted(n))).collect();
    for (n, q) in [(2, 1), (3, 1), (3, 2), (4, 1), (4, 2), (4, 3)] {
        let w = ThreeCocycle::builtin_cyclic(n, q).expect("builtin cocycle");
        out.push((format!("Z{n} q={q}"), TwistedDouble::new(w).expect("twisted double")));
    }
    let v4 = group("Z2xZ2");
    let semion = ThreeCocycle::builtin_cyclic(2, 1).unwrap();
    let projection: Vec<usize> = (0..4).map(|x| x / 2).collect();
    let pulled = semion.pullback(v4, &projection).expect("pullback");
    out.push(("Z2xZ2 pulled-back semion".into(), TwistedDouble::new(pulled).unwrap()));
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    for name in ["S3", "D4"] {
        let g = group(name);
        let mu = random_cochain(&mut rng, g.order(), 3);
        let w = ThreeCocycle::coboundary(g, 3, &mu).expect("coboundary");
        out.push((format!("{name} coboundary"), TwistedDouble::new(w).unwrap()));
    }
    out
}

fn criterion_1() -> Check {
    let start = Instant::now();
    let mut counts = Vec::new();
    for name in UNTWISTED {
        let d = untwisted(name);
        let report = certify(&d, ORACLE_CAP).map_err(|e| format!("{name}: {e}"))?;
        ensure(report.matched, || format!("{name}: {:?}", report.mismatches))?;
        counts.push(format!("{name}:{}", report.closed_sets.len()));
        if name == "Z2" {
            ensure(report.closed_sets.len() == 5, || format!("Z2 count {}", report.closed_sets.len()))?;
        }
    }
    let elapsed = start.elapsed();
    ensure(elapsed < BIJECTION_BUDGET, || format!("took {elapsed:?}"))?;
    Ok(format!("{} in {:.2?}", counts.join(" "), elapsed))
}

fn criterion_2() -> Check {
    let z3 = nondegenerate_count(&untwisted("Z3")).map_err(|e| e.to_string())?;
    let z5 = nondegenerate_count(&untwisted("Z5")).map_err(|e| e.to_string())?;
    let p4 = is_prime(&untwisted("Z4")).map_err(|e| e.to_string())?;
    let p2 = is_prime(&untwisted("Z2")).map_err(|e| e.to_string())?;
    ensure(z3 == 2 && z5 == 4 && p4 && p2, || format!("Z3:{z3} Z5:{z5} prime Z4:{p4} Z2:{p2}"))?;
    Ok(format!("nondegenerate Z3={z3} Z5={z5}; Z4, Z2 prime"))
}

fn criterion_3() -> Check {
    let p3 = is_prime(&untwisted("S3")).map_err(|e| e.to_string())?;
    let start = Instant::now();
    let s4 = group("S4");
    ensure(s4.order() <= S4_CAP, || "S4 above cap".into())?;
    let d = TwistedDouble::untwisted(s4).map_err(|e| e.to_string())?;
    let p4 = is_prime(&d).map_err(|e| e.to_string())?;
    let elapsed = start.elapsed();
    ensure(p3 && p4, || format!("S3 prime {p3}, S4 prime {p4}"))?;
    ensure(elapsed < S4_BUDGET, || format!("S4 took {elapsed:?}"))?;
    Ok(format!("S3, S4 prime; S4 in {elapsed:.2?}"))
}

fn criterion_4() -> Check {
    let d = TwistedDouble::new(ThreeCocycle::builtin_cyclic(2, 1).unwrap()).map_err(|e| e.to_string())?;
    let n = d.root_order();
    let ctx = d.context().clone();
    let all = enumerate_all(&d).map_err(|e| e.to_string())?;
    ensure(all.len() == 5, || format!("{} triples", all.len()))?;
    let nd = proper_nondegenerate(&d).map_err(|e| e.to_string())?;
    ensure(nd.len() == 2, || format!("{} proper nondegenerate", nd.len()))?;
    ensure(!is_prime(&d).map_err(|e| e.to_string())?, || "reported prime".into())?;
    let mut signs = Vec::new();
    for t in &nd {
        let e = t.exp(1, 1);
        let sign = match e {
            e if e == n / 4 => 1,
            e if e == 3 * n / 4 => -1,
            _ => return fail(format!("B(1,1) = ζ_{n}^{e}")),
        };
        let i = Cyclo::root(&ctx, (n / 4) as usize);
        let expected = &Cyclo::one(&ctx) + &i.scale_int(sign);
        let tau = gauss_sum(&d, t).map_err(|e| e.to_string())?;
        ensure(tau == expected, || format!("τ = {tau}"))?;
        let zeta = central_charge(&d, t).map_err(|e| e.to_string())?;
        let target = Complex64::from_polar(1.0, sign as f64 * std::f64::consts::FRAC_PI_4);
        ensure((zeta - target).norm() < FLOAT_TOL, || format!("ζ = {zeta}"))?;
        signs.push(sign);
    }
    signs.sort();
    ensure(signs == vec![-1, 1], || format!("signs {signs:?}"))?;
    Ok("5 triples, semion pair B(1,1)=±i, τ=1±i, ζ=e^{±iπ/4}".into())
}

fn criterion_5(cases: &[(String, TwistedDouble)]) -> Check {
    let mut total = 0;
    for (label, d) in cases {
        let g = d.group();
        let g2 = (g.order() * g.order()) as u64;
        for s in enumerate_subcats(d).map_err(|e| format!("{label}: {e}"))? {
            let t = &s.triple;
            let expected = (t.k().len() * g.order() / t.h().len()) as u64;
            ensure(s.dim == expected, || format!("{label} {t}: dim {}", s.dim))?;
            let c = centralizer(t);
            let cd = build_subcat(d, &c).map_err(|e| format!("{label} {c}: {e}"))?.dim;
            ensure(s.dim * cd == g2, || format!("{label} {t}: dim product {}", s.dim * cd))?;
            ensure(&centralizer(&c) == t, || format!("{label} {t}: centralizer not involutive"))?;
            let back = triple_of(d, &s.simples).map_err(|e| format!("{label} {t}: {e}"))?;
            ensure(&back == t, || format!("{label} {t}: round trip gave {back}"))?;
            total += 1;
        }
    }
    Ok(format!("{total} triples over {} cases", cases.len()))
}

fn criterion_6(cases: &[(String, TwistedDouble)]) -> Check {
    let mut total = 0;
    for (label, d) in cases {
        let g = d.group();
        for t in enumerate_all(d).map_err(|e| format!("{label}: {e}"))? {
            gauss_sum(d, &t).map_err(|e| format!("{label} {t}: {e}"))?;
            total += 1;
        }
        let whole = Triple::new(OmegaBicharacter::trivial(g.whole(), g.trivial_subgroup(), d.root_order()));
        let tau = gauss_sum(d, &whole).map_err(|e| e.to_string())?;
        ensure(tau == Cyclo::from_int(d.context(), g.order() as i64), || format!("{label}: τ(whole) = {tau}"))?;
        let zeta = central_charge(d, &whole).map_err(|e| e.to_string())?;
        ensure((zeta - 1.0).norm() < FLOAT_TOL, || format!("{label}: ζ(whole) = {zeta}"))?;
    }
    Ok(format!("formula = Σθd² on {total} triples; τ(whole) = |G|, ζ(whole) = 1"))
}

fn criterion_7(cases: &[(String, TwistedDouble)]) -> Check {
    let mut pairs = 0usize;
    for (label, d) in cases {
        let subcats = enumerate_subcats(d).map_err(|e| format!("{label}: {e}"))?;
        let oracle = if d.is_untwisted() { Some(FusionOracle::new(d).map_err(|e| e.to_string())?) } else { None };
        let err = |e: SubcatError| format!("{label}: {e}");
        for s1 in &subcats {
            let (t1, set1) = (&s1.triple, &s1.simples);
            ensure(&meet(d, t1, t1).map_err(err)? == t1, || format!("{label} {t1}: meet not idempotent"))?;
            ensure(&join(d, t1, t1).map_err(err)? == t1, || format!("{label} {t1}: join not idempotent"))?;
            for s2 in &subcats {
                let (t2, set2) = (&s2.triple, &s2.simples);
                let m = meet(d, t1, t2).map_err(err)?;
                let j = join(d, t1, t2).map_err(err)?;
                ensure(m == meet(d, t2, t1).map_err(err)?, || format!("{label}: meet not commutative"))?;
                ensure(j == join(d, t2, t1).map_err(err)?, || format!("{label}: join not commutative"))?;
                ensure(&meet(d, t1, &j).map_err(err)? == t1, || format!("{label}: absorption t∧(t∨s)"))?;
                ensure(&join(d, t1, &m).map_err(err)? == t1, || format!("{label}: absorption t∨(t∧s)"))?;
                if let Some(o) = &oracle {
                    let inter: Vec<usize> = set1.iter().copied().filter(|x| set2.contains(x)).collect();
                    let ms = build_subcat(d, &m).map_err(err)?.simples;
                    ensure(ms == inter, || format!("{label}: meet({t1},{t2}) ≠ intersection"))?;
                    let union: Vec<usize> = set1.iter().chain(set2).copied().collect();
                    let js = build_subcat(d, &j).map_err(err)?.simples;
                    ensure(js == o.fusion_closure(&union), || format!("{label}: join({t1},{t2}) ≠ closure"))?;
                }
                pairs += 1;
            }
        }
    }
    Ok(format!("{pairs} ordered pairs"))
}

fn criterion_8() -> Check {
    let start = Instant::now();
    let mut cocycles = Vec::new();
    for n in 1..=8 {
        for q in 0..n {
            cocycles.push((format!("Z{n} q={q}"), ThreeCocycle::builtin_cyclic(n, q).map_err(|e| e.to_string())?));
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    let mut groups: Vec<(String, Arc<FiniteGroup>)> =
        (1..=8).map(|n| (format!("Z{n}"), Arc::new(FiniteGroup::cyclic(n)))).collect();
    let z2 = FiniteGroup::cyclic(2);
    let z4 = FiniteGroup::cyclic(4);
    let v4 = FiniteGroup::direct_product(&z2, &z2);
    groups.push(("Z2xZ2".into(), Arc::new(v4.clone())));
    groups.push(("Z2xZ4".into(), Arc::new(FiniteGroup::direct_product(&z2, &z4))));
    groups.push(("Z2xZ2xZ2".into(), Arc::new(FiniteGroup::direct_product(&v4, &z2))));
    for name in ["S3", "D4", "Q8"] {
        groups.push((name.into(), group(name)));
    }
    for (name, g) in &groups {
        let cyclic_order = name.strip_prefix('Z').and_then(|s| s.parse::<usize>().ok());
        for k in 0..20 {
            let m: u64 = rng.gen_range(2..=6);
            let mu = random_cochain(&mut rng, g.order(), m);
            let cob = ThreeCocycle::coboundary(g.clone(), m, &mu).map_err(|e| e.to_string())?;
            let w = match cyclic_order {
                Some(n) => ThreeCocycle::builtin_cyclic(n, rng.gen_range(0..n)).unwrap().product(&cob),
                None => cob,
            };
            cocycles.push((format!("{name} twist {k}"), w));
        }
    }
    let mut checks = 0usize;
    for (label, w) in &cocycles {
        let report = w.check_identities().map_err(|e| format!("{label}: {e}"))?;
        checks += report.total();
    }
    let elapsed = start.elapsed();
    ensure(elapsed < COCYCLE_BUDGET, || format!("took {elapsed:?}"))?;
    Ok(format!("{} cocycles, {checks} identity instances in {elapsed:.2?}", cocycles.len()))
}

fn criterion_9() -> Check {
    let mut terms = 0;
    for name in ["D4", "S3"] {
        let d = untwisted(name);
        let o = FusionOracle::new(&d).map_err(|e| e.to_string())?;
        let upper = o.upper_series();
        let lower = o.lower_series();
        let depth = upper.len().max(lower.len()) + 1;
        for n in 1..=depth {
            let want_u = &upper[n.min(upper.len() - 1)];
            let t = upper_central_term(&d, n).map_err(|e| e.to_string())?;
            let got = build_subcat(&d, &t).map_err(|e| e.to_string())?.simples;
            ensure(&got == want_u, || format!("{name}: upper term {n} = {t}"))?;
            let want_l = &lower[n.min(lower.len() - 1)];
            let t = lower_central_term(&d, n).map_err(|e| e.to_string())?;
            let got = build_subcat(&d, &t).map_err(|e| e.to_string())?.simples;
            ensure(&got == want_l, || format!("{name}: lower term {n} = {t}"))?;
            terms += 2;
        }
    }
    Ok(format!("{terms} terms match the iterated adjoint/commutator"))
}

fn criterion_10(cases: &[(String, TwistedDouble)]) -> Check {
    let mut tables = 0;
    let mut subcats = 0;
    let mut groups: Vec<&str> = UNTWISTED.to_vec();
    groups.push("S4");
    for name in groups {
        let g = group(name);
        let ctx = CycloContext::new(g.exponent());
        let t = CharacterTable::ordinary(g.clone(), &ctx).map_err(|e| format!("{name}: {e}"))?;
        t.verify(&ctx).map_err(|e| format!("{name}: {e}"))?;
        let sum: u64 = t.degrees().iter().map(|&x| (x as u64).pow(2)).sum();
        ensure(sum == g.order() as u64, || format!("{name}: Σd² = {sum}"))?;
        tables += 1;
    }
    for (label, d) in cases {
        let g = d.group();
        for cid in 0..g.num_classes() {
            let table = d.table(cid);
            table.verify(d.context()).map_err(|e| format!("{label} class {cid}: {e}"))?;
            let sum: u64 = table.degrees().iter().map(|&x| (x as u64).pow(2)).sum();
            ensure(sum == g.class_centralizer(cid).len() as u64, || format!("{label} class {cid}: Σd² = {sum}"))?;
            tables += 1;
        }
        subcats += enumerate_subcats(d).map_err(|e| format!("{label}: {e}"))?.len();
    }
    Ok(format!("{tables} tables verified; counting identity held on {subcats} constructions"))
}

fn main() {
    let start = Instant::now();
    let cases = test_cases();
    let results: Vec<(usize, &str, Check)> = vec![
        (1, "bijection certification", criterion_1()),
        (2, "Z/p remark", criterion_2()),
        (3, "S_n primality", criterion_3()),
        (4, "twisted Z/2 sanity", criterion_4()),
        (5, "dimension and duality laws", criterion_5(&cases)),
        (6, "Gauss sum double computation", criterion_6(&cases)),
        (7, "lattice laws", criterion_7(&cases)),
        (8, "cocycle identity suite", criterion_8()),
        (9, "central series", criterion_9()),
        (10, "character engine", criterion_10(&cases)),
    ];
    let mut failed = 0;
    for (k, name, r) in &results {
        match r {
            Ok(detail) => println!("criterion {k:>2} PASS  {name}: {detail}"),
            Err(detail) => {
                failed += 1;
                println!("criterion {k:>2} FAIL  {name}: {detail}");
            }
        }
    }
    println!("acceptance: {} passed, {failed} failed in {:.2?}", results.len() - failed, start.elapsed());
    if failed > 0 {
        std::process::exit(1);
    }
}
