//! Acceptance suite. Prints one PASS/FAIL line per criterion and exits
//! nonzero if any criterion fails. All comparisons are exact.

mod common;

use std::process::Command;
use std::time::{Duration, Instant};

use arrcoh::arrangement::{abelian_duality_constraints, build_flat_poset, corank, duality_dimension, whitney_poincare, DualityKind};
use arrcoh::charvar::{run_sweep, SweepData};
use arrcoh::corpus::{real_corpus, three_subtori, toric_corpus, CorpusEntry};
use arrcoh::orbitconfig::{
    classify_duality, enumerate_strata, euler_orbit_config, signed_euler_consistency, unordered_euler_series, OrbitConfigSpec, Verdict,
};
use arrcoh::salvetti::{build_cw_model, enumerate_faces, twisted_betti, Character, SweepMode};
use arrcoh::toric::{component_count, layer_poset, toric_duality_check, toric_poincare, ToricArrangement};
use arrcoh::wonderful::{all_gamma_classes, building_set, nested_set_complex, BuildingFlavor};
use arrcoh::arrangement::Polynomial;
use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive};

type Outcome = Result<String, String>;

fn check(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn within(start: Instant, limit: Duration, what: &str) -> Result<(), String> {
    let t = start.elapsed();
    check(t < limit, || format!("{what} took {t:?}, limit {limit:?}"))
}

fn untwisted(corpus: &[CorpusEntry]) -> Outcome {
    let start = Instant::now();
    check(corpus.len() >= 10, || "corpus too small".into())?;
    for e in corpus {
        let model = build_cw_model(&enumerate_faces(&e.arrangement).map_err(|err| err.to_string())?);
        let poin = whitney_poincare(&build_flat_poset(&e.arrangement));
        let over_q = model.untwisted_betti();
        let over_p = twisted_betti(&model, &Character::trivial(5, e.arrangement.len()).unwrap()).unwrap();
        for (q, (a, b)) in over_q.iter().zip(&over_p).enumerate() {
            let w = poin.coeff(q).to_usize().unwrap();
            check(*a == w && *b == w, || format!("{} degree {q}: Q {a}, GF(5) {b}, Whitney {w}", e.name))?;
        }
        check(poin.degree().map_or(0, |d| d + 1) <= over_q.len(), || format!("{}: Whitney degree too high", e.name))?;
    }
    within(start, Duration::from_secs(60), "untwisted check")?;
    Ok(format!("{} arrangements in {:?}", corpus.len(), start.elapsed()))
}

struct Sweeps {
    runs: Vec<(String, Vec<Vec<i64>>, SweepData)>,
    elapsed: Duration,
}

fn sweeps(corpus: &[CorpusEntry]) -> Result<Sweeps, String> {
    let start = Instant::now();
    let mut runs = Vec::new();
    for (i, e) in corpus.iter().enumerate() {
        let a = &e.arrangement;
        let p = build_flat_poset(a);
        let gammas = all_gamma_classes(&building_set(a, &p, BuildingFlavor::Minimal));
        let mut modes = Vec::new();
        if a.len() <= 4 {
            modes.push((5, SweepMode::Exhaustive));
            modes.push((7, SweepMode::Exhaustive));
        }
        if a.len() <= 6 {
            modes.push((11, SweepMode::Sampled { samples: 2000, seed: 1_000 + i as u64 }));
        }
        for (prime, mode) in modes {
            let data = run_sweep(a, prime, mode).map_err(|err| format!("{}: {err}", e.name))?;
            runs.push((format!("{} p={prime} {}", e.name, mode.name()), gammas.clone(), data));
        }
    }
    Ok(Sweeps { runs, elapsed: start.elapsed() })
}

fn euler_invariance(s: &Sweeps) -> Outcome {
    let mut evaluations = 0;
    for (name, _, d) in &s.runs {
        evaluations += d.characters.len();
        let bad = d.euler_mismatches();
        check(bad.is_empty(), || format!("{name}: {} characters with the wrong Euler characteristic, first {:?}", bad.len(), bad[0]))?;
    }
    check(evaluations >= 10_000, || format!("only {evaluations} evaluations"))?;
    Ok(format!("{evaluations} character evaluations"))
}

fn propagation(s: &Sweeps) -> Outcome {
    let mut total = 0;
    for (name, gammas, d) in &s.runs {
        let r = d.propagation(gammas);
        check(r.violations.is_empty(), || format!("{name}: {} violations, first {:?}", r.violations.len(), r.violations[0]))?;
        check(r.v0_is_trivial, || format!("{name}: V^0 is not the trivial character"))?;
        total += r.evaluated;
    }
    check(s.elapsed < Duration::from_secs(300), || format!("sweeps took {:?}", s.elapsed))?;
    Ok(format!("{} sweeps, {total} characters, {:?}", s.runs.len(), s.elapsed))
}

fn generic_vanishing(s: &Sweeps) -> Outcome {
    let mut nonresonant = 0;
    for (name, gammas, d) in &s.runs {
        let r = d.generic_vanishing(gammas, BuildingFlavor::Minimal);
        check(r.violations.is_empty(), || format!("{name}: {} exceptions, first {:?}", r.violations.len(), r.violations[0]))?;
        nonresonant += r.nonresonant_count;
    }
    check(nonresonant > 0, || "no nonresonant characters were swept".into())?;
    Ok(format!("{nonresonant} nonresonant characters, zero exceptions"))
}

fn nested(corpus: &[CorpusEntry]) -> Outcome {
    let mut checked = 0;
    for e in corpus.iter().filter(|e| e.arrangement.len() <= 6) {
        let p = build_flat_poset(&e.arrangement);
        for flavor in [BuildingFlavor::Minimal, BuildingFlavor::Maximal] {
            let g = building_set(&e.arrangement, &p, flavor);
            let mut faces = nested_set_complex(&g).faces().to_vec();
            for f in &mut faces {
                f.sort();
            }
            faces.sort_by(|a, b| (a.len(), a).cmp(&(b.len(), b)));
            check(faces == common::nested_brute(&g), || format!("{} {flavor:?}: complex differs from brute force", e.name))?;
            if flavor == BuildingFlavor::Maximal {
                check(faces.iter().all(|f| common::is_chain(&p, f)), || format!("{}: maximal nested set that is not a chain", e.name))?;
                let m = g.members();
                let chains = (0u64..1 << m.len())
                    .filter(|mask| common::is_chain(&p, &(0..m.len()).filter(|i| mask >> i & 1 == 1).map(|i| m[i]).collect::<Vec<_>>()))
                    .count();
                check(chains == faces.len(), || format!("{}: {} chains but {} nested sets", e.name, chains, faces.len()))?;
            }
            checked += 1;
        }
    }
    Ok(format!("{checked} complexes"))
}

fn duality_table(corpus: &[CorpusEntry]) -> Outcome {
    let mut entries = 0;
    for (n, r) in [(1, 0), (2, 0), (2, 1), (3, 1)] {
        for (kind, want) in [(DualityKind::Linear, n - r), (DualityKind::Elliptic, n + r), (DualityKind::Toric, n)] {
            let got = duality_dimension(kind, n, r, 1).map_err(|e| e.to_string())?;
            check(got == want, || format!("{kind:?} n={n} r={r}: {got}, expected {want}"))?;
            entries += 1;
        }
    }
    let mut linear = 0;
    for e in corpus.iter().filter(|e| corank(&e.arrangement) == 0) {
        let poin = whitney_poincare(&build_flat_poset(&e.arrangement));
        let c = abelian_duality_constraints(&poin, e.arrangement.dim());
        check(c.passes(), || format!("{}: {c:?}", e.name))?;
        linear += 1;
    }
    for e in toric_corpus() {
        let r = toric_duality_check(&e.arrangement);
        check(r.passes(), || format!("toric {}: {:?}", e.name, r.constraints))?;
    }
    Ok(format!("{entries} table entries, {linear} essential linear and {} toric arrangements", toric_corpus().len()))
}

fn toric() -> Outcome {
    for d in 1..=5 {
        let p = toric_poincare(&layer_poset(&ToricArrangement::punctured_circle(d)));
        check(p == Polynomial::from_i64(&[1, d as i64 + 1]), || format!("d={d}: {p}"))?;
    }
    let corpus = toric_corpus();
    let mut products = 0;
    for a in &corpus[..4] {
        for b in &corpus[..4] {
            let pa = toric_poincare(&layer_poset(&a.arrangement));
            let pb = toric_poincare(&layer_poset(&b.arrangement));
            let pab = toric_poincare(&layer_poset(&a.arrangement.product(&b.arrangement)));
            check(pab == pa.mul(&pb), || format!("{} x {}", a.name, b.name))?;
            products += 1;
        }
    }
    let t = three_subtori();
    let grid = common::torsion_grid(&t);
    for mask in 1u32..8 {
        let subset: Vec<usize> = (0..3).filter(|i| mask >> i & 1 == 1).collect();
        let cc = component_count(&t, &subset);
        let want = if subset.len() == 1 { 1 } else { common::torsion_points_on(&t, &subset, grid).len() };
        check(cc.count == BigInt::from(want), || format!("subset {subset:?}: {} components, {want} expected", cc.count))?;
    }
    let r = toric_duality_check(&t);
    check(r.layers == 5 && r.constraints.signed_euler_ok, || format!("three subtori: {r:?}"))?;
    Ok(format!("d = 1..5, {products} products, three subtori with euler {}", r.euler))
}

fn expected_classification(g: u32, k: u32, n: usize, m: u32) -> (Verdict, Verdict, Option<usize>) {
    use Verdict::*;
    match (g, k) {
        (_, k) if k > 0 => (Yes, Yes, Some(n)),
        (0, _) if m == 1 || n == 1 => (No, No, None),
        (0, _) => (Unknown, Unknown, None),
        (1, _) => (Yes, Yes, Some(n + 1)),
        _ if m == 1 || n == 1 => (Yes, No, Some(n + 1)),
        _ => (Yes, Unknown, Some(n + 1)),
    }
}

fn euler_identities() -> Outcome {
    for g in 0..=4u32 {
        let series = unordered_euler_series(g, 8);
        let mut fact = BigInt::from(1);
        for n in 1..=8usize {
            fact *= n;
            let product: BigInt = (0..n as i64).map(|i| BigInt::from(2 - 2 * g as i64 - i)).product();
            check(&fact * &series[n] == product, || format!("g={g} n={n}"))?;
        }
    }
    let e = euler_orbit_config(&OrbitConfigSpec::new(2, 0, 3, 1).unwrap());
    check(e == BigInt::from(-24), || format!("euler(2,0,3,1) = {e}"))?;
    let mut grid = 0;
    let mut mismatches = Vec::new();
    for g in 0..=3 {
        for k in 0..=4 {
            for n in 1..=5 {
                for m in [1u32, 2] {
                    if k % m != 0 {
                        continue;
                    }
                    let spec = OrbitConfigSpec::new(g, k, n, m).map_err(|e| e.to_string())?;
                    let c = classify_duality(&spec);
                    let want = expected_classification(g, k, n, m);
                    if (c.is_duality, c.is_abelian_duality, c.dimension) != want {
                        mismatches.push(format!("({g},{k},{n},{m}) got {:?}/{:?}/{:?} table {want:?}", c.is_duality, c.is_abelian_duality, c.dimension));
                    }
                    let s = signed_euler_consistency(&spec);
                    check(s.consistent, || format!("(g,k,n,m)=({g},{k},{n},{m}): {s:?}"))?;
                    let table_sign = match want {
                        (_, Verdict::Yes, Some(d)) => d % 2 == 0 || !s.euler.is_positive(),
                        _ => true,
                    };
                    if !table_sign {
                        mismatches.push(format!("({g},{k},{n},{m}) table dimension fails the sign test, chi = {}", s.euler));
                    }
                    grid += 1;
                }
            }
        }
    }
    check(mismatches.is_empty(), || format!("{} discrepancies with the theorem table over {grid} specs: {}", mismatches.len(), mismatches.join("; ")))?;
    Ok(format!("series g<=4 n<=8, {grid} classified specs, witnesses n=2..5"))
}

fn strata_counts() -> Outcome {
    for n in 1..=7 {
        let s = enumerate_strata(&OrbitConfigSpec::new(1, 0, n, 1).unwrap()).map_err(|e| e.to_string())?;
        check(s.len() as u64 == common::bell(n), || format!("n={n}: {} strata", s.len()))?;
    }
    let mut partitions = 0;
    for m in 1..=3u32 {
        for n in 1..=5usize {
            let s = enumerate_strata(&OrbitConfigSpec::new(1, 0, n, m).unwrap()).map_err(|e| e.to_string())?;
            let mut by: std::collections::BTreeMap<Vec<Vec<usize>>, usize> = Default::default();
            for x in &s {
                *by.entry(x.partition()).or_default() += 1;
            }
            for (pi, c) in by {
                let want: usize = pi.iter().map(|b| common::label_classes(b.len(), m)).product();
                check(c == want, || format!("m={m} {pi:?}: {c} strata, {want} label classes"))?;
                partitions += 1;
            }
        }
    }
    Ok(format!("Bell n<=7, {partitions} partitions checked"))
}

fn determinism(corpus: &[CorpusEntry]) -> Outcome {
    let a = &corpus.iter().find(|e| e.name == "braid_essential3").unwrap().arrangement;
    let mode = SweepMode::Sampled { samples: 500, seed: 99 };
    let gammas = all_gamma_classes(&building_set(a, &build_flat_poset(a), BuildingFlavor::Minimal));
    let json = || serde_json::to_string(&run_sweep(a, 7, mode).unwrap().propagation(&gammas)).unwrap();
    check(json() == json(), || "library reports differ".into())?;
    let cli = || {
        Command::new(env!("CARGO_BIN_EXE_arrcoh"))
            .current_dir(env!("CARGO_MANIFEST_DIR"))
            .args(["propagate", "data/deconed_braid.arr", "--prime", "7", "--samples", "300", "--seed", "5", "--output", "json"])
            .output()
            .unwrap()
            .stdout
    };
    let (x, y) = (cli(), cli());
    check(!x.is_empty() && x == y, || "CLI outputs differ".into())?;
    Ok(format!("{} identical CLI bytes", x.len()))
}

fn main() {
    let corpus = real_corpus();
    let mut failed = 0;
    let mut report = |n: usize, name: &str, r: Outcome| {
        match r {
            Ok(msg) => println!("PASS criterion {n} ({name}): {msg}"),
            Err(msg) => {
                failed += 1;
                println!("FAIL criterion {n} ({name}): {msg}");
            }
        }
    };
    report(1, "untwisted oracle", untwisted(&corpus));
    match sweeps(&corpus) {
        Ok(s) => {
            report(2, "Euler invariance", euler_invariance(&s));
            report(3, "propagation", propagation(&s));
            report(4, "generic vanishing", generic_vanishing(&s));
        }
        Err(e) => {
            for (n, name) in [(2, "Euler invariance"), (3, "propagation"), (4, "generic vanishing")] {
                report(n, name, Err(e.clone()));
            }
        }
    }
    report(5, "nested sets", nested(&corpus));
    report(6, "duality dimensions", duality_table(&corpus));
    report(7, "toric oracle", toric());
    report(8, "configuration space Euler identities", euler_identities());
    report(9, "stratification counts", strata_counts());
    report(10, "determinism", determinism(&corpus));
    if failed > 0 {
        println!("{failed} criteria failed");
        std::process::exit(1);
    }
}
