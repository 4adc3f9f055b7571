//! Acceptance criteria 1–10, one pass/fail line each.

use std::collections::BTreeSet;
use std::process::{Command, ExitCode};
use std::time::{Duration, Instant};

use strong_atoms::ivpoly::{
    divides_in_intz, half_cubic_split, is_integer_valued, legendre_vp_factorial, verify_no_prime_witness,
};
use strong_atoms::krull::{
    brute_force_absirred, brute_force_witness, check_bg_all_absirred, classify_scenario, is_absirred_kernel,
    is_absirred_support, witness_non_absirred, Bounds, Decision,
};
use strong_atoms::nummon::{nm_atoms, nm_factorizations, nm_witness_non_absirred, NumericalMonoid};
use strong_atoms::quadratic::{
    elements_of_norm, half_factorial_up_to, quad_brute_absirred, quad_divides, quad_is_irreducible,
    quad_is_prime_witness, PrimeReport, DEFAULT_NODE_BUDGET,
};
use strong_atoms::zsm::{self, ClassSet};
use strong_atoms::{Group, Int, QuadInt, QuadRing, RatPoly};
use strong_atoms_cli::suite::{r1_expected_atoms, r1_spec, r1_uv, GROUPS_UP_TO_10, TRIVIAL, Z2_DOUBLED};
use strong_atoms_cli::LoadedSpec;

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn within(start: Instant, limit: Duration) -> Result<(), String> {
    let t = start.elapsed();
    ensure(t < limit, || format!("took {t:?}, limit {limit:?}"))
}

fn group(torsion: &[i64]) -> Group {
    Group::new(0, torsion.iter().map(|&d| Int::from(d)).collect()).unwrap()
}

fn c1_r1_atoms() -> Outcome {
    for n in 2..=4 {
        let start = Instant::now();
        let spec = r1_spec(n, false);
        let atoms = zsm::enumerate_atoms(spec.class_set()).map_err(|e| e.to_string())?;
        within(start, Duration::from_secs(1))?;
        let got: BTreeSet<String> = atoms.atoms().iter().map(|u| spec.render(u)).collect();
        ensure(atoms.len() == n + 3, || format!("n = {n}: {} atoms", atoms.len()))?;
        ensure(got == r1_expected_atoms(n), || format!("n = {n}: {got:?}"))?;
    }
    Ok("n + 3 atoms for n = 2, 3, 4".into())
}

fn c2_lengths_and_rows() -> Outcome {
    let start = Instant::now();
    for n in 2..=4 {
        let spec = r1_spec(n, false);
        let atoms = zsm::enumerate_atoms(spec.class_set()).map_err(|e| e.to_string())?;
        let l = zsm::length_set(&r1_uv(&spec), &atoms).map_err(|e| e.to_string())?;
        ensure(l == BTreeSet::from([2, n + 1]), || format!("n = {n}: L(UV) = {l:?}"))?;
    }
    let b = Bounds::default();
    let r1 = classify_scenario(&r1_spec(2, false).spec, &b).map_err(|e| e.to_string())?.row_label();
    let r2 = classify_scenario(&r1_spec(2, true).spec, &b).map_err(|e| e.to_string())?.row_label();
    ensure(r1 == "(-, +, -)", || format!("R1 row {r1}"))?;
    ensure(r2 == "(-, +, +)", || format!("R2 row {r2}"))?;
    within(start, Duration::from_secs(1))?;
    Ok(format!("L(UV) = {{2, n+1}}, R1 {r1}, R2 {r2}"))
}

fn c3_bg() -> Outcome {
    let start = Instant::now();
    for torsion in GROUPS_UP_TO_10 {
        let g = group(torsion);
        let order = g.cardinality().unwrap();
        let v = check_bg_all_absirred(&g).map_err(|e| e.to_string())?;
        ensure(v.holds == (order <= Int::from(2)), || format!("{g}: holds = {}", v.holds))?;
        if !v.holds {
            let w = v.witness.as_ref().ok_or_else(|| format!("{g}: no witness"))?;
            ensure(w.verify(), || format!("{g}: witness does not re-multiply"))?;
        }
    }
    within(start, Duration::from_secs(5))?;
    Ok(format!("{} groups, true exactly for |G| <= 2", GROUPS_UP_TO_10.len()))
}

fn c4_agreement() -> Outcome {
    let start = Instant::now();
    let (mut checked, mut beyond) = (0usize, 0usize);
    for torsion in &GROUPS_UP_TO_10[..11] {
        let g = group(torsion);
        let elements = g.elements().unwrap();
        let n = elements.len();
        for mask in 1u32..(1 << n) {
            let classes = (0..n).filter(|i| mask & (1 << i) != 0).map(|i| elements[i].clone()).collect();
            let cs = ClassSet::new(g.clone(), classes).unwrap();
            let atoms = zsm::enumerate_atoms(&cs).map_err(|e| e.to_string())?;
            for u in atoms.atoms() {
                let name = || format!("{g}, mask {mask}, {}", cs.render(u));
                let support = is_absirred_support(u, &atoms).map_err(|e| e.to_string())?;
                let kernel = is_absirred_kernel(&g, &cs.support(u)).map_err(|e| e.to_string())?;
                let witness = witness_non_absirred(u, &atoms).map_err(|e| e.to_string())?;
                ensure(support == kernel && support == witness.is_none(), || format!("{}: tests disagree", name()))?;
                match witness {
                    None => {
                        let brute = brute_force_absirred(u, &atoms, 4).map_err(|e| e.to_string())?;
                        ensure(brute, || format!("{}: oracle finds a rival factorization", name()))?;
                    }
                    Some(w) => {
                        ensure(w.verify(u, &atoms), || format!("{}: witness invalid", name()))?;
                        let found =
                            brute_force_witness(u, &atoms, w.n, DEFAULT_NODE_BUDGET).map_err(|e| e.to_string())?;
                        ensure(found.is_some(), || format!("{}: oracle misses n = {}", name(), w.n))?;
                        beyond += usize::from(w.n > 4);
                    }
                }
                checked += 1;
            }
        }
    }
    within(start, Duration::from_secs(60))?;
    Ok(format!("{checked} atoms; {beyond} non-absolutely irreducible atoms need a power above 4"))
}

fn c5_repeated_class() -> Outcome {
    let b = Bounds::default();
    let doubled = LoadedSpec::from_toml(Z2_DOUBLED).map_err(|e| e.to_string())?;
    let report = classify_scenario(&doubled.spec, &b).map_err(|e| e.to_string())?;
    ensure(report.has_nonabsirred == Decision::Yes, || "Z/2 doubled: no non-absolutely irreducible".into())?;
    let w = report.nonabs_witness.ok_or("Z/2 doubled: no witness")?;
    ensure(w.lifted_class.is_some() && w.n == 2, || "Z/2 doubled: witness is not a lifted square".into())?;
    ensure(w.verify(), || "Z/2 doubled: b^2 = a*c fails".into())?;
    ensure(w.confirm_by_search(b.budget).map_err(|e| e.to_string())?, || "Z/2 doubled: search disagrees".into())?;
    let trivial = LoadedSpec::from_toml(TRIVIAL).map_err(|e| e.to_string())?;
    let row = classify_scenario(&trivial.spec, &b).map_err(|e| e.to_string())?.row_label();
    ensure(row == "(-, -, +)", || format!("trivial row {row}"))?;
    Ok(format!("Z/2 doubled has a verified b^2 = a*c witness, trivial group {row}"))
}

fn c6_numerical() -> Outcome {
    let start = Instant::now();
    for n in 2..=8 {
        let m = NumericalMonoid::interval(n).map_err(|e| e.to_string())?;
        for a in nm_atoms(&m) {
            let w = nm_witness_non_absirred(&m, a).map_err(|e| e.to_string())?;
            ensure(w.verify(&m), || format!("M_{n}, atom {a}: witness invalid"))?;
        }
    }
    let m1 = NumericalMonoid::interval(1).map_err(|e| e.to_string())?;
    for x in 1..=30 {
        let fs = nm_factorizations(&m1, x).map_err(|e| e.to_string())?;
        ensure(fs.len() == 1, || format!("M_1: {x} has {} factorizations", fs.len()))?;
    }
    within(start, Duration::from_secs(1))?;
    Ok("M_2..M_8 witnessed, M_1 factorial to 30".into())
}

fn c7_intz() -> Outcome {
    let start = Instant::now();
    let e = |e: strong_atoms::Error| e.to_string();
    let split = half_cubic_split::<Int>();
    ensure(is_integer_valued(&split.f), || "f not integer-valued".into())?;
    ensure(split.verify() && split.essentially_different(), || "f^2 cofactor check".into())?;
    let two = RatPoly::int(2);
    let x = RatPoly::x();
    let x1 = RatPoly::linear(&Int::from(1));
    ensure(divides_in_intz(&two, &(&x * &x1)).map_err(e)?, || "2 does not divide x(x-1)".into())?;
    ensure(!divides_in_intz(&two, &x).map_err(e)?, || "2 divides x".into())?;
    ensure(!divides_in_intz(&two, &x1).map_err(e)?, || "2 divides x-1".into())?;
    for (g, p) in [(x.clone(), 2), (RatPoly::from_ints(&[1, 0, 1]), 5)] {
        let r = verify_no_prime_witness(&g, &Int::from(p)).map_err(e)?;
        ensure(r.verified(), || format!("no-prime construction for {g}, p = {p}"))?;
    }
    for p in [2, 3, 5] {
        let p = Int::from(p);
        let v = legendre_vp_factorial(&p, &(&p * &p)).map_err(e)?;
        ensure(v == &p + 1, || format!("v_{p}(({p}^2)!) = {v}"))?;
    }
    within(start, Duration::from_secs(1))?;
    Ok("half cubic, 2 | x(x-1), no-prime constructions, v_p(p^2!)".into())
}

fn c8_sqrt_minus_14() -> Outcome {
    let start = Instant::now();
    let e = |e: strong_atoms::Error| e.to_string();
    let r = QuadRing::new(Int::from(-14)).map_err(e)?;
    let two = QuadInt::int(2);
    let root = QuadInt::root();
    ensure(elements_of_norm(&r, &Int::from(2)).is_empty(), || "an element of norm 2".into())?;
    ensure(quad_is_irreducible(&r, &two).map_err(e)?, || "2 reducible".into())?;
    match quad_is_prime_witness(&r, &two).map_err(e)? {
        PrimeReport::NonPrimeWitness { x, y } => {
            ensure(x == root && y == root, || format!("witness ({x})({y})"))?;
            ensure(quad_divides(&r, &two, &r.mul(&x, &y)).map_err(e)?, || "2 does not divide the product".into())?;
            ensure(!quad_divides(&r, &two, &x).map_err(e)?, || "2 divides the factor".into())?;
        }
        other => return Err(format!("2: {other:?}")),
    }
    ensure(quad_brute_absirred(&r, &two, 3, DEFAULT_NODE_BUDGET).map_err(e)?.holds, || "2 not absirred".into())?;
    let a = quad_brute_absirred(&r, &root, 2, DEFAULT_NODE_BUDGET).map_err(e)?;
    let (n, f) = a.witness.ok_or("no witness for the root")?;
    ensure(f.product(&r) == r.pow(&root, n), || "root witness does not re-multiply".into())?;
    match quad_is_prime_witness(&r, &QuadInt::int(11)).map_err(e)? {
        PrimeReport::PrimeByEuler { p } if p == Int::from(11) => {}
        other => return Err(format!("11: {other:?}")),
    }
    within(start, Duration::from_secs(10))?;
    Ok(format!("norm 2 empty, 2 irreducible non-prime, (√-14)^{n} = {f}, 11 prime"))
}

fn c9_sqrt_minus_5() -> Outcome {
    let start = Instant::now();
    let r = QuadRing::new(Int::from(-5)).map_err(|e| e.to_string())?;
    let c = half_factorial_up_to(&r, &Int::from(200), DEFAULT_NODE_BUDGET).map_err(|e| e.to_string())?;
    ensure(c.holds(), || format!("counterexample {:?}", c.counterexample))?;
    within(start, Duration::from_secs(30))?;
    Ok(format!("{} elements up to norm 200", c.elements_checked))
}

fn c10_determinism() -> Outcome {
    let run = || {
        Command::new(env!("CARGO_BIN_EXE_strong-atoms"))
            .args(["--machine", "verify"])
            .output()
            .map_err(|e| e.to_string())
    };
    let (a, b) = (run()?, run()?);
    ensure(a.status.code() == Some(0) && b.status.code() == Some(0), || format!("exit {:?}, {:?}", a.status, b.status))?;
    ensure(a.stdout == b.stdout, || "machine reports differ".into())?;
    Ok(format!("{} identical bytes, exit 0", a.stdout.len()))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 10] = [
        ("R1 atoms", c1_r1_atoms),
        ("R1 lengths and rows", c2_lengths_and_rows),
        ("B(G) for |G| <= 10", c3_bg),
        ("criterion agreement, |G| <= 8", c4_agreement),
        ("divisor-class multiplicity", c5_repeated_class),
        ("numerical monoids", c6_numerical),
        ("integer-valued polynomials", c7_intz),
        ("Z[sqrt(-14)]", c8_sqrt_minus_14),
        ("Z[sqrt(-5)] half-factorial", c9_sqrt_minus_5),
        ("verify determinism", c10_determinism),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = run();
        let ms = start.elapsed().as_millis();
        match outcome {
            Ok(detail) => println!("criterion {:>2} PASS  {name}: {detail} ({ms} ms)", i + 1),
            Err(why) => {
                failed += 1;
                println!("criterion {:>2} FAIL  {name}: {why} ({ms} ms)", i + 1);
            }
        }
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
