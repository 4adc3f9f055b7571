//! The bundled verification suite behind `strong-atoms verify`.

use std::collections::BTreeSet;
use std::fmt::Display;

use serde_json::{json, Value};

use strong_atoms::ivpoly::{
    divides_in_intz, half_cubic_split, legendre_vp_factorial, residue_product_witness, rp_membership,
    rp_residue_element, rp_square_split, verify_no_prime_witness,
};
use strong_atoms::krull::{
    check_bg_all_absirred, classify_scenario, infinite_order_witness, is_absirred_support, witness_non_absirred,
    Bounds,
};
use strong_atoms::nummon::{nm_atoms, nm_factorizations, nm_witness_non_absirred, NumericalMonoid};
use strong_atoms::quadratic::{
    elements_of_norm, half_factorial_up_to, quad_brute_absirred, quad_is_irreducible, quad_is_prime_witness,
    PrimeReport, DEFAULT_NODE_BUDGET,
};
use strong_atoms::zsm::{self, Sequence};
use strong_atoms::{Group, Int, QuadInt, QuadRing, RatPoly, Result};

use crate::commands::Outcome;
use crate::report::table;
use crate::specfile::{GroupSection, LoadedSpec, MultEntry, SpecFile};

pub const R1_N2: &str = include_str!("../specs/r1_n2.toml");
pub const R2_N2: &str = include_str!("../specs/r2_n2.toml");
pub const Z2_DOUBLED: &str = include_str!("../specs/z2_doubled.toml");
pub const Z3_FULL: &str = include_str!("../specs/z3_full.toml");
pub const TRIVIAL: &str = include_str!("../specs/trivial.toml");
pub const Z_SUBSET: &str = include_str!("../specs/z_subset.toml");

/// Invariant factors of every abelian group of order at most 10.
pub const GROUPS_UP_TO_10: &[&[i64]] = &[
    &[],
    &[2],
    &[3],
    &[4],
    &[2, 2],
    &[5],
    &[6],
    &[7],
    &[8],
    &[2, 4],
    &[2, 2, 2],
    &[9],
    &[3, 3],
    &[10],
];

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Check {
    pub name: String,
    pub expected: String,
    pub actual: String,
}

impl Check {
    pub fn pass(&self) -> bool {
        self.expected == self.actual
    }
}

struct Suite {
    checks: Vec<Check>,
}

impl Suite {
    fn check(&mut self, name: impl Into<String>, expected: impl Display, actual: Result<impl Display>) {
        let actual = match actual {
            Ok(a) => a.to_string(),
            Err(e) => format!("error: {e}"),
        };
        self.checks.push(Check { name: name.into(), expected: expected.to_string(), actual });
    }
}

/// `{e₁, −e₁, …, eₙ, −eₙ, f, −f}` in ℤⁿ with `f = Σ eᵢ`, plus `0` when
/// `with_zero`.
pub fn r1_spec(n: usize, with_zero: bool) -> LoadedSpec {
    let mut classes = Vec::new();
    let mut labels = Vec::new();
    for i in 0..n {
        for sign in [1, -1] {
            let mut c = vec![0; n];
            c[i] = sign;
            classes.push(c);
            labels.push(format!("{}e{}", if sign < 0 { "-" } else { "" }, i + 1));
        }
    }
    classes.push(vec![1; n]);
    classes.push(vec![-1; n]);
    labels.extend(["f".to_string(), "-f".to_string()]);
    if with_zero {
        classes.push(vec![0; n]);
        labels.push("0".into());
    }
    let file = SpecFile {
        mult: Some(vec![MultEntry::Count(1); classes.len()]),
        classes,
        labels: Some(labels),
        group: GroupSection { free_rank: n, torsion: vec![] },
    };
    file.load().expect("R1 class sets are valid")
}

/// The atoms of the R1 class set written out by hand.
pub fn r1_expected_atoms(n: usize) -> BTreeSet<String> {
    let mut out: BTreeSet<String> = (1..=n).map(|i| format!("e{i}*-e{i}")).collect();
    out.insert("f*-f".into());
    let pos: Vec<String> = (1..=n).map(|i| format!("e{i}")).collect();
    let neg: Vec<String> = (1..=n).map(|i| format!("-e{i}")).collect();
    out.insert(format!("{}*-f", pos.join("*")));
    out.insert(format!("{}*f", neg.join("*")));
    out
}

/// `U·V` for `U = e₁⋯eₙ(−f)` and `V = (−e₁)⋯(−eₙ)f`.
pub fn r1_uv(spec: &LoadedSpec) -> Sequence {
    let n = spec.class_set().len();
    spec.class_set().sequence(vec![1; n]).expect("the product of all classes is zero-sum")
}

fn show_set<T: Display>(items: impl IntoIterator<Item = T>) -> String {
    let v: Vec<String> = items.into_iter().map(|x| x.to_string()).collect();
    format!("{{{}}}", v.join(", "))
}

fn r1_checks(s: &mut Suite) {
    for n in 2..=4 {
        let spec = r1_spec(n, false);
        let atoms = zsm::enumerate_atoms(spec.class_set());
        let rendered = atoms
            .as_ref()
            .map(|a| show_set(a.atoms().iter().map(|u| spec.render(u)).collect::<BTreeSet<_>>()))
            .map_err(Clone::clone);
        s.check(format!("R1 n={n}: atoms"), show_set(r1_expected_atoms(n)), rendered);
        let all_absirred = atoms.as_ref().map_err(Clone::clone).and_then(|a| {
            a.atoms()
                .iter()
                .map(|u| is_absirred_support(u, a))
                .collect::<Result<Vec<bool>>>()
                .map(|v| v.iter().all(|&b| b))
        });
        s.check(format!("R1 n={n}: every atom absolutely irreducible"), true, all_absirred);
        let uv = r1_uv(&spec);
        let lengths = atoms.and_then(|a| zsm::length_set(&uv, &a)).map(show_set);
        s.check(format!("R1 n={n}: L(UV)"), show_set([2, n + 1]), lengths);
    }
    let bundled = LoadedSpec::from_toml(R1_N2).map(|l| l.spec == r1_spec(2, false).spec);
    s.check("R1 n=2: bundled spec file", true, bundled.map_err(|_| strong_atoms::Error::InvalidSpec("r1_n2.toml".into())));
}

fn row(text: &str, bounds: &Bounds) -> Result<String> {
    let spec = LoadedSpec::from_toml(text).map_err(|e| strong_atoms::Error::InvalidSpec(e.to_string()))?;
    Ok(classify_scenario(&spec.spec, bounds)?.row_label())
}

fn krull_checks(s: &mut Suite) {
    let bounds = Bounds::default();
    s.check("R1 n=2: row", "(-, +, -)", row(R1_N2, &bounds));
    s.check("R2 n=2: row", "(-, +, +)", row(R2_N2, &bounds));
    s.check("R2 n=3: row", "(-, +, +)", classify_scenario(&r1_spec(3, true).spec, &bounds).map(|r| r.row_label()));
    s.check("Z/2, {0, g}, g doubled: row", "(+, +, +)", row(Z2_DOUBLED, &bounds));
    let lifted = LoadedSpec::from_toml(Z2_DOUBLED)
        .map_err(|e| strong_atoms::Error::InvalidSpec(e.to_string()))
        .and_then(|l| classify_scenario(&l.spec, &bounds))
        .and_then(|r| {
            let w = r.nonabs_witness.expect("non-absolutely irreducible element found");
            Ok(w.verify() && w.confirm_by_search(bounds.budget)?)
        });
    s.check("Z/2, {0, g}, g doubled: b^2 = a*c witness", true, lifted);
    s.check("trivial group: row", "(-, -, +)", row(TRIVIAL, &bounds));

    let z3 = LoadedSpec::from_toml(Z3_FULL).expect("bundled spec");
    let atoms = zsm::enumerate_atoms(z3.class_set());
    s.check("Z/3: atom count", 3, atoms.as_ref().map(|a| a.len()).map_err(Clone::clone));
    let gg = z3.parse_sequence("g*2g").expect("labels exist");
    s.check(
        "Z/3: g*2g absolutely irreducible",
        false,
        atoms.as_ref().map_err(Clone::clone).and_then(|a| is_absirred_support(&gg, a)),
    );

    for torsion in GROUPS_UP_TO_10 {
        let g = Group::new(0, torsion.iter().map(|&d| Int::from(d)).collect()).expect("valid group");
        let order = torsion.iter().product::<i64>();
        let expected = if order <= 2 { "holds" } else { "fails with verified witness" };
        let actual = check_bg_all_absirred(&g).map(|v| match (v.holds, &v.witness) {
            (true, None) => "holds",
            (false, Some(w)) if w.verify() => "fails with verified witness",
            _ => "inconsistent",
        });
        s.check(format!("B({g}): all atoms absolutely irreducible"), expected, actual);
    }

    let zs = LoadedSpec::from_toml(Z_SUBSET).expect("bundled spec");
    let atoms = zsm::enumerate_atoms(zs.class_set());
    s.check(
        "Z, {-g, -2g, 3g}: atoms",
        "{-2g^3*3g^2, -g*-2g*3g, -g^3*3g}",
        atoms.as_ref().map(|a| show_set(a.atoms().iter().map(|u| zs.render(u)).collect::<BTreeSet<_>>())).map_err(Clone::clone),
    );
    let mixed = zs.parse_sequence("-g*-2g*3g").expect("labels exist");
    let mixed_witness = atoms.and_then(|a| {
        Ok(match witness_non_absirred(&mixed, &a)? {
            Some(w) if w.verify(&mixed, &a) => format!("n = {}", w.n),
            _ => "none".into(),
        })
    });
    s.check("Z, {-g, -2g, 3g}: -g*-2g*3g witness", "n = 3", mixed_witness);
    let g = Group::free(1);
    let inf = g.element_i64(&[1]).and_then(|x| infinite_order_witness(&g, &x)).map(|w| w.verify());
    s.check("Z: infinite-order witness", true, inf);
}

fn nummon_checks(s: &mut Suite) {
    for n in 2..=6 {
        let m = NumericalMonoid::interval(n).expect("n >= 1");
        let verified = nm_atoms(&m).iter().all(|&a| {
            nm_witness_non_absirred(&m, a).is_ok_and(|w| {
                w.verify(&m) && nm_factorizations(&m, w.element()).is_ok_and(|fs| fs.contains(&w.first) && fs.contains(&w.second))
            })
        });
        s.check(format!("M_{n}: every atom has a verified witness"), true, Ok(verified));
    }
    let m1 = NumericalMonoid::interval(1).expect("n >= 1");
    let factorial = (1..=30).all(|x| nm_factorizations(&m1, x).is_ok_and(|fs| fs.len() == 1));
    s.check("M_1: unique factorization up to 30", true, Ok(factorial));
}

fn ivpoly_checks(s: &mut Suite) {
    let split = half_cubic_split::<Int>();
    s.check("x(x^2+3)/2: f^2 cofactors integer-valued", true, Ok(split.verify()));
    s.check("x(x^2+3)/2: factorizations of f^2 differ", true, Ok(split.essentially_different()));
    let two = RatPoly::int(2);
    let x = RatPoly::x();
    let x1 = RatPoly::linear(&Int::from(1));
    s.check("2 | x(x-1) in Int(Z)", true, divides_in_intz(&two, &(&x * &x1)));
    s.check("2 | x in Int(Z)", false, divides_in_intz(&two, &x));
    s.check("2 | x-1 in Int(Z)", false, divides_in_intz(&two, &x1));
    s.check(
        "residue product witness for 2",
        true,
        residue_product_witness(&Int::from(2)).and_then(|w| w.verify(&Int::from(2))),
    );
    for (g, p, name) in [(x.clone(), 2, "G = x, p = 2"), (RatPoly::from_ints(&[1, 0, 1]), 5, "G = x^2+1, p = 5")] {
        s.check(
            format!("no-prime construction, {name}"),
            true,
            verify_no_prime_witness(&g, &Int::from(p)).map(|r| r.verified()),
        );
    }
    for p in [2, 3, 5] {
        let p = Int::from(p);
        s.check(format!("v_{p}(({p}^2)!)"), &p + 1, legendre_vp_factorial(&p, &(&p * &p)));
    }
    for p in [2i64, 3] {
        let pi = Int::from(p);
        let r = rp_residue_element(&pi).and_then(|f| {
            let linear: Vec<RatPoly> = (0..p).map(|k| RatPoly::linear(&Int::from(k))).collect();
            let product = linear.iter().fold(RatPoly::one(), |acc, l| &acc * l);
            let mut ok = rp_membership(&f, &pi)? && divides_in_intz(&f, &product)?;
            for l in &linear {
                ok &= !divides_in_intz(&f, l)?;
            }
            Ok(ok)
        });
        s.check(format!("R({p}): residue product is absolutely irreducible witness"), true, r);
        let split = rp_square_split(&pi).and_then(|sp| {
            Ok(sp.verify() && sp.essentially_different() && rp_membership(&sp.left, &pi)? && rp_membership(&sp.right, &pi)?)
        });
        s.check(format!("R({p}): f^2 splits differently"), true, split);
    }
}

fn quadratic_checks(s: &mut Suite) {
    let r = QuadRing::new(Int::from(-14)).expect("-14 is admissible");
    let two = QuadInt::int(2);
    let root = QuadInt::root();
    s.check("Z[sqrt(-14)]: elements of norm 2", "{}", Ok(show_set(elements_of_norm(&r, &Int::from(2)))));
    s.check("Z[sqrt(-14)]: 2 irreducible", true, quad_is_irreducible(&r, &two));
    s.check("Z[sqrt(-14)]: sqrt(-14) irreducible", true, quad_is_irreducible(&r, &root));
    let report = quad_is_prime_witness(&r, &two).map(|p| match p {
        PrimeReport::NonPrimeWitness { x, y } => format!("2 | ({x})({y})"),
        other => format!("{other:?}"),
    });
    s.check("Z[sqrt(-14)]: 2 not prime", "2 | (√d)(√d)", report);
    s.check(
        "Z[sqrt(-14)]: 2 absolutely irreducible up to n = 3",
        true,
        quad_brute_absirred(&r, &two, 3, DEFAULT_NODE_BUDGET).map(|a| a.holds),
    );
    let root_witness = quad_brute_absirred(&r, &root, 2, DEFAULT_NODE_BUDGET).map(|a| match a.witness {
        Some((n, f)) if f.product(&r) == r.pow(&root, n) => format!("(√d)^{n} = {f}"),
        _ => "none".into(),
    });
    s.check("Z[sqrt(-14)]: sqrt(-14) not absolutely irreducible", "(√d)^2 = (-1)·(2)·(7)", root_witness);
    let eleven = quad_is_prime_witness(&r, &QuadInt::int(11)).map(|p| format!("{p:?}"));
    s.check("Z[sqrt(-14)]: 11 prime by Euler's criterion", "PrimeByEuler { p: 11 }", eleven);
    let r5 = QuadRing::new(Int::from(-5)).expect("-5 is admissible");
    let hf = half_factorial_up_to(&r5, &Int::from(200), DEFAULT_NODE_BUDGET).map(|c| c.holds());
    s.check("Z[sqrt(-5)]: half-factorial up to norm 200", true, hf);
}

pub fn run_checks() -> Vec<Check> {
    let mut s = Suite { checks: Vec::new() };
    r1_checks(&mut s);
    krull_checks(&mut s);
    nummon_checks(&mut s);
    ivpoly_checks(&mut s);
    quadratic_checks(&mut s);
    s.checks
}

pub fn cmd_verify() -> Outcome {
    let checks = run_checks();
    let failed = checks.iter().filter(|c| !c.pass()).count();
    let entries: Vec<Value> = checks
        .iter()
        .map(|c| json!({ "name": c.name, "expected": c.expected, "actual": c.actual, "pass": c.pass() }))
        .collect();
    let report = json!({
        "command": "verify",
        "checks": entries,
        "total": checks.len(),
        "passed": checks.len() - failed,
        "failed": failed,
    });
    let rows: Vec<Vec<String>> = checks
        .iter()
        .map(|c| vec![c.name.clone(), c.actual.clone(), if c.pass() { "ok".into() } else { format!("FAIL (expected {})", c.expected) }])
        .collect();
    let human = format!(
        "{}\n{} of {} checks passed\n",
        table(&["check", "result", "status"], &rows),
        checks.len() - failed,
        checks.len()
    );
    Outcome { report, human, mismatch: failed > 0 }
}
