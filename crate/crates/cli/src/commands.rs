//! One function per subcommand. Each returns a machine report and its
//! human rendering; `main` picks one.

use serde_json::{json, Value};

use strong_atoms::krull::{
    all_irreducibles_absirred_in, brute_force_witness, classify_scenario, is_absirred_kernel,
    is_absirred_support, witness_with_budget, Bounds, FailureKind, PowerWitness,
};
use strong_atoms::zsm::{self, AtomSet, Factorization, Sequence};
use strong_atoms::Int;

use crate::report::{self, table, yes_no};
use crate::specfile::{render_with, LoadedSpec, SpecFile};
use crate::CliError;

#[derive(Clone, Copy, Debug, Default)]
pub struct Options {
    pub bounds: Bounds,
    pub parallel: bool,
}

#[derive(Clone, Debug, PartialEq)]
pub struct Outcome {
    pub report: Value,
    pub human: String,
    /// A check inside the command disagreed with its expectation.
    pub mismatch: bool,
}

impl Outcome {
    pub fn machine(&self) -> String {
        serde_json::to_string_pretty(&self.report).expect("reports serialize") + "\n"
    }
}

fn spec_echo(spec: &LoadedSpec) -> Value {
    serde_json::to_value(SpecFile::from_loaded(spec)).expect("spec files serialize")
}

fn atoms_of(spec: &LoadedSpec, opts: &Options) -> Result<AtomSet<Int>, CliError> {
    Ok(zsm::enumerate_atoms_with_budget(spec.class_set(), opts.bounds.budget)?)
}

fn is_prime_atom(spec: &LoadedSpec, u: &Sequence) -> bool {
    u.length() == 1 && spec.class_set().class(u.support()[0]).is_zero()
}

fn render_factorization(spec: &LoadedSpec, atoms: &AtomSet<Int>, f: &Factorization) -> String {
    f.indices()
        .iter()
        .map(|&i| format!("[{}]", spec.render(atoms.atom(i))))
        .collect::<Vec<_>>()
        .join(" ")
}

fn witness_json(spec: &LoadedSpec, atoms: &AtomSet<Int>, w: &PowerWitness) -> Value {
    let side = |f: &Factorization| {
        json!({
            "atoms": f.indices().iter().map(|&i| spec.render(atoms.atom(i))).collect::<Vec<_>>(),
            "indices": f.indices(),
        })
    };
    json!({ "n": w.n, "first": side(&w.first), "second": side(&w.second) })
}

pub fn cmd_atoms(spec: &LoadedSpec, opts: &Options) -> Result<Outcome, CliError> {
    let atoms = atoms_of(spec, opts)?;
    let mut entries = Vec::new();
    let mut rows = Vec::new();
    for (i, u) in atoms.atoms().iter().enumerate() {
        let witness = witness_with_budget(u, &atoms, opts.bounds.budget)?;
        let support: Vec<&str> = u.support().into_iter().map(|k| spec.labels[k].as_str()).collect();
        let prime = is_prime_atom(spec, u);
        entries.push(json!({
            "index": i,
            "sequence": spec.render(u),
            "exponents": u.exponents(),
            "length": u.length(),
            "support": support,
            "absolutely_irreducible": witness.is_none(),
            "prime": prime,
            "witness": witness.as_ref().map(|w| witness_json(spec, &atoms, w)),
        }));
        let note = match &witness {
            None => String::new(),
            Some(w) => format!("u^{} = {}", w.n, render_factorization(spec, &atoms, &w.second)),
        };
        rows.push(vec![
            i.to_string(),
            spec.render(u),
            u.length().to_string(),
            yes_no(witness.is_none()).into(),
            yes_no(prime).into(),
            note,
        ]);
    }
    let cert = atoms.certificate();
    let report = json!({
        "command": "atoms",
        "spec": spec_echo(spec),
        "atom_count": atoms.len(),
        "atoms": entries,
        "certificate": { "method": cert.method, "budget": cert.budget, "nodes": cert.nodes },
    });
    let human = format!(
        "{} atoms of B(G0) over {}\n\n{}",
        atoms.len(),
        spec.spec.group(),
        table(&["#", "atom", "length", "abs-irred", "prime", "witness"], &rows)
    );
    Ok(Outcome { report, human, mismatch: false })
}

fn factorizations(b: &Sequence, atoms: &AtomSet<Int>, opts: &Options) -> Result<Vec<Factorization>, CliError> {
    let fs = if opts.parallel {
        zsm::factorizations_par(b, atoms, opts.bounds.budget)?
    } else {
        zsm::factorizations_with_budget(b, atoms, opts.bounds.budget)?
    };
    Ok(fs)
}

fn elasticity(fs: &[Factorization]) -> String {
    let lens: Vec<usize> = fs.iter().map(Factorization::len).collect();
    match (lens.iter().min(), lens.iter().max()) {
        (Some(&lo), Some(&hi)) if lo > 0 => num_rational::Ratio::new(hi, lo).to_string(),
        _ => "1".into(),
    }
}

pub fn cmd_factor(spec: &LoadedSpec, sequence: &str, opts: &Options) -> Result<Outcome, CliError> {
    let b = spec.parse_sequence(sequence)?;
    let atoms = atoms_of(spec, opts)?;
    let fs = factorizations(&b, &atoms, opts)?;
    let lengths: std::collections::BTreeSet<usize> = fs.iter().map(Factorization::len).collect();
    let elasticity = elasticity(&fs);
    let entries: Vec<Value> = fs
        .iter()
        .map(|f| {
            json!({
                "atoms": f.indices().iter().map(|&i| spec.render(atoms.atom(i))).collect::<Vec<_>>(),
                "indices": f.indices(),
                "length": f.len(),
            })
        })
        .collect();
    let rows: Vec<Vec<String>> = fs
        .iter()
        .enumerate()
        .map(|(k, f)| vec![k.to_string(), f.len().to_string(), render_factorization(spec, &atoms, f)])
        .collect();
    let report = json!({
        "command": "factor",
        "spec": spec_echo(spec),
        "sequence": spec.render(&b),
        "exponents": b.exponents(),
        "factorization_count": fs.len(),
        "factorizations": entries,
        "length_set": lengths,
        "elasticity": elasticity,
        "bounds": report::bounds(&opts.bounds),
    });
    let human = format!(
        "{} = product of atoms in {} ways\nlength set {}, elasticity {}\n\n{}",
        spec.render(&b),
        fs.len(),
        report::length_set(&lengths),
        elasticity,
        table(&["#", "length", "factorization"], &rows)
    );
    Ok(Outcome { report, human, mismatch: false })
}

pub fn cmd_lengths(spec: &LoadedSpec, sequence: &str, opts: &Options) -> Result<Outcome, CliError> {
    let b = spec.parse_sequence(sequence)?;
    let atoms = atoms_of(spec, opts)?;
    let fs = factorizations(&b, &atoms, opts)?;
    let lengths: std::collections::BTreeSet<usize> = fs.iter().map(Factorization::len).collect();
    let elasticity = elasticity(&fs);
    let report = json!({
        "command": "lengths",
        "spec": spec_echo(spec),
        "sequence": spec.render(&b),
        "factorization_count": fs.len(),
        "length_set": lengths,
        "elasticity": elasticity,
        "bounds": report::bounds(&opts.bounds),
    });
    let human = format!(
        "L({}) = {}\nelasticity {}\n",
        spec.render(&b),
        report::length_set(&lengths),
        elasticity
    );
    Ok(Outcome { report, human, mismatch: false })
}

pub fn cmd_absirred(spec: &LoadedSpec, opts: &Options) -> Result<Outcome, CliError> {
    let atoms = atoms_of(spec, opts)?;
    let g = spec.spec.group();
    let n_max = opts.bounds.n_max;
    let mut entries = Vec::new();
    let mut rows = Vec::new();
    let mut mismatch = false;
    for (i, u) in atoms.atoms().iter().enumerate() {
        let by_support = is_absirred_support(u, &atoms)?;
        let by_kernel = is_absirred_kernel(g, &spec.class_set().support(u))?;
        let witness = witness_with_budget(u, &atoms, opts.bounds.budget)?;
        let brute = brute_force_witness(u, &atoms, n_max, opts.bounds.budget)?;
        let agree = by_support == by_kernel
            && by_support == witness.is_none()
            && (!by_support || brute.is_none())
            && witness.as_ref().is_none_or(|w| w.verify(u, &atoms));
        mismatch |= !agree;
        entries.push(json!({
            "index": i,
            "sequence": spec.render(u),
            "support_criterion": by_support,
            "kernel_criterion": by_kernel,
            "witness": witness.as_ref().map(|w| witness_json(spec, &atoms, w)),
            "brute_force": {
                "n_max": n_max,
                "second_factorization_found": brute.is_some(),
                "least_n": brute.as_ref().map(|w| w.n),
            },
            "agree": agree,
        }));
        rows.push(vec![
            i.to_string(),
            spec.render(u),
            yes_no(by_support).into(),
            yes_no(by_kernel).into(),
            witness.as_ref().map_or("-".into(), |w| format!("n = {}", w.n)),
            brute.as_ref().map_or(format!("none up to {n_max}"), |w| format!("n = {}", w.n)),
            yes_no(agree).into(),
        ]);
    }
    let all = all_irreducibles_absirred_in(&spec.spec, &atoms)?;
    let failure = all.failure.as_ref().map(|(u, kind)| {
        let (kind, class) = match kind {
            FailureKind::SupportNotMinimal => ("support_not_minimal", None),
            FailureKind::RepeatedNonUniqueClass { class } => ("repeated_class_with_several_divisors", Some(spec.labels[*class].clone())),
        };
        json!({ "atom": spec.render(u), "kind": kind, "class": class })
    });
    let report = json!({
        "command": "absirred",
        "spec": spec_echo(spec),
        "atoms": entries,
        "all_irreducibles_absolutely_irreducible": { "holds": all.holds, "failure": failure },
        "bounds": report::bounds(&opts.bounds),
        "mismatch": mismatch,
    });
    let verdict = match &all.failure {
        None => "every irreducible element is absolutely irreducible".to_string(),
        Some((u, FailureKind::SupportNotMinimal)) => format!("not every irreducible is absolutely irreducible: {} has a rival atom", spec.render(u)),
        Some((u, FailureKind::RepeatedNonUniqueClass { class })) => format!(
            "not every irreducible is absolutely irreducible: {} repeats {}, which holds several prime divisors",
            spec.render(u),
            spec.labels[*class]
        ),
    };
    let human = format!(
        "{}\n{verdict}\n",
        table(&["#", "atom", "support", "kernel", "witness", "brute force", "agree"], &rows)
    );
    Ok(Outcome { report, human, mismatch })
}

pub fn cmd_classify(spec: &LoadedSpec, opts: &Options) -> Result<Outcome, CliError> {
    let r = classify_scenario(&spec.spec, &opts.bounds)?;
    let family = r
        .absirred_family
        .as_ref()
        .map(|f| f.iter().map(|&i| spec.labels[i].clone()).collect::<Vec<_>>());
    let witness = r.nonabs_witness.as_ref().map(|w| {
        let mut labels = spec.labels.clone();
        if let Some(m) = w.lifted_class {
            let original = spec.class_set().index_of(w.class_set.class(m)).expect("lifted class comes from the spec");
            labels.push(format!("{}'", spec.labels[original]));
        }
        let render_all = |fs: &[Sequence]| fs.iter().map(|s| render_with(&labels, s)).collect::<Vec<_>>();
        json!({
            "atom": render_with(&labels, &w.atom),
            "n": w.n,
            "first": render_all(&w.first),
            "second": render_all(&w.second),
            "lifted_class": w.lifted_class.map(|m| labels[m].clone()),
            "verified": w.verify(),
        })
    });
    let human_witness = witness.as_ref().map_or(String::new(), |w| {
        format!(
            "non-absolutely irreducible: ({})^{} = {}\n",
            w["atom"].as_str().unwrap_or_default(),
            w["n"],
            w["second"].as_array().map_or(String::new(), |xs| xs
                .iter()
                .map(|x| format!("[{}]", x.as_str().unwrap_or_default()))
                .collect::<Vec<_>>()
                .join(" "))
        )
    });
    let mismatch = witness.as_ref().is_some_and(|w| w["verified"] == json!(false));
    let report = json!({
        "command": "classify",
        "spec": spec_echo(spec),
        "row": r.row_label(),
        "has_nonabsirred": report::decision(r.has_nonabsirred),
        "has_absirred_nonprime": report::decision(r.has_absirred_nonprime),
        "has_prime": report::decision(r.has_prime),
        "absirred_family": family,
        "nonabs_witness": witness,
        "search": {
            "bound": r.search.bound,
            "exhaustive": r.search.exhaustive,
            "families_tried": r.search.families_tried,
            "family_semantics": r.family_semantics,
        },
        "mult_cap": r.mult_cap,
        "atom_count": r.atom_count,
        "bounds": report::bounds(&r.bounds),
    });
    let rows = vec![
        vec!["non-absolutely irreducible".into(), r.has_nonabsirred.to_string()],
        vec!["absolutely irreducible, not prime".into(), r.has_absirred_nonprime.to_string()],
        vec!["prime".into(), r.has_prime.to_string()],
    ];
    let family_line = family.map_or(String::new(), |f| format!("absolutely irreducible non-prime from family {{{}}}\n", f.join(", ")));
    let human = format!(
        "row {}\n\n{}\n{family_line}{human_witness}family search: bound {}, {}exhaustive, {} families\n",
        r.row_label(),
        table(&["element kind", "exists"], &rows),
        r.search.bound,
        if r.search.exhaustive { "" } else { "not " },
        r.search.families_tried
    );
    Ok(Outcome { report, human, mismatch })
}
