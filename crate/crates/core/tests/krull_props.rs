//! Whole-spec properties of the Krull monoid criteria.

mod common;

use common::{finite_group, mask_indices, FINITE_UP_TO_8};
use strong_atoms::krull::{
    all_irreducibles_absirred, classify_scenario, Bounds, Decision, FailureKind, KrullSpec, Multiplicity,
};
use strong_atoms::zsm::ClassSet;
use strong_atoms::Spec;

/// Every spec over a group of order at most 6 with at most three classes and
/// multiplicities in {1, 2}.
fn small_specs() -> Vec<Spec> {
    let mut out = Vec::new();
    for torsion in FINITE_UP_TO_8.iter().take(7) {
        let g = finite_group(torsion);
        let elements = g.elements().unwrap();
        let n = elements.len();
        for mask in 1u32..(1 << n) {
            let idx = mask_indices(mask, n);
            if idx.len() > 3 {
                continue;
            }
            let cs = ClassSet::new(g.clone(), idx.iter().map(|&i| elements[i].clone()).collect()).unwrap();
            for mm in 0u32..(1 << idx.len()) {
                let mult = (0..idx.len())
                    .map(|i| Multiplicity::Finite(if mm & (1 << i) != 0 { 2 } else { 1 }))
                    .collect();
                out.push(KrullSpec::new(cs.clone(), mult).unwrap());
            }
        }
    }
    out
}

fn quick() -> Bounds {
    Bounds { support_bound: 1, ..Bounds::default() }
}

#[test]
fn repeated_class_failures_lift_to_verified_witnesses() {
    let mut lifted = 0;
    for spec in small_specs() {
        let verdict = all_irreducibles_absirred(&spec).unwrap();
        let report = classify_scenario(&spec, &quick()).unwrap();
        assert_eq!(report.has_nonabsirred, Decision::from_bool(!verdict.holds));
        let Some((_, kind)) = verdict.failure else {
            assert!(report.nonabs_witness.is_none());
            continue;
        };
        let w = report.nonabs_witness.expect("failure carries a witness");
        assert!(w.verify());
        if let FailureKind::RepeatedNonUniqueClass { class } = kind {
            let m = w.lifted_class.expect("lifted into the divisor model");
            assert_eq!(w.class_set.class(m), spec.class_set().class(class));
            assert_eq!(w.n, 2);
            // b² = a·c with b not absolutely irreducible
            assert!(w.confirm_by_search(Bounds::default().budget).unwrap());
            lifted += 1;
        }
    }
    assert!(lifted > 0);
}

#[test]
fn full_class_groups_with_repeated_classes() {
    for torsion in FINITE_UP_TO_8 {
        let g = finite_group(torsion);
        let cs = ClassSet::full(g.clone()).unwrap();
        let spec = KrullSpec::new(cs.clone(), vec![Multiplicity::Finite(2); cs.len()]).unwrap();
        let holds = all_irreducibles_absirred(&spec).unwrap().holds;
        assert_eq!(holds, g.cardinality().unwrap() == 1.into(), "{g}");
    }
}

#[test]
fn raising_multiplicities_is_monotone() {
    for spec in small_specs() {
        let base = all_irreducibles_absirred(&spec).unwrap().holds;
        for i in 0..spec.mult().len() {
            let mut mult = spec.mult().to_vec();
            mult[i] = Multiplicity::Infinite;
            let raised = all_irreducibles_absirred(&spec.with_mult(mult).unwrap()).unwrap().holds;
            assert!(base || !raised, "raising class {i} restored absolute irreducibility");
        }
    }
}
