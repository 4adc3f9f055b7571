//! The support, kernel and witness tests for absolute irreducibility agree on
//! every atom of every `B(G₀)` with `|G| ≤ 8`.

use std::time::Instant;

use strong_atoms::krull::{brute_force_absirred, brute_force_witness, is_absirred_kernel, is_absirred_support, witness_non_absirred};
use strong_atoms::zsm::{self, ClassSet};
use strong_atoms::{Group, Int};

fn groups_up_to_8() -> Vec<Group> {
    let presentations: &[&[i64]] = &[&[], &[2], &[3], &[4], &[2, 2], &[5], &[6], &[7], &[8], &[2, 4], &[2, 2, 2]];
    presentations
        .iter()
        .map(|t| Group::new(0, t.iter().map(|&d| Int::from(d)).collect()).unwrap())
        .collect()
}

#[test]
fn criteria_agree_on_all_subsets() {
    let start = Instant::now();
    let mut atoms_checked = 0;
    for g in groups_up_to_8() {
        let elements = g.elements().unwrap();
        let n = elements.len();
        for mask in 1u32..(1 << n) {
            let classes: Vec<_> = (0..n).filter(|i| mask & (1 << i) != 0).map(|i| elements[i].clone()).collect();
            let cs = ClassSet::new(g.clone(), classes).unwrap();
            let atoms = zsm::enumerate_atoms(&cs).unwrap();
            for u in atoms.atoms() {
                let by_support = is_absirred_support(u, &atoms).unwrap();
                let by_kernel = is_absirred_kernel(&g, &cs.support(u)).unwrap();
                let witness = witness_non_absirred(u, &atoms).unwrap();
                assert_eq!(by_support, by_kernel, "{g} {} {}", cs.render(u), mask);
                assert_eq!(by_support, witness.is_none());
                if by_support {
                    assert!(brute_force_absirred(u, &atoms, 4).unwrap());
                } else {
                    let w = witness.unwrap();
                    assert!(w.verify(u, &atoms));
                    let found = brute_force_witness(u, &atoms, w.n, zsm::DEFAULT_NODE_BUDGET).unwrap();
                    assert!(found.is_some());
                }
                atoms_checked += 1;
            }
        }
    }
    eprintln!("{atoms_checked} atoms in {:?}", start.elapsed());
}
