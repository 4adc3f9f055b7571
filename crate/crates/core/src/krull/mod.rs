//! Absolute irreducibility in Krull monoids, modelled by their class data.
//!
//! A Krull monoid is described by its class group `G`, the set `G₀` of classes
//! containing prime divisors, and the number of prime divisors in each class.
//! Everything decided here depends only on that data: atoms are read off the
//! block monoid `B(G₀)` and element-level questions on families of prime
//! divisors are answered by integer kernel computations.

mod bg;
mod scenario;

use std::fmt;

pub use bg::{check_bg_all_absirred, infinite_order_witness, BgVerdict, BgWitness};
pub use scenario::{
    angermueller_check, classify_scenario, exists_absirred_nonprime, AngermuellerCheck, Bounds, Decision,
    FamilySearch, NonAbsWitness, ScenarioReport, MULT_CAP,
};

use crate::abgroup::{FinGenAbelianGroup, GroupElement};
use crate::error::{Error, Result};
use crate::scalar::Scalar;
use crate::zsm::{self, AtomSet, ClassSet, Factorization, Sequence};

/// Number of prime divisors in a class.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Multiplicity {
    Finite(u32),
    Infinite,
}

impl Multiplicity {
    pub fn is_one(self) -> bool {
        self == Multiplicity::Finite(1)
    }

    /// `min(self, cap)` as a count.
    pub fn capped(self, cap: u32) -> u32 {
        match self {
            Multiplicity::Finite(k) => k.min(cap),
            Multiplicity::Infinite => cap,
        }
    }
}

impl fmt::Display for Multiplicity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Multiplicity::Finite(k) => write!(f, "{k}"),
            Multiplicity::Infinite => write!(f, "inf"),
        }
    }
}

/// Class group, classes containing prime divisors, and their multiplicities.
#[derive(Clone, Debug)]
pub struct KrullSpec<T> {
    class_set: ClassSet<T>,
    mult: Vec<Multiplicity>,
}

impl<T: Scalar> PartialEq for KrullSpec<T> {
    fn eq(&self, other: &Self) -> bool {
        self.class_set == other.class_set && self.mult == other.mult
    }
}

impl<T: Scalar> Eq for KrullSpec<T> {}

impl<T: Scalar> KrullSpec<T> {
    pub fn new(class_set: ClassSet<T>, mult: Vec<Multiplicity>) -> Result<Self> {
        if class_set.has_repeats() {
            return Err(Error::InvalidSpec("classes must be distinct".into()));
        }
        if mult.len() != class_set.len() {
            return Err(Error::InvalidSpec(format!(
                "{} multiplicities for {} classes",
                mult.len(),
                class_set.len()
            )));
        }
        if mult.contains(&Multiplicity::Finite(0)) {
            return Err(Error::InvalidSpec("every class must contain a prime divisor".into()));
        }
        Ok(KrullSpec { class_set, mult })
    }

    /// Every class with exactly one prime divisor.
    pub fn simple(class_set: ClassSet<T>) -> Result<Self> {
        let mult = vec![Multiplicity::Finite(1); class_set.len()];
        Self::new(class_set, mult)
    }

    pub fn group(&self) -> &FinGenAbelianGroup<T> {
        self.class_set.group()
    }

    pub fn class_set(&self) -> &ClassSet<T> {
        &self.class_set
    }

    pub fn mult(&self) -> &[Multiplicity] {
        &self.mult
    }

    /// Indices of the classes holding exactly one prime divisor (`G₁`).
    pub fn g1(&self) -> Vec<usize> {
        (0..self.mult.len()).filter(|&i| self.mult[i].is_one()).collect()
    }

    pub fn with_mult(&self, mult: Vec<Multiplicity>) -> Result<Self> {
        Self::new(self.class_set.clone(), mult)
    }

    pub fn zero_index(&self) -> Option<usize> {
        self.class_set.classes().iter().position(GroupElement::is_zero)
    }
}

/// Two essentially different factorizations of `Uⁿ`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PowerWitness {
    pub n: u32,
    pub first: Factorization,
    pub second: Factorization,
}

impl PowerWitness {
    /// Both factorizations multiply to `uⁿ` and differ.
    pub fn verify<T: Scalar>(&self, u: &Sequence, atoms: &AtomSet<T>) -> bool {
        let target = u.pow(self.n);
        self.first != self.second && self.first.product(atoms) == target && self.second.product(atoms) == target
    }
}

fn require_atom<T: Scalar>(u: &Sequence, atoms: &AtomSet<T>) -> Result<usize> {
    atoms.index_of(u).ok_or(Error::AtomNotInSet)
}

/// Other atoms whose support lies inside `supp(u)`, by index.
fn support_rivals<'a, T: Scalar>(u: &'a Sequence, atoms: &'a AtomSet<T>) -> impl Iterator<Item = usize> + 'a {
    (0..atoms.len()).filter(move |&i| {
        let v = atoms.atom(i);
        v != u && v.support_subset_of(u)
    })
}

/// No other atom has support contained in `supp(u)`.
pub fn is_absirred_support<T: Scalar>(u: &Sequence, atoms: &AtomSet<T>) -> Result<bool> {
    require_atom(u, atoms)?;
    Ok(support_rivals(u, atoms).next().is_none())
}

/// The family has a nonnegative relation and every proper subfamily is
/// ℤ-independent. Repeated values count as distinct members.
pub fn is_absirred_kernel<T: Scalar>(g: &FinGenAbelianGroup<T>, family: &[GroupElement<T>]) -> Result<bool> {
    if family.is_empty() {
        return Ok(false);
    }
    for skip in 0..family.len() {
        let sub: Vec<GroupElement<T>> = family
            .iter()
            .enumerate()
            .filter(|&(i, _)| i != skip)
            .map(|(_, x)| x.clone())
            .collect();
        if !g.is_z_independent(&sub)? {
            return Ok(false);
        }
    }
    Ok(g.positive_kernel_vector(family)?.is_some())
}

/// For a non-absolutely-irreducible atom `u`, an exponent `n` and a
/// factorization of `uⁿ` other than `u⋯u`.
///
/// Takes the first rival atom `v` with `supp(v) ⊆ supp(u)` and the least `n`
/// with `v | uⁿ`; the second factorization is `v` times the first
/// factorization of `uⁿ/v`.
pub fn witness_non_absirred<T: Scalar>(u: &Sequence, atoms: &AtomSet<T>) -> Result<Option<PowerWitness>> {
    witness_with_budget(u, atoms, zsm::DEFAULT_NODE_BUDGET)
}

pub fn witness_with_budget<T: Scalar>(u: &Sequence, atoms: &AtomSet<T>, budget: u64) -> Result<Option<PowerWitness>> {
    let ui = require_atom(u, atoms)?;
    let Some(vi) = support_rivals(u, atoms).next() else {
        return Ok(None);
    };
    let v = atoms.atom(vi);
    let n = v
        .support()
        .into_iter()
        .map(|i| v.exponent(i).div_ceil(u.exponent(i)))
        .max()
        .expect("atoms are nonempty");
    let rest = v.cofactor_in(&u.pow(n)).expect("v divides u^n");
    let tail = zsm::factorizations_up_to(&rest, atoms, 1, budget)?
        .pop()
        .expect("zero-sum sequences factor");
    let mut second = tail.indices().to_vec();
    second.push(vi);
    Ok(Some(PowerWitness {
        n,
        first: Factorization::new(vec![ui; n as usize]),
        second: Factorization::new(second),
    }))
}

/// Oracle: `uⁿ` factors only as `u⋯u` for every `n ≤ n_max`.
pub fn brute_force_absirred<T: Scalar>(u: &Sequence, atoms: &AtomSet<T>, n_max: u32) -> Result<bool> {
    Ok(brute_force_witness(u, atoms, n_max, zsm::DEFAULT_NODE_BUDGET)?.is_none())
}

/// The least `n ≤ n_max` at which `uⁿ` has a second factorization, with both.
pub fn brute_force_witness<T: Scalar>(
    u: &Sequence,
    atoms: &AtomSet<T>,
    n_max: u32,
    budget: u64,
) -> Result<Option<PowerWitness>> {
    let ui = require_atom(u, atoms)?;
    for n in 1..=n_max {
        let trivial = Factorization::new(vec![ui; n as usize]);
        let fs = zsm::factorizations_up_to(&u.pow(n), atoms, 2, budget)?;
        if let Some(other) = fs.into_iter().find(|f| *f != trivial) {
            return Ok(Some(PowerWitness {
                n,
                first: trivial,
                second: other,
            }));
        }
    }
    Ok(None)
}

/// Which half of the all-atoms criterion failed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FailureKind {
    /// Some other atom has support inside this atom's support.
    SupportNotMinimal,
    /// The atom uses the class at this index more than once although the
    /// class holds several prime divisors.
    RepeatedNonUniqueClass { class: usize },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AllAbsirred {
    pub holds: bool,
    pub failure: Option<(Sequence, FailureKind)>,
}

/// Every irreducible of the monoid is absolutely irreducible iff every atom of
/// `B(G₀)` has minimal support and no atom uses a class outside `G₁` twice.
pub fn all_irreducibles_absirred<T: Scalar>(spec: &KrullSpec<T>) -> Result<AllAbsirred> {
    let atoms = zsm::enumerate_atoms(spec.class_set())?;
    all_irreducibles_absirred_in(spec, &atoms)
}

pub fn all_irreducibles_absirred_in<T: Scalar>(spec: &KrullSpec<T>, atoms: &AtomSet<T>) -> Result<AllAbsirred> {
    for u in atoms.atoms() {
        if !is_absirred_support(u, atoms)? {
            return Ok(AllAbsirred {
                holds: false,
                failure: Some((u.clone(), FailureKind::SupportNotMinimal)),
            });
        }
    }
    for u in atoms.atoms() {
        for i in u.support() {
            if !spec.mult()[i].is_one() && u.exponent(i) > 1 {
                return Ok(AllAbsirred {
                    holds: false,
                    failure: Some((u.clone(), FailureKind::RepeatedNonUniqueClass { class: i })),
                });
            }
        }
    }
    Ok(AllAbsirred {
        holds: true,
        failure: None,
    })
}

/// A prime element exists iff the zero class holds a prime divisor.
pub fn has_prime_element<T: Scalar>(spec: &KrullSpec<T>) -> bool {
    spec.zero_index().is_some()
}


#[cfg(test)]
mod tests {
    use super::fixtures::*;
    use super::*;

    #[test]
    fn support_criterion() {
        let cs = plus_minus(2, false);
        let atoms = zsm::enumerate_atoms(&cs).unwrap();
        for u in atoms.atoms() {
            assert!(is_absirred_support(u, &atoms).unwrap());
            assert_eq!(witness_non_absirred(u, &atoms).unwrap(), None);
        }

        let cs = cyclic_classes(3, &[1, 2]);
        let atoms = zsm::enumerate_atoms(&cs).unwrap();
        let t = cs.sequence(vec![1, 1]).unwrap();
        assert!(!is_absirred_support(&t, &atoms).unwrap());
        assert!(is_absirred_support(&cs.sequence(vec![3, 0]).unwrap(), &atoms).unwrap());
        assert_eq!(is_absirred_support(&cs.sequence(vec![2, 2]).unwrap(), &atoms), Err(Error::AtomNotInSet));

        let z = G::free(1);
        let cs = ClassSet::new(z.clone(), vec![z.free_basis(0), z.neg(&z.free_basis(0))]).unwrap();
        let atoms = zsm::enumerate_atoms(&cs).unwrap();
        assert_eq!(atoms.len(), 1);
        assert!(is_absirred_support(atoms.atom(0), &atoms).unwrap());
    }

    #[test]
    fn kernel_criterion() {
        let g = G::free(2);
        let e1 = g.free_basis(0);
        let e2 = g.free_basis(1);
        let f = g.add(&e1, &e2);
        assert!(is_absirred_kernel(&g, &[e1.clone(), e2.clone(), g.neg(&f)]).unwrap());
        assert!(!is_absirred_kernel(&g, &[e1.clone(), e2.clone()]).unwrap());
        let z2 = G::cyclic(2).unwrap();
        assert!(is_absirred_kernel(&z2, &[z2.torsion_generator(0)]).unwrap());
        // two divisors in the class g
        assert!(!is_absirred_kernel(&z2, &[z2.torsion_generator(0), z2.torsion_generator(0)]).unwrap());
        let z3 = G::cyclic(3).unwrap();
        let h = z3.torsion_generator(0);
        assert!(!is_absirred_kernel(&z3, &[h.clone(), z3.add(&h, &h)]).unwrap());
    }

    #[test]
    fn power_witnesses() {
        let cs = cyclic_classes(3, &[1, 2]);
        let atoms = zsm::enumerate_atoms(&cs).unwrap();
        let t = cs.sequence(vec![1, 1]).unwrap();
        let w = witness_non_absirred(&t, &atoms).unwrap().unwrap();
        assert_eq!(w.n, 3);
        assert!(w.verify(&t, &atoms));
        let second: Vec<Sequence> = w.second.indices().iter().map(|&i| atoms.atom(i).clone()).collect();
        assert_eq!(second, vec![cs.sequence(vec![0, 3]).unwrap(), cs.sequence(vec![3, 0]).unwrap()]);
        assert!(!brute_force_absirred(&t, &atoms, 3).unwrap());
        assert!(brute_force_absirred(&t, &atoms, 2).unwrap());

        let v4 = G::new(0, vec![2.into(), 2.into()]).unwrap();
        let classes = vec![v4.element_i64(&[0, 1]).unwrap(), v4.element_i64(&[1, 0]).unwrap(), v4.element_i64(&[1, 1]).unwrap()];
        let cs = ClassSet::new(v4, classes).unwrap();
        let atoms = zsm::enumerate_atoms(&cs).unwrap();
        let t = cs.sequence(vec![1, 1, 1]).unwrap();
        let w = witness_non_absirred(&t, &atoms).unwrap().unwrap();
        assert_eq!(w.n, 2);
        assert!(w.verify(&t, &atoms));
        assert_eq!(w.second.len(), 3);
    }

    #[test]
    fn oracle_on_primes_and_pairs() {
        let cs = plus_minus(2, false);
        let atoms = zsm::enumerate_atoms(&cs).unwrap();
        let ff = cs.sequence_from(&[(4, 1), (5, 1)]);
        assert!(brute_force_absirred(&ff, &atoms, 4).unwrap());

        let cs = cyclic_classes(2, &[0, 1]);
        let atoms = zsm::enumerate_atoms(&cs).unwrap();
        assert!(brute_force_absirred(&cs.sequence(vec![1, 0]).unwrap(), &atoms, 5).unwrap());
    }

    #[test]
    fn whole_spec_criterion() {
        let spec = KrullSpec::simple(plus_minus(2, false)).unwrap();
        assert!(all_irreducibles_absirred(&spec).unwrap().holds);

        let cs = cyclic_classes(2, &[1]);
        let spec = KrullSpec::new(cs.clone(), vec![Multiplicity::Finite(2)]).unwrap();
        let r = all_irreducibles_absirred(&spec).unwrap();
        assert!(!r.holds);
        assert_eq!(r.failure, Some((cs.sequence(vec![2]).unwrap(), FailureKind::RepeatedNonUniqueClass { class: 0 })));

        let spec = KrullSpec::simple(cyclic_classes(2, &[0, 1])).unwrap();
        assert!(all_irreducibles_absirred(&spec).unwrap().holds);
    }

    #[test]
    fn primes() {
        assert!(!has_prime_element(&KrullSpec::simple(plus_minus(2, false)).unwrap()));
        assert!(has_prime_element(&KrullSpec::simple(plus_minus(2, true)).unwrap()));
        let trivial = ClassSet::new(G::trivial(), vec![G::trivial().zero()]).unwrap();
        assert!(has_prime_element(&KrullSpec::simple(trivial).unwrap()));
    }

    #[test]
    fn spec_validation() {
        let cs = cyclic_classes(2, &[1]);
        assert!(KrullSpec::new(cs.clone(), vec![]).is_err());
        assert!(KrullSpec::new(cs.clone(), vec![Multiplicity::Finite(0)]).is_err());
        let spec = KrullSpec::new(cs, vec![Multiplicity::Infinite]).unwrap();
        assert!(spec.g1().is_empty());
    }
}
