use std::fmt;

use super::{
    all_irreducibles_absirred_in, brute_force_witness, has_prime_element, is_absirred_kernel, witness_with_budget,
    FailureKind, KrullSpec,
};
use crate::abgroup::GroupElement;
use crate::error::Result;
use crate::scalar::Scalar;
use crate::zsm::{self, AtomSet, ClassSet, Sequence};

/// Multiplicities above this are treated as equal to it in family searches.
pub const MULT_CAP: u32 = 2;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Bounds {
    /// Largest family of prime divisors examined by the existence search.
    pub support_bound: usize,
    /// Node budget for atom enumeration and factorization searches.
    pub budget: u64,
    /// Largest power tried when confirming a witness by exhaustive search.
    pub n_max: u32,
}

impl Default for Bounds {
    fn default() -> Self {
        Bounds {
            support_bound: 8,
            budget: zsm::DEFAULT_NODE_BUDGET,
            n_max: 4,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Decision {
    Yes,
    No,
    /// Nothing found, but the search was not exhaustive.
    Undecided,
}

impl Decision {
    pub fn from_bool(b: bool) -> Self {
        if b {
            Decision::Yes
        } else {
            Decision::No
        }
    }

    pub fn sign(self) -> char {
        match self {
            Decision::Yes => '+',
            Decision::No => '-',
            Decision::Undecided => '?',
        }
    }
}

impl fmt::Display for Decision {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Decision::Yes => "yes",
            Decision::No => "no",
            Decision::Undecided => "undecided",
        };
        f.write_str(s)
    }
}

/// Outcome of the bounded search for an absolutely irreducible non-prime.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FamilySearch {
    /// Class indices of the first qualifying family, with repetition.
    pub witness: Option<Vec<usize>>,
    pub bound: usize,
    /// The bound covers every family that could qualify.
    pub exhaustive: bool,
    pub families_tried: u64,
}

impl FamilySearch {
    pub fn found(&self) -> bool {
        self.witness.is_some()
    }

    pub fn decision(&self) -> Decision {
        match (self.found(), self.exhaustive) {
            (true, _) => Decision::Yes,
            (false, true) => Decision::No,
            (false, false) => Decision::Undecided,
        }
    }
}

/// Searches families of prime divisors, as multisets of classes with at most
/// `min(mult, MULT_CAP)` members per class, for one whose product of suitable
/// powers is absolutely irreducible and not prime.
///
/// Sizes are tried from `support_bound` down to 1, each in lexicographic
/// order. A family using one class twice never qualifies (its two members are
/// already dependent), so a bound of `|G₀|` is exhaustive.
pub fn exists_absirred_nonprime<T: Scalar>(spec: &KrullSpec<T>, support_bound: usize) -> Result<FamilySearch> {
    let caps: Vec<u32> = spec.mult().iter().map(|m| m.capped(MULT_CAP)).collect();
    let total: usize = caps.iter().map(|&c| c as usize).sum();
    let zero = spec.zero_index();
    let classes = spec.class_set().classes();
    let group = spec.group();
    let mut tried = 0;
    for size in (1..=support_bound.min(total)).rev() {
        let mut found = None;
        let mut path = Vec::with_capacity(size);
        let mut counts = vec![0u32; caps.len()];
        let mut visit = |family: &[usize]| -> Result<bool> {
            if family.len() == 1 && Some(family[0]) == zero {
                return Ok(false);
            }
            tried += 1;
            let members: Vec<GroupElement<T>> = family.iter().map(|&i| classes[i].clone()).collect();
            if is_absirred_kernel(group, &members)? {
                found = Some(family.to_vec());
                return Ok(true);
            }
            Ok(false)
        };
        multisets(&caps, size, 0, &mut counts, &mut path, &mut visit)?;
        if found.is_some() {
            return Ok(FamilySearch {
                witness: found,
                bound: support_bound,
                exhaustive: support_bound >= classes.len(),
                families_tried: tried,
            });
        }
    }
    Ok(FamilySearch {
        witness: None,
        bound: support_bound,
        exhaustive: support_bound >= classes.len(),
        families_tried: tried,
    })
}

/// Nondecreasing index lists of length `size` respecting `caps`, in
/// lexicographic order. Stops as soon as `visit` returns true.
fn multisets(
    caps: &[u32],
    size: usize,
    start: usize,
    counts: &mut [u32],
    path: &mut Vec<usize>,
    visit: &mut dyn FnMut(&[usize]) -> Result<bool>,
) -> Result<bool> {
    if path.len() == size {
        return visit(path);
    }
    for i in start..caps.len() {
        if counts[i] == caps[i] {
            continue;
        }
        counts[i] += 1;
        path.push(i);
        let stop = multisets(caps, size, i, counts, path, visit)?;
        path.pop();
        counts[i] -= 1;
        if stop {
            return Ok(true);
        }
    }
    Ok(false)
}

/// An element that is not absolutely irreducible, given by its block-monoid
/// image `atom` and two different factorizations of `atomⁿ`.
///
/// When the failure comes from a class holding several prime divisors, the
/// class set is the divisor model in which that class is listed twice (two
/// distinct prime divisors `p`, `q`), and the witness is `b = p^{k−1}·q·W`
/// with `b² = a·c`, `a = pᵏ·W`, `c = p^{k−2}·q²·W`.
#[derive(Clone, Debug)]
pub struct NonAbsWitness<T> {
    pub class_set: ClassSet<T>,
    /// Index of the duplicated class, for the divisor model.
    pub lifted_class: Option<usize>,
    pub atom: Sequence,
    pub n: u32,
    pub first: Vec<Sequence>,
    pub second: Vec<Sequence>,
}

impl<T: Scalar> NonAbsWitness<T> {
    pub fn verify(&self) -> bool {
        let cs = &self.class_set;
        let product = |fs: &[Sequence]| fs.iter().fold(Sequence::empty(cs.len()), |acc, s| acc.mul(s));
        let sorted = |fs: &[Sequence]| {
            let mut v = fs.to_vec();
            v.sort();
            v
        };
        let target = self.atom.pow(self.n);
        cs.is_minimal_zero_sum(&self.atom)
            && self.first.iter().chain(&self.second).all(|s| cs.is_minimal_zero_sum(s))
            && product(&self.first) == target
            && product(&self.second) == target
            && sorted(&self.first) != sorted(&self.second)
    }

    /// Exhaustive check in the witness's own block monoid that `atom` is not
    /// absolutely irreducible at exponent `n`.
    pub fn confirm_by_search(&self, budget: u64) -> Result<bool> {
        let atoms = zsm::enumerate_atoms_with_budget(&self.class_set, budget)?;
        Ok(brute_force_witness(&self.atom, &atoms, self.n, budget)?.is_some())
    }
}

#[derive(Clone, Debug)]
pub struct ScenarioReport<T> {
    pub has_prime: Decision,
    pub has_absirred_nonprime: Decision,
    pub absirred_family: Option<Vec<usize>>,
    pub has_nonabsirred: Decision,
    pub nonabs_witness: Option<NonAbsWitness<T>>,
    pub search: FamilySearch,
    pub bounds: Bounds,
    pub mult_cap: u32,
    pub family_semantics: &'static str,
    pub atom_count: usize,
}

impl<T> ScenarioReport<T> {
    /// Signs in the order (non-absolutely-irreducible, absolutely irreducible
    /// non-prime, prime), e.g. `(-, +, -)`.
    pub fn row_label(&self) -> String {
        format!(
            "({}, {}, {})",
            self.has_nonabsirred.sign(),
            self.has_absirred_nonprime.sign(),
            self.has_prime.sign()
        )
    }
}

pub fn classify_scenario<T: Scalar>(spec: &KrullSpec<T>, bounds: &Bounds) -> Result<ScenarioReport<T>> {
    let has_prime = Decision::from_bool(has_prime_element(spec));
    let search = exists_absirred_nonprime(spec, bounds.support_bound)?;
    let atoms = zsm::enumerate_atoms_with_budget(spec.class_set(), bounds.budget)?;
    let all = all_irreducibles_absirred_in(spec, &atoms)?;
    let nonabs_witness = match all.failure {
        None => None,
        Some((u, FailureKind::SupportNotMinimal)) => Some(block_witness(spec.class_set(), &u, &atoms, bounds.budget)?),
        Some((u, FailureKind::RepeatedNonUniqueClass { class })) => Some(lifted_witness(spec.class_set(), &u, class)?),
    };
    Ok(ScenarioReport {
        has_prime,
        has_absirred_nonprime: search.decision(),
        absirred_family: search.witness.clone(),
        has_nonabsirred: Decision::from_bool(!all.holds),
        nonabs_witness,
        search,
        bounds: *bounds,
        mult_cap: MULT_CAP,
        family_semantics: "multiset over classes",
        atom_count: atoms.len(),
    })
}

fn block_witness<T: Scalar>(cs: &ClassSet<T>, u: &Sequence, atoms: &AtomSet<T>, budget: u64) -> Result<NonAbsWitness<T>> {
    let w = witness_with_budget(u, atoms, budget)?.expect("support is not minimal");
    let expand = |f: &zsm::Factorization| f.indices().iter().map(|&i| atoms.atom(i).clone()).collect();
    Ok(NonAbsWitness {
        class_set: cs.clone(),
        lifted_class: None,
        atom: u.clone(),
        n: w.n,
        first: expand(&w.first),
        second: expand(&w.second),
    })
}

fn lifted_witness<T: Scalar>(cs: &ClassSet<T>, u: &Sequence, class: usize) -> Result<NonAbsWitness<T>> {
    let m = cs.len();
    let mut classes = cs.classes().to_vec();
    classes.push(cs.class(class).clone());
    let model = ClassSet::divisor_model(cs.group().clone(), classes)?;
    let shifted = |moved: u32| {
        let mut e = u.exponents().to_vec();
        e.push(moved);
        e[class] -= moved;
        model.sequence(e)
    };
    let a = shifted(0)?;
    let b = shifted(1)?;
    let c = shifted(2)?;
    Ok(NonAbsWitness {
        class_set: model,
        lifted_class: Some(m),
        atom: b.clone(),
        n: 2,
        first: vec![b.clone(), b],
        second: vec![a, c],
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AngermuellerCheck {
    /// Every absolutely irreducible element found within bounds is prime.
    pub lhs: bool,
    /// The monoid is factorial, i.e. every class in `G₀` is trivial.
    pub rhs: bool,
    pub consistent: bool,
    pub search: FamilySearch,
}

/// Factorial iff every absolutely irreducible element is prime, checked on
/// one spec within the given bounds.
pub fn angermueller_check<T: Scalar>(spec: &KrullSpec<T>, bounds: &Bounds) -> Result<AngermuellerCheck> {
    let search = exists_absirred_nonprime(spec, bounds.support_bound)?;
    let lhs = !search.found();
    let rhs = spec.class_set().classes().iter().all(GroupElement::is_zero);
    Ok(AngermuellerCheck {
        lhs,
        rhs,
        consistent: lhs == rhs,
        search,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::krull::fixtures::*;
    use crate::krull::Multiplicity::{self, Finite, Infinite};

    fn z2_with_zero(mult_g: Multiplicity) -> KrullSpec<num_bigint::BigInt> {
        KrullSpec::new(cyclic_classes(2, &[0, 1]), vec![Infinite, mult_g]).unwrap()
    }

    #[test]
    fn family_search() {
        let r1 = KrullSpec::simple(plus_minus(2, false)).unwrap();
        let s = exists_absirred_nonprime(&r1, 3).unwrap();
        // e1, e2, -f
        assert_eq!(s.witness, Some(vec![0, 2, 5]));
        assert!(!s.exhaustive);

        let s = exists_absirred_nonprime(&z2_with_zero(Finite(2)), 2).unwrap();
        assert_eq!(s.witness, Some(vec![1]));
        assert!(s.exhaustive);

        let trivial = ClassSet::new(G::trivial(), vec![G::trivial().zero()]).unwrap();
        let s = exists_absirred_nonprime(&KrullSpec::simple(trivial).unwrap(), 3).unwrap();
        assert_eq!(s.decision(), Decision::No);

        let s = exists_absirred_nonprime(&r1, 1).unwrap();
        assert_eq!(s.decision(), Decision::Undecided);
    }

    #[test]
    fn rows() {
        let b = Bounds::default();
        let r1 = classify_scenario(&KrullSpec::simple(plus_minus(2, false)).unwrap(), &b).unwrap();
        assert_eq!(r1.row_label(), "(-, +, -)");
        let r2 = classify_scenario(&KrullSpec::simple(plus_minus(2, true)).unwrap(), &b).unwrap();
        assert_eq!(r2.row_label(), "(-, +, +)");
        let trivial = ClassSet::new(G::trivial(), vec![G::trivial().zero()]).unwrap();
        let f = classify_scenario(&KrullSpec::simple(trivial).unwrap(), &b).unwrap();
        assert_eq!(f.row_label(), "(-, -, +)");

        let c = classify_scenario(&z2_with_zero(Finite(2)), &b).unwrap();
        assert_eq!(c.row_label(), "(+, +, +)");
        let w = c.nonabs_witness.unwrap();
        assert_eq!(w.lifted_class, Some(2));
        assert!(w.verify());
        assert!(w.confirm_by_search(b.budget).unwrap());
    }

    #[test]
    fn block_level_witness_in_z3() {
        let spec = KrullSpec::simple(cyclic_classes(3, &[1, 2])).unwrap();
        let r = classify_scenario(&spec, &Bounds::default()).unwrap();
        assert_eq!(r.has_nonabsirred, Decision::Yes);
        let w = r.nonabs_witness.unwrap();
        assert_eq!(w.lifted_class, None);
        assert!(w.verify());
        assert!(w.confirm_by_search(zsm::DEFAULT_NODE_BUDGET).unwrap());
    }

    #[test]
    fn angermueller() {
        let b = Bounds::default();
        let trivial = ClassSet::new(G::trivial(), vec![G::trivial().zero()]).unwrap();
        let a = angermueller_check(&KrullSpec::simple(trivial).unwrap(), &b).unwrap();
        assert!(a.lhs && a.rhs && a.consistent);
        let a = angermueller_check(&KrullSpec::simple(plus_minus(2, false)).unwrap(), &b).unwrap();
        assert!(!a.lhs && !a.rhs && a.consistent);
        let a = angermueller_check(&z2_with_zero(Finite(2)), &b).unwrap();
        assert!(!a.lhs && !a.rhs && a.consistent);
    }
}
