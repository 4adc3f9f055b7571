//! Zero-sum sequences over a finite class list `G₀` and the block monoid
//! `B(G₀)`.
//!
//! A [`Sequence`] is an exponent vector indexed parallel to the classes of a
//! [`ClassSet`]. The atoms of `B(G₀)` are the minimal zero-sum sequences; they
//! are exactly the minimal nonzero solutions of `Σ x_g·g = 0` over ℕ and are
//! computed by [`crate::hilbert`] on the slack-augmented system.

mod factor;

use std::collections::HashSet;
use std::fmt;

pub use factor::{elasticity, factorizations, factorizations_par, factorizations_up_to, factorizations_with_budget, length_set, Factorization};

use crate::abgroup::{FinGenAbelianGroup, GroupElement};
use crate::error::{Error, Result};
use crate::hilbert;
use crate::scalar::Scalar;

pub use crate::hilbert::DEFAULT_NODE_BUDGET;

/// The class list `G₀` inside its group.
#[derive(Clone, Debug)]
pub struct ClassSet<T> {
    group: FinGenAbelianGroup<T>,
    classes: Vec<GroupElement<T>>,
}

impl<T: Scalar> PartialEq for ClassSet<T> {
    fn eq(&self, other: &Self) -> bool {
        self.group == other.group && self.classes == other.classes
    }
}

impl<T: Scalar> Eq for ClassSet<T> {}

impl<T: Scalar> ClassSet<T> {
    /// A nonempty list of distinct elements of `group`.
    pub fn new(group: FinGenAbelianGroup<T>, classes: Vec<GroupElement<T>>) -> Result<Self> {
        let mut seen = HashSet::new();
        for g in &classes {
            if !seen.insert(g) {
                return Err(Error::InvalidClassSet(format!("duplicate class {g}")));
            }
        }
        Self::divisor_model(group, classes)
    }

    /// Like [`ClassSet::new`] but repeated values are allowed. Each entry then
    /// stands for its own symbol, e.g. two prime divisors in one class.
    pub fn divisor_model(group: FinGenAbelianGroup<T>, classes: Vec<GroupElement<T>>) -> Result<Self> {
        if classes.is_empty() {
            return Err(Error::InvalidClassSet("empty class set".into()));
        }
        if let Some(g) = classes.iter().find(|g| !group.contains(g)) {
            return Err(Error::InvalidClassSet(format!("{g} is not an element of {group}")));
        }
        Ok(ClassSet { group, classes })
    }

    /// Every element of a finite group, in lexicographic order.
    pub fn full(group: FinGenAbelianGroup<T>) -> Result<Self> {
        let classes = group.elements()?;
        Self::new(group, classes)
    }

    pub fn group(&self) -> &FinGenAbelianGroup<T> {
        &self.group
    }

    pub fn classes(&self) -> &[GroupElement<T>] {
        &self.classes
    }

    pub fn len(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }

    pub fn class(&self, i: usize) -> &GroupElement<T> {
        &self.classes[i]
    }

    pub fn index_of(&self, g: &GroupElement<T>) -> Option<usize> {
        self.classes.iter().position(|c| c == g)
    }

    pub fn has_repeats(&self) -> bool {
        let mut seen = HashSet::new();
        !self.classes.iter().all(|g| seen.insert(g))
    }

    pub fn sequence(&self, exps: Vec<u32>) -> Result<Sequence> {
        if exps.len() != self.len() {
            return Err(Error::DimensionMismatch {
                expected: self.len(),
                found: exps.len(),
            });
        }
        Ok(Sequence { exps })
    }

    /// The sequence `Π gᵢ^kᵢ` from `(class index, exponent)` pairs.
    pub fn sequence_from(&self, terms: &[(usize, u32)]) -> Sequence {
        let mut s = Sequence::empty(self.len());
        for &(i, k) in terms {
            s.exps[i] += k;
        }
        s
    }

    /// `σ(S) = Σ v_g(S)·g`.
    pub fn sigma(&self, s: &Sequence) -> GroupElement<T> {
        let ks: Vec<T> = s.exps.iter().map(|&e| T::from_u32(e).expect("u32 fits")).collect();
        self.group.sum(self.classes.iter().zip(&ks))
    }

    pub fn is_zero_sum(&self, s: &Sequence) -> bool {
        self.sigma(s).is_zero()
    }

    /// The classes occurring in `s`.
    pub fn support(&self, s: &Sequence) -> Vec<GroupElement<T>> {
        s.support().into_iter().map(|i| self.classes[i].clone()).collect()
    }

    /// Nonempty, zero-sum, and no nonempty proper zero-sum subsequence.
    pub fn is_minimal_zero_sum(&self, s: &Sequence) -> bool {
        s.length() > 0 && self.is_zero_sum(s) && !self.has_proper_zero_sum(s)
    }

    /// DFS over sub-exponent-vectors, deduplicating on
    /// `(position, partial sum, nonempty, proper)`.
    fn has_proper_zero_sum(&self, s: &Sequence) -> bool {
        let support = s.support();
        let mut seen = HashSet::new();
        let mut stack = vec![(0usize, self.group.zero(), false, false)];
        while let Some((pos, sum, nonempty, proper)) = stack.pop() {
            if pos == support.len() {
                if nonempty && proper && sum.is_zero() {
                    return true;
                }
                continue;
            }
            if !seen.insert((pos, sum.clone(), nonempty, proper)) {
                continue;
            }
            let i = support[pos];
            let g = &self.classes[i];
            let mut acc = sum;
            for k in 0..=s.exps[i] {
                stack.push((pos + 1, acc.clone(), nonempty || k > 0, proper || k < s.exps[i]));
                acc = self.group.add(&acc, g);
            }
        }
        false
    }

    /// Renders `s` as a product of class coordinates, e.g. `(1,0)^2*(0,1)`.
    pub fn render(&self, s: &Sequence) -> String {
        if s.length() == 0 {
            return "1".into();
        }
        s.support()
            .into_iter()
            .map(|i| match s.exps[i] {
                1 => self.classes[i].to_string(),
                e => format!("{}^{e}", self.classes[i]),
            })
            .collect::<Vec<_>>()
            .join("*")
    }
}

/// An element of the free abelian monoid over a class list.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Sequence {
    exps: Vec<u32>,
}

impl Sequence {
    pub fn empty(len: usize) -> Self {
        Sequence { exps: vec![0; len] }
    }

    /// The single class `i`.
    pub fn unit(len: usize, i: usize) -> Self {
        let mut s = Self::empty(len);
        s.exps[i] = 1;
        s
    }

    pub fn exponents(&self) -> &[u32] {
        &self.exps
    }

    /// `v_g(S)` for the class at index `i`.
    pub fn exponent(&self, i: usize) -> u32 {
        self.exps[i]
    }

    /// `|S|`.
    pub fn length(&self) -> u64 {
        self.exps.iter().map(|&e| u64::from(e)).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.exps.iter().all(|&e| e == 0)
    }

    /// Indices of the classes with positive exponent.
    pub fn support(&self) -> Vec<usize> {
        (0..self.exps.len()).filter(|&i| self.exps[i] > 0).collect()
    }

    pub fn mul(&self, other: &Sequence) -> Sequence {
        assert_eq!(self.exps.len(), other.exps.len(), "sequences over different class sets");
        Sequence {
            exps: self.exps.iter().zip(&other.exps).map(|(a, b)| a + b).collect(),
        }
    }

    pub fn pow(&self, n: u32) -> Sequence {
        Sequence {
            exps: self.exps.iter().map(|e| e * n).collect(),
        }
    }

    pub fn divides(&self, other: &Sequence) -> bool {
        self.exps.len() == other.exps.len() && self.exps.iter().zip(&other.exps).all(|(a, b)| a <= b)
    }

    /// `other / self` when `self | other`.
    pub fn cofactor_in(&self, other: &Sequence) -> Option<Sequence> {
        self.divides(other).then(|| Sequence {
            exps: other.exps.iter().zip(&self.exps).map(|(b, a)| b - a).collect(),
        })
    }

    pub fn support_subset_of(&self, other: &Sequence) -> bool {
        self.exps.iter().zip(&other.exps).all(|(a, b)| *a == 0 || *b > 0)
    }
}

impl fmt::Display for Sequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let e: Vec<String> = self.exps.iter().map(ToString::to_string).collect();
        write!(f, "[{}]", e.join(","))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Certificate {
    pub method: &'static str,
    pub budget: u64,
    pub nodes: u64,
}

/// All minimal zero-sum sequences over a class set, in lexicographic order.
#[derive(Clone, Debug)]
pub struct AtomSet<T> {
    class_set: ClassSet<T>,
    atoms: Vec<Sequence>,
    certificate: Certificate,
}

impl<T: Scalar> AtomSet<T> {
    pub fn class_set(&self) -> &ClassSet<T> {
        &self.class_set
    }

    pub fn atoms(&self) -> &[Sequence] {
        &self.atoms
    }

    pub fn atom(&self, i: usize) -> &Sequence {
        &self.atoms[i]
    }

    pub fn len(&self) -> usize {
        self.atoms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.atoms.is_empty()
    }

    pub fn certificate(&self) -> &Certificate {
        &self.certificate
    }

    pub fn index_of(&self, s: &Sequence) -> Option<usize> {
        self.atoms.binary_search(s).ok()
    }

    pub fn contains(&self, s: &Sequence) -> bool {
        self.index_of(s).is_some()
    }
}

pub fn enumerate_atoms<T: Scalar>(cs: &ClassSet<T>) -> Result<AtomSet<T>> {
    enumerate_atoms_with_budget(cs, DEFAULT_NODE_BUDGET)
}

pub fn enumerate_atoms_with_budget<T: Scalar>(cs: &ClassSet<T>, budget: u64) -> Result<AtomSet<T>> {
    let cols = cs.group.augmented_columns(&cs.classes)?;
    let hb = hilbert::minimal_solutions(&cols, budget)?;
    let m = cs.len();
    let mut atoms: Vec<Sequence> = hb
        .solutions
        .into_iter()
        .map(|x| Sequence { exps: x[..m].to_vec() })
        .collect();
    atoms.sort();
    atoms.dedup();
    Ok(AtomSet {
        class_set: cs.clone(),
        atoms,
        certificate: Certificate {
            method: "completion",
            budget,
            nodes: hb.nodes,
        },
    })
}

/// `|G|`, an upper bound for the length of any minimal zero-sum sequence over
/// a finite group.
pub fn atom_length_bound<T: Scalar>(cs: &ClassSet<T>) -> Result<u64> {
    cs.group
        .cardinality()
        .and_then(|n| n.to_u64())
        .ok_or(Error::InfiniteGroupNoBound)
}
