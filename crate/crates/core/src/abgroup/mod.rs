//! Finitely generated abelian groups `ℤ^r ⊕ ℤ/d₁ ⊕ … ⊕ ℤ/d_k` and the
//! integer linear algebra behind every classification criterion.
//!
//! Congruences are turned into plain integer kernels by appending one slack
//! column `−dⱼ` per torsion component. Residues are kept in `[0, dⱼ)`, so the
//! slack coordinates are determined by the class coefficients and projecting
//! a kernel onto those coefficients is a bijection.

mod lattice;
mod matrix;
mod snf;

use std::fmt;
use std::hash::{Hash, Hasher};

use num_traits::Zero;

pub use lattice::Lattice;
pub use matrix::Matrix;
pub use snf::{hermite_rows, smith_normal_form, SmithForm};

use crate::error::{Error, Result};
use crate::hilbert;
use crate::scalar::Scalar;

/// `ℤ^free_rank ⊕ ⊕ᵢ ℤ/torsionᵢ`.
///
/// Elements use the coordinates of the presentation given at construction.
/// Equality compares the invariant-factor normal form, so `ℤ/2 ⊕ ℤ/3` equals
/// `ℤ/6` although their element coordinates differ.
#[derive(Clone, Debug)]
pub struct FinGenAbelianGroup<T> {
    free_rank: usize,
    torsion: Vec<T>,
    invariants: Vec<T>,
}

/// An element in the coordinates of its group's presentation.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GroupElement<T> {
    free: Vec<T>,
    torsion: Vec<T>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Order<T> {
    Finite(T),
    Infinite,
}

impl<T: Scalar> FinGenAbelianGroup<T> {
    pub fn new(free_rank: usize, torsion: Vec<T>) -> Result<Self> {
        let two = T::from_i64_exact(2);
        if let Some(bad) = torsion.iter().find(|d| **d < two) {
            return Err(Error::InvalidGroup(format!("torsion order {bad} is below 2")));
        }
        let k = torsion.len();
        let mut relations = Matrix::zeros(k, k);
        for (i, d) in torsion.iter().enumerate() {
            relations[(i, i)] = d.clone();
        }
        let invariants = smith_normal_form(&relations)
            .invariant_factors()
            .into_iter()
            .filter(|d| !d.is_one())
            .collect();
        Ok(FinGenAbelianGroup {
            free_rank,
            torsion,
            invariants,
        })
    }

    pub fn free(rank: usize) -> Self {
        Self::new(rank, Vec::new()).expect("free group")
    }

    pub fn trivial() -> Self {
        Self::free(0)
    }

    /// `ℤ/n`; `n = 1` gives the trivial group.
    pub fn cyclic(n: u64) -> Result<Self> {
        match n {
            0 => Err(Error::InvalidGroup("cyclic group of order 0".into())),
            1 => Ok(Self::trivial()),
            _ => Self::new(0, vec![T::from_u64(n).expect("order fits")]),
        }
    }

    pub fn free_rank(&self) -> usize {
        self.free_rank
    }

    /// Torsion orders as presented.
    pub fn torsion(&self) -> &[T] {
        &self.torsion
    }

    /// Invariant factors `d₁ | d₂ | …`, all at least 2.
    pub fn invariant_factors(&self) -> &[T] {
        &self.invariants
    }

    /// Length of a coordinate vector: free coordinates then torsion residues.
    pub fn coord_len(&self) -> usize {
        self.free_rank + self.torsion.len()
    }

    pub fn is_finite(&self) -> bool {
        self.free_rank == 0
    }

    pub fn cardinality(&self) -> Option<T> {
        self.is_finite()
            .then(|| self.torsion.iter().fold(T::one(), |acc, d| acc * d.clone()))
    }

    pub fn element(&self, free: Vec<T>, torsion: Vec<T>) -> Result<GroupElement<T>> {
        if free.len() != self.free_rank {
            return Err(Error::DimensionMismatch {
                expected: self.free_rank,
                found: free.len(),
            });
        }
        if torsion.len() != self.torsion.len() {
            return Err(Error::DimensionMismatch {
                expected: self.torsion.len(),
                found: torsion.len(),
            });
        }
        let torsion = torsion
            .into_iter()
            .zip(&self.torsion)
            .map(|(t, d)| t.mod_floor(d))
            .collect();
        Ok(GroupElement { free, torsion })
    }

    /// Element from a flat coordinate vector (free part first).
    pub fn element_from_coords(&self, coords: &[T]) -> Result<GroupElement<T>> {
        if coords.len() != self.coord_len() {
            return Err(Error::DimensionMismatch {
                expected: self.coord_len(),
                found: coords.len(),
            });
        }
        let (f, t) = coords.split_at(self.free_rank);
        self.element(f.to_vec(), t.to_vec())
    }

    pub fn element_i64(&self, coords: &[i64]) -> Result<GroupElement<T>> {
        let coords: Vec<T> = coords.iter().map(|&c| T::from_i64_exact(c)).collect();
        self.element_from_coords(&coords)
    }

    pub fn zero(&self) -> GroupElement<T> {
        GroupElement {
            free: vec![T::zero(); self.free_rank],
            torsion: vec![T::zero(); self.torsion.len()],
        }
    }

    /// The i-th standard basis vector of the free part.
    pub fn free_basis(&self, i: usize) -> GroupElement<T> {
        let mut g = self.zero();
        g.free[i] = T::one();
        g
    }

    /// The generator `1` of the j-th cyclic torsion summand.
    pub fn torsion_generator(&self, j: usize) -> GroupElement<T> {
        let mut g = self.zero();
        g.torsion[j] = T::one();
        g
    }

    pub fn contains(&self, g: &GroupElement<T>) -> bool {
        g.free.len() == self.free_rank
            && g.torsion.len() == self.torsion.len()
            && g.torsion
                .iter()
                .zip(&self.torsion)
                .all(|(t, d)| !t.is_negative() && t < d)
    }

    fn check(&self, g: &GroupElement<T>) -> Result<()> {
        if self.contains(g) {
            Ok(())
        } else {
            Err(Error::DimensionMismatch {
                expected: self.coord_len(),
                found: g.coord_len(),
            })
        }
    }

    pub fn add(&self, a: &GroupElement<T>, b: &GroupElement<T>) -> GroupElement<T> {
        GroupElement {
            free: a.free.iter().zip(&b.free).map(|(x, y)| x.clone() + y.clone()).collect(),
            torsion: a
                .torsion
                .iter()
                .zip(&b.torsion)
                .zip(&self.torsion)
                .map(|((x, y), d)| {
                    let s = x.clone() + y.clone();
                    if s >= *d {
                        s - d.clone()
                    } else {
                        s
                    }
                })
                .collect(),
        }
    }

    pub fn neg(&self, a: &GroupElement<T>) -> GroupElement<T> {
        GroupElement {
            free: a.free.iter().map(|x| -x.clone()).collect(),
            torsion: a
                .torsion
                .iter()
                .zip(&self.torsion)
                .map(|(x, d)| if x.is_zero() { T::zero() } else { d.clone() - x.clone() })
                .collect(),
        }
    }

    pub fn sub(&self, a: &GroupElement<T>, b: &GroupElement<T>) -> GroupElement<T> {
        self.add(a, &self.neg(b))
    }

    /// `k·a` for any integer `k`.
    pub fn scale(&self, a: &GroupElement<T>, k: &T) -> GroupElement<T> {
        GroupElement {
            free: a.free.iter().map(|x| x.clone() * k.clone()).collect(),
            torsion: a
                .torsion
                .iter()
                .zip(&self.torsion)
                .map(|(x, d)| (x.clone() * k.clone()).mod_floor(d))
                .collect(),
        }
    }

    pub fn sum<'a, I>(&self, terms: I) -> GroupElement<T>
    where
        I: IntoIterator<Item = (&'a GroupElement<T>, &'a T)>,
    {
        terms
            .into_iter()
            .fold(self.zero(), |acc, (g, k)| self.add(&acc, &self.scale(g, k)))
    }

    /// Least `n ≥ 1` with `n·g = 0`, or `Infinite` when the free part is nonzero.
    pub fn order(&self, g: &GroupElement<T>) -> Result<Order<T>> {
        self.check(g)?;
        if g.free.iter().any(|x| !x.is_zero()) {
            return Ok(Order::Infinite);
        }
        let n = g
            .torsion
            .iter()
            .zip(&self.torsion)
            .fold(T::one(), |acc, (t, d)| acc.lcm(&(d.clone() / t.gcd(d))));
        Ok(Order::Finite(n))
    }

    /// Every element of a finite group, in lexicographic coordinate order.
    pub fn elements(&self) -> Result<Vec<GroupElement<T>>> {
        if !self.is_finite() {
            return Err(Error::InfiniteGroupNoBound);
        }
        let mut out = vec![self.zero()];
        for (j, d) in self.torsion.iter().enumerate() {
            let mut next = Vec::new();
            for g in &out {
                let mut t = T::zero();
                while t < *d {
                    let mut h = g.clone();
                    h.torsion[j] = t.clone();
                    next.push(h);
                    t = t + T::one();
                }
            }
            out = next;
        }
        out.sort();
        Ok(out)
    }

    /// Columns of the augmented system: one per family member, then one
    /// slack column `−dⱼ` per torsion component.
    pub(crate) fn augmented_columns(&self, family: &[GroupElement<T>]) -> Result<Vec<Vec<T>>> {
        let mut cols = Vec::with_capacity(family.len() + self.torsion.len());
        for g in family {
            self.check(g)?;
            cols.push(g.coords());
        }
        for (j, d) in self.torsion.iter().enumerate() {
            let mut c = vec![T::zero(); self.coord_len()];
            c[self.free_rank + j] = -d.clone();
            cols.push(c);
        }
        Ok(cols)
    }

    /// Lattice basis of `{α ∈ ℤ^m : Σ αᵢ gᵢ = 0}`.
    pub fn kernel_lattice(&self, family: &[GroupElement<T>]) -> Result<Lattice<T>> {
        let m = family.len();
        let cols = self.augmented_columns(family)?;
        let rows = self.coord_len();
        let mut a = Matrix::zeros(rows, cols.len());
        for (j, c) in cols.iter().enumerate() {
            for (i, x) in c.iter().enumerate() {
                a[(i, j)] = x.clone();
            }
        }
        let snf = smith_normal_form(&a);
        let kernel: Vec<Vec<T>> = (snf.rank..cols.len())
            .map(|j| snf.v.column(j)[..m].to_vec())
            .collect();
        Ok(Lattice::generated_by(&kernel, m))
    }

    /// No nontrivial integer relation. The empty family is independent.
    pub fn is_z_independent(&self, family: &[GroupElement<T>]) -> Result<bool> {
        Ok(self.kernel_lattice(family)?.is_trivial())
    }

    /// Some `α ≥ 0`, `α ≠ 0` with `Σ αᵢ gᵢ = 0`, if one exists.
    ///
    /// For a rank-one kernel this is the generator with nonnegative entries;
    /// otherwise the lexicographically least relation of least total weight
    /// found by the completion procedure.
    pub fn positive_kernel_vector(&self, family: &[GroupElement<T>]) -> Result<Option<Vec<T>>> {
        if family.is_empty() {
            return Ok(None);
        }
        let lattice = self.kernel_lattice(family)?;
        match lattice.rank() {
            0 => Ok(None),
            1 => {
                let gen = &lattice.basis()[0];
                if gen.iter().all(|x| !x.is_negative()) {
                    Ok(Some(gen.clone()))
                } else if gen.iter().all(|x| !x.is_positive()) {
                    Ok(Some(gen.iter().map(|x| -x.clone()).collect()))
                } else {
                    Ok(None)
                }
            }
            _ => {
                let cols = self.augmented_columns(family)?;
                let sols = hilbert::lightest_solutions(&cols, hilbert::DEFAULT_NODE_BUDGET)?;
                let best = sols
                    .into_iter()
                    .map(|s| s[..family.len()].iter().map(|&x| T::from_u32(x).expect("u32 fits")).collect::<Vec<T>>())
                    .filter(|a| a.iter().any(|x| !x.is_zero()))
                    .min();
                Ok(best)
            }
        }
    }
}

impl<T: Scalar> PartialEq for FinGenAbelianGroup<T> {
    fn eq(&self, other: &Self) -> bool {
        self.free_rank == other.free_rank && self.invariants == other.invariants
    }
}

impl<T: Scalar> Eq for FinGenAbelianGroup<T> {}

impl<T: Scalar> Hash for FinGenAbelianGroup<T> {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.free_rank.hash(state);
        self.invariants.hash(state);
    }
}

impl<T: Scalar> fmt::Display for FinGenAbelianGroup<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        match self.free_rank {
            0 => {}
            1 => parts.push("Z".to_string()),
            r => parts.push(format!("Z^{r}")),
        }
        parts.extend(self.torsion.iter().map(|d| format!("Z/{d}")));
        if parts.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", parts.join(" + "))
        }
    }
}

impl<T: Scalar> GroupElement<T> {
    pub fn free_part(&self) -> &[T] {
        &self.free
    }

    pub fn torsion_part(&self) -> &[T] {
        &self.torsion
    }

    pub fn coords(&self) -> Vec<T> {
        self.free.iter().chain(&self.torsion).cloned().collect()
    }

    pub fn coord_len(&self) -> usize {
        self.free.len() + self.torsion.len()
    }

    pub fn is_zero(&self) -> bool {
        self.free.iter().chain(&self.torsion).all(Zero::is_zero)
    }
}

impl<T: Scalar> fmt::Display for GroupElement<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let c: Vec<String> = self.coords().iter().map(ToString::to_string).collect();
        write!(f, "({})", c.join(","))
    }
}
