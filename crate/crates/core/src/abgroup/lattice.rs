use num_traits::Zero;

use super::snf::hermite_rows;
use crate::scalar::Scalar;

/// A sublattice of ℤ^dim, stored by its Hermite basis.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Lattice<T> {
    dim: usize,
    basis: Vec<Vec<T>>,
}

impl<T: Scalar> Lattice<T> {
    pub fn generated_by(vectors: &[Vec<T>], dim: usize) -> Self {
        Lattice {
            dim,
            basis: hermite_rows(vectors, dim),
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn basis(&self) -> &[Vec<T>] {
        &self.basis
    }

    pub fn rank(&self) -> usize {
        self.basis.len()
    }

    pub fn is_trivial(&self) -> bool {
        self.basis.is_empty()
    }

    /// Membership by back-substitution against the echelon basis.
    pub fn contains(&self, v: &[T]) -> bool {
        if v.len() != self.dim {
            return false;
        }
        let mut rest = v.to_vec();
        for row in &self.basis {
            let pivot = row.iter().position(|x| !x.is_zero()).expect("basis rows are nonzero");
            let (q, r) = rest[pivot].div_rem(&row[pivot]);
            if !r.is_zero() {
                return false;
            }
            for (x, b) in rest.iter_mut().zip(row) {
                *x = x.clone() - q.clone() * b.clone();
            }
        }
        rest.iter().all(Zero::is_zero)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn membership() {
        let l = Lattice::generated_by(&[vec![2i64, 0], vec![1, 3]], 2);
        assert_eq!(l.rank(), 2);
        assert!(l.contains(&[3, 3]));
        assert!(l.contains(&[0, 6]));
        assert!(!l.contains(&[0, 3]));
        assert!(!l.contains(&[1, 0]));
        let trivial = Lattice::<i64>::generated_by(&[], 3);
        assert!(trivial.contains(&[0, 0, 0]));
        assert!(!trivial.contains(&[0, 1, 0]));
    }
}
