//! Minimal nonzero solutions of a homogeneous system `A·x = 0` over ℕ.
//!
//! Contejean–Devie completion: start from the unit vectors and extend a
//! candidate `x` by `e_j` only when `⟨A·x, A·e_j⟩ < 0`, i.e. when adding
//! column `j` moves the defect `A·x` back towards the origin. Candidates that
//! dominate an already found solution are dropped. The procedure terminates
//! for every integer matrix and returns exactly the Hilbert basis of the
//! solution monoid.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// Default cap on the number of candidates generated by one completion run.
pub const DEFAULT_NODE_BUDGET: u64 = 10_000_000;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HilbertBasis {
    /// Minimal solutions, sorted lexicographically.
    pub solutions: Vec<Vec<u32>>,
    /// Candidates generated during the search.
    pub nodes: u64,
}

/// The columns `A·e_j` of the system; all must have the same length.
pub fn minimal_solutions<T: Scalar>(columns: &[Vec<T>], budget: u64) -> Result<HilbertBasis> {
    let (mut solutions, nodes) = complete(columns, budget, false)?;
    solutions.sort();
    Ok(HilbertBasis { solutions, nodes })
}

/// Minimal solutions of least total weight, i.e. those found at the first
/// completion level that produces any. Empty when the system only has the
/// trivial solution.
pub fn lightest_solutions<T: Scalar>(columns: &[Vec<T>], budget: u64) -> Result<Vec<Vec<u32>>> {
    let (mut solutions, _) = complete(columns, budget, true)?;
    solutions.sort();
    Ok(solutions)
}

struct Gram<T> {
    q: usize,
    entries: Vec<T>,
}

impl<T: Scalar> Gram<T> {
    fn new(columns: &[Vec<T>]) -> Self {
        let q = columns.len();
        let mut entries = Vec::with_capacity(q * q);
        for a in columns {
            for b in columns {
                let dot = a
                    .iter()
                    .zip(b)
                    .fold(T::zero(), |acc, (x, y)| acc + x.clone() * y.clone());
                entries.push(dot);
            }
        }
        Gram { q, entries }
    }

    fn row(&self, j: usize) -> &[T] {
        &self.entries[j * self.q..(j + 1) * self.q]
    }
}

fn complete<T: Scalar>(columns: &[Vec<T>], budget: u64, stop_at_first: bool) -> Result<(Vec<Vec<u32>>, u64)> {
    if let Some(first) = columns.first() {
        if let Some(bad) = columns.iter().find(|c| c.len() != first.len()) {
            return Err(Error::DimensionMismatch {
                expected: first.len(),
                found: bad.len(),
            });
        }
    }
    let q = columns.len();
    let gram = Gram::new(columns);

    // candidate -> (⟨A·x, A·e_j⟩)_j
    let mut frontier: BTreeMap<Vec<u32>, Vec<T>> = BTreeMap::new();
    for j in 0..q {
        let mut x = vec![0u32; q];
        x[j] = 1;
        frontier.insert(x, gram.row(j).to_vec());
    }
    let mut nodes = q as u64;
    let mut basis: Vec<Vec<u32>> = Vec::new();

    while !frontier.is_empty() {
        let mut rest = Vec::with_capacity(frontier.len());
        let mut found_here = false;
        for (x, pairing) in frontier {
            // ‖A·x‖² = Σ_j x_j ⟨A·x, A·e_j⟩
            let norm = x
                .iter()
                .zip(&pairing)
                .filter(|(xj, _)| **xj > 0)
                .fold(T::zero(), |acc, (xj, p)| acc + T::from_u32(*xj).expect("u32 fits") * p.clone());
            if norm.is_zero() {
                basis.push(x);
                found_here = true;
            } else {
                rest.push((x, pairing));
            }
        }
        if stop_at_first && found_here {
            break;
        }

        let mut next: BTreeMap<Vec<u32>, Vec<T>> = BTreeMap::new();
        for (x, pairing) in &rest {
            for j in 0..q {
                if !pairing[j].is_negative() {
                    continue;
                }
                let mut y = x.clone();
                y[j] += 1;
                if next.contains_key(&y) || basis.iter().any(|m| dominated_by(m, &y)) {
                    continue;
                }
                nodes += 1;
                if nodes > budget {
                    return Err(Error::BudgetExceeded { budget });
                }
                let updated = pairing
                    .iter()
                    .zip(gram.row(j))
                    .map(|(a, b)| a.clone() + b.clone())
                    .collect();
                next.insert(y, updated);
            }
        }
        frontier = next;
    }
    Ok((basis, nodes))
}

/// `m ≤ y` componentwise.
fn dominated_by(m: &[u32], y: &[u32]) -> bool {
    m.iter().zip(y).all(|(a, b)| a <= b)
}
