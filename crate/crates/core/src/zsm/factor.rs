use std::collections::BTreeSet;
use std::fmt;
use std::sync::atomic::{AtomicU64, Ordering};

use num_rational::Ratio;
use rayon::prelude::*;

use super::{AtomSet, Sequence, DEFAULT_NODE_BUDGET};
use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// A multiset of atom indices, stored nondecreasing.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Factorization {
    indices: Vec<usize>,
}

impl Factorization {
    pub fn new(mut indices: Vec<usize>) -> Self {
        indices.sort_unstable();
        Factorization { indices }
    }

    pub fn indices(&self) -> &[usize] {
        &self.indices
    }

    pub fn len(&self) -> usize {
        self.indices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.indices.is_empty()
    }

    /// Multiplies the referenced atoms back together.
    pub fn product<T: Scalar>(&self, atoms: &AtomSet<T>) -> Sequence {
        self.indices
            .iter()
            .fold(Sequence::empty(atoms.class_set().len()), |acc, &i| acc.mul(atoms.atom(i)))
    }
}

impl fmt::Display for Factorization {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.indices.iter().map(ToString::to_string).collect();
        write!(f, "{{{}}}", s.join(","))
    }
}

struct Search<'a> {
    atoms: &'a [Sequence],
    /// Largest atom index containing each class, if any.
    last_cover: Vec<Option<usize>>,
    nodes: &'a AtomicU64,
    budget: u64,
    limit: usize,
}

impl Search<'_> {
    fn tick(&self) -> Result<()> {
        if self.nodes.fetch_add(1, Ordering::Relaxed) + 1 > self.budget {
            return Err(Error::BudgetExceeded { budget: self.budget });
        }
        Ok(())
    }

    /// Highest atom index worth trying: every class left in `rest` must still
    /// be coverable by an atom at or after the next index.
    fn horizon(&self, rest: &Sequence) -> Option<usize> {
        let mut h = self.atoms.len().checked_sub(1)?;
        for i in rest.support() {
            h = h.min(self.last_cover[i]?);
        }
        Some(h)
    }

    fn dfs(&self, start: usize, rest: &Sequence, path: &mut Vec<usize>, out: &mut Vec<Factorization>) -> Result<()> {
        if rest.is_empty() {
            out.push(Factorization { indices: path.clone() });
            return Ok(());
        }
        let Some(h) = self.horizon(rest) else {
            return Ok(());
        };
        for i in start..=h {
            if out.len() >= self.limit {
                break;
            }
            if let Some(next) = self.atoms[i].cofactor_in(rest) {
                self.tick()?;
                path.push(i);
                self.dfs(i, &next, path, out)?;
                path.pop();
            }
        }
        Ok(())
    }
}

fn prepare<'a, T: Scalar>(
    b: &Sequence,
    atoms: &'a AtomSet<T>,
    nodes: &'a AtomicU64,
    budget: u64,
    limit: usize,
) -> Result<Search<'a>> {
    let cs = atoms.class_set();
    if b.exponents().len() != cs.len() {
        return Err(Error::DimensionMismatch {
            expected: cs.len(),
            found: b.exponents().len(),
        });
    }
    if !cs.is_zero_sum(b) {
        return Err(Error::NotZeroSum);
    }
    let mut last_cover = vec![None; cs.len()];
    for (k, a) in atoms.atoms().iter().enumerate() {
        for i in a.support() {
            last_cover[i] = Some(k);
        }
    }
    Ok(Search {
        atoms: atoms.atoms(),
        last_cover,
        nodes,
        budget,
        limit,
    })
}

/// Every factorization of the zero-sum sequence `b` into atoms, sorted.
pub fn factorizations<T: Scalar>(b: &Sequence, atoms: &AtomSet<T>) -> Result<Vec<Factorization>> {
    factorizations_with_budget(b, atoms, DEFAULT_NODE_BUDGET)
}

pub fn factorizations_with_budget<T: Scalar>(b: &Sequence, atoms: &AtomSet<T>, budget: u64) -> Result<Vec<Factorization>> {
    factorizations_up_to(b, atoms, usize::MAX, budget)
}

/// The first `limit` factorizations in DFS order, which is also sorted order.
pub fn factorizations_up_to<T: Scalar>(
    b: &Sequence,
    atoms: &AtomSet<T>,
    limit: usize,
    budget: u64,
) -> Result<Vec<Factorization>> {
    let nodes = AtomicU64::new(0);
    let search = prepare(b, atoms, &nodes, budget, limit)?;
    let mut out = Vec::new();
    search.dfs(0, b, &mut Vec::new(), &mut out)?;
    out.sort();
    Ok(out)
}

/// Same result as [`factorizations_with_budget`], with the branches for the
/// smallest atom index explored in parallel. The budget is shared.
pub fn factorizations_par<T: Scalar>(b: &Sequence, atoms: &AtomSet<T>, budget: u64) -> Result<Vec<Factorization>> {
    let nodes = AtomicU64::new(0);
    let search = prepare(b, atoms, &nodes, budget, usize::MAX)?;
    if b.is_empty() {
        return Ok(vec![Factorization { indices: Vec::new() }]);
    }
    let Some(h) = search.horizon(b) else {
        return Ok(Vec::new());
    };
    let parts: Vec<Vec<Factorization>> = (0..=h)
        .into_par_iter()
        .map(|i| {
            let mut out = Vec::new();
            if let Some(next) = search.atoms[i].cofactor_in(b) {
                search.tick()?;
                search.dfs(i, &next, &mut vec![i], &mut out)?;
            }
            Ok(out)
        })
        .collect::<Result<_>>()?;
    let mut out: Vec<Factorization> = parts.into_iter().flatten().collect();
    out.sort();
    Ok(out)
}

pub fn length_set<T: Scalar>(b: &Sequence, atoms: &AtomSet<T>) -> Result<BTreeSet<usize>> {
    Ok(factorizations(b, atoms)?.iter().map(Factorization::len).collect())
}

/// `max L / min L`; the empty sequence has elasticity 1.
pub fn elasticity<T: Scalar>(b: &Sequence, atoms: &AtomSet<T>) -> Result<Ratio<usize>> {
    let lengths = length_set(b, atoms)?;
    let (Some(&lo), Some(&hi)) = (lengths.first(), lengths.last()) else {
        return Ok(Ratio::from_integer(1));
    };
    if lo == 0 {
        return Ok(Ratio::from_integer(1));
    }
    Ok(Ratio::new(hi, lo))
}
