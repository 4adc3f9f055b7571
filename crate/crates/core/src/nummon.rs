//! Numerical monoids: `M_n = {0} ∪ {n, n+1, …}` and monoids given by
//! generators with gcd 1.

use std::collections::BTreeSet;

use num_integer::Integer;

use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum NumericalMonoid {
    /// `{0} ∪ [n, ∞)`.
    Interval(u64),
    /// The submonoid of ℕ₀ generated by these values.
    Generated(Vec<u64>),
}

impl NumericalMonoid {
    pub fn interval(n: u64) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidMonoid("interval start must be at least 1".into()));
        }
        Ok(NumericalMonoid::Interval(n))
    }

    pub fn generated(mut gens: Vec<u64>) -> Result<Self> {
        gens.sort_unstable();
        gens.dedup();
        if gens.is_empty() || gens[0] == 0 {
            return Err(Error::InvalidMonoid("generators must be positive and nonempty".into()));
        }
        if gens.iter().fold(0, |g, &x| g.gcd(&x)) != 1 {
            return Err(Error::InvalidMonoid(format!("generators {gens:?} have a common factor")));
        }
        Ok(NumericalMonoid::Generated(gens))
    }

    /// Every integer from here on is an element.
    pub fn conductor_bound(&self) -> u64 {
        match self {
            NumericalMonoid::Interval(n) => *n,
            NumericalMonoid::Generated(g) => {
                let (a, b) = (g[0], g[g.len() - 1]);
                // Schur: the Frobenius number is at most (a−1)(b−1) − 1
                (a - 1) * (b - 1)
            }
        }
    }

    pub fn contains(&self, x: u64) -> bool {
        match self {
            NumericalMonoid::Interval(n) => x == 0 || x >= *n,
            NumericalMonoid::Generated(g) => x >= self.conductor_bound() || reachable(g, x)[x as usize],
        }
    }

    /// The atoms: `n, …, 2n−1` for an interval, the minimal generators
    /// otherwise.
    pub fn atoms(&self) -> Vec<u64> {
        match self {
            NumericalMonoid::Interval(n) => (*n..2 * n).collect(),
            NumericalMonoid::Generated(g) => {
                let mut atoms: Vec<u64> = Vec::new();
                for &x in g {
                    if !reachable(&atoms, x)[x as usize] {
                        atoms.push(x);
                    }
                }
                atoms
            }
        }
    }
}

/// `reachable[k]` iff `k` is a sum of the given values, for `k ≤ limit`.
fn reachable(values: &[u64], limit: u64) -> Vec<bool> {
    let mut r = vec![false; limit as usize + 1];
    r[0] = true;
    for k in 1..=limit as usize {
        r[k] = values.iter().any(|&v| v as usize <= k && r[k - v as usize]);
    }
    r
}

pub fn nm_atoms(m: &NumericalMonoid) -> Vec<u64> {
    m.atoms()
}

/// Every way to write `x` as a sum of atoms, each as a nondecreasing list,
/// in lexicographic order.
pub fn nm_factorizations(m: &NumericalMonoid, x: u64) -> Result<Vec<Vec<u64>>> {
    if !m.contains(x) {
        return Err(Error::NotMember { value: x });
    }
    let atoms = m.atoms();
    let mut out = Vec::new();
    let mut path = Vec::new();
    fill(&atoms, 0, x, &mut path, &mut out);
    Ok(out)
}

fn fill(atoms: &[u64], start: usize, rest: u64, path: &mut Vec<u64>, out: &mut Vec<Vec<u64>>) {
    if rest == 0 {
        out.push(path.clone());
        return;
    }
    for (i, &a) in atoms.iter().enumerate().skip(start) {
        if a > rest {
            break;
        }
        path.push(a);
        fill(atoms, i, rest - a, path, out);
        path.pop();
    }
}

pub fn nm_length_set(m: &NumericalMonoid, x: u64) -> Result<BTreeSet<usize>> {
    Ok(nm_factorizations(m, x)?.iter().map(Vec::len).collect())
}

/// Two different factorizations of the element `m·t`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NmWitness {
    pub t: u64,
    /// `t` copies of `m`.
    pub first: Vec<u64>,
    /// `m` copies of `t`.
    pub second: Vec<u64>,
}

impl NmWitness {
    pub fn element(&self) -> u64 {
        self.first.iter().sum()
    }

    pub fn verify(&self, m: &NumericalMonoid) -> bool {
        let atoms = m.atoms();
        let all_atoms = |f: &[u64]| f.iter().all(|a| atoms.binary_search(a).is_ok());
        self.first != self.second
            && self.first.iter().sum::<u64>() == self.second.iter().sum::<u64>()
            && all_atoms(&self.first)
            && all_atoms(&self.second)
    }
}

/// In `M_n` with `n ≥ 2`, every atom `m` fails absolute irreducibility:
/// `m^t = t^m` for another atom `t`.
pub fn nm_witness_non_absirred(monoid: &NumericalMonoid, m: u64) -> Result<NmWitness> {
    let NumericalMonoid::Interval(n) = *monoid else {
        return Err(Error::PreconditionFailed("witness construction needs an interval monoid".into()));
    };
    if n == 1 {
        return Err(Error::NoWitness("M_1 is factorial".into()));
    }
    if !(n..2 * n).contains(&m) {
        return Err(Error::NotAtom { value: m });
    }
    let t = if m != n { n } else { n + 1 };
    Ok(NmWitness {
        t,
        first: vec![m; t as usize],
        second: vec![t; m as usize],
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn atoms() {
        assert_eq!(nm_atoms(&NumericalMonoid::interval(2).unwrap()), vec![2, 3]);
        assert_eq!(nm_atoms(&NumericalMonoid::interval(1).unwrap()), vec![1]);
        assert_eq!(nm_atoms(&NumericalMonoid::interval(4).unwrap()), vec![4, 5, 6, 7]);
        assert_eq!(nm_atoms(&NumericalMonoid::generated(vec![6, 4, 9, 10]).unwrap()), vec![4, 6, 9]);
        assert!(NumericalMonoid::interval(0).is_err());
        assert!(NumericalMonoid::generated(vec![4, 6]).is_err());
    }

    #[test]
    fn membership() {
        let m = NumericalMonoid::generated(vec![3, 5]).unwrap();
        let members: Vec<u64> = (0..12).filter(|&x| m.contains(x)).collect();
        assert_eq!(members, vec![0, 3, 5, 6, 8, 9, 10, 11]);
        assert!(m.contains(1000));
    }

    #[test]
    fn factorizations() {
        let m2 = NumericalMonoid::interval(2).unwrap();
        assert_eq!(nm_factorizations(&m2, 6).unwrap(), vec![vec![2, 2, 2], vec![3, 3]]);
        assert_eq!(nm_length_set(&m2, 6).unwrap(), BTreeSet::from([2, 3]));
        assert_eq!(nm_factorizations(&m2, 2).unwrap(), vec![vec![2]]);
        assert_eq!(nm_factorizations(&m2, 5).unwrap(), vec![vec![2, 3]]);
        assert_eq!(nm_factorizations(&m2, 1), Err(Error::NotMember { value: 1 }));
    }

    #[test]
    fn witnesses() {
        let m2 = NumericalMonoid::interval(2).unwrap();
        let w = nm_witness_non_absirred(&m2, 2).unwrap();
        assert_eq!((w.t, w.element()), (3, 6));
        assert!(w.verify(&m2));
        let m3 = NumericalMonoid::interval(3).unwrap();
        let w = nm_witness_non_absirred(&m3, 4).unwrap();
        assert_eq!(w.t, 3);
        assert_eq!(w.first, vec![4, 4, 4]);
        assert_eq!(w.second, vec![3, 3, 3, 3]);
        let m1 = NumericalMonoid::interval(1).unwrap();
        assert!(matches!(nm_witness_non_absirred(&m1, 1), Err(Error::NoWitness(_))));
        assert_eq!(nm_witness_non_absirred(&m3, 6), Err(Error::NotAtom { value: 6 }));
    }
}
