use super::is_absirred_support;
use crate::abgroup::{FinGenAbelianGroup, GroupElement, Order};
use crate::error::{Error, Result};
use crate::scalar::Scalar;
use crate::zsm::{self, ClassSet, Sequence};

/// Atoms `factors` and `t` of one block monoid with `Π factors = tⁿ`, so `t`
/// is not absolutely irreducible.
#[derive(Clone, Debug)]
pub struct BgWitness<T> {
    pub class_set: ClassSet<T>,
    pub factors: Vec<Sequence>,
    pub t: Sequence,
    pub n: u32,
}

impl<T: Scalar> BgWitness<T> {
    pub fn verify(&self) -> bool {
        let cs = &self.class_set;
        let product = self
            .factors
            .iter()
            .fold(Sequence::empty(cs.len()), |acc, s| acc.mul(s));
        cs.is_minimal_zero_sum(&self.t)
            && self.factors.iter().all(|s| cs.is_minimal_zero_sum(s) && *s != self.t)
            && product == self.t.pow(self.n)
    }
}

#[derive(Clone, Debug)]
pub struct BgVerdict<T> {
    /// Every atom of `B(G)` is absolutely irreducible.
    pub holds: bool,
    pub witness: Option<BgWitness<T>>,
}

/// Whether every atom of `B(G)` is absolutely irreducible, for finite `G`.
///
/// Groups of order at most two are settled by enumerating the atoms. Larger
/// groups get an explicit witness: `gⁿ·(−g)ⁿ = (g(−g))ⁿ` for an element of
/// order `n ≥ 3`, otherwise `g²·h²·(g+h)² = (gh(g+h))²` for independent
/// `g`, `h` of order two.
pub fn check_bg_all_absirred<T: Scalar>(g: &FinGenAbelianGroup<T>) -> Result<BgVerdict<T>> {
    let cs = ClassSet::full(g.clone())?;
    let two = T::one() + T::one();
    if g.cardinality().expect("finite") <= two {
        let atoms = zsm::enumerate_atoms(&cs)?;
        let mut holds = true;
        for u in atoms.atoms() {
            holds &= is_absirred_support(u, &atoms)?;
        }
        return Ok(BgVerdict { holds, witness: None });
    }
    let idx = |x: &GroupElement<T>| cs.index_of(x).expect("full class set");

    for x in cs.classes() {
        let Order::Finite(n) = g.order(x)? else { unreachable!("finite group") };
        if n > two {
            let n = n.to_u32().expect("order fits u32");
            let i = idx(x);
            let j = idx(&g.neg(x));
            let witness = BgWitness {
                factors: vec![cs.sequence_from(&[(i, n)]), cs.sequence_from(&[(j, n)])],
                t: cs.sequence_from(&[(i, 1), (j, 1)]),
                n,
                class_set: cs.clone(),
            };
            return Ok(BgVerdict {
                holds: false,
                witness: Some(witness),
            });
        }
    }

    // exponent two and at least four elements
    let nonzero: Vec<&GroupElement<T>> = cs.classes().iter().filter(|x| !x.is_zero()).collect();
    let a = nonzero[0];
    let b = nonzero[1];
    let (i, j, k) = (idx(a), idx(b), idx(&g.add(a, b)));
    let witness = BgWitness {
        factors: vec![
            cs.sequence_from(&[(i, 2)]),
            cs.sequence_from(&[(j, 2)]),
            cs.sequence_from(&[(k, 2)]),
        ],
        t: cs.sequence_from(&[(i, 1), (j, 1), (k, 1)]),
        n: 2,
        class_set: cs.clone(),
    };
    Ok(BgVerdict {
        holds: false,
        witness: Some(witness),
    })
}

/// For `g` of infinite order, over `G₀ = {−g, −2g, 3g}`:
/// `(3g)(−g)³ · (3g)²(−2g)³ = ((−g)(−2g)(3g))³`.
pub fn infinite_order_witness<T: Scalar>(g: &FinGenAbelianGroup<T>, x: &GroupElement<T>) -> Result<BgWitness<T>> {
    if g.order(x)? != Order::Infinite {
        return Err(Error::PreconditionFailed(format!("{x} has finite order")));
    }
    let times = |k: i64| g.scale(x, &T::from_i64_exact(k));
    let cs = ClassSet::new(g.clone(), vec![times(-1), times(-2), times(3)])?;
    Ok(BgWitness {
        factors: vec![cs.sequence(vec![3, 0, 1])?, cs.sequence(vec![0, 3, 2])?],
        t: cs.sequence(vec![1, 1, 1])?,
        n: 3,
        class_set: cs,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::krull::fixtures::G;
    use num_bigint::BigInt;

    #[test]
    fn small_groups() {
        assert!(check_bg_all_absirred(&G::trivial()).unwrap().holds);
        assert!(check_bg_all_absirred(&G::cyclic(2).unwrap()).unwrap().holds);
        assert!(check_bg_all_absirred(&G::free(1)).is_err());
    }

    #[test]
    fn order_three() {
        let v = check_bg_all_absirred(&G::cyclic(3).unwrap()).unwrap();
        assert!(!v.holds);
        let w = v.witness.unwrap();
        assert!(w.verify());
        assert_eq!(w.n, 3);
        // classes 0, 1, 2
        assert_eq!(w.t.exponents(), &[0, 1, 1]);
        assert_eq!(w.factors[0].exponents(), &[0, 3, 0]);
        assert_eq!(w.factors[1].exponents(), &[0, 0, 3]);
    }

    #[test]
    fn klein_four() {
        let g = G::new(0, vec![BigInt::from(2), BigInt::from(2)]).unwrap();
        let w = check_bg_all_absirred(&g).unwrap().witness.unwrap();
        assert!(w.verify());
        assert_eq!(w.n, 2);
        assert_eq!(w.factors.len(), 3);
        assert_eq!(w.t.length(), 3);
    }

    #[test]
    fn infinite_order() {
        let z = G::free(1);
        let w = infinite_order_witness(&z, &z.free_basis(0)).unwrap();
        assert!(w.verify());
        let atoms = zsm::enumerate_atoms(&w.class_set).unwrap();
        let lengths = zsm::length_set(&w.t.pow(3), &atoms).unwrap();
        assert!(lengths.contains(&2) && lengths.contains(&3));
        let z2 = G::cyclic(2).unwrap();
        assert!(infinite_order_witness(&z2, &z2.torsion_generator(0)).is_err());
    }
}
