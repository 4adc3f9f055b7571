//! The orders `ℤ[√d]` for squarefree `d < 0` with `d ≡ 2, 3 (mod 4)`.
//!
//! Everything is decided through the norm `N(a + b√d) = a² − d·b²`, which is
//! multiplicative and positive away from zero, so divisor searches are finite.

use std::collections::BTreeSet;
use std::fmt;
use std::sync::atomic::{AtomicU64, Ordering};

use crate::error::{Error, Result};
use crate::scalar::{is_prime, pow, Scalar};

pub use crate::hilbert::DEFAULT_NODE_BUDGET;

/// `a + b√d`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct QuadInt<T: Scalar> {
    pub a: T,
    pub b: T,
}

impl<T: Scalar> QuadInt<T> {
    pub fn new(a: T, b: T) -> Self {
        QuadInt { a, b }
    }

    pub fn int(a: i64) -> Self {
        QuadInt::new(T::from_i64_exact(a), T::zero())
    }

    pub fn from_i64(a: i64, b: i64) -> Self {
        QuadInt::new(T::from_i64_exact(a), T::from_i64_exact(b))
    }

    /// `√d`.
    pub fn root() -> Self {
        QuadInt::new(T::zero(), T::one())
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    pub fn conj(&self) -> Self {
        QuadInt::new(self.a.clone(), -self.b.clone())
    }

    pub fn neg(&self) -> Self {
        QuadInt::new(-self.a.clone(), -self.b.clone())
    }
}

impl<T: Scalar> fmt::Display for QuadInt<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let one = T::one();
        match (self.a.is_zero(), self.b.is_zero()) {
            (_, true) => write!(f, "{}", self.a),
            (true, false) if self.b == one => write!(f, "√d"),
            (true, false) if self.b == -one => write!(f, "-√d"),
            (true, false) => write!(f, "{}√d", self.b),
            (false, false) => {
                let sign = if self.b.is_negative() { '-' } else { '+' };
                let mag = self.b.abs();
                if mag.is_one() {
                    write!(f, "{} {sign} √d", self.a)
                } else {
                    write!(f, "{} {sign} {mag}√d", self.a)
                }
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct QuadRing<T: Scalar> {
    d: T,
}

impl<T: Scalar> QuadRing<T> {
    pub fn new(d: T) -> Result<Self> {
        if !d.is_negative() {
            return Err(Error::InvalidRing(format!("d = {d} is not negative")));
        }
        let four = T::from_i64_exact(4);
        let r = d.mod_floor(&four);
        if r != T::from_i64_exact(2) && r != T::from_i64_exact(3) {
            return Err(Error::InvalidRing(format!("d = {d} is not 2 or 3 mod 4")));
        }
        let m = d.abs();
        let mut k = T::from_i64_exact(2);
        while k.clone() * k.clone() <= m {
            if m.is_multiple_of(&(k.clone() * k.clone())) {
                return Err(Error::InvalidRing(format!("d = {d} is not squarefree")));
            }
            k = k + T::one();
        }
        Ok(QuadRing { d })
    }

    pub fn d(&self) -> &T {
        &self.d
    }

    pub fn norm(&self, z: &QuadInt<T>) -> T {
        z.a.clone() * z.a.clone() - self.d.clone() * z.b.clone() * z.b.clone()
    }

    pub fn mul(&self, x: &QuadInt<T>, y: &QuadInt<T>) -> QuadInt<T> {
        QuadInt::new(
            x.a.clone() * y.a.clone() + self.d.clone() * x.b.clone() * y.b.clone(),
            x.a.clone() * y.b.clone() + x.b.clone() * y.a.clone(),
        )
    }

    pub fn pow(&self, z: &QuadInt<T>, n: u32) -> QuadInt<T> {
        (0..n).fold(QuadInt::int(1), |acc, _| self.mul(&acc, z))
    }

    pub fn product<'a, I: IntoIterator<Item = &'a QuadInt<T>>>(&self, items: I) -> QuadInt<T> {
        items.into_iter().fold(QuadInt::int(1), |acc, z| self.mul(&acc, z))
    }

    /// `z / w` when the quotient lies in the ring.
    pub fn div_exact(&self, z: &QuadInt<T>, w: &QuadInt<T>) -> Result<Option<QuadInt<T>>> {
        if w.is_zero() {
            return Err(Error::ZeroDivisor);
        }
        let n = self.norm(w);
        let num = self.mul(z, &w.conj());
        if num.a.is_multiple_of(&n) && num.b.is_multiple_of(&n) {
            Ok(Some(QuadInt::new(num.a / n.clone(), num.b / n)))
        } else {
            Ok(None)
        }
    }

    pub fn is_unit(&self, z: &QuadInt<T>) -> bool {
        self.norm(z).is_one()
    }

    pub fn units(&self) -> Vec<QuadInt<T>> {
        elements_of_norm(self, &T::one())
    }

    /// The largest of the associates of `z` in the `(a, b)` order; for
    /// `d ≤ −2` this makes the first nonzero coordinate positive.
    pub fn canonical(&self, z: &QuadInt<T>) -> QuadInt<T> {
        self.units()
            .iter()
            .map(|u| self.mul(u, z))
            .max()
            .expect("±1 are units")
    }
}

/// All `a + b√d` of norm `m`, sorted.
pub fn elements_of_norm<T: Scalar>(ring: &QuadRing<T>, m: &T) -> Vec<QuadInt<T>> {
    let mut out = BTreeSet::new();
    if m.is_negative() {
        return Vec::new();
    }
    let nd = ring.d.abs();
    let mut b = T::zero();
    while nd.clone() * b.clone() * b.clone() <= *m {
        let rest = m.clone() - nd.clone() * b.clone() * b.clone();
        let a = rest.sqrt();
        if a.clone() * a.clone() == rest {
            for (sa, sb) in [(1, 1), (1, -1), (-1, 1), (-1, -1)] {
                out.insert(QuadInt::new(
                    a.clone() * T::from_i64_exact(sa),
                    b.clone() * T::from_i64_exact(sb),
                ));
            }
        }
        b = b + T::one();
    }
    out.into_iter().collect()
}

fn divisors<T: Scalar>(n: &T) -> Vec<T> {
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut k = T::one();
    while k.clone() * k.clone() <= *n {
        if n.is_multiple_of(&k) {
            let q = n.clone() / k.clone();
            if q != k {
                large.push(q);
            }
            small.push(k.clone());
        }
        k = k + T::one();
    }
    small.extend(large.into_iter().rev());
    small
}

pub fn quad_divides<T: Scalar>(ring: &QuadRing<T>, w: &QuadInt<T>, z: &QuadInt<T>) -> Result<bool> {
    Ok(ring.div_exact(z, w)?.is_some())
}

/// A proper divisor of `z`, i.e. one with `1 < N(w) < N(z)`, if any.
fn proper_divisor<T: Scalar>(ring: &QuadRing<T>, z: &QuadInt<T>) -> Option<QuadInt<T>> {
    let n = ring.norm(z);
    divisors(&n)
        .into_iter()
        .filter(|k| !k.is_one() && *k != n)
        .flat_map(|k| elements_of_norm(ring, &k))
        .find(|w| ring.div_exact(z, w).ok().flatten().is_some())
}

pub fn quad_is_irreducible<T: Scalar>(ring: &QuadRing<T>, z: &QuadInt<T>) -> Result<bool> {
    if ring.norm(z) <= T::one() {
        return Err(Error::ZeroOrUnit);
    }
    Ok(proper_divisor(ring, z).is_none())
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PrimeReport<T: Scalar> {
    /// `z | x·y` while `z ∤ x` and `z ∤ y`.
    NonPrimeWitness { x: QuadInt<T>, y: QuadInt<T> },
    /// `z = ±p` for an odd rational prime `p ∤ 2d` with `d` a non-residue
    /// mod `p` (Euler's criterion), so `p` stays prime.
    PrimeByEuler { p: T },
    Unknown,
}

/// Tries the product recipe for even `z` (`√d·√d` when `d ≡ 2 mod 4`,
/// `(1 + √d)(1 − √d)` when `d ≡ 3 mod 4`) and Euler's criterion for odd
/// rational primes. Anything else is `Unknown`, even when `z` is not prime.
pub fn quad_is_prime_witness<T: Scalar>(ring: &QuadRing<T>, z: &QuadInt<T>) -> Result<PrimeReport<T>> {
    if z.is_zero() {
        return Err(Error::ZeroDivisor);
    }
    let two = T::from_i64_exact(2);
    if z.a.is_multiple_of(&two) && z.b.is_multiple_of(&two) {
        let (x, y) = if ring.d.mod_floor(&T::from_i64_exact(4)) == two {
            (QuadInt::root(), QuadInt::root())
        } else {
            (QuadInt::new(T::one(), T::one()), QuadInt::new(T::one(), -T::one()))
        };
        let xy = ring.mul(&x, &y);
        if quad_divides(ring, z, &xy)? && !quad_divides(ring, z, &x)? && !quad_divides(ring, z, &y)? {
            return Ok(PrimeReport::NonPrimeWitness { x, y });
        }
    }
    if z.b.is_zero() {
        let p = z.a.abs();
        let twice_d = two.clone() * ring.d.clone();
        if p.is_odd() && is_prime(&p) && !twice_d.is_multiple_of(&p) {
            let e = ((p.clone() - T::one()) / two)
                .to_u64()
                .expect("exponent fits u64");
            let euler = pow_mod(&ring.d.mod_floor(&p), e, &p);
            if euler == p.clone() - T::one() {
                return Ok(PrimeReport::PrimeByEuler { p });
            }
        }
    }
    Ok(PrimeReport::Unknown)
}

fn pow_mod<T: Scalar>(base: &T, mut exp: u64, m: &T) -> T {
    let mut acc = T::one().mod_floor(m);
    let mut b = base.mod_floor(m);
    while exp > 0 {
        if exp & 1 == 1 {
            acc = (acc * b.clone()).mod_floor(m);
        }
        b = (b.clone() * b).mod_floor(m);
        exp >>= 1;
    }
    acc
}

/// A factorization `z = unit · Π factors` into irreducibles, factors given
/// by their canonical associates in nondecreasing `(norm, a, b)` order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuadFactorization<T: Scalar> {
    pub unit: QuadInt<T>,
    pub factors: Vec<QuadInt<T>>,
}

impl<T: Scalar> QuadFactorization<T> {
    pub fn len(&self) -> usize {
        self.factors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.factors.is_empty()
    }

    pub fn product(&self, ring: &QuadRing<T>) -> QuadInt<T> {
        ring.mul(&self.unit, &ring.product(&self.factors))
    }
}

impl<T: Scalar> fmt::Display for QuadFactorization<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.unit)?;
        for z in &self.factors {
            write!(f, "·({z})")?;
        }
        Ok(())
    }
}

struct Search<'a, T: Scalar> {
    ring: &'a QuadRing<T>,
    nodes: AtomicU64,
    budget: u64,
}

impl<T: Scalar> Search<'_, T> {
    fn key(&self, z: &QuadInt<T>) -> (T, QuadInt<T>) {
        (self.ring.norm(z), z.clone())
    }

    /// Canonical irreducible divisors of `z`, sorted by `(norm, a, b)`.
    fn irreducible_divisors(&self, z: &QuadInt<T>) -> Vec<QuadInt<T>> {
        let mut out: BTreeSet<(T, QuadInt<T>)> = BTreeSet::new();
        for k in divisors(&self.ring.norm(z)) {
            if k.is_one() {
                continue;
            }
            for w in elements_of_norm(self.ring, &k) {
                let w = self.ring.canonical(&w);
                if proper_divisor(self.ring, &w).is_none() && self.ring.div_exact(z, &w).ok().flatten().is_some() {
                    out.insert(self.key(&w));
                }
            }
        }
        out.into_iter().map(|(_, w)| w).collect()
    }

    fn dfs(
        &self,
        rest: &QuadInt<T>,
        min: Option<&(T, QuadInt<T>)>,
        path: &mut Vec<QuadInt<T>>,
        out: &mut Vec<QuadFactorization<T>>,
    ) -> Result<()> {
        if self.nodes.fetch_add(1, Ordering::Relaxed) >= self.budget {
            return Err(Error::BudgetExceeded { budget: self.budget });
        }
        if self.ring.is_unit(rest) {
            out.push(QuadFactorization { unit: rest.clone(), factors: path.clone() });
            return Ok(());
        }
        for w in self.irreducible_divisors(rest) {
            let key = self.key(&w);
            if min.is_some_and(|m| key < *m) {
                continue;
            }
            let q = self.ring.div_exact(rest, &w)?.expect("w divides rest");
            path.push(w);
            self.dfs(&q, Some(&key), path, out)?;
            path.pop();
        }
        Ok(())
    }
}

/// All factorizations of a nonzero nonunit `z` into irreducibles, up to
/// order and associates.
pub fn quad_factorizations<T: Scalar>(
    ring: &QuadRing<T>,
    z: &QuadInt<T>,
    budget: u64,
) -> Result<Vec<QuadFactorization<T>>> {
    if ring.norm(z) <= T::one() {
        return Err(Error::ZeroOrUnit);
    }
    let search = Search { ring, nodes: AtomicU64::new(0), budget };
    let mut out = Vec::new();
    search.dfs(z, None, &mut Vec::new(), &mut out)?;
    Ok(out)
}

pub fn quad_length_set<T: Scalar>(ring: &QuadRing<T>, z: &QuadInt<T>, budget: u64) -> Result<BTreeSet<usize>> {
    Ok(quad_factorizations(ring, z, budget)?.iter().map(QuadFactorization::len).collect())
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuadAbsirred<T: Scalar> {
    pub holds: bool,
    pub n_max: u32,
    /// `(n, f)` with `f` a factorization of `zⁿ` other than `n` copies of `z`.
    pub witness: Option<(u32, QuadFactorization<T>)>,
}

/// Checks that `zⁿ` factors only as `n` copies of `z` for `2 ≤ n ≤ n_max`.
pub fn quad_brute_absirred<T: Scalar>(
    ring: &QuadRing<T>,
    z: &QuadInt<T>,
    n_max: u32,
    budget: u64,
) -> Result<QuadAbsirred<T>> {
    if !quad_is_irreducible(ring, z)? {
        return Err(Error::NotIrreducible);
    }
    let c = ring.canonical(z);
    for n in 2..=n_max {
        let trivial = vec![c.clone(); n as usize];
        let other = quad_factorizations(ring, &ring.pow(z, n), budget)?
            .into_iter()
            .find(|f| f.factors != trivial);
        if let Some(f) = other {
            return Ok(QuadAbsirred { holds: false, n_max, witness: Some((n, f)) });
        }
    }
    Ok(QuadAbsirred { holds: true, n_max, witness: None })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HalfFactorialCheck<T: Scalar> {
    pub norm_bound: T,
    pub elements_checked: usize,
    /// An element with two factorization lengths, with its length set.
    pub counterexample: Option<(QuadInt<T>, BTreeSet<usize>)>,
}

impl<T: Scalar> HalfFactorialCheck<T> {
    pub fn holds(&self) -> bool {
        self.counterexample.is_none()
    }
}

/// Length sets of every nonzero nonunit of norm at most `norm_bound`, one
/// element per associate class.
pub fn half_factorial_up_to<T: Scalar>(
    ring: &QuadRing<T>,
    norm_bound: &T,
    budget: u64,
) -> Result<HalfFactorialCheck<T>> {
    let mut checked = 0;
    let mut m = T::from_i64_exact(2);
    while m <= *norm_bound {
        let reps: BTreeSet<QuadInt<T>> = elements_of_norm(ring, &m).iter().map(|z| ring.canonical(z)).collect();
        for z in reps {
            checked += 1;
            let lengths = quad_length_set(ring, &z, budget)?;
            if lengths.len() > 1 {
                return Ok(HalfFactorialCheck {
                    norm_bound: norm_bound.clone(),
                    elements_checked: checked,
                    counterexample: Some((z, lengths)),
                });
            }
        }
        m = m + T::one();
    }
    Ok(HalfFactorialCheck { norm_bound: norm_bound.clone(), elements_checked: checked, counterexample: None })
}

/// `|d|^k` as the norm of `(√d)^k`.
pub fn root_power_norm<T: Scalar>(ring: &QuadRing<T>, k: u64) -> T {
    pow(&ring.d.abs(), k)
}
