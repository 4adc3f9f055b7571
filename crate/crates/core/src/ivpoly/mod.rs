//! Integer-valued polynomials `Int(ℤ) = {f ∈ ℚ[x] : f(ℤ) ⊆ ℤ}` and the
//! subrings `R(p)` of those with a `p`-power denominator.
//!
//! Irreducibility in these rings is not decided here. The functions check
//! membership, divisibility and fixed divisors exactly, which is enough to
//! verify concrete non-primality and non-uniqueness witnesses.

mod poly;

pub use poly::Poly;

use num_rational::Ratio;

use crate::error::{Error, Result};
use crate::scalar::{is_prime, Scalar};

/// Values at `0, 1, …, deg f` are integers; this is equivalent to `f ∈ Int(ℤ)`.
pub fn is_integer_valued<T: Scalar>(f: &Poly<T>) -> bool {
    let by_values = values(f).iter().all(Ratio::is_integer);
    debug_assert_eq!(by_values, binomial_coordinates(f).iter().all(Ratio::is_integer));
    by_values
}

/// `f(0), …, f(deg f)`; empty for the zero polynomial.
fn values<T: Scalar>(f: &Poly<T>) -> Vec<Ratio<T>> {
    let n = f.degree().map_or(0, |d| d + 1);
    (0..n).map(|k| f.eval_int(&T::from_usize_exact(k))).collect()
}

/// Coordinates of `f` in the basis `binom(x, k)`: the forward differences
/// `Δᵏf(0)`. `f` is integer-valued iff all of them are integers.
pub fn binomial_coordinates<T: Scalar>(f: &Poly<T>) -> Vec<Ratio<T>> {
    let mut row = values(f);
    let mut out = Vec::with_capacity(row.len());
    while let Some(first) = row.first() {
        out.push(first.clone());
        row = row.windows(2).map(|w| w[1].clone() - w[0].clone()).collect();
    }
    out
}

/// `gcd f(ℤ)`, computed as `gcd(f(0), …, f(deg f))`.
pub fn fixed_divisor<T: Scalar>(f: &Poly<T>) -> Result<T> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if !is_integer_valued(f) {
        return Err(Error::NotIntegerValued);
    }
    Ok(values(f).iter().fold(T::zero(), |acc, v| acc.gcd(v.numer())))
}

/// `g / f` in `Int(ℤ)`, if `f` divides `g` there.
pub fn quotient_in_intz<T: Scalar>(f: &Poly<T>, g: &Poly<T>) -> Result<Option<Poly<T>>> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if !is_integer_valued(f) || !is_integer_valued(g) {
        return Err(Error::NotIntegerValued);
    }
    Ok(g.exact_div(f)?.filter(is_integer_valued))
}

pub fn divides_in_intz<T: Scalar>(f: &Poly<T>, g: &Poly<T>) -> Result<bool> {
    Ok(quotient_in_intz(f, g)?.is_some())
}

/// `binom(x, n) = x(x−1)⋯(x−n+1)/n!`.
pub fn binomial_poly<T: Scalar>(n: u32) -> Poly<T> {
    let roots: Vec<T> = (0..n).map(|k| T::from_u32(k).expect("u32 fits")).collect();
    let factorial = (1..=n).fold(T::one(), |acc, k| acc * T::from_u32(k).expect("u32 fits"));
    Poly::from_roots(&roots).scale(&Ratio::new(T::one(), factorial))
}

fn require_prime<T: Scalar>(p: &T) -> Result<()> {
    if is_prime(p) {
        Ok(())
    } else {
        Err(Error::NotPrime(p.to_string()))
    }
}

/// `v_p(n!) = Σ ⌊n/pⁱ⌋`.
pub fn legendre_vp_factorial<T: Scalar>(p: &T, n: &T) -> Result<T> {
    require_prime(p)?;
    let mut total = T::zero();
    let mut q = n.clone() / p.clone();
    while !q.is_zero() {
        total = total + q.clone();
        q = q / p.clone();
    }
    Ok(total)
}

/// `f ∈ R(p)`: integer-valued with a power of `p` as denominator.
pub fn rp_membership<T: Scalar>(f: &Poly<T>, p: &T) -> Result<bool> {
    require_prime(p)?;
    let mut d = f.denominator();
    while d.is_multiple_of(p) {
        d = d / p.clone();
    }
    Ok(d.is_one() && is_integer_valued(f))
}

/// Outcome of the divisibility argument showing that a non-constant
/// `G = g/d ∈ Int(ℤ)` is not prime.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NoPrimeReport<T: Scalar> {
    pub p: T,
    /// `Π (x − r)` over the residues `r` mod `p` with `g(r) ≢ 0`.
    pub h: Poly<T>,
    /// `h·G/p ∈ Int(ℤ)`.
    pub h_times_g: bool,
    /// `(G + p)·h/p ∈ Int(ℤ)`.
    pub shifted_times_h: bool,
    /// `G ∤ G + p` in ℚ[x].
    pub g_not_dividing_shift: bool,
    /// `h/p ∉ Int(ℤ)`.
    pub h_alone_fails: bool,
}

impl<T: Scalar> NoPrimeReport<T> {
    pub fn verified(&self) -> bool {
        self.h_times_g && self.shifted_times_h && self.g_not_dividing_shift && self.h_alone_fails
    }
}

/// `G` divides `h·G` and `(G+p)·h` as multiples of `p` in `Int(ℤ)`, while
/// `G` divides neither `h` nor `G + p`: so `G` is not prime.
pub fn verify_no_prime_witness<T: Scalar>(g_poly: &Poly<T>, p: &T) -> Result<NoPrimeReport<T>> {
    require_prime(p)?;
    if g_poly.is_constant() {
        return Err(Error::PreconditionFailed(
            "G is constant; use the residue-product witness".into(),
        ));
    }
    if !is_integer_valued(g_poly) {
        return Err(Error::PreconditionFailed("G is not integer-valued".into()));
    }
    let (g, _) = g_poly.over_common_denominator();
    let residues: Vec<T> = num_iter(p);
    let nonroots: Vec<T> = residues
        .iter()
        .filter(|r| !g.eval_int(r).numer().is_multiple_of(p))
        .cloned()
        .collect();
    if nonroots.len() == residues.len() {
        return Err(Error::PreconditionFailed(format!("g has no root mod {p}")));
    }
    if nonroots.is_empty() {
        return Err(Error::PreconditionFailed(format!("g vanishes identically mod {p}")));
    }
    let h = Poly::from_roots(&nonroots);
    let inv_p = Poly::constant(Ratio::new(T::one(), p.clone()));
    let p_poly = Poly::constant(Ratio::from_integer(p.clone()));
    let shifted = g_poly + &p_poly;
    Ok(NoPrimeReport {
        p: p.clone(),
        h_times_g: is_integer_valued(&(&(&h * g_poly) * &inv_p)),
        shifted_times_h: is_integer_valued(&(&(&shifted * &h) * &inv_p)),
        g_not_dividing_shift: shifted.exact_div(g_poly)?.is_none(),
        h_alone_fails: !is_integer_valued(&(&h * &inv_p)),
        h,
    })
}

fn num_iter<T: Scalar>(n: &T) -> Vec<T> {
    let mut out = Vec::new();
    let mut k = T::zero();
    while k < *n {
        out.push(k.clone());
        k = k + T::one();
    }
    out
}

/// A prime `p` dividing a constant `c` divides `Π_{r<p} (x − r)` in `Int(ℤ)`
/// but none of the linear factors.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ResidueProductWitness<T: Scalar> {
    pub p: T,
    pub factors: Vec<Poly<T>>,
}

impl<T: Scalar> ResidueProductWitness<T> {
    pub fn verify(&self, c: &T) -> Result<bool> {
        let cp = Poly::constant(Ratio::from_integer(c.clone()));
        let product = self.factors.iter().fold(Poly::one(), |acc, f| &acc * f);
        let whole = divides_in_intz(&cp, &product)?;
        let mut none_single = true;
        for f in &self.factors {
            none_single &= !divides_in_intz(&cp, f)?;
        }
        Ok(self.factors.len() >= 2 && whole && none_single)
    }
}

/// The witness for the smallest prime factor of `c`.
pub fn residue_product_witness<T: Scalar>(c: &T) -> Result<ResidueProductWitness<T>> {
    let c = c.abs();
    if c <= T::one() {
        return Err(Error::PreconditionFailed(format!("{c} is zero or a unit")));
    }
    let p = num_iter(&(c.clone() + T::one()))
        .into_iter()
        .find(|q| is_prime(q) && c.is_multiple_of(q))
        .expect("an integer above 1 has a prime factor");
    let factors = num_iter(&p).iter().map(Poly::linear).collect();
    Ok(ResidueProductWitness { p, factors })
}

/// `f² = left·right` with both factors integer-valued and neither a unit
/// multiple of `f`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SquareSplit<T: Scalar> {
    pub f: Poly<T>,
    pub left: Poly<T>,
    pub right: Poly<T>,
}

impl<T: Scalar> SquareSplit<T> {
    pub fn verify(&self) -> bool {
        let unit_multiple = |g: &Poly<T>| *g == self.f || *g == -&self.f;
        is_integer_valued(&self.f)
            && is_integer_valued(&self.left)
            && is_integer_valued(&self.right)
            && &self.left * &self.right == self.f.pow(2)
            && !unit_multiple(&self.left)
            && !unit_multiple(&self.right)
    }

    /// Neither factor is a rational multiple of `f`.
    pub fn essentially_different(&self) -> bool {
        let ratio_const = |g: &Poly<T>| g.exact_div(&self.f).ok().flatten().is_some_and(|q| q.is_constant());
        !ratio_const(&self.left) && !ratio_const(&self.right)
    }
}

/// `f = x(x²+3)/2` with `f² = (x²(x²+3)/4)·(x²+3)`.
pub fn half_cubic_split<T: Scalar>() -> SquareSplit<T> {
    let quad = Poly::from_ints(&[3, 0, 1]);
    let half = Ratio::new(T::one(), T::from_i64_exact(2));
    let quarter = Ratio::new(T::one(), T::from_i64_exact(4));
    SquareSplit {
        f: (&Poly::x() * &quad).scale(&half),
        left: (&Poly::from_ints(&[0, 0, 1]) * &quad).scale(&quarter),
        right: quad,
    }
}

/// `Π_{r<p} (x − r)/p`, an element of `R(p)` dividing the product of its
/// linear factors but none of them.
pub fn rp_residue_element<T: Scalar>(p: &T) -> Result<Poly<T>> {
    require_prime(p)?;
    Ok(Poly::from_roots(&num_iter(p)).scale(&Ratio::new(T::one(), p.clone())))
}

/// The element `f = g·(x − c₁)·(x − c₂)^{e−1}/pᵉ` of `R(p)` with
/// `g = Π (x − b)` over `0 ≤ b < p²`, `p ∤ b`, `c₁ = 0`, `c₂ = p²` and
/// `e = v_p((p²)!)`, together with the factorization
/// `f² = [g·(x − c₁)²·(x − c₂)^{e−2}/pᵉ]·[g·(x − c₂)ᵉ/pᵉ]`.
pub fn rp_square_split<T: Scalar>(p: &T) -> Result<SquareSplit<T>> {
    let p2 = p.clone() * p.clone();
    let e = legendre_vp_factorial(p, &p2)?
        .to_u32()
        .expect("exponent fits u32");
    let bs: Vec<T> = num_iter(&p2).into_iter().filter(|b| !b.is_multiple_of(p)).collect();
    let g = Poly::from_roots(&bs);
    let c1 = Poly::linear(&T::zero());
    let c2 = Poly::linear(&p2);
    let denom = Ratio::new(T::one(), crate::scalar::pow(p, u64::from(e)));
    let f = (&(&g * &c1) * &c2.pow(e - 1)).scale(&denom);
    let left = (&(&g * &c1.pow(2)) * &c2.pow(e - 2)).scale(&denom);
    let right = (&g * &c2.pow(e)).scale(&denom);
    Ok(SquareSplit { f, left, right })
}
