use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_rational::Ratio;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// Dense polynomial over ℚ; `coeffs[k]` is the coefficient of `xᵏ`, with no
/// trailing zeros.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Poly<T: Scalar> {
    coeffs: Vec<Ratio<T>>,
}

impl<T: Scalar> Poly<T> {
    pub fn new(mut coeffs: Vec<Ratio<T>>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(Ratio::one())
    }

    pub fn constant(c: Ratio<T>) -> Self {
        Self::new(vec![c])
    }

    pub fn int(c: i64) -> Self {
        Self::constant(Ratio::from_integer(T::from_i64_exact(c)))
    }

    pub fn x() -> Self {
        Self::new(vec![Ratio::zero(), Ratio::one()])
    }

    /// `x − r`.
    pub fn linear(r: &T) -> Self {
        Self::new(vec![Ratio::from_integer(-r.clone()), Ratio::one()])
    }

    /// Integer coefficients, constant term first.
    pub fn from_ints(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| Ratio::from_integer(T::from_i64_exact(c))).collect())
    }

    /// `Π (x − r)`.
    pub fn from_roots<'a, I: IntoIterator<Item = &'a T>>(roots: I) -> Self {
        roots.into_iter().fold(Self::one(), |acc, r| &acc * &Self::linear(r))
    }

    pub fn coeffs(&self) -> &[Ratio<T>] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn leading(&self) -> Option<&Ratio<T>> {
        self.coeffs.last()
    }

    pub fn eval(&self, x: &Ratio<T>) -> Ratio<T> {
        self.coeffs
            .iter()
            .rev()
            .fold(Ratio::zero(), |acc, c| acc * x.clone() + c.clone())
    }

    pub fn eval_int(&self, x: &T) -> Ratio<T> {
        self.eval(&Ratio::from_integer(x.clone()))
    }

    pub fn scale(&self, c: &Ratio<T>) -> Self {
        Self::new(self.coeffs.iter().map(|a| a.clone() * c.clone()).collect())
    }

    pub fn pow(&self, n: u32) -> Self {
        (0..n).fold(Self::one(), |acc, _| &acc * self)
    }

    /// Least common multiple of the coefficient denominators.
    pub fn denominator(&self) -> T {
        self.coeffs.iter().fold(T::one(), |acc, c| acc.lcm(c.denom()))
    }

    pub fn has_integer_coeffs(&self) -> bool {
        self.coeffs.iter().all(Ratio::is_integer)
    }

    /// `(g, d)` with `self = g/d`, `g` integral and `d` the least positive
    /// denominator.
    pub fn over_common_denominator(&self) -> (Poly<T>, T) {
        let d = self.denominator();
        (self.scale(&Ratio::from_integer(d.clone())), d)
    }

    /// Euclidean division over ℚ.
    pub fn div_rem(&self, divisor: &Self) -> Result<(Self, Self)> {
        let Some(dd) = divisor.degree() else {
            return Err(Error::ZeroPolynomial);
        };
        let lead = divisor.coeffs[dd].clone();
        let mut rem = self.coeffs.clone();
        let mut quot = vec![Ratio::zero(); self.coeffs.len().saturating_sub(dd)];
        while rem.len() > dd && !rem.is_empty() {
            let k = rem.len() - 1 - dd;
            let q = rem[rem.len() - 1].clone() / lead.clone();
            for (i, c) in divisor.coeffs.iter().enumerate() {
                rem[k + i] = rem[k + i].clone() - q.clone() * c.clone();
            }
            quot[k] = q;
            rem.pop();
            while rem.last().is_some_and(Zero::is_zero) {
                rem.pop();
            }
        }
        Ok((Self::new(quot), Self::new(rem)))
    }

    /// `self / divisor` when the division is exact over ℚ.
    pub fn exact_div(&self, divisor: &Self) -> Result<Option<Self>> {
        let (q, r) = self.div_rem(divisor)?;
        Ok(r.is_zero().then_some(q))
    }
}

impl<T: Scalar> Add for &Poly<T> {
    type Output = Poly<T>;
    fn add(self, rhs: &Poly<T>) -> Poly<T> {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let get = |p: &Poly<T>, i: usize| p.coeffs.get(i).cloned().unwrap_or_else(Ratio::zero);
        Poly::new((0..n).map(|i| get(self, i) + get(rhs, i)).collect())
    }
}

impl<T: Scalar> Neg for &Poly<T> {
    type Output = Poly<T>;
    fn neg(self) -> Poly<T> {
        Poly::new(self.coeffs.iter().map(|c| -c.clone()).collect())
    }
}

impl<T: Scalar> Sub for &Poly<T> {
    type Output = Poly<T>;
    fn sub(self, rhs: &Poly<T>) -> Poly<T> {
        self + &(-rhs)
    }
}

impl<T: Scalar> Mul for &Poly<T> {
    type Output = Poly<T>;
    fn mul(self, rhs: &Poly<T>) -> Poly<T> {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero();
        }
        let mut out = vec![Ratio::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] = out[i + j].clone() + a.clone() * b.clone();
            }
        }
        Poly::new(out)
    }
}

impl<T: Scalar> fmt::Display for Poly<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = c < &Ratio::zero();
            let abs = if neg { -c.clone() } else { c.clone() };
            match (first, neg) {
                (true, true) => write!(f, "-")?,
                (false, true) => write!(f, " - ")?,
                (false, false) => write!(f, " + ")?,
                (true, false) => {}
            }
            first = false;
            let unit = abs.is_one();
            match k {
                0 => write!(f, "{abs}")?,
                _ if unit => {}
                _ => write!(f, "{abs}*")?,
            }
            match k {
                0 => {}
                1 => write!(f, "x")?,
                _ => write!(f, "x^{k}")?,
            }
        }
        Ok(())
    }
}
