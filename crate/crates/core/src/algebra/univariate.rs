//! Dense univariate polynomials in `z`.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_rational::BigRational;
use num_traits::Zero;

use super::coeff::Coeff;
use super::display::write_terms;

/// `sum_i c_i z^i` with no trailing zero coefficients.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct UniPoly<C> {
    coeffs: Vec<C>,
}

impl<C: Coeff> UniPoly<C> {
    pub fn zero() -> Self {
        UniPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::from_coeffs(vec![C::one()])
    }

    pub fn from_coeffs(mut coeffs: Vec<C>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        UniPoly { coeffs }
    }

    pub fn from_ints(coeffs: &[i64]) -> Self {
        Self::from_coeffs(coeffs.iter().map(|&c| C::from_int(c)).collect())
    }

    pub fn monomial(c: C, exp: usize) -> Self {
        let mut coeffs = vec![C::zero(); exp + 1];
        coeffs[exp] = c;
        Self::from_coeffs(coeffs)
    }

    /// `1 - z^b`
    pub fn one_minus_power(b: usize) -> Self {
        let mut p = Self::monomial(-C::one(), b);
        p.coeffs[0] += &C::one();
        Self::from_coeffs(p.coeffs)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Lowest exponent with a nonzero coefficient.
    pub fn low_degree(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    pub fn coeff(&self, i: usize) -> C {
        self.coeffs.get(i).cloned().unwrap_or_else(C::zero)
    }

    pub fn coeffs(&self) -> &[C] {
        &self.coeffs
    }

    pub fn leading(&self) -> Option<&C> {
        self.coeffs.last()
    }

    pub fn scale(&self, c: &C) -> Self {
        Self::from_coeffs(self.coeffs.iter().map(|x| x.mul_ref(c)).collect())
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut out = Self::one();
        for _ in 0..n {
            out = &out * self;
        }
        out
    }

    pub fn eval(&self, x: &C) -> C {
        let mut acc = C::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc.mul_ref(x);
            acc += c;
        }
        acc
    }

    /// Quotient and remainder, provided every leading-coefficient division
    /// is exact in the coefficient ring.
    pub fn div_rem(&self, divisor: &Self) -> Option<(Self, Self)> {
        let lead = divisor.leading()?;
        let dlen = divisor.coeffs.len();
        if self.coeffs.len() < dlen {
            return Some((Self::zero(), self.clone()));
        }
        let mut rem = self.coeffs.clone();
        let qlen = rem.len() - dlen + 1;
        let mut quot = vec![C::zero(); qlen];
        for i in (0..qlen).rev() {
            let top = &rem[i + dlen - 1];
            if top.is_zero() {
                continue;
            }
            let c = top.div_exact(lead)?;
            for (j, d) in divisor.coeffs.iter().enumerate() {
                rem[i + j] -= &c.mul_ref(d);
            }
            quot[i] = c;
        }
        Some((Self::from_coeffs(quot), Self::from_coeffs(rem)))
    }

    /// Exact quotient, `None` if `divisor` does not divide `self`.
    pub fn div_exact(&self, divisor: &Self) -> Option<Self> {
        let (q, r) = self.div_rem(divisor)?;
        r.is_zero().then_some(q)
    }

    /// Symmetric coefficients on the span between the lowest and highest
    /// nonzero terms. The zero polynomial counts as palindromic.
    pub fn is_palindromic(&self) -> bool {
        let Some(lo) = self.low_degree() else {
            return true;
        };
        let span = &self.coeffs[lo..];
        span.iter().eq(span.iter().rev())
    }

    pub fn map_coeffs<D: Coeff>(&self, f: impl Fn(&C) -> D) -> UniPoly<D> {
        UniPoly::from_coeffs(self.coeffs.iter().map(f).collect())
    }
}

impl UniPoly<BigRational> {
    /// Monic greatest common divisor by the Euclidean algorithm.
    pub fn gcd(&self, other: &Self) -> Self {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b).expect("field division");
            a = b;
            b = r;
        }
        match a.leading().cloned() {
            None => a,
            Some(lead) => a.scale(&lead.recip()),
        }
    }
}

impl<C: Coeff> Default for UniPoly<C> {
    fn default() -> Self {
        Self::zero()
    }
}

impl<C: Coeff> fmt::Display for UniPoly<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms = self
            .coeffs
            .iter()
            .enumerate()
            .map(|(i, c)| (c.clone(), vec![("z", i as i64)]));
        write_terms(f, terms)
    }
}

impl<C: Coeff> fmt::Debug for UniPoly<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "UniPoly({self})")
    }
}

fn zip_with<C: Coeff>(a: &UniPoly<C>, b: &UniPoly<C>, negate: bool) -> UniPoly<C> {
    let n = a.coeffs.len().max(b.coeffs.len());
    let mut out = a.coeffs.clone();
    out.resize(n, C::zero());
    for (slot, c) in out.iter_mut().zip(&b.coeffs) {
        if negate {
            *slot -= c;
        } else {
            *slot += c;
        }
    }
    UniPoly::from_coeffs(out)
}

impl<C: Coeff> Add for &UniPoly<C> {
    type Output = UniPoly<C>;
    fn add(self, rhs: &UniPoly<C>) -> UniPoly<C> {
        zip_with(self, rhs, false)
    }
}

impl<C: Coeff> Sub for &UniPoly<C> {
    type Output = UniPoly<C>;
    fn sub(self, rhs: &UniPoly<C>) -> UniPoly<C> {
        zip_with(self, rhs, true)
    }
}

impl<C: Coeff> Neg for &UniPoly<C> {
    type Output = UniPoly<C>;
    fn neg(self) -> UniPoly<C> {
        UniPoly::from_coeffs(self.coeffs.iter().map(|c| -c.clone()).collect())
    }
}

impl<C: Coeff> Mul for &UniPoly<C> {
    type Output = UniPoly<C>;
    fn mul(self, rhs: &UniPoly<C>) -> UniPoly<C> {
        if self.is_zero() || rhs.is_zero() {
            return UniPoly::zero();
        }
        let mut out = vec![C::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j].add_mul(a, b);
            }
        }
        UniPoly::from_coeffs(out)
    }
}

/// The cyclotomic polynomial `Phi_n`, computed by dividing `z^n - 1` by the
/// lower-order cyclotomic factors.
pub fn cyclotomic<C: Coeff>(n: usize) -> UniPoly<C> {
    assert!(n >= 1);
    let mut p = -&UniPoly::<C>::one_minus_power(n);
    for d in (1..n).filter(|d| n.is_multiple_of(*d)) {
        p = p.div_exact(&cyclotomic(d)).expect("cyclotomic factorisation");
    }
    p
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    type P = UniPoly<BigInt>;

    #[test]
    fn cyclotomic_products() {
        assert_eq!(cyclotomic::<BigInt>(1), P::from_ints(&[-1, 1]));
        assert_eq!(cyclotomic::<BigInt>(6), P::from_ints(&[1, -1, 1]));
        let mut prod = P::one();
        for d in [1, 2, 3, 4, 6, 12] {
            prod = &prod * &cyclotomic(d);
        }
        assert_eq!(prod, -&P::one_minus_power(12));
    }

    #[test]
    fn palindromes_ignore_leading_zeros() {
        assert!(P::from_ints(&[0, 1]).is_palindromic());
        assert!(P::from_ints(&[1, 0, 1, 1, 0, 1]).is_palindromic());
        assert!(!P::from_ints(&[1, 2]).is_palindromic());
    }

    #[test]
    fn rational_gcd() {
        let r = |c: &[i64]| P::from_ints(c).map_coeffs(|x| BigRational::from_integer(x.clone()));
        let g = r(&[1, 1]).gcd(&r(&[-1, 0, 1]));
        assert_eq!(g, r(&[1, 1]));
        assert_eq!(r(&[1, 1]).gcd(&r(&[1, 2])), r(&[1]));
    }

    #[test]
    fn division_with_remainder() {
        let (q, r) = P::from_ints(&[1, 0, 0, 1]).div_rem(&P::from_ints(&[1, 1])).unwrap();
        assert_eq!(q, P::from_ints(&[1, -1, 1]));
        assert!(r.is_zero());
        assert!(P::from_ints(&[1, 1]).div_rem(&P::from_ints(&[1, 2])).is_none());
    }
}
