//! Laurent polynomials in a single variable `q`.

use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};


use super::coeff::Coeff;
use super::display::write_terms;

/// A Laurent polynomial `sum_e c_e q^e` with exact coefficients.
///
/// Stored densely from the lowest to the highest nonzero exponent, so the
/// representation is canonical: both ends are nonzero and the zero
/// polynomial has no coefficients at all.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Laurent<C> {
    low: i64,
    coeffs: Vec<C>,
}

impl<C: Coeff> Laurent<C> {
    pub fn zero() -> Self {
        Laurent {
            low: 0,
            coeffs: Vec::new(),
        }
    }

    pub fn one() -> Self {
        Self::monomial(C::one(), 0)
    }

    pub fn monomial(c: C, exp: i64) -> Self {
        Self::from_dense(exp, vec![c])
    }

    pub fn q_power(exp: i64) -> Self {
        Self::monomial(C::one(), exp)
    }

    /// Builds `sum_i coeffs[i] q^(low + i)`, trimming zeros.
    pub fn from_dense(low: i64, coeffs: Vec<C>) -> Self {
        let mut p = Laurent { low, coeffs };
        p.normalize();
        p
    }

    /// Builds a polynomial from `(exponent, coefficient)` pairs; repeated
    /// exponents are summed.
    pub fn from_terms<I: IntoIterator<Item = (i64, C)>>(terms: I) -> Self {
        let terms: Vec<(i64, C)> = terms.into_iter().collect();
        let Some(lo) = terms.iter().map(|t| t.0).min() else {
            return Self::zero();
        };
        let hi = terms.iter().map(|t| t.0).max().unwrap();
        let mut coeffs = vec![C::zero(); (hi - lo + 1) as usize];
        for (e, c) in terms {
            coeffs[(e - lo) as usize] += &c;
        }
        Self::from_dense(lo, coeffs)
    }

    /// The q-integer `[n]_q = q^(n-1) + q^(n-3) + ... + q^(1-n)`; `[0]_q = 0`.
    pub fn q_integer(n: u32) -> Self {
        if n == 0 {
            return Self::zero();
        }
        let len = 2 * n as usize - 1;
        let coeffs = (0..len)
            .map(|i| if i % 2 == 0 { C::one() } else { C::zero() })
            .collect();
        Self::from_dense(1 - n as i64, coeffs)
    }

    fn normalize(&mut self) {
        let lead = self.coeffs.iter().position(|c| !c.is_zero());
        match lead {
            None => {
                self.coeffs.clear();
                self.low = 0;
            }
            Some(first) => {
                let last = self.coeffs.iter().rposition(|c| !c.is_zero()).unwrap();
                self.coeffs.truncate(last + 1);
                if first > 0 {
                    self.coeffs.drain(..first);
                    self.low += first as i64;
                }
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.low == 0 && self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    /// Number of stored slots (nonzero span), not the number of terms.
    pub fn span(&self) -> usize {
        self.coeffs.len()
    }

    pub fn low_degree(&self) -> Option<i64> {
        (!self.is_zero()).then_some(self.low)
    }

    pub fn high_degree(&self) -> Option<i64> {
        (!self.is_zero()).then(|| self.low + self.coeffs.len() as i64 - 1)
    }

    pub fn coeff(&self, exp: i64) -> C {
        self.coeff_ref(exp).cloned().unwrap_or_else(C::zero)
    }

    pub fn coeff_ref(&self, exp: i64) -> Option<&C> {
        let idx = exp - self.low;
        if idx < 0 {
            return None;
        }
        self.coeffs.get(idx as usize).filter(|c| !c.is_zero())
    }

    /// Nonzero terms in increasing exponent order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (i64, &C)> + '_ {
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(move |(i, c)| (self.low + i as i64, c))
    }

    pub fn term_count(&self) -> usize {
        self.coeffs.iter().filter(|c| !c.is_zero()).count()
    }

    /// Multiplication by `q^k`.
    pub fn shift(&self, k: i64) -> Self {
        let mut p = self.clone();
        p.shift_in_place(k);
        p
    }

    pub fn shift_in_place(&mut self, k: i64) {
        if !self.is_zero() {
            self.low += k;
        }
    }

    pub fn scale(&self, c: &C) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self::from_dense(self.low, self.coeffs.iter().map(|x| x.mul_ref(c)).collect())
    }

    /// `self += q^k * other`
    pub fn add_shifted(&mut self, other: &Self, k: i64) {
        self.accumulate_shifted(other, k, false);
    }

    /// `self -= q^k * other`
    pub fn sub_shifted(&mut self, other: &Self, k: i64) {
        self.accumulate_shifted(other, k, true);
    }

    fn accumulate_shifted(&mut self, other: &Self, k: i64, negate: bool) {
        if other.is_zero() {
            return;
        }
        let olow = other.low + k;
        if self.is_zero() {
            self.low = olow;
            self.coeffs = if negate {
                other.coeffs.iter().map(|c| -c.clone()).collect()
            } else {
                other.coeffs.clone()
            };
            return;
        }
        let ohigh = olow + other.coeffs.len() as i64 - 1;
        let high = self.low + self.coeffs.len() as i64 - 1;
        if olow < self.low {
            let pad = (self.low - olow) as usize;
            let mut grown = Vec::with_capacity(pad + self.coeffs.len());
            grown.resize(pad, C::zero());
            grown.append(&mut self.coeffs);
            self.coeffs = grown;
            self.low = olow;
        }
        if ohigh > high {
            let new_len = (ohigh - self.low + 1) as usize;
            self.coeffs.resize(new_len, C::zero());
        }
        let offset = (olow - self.low) as usize;
        for (slot, c) in self.coeffs[offset..].iter_mut().zip(&other.coeffs) {
            if negate {
                *slot -= c;
            } else {
                *slot += c;
            }
        }
        self.normalize();
    }

    /// The substitution `q -> 1/q`.
    pub fn invert_q(&self) -> Self {
        match self.high_degree() {
            None => Self::zero(),
            Some(high) => {
                let mut coeffs = self.coeffs.clone();
                coeffs.reverse();
                Laurent { low: -high, coeffs }
            }
        }
    }

    /// Invariance under `q -> 1/q`.
    pub fn is_symmetric(&self) -> bool {
        self.is_zero() || (self.low + self.high_degree().unwrap() == 0 && {
            let n = self.coeffs.len();
            (0..n / 2).all(|i| self.coeffs[i] == self.coeffs[n - 1 - i])
        })
    }

    /// Value at `q = 1`.
    pub fn eval_one(&self) -> C {
        let mut acc = C::zero();
        for c in &self.coeffs {
            acc += c;
        }
        acc
    }

    /// Drops every term with a negative exponent.
    pub fn positive_part(&self) -> Self {
        if self.low >= 0 {
            return self.clone();
        }
        let cut = (-self.low) as usize;
        if cut >= self.coeffs.len() {
            return Self::zero();
        }
        Self::from_dense(0, self.coeffs[cut..].to_vec())
    }

    /// Exact division; `None` when `divisor` does not divide `self`.
    pub fn div_exact(&self, divisor: &Self) -> Option<Self> {
        if divisor.is_zero() {
            return None;
        }
        if self.is_zero() {
            return Some(Self::zero());
        }
        let dlen = divisor.coeffs.len();
        if self.coeffs.len() < dlen {
            return None;
        }
        let lead = divisor.coeffs.last().unwrap();
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
                let t = c.mul_ref(d);
                rem[i + j] -= &t;
            }
            quot[i] = c;
        }
        if rem.iter().any(|c| !c.is_zero()) {
            return None;
        }
        Some(Self::from_dense(self.low - divisor.low, quot))
    }

    pub fn map_coeffs<D: Coeff>(&self, f: impl Fn(&C) -> D) -> Laurent<D> {
        Laurent::from_dense(self.low, self.coeffs.iter().map(f).collect())
    }
}

impl<C: Coeff> Default for Laurent<C> {
    fn default() -> Self {
        Self::zero()
    }
}

impl<C: Coeff> fmt::Display for Laurent<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms = self.terms().rev().map(|(e, c)| (c.clone(), vec![("q", e)]));
        write_terms(f, terms)
    }
}

impl<C: Coeff> fmt::Debug for Laurent<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Laurent({self})")
    }
}

impl<C: Coeff> Neg for &Laurent<C> {
    type Output = Laurent<C>;
    fn neg(self) -> Laurent<C> {
        Laurent {
            low: self.low,
            coeffs: self.coeffs.iter().map(|c| -c.clone()).collect(),
        }
    }
}

impl<C: Coeff> Neg for Laurent<C> {
    type Output = Laurent<C>;
    fn neg(self) -> Laurent<C> {
        -&self
    }
}

impl<C: Coeff> AddAssign<&Laurent<C>> for Laurent<C> {
    fn add_assign(&mut self, rhs: &Laurent<C>) {
        self.add_shifted(rhs, 0);
    }
}

impl<C: Coeff> SubAssign<&Laurent<C>> for Laurent<C> {
    fn sub_assign(&mut self, rhs: &Laurent<C>) {
        self.sub_shifted(rhs, 0);
    }
}

impl<C: Coeff> Add for &Laurent<C> {
    type Output = Laurent<C>;
    fn add(self, rhs: &Laurent<C>) -> Laurent<C> {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl<C: Coeff> Add for Laurent<C> {
    type Output = Laurent<C>;
    fn add(mut self, rhs: Laurent<C>) -> Laurent<C> {
        self += &rhs;
        self
    }
}

impl<C: Coeff> Sub for &Laurent<C> {
    type Output = Laurent<C>;
    fn sub(self, rhs: &Laurent<C>) -> Laurent<C> {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl<C: Coeff> Sub for Laurent<C> {
    type Output = Laurent<C>;
    fn sub(mut self, rhs: Laurent<C>) -> Laurent<C> {
        self -= &rhs;
        self
    }
}

impl<C: Coeff> Mul for &Laurent<C> {
    type Output = Laurent<C>;
    fn mul(self, rhs: &Laurent<C>) -> Laurent<C> {
        if self.is_zero() || rhs.is_zero() {
            return Laurent::zero();
        }
        let mut coeffs = vec![C::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j].add_mul(a, b);
            }
        }
        Laurent::from_dense(self.low + rhs.low, coeffs)
    }
}

impl<C: Coeff> Mul for Laurent<C> {
    type Output = Laurent<C>;
    fn mul(self, rhs: Laurent<C>) -> Laurent<C> {
        &self * &rhs
    }
}
