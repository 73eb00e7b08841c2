//! Polynomials in `z` whose coefficients are Laurent polynomials in `q`.

use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use super::coeff::Coeff;
use super::display::write_terms;
use super::laurent::Laurent;
use super::univariate::UniPoly;

/// `sum_h c_h(q) z^h`, stored densely by z-degree with no trailing zeros.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BivariatePoly<C> {
    coeffs: Vec<Laurent<C>>,
}

impl<C: Coeff> BivariatePoly<C> {
    pub fn zero() -> Self {
        BivariatePoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(Laurent::one())
    }

    pub fn constant(c: Laurent<C>) -> Self {
        Self::from_coeffs(vec![c])
    }

    /// `c * q^qexp * z^zexp`
    pub fn monomial(c: C, qexp: i64, zexp: u32) -> Self {
        let mut coeffs = vec![Laurent::zero(); zexp as usize + 1];
        coeffs[zexp as usize] = Laurent::monomial(c, qexp);
        Self::from_coeffs(coeffs)
    }

    pub fn from_coeffs(mut coeffs: Vec<Laurent<C>>) -> Self {
        while coeffs.last().is_some_and(Laurent::is_zero) {
            coeffs.pop();
        }
        BivariatePoly { coeffs }
    }

    /// Builds a polynomial from `(zexp, qexp, coefficient)` triples.
    pub fn from_terms<I: IntoIterator<Item = (u32, i64, C)>>(terms: I) -> Self {
        let mut coeffs: Vec<Laurent<C>> = Vec::new();
        for (z, q, c) in terms {
            let z = z as usize;
            if coeffs.len() <= z {
                coeffs.resize(z + 1, Laurent::zero());
            }
            coeffs[z].add_shifted(&Laurent::monomial(c, 0), q);
        }
        Self::from_coeffs(coeffs)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    /// Highest z-degree, `None` for zero.
    pub fn degree_z(&self) -> Option<u32> {
        self.coeffs.len().checked_sub(1).map(|d| d as u32)
    }

    /// Lowest z-degree with a nonzero coefficient.
    pub fn low_degree_z(&self) -> Option<u32> {
        self.coeffs.iter().position(|c| !c.is_zero()).map(|d| d as u32)
    }

    pub fn coeff(&self, h: u32) -> Laurent<C> {
        self.get(h).cloned().unwrap_or_default()
    }

    pub fn get(&self, h: u32) -> Option<&Laurent<C>> {
        self.coeffs.get(h as usize)
    }

    pub fn coeffs(&self) -> &[Laurent<C>] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<Laurent<C>> {
        self.coeffs
    }

    /// Nonzero terms as `(zexp, qexp, coefficient)`, sorted by `(z, q)`.
    pub fn terms(&self) -> impl Iterator<Item = (u32, i64, &C)> + '_ {
        self.coeffs
            .iter()
            .enumerate()
            .flat_map(|(z, c)| c.terms().map(move |(q, v)| (z as u32, q, v)))
    }

    /// Smallest and largest q-exponent over all terms.
    pub fn q_range(&self) -> Option<(i64, i64)> {
        let lows = self.coeffs.iter().filter_map(Laurent::low_degree);
        let highs = self.coeffs.iter().filter_map(Laurent::high_degree);
        Some((lows.min()?, highs.max()?))
    }

    pub fn shift(&self, qexp: i64, zexp: u32) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![Laurent::zero(); zexp as usize];
        coeffs.extend(self.coeffs.iter().map(|c| c.shift(qexp)));
        BivariatePoly { coeffs }
    }

    /// `self += c * q^qexp * z^zexp * other`
    fn accumulate(&mut self, other: &Self, qexp: i64, zexp: u32, negate: bool) {
        if other.is_zero() {
            return;
        }
        let needed = other.coeffs.len() + zexp as usize;
        if self.coeffs.len() < needed {
            self.coeffs.resize(needed, Laurent::zero());
        }
        for (i, c) in other.coeffs.iter().enumerate() {
            let slot = &mut self.coeffs[i + zexp as usize];
            if negate {
                slot.sub_shifted(c, qexp);
            } else {
                slot.add_shifted(c, qexp);
            }
        }
        self.trim();
    }

    fn trim(&mut self) {
        while self.coeffs.last().is_some_and(Laurent::is_zero) {
            self.coeffs.pop();
        }
    }

    /// Multiplies by `(1 - q^a z^b)^m`.
    pub fn mul_factor(&self, a: i64, b: u32, m: u32) -> Self {
        let mut out = self.clone();
        for _ in 0..m {
            let prev = out.clone();
            out.accumulate(&prev, a, b, true);
        }
        out
    }

    /// Exact division by `(1 - q^a z^b)`, `None` if it does not divide.
    pub fn div_factor(&self, a: i64, b: u32) -> Option<Self> {
        // With g = f / (1 - q^a z^b): g_h = f_h + q^a g_{h-b}, and the
        // quotient must vanish above deg f - b.
        let n = self.coeffs.len();
        let b = b as usize;
        if n == 0 {
            return Some(Self::zero());
        }
        if n <= b {
            return None;
        }
        let mut g: Vec<Laurent<C>> = Vec::with_capacity(n);
        for h in 0..n {
            let mut c = self.coeffs[h].clone();
            if h >= b {
                c.add_shifted(&g[h - b], a);
            }
            g.push(c);
        }
        if g[n - b..].iter().any(|c| !c.is_zero()) {
            return None;
        }
        g.truncate(n - b);
        Some(Self::from_coeffs(g))
    }

    /// The substitution `q -> 1/q`.
    pub fn invert_q(&self) -> Self {
        Self::from_coeffs(self.coeffs.iter().map(Laurent::invert_q).collect())
    }

    /// Terms of z-degree at most `m`.
    pub fn truncate(&self, m: u32) -> Self {
        let keep = self.coeffs.len().min(m as usize + 1);
        Self::from_coeffs(self.coeffs[..keep].to_vec())
    }

    /// The univariate polynomial `p(z, 1)`.
    pub fn eval_q_one(&self) -> UniPoly<C> {
        UniPoly::from_coeffs(self.coeffs.iter().map(Laurent::eval_one).collect())
    }

    pub fn map_coeffs<D: Coeff>(&self, f: impl Fn(&C) -> D) -> BivariatePoly<D> {
        BivariatePoly::from_coeffs(self.coeffs.iter().map(|c| c.map_coeffs(&f)).collect())
    }

    /// Number of nonzero terms.
    pub fn term_count(&self) -> usize {
        self.coeffs.iter().map(Laurent::term_count).sum()
    }
}

impl<C: Coeff> Default for BivariatePoly<C> {
    fn default() -> Self {
        Self::zero()
    }
}

impl<C: Coeff> From<Laurent<C>> for BivariatePoly<C> {
    fn from(c: Laurent<C>) -> Self {
        Self::constant(c)
    }
}

impl<C: Coeff> fmt::Display for BivariatePoly<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms = self
            .terms()
            .map(|(z, q, c)| (c.clone(), vec![("q", q), ("z", z as i64)]));
        write_terms(f, terms)
    }
}

impl<C: Coeff> fmt::Debug for BivariatePoly<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BivariatePoly({self})")
    }
}

impl<C: Coeff> Neg for &BivariatePoly<C> {
    type Output = BivariatePoly<C>;
    fn neg(self) -> BivariatePoly<C> {
        BivariatePoly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl<C: Coeff> Neg for BivariatePoly<C> {
    type Output = BivariatePoly<C>;
    fn neg(self) -> BivariatePoly<C> {
        -&self
    }
}

impl<C: Coeff> AddAssign<&BivariatePoly<C>> for BivariatePoly<C> {
    fn add_assign(&mut self, rhs: &BivariatePoly<C>) {
        self.accumulate(rhs, 0, 0, false);
    }
}

impl<C: Coeff> SubAssign<&BivariatePoly<C>> for BivariatePoly<C> {
    fn sub_assign(&mut self, rhs: &BivariatePoly<C>) {
        self.accumulate(rhs, 0, 0, true);
    }
}

impl<C: Coeff> Add for &BivariatePoly<C> {
    type Output = BivariatePoly<C>;
    fn add(self, rhs: &BivariatePoly<C>) -> BivariatePoly<C> {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl<C: Coeff> Sub for &BivariatePoly<C> {
    type Output = BivariatePoly<C>;
    fn sub(self, rhs: &BivariatePoly<C>) -> BivariatePoly<C> {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl<C: Coeff> Mul for &BivariatePoly<C> {
    type Output = BivariatePoly<C>;
    fn mul(self, rhs: &BivariatePoly<C>) -> BivariatePoly<C> {
        if self.is_zero() || rhs.is_zero() {
            return BivariatePoly::zero();
        }
        let mut coeffs = vec![Laurent::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    coeffs[i + j] += &(a * b);
                }
            }
        }
        BivariatePoly::from_coeffs(coeffs)
    }
}

impl<C: Coeff> Mul for BivariatePoly<C> {
    type Output = BivariatePoly<C>;
    fn mul(self, rhs: BivariatePoly<C>) -> BivariatePoly<C> {
        &self * &rhs
    }
}
