//! Power series in `z` truncated at a fixed order.

use super::bivariate::BivariatePoly;
use super::coeff::Coeff;
use super::laurent::Laurent;

/// Coefficients of `z^0 .. z^order`; always exactly `order + 1` of them.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Series<C: Coeff> {
    coeffs: Vec<Laurent<C>>,
}

impl<C: Coeff> Series<C> {
    pub fn zero(order: u32) -> Self {
        Series {
            coeffs: vec![Laurent::zero(); order as usize + 1],
        }
    }

    /// Truncates (or pads) a polynomial to the given order.
    pub fn from_poly(p: &BivariatePoly<C>, order: u32) -> Self {
        let mut s = Self::zero(order);
        for (slot, c) in s.coeffs.iter_mut().zip(p.coeffs()) {
            *slot = c.clone();
        }
        s
    }

    pub fn from_coeffs(coeffs: Vec<Laurent<C>>) -> Self {
        assert!(!coeffs.is_empty(), "a series has at least one coefficient");
        Series { coeffs }
    }

    pub fn order(&self) -> u32 {
        self.coeffs.len() as u32 - 1
    }

    pub fn coeff(&self, h: u32) -> &Laurent<C> {
        &self.coeffs[h as usize]
    }

    pub fn coeffs(&self) -> &[Laurent<C>] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Laurent::is_zero)
    }

    pub fn to_poly(&self) -> BivariatePoly<C> {
        BivariatePoly::from_coeffs(self.coeffs.clone())
    }

    pub fn truncate(&self, order: u32) -> Self {
        let mut coeffs = self.coeffs.clone();
        coeffs.resize(order as usize + 1, Laurent::zero());
        Series { coeffs }
    }

    /// Divides in place by `(1 - q^a z^b)^m`, expanding geometrically.
    pub fn divide_factor(&mut self, a: i64, b: u32, m: u32) {
        let b = b as usize;
        for _ in 0..m {
            for h in b..self.coeffs.len() {
                let (lo, hi) = self.coeffs.split_at_mut(h);
                hi[0].add_shifted(&lo[h - b], a);
            }
        }
    }

    /// Multiplies in place by `(1 - q^a z^b)^m`.
    pub fn multiply_factor(&mut self, a: i64, b: u32, m: u32) {
        let b = b as usize;
        for _ in 0..m {
            for h in (b..self.coeffs.len()).rev() {
                let (lo, hi) = self.coeffs.split_at_mut(h);
                hi[0].sub_shifted(&lo[h - b], a);
            }
        }
    }

    /// Maps every coefficient through `f`.
    pub fn map(&self, f: impl Fn(&Laurent<C>) -> Laurent<C>) -> Self {
        Series {
            coeffs: self.coeffs.iter().map(f).collect(),
        }
    }

    /// Truncated Cauchy product at the smaller of the two orders.
    pub fn mul(&self, rhs: &Self) -> Self {
        let order = self.order().min(rhs.order()) as usize;
        let mut out = Self::zero(order as u32);
        for (i, a) in self.coeffs.iter().enumerate().take(order + 1) {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate().take(order + 1 - i) {
                if !b.is_zero() {
                    out.coeffs[i + j] += &(a * b);
                }
            }
        }
        out
    }
}
