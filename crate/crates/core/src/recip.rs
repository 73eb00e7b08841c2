//! Reciprocity for `A_mu`, the `h*` polynomial of `A_mu(z, 1)`, and the
//! Kahle-Michalek series.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Zero;
use serde::Serialize;

use crate::algebra::UniPoly;
use crate::combinat::{q_binomial_centered, Partition};
use crate::error::{Error, Result};
use crate::ptop::{compute_a, d_w};
use crate::sl2::decompose_qint;
use crate::{FactoredRational, IntPoly};

/// Largest `|mu|` accepted by [`hstar_report`].
pub const MAX_HSTAR_SIZE: u32 = 7;

/// Largest `N` accepted by [`km_series`].
pub const MAX_KM: u32 = 50;

/// `(-1)^w`
fn sign_of(w: u32) -> i8 {
    if w.is_multiple_of(2) {
        1
    } else {
        -1
    }
}

/// Whether `A_mu(1/z, 1/q) = (-1)^w z^2 A_mu'(z, q)`.
///
/// The identity needs `|mu| >= 2`; for `mu = (1)` the computed relation is
/// logged and the result is `false`.
pub fn check_reciprocity(mu: &Partition) -> Result<bool> {
    let w = mu.size();
    let a = compute_a(mu, None)?;
    let conj = compute_a(&mu.conjugate(), None)?;
    let ok = a.invert_variables().equals_scaled(sign_of(w), 0, 2, &conj);
    if !ok {
        let inv = a.invert_variables().to_factored();
        log::warn!(
            "reciprocity fails for {mu}: A(1/z,1/q) = {}, (-1)^{w} z^2 A_{} = {}",
            inv.map(|r| r.to_string()).unwrap_or_default(),
            mu.conjugate(),
            conj.scale_monomial(BigInt::from(sign_of(w)), 0, 2)
        );
    }
    Ok(ok)
}

/// The hook `(n+1, 1^m)`.
pub fn hook(n: u32, m: u32) -> Partition {
    Partition::hook(n, m)
}

/// Whether `A_mu(1/z, 1/q) = (-1)^|mu| z^(n-m+2) A_mu(z, q)` for the hook
/// `mu = (n+1, 1^m)`.
pub fn check_hook_reciprocity(n: u32, m: u32) -> Result<bool> {
    let mu = hook(n, m);
    if mu.size() < 2 {
        return Err(Error::Usage("hook reciprocity needs |mu| >= 2".into()));
    }
    let a = compute_a(&mu, None)?;
    let zexp = n as i64 - m as i64 + 2;
    Ok(a.invert_variables().equals_scaled(sign_of(mu.size()), 0, zexp, &a))
}

/// How the `h*` polynomial is tested.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum ShapeClass {
    Hook,
    SelfConjugate,
    Other,
}

impl ShapeClass {
    pub fn of(mu: &Partition) -> Self {
        if mu.is_hook() {
            ShapeClass::Hook
        } else if mu.is_self_conjugate() {
            ShapeClass::SelfConjugate
        } else {
            ShapeClass::Other
        }
    }
}

/// `h*_mu(z) = (1 - z^d)^w A_mu(z, 1)` and the tests applied to it.
#[derive(Clone, Debug, Serialize)]
pub struct HStarReport {
    pub mu: Partition,
    pub class: ShapeClass,
    /// The smallest `d` making `h*` a polynomial.
    pub d: u32,
    /// The lcm of the `z`-exponents of `d_w`.
    pub d_lcm: u32,
    /// Coefficients of `h*`, constant term first.
    #[serde(serialize_with = "crate::algebra::serialize_bigints")]
    pub hstar: Vec<BigInt>,
    /// `h* / (1 + z + ... + z^(d-1))` is a palindromic polynomial; only
    /// tested for hooks and self-conjugate shapes.
    pub quotient_palindromic: Option<bool>,
    /// The two families of partial-sum inequalities with `s = deg h*` and
    /// `S = d w - 1`.
    pub inequalities_pass: bool,
}

impl HStarReport {
    pub fn hstar_poly(&self) -> IntPoly {
        UniPoly::from_coeffs(self.hstar.clone())
    }

    /// The check appropriate for the shape class.
    pub fn passes(&self) -> bool {
        self.quotient_palindromic.unwrap_or(self.inequalities_pass)
    }
}

/// `(1 - z^d)^w * num / den`, if it is a polynomial.
fn cleared(num: &IntPoly, den: &IntPoly, d: u32, w: u32) -> Option<IntPoly> {
    let power = UniPoly::one_minus_power(d as usize).pow(w);
    (&power * num).div_exact(den)
}

fn divisors(n: u32) -> Vec<u32> {
    (1..=n).filter(|d| n.is_multiple_of(*d)).collect()
}

/// Partial-sum inequalities for the coefficients `h_0..h_S` of an `h*`
/// polynomial of degree `s`.
pub fn hstar_inequalities(h: &[BigInt], s: usize, big_s: usize) -> bool {
    if s > big_s {
        return false;
    }
    // prefix[j] = h_0 + ... + h_{j-1}
    let mut prefix = vec![BigInt::zero(); big_s + 2];
    for j in 0..=big_s {
        let hj = h.get(j).cloned().unwrap_or_default();
        prefix[j + 1] = &prefix[j] + hj;
    }
    let range = |lo: usize, hi: usize| &prefix[hi + 1] - &prefix[lo];
    // h_0 + ... + h_{i+1} >= h_S + ... + h_{S-i}
    let first = (0..big_s / 2).all(|i| range(0, i + 1) >= range(big_s - i, big_s));
    // h_s + ... + h_{s-i} >= h_0 + ... + h_i
    let second = (0..=s).all(|i| range(s - i, s) >= range(0, i));
    first && second
}

/// Builds the `h*` report for `mu`.
pub fn hstar_report(mu: &Partition) -> Result<HStarReport> {
    let w = mu.size();
    if w > MAX_HSTAR_SIZE {
        return Err(Error::resource("partition size for h*", MAX_HSTAR_SIZE as u64));
    }
    let a = compute_a(mu, None)?;
    hstar_report_of(mu, &a)
}

/// Builds the `h*` report from a known `A_mu`.
pub fn hstar_report_of(mu: &Partition, a: &FactoredRational) -> Result<HStarReport> {
    let w = mu.size();
    let reduced = a.specialize_q1();
    let d_lcm = d_w(w)?
        .factors()
        .iter()
        .fold(1u32, |acc, f| acc.lcm(&f.b));
    let found = divisors(d_lcm)
        .into_iter()
        .find_map(|d| cleared(&reduced.num, &reduced.den, d, w).map(|h| (d, h)));
    let Some((d, hstar)) = found else {
        return Err(Error::Verification(format!(
            "no d dividing {d_lcm} clears A_{mu}(z,1) = {reduced}"
        )));
    };
    let class = ShapeClass::of(mu);
    let quotient_palindromic = match class {
        ShapeClass::Other => None,
        _ => Some(
            hstar
                .div_exact(&repunit(d))
                .is_some_and(|quot| quot.is_palindromic()),
        ),
    };
    let s = hstar.degree().unwrap_or(0);
    let big_s = (d * w) as usize - 1;
    let inequalities_pass = hstar_inequalities(hstar.coeffs(), s, big_s);
    Ok(HStarReport {
        mu: mu.clone(),
        class,
        d,
        d_lcm,
        hstar: hstar.coeffs().to_vec(),
        quotient_palindromic,
        inequalities_pass,
    })
}

/// `1 + z + ... + z^(d-1)`
pub fn repunit(d: u32) -> IntPoly {
    UniPoly::from_coeffs(vec![BigInt::from(1); d as usize])
}

/// `(1 + t^2 + 2t^4 + t^6 + t^8) / ((1 - t^3)(1 - t^6))` up to `t^n`.
pub fn km_closed_form(n: u32) -> Vec<BigInt> {
    let mut s: Vec<BigInt> = (0..=n as usize)
        .map(|i| BigInt::from(match i {
            0 | 2 | 6 | 8 => 1,
            4 => 2,
            _ => 0,
        }))
        .collect();
    for b in [3usize, 6] {
        for i in b..s.len() {
            let prev = s[i - b].clone();
            s[i] += prev;
        }
    }
    s
}

/// `[a_{3[4n]}^{[2n+1]}]` for `n = 0..=N`, checked against the closed form.
pub fn km_series(big_n: u32) -> Result<Vec<BigInt>> {
    if big_n > MAX_KM {
        return Err(Error::resource("Kahle-Michalek series length", MAX_KM as u64));
    }
    let direct = (0..=big_n)
        .map(|n| {
            let f = q_binomial_centered(3 + 4 * n, 3);
            Ok(decompose_qint(&f)?.get(2 * n + 1))
        })
        .collect::<Result<Vec<_>>>()?;
    let closed = km_closed_form(big_n);
    if let Some(i) = (0..direct.len()).find(|&i| direct[i] != closed[i]) {
        return Err(Error::Verification(format!(
            "series differ first at n = {i}: plethysm gives {}, closed form gives {}",
            direct[i], closed[i]
        )));
    }
    Ok(direct)
}

/// Whether every entry of `v` is zero.
pub fn all_zero(v: &[BigInt]) -> bool {
    v.iter().all(Zero::is_zero)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinat::partitions_of;

    fn ints(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn reciprocity_examples() {
        assert!(check_reciprocity(&Partition::row(2)).unwrap());
        assert!(check_reciprocity(&Partition::row(3)).unwrap());
        assert!(check_reciprocity(&Partition::of(&[2, 1])).unwrap());
        assert!(!check_reciprocity(&Partition::row(1)).unwrap());
        // The computed relation for one box is A(1/z,1/q) = -z A(z,q).
        let a1 = compute_a(&Partition::row(1), None).unwrap();
        assert!(a1.invert_variables().equals_scaled(-1, -1, 1, &a1));
    }

    #[test]
    fn reciprocity_up_to_five() {
        for w in 2..=5 {
            for mu in partitions_of(w).unwrap() {
                assert!(check_reciprocity(&mu).unwrap(), "{mu}");
            }
        }
    }

    #[test]
    fn hook_reciprocity_examples() {
        assert!(check_hook_reciprocity(1, 0).unwrap());
        assert!(check_hook_reciprocity(1, 1).unwrap());
        assert!(check_hook_reciprocity(2, 0).unwrap());
        assert!(check_hook_reciprocity(0, 0).is_err());
    }

    #[test]
    fn hook_reciprocity_is_reciprocity_plus_conjugate_shift() {
        for size in 2..=5u32 {
            for m in 0..size {
                let n = size - 1 - m;
                let mu = hook(n, m);
                let a = compute_a(&mu, None).unwrap();
                let conj = compute_a(&mu.conjugate(), None).unwrap();
                // A_mu' = z^(n-m) A_mu, from the factorization of hook plethysms.
                let shift = n as i64 - m as i64;
                let shifted = if shift >= 0 {
                    conj.equals(&a.scale_monomial(BigInt::from(1), 0, shift as u32))
                } else {
                    a.equals(&conj.scale_monomial(BigInt::from(1), 0, (-shift) as u32))
                };
                assert!(shifted, "{mu}");
                assert_eq!(check_hook_reciprocity(n, m).unwrap(), check_reciprocity(&mu).unwrap());
            }
        }
    }

    #[test]
    fn hstar_of_three() {
        let r = hstar_report(&Partition::row(3)).unwrap();
        assert_eq!(r.d, 4);
        assert_eq!(r.d_lcm, 12);
        assert_eq!(r.hstar, ints(&[1, 1, 2, 3, 2, 3, 2, 1, 1]));
        let quot = r.hstar_poly().div_exact(&repunit(4)).unwrap();
        assert_eq!(quot.coeffs(), ints(&[1, 0, 1, 1, 0, 1]).as_slice());
        assert_eq!(r.quotient_palindromic, Some(true));
        assert!(r.passes());
    }

    #[test]
    fn hstar_small_cases() {
        let r = hstar_report(&Partition::row(1)).unwrap();
        assert_eq!((r.d, r.hstar.clone()), (1, ints(&[1])));
        assert_eq!(r.quotient_palindromic, Some(true));
        let r = hstar_report(&Partition::of(&[2, 2])).unwrap();
        assert_eq!(r.class, ShapeClass::SelfConjugate);
        assert!(r.passes());
        for w in 1..=5 {
            for mu in partitions_of(w).unwrap() {
                assert!(hstar_report(&mu).unwrap().passes(), "{mu}");
            }
        }
    }

    #[test]
    fn inequality_helper() {
        // h* of the unit square: 1 + z, s = 1, S = 1.
        assert!(hstar_inequalities(&ints(&[1, 1]), 1, 1));
        assert!(!hstar_inequalities(&ints(&[1, 0, 3]), 2, 2));
        assert!(!hstar_inequalities(&ints(&[1, 1]), 3, 2));
    }

    #[test]
    fn kahle_michalek() {
        let s = km_series(20).unwrap();
        assert_eq!(s[0], BigInt::from(1));
        assert_eq!(s[1], BigInt::from(0));
        assert_eq!(s[2], BigInt::from(1));
        assert_eq!(km_closed_form(8), ints(&[1, 0, 1, 1, 2, 1, 3, 2, 3]));
        assert!(km_series(51).is_err());
    }
}
