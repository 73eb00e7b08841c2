//! The positive-term operator and the computation of
//! `A_mu(z, q) = PT^q (q - 1/q) QEhr_mu(z, q)` as an explicit rational
//! function over a fixed denominator `d_w`.

use num_bigint::BigInt;
use serde::Serialize;

use crate::algebra::DenFactor;
use crate::combinat::Partition;
use crate::error::{Error, Result};
use crate::qehr::qehr_mu;
use crate::{FactoredRational, QLaurent, QSeries, ZQPoly};

/// Largest `|mu|` accepted by [`compute_a`].
pub const MAX_COMPUTE_SIZE: u32 = 8;

/// Number of times the truncation order may be doubled.
pub const MAX_RETRIES: u32 = 4;

/// Largest `|mu|` accepted by [`check_conjecture_denominator`].
pub const MAX_CONJECTURE_SIZE: u32 = 7;

/// Drops every term with a negative power of `q`, coefficient by
/// coefficient.
pub fn pt_series(s: &QSeries) -> QSeries {
    s.map(|c| c.positive_part())
}

/// `q - 1/q`
pub fn q_minus_inverse() -> QLaurent {
    QLaurent::from_terms([(1, BigInt::from(1)), (-1, BigInt::from(-1))])
}

/// The series of `(q - 1/q) QEhr_mu(z, q)` up to `z^order`.
pub fn pt_input_series(mu: &Partition, order: u32) -> Result<QSeries> {
    let factor = q_minus_inverse();
    Ok(qehr_mu(mu)?.series(order).map(|c| c * &factor))
}

/// A denominator that clears `A_mu` for every `mu |- w`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DwDenominator {
    w: u32,
    factors: Vec<DenFactor>,
}

impl DwDenominator {
    pub fn w(&self) -> u32 {
        self.w
    }

    /// Factors in canonical merged order.
    pub fn factors(&self) -> &[DenFactor] {
        &self.factors
    }

    pub fn degree_z(&self) -> u32 {
        self.factors.iter().map(|f| f.b * f.m).sum()
    }

    pub fn to_poly(&self) -> ZQPoly {
        FactoredRational::reciprocal_of(self.factors.iter().copied()).denominator()
    }

    /// `1 / d_w` as a rational function.
    pub fn reciprocal(&self) -> FactoredRational {
        FactoredRational::reciprocal_of(self.factors.iter().copied())
    }
}

/// `(1-z) prod_{i=1}^{w} (1-z^i) prod_{i=1}^{w/2} (1-q^(2i) z)` for even `w`,
/// `prod_{i=1}^{w} (1-z^(2i)) prod_{i=1}^{(w+1)/2} (1-q^(2i-1) z)` for odd `w`.
pub fn d_w(w: u32) -> Result<DwDenominator> {
    if w == 0 {
        return Err(Error::Usage("d_w needs w >= 1".into()));
    }
    let mut factors = Vec::new();
    if w.is_multiple_of(2) {
        factors.push(DenFactor::new(0, 1, 1));
        factors.extend((1..=w).map(|i| DenFactor::new(0, i, 1)));
        factors.extend((1..=w / 2).map(|i| DenFactor::new(2 * i as i64, 1, 1)));
    } else {
        factors.extend((1..=w).map(|i| DenFactor::new(0, 2 * i, 1)));
        factors.extend((1..=w.div_ceil(2)).map(|i| DenFactor::new(2 * i as i64 - 1, 1, 1)));
    }
    let canonical = FactoredRational::reciprocal_of(factors);
    Ok(DwDenominator {
        w,
        factors: canonical.factors().to_vec(),
    })
}

/// The outcome of [`compute_a_report`].
#[derive(Clone, Debug)]
pub struct AComputation {
    pub mu: Partition,
    pub dw: DwDenominator,
    /// Numerator over `d_w`.
    pub p_low: ZQPoly,
    pub result: FactoredRational,
    /// The truncation order that passed the checks.
    pub m_used: u32,
    /// The smallest order whose safe band covers `p_low`:
    /// `deg_z(p_low) + deg_z(d_w)`.
    pub m_minimal: u32,
    pub retries: u32,
}

/// The default truncation order `w^2 + 2 deg_z(d_w)`.
pub fn default_order(w: u32) -> Result<u32> {
    Ok(w * w + 2 * d_w(w)?.degree_z())
}

/// `d_w` times the positive-term series, truncated at `order`.
fn cleared_series(mu: &Partition, dw: &DwDenominator, order: u32) -> Result<QSeries> {
    let mut s = pt_series(&pt_input_series(mu, order)?);
    for f in dw.factors() {
        s.multiply_factor(f.a, f.b, f.m);
    }
    Ok(s)
}

/// Coefficients of `z^0..=z^top`.
fn band(s: &QSeries, top: u32) -> ZQPoly {
    ZQPoly::from_coeffs((0..=top.min(s.order())).map(|h| s.coeff(h).clone()).collect())
}

/// `A_mu(z, q)` as `p_low / d_w`.
pub fn compute_a(mu: &Partition, m: Option<u32>) -> Result<FactoredRational> {
    Ok(compute_a_report(mu, m)?.result)
}

/// Computes `A_mu` by truncation at order `m` and checks the result.
///
/// The positive-term series is multiplied by `d_w` and the coefficients up
/// to `z^(m - deg_z d_w)` are kept. The computation is accepted when a
/// second pass at `m + w + 1` yields nothing new in the added band and the
/// expansion of `p_low / d_w` reproduces the positive-term series through
/// the larger order. Otherwise `m` is doubled.
pub fn compute_a_report(mu: &Partition, m: Option<u32>) -> Result<AComputation> {
    let w = mu.size();
    if w > MAX_COMPUTE_SIZE {
        return Err(Error::resource("partition size for A_mu", MAX_COMPUTE_SIZE as u64));
    }
    if w == 0 {
        return Err(Error::Usage("A_mu needs a nonempty partition".into()));
    }
    let dw = d_w(w)?;
    let deg = dw.degree_z();
    let mut m = match m {
        Some(m) => m.max(deg),
        None => default_order(w)?,
    };
    let mut last: Option<(ZQPoly, ZQPoly)> = None;
    for retries in 0..=MAX_RETRIES {
        let m_safe = m - deg;
        let m_next = m + w + 1;
        let cleared = cleared_series(mu, &dw, m_next)?;
        let p_low = band(&cleared, m_safe);
        let p_next = band(&cleared, m_next - deg);
        let stable = p_low == p_next;
        let reproduces = stable && {
            let target = pt_series(&pt_input_series(mu, m_next)?);
            FactoredRational::new(p_low.clone(), dw.factors().iter().copied()).series(m_next)
                == target
        };
        if stable && reproduces {
            if let Some((qlow, _)) = p_low.q_range().filter(|(lo, _)| *lo < 0) {
                return Err(Error::Inconsistency(format!(
                    "numerator of A_{mu} over d_{w} has the power q^{qlow}"
                )));
            }
            let result = FactoredRational::new(p_low.clone(), dw.factors().iter().copied());
            let m_minimal = p_low.degree_z().unwrap_or(0) + deg;
            log::debug!("A_{mu}: m = {m}, minimal m = {m_minimal}");
            return Ok(AComputation {
                mu: mu.clone(),
                dw,
                p_low,
                result,
                m_used: m,
                m_minimal,
                retries,
            });
        }
        if stable {
            return Err(Error::Inconsistency(format!(
                "A_{mu}: p_low is stable at m = {m} but does not reproduce the series"
            )));
        }
        log::debug!("A_{mu}: order {m} is not stable, doubling");
        last = Some((p_low, p_next));
        m *= 2;
    }
    let (a, b) = last.expect("at least one attempt");
    Err(Error::Instability(format!(
        "A_{mu}: numerator still growing after {MAX_RETRIES} doublings; candidates {a} and {b}"
    )))
}

/// `PT^q` of a single term `z^a q^b / (1 - q^c z)`, in closed form.
pub fn pt_single_pole(a: u32, b: i64, c: i64) -> FactoredRational {
    let pole = || [DenFactor::new(c, 1, 1)];
    let geometric = |last: i64| {
        ZQPoly::from_terms((0..=last).map(|k| (a + k as u32, b + k * c, BigInt::from(1))))
    };
    if c > 0 {
        if b >= 0 {
            return FactoredRational::new(ZQPoly::monomial(BigInt::from(1), b, a), pole());
        }
        // Terms k = 0..=d have a negative q-power.
        let d = (-b - 1) / c;
        let e = (d + 1) * c + b;
        FactoredRational::new(
            ZQPoly::monomial(BigInt::from(1), e, a + d as u32 + 1),
            pole(),
        )
    } else if c == 0 {
        if b >= 0 {
            FactoredRational::new(ZQPoly::monomial(BigInt::from(1), b, a), pole())
        } else {
            FactoredRational::zero()
        }
    } else if b < 0 {
        FactoredRational::zero()
    } else {
        FactoredRational::polynomial(geometric(b / -c))
    }
}

/// The hook-length denominator: `prod_c (1 - z^(h(c)))` or
/// `prod_c (1 - z^(2 h(c)))` by parity, times `(1 - q^(w-2i) z)` for the
/// positive exponents `w - 2i`.
pub fn conjecture_denominator(mu: &Partition) -> Vec<DenFactor> {
    let w = mu.size();
    let scale = if w.is_multiple_of(2) { 1 } else { 2 };
    let mut out: Vec<DenFactor> = mu
        .hook_lengths()
        .into_iter()
        .map(|h| DenFactor::new(0, scale * h, 1))
        .collect();
    let count = if w.is_multiple_of(2) { w / 2 } else { w.div_ceil(2) };
    out.extend((0..count).map(|i| DenFactor::new(w as i64 - 2 * i as i64, 1, 1)));
    out
}

/// Whether `d_mu A_mu / (1 - z)^2` is a polynomial in `z` and `q` with
/// integer coefficients, for the hook-length denominator `d_mu`.
pub fn check_conjecture_denominator(mu: &Partition) -> Result<bool> {
    if mu.size() > MAX_CONJECTURE_SIZE {
        return Err(Error::resource("partition size for the denominator check", MAX_CONJECTURE_SIZE as u64));
    }
    let a = compute_a(mu, None)?;
    let mut p = a.numerator().clone();
    for f in conjecture_denominator(mu) {
        p = p.mul_factor(f.a, f.b, f.m);
    }
    let mut divisors: Vec<(i64, u32)> = vec![(0, 1), (0, 1)];
    for f in a.factors() {
        divisors.extend(std::iter::repeat_n((f.a, f.b), f.m as usize));
    }
    for (qa, zb) in divisors {
        match p.div_factor(qa, zb) {
            Some(next) => p = next,
            None => return Ok(false),
        }
    }
    Ok(p.q_range().is_none_or(|(lo, _)| lo >= 0))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinat::partitions_of;
    use crate::golden;
    use crate::sl2::{decompose_qint, splet, SpletMethod};
    use proptest::prelude::*;

    fn parse(s: &str) -> FactoredRational {
        s.parse().unwrap()
    }

    fn factors_of(s: &str) -> Vec<DenFactor> {
        parse(s).factors().to_vec()
    }

    #[test]
    fn pt_examples() {
        let c = QLaurent::from_terms([(-2, BigInt::from(1)), (0, 1.into()), (3, 1.into())]);
        let s = pt_series(&QSeries::from_coeffs(vec![c]));
        let expect = QLaurent::from_terms([(0, BigInt::from(1)), (3, 1.into())]);
        assert_eq!(s.coeff(0), &expect);
        let s = pt_series(&pt_input_series(&Partition::row(1), 2).unwrap());
        for h in 0..=2 {
            assert_eq!(s.coeff(h), &QLaurent::q_power(h as i64 + 1));
        }
        assert!(pt_series(&QSeries::zero(3)).is_zero());
    }

    #[test]
    fn small_denominators() {
        assert_eq!(d_w(1).unwrap().factors(), factors_of("1/((1-z^2)*(1-q*z))"));
        assert_eq!(d_w(2).unwrap().factors(), factors_of("1/((1-z)^2*(1-z^2)*(1-q^2*z))"));
        assert_eq!(
            d_w(3).unwrap().factors(),
            factors_of("1/((1-z^2)*(1-z^4)*(1-z^6)*(1-q*z)*(1-q^3*z))")
        );
        assert_eq!(d_w(3).unwrap().degree_z(), 14);
        assert!(d_w(0).is_err());
    }

    #[test]
    fn small_shapes_match_published_forms() {
        let a1 = compute_a(&Partition::row(1), None).unwrap();
        assert!(a1.equals(&parse("q/(1-q*z)")));
        let a21 = compute_a(&Partition::of(&[2, 1]), None).unwrap();
        assert!(a21.equals(&parse("q^2*z/((1-z^2)*(1-q*z)*(1-q^3*z))")));
        let r = compute_a_report(&Partition::row(3), None).unwrap();
        let expect = parse("q*(1-z^2)*(1-z^6)*(1-q*z+q^2*z^2) / (1-q*z)").numerator().clone();
        assert_eq!(r.p_low, expect);
        assert!(r.m_minimal <= r.m_used);
    }

    #[test]
    fn all_published_forms_are_reproduced() {
        for mu in golden::shapes().unwrap() {
            if mu.size() > 4 {
                continue;
            }
            let a = compute_a(&mu, None).unwrap();
            assert!(a.equals(&golden::reference(&mu).unwrap()), "{mu}");
        }
    }

    #[test]
    fn size_five_sums() {
        for mu in golden::shapes().unwrap() {
            if mu.size() == 5 {
                let a = compute_a(&mu, None).unwrap();
                assert!(a.equals(&golden::reference(&mu).unwrap()), "{mu}");
            }
        }
    }

    #[test]
    fn larger_shapes_are_consistent() {
        for mu in [Partition::row(6), Partition::of(&[3, 2, 1]), Partition::of(&[4, 3])] {
            let r = compute_a_report(&mu, None).unwrap();
            let s = r.result.series(8);
            for h in 0..=8 {
                let d = decompose_qint(&splet(&mu, h, SpletMethod::Qehr).unwrap()).unwrap();
                assert_eq!(s.coeff(h), &d.top_weights(), "{mu} h={h}");
            }
        }
    }

    #[test]
    fn series_match_the_definition() {
        for w in 1..=4 {
            for mu in partitions_of(w).unwrap() {
                let s = compute_a(&mu, None).unwrap().series(10);
                for h in 0..=10 {
                    let d = decompose_qint(&splet(&mu, h, SpletMethod::Qehr).unwrap()).unwrap();
                    assert_eq!(s.coeff(h), &d.top_weights(), "{mu} h={h}");
                }
            }
        }
    }

    #[test]
    fn telescoping_matches_decomposition() {
        for w in 1..=5 {
            for mu in partitions_of(w).unwrap() {
                for h in 0..=12 {
                    let f = splet(&mu, h, SpletMethod::Qehr).unwrap();
                    let pt = (&f * &q_minus_inverse()).positive_part();
                    assert_eq!(pt, decompose_qint(&f).unwrap().top_weights(), "{mu} h={h}");
                }
            }
        }
    }

    #[test]
    fn small_explicit_orders_are_enlarged() {
        let a = compute_a_report(&Partition::row(3), Some(15)).unwrap();
        assert!(a.m_used > 15);
        assert!(a.result.equals(&golden::reference(&Partition::row(3)).unwrap()));
    }

    #[test]
    fn conjecture_examples() {
        assert_eq!(
            FactoredRational::reciprocal_of(conjecture_denominator(&Partition::row(1))).factors(),
            factors_of("1/((1-z^2)*(1-q*z))")
        );
        assert!(!check_conjecture_denominator(&Partition::row(1)).unwrap());
        assert!(check_conjecture_denominator(&Partition::row(3)).unwrap());
        assert!(check_conjecture_denominator(&Partition::of(&[2, 2])).unwrap());
    }

    #[test]
    fn single_pole_decomposition_of_one_box() {
        // (q - 1/q) / ((1 - q z)(1 - z/q)) = q / (1 - q z) - (1/q) / (1 - z/q)
        let sum = pt_single_pole(0, 1, 1).add(&pt_single_pole(0, -1, -1).neg());
        assert!(sum.equals(&compute_a(&Partition::row(1), None).unwrap()));
    }

    proptest! {
        #[test]
        fn single_pole_closed_form_matches_truncation(a in 0u32..4, b in -12i64..12, c in -5i64..6) {
            let term = FactoredRational::new(
                ZQPoly::monomial(BigInt::from(1), b, a),
                [DenFactor::new(c, 1, 1)],
            );
            let order = 16;
            prop_assert_eq!(pt_single_pole(a, b, c).series(order), pt_series(&term.series(order)));
        }
    }
}
