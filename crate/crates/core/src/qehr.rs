//! Closed forms for quantum Ehrhart series of coarse chambers.
//!
//! For `mu |- w`,
//!
//! ```text
//! QEhr_mu(z, q) = sum_h s_mu[s_h](1/q, q) z^h
//!               = sum_{T in SYT(mu)} q^(-2 maj T) (z q^w)^(des T) / prod_{i=0}^{w} (1 - q^(w-2i) z).
//! ```

use num_bigint::BigInt;

use crate::algebra::DenFactor;
use crate::combinat::{syt_enumerate_bounded, Partition, Permutation};
use crate::error::{Error, Result};
use crate::{FactoredRational, QLaurent, ZQPoly};

/// Largest `|mu|` accepted by [`qehr_mu`].
pub const MAX_QEHR_SIZE: u32 = 10;

/// Largest `w` accepted by [`carlitz_check`].
pub const MAX_CARLITZ_W: u32 = 6;

/// The factors `(1 - q^(w-2i) z)` for `i = 0..=w`.
pub fn heine_factors(w: u32) -> Vec<DenFactor> {
    (0..=w as i64)
        .map(|i| DenFactor::new(w as i64 - 2 * i, 1, 1))
        .collect()
}

/// `sum q^(w des - 2 maj) z^des` over the given `(des, maj)` pairs.
fn descent_numerator(w: u32, stats: impl IntoIterator<Item = (u32, u32)>) -> ZQPoly {
    ZQPoly::from_terms(stats.into_iter().map(|(des, maj)| {
        (des, (w * des) as i64 - 2 * maj as i64, BigInt::from(1))
    }))
}

/// The quantum Ehrhart series of the coarse chambers of shape `mu`.
pub fn qehr_mu(mu: &Partition) -> Result<FactoredRational> {
    let syt = syt_enumerate_bounded(mu, MAX_QEHR_SIZE)?;
    let w = mu.size();
    let num = descent_numerator(w, syt.iter().map(|s| (s.des, s.maj)));
    Ok(FactoredRational::new(num, heine_factors(w)))
}

/// Whether `QEhr_mu(1/z, 1/q) = (-1)^(w+1) z^2 QEhr_mu'(z, q)`.
pub fn check_reciprocity(mu: &Partition) -> Result<bool> {
    let inv = qehr_mu(mu)?.invert_variables();
    let conj = qehr_mu(&mu.conjugate())?;
    let sign = if mu.size().is_multiple_of(2) { -1 } else { 1 };
    Ok(inv.equals_scaled(sign, 0, 2, &conj))
}

/// Heine's product `prod_{i=0}^{w} 1 / (1 - q^(w-2i) z)`.
pub fn heine(w: u32) -> FactoredRational {
    FactoredRational::reciprocal_of(heine_factors(w))
}

/// The same formula summed over all of `S_w`: the quantum Ehrhart series of
/// the whole cube.
pub fn carlitz_series(w: u32) -> Result<FactoredRational> {
    if w > MAX_CARLITZ_W {
        return Err(Error::resource("Carlitz permutation size", MAX_CARLITZ_W as u64));
    }
    let num = descent_numerator(w, Permutation::all(w).iter().map(|p| (p.des(), p.maj())));
    Ok(FactoredRational::new(num, heine_factors(w)))
}

/// Whether the `z^h` coefficient of [`carlitz_series`] is `[h+1]_q^w` for
/// every `h <= hmax`. Mismatches are logged.
pub fn carlitz_check(w: u32, hmax: u32) -> Result<bool> {
    let series = carlitz_series(w)?.series(hmax);
    let mut ok = true;
    for h in 0..=hmax {
        let base = QLaurent::q_integer(h + 1);
        let expect = (0..w).fold(QLaurent::one(), |acc, _| &acc * &base);
        if series.coeff(h) != &expect {
            log::warn!(
                "Carlitz mismatch at w={w}, h={h}: got {}, expected {expect}",
                series.coeff(h)
            );
            ok = false;
        }
    }
    Ok(ok)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn parse(s: &str) -> FactoredRational {
        s.parse().unwrap()
    }

    #[test]
    fn small_shapes() {
        let two = qehr_mu(&Partition::row(2)).unwrap();
        assert!(two.equals(&parse("1 / ((1-q^2*z)*(1-z)*(1-q^-2*z))")));
        let col = qehr_mu(&Partition::of(&[1, 1])).unwrap();
        assert!(col.equals(&parse("z / ((1-q^2*z)*(1-z)*(1-q^-2*z))")));
        let hook = qehr_mu(&Partition::of(&[2, 1])).unwrap();
        assert!(hook.equals(&parse(
            "z*(q + q^-1) / ((1-q^3*z)*(1-q*z)*(1-q^-1*z)*(1-q^-3*z))"
        )));
    }

    #[test]
    fn heine_products() {
        assert!(heine(1).equals(&parse("1/((1-q*z)*(1-q^-1*z))")));
        assert_eq!(heine(2).series(1).coeff(1), &QLaurent::q_integer(3));
        let c = heine(3).series(2).coeff(2).clone();
        assert_eq!(c, crate::combinat::q_binomial_centered(5, 3));
        assert_eq!(c, &QLaurent::q_integer(7) + &QLaurent::q_integer(3));
    }

    #[test]
    fn carlitz_small_cases() {
        assert!(carlitz_check(1, 6).unwrap());
        assert!(carlitz_check(2, 4).unwrap());
        let c = carlitz_series(2).unwrap().series(1).coeff(1).clone();
        assert_eq!(c, &QLaurent::q_integer(2) * &QLaurent::q_integer(2));
        assert!(carlitz_check(3, 5).unwrap());
    }

    fn ssyt_oracle(mu: &Partition, h: u32) -> QLaurent {
        let wh = (mu.size() * h) as i64;
        let mut acc = QLaurent::zero();
        crate::combinat::for_each_ssyt(mu, h + 1, |t| {
            let s: i64 = t.reading_word().map(|x| x as i64).sum();
            acc += &QLaurent::monomial(BigInt::from(1), 2 * s - wh);
        })
        .unwrap();
        acc
    }

    #[test]
    fn agrees_with_tableau_and_lattice_oracles() {
        for w in 1..=5 {
            for mu in crate::combinat::partitions_of(w).unwrap() {
                let hmax = if w <= 3 { 4 } else { 2 };
                let series = qehr_mu(&mu).unwrap().series(hmax);
                for h in 0..=hmax {
                    let c = series.coeff(h);
                    assert!(c.is_symmetric(), "{mu} h={h}");
                    assert_eq!(c, &ssyt_oracle(&mu, h), "{mu} h={h}");
                }
                if w <= 4 {
                    for syt in crate::combinat::syt_enumerate(&mu).unwrap() {
                        for h in 0..=2 {
                            let direct =
                                crate::geometry::quantum_ehrhart_direct(&syt.tableau, h).unwrap();
                            assert_eq!(series.coeff(h), &direct, "{mu} h={h}");
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn reciprocity_under_inversion() {
        for w in 1..=6 {
            for mu in crate::combinat::partitions_of(w).unwrap() {
                assert!(check_reciprocity(&mu).unwrap(), "{mu}");
            }
        }
    }
}
