use num_bigint::BigInt;

use crate::algebra::UniPoly;
use crate::QLaurent;

/// The centered Gaussian binomial `[n choose k]_q`, symmetric under
/// `q -> 1/q`; zero outside `0 <= k <= n`.
///
/// Built as the classical Gaussian polynomial in `t = q^2` and shifted by
/// `q^(-k(n-k))`.
pub fn q_binomial_centered(n: u32, k: i64) -> QLaurent {
    if k < 0 || k > n as i64 {
        return QLaurent::zero();
    }
    let k = (k as u32).min(n - k as u32);
    let mut g = UniPoly::<BigInt>::one();
    for i in 1..=k as usize {
        g = &g * &UniPoly::one_minus_power(n as usize - k as usize + i);
        g = g
            .div_exact(&UniPoly::one_minus_power(i))
            .expect("partial products are Gaussian polynomials");
    }
    let shift = -((k * (n - k)) as i64);
    QLaurent::from_terms(
        g.coeffs()
            .iter()
            .enumerate()
            .map(|(j, c)| (2 * j as i64 + shift, c.clone())),
    )
}

/// `[n]_q! = [1]_q [2]_q ... [n]_q`
pub fn q_factorial(n: u32) -> QLaurent {
    (1..=n).fold(QLaurent::one(), |acc, i| &acc * &QLaurent::q_integer(i))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lp(terms: &[(i64, i64)]) -> QLaurent {
        QLaurent::from_terms(terms.iter().map(|&(e, c)| (e, BigInt::from(c))))
    }

    #[test]
    fn five_choose_two() {
        let expect = lp(&[(6, 1), (4, 1), (2, 2), (0, 2), (-2, 2), (-4, 1), (-6, 1)]);
        assert_eq!(q_binomial_centered(5, 2), expect);
        assert_eq!(q_binomial_centered(7, 0), QLaurent::one());
        assert!(q_binomial_centered(3, 5).is_zero());
        assert!(q_binomial_centered(3, -1).is_zero());
    }

    #[test]
    fn agrees_with_factorial_quotient() {
        for n in 0..=14 {
            for k in 0..=n {
                let b = q_binomial_centered(n, k as i64);
                assert!(b.is_symmetric());
                assert_eq!(b, q_binomial_centered(n, (n - k) as i64));
                let den = &q_factorial(k) * &q_factorial(n - k);
                assert_eq!(q_factorial(n).div_exact(&den), Some(b), "({n},{k})");
            }
        }
    }

    #[test]
    fn pascal_rule() {
        // [n,k] = q^k [n-1,k] + q^(k-n) [n-1,k-1] in centered form.
        for n in 1..=12u32 {
            for k in 1..n as i64 {
                let mut rhs = q_binomial_centered(n - 1, k).shift(k);
                rhs += &q_binomial_centered(n - 1, k - 1).shift(k - n as i64);
                assert_eq!(q_binomial_centered(n, k), rhs);
            }
        }
    }
}
