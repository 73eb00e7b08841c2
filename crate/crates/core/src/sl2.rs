//! SL2-plethysm coefficients `a_{mu[h]}^{[k]}`: the multiplicity of `[k]_q`
//! in `s_mu[s_h](1/q, q)`.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::str::FromStr;
use std::sync::{LazyLock, RwLock};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::combinat::{for_each_ssyt, q_binomial_centered, Partition};
use crate::error::{Error, Result};
use crate::qehr::qehr_mu;
use crate::QLaurent;

/// How to evaluate `s_mu[s_h](1/q, q)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum SpletMethod {
    /// Sum over semistandard tableaux with entries in `0..=h`.
    Ssyt,
    /// Series coefficient of the closed-form quantum Ehrhart series.
    Qehr,
    /// Centered Gaussian binomial; single rows only.
    Gauss,
}

impl FromStr for SpletMethod {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "ssyt" => Ok(SpletMethod::Ssyt),
            "qehr" => Ok(SpletMethod::Qehr),
            "gauss" => Ok(SpletMethod::Gauss),
            _ => Err(Error::Usage(format!("unknown method {s:?}"))),
        }
    }
}

impl fmt::Display for SpletMethod {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            SpletMethod::Ssyt => "ssyt",
            SpletMethod::Qehr => "qehr",
            SpletMethod::Gauss => "gauss",
        })
    }
}

/// `s_mu[s_h](1/q, q)` as a centered Laurent polynomial.
pub fn splet(mu: &Partition, h: u32, method: SpletMethod) -> Result<QLaurent> {
    match method {
        SpletMethod::Ssyt => {
            let w = mu.size() as i64;
            // Exponents are shifted by w*h at the end; count by entry sum.
            let mut counts: Vec<u64> = Vec::new();
            for_each_ssyt(mu, h + 1, |t| {
                let s: u32 = t.reading_word().sum();
                let s = s as usize;
                if counts.len() <= s {
                    counts.resize(s + 1, 0);
                }
                counts[s] += 1;
            })?;
            Ok(QLaurent::from_terms(
                counts
                    .into_iter()
                    .enumerate()
                    .filter(|(_, c)| *c > 0)
                    .map(|(s, c)| (2 * s as i64 - w * h as i64, BigInt::from(c))),
            ))
        }
        SpletMethod::Qehr => Ok(qehr_mu(mu)?.series(h).coeff(h).clone()),
        SpletMethod::Gauss => {
            if mu.len() > 1 {
                return Err(Error::Usage(format!(
                    "the Gaussian method needs a single row, got {mu}"
                )));
            }
            let w = mu.size();
            Ok(q_binomial_centered(w + h, w as i64))
        }
    }
}

/// The expansion `f = sum_k a_k [k]_q` of a symmetric Laurent polynomial.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct QintDecomposition {
    mults: BTreeMap<u32, BigInt>,
}

impl QintDecomposition {
    /// The multiplicity of `[k]_q`; zero for `k = 0`.
    pub fn get(&self, k: u32) -> BigInt {
        self.mults.get(&k).cloned().unwrap_or_default()
    }

    pub fn is_empty(&self) -> bool {
        self.mults.is_empty()
    }

    /// Nonzero multiplicities in increasing `k`.
    pub fn iter(&self) -> impl Iterator<Item = (u32, &BigInt)> + '_ {
        self.mults.iter().map(|(&k, m)| (k, m))
    }

    pub fn to_laurent(&self) -> QLaurent {
        let mut f = QLaurent::zero();
        for (&k, m) in &self.mults {
            f += &QLaurent::q_integer(k).scale(m);
        }
        f
    }

    /// `{"k": "multiplicity"}`, with decimal-string multiplicities.
    pub fn to_json_value(&self) -> serde_json::Value {
        let map = self
            .mults
            .iter()
            .map(|(k, m)| (k.to_string(), serde_json::Value::from(m.to_string())))
            .collect();
        serde_json::Value::Object(map)
    }

    /// `sum_k a_k q^k`, the positive part of `(q - 1/q) f`.
    pub fn top_weights(&self) -> QLaurent {
        QLaurent::from_terms(self.mults.iter().map(|(&k, m)| (k as i64, m.clone())))
    }
}

impl fmt::Display for QintDecomposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.mults.is_empty() {
            return f.write_str("0");
        }
        for (i, (k, m)) in self.mults.iter().rev().enumerate() {
            if i > 0 {
                f.write_str(" + ")?;
            }
            if m.is_one() {
                write!(f, "[{k}]")?;
            } else {
                write!(f, "{m}[{k}]")?;
            }
        }
        Ok(())
    }
}

/// Greedy expansion into q-integers from the top degree down.
pub fn decompose_qint(f: &QLaurent) -> Result<QintDecomposition> {
    if !f.is_symmetric() {
        return Err(Error::Usage(format!("{f} is not symmetric under q -> 1/q")));
    }
    let mut rest = f.clone();
    let mut mults = BTreeMap::new();
    while let Some(top) = rest.high_degree() {
        let m = rest.coeff(top);
        if m.is_negative() {
            return Err(Error::NotACharacter(format!(
                "[{}]_q would get multiplicity {m} in {f}",
                top + 1
            )));
        }
        let k = (top + 1) as u32;
        rest -= &QLaurent::q_integer(k).scale(&m);
        mults.insert(k, m);
    }
    Ok(QintDecomposition { mults })
}

/// The default method for `mu`: Gaussian binomials for rows, the closed
/// form otherwise.
pub fn default_method(mu: &Partition) -> SpletMethod {
    if mu.len() <= 1 {
        SpletMethod::Gauss
    } else {
        SpletMethod::Qehr
    }
}

/// `a_{mu[h]}^{[k]}`, zero for `k = 0`.
pub fn coefficient(mu: &Partition, h: u32, k: u32) -> Result<BigInt> {
    coefficient_with(mu, h, k, default_method(mu))
}

pub fn coefficient_with(mu: &Partition, h: u32, k: u32, method: SpletMethod) -> Result<BigInt> {
    if k == 0 {
        return Ok(BigInt::zero());
    }
    Ok(decompose_qint(&splet(mu, h, method)?)?.get(k))
}

/// Entries kept in each recurrence memo before it is cleared.
pub const MEMO_CAPACITY: usize = 1 << 20;

type Memo = RwLock<HashMap<(u32, u32, i64), BigInt>>;

static MEMO_W: LazyLock<Memo> = LazyLock::new(Default::default);
static MEMO_H: LazyLock<Memo> = LazyLock::new(Default::default);

#[derive(Clone, Copy)]
enum Recursion {
    /// Peel off a letter of `w` first.
    W,
    /// Peel off a letter of `h` first.
    H,
}

fn check_range(w: u32, h: u32, k: i64) -> Result<()> {
    let top = w as i64 * h as i64 + 1;
    if w == 0 || h == 0 || k < 1 || k > top || (top - k) % 2 != 0 {
        return Err(Error::Usage(format!(
            "need w, h >= 1, 1 <= k <= wh+1 and k = wh+1 mod 2; got ({w},{h},{k})"
        )));
    }
    Ok(())
}

fn recur(kind: Recursion, w: u32, h: u32, k: i64) -> BigInt {
    if w == 0 || h == 0 {
        return BigInt::from((k == 1) as u8);
    }
    let top = w as i64 * h as i64 + 1;
    if k <= 0 || k > top || (top - k) % 2 != 0 {
        return BigInt::zero();
    }
    let memo = match kind {
        Recursion::W => &MEMO_W,
        Recursion::H => &MEMO_H,
    };
    if let Some(v) = memo.read().expect("memo lock").get(&(w, h, k)) {
        return v.clone();
    }
    // (a, b) are the sizes being peeled: (w, h) for the first recursion and
    // (h, w) for the mirrored one. `smaller_a` drops a, `smaller_b` drops b.
    let (a, b) = match kind {
        Recursion::W => (w as i64, h as i64),
        Recursion::H => (h as i64, w as i64),
    };
    let smaller_a = |kk: i64| match kind {
        Recursion::W => recur(kind, w - 1, h, kk),
        Recursion::H => recur(kind, w, h - 1, kk),
    };
    let smaller_b = |kk: i64| match kind {
        Recursion::W => recur(kind, w, h - 1, kk),
        Recursion::H => recur(kind, w - 1, h, kk),
    };
    let v = if k > top - 2 * a {
        smaller_a(k - b)
    } else if k > b {
        smaller_a(k - b) + smaller_b(k + a)
    } else {
        smaller_b(k + a) - smaller_a(b - k)
    };
    let mut table = memo.write().expect("memo lock");
    if table.len() >= MEMO_CAPACITY {
        table.clear();
    }
    table.insert((w, h, k), v.clone());
    v
}

/// `a_{w[h]}^{[k]}` by the recursion that lowers `w` in its leading case.
pub fn recurrence_w(w: u32, h: u32, k: i64) -> Result<BigInt> {
    check_range(w, h, k)?;
    Ok(recur(Recursion::W, w, h, k))
}

/// `a_{w[h]}^{[k]}` by the mirrored recursion that lowers `h` in its
/// leading case.
pub fn recurrence_h(w: u32, h: u32, k: i64) -> Result<BigInt> {
    check_range(w, h, k)?;
    Ok(recur(Recursion::H, w, h, k))
}

/// Empties both recurrence memo tables.
pub fn clear_memo() {
    MEMO_W.write().expect("memo lock").clear();
    MEMO_H.write().expect("memo lock").clear();
}

/// Pairs `(mu1, mu2)` with `mu2` even, `2 mu2 <= mu1 <= h`,
/// `mu1 != 2 mu2 + 1` and `3h - 2(mu1 + mu2) + 1 = k`.
pub fn pi3_count(h: u32, k: i64) -> u64 {
    let h = h as i64;
    let mut n = 0;
    for mu2 in (0..=h / 2).step_by(2) {
        for mu1 in 2 * mu2..=h {
            if mu1 != 2 * mu2 + 1 && 3 * h - 2 * (mu1 + mu2) + 1 == k {
                n += 1;
            }
        }
    }
    n
}

/// The two lattice cones spanned by `(4,0,0,0)`, `(2,0,2,0)` and
/// `(1,0,0,3)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Cone {
    /// Slice `p1 = h`, `p2 + p3 + p4 = k - 1`.
    B1,
    /// Slice `p1 = h - 3`, `p2 + p3 + p4 = k - 4`.
    B2,
}

/// Lattice points of the cone slice. A point `a u + b v + c w` is
/// `(4a + 2b + c, 0, 2b, 3c)`, so distinct `(a, b, c)` give distinct points.
pub fn cone_count(which: Cone, h: u32, k: i64) -> u64 {
    let (p1, rest) = match which {
        Cone::B1 => (h as i64, k - 1),
        Cone::B2 => (h as i64 - 3, k - 4),
    };
    if p1 < 0 || rest < 0 {
        return 0;
    }
    let mut n = 0;
    for c in 0..=rest / 3 {
        let twice_b = rest - 3 * c;
        if twice_b % 2 != 0 {
            continue;
        }
        let left = p1 - twice_b - c;
        if left >= 0 && left % 4 == 0 {
            n += 1;
        }
    }
    n
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn row(w: u32) -> Partition {
        Partition::row(w)
    }

    fn big(n: i64) -> BigInt {
        BigInt::from(n)
    }

    fn decomp(pairs: &[(u32, i64)]) -> QintDecomposition {
        QintDecomposition {
            mults: pairs.iter().map(|&(k, m)| (k, big(m))).collect(),
        }
    }

    #[test]
    fn splet_examples() {
        let one = Partition::row(1);
        let expect = QLaurent::q_integer(4);
        for m in [SpletMethod::Ssyt, SpletMethod::Qehr, SpletMethod::Gauss] {
            assert_eq!(splet(&one, 3, m).unwrap(), expect);
        }
        let s = splet(&row(3), 2, SpletMethod::Ssyt).unwrap();
        assert_eq!(s, q_binomial_centered(5, 3));
        assert_eq!(s, &QLaurent::q_integer(7) + &QLaurent::q_integer(3));
        let col = Partition::of(&[1, 1]);
        assert!(splet(&col, 0, SpletMethod::Ssyt).unwrap().is_zero());
        assert!(splet(&col, 0, SpletMethod::Qehr).unwrap().is_zero());
        assert!(matches!(splet(&col, 2, SpletMethod::Gauss), Err(Error::Usage(_))));
    }

    #[test]
    fn decomposition_examples() {
        let f = QLaurent::q_integer(3);
        assert_eq!(decompose_qint(&f).unwrap(), decomp(&[(3, 1)]));
        let d = decompose_qint(&q_binomial_centered(5, 2)).unwrap();
        assert_eq!(d, decomp(&[(7, 1), (3, 1)]));
        assert_eq!(d.to_string(), "[7] + [3]");
        assert!(decompose_qint(&QLaurent::zero()).unwrap().is_empty());
        assert!(matches!(
            decompose_qint(&QLaurent::q_power(1)),
            Err(Error::Usage(_))
        ));
        let bad = &QLaurent::q_integer(1) - &QLaurent::q_integer(3);
        assert!(matches!(decompose_qint(&bad), Err(Error::NotACharacter(_))));
    }

    #[test]
    fn coefficient_examples() {
        assert_eq!(coefficient(&row(3), 2, 7).unwrap(), big(1));
        assert_eq!(coefficient(&row(3), 2, 5).unwrap(), big(0));
        assert_eq!(coefficient(&row(2), 1, 3).unwrap(), big(1));
        assert_eq!(coefficient(&row(2), 1, 0).unwrap(), big(0));
    }

    #[test]
    fn recurrence_examples() {
        assert_eq!(recurrence_w(3, 2, 7).unwrap(), big(1));
        assert_eq!(recurrence_w(3, 3, 4).unwrap(), big(1));
        assert_eq!(recurrence_w(3, 3, 2).unwrap(), big(0));
        assert_eq!(recurrence_h(2, 3, 7).unwrap(), big(1));
        assert_eq!(recurrence_h(3, 3, 4).unwrap(), big(1));
        for h in 1..=10 {
            assert_eq!(recurrence_h(1, h, h as i64 + 1).unwrap(), big(1));
        }
        assert!(matches!(recurrence_w(3, 3, 3), Err(Error::Usage(_))));
        assert!(matches!(recurrence_w(0, 3, 1), Err(Error::Usage(_))));
        assert!(matches!(recurrence_h(2, 2, 7), Err(Error::Usage(_))));
    }

    #[test]
    fn recurrences_match_direct_coefficients() {
        for w in 1..=8u32 {
            for h in 1..=8u32 {
                let d = decompose_qint(&splet(&row(w), h, SpletMethod::Gauss).unwrap()).unwrap();
                let top = (w * h + 1) as i64;
                for k in (1..=top).rev().step_by(2) {
                    let expect = d.get(k as u32);
                    assert_eq!(recurrence_w(w, h, k).unwrap(), expect, "w ({w},{h},{k})");
                    assert_eq!(recurrence_h(w, h, k).unwrap(), expect, "h ({w},{h},{k})");
                }
            }
        }
        clear_memo();
        assert_eq!(recurrence_w(3, 3, 4).unwrap(), big(1));
    }

    #[test]
    fn methods_agree() {
        for w in 1..=5 {
            for mu in crate::combinat::partitions_of(w).unwrap() {
                for h in 0..=6 {
                    let a = splet(&mu, h, SpletMethod::Ssyt).unwrap();
                    let b = splet(&mu, h, SpletMethod::Qehr).unwrap();
                    assert_eq!(a, b, "{mu} h={h}");
                }
            }
        }
        for w in 1..=6 {
            for h in 0..=8 {
                let a = splet(&row(w), h, SpletMethod::Ssyt).unwrap();
                assert_eq!(a, splet(&row(w), h, SpletMethod::Gauss).unwrap());
            }
        }
    }

    #[test]
    fn small_examples_of_the_combinatorial_counts() {
        assert_eq!(pi3_count(2, 7), 1);
        assert_eq!(pi3_count(3, 4), 1);
        assert_eq!(pi3_count(0, 1), 1);
        assert_eq!(cone_count(Cone::B1, 2, 7), 1);
        assert_eq!(cone_count(Cone::B2, 2, 7), 0);
        assert_eq!(cone_count(Cone::B1, 3, 4) + cone_count(Cone::B2, 3, 4), 1);
    }

    #[test]
    fn combinatorial_counts_match_plethysm_of_three() {
        for h in 0..=20u32 {
            let d = decompose_qint(&splet(&row(3), h, SpletMethod::Gauss).unwrap()).unwrap();
            for k in 1..=(3 * h as i64 + 1) {
                let expect = d.get(k as u32);
                assert_eq!(BigInt::from(pi3_count(h, k)), expect, "pi3 ({h},{k})");
                let cones = cone_count(Cone::B1, h, k) + cone_count(Cone::B2, h, k);
                assert_eq!(BigInt::from(cones), expect, "cones ({h},{k})");
            }
        }
    }

    #[test]
    fn row_plethysm_is_symmetric_in_w_and_h() {
        for w in 1..=6u32 {
            for h in 1..=6u32 {
                let a = decompose_qint(&splet(&row(w), h, SpletMethod::Gauss).unwrap()).unwrap();
                let b = decompose_qint(&splet(&row(h), w, SpletMethod::Gauss).unwrap()).unwrap();
                assert_eq!(a, b);
            }
        }
    }

    #[test]
    fn hook_plethysm_factors() {
        for n in 0..=3u32 {
            for m in 0..=3u32 {
                let mut parts = vec![m + 1];
                parts.extend(std::iter::repeat_n(1, n as usize));
                let mu = Partition::of(&parts);
                for d in 0..=5u32 {
                    let lhs = splet(&mu, d, SpletMethod::Ssyt).unwrap();
                    let rhs = &q_binomial_centered(n + m, m as i64)
                        * &q_binomial_centered(m + d + 1, (n + m + 1) as i64);
                    assert_eq!(lhs, rhs, "{mu} d={d}");
                }
            }
        }
    }

    proptest! {
        #[test]
        fn decomposition_round_trips(mults in prop::collection::btree_map(1u32..12, 0i64..5, 0..6)) {
            let d = QintDecomposition {
                mults: mults.into_iter().filter(|(_, m)| *m > 0).map(|(k, m)| (k, big(m))).collect(),
            };
            prop_assert_eq!(decompose_qint(&d.to_laurent()).unwrap(), d);
        }
    }
}
