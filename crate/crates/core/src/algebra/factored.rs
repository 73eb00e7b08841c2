//! Rational functions whose denominators are products of `(1 - q^a z^b)`.

use std::cmp::{Ordering, Reverse};
use std::collections::BTreeMap;
use std::fmt::{self, Write as _};
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::bivariate::BivariatePoly;
use super::coeff::Coeff;
use super::display::write_monomial;
use super::laurent::Laurent;
use super::series::Series;
use super::univariate::{cyclotomic, UniPoly};
use crate::error::{Error, Result};

/// The factor `(1 - q^a z^b)^m`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct DenFactor {
    pub a: i64,
    pub b: u32,
    pub m: u32,
}

impl DenFactor {
    pub fn new(a: i64, b: u32, m: u32) -> Self {
        assert!(b >= 1 && m >= 1, "invalid denominator factor (a={a}, b={b}, m={m})");
        DenFactor { a, b, m }
    }

    fn checked(a: i64, b: u32, m: u32) -> Result<Self> {
        if b == 0 || m == 0 {
            return Err(Error::Parse(format!(
                "denominator factor needs b >= 1 and m >= 1 (got a={a}, b={b}, m={m})"
            )));
        }
        Ok(DenFactor { a, b, m })
    }

    /// The base `(1 - q^a z^b)` without multiplicity.
    pub fn base(&self) -> (i64, u32) {
        (self.a, self.b)
    }

    fn write_base(&self, f: &mut impl fmt::Write) -> fmt::Result {
        f.write_str("(1-")?;
        write_monomial(f, &1i64, &[("q", self.a), ("z", self.b as i64)])?;
        f.write_char(')')
    }
}

impl Ord for DenFactor {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.b, self.a, self.m).cmp(&(other.b, other.a, other.m))
    }
}

impl PartialOrd for DenFactor {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for DenFactor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.write_base(f)?;
        if self.m > 1 {
            write!(f, "^{}", self.m)?;
        }
        Ok(())
    }
}

/// `numerator / prod (1 - q^a z^b)^m`, with no cancellation performed.
///
/// Factors with the same base are merged and kept sorted by `(b, a)`; a zero
/// value has no factors.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Factored<C> {
    numerator: BivariatePoly<C>,
    factors: Vec<DenFactor>,
}

fn merge_factors(factors: impl IntoIterator<Item = DenFactor>) -> Vec<DenFactor> {
    let mut map: BTreeMap<(u32, i64), u32> = BTreeMap::new();
    for f in factors {
        *map.entry((f.b, f.a)).or_default() += f.m;
    }
    map.into_iter()
        .map(|((b, a), m)| DenFactor { a, b, m })
        .collect()
}

impl<C: Coeff> Factored<C> {
    pub fn new(numerator: BivariatePoly<C>, factors: impl IntoIterator<Item = DenFactor>) -> Self {
        let factors = if numerator.is_zero() {
            Vec::new()
        } else {
            merge_factors(factors)
        };
        Factored { numerator, factors }
    }

    pub fn zero() -> Self {
        Self::new(BivariatePoly::zero(), [])
    }

    pub fn one() -> Self {
        Self::polynomial(BivariatePoly::one())
    }

    pub fn polynomial(p: BivariatePoly<C>) -> Self {
        Self::new(p, [])
    }

    /// `1 / prod factors`
    pub fn reciprocal_of(factors: impl IntoIterator<Item = DenFactor>) -> Self {
        Self::new(BivariatePoly::one(), factors)
    }

    pub fn numerator(&self) -> &BivariatePoly<C> {
        &self.numerator
    }

    pub fn factors(&self) -> &[DenFactor] {
        &self.factors
    }

    pub fn is_zero(&self) -> bool {
        self.numerator.is_zero()
    }

    /// Total z-degree of the denominator.
    pub fn denominator_degree_z(&self) -> u32 {
        self.factors.iter().map(|f| f.b * f.m).sum()
    }

    /// The expanded denominator polynomial.
    pub fn denominator(&self) -> BivariatePoly<C> {
        multiply_out(&BivariatePoly::one(), self.factors.iter().copied())
    }

    /// Multiplies the numerator by `c * q^qexp * z^zexp`.
    pub fn scale_monomial(&self, c: C, qexp: i64, zexp: u32) -> Self {
        let mono = BivariatePoly::monomial(c, qexp, zexp);
        Self::new(&self.numerator * &mono, self.factors.iter().copied())
    }

    pub fn neg(&self) -> Self {
        Factored {
            numerator: -&self.numerator,
            factors: self.factors.clone(),
        }
    }

    /// Product with multiplicities of equal factors added.
    pub fn mul(&self, rhs: &Self) -> Self {
        Self::new(
            &self.numerator * &rhs.numerator,
            self.factors.iter().chain(&rhs.factors).copied(),
        )
    }

    /// Sum over the least common multiple of the two factor multisets.
    pub fn add(&self, rhs: &Self) -> Self {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        let (left_extra, right_extra) = excess(&self.factors, &rhs.factors);
        let num = &multiply_out(&self.numerator, right_extra.iter().copied())
            + &multiply_out(&rhs.numerator, left_extra.iter().copied());
        let lcm = self.factors.iter().chain(&right_extra).copied();
        Self::new(num, lcm)
    }

    /// Equality as rational functions, by cross-multiplication after
    /// dropping the factors the two denominators share.
    pub fn equals(&self, rhs: &Self) -> bool {
        let (left_extra, right_extra) = excess(&self.factors, &rhs.factors);
        multiply_out(&self.numerator, right_extra.iter().copied())
            == multiply_out(&rhs.numerator, left_extra.iter().copied())
    }

    /// Power series coefficients of `z^0 .. z^order`.
    pub fn series(&self, order: u32) -> Series<C> {
        let mut s = Series::from_poly(&self.numerator, order);
        for f in &self.factors {
            s.divide_factor(f.a, f.b, f.m);
        }
        s
    }

    /// The value at `(1/z, 1/q)` in the normal form described by
    /// [`Inverted`].
    pub fn invert_variables(&self) -> Inverted<C> {
        let Some(zmax) = self.numerator.degree_z() else {
            return Inverted {
                sign: 1,
                qshift: 0,
                zshift: 0,
                rational: Self::zero(),
            };
        };
        let (_, qmax) = self.numerator.q_range().expect("nonzero numerator");
        let reversed = BivariatePoly::from_terms(
            self.numerator
                .terms()
                .map(|(z, q, c)| (zmax - z, qmax - q, c.clone())),
        );
        let total_m: u32 = self.factors.iter().map(|f| f.m).sum();
        let sum_a: i64 = self.factors.iter().map(|f| f.a * f.m as i64).sum();
        Inverted {
            sign: if total_m.is_multiple_of(2) { 1 } else { -1 },
            qshift: sum_a - qmax,
            zshift: self.denominator_degree_z() as i64 - zmax as i64,
            rational: Self::new(reversed, self.factors.iter().copied()),
        }
    }

    /// The univariate function `r(z, 1)` in lowest terms.
    pub fn specialize_q1(&self) -> ReducedRational<C> {
        let num = self.numerator.eval_q_one();
        if num.is_zero() {
            return ReducedRational {
                num,
                den: UniPoly::one(),
            };
        }
        // 1 - z^b = -prod_{d | b} Phi_d(z)
        let mut mult: BTreeMap<usize, u32> = BTreeMap::new();
        let mut negate = false;
        for f in &self.factors {
            let b = f.b as usize;
            for d in (1..=b).filter(|d| b.is_multiple_of(*d)) {
                *mult.entry(d).or_default() += f.m;
            }
            negate ^= f.m % 2 == 1;
        }
        let mut num = num;
        let mut den = UniPoly::one();
        for (d, e) in mult {
            let phi = cyclotomic::<C>(d);
            let mut e = e;
            while e > 0 {
                match num.div_exact(&phi) {
                    Some(q) => {
                        num = q;
                        e -= 1;
                    }
                    None => break,
                }
            }
            den = &den * &phi.pow(e);
        }
        if negate {
            den = -&den;
        }
        if den.coeff(0).is_negative() {
            num = -&num;
            den = -&den;
        }
        ReducedRational { num, den }
    }

    pub fn map_coeffs<D: Coeff>(&self, f: impl Fn(&C) -> D) -> Factored<D> {
        Factored::new(self.numerator.map_coeffs(f), self.factors.iter().copied())
    }
}

/// Multiplies `p` by every factor in turn.
pub(crate) fn multiply_out<C: Coeff>(
    p: &BivariatePoly<C>,
    factors: impl IntoIterator<Item = DenFactor>,
) -> BivariatePoly<C> {
    let mut out = p.clone();
    for f in factors {
        out = out.mul_factor(f.a, f.b, f.m);
    }
    out
}

/// Factors of `left` missing from `right`, and vice versa (with multiplicity).
fn excess(left: &[DenFactor], right: &[DenFactor]) -> (Vec<DenFactor>, Vec<DenFactor>) {
    let mut counts: BTreeMap<(u32, i64), (u32, u32)> = BTreeMap::new();
    for f in left {
        counts.entry((f.b, f.a)).or_default().0 += f.m;
    }
    for f in right {
        counts.entry((f.b, f.a)).or_default().1 += f.m;
    }
    let mut l = Vec::new();
    let mut r = Vec::new();
    for ((b, a), (ml, mr)) in counts {
        match ml.cmp(&mr) {
            Ordering::Greater => l.push(DenFactor { a, b, m: ml - mr }),
            Ordering::Less => r.push(DenFactor { a, b, m: mr - ml }),
            Ordering::Equal => {}
        }
    }
    (l, r)
}

/// `r(1/z, 1/q) = sign * q^qshift * z^zshift * rational(z, q)`.
///
/// `rational` keeps the original denominator and a reversed numerator with
/// nonnegative exponents in both variables.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Inverted<C: Coeff> {
    pub sign: i8,
    pub qshift: i64,
    pub zshift: i64,
    pub rational: Factored<C>,
}

impl<C: Coeff> Inverted<C> {
    /// Recombines the monomial prefactor, if its z-exponent is nonnegative.
    pub fn to_factored(&self) -> Option<Factored<C>> {
        let z = u32::try_from(self.zshift).ok()?;
        Some(
            self.rational
                .scale_monomial(C::from_int(self.sign as i64), self.qshift, z),
        )
    }

    /// Whether the inverted value equals `sign * q^qexp * z^zexp * other`.
    pub fn equals_scaled(&self, sign: i8, qexp: i64, zexp: i64, other: &Factored<C>) -> bool {
        let dq = self.qshift - qexp;
        let dz = self.zshift - zexp;
        let s = C::from_int((self.sign * sign) as i64);
        let (lhs, rhs) = if dz >= 0 {
            (self.rational.scale_monomial(s, dq, dz as u32), other.clone())
        } else {
            (
                self.rational.scale_monomial(s, dq, 0),
                other.scale_monomial(C::one(), 0, (-dz) as u32),
            )
        };
        lhs.equals(&rhs)
    }
}

/// A univariate rational function `num / den` in lowest terms with
/// `den(0) = 1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReducedRational<C: Coeff> {
    pub num: UniPoly<C>,
    pub den: UniPoly<C>,
}

impl<C: Coeff> ReducedRational<C> {
    /// Equality of values, independent of the representation.
    pub fn equals(&self, num: &UniPoly<C>, den: &UniPoly<C>) -> bool {
        &self.num * den == num * &self.den
    }
}

impl<C: Coeff> fmt::Display for ReducedRational<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}) / ({})", self.num, self.den)
    }
}

impl<C: Coeff> fmt::Display for Factored<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.factors.is_empty() {
            return write!(f, "{}", self.numerator);
        }
        if self.numerator.term_count() > 1 {
            write!(f, "({})", self.numerator)?;
        } else {
            write!(f, "{}", self.numerator)?;
        }
        f.write_str(" / ")?;
        let mut shown = self.factors.clone();
        shown.sort_by_key(|d| (Reverse(d.b), d.a));
        if shown.len() == 1 {
            return write!(f, "{}", shown[0]);
        }
        f.write_char('(')?;
        for (i, d) in shown.iter().enumerate() {
            if i > 0 {
                f.write_char('*')?;
            }
            write!(f, "{d}")?;
        }
        f.write_char(')')
    }
}

impl<C: Coeff> fmt::Debug for Factored<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Factored({self})")
    }
}

impl<C: Coeff + FromStr> FromStr for Factored<C> {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        super::parse::parse_factored(s)
    }
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct JsonTerm {
    z: u32,
    q: i64,
    c: String,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct JsonRational {
    numerator: Vec<JsonTerm>,
    denominator: Vec<DenFactor>,
}

impl<C: Coeff + FromStr> Factored<C> {
    /// Compact JSON with terms sorted by `(z, q)` and factors by `(b, a, m)`.
    pub fn to_json(&self) -> String {
        serde_json::to_string(&self.json_doc()).expect("serialisable")
    }

    pub fn to_json_value(&self) -> serde_json::Value {
        serde_json::to_value(self.json_doc()).expect("serialisable")
    }

    fn json_doc(&self) -> JsonRational {
        JsonRational {
            numerator: self
                .numerator
                .terms()
                .map(|(z, q, c)| JsonTerm {
                    z,
                    q,
                    c: c.to_string(),
                })
                .collect(),
            denominator: self.factors.clone(),
        }
    }

    pub fn from_json(s: &str) -> Result<Self> {
        let doc: JsonRational =
            serde_json::from_str(s).map_err(|e| Error::Parse(e.to_string()))?;
        Self::from_json_doc(doc)
    }

    pub fn from_json_value(v: serde_json::Value) -> Result<Self> {
        let doc: JsonRational =
            serde_json::from_value(v).map_err(|e| Error::Parse(e.to_string()))?;
        Self::from_json_doc(doc)
    }

    fn from_json_doc(doc: JsonRational) -> Result<Self> {
        let mut terms = Vec::with_capacity(doc.numerator.len());
        for t in doc.numerator {
            let c = C::from_str(&t.c)
                .map_err(|_| Error::Parse(format!("bad coefficient {:?}", t.c)))?;
            terms.push((t.z, t.q, c));
        }
        let factors = doc
            .denominator
            .into_iter()
            .map(|f| DenFactor::checked(f.a, f.b, f.m))
            .collect::<Result<Vec<_>>>()?;
        Ok(Self::new(BivariatePoly::from_terms(terms), factors))
    }
}

impl<C: Coeff> From<BivariatePoly<C>> for Factored<C> {
    fn from(p: BivariatePoly<C>) -> Self {
        Self::polynomial(p)
    }
}

impl<C: Coeff> From<Laurent<C>> for Factored<C> {
    fn from(p: Laurent<C>) -> Self {
        Self::polynomial(p.into())
    }
}

pub(crate) fn factor_checked(a: i64, b: u32, m: u32) -> Result<DenFactor> {
    DenFactor::checked(a, b, m)
}
