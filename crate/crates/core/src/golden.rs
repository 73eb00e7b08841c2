//! Published rational forms of `A_mu(z, q)` used as reference data.
//!
//! The forms for `|mu| <= 4` are single fractions. For the four listed shapes
//! of size 5 the reference is a sum of positive fractions, stored term by
//! term exactly as printed.

use crate::combinat::Partition;
use crate::error::Result;
use crate::FactoredRational;

/// `(shape, fraction)` for every partition of size at most 4.
pub const TABLE: &[(&[u32], &str)] = &[
    (&[1], "q / (1-q*z)"),
    (&[2], "q / ((1-z^2)*(1-q^2*z))"),
    (&[1, 1], "q*z / ((1-z^2)*(1-q^2*z))"),
    (&[3], "(q + q^4*z^3) / ((1-z^4)*(1-q^2*z^2)*(1-q^3*z))"),
    (&[2, 1], "q^2*z / ((1-z^2)*(1-q*z)*(1-q^3*z))"),
    (&[1, 1, 1], "(q*z^2 + q^4*z^5) / ((1-z^4)*(1-q^2*z^2)*(1-q^3*z))"),
    (&[4], "(q + q^7*z^3) / ((1-z^3)*(1-z^2)*(1-q^4*z^2)*(1-q^4*z))"),
    (&[3, 1], "q^3*z / ((1-z^2)*(1-z)*(1-q^2*z)*(1-q^4*z))"),
    (&[2, 2], "(q*z + q^7*z^4) / ((1-z^3)*(1-q^4*z^2)*(1-z)*(1-q^4*z))"),
    (&[2, 1, 1], "q^3*z^2 / ((1-z^2)*(1-z)*(1-q^2*z)*(1-q^4*z))"),
    (&[1, 1, 1, 1], "(q*z^3 + q^7*z^6) / ((1-z^3)*(1-z^2)*(1-q^4*z^2)*(1-q^4*z))"),
];

const A5: &[&str] = &[
    "(q^7*z^4 + q^7*z^2 + q^6*z^3) / ((1-z^8)*(1-q^5*z)*(1-q^3*z))",
    "q^5*z^4 / ((1-z^8)*(1-q^5*z)*(1-q^3*z)*(1-q*z))",
    "q^5*z^8 / ((1-z^8)*(1-q^5*z)*(1-q^3*z)*(1-q*z)*(1-z^2))",
    "q^3*z^8 / ((1-z^8)*(1-q^5*z)*(1-z^4))",
    "(q^7*z^8 + q^6*z^7 + q^5*z^6) / ((1-z^8)*(1-q^5*z)*(1-q^3*z)*(1-z^2))",
    "(q^3*z^12 + q^3*z^2) / ((1-z^8)*(1-q^5*z)*(1-z^4)^2)",
    "(q^7*z^6 + q^6*z^7 + q^5*z^4) / ((1-z^8)*(1-q^5*z)*(1-q^3*z)*(1-z^4))",
    "q^4*z^5 / ((1-z^8)*(1-q^5*z)*(1-z^4)*(1-z^2))",
    "(q^7*z^6 + q^6*z^7 + q^5*z^8) / ((1-z^8)*(1-q^5*z)*(1-q^3*z)*(1-z^4)*(1-z^2))",
    "(q^4*z^9 + q^4*z^3) / ((1-z^8)*(1-q^5*z)*(1-z^4))",
    "(q^5*z^22 + q^5*z^20 + q^5*z^16 + q^5*z^14) / ((1-z^12)*(1-z^8)*(1-q^5*z)*(1-z^4)*(1-q*z))",
    "q^2*z^5 / ((1-z^8)*(1-q^5*z)*(1-z^2))",
    "(q*z^18 + q) / ((1-z^12)*(1-z^8)*(1-q^5*z)*(1-z^4))",
    "q^2*z^11 / ((1-z^8)*(1-q^5*z)*(1-z^6)*(1-z^2))",
    "q^4*z^15 / ((1-z^12)*(1-z^8)*(1-q^5*z))",
    "q^4*z^19 / ((1-z^12)*(1-z^8)*(1-q^5*z)*(1-z^2))",
];

const A41: &[&str] = &[
    "(q^5*z^6 + q^4*z + q^2*z^3) / ((1-q^5*z)*(1-q^3*z)*(1-q*z)*(1-z^6)*(1-z^2))",
    "q^3*z^2 / ((1-q^5*z)*(1-q^3*z)*(1-q*z)*(1-z^4)*(1-z^2))",
    "q^3*z^8 / ((1-q^5*z)*(1-q*z)*(1-z^6)*(1-z^4)*(1-z^2))",
    "(q^3*z^6 + q^2*z^7) / ((1-q^3*z)*(1-q*z)*(1-z^6)*(1-z^4)*(1-z^2))",
    "(q*z^4 + q^2*z^5) / ((1-q^5*z)*(1-q^3*z)*(1-z^6)*(1-z^4)*(1-z^2))",
];

const A32: &[&str] = &[
    "(q^5*z^6 + q*z^6 + q^3*z^10 + q^4*z^5 + q^4*z^3 + q^3*z^12) / ((1-q^5*z)*(1-q*z)*(1-z^8)*(1-z^6)*(1-z^4))",
    "(q^6*z^3 + q^6*z^13 + 2*q^8*z^7 + q^7*z^8) / ((1-q^5*z)*(1-q^3*z)*(1-q*z)*(1-z^8)*(1-z^6))",
    "(q^5*z^6 + q^7*z^6 + q^7*z^10 + q^5*z^8) / ((1-q^5*z)*(1-q^3*z)*(1-q*z)*(1-z^8)*(1-z^4))",
    "(q*z^4 + q^2*z^7 + q^2*z + q^3*z^6 + q*z^12 + 2*q^3*z^6 + 2*q*z^8 + q^3*z^8) / ((1-q^3*z)*(1-q*z)*(1-z^8)*(1-z^6)*(1-z^4))",
    "(q^7*z^6 + q^8*z^7 + q^4*z^5 + q^5*z^4 + q^7*z^2 + q^4*z^7) / ((1-q^5*z)*(1-q^3*z)*(1-q*z)*(1-z^6)*(1-z^4))",
    "(q^2*z^3 + q^3*z^4 + q^4*z^5 + q^6*z^5 + q^3*z^4 + q^2*z^11 + q^2*z^11) / ((1-q^5*z)*(1-q^3*z)*(1-z^8)*(1-z^6)*(1-z^4))",
];

const A311: &[&str] = &[
    "(q^3*z^4 + q^2*z^5 + q*z^6) / ((1-q^3*z)*(1-q*z)*(1-z^4)^2*(1-z^2))",
    "(q^4*z^5 + q^5*z^2) / ((1-q^5*z)*(1-q^3*z)*(1-q*z)*(1-z^4)*(1-z^2))",
    "(q^8*z^7 + q*z^2 + q^3*z^4 + q^2*z^5 + q^6*z^5 + q^7*z^4) / ((1-q^5*z)*(1-q^3*z)*(1-q*z)*(1-z^4)^2)",
];

/// `(shape, terms)` for the size-5 shapes with published forms.
pub const SUMS: &[(&[u32], &[&str])] = &[
    (&[5], A5),
    (&[4, 1], A41),
    (&[3, 2], A32),
    (&[3, 1, 1], A311),
];

/// The single-fraction reference form for `mu`, if `|mu| <= 4`.
pub fn table_entry(mu: &Partition) -> Option<FactoredRational> {
    TABLE
        .iter()
        .find(|(parts, _)| *parts == mu.parts())
        .map(|(_, s)| s.parse().expect("reference data parses"))
}

/// The printed term list for `mu`, if it is one of the size-5 shapes.
pub fn sum_terms(mu: &Partition) -> Option<Vec<FactoredRational>> {
    SUMS.iter().find(|(parts, _)| *parts == mu.parts()).map(|(_, terms)| {
        terms
            .iter()
            .map(|s| s.parse().expect("reference data parses"))
            .collect()
    })
}

/// The reference value of `A_mu` when one is known: the table entry or the
/// sum of the printed terms.
pub fn reference(mu: &Partition) -> Option<FactoredRational> {
    table_entry(mu).or_else(|| {
        sum_terms(mu).map(|terms| {
            terms
                .iter()
                .fold(FactoredRational::zero(), |acc, t| acc.add(t))
        })
    })
}

/// The textual reference form for display, if one is known.
pub fn reference_text(mu: &Partition) -> Option<String> {
    if let Some((_, s)) = TABLE.iter().find(|(parts, _)| *parts == mu.parts()) {
        return Some(s.to_string());
    }
    SUMS.iter()
        .find(|(parts, _)| *parts == mu.parts())
        .map(|(_, terms)| terms.join(" + "))
}

/// All shapes with reference data, smallest first.
pub fn shapes() -> Result<Vec<Partition>> {
    TABLE
        .iter()
        .map(|(p, _)| p)
        .chain(SUMS.iter().map(|(p, _)| p))
        .map(|p| Partition::new(p.to_vec()))
        .collect()
}
