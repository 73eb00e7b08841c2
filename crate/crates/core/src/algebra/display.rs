//! Plain-text rendering shared by the polynomial types.

use std::fmt;


use super::coeff::Coeff;

/// Writes `c * var^e * ...` for one monomial, ignoring the sign of `c`.
pub(crate) fn write_monomial<C: Coeff>(
    f: &mut impl fmt::Write,
    c: &C,
    vars: &[(&str, i64)],
) -> fmt::Result {
    let abs = c.abs();
    let vars: Vec<_> = vars.iter().filter(|(_, e)| *e != 0).collect();
    let mut first = true;
    if !abs.is_one() || vars.is_empty() {
        write!(f, "{abs}")?;
        first = false;
    }
    for (name, e) in vars {
        if !first {
            f.write_char('*')?;
        }
        first = false;
        if *e == 1 {
            f.write_str(name)?;
        } else {
            write!(f, "{name}^{e}")?;
        }
    }
    Ok(())
}

/// Writes a signed sum of monomials; an empty sum renders as `0`.
pub(crate) fn write_terms<C, I>(f: &mut impl fmt::Write, terms: I) -> fmt::Result
where
    C: Coeff,
    I: IntoIterator<Item = (C, Vec<(&'static str, i64)>)>,
{
    let mut first = true;
    for (c, vars) in terms {
        if c.is_zero() {
            continue;
        }
        match (first, c.is_negative()) {
            (true, true) => f.write_char('-')?,
            (true, false) => {}
            (false, true) => f.write_str(" - ")?,
            (false, false) => f.write_str(" + ")?,
        }
        write_monomial(f, &c, &vars)?;
        first = false;
    }
    if first {
        f.write_char('0')?;
    }
    Ok(())
}
