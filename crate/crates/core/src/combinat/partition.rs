use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use super::MAX_SIZE;
use crate::error::{Error, Result};

/// An integer partition: weakly decreasing positive parts.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<u32>", into = "Vec<u32>")]
pub struct Partition(Vec<u32>);

impl Partition {
    /// Validates the parts; trailing zeros are dropped.
    pub fn new(mut parts: Vec<u32>) -> Result<Self> {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if parts.contains(&0) {
            return Err(Error::Usage(format!("partition {parts:?} has a zero part")));
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::Usage(format!(
                "partition {parts:?} is not weakly decreasing"
            )));
        }
        Ok(Partition(parts))
    }

    /// Panicking constructor for literals.
    pub fn of(parts: &[u32]) -> Self {
        Self::new(parts.to_vec()).expect("valid partition")
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    /// The single row `(w)`.
    pub fn row(w: u32) -> Self {
        Self::of(&[w])
    }

    /// The hook `(n+1, 1^m)`.
    pub fn hook(n: u32, m: u32) -> Self {
        let mut parts = vec![n + 1];
        parts.extend(std::iter::repeat_n(1, m as usize));
        Partition(parts)
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    /// Number of parts.
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn size(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn conjugate(&self) -> Self {
        let first = self.0.first().copied().unwrap_or(0);
        Partition(
            (0..first)
                .map(|j| self.0.iter().filter(|&&p| p > j).count() as u32)
                .collect(),
        )
    }

    /// Hook length of the cell in row `r`, column `c` (0-based).
    pub fn hook_length(&self, r: usize, c: usize) -> u32 {
        let arm = self.0[r] - c as u32 - 1;
        let leg = self.0[r + 1..].iter().filter(|&&p| p as usize > c).count() as u32;
        arm + leg + 1
    }

    /// All hook lengths, in decreasing order.
    pub fn hook_lengths(&self) -> Vec<u32> {
        let mut hooks: Vec<u32> = self
            .cells()
            .map(|(r, c)| self.hook_length(r, c))
            .collect();
        hooks.sort_unstable_by(|a, b| b.cmp(a));
        hooks
    }

    /// Cells `(row, column)` in row-reading order.
    pub fn cells(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.0
            .iter()
            .enumerate()
            .flat_map(|(r, &len)| (0..len as usize).map(move |c| (r, c)))
    }

    pub fn is_hook(&self) -> bool {
        self.0.iter().skip(1).all(|&p| p == 1)
    }

    pub fn is_self_conjugate(&self) -> bool {
        *self == self.conjugate()
    }

    /// Number of standard tableaux, by the hook-length formula.
    pub fn syt_count(&self) -> BigInt {
        let mut num = BigInt::from(1);
        for k in 1..=self.size() {
            num *= k;
        }
        let mut den = BigInt::from(1);
        for h in self.hook_lengths() {
            den *= h;
        }
        num / den
    }
}

impl TryFrom<Vec<u32>> for Partition {
    type Error = Error;
    fn try_from(parts: Vec<u32>) -> Result<Self> {
        Self::new(parts)
    }
}

impl From<Partition> for Vec<u32> {
    fn from(p: Partition) -> Self {
        p.0
    }
}

/// Parses `3,1,1`; the empty string and `0` give the empty partition.
impl FromStr for Partition {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim().trim_start_matches('(').trim_end_matches(')');
        if s.is_empty() {
            return Ok(Self::empty());
        }
        let parts = s
            .split(',')
            .map(|p| {
                p.trim()
                    .parse::<u32>()
                    .map_err(|_| Error::Usage(format!("bad partition part {p:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(parts)
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, p) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{p}")?;
        }
        f.write_str(")")
    }
}

/// All partitions of `w` in lexicographically decreasing order.
pub fn partitions_of(w: u32) -> Result<Vec<Partition>> {
    partitions_of_bounded(w, MAX_SIZE)
}

pub fn partitions_of_bounded(w: u32, bound: u32) -> Result<Vec<Partition>> {
    if w > bound {
        return Err(Error::resource("partition size", bound as u64));
    }
    let mut out = Vec::new();
    let mut cur = Vec::new();
    fill(w, w, &mut cur, &mut out);
    Ok(out)
}

fn fill(rest: u32, max: u32, cur: &mut Vec<u32>, out: &mut Vec<Partition>) {
    if rest == 0 {
        out.push(Partition(cur.clone()));
        return;
    }
    for p in (1..=max.min(rest)).rev() {
        cur.push(p);
        fill(rest - p, p, cur, out);
        cur.pop();
    }
}

/// A composition: a sequence of positive parts.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Composition(Vec<u32>);

impl Composition {
    pub fn new(parts: Vec<u32>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::Usage(format!("composition {parts:?} has a zero part")));
        }
        Ok(Composition(parts))
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    pub fn size(&self) -> u32 {
        self.0.iter().sum()
    }

    /// The composition of `w` whose partial sums are the given descents.
    pub fn from_descents(w: u32, descents: &[u32]) -> Self {
        let mut parts = Vec::new();
        let mut prev = 0;
        for &d in descents.iter().chain(std::iter::once(&w)) {
            if d > prev {
                parts.push(d - prev);
                prev = d;
            }
        }
        Composition(parts)
    }

    /// Partial sums, excluding the total.
    pub fn descent_set(&self) -> Vec<u32> {
        let mut acc = 0;
        let mut out = Vec::new();
        for &p in &self.0[..self.0.len().saturating_sub(1)] {
            acc += p;
            out.push(acc);
        }
        out
    }

    /// All compositions refining this one (including itself).
    pub fn refinements(&self) -> Vec<Composition> {
        let w = self.size();
        let fixed = self.descent_set();
        let free: Vec<u32> = (1..w).filter(|i| !fixed.contains(i)).collect();
        (0u64..1 << free.len())
            .map(|mask| {
                let mut set = fixed.clone();
                set.extend(
                    free.iter()
                        .enumerate()
                        .filter(|(i, _)| mask >> i & 1 == 1)
                        .map(|(_, &d)| d),
                );
                set.sort_unstable();
                Composition::from_descents(w, &set)
            })
            .collect()
    }

    /// All compositions of `w`.
    pub fn all(w: u32) -> Vec<Composition> {
        if w == 0 {
            return vec![Composition(Vec::new())];
        }
        Composition(vec![w]).refinements()
    }
}
