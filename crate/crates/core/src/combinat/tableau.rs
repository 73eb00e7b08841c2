use num_bigint::BigInt;
use num_traits::ToPrimitive;
use serde::{Deserialize, Serialize};

use super::partition::Partition;
use super::{MAX_SIZE, MAX_SSYT};
use crate::error::{Error, Result};

/// A Young tableau stored as rows of entries.
///
/// Semistandard tableaux use the alphabet `0..n`; standard tableaux of size
/// `w` contain `1..=w`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<Vec<u32>>", into = "Vec<Vec<u32>>")]
pub struct Tableau {
    rows: Vec<Vec<u32>>,
}

impl Tableau {
    /// Checks that the row lengths form a partition.
    pub fn from_rows(rows: Vec<Vec<u32>>) -> Result<Self> {
        Partition::new(rows.iter().map(|r| r.len() as u32).collect())?;
        if rows.iter().any(Vec::is_empty) {
            return Err(Error::Usage("tableau has an empty row".into()));
        }
        Ok(Tableau { rows })
    }

    pub fn rows(&self) -> &[Vec<u32>] {
        &self.rows
    }

    pub fn shape(&self) -> Partition {
        Partition::new(self.rows.iter().map(|r| r.len() as u32).collect())
            .expect("rows form a partition")
    }

    pub fn size(&self) -> usize {
        self.rows.iter().map(Vec::len).sum()
    }

    /// Rows weakly increase and columns strictly increase.
    pub fn is_semistandard(&self) -> bool {
        let rows_ok = self.rows.iter().all(|r| r.windows(2).all(|w| w[0] <= w[1]));
        let cols_ok = self
            .rows
            .windows(2)
            .all(|pair| pair[1].iter().zip(&pair[0]).all(|(lo, hi)| hi < lo));
        rows_ok && cols_ok
    }

    /// Semistandard and containing each of `1..=size` once.
    pub fn is_standard(&self) -> bool {
        let mut seen: Vec<u32> = self.rows.iter().flatten().copied().collect();
        seen.sort_unstable();
        self.is_semistandard() && seen.iter().copied().eq(1..=seen.len() as u32)
    }

    /// Row index of every entry of a standard tableau, indexed by entry.
    fn row_of(&self) -> Vec<usize> {
        let mut row = vec![0; self.size() + 1];
        for (r, entries) in self.rows.iter().enumerate() {
            for &e in entries {
                row[e as usize] = r;
            }
        }
        row
    }

    /// Descent set of a standard tableau: `i` such that `i + 1` sits in a
    /// strictly lower row.
    pub fn descents(&self) -> Vec<u32> {
        let row = self.row_of();
        (1..self.size() as u32)
            .filter(|&i| row[i as usize + 1] > row[i as usize])
            .collect()
    }

    pub fn des(&self) -> u32 {
        self.descents().len() as u32
    }

    pub fn maj(&self) -> u32 {
        self.descents().iter().sum()
    }

    pub fn transpose(&self) -> Self {
        let width = self.rows.first().map_or(0, Vec::len);
        let rows = (0..width)
            .map(|c| {
                self.rows
                    .iter()
                    .take_while(|r| r.len() > c)
                    .map(|r| r[c])
                    .collect()
            })
            .collect();
        Tableau { rows }
    }

    /// Entries in row-reading order.
    pub fn reading_word(&self) -> impl Iterator<Item = u32> + '_ {
        self.rows.iter().flatten().copied()
    }
}

impl TryFrom<Vec<Vec<u32>>> for Tableau {
    type Error = Error;
    fn try_from(rows: Vec<Vec<u32>>) -> Result<Self> {
        Self::from_rows(rows)
    }
}

impl From<Tableau> for Vec<Vec<u32>> {
    fn from(t: Tableau) -> Self {
        t.rows
    }
}

/// A standard tableau together with its descent statistics.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Syt {
    pub tableau: Tableau,
    pub descents: Vec<u32>,
    pub des: u32,
    pub maj: u32,
}

/// All standard tableaux of shape `mu`.
pub fn syt_enumerate(mu: &Partition) -> Result<Vec<Syt>> {
    syt_enumerate_bounded(mu, MAX_SIZE)
}

pub fn syt_enumerate_bounded(mu: &Partition, bound: u32) -> Result<Vec<Syt>> {
    if mu.size() > bound {
        return Err(Error::resource("standard tableau size", bound as u64));
    }
    let mut rows: Vec<Vec<u32>> = vec![Vec::new(); mu.len()];
    let mut out = Vec::new();
    place(mu.parts(), 1, mu.size(), &mut rows, &mut out);
    let expected = mu.syt_count();
    if BigInt::from(out.len()) != expected {
        return Err(Error::Inconsistency(format!(
            "{} standard tableaux of shape {mu}, hook-length formula gives {expected}",
            out.len()
        )));
    }
    Ok(out)
}

fn place(shape: &[u32], next: u32, w: u32, rows: &mut Vec<Vec<u32>>, out: &mut Vec<Syt>) {
    if next > w {
        let tableau = Tableau { rows: rows.clone() };
        let descents = tableau.descents();
        out.push(Syt {
            des: descents.len() as u32,
            maj: descents.iter().sum(),
            descents,
            tableau,
        });
        return;
    }
    for r in 0..shape.len() {
        let len = rows[r].len();
        let fits = len < shape[r] as usize && (r == 0 || rows[r - 1].len() > len);
        if fits {
            rows[r].push(next);
            place(shape, next + 1, w, rows, out);
            rows[r].pop();
        }
    }
}

/// Number of semistandard tableaux of shape `mu` over `n` letters, by the
/// hook-content formula.
pub fn ssyt_count(mu: &Partition, n: u32) -> BigInt {
    let mut num = BigInt::from(1);
    let mut den = BigInt::from(1);
    for (r, c) in mu.cells() {
        let content = n as i64 + c as i64 - r as i64;
        if content <= 0 {
            return BigInt::from(0);
        }
        num *= content;
        den *= mu.hook_length(r, c);
    }
    num / den
}

/// Calls `visit` on every semistandard tableau of shape `mu` with entries in
/// `0..n`, in lexicographic order of the row-reading word.
///
/// The tableau passed to `visit` is reused between calls.
pub fn for_each_ssyt(mu: &Partition, n: u32, mut visit: impl FnMut(&Tableau)) -> Result<()> {
    let count = ssyt_count(mu, n);
    if count.to_u64().is_none_or(|c| c > MAX_SSYT) {
        return Err(Error::resource("semistandard tableau count", MAX_SSYT));
    }
    if count == BigInt::from(0) {
        return Ok(());
    }
    let cells: Vec<(usize, usize)> = mu.cells().collect();
    let heights = mu.conjugate();
    let mut t = Tableau {
        rows: mu.parts().iter().map(|&p| vec![0; p as usize]).collect(),
    };
    fill_ssyt(&cells, 0, heights.parts(), n, &mut t, &mut visit);
    Ok(())
}

fn fill_ssyt(
    cells: &[(usize, usize)],
    i: usize,
    heights: &[u32],
    n: u32,
    t: &mut Tableau,
    visit: &mut impl FnMut(&Tableau),
) {
    let Some(&(r, c)) = cells.get(i) else {
        visit(t);
        return;
    };
    let left = if c > 0 { t.rows[r][c - 1] } else { 0 };
    let above = if r > 0 { t.rows[r - 1][c] + 1 } else { 0 };
    let below = heights[c] - 1 - r as u32;
    let Some(hi) = (n - 1).checked_sub(below) else {
        return;
    };
    for v in left.max(above)..=hi {
        t.rows[r][c] = v;
        fill_ssyt(cells, i + 1, heights, n, t, visit);
    }
}

/// All semistandard tableaux of shape `mu` with entries in `0..=h`.
pub fn ssyt_enumerate(mu: &Partition, h: u32) -> Result<Vec<Tableau>> {
    let mut out = Vec::new();
    for_each_ssyt(mu, h + 1, |t| out.push(t.clone()))?;
    Ok(out)
}
