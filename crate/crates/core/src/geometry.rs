//! Lattice points of the dilated cube `{0..h}^w`, classified by the faces,
//! chambers and coarse chambers of the braid arrangement.
//!
//! Everything here is brute force over the whole cube. It is meant as an
//! oracle for the closed formulas elsewhere in the crate, so the sizes are
//! capped at `w <= 6` and `h <= 10`.

use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use rayon::prelude::*;

use crate::combinat::{for_each_ssyt, rsk, Composition, Partition, Permutation, Tableau};
use crate::error::{Error, Result};
use crate::QLaurent;

pub const MAX_W: u32 = 6;
pub const MAX_H: u32 = 10;

/// An ordered set partition of `1..=w`, e.g. `23|145|6`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct OrderedSetPartition {
    blocks: Vec<Vec<u32>>,
}

impl OrderedSetPartition {
    /// Blocks are sorted internally; they must be nonempty, disjoint and
    /// cover `1..=w`.
    pub fn new(mut blocks: Vec<Vec<u32>>) -> Result<Self> {
        let w: usize = blocks.iter().map(Vec::len).sum();
        let mut seen = vec![false; w + 1];
        for b in &mut blocks {
            if b.is_empty() {
                return Err(Error::Usage("empty block".into()));
            }
            b.sort_unstable();
            for &x in b.iter() {
                if x == 0 || x as usize > w || std::mem::replace(&mut seen[x as usize], true) {
                    return Err(Error::Usage(format!("blocks {blocks:?} do not partition 1..={w}")));
                }
            }
        }
        Ok(OrderedSetPartition { blocks })
    }

    /// Parses `23|145|6` (single-digit labels).
    pub fn parse(s: &str) -> Result<Self> {
        let blocks = s
            .split('|')
            .map(|b| {
                b.chars()
                    .map(|c| c.to_digit(10).ok_or_else(|| Error::Usage(format!("bad label {c:?}"))))
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(blocks)
    }

    pub fn blocks(&self) -> &[Vec<u32>] {
        &self.blocks
    }

    pub fn w(&self) -> u32 {
        self.blocks.iter().map(|b| b.len() as u32).sum()
    }

    /// Concatenation of the sorted blocks.
    pub fn permutation(&self) -> Permutation {
        Permutation::new(self.blocks.concat()).expect("blocks partition 1..=w")
    }

    /// Block sizes.
    pub fn composition(&self) -> Composition {
        Composition::new(self.blocks.iter().map(|b| b.len() as u32).collect())
            .expect("blocks are nonempty")
    }

    /// Every ordered set partition of `1..=w`.
    pub fn all(w: u32) -> Vec<Self> {
        let mut out = Vec::new();
        for perm in Permutation::all(w) {
            for comp in Composition::all(w) {
                let mut blocks = Vec::new();
                let mut start = 0;
                let word = perm.word();
                let mut sorted = true;
                for &len in comp.parts() {
                    let block = &word[start..start + len as usize];
                    sorted &= block.windows(2).all(|p| p[0] < p[1]);
                    blocks.push(block.to_vec());
                    start += len as usize;
                }
                if sorted {
                    out.push(OrderedSetPartition { blocks });
                }
            }
        }
        out.sort();
        out
    }
}

impl fmt::Display for OrderedSetPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, b) in self.blocks.iter().enumerate() {
            if i > 0 {
                f.write_str("|")?;
            }
            for x in b {
                write!(f, "{x}")?;
            }
        }
        Ok(())
    }
}

/// Lattice points of `h` times a region of the unit cube, in lexicographic
/// order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LatticePointSet {
    pub w: u32,
    pub h: u32,
    pub points: Vec<Vec<u32>>,
}

impl LatticePointSet {
    pub fn contains(&self, v: &[u32]) -> bool {
        self.points.binary_search_by(|p| p.as_slice().cmp(v)).is_ok()
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    /// Coordinate-wise minimum, `None` for an empty set.
    pub fn minimum(&self) -> Option<Vec<u32>> {
        let first = self.points.first()?.clone();
        Some(self.points.iter().fold(first, |acc, p| {
            acc.iter().zip(p).map(|(a, b)| *a.min(b)).collect()
        }))
    }
}

/// A polynomial in `x_0..x_h` with integer coefficients, keyed by exponent
/// vector.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct MonomialTable {
    pub nvars: usize,
    terms: BTreeMap<Vec<u32>, i64>,
}

impl MonomialTable {
    pub fn new(nvars: usize) -> Self {
        MonomialTable {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn add(&mut self, exps: Vec<u32>, c: i64) {
        debug_assert_eq!(exps.len(), self.nvars);
        match self.terms.entry(exps) {
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if *o.get() == 0 {
                    o.remove();
                }
            }
            Entry::Vacant(v) => {
                if c != 0 {
                    v.insert(c);
                }
            }
        }
    }

    /// Adds the monomial `x_{v_1} ... x_{v_w}`.
    pub fn add_point(&mut self, v: &[u32]) {
        let mut exps = vec![0; self.nvars];
        for &x in v {
            exps[x as usize] += 1;
        }
        self.add(exps, 1);
    }

    pub fn terms(&self) -> &BTreeMap<Vec<u32>, i64> {
        &self.terms
    }

    pub fn term_count(&self) -> usize {
        self.terms.len()
    }

    /// Value at `x_i = t^i`, as a list of coefficients of powers of `t`.
    pub fn principal_specialization(&self) -> BTreeMap<u64, i64> {
        let mut out = BTreeMap::new();
        for (e, c) in &self.terms {
            let deg: u64 = e.iter().enumerate().map(|(i, &k)| i as u64 * k as u64).sum();
            *out.entry(deg).or_insert(0) += c;
        }
        out.retain(|_, v| *v != 0);
        out
    }
}

fn check_bounds(w: u32, h: u32) -> Result<()> {
    if w > MAX_W {
        return Err(Error::resource("cube dimension", MAX_W as u64));
    }
    if h > MAX_H {
        return Err(Error::resource("cube dilation", MAX_H as u64));
    }
    Ok(())
}

/// All points of `{0..h}^w` satisfying `keep`, in lexicographic order.
fn filter_cube(w: u32, h: u32, keep: impl Fn(&[u32]) -> bool + Sync) -> Result<LatticePointSet> {
    check_bounds(w, h)?;
    let base = h as u64 + 1;
    let total = base.pow(w);
    let points = (0..total)
        .into_par_iter()
        .filter_map(|mut idx| {
            let mut v = vec![0u32; w as usize];
            for slot in v.iter_mut().rev() {
                *slot = (idx % base) as u32;
                idx /= base;
            }
            keep(&v).then_some(v)
        })
        .collect();
    Ok(LatticePointSet { w, h, points })
}

/// Every point of `{0..h}^w`.
pub fn cube_points(w: u32, h: u32) -> Result<LatticePointSet> {
    filter_cube(w, h, |_| true)
}

/// The permutation whose half-open chamber contains `v`: indices sorted by
/// value, ties broken by index.
pub fn chamber_of(v: &[u32]) -> Permutation {
    let mut idx: Vec<u32> = (1..=v.len() as u32).collect();
    idx.sort_by_key(|&i| (v[i as usize - 1], i));
    Permutation::new(idx).expect("sorted indices form a permutation")
}

/// The face containing `v`: indices grouped by equal value, by increasing
/// value.
pub fn face_of(v: &[u32]) -> OrderedSetPartition {
    let mut by_value: BTreeMap<u32, Vec<u32>> = BTreeMap::new();
    for (i, &x) in v.iter().enumerate() {
        by_value.entry(x).or_default().push(i as u32 + 1);
    }
    OrderedSetPartition {
        blocks: by_value.into_values().collect(),
    }
}

pub fn face_points(gamma: &OrderedSetPartition, h: u32) -> Result<LatticePointSet> {
    filter_cube(gamma.w(), h, |v| face_of(v) == *gamma)
}

pub fn chamber_points(pi: &Permutation, h: u32) -> Result<LatticePointSet> {
    filter_cube(pi.len() as u32, h, |v| chamber_of(v) == *pi)
}

/// Points whose RSK recording tableau is `q`.
pub fn coarse_points(q: &Tableau, h: u32) -> Result<LatticePointSet> {
    filter_cube(q.size() as u32, h, |v| rsk(v).1 == *q)
}

/// Integer-point enumerator: `sum_v x_{v_1} ... x_{v_w}`.
pub fn ipe(points: &LatticePointSet) -> MonomialTable {
    let mut table = MonomialTable::new(points.h as usize + 1);
    for p in &points.points {
        table.add_point(p);
    }
    table
}

/// The monomial quasisymmetric polynomial `M_alpha(x_0..x_h)`.
pub fn monomial_qsym(alpha: &Composition, h: u32) -> MonomialTable {
    let nvars = h as usize + 1;
    let k = alpha.parts().len();
    let mut table = MonomialTable::new(nvars);
    let mut idx: Vec<usize> = (0..k).collect();
    if k > nvars {
        return table;
    }
    loop {
        let mut exps = vec![0; nvars];
        for (j, &i) in idx.iter().enumerate() {
            exps[i] = alpha.parts()[j];
        }
        table.add(exps, 1);
        // Next k-subset of 0..nvars in lexicographic order.
        let Some(j) = (0..k).rev().find(|&j| idx[j] < nvars - k + j) else {
            break;
        };
        idx[j] += 1;
        for t in j + 1..k {
            idx[t] = idx[t - 1] + 1;
        }
    }
    table
}

/// The fundamental quasisymmetric polynomial `F_alpha`, as the sum of
/// `M_beta` over the refinements `beta` of `alpha`.
pub fn fundamental_qsym(alpha: &Composition, h: u32) -> MonomialTable {
    let mut table = MonomialTable::new(h as usize + 1);
    for beta in alpha.refinements() {
        for (e, c) in monomial_qsym(&beta, h).terms {
            table.add(e, c);
        }
    }
    table
}

/// The Schur polynomial `s_mu(x_0..x_h)` from semistandard tableaux.
pub fn schur_table(mu: &Partition, h: u32) -> Result<MonomialTable> {
    let mut table = MonomialTable::new(h as usize + 1);
    for_each_ssyt(mu, h + 1, |t| {
        let v: Vec<u32> = t.reading_word().collect();
        table.add_point(&v);
    })?;
    Ok(table)
}

/// The apex of the cone over the chamber of `pi`: zero at `pi(1)`, rising
/// by one after every descent of the word.
pub fn lemma_vertex(pi: &Permutation) -> Vec<u32> {
    let w = pi.len();
    let mut p = vec![0u32; w];
    let mut level = 0;
    for i in 1..w {
        if pi.at(i) > pi.at(i + 1) {
            level += 1;
        }
        p[pi.at(i + 1) as usize - 1] = level;
    }
    p
}

/// `sum_{v in points} q^(2 |v| - w h)`.
pub fn quantum_ehrhart_of(points: &LatticePointSet) -> QLaurent {
    let wh = (points.w * points.h) as i64;
    QLaurent::from_terms(points.points.iter().map(|v| {
        let s: i64 = v.iter().map(|&x| x as i64).sum();
        (2 * s - wh, BigInt::from(1))
    }))
}

/// The quantum Ehrhart polynomial of the coarse chamber of `q` at height
/// `h`, by direct enumeration.
pub fn quantum_ehrhart_direct(q: &Tableau, h: u32) -> Result<QLaurent> {
    Ok(quantum_ehrhart_of(&coarse_points(q, h)?))
}
