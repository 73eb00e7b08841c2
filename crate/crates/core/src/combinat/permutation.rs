use std::fmt;

use serde::{Deserialize, Serialize};

use super::partition::Composition;
use crate::error::{Error, Result};

/// A permutation of `1..=w` in one-line notation.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<u32>", into = "Vec<u32>")]
pub struct Permutation(Vec<u32>);

impl Permutation {
    pub fn new(word: Vec<u32>) -> Result<Self> {
        let n = word.len();
        let mut seen = vec![false; n + 1];
        for &x in &word {
            if x == 0 || x as usize > n || std::mem::replace(&mut seen[x as usize], true) {
                return Err(Error::Usage(format!("{word:?} is not a permutation")));
            }
        }
        Ok(Permutation(word))
    }

    /// Parses a word of single digits such as `231456`.
    pub fn from_digits(s: &str) -> Result<Self> {
        let word = s
            .chars()
            .map(|c| {
                c.to_digit(10)
                    .ok_or_else(|| Error::Usage(format!("bad permutation digit {c:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(word)
    }

    pub fn identity(w: u32) -> Self {
        Permutation((1..=w).collect())
    }

    /// All permutations of `1..=w` in lexicographic order.
    pub fn all(w: u32) -> Vec<Permutation> {
        let mut cur: Vec<u32> = (1..=w).collect();
        let mut out = vec![Permutation(cur.clone())];
        while next_permutation(&mut cur) {
            out.push(Permutation(cur.clone()));
        }
        out
    }

    pub fn word(&self) -> &[u32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// `pi(i)` for 1-based `i`.
    pub fn at(&self, i: usize) -> u32 {
        self.0[i - 1]
    }

    pub fn inverse(&self) -> Self {
        let mut inv = vec![0; self.0.len()];
        for (i, &x) in self.0.iter().enumerate() {
            inv[x as usize - 1] = i as u32 + 1;
        }
        Permutation(inv)
    }

    /// Positions `i` with `pi(i) > pi(i+1)`; these end the maximal
    /// increasing runs of the word.
    pub fn descents(&self) -> Vec<u32> {
        self.0
            .windows(2)
            .enumerate()
            .filter(|(_, w)| w[0] > w[1])
            .map(|(i, _)| i as u32 + 1)
            .collect()
    }

    /// Letters `i` such that `i + 1` appears to the left of `i`.
    pub fn letter_descents(&self) -> Vec<u32> {
        let pos = self.inverse();
        (1..self.0.len() as u32)
            .filter(|&i| pos.at(i as usize + 1) < pos.at(i as usize))
            .collect()
    }

    pub fn des(&self) -> u32 {
        self.descents().len() as u32
    }

    pub fn maj(&self) -> u32 {
        self.descents().iter().sum()
    }

    /// Lengths of the maximal increasing runs of the word.
    pub fn descent_composition(&self) -> Composition {
        Composition::from_descents(self.0.len() as u32, &self.descents())
    }
}

fn next_permutation(v: &mut [u32]) -> bool {
    let Some(i) = (1..v.len()).rev().find(|&i| v[i - 1] < v[i]) else {
        return false;
    };
    let j = (i..v.len()).rev().find(|&j| v[j] > v[i - 1]).unwrap();
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}

impl TryFrom<Vec<u32>> for Permutation {
    type Error = Error;
    fn try_from(word: Vec<u32>) -> Result<Self> {
        Self::new(word)
    }
}

impl From<Permutation> for Vec<u32> {
    fn from(p: Permutation) -> Self {
        p.0
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sep = if self.0.len() > 9 { " " } else { "" };
        for (i, x) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(sep)?;
            }
            write!(f, "{x}")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn descent_composition_of_example() {
        let p = Permutation::from_digits("231456").unwrap();
        assert_eq!(p.descent_composition().parts(), &[2, 4]);
        assert_eq!(p.descents(), vec![2]);
        assert_eq!(p.letter_descents(), vec![1]);
    }

    #[test]
    fn letter_descents_are_descents_of_the_inverse() {
        for w in 0..=6 {
            let all = Permutation::all(w);
            assert_eq!(all.len(), (1..=w as usize).product::<usize>());
            for p in all {
                assert_eq!(p.letter_descents(), p.inverse().descents());
                assert_eq!(p.inverse().inverse(), p);
            }
        }
    }

    #[test]
    fn rejects_non_bijections() {
        assert!(Permutation::new(vec![1, 1]).is_err());
        assert!(Permutation::new(vec![0, 1]).is_err());
        assert!(Permutation::new(vec![3, 1]).is_err());
    }
}
