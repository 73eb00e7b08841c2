use super::tableau::Tableau;
use crate::error::{Error, Result};

/// Row-insertion RSK of a word, returning the insertion tableau `P` and the
/// standard recording tableau `Q`.
pub fn rsk(word: &[u32]) -> (Tableau, Tableau) {
    let mut p: Vec<Vec<u32>> = Vec::new();
    let mut q: Vec<Vec<u32>> = Vec::new();
    for (step, &letter) in word.iter().enumerate() {
        let mut x = letter;
        let mut r = 0;
        loop {
            if r == p.len() {
                p.push(vec![x]);
                q.push(vec![step as u32 + 1]);
                break;
            }
            match p[r].iter().position(|&y| y > x) {
                Some(c) => {
                    x = std::mem::replace(&mut p[r][c], x);
                    r += 1;
                }
                None => {
                    p[r].push(x);
                    q[r].push(step as u32 + 1);
                    break;
                }
            }
        }
    }
    let p = Tableau::from_rows(p).expect("insertion keeps a partition shape");
    let q = Tableau::from_rows(q).expect("recording keeps a partition shape");
    (p, q)
}

/// Recovers the word from its RSK pair.
pub fn rsk_inverse(p: &Tableau, q: &Tableau) -> Result<Vec<u32>> {
    if p.shape() != q.shape() || !p.is_semistandard() || !q.is_standard() {
        return Err(Error::Usage("not an RSK pair".into()));
    }
    let mut rows: Vec<Vec<u32>> = p.rows().to_vec();
    let n = q.size();
    let mut word = vec![0; n];
    for step in (1..=n as u32).rev() {
        let r = q
            .rows()
            .iter()
            .position(|row| row.contains(&step))
            .expect("standard tableau");
        let mut x = rows[r].pop().expect("cell present");
        if rows[r].is_empty() {
            rows.pop();
        }
        for rr in (0..r).rev() {
            // The entry bumped into row rr + 1 was the rightmost one smaller than x.
            let c = rows[rr]
                .iter()
                .rposition(|&y| y < x)
                .ok_or_else(|| Error::Usage("not an RSK pair".into()))?;
            x = std::mem::replace(&mut rows[rr][c], x);
        }
        word[step as usize - 1] = x;
    }
    Ok(word)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn rows(t: &Tableau) -> Vec<Vec<u32>> {
        t.rows().to_vec()
    }

    #[test]
    fn small_insertions() {
        let (p, q) = rsk(&[1, 0]);
        assert_eq!((rows(&p), rows(&q)), (vec![vec![0], vec![1]], vec![vec![1], vec![2]]));
        let (p, q) = rsk(&[0, 1, 2]);
        assert_eq!((rows(&p), rows(&q)), (vec![vec![0, 1, 2]], vec![vec![1, 2, 3]]));
    }

    #[test]
    fn recording_tableau_of_a_chamber_point() {
        // A point with v2 <= v3 < v1 <= v4 <= v5 <= v6.
        let (_, q) = rsk(&[1, 0, 0, 1, 1, 1]);
        assert_eq!(rows(&q), vec![vec![1, 3, 4, 5, 6], vec![2]]);
        // The standard point of that chamber is the inverse permutation 312456.
        let (_, q) = rsk(&[3, 1, 2, 4, 5, 6]);
        assert_eq!(rows(&q), vec![vec![1, 3, 4, 5, 6], vec![2]]);
        // Inserting the word 231456 itself gives a different recording tableau.
        let (_, q) = rsk(&[2, 3, 1, 4, 5, 6]);
        assert_eq!(rows(&q), vec![vec![1, 2, 4, 5, 6], vec![3]]);
    }

    proptest! {
        #[test]
        fn rsk_is_a_weight_preserving_bijection(word in prop::collection::vec(0u32..6, 0..9)) {
            let (p, q) = rsk(&word);
            prop_assert!(p.is_semistandard());
            prop_assert!(q.is_standard() || word.is_empty());
            let mut letters = word.clone();
            letters.sort_unstable();
            let mut entries: Vec<u32> = p.reading_word().collect();
            entries.sort_unstable();
            prop_assert_eq!(letters, entries);
            prop_assert_eq!(rsk_inverse(&p, &q).unwrap(), word);
        }
    }
}
