//! Words in the simple reflections of `A_n` and the symmetric group
//! `S_{n+1}` they generate.
//!
//! Generators are 1-based: the rank-`n` group has generators `s_1..=s_n`,
//! and `s_i` swaps positions `i` and `i + 1`. Two generators are
//! *neighbours* when their indices differ by exactly one.

use std::collections::{HashSet, VecDeque};
use std::fmt;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};

/// `true` when `a` and `b` are adjacent nodes of the `A_n` Dynkin diagram.
#[inline]
pub fn are_neighbors(a: usize, b: usize) -> bool {
    a.abs_diff(b) == 1
}

/// `true` when `s_a` and `s_b` commute and are distinct.
#[inline]
pub fn commute(a: usize, b: usize) -> bool {
    a.abs_diff(b) >= 2
}

/// A word `[w_1, ..., w_d]` in the generators of a rank-`n` group.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Word {
    rank: usize,
    letters: Vec<usize>,
}

impl Word {
    pub fn new(rank: usize, letters: Vec<usize>) -> Result<Self> {
        if rank == 0 {
            return Err(Error::InvalidRank(rank));
        }
        if let Some(&letter) = letters.iter().find(|&&l| l == 0 || l > rank) {
            return Err(Error::InvalidWord { letter, rank });
        }
        Ok(Word { rank, letters })
    }

    /// The empty word of the given rank.
    pub fn identity(rank: usize) -> Result<Self> {
        Word::new(rank, Vec::new())
    }

    /// Parses a JSON array of integers such as `[3,2,1,4,3]`.
    pub fn from_json(text: &str, rank: usize) -> Result<Self> {
        let letters: Vec<i64> = serde_json::from_str(text)
            .map_err(|e| Error::Parse(format!("word must be a JSON integer array: {e}")))?;
        let letters = letters
            .into_iter()
            .map(|l| {
                usize::try_from(l).map_err(|_| Error::InvalidWord {
                    letter: 0,
                    rank,
                })
            })
            .collect::<Result<Vec<_>>>()?;
        Word::new(rank, letters)
    }

    pub(crate) fn from_letters_unchecked(rank: usize, letters: Vec<usize>) -> Self {
        debug_assert!(letters.iter().all(|&l| (1..=rank).contains(&l)));
        Word { rank, letters }
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn letters(&self) -> &[usize] {
        &self.letters
    }

    pub fn into_letters(self) -> Vec<usize> {
        self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// Multiplication in the free monoid; ranks must agree.
    pub fn concat(&self, other: &Word) -> Result<Word> {
        if self.rank != other.rank {
            return Err(Error::RankMismatch {
                left: self.rank,
                right: other.rank,
            });
        }
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        Ok(Word::from_letters_unchecked(self.rank, letters))
    }

    /// The permutation `s_{w_1} s_{w_2} ... s_{w_d}` in `S_{n+1}`.
    pub fn to_permutation(&self) -> Permutation {
        let mut images: Vec<usize> = (1..=self.rank + 1).collect();
        for &l in &self.letters {
            images.swap(l - 1, l);
        }
        Permutation { images }
    }

    /// Whether the word length equals the Coxeter length of its element.
    pub fn is_reduced(&self) -> bool {
        self.to_permutation().inversions() == self.letters.len()
    }

    /// Decides full commutativity by exploring the commutation class.
    ///
    /// A reduced word is fully commutative iff no member of its
    /// commutation class contains a factor `[i, i ± 1, i]`.
    pub fn is_fully_commutative(&self) -> Result<bool> {
        if !self.is_reduced() {
            return Err(Error::NotReduced);
        }
        Ok(class_avoids_braids(&commutation_class(self)))
    }

    /// The word of the inverse element: letters in reverse order.
    pub fn inverse(&self) -> Word {
        let mut letters = self.letters.clone();
        letters.reverse();
        Word::from_letters_unchecked(self.rank, letters)
    }

    /// Image under the diagram automorphism `i -> n + 1 - i`.
    pub fn reverse_diagram(&self) -> Word {
        let letters = self.letters.iter().map(|&l| self.rank + 1 - l).collect();
        Word::from_letters_unchecked(self.rank, letters)
    }

    /// Applies the adjacent transposition of positions `r` and `r + 1`
    /// (1-based). Returns `None` when `r` is out of range.
    pub fn swap_positions(&self, r: usize) -> Option<Word> {
        if r == 0 || r >= self.letters.len() {
            return None;
        }
        let mut letters = self.letters.clone();
        letters.swap(r - 1, r);
        Some(Word::from_letters_unchecked(self.rank, letters))
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (idx, l) in self.letters.iter().enumerate() {
            if idx > 0 {
                write!(f, ",")?;
            }
            write!(f, "{l}")?;
        }
        write!(f, "]")
    }
}

impl Serialize for Word {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.letters.serialize(serializer)
    }
}

fn has_braid_factor(letters: &[usize]) -> bool {
    letters
        .windows(3)
        .any(|t| t[0] == t[2] && are_neighbors(t[0], t[1]))
}

/// `true` when no member of a commutation class has a factor `[i, i ± 1, i]`.
pub(crate) fn class_avoids_braids(class: &[Word]) -> bool {
    class.iter().all(|w| !has_braid_factor(&w.letters))
}

/// All words reachable from `w` by swapping adjacent commuting letters,
/// sorted lexicographically. Works for any word, reduced or not; for a
/// homogeneous word this is its weight-graph component.
pub fn commutation_class(w: &Word) -> Vec<Word> {
    let mut seen: HashSet<Vec<usize>> = HashSet::new();
    let mut queue = VecDeque::new();
    seen.insert(w.letters.clone());
    queue.push_back(w.letters.clone());
    while let Some(current) = queue.pop_front() {
        for r in 0..current.len().saturating_sub(1) {
            if commute(current[r], current[r + 1]) {
                let mut next = current.clone();
                next.swap(r, r + 1);
                if !seen.contains(&next) {
                    seen.insert(next.clone());
                    queue.push_back(next);
                }
            }
        }
    }
    let mut class: Vec<Word> = seen
        .into_iter()
        .map(|letters| Word::from_letters_unchecked(w.rank, letters))
        .collect();
    class.sort();
    class
}

/// A permutation of `{1, ..., n + 1}` in one-line notation.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn identity(size: usize) -> Self {
        Permutation {
            images: (1..=size).collect(),
        }
    }

    /// Builds a permutation from one-line notation, checking bijectivity.
    pub fn from_images(images: Vec<usize>) -> Option<Self> {
        let n = images.len();
        let mut seen = vec![false; n + 1];
        for &v in &images {
            if v == 0 || v > n || seen[v] {
                return None;
            }
            seen[v] = true;
        }
        Some(Permutation { images })
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn size(&self) -> usize {
        self.images.len()
    }

    pub fn inversions(&self) -> usize {
        let p = &self.images;
        let mut count = 0;
        for a in 0..p.len() {
            for b in a + 1..p.len() {
                if p[a] > p[b] {
                    count += 1;
                }
            }
        }
        count
    }

    pub fn inverse(&self) -> Permutation {
        let mut images = vec![0; self.images.len()];
        for (pos, &v) in self.images.iter().enumerate() {
            images[v - 1] = pos + 1;
        }
        Permutation { images }
    }
}

/// An integer combination of the simple roots `α_1, ..., α_n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Root {
    coeffs: Vec<i64>,
}

impl Root {
    pub fn from_coeffs(coeffs: Vec<i64>) -> Self {
        Root { coeffs }
    }

    /// The simple root `α_i` in rank `rank`.
    pub fn simple(i: usize, rank: usize) -> Result<Self> {
        if i == 0 || i > rank {
            return Err(Error::InvalidWord { letter: i, rank });
        }
        let mut coeffs = vec![0; rank];
        coeffs[i - 1] = 1;
        Ok(Root { coeffs })
    }

    pub fn rank(&self) -> usize {
        self.coeffs.len()
    }

    /// Coefficients of `α_1, ..., α_n` in order.
    pub fn coeffs(&self) -> &[i64] {
        &self.coeffs
    }

    pub fn height(&self) -> i64 {
        self.coeffs.iter().sum()
    }

    /// Positive roots of `A_n` are `α_a + ... + α_b` for `a <= b`.
    pub fn is_positive(&self) -> bool {
        let support: Vec<usize> = (0..self.coeffs.len())
            .filter(|&i| self.coeffs[i] != 0)
            .collect();
        match (support.first(), support.last()) {
            (Some(&a), Some(&b)) => {
                b - a + 1 == support.len() && support.iter().all(|&i| self.coeffs[i] == 1)
            }
            _ => false,
        }
    }

    /// Applies the simple reflection `s_i`:
    /// `c_i -> c_{i-1} + c_{i+1} - c_i`, other coefficients fixed.
    fn reflect(&mut self, i: usize) {
        let idx = i - 1;
        let left = if idx > 0 { self.coeffs[idx - 1] } else { 0 };
        let right = self.coeffs.get(idx + 1).copied().unwrap_or(0);
        self.coeffs[idx] = left + right - self.coeffs[idx];
    }

    /// Right action of a word: applies `s_{w_1}`, then `s_{w_2}`, and so on.
    pub fn act(&self, w: &Word) -> Result<Root> {
        if w.rank() != self.rank() {
            return Err(Error::RankMismatch {
                left: self.rank(),
                right: w.rank(),
            });
        }
        let mut out = self.clone();
        for &l in w.letters() {
            out.reflect(l);
        }
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn word(rank: usize, letters: &[usize]) -> Word {
        Word::new(rank, letters.to_vec()).unwrap()
    }

    fn brute_inversions(p: &[usize]) -> usize {
        let mut n = 0;
        for a in 0..p.len() {
            for b in 0..p.len() {
                if a < b && p[a] > p[b] {
                    n += 1;
                }
            }
        }
        n
    }

    #[test]
    fn permutations_of_small_words() {
        assert_eq!(word(2, &[]).to_permutation().images(), &[1, 2, 3]);
        assert_eq!(word(2, &[1]).to_permutation().images(), &[2, 1, 3]);
        let p = word(4, &[3, 2, 1, 4, 3]).to_permutation();
        assert_eq!(brute_inversions(p.images()), 5);
    }

    #[test]
    fn invalid_letters_are_rejected() {
        assert_eq!(
            Word::new(2, vec![1, 3]),
            Err(Error::InvalidWord { letter: 3, rank: 2 })
        );
        assert!(matches!(Word::new(2, vec![0]), Err(Error::InvalidWord { .. })));
        assert_eq!(Word::new(0, vec![]), Err(Error::InvalidRank(0)));
    }

    #[test]
    fn reducedness() {
        assert!(word(2, &[1, 2, 1]).is_reduced());
        assert!(!word(2, &[1, 1]).is_reduced());
        assert!(word(4, &[3, 2, 1, 4, 3]).is_reduced());
    }

    #[test]
    fn full_commutativity() {
        assert_eq!(word(2, &[1, 2, 1]).is_fully_commutative(), Ok(false));
        assert_eq!(word(4, &[3, 2, 1, 4, 3]).is_fully_commutative(), Ok(true));
        assert_eq!(word(4, &[2, 4, 3]).is_fully_commutative(), Ok(true));
        assert_eq!(word(2, &[1, 1]).is_fully_commutative(), Err(Error::NotReduced));
        // the braid factor only appears after commuting the 3 past the 1
        assert_eq!(word(3, &[1, 2, 3, 1]).is_fully_commutative(), Ok(false));
    }

    #[test]
    fn commutation_class_of_worked_example() {
        let class = commutation_class(&word(4, &[3, 2, 1, 4, 3]));
        let got: Vec<Vec<usize>> = class.into_iter().map(Word::into_letters).collect();
        assert_eq!(
            got,
            vec![
                vec![3, 2, 1, 4, 3],
                vec![3, 2, 4, 1, 3],
                vec![3, 2, 4, 3, 1],
                vec![3, 4, 2, 1, 3],
                vec![3, 4, 2, 3, 1],
            ]
        );
    }

    #[test]
    fn inverse_and_diagram_reversal() {
        assert_eq!(word(4, &[3, 2, 1, 4, 3]).inverse().letters(), &[3, 4, 1, 2, 3]);
        assert_eq!(word(4, &[2, 4, 3]).reverse_diagram().letters(), &[3, 1, 2]);
        assert!(word(4, &[]).inverse().is_empty());
    }

    #[test]
    fn root_actions() {
        let a2 = Root::simple(2, 5).unwrap();
        let r = a2.act(&word(5, &[1, 3])).unwrap();
        assert_eq!(r.coeffs(), &[1, 1, 1, 0, 0]);
        assert!(r.is_positive());
        assert_eq!(a2.act(&word(5, &[])).unwrap(), a2);

        let a3 = Root::simple(3, 5).unwrap();
        let r = a3.act(&word(5, &[2, 1, 4, 3, 5])).unwrap();
        assert_eq!(r.coeffs(), &[1, 1, 1, 1, 1]);
        assert_eq!(r.height(), 5);

        assert_eq!(Root::simple(1, 2).unwrap().act(&word(2, &[1])).unwrap().coeffs(), &[-1, 0]);
        assert!(matches!(a2.act(&word(4, &[1])), Err(Error::RankMismatch { .. })));
    }

    #[test]
    fn swap_positions_bounds() {
        let w = word(3, &[1, 3]);
        assert_eq!(w.swap_positions(1).unwrap().letters(), &[3, 1]);
        assert!(w.swap_positions(0).is_none());
        assert!(w.swap_positions(2).is_none());
    }

    #[test]
    fn word_json_parsing() {
        let w = Word::from_json("[3,2,1,4,3]", 4).unwrap();
        assert_eq!(w.letters(), &[3, 2, 1, 4, 3]);
        assert_eq!(serde_json::to_string(&w).unwrap(), "[3,2,1,4,3]");
        assert!(Word::from_json("[1,-2]", 4).is_err());
        assert!(Word::from_json("{}", 4).is_err());
    }
}
