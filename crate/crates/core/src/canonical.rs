//! Decreasing segments `T_i^m = [m, m-1, ..., i]` and canonical
//! factorisations built from them.
//!
//! Every element of `S_{n+1}` factors uniquely as `T^1_{i_1} T^2_{i_2} ...
//! T^n_{i_n}` with `1 <= i_j <= j + 1` ([`NormalForm`]). For a fully
//! commutative element, dropping the empty factors leaves a product
//! `T_{i_1}^{m_1} ... T_{i_l}^{m_l}` whose `i`s and `m`s both increase
//! strictly ([`CanonicalForm`]).

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::coxeter::{class_avoids_braids, commutation_class, Word};
use crate::error::{Error, Result};

/// The non-empty decreasing run `[m, m-1, ..., i]`.
#[allow(clippy::len_without_is_empty)]
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Segment {
    i: usize,
    m: usize,
}

impl Segment {
    pub fn new(i: usize, m: usize) -> Result<Self> {
        if i == 0 || i > m {
            return Err(Error::InvalidSegment { i, m });
        }
        Ok(Segment { i, m })
    }

    /// Bottom (last) letter of the run.
    pub fn i(&self) -> usize {
        self.i
    }

    /// Top (first) letter of the run.
    pub fn m(&self) -> usize {
        self.m
    }

    pub fn len(&self) -> usize {
        self.m - self.i + 1
    }

    pub fn letters(&self) -> impl Iterator<Item = usize> {
        (self.i..=self.m).rev()
    }

    pub fn to_word(&self, rank: usize) -> Result<Word> {
        Word::new(rank, self.letters().collect())
    }

    /// Letters concatenated, e.g. `"321"`; comma separated once any letter
    /// has more than one digit.
    pub fn label(&self) -> String {
        let parts: Vec<String> = self.letters().map(|l| l.to_string()).collect();
        if self.m >= 10 {
            parts.join(",")
        } else {
            parts.concat()
        }
    }
}

impl fmt::Display for Segment {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "T_{}^{}", self.i, self.m)
    }
}

/// `T_{i_1}^{m_1} ... T_{i_l}^{m_l}` with `i_1 < ... < i_l`,
/// `m_1 < ... < m_l` and every `m_j <= rank`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalForm {
    rank: usize,
    segments: Vec<Segment>,
}

impl CanonicalForm {
    pub fn new(rank: usize, segments: Vec<Segment>) -> Result<Self> {
        if rank == 0 {
            return Err(Error::InvalidRank(rank));
        }
        for s in &segments {
            if s.m > rank {
                return Err(Error::InvalidCanonicalForm(format!(
                    "{s} exceeds rank {rank}"
                )));
            }
        }
        for pair in segments.windows(2) {
            if pair[0].i >= pair[1].i || pair[0].m >= pair[1].m {
                return Err(Error::InvalidCanonicalForm(format!(
                    "{} {} are not strictly increasing",
                    pair[0], pair[1]
                )));
            }
        }
        Ok(CanonicalForm { rank, segments })
    }

    /// Convenience constructor from `(i, m)` pairs.
    pub fn from_pairs(rank: usize, pairs: &[(usize, usize)]) -> Result<Self> {
        let segments = pairs
            .iter()
            .map(|&(i, m)| Segment::new(i, m))
            .collect::<Result<Vec<_>>>()?;
        CanonicalForm::new(rank, segments)
    }

    pub fn identity(rank: usize) -> Result<Self> {
        CanonicalForm::new(rank, Vec::new())
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn segments(&self) -> &[Segment] {
        &self.segments
    }

    /// Total number of letters, i.e. the Coxeter length of the element.
    pub fn length(&self) -> usize {
        self.segments.iter().map(Segment::len).sum()
    }

    pub fn to_word(&self) -> Word {
        let letters = self.segments.iter().flat_map(Segment::letters).collect();
        Word::from_letters_unchecked(self.rank, letters)
    }

    pub fn pairs(&self) -> Vec<(usize, usize)> {
        self.segments.iter().map(|s| (s.i, s.m)).collect()
    }
}

impl fmt::Display for CanonicalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.segments.is_empty() {
            return write!(f, "e");
        }
        for (idx, s) in self.segments.iter().enumerate() {
            if idx > 0 {
                write!(f, " ")?;
            }
            write!(f, "{s}")?;
        }
        Ok(())
    }
}

#[derive(Serialize, Deserialize)]
struct CanonicalFormJson {
    rank: usize,
    segments: Vec<[usize; 2]>,
}

impl Serialize for CanonicalForm {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        CanonicalFormJson {
            rank: self.rank,
            segments: self.segments.iter().map(|s| [s.i, s.m]).collect(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for CanonicalForm {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let raw = CanonicalFormJson::deserialize(deserializer)?;
        let pairs: Vec<(usize, usize)> = raw.segments.iter().map(|p| (p[0], p[1])).collect();
        CanonicalForm::from_pairs(raw.rank, &pairs).map_err(serde::de::Error::custom)
    }
}

/// The factorisation `T^1_{i_1} ... T^n_{i_n}` of an arbitrary element,
/// stored as the indices `i_1..i_n`. Index `i_j = j + 1` marks the empty
/// factor.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct NormalForm {
    rank: usize,
    indices: Vec<usize>,
}

impl NormalForm {
    pub fn new(rank: usize, indices: Vec<usize>) -> Result<Self> {
        if rank == 0 {
            return Err(Error::InvalidRank(rank));
        }
        if indices.len() != rank {
            return Err(Error::IndexOutOfRange(format!(
                "expected {rank} indices, got {}",
                indices.len()
            )));
        }
        for (j, &i) in (1..).zip(&indices) {
            if i == 0 || i > j + 1 {
                return Err(Error::IndexOutOfRange(format!("i_{j} = {i}")));
            }
        }
        Ok(NormalForm { rank, indices })
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn indices(&self) -> &[usize] {
        &self.indices
    }

    /// The non-empty factors `T^j_{i_j}` in order.
    pub fn segments(&self) -> Vec<Segment> {
        (1..)
            .zip(&self.indices)
            .filter(|&(j, &i)| i <= j)
            .map(|(j, &i)| Segment { i, m: j })
            .collect()
    }

    pub fn to_word(&self) -> Word {
        let letters = self.segments().iter().flat_map(Segment::letters).collect();
        Word::from_letters_unchecked(self.rank, letters)
    }
}

/// Factors the element represented by `w` (any word) as
/// `T^1_{i_1} ... T^n_{i_n}`.
///
/// Peels factors off the right: in the one-line notation of
/// `q T^j_{i}` with `q` fixing `j + 1`, the value `j + 1` sits at
/// position `i`.
pub fn general_normal_form(w: &Word) -> NormalForm {
    let rank = w.rank();
    let mut images = w.to_permutation().images().to_vec();
    let mut indices = vec![0; rank];
    for j in (1..=rank).rev() {
        let pos = images
            .iter()
            .position(|&v| v == j + 1)
            .expect("permutation contains every value");
        debug_assert!(pos <= j);
        indices[j - 1] = pos + 1;
        for p in pos..j {
            images.swap(p, p + 1);
        }
    }
    NormalForm { rank, indices }
}

/// The canonical form of the fully commutative element with reduced word
/// `w`.
///
/// The form is read off [`general_normal_form`] and then certified: it
/// must satisfy the [`CanonicalForm`] invariants and its flattening must
/// lie in the commutation class of `w`.
pub fn canonical_form_of(w: &Word) -> Result<CanonicalForm> {
    if !w.is_reduced() {
        return Err(Error::NotReduced);
    }
    let class = commutation_class(w);
    if !class_avoids_braids(&class) {
        return Err(Error::NotFullyCommutative);
    }
    let form = CanonicalForm::new(w.rank(), general_normal_form(w).segments())
        .map_err(|_| Error::NotFullyCommutative)?;
    let flat = form.to_word();
    if class.binary_search(&flat).is_err() {
        return Err(Error::NotFullyCommutative);
    }
    Ok(form)
}

/// All canonical forms of rank `rank` with exactly `length` letters, in
/// lexicographic order of their `(i, m)` sequences.
pub fn enumerate_fc(rank: usize, length: usize) -> Vec<CanonicalForm> {
    let mut out = Vec::new();
    if rank == 0 {
        return out;
    }
    let mut stack = Vec::new();
    extend_forms(rank, length, 0, 0, &mut stack, &mut out);
    out
}

fn extend_forms(
    rank: usize,
    remaining: usize,
    last_i: usize,
    last_m: usize,
    stack: &mut Vec<Segment>,
    out: &mut Vec<CanonicalForm>,
) {
    if remaining == 0 {
        out.push(CanonicalForm {
            rank,
            segments: stack.clone(),
        });
        return;
    }
    for i in last_i + 1..=rank {
        let lo = i.max(last_m + 1);
        for m in lo..=rank {
            let len = m - i + 1;
            if len > remaining {
                break;
            }
            stack.push(Segment { i, m });
            extend_forms(rank, remaining - len, i, m, stack, out);
            stack.pop();
        }
    }
}
