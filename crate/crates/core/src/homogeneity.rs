//! Weight graphs, homogeneous words and their components.
//!
//! The weight graph `G_α` has as vertices all words with content `α`;
//! two words are joined when they differ by an admissible transposition,
//! i.e. a swap of adjacent letters that are neither equal nor neighbours.
//! Only the undirected Dynkin diagram enters here, so nothing in this
//! module depends on a quiver orientation.

use std::collections::HashMap;

use serde::Serialize;

use crate::canonical::{canonical_form_of, CanonicalForm};
use crate::coxeter::{are_neighbors, commutation_class, commute, Word};
use crate::error::{Error, Result};

/// Environment variable overriding [`HeightGuard::default`].
pub const HEIGHT_GUARD_ENV: &str = "FC_DYCK_MAX_HEIGHT";

/// Upper bound on the height of contents whose words are enumerated in
/// full. `|<I>_α| <= height!`, so the default of 10 keeps sweeps at
/// desk scale.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct HeightGuard(pub usize);

impl Default for HeightGuard {
    fn default() -> Self {
        HeightGuard(10)
    }
}

impl HeightGuard {
    /// The default guard, overridden by `FC_DYCK_MAX_HEIGHT` when set to an
    /// integer.
    pub fn from_env() -> Self {
        std::env::var(HEIGHT_GUARD_ENV)
            .ok()
            .and_then(|v| v.trim().parse().ok())
            .map(HeightGuard)
            .unwrap_or_default()
    }

    pub fn check(self, height: usize) -> Result<()> {
        if height > self.0 {
            Err(Error::TooLarge {
                height,
                limit: self.0,
            })
        } else {
            Ok(())
        }
    }
}

/// An element `α = Σ c_i α_i` of the positive root lattice.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Content {
    counts: Vec<usize>,
}

impl Content {
    /// `counts[i - 1]` is the multiplicity of letter `i`.
    pub fn new(counts: Vec<usize>) -> Result<Self> {
        if counts.is_empty() {
            return Err(Error::InvalidRank(0));
        }
        Ok(Content { counts })
    }

    pub fn of_word(w: &Word) -> Self {
        let mut counts = vec![0; w.rank()];
        for &l in w.letters() {
            counts[l - 1] += 1;
        }
        Content { counts }
    }

    pub fn rank(&self) -> usize {
        self.counts.len()
    }

    pub fn counts(&self) -> &[usize] {
        &self.counts
    }

    pub fn count(&self, letter: usize) -> usize {
        self.counts.get(letter.wrapping_sub(1)).copied().unwrap_or(0)
    }

    pub fn height(&self) -> usize {
        self.counts.iter().sum()
    }

    /// All words with this content (`<I>_α`), in lexicographic order.
    pub fn words(&self, guard: HeightGuard) -> Result<Vec<Word>> {
        guard.check(self.height())?;
        let mut letters: Vec<usize> = self
            .counts
            .iter()
            .enumerate()
            .flat_map(|(i, &c)| std::iter::repeat_n(i + 1, c))
            .collect();
        let mut out = vec![Word::from_letters_unchecked(self.rank(), letters.clone())];
        while next_permutation(&mut letters) {
            out.push(Word::from_letters_unchecked(self.rank(), letters.clone()));
        }
        Ok(out)
    }

    /// All contents of the given rank and height, in lexicographic order.
    pub fn all_of_height(rank: usize, height: usize) -> Vec<Content> {
        fn fill(prefix: &mut Vec<usize>, rank: usize, left: usize, out: &mut Vec<Content>) {
            if prefix.len() + 1 == rank {
                prefix.push(left);
                out.push(Content {
                    counts: prefix.clone(),
                });
                prefix.pop();
                return;
            }
            for c in 0..=left {
                prefix.push(c);
                fill(prefix, rank, left - c, out);
                prefix.pop();
            }
        }
        let mut out = Vec::new();
        if rank > 0 {
            fill(&mut Vec::with_capacity(rank), rank, height, &mut out);
        }
        out
    }
}

/// Lexicographic successor of a multiset permutation, in place.
fn next_permutation(v: &mut [usize]) -> bool {
    if v.len() < 2 {
        return false;
    }
    let Some(i) = (0..v.len() - 1).rev().find(|&i| v[i] < v[i + 1]) else {
        return false;
    };
    let j = (i + 1..v.len()).rev().find(|&j| v[j] > v[i]).unwrap();
    v.swap(i, j);
    v[i + 1..].reverse();
    true
}

/// Every two consecutive occurrences of a letter must enclose at least
/// two occurrences of its neighbours.
pub fn is_homogeneous_word(w: &Word) -> bool {
    let letters = w.letters();
    let mut last_seen: HashMap<usize, usize> = HashMap::new();
    for (s, &l) in letters.iter().enumerate() {
        if let Some(&r) = last_seen.get(&l) {
            let between = letters[r + 1..s]
                .iter()
                .filter(|&&x| are_neighbors(x, l))
                .count();
            if between < 2 {
                return false;
            }
        }
        last_seen.insert(l, s);
    }
    true
}

/// Positions `r` (1-based) where `s_r` is an admissible transposition.
pub fn admissible_positions(w: &Word) -> Vec<usize> {
    w.letters()
        .windows(2)
        .enumerate()
        .filter(|(_, p)| commute(p[0], p[1]))
        .map(|(r, _)| r + 1)
        .collect()
}

/// A homogeneous component: the reduced words of one fully commutative
/// element, sorted lexicographically.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Component {
    canonical: CanonicalForm,
    words: Vec<Word>,
}

impl Component {
    pub fn canonical(&self) -> &CanonicalForm {
        &self.canonical
    }

    pub fn words(&self) -> &[Word] {
        &self.words
    }

    pub fn rank(&self) -> usize {
        self.canonical.rank()
    }

    pub fn len(&self) -> usize {
        self.words.len()
    }

    pub fn is_empty(&self) -> bool {
        self.words.is_empty()
    }

    pub fn content(&self) -> Content {
        Content::of_word(&self.words[0])
    }

    pub fn contains(&self, w: &Word) -> bool {
        self.words.binary_search(w).is_ok()
    }

    pub fn index_of(&self, w: &Word) -> Option<usize> {
        self.words.binary_search(w).ok()
    }
}

/// Closure of a homogeneous word under admissible transpositions.
pub fn component_of(w: &Word) -> Result<Component> {
    if !is_homogeneous_word(w) {
        return Err(Error::NotHomogeneous);
    }
    let canonical = canonical_form_of(w).map_err(|_| Error::NotHomogeneous)?;
    Ok(Component {
        canonical,
        words: commutation_class(w),
    })
}

/// A connected component of a weight graph.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct WeightComponent {
    pub words: Vec<Word>,
    pub homogeneous: bool,
}

/// Partitions `<I>_α` into connected components of `G_α`, ordered by their
/// smallest word.
pub fn weight_graph_components(content: &Content, guard: HeightGuard) -> Result<Vec<WeightComponent>> {
    let words = content.words(guard)?;
    let mut assigned = vec![false; words.len()];
    let mut out = Vec::new();
    for (idx, w) in words.iter().enumerate() {
        if assigned[idx] {
            continue;
        }
        let class = commutation_class(w);
        for member in &class {
            let pos = words.binary_search(member).expect("class stays inside <I>_α");
            assigned[pos] = true;
        }
        let homogeneous = is_homogeneous_word(&class[0]);
        out.push(WeightComponent {
            words: class,
            homogeneous,
        });
    }
    Ok(out)
}
