//! Dimensions of homogeneous modules, i.e. reduced-word counts of fully
//! commutative elements, read off Dyck paths.
//!
//! Each square peak `T_{i}^{m}` of a path owns an *extended ascent*: the
//! diagonal from its apex down to the axis point `(2i - 2, 0)`. The blocks
//! `T_i^i, ..., T_i^m` on that diagonal each get a hook value `p_D(i, j)`
//! from a lattice subpath, and when no ascent away from the axis is longer
//! than one step the dimension is `k! / Π p_D(i, j)`.

use std::fmt;

use num_bigint::BigUint;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::bijection::{apex_of_segment, phi, psi, segment_of_peak, PeakBlock};
use crate::canonical::{canonical_form_of, CanonicalForm};
use crate::coxeter::{are_neighbors, Root, Word};
use crate::dyck::{DyckPath, Step};
use crate::error::{Error, Result};
use crate::homogeneity::component_of;

fn factorial(n: usize) -> BigUint {
    (1..=n).fold(BigUint::one(), |acc, i| acc * BigUint::from(i))
}

/// A block `T_i^m` lying on the extended ascent of square peak `owner`
/// (0-based among the square peaks, left to right).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct AscentBlock {
    pub i: usize,
    pub m: usize,
    pub owner: usize,
}

/// Extended ascent of a square peak: the diagonal `x - y = foot` for
/// `0 <= y <= apex_height`.
#[derive(Debug, Clone, Copy)]
struct Diagonal {
    i: usize,
    m: usize,
    foot: usize,
    apex_height: usize,
}

fn diagonals(d: &DyckPath) -> Vec<Diagonal> {
    d.peaks()
        .into_iter()
        .filter_map(|p| match segment_of_peak(p) {
            Ok(PeakBlock::Square(s)) => {
                let apex = apex_of_segment(s);
                Some(Diagonal {
                    i: s.i(),
                    m: s.m(),
                    foot: apex.position - apex.height,
                    apex_height: apex.height,
                })
            }
            _ => None,
        })
        .collect()
}

pub fn extended_ascent_blocks(d: &DyckPath) -> Vec<AscentBlock> {
    diagonals(d)
        .iter()
        .enumerate()
        .flat_map(|(owner, diag)| (diag.i..=diag.m).map(move |m| AscentBlock { i: diag.i, m, owner }))
        .collect()
}

/// The lattice path `P_D(i, m)`, starting on the axis at `start`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Subpath {
    pub start: usize,
    pub steps: Vec<Step>,
}

impl Subpath {
    pub fn ascent_steps(&self) -> usize {
        self.steps.iter().filter(|&&s| s == Step::Up).count()
    }
}

impl fmt::Display for Subpath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "@{}:", self.start)?;
        for s in &self.steps {
            write!(f, "{}", s.as_char())?;
        }
        Ok(())
    }
}

/// Builds `P_D(i, m)`: climb from the foot of the owning diagonal to the
/// top of block `T_i^m`, then descend; each time the descent lands on
/// another extended ascent strictly below its apex, take one step up and
/// keep descending. Reaching the axis ends the path, even when the axis
/// point is also the foot of a diagonal.
pub fn subpath_pd(d: &DyckPath, i: usize, m: usize) -> Result<Subpath> {
    let diags = diagonals(d);
    let owner = diags
        .iter()
        .position(|g| g.i == i && (g.i..=g.m).contains(&m))
        .ok_or(Error::BlockNotOnAscent { i, m })?;
    let start = diags[owner].foot;
    let top = m - i + 2;
    let mut steps = vec![Step::Up; top];
    let (mut x, mut y) = (start + top, top);
    let limit = 2 * d.steps().len() + 2;
    while y > 0 {
        steps.push(Step::Down);
        x += 1;
        y -= 1;
        if y == 0 {
            break;
        }
        let hit = diags
            .iter()
            .enumerate()
            .any(|(j, g)| j != owner && x - y == g.foot && y < g.apex_height);
        if hit {
            steps.push(Step::Up);
            x += 1;
            y += 1;
        }
        assert!(steps.len() <= limit, "subpath of {d} at T_{i}^{m} does not terminate");
    }
    Ok(Subpath { start, steps })
}

/// `p_D(i, m)`: ascent steps of `P_D(i, m)` minus one.
pub fn p_value(d: &DyckPath, i: usize, m: usize) -> Result<usize> {
    Ok(subpath_pd(d, i, m)?.ascent_steps() - 1)
}

/// Height of the positive root `α_n T_{i_k}^{n-1} T_{i_{k+1}}^{m_{k+1}} ...
/// T_{i_l}^{m_l}` (right action), computed by reflecting explicitly.
/// `k_index` is 1-based.
pub fn p_value_oracle(c: &CanonicalForm, k_index: usize, letter: usize) -> Result<i64> {
    let segs = c.segments();
    if k_index == 0 || k_index > segs.len() {
        return Err(Error::IndexOutOfRange(format!(
            "segment index {k_index} not in 1..={}",
            segs.len()
        )));
    }
    let own = segs[k_index - 1];
    if letter < own.i() || letter > own.m() {
        return Err(Error::IndexOutOfRange(format!(
            "letter {letter} not in {}..={}",
            own.i(),
            own.m()
        )));
    }
    let mut letters: Vec<usize> = (own.i()..letter).rev().collect();
    for s in &segs[k_index..] {
        letters.extend(s.letters());
    }
    let w = Word::new(c.rank(), letters)?;
    let beta = Root::simple(letter, c.rank())?.act(&w)?;
    debug_assert!(beta.is_positive());
    Ok(beta.height())
}

/// No rise away from the axis is longer than one step.
pub fn satisfies_ascent_condition(d: &DyckPath) -> bool {
    let heights = d.heights();
    let steps = d.steps();
    let mut x = 0;
    while x < steps.len() {
        if steps[x] == Step::Up {
            let begin = x;
            while x < steps.len() && steps[x] == Step::Up {
                x += 1;
            }
            if heights[begin] > 0 && x - begin > 1 {
                return false;
            }
        } else {
            x += 1;
        }
    }
    true
}

/// Stembridge's criterion on a reduced word: consecutive occurrences of
/// each letter enclose exactly two non-commuting letters, and the last
/// occurrence is followed by at most one.
pub fn is_dominant_minuscule(w: &Word) -> Result<bool> {
    if !w.is_reduced() {
        return Err(Error::NotReduced);
    }
    let letters = w.letters();
    for g in 1..=w.rank() {
        let positions: Vec<usize> = (0..letters.len()).filter(|&p| letters[p] == g).collect();
        let blocking = |range: &[usize]| range.iter().filter(|&&x| are_neighbors(x, g)).count();
        for pair in positions.windows(2) {
            if blocking(&letters[pair[0] + 1..pair[1]]) != 2 {
                return Ok(false);
            }
        }
        if let Some(&last) = positions.last() {
            if blocking(&letters[last + 1..]) > 1 {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum DimensionMethod {
    Formula,
    Reverse,
    Inverse,
    Exhaustive,
}

impl fmt::Display for DimensionMethod {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            DimensionMethod::Formula => "formula",
            DimensionMethod::Reverse => "reverse",
            DimensionMethod::Inverse => "inverse",
            DimensionMethod::Exhaustive => "exhaustive",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct PValue {
    pub i: usize,
    pub m: usize,
    pub p: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DimensionResult {
    #[serde(serialize_with = "as_decimal")]
    pub value: BigUint,
    pub method: DimensionMethod,
    /// Hook values of the path the formula was applied to; empty for
    /// exhaustive counts.
    pub p_values: Vec<PValue>,
}

fn as_decimal<S: serde::Serializer>(v: &BigUint, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&v.to_str_radix(10))
}

/// `k! / Π p_D(i, j)` when `d` satisfies the ascent condition.
pub fn formula_dimension(d: &DyckPath) -> Option<(BigUint, Vec<PValue>)> {
    if !satisfies_ascent_condition(d) {
        return None;
    }
    let p_values: Vec<PValue> = extended_ascent_blocks(d)
        .into_iter()
        .map(|b| PValue {
            i: b.i,
            m: b.m,
            p: p_value(d, b.i, b.m).expect("block comes from the path's own ascents"),
        })
        .collect();
    let denominator = p_values
        .iter()
        .fold(BigUint::one(), |acc, pv| acc * BigUint::from(pv.p));
    let numerator = factorial(d.statistic_k());
    assert!(
        (&numerator % &denominator).is_zero(),
        "hook product {denominator} does not divide k! for {d}"
    );
    Some((numerator / denominator, p_values))
}

/// The path of the inverse element of `psi(d)`.
pub fn inverse_path(d: &DyckPath) -> Result<DyckPath> {
    let inv = psi(d)?.to_word().inverse();
    Ok(phi(&canonical_form_of(&inv)?))
}

fn exhaustive_dimension(d: &DyckPath) -> Result<BigUint> {
    let w = psi(d)?.to_word();
    Ok(BigUint::from(component_of(&w)?.len()))
}

/// Dimension of the homogeneous module of `psi(d)`.
///
/// Strategies are tried in a fixed order: the hook formula on `d`, on its
/// mirror image, on the path of the inverse element, and finally counting
/// the component word by word.
pub fn dimension(d: &DyckPath) -> Result<DimensionResult> {
    // rejects paths of semilength < 2, which have no rank
    psi(d)?;
    if let Some((value, p_values)) = formula_dimension(d) {
        return Ok(DimensionResult {
            value,
            method: DimensionMethod::Formula,
            p_values,
        });
    }
    if let Some((value, p_values)) = formula_dimension(&d.reversed()) {
        return Ok(DimensionResult {
            value,
            method: DimensionMethod::Reverse,
            p_values,
        });
    }
    if let Some((value, p_values)) = formula_dimension(&inverse_path(d)?) {
        return Ok(DimensionResult {
            value,
            method: DimensionMethod::Inverse,
            p_values,
        });
    }
    Ok(DimensionResult {
        value: exhaustive_dimension(d)?,
        method: DimensionMethod::Exhaustive,
        p_values: Vec::new(),
    })
}

/// Values produced by every strategy that applies to `d`, in strategy
/// order. The exhaustive count is always present.
pub fn all_strategy_values(d: &DyckPath) -> Result<Vec<(DimensionMethod, BigUint)>> {
    let mut out = Vec::new();
    if let Some((v, _)) = formula_dimension(d) {
        out.push((DimensionMethod::Formula, v));
    }
    if let Some((v, _)) = formula_dimension(&d.reversed()) {
        out.push((DimensionMethod::Reverse, v));
    }
    if let Some((v, _)) = formula_dimension(&inverse_path(d)?) {
        out.push((DimensionMethod::Inverse, v));
    }
    out.push((DimensionMethod::Exhaustive, exhaustive_dimension(d)?));
    Ok(out)
}
