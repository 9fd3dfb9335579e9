//! Homogeneous modules over type-`A` KLR algebras as explicit integer
//! matrices, and a checker for the defining relations of `R_α`.
//!
//! For a homogeneous component `C` the module `S(C)` has basis
//! `{v_w : w ∈ C}`; `e(w')` projects onto `v_{w'}`, every `y_r` acts as
//! zero, and `ψ_r` sends `v_w` to `v_{s_r w}` when that word is in `C` and
//! to zero otherwise. All structure constants are 0 or 1, so checking the
//! relations over the integers checks them over every field.

use std::collections::VecDeque;
use std::fmt;
use std::str::FromStr;

use nalgebra::DMatrix;
use serde::Serialize;

use crate::canonical::enumerate_fc;
use crate::coxeter::{are_neighbors, Word};
use crate::error::{Error, Result};
use crate::homogeneity::{component_of, is_homogeneous_word, Component, HeightGuard};

pub type Operator = DMatrix<i64>;

/// A type-`A_n` quiver: the path `1 - 2 - ... - n` with each edge
/// `{i, i + 1}` directed one way or the other.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Quiver {
    rank: usize,
    /// `forward[i - 1]` means the edge is `i -> i + 1`.
    forward: Vec<bool>,
}

impl Quiver {
    /// All edges `i -> i + 1`.
    pub fn forward(rank: usize) -> Self {
        Quiver {
            rank,
            forward: vec![true; rank.saturating_sub(1)],
        }
    }

    /// All edges `i + 1 -> i`.
    pub fn backward(rank: usize) -> Self {
        Quiver {
            rank,
            forward: vec![false; rank.saturating_sub(1)],
        }
    }

    /// Parses `forward`, `backward`, or one `>`/`<` per edge (`>` is
    /// `i -> i + 1`).
    pub fn parse(rank: usize, spec: &str) -> Result<Self> {
        match spec.trim() {
            "forward" | "fwd" => Ok(Quiver::forward(rank)),
            "backward" | "bwd" => Ok(Quiver::backward(rank)),
            arrows => {
                let forward = arrows
                    .chars()
                    .map(|c| match c {
                        '>' => Ok(true),
                        '<' => Ok(false),
                        other => Err(Error::InvalidOrientation(format!("unexpected {other:?}"))),
                    })
                    .collect::<Result<Vec<_>>>()?;
                if forward.len() != rank.saturating_sub(1) {
                    return Err(Error::InvalidOrientation(format!(
                        "rank {rank} needs {} arrows, got {}",
                        rank.saturating_sub(1),
                        forward.len()
                    )));
                }
                Ok(Quiver { rank, forward })
            }
        }
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    /// `true` when there is an arrow `a -> b`.
    pub fn arrow(&self, a: usize, b: usize) -> bool {
        if b == a + 1 {
            self.forward[a - 1]
        } else if a == b + 1 {
            !self.forward[b - 1]
        } else {
            false
        }
    }

    pub fn neighbors(&self, a: usize, b: usize) -> bool {
        are_neighbors(a, b)
    }
}

impl fmt::Display for Quiver {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for &fw in &self.forward {
            f.write_str(if fw { ">" } else { "<" })?;
        }
        Ok(())
    }
}

impl FromStr for Quiver {
    type Err = Error;

    /// Arrow strings only; the rank is one more than the number of arrows.
    fn from_str(s: &str) -> Result<Self> {
        Quiver::parse(s.trim().chars().count() + 1, s)
    }
}

/// Degree of `ψ_r e(w)`.
pub fn psi_degree(w: &Word, r: usize, q: &Quiver) -> i32 {
    let (a, b) = (w.letters()[r - 1], w.letters()[r]);
    if a == b {
        -2
    } else if q.neighbors(a, b) {
        1
    } else {
        0
    }
}

/// The action of `R_α` on `S(C)`.
#[derive(Debug, Clone)]
pub struct ModuleAction {
    basis: Vec<Word>,
    height: usize,
    psi: Vec<Operator>,
    y: Vec<Operator>,
}

impl ModuleAction {
    pub fn basis(&self) -> &[Word] {
        &self.basis
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    /// Length of the words, `d = ht(α)`.
    pub fn height(&self) -> usize {
        self.height
    }

    /// `e(w)`, for any word `w` of the right content.
    pub fn e(&self, w: &Word) -> Operator {
        let mut m = Operator::zeros(self.dim(), self.dim());
        if let Ok(idx) = self.basis.binary_search(w) {
            m[(idx, idx)] = 1;
        }
        m
    }

    /// `ψ_r` for `1 <= r < d`.
    pub fn psi(&self, r: usize) -> &Operator {
        &self.psi[r - 1]
    }

    /// `y_r` for `1 <= r <= d`.
    pub fn y(&self, r: usize) -> &Operator {
        &self.y[r - 1]
    }

    /// Replaces `ψ_r`; used to build deliberately broken actions.
    pub fn with_psi(mut self, r: usize, op: Operator) -> Self {
        self.psi[r - 1] = op;
        self
    }

    pub fn identity(&self) -> Operator {
        Operator::identity(self.dim(), self.dim())
    }

    /// Whether the `ψ` operators connect every pair of basis lines.
    pub fn acts_transitively(&self) -> bool {
        let d = self.dim();
        if d == 0 {
            return true;
        }
        let mut seen = vec![false; d];
        let mut queue = VecDeque::from([0usize]);
        seen[0] = true;
        while let Some(col) = queue.pop_front() {
            for op in &self.psi {
                for row in 0..d {
                    if op[(row, col)] != 0 && !seen[row] {
                        seen[row] = true;
                        queue.push_back(row);
                    }
                }
            }
        }
        seen.into_iter().all(|s| s)
    }
}

pub fn build_module(c: &Component, q: &Quiver) -> Result<ModuleAction> {
    if c.rank() != q.rank() {
        return Err(Error::RankMismatch {
            left: c.rank(),
            right: q.rank(),
        });
    }
    if !c.words().iter().all(is_homogeneous_word) {
        return Err(Error::NotHomogeneous);
    }
    let basis = c.words().to_vec();
    let dim = basis.len();
    let height = basis[0].len();
    let psi = (1..height)
        .map(|r| {
            let mut m = Operator::zeros(dim, dim);
            for (col, w) in basis.iter().enumerate() {
                let swapped = w.swap_positions(r).expect("r < height");
                if let Ok(row) = basis.binary_search(&swapped) {
                    m[(row, col)] = 1;
                }
            }
            m
        })
        .collect();
    let y = (0..height).map(|_| Operator::zeros(dim, dim)).collect();
    Ok(ModuleAction {
        basis,
        height,
        psi,
        y,
    })
}

/// The ten relation families, in the order they are usually displayed.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Relation {
    Idempotents,
    YIdempotent,
    PsiIdempotent,
    YCommute,
    YPsiCommute,
    YPsiLeft,
    YPsiRight,
    PsiSquare,
    PsiCommute,
    Braid,
}

impl Relation {
    pub const ALL: [Relation; 10] = [
        Relation::Idempotents,
        Relation::YIdempotent,
        Relation::PsiIdempotent,
        Relation::YCommute,
        Relation::YPsiCommute,
        Relation::YPsiLeft,
        Relation::YPsiRight,
        Relation::PsiSquare,
        Relation::PsiCommute,
        Relation::Braid,
    ];

    pub fn id(self) -> &'static str {
        match self {
            Relation::Idempotents => "1.1",
            Relation::YIdempotent => "1.2",
            Relation::PsiIdempotent => "1.3",
            Relation::YCommute => "1.4",
            Relation::YPsiCommute => "1.5",
            Relation::YPsiLeft => "1.6",
            Relation::YPsiRight => "1.7",
            Relation::PsiSquare => "1.8",
            Relation::PsiCommute => "1.9",
            Relation::Braid => "1.10",
        }
    }

    pub fn statement(self) -> &'static str {
        match self {
            Relation::Idempotents => "e(w)e(v) = δ e(w), Σ e(w) = 1",
            Relation::YIdempotent => "y_k e(w) = e(w) y_k",
            Relation::PsiIdempotent => "ψ_k e(w) = e(s_k w) ψ_k",
            Relation::YCommute => "y_k y_l = y_l y_k",
            Relation::YPsiCommute => "y_k ψ_l = ψ_l y_k (k ≠ l, l+1)",
            Relation::YPsiLeft => "(y_{k+1}ψ_k − ψ_k y_k) e(w) = [w_k = w_{k+1}] e(w)",
            Relation::YPsiRight => "(ψ_k y_{k+1} − y_k ψ_k) e(w) = [w_k = w_{k+1}] e(w)",
            Relation::PsiSquare => "ψ_k² e(w) = 0 | ±(y_k − y_{k+1}) e(w) | e(w)",
            Relation::PsiCommute => "ψ_k ψ_l = ψ_l ψ_k (|k − l| > 1)",
            Relation::Braid => "(ψ_{k+1}ψ_kψ_{k+1} − ψ_kψ_{k+1}ψ_k) e(w) = ±e(w) | 0",
        }
    }
}

impl fmt::Display for Relation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.id())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RelationOutcome {
    pub relation: Relation,
    pub id: &'static str,
    pub checks: usize,
    pub failures: usize,
    /// First failing instance, if any.
    pub witness: Option<String>,
}

impl RelationOutcome {
    pub fn passed(&self) -> bool {
        self.failures == 0
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RelationReport {
    pub outcomes: Vec<RelationOutcome>,
}

impl RelationReport {
    pub fn passed(&self) -> bool {
        self.outcomes.iter().all(RelationOutcome::passed)
    }

    pub fn outcome(&self, r: Relation) -> &RelationOutcome {
        self.outcomes
            .iter()
            .find(|o| o.relation == r)
            .expect("every relation is reported")
    }

    pub fn failed(&self) -> Vec<Relation> {
        self.outcomes
            .iter()
            .filter(|o| !o.passed())
            .map(|o| o.relation)
            .collect()
    }
}

struct Tally {
    outcome: RelationOutcome,
}

impl Tally {
    fn new(relation: Relation) -> Self {
        Tally {
            outcome: RelationOutcome {
                relation,
                id: relation.id(),
                checks: 0,
                failures: 0,
                witness: None,
            },
        }
    }

    fn check(&mut self, ok: bool, witness: impl FnOnce() -> String) {
        self.outcome.checks += 1;
        if !ok {
            self.outcome.failures += 1;
            if self.outcome.witness.is_none() {
                self.outcome.witness = Some(witness());
            }
        }
    }
}

/// Checks every relation family of `R_α` on `module`, for every index and
/// every word `w` in `words` (normally all of `<I>_α`).
pub fn check_relations(module: &ModuleAction, q: &Quiver, words: &[Word]) -> RelationReport {
    let d = module.height();
    let id = module.identity();
    let zero = Operator::zeros(module.dim(), module.dim());
    let es: Vec<Operator> = words.iter().map(|w| module.e(w)).collect();
    let mut outcomes = Vec::with_capacity(10);

    let mut t = Tally::new(Relation::Idempotents);
    for (a, ea) in es.iter().enumerate() {
        for (b, eb) in es.iter().enumerate() {
            let expected = if a == b { ea } else { &zero };
            t.check(&(ea * eb) == expected, || format!("w={} v={}", words[a], words[b]));
        }
    }
    let total = es.iter().fold(zero.clone(), |acc, e| acc + e);
    t.check(total == id, || "Σ e(w) ≠ 1".to_string());
    outcomes.push(t.outcome);

    let mut t = Tally::new(Relation::YIdempotent);
    for k in 1..=d {
        for (w, e) in words.iter().zip(&es) {
            t.check(module.y(k) * e == e * module.y(k), || format!("k={k} w={w}"));
        }
    }
    outcomes.push(t.outcome);

    let mut t = Tally::new(Relation::PsiIdempotent);
    for k in 1..d {
        for (w, e) in words.iter().zip(&es) {
            let swapped = w.swap_positions(k).expect("k < d");
            let rhs = module.e(&swapped) * module.psi(k);
            t.check(module.psi(k) * e == rhs, || format!("k={k} w={w}"));
        }
    }
    outcomes.push(t.outcome);

    let mut t = Tally::new(Relation::YCommute);
    for k in 1..=d {
        for l in 1..=d {
            t.check(module.y(k) * module.y(l) == module.y(l) * module.y(k), || {
                format!("k={k} l={l}")
            });
        }
    }
    outcomes.push(t.outcome);

    let mut t = Tally::new(Relation::YPsiCommute);
    for k in 1..=d {
        for l in 1..d {
            if k == l || k == l + 1 {
                continue;
            }
            t.check(module.y(k) * module.psi(l) == module.psi(l) * module.y(k), || {
                format!("k={k} l={l}")
            });
        }
    }
    outcomes.push(t.outcome);

    let mut left = Tally::new(Relation::YPsiLeft);
    let mut right = Tally::new(Relation::YPsiRight);
    let mut square = Tally::new(Relation::PsiSquare);
    for k in 1..d {
        let (psi, yk, yk1) = (module.psi(k), module.y(k), module.y(k + 1));
        for (w, e) in words.iter().zip(&es) {
            let (a, b) = (w.letters()[k - 1], w.letters()[k]);
            let expected = if a == b { e.clone() } else { zero.clone() };
            let lhs = (yk1 * psi - psi * yk) * e;
            left.check(lhs == expected, || format!("k={k} w={w}"));
            let lhs = (psi * yk1 - yk * psi) * e;
            right.check(lhs == expected, || format!("k={k} w={w}"));

            let expected = if a == b {
                zero.clone()
            } else if q.arrow(a, b) {
                (yk - yk1) * e
            } else if q.arrow(b, a) {
                (yk1 - yk) * e
            } else {
                e.clone()
            };
            square.check(psi * psi * e == expected, || format!("k={k} w={w}"));
        }
    }
    outcomes.push(left.outcome);
    outcomes.push(right.outcome);
    outcomes.push(square.outcome);

    let mut t = Tally::new(Relation::PsiCommute);
    for k in 1..d {
        for l in 1..d {
            if k.abs_diff(l) > 1 {
                t.check(module.psi(k) * module.psi(l) == module.psi(l) * module.psi(k), || {
                    format!("k={k} l={l}")
                });
            }
        }
    }
    outcomes.push(t.outcome);

    let mut t = Tally::new(Relation::Braid);
    for k in 1..d.saturating_sub(1) {
        let (p, p1) = (module.psi(k), module.psi(k + 1));
        let braid = p1 * p * p1 - p * p1 * p;
        for (w, e) in words.iter().zip(&es) {
            let l = w.letters();
            let (a, b, c) = (l[k - 1], l[k], l[k + 1]);
            let expected = if c == a && q.arrow(a, b) {
                e.clone()
            } else if c == a && q.arrow(b, a) {
                -e
            } else {
                zero.clone()
            };
            t.check(&braid * e == expected, || format!("k={k} w={w}"));
        }
    }
    outcomes.push(t.outcome);

    RelationReport { outcomes }
}

/// Builds `S(C)` for `q` and checks every relation against all of `<I>_α`.
pub fn verify_relations(c: &Component, q: &Quiver, guard: HeightGuard) -> Result<RelationReport> {
    let content = c.content();
    guard.check(content.height())?;
    let module = build_module(c, q)?;
    let words = content.words(guard)?;
    Ok(check_relations(&module, q, &words))
}

/// Every `ψ_r` that keeps a basis vector inside `S(C)` has degree 0.
pub fn verify_single_degree(c: &Component, q: &Quiver) -> bool {
    c.words().iter().all(|w| {
        (1..w.len()).all(|r| {
            let swapped = w.swap_positions(r).expect("r < len");
            !c.contains(&swapped) || psi_degree(w, r, q) == 0
        })
    })
}

/// Aggregated result of checking every homogeneous module of one rank.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SweepReport {
    pub rank: usize,
    pub max_height: usize,
    pub orientation: String,
    pub components: usize,
    pub relations: Vec<RelationOutcome>,
    pub single_degree: bool,
    pub transitive: bool,
}

impl SweepReport {
    pub fn passed(&self) -> bool {
        self.single_degree && self.transitive && self.relations.iter().all(RelationOutcome::passed)
    }
}

/// Verifies every homogeneous component of rank `q.rank()` and height at
/// most `max_height`.
pub fn sweep(q: &Quiver, max_height: usize, guard: HeightGuard) -> Result<SweepReport> {
    guard.check(max_height)?;
    let rank = q.rank();
    let mut relations: Vec<RelationOutcome> = Relation::ALL
        .iter()
        .map(|&r| Tally::new(r).outcome)
        .collect();
    let mut components = 0;
    let mut single_degree = true;
    let mut transitive = true;
    for k in 0..=max_height {
        for form in enumerate_fc(rank, k) {
            let comp = component_of(&form.to_word())?;
            components += 1;
            let report = verify_relations(&comp, q, guard)?;
            for (agg, o) in relations.iter_mut().zip(report.outcomes) {
                agg.checks += o.checks;
                agg.failures += o.failures;
                if agg.witness.is_none() {
                    agg.witness = o.witness.map(|w| format!("{form}: {w}"));
                }
            }
            single_degree &= verify_single_degree(&comp, q);
            transitive &= build_module(&comp, q)?.acts_transitively();
        }
    }
    Ok(SweepReport {
        rank,
        max_height,
        orientation: q.to_string(),
        components,
        relations,
        single_degree,
        transitive,
    })
}
