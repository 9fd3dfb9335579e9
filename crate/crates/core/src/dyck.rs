//! Dyck paths, their peaks, and the statistic
//! `k = (sum of peak heights) - (number of peaks)`.
//!
//! Coordinates start at the origin: after `x` steps the path is at
//! `(x, height)`. A peak is recorded by the apex reached after its rise.

use std::fmt;
use std::fmt::Write as _;
use std::str::FromStr;

use num_bigint::BigUint;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::bijection::{segment_of_peak, PeakBlock};
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Step {
    Up,
    Down,
}

impl Step {
    pub fn as_char(self) -> char {
        match self {
            Step::Up => 'U',
            Step::Down => 'D',
        }
    }
}

/// A rise immediately followed by a fall, identified by its apex.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Peak {
    pub position: usize,
    pub height: usize,
}

/// A balanced `U`/`D` sequence whose prefixes never go below the axis.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DyckPath {
    steps: Vec<Step>,
}

impl DyckPath {
    pub fn new(steps: Vec<Step>) -> Result<Self> {
        let mut height: i64 = 0;
        for (x, s) in steps.iter().enumerate() {
            height += if *s == Step::Up { 1 } else { -1 };
            if height < 0 {
                return Err(Error::InvalidPath(format!("goes below the axis at step {x}")));
            }
        }
        if height != 0 {
            return Err(Error::InvalidPath(format!("ends at height {height}")));
        }
        Ok(DyckPath { steps })
    }

    pub(crate) fn from_steps_unchecked(steps: Vec<Step>) -> Self {
        debug_assert!(DyckPath::new(steps.clone()).is_ok());
        DyckPath { steps }
    }

    /// The path `(UD)^n`.
    pub fn sawtooth(semilength: usize) -> Self {
        let steps = (0..semilength).flat_map(|_| [Step::Up, Step::Down]).collect();
        DyckPath { steps }
    }

    pub fn steps(&self) -> &[Step] {
        &self.steps
    }

    pub fn semilength(&self) -> usize {
        self.steps.len() / 2
    }

    /// Heights after each step; entry `x` is the height at abscissa `x`.
    pub fn heights(&self) -> Vec<usize> {
        let mut out = Vec::with_capacity(self.steps.len() + 1);
        let mut h = 0usize;
        out.push(h);
        for s in &self.steps {
            match s {
                Step::Up => h += 1,
                Step::Down => h -= 1,
            }
            out.push(h);
        }
        out
    }

    pub fn peaks(&self) -> Vec<Peak> {
        let heights = self.heights();
        self.steps
            .windows(2)
            .enumerate()
            .filter(|(_, w)| w[0] == Step::Up && w[1] == Step::Down)
            .map(|(x, _)| Peak {
                position: x + 1,
                height: heights[x + 1],
            })
            .collect()
    }

    /// `(sum of peak heights) - (number of peaks)`.
    pub fn statistic_k(&self) -> usize {
        self.peaks().iter().map(|p| p.height - 1).sum()
    }

    /// Mirror image: read backwards with rises and falls exchanged.
    pub fn reversed(&self) -> DyckPath {
        let steps = self
            .steps
            .iter()
            .rev()
            .map(|s| match s {
                Step::Up => Step::Down,
                Step::Down => Step::Up,
            })
            .collect();
        DyckPath { steps }
    }
}

impl fmt::Display for DyckPath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for s in &self.steps {
            f.write_char(s.as_char())?;
        }
        Ok(())
    }
}

impl FromStr for DyckPath {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let steps = s
            .trim()
            .chars()
            .map(|c| match c.to_ascii_uppercase() {
                'U' => Ok(Step::Up),
                'D' => Ok(Step::Down),
                other => Err(Error::InvalidPath(format!("unexpected character {other:?}"))),
            })
            .collect::<Result<Vec<_>>>()?;
        DyckPath::new(steps)
    }
}

#[derive(Serialize, Deserialize)]
struct DyckPathJson {
    steps: String,
}

impl Serialize for DyckPath {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        DyckPathJson {
            steps: self.to_string(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for DyckPath {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let raw = DyckPathJson::deserialize(deserializer)?;
        raw.steps.parse().map_err(serde::de::Error::custom)
    }
}

/// Per-state table over `(x, height, previous step was a rise)`.
struct StateTable<T> {
    width: usize,
    cells: Vec<T>,
}

impl<T: Clone> StateTable<T> {
    fn new(semilength: usize, fill: T) -> Self {
        let width = semilength + 1;
        StateTable {
            width,
            cells: vec![fill; (2 * semilength + 1) * width * 2],
        }
    }

    fn idx(&self, x: usize, h: usize, rose: bool) -> usize {
        (x * self.width + h) * 2 + rose as usize
    }

    fn get(&self, x: usize, h: usize, rose: bool) -> &T {
        &self.cells[self.idx(x, h, rose)]
    }

    fn set(&mut self, x: usize, h: usize, rose: bool, value: T) {
        let i = self.idx(x, h, rose);
        self.cells[i] = value;
    }
}

/// Fills a table backwards from `x = 2n`. `combine(up, down, h, rose)`
/// receives the values of the successor states (if legal).
fn backward_table<T: Clone>(
    semilength: usize,
    empty: T,
    at_end: T,
    combine: impl Fn(Option<&T>, Option<&T>, usize, bool) -> T,
) -> StateTable<T> {
    let len = 2 * semilength;
    let mut table = StateTable::new(semilength, empty);
    for rose in [false, true] {
        table.set(len, 0, rose, at_end.clone());
    }
    for x in (0..len).rev() {
        let remaining = len - x;
        for h in 0..=semilength.min(remaining).min(x) {
            if !(remaining - h).is_multiple_of(2) {
                continue;
            }
            for rose in [false, true] {
                let up = (h < remaining).then(|| table.get(x + 1, h + 1, true));
                let down = (h > 0).then(|| table.get(x + 1, h - 1, false));
                let v = combine(up, down, h, rose);
                table.set(x, h, rose, v);
            }
        }
    }
    table
}

/// Row `n` of the `T(n, k)` triangle: entry `k` counts paths of semilength
/// `n` with statistic `k`, trailing zeros removed.
///
/// Dynamic programming over the same state space the path generator walks:
/// a fall right after a rise at height `h` closes a peak and adds `h - 1`.
pub fn t_row(semilength: usize) -> Vec<BigUint> {
    let table = backward_table(
        semilength,
        Vec::<BigUint>::new(),
        vec![BigUint::one()],
        |up, down, h, rose| {
            let mut out: Vec<BigUint> = up.cloned().unwrap_or_default();
            if let Some(down) = down {
                let shift = if rose { h - 1 } else { 0 };
                if out.len() < down.len() + shift {
                    out.resize(down.len() + shift, BigUint::zero());
                }
                for (k, c) in down.iter().enumerate() {
                    out[k + shift] += c;
                }
            }
            out
        },
    );
    let mut row = table.get(0, 0, false).clone();
    while row.last().is_some_and(Zero::is_zero) {
        row.pop();
    }
    row
}

/// `T(n, k)`, the number of Dyck paths of semilength `n` with statistic `k`.
pub fn count_t(semilength: usize, k: usize) -> BigUint {
    t_row(semilength).get(k).cloned().unwrap_or_default()
}

/// Rows `0..=n_max` of the `T(n, k)` triangle.
pub fn t_table(n_max: usize) -> Vec<Vec<BigUint>> {
    (0..=n_max).map(t_row).collect()
}

/// All paths of semilength `n` with statistic `k`, ordered with `U < D`.
pub fn enumerate_paths(semilength: usize, k: usize) -> Vec<DyckPath> {
    // Bounds on the statistic still obtainable from each state let the
    // search skip every branch that cannot land exactly on `k`.
    let bounds = backward_table(
        semilength,
        None,
        Some((0usize, 0usize)),
        |up: Option<&Option<(usize, usize)>>, down, h, rose| {
            let up = up.copied().flatten();
            let down = down.copied().flatten().map(|(lo, hi)| {
                let shift = if rose { h - 1 } else { 0 };
                (lo + shift, hi + shift)
            });
            match (up, down) {
                (Some(a), Some(b)) => Some((a.0.min(b.0), a.1.max(b.1))),
                (a, b) => a.or(b),
            }
        },
    );
    let mut out = Vec::new();
    let mut steps = Vec::with_capacity(2 * semilength);
    let mut search = PathSearch {
        len: 2 * semilength,
        target: k,
        bounds: &bounds,
        out: &mut out,
    };
    search.visit(&mut steps, 0, false, 0);
    out
}

struct PathSearch<'a> {
    len: usize,
    target: usize,
    bounds: &'a StateTable<Option<(usize, usize)>>,
    out: &'a mut Vec<DyckPath>,
}

impl PathSearch<'_> {
    fn visit(&mut self, steps: &mut Vec<Step>, h: usize, rose: bool, partial: usize) {
        let x = steps.len();
        match self.bounds.get(x, h, rose) {
            Some((lo, hi)) if partial + lo <= self.target && self.target <= partial + hi => {}
            _ => return,
        }
        if x == self.len {
            self.out.push(DyckPath::from_steps_unchecked(steps.clone()));
            return;
        }
        if h < self.len - x {
            steps.push(Step::Up);
            self.visit(steps, h + 1, true, partial);
            steps.pop();
        }
        if h > 0 {
            let gain = if rose { h - 1 } else { 0 };
            steps.push(Step::Down);
            self.visit(steps, h - 1, false, partial + gain);
            steps.pop();
        }
    }
}

fn block_labels(d: &DyckPath) -> Vec<(Peak, String)> {
    d.peaks()
        .into_iter()
        .filter_map(|p| match segment_of_peak(p) {
            Ok(PeakBlock::Square(s)) => Some((p, s.label())),
            _ => None,
        })
        .collect()
}

/// Monospace drawing with `/` and `\`, followed by the words in the
/// square blocks under the peaks (bottom triangles carry no label).
pub fn render_ascii(d: &DyckPath) -> String {
    let heights = d.heights();
    let top = heights.iter().copied().max().unwrap_or(0);
    let mut grid = vec![vec![' '; d.steps.len()]; top];
    for (x, s) in d.steps.iter().enumerate() {
        match s {
            Step::Up => grid[top - heights[x] - 1][x] = '/',
            Step::Down => grid[top - heights[x]][x] = '\\',
        }
    }
    let mut out = String::new();
    for row in grid {
        let line: String = row.into_iter().collect();
        out.push_str(line.trim_end());
        out.push('\n');
    }
    let labels = block_labels(d);
    if !labels.is_empty() {
        let words: Vec<&str> = labels.iter().map(|(_, l)| l.as_str()).collect();
        let _ = writeln!(out, "blocks: {}", words.join(" "));
    }
    out
}

/// Standalone SVG 1.1 drawing of the path over the triangular lattice of
/// blocks `T_i^m`, `1 <= i <= m < n`; blocks holding a peak are shaded.
pub fn render_svg(d: &DyckPath) -> String {
    const UNIT: usize = 24;
    const MARGIN: usize = 24;
    let n = d.semilength();
    let width = 2 * n * UNIT + 2 * MARGIN;
    let height = n * UNIT + 2 * MARGIN;
    let px = |x: usize| MARGIN + x * UNIT;
    let py = |y: usize| MARGIN + (n - y) * UNIT;

    let labels = block_labels(d);
    let mut out = String::new();
    let _ = writeln!(out, r##"<?xml version="1.0" encoding="UTF-8"?>"##);
    let _ = writeln!(
        out,
        r##"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{width}" height="{height}" viewBox="0 0 {width} {height}">"##
    );
    let _ = writeln!(
        out,
        r##"  <line x1="{}" y1="{}" x2="{}" y2="{}" stroke="black" stroke-width="1"/>"##,
        px(0),
        py(0),
        px(2 * n),
        py(0)
    );
    for m in 1..n {
        for i in 1..=m {
            let (cx, top) = (i + m, m - i + 2);
            let shaded = labels
                .iter()
                .any(|(p, _)| p.position == cx && p.height == top);
            let fill = if shaded { "#dddddd" } else { "none" };
            let _ = writeln!(
                out,
                r##"  <polygon points="{},{} {},{} {},{} {},{}" fill="{fill}" stroke="#999999" stroke-width="0.5"/>"##,
                px(cx),
                py(top),
                px(cx + 1),
                py(top - 1),
                px(cx),
                py(top - 2),
                px(cx - 1),
                py(top - 1)
            );
            let label: String = (i..=m).rev().map(|l| l.to_string()).collect::<Vec<_>>().join(
                if m >= 10 { "," } else { "" },
            );
            let _ = writeln!(
                out,
                r##"  <text x="{}" y="{}" font-family="monospace" font-size="9" text-anchor="middle">{label}</text>"##,
                px(cx),
                py(top - 1) + 3
            );
        }
    }
    let points: Vec<String> = d
        .heights()
        .iter()
        .enumerate()
        .map(|(x, &y)| format!("{},{}", px(x), py(y)))
        .collect();
    let _ = writeln!(
        out,
        r##"  <polyline points="{}" fill="none" stroke="orange" stroke-width="3"/>"##,
        points.join(" ")
    );
    out.push_str("</svg>\n");
    out
}
