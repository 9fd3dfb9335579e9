//! The bijection between canonical forms of rank `n` and Dyck paths of
//! semilength `n + 1` that carries Coxeter length to the statistic `k`.
//!
//! Draw the triangular lattice of square blocks over the axis: block
//! `T_i^m` is the diamond whose top vertex is `(i + m, m - i + 2)`. A peak
//! of height `h >= 2` at abscissa `p` sits on top of block
//! `T_{(p+2-h)/2}^{(p+h-2)/2}`; height-1 peaks sit on bottom triangles and
//! carry no letters.

use crate::canonical::{CanonicalForm, Segment};
use crate::dyck::{DyckPath, Peak, Step};
use crate::error::{Error, Result};

/// What lies under a peak of the lattice.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PeakBlock {
    /// A height-1 peak; ignored when reading off the word.
    Bottom,
    Square(Segment),
}

pub fn segment_of_peak(peak: Peak) -> Result<PeakBlock> {
    let Peak { position, height } = peak;
    if (position + height) % 2 != 0 || height == 0 || height > position {
        return Err(Error::CoordinateParity { position, height });
    }
    if height == 1 {
        return Ok(PeakBlock::Bottom);
    }
    let i = (position + 2 - height) / 2;
    let m = (position + height - 2) / 2;
    Ok(PeakBlock::Square(Segment::new(i, m)?))
}

/// Apex of the peak sitting on block `T_i^m`.
pub fn apex_of_segment(s: Segment) -> Peak {
    Peak {
        position: s.i() + s.m(),
        height: s.m() - s.i() + 2,
    }
}

/// The Dyck path of semilength `rank + 1` whose height-`>= 2` peaks are
/// exactly the apexes of the segments of `c`.
///
/// Consecutive apexes `(p1, h1)`, `(p2, h2)` are joined through the valley
/// at height `(h1 + h2 - (p2 - p1)) / 2` when that is positive; otherwise
/// the path drops to the axis, runs a `UD` sawtooth and climbs straight to
/// the next apex. The two ends behave as apexes of height 0.
pub fn phi(c: &CanonicalForm) -> DyckPath {
    let len = 2 * (c.rank() + 1);
    let mut anchors: Vec<(usize, usize)> = vec![(0, 0)];
    anchors.extend(c.segments().iter().map(|&s| {
        let a = apex_of_segment(s);
        (a.position, a.height)
    }));
    anchors.push((len, 0));

    let mut steps = Vec::with_capacity(len);
    for pair in anchors.windows(2) {
        let ((p1, h1), (p2, h2)) = (pair[0], pair[1]);
        let valley = (h1 + h2) as i64 - (p2 - p1) as i64;
        if valley >= 2 {
            let v = (valley / 2) as usize;
            steps.extend(std::iter::repeat_n(Step::Down, h1 - v));
            steps.extend(std::iter::repeat_n(Step::Up, h2 - v));
        } else {
            steps.extend(std::iter::repeat_n(Step::Down, h1));
            let gap = (p2 - h2) - (p1 + h1);
            for _ in 0..gap / 2 {
                steps.push(Step::Up);
                steps.push(Step::Down);
            }
            steps.extend(std::iter::repeat_n(Step::Up, h2));
        }
    }
    DyckPath::from_steps_unchecked(steps)
}

/// Reads the square blocks under the peaks of `d` from left to right.
/// The rank is `semilength - 1`, so `d` must have semilength at least 2.
pub fn psi(d: &DyckPath) -> Result<CanonicalForm> {
    let n = d.semilength();
    if n < 2 {
        return Err(Error::InvalidRank(n.saturating_sub(1)));
    }
    let mut segments = Vec::new();
    for p in d.peaks() {
        if let PeakBlock::Square(s) = segment_of_peak(p)? {
            segments.push(s);
        }
    }
    CanonicalForm::new(n - 1, segments)
}
