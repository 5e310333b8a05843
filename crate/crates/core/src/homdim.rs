//! Dominant, Gorenstein and global dimensions of `Γ^W` from the Green's walk
//! of the enlarged tree `G^W`.

use alloc::collections::BTreeMap;
use alloc::string::ToString;
use alloc::vec::Vec;
use core::fmt;

use crate::error::{Error, Result};
use crate::tree::{enlargement, BrauerTree, EdgeId, HookLabel, SpecialSubset};
pub use crate::walk::{green_walk, GreenWalk};

/// A homological dimension, possibly infinite. `Finite` sorts below `Infinite`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Dim {
    Finite(usize),
    Infinite,
}

impl Dim {
    pub fn is_finite(self) -> bool {
        matches!(self, Dim::Finite(_))
    }

    pub fn finite(self) -> Option<usize> {
        match self {
            Dim::Finite(d) => Some(d),
            Dim::Infinite => None,
        }
    }
}

impl fmt::Display for Dim {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Dim::Finite(d) => write!(f, "{d}"),
            Dim::Infinite => f.write_str("infinity"),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct DimensionReport {
    pub domdim: Dim,
    /// Injective dimension of the regular module; the Gorenstein dimension
    /// when finite.
    pub gorenstein: Dim,
    pub gldim: Dim,
    /// `gldim ≤ d ≤ domdim` for some `d`, i.e. a higher Auslander algebra.
    pub higher_auslander: bool,
}

impl DimensionReport {
    pub fn new(domdim: Dim, gorenstein: Dim, gldim: Dim) -> Self {
        let higher_auslander = gldim.is_finite() && gldim <= domdim;
        Self { domdim, gorenstein, gldim, higher_auslander }
    }
}

/// `overline(k)` on a walk of length `len`: `len` when `len | k`, else `k mod len`.
pub fn overline(k: usize, len: usize) -> usize {
    match k % len {
        0 => len,
        r => r,
    }
}

/// The Green's walk of `G^W` with the returns from the new leaves marked.
#[derive(Clone, Debug)]
pub struct WalkMarks {
    pub walk: GreenWalk,
    /// Steps that come back from a new leaf, in increasing order.
    pub omega: Vec<usize>,
    /// The next element of `omega` after each one, cyclically.
    pub eta: BTreeMap<usize, usize>,
    /// The `W` label owning each marked step.
    pub labels: BTreeMap<usize, HookLabel>,
}

impl WalkMarks {
    /// `overline(η(i) - i)` for each marked step `i`.
    pub fn gaps(&self) -> Vec<usize> {
        let len = self.walk.len();
        self.omega.iter().map(|&i| overline(self.eta[&i] + len - i, len)).collect()
    }
}

pub fn walk_marks(t: &BrauerTree, w: &SpecialSubset) -> Result<WalkMarks> {
    if w.is_empty() {
        return Err(Error::EmptyW);
    }
    let e = enlargement(t, w)?;
    let walk = green_walk(&e.tree);
    let mut labels = BTreeMap::new();
    for (i, s) in walk.steps().iter().enumerate() {
        if let Some(h) = e.label_of(&s.edge) {
            if e.inserted[h].leaf == s.from {
                labels.insert(i, h.clone());
            }
        }
    }
    let omega: Vec<usize> = labels.keys().copied().collect();
    let eta = omega.iter().enumerate().map(|(j, &i)| (i, omega[(j + 1) % omega.len()])).collect();
    Ok(WalkMarks { walk, omega, eta, labels })
}

/// Dominant, Gorenstein and global dimension of `Γ^W`.
///
/// For `W ≠ ∅` the injective coresolution of the projective at a marked step
/// runs along the walk to the next marked step, so the gaps give
/// `domdim = min - 2` and `Gorenstein = max - 2`. The global dimension is
/// finite only for a single label on a multiplicity-free tree, where it is
/// `2·|edges|`. `W = ∅` is the symmetric algebra: `(∞, 0, ∞)`.
pub fn dimensions(t: &BrauerTree, w: &SpecialSubset) -> Result<DimensionReport> {
    if w.is_empty() {
        return Ok(DimensionReport::new(Dim::Infinite, Dim::Finite(0), Dim::Infinite));
    }
    let gaps = walk_marks(t, w)?.gaps();
    let min = gaps.iter().copied().min().expect("W nonempty");
    let max = gaps.iter().copied().max().expect("W nonempty");
    let gldim = if t.is_multiplicity_free() && w.len() == 1 { Dim::Finite(2 * t.edge_count()) } else { Dim::Infinite };
    Ok(DimensionReport::new(Dim::Finite(min - 2), Dim::Finite(max - 2), gldim))
}

/// Labels of the injective terms in the coresolution of the projective at a
/// `W` label: the walk edges strictly after its marked step up to and
/// including the next marked step's leaf edge.
pub fn coresolution_trace(t: &BrauerTree, w: &SpecialSubset, label: &HookLabel) -> Result<Vec<EdgeId>> {
    if !w.contains(label) {
        return Err(Error::LabelNotInW { edge: label.edge.to_string(), vertex: label.vertex.to_string() });
    }
    let marks = walk_marks(t, w)?;
    let (&i, _) = marks.labels.iter().find(|(_, h)| *h == label).expect("every label is marked");
    let len = marks.walk.len();
    let gap = overline(marks.eta[&i] + len - i, len);
    Ok((i + 1..i + gap).map(|j| marks.walk.step(j).edge.clone()).collect())
}
