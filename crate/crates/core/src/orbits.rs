//! Ω acting on hook modules, specialness and parity, rigidity and
//! ortho-symmetry, and the derived equivalence invariant.
//!
//! The hooks of `Λ_G` form a single Ω-orbit of length `2n`: the hook with
//! label at Green's-walk position `i` has syzygy the hook at `i - 1`.

use alloc::collections::BTreeSet;
use alloc::format;
use alloc::string::ToString;
use alloc::vec::Vec;
use core::fmt;

use crate::error::{Error, Result};
use crate::homdim::{dimensions, Dim};
use crate::necklace::Necklace;
use crate::tree::{label_not_in_tree, make_star, BrauerTree, HookLabel, SpecialSubset};
use crate::walk::{green_walk, GreenWalk};

fn position(walk: &GreenWalk, h: &HookLabel) -> Result<usize> {
    walk.position(h).ok_or_else(|| label_not_in_tree(h))
}

/// Green's-walk position of a hook label.
pub fn walk_position(t: &BrauerTree, h: &HookLabel) -> Result<usize> {
    position(&green_walk(t), h)
}

/// `Ω^k` of the hook `h`; negative `k` gives cosyzygies.
pub fn omega_hook(t: &BrauerTree, h: &HookLabel, k: i64) -> Result<HookLabel> {
    let walk = green_walk(t);
    let len = walk.len() as i64;
    let p = position(&walk, h)? as i64;
    Ok(walk.label_at((p - k).rem_euclid(len) as usize))
}

fn sorted_positions<'a>(walk: &GreenWalk, labels: impl IntoIterator<Item = &'a HookLabel>) -> Result<Vec<usize>> {
    let set: BTreeSet<usize> = labels.into_iter().map(|h| position(walk, h)).collect::<Result<_>>()?;
    Ok(set.into_iter().collect())
}

fn cyclic_gaps(positions: &[usize], len: usize) -> Vec<usize> {
    (0..positions.len())
        .map(|j| {
            let next = positions[(j + 1) % positions.len()];
            let gap = (next + len - positions[j]) % len;
            if gap == 0 {
                len
            } else {
                gap
            }
        })
        .collect()
}

/// Cyclic distances between consecutive labels along the walk of `G` itself
/// (not the enlarged tree). A single label has gap `2n`.
pub fn walk_gaps<'a>(t: &BrauerTree, labels: impl IntoIterator<Item = &'a HookLabel>) -> Result<Vec<usize>> {
    let walk = green_walk(t);
    let positions = sorted_positions(&walk, labels)?;
    Ok(cyclic_gaps(&positions, walk.len()))
}

/// No label is the syzygy of another, i.e. all walk gaps are at least 2.
pub fn is_special<'a>(t: &BrauerTree, labels: impl IntoIterator<Item = &'a HookLabel>) -> Result<bool> {
    Ok(walk_gaps(t, labels)?.iter().all(|&g| g >= 2))
}

/// All labels sit at walk positions of the same parity, equivalently their
/// associating vertices are at even distance from each other.
pub fn is_pure_parity<'a>(t: &BrauerTree, labels: impl IntoIterator<Item = &'a HookLabel>) -> Result<bool> {
    let positions = sorted_positions(&green_walk(t), labels)?;
    Ok(positions.windows(2).all(|p| (p[1] - p[0]) % 2 == 0))
}

/// Neither hook is the syzygy of the other.
pub fn stably_orthogonal(t: &BrauerTree, a: &HookLabel, b: &HookLabel) -> Result<bool> {
    Ok(omega_hook(t, a, 1)? != *b && omega_hook(t, b, 1)? != *a)
}

/// Largest `m` such that the generator is `m`-rigid: `domdim - 2`.
pub fn rigidity_level(t: &BrauerTree, w: &SpecialSubset) -> Result<Dim> {
    Ok(match dimensions(t, w)?.domdim {
        Dim::Finite(d) => Dim::Finite(d - 2),
        Dim::Infinite => Dim::Infinite,
    })
}

/// `Some(m)` if the generator is `m`-ortho-symmetric, which happens exactly
/// when dominant and Gorenstein dimension agree and equal `m + 2`.
pub fn ortho_symmetric_level(t: &BrauerTree, w: &SpecialSubset) -> Result<Option<usize>> {
    if w.is_empty() {
        return Ok(None);
    }
    let d = dimensions(t, w)?;
    Ok(match (d.domdim, d.gorenstein) {
        (Dim::Finite(a), Dim::Finite(b)) if a == b => Some(a - 2),
        _ => None,
    })
}

/// `W = {Ω^{i·d}(start) : 0 ≤ i < 2n/d}` on the Brauer star with `n` edges
/// and multiplicity `m`; all its walk gaps equal `d`.
pub fn construct_ortho(n: usize, m: u32, d: usize, start: &HookLabel) -> Result<(BrauerTree, SpecialSubset)> {
    let t = make_star(n, m)?;
    let len = 2 * n;
    if d < 2 || !len.is_multiple_of(d) {
        return Err(Error::BadDivisor { d, len });
    }
    let labels = (0..len / d).map(|i| omega_hook(&t, start, (i * d) as i64)).collect::<Result<Vec<_>>>()?;
    let w = SpecialSubset::new(&t, labels)?;
    Ok((t, w))
}

/// `(n, m, word)`: edge count, exceptional multiplicity and the necklace
/// marking the walk positions of `W` with `b`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct DerivedInvariant {
    pub n: usize,
    pub m: u32,
    pub word: Necklace,
}

impl fmt::Display for DerivedInvariant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(n={}, m={}, {})", self.n, self.m, self.word)
    }
}

pub fn derived_invariant(t: &BrauerTree, w: &SpecialSubset) -> Result<DerivedInvariant> {
    let walk = green_walk(t);
    let positions = sorted_positions(&walk, w.iter())?;
    if let Some(g) = cyclic_gaps(&positions, walk.len()).iter().position(|&g| g < 2) {
        let (lower, upper) = (walk.label_at(positions[g]), walk.label_at(positions[g] + 1));
        return Err(Error::NotSpecial(lower.to_string(), upper.to_string()));
    }
    Ok(DerivedInvariant {
        n: t.edge_count(),
        m: t.exceptional_multiplicity(),
        word: Necklace::from_positions(walk.len(), positions),
    })
}

/// Canonical Brauer-star representative of an invariant.
#[derive(Clone, Debug)]
pub struct StarRepresentative {
    pub tree: BrauerTree,
    pub w: SpecialSubset,
    /// Walk positions `x_1 < … < x_r` of the labels in `W`.
    pub positions: Vec<usize>,
}

/// The star with `n` edges and multiplicity `m`, with `W` the hooks at the
/// walk positions of the `b`s of the canonical word.
pub fn star_representative(inv: &DerivedInvariant) -> Result<StarRepresentative> {
    if inv.word.len() != 2 * inv.n {
        return Err(Error::BadParameter(format!("word of length {} for a tree with {} edges", inv.word.len(), inv.n)));
    }
    let tree = make_star(inv.n, inv.m)?;
    let walk = green_walk(&tree);
    let positions = inv.word.b_positions();
    let w = SpecialSubset::new(&tree, positions.iter().map(|&p| walk.label_at(p)))?;
    Ok(StarRepresentative { tree, w, positions })
}
