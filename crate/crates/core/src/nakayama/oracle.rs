//! Brute-force resolutions over an arbitrary cyclic Nakayama algebra.
//!
//! Every indecomposable is uniserial, so a resolution step only needs the
//! projective cover (`P_top`) or the injective envelope (the longest
//! uniserial with the same socle) and the length of the (co)kernel. There are
//! at most `Σ c_i` uniserials, so a resolution either stops or revisits a
//! module, in which case it is periodic and the dimension is infinite.

use alloc::collections::BTreeSet;
use alloc::vec::Vec;

use super::{KupischSeries, Uniserial};
use crate::error::{Error, Result};
use crate::homdim::{Dim, DimensionReport};

pub use super::rep::{linear_cosyzygy, linear_syzygy, oracle_hom};

/// `Ω(u)`, or `None` if `u` is projective.
pub fn syzygy(k: &KupischSeries, u: Uniserial) -> Option<Uniserial> {
    let c = k.c(u.top);
    (u.len < c).then(|| Uniserial { top: (u.top + u.len) % k.n(), len: c - u.len })
}

/// `Ω⁻¹(u)`, or `None` if `u` is injective.
pub fn cosyzygy(k: &KupischSeries, u: Uniserial) -> Option<Uniserial> {
    let i = k.injective(u.socle(k.n()));
    (u.len < i.len).then(|| Uniserial { top: i.top, len: i.len - u.len })
}

/// A minimal projective resolution or injective coresolution.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ResolutionTrace {
    /// The projective (resp. injective) terms `P_0, P_1, …`.
    pub terms: Vec<Uniserial>,
    /// The nonzero (co)syzygies `Ω^{±1} M, Ω^{±2} M, …` that were computed.
    pub kernels: Vec<Uniserial>,
    /// Set when a (co)syzygy repeated: the trace covers one period.
    pub periodic: bool,
}

impl ResolutionTrace {
    /// Projective or injective dimension of the resolved module.
    pub fn dimension(&self) -> Dim {
        if self.periodic {
            Dim::Infinite
        } else {
            Dim::Finite(self.terms.len() - 1)
        }
    }
}

fn trace(
    k: &KupischSeries,
    m: Uniserial,
    term: impl Fn(Uniserial) -> Uniserial,
    step: impl Fn(Uniserial) -> Option<Uniserial>,
) -> Result<ResolutionTrace> {
    k.check(m)?;
    if m.is_zero() {
        return Err(Error::ZeroModule);
    }
    let mut seen = BTreeSet::from([m]);
    let mut out = ResolutionTrace { terms: Vec::new(), kernels: Vec::new(), periodic: false };
    let mut cur = m;
    loop {
        out.terms.push(term(cur));
        let Some(next) = step(cur) else { break };
        if !seen.insert(next) {
            out.periodic = true;
            break;
        }
        out.kernels.push(next);
        cur = next;
    }
    Ok(out)
}

pub fn oracle_proj_resolution(k: &KupischSeries, m: Uniserial) -> Result<ResolutionTrace> {
    trace(k, m, |u| k.projective(u.top), |u| syzygy(k, u))
}

pub fn oracle_inj_coresolution(k: &KupischSeries, m: Uniserial) -> Result<ResolutionTrace> {
    trace(k, m, |u| k.injective(u.socle(k.n())), |u| cosyzygy(k, u))
}

/// Number of leading projective terms of a coresolution; infinite if there
/// is no non-projective term at all.
fn leading_projectives(k: &KupischSeries, t: &ResolutionTrace) -> Dim {
    match t.terms.iter().position(|&i| !k.is_projective(i)) {
        Some(p) => Dim::Finite(p),
        None => Dim::Infinite,
    }
}

/// Dominant dimension, injective dimension of the regular module and global
/// dimension, all read off oracle resolutions.
pub fn oracle_dims(k: &KupischSeries) -> DimensionReport {
    let n = k.n();
    let coresolutions: Vec<ResolutionTrace> =
        (0..n).map(|i| oracle_inj_coresolution(k, k.projective(i)).expect("projectives are nonzero")).collect();
    let domdim = coresolutions.iter().map(|t| leading_projectives(k, t)).min().expect("n >= 1");
    let gorenstein = coresolutions.iter().map(ResolutionTrace::dimension).max().expect("n >= 1");
    let gldim = (0..n)
        .map(|i| oracle_proj_resolution(k, Uniserial::new(i, 1)).expect("simples are nonzero").dimension())
        .max()
        .expect("n >= 1");
    DimensionReport::new(domdim, gorenstein, gldim)
}
