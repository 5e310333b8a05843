//! Counting and listing necklaces of the circular codes `{w, b}` and
//! `{w, bw}`, and catalogues of class representatives.

use alloc::collections::BTreeSet;
use alloc::format;
use alloc::vec::Vec;

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::homdim::{dimensions, DimensionReport};
use crate::nakayama::oracle::oracle_dims;
use crate::nakayama::{gendo_kupisch, KupischSeries};
use crate::necklace::{Bead, Necklace};
use crate::orbits::{star_representative, DerivedInvariant};
use crate::tree::HookLabel;

/// Largest word length [`enumerate_necklaces`] will list.
pub const DEFAULT_BOUND: usize = 24;

pub fn totient(n: u64) -> u64 {
    let (mut n, mut out) = (n, n);
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            while n % p == 0 {
                n /= p;
            }
            out -= out / p;
        }
        p += 1;
    }
    if n > 1 {
        out -= out / n;
    }
    out
}

pub fn divisors(n: usize) -> Vec<usize> {
    (1..=n).filter(|&d| n.is_multiple_of(d)).collect()
}

/// `L_1 = 1`, `L_2 = 3`, `L_{d+2} = L_{d+1} + L_d`.
pub fn lucas(d: usize) -> Result<BigUint> {
    if d == 0 {
        return Err(Error::BadParameter("Lucas index must be >= 1".into()));
    }
    let (mut a, mut b) = (BigUint::one(), BigUint::from(3u32));
    for _ in 1..d {
        let next = &a + &b;
        a = core::mem::replace(&mut b, next);
    }
    Ok(a)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CodeSpec {
    /// `{w, b}`: every binary word.
    Binary,
    /// `{w, bw}`: no two cyclically adjacent `b`s.
    Special,
}

impl CodeSpec {
    /// Number `s_d` of words of length `d` with a conjugate in `X*`, counted
    /// with their rotations.
    pub fn s(self, d: usize) -> Result<BigUint> {
        match self {
            CodeSpec::Binary => Ok(BigUint::one() << d),
            CodeSpec::Special => lucas(d),
        }
    }

    pub fn admits(self, word: &Necklace) -> bool {
        match self {
            CodeSpec::Binary => true,
            CodeSpec::Special => word.is_special(),
        }
    }
}

/// `c_N = (1/N) Σ_{d | N} φ(N/d) s_d`, the number of necklaces of length `N`.
pub fn count_classes(code: CodeSpec, len: usize) -> Result<BigUint> {
    if len == 0 {
        return Err(Error::BadParameter("necklace length must be >= 1".into()));
    }
    let mut sum = BigUint::zero();
    for d in divisors(len) {
        sum += code.s(d)? * totient((len / d) as u64);
    }
    let (q, r) = (&sum / len, &sum % len);
    debug_assert!(r.is_zero());
    Ok(q)
}

/// All canonical necklaces of the code with the given length, sorted.
pub fn enumerate_necklaces(code: CodeSpec, len: usize) -> Result<Vec<Necklace>> {
    enumerate_necklaces_bounded(code, len, DEFAULT_BOUND)
}

pub fn enumerate_necklaces_bounded(code: CodeSpec, len: usize, bound: usize) -> Result<Vec<Necklace>> {
    if len == 0 {
        return Err(Error::BadParameter("necklace length must be >= 1".into()));
    }
    if len > bound {
        return Err(Error::BoundExceeded { what: "necklace length", value: len, bound });
    }
    let mut out = BTreeSet::new();
    for mask in 0u64..1 << len {
        let beads: Vec<Bead> = (0..len).map(|i| if mask >> i & 1 == 1 { Bead::B } else { Bead::W }).collect();
        if crate::necklace::least_rotation(&beads) != 0 {
            continue;
        }
        let word = Necklace::new(beads);
        if code.admits(&word) {
            out.insert(word);
        }
    }
    Ok(out.into_iter().collect())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CatalogueKind {
    /// Gendo-symmetric Nakayama algebras over the star with `n` edges.
    Naka,
    /// Special gendo-Brauer tree algebras with `n` edges.
    Tree,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Representative {
    Kupisch(KupischSeries),
    /// The Brauer star with `n` edges and multiplicity `m`, and its `W`.
    Star {
        n: usize,
        m: u32,
        w: Vec<HookLabel>,
    },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CatalogueEntry {
    pub word: Necklace,
    pub positions: Vec<usize>,
    pub representative: Representative,
    pub dims: DimensionReport,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassCatalogue {
    pub n: usize,
    pub m: u32,
    pub kind: CatalogueKind,
    pub entries: Vec<CatalogueEntry>,
}

/// One entry per class: binary necklaces of length `n` for `Naka` (with
/// oracle dimensions of the Kupisch series), special necklaces of length
/// `2n` for `Tree` (with walk dimensions of the star representative).
pub fn catalogue(n: usize, m: u32, kind: CatalogueKind) -> Result<ClassCatalogue> {
    if n == 0 || m == 0 {
        return Err(Error::BadParameter(format!("catalogue needs n, m >= 1, got n={n}, m={m}")));
    }
    let entries = match kind {
        CatalogueKind::Naka => enumerate_necklaces(CodeSpec::Binary, n)?
            .into_iter()
            .map(|word| {
                let positions = word.b_positions();
                let k = gendo_kupisch(n, m as usize, &positions)?;
                let dims = oracle_dims(&k);
                Ok(CatalogueEntry { word, positions, representative: Representative::Kupisch(k), dims })
            })
            .collect::<Result<Vec<_>>>()?,
        CatalogueKind::Tree => {
            let len = 2 * n;
            if len > DEFAULT_BOUND {
                return Err(Error::BoundExceeded { what: "necklace length", value: len, bound: DEFAULT_BOUND });
            }
            enumerate_necklaces(CodeSpec::Special, len)?
                .into_iter()
                .map(|word| {
                    let rep = star_representative(&DerivedInvariant { n, m, word: word.clone() })?;
                    let dims = dimensions(&rep.tree, &rep.w)?;
                    let w = rep.w.iter().cloned().collect();
                    Ok(CatalogueEntry {
                        word,
                        positions: rep.positions,
                        representative: Representative::Star { n, m, w },
                        dims,
                    })
                })
                .collect::<Result<Vec<_>>>()?
        }
    };
    Ok(ClassCatalogue { n, m, kind, entries })
}
