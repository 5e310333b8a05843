//! Cyclic Nakayama algebras: Kupisch series, stable coordinates on symmetric
//! Nakayama algebras, and the Kupisch series of gendo-symmetric ones.
//!
//! Conventions: the quiver has arrows `i → i+1` (indices mod `n`) and
//! modules are right modules, so the uniserial module with top `S_t` and
//! length `ℓ` has composition factors `S_t, S_{t+1}, …, S_{t+ℓ-1}` from top
//! to socle. `c_i` is the length of the projective `P_i = e_i A`.

pub mod linalg;
pub mod oracle;
pub mod rep;

use alloc::collections::BTreeSet;
use alloc::format;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::error::{Error, Result};

/// Loewy lengths `[c_0, …, c_{n-1}]` of the indecomposable projectives.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct KupischSeries {
    c: Vec<usize>,
}

impl KupischSeries {
    /// Requires `c_i ≥ 2` and `c_i - c_{i+1} ≤ 1` cyclically.
    pub fn new(c: Vec<usize>) -> Result<Self> {
        if c.is_empty() {
            return Err(Error::BadKupisch("empty series".into()));
        }
        let n = c.len();
        for i in 0..n {
            if c[i] < 2 {
                return Err(Error::BadKupisch(format!("c_{i} = {} < 2", c[i])));
            }
            if c[i] > c[(i + 1) % n] + 1 {
                return Err(Error::BadKupisch(format!(
                    "c_{i} = {} drops by more than 1 to c_{} = {}",
                    c[i],
                    (i + 1) % n,
                    c[(i + 1) % n]
                )));
            }
        }
        Ok(Self { c })
    }

    /// The symmetric series `[nm+1; n]` of the Brauer star.
    pub fn symmetric(ctx: StarContext) -> Self {
        Self { c: vec![ctx.loewy_length(); ctx.n] }
    }

    pub fn n(&self) -> usize {
        self.c.len()
    }

    pub fn entries(&self) -> &[usize] {
        &self.c
    }

    /// `c_i` with `i` read mod `n`.
    pub fn c(&self, i: usize) -> usize {
        self.c[i % self.c.len()]
    }

    pub fn projective(&self, i: usize) -> Uniserial {
        let top = i % self.n();
        Uniserial { top, len: self.c[top] }
    }

    /// Length of the injective hull of `S_s`: the longest uniserial with
    /// socle `S_s`. Uniserials with a given socle are closed under radicals,
    /// so the admissible lengths form an initial segment.
    pub fn injective_len(&self, s: usize) -> usize {
        let n = self.n();
        let mut len = 1;
        while self.c(s + n * (len + 1) - len) > len {
            len += 1;
        }
        len
    }

    pub fn injective(&self, s: usize) -> Uniserial {
        let n = self.n();
        let len = self.injective_len(s);
        Uniserial { top: (s % n + n * len + 1 - len) % n, len }
    }

    pub fn contains(&self, u: Uniserial) -> bool {
        u.top < self.n() && u.len <= self.c[u.top]
    }

    pub fn check(&self, u: Uniserial) -> Result<()> {
        if self.contains(u) {
            Ok(())
        } else {
            Err(Error::BadParameter(format!("{u} is not a module over {self}")))
        }
    }

    pub fn is_projective(&self, u: Uniserial) -> bool {
        u.len == self.c(u.top)
    }

    pub fn is_injective(&self, u: Uniserial) -> bool {
        u.len > 0 && u.len == self.injective_len(u.socle(self.n()))
    }

    /// `true` if every projective is injective.
    pub fn is_selfinjective(&self) -> bool {
        (0..self.n()).all(|i| self.is_injective(self.projective(i)))
    }

    /// All nonzero uniserial modules.
    pub fn modules(&self) -> impl Iterator<Item = Uniserial> + '_ {
        (0..self.n()).flat_map(move |top| (1..=self.c[top]).map(move |len| Uniserial { top, len }))
    }
}

impl fmt::Display for KupischSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, c) in self.c.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{c}")?;
        }
        Ok(())
    }
}

/// A uniserial module over a cyclic Nakayama algebra, by top and length.
/// `len == 0` is the zero module.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Uniserial {
    pub top: usize,
    pub len: usize,
}

impl Uniserial {
    pub fn new(top: usize, len: usize) -> Self {
        Self { top, len }
    }

    pub fn is_zero(self) -> bool {
        self.len == 0
    }

    /// Index of the socle, for a nonzero module over `n` simples.
    pub fn socle(self, n: usize) -> usize {
        (self.top + self.len - 1) % n
    }

    /// Multiplicity of `S_v` as a composition factor.
    pub fn multiplicity(self, n: usize, v: usize) -> usize {
        (0..self.len).filter(|k| (self.top + k) % n == v % n).count()
    }
}

impl fmt::Display for Uniserial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "U(top {}, len {})", self.top, self.len)
    }
}

/// The symmetric Nakayama algebra of the Brauer star with `n` edges and
/// exceptional multiplicity `m`; its Loewy length is `nm + 1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct StarContext {
    pub n: usize,
    pub m: usize,
}

impl StarContext {
    pub fn new(n: usize, m: usize) -> Result<Self> {
        if n == 0 || m == 0 {
            return Err(Error::BadParameter(format!("star context needs n, m >= 1, got n={n}, m={m}")));
        }
        Ok(Self { n, m })
    }

    /// `nm`, the largest length of a non-projective indecomposable.
    pub fn nm(self) -> usize {
        self.n * self.m
    }

    pub fn loewy_length(self) -> usize {
        self.nm() + 1
    }

    pub fn check(self, c: StableCoord) -> Result<()> {
        if c.i < self.n && (1..=self.nm()).contains(&c.len) {
            Ok(())
        } else {
            Err(Error::BadCoordinate(format!("L({}, {}) with n={}, nm={}", c.i, c.len, self.n, self.nm())))
        }
    }

    /// All non-projective indecomposables `L(i, ℓ)`.
    pub fn coords(self) -> impl Iterator<Item = StableCoord> {
        (0..self.n).flat_map(move |i| (1..=self.nm()).map(move |len| StableCoord { i, len }))
    }

    /// `L(i, ℓ)` as the uniserial with socle `S_i` and length `ℓ`.
    pub fn to_uniserial(self, c: StableCoord) -> Uniserial {
        Uniserial { top: (c.i + self.n * c.len + 1 - c.len) % self.n, len: c.len }
    }

    /// Inverse of [`to_uniserial`](Self::to_uniserial); `None` for zero or
    /// projective modules.
    pub fn to_coord(self, u: Uniserial) -> Option<StableCoord> {
        (1..=self.nm()).contains(&u.len).then(|| StableCoord { i: u.socle(self.n), len: u.len })
    }
}

/// `L(i, ℓ)`: the non-projective indecomposable with socle `S_i` and Loewy
/// length `ℓ` over a symmetric Nakayama algebra.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct StableCoord {
    pub i: usize,
    pub len: usize,
}

impl StableCoord {
    pub fn new(i: usize, len: usize) -> Self {
        Self { i, len }
    }
}

impl fmt::Display for StableCoord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "L({},{})", self.i, self.len)
    }
}

/// `Ω^k` for any integer `k`, applying `Ω L(i,j) = L(i+1-j, nm+1-j)` or
/// `Ω⁻¹ L(i,j) = L(i-j, nm+1-j)` one step at a time.
pub fn omega(ctx: StarContext, c: StableCoord, k: i64) -> Result<StableCoord> {
    ctx.check(c)?;
    let mut cur = c;
    for _ in 0..k.unsigned_abs() {
        cur = if k > 0 { omega_step(ctx, cur) } else { omega_inverse_step(ctx, cur) };
    }
    Ok(cur)
}

fn omega_step(ctx: StarContext, c: StableCoord) -> StableCoord {
    let (n, j) = (ctx.n, c.len);
    StableCoord { i: (c.i + 1 + n * j - j) % n, len: ctx.nm() + 1 - j }
}

fn omega_inverse_step(ctx: StarContext, c: StableCoord) -> StableCoord {
    let (n, j) = (ctx.n, c.len);
    StableCoord { i: (c.i + n * j - j) % n, len: ctx.nm() + 1 - j }
}

/// Whether `dst` lies in the forward hammock of `src`, i.e. the stable Hom
/// space from `src` to `dst` is nonzero.
///
/// A nonzero map `L(i,j) → L(x,y)` has as image a quotient of the source of
/// length `j - b` which is also a submodule of the target, so `b ≡ i - x`
/// (mod `n`), `0 ≤ b < j` and `j - b ≤ y`. It avoids factoring through the
/// projective cover of the target exactly when `y + b ≤ nm`.
pub fn hammock_hom(ctx: StarContext, src: StableCoord, dst: StableCoord) -> Result<bool> {
    ctx.check(src)?;
    ctx.check(dst)?;
    let n = ctx.n;
    let shift = (src.i + n - dst.i) % n;
    Ok((0..src.len).any(|b| b % n == shift && src.len <= dst.len + b && dst.len + b <= ctx.nm()))
}

/// `Ext²(L, L) = 0` criterion: `ℓ = 1` or `ℓ = nm`.
pub fn ext2_selfvanishing(ctx: StarContext, c: StableCoord) -> Result<bool> {
    ctx.check(c)?;
    Ok(c.len == 1 || c.len == ctx.nm())
}

/// Kupisch series of the gendo-symmetric Nakayama algebra of the star with
/// `n` edges, multiplicity `m` and `W` the centre labels after the edges in
/// `positions`: every old projective has length `(n+r)m + 1` and a new
/// projective of length `(n+r)m` is inserted after each marked one. The
/// rotation starts at the old projective `0`.
pub fn gendo_kupisch(n: usize, m: usize, positions: &[usize]) -> Result<KupischSeries> {
    if n == 0 || m == 0 {
        return Err(Error::BadParameter(format!("gendo_kupisch needs n, m >= 1, got n={n}, m={m}")));
    }
    let marked: BTreeSet<usize> = positions.iter().copied().collect();
    if let Some(&p) = marked.iter().find(|&&p| p >= n) {
        return Err(Error::BadParameter(format!("position {p} out of range 0..{n}")));
    }
    let r = marked.len();
    let old = (n + r) * m + 1;
    let mut c = Vec::with_capacity(n + r);
    for i in 0..n {
        c.push(old);
        if marked.contains(&i) {
            c.push(old - 1);
        }
    }
    KupischSeries::new(c)
}
