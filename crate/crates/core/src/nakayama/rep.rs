//! Explicit quiver representations of uniserial modules and Hom spaces by
//! linear algebra. This is the brute-force half of the oracle: nothing here
//! uses the length bookkeeping of [`super::oracle`].

use alloc::vec::Vec;

use num_traits::{One, Zero};

use super::linalg::{Matrix, Q};
use super::{KupischSeries, Uniserial};
use crate::error::{Error, Result};

/// A representation of the cyclic quiver `0 → 1 → … → n-1 → 0`.
/// `maps[v]` is the matrix of the arrow `v → v+1`, of shape
/// `dims[v+1] × dims[v]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Representation {
    pub dims: Vec<usize>,
    pub maps: Vec<Matrix>,
}

impl Representation {
    pub fn n(&self) -> usize {
        self.dims.len()
    }

    pub fn total_dim(&self) -> usize {
        self.dims.iter().sum()
    }
}

/// A morphism of representations, one matrix per vertex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Morphism {
    pub comps: Vec<Matrix>,
}

impl Morphism {
    /// `self ∘ first`.
    pub fn after(&self, first: &Morphism) -> Morphism {
        Morphism { comps: self.comps.iter().zip(&first.comps).map(|(g, f)| g * f).collect() }
    }

    fn flatten(&self) -> Vec<Q> {
        self.comps.iter().flat_map(|m| m.entries().iter().copied()).collect()
    }
}

/// Basis vector `b_k` of a uniserial module with top `top` lives at vertex
/// `top + k`; within that vertex it is the `k / n`-th basis vector.
fn local(k: usize, n: usize) -> usize {
    k / n
}

/// The uniserial module `u` with basis `b_0, …, b_{len-1}` and `b_k α = b_{k+1}`.
pub fn uniserial_rep(n: usize, u: Uniserial) -> Representation {
    let dims: Vec<usize> = (0..n).map(|v| u.multiplicity(n, v)).collect();
    let mut maps: Vec<Matrix> = (0..n).map(|v| Matrix::zeros(dims[(v + 1) % n], dims[v])).collect();
    for k in 0..u.len.saturating_sub(1) {
        let v = (u.top + k) % n;
        maps[v].set(local(k + 1, n), local(k, n), Q::one());
    }
    Representation { dims, maps }
}

/// A basis of `Hom(m, x)`: solutions of `f_{v+1} A_v = B_v f_v` for all `v`.
pub fn hom_basis(m: &Representation, x: &Representation) -> Vec<Morphism> {
    let n = m.n();
    assert_eq!(n, x.n());
    // Unknown f_v[r][c] sits at offset[v] + r * m.dims[v] + c.
    let mut offset = Vec::with_capacity(n + 1);
    let mut total = 0;
    for v in 0..n {
        offset.push(total);
        total += x.dims[v] * m.dims[v];
    }
    let var = |v: usize, r: usize, c: usize| offset[v] + r * m.dims[v] + c;

    let mut equations = Vec::new();
    for v in 0..n {
        let w = (v + 1) % n;
        let (a, b) = (&m.maps[v], &x.maps[v]);
        for r in 0..x.dims[w] {
            for c in 0..m.dims[v] {
                let mut row = alloc::vec![Q::zero(); total];
                for k in 0..m.dims[w] {
                    row[var(w, r, k)] += a.get(k, c);
                }
                for k in 0..x.dims[v] {
                    row[var(v, k, c)] -= b.get(r, k);
                }
                equations.push(row);
            }
        }
    }
    let kernel = if equations.is_empty() { Matrix::identity(total) } else { Matrix::from_rows(equations).kernel() };

    (0..kernel.cols())
        .map(|j| {
            let sol = kernel.column(j);
            let comps = (0..n)
                .map(|v| {
                    let mut f = Matrix::zeros(x.dims[v], m.dims[v]);
                    for r in 0..x.dims[v] {
                        for c in 0..m.dims[v] {
                            f.set(r, c, sol[var(v, r, c)]);
                        }
                    }
                    f
                })
                .collect();
            Morphism { comps }
        })
        .collect()
}

/// The projective cover `P(u) → u`, sending `b_k ↦ b_k` for `k < len`.
fn projective_cover(k: &KupischSeries, u: Uniserial) -> (Representation, Morphism) {
    let n = k.n();
    let p = k.projective(u.top);
    let rep = uniserial_rep(n, p);
    let target = uniserial_rep(n, u);
    let mut comps: Vec<Matrix> = (0..n).map(|v| Matrix::zeros(target.dims[v], rep.dims[v])).collect();
    for i in 0..u.len {
        let v = (u.top + i) % n;
        comps[v].set(local(i, n), local(i, n), Q::one());
    }
    (rep, Morphism { comps })
}

/// The injective envelope `u → I(u)`, placing `u` at the bottom of the
/// longest uniserial with the same socle: `b_k ↦ b'_{k + L - len}`.
fn injective_envelope(k: &KupischSeries, u: Uniserial) -> (Representation, Morphism) {
    let n = k.n();
    let i = k.injective(u.socle(n));
    let rep = uniserial_rep(n, i);
    let source = uniserial_rep(n, u);
    let shift = i.len - u.len;
    let mut comps: Vec<Matrix> = (0..n).map(|v| Matrix::zeros(rep.dims[v], source.dims[v])).collect();
    for j in 0..u.len {
        let v = (u.top + j) % n;
        comps[v].set(local(j + shift, n), local(j, n), Q::one());
    }
    (rep, Morphism { comps })
}

fn check_nonzero(k: &KupischSeries, u: Uniserial) -> Result<()> {
    k.check(u)?;
    if u.is_zero() {
        Err(Error::ZeroModule)
    } else {
        Ok(())
    }
}

/// `dim Hom(a, b)`, or of the stable Hom space when `stable` is set.
///
/// A map factors through some projective iff it factors through the
/// projective cover `π: P(b) → b`, because any map from a projective lifts
/// along `π`. So the projectively trivial maps are the image of
/// `Hom(a, P(b)) → Hom(a, b)`, `g ↦ π ∘ g`.
pub fn oracle_hom(k: &KupischSeries, a: Uniserial, b: Uniserial, stable: bool) -> Result<usize> {
    k.check(a)?;
    k.check(b)?;
    let n = k.n();
    let (ra, rb) = (uniserial_rep(n, a), uniserial_rep(n, b));
    let dim = hom_basis(&ra, &rb).len();
    if !stable || dim == 0 {
        return Ok(dim);
    }
    let (p, pi) = projective_cover(k, b);
    let through: Vec<Vec<Q>> = hom_basis(&ra, &p).iter().map(|g| pi.after(g).flatten()).collect();
    let trivial = if through.is_empty() { 0 } else { Matrix::from_rows(through).rank() };
    Ok(dim - trivial)
}

/// A representation with simple top `S_t` over a Nakayama algebra is the
/// uniserial `U(t, total dim)`. `tops[v]` is `dim M_v` minus the rank of
/// the arrow into `v`.
fn classify(tops: &[usize], total: usize) -> Option<Uniserial> {
    if total == 0 {
        return None;
    }
    let count: usize = tops.iter().sum();
    assert_eq!(count, 1, "module over a Nakayama algebra with non-simple top");
    let top = tops.iter().position(|&t| t == 1).expect("one top");
    Some(Uniserial { top, len: total })
}

/// `Ω(u)` as the kernel of the projective cover, computed on matrices.
pub fn linear_syzygy(k: &KupischSeries, u: Uniserial) -> Result<Option<Uniserial>> {
    check_nonzero(k, u)?;
    let n = k.n();
    let (p, pi) = projective_cover(k, u);
    let kernels: Vec<Matrix> = pi.comps.iter().map(Matrix::kernel).collect();
    let dims: Vec<usize> = kernels.iter().map(Matrix::cols).collect();
    let tops: Vec<usize> = (0..n)
        .map(|w| {
            let v = (w + n - 1) % n;
            let incoming = &p.maps[v] * &kernels[v];
            dims[w] - incoming.rank()
        })
        .collect();
    Ok(classify(&tops, dims.iter().sum()))
}

/// `Ω⁻¹(u)` as the cokernel of the injective envelope, computed on matrices.
pub fn linear_cosyzygy(k: &KupischSeries, u: Uniserial) -> Result<Option<Uniserial>> {
    check_nonzero(k, u)?;
    let n = k.n();
    let (i, iota) = injective_envelope(k, u);
    let ranks: Vec<usize> = iota.comps.iter().map(Matrix::rank).collect();
    let dims: Vec<usize> = (0..n).map(|v| i.dims[v] - ranks[v]).collect();
    // The arrow into w, taken modulo the image of u, has rank
    // rank[A | ι_w] - rank ι_w; subtract that from the cokernel dimension.
    let tops: Vec<usize> = (0..n)
        .map(|w| {
            let v = (w + n - 1) % n;
            i.dims[w] - i.maps[v].hstack(&iota.comps[w]).rank()
        })
        .collect();
    Ok(classify(&tops, dims.iter().sum()))
}
