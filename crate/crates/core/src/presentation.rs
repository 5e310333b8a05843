//! Quivers with relations for Brauer tree algebras `Λ` and the special
//! gendo-Brauer tree algebras `Γ^W`, with Cartan matrices and Loewy layers.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use crate::error::Result;
use crate::tree::{enlargement, h_set, BrauerTree, EdgeId, Enlargement, HookLabel, SpecialSubset, VertexId};

/// The arrow `x → y` for the label `(x|y)` at `label.vertex`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Arrow {
    pub source: EdgeId,
    pub target: EdgeId,
    pub label: HookLabel,
    /// A loop at a truncated leaf. It is kept so that arrows biject with the
    /// H-set, but it equals a power of the cycle at the other endpoint and is
    /// not part of a minimal quiver.
    pub redundant: bool,
}

/// A path as a sequence of arrow indices, composed left to right.
pub type Path = Vec<usize>;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Relation {
    Zero(Path),
    /// The two cycle powers are equal.
    Commutation(Path, Path),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuiverPresentation {
    /// Sorted edge ids of `G^W`.
    pub vertices: Vec<EdgeId>,
    pub arrows: Vec<Arrow>,
    pub relations: Vec<Relation>,
}

impl QuiverPresentation {
    pub fn in_degree(&self, v: &EdgeId) -> usize {
        self.arrows.iter().filter(|a| &a.target == v).count()
    }

    pub fn out_degree(&self, v: &EdgeId) -> usize {
        self.arrows.iter().filter(|a| &a.source == v).count()
    }

    /// If the non-redundant arrows form one oriented cycle through every
    /// vertex, that cycle's vertices starting from the least vertex.
    pub fn nakayama_cycle(&self) -> Option<Vec<EdgeId>> {
        let essential: Vec<&Arrow> = self.arrows.iter().filter(|a| !a.redundant).collect();
        if essential.len() != self.vertices.len() {
            return None;
        }
        let next: BTreeMap<&EdgeId, &EdgeId> = essential.iter().map(|a| (&a.source, &a.target)).collect();
        if next.len() != self.vertices.len() {
            return None;
        }
        let start = self.vertices.first()?;
        let mut cycle = alloc::vec![start.clone()];
        let mut cur = next.get(start)?;
        while *cur != start {
            if cycle.len() == self.vertices.len() {
                return None;
            }
            cycle.push((*cur).clone());
            cur = next.get(*cur)?;
        }
        (cycle.len() == self.vertices.len()).then_some(cycle)
    }
}

fn is_truncated(t: &BrauerTree, v: &VertexId) -> bool {
    t.valency(v) == 1 && t.multiplicity(v) == Some(1)
}

/// The cycle `ρ_{x,v}^{power}` around `v` starting at `x`, as arrow indices.
fn rho(t: &BrauerTree, index: &BTreeMap<HookLabel, usize>, x: &EdgeId, v: &VertexId, power: u32) -> Path {
    let order = t.order(v).expect("vertex");
    let start = order.iter().position(|e| e == x).expect("incident edge");
    let val = order.len();
    (0..val * power as usize).map(|k| index[&HookLabel::new(order[(start + k) % val].clone(), v.clone())]).collect()
}

fn build(e: &Enlargement) -> QuiverPresentation {
    let g = &e.tree;
    let removed = |h: &HookLabel| e.inserted.values().any(|l| l.leaf == h.vertex);
    let mut arrows = Vec::new();
    let mut index = BTreeMap::new();
    for h in h_set(g) {
        if removed(&h) {
            continue;
        }
        let target = g.successor_around(&h.vertex, &h.edge).expect("label").clone();
        let other = g.other_end(&h.edge, &h.vertex).expect("label");
        let redundant = is_truncated(g, &h.vertex) && !(is_truncated(g, other) && h.vertex < *other);
        index.insert(h.clone(), arrows.len());
        arrows.push(Arrow { source: h.edge.clone(), target, label: h, redundant });
    }

    let mut relations = Vec::new();
    // α: x → y around v followed by β: y → z around the other end of y.
    for (i, a) in arrows.iter().enumerate() {
        let far = g.other_end(&a.target, &a.label.vertex).expect("incident");
        if let Some(&j) = index.get(&HookLabel::new(a.target.clone(), far.clone())) {
            relations.push(Relation::Zero(alloc::vec![i, j]));
        }
    }
    for x in g.edges() {
        let [u, v] = g.ends(x).expect("edge");
        let (mu, mv) = (g.multiplicity(u).expect("vertex"), g.multiplicity(v).expect("vertex"));
        match e.label_of(x) {
            None => relations.push(Relation::Commutation(rho(g, &index, x, u, mu), rho(g, &index, x, v, mv))),
            Some(h) => {
                let m = g.multiplicity(&h.vertex).expect("vertex");
                relations.push(Relation::Zero(rho(g, &index, x, &h.vertex, m)));
            }
        }
    }
    QuiverPresentation { vertices: g.edges().cloned().collect(), arrows, relations }
}

/// Quiver and Brauer relations of the symmetric algebra `Λ_G`.
pub fn brauer_quiver(t: &BrauerTree) -> QuiverPresentation {
    build(&enlargement(t, &SpecialSubset::empty()).expect("empty subset is special"))
}

/// Quiver and relations of `Γ^W`: the Brauer quiver of `G^W` without the
/// loops at the new leaves, the zero relations, the commutation relations
/// at old edges and `ρ^{m_v} = 0` at each new vertex.
pub fn gamma_presentation(t: &BrauerTree, w: &SpecialSubset) -> Result<QuiverPresentation> {
    Ok(build(&enlargement(t, w)?))
}

/// Square matrix indexed by the presentation vertices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CartanMatrix {
    pub vertices: Vec<EdgeId>,
    pub entries: Vec<Vec<u64>>,
}

impl CartanMatrix {
    pub fn get(&self, x: &EdgeId, y: &EdgeId) -> Option<u64> {
        let i = self.vertices.iter().position(|v| v == x)?;
        let j = self.vertices.iter().position(|v| v == y)?;
        Some(self.entries[i][j])
    }

    pub fn row_sum(&self, x: &EdgeId) -> Option<u64> {
        let i = self.vertices.iter().position(|v| v == x)?;
        Some(self.entries[i].iter().sum())
    }

    pub fn is_symmetric(&self) -> bool {
        let n = self.vertices.len();
        (0..n).all(|i| (0..n).all(|j| self.entries[i][j] == self.entries[j][i]))
    }
}

/// Composition multiplicities `[P_x : S_y]` of `Γ^W` from closed formulas.
///
/// Old edges: `m_u + m_v` on the diagonal, `m_v` for edges sharing the
/// vertex `v`. A new vertex `(x|y)` at `v` meets an old edge `z` with
/// multiplicity `m_v` if `v` is an endpoint of `z`, another new vertex at
/// the same `v` with `m_v`, and itself with `m_v`.
pub fn cartan(t: &BrauerTree, w: &SpecialSubset) -> Result<CartanMatrix> {
    let e = enlargement(t, w)?;
    let g = &e.tree;
    let m = |v: &VertexId| u64::from(g.multiplicity(v).expect("vertex"));
    let vertices: Vec<EdgeId> = g.edges().cloned().collect();
    let entries = vertices
        .iter()
        .map(|x| {
            vertices
                .iter()
                .map(|y| match (e.label_of(x), e.label_of(y)) {
                    (None, None) => {
                        let [a, b] = t.ends(x).expect("old edge");
                        if x == y {
                            m(a) + m(b)
                        } else {
                            [a, b].into_iter().filter(|v| t.is_endpoint(y, v)).map(m).sum()
                        }
                    }
                    (Some(h), None) => cross(t, &h.vertex, y, m(&h.vertex)),
                    (None, Some(h)) => cross(t, &h.vertex, x, m(&h.vertex)),
                    (Some(h), Some(k)) => {
                        if h.vertex == k.vertex {
                            m(&h.vertex)
                        } else {
                            0
                        }
                    }
                })
                .collect()
        })
        .collect();
    Ok(CartanMatrix { vertices, entries })
}

fn cross(t: &BrauerTree, v: &VertexId, old: &EdgeId, mv: u64) -> u64 {
    if t.is_endpoint(old, v) {
        mv
    } else {
        0
    }
}

/// Composition factors of an indecomposable projective, by radical layer.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LoewyShape {
    /// Factors from top to socle.
    Uniserial(Vec<EdgeId>),
    /// Two uniserial branches `U` and `V` between a common top and socle.
    /// `left` runs around the smaller endpoint id.
    Biserial { top: EdgeId, left: Vec<EdgeId>, right: Vec<EdgeId>, socle: EdgeId },
}

impl LoewyShape {
    /// Radical layers from top to socle.
    pub fn layers(&self) -> Vec<Vec<EdgeId>> {
        match self {
            LoewyShape::Uniserial(chain) => chain.iter().map(|x| alloc::vec![x.clone()]).collect(),
            LoewyShape::Biserial { top, left, right, socle } => {
                let depth = left.len().max(right.len());
                let mut layers = alloc::vec![alloc::vec![top.clone()]];
                for k in 0..depth {
                    layers.push(left.get(k).into_iter().chain(right.get(k)).cloned().collect());
                }
                layers.push(alloc::vec![socle.clone()]);
                layers
            }
        }
    }

    pub fn composition_length(&self) -> usize {
        self.layers().iter().map(Vec::len).sum()
    }
}

/// Around `v` starting after `x`: `count` successive edges.
fn branch(g: &BrauerTree, x: &EdgeId, v: &VertexId, count: usize) -> Vec<EdgeId> {
    let order = g.order(v).expect("vertex");
    let start = order.iter().position(|e| e == x).expect("incident edge");
    (1..=count).map(|k| order[(start + k) % order.len()].clone()).collect()
}

/// Loewy structure of every indecomposable projective of `Γ^W`.
pub fn loewy(t: &BrauerTree, w: &SpecialSubset) -> Result<BTreeMap<EdgeId, LoewyShape>> {
    let e = enlargement(t, w)?;
    let g = &e.tree;
    let len_around = |v: &VertexId| g.valency(v) * g.multiplicity(v).expect("vertex") as usize;
    let mut out = BTreeMap::new();
    for x in g.edges() {
        let shape = match e.label_of(x) {
            Some(h) => {
                let mut chain = alloc::vec![x.clone()];
                chain.extend(branch(g, x, &h.vertex, len_around(&h.vertex) - 1));
                LoewyShape::Uniserial(chain)
            }
            None => {
                let [u, v] = g.ends(x).expect("edge");
                let left = branch(g, x, u, len_around(u) - 1);
                let right = branch(g, x, v, len_around(v) - 1);
                match (left.is_empty(), right.is_empty()) {
                    (true, true) => LoewyShape::Uniserial(alloc::vec![x.clone(), x.clone()]),
                    (false, true) | (true, false) => {
                        let mut chain = alloc::vec![x.clone()];
                        chain.extend(left.into_iter().chain(right));
                        chain.push(x.clone());
                        LoewyShape::Uniserial(chain)
                    }
                    (false, false) => LoewyShape::Biserial { top: x.clone(), left, right, socle: x.clone() },
                }
            }
        };
        out.insert(x.clone(), shape);
    }
    Ok(out)
}
