//! Green's walk around a planar tree.

use alloc::vec::Vec;

use crate::tree::{EdgeId, HookLabel, PlanarTree, VertexId};

/// One traversal of an edge: leave `from`, arrive at `to`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct WalkStep {
    pub edge: EdgeId,
    pub from: VertexId,
    pub to: VertexId,
}

impl WalkStep {
    /// The hook label sitting at this step: the traversed edge together with
    /// the vertex it is left from.
    pub fn label(&self) -> HookLabel {
        HookLabel { edge: self.edge.clone(), vertex: self.from.clone() }
    }
}

/// The closed walk `v_0, x_1, v_1, x_2, …` where `x_{i+1}` is the predecessor
/// of `x_i` around `v_i`. It traverses every edge once in each direction, so
/// it has `2·|edges|` steps; step `i` carries the hook label at walk
/// position `i`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GreenWalk {
    steps: Vec<WalkStep>,
}

impl GreenWalk {
    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    pub fn steps(&self) -> &[WalkStep] {
        &self.steps
    }

    /// Step `i`, read cyclically.
    pub fn step(&self, i: usize) -> &WalkStep {
        &self.steps[i % self.steps.len()]
    }

    pub fn edges(&self) -> impl Iterator<Item = &EdgeId> + '_ {
        self.steps.iter().map(|s| &s.edge)
    }

    /// Vertices `v_0, …, v_{2N-1}` the steps start from.
    pub fn vertices(&self) -> impl Iterator<Item = &VertexId> + '_ {
        self.steps.iter().map(|s| &s.from)
    }

    /// Walk position of a hook label.
    pub fn position(&self, h: &HookLabel) -> Option<usize> {
        self.steps.iter().position(|s| s.edge == h.edge && s.from == h.vertex)
    }

    pub fn label_at(&self, i: usize) -> HookLabel {
        self.step(i).label()
    }

    /// The same walk started at step `k`.
    pub fn rotated(&self, k: usize) -> GreenWalk {
        let mut steps = self.steps.clone();
        steps.rotate_left(k % self.steps.len().max(1));
        GreenWalk { steps }
    }

    /// Whether the edge sequence equals `edges` up to cyclic rotation.
    pub fn matches_edges<S: AsRef<str>>(&self, edges: &[S]) -> bool {
        let mine: Vec<&str> = self.edges().map(EdgeId::as_str).collect();
        let theirs: Vec<&str> = edges.iter().map(AsRef::as_ref).collect();
        is_rotation(&mine, &theirs)
    }
}

/// `true` if `b` is a cyclic rotation of `a`.
pub fn is_rotation<T: PartialEq>(a: &[T], b: &[T]) -> bool {
    if a.len() != b.len() {
        return false;
    }
    if a.is_empty() {
        return true;
    }
    (0..a.len()).any(|k| (0..a.len()).all(|i| a[(i + k) % a.len()] == b[i]))
}

/// Green's walk, started at the least `(edge, from-vertex)` step.
pub fn green_walk(t: &PlanarTree) -> GreenWalk {
    let Some(first) = t.edges().next() else {
        return GreenWalk { steps: Vec::new() };
    };
    let [a, b] = t.ends(first).expect("edge has ends");
    let mut steps = Vec::with_capacity(2 * t.edge_count());
    let (mut edge, mut from, mut to) = (first.clone(), a.clone(), b.clone());
    for _ in 0..2 * t.edge_count() {
        let next = t.predecessor_around(&to, &edge).expect("incident edge").clone();
        let next_to = t.other_end(&next, &to).expect("incident edge").clone();
        steps.push(WalkStep { edge, from, to: to.clone() });
        (edge, from, to) = (next, to, next_to);
    }
    debug_assert_eq!((&edge, &from), (first, a));
    GreenWalk { steps }
}
