//! Brauer trees, hook labels, special subsets and the enlarged tree `G^W`.

use alloc::collections::{BTreeMap, BTreeSet, VecDeque};
use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::ops::Deref;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};

macro_rules! id_type {
    ($(#[$meta:meta])* $name:ident) => {
        $(#[$meta])*
        #[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
        pub struct $name(String);

        impl $name {
            pub fn new(id: impl Into<String>) -> Self {
                Self(id.into())
            }

            pub fn as_str(&self) -> &str {
                &self.0
            }
        }

        impl fmt::Display for $name {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                f.write_str(&self.0)
            }
        }

        impl From<&str> for $name {
            fn from(id: &str) -> Self {
                Self(id.into())
            }
        }

        impl From<String> for $name {
            fn from(id: String) -> Self {
                Self(id)
            }
        }
    };
}

id_type!(
    /// Opaque edge identifier. Edges of a Brauer tree are the simple modules
    /// of its algebra.
    EdgeId
);
id_type!(
    /// Opaque vertex identifier.
    VertexId
);

/// Unvalidated tree description, as read from a file.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct RawTree {
    pub vertices: Vec<RawVertex>,
    pub edges: Vec<RawEdge>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RawVertex {
    pub id: String,
    pub mult: u32,
    /// Incident edges in counter-clockwise cyclic order.
    pub order: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RawEdge {
    pub id: String,
    pub ends: [String; 2],
}

/// A finite tree with a cyclic ordering of the edges around every vertex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PlanarTree {
    /// Endpoints of each edge, smaller id first.
    ends: BTreeMap<EdgeId, [VertexId; 2]>,
    order: BTreeMap<VertexId, Vec<EdgeId>>,
}

impl PlanarTree {
    pub fn edge_count(&self) -> usize {
        self.ends.len()
    }

    pub fn vertex_count(&self) -> usize {
        self.order.len()
    }

    /// Edges in sorted id order.
    pub fn edges(&self) -> impl Iterator<Item = &EdgeId> + '_ {
        self.ends.keys()
    }

    /// Vertices in sorted id order.
    pub fn vertices(&self) -> impl Iterator<Item = &VertexId> + '_ {
        self.order.keys()
    }

    pub fn has_edge(&self, e: &EdgeId) -> bool {
        self.ends.contains_key(e)
    }

    pub fn has_vertex(&self, v: &VertexId) -> bool {
        self.order.contains_key(v)
    }

    pub fn ends(&self, e: &EdgeId) -> Option<&[VertexId; 2]> {
        self.ends.get(e)
    }

    pub fn is_endpoint(&self, e: &EdgeId, v: &VertexId) -> bool {
        self.ends(e).is_some_and(|[a, b]| a == v || b == v)
    }

    pub fn other_end(&self, e: &EdgeId, v: &VertexId) -> Option<&VertexId> {
        let [a, b] = self.ends.get(e)?;
        if a == v {
            Some(b)
        } else if b == v {
            Some(a)
        } else {
            None
        }
    }

    /// Counter-clockwise cyclic order of the edges around `v`.
    pub fn order(&self, v: &VertexId) -> Option<&[EdgeId]> {
        self.order.get(v).map(Vec::as_slice)
    }

    pub fn valency(&self, v: &VertexId) -> usize {
        self.order.get(v).map_or(0, Vec::len)
    }

    fn position_around(&self, v: &VertexId, e: &EdgeId) -> Option<(usize, &[EdgeId])> {
        let order = self.order(v)?;
        let i = order.iter().position(|x| x == e)?;
        Some((i, order))
    }

    /// The edge following `e` around `v`.
    pub fn successor_around(&self, v: &VertexId, e: &EdgeId) -> Option<&EdgeId> {
        let (i, order) = self.position_around(v, e)?;
        Some(&order[(i + 1) % order.len()])
    }

    /// The edge preceding `e` around `v`.
    pub fn predecessor_around(&self, v: &VertexId, e: &EdgeId) -> Option<&EdgeId> {
        let (i, order) = self.position_around(v, e)?;
        Some(&order[(i + order.len() - 1) % order.len()])
    }

    /// Number of edges on the unique path between `u` and `v`.
    pub fn distance(&self, u: &VertexId, v: &VertexId) -> Option<usize> {
        if !self.has_vertex(u) || !self.has_vertex(v) {
            return None;
        }
        let mut dist: BTreeMap<&VertexId, usize> = BTreeMap::new();
        let mut queue = VecDeque::new();
        dist.insert(u, 0);
        queue.push_back(u);
        while let Some(x) = queue.pop_front() {
            let d = dist[x];
            if x == v {
                return Some(d);
            }
            for e in &self.order[x] {
                let y = self.other_end(e, x).expect("incident edge");
                if !dist.contains_key(y) {
                    dist.insert(y, d + 1);
                    queue.push_back(y);
                }
            }
        }
        None
    }

    /// Whether `u` and `v` are at even distance.
    pub fn same_parity(&self, u: &VertexId, v: &VertexId) -> Option<bool> {
        self.distance(u, v).map(|d| d % 2 == 0)
    }
}

/// A planar tree with vertex multiplicities, at most one of which exceeds 1.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BrauerTree {
    tree: PlanarTree,
    mult: BTreeMap<VertexId, u32>,
}

impl Deref for BrauerTree {
    type Target = PlanarTree;

    fn deref(&self) -> &PlanarTree {
        &self.tree
    }
}

impl BrauerTree {
    pub fn planar(&self) -> &PlanarTree {
        &self.tree
    }

    pub fn multiplicity(&self, v: &VertexId) -> Option<u32> {
        self.mult.get(v).copied()
    }

    /// The exceptional vertex, if some vertex has multiplicity > 1.
    pub fn exceptional(&self) -> Option<(&VertexId, u32)> {
        self.mult.iter().find(|(_, &m)| m > 1).map(|(v, &m)| (v, m))
    }

    /// Exceptional multiplicity; 1 when all multiplicities are 1.
    pub fn exceptional_multiplicity(&self) -> u32 {
        self.exceptional().map_or(1, |(_, m)| m)
    }

    pub fn is_multiplicity_free(&self) -> bool {
        self.exceptional().is_none()
    }

    /// Sets the multiplicity of `v`, keeping all other multiplicities.
    pub fn with_multiplicity(&self, v: &VertexId, m: u32) -> Result<BrauerTree> {
        if !self.has_vertex(v) {
            return Err(Error::UnknownId(v.to_string()));
        }
        if m == 0 {
            return Err(Error::BadParameter("multiplicity must be positive".into()));
        }
        let mut mult = self.mult.clone();
        mult.insert(v.clone(), m);
        check_exceptional(&mult)?;
        Ok(BrauerTree { tree: self.tree.clone(), mult })
    }

    /// Makes `v` the exceptional vertex with multiplicity `m`; every other
    /// vertex gets multiplicity 1.
    pub fn with_exceptional(&self, v: &VertexId, m: u32) -> Result<BrauerTree> {
        let mut reset = self.clone();
        for x in reset.mult.values_mut() {
            *x = 1;
        }
        reset.with_multiplicity(v, m)
    }

    /// The description this tree was (or could have been) built from.
    pub fn to_raw(&self) -> RawTree {
        RawTree {
            vertices: self
                .tree
                .order
                .iter()
                .map(|(v, order)| RawVertex {
                    id: v.to_string(),
                    mult: self.mult[v],
                    order: order.iter().map(ToString::to_string).collect(),
                })
                .collect(),
            edges: self
                .tree
                .ends
                .iter()
                .map(|(e, [a, b])| RawEdge { id: e.to_string(), ends: [a.to_string(), b.to_string()] })
                .collect(),
        }
    }

    /// `true` if `h` is one of the tree's hook labels.
    pub fn has_label(&self, h: &HookLabel) -> bool {
        self.is_endpoint(&h.edge, &h.vertex)
    }

    fn check_label(&self, h: &HookLabel) -> Result<()> {
        if self.has_label(h) {
            Ok(())
        } else {
            Err(label_not_in_tree(h))
        }
    }

    /// The classical symbol `(x|y)` of a hook label: the edge and its successor.
    pub fn hook_symbol(&self, h: &HookLabel) -> Result<String> {
        let y = successor(self, h)?;
        Ok(format!("({}|{})", h.edge, y))
    }
}

fn check_exceptional(mult: &BTreeMap<VertexId, u32>) -> Result<()> {
    let mut heavy = mult.iter().filter(|(_, &m)| m > 1).map(|(v, _)| v);
    if let (Some(a), Some(b)) = (heavy.next(), heavy.next()) {
        return Err(Error::MultipleExceptional(a.to_string(), b.to_string()));
    }
    Ok(())
}

pub(crate) fn label_not_in_tree(h: &HookLabel) -> Error {
    Error::LabelNotInTree { edge: h.edge.to_string(), vertex: h.vertex.to_string() }
}

/// An element `(x|y)` of the H-set, stored as the edge `x` together with its
/// associating vertex. `y` is the successor of `x` around that vertex.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct HookLabel {
    pub edge: EdgeId,
    pub vertex: VertexId,
}

impl HookLabel {
    pub fn new(edge: impl Into<EdgeId>, vertex: impl Into<VertexId>) -> Self {
        Self { edge: edge.into(), vertex: vertex.into() }
    }
}

impl fmt::Display for HookLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}@{})", self.edge, self.vertex)
    }
}

/// A set of hook labels no two of which are Ω-adjacent.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SpecialSubset {
    labels: BTreeSet<HookLabel>,
}

impl SpecialSubset {
    pub fn empty() -> Self {
        Self::default()
    }

    /// Validates membership in `h_set(t)` and specialness.
    pub fn new(t: &BrauerTree, labels: impl IntoIterator<Item = HookLabel>) -> Result<Self> {
        let labels: BTreeSet<HookLabel> = labels.into_iter().collect();
        check_special(t, &labels)?;
        Ok(Self { labels })
    }

    pub fn labels(&self) -> &BTreeSet<HookLabel> {
        &self.labels
    }

    pub fn iter(&self) -> impl Iterator<Item = &HookLabel> + '_ {
        self.labels.iter()
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn contains(&self, h: &HookLabel) -> bool {
        self.labels.contains(h)
    }
}

/// Checks that no `(x|y)` and `(y|z)` in `labels` are associated to different
/// endpoints of `y`, i.e. that the path `x → y → z` is not a zero relation.
pub(crate) fn check_special(t: &BrauerTree, labels: &BTreeSet<HookLabel>) -> Result<()> {
    for h in labels {
        t.check_label(h)?;
    }
    for h in labels {
        let y = t.successor_around(&h.vertex, &h.edge).expect("checked label");
        let far = t.other_end(y, &h.vertex).expect("incident edge");
        let next = HookLabel::new(y.clone(), far.clone());
        if labels.contains(&next) {
            return Err(Error::NotSpecial(next.to_string(), h.to_string()));
        }
    }
    Ok(())
}

/// Validates a raw description into a [`BrauerTree`].
pub fn validate_tree(raw: &RawTree) -> Result<BrauerTree> {
    if raw.edges.is_empty() {
        return Err(Error::EmptyTree);
    }
    let mut mult = BTreeMap::new();
    for v in &raw.vertices {
        if v.mult == 0 {
            return Err(Error::BadParameter(format!("vertex {} has multiplicity 0", v.id)));
        }
        if mult.insert(VertexId::from(v.id.as_str()), v.mult).is_some() {
            return Err(Error::DuplicateId(v.id.clone()));
        }
    }
    let mut ends = BTreeMap::new();
    for e in &raw.edges {
        let [a, b] = &e.ends;
        for x in [a, b] {
            if !mult.contains_key(&VertexId::from(x.as_str())) {
                return Err(Error::UnknownId(x.clone()));
            }
        }
        if a == b {
            return Err(Error::NotATree(format!("edge {} is a loop", e.id)));
        }
        let pair = if a < b { [a, b] } else { [b, a] };
        let pair = pair.map(|x| VertexId::from(x.as_str()));
        if ends.insert(EdgeId::from(e.id.as_str()), pair).is_some() {
            return Err(Error::DuplicateId(e.id.clone()));
        }
    }
    if mult.len() != ends.len() + 1 {
        return Err(Error::NotATree(format!("{} vertices and {} edges", mult.len(), ends.len())));
    }

    let mut incident: BTreeMap<&VertexId, BTreeSet<&EdgeId>> = mult.keys().map(|v| (v, BTreeSet::new())).collect();
    for (e, [a, b]) in &ends {
        incident.get_mut(a).expect("known").insert(e);
        incident.get_mut(b).expect("known").insert(e);
    }

    let mut order = BTreeMap::new();
    for v in &raw.vertices {
        let id = VertexId::from(v.id.as_str());
        let listed: Vec<EdgeId> = v.order.iter().map(|e| EdgeId::from(e.as_str())).collect();
        let as_set: BTreeSet<&EdgeId> = listed.iter().collect();
        if as_set.len() != listed.len() || as_set != incident[&id] {
            return Err(Error::BadCyclicOrder(v.id.clone()));
        }
        order.insert(id, listed);
    }

    let tree = PlanarTree { ends, order };
    let start = tree.vertices().next().expect("nonempty");
    let reached = tree.vertices().filter(|v| tree.distance(start, v).is_some()).count();
    if reached != tree.vertex_count() {
        return Err(Error::NotATree("graph is disconnected".into()));
    }
    check_exceptional(&mult)?;
    Ok(BrauerTree { tree, mult })
}

/// All hook labels, one per (edge, endpoint), sorted by edge then vertex.
pub fn h_set(t: &BrauerTree) -> Vec<HookLabel> {
    t.ends
        .iter()
        .flat_map(|(e, [a, b])| [HookLabel::new(e.clone(), a.clone()), HookLabel::new(e.clone(), b.clone())])
        .collect()
}

/// `y` with `(x|y)` the label `h`.
pub fn successor(t: &BrauerTree, h: &HookLabel) -> Result<EdgeId> {
    t.successor_around(&h.vertex, &h.edge).cloned().ok_or_else(|| label_not_in_tree(h))
}

/// The edge before `h.edge` around `h.vertex`.
pub fn predecessor(t: &BrauerTree, h: &HookLabel) -> Result<EdgeId> {
    t.predecessor_around(&h.vertex, &h.edge).cloned().ok_or_else(|| label_not_in_tree(h))
}

/// A new leaf added to `G^W` for one element of `W`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InsertedLeaf {
    pub edge: EdgeId,
    pub leaf: VertexId,
}

/// The enlarged tree `G^W` together with the leaf inserted for each label.
#[derive(Clone, Debug)]
pub struct Enlargement {
    pub tree: BrauerTree,
    pub inserted: BTreeMap<HookLabel, InsertedLeaf>,
}

impl Enlargement {
    pub fn is_new_edge(&self, e: &EdgeId) -> bool {
        self.inserted.values().any(|l| &l.edge == e)
    }

    /// The `W` label whose leaf is `e`.
    pub fn label_of(&self, e: &EdgeId) -> Option<&HookLabel> {
        self.inserted.iter().find(|(_, l)| &l.edge == e).map(|(h, _)| h)
    }
}

fn fresh(base: String, taken: impl Fn(&str) -> bool) -> String {
    if !taken(&base) {
        return base;
    }
    (1..).map(|i| format!("{base}#{i}")).find(|c| !taken(c)).expect("unbounded")
}

/// Builds `G^W`: one new leaf edge `(x|y)` per label, inserted between `x`
/// and `y` around the associating vertex. New leaves have multiplicity 1.
pub fn enlargement(t: &BrauerTree, w: &SpecialSubset) -> Result<Enlargement> {
    check_special(t, &w.labels)?;
    let mut tree = t.clone();
    let mut inserted = BTreeMap::new();
    for h in w.iter() {
        let y = successor(t, h)?;
        let edge = EdgeId::new(fresh(format!("({}|{})", h.edge, y), |c| tree.tree.ends.contains_key(&EdgeId::from(c))));
        let leaf = VertexId::new(fresh(format!("{edge}'"), |c| tree.tree.order.contains_key(&VertexId::from(c))));

        let order = tree.tree.order.get_mut(&h.vertex).expect("checked label");
        let at = order.iter().position(|x| x == &h.edge).expect("incident");
        order.insert(at + 1, edge.clone());
        tree.tree.order.insert(leaf.clone(), vec![edge.clone()]);
        let pair = if h.vertex < leaf { [h.vertex.clone(), leaf.clone()] } else { [leaf.clone(), h.vertex.clone()] };
        tree.tree.ends.insert(edge.clone(), pair);
        tree.mult.insert(leaf.clone(), 1);
        inserted.insert(h.clone(), InsertedLeaf { edge, leaf });
    }
    Ok(Enlargement { tree, inserted })
}

/// The enlarged Brauer tree `G^W`.
pub fn enlarge(t: &BrauerTree, w: &SpecialSubset) -> Result<BrauerTree> {
    enlargement(t, w).map(|e| e.tree)
}

fn build(vertices: Vec<(String, u32, Vec<String>)>, edges: Vec<(String, [String; 2])>) -> BrauerTree {
    let raw = RawTree {
        vertices: vertices.into_iter().map(|(id, mult, order)| RawVertex { id, mult, order }).collect(),
        edges: edges.into_iter().map(|(id, ends)| RawEdge { id, ends }).collect(),
    };
    validate_tree(&raw).expect("generator produces valid trees")
}

/// Brauer star: edges `0..n` around the centre `c` (multiplicity `m`), leaves `l0..`.
pub fn make_star(n: usize, m: u32) -> Result<BrauerTree> {
    if n < 1 || m < 1 {
        return Err(Error::BadParameter(format!("star needs n >= 1 and m >= 1, got n={n}, m={m}")));
    }
    let mut vertices = vec![("c".to_string(), m, (0..n).map(|i| i.to_string()).collect())];
    let mut edges = Vec::new();
    for i in 0..n {
        vertices.push((format!("l{i}"), 1, vec![i.to_string()]));
        edges.push((i.to_string(), ["c".to_string(), format!("l{i}")]));
    }
    Ok(build(vertices, edges))
}

/// Brauer line: vertices `v0..=vn`, edge `i` joins `v{i}` and `v{i+1}`.
pub fn make_line(n: usize) -> Result<BrauerTree> {
    if n < 1 {
        return Err(Error::BadParameter("line needs n >= 1".into()));
    }
    let vertices = (0..=n)
        .map(|i| {
            let order = [i.checked_sub(1), (i < n).then_some(i)].into_iter().flatten().map(|e| e.to_string()).collect();
            (format!("v{i}"), 1, order)
        })
        .collect();
    let edges = (0..n).map(|i| (i.to_string(), [format!("v{i}"), format!("v{}", i + 1)])).collect();
    Ok(build(vertices, edges))
}

/// The line with `k-1` edges and `W` the single label at the leaf end of
/// edge `0`; `Γ^W` is the algebra `Γ_k`.
pub fn make_gamma_seed(k: usize) -> Result<(BrauerTree, SpecialSubset)> {
    if k < 2 {
        return Err(Error::BadParameter(format!("gamma seed needs k >= 2, got {k}")));
    }
    let t = make_line(k - 1)?;
    let w = SpecialSubset::new(&t, [HookLabel::new("0", "v0")])?;
    Ok((t, w))
}

/// Deterministic pseudo-random planar tree with `n` edges, all multiplicities 1.
///
/// A ChaCha8 stream seeded with `seed` draws a Prüfer sequence of length
/// `n - 1` over the vertices `v0..=vn`; decoding it (smallest leaf first)
/// gives the edges `0..n` in creation order. The same stream then shuffles
/// the incident edges of each vertex, in vertex order, to fix the cyclic
/// orderings.
pub fn random_tree(n: usize, seed: u64) -> Result<BrauerTree> {
    if n < 1 {
        return Err(Error::BadParameter("random tree needs n >= 1".into()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let vertex_count = n + 1;
    let pruefer: Vec<usize> = (0..n - 1).map(|_| rng.gen_range(0..vertex_count)).collect();

    let mut degree = vec![1usize; vertex_count];
    for &a in &pruefer {
        degree[a] += 1;
    }
    let mut pairs = Vec::with_capacity(n);
    for &a in &pruefer {
        let leaf = (0..vertex_count).find(|&b| degree[b] == 1).expect("a leaf exists");
        pairs.push((leaf, a));
        degree[leaf] -= 1;
        degree[a] -= 1;
    }
    let last: Vec<usize> = (0..vertex_count).filter(|&b| degree[b] == 1).collect();
    pairs.push((last[0], last[1]));

    let mut incident = vec![Vec::new(); vertex_count];
    for (i, &(a, b)) in pairs.iter().enumerate() {
        incident[a].push(i.to_string());
        incident[b].push(i.to_string());
    }
    for order in &mut incident {
        order.shuffle(&mut rng);
    }
    let vertices = incident.into_iter().enumerate().map(|(v, order)| (format!("v{v}"), 1, order)).collect();
    let edges =
        pairs.into_iter().enumerate().map(|(i, (a, b))| (i.to_string(), [format!("v{a}"), format!("v{b}")])).collect();
    Ok(build(vertices, edges))
}


#[cfg(test)]
mod tests {
    use super::fixtures::*;
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn single_edge_has_two_labels() {
        let t = single_edge(1, 1);
        let h = h_set(&t);
        assert_eq!(h, vec![HookLabel::new("x", "u"), HookLabel::new("x", "v")]);
        assert_eq!(successor(&t, &h[0]).unwrap(), EdgeId::from("x"));
        assert_eq!(t.hook_symbol(&h[1]).unwrap(), "(x|x)");
    }

    #[test]
    fn example_tree_validates() {
        let t = example_tree();
        assert_eq!(t.vertex_count(), 5);
        assert_eq!(t.edge_count(), 4);
        assert_eq!(h_set(&t).len(), 8);
        assert_eq!(t.exceptional(), Some((&VertexId::from("v"), 2)));
        let h = HookLabel::new("2", "u");
        assert_eq!(successor(&t, &h).unwrap(), EdgeId::from("0"));
        assert_eq!(predecessor(&t, &h).unwrap(), EdgeId::from("1"));
        assert_eq!(t.hook_symbol(&HookLabel::new("2", "v")).unwrap(), "(2|3)");
    }

    #[test]
    fn rejects_two_exceptional_vertices() {
        let r = raw_tree(&[("u", 2, "x"), ("v", 3, "x")], &[("x", "u", "v")]);
        assert_eq!(validate_tree(&r), Err(Error::MultipleExceptional("u".into(), "v".into())));
    }

    #[test]
    fn rejects_malformed_trees() {
        assert_eq!(validate_tree(&RawTree::default()), Err(Error::EmptyTree));

        let cycle = raw_tree(
            &[("a", 1, "x z"), ("b", 1, "x y"), ("c", 1, "y z"), ("d", 1, "")],
            &[("x", "a", "b"), ("y", "b", "c"), ("z", "c", "a")],
        );
        assert!(matches!(validate_tree(&cycle), Err(Error::NotATree(_))));

        let disconnected =
            raw_tree(&[("a", 1, "x"), ("b", 1, "x"), ("c", 1, "y")], &[("x", "a", "b"), ("y", "c", "c")]);
        assert!(matches!(validate_tree(&disconnected), Err(Error::NotATree(_))));

        let mut bad_order = example_tree_raw();
        bad_order.vertices[0].order = vec!["0".into(), "1".into()];
        assert_eq!(validate_tree(&bad_order), Err(Error::BadCyclicOrder("u".into())));

        let mut repeated = example_tree_raw();
        repeated.vertices[0].order = vec!["0".into(), "1".into(), "2".into(), "2".into()];
        assert_eq!(validate_tree(&repeated), Err(Error::BadCyclicOrder("u".into())));
    }

    #[test]
    fn star_labels() {
        let t = make_star(3, 1).unwrap();
        let h = h_set(&t);
        assert_eq!(h.len(), 6);
        for i in 0..3 {
            assert!(h.contains(&HookLabel::new(i.to_string(), "c")));
            assert!(h.contains(&HookLabel::new(i.to_string(), format!("l{i}"))));
        }
    }

    #[test]
    fn local_star() {
        let t = make_star(1, 2).unwrap();
        assert_eq!(t.edge_count(), 1);
        assert_eq!(t.multiplicity(&"c".into()), Some(2));
        assert!(make_star(0, 1).is_err());
        assert!(make_line(0).is_err());
        assert!(make_gamma_seed(1).is_err());
    }

    #[test]
    fn enlarge_example_mixed_parity() {
        let (t, w) = example_mixed_parity();
        let big = enlarge(&t, &w).unwrap();
        assert_eq!(big.edge_count(), 6);
        let order = |v: &str| -> Vec<String> { big.order(&v.into()).unwrap().iter().map(|e| e.to_string()).collect() };
        assert_eq!(order("u"), ["0", "1", "2", "(2|0)"]);
        assert_eq!(order("v"), ["2", "(2|3)", "3"]);
        assert_eq!(big.exceptional(), Some((&VertexId::from("v"), 2)));
    }

    #[test]
    fn enlarge_empty_is_identity() {
        let t = example_tree();
        assert_eq!(enlarge(&t, &SpecialSubset::empty()).unwrap(), t);
    }

    #[test]
    fn enlarge_star_example() {
        let (t, w) = example_nakayama();
        let big = enlarge(&t, &w).unwrap();
        assert_eq!(big.edge_count(), 7);
        let order: Vec<String> = big.order(&"c".into()).unwrap().iter().map(|e| e.to_string()).collect();
        assert_eq!(order, ["0", "(0|1)", "1", "2", "(2|3)", "3", "4"]);
    }

    #[test]
    fn non_special_subsets_are_rejected() {
        let t = single_edge(1, 1);
        let both = [HookLabel::new("x", "u"), HookLabel::new("x", "v")];
        assert!(matches!(SpecialSubset::new(&t, both), Err(Error::NotSpecial(..))));

        // (0|1) at u and (1|1) at the leaf u1 are Ω-adjacent.
        let t = example_tree();
        let w = [HookLabel::new("0", "u"), HookLabel::new("1", "u1")];
        assert!(matches!(SpecialSubset::new(&t, w), Err(Error::NotSpecial(..))));

        let w = [HookLabel::new("0", "nowhere")];
        assert!(matches!(SpecialSubset::new(&t, w), Err(Error::LabelNotInTree { .. })));
    }

    #[test]
    fn gamma_seed() {
        let (t, w) = make_gamma_seed(2).unwrap();
        assert_eq!(t.edge_count(), 1);
        assert_eq!(w.len(), 1);
        let (t, _) = make_gamma_seed(5).unwrap();
        assert_eq!(t.edge_count(), 4);
    }

    #[test]
    fn with_exceptional_moves_the_multiplicity() {
        let t = example_tree();
        let moved = t.with_exceptional(&"u".into(), 3).unwrap();
        assert_eq!(moved.exceptional(), Some((&VertexId::from("u"), 3)));
        assert!(t.with_multiplicity(&"u".into(), 3).is_err());
        assert_eq!(validate_tree(&moved.to_raw()).unwrap(), moved);
    }

    #[test]
    fn random_tree_is_reproducible() {
        assert_eq!(random_tree(6, 17).unwrap(), random_tree(6, 17).unwrap());
        assert_eq!(random_tree(1, 3).unwrap().edge_count(), 1);
    }

    proptest! {
        #[test]
        fn tree_invariants(n in 1usize..12, seed in any::<u64>()) {
            let t = random_tree(n, seed).unwrap();
            prop_assert_eq!(t.edge_count(), n);
            let h = h_set(&t);
            prop_assert_eq!(h.len(), 2 * n);
            for v in t.vertices() {
                prop_assert_eq!(h.iter().filter(|l| &l.vertex == v).count(), t.valency(v));
            }
            for l in &h {
                let y = successor(&t, l).unwrap();
                let back = predecessor(&t, &HookLabel::new(y, l.vertex.clone())).unwrap();
                prop_assert_eq!(&back, &l.edge);
            }
        }

        #[test]
        fn parity_is_consistent(n in 1usize..12, seed in any::<u64>()) {
            let t = random_tree(n, seed).unwrap();
            let vs: Vec<_> = t.vertices().cloned().collect();
            for a in &vs {
                for b in &vs {
                    for c in &vs {
                        let ab = t.same_parity(a, b).unwrap();
                        let bc = t.same_parity(b, c).unwrap();
                        let ac = t.same_parity(a, c).unwrap();
                        prop_assert_eq!(ac, ab == bc);
                    }
                }
            }
        }

        #[test]
        fn enlarge_preserves_old_structure(n in 1usize..8, seed in any::<u64>(), pick in any::<u64>()) {
            let t = random_tree(n, seed).unwrap().with_exceptional(&VertexId::from("v0"), 3).unwrap();
            let labels = h_set(&t);
            // Greedy special subset from a pseudo-random bit pattern.
            let mut chosen = BTreeSet::new();
            for (i, l) in labels.iter().enumerate() {
                if pick >> (i % 64) & 1 == 1 {
                    chosen.insert(l.clone());
                    if check_special(&t, &chosen).is_err() {
                        chosen.remove(l);
                    }
                }
            }
            let w = SpecialSubset::new(&t, chosen).unwrap();
            let e = enlargement(&t, &w).unwrap();
            let big = &e.tree;
            prop_assert_eq!(big.edge_count(), n + w.len());
            prop_assert_eq!(big.exceptional(), t.exceptional());
            prop_assert!(validate_tree(&big.to_raw()).is_ok());
            for v in t.vertices() {
                let restricted: Vec<_> = big.order(v).unwrap().iter().filter(|x| t.has_edge(x)).cloned().collect();
                prop_assert_eq!(restricted.as_slice(), t.order(v).unwrap());
            }
        }
    }
}
