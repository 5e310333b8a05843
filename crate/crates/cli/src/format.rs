//! The tree description file: a JSON document with `vertices`, `edges` and
//! the special subset `W`. Unknown fields are rejected.

use gendo_core::tree::{validate_tree, RawEdge, RawTree, RawVertex};
use gendo_core::{BrauerTree, HookLabel, SpecialSubset};
use serde::{Deserialize, Serialize};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TreeFile {
    pub vertices: Vec<VertexEntry>,
    pub edges: Vec<EdgeEntry>,
    #[serde(rename = "W", default)]
    pub w: Vec<LabelEntry>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct VertexEntry {
    pub id: String,
    #[serde(default = "one")]
    pub mult: u32,
    /// Incident edges, counter-clockwise.
    pub order: Vec<String>,
}

fn one() -> u32 {
    1
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct EdgeEntry {
    pub id: String,
    pub ends: [String; 2],
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct LabelEntry {
    pub edge: String,
    pub vertex: String,
}

impl From<&HookLabel> for LabelEntry {
    fn from(h: &HookLabel) -> Self {
        Self { edge: h.edge.to_string(), vertex: h.vertex.to_string() }
    }
}

impl TreeFile {
    pub fn parse(text: &str) -> serde_json::Result<Self> {
        serde_json::from_str(text)
    }

    pub fn raw(&self) -> RawTree {
        RawTree {
            vertices: self
                .vertices
                .iter()
                .map(|v| RawVertex { id: v.id.clone(), mult: v.mult, order: v.order.clone() })
                .collect(),
            edges: self.edges.iter().map(|e| RawEdge { id: e.id.clone(), ends: e.ends.clone() }).collect(),
        }
    }

    /// Validates the tree, then that `W` names hook labels of it and is special.
    pub fn build(&self) -> gendo_core::Result<(BrauerTree, SpecialSubset)> {
        let t = validate_tree(&self.raw())?;
        let w = SpecialSubset::new(&t, self.w.iter().map(|l| HookLabel::new(l.edge.as_str(), l.vertex.as_str())))?;
        Ok((t, w))
    }

    pub fn from_tree(t: &BrauerTree, w: &SpecialSubset) -> Self {
        let raw = t.to_raw();
        Self {
            vertices: raw
                .vertices
                .into_iter()
                .map(|v| VertexEntry { id: v.id, mult: v.mult, order: v.order })
                .collect(),
            edges: raw.edges.into_iter().map(|e| EdgeEntry { id: e.id, ends: e.ends }).collect(),
            w: w.iter().map(LabelEntry::from).collect(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const SINGLE: &str = r#"{
        "vertices": [{"id": "u", "order": ["x"]}, {"id": "v", "mult": 3, "order": ["x"]}],
        "edges": [{"id": "x", "ends": ["u", "v"]}],
        "W": [{"edge": "x", "vertex": "u"}]
    }"#;

    #[test]
    fn mult_defaults_to_one() {
        let f = TreeFile::parse(SINGLE).unwrap();
        assert_eq!(f.vertices[0].mult, 1);
        let (t, w) = f.build().unwrap();
        assert_eq!(t.exceptional_multiplicity(), 3);
        assert_eq!(w.len(), 1);
    }

    #[test]
    fn unknown_fields_are_rejected() {
        let bad = SINGLE.replacen("\"id\": \"u\"", "\"id\": \"u\", \"colour\": 1", 1);
        assert!(TreeFile::parse(&bad).is_err());
        assert!(TreeFile::parse(&SINGLE.replace("\"W\"", "\"w\"")).is_err());
    }

    #[test]
    fn w_is_optional() {
        let f = TreeFile::parse(r#"{"vertices": [], "edges": []}"#).unwrap();
        assert!(f.w.is_empty());
        assert!(f.build().is_err());
    }

    #[test]
    fn round_trip() {
        let f = TreeFile::parse(SINGLE).unwrap();
        let (t, w) = f.build().unwrap();
        let back = TreeFile::from_tree(&t, &w);
        assert_eq!(back.build().unwrap(), (t, w));
        let again = TreeFile::parse(&serde_json::to_string(&back).unwrap()).unwrap();
        assert_eq!(again, back);
    }
}
