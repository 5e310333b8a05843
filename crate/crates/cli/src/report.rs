//! JSON renderings of library values. Object keys come out sorted because
//! `serde_json::Map` is a `BTreeMap`; infinite dimensions print as "infinity".

use gendo_core::enumeration::{CatalogueEntry, ClassCatalogue, Representative};
use gendo_core::homdim::WalkMarks;
use gendo_core::nakayama::oracle::ResolutionTrace;
use gendo_core::nakayama::Uniserial;
use gendo_core::orbits::DerivedInvariant;
use gendo_core::presentation::{CartanMatrix, LoewyShape, QuiverPresentation, Relation};
use gendo_core::{Dim, DimensionReport, EdgeId, GreenWalk, HookLabel};
use num_bigint::BigUint;
use serde_json::{json, Value};

pub fn dim(d: Dim) -> Value {
    match d {
        Dim::Finite(n) => json!(n),
        Dim::Infinite => json!("infinity"),
    }
}

pub fn label(h: &HookLabel) -> Value {
    json!({ "edge": h.edge.as_str(), "vertex": h.vertex.as_str() })
}

fn ids(v: &[EdgeId]) -> Vec<&str> {
    v.iter().map(EdgeId::as_str).collect()
}

pub fn dimensions(d: &DimensionReport) -> Value {
    json!({
        "domdim": dim(d.domdim),
        "gorenstein": dim(d.gorenstein),
        "gldim": dim(d.gldim),
        "higher_auslander": d.higher_auslander,
    })
}

/// Counts stay JSON numbers while they fit in a `u64`, then become strings.
pub fn count(c: &BigUint) -> Value {
    match u64::try_from(c) {
        Ok(n) => json!(n),
        Err(_) => json!(c.to_string()),
    }
}

pub fn invariant(inv: &DerivedInvariant) -> Value {
    json!({ "n": inv.n, "m": inv.m, "word": inv.word.to_string() })
}

pub fn presentation(q: &QuiverPresentation) -> Value {
    let arrows: Vec<Value> = q
        .arrows
        .iter()
        .enumerate()
        .map(|(i, a)| {
            json!({
                "index": i,
                "source": a.source.as_str(),
                "target": a.target.as_str(),
                "label": label(&a.label),
                "redundant": a.redundant,
            })
        })
        .collect();
    let relations: Vec<Value> = q
        .relations
        .iter()
        .map(|r| match r {
            Relation::Zero(p) => json!({ "kind": "zero", "path": p }),
            Relation::Commutation(a, b) => json!({ "kind": "commutation", "left": a, "right": b }),
        })
        .collect();
    json!({ "vertices": ids(&q.vertices), "arrows": arrows, "relations": relations })
}

fn quote(s: &str) -> String {
    format!("\"{}\"", s.replace('\\', "\\\\").replace('"', "\\\""))
}

/// One node per vertex, one edge per arrow; relations become comments.
/// Redundant loops are drawn dashed.
pub fn dot(q: &QuiverPresentation) -> String {
    let mut out = String::from("digraph quiver {\n");
    for v in &q.vertices {
        out += &format!("  {};\n", quote(v.as_str()));
    }
    for a in &q.arrows {
        let style = if a.redundant { ", style=dashed" } else { "" };
        out += &format!(
            "  {} -> {} [label={}{style}];\n",
            quote(a.source.as_str()),
            quote(a.target.as_str()),
            quote(&a.label.to_string())
        );
    }
    let path = |p: &[usize]| p.iter().map(|&i| q.arrows[i].label.to_string()).collect::<Vec<_>>().join(" ");
    for r in &q.relations {
        // Ids are free text; keep every comment on one line.
        let text = match r {
            Relation::Zero(p) => format!("zero: {}", path(p)),
            Relation::Commutation(a, b) => format!("commutation: {} = {}", path(a), path(b)),
        };
        out += &format!("  // {}\n", text.replace(['\n', '\r'], " "));
    }
    out += "}\n";
    out
}

pub fn cartan(c: &CartanMatrix) -> Value {
    json!({ "vertices": ids(&c.vertices), "entries": c.entries, "symmetric": c.is_symmetric() })
}

pub fn loewy_shape(s: &LoewyShape) -> Value {
    let layers = s.layers();
    let layers: Vec<Vec<&str>> = layers.iter().map(|l| l.iter().map(EdgeId::as_str).collect()).collect();
    let mut v = match s {
        LoewyShape::Uniserial(_) => json!({ "shape": "uniserial" }),
        LoewyShape::Biserial { top, left, right, socle } => json!({
            "shape": "biserial",
            "top": top.as_str(),
            "left": ids(left),
            "right": ids(right),
            "socle": socle.as_str(),
        }),
    };
    v["layers"] = json!(layers);
    v["length"] = json!(s.composition_length());
    v
}

pub fn walk(w: &GreenWalk) -> Value {
    let steps: Vec<Value> = w
        .steps()
        .iter()
        .map(|s| json!({ "edge": s.edge.as_str(), "from": s.from.as_str(), "to": s.to.as_str() }))
        .collect();
    let edges: Vec<&str> = w.edges().map(EdgeId::as_str).collect();
    json!({ "length": w.len(), "edges": edges, "steps": steps })
}

/// Marked return steps of an enlarged walk with the gap to the next mark.
pub fn marks(m: &WalkMarks) -> Value {
    let gaps = m.gaps();
    let marks: Vec<Value> = m
        .omega
        .iter()
        .zip(gaps)
        .map(|(i, gap)| json!({ "step": i, "next": m.eta[i], "gap": gap, "label": label(&m.labels[i]) }))
        .collect();
    json!(marks)
}

pub fn uniserial(u: Uniserial) -> Value {
    json!({ "top": u.top, "len": u.len })
}

pub fn trace(t: &ResolutionTrace) -> Value {
    json!({
        "terms": t.terms.iter().copied().map(uniserial).collect::<Vec<_>>(),
        "kernels": t.kernels.iter().copied().map(uniserial).collect::<Vec<_>>(),
        "periodic": t.periodic,
        "dimension": dim(t.dimension()),
    })
}

fn entry(e: &CatalogueEntry) -> Value {
    let mut v = json!({
        "word": e.word.to_string(),
        "positions": e.positions,
        "domdim": dim(e.dims.domdim),
        "gorenstein": dim(e.dims.gorenstein),
        "gldim": dim(e.dims.gldim),
    });
    match &e.representative {
        Representative::Kupisch(k) => v["kupisch"] = json!(k.entries()),
        Representative::Star { n, m, w } => {
            v["star"] = json!({ "n": n, "m": m, "W": w.iter().map(label).collect::<Vec<_>>() })
        }
    }
    v
}

pub fn catalogue(c: &ClassCatalogue) -> Value {
    json!(c.entries.iter().map(entry).collect::<Vec<_>>())
}
