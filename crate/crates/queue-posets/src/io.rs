//! JSON interchange and DOT export.
//!
//! A poset file is a JSON object with `elements` and `relations`, plus an
//! optional `pos` map and `outer_face` list that upgrade it to a drawing:
//!
//! ```json
//! {"elements":["a","b"],"relations":[["a","b"]],"pos":{"a":[0,0],"b":[0,1]}}
//! ```
//!
//! A layout file stores the extension and the queue of every cover:
//!
//! ```json
//! {"order":["a","b"],"queues":[[["a","b"],0]]}
//! ```

use std::collections::{BTreeMap, HashMap};

use serde::{Deserialize, Serialize};

use crate::diagram::UpwardDiagram;
use crate::error::{Error, Result};
use crate::layout::QueueLayout;
use crate::poset::{LinearExtension, Poset};

#[derive(Serialize, Deserialize)]
struct PosetDoc {
    elements: Vec<String>,
    relations: Vec<(String, String)>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pos: Option<BTreeMap<String, (f64, f64)>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    outer_face: Option<Vec<String>>,
}

#[derive(Serialize, Deserialize)]
struct LayoutDoc {
    order: Vec<String>,
    queues: Vec<((String, String), usize)>,
}

/// A parsed poset file: plain order, or a drawing when coordinates came
/// along.
#[derive(Debug, Clone)]
pub enum Parsed {
    Poset(Poset),
    Diagram(UpwardDiagram),
}

impl Parsed {
    pub fn poset(&self) -> &Poset {
        match self {
            Parsed::Poset(p) => p,
            Parsed::Diagram(d) => d.poset(),
        }
    }

    pub fn diagram(&self) -> Option<&UpwardDiagram> {
        match self {
            Parsed::Poset(_) => None,
            Parsed::Diagram(d) => Some(d),
        }
    }
}

fn json_err(e: serde_json::Error) -> Error {
    Error::Parse(e.to_string())
}

/// Reads the poset JSON format. Coordinates for every element turn the
/// result into a validated [`UpwardDiagram`]; a partial `pos` map is
/// rejected.
pub fn parse_poset(text: &str) -> Result<Parsed> {
    let doc: PosetDoc = serde_json::from_str(text).map_err(json_err)?;
    let p = Poset::from_relations(doc.elements, doc.relations)?;
    match doc.pos {
        None => {
            if doc.outer_face.is_some() {
                return Err(Error::Parse(
                    "field `outer_face` requires `pos`".to_owned(),
                ));
            }
            Ok(Parsed::Poset(p))
        }
        Some(pos) => {
            let map: HashMap<String, (f64, f64)> = pos.into_iter().collect();
            let d = UpwardDiagram::from_label_positions(p, &map, doc.outer_face)?;
            Ok(Parsed::Diagram(d))
        }
    }
}

pub fn poset_json(p: &Poset) -> String {
    let doc = PosetDoc {
        elements: p.labels().to_vec(),
        relations: cover_labels(p),
        pos: None,
        outer_face: None,
    };
    serde_json::to_string_pretty(&doc).expect("serialization cannot fail")
}

pub fn diagram_json(d: &UpwardDiagram) -> String {
    let p = d.poset();
    let doc = PosetDoc {
        elements: p.labels().to_vec(),
        relations: cover_labels(p),
        pos: Some(
            p.labels()
                .iter()
                .enumerate()
                .map(|(i, l)| (l.clone(), d.position(i)))
                .collect(),
        ),
        outer_face: d.outer_face_hint().map(<[String]>::to_vec),
    };
    serde_json::to_string_pretty(&doc).expect("serialization cannot fail")
}

pub fn layout_json(p: &Poset, layout: &QueueLayout) -> String {
    let doc = LayoutDoc {
        order: layout.extension.to_labels(p),
        queues: p
            .covers()
            .iter()
            .zip(&layout.queue_of)
            .map(|(&(a, b), &q)| ((p.label(a).to_owned(), p.label(b).to_owned()), q))
            .collect(),
    };
    serde_json::to_string_pretty(&doc).expect("serialization cannot fail")
}

/// Reads a layout file against its poset: the order must be a linear
/// extension and the queue list must mention every cover exactly once.
pub fn parse_layout(p: &Poset, text: &str) -> Result<QueueLayout> {
    let doc: LayoutDoc = serde_json::from_str(text).map_err(json_err)?;
    let extension = LinearExtension::from_labels(p, &doc.order)?;
    let mut queue_of = vec![usize::MAX; p.covers().len()];
    let mut queue_count = 0;
    for ((a, b), q) in &doc.queues {
        let ia = p
            .index_of(a)
            .ok_or_else(|| Error::UnknownElement(a.clone()))?;
        let ib = p
            .index_of(b)
            .ok_or_else(|| Error::UnknownElement(b.clone()))?;
        let ci = p
            .covers()
            .iter()
            .position(|&e| e == (ia, ib))
            .ok_or_else(|| Error::Parse(format!("{a} < {b} is not a cover of the poset")))?;
        if queue_of[ci] != usize::MAX {
            return Err(Error::Parse(format!("cover {a} < {b} is assigned twice")));
        }
        queue_of[ci] = *q;
        queue_count = queue_count.max(q + 1);
    }
    if let Some(ci) = queue_of.iter().position(|&q| q == usize::MAX) {
        let (a, b) = p.covers()[ci];
        return Err(Error::Parse(format!(
            "cover {} < {} has no queue",
            p.label(a),
            p.label(b)
        )));
    }
    Ok(QueueLayout {
        extension,
        queue_of,
        queue_count,
    })
}

fn cover_labels(p: &Poset) -> Vec<(String, String)> {
    p.covers()
        .iter()
        .map(|&(a, b)| (p.label(a).to_owned(), p.label(b).to_owned()))
        .collect()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ExportFormat {
    Json,
    Dot,
}

pub fn export_poset(p: &Poset, format: ExportFormat) -> String {
    match format {
        ExportFormat::Json => poset_json(p),
        ExportFormat::Dot => to_dot(p, None, None),
    }
}

pub fn export_diagram(d: &UpwardDiagram, format: ExportFormat) -> String {
    match format {
        ExportFormat::Json => diagram_json(d),
        ExportFormat::Dot => to_dot(d.poset(), None, Some(d.positions())),
    }
}

pub fn export_layout(p: &Poset, layout: &QueueLayout, format: ExportFormat) -> String {
    match format {
        ExportFormat::Json => layout_json(p, layout),
        ExportFormat::Dot => to_dot(p, Some(layout), None),
    }
}

/// DOT rendering of the cover graph, drawn bottom-up. Queues color the
/// edges (one hue per queue) and label them with the queue index;
/// coordinates become pinned `pos` attributes.
pub fn to_dot(
    p: &Poset,
    layout: Option<&QueueLayout>,
    positions: Option<&[(f64, f64)]>,
) -> String {
    let mut out = String::from("digraph poset {\n  rankdir=BT;\n");
    for (i, l) in p.labels().iter().enumerate() {
        out.push_str("  ");
        out.push_str(&quote(l));
        if let Some(pts) = positions {
            let (x, y) = pts[i];
            out.push_str(&format!(" [pos=\"{x},{y}!\"]"));
        }
        out.push_str(";\n");
    }
    for (ci, &(a, b)) in p.covers().iter().enumerate() {
        out.push_str("  ");
        out.push_str(&quote(p.label(a)));
        out.push_str(" -> ");
        out.push_str(&quote(p.label(b)));
        if let Some(l) = layout {
            let q = l.queue_of[ci];
            out.push_str(&format!(" [label=\"{q}\", color=\"{}\"]", queue_color(q)));
        }
        out.push_str(";\n");
    }
    out.push_str("}\n");
    out
}

/// Deterministic, pairwise distinct hues (golden-angle steps in HSV).
fn queue_color(q: usize) -> String {
    let hue = (q as f64 * 0.618_033_988_749_895).fract();
    format!("{hue:.4} 0.75 0.80")
}

fn quote(label: &str) -> String {
    let mut s = String::with_capacity(label.len() + 2);
    s.push('"');
    for c in label.chars() {
        if c == '"' || c == '\\' {
            s.push('\\');
        }
        s.push(c);
    }
    s.push('"');
    s
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::q_width;
    use crate::layout::assign_queues;

    #[test]
    fn two_chain_parses() {
        let parsed = parse_poset(r#"{"elements":["a","b"],"relations":[["a","b"]]}"#).unwrap();
        let p = parsed.poset();
        assert_eq!(p.n(), 2);
        assert_eq!(p.covers().len(), 1);
        assert!(parsed.diagram().is_none());
    }

    #[test]
    fn coordinates_give_a_diagram() {
        let parsed = parse_poset(
            r#"{"elements":["a","b"],"relations":[["a","b"]],"pos":{"a":[0,0],"b":[0,1]}}"#,
        )
        .unwrap();
        assert!(parsed.diagram().is_some());
    }

    #[test]
    fn cycle_is_reported() {
        let err = parse_poset(
            r#"{"elements":["a","b"],"relations":[["a","b"],["b","a"]]}"#,
        )
        .unwrap_err();
        assert!(matches!(err, Error::Cycle { .. }));
    }

    #[test]
    fn partial_positions_rejected() {
        let err = parse_poset(
            r#"{"elements":["a","b"],"relations":[["a","b"]],"pos":{"a":[0,0]}}"#,
        )
        .unwrap_err();
        assert!(matches!(err, Error::InvalidDiagram(_)));
    }

    #[test]
    fn malformed_json_names_the_line() {
        let err = parse_poset("{\n  \"elements\": [,]\n}").unwrap_err();
        let Error::Parse(msg) = err else {
            panic!("expected a parse error")
        };
        assert!(msg.contains("line 2"), "{msg}");
    }

    #[test]
    fn poset_round_trips() {
        let p = crate::constructions::weak_order(&[2, 2]).unwrap();
        let back = parse_poset(&poset_json(&p)).unwrap();
        assert!(back.poset().same_order_as(&p));
        assert_eq!(back.poset().labels(), p.labels());
    }

    #[test]
    fn diagram_round_trips() {
        let (p, d) = q_width(2).unwrap();
        let back = parse_poset(&diagram_json(&d)).unwrap();
        let bd = back.diagram().expect("positions preserved");
        assert!(bd.poset().same_order_as(&p));
        assert_eq!(bd.positions(), d.positions());
        assert_eq!(bd.outer_face_hint(), d.outer_face_hint());
    }

    #[test]
    fn layout_round_trips() {
        let p = crate::constructions::weak_order(&[2, 2]).unwrap();
        let ext = LinearExtension::new(&p, (0..p.n()).collect()).unwrap();
        let layout = assign_queues(&p, &ext).unwrap();
        let back = parse_layout(&p, &layout_json(&p, &layout)).unwrap();
        assert_eq!(back.extension.order(), layout.extension.order());
        assert_eq!(back.queue_of, layout.queue_of);
        assert_eq!(back.queue_count, layout.queue_count);
    }

    #[test]
    fn layout_must_cover_every_cover() {
        let p = Poset::from_relations(["a", "b", "c"], [("a", "b"), ("b", "c")]).unwrap();
        let err = parse_layout(
            &p,
            r#"{"order":["a","b","c"],"queues":[[["a","b"],0]]}"#,
        )
        .unwrap_err();
        assert!(matches!(err, Error::Parse(m) if m.contains("has no queue")));
    }

    #[test]
    fn dot_colors_queues_distinctly() {
        let p = crate::constructions::weak_order(&[2, 2]).unwrap();
        let bad = LinearExtension::from_labels(&p, &["a1", "a2", "b2", "b1"]).unwrap();
        let layout = assign_queues(&p, &bad).unwrap();
        assert!(layout.queue_count >= 2);
        let dot = export_layout(&p, &layout, ExportFormat::Dot);
        let mut colors: Vec<&str> = dot
            .lines()
            .filter_map(|l| l.split("color=\"").nth(1))
            .map(|rest| rest.split('"').next().unwrap())
            .collect();
        assert!(!colors.is_empty());
        colors.sort_unstable();
        colors.dedup();
        assert_eq!(colors.len(), layout.queue_count);
    }

    #[test]
    fn dot_pins_diagram_positions() {
        let (_, d) = q_width(2).unwrap();
        let dot = export_diagram(&d, ExportFormat::Dot);
        assert!(dot.contains("rankdir=BT"));
        assert!(dot.contains("pos=\""));
    }

    #[test]
    fn json_export_of_parse_is_identity() {
        let s = r#"{"elements":["x","y","z"],"relations":[["x","y"],["x","z"]]}"#;
        let p1 = parse_poset(s).unwrap();
        let s2 = export_poset(p1.poset(), ExportFormat::Json);
        let p2 = parse_poset(&s2).unwrap();
        assert!(p1.poset().same_order_as(p2.poset()));
        assert_eq!(p1.poset().labels(), p2.poset().labels());
    }
}
