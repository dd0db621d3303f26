//! Reading and writing divide files.
//!
//! A file is one JSON object. `mode` selects between a combinatorial map and
//! integer polylines; the grammar is in `docs/divide-format.md`. Writing
//! always produces the canonical map form.

use serde::Deserialize;
use serde_json::Value;

use super::polyline::{ingest_polyline, PolyBranch, PolylineDivide};
use super::{Diagnostics, Divide, DivideError, RawDivide, RawEdge, RawSeed, Side, Sign};

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct MapDoc {
    name: String,
    #[allow(dead_code)]
    mode: String,
    double_points: Vec<String>,
    terminals: Vec<String>,
    edges: Vec<EdgeDoc>,
    branches: Vec<Vec<String>>,
    sign_seed: MapSeedDoc,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct EdgeDoc {
    id: String,
    ends: [(String, u8); 2],
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct MapSeedDoc {
    edge: String,
    side: Side,
    sign: Sign,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct PolyDoc {
    name: String,
    #[allow(dead_code)]
    mode: String,
    branches: Vec<PolyBranchDoc>,
    disc_radius: i64,
    sign_seed: PolySeedDoc,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct PolyBranchDoc {
    points: Vec<(i64, i64)>,
    closed: bool,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct PolySeedDoc {
    point: (i64, i64),
    sign: Sign,
}

/// A parsed but not yet validated divide file.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum DivideDoc {
    Map(RawDivide),
    Polyline(PolylineDivide),
}

fn syntax(msg: impl Into<String>) -> Diagnostics {
    Diagnostics::single(DivideError::Syntax(msg.into()))
}

pub fn parse_document(text: &str) -> Result<DivideDoc, Diagnostics> {
    let value: Value = serde_json::from_str(text).map_err(|e| syntax(e.to_string()))?;
    let mode = value
        .get("mode")
        .ok_or_else(|| syntax("missing key `mode`"))?
        .as_str()
        .ok_or_else(|| syntax("`mode` must be a string"))?;
    match mode {
        "map" => {
            let doc: MapDoc = serde_json::from_value(value).map_err(|e| syntax(e.to_string()))?;
            Ok(DivideDoc::Map(RawDivide {
                name: doc.name,
                double_points: doc.double_points,
                terminals: doc.terminals,
                edges: doc.edges.into_iter().map(|e| RawEdge { id: e.id, ends: e.ends }).collect(),
                branches: doc.branches,
                sign_seed: RawSeed { edge: doc.sign_seed.edge, side: doc.sign_seed.side, sign: doc.sign_seed.sign },
            }))
        }
        "polyline" => {
            let doc: PolyDoc = serde_json::from_value(value).map_err(|e| syntax(e.to_string()))?;
            Ok(DivideDoc::Polyline(PolylineDivide {
                name: doc.name,
                branches: doc
                    .branches
                    .into_iter()
                    .map(|b| PolyBranch { points: b.points, closed: b.closed })
                    .collect(),
                disc_radius: doc.disc_radius,
                seed_point: doc.sign_seed.point,
                seed_sign: doc.sign_seed.sign,
            }))
        }
        other => Err(syntax(format!("unknown mode `{other}` (expected \"map\" or \"polyline\")"))),
    }
}

/// Parses and validates a divide file of either mode.
pub fn parse_divide(text: &str) -> Result<Divide, Diagnostics> {
    match parse_document(text)? {
        DivideDoc::Map(raw) => Divide::from_raw(raw),
        DivideDoc::Polyline(p) => ingest_polyline(&p),
    }
}

fn q(s: &str) -> String {
    serde_json::to_string(s).expect("strings always serialize")
}

fn list(items: &[String]) -> String {
    let parts: Vec<String> = items.iter().map(|s| q(s)).collect();
    format!("[{}]", parts.join(", "))
}

/// Canonical map-mode text. `parse_divide(&write_divide(d)) == d`.
pub fn write_divide(divide: &Divide) -> String {
    let raw = divide.to_raw();
    let mut out = String::new();
    out.push_str("{\n");
    out.push_str(&format!("  \"name\": {},\n", q(&raw.name)));
    out.push_str("  \"mode\": \"map\",\n");
    out.push_str(&format!("  \"double_points\": {},\n", list(&raw.double_points)));
    out.push_str(&format!("  \"terminals\": {},\n", list(&raw.terminals)));
    out.push_str("  \"edges\": [\n");
    for (i, e) in raw.edges.iter().enumerate() {
        let sep = if i + 1 < raw.edges.len() { "," } else { "" };
        out.push_str(&format!(
            "    {{\"id\": {}, \"ends\": [[{}, {}], [{}, {}]]}}{sep}\n",
            q(&e.id),
            q(&e.ends[0].0),
            e.ends[0].1,
            q(&e.ends[1].0),
            e.ends[1].1
        ));
    }
    out.push_str("  ],\n");
    out.push_str("  \"branches\": [\n");
    for (i, b) in raw.branches.iter().enumerate() {
        let sep = if i + 1 < raw.branches.len() { "," } else { "" };
        out.push_str(&format!("    {}{sep}\n", list(b)));
    }
    out.push_str("  ],\n");
    let side = match raw.sign_seed.side {
        Side::Left => "left",
        Side::Right => "right",
    };
    out.push_str(&format!(
        "  \"sign_seed\": {{\"edge\": {}, \"side\": \"{side}\", \"sign\": \"{}\"}}\n",
        q(&raw.sign_seed.edge),
        raw.sign_seed.sign
    ));
    out.push_str("}\n");
    out
}
