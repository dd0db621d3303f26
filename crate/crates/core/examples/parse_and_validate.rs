//! Parse a divide file, report what validation finds, and write it back canonically.
//!
//! ```text
//! cargo run --example parse_and_validate [path]
//! ```

use acampo::divide::{invariants, SignedDivide};
use acampo::{parse_divide, write_divide};

const A1: &str = r#"{
  "name": "A1",
  "mode": "map",
  "double_points": ["p"],
  "terminals": ["tE", "tN", "tW", "tS"],
  "edges": [
    {"id": "e0", "ends": [["tW", 0], ["p", 2]]},
    {"id": "e1", "ends": [["p", 0], ["tE", 0]]},
    {"id": "e2", "ends": [["tS", 0], ["p", 3]]},
    {"id": "e3", "ends": [["p", 1], ["tN", 0]]}
  ],
  "branches": [["e0", "e1"], ["e2", "e3"]],
  "sign_seed": {"edge": "e3", "side": "left", "sign": "-"}
}"#;

fn main() {
    let text = match std::env::args().nth(1) {
        Some(path) => std::fs::read_to_string(&path).expect("readable file"),
        None => A1.to_string(),
    };
    let divide = match parse_divide(&text) {
        Ok(d) => d,
        Err(diagnostics) => {
            for e in diagnostics.errors() {
                eprintln!("invalid: {e}");
            }
            std::process::exit(2);
        }
    };
    let signed = SignedDivide::new(divide.clone()).expect("faces and signs");
    let inv = invariants(&signed).expect("interval branches only");
    println!(
        "{}: d={} r={} mu={} regions={} genus={} boundary={}",
        divide.name(),
        inv.d,
        inv.r,
        inv.mu,
        inv.n_regions,
        inv.genus,
        inv.boundary_components
    );
    for (f, s) in signed.sign.iter().enumerate() {
        let kind = if signed.faces.region[f] { "region" } else { "outer" };
        println!("  face {f} ({kind}): {}", s.symbol());
    }

    // a slot used twice is caught with a precise diagnostic
    let broken = A1.replace(r#"["p", 0], ["tE", 0]"#, r#"["p", 2], ["tE", 0]"#);
    println!("corrupted copy: {}", parse_divide(&broken).unwrap_err());

    print!("{}", write_divide(&divide));
}
