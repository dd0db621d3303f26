//! The consolidated JSON report for a generated divide.
//!
//! ```text
//! cargo run --example full_report [a N | e6 | depth1]
//! ```

use acampo::corpus::{gen_a, gen_depth1, gen_e6};
use acampo::pipeline::Analysis;
use acampo::report::Report;
use acampo::write_divide;

fn main() {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let entry = match args.first().map(String::as_str) {
        Some("a") => gen_a(args.get(1).and_then(|s| s.parse().ok()).unwrap_or(4)),
        Some("depth1") => gen_depth1(),
        _ => gen_e6(),
    };
    let text = write_divide(&entry.divide);
    let analysis = Analysis::run(&entry.divide, None).unwrap();
    print!("{}", Report::new(&analysis, text.as_bytes()).to_json());
}
