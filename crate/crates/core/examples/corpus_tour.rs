//! Every built-in entry checked against its expected facts.

use acampo::corpus::builtin;
use acampo::pipeline::Analysis;

fn main() {
    for entry in builtin() {
        let a = Analysis::run(&entry.divide, None).unwrap();
        let misses = entry.check(&a);
        let (neg, zero, pos) = a.ag.census();
        println!(
            "{:<7} mu={:<3} census=({neg},{zero},{pos}) depth={} facts {}/{} {}",
            entry.name,
            a.invariants.mu,
            a.depths.diagram_depth,
            entry.expected.len() - misses.len(),
            entry.expected.len(),
            if a.passed() { "pass" } else { "fail" }
        );
        for f in &entry.expected {
            println!("    {:<20} {:<12} <- {}", f.key, if f.value.is_empty() { "(none)" } else { &f.value }, f.source);
        }
    }
}
