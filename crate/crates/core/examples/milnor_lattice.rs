//! Intersection form, Seifert form, monodromy and the identity suite for A_n.
//!
//! ```text
//! cargo run --example milnor_lattice [n]
//! ```

use acampo::corpus::gen_a;
use acampo::pipeline::Analysis;

fn main() {
    let n: usize = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(2);
    let a = Analysis::run(&gen_a(n).divide, None).unwrap();
    println!("basis {:?}", a.lattice.basis);
    println!("I =\n{}", a.lattice.i);
    println!("S =\n{}", a.lattice.s);
    println!("M_desc =\n{}", a.mono.m_desc);
    println!("rho_S =\n{}", a.mono.rho_s);
    println!("char(M_desc) = {}", a.char_poly);
    match a.order {
        Some(k) => println!("order {k}"),
        None => println!("order exceeds {}", a.max_power),
    }
    for c in &a.suite.checks {
        let gate = if c.gating { "" } else { " (reported)" };
        println!("{:<24} {}{gate}  {}", c.name, c.verdict, c.evidence);
    }
}
