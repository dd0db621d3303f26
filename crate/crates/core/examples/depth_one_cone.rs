//! The depth-one divide: its unique hidden saddle and the cone over it.

use acampo::corpus::gen_depth1;
use acampo::pipeline::Analysis;

fn show(v: &[num_bigint::BigInt], basis: &[String]) -> String {
    let terms: Vec<String> = v
        .iter()
        .zip(basis)
        .filter(|(x, _)| x.sign() != num_bigint::Sign::NoSign)
        .map(|(x, b)| format!("{x}*{b}"))
        .collect();
    if terms.is_empty() {
        "0".into()
    } else {
        terms.join(" + ")
    }
}

fn main() {
    let a = Analysis::run(&gen_depth1().divide, None).unwrap();
    let basis = &a.lattice.basis;
    for (k, v) in a.ag.vertices.iter().enumerate() {
        if a.depths.depth[k] > 0 {
            println!("{} has depth {}", v.id, a.depths.depth[k]);
        }
    }
    for cone in &a.cones {
        println!("cone on {} with partner {}", basis[cone.vertex], basis[cone.partner]);
        println!("  var(K')       = {}", show(&cone.var_prime, basis));
        println!("  components    = {}", cone.components.len());
        println!("  var(total)    = {}", show(&cone.var_total, basis));
        println!("  verdict       = {}", cone.verdict);
    }
}
