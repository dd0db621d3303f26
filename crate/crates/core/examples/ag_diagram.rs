//! Build the AΓ diagram of E6, with exposure, depths and DOT output.

use acampo::ag::{build_ag, depth_labels, exposure_set, to_dot};
use acampo::corpus::gen_e6;
use acampo::SignedDivide;

fn main() {
    let signed = SignedDivide::new(gen_e6().divide).unwrap();
    let ag = build_ag(&signed);
    let exposed = exposure_set(&signed, &ag);
    let depths = depth_labels(&ag, &exposed).unwrap();
    for (k, v) in ag.vertices.iter().enumerate() {
        let nbrs: Vec<&str> = ag.neighbors(k).into_iter().map(|j| ag.vertices[j].id.as_str()).collect();
        println!("{:<5} type {} depth {}  ~ {}", v.id, v.ty, depths.depth[k], nbrs.join(" "));
    }
    print!("{}", to_dot("E6", &ag, &depths));
}
