//! The adapted family of E6, its variations, and the Euler quiver certificate.

use acampo::adapted::quiver_dot;
use acampo::corpus::gen_e6;
use acampo::pipeline::Analysis;

fn main() {
    let a = Analysis::run(&gen_e6().divide, None).unwrap();
    for (j, (v, verdict)) in a.family.vectors.iter().zip(&a.variation).enumerate() {
        let vec: Vec<String> = v.iter().map(|x| x.to_string()).collect();
        println!(
            "a_{} ({}) = [{}]  var = [{}]  {}",
            j + 1,
            a.lattice.basis[j],
            vec.join(", "),
            verdict.variation.join(", "),
            verdict.verdict
        );
    }
    println!("E =\n{}", a.euler.e);
    let (neg, pos) = a.euler.upper_signs();
    println!("upper entries: {neg} negative, {pos} positive; certificate {}", a.certificate.verdict);
    print!("{}", quiver_dot("E6", &a.euler));
}
