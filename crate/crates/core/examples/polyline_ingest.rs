//! Turn integer polylines into a combinatorial divide with exact geometry.

use acampo::corpus::{depth1_polyline, e6_polyline};
use acampo::divide::{ingest_polyline, PolyBranch, PolylineDivide};
use acampo::pipeline::Analysis;
use acampo::Sign;

fn main() {
    for drawing in [e6_polyline(), depth1_polyline()] {
        let d = ingest_polyline(&drawing).expect("drawing is a divide");
        let a = Analysis::run(&d, None).unwrap();
        let (neg, zero, pos) = a.ag.census();
        println!(
            "{}: {} double points, {} terminals, {} branches, census ({neg},{zero},{pos})",
            d.name(),
            d.double_point_count(),
            d.terminal_count(),
            d.branch_count()
        );
    }

    // two polylines through a shared grid point are refused
    let touching = PolylineDivide {
        name: "touch".into(),
        branches: vec![
            PolyBranch { points: vec![(-150, 0), (0, 0), (150, 10)], closed: false },
            PolyBranch { points: vec![(0, -150), (0, 0), (10, 150)], closed: false },
        ],
        disc_radius: 100,
        seed_point: (50, 50),
        seed_sign: Sign::Plus,
    };
    println!("touching: {}", ingest_polyline(&touching).unwrap_err());
}
