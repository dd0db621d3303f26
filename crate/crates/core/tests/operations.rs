//! Worked examples for each operation, with hand-computed expectations.

mod common;

use acampo::adapted::{
    adapted_vectors, depth1_cone, euler_matrix, exceptional_certificate, pl_variation, quiver_dot, verify_adapted,
};
use acampo::ag::{build_ag, depth_labels, exposure_set, to_dot, AgDiagram, AgEdge, AgVertex, Origin, VertexType};
use acampo::corpus::{gen_a, gen_depth1, gen_e6};
use acampo::divide::{ingest_polyline, invariants, trace_faces, PolyBranch, PolylineDivide};
use acampo::lattice::{char_poly_and_order, identity_suite, seifert_matrix, transvection, MilnorLattice};
use acampo::pipeline::Analysis;
use acampo::{parse_divide, IntMatrix, Sign, SignedDivide};
use common::*;

const A1: &str = include_str!("data/a1.json");

fn run(d: &acampo::Divide) -> Analysis {
    Analysis::run(d, None).unwrap()
}

fn im(rows: &[&[i64]]) -> IntMatrix {
    IntMatrix::from_rows(rows)
}

#[test]
fn parse_a1_file() {
    let d = parse_divide(A1).unwrap();
    assert_eq!((d.double_point_count(), d.branch_count(), d.terminal_count(), d.edges().len()), (1, 2, 4, 4));
}

#[test]
fn three_valent_vertex_is_rejected() {
    let text = A1.replace(",\n    {\"id\": \"e3\", \"ends\": [[\"p\", 1], [\"tN\", 0]]}", "").replace(", \"e3\"]", "]");
    assert_ne!(text, A1);
    let err = parse_divide(&text).unwrap_err().to_string();
    assert!(err.contains("degree mismatch at vertex"), "{err}");
}

#[test]
fn crossing_diagonals_give_a1() {
    let p = PolylineDivide {
        name: "X".into(),
        branches: vec![
            PolyBranch { points: vec![(-20, -20), (20, 20)], closed: false },
            PolyBranch { points: vec![(-20, 20), (20, -20)], closed: false },
        ],
        disc_radius: 10,
        seed_point: (0, 5),
        seed_sign: Sign::Minus,
    };
    let d = ingest_polyline(&p).unwrap();
    assert_eq!((d.double_point_count(), d.branch_count()), (1, 2));
}

#[test]
fn a4_snake_polyline() {
    let d = ingest_polyline(&acampo::corpus::a4_polyline()).unwrap();
    let s = SignedDivide::new(d).unwrap();
    let inv = invariants(&s).unwrap();
    assert_eq!((inv.d, inv.r, inv.n_regions), (2, 1, 2));
}

#[test]
fn face_counts() {
    let a1 = trace_faces(&parse_divide(A1).unwrap()).unwrap();
    assert_eq!((a1.len(), a1.region_count()), (4, 0));
    let a2 = trace_faces(&gen_a(2).divide).unwrap();
    // V = 3, E = 3 + 2 arcs, so F = 1 - V + E = 3: the eye and two outer faces
    assert_eq!((a2.len(), a2.region_count()), (3, 1));
    assert_eq!(trace_faces(&gen_e6().divide).unwrap().region_count(), 3);
}

#[test]
fn a1_outer_signs_alternate() {
    let s = SignedDivide::new(parse_divide(A1).unwrap()).unwrap();
    assert_eq!(s.sign[s.seed_face()], Sign::Minus);
    let minus = s.sign.iter().filter(|&&x| x == Sign::Minus).count();
    assert_eq!((s.sign.len(), minus), (4, 2));
    for e in 0..4 {
        assert_ne!(s.sign[s.faces.left_of_edge(e)], s.sign[s.faces.right_of_edge(e)]);
    }
}

#[test]
fn region_signs() {
    let region_signs = |d: &acampo::Divide| {
        let s = SignedDivide::new(d.clone()).unwrap();
        let mut v: Vec<Sign> = s.faces.regions().into_iter().map(|f| s.sign[f]).collect();
        v.sort_by_key(|x| x.symbol());
        v
    };
    assert_eq!(region_signs(&gen_a(4).divide), vec![Sign::Minus, Sign::Minus]);
    let mut e6 = region_signs(&gen_e6().divide);
    e6.sort_by_key(|&x| x != Sign::Minus);
    assert_eq!(e6, vec![Sign::Minus, Sign::Minus, Sign::Plus]);
}

#[test]
fn surface_invariants() {
    for (d, want) in [(gen_a(4).divide, (2, 1, 4, 2, 1)), (gen_e6().divide, (3, 1, 6, 3, 1)), (gen_depth1().divide, (6, 3, 10, 4, 3))] {
        let inv = invariants(&SignedDivide::new(d).unwrap()).unwrap();
        assert_eq!((inv.d, inv.r, inv.mu, inv.genus, inv.boundary_components), want);
        assert_eq!(inv.euler_characteristic, 1 - inv.mu as i64);
    }
}

#[test]
fn ag_of_a1_and_exposure() {
    let s = SignedDivide::new(parse_divide(A1).unwrap()).unwrap();
    let ag = build_ag(&s);
    assert_eq!(ag.len(), 1);
    assert!(ag.edges.is_empty());
    assert_eq!(exposure_set(&s, &ag), vec![0]);
    let dot = to_dot("A1", &ag, &depth_labels(&ag, &[0]).unwrap());
    assert_eq!(dot.matches("label=").count(), 1);
    assert!(!dot.contains(" -- "));
}

#[test]
fn exposure_of_corpus_divides() {
    let e6 = run(&gen_e6().divide);
    assert_eq!(e6.exposed, (0..6).collect::<Vec<_>>());
    assert_eq!(e6.depths.diagram_depth, 0);
    let d1 = run(&gen_depth1().divide);
    let v = d1.ag.position("v0_6").unwrap();
    let hidden: Vec<usize> = (0..10).filter(|k| !d1.exposed.contains(k)).collect();
    assert_eq!(hidden, vec![v]);
}

#[test]
fn depths_along_a_path() {
    let ag = AgDiagram {
        vertices: (0..5)
            .map(|k| AgVertex {
                id: format!("x{k}"),
                ty: if k % 2 == 0 { VertexType::Minus } else { VertexType::Zero },
                origin: Origin::DoublePoint(k),
            })
            .collect(),
        edges: (0..4).map(|k| AgEdge { u: k, v: k + 1, multiplicity: 1 }).collect(),
    };
    let d = depth_labels(&ag, &[0]).unwrap();
    assert_eq!(d.depth, vec![0, 1, 2, 3, 4]);
    assert_eq!(d.diagram_depth, 4);
}

#[test]
fn e6_dot_is_six_nodes_nine_edges() {
    let a = run(&gen_e6().divide);
    let dot = to_dot("E6", &a.ag, &a.depths);
    assert_eq!(dot.matches("label=\"").count() - dot.matches(" -- ").count(), 6);
    assert_eq!(dot.matches(" -- ").count(), 9);
    assert_eq!(dot, to_dot("E6", &a.ag, &a.depths));
}

#[test]
fn a2_lattice_by_hand() {
    let a = run(&gen_a(2).divide);
    assert_eq!(a.lattice.basis, vec!["v-_1", "v0_1"]);
    assert_eq!(a.lattice.i, im(&[&[0, -1], &[1, 0]]));
    assert_eq!(a.lattice.s, im(&[&[1, 0], &[-1, 1]]));
    assert_eq!(transvection(&a.lattice.i, 0, -1), im(&[&[1, -1], &[0, 1]]));
    assert_eq!(a.mono.m_desc, im(&[&[0, -1], &[1, 1]]));
    assert_eq!(a.mono.rho_s, im(&[&[0, 1], &[-1, 1]]));
    assert!((&a.mono.rho_s * &a.mono.m_asc).is_identity());
    assert!(a.suite.checks.iter().all(|c| c.verdict.passed()));
    assert_eq!(a.mono.m_desc.trace(), 1.into());
}

#[test]
fn a1_lattice_by_hand() {
    let a = run(&gen_a(1).divide);
    assert_eq!(a.lattice.i, im(&[&[0]]));
    assert_eq!(a.lattice.s, im(&[&[1]]));
    for m in [&a.mono.m_desc, &a.mono.m_asc, &a.mono.rho_s] {
        assert_eq!(m, &im(&[&[1]]));
    }
    assert!(a.suite.checks.iter().all(|c| c.verdict.passed()));
    let (p, order) = char_poly_and_order(&a.mono.m_desc, 12);
    assert_eq!(p.to_string(), "t - 1");
    assert_eq!(order, Some(1));
}

#[test]
fn transvection_fixes_its_own_cycle() {
    let a = run(&gen_e6().divide);
    for k in 0..6 {
        let t = transvection(&a.lattice.i, k, -1);
        let e = big(&(0..6).map(|j| i64::from(j == k)).collect::<Vec<_>>());
        assert_eq!(t.mul_vec(&e), e);
    }
}

#[test]
fn e6_intersection_pattern() {
    let a = run(&gen_e6().divide);
    let i = small(&a.lattice.i);
    for e in &a.ag.edges {
        assert_eq!((i[e.v][e.u], i[e.u][e.v]), (1, -1));
    }
    assert_eq!(i.iter().flatten().filter(|&&x| x != 0).count(), 18);
    let s = seifert_matrix(&a.lattice.i);
    assert_eq!(&(-&s) + &s.transpose(), a.lattice.i);
}

#[test]
fn e6_order_divides_twelve() {
    let a = run(&gen_e6().divide);
    assert!(a.suite.passed());
    let k = oracle_order(&small(&a.mono.m_desc), 24).unwrap();
    assert_eq!(12 % k, 0);
    assert_eq!(a.order, Some(k));
}

#[test]
fn a4_order_is_ten() {
    let a = run(&gen_a(4).divide);
    assert_eq!(a.order, Some(10));
    assert_eq!(oracle_order(&small(&a.mono.m_desc), 100), Some(10));
}

#[test]
fn suite_reports_ascending_trace_without_gating() {
    let a = run(&gen_e6().divide);
    let asc = a.suite.get("ascending_trace").unwrap();
    assert!(!asc.gating);
    assert_eq!(trace(&small(&a.mono.m_asc)), -7);
    assert!(asc.evidence.contains("-7"));
    let suite = identity_suite(&a.lattice, &a.mono, a.invariants.r);
    assert_eq!(suite, a.suite);
}

#[test]
fn adapted_examples() {
    let a2 = MilnorLattice::from_intersection(im(&[&[0, -1], &[1, 0]]));
    let f = adapted_vectors(&a2.i);
    assert_eq!(f.vectors, vec![big(&[1, 0]), big(&[1, 1])]);
    assert_eq!(pl_variation(&big(&[1, 0]), &a2.i, -1), big(&[-1, 0]));
    assert_eq!(pl_variation(&big(&[1, 1]), &a2.i, -1), big(&[0, -1]));
    assert_eq!(pl_variation(&big(&[0, 0]), &a2.i, -1), big(&[0, 0]));
    let a1 = MilnorLattice::from_intersection(im(&[&[0]]));
    assert_eq!(adapted_vectors(&a1.i).vectors, vec![big(&[1])]);

    let e6 = run(&gen_e6().divide);
    let plus = e6.ag.position("v+_1").unwrap();
    assert_eq!(plus, 5);
    assert_eq!(e6.family.vectors[plus], big(&[1, 1, 1, 1, 1, 1]));
    for name in ["E6", "A4"] {
        let d = if name == "E6" { gen_e6().divide } else { gen_a(4).divide };
        let a = run(&d);
        assert!(verify_adapted(&a.family, &a.lattice).iter().all(|v| v.verdict.passed()));
    }
}

#[test]
fn euler_examples() {
    let a1 = run(&gen_a(1).divide);
    assert_eq!(a1.euler.e, im(&[&[1]]));
    let a4 = run(&gen_a(4).divide);
    assert_eq!(a4.euler.arrows.len(), 3);
    let q = quiver_dot("A4", &a4.euler);
    assert_eq!(q.matches("->").count(), 3);
    assert_eq!(q.lines().filter(|l| l.trim().trim_end_matches(';').parse::<usize>().is_ok()).count(), 4);
    let e6 = run(&gen_e6().divide);
    assert_eq!(quiver_dot("E6", &e6.euler).matches("->").count(), 9);
    assert_eq!(euler_matrix(&e6.lattice), e6.euler);
    for n in 1..=12 {
        let a = run(&gen_a(n).divide);
        assert!(a.certificate.verdict.passed(), "A{n}");
        assert_eq!(a.euler.arrows.len(), n - 1);
    }
}

#[test]
fn certificate_flags_lower_entry() {
    let e6 = run(&gen_e6().divide);
    let mut e = e6.euler.e.clone();
    e[(2, 0)] = 1.into();
    let c = exceptional_certificate(&e, &e6.ag);
    assert!(!c.verdict.passed());
    assert_eq!((c.violations[0].row, c.violations[0].col), (3, 1));
}

#[test]
fn cone_examples() {
    let d1 = run(&gen_depth1().divide);
    let v = d1.ag.position("v0_6").unwrap();
    let cone = depth1_cone(&d1.ag, &d1.depths, &d1.lattice, v).unwrap();
    assert_eq!(d1.ag.vertices[cone.partner].ty, VertexType::Minus);
    assert_eq!(cone.components.len(), d1.depths.depth[v] + 1);
    let err = depth1_cone(&d1.ag, &d1.depths, &d1.lattice, 0).unwrap_err();
    assert!(err.to_string().contains("not depth 1"), "{err}");
}

#[test]
fn corpus_examples() {
    let a1 = run(&gen_a(1).divide);
    assert_eq!((a1.ag.census(), a1.invariants.n_regions), ((0, 1, 0), 0));
    let a2 = run(&gen_a(2).divide);
    assert_eq!((a2.ag.census(), a2.ag.edges.len()), ((1, 1, 0), 1));
    let e6 = run(&gen_e6().divide);
    assert_eq!(e6.invariants.mu, 2 * 3 - 1 + 1);
}
