//! Built-in divides with their expected facts.

use std::collections::BTreeMap;

use crate::divide::polyline::{PolyBranch, PolylineDivide};
use crate::divide::{Divide, RawDivide, RawEdge, RawSeed, Side, Sign};
use crate::pipeline::Analysis;

/// One expected value and where it comes from.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Fact {
    pub key: &'static str,
    pub value: String,
    pub source: &'static str,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CorpusEntry {
    pub name: String,
    pub divide: Divide,
    pub expected: Vec<Fact>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FactMismatch {
    pub key: &'static str,
    pub expected: String,
    pub observed: String,
}

impl CorpusEntry {
    /// Compares every expected fact with an analysis of some divide.
    pub fn check(&self, analysis: &Analysis) -> Vec<FactMismatch> {
        let observed = observed_facts(analysis);
        self.expected
            .iter()
            .filter_map(|f| {
                let got = observed.get(f.key).cloned().unwrap_or_else(|| "<missing>".into());
                (got != f.value).then(|| FactMismatch { key: f.key, expected: f.value.clone(), observed: got })
            })
            .collect()
    }
}

/// The facts an analysis exhibits, keyed like [`Fact::key`].
pub fn observed_facts(a: &Analysis) -> BTreeMap<&'static str, String> {
    let mut m = BTreeMap::new();
    let inv = &a.invariants;
    m.insert("d", inv.d.to_string());
    m.insert("r", inv.r.to_string());
    m.insert("mu", inv.mu.to_string());
    m.insert("genus", inv.genus.to_string());
    m.insert("boundary_components", inv.boundary_components.to_string());
    let (neg, zero, pos) = a.ag.census();
    m.insert("census", format!("{neg},{zero},{pos}"));
    m.insert("ag_edges", edge_list(a));
    let deep: Vec<String> = (0..a.ag.len())
        .filter(|&i| a.depths.depth[i] > 0)
        .map(|i| format!("{}={}", a.ag.vertices[i].id, a.depths.depth[i]))
        .collect();
    m.insert("positive_depths", deep.join(","));
    m.insert("quiver_arrows", a.euler.arrows.len().to_string());
    m.insert("certificate", a.certificate.verdict.to_string());
    m
}

fn edge_list(a: &Analysis) -> String {
    let items: Vec<String> = a
        .ag
        .edges
        .iter()
        .map(|e| {
            let base = format!("{}~{}", a.ag.vertices[e.u].id, a.ag.vertices[e.v].id);
            if e.multiplicity == 1 {
                base
            } else {
                format!("{base}x{}", e.multiplicity)
            }
        })
        .collect();
    items.join(",")
}

fn raw_edge(id: usize, from: (String, u8), to: (String, u8)) -> RawEdge {
    RawEdge { id: format!("e{id}"), ends: [from, to] }
}

fn a_map(n: usize) -> RawDivide {
    assert!(n >= 1, "A_n needs n >= 1");
    let k = n.div_ceil(2);
    let p = |i: usize| format!("p{i}");
    let t = |i: usize| format!("t{i}");
    let mut edges: Vec<RawEdge> = Vec::new();
    let add = |edges: &mut Vec<RawEdge>, from: (String, u8), to: (String, u8)| {
        let id = edges.len() + 1;
        edges.push(raw_edge(id, from, to));
        format!("e{id}")
    };
    let (terminals, branches, seed);
    if n.is_multiple_of(2) {
        // a hairpin twisted k times: strand F runs from the boundary to the
        // tip loop at p1, strand G runs back; they cross at p1..pk
        let up = |i: usize| (k - i).is_multiple_of(2);
        // slots (f_in, g_in, f_out, g_out)
        let sl = |i: usize| if up(i) { (0u8, 1u8, 2u8, 3u8) } else { (3, 2, 1, 0) };
        let lp = add(&mut edges, (p(1), sl(1).2), (p(1), sl(1).1));
        let mut g = Vec::new();
        for i in 1..k {
            g.push(add(&mut edges, (p(i), sl(i).3), (p(i + 1), sl(i + 1).1)));
        }
        // t1 lies below t2 on the right of the disc
        g.push(add(&mut edges, (p(k), sl(k).3), (t(1), 0)));
        let mut f = vec![add(&mut edges, (t(2), 0), (p(k), sl(k).0))];
        for i in (2..=k).rev() {
            f.push(add(&mut edges, (p(i), sl(i).2), (p(i - 1), sl(i - 1).0)));
        }
        f.push(lp.clone());
        f.extend(g);
        terminals = vec![t(1), t(2)];
        branches = vec![f];
        seed = RawSeed { edge: lp, side: if up(1) { Side::Right } else { Side::Left }, sign: Sign::Minus };
    } else {
        // a horizontal strand H crossed k times by a wave G that starts above it
        let down = |i: usize| i % 2 == 1;
        // slots (h_in, h_out, g_in, g_out)
        let sl = |i: usize| if down(i) { (2u8, 0u8, 1u8, 3u8) } else { (2, 0, 3, 1) };
        let g_right_above = k.is_multiple_of(2);
        // counterclockwise from the east end of H
        let (east, g_left, west, g_right) = if g_right_above { (1, 3, 4, 2) } else { (1, 2, 3, 4) };
        let mut h = vec![add(&mut edges, (t(west), 0), (p(1), sl(1).0))];
        for i in 1..k {
            h.push(add(&mut edges, (p(i), sl(i).1), (p(i + 1), sl(i + 1).0)));
        }
        h.push(add(&mut edges, (p(k), sl(k).1), (t(east), 0)));
        let mut g = vec![add(&mut edges, (t(g_left), 0), (p(1), sl(1).2))];
        for i in 1..k {
            g.push(add(&mut edges, (p(i), sl(i).3), (p(i + 1), sl(i + 1).2)));
        }
        g.push(add(&mut edges, (p(k), sl(k).3), (t(g_right), 0)));
        terminals = (1..=4).map(t).collect();
        // the first lens lies below H, on its right
        seed = RawSeed { edge: h[1].clone(), side: if k >= 2 { Side::Right } else { Side::Left }, sign: Sign::Minus };
        branches = vec![h, g];
    }
    RawDivide {
        name: format!("A{n}"),
        double_points: (1..=k).map(p).collect(),
        terminals,
        edges,
        branches,
        sign_seed: seed,
    }
}

fn a_path(n: usize) -> String {
    // order positions: all - vertices first, then 0 vertices
    let k = n.div_ceil(2);
    let mut pairs = Vec::new();
    if n.is_multiple_of(2) {
        for i in 1..=k {
            pairs.push((i, i));
            if i < k {
                pairs.push((i + 1, i));
            }
        }
    } else {
        for i in 1..k {
            pairs.push((i, i));
            pairs.push((i, i + 1));
        }
    }
    pairs.sort();
    pairs.iter().map(|(m, z)| format!("v-_{m}~v0_{z}")).collect::<Vec<_>>().join(",")
}

const SRC_AN: &str = "A_n worked example: depth-zero zigzag divide, path quiver of n vertices";
const SRC_AN4: &str = "A_4 worked example: genus two fiber with one boundary component, quiver 1->2<-3->4";
const SRC_MU: &str = "Milnor number of a divide: mu = 2d - r + 1";
const SRC_ADE: &str = "ADE divides have depth zero";
const SRC_TRIVIAL: &str = "forced by the construction (single crossing)";

/// The zigzag divide of `A_n` with all regions negative.
pub fn gen_a(n: usize) -> CorpusEntry {
    let divide = Divide::from_raw(a_map(n)).expect("A_n generator emits a valid divide");
    let k = n.div_ceil(2);
    let r = if n.is_multiple_of(2) { 1 } else { 2 };
    let regions = k + 1 - r;
    let src = if n == 1 { SRC_TRIVIAL } else if n == 4 { SRC_AN4 } else { SRC_AN };
    let expected = vec![
        Fact { key: "d", value: k.to_string(), source: src },
        Fact { key: "r", value: r.to_string(), source: src },
        Fact { key: "mu", value: n.to_string(), source: SRC_MU },
        Fact { key: "census", value: format!("{regions},{k},0"), source: src },
        Fact { key: "ag_edges", value: a_path(n), source: src },
        Fact { key: "positive_depths", value: String::new(), source: SRC_ADE },
        Fact { key: "genus", value: regions.to_string(), source: src },
        Fact { key: "boundary_components", value: r.to_string(), source: src },
        Fact { key: "quiver_arrows", value: (n - 1).to_string(), source: src },
        Fact { key: "certificate", value: "pass".into(), source: src },
    ];
    CorpusEntry { name: format!("A{n}"), divide, expected }
}

/// Polyline drawing of the E6 divide: one strand winding through three crossings.
pub fn e6_polyline() -> PolylineDivide {
    let pts = [
        (220, 220), (100, 100), (97, 98), (71, 83), (26, 56), (-26, 20), (-71, -20), (-97, -56), (-97, -83),
        (-71, -98), (-26, -98), (26, -83), (71, -56), (97, -20), (97, 20), (71, 56), (26, 83), (-26, 98),
        (-71, 98), (-97, 83), (-97, 56), (-71, 20), (-26, -20), (26, -56), (71, -83), (97, -98), (100, -100),
        (220, -220),
    ];
    PolylineDivide {
        name: "E6".into(),
        branches: vec![PolyBranch { points: pts.to_vec(), closed: false }],
        disc_radius: 150,
        seed_point: (-60, -60),
        seed_sign: Sign::Minus,
    }
}

/// Polyline drawing of the depth-one divide: a teardrop loop crossed by two lines.
pub fn depth1_polyline() -> PolylineDivide {
    PolylineDivide {
        name: "depth1".into(),
        branches: vec![
            PolyBranch {
                points: vec![(-300, 150), (50, -25), (120, -40), (170, 0), (120, 40), (50, 25), (-300, -150)],
                closed: false,
            },
            PolyBranch { points: vec![(-150, -250), (350, 250)], closed: false },
            PolyBranch { points: vec![(-150, 250), (350, -250)], closed: false },
        ],
        disc_radius: 200,
        seed_point: (70, 0),
        seed_sign: Sign::Minus,
    }
}

/// Polyline twin of `gen_a(4)`: a hairpin with two twists.
pub fn a4_polyline() -> PolylineDivide {
    PolylineDivide {
        name: "A4".into(),
        branches: vec![PolyBranch {
            points: vec![(250, -40), (100, 40), (-50, -40), (-120, 0), (-50, 40), (100, -40), (250, 40)],
            closed: false,
        }],
        disc_radius: 200,
        seed_point: (-50, 0),
        seed_sign: Sign::Minus,
    }
}

pub fn gen_e6() -> CorpusEntry {
    let divide = crate::divide::ingest_polyline(&e6_polyline()).expect("E6 drawing is valid");
    const SRC_FIG: &str = "E6 worked example: divide figure and its AΓ diagram";
    const SRC_Q: &str = "E6 worked example: 9 unit arrows in the Euler quiver";
    let expected = vec![
        Fact { key: "d", value: "3".into(), source: SRC_FIG },
        Fact { key: "r", value: "1".into(), source: SRC_FIG },
        Fact { key: "mu", value: "6".into(), source: SRC_MU },
        Fact { key: "census", value: "2,3,1".into(), source: SRC_FIG },
        Fact {
            key: "ag_edges",
            value: "v-_1~v0_1,v-_1~v0_2,v-_1~v+_1,v-_2~v0_2,v-_2~v0_3,v-_2~v+_1,v0_1~v+_1,v0_2~v+_1,v0_3~v+_1".into(),
            source: SRC_Q,
        },
        Fact { key: "positive_depths", value: String::new(), source: SRC_ADE },
        Fact { key: "genus", value: "3".into(), source: SRC_FIG },
        Fact { key: "boundary_components", value: "1".into(), source: SRC_FIG },
        Fact { key: "quiver_arrows", value: "9".into(), source: SRC_Q },
        Fact { key: "certificate", value: "pass".into(), source: SRC_Q },
    ];
    CorpusEntry { name: "E6".into(), divide, expected }
}

pub fn gen_depth1() -> CorpusEntry {
    let divide = crate::divide::ingest_polyline(&depth1_polyline()).expect("depth-one drawing is valid");
    const SRC: &str = "depth-one worked example (x^5 - x^3y^2 + x^2y^2 + y^4): 10 vanishing cycles, genus 4, 3 boundary components";
    const SRC_D: &str = "depth-one worked example: v0_6 is the unique depth 1 vertex";
    let expected = vec![
        Fact { key: "d", value: "6".into(), source: SRC },
        Fact { key: "r", value: "3".into(), source: SRC },
        Fact { key: "mu", value: "10".into(), source: SRC },
        Fact { key: "census", value: "2,6,2".into(), source: SRC },
        Fact { key: "positive_depths", value: "v0_6=1".into(), source: SRC_D },
        Fact { key: "genus", value: "4".into(), source: SRC },
        Fact { key: "boundary_components", value: "3".into(), source: SRC },
    ];
    CorpusEntry { name: "depth1".into(), divide, expected }
}

/// E6, the depth-one divide, and `A_1 .. A_12`, in name order.
pub fn builtin() -> Vec<CorpusEntry> {
    let mut out = vec![gen_e6(), gen_depth1()];
    out.extend((1..=12).map(gen_a));
    out.sort_by(|a, b| natural_cmp(&a.name, &b.name));
    out
}

pub fn builtin_by_name(name: &str) -> Option<CorpusEntry> {
    builtin().into_iter().find(|e| e.name == name)
}

/// Name order that compares digit runs numerically (`A2 < A10`).
pub fn natural_cmp(a: &str, b: &str) -> std::cmp::Ordering {
    fn chunks(s: &str) -> Vec<(bool, String)> {
        let mut out: Vec<(bool, String)> = Vec::new();
        for ch in s.chars() {
            let digit = ch.is_ascii_digit();
            match out.last_mut() {
                Some((d, buf)) if *d == digit => buf.push(ch),
                _ => out.push((digit, ch.to_string())),
            }
        }
        out
    }
    let (ca, cb) = (chunks(a), chunks(b));
    for (x, y) in ca.iter().zip(&cb) {
        let ord = match (x.0, y.0) {
            (true, true) => {
                let (tx, ty) = (x.1.trim_start_matches('0'), y.1.trim_start_matches('0'));
                tx.len().cmp(&ty.len()).then_with(|| tx.cmp(ty))
            }
            _ => x.1.cmp(&y.1),
        };
        if ord != std::cmp::Ordering::Equal {
            return ord;
        }
    }
    ca.len().cmp(&cb.len()).then_with(|| a.cmp(b))
}
