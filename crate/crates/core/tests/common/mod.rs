//! Oracles and generators shared by the integration tests.
//!
//! The oracles recompute lattice data from first principles with plain
//! `i64` arithmetic, independent of the library's matrix code.

#![allow(dead_code)]

use acampo::ag::VertexType;
use acampo::adapted::pl_variation;
use acampo::divide::{ingest_polyline, PolyBranch, PolylineDivide};
use acampo::lattice::{transvection, Verdict};
use acampo::pipeline::Analysis;
use acampo::{corpus, Divide, IntMatrix, Sign};
use num_bigint::BigInt;
use num_rational::Ratio;
use proptest::prelude::*;
use proptest::test_runner::{Config, RngAlgorithm, TestCaseError, TestRng, TestRunner};

pub type M = Vec<Vec<i64>>;

pub fn small(m: &IntMatrix) -> M {
    m.to_i64_rows().expect("entries fit in i64")
}

pub fn identity(n: usize) -> M {
    (0..n).map(|i| (0..n).map(|j| i64::from(i == j)).collect()).collect()
}

pub fn mul(a: &M, b: &M) -> M {
    let n = a.len();
    let k = b.len();
    let m = if k == 0 { 0 } else { b[0].len() };
    (0..n).map(|i| (0..m).map(|j| (0..k).map(|t| a[i][t] * b[t][j]).sum()).collect()).collect()
}

pub fn transpose(a: &M) -> M {
    let n = a.len();
    let m = if n == 0 { 0 } else { a[0].len() };
    (0..m).map(|j| (0..n).map(|i| a[i][j]).collect()).collect()
}

pub fn trace(a: &M) -> i64 {
    (0..a.len()).map(|i| a[i][i]).sum()
}

/// Determinant by Gaussian elimination over exact rationals.
pub fn det(a: &M) -> Ratio<i128> {
    let n = a.len();
    let mut x: Vec<Vec<Ratio<i128>>> = a.iter().map(|r| r.iter().map(|&v| Ratio::from_integer(v as i128)).collect()).collect();
    let mut d = Ratio::from_integer(1);
    for c in 0..n {
        let Some(p) = (c..n).find(|&i| x[i][c] != Ratio::from_integer(0)) else {
            return Ratio::from_integer(0);
        };
        if p != c {
            x.swap(p, c);
            d = -d;
        }
        d *= x[c][c];
        for i in c + 1..n {
            let f = x[i][c] / x[c][c];
            for j in c..n {
                let v = x[c][j] * f;
                x[i][j] -= v;
            }
        }
    }
    d
}

/// Rank over the rationals by fraction-free elimination.
pub fn rank(a: &M) -> usize {
    let mut rows: Vec<Vec<i128>> = a.iter().map(|r| r.iter().map(|&v| v as i128).collect()).collect();
    let cols = if rows.is_empty() { 0 } else { rows[0].len() };
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..rows.len()).find(|&i| rows[i][c] != 0) else { continue };
        rows.swap(r, p);
        for i in 0..rows.len() {
            if i != r && rows[i][c] != 0 {
                let (a, b) = (rows[r][c], rows[i][c]);
                for j in 0..cols {
                    rows[i][j] = rows[i][j] * a - rows[r][j] * b;
                }
                let g = rows[i].iter().fold(0i128, |g, &v| num_integer::gcd(g, v));
                if g > 1 {
                    rows[i].iter_mut().for_each(|v| *v /= g);
                }
            }
        }
        r += 1;
    }
    r
}

/// The Picard-Lefschetz transvection `x -> x + s (x . V_k) V_k` on column vectors.
pub fn oracle_transvection(i: &M, k: usize, s: i64) -> M {
    let mut t = identity(i.len());
    for m in 0..i.len() {
        t[k][m] += s * i[m][k];
    }
    t
}

/// `(T_1 ... T_mu, T_mu ... T_1)`.
pub fn oracle_monodromy(i: &M, s: i64) -> (M, M) {
    let n = i.len();
    let mut desc = identity(n);
    let mut asc = identity(n);
    for k in 0..n {
        let t = oracle_transvection(i, k, s);
        desc = mul(&desc, &t);
        asc = mul(&t, &asc);
    }
    (desc, asc)
}

/// Seifert matrix read off `I = -S + S^T` with `S` lower unitriangular.
pub fn oracle_seifert(i: &M) -> M {
    let n = i.len();
    (0..n)
        .map(|r| (0..n).map(|c| if r == c { 1 } else if r > c { -i[r][c] } else { 0 }).collect())
        .collect()
}

/// Smallest `k <= bound` with `m^k = Id`, by repeated multiplication.
pub fn oracle_order(m: &M, bound: u64) -> Option<u64> {
    let id = identity(m.len());
    let mut p = m.clone();
    for k in 1..=bound {
        if p == id {
            return Some(k);
        }
        p = mul(&p, m);
    }
    None
}

/// `a_j`: one at `j`, the intersection numbers `I[j][i]` before it, zero after.
pub fn oracle_adapted(i: &M, j: usize) -> Vec<i64> {
    (0..i.len()).map(|k| if k == j { 1 } else if k < j { i[j][k] } else { 0 }).collect()
}

/// `pl_variation` inverted in closed form: `a = s c - L^T c` with `L` the strictly lower part of `I`.
pub fn oracle_preimage(i: &M, c: &[i64], s: i64) -> Vec<i64> {
    let n = i.len();
    (0..n).map(|k| s * c[k] - (k + 1..n).map(|m| c[m] * i[m][k]).sum::<i64>()).collect()
}

pub fn big(v: &[i64]) -> Vec<BigInt> {
    v.iter().map(|&x| BigInt::from(x)).collect()
}

// ---- random divides ----

/// A line through `p` with direction `d`, long enough to leave a disc of radius 500.
fn chord(p: (i64, i64), d: (i64, i64)) -> PolyBranch {
    let len = ((d.0 * d.0 + d.1 * d.1) as f64).sqrt();
    let t = (1100.0 / len).ceil() as i64;
    PolyBranch { points: vec![(p.0 - t * d.0, p.1 - t * d.1), (p.0 + t * d.0, p.1 + t * d.1)], closed: false }
}

/// Arrangements of 2 to 5 chords in a disc of radius 500.
pub fn arrangement() -> impl Strategy<Value = PolylineDivide> {
    let line = ((-200i64..=200, -200i64..=200), (-20i64..=20, -20i64..=20))
        .prop_filter("nonzero direction", |(_, d)| *d != (0, 0));
    (
        prop::collection::vec(line, 2..=5),
        (-450i64..=450, -450i64..=450),
        prop_oneof![Just(Sign::Minus), Just(Sign::Plus)],
    )
        .prop_map(|(lines, seed, sign)| PolylineDivide {
            name: "lines".into(),
            branches: lines.into_iter().map(|(p, d)| chord(p, d)).collect(),
            disc_radius: 500,
            seed_point: seed,
            seed_sign: sign,
        })
}

/// A small valid divide: chords meeting pairwise (an ordinary multiple point) or an `A_n` zigzag.
#[derive(Clone, Debug)]
pub struct Case {
    pub divide: Divide,
    /// Sort keys driving a random within-type reordering.
    pub keys: Vec<u32>,
    pub a: Vec<i64>,
    pub b: Vec<i64>,
    pub alpha: i64,
    pub beta: i64,
}

pub fn case() -> impl Strategy<Value = Case> {
    let divide = prop_oneof![
        // every pair of chords must meet, as branches of a singular point do
        arrangement().prop_filter_map("degenerate arrangement", |p| {
            let k = p.branches.len();
            ingest_polyline(&p).ok().filter(|d| d.double_point_count() == k * (k - 1) / 2)
        }),
        (1usize..=8).prop_map(|n| corpus::gen_a(n).divide),
    ];
    (
        divide,
        prop::collection::vec(any::<u32>(), 40),
        prop::collection::vec(-9i64..=9, 40),
        prop::collection::vec(-9i64..=9, 40),
        -5i64..=5,
        -5i64..=5,
    )
        .prop_map(|(divide, keys, a, b, alpha, beta)| Case { divide, keys, a, b, alpha, beta })
}

/// A within-type permutation: each type block sorted by the random keys.
pub fn within_type_perm(types: &[VertexType], keys: &[u32]) -> Vec<usize> {
    let mut perm: Vec<usize> = (0..types.len()).collect();
    perm.sort_by_key(|&k| (types[k], keys[k % keys.len()], k));
    perm
}

/// Runs the pipeline on a case, as a test failure if it errors.
pub fn analyse(c: &Case) -> Result<Analysis, TestCaseError> {
    Analysis::run(&c.divide, None).map_err(|e| TestCaseError::fail(e.to_string()))
}

/// Every verdict an analysis produces, in a comparable form.
pub fn verdict_vector(a: &Analysis) -> Vec<Verdict> {
    let mut v: Vec<Verdict> = a.suite.checks.iter().map(|c| c.verdict).collect();
    v.extend(a.variation.iter().map(|x| x.verdict));
    v.push(a.certificate.verdict);
    v.extend(a.cones.iter().map(|c| c.verdict));
    v
}

pub fn property_config(cases: u32) -> Config {
    Config { cases, max_global_rejects: 1_000_000, failure_persistence: None, ..Config::default() }
}

/// A reproducible runner, independent of environment seeds.
pub fn runner(cases: u32) -> TestRunner {
    TestRunner::new_with_rng(property_config(cases), TestRng::deterministic_rng(RngAlgorithm::ChaCha))
}

macro_rules! ensure {
    ($cond:expr, $($fmt:tt)+) => {
        if !$cond {
            return Err(TestCaseError::fail(format!($($fmt)+)));
        }
    };
}

/// Adjacent faces across every divide edge carry opposite signs.
pub fn prop_checkerboard(_c: &Case, a: &Analysis) -> Result<(), TestCaseError> {
    let s = &a.signed;
    for e in 0..s.divide.edges().len() {
        let (l, r) = (s.faces.left_of_edge(e), s.faces.right_of_edge(e));
        ensure!(s.sign[l] != s.sign[r], "edge {e}: faces {l} and {r} share sign");
    }
    Ok(())
}

/// Transvections of two vertices of the same type commute.
pub fn prop_same_type_commute(_c: &Case, a: &Analysis) -> Result<(), TestCaseError> {
    let l = &a.lattice;
    for i in 0..l.mu() {
        for j in i + 1..l.mu() {
            if a.ag.vertices[i].ty != a.ag.vertices[j].ty {
                continue;
            }
            let (ti, tj) = (transvection(&l.i, i, l.pl_sign), transvection(&l.i, j, l.pl_sign));
            ensure!(&ti * &tj == &tj * &ti, "T_{i} and T_{j} do not commute");
        }
    }
    Ok(())
}

/// `var(alpha a + beta b) = alpha var(a) + beta var(b)`.
pub fn prop_variation_linear(c: &Case, a: &Analysis) -> Result<(), TestCaseError> {
    let l = &a.lattice;
    let n = l.mu();
    let (x, y) = (&c.a[..n], &c.b[..n]);
    let combo: Vec<i64> = x.iter().zip(y).map(|(p, q)| c.alpha * p + c.beta * q).collect();
    let lhs = pl_variation(&big(&combo), &l.i, l.pl_sign);
    let (vx, vy) = (pl_variation(&big(x), &l.i, l.pl_sign), pl_variation(&big(y), &l.i, l.pl_sign));
    let rhs: Vec<BigInt> = vx.iter().zip(&vy).map(|(p, q)| p * c.alpha + q * c.beta).collect();
    ensure!(lhs == rhs, "variation is not linear");
    Ok(())
}

/// Flipping the seed negates every face sign, swaps the census ends, and keeps every verdict.
pub fn prop_seed_flip(c: &Case, a: &Analysis) -> Result<(), TestCaseError> {
    let f = Analysis::run(&c.divide.clone().with_flipped_seed(), None).map_err(|e| TestCaseError::fail(e.to_string()))?;
    let flipped: Vec<Sign> = a.signed.sign.iter().map(|s| s.flip()).collect();
    ensure!(f.signed.sign == flipped, "face signs not negated");
    let (n, z, p) = a.ag.census();
    ensure!(f.ag.census() == (p, z, n), "census {:?} vs {:?}", f.ag.census(), (p, z, n));
    ensure!(verdict_vector(a) == verdict_vector(&f), "verdicts changed under seed flip");
    Ok(())
}

/// A random reordering within types changes no verdict.
pub fn prop_reorder_invariance(c: &Case, a: &Analysis) -> Result<(), TestCaseError> {
    let types: Vec<VertexType> = a.ag.vertices.iter().map(|v| v.ty).collect();
    let perm = within_type_perm(&types, &c.keys);
    let r = Analysis::run(&c.divide, Some(&perm)).map_err(|e| TestCaseError::fail(e.to_string()))?;
    ensure!(verdict_vector(a) == verdict_vector(&r), "verdicts changed under reordering {perm:?}");
    ensure!(r.invariants == a.invariants, "invariants changed");
    ensure!(r.mono.m_desc.trace() == a.mono.m_desc.trace(), "trace of M_desc changed");
    ensure!(r.char_poly == a.char_poly, "characteristic polynomial changed");
    Ok(())
}

pub const PROPERTIES: [(&str, fn(&Case, &Analysis) -> Result<(), TestCaseError>); 5] = [
    ("checkerboard consistency", prop_checkerboard),
    ("same-type transvection commutation", prop_same_type_commute),
    ("linearity of pl_variation", prop_variation_linear),
    ("seed-flip sign equivariance", prop_seed_flip),
    ("within-type reordering invariance", prop_reorder_invariance),
];

/// Upper bound on the power search for monodromy orders.
pub fn order_bound(mu: usize) -> u64 {
    6 * mu as u64 + 6
}

pub fn small_matrix(rows: &[&[i64]]) -> M {
    rows.iter().map(|r| r.to_vec()).collect()
}
