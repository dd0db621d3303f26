//! Milnor lattice of a distinguished basis: intersection and Seifert forms,
//! Picard-Lefschetz transvections, monodromy, and the identity suite.
//!
//! Convention: for an AΓ edge `{i < j}` the higher type hits the lower one
//! positively, `I[j][i] = +m`, `I[i][j] = -m`. The Seifert matrix is lower
//! unitriangular with `S[i][j] = -I[i][j]` below the diagonal, so that
//! `I = -S + (-1)^n S^T`.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::Serialize;

use crate::ag::{AgDiagram, AgError};
use crate::matrix::{IntMatrix, IntPoly};

/// Complex dimension of a plane-curve Milnor fiber's ambient space.
pub const CURVE_DIM: u32 = 2;

/// `(-1)^(n(n-1)/2)`.
pub fn pl_sign_for(dim_n: u32) -> i64 {
    let e = (dim_n as u64) * (dim_n as u64).saturating_sub(1) / 2;
    if e.is_multiple_of(2) {
        1
    } else {
        -1
    }
}

fn minus_one_pow(n: u32) -> BigInt {
    if n.is_multiple_of(2) {
        BigInt::one()
    } else {
        -BigInt::one()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MilnorLattice {
    pub basis: Vec<String>,
    pub i: IntMatrix,
    pub s: IntMatrix,
    pub dim_n: u32,
    pub pl_sign: i64,
}

impl MilnorLattice {
    pub fn from_ag(ag: &AgDiagram) -> Result<MilnorLattice, AgError> {
        let i = intersection_matrix(ag)?;
        let s = seifert_matrix(&i);
        Ok(MilnorLattice {
            basis: ag.vertices.iter().map(|v| v.id.clone()).collect(),
            i,
            s,
            dim_n: CURVE_DIM,
            pl_sign: pl_sign_for(CURVE_DIM),
        })
    }

    pub fn from_intersection(i: IntMatrix) -> MilnorLattice {
        let s = seifert_matrix(&i);
        MilnorLattice {
            basis: (1..=i.rows()).map(|k| format!("V_{k}")).collect(),
            i,
            s,
            dim_n: CURVE_DIM,
            pl_sign: pl_sign_for(CURVE_DIM),
        }
    }

    pub fn mu(&self) -> usize {
        self.i.rows()
    }

    pub fn transvection(&self, k: usize) -> IntMatrix {
        transvection(&self.i, k, self.pl_sign)
    }

    pub fn monodromy(&self) -> MonodromyPair {
        monodromy(self)
    }
}

pub fn intersection_matrix(ag: &AgDiagram) -> Result<IntMatrix, AgError> {
    ag.check_types()?;
    let mut m = IntMatrix::zeros(ag.len(), ag.len());
    for e in &ag.edges {
        let w = BigInt::from(e.multiplicity);
        m[(e.v, e.u)] = w.clone();
        m[(e.u, e.v)] = -w;
    }
    Ok(m)
}

pub fn seifert_matrix(i: &IntMatrix) -> IntMatrix {
    let n = i.rows();
    let mut s = IntMatrix::zeros(n, n);
    for a in 0..n {
        s[(a, a)] = BigInt::one();
        for b in 0..a {
            s[(a, b)] = -&i[(a, b)];
        }
    }
    s
}

/// Matrix of `x -> x + pl_sign (x . V_k) V_k` acting on columns (0-based `k`).
pub fn transvection(i: &IntMatrix, k: usize, pl_sign: i64) -> IntMatrix {
    let n = i.rows();
    assert!(k < n, "basis index out of range");
    let mut t = IntMatrix::identity(n);
    let c = BigInt::from(pl_sign);
    for m in 0..n {
        t[(k, m)] += &c * &i[(m, k)];
    }
    t
}

/// `T_k X`, touching only row `k`.
fn apply_transvection_left(x: &mut IntMatrix, i: &IntMatrix, k: usize, pl_sign: i64) {
    let n = x.rows();
    let c = BigInt::from(pl_sign);
    let mut row = vec![BigInt::zero(); x.cols()];
    for m in 0..n {
        let coef = &i[(m, k)];
        if coef.is_zero() {
            continue;
        }
        for (j, r) in row.iter_mut().enumerate() {
            *r += coef * &x[(m, j)];
        }
    }
    for (j, r) in row.into_iter().enumerate() {
        x[(k, j)] += &c * r;
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MonodromyPair {
    /// `T_1 T_2 ... T_mu`: the twist along `V_mu` acts first.
    pub m_desc: IntMatrix,
    /// `T_mu ... T_1`: the twist along `V_1` acts first.
    pub m_asc: IntMatrix,
    /// `(-1)^n S^{-T} S`.
    pub rho_s: IntMatrix,
}

pub fn monodromy(lattice: &MilnorLattice) -> MonodromyPair {
    let n = lattice.mu();
    let mut m_desc = IntMatrix::identity(n);
    for k in (0..n).rev() {
        apply_transvection_left(&mut m_desc, &lattice.i, k, lattice.pl_sign);
    }
    let mut m_asc = IntMatrix::identity(n);
    for k in 0..n {
        apply_transvection_left(&mut m_asc, &lattice.i, k, lattice.pl_sign);
    }
    let s_inv = lattice.s.lower_unitriangular_inverse().expect("Seifert matrix is lower unitriangular");
    let rho_s = (&s_inv.transpose() * &lattice.s).scale(&minus_one_pow(lattice.dim_n));
    MonodromyPair { m_desc, m_asc, rho_s }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Pass,
    Fail,
}

impl Verdict {
    pub fn from_bool(ok: bool) -> Verdict {
        if ok {
            Verdict::Pass
        } else {
            Verdict::Fail
        }
    }

    pub fn passed(self) -> bool {
        self == Verdict::Pass
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.pad(match self {
            Verdict::Pass => "pass",
            Verdict::Fail => "fail",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Check {
    pub name: &'static str,
    pub verdict: Verdict,
    /// Whether a failure makes the whole suite fail.
    pub gating: bool,
    pub evidence: String,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SuiteReport {
    pub checks: Vec<Check>,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| !c.gating || c.verdict.passed())
    }

    pub fn get(&self, name: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.name == name)
    }
}

fn matrix_evidence(label: &str, m: &IntMatrix) -> String {
    let rows: Vec<String> = m
        .to_rows()
        .iter()
        .map(|r| format!("[{}]", r.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",")))
        .collect();
    format!("{label}=[{}]", rows.join(","))
}

/// Runs every identity; never stops early. `r` is the number of branches.
pub fn identity_suite(lattice: &MilnorLattice, mono: &MonodromyPair, r: usize) -> SuiteReport {
    let n = lattice.mu();
    let sign_n = minus_one_pow(lattice.dim_n);
    let s = &lattice.s;
    let i = &lattice.i;
    let mut checks = Vec::new();

    let rhs = &(-s) + &s.transpose().scale(&sign_n);
    let ok = &rhs == i;
    checks.push(Check {
        name: "seifert_relation",
        verdict: Verdict::from_bool(ok),
        gating: true,
        evidence: if ok { "I = -S + (-1)^n S^T".into() } else { matrix_evidence("-S+(-1)^n S^T", &rhs) },
    });

    let inv = &(&mono.m_asc.transpose() * s) * &mono.m_asc;
    let ok = &inv == s;
    checks.push(Check {
        name: "seifert_invariance",
        verdict: Verdict::from_bool(ok),
        gating: true,
        evidence: if ok { "M_asc^T S M_asc = S".into() } else { matrix_evidence("M_asc^T S M_asc", &inv) },
    });

    let prod = &mono.rho_s * &mono.m_asc;
    let ok = prod.is_identity();
    checks.push(Check {
        name: "rho_inverse",
        verdict: Verdict::from_bool(ok),
        gating: true,
        evidence: if ok { "rho_S M_asc = Id".into() } else { matrix_evidence("rho_S M_asc", &prod) },
    });

    let tr_desc = mono.m_desc.trace();
    checks.push(Check {
        name: "lefschetz_zero",
        verdict: Verdict::from_bool(tr_desc == sign_n),
        gating: true,
        evidence: format!("trace(M_desc)={tr_desc} expected={sign_n}"),
    });

    let tr_asc = mono.m_asc.trace();
    checks.push(Check {
        name: "ascending_trace",
        verdict: Verdict::from_bool(tr_asc == sign_n),
        gating: false,
        evidence: format!("trace(M_asc)={tr_asc} expected={sign_n}"),
    });

    let pd = mono.m_desc.char_poly();
    let pa = mono.m_asc.char_poly();
    checks.push(Check {
        name: "char_poly_agreement",
        verdict: Verdict::from_bool(pd == pa),
        gating: false,
        evidence: format!("char(M_desc)={pd}; char(M_asc)={pa}"),
    });

    let dm = (&mono.m_desc - &IntMatrix::identity(n)).det();
    let di = i.det();
    checks.push(Check {
        name: "fixed_point_determinant",
        verdict: Verdict::from_bool(dm.abs() == di.abs()),
        gating: true,
        evidence: format!("det(M_desc-Id)={dm} det(I)={di}"),
    });

    let rank = i.rank();
    let expected = (n + 1) as i64 - r as i64;
    checks.push(Check {
        name: "intersection_rank",
        verdict: Verdict::from_bool(rank as i64 == expected),
        gating: true,
        evidence: format!("rank(I)={rank} mu-r+1={expected}"),
    });

    let ds = s.det();
    checks.push(Check {
        name: "seifert_unimodular",
        verdict: Verdict::from_bool(ds.is_one()),
        gating: true,
        evidence: format!("det(S)={ds}"),
    });

    SuiteReport { checks }
}

/// Characteristic polynomial and the least `k <= max_power` with `M^k = Id`.
pub fn char_poly_and_order(m: &IntMatrix, max_power: u64) -> (IntPoly, Option<u64>) {
    let poly = m.char_poly();
    // roots of unity bound every coefficient by a binomial coefficient
    let n = m.rows();
    let mut binom = BigInt::one();
    for (k, c) in poly.coeffs().iter().rev().enumerate() {
        if c.abs() > binom {
            return (poly, None);
        }
        binom = binom * BigInt::from(n - k) / BigInt::from(k + 1);
    }
    let mut acc = IntMatrix::identity(n);
    for k in 1..=max_power {
        acc = &acc * m;
        if acc.is_identity() {
            return (poly, Some(k));
        }
    }
    (poly, None)
}
