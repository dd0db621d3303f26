//! Adapted families of relative classes, their variation images, the Euler
//! matrix of the collection, and depth-one cones.
//!
//! A relative class `K` is recorded by its intersection vector
//! `a[m] = K . V_m`. The variation is computed by pushing `K` through the
//! twists in descending order and collecting the `V` coefficients:
//!
//! ```text
//! A_2, a = (1, 0):  twist 2: K.V_2 = 0          c = (0, 0)
//!                   twist 1: K.V_1 = 1          c = (-1, 0)
//! A_2, a = (1, 1):  twist 2: K.V_2 = 1          c = (0, -1)
//!                   twist 1: 1 + (-1)(V_2.V_1) = 0
//! ```

use std::fmt::Write;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::Serialize;

use crate::ag::{AgDiagram, DepthLabels};
use crate::lattice::{MilnorLattice, Verdict};
use crate::matrix::IntMatrix;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AdaptedFamily {
    pub vectors: Vec<Vec<BigInt>>,
}

pub fn adapted_vectors(i: &IntMatrix) -> AdaptedFamily {
    let n = i.rows();
    let vectors = (0..n)
        .map(|j| {
            (0..n)
                .map(|m| match m.cmp(&j) {
                    std::cmp::Ordering::Less => i[(j, m)].clone(),
                    std::cmp::Ordering::Equal => BigInt::one(),
                    std::cmp::Ordering::Greater => BigInt::zero(),
                })
                .collect()
        })
        .collect();
    AdaptedFamily { vectors }
}

/// Coefficients `c` with `var(K) = sum c_m V_m`.
pub fn pl_variation(a: &[BigInt], i: &IntMatrix, pl_sign: i64) -> Vec<BigInt> {
    let n = i.rows();
    assert_eq!(a.len(), n, "vector length must equal the rank");
    let sign = BigInt::from(pl_sign);
    let mut c = vec![BigInt::zero(); n];
    for k in (0..n).rev() {
        let mut dot = a[k].clone();
        for (m, cm) in c.iter().enumerate() {
            if !cm.is_zero() {
                dot += cm * &i[(m, k)];
            }
        }
        c[k] += &sign * dot;
    }
    c
}

/// Inverse of [`pl_variation`]: the intersection vector whose variation is `c`.
pub fn pl_variation_preimage(c: &[BigInt], i: &IntMatrix, pl_sign: i64) -> Vec<BigInt> {
    let n = i.rows();
    assert_eq!(c.len(), n);
    let sign = BigInt::from(pl_sign);
    // c[k] = pl_sign (a[k] + sum_{m > k} c[m] I[m][k])
    (0..n)
        .map(|k| {
            let tail: BigInt = (k + 1..n).map(|m| &c[m] * &i[(m, k)]).sum();
            &sign * &c[k] - tail
        })
        .collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VariationVerdict {
    pub index: usize,
    pub verdict: Verdict,
    pub variation: Vec<String>,
}

pub fn unit(n: usize, k: usize, value: i64) -> Vec<BigInt> {
    let mut v = vec![BigInt::zero(); n];
    v[k] = BigInt::from(value);
    v
}

/// Checks `var(K_j) = pl_sign V_j` for every index, by iteration.
pub fn verify_adapted(family: &AdaptedFamily, lattice: &MilnorLattice) -> Vec<VariationVerdict> {
    let n = lattice.mu();
    family
        .vectors
        .iter()
        .enumerate()
        .map(|(j, a)| {
            let c = pl_variation(a, &lattice.i, lattice.pl_sign);
            VariationVerdict {
                index: j,
                verdict: Verdict::from_bool(c == unit(n, j, lattice.pl_sign)),
                variation: c.iter().map(|x| x.to_string()).collect(),
            }
        })
        .collect()
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EulerQuiver {
    pub e: IntMatrix,
    /// Global sign normalizing the diagonal.
    pub sigma: i64,
    /// `(i, j, |E[i][j]|)` for `i < j` with `E[i][j] != 0`.
    pub arrows: Vec<(usize, usize, BigInt)>,
}

impl EulerQuiver {
    /// Signs of the strictly upper nonzero entries: `(negative, positive)`.
    pub fn upper_signs(&self) -> (usize, usize) {
        let n = self.e.rows();
        let (mut neg, mut pos) = (0, 0);
        for i in 0..n {
            for j in i + 1..n {
                let x = &self.e[(i, j)];
                if x.is_negative() {
                    neg += 1;
                } else if x.is_positive() {
                    pos += 1;
                }
            }
        }
        (neg, pos)
    }
}

pub fn euler_matrix(lattice: &MilnorLattice) -> EulerQuiver {
    let n = lattice.mu();
    let sigma: i64 = if n > 0 && lattice.s[(0, 0)].is_negative() { -1 } else { 1 };
    let mut e = lattice.s.transpose();
    if sigma < 0 {
        e = -&e;
    }
    let mut arrows = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            if !e[(i, j)].is_zero() {
                arrows.push((i, j, e[(i, j)].abs()));
            }
        }
    }
    EulerQuiver { e, sigma, arrows }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CellViolation {
    pub row: usize,
    pub col: usize,
    pub found: String,
    pub expected: String,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Certificate {
    pub verdict: Verdict,
    pub violations: Vec<CellViolation>,
}

/// Unit upper triangularity plus `|E[i][j]|` equal to the AΓ multiplicity.
pub fn exceptional_certificate(e: &IntMatrix, ag: &AgDiagram) -> Certificate {
    let n = e.rows();
    let mut violations = Vec::new();
    for i in 0..n {
        for j in 0..n {
            let x = &e[(i, j)];
            let (ok, expected) = match i.cmp(&j) {
                std::cmp::Ordering::Equal => (x.is_one(), "1".to_string()),
                std::cmp::Ordering::Greater => (x.is_zero(), "0".to_string()),
                std::cmp::Ordering::Less => {
                    let m = BigInt::from(ag.multiplicity(i, j));
                    (x.abs() == m, format!("+-{m}"))
                }
            };
            if !ok {
                violations.push(CellViolation { row: i + 1, col: j + 1, found: x.to_string(), expected });
            }
        }
    }
    Certificate { verdict: Verdict::from_bool(violations.is_empty()), violations }
}

/// Deterministic DOT of the Euler quiver; arrows point from lower to higher index.
pub fn quiver_dot(name: &str, q: &EulerQuiver) -> String {
    let mut out = String::new();
    writeln!(out, "digraph \"{}\" {{", name.replace('\\', "\\\\").replace('"', "\\\"")).unwrap();
    writeln!(out, "  node [shape=circle];").unwrap();
    for i in 0..q.e.rows() {
        writeln!(out, "  {};", i + 1).unwrap();
    }
    for (i, j, w) in &q.arrows {
        if w.is_one() {
            writeln!(out, "  {} -> {};", i + 1, j + 1).unwrap();
        } else {
            writeln!(out, "  {} -> {} [label=\"{w}\"];", i + 1, j + 1).unwrap();
        }
    }
    out.push_str("}\n");
    out
}

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum ConeError {
    #[error("vertex {vertex} is not depth 1 (depth {depth})")]
    NotDepthOne { vertex: String, depth: usize },
    #[error("vertex {0} has no depth 0 neighbor")]
    NoPartner(String),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConeRecord {
    pub vertex: usize,
    pub partner: usize,
    pub a_prime: Vec<BigInt>,
    /// Intersection vectors of the disjoint pieces `[K', K_w]`.
    pub components: Vec<Vec<BigInt>>,
    pub var_prime: Vec<BigInt>,
    pub var_total: Vec<BigInt>,
    pub verdict: Verdict,
}

pub fn depth1_cone(
    ag: &AgDiagram,
    depths: &DepthLabels,
    lattice: &MilnorLattice,
    v: usize,
) -> Result<ConeRecord, ConeError> {
    if depths.depth[v] != 1 {
        return Err(ConeError::NotDepthOne { vertex: ag.vertices[v].id.clone(), depth: depths.depth[v] });
    }
    let w = ag
        .neighbors(v)
        .into_iter()
        .find(|&u| depths.depth[u] == 0)
        .ok_or_else(|| ConeError::NoPartner(ag.vertices[v].id.clone()))?;
    let n = lattice.mu();
    let s = lattice.pl_sign;
    let target: Vec<BigInt> = unit(n, v, s).iter().zip(unit(n, w, -s)).map(|(a, b)| a + b).collect();
    let a_prime = pl_variation_preimage(&target, &lattice.i, s);
    let a_w = adapted_vectors(&lattice.i).vectors.swap_remove(w);
    let var_prime = pl_variation(&a_prime, &lattice.i, s);
    let var_w = pl_variation(&a_w, &lattice.i, s);
    let var_total: Vec<BigInt> = var_prime.iter().zip(&var_w).map(|(a, b)| a + b).collect();
    let ok = var_prime == target && var_total == unit(n, v, s);
    Ok(ConeRecord {
        vertex: v,
        partner: w,
        a_prime: a_prime.clone(),
        components: vec![a_prime, a_w],
        var_prime,
        var_total,
        verdict: Verdict::from_bool(ok),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    fn a2() -> MilnorLattice {
        MilnorLattice::from_intersection(IntMatrix::from_rows(&[[0, -1], [1, 0]]))
    }

    #[test]
    fn a2_family() {
        let l = a2();
        let f = adapted_vectors(&l.i);
        assert_eq!(f.vectors, vec![ints(&[1, 0]), ints(&[1, 1])]);
        assert_eq!(pl_variation(&f.vectors[0], &l.i, -1), ints(&[-1, 0]));
        assert_eq!(pl_variation(&f.vectors[1], &l.i, -1), ints(&[0, -1]));
        assert!(verify_adapted(&f, &l).iter().all(|v| v.verdict.passed()));
    }

    #[test]
    fn perturbed_family_fails_at_second_index() {
        let l = a2();
        let mut f = adapted_vectors(&l.i);
        f.vectors[1][0] += 1;
        let verdicts = verify_adapted(&f, &l);
        assert!(verdicts[0].verdict.passed());
        assert_eq!(verdicts[1].verdict, Verdict::Fail);
        assert_eq!(verdicts[1].variation, vec!["-1", "-1"]);
    }

    #[test]
    fn zero_vector_is_fixed() {
        let l = a2();
        assert_eq!(pl_variation(&ints(&[0, 0]), &l.i, -1), ints(&[0, 0]));
    }

    #[test]
    fn preimage_inverts() {
        let i = IntMatrix::from_rows(&[[0, 0, -1, -1], [0, 0, -1, 0], [1, 1, 0, -1], [1, 0, 1, 0]]);
        for c in [ints(&[1, 0, 0, 0]), ints(&[0, -1, 3, 2]), ints(&[5, -7, 0, 1])] {
            let a = pl_variation_preimage(&c, &i, -1);
            assert_eq!(pl_variation(&a, &i, -1), c);
        }
    }

    #[test]
    fn a1_euler() {
        let l = MilnorLattice::from_intersection(IntMatrix::from_rows(&[[0]]));
        let q = euler_matrix(&l);
        assert_eq!(q.e, IntMatrix::from_rows(&[[1]]));
        assert!(q.arrows.is_empty());
        assert_eq!(quiver_dot("A1", &q), "digraph \"A1\" {\n  node [shape=circle];\n  1;\n}\n");
    }

    #[test]
    fn lower_entry_breaks_certificate() {
        use crate::ag::{AgVertex, Origin, VertexType};
        let ag = AgDiagram {
            vertices: (0..3)
                .map(|i| AgVertex { id: format!("x{i}"), ty: VertexType::Zero, origin: Origin::DoublePoint(i) })
                .collect(),
            edges: vec![],
        };
        let mut e = IntMatrix::identity(3);
        e[(2, 0)] = BigInt::from(1);
        let cert = exceptional_certificate(&e, &ag);
        assert_eq!(cert.verdict, Verdict::Fail);
        assert_eq!(cert.violations.len(), 1);
        assert_eq!((cert.violations[0].row, cert.violations[0].col), (3, 1));
    }
}
