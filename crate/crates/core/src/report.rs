//! The consolidated machine-readable report.
//!
//! Every integer is serialized as a decimal string, so no reader ever sees a
//! float or an exponent. Field order is fixed by the struct layout and the
//! output is byte-deterministic for a given input and tool version.

use num_bigint::BigInt;
use serde::Serialize;
use sha2::{Digest, Sha256};

use crate::ag::Origin;
use crate::lattice::{Check, Verdict};
use crate::matrix::IntMatrix;
use crate::pipeline::Analysis;

/// Bumped on any change to the shape of [`Report`].
pub const SCHEMA_VERSION: &str = "1";

pub const TOOL_VERSION: &str = env!("CARGO_PKG_VERSION");

/// Attached to every report: how the lattice algebra relates to the geometric monodromy.
pub const CALIBRATION_NOTE: &str = "rho_S = (-1)^n S^-T S is identified with M_asc^-1; \
M_desc = T_1...T_mu is the distinguished Coxeter element. Absolute signs depend on \
grading conventions the lattice cannot see; sigma normalizes diag(E) to +1 and the \
signs of the strictly upper entries are reported, not asserted.";

type Rows = Vec<Vec<String>>;

#[derive(Clone, Debug, Serialize)]
pub struct Report {
    pub schema_version: &'static str,
    pub tool_version: &'static str,
    pub input: InputInfo,
    pub verdict: Verdict,
    pub invariants: InvariantsOut,
    pub region_issues: Vec<RegionIssueOut>,
    pub ag: AgOut,
    pub matrices: MatricesOut,
    pub monodromy: MonodromyOut,
    pub checks: Vec<Check>,
    pub adapted: AdaptedOut,
    pub euler: EulerOut,
    pub certificate: CertificateOut,
    pub cones: Vec<ConeOut>,
    pub calibration: &'static str,
}

#[derive(Clone, Debug, Serialize)]
pub struct InputInfo {
    pub name: String,
    pub sha256: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct InvariantsOut {
    pub d: String,
    pub r: String,
    pub mu: String,
    pub regions: String,
    pub genus: String,
    pub boundary_components: String,
    pub euler_characteristic: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct RegionIssueOut {
    pub face: String,
    pub vertex: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct AgVertexOut {
    pub index: String,
    pub id: String,
    #[serde(rename = "type")]
    pub ty: String,
    pub origin: String,
    pub exposed: bool,
    pub depth: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct AgEdgeOut {
    pub u: String,
    pub v: String,
    pub multiplicity: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct AgOut {
    pub census: [String; 3],
    pub diagram_depth: String,
    pub vertices: Vec<AgVertexOut>,
    pub edges: Vec<AgEdgeOut>,
}

#[derive(Clone, Debug, Serialize)]
pub struct MatricesOut {
    pub intersection: Rows,
    pub seifert: Rows,
    pub m_desc: Rows,
    pub m_asc: Rows,
    pub rho_s: Rows,
}

#[derive(Clone, Debug, Serialize)]
pub struct MonodromyOut {
    /// Coefficients of `det(tI - M_desc)`, constant term first.
    pub char_poly: Vec<String>,
    pub char_poly_text: String,
    pub order: Option<String>,
    pub max_power: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct VariationOut {
    pub index: String,
    pub verdict: Verdict,
    pub variation: Vec<String>,
}

#[derive(Clone, Debug, Serialize)]
pub struct AdaptedOut {
    pub vectors: Rows,
    pub variation: Vec<VariationOut>,
}

#[derive(Clone, Debug, Serialize)]
pub struct ArrowOut {
    pub from: String,
    pub to: String,
    pub weight: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct EulerOut {
    pub sigma: String,
    pub matrix: Rows,
    pub arrows: Vec<ArrowOut>,
    pub upper_negative: String,
    pub upper_positive: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct ViolationOut {
    pub row: String,
    pub col: String,
    pub found: String,
    pub expected: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct CertificateOut {
    pub verdict: Verdict,
    pub violations: Vec<ViolationOut>,
}

#[derive(Clone, Debug, Serialize)]
pub struct ConeOut {
    pub vertex: String,
    pub partner: String,
    pub a_prime: Vec<String>,
    pub components: Rows,
    pub var_prime: Vec<String>,
    pub var_total: Vec<String>,
    pub verdict: Verdict,
}

fn rows(m: &IntMatrix) -> Rows {
    m.to_rows().iter().map(|r| strs(r)).collect()
}

fn strs(v: &[BigInt]) -> Vec<String> {
    v.iter().map(|x| x.to_string()).collect()
}

/// Lowercase hex SHA-256 of `bytes`.
pub fn sha256_hex(bytes: &[u8]) -> String {
    Sha256::digest(bytes).iter().map(|b| format!("{b:02x}")).collect()
}

impl Report {
    /// Builds the report of `analysis`, digesting the exact input bytes.
    pub fn new(analysis: &Analysis, input: &[u8]) -> Report {
        let a = analysis;
        let divide = &a.signed.divide;
        let inv = &a.invariants;
        let ag = &a.ag;
        let ids = |k: usize| ag.vertices[k].id.clone();
        let (neg, zero, pos) = ag.census();
        let vertices = ag
            .vertices
            .iter()
            .enumerate()
            .map(|(k, v)| AgVertexOut {
                index: (k + 1).to_string(),
                id: v.id.clone(),
                ty: v.ty.symbol().into(),
                origin: match v.origin {
                    Origin::DoublePoint(p) => format!("double point {}", divide.vertex_id(p)),
                    Origin::Region(f) => format!("region face {f}"),
                },
                exposed: a.exposed.contains(&k),
                depth: a.depths.depth[k].to_string(),
            })
            .collect();
        let edges = ag
            .edges
            .iter()
            .map(|e| AgEdgeOut { u: ids(e.u), v: ids(e.v), multiplicity: e.multiplicity.to_string() })
            .collect();
        let (upper_negative, upper_positive) = a.euler.upper_signs();
        Report {
            schema_version: SCHEMA_VERSION,
            tool_version: TOOL_VERSION,
            input: InputInfo { name: divide.name().to_string(), sha256: sha256_hex(input) },
            verdict: Verdict::from_bool(a.passed()),
            invariants: InvariantsOut {
                d: inv.d.to_string(),
                r: inv.r.to_string(),
                mu: inv.mu.to_string(),
                regions: inv.n_regions.to_string(),
                genus: inv.genus.to_string(),
                boundary_components: inv.boundary_components.to_string(),
                euler_characteristic: inv.euler_characteristic.to_string(),
            },
            region_issues: a
                .signed
                .faces
                .issues
                .iter()
                .map(|i| RegionIssueOut { face: i.face.to_string(), vertex: i.vertex.clone() })
                .collect(),
            ag: AgOut {
                census: [neg.to_string(), zero.to_string(), pos.to_string()],
                diagram_depth: a.depths.diagram_depth.to_string(),
                vertices,
                edges,
            },
            matrices: MatricesOut {
                intersection: rows(&a.lattice.i),
                seifert: rows(&a.lattice.s),
                m_desc: rows(&a.mono.m_desc),
                m_asc: rows(&a.mono.m_asc),
                rho_s: rows(&a.mono.rho_s),
            },
            monodromy: MonodromyOut {
                char_poly: strs(a.char_poly.coeffs()),
                char_poly_text: a.char_poly.to_string(),
                order: a.order.map(|o| o.to_string()),
                max_power: a.max_power.to_string(),
            },
            checks: a.suite.checks.clone(),
            adapted: AdaptedOut {
                vectors: a.family.vectors.iter().map(|v| strs(v)).collect(),
                variation: a
                    .variation
                    .iter()
                    .map(|v| VariationOut {
                        index: (v.index + 1).to_string(),
                        verdict: v.verdict,
                        variation: v.variation.clone(),
                    })
                    .collect(),
            },
            euler: EulerOut {
                sigma: a.euler.sigma.to_string(),
                matrix: rows(&a.euler.e),
                arrows: a
                    .euler
                    .arrows
                    .iter()
                    .map(|(i, j, w)| ArrowOut { from: (i + 1).to_string(), to: (j + 1).to_string(), weight: w.to_string() })
                    .collect(),
                upper_negative: upper_negative.to_string(),
                upper_positive: upper_positive.to_string(),
            },
            certificate: CertificateOut {
                verdict: a.certificate.verdict,
                violations: a
                    .certificate
                    .violations
                    .iter()
                    .map(|v| ViolationOut {
                        row: v.row.to_string(),
                        col: v.col.to_string(),
                        found: v.found.clone(),
                        expected: v.expected.clone(),
                    })
                    .collect(),
            },
            cones: a
                .cones
                .iter()
                .map(|c| ConeOut {
                    vertex: ids(c.vertex),
                    partner: ids(c.partner),
                    a_prime: strs(&c.a_prime),
                    components: c.components.iter().map(|v| strs(v)).collect(),
                    var_prime: strs(&c.var_prime),
                    var_total: strs(&c.var_total),
                    verdict: c.verdict,
                })
                .collect(),
            calibration: CALIBRATION_NOTE,
        }
    }

    /// Pretty JSON with a trailing newline.
    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus;

    fn walk(v: &serde_json::Value, bad: &mut Vec<String>) {
        match v {
            serde_json::Value::Number(n) => bad.push(n.to_string()),
            serde_json::Value::Array(a) => a.iter().for_each(|x| walk(x, bad)),
            serde_json::Value::Object(o) => o.values().for_each(|x| walk(x, bad)),
            _ => {}
        }
    }

    #[test]
    fn no_json_numbers() {
        let e = corpus::gen_depth1();
        let a = Analysis::run(&e.divide, None).unwrap();
        let json = Report::new(&a, b"x").to_json();
        let v: serde_json::Value = serde_json::from_str(&json).unwrap();
        let mut bad = Vec::new();
        walk(&v, &mut bad);
        assert!(bad.is_empty(), "{bad:?}");
        assert_eq!(v["cones"][0]["vertex"], "v0_6");
    }

    #[test]
    fn digest_of_empty_input() {
        assert_eq!(sha256_hex(b""), "e3b0c44298fc1c149afbf4c8996fb92427ae41e4649b934ca495991b7852b855");
    }

    #[test]
    fn a2_trace() {
        let a = Analysis::run(&corpus::gen_a(2).divide, None).unwrap();
        let r = Report::new(&a, b"");
        let t: i64 = (0..2).map(|k| r.matrices.m_desc[k][k].parse::<i64>().unwrap()).sum();
        assert_eq!(t, 1);
        assert_eq!(r.monodromy.char_poly_text, "t^2 - t + 1");
        assert_eq!(r.monodromy.order.as_deref(), Some("6"));
    }
}
