//! The full analysis of one divide.

use crate::adapted::{
    adapted_vectors, depth1_cone, euler_matrix, exceptional_certificate, verify_adapted, AdaptedFamily, Certificate,
    ConeError, ConeRecord, EulerQuiver, VariationVerdict,
};
use crate::ag::{build_ag, depth_labels, exposure_set, AgDiagram, AgError, DepthLabels};
use crate::divide::{invariants, Divide, DivideInvariants, InvariantError, SignError, SignedDivide};
use crate::lattice::{char_poly_and_order, identity_suite, MilnorLattice, MonodromyPair, SuiteReport};
use crate::matrix::IntPoly;

#[derive(Debug, thiserror::Error)]
pub enum PipelineError {
    #[error(transparent)]
    Sign(#[from] SignError),
    #[error(transparent)]
    Invariants(#[from] InvariantError),
    #[error(transparent)]
    Ag(#[from] AgError),
    #[error(transparent)]
    Cone(#[from] ConeError),
}

#[derive(Clone, Debug)]
pub struct Analysis {
    pub signed: SignedDivide,
    pub invariants: DivideInvariants,
    pub ag: AgDiagram,
    pub exposed: Vec<usize>,
    pub depths: DepthLabels,
    pub lattice: MilnorLattice,
    pub mono: MonodromyPair,
    pub suite: SuiteReport,
    pub char_poly: IntPoly,
    pub order: Option<u64>,
    pub max_power: u64,
    pub family: AdaptedFamily,
    pub variation: Vec<VariationVerdict>,
    pub euler: EulerQuiver,
    pub certificate: Certificate,
    pub cones: Vec<ConeRecord>,
}

impl Analysis {
    /// Runs every stage. `order`, if given, reorders AΓ vertices within types
    /// (new position `i` holds old position `order[i]`).
    pub fn run(divide: &Divide, order: Option<&[usize]>) -> Result<Analysis, PipelineError> {
        let signed = SignedDivide::new(divide.clone())?;
        let invariants = invariants(&signed)?;
        let mut ag = build_ag(&signed);
        if let Some(perm) = order {
            ag = ag.reordered(perm)?;
        }
        let exposed = exposure_set(&signed, &ag);
        let depths = depth_labels(&ag, &exposed)?;
        let lattice = MilnorLattice::from_ag(&ag)?;
        let mono = lattice.monodromy();
        let suite = identity_suite(&lattice, &mono, invariants.r);
        let max_power = 6 * lattice.mu() as u64 + 6;
        let (char_poly, order) = char_poly_and_order(&mono.m_desc, max_power);
        let family = adapted_vectors(&lattice.i);
        let variation = verify_adapted(&family, &lattice);
        let euler = euler_matrix(&lattice);
        let certificate = exceptional_certificate(&euler.e, &ag);
        let mut cones = Vec::new();
        if depths.diagram_depth == 1 {
            for v in (0..ag.len()).filter(|&v| depths.depth[v] == 1) {
                cones.push(depth1_cone(&ag, &depths, &lattice, v)?);
            }
        }
        Ok(Analysis {
            signed,
            invariants,
            ag,
            exposed,
            depths,
            lattice,
            mono,
            suite,
            char_poly,
            order,
            max_power,
            family,
            variation,
            euler,
            certificate,
            cones,
        })
    }

    /// Every gating verdict of every stage.
    pub fn passed(&self) -> bool {
        self.suite.passed()
            && self.variation.iter().all(|v| v.verdict.passed())
            && self.certificate.verdict.passed()
            && self.cones.iter().all(|c| c.verdict.passed())
    }
}
