//! Numeric and surface invariants of a signed divide.

use serde::Serialize;

use super::SignedDivide;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct DivideInvariants {
    pub d: usize,
    pub r: usize,
    pub mu: usize,
    pub n_regions: usize,
    pub genus: usize,
    pub boundary_components: usize,
    pub euler_characteristic: i64,
}

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum InvariantError {
    #[error("surface invariants undefined for circle components")]
    CircleComponents,
    #[error("region count {found} contradicts d - r + 1 = {expected}")]
    RegionCount { found: usize, expected: i64 },
}

pub fn invariants(signed: &SignedDivide) -> Result<DivideInvariants, InvariantError> {
    let divide = &signed.divide;
    if divide.has_circles() {
        return Err(InvariantError::CircleComponents);
    }
    let d = divide.double_point_count();
    let r = divide.branch_count();
    let expected = d as i64 - r as i64 + 1;
    let n_regions = signed.faces.region_count();
    if n_regions as i64 != expected {
        return Err(InvariantError::RegionCount { found: n_regions, expected });
    }
    let mu = 2 * d + 1 - r;
    Ok(DivideInvariants {
        d,
        r,
        mu,
        n_regions,
        genus: n_regions,
        boundary_components: r,
        euler_characteristic: 1 - mu as i64,
    })
}
