//! Checkerboard signs on faces.

use std::collections::VecDeque;

use super::faces::{trace_faces, FaceError, FaceSet};
use super::{Divide, Side, Sign};

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum SignError {
    #[error(transparent)]
    Faces(#[from] FaceError),
    #[error("divide not two-colorable: edge `{0}` has the same face on both sides")]
    NotTwoColorable(String),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SignedDivide {
    pub divide: Divide,
    pub faces: FaceSet,
    pub sign: Vec<Sign>,
}

impl SignedDivide {
    /// Traces faces and colors them from the seed.
    pub fn new(divide: Divide) -> Result<SignedDivide, SignError> {
        let faces = trace_faces(&divide)?;
        assign_signs(divide, faces)
    }

    pub fn seed_face(&self) -> usize {
        seed_face(&self.divide, &self.faces)
    }
}

fn seed_face(divide: &Divide, faces: &FaceSet) -> usize {
    let seed = divide.sign_seed();
    match seed.side {
        Side::Left => faces.left_of_edge(seed.edge),
        Side::Right => faces.right_of_edge(seed.edge),
    }
}

pub fn assign_signs(divide: Divide, faces: FaceSet) -> Result<SignedDivide, SignError> {
    let nf = faces.len();
    let ne = divide.edges().len();
    let mut adj: Vec<Vec<(usize, usize)>> = vec![Vec::new(); nf];
    for e in 0..ne {
        let (l, r) = (faces.left_of_edge(e), faces.right_of_edge(e));
        if l == r {
            return Err(SignError::NotTwoColorable(divide.edges()[e].id.clone()));
        }
        adj[l].push((r, e));
        adj[r].push((l, e));
    }
    let mut sign: Vec<Option<Sign>> = vec![None; nf];
    let start = seed_face(&divide, &faces);
    sign[start] = Some(divide.sign_seed().sign);
    let mut queue = VecDeque::from([start]);
    while let Some(f) = queue.pop_front() {
        let s = sign[f].unwrap();
        for &(g, e) in &adj[f] {
            match sign[g] {
                None => {
                    sign[g] = Some(s.flip());
                    queue.push_back(g);
                }
                Some(t) if t == s => {
                    return Err(SignError::NotTwoColorable(divide.edges()[e].id.clone()));
                }
                Some(_) => {}
            }
        }
    }
    // faces are connected through edges because the divide graph is connected
    let sign = sign.into_iter().map(|s| s.expect("face unreachable from seed")).collect();
    Ok(SignedDivide { divide, faces, sign })
}
