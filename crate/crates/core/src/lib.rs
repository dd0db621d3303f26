//! A'Campo divides of plane curve singularities, their AΓ diagrams, and
//! exact integer algebra on the Milnor lattice they determine.
//!
//! The pipeline runs
//!
//! ```text
//! divide file ─► Divide ─► faces ─► SignedDivide ─► AgDiagram + depths
//!                                                      │
//!                    MilnorLattice (I, S, monodromy) ◄─┘
//!                         │
//!                         ├─► identity suite
//!                         └─► adapted family, Euler quiver, depth-1 cones
//! ```
//!
//! Everything is exact: geometry uses rationals and quadratic surds, lattice
//! algebra uses arbitrary-precision integers.
//!
//! ```
//! use acampo::{corpus, pipeline::Analysis};
//!
//! let e6 = corpus::gen_e6();
//! let a = Analysis::run(&e6.divide, None).unwrap();
//! assert_eq!(a.invariants.mu, 6);
//! assert_eq!(a.ag.edges.len(), 9);
//! assert!(a.suite.passed());
//! ```

pub mod adapted;
pub mod ag;
pub mod cli;
pub mod corpus;
pub mod divide;
pub mod lattice;
pub mod matrix;
pub mod pipeline;
pub mod report;

pub use divide::format::{parse_divide, write_divide};
pub use divide::{Divide, Sign, SignedDivide};
pub use matrix::{IntMatrix, IntPoly};
