//! Exact algebra for translation-invariant Pauli stabilizer codes.
//!
//! Codes are Laurent-polynomial matrices over `Z/p`. The crate computes their
//! homological invariants (charge modules, mobility, duality counts),
//! extracts braiding data for planar codes, and classifies the result through
//! Witt groups, Arf invariants and field-coefficient surgery. Clifford QCAs
//! are handled on their symplectic image over the same ring.
//!
//! Module map:
//! - [`ring`]: `Z/p`, Laurent polynomials, matrices, the bar involution.
//! - [`groebner`]: module Gröbner bases, syzygies, kernels, dimension counts.
//! - [`code`]: stabilizer codes, isotropy, the excess map, Lagrangian test.
//! - [`homology`]: resolutions, the code complex, charge modules, coarse-graining.
//! - [`braiding`]: finite-torus string operators, braiding and self-statistics.
//! - [`forms`]: quadratic spaces, Witt classes, Arf invariant, L-group table.
//! - [`surgery`]: split Poincaré complexes over `Z/p` and their L-classes.
//! - [`qca`]: Clifford QCAs as symplectic Laurent matrices.
//! - [`cli`]: file formats, builtin examples, report generation.

pub mod braiding;
pub mod cli;
pub mod code;
pub mod error;
pub mod forms;
pub mod groebner;
pub mod homology;
pub(crate) mod linalg;
pub mod qca;
pub mod ring;
pub mod surgery;

pub use error::{Error, Result};
