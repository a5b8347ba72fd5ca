//! Exact arithmetic: scalars, dense matrices, polynomials and elimination.

pub mod arith;
pub mod elim;
pub mod matrix;
pub mod modular;
pub mod poly;
pub mod scalar;
pub mod upoly;

pub use elim::{
    content_in, first_subresultant, mpoly_gcd, primitive_part, pseudo_remainder, pseudo_remainder_fixed, reduce_normal_form,
    resultant_eliminate,
};
pub use matrix::{charpoly_integer_roots, independent_subset, mat_kernel, span_intersection, ExactMatrix, SpanSolver, Vector};
pub use poly::MultiPoly;
pub use scalar::ExactScalar;
pub use upoly::UPoly;
