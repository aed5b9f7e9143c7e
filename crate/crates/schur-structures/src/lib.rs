//! Distinguished substructures of the affine Schur algebra.
//!
//! Everything here is built on top of [`schur_core`]'s exact basis
//! arithmetic:
//!
//! * [`laurent`] — the corner algebra at the all-ones weight is a Laurent
//!   polynomial ring; [`laurent_normal_form`] computes the isomorphism
//!   constructively and [`LaurentPoly`] is its exact target.
//! * [`center`] — the central basis elements [`center_element`] indexed by
//!   weakly decreasing shifts, and the composite isomorphism
//!   [`center_normal_form`] onto symmetric Laurent polynomials.
//! * [`centralizer`] — idempotent-cut subalgebras: [`subset_idempotent`],
//!   the order-preserving identification [`restrict_to_subset`] with a
//!   smaller affine Schur algebra, and the summand diagnostics
//!   [`summand_data`].
//! * [`bsub`] — the commutative diagonal subalgebras B_i, with exact
//!   factorization over the blocks of the weight and a constructive
//!   maximality witness.
//! * [`groupalg`] — the faithful embedding of the extended affine Weyl
//!   group algebra at n ≥ r.
//! * [`matrixform`] — the r = 1 case as Laurent-weighted elementary
//!   matrices.
//! * [`rewrite`] — finite generation over B_i: [`fg_rewrite`] expresses any
//!   basis symbol as a B_i-combination of the finitely many generators
//!   returned by [`fg_generators`].

mod bsub;
mod center;
mod centralizer;
mod groupalg;
mod laurent;
mod matrixform;
mod rewrite;

pub use bsub::{b_subalgebra_factorize, diagonal_symbol, maximality_witness_shift};
pub use center::{center_element, center_normal_form};
pub use centralizer::{restrict_to_subset, subset_idempotent, summand_data, SummandData};
pub use groupalg::weyl_to_basis;
pub use laurent::{
    corner_identity, graded_dimension, laurent_evaluate, laurent_normal_form, t_generator,
    t_r_inverse, LaurentPoly,
};
pub use matrixform::{matrix_laurent_form, MatrixEntry};
pub use rewrite::{
    fg_generators, fg_generators_blockwise, fg_reexpand, fg_rewrite, is_absolutely_successive,
    GeneratorIndex, RewriteTerm,
};
