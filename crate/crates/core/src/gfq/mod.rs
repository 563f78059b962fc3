//! Exact finite-field linear algebra: field construction, irreducible
//! polynomials, operators built from similarity class types, subspace
//! and flag enumeration, and both routes to the invariant flag
//! generating function.

mod field;
mod flags;
mod fqpoly;
mod ifgf;
mod matrix;
mod subspace;
mod types;

pub use field::{factor_prime_power, FieldCtx, Fq, MAX_Q};
pub use flags::{
    count_hessenberg_bruteforce, f_t_bruteforce, flag_counts_by_shape, invariant_subspaces,
    DEFAULT_BUDGET,
};
pub use fqpoly::{companion_matrix, irreducible_polys, num_irreducibles, poly_string, FqPoly};
pub use ifgf::f_tau;
pub use matrix::{reduce_vector, rref, LinearOp, Mat};
pub use subspace::{subspaces_of_dim, Subspace};
pub use types::{enumerate_types, operator_from_type, SimilarityClassType};
