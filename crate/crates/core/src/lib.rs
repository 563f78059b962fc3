//! Exact computation of point counts and Poincaré polynomials of
//! Hessenberg varieties.
//!
//! The library pairs two independent computational routes and checks them
//! against each other everywhere:
//!
//! - a symmetric-function route: the Hall scalar product of an invariant
//!   flag generating function (a product of plethystically substituted
//!   modified Hall-Littlewood polynomials) against the omega image of the
//!   chromatic quasisymmetric function of an indifference graph;
//! - a brute-force route: exact linear algebra over a finite field that
//!   enumerates complete flags and invariant subspaces directly.
//!
//! Modules:
//! - [`algebra`]: partitions, q-analogs, integer polynomials, exact scalars
//! - [`symfunc`]: symmetric functions of bounded degree with basis
//!   conversion, Hall product, omega, and power-sum plethysm
//! - [`tableaux`]: semistandard tableaux, cocharge, Kostka-Foulkes and
//!   modified Hall-Littlewood polynomials, tabloid statistics
//! - [`hessenberg`]: Hessenberg functions as Dyck paths, indifference
//!   graphs, chromatic quasisymmetric functions, the modular law
//! - [`gfq`]: exact finite-field linear algebra, similarity class types,
//!   and the brute-force flag enumeration oracle
//! - [`counting`]: the headline counting formulas, Poincaré polynomials,
//!   and the cross-verification suite

pub mod algebra;
pub mod counting;
pub mod error;
pub mod gfq;
pub mod hessenberg;
pub mod symfunc;
pub mod tableaux;

pub use error::{Error, Result};
