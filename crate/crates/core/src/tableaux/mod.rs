//! Semistandard tableaux, cocharge, Kostka-Foulkes and modified
//! Hall-Littlewood polynomials, tabloids, and compatible fillings.
//!
//! Two independent routes to the same polynomials coexist here on
//! purpose. The cocharge statistic on semistandard tableaux builds the
//! modified Hall-Littlewood polynomials directly; the tabloid statistics
//! `w` and `val` generate their monomial coefficients without touching
//! cocharge. Cross-checking the two routes certifies the cocharge
//! convention, and the compatible-filling statistic `v` extends the check
//! to arbitrary Hessenberg functions.

mod filling;
mod hl;
mod ssyt;
mod tabloid;

pub use filling::{enumerate_compatible_fillings, filling_v, nilpotent_poincare, Filling};
pub use hl::hall_littlewood;
pub use ssyt::{cocharge, cocharge_word, enumerate_ssyt, kostka_foulkes, kostka_number, Ssyt};
pub use tabloid::{
    entry_value, enumerate_tabloids, monomial_coeff_a, tabloid_val, tabloid_w, Tabloid,
};
