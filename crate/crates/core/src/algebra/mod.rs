//! Exact arithmetic substrate: partitions, compositions, q-analogs, and
//! univariate polynomials over arbitrary-precision integers and rationals.

mod partition;
mod poly;
mod scalar;

pub use partition::{partitions_of, Composition, Partition};
pub use poly::{
    q_factorial, q_factorial_at, q_factorial_partition, q_factorial_partition_at, q_int, q_int_at,
    IntPoly,
};
pub use scalar::{ExactScalar, RatFn};
