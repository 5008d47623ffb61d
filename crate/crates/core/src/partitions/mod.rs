//! Interval, non-crossing and depth-two partitions, and the partition-sum form
//! of orthogonal-convolution moments.

mod decomposable;
mod interval;
mod noncrossing;

pub use decomposable::{
    bijection_f, bijection_g, enumerate_c, enumerate_d2, enumerate_dp2, enumerate_f, f_inverse, g_inverse,
    DecomposablePartition, DecompositionPair, Triple,
};
pub use interval::{
    alternating_split, enumerate_interval, f_coefficient, inverse_boolean_cumulant, moment_function, odd_refinements,
    orthogonal_moment_combinatorial, IntervalComposition, MAX_INTERVAL_N,
};
pub use noncrossing::{enumerate_nc, nc_block_type_counts, NCPartition, MAX_NC_N};
