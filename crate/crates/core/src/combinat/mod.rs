//! Partitions, compositions, tableaux, permutations, RSK and q-binomials.

mod partition;
mod permutation;
mod qbinom;
mod rsk;
mod tableau;

pub use partition::{partitions_of, partitions_of_bounded, Composition, Partition};
pub use permutation::Permutation;
pub use qbinom::{q_binomial_centered, q_factorial};
pub use rsk::{rsk, rsk_inverse};
pub use tableau::{
    for_each_ssyt, ssyt_count, ssyt_enumerate, syt_enumerate, syt_enumerate_bounded, Syt, Tableau,
};

/// Default largest size for partition and standard tableau enumeration.
pub const MAX_SIZE: u32 = 12;

/// Default cap on the number of semistandard tableaux a single enumeration
/// may visit.
pub const MAX_SSYT: u64 = 50_000_000;
