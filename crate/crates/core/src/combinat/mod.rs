//! Foundational combinatorial objects: partitions, multisets over the mixed
//! barred/unbarred alphabet, multiset partitions, and permutations.

mod multiset;
mod multiset_partition;
mod partition;

pub use multiset::{compare_multisets, Alphabet, DegreeVector, Letter, Multiset, ParseError};
pub use multiset_partition::{
    enumerate_multiset_partitions, enumerate_multiset_partitions_filtered, MultisetPartition,
    PartitionFilter,
};
pub use partition::{enumerate_partitions, z_mu, Partition, Permutation};
