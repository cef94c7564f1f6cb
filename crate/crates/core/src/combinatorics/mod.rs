//! Partitions, compositions, skew shapes and the enumerations the character
//! formulas sum over.

mod contingency;
mod enumerate;
mod partition;
mod skew;

pub use contingency::{contingency_matrices, ContingencyMatrices};
pub use enumerate::{
    bounded_compositions, partition_tuples, partitions_of, sub_compositions, sub_partitions,
    PartitionTuples,
};
pub use partition::{standard_tableaux_count, Composition, Partition};
pub use skew::{strip_removals, SkewAnalysis, SkewShape, StripComponent};

pub(crate) use partition::clear_cache;
