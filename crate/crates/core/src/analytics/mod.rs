//! Corpus statistics, word-order profiles, projectivity and data splits.

mod partition;
mod projectivity;
mod stats;
mod word_order;

pub use partition::{partition, Partition, PartitionError, SectionSplit, SplitRatios};
pub use projectivity::{crossing_arcs, is_projective};
pub use stats::{treebank_stats, RelationCount, StatsReport};
pub use word_order::{word_order_profile, Pattern, PatternCount, PredicateScope, WordOrderMode, WordOrderProfile};
