//! Cluster calculus on root pairs and extension pairs.

mod capacity;
mod chains;
mod cluster;
mod pair;
mod tower;

pub(crate) use capacity::check_tower;
pub use capacity::{hint_check, root_capacity, CapacityReport, HintCheck};
pub use chains::{
    ascending_chain, ascending_index, descending_chain, link_profile, ChainReport, Direction, LinkProfile, LinkRelations,
    Terminal,
};
pub use cluster::{aut_group, cluster_partition, cluster_report, cluster_size, ClusterReport};
pub use pair::{fingerprint, fingerprint_many, ExtensionPair, RootPair};
pub use tower::{cluster_tower, complete_ordering, tower_sweep, TowerOutcome, TowerReport, TowerSweep, MAX_SWEEP_CLUSTERS};
