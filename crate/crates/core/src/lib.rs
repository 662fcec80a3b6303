//! Graph spanners: greedy `d → r` constructions, clustering, the five-phase
//! weighted spanner, edge-fault-tolerant variants, instance generators and
//! brute-force verification.

pub mod clustering;
pub mod error;
pub mod fault;
pub mod format;
pub mod generators;
pub mod graph;
pub mod greedy;
pub mod params;
pub mod verify;
pub mod weighted;

pub use clustering::{cluster_level, greedy_clustering, is_fully_clustered, ClusterLevel, ClusteringDecision, ClusteringTrace};
pub use error::{Result, SpannerError};
pub use fault::{
    eft_edge_greedy_2k1, eft_greedy_exact, eft_modified_greedy, eft_union_spanner, find_fault_set, verify_blocking_set,
    BlockingRecord, FaultSet,
};
pub use generators::{gen_big_clique, gen_eft_lower_bound, gen_hypercube, gen_random, gen_weighted_lower_bound, BaseGraph, InstanceBundle};
pub use graph::{girth, hop_distance, weighted_ball, Edge, EdgeId, Multigraph, PathSeq, SubgraphView, VertexId};
pub use greedy::{
    greedy_dr_spanner, greedy_path_collection_spanner, parallel_greedy_spanner, sqrt_k_spanner, union_hybrid_spanner,
    Algorithm, PathCollection, SpannerResult,
};
pub use params::SpannerParams;
pub use verify::{size_report, verify_alpha_beta, verify_dr, verify_eft, verify_weighted_bound, VerificationReport};
pub use weighted::{build_weighted_spanner, w_half, WeightedSpannerResult};
