//! Cluster levels and the greedy clustering procedure.
//!
//! A vertex `v` is `ℓ`-clustered in `H` when `|B_H(v, r)| ≥ n^{r/k}` for every
//! `r ≤ ℓ` and `ℓ` is maximal. Thresholds are compared exactly as
//! `|B|^k ≥ n^r`.

use serde::Serialize;

use crate::error::{invalid, Result};
use crate::graph::{ball_profile, hop_distance, EdgeId, Multigraph, SubgraphView, VertexId};
use crate::params::{meets_ball_threshold, SpannerParams};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct ClusterLevel {
    pub vertex: VertexId,
    pub level: usize,
}

/// Largest `ℓ ≤ cap` with all balls up to radius `ℓ` above threshold.
pub(crate) fn level_capped(h: &SubgraphView<'_>, v: VertexId, n: usize, k: usize, cap: usize) -> Result<usize> {
    let cap = cap.min(k);
    let sizes = ball_profile(h, v, cap)?;
    let mut level = 0;
    for (r, &size) in sizes.iter().enumerate().skip(1) {
        if !meets_ball_threshold(size, n, r, k) {
            break;
        }
        level = r;
    }
    Ok(level)
}

fn check_params(h: &SubgraphView<'_>, params: &SpannerParams) -> Result<()> {
    if params.n != h.n() {
        return Err(invalid(format!(
            "params.n = {} but the graph has {} vertices",
            params.n,
            h.n()
        )));
    }
    if params.k == 0 {
        return Err(invalid("k must be at least 1"));
    }
    Ok(())
}

pub fn cluster_level(h: &SubgraphView<'_>, v: VertexId, params: &SpannerParams) -> Result<ClusterLevel> {
    check_params(h, params)?;
    let level = level_capped(h, v, params.n, params.k, params.k)?;
    Ok(ClusterLevel { vertex: v, level })
}

/// Whether `v` has a `⌈s/2⌉`-cluster in `h`.
pub fn is_fully_clustered(h: &SubgraphView<'_>, v: VertexId, params: &SpannerParams, s: usize) -> Result<bool> {
    if s == 0 {
        return Err(invalid("s must be at least 1"));
    }
    check_params(h, params)?;
    let need = s.div_ceil(2);
    if need > params.k {
        return Ok(params.n <= 1);
    }
    Ok(level_capped(h, v, params.n, params.k, need)? >= need)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum ClusteringDecision {
    Accepted,
    /// Endpoints already within distance `s`.
    RejectedClose,
    /// Both endpoints already fully clustered.
    RejectedClustered,
}

#[derive(Clone, Debug, Default, PartialEq, Serialize)]
pub struct ClusteringTrace {
    pub added: Vec<EdgeId>,
    pub decisions: Vec<(EdgeId, ClusteringDecision)>,
}

/// Replays greedy clustering over `edge_order`: an edge is kept iff its
/// endpoints are more than `s` apart in the current graph and at least one
/// of them is not yet fully clustered.
pub fn greedy_clustering(
    g: &Multigraph,
    s: usize,
    edge_order: &[EdgeId],
    params: &SpannerParams,
) -> Result<ClusteringTrace> {
    let mut h = SubgraphView::empty(g);
    check_params(&h, params)?;
    if s == 0 {
        return Err(invalid("s must be at least 1"));
    }
    let mut trace = ClusteringTrace::default();
    for &e in edge_order {
        g.check_edge(e)?;
        let edge = *g.edge(e);
        let decision = if hop_distance(&h, edge.u, edge.v, s, &[])?.is_some() {
            ClusteringDecision::RejectedClose
        } else if is_fully_clustered(&h, edge.u, params, s)? && is_fully_clustered(&h, edge.v, params, s)? {
            ClusteringDecision::RejectedClustered
        } else {
            h.insert(e);
            trace.added.push(e);
            ClusteringDecision::Accepted
        };
        trace.decisions.push((e, decision));
    }
    Ok(trace)
}
