//! The five-phase weighted construction, guaranteeing
//! `dist_H(x,y) ≤ w(P) + (2k−2)·w_half(P)` for every path `P`.
//!
//! 1. greedy `(2k−1)`-spanner;
//! 2. clustering at threshold `ω = w(e)` in the unweighted view `H°_≤ω`;
//! 3. lateral clustering from each vertex towards fully clustered neighbours;
//! 4. distance reduction for edges whose endpoint clusters are far apart;
//! 5. greedy repair of the remaining bad 2-paths.

use rayon::prelude::*;
use serde::Serialize;

use crate::clustering::is_fully_clustered;
use crate::error::{invalid, Result, SpannerError};
use crate::graph::{
    hop_ball, hop_distance, hop_distances_from, weighted_ball, weighted_distance, weighted_distances_from, EdgeId,
    Multigraph, PathSeq, SubgraphView, VertexId, UNREACHED,
};
use crate::params::{exceeds_tenth_threshold, meets_ball_threshold, SpannerParams};
use crate::verify::WEIGHT_RTOL;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Phase {
    Initial,
    Clustering,
    Lateral,
    Reduction,
    Repair,
}

impl Phase {
    pub const ALL: [Phase; 5] = [
        Phase::Initial,
        Phase::Clustering,
        Phase::Lateral,
        Phase::Reduction,
        Phase::Repair,
    ];

    pub fn index(self) -> usize {
        self as usize
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SaturationRecord {
    /// Indexed by edge id.
    pub saturated: Vec<bool>,
    /// `w_v`: first threshold at which `v` was fully clustered.
    pub first_clustered: Vec<Option<f64>>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum LateralVerdict {
    Added,
    SaturatedCandidate,
    RoughlyContained,
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct LateralEntry {
    pub v: VertexId,
    pub u: VertexId,
    pub edge: EdgeId,
    pub key: f64,
    pub verdict: LateralVerdict,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum ReductionVerdict {
    Added,
    RoughlyClose,
}

/// Only edges whose endpoints were more than `k` hops apart get an entry.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct ReductionEntry {
    pub edge: EdgeId,
    pub verdict: ReductionVerdict,
    /// Far pairs counted in the better orientation (a lower bound once the
    /// count is already decisive).
    pub pairs: usize,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct RepairEntry {
    pub path: [VertexId; 3],
    pub sat: EdgeId,
    pub lat: EdgeId,
    pub key: f64,
    pub added: Vec<EdgeId>,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct WeightedSpannerResult {
    pub n: usize,
    pub k: usize,
    /// Edges added by each phase, in order of addition.
    pub phase_edges: [Vec<EdgeId>; 5],
    pub saturation: SaturationRecord,
    pub lateral: Vec<LateralEntry>,
    pub reduction: Vec<ReductionEntry>,
    pub repairs: Vec<RepairEntry>,
}

impl WeightedSpannerResult {
    /// All kept edges, ascending.
    pub fn edges(&self) -> Vec<EdgeId> {
        let mut all: Vec<EdgeId> = self.phase_edges.iter().flatten().copied().collect();
        all.sort_unstable();
        all
    }

    pub fn edge_count(&self) -> usize {
        self.phase_edges.iter().map(Vec::len).sum()
    }

    pub fn phase(&self, p: Phase) -> &[EdgeId] {
        &self.phase_edges[p.index()]
    }

    /// Edges kept before the repair phase.
    pub fn edges_before_repair(&self) -> Vec<EdgeId> {
        let mut all: Vec<EdgeId> = self.phase_edges[..4].iter().flatten().copied().collect();
        all.sort_unstable();
        all
    }
}

/// Sum of the `⌈ℓ/2⌉` largest edge weights of `p`.
pub fn w_half(p: &PathSeq) -> Result<f64> {
    p.w_half()
}

/// The 2-path bound `w(P) + (2k−2)·w_max(P)`.
pub fn two_path_bound(w1: f64, w2: f64, k: usize) -> f64 {
    w1 + w2 + (2 * k - 2) as f64 * w1.max(w2)
}

struct Builder<'g> {
    g: &'g Multigraph,
    params: SpannerParams,
    h: SubgraphView<'g>,
    order: Vec<EdgeId>,
    out: WeightedSpannerResult,
}

impl<'g> Builder<'g> {
    fn add(&mut self, e: EdgeId, phase: Phase) -> Result<()> {
        if !self.h.insert(e) {
            return Err(SpannerError::Invariant(format!("edge {e} added twice")));
        }
        self.out.phase_edges[phase.index()].push(e);
        Ok(())
    }

    fn initial(&mut self) -> Result<()> {
        let stretch = (2 * self.params.k - 1) as f64;
        self.h.set_max_weight(None);
        for i in 0..self.order.len() {
            let e = self.order[i];
            let edge = *self.g.edge(e);
            if weighted_distance(&self.h, edge.u, edge.v, stretch * edge.weight)?.is_none() {
                self.add(e, Phase::Initial)?;
            }
        }
        Ok(())
    }

    fn clustering(&mut self) -> Result<()> {
        let k = self.params.k;
        let mut start = 0;
        while start < self.order.len() {
            let omega = self.g.weight(self.order[start]);
            let mut end = start;
            while end < self.order.len() && self.g.weight(self.order[end]) == omega {
                end += 1;
            }
            self.h.set_max_weight(Some(omega));
            for i in start..end {
                let e = self.order[i];
                let edge = *self.g.edge(e);
                if hop_distance(&self.h, edge.u, edge.v, k, &[])?.is_some() {
                    continue;
                }
                let cu = is_fully_clustered(&self.h, edge.u, &self.params, k)?;
                let cv = is_fully_clustered(&self.h, edge.v, &self.params, k)?;
                if cu && cv {
                    self.out.saturation.saturated[e] = true;
                } else {
                    self.add(e, Phase::Clustering)?;
                }
            }
            for v in 0..self.g.n() {
                if self.out.saturation.first_clustered[v].is_none()
                    && is_fully_clustered(&self.h, v, &self.params, k)?
                {
                    self.out.saturation.first_clustered[v] = Some(omega);
                }
            }
            start = end;
        }
        Ok(())
    }

    fn lateral(&mut self) -> Result<()> {
        let (n, k) = (self.params.n, self.params.k);
        let big_r = self.params.half_radius();
        let inner = (big_r - 1) as f64;
        self.h.set_max_weight(None);
        let mut in_ball = vec![false; n];
        for v in 0..n {
            let mut cands: Vec<(f64, VertexId, EdgeId)> = self
                .g
                .neighbors(v)
                .iter()
                .filter_map(|&(u, e)| {
                    let wu = self.out.saturation.first_clustered[u]?;
                    Some((inner * wu + self.g.weight(e), u, e))
                })
                .collect();
            cands.sort_by(|a, b| a.0.total_cmp(&b.0).then(a.1.cmp(&b.1)));
            for (key, u, e) in cands {
                let ball_v = weighted_ball(&self.h, v, key)?;
                let verdict = if meets_ball_threshold(ball_v.len(), n, big_r, k) {
                    LateralVerdict::SaturatedCandidate
                } else if self.h.contains(e) {
                    LateralVerdict::RoughlyContained
                } else {
                    let wu = self.out.saturation.first_clustered[u].expect("candidate is clustered");
                    for &x in &ball_v {
                        in_ball[x] = true;
                    }
                    let ball_u = weighted_ball(&self.h, u, inner * wu)?;
                    let t = ball_u.iter().filter(|&&x| !in_ball[x]).count();
                    for &x in &ball_v {
                        in_ball[x] = false;
                    }
                    if exceeds_tenth_threshold(t, n, big_r - 1, k) {
                        self.add(e, Phase::Lateral)?;
                        LateralVerdict::Added
                    } else {
                        LateralVerdict::RoughlyContained
                    }
                };
                self.out.lateral.push(LateralEntry { v, u, edge: e, key, verdict });
            }
        }
        Ok(())
    }

    /// Pairs in `B(near, R − I_odd) × B(far, R − 1)` more than `k` hops
    /// apart, stopping early once the count passes the threshold.
    fn far_pairs(&self, near: VertexId, far: VertexId) -> Result<(usize, bool)> {
        let (n, k) = (self.params.n, self.params.k);
        let big_r = self.params.half_radius();
        let left = hop_ball(&self.h, near, big_r - self.params.odd())?;
        let right = hop_ball(&self.h, far, big_r - 1)?;
        let mut count = 0;
        for &a in &left {
            let dist = hop_distances_from(&self.h, a, k, &[])?;
            count += right.iter().filter(|&&b| dist[b] == UNREACHED).count();
            if exceeds_tenth_threshold(count, n, k - 1, k) {
                return Ok((count, true));
            }
        }
        Ok((count, false))
    }

    fn reduction(&mut self) -> Result<()> {
        let k = self.params.k;
        for i in 0..self.order.len() {
            let e = self.order[i];
            let edge = *self.g.edge(e);
            self.h.set_max_weight(Some(edge.weight));
            if self.h.contains(e) || hop_distance(&self.h, edge.u, edge.v, k, &[])?.is_some() {
                continue;
            }
            let (c1, pass1) = self.far_pairs(edge.v, edge.u)?;
            let (c2, pass2) = if pass1 { (0, false) } else { self.far_pairs(edge.u, edge.v)? };
            let verdict = if pass1 || pass2 {
                self.add(e, Phase::Reduction)?;
                ReductionVerdict::Added
            } else {
                ReductionVerdict::RoughlyClose
            };
            self.out.reduction.push(ReductionEntry {
                edge: e,
                verdict,
                pairs: c1.max(c2),
            });
        }
        self.h.set_max_weight(None);
        Ok(())
    }

    fn repair(&mut self) -> Result<()> {
        let k = self.params.k;
        self.h.set_max_weight(None);
        let h = &self.h;
        let dist: Vec<Vec<f64>> = (0..self.g.n())
            .into_par_iter()
            .map(|x| weighted_distances_from(h, x, f64::INFINITY, &[]))
            .collect::<Result<_>>()?;
        let saturated = &self.out.saturation.saturated;
        let mut bad = Vec::new();
        for m in 0..self.g.n() {
            let nbrs = self.g.neighbors(m);
            for &(x, e1) in nbrs {
                for &(y, e2) in nbrs {
                    if x >= y {
                        continue;
                    }
                    let (w1, w2) = (self.g.weight(e1), self.g.weight(e2));
                    if dist[x][y] <= two_path_bound(w1, w2, k) * (1.0 + WEIGHT_RTOL) {
                        continue;
                    }
                    let sat = match (saturated[e1], saturated[e2]) {
                        (true, true) => {
                            if w1 > w2 || (w1 == w2 && e1 < e2) {
                                e1
                            } else {
                                e2
                            }
                        }
                        (true, false) => e1,
                        (false, true) => e2,
                        (false, false) => {
                            return Err(SpannerError::Invariant(format!(
                                "bad 2-path ({x}, {m}, {y}) has no saturated edge"
                            )))
                        }
                    };
                    let lat = if sat == e1 { e2 } else { e1 };
                    let key = 2.0 * self.g.weight(lat) + (k - 1) as f64 * self.g.weight(sat);
                    bad.push(RepairEntry {
                        path: [x, m, y],
                        sat,
                        lat,
                        key,
                        added: Vec::new(),
                    });
                }
            }
        }
        bad.sort_by(|a, b| a.key.total_cmp(&b.key).then(a.path.cmp(&b.path)));
        for mut entry in bad {
            let [x, _, y] = entry.path;
            let (w1, w2) = (self.g.weight(entry.sat), self.g.weight(entry.lat));
            let cutoff = two_path_bound(w1, w2, k) * (1.0 + WEIGHT_RTOL);
            if weighted_distance(&self.h, x, y, cutoff)?.is_some() {
                continue;
            }
            for e in [entry.lat, entry.sat] {
                if !self.h.contains(e) {
                    self.add(e, Phase::Repair)?;
                    entry.added.push(e);
                }
            }
            self.out.repairs.push(entry);
        }
        Ok(())
    }
}

/// Runs all five phases on a simple graph with positive weights, `k ≥ 2`.
pub fn build_weighted_spanner(g: &Multigraph, k: usize) -> Result<WeightedSpannerResult> {
    if k < 2 {
        return Err(invalid(format!("k must be at least 2, got {k}")));
    }
    if !g.is_simple() {
        return Err(invalid("weighted construction needs a simple graph"));
    }
    let n = g.n();
    let mut b = Builder {
        g,
        params: SpannerParams::new(n, k),
        h: SubgraphView::empty(g),
        order: g.edges_by_weight(),
        out: WeightedSpannerResult {
            n,
            k,
            phase_edges: Default::default(),
            saturation: SaturationRecord {
                saturated: vec![false; g.edge_count()],
                first_clustered: vec![None; n],
            },
            lateral: Vec::new(),
            reduction: Vec::new(),
            repairs: Vec::new(),
        },
    };
    b.initial()?;
    b.clustering()?;
    b.lateral()?;
    b.reduction()?;
    b.repair()?;
    Ok(b.out)
}
