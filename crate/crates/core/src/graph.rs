//! Graph substrate: multigraphs with stable edge ids, subgraph views over them,
//! and the truncated distance queries every construction is built on.
//!
//! Adjacency lists are kept sorted by `(neighbor, edge id)`, which makes every
//! traversal deterministic and lets [`shortest_path`] return the
//! lexicographically smallest shortest path.

use std::cmp::Ordering;
use std::collections::{BinaryHeap, VecDeque};

use serde::Serialize;

use crate::error::{invalid, Result, SpannerError};

pub type VertexId = usize;
pub type EdgeId = usize;

/// Sentinel used in hop-distance tables for vertices beyond the cutoff.
pub const UNREACHED: usize = usize::MAX;

#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct Edge {
    pub u: VertexId,
    pub v: VertexId,
    pub weight: f64,
}

impl Edge {
    pub fn other(&self, x: VertexId) -> VertexId {
        if x == self.u {
            self.v
        } else {
            self.u
        }
    }

    /// Endpoints as `(min, max)`.
    pub fn endpoints(&self) -> (VertexId, VertexId) {
        (self.u.min(self.v), self.u.max(self.v))
    }
}

/// Undirected multigraph. Edge ids are dense (`0..m`) and never change;
/// parallel edges are distinct ids over the same endpoint pair.
#[derive(Clone, Debug, PartialEq)]
pub struct Multigraph {
    n: usize,
    weighted: bool,
    edges: Vec<Edge>,
    adj: Vec<Vec<(VertexId, EdgeId)>>,
}

impl Multigraph {
    pub fn new(n: usize) -> Self {
        Self {
            n,
            weighted: false,
            edges: Vec::new(),
            adj: vec![Vec::new(); n],
        }
    }

    pub fn new_weighted(n: usize) -> Self {
        Self {
            weighted: true,
            ..Self::new(n)
        }
    }

    /// Builds an unweighted graph from an edge list.
    pub fn from_edges(n: usize, edges: &[(VertexId, VertexId)]) -> Result<Self> {
        let mut g = Self::new(n);
        for &(u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    pub fn from_weighted_edges(n: usize, edges: &[(VertexId, VertexId, f64)]) -> Result<Self> {
        let mut g = Self::new_weighted(n);
        for &(u, v, w) in edges {
            g.add_weighted_edge(u, v, w)?;
        }
        Ok(g)
    }

    pub fn add_edge(&mut self, u: VertexId, v: VertexId) -> Result<EdgeId> {
        self.push_edge(u, v, 1.0)
    }

    pub fn add_weighted_edge(&mut self, u: VertexId, v: VertexId, weight: f64) -> Result<EdgeId> {
        if !(weight.is_finite() && weight > 0.0) {
            return Err(SpannerError::NonPositiveWeight(weight));
        }
        if !self.weighted && weight != 1.0 {
            return Err(invalid(format!(
                "weight {weight} on an unweighted graph (only 1 is allowed)"
            )));
        }
        self.push_edge(u, v, weight)
    }

    fn push_edge(&mut self, u: VertexId, v: VertexId, weight: f64) -> Result<EdgeId> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if u == v {
            return Err(SpannerError::SelfLoop(u));
        }
        let id = self.edges.len();
        self.edges.push(Edge { u, v, weight });
        insert_sorted(&mut self.adj[u], v, id);
        insert_sorted(&mut self.adj[v], u, id);
        Ok(id)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn is_weighted(&self) -> bool {
        self.weighted
    }

    pub fn edge(&self, e: EdgeId) -> &Edge {
        &self.edges[e]
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn weight(&self, e: EdgeId) -> f64 {
        self.edges[e].weight
    }

    /// Incident `(neighbor, edge)` pairs sorted by neighbor then edge id.
    pub fn neighbors(&self, v: VertexId) -> &[(VertexId, EdgeId)] {
        &self.adj[v]
    }

    pub fn degree(&self, v: VertexId) -> usize {
        self.adj[v].len()
    }

    /// Ids of all parallel copies joining `u` and `v`, ascending.
    pub fn edges_between(&self, u: VertexId, v: VertexId) -> impl Iterator<Item = EdgeId> + '_ {
        let list = &self.adj[u];
        let start = list.partition_point(|&(w, _)| w < v);
        list[start..]
            .iter()
            .take_while(move |&&(w, _)| w == v)
            .map(|&(_, e)| e)
    }

    pub fn has_parallel_edges(&self) -> bool {
        self.adj
            .iter()
            .any(|list| list.windows(2).any(|w| w[0].0 == w[1].0))
    }

    pub fn is_simple(&self) -> bool {
        !self.has_parallel_edges()
    }

    pub fn check_vertex(&self, v: VertexId) -> Result<()> {
        if v < self.n {
            Ok(())
        } else {
            Err(SpannerError::InvalidVertex {
                vertex: v,
                n: self.n,
            })
        }
    }

    pub fn check_edge(&self, e: EdgeId) -> Result<()> {
        if e < self.edges.len() {
            Ok(())
        } else {
            Err(SpannerError::InvalidEdge {
                edge: e,
                m: self.edges.len(),
            })
        }
    }

    /// Edge ids sorted by `(weight, id)`.
    pub fn edges_by_weight(&self) -> Vec<EdgeId> {
        let mut order: Vec<EdgeId> = (0..self.edges.len()).collect();
        order.sort_by(|&a, &b| {
            self.edges[a]
                .weight
                .total_cmp(&self.edges[b].weight)
                .then(a.cmp(&b))
        });
        order
    }
}

fn insert_sorted(list: &mut Vec<(VertexId, EdgeId)>, nbr: VertexId, id: EdgeId) {
    let pos = list.partition_point(|&entry| entry < (nbr, id));
    list.insert(pos, (nbr, id));
}

/// A set of host edges, optionally restricted to edges of weight at most `ω`.
///
/// Constructions grow a private view edge by edge; queries only see included
/// edges whose weight passes the threshold.
#[derive(Clone, Debug)]
pub struct SubgraphView<'g> {
    host: &'g Multigraph,
    included: Vec<bool>,
    adj: Vec<Vec<(VertexId, EdgeId)>>,
    count: usize,
    max_weight: Option<f64>,
}

impl<'g> SubgraphView<'g> {
    pub fn empty(host: &'g Multigraph) -> Self {
        Self {
            host,
            included: vec![false; host.edge_count()],
            adj: vec![Vec::new(); host.n()],
            count: 0,
            max_weight: None,
        }
    }

    pub fn full(host: &'g Multigraph) -> Self {
        Self {
            host,
            included: vec![true; host.edge_count()],
            adj: host.adj.clone(),
            count: host.edge_count(),
            max_weight: None,
        }
    }

    pub fn from_edges<I: IntoIterator<Item = EdgeId>>(host: &'g Multigraph, edges: I) -> Result<Self> {
        let mut view = Self::empty(host);
        for e in edges {
            host.check_edge(e)?;
            view.insert(e);
        }
        Ok(view)
    }

    pub fn host(&self) -> &'g Multigraph {
        self.host
    }

    pub fn n(&self) -> usize {
        self.host.n()
    }

    /// Adds a host edge; returns false if it was already present.
    ///
    /// Panics if `e` is not a host edge id.
    pub fn insert(&mut self, e: EdgeId) -> bool {
        if self.included[e] {
            return false;
        }
        self.included[e] = true;
        self.count += 1;
        let Edge { u, v, .. } = self.host.edges[e];
        insert_sorted(&mut self.adj[u], v, e);
        insert_sorted(&mut self.adj[v], u, e);
        true
    }

    pub fn set_max_weight(&mut self, omega: Option<f64>) {
        self.max_weight = omega;
    }

    pub fn max_weight(&self) -> Option<f64> {
        self.max_weight
    }

    fn passes(&self, e: EdgeId) -> bool {
        match self.max_weight {
            None => true,
            Some(omega) => self.host.edges[e].weight <= omega,
        }
    }

    pub fn contains(&self, e: EdgeId) -> bool {
        e < self.included.len() && self.included[e] && self.passes(e)
    }

    /// Included edges, ascending, honoring the weight threshold.
    pub fn edge_ids(&self) -> Vec<EdgeId> {
        (0..self.included.len()).filter(|&e| self.contains(e)).collect()
    }

    pub fn len(&self) -> usize {
        match self.max_weight {
            None => self.count,
            Some(_) => self.edge_ids().len(),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn neighbors(&self, v: VertexId) -> impl Iterator<Item = (VertexId, EdgeId)> + '_ {
        self.adj[v].iter().copied().filter(move |&(_, e)| self.passes(e))
    }
}

fn excluded_filter(excluded: &[EdgeId]) -> impl Fn(EdgeId) -> bool + '_ {
    move |e| !excluded.contains(&e)
}

/// Breadth-first search from `src` up to depth `cutoff`, over edges accepted
/// by `allow`. Stops early once `target` is settled.
pub(crate) fn bfs_filtered(
    g: &SubgraphView<'_>,
    src: VertexId,
    cutoff: usize,
    target: Option<VertexId>,
    allow: impl Fn(EdgeId) -> bool,
) -> Vec<usize> {
    let mut dist = vec![UNREACHED; g.n()];
    dist[src] = 0;
    if target == Some(src) {
        return dist;
    }
    let mut queue = VecDeque::from([src]);
    while let Some(a) = queue.pop_front() {
        let da = dist[a];
        if da >= cutoff {
            continue;
        }
        for (b, e) in g.neighbors(a) {
            if dist[b] != UNREACHED || !allow(e) {
                continue;
            }
            dist[b] = da + 1;
            if target == Some(b) {
                return dist;
            }
            queue.push_back(b);
        }
    }
    dist
}

/// Hop distances from `src`, truncated at `cutoff` ([`UNREACHED`] beyond).
pub fn hop_distances_from(
    g: &SubgraphView<'_>,
    src: VertexId,
    cutoff: usize,
    excluded: &[EdgeId],
) -> Result<Vec<usize>> {
    g.host.check_vertex(src)?;
    Ok(bfs_filtered(g, src, cutoff, None, excluded_filter(excluded)))
}

/// Exact hop distance between `x` and `y` in `g` minus `excluded`, or `None`
/// when it exceeds `cutoff`.
pub fn hop_distance(
    g: &SubgraphView<'_>,
    x: VertexId,
    y: VertexId,
    cutoff: usize,
    excluded: &[EdgeId],
) -> Result<Option<usize>> {
    g.host.check_vertex(x)?;
    g.host.check_vertex(y)?;
    let dist = bfs_filtered(g, x, cutoff, Some(y), excluded_filter(excluded));
    Ok((dist[y] != UNREACHED).then_some(dist[y]))
}

/// `B_g(v, radius)` in hops, ascending vertex ids.
pub fn hop_ball(g: &SubgraphView<'_>, v: VertexId, radius: usize) -> Result<Vec<VertexId>> {
    let dist = hop_distances_from(g, v, radius, &[])?;
    Ok((0..g.n()).filter(|&u| dist[u] != UNREACHED).collect())
}

/// `|B_g(v, r)|` for every `r` in `0..=max_radius`.
pub fn ball_profile(g: &SubgraphView<'_>, v: VertexId, max_radius: usize) -> Result<Vec<usize>> {
    let dist = hop_distances_from(g, v, max_radius, &[])?;
    let mut sizes = vec![0usize; max_radius + 1];
    for &d in &dist {
        if d != UNREACHED {
            sizes[d] += 1;
        }
    }
    for r in 1..=max_radius {
        sizes[r] += sizes[r - 1];
    }
    Ok(sizes)
}

#[derive(PartialEq)]
struct HeapItem(f64, VertexId);

impl Eq for HeapItem {}

impl Ord for HeapItem {
    fn cmp(&self, other: &Self) -> Ordering {
        // min-heap on distance, then vertex id
        other.0.total_cmp(&self.0).then_with(|| other.1.cmp(&self.1))
    }
}

impl PartialOrd for HeapItem {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Weighted distances from `src`; entries beyond `radius` are `f64::INFINITY`.
pub fn weighted_distances_from(
    g: &SubgraphView<'_>,
    src: VertexId,
    radius: f64,
    excluded: &[EdgeId],
) -> Result<Vec<f64>> {
    g.host.check_vertex(src)?;
    let mut dist = vec![f64::INFINITY; g.n()];
    let mut done = vec![false; g.n()];
    dist[src] = 0.0;
    let mut heap = BinaryHeap::from([HeapItem(0.0, src)]);
    while let Some(HeapItem(da, a)) = heap.pop() {
        if done[a] {
            continue;
        }
        done[a] = true;
        for (b, e) in g.neighbors(a) {
            if done[b] || excluded.contains(&e) {
                continue;
            }
            let nd = da + g.host.weight(e);
            if nd <= radius && nd < dist[b] {
                dist[b] = nd;
                heap.push(HeapItem(nd, b));
            }
        }
    }
    Ok(dist)
}

/// Weighted shortest-path distance, `None` when it exceeds `cutoff`.
pub fn weighted_distance(
    g: &SubgraphView<'_>,
    x: VertexId,
    y: VertexId,
    cutoff: f64,
) -> Result<Option<f64>> {
    g.host.check_vertex(y)?;
    let dist = weighted_distances_from(g, x, cutoff, &[])?;
    Ok(dist[y].is_finite().then_some(dist[y]))
}

/// Vertices within weighted distance `radius` of `v`, ascending.
pub fn weighted_ball(g: &SubgraphView<'_>, v: VertexId, radius: f64) -> Result<Vec<VertexId>> {
    if radius.is_nan() || radius < 0.0 {
        return Err(invalid(format!("ball radius must be nonnegative, got {radius}")));
    }
    let dist = weighted_distances_from(g, v, radius, &[])?;
    Ok((0..g.n()).filter(|&u| dist[u].is_finite()).collect())
}

/// Length of the shortest cycle, `None` for forests. A pair of parallel edges
/// is a cycle of length 2.
pub fn girth(g: &SubgraphView<'_>) -> Option<usize> {
    let n = g.n();
    for v in 0..n {
        let mut prev = None;
        for (w, _) in g.neighbors(v) {
            if prev == Some(w) {
                return Some(2);
            }
            prev = Some(w);
        }
    }
    let mut best = UNREACHED;
    let mut dist = vec![UNREACHED; n];
    let mut parent_edge = vec![UNREACHED; n];
    for root in 0..n {
        dist.fill(UNREACHED);
        parent_edge.fill(UNREACHED);
        dist[root] = 0;
        let mut queue = VecDeque::from([root]);
        while let Some(a) = queue.pop_front() {
            if 2 * dist[a] >= best {
                break;
            }
            for (b, e) in g.neighbors(a) {
                if e == parent_edge[a] {
                    continue;
                }
                if dist[b] == UNREACHED {
                    dist[b] = dist[a] + 1;
                    parent_edge[b] = e;
                    queue.push_back(b);
                } else {
                    best = best.min(dist[a] + dist[b] + 1);
                }
            }
        }
    }
    (best != UNREACHED).then_some(best)
}

/// Lexicographically smallest shortest `x`–`y` path (by vertex sequence, then
/// edge ids) of hop length at most `cutoff`, avoiding `excluded`.
pub fn shortest_path(
    g: &SubgraphView<'_>,
    x: VertexId,
    y: VertexId,
    cutoff: usize,
    excluded: &[EdgeId],
) -> Result<Option<PathSeq>> {
    g.host.check_vertex(x)?;
    g.host.check_vertex(y)?;
    let to_y = bfs_filtered(g, y, cutoff, None, excluded_filter(excluded));
    if to_y[x] == UNREACHED {
        return Ok(None);
    }
    let mut vertices = vec![x];
    let mut edges = Vec::with_capacity(to_y[x]);
    let mut cur = x;
    while cur != y {
        let want = to_y[cur] - 1;
        let (next, e) = g
            .neighbors(cur)
            .find(|&(w, e)| to_y[w] == want && !excluded.contains(&e))
            .expect("BFS layer has a predecessor");
        vertices.push(next);
        edges.push(e);
        cur = next;
    }
    let weights = edges.iter().map(|&e| g.host.weight(e)).collect();
    Ok(Some(PathSeq {
        vertices,
        edges,
        weights,
    }))
}

/// A walk through the host graph with its edge weights cached.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct PathSeq {
    vertices: Vec<VertexId>,
    edges: Vec<EdgeId>,
    weights: Vec<f64>,
}

impl PathSeq {
    /// Follows `edges` from `start`, checking that each edge continues the walk.
    pub fn from_edges(g: &Multigraph, start: VertexId, edges: &[EdgeId]) -> Result<Self> {
        g.check_vertex(start)?;
        let mut vertices = vec![start];
        let mut cur = start;
        for &e in edges {
            g.check_edge(e)?;
            let edge = g.edge(e);
            if edge.u != cur && edge.v != cur {
                return Err(invalid(format!("edge {e} does not touch vertex {cur}")));
            }
            cur = edge.other(cur);
            vertices.push(cur);
        }
        let weights = edges.iter().map(|&e| g.weight(e)).collect();
        Ok(Self {
            vertices,
            edges: edges.to_vec(),
            weights,
        })
    }

    /// Joins consecutive vertices by their smallest-id connecting edge.
    pub fn from_vertices(g: &Multigraph, vertices: &[VertexId]) -> Result<Self> {
        let Some(&start) = vertices.first() else {
            return Err(invalid("a path needs at least one vertex"));
        };
        let mut edges = Vec::with_capacity(vertices.len().saturating_sub(1));
        for pair in vertices.windows(2) {
            g.check_vertex(pair[0])?;
            g.check_vertex(pair[1])?;
            let e = g
                .edges_between(pair[0], pair[1])
                .next()
                .ok_or_else(|| invalid(format!("no edge joins {} and {}", pair[0], pair[1])))?;
            edges.push(e);
        }
        Self::from_edges(g, start, &edges)
    }

    pub fn vertices(&self) -> &[VertexId] {
        &self.vertices
    }

    pub fn edges(&self) -> &[EdgeId] {
        &self.edges
    }

    pub fn weights(&self) -> &[f64] {
        &self.weights
    }

    pub fn source(&self) -> VertexId {
        self.vertices[0]
    }

    pub fn target(&self) -> VertexId {
        *self.vertices.last().expect("nonempty")
    }

    pub fn hop_len(&self) -> usize {
        self.edges.len()
    }

    /// True when no vertex repeats.
    pub fn is_simple(&self) -> bool {
        let mut seen = self.vertices.clone();
        seen.sort_unstable();
        seen.windows(2).all(|w| w[0] != w[1])
    }

    /// `w(P)`.
    pub fn weight(&self) -> f64 {
        self.weights.iter().sum()
    }

    pub fn max_weight(&self) -> f64 {
        self.weights.iter().copied().fold(0.0, f64::max)
    }

    pub fn min_weight(&self) -> f64 {
        self.weights.iter().copied().fold(f64::INFINITY, f64::min)
    }

    /// Sum of the `⌈ℓ/2⌉` largest edge weights.
    pub fn w_half(&self) -> Result<f64> {
        if self.edges.is_empty() {
            return Err(invalid("w_half of an empty path"));
        }
        let mut sorted = self.weights.clone();
        sorted.sort_by(|a, b| b.total_cmp(a));
        Ok(sorted[..self.edges.len().div_ceil(2)].iter().sum())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cycle(n: usize) -> Multigraph {
        let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Multigraph::from_edges(n, &edges).unwrap()
    }

    fn petersen() -> Multigraph {
        let mut edges = Vec::new();
        for i in 0..5 {
            edges.push((i, (i + 1) % 5));
            edges.push((i, i + 5));
            edges.push((5 + i, 5 + (i + 2) % 5));
        }
        Multigraph::from_edges(10, &edges).unwrap()
    }

    // Plain BFS over an edge list; shares nothing with the view machinery.
    fn oracle_dist(n: usize, edges: &[(usize, usize)], x: usize, y: usize) -> Option<usize> {
        let mut dist = vec![None; n];
        dist[x] = Some(0);
        let mut frontier = vec![x];
        let mut d = 0;
        while !frontier.is_empty() {
            d += 1;
            let mut next = Vec::new();
            for &a in &frontier {
                for &(p, q) in edges {
                    for (s, t) in [(p, q), (q, p)] {
                        if s == a && dist[t].is_none() {
                            dist[t] = Some(d);
                            next.push(t);
                        }
                    }
                }
            }
            frontier = next;
        }
        dist[y]
    }

    // Shortest cycle through each edge: remove it and measure the detour.
    fn oracle_girth(n: usize, edges: &[(usize, usize)]) -> Option<usize> {
        (0..edges.len())
            .filter_map(|i| {
                let rest: Vec<_> = edges
                    .iter()
                    .enumerate()
                    .filter(|&(j, _)| j != i)
                    .map(|(_, &e)| e)
                    .collect();
                oracle_dist(n, &rest, edges[i].0, edges[i].1).map(|d| d + 1)
            })
            .min()
    }

    #[test]
    fn rejects_self_loops_and_bad_weights() {
        let mut g = Multigraph::new(3);
        assert_eq!(g.add_edge(1, 1), Err(SpannerError::SelfLoop(1)));
        assert!(matches!(g.add_edge(0, 3), Err(SpannerError::InvalidVertex { .. })));
        assert!(g.add_weighted_edge(0, 1, 2.0).is_err());
        let mut w = Multigraph::new_weighted(3);
        assert!(matches!(w.add_weighted_edge(0, 1, 0.0), Err(SpannerError::NonPositiveWeight(_))));
        assert!(w.add_weighted_edge(0, 1, f64::NAN).is_err());
        assert_eq!(w.add_weighted_edge(0, 1, 0.25), Ok(0));
    }

    #[test]
    fn cycle_detour_around_excluded_edge() {
        let g = cycle(6);
        let view = SubgraphView::full(&g);
        assert_eq!(hop_distance(&view, 0, 1, 10, &[0]).unwrap(), Some(5));
        assert_eq!(hop_distance(&view, 0, 1, 4, &[0]).unwrap(), None);
        assert_eq!(hop_distance(&view, 3, 3, 0, &[]).unwrap(), Some(0));
        assert!(hop_distance(&view, 0, 6, 3, &[]).is_err());
    }

    #[test]
    fn petersen_distances_match_oracle() {
        let g = petersen();
        let list: Vec<_> = g.edges().iter().map(|e| (e.u, e.v)).collect();
        let view = SubgraphView::full(&g);
        for x in 0..10 {
            for y in 0..10 {
                assert_eq!(
                    hop_distance(&view, x, y, 10, &[]).unwrap(),
                    oracle_dist(10, &list, x, y)
                );
            }
        }
        // diameter 2: outer vertex 0 and inner vertex 7 are not adjacent
        assert_eq!(hop_distance(&view, 0, 7, 10, &[]).unwrap(), Some(2));
    }

    #[test]
    fn girth_examples() {
        assert_eq!(girth(&SubgraphView::full(&cycle(5))), Some(5));
        let tree = Multigraph::from_edges(5, &[(0, 1), (1, 2), (1, 3), (3, 4)]).unwrap();
        assert_eq!(girth(&SubgraphView::full(&tree)), None);
        let p = petersen();
        let list: Vec<_> = p.edges().iter().map(|e| (e.u, e.v)).collect();
        assert_eq!(oracle_girth(10, &list), Some(5));
        assert_eq!(girth(&SubgraphView::full(&p)), Some(5));
        let multi = Multigraph::from_edges(3, &[(0, 1), (1, 2), (1, 0)]).unwrap();
        assert_eq!(girth(&SubgraphView::full(&multi)), Some(2));
    }

    #[test]
    fn weighted_ball_examples() {
        let path = Multigraph::from_edges(5, &[(0, 1), (1, 2), (2, 3), (3, 4)]).unwrap();
        let view = SubgraphView::full(&path);
        assert_eq!(weighted_ball(&view, 0, 2.0).unwrap(), vec![0, 1, 2]);
        assert_eq!(weighted_ball(&view, 3, 0.0).unwrap(), vec![3]);
        assert!(weighted_ball(&view, 0, -1.0).is_err());

        let g = Multigraph::from_weighted_edges(3, &[(0, 1, 0.5), (1, 2, 2.0)]).unwrap();
        assert_eq!(weighted_ball(&SubgraphView::full(&g), 0, 1.0).unwrap(), vec![0, 1]);
    }

    #[test]
    fn threshold_hides_heavy_edges() {
        let g = Multigraph::from_weighted_edges(3, &[(0, 1, 1.0), (1, 2, 3.0), (0, 2, 5.0)]).unwrap();
        let mut view = SubgraphView::full(&g);
        view.set_max_weight(Some(3.0));
        assert_eq!(view.edge_ids(), vec![0, 1]);
        assert!(!view.contains(2));
        assert_eq!(hop_distance(&view, 0, 2, 5, &[]).unwrap(), Some(2));
        view.set_max_weight(None);
        assert_eq!(hop_distance(&view, 0, 2, 5, &[]).unwrap(), Some(1));
    }

    #[test]
    fn shortest_path_is_lexicographically_smallest() {
        // 0 reaches 5 through 1 or 2 (then 3 or 4)
        let g = Multigraph::from_edges(
            6,
            &[(0, 2), (0, 1), (2, 3), (1, 4), (1, 3), (3, 5), (4, 5), (3, 5)],
        )
        .unwrap();
        let view = SubgraphView::full(&g);
        let p = shortest_path(&view, 0, 5, 10, &[]).unwrap().unwrap();
        assert_eq!(p.vertices(), &[0, 1, 3, 5]);
        assert_eq!(p.edges(), &[1, 4, 5]);
        assert!(shortest_path(&view, 0, 5, 2, &[]).unwrap().is_none());
    }

    #[test]
    fn w_half_examples() {
        let g = Multigraph::from_weighted_edges(4, &[(0, 1, 3.0), (1, 2, 1.0), (2, 3, 2.0)]).unwrap();
        let p = PathSeq::from_vertices(&g, &[0, 1, 2, 3]).unwrap();
        assert_eq!(p.w_half().unwrap(), 5.0);
        assert_eq!(p.weight(), 6.0);
        assert_eq!(p.max_weight(), 3.0);
        assert_eq!(p.min_weight(), 1.0);
        let single = PathSeq::from_vertices(&g, &[0, 1]).unwrap();
        assert_eq!(single.w_half().unwrap(), 3.0);
        assert!(PathSeq::from_vertices(&g, &[2]).unwrap().w_half().is_err());
        assert!(PathSeq::from_vertices(&g, &[0, 2]).is_err());
    }

    #[test]
    fn ball_profile_counts_layers() {
        let g = cycle(7);
        let sizes = ball_profile(&SubgraphView::full(&g), 0, 4).unwrap();
        assert_eq!(sizes, vec![1, 3, 5, 7, 7]);
    }
}
