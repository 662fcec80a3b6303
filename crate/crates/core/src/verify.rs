//! Brute-force verification. Everything here rebuilds its own adjacency and
//! runs full, untruncated searches, sharing no code with the constructions.

use std::cmp::Reverse;
use std::collections::{BinaryHeap, VecDeque};

use rand_chacha::ChaCha8Rng;
use rand_core::{RngCore, SeedableRng};
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{invalid, Result, SpannerError};
use crate::graph::{EdgeId, Multigraph, VertexId};

/// Default cap on (fault set × pair) checks.
pub const DEFAULT_VERIFY_BUDGET: u64 = 50_000_000;

/// Relative slack on weighted comparisons, absorbing float summation order.
pub const WEIGHT_RTOL: f64 = 1e-9;

const INF: usize = usize::MAX;
const CHUNK: usize = 2048;

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Counterexample {
    pub x: VertexId,
    pub y: VertexId,
    pub faults: Vec<EdgeId>,
    pub g_dist: usize,
    /// `None` when `y` is unreachable from `x` in `H − F`.
    pub h_dist: Option<usize>,
    pub bound: usize,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct VerificationReport {
    pub pass: bool,
    pub counterexample: Option<Counterexample>,
    pub pairs_checked: u64,
    pub fault_sets: u64,
    pub edges: usize,
}

/// Adjacency lists `(neighbour, edge id)` over a chosen edge subset.
struct Oracle {
    adj: Vec<Vec<(usize, usize)>>,
}

impl Oracle {
    fn new(g: &Multigraph, edges: impl IntoIterator<Item = EdgeId>) -> Self {
        let mut adj = vec![Vec::new(); g.n()];
        for e in edges {
            let edge = g.edge(e);
            adj[edge.u].push((edge.v, e));
            adj[edge.v].push((edge.u, e));
        }
        Self { adj }
    }

    fn bfs(&self, src: usize, dead: &[bool]) -> Vec<usize> {
        let mut dist = vec![INF; self.adj.len()];
        dist[src] = 0;
        let mut queue = VecDeque::from([src]);
        while let Some(a) = queue.pop_front() {
            for &(b, e) in &self.adj[a] {
                if dist[b] == INF && !dead[e] {
                    dist[b] = dist[a] + 1;
                    queue.push_back(b);
                }
            }
        }
        dist
    }

    fn dijkstra(&self, g: &Multigraph, src: usize) -> Vec<f64> {
        let mut dist = vec![f64::INFINITY; self.adj.len()];
        dist[src] = 0.0;
        let mut heap = BinaryHeap::from([Reverse((OrdF64(0.0), src))]);
        while let Some(Reverse((OrdF64(d), a))) = heap.pop() {
            if d > dist[a] {
                continue;
            }
            for &(b, e) in &self.adj[a] {
                let nd = d + g.weight(e);
                if nd < dist[b] {
                    dist[b] = nd;
                    heap.push(Reverse((OrdF64(nd), b)));
                }
            }
        }
        dist
    }
}

#[derive(Clone, Copy, PartialEq)]
struct OrdF64(f64);

impl Eq for OrdF64 {}

impl PartialOrd for OrdF64 {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for OrdF64 {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.0.total_cmp(&other.0)
    }
}

fn check_subgraph(g: &Multigraph, h: &[EdgeId]) -> Result<()> {
    let mut seen = vec![false; g.edge_count()];
    for &e in h {
        if e >= g.edge_count() || seen[e] {
            return Err(SpannerError::NotSubgraph(e));
        }
        seen[e] = true;
    }
    Ok(())
}

fn binomial(m: u64, j: u64) -> u64 {
    let mut acc: u128 = 1;
    for i in 0..j {
        acc = acc * (m - i) as u128 / (i + 1) as u128;
        if acc > u64::MAX as u128 {
            return u64::MAX;
        }
    }
    acc as u64
}

/// Number of fault sets of size at most `f` over `m` edges.
pub fn fault_set_count(m: usize, f: usize) -> u64 {
    (0..=f.min(m) as u64).fold(0u64, |acc, j| acc.saturating_add(binomial(m as u64, j)))
}

/// Fault sets of size `0..=f`, by size then lexicographically.
struct FaultSets {
    m: usize,
    f: usize,
    current: Option<Vec<usize>>,
}

impl FaultSets {
    fn new(m: usize, f: usize) -> Self {
        Self {
            m,
            f: f.min(m),
            current: Some(Vec::new()),
        }
    }
}

impl Iterator for FaultSets {
    type Item = Vec<usize>;

    fn next(&mut self) -> Option<Vec<usize>> {
        let out = self.current.clone()?;
        let mut c = out.clone();
        let s = c.len();
        // advance to the next combination of the same size, else grow
        let mut i = s;
        let advanced = loop {
            if i == 0 {
                break false;
            }
            i -= 1;
            if c[i] < self.m - s + i {
                c[i] += 1;
                for j in i + 1..s {
                    c[j] = c[j - 1] + 1;
                }
                break true;
            }
        };
        self.current = if advanced {
            Some(c)
        } else if s < self.f {
            Some((0..s + 1).collect())
        } else {
            None
        };
        Some(out)
    }
}

/// Which pairs a check looks at and what each must satisfy.
#[derive(Clone, Copy)]
enum Contract {
    /// pairs at `G − F` distance exactly `d` need `H − F` distance `≤ r`
    Exact { d: usize, r: usize },
    /// every connected pair needs `dist_H ≤ alpha · dist_G + beta`
    Affine { alpha: usize, beta: usize },
}

impl Contract {
    fn bound(self, g_dist: usize) -> Option<usize> {
        match self {
            Contract::Exact { d, r } => (g_dist == d).then_some(r),
            Contract::Affine { alpha, beta } => (g_dist != 0 && g_dist != INF).then(|| alpha * g_dist + beta),
        }
    }
}

fn check_fault_set(g: &Multigraph, og: &Oracle, oh: &Oracle, faults: &[usize], contract: Contract) -> Option<Counterexample> {
    let mut dead = vec![false; g.edge_count()];
    for &e in faults {
        dead[e] = true;
    }
    for x in 0..g.n() {
        let dg = og.bfs(x, &dead);
        let mut dh: Option<Vec<usize>> = None;
        for y in x + 1..g.n() {
            let Some(bound) = contract.bound(dg[y]) else {
                continue;
            };
            let dh = dh.get_or_insert_with(|| oh.bfs(x, &dead));
            if dh[y] == INF || dh[y] > bound {
                return Some(Counterexample {
                    x,
                    y,
                    faults: faults.to_vec(),
                    g_dist: dg[y],
                    h_dist: (dh[y] != INF).then_some(dh[y]),
                    bound,
                });
            }
        }
    }
    None
}

fn run(g: &Multigraph, h: &[EdgeId], f: usize, contract: Contract, budget: u64) -> Result<VerificationReport> {
    check_subgraph(g, h)?;
    let n = g.n() as u64;
    let pairs = n * n.saturating_sub(1) / 2;
    let sets = fault_set_count(g.edge_count(), f);
    let required = sets.saturating_mul(pairs.max(1));
    if required > budget {
        return Err(SpannerError::BudgetExceeded { required, budget });
    }
    let og = Oracle::new(g, 0..g.edge_count());
    let oh = Oracle::new(g, h.iter().copied());
    let mut all = FaultSets::new(g.edge_count(), f);
    let mut checked = 0u64;
    loop {
        let chunk: Vec<Vec<usize>> = all.by_ref().take(CHUNK).collect();
        if chunk.is_empty() {
            break;
        }
        let hit = chunk
            .par_iter()
            .enumerate()
            .find_map_first(|(i, fs)| check_fault_set(g, &og, &oh, fs, contract).map(|c| (i, c)));
        if let Some((i, c)) = hit {
            checked += i as u64 + 1;
            return Ok(VerificationReport {
                pass: false,
                counterexample: Some(c),
                pairs_checked: checked * pairs,
                fault_sets: checked,
                edges: h.len(),
            });
        }
        checked += chunk.len() as u64;
    }
    Ok(VerificationReport {
        pass: true,
        counterexample: None,
        pairs_checked: checked * pairs,
        fault_sets: checked,
        edges: h.len(),
    })
}

/// Every pair at `G`-distance exactly `d` is within `r` in `H`.
pub fn verify_dr(g: &Multigraph, h: &[EdgeId], d: usize, r: usize) -> Result<VerificationReport> {
    verify_eft_with_budget(g, h, d, r, 0, DEFAULT_VERIFY_BUDGET)
}

/// The `d → r` contract under every fault set of at most `f` edges.
pub fn verify_eft(g: &Multigraph, h: &[EdgeId], d: usize, r: usize, f: usize) -> Result<VerificationReport> {
    verify_eft_with_budget(g, h, d, r, f, DEFAULT_VERIFY_BUDGET)
}

pub fn verify_eft_with_budget(
    g: &Multigraph,
    h: &[EdgeId],
    d: usize,
    r: usize,
    f: usize,
    budget: u64,
) -> Result<VerificationReport> {
    if d == 0 || r < d {
        return Err(invalid(format!("need 1 <= d <= r, got d = {d}, r = {r}")));
    }
    run(g, h, f, Contract::Exact { d, r }, budget)
}

/// `dist_{H−F} ≤ alpha · dist_{G−F} + beta` for all pairs and all `|F| ≤ f`.
pub fn verify_alpha_beta(g: &Multigraph, h: &[EdgeId], alpha: usize, beta: usize, f: usize) -> Result<VerificationReport> {
    verify_alpha_beta_with_budget(g, h, alpha, beta, f, DEFAULT_VERIFY_BUDGET)
}

pub fn verify_alpha_beta_with_budget(
    g: &Multigraph,
    h: &[EdgeId],
    alpha: usize,
    beta: usize,
    f: usize,
    budget: u64,
) -> Result<VerificationReport> {
    run(g, h, f, Contract::Affine { alpha, beta }, budget)
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct SizeReport {
    pub edges: usize,
    pub n: usize,
    /// `edges / n^{1+1/k}`; `k = None` means the `1/k = 0` limit.
    pub ratio: f64,
}

pub fn size_report(edges: usize, n: usize, k: Option<u32>) -> SizeReport {
    let exponent = 1.0 + k.map_or(0.0, |k| 1.0 / k as f64);
    let ratio = if edges == 0 || n == 0 {
        0.0
    } else {
        edges as f64 / (n as f64).powf(exponent)
    };
    SizeReport { edges, n, ratio }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct WeightedReport {
    pub pass: bool,
    /// Largest `dist_H(x,y) / (w(P) + (2k−2) w_half(P))` seen.
    pub worst_ratio: f64,
    pub worst_path: Option<Vec<VertexId>>,
    pub paths_checked: u64,
}

/// Sum of the `⌈ℓ/2⌉` largest weights, computed independently of `PathSeq`.
fn top_half(mut weights: Vec<f64>) -> f64 {
    weights.sort_by(|a, b| b.total_cmp(a));
    weights[..weights.len().div_ceil(2)].iter().sum()
}

/// Checks `dist_H(x,y) ≤ w(P) + (2k−2)·w_half(P)` on every 1- and 2-path of
/// `g` and on `sample` random simple paths with 3 to `max_hops` edges
/// (spread round-robin over the lengths, drawn with `seed`).
pub fn verify_weighted_bound(
    g: &Multigraph,
    h: &[EdgeId],
    k: usize,
    max_hops: usize,
    sample: usize,
    seed: u64,
) -> Result<WeightedReport> {
    check_subgraph(g, h)?;
    if k == 0 {
        return Err(invalid("k must be at least 1"));
    }
    let oh = Oracle::new(g, h.iter().copied());
    let dist: Vec<Vec<f64>> = (0..g.n()).into_par_iter().map(|x| oh.dijkstra(g, x)).collect();
    let stretch = (2 * k - 2) as f64;
    let mut report = WeightedReport {
        pass: true,
        worst_ratio: 0.0,
        worst_path: None,
        paths_checked: 0,
    };
    let mut consider = |verts: &[VertexId], weights: Vec<f64>| {
        let total: f64 = weights.iter().sum();
        let bound = total + stretch * top_half(weights);
        let ratio = dist[verts[0]][*verts.last().unwrap()] / bound;
        report.paths_checked += 1;
        if ratio > report.worst_ratio || report.worst_path.is_none() {
            report.worst_ratio = ratio;
            report.worst_path = Some(verts.to_vec());
        }
    };
    let adj: Vec<Vec<(usize, usize)>> = {
        let full = Oracle::new(g, 0..g.edge_count());
        full.adj
    };
    for (e, edge) in g.edges().iter().enumerate() {
        consider(&[edge.u, edge.v], vec![g.weight(e)]);
    }
    for (m, around) in adj.iter().enumerate() {
        for &(x, e1) in around {
            for &(y, e2) in around {
                if x < y {
                    consider(&[x, m, y], vec![g.weight(e1), g.weight(e2)]);
                }
            }
        }
    }
    if max_hops >= 3 && g.n() > 0 {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let lengths = max_hops - 2;
        for s in 0..sample {
            let want = 3 + s % lengths;
            // a few restarts per sample; dead ends are common in sparse graphs
            for _ in 0..32 {
                if let Some((verts, weights)) = random_simple_path(g, &adj, want, &mut rng) {
                    consider(&verts, weights);
                    break;
                }
            }
        }
    }
    report.pass = report.worst_ratio <= 1.0 + WEIGHT_RTOL;
    Ok(report)
}

fn random_simple_path(
    g: &Multigraph,
    adj: &[Vec<(usize, usize)>],
    hops: usize,
    rng: &mut ChaCha8Rng,
) -> Option<(Vec<VertexId>, Vec<f64>)> {
    let start = (rng.next_u64() % g.n() as u64) as usize;
    let mut verts = vec![start];
    let mut weights = Vec::with_capacity(hops);
    while weights.len() < hops {
        let cur = *verts.last().unwrap();
        let options: Vec<&(usize, usize)> = adj[cur].iter().filter(|(w, _)| !verts.contains(w)).collect();
        if options.is_empty() {
            return None;
        }
        let &(next, e) = options[(rng.next_u64() % options.len() as u64) as usize];
        verts.push(next);
        weights.push(g.weight(e));
    }
    Some((verts, weights))
}
