//! Deterministic instance builders.
//!
//! Random graphs use `ChaCha8Rng::seed_from_u64(seed)`. Pairs `u < v` are
//! visited in lexicographic order; each draws one `u64` and keeps the edge
//! iff `(x >> 11) · 2⁻⁵³ < p`. Weighted graphs draw a second `u64` `y` per kept
//! edge and use `1 − (y >> 11) · 2⁻⁵³`, which lies in `(0, 1]`.

use std::fmt;
use std::str::FromStr;

use rand_chacha::ChaCha8Rng;
use rand_core::{RngCore, SeedableRng};
use serde::Serialize;

use crate::error::{invalid, Result, SpannerError};
use crate::graph::{girth, EdgeId, Multigraph, PathSeq, SubgraphView, UNREACHED};
use crate::greedy::PathCollection;

#[derive(Clone, Debug, PartialEq)]
pub struct InstanceBundle {
    pub graph: Multigraph,
    pub paths: Option<PathCollection>,
    pub matchings: Option<Vec<Vec<EdgeId>>>,
    pub family: String,
}

impl InstanceBundle {
    fn plain(graph: Multigraph, family: impl Into<String>) -> Self {
        Self {
            graph,
            paths: None,
            matchings: None,
            family: family.into(),
        }
    }
}

/// Id of the leaf `u_{i,j}` (`1 ≤ j < t`) in [`gen_big_clique`].
pub fn big_clique_leaf(t: usize, i: usize, j: usize) -> usize {
    t + i * (t - 1) + (j - 1)
}

/// A `t`-clique on `0..t` with `t − 1` pendant leaves per clique vertex, and
/// the 2-paths `(v_{(i+j) mod t}, v_i, u_{i,j})` in lexicographic `(i, j)` order.
pub fn gen_big_clique(t: usize) -> Result<InstanceBundle> {
    if t < 2 {
        return Err(invalid("big-clique needs t >= 2"));
    }
    let n = t * t;
    let mut g = Multigraph::new(n);
    for a in 0..t {
        for b in a + 1..t {
            g.add_edge(a, b)?;
        }
    }
    for i in 0..t {
        for j in 1..t {
            g.add_edge(i, big_clique_leaf(t, i, j))?;
        }
    }
    let mut paths = Vec::with_capacity(t * (t - 1));
    for i in 0..t {
        for j in 1..t {
            paths.push(PathSeq::from_vertices(&g, &[(i + j) % t, i, big_clique_leaf(t, i, j)])?);
        }
    }
    let coll = PathCollection::new(n, paths)?;
    Ok(InstanceBundle {
        graph: g,
        paths: Some(coll),
        matchings: None,
        family: format!("big-clique t={t}"),
    })
}

/// `Q_k` with edges listed dimension by dimension; matching `i` is the
/// set of edges flipping bit `i`.
pub fn gen_hypercube(k: usize) -> Result<InstanceBundle> {
    if !(1..=16).contains(&k) {
        return Err(invalid(format!("hypercube dimension must be in 1..=16, got {k}")));
    }
    let n = 1usize << k;
    let mut g = Multigraph::new(n);
    let mut matchings = Vec::with_capacity(k);
    for i in 0..k {
        let mut m = Vec::with_capacity(n / 2);
        for v in (0..n).filter(|v| v & (1 << i) == 0) {
            m.push(g.add_edge(v, v | (1 << i))?);
        }
        matchings.push(m);
    }
    Ok(InstanceBundle {
        graph: g,
        paths: None,
        matchings: Some(matchings),
        family: format!("hypercube k={k}"),
    })
}

fn is_connected(g: &Multigraph) -> bool {
    if g.n() == 0 {
        return true;
    }
    let view = SubgraphView::full(g);
    let dist = crate::graph::hop_distances_from(&view, 0, usize::MAX, &[]).expect("vertex 0 exists");
    dist.iter().all(|&d| d != UNREACHED)
}

/// Weight-1 copy of `base` plus a pendant leaf `x' = n + x` of weight `eps`
/// on every base vertex.
pub fn gen_weighted_lower_bound(base: &Multigraph, eps: f64, k: usize) -> Result<InstanceBundle> {
    if k == 0 {
        return Err(invalid("k must be at least 1"));
    }
    if !(eps > 0.0 && eps < 1.0) {
        return Err(invalid(format!("eps must lie in (0, 1), got {eps}")));
    }
    if base.edges().iter().any(|e| e.weight != 1.0) {
        return Err(invalid("base graph must have unit weights"));
    }
    if !is_connected(base) {
        return Err(invalid("base graph must be connected"));
    }
    let required = 2 * k - 1;
    let measured = girth(&SubgraphView::full(base));
    if let Some(gv) = measured {
        if gv <= required {
            return Err(SpannerError::GirthTooSmall {
                measured: gv.to_string(),
                required,
            });
        }
    }
    let n = base.n();
    let mut g = Multigraph::new_weighted(2 * n);
    for e in base.edges() {
        g.add_weighted_edge(e.u, e.v, 1.0)?;
    }
    for x in 0..n {
        g.add_weighted_edge(x, n + x, eps)?;
    }
    Ok(InstanceBundle::plain(g, format!("weighted-lb eps={eps} k={k}")))
}

/// Every base edge replaced by `f` parallel copies (consecutive ids), then a
/// pendant leaf `n + x` on every base vertex.
pub fn gen_eft_lower_bound(base: &Multigraph, f: usize) -> Result<InstanceBundle> {
    if f == 0 {
        return Err(invalid("f must be at least 1"));
    }
    if !base.is_simple() || base.is_weighted() {
        return Err(invalid("base graph must be simple and unweighted"));
    }
    let n = base.n();
    let mut g = Multigraph::new(2 * n);
    for e in base.edges() {
        for _ in 0..f {
            g.add_edge(e.u, e.v)?;
        }
    }
    for x in 0..n {
        g.add_edge(x, n + x)?;
    }
    Ok(InstanceBundle::plain(g, format!("eft-lb f={f}")))
}

fn unit_draw(rng: &mut ChaCha8Rng) -> f64 {
    (rng.next_u64() >> 11) as f64 * (1.0 / (1u64 << 53) as f64)
}

/// Seeded `G(n, p)`.
pub fn gen_random(n: usize, p: f64, seed: u64, weighted: bool) -> Result<InstanceBundle> {
    if !(0.0..=1.0).contains(&p) {
        return Err(invalid(format!("p must lie in [0, 1], got {p}")));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut g = if weighted { Multigraph::new_weighted(n) } else { Multigraph::new(n) };
    for u in 0..n {
        for v in u + 1..n {
            if unit_draw(&mut rng) < p {
                if weighted {
                    g.add_weighted_edge(u, v, 1.0 - unit_draw(&mut rng))?;
                } else {
                    g.add_edge(u, v)?;
                }
            }
        }
    }
    Ok(InstanceBundle::plain(g, format!("gnp n={n} p={p} seed={seed}")))
}

/// Small explicit graphs used as lower-bound bases.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum BaseGraph {
    Cycle(usize),
    Path(usize),
    K2,
    Petersen,
    Heawood,
}

impl BaseGraph {
    pub fn build(self) -> Multigraph {
        let (n, edges): (usize, Vec<(usize, usize)>) = match self {
            BaseGraph::Cycle(g) => (g, (0..g).map(|i| (i, (i + 1) % g)).collect()),
            BaseGraph::Path(n) => (n, (1..n).map(|i| (i - 1, i)).collect()),
            BaseGraph::K2 => (2, vec![(0, 1)]),
            BaseGraph::Petersen => {
                let mut e: Vec<_> = (0..5).map(|i| (i, (i + 1) % 5)).collect();
                e.extend((0..5).map(|i| (i, i + 5)));
                e.extend((0..5).map(|i| (5 + i, 5 + (i + 2) % 5)));
                (10, e)
            }
            BaseGraph::Heawood => {
                let mut e: Vec<_> = (0..14).map(|i| (i, (i + 1) % 14)).collect();
                e.extend((0..14).step_by(2).map(|i| (i, (i + 5) % 14)));
                (14, e)
            }
        };
        Multigraph::from_edges(n, &edges).expect("catalog graphs are valid")
    }
}

impl FromStr for BaseGraph {
    type Err = SpannerError;

    fn from_str(s: &str) -> Result<Self> {
        let (name, arg) = match s.split_once(':') {
            Some((a, b)) => (a, Some(b)),
            None => (s, None),
        };
        let size = |min: usize| -> Result<usize> {
            let raw = arg.ok_or_else(|| invalid(format!("{name} needs a size, e.g. {name}:{min}")))?;
            let v: usize = raw.parse().map_err(|_| invalid(format!("bad size {raw:?}")))?;
            if v < min || v > 1 << 16 {
                return Err(invalid(format!("{name} size must be in {min}..=65536, got {v}")));
            }
            Ok(v)
        };
        let base = match name {
            "cycle" => BaseGraph::Cycle(size(3)?),
            "path" => BaseGraph::Path(size(1)?),
            "k2" | "K2" => BaseGraph::K2,
            "petersen" => BaseGraph::Petersen,
            "heawood" => BaseGraph::Heawood,
            _ => return Err(invalid(format!("unknown base graph {s:?}"))),
        };
        if arg.is_some() && matches!(base, BaseGraph::K2 | BaseGraph::Petersen | BaseGraph::Heawood) {
            return Err(invalid(format!("{name} takes no size")));
        }
        Ok(base)
    }
}

impl fmt::Display for BaseGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BaseGraph::Cycle(g) => write!(f, "cycle:{g}"),
            BaseGraph::Path(n) => write!(f, "path:{n}"),
            BaseGraph::K2 => f.write_str("k2"),
            BaseGraph::Petersen => f.write_str("petersen"),
            BaseGraph::Heawood => f.write_str("heawood"),
        }
    }
}
