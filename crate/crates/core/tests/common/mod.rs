//! Reference implementations used as oracles by the integration tests. They
//! share no code with the library beyond reading edge lists.
#![allow(dead_code)]

use spanner_core::Multigraph;

pub const INF: usize = usize::MAX;

/// All-pairs hop distances over the chosen edge ids (Floyd–Warshall).
pub fn hop_apsp(g: &Multigraph, edges: &[usize]) -> Vec<Vec<usize>> {
    let n = g.n();
    let mut d = vec![vec![INF; n]; n];
    for (i, row) in d.iter_mut().enumerate() {
        row[i] = 0;
    }
    for &e in edges {
        let edge = g.edge(e);
        if edge.u != edge.v {
            d[edge.u][edge.v] = 1;
            d[edge.v][edge.u] = 1;
        }
    }
    for m in 0..n {
        for a in 0..n {
            if d[a][m] == INF {
                continue;
            }
            for b in 0..n {
                if d[m][b] != INF && d[a][m] + d[m][b] < d[a][b] {
                    d[a][b] = d[a][m] + d[m][b];
                }
            }
        }
    }
    d
}

/// All-pairs weighted distances over the chosen edge ids.
pub fn weighted_apsp(g: &Multigraph, edges: &[usize]) -> Vec<Vec<f64>> {
    let n = g.n();
    let mut d = vec![vec![f64::INFINITY; n]; n];
    for (i, row) in d.iter_mut().enumerate() {
        row[i] = 0.0;
    }
    for &e in edges {
        let edge = g.edge(e);
        let w = d[edge.u][edge.v].min(edge.weight);
        d[edge.u][edge.v] = w;
        d[edge.v][edge.u] = w;
    }
    for m in 0..n {
        for a in 0..n {
            for b in 0..n {
                let via = d[a][m] + d[m][b];
                if via < d[a][b] {
                    d[a][b] = via;
                }
            }
        }
    }
    d
}

pub fn all_edges(g: &Multigraph) -> Vec<usize> {
    (0..g.edge_count()).collect()
}

/// Hop distance from `x` to `y` avoiding `dead` edge ids, by plain BFS.
pub fn hop_avoiding(g: &Multigraph, edges: &[usize], dead: &[usize], x: usize, y: usize) -> usize {
    let kept: Vec<usize> = edges.iter().copied().filter(|e| !dead.contains(e)).collect();
    hop_apsp(g, &kept)[x][y]
}

/// Shortest cycle length through exhaustive removal of each edge: the cycle
/// through `e = uv` has length `1 + dist(u, v)` in `G − e`.
pub fn girth_by_removal(g: &Multigraph, edges: &[usize]) -> usize {
    let mut best = INF;
    for (i, &e) in edges.iter().enumerate() {
        let rest: Vec<usize> = edges.iter().enumerate().filter(|&(j, _)| j != i).map(|(_, &x)| x).collect();
        let edge = g.edge(e);
        let d = hop_apsp(g, &rest)[edge.u][edge.v];
        if d != INF {
            best = best.min(d + 1);
        }
    }
    best
}

/// Every 2-path `(x, m, y)` of `g` as pairs of edge ids with `x != y`.
pub fn two_paths(g: &Multigraph) -> Vec<(usize, usize, usize, usize, usize)> {
    let mut out = Vec::new();
    for (e1, a) in g.edges().iter().enumerate() {
        for (e2, b) in g.edges().iter().enumerate().skip(e1 + 1) {
            for m in [a.u, a.v] {
                if m == b.u || m == b.v {
                    let (x, y) = (a.other(m), b.other(m));
                    if x != y {
                        out.push((x, m, y, e1, e2));
                    }
                }
            }
        }
    }
    out
}
