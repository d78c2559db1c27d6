//! Shared test helpers: the naive enumeration oracle and seeded random
//! graphs. The oracle is deliberately independent of the production solver:
//! it walks edges in canonical index order, checks properness on assignment,
//! checks the interval condition only when a vertex saturates, and validates
//! surjectivity plus full intervalness at every leaf. No windows, no BFS
//! ordering, no global pruning.

// Not every test binary uses every helper.
#![allow(dead_code)]

use std::sync::Arc;

use interval_coloring::graph::Graph;
use rand::Rng;

/// Exhaustive decision for one t by plain recursive enumeration.
pub fn naive_exists(g: &Graph, t: u32) -> bool {
    let m = g.edge_count();
    if m == 0 {
        return false;
    }
    let mut colors = vec![0u32; m];
    let mut remaining: Vec<usize> = (0..g.vertex_count()).map(|v| g.degree(v)).collect();
    enumerate(g, t, 0, &mut colors, &mut remaining)
}

fn enumerate(
    g: &Graph,
    t: u32,
    edge: usize,
    colors: &mut Vec<u32>,
    remaining: &mut Vec<usize>,
) -> bool {
    if edge == g.edge_count() {
        return leaf_is_interval(g, t, colors);
    }
    let (u, v) = g.endpoints(edge);
    'colors: for c in 1..=t {
        for w in [u, v] {
            for &e in g.incident_edges(w) {
                if colors[e] == c {
                    continue 'colors;
                }
            }
        }
        colors[edge] = c;
        remaining[u] -= 1;
        remaining[v] -= 1;
        let sat_ok = (remaining[u] > 0 || vertex_is_interval(g, u, colors))
            && (remaining[v] > 0 || vertex_is_interval(g, v, colors));
        if sat_ok && enumerate(g, t, edge + 1, colors, remaining) {
            return true;
        }
        colors[edge] = 0;
        remaining[u] += 1;
        remaining[v] += 1;
    }
    false
}

fn vertex_is_interval(g: &Graph, v: usize, colors: &[u32]) -> bool {
    let mut incident: Vec<u32> = g
        .incident_edges(v)
        .iter()
        .map(|&e| colors[e])
        .filter(|&c| c > 0)
        .collect();
    incident.sort_unstable();
    incident.windows(2).all(|w| w[1] == w[0] + 1)
}

fn leaf_is_interval(g: &Graph, t: u32, colors: &[u32]) -> bool {
    let mut used = vec![false; t as usize + 1];
    for &c in colors.iter() {
        used[c as usize] = true;
    }
    if !used[1..].iter().all(|&u| u) {
        return false;
    }
    (0..g.vertex_count()).all(|v| vertex_is_interval(g, v, colors))
}

/// (w, W) by scanning Δ..=|E| in both directions; `None` when no t admits a
/// coloring. The ceiling |E| is forced by "all colors used".
pub fn naive_w_range(g: &Graph) -> (Option<u32>, Option<u32>) {
    let delta = g.max_degree() as u32;
    let hi = g.edge_count() as u32;
    let w = (delta..=hi).find(|&t| naive_exists(g, t));
    let w_max = (delta..=hi).rev().find(|&t| naive_exists(g, t));
    (w, w_max)
}

/// Random connected graph: a random spanning tree plus random extra edges,
/// at most `max_edges` total.
pub fn random_connected_graph(rng: &mut impl Rng, max_edges: usize) -> Arc<Graph> {
    let n = rng.gen_range(4..=8);
    let mut edges: Vec<(usize, usize)> = Vec::new();
    for v in 1..n {
        edges.push((rng.gen_range(0..v), v));
    }
    let cap = max_edges.min(n * (n - 1) / 2);
    let mut guard = 0;
    while edges.len() < cap && guard < 200 {
        guard += 1;
        let u = rng.gen_range(0..n);
        let v = rng.gen_range(0..n);
        if u != v && !edges.contains(&(u.min(v), u.max(v))) && !edges.contains(&(u, v)) {
            edges.push((u.min(v), u.max(v)));
            // Sometimes stop early so sparser graphs appear too.
            if rng.gen_bool(0.15) {
                break;
            }
        }
    }
    Arc::new(Graph::new(n, edges).expect("generated graph is simple"))
}
