//! Exact backtracking search for interval t-colorings.
//!
//! The solver assigns colors edge by edge. The interval condition is exactly
//! a per-vertex window constraint: the colors already placed at a vertex of
//! degree d must be distinct and extendable to d consecutive colors inside
//! [1, t]. Pruning on that window is sound (it is a necessary condition for
//! any completion), so `Exhausted` means a complete proof of nonexistence.
//! `BudgetExceeded` is always reported as inconclusive, never as absence.
//!
//! Colors are tried lowest-first and the edge order is deterministic, so
//! reported colorings are reproducible.

use std::collections::BTreeMap;
use std::sync::Arc;
use std::time::{Duration, Instant};

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::verify::{verify_interval, EdgeColoring};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EdgeOrder {
    /// Breadth-first from a maximum-degree vertex, so each new edge touches
    /// an already-constrained vertex as early as possible.
    BfsFromMaxDegree,
    /// Canonical (lexicographic) edge order.
    Canonical,
}

#[derive(Debug, Clone)]
pub struct SearchConfig {
    /// Ceiling for t-scans; `None` uses the diameter-based bound
    /// (bipartite: diam(G)(Δ-1)+1, otherwise (diam(G)+1)(Δ-1)+1), and the
    /// edge count when the graph is disconnected.
    pub max_t: Option<u32>,
    pub edge_order: EdgeOrder,
    /// Node budget per `exists_interval_t` call; a node is one edge-color
    /// assignment made during the search.
    pub node_budget: u64,
    pub time_budget: Option<Duration>,
    /// Prune on per-vertex color windows. Disabling only grows the tree.
    pub window_prune: bool,
    /// Prune when fewer uncolored edges remain than unused colors.
    pub surjectivity_prune: bool,
    /// Restrict the first edge to colors <= (t+1)/2; sound because
    /// c -> t+1-c maps interval t-colorings to interval t-colorings.
    pub mirror_prune: bool,
}

impl Default for SearchConfig {
    fn default() -> Self {
        SearchConfig {
            max_t: None,
            edge_order: EdgeOrder::BfsFromMaxDegree,
            node_budget: 100_000_000,
            time_budget: None,
            window_prune: true,
            surjectivity_prune: true,
            mirror_prune: true,
        }
    }
}

#[derive(Debug, Clone)]
pub enum SearchStatus {
    /// A valid interval t-coloring, re-verified before being returned.
    Found(EdgeColoring),
    /// Complete search: no interval t-coloring exists.
    Exhausted,
    /// Inconclusive: a budget ran out first.
    BudgetExceeded,
}

#[derive(Debug, Clone)]
pub struct SearchOutcome {
    pub status: SearchStatus,
    pub nodes_explored: u64,
}

impl SearchOutcome {
    pub fn found(&self) -> Option<&EdgeColoring> {
        match &self.status {
            SearchStatus::Found(c) => Some(c),
            _ => None,
        }
    }

    pub fn is_exhausted(&self) -> bool {
        matches!(self.status, SearchStatus::Exhausted)
    }
}

/// Default scan ceiling for t. Interval-colorable connected graphs satisfy
/// W(G) <= diam(G)(Δ-1)+1 when bipartite and (diam(G)+1)(Δ-1)+1 otherwise;
/// any interval t-coloring also needs t <= |E| since all colors are used.
pub fn default_max_t(g: &Graph) -> Result<u32> {
    if g.edge_count() == 0 {
        return Err(Error::EmptyGraph);
    }
    let delta = g.max_degree() as u32;
    if !g.is_connected() {
        return Ok(g.edge_count() as u32);
    }
    let diam = g.diameter()? as u32;
    let bound = if g.is_bipartite() {
        diam * (delta - 1) + 1
    } else {
        (diam + 1) * (delta - 1) + 1
    };
    Ok(bound)
}

/// Decides whether `g` has an interval t-coloring, within budgets.
pub fn exists_interval_t(g: &Arc<Graph>, t: u32, cfg: &SearchConfig) -> Result<SearchOutcome> {
    if g.edge_count() == 0 {
        return Err(Error::EmptyGraph);
    }
    if t == 0 || t < g.max_degree() as u32 || t as usize > g.edge_count() {
        // A max-degree vertex needs Δ distinct colors, and t colors cannot
        // all be used with fewer than t edges.
        return Ok(SearchOutcome {
            status: SearchStatus::Exhausted,
            nodes_explored: 0,
        });
    }

    let mut solver = Solver::new(g, t, cfg);
    let status = match solver.dfs(0) {
        Err(Halt) => SearchStatus::BudgetExceeded,
        Ok(false) => SearchStatus::Exhausted,
        Ok(true) => {
            let colors: Vec<u32> = solver.assignment.clone();
            let coloring = EdgeColoring::new(g.clone(), colors)?;
            let report = verify_interval(&coloring, t);
            assert!(
                report.is_valid(),
                "solver returned a coloring rejected by the verifier"
            );
            SearchStatus::Found(coloring)
        }
    };
    Ok(SearchOutcome {
        status,
        nodes_explored: solver.nodes,
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ValueOutcome {
    /// The extreme t together with a witness coloring.
    Value(u32),
    /// Conclusively not interval colorable within the scanned range.
    NotColorable,
    /// The scan hit a budget at `undecided_t` before reaching a conclusion.
    Inconclusive { undecided_t: u32 },
}

#[derive(Debug, Clone)]
pub struct ValueSearch {
    pub outcome: ValueOutcome,
    pub witness: Option<EdgeColoring>,
    pub nodes_explored: u64,
}

/// Least t admitting an interval t-coloring (w), scanning upward from Δ.
pub fn compute_w_min(g: &Arc<Graph>, cfg: &SearchConfig) -> Result<ValueSearch> {
    scan(g, cfg, false)
}

/// Greatest t admitting an interval t-coloring (W), scanning downward from
/// the configured ceiling.
pub fn compute_w_max(g: &Arc<Graph>, cfg: &SearchConfig) -> Result<ValueSearch> {
    scan(g, cfg, true)
}

fn scan(g: &Arc<Graph>, cfg: &SearchConfig, downward: bool) -> Result<ValueSearch> {
    let delta = g.max_degree() as u32;
    let hi = match cfg.max_t {
        Some(t) if t < delta => {
            return Err(Error::invalid_parameter(
                "max_t",
                format!("{t} is below the maximum degree {delta}"),
            ))
        }
        Some(t) => t,
        None => default_max_t(g)?,
    };
    let mut nodes = 0;
    let range: Vec<u32> = if downward {
        (delta..=hi).rev().collect()
    } else {
        (delta..=hi).collect()
    };
    for t in range {
        let outcome = exists_interval_t(g, t, cfg)?;
        nodes += outcome.nodes_explored;
        match outcome.status {
            SearchStatus::Found(coloring) => {
                return Ok(ValueSearch {
                    outcome: ValueOutcome::Value(t),
                    witness: Some(coloring),
                    nodes_explored: nodes,
                })
            }
            SearchStatus::Exhausted => continue,
            SearchStatus::BudgetExceeded => {
                return Ok(ValueSearch {
                    outcome: ValueOutcome::Inconclusive { undecided_t: t },
                    witness: None,
                    nodes_explored: nodes,
                })
            }
        }
    }
    Ok(ValueSearch {
        outcome: ValueOutcome::NotColorable,
        witness: None,
        nodes_explored: nodes,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Decision {
    Exists,
    NotExists,
    Inconclusive,
}

#[derive(Debug, Clone)]
pub struct ProfileResult {
    pub decisions: BTreeMap<u32, Decision>,
    pub nodes_explored: u64,
}

/// Per-t existence decisions over an inclusive range.
pub fn spectrum_profile(
    g: &Arc<Graph>,
    t_lo: u32,
    t_hi: u32,
    cfg: &SearchConfig,
) -> Result<ProfileResult> {
    let mut decisions = BTreeMap::new();
    let mut nodes = 0;
    for t in t_lo..=t_hi {
        let outcome = exists_interval_t(g, t, cfg)?;
        nodes += outcome.nodes_explored;
        let decision = match outcome.status {
            SearchStatus::Found(_) => Decision::Exists,
            SearchStatus::Exhausted => Decision::NotExists,
            SearchStatus::BudgetExceeded => Decision::Inconclusive,
        };
        decisions.insert(t, decision);
    }
    Ok(ProfileResult {
        decisions,
        nodes_explored: nodes,
    })
}

struct Halt;

struct Solver<'a> {
    graph: &'a Graph,
    t: u32,
    order: Vec<usize>,
    deg: Vec<u32>,
    vmin: Vec<u32>,
    vmax: Vec<u32>,
    vmask: Vec<u128>,
    color_count: Vec<u32>,
    distinct_used: u32,
    assignment: Vec<u32>,
    nodes: u64,
    budget: u64,
    deadline: Option<Instant>,
    window_prune: bool,
    surjectivity_prune: bool,
    mirror_prune: bool,
}

impl<'a> Solver<'a> {
    fn new(graph: &'a Arc<Graph>, t: u32, cfg: &SearchConfig) -> Self {
        let n = graph.vertex_count();
        Solver {
            graph,
            t,
            order: edge_order(graph, cfg.edge_order),
            deg: (0..n).map(|v| graph.degree(v) as u32).collect(),
            vmin: vec![u32::MAX; n],
            vmax: vec![0; n],
            vmask: vec![0; n],
            color_count: vec![0; t as usize + 1],
            distinct_used: 0,
            assignment: vec![0; graph.edge_count()],
            nodes: 0,
            budget: cfg.node_budget,
            deadline: cfg.time_budget.map(|d| Instant::now() + d),
            window_prune: cfg.window_prune,
            surjectivity_prune: cfg.surjectivity_prune,
            mirror_prune: cfg.mirror_prune,
        }
    }

    /// Necessary condition for any completion at vertex `v` after adding
    /// color `c`: colors distinct, and some block of `deg` consecutive
    /// colors inside [1, t] still covers them all.
    fn endpoint_ok(&self, v: usize, c: u32) -> bool {
        if self.vmask[v] >> (c - 1) & 1 != 0 {
            return false;
        }
        if !self.window_prune {
            return true;
        }
        let d = self.deg[v];
        let lo = self.vmin[v].min(c);
        let hi = self.vmax[v].max(c);
        if hi - lo + 1 > d {
            return false;
        }
        let earliest = hi.saturating_sub(d - 1).max(1);
        let latest = lo.min(self.t + 1 - d);
        earliest <= latest
    }

    fn dfs(&mut self, pos: usize) -> std::result::Result<bool, Halt> {
        if pos == self.order.len() {
            return Ok(self.leaf_valid());
        }
        let edge = self.order[pos];
        let (u, v) = self.graph.endpoints(edge);
        let first_limit = if self.mirror_prune && pos == 0 {
            self.t.div_ceil(2)
        } else {
            self.t
        };
        for c in 1..=first_limit {
            if !self.endpoint_ok(u, c) || !self.endpoint_ok(v, c) {
                continue;
            }
            self.nodes += 1;
            if self.nodes >= self.budget {
                return Err(Halt);
            }
            if self.nodes.is_multiple_of(4096) {
                if let Some(deadline) = self.deadline {
                    if Instant::now() >= deadline {
                        return Err(Halt);
                    }
                }
            }
            let saved = self.assign(edge, u, v, c);
            let feasible = !self.surjectivity_prune
                || (self.order.len() - pos - 1) as u64 >= (self.t - self.distinct_used) as u64;
            if feasible && self.dfs(pos + 1)? {
                return Ok(true);
            }
            self.unassign(edge, u, v, c, saved);
        }
        Ok(false)
    }

    /// Leaf check run even with pruning disabled: every color used and every
    /// vertex spectrum a full interval.
    fn leaf_valid(&self) -> bool {
        if self.distinct_used != self.t {
            return false;
        }
        (0..self.graph.vertex_count())
            .all(|v| self.deg[v] == 0 || self.vmax[v] - self.vmin[v] + 1 == self.deg[v])
    }

    fn assign(&mut self, edge: usize, u: usize, v: usize, c: u32) -> [u32; 4] {
        let saved = [self.vmin[u], self.vmax[u], self.vmin[v], self.vmax[v]];
        for w in [u, v] {
            self.vmask[w] |= 1u128 << (c - 1);
            self.vmin[w] = self.vmin[w].min(c);
            self.vmax[w] = self.vmax[w].max(c);
        }
        self.color_count[c as usize] += 1;
        if self.color_count[c as usize] == 1 {
            self.distinct_used += 1;
        }
        self.assignment[edge] = c;
        saved
    }

    fn unassign(&mut self, edge: usize, u: usize, v: usize, c: u32, saved: [u32; 4]) {
        for w in [u, v] {
            self.vmask[w] &= !(1u128 << (c - 1));
        }
        self.vmin[u] = saved[0];
        self.vmax[u] = saved[1];
        self.vmin[v] = saved[2];
        self.vmax[v] = saved[3];
        self.color_count[c as usize] -= 1;
        if self.color_count[c as usize] == 0 {
            self.distinct_used -= 1;
        }
        self.assignment[edge] = 0;
    }
}

fn edge_order(g: &Graph, strategy: EdgeOrder) -> Vec<usize> {
    match strategy {
        EdgeOrder::Canonical => (0..g.edge_count()).collect(),
        EdgeOrder::BfsFromMaxDegree => {
            let n = g.vertex_count();
            let mut rank = vec![usize::MAX; n];
            let mut next_rank = 0;
            let mut queue = std::collections::VecDeque::new();
            // Start each component from its maximum-degree vertex.
            loop {
                let start = (0..n)
                    .filter(|&v| rank[v] == usize::MAX)
                    .max_by_key(|&v| (g.degree(v), std::cmp::Reverse(v)));
                let Some(start) = start else { break };
                rank[start] = next_rank;
                next_rank += 1;
                queue.push_back(start);
                while let Some(u) = queue.pop_front() {
                    for &w in g.neighbors(u) {
                        if rank[w] == usize::MAX {
                            rank[w] = next_rank;
                            next_rank += 1;
                            queue.push_back(w);
                        }
                    }
                }
            }
            let mut order: Vec<usize> = (0..g.edge_count()).collect();
            order.sort_by_key(|&e| {
                let (u, v) = g.endpoints(e);
                let (a, b) = (rank[u].max(rank[v]), rank[u].min(rank[v]));
                (a, b, e)
            });
            order
        }
    }
}
