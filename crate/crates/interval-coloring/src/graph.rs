//! Graph representation, metric queries, and the Cartesian product.
//!
//! Graphs are simple, undirected, and stored in canonical form: edges as
//! `(u, v)` with `u < v`, sorted lexicographically and deduplicated. Two
//! equal graphs therefore serialize identically, which keeps certificates
//! byte-stable.

use std::collections::VecDeque;

use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    vertex_count: usize,
    edges: Vec<(usize, usize)>,
    adjacency: Vec<Vec<usize>>,
    incidence: Vec<Vec<usize>>,
}

impl Graph {
    /// Builds a graph from an edge list. Pairs are reoriented to `u < v`,
    /// sorted, and deduplicated; loops and out-of-range endpoints are errors.
    pub fn new(
        vertex_count: usize,
        edges: impl IntoIterator<Item = (usize, usize)>,
    ) -> Result<Self> {
        if vertex_count == 0 {
            return Err(Error::invalid_parameter("vertex_count", "must be positive"));
        }
        let mut canonical: Vec<(usize, usize)> = Vec::new();
        for (a, b) in edges {
            if a == b {
                return Err(Error::SelfLoop { v: a });
            }
            for v in [a, b] {
                if v >= vertex_count {
                    return Err(Error::VertexOutOfRange { v, n: vertex_count });
                }
            }
            canonical.push((a.min(b), a.max(b)));
        }
        canonical.sort_unstable();
        canonical.dedup();

        let mut adjacency = vec![Vec::new(); vertex_count];
        let mut incidence = vec![Vec::new(); vertex_count];
        for (idx, &(u, v)) in canonical.iter().enumerate() {
            adjacency[u].push(v);
            adjacency[v].push(u);
            incidence[u].push(idx);
            incidence[v].push(idx);
        }
        for list in &mut adjacency {
            list.sort_unstable();
        }

        Ok(Graph {
            vertex_count,
            edges: canonical,
            adjacency,
            incidence,
        })
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Canonically ordered edge list.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn endpoints(&self, edge: usize) -> (usize, usize) {
        self.edges[edge]
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adjacency[v]
    }

    /// Indices of the edges incident to `v`.
    pub fn incident_edges(&self, v: usize) -> &[usize] {
        &self.incidence[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adjacency[v].len()
    }

    pub fn max_degree(&self) -> usize {
        (0..self.vertex_count)
            .map(|v| self.degree(v))
            .max()
            .unwrap_or(0)
    }

    /// `Some(r)` when every vertex has degree `r`.
    pub fn regularity(&self) -> Option<usize> {
        let r = self.degree(0);
        (1..self.vertex_count)
            .all(|v| self.degree(v) == r)
            .then_some(r)
    }

    /// Index of edge `(u, v)` in the canonical list, if present.
    pub fn edge_index(&self, u: usize, v: usize) -> Option<usize> {
        let key = (u.min(v), u.max(v));
        self.edges.binary_search(&key).ok()
    }

    /// BFS distances from `src`; `None` marks unreachable vertices.
    pub fn bfs_distances(&self, src: usize) -> Vec<Option<usize>> {
        let mut dist = vec![None; self.vertex_count];
        dist[src] = Some(0);
        let mut queue = VecDeque::from([src]);
        while let Some(u) = queue.pop_front() {
            let du = dist[u].unwrap();
            for &w in self.neighbors(u) {
                if dist[w].is_none() {
                    dist[w] = Some(du + 1);
                    queue.push_back(w);
                }
            }
        }
        dist
    }

    pub fn is_connected(&self) -> bool {
        self.bfs_distances(0).iter().all(|d| d.is_some())
    }

    /// Shortest-path edge count between `u` and `v`.
    pub fn distance(&self, u: usize, v: usize) -> Result<usize> {
        for x in [u, v] {
            if x >= self.vertex_count {
                return Err(Error::VertexOutOfRange {
                    v: x,
                    n: self.vertex_count,
                });
            }
        }
        self.bfs_distances(u)[v].ok_or(Error::UnreachablePair { u, v })
    }

    /// Maximum distance over all vertex pairs.
    pub fn diameter(&self) -> Result<usize> {
        let mut best = 0;
        for src in 0..self.vertex_count {
            for d in self.bfs_distances(src) {
                match d {
                    Some(d) => best = best.max(d),
                    None => return Err(Error::InfiniteDiameter),
                }
            }
        }
        Ok(best)
    }

    /// Distance between two edges: the minimum over the four endpoint pairs.
    /// Zero exactly when the edges are equal or share a vertex.
    pub fn edge_distance(&self, e: usize, f: usize) -> Result<usize> {
        let (a, b) = self.endpoints(e);
        let (c, d) = self.endpoints(f);
        let from_a = self.bfs_distances(a);
        let from_b = self.bfs_distances(b);
        [from_a[c], from_a[d], from_b[c], from_b[d]]
            .into_iter()
            .flatten()
            .min()
            .ok_or(Error::UnreachablePair { u: a, v: c })
    }

    /// Two-colors the vertices by BFS; `Some(sides)` when bipartite.
    pub fn bipartition(&self) -> Option<Vec<u8>> {
        let mut side = vec![u8::MAX; self.vertex_count];
        for start in 0..self.vertex_count {
            if side[start] != u8::MAX {
                continue;
            }
            side[start] = 0;
            let mut queue = VecDeque::from([start]);
            while let Some(u) = queue.pop_front() {
                for &w in self.neighbors(u) {
                    if side[w] == u8::MAX {
                        side[w] = 1 - side[u];
                        queue.push_back(w);
                    } else if side[w] == side[u] {
                        return None;
                    }
                }
            }
        }
        Some(side)
    }

    pub fn is_bipartite(&self) -> bool {
        self.bipartition().is_some()
    }

    /// Edge-list text form: first line `n m`, then one `u v` line per edge
    /// in canonical order. Round-trips exactly.
    pub fn to_edge_list_string(&self) -> String {
        let mut out = format!("{} {}\n", self.vertex_count, self.edges.len());
        for &(u, v) in &self.edges {
            out.push_str(&format!("{u} {v}\n"));
        }
        out
    }

    pub fn from_edge_list_str(text: &str) -> Result<Graph> {
        let mut lines = text.lines().enumerate();
        let (_, header) = lines.next().ok_or(Error::Parse {
            line: 1,
            message: "empty input".into(),
        })?;
        let parse_pair = |line_no: usize, s: &str| -> Result<(usize, usize)> {
            let mut it = s.split_whitespace();
            let mut next = |field: &str| -> Result<usize> {
                it.next()
                    .ok_or(Error::Parse {
                        line: line_no + 1,
                        message: format!("missing field {field}"),
                    })?
                    .parse()
                    .map_err(|e| Error::Parse {
                        line: line_no + 1,
                        message: format!("bad {field}: {e}"),
                    })
            };
            let a = next("u")?;
            let b = next("v")?;
            if it.next().is_some() {
                return Err(Error::Parse {
                    line: line_no + 1,
                    message: "trailing fields".into(),
                });
            }
            Ok((a, b))
        };
        let (n, m) = parse_pair(0, header)?;
        let mut edges = Vec::with_capacity(m);
        for _ in 0..m {
            let (line_no, line) = lines.next().ok_or(Error::Parse {
                line: m + 1,
                message: format!("expected {m} edge lines"),
            })?;
            edges.push(parse_pair(line_no, line)?);
        }
        Graph::new(n, edges)
    }
}

/// Cartesian product `g □ h`: vertex `(u, v)` gets flat id `u * |V(h)| + v`;
/// `(u, v)` and `(u', v')` are adjacent when they agree in one coordinate and
/// are adjacent in the other.
pub fn cartesian_product(g: &Graph, h: &Graph) -> Graph {
    let nh = h.vertex_count();
    let mut edges = Vec::with_capacity(g.vertex_count() * h.edge_count() + nh * g.edge_count());
    for u in 0..g.vertex_count() {
        for &(v, w) in h.edges() {
            edges.push((u * nh + v, u * nh + w));
        }
    }
    for &(u, w) in g.edges() {
        for v in 0..nh {
            edges.push((u * nh + v, w * nh + v));
        }
    }
    Graph::new(g.vertex_count() * nh, edges).expect("product of valid graphs is valid")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::family::FamilySpec;

    fn cycle(n: usize) -> Graph {
        FamilySpec::Cycle(n).realize().unwrap()
    }

    #[test]
    fn canonical_form_dedups_and_orients() {
        let g = Graph::new(3, [(2, 0), (0, 2), (1, 0)]).unwrap();
        assert_eq!(g.edges(), &[(0, 1), (0, 2)]);
        assert_eq!(g.degree(0), 2);
        assert_eq!(g.neighbors(0), &[1, 2]);
    }

    #[test]
    fn loops_and_range_errors() {
        assert!(matches!(
            Graph::new(2, [(1, 1)]),
            Err(Error::SelfLoop { v: 1 })
        ));
        assert!(matches!(
            Graph::new(2, [(0, 2)]),
            Err(Error::VertexOutOfRange { v: 2, n: 2 })
        ));
    }

    #[test]
    fn product_counts() {
        let p3 = FamilySpec::Path(3).realize().unwrap();
        let q = cartesian_product(&p3, &p3);
        assert_eq!(q.vertex_count(), 9);
        assert_eq!(q.edge_count(), 12);

        let k2 = FamilySpec::Complete(2).realize().unwrap();
        let c4 = cartesian_product(&k2, &k2);
        assert_eq!(c4.vertex_count(), 4);
        assert_eq!(c4.edge_count(), 4);
        assert_eq!(c4.regularity(), Some(2));
    }

    #[test]
    fn hypercube_recursion() {
        let k2 = FamilySpec::Complete(2).realize().unwrap();
        let q2 = cartesian_product(&k2, &k2);
        let q3 = cartesian_product(&q2, &k2);
        assert_eq!(q3.edge_count(), 12);
        assert_eq!(q3, FamilySpec::Hypercube(3).realize().unwrap());
    }

    #[test]
    fn distances_and_diameter() {
        assert_eq!(cycle(4).diameter().unwrap(), 2);
        let grid = FamilySpec::Grid(vec![3, 4]).realize().unwrap();
        assert_eq!(grid.diameter().unwrap(), 5);
        let torus = FamilySpec::Torus(4, 4).realize().unwrap();
        assert_eq!(torus.diameter().unwrap(), 4);
    }

    #[test]
    fn disconnected_metric_errors() {
        let g = Graph::new(4, [(0, 1), (2, 3)]).unwrap();
        assert!(matches!(g.diameter(), Err(Error::InfiniteDiameter)));
        assert!(matches!(
            g.distance(0, 3),
            Err(Error::UnreachablePair { .. })
        ));
    }

    #[test]
    fn edge_distance_cases() {
        let c4 = cycle(4);
        let e = c4.edge_index(0, 1).unwrap();
        assert_eq!(c4.edge_distance(e, e).unwrap(), 0);
        let f = c4.edge_index(2, 3).unwrap();
        assert_eq!(c4.edge_distance(e, f).unwrap(), 1);

        // Antipodal edges of Q_3: frozen from the four endpoint Hamming
        // distances d(000,110)=2, d(000,111)=3, d(001,110)=3, d(001,111)=2.
        let q3 = FamilySpec::Hypercube(3).realize().unwrap();
        let e = q3.edge_index(0b000, 0b001).unwrap();
        let f = q3.edge_index(0b110, 0b111).unwrap();
        assert_eq!(q3.edge_distance(e, f).unwrap(), 2);
    }

    #[test]
    fn bipartiteness() {
        assert!(cycle(4).is_bipartite());
        assert!(!cycle(3).is_bipartite());
        for n in 1..=4 {
            assert!(FamilySpec::Hypercube(n).realize().unwrap().is_bipartite());
        }
        let sides = cycle(4).bipartition().unwrap();
        assert_eq!(sides.iter().filter(|&&s| s == 0).count(), 2);
    }

    #[test]
    fn edge_list_round_trip() {
        let g = FamilySpec::Cylinder(3, 5).realize().unwrap();
        let text = g.to_edge_list_string();
        let back = Graph::from_edge_list_str(&text).unwrap();
        assert_eq!(g, back);
        assert_eq!(back.to_edge_list_string(), text);
    }

    #[test]
    fn edge_list_parse_errors() {
        assert!(matches!(
            Graph::from_edge_list_str("4 2\n0 1\n"),
            Err(Error::Parse { .. })
        ));
        assert!(matches!(
            Graph::from_edge_list_str("4 1\n0 x\n"),
            Err(Error::Parse { line: 2, .. })
        ));
    }
}
