//! Interval-coloring verification and hypercube span statistics.
//!
//! An edge-coloring with colors `1..=t` is an interval t-coloring when all t
//! colors are used and the colors incident to each vertex are distinct and
//! consecutive. [`verify_interval`] checks the full definition;
//! [`verify_connected_shortcut`] uses the connected-graph shortcut (per-vertex
//! consecutiveness plus min color 1 already forces every color to appear).

use std::collections::BTreeSet;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::family::FamilySpec;
use crate::graph::Graph;

/// A total assignment of positive colors to the edges of a graph, aligned
/// with the graph's canonical edge order.
#[derive(Debug, Clone)]
pub struct EdgeColoring {
    graph: Arc<Graph>,
    colors: Vec<u32>,
}

impl EdgeColoring {
    pub fn new(graph: Arc<Graph>, colors: Vec<u32>) -> Result<Self> {
        if colors.len() != graph.edge_count() {
            return Err(Error::ColoringSizeMismatch {
                expected: graph.edge_count(),
                got: colors.len(),
            });
        }
        if let Some(edge) = colors.iter().position(|&c| c == 0) {
            return Err(Error::ColorBelowOne { edge, color: 0 });
        }
        Ok(EdgeColoring { graph, colors })
    }

    pub fn graph(&self) -> &Arc<Graph> {
        &self.graph
    }

    pub fn colors(&self) -> &[u32] {
        &self.colors
    }

    pub fn color(&self, edge: usize) -> u32 {
        self.colors[edge]
    }

    pub fn max_color(&self) -> u32 {
        self.colors.iter().copied().max().unwrap_or(0)
    }

    pub fn min_color(&self) -> u32 {
        self.colors.iter().copied().min().unwrap_or(0)
    }

    /// Set of colors on the edges incident to `v`.
    pub fn spectrum(&self, v: usize) -> BTreeSet<u32> {
        self.graph
            .incident_edges(v)
            .iter()
            .map(|&e| self.colors[e])
            .collect()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Witness {
    Vertex(usize),
    Edge(usize),
    Color(u32),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum InvalidReason {
    /// Two edges at `vertex` share `color`.
    RepeatedColor { vertex: usize, color: u32 },
    /// The spectrum at `vertex` is not a set of consecutive integers.
    SpectrumGap { vertex: usize },
    /// `edge` carries a color above the claimed `t`.
    ColorAboveT { edge: usize, color: u32 },
    /// `color <= t` appears on no edge.
    UnusedColor { color: u32 },
}

impl InvalidReason {
    pub fn witness(&self) -> Witness {
        match *self {
            InvalidReason::RepeatedColor { vertex, .. } => Witness::Vertex(vertex),
            InvalidReason::SpectrumGap { vertex } => Witness::Vertex(vertex),
            InvalidReason::ColorAboveT { edge, .. } => Witness::Edge(edge),
            InvalidReason::UnusedColor { color } => Witness::Color(color),
        }
    }
}

impl std::fmt::Display for InvalidReason {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            InvalidReason::RepeatedColor { vertex, color } => {
                write!(f, "color {color} repeats at vertex {vertex}")
            }
            InvalidReason::SpectrumGap { vertex } => {
                write!(f, "spectrum at vertex {vertex} is not an interval")
            }
            InvalidReason::ColorAboveT { edge, color } => {
                write!(f, "edge {edge} has color {color} above t")
            }
            InvalidReason::UnusedColor { color } => write!(f, "color {color} is unused"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Verdict {
    Valid,
    Invalid(InvalidReason),
}

#[derive(Debug, Clone)]
pub struct VerifyReport {
    pub proper: bool,
    pub all_vertex_spectra_intervals: bool,
    pub colors_used: BTreeSet<u32>,
    pub t_claimed: u32,
    pub verdict: Verdict,
}

impl VerifyReport {
    pub fn is_valid(&self) -> bool {
        self.verdict == Verdict::Valid
    }
}

/// Per-vertex spectrum accumulator: (min, max, count) plus a distinctness
/// mask, giving an O(1) interval check per vertex. Colors above 128 fall
/// back to a set.
enum SpectrumAcc {
    Small {
        mask: u128,
        min: u32,
        max: u32,
        count: u32,
    },
    Large(BTreeSet<u32>),
}

impl SpectrumAcc {
    fn new(max_color: u32) -> Self {
        if max_color <= 128 {
            SpectrumAcc::Small {
                mask: 0,
                min: u32::MAX,
                max: 0,
                count: 0,
            }
        } else {
            SpectrumAcc::Large(BTreeSet::new())
        }
    }

    /// Records a color; false means the color was already present.
    fn insert(&mut self, c: u32) -> bool {
        match self {
            SpectrumAcc::Small {
                mask,
                min,
                max,
                count,
            } => {
                let bit = 1u128 << (c - 1);
                if *mask & bit != 0 {
                    return false;
                }
                *mask |= bit;
                *min = (*min).min(c);
                *max = (*max).max(c);
                *count += 1;
                true
            }
            SpectrumAcc::Large(set) => set.insert(c),
        }
    }

    fn is_interval(&self) -> bool {
        match self {
            SpectrumAcc::Small {
                min, max, count, ..
            } => *count == 0 || max - min + 1 == *count,
            SpectrumAcc::Large(set) => match (set.first(), set.last()) {
                (Some(&lo), Some(&hi)) => hi - lo + 1 == set.len() as u32,
                _ => true,
            },
        }
    }
}

/// Decides whether `c` is a valid interval `t`-coloring: adjacent edges get
/// distinct colors, every vertex spectrum is consecutive, and the used colors
/// are exactly `1..=t`. Invalid colorings yield a report with the first
/// failing witness, never an error.
pub fn verify_interval(c: &EdgeColoring, t: u32) -> VerifyReport {
    let g = c.graph();
    let mut proper = true;
    let mut intervals = true;
    let mut first_reason: Option<InvalidReason> = None;
    let max_color = c.max_color().max(t);

    for v in 0..g.vertex_count() {
        let mut acc = SpectrumAcc::new(max_color);
        let mut repeated = None;
        for &e in g.incident_edges(v) {
            let col = c.color(e);
            if !acc.insert(col) && repeated.is_none() {
                repeated = Some(col);
            }
        }
        if let Some(color) = repeated {
            proper = false;
            first_reason.get_or_insert(InvalidReason::RepeatedColor { vertex: v, color });
        } else if !acc.is_interval() {
            intervals = false;
            first_reason.get_or_insert(InvalidReason::SpectrumGap { vertex: v });
        }
    }

    let colors_used: BTreeSet<u32> = c.colors().iter().copied().collect();
    if first_reason.is_none() {
        if let Some(edge) = c.colors().iter().position(|&col| col > t) {
            first_reason = Some(InvalidReason::ColorAboveT {
                edge,
                color: c.color(edge),
            });
        } else if let Some(color) = (1..=t).find(|col| !colors_used.contains(col)) {
            first_reason = Some(InvalidReason::UnusedColor { color });
        }
    }

    VerifyReport {
        proper,
        all_vertex_spectra_intervals: intervals,
        colors_used,
        t_claimed: t,
        verdict: match first_reason {
            None => Verdict::Valid,
            Some(r) => Verdict::Invalid(r),
        },
    }
}

/// Connected-graph shortcut: if every vertex sees distinct consecutive
/// colors, the minimum color is 1, and the maximum is t, then the coloring is
/// an interval t-coloring without scanning for unused colors. Returns t.
pub fn verify_connected_shortcut(c: &EdgeColoring) -> Result<u32> {
    let g = c.graph();
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    if g.edge_count() == 0 {
        return Err(Error::EmptyGraph);
    }
    for v in 0..g.vertex_count() {
        let spectrum = c.spectrum(v);
        if spectrum.len() != g.degree(v) {
            return Err(Error::IntervalViolation {
                vertex: v,
                message: "incident colors are not distinct".into(),
            });
        }
        if let (Some(&lo), Some(&hi)) = (spectrum.first(), spectrum.last()) {
            if hi - lo + 1 != spectrum.len() as u32 {
                return Err(Error::IntervalViolation {
                    vertex: v,
                    message: "incident colors are not consecutive".into(),
                });
            }
        }
    }
    if c.min_color() != 1 {
        return Err(Error::IntervalViolation {
            vertex: 0,
            message: format!("minimum color is {}, not 1", c.min_color()),
        });
    }
    Ok(c.max_color())
}

/// The vector `(sp_0, ..., sp_{n-1})` of maximum color differences over edge
/// pairs of `Q_n` at each edge distance.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpanTable {
    pub n: usize,
    pub sp: Vec<u32>,
}

/// Exact span statistics of an interval coloring of the hypercube `Q_n`,
/// computed over all edge pairs. Errors if the graph is not the canonical
/// `Q_n` or the coloring is not a valid interval coloring.
pub fn span_table(c: &EdgeColoring) -> Result<SpanTable> {
    let g = c.graph();
    let n = hypercube_dimension(g)?;
    let report = verify_interval(c, c.max_color());
    if !report.is_valid() || c.min_color() != 1 {
        return Err(Error::InvalidInputColoring {
            message: "span tables are defined for valid interval colorings".into(),
        });
    }

    let mut sp = vec![0u32; n];
    let edges = g.edges();
    for (i, &(a, b)) in edges.iter().enumerate() {
        for (j, &(x, y)) in edges.iter().enumerate().skip(i) {
            // Vertex ids of the canonical Q_n are bit vectors, so vertex
            // distance is Hamming distance.
            let k = [a ^ x, a ^ y, b ^ x, b ^ y]
                .into_iter()
                .map(|d| d.count_ones() as usize)
                .min()
                .unwrap();
            let diff = c.color(i).abs_diff(c.color(j));
            if diff > sp[k] {
                sp[k] = diff;
            }
        }
    }
    Ok(SpanTable { n, sp })
}

/// True when `sp_k <= sp_{k-1} + n - k` holds for all `1 <= k <= n-1`.
pub fn check_span_recurrence(tbl: &SpanTable) -> bool {
    (1..tbl.n).all(|k| tbl.sp[k] <= tbl.sp[k - 1] + (tbl.n - k) as u32)
}

/// For vertices `u, v` of `Q_n` at distance `k >= 1`, the `k` distinct
/// neighbors `v_i` of `v` with `d(u, v_i) = k - 1`: flip each bit where `u`
/// and `v` differ. Empty when `u = v`.
pub fn hypercube_neighbor_witnesses(n: usize, u: usize, v: usize) -> Vec<usize> {
    let mut out = Vec::new();
    for bit in 0..n {
        let mask = 1usize << bit;
        if (u ^ v) & mask != 0 {
            out.push(v ^ mask);
        }
    }
    out
}

fn hypercube_dimension(g: &Graph) -> Result<usize> {
    let v = g.vertex_count();
    let n = v.trailing_zeros() as usize;
    if v.is_power_of_two() && n >= 1 && *g == FamilySpec::Hypercube(n).realize()? {
        Ok(n)
    } else {
        Err(Error::WrongFamily {
            expected: "a canonical hypercube Q_n".into(),
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn colored(spec: FamilySpec, colors: Vec<u32>) -> EdgeColoring {
        let g = Arc::new(spec.realize().unwrap());
        EdgeColoring::new(g, colors).unwrap()
    }

    #[test]
    fn spectra() {
        // K_{1,3}: center is vertex 0, edges (0,1),(0,2),(0,3).
        let star = colored(FamilySpec::CompleteBipartite(1, 3), vec![1, 2, 3]);
        assert_eq!(star.spectrum(0), BTreeSet::from([1, 2, 3]));
        assert_eq!(star.spectrum(1), BTreeSet::from([1]));

        let c4 = colored(FamilySpec::Cycle(4), vec![1, 2, 2, 1]);
        for v in 0..4 {
            assert_eq!(c4.spectrum(v), BTreeSet::from([1, 2]));
        }
    }

    #[test]
    fn verify_interval_examples() {
        // C_4 canonical edges: (0,1),(0,3),(1,2),(2,3).
        let good = colored(FamilySpec::Cycle(4), vec![1, 2, 2, 1]);
        assert!(verify_interval(&good, 2).is_valid());

        let c3 = colored(FamilySpec::Cycle(3), vec![1, 2, 3]);
        let report = verify_interval(&c3, 3);
        assert!(!report.is_valid());
        assert!(report.proper);
        assert!(!report.all_vertex_spectra_intervals);
        assert!(matches!(
            report.verdict,
            Verdict::Invalid(InvalidReason::SpectrumGap { .. })
        ));

        let p2 = colored(FamilySpec::Path(2), vec![2]);
        let report = verify_interval(&p2, 2);
        assert_eq!(
            report.verdict,
            Verdict::Invalid(InvalidReason::UnusedColor { color: 1 })
        );
    }

    #[test]
    fn verify_reports_improper_first() {
        let c4 = colored(FamilySpec::Cycle(4), vec![1, 1, 2, 2]);
        let report = verify_interval(&c4, 2);
        assert!(!report.proper);
        assert!(matches!(
            report.verdict,
            Verdict::Invalid(InvalidReason::RepeatedColor { .. })
        ));
    }

    #[test]
    fn connected_shortcut() {
        let p4 = colored(FamilySpec::Path(4), vec![1, 2, 3]);
        assert_eq!(verify_connected_shortcut(&p4).unwrap(), 3);

        let c4 = colored(FamilySpec::Cycle(4), vec![1, 2, 2, 1]);
        assert_eq!(verify_connected_shortcut(&c4).unwrap(), 2);

        let disjoint = Arc::new(Graph::new(4, [(0, 1), (2, 3)]).unwrap());
        let c = EdgeColoring::new(disjoint, vec![1, 3]).unwrap();
        assert!(matches!(verify_connected_shortcut(&c), Err(Error::Disconnected)));
    }

    #[test]
    fn full_check_accepts_disconnected_colorings() {
        // The full verdict covers disconnected graphs; only the shortcut
        // demands connectivity.
        let disjoint = Arc::new(Graph::new(4, [(0, 1), (2, 3)]).unwrap());
        let c = EdgeColoring::new(disjoint, vec![1, 2]).unwrap();
        assert!(verify_interval(&c, 2).is_valid());
        assert!(matches!(
            verify_connected_shortcut(&c),
            Err(Error::Disconnected)
        ));
    }

    #[test]
    fn shortcut_rejects_shifted_colors() {
        let p3 = colored(FamilySpec::Path(3), vec![2, 3]);
        assert!(matches!(
            verify_connected_shortcut(&p3),
            Err(Error::IntervalViolation { .. })
        ));
    }

    #[test]
    fn span_table_q1() {
        let q1 = colored(FamilySpec::Hypercube(1), vec![1]);
        let tbl = span_table(&q1).unwrap();
        assert_eq!(tbl.sp, vec![0]);
        assert!(check_span_recurrence(&tbl));
    }

    #[test]
    fn span_table_rejects_wrong_family() {
        let c4 = colored(FamilySpec::Cycle(4), vec![1, 2, 2, 1]);
        assert!(matches!(span_table(&c4), Err(Error::WrongFamily { .. })));
    }

    #[test]
    fn span_recurrence_arithmetic() {
        assert!(check_span_recurrence(&SpanTable {
            n: 3,
            sp: vec![2, 4, 5]
        }));
        assert!(!check_span_recurrence(&SpanTable {
            n: 3,
            sp: vec![2, 5, 5]
        }));
    }

    #[test]
    fn neighbor_witnesses() {
        assert_eq!(
            hypercube_neighbor_witnesses(3, 0b000, 0b011),
            vec![0b010, 0b001]
        );
        assert_eq!(hypercube_neighbor_witnesses(3, 0b000, 0b111).len(), 3);
        assert!(hypercube_neighbor_witnesses(3, 0b101, 0b101).is_empty());
        // Every witness is a neighbor of v one step closer to u.
        let (u, v) = (0b000, 0b111);
        for w in hypercube_neighbor_witnesses(3, u, v) {
            assert_eq!((w ^ v).count_ones(), 1);
            assert_eq!((w ^ u).count_ones(), 2);
        }
    }
}
