//! Coloring certificates: the single JSON document shared by the
//! constructors and the search, plus DOT export.
//!
//! Schema (field order is fixed so identical runs are byte-identical):
//! `{"n": int, "edges": [[u,v],...], "t": int, "colors": [c1,...,cm],
//!   "verdict": "valid"|"invalid", "reason": string-or-null}`
//! with `edges` in canonical order and `colors` aligned to it.

use std::path::Path;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::verify::{verify_interval, EdgeColoring, Verdict, VerifyReport};

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
pub struct Certificate {
    pub n: usize,
    pub edges: Vec<[usize; 2]>,
    pub t: u32,
    pub colors: Vec<u32>,
    pub verdict: String,
    pub reason: Option<String>,
}

impl Certificate {
    /// Builds a certificate by re-verifying the coloring at the claimed t.
    pub fn from_coloring(coloring: &EdgeColoring, t: u32) -> Certificate {
        let report = verify_interval(coloring, t);
        Certificate::with_report(coloring, &report)
    }

    pub fn with_report(coloring: &EdgeColoring, report: &VerifyReport) -> Certificate {
        let g = coloring.graph();
        Certificate {
            n: g.vertex_count(),
            edges: g.edges().iter().map(|&(u, v)| [u, v]).collect(),
            t: report.t_claimed,
            colors: coloring.colors().to_vec(),
            verdict: match &report.verdict {
                Verdict::Valid => "valid".into(),
                Verdict::Invalid(_) => "invalid".into(),
            },
            reason: match &report.verdict {
                Verdict::Valid => None,
                Verdict::Invalid(reason) => Some(reason.to_string()),
            },
        }
    }

    /// Rebuilds the graph and coloring; fails on malformed documents.
    pub fn to_coloring(&self) -> Result<EdgeColoring> {
        let graph = Graph::new(self.n, self.edges.iter().map(|e| (e[0], e[1])))?;
        if graph.edge_count() != self.edges.len() {
            return Err(Error::Parse {
                line: 0,
                message: "edge list is not canonical (duplicates present)".into(),
            });
        }
        EdgeColoring::new(Arc::new(graph), self.colors.clone())
    }

    pub fn to_json(&self) -> Result<String> {
        let mut text = serde_json::to_string_pretty(self)?;
        text.push('\n');
        Ok(text)
    }

    pub fn from_json(text: &str) -> Result<Certificate> {
        Ok(serde_json::from_str(text)?)
    }

    pub fn read(path: &Path) -> Result<Certificate> {
        Certificate::from_json(&std::fs::read_to_string(path)?)
    }

    /// Atomic write: the file appears complete or not at all.
    pub fn write(&self, path: &Path) -> Result<()> {
        write_atomic(path, self.to_json()?.as_bytes())
    }
}

pub fn write_atomic(path: &Path, bytes: &[u8]) -> Result<()> {
    let tmp = path.with_extension("tmp");
    std::fs::write(&tmp, bytes)?;
    std::fs::rename(&tmp, path)?;
    Ok(())
}

/// DOT document with one labeled edge per graph edge; labels are the colors.
pub fn to_dot(coloring: &EdgeColoring) -> String {
    let g = coloring.graph();
    let mut out = String::from("graph coloring {\n");
    for (idx, &(u, v)) in g.edges().iter().enumerate() {
        out.push_str(&format!(
            "  v{u} -- v{v} [label=\"{}\"];\n",
            coloring.color(idx)
        ));
    }
    out.push_str("}\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::construct::grid_widest;

    #[test]
    fn round_trip_preserves_verdict() {
        let c = grid_widest(3, 4).unwrap();
        let cert = Certificate::from_coloring(&c.coloring, c.claimed_t);
        assert_eq!(cert.verdict, "valid");
        assert_eq!(cert.reason, None);

        let text = cert.to_json().unwrap();
        let back = Certificate::from_json(&text).unwrap();
        assert_eq!(back, cert);

        let coloring = back.to_coloring().unwrap();
        assert!(verify_interval(&coloring, back.t).is_valid());
    }

    #[test]
    fn invalid_coloring_reports_reason() {
        let c = grid_widest(2, 2).unwrap();
        let mut colors = c.coloring.colors().to_vec();
        colors[0] = 7;
        let broken = EdgeColoring::new(c.coloring.graph().clone(), colors).unwrap();
        let cert = Certificate::from_coloring(&broken, 2);
        assert_eq!(cert.verdict, "invalid");
        assert!(cert.reason.is_some());
    }

    #[test]
    fn dot_labels_every_edge() {
        let c = grid_widest(2, 3).unwrap();
        let dot = to_dot(&c.coloring);
        let labeled = dot.matches("label=").count();
        assert_eq!(labeled, c.coloring.graph().edge_count());
    }

    #[test]
    fn malformed_json_is_a_parse_error() {
        assert!(Certificate::from_json("{\"n\": 3, \"edges\": [[0,").is_err());
    }
}
