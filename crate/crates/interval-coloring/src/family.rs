//! Parameterized graph families and their canonical realizations.
//!
//! Every family fixes a coordinate scheme mapping structured indices to flat
//! vertex ids (row-major, last coordinate fastest; hypercube bit-vectors with
//! the first factor most significant). Composite families are realized by
//! folding [`cartesian_product`] over their factors, so the flat ids agree
//! with the product convention `(u, v) -> u * |V(h)| + v`.

use std::fmt;

use crate::error::{Error, Result};
use crate::graph::{cartesian_product, Graph};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FamilySpec {
    /// Simple path `P_n`, `n >= 1` (a single vertex when `n = 1`).
    Path(usize),
    /// Simple cycle `C_n`, `n >= 3`.
    Cycle(usize),
    /// Complete graph `K_n`, `n >= 1`.
    Complete(usize),
    /// Complete bipartite `K_{r,s}`, `r, s >= 1`.
    CompleteBipartite(usize, usize),
    /// `n`-dimensional cube `Q_n`, `n >= 1`.
    Hypercube(usize),
    /// Grid `G(n_1, ..., n_k)`: the product of paths, each `n_i >= 1`.
    Grid(Vec<usize>),
    /// Cylinder `C(m, n) = P_m □ C_n`, `m >= 1`, `n >= 3`.
    Cylinder(usize, usize),
    /// Torus `T(m, n) = C_m □ C_n`, `m, n >= 3`.
    Torus(usize, usize),
    /// Cartesian product of two family specs.
    Product(Box<FamilySpec>, Box<FamilySpec>),
}

impl FamilySpec {
    pub fn validate(&self) -> Result<()> {
        use FamilySpec::*;
        let check = |name: &'static str, value: usize, min: usize| -> Result<()> {
            if value < min {
                Err(Error::invalid_parameter(
                    name,
                    format!("{value} is below the minimum {min}"),
                ))
            } else {
                Ok(())
            }
        };
        match self {
            Path(n) => check("n", *n, 1),
            Cycle(n) => check("n", *n, 3),
            Complete(n) => check("n", *n, 1),
            CompleteBipartite(r, s) => check("r", *r, 1).and(check("s", *s, 1)),
            Hypercube(n) => check("n", *n, 1),
            Grid(dims) => {
                if dims.is_empty() {
                    return Err(Error::invalid_parameter("dims", "must be non-empty"));
                }
                dims.iter().try_for_each(|&d| check("dims[i]", d, 1))
            }
            Cylinder(m, n) => check("m", *m, 1).and(check("n", *n, 3)),
            Torus(m, n) => check("m", *m, 3).and(check("n", *n, 3)),
            Product(a, b) => a.validate().and(b.validate()),
        }
    }

    pub fn vertex_count(&self) -> Result<usize> {
        self.validate()?;
        use FamilySpec::*;
        Ok(match self {
            Path(n) | Cycle(n) | Complete(n) => *n,
            CompleteBipartite(r, s) => r + s,
            Hypercube(n) => 1 << n,
            Grid(dims) => dims.iter().product(),
            Cylinder(m, n) | Torus(m, n) => m * n,
            Product(a, b) => a.vertex_count()? * b.vertex_count()?,
        })
    }

    /// Number of structured coordinates per vertex.
    pub fn coord_len(&self) -> usize {
        use FamilySpec::*;
        match self {
            Path(_) | Cycle(_) | Complete(_) | CompleteBipartite(..) => 1,
            Hypercube(n) => *n,
            Grid(dims) => dims.len(),
            Cylinder(..) | Torus(..) => 2,
            Product(a, b) => a.coord_len() + b.coord_len(),
        }
    }

    /// Flat vertex id of a structured coordinate vector (0-based).
    /// The map is a bijection onto `[0, vertex_count)`.
    pub fn flat_index(&self, coords: &[usize]) -> Result<usize> {
        if coords.len() != self.coord_len() {
            return Err(Error::invalid_parameter(
                "coords",
                format!(
                    "expected {} coordinates, got {}",
                    self.coord_len(),
                    coords.len()
                ),
            ));
        }
        use FamilySpec::*;
        let bounded = |value: usize, bound: usize| -> Result<usize> {
            if value < bound {
                Ok(value)
            } else {
                Err(Error::invalid_parameter(
                    "coords",
                    format!("coordinate {value} out of range 0..{bound}"),
                ))
            }
        };
        match self {
            Path(n) | Cycle(n) | Complete(n) => bounded(coords[0], *n),
            CompleteBipartite(r, s) => bounded(coords[0], r + s),
            Hypercube(n) => {
                let mut id = 0;
                for &bit in &coords[..*n] {
                    id = (id << 1) | bounded(bit, 2)?;
                }
                Ok(id)
            }
            Grid(dims) => {
                let mut id = 0;
                for (&c, &d) in coords.iter().zip(dims) {
                    id = id * d + bounded(c, d)?;
                }
                Ok(id)
            }
            Cylinder(m, n) | Torus(m, n) => {
                Ok(bounded(coords[0], *m)? * n + bounded(coords[1], *n)?)
            }
            Product(a, b) => {
                let split = a.coord_len();
                Ok(a.flat_index(&coords[..split])? * b.vertex_count()?
                    + b.flat_index(&coords[split..])?)
            }
        }
    }

    /// Builds the canonical graph for the family.
    pub fn realize(&self) -> Result<Graph> {
        self.validate()?;
        use FamilySpec::*;
        match self {
            Path(n) => Graph::new(*n, (1..*n).map(|i| (i - 1, i))),
            Cycle(n) => Graph::new(*n, (1..*n).map(|i| (i - 1, i)).chain([(0, n - 1)])),
            Complete(n) => Graph::new(*n, (0..*n).flat_map(|u| (u + 1..*n).map(move |v| (u, v)))),
            CompleteBipartite(r, s) => Graph::new(
                r + s,
                (0..*r).flat_map(|i| (0..*s).map(move |j| (i, r + j))),
            ),
            Hypercube(n) => fold_product((0..*n).map(|_| Complete(2))),
            Grid(dims) => fold_product(dims.iter().map(|&d| Path(d))),
            Cylinder(m, n) => Ok(cartesian_product(
                &Path(*m).realize()?,
                &Cycle(*n).realize()?,
            )),
            Torus(m, n) => Ok(cartesian_product(
                &Cycle(*m).realize()?,
                &Cycle(*n).realize()?,
            )),
            Product(a, b) => Ok(cartesian_product(&a.realize()?, &b.realize()?)),
        }
    }

    /// Parses `name` + comma-separated params, e.g. `("grid", "3,4")`.
    pub fn parse(name: &str, params: &str) -> Result<FamilySpec> {
        let values: Vec<usize> = if params.trim().is_empty() {
            Vec::new()
        } else {
            params
                .split(',')
                .map(|p| {
                    p.trim().parse().map_err(|e| Error::Parse {
                        line: 1,
                        message: format!("bad parameter {p:?}: {e}"),
                    })
                })
                .collect::<Result<_>>()?
        };
        let arity = |k: usize| -> Result<()> {
            if values.len() == k {
                Ok(())
            } else {
                Err(Error::invalid_parameter(
                    "params",
                    format!("{name} takes {k} parameter(s), got {}", values.len()),
                ))
            }
        };
        let spec = match name {
            "path" => {
                arity(1)?;
                FamilySpec::Path(values[0])
            }
            "cycle" => {
                arity(1)?;
                FamilySpec::Cycle(values[0])
            }
            "complete" => {
                arity(1)?;
                FamilySpec::Complete(values[0])
            }
            "complete-bipartite" => {
                arity(2)?;
                FamilySpec::CompleteBipartite(values[0], values[1])
            }
            "hypercube" => {
                arity(1)?;
                FamilySpec::Hypercube(values[0])
            }
            "grid" => {
                if values.is_empty() {
                    return Err(Error::invalid_parameter("params", "grid needs >= 1 dim"));
                }
                FamilySpec::Grid(values)
            }
            "cylinder" => {
                arity(2)?;
                FamilySpec::Cylinder(values[0], values[1])
            }
            "torus" => {
                arity(2)?;
                FamilySpec::Torus(values[0], values[1])
            }
            other => {
                return Err(Error::Unsupported(format!(
                    "unknown family {other:?} (expected path|cycle|complete|complete-bipartite|hypercube|grid|cylinder|torus)"
                )))
            }
        };
        spec.validate()?;
        Ok(spec)
    }
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        use FamilySpec::*;
        match self {
            Path(n) => write!(f, "P_{n}"),
            Cycle(n) => write!(f, "C_{n}"),
            Complete(n) => write!(f, "K_{n}"),
            CompleteBipartite(r, s) => write!(f, "K_{{{r},{s}}}"),
            Hypercube(n) => write!(f, "Q_{n}"),
            Grid(dims) => {
                let parts: Vec<String> = dims.iter().map(|d| d.to_string()).collect();
                write!(f, "G({})", parts.join(","))
            }
            Cylinder(m, n) => write!(f, "C({m},{n})"),
            Torus(m, n) => write!(f, "T({m},{n})"),
            Product(a, b) => write!(f, "{a} x {b}"),
        }
    }
}

fn fold_product(factors: impl IntoIterator<Item = FamilySpec>) -> Result<Graph> {
    let mut acc: Option<Graph> = None;
    for spec in factors {
        let g = spec.realize()?;
        acc = Some(match acc {
            None => g,
            Some(prev) => cartesian_product(&prev, &g),
        });
    }
    acc.ok_or_else(|| Error::invalid_parameter("dims", "must be non-empty"))
}
