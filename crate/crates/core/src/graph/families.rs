use std::fmt;
use std::str::FromStr;

use super::{Graph, GraphError};

/// Named graph families with canonical vertex numbering.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Family {
    Path(usize),
    Cycle(usize),
    Complete(usize),
    /// H(d, q): words of length `d` over `[q]`, adjacent when they differ in
    /// exactly one coordinate.
    Hamming {
        d: usize,
        q: usize,
    },
    Petersen,
    /// K_{1,m}: vertex 1 is the center.
    Star(usize),
}

/// Alias used by the CLI: a family parsed from `name:params`.
pub type FamilySpec = Family;

impl Family {
    pub fn build(&self) -> Result<Graph, GraphError> {
        match *self {
            Family::Path(n) => {
                if n == 0 {
                    return Err(GraphError::Family("path needs n >= 1".into()));
                }
                Ok(Graph::from_zero_based(n, (1..n).map(|i| (i - 1, i)).collect()))
            }
            Family::Cycle(n) => {
                if n < 3 {
                    return Err(GraphError::Family("cycle needs n >= 3".into()));
                }
                Ok(Graph::from_zero_based(n, (0..n).map(|i| (i, (i + 1) % n)).collect()))
            }
            Family::Complete(n) => {
                if n == 0 {
                    return Err(GraphError::Family("complete needs n >= 1".into()));
                }
                let edges = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
                Ok(Graph::from_zero_based(n, edges))
            }
            Family::Hamming { d, q } => {
                if d == 0 || q < 2 {
                    return Err(GraphError::Family("hamming needs d >= 1 and q >= 2".into()));
                }
                let k_q = Family::Complete(q).build()?;
                let mut g = k_q.clone();
                for _ in 1..d {
                    g = g.cartesian_product(&k_q);
                }
                Ok(g)
            }
            Family::Petersen => {
                let mut edges = Vec::with_capacity(15);
                for i in 0..5 {
                    edges.push((i, (i + 1) % 5));
                    edges.push((i, i + 5));
                    edges.push((5 + i, 5 + (i + 2) % 5));
                }
                Ok(Graph::from_zero_based(10, edges))
            }
            Family::Star(m) => {
                if m == 0 {
                    return Err(GraphError::Family("star needs m >= 1 leaves".into()));
                }
                Ok(Graph::from_zero_based(m + 1, (1..=m).map(|v| (0, v)).collect()))
            }
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Family::Path(n) => write!(f, "path:{n}"),
            Family::Cycle(n) => write!(f, "cycle:{n}"),
            Family::Complete(n) => write!(f, "complete:{n}"),
            Family::Hamming { d, q } => write!(f, "hamming:{d},{q}"),
            Family::Petersen => write!(f, "petersen"),
            Family::Star(m) => write!(f, "star:{m}"),
        }
    }
}

const GRAMMAR: &str = "family := name [':' param {',' param}]";

fn grammar_error(detail: impl fmt::Display) -> GraphError {
    GraphError::Family(format!("{detail} (expected `{GRAMMAR}`)"))
}

impl FromStr for Family {
    type Err = GraphError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        let (name, params) = match s.split_once(':') {
            Some((name, rest)) => (name.trim(), Some(rest)),
            None => (s, None),
        };
        let params: Vec<usize> = match params {
            None => Vec::new(),
            Some(rest) => rest
                .split(',')
                .map(|p| {
                    p.trim()
                        .parse::<usize>()
                        .map_err(|_| grammar_error(format!("param `{}` is not a non-negative integer", p.trim())))
                })
                .collect::<Result<_, _>>()?,
        };
        let arity = |want: usize| {
            if params.len() == want {
                Ok(())
            } else {
                Err(grammar_error(format!("`{name}` takes {want} param(s), got {}", params.len())))
            }
        };
        let family = match name {
            "path" => {
                arity(1)?;
                Family::Path(params[0])
            }
            "cycle" => {
                arity(1)?;
                Family::Cycle(params[0])
            }
            "complete" => {
                arity(1)?;
                Family::Complete(params[0])
            }
            "hamming" => {
                arity(2)?;
                Family::Hamming { d: params[0], q: params[1] }
            }
            "petersen" => {
                arity(0)?;
                Family::Petersen
            }
            "star" => {
                arity(1)?;
                Family::Star(params[0])
            }
            other => return Err(grammar_error(format!("unknown family name `{other}`"))),
        };
        Ok(family)
    }
}
