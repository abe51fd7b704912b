//! Named graph families used throughout the toolkit: paths, cycles,
//! stars, complete and complete bipartite graphs, discrete graphs,
//! ladders, and threshold graphs given by a creation sequence.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case", tag = "family")]
pub enum GraphFamily {
    Path { n: usize },
    Cycle { n: usize },
    /// Star K_{1,n-1} on `n` vertices; vertex 0 is the center.
    Star { n: usize },
    Complete { n: usize },
    CompleteBipartite { m: usize, n: usize },
    Discrete { n: usize },
    /// Ladder of length `n`: the Cartesian product of a path on `n`
    /// vertices with an edge.
    Ladder { n: usize },
    /// Built from the empty graph by adding an isolated or a universal
    /// vertex per step.
    Threshold { seq: Vec<ThresholdStep> },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ThresholdStep {
    Isolated,
    Universal,
}

impl FromStr for ThresholdStep {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "i" | "isolated" => Ok(ThresholdStep::Isolated),
            "u" | "universal" => Ok(ThresholdStep::Universal),
            other => Err(Error::InvalidFamily {
                family: "threshold",
                reason: format!("unknown step {other:?}, expected 'i' or 'u'"),
            }),
        }
    }
}

impl fmt::Display for GraphFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GraphFamily::Path { n } => write!(f, "path({n})"),
            GraphFamily::Cycle { n } => write!(f, "cycle({n})"),
            GraphFamily::Star { n } => write!(f, "star({n})"),
            GraphFamily::Complete { n } => write!(f, "complete({n})"),
            GraphFamily::CompleteBipartite { m, n } => write!(f, "complete_bipartite({m},{n})"),
            GraphFamily::Discrete { n } => write!(f, "discrete({n})"),
            GraphFamily::Ladder { n } => write!(f, "ladder({n})"),
            GraphFamily::Threshold { seq } => {
                write!(f, "threshold(")?;
                for s in seq {
                    write!(f, "{}", match s {
                        ThresholdStep::Isolated => 'i',
                        ThresholdStep::Universal => 'u',
                    })?;
                }
                write!(f, ")")
            }
        }
    }
}

fn require(cond: bool, family: &'static str, reason: &str) -> Result<()> {
    if cond {
        Ok(())
    } else {
        Err(Error::InvalidFamily {
            family,
            reason: reason.to_string(),
        })
    }
}

/// Builds the standard member of a family.
pub fn generate(spec: &GraphFamily) -> Result<Graph> {
    match *spec {
        GraphFamily::Path { n } => {
            require(n >= 1, "path", "need n >= 1")?;
            let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
            Graph::new(n, &edges)
        }
        GraphFamily::Cycle { n } => {
            require(n >= 3, "cycle", "need n >= 3")?;
            let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
            Graph::new(n, &edges)
        }
        GraphFamily::Star { n } => {
            require(n >= 1, "star", "need n >= 1")?;
            let edges: Vec<_> = (1..n).map(|i| (0, i)).collect();
            Graph::new(n, &edges)
        }
        GraphFamily::Complete { n } => {
            require(n >= 1, "complete", "need n >= 1")?;
            let edges: Vec<_> = (0..n)
                .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
                .collect();
            Graph::new(n, &edges)
        }
        GraphFamily::CompleteBipartite { m, n } => {
            require(m >= 1 && n >= 1, "complete_bipartite", "need m, n >= 1")?;
            let edges: Vec<_> = (0..m)
                .flat_map(|u| (0..n).map(move |v| (u, m + v)))
                .collect();
            Graph::new(m + n, &edges)
        }
        GraphFamily::Discrete { n } => {
            require(n >= 1, "discrete", "need n >= 1")?;
            Graph::new(n, &[])
        }
        GraphFamily::Ladder { n } => {
            require(n >= 1, "ladder", "need n >= 1")?;
            let path = generate(&GraphFamily::Path { n })?;
            let rung = generate(&GraphFamily::Path { n: 2 })?;
            path.cartesian_product(&rung)
        }
        GraphFamily::Threshold { ref seq } => {
            require(!seq.is_empty(), "threshold", "need a non-empty creation sequence")?;
            let n = seq.len();
            let mut edges = Vec::new();
            for (i, step) in seq.iter().enumerate() {
                if *step == ThresholdStep::Universal {
                    edges.extend((0..i).map(|j| (j, i)));
                }
            }
            Graph::new(n, &edges)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn path_and_ladder() {
        let p3 = generate(&GraphFamily::Path { n: 3 }).unwrap();
        assert_eq!(p3.edges().collect::<Vec<_>>(), vec![(0, 1), (1, 2)]);

        // P2 x P2 is the 4-cycle
        let l2 = generate(&GraphFamily::Ladder { n: 2 }).unwrap();
        assert_eq!(l2.n(), 4);
        assert_eq!(l2.edge_count(), 4);
        assert_eq!(l2.girth(), Some(4));
        for n in 1..=6 {
            let ladder = generate(&GraphFamily::Ladder { n }).unwrap();
            let prod = generate(&GraphFamily::Path { n })
                .unwrap()
                .cartesian_product(&generate(&GraphFamily::Path { n: 2 }).unwrap())
                .unwrap();
            assert_eq!(ladder, prod);
        }
    }

    #[test]
    fn invalid_parameters() {
        assert!(generate(&GraphFamily::Cycle { n: 2 }).is_err());
        assert!(generate(&GraphFamily::Path { n: 0 }).is_err());
        assert!(generate(&GraphFamily::Threshold { seq: vec![] }).is_err());
    }

    #[test]
    fn threshold_sequence() {
        use ThresholdStep::{Isolated as I, Universal as U};
        let g = generate(&GraphFamily::Threshold { seq: vec![I, U, U] }).unwrap();
        // adding two universal vertices to a single vertex gives K3
        assert_eq!(g, generate(&GraphFamily::Complete { n: 3 }).unwrap());
    }

    #[test]
    fn bipartite_counts() {
        let g = generate(&GraphFamily::CompleteBipartite { m: 2, n: 3 }).unwrap();
        assert_eq!(g.n(), 5);
        assert_eq!(g.edge_count(), 6);
        assert_eq!(g.girth(), Some(4));
    }
}
