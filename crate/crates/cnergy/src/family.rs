//! Parameterized graph families with canonical vertex labelings.

use std::fmt;

use thiserror::Error;

use crate::graph::{disjoint_union, join, Graph};

/// A named family instance. `generate` produces the canonical labeling:
/// complete bipartite parts are `0..m` and `m..m+n`, paths run along
/// consecutive indices, cycles close the path back to vertex 0.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GraphFamily {
    Complete(usize),
    CompleteBipartite(usize, usize),
    Star(usize),
    Path(usize),
    Cycle(usize),
    DisjointUnion(Vec<GraphFamily>),
    Join(Vec<GraphFamily>),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FamilyError {
    #[error("{family} requires size >= 1, got {size}")]
    SizeTooSmall { family: &'static str, size: usize },
    #[error("cycle requires at least 3 vertices, got {0}")]
    CycleTooSmall(usize),
    #[error("{0} of zero families")]
    EmptyList(&'static str),
}

impl GraphFamily {
    pub fn generate(&self) -> Result<Graph, FamilyError> {
        match self {
            Self::Complete(n) => {
                require_size("complete graph", *n)?;
                let edges = (0..*n).flat_map(|u| ((u + 1)..*n).map(move |v| (u, v)));
                Ok(Graph::new(*n, edges).expect("in range"))
            }
            Self::CompleteBipartite(m, n) => {
                require_size("complete bipartite graph", *m)?;
                require_size("complete bipartite graph", *n)?;
                let edges = (0..*m).flat_map(|u| (0..*n).map(move |v| (u, m + v)));
                Ok(Graph::new(m + n, edges).expect("in range"))
            }
            Self::Star(k) => {
                require_size("star graph", *k)?;
                Self::CompleteBipartite(1, *k).generate()
            }
            Self::Path(n) => {
                require_size("path graph", *n)?;
                let edges = (0..n - 1).map(|i| (i, i + 1));
                Ok(Graph::new(*n, edges).expect("in range"))
            }
            Self::Cycle(n) => {
                if *n < 3 {
                    return Err(FamilyError::CycleTooSmall(*n));
                }
                let edges = (0..n - 1).map(|i| (i, i + 1)).chain([(n - 1, 0)]);
                Ok(Graph::new(*n, edges).expect("in range"))
            }
            Self::DisjointUnion(parts) => {
                if parts.is_empty() {
                    return Err(FamilyError::EmptyList("disjoint union"));
                }
                let graphs: Vec<Graph> =
                    parts.iter().map(|p| p.generate()).collect::<Result<_, _>>()?;
                Ok(disjoint_union(&graphs))
            }
            Self::Join(parts) => {
                if parts.is_empty() {
                    return Err(FamilyError::EmptyList("join"));
                }
                // join is associative on the edge set; fold left pairwise
                let mut graphs = parts.iter().map(|p| p.generate());
                let mut acc = graphs.next().expect("nonempty")?;
                for g in graphs {
                    acc = join(&acc, &g?);
                }
                Ok(acc)
            }
        }
    }

    pub fn vertex_count(&self) -> usize {
        match self {
            Self::Complete(n) | Self::Path(n) | Self::Cycle(n) => *n,
            Self::CompleteBipartite(m, n) => m + n,
            Self::Star(k) => k + 1,
            Self::DisjointUnion(parts) | Self::Join(parts) => {
                parts.iter().map(|p| p.vertex_count()).sum()
            }
        }
    }
}

impl fmt::Display for GraphFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::Complete(n) => write!(f, "K{n}"),
            Self::CompleteBipartite(m, n) => write!(f, "Kmn:{m},{n}"),
            Self::Star(k) => write!(f, "S{k}"),
            Self::Path(n) => write!(f, "P{n}"),
            Self::Cycle(n) => write!(f, "C{n}"),
            Self::DisjointUnion(parts) => {
                let body: Vec<String> = parts.iter().map(|p| p.to_string()).collect();
                write!(f, "({})", body.join("+"))
            }
            Self::Join(parts) => {
                let body: Vec<String> = parts.iter().map(|p| p.to_string()).collect();
                write!(f, "({})", body.join("v"))
            }
        }
    }
}

fn require_size(family: &'static str, size: usize) -> Result<(), FamilyError> {
    if size < 1 {
        Err(FamilyError::SizeTooSmall { family, size })
    } else {
        Ok(())
    }
}
