//! Dense real symmetric matrices and the eight graph matrix constructions.
//!
//! Every construction here works in integer arithmetic first and converts
//! to `f64` at the end, so entries are exact and identities like
//! `CN = A^2 - D` can be tested with zero tolerance.

use std::fmt::Write as _;

use crate::graph::Graph;

/// Dense symmetric matrix in row-major storage. Symmetry is enforced at
/// construction rather than assumed of the inputs.
#[derive(Debug, Clone, PartialEq)]
pub struct SymmetricMatrix {
    n: usize,
    entries: Vec<f64>,
}

impl SymmetricMatrix {
    /// Builds from an entry function over the upper triangle (including the
    /// diagonal); the lower triangle is mirrored.
    pub fn from_upper(n: usize, mut f: impl FnMut(usize, usize) -> f64) -> Self {
        let mut entries = vec![0.0; n * n];
        for i in 0..n {
            for j in i..n {
                let v = f(i, j);
                entries[i * n + j] = v;
                entries[j * n + i] = v;
            }
        }
        Self { n, entries }
    }

    /// Integer-valued variant of [`from_upper`](Self::from_upper).
    pub fn from_upper_int(n: usize, mut f: impl FnMut(usize, usize) -> i64) -> Self {
        Self::from_upper(n, |i, j| f(i, j) as f64)
    }

    pub fn zero(n: usize) -> Self {
        Self { n, entries: vec![0.0; n * n] }
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.entries[i * self.n + j]
    }

    pub fn trace(&self) -> f64 {
        (0..self.n).map(|i| self.get(i, i)).sum()
    }

    pub fn frobenius_norm(&self) -> f64 {
        self.entries.iter().map(|v| v * v).sum::<f64>().sqrt()
    }

    pub fn scaled(&self, c: f64) -> Self {
        Self {
            n: self.n,
            entries: self.entries.iter().map(|v| v * c).collect(),
        }
    }

    pub(crate) fn entries(&self) -> &[f64] {
        &self.entries
    }

    /// Debug text form: the dimension, then one space-separated row per
    /// line. Not a stability contract.
    pub fn to_text(&self) -> String {
        let mut out = format!("{}\n", self.n);
        for i in 0..self.n {
            for j in 0..self.n {
                if j > 0 {
                    out.push(' ');
                }
                let _ = write!(out, "{}", self.get(i, j));
            }
            out.push('\n');
        }
        out
    }
}

/// 0/1 adjacency matrix with zero diagonal.
pub fn adjacency(g: &Graph) -> SymmetricMatrix {
    SymmetricMatrix::from_upper_int(g.vertex_count(), |i, j| i64::from(i != j && g.has_edge(i, j)))
}

/// Diagonal matrix of vertex degrees.
pub fn degree_matrix(g: &Graph) -> SymmetricMatrix {
    SymmetricMatrix::from_upper_int(g.vertex_count(), |i, j| {
        if i == j {
            g.degree(i) as i64
        } else {
            0
        }
    })
}

/// Laplacian `D - A`.
pub fn laplacian(g: &Graph) -> SymmetricMatrix {
    SymmetricMatrix::from_upper_int(g.vertex_count(), |i, j| {
        if i == j {
            g.degree(i) as i64
        } else {
            -i64::from(g.has_edge(i, j))
        }
    })
}

/// Signless Laplacian `D + A`.
pub fn signless_laplacian(g: &Graph) -> SymmetricMatrix {
    SymmetricMatrix::from_upper_int(g.vertex_count(), |i, j| {
        if i == j {
            g.degree(i) as i64
        } else {
            i64::from(g.has_edge(i, j))
        }
    })
}

/// Common-neighborhood matrix: entry `(i, j)` counts the vertices adjacent
/// to both `i` and `j`; the diagonal is zero.
pub fn cn_matrix(g: &Graph) -> SymmetricMatrix {
    SymmetricMatrix::from_upper_int(g.vertex_count(), |i, j| {
        if i == j {
            0
        } else {
            g.common_neighbors(i, j) as i64
        }
    })
}

/// Per-vertex row sums of the CN matrix, as integers.
pub fn cn_row_sums(g: &Graph) -> Vec<i64> {
    let n = g.vertex_count();
    (0..n)
        .map(|i| {
            (0..n)
                .filter(|&k| k != i)
                .map(|k| g.common_neighbors(i, k) as i64)
                .sum()
        })
        .collect()
}

/// Diagonal matrix of CN row sums.
pub fn cnrs_matrix(g: &Graph) -> SymmetricMatrix {
    let sums = cn_row_sums(g);
    SymmetricMatrix::from_upper_int(g.vertex_count(), |i, j| if i == j { sums[i] } else { 0 })
}

/// Common-neighborhood Laplacian `CNRS - CN`.
pub fn cn_laplacian(g: &Graph) -> SymmetricMatrix {
    let sums = cn_row_sums(g);
    SymmetricMatrix::from_upper_int(g.vertex_count(), |i, j| {
        if i == j {
            sums[i]
        } else {
            -(g.common_neighbors(i, j) as i64)
        }
    })
}

/// Common-neighborhood signless Laplacian `CNRS + CN`.
pub fn cn_signless_laplacian(g: &Graph) -> SymmetricMatrix {
    let sums = cn_row_sums(g);
    SymmetricMatrix::from_upper_int(g.vertex_count(), |i, j| {
        if i == j {
            sums[i]
        } else {
            g.common_neighbors(i, j) as i64
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::family::GraphFamily::*;

    #[test]
    fn adjacency_examples() {
        let k2 = adjacency(&Complete(2).generate().unwrap());
        assert_eq!(k2.entries(), &[0.0, 1.0, 1.0, 0.0]);

        let k1 = adjacency(&Complete(1).generate().unwrap());
        assert_eq!(k1.entries(), &[0.0]);

        let p3 = adjacency(&Path(3).generate().unwrap());
        assert_eq!(
            p3.entries(),
            &[0.0, 1.0, 0.0, 1.0, 0.0, 1.0, 0.0, 1.0, 0.0]
        );
    }

    #[test]
    fn degree_examples() {
        let k3 = degree_matrix(&Complete(3).generate().unwrap());
        assert_eq!((0..3).map(|i| k3.get(i, i)).collect::<Vec<_>>(), vec![2.0, 2.0, 2.0]);

        let s3 = degree_matrix(&Star(3).generate().unwrap());
        assert_eq!((0..4).map(|i| s3.get(i, i)).collect::<Vec<_>>(), vec![3.0, 1.0, 1.0, 1.0]);

        let empty4 = degree_matrix(&Graph::empty(4));
        assert!(empty4.entries().iter().all(|&v| v == 0.0));
    }

    use crate::graph::Graph;

    #[test]
    fn laplacian_examples() {
        let k2 = Complete(2).generate().unwrap();
        assert_eq!(laplacian(&k2).entries(), &[1.0, -1.0, -1.0, 1.0]);
        assert_eq!(signless_laplacian(&k2).entries(), &[1.0, 1.0, 1.0, 1.0]);
    }

    #[test]
    fn laplacian_rows_sum_to_zero() {
        for fam in [Complete(5), Path(6), Cycle(7), Star(4)] {
            let g = fam.generate().unwrap();
            let l = laplacian(&g);
            let cl = cn_laplacian(&g);
            for i in 0..g.vertex_count() {
                let row: f64 = (0..g.vertex_count()).map(|j| l.get(i, j)).sum();
                assert_eq!(row, 0.0);
                let crow: f64 = (0..g.vertex_count()).map(|j| cl.get(i, j)).sum();
                assert_eq!(crow, 0.0);
            }
        }
    }

    #[test]
    fn cn_examples() {
        // CN(K_n) = (n-2) A(K_n)
        let k4 = Complete(4).generate().unwrap();
        let cn = cn_matrix(&k4);
        let a = adjacency(&k4);
        for i in 0..4 {
            for j in 0..4 {
                assert_eq!(cn.get(i, j), 2.0 * a.get(i, j));
            }
        }

        // CN(P4) is the adjacency matrix of {0,2},{1,3}
        let cn_p4 = cn_matrix(&Path(4).generate().unwrap());
        let two_edges = Graph::new(4, [(0, 2), (1, 3)]).unwrap();
        assert_eq!(cn_p4, adjacency(&two_edges));

        assert_eq!(cn_matrix(&Complete(1).generate().unwrap()).entries(), &[0.0]);
    }

    #[test]
    fn cnrs_examples() {
        let k4 = cnrs_matrix(&Complete(4).generate().unwrap());
        assert_eq!((0..4).map(|i| k4.get(i, i)).collect::<Vec<_>>(), vec![6.0; 4]);

        let kmn = cnrs_matrix(&CompleteBipartite(2, 3).generate().unwrap());
        let diag: Vec<f64> = (0..5).map(|i| kmn.get(i, i)).collect();
        assert_eq!(diag, vec![3.0, 3.0, 4.0, 4.0, 4.0]); // (m-1)n then (n-1)m

        assert!(cnrs_matrix(&Graph::empty(5)).entries().iter().all(|&v| v == 0.0));
    }

    #[test]
    fn cn_laplacians_scale_for_complete() {
        // CNL(K_n) = (n-2) L(K_n), CNSL(K_n) = (n-2) Q(K_n)
        for n in [2usize, 4, 7] {
            let g = Complete(n).generate().unwrap();
            let scale = (n as f64) - 2.0;
            assert_eq!(cn_laplacian(&g), laplacian(&g).scaled(scale));
            assert_eq!(cn_signless_laplacian(&g), signless_laplacian(&g).scaled(scale));
        }
    }

    #[test]
    fn cnrs_diagonal_matches_neighbor_degree_sum() {
        // CNRS_ii = sum over neighbors j of (deg(j) - 1)
        for g in crate::graph::enumerate_all_labeled_graphs(5).unwrap() {
            for (i, sum) in cn_row_sums(&g).into_iter().enumerate() {
                let expect: i64 = g.neighbors(i).iter().map(|&j| g.degree(j) as i64 - 1).sum();
                assert_eq!(sum, expect);
            }
        }
    }

    #[test]
    fn text_form() {
        let m = adjacency(&Complete(2).generate().unwrap());
        assert_eq!(m.to_text(), "2\n0 1\n1 0\n");
    }
}
