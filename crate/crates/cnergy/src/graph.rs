//! Finite simple undirected graphs on vertex set `0..n`.

use std::collections::BTreeSet;
use std::collections::VecDeque;
use std::fmt;

use thiserror::Error;

/// A finite simple undirected graph. Immutable after construction.
///
/// Vertices are the contiguous integers `0..n`. Edges are stored both as a
/// set of ordered pairs `(u, v)` with `u < v` and as per-vertex neighbor
/// sets; the two indexes are kept consistent by construction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    edges: BTreeSet<(usize, usize)>,
    neighbors: Vec<BTreeSet<usize>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("vertex {vertex} out of range for graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("vertex count {0} outside the supported enumeration range 1..=7")]
    EnumerationRange(usize),
}

/// Errors from [`parse_edge_list`], each carrying the 1-based line number.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EdgeListError {
    #[error("missing vertex-count header line")]
    MissingHeader,
    #[error("line {line}: malformed token {token:?}")]
    MalformedToken { line: usize, token: String },
    #[error("line {line}: expected two vertex indices")]
    BadEdgeLine { line: usize },
    #[error("line {line}: vertex {vertex} out of range (n = {n})")]
    VertexOutOfRange { line: usize, vertex: usize, n: usize },
    #[error("line {line}: self-loop at vertex {vertex}")]
    SelfLoop { line: usize, vertex: usize },
}

impl Graph {
    /// Builds a graph from an edge list. Edge endpoints may come in either
    /// order; duplicates collapse. Rejects self-loops and out-of-range
    /// endpoints.
    pub fn new(
        n: usize,
        edges: impl IntoIterator<Item = (usize, usize)>,
    ) -> Result<Self, GraphError> {
        let mut set = BTreeSet::new();
        let mut neighbors = vec![BTreeSet::new(); n];
        for (u, v) in edges {
            if u >= n {
                return Err(GraphError::VertexOutOfRange { vertex: u, n });
            }
            if v >= n {
                return Err(GraphError::VertexOutOfRange { vertex: v, n });
            }
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            set.insert((u.min(v), u.max(v)));
            neighbors[u].insert(v);
            neighbors[v].insert(u);
        }
        Ok(Self { n, edges: set, neighbors })
    }

    /// The empty graph on `n` vertices.
    pub fn empty(n: usize) -> Self {
        Self { n, edges: BTreeSet::new(), neighbors: vec![BTreeSet::new(); n] }
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.edges.iter().copied()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.edges.contains(&(u.min(v), u.max(v)))
    }

    pub fn neighbors(&self, v: usize) -> &BTreeSet<usize> {
        &self.neighbors[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.neighbors[v].len()
    }

    pub fn degrees(&self) -> Vec<usize> {
        (0..self.n).map(|v| self.degree(v)).collect()
    }

    pub fn max_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    pub fn min_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).min().unwrap_or(0)
    }

    pub fn is_regular(&self) -> bool {
        self.max_degree() == self.min_degree()
    }

    /// Number of vertices adjacent to both `u` and `v`. Since the graph is
    /// simple, neither endpoint can appear in the intersection.
    pub fn common_neighbors(&self, u: usize, v: usize) -> usize {
        self.neighbors[u].intersection(&self.neighbors[v]).count()
    }

    /// Complement on the same vertex set.
    pub fn complement(&self) -> Graph {
        let mut edges = Vec::new();
        for u in 0..self.n {
            for v in (u + 1)..self.n {
                if !self.has_edge(u, v) {
                    edges.push((u, v));
                }
            }
        }
        Graph::new(self.n, edges).expect("complement edges are in range")
    }

    /// Graph on the same vertices whose edges are exactly the pairs at
    /// shortest-path distance two, computed by breadth-first search from
    /// each vertex.
    pub fn derived_graph(&self) -> Graph {
        let mut edges = Vec::new();
        for s in 0..self.n {
            for (v, d) in self.bfs_distances(s).into_iter().enumerate() {
                if d == Some(2) && s < v {
                    edges.push((s, v));
                }
            }
        }
        Graph::new(self.n, edges).expect("derived edges are in range")
    }

    fn bfs_distances(&self, start: usize) -> Vec<Option<usize>> {
        let mut dist = vec![None; self.n];
        dist[start] = Some(0);
        let mut queue = VecDeque::from([start]);
        while let Some(u) = queue.pop_front() {
            let du = dist[u].unwrap();
            for &v in &self.neighbors[u] {
                if dist[v].is_none() {
                    dist[v] = Some(du + 1);
                    queue.push_back(v);
                }
            }
        }
        dist
    }

    /// True when no three mutually adjacent vertices exist. An edge whose
    /// endpoints share a neighbor closes a triangle.
    pub fn is_triangle_free(&self) -> bool {
        self.edges
            .iter()
            .all(|&(u, v)| self.common_neighbors(u, v) == 0)
    }

    /// True when no 4-cycle exists as a subgraph. A vertex pair with two or
    /// more common neighbors spans a 4-cycle, adjacent or not.
    pub fn is_quadrangle_free(&self) -> bool {
        for u in 0..self.n {
            for v in (u + 1)..self.n {
                if self.common_neighbors(u, v) >= 2 {
                    return false;
                }
            }
        }
        true
    }

    pub fn is_connected(&self) -> bool {
        if self.n == 0 {
            return true;
        }
        self.bfs_distances(0).iter().all(|d| d.is_some())
    }

    /// Serializes to the edge-list text format accepted by
    /// [`parse_edge_list`]: vertex count, then one `u v` line per edge.
    pub fn to_edge_list(&self) -> String {
        let mut out = format!("{}\n", self.n);
        for (u, v) in &self.edges {
            out.push_str(&format!("{u} {v}\n"));
        }
        out
    }
}

impl fmt::Display for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "graph(n={}, e={})", self.n, self.edges.len())
    }
}

/// Block-relabeled union: vertices of each graph are shifted past the ones
/// before it, so vertex and edge counts both add up.
pub fn disjoint_union(graphs: &[Graph]) -> Graph {
    let n: usize = graphs.iter().map(|g| g.n).sum();
    let mut edges = Vec::new();
    let mut offset = 0;
    for g in graphs {
        edges.extend(g.edges().map(|(u, v)| (u + offset, v + offset)));
        offset += g.n;
    }
    Graph::new(n, edges).expect("relabeled edges are in range")
}

/// Disjoint union plus every cross edge between the two vertex blocks.
pub fn join(g: &Graph, h: &Graph) -> Graph {
    let base = disjoint_union(&[g.clone(), h.clone()]);
    let mut edges: Vec<(usize, usize)> = base.edges().collect();
    for u in 0..g.n {
        for v in 0..h.n {
            edges.push((u, g.n + v));
        }
    }
    Graph::new(base.n, edges).expect("join edges are in range")
}

/// Parses the line-oriented edge-list format: the first non-comment line is
/// the vertex count, each following line one `u v` edge. `#` starts a
/// comment, duplicate edges collapse.
pub fn parse_edge_list(text: &str) -> Result<Graph, EdgeListError> {
    let mut n: Option<usize> = None;
    let mut edges = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let content = raw.split('#').next().unwrap_or("").trim();
        if content.is_empty() {
            continue;
        }
        let tokens: Vec<&str> = content.split_whitespace().collect();
        let parse =
            |tok: &str| -> Result<usize, EdgeListError> {
                tok.parse().map_err(|_| EdgeListError::MalformedToken {
                    line,
                    token: tok.to_string(),
                })
            };
        match n {
            None => {
                if tokens.len() != 1 {
                    return Err(EdgeListError::BadEdgeLine { line });
                }
                n = Some(parse(tokens[0])?);
            }
            Some(n) => {
                if tokens.len() != 2 {
                    return Err(EdgeListError::BadEdgeLine { line });
                }
                let u = parse(tokens[0])?;
                let v = parse(tokens[1])?;
                for w in [u, v] {
                    if w >= n {
                        return Err(EdgeListError::VertexOutOfRange { line, vertex: w, n });
                    }
                }
                if u == v {
                    return Err(EdgeListError::SelfLoop { line, vertex: u });
                }
                edges.push((u, v));
            }
        }
    }
    let n = n.ok_or(EdgeListError::MissingHeader)?;
    Ok(Graph::new(n, edges).expect("edges validated above"))
}

/// Iterator over all `2^(n(n-1)/2)` labeled simple graphs on `n` vertices,
/// in increasing edge-subset bitmask order. Supported for `1 <= n <= 7`.
pub fn enumerate_all_labeled_graphs(
    n: usize,
) -> Result<impl Iterator<Item = Graph>, GraphError> {
    if !(1..=7).contains(&n) {
        return Err(GraphError::EnumerationRange(n));
    }
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| ((u + 1)..n).map(move |v| (u, v)))
        .collect();
    let total = 1u64 << pairs.len();
    Ok((0..total).map(move |mask| {
        let edges = pairs
            .iter()
            .enumerate()
            .filter(|(b, _)| mask >> b & 1 == 1)
            .map(|(_, &p)| p);
        Graph::new(n, edges).expect("enumerated edges are in range")
    }))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn path(n: usize) -> Graph {
        Graph::new(n, (0..n.saturating_sub(1)).map(|i| (i, i + 1))).unwrap()
    }

    fn complete(n: usize) -> Graph {
        let edges = (0..n).flat_map(|u| ((u + 1)..n).map(move |v| (u, v)));
        Graph::new(n, edges).unwrap()
    }

    fn cycle(n: usize) -> Graph {
        let mut edges: Vec<_> = (0..n - 1).map(|i| (i, i + 1)).collect();
        edges.push((n - 1, 0));
        Graph::new(n, edges).unwrap()
    }

    #[test]
    fn parse_edge_list_examples() {
        let g = parse_edge_list("4\n0 1\n1 2\n2 3").unwrap();
        assert_eq!(g.vertex_count(), 4);
        assert_eq!(g.edge_count(), 3);
        assert!(g.has_edge(0, 1) && g.has_edge(1, 2) && g.has_edge(2, 3));

        let k1 = parse_edge_list("1").unwrap();
        assert_eq!((k1.vertex_count(), k1.edge_count()), (1, 0));

        let dup = parse_edge_list("3\n0 1\n0 1\n1 2").unwrap();
        assert_eq!(dup.edge_count(), 2);
        assert!(dup.has_edge(0, 1) && dup.has_edge(1, 2));
    }

    #[test]
    fn parse_edge_list_comments_and_errors() {
        let g = parse_edge_list("# header\n3 # three vertices\n0 1\n\n# done\n1 2").unwrap();
        assert_eq!(g.edge_count(), 2);

        assert_eq!(
            parse_edge_list("3\n0 3"),
            Err(EdgeListError::VertexOutOfRange { line: 2, vertex: 3, n: 3 })
        );
        assert_eq!(
            parse_edge_list("3\n1 1"),
            Err(EdgeListError::SelfLoop { line: 2, vertex: 1 })
        );
        assert_eq!(
            parse_edge_list("2\n0 x"),
            Err(EdgeListError::MalformedToken { line: 2, token: "x".into() })
        );
        assert_eq!(parse_edge_list("# nothing"), Err(EdgeListError::MissingHeader));
    }

    #[test]
    fn edge_list_round_trip() {
        let g = parse_edge_list("5\n0 1\n1 2\n0 4").unwrap();
        let back = parse_edge_list(&g.to_edge_list()).unwrap();
        assert_eq!(g, back);
    }

    #[test]
    fn complement_examples() {
        let k4c = complete(4).complement();
        assert_eq!(k4c.edge_count(), 0);

        // C5 is self-complementary.
        let c5c = cycle(5).complement();
        assert_eq!(c5c.edge_count(), 5);
        assert!((0..5).all(|v| c5c.degree(v) == 2));
        assert!(c5c.is_connected());

        let g = parse_edge_list("6\n0 1\n2 3\n4 5\n1 4").unwrap();
        assert_eq!(g.complement().complement(), g);
        assert_eq!(
            g.edge_count() + g.complement().edge_count(),
            6 * 5 / 2
        );
    }

    #[test]
    fn union_and_join() {
        let u = disjoint_union(&[complete(4), complete(6)]);
        assert_eq!((u.vertex_count(), u.edge_count()), (10, 21));

        let plus_isolated = disjoint_union(&[path(3), Graph::empty(1)]);
        assert_eq!(plus_isolated.vertex_count(), 4);
        assert_eq!(plus_isolated.degree(3), 0);

        // join of empty graphs is complete bipartite
        let k23 = join(&Graph::empty(2), &Graph::empty(3));
        assert_eq!(k23.edge_count(), 6);
        assert_eq!(k23.degrees(), vec![3, 3, 2, 2, 2]);

        // join of completes is complete
        let k5 = join(&complete(2), &complete(3));
        assert_eq!(k5.edge_count(), 10);

        // join of K1 with empty is a star
        let s3 = join(&complete(1), &Graph::empty(3));
        assert_eq!(s3.degrees(), vec![3, 1, 1, 1]);
    }

    #[test]
    fn derived_graph_examples() {
        let d = path(4).derived_graph();
        assert_eq!(d.edges().collect::<Vec<_>>(), vec![(0, 2), (1, 3)]);

        // C5 derived is again a 5-cycle: connected and 2-regular.
        let d5 = cycle(5).derived_graph();
        assert_eq!(d5.edge_count(), 5);
        assert!((0..5).all(|v| d5.degree(v) == 2));
        assert!(d5.is_connected());

        // complete graphs have diameter 1
        assert_eq!(complete(5).derived_graph().edge_count(), 0);
    }

    #[test]
    fn derived_graph_disjoint_from_original() {
        for g in enumerate_all_labeled_graphs(5).unwrap() {
            let d = g.derived_graph();
            assert!(d.edges().all(|(u, v)| !g.has_edge(u, v)));
        }
    }

    #[test]
    fn cycle_predicates() {
        assert!(!complete(3).is_triangle_free());
        let c4 = cycle(4);
        assert!(c4.is_triangle_free());
        assert!(!c4.is_quadrangle_free());
        // paths are trees: both predicates hold
        assert!(path(6).is_triangle_free());
        assert!(path(6).is_quadrangle_free());
    }

    #[test]
    fn enumeration_counts() {
        assert_eq!(enumerate_all_labeled_graphs(3).unwrap().count(), 8);
        assert_eq!(enumerate_all_labeled_graphs(4).unwrap().count(), 64);
        let with_ten_edges = enumerate_all_labeled_graphs(5)
            .unwrap()
            .filter(|g| g.edge_count() == 10)
            .count();
        assert_eq!(with_ten_edges, 1);
        assert!(enumerate_all_labeled_graphs(0).is_err());
        assert!(enumerate_all_labeled_graphs(8).is_err());
    }

    #[test]
    fn rejects_bad_construction() {
        assert_eq!(
            Graph::new(3, [(0, 3)]),
            Err(GraphError::VertexOutOfRange { vertex: 3, n: 3 })
        );
        assert_eq!(Graph::new(3, [(1, 1)]), Err(GraphError::SelfLoop(1)));
    }

    #[test]
    fn neighbor_sets_consistent() {
        let g = parse_edge_list("5\n0 1\n1 2\n3 4\n0 4").unwrap();
        for u in 0..5 {
            for v in 0..5 {
                assert_eq!(g.neighbors(u).contains(&v), g.has_edge(u, v));
            }
            assert_eq!(g.degree(u), g.neighbors(u).len());
        }
    }
}
