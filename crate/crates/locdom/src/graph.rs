//! Immutable simple undirected graphs on at most 64 vertices.
//!
//! Vertices are dense integers `0..n-1`. Adjacency is stored as one
//! 64-bit mask per vertex so that neighborhood intersections, the
//! inner loop of every solver, are single word operations. Display
//! names (the `a..f` of hand-drawn figures) live only in optional
//! labels and never affect equality.

use std::collections::VecDeque;
use std::fmt;

use crate::error::{Error, Result};

/// Hard cap imposed by the one-word adjacency rows.
pub const MAX_VERTICES: usize = 64;

#[derive(Clone)]
pub struct Graph {
    n: usize,
    /// Open neighborhoods: bit `v` of `adj[u]` is set iff `uv` is an edge.
    adj: Vec<u64>,
    labels: Option<Vec<String>>,
}

impl PartialEq for Graph {
    /// Labeled equality: same order and same edge set. Labels are
    /// display metadata and do not participate.
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n && self.adj == other.adj
    }
}

impl Eq for Graph {}

impl std::hash::Hash for Graph {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.n.hash(state);
        self.adj.hash(state);
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges().collect::<Vec<_>>())
    }
}

impl Graph {
    /// Builds a graph from an explicit edge list. Duplicate edges are
    /// collapsed; self-loops and out-of-range endpoints are rejected.
    pub fn new(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        if n == 0 {
            return Err(Error::EmptyGraph);
        }
        if n > MAX_VERTICES {
            return Err(Error::TooManyVertices(n));
        }
        let mut adj = vec![0u64; n];
        for &(u, v) in edges {
            if u >= n {
                return Err(Error::VertexOutOfRange { vertex: u, order: n });
            }
            if v >= n {
                return Err(Error::VertexOutOfRange { vertex: v, order: n });
            }
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            adj[u] |= 1 << v;
            adj[v] |= 1 << u;
        }
        Ok(Graph { n, adj, labels: None })
    }

    /// Builds a graph directly from open-neighborhood rows.
    /// The rows must already be symmetric and irreflexive.
    pub(crate) fn from_rows(adj: Vec<u64>) -> Self {
        let n = adj.len();
        debug_assert!(n >= 1 && n <= MAX_VERTICES);
        debug_assert!((0..n).all(|u| adj[u] >> n == 0 && adj[u] & (1 << u) == 0));
        debug_assert!((0..n).all(|u| (0..n).all(|v| adj[u] >> v & 1 == adj[v] >> u & 1)));
        Graph { n, adj, labels: None }
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Result<Self> {
        if labels.len() != self.n {
            return Err(Error::SelfCheck(format!(
                "{} labels for {} vertices",
                labels.len(),
                self.n
            )));
        }
        self.labels = Some(labels);
        Ok(self)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn label(&self, u: usize) -> Option<&str> {
        self.labels.as_ref().map(|l| l[u].as_str())
    }

    /// Mask with the low `n` bits set: the whole vertex set.
    pub fn all_mask(&self) -> u64 {
        if self.n == 64 {
            u64::MAX
        } else {
            (1u64 << self.n) - 1
        }
    }

    pub fn check_vertex(&self, u: usize) -> Result<()> {
        if u < self.n {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange { vertex: u, order: self.n })
        }
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && self.adj[u] >> v & 1 == 1
    }

    /// Open neighborhood N(u) as a mask.
    pub fn open(&self, u: usize) -> u64 {
        self.adj[u]
    }

    /// Closed neighborhood N[u] as a mask.
    pub fn closed(&self, u: usize) -> u64 {
        self.adj[u] | 1 << u
    }

    pub fn degree(&self, u: usize) -> usize {
        self.adj[u].count_ones() as usize
    }

    pub fn max_degree(&self) -> usize {
        (0..self.n).map(|u| self.degree(u)).max().unwrap_or(0)
    }

    pub fn is_isolated(&self, u: usize) -> bool {
        self.adj[u] == 0
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|m| m.count_ones() as usize).sum::<usize>() / 2
    }

    /// Edges as ordered pairs `(u, v)` with `u < v`.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |u| {
            bits(self.adj[u] >> u >> 1).map(move |d| (u, u + 1 + d))
        })
    }

    pub fn neighbors(&self, u: usize) -> impl Iterator<Item = usize> + '_ {
        bits(self.adj[u])
    }

    pub fn is_connected(&self) -> bool {
        let mut seen = 1u64;
        let mut frontier = 1u64;
        while frontier != 0 {
            let mut next = 0u64;
            for u in bits(frontier) {
                next |= self.adj[u];
            }
            frontier = next & !seen;
            seen |= next;
        }
        seen == self.all_mask()
    }

    pub fn is_tree(&self) -> bool {
        self.is_connected() && self.edge_count() == self.n - 1
    }

    /// BFS distances from `u`; `None` marks unreachable vertices.
    pub fn distances_from(&self, u: usize) -> Result<Vec<Option<usize>>> {
        self.check_vertex(u)?;
        let mut dist = vec![None; self.n];
        dist[u] = Some(0);
        let mut queue = VecDeque::from([u]);
        while let Some(x) = queue.pop_front() {
            let dx = dist[x].unwrap();
            for y in self.neighbors(x) {
                if dist[y].is_none() {
                    dist[y] = Some(dx + 1);
                    queue.push_back(y);
                }
            }
        }
        Ok(dist)
    }

    /// Shortest-path distance; `None` when `u` and `v` are in
    /// different components.
    pub fn distance(&self, u: usize, v: usize) -> Result<Option<usize>> {
        self.check_vertex(v)?;
        Ok(self.distances_from(u)?[v])
    }

    /// Length of a shortest cycle; `None` for forests (infinite girth).
    pub fn girth(&self) -> Option<usize> {
        let mut best: Option<usize> = None;
        for root in 0..self.n {
            // BFS from root; a non-tree edge closing at depths d1, d2
            // witnesses a cycle of length d1 + d2 + 1 through root when
            // root lies on a shortest cycle, so the minimum over all
            // roots is exact.
            let mut depth = vec![usize::MAX; self.n];
            let mut parent = vec![usize::MAX; self.n];
            depth[root] = 0;
            let mut queue = VecDeque::from([root]);
            while let Some(x) = queue.pop_front() {
                for y in self.neighbors(x) {
                    if y == parent[x] {
                        continue;
                    }
                    if depth[y] == usize::MAX {
                        depth[y] = depth[x] + 1;
                        parent[y] = x;
                        queue.push_back(y);
                    } else {
                        let cycle = depth[x] + depth[y] + 1;
                        if best.map_or(true, |b| cycle < b) {
                            best = Some(cycle);
                        }
                    }
                }
            }
        }
        best
    }

    /// Complement: adjacency flipped off the diagonal; labels carry over.
    pub fn complement(&self) -> Graph {
        let all = self.all_mask();
        let adj = (0..self.n)
            .map(|u| !self.adj[u] & all & !(1 << u))
            .collect();
        let mut g = Graph::from_rows(adj);
        g.labels = self.labels.clone();
        g
    }

    /// Cartesian product. Vertex `(u, v)` gets index `u * other.n() + v`;
    /// `(u,v)(u',v')` is an edge iff `u = u'` and `vv'` is an edge of
    /// `other`, or `uu'` is an edge of `self` and `v = v'`. Labels
    /// record the pair.
    pub fn cartesian_product(&self, other: &Graph) -> Result<Graph> {
        let n = self
            .n
            .checked_mul(other.n)
            .filter(|&n| n <= MAX_VERTICES)
            .ok_or(Error::TooManyVertices(self.n.saturating_mul(other.n)))?;
        let idx = |u: usize, v: usize| u * other.n + v;
        let mut adj = vec![0u64; n];
        for u in 0..self.n {
            for v in 0..other.n {
                let mut row = 0u64;
                for w in other.neighbors(v) {
                    row |= 1 << idx(u, w);
                }
                for w in self.neighbors(u) {
                    row |= 1 << idx(w, v);
                }
                adj[idx(u, v)] = row;
            }
        }
        let name = |g: &Graph, u: usize| {
            g.label(u).map_or_else(|| u.to_string(), str::to_owned)
        };
        let labels = (0..self.n)
            .flat_map(|u| {
                (0..other.n).map(move |v| (u, v))
            })
            .map(|(u, v)| format!("({},{})", name(self, u), name(other, v)))
            .collect();
        Graph::from_rows(adj).with_labels(labels)
    }

    /// Parses the "n m" edge-list fixture format: a header line with
    /// the vertex and edge counts followed by one "u v" line per edge.
    /// Blank lines and lines starting with `#` are ignored.
    pub fn parse_edge_list(text: &str) -> Result<Graph> {
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.trim()))
            .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
        let (line, header) = lines.next().ok_or(Error::EdgeListParse {
            line: 0,
            reason: "empty input".into(),
        })?;
        let parse_pair = |line: usize, s: &str| -> Result<(usize, usize)> {
            let mut it = s.split_whitespace();
            let err = |reason: &str| Error::EdgeListParse {
                line,
                reason: reason.into(),
            };
            let a = it
                .next()
                .ok_or_else(|| err("expected two integers"))?
                .parse()
                .map_err(|_| err("expected an integer"))?;
            let b = it
                .next()
                .ok_or_else(|| err("expected two integers"))?
                .parse()
                .map_err(|_| err("expected an integer"))?;
            if it.next().is_some() {
                return Err(err("trailing tokens"));
            }
            Ok((a, b))
        };
        let (n, m) = parse_pair(line, header)?;
        if n == 0 {
            return Err(Error::EmptyGraph);
        }
        let mut edges = Vec::with_capacity(m);
        for (line, l) in lines {
            if edges.len() == m {
                return Err(Error::EdgeListParse {
                    line,
                    reason: format!("more than the declared {m} edges"),
                });
            }
            edges.push(parse_pair(line, l)?);
        }
        if edges.len() != m {
            return Err(Error::EdgeListParse {
                line: 0,
                reason: format!("declared {m} edges, found {}", edges.len()),
            });
        }
        let g = Graph::new(n, &edges)?;
        if g.edge_count() != m {
            return Err(Error::EdgeListParse {
                line: 0,
                reason: "duplicate edges in fixture".into(),
            });
        }
        Ok(g)
    }
}

/// Iterates the set bit positions of a mask, lowest first.
pub fn bits(mask: u64) -> Bits {
    Bits(mask)
}

pub struct Bits(u64);

impl Iterator for Bits {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            None
        } else {
            let b = self.0.trailing_zeros() as usize;
            self.0 &= self.0 - 1;
            Some(b)
        }
    }
}

/// Collects a mask into a sorted vertex list.
pub fn mask_to_vec(mask: u64) -> Vec<usize> {
    bits(mask).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{generate, GraphFamily};

    #[test]
    fn rejects_bad_input() {
        assert!(matches!(Graph::new(0, &[]), Err(Error::EmptyGraph)));
        assert!(matches!(Graph::new(2, &[(0, 0)]), Err(Error::SelfLoop(0))));
        assert!(matches!(
            Graph::new(2, &[(0, 2)]),
            Err(Error::VertexOutOfRange { vertex: 2, order: 2 })
        ));
        assert!(matches!(Graph::new(65, &[]), Err(Error::TooManyVertices(65))));
    }

    #[test]
    fn adjacency_is_symmetric_and_irreflexive() {
        let g = Graph::new(4, &[(0, 1), (1, 2), (2, 3), (0, 1)]).unwrap();
        assert_eq!(g.edge_count(), 3);
        for u in 0..4 {
            assert!(!g.has_edge(u, u));
            for v in 0..4 {
                assert_eq!(g.has_edge(u, v), g.has_edge(v, u));
            }
        }
    }

    #[test]
    fn distances() {
        let p4 = generate(&GraphFamily::Path { n: 4 }).unwrap();
        assert_eq!(p4.distance(0, 3).unwrap(), Some(3));
        assert_eq!(p4.distance(2, 2).unwrap(), Some(0));
        let d2 = generate(&GraphFamily::Discrete { n: 2 }).unwrap();
        assert_eq!(d2.distance(0, 1).unwrap(), None);
        let c6 = generate(&GraphFamily::Cycle { n: 6 }).unwrap();
        assert_eq!(c6.distance(0, 3).unwrap(), Some(3));
        assert!(p4.distance(0, 9).is_err());
    }

    #[test]
    fn girth_values() {
        let c5 = generate(&GraphFamily::Cycle { n: 5 }).unwrap();
        assert_eq!(c5.girth(), Some(5));
        let k4 = generate(&GraphFamily::Complete { n: 4 }).unwrap();
        assert_eq!(k4.girth(), Some(3));
        // trees have infinite girth
        let star = generate(&GraphFamily::Star { n: 7 }).unwrap();
        assert_eq!(star.girth(), None);
        let spider = Graph::new(7, &[(0, 1), (1, 2), (0, 3), (3, 4), (0, 5), (5, 6)]).unwrap();
        assert_eq!(spider.girth(), None);
        let c4_with_tail = Graph::new(6, &[(0, 1), (1, 2), (2, 3), (3, 0), (3, 4), (4, 5)]).unwrap();
        assert_eq!(c4_with_tail.girth(), Some(4));
    }

    #[test]
    fn complement_involution_and_values() {
        let k4 = generate(&GraphFamily::Complete { n: 4 }).unwrap();
        assert_eq!(k4.complement(), generate(&GraphFamily::Discrete { n: 4 }).unwrap());
        let p3 = generate(&GraphFamily::Path { n: 3 }).unwrap();
        assert_eq!(p3.complement().edges().collect::<Vec<_>>(), vec![(0, 2)]);
        let c5 = generate(&GraphFamily::Cycle { n: 5 }).unwrap();
        assert_eq!(c5.complement().edge_count(), 5);
        assert_eq!(c5.complement().complement(), c5);
        // the complement of a 5-cycle is again a 5-cycle
        assert_eq!(c5.complement().girth(), Some(5));
    }

    #[test]
    fn product_basics() {
        let k2 = generate(&GraphFamily::Complete { n: 2 }).unwrap();
        let c4 = generate(&GraphFamily::Cycle { n: 4 }).unwrap();
        let prod = k2.cartesian_product(&k2).unwrap();
        assert_eq!(prod.n(), 4);
        assert_eq!(prod.edge_count(), 4);
        assert_eq!(prod.girth(), c4.girth());
        assert_eq!(prod.label(1), Some("(0,1)"));
    }

    #[test]
    fn edge_list_round_trip() {
        let g = Graph::parse_edge_list("# fixture\n4 3\n0 1\n1 2\n2 3\n").unwrap();
        assert_eq!(g.n(), 4);
        assert_eq!(g.edges().collect::<Vec<_>>(), vec![(0, 1), (1, 2), (2, 3)]);
        assert!(Graph::parse_edge_list("4 2\n0 1\n").is_err());
        assert!(Graph::parse_edge_list("4 2\n0 1\n0 1\n").is_err());
        assert!(Graph::parse_edge_list("").is_err());
    }
}
