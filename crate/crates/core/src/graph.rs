//! Simple undirected graphs on at most 64 vertices.

use std::collections::VecDeque;
use std::fmt;

use crate::{Error, Result, VertexSet, MAX_VERTICES};

/// A simple undirected graph on vertices `0..n`.
///
/// `adj[v]` is the open neighbourhood of `v` as a bitset. The relation is
/// kept symmetric and irreflexive by every constructor.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<u64>,
}

/// A hop count or the explicit "unreachable / no cycle" value.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Length {
    Finite(usize),
    Infinite,
}

impl Length {
    pub fn finite(self) -> Option<usize> {
        match self {
            Length::Finite(d) => Some(d),
            Length::Infinite => None,
        }
    }
}

impl fmt::Display for Length {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Length::Finite(d) => write!(f, "{d}"),
            Length::Infinite => write!(f, "inf"),
        }
    }
}

/// All-pairs hop distances.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DistanceMatrix {
    n: usize,
    d: Vec<Length>,
}

impl DistanceMatrix {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn get(&self, u: usize, v: usize) -> Length {
        self.d[u * self.n + v]
    }

    /// True iff every two distinct members of `s` are at distance at least `k`.
    pub fn pairwise_at_least(&self, s: VertexSet, k: usize) -> bool {
        s.iter().all(|a| {
            s.above(a)
                .iter()
                .all(|b| self.get(a, b) >= Length::Finite(k))
        })
    }
}

/// `G[X]` together with the map from new to original vertex labels.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InducedSubgraph {
    pub graph: Graph,
    /// `vertices[i]` is the original label of new vertex `i`.
    pub vertices: Vec<usize>,
}

impl Graph {
    /// The edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Result<Self> {
        if n > MAX_VERTICES {
            return Err(Error::TooManyVertices { n });
        }
        Ok(Graph { n, adj: vec![0; n] })
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Graph::empty(n)?;
        for &(u, v) in edges {
            for w in [u, v] {
                if w >= n {
                    return Err(Error::VertexOutOfRange { vertex: w, n });
                }
            }
            if u == v {
                return Err(Error::SelfLoop { line: 0, vertex: u });
            }
            g.add_edge(u, v);
        }
        Ok(g)
    }

    /// Build from adjacency rows; rows are masked, symmetrized and stripped of loops.
    pub(crate) fn from_rows(n: usize, rows: &[u64]) -> Self {
        debug_assert!(n <= MAX_VERTICES && rows.len() == n);
        let mask = VertexSet::full(n).bits();
        let mut g = Graph { n, adj: vec![0; n] };
        for (u, &row) in rows.iter().enumerate() {
            for v in VertexSet::from_bits(row & mask & !(1u64 << u)) {
                g.add_edge(u, v);
            }
        }
        g
    }

    pub(crate) fn add_edge(&mut self, u: usize, v: usize) {
        debug_assert!(u != v && u < self.n && v < self.n);
        self.adj[u] |= 1u64 << v;
        self.adj[v] |= 1u64 << u;
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.n)
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> VertexSet {
        VertexSet::from_bits(self.adj[v])
    }

    #[inline]
    pub fn closed_neighbors(&self, v: usize) -> VertexSet {
        VertexSet::from_bits(self.adj[v] | (1u64 << v))
    }

    /// `N(A)`: the union of the open neighbourhoods of the members of `a`.
    pub fn neighbors_of_set(&self, a: VertexSet) -> VertexSet {
        a.iter()
            .fold(VertexSet::EMPTY, |acc, v| acc.union(self.neighbors(v)))
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u] >> v & 1 == 1
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    pub fn edge_count(&self) -> usize {
        self.adj
            .iter()
            .map(|r| r.count_ones() as usize)
            .sum::<usize>()
            / 2
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |u| self.neighbors(u).above(u).iter().map(move |v| (u, v)))
    }

    pub fn is_stable(&self, s: VertexSet) -> bool {
        s.iter().all(|v| self.neighbors(v).is_disjoint(s))
    }

    pub fn is_clique(&self, s: VertexSet) -> bool {
        s.iter().all(|v| {
            s.difference(VertexSet::singleton(v))
                .is_subset(self.neighbors(v))
        })
    }

    /// Does `d` dominate the graph (every vertex in `d` or adjacent to it)?
    pub fn is_dominating(&self, d: VertexSet) -> bool {
        let covered = d.iter().fold(VertexSet::EMPTY, |acc, v| {
            acc.union(self.closed_neighbors(v))
        });
        covered == self.vertices()
    }

    /// Degree-one vertices.
    pub fn pendant_vertices(&self) -> VertexSet {
        (0..self.n).filter(|&v| self.degree(v) == 1).collect()
    }

    pub fn isolated_vertices(&self) -> VertexSet {
        (0..self.n).filter(|&v| self.adj[v] == 0).collect()
    }

    pub fn is_complete(&self) -> bool {
        (0..self.n).all(|v| self.degree(v) + 1 == self.n)
    }

    /// `G²`: same vertices, `uv` an edge iff `1 <= dist(u, v) <= 2`.
    pub fn square(&self) -> Graph {
        let adj = (0..self.n)
            .map(|u| {
                let reach = self
                    .neighbors(u)
                    .iter()
                    .fold(self.adj[u], |acc, w| acc | self.adj[w]);
                reach & !(1u64 << u)
            })
            .collect();
        Graph { n: self.n, adj }
    }

    pub fn complement(&self) -> Graph {
        let full = VertexSet::full(self.n).bits();
        let adj = (0..self.n)
            .map(|u| !self.adj[u] & full & !(1u64 << u))
            .collect();
        Graph { n: self.n, adj }
    }

    /// BFS layers from `source`, as a distance row.
    fn bfs(&self, source: usize) -> Vec<Length> {
        let mut dist = vec![Length::Infinite; self.n];
        dist[source] = Length::Finite(0);
        let mut seen = VertexSet::singleton(source);
        let mut frontier = seen;
        let mut depth = 0;
        while !frontier.is_empty() {
            depth += 1;
            let next = self.neighbors_of_set(frontier).difference(seen);
            for v in next {
                dist[v] = Length::Finite(depth);
            }
            seen = seen.union(next);
            frontier = next;
        }
        dist
    }

    pub fn distance_matrix(&self) -> DistanceMatrix {
        let d = (0..self.n).flat_map(|s| self.bfs(s)).collect();
        DistanceMatrix { n: self.n, d }
    }

    /// The component containing `v`.
    pub fn component_of(&self, v: usize) -> VertexSet {
        let mut seen = VertexSet::singleton(v);
        let mut frontier = seen;
        while !frontier.is_empty() {
            let next = self.neighbors_of_set(frontier).difference(seen);
            seen = seen.union(next);
            frontier = next;
        }
        seen
    }

    /// Connected components, sorted by their minimum vertex.
    pub fn components(&self) -> Vec<VertexSet> {
        let mut rest = self.vertices();
        let mut out = Vec::new();
        while let Some(v) = rest.min() {
            let c = self.component_of(v);
            rest = rest.difference(c);
            out.push(c);
        }
        out
    }

    /// The null graph is not considered connected.
    pub fn is_connected(&self) -> bool {
        self.n > 0 && self.component_of(0) == self.vertices()
    }

    pub fn induced_subgraph(&self, x: VertexSet) -> InducedSubgraph {
        let vertices = x.to_vec();
        let mut pos = [usize::MAX; MAX_VERTICES];
        for (i, &v) in vertices.iter().enumerate() {
            pos[v] = i;
        }
        let adj = vertices
            .iter()
            .map(|&v| {
                self.neighbors(v)
                    .intersection(x)
                    .iter()
                    .fold(0u64, |acc, w| acc | 1u64 << pos[w])
            })
            .collect();
        InducedSubgraph {
            graph: Graph {
                n: vertices.len(),
                adj,
            },
            vertices,
        }
    }

    /// `G[(s1 - s2) ∪ (s2 - s1)]`.
    pub fn symmetric_difference_subgraph(&self, s1: VertexSet, s2: VertexSet) -> InducedSubgraph {
        self.induced_subgraph(s1.symmetric_difference(s2))
    }

    /// Length of a shortest cycle.
    pub fn girth(&self) -> Length {
        let mut best = Length::Infinite;
        for root in 0..self.n {
            let mut dist = vec![usize::MAX; self.n];
            let mut parent = vec![usize::MAX; self.n];
            dist[root] = 0;
            let mut queue = VecDeque::from([root]);
            while let Some(u) = queue.pop_front() {
                for w in self.neighbors(u) {
                    if dist[w] == usize::MAX {
                        dist[w] = dist[u] + 1;
                        parent[w] = u;
                        queue.push_back(w);
                    } else if parent[u] != w {
                        let len = Length::Finite(dist[u] + dist[w] + 1);
                        if len < best {
                            best = len;
                        }
                    }
                }
            }
        }
        best
    }

    /// A perfect elimination ordering if the graph is chordal.
    ///
    /// Maximum cardinality search numbers vertices from last to first; the
    /// reverse of the visit order is then checked to be a PEO.
    pub fn perfect_elimination_order(&self) -> Option<Vec<usize>> {
        let mut weight = vec![0usize; self.n];
        let mut numbered = VertexSet::EMPTY;
        let mut visit = Vec::with_capacity(self.n);
        for _ in 0..self.n {
            let v = self
                .vertices()
                .difference(numbered)
                .iter()
                .max_by_key(|&v| (weight[v], std::cmp::Reverse(v)))
                .expect("unnumbered vertex remains");
            numbered.insert(v);
            visit.push(v);
            for w in self.neighbors(v).difference(numbered) {
                weight[w] += 1;
            }
        }
        let order: Vec<usize> = visit.into_iter().rev().collect();
        let mut position = vec![0usize; self.n];
        for (i, &v) in order.iter().enumerate() {
            position[v] = i;
        }
        for (i, &v) in order.iter().enumerate() {
            let later: VertexSet = self
                .neighbors(v)
                .iter()
                .filter(|&w| position[w] > i)
                .collect();
            if !self.is_clique(later) {
                return None;
            }
        }
        Some(order)
    }

    pub fn is_chordal(&self) -> bool {
        self.perfect_elimination_order().is_some()
    }

    pub fn is_bipartite(&self) -> bool {
        let mut side = vec![None; self.n];
        for root in 0..self.n {
            if side[root].is_some() {
                continue;
            }
            side[root] = Some(false);
            let mut queue = VecDeque::from([root]);
            while let Some(u) = queue.pop_front() {
                let s = side[u].expect("queued vertices are coloured");
                for w in self.neighbors(u) {
                    match side[w] {
                        None => {
                            side[w] = Some(!s);
                            queue.push_back(w);
                        }
                        Some(t) if t == s => return false,
                        Some(_) => {}
                    }
                }
            }
        }
        true
    }

    /// All maximal cliques, sorted.
    pub fn maximal_cliques(&self) -> Vec<VertexSet> {
        crate::solve::maximal_cliques_of(&self.adj)
    }

    pub fn is_tree(&self) -> bool {
        self.is_connected() && self.edge_count() + 1 == self.n
    }

    pub fn has_isolated_vertex(&self) -> bool {
        self.adj.contains(&0)
    }

    /// Apply a relabeling: vertex `v` becomes `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Graph {
        let mut g = Graph {
            n: self.n,
            adj: vec![0; self.n],
        };
        for (u, v) in self.edges() {
            g.add_edge(perm[u], perm[v]);
        }
        g
    }

    /// Parse the edge-list text format.
    ///
    /// One `u v` pair per line; `#` starts a comment; an optional
    /// `n <count>` line fixes the vertex count, otherwise it is one more
    /// than the largest label seen.
    pub fn parse_edge_list(text: &str) -> Result<Graph> {
        let mut declared = None;
        let mut edges = Vec::new();
        for (idx, raw) in text.lines().enumerate() {
            let line = idx + 1;
            let body = raw.split('#').next().unwrap_or("").trim();
            if body.is_empty() {
                continue;
            }
            let tokens: Vec<&str> = body.split_whitespace().collect();
            if tokens[0] == "n" {
                if tokens.len() != 2 {
                    return Err(Error::MalformedLine { line });
                }
                declared = Some(parse_index(tokens[1], line)?);
                continue;
            }
            if tokens.len() != 2 {
                return Err(Error::MalformedLine { line });
            }
            let u = parse_index(tokens[0], line)?;
            let v = parse_index(tokens[1], line)?;
            if u == v {
                return Err(Error::SelfLoop { line, vertex: u });
            }
            edges.push((u, v));
        }
        let inferred = edges.iter().map(|&(u, v)| u.max(v) + 1).max();
        let n = match (declared, inferred) {
            (Some(n), Some(m)) if m > n => {
                let vertex = m - 1;
                return Err(Error::VertexOutOfRange { vertex, n });
            }
            (Some(n), _) => n,
            (None, Some(m)) => m,
            (None, None) => return Err(Error::EmptyInput),
        };
        Graph::from_edges(n, &edges)
    }

    /// Edge-list text with an explicit `n` header.
    pub fn to_edge_list(&self) -> String {
        let mut out = format!("n {}\n", self.n);
        for (u, v) in self.edges() {
            out.push_str(&format!("{u} {v}\n"));
        }
        out
    }

    /// Decode one graph6 line (leading `>>graph6<<` header allowed).
    pub fn parse_graph6(text: &str) -> Result<Graph> {
        let text = text.trim();
        let text = text.strip_prefix(">>graph6<<").unwrap_or(text);
        let bytes = text.as_bytes();
        if bytes.is_empty() {
            return Err(Error::EmptyInput);
        }
        if let Some(&b) = bytes.iter().find(|&&b| !(63..=126).contains(&b)) {
            return Err(Error::Graph6(format!("byte {b:#04x} outside 63..=126")));
        }
        let (n, body) = if bytes[0] != 126 {
            (usize::from(bytes[0] - 63), &bytes[1..])
        } else if bytes.len() >= 4 && bytes[1] != 126 {
            let n = bytes[1..4]
                .iter()
                .fold(0usize, |acc, &b| (acc << 6) | usize::from(b - 63));
            (n, &bytes[4..])
        } else {
            return Err(Error::Graph6("unsupported size prefix".into()));
        };
        if n > MAX_VERTICES {
            return Err(Error::TooManyVertices { n });
        }
        let bits = n * n.saturating_sub(1) / 2;
        let need = bits.div_ceil(6);
        if body.len() != need {
            return Err(Error::Graph6(format!(
                "expected {need} payload bytes for n = {n}, found {}",
                body.len()
            )));
        }
        let mut g = Graph::empty(n)?;
        let mut k = 0;
        for j in 1..n {
            for i in 0..j {
                let byte = body[k / 6] - 63;
                if byte >> (5 - k % 6) & 1 == 1 {
                    g.add_edge(i, j);
                }
                k += 1;
            }
        }
        Ok(g)
    }

    pub fn to_graph6(&self) -> String {
        let mut out = Vec::new();
        if self.n <= 62 {
            out.push(self.n as u8 + 63);
        } else {
            out.push(126);
            for shift in [12, 6, 0] {
                out.push(((self.n >> shift) & 63) as u8 + 63);
            }
        }
        let mut acc = 0u8;
        let mut k = 0;
        for j in 1..self.n {
            for i in 0..j {
                acc = acc << 1 | u8::from(self.has_edge(i, j));
                k += 1;
                if k % 6 == 0 {
                    out.push(acc + 63);
                    acc = 0;
                }
            }
        }
        if k % 6 != 0 {
            out.push((acc << (6 - k % 6)) + 63);
        }
        String::from_utf8(out).expect("graph6 is ASCII")
    }
}

fn parse_index(token: &str, line: usize) -> Result<usize> {
    token.parse::<usize>().map_err(|_| Error::InvalidToken {
        line,
        token: token.to_string(),
    })
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges=[", self.n)?;
        for (i, (u, v)) in self.edges().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{u}-{v}")?;
        }
        write!(f, "])")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn path(n: usize) -> Graph {
        let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        Graph::from_edges(n, &edges).unwrap()
    }

    fn cycle(n: usize) -> Graph {
        let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Graph::from_edges(n, &edges).unwrap()
    }

    fn complete(n: usize) -> Graph {
        Graph::from_rows(n, &vec![u64::MAX; n])
    }

    fn set(vs: &[usize]) -> VertexSet {
        vs.iter().copied().collect()
    }

    #[test]
    fn edge_list_parses_path() {
        let g = Graph::parse_edge_list("0 1\n1 2\n2 3").unwrap();
        assert_eq!(g, path(4));
    }

    #[test]
    fn edge_list_header_and_comments() {
        let g = Graph::parse_edge_list("# three isolated vertices\nn 3\n").unwrap();
        assert_eq!(g.n(), 3);
        assert_eq!(g.edge_count(), 0);
        let g = Graph::parse_edge_list("0 1 # first\n1 0\n0 1\n").unwrap();
        assert_eq!(g.edge_count(), 1);
    }

    #[test]
    fn edge_list_errors() {
        assert_eq!(
            Graph::parse_edge_list("0 0"),
            Err(Error::SelfLoop { line: 1, vertex: 0 })
        );
        assert!(matches!(
            Graph::parse_edge_list("0 1\n1 x"),
            Err(Error::InvalidToken { line: 2, .. })
        ));
        assert!(matches!(
            Graph::parse_edge_list("0 -1"),
            Err(Error::InvalidToken { .. })
        ));
        assert_eq!(Graph::parse_edge_list(""), Err(Error::EmptyInput));
        assert!(matches!(
            Graph::parse_edge_list("n 2\n0 5"),
            Err(Error::VertexOutOfRange { .. })
        ));
        assert!(matches!(
            Graph::parse_edge_list("0 1 2"),
            Err(Error::MalformedLine { line: 1 })
        ));
    }

    #[test]
    fn graph6_small_cases() {
        assert_eq!(Graph::parse_graph6("C~").unwrap(), complete(4));
        assert_eq!(Graph::parse_graph6("A_").unwrap(), complete(2));
        let k1 = Graph::parse_graph6("@").unwrap();
        assert_eq!((k1.n(), k1.edge_count()), (1, 0));
        assert_eq!(Graph::parse_graph6("?").unwrap().n(), 0);
        assert_eq!(complete(4).to_graph6(), "C~");
    }

    #[test]
    fn graph6_errors() {
        assert!(matches!(Graph::parse_graph6("C"), Err(Error::Graph6(_))));
        assert!(matches!(Graph::parse_graph6("C~~"), Err(Error::Graph6(_))));
        assert!(matches!(
            Graph::parse_graph6("A\u{7f}"),
            Err(Error::Graph6(_))
        ));
        assert_eq!(Graph::parse_graph6("  "), Err(Error::EmptyInput));
    }

    #[test]
    fn graph6_long_form_round_trip() {
        let g = cycle(64);
        let s = g.to_graph6();
        assert!(s.starts_with('~'));
        assert_eq!(Graph::parse_graph6(&s).unwrap(), g);
    }

    #[test]
    fn square_examples() {
        assert_eq!(complete(5).square(), complete(5));
        let star = Graph::from_edges(5, &[(0, 1), (0, 2), (0, 3), (0, 4)]).unwrap();
        assert_eq!(star.square(), complete(5));
        let p4sq = path(4).square();
        let expected = Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3), (0, 2), (1, 3)]).unwrap();
        assert_eq!(p4sq, expected);
    }

    #[test]
    fn distances() {
        assert_eq!(path(4).distance_matrix().get(0, 3), Length::Finite(3));
        let g = Graph::from_edges(3, &[(0, 1)]).unwrap();
        assert_eq!(g.distance_matrix().get(0, 2), Length::Infinite);
        assert_eq!(cycle(6).distance_matrix().get(0, 3), Length::Finite(3));
        assert_eq!(cycle(6).distance_matrix().get(4, 4), Length::Finite(0));
    }

    #[test]
    fn components_sorted_by_minimum() {
        let g = Graph::from_edges(5, &[(0, 1), (1, 2), (0, 2), (3, 4)]).unwrap();
        assert_eq!(g.components(), vec![set(&[0, 1, 2]), set(&[3, 4])]);
        assert_eq!(cycle(5).components().len(), 1);
        assert_eq!(
            Graph::empty(3).unwrap().components(),
            vec![set(&[0]), set(&[1]), set(&[2])]
        );
    }

    #[test]
    fn complement_examples() {
        assert_eq!(complete(4).complement().edge_count(), 0);
        let c5c = cycle(5).complement();
        // 0-2-4-1-3-0 is the complement cycle
        let relabeled = Graph::from_edges(5, &[(0, 2), (2, 4), (4, 1), (1, 3), (3, 0)]).unwrap();
        assert_eq!(c5c, relabeled);
    }

    #[test]
    fn induced_subgraphs() {
        let empty = cycle(6).induced_subgraph(VertexSet::EMPTY);
        assert_eq!(empty.graph.n(), 0);
        let p3 = cycle(6).induced_subgraph(set(&[0, 1, 2]));
        assert_eq!(p3.graph, path(3));
        assert_eq!(p3.vertices, vec![0, 1, 2]);
        let c = cycle(6);
        assert_eq!(c.induced_subgraph(c.vertices()).graph, c);
        let remapped = cycle(6).induced_subgraph(set(&[1, 3, 4]));
        assert_eq!(remapped.graph, Graph::from_edges(3, &[(1, 2)]).unwrap());
        assert_eq!(remapped.vertices, vec![1, 3, 4]);
    }

    #[test]
    fn symmetric_difference_examples() {
        let p4 = path(4);
        assert_eq!(
            p4.symmetric_difference_subgraph(set(&[0, 3]), set(&[0, 3]))
                .graph
                .n(),
            0
        );
        let h = p4.symmetric_difference_subgraph(set(&[0, 3]), set(&[0, 2]));
        assert_eq!(h.vertices, vec![2, 3]);
        assert_eq!(h.graph, complete(2));
        let h = p4.symmetric_difference_subgraph(set(&[0]), set(&[1, 2]));
        assert_eq!(h.graph, path(3));
    }

    #[test]
    fn girth_examples() {
        assert_eq!(cycle(6).girth(), Length::Finite(6));
        assert_eq!(path(7).girth(), Length::Infinite);
        let diamond = Graph::from_edges(4, &[(0, 1), (0, 2), (1, 2), (1, 3), (2, 3)]).unwrap();
        assert_eq!(diamond.girth(), Length::Finite(3));
        assert_eq!(cycle(5).girth(), Length::Finite(5));
        assert_eq!(Graph::empty(0).unwrap().girth(), Length::Infinite);
    }

    #[test]
    fn chordality() {
        assert!(path(6).is_chordal());
        assert!(!cycle(4).is_chordal());
        let diamond = Graph::from_edges(4, &[(0, 1), (0, 2), (1, 2), (1, 3), (2, 3)]).unwrap();
        let peo = diamond.perfect_elimination_order().unwrap();
        assert_eq!(peo.len(), 4);
        assert!(!cycle(6).is_chordal());
        assert!(complete(6).is_chordal());
    }

    #[test]
    fn trees() {
        assert!(path(4).is_tree());
        assert!(!cycle(4).is_tree());
        assert!(Graph::empty(1).unwrap().is_tree());
        assert!(!Graph::empty(2).unwrap().is_tree());
        assert!(!Graph::empty(0).unwrap().is_tree());
    }

    #[test]
    fn pendants_and_isolated() {
        let g = Graph::from_edges(5, &[(0, 1), (1, 2), (2, 3)]).unwrap();
        assert_eq!(g.pendant_vertices(), set(&[0, 3]));
        assert_eq!(g.isolated_vertices(), set(&[4]));
        assert!(g.has_isolated_vertex());
    }
}
