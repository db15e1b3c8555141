//! Matchings: maximum matchings in general graphs, perfect-matching
//! uniqueness, pendant and induced matchings, and matchings of one vertex
//! set into another.

use std::collections::VecDeque;

use serde::Serialize;

use crate::solve::find_stable_subset;
use crate::{Caps, Error, Graph, Result, VertexSet};

const NONE: usize = usize::MAX;

/// A set of pairwise non-incident edges, each stored as `(u, v)` with `u < v`,
/// sorted.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, Serialize)]
pub struct Matching {
    edges: Vec<(usize, usize)>,
}

impl Matching {
    pub fn from_edges<I: IntoIterator<Item = (usize, usize)>>(edges: I) -> Self {
        let mut edges: Vec<_> = edges
            .into_iter()
            .map(|(u, v)| (u.min(v), u.max(v)))
            .collect();
        edges.sort_unstable();
        edges.dedup();
        Matching { edges }
    }

    fn from_mate(mate: &[usize]) -> Self {
        Matching::from_edges(
            mate.iter()
                .enumerate()
                .filter(|&(u, &v)| v != NONE && u < v)
                .map(|(u, &v)| (u, v)),
        )
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    /// Vertices saturated by the matching.
    pub fn covered(&self) -> VertexSet {
        self.edges.iter().flat_map(|&(u, v)| [u, v]).collect()
    }

    /// Every pair is an edge of `g` and no vertex is used twice.
    pub fn is_valid_for(&self, g: &Graph) -> bool {
        self.edges
            .iter()
            .all(|&(u, v)| u < g.n() && v < g.n() && g.has_edge(u, v))
            && self.covered().len() == 2 * self.edges.len()
    }

    pub fn is_perfect_for(&self, g: &Graph) -> bool {
        self.is_valid_for(g) && self.covered() == g.vertices()
    }
}

/// Edmonds' blossom algorithm (BFS from each free vertex, contracting odd
/// cycles through base relabeling).
struct Blossom<'a> {
    g: &'a Graph,
    mate: Vec<usize>,
    parent: Vec<usize>,
    base: Vec<usize>,
    used: Vec<bool>,
    in_blossom: Vec<bool>,
}

impl<'a> Blossom<'a> {
    fn new(g: &'a Graph) -> Self {
        let n = g.n();
        let mut mate = vec![NONE; n];
        // greedy start
        for u in 0..n {
            if mate[u] == NONE {
                if let Some(v) = g.neighbors(u).iter().find(|&v| mate[v] == NONE) {
                    mate[u] = v;
                    mate[v] = u;
                }
            }
        }
        Blossom {
            g,
            mate,
            parent: vec![NONE; n],
            base: (0..n).collect(),
            used: vec![false; n],
            in_blossom: vec![false; n],
        }
    }

    fn lca(&self, mut a: usize, mut b: usize) -> usize {
        let mut seen = vec![false; self.g.n()];
        loop {
            a = self.base[a];
            seen[a] = true;
            if self.mate[a] == NONE {
                break;
            }
            a = self.parent[self.mate[a]];
        }
        loop {
            b = self.base[b];
            if seen[b] {
                return b;
            }
            b = self.parent[self.mate[b]];
        }
    }

    fn mark_path(&mut self, mut v: usize, b: usize, mut child: usize) {
        while self.base[v] != b {
            self.in_blossom[self.base[v]] = true;
            self.in_blossom[self.base[self.mate[v]]] = true;
            self.parent[v] = child;
            child = self.mate[v];
            v = self.parent[self.mate[v]];
        }
    }

    fn find_path(&mut self, root: usize) -> Option<usize> {
        let n = self.g.n();
        self.used.iter_mut().for_each(|x| *x = false);
        self.parent.iter_mut().for_each(|x| *x = NONE);
        for (i, b) in self.base.iter_mut().enumerate() {
            *b = i;
        }
        self.used[root] = true;
        let mut queue = VecDeque::from([root]);
        while let Some(v) = queue.pop_front() {
            for to in self.g.neighbors(v) {
                if self.base[v] == self.base[to] || self.mate[v] == to {
                    continue;
                }
                if to == root || (self.mate[to] != NONE && self.parent[self.mate[to]] != NONE) {
                    let cur = self.lca(v, to);
                    self.in_blossom.iter_mut().for_each(|x| *x = false);
                    self.mark_path(v, cur, to);
                    self.mark_path(to, cur, v);
                    for i in 0..n {
                        if self.in_blossom[self.base[i]] {
                            self.base[i] = cur;
                            if !self.used[i] {
                                self.used[i] = true;
                                queue.push_back(i);
                            }
                        }
                    }
                } else if self.parent[to] == NONE {
                    self.parent[to] = v;
                    if self.mate[to] == NONE {
                        return Some(to);
                    }
                    let next = self.mate[to];
                    self.used[next] = true;
                    queue.push_back(next);
                }
            }
        }
        None
    }

    fn run(mut self) -> Vec<usize> {
        for root in 0..self.g.n() {
            if self.mate[root] != NONE {
                continue;
            }
            if let Some(mut v) = self.find_path(root) {
                while v != NONE {
                    let pv = self.parent[v];
                    let ppv = self.mate[pv];
                    self.mate[v] = pv;
                    self.mate[pv] = v;
                    v = ppv;
                }
            }
        }
        self.mate
    }
}

/// A maximum matching; its size is `μ(G)`.
pub fn maximum_matching(g: &Graph) -> Matching {
    Matching::from_mate(&Blossom::new(g).run())
}

/// How many perfect matchings a graph has, saturated at two.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub enum PerfectMatchingCount {
    None,
    Unique(Matching),
    Multiple,
}

impl PerfectMatchingCount {
    pub fn is_unique(&self) -> bool {
        matches!(self, PerfectMatchingCount::Unique(_))
    }

    pub fn exists(&self) -> bool {
        !matches!(self, PerfectMatchingCount::None)
    }
}

fn without_edge(g: &Graph, u: usize, v: usize) -> Graph {
    let edges: Vec<_> = g.edges().filter(|&e| e != (u, v)).collect();
    Graph::from_edges(g.n(), &edges).expect("subgraph of a valid graph")
}

/// Decide whether `g` has no, exactly one, or several perfect matchings.
///
/// Any second perfect matching avoids some edge of the first, so deleting
/// each matched edge in turn and re-solving decides uniqueness.
pub fn unique_perfect_matching(g: &Graph) -> PerfectMatchingCount {
    if g.n() % 2 == 1 {
        return PerfectMatchingCount::None;
    }
    let m = maximum_matching(g);
    if 2 * m.len() < g.n() {
        return PerfectMatchingCount::None;
    }
    for &(u, v) in m.edges() {
        if 2 * maximum_matching(&without_edge(g, u, v)).len() == g.n() {
            return PerfectMatchingCount::Multiple;
        }
    }
    PerfectMatchingCount::Unique(m)
}

/// The perfect matching made of pendant edges, if there is one.
///
/// Such a matching is forced: every pendant vertex must be matched to its
/// only neighbour.
pub fn pendant_perfect_matching(g: &Graph) -> Option<Matching> {
    let m = Matching::from_edges(g.pendant_vertices().iter().map(|v| {
        let w = g
            .neighbors(v)
            .min()
            .expect("pendant vertex has a neighbour");
        (v, w)
    }));
    m.is_perfect_for(g).then_some(m)
}

/// No edge of `g` joins two distinct edges of `m`.
pub fn is_induced_matching(g: &Graph, m: &Matching) -> bool {
    let edges = m.edges();
    edges.iter().enumerate().all(|(i, &(a, b))| {
        let ends = g.neighbors(a).union(g.neighbors(b));
        edges[i + 1..]
            .iter()
            .all(|&(c, d)| !ends.contains(c) && !ends.contains(d))
    })
}

/// Does `g` have a perfect matching that is also induced? Searches the
/// perfect matchings directly.
pub fn has_induced_perfect_matching(g: &Graph) -> bool {
    fn rec(g: &Graph, free: VertexSet, acc: &mut Vec<(usize, usize)>) -> bool {
        let Some(u) = free.min() else {
            return is_induced_matching(g, &Matching::from_edges(acc.iter().copied()));
        };
        for v in g.neighbors(u).intersection(free) {
            acc.push((u, v));
            let rest = free
                .difference(VertexSet::singleton(u))
                .difference(VertexSet::singleton(v));
            if rec(g, rest, acc) {
                return true;
            }
            acc.pop();
        }
        false
    }
    g.n().is_multiple_of(2) && rec(g, g.vertices(), &mut Vec::new())
}

/// Result of matching `A` into `S`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MatchInto {
    /// Number of `A`-saturating matchings inside `(A, S)`, saturated at 2.
    pub count: u8,
    pub witness: Option<Matching>,
}

/// Kuhn's augmenting-path search restricted to edges between `a` and `s`,
/// skipping one forbidden edge.
fn saturate(
    g: &Graph,
    a: VertexSet,
    s: VertexSet,
    forbid: Option<(usize, usize)>,
) -> Option<Vec<(usize, usize)>> {
    fn try_augment(
        g: &Graph,
        u: usize,
        s: VertexSet,
        forbid: Option<(usize, usize)>,
        seen: &mut VertexSet,
        owner: &mut [usize],
    ) -> bool {
        for w in g.neighbors(u).intersection(s) {
            if forbid == Some((u, w)) || seen.contains(w) {
                continue;
            }
            seen.insert(w);
            if owner[w] == NONE || try_augment(g, owner[w], s, forbid, seen, owner) {
                owner[w] = u;
                return true;
            }
        }
        false
    }
    let mut owner = vec![NONE; g.n()];
    for u in a {
        let mut seen = VertexSet::EMPTY;
        if !try_augment(g, u, s, forbid, &mut seen, &mut owner) {
            return None;
        }
    }
    Some(
        owner
            .iter()
            .enumerate()
            .filter(|&(_, &u)| u != NONE)
            .map(|(w, &u)| (u, w))
            .collect(),
    )
}

/// Count (up to 2) the matchings of `a` into `s` that saturate `a`.
pub fn match_into(g: &Graph, a: VertexSet, s: VertexSet) -> Result<MatchInto> {
    if !a.is_disjoint(s) {
        return Err(Error::Precondition(format!("sets {a} and {s} overlap")));
    }
    let Some(pairs) = saturate(g, a, s, None) else {
        return Ok(MatchInto {
            count: 0,
            witness: None,
        });
    };
    let multiple = pairs.iter().any(|&e| saturate(g, a, s, Some(e)).is_some());
    Ok(MatchInto {
        count: if multiple { 2 } else { 1 },
        witness: Some(Matching::from_edges(pairs)),
    })
}

/// Outcome of [`berge_check`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BergeOutcome {
    pub holds: bool,
    /// A stable set disjoint from `s` that cannot be matched into `s`.
    pub obstruction: Option<VertexSet>,
}

/// Can every stable set disjoint from `s` be matched into `s`?
///
/// A stable `A` matches into `s` iff Hall's condition holds for its subsets,
/// all of which are themselves stable and disjoint from `s`; so it suffices
/// to find a stable `A` with `|N(A) ∩ s| < |A|`.
pub fn berge_check(g: &Graph, s: VertexSet, caps: &Caps) -> Result<BergeOutcome> {
    if !g.is_stable(s) {
        return Err(Error::Precondition(format!("{s} is not stable")));
    }
    caps.check_enumeration(g)?;
    let outside = g.vertices().difference(s);
    let obstruction = find_stable_subset(g, outside, |a| {
        g.neighbors_of_set(a).intersection(s).len() < a.len()
    });
    Ok(BergeOutcome {
        holds: obstruction.is_none(),
        obstruction,
    })
}
