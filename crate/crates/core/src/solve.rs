//! Exact solvers for α, θ, γ and i, and enumeration of stable-set families.
//!
//! Everything here is branch-and-bound over `u64` bitsets. Each solver
//! checks the relevant cap from [`Caps`] before doing any work.

use serde::Serialize;

use crate::{Caps, Error, Graph, Result, VertexSet};

#[inline]
fn bit(v: usize) -> u64 {
    1u64 << v
}

/// An optimal value with one witness set.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Optimum {
    pub value: usize,
    pub witness: VertexSet,
}

/// The six invariants of the chain `α(G²) ≤ θ(G²) ≤ γ(G) ≤ i(G) ≤ α(G) ≤ θ(G)`,
/// plus `μ(G)` and the order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct InvariantRecord {
    pub n: usize,
    pub alpha: usize,
    pub alpha_sq: usize,
    pub theta: usize,
    pub theta_sq: usize,
    pub gamma: usize,
    pub idom: usize,
    pub mu: usize,
}

impl InvariantRecord {
    /// The chain in order: `[α(G²), θ(G²), γ, i, α, θ]`.
    pub fn chain(&self) -> [usize; 6] {
        [
            self.alpha_sq,
            self.theta_sq,
            self.gamma,
            self.idom,
            self.alpha,
            self.theta,
        ]
    }

    pub fn chain_holds(&self) -> bool {
        self.chain().windows(2).all(|w| w[0] <= w[1])
    }

    pub fn all_equal(&self) -> bool {
        self.chain().windows(2).all(|w| w[0] == w[1])
    }
}

/// A family of stable sets with its common intersection.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct StableSetFamily {
    pub sets: Vec<VertexSet>,
    pub core: VertexSet,
}

impl StableSetFamily {
    fn new(mut sets: Vec<VertexSet>) -> Self {
        sets.sort();
        sets.dedup();
        let core = sets
            .iter()
            .copied()
            .reduce(VertexSet::intersection)
            .unwrap_or(VertexSet::EMPTY);
        StableSetFamily { sets, core }
    }

    pub fn len(&self) -> usize {
        self.sets.len()
    }

    pub fn is_empty(&self) -> bool {
        self.sets.is_empty()
    }

    pub fn contains(&self, s: VertexSet) -> bool {
        self.sets.binary_search(&s).is_ok()
    }

    pub fn is_subfamily_of(&self, other: &StableSetFamily) -> bool {
        self.sets.iter().all(|&s| other.contains(s))
    }
}

/// Upper bound on the stability number of `G[cand]`: the number of cliques
/// in a greedy clique partition.
fn clique_partition_bound(adj: &[u64], mut cand: u64) -> usize {
    let mut cliques = 0;
    while cand != 0 {
        let v = cand.trailing_zeros() as usize;
        let mut clique_cand = cand & adj[v];
        cand &= !bit(v);
        while clique_cand != 0 {
            let w = clique_cand.trailing_zeros() as usize;
            cand &= !bit(w);
            clique_cand &= adj[w];
        }
        cliques += 1;
    }
    cliques
}

struct MaxStable<'a> {
    adj: &'a [u64],
    best: usize,
}

impl MaxStable<'_> {
    fn search(&mut self, mut cand: u64, mut size: usize) {
        loop {
            if cand == 0 {
                self.best = self.best.max(size);
                return;
            }
            if size + clique_partition_bound(self.adj, cand) <= self.best {
                return;
            }
            // A vertex of degree <= 1 in G[cand] lies in some maximum stable set.
            let low = VertexSet::from_bits(cand)
                .iter()
                .find(|&v| (self.adj[v] & cand).count_ones() <= 1);
            match low {
                Some(v) => {
                    cand &= !(self.adj[v] | bit(v));
                    size += 1;
                }
                None => break,
            }
        }
        let v = VertexSet::from_bits(cand)
            .iter()
            .max_by_key(|&v| ((self.adj[v] & cand).count_ones(), std::cmp::Reverse(v)))
            .expect("non-empty candidate set");
        self.search(cand & !(self.adj[v] | bit(v)), size + 1);
        self.search(cand & !bit(v), size);
    }
}

/// α of `G[cand]`, no cap check.
pub(crate) fn alpha_within(g: &Graph, cand: VertexSet) -> usize {
    let adj: Vec<u64> = (0..g.n()).map(|v| g.neighbors(v).bits()).collect();
    let mut s = MaxStable { adj: &adj, best: 0 };
    s.search(cand.bits(), 0);
    s.best
}

/// `α(G)` with the lexicographically smallest maximum stable set.
pub fn stability_number(g: &Graph, caps: &Caps) -> Result<Optimum> {
    caps.check_solver(g)?;
    let value = alpha_within(g, g.vertices());
    let mut need = value;
    let mut cand = g.vertices();
    let mut witness = VertexSet::EMPTY;
    while need > 0 {
        let v = cand
            .iter()
            .find(|&v| {
                let rest = cand.difference(g.closed_neighbors(v)).above(v);
                1 + alpha_within(g, rest) >= need
            })
            .ok_or_else(|| Error::Internal("witness reconstruction for α failed".into()))?;
        witness.insert(v);
        cand = cand.difference(g.closed_neighbors(v)).above(v);
        need -= 1;
    }
    Ok(Optimum { value, witness })
}

/// Visit every stable set of size exactly `k` within `cand`, in
/// lexicographic order of sorted member lists.
pub(crate) fn stable_sets_of_size(g: &Graph, cand: VertexSet, k: usize) -> Vec<VertexSet> {
    fn rec(adj: &[u64], cand: u64, chosen: u64, need: usize, out: &mut Vec<VertexSet>) {
        if need == 0 {
            out.push(VertexSet::from_bits(chosen));
            return;
        }
        if (cand.count_ones() as usize) < need || clique_partition_bound(adj, cand) < need {
            return;
        }
        let v = cand.trailing_zeros() as usize;
        rec(
            adj,
            cand & !(adj[v] | bit(v)),
            chosen | bit(v),
            need - 1,
            out,
        );
        rec(adj, cand & !bit(v), chosen, need, out);
    }
    let adj: Vec<u64> = (0..g.n()).map(|v| g.neighbors(v).bits()).collect();
    let mut out = Vec::new();
    rec(&adj, cand.bits(), 0, k, &mut out);
    out
}

/// Visit every stable subset of `within` (including the empty set) until
/// `visit` breaks; returns the set it broke on.
pub(crate) fn find_stable_subset<F>(g: &Graph, within: VertexSet, mut visit: F) -> Option<VertexSet>
where
    F: FnMut(VertexSet) -> bool,
{
    fn rec<F: FnMut(VertexSet) -> bool>(
        g: &Graph,
        cand: VertexSet,
        chosen: VertexSet,
        visit: &mut F,
    ) -> Option<VertexSet> {
        if visit(chosen) {
            return Some(chosen);
        }
        for v in cand {
            let mut next = chosen;
            next.insert(v);
            let rest = cand.difference(g.closed_neighbors(v)).above(v);
            if let Some(hit) = rec(g, rest, next, visit) {
                return Some(hit);
            }
        }
        None
    }
    rec(g, within, VertexSet::EMPTY, &mut visit)
}

/// `Ω(G)`: all maximum stable sets, sorted, with their intersection.
pub fn maximum_stable_sets(g: &Graph, caps: &Caps) -> Result<StableSetFamily> {
    caps.check_enumeration(g)?;
    let alpha = alpha_within(g, g.vertices());
    Ok(StableSetFamily::new(stable_sets_of_size(
        g,
        g.vertices(),
        alpha,
    )))
}

/// Maximal cliques of the graph with adjacency rows `adj` (Bron–Kerbosch
/// with pivoting), sorted.
pub(crate) fn maximal_cliques_of(adj: &[u64]) -> Vec<VertexSet> {
    fn bk(adj: &[u64], r: u64, mut p: u64, mut x: u64, out: &mut Vec<VertexSet>) {
        if p == 0 {
            if x == 0 {
                out.push(VertexSet::from_bits(r));
            }
            return;
        }
        let pivot = VertexSet::from_bits(p | x)
            .iter()
            .max_by_key(|&u| (adj[u] & p).count_ones())
            .expect("p is non-empty");
        for v in VertexSet::from_bits(p & !adj[pivot]) {
            bk(adj, r | bit(v), p & adj[v], x & adj[v], out);
            p &= !bit(v);
            x |= bit(v);
        }
    }
    let full = VertexSet::full(adj.len()).bits();
    let mut out = Vec::new();
    bk(adj, 0, full, 0, &mut out);
    out.sort();
    out
}

/// All inclusion-maximal stable sets, sorted (maximal cliques of the
/// complement).
pub fn maximal_stable_sets(g: &Graph, caps: &Caps) -> Result<Vec<VertexSet>> {
    caps.check_enumeration(g)?;
    let comp = g.complement();
    let rows: Vec<u64> = (0..g.n()).map(|v| comp.neighbors(v).bits()).collect();
    Ok(maximal_cliques_of(&rows))
}

/// Shared branching for γ and i: pick the undominated vertex with the
/// fewest admissible dominators and branch over them.
struct Dominator<'a> {
    g: &'a Graph,
    independent: bool,
    best: usize,
    best_set: VertexSet,
}

impl Dominator<'_> {
    fn search(&mut self, chosen: VertexSet, dominated: VertexSet, forbidden: VertexSet) {
        let undominated = self.g.vertices().difference(dominated);
        if undominated.is_empty() {
            if chosen.len() < self.best || (chosen.len() == self.best && chosen < self.best_set) {
                self.best = chosen.len();
                self.best_set = chosen;
            }
            return;
        }
        let allowed = self.g.vertices().difference(forbidden);
        let max_cover = allowed
            .iter()
            .map(|w| self.g.closed_neighbors(w).intersection(undominated).len())
            .max()
            .unwrap_or(0);
        if max_cover == 0 {
            return;
        }
        let lower = chosen.len() + undominated.len().div_ceil(max_cover);
        if lower > self.best {
            return;
        }
        let u = undominated
            .iter()
            .min_by_key(|&u| self.g.closed_neighbors(u).intersection(allowed).len())
            .expect("undominated is non-empty");
        let options = self.g.closed_neighbors(u).intersection(allowed);
        for w in options {
            let mut next_chosen = chosen;
            next_chosen.insert(w);
            let next_dominated = dominated.union(self.g.closed_neighbors(w));
            let next_forbidden = if self.independent {
                forbidden.union(self.g.closed_neighbors(w))
            } else {
                forbidden
            };
            self.search(next_chosen, next_dominated, next_forbidden);
        }
    }
}

fn dominate(g: &Graph, independent: bool) -> Optimum {
    let mut d = Dominator {
        g,
        independent,
        best: g.n() + 1,
        best_set: g.vertices(),
    };
    d.search(VertexSet::EMPTY, VertexSet::EMPTY, VertexSet::EMPTY);
    Optimum {
        value: d.best,
        witness: d.best_set,
    }
}

/// `γ(G)`: minimum size of a dominating set.
pub fn domination_number(g: &Graph, caps: &Caps) -> Result<Optimum> {
    caps.check_solver(g)?;
    Ok(dominate(g, false))
}

/// `i(G)`: minimum size of a maximal stable set (equivalently, of an
/// independent dominating set).
pub fn independent_domination_number(g: &Graph, caps: &Caps) -> Result<Optimum> {
    caps.check_solver(g)?;
    Ok(dominate(g, true))
}

/// A partition of the vertex set into cliques.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CliqueCover {
    pub cliques: Vec<VertexSet>,
}

impl CliqueCover {
    pub fn len(&self) -> usize {
        self.cliques.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cliques.is_empty()
    }
}

struct Colouring<'a> {
    /// adjacency of the graph being coloured (the complement of G)
    adj: &'a [u64],
    n: usize,
    lower: usize,
    best: usize,
    best_classes: Vec<u64>,
}

impl Colouring<'_> {
    fn search(&mut self, classes: &mut Vec<u64>, coloured: u64) {
        if self.best <= self.lower {
            return;
        }
        let full = VertexSet::full(self.n).bits();
        if coloured == full {
            if classes.len() < self.best {
                self.best = classes.len();
                self.best_classes = classes.clone();
            }
            return;
        }
        // DSATUR: most distinct neighbouring colours, then most uncoloured neighbours.
        let v = VertexSet::from_bits(full & !coloured)
            .iter()
            .max_by_key(|&v| {
                let sat = classes.iter().filter(|&&c| c & self.adj[v] != 0).count();
                let deg = (self.adj[v] & !coloured).count_ones();
                (sat, deg, std::cmp::Reverse(v))
            })
            .expect("an uncoloured vertex remains");
        for c in 0..classes.len() {
            if classes[c] & self.adj[v] == 0 {
                classes[c] |= bit(v);
                self.search(classes, coloured | bit(v));
                classes[c] &= !bit(v);
                if self.best <= self.lower {
                    return;
                }
            }
        }
        if classes.len() + 1 < self.best {
            classes.push(bit(v));
            self.search(classes, coloured | bit(v));
            classes.pop();
        }
    }
}

/// `θ(G)`: minimum number of cliques covering `V`, computed as the chromatic
/// number of the complement. Returns the cover.
pub fn clique_cover_number(g: &Graph, caps: &Caps) -> Result<CliqueCover> {
    caps.check_solver(g)?;
    if g.n() == 0 {
        return Ok(CliqueCover { cliques: vec![] });
    }
    let comp = g.complement();
    let adj: Vec<u64> = (0..g.n()).map(|v| comp.neighbors(v).bits()).collect();
    let mut c = Colouring {
        adj: &adj,
        n: g.n(),
        // a stable set of G is a clique of the complement
        lower: alpha_within(g, g.vertices()),
        best: g.n() + 1,
        best_classes: Vec::new(),
    };
    c.search(&mut Vec::new(), 0);
    let mut cliques: Vec<VertexSet> = c
        .best_classes
        .into_iter()
        .map(VertexSet::from_bits)
        .collect();
    cliques.sort();
    Ok(CliqueCover { cliques })
}

/// Compute the full record on `g` and `g²` and check the chain ordering.
pub fn invariant_chain(g: &Graph, caps: &Caps) -> Result<InvariantRecord> {
    let sq = g.square();
    let record = InvariantRecord {
        n: g.n(),
        alpha: stability_number(g, caps)?.value,
        alpha_sq: stability_number(&sq, caps)?.value,
        theta: clique_cover_number(g, caps)?.len(),
        theta_sq: clique_cover_number(&sq, caps)?.len(),
        gamma: domination_number(g, caps)?.value,
        idom: independent_domination_number(g, caps)?.value,
        mu: crate::matching::maximum_matching(g).len(),
    };
    if !record.chain_holds() {
        return Err(Error::Internal(format!(
            "invariant chain violated: {:?}",
            record.chain()
        )));
    }
    if record.alpha + record.mu > record.n {
        return Err(Error::Internal(format!(
            "α + μ exceeds n: {} + {} > {}",
            record.alpha, record.mu, record.n
        )));
    }
    Ok(record)
}
