//! Graph families, the figure fixtures, and corpora for verification runs.

use std::collections::{HashMap, HashSet};

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::{Error, Graph, Result, VertexSet, MAX_VERTICES};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Family {
    Path,
    Cycle,
    Complete,
    /// `K_{1,n}`: centre 0, leaves `1..=n`.
    Star,
    /// `K_{n,m}`: sides `0..n` and `n..n+m`.
    CompleteBipartite,
    /// Uniform labeled tree from a Prüfer sequence.
    RandomTree,
    /// Random spanning tree plus random extra edges up to `m` edges in total.
    RandomConnected,
    /// One new pendant vertex attached to every vertex of `base`.
    CoronaK1,
    Named,
}

/// A family member with its parameters.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FamilySpec {
    pub family: Family,
    pub n: usize,
    pub m: usize,
    pub seed: u64,
    pub base: Option<Box<FamilySpec>>,
    pub name: Option<String>,
}

impl FamilySpec {
    pub fn new(family: Family, n: usize) -> Self {
        FamilySpec {
            family,
            n,
            m: 0,
            seed: 0,
            base: None,
            name: None,
        }
    }

    pub fn complete_bipartite(n: usize, m: usize) -> Self {
        FamilySpec {
            m,
            ..FamilySpec::new(Family::CompleteBipartite, n)
        }
    }

    pub fn random_tree(n: usize, seed: u64) -> Self {
        FamilySpec {
            seed,
            ..FamilySpec::new(Family::RandomTree, n)
        }
    }

    pub fn random_connected(n: usize, m: usize, seed: u64) -> Self {
        FamilySpec {
            m,
            seed,
            ..FamilySpec::new(Family::RandomConnected, n)
        }
    }

    pub fn corona(base: FamilySpec) -> Self {
        FamilySpec {
            base: Some(Box::new(base)),
            ..FamilySpec::new(Family::CoronaK1, 0)
        }
    }

    pub fn named(name: &str) -> Self {
        FamilySpec {
            name: Some(name.to_string()),
            ..FamilySpec::new(Family::Named, 0)
        }
    }

    pub fn build(&self) -> Result<Graph> {
        make_family(self)
    }
}

fn require(ok: bool, msg: impl FnOnce() -> String) -> Result<()> {
    if ok {
        Ok(())
    } else {
        Err(Error::InvalidFamily(msg()))
    }
}

/// Build the canonical labeled member of a family.
pub fn make_family(spec: &FamilySpec) -> Result<Graph> {
    let n = spec.n;
    match spec.family {
        Family::Path => {
            require(n >= 1, || "path needs n >= 1".into())?;
            let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
            Graph::from_edges(n, &edges)
        }
        Family::Cycle => {
            require(n >= 3, || "cycle needs n >= 3".into())?;
            let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
            Graph::from_edges(n, &edges)
        }
        Family::Complete => {
            require(n >= 1, || "complete graph needs n >= 1".into())?;
            require(n <= MAX_VERTICES, || {
                format!("n = {n} exceeds {MAX_VERTICES}")
            })?;
            Ok(Graph::from_rows(n, &vec![u64::MAX; n]))
        }
        Family::Star => {
            require(n >= 1, || "star needs at least one leaf".into())?;
            let edges: Vec<_> = (1..=n).map(|i| (0, i)).collect();
            Graph::from_edges(n + 1, &edges)
        }
        Family::CompleteBipartite => {
            require(n >= 1 && spec.m >= 1, || {
                "both sides must be non-empty".into()
            })?;
            let edges: Vec<_> = (0..n)
                .flat_map(|u| (n..n + spec.m).map(move |v| (u, v)))
                .collect();
            Graph::from_edges(n + spec.m, &edges)
        }
        Family::RandomTree => {
            require(n >= 1, || "tree needs n >= 1".into())?;
            let mut rng = ChaCha8Rng::seed_from_u64(spec.seed);
            random_tree(n, &mut rng)
        }
        Family::RandomConnected => {
            require(n >= 1, || "graph needs n >= 1".into())?;
            let max_m = n * (n - 1) / 2;
            require(spec.m + 1 >= n && spec.m <= max_m, || {
                format!("m must lie in {}..={max_m} for n = {n}", n - 1)
            })?;
            let mut rng = ChaCha8Rng::seed_from_u64(spec.seed);
            let tree = random_tree(n, &mut rng)?;
            let mut missing: Vec<_> = (0..n)
                .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
                .filter(|&(u, v)| !tree.has_edge(u, v))
                .collect();
            missing.shuffle(&mut rng);
            let mut edges: Vec<_> = tree.edges().collect();
            edges.extend(missing.into_iter().take(spec.m + 1 - n));
            Graph::from_edges(n, &edges)
        }
        Family::CoronaK1 => {
            let base = spec
                .base
                .as_ref()
                .ok_or_else(|| Error::InvalidFamily("corona needs a base graph".into()))?
                .build()?;
            Ok(corona(&base)?)
        }
        Family::Named => {
            let name = spec
                .name
                .as_deref()
                .ok_or_else(|| Error::InvalidFamily("named family needs a name".into()))?;
            named_fixture(name)
        }
    }
}

/// Attach a new pendant vertex `b + v` to every base vertex `v`.
pub fn corona(base: &Graph) -> Result<Graph> {
    let b = base.n();
    let mut edges: Vec<_> = base.edges().collect();
    edges.extend((0..b).map(|v| (v, b + v)));
    Graph::from_edges(2 * b, &edges)
}

/// Decode a Prüfer sequence over `0..n` (length `n - 2`) into a tree.
pub fn tree_from_pruefer(n: usize, code: &[usize]) -> Result<Graph> {
    if n < 2 {
        return Graph::empty(n);
    }
    if code.len() != n - 2 || code.iter().any(|&c| c >= n) {
        return Err(Error::InvalidFamily(format!(
            "Prüfer sequence must have {} entries below {n}",
            n - 2
        )));
    }
    let mut degree = vec![1usize; n];
    for &c in code {
        degree[c] += 1;
    }
    let mut edges = Vec::with_capacity(n - 1);
    for &c in code {
        let leaf = (0..n).find(|&v| degree[v] == 1).expect("a leaf exists");
        edges.push((leaf, c));
        degree[leaf] -= 1;
        degree[c] -= 1;
    }
    let rest: Vec<_> = (0..n).filter(|&v| degree[v] == 1).collect();
    edges.push((rest[0], rest[1]));
    Graph::from_edges(n, &edges)
}

fn random_tree<R: Rng>(n: usize, rng: &mut R) -> Result<Graph> {
    let code: Vec<usize> = (0..n.saturating_sub(2))
        .map(|_| rng.gen_range(0..n))
        .collect();
    tree_from_pruefer(n, &code)
}

/// Names of the figure fixtures, in figure order.
pub const FIXTURE_NAMES: [&str; 5] = [
    "k3_plus_e",
    "diamond",
    "fig_ss_not_vwc",
    "fig_upm_not_pendant",
    "fig_bip_vwc_not_ss",
];

/// The example graphs drawn in the figures, as edge lists.
pub fn named_fixture(name: &str) -> Result<Graph> {
    let text = match name {
        "k3_plus_e" => include_str!("../fixtures/k3_plus_e.edges"),
        "diamond" => include_str!("../fixtures/diamond.edges"),
        "fig_ss_not_vwc" => include_str!("../fixtures/fig_ss_not_vwc.edges"),
        "fig_upm_not_pendant" => include_str!("../fixtures/fig_upm_not_pendant.edges"),
        "fig_bip_vwc_not_ss" => include_str!("../fixtures/fig_bip_vwc_not_ss.edges"),
        _ => return Err(Error::UnknownFixture(name.to_string())),
    };
    Graph::parse_edge_list(text)
}

/// Largest order for which [`enumerate_corpus`] runs exhaustively.
pub const EXHAUSTIVE_MAX_N: usize = 9;

/// Ordered partition of the vertices into cells, refined until equitable.
/// The cell order depends only on the isomorphism class.
fn equitable_partition(g: &Graph) -> Vec<Vec<usize>> {
    let n = g.n();
    let mut cell_of = vec![0usize; n];
    let mut cells = 1;
    loop {
        let mut keys: Vec<(usize, Vec<usize>, usize)> = (0..n)
            .map(|v| {
                let mut counts = vec![0usize; cells];
                for w in g.neighbors(v) {
                    counts[cell_of[w]] += 1;
                }
                (cell_of[v], counts, v)
            })
            .collect();
        keys.sort();
        let mut next = vec![0usize; n];
        let mut idx = 0;
        for i in 0..n {
            if i > 0 && (keys[i].0 != keys[i - 1].0 || keys[i].1 != keys[i - 1].1) {
                idx += 1;
            }
            next[keys[i].2] = idx;
        }
        let next_cells = if n == 0 { 0 } else { idx + 1 };
        cell_of = next;
        if next_cells == cells || n == 0 {
            break;
        }
        cells = next_cells;
    }
    let count = cell_of.iter().max().map_or(0, |m| m + 1);
    let mut out = vec![Vec::new(); count];
    for v in 0..n {
        out[cell_of[v]].push(v);
    }
    out
}

/// Canonical adjacency code: the maximum code over all orderings that list
/// the cells of the equitable partition in order. Two graphs of the same
/// order get equal codes iff they are isomorphic.
pub(crate) fn canonical_code(g: &Graph) -> u64 {
    assert!(g.n() <= 11, "canonical codes are limited to 11 vertices");
    let cells = equitable_partition(g);
    let mut slot_cell = Vec::with_capacity(g.n());
    for (c, cell) in cells.iter().enumerate() {
        slot_cell.extend(std::iter::repeat_n(c, cell.len()));
    }

    struct Search<'a> {
        g: &'a Graph,
        cells: &'a [Vec<usize>],
        slot_cell: &'a [usize],
        order: Vec<usize>,
        used: VertexSet,
        best: Option<u64>,
        total_bits: usize,
    }

    impl Search<'_> {
        fn place(&mut self, prefix: u64) {
            let pos = self.order.len();
            if pos == self.g.n() {
                if self.best.is_none_or(|b| prefix > b) {
                    self.best = Some(prefix);
                }
                return;
            }
            for &v in &self.cells[self.slot_cell[pos]] {
                if self.used.contains(v) {
                    continue;
                }
                let mut code = prefix;
                for i in 0..pos {
                    code = code << 1 | u64::from(self.g.has_edge(self.order[i], v));
                }
                let bits = pos * (pos + 1) / 2;
                if let Some(b) = self.best {
                    let best_prefix = if bits == 0 {
                        0
                    } else {
                        b >> (self.total_bits - bits)
                    };
                    if code < best_prefix {
                        continue;
                    }
                }
                self.order.push(v);
                self.used.insert(v);
                self.place(code);
                self.used.remove(v);
                self.order.pop();
            }
        }
    }

    let n = g.n();
    let mut s = Search {
        g,
        cells: &cells,
        slot_cell: &slot_cell,
        order: Vec::with_capacity(n),
        used: VertexSet::EMPTY,
        best: None,
        total_bits: n * n.saturating_sub(1) / 2,
    };
    s.place(0);
    s.best.unwrap_or(0)
}

/// Rebuild the graph on `n` vertices from a canonical code.
fn graph_from_code(n: usize, code: u64) -> Graph {
    let total = n * n.saturating_sub(1) / 2;
    let mut rows = vec![0u64; n];
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            if code >> (total - 1 - k) & 1 == 1 {
                rows[i] |= 1 << j;
                rows[j] |= 1 << i;
            }
            k += 1;
        }
    }
    Graph::from_rows(n, &rows)
}

/// The canonical representative of the isomorphism class of `g`.
pub fn canonical_form(g: &Graph) -> Graph {
    graph_from_code(g.n(), canonical_code(g))
}

/// All graphs on exactly `n` vertices up to isomorphism, as canonical codes.
fn graphs_of_order(n: usize, previous: &[u64]) -> Vec<u64> {
    if n <= 1 {
        return vec![0];
    }
    let mut seen = HashSet::new();
    for &code in previous {
        let h = graph_from_code(n - 1, code);
        for mask in 0u64..(1u64 << (n - 1)) {
            let mut rows: Vec<u64> = (0..n - 1).map(|v| h.neighbors(v).bits()).collect();
            for (v, row) in rows.iter_mut().enumerate() {
                if mask >> v & 1 == 1 {
                    *row |= 1 << (n - 1);
                }
            }
            rows.push(mask);
            seen.insert(canonical_code(&Graph::from_rows(n, &rows)));
        }
    }
    let mut out: Vec<u64> = seen.into_iter().collect();
    out.sort_unstable();
    out
}

/// Every graph with `1 <= n <= max_n` vertices exactly once up to
/// isomorphism, optionally only the connected ones. Ordered by order, then
/// by canonical code.
pub fn enumerate_corpus(max_n: usize, connected_only: bool) -> Result<Vec<Graph>> {
    if max_n > EXHAUSTIVE_MAX_N {
        return Err(Error::EnumerationCap {
            n: max_n,
            cap: EXHAUSTIVE_MAX_N,
        });
    }
    let mut out = Vec::new();
    let mut level: Vec<u64> = Vec::new();
    for n in 1..=max_n {
        level = graphs_of_order(n, &level);
        out.extend(
            level
                .iter()
                .map(|&c| graph_from_code(n, c))
                .filter(|g| !connected_only || g.is_connected()),
        );
    }
    Ok(out)
}

/// Rooted AHU encoding of a tree.
fn rooted_code(g: &Graph, v: usize, parent: Option<usize>) -> String {
    let mut children: Vec<String> = g
        .neighbors(v)
        .iter()
        .filter(|&w| Some(w) != parent)
        .map(|w| rooted_code(g, w, Some(v)))
        .collect();
    children.sort();
    format!("({})", children.concat())
}

/// Canonical string of a tree: the smaller rooted encoding over its centres.
fn tree_code(t: &Graph) -> String {
    let mut remaining = t.vertices();
    let mut degree: Vec<usize> = (0..t.n()).map(|v| t.degree(v)).collect();
    while remaining.len() > 2 {
        let leaves: Vec<usize> = remaining.iter().filter(|&v| degree[v] <= 1).collect();
        for &v in &leaves {
            remaining.remove(v);
            for w in t.neighbors(v).intersection(remaining) {
                degree[w] -= 1;
            }
        }
    }
    remaining
        .iter()
        .map(|c| rooted_code(t, c, None))
        .min()
        .unwrap_or_default()
}

/// All trees with `1 <= n <= max_n` vertices, one per isomorphism class,
/// grown leaf by leaf.
pub fn enumerate_trees(max_n: usize) -> Result<Vec<Graph>> {
    if max_n > 20 {
        return Err(Error::EnumerationCap { n: max_n, cap: 20 });
    }
    let mut out = Vec::new();
    let mut level = vec![Graph::empty(1)?];
    for n in 1..=max_n {
        if n > 1 {
            let mut by_code: HashMap<String, Graph> = HashMap::new();
            for t in &level {
                for v in 0..t.n() {
                    let mut edges: Vec<_> = t.edges().collect();
                    edges.push((v, n - 1));
                    let grown = Graph::from_edges(n, &edges)?;
                    by_code.entry(tree_code(&grown)).or_insert(grown);
                }
            }
            let mut keyed: Vec<(String, Graph)> = by_code.into_iter().collect();
            keyed.sort_by(|a, b| a.0.cmp(&b.0));
            level = keyed.into_iter().map(|(_, g)| g).collect();
        }
        out.extend(level.iter().cloned());
    }
    Ok(out)
}

/// Parameters of a seeded random corpus.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct SampleSpec {
    pub count: usize,
    pub min_n: usize,
    pub max_n: usize,
    pub seed: u64,
}

/// A seeded stream of connected graphs. Half are random spanning trees with
/// random extra edges; the rest are random connected graphs decorated with
/// pendant vertices, so pendant-matching structure is well represented.
pub fn sample_corpus(spec: SampleSpec) -> Result<Vec<Graph>> {
    if spec.min_n < 1 || spec.min_n > spec.max_n || spec.max_n > MAX_VERTICES {
        return Err(Error::InvalidFamily(format!(
            "sample orders {}..={} are out of range",
            spec.min_n, spec.max_n
        )));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(spec.seed);
    (0..spec.count)
        .map(|i| {
            let n = rng.gen_range(spec.min_n..=spec.max_n);
            if i % 2 == 0 || n < 2 {
                let max_m = n * (n - 1) / 2;
                let m = if max_m < n {
                    max_m
                } else {
                    let density: f64 = rng.gen_range(0.0..0.6);
                    let extra = ((max_m + 1 - n) as f64 * density).round() as usize;
                    n - 1 + extra
                };
                make_family(&FamilySpec::random_connected(n, m, rng.gen()))
            } else {
                decorated(n, &mut rng)
            }
        })
        .collect()
}

/// A random connected core on about half the vertices, with pendant
/// vertices hung on random core vertices until the order reaches `n`.
fn decorated<R: Rng>(n: usize, rng: &mut R) -> Result<Graph> {
    let core_n = (n / 2).max(1);
    let max_m = core_n * (core_n - 1) / 2;
    let m = if max_m < core_n {
        max_m
    } else {
        rng.gen_range(core_n - 1..=max_m)
    };
    let core = make_family(&FamilySpec::random_connected(core_n, m, rng.gen()))?;
    let mut edges: Vec<_> = core.edges().collect();
    for v in core_n..n {
        edges.push((rng.gen_range(0..core_n), v));
    }
    Graph::from_edges(n, &edges)
}

/// Orders of the isomorphism classes found by [`enumerate_corpus`], for
/// cross-checking against a brute-force count.
pub fn count_by_order(corpus: &[Graph]) -> Vec<usize> {
    let max = corpus.iter().map(Graph::n).max().unwrap_or(0);
    let mut counts = vec![0; max + 1];
    for g in corpus {
        counts[g.n()] += 1;
    }
    counts
}
