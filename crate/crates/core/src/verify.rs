//! The theorem engine. Each statement of the equivalence theorem is
//! evaluated on its own route and the results compared; the implication and
//! characterization suites record every violated clause with a witness.
//!
//! Cap refusals never count as agreement or violation. A statement that
//! could not be evaluated is `None` in the report, and a graph that could
//! not be checked at all is counted under `refused`.

use rayon::prelude::*;
use serde::Serialize;

use crate::classify::{
    alpha_minus_stable, alpha_plus_class, classify, is_koenig_egervary, is_simplicial_graph,
    is_square_stable, is_well_covered, omega_is_matroid, p1_obstruction, p2_obstruction,
    property_p1, simplex_partition_check, AlphaPlusClass, Witness,
};
use crate::generate::{canonical_form, named_fixture, FIXTURE_NAMES};
use crate::matching::{
    berge_check, has_induced_perfect_matching, maximum_matching, pendant_perfect_matching,
    unique_perfect_matching, PerfectMatchingCount,
};
use crate::solve::{
    clique_cover_number, invariant_chain, maximum_stable_sets, stability_number, StableSetFamily,
};
use crate::{Caps, Error, Graph, Length, Result, VertexSet};

/// Number of statements in the equivalence theorem.
pub const STATEMENT_COUNT: usize = 13;

const LABELS: [&str; STATEMENT_COUNT] = [
    "i", "ii", "iii", "iv", "v", "vi", "vii", "viii", "ix", "x", "xi", "xii", "xiii",
];

/// Roman-numeral label of statement `index` (0-based).
pub fn statement_label(index: usize) -> &'static str {
    LABELS[index]
}

/// A graph with a stable identifier.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CorpusEntry {
    pub id: String,
    pub graph: Graph,
}

impl CorpusEntry {
    pub fn new(graph: Graph) -> Self {
        CorpusEntry {
            id: graph_id(&graph),
            graph,
        }
    }

    pub fn named(id: &str, graph: Graph) -> Self {
        CorpusEntry {
            id: id.to_string(),
            graph,
        }
    }
}

/// graph6 of the canonical form when one is available, else of `g` itself.
pub fn graph_id(g: &Graph) -> String {
    if g.n() <= 11 {
        canonical_form(g).to_graph6()
    } else {
        g.to_graph6()
    }
}

/// The five fixtures, identified by name.
pub fn fixture_corpus() -> Vec<CorpusEntry> {
    FIXTURE_NAMES
        .iter()
        .map(|name| CorpusEntry::named(name, named_fixture(name).expect("bundled fixture")))
        .collect()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FailingPair {
    /// 0-based indices of a true and a false statement, smaller first.
    pub first: usize,
    pub second: usize,
    pub witness: Option<Witness>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct EquivalenceReport {
    pub graph_id: String,
    /// Statements (i) to (xiii); `None` when a cap prevented evaluation.
    pub statements: [Option<bool>; STATEMENT_COUNT],
    pub agree: bool,
    pub failing_pair: Option<FailingPair>,
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct Violation {
    pub graph_id: String,
    pub clause: String,
    pub witness: String,
}

/// Result of one suite on one graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Entry {
    Checked(Vec<Violation>),
    /// The graph is outside the suite's hypotheses.
    Skipped(&'static str),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SuiteResult {
    pub suite_name: String,
    pub graphs_checked: usize,
    pub skipped: usize,
    /// Graphs left unchecked because a cap refused them.
    pub refused: usize,
    pub violations: Vec<Violation>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub reports: Vec<EquivalenceReport>,
}

impl SuiteResult {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

type Evaluated = Option<(bool, Option<Witness>)>;

/// Turn a cap refusal into "not evaluated".
fn evaluable<T>(r: Result<T>) -> Result<Option<T>> {
    match r {
        Ok(v) => Ok(Some(v)),
        Err(e) if e.is_cap_refusal() => Ok(None),
        Err(e) => Err(e),
    }
}

fn lift_set(s: VertexSet, labels: &[usize]) -> VertexSet {
    s.iter().map(|v| labels[v]).collect()
}

fn lift(w: Witness, labels: &[usize]) -> Witness {
    match w {
        Witness::Set(s) => Witness::Set(lift_set(s, labels)),
        Witness::Pair(a, b) => Witness::Pair(lift_set(a, labels), lift_set(b, labels)),
        Witness::Vertex(v) => Witness::Vertex(labels[v]),
        Witness::Edge((u, v)) => Witness::Edge((labels[u], labels[v])),
        Witness::Matching(m) => Witness::Matching(crate::Matching::from_edges(
            m.edges().iter().map(|&(u, v)| (labels[u], labels[v])),
        )),
    }
}

fn first_failure<I, F>(items: I, mut fails: F) -> (bool, Option<Witness>)
where
    I: IntoIterator<Item = VertexSet>,
    F: FnMut(VertexSet) -> Option<Witness>,
{
    for s in items {
        if let Some(w) = fails(s) {
            return (false, Some(w));
        }
    }
    (true, None)
}

fn first_success<I, F>(items: I, mut holds: F) -> (bool, Option<Witness>)
where
    I: IntoIterator<Item = VertexSet>,
    F: FnMut(VertexSet) -> bool,
{
    for s in items {
        if holds(s) {
            return (true, Some(Witness::Set(s)));
        }
    }
    (false, None)
}

/// Statements over all pairs `S₁ ∈ Ω(G)`, `S₂ ∈ Ω(G²)`.
fn for_all_pairs<F>(
    g: &Graph,
    omega: &StableSetFamily,
    omega_sq: &StableSetFamily,
    test: F,
) -> (bool, Option<Witness>)
where
    F: Fn(&Graph) -> bool,
{
    for &s1 in &omega.sets {
        for &s2 in &omega_sq.sets {
            let h = g.symmetric_difference_subgraph(s1, s2);
            if !test(&h.graph) {
                return (false, Some(Witness::Pair(s1, s2)));
            }
        }
    }
    (true, None)
}

/// All thirteen statements on a connected graph.
fn statements_connected(g: &Graph, caps: &Caps) -> Result<[Evaluated; STATEMENT_COUNT]> {
    let sq = g.square();
    let mut out: [Evaluated; STATEMENT_COUNT] = Default::default();

    out[0] = Some((simplex_partition_check(g), None));

    let alpha = evaluable(stability_number(g, caps))?;
    let alpha_sq = evaluable(stability_number(&sq, caps))?;
    if let (Some(a), Some(b)) = (&alpha, &alpha_sq) {
        out[1] = Some((a.value == b.value, Some(Witness::Set(b.witness))));
    }

    let theta = evaluable(clique_cover_number(g, caps))?;
    let theta_sq = evaluable(clique_cover_number(&sq, caps))?;
    if let (Some(a), Some(b)) = (theta, theta_sq) {
        out[2] = Some((a.len() == b.len(), None));
    }

    if let Some(record) = evaluable(invariant_chain(g, caps))? {
        out[3] = Some((record.all_equal(), None));
    }

    let omega = evaluable(maximum_stable_sets(g, caps))?;
    let omega_sq = evaluable(maximum_stable_sets(&sq, caps))?;
    let (Some(omega), Some(omega_sq)) = (omega, omega_sq) else {
        return Ok(out);
    };
    let alpha = omega.sets.first().map_or(0, |s| s.len());

    out[4] = Some(first_failure(omega_sq.sets.iter().copied(), |s| {
        (!omega.contains(s)).then_some(Witness::Set(s))
    }));

    let dist = g.distance_matrix();
    out[5] = Some(first_success(omega.sets.iter().copied(), |s| {
        dist.pairwise_at_least(s, 3)
    }));

    out[6] = Some(first_success(omega.sets.iter().copied(), |s| {
        p1_obstruction(g, s).is_none()
    }));
    out[7] = Some(first_failure(omega_sq.sets.iter().copied(), |s| {
        p1_obstruction(g, s).map(|a| Witness::Pair(s, a))
    }));

    out[8] = Some(for_all_pairs(g, &omega, &omega_sq, |h| {
        unique_perfect_matching(h).is_unique()
    }));
    out[9] = Some(for_all_pairs(g, &omega, &omega_sq, |h| {
        maximum_matching(h).len() * 2 == h.n()
    }));
    out[10] = Some(for_all_pairs(
        g,
        &omega,
        &omega_sq,
        has_induced_perfect_matching,
    ));

    out[11] = Some(first_success(omega.sets.iter().copied(), |s| {
        p2_obstruction(g, s, alpha).is_none()
    }));
    out[12] = Some(first_failure(omega_sq.sets.iter().copied(), |s| {
        p2_obstruction(g, s, alpha).map(|a| Witness::Pair(s, a))
    }));

    Ok(out)
}

/// Evaluate the thirteen statements independently and compare them.
///
/// A disconnected graph is evaluated component by component: a statement is
/// false if it fails on some component, unevaluated if it is not false
/// anywhere but could not be evaluated somewhere, and true otherwise.
pub fn verify_equivalences(g: &Graph, graph_id: &str, caps: &Caps) -> Result<EquivalenceReport> {
    let mut combined: [Evaluated; STATEMENT_COUNT] = std::array::from_fn(|_| Some((true, None)));
    for comp in g.components() {
        let sub = g.induced_subgraph(comp);
        let here = statements_connected(&sub.graph, caps)?;
        for (acc, stmt) in combined.iter_mut().zip(here) {
            *acc = match (acc.take(), stmt) {
                (Some((false, w)), _) => Some((false, w)),
                (_, Some((false, w))) => Some((false, w.map(|w| lift(w, &sub.vertices)))),
                (None, _) | (_, None) => None,
                (Some((true, w)), Some((true, w2))) => {
                    Some((true, w.or(w2.map(|w| lift(w, &sub.vertices)))))
                }
            };
        }
    }

    let statements = combined.each_ref().map(|s| s.as_ref().map(|(b, _)| *b));
    let first_true = statements.iter().position(|s| *s == Some(true));
    let first_false = statements.iter().position(|s| *s == Some(false));
    let failing_pair = match (first_true, first_false) {
        (Some(t), Some(f)) => Some(FailingPair {
            first: t.min(f),
            second: t.max(f),
            witness: combined[f].as_ref().and_then(|(_, w)| w.clone()),
        }),
        _ => None,
    };
    Ok(EquivalenceReport {
        graph_id: graph_id.to_string(),
        statements,
        agree: failing_pair.is_none(),
        failing_pair,
    })
}

struct Recorder<'a> {
    graph_id: &'a str,
    violations: Vec<Violation>,
}

impl<'a> Recorder<'a> {
    fn new(graph_id: &'a str) -> Self {
        Recorder {
            graph_id,
            violations: Vec::new(),
        }
    }

    fn check(&mut self, clause: &str, ok: bool, witness: impl FnOnce() -> String) {
        if !ok {
            self.violations.push(Violation {
                graph_id: self.graph_id.to_string(),
                clause: clause.to_string(),
                witness: witness(),
            });
        }
    }

    fn finish(self) -> Entry {
        Entry::Checked(self.violations)
    }
}

/// `α(G²) ≤ θ(G²) ≤ γ ≤ i ≤ α ≤ θ`, plus `α + μ ≤ n`.
pub fn verify_inequality_chain(g: &Graph, graph_id: &str, caps: &Caps) -> Result<Entry> {
    let mut rec = Recorder::new(graph_id);
    match invariant_chain(g, caps) {
        Ok(_) => {}
        Err(Error::Internal(msg)) => rec.check("chain", false, || msg),
        Err(e) => return Err(e),
    }
    Ok(rec.finish())
}

fn has_k2_component(g: &Graph) -> bool {
    g.components().into_iter().any(|c| c.len() == 2)
}

/// Whether `g` has exactly `α` pendant vertices and order `2α`.
fn pendant_count_matches(g: &Graph, alpha: usize) -> bool {
    g.pendant_vertices().len() == alpha && g.n() == 2 * alpha
}

/// The conditional results about square-stable graphs, checked on `g`.
pub fn verify_implications(g: &Graph, graph_id: &str, caps: &Caps) -> Result<Entry> {
    let mut rec = Recorder::new(graph_id);
    let sq = g.square();
    let ss = is_square_stable(g, caps)?.holds;
    let alpha = stability_number(g, caps)?.value;
    let omega = maximum_stable_sets(g, caps)?;
    let omega_sq = maximum_stable_sets(&sq, caps)?;
    let dist = g.distance_matrix();
    let connected = g.is_connected();
    let isolated = g.has_isolated_vertex();
    let wc = is_well_covered(g, caps)?.holds;
    let vwc = wc && g.n() == 2 * alpha;
    let ke = is_koenig_egervary(g, caps)?;
    let pendant_pm = pendant_perfect_matching(g);
    let pendants = g.pendant_vertices();

    rec.check("prop2", ss == omega_sq.is_subfamily_of(&omega), || {
        format!("square_stable={ss}")
    });

    for &s in &omega_sq.sets {
        rec.check("lemma4", dist.pairwise_at_least(s, 3), || s.to_string());
    }

    if ss && connected && !g.is_complete() {
        for &s in &omega_sq.sets {
            for a in s.iter() {
                let has_partner = s
                    .iter()
                    .any(|b| b != a && dist.get(a, b) == Length::Finite(3));
                rec.check("lemma3", has_partner, || format!("S={s} a={a}"));
            }
        }
    }

    if connected {
        let equal = omega.sets == omega_sq.sets;
        rec.check("thm4", equal == g.is_complete(), || {
            format!("omega_equal={equal}")
        });
    }

    if ss && !isolated {
        let am = alpha_minus_stable(g, caps)?;
        rec.check("corollary_not_alpha_minus", !am.holds, String::new);
        let plus = alpha_plus_class(g, caps)?;
        rec.check(
            "corollary_alpha_plus_0",
            plus == AlphaPlusClass::Plus0,
            || format!("{plus:?} core={}", omega.core),
        );
        rec.check("corollary_well_covered", wc, String::new);
    }

    if !isolated {
        let simplicial = is_simplicial_graph(g);
        rec.check("simplicial", ss == (simplicial && wc), || {
            format!("square_stable={ss} simplicial={simplicial} well_covered={wc}")
        });
        if g.is_chordal() {
            rec.check("chordal", ss == wc, || {
                format!("square_stable={ss} well_covered={wc}")
            });
        }
    }

    if let Some(m) = &pendant_pm {
        if !has_k2_component(g) {
            let ok = omega_sq.sets == [pendants];
            rec.check("prop6", ok, || format!("matching={:?}", m.edges()));
        }
    }

    if ke && connected && g.n() >= 3 {
        let a = ss;
        let b = pendant_pm.is_some();
        let c = vwc && pendants.len() == alpha;
        rec.check("prop9", a == b && b == c, || {
            format!("square_stable={a} pendant_pm={b} vwc_pendants={c}")
        });
    }

    if ke {
        rec.check("prop12", wc == vwc, || format!("well_covered={wc}"));
        if ss {
            let sq_ke = is_koenig_egervary(&sq, caps)?;
            rec.check("ke_square", sq_ke, String::new);
        }
    }

    if !isolated && !has_k2_component(g) {
        let lhs = ss && vwc;
        let rhs = ke && pendant_count_matches(g, alpha);
        rec.check("ss_vwc_characterization", lhs == rhs, || {
            format!("square_stable_vwc={lhs} ke_pendants={rhs}")
        });
    }

    let per_component = g
        .components()
        .into_iter()
        .map(|c| is_square_stable(&g.induced_subgraph(c).graph, caps).map(|v| v.holds))
        .collect::<Result<Vec<_>>>()?;
    rec.check(
        "disconnection",
        ss == per_component.iter().all(|&b| b),
        || format!("{per_component:?}"),
    );

    for &s in &omega.sets {
        match property_p1(g, s, caps) {
            Ok(_) => {}
            Err(Error::Internal(msg)) => rec.check("p1_routes", false, || msg),
            Err(e) => return Err(e),
        }
        let berge = berge_check(g, s, caps)?;
        rec.check("berge_maximum", berge.holds, || s.to_string());
    }
    for &s in &omega_sq.sets {
        let berge = berge_check(g, s, caps)?;
        rec.check("berge_square", berge.holds == (s.len() == alpha), || {
            format!("S={s} obstruction={:?}", berge.obstruction)
        });
    }

    Ok(rec.finish())
}

/// Some edge between non-pendant vertices splits `t` into `K₂` and a
/// well-covered tree.
pub fn recursion_edge(t: &Graph, caps: &Caps) -> Result<Option<(usize, usize)>> {
    let pendants = t.pendant_vertices();
    for (u, v) in t.edges() {
        if pendants.contains(u) || pendants.contains(v) {
            continue;
        }
        let rest: Vec<_> = t.edges().filter(|&e| e != (u, v)).collect();
        let forest = Graph::from_edges(t.n(), &rest)?;
        let comps = forest.components();
        let [a, b] = comps[..] else {
            continue;
        };
        for (k2, rest) in [(a, b), (b, a)] {
            if k2.len() == 2 && is_well_covered(&forest.induced_subgraph(rest).graph, caps)?.holds {
                return Ok(Some((u, v)));
            }
        }
    }
    Ok(None)
}

/// The four equivalent statements for trees, and the recursion edge for
/// well-covered trees other than `K₂`.
pub fn verify_tree_theorem(t: &Graph, graph_id: &str, caps: &Caps) -> Result<Entry> {
    if !t.is_tree() || t.n() < 2 {
        return Ok(Entry::Skipped("not a tree of order at least 2"));
    }
    let mut rec = Recorder::new(graph_id);
    let alpha = stability_number(t, caps)?.value;
    let wc = is_well_covered(t, caps)?.holds;
    let vwc = wc && t.n() == 2 * alpha;
    let pm = pendant_perfect_matching(t).is_some();
    let ss = is_square_stable(t, caps)?.holds;
    rec.check("tree_corollary", wc == vwc && vwc == pm && pm == ss, || {
        format!("well_covered={wc} very_well_covered={vwc} pendant_pm={pm} square_stable={ss}")
    });
    if wc && t.n() > 2 {
        let edge = recursion_edge(t, caps)?;
        rec.check("prop10", edge.is_some(), String::new);
    }
    Ok(rec.finish())
}

fn is_cycle_of(g: &Graph, n: usize) -> bool {
    g.n() == n && g.is_connected() && (0..n).all(|v| g.degree(v) == 2)
}

/// The five statements for graphs of girth at least 6.
///
/// Besides the stated exclusions `C₇` and `K₁`, `K₂` is skipped: both of
/// its vertices are pendant, so "exactly α pendant vertices" fails while
/// the other four hold. The fourth statement is read as "KE, order 2α and
/// exactly α pendant vertices", since stars `K₁,ₙ` with `n ≥ 3` satisfy the
/// literal wording without satisfying the others.
pub fn verify_girth6(g: &Graph, graph_id: &str, caps: &Caps) -> Result<Entry> {
    if !g.is_connected() || g.n() <= 2 {
        return Ok(Entry::Skipped("disconnected, K1 or K2"));
    }
    if matches!(g.girth(), Length::Finite(k) if k < 6) {
        return Ok(Entry::Skipped("girth below 6"));
    }
    if is_cycle_of(g, 7) {
        return Ok(Entry::Skipped("C7"));
    }
    let mut rec = Recorder::new(graph_id);
    let alpha = stability_number(g, caps)?.value;
    let wc = is_well_covered(g, caps)?.holds;
    let pm = pendant_perfect_matching(g).is_some();
    let vwc = wc && g.n() == 2 * alpha;
    let ke = is_koenig_egervary(g, caps)?;
    let ke_pendants = ke && pendant_count_matches(g, alpha);
    let ke_ss = ke && is_square_stable(g, caps)?.holds;
    let all = [wc, pm, vwc, ke_pendants, ke_ss];
    rec.check("girth6", all.iter().all(|&b| b == wc), || {
        format!("{all:?}")
    });
    Ok(rec.finish())
}

/// Ω(G) is a matroid basis family exactly when every component is a
/// clique; the two routes are compared inside [`omega_is_matroid`].
pub fn verify_matroid(g: &Graph, graph_id: &str, caps: &Caps) -> Result<Entry> {
    let mut rec = Recorder::new(graph_id);
    match omega_is_matroid(g, caps) {
        Ok(_) => {}
        Err(Error::Internal(msg)) => rec.check("matroid_routes", false, || msg),
        Err(e) => return Err(e),
    }
    Ok(rec.finish())
}

/// The classification each fixture's figure caption asserts.
pub fn verify_captions(g: &Graph, graph_id: &str, caps: &Caps) -> Result<Entry> {
    if !FIXTURE_NAMES.contains(&graph_id) {
        return Ok(Entry::Skipped("not a named fixture"));
    }
    let r = classify(g, caps)?;
    let mut rec = Recorder::new(graph_id);
    let mut expect = |clause: &str, ok: bool| rec.check(clause, ok, || format!("{r:?}"));
    match graph_id {
        "k3_plus_e" => {
            expect("koenig_egervary", r.koenig_egervary);
            expect("unique_perfect_matching", r.perfect_matching.is_unique());
            expect("not_square_stable", !r.square_stable);
            expect("alpha_plus_1", r.alpha_plus_class == AlphaPlusClass::Plus1);
        }
        "diamond" => expect("alpha_minus", r.alpha_minus),
        "fig_ss_not_vwc" => {
            expect("square_stable", r.square_stable);
            expect("not_very_well_covered", !r.very_well_covered);
        }
        "fig_upm_not_pendant" => {
            expect("square_stable", r.square_stable);
            let non_pendant_edge = match &r.perfect_matching {
                PerfectMatchingCount::Unique(m) => m
                    .edges()
                    .iter()
                    .any(|&(u, v)| g.degree(u) > 1 && g.degree(v) > 1),
                _ => false,
            };
            expect("unique_pm_with_non_pendant_edge", non_pendant_edge);
            expect("not_koenig_egervary", !r.koenig_egervary);
        }
        "fig_bip_vwc_not_ss" => {
            expect("bipartite", r.bipartite);
            expect("very_well_covered", r.very_well_covered);
            expect("not_square_stable", !r.square_stable);
            expect("square_not_koenig_egervary", !r.square_koenig_egervary);
        }
        _ => unreachable!("fixture list and captions out of sync"),
    }
    Ok(rec.finish())
}

/// A verification suite.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Suite {
    Equivalences,
    Chain,
    Implications,
    Trees,
    Girth6,
    Matroid,
    Captions,
}

impl Suite {
    pub const ALL: [Suite; 7] = [
        Suite::Equivalences,
        Suite::Chain,
        Suite::Implications,
        Suite::Trees,
        Suite::Girth6,
        Suite::Matroid,
        Suite::Captions,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Equivalences => "equivalences",
            Suite::Chain => "chain",
            Suite::Implications => "implications",
            Suite::Trees => "trees",
            Suite::Girth6 => "girth6",
            Suite::Matroid => "matroid",
            Suite::Captions => "captions",
        }
    }

    pub fn from_name(name: &str) -> Option<Suite> {
        Suite::ALL.into_iter().find(|s| s.name() == name)
    }
}

enum Outcome {
    Entry(Entry, Option<EquivalenceReport>),
    Refused,
}

fn run_one(entry: &CorpusEntry, suite: Suite, caps: &Caps) -> Result<Outcome> {
    let (g, id) = (&entry.graph, entry.id.as_str());
    let result = match suite {
        Suite::Equivalences => verify_equivalences(g, id, caps).map(|report| {
            let mut violations = Vec::new();
            if let Some(p) = &report.failing_pair {
                violations.push(Violation {
                    graph_id: id.to_string(),
                    clause: format!(
                        "equivalence ({}) vs ({})",
                        statement_label(p.first),
                        statement_label(p.second)
                    ),
                    witness: format!("{:?}", p.witness),
                });
            }
            (Entry::Checked(violations), Some(report))
        }),
        Suite::Chain => verify_inequality_chain(g, id, caps).map(|e| (e, None)),
        Suite::Implications => verify_implications(g, id, caps).map(|e| (e, None)),
        Suite::Trees => verify_tree_theorem(g, id, caps).map(|e| (e, None)),
        Suite::Girth6 => verify_girth6(g, id, caps).map(|e| (e, None)),
        Suite::Matroid => verify_matroid(g, id, caps).map(|e| (e, None)),
        Suite::Captions => verify_captions(g, id, caps).map(|e| (e, None)),
    };
    match result {
        Ok((e, r)) => Ok(Outcome::Entry(e, r)),
        Err(e) if e.is_cap_refusal() => Ok(Outcome::Refused),
        Err(Error::Internal(msg)) => Ok(Outcome::Entry(
            Entry::Checked(vec![Violation {
                graph_id: id.to_string(),
                clause: "internal".to_string(),
                witness: msg,
            }]),
            None,
        )),
        Err(e) => Err(e),
    }
}

/// Run one suite over a corpus. Graphs are processed in parallel; results
/// are ordered by graph id (ties keep corpus order). With `strict`, a cap
/// refusal aborts the run.
pub fn run_suite(
    corpus: &[CorpusEntry],
    suite: Suite,
    caps: &Caps,
    strict: bool,
) -> Result<SuiteResult> {
    let outcomes = corpus
        .par_iter()
        .map(|entry| run_one(entry, suite, caps))
        .collect::<Result<Vec<_>>>()?;
    let mut order: Vec<usize> = (0..corpus.len()).collect();
    order.sort_by(|&a, &b| corpus[a].id.cmp(&corpus[b].id));

    let mut result = SuiteResult {
        suite_name: suite.name().to_string(),
        graphs_checked: 0,
        skipped: 0,
        refused: 0,
        violations: Vec::new(),
        reports: Vec::new(),
    };
    let mut outcomes: Vec<Option<Outcome>> = outcomes.into_iter().map(Some).collect();
    for i in order {
        match outcomes[i].take().expect("each outcome is visited once") {
            Outcome::Refused if strict => {
                return Err(Error::Precondition(format!(
                    "cap refused graph {} in strict mode",
                    corpus[i].id
                )))
            }
            Outcome::Refused => result.refused += 1,
            Outcome::Entry(Entry::Skipped(_), _) => result.skipped += 1,
            Outcome::Entry(Entry::Checked(v), report) => {
                result.graphs_checked += 1;
                result.violations.extend(v);
                result.reports.extend(report);
            }
        }
    }
    Ok(result)
}

/// Run several suites, in the order given.
pub fn run_suites(
    corpus: &[CorpusEntry],
    suites: &[Suite],
    caps: &Caps,
    strict: bool,
) -> Result<Vec<SuiteResult>> {
    suites
        .iter()
        .map(|&s| run_suite(corpus, s, caps, strict))
        .collect()
}
