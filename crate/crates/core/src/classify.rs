//! Graph-class predicates: square-stability, (very) well-coveredness, the
//! König–Egerváry property, simplicial structure, α⁺/α⁻ stability, the two
//! exchange properties of maximum stable sets, and the matroid test on Ω.
//!
//! Several predicates are computed along two independent routes (the
//! definition and a characterization of it). A disagreement between routes
//! is reported as [`Error::Internal`], never resolved silently.
//!
//! Disconnected graphs are accepted everywhere. Square-stability of a
//! disconnected graph is the conjunction over its components, which is also
//! what evaluating `α(G) = α(G²)` on the whole graph gives, since both sides
//! add up over components.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::matching::{
    match_into, maximum_matching, pendant_perfect_matching, unique_perfect_matching, Matching,
    PerfectMatchingCount,
};
use crate::solve::{
    alpha_within, find_stable_subset, maximal_stable_sets, maximum_stable_sets, stability_number,
    StableSetFamily,
};
use crate::{Caps, Error, Graph, Result, VertexSet};

/// A maximal clique with at least one simplicial vertex.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Simplex {
    pub clique: VertexSet,
    pub simplicial_members: VertexSet,
}

/// Classification by the size of the intersection of all maximum stable sets.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum AlphaPlusClass {
    /// Two or more vertices lie in every maximum stable set.
    #[serde(rename = "NOT_PLUS")]
    NotPlus,
    #[serde(rename = "PLUS_0")]
    Plus0,
    #[serde(rename = "PLUS_1")]
    Plus1,
}

impl AlphaPlusClass {
    pub fn is_alpha_plus(self) -> bool {
        self != AlphaPlusClass::NotPlus
    }
}

/// Evidence attached to a verdict.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Witness {
    Set(VertexSet),
    Vertex(usize),
    Edge((usize, usize)),
    Matching(Matching),
    Pair(VertexSet, VertexSet),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Verdict {
    pub holds: bool,
    pub witness: Option<Witness>,
}

impl Verdict {
    fn new(holds: bool, witness: Option<Witness>) -> Self {
        Verdict { holds, witness }
    }
}

/// `α(G) = α(G²)`. When true the witness is the lexicographically smallest
/// maximum stable set of `G²`, which is then maximum in `G` and has all
/// pairwise distances at least 3.
pub fn is_square_stable(g: &Graph, caps: &Caps) -> Result<Verdict> {
    let alpha = stability_number(g, caps)?;
    let sq = stability_number(&g.square(), caps)?;
    let holds = alpha.value == sq.value;
    Ok(Verdict::new(
        holds,
        holds.then_some(Witness::Set(sq.witness)),
    ))
}

/// Well-covered: no isolated vertices and every maximal stable set is
/// maximum. The witness is the isolated vertex, or a maximal stable set of
/// smaller size.
pub fn is_well_covered(g: &Graph, caps: &Caps) -> Result<Verdict> {
    caps.check_enumeration(g)?;
    if let Some(v) = g.isolated_vertices().min() {
        return Ok(Verdict::new(false, Some(Witness::Vertex(v))));
    }
    let maximal = maximal_stable_sets(g, caps)?;
    let alpha = maximal.iter().map(|s| s.len()).max().unwrap_or(0);
    let short = maximal
        .iter()
        .filter(|s| s.len() < alpha)
        .min_by_key(|s| (s.len(), **s));
    Ok(match short {
        Some(&s) => Verdict::new(false, Some(Witness::Set(s))),
        None => Verdict::new(true, None),
    })
}

/// Well-covered with `|V| = 2α`.
pub fn is_very_well_covered(g: &Graph, caps: &Caps) -> Result<bool> {
    Ok(is_well_covered(g, caps)?.holds && g.n() == 2 * stability_number(g, caps)?.value)
}

/// `α(G) + μ(G) = |V(G)|`.
pub fn is_koenig_egervary(g: &Graph, caps: &Caps) -> Result<bool> {
    Ok(stability_number(g, caps)?.value + maximum_matching(g).len() == g.n())
}

/// Vertices whose neighbourhood induces a clique (isolated vertices included).
pub fn simplicial_vertices(g: &Graph) -> VertexSet {
    (0..g.n())
        .filter(|&v| g.is_clique(g.neighbors(v)))
        .collect()
}

/// Maximal cliques that contain a simplicial vertex.
pub fn simplexes(g: &Graph) -> Vec<Simplex> {
    let simplicial = simplicial_vertices(g);
    g.maximal_cliques()
        .into_iter()
        .filter_map(|clique| {
            let members = clique.intersection(simplicial);
            (!members.is_empty()).then_some(Simplex {
                clique,
                simplicial_members: members,
            })
        })
        .collect()
}

/// Every vertex lies in exactly one simplex.
pub fn simplex_partition_check(g: &Graph) -> bool {
    let mut seen = VertexSet::EMPTY;
    for s in simplexes(g) {
        if !seen.is_disjoint(s.clique) {
            return false;
        }
        seen = seen.union(s.clique);
    }
    seen == g.vertices()
}

/// Every vertex is simplicial or adjacent to a simplicial vertex.
pub fn is_simplicial_graph(g: &Graph) -> bool {
    let simplicial = simplicial_vertices(g);
    (0..g.n()).all(|v| !g.closed_neighbors(v).is_disjoint(simplicial))
}

/// α⁻-stability with evidence and whether the second route ran.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AlphaMinus {
    pub holds: bool,
    /// An edge whose deletion raises α, when not α⁻-stable.
    pub critical_edge: Option<(usize, usize)>,
    pub cross_checked: bool,
}

/// `α(G - e) = α(G)` for every edge `e`.
///
/// Route one deletes each edge and re-solves. Route two, run when Ω is
/// enumerable, asks that every vertex outside any `S ∈ Ω(G)` has at least
/// two neighbours in `S`.
pub fn alpha_minus_stable(g: &Graph, caps: &Caps) -> Result<AlphaMinus> {
    let alpha = stability_number(g, caps)?.value;
    let critical_edge = g.edges().find(|&(u, v)| {
        let edges: Vec<_> = g.edges().filter(|&e| e != (u, v)).collect();
        let h = Graph::from_edges(g.n(), &edges).expect("subgraph of a valid graph");
        alpha_within(&h, h.vertices()) != alpha
    });
    let holds = critical_edge.is_none();
    let cross_checked = caps.check_enumeration(g).is_ok();
    if cross_checked {
        let omega = maximum_stable_sets(g, caps)?;
        let by_omega = omega.sets.iter().all(|&s| {
            g.vertices()
                .difference(s)
                .iter()
                .all(|v| g.neighbors(v).intersection(s).len() >= 2)
        });
        if by_omega != holds {
            return Err(Error::Internal(format!(
                "α⁻ routes disagree on {g:?}: edge deletion says {holds}, Ω says {by_omega}"
            )));
        }
    }
    Ok(AlphaMinus {
        holds,
        critical_edge,
        cross_checked,
    })
}

/// Classify by `|∩Ω(G)|`, cross-checked against adding every non-edge.
pub fn alpha_plus_class(g: &Graph, caps: &Caps) -> Result<AlphaPlusClass> {
    let omega = maximum_stable_sets(g, caps)?;
    alpha_plus_from_family(g, &omega)
}

fn alpha_plus_from_family(g: &Graph, omega: &StableSetFamily) -> Result<AlphaPlusClass> {
    let class = match omega.core.len() {
        0 => AlphaPlusClass::Plus0,
        1 => AlphaPlusClass::Plus1,
        _ => AlphaPlusClass::NotPlus,
    };
    let alpha = omega.sets.first().map_or(0, |s| s.len());
    let comp = g.complement();
    let by_definition = comp.edges().all(|(u, v)| {
        let mut edges: Vec<_> = g.edges().collect();
        edges.push((u, v));
        let h = Graph::from_edges(g.n(), &edges).expect("supergraph of a valid graph");
        alpha_within(&h, h.vertices()) == alpha
    });
    if by_definition != class.is_alpha_plus() {
        return Err(Error::Internal(format!(
            "α⁺ routes disagree on {g:?}: core {} vs edge addition {by_definition}",
            omega.core
        )));
    }
    Ok(class)
}

fn require_maximum(g: &Graph, s0: VertexSet, caps: &Caps) -> Result<()> {
    if !g.is_stable(s0) || s0.len() != stability_number(g, caps)?.value {
        return Err(Error::Precondition(format!(
            "{s0} is not a maximum stable set"
        )));
    }
    Ok(())
}

/// P1 by definition: every stable set disjoint from `s` is matched into `s`
/// in exactly one way. Returns a stable set where this fails. Valid for any
/// vertex set `s`.
pub(crate) fn p1_obstruction(g: &Graph, s: VertexSet) -> Option<VertexSet> {
    let outside = g.vertices().difference(s);
    find_stable_subset(g, outside, |a| {
        match_into(g, a, s).map_or(true, |r| r.count != 1)
    })
}

/// P1 for a maximum stable set `s0`.
///
/// The exhaustive route checks every stable `A` disjoint from `s0`. The
/// local route asks that each vertex outside `s0` has exactly one neighbour
/// in it: matchings of `A` are then forced, and exist by maximality.
pub fn property_p1(g: &Graph, s0: VertexSet, caps: &Caps) -> Result<bool> {
    require_maximum(g, s0, caps)?;
    caps.check_enumeration(g)?;
    let exhaustive = p1_obstruction(g, s0).is_none();
    let local = g
        .vertices()
        .difference(s0)
        .iter()
        .all(|v| g.neighbors(v).intersection(s0).len() == 1);
    if exhaustive != local {
        return Err(Error::Internal(format!(
            "P1 routes disagree on {g:?} at {s0}: exhaustive {exhaustive}, local {local}"
        )));
    }
    Ok(exhaustive)
}

/// P2 by construction: for every non-empty stable `A` disjoint from `s`,
/// `A ∪ (s - N(A))` must be a maximum stable set of `G`. Every admissible
/// `S* ⊆ s` lies inside `s - N(A)`, so this is the only candidate that can
/// reach size `α`. The empty `A` is accepted vacuously. Returns a failing `A`.
pub(crate) fn p2_obstruction(g: &Graph, s: VertexSet, alpha: usize) -> Option<VertexSet> {
    let outside = g.vertices().difference(s);
    find_stable_subset(g, outside, |a| {
        if a.is_empty() {
            return false;
        }
        let star = s.difference(g.neighbors_of_set(a));
        star.union(a).len() != alpha
    })
}

/// P2 for a maximum stable set `s0`.
pub fn property_p2(g: &Graph, s0: VertexSet, caps: &Caps) -> Result<bool> {
    require_maximum(g, s0, caps)?;
    caps.check_enumeration(g)?;
    Ok(p2_obstruction(g, s0, s0.len()).is_none())
}

/// Is `Ω(G)` the set of bases of a matroid?
///
/// Route one checks the basis-exchange axiom on Ω directly, together with
/// every vertex lying in some member of Ω (a matroid *on V* has no loops;
/// without this, any graph with a single maximum stable set would pass).
/// Route two checks that every component is a clique.
pub fn omega_is_matroid(g: &Graph, caps: &Caps) -> Result<bool> {
    let omega = maximum_stable_sets(g, caps)?;
    let exchange = omega.sets.iter().all(|&b1| {
        omega.sets.iter().all(|&b2| {
            b1.difference(b2).iter().all(|x| {
                b2.difference(b1).iter().any(|y| {
                    let mut swapped = b1;
                    swapped.remove(x);
                    swapped.insert(y);
                    omega.contains(swapped)
                })
            })
        })
    });
    let covered = omega
        .sets
        .iter()
        .fold(VertexSet::EMPTY, |acc, &s| acc.union(s));
    let exchange = exchange && covered == g.vertices();
    let cliques = g.components().into_iter().all(|c| g.is_clique(c));
    if exchange != cliques {
        return Err(Error::Internal(format!(
            "matroid routes disagree on {g:?}: exchange {exchange}, cliques {cliques}"
        )));
    }
    Ok(exchange)
}

/// Every verdict for one graph.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ClassificationReport {
    pub square_stable: bool,
    pub well_covered: bool,
    pub very_well_covered: bool,
    pub koenig_egervary: bool,
    pub square_koenig_egervary: bool,
    pub bipartite: bool,
    pub simplicial_graph: bool,
    pub chordal: bool,
    pub simplex_partition: bool,
    pub alpha_minus: bool,
    pub alpha_minus_cross_checked: bool,
    pub alpha_plus_class: AlphaPlusClass,
    pub omega_matroid: bool,
    pub perfect_matching: PerfectMatchingCount,
    pub pendant_perfect_matching: Option<Matching>,
    pub pendant_vertices: VertexSet,
    pub simplexes: Vec<Simplex>,
    pub witnesses: BTreeMap<String, Witness>,
}

/// Run every predicate and check the report-level implications.
///
/// For graphs without isolated vertices, square-stability forces
/// well-coveredness, the `PLUS_0` class and failure of α⁻-stability. A
/// graph with an isolated vertex is never well-covered and keeps that
/// vertex in every maximum stable set, so the implications are not checked
/// there.
pub fn classify(g: &Graph, caps: &Caps) -> Result<ClassificationReport> {
    let mut witnesses = BTreeMap::new();

    let ss = is_square_stable(g, caps)?;
    if let Some(w) = ss.witness.clone() {
        witnesses.insert("square_stable".to_string(), w);
    }
    let wc = is_well_covered(g, caps)?;
    if let Some(w) = wc.witness.clone() {
        witnesses.insert("not_well_covered".to_string(), w);
    }
    let alpha = stability_number(g, caps)?;
    let vwc = wc.holds && g.n() == 2 * alpha.value;
    let ke = is_koenig_egervary(g, caps)?;
    let square_ke = is_koenig_egervary(&g.square(), caps)?;
    let am = alpha_minus_stable(g, caps)?;
    if let Some(e) = am.critical_edge {
        witnesses.insert("alpha_critical_edge".to_string(), Witness::Edge(e));
    }
    let omega = maximum_stable_sets(g, caps)?;
    let plus = alpha_plus_from_family(g, &omega)?;
    witnesses.insert("omega_core".to_string(), Witness::Set(omega.core));
    let matroid = omega_is_matroid(g, caps)?;
    let pendant_pm = pendant_perfect_matching(g);
    let report = ClassificationReport {
        square_stable: ss.holds,
        well_covered: wc.holds,
        very_well_covered: vwc,
        koenig_egervary: ke,
        square_koenig_egervary: square_ke,
        bipartite: g.is_bipartite(),
        simplicial_graph: is_simplicial_graph(g),
        chordal: g.is_chordal(),
        simplex_partition: simplex_partition_check(g),
        alpha_minus: am.holds,
        alpha_minus_cross_checked: am.cross_checked,
        alpha_plus_class: plus,
        omega_matroid: matroid,
        perfect_matching: unique_perfect_matching(g),
        pendant_perfect_matching: pendant_pm,
        pendant_vertices: g.pendant_vertices(),
        simplexes: simplexes(g),
        witnesses,
    };

    if report.very_well_covered && !report.well_covered {
        return Err(Error::Internal(
            "very well-covered but not well-covered".into(),
        ));
    }
    if report.square_stable
        && !g.has_isolated_vertex()
        && (!report.well_covered
            || report.alpha_plus_class != AlphaPlusClass::Plus0
            || report.alpha_minus)
    {
        return Err(Error::Internal(format!(
            "square-stable graph {g:?} violates the corollaries: {report:?}"
        )));
    }
    Ok(report)
}
