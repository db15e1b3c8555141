//! Brute-force reference implementations. Everything here scans subsets or
//! recurses naively and reads the graph only through `n()` and `has_edge`,
//! so it shares no code with the library routines it checks.
#![allow(dead_code, clippy::needless_range_loop, clippy::type_complexity)]

use squarestable::Graph;

pub fn members(mask: u64) -> impl Iterator<Item = usize> {
    (0..64).filter(move |&v| mask >> v & 1 == 1)
}

pub fn full(n: usize) -> u64 {
    if n == 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

pub fn is_stable(g: &Graph, mask: u64) -> bool {
    members(mask).all(|u| members(mask).all(|v| !g.has_edge(u, v)))
}

pub fn is_clique(g: &Graph, mask: u64) -> bool {
    members(mask).all(|u| members(mask).all(|v| u == v || g.has_edge(u, v)))
}

pub fn dominates(g: &Graph, mask: u64) -> bool {
    (0..g.n()).all(|v| mask >> v & 1 == 1 || members(mask).any(|u| g.has_edge(u, v)))
}

pub fn alpha(g: &Graph) -> usize {
    (0..=full(g.n()))
        .filter(|&m| is_stable(g, m))
        .map(|m| m.count_ones() as usize)
        .max()
        .unwrap_or(0)
}

/// Maximum stable sets as sorted vertex lists, in lexicographic order.
pub fn omega(g: &Graph) -> Vec<Vec<usize>> {
    let a = alpha(g);
    let mut out: Vec<Vec<usize>> = (0..=full(g.n()))
        .filter(|&m| m.count_ones() as usize == a && is_stable(g, m))
        .map(|m| members(m).collect())
        .collect();
    out.sort();
    out
}

pub fn maximal_stable(g: &Graph) -> Vec<Vec<usize>> {
    let mut out: Vec<Vec<usize>> = (0..=full(g.n()))
        .filter(|&m| {
            is_stable(g, m) && (0..g.n()).all(|v| m >> v & 1 == 1 || !is_stable(g, m | 1 << v))
        })
        .map(|m| members(m).collect())
        .collect();
    out.sort();
    out
}

pub fn gamma(g: &Graph) -> usize {
    (0..=full(g.n()))
        .filter(|&m| dominates(g, m))
        .map(|m| m.count_ones() as usize)
        .min()
        .unwrap_or(0)
}

pub fn idom(g: &Graph) -> usize {
    (0..=full(g.n()))
        .filter(|&m| is_stable(g, m) && dominates(g, m))
        .map(|m| m.count_ones() as usize)
        .min()
        .unwrap_or(0)
}

/// Fewest cliques partitioning the vertex set, by recursion on the lowest
/// uncovered vertex.
pub fn theta(g: &Graph) -> usize {
    fn go(g: &Graph, left: u64, memo: &mut std::collections::HashMap<u64, usize>) -> usize {
        if left == 0 {
            return 0;
        }
        if let Some(&v) = memo.get(&left) {
            return v;
        }
        let low = left & left.wrapping_neg();
        let rest = left & !low;
        let mut best = usize::MAX;
        let mut sub = rest;
        loop {
            let c = sub | low;
            if is_clique(g, c) {
                best = best.min(1 + go(g, left & !c, memo));
            }
            if sub == 0 {
                break;
            }
            sub = (sub - 1) & rest;
        }
        memo.insert(left, best);
        best
    }
    go(g, full(g.n()), &mut Default::default())
}

/// Maximum matching size: the lowest vertex is either unmatched or matched
/// to one of its neighbours.
pub fn mu(g: &Graph) -> usize {
    fn go(g: &Graph, left: u64) -> usize {
        let Some(v) = members(left).next() else {
            return 0;
        };
        let rest = left & !(1 << v);
        let mut best = go(g, rest);
        for u in members(rest).filter(|&u| g.has_edge(u, v)) {
            best = best.max(1 + go(g, rest & !(1 << u)));
        }
        best
    }
    go(g, full(g.n()))
}

/// Perfect matchings of the subgraph induced on `left`, as edge lists.
pub fn perfect_matchings_within(g: &Graph, left: u64) -> Vec<Vec<(usize, usize)>> {
    let Some(v) = members(left).next() else {
        return vec![Vec::new()];
    };
    let rest = left & !(1 << v);
    let mut out = Vec::new();
    for u in members(rest).filter(|&u| g.has_edge(u, v)) {
        for mut m in perfect_matchings_within(g, rest & !(1 << u)) {
            m.push((v, u));
            out.push(m);
        }
    }
    out
}

pub fn perfect_matchings(g: &Graph) -> Vec<Vec<(usize, usize)>> {
    perfect_matchings_within(g, full(g.n()))
}

/// Number of matchings that saturate `a` using edges into `s`.
pub fn matchings_into(g: &Graph, a: &[usize], s: u64) -> usize {
    let Some((&first, rest)) = a.split_first() else {
        return 1;
    };
    members(s)
        .filter(|&t| g.has_edge(first, t))
        .map(|t| matchings_into(g, rest, s & !(1 << t)))
        .sum()
}

pub fn distances(g: &Graph) -> Vec<Vec<usize>> {
    let n = g.n();
    let inf = usize::MAX / 4;
    let mut d = vec![vec![inf; n]; n];
    for u in 0..n {
        d[u][u] = 0;
        for v in 0..n {
            if g.has_edge(u, v) {
                d[u][v] = 1;
            }
        }
    }
    for k in 0..n {
        for i in 0..n {
            for j in 0..n {
                d[i][j] = d[i][j].min(d[i][k] + d[k][j]);
            }
        }
    }
    d
}

pub const INF: usize = usize::MAX / 4;

pub fn square_edges(g: &Graph) -> Vec<(usize, usize)> {
    let d = distances(g);
    (0..g.n())
        .flat_map(|u| (u + 1..g.n()).map(move |v| (u, v)))
        .filter(|&(u, v)| d[u][v] <= 2)
        .collect()
}

pub fn is_connected(g: &Graph) -> bool {
    let d = distances(g);
    g.n() > 0 && d[0].iter().all(|&x| x < INF)
}

/// Orders of the vertex sets that induce a cycle.
pub fn induced_cycle_lengths(g: &Graph) -> Vec<usize> {
    (0..=full(g.n()))
        .filter(|&m| m.count_ones() >= 3)
        .filter(|&m| {
            let sub = Graph::from_edges(
                g.n(),
                &members(m)
                    .flat_map(|u| members(m).map(move |v| (u, v)))
                    .filter(|&(u, v)| u < v && g.has_edge(u, v))
                    .collect::<Vec<_>>(),
            )
            .unwrap();
            members(m).all(|v| members(m).filter(|&u| sub.has_edge(u, v)).count() == 2) && {
                let d = distances(&sub);
                let first = members(m).next().unwrap();
                members(m).all(|v| d[first][v] < INF)
            }
        })
        .map(|m| m.count_ones() as usize)
        .collect()
}

pub fn girth(g: &Graph) -> Option<usize> {
    induced_cycle_lengths(g).into_iter().min()
}

pub fn is_chordal(g: &Graph) -> bool {
    induced_cycle_lengths(g).into_iter().all(|k| k == 3)
}

pub fn is_well_covered(g: &Graph) -> bool {
    let isolated = (0..g.n()).any(|v| (0..g.n()).all(|u| !g.has_edge(u, v)));
    let a = alpha(g);
    !isolated && maximal_stable(g).iter().all(|s| s.len() == a)
}

pub fn pendant_count(g: &Graph) -> usize {
    (0..g.n())
        .filter(|&v| (0..g.n()).filter(|&u| g.has_edge(u, v)).count() == 1)
        .count()
}

/// Some perfect matching uses only edges with a degree-one endpoint.
pub fn has_pendant_pm(g: &Graph) -> bool {
    let deg = |v: usize| (0..g.n()).filter(|&u| g.has_edge(u, v)).count();
    perfect_matchings(g)
        .iter()
        .any(|m| m.iter().all(|&(u, v)| deg(u) == 1 || deg(v) == 1))
}

/// Maximal cliques containing a vertex whose closed neighbourhood is a
/// clique, as bitmasks.
pub fn simplexes(g: &Graph) -> Vec<u64> {
    let closed = |v: usize| {
        (0..g.n())
            .filter(|&u| u == v || g.has_edge(u, v))
            .fold(0u64, |m, u| m | 1 << u)
    };
    let simplicial: Vec<usize> = (0..g.n()).filter(|&v| is_clique(g, closed(v))).collect();
    simplicial
        .iter()
        .map(|&v| closed(v))
        .collect::<std::collections::BTreeSet<_>>()
        .into_iter()
        .collect()
}

pub fn every_vertex_in_one_simplex(g: &Graph) -> bool {
    let s = simplexes(g);
    (0..g.n()).all(|v| s.iter().filter(|&&m| m >> v & 1 == 1).count() == 1)
}

pub fn stable_subsets(g: &Graph, within: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut sub = within;
    loop {
        if is_stable(g, sub) {
            out.push(sub);
        }
        if sub == 0 {
            break;
        }
        sub = (sub - 1) & within;
    }
    out
}

/// P1 by definition: each stable `A` outside `s` has exactly one matching into `s`.
pub fn p1(g: &Graph, s: u64) -> bool {
    stable_subsets(g, full(g.n()) & !s).into_iter().all(|a| {
        let a: Vec<usize> = members(a).collect();
        matchings_into(g, &a, s) == 1
    })
}

/// P2 by definition: for each stable non-empty `A` outside `s` some subset
/// `S*` of `s` makes `A ∪ S*` a maximum stable set.
pub fn p2(g: &Graph, s: u64) -> bool {
    let a_max = alpha(g);
    stable_subsets(g, full(g.n()) & !s)
        .into_iter()
        .filter(|&a| a != 0)
        .all(|a| {
            let mut sub = s;
            loop {
                let c = a | sub;
                if c.count_ones() as usize == a_max && is_stable(g, c) {
                    return true;
                }
                if sub == 0 {
                    return false;
                }
                sub = (sub - 1) & s;
            }
        })
}

pub fn mask(vs: &[usize]) -> u64 {
    vs.iter().fold(0, |m, &v| m | 1 << v)
}

pub fn square(g: &Graph) -> Graph {
    Graph::from_edges(g.n(), &square_edges(g)).unwrap()
}

/// All 13 statements of the equivalence theorem, each by brute force, for
/// a connected graph.
pub fn theorem_statements(g: &Graph) -> [bool; 13] {
    let sq = square(g);
    let a = alpha(g);
    let a2 = alpha(&sq);
    let t = theta(g);
    let t2 = theta(&sq);
    let chain = [a2, t2, gamma(g), idom(g), a, t];
    let om: Vec<u64> = omega(g).iter().map(|s| mask(s)).collect();
    let om2: Vec<u64> = omega(&sq).iter().map(|s| mask(s)).collect();
    let d = distances(g);
    let far = |s: u64| members(s).all(|x| members(s).all(|y| x == y || d[x][y] >= 3));
    let pair_all = |test: &dyn Fn(&[Vec<(usize, usize)>], u64) -> bool| {
        om.iter().all(|&s1| {
            om2.iter()
                .all(|&s2| test(&perfect_matchings_within(g, s1 ^ s2), s1 ^ s2))
        })
    };
    let induced = |ms: &[Vec<(usize, usize)>], _: u64| {
        ms.iter().any(|m| {
            m.iter().all(|&(a, b)| {
                m.iter().all(|&(c, e)| {
                    (a, b) == (c, e)
                        || !(g.has_edge(a, c)
                            || g.has_edge(a, e)
                            || g.has_edge(b, c)
                            || g.has_edge(b, e))
                })
            })
        })
    };
    [
        every_vertex_in_one_simplex(g),
        a == a2,
        t == t2,
        chain.iter().all(|&x| x == a),
        om2.iter().all(|s| om.contains(s)),
        om.iter().any(|&s| far(s)),
        om.iter().any(|&s| p1(g, s)),
        om2.iter().all(|&s| p1(g, s)),
        pair_all(&|ms, _| ms.len() == 1),
        pair_all(&|ms, _| !ms.is_empty()),
        pair_all(&induced),
        om.iter().any(|&s| p2(g, s)),
        om2.iter().all(|&s| p2(g, s)),
    ]
}

/// Number of graphs on `n` vertices up to isomorphism, by scanning every
/// adjacency matrix and keeping the smallest relabelling of each.
pub fn count_graphs_naive(n: usize, connected_only: bool) -> usize {
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .collect();
    let mut perms = vec![Vec::new()];
    for k in 0..n {
        perms = perms
            .into_iter()
            .flat_map(|p: Vec<usize>| {
                (0..=k).map(move |i| {
                    let mut q = p.clone();
                    q.insert(i, k);
                    q
                })
            })
            .collect();
    }
    let mut seen = std::collections::BTreeSet::new();
    for bits in 0u64..1 << pairs.len() {
        let edges: Vec<_> = pairs
            .iter()
            .enumerate()
            .filter(|&(i, _)| bits >> i & 1 == 1)
            .map(|(_, &e)| e)
            .collect();
        let g = Graph::from_edges(n, &edges).unwrap();
        if connected_only && !is_connected(&g) {
            continue;
        }
        let canon = perms
            .iter()
            .map(|p| {
                let mut e: Vec<_> = edges
                    .iter()
                    .map(|&(u, v)| (p[u].min(p[v]), p[u].max(p[v])))
                    .collect();
                e.sort();
                e
            })
            .min()
            .unwrap();
        seen.insert(canon);
    }
    seen.len()
}
