use serde::{Deserialize, Serialize};

use crate::detect::oracle::{max_stable_in, Limits};
use crate::detect::pattern::{find_induced, Pattern};
use crate::error::{Error, Result};
use crate::graph::{find_p3, Graph, VertexSet};

/// Components of a P3-free set; each one is a clique.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CliquePartition {
    pub parts: Vec<VertexSet>,
}

pub fn is_p3_free(g: &Graph, s: VertexSet) -> bool {
    find_p3(g, s).is_none()
}

/// Splits a P3-free set into its cliques, ordered by least member.
pub fn clique_partition(g: &Graph, s: VertexSet) -> Result<CliquePartition> {
    if let Some(w) = find_p3(g, s) {
        return Err(Error::NotP3Free { witness: w });
    }
    Ok(CliquePartition { parts: g.components_of(s) })
}

/// A maximum stable set of `G[u]`: the least vertex of each clique when
/// `u` is P3-free, the lexicographically least maximum stable set otherwise.
pub fn r_set(g: &Graph, u: VertexSet) -> VertexSet {
    if is_p3_free(g, u) {
        g.components_of(u).iter().filter_map(|c| c.first()).collect()
    } else {
        max_stable_in(g, u)
    }
}

/// Per-vertex pair of cliques covering the neighborhood.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct QuasiLineCertificate {
    pub cliques: Vec<(VertexSet, VertexSet)>,
}

impl QuasiLineCertificate {
    /// Both sets cliques, their union exactly `N(v)`, for every `v`.
    pub fn verify(&self, g: &Graph) -> bool {
        self.cliques.len() == g.n()
            && self.cliques.iter().enumerate().all(|(v, &(a, b))| {
                g.is_clique(a) && g.is_clique(b) && (a | b) == g.neighbors(v)
            })
    }
}

/// Two-colors the complement of `G[s]`; the color classes are cliques of `G`.
fn co_bipartition(g: &Graph, s: VertexSet) -> Option<(VertexSet, VertexSet)> {
    let mut side = [VertexSet::EMPTY, VertexSet::EMPTY];
    let mut rest = s;
    while let Some(start) = rest.first() {
        side[0].insert(start);
        rest.remove(start);
        let mut stack = vec![(start, 0usize)];
        while let Some((v, c)) = stack.pop() {
            let anti = (s - g.neighbors(v)).without(v);
            if anti.intersects(side[c]) {
                return None;
            }
            for u in anti & rest {
                side[1 - c].insert(u);
                rest.remove(u);
                stack.push((u, 1 - c));
            }
        }
    }
    Some((side[0], side[1]))
}

pub fn is_quasi_line(g: &Graph) -> Option<QuasiLineCertificate> {
    let mut cliques = Vec::with_capacity(g.n());
    for v in 0..g.n() {
        cliques.push(co_bipartition(g, g.neighbors(v))?);
    }
    Some(QuasiLineCertificate { cliques })
}

/// Chordality of `G[s]` via maximum cardinality search and a perfect
/// elimination check.
pub fn is_chordal_in(g: &Graph, s: VertexSet) -> bool {
    let mut weight = [0usize; 128];
    let mut numbered = VertexSet::EMPTY;
    let mut order = Vec::with_capacity(s.len());
    for _ in 0..s.len() {
        let v = (s - numbered).iter().max_by_key(|&v| (weight[v], std::cmp::Reverse(v))).unwrap();
        for u in (g.neighbors(v) & s) - numbered {
            weight[u] += 1;
        }
        numbered.insert(v);
        order.push(v);
    }
    // order is the reverse of a perfect elimination ordering iff chordal
    let mut earlier = VertexSet::EMPTY;
    for &v in &order {
        let prev = g.neighbors(v) & earlier;
        if let Some(&p) = order.iter().rev().skip_while(|&&u| !prev.contains(u)).next() {
            let rest = prev.without(p);
            if !rest.is_subset(g.neighbors(p)) {
                return false;
            }
        }
        earlier.insert(v);
    }
    true
}

pub fn is_chordal(g: &Graph) -> bool {
    is_chordal_in(g, g.vertices())
}

/// No odd hole and no odd antihole.
pub fn is_perfect(g: &Graph) -> Result<bool> {
    is_perfect_with(g, &Limits::default())
}

pub fn is_perfect_with(g: &Graph, limits: &Limits) -> Result<bool> {
    Ok(imperfection_witness(g, limits)?.is_none())
}

/// An odd hole or antihole if the graph has one.
pub fn imperfection_witness(g: &Graph, limits: &Limits) -> Result<Option<(Pattern, Vec<usize>)>> {
    limits.check("perfection test", g.n(), limits.perfect)?;
    for p in [Pattern::OddHole(5), Pattern::OddAntihole(5)] {
        if let Some(w) = find_induced(g, p) {
            return Ok(Some((p, w)));
        }
    }
    Ok(None)
}

pub fn is_3k1_free(g: &Graph) -> bool {
    find_induced(g, Pattern::ThreeK1).is_none()
}

/// First forbidden pattern (P5, then 4-wheel) with its embedding.
pub fn class_violation(g: &Graph) -> Option<(Pattern, Vec<usize>)> {
    [Pattern::P5, Pattern::FourWheel]
        .into_iter()
        .find_map(|p| find_induced(g, p).map(|w| (p, w)))
}

/// (P5, 4-wheel)-freeness.
pub fn in_class(g: &Graph) -> bool {
    class_violation(g).is_none()
}

pub(crate) fn require_in_class(g: &Graph) -> Result<()> {
    match class_violation(g) {
        None => Ok(()),
        Some((p, w)) => Err(Error::NotInClass { pattern: p.to_string(), witness: w }),
    }
}

/// `v` meets each `x`-clique fully or not at all, and fully meets at least one.
pub fn is_good_wrt(g: &Graph, v: usize, x: VertexSet) -> Result<bool> {
    let parts = clique_partition(g, x)?;
    let nv = g.neighbors(v);
    let all_or_nothing = parts.parts.iter().all(|k| k.is_subset(nv) || k.is_disjoint(nv));
    let some_full = parts.parts.iter().any(|k| k.is_subset(nv));
    Ok(all_or_nothing && some_full)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(v: &[usize]) -> VertexSet {
        v.iter().collect()
    }

    #[test]
    fn p3_free_and_partition() {
        let g = Graph::cycle(5);
        assert!(is_p3_free(&g, VertexSet::EMPTY));
        assert!(clique_partition(&g, VertexSet::EMPTY).unwrap().parts.is_empty());
        let k3k2 = Graph::from_edges(5, [(0, 1), (1, 2), (0, 2), (3, 4)]).unwrap();
        let parts = clique_partition(&k3k2, k3k2.vertices()).unwrap().parts;
        assert_eq!(parts, vec![set(&[0, 1, 2]), set(&[3, 4])]);
        assert!(!is_p3_free(&Graph::path(3), VertexSet::full(3)));
        assert!(clique_partition(&Graph::path(3), VertexSet::full(3)).is_err());
    }

    #[test]
    fn r_set_examples() {
        let g = Graph::cycle(5);
        assert_eq!(r_set(&g, VertexSet::EMPTY), VertexSet::EMPTY);
        let k3k2 = Graph::from_edges(5, [(0, 1), (1, 2), (0, 2), (3, 4)]).unwrap();
        assert_eq!(r_set(&k3k2, k3k2.vertices()), set(&[0, 3]));
        let r = r_set(&g, g.vertices());
        assert_eq!(r.len(), 2);
        assert!(g.is_stable(r));
    }

    #[test]
    fn quasi_line_examples() {
        let c = is_quasi_line(&Graph::cycle(5)).unwrap();
        assert!(c.verify(&Graph::cycle(5)));
        assert!(is_quasi_line(&Graph::wheel(5)).is_none());
        let k = Graph::complete(6);
        assert!(is_quasi_line(&k).unwrap().verify(&k));
    }

    #[test]
    fn perfect_examples() {
        let bip = Graph::from_edges(6, [(0, 3), (0, 4), (1, 4), (2, 5), (1, 5)]).unwrap();
        assert!(is_perfect(&bip).unwrap());
        assert!(!is_perfect(&Graph::cycle(5)).unwrap());
        assert!(!is_perfect(&Graph::cycle(7).complement()).unwrap());
        assert!(is_perfect(&Graph::cycle(6)).unwrap());
    }

    #[test]
    fn class_examples() {
        assert!(!in_class(&Graph::cycle(6)));
        assert!(!in_class(&Graph::wheel(4)));
        assert!(in_class(&Graph::wheel(5)));
        assert!(is_3k1_free(&Graph::cycle(5)));
        assert!(!is_3k1_free(&Graph::cycle(6)));
    }

    #[test]
    fn chordal_examples() {
        assert!(is_chordal(&Graph::complete(5)));
        assert!(is_chordal(&Graph::path(6)));
        assert!(!is_chordal(&Graph::cycle(4)));
        assert!(!is_chordal(&Graph::cycle(5)));
        // a triangulated hexagon
        let g = Graph::from_edges(6, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 0), (0, 2), (0, 3), (0, 4)]).unwrap();
        assert!(is_chordal(&g));
    }

    #[test]
    fn good_wrt_examples() {
        // x = {1,2} clique plus {3}; v = 0
        let g = Graph::from_edges(4, [(1, 2), (0, 1), (0, 2), (0, 3)]).unwrap();
        assert!(is_good_wrt(&g, 0, set(&[1, 2, 3])).unwrap());
        let half = Graph::from_edges(3, [(1, 2), (0, 1)]).unwrap();
        assert!(!is_good_wrt(&half, 0, set(&[1, 2])).unwrap());
        let none = Graph::from_edges(3, [(1, 2)]).unwrap();
        assert!(!is_good_wrt(&none, 0, set(&[1, 2])).unwrap());
        assert!(is_good_wrt(&Graph::path(4), 3, set(&[0, 1, 2])).is_err());
    }
}
