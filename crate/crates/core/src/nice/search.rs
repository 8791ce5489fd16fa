//! Exhaustive certificate search for small graphs.

use crate::detect::{cliques_of_size_in, omega_in, Limits};
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};

use super::NiceCertificate;

struct Search<'a> {
    g: &'a Graph,
    cliques: Vec<VertexSet>,
    class: [VertexSet; 3],
    excluded: VertexSet,
}

impl Search<'_> {
    fn chosen(&self) -> VertexSet {
        self.class[0] | self.class[1] | self.class[2]
    }

    fn colors_for(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        // Classes are interchangeable, so an empty class is only tried once.
        let first_empty = (0..3).find(|&c| self.class[c].is_empty()).unwrap_or(3);
        (0..3).filter(move |&c| c <= first_empty && !self.g.neighbors(v).intersects(self.class[c]))
    }

    fn run(&mut self) -> bool {
        let chosen = self.chosen();
        let mut best: Option<(VertexSet, usize)> = None;
        for &k in &self.cliques {
            if k.intersects(chosen) {
                continue;
            }
            let open: VertexSet = (k - self.excluded).iter().filter(|&v| self.colors_for(v).next().is_some()).collect();
            if open.is_empty() {
                return false;
            }
            if best.is_none_or(|(b, _)| open.len() < b.len()) {
                best = Some((open, k.len()));
            }
        }
        let Some((open, _)) = best else { return true };
        let saved = self.excluded;
        for v in open.iter() {
            let colors: Vec<usize> = self.colors_for(v).collect();
            for c in colors {
                self.class[c].insert(v);
                if self.run() {
                    return true;
                }
                self.class[c].remove(v);
            }
            self.excluded.insert(v);
        }
        self.excluded = saved;
        false
    }
}

/// Searches for three disjoint stable sets meeting every clique of size
/// `max(ω - 1, 1)`; `None` means `g` is not nice.
pub fn nice_search_fallback(g: &Graph) -> Result<Option<NiceCertificate>> {
    nice_search_fallback_with(g, &Limits::default())
}

pub fn nice_search_fallback_with(g: &Graph, limits: &Limits) -> Result<Option<NiceCertificate>> {
    if g.n() > limits.nice_search {
        return Err(Error::ResourceCap { what: "nice_search_fallback", n: g.n(), cap: limits.nice_search });
    }
    let omega = omega_in(g, g.vertices());
    let size = omega.saturating_sub(1).max(1);
    let cliques = if omega == 0 { Vec::new() } else { cliques_of_size_in(g, g.vertices(), size) };
    let mut s = Search { g, cliques, class: [VertexSet::EMPTY; 3], excluded: VertexSet::EMPTY };
    Ok(s.run().then(|| NiceCertificate::new(s.class[0], s.class[1], s.class[2])))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::nice::verify_nice;

    #[test]
    fn small_cases() {
        for g in [Graph::cycle(5), Graph::complete(3), Graph::wheel(5), Graph::cycle(7).complement()] {
            let c = nice_search_fallback(&g).unwrap().expect("nice");
            assert!(verify_nice(&g, &c).unwrap().is_valid());
        }
    }

    /// Mycielski's graph of C5: triangle-free with χ = 4.
    fn grotzsch() -> Graph {
        let mut e: Vec<(usize, usize)> = (0..5).map(|i| (i, (i + 1) % 5)).collect();
        for i in 0..5 {
            e.push((5 + i, (i + 1) % 5));
            e.push((5 + i, (i + 4) % 5));
            e.push((5 + i, 10));
        }
        Graph::from_edges(11, e).unwrap()
    }

    #[test]
    fn grotzsch_is_not_nice() {
        // ω = 2 forces S = V, so a certificate would be a 3-coloring
        let g = grotzsch();
        assert_eq!(crate::detect::omega(&g).unwrap(), 2);
        assert_eq!(crate::detect::chi_exact(&g).unwrap().count, 4);
        assert!(nice_search_fallback(&g).unwrap().is_none());
    }

    #[test]
    fn cap() {
        let g = Graph::cycle(17);
        assert!(matches!(nice_search_fallback(&g), Err(Error::ResourceCap { .. })));
    }
}
