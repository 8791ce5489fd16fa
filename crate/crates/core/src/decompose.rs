//! Clique-cutset decomposition into atoms.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};

/// `V = Q ∪ V1 ∪ V2` with `Q` a clique and `V1` anticomplete to `V2`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CutsetSplit {
    pub q: VertexSet,
    pub v1: VertexSet,
    pub v2: VertexSet,
}

impl CutsetSplit {
    pub fn is_valid(&self, g: &Graph) -> bool {
        !self.v1.is_empty()
            && !self.v2.is_empty()
            && (self.q | self.v1 | self.v2) == g.vertices()
            && self.q.is_disjoint(self.v1)
            && self.q.is_disjoint(self.v2)
            && self.v1.is_disjoint(self.v2)
            && g.is_clique(self.q)
            && g.is_anticomplete_to(self.v1, self.v2)
    }
}

/// Maximum cardinality search for a minimal triangulation (MCS-M).
/// Returns the numbering order (first numbered first), the higher-numbered
/// fill neighbours `madj` of each vertex, and the separator generators.
fn mcs_m(g: &Graph) -> (Vec<usize>, Vec<VertexSet>, VertexSet) {
    let n = g.n();
    let mut label = vec![0usize; n];
    let mut madj = vec![VertexSet::EMPTY; n];
    let mut numbered = VertexSet::EMPTY;
    let mut order = Vec::with_capacity(n);
    let mut generators = VertexSet::EMPTY;
    let mut prev_label: Option<usize> = None;
    for _ in 0..n {
        let free = g.vertices() - numbered;
        let x = free.iter().max_by_key(|&v| (label[v], std::cmp::Reverse(v))).expect("unnumbered vertex");
        if prev_label.is_some_and(|s| label[x] <= s) {
            generators.insert(x);
        }
        prev_label = Some(label[x]);
        let free = free.without(x);
        // u is reached if some path x..u has all inner vertices unnumbered
        // with label below label[u]
        let mut levels: Vec<usize> = free.iter().map(|u| label[u]).collect();
        levels.sort_unstable();
        levels.dedup();
        let mut reached = VertexSet::EMPTY;
        for &lvl in &levels {
            let low: VertexSet = free.iter().filter(|&w| label[w] < lvl).collect();
            let mut region = VertexSet::singleton(x);
            let mut frontier = region;
            while !frontier.is_empty() {
                let mut next = VertexSet::EMPTY;
                for w in frontier {
                    next |= g.neighbors(w);
                }
                next = (next & low) - region;
                region |= next;
                frontier = next;
            }
            let boundary = g.neighborhood_of(region);
            for u in free.iter().filter(|&u| label[u] == lvl) {
                if boundary.contains(u) {
                    reached.insert(u);
                }
            }
        }
        for u in reached {
            label[u] += 1;
            madj[u].insert(x);
        }
        numbered.insert(x);
        order.push(x);
    }
    (order, madj, generators)
}

/// First clique minimal separator in elimination order, or `None` for an atom.
pub fn find_clique_cutset(g: &Graph) -> Result<Option<CutsetSplit>> {
    if !g.is_connected() {
        return Err(Error::Precondition("clique cutset search needs a connected graph".into()));
    }
    let (order, madj, generators) = mcs_m(g);
    for &x in order.iter().rev() {
        if !generators.contains(x) {
            continue;
        }
        let q = madj[x];
        if q.is_empty() || !g.is_clique(q) {
            continue;
        }
        let rest = g.vertices() - q;
        let v1 = g.component_containing(rest, x);
        let v2 = rest - v1;
        if v2.is_empty() {
            continue;
        }
        return Ok(Some(CutsetSplit { q, v1, v2 }));
    }
    Ok(None)
}

/// Leaves are atoms; `map[i]` sends leaf vertex `i` to the root graph.
#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum AtomTree {
    Leaf { map: Vec<usize>, graph: Graph },
    Split { q: VertexSet, left: Box<AtomTree>, right: Box<AtomTree> },
}

impl AtomTree {
    pub fn leaves(&self) -> Vec<(&Graph, &[usize])> {
        let mut out = Vec::new();
        self.collect(&mut out);
        out
    }

    fn collect<'a>(&'a self, out: &mut Vec<(&'a Graph, &'a [usize])>) {
        match self {
            AtomTree::Leaf { map, graph } => out.push((graph, map)),
            AtomTree::Split { left, right, .. } => {
                left.collect(out);
                right.collect(out);
            }
        }
    }

    /// Union of leaf edges mapped into the root.
    pub fn reassemble(&self, n: usize) -> Result<Graph> {
        let mut edges = std::collections::BTreeSet::new();
        for (leaf, map) in self.leaves() {
            for (u, v) in leaf.edges() {
                let (a, b) = (map[u], map[v]);
                edges.insert((a.min(b), a.max(b)));
            }
        }
        Ok(Graph::from_edges(n, edges)?)
    }
}

/// Splits recursively until every leaf is an atom.
pub fn atom_tree(g: &Graph) -> Result<AtomTree> {
    if !g.is_connected() {
        return Err(Error::Precondition("atom tree needs a connected graph".into()));
    }
    build(g, (0..g.n()).collect())
}

fn build(g: &Graph, map: Vec<usize>) -> Result<AtomTree> {
    match find_clique_cutset(g)? {
        None => Ok(AtomTree::Leaf { map, graph: g.clone() }),
        Some(split) => {
            let (lg, lmap) = g.induced_subgraph(split.q | split.v1)?;
            let (rg, rmap) = g.induced_subgraph(split.q | split.v2)?;
            let left = build(&lg, lmap.iter().map(|&v| map[v]).collect())?;
            let right = build(&rg, rmap.iter().map(|&v| map[v]).collect())?;
            Ok(AtomTree::Split { q: split.q.map_through(&map), left: Box::new(left), right: Box::new(right) })
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(v: &[usize]) -> VertexSet {
        v.iter().collect()
    }

    /// Independent check: some clique whose removal adds components.
    fn has_clique_cutset_brute(g: &Graph) -> bool {
        let base = g.components().len();
        (1u128..1 << g.n()).any(|m| {
            let q = VertexSet::from_bits(m);
            g.is_clique(q) && g.components_of(g.vertices() - q).len() > base
        })
    }

    #[test]
    fn examples() {
        let p3 = Graph::path(3);
        let split = find_clique_cutset(&p3).unwrap().unwrap();
        assert_eq!(split.q, set(&[1]));
        assert_eq!(split.v1 | split.v2, set(&[0, 2]));
        assert!(split.is_valid(&p3));
        assert_eq!(find_clique_cutset(&Graph::cycle(5)).unwrap(), None);
        let bowtie = Graph::from_edges(5, [(0, 1), (1, 2), (0, 2), (2, 3), (3, 4), (2, 4)]).unwrap();
        assert_eq!(find_clique_cutset(&bowtie).unwrap().unwrap().q, set(&[2]));
        assert!(find_clique_cutset(&Graph::empty(2).unwrap()).is_err());
    }

    #[test]
    fn trees_and_joined_holes() {
        let c5 = atom_tree(&Graph::cycle(5)).unwrap();
        assert_eq!(c5.leaves().len(), 1);
        let two = Graph::from_edges(9, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0), (4, 5), (5, 6), (6, 7), (7, 8), (8, 4)]).unwrap();
        let t = atom_tree(&two).unwrap();
        let leaves = t.leaves();
        assert_eq!(leaves.len(), 2);
        for (leaf, map) in &leaves {
            assert!(leaf.n() == 5 && leaf.edge_count() == 5 && (0..5).all(|v| leaf.degree(v) == 2));
            assert!(map.contains(&4));
        }
        let tree = Graph::from_edges(6, [(0, 1), (1, 2), (1, 3), (3, 4), (3, 5)]).unwrap();
        let t = atom_tree(&tree).unwrap();
        assert_eq!(t.leaves().len(), 5);
        assert!(t.leaves().iter().all(|(l, _)| l.n() == 2 && l.edge_count() == 1));
        assert_eq!(t.reassemble(6).unwrap(), tree);
    }

    #[test]
    fn agrees_with_brute_force() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(11);
        let mut checked = 0;
        while checked < 400 {
            let n = rng.gen_range(1..10);
            let p: f64 = rng.gen_range(0.2..0.9);
            let g = Graph::from_fn(n, |_, _| rng.gen_bool(p)).unwrap();
            if !g.is_connected() {
                continue;
            }
            checked += 1;
            let found = find_clique_cutset(&g).unwrap();
            assert_eq!(found.is_some(), has_clique_cutset_brute(&g), "{g:?}");
            if let Some(s) = found {
                assert!(s.is_valid(&g));
            }
            let t = atom_tree(&g).unwrap();
            assert!(t.leaves().len() <= n.max(1));
            for (leaf, _) in t.leaves() {
                assert!(leaf.is_connected());
                assert!(!has_clique_cutset_brute(leaf));
            }
            assert_eq!(t.reassemble(n).unwrap(), g);
        }
    }
}
