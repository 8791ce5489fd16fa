//! Simple undirected graphs on at most 128 vertices with bit-packed adjacency.

use std::fmt;
use std::ops::{BitAnd, BitOr, BitXor, Not, Sub};

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::GraphError;

/// Hard vertex cap imposed by the `u128` row representation.
pub const VERTEX_CAP: usize = 128;

/// A set of vertex indices in `0..128`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default, PartialOrd, Ord)]
pub struct VertexSet(u128);

impl VertexSet {
    pub const EMPTY: VertexSet = VertexSet(0);

    pub const fn from_bits(bits: u128) -> Self {
        VertexSet(bits)
    }

    pub const fn bits(self) -> u128 {
        self.0
    }

    pub fn singleton(v: usize) -> Self {
        debug_assert!(v < VERTEX_CAP);
        VertexSet(1u128 << v)
    }

    /// `{0, 1, ..., n-1}`.
    pub fn full(n: usize) -> Self {
        debug_assert!(n <= VERTEX_CAP);
        if n == VERTEX_CAP {
            VertexSet(u128::MAX)
        } else {
            VertexSet((1u128 << n) - 1)
        }
    }

    pub fn contains(self, v: usize) -> bool {
        v < VERTEX_CAP && (self.0 >> v) & 1 == 1
    }

    pub fn insert(&mut self, v: usize) {
        self.0 |= 1u128 << v;
    }

    pub fn remove(&mut self, v: usize) {
        self.0 &= !(1u128 << v);
    }

    pub fn with(self, v: usize) -> Self {
        VertexSet(self.0 | (1u128 << v))
    }

    pub fn without(self, v: usize) -> Self {
        VertexSet(self.0 & !(1u128 << v))
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    /// Least member.
    pub fn first(self) -> Option<usize> {
        if self.0 == 0 {
            None
        } else {
            Some(self.0.trailing_zeros() as usize)
        }
    }

    /// Greatest member.
    pub fn last(self) -> Option<usize> {
        if self.0 == 0 {
            None
        } else {
            Some(127 - self.0.leading_zeros() as usize)
        }
    }

    pub fn is_subset(self, other: VertexSet) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn is_disjoint(self, other: VertexSet) -> bool {
        self.0 & other.0 == 0
    }

    pub fn intersects(self, other: VertexSet) -> bool {
        self.0 & other.0 != 0
    }

    /// Members in ascending order.
    pub fn iter(self) -> Iter {
        Iter(self.0)
    }

    pub fn to_vec(self) -> Vec<usize> {
        self.iter().collect()
    }

    /// Image of the set under an index map (`map[v]` for each member `v`).
    pub fn map_through(self, map: &[usize]) -> VertexSet {
        self.iter().map(|v| map[v]).collect()
    }
}

#[derive(Clone, Debug)]
pub struct Iter(u128);

impl Iterator for Iter {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let v = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(v)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let n = self.0.count_ones() as usize;
        (n, Some(n))
    }
}

impl ExactSizeIterator for Iter {}

impl IntoIterator for VertexSet {
    type Item = usize;
    type IntoIter = Iter;

    fn into_iter(self) -> Iter {
        self.iter()
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut s = VertexSet::EMPTY;
        for v in iter {
            s.insert(v);
        }
        s
    }
}

impl<'a> FromIterator<&'a usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = &'a usize>>(iter: I) -> Self {
        iter.into_iter().copied().collect()
    }
}

impl BitOr for VertexSet {
    type Output = VertexSet;
    fn bitor(self, rhs: VertexSet) -> VertexSet {
        VertexSet(self.0 | rhs.0)
    }
}

impl BitAnd for VertexSet {
    type Output = VertexSet;
    fn bitand(self, rhs: VertexSet) -> VertexSet {
        VertexSet(self.0 & rhs.0)
    }
}

impl BitXor for VertexSet {
    type Output = VertexSet;
    fn bitxor(self, rhs: VertexSet) -> VertexSet {
        VertexSet(self.0 ^ rhs.0)
    }
}

impl Sub for VertexSet {
    type Output = VertexSet;
    fn sub(self, rhs: VertexSet) -> VertexSet {
        VertexSet(self.0 & !rhs.0)
    }
}

impl Not for VertexSet {
    type Output = VertexSet;
    fn not(self) -> VertexSet {
        VertexSet(!self.0)
    }
}

impl std::ops::BitOrAssign for VertexSet {
    fn bitor_assign(&mut self, rhs: VertexSet) {
        self.0 |= rhs.0;
    }
}

impl std::ops::BitAndAssign for VertexSet {
    fn bitand_assign(&mut self, rhs: VertexSet) {
        self.0 &= rhs.0;
    }
}

impl std::ops::SubAssign for VertexSet {
    fn sub_assign(&mut self, rhs: VertexSet) {
        self.0 &= !rhs.0;
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl Serialize for VertexSet {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_seq(self.iter())
    }
}

impl<'de> Deserialize<'de> for VertexSet {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let members = Vec::<usize>::deserialize(deserializer)?;
        if let Some(&v) = members.iter().find(|&&v| v >= VERTEX_CAP) {
            return Err(serde::de::Error::custom(format!("vertex {v} exceeds cap {VERTEX_CAP}")));
        }
        Ok(members.into_iter().collect())
    }
}

/// How two disjoint vertex sets see each other.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Relation {
    Complete,
    Anticomplete,
    Mixed,
}

/// Immutable simple undirected graph on `0..n`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    rows: Vec<VertexSet>,
}

impl Graph {
    /// Edgeless graph.
    pub fn empty(n: usize) -> Result<Graph, GraphError> {
        if n > VERTEX_CAP {
            return Err(GraphError::TooManyVertices { n, cap: VERTEX_CAP });
        }
        Ok(Graph { n, rows: vec![VertexSet::EMPTY; n] })
    }

    /// Builds a graph from an edge list. Loops, repeated edges and
    /// out-of-range endpoints are errors.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Graph, GraphError>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut g = Graph::empty(n)?;
        for (u, v) in edges {
            for w in [u, v] {
                if w >= n {
                    return Err(GraphError::VertexOutOfRange { v: w, n });
                }
            }
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            if g.rows[u].contains(v) {
                return Err(GraphError::DuplicateEdge(u.min(v), u.max(v)));
            }
            g.rows[u].insert(v);
            g.rows[v].insert(u);
        }
        Ok(g)
    }

    /// Builds a graph from a symmetric predicate on unordered pairs.
    pub fn from_fn(n: usize, mut adjacent: impl FnMut(usize, usize) -> bool) -> Result<Graph, GraphError> {
        let mut g = Graph::empty(n)?;
        for u in 0..n {
            for v in u + 1..n {
                if adjacent(u, v) {
                    g.rows[u].insert(v);
                    g.rows[v].insert(u);
                }
            }
        }
        Ok(g)
    }

    /// Builds a graph from adjacency rows, checking symmetry and irreflexivity.
    pub fn from_rows(rows: Vec<VertexSet>) -> Result<Graph, GraphError> {
        let n = rows.len();
        if n > VERTEX_CAP {
            return Err(GraphError::TooManyVertices { n, cap: VERTEX_CAP });
        }
        let all = VertexSet::full(n);
        for (u, row) in rows.iter().enumerate() {
            if !row.is_subset(all) {
                let v = (*row - all).first().unwrap_or(n);
                return Err(GraphError::VertexOutOfRange { v, n });
            }
            if row.contains(u) {
                return Err(GraphError::SelfLoop(u));
            }
            for v in row.iter() {
                if !rows[v].contains(u) {
                    return Err(GraphError::Asymmetric(u, v));
                }
            }
        }
        Ok(Graph { n, rows })
    }

    pub fn complete(n: usize) -> Graph {
        Graph::from_fn(n, |_, _| true).expect("complete graph within cap")
    }

    /// Induced path `0 - 1 - ... - (n-1)`.
    pub fn path(n: usize) -> Graph {
        Graph::from_fn(n, |u, v| v == u + 1).expect("path within cap")
    }

    /// Cycle `0 - 1 - ... - (n-1) - 0`; needs `n >= 3`.
    pub fn cycle(n: usize) -> Graph {
        assert!(n >= 3, "a cycle needs at least 3 vertices");
        Graph::from_fn(n, |u, v| v == u + 1 || (u == 0 && v == n - 1)).expect("cycle within cap")
    }

    /// The k-wheel: rim `0..k` as a cycle, hub `k`.
    pub fn wheel(k: usize) -> Graph {
        assert!(k >= 3, "a wheel needs a rim of at least 3 vertices");
        Graph::from_fn(k + 1, |u, v| v == k || v == u + 1 || (u == 0 && v == k - 1)).expect("wheel within cap")
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.n)
    }

    pub fn neighbors(&self, v: usize) -> VertexSet {
        self.rows[v]
    }

    pub fn adjacent(&self, u: usize, v: usize) -> bool {
        self.rows[u].contains(v)
    }

    pub fn degree(&self, v: usize) -> usize {
        self.rows[v].len()
    }

    pub fn edge_count(&self) -> usize {
        self.rows.iter().map(|r| r.len()).sum::<usize>() / 2
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |u| {
            let above = self.rows[u] - VertexSet::full(u + 1);
            above.iter().map(move |v| (u, v))
        })
    }

    /// Union of neighborhoods of `s`, minus `s`.
    pub fn neighborhood_of(&self, s: VertexSet) -> VertexSet {
        let mut out = VertexSet::EMPTY;
        for v in s {
            out |= self.rows[v];
        }
        out - s
    }

    /// Vertices adjacent to every member of `s` (outside `s`).
    pub fn common_neighbors(&self, s: VertexSet) -> VertexSet {
        let mut out = self.vertices();
        for v in s {
            out &= self.rows[v];
        }
        out - s
    }

    pub fn complement(&self) -> Graph {
        let all = self.vertices();
        let rows = (0..self.n).map(|v| all - self.rows[v] - VertexSet::singleton(v)).collect();
        Graph { n: self.n, rows }
    }

    /// `G[s]`, with `map[i]` the original index of new vertex `i`
    /// (ascending, so the relabeling is order-preserving).
    pub fn induced_subgraph(&self, s: VertexSet) -> Result<(Graph, Vec<usize>), GraphError> {
        self.check_subset(s)?;
        let map: Vec<usize> = s.to_vec();
        let mut pos = [usize::MAX; VERTEX_CAP];
        for (i, &v) in map.iter().enumerate() {
            pos[v] = i;
        }
        let rows = map
            .iter()
            .map(|&v| (self.rows[v] & s).iter().map(|w| pos[w]).collect())
            .collect();
        Ok((Graph { n: map.len(), rows }, map))
    }

    /// `G - s`.
    pub fn remove(&self, s: VertexSet) -> (Graph, Vec<usize>) {
        self.induced_subgraph(self.vertices() - s).expect("complement of a set is in range")
    }

    pub fn check_subset(&self, s: VertexSet) -> Result<(), GraphError> {
        match (s - self.vertices()).first() {
            Some(v) => Err(GraphError::VertexOutOfRange { v, n: self.n }),
            None => Ok(()),
        }
    }

    /// How `x` sees `y`. The two sets must be disjoint.
    pub fn relation(&self, x: VertexSet, y: VertexSet) -> Result<Relation, GraphError> {
        self.check_subset(x)?;
        self.check_subset(y)?;
        if let Some(v) = (x & y).first() {
            return Err(GraphError::OverlappingSets(v));
        }
        Ok(self.relation_unchecked(x, y))
    }

    pub(crate) fn relation_unchecked(&self, x: VertexSet, y: VertexSet) -> Relation {
        if x.is_empty() || y.is_empty() {
            // Vacuously both; report complete as the paper's convention
            // "X is complete to Y" holds when either side is empty.
            return Relation::Complete;
        }
        let mut all = true;
        let mut none = true;
        for v in x {
            let hit = self.rows[v] & y;
            if hit != y {
                all = false;
            }
            if !hit.is_empty() {
                none = false;
            }
            if !all && !none {
                return Relation::Mixed;
            }
        }
        if all {
            Relation::Complete
        } else {
            Relation::Anticomplete
        }
    }

    /// Every vertex of `x` adjacent to every vertex of `y` (vacuous when empty).
    pub fn is_complete_to(&self, x: VertexSet, y: VertexSet) -> bool {
        x.iter().all(|v| y.is_subset(self.rows[v]))
    }

    /// No edge between `x` and `y`.
    pub fn is_anticomplete_to(&self, x: VertexSet, y: VertexSet) -> bool {
        x.iter().all(|v| self.rows[v].is_disjoint(y))
    }

    pub fn is_clique(&self, s: VertexSet) -> bool {
        s.iter().all(|v| (s.without(v)).is_subset(self.rows[v]))
    }

    pub fn is_stable(&self, s: VertexSet) -> bool {
        s.iter().all(|v| self.rows[v].is_disjoint(s))
    }

    /// Connected components of `G[s]`, each as a vertex set, ordered by least member.
    pub fn components_of(&self, s: VertexSet) -> Vec<VertexSet> {
        let mut rest = s;
        let mut out = Vec::new();
        while let Some(start) = rest.first() {
            let mut comp = VertexSet::singleton(start);
            let mut frontier = comp;
            while !frontier.is_empty() {
                let mut next = VertexSet::EMPTY;
                for v in frontier {
                    next |= self.rows[v];
                }
                next = (next & s) - comp;
                comp |= next;
                frontier = next;
            }
            rest -= comp;
            out.push(comp);
        }
        out
    }

    pub fn components(&self) -> Vec<VertexSet> {
        self.components_of(self.vertices())
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() <= 1
    }

    /// Component of `G[s]` containing `v`.
    pub fn component_containing(&self, s: VertexSet, v: usize) -> VertexSet {
        let mut comp = VertexSet::singleton(v);
        let mut frontier = comp;
        while !frontier.is_empty() {
            let mut next = VertexSet::EMPTY;
            for u in frontier {
                next |= self.rows[u];
            }
            next = (next & s) - comp;
            comp |= next;
            frontier = next;
        }
        comp
    }

    /// Relabels vertices: new vertex `i` is old vertex `order[i]`.
    pub fn permuted(&self, order: &[usize]) -> Result<Graph, GraphError> {
        let n = self.n;
        if order.len() != n {
            return Err(GraphError::NotAPermutation);
        }
        let mut pos = vec![usize::MAX; n];
        for (i, &v) in order.iter().enumerate() {
            if v >= n || pos[v] != usize::MAX {
                return Err(GraphError::NotAPermutation);
            }
            pos[v] = i;
        }
        Graph::from_fn(n, |a, b| self.adjacent(order[a], order[b]))
    }

    /// Disjoint union; vertices of `other` are shifted by `self.n()`.
    pub fn disjoint_union(&self, other: &Graph) -> Result<Graph, GraphError> {
        let n = self.n + other.n;
        Graph::from_fn(n, |u, v| {
            if v < self.n {
                self.adjacent(u, v)
            } else if u >= self.n {
                other.adjacent(u - self.n, v - self.n)
            } else {
                false
            }
        })
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges().collect::<Vec<_>>())
    }
}

/// Wire form: `{ "n": .., "edges": [[u, v], ..] }`.
#[derive(Serialize, Deserialize)]
struct GraphWire {
    n: usize,
    edges: Vec<(usize, usize)>,
}

impl Serialize for Graph {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        GraphWire { n: self.n, edges: self.edges().collect() }.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Graph {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let w = GraphWire::deserialize(deserializer)?;
        Graph::from_edges(w.n, w.edges).map_err(serde::de::Error::custom)
    }
}

/// The graph substituted for one base vertex.
#[derive(Clone, Debug)]
pub enum Part {
    /// A clique on this many vertices (possibly zero).
    Clique(usize),
    /// An arbitrary graph, which must be P3-free.
    Graph(Graph),
}

impl Part {
    fn graph(&self) -> Graph {
        match self {
            Part::Clique(k) => Graph::complete(*k),
            Part::Graph(g) => g.clone(),
        }
    }
}

#[derive(Clone, Debug)]
pub struct BlowupSpec {
    pub base: Graph,
    pub parts: Vec<Part>,
}

impl BlowupSpec {
    pub fn cliques(base: Graph, sizes: &[usize]) -> BlowupSpec {
        BlowupSpec { base, parts: sizes.iter().map(|&k| Part::Clique(k)).collect() }
    }

    pub fn uniform(base: Graph, k: usize) -> BlowupSpec {
        let n = base.n();
        BlowupSpec { base, parts: vec![Part::Clique(k); n] }
    }
}

/// Result of [`blowup`]: the graph plus where each vertex came from.
#[derive(Clone, Debug)]
pub struct Blowup {
    pub graph: Graph,
    /// Base vertex of each new vertex.
    pub origin: Vec<usize>,
    /// Vertex set `Q_v` of each base vertex `v`.
    pub parts: Vec<VertexSet>,
}

/// Substitutes each base vertex by its part. Parts are laid out in base order.
pub fn blowup(spec: &BlowupSpec) -> Result<Blowup, GraphError> {
    let base = &spec.base;
    if spec.parts.len() != base.n() {
        return Err(GraphError::PartCount { expected: base.n(), got: spec.parts.len() });
    }
    let graphs: Vec<Graph> = spec.parts.iter().map(Part::graph).collect();
    for (v, pg) in graphs.iter().enumerate() {
        if let Some(w) = find_p3(pg, pg.vertices()) {
            return Err(GraphError::PartNotP3Free { part: v, witness: w });
        }
    }
    let total: usize = graphs.iter().map(Graph::n).sum();
    if total > VERTEX_CAP {
        return Err(GraphError::TooManyVertices { n: total, cap: VERTEX_CAP });
    }
    let mut origin = Vec::with_capacity(total);
    let mut local = Vec::with_capacity(total);
    let mut parts = Vec::with_capacity(base.n());
    for (v, pg) in graphs.iter().enumerate() {
        let start = origin.len();
        for i in 0..pg.n() {
            origin.push(v);
            local.push(i);
        }
        parts.push(VertexSet::full(origin.len()) - VertexSet::full(start));
    }
    let graph = Graph::from_fn(total, |a, b| {
        let (pa, pb) = (origin[a], origin[b]);
        if pa == pb {
            graphs[pa].adjacent(local[a], local[b])
        } else {
            base.adjacent(pa, pb)
        }
    })?;
    Ok(Blowup { graph, origin, parts })
}

/// Some induced P3 `[a, b, c]` (`b` the middle) in `G[s]`, least middle first.
pub fn find_p3(g: &Graph, s: VertexSet) -> Option<[usize; 3]> {
    for b in s {
        let nb = g.neighbors(b) & s;
        for a in nb {
            let far = nb - g.neighbors(a) - VertexSet::singleton(a);
            if let Some(c) = (far - VertexSet::full(a + 1)).first().or(far.first()) {
                let (x, y) = (a.min(c), a.max(c));
                return Some([x, b, y]);
            }
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c5() -> Graph {
        Graph::cycle(5)
    }

    #[test]
    fn construction_rejects_loops_and_repeats() {
        assert_eq!(Graph::from_edges(3, [(1, 1)]), Err(GraphError::SelfLoop(1)));
        assert_eq!(Graph::from_edges(3, [(0, 1), (1, 0)]), Err(GraphError::DuplicateEdge(0, 1)));
        assert_eq!(Graph::from_edges(3, [(0, 3)]), Err(GraphError::VertexOutOfRange { v: 3, n: 3 }));
        assert!(matches!(Graph::empty(129), Err(GraphError::TooManyVertices { .. })));
    }

    #[test]
    fn complement_examples() {
        let g = c5();
        let h = g.complement();
        // v_i ~ v_{i+2} in the complement, which is again a 5-cycle
        for i in 0..5 {
            assert!(h.adjacent(i, (i + 2) % 5));
            assert!(!h.adjacent(i, (i + 1) % 5));
        }
        assert_eq!(Graph::complete(4).complement().edge_count(), 0);
        let c7c = Graph::cycle(7).complement();
        for i in 0..7 {
            assert_eq!(c7c.neighbors(i), [(i + 2) % 7, (i + 5) % 7, (i + 3) % 7, (i + 4) % 7].iter().collect());
        }
    }

    #[test]
    fn induced_subgraph_examples() {
        let (p, map) = c5().induced_subgraph([0, 1, 2].iter().collect()).unwrap();
        assert_eq!(p, Graph::path(3));
        assert_eq!(map, vec![0, 1, 2]);
        let (k3, _) = Graph::complete(5).induced_subgraph([1, 3, 4].iter().collect()).unwrap();
        assert_eq!(k3, Graph::complete(3));
        let (rim, _) = Graph::wheel(4).induced_subgraph(VertexSet::full(4)).unwrap();
        assert_eq!(rim, Graph::cycle(4));
        assert!(c5().induced_subgraph(VertexSet::singleton(7)).is_err());
    }

    #[test]
    fn blowup_examples() {
        let w5 = Graph::wheel(5);
        let b = blowup(&BlowupSpec::uniform(w5.clone(), 1)).unwrap();
        assert_eq!(b.graph, w5);
        let b = blowup(&BlowupSpec::cliques(c5(), &[2, 1, 1, 1, 1])).unwrap();
        assert_eq!(b.graph.n(), 6);
        assert!(b.graph.is_clique([0, 1, 2].iter().collect()));
        assert_eq!(b.origin, vec![0, 0, 1, 2, 3, 4]);
        let bad = BlowupSpec { base: Graph::complete(2), parts: vec![Part::Graph(Graph::path(3)), Part::Clique(1)] };
        assert!(matches!(blowup(&bad), Err(GraphError::PartNotP3Free { part: 0, .. })));
    }

    #[test]
    fn relation_examples() {
        let g = c5();
        let s = |v: &[usize]| v.iter().collect::<VertexSet>();
        assert_eq!(g.relation(s(&[0]), s(&[1])).unwrap(), Relation::Complete);
        assert_eq!(g.relation(s(&[0]), s(&[2])).unwrap(), Relation::Anticomplete);
        assert_eq!(g.relation(s(&[0]), s(&[1, 2])).unwrap(), Relation::Mixed);
        assert_eq!(g.relation(s(&[1, 2]), s(&[0])).unwrap(), Relation::Mixed);
        assert_eq!(g.relation(s(&[0]), s(&[0, 1])), Err(GraphError::OverlappingSets(0)));
    }

    #[test]
    fn components_and_p3() {
        let g = Graph::from_edges(6, [(0, 1), (1, 2), (0, 2), (3, 4)]).unwrap();
        let comps = g.components();
        assert_eq!(comps.len(), 3);
        assert_eq!(comps[0], [0, 1, 2].iter().collect());
        assert_eq!(find_p3(&g, g.vertices()), None);
        assert_eq!(find_p3(&Graph::path(3), VertexSet::full(3)), Some([0, 1, 2]));
    }

    #[test]
    fn serde_round_trip() {
        let g = Graph::wheel(5);
        let js = serde_json::to_string(&g).unwrap();
        let back: Graph = serde_json::from_str(&js).unwrap();
        assert_eq!(g, back);
        let s: VertexSet = [3, 1, 64, 127].iter().collect();
        let js = serde_json::to_string(&s).unwrap();
        assert_eq!(js, "[1,3,64,127]");
        assert_eq!(serde_json::from_str::<VertexSet>(&js).unwrap(), s);
    }
}
