//! Exact clique, stable-set and chromatic oracles.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};

/// Vertex-count caps for the exponential searches.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Limits {
    pub omega: usize,
    pub chi: usize,
    pub nice_search: usize,
    pub perfect: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits { omega: 64, chi: 48, nice_search: 16, perfect: 64 }
    }
}

impl Limits {
    /// Same caps, with the ω and χ searches raised or lowered to `n`.
    pub fn with_exact_cap(self, n: usize) -> Limits {
        Limits { omega: n, chi: n, perfect: n, ..self }
    }

    pub(crate) fn check(&self, what: &'static str, n: usize, cap: usize) -> Result<()> {
        if n > cap {
            Err(Error::ResourceCap { what, n, cap })
        } else {
            Ok(())
        }
    }
}

/// Greedy sequential coloring of `p` used as the branch-and-bound bound:
/// vertices in class order, with each vertex's class number (1-based).
fn color_sort(g: &Graph, p: VertexSet, order: &mut Vec<usize>, bounds: &mut Vec<usize>) {
    order.clear();
    bounds.clear();
    let mut uncolored = p;
    let mut k = 0;
    while !uncolored.is_empty() {
        k += 1;
        let mut q = uncolored;
        while let Some(v) = q.first() {
            q -= g.neighbors(v).with(v);
            uncolored.remove(v);
            order.push(v);
            bounds.push(k);
        }
    }
}

fn expand(g: &Graph, cur: VertexSet, mut p: VertexSet, best: &mut VertexSet) {
    let mut order = Vec::with_capacity(p.len());
    let mut bounds = Vec::with_capacity(p.len());
    color_sort(g, p, &mut order, &mut bounds);
    for idx in (0..order.len()).rev() {
        if cur.len() + bounds[idx] <= best.len() {
            return;
        }
        let v = order[idx];
        let next = cur.with(v);
        let np = p & g.neighbors(v);
        if np.is_empty() {
            if next.len() > best.len() {
                *best = next;
            }
        } else {
            expand(g, next, np, best);
        }
        p.remove(v);
    }
}

/// A maximum clique of `G[within]`, no cap check.
pub fn max_clique_in(g: &Graph, within: VertexSet) -> VertexSet {
    let mut best = VertexSet::EMPTY;
    if !within.is_empty() {
        expand(g, VertexSet::EMPTY, within, &mut best);
    }
    best
}

/// Clique number of `G[within]`, no cap check.
pub fn omega_in(g: &Graph, within: VertexSet) -> usize {
    max_clique_in(g, within).len()
}

fn collect_cliques(g: &Graph, cur: VertexSet, mut p: VertexSet, target: usize, out: &mut Vec<VertexSet>) {
    if cur.len() == target {
        out.push(cur);
        return;
    }
    let mut order = Vec::with_capacity(p.len());
    let mut bounds = Vec::with_capacity(p.len());
    color_sort(g, p, &mut order, &mut bounds);
    for idx in (0..order.len()).rev() {
        if cur.len() + bounds[idx] < target {
            return;
        }
        let v = order[idx];
        collect_cliques(g, cur.with(v), p & g.neighbors(v), target, out);
        p.remove(v);
    }
}

/// Every clique of exactly `size` vertices inside `within`, sorted by member list.
pub fn cliques_of_size_in(g: &Graph, within: VertexSet, size: usize) -> Vec<VertexSet> {
    let mut out = Vec::new();
    if size == 0 {
        out.push(VertexSet::EMPTY);
        return out;
    }
    collect_cliques(g, VertexSet::EMPTY, within, size, &mut out);
    sort_sets(&mut out);
    out
}

/// Maximal cliques of `G` (Bron–Kerbosch with pivoting), sorted by member list.
pub fn maximal_cliques(g: &Graph) -> Vec<VertexSet> {
    fn bk(g: &Graph, r: VertexSet, mut p: VertexSet, mut x: VertexSet, out: &mut Vec<VertexSet>) {
        if p.is_empty() {
            if x.is_empty() {
                out.push(r);
            }
            return;
        }
        let pivot = (p | x).iter().max_by_key(|&u| (g.neighbors(u) & p).len()).unwrap_or(0);
        for v in p - g.neighbors(pivot) {
            bk(g, r.with(v), p & g.neighbors(v), x & g.neighbors(v), out);
            p.remove(v);
            x.insert(v);
        }
    }
    let mut out = Vec::new();
    if g.n() > 0 {
        bk(g, VertexSet::EMPTY, g.vertices(), VertexSet::EMPTY, &mut out);
    }
    sort_sets(&mut out);
    out
}

pub(crate) fn sort_sets(v: &mut [VertexSet]) {
    v.sort_by_cached_key(|s| s.to_vec());
}

/// Clique number, under the default cap.
pub fn omega(g: &Graph) -> Result<usize> {
    omega_with(g, &Limits::default())
}

pub fn omega_with(g: &Graph, limits: &Limits) -> Result<usize> {
    limits.check("clique number", g.n(), limits.omega)?;
    Ok(omega_in(g, g.vertices()))
}

/// A maximum clique, under the default cap.
pub fn max_clique(g: &Graph) -> Result<VertexSet> {
    Limits::default().check("maximum clique", g.n(), Limits::default().omega)?;
    Ok(max_clique_in(g, g.vertices()))
}

/// All maximum cliques, under the default cap.
pub fn max_cliques(g: &Graph) -> Result<Vec<VertexSet>> {
    max_cliques_with(g, &Limits::default())
}

pub fn max_cliques_with(g: &Graph, limits: &Limits) -> Result<Vec<VertexSet>> {
    limits.check("maximum clique enumeration", g.n(), limits.omega)?;
    let w = omega_in(g, g.vertices());
    if w == 0 {
        return Ok(Vec::new());
    }
    Ok(cliques_of_size_in(g, g.vertices(), w))
}

/// A maximum stable set of `G[within]`, the lexicographically least one.
pub fn max_stable_in(g: &Graph, within: VertexSet) -> VertexSet {
    let h = g.complement();
    let target = omega_in(&h, within);
    let mut chosen = VertexSet::EMPTY;
    let mut avail = within;
    while let Some(v) = avail.first() {
        if chosen.len() == target {
            break;
        }
        let rest = (avail & h.neighbors(v)) - VertexSet::full(v + 1);
        if 1 + omega_in(&h, rest) + chosen.len() == target {
            chosen.insert(v);
            avail = rest;
        } else {
            avail.remove(v);
        }
    }
    chosen
}

/// A maximum stable set, under the default cap.
pub fn max_stable(g: &Graph) -> Result<VertexSet> {
    Limits::default().check("maximum stable set", g.n(), Limits::default().omega)?;
    Ok(max_stable_in(g, g.vertices()))
}

/// Stability number, under the default cap.
pub fn alpha(g: &Graph) -> Result<usize> {
    Ok(max_stable(g)?.len())
}

/// Optimal coloring witness.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Coloring {
    pub count: usize,
    pub colors: Vec<usize>,
}

/// Chromatic number with an optimal coloring, under the default cap.
pub fn chi_exact(g: &Graph) -> Result<Coloring> {
    chi_exact_with(g, &Limits::default())
}

/// Graphs with no stable set of size 3 skip the search and the cap: there a
/// coloring is a matching of the complement plus singletons.
pub fn chi_exact_with(g: &Graph, limits: &Limits) -> Result<Coloring> {
    if crate::detect::is_3k1_free(g) {
        return Ok(chi_by_matching(g));
    }
    limits.check("chromatic number", g.n(), limits.chi)?;
    Ok(chi_unchecked(g))
}

fn chi_by_matching(g: &Graph) -> Coloring {
    let h = petgraph::graph::UnGraph::<(), ()>::from_edges(
        g.complement().edges().map(|(u, v)| (u as u32, v as u32)),
    );
    let mut colors = vec![UNCOLORED; g.n()];
    let mut count = 0;
    if h.node_count() > 0 {
        for (a, b) in petgraph::algo::maximum_matching(&h).edges() {
            colors[a.index()] = count;
            colors[b.index()] = count;
            count += 1;
        }
    }
    for c in colors.iter_mut().filter(|c| **c == UNCOLORED) {
        *c = count;
        count += 1;
    }
    Coloring { count, colors }
}

const UNCOLORED: usize = usize::MAX;

/// DSATUR greedy coloring.
pub fn dsatur(g: &Graph) -> Coloring {
    let n = g.n();
    let mut colors = vec![UNCOLORED; n];
    let mut sat = vec![0u128; n];
    let mut uncolored = g.vertices();
    let mut count = 0;
    while !uncolored.is_empty() {
        let v = pick(g, &sat, uncolored);
        let c = (!sat[v]).trailing_zeros() as usize;
        colors[v] = c;
        count = count.max(c + 1);
        uncolored.remove(v);
        for u in g.neighbors(v) {
            sat[u] |= 1u128 << c;
        }
    }
    Coloring { count, colors }
}

/// Most saturated uncolored vertex; ties by degree into the uncolored part, then least index.
fn pick(g: &Graph, sat: &[u128], uncolored: VertexSet) -> usize {
    let mut best = usize::MAX;
    let mut key = (0u32, 0usize);
    for v in uncolored {
        let k = (sat[v].count_ones(), (g.neighbors(v) & uncolored).len());
        if best == usize::MAX || k > key {
            best = v;
            key = k;
        }
    }
    best
}

struct ChiSearch<'a> {
    g: &'a Graph,
    colors: Vec<usize>,
    sat: Vec<u128>,
    best: Vec<usize>,
    ub: usize,
    lb: usize,
}

impl ChiSearch<'_> {
    fn run(&mut self, uncolored: VertexSet, used: usize) {
        if self.ub == self.lb {
            return;
        }
        if uncolored.is_empty() {
            if used < self.ub {
                self.ub = used;
                self.best = self.colors.clone();
            }
            return;
        }
        let v = pick(self.g, &self.sat, uncolored);
        // existing colors, or one new color
        let limit = used + 1;
        let mut free = !self.sat[v] & if limit >= 128 { u128::MAX } else { (1u128 << limit) - 1 };
        while free != 0 {
            let c = free.trailing_zeros() as usize;
            free &= free - 1;
            if used.max(c + 1) >= self.ub {
                break;
            }
            let touched: Vec<usize> = (self.g.neighbors(v) & uncolored)
                .iter()
                .filter(|&u| self.sat[u] & (1u128 << c) == 0)
                .collect();
            for &u in &touched {
                self.sat[u] |= 1u128 << c;
            }
            self.colors[v] = c;
            self.run(uncolored.without(v), used.max(c + 1));
            self.colors[v] = UNCOLORED;
            for &u in &touched {
                self.sat[u] &= !(1u128 << c);
            }
            if self.ub == self.lb {
                return;
            }
        }
    }
}

fn chi_unchecked(g: &Graph) -> Coloring {
    let n = g.n();
    if n == 0 {
        return Coloring { count: 0, colors: Vec::new() };
    }
    let clique = max_clique_in(g, g.vertices());
    let greedy = dsatur(g);
    if greedy.count == clique.len() {
        return greedy;
    }
    let mut s = ChiSearch {
        g,
        colors: vec![UNCOLORED; n],
        sat: vec![0u128; n],
        best: greedy.colors,
        ub: greedy.count,
        lb: clique.len(),
    };
    // the clique's colors are forced up to renaming
    for (c, v) in clique.iter().enumerate() {
        s.colors[v] = c;
        for u in g.neighbors(v) {
            s.sat[u] |= 1u128 << c;
        }
    }
    s.run(g.vertices() - clique, clique.len());
    Coloring { count: s.ub, colors: s.best }
}

/// True iff no edge is monochromatic and every vertex has a color.
pub fn check_proper(g: &Graph, colors: &[usize]) -> bool {
    colors.len() == g.n() && g.edges().all(|(u, v)| colors[u] != colors[v])
}

/// Number of distinct colors in an assignment.
pub fn color_count(colors: &[usize]) -> usize {
    let mut seen: Vec<usize> = colors.to_vec();
    seen.sort_unstable();
    seen.dedup();
    seen.len()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn matching_path_agrees_with_search() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        let mut hits = 0;
        for _ in 0..400 {
            let n = rng.gen_range(1..11);
            let p = rng.gen_range(0.4..0.95);
            let g = Graph::from_fn(n, |_, _| rng.gen_bool(p)).unwrap();
            if !crate::detect::is_3k1_free(&g) {
                continue;
            }
            hits += 1;
            let m = chi_by_matching(&g);
            assert!(check_proper(&g, &m.colors));
            assert_eq!(m.count, chi_unchecked(&g).count, "{g:?}");
        }
        assert!(hits > 50);
    }

    fn brute_omega(g: &Graph) -> usize {
        (0u32..1 << g.n())
            .filter(|&m| g.is_clique(VertexSet::from_bits(m as u128)))
            .map(|m| m.count_ones() as usize)
            .max()
            .unwrap_or(0)
    }

    #[test]
    fn examples() {
        let c5 = Graph::cycle(5);
        assert_eq!(omega(&c5).unwrap(), 2);
        assert_eq!(chi_exact(&c5).unwrap().count, 3);
        let k4 = Graph::complete(4);
        assert_eq!(omega(&k4).unwrap(), 4);
        assert_eq!(chi_exact(&k4).unwrap().count, 4);
        assert_eq!(max_cliques(&k4).unwrap(), vec![k4.vertices()]);
        assert_eq!(max_stable(&c5).unwrap(), [0, 2].iter().collect());
    }

    #[test]
    fn caps_are_typed_errors() {
        let g = Graph::empty(60).unwrap();
        assert!(matches!(chi_exact(&g), Err(Error::ResourceCap { n: 60, cap: 48, .. })));
        let tight = Limits::default().with_exact_cap(10);
        assert!(matches!(omega_with(&Graph::empty(11).unwrap(), &tight), Err(Error::ResourceCap { .. })));
    }

    #[test]
    fn odd_wheels_and_antiholes() {
        assert_eq!(chi_exact(&Graph::wheel(5)).unwrap().count, 4);
        let c7c = Graph::cycle(7).complement();
        assert_eq!(omega(&c7c).unwrap(), 3);
        assert_eq!(chi_exact(&c7c).unwrap().count, 4);
        assert_eq!(max_cliques(&c7c).unwrap().len(), 7);
    }

    #[test]
    fn small_graphs_against_brute_force() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        for _ in 0..300 {
            let n = rng.gen_range(0..9);
            let p: f64 = rng.gen();
            let g = Graph::from_fn(n, |_, _| rng.gen_bool(p)).unwrap();
            let w = brute_omega(&g);
            assert_eq!(omega(&g).unwrap(), w);
            for m in max_cliques(&g).unwrap() {
                assert!(g.is_clique(m) && m.len() == w);
            }
            let col = chi_exact(&g).unwrap();
            assert!(check_proper(&g, &col.colors));
            assert_eq!(color_count(&col.colors), col.count);
            // no coloring with one fewer color
            if col.count > 1 {
                assert!(!brute_colorable(&g, col.count - 1));
            }
        }
    }

    fn brute_colorable(g: &Graph, k: usize) -> bool {
        fn go(g: &Graph, k: usize, v: usize, c: &mut Vec<usize>) -> bool {
            if v == g.n() {
                return true;
            }
            for col in 0..k {
                if (0..v).all(|u| !g.adjacent(u, v) || c[u] != col) {
                    c.push(col);
                    if go(g, k, v + 1, c) {
                        return true;
                    }
                    c.pop();
                }
            }
            false
        }
        go(g, k, 0, &mut Vec::new())
    }

    #[test]
    fn check_proper_examples() {
        let k2 = Graph::complete(2);
        assert!(check_proper(&k2, &[0, 1]));
        assert!(!check_proper(&k2, &[0, 0]));
        assert!(check_proper(&Graph::cycle(5), &[0, 1, 0, 1, 2]));
    }
}
