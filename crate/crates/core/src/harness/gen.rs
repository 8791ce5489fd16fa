//! Instance generators. All are pure functions of their arguments.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::detect::in_class;
use crate::error::{Error, Result};
use crate::graph::{blowup, BlowupSpec, Graph, Part, VertexSet, VERTEX_CAP};

/// Rejection-sampling budget per call.
pub const DRAW_BUDGET: usize = 10_000;

/// The 20-vertex extremal graph: complement of the Andrásfai graph on
/// `Z_20` whose connection set is the residues `1 mod 3`.
pub fn gstar() -> Graph {
    Graph::from_fn(20, |u, v| ((v + 20 - u) % 20) % 3 != 1).expect("20 vertices")
}

/// Clique-blowup of [`gstar`] with every part of size `k`.
pub fn gen_gstar(k: usize) -> Result<Graph> {
    if k == 0 {
        return Err(Error::Precondition("gstar blowup needs k ≥ 1".into()));
    }
    check_cap(20 * k)?;
    Ok(blowup(&BlowupSpec::uniform(gstar(), k))?.graph)
}

/// `C7^c` on `v_1..v_7` (vertices 0..7) plus `v_8` adjacent to `v_1, v_2, v_5`
/// and `v_9` adjacent to `v_5, v_6, v_2`.
pub fn hstar() -> Graph {
    let mut e = Vec::new();
    for i in 0..7 {
        e.push((i, (i + 1) % 7));
        e.push((i, (i + 2) % 7));
    }
    e.extend([(7, 0), (7, 1), (7, 4), (8, 4), (8, 5), (8, 1)]);
    Graph::from_edges(9, e).expect("static edge list")
}

/// Clique-blowup of [`hstar`]; `sizes[i]` is the size of `Q_{v_{i+1}}`.
pub fn gen_hstar_blowup(sizes: &[usize; 9]) -> Result<Graph> {
    check_cap(sizes.iter().sum())?;
    Ok(blowup(&BlowupSpec::cliques(hstar(), sizes))?.graph)
}

fn check_cap(n: usize) -> Result<()> {
    if n > VERTEX_CAP {
        return Err(Error::ResourceCap { what: "generator", n, cap: VERTEX_CAP });
    }
    Ok(())
}

/// Erdős–Rényi draws until one is (P5, 4-wheel)-free, at most [`DRAW_BUDGET`] tries.
pub fn gen_random_in_class(n: usize, p: f64, seed: u64) -> Option<Graph> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..DRAW_BUDGET).find_map(|_| {
        let g = Graph::from_fn(n, |_, _| rng.gen_bool(p)).ok()?;
        in_class(&g).then_some(g)
    })
}

/// Base graphs for the structured generator.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Base {
    C5,
    FiveWheel,
    C7Complement,
    HStar,
    GStarPiece,
    /// Clique-blown-up C5 plus extra vertices shaped like `X_i`, `Y_i` or `T` vertices.
    C5Seeded,
    /// Blown-up C5 with adjacent `X_1`, `X_2` cliques that both extend `A_i`
    /// cliques to maximum cliques.
    XPair,
}

impl Base {
    pub const ALL: [Base; 7] =
        [Base::C5, Base::FiveWheel, Base::C7Complement, Base::HStar, Base::GStarPiece, Base::C5Seeded, Base::XPair];

    fn graph(self, rng: &mut ChaCha8Rng) -> Graph {
        match self {
            Base::C5 => Graph::cycle(5),
            Base::FiveWheel => Graph::wheel(5),
            Base::C7Complement => Graph::cycle(7).complement(),
            Base::HStar => hstar(),
            Base::C5Seeded | Base::XPair => Graph::cycle(5),
            Base::GStarPiece => {
                let g = gstar();
                let mut vs: Vec<usize> = (0..20).collect();
                vs.shuffle(rng);
                let k = rng.gen_range(6..=10);
                g.induced_subgraph(vs[..k].iter().collect()).expect("subset of 0..20").0
            }
        }
    }
}

/// A random P3-free graph on `k` vertices: a disjoint union of cliques.
fn random_p3_free(k: usize, rng: &mut ChaCha8Rng) -> Graph {
    let mut label = vec![0usize; k];
    for l in label.iter_mut() {
        *l = rng.gen_range(0..2);
    }
    Graph::from_fn(k, |u, v| label[u] == label[v]).expect("small")
}

/// Random blowup of a base graph grown by extra vertices with random
/// neighborhoods, each kept only while the graph stays in class. Returns
/// `None` when the draw ends below `n` vertices or above it.
pub fn gen_structured(n: usize, base: Base, seed: u64) -> Option<Graph> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    match base {
        Base::C5Seeded => return c5_seeded(n, &mut rng),
        Base::XPair => return x_pair(n, &mut rng),
        _ => {}
    }
    let b = base.graph(&mut rng);
    let room = n.checked_sub(b.n())?;
    let mut parts = Vec::with_capacity(b.n());
    let mut budget = room;
    for _ in 0..b.n() {
        let extra = if budget > 0 && rng.gen_bool(0.35) { rng.gen_range(0..=budget.min(2)) } else { 0 };
        budget -= extra;
        let k = 1 + extra;
        if k >= 2 && rng.gen_bool(0.3) {
            parts.push(Part::Graph(random_p3_free(k, &mut rng)));
        } else {
            parts.push(Part::Clique(k));
        }
    }
    let mut g = blowup(&BlowupSpec { base: b, parts }).ok()?.graph;
    if !in_class(&g) {
        return None;
    }
    let mut tries = 0;
    while g.n() < n && tries < 200 {
        tries += 1;
        let density = rng.gen_range(0.2..0.8);
        let nbrs: VertexSet = g.vertices().iter().filter(|_| rng.gen_bool(density)).collect();
        if nbrs.is_empty() {
            continue;
        }
        let h = with_vertex(&g, nbrs);
        if in_class(&h) {
            g = h;
        }
    }
    (g.n() == n).then_some(g)
}

fn c5_seeded(n: usize, rng: &mut ChaCha8Rng) -> Option<Graph> {
    let target = rng.gen_range(5..=n.min(10));
    let mut sizes = [1usize; 5];
    for _ in 5..target {
        sizes[rng.gen_range(0..5)] += 1;
    }
    let b = blowup(&BlowupSpec::cliques(Graph::cycle(5), &sizes)).ok()?;
    let mut g = b.graph;
    let parts = b.parts;
    let mut tries = 0;
    while g.n() < n && tries < 300 {
        tries += 1;
        let k = rng.gen_range(0..5);
        let touched: Vec<usize> = match rng.gen_range(0..3) {
            0 => vec![k, (k + 2) % 5, (k + 3) % 5],
            1 => (0..5).filter(|&j| j != k).collect(),
            _ => Vec::new(),
        };
        let mut nbrs = VertexSet::EMPTY;
        for &j in &touched {
            if rng.gen_bool(0.6) {
                nbrs |= parts[j];
            } else {
                let pick: VertexSet = parts[j].iter().filter(|_| rng.gen_bool(0.5)).collect();
                nbrs |= if pick.is_empty() { VertexSet::singleton(parts[j].first()?) } else { pick };
            }
        }
        let extra = g.vertices() - parts.iter().fold(VertexSet::EMPTY, |acc, &p| acc | p);
        let p = rng.gen_range(0.2..0.9);
        nbrs |= extra.iter().filter(|_| rng.gen_bool(p)).collect();
        if nbrs.is_empty() {
            continue;
        }
        let h = with_vertex(&g, nbrs);
        if in_class(&h) {
            g = h;
        }
    }
    (g.n() == n && in_class(&g)).then_some(g)
}

fn x_pair(n: usize, rng: &mut ChaCha8Rng) -> Option<Graph> {
    let a1 = rng.gen_range(2..=3);
    let a2 = rng.gen_range(2..=3);
    let (c3, d) = (1, rng.gen_range(1..a1));
    let (c5, d2) = (1, rng.gen_range(1..a2));
    // Blocks: A_1, A_2, A_3, D, D' (the two A_4-cliques), A_5, K, K'.
    // K' lives in X_2 when `split` is false, and in X_1 beside K otherwise.
    let split = rng.gen_bool(0.5);
    let sizes = if split {
        [a1, a2, c3, 1, 1, c5, rng.gen_range(1..=2), rng.gen_range(1..=2)]
    } else {
        [a1, a2, c3, d, d2, c5, a2, a1]
    };
    let mut start = [0usize; 9];
    for k in 0..8 {
        start[k + 1] = start[k] + sizes[k];
    }
    let m = start[8];
    if m > n {
        return None;
    }
    let block = |v: usize| (0..8).find(|&k| v < start[k + 1]).expect("v below m");
    const CYCLE: [(usize, usize); 11] =
        [(0, 1), (1, 2), (2, 3), (2, 4), (3, 5), (4, 5), (0, 5), (0, 6), (2, 6), (3, 6), (6, 7)];
    let k2: [(usize, usize); 3] = if split { [(0, 7), (2, 7), (4, 7)] } else { [(1, 7), (5, 7), (4, 7)] };
    let mut g = Graph::from_fn(m, |u, v| {
        let (bu, bv) = (block(u), block(v));
        let e = (bu.min(bv), bu.max(bv));
        bu == bv || CYCLE.contains(&e) || k2.contains(&e)
    })
    .ok()?;
    let mut tries = 0;
    while g.n() < n && tries < 200 {
        tries += 1;
        let density = rng.gen_range(0.2..0.8);
        let nbrs: VertexSet = g.vertices().iter().filter(|_| rng.gen_bool(density)).collect();
        if nbrs.is_empty() {
            continue;
        }
        let h = with_vertex(&g, nbrs);
        if in_class(&h) {
            g = h;
        }
    }
    (g.n() == n && in_class(&g)).then_some(g)
}

/// `g` plus one new vertex adjacent to `nbrs`.
pub fn with_vertex(g: &Graph, nbrs: VertexSet) -> Graph {
    let n = g.n();
    Graph::from_fn(n + 1, |u, v| if v == n { nbrs.contains(u) } else { g.adjacent(u, v) }).expect("below cap")
}

/// Draws an in-class graph on `n` vertices, mixing the structured bases and
/// plain rejection sampling, deterministically per seed.
pub fn gen_mixed(n: usize, seed: u64) -> Option<Graph> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x9e37_79b9_7f4a_7c15);
    for attempt in 0..64u64 {
        let s = seed.wrapping_mul(64).wrapping_add(attempt);
        let pick = rng.gen_range(0..9);
        let g = if pick < Base::ALL.len() {
            gen_structured(n, Base::ALL[pick], s)
        } else {
            let mut r = ChaCha8Rng::seed_from_u64(s);
            let p = r.gen_range(0.3..0.8);
            (0..200).find_map(|_| {
                let g = Graph::from_fn(n, |_, _| r.gen_bool(p)).ok()?;
                in_class(&g).then_some(g)
            })
        };
        if let Some(g) = g {
            return Some(g);
        }
    }
    None
}

/// Every labeled graph on `n ≤ 7` vertices, in edge-mask order.
pub fn enumerate_small(n: usize) -> Result<impl Iterator<Item = Graph>> {
    if n > 7 {
        return Err(Error::ResourceCap { what: "labeled enumeration", n, cap: 7 });
    }
    let total = 1u64 << (n * n.saturating_sub(1) / 2);
    Ok((0..total).map(move |mask| small_graph(n, mask)))
}

/// The labeled graph whose edges are the set bits of `mask`, pairs
/// `(u, v)` with `u < v` in lexicographic order.
pub fn small_graph(n: usize, mask: u64) -> Graph {
    let pairs = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)));
    let edges = pairs.enumerate().filter(|(k, _)| mask >> k & 1 == 1).map(|(_, e)| e);
    Graph::from_edges(n, edges).expect("valid pairs")
}
