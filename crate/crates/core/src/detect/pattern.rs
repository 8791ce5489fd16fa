use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::graph::{Graph, VertexSet};

/// Forbidden or trigger configurations, each with a canonical vertex order.
///
/// Wheels list the rim `v_1..v_k` first and the hub last. `C7Complement`
/// lists `w_0..w_6` with `w_i` adjacent to `w_{i±2}` and `w_{i±3}`, so the
/// order is a 7-cycle of the complement.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Pattern {
    P3,
    P4,
    P5,
    C4,
    C5,
    C6,
    C7,
    TwoK2,
    ThreeK1,
    FourWheel,
    FiveWheel,
    KWheel(usize),
    C7Complement,
    /// Induced odd cycle of length at least `max(5, min_len)`.
    OddHole(usize),
    /// Complement of an odd hole, length at least `max(5, min_len)`.
    OddAntihole(usize),
}

impl Pattern {
    /// The fixed-size patterns plus the two odd families at their smallest length.
    pub const ALL: [Pattern; 15] = [
        Pattern::P3,
        Pattern::P4,
        Pattern::P5,
        Pattern::C4,
        Pattern::C5,
        Pattern::C6,
        Pattern::C7,
        Pattern::TwoK2,
        Pattern::ThreeK1,
        Pattern::FourWheel,
        Pattern::FiveWheel,
        Pattern::KWheel(6),
        Pattern::C7Complement,
        Pattern::OddHole(5),
        Pattern::OddAntihole(5),
    ];

    /// Canonical realization; `None` for the odd families, which have no single size.
    pub fn graph(&self) -> Option<Graph> {
        Some(match *self {
            Pattern::P3 => Graph::path(3),
            Pattern::P4 => Graph::path(4),
            Pattern::P5 => Graph::path(5),
            Pattern::C4 => Graph::cycle(4),
            Pattern::C5 => Graph::cycle(5),
            Pattern::C6 => Graph::cycle(6),
            Pattern::C7 => Graph::cycle(7),
            Pattern::TwoK2 => Graph::from_edges(4, [(0, 1), (2, 3)]).ok()?,
            Pattern::ThreeK1 => Graph::empty(3).ok()?,
            Pattern::FourWheel => Graph::wheel(4),
            Pattern::FiveWheel => Graph::wheel(5),
            Pattern::KWheel(k) if k >= 3 => Graph::wheel(k),
            Pattern::KWheel(_) => return None,
            Pattern::C7Complement => Graph::cycle(7).complement(),
            Pattern::OddHole(_) | Pattern::OddAntihole(_) => return None,
        })
    }

    /// Odd lengths searched for the odd families on an `n`-vertex host.
    pub fn odd_lengths(min_len: usize, n: usize) -> impl Iterator<Item = usize> {
        let start = min_len.max(5) | 1;
        (start..=n).step_by(2)
    }
}

impl fmt::Display for Pattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Pattern::P3 => write!(f, "P3"),
            Pattern::P4 => write!(f, "P4"),
            Pattern::P5 => write!(f, "P5"),
            Pattern::C4 => write!(f, "C4"),
            Pattern::C5 => write!(f, "C5"),
            Pattern::C6 => write!(f, "C6"),
            Pattern::C7 => write!(f, "C7"),
            Pattern::TwoK2 => write!(f, "2K2"),
            Pattern::ThreeK1 => write!(f, "3K1"),
            Pattern::FourWheel => write!(f, "4-wheel"),
            Pattern::FiveWheel => write!(f, "5-wheel"),
            Pattern::KWheel(k) => write!(f, "{k}-wheel"),
            Pattern::C7Complement => write!(f, "C7c"),
            Pattern::OddHole(m) => write!(f, "odd-hole:{m}"),
            Pattern::OddAntihole(m) => write!(f, "odd-antihole:{m}"),
        }
    }
}

impl FromStr for Pattern {
    type Err = String;

    /// Accepts the `Display` forms, case-insensitively. `odd-hole` alone means length ≥ 5.
    fn from_str(s: &str) -> Result<Pattern, String> {
        let lower = s.trim().to_ascii_lowercase();
        let parse_len = |rest: Option<&str>| -> Result<usize, String> {
            match rest {
                None => Ok(5),
                Some(r) => r.parse::<usize>().map_err(|e| format!("bad length in {s:?}: {e}")),
            }
        };
        let (head, rest) = match lower.split_once(':') {
            Some((h, r)) => (h, Some(r)),
            None => (lower.as_str(), None),
        };
        Ok(match head {
            "p3" => Pattern::P3,
            "p4" => Pattern::P4,
            "p5" => Pattern::P5,
            "c4" => Pattern::C4,
            "c5" => Pattern::C5,
            "c6" => Pattern::C6,
            "c7" => Pattern::C7,
            "2k2" => Pattern::TwoK2,
            "3k1" => Pattern::ThreeK1,
            "4-wheel" | "w4" => Pattern::FourWheel,
            "5-wheel" | "w5" => Pattern::FiveWheel,
            "c7c" | "c7-complement" => Pattern::C7Complement,
            "odd-hole" => Pattern::OddHole(parse_len(rest)?),
            "odd-antihole" => Pattern::OddAntihole(parse_len(rest)?),
            other => match other.strip_suffix("-wheel").and_then(|k| k.parse::<usize>().ok()) {
                Some(k) if k >= 3 => Pattern::KWheel(k),
                _ => return Err(format!("unknown pattern {s:?}")),
            },
        })
    }
}

/// Lexicographically least ordered embedding of the pattern as an induced
/// subgraph: `result[i]` is the host vertex playing pattern vertex `i`.
///
/// For the odd families the shortest length present wins, then the least embedding.
pub fn find_induced(g: &Graph, p: Pattern) -> Option<Vec<usize>> {
    match p {
        Pattern::OddHole(m) => {
            Pattern::odd_lengths(m, g.n()).find_map(|len| find_induced_graph(g, &Graph::cycle(len)))
        }
        Pattern::OddAntihole(m) => {
            let h = g.complement();
            Pattern::odd_lengths(m, g.n()).find_map(|len| find_induced_graph(&h, &Graph::cycle(len)))
        }
        _ => find_induced_graph(g, &p.graph()?),
    }
}

/// Same as [`find_induced`] restricted to `G[within]`.
pub fn find_induced_within(g: &Graph, p: Pattern, within: VertexSet) -> Option<Vec<usize>> {
    let (h, map) = g.induced_subgraph(within).ok()?;
    find_induced(&h, p).map(|e| e.into_iter().map(|v| map[v]).collect())
}

/// Backtracking embedding search; pattern vertices are placed in index
/// order and host candidates tried in ascending order.
pub fn find_induced_graph(g: &Graph, pattern: &Graph) -> Option<Vec<usize>> {
    let k = pattern.n();
    if k > g.n() {
        return None;
    }
    if k == 0 {
        return Some(Vec::new());
    }
    let mut emb = Vec::with_capacity(k);
    if extend(g, pattern, &mut emb, VertexSet::EMPTY) {
        Some(emb)
    } else {
        None
    }
}

fn extend(g: &Graph, p: &Graph, emb: &mut Vec<usize>, used: VertexSet) -> bool {
    let i = emb.len();
    if i == p.n() {
        return true;
    }
    let mut cand = g.vertices() - used;
    for (j, &w) in emb.iter().enumerate() {
        if p.adjacent(i, j) {
            cand &= g.neighbors(w);
        } else {
            cand -= g.neighbors(w);
        }
    }
    // a host vertex needs at least the pattern vertex's degree
    let need = p.degree(i);
    for v in cand {
        if g.degree(v) < need {
            continue;
        }
        emb.push(v);
        if extend(g, p, emb, used.with(v)) {
            return true;
        }
        emb.pop();
    }
    false
}

/// Checks that `emb` realizes `pattern` as an induced subgraph of `g`.
pub fn is_induced_embedding(g: &Graph, pattern: &Graph, emb: &[usize]) -> bool {
    if emb.len() != pattern.n() || emb.iter().any(|&v| v >= g.n()) {
        return false;
    }
    let set: VertexSet = emb.iter().collect();
    if set.len() != emb.len() {
        return false;
    }
    (0..emb.len()).all(|i| (i + 1..emb.len()).all(|j| g.adjacent(emb[i], emb[j]) == pattern.adjacent(i, j)))
}
