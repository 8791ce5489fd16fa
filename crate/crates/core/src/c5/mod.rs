//! The partition of an atom around an induced C5: a maximal blown-up C5
//! `A_1..A_5`, then `X_i`, `Y_i`, `Z`, `T` for everything else.
//!
//! Indices follow the usual convention `1..=5` read modulo 5; the arrays
//! store `A_i` at slot `i - 1`.

mod props;

use serde::Serialize;

pub use props::{assert_c5_propositions, proposition_ids, PropositionReport, PropositionResult, Status};

use crate::detect::{clique_partition, find_induced, Pattern};
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};

/// Array slot of index `i` taken modulo 5.
pub fn slot(i: i32) -> usize {
    (i - 1).rem_euclid(5) as usize
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct C5Structure {
    pub a: [VertexSet; 5],
    pub x: [VertexSet; 5],
    pub y: [VertexSet; 5],
    pub z: VertexSet,
    pub t: VertexSet,
    /// `base[i - 1] = v_i`.
    pub base: [usize; 5],
}

impl C5Structure {
    pub fn ai(&self, i: i32) -> VertexSet {
        self.a[slot(i)]
    }

    pub fn xi(&self, i: i32) -> VertexSet {
        self.x[slot(i)]
    }

    pub fn yi(&self, i: i32) -> VertexSet {
        self.y[slot(i)]
    }

    pub fn vi(&self, i: i32) -> usize {
        self.base[slot(i)]
    }

    pub fn a_all(&self) -> VertexSet {
        self.a.iter().fold(VertexSet::EMPTY, |acc, &s| acc | s)
    }

    pub fn x_all(&self) -> VertexSet {
        self.x.iter().fold(VertexSet::EMPTY, |acc, &s| acc | s)
    }

    pub fn y_all(&self) -> VertexSet {
        self.y.iter().fold(VertexSet::EMPTY, |acc, &s| acc | s)
    }

    /// The same partition read through `d`: new index `i` is old index `d.apply(i)`.
    pub fn relabel(&self, d: Dihedral) -> C5Structure {
        let pick = |arr: &[VertexSet; 5]| std::array::from_fn(|k| arr[slot(d.apply(k as i32 + 1))]);
        C5Structure {
            a: pick(&self.a),
            x: pick(&self.x),
            y: pick(&self.y),
            z: self.z,
            t: self.t,
            base: std::array::from_fn(|k| self.base[slot(d.apply(k as i32 + 1))]),
        }
    }

    /// Re-checks the defining conditions of every set against `g`.
    pub fn check(&self, g: &Graph) -> Result<()> {
        let mut seen = VertexSet::EMPTY;
        let all = self.a.iter().chain(&self.x).chain(&self.y).chain([&self.z, &self.t]);
        for &s in all {
            if let Some(v) = (seen & s).first() {
                return Err(Error::Precondition(format!("vertex {v} lies in two parts")));
            }
            seen |= s;
        }
        if seen != g.vertices() {
            return Err(Error::Precondition("parts do not cover the vertex set".into()));
        }
        for i in 1..=5 {
            if !self.ai(i).contains(self.vi(i)) {
                return Err(Error::Precondition(format!("v_{i} not in A_{i}")));
            }
            if !g.is_complete_to(self.ai(i), self.ai(i + 1)) || !g.is_anticomplete_to(self.ai(i), self.ai(i + 2)) {
                return Err(Error::Precondition(format!("A_{i} breaks the blown-up C5 pattern")));
            }
        }
        let a = self.a_all();
        for v in g.vertices() - a {
            if absorbable(g, &self.a, v).is_some() {
                return Err(Error::Precondition(format!("vertex {v} could join A")));
            }
            let expected = bucket(g, &self.a, v)?;
            let actual = if self.z.contains(v) {
                Bucket::Z
            } else if self.t.contains(v) {
                Bucket::T
            } else if let Some(k) = (0..5).find(|&k| self.x[k].contains(v)) {
                Bucket::X(k)
            } else {
                Bucket::Y((0..5).find(|&k| self.y[k].contains(v)).unwrap_or(5))
            };
            if actual != expected {
                return Err(Error::Precondition(format!("vertex {v} filed as {actual:?}, expected {expected:?}")));
            }
        }
        Ok(())
    }
}

/// One of the ten symmetries of the index pentagon: `i ↦ shift + i`, or
/// `i ↦ shift - i` when reflected.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Dihedral {
    pub shift: i32,
    pub reflect: bool,
}

impl Dihedral {
    pub const IDENTITY: Dihedral = Dihedral { shift: 0, reflect: false };

    /// Identity first, then the other rotations, then the reflections.
    pub fn all() -> impl Iterator<Item = Dihedral> {
        [false, true].into_iter().flat_map(|reflect| (0..5).map(move |shift| Dihedral { shift, reflect }))
    }

    pub fn apply(self, i: i32) -> i32 {
        let j = if self.reflect { self.shift - i } else { self.shift + i };
        slot(j) as i32 + 1
    }

    /// `self` followed by `next`: indices of `s.relabel(self).relabel(next)`.
    pub fn then(self, next: Dihedral) -> Dihedral {
        let img = |i| self.apply(next.apply(i));
        let shift = img(0).rem_euclid(5);
        let reflect = slot(img(1) - shift) != 0;
        Dihedral { shift, reflect }
    }
}

/// Index `k` (0-based) such that `v` can join `A_{k+1}`.
fn absorbable(g: &Graph, a: &[VertexSet; 5], v: usize) -> Option<usize> {
    let nv = g.neighbors(v);
    (0..5).find(|&k| {
        let near = a[(k + 1) % 5] | a[(k + 4) % 5];
        let far = a[(k + 2) % 5] | a[(k + 3) % 5];
        near.is_subset(nv) && nv.is_disjoint(far)
    })
}

/// Grows `A_i = {v_i}` to a maximal blown-up C5, scanning vertices in
/// ascending order and indices `1..=5` until a full pass changes nothing.
pub fn grow_c5_partition(g: &Graph, c5: &[usize]) -> Result<[VertexSet; 5]> {
    if !crate::detect::is_induced_embedding(g, &Graph::cycle(5), c5) {
        return Err(Error::Precondition(format!("{c5:?} is not an induced C5")));
    }
    let mut a: [VertexSet; 5] = std::array::from_fn(|k| VertexSet::singleton(c5[k]));
    loop {
        let mut changed = false;
        for v in g.vertices() {
            if a.iter().any(|s| s.contains(v)) {
                continue;
            }
            if let Some(k) = absorbable(g, &a, v) {
                a[k].insert(v);
                changed = true;
            }
        }
        if !changed {
            return Ok(a);
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Bucket {
    X(usize),
    Y(usize),
    Z,
    T,
}

fn bucket(g: &Graph, a: &[VertexSet; 5], v: usize) -> Result<Bucket> {
    let nv = g.neighbors(v);
    let mask = (0..5).fold(0u8, |m, k| if nv.intersects(a[k]) { m | 1 << k } else { m });
    if mask == 0b11111 {
        return Ok(Bucket::Z);
    }
    for k in 0..5 {
        if mask == 0b11111 & !(1 << k) {
            return Ok(Bucket::Y(k));
        }
    }
    for k in 0..5 {
        let want = (1 << k) | (1 << ((k + 2) % 5)) | (1 << ((k + 3) % 5));
        if mask == want {
            return Ok(Bucket::X(k));
        }
    }
    if mask == 0 {
        return Ok(Bucket::T);
    }
    Err(Error::Unclassifiable { vertex: v, mask })
}

/// Files every vertex outside `A` into `X_i`, `Y_i`, `Z` or `T`.
pub fn classify_rest(g: &Graph, a: [VertexSet; 5], base: [usize; 5]) -> Result<C5Structure> {
    let mut s = C5Structure {
        a,
        x: [VertexSet::EMPTY; 5],
        y: [VertexSet::EMPTY; 5],
        z: VertexSet::EMPTY,
        t: VertexSet::EMPTY,
        base,
    };
    let in_a = s.a_all();
    for v in g.vertices() - in_a {
        match bucket(g, &s.a, v)? {
            Bucket::X(k) => s.x[k].insert(v),
            Bucket::Y(k) => s.y[k].insert(v),
            Bucket::Z => s.z.insert(v),
            Bucket::T => s.t.insert(v),
        }
    }
    Ok(s)
}

/// Partition around the given C5, or around the least induced C5 when `None`.
pub fn build_c5_structure(g: &Graph, c5: Option<&[usize]>) -> Result<C5Structure> {
    let found;
    let c5 = match c5 {
        Some(c) => c,
        None => {
            found = find_induced(g, Pattern::C5).ok_or_else(|| Error::Precondition("graph has no induced C5".into()))?;
            &found
        }
    };
    let a = grow_c5_partition(g, c5)?;
    classify_rest(g, a, std::array::from_fn(|k| c5[k]))
}

/// A member of `𝕎_i`: an `X_i`-clique together with an `A_i`-clique, of total size ω.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct WPair {
    pub x: VertexSet,
    pub a: VertexSet,
}

/// `𝕎_1..𝕎_5` for clique number `omega`; `w[i - 1]` is empty when `X_i` is.
pub fn w_sets(g: &Graph, s: &C5Structure, omega: usize) -> Result<[Vec<WPair>; 5]> {
    let mut out: [Vec<WPair>; 5] = Default::default();
    for k in 0..5 {
        if s.x[k].is_empty() {
            continue;
        }
        let xs = clique_partition(g, s.x[k])?.parts;
        let as_ = clique_partition(g, s.a[k])?.parts;
        for &xc in &xs {
            for &ac in &as_ {
                if xc.len() + ac.len() == omega {
                    out[k].push(WPair { x: xc, a: ac });
                }
            }
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::detect::omega;
    use crate::graph::{blowup, BlowupSpec};

    fn set(v: &[usize]) -> VertexSet {
        v.iter().collect()
    }

    /// C5 on 0..5 plus vertex 5 adjacent to `nbrs`.
    fn c5_plus(nbrs: &[usize]) -> Graph {
        let mut e: Vec<(usize, usize)> = (0..5).map(|i| (i, (i + 1) % 5)).collect();
        e.extend(nbrs.iter().map(|&u| (u, 5)));
        Graph::from_edges(6, e).unwrap()
    }

    #[test]
    fn c5_itself() {
        let s = build_c5_structure(&Graph::cycle(5), None).unwrap();
        for i in 1..=5 {
            assert_eq!(s.ai(i), VertexSet::singleton(i as usize - 1));
        }
        assert!(s.x_all().is_empty() && s.y_all().is_empty() && s.z.is_empty() && s.t.is_empty());
        s.check(&Graph::cycle(5)).unwrap();
    }

    #[test]
    fn blown_up_c5_grows_a1() {
        let b = blowup(&BlowupSpec::cliques(Graph::cycle(5), &[2, 1, 1, 1, 1])).unwrap();
        let s = build_c5_structure(&b.graph, Some(&[0, 2, 3, 4, 5])).unwrap();
        assert_eq!(s.ai(1), set(&[0, 1]));
        s.check(&b.graph).unwrap();
    }

    #[test]
    fn wheel_hub_in_z() {
        let w = Graph::wheel(5);
        let s = build_c5_structure(&w, Some(&[0, 1, 2, 3, 4])).unwrap();
        assert_eq!(s.z, set(&[5]));
        assert!(s.a_all() == set(&[0, 1, 2, 3, 4]));
        let ws = w_sets(&w, &s, 3).unwrap();
        assert!(ws.iter().all(|f| f.is_empty()));
    }

    #[test]
    fn x1_vertex_and_its_w_set() {
        // v_1 = 0, so X_1 needs neighbors in A_1, A_3, A_4 = {0, 2, 3}
        let g = c5_plus(&[0, 2, 3]);
        let s = build_c5_structure(&g, Some(&[0, 1, 2, 3, 4])).unwrap();
        assert_eq!(s.xi(1), set(&[5]));
        // {5, v_3, v_4} is a triangle, so {5} ∪ {v_1} is too small for 𝕎_1
        assert_eq!(omega(&g).unwrap(), 3);
        assert!(w_sets(&g, &s, 3).unwrap().iter().all(|f| f.is_empty()));
        // doubling A_1 makes {x} ∪ A_1 a maximum clique
        let b = blowup(&BlowupSpec::cliques(Graph::cycle(5), &[2, 1, 1, 1, 1])).unwrap();
        let mut e: Vec<(usize, usize)> = b.graph.edges().collect();
        e.extend([(0, 6), (1, 6), (3, 6), (4, 6)]);
        let g = Graph::from_edges(7, e).unwrap();
        let s = build_c5_structure(&g, Some(&[0, 2, 3, 4, 5])).unwrap();
        assert_eq!(s.xi(1), set(&[6]));
        let w = omega(&g).unwrap();
        assert_eq!(w, 3);
        let ws = w_sets(&g, &s, w).unwrap();
        assert_eq!(ws[0], vec![WPair { x: set(&[6]), a: set(&[0, 1]) }]);
    }

    #[test]
    fn t_and_unclassifiable() {
        // vertex 6 hangs off an X_1 vertex
        let mut e: Vec<(usize, usize)> = (0..5).map(|i| (i, (i + 1) % 5)).collect();
        e.extend([(0, 5), (2, 5), (3, 5), (5, 6)]);
        let g = Graph::from_edges(7, e).unwrap();
        let s = build_c5_structure(&g, Some(&[0, 1, 2, 3, 4])).unwrap();
        assert_eq!(s.t, set(&[6]));
        // a pendant on v_1 fits nowhere
        let g = c5_plus(&[0]);
        assert!(matches!(
            build_c5_structure(&g, Some(&[0, 1, 2, 3, 4])),
            Err(Error::Unclassifiable { vertex: 5, .. })
        ));
    }

    #[test]
    fn dihedral_maps() {
        assert_eq!(Dihedral::all().count(), 10);
        for d in Dihedral::all() {
            let img: std::collections::BTreeSet<i32> = (1..=5).map(|i| d.apply(i)).collect();
            assert_eq!(img.len(), 5);
            // adjacency of indices is preserved
            for i in 1..=5 {
                assert!(matches!((d.apply(i + 1) - d.apply(i)).rem_euclid(5), 1 | 4));
            }
        }
        let g = c5_plus(&[0, 2, 3]);
        let s = build_c5_structure(&g, Some(&[0, 1, 2, 3, 4])).unwrap();
        for d in Dihedral::all() {
            let r = s.relabel(d);
            r.check(&g).unwrap();
            for e in Dihedral::all() {
                assert_eq!(r.relabel(e), s.relabel(d.then(e)));
            }
        }
        let rot = s.relabel(Dihedral { shift: 2, reflect: false });
        assert_eq!(rot.xi(4), set(&[5]));
        let refl = s.relabel(Dihedral { shift: 2, reflect: true });
        assert_eq!(refl.xi(1), set(&[5]));
    }

    #[test]
    fn grow_is_a_fixpoint() {
        let b = blowup(&BlowupSpec::cliques(Graph::cycle(5), &[3, 2, 1, 2, 1])).unwrap();
        let s = build_c5_structure(&b.graph, None).unwrap();
        for k in 0..5 {
            assert_eq!(s.a[k], b.parts[k]);
        }
        assert!(grow_c5_partition(&b.graph, &[0, 1, 2, 3, 4]).is_err());
    }
}
