//! C5-free atoms containing an induced C7^c: blowups of `H*`.
//!
//! The analysis runs in the complement `H`, where the C7^c is an induced C7.

use serde::Serialize;

use crate::detect::{find_induced, is_p3_free, r_set, Pattern};
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};

use super::{is_valid, NiceCertificate};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct C7Workspace {
    /// Complement-side blown-up C7: `a[i]` is `A_{i+1}`, stable in `H`.
    pub a: [VertexSet; 7],
    /// `b[i]` is `B_{i+1}`: neighbors in `A_{i+1}..A_{i+4}` only (in `H`).
    pub b: [VertexSet; 7],
    pub d: VertexSet,
    /// `Q_{v1}..Q_{v9}` for the first part map found.
    pub parts: [VertexSet; 9],
    /// Every part map realizing `g` as a blowup of `H*`.
    pub embeddings: Vec<[VertexSet; 9]>,
}

/// `H*`: `v_i ~ v_{i+1}, v_{i+2}` on `v1..v7`, plus `v8 ~ v1, v2, v5` and `v9 ~ v5, v6, v2`.
pub fn h_star() -> Graph {
    let mut e: Vec<(usize, usize)> = (0..7).flat_map(|i| [(i, (i + 1) % 7), (i, (i + 2) % 7)]).collect();
    e.extend([(7, 0), (7, 1), (7, 4), (8, 4), (8, 5), (8, 1)]);
    Graph::from_edges(9, e).expect("static edge list")
}

fn m7(i: usize, d: isize) -> usize {
    (i as isize + d).rem_euclid(7) as usize
}

fn absorbable(h: &Graph, a: &[VertexSet; 7], v: usize) -> Option<usize> {
    let nv = h.neighbors(v);
    (0..7).find(|&i| {
        let near = a[m7(i, 1)] | a[m7(i, -1)];
        let far = (0..7).filter(|&j| j != i && j != m7(i, 1) && j != m7(i, -1)).fold(VertexSet::EMPTY, |s, j| s | a[j]);
        near.is_subset(nv) && nv.is_disjoint(far) && nv.is_disjoint(a[i])
    })
}

/// Checks that `parts` realize `g` as a blowup of `h`.
fn realizes(g: &Graph, h: &Graph, parts: &[VertexSet; 9]) -> bool {
    (0..9).all(|p| is_p3_free(g, parts[p]))
        && (0..9).all(|p| {
            (p + 1..9).all(|q| {
                if h.adjacent(p, q) {
                    g.is_complete_to(parts[p], parts[q])
                } else {
                    g.is_anticomplete_to(parts[p], parts[q])
                }
            })
        })
}

/// `g` must be connected, C5-free, and contain an induced C7^c.
pub fn build_c7_structure(g: &Graph) -> Result<C7Workspace> {
    let w = find_induced(g, Pattern::C7Complement)
        .ok_or_else(|| Error::Precondition("graph has no induced C7 complement".into()))?;
    let h = g.complement();
    let mut a: [VertexSet; 7] = std::array::from_fn(|i| VertexSet::singleton(w[i]));
    loop {
        let mut changed = false;
        for v in h.vertices() - a.iter().fold(VertexSet::EMPTY, |s, &x| s | x) {
            if let Some(i) = absorbable(&h, &a, v) {
                a[i].insert(v);
                changed = true;
            }
        }
        if !changed {
            break;
        }
    }
    let all_a = a.iter().fold(VertexSet::EMPTY, |s, &x| s | x);
    let mut b = [VertexSet::EMPTY; 7];
    let mut d = VertexSet::EMPTY;
    for v in h.vertices() - all_a {
        let hits: Vec<bool> = (0..7).map(|i| h.neighbors(v).intersects(a[i])).collect();
        if hits.iter().all(|&x| x) {
            d.insert(v);
            continue;
        }
        let i = (0..7).find(|&i| (0..4).all(|k| hits[m7(i, k)]) && (1..4).all(|k| !hits[m7(i, -k)]));
        match i {
            Some(i) => b[i].insert(v),
            None => return Err(Error::Recognition(format!("vertex {v} fits no part of the C7 structure"))),
        }
    }
    if !d.is_empty() {
        return Err(Error::Recognition(format!("D = {d:?} is nonempty, so g is disconnected")));
    }
    let used: Vec<usize> = (0..7).filter(|&i| !b[i].is_empty()).collect();
    if used.len() > 2 {
        return Err(Error::Recognition(format!("{} nonempty B sets", used.len())));
    }
    let hs = h_star();
    let mut embeddings = Vec::new();
    // The H-cycle u_0..u_6 becomes the H*-cycle through v_k = u_{2k}.
    for reflect in [false, true] {
        for shift in 0..7 {
            let mut base = [VertexSet::EMPTY; 9];
            for (i, &ai) in a.iter().enumerate() {
                let k = (4 * i) % 7;
                let k = if reflect { (7 - k) % 7 } else { k };
                base[(k + shift) % 7] = ai;
            }
            let slots: Vec<[usize; 2]> = match used.len() {
                0 => vec![[0, 0]],
                1 => vec![[7, 0], [8, 0]],
                _ => vec![[7, 8], [8, 7]],
            };
            for s in slots {
                let mut parts = base;
                for (n, &i) in used.iter().enumerate() {
                    parts[s[n]] = b[i];
                }
                if realizes(g, &hs, &parts) && !embeddings.contains(&parts) {
                    embeddings.push(parts);
                }
            }
        }
    }
    let parts = *embeddings
        .first()
        .ok_or_else(|| Error::Recognition("no part map realizes g as a blowup of H*".into()))?;
    Ok(C7Workspace { a, b, d, parts, embeddings })
}

/// Tries each part map in `w` and returns the first certificate that verifies.
pub fn certify_c7c_case(g: &Graph, w: &C7Workspace) -> Result<NiceCertificate> {
    for q in &w.embeddings {
        let r = |p: usize| r_set(g, q[p]);
        let c = NiceCertificate::new(r(0) | r(3) | r(8), r(1) | r(4), r(2) | r(6) | r(7));
        if is_valid(g, &c)? {
            return Ok(c);
        }
    }
    Err(Error::bug("certify_c7c_case", "no part map gave a valid certificate", serde_json::to_value(w)?))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::detect::omega;
    use crate::graph::{blowup, BlowupSpec};
    use crate::nice::verify_nice;

    #[test]
    fn c7_complement() {
        let g = Graph::cycle(7).complement();
        assert_eq!(omega(&g).unwrap(), 3);
        let w = build_c7_structure(&g).unwrap();
        assert!(w.parts[7].is_empty() && w.parts[8].is_empty());
        let c = certify_c7c_case(&g, &w).unwrap();
        assert!(verify_nice(&g, &c).unwrap().omega_after <= 1);
    }

    #[test]
    fn h_star_itself() {
        let g = h_star();
        let w = build_c7_structure(&g).unwrap();
        assert!(w.parts.iter().all(|p| p.len() == 1));
        let c = certify_c7c_case(&g, &w).unwrap();
        assert!(verify_nice(&g, &c).unwrap().is_valid());
    }

    #[test]
    fn doubled_h_star() {
        let b = blowup(&BlowupSpec::uniform(h_star(), 2)).unwrap();
        let g = b.graph;
        assert_eq!(g.n(), 18);
        let w = build_c7_structure(&g).unwrap();
        for q in &w.embeddings {
            let back: Vec<usize> = (0..9).map(|p| q[p].len()).collect();
            assert_eq!(back, vec![2; 9]);
        }
        let c = certify_c7c_case(&g, &w).unwrap();
        let v = verify_nice(&g, &c).unwrap();
        assert!(v.is_valid(), "{v:?}");
    }
}
