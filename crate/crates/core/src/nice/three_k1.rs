//! (3K1, 4-wheel)-free graphs: quasi-line, or a clique-blowup of the 5-wheel.

use crate::detect::{find_induced, is_chordal_in, is_quasi_line, r_set, Pattern};
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};

use super::{is_valid, NiceCertificate, Outcome};

/// Splits `g` into cliques `Q_{v1}..Q_{v6}` realizing it as a clique-blowup
/// of the 5-wheel (rim `v1..v5`, hub `v6`).
pub fn recognize_wheel_blowup(g: &Graph) -> Result<[VertexSet; 6]> {
    let w = find_induced(g, Pattern::FiveWheel).ok_or_else(|| Error::Recognition("no induced 5-wheel".into()))?;
    let wheel = Graph::wheel(5);
    let ws: VertexSet = w.iter().collect();
    let mut q = [VertexSet::EMPTY; 6];
    for v in g.vertices() {
        let seen = g.neighbors(v) & ws;
        let part = (0..6).find(|&p| {
            let want: VertexSet = wheel.neighbors(p).iter().map(|u| w[u]).collect();
            v == w[p] || seen == want.with(w[p])
        });
        match part {
            Some(p) => q[p].insert(v),
            None => return Err(Error::Recognition(format!("vertex {v} matches no wheel vertex"))),
        }
    }
    for a in 0..6 {
        if !g.is_clique(q[a]) {
            return Err(Error::Recognition(format!("part {} is not a clique", a + 1)));
        }
        for b in a + 1..6 {
            let ok = if wheel.adjacent(a, b) {
                g.is_complete_to(q[a], q[b])
            } else {
                g.is_anticomplete_to(q[a], q[b])
            };
            if !ok {
                return Err(Error::Recognition(format!("parts {} and {} break the pattern", a + 1, b + 1)));
            }
        }
    }
    Ok(q)
}

/// `g` must be (3K1, 4-wheel)-free.
pub fn certify_3k1_case(g: &Graph) -> Result<Outcome> {
    if g.vertices().iter().all(|v| is_chordal_in(g, g.neighbors(v))) {
        return is_quasi_line(g)
            .map(Outcome::QuasiLine)
            .ok_or_else(|| Error::Recognition("chordal neighborhoods but not quasi-line".into()));
    }
    let q = recognize_wheel_blowup(g)?;
    let r = |p: usize| r_set(g, q[p]);
    let c = NiceCertificate::new(r(0) | r(2), r(1) | r(3), r(4));
    if !is_valid(g, &c)? {
        return Err(Error::bug("certify_3k1_case", "wheel blowup certificate failed", serde_json::to_value(&c)?));
    }
    Ok(Outcome::Nice(c))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::detect::omega_in;
    use crate::graph::{blowup, BlowupSpec};

    fn set(v: &[usize]) -> VertexSet {
        v.iter().collect()
    }

    #[test]
    fn wheel() {
        let g = Graph::wheel(5);
        let Outcome::Nice(c) = certify_3k1_case(&g).unwrap() else { panic!("expected nice") };
        assert_eq!(c, NiceCertificate::new(set(&[0, 2]), set(&[1, 3]), set(&[4])));
        assert_eq!(omega_in(&g, g.vertices() - c.union()), 1);
    }

    #[test]
    fn complete_graph_is_quasi_line() {
        let g = Graph::complete(6);
        assert!(matches!(certify_3k1_case(&g).unwrap(), Outcome::QuasiLine(q) if q.verify(&g)));
    }

    #[test]
    fn doubled_wheel() {
        let g = blowup(&BlowupSpec::uniform(Graph::wheel(5), 2)).unwrap().graph;
        let Outcome::Nice(c) = certify_3k1_case(&g).unwrap() else { panic!("expected nice") };
        assert!(omega_in(&g, g.vertices() - c.union()) <= 4);
        let q = recognize_wheel_blowup(&g).unwrap();
        assert!(q.iter().all(|p| p.len() == 2));
    }
}
