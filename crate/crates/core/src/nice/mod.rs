//! Nice-graph certificates: three disjoint stable sets whose removal drops ω by two.
//!
//! Each `certify_*` builder follows one structural case, checks the facts it
//! relies on, and only returns certificates that pass [`verify_nice`].

mod c7;
mod kit;
mod search;
mod three_k1;
mod wheel;
mod wheel_free;

use serde::{Deserialize, Serialize};

use crate::detect::{max_cliques_with, omega_in, Limits, QuasiLineCertificate};
use crate::error::Result;
use crate::graph::{Graph, VertexSet};

pub use c7::{build_c7_structure, certify_c7c_case, h_star, C7Workspace};
pub use kit::Rejected;
pub use search::{nice_search_fallback, nice_search_fallback_with};
pub use three_k1::{certify_3k1_case, recognize_wheel_blowup};
pub use wheel::{certify_5wheel_case, WheelCaseWorkspace};
pub use wheel_free::{certify_wheelfree_c5_case, WheelFreeWorkspace};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct NiceCertificate {
    pub s1: VertexSet,
    pub s2: VertexSet,
    pub s3: VertexSet,
}

impl NiceCertificate {
    pub fn new(s1: VertexSet, s2: VertexSet, s3: VertexSet) -> NiceCertificate {
        NiceCertificate { s1, s2, s3 }
    }

    pub fn union(&self) -> VertexSet {
        self.s1 | self.s2 | self.s3
    }

    pub fn sets(&self) -> [VertexSet; 3] {
        [self.s1, self.s2, self.s3]
    }
}

/// Result of a builder: a nice certificate, or a quasi-line one where the
/// case analysis ends in a quasi-line graph.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Outcome {
    Nice(NiceCertificate),
    QuasiLine(QuasiLineCertificate),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "clause", rename_all = "snake_case")]
pub enum NiceViolation {
    Overlap { sets: (usize, usize), vertex: usize },
    NotStable { set: usize, edge: (usize, usize) },
    /// A clique of size `ω - 1` avoided by the union.
    OmegaDrop { clique: VertexSet },
    /// A maximum clique met fewer than twice.
    MetOnce { clique: VertexSet, hits: usize },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct NiceVerdict {
    pub omega_before: usize,
    pub omega_after: usize,
    pub maximum_cliques: usize,
    pub violations: Vec<NiceViolation>,
}

impl NiceVerdict {
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Checks disjointness, stability, `ω(G - S) ≤ ω(G) - 2` (read as `≤ 0`
/// when `ω ≤ 2`), and that every maximum clique meets `S` at least twice.
pub fn verify_nice(g: &Graph, cert: &NiceCertificate) -> Result<NiceVerdict> {
    verify_nice_with(g, cert, &Limits::default())
}

pub fn verify_nice_with(g: &Graph, cert: &NiceCertificate, limits: &Limits) -> Result<NiceVerdict> {
    let mut violations = Vec::new();
    let sets = cert.sets();
    for a in 0..3 {
        for b in a + 1..3 {
            if let Some(v) = (sets[a] & sets[b]).first() {
                violations.push(NiceViolation::Overlap { sets: (a + 1, b + 1), vertex: v });
            }
        }
        if let Some(u) = sets[a].iter().find(|&u| g.neighbors(u).intersects(sets[a])) {
            let v = (g.neighbors(u) & sets[a]).first().expect("found above");
            violations.push(NiceViolation::NotStable { set: a + 1, edge: (u, v) });
        }
    }
    let s = cert.union() & g.vertices();
    let maxes = max_cliques_with(g, limits)?;
    let omega_before = maxes.first().map_or(0, |m| m.len());
    let rest = g.vertices() - s;
    let omega_after = omega_in(g, rest);
    if omega_after > omega_before.saturating_sub(2) {
        let clique = crate::detect::max_clique_in(g, rest);
        violations.push(NiceViolation::OmegaDrop { clique });
    }
    for &m in &maxes {
        let hits = (m & s).len();
        if hits < 2.min(m.len()) {
            violations.push(NiceViolation::MetOnce { clique: m, hits });
        }
    }
    Ok(NiceVerdict { omega_before, omega_after, maximum_cliques: maxes.len(), violations })
}

pub(crate) fn is_valid(g: &Graph, cert: &NiceCertificate) -> Result<bool> {
    Ok(verify_nice(g, cert)?.is_valid())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(v: &[usize]) -> VertexSet {
        v.iter().collect()
    }

    #[test]
    fn wheel_certificates() {
        let w = Graph::wheel(5);
        let good = NiceCertificate::new(set(&[0, 2]), set(&[1, 3]), set(&[4]));
        let v = verify_nice(&w, &good).unwrap();
        assert!(v.is_valid(), "{v:?}");
        assert_eq!((v.omega_before, v.omega_after), (3, 1));
        let weak = NiceCertificate::new(set(&[0]), set(&[1]), set(&[2]));
        let v = verify_nice(&w, &weak).unwrap();
        // hub, v4, v5 is a triangle that survives
        assert_eq!(v.omega_after, 3);
        assert!(v.violations.iter().any(|x| matches!(x, NiceViolation::OmegaDrop { .. })));
    }

    #[test]
    fn overlap_and_edges_reported() {
        let c5 = Graph::cycle(5);
        let cert = NiceCertificate::new(set(&[0, 2]), set(&[2, 4]), set(&[1, 3]));
        let v = verify_nice(&c5, &cert).unwrap();
        assert!(v.violations.contains(&NiceViolation::Overlap { sets: (1, 2), vertex: 2 }));
        let cert = NiceCertificate::new(set(&[0, 1]), set(&[2]), set(&[3]));
        let v = verify_nice(&c5, &cert).unwrap();
        assert!(v.violations.contains(&NiceViolation::NotStable { set: 1, edge: (0, 1) }));
    }
}
