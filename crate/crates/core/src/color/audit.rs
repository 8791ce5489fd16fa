//! Replayable record of a coloring run.

use serde::{Deserialize, Serialize};

use super::{AtomClassification, AtomTag};
use crate::detect::{check_proper, color_count, is_perfect_with, omega_in, Limits};
use crate::error::Result;
use crate::graph::{Graph, VertexSet};
use crate::nice::{verify_nice_with, NiceCertificate};

pub const SCHEMA_VERSION: u32 = 1;

/// One clique cutset split, in input vertex ids.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CutsetRecord {
    pub q: VertexSet,
    pub left: VertexSet,
    pub right: VertexSet,
}

/// An atom and how it was classified. Certificates inside
/// `classification` index the atom's vertices in increasing order.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AtomRecord {
    pub vertices: VertexSet,
    pub classification: AtomClassification,
}

/// A nice set removed from the induced subgraph on `vertices`
/// (input vertex ids throughout).
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LevelRecord {
    pub vertices: VertexSet,
    pub omega: usize,
    pub omega_after: usize,
    pub certificate: NiceCertificate,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ColoringRecord {
    pub colors: Vec<usize>,
    pub count: usize,
    pub omega: usize,
    pub bound: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Audit {
    pub schema_version: u32,
    pub graph: Graph,
    pub decomposition: Vec<CutsetRecord>,
    pub classifications: Vec<AtomRecord>,
    pub certificates: Vec<LevelRecord>,
    pub coloring: ColoringRecord,
    pub checks: Vec<Check>,
}

fn localize(set: VertexSet, vertices: VertexSet) -> VertexSet {
    vertices.iter().enumerate().filter(|&(_, v)| set.contains(v)).map(|(i, _)| i).collect()
}

fn check(name: &str, failures: Vec<String>) -> Check {
    Check { name: name.into(), passed: failures.is_empty(), detail: failures.join("; ") }
}

impl Audit {
    pub fn new(g: &Graph) -> Audit {
        Audit {
            schema_version: SCHEMA_VERSION,
            graph: g.clone(),
            decomposition: Vec::new(),
            classifications: Vec::new(),
            certificates: Vec::new(),
            coloring: ColoringRecord { colors: Vec::new(), count: 0, omega: 0, bound: 0 },
            checks: Vec::new(),
        }
    }

    pub(crate) fn set_coloring(&mut self, colors: &[usize], count: usize, omega: usize, bound: usize) {
        self.coloring = ColoringRecord { colors: colors.to_vec(), count, omega, bound };
    }

    /// Re-derives every claim in the record against `g`.
    pub fn replay(&self, g: &Graph, limits: &Limits) -> Result<Vec<Check>> {
        let c = &self.coloring;
        let mut out = Vec::new();
        out.push(check("graph", if &self.graph == g { vec![] } else { vec!["recorded graph differs".into()] }));

        let mut f = Vec::new();
        if !check_proper(g, &c.colors) {
            f.push("coloring is not proper".into());
        }
        let omega = omega_in(g, g.vertices());
        if c.omega != omega || c.bound != 3 * omega / 2 {
            f.push(format!("recorded omega {} / bound {}, actual omega {omega}", c.omega, c.bound));
        }
        let used = color_count(&c.colors);
        if c.count != used || c.colors.iter().any(|&x| x >= c.count) {
            f.push(format!("recorded count {} but colors use {used} names", c.count));
        }
        if c.count > c.bound {
            f.push(format!("{} colors exceeds bound {}", c.count, c.bound));
        }
        out.push(check("coloring", f));

        let mut f = Vec::new();
        for (i, r) in self.decomposition.iter().enumerate() {
            if !g.is_clique(r.q) || r.left & r.right != r.q {
                f.push(format!("split {i}: cutset is not a clique equal to the overlap"));
            }
            if !g.is_anticomplete_to(r.left - r.q, r.right - r.q) || r.left == r.q || r.right == r.q {
                f.push(format!("split {i}: sides are not separated by q"));
            }
        }
        out.push(check("decomposition", f));

        let mut f = Vec::new();
        for (i, r) in self.classifications.iter().enumerate() {
            let (sub, _) = g.induced_subgraph(r.vertices)?;
            let ok = match &r.classification.tag {
                AtomTag::Perfect => is_perfect_with(&sub, limits)?,
                AtomTag::QuasiLine(q) => q.verify(&sub),
                AtomTag::Nice(n) => verify_nice_with(&sub, n, limits)?.is_valid(),
            };
            if !ok {
                f.push(format!("atom {i} ({:?}) fails its classification", r.vertices));
            }
        }
        out.push(check("classifications", f));

        let mut f = Vec::new();
        for (i, r) in self.certificates.iter().enumerate() {
            let (sub, _) = g.induced_subgraph(r.vertices)?;
            let sets = r.certificate.sets();
            let local = NiceCertificate::new(
                localize(sets[0], r.vertices),
                localize(sets[1], r.vertices),
                localize(sets[2], r.vertices),
            );
            let v = verify_nice_with(&sub, &local, limits)?;
            if !v.is_valid() || v.omega_before != r.omega || v.omega_after != r.omega_after {
                f.push(format!("level {i}: certificate does not verify"));
            }
            let s = r.certificate.union();
            let outside: Vec<usize> = (r.vertices - s).iter().map(|v| c.colors[v]).collect();
            let mut seen = Vec::new();
            for set in sets.into_iter().filter(|x| !x.is_empty()) {
                let colors: Vec<usize> = set.iter().map(|v| c.colors[v]).collect();
                let k = colors[0];
                if colors.iter().any(|&x| x != k) || seen.contains(&k) || outside.contains(&k) {
                    f.push(format!("level {i}: set {set:?} does not own a fresh color"));
                }
                seen.push(k);
            }
        }
        out.push(check("certificates", f));
        Ok(out)
    }
}
