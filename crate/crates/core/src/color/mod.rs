//! The coloring driver: components, clique cutsets, then per-atom
//! perfect / quasi-line / nice handling.

mod audit;

use serde::{Deserialize, Serialize};

pub use audit::{Audit, AtomRecord, Check, CutsetRecord, LevelRecord, SCHEMA_VERSION};

use crate::c5::build_c5_structure;
use crate::decompose::{atom_tree, AtomTree};
use crate::detect::recognize::require_in_class;
use crate::detect::{chi_exact_with, find_induced, is_perfect_with, omega_in, Limits, Pattern, QuasiLineCertificate};
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};
use crate::nice::{
    build_c7_structure, certify_5wheel_case, certify_c7c_case, certify_wheelfree_c5_case, NiceCertificate, Outcome,
};

pub use crate::detect::check_proper;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum AtomTag {
    Perfect,
    Nice(NiceCertificate),
    QuasiLine(QuasiLineCertificate),
}

/// Which structural hypothesis fired.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Trigger {
    FiveWheel,
    C5NoWheel,
    C7cNoC5,
    None,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AtomClassification {
    pub tag: AtomTag,
    pub trigger: Trigger,
    /// Builder case that produced the certificate.
    pub case: Option<String>,
}

pub fn classify_atom(g: &Graph) -> Result<AtomClassification> {
    classify_atom_with(g, &Limits::default())
}

/// `g` should be a connected in-class atom.
pub fn classify_atom_with(g: &Graph, limits: &Limits) -> Result<AtomClassification> {
    if let Some(w) = find_induced(g, Pattern::FiveWheel) {
        let s = build_c5_structure(g, Some(&w[..5]))?;
        let (c, ws) = certify_5wheel_case(g, &s)?;
        return Ok(AtomClassification { tag: AtomTag::Nice(c), trigger: Trigger::FiveWheel, case: Some(ws.case.into()) });
    }
    if let Some(c5) = find_induced(g, Pattern::C5) {
        let s = build_c5_structure(g, Some(&c5))?;
        let (o, ws) = certify_wheelfree_c5_case(g, &s)?;
        let tag = match o {
            Outcome::Nice(c) => AtomTag::Nice(c),
            Outcome::QuasiLine(q) => AtomTag::QuasiLine(q),
        };
        return Ok(AtomClassification { tag, trigger: Trigger::C5NoWheel, case: Some(ws.case.into()) });
    }
    if find_induced(g, Pattern::C7Complement).is_some() {
        let w = build_c7_structure(g)?;
        let c = certify_c7c_case(g, &w)?;
        return Ok(AtomClassification { tag: AtomTag::Nice(c), trigger: Trigger::C7cNoC5, case: None });
    }
    if !is_perfect_with(g, limits)? {
        return Err(Error::bug(
            "classify_atom",
            "no C5 and no C7 complement, yet not perfect",
            serde_json::to_value(g)?,
        ));
    }
    Ok(AtomClassification { tag: AtomTag::Perfect, trigger: Trigger::None, case: None })
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct ColoringResult {
    pub colors: Vec<usize>,
    pub count: usize,
    pub omega: usize,
    /// `⌊3ω/2⌋`.
    pub bound: usize,
    pub audit: Audit,
}

pub fn bound(omega: usize) -> usize {
    3 * omega / 2
}

pub fn color(g: &Graph) -> Result<ColoringResult> {
    color_with(g, &Limits::default())
}

pub fn color_with(g: &Graph, limits: &Limits) -> Result<ColoringResult> {
    require_in_class(g)?;
    let mut run = Run { limits, audit: Audit::new(g) };
    let identity: Vec<usize> = (0..g.n()).collect();
    let colors = run.any(g, &identity)?;
    let omega = omega_in(g, g.vertices());
    let count = colors.iter().max().map_or(0, |&c| c + 1);
    let mut audit = run.audit;
    audit.set_coloring(&colors, count, omega, bound(omega));
    audit.checks = audit.replay(g, limits)?;
    if let Some(bad) = audit.checks.iter().find(|c| !c.passed) {
        return Err(Error::bug("color", format!("check {} failed: {}", bad.name, bad.detail), serde_json::to_value(&audit)?));
    }
    Ok(ColoringResult { colors, count, omega, bound: bound(omega), audit })
}

struct Run<'a> {
    limits: &'a Limits,
    audit: Audit,
}

fn compose(outer: &[usize], inner: &[usize]) -> Vec<usize> {
    inner.iter().map(|&v| outer[v]).collect()
}

fn global(set: VertexSet, map: &[usize]) -> VertexSet {
    set.map_through(map)
}

impl Run<'_> {
    /// Colors any in-class graph; `map` sends its vertices to the root.
    fn any(&mut self, g: &Graph, map: &[usize]) -> Result<Vec<usize>> {
        if g.n() == 0 {
            return Ok(Vec::new());
        }
        let comps = g.components();
        if comps.len() == 1 {
            let tree = atom_tree(g)?;
            let colors = self.tree(&tree, map)?;
            return Ok(colors.into_iter().map(|c| c.expect("tree covers every vertex")).collect());
        }
        let mut colors = vec![0; g.n()];
        for c in comps {
            let (sub, m) = g.induced_subgraph(c)?;
            let cc = self.any(&sub, &compose(map, &m))?;
            for (i, &v) in m.iter().enumerate() {
                colors[v] = cc[i];
            }
        }
        Ok(colors)
    }

    /// Colors indexed like the tree's root; vertices outside it stay `None`.
    fn tree(&mut self, t: &AtomTree, map: &[usize]) -> Result<Vec<Option<usize>>> {
        match t {
            AtomTree::Leaf { map: lm, graph } => {
                let cc = self.atom(graph, &compose(map, lm))?;
                let mut out = vec![None; map.len()];
                for (i, &v) in lm.iter().enumerate() {
                    out[v] = Some(cc[i]);
                }
                Ok(out)
            }
            AtomTree::Split { q, left, right } => {
                let l = self.tree(left, map)?;
                let r = self.tree(right, map)?;
                let side = |c: &[Option<usize>]| (0..c.len()).filter(|&v| c[v].is_some()).collect::<VertexSet>();
                self.audit.decomposition.push(CutsetRecord {
                    q: global(*q, map),
                    left: global(side(&l), map),
                    right: global(side(&r), map),
                });
                Ok(merge(*q, l, r))
            }
        }
    }

    fn atom(&mut self, g: &Graph, map: &[usize]) -> Result<Vec<usize>> {
        let cls = classify_atom_with(g, self.limits)?;
        let omega = omega_in(g, g.vertices());
        self.audit.classifications.push(AtomRecord { vertices: map.iter().copied().collect(), classification: cls.clone() });
        let colors = match cls.tag {
            AtomTag::Perfect | AtomTag::QuasiLine(_) => chi_exact_with(g, self.limits)?.colors,
            AtomTag::Nice(c) => self.nice(g, map, &c, omega)?,
        };
        let count = colors.iter().max().map_or(0, |&c| c + 1);
        if count > bound(omega) {
            return Err(Error::bug(
                "color",
                format!("atom used {count} colors, bound is {}", bound(omega)),
                serde_json::json!({ "atom": g, "vertices": map, "colors": colors }),
            ));
        }
        Ok(colors)
    }

    fn nice(&mut self, g: &Graph, map: &[usize], c: &NiceCertificate, omega: usize) -> Result<Vec<usize>> {
        let s = c.union();
        let (rest, m) = g.remove(s);
        let omega_after = omega_in(&rest, rest.vertices());
        self.audit.certificates.push(LevelRecord {
            vertices: map.iter().copied().collect(),
            omega,
            omega_after,
            certificate: NiceCertificate::new(global(c.s1, map), global(c.s2, map), global(c.s3, map)),
        });
        let rc = self.any(&rest, &compose(map, &m))?;
        let mut next = rc.iter().max().map_or(0, |&x| x + 1);
        let mut colors = vec![0; g.n()];
        for (i, &v) in m.iter().enumerate() {
            colors[v] = rc[i];
        }
        for set in c.sets().into_iter().filter(|x| !x.is_empty()) {
            for v in set {
                colors[v] = next;
            }
            next += 1;
        }
        Ok(colors)
    }
}

/// Renames the right side's colors to agree with the left on the clique `q`,
/// sending its other colors to the smallest unused names.
fn merge(q: VertexSet, left: Vec<Option<usize>>, right: Vec<Option<usize>>) -> Vec<Option<usize>> {
    let rmax = right.iter().flatten().max().map_or(0, |&c| c + 1);
    let mut rename = vec![None; rmax];
    for v in q {
        let (Some(a), Some(b)) = (left[v], right[v]) else { unreachable!("q lies on both sides") };
        rename[b] = Some(a);
    }
    let mut taken: Vec<usize> = rename.iter().flatten().copied().collect();
    let mut fresh = 0;
    for slot in rename.iter_mut().filter(|s| s.is_none()) {
        while taken.contains(&fresh) {
            fresh += 1;
        }
        *slot = Some(fresh);
        taken.push(fresh);
    }
    left.into_iter()
        .zip(right)
        .map(|(l, r)| l.or(r.map(|c| rename[c].expect("every color renamed"))))
        .collect()
}
