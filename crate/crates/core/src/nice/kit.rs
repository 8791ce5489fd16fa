//! Shared vocabulary for the C5-based builders: `R_U`, `L`, `L'`, `𝔸_i`,
//! `𝕎_i` read off one relabeling of the structure.

use serde::Serialize;

use crate::c5::{slot, w_sets, C5Structure, Dihedral, WPair};
use crate::detect::r_set;
use crate::error::Result;
use crate::graph::{Graph, VertexSet};

use super::{NiceCertificate, Outcome};

pub(crate) struct Kit<'a> {
    pub g: &'a Graph,
    pub s: C5Structure,
    pub omega: usize,
    pub w: [Vec<WPair>; 5],
    pub t_cliques: Vec<VertexSet>,
    pub l: VertexSet,
    pub lp: VertexSet,
}

impl<'a> Kit<'a> {
    pub fn new(g: &'a Graph, s: C5Structure, omega: usize) -> Result<Kit<'a>> {
        let w = w_sets(g, &s, omega)?;
        let t_cliques = g.components_of(s.t);
        let l = t_cliques.iter().filter_map(|c| c.first()).collect();
        let lp = t_cliques.iter().filter_map(|c| c.iter().nth(1)).collect();
        Ok(Kit { g, s, omega, w, t_cliques, l, lp })
    }

    pub fn r(&self, u: VertexSet) -> VertexSet {
        r_set(self.g, u)
    }

    pub fn ra(&self, i: i32) -> VertexSet {
        self.r(self.s.ai(i))
    }

    pub fn rx(&self, i: i32) -> VertexSet {
        self.r(self.s.xi(i))
    }

    pub fn ry(&self, i: i32) -> VertexSet {
        self.r(self.s.yi(i))
    }

    pub fn rt(&self) -> VertexSet {
        self.r(self.s.t)
    }

    pub fn a(&self, i: i32) -> VertexSet {
        self.s.ai(i)
    }

    pub fn x(&self, i: i32) -> VertexSet {
        self.s.xi(i)
    }

    pub fn y(&self, i: i32) -> VertexSet {
        self.s.yi(i)
    }

    pub fn cliques(&self, u: VertexSet) -> Vec<VertexSet> {
        self.g.components_of(u)
    }

    pub fn is_max(&self, k: VertexSet) -> bool {
        k.len() == self.omega && self.g.is_clique(k)
    }

    pub fn w_empty(&self, i: i32) -> bool {
        self.w[slot(i)].is_empty()
    }

    pub fn a_is_clique(&self, i: i32) -> bool {
        self.g.is_clique(self.a(i))
    }

    /// The first `A_i`-clique that `u` is complete to.
    pub fn a_clique_complete_to(&self, i: i32, u: VertexSet) -> Option<VertexSet> {
        self.cliques(self.a(i)).into_iter().find(|&c| self.g.is_complete_to(u, c))
    }

    /// `𝔸_i`: per `A_i`-clique the least vertex complete to `Y_{i-1} ∪ Y_{i+1}`
    /// when every clique has one, else `R_{A_i}`.
    pub fn aa(&self, i: i32) -> VertexSet {
        let yy = self.y(i - 1) | self.y(i + 1);
        if !yy.is_empty() {
            let picks: Option<VertexSet> = self
                .cliques(self.a(i))
                .into_iter()
                .map(|c| c.iter().find(|&v| yy.is_subset(self.g.neighbors(v))))
                .collect::<Option<Vec<_>>>()
                .map(|v| v.into_iter().collect());
            if let Some(p) = picks {
                return p;
            }
        }
        self.ra(i)
    }

    /// `L` and `L'` restricted to the T-cliques accepted by `keep`.
    pub fn l_where(&self, keep: impl Fn(VertexSet) -> bool) -> (VertexSet, VertexSet) {
        let mut l = VertexSet::EMPTY;
        let mut lp = VertexSet::EMPTY;
        for &c in self.t_cliques.iter().filter(|&&c| keep(c)) {
            l |= c & self.l;
            lp |= c & self.lp;
        }
        (l, lp)
    }
}

pub(crate) fn cert(s1: VertexSet, s2: VertexSet, s3: VertexSet) -> Result<Option<Outcome>> {
    Ok(Some(Outcome::Nice(NiceCertificate::new(s1, s2, s3))))
}

/// One attempt whose hypothesis held but whose sets failed verification.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Rejected {
    pub case: &'static str,
    pub relabel: Dihedral,
}

pub(crate) type Rule = (&'static str, fn(&Kit) -> Result<Option<Outcome>>);

pub(crate) struct Found<'a> {
    pub kit: Kit<'a>,
    pub case: &'static str,
    pub relabel: Dihedral,
    pub outcome: Outcome,
}

/// Tries `rules` in order, each under every relabeling, and returns the first
/// outcome that verifies. Failed attempts land in `rejected`.
pub(crate) fn drive<'a>(
    g: &'a Graph,
    s: &C5Structure,
    omega: usize,
    rules: &[Rule],
    rejected: &mut Vec<Rejected>,
) -> Result<Option<Found<'a>>> {
    let mut kits = Dihedral::all()
        .map(|d| Ok((d, Some(Kit::new(g, s.relabel(d), omega)?))))
        .collect::<Result<Vec<_>>>()?;
    for &(case, rule) in rules {
        for (d, entry) in kits.iter_mut() {
            let kit = entry.as_ref().expect("kits are only taken on success");
            let Some(outcome) = rule(kit)? else { continue };
            let ok = match &outcome {
                Outcome::Nice(c) => super::is_valid(g, c)?,
                Outcome::QuasiLine(q) => q.verify(g),
            };
            if ok {
                let kit = entry.take().expect("present");
                return Ok(Some(Found { kit, case, relabel: *d, outcome }));
            }
            rejected.push(Rejected { case, relabel: *d });
        }
    }
    Ok(None)
}
