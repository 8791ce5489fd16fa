//! Literal checks of the structural facts about the C5 partition.
//!
//! Every statement is checked as a universally quantified claim over the
//! named sets. Each result counts how many quantifier instances met the
//! hypothesis, so an empty domain shows up as `Vacuous` instead of `Passed`.

use rayon::prelude::*;
use serde::Serialize;

use super::C5Structure;
use crate::detect::{cliques_of_size_in, find_induced, omega_in, r_set, Pattern};
use crate::graph::{find_p3, Graph, VertexSet};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    Passed,
    Vacuous,
    Failed,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PropositionResult {
    pub id: &'static str,
    pub statement: &'static str,
    pub status: Status,
    /// Quantifier instances whose hypothesis held.
    pub instances: usize,
    /// Vertices of the first counterexample found.
    pub witness: Option<Vec<usize>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PropositionReport {
    pub results: Vec<PropositionResult>,
}

impl PropositionReport {
    pub fn failures(&self) -> impl Iterator<Item = &PropositionResult> {
        self.results.iter().filter(|r| r.status == Status::Failed)
    }

    pub fn all_passed(&self) -> bool {
        self.failures().next().is_none()
    }

    pub fn get(&self, id: &str) -> Option<&PropositionResult> {
        self.results.iter().find(|r| r.id == id)
    }

    /// Runs the suite again and confirms each recorded failure recurs with the same witness.
    pub fn reverify(&self, g: &Graph, s: &C5Structure) -> bool {
        let again = assert_c5_propositions(g, s);
        self.failures().all(|f| again.get(f.id).is_some_and(|r| r.status == Status::Failed && r.witness == f.witness))
    }
}

/// Identifiers of every check, in report order.
pub fn proposition_ids() -> Vec<&'static str> {
    CHECKS.iter().map(|c| c.0).collect()
}

#[derive(Default)]
struct Acc {
    instances: usize,
    witness: Option<Vec<usize>>,
}

impl Acc {
    /// Records one instance; `ok == false` keeps the first witness.
    fn check(&mut self, ok: bool, witness: impl FnOnce() -> Vec<usize>) {
        self.instances += 1;
        if !ok && self.witness.is_none() {
            self.witness = Some(witness());
        }
    }
}

/// Shared data for the checks.
struct Ctx<'a> {
    g: &'a Graph,
    s: &'a C5Structure,
    omega: usize,
    a_cl: [Vec<VertexSet>; 5],
    x_cl: [Vec<VertexSet>; 5],
    t_comp: Vec<VertexSet>,
    /// Some vertex of `Z` sees the whole base C5.
    hub: bool,
    /// No induced 5-wheel anywhere in the graph.
    wheel_free: bool,
}

impl Ctx<'_> {
    fn a(&self, i: i32) -> VertexSet {
        self.s.ai(i)
    }
    fn x(&self, i: i32) -> VertexSet {
        self.s.xi(i)
    }
    fn y(&self, i: i32) -> VertexSet {
        self.s.yi(i)
    }
    fn acl(&self, i: i32) -> &[VertexSet] {
        &self.a_cl[super::slot(i)]
    }
    fn xcl(&self, i: i32) -> &[VertexSet] {
        &self.x_cl[super::slot(i)]
    }
    fn n(&self, v: usize) -> VertexSet {
        self.g.neighbors(v)
    }
    fn complete(&self, x: VertexSet, y: VertexSet) -> bool {
        self.g.is_complete_to(x, y)
    }
    fn anti(&self, x: VertexSet, y: VertexSet) -> bool {
        self.g.is_anticomplete_to(x, y)
    }
    /// A non-edge between `x` and `y`.
    fn non_edge(&self, x: VertexSet, y: VertexSet) -> Vec<usize> {
        for u in x {
            if let Some(v) = (y - self.n(u)).first() {
                return vec![u, v];
            }
        }
        Vec::new()
    }
    /// An edge between `x` and `y`.
    fn edge(&self, x: VertexSet, y: VertexSet) -> Vec<usize> {
        for u in x {
            if let Some(v) = (y & self.n(u)).first() {
                return vec![u, v];
            }
        }
        Vec::new()
    }
    fn nbhd(&self, s: VertexSet) -> VertexSet {
        self.g.neighborhood_of(s)
    }
}

type CheckFn = fn(&Ctx) -> Acc;

const I5: std::ops::RangeInclusive<i32> = 1..=5;

fn set_to_vec(s: VertexSet) -> Vec<usize> {
    s.to_vec()
}

// ---- partition-level facts, any in-class atom with a C5 ----

fn partition(c: &Ctx) -> Acc {
    let mut acc = Acc::default();
    let ok = c.s.check(c.g);
    acc.check(ok.is_ok(), Vec::new);
    acc
}

fn a_p3_free(c: &Ctx) -> Acc {
    let mut acc = Acc::default();
    for i in I5 {
        let w = find_p3(c.g, c.a(i));
        acc.check(w.is_none(), || w.map(|w| w.to_vec()).unwrap_or_default());
    }
    acc
}

fn x_complete_to_own_a(c: &Ctx) -> Acc {
    let mut acc = Acc::default();
    for i in I5 {
        for x in c.x(i) {
            for p in c.a(i) {
                acc.check(c.g.adjacent(x, p), || vec![x, p]);
            }
        }
    }
    acc
}

fn x_all_or_nothing_on_far_a_cliques(c: &Ctx) -> Acc {
    let mut acc = Acc::default();
    for i in I5 {
        for j in [i + 2, i - 2] {
            for &k in c.acl(j) {
                for x in c.x(i) {
                    let hit = c.n(x) & k;
                    if hit.is_empty() {
                        continue;
                    }
                    acc.check(hit == k, || vec![x, hit.first().unwrap(), (k - hit).first().unwrap()]);
                }
            }
        }
    }
    acc
}

fn x_good_wrt_far_a(c: &Ctx) -> Acc {
    let mut acc = Acc::default();
    for i in I5 {
        for x in c.x(i) {
            for j in [i + 2, i - 2] {
                let nx = c.n(x);
                let cl = c.acl(j);
                let ok = cl.iter().all(|k| k.is_subset(nx) || k.is_disjoint(nx)) && cl.iter().any(|k| k.is_subset(nx));
                acc.check(ok, || vec![x]);
            }
        }
    }
    acc
}

fn x_complete_to_one_far_a(c: &Ctx) -> Acc {
    let mut acc = Acc::default();
    for i in I5 {
        for x in c.x(i) {
            let nx = c.n(x);
            let ok = c.a(i + 2).is_subset(nx) || c.a(i - 2).is_subset(nx);
            acc.check(ok, || vec![x, (c.a(i + 2) - nx).first().unwrap(), (c.a(i - 2) - nx).first().unwrap()]);
        }
    }
    acc
}

fn x_nonadjacent_share_far_a(c: &Ctx) -> Acc {
    let mut acc = Acc::default();
    for i in I5 {
        for x in c.x(i) {
            for x2 in c.x(i) - c.n(x) {
                if x2 <= x {
                    continue;
                }
                let common = c.n(x) & c.n(x2);
                let ok = common.intersects(c.a(i + 2)) && common.intersects(c.a(i - 2));
                acc.check(ok, || vec![x, x2]);
            }
        }
    }
    acc
}

fn x_nonadjacent_complete_pair_forces_clique(c: &Ctx) -> Acc {
    let mut acc = Acc::default();
    for i in I5 {
        let far = c.a(i + 2) | c.a(i - 2);
        let full: VertexSet = c.x(i).iter().filter(|&x| far.is_subset(c.n(x))).collect();
        let has_pair = full.iter().any(|x| (full - c.n(x)).without(x).intersects(full));
        if has_pair {
            acc.check(c.g.is_clique(far), || {
                let u = far.iter().find(|&u| !(far - c.n(u)).without(u).is_empty()).unwrap();
                vec![u, (far - c.n(u)).without(u).first().unwrap()]
            });
        }
    }
    acc
}

fn x_t_neighbor_complete_to_far_a(c: &Ctx) -> Acc {
    let mut acc = Acc::default();
    for i in I5 {
        let far = c.a(i + 2) | c.a(i - 2);
        for x in c.x(i) {
            if c.n(x).intersects(c.s.t) {
                acc.check(far.is_subset(c.n(x)), || vec![x, (far - c.n(x)).first().unwrap()]);
            }
        }
    }
    acc
}

fn x_p3_free(c: &Ctx) -> Acc {
    let mut acc = Acc::default();
    for i in I5 {
        if c.x(i).len() >= 2 {
            let w = find_p3(c.g, c.x(i));
            acc.check(w.is_none(), || w.map(|w| w.to_vec()).unwrap_or_default());
        }
    }
    acc
}

fn x_complete_to_neighbor_x(c: &Ctx) -> Acc {
    let mut acc = Acc::default();
    for i in I5 {
        if !c.x(i).is_empty() && !c.x(i + 1).is_empty() {
            acc.check(c.complete(c.x(i), c.x(i + 1)), || c.non_edge(c.x(i), c.x(i + 1)));
        }
    }
    acc
}

fn x_clique_complete_to_met_a_clique(c: &Ctx) -> Acc {
    let mut acc = Acc::default();
    for i in I5 {
        // (a) uses X_{i+2} and A_{i-2}; (b) uses X_{i-2} and A_{i+2}
        for (xo, ao) in [(i + 2, i - 2), (i - 2, i + 2)] {
            for &k in c.xcl(i) {
                let Some(x) = c.x(xo).iter().find(|&x| c.n(x).is_disjoint(k)) else { continue };
                for &q in c.acl(ao) {
                    if c.nbhd(k).intersects(q) {
                        acc.check(c.complete(k, q), || {
                            let mut w = vec![x];
                            w.extend(c.non_edge(k, q));
                            w
                        });
                    }
                }
            }
        }
    }
    acc
}

/// Pairs `(K, K')` of an `X_i`-clique complete to an `X_{i+2}`-clique.
fn complete_pairs<'a>(c: &'a Ctx, i: i32) -> impl Iterator<Item = (VertexSet, VertexSet)> + 'a {
    c.xcl(i).iter().flat_map(move |&k| {
        c.xcl(i + 2).iter().filter(move |&&k2| c.complete(k, k2)).map(move |&k2| (k, k2))
    })
}

fn complete_x_pair_isolated(c: &Ctx) -> Acc {
    let mut acc = Acc::default();
    for i in I5 {
        for (k, k2) in complete_pairs(c, i) {
            let rest = c.x(i) - k;
            let rest2 = c.x(i + 2) - k2;
            acc.check(c.anti(k, rest2), || c.edge(k, rest2));
            acc.check(c.anti(k2, rest), || c.edge(k2, rest));
            acc.check(c.anti(rest, rest2), || c.edge(rest, rest2));
        }
    }
    acc
}

fn complete_x_pair_one_a_clique(c: &Ctx) -> Acc {
    let mut acc = Acc::default();
    for i in I5 {
        for (k, k2) in complete_pairs(c, i) {
            let n1 = c.acl(i + 2).iter().filter(|&&q| c.complete(k, q)).count();
            acc.check(n1 == 1, || set_to_vec(k));
            let n2 = c.acl(i).iter().filter(|&&q| c.complete(k2, q)).count();
            acc.check(n2 == 1, || set_to_vec(k2));
        }
    }
    acc
}

fn complete_x_pair_far_anticomplete(c: &Ctx) -> Acc {
    let mut acc = Acc::default();
    for i in I5 {
        for (k, k2) in complete_pairs(c, i) {
            acc.check(c.anti(k, c.x(i - 2)), || c.edge(k, c.x(i - 2)));
            acc.check(c.anti(k2, c.x(i - 1)), || c.edge(k2, c.x(i - 1)));
        }
    }
    acc
}

fn adjacent_x_cliques_meeting_a_clique(c: &Ctx) -> Acc {
    let mut acc = Acc::default();
    for i in I5 {
        for &k in c.xcl(i) {
            for &k2 in c.xcl(i - 1) {
                for &q in c.acl(i + 2) {
                    if c.nbhd(k).intersects(q) && c.nbhd(k2).intersects(q) {
                        acc.check(c.complete(k | k2, q), || c.non_edge(k | k2, q));
                    }
                }
            }
        }
    }
    acc
}

fn w_pairs_not_extended(c: &Ctx, other: impl Fn(i32) -> i32) -> Acc {
    let mut acc = Acc::default();
    let ws = match super::w_sets(c.g, c.s, c.omega) {
        Ok(ws) => ws,
        Err(_) => {
            acc.check(false, Vec::new);
            return acc;
        }
    };
    for i in I5 {
        for w1 in &ws[super::slot(i)] {
            for w2 in &ws[super::slot(i + 1)] {
                for &d in c.acl(other(i)) {
                    let u = w1.x | w2.x | d;
                    acc.check(!c.g.is_clique(u), || set_to_vec(u));
                }
            }
        }
    }
    acc
}

fn w_pairs_not_extended_by_a_i_minus_2(c: &Ctx) -> Acc {
    w_pairs_not_extended(c, |i| i - 2)
}

fn w_pairs_not_extended_by_a_i_plus_2(c: &Ctx) -> Acc {
    w_pairs_not_extended(c, |i| i + 2)
}

fn all_or_nothing_on_t(c: &Ctx, set: VertexSet) -> Acc {
    let mut acc = Acc::default();
    for &q in &c.t_comp {
        for v in set {
            let hit = c.n(v) & q;
            acc.check(hit.is_empty() || hit == q, || vec![v, hit.first().unwrap(), (q - hit).first().unwrap()]);
        }
    }
    acc
}

fn x_all_or_nothing_on_t_components(c: &Ctx) -> Acc {
    all_or_nothing_on_t(c, c.s.x_all())
}

fn y_complete_to_nonclique_near_a(c: &Ctx) -> Acc {
    let mut acc = Acc::default();
    for i in I5 {
        for j in [i - 1, i + 1] {
            if !c.y(i).is_empty() && !c.g.is_clique(c.a(j)) {
                acc.check(c.complete(c.y(i), c.a(j)), || c.non_edge(c.y(i), c.a(j)));
            }
        }
    }
    acc
}

fn y_complete_to_one_near_a(c: &Ctx) -> Acc {
    let mut acc = Acc::default();
    for i in I5 {
        for y in c.y(i) {
            let ny = c.n(y);
            acc.check(c.a(i - 1).is_subset(ny) || c.a(i + 1).is_subset(ny), || vec![y]);
        }
    }
    acc
}

fn y_all_or_nothing_on_t_components(c: &Ctx) -> Acc {
    all_or_nothing_on_t(c, c.s.y_all())
}

fn t_p3_free_without_z(c: &Ctx) -> Acc {
    let mut acc = Acc::default();
    if c.s.z.is_empty() && !c.s.t.is_empty() {
        let w = find_p3(c.g, c.s.t);
        acc.check(w.is_none(), || w.map(|w| w.to_vec()).unwrap_or_default());
    }
    acc
}

/// Triples `(t, u, v, i)` with `t ∈ T`, `u ∈ X_i`, `v` in the listed sets, `ut ∈ E`, `uv ∉ E`.
fn t_x_triples(c: &Ctx) -> Vec<(usize, usize, usize, i32)> {
    let mut out = Vec::new();
    for i in I5 {
        let others = c.x(i - 2) | c.x(i + 2) | c.y(i) | c.y(i + 1) | c.y(i - 1) | c.s.z;
        for u in c.x(i) {
            for t in c.n(u) & c.s.t {
                for v in others - c.n(u) {
                    out.push((t, u, v, i));
                }
            }
        }
    }
    out
}

fn t_sees_nonneighbor_of_x(c: &Ctx) -> Acc {
    let mut acc = Acc::default();
    for (t, u, v, _) in t_x_triples(c) {
        acc.check(c.g.adjacent(t, v), || vec![t, u, v]);
    }
    acc
}

fn t_component_complete_to_x_clique(c: &Ctx) -> Acc {
    let mut acc = Acc::default();
    for (t, u, v, i) in t_x_triples(c) {
        let k = c.xcl(i).iter().copied().find(|k| k.contains(u)).unwrap_or(VertexSet::singleton(u));
        if c.n(v).is_disjoint(k) {
            let comp = c.g.component_containing(c.s.t, t);
            acc.check(c.complete(comp, k), || vec![t, u, v]);
        }
    }
    acc
}

// ---- with a hub: the base C5 is the rim of a 5-wheel ----

fn hub_z_one_a_clique(c: &Ctx) -> Acc {
    let mut acc = Acc::default();
    if !c.hub {
        return acc;
    }
    for z in c.s.z {
        for i in I5 {
            let hit = c.n(z) & c.a(i);
            let full = c.acl(i).iter().filter(|&&k| k.is_subset(hit)).count();
            acc.check(full == 1 && c.acl(i).iter().any(|&k| k == hit), || vec![z, c.s.vi(i)]);
        }
    }
    acc
}

fn hub_three_spaced_a_cliques(c: &Ctx) -> Acc {
    let mut acc = Acc::default();
    if c.hub {
        let ok = I5.into_iter().any(|j| [j, j - 2, j + 2].iter().all(|&k| c.g.is_clique(c.a(k))));
        acc.check(ok, Vec::new);
    }
    acc
}

fn hub_z_clique(c: &Ctx) -> Acc {
    let mut acc = Acc::default();
    if c.hub {
        acc.check(c.g.is_clique(c.s.z), || c.non_edge(c.s.z, c.s.z).into_iter().collect());
    }
    acc
}

/// The `A_i`-clique through `v_i`.
fn star(c: &Ctx, i: i32) -> VertexSet {
    c.acl(i).iter().copied().find(|k| k.contains(c.s.vi(i))).unwrap_or_default()
}

fn hub_a_star(c: &Ctx) -> Acc {
    let mut acc = Acc::default();
    if !c.hub {
        return acc;
    }
    for i in I5 {
        let ok = c.acl(i).iter().any(|&k| c.complete(c.s.z, k) && c.anti(c.s.z, c.a(i) - k));
        acc.check(ok, || vec![c.s.vi(i)]);
    }
    acc
}

fn hub_x_anticomplete_z(c: &Ctx) -> Acc {
    let mut acc = Acc::default();
    if c.hub && !c.s.x_all().is_empty() {
        acc.check(c.anti(c.s.x_all(), c.s.z), || c.edge(c.s.x_all(), c.s.z));
    }
    acc
}

fn hub_x_sees_far_a_star_only(c: &Ctx) -> Acc {
    let mut acc = Acc::default();
    if !c.hub {
        return acc;
    }
    for i in I5 {
        if c.x(i).is_empty() {
            continue;
        }
        for j in [i - 2, i + 2] {
            let st = star(c, j);
            acc.check(c.complete(c.x(i), st), || c.non_edge(c.x(i), st));
            acc.check(c.anti(c.x(i), c.a(j) - st), || c.edge(c.x(i), c.a(j) - st));
        }
    }
    acc
}

/// `hits` meets each maximum clique of the graph inside `within` at least twice.
fn meets_twice_inside(c: &Ctx, within: VertexSet, hits: VertexSet, acc: &mut Acc) {
    if omega_in(c.g, within) < c.omega {
        return;
    }
    for m in cliques_of_size_in(c.g, within, c.omega) {
        acc.check((m & hits).len() >= 2, || set_to_vec(m));
    }
}

fn hub_far_a_meets_max_cliques_twice(c: &Ctx) -> Acc {
    let mut acc = Acc::default();
    if !c.hub {
        return acc;
    }
    for i in I5 {
        let hits = r_set(c.g, c.a(i + 2)) | r_set(c.g, c.a(i - 2));
        meets_twice_inside(c, c.x(i) | c.a(i + 2) | c.a(i - 2), hits, &mut acc);
    }
    acc
}

fn hub_x_anticomplete_two_apart(c: &Ctx) -> Acc {
    let mut acc = Acc::default();
    if !c.hub {
        return acc;
    }
    for i in I5 {
        if !c.x(i).is_empty() && !c.x(i + 2).is_empty() {
            acc.check(c.anti(c.x(i), c.x(i + 2)), || c.edge(c.x(i), c.x(i + 2)));
        }
    }
    acc
}

fn hub_y_empty(c: &Ctx) -> Acc {
    let mut acc = Acc::default();
    if c.hub {
        acc.check(c.s.y_all().is_empty(), || set_to_vec(c.s.y_all()));
    }
    acc
}

fn hub_x_t_neighbor_far_a_cliques(c: &Ctx) -> Acc {
    let mut acc = Acc::default();
    if !c.hub {
        return acc;
    }
    for i in I5 {
        for x in c.x(i) {
            if c.n(x).intersects(c.s.t) {
                acc.check(c.g.is_clique(c.a(i - 2)) && c.g.is_clique(c.a(i + 2)), || vec![x]);
            }
        }
    }
    acc
}

fn hub_t_component_has_complete_x(c: &Ctx) -> Acc {
    let mut acc = Acc::default();
    if !c.hub {
        return acc;
    }
    for &q in &c.t_comp {
        let ok = I5.into_iter().any(|j| {
            let nx = c.nbhd(q) & c.x(j);
            !nx.is_empty() && c.complete(nx, q)
        });
        acc.check(ok, || set_to_vec(q));
    }
    acc
}

fn hub_z_complete_to_t(c: &Ctx) -> Acc {
    let mut acc = Acc::default();
    if c.hub && !c.s.t.is_empty() {
        acc.check(c.complete(c.s.z, c.s.t), || c.non_edge(c.s.z, c.s.t));
    }
    acc
}

fn hub_t_p3_free(c: &Ctx) -> Acc {
    let mut acc = Acc::default();
    if c.hub && !c.s.t.is_empty() {
        let w = find_p3(c.g, c.s.t);
        acc.check(w.is_none(), || w.map(|w| w.to_vec()).unwrap_or_default());
    }
    acc
}

// ---- no induced 5-wheel ----

fn wf_z_empty(c: &Ctx) -> Acc {
    let mut acc = Acc::default();
    if c.wheel_free {
        acc.check(c.s.z.is_empty(), || set_to_vec(c.s.z));
    }
    acc
}

fn wf_neighbor_x_with_common_far_vertex_clique(c: &Ctx) -> Acc {
    let mut acc = Acc::default();
    if !c.wheel_free {
        return acc;
    }
    for i in I5 {
        let u = c.x(i) | c.x(i + 1);
        if c.x(i).is_empty() || c.x(i + 1).is_empty() {
            continue;
        }
        if c.a(i - 2).iter().any(|p| u.is_subset(c.n(p))) {
            acc.check(c.g.is_clique(u), || set_to_vec(u));
        }
    }
    acc
}

fn wf_x_cliques_two_apart_homogeneous(c: &Ctx) -> Acc {
    let mut acc = Acc::default();
    if !c.wheel_free {
        return acc;
    }
    for i in I5 {
        for &k in c.xcl(i) {
            for &k2 in c.xcl(i + 2) {
                acc.check(c.complete(k, k2) || c.anti(k, k2), || set_to_vec(k | k2));
            }
        }
    }
    acc
}

fn wf_anticomplete_x_cliques_see_a(c: &Ctx) -> Acc {
    let mut acc = Acc::default();
    if !c.wheel_free {
        return acc;
    }
    for i in I5 {
        for &k in c.xcl(i) {
            for &k2 in c.xcl(i + 2) {
                if c.anti(k, k2) {
                    acc.check(c.complete(k, c.a(i + 2)) || c.complete(k2, c.a(i)), || set_to_vec(k | k2));
                }
            }
        }
    }
    acc
}

fn wf_middle_x_separates(c: &Ctx) -> Acc {
    let mut acc = Acc::default();
    if !c.wheel_free {
        return acc;
    }
    for i in I5 {
        if !c.x(i + 1).is_empty() && !c.x(i).is_empty() && !c.x(i + 2).is_empty() {
            acc.check(c.anti(c.x(i), c.x(i + 2)), || c.edge(c.x(i), c.x(i + 2)));
        }
    }
    acc
}

fn wf_t_not_on_three_consecutive_x(c: &Ctx) -> Acc {
    let mut acc = Acc::default();
    if !c.wheel_free {
        return acc;
    }
    for t in c.s.t {
        if c.n(t).intersects(c.s.x_all()) {
            let ok = I5.into_iter().all(|i| !(i..i + 3).all(|j| c.n(t).intersects(c.x(j))));
            acc.check(ok, || vec![t]);
        }
    }
    acc
}

fn wf_x_clique_missing_far_a_forces_clique(c: &Ctx) -> Acc {
    let mut acc = Acc::default();
    if !c.wheel_free {
        return acc;
    }
    // the hypothesis only grows with the clique, so whole X_i-cliques suffice
    for i in I5 {
        for (j, k) in [(i + 2, i - 2), (i - 2, i + 2)] {
            for &xs in c.xcl(i) {
                if c.a(j).iter().all(|a| !xs.is_subset(c.n(a))) {
                    acc.check(c.g.is_clique(c.a(k)), || set_to_vec(xs));
                }
            }
        }
    }
    acc
}

fn wf_far_a_max_clique_shape(c: &Ctx) -> Acc {
    let mut acc = Acc::default();
    if !c.wheel_free {
        return acc;
    }
    for i in I5 {
        if c.x(i).is_empty() {
            continue;
        }
        let h = c.x(i) | c.a(i + 2) | c.a(i - 2);
        let wh = omega_in(c.g, h);
        for m in cliques_of_size_in(c.g, h, wh) {
            for (j, k) in [(i + 2, i - 2), (i - 2, i + 2)] {
                if m.is_disjoint(c.a(j)) {
                    let ok = m.intersects(c.x(i)) && c.g.is_clique(c.a(k)) && (m & c.a(k)) == c.a(k);
                    acc.check(ok, || set_to_vec(m));
                }
            }
        }
    }
    acc
}

fn wf_y_all_or_nothing_on_far_a_cliques(c: &Ctx) -> Acc {
    let mut acc = Acc::default();
    if !c.wheel_free {
        return acc;
    }
    for i in I5 {
        for j in [i + 2, i - 2] {
            for &k in c.acl(j) {
                for y in c.y(i) {
                    let hit = c.n(y) & k;
                    if !hit.is_empty() {
                        acc.check(hit == k, || vec![y, (k - hit).first().unwrap()]);
                    }
                }
            }
        }
    }
    acc
}

fn wf_y_complete_to_one_far_a_clique(c: &Ctx) -> Acc {
    let mut acc = Acc::default();
    if !c.wheel_free {
        return acc;
    }
    for i in I5 {
        for j in [i + 2, i - 2] {
            for y in c.y(i) {
                let n = c.acl(j).iter().filter(|&&k| k.is_subset(c.n(y))).count();
                acc.check(n == 1, || vec![y]);
            }
        }
    }
    acc
}

fn wf_y_missing_near_a_sees_far_a(c: &Ctx) -> Acc {
    let mut acc = Acc::default();
    if !c.wheel_free {
        return acc;
    }
    for i in I5 {
        let far = c.a(i + 2) | c.a(i - 2);
        for y in c.y(i) {
            let ny = c.n(y);
            if !c.a(i - 1).is_subset(ny) || !c.a(i + 1).is_subset(ny) {
                acc.check(far.is_subset(ny) && c.g.is_clique(far), || vec![y]);
            }
        }
    }
    acc
}

fn wf_y_clique(c: &Ctx) -> Acc {
    let mut acc = Acc::default();
    if !c.wheel_free {
        return acc;
    }
    for i in I5 {
        if c.y(i).len() >= 2 {
            acc.check(c.g.is_clique(c.y(i)), || c.non_edge(c.y(i), c.y(i)));
        }
    }
    acc
}

fn wf_y_complete_to_neighbor_y(c: &Ctx) -> Acc {
    let mut acc = Acc::default();
    if !c.wheel_free {
        return acc;
    }
    for i in I5 {
        if !c.y(i).is_empty() && !c.y(i + 1).is_empty() {
            acc.check(c.complete(c.y(i), c.y(i + 1)), || c.non_edge(c.y(i), c.y(i + 1)));
        }
    }
    acc
}

fn wf_t_has_x_neighbor(c: &Ctx) -> Acc {
    let mut acc = Acc::default();
    if !c.wheel_free {
        return acc;
    }
    for t in c.s.t {
        acc.check(c.n(t).intersects(c.s.x_all()), || vec![t]);
    }
    acc
}

fn wf_consecutive_y_one_a_clique(c: &Ctx) -> Acc {
    let mut acc = Acc::default();
    if !c.wheel_free {
        return acc;
    }
    for i in I5 {
        let u = c.y(i) | c.y(i + 1);
        if !u.is_empty() {
            let n = c.acl(i - 2).iter().filter(|&&k| c.complete(u, k)).count();
            acc.check(n == 1, || set_to_vec(u));
        }
    }
    acc
}

fn wf_near_a_cliques_have_vertex_complete_to_y(c: &Ctx) -> Acc {
    let mut acc = Acc::default();
    if !c.wheel_free {
        return acc;
    }
    for i in I5 {
        if c.y(i).is_empty() {
            continue;
        }
        for j in [i - 1, i + 1] {
            for &k in c.acl(j) {
                acc.check(k.iter().any(|a| c.y(i).is_subset(c.n(a))), || set_to_vec(k));
            }
        }
    }
    acc
}

fn wf_y_anticomplete_to_flanking_x(c: &Ctx) -> Acc {
    let mut acc = Acc::default();
    if !c.wheel_free {
        return acc;
    }
    for i in I5 {
        let xs = c.x(i) | c.x(i + 2);
        if !c.y(i + 1).is_empty() && !xs.is_empty() {
            acc.check(c.anti(c.y(i + 1), xs), || c.edge(c.y(i + 1), xs));
        }
    }
    acc
}

fn wf_x_or_far_y_empty(c: &Ctx) -> Acc {
    let mut acc = Acc::default();
    if !c.wheel_free {
        return acc;
    }
    for i in I5 {
        if !c.x(i).is_empty() || !(c.y(i + 2) | c.y(i - 2)).is_empty() {
            acc.check(c.x(i).is_empty() || (c.y(i + 2) | c.y(i - 2)).is_empty(), || {
                vec![c.x(i).first().unwrap(), (c.y(i + 2) | c.y(i - 2)).first().unwrap()]
            });
        }
    }
    acc
}

fn wf_y_and_x_share_a_neighbors(c: &Ctx) -> Acc {
    let mut acc = Acc::default();
    if !c.wheel_free {
        return acc;
    }
    for i in I5 {
        for y in c.y(i + 1) {
            for (xi, js) in [(i, [i, i + 2, i - 2]), (i + 2, [i, i + 2, i - 1])] {
                for x in c.x(xi) {
                    let common = c.n(x) & c.n(y);
                    acc.check(js.iter().all(|&j| common.intersects(c.a(j))), || vec![y, x]);
                }
            }
        }
    }
    acc
}

fn wf_y_beside_nonempty_x_complete_to_a(c: &Ctx) -> Acc {
    let mut acc = Acc::default();
    if !c.wheel_free {
        return acc;
    }
    for i in I5 {
        let ys = c.y(i + 1) | c.y(i - 1);
        if !c.x(i).is_empty() && !ys.is_empty() {
            acc.check(c.complete(ys, c.a(i)), || c.non_edge(ys, c.a(i)));
        }
    }
    acc
}

fn wf_y_anticomplete_two_apart_given_x(c: &Ctx) -> Acc {
    let mut acc = Acc::default();
    if !c.wheel_free || c.s.x_all().is_empty() {
        return acc;
    }
    for i in I5 {
        if !c.y(i).is_empty() && !c.y(i + 2).is_empty() {
            acc.check(c.anti(c.y(i), c.y(i + 2)), || c.edge(c.y(i), c.y(i + 2)));
        }
    }
    acc
}

fn wf_t_not_on_both_flanking_y(c: &Ctx) -> Acc {
    let mut acc = Acc::default();
    if !c.wheel_free || c.s.x_all().is_empty() {
        return acc;
    }
    for t in c.s.t {
        for i in I5 {
            let ok = !(c.n(t).intersects(c.y(i - 1)) && c.n(t).intersects(c.y(i + 1)));
            acc.check(ok, || vec![t]);
        }
    }
    acc
}

const CHECKS: &[(&str, &str, CheckFn)] = &[
    ("partition", "V = A ∪ X ∪ Y ∪ Z ∪ T with every set matching its definition and A maximal", partition),
    ("a_p3_free", "G[A_i] is P3-free", a_p3_free),
    ("x_complete_to_own_a", "X_i is complete to A_i", x_complete_to_own_a),
    ("x_all_or_nothing_on_far_a_cliques", "x ∈ X_i with a neighbor in an A_{i±2}-clique is complete to it", x_all_or_nothing_on_far_a_cliques),
    ("x_good_wrt_far_a", "each x ∈ X_i is good with respect to A_{i+2} and A_{i-2}", x_good_wrt_far_a),
    ("x_complete_to_one_far_a", "each x ∈ X_i is complete to A_{i+2} or to A_{i-2}", x_complete_to_one_far_a),
    ("x_nonadjacent_share_far_a", "nonadjacent x, x' ∈ X_i have common neighbors in A_{i+2} and in A_{i-2}", x_nonadjacent_share_far_a),
    ("x_nonadjacent_complete_pair_forces_clique", "two nonadjacent X_i vertices complete to A_{i+2} ∪ A_{i-2} make it a clique", x_nonadjacent_complete_pair_forces_clique),
    ("x_t_neighbor_complete_to_far_a", "x ∈ X_i with a neighbor in T is complete to A_{i-2} ∪ A_{i+2}", x_t_neighbor_complete_to_far_a),
    ("x_p3_free", "G[X_i] is P3-free", x_p3_free),
    ("x_complete_to_neighbor_x", "X_i is complete to X_{i+1} ∪ X_{i-1}", x_complete_to_neighbor_x),
    ("x_clique_complete_to_met_a_clique", "an X_i-clique with an anticomplete X_{i±2} vertex is complete to each A_{i∓2}-clique it meets", x_clique_complete_to_met_a_clique),
    ("complete_x_pair_isolated", "K complete to K' (X_i- and X_{i+2}-cliques): no other edges between X_i and X_{i+2} touch them", complete_x_pair_isolated),
    ("complete_x_pair_one_a_clique", "K complete to K': K sees exactly one A_{i+2}-clique fully, K' exactly one A_i-clique", complete_x_pair_one_a_clique),
    ("complete_x_pair_far_anticomplete", "K complete to K': K is anticomplete to X_{i-2}, K' to X_{i-1}", complete_x_pair_far_anticomplete),
    ("adjacent_x_cliques_meeting_a_clique", "X_i- and X_{i-1}-cliques meeting an A_{i+2}-clique are both complete to it", adjacent_x_cliques_meeting_a_clique),
    ("w_pairs_not_extended_by_a_i_minus_2", "members of 𝕎_i and 𝕎_{i+1} admit no A_{i-2}-clique D with K ∪ K' ∪ D a clique", w_pairs_not_extended_by_a_i_minus_2),
    ("w_pairs_not_extended_by_a_i_plus_2", "members of 𝕎_i and 𝕎_{i+1} admit no A_{i+2}-clique D with K ∪ K' ∪ D a clique", w_pairs_not_extended_by_a_i_plus_2),
    ("x_all_or_nothing_on_t_components", "each x ∈ X is complete or anticomplete to each component of G[T]", x_all_or_nothing_on_t_components),
    ("y_complete_to_nonclique_near_a", "Y_i is complete to A_{i±1} whenever that set is not a clique", y_complete_to_nonclique_near_a),
    ("y_complete_to_one_near_a", "each y ∈ Y_i is complete to A_{i-1} or to A_{i+1}", y_complete_to_one_near_a),
    ("y_all_or_nothing_on_t_components", "each y ∈ Y is complete or anticomplete to each component of G[T]", y_all_or_nothing_on_t_components),
    ("t_p3_free_without_z", "if Z is empty then G[T] is P3-free", t_p3_free_without_z),
    ("t_sees_nonneighbor_of_x", "t ∈ T, u ∈ X_i, v ∈ X_{i±2} ∪ Y_i ∪ Y_{i±1} ∪ Z with ut ∈ E, uv ∉ E: tv ∈ E", t_sees_nonneighbor_of_x),
    ("t_component_complete_to_x_clique", "same setting with v anticomplete to u's X_i-clique K: t's T-component is complete to K", t_component_complete_to_x_clique),
    ("hub_z_one_a_clique", "each z ∈ Z is complete to exactly one A_i-clique and sees nothing else of A_i", hub_z_one_a_clique),
    ("hub_three_spaced_a_cliques", "some A_j, A_{j-2}, A_{j+2} are all cliques", hub_three_spaced_a_cliques),
    ("hub_z_clique", "Z is a clique", hub_z_clique),
    ("hub_a_star", "Z is complete to one A_i-clique and anticomplete to the rest of A_i", hub_a_star),
    ("hub_x_anticomplete_z", "X is anticomplete to Z", hub_x_anticomplete_z),
    ("hub_x_sees_far_a_star_only", "X_i is complete to A*_{i±2} and anticomplete to A_{i±2} minus A*_{i±2}", hub_x_sees_far_a_star_only),
    ("hub_far_a_meets_max_cliques_twice", "R_{A_{i+2}} ∪ R_{A_{i-2}} meets each maximum clique inside X_i ∪ A_{i+2} ∪ A_{i-2} twice", hub_far_a_meets_max_cliques_twice),
    ("hub_x_anticomplete_two_apart", "X_i is anticomplete to X_{i+2} ∪ X_{i-2}", hub_x_anticomplete_two_apart),
    ("hub_y_empty", "Y is empty", hub_y_empty),
    ("hub_x_t_neighbor_far_a_cliques", "x ∈ X_i with a T-neighbor forces A_{i-2} and A_{i+2} to be cliques", hub_x_t_neighbor_far_a_cliques),
    ("hub_t_component_has_complete_x", "each T-component Q has some j with N(Q) ∩ X_j nonempty and complete to Q", hub_t_component_has_complete_x),
    ("hub_z_complete_to_t", "Z is complete to T", hub_z_complete_to_t),
    ("hub_t_p3_free", "G[T] is P3-free", hub_t_p3_free),
    ("wf_z_empty", "Z is empty", wf_z_empty),
    ("wf_neighbor_x_with_common_far_vertex_clique", "X_i, X_{i+1} nonempty with a common complete vertex in A_{i-2}: X_i ∪ X_{i+1} is a clique", wf_neighbor_x_with_common_far_vertex_clique),
    ("wf_x_cliques_two_apart_homogeneous", "an X_i-clique is complete or anticomplete to each X_{i+2}-clique", wf_x_cliques_two_apart_homogeneous),
    ("wf_anticomplete_x_cliques_see_a", "anticomplete X_i- and X_{i+2}-cliques K, K': K is complete to A_{i+2} or K' to A_i", wf_anticomplete_x_cliques_see_a),
    ("wf_middle_x_separates", "X_{i+1} nonempty: X_i is anticomplete to X_{i+2}", wf_middle_x_separates),
    ("wf_t_not_on_three_consecutive_x", "no t ∈ T has neighbors in three consecutive X_i", wf_t_not_on_three_consecutive_x),
    ("wf_x_clique_missing_far_a_forces_clique", "an X_i-clique with no common neighbor in A_{i±2} forces A_{i∓2} to be a clique", wf_x_clique_missing_far_a_forces_clique),
    ("wf_far_a_max_clique_shape", "a maximum clique M of G[X_i ∪ A_{i+2} ∪ A_{i-2}] missing A_j meets X_i and contains the clique A_k", wf_far_a_max_clique_shape),
    ("wf_y_all_or_nothing_on_far_a_cliques", "y ∈ Y_i with a neighbor in an A_{i±2}-clique is complete to it", wf_y_all_or_nothing_on_far_a_cliques),
    ("wf_y_complete_to_one_far_a_clique", "each y ∈ Y_i is complete to exactly one A_{i±2}-clique", wf_y_complete_to_one_far_a_clique),
    ("wf_y_missing_near_a_sees_far_a", "y ∈ Y_i not complete to A_{i-1} or A_{i+1} is complete to the clique A_{i+2} ∪ A_{i-2}", wf_y_missing_near_a_sees_far_a),
    ("wf_y_clique", "Y_i is a clique", wf_y_clique),
    ("wf_y_complete_to_neighbor_y", "Y_i is complete to Y_{i+1} ∪ Y_{i-1}", wf_y_complete_to_neighbor_y),
    ("wf_t_has_x_neighbor", "every t ∈ T has a neighbor in X", wf_t_has_x_neighbor),
    ("wf_consecutive_y_one_a_clique", "Y_i ∪ Y_{i+1} is complete to exactly one A_{i-2}-clique", wf_consecutive_y_one_a_clique),
    ("wf_near_a_cliques_have_vertex_complete_to_y", "each A_{i±1}-clique has a vertex complete to Y_i", wf_near_a_cliques_have_vertex_complete_to_y),
    ("wf_y_anticomplete_to_flanking_x", "Y_{i+1} is anticomplete to X_i ∪ X_{i+2}", wf_y_anticomplete_to_flanking_x),
    ("wf_x_or_far_y_empty", "one of X_i and Y_{i+2} ∪ Y_{i-2} is empty", wf_x_or_far_y_empty),
    ("wf_y_and_x_share_a_neighbors", "y ∈ Y_{i+1} and x ∈ X_i (X_{i+2}) share neighbors in A_i, A_{i+2}, A_{i-2} (A_i, A_{i+2}, A_{i-1})", wf_y_and_x_share_a_neighbors),
    ("wf_y_beside_nonempty_x_complete_to_a", "X_i nonempty: Y_{i+1} ∪ Y_{i-1} is complete to A_i", wf_y_beside_nonempty_x_complete_to_a),
    ("wf_y_anticomplete_two_apart_given_x", "X nonempty: Y_i is anticomplete to Y_{i+2} ∪ Y_{i-2}", wf_y_anticomplete_two_apart_given_x),
    ("wf_t_not_on_both_flanking_y", "X nonempty: no t ∈ T has neighbors in both Y_{i-1} and Y_{i+1}", wf_t_not_on_both_flanking_y),
];

/// Runs every check on `g` partitioned as `s`. Meant for in-class atoms,
/// where every check should pass.
pub fn assert_c5_propositions(g: &Graph, s: &C5Structure) -> PropositionReport {
    let hub = s.z.iter().any(|z| s.base.iter().all(|&v| g.adjacent(z, v)));
    let ctx = Ctx {
        g,
        s,
        omega: omega_in(g, g.vertices()),
        a_cl: std::array::from_fn(|k| g.components_of(s.a[k])),
        x_cl: std::array::from_fn(|k| g.components_of(s.x[k])),
        t_comp: g.components_of(s.t),
        hub,
        wheel_free: find_induced(g, Pattern::FiveWheel).is_none(),
    };
    let results = CHECKS
        .par_iter()
        .map(|&(id, statement, f)| {
            let acc = f(&ctx);
            let status = if acc.witness.is_some() {
                Status::Failed
            } else if acc.instances == 0 {
                Status::Vacuous
            } else {
                Status::Passed
            };
            PropositionResult { id, statement, status, instances: acc.instances, witness: acc.witness }
        })
        .collect();
    PropositionReport { results }
}

#[cfg(test)]
mod tests {
    use super::super::build_c5_structure;
    use super::*;

    fn c5_plus(nbrs: &[usize]) -> Graph {
        let mut e: Vec<(usize, usize)> = (0..5).map(|i| (i, (i + 1) % 5)).collect();
        e.extend(nbrs.iter().map(|&u| (u, 5)));
        Graph::from_edges(6, e).unwrap()
    }

    #[test]
    fn wheel_passes() {
        let g = Graph::wheel(5);
        let s = build_c5_structure(&g, Some(&[0, 1, 2, 3, 4])).unwrap();
        let r = assert_c5_propositions(&g, &s);
        assert!(r.all_passed(), "{:?}", r.failures().collect::<Vec<_>>());
        assert_eq!(r.get("hub_z_clique").unwrap().status, Status::Passed);
        assert_eq!(r.get("x_complete_to_own_a").unwrap().status, Status::Vacuous);
        assert_eq!(r.get("wf_z_empty").unwrap().status, Status::Vacuous);
    }

    #[test]
    fn x1_vertex() {
        let g = c5_plus(&[0, 2, 3]);
        let s = build_c5_structure(&g, Some(&[0, 1, 2, 3, 4])).unwrap();
        let r = assert_c5_propositions(&g, &s);
        assert!(r.all_passed());
        let x = r.get("x_complete_to_own_a").unwrap();
        assert_eq!((x.status, x.instances), (Status::Passed, 1));
    }

    #[test]
    fn moved_x_vertex_is_caught() {
        let g = c5_plus(&[0, 2, 3]);
        let mut s = build_c5_structure(&g, Some(&[0, 1, 2, 3, 4])).unwrap();
        s.x[1] = s.x[0];
        s.x[0] = VertexSet::EMPTY;
        let r = assert_c5_propositions(&g, &s);
        let f: Vec<_> = r.failures().map(|f| f.id).collect();
        assert!(f.contains(&"partition"));
        // X_2 must be complete to A_2 = {v_2}, and vertex 5 misses v_2
        assert_eq!(r.get("x_complete_to_own_a").unwrap().witness, Some(vec![5, 1]));
        assert!(r.reverify(&g, &s));
    }

    #[test]
    fn ids_are_unique() {
        let ids = proposition_ids();
        let set: std::collections::BTreeSet<_> = ids.iter().collect();
        assert_eq!(set.len(), ids.len());
    }
}
