//! Wheel-free atoms containing an induced C5 (so `Z = ∅`).

use serde::Serialize;

use crate::c5::{C5Structure, Dihedral};
use crate::detect::{is_3k1_free, omega};
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};

use super::kit::{cert, drive, Kit, Rejected, Rule};
use super::three_k1::certify_3k1_case;
use super::Outcome;

#[derive(Clone, Debug, Serialize)]
pub struct WheelFreeWorkspace {
    pub relabel: Dihedral,
    pub case: &'static str,
    /// `B_i`: the `A_i`-clique that `Y_{i+2} ∪ Y_{i+3}` is complete to, when that union is nonempty.
    pub b: [Option<VertexSet>; 5],
    /// `𝔸_1..𝔸_5`.
    pub aa: [VertexSet; 5],
    pub l: VertexSet,
    pub l_prime: VertexSet,
    pub w_nonempty: [bool; 5],
    /// Indices `i` with `X_i` nonempty.
    pub j: Vec<i32>,
    pub rejected: Vec<Rejected>,
}

fn b_clique(k: &Kit, i: i32) -> Option<VertexSet> {
    let yy = k.y(i + 2) | k.y(i + 3);
    if yy.is_empty() {
        return None;
    }
    k.a_clique_complete_to(i, yy)
}

fn x_only(k: &Kit) -> bool {
    !k.s.x_all().is_empty() && k.s.y_all().is_empty()
}

fn y_only(k: &Kit) -> bool {
    k.s.x_all().is_empty() && !k.s.y_all().is_empty()
}

fn mixed(k: &Kit) -> bool {
    !k.s.x_all().is_empty() && !k.s.y_all().is_empty()
}

fn xy_empty(k: &Kit) -> Result<Option<Outcome>> {
    if !(k.s.x_all() | k.s.y_all()).is_empty() {
        return Ok(None);
    }
    cert(k.ra(1) | k.ra(3), k.ra(2) | k.ra(4), k.ra(5))
}

/// A maximum clique of `G[X_1 ∪ A_3 ∪ A_4]` missing `A_4`.
fn x_lopsided(k: &Kit) -> Result<Option<Outcome>> {
    if !x_only(k) || k.x(1).is_empty() || crate::detect::omega_in(k.g, k.x(1) | k.a(3)) != k.omega {
        return Ok(None);
    }
    cert(k.ra(2) | k.ra(5) | k.rx(1), k.ra(1) | k.ra(3) | k.rx(2) | k.l, k.ra(4) | k.lp)
}

/// `X_1` not anticomplete to `X_3`: the cliques `Q_1`, `Q_3` of the least
/// such edge, and `A_1^*`, `A_3^*`.
struct Cross {
    q1: VertexSet,
    q3: VertexSet,
    a1: VertexSet,
    a3: VertexSet,
}

fn cross(k: &Kit) -> Option<Cross> {
    if !x_only(k) {
        return None;
    }
    let (x1, x3) = k.x(1).iter().find_map(|u| (k.g.neighbors(u) & k.x(3)).first().map(|v| (u, v)))?;
    let q1 = k.g.component_containing(k.x(1), x1);
    let q3 = k.g.component_containing(k.x(3), x3);
    let a1 = k.a_clique_complete_to(1, q3)?;
    let a3 = k.a_clique_complete_to(3, q1)?;
    Some(Cross { q1, q3, a1, a3 })
}

fn graded(g: &Graph, q: VertexSet, cliques: &[VertexSet]) -> bool {
    cliques.iter().all(|&c| g.is_complete_to(q, c) || g.is_anticomplete_to(q, c))
}

/// The `T = ∅` sub-cases share the gradedness assumption on `Q_1`, `Q_3`.
fn cross_t_empty(k: &Kit) -> Option<Cross> {
    let c = cross(k)?;
    let ok = k.s.t.is_empty()
        && graded(k.g, c.q1, &k.cliques(k.a(4)))
        && graded(k.g, c.q3, &k.cliques(k.a(5)));
    ok.then_some(c)
}

fn a2_heavy(k: &Kit, c: &Cross) -> bool {
    k.cliques(k.a(2)).iter().any(|&d| k.is_max(c.a1 | d) || k.is_max(c.a3 | d))
}

fn cross_b1(k: &Kit) -> Result<Option<Outcome>> {
    let Some(c) = cross_t_empty(k) else { return Ok(None) };
    if !k.cliques(k.a(2)).iter().any(|&d| k.is_max(c.a1 | d)) {
        return Ok(None);
    }
    cert(k.ra(2) | k.r(k.x(1) - c.q1) | k.rx(3), k.ra(3) | k.ra(5) | k.rx(4), k.ra(1) | k.ra(4) | k.rx(5))
}

fn cross_w1_misses(k: &Kit, c: &Cross) -> bool {
    !a2_heavy(k, c) && k.w[0].iter().all(|w| w.a.is_disjoint(c.a1))
}

fn a5_heavy(k: &Kit, c: &Cross) -> bool {
    k.cliques(k.a(5)).iter().any(|&d| k.is_max(d | c.a1))
}

fn cross_b2(k: &Kit) -> Result<Option<Outcome>> {
    let Some(c) = cross_t_empty(k) else { return Ok(None) };
    if !cross_w1_misses(k, &c) || a5_heavy(k, &c) {
        return Ok(None);
    }
    cert(
        k.r(k.a(1) - c.a1) | k.ra(4) | k.r(c.q3) | k.rx(5),
        k.ra(2) | k.rx(1) | k.r(k.x(3) - c.q3),
        k.ra(3) | k.ra(5) | k.rx(4),
    )
}

fn cross_b3(k: &Kit) -> Result<Option<Outcome>> {
    let Some(c) = cross_t_empty(k) else { return Ok(None) };
    if !cross_w1_misses(k, &c) || !a5_heavy(k, &c) {
        return Ok(None);
    }
    cert(k.ra(2) | k.ra(4) | k.rx(3), k.ra(3) | k.ra(5) | k.rx(4), k.ra(1) | k.rx(5))
}

fn cross_b4(k: &Kit) -> Result<Option<Outcome>> {
    let Some(c) = cross(k) else { return Ok(None) };
    if !k.s.t.is_empty() || graded(k.g, c.q3, &k.cliques(k.a(5))) {
        return Ok(None);
    }
    cert(k.ra(5) | k.rx(1) | k.rx(4), k.ra(2) | k.ra(4) | k.rx(3), k.ra(1) | k.ra(3))
}

/// `T_1`, `T_2`: T-cliques complete to `X_1 ∪ X_4` (resp. `X_3 ∪ X_5`) and
/// anticomplete to the other pair.
fn t_split(k: &Kit) -> ((VertexSet, VertexSet), (VertexSet, VertexSet)) {
    let side = |near: VertexSet, far: VertexSet| {
        k.l_where(|c| k.g.is_complete_to(c, near) && k.g.is_anticomplete_to(c, far))
    };
    let p = k.x(1) | k.x(4);
    let q = k.x(3) | k.x(5);
    (side(p, q), side(q, p))
}

fn cross_b5(k: &Kit, w_empty: i32) -> Result<Option<Outcome>> {
    let Some(_) = cross(k) else { return Ok(None) };
    if k.s.t.is_empty() || k.x(4).is_empty() || k.x(5).is_empty() || !k.w_empty(w_empty) {
        return Ok(None);
    }
    let ((l1, lp1), (l2, lp2)) = t_split(k);
    if w_empty == 5 {
        cert(
            k.ra(5) | k.rx(1) | k.rx(4) | l2,
            k.ra(2) | k.ra(4) | k.rx(3) | l1,
            k.ra(1) | k.ra(3) | lp2,
        )
    } else {
        cert(
            k.ra(4) | k.rx(3) | k.rx(5) | l1,
            k.ra(2) | k.ra(5) | k.rx(1) | l2,
            k.ra(1) | k.ra(3) | lp1,
        )
    }
}

fn cross_b5_w5(k: &Kit) -> Result<Option<Outcome>> {
    cross_b5(k, 5)
}

fn cross_b5_w4(k: &Kit) -> Result<Option<Outcome>> {
    cross_b5(k, 4)
}

fn cross_b6(k: &Kit) -> Result<Option<Outcome>> {
    let Some(_) = cross(k) else { return Ok(None) };
    let hyp = !k.s.t.is_empty()
        && k.x(5).is_empty()
        && !k.g.is_anticomplete_to(k.x(1), k.x(4))
        && k.g.is_complete_to(k.s.t, k.x(3));
    if !hyp {
        return Ok(None);
    }
    cert(k.ra(2) | k.ra(5) | k.rx(1), k.ra(4) | k.rx(3), k.ra(1) | k.ra(3) | k.rt())
}

fn cross_b7(k: &Kit) -> Result<Option<Outcome>> {
    let Some(_) = cross(k) else { return Ok(None) };
    if k.s.t.is_empty() || !k.x(5).is_empty() || !k.g.is_anticomplete_to(k.x(1), k.x(4)) {
        return Ok(None);
    }
    cert(k.ra(5) | k.rx(1) | k.rx(4), k.ra(2) | k.ra(4) | k.rx(3), k.ra(1) | k.ra(3) | k.rt())
}

fn x_single(k: &Kit) -> Result<Option<Outcome>> {
    if !x_only(k) || k.x(1).is_empty() || k.s.x_all() != k.x(1) {
        return Ok(None);
    }
    cert(k.rx(1) | k.ra(2) | k.ra(5), k.ra(1) | k.ra(3) | k.l, k.ra(4) | k.lp)
}

/// `ℓ = 1`: `𝕎_1 = ∅`, and with `T ≠ ∅` also `X_1 = ∅` and every T-clique
/// complete to `X_2 ∪ X_4 ∪ X_5`, anticomplete to `X_3`.
fn x_free_index(k: &Kit) -> Result<Option<Outcome>> {
    if !x_only(k) || !k.w_empty(1) {
        return Ok(None);
    }
    if !k.s.t.is_empty() {
        let near = k.x(2) | k.x(4) | k.x(5);
        let fits = k.x(1).is_empty()
            && k.t_cliques.iter().all(|&c| k.g.is_complete_to(c, near) && k.g.is_anticomplete_to(c, k.x(3)));
        if !fits {
            return Ok(None);
        }
    }
    cert(
        k.rx(5) | k.ra(1) | k.rx(2),
        k.ra(2) | k.rx(3) | k.ra(4) | k.rt(),
        k.ra(3) | k.rx(4) | k.ra(5),
    )
}

fn y_three_k1(k: &Kit) -> Result<Option<Outcome>> {
    if !y_only(k) {
        return Ok(None);
    }
    let trigger = (1..=5).any(|i| {
        let (a, b) = (k.y(i), k.y(i + 2));
        !k.g.is_anticomplete_to(a, b)
            || (!a.is_empty()
                && !b.is_empty()
                && !k.g.is_complete_to(a, k.a(i + 1))
                && !k.g.is_complete_to(b, k.a(i + 1)))
    });
    if !trigger || !is_3k1_free(k.g) {
        return Ok(None);
    }
    certify_3k1_case(k.g).map(Some)
}

fn y_graded(k: &Kit) -> Result<Option<Outcome>> {
    if !y_only(k) {
        return Ok(None);
    }
    cert(k.aa(1) | k.aa(3), k.aa(2) | k.aa(4), k.aa(5))
}

/// Each index has `X_i` or `Y_i` empty; `Y_2 ≠ ∅`, and `X ⊆ X_1 ∪ X_3`.
fn mixed_case1_shape(k: &Kit) -> bool {
    mixed(k)
        && (1..=5).all(|i| k.x(i).is_empty() || k.y(i).is_empty())
        && !k.y(2).is_empty()
        && k.s.x_all() == k.x(1) | k.x(3)
}

fn mixed_case1_t_empty(k: &Kit) -> Result<Option<Outcome>> {
    if !mixed_case1_shape(k) || !k.s.t.is_empty() || k.x(1).is_empty() {
        return Ok(None);
    }
    cert(k.ra(2) | k.ra(5) | k.rx(1), k.ra(1) | k.aa(3), k.aa(4) | k.rx(3))
}

fn mixed_case1(k: &Kit) -> Result<Option<Outcome>> {
    if !mixed_case1_shape(k) || k.s.t.is_empty() || !k.a_is_clique(5) {
        return Ok(None);
    }
    let Some(b4) = b_clique(k, 4) else { return Ok(None) };
    cert(
        k.ra(2) | k.ra(5) | k.rx(1),
        k.ra(1) | k.aa(3) | k.rt(),
        k.r(k.a(4) - b4) | k.rx(3) | k.ry(2),
    )
}

fn mixed_case2_narrow(k: &Kit) -> Result<Option<Outcome>> {
    if !mixed(k) || k.x(1).is_empty() || k.y(1).is_empty() || !(k.x(2) | k.x(5)).is_empty() {
        return Ok(None);
    }
    cert(k.aa(2) | k.aa(5) | k.rx(1), k.aa(1) | k.aa(4) | k.l, k.aa(3) | k.lp)
}

fn mixed_case2_wide(k: &Kit) -> Result<Option<Outcome>> {
    if !mixed(k) || k.x(1).is_empty() || k.y(1).is_empty() || k.x(5).is_empty() {
        return Ok(None);
    }
    cert(k.aa(2) | k.aa(5) | k.rx(1) | k.l, k.ra(1) | k.ra(4) | k.rx(5), k.ra(3) | k.lp)
}

const RULES: &[Rule] = &[
    ("xy_empty", xy_empty),
    ("x_lopsided", x_lopsided),
    ("x_cross_a2_heavy", cross_b1),
    ("x_cross_light", cross_b2),
    ("x_cross_a5_heavy", cross_b3),
    ("x_cross_split_a5", cross_b4),
    ("x_cross_t_two_sided_w5", cross_b5_w5),
    ("x_cross_t_two_sided_w4", cross_b5_w4),
    ("x_cross_t_x1x4_edge", cross_b6),
    ("x_cross_t", cross_b7),
    ("x_single", x_single),
    ("x_free_index", x_free_index),
    ("y_three_k1", y_three_k1),
    ("y_graded", y_graded),
    ("mixed_case1_t_empty", mixed_case1_t_empty),
    ("mixed_case1", mixed_case1),
    ("mixed_case2_narrow", mixed_case2_narrow),
    ("mixed_case2_wide", mixed_case2_wide),
];

/// `g` must be wheel-free and `s` built around one of its induced C5s.
pub fn certify_wheelfree_c5_case(g: &Graph, s: &C5Structure) -> Result<(Outcome, WheelFreeWorkspace)> {
    if !s.z.is_empty() {
        return Err(Error::bug("certify_wheelfree_c5_case", "Z is not empty", serde_json::to_value(s)?));
    }
    let w = omega(g)?;
    let mut rejected = Vec::new();
    match drive(g, s, w, RULES, &mut rejected)? {
        Some(found) => {
            let k = &found.kit;
            let ws = WheelFreeWorkspace {
                relabel: found.relabel,
                case: found.case,
                b: std::array::from_fn(|i| b_clique(k, i as i32 + 1)),
                aa: std::array::from_fn(|i| k.aa(i as i32 + 1)),
                l: k.l,
                l_prime: k.lp,
                w_nonempty: std::array::from_fn(|i| !k.w[i].is_empty()),
                j: (1..=5).filter(|&i| !k.x(i).is_empty()).collect(),
                rejected,
            };
            Ok((found.outcome, ws))
        }
        None => Err(Error::bug(
            "certify_wheelfree_c5_case",
            "no case produced a valid certificate",
            serde_json::json!({ "structure": s, "omega": w, "rejected": rejected }),
        )),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::c5::build_c5_structure;
    use crate::detect::omega_in;
    use crate::graph::{blowup, BlowupSpec};
    use crate::nice::{verify_nice, NiceCertificate};

    fn set(v: &[usize]) -> VertexSet {
        v.iter().collect()
    }

    fn nice(o: Outcome) -> NiceCertificate {
        match o {
            Outcome::Nice(c) => c,
            other => panic!("expected nice, got {other:?}"),
        }
    }

    #[test]
    fn c5_itself() {
        let g = Graph::cycle(5);
        let s = build_c5_structure(&g, None).unwrap();
        let (o, ws) = certify_wheelfree_c5_case(&g, &s).unwrap();
        assert_eq!(ws.case, "xy_empty");
        let c = nice(o);
        assert_eq!(c, NiceCertificate::new(set(&[0, 2]), set(&[1, 3]), set(&[4])));
        assert_eq!(omega_in(&g, g.vertices() - c.union()), 0);
    }

    #[test]
    fn c5_with_x_vertex() {
        let mut e: Vec<(usize, usize)> = (0..5).map(|i| (i, (i + 1) % 5)).collect();
        e.extend([(0, 5), (2, 5), (3, 5)]);
        let g = Graph::from_edges(6, e).unwrap();
        let s = build_c5_structure(&g, Some(&[0, 1, 2, 3, 4])).unwrap();
        let (o, ws) = certify_wheelfree_c5_case(&g, &s).unwrap();
        assert!(ws.case.starts_with("x_"), "{}", ws.case);
        let v = verify_nice(&g, &nice(o)).unwrap();
        assert_eq!(v.omega_before, 3);
        assert!(v.is_valid() && v.omega_after <= 1);
    }

    #[test]
    fn doubled_c5() {
        let g = blowup(&BlowupSpec::uniform(Graph::cycle(5), 2)).unwrap().graph;
        let s = build_c5_structure(&g, None).unwrap();
        let (o, _) = certify_wheelfree_c5_case(&g, &s).unwrap();
        let v = verify_nice(&g, &nice(o)).unwrap();
        assert_eq!(v.omega_before, 4);
        assert!(v.omega_after <= 2);
    }
}
