//! Atoms containing an induced 5-wheel.

use serde::Serialize;

use crate::c5::{C5Structure, Dihedral};
use crate::detect::omega;
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};

use super::kit::{cert, drive, Kit, Rejected, Rule};
use super::{NiceCertificate, Outcome};

#[derive(Clone, Debug, Serialize)]
pub struct WheelCaseWorkspace {
    pub relabel: Dihedral,
    pub case: &'static str,
    /// `A_i^*`, the `A_i`-clique that `Z` is complete to.
    pub a_star: [VertexSet; 5],
    pub l: VertexSet,
    pub l_prime: VertexSet,
    pub w_nonempty: [bool; 5],
    pub rejected: Vec<Rejected>,
}

fn t_empty(k: &Kit) -> Result<Option<Outcome>> {
    if !k.s.t.is_empty() || !k.a_is_clique(3) || !k.w_empty(5) {
        return Ok(None);
    }
    cert(k.ra(1) | k.ra(3) | k.rx(2), k.ra(2) | k.ra(4) | k.rx(3), k.ra(5) | k.rx(1) | k.rx(4))
}

fn three_spread(k: &Kit, j: i32) -> bool {
    [j, j + 2, j - 2].iter().all(|&i| !k.x(i).is_empty())
}

fn zt_maximum(k: &Kit) -> bool {
    k.t_cliques.iter().any(|&c| k.is_max(k.s.z | c))
}

fn case1_spread(k: &Kit) -> Result<Option<Outcome>> {
    if k.s.t.is_empty() || !three_spread(k, 1) || zt_maximum(k) {
        return Ok(None);
    }
    let c = (1..=5).find(|&i| !k.w_empty(i)).unwrap_or(1);
    cert(
        k.ra(c) | k.ra(c + 2) | k.rt(),
        k.ra(c + 1) | k.ra(c - 2) | k.rx(c + 2),
        k.ra(c - 1) | k.rx(c) | k.rx(c - 2),
    )
}

fn case1_zt(k: &Kit) -> Result<Option<Outcome>> {
    if k.s.t.is_empty() || !three_spread(k, 1) || !zt_maximum(k) {
        return Ok(None);
    }
    cert(k.ra(1) | k.ra(3), k.ra(2) | k.ra(5) | k.l, k.ra(4) | k.lp)
}

/// `X` lives in `X_1`, or in `X_5 ∪ X_1 ∪ X_2` with `X_5` and `X_1 ∪ X_2` both nonempty.
fn case2_shape(k: &Kit) -> bool {
    if k.s.t.is_empty() || (1..=5).any(|j| three_spread(k, j)) || !k.a_is_clique(3) {
        return false;
    }
    let x = k.s.x_all();
    let only_x1 = !k.x(1).is_empty() && x == k.x(1);
    let fan = k.x(5) | k.x(1) | k.x(2);
    only_x1 || (!k.x(5).is_empty() && !(k.x(1) | k.x(2)).is_empty() && x == fan)
}

fn case2_w1(k: &Kit) -> Result<Option<Outcome>> {
    if !case2_shape(k) || k.w_empty(1) {
        return Ok(None);
    }
    cert(k.ra(2) | k.ra(5) | k.rx(1), k.ra(1) | k.ra(4) | k.l, k.ra(3) | k.lp)
}

fn case2(k: &Kit) -> Result<Option<Outcome>> {
    if !case2_shape(k) || !k.w_empty(1) {
        return Ok(None);
    }
    cert(k.ra(1) | k.rx(2) | k.rx(5), k.ra(2) | k.ra(4) | k.l, k.ra(3) | k.ra(5) | k.lp)
}

const RULES: &[Rule] = &[
    ("t_empty", t_empty),
    ("case1_spread", case1_spread),
    ("case1_zt_maximum", case1_zt),
    ("case2_w1", case2_w1),
    ("case2", case2),
];

/// `s` must be built around the rim of an induced 5-wheel, so its hub lies in `Z`.
pub fn certify_5wheel_case(g: &Graph, s: &C5Structure) -> Result<(NiceCertificate, WheelCaseWorkspace)> {
    let facts = [
        (!s.z.is_empty(), "Z is empty"),
        (g.is_clique(s.z), "Z is not a clique"),
        (s.y_all().is_empty(), "Y is not empty"),
    ];
    if let Some((_, msg)) = facts.iter().find(|(ok, _)| !ok) {
        return Err(Error::bug("certify_5wheel_case", *msg, serde_json::to_value(s)?));
    }
    let w = omega(g)?;
    let mut rejected = Vec::new();
    match drive(g, s, w, RULES, &mut rejected)? {
        Some(found) => {
            let k = &found.kit;
            let a_star = std::array::from_fn(|i| k.a_clique_complete_to(i as i32 + 1, k.s.z).unwrap_or_default());
            let ws = WheelCaseWorkspace {
                relabel: found.relabel,
                case: found.case,
                a_star,
                l: k.l,
                l_prime: k.lp,
                w_nonempty: std::array::from_fn(|i| !k.w[i].is_empty()),
                rejected,
            };
            match found.outcome {
                Outcome::Nice(c) => Ok((c, ws)),
                Outcome::QuasiLine(_) => unreachable!("wheel rules only emit nice certificates"),
            }
        }
        None => Err(Error::bug(
            "certify_5wheel_case",
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
    use crate::nice::verify_nice;

    #[test]
    fn wheel_itself() {
        let g = Graph::wheel(5);
        let s = build_c5_structure(&g, Some(&[0, 1, 2, 3, 4])).unwrap();
        let (c, ws) = certify_5wheel_case(&g, &s).unwrap();
        assert_eq!(ws.case, "t_empty");
        assert_eq!(omega_in(&g, g.vertices() - c.union()), 1);
    }

    #[test]
    fn doubled_wheel() {
        let b = blowup(&BlowupSpec::uniform(Graph::wheel(5), 2)).unwrap();
        let g = b.graph;
        let rim: Vec<usize> = (0..5).map(|p| b.parts[p].first().unwrap()).collect();
        let s = build_c5_structure(&g, Some(&rim)).unwrap();
        let (c, _) = certify_5wheel_case(&g, &s).unwrap();
        let v = verify_nice(&g, &c).unwrap();
        assert_eq!(v.omega_before, 6);
        assert!(v.omega_after <= 4);
    }

    #[test]
    fn rejects_wheel_free_structure() {
        let g = Graph::cycle(5);
        let s = build_c5_structure(&g, None).unwrap();
        assert!(matches!(certify_5wheel_case(&g, &s), Err(Error::BugTrap(_))));
    }
}
