use std::collections::BTreeMap;

use p5w4::c5::{assert_c5_propositions, build_c5_structure, proposition_ids, Status};
use p5w4::decompose::atom_tree;
use p5w4::detect::{find_induced, Pattern};
use p5w4::harness::gen::gen_mixed;

#[test]
fn propositions_hold_on_random_atoms() {
    let runs: u64 = std::env::var("P5W4_PROP_RUNS").ok().and_then(|s| s.parse().ok()).unwrap_or(300);
    let mut hits: BTreeMap<&str, usize> = BTreeMap::new();
    let mut atoms = 0;
    for seed in 0..runs {
        let n = 9 + (seed % 8) as usize;
        let Some(g) = gen_mixed(n, seed).filter(|g| g.is_connected()) else { continue };
        let tree = atom_tree(&g).unwrap();
        for (atom, _) in tree.leaves() {
            if find_induced(atom, Pattern::C5).is_none() {
                continue;
            }
            let s = build_c5_structure(atom, None).unwrap();
            let report = assert_c5_propositions(atom, &s);
            atoms += 1;
            for r in &report.results {
                assert_ne!(r.status, Status::Failed, "{} on {:?} with {:?}: witness {:?}", r.id, atom, s, r.witness);
                if r.status == Status::Passed {
                    *hits.entry(r.id).or_default() += 1;
                }
            }
        }
    }
    assert!(atoms > 0);
    let cold: Vec<_> = proposition_ids().into_iter().filter(|id| !hits.contains_key(id)).collect();
    eprintln!("atoms with C5: {atoms}; never exercised: {cold:?}");
}
