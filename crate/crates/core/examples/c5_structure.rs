//! The partition around an induced C5 and the structural facts it satisfies.

use p5w4::c5::{assert_c5_propositions, build_c5_structure, Status};
use p5w4::decompose::atom_tree;
use p5w4::detect::{find_induced, Pattern};
use p5w4::harness::gen::{gen_structured, Base};
use p5w4::Graph;

/// The facts are stated for atoms, so take the first atom of a draw that has a C5.
fn c5_atom(seed: u64) -> Option<Graph> {
    let g = gen_structured(12, Base::C5Seeded, seed).filter(|g| g.is_connected())?;
    let tree = atom_tree(&g).ok()?;
    let found = tree.leaves().into_iter().map(|(a, _)| a.clone()).find(|a| find_induced(a, Pattern::C5).is_some());
    found.filter(|a| a.n() >= 9)
}

fn main() -> p5w4::Result<()> {
    let g = (0..).find_map(c5_atom).expect("some draw succeeds");
    println!("atom with {} vertices", g.n());
    let s = build_c5_structure(&g, None)?;
    for i in 1..=5 {
        println!("A{i} = {:?}  X{i} = {:?}  Y{i} = {:?}", s.ai(i), s.xi(i), s.yi(i));
    }
    println!("Z = {:?}  T = {:?}", s.z, s.t);

    let report = assert_c5_propositions(&g, &s);
    let count = |st| report.results.iter().filter(|r| r.status == st).count();
    println!("{} facts passed, {} vacuous, {} failed", count(Status::Passed), count(Status::Vacuous), count(Status::Failed));
    for r in report.results.iter().filter(|r| r.status == Status::Passed).take(5) {
        println!("  {}: {} ({} instances)", r.id, r.statement, r.instances);
    }
    Ok(())
}
