//! Clique-cutset decomposition: two C5s glued along an edge split into two atoms.

use p5w4::decompose::{atom_tree, find_clique_cutset};
use p5w4::Graph;

fn main() -> p5w4::Result<()> {
    // C5 on 0..5 and C5 on {0, 1, 5, 6, 7}, sharing the edge 0-1
    let g = Graph::from_edges(8, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0), (1, 5), (5, 6), (6, 7), (7, 0)])?;
    let split = find_clique_cutset(&g)?.expect("the shared edge separates");
    println!("cutset Q = {:?}, sides {:?} / {:?}", split.q, split.v1, split.v2);

    let tree = atom_tree(&g)?;
    for (atom, map) in tree.leaves() {
        println!("atom on {map:?}: {} vertices, {} edges", atom.n(), atom.edge_count());
    }
    assert_eq!(tree.reassemble(g.n())?, g);
    println!("leaves reassemble to the input");
    Ok(())
}
