//! Building graphs: named families, clique-blowups and set algebra.

use p5w4::{blowup, BlowupSpec, Graph, Part, VertexSet};

fn main() -> p5w4::Result<()> {
    let c5 = Graph::cycle(5);
    // one part per base vertex; parts must be P3-free
    let spec = BlowupSpec {
        base: c5.clone(),
        parts: vec![Part::Clique(2), Part::Clique(1), Part::Graph(Graph::empty(2)?), Part::Clique(1), Part::Clique(3)],
    };
    let b = blowup(&spec)?;
    println!("blowup of C5 has {} vertices, {} edges", b.graph.n(), b.graph.edge_count());
    for (v, part) in b.parts.iter().enumerate() {
        println!("  Q_{v} = {part:?}");
    }

    let w = Graph::wheel(5);
    let rim: VertexSet = (0..5).collect();
    println!("5-wheel: hub complete to rim? {}", w.is_complete_to(VertexSet::singleton(5), rim));
    let (sub, map) = w.induced_subgraph(rim)?;
    println!("rim induces {:?} via {map:?}", sub);
    Ok(())
}
