//! Reading and writing DIMACS and edge-list files.

use p5w4::harness::io::{parse, read_graph, write, Format};
use p5w4::Graph;

fn main() -> p5w4::Result<()> {
    let g = Graph::wheel(5);
    for f in [Format::Dimacs, Format::EdgeList] {
        let text = write(&g, f);
        println!("{f:?}:\n{text}");
        assert_eq!(parse(&text, f)?, g);
    }

    let dir = std::env::temp_dir().join("p5w4-example");
    std::fs::create_dir_all(&dir)?;
    let path = dir.join("w5.col");
    std::fs::write(&path, write(&g, Format::Dimacs))?;
    println!("read back from {}: {:?}", path.display(), read_graph(&path)?);
    Ok(())
}
