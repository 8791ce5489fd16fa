//! Induced-pattern search, class membership and the quasi-line test.

use p5w4::detect::{find_induced, in_class, is_perfect, is_quasi_line, Pattern};
use p5w4::harness::gen::gstar;
use p5w4::Graph;

fn main() -> p5w4::Result<()> {
    let graphs = [
        ("C5", Graph::cycle(5)),
        ("P6", Graph::path(6)),
        ("4-wheel", Graph::wheel(4)),
        ("C7 complement", Graph::cycle(7).complement()),
        ("G*", gstar()),
    ];
    for (name, g) in &graphs {
        println!("{name}: in class {}, perfect {}", in_class(g), is_perfect(g)?);
        for p in [Pattern::P5, Pattern::FourWheel, Pattern::FiveWheel, Pattern::C5, Pattern::C7Complement] {
            if let Some(w) = find_induced(g, p) {
                println!("  induced {p} on {w:?}");
            }
        }
    }

    let g = gstar();
    match is_quasi_line(&g) {
        Some(cert) => println!("G* is quasi-line; N(0) = {:?} ∪ {:?}", cert.cliques[0].0, cert.cliques[0].1),
        None => println!("G* is not quasi-line"),
    }
    Ok(())
}
