//! Coloring with the ⌊3ω/2⌋ guarantee, on the tight examples.

use p5w4::color::color;
use p5w4::detect::chi_exact;
use p5w4::harness::gen::{gen_gstar, gen_hstar_blowup};
use p5w4::Graph;

fn main() -> p5w4::Result<()> {
    let cases = [
        ("K1", Graph::complete(1)),
        ("C5", Graph::cycle(5)),
        ("5-wheel", Graph::wheel(5)),
        ("C7 complement", Graph::cycle(7).complement()),
        ("H* doubled", gen_hstar_blowup(&[2; 9])?),
        ("G*", gen_gstar(1)?),
        ("G* with parts of size 2", gen_gstar(2)?),
    ];
    for (name, g) in cases {
        let r = color(&g)?;
        let chi = chi_exact(&g)?.count;
        println!("{name:>24}: n {:>2}  omega {:>2}  chi {:>2}  used {:>2}  bound {:>2}", g.n(), r.omega, chi, r.count, r.bound);
    }
    Ok(())
}
