//! A small verification sweep: every connected labeled graph on 6 vertices,
//! plus a few random in-class draws.

use p5w4::detect::Limits;
use p5w4::harness::verify::{exhaustive_instances, random_instances, verify, Suite};

fn main() -> p5w4::Result<()> {
    let limits = Limits::default();
    let r = verify(exhaustive_instances(6)?, &Suite::ALL, &limits);
    println!("n = 6: {:?}", r.counts);
    println!("  atoms {:?}", r.atoms);

    let seed = p5w4::harness::default_seed();
    let r = verify(random_instances(200, 8, 12, seed), &Suite::ALL, &limits);
    println!("random (seed {seed}): {:?}", r.counts);
    println!("  nice atoms matched by exhaustive search: {}", r.coverage.get("oracle_agreement").unwrap_or(&0));
    println!("  clean: {}", r.is_clean());
    Ok(())
}
