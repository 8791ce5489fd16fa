//! The audit record: serialize it, read it back, and re-check every claim.

use p5w4::color::{color, Audit};
use p5w4::detect::Limits;
use p5w4::harness::gen::gen_hstar_blowup;

fn main() -> p5w4::Result<()> {
    let g = gen_hstar_blowup(&[1, 2, 1, 1, 2, 1, 1, 1, 1])?;
    let r = color(&g)?;
    let text = serde_json::to_string_pretty(&r.audit)?;
    println!("audit: {} bytes, {} atoms, {} nice levels", text.len(), r.audit.classifications.len(), r.audit.certificates.len());

    let back: Audit = serde_json::from_str(&text)?;
    for c in back.replay(&g, &Limits::default())? {
        println!("  {:<16} {}", c.name, if c.passed { "ok" } else { &c.detail });
    }

    // a tampered coloring is caught
    let mut bad = back.clone();
    bad.coloring.colors[0] = bad.coloring.colors[1];
    let failed: Vec<_> = bad.replay(&g, &Limits::default())?.into_iter().filter(|c| !c.passed).map(|c| c.name).collect();
    println!("after tampering, failing checks: {failed:?}");
    Ok(())
}
