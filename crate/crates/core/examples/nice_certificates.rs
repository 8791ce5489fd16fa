//! Nice certificates from each builder, checked against the verifier and
//! the exhaustive search.

use p5w4::c5::build_c5_structure;
use p5w4::detect::{find_induced, Pattern};
use p5w4::nice::{
    build_c7_structure, certify_5wheel_case, certify_c7c_case, certify_wheelfree_c5_case, h_star,
    nice_search_fallback, verify_nice, NiceCertificate, Outcome,
};
use p5w4::{blowup, BlowupSpec, Graph};

fn show(name: &str, g: &Graph, c: &NiceCertificate) -> p5w4::Result<()> {
    let v = verify_nice(g, c)?;
    println!("{name}: S1 {:?} S2 {:?} S3 {:?}; omega {} -> {}, valid {}", c.s1, c.s2, c.s3, v.omega_before, v.omega_after, v.is_valid());
    let searched = nice_search_fallback(g)?.map(|c| verify_nice(g, &c).map(|v| v.is_valid())).transpose()?;
    println!("  exhaustive search agrees: {searched:?}");
    Ok(())
}

fn main() -> p5w4::Result<()> {
    let w = blowup(&BlowupSpec::cliques(Graph::wheel(5), &[2, 1, 2, 1, 1, 2]))?.graph;
    let rim = find_induced(&w, Pattern::FiveWheel).expect("wheel");
    let s = build_c5_structure(&w, Some(&rim[..5]))?;
    let (c, ws) = certify_5wheel_case(&w, &s)?;
    println!("wheel case {}", ws.case);
    show("blown-up 5-wheel", &w, &c)?;

    let c5 = blowup(&BlowupSpec::cliques(Graph::cycle(5), &[2, 2, 1, 2, 1]))?.graph;
    let s = build_c5_structure(&c5, None)?;
    match certify_wheelfree_c5_case(&c5, &s)? {
        (Outcome::Nice(c), ws) => {
            println!("wheel-free case {}", ws.case);
            show("blown-up C5", &c5, &c)?;
        }
        (Outcome::QuasiLine(_), ws) => println!("blown-up C5 is quasi-line ({})", ws.case),
    }

    let h = h_star();
    let ws = build_c7_structure(&h)?;
    println!("H* realizes {} part maps", ws.embeddings.len());
    show("H*", &h, &certify_c7c_case(&h, &ws)?)?;
    Ok(())
}
