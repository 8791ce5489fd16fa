//! Acceptance suite. Runs without the libtest harness so every criterion
//! prints its own PASS / FAIL line; exits nonzero if any criterion fails.

use std::collections::BTreeSet;
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::sync::OnceLock;
use std::time::{Duration, Instant};

use itertools::Itertools;

use p5w4::c5::proposition_ids;
use p5w4::color::color;
use p5w4::detect::{chi_exact, find_induced, is_3k1_free, is_induced_embedding, max_stable, omega, Limits, Pattern};
use p5w4::harness::default_seed;
use p5w4::harness::gen::{gen_gstar, small_graph};
use p5w4::harness::verify::{exhaustive_up_to, random_instances, verify, Suite, VerificationReport};
use p5w4::Graph;

type Outcome = Result<String, String>;

struct Sweeps {
    exhaustive: VerificationReport,
    exhaustive_time: Duration,
    random: VerificationReport,
}

const RANDOM_COUNT: usize = 10_000;

fn sweeps() -> &'static Sweeps {
    static S: OnceLock<Sweeps> = OnceLock::new();
    S.get_or_init(|| {
        let limits = Limits::default();
        let t = Instant::now();
        let exhaustive = verify(exhaustive_up_to(7).expect("n = 7 is allowed"), &Suite::ALL, &limits);
        let exhaustive_time = t.elapsed();
        let random = verify(random_instances(RANDOM_COUNT, 8, 16, default_seed()), &Suite::ALL, &limits);
        Sweeps { exhaustive, exhaustive_time, random }
    })
}

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn clauses(r: &VerificationReport, pick: impl Fn(&str) -> bool) -> Vec<String> {
    r.failures.iter().filter(|f| pick(&f.clause)).map(|f| format!("{} on {:?}", f.clause, f.provenance)).collect()
}

fn no_failures(what: &str, pick: impl Fn(&str) -> bool + Copy) -> Result<(), String> {
    let s = sweeps();
    let bad: Vec<String> = clauses(&s.exhaustive, pick).into_iter().chain(clauses(&s.random, pick)).collect();
    ensure(bad.is_empty(), || format!("{} {what} failures, first: {}", bad.len(), bad[0]))
}

fn extremal_family() -> Outcome {
    let g = gen_gstar(1).map_err(|e| e.to_string())?;
    let w = omega(&g).map_err(|e| e.to_string())?;
    let t = Instant::now();
    let chi = chi_exact(&g).map_err(|e| e.to_string())?.count;
    let chi_time = t.elapsed();
    ensure(w == 7 && chi == 10, || format!("G*: omega {w}, chi {chi}"))?;
    // α = 2 on 20 vertices forces χ ≥ 10 independently of the exact search
    ensure(max_stable(&g).map_err(|e| e.to_string())?.len() == 2, || "G* has a stable set of size 3".into())?;
    ensure(chi * 7 == 10 * w, || format!("ratio {chi}/{w} is not 10/7"))?;
    ensure(chi_time < Duration::from_secs(30), || format!("chi_exact took {chi_time:?}"))?;
    ensure(color(&g).map_err(|e| e.to_string())?.count == 10, || "G* not colored with 10".into())?;

    let g2 = gen_gstar(2).map_err(|e| e.to_string())?;
    let w2 = omega(&g2).map_err(|e| e.to_string())?;
    ensure(w2 == 14, || format!("G*(2): omega {w2}"))?;
    ensure(is_3k1_free(&g2), || "G*(2) has a stable set of size 3".into())?;
    let used = color(&g2).map_err(|e| e.to_string())?.count;
    ensure(used <= 21, || format!("G*(2) colored with {used}"))?;
    Ok(format!("G*: ω=7 χ=10 (exact in {chi_time:.1?}); G*(2): ω=14, α=2 so χ ≥ 20, colored with {used}"))
}

fn exhaustive_sweep() -> Outcome {
    let s = sweeps();
    let r = &s.exhaustive;
    let held = r.outcomes.iter().filter(|o| o.bound_held == Some(true)).count();
    ensure(r.is_clean(), || format!("{} failures, first {:?}", r.failures.len(), r.failures.first()))?;
    ensure(r.counts.capped == 0, || format!("{} instances hit caps", r.counts.capped))?;
    ensure(held == r.counts.passed && held > 0, || "bound not recorded on every checked instance".into())?;
    ensure(s.exhaustive_time < Duration::from_secs(30 * 60), || format!("sweep took {:?}", s.exhaustive_time))?;
    Ok(format!(
        "{} connected graphs on n ≤ 7, {} in class, all within ⌊3ω/2⌋ with χ ≤ ⌊3ω/2⌋ ({:.1?})",
        r.counts.instances, r.counts.passed, s.exhaustive_time
    ))
}

fn random_sweep() -> Outcome {
    let r = &sweeps().random;
    ensure(r.is_clean(), || format!("{} failures, first {:?}", r.failures.len(), r.failures.first()))?;
    ensure(r.counts.passed >= RANDOM_COUNT, || format!("only {} of {RANDOM_COUNT} checked", r.counts.passed))?;
    Ok(format!("{} in-class instances with 8 ≤ n ≤ 16, zero bound violations, zero bug traps", r.counts.passed))
}

fn trichotomy() -> Outcome {
    no_failures("certificate", |c| c == "certificate" || c == "color" || c == "error")?;
    let s = sweeps();
    let atoms: usize = s.exhaustive.atoms.values().chain(s.random.atoms.values()).sum();
    let mut kinds: BTreeSet<&str> = BTreeSet::new();
    kinds.extend(s.exhaustive.atoms.keys().chain(s.random.atoms.keys()).map(|k| k.as_str()));
    for need in ["perfect/none", "nice/five_wheel", "nice/c5_no_wheel", "nice/c7c_no_c5", "quasi_line/c5_no_wheel"] {
        ensure(kinds.contains(need), || format!("no atom classified {need}"))?;
    }
    Ok(format!("{atoms} atoms, every certificate verified independently; kinds {kinds:?}"))
}

fn propositions() -> Outcome {
    no_failures("proposition", |c| c.starts_with("proposition/"))?;
    let s = sweeps();
    let hit = |id: &str| {
        let k = format!("proposition/{id}");
        s.exhaustive.coverage.get(&k).copied().unwrap_or(0) + s.random.coverage.get(&k).copied().unwrap_or(0)
    };
    let cold: Vec<&str> = proposition_ids().into_iter().filter(|id| hit(id) == 0).collect();
    ensure(cold.is_empty(), || format!("never exercised: {cold:?}"))?;
    let atoms = s.exhaustive.coverage.get("c5_atoms").unwrap_or(&0) + s.random.coverage.get("c5_atoms").unwrap_or(&0);
    let least = proposition_ids().into_iter().map(|id| (hit(id), id)).min().expect("nonempty");
    Ok(format!(
        "{} facts hold on {atoms} atoms with a C5; least exercised {} ({}x)",
        proposition_ids().len(),
        least.1,
        least.0
    ))
}

fn oracle_agreement() -> Outcome {
    no_failures("oracle", |c| c.starts_with("oracle"))?;
    let s = sweeps();
    let n = s.exhaustive.coverage.get("oracle_agreement").unwrap_or(&0)
        + s.random.coverage.get("oracle_agreement").unwrap_or(&0);
    ensure(n >= 50, || format!("only {n} nice atoms compared"))?;
    Ok(format!("{n} nice atoms with n ≤ 14: construction and exhaustive search both verify"))
}

fn decomposition() -> Outcome {
    no_failures("decomposition", |c| c == "atom_cutset" || c == "decomposition_chi")?;
    let s = sweeps();
    let n = s.exhaustive.coverage.get("decomposition").unwrap_or(&0) + s.random.coverage.get("decomposition").unwrap_or(&0);
    ensure(n > 0, || "decomposition check never ran".into())?;
    Ok(format!("{n} graphs with n ≤ 9: max leaf χ equals root χ, leaves have no clique cutset"))
}

/// Realizations of each pattern with at most 7 vertices.
fn realizations(p: Pattern) -> Vec<Graph> {
    match p {
        Pattern::OddHole(_) => vec![Graph::cycle(5), Graph::cycle(7)],
        Pattern::OddAntihole(_) => vec![Graph::cycle(5).complement(), Graph::cycle(7).complement()],
        _ => p.graph().filter(|h| h.n() <= 7).into_iter().collect(),
    }
}

fn pair_index(k: usize, a: usize, b: usize) -> usize {
    a * (2 * k - a - 1) / 2 + (b - a - 1)
}

fn mask_of(g: &Graph, order: &[usize]) -> usize {
    let k = order.len();
    let mut m = 0;
    for a in 0..k {
        for b in a + 1..k {
            if g.adjacent(order[a], order[b]) {
                m |= 1 << pair_index(k, a, b);
            }
        }
    }
    m
}

/// `table[k][mask]`: bit `j` set iff the graph on `k` vertices with edge set
/// `mask` is isomorphic to a realization of pattern `j`.
fn iso_tables() -> Vec<Vec<u16>> {
    let mut t: Vec<Vec<u16>> = (0..=7).map(|k| vec![0u16; 1 << (k * (k.max(1) - 1) / 2)]).collect();
    for (j, p) in Pattern::ALL.iter().enumerate() {
        for h in realizations(*p) {
            let k = h.n();
            for perm in (0..k).permutations(k) {
                t[k][mask_of(&h, &perm)] |= 1 << j;
            }
        }
    }
    t
}

fn recognition_oracle() -> Outcome {
    let tables = iso_tables();
    let mut graphs = 0usize;
    let mut found = vec![0usize; Pattern::ALL.len()];
    for n in 1..=7usize {
        for mask in 0..1u64 << (n * (n - 1) / 2) {
            let g = small_graph(n, mask);
            graphs += 1;
            let mut brute = 0u16;
            for s in 1u32..1 << n {
                let order: Vec<usize> = (0..n).filter(|&v| s >> v & 1 == 1).collect();
                brute |= tables[order.len()][mask_of(&g, &order)];
            }
            for (j, p) in Pattern::ALL.iter().enumerate() {
                let w = find_induced(&g, *p);
                let expect = brute >> j & 1 == 1;
                ensure(w.is_some() == expect, || format!("{p} on {g:?}: search {w:?}, brute force {expect}"))?;
                if let Some(w) = w {
                    found[j] += 1;
                    let fits = realizations(*p).iter().any(|h| is_induced_embedding(&g, h, &w));
                    ensure(fits, || format!("{p} witness {w:?} is not an induced copy in {g:?}"))?;
                }
            }
        }
    }
    ensure(found.iter().all(|&c| c > 0), || format!("some pattern never found: {found:?}"))?;
    Ok(format!("{graphs} labeled graphs on n ≤ 7 × {} patterns, zero disagreements", Pattern::ALL.len()))
}

fn main() {
    let criteria: [(&str, fn() -> Outcome); 8] = [
        ("extremal family", extremal_family),
        ("exhaustive bound sweep", exhaustive_sweep),
        ("randomized bound sweep", random_sweep),
        ("atom trichotomy", trichotomy),
        ("C5 structure facts", propositions),
        ("nice certificate oracle", oracle_agreement),
        ("decomposition soundness", decomposition),
        ("recognition oracle", recognition_oracle),
    ];
    let mut failed = 0;
    for (k, (name, f)) in criteria.iter().enumerate() {
        let t = Instant::now();
        let r = catch_unwind(AssertUnwindSafe(f)).unwrap_or_else(|p| {
            Err(p.downcast_ref::<String>().cloned().or(p.downcast_ref::<&str>().map(|s| s.to_string())).unwrap_or_default())
        });
        let secs = t.elapsed().as_secs_f64();
        match r {
            Ok(detail) => println!("criterion {} {name}: PASS ({secs:.1}s) {detail}", k + 1),
            Err(why) => {
                failed += 1;
                println!("criterion {} {name}: FAIL ({secs:.1}s) {why}", k + 1);
            }
        }
    }
    if failed > 0 {
        println!("{failed} of {} criteria failed", criteria.len());
        std::process::exit(1);
    }
    println!("all {} criteria passed", criteria.len());
}
