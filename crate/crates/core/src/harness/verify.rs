//! Sweeps that check the coloring bound, the atom trichotomy and the C5
//! structure facts over many instances.

use std::collections::BTreeMap;
use std::path::{Path, PathBuf};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::gen::{gen_mixed, small_graph};
use super::io::{read_graph, write_dimacs};
use crate::c5::{assert_c5_propositions, build_c5_structure, Status as PropStatus};
use crate::color::{bound, color_with, AtomTag, ColoringResult};
use crate::decompose::atom_tree;
use crate::detect::{chi_exact_with, find_induced, in_class, is_perfect_with, omega_with, Limits, Pattern};
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};
use crate::nice::{nice_search_fallback_with, verify_nice_with};

/// Atoms up to this size are compared against the exhaustive certificate search.
pub const FALLBACK_MAX_N: usize = 14;
/// Graphs up to this size get the decomposition check.
pub const DECOMPOSITION_MAX_N: usize = 9;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "source", rename_all = "snake_case")]
pub enum Provenance {
    Generator { name: String, seed: u64, n: usize },
    Enumeration { n: usize, mask: u64 },
    File { path: PathBuf },
    Inline { label: String },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct InstanceRecord {
    pub graph: Graph,
    pub provenance: Provenance,
    pub n: usize,
    pub m: usize,
    pub omega: Option<usize>,
    pub chi: Option<usize>,
    pub in_class: bool,
}

impl InstanceRecord {
    pub fn new(graph: Graph, provenance: Provenance) -> InstanceRecord {
        InstanceRecord {
            n: graph.n(),
            m: graph.edge_count(),
            in_class: in_class(&graph),
            omega: None,
            chi: None,
            graph,
            provenance,
        }
    }

    /// Fills ω and χ where the caps allow.
    pub fn with_invariants(mut self, limits: &Limits) -> InstanceRecord {
        self.omega = omega_with(&self.graph, limits).ok();
        self.chi = chi_exact_with(&self.graph, limits).ok().map(|c| c.count);
        self
    }

    /// Recomputes every cached value.
    pub fn check(&self, limits: &Limits) -> bool {
        let g = &self.graph;
        self.n == g.n()
            && self.m == g.edge_count()
            && self.in_class == in_class(g)
            && self.omega.is_none_or(|w| omega_with(g, limits).is_ok_and(|x| x == w))
            && self.chi.is_none_or(|c| chi_exact_with(g, limits).is_ok_and(|x| x.count == c))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Suite {
    /// Proper coloring within `⌊3ω/2⌋`, exact χ within the bound, and
    /// decomposition soundness on small graphs.
    Theorem1,
    /// Every atom's certificate passes its independent verifier; small nice
    /// atoms agree with the exhaustive search.
    Trichotomy,
    /// The C5 structure facts on every atom with an induced C5.
    Propositions,
}

impl Suite {
    pub const ALL: [Suite; 3] = [Suite::Theorem1, Suite::Trichotomy, Suite::Propositions];
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    Passed,
    /// Not in the class.
    Skipped,
    /// An exact search hit its cap.
    Capped,
    Failed,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct InstanceOutcome {
    pub index: usize,
    pub status: Status,
    pub omega: Option<usize>,
    pub count: Option<usize>,
    pub chi: Option<usize>,
    pub bound_held: Option<bool>,
    pub trichotomy_held: Option<bool>,
    pub propositions_held: Option<bool>,
}

/// A failing instance, stored so it can be re-run alone.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Failure {
    pub provenance: Provenance,
    pub clause: String,
    pub detail: String,
    pub graph: Graph,
}

impl Failure {
    /// True iff checking the fixture alone fails the same clause.
    pub fn reproduces(&self, suites: &[Suite], limits: &Limits) -> bool {
        check_graph(&self.graph, suites, limits).clauses.iter().any(|(c, _)| *c == self.clause)
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Counts {
    pub instances: usize,
    pub passed: usize,
    pub skipped: usize,
    pub capped: usize,
    pub failed: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub suites: Vec<Suite>,
    pub counts: Counts,
    /// Atoms seen, keyed by classification and trigger.
    pub atoms: BTreeMap<String, usize>,
    /// How often each non-vacuous check ran (propositions, oracle comparisons).
    pub coverage: BTreeMap<String, usize>,
    pub outcomes: Vec<InstanceOutcome>,
    pub failures: Vec<Failure>,
}

impl VerificationReport {
    pub fn is_clean(&self) -> bool {
        self.failures.is_empty() && self.counts.failed == 0
    }

    /// Writes each failure as `<k>.col` plus `<k>.json` under `dir`.
    pub fn dump_fixtures(&self, dir: &Path) -> Result<()> {
        std::fs::create_dir_all(dir)?;
        for (k, f) in self.failures.iter().enumerate() {
            std::fs::write(dir.join(format!("failure-{k}.col")), write_dimacs(&f.graph))?;
            std::fs::write(dir.join(format!("failure-{k}.json")), serde_json::to_string_pretty(f)?)?;
        }
        Ok(())
    }
}

/// What one instance produced.
#[derive(Clone, Debug, Default)]
pub struct Checked {
    pub status: Option<Status>,
    pub omega: Option<usize>,
    pub count: Option<usize>,
    pub chi: Option<usize>,
    pub clauses: Vec<(String, String)>,
    pub atoms: Vec<String>,
    pub coverage: Vec<String>,
    suite_failed: BTreeMap<Suite, bool>,
}

impl Checked {
    fn fail(&mut self, suite: Suite, clause: impl Into<String>, detail: impl Into<String>) {
        self.clauses.push((clause.into(), detail.into()));
        self.suite_failed.insert(suite, true);
    }

    fn held(&self, suites: &[Suite], s: Suite) -> Option<bool> {
        suites.contains(&s).then(|| !self.suite_failed.get(&s).copied().unwrap_or(false))
    }
}

/// Exhaustive check that `g` has no clique whose removal disconnects it further.
pub fn has_clique_cutset_brute(g: &Graph) -> bool {
    let n = g.n();
    assert!(n <= 20, "brute-force cutset check is exponential");
    let base = g.components().len();
    (0u32..1 << n).any(|m| {
        let q = VertexSet::from_bits(m as u128);
        g.is_clique(q) && g.components_of(g.vertices() - q).len() > base
    })
}

fn trigger_key(tag: &AtomTag, trigger: crate::color::Trigger) -> String {
    let t = match tag {
        AtomTag::Perfect => "perfect",
        AtomTag::Nice(_) => "nice",
        AtomTag::QuasiLine(_) => "quasi_line",
    };
    format!("{t}/{}", serde_json::to_value(trigger).ok().and_then(|v| v.as_str().map(String::from)).unwrap_or_default())
}

fn capped(e: &Error) -> bool {
    matches!(e, Error::ResourceCap { .. })
}

/// Runs the requested suites on one graph.
pub fn check_graph(g: &Graph, suites: &[Suite], limits: &Limits) -> Checked {
    let mut out = Checked::default();
    if !in_class(g) {
        out.status = Some(Status::Skipped);
        return out;
    }
    match run_checks(g, suites, limits, &mut out) {
        Ok(()) => {}
        Err(e) if capped(&e) => {
            out.status = Some(Status::Capped);
            return out;
        }
        Err(e) => {
            let suite = suites.first().copied().unwrap_or(Suite::Theorem1);
            out.fail(suite, "error", e.to_string());
        }
    }
    out.status = Some(if out.clauses.is_empty() { Status::Passed } else { Status::Failed });
    out
}

fn run_checks(g: &Graph, suites: &[Suite], limits: &Limits, out: &mut Checked) -> Result<()> {
    let r: ColoringResult = match color_with(g, limits) {
        Ok(r) => r,
        Err(e) if capped(&e) => return Err(e),
        Err(e) => {
            out.fail(Suite::Theorem1, "color", e.to_string());
            return Ok(());
        }
    };
    out.omega = Some(r.omega);
    out.count = Some(r.count);
    if suites.contains(&Suite::Theorem1) {
        theorem1(g, &r, limits, out)?;
    }
    let atoms: Vec<(Graph, &AtomTag, crate::color::Trigger)> = r
        .audit
        .classifications
        .iter()
        .map(|a| Ok((g.induced_subgraph(a.vertices)?.0, &a.classification.tag, a.classification.trigger)))
        .collect::<Result<_>>()?;
    if suites.contains(&Suite::Trichotomy) {
        for (atom, tag, trigger) in &atoms {
            trichotomy(atom, tag, *trigger, limits, out)?;
        }
    }
    if suites.contains(&Suite::Propositions) {
        for (atom, _, _) in &atoms {
            propositions(atom, out)?;
        }
    }
    Ok(())
}

fn theorem1(g: &Graph, r: &ColoringResult, limits: &Limits, out: &mut Checked) -> Result<()> {
    let s = Suite::Theorem1;
    if !crate::detect::check_proper(g, &r.colors) {
        out.fail(s, "proper", format!("{:?}", r.colors));
    }
    if r.count > bound(r.omega) {
        out.fail(s, "bound", format!("{} colors, omega {}", r.count, r.omega));
    }
    let chi = match chi_exact_with(g, limits) {
        Ok(c) => Some(c.count),
        Err(e) if capped(&e) => None,
        Err(e) => return Err(e),
    };
    out.chi = chi;
    if let Some(chi) = chi {
        if chi > bound(r.omega) {
            out.fail(s, "chi_bound", format!("chi {chi}, omega {}", r.omega));
        }
        if chi > r.count {
            out.fail(s, "chi_le_count", format!("chi {chi} above {} colors used", r.count));
        }
    }
    if g.n() <= DECOMPOSITION_MAX_N {
        for c in g.components() {
            let (comp, _) = g.induced_subgraph(c)?;
            let tree = atom_tree(&comp)?;
            let root = chi_exact_with(&comp, limits)?.count;
            let mut best = 0;
            for (leaf, _) in tree.leaves() {
                best = best.max(chi_exact_with(leaf, limits)?.count);
                if has_clique_cutset_brute(leaf) {
                    out.fail(s, "atom_cutset", format!("{leaf:?}"));
                }
            }
            if best != root {
                out.fail(s, "decomposition_chi", format!("leaves give {best}, root has {root}"));
            }
        }
        out.coverage.push("decomposition".into());
    }
    Ok(())
}

fn trichotomy(
    atom: &Graph,
    tag: &AtomTag,
    trigger: crate::color::Trigger,
    limits: &Limits,
    out: &mut Checked,
) -> Result<()> {
    let s = Suite::Trichotomy;
    out.atoms.push(trigger_key(tag, trigger));
    let ok = match tag {
        AtomTag::Perfect => is_perfect_with(atom, limits)?,
        AtomTag::QuasiLine(q) => q.verify(atom),
        AtomTag::Nice(c) => verify_nice_with(atom, c, limits)?.is_valid(),
    };
    if !ok {
        out.fail(s, "certificate", format!("{atom:?}"));
    }
    if let AtomTag::Nice(_) = tag {
        if atom.n() <= FALLBACK_MAX_N {
            match nice_search_fallback_with(atom, &Limits { nice_search: FALLBACK_MAX_N, ..*limits })? {
                Some(c) if verify_nice_with(atom, &c, limits)?.is_valid() => out.coverage.push("oracle_agreement".into()),
                Some(_) => out.fail(s, "oracle_certificate", format!("{atom:?}")),
                None => out.fail(s, "oracle_disagreement", format!("{atom:?}")),
            }
        }
    }
    Ok(())
}

fn propositions(atom: &Graph, out: &mut Checked) -> Result<()> {
    if find_induced(atom, Pattern::C5).is_none() {
        return Ok(());
    }
    let st = build_c5_structure(atom, None)?;
    let report = assert_c5_propositions(atom, &st);
    out.coverage.push("c5_atoms".into());
    for r in &report.results {
        match r.status {
            PropStatus::Failed => {
                out.fail(Suite::Propositions, format!("proposition/{}", r.id), format!("{atom:?} witness {:?}", r.witness))
            }
            PropStatus::Passed => out.coverage.push(format!("proposition/{}", r.id)),
            PropStatus::Vacuous => {}
        }
    }
    Ok(())
}

/// Runs `suites` over `instances` in parallel; the report keeps input order.
pub fn verify<I>(instances: I, suites: &[Suite], limits: &Limits) -> VerificationReport
where
    I: IntoParallelIterator<Item = InstanceRecord>,
{
    let rows: Vec<(InstanceRecord, Checked)> = instances
        .into_par_iter()
        .map(|rec| {
            let c = if rec.in_class { check_graph(&rec.graph, suites, limits) } else { skipped() };
            (rec, c)
        })
        .collect();
    let mut report = VerificationReport {
        suites: suites.to_vec(),
        counts: Counts::default(),
        atoms: BTreeMap::new(),
        coverage: BTreeMap::new(),
        outcomes: Vec::with_capacity(rows.len()),
        failures: Vec::new(),
    };
    for (index, (rec, c)) in rows.into_iter().enumerate() {
        let status = c.status.unwrap_or(Status::Failed);
        let counts = &mut report.counts;
        counts.instances += 1;
        match status {
            Status::Passed => counts.passed += 1,
            Status::Skipped => counts.skipped += 1,
            Status::Capped => counts.capped += 1,
            Status::Failed => counts.failed += 1,
        }
        for a in &c.atoms {
            *report.atoms.entry(a.clone()).or_default() += 1;
        }
        for k in &c.coverage {
            *report.coverage.entry(k.clone()).or_default() += 1;
        }
        let ran = status == Status::Passed || status == Status::Failed;
        report.outcomes.push(InstanceOutcome {
            index,
            status,
            omega: c.omega,
            count: c.count,
            chi: c.chi,
            bound_held: c.held(suites, Suite::Theorem1).filter(|_| ran),
            trichotomy_held: c.held(suites, Suite::Trichotomy).filter(|_| ran),
            propositions_held: c.held(suites, Suite::Propositions).filter(|_| ran),
        });
        for (clause, detail) in c.clauses {
            report.failures.push(Failure { provenance: rec.provenance.clone(), clause, detail, graph: rec.graph.clone() });
        }
    }
    report
}

fn skipped() -> Checked {
    Checked { status: Some(Status::Skipped), ..Checked::default() }
}

pub fn verify_theorem1<I>(instances: I, limits: &Limits) -> VerificationReport
where
    I: IntoParallelIterator<Item = InstanceRecord>,
{
    verify(instances, &[Suite::Theorem1], limits)
}

pub fn verify_trichotomy<I>(instances: I, limits: &Limits) -> VerificationReport
where
    I: IntoParallelIterator<Item = InstanceRecord>,
{
    verify(instances, &[Suite::Trichotomy], limits)
}

pub fn verify_propositions<I>(instances: I, limits: &Limits) -> VerificationReport
where
    I: IntoParallelIterator<Item = InstanceRecord>,
{
    verify(instances, &[Suite::Propositions], limits)
}

/// Every connected labeled graph on exactly `n ≤ 7` vertices.
pub fn exhaustive_instances(n: usize) -> Result<impl ParallelIterator<Item = InstanceRecord>> {
    exhaustive_cap(n)?;
    Ok(connected_on(n))
}

/// Every connected labeled graph on `1..=max_n` vertices, smallest first.
pub fn exhaustive_up_to(max_n: usize) -> Result<impl ParallelIterator<Item = InstanceRecord>> {
    exhaustive_cap(max_n)?;
    Ok((1..=max_n).into_par_iter().flat_map(connected_on))
}

fn exhaustive_cap(n: usize) -> Result<()> {
    if n > 7 {
        return Err(Error::ResourceCap { what: "labeled enumeration", n, cap: 7 });
    }
    Ok(())
}

fn connected_on(n: usize) -> impl ParallelIterator<Item = InstanceRecord> {
    let pairs = n * n.saturating_sub(1) / 2;
    (0u64..1 << pairs).into_par_iter().filter_map(move |mask| {
        let g = small_graph(n, mask);
        g.is_connected().then(|| InstanceRecord::new(g, Provenance::Enumeration { n, mask }))
    })
}

/// `count` in-class draws with `min_n ≤ n ≤ max_n`, deterministic in `seed`.
pub fn random_instances(count: usize, min_n: usize, max_n: usize, seed: u64) -> Vec<InstanceRecord> {
    let span = (max_n.saturating_sub(min_n) + 1) as u64;
    let mut out = Vec::with_capacity(count);
    let mut next = 0u64;
    while out.len() < count {
        let chunk = ((count - out.len()) as u64 * 5 / 4).max(64);
        let batch: Vec<InstanceRecord> = (next..next + chunk)
            .into_par_iter()
            .filter_map(|k| {
                let s = seed.wrapping_mul(0x100_0000_01b3).wrapping_add(k);
                let n = min_n + (k % span) as usize;
                gen_mixed(n, s).map(|g| {
                    InstanceRecord::new(g, Provenance::Generator { name: "mixed".into(), seed: s, n })
                })
            })
            .collect();
        next += chunk;
        out.extend(batch.into_iter().take(count - out.len()));
    }
    out
}

/// Graph files in `dir` (`.col`, `.txt`, `.edges`), sorted by name.
pub fn corpus_instances(dir: &Path) -> Result<Vec<InstanceRecord>> {
    let mut paths: Vec<PathBuf> = std::fs::read_dir(dir)?
        .map(|e| e.map(|e| e.path()))
        .collect::<std::io::Result<_>>()?;
    paths.retain(|p| p.extension().is_some_and(|e| e == "col" || e == "txt" || e == "edges"));
    paths.sort();
    paths.into_iter().map(|p| Ok(InstanceRecord::new(read_graph(&p)?, Provenance::File { path: p }))).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_suite_is_clean() {
        let recs = vec![
            InstanceRecord::new(Graph::cycle(5), Provenance::Inline { label: "c5".into() }),
            InstanceRecord::new(Graph::wheel(5), Provenance::Inline { label: "w5".into() }),
            InstanceRecord::new(Graph::path(5), Provenance::Inline { label: "p5".into() }),
        ];
        let r = verify(recs, &Suite::ALL, &Limits::default());
        assert!(r.is_clean(), "{:?}", r.failures);
        assert_eq!((r.counts.passed, r.counts.skipped), (2, 1));
        assert_eq!(r.outcomes[0].bound_held, Some(true));
        assert_eq!(r.outcomes[2].status, Status::Skipped);
        assert!(r.coverage["oracle_agreement"] >= 2);
    }

    #[test]
    fn brute_cutsets() {
        assert!(!has_clique_cutset_brute(&Graph::cycle(5)));
        assert!(has_clique_cutset_brute(&Graph::path(3)));
        assert!(!has_clique_cutset_brute(&Graph::complete(4)));
    }

    #[test]
    fn records_recheck() {
        let r = InstanceRecord::new(Graph::wheel(5), Provenance::Inline { label: "w".into() })
            .with_invariants(&Limits::default());
        assert_eq!((r.omega, r.chi, r.in_class), (Some(3), Some(4), true));
        assert!(r.check(&Limits::default()));
        let mut bad = r.clone();
        bad.chi = Some(3);
        assert!(!bad.check(&Limits::default()));
    }

    #[test]
    fn exhaustive_counts() {
        // connected labeled graphs on 4 vertices
        assert_eq!(exhaustive_instances(4).unwrap().count(), 38);
        // 1 + 1 + 4 + 38
        assert_eq!(exhaustive_up_to(4).unwrap().count(), 44);
        assert!(exhaustive_up_to(8).is_err());
    }
}
