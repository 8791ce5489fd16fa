use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use p5w4::color::{classify_atom_with, color_with};
use p5w4::decompose::{atom_tree, AtomTree};
use p5w4::detect::{chi_exact_with, find_induced, Limits, Pattern};
use p5w4::harness::gen::{gen_gstar, gen_hstar_blowup, gen_mixed, gen_random_in_class, gen_structured, Base};
use p5w4::harness::io::{read_graph, write, Format};
use p5w4::harness::verify::{corpus_instances, exhaustive_up_to, random_instances, verify, Suite};
use p5w4::harness::default_seed;
use p5w4::{Error, Graph, Result, VertexSet};

#[derive(Parser)]
#[command(name = "p5w4", version, about = "Certified ⌊3ω/2⌋ colorings of (P5, 4-wheel)-free graphs")]
struct Cli {
    /// Cap on vertex count for the exponential searches (ω, χ, perfection).
    #[arg(long, global = true)]
    max_exact_n: Option<usize>,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Look for an induced copy of a pattern.
    Recognize {
        file: PathBuf,
        /// P3, P4, P5, C4..C7, 2K2, 3K1, 4-wheel, 5-wheel, k-wheel, C7c, odd-hole[:m], odd-antihole[:m]
        #[arg(long)]
        pattern: Pattern,
    },
    /// Color the graph and validate the result.
    Color {
        file: PathBuf,
        /// Write the audit record here.
        #[arg(long)]
        audit: Option<PathBuf>,
        /// Also compute χ exactly and compare.
        #[arg(long)]
        exact_check: bool,
    },
    /// Clique-cutset decomposition of each component.
    Decompose { file: PathBuf },
    /// Classify every atom as perfect, nice or quasi-line.
    Classify { file: PathBuf },
    /// Write a generated graph to stdout.
    Gen {
        #[command(subcommand)]
        kind: GenKind,
        #[arg(long, value_enum, default_value_t = OutFormat::Dimacs, global = true)]
        format: OutFormat,
    },
    /// Run the verification suites.
    Verify(VerifyArgs),
}

#[derive(Subcommand)]
enum GenKind {
    /// Clique-blowup of the 20-vertex extremal graph.
    Gstar {
        #[arg(long)]
        k: usize,
    },
    /// Clique-blowup of H*.
    Hstar {
        /// Nine comma-separated part sizes for v1..v9.
        #[arg(long, value_delimiter = ',')]
        sizes: Vec<usize>,
    },
    /// A random in-class graph.
    Random {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 0.5)]
        p: f64,
        #[arg(long)]
        seed: Option<u64>,
        /// Sample blowups of structured bases instead of plain G(n, p).
        #[arg(long)]
        structured: bool,
        /// Base for --structured; mixed when absent.
        #[arg(long, value_parser = parse_base)]
        base: Option<Base>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum OutFormat {
    Dimacs,
    Edges,
}

#[derive(Args)]
#[group(required = true, multiple = false, id = "source")]
struct Source {
    /// All connected labeled graphs on at most N vertices (N ≤ 7).
    #[arg(long)]
    exhaustive_n: Option<usize>,
    /// Every .col / .txt / .edges file in a directory.
    #[arg(long)]
    corpus: Option<PathBuf>,
    /// COUNT random in-class graphs.
    #[arg(long, value_name = "COUNT")]
    random: Option<usize>,
}

#[derive(Args)]
struct VerifyArgs {
    #[command(flatten)]
    source: Source,
    #[arg(long, default_value_t = 8)]
    min_n: usize,
    #[arg(long, default_value_t = 16)]
    max_n: usize,
    #[arg(long)]
    seed: Option<u64>,
    /// Only these suites (default: all).
    #[arg(long, value_enum, value_delimiter = ',')]
    suites: Vec<SuiteArg>,
    /// Dump failing instances here.
    #[arg(long)]
    fixtures: Option<PathBuf>,
    /// Print per-instance outcomes too.
    #[arg(long)]
    full: bool,
}

#[derive(Clone, Copy, ValueEnum)]
enum SuiteArg {
    Theorem1,
    Trichotomy,
    Propositions,
}

fn parse_base(s: &str) -> std::result::Result<Base, String> {
    serde_json::from_value(Value::String(s.replace('-', "_"))).map_err(|_| {
        format!("unknown base {s:?}; one of c5, five_wheel, c7_complement, h_star, g_star_piece, c5_seeded, x_pair")
    })
}

/// Writes to stdout; a closed pipe (`| head`) is not an error.
fn emit(text: &str) -> Result<()> {
    let mut out = std::io::stdout().lock();
    match out.write_all(text.as_bytes()).and_then(|()| out.flush()) {
        Err(e) if e.kind() != std::io::ErrorKind::BrokenPipe => Err(e.into()),
        _ => Ok(()),
    }
}

fn print(v: &Value) -> Result<()> {
    emit(&format!("{}\n", serde_json::to_string_pretty(v)?))
}

fn components(g: &Graph) -> Result<Vec<(Graph, Vec<usize>)>> {
    g.components().into_iter().map(|c| Ok(g.induced_subgraph(c)?)).collect()
}

fn cutsets(t: &AtomTree, map: &[usize], out: &mut Vec<VertexSet>) {
    if let AtomTree::Split { q, left, right } = t {
        out.push(q.map_through(map));
        cutsets(left, map, out);
        cutsets(right, map, out);
    }
}

fn run(cli: Cli) -> Result<()> {
    let limits = match cli.max_exact_n {
        Some(n) => Limits::default().with_exact_cap(n),
        None => Limits::default(),
    };
    match cli.cmd {
        Cmd::Recognize { file, pattern } => {
            let g = read_graph(&file)?;
            let w = find_induced(&g, pattern);
            print(&json!({ "pattern": pattern.to_string(), "found": w.is_some(), "witness": w }))?;
        }
        Cmd::Color { file, audit, exact_check } => {
            let g = read_graph(&file)?;
            let r = color_with(&g, &limits)?;
            let chi = if exact_check {
                let chi = chi_exact_with(&g, &limits)?.count;
                if chi > r.count || chi > r.bound {
                    return Err(Error::bug("exact_check", format!("chi {chi}, used {}, bound {}", r.count, r.bound), json!(g)));
                }
                Some(chi)
            } else {
                None
            };
            if let Some(path) = audit {
                std::fs::write(&path, serde_json::to_string_pretty(&r.audit)?)?;
            }
            print(&json!({
                "n": g.n(), "omega": r.omega, "bound": r.bound, "count": r.count, "chi": chi,
                "colors": r.colors, "checks": r.audit.checks,
            }))?;
        }
        Cmd::Decompose { file } => {
            let g = read_graph(&file)?;
            let mut out = Vec::new();
            for (comp, map) in components(&g)? {
                let tree = atom_tree(&comp)?;
                let mut qs = Vec::new();
                cutsets(&tree, &map, &mut qs);
                let atoms: Vec<VertexSet> =
                    tree.leaves().iter().map(|(_, m)| m.iter().map(|&v| map[v]).collect()).collect();
                out.push(json!({ "vertices": map, "cutsets": qs, "atoms": atoms }));
            }
            print(&json!({ "components": out }))?;
        }
        Cmd::Classify { file } => {
            let g = read_graph(&file)?;
            p5w4::detect::recognize::class_violation(&g)
                .map_or(Ok(()), |(p, w)| Err(Error::NotInClass { pattern: p.to_string(), witness: w }))?;
            let mut out = Vec::new();
            for (comp, map) in components(&g)? {
                for (atom, m) in atom_tree(&comp)?.leaves() {
                    let c = classify_atom_with(atom, &limits)?;
                    let vertices: Vec<usize> = m.iter().map(|&v| map[v]).collect();
                    out.push(json!({ "vertices": vertices, "classification": c }));
                }
            }
            print(&json!({ "atoms": out }))?;
        }
        Cmd::Gen { kind, format } => {
            let g = match kind {
                GenKind::Gstar { k } => gen_gstar(k)?,
                GenKind::Hstar { sizes } => {
                    let s: [usize; 9] = sizes.try_into().map_err(|v: Vec<usize>| Error::Precondition(format!("need 9 sizes, got {}", v.len())))?;
                    gen_hstar_blowup(&s)?
                }
                GenKind::Random { n, p, seed, structured, base } => {
                    let seed = seed.unwrap_or_else(default_seed);
                    let g = match (structured, base) {
                        (false, _) => gen_random_in_class(n, p, seed),
                        (true, None) => gen_mixed(n, seed),
                        (true, Some(b)) => gen_structured(n, b, seed),
                    };
                    g.ok_or_else(|| Error::Precondition(format!("no in-class draw for n = {n}, seed {seed}")))?
                }
            };
            let f = match format {
                OutFormat::Dimacs => Format::Dimacs,
                OutFormat::Edges => Format::EdgeList,
            };
            emit(&write(&g, f))?;
        }
        Cmd::Verify(a) => verify_cmd(a, &limits)?,
    }
    Ok(())
}

fn verify_cmd(a: VerifyArgs, limits: &Limits) -> Result<()> {
    let suites: Vec<Suite> = if a.suites.is_empty() {
        Suite::ALL.to_vec()
    } else {
        a.suites
            .iter()
            .map(|s| match s {
                SuiteArg::Theorem1 => Suite::Theorem1,
                SuiteArg::Trichotomy => Suite::Trichotomy,
                SuiteArg::Propositions => Suite::Propositions,
            })
            .collect()
    };
    let report = if let Some(n) = a.source.exhaustive_n {
        verify(exhaustive_up_to(n)?, &suites, limits)
    } else if let Some(dir) = &a.source.corpus {
        verify(corpus_instances(dir)?, &suites, limits)
    } else {
        let count = a.source.random.expect("clap requires a source");
        let seed = a.seed.unwrap_or_else(default_seed);
        verify(random_instances(count, a.min_n, a.max_n, seed), &suites, limits)
    };
    if let Some(dir) = &a.fixtures {
        report.dump_fixtures(dir)?;
    }
    let mut v = json!({
        "suites": report.suites, "counts": report.counts, "atoms": report.atoms,
        "coverage": report.coverage, "failures": report.failures,
    });
    if a.full {
        v["outcomes"] = json!(report.outcomes);
    }
    print(&v)?;
    if !report.is_clean() {
        return Err(Error::bug("verify", format!("{} failing clauses", report.failures.len()), Value::Null));
    }
    Ok(())
}

fn report(e: &Error) {
    eprintln!("error: {e}");
    if let Error::BugTrap(b) = e {
        if !b.workspace.is_null() {
            let path = Path::new("p5w4-bugtrap.json");
            match std::fs::write(path, serde_json::to_string_pretty(&b.workspace).unwrap_or_default()) {
                Ok(()) => eprintln!("workspace written to {}", path.display()),
                Err(w) => eprintln!("could not write workspace: {w}"),
            }
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            report(&e);
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
