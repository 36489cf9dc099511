use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use ccg_cli::{corpus_hash, exit, parse_corpus, run_corpus, DEFAULT_CORPUS};
use ccg_core::classify::{classify_with_witnesses, lemma1_audit};
use ccg_core::graph::{build_class_graph, build_enhanced_power_graph, export_graph, find_triangle};
use ccg_core::{build_group, ExportFormat, FiniteGroup, GraphKind, GroupSpec};
use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

#[derive(Parser)]
#[command(name = "ccg", version, about = "Cyclic conjugacy-class graphs of finite groups")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Build a group from a spec and print a summary.
    Build {
        #[arg(long)]
        spec: PathBuf,
    },
    /// Build a class or element graph.
    Graph {
        #[arg(long)]
        spec: PathBuf,
        #[arg(long, value_enum, default_value = "cyclic-ccc")]
        kind: KindArg,
        /// Write DOT here.
        #[arg(long)]
        dot: Option<PathBuf>,
        /// Write the structured `ccg-graph/1` document here.
        #[arg(long)]
        out: Option<PathBuf>,
        /// Group name recorded in exports; defaults to the spec file stem.
        #[arg(long)]
        name: Option<String>,
    },
    /// Run structural audits.
    Check {
        #[arg(long)]
        spec: PathBuf,
        /// Element-order, class-count and orbit-count audit.
        #[arg(long, required = true)]
        lemma1: bool,
    },
    /// Print the structural shape of a group.
    Classify {
        #[arg(long)]
        spec: PathBuf,
    },
    /// Verify a corpus; without `--corpus` the built-in one is used.
    Verify {
        #[arg(long)]
        corpus: Option<PathBuf>,
        #[arg(long)]
        report: Option<PathBuf>,
        #[arg(long, env = "CCG_THREADS")]
        threads: Option<usize>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum KindArg {
    CyclicCcc,
    CommutingCcc,
    Epg,
}

/// An error together with the exit status it maps to.
struct Failure(i32, String);

type CmdResult = Result<i32, Failure>;

fn read(path: &Path) -> Result<String, Failure> {
    if path == Path::new("-") {
        return std::io::read_to_string(std::io::stdin())
            .map_err(|e| Failure(exit::PARSE, format!("stdin: {e}")));
    }
    fs::read_to_string(path).map_err(|e| Failure(exit::PARSE, format!("{}: {e}", path.display())))
}

fn write(path: &Path, text: &str) -> Result<(), Failure> {
    fs::write(path, text).map_err(|e| Failure(exit::PARSE, format!("{}: {e}", path.display())))
}

fn load_group(path: &Path) -> Result<FiniteGroup, Failure> {
    let spec = GroupSpec::from_json(&read(path)?)
        .map_err(|e| Failure(exit::PARSE, format!("{}: {e}", path.display())))?;
    build_group(&spec).map_err(|e| Failure(exit::BUILD, format!("{}: {e}", path.display())))
}

fn print_json(v: &serde_json::Value) {
    println!("{}", serde_json::to_string_pretty(v).expect("json"));
}

fn cmd_build(spec: &Path) -> CmdResult {
    let g = load_group(spec)?;
    let classes = g.conjugacy_classes();
    print_json(&json!({
        "order": g.order(),
        "degree": g.degree(),
        "classes": classes.len(),
        "class_sizes": classes.sizes(),
        "exponent": g.exponent(),
        "center_order": g.center().order(),
        "derived_series": g.derived_series().orders(),
        "solvable": g.is_solvable(),
        "generators": g.generators().iter().map(|p| p.to_cycle_string()).collect::<Vec<_>>(),
    }));
    Ok(exit::OK)
}

fn cmd_graph(
    spec: &Path,
    kind: KindArg,
    dot: Option<&Path>,
    out: Option<&Path>,
    name: Option<String>,
) -> CmdResult {
    let g = load_group(spec)?;
    let graph = match kind {
        KindArg::CyclicCcc => build_class_graph(&g, GraphKind::CyclicCcc),
        KindArg::CommutingCcc => build_class_graph(&g, GraphKind::CommutingCcc),
        KindArg::Epg => build_enhanced_power_graph(&g),
    };
    let name = name.unwrap_or_else(|| {
        spec.file_stem()
            .map(|s| s.to_string_lossy().into_owned())
            .unwrap_or_default()
    });
    let graph = graph.with_name(name);
    if let Some(p) = dot {
        write(p, &export_graph(&graph, ExportFormat::Dot))?;
    }
    if let Some(p) = out {
        write(p, &export_graph(&graph, ExportFormat::Structured))?;
    }
    let triangle = find_triangle(&graph).map(|(i, j, k)| {
        [i, j, k].map(|p| graph.vertices[p].representative.clone())
    });
    print_json(&json!({
        "kind": graph.kind.as_str(),
        "vertices": graph.vertex_count(),
        "edges": graph.edge_count(),
        "triangle": triangle,
    }));
    Ok(exit::OK)
}

fn cmd_check(spec: &Path) -> CmdResult {
    let g = load_group(spec)?;
    let report = lemma1_audit(&g);
    let mut v = serde_json::to_value(&report).expect("json");
    v["passed"] = json!(report.passed());
    print_json(&v);
    Ok(if report.passed() { exit::OK } else { exit::MISMATCH })
}

fn cmd_classify(spec: &Path) -> CmdResult {
    let g = load_group(spec)?;
    let (shape, witnesses) = classify_with_witnesses(&g);
    print_json(&json!({ "shape": shape, "witnesses": witnesses }));
    Ok(exit::OK)
}

fn cmd_verify(corpus: Option<&Path>, report: Option<&Path>, threads: Option<usize>) -> CmdResult {
    let text = match corpus {
        Some(p) => read(p)?,
        None => DEFAULT_CORPUS.to_string(),
    };
    let entries = parse_corpus(&text).map_err(|e| Failure(exit::PARSE, e.to_string()))?;
    let r = run_corpus(&entries, &corpus_hash(&text), threads)
        .map_err(|e| Failure(exit::BUILD, format!("build failed for {e}")))?;
    for e in &r.deterministic.entries {
        let v = &e.verdict;
        println!(
            "{} {:<20} order={:<6} triangle_free={:<5} shape={}",
            if e.passed { "PASS" } else { "FAIL" },
            e.name,
            e.order,
            v.triangle_free,
            v.shape
        );
        for m in &e.mismatches {
            println!("     {m}");
        }
    }
    println!(
        "{} passed, {} failed ({:.0} ms, {} threads)",
        r.deterministic.passed, r.deterministic.failed, r.timing.total_ms, r.timing.threads
    );
    if let Some(p) = report {
        write(p, &r.to_json())?;
    }
    Ok(r.exit_code())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Build { spec } => cmd_build(&spec),
        Command::Graph { spec, kind, dot, out, name } => {
            cmd_graph(&spec, kind, dot.as_deref(), out.as_deref(), name)
        }
        Command::Check { spec, .. } => cmd_check(&spec),
        Command::Classify { spec } => cmd_classify(&spec),
        Command::Verify { corpus, report, threads } => {
            cmd_verify(corpus.as_deref(), report.as_deref(), threads)
        }
    };
    match result {
        Ok(code) => ExitCode::from(code as u8),
        Err(Failure(code, msg)) => {
            eprintln!("ccg: {msg}");
            ExitCode::from(code as u8)
        }
    }
}
