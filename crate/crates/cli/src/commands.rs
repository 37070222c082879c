use std::fmt::Write as _;
use std::path::{Path, PathBuf};

use kohnert_core::check::{check_instance, CorpusSpec, InstanceCheck};
use kohnert_core::{
    column_profiles, enumerate, max_min_empty, max_moves, min_moves, random_diagram, solve_max, solve_min,
    ColumnProfile, Diagram, PosetError, SolveReport,
};
use kohnert_service::ServiceConfig;
use rayon::prelude::*;
use serde::Serialize;
use serde_json::json;

use crate::input::read_diagram;
use crate::{CliError, Command, CorpusArgs, Format, ModeArg};

pub fn run(command: Command) -> Result<(), CliError> {
    match command {
        Command::Compute { input, format } => compute(&read_diagram(&input)?, format),
        Command::Solve { input, mode, format } => solve(&read_diagram(&input)?, mode, format),
        Command::Enumerate { input, limit, format } => enumerate_cmd(&read_diagram(&input)?, limit, format),
        Command::Verify {
            corpus,
            count,
            limit,
            format,
        } => verify(corpus_spec(&corpus, count)?, limit, format),
        Command::Random { corpus, output, format } => random(&corpus, output.as_deref(), format),
        Command::Serve { port, origin, snapshot } => serve(port, origin, snapshot),
    }
}

fn no_dot(format: Format, command: &str) -> Result<(), CliError> {
    if format == Format::Dot {
        return Err(CliError::Usage(format!("{command} has no dot output; use plain or json")));
    }
    Ok(())
}

fn to_json<T: Serialize>(value: &T) -> String {
    serde_json::to_string(value).expect("reports serialize") + "\n"
}

fn joined<T: ToString>(items: &[T]) -> String {
    items.iter().map(T::to_string).collect::<Vec<_>>().join(" ")
}

fn corpus_spec(args: &CorpusArgs, count: usize) -> Result<CorpusSpec, CliError> {
    if !(0.0..=1.0).contains(&args.density) {
        return Err(CliError::Usage(format!("--density {} is outside [0, 1]", args.density)));
    }
    Ok(CorpusSpec {
        count,
        rows: args.rows,
        cols: args.cols,
        density: args.density,
        seed: args.seed,
    })
}

#[derive(Serialize)]
struct ComputeReport {
    diagram: Diagram,
    cell_count: usize,
    empty_count: usize,
    row_weight: Vec<usize>,
    column_weight: Vec<usize>,
    max_moves: usize,
    min_moves: usize,
    max_min_empty: usize,
    columns: Vec<ColumnProfile>,
}

fn compute(d: &Diagram, format: Format) -> Result<(), CliError> {
    no_dot(format, "compute")?;
    let report = ComputeReport {
        diagram: d.clone(),
        cell_count: d.len(),
        empty_count: d.empty_count(),
        row_weight: d.row_weight(),
        column_weight: d.column_weight(),
        max_moves: max_moves(d),
        min_moves: min_moves(d),
        max_min_empty: max_min_empty(d),
        columns: column_profiles(d),
    };
    if format == Format::Json {
        print!("{}", to_json(&report));
        return Ok(());
    }
    let mut out = String::new();
    let fields = [
        ("cells", report.cell_count.to_string()),
        ("empty", report.empty_count.to_string()),
        ("rwt", joined(&report.row_weight)),
        ("cwt", joined(&report.column_weight)),
        ("max_moves", report.max_moves.to_string()),
        ("min_moves", report.min_moves.to_string()),
        ("max_min_empty", report.max_min_empty.to_string()),
    ];
    for (name, value) in fields {
        let _ = writeln!(out, "{}", format!("{name:<15}{value}").trim_end());
    }
    if !report.columns.is_empty() {
        let _ = writeln!(out, "col  count  top  M  h");
        for p in &report.columns {
            let h = p.h.map_or_else(|| "-".to_string(), |h| h.to_string());
            let _ = writeln!(out, "{:<4} {:<6} {:<4} {:<2} {h}", p.col, p.count, p.top_row, p.right_max);
        }
    }
    print!("{out}");
    Ok(())
}

fn solve(d: &Diagram, mode: ModeArg, format: Format) -> Result<(), CliError> {
    no_dot(format, "solve")?;
    let reports: Vec<SolveReport> = match mode {
        ModeArg::Max => vec![solve_max(d)],
        ModeArg::Min => vec![solve_min(d)],
        ModeArg::Both => vec![solve_max(d), solve_min(d)],
    };
    for report in &reports {
        let replay = d.apply_chain(&report.rows()).map_err(|e| CliError::Input(e.to_string()))?;
        if replay.end() != report.chain().end() || !replay.end().is_minimal() {
            eprintln!("{} solution does not replay to a minimal diagram", report.mode());
            return Err(CliError::Verification { failed: 1, checked: 1 });
        }
    }
    if format == Format::Json {
        let body: Vec<_> = reports
            .iter()
            .map(|r| {
                json!({
                    "mode": r.mode(),
                    "rows": r.rows(),
                    "achieved": r.achieved(),
                    "predicted": r.predicted(),
                    "end": r.chain().end(),
                })
            })
            .collect();
        print!("{}", to_json(&body));
        return Ok(());
    }
    for r in &reports {
        println!("{}", format!("{} rows: {}", r.mode(), joined(&r.rows())).trim_end());
        println!("{} moves: {}", r.mode(), r.achieved());
    }
    Ok(())
}

fn enumerate_cmd(d: &Diagram, limit: usize, format: Format) -> Result<(), CliError> {
    let g = enumerate(d, limit)?;
    match format {
        Format::Dot => print!("{}", g.export_dot()),
        Format::Json => {
            let minimal: Vec<&Diagram> = g.minimal().iter().map(|&i| &g.nodes()[i]).collect();
            let body = json!({
                "nodes": g.len(),
                "edges": g.edges().len(),
                "minimal": g.minimal().len(),
                "longest_chain": g.longest_chain().0,
                "shortest_to_minimal": g.shortest_to_minimal().0,
                "minimal_diagrams": minimal,
            });
            print!("{}", to_json(&body));
        }
        Format::Plain => {
            println!("nodes={} edges={} minimal={}", g.len(), g.edges().len(), g.minimal().len());
            println!(
                "longest_chain={} shortest_to_minimal={}",
                g.longest_chain().0,
                g.shortest_to_minimal().0
            );
        }
    }
    Ok(())
}

#[derive(Serialize)]
struct Failure {
    index: usize,
    seed: u64,
    diagram: Diagram,
    violations: Vec<String>,
}

fn verify(spec: CorpusSpec, limit: usize, format: Format) -> Result<(), CliError> {
    no_dot(format, "verify")?;
    let seeds = spec.seeds();
    let outcomes: Vec<(Diagram, Result<InstanceCheck, PosetError>)> = spec
        .diagrams()
        .into_par_iter()
        .map(|d| {
            let result = check_instance(&d, limit);
            (d, result)
        })
        .collect();

    let mut failures = Vec::new();
    let (mut passed, mut skipped) = (0usize, 0usize);
    for (index, (d, outcome)) in outcomes.into_iter().enumerate() {
        match outcome {
            Ok(check) if check.passed() => passed += 1,
            Ok(check) => failures.push(Failure {
                index,
                seed: seeds[index],
                diagram: d,
                violations: check.violations,
            }),
            Err(PosetError::LimitExceeded(_)) => skipped += 1,
        }
    }
    let checked = passed + failures.len();

    if format == Format::Json {
        let body = json!({
            "corpus": spec,
            "checked": checked,
            "passed": passed,
            "failed": failures.len(),
            "skipped": skipped,
            "failures": failures,
        });
        print!("{}", to_json(&body));
    } else {
        let mut out = String::new();
        for f in &failures {
            let _ = writeln!(out, "instance {} (seed {}) failed:", f.index, f.seed);
            for v in &f.violations {
                let _ = writeln!(out, "# {}", v.replace('\n', "\n# "));
            }
            out.push_str(&f.diagram.to_cell_list());
            out.push('\n');
        }
        let _ = writeln!(
            out,
            "checked={checked} passed={passed} failed={} skipped={skipped}",
            failures.len()
        );
        print!("{out}");
    }

    if spec.count == 0 {
        return Err(CliError::Vacuous("the corpus is empty".into()));
    }
    if checked == 0 {
        return Err(CliError::Vacuous(format!("all {skipped} instances exceeded the node limit")));
    }
    if !failures.is_empty() {
        return Err(CliError::Verification {
            failed: failures.len(),
            checked,
        });
    }
    Ok(())
}

fn random(args: &CorpusArgs, output: Option<&Path>, format: Format) -> Result<(), CliError> {
    no_dot(format, "random")?;
    corpus_spec(args, 1)?;
    let d = random_diagram(args.rows, args.cols, args.density, args.seed);
    let text = match format {
        Format::Json => to_json(&d),
        _ => d.to_cell_list(),
    };
    match output {
        Some(path) if path != Path::new("-") => std::fs::write(path, text)
            .map_err(|e| CliError::Input(format!("{}: {e}", path.display())))?,
        _ => print!("{text}"),
    }
    Ok(())
}

fn serve(port: u16, origin: Option<String>, snapshot: Option<PathBuf>) -> Result<(), CliError> {
    let config = ServiceConfig {
        port,
        allowed_origin: origin,
        snapshot_path: snapshot,
        ..ServiceConfig::default()
    };
    let runtime = tokio::runtime::Builder::new_multi_thread()
        .enable_all()
        .build()
        .map_err(|e| CliError::Usage(format!("cannot start runtime: {e}")))?;
    runtime.block_on(kohnert_service::serve(config))?;
    Ok(())
}

