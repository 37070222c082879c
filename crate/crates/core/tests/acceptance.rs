//! Acceptance criteria. Runs as a plain binary (`harness = false`) and prints
//! one PASS/FAIL line per criterion; exits nonzero if any criterion fails.

use std::collections::HashSet;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use kohnert_core::check::CorpusSpec;
use kohnert_core::formulas::{column_profiles, max_min_empty, max_moves, min_moves, room};
use kohnert_core::labeling::{move_counts, LabelTracker};
use kohnert_core::poset::{enumerate, PosetGraph, DEFAULT_NODE_LIMIT};
use kohnert_core::presets::{large, lowering, small};
use kohnert_core::rng::SplitMix64;
use kohnert_core::solvers::{dhat, solve_max, solve_min};
use kohnert_core::{random_diagram, Chain, Diagram};

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn d(pairs: &[(u32, u32)]) -> Diagram {
    Diagram::from_pairs(pairs.iter().copied()).unwrap()
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn within(elapsed: Duration, budget: Duration) -> Result<(), String> {
    ensure(elapsed < budget, || format!("took {elapsed:?}, budget {budget:?}"))
}

const SWEEP: CorpusSpec = CorpusSpec {
    count: 500,
    rows: 5,
    cols: 5,
    density: 0.3,
    seed: 7,
};
const RANDOM_CHAINS_PER_INSTANCE: usize = 100;

fn golden_small() -> Outcome {
    let family: HashSet<Diagram> = [
        small(),
        d(&[(1, 1), (2, 1), (2, 2), (1, 3), (3, 3)]),
        d(&[(1, 1), (2, 1), (2, 2), (2, 3), (1, 3)]),
        d(&[(1, 1), (2, 1), (1, 2), (1, 3), (3, 3)]),
        d(&[(1, 1), (2, 1), (1, 2), (2, 3), (1, 3)]),
    ]
    .into_iter()
    .collect();

    let root = small();
    let t = Instant::now();
    let g = enumerate(&root, DEFAULT_NODE_LIMIT).map_err(|e| e.to_string())?;
    let (longest, _) = g.longest_chain();
    let (shortest, _) = g.shortest_to_minimal();
    let (max, min) = (max_moves(&root), min_moves(&root));
    let elapsed = t.elapsed();

    let nodes: HashSet<Diagram> = g.nodes().iter().cloned().collect();
    ensure(g.len() == 5 && nodes == family, || format!("{} nodes, family mismatch", g.len()))?;
    ensure(g.minimal().len() == 2, || format!("{} minimal", g.minimal().len()))?;
    ensure(longest == 3, || format!("longest chain {longest}"))?;
    ensure(shortest == 1, || format!("shortest {shortest}"))?;
    ensure(max == 3 && min == 1, || format!("formulas {max}/{min}"))?;
    within(elapsed, Duration::from_millis(1))?;
    Ok(format!("5 diagrams, 2 minimal, rank 3, mc 1 in {elapsed:?}"))
}

fn golden_large() -> Outcome {
    let root = large();
    ensure(root.len() == 17, || format!("{} cells", root.len()))?;
    let t = Instant::now();
    let (max, min) = (max_moves(&root), min_moves(&root));
    let hi = solve_max(&root);
    let lo = solve_min(&root);
    let elapsed = t.elapsed();

    ensure(max == 41, || format!("max_moves {max}"))?;
    ensure(min == 23, || format!("min_moves {min}"))?;
    ensure(hi.chain().len() == 41, || format!("solve_max {}", hi.chain().len()))?;
    ensure(lo.chain().len() == 23, || format!("solve_min {}", lo.chain().len()))?;
    for report in [&hi, &lo] {
        let replay = root.apply_chain(&report.rows()).map_err(|e| e.to_string())?;
        ensure(replay.end() == report.chain().end() && replay.end().is_minimal(), || {
            format!("{} replay does not end minimal", report.mode())
        })?;
    }
    within(elapsed, Duration::from_millis(100))?;
    Ok(format!("MC 41, mc 23, both solvers replay to minimal in {elapsed:?}"))
}

fn sweep_graphs() -> Result<Vec<(Diagram, PosetGraph)>, String> {
    SWEEP
        .diagrams()
        .into_iter()
        .map(|root| {
            enumerate(&root, DEFAULT_NODE_LIMIT)
                .map(|g| (root.clone(), g))
                .map_err(|e| format!("{e} for\n{}", root.to_cell_list()))
        })
        .collect()
}

fn oracle_sweep() -> Outcome {
    let t = Instant::now();
    let graphs = sweep_graphs()?;
    let mut largest = 0;
    for (root, g) in &graphs {
        largest = largest.max(g.len());
        let show = || root.to_cell_list();
        let longest = g.longest_chain().0;
        let shortest = g.shortest_to_minimal().0;
        ensure(max_moves(root) == longest, || format!("MC {} vs rank {longest}\n{}", max_moves(root), show()))?;
        ensure(min_moves(root) == shortest, || format!("mc {} vs {shortest}\n{}", min_moves(root), show()))?;
        let oracle_empty = g.max_empty_over_minimal();
        ensure(max_min_empty(root) == oracle_empty, || {
            format!("max empty {} vs {oracle_empty}\n{}", max_min_empty(root), show())
        })?;
        for p in column_profiles(root) {
            let Some(h) = p.h else { continue };
            let highest = g
                .minimal()
                .iter()
                .filter_map(|&i| g.nodes()[i].column(p.col).last().map(|c| c.row))
                .max();
            ensure(highest == Some(h), || format!("column {} ceiling {h} vs {highest:?}\n{}", p.col, show()))?;
        }
    }
    let elapsed = t.elapsed();
    within(elapsed, Duration::from_secs(60))?;
    Ok(format!(
        "{} instances, largest poset {largest} nodes, 0 mismatches in {elapsed:?}",
        graphs.len()
    ))
}

fn random_chain(start: &Diagram, rng: &mut SplitMix64) -> Chain {
    let mut chain = Chain::new(start.clone());
    loop {
        let live = chain.end().live_rows();
        if live.is_empty() {
            return chain;
        }
        let row = live[rng.next_below(live.len() as u64) as usize];
        chain.push(row).expect("live rows are nontrivial");
    }
}

fn chain_invariants() -> Outcome {
    let graphs = sweep_graphs()?;
    let mut rng = SplitMix64::new(SWEEP.seed ^ 0x5eed);
    let (mut edges, mut chains) = (0usize, 0usize);
    for (root, g) in &graphs {
        let show = || root.to_cell_list();
        for e in g.edges() {
            edges += 1;
            let parent = &g.nodes()[e.parent];
            let child = &g.nodes()[e.child];
            let src = parent.kohnert_move(e.row).1.source().expect("cover edge is nontrivial");
            let topmost = parent.column(src.col).last() == Some(&src);
            let (before, after) = (parent.empty_count(), child.empty_count());
            let want = if topmost { before - 1 } else { before };
            ensure(after == want, || format!("empty {before} -> {after}, topmost {topmost}\n{}", show()))?;
        }

        let rooms: Vec<usize> = root.cells().iter().map(|&c| room(root, c).unwrap()).collect();
        let greedy = move_counts(solve_max(root).chain());
        for (cell, r) in root.cells().iter().zip(&rooms) {
            ensure(greedy[cell] == *r, || format!("greedy count {} vs room {r} at {cell}\n{}", greedy[cell], show()))?;
        }

        for _ in 0..RANDOM_CHAINS_PER_INSTANCE {
            chains += 1;
            let chain = random_chain(root, &mut rng);
            let counts = move_counts(&chain);
            ensure(counts.values().sum::<usize>() == chain.len(), || format!("count sum\n{}", show()))?;
            for (cell, r) in root.cells().iter().zip(&rooms) {
                ensure(counts[cell] <= *r, || format!("count {} > room {r} at {cell}\n{}", counts[cell], show()))?;
            }

            let mut tracker = LabelTracker::new(root);
            let mut prev = rooms.clone();
            for m in chain.moves() {
                tracker.apply(m.row());
                let current = tracker.tableau().diagram();
                for (k, &cell) in root.cells().iter().enumerate() {
                    let pos = tracker.position_of(cell).expect("every label is tracked");
                    let now = room(current, pos).unwrap();
                    ensure(now <= prev[k], || format!("room of {cell} grew {} -> {now}\n{}", prev[k], show()))?;
                    prev[k] = now;
                }
            }
        }
    }
    Ok(format!("{edges} edges, {chains} random chains, 0 violations"))
}

fn lowering_construction() -> Outcome {
    let base = lowering();
    let hat4 = d(&[(3, 1), (4, 1), (2, 2), (2, 3), (3, 3), (4, 3), (1, 4), (2, 4)]);
    let hat3 = d(&[(3, 1), (4, 1), (2, 2), (1, 3), (2, 3), (3, 3), (1, 4), (2, 4)]);
    let hat1 = d(&[(2, 1), (3, 1), (2, 2), (1, 3), (2, 3), (3, 3), (1, 4), (2, 4)]);
    ensure(dhat(&base, 4) == hat4, || format!("col 4:\n{}", dhat(&base, 4)))?;
    ensure(dhat(&base, 3) == hat3, || format!("col 3:\n{}", dhat(&base, 3)))?;
    ensure(dhat(&base, 2) == hat3, || format!("col 2:\n{}", dhat(&base, 2)))?;
    ensure(dhat(&base, 1) == hat1, || format!("col 1:\n{}", dhat(&base, 1)))?;
    ensure(hat1.is_minimal(), || "final stage is not minimal".into())?;
    Ok("four stages match, last is minimal".into())
}

fn determinism() -> Outcome {
    let run = || -> Result<Vec<String>, String> {
        let mut out = Vec::new();
        for root in [small(), large(), lowering(), random_diagram(5, 5, 0.4, 12345)] {
            if root.len() <= 10 {
                out.push(enumerate(&root, DEFAULT_NODE_LIMIT).map_err(|e| e.to_string())?.export_dot());
            }
            out.push(serde_json::to_string(&solve_max(&root)).map_err(|e| e.to_string())?);
            out.push(serde_json::to_string(&solve_min(&root)).map_err(|e| e.to_string())?);
        }
        for seed in [0, 1, 12345, u64::MAX] {
            out.push(random_diagram(6, 6, 0.5, seed).to_cell_list());
        }
        Ok(out)
    };
    let first = run()?;
    let second = std::thread::spawn(run).join().map_err(|_| "second run panicked".to_string())??;
    ensure(first == second, || "outputs differ between runs".into())?;
    let bytes: usize = first.iter().map(String::len).sum();
    Ok(format!("{} artifacts, {bytes} bytes identical", first.len()))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 6] = [
        ("golden small example", golden_small),
        ("golden large example", golden_large),
        ("oracle equivalence sweep", oracle_sweep),
        ("chain invariants", chain_invariants),
        ("justification construction", lowering_construction),
        ("determinism", determinism),
    ];
    let mut failed = 0;
    for (name, criterion) in criteria {
        match criterion() {
            Ok(detail) => println!("PASS  {name}: {detail}"),
            Err(detail) => {
                failed += 1;
                println!("FAIL  {name}: {detail}");
            }
        }
    }
    println!("acceptance: {} passed, {failed} failed", criteria.len() - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
