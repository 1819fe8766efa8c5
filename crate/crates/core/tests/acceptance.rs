//! Acceptance criteria. Every check is exact (zero tolerance); the two
//! timing budgets are pinned below. Run with `--nocapture` to see one
//! PASS/FAIL line per criterion.

mod common;

use std::io::Write;
use std::process::{Command, Stdio};
use std::time::{Duration, Instant};

use hosoya::dendrimer::{
    dendrimer_edge_hosoya_closed, dendrimer_edge_hyper_wiener_closed, dendrimer_edge_wiener_closed,
    generate_dendrimer, DendrimerParams,
};
use hosoya::graph::random_connected_graph;
use hosoya::indices::{
    edge_hosoya_polynomial, edge_hyper_wiener, edge_wiener, hosoya_polynomial, hyper_wiener_from_polynomial,
    wiener_from_polynomial,
};
use hosoya::tree::{
    edge_hosoya_from_hosoya, edge_hyper_wiener_from_hyper, edge_wiener_from_wiener, random_tree, trial_plan,
    tree_identity_holds, Tree,
};
use hosoya::{Graph, Polynomial};
use num_bigint::BigInt;
use rand::{Rng, SeedableRng};

const TREE_CORPUS_SIZE: usize = 500;
const TREE_MAX_N: usize = 200;
const TREE_CORPUS_SEED: u64 = 2024;
const TREE_CORPUS_BUDGET: Duration = Duration::from_secs(30);
const NON_TREE_RANDOM_GRAPHS: usize = 100;
const NON_TREE_MAX_N: usize = 40;
const LARGEST_DENDRIMER_BUDGET: Duration = Duration::from_secs(10);

type Check = Result<(), String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Check {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn tree_corpus() -> Vec<Tree> {
    trial_plan(TREE_MAX_N, TREE_CORPUS_SIZE, TREE_CORPUS_SEED)
        .into_iter()
        .map(|(n, seed)| random_tree(n, seed))
        .collect()
}

fn non_tree_corpus() -> Vec<Graph> {
    let mut graphs: Vec<Graph> = (3..=12).map(common::cycle).collect();
    graphs.extend((3..=7).map(common::complete));
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(11);
    for _ in 0..NON_TREE_RANDOM_GRAPHS {
        let n = rng.gen_range(3..=NON_TREE_MAX_N);
        let extra = rng.gen_range(1..=2 * n);
        graphs.push(random_connected_graph(n, extra, rng.gen()));
    }
    graphs
}

fn dendrimer_grid() -> Vec<DendrimerParams> {
    let mut out = Vec::new();
    for d in 3..=5 {
        for k in 0..=5 {
            out.push(DendrimerParams::new(k, d).unwrap());
        }
    }
    out
}

fn choose2(n: usize) -> BigInt {
    BigInt::from(n * n.saturating_sub(1) / 2)
}

fn criterion_1(trees: &[Tree]) -> Check {
    let start = Instant::now();
    for (i, t) in trees.iter().enumerate() {
        let shortcut = edge_hosoya_from_hosoya(&hosoya_polynomial(t), t.n()).map_err(|e| format!("tree {i}: {e}"))?;
        let line = edge_hosoya_polynomial(t);
        ensure(shortcut == line, || format!("tree {i} (n = {}): {shortcut} vs {line}", t.n()))?;
    }
    let elapsed = start.elapsed();
    ensure(elapsed < TREE_CORPUS_BUDGET, || format!("took {elapsed:?}"))
}

fn criterion_2(trees: &[Tree]) -> Check {
    for (i, t) in trees.iter().enumerate() {
        let h = hosoya_polynomial(t);
        let w = wiener_from_polynomial(&h);
        let ww = hyper_wiener_from_polynomial(&h).map_err(|e| e.to_string())?;
        let we = edge_wiener_from_wiener(&w, t.n()).map_err(|e| e.to_string())?;
        let wwe = edge_hyper_wiener_from_hyper(&ww, &w).map_err(|e| e.to_string())?;
        let (we_direct, wwe_direct) = (edge_wiener(t), edge_hyper_wiener(t));
        ensure(we == we_direct, || format!("tree {i}: W_e {we_direct} vs W - C(n,2) = {we}"))?;
        ensure(wwe == wwe_direct, || format!("tree {i}: WW_e {wwe_direct} vs WW - W = {wwe}"))?;
    }
    Ok(())
}

fn criterion_3(graphs: &[Graph]) -> Check {
    for (i, g) in graphs.iter().enumerate() {
        ensure(!g.is_tree(), || format!("graph {i} is a tree"))?;
        let direct = edge_hyper_wiener(g);
        let derived = hyper_wiener_from_polynomial(&edge_hosoya_polynomial(g)).map_err(|e| e.to_string())?;
        ensure(direct == derived, || format!("graph {i}: {direct} vs {derived}"))?;
    }
    Ok(())
}

fn criterion_4() -> Check {
    for p in dendrimer_grid() {
        let t = generate_dendrimer(p);
        let tag = format!("T({}, {})", p.k(), p.d());
        ensure(BigInt::from(t.n()) == p.vertex_count(), || format!("{tag}: vertex count"))?;
        let he = dendrimer_edge_hosoya_closed(p).map_err(|e| e.to_string())?;
        let we = dendrimer_edge_wiener_closed(p).map_err(|e| e.to_string())?;
        let wwe = dendrimer_edge_hyper_wiener_closed(p).map_err(|e| e.to_string())?;
        ensure(he == edge_hosoya_polynomial(&t), || format!("{tag}: H_e"))?;
        ensure(we == edge_wiener(&t), || format!("{tag}: W_e"))?;
        ensure(wwe == edge_hyper_wiener(&t), || format!("{tag}: WW_e"))?;
    }

    let p = DendrimerParams::new(2, 3).unwrap();
    let t = generate_dendrimer(p);
    ensure(t.n() == 10, || format!("T(2,3) has {} vertices", t.n()))?;
    let expected = Polynomial::from_i64s(&[9, 12, 12, 12]);
    ensure(edge_hosoya_polynomial(&t) == expected, || "T(2,3) brute H_e".into())?;
    ensure(dendrimer_edge_hosoya_closed(p).unwrap() == expected, || "T(2,3) closed H_e".into())?;
    for (value, what) in [
        (edge_wiener(&t), "brute W_e"),
        (dendrimer_edge_wiener_closed(p).unwrap(), "closed W_e"),
    ] {
        ensure(value == BigInt::from(72), || format!("T(2,3) {what} = {value}"))?;
    }
    for (value, what) in [
        (edge_hyper_wiener(&t), "brute WW_e"),
        (dendrimer_edge_hyper_wiener_closed(p).unwrap(), "closed WW_e"),
    ] {
        ensure(value == BigInt::from(120), || format!("T(2,3) {what} = {value}"))?;
    }

    let start = Instant::now();
    let p = DendrimerParams::new(5, 5).unwrap();
    let t = generate_dendrimer(p);
    // 1 + 5(4^5 - 1)/3 vertices, 5 * 4^4 = 1280 of them leaves.
    ensure(t.n() == 1706, || format!("T(5,5) has {} vertices", t.n()))?;
    ensure(p.leaf_count() == BigInt::from(1280), || "T(5,5) leaf count".into())?;
    let ok = dendrimer_edge_hosoya_closed(p).unwrap() == edge_hosoya_polynomial(&t)
        && dendrimer_edge_wiener_closed(p).unwrap() == edge_wiener(&t)
        && dendrimer_edge_hyper_wiener_closed(p).unwrap() == edge_hyper_wiener(&t);
    let elapsed = start.elapsed();
    ensure(ok, || "T(5,5) mismatch".into())?;
    ensure(elapsed < LARGEST_DENDRIMER_BUDGET, || format!("T(5,5) took {elapsed:?}"))
}

fn stdin_run(args: &[&str], input: &str) -> std::process::Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_hosoya"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.take().unwrap().write_all(input.as_bytes()).unwrap();
    child.wait_with_output().unwrap()
}

fn criterion_5() -> Check {
    let c3 = common::cycle(3);
    ensure(!tree_identity_holds(&c3), || "identity unexpectedly holds on C_3".into())?;
    let shifted = edge_hosoya_from_hosoya(&hosoya_polynomial(&c3), 3).unwrap();
    ensure(shifted == Polynomial::constant(3), || format!("(H - 3)/x = {shifted}"))?;
    ensure(edge_hosoya_polynomial(&c3) == Polynomial::from_i64s(&[3, 3]), || "H_e(C_3)".into())?;
    let out = stdin_run(&["edge-hosoya", "-", "--route", "tree-identity"], &c3.to_edge_list());
    ensure(out.status.code() == Some(2), || format!("exit status {:?}", out.status.code()))
}

fn criterion_6(trees: &[Tree], graphs: &[Graph]) -> Check {
    let dendrimers: Vec<Graph> = dendrimer_grid().into_iter().map(|p| generate_dendrimer(p).into_graph()).collect();
    let all = trees.iter().map(|t| t.graph()).chain(graphs).chain(&dendrimers);
    let mut count = 0;
    for g in all {
        let h1 = hosoya_polynomial(g).evaluate_at_one();
        ensure(h1 == choose2(g.n()) + g.n(), || format!("graph with n = {}: H(1) = {h1}", g.n()))?;
        count += 1;
    }
    ensure(count == trees.len() + graphs.len() + 18, || "corpus size".into())
}

fn criterion_7() -> Check {
    let args = ["verify", "--nmax", "100", "--trials", "50", "--seed", "1"];
    let a = stdin_run(&args, "");
    let b = stdin_run(&args, "");
    ensure(a.status.success() && b.status.success(), || "verify reported failures".into())?;
    ensure(a.stdout == b.stdout, || "outputs differ".into())?;
    ensure(a.stdout == b"{\"trees_checked\":50,\"failures\":[]}\n", || {
        String::from_utf8_lossy(&a.stdout).into_owned()
    })
}

#[test]
fn acceptance() {
    let trees = tree_corpus();
    let graphs = non_tree_corpus();
    let results = [
        ("1 edge-Hosoya shift on 500 random trees", criterion_1(&trees)),
        ("2 edge (hyper-)Wiener from vertex indices on trees", criterion_2(&trees)),
        ("3 edge-hyper-Wiener from H_e on non-trees", criterion_3(&graphs)),
        ("4 dendrimer closed forms, k <= 5, d in {3,4,5}", criterion_4()),
        ("5 negative control on C_3", criterion_5()),
        ("6 H(1) = C(n,2) + n on all corpora", criterion_6(&trees, &graphs)),
        ("7 deterministic verify output", criterion_7()),
    ];
    let mut failed = 0;
    for (name, result) in &results {
        match result {
            Ok(()) => println!("PASS criterion {name}"),
            Err(e) => {
                failed += 1;
                println!("FAIL criterion {name}: {e}");
            }
        }
    }
    assert_eq!(failed, 0, "{failed} acceptance criteria failed");
}
