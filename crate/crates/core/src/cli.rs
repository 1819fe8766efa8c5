//! Command-line front end.
//!
//! [`run`] does all the work and returns the exit status together with what
//! should be written to stdout and stderr, so the binary stays a thin shell.
//!
//! Exit status is 0 on success, 1 when a cross-check or identity check
//! fails, and 2 on invalid input or flags.

use std::fs;
use std::io::Read;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};

use crate::dendrimer::{
    dendrimer_edge_hosoya_closed, dendrimer_edge_hyper_wiener_closed, dendrimer_edge_wiener_closed,
    generate_dendrimer, DendrimerParams,
};
use crate::edgelist::parse_edge_list;
use crate::graph::Graph;
use crate::indices::{edge_hosoya_polynomial, edge_hyper_wiener, edge_wiener, hosoya_polynomial, IndexReport};
use crate::polynomial::Polynomial;
use crate::tree::{edge_hosoya_from_hosoya, verify_identities, Tree};

#[derive(Debug, Clone, Parser)]
#[command(name = "hosoya", version, about = "Hosoya polynomials and Wiener-type indices of graphs")]
pub struct CommandRequest {
    #[command(subcommand)]
    pub command: Command,
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    pub format: Format,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Text,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Route {
    /// BFS over the line graph.
    LineGraph,
    /// `(H - n)/x` from the Hosoya polynomial; trees only.
    TreeIdentity,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Emit {
    Edges,
    Polynomial,
    Indices,
}

#[derive(Debug, Clone, Subcommand)]
pub enum Command {
    /// All indices and both Hosoya polynomials, cross-checked by two routes.
    Indices { file: PathBuf },
    /// Hosoya polynomial.
    Hosoya { file: PathBuf },
    /// Edge-Hosoya polynomial.
    EdgeHosoya {
        file: PathBuf,
        #[arg(long, value_enum, default_value_t = Route::LineGraph)]
        route: Route,
    },
    /// Line graph as an edge list, with the edge each vertex stands for.
    Linegraph { file: PathBuf },
    /// Regular dendrimer T(k, d).
    Dendrimer {
        #[arg(long)]
        k: u32,
        #[arg(long, value_parser = clap::value_parser!(u32).range(3..))]
        d: u32,
        #[arg(long, value_enum, default_value_t = Emit::Indices)]
        emit: Emit,
        /// Compare closed forms against brute force on the generated tree.
        #[arg(long)]
        check: bool,
    },
    /// Check the tree identities on random trees.
    Verify {
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        nmax: u64,
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        trials: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

/// Result of one invocation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub status: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Outcome {
            status: 0,
            stdout,
            stderr: String::new(),
        }
    }

    fn with_status(status: i32, stdout: String, stderr: impl Into<String>) -> Self {
        Outcome {
            status,
            stdout,
            stderr: stderr.into(),
        }
    }

    fn usage(msg: impl std::fmt::Display) -> Self {
        Outcome::with_status(2, String::new(), format!("error: {msg}\n"))
    }
}

fn to_json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string(value).expect("serializable");
    s.push('\n');
    s
}

fn load(path: &PathBuf, stdin: &mut dyn Read) -> Result<Graph, Outcome> {
    let text = if path.as_os_str() == "-" {
        let mut buf = String::new();
        stdin
            .read_to_string(&mut buf)
            .map_err(|e| Outcome::usage(format!("<stdin>: {e}")))?;
        buf
    } else {
        fs::read_to_string(path).map_err(|e| Outcome::usage(format!("{}: {e}", path.display())))?
    };
    parse_edge_list(&text).map_err(|e| Outcome::usage(format!("{}: {e}", path.display())))
}

fn polynomial_output(p: &Polynomial, format: Format) -> String {
    match format {
        Format::Json => to_json(p),
        Format::Text => format!("{}\n{}\n", p.to_array_string(), p),
    }
}

/// Executes one request. `stdin` is read when a file argument is `-`.
pub fn run(request: &CommandRequest, stdin: &mut dyn Read) -> Outcome {
    let format = request.format;
    match &request.command {
        Command::Indices { file } => match load(file, stdin) {
            Ok(g) => indices(&g, format),
            Err(o) => o,
        },
        Command::Hosoya { file } => match load(file, stdin) {
            Ok(g) => Outcome::ok(polynomial_output(&hosoya_polynomial(&g), format)),
            Err(o) => o,
        },
        Command::EdgeHosoya { file, route } => match load(file, stdin) {
            Ok(g) => edge_hosoya(g, *route, format),
            Err(o) => o,
        },
        Command::Linegraph { file } => match load(file, stdin) {
            Ok(g) => linegraph(&g, format),
            Err(o) => o,
        },
        &Command::Dendrimer { k, d, emit, check } => dendrimer(k, d, emit, check, format),
        &Command::Verify { nmax, trials, seed } => verify(nmax as usize, trials as usize, seed, format),
    }
}

fn indices(g: &Graph, format: Format) -> Outcome {
    let report = IndexReport::compute(g);
    let discrepancies = report.verify();
    let status = if discrepancies.is_empty() { 0 } else { 1 };
    let stdout = match format {
        Format::Json => {
            let mut value = serde_json::to_value(&report).expect("serializable");
            value["discrepancies"] = serde_json::to_value(&discrepancies).expect("serializable");
            to_json(&value)
        }
        Format::Text => {
            let mut s = format!(
                "n: {}\nm: {}\nwiener: {}\nedge_wiener: {}\nhyper_wiener: {}\nedge_hyper_wiener: {}\nhosoya: {}\nedge_hosoya: {}\n",
                report.n,
                report.m,
                report.wiener,
                report.edge_wiener,
                report.hyper_wiener,
                report.edge_hyper_wiener,
                report.hosoya,
                report.edge_hosoya
            );
            for d in &discrepancies {
                s.push_str(&format!("discrepancy: {} direct {} derived {}\n", d.index, d.direct, d.derived));
            }
            s
        }
    };
    let stderr = if status == 0 {
        String::new()
    } else {
        "error: direct and derivative routes disagree\n".into()
    };
    Outcome::with_status(status, stdout, stderr)
}

fn edge_hosoya(g: Graph, route: Route, format: Format) -> Outcome {
    let p = match route {
        Route::LineGraph => edge_hosoya_polynomial(&g),
        Route::TreeIdentity => {
            let t = match Tree::new(g) {
                Ok(t) => t,
                Err(e) => return Outcome::usage(format!("--route tree-identity: {e}")),
            };
            edge_hosoya_from_hosoya(&hosoya_polynomial(&t), t.n()).expect("tree Hosoya polynomial has constant n")
        }
    };
    Outcome::ok(polynomial_output(&p, format))
}

fn linegraph(g: &Graph, format: Format) -> Outcome {
    let (lg, map) = match g.line_graph() {
        Ok(x) => x,
        Err(e) => return Outcome::usage(e),
    };
    let stdout = match format {
        Format::Json => {
            let vertices: Vec<Value> = map
                .iter()
                .enumerate()
                .map(|(i, e)| {
                    let (a, b) = e.endpoints();
                    json!({"id": lg.label(i), "edge": [g.label(a), g.label(b)]})
                })
                .collect();
            let edges: Vec<Value> = lg
                .edges()
                .iter()
                .map(|e| {
                    let (a, b) = e.endpoints();
                    json!([lg.label(a), lg.label(b)])
                })
                .collect();
            to_json(&json!({"vertices": vertices, "edges": edges}))
        }
        Format::Text => {
            let mut s = String::new();
            for (i, e) in map.iter().enumerate() {
                let (a, b) = e.endpoints();
                s.push_str(&format!("# {} = {} {}\n", lg.label(i), g.label(a), g.label(b)));
            }
            s.push_str(&lg.to_edge_list());
            s
        }
    };
    Outcome::ok(stdout)
}

fn dendrimer(k: u32, d: u32, emit: Emit, check: bool, format: Format) -> Outcome {
    let p = match DendrimerParams::new(k, d) {
        Ok(p) => p,
        Err(e) => return Outcome::usage(format!("--d: {e}")),
    };
    if emit == Emit::Edges {
        if check {
            return Outcome::usage("--check requires --emit polynomial or --emit indices");
        }
        return Outcome::ok(generate_dendrimer(p).to_edge_list());
    }

    let closed = (|| {
        Ok::<_, crate::dendrimer::DendrimerError>((
            dendrimer_edge_hosoya_closed(p)?,
            dendrimer_edge_wiener_closed(p)?,
            dendrimer_edge_hyper_wiener_closed(p)?,
        ))
    })();
    let (he, we, wwe) = match closed {
        Ok(v) => v,
        Err(e) => return Outcome::with_status(1, String::new(), format!("error: {e}\n")),
    };

    let mut out = serde_json::Map::new();
    out.insert("k".into(), json!(k));
    out.insert("d".into(), json!(d));
    if emit == Emit::Indices {
        let m = p.vertex_count() - 1u32;
        out.insert("n".into(), json!(p.vertex_count().to_string()));
        out.insert("m".into(), json!(m.to_string()));
    }
    out.insert("edge_hosoya".into(), serde_json::to_value(&he).expect("serializable"));
    if emit == Emit::Indices {
        out.insert("edge_wiener".into(), json!(we.to_string()));
        out.insert("edge_hyper_wiener".into(), json!(wwe.to_string()));
    }

    let mut status = 0;
    if check {
        let t = generate_dendrimer(p);
        let brute_he = edge_hosoya_polynomial(&t);
        let mut agrees = brute_he == he;
        let mut brute = serde_json::Map::new();
        brute.insert("edge_hosoya".into(), serde_json::to_value(&brute_he).expect("serializable"));
        if emit == Emit::Indices {
            let (bw, bww) = (edge_wiener(&t), edge_hyper_wiener(&t));
            agrees &= bw == we && bww == wwe;
            brute.insert("edge_wiener".into(), json!(bw.to_string()));
            brute.insert("edge_hyper_wiener".into(), json!(bww.to_string()));
        }
        if !agrees {
            status = 1;
        }
        out.insert("check".into(), json!({"agrees": agrees, "brute_force": brute}));
    }

    let stdout = match format {
        Format::Json => to_json(&Value::Object(out)),
        Format::Text => {
            let mut s = format!("k: {k}\nd: {d}\n");
            if emit == Emit::Indices {
                s.push_str(&format!("n: {}\n", p.vertex_count()));
            }
            s.push_str(&format!("edge_hosoya: {he}\n"));
            if emit == Emit::Indices {
                s.push_str(&format!("edge_wiener: {we}\nedge_hyper_wiener: {wwe}\n"));
            }
            if check {
                s.push_str(&format!("check: {}\n", if status == 0 { "agrees" } else { "MISMATCH" }));
            }
            s
        }
    };
    let stderr = if status == 0 {
        String::new()
    } else {
        "error: closed forms disagree with brute force\n".into()
    };
    Outcome::with_status(status, stdout, stderr)
}

fn verify(nmax: usize, trials: usize, seed: u64, format: Format) -> Outcome {
    let report = verify_identities(nmax, trials, seed);
    let status = if report.passed() { 0 } else { 1 };
    let stdout = match format {
        Format::Json => to_json(&report),
        Format::Text => {
            let mut s = format!("trees checked: {}\nfailures: {}\n", report.trees_checked, report.failures.len());
            for f in &report.failures {
                s.push_str(&format!(
                    "trial {} (n = {}, seed = {}): {} expected {} got {}\n",
                    f.trial, f.n, f.seed, f.identity, f.expected, f.actual
                ));
            }
            s
        }
    };
    Outcome::with_status(status, stdout, String::new())
}
