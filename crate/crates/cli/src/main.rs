//! `wrdlab` command-line front end.
//!
//! Exit codes: 0 success, 1 usage or parse error, 2 cap exceeded or refusal.

use anyhow::{bail, Context};
use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};
use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;
use wrdlab::exact::{gamma_exact, gamma_r_bruteforce, gamma_r_exact, DEFAULT_CAP};
use wrdlab::generate::{random_graph, random_p4sparse};
use wrdlab::p4sparse::{decompose, gamma_r_p4sparse_with};
use wrdlab::reductions::{
    attach_p4, construct_a1, construct_a2, construct_a3, RbdInstance, ReducedInstance, Rxc3Instance,
};
use wrdlab::{
    approx, par, verify_wrd, Error, Graph, Labeling, Parallelism, SolverConfig, WrdVerdict,
};

const SCHEMA: &str = "wrdlab/1";

#[derive(Parser)]
#[command(
    name = "wrdlab",
    version,
    about = "Weak Roman domination solver, verifier and instance generator"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compute γr of a graph with a certificate labeling.
    Solve {
        /// Edge-list file: header `n m`, then one `u v` line per edge.
        graph: PathBuf,
        #[arg(long, value_enum, default_value_t = Method::Exact)]
        method: Method,
        /// Largest vertex count the exact search accepts.
        #[arg(long, default_value_t = DEFAULT_CAP)]
        cap: usize,
        /// Run the label-lowering pass on the approximation.
        #[arg(long)]
        improve: bool,
        /// Disable the parallel search.
        #[arg(long)]
        sequential: bool,
    },
    /// Check a labeling against the WRD conditions.
    Verify {
        #[arg(long)]
        graph: PathBuf,
        /// Digits 0/1/2 separated by whitespace, or JSON `{"labels": [...]}`.
        #[arg(long)]
        labels: PathBuf,
    },
    /// Write a generated instance into a directory.
    Generate {
        #[arg(long, value_enum)]
        kind: Kind,
        #[arg(long, default_value_t = 1)]
        q: usize,
        #[arg(long, default_value_t = 10)]
        n: usize,
        /// Edge density for random graphs and red-blue instances.
        #[arg(long, default_value_t = 0.5)]
        p: f64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Red and blue side sizes and threshold for a random a3 source.
        #[arg(long, default_value_t = 3)]
        red: usize,
        #[arg(long, default_value_t = 3)]
        blue: usize,
        #[arg(long, default_value_t = 1)]
        k: usize,
        /// Built-in source instance for a1/a2 instead of a random one.
        #[arg(long, value_enum)]
        preset: Option<Preset>,
        /// Source instance file: RXC3 text for a1/a2, red-blue text for a3,
        /// graph edge list for p4attach.
        #[arg(long)]
        input: Option<PathBuf>,
        #[arg(long)]
        out: PathBuf,
    },
    /// Tabulate γ, γr and the approximation over a batch of graphs.
    Compare {
        /// Edge-list files.
        graphs: Vec<PathBuf>,
        /// Also add this many random graphs.
        #[arg(long, default_value_t = 0)]
        random: usize,
        #[arg(long, default_value_t = 8)]
        n: usize,
        #[arg(long, default_value_t = 0.4)]
        p: f64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(
            long,
            value_enum,
            value_delimiter = ',',
            default_value = "gamma,exact,approx"
        )]
        methods: Vec<Column>,
        #[arg(long, default_value_t = DEFAULT_CAP)]
        cap: usize,
        #[arg(long)]
        csv: bool,
    },
    /// Recognize a graph class and print its decomposition tree.
    Recognize {
        graph: PathBuf,
        #[arg(long, required = true)]
        p4sparse: bool,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Method {
    Exact,
    Bruteforce,
    P4sparse,
    Approx,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Kind {
    A1,
    A2,
    A3,
    P4attach,
    Rxc3,
    RandomP4sparse,
    RandomGraph,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Preset {
    Forced,
    ExampleOne,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Column {
    Gamma,
    Exact,
    Bruteforce,
    P4sparse,
    Approx,
}

impl Column {
    fn name(self) -> &'static str {
        match self {
            Column::Gamma => "gamma",
            Column::Exact => "gamma_r",
            Column::Bruteforce => "bruteforce",
            Column::P4sparse => "p4sparse",
            Column::Approx => "approx",
        }
    }
}

/// Library errors that are refusals rather than bad input.
fn exit_code(err: &anyhow::Error) -> u8 {
    match err.downcast_ref::<Error>() {
        Some(Error::CapExceeded { .. } | Error::NotP4Sparse) => 2,
        _ => 1,
    }
}

fn error_kind(err: &anyhow::Error) -> &'static str {
    match err.downcast_ref::<Error>() {
        Some(Error::CapExceeded { .. }) => "cap_exceeded",
        Some(Error::NotP4Sparse) => "not_p4_sparse",
        Some(Error::Parse { .. }) => "parse",
        Some(Error::SizeMismatch { .. }) => "size_mismatch",
        Some(_) => "invalid",
        None => "io",
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() {
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            };
        }
    };
    match run(cli.command) {
        Ok(out) => {
            println!("{out}");
            ExitCode::SUCCESS
        }
        Err(err) => {
            let report = json!({
                "schema": SCHEMA,
                "error": { "kind": error_kind(&err), "message": format!("{err:#}") },
            });
            println!("{}", serde_json::to_string_pretty(&report).unwrap());
            eprintln!("wrdlab: {err:#}");
            ExitCode::from(exit_code(&err))
        }
    }
}

fn pretty(v: &Value) -> String {
    serde_json::to_string_pretty(v).expect("JSON values always serialize")
}

fn read(path: &Path) -> anyhow::Result<String> {
    fs::read_to_string(path).with_context(|| format!("cannot read {}", path.display()))
}

fn read_graph(path: &Path) -> anyhow::Result<Graph> {
    Graph::from_edge_list(&read(path)?)
        .map_err(anyhow::Error::from)
        .with_context(|| format!("in {}", path.display()))
}

fn read_labels(path: &Path) -> anyhow::Result<Labeling> {
    let text = read(path)?;
    if text.trim_start().starts_with('{') {
        #[derive(serde::Deserialize)]
        struct Labels {
            labels: Labeling,
        }
        let parsed: Labels =
            serde_json::from_str(&text).with_context(|| format!("in {}", path.display()))?;
        return Ok(parsed.labels);
    }
    Labeling::from_text(&text)
        .map_err(anyhow::Error::from)
        .with_context(|| format!("in {}", path.display()))
}

fn run(command: Command) -> anyhow::Result<String> {
    match command {
        Command::Solve {
            graph,
            method,
            cap,
            improve,
            sequential,
        } => {
            let g = read_graph(&graph)?;
            let mut cfg = SolverConfig::with_cap(cap);
            if sequential {
                cfg = cfg.sequential();
            }
            solve(&g, method, &cfg, improve).map(|v| pretty(&v))
        }
        Command::Verify { graph, labels } => {
            let g = read_graph(&graph)?;
            let f = read_labels(&labels)?;
            verify(&g, &f).map(|v| pretty(&v))
        }
        Command::Generate {
            kind,
            q,
            n,
            p,
            seed,
            red,
            blue,
            k,
            preset,
            input,
            out,
        } => {
            let spec = GenerateSpec {
                kind,
                q,
                n,
                p,
                seed,
                red,
                blue,
                k,
                preset,
                input,
            };
            generate(&spec, &out).map(|v| pretty(&v))
        }
        Command::Compare {
            graphs,
            random,
            n,
            p,
            seed,
            methods,
            cap,
            csv,
        } => {
            let mut batch = Vec::new();
            for path in &graphs {
                batch.push((path.display().to_string(), read_graph(path)?));
            }
            for i in 0..random as u64 {
                batch.push((
                    format!("gnp:n={n},p={p},seed={}", seed + i),
                    random_graph(n, p, seed + i),
                ));
            }
            if batch.is_empty() {
                bail!("compare needs graph files or --random");
            }
            compare(&batch, &methods, cap, csv)
        }
        Command::Recognize { graph, p4sparse } => {
            debug_assert!(p4sparse);
            let g = read_graph(&graph)?;
            let tree = decompose(&g);
            Ok(pretty(&json!({
                "schema": SCHEMA,
                "class": "p4sparse",
                "member": tree.is_some(),
                "tree": tree,
            })))
        }
    }
}

fn solve(g: &Graph, method: Method, cfg: &SolverConfig, improve: bool) -> anyhow::Result<Value> {
    let start = Instant::now();
    let mut extra = serde_json::Map::new();
    let (name, value, f) = match method {
        Method::Exact => {
            let (w, f) = gamma_r_exact(g, cfg)?;
            ("exact", w, f)
        }
        Method::Bruteforce => {
            let (w, f) = gamma_r_bruteforce(g)?;
            ("bruteforce", w, f)
        }
        Method::P4sparse => {
            let (w, f) = gamma_r_p4sparse_with(g, cfg.parallelism)?;
            ("p4sparse", w, f)
        }
        Method::Approx => {
            let set = approx::greedy_dominating_set(g);
            let mut f = Labeling::doubled(&set);
            if improve {
                f = approx::improve(g, &f);
                extra.insert("improved".into(), json!(true));
            }
            extra.insert("dominating_set".into(), json!(set.to_vec()));
            extra.insert(
                "ratio_bound".into(),
                json!(approx::ratio_bound(g.max_degree())),
            );
            if g.n() <= cfg.cap.min(wrdlab::exact::MAX_CAP) {
                let (exact, _) = gamma_r_exact(g, cfg)?;
                extra.insert("exact_value".into(), json!(exact));
                extra.insert(
                    "ratio".into(),
                    json!(f.weight() as f64 / exact.max(1) as f64),
                );
            }
            ("approx", f.weight(), f)
        }
    };
    let mut out = json!({
        "schema": SCHEMA,
        "method": name,
        "n": g.n(),
        "value": value,
        "certificate": f,
        "elapsed_ms": start.elapsed().as_secs_f64() * 1e3,
    });
    out.as_object_mut().unwrap().extend(extra);
    Ok(out)
}

fn verify(g: &Graph, f: &Labeling) -> anyhow::Result<Value> {
    let verdict = verify_wrd(g, f)?;
    let mut out = json!({
        "schema": SCHEMA,
        "is_wrd": verdict.is_wrd(),
        "weight": f.weight(),
    });
    let obj = out.as_object_mut().unwrap();
    match verdict {
        WrdVerdict::Wrd(plan) => {
            obj.insert("defense_plan".into(), json!(plan.moves()));
        }
        WrdVerdict::Undefended(s) => {
            obj.insert("undefended".into(), json!(s.to_vec()));
        }
        WrdVerdict::Indefensible { attacked } => {
            obj.insert("failing_attack".into(), json!(attacked));
        }
    }
    Ok(out)
}

struct GenerateSpec {
    kind: Kind,
    q: usize,
    n: usize,
    p: f64,
    seed: u64,
    red: usize,
    blue: usize,
    k: usize,
    preset: Option<Preset>,
    input: Option<PathBuf>,
}

fn rxc3_source(spec: &GenerateSpec) -> anyhow::Result<Rxc3Instance> {
    Ok(match (&spec.input, spec.preset) {
        (Some(path), _) => Rxc3Instance::from_text(&read(path)?)?,
        (None, Some(Preset::Forced)) => Rxc3Instance::forced(),
        (None, Some(Preset::ExampleOne)) => Rxc3Instance::example_one(),
        (None, None) => Rxc3Instance::random(spec.q, spec.seed)?,
    })
}

fn write(dir: &Path, name: &str, contents: &str, written: &mut Vec<String>) -> anyhow::Result<()> {
    let path = dir.join(name);
    fs::write(&path, contents).with_context(|| format!("cannot write {}", path.display()))?;
    written.push(name.to_string());
    Ok(())
}

fn generate(spec: &GenerateSpec, out: &Path) -> anyhow::Result<Value> {
    fs::create_dir_all(out).with_context(|| format!("cannot create {}", out.display()))?;
    let mut files = Vec::new();
    let reduced: Option<ReducedInstance> = match spec.kind {
        Kind::A1 => Some(construct_a1(&rxc3_source(spec)?)?),
        Kind::A2 => Some(construct_a2(&rxc3_source(spec)?)?),
        Kind::A3 => {
            let inst = match &spec.input {
                Some(path) => RbdInstance::from_text(&read(path)?)?,
                None => RbdInstance::random(spec.red, spec.blue, spec.p, spec.k, spec.seed)?,
            };
            Some(construct_a3(&inst)?)
        }
        _ => None,
    };
    let mut summary = json!({ "schema": SCHEMA, "seed": spec.seed });
    let obj = summary.as_object_mut().unwrap();
    let graph = if let Some(h) = &reduced {
        write(out, "witness.json", &pretty(&json!(h.witness)), &mut files)?;
        write(
            out,
            "threshold.txt",
            &format!("{}\n", h.threshold),
            &mut files,
        )?;
        write(out, "roles.txt", &(h.roles.join("\n") + "\n"), &mut files)?;
        write(out, "instance.json", &pretty(&json!(h)), &mut files)?;
        obj.insert("threshold".into(), json!(h.threshold));
        Some(h.graph.clone())
    } else {
        match spec.kind {
            Kind::P4attach => {
                let path = spec
                    .input
                    .as_ref()
                    .context("p4attach needs --input GRAPH")?;
                let (h, roles) = attach_p4(&read_graph(path)?);
                write(out, "roles.txt", &(roles.join("\n") + "\n"), &mut files)?;
                Some(h)
            }
            Kind::Rxc3 => {
                let inst = rxc3_source(spec)?;
                write(out, "instance.txt", &inst.to_text(), &mut files)?;
                write(out, "instance.json", &pretty(&json!(inst)), &mut files)?;
                None
            }
            Kind::RandomP4sparse => {
                if spec.n == 0 {
                    bail!("--n must be at least 1");
                }
                Some(random_p4sparse(spec.n, spec.seed))
            }
            Kind::RandomGraph => Some(random_graph(spec.n, spec.p, spec.seed)),
            Kind::A1 | Kind::A2 | Kind::A3 => unreachable!("handled above"),
        }
    };
    if let Some(g) = graph {
        write(out, "graph.txt", &g.to_edge_list(), &mut files)?;
        obj.insert("n".into(), json!(g.n()));
        obj.insert("m".into(), json!(g.m()));
    }
    obj.insert("files".into(), json!(files));
    Ok(summary)
}

/// One table cell: a value or the reason it is missing.
fn cell(r: wrdlab::Result<usize>) -> String {
    match r {
        Ok(v) => v.to_string(),
        Err(Error::CapExceeded { .. }) => "cap".into(),
        Err(Error::NotP4Sparse) => "refused".into(),
        Err(e) => format!("error: {e}"),
    }
}

fn compare(
    batch: &[(String, Graph)],
    methods: &[Column],
    cap: usize,
    csv: bool,
) -> anyhow::Result<String> {
    // instances run concurrently; each search inside stays sequential
    let cfg = SolverConfig::with_cap(cap).sequential();
    let rows = par::map(Parallelism::default(), batch, |(name, g)| {
        let mut row = vec![name.clone(), g.n().to_string(), g.max_degree().to_string()];
        let mut exact = None;
        let mut approx_weight = None;
        for &m in methods {
            let value = match m {
                Column::Gamma => gamma_exact(g, &cfg).map(|r| r.0),
                Column::Exact => gamma_r_exact(g, &cfg).map(|r| r.0),
                Column::Bruteforce => gamma_r_bruteforce(g).map(|r| r.0),
                Column::P4sparse => gamma_r_p4sparse_with(g, Parallelism::Sequential).map(|r| r.0),
                Column::Approx => Ok(approx::approx_wrd(g).weight()),
            };
            if let Ok(v) = &value {
                match m {
                    Column::Exact | Column::Bruteforce | Column::P4sparse => {
                        exact = exact.or(Some(*v))
                    }
                    Column::Approx => approx_weight = Some(*v),
                    Column::Gamma => {}
                }
            }
            row.push(cell(value));
        }
        let ratio = match (approx_weight, exact) {
            (Some(a), Some(e)) if e > 0 => format!("{:.3}", a as f64 / e as f64),
            _ => "-".into(),
        };
        row.push(ratio);
        row.push(format!("{:.3}", approx::ratio_bound(g.max_degree())));
        row
    });
    let mut header = vec!["instance".to_string(), "n".into(), "max_degree".into()];
    header.extend(methods.iter().map(|m| m.name().to_string()));
    header.push("ratio".into());
    header.push("bound".into());

    if csv {
        let mut w = csv::Writer::from_writer(Vec::new());
        w.write_record(&header)?;
        for row in &rows {
            w.write_record(row)?;
        }
        let bytes = w.into_inner().map_err(|e| anyhow::anyhow!("{e}"))?;
        return Ok(String::from_utf8(bytes)?.trim_end().to_string());
    }
    let widths: Vec<usize> = (0..header.len())
        .map(|i| {
            rows.iter()
                .map(|r| r[i].len())
                .chain([header[i].len()])
                .max()
                .unwrap()
        })
        .collect();
    let line = |r: &[String]| {
        r.iter()
            .zip(&widths)
            .map(|(c, w)| format!("{c:<w$}"))
            .collect::<Vec<_>>()
            .join("  ")
            .trim_end()
            .to_string()
    };
    let mut out = vec![line(&header)];
    out.extend(rows.iter().map(|r| line(r)));
    Ok(out.join("\n"))
}
