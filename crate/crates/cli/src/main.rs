use std::fs;
use std::io::{self, Read, Write};
use std::ops::RangeInclusive;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use linkgraph::coloring::{exact_chromatic, greedy_coloring, is_proper, recursive_chromatic_bound, Coloring};
use linkgraph::construction::{
    arc_digraph, iterated_line_digraph, link_graph, link_graph_connected, path_graph, LabeledGraph,
};
use linkgraph::export;
use linkgraph::harness::{default_corpus, parse_generator, verify_suite, Corpus, Instance, DEFAULT_SEED};
use linkgraph::minors::hadwiger_lower_bound;
use linkgraph::multigraph::{to_dot, to_edge_list, Multigraph};
use linkgraph::{Error, Limits};

#[derive(Parser)]
#[command(name = "linkgraph", version, about = "Link graphs, path graphs and arc digraphs of multigraphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone)]
struct Common {
    /// Largest number of links any single enumeration may produce.
    #[arg(long, default_value_t = Limits::default().links)]
    limit: usize,
    /// Largest graph handed to the exact chromatic oracle.
    #[arg(long, default_value_t = Limits::default().chromatic_oracle)]
    oracle_cap: usize,
    /// Largest graph handed to the exact Hadwiger oracle.
    #[arg(long, default_value_t = Limits::default().hadwiger_oracle)]
    hadwiger_cap: usize,
    /// Write the output here instead of standard output.
    #[arg(long)]
    out: Option<PathBuf>,
}

impl Common {
    fn limits(&self) -> Limits {
        Limits { links: self.limit, chromatic_oracle: self.oracle_cap, hadwiger_oracle: self.hadwiger_cap }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Dot,
    Edgelist,
}

#[derive(Clone, Copy, ValueEnum)]
enum Kind {
    /// The ell-link graph.
    Link,
    /// The ell-path graph.
    Path,
    /// The ell-arc digraph.
    Arc,
    /// The ell-fold iterated line digraph.
    Iterated,
}

#[derive(Clone, Copy, ValueEnum)]
enum Method {
    Exact,
    Recursive,
    Greedy,
}

#[derive(Subcommand)]
enum Command {
    /// Build a derived graph and print it.
    Build {
        #[arg(long, default_value_t = 1)]
        ell: usize,
        #[arg(long, value_enum, default_value_t = Kind::Link)]
        kind: Kind,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
        #[command(flatten)]
        common: Common,
        /// Edge-list file, `-` for standard input, or `@spec` for a generator.
        input: String,
    },
    /// Counts, regularity and connectivity of link graphs.
    Stats {
        /// A single value or an inclusive range such as `0..4`.
        #[arg(long, default_value = "0..3")]
        ell: String,
        #[command(flatten)]
        common: Common,
        input: String,
    },
    /// Colour a link graph.
    Color {
        #[arg(long, default_value_t = 1)]
        ell: usize,
        #[arg(long, value_enum, default_value_t = Method::Recursive)]
        method: Method,
        #[command(flatten)]
        common: Common,
        input: String,
    },
    /// Find a verified complete minor of a link graph.
    Minor {
        #[arg(long, default_value_t = 1)]
        ell: usize,
        #[command(flatten)]
        common: Common,
        input: String,
    },
    /// Check claims on the default corpus or on the given inputs.
    Verify {
        /// Comma-separated claim ids or prefixes, such as `Obs3.1,Thm1`.
        #[arg(long, value_delimiter = ',')]
        claims: Option<Vec<String>>,
        /// A single value or an inclusive range such as `1..4`.
        #[arg(long, default_value = "0..5")]
        ell: String,
        /// Seed for the random instances of the default corpus.
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
        /// Keep per-record runtimes in the report.
        #[arg(long)]
        timing: bool,
        #[command(flatten)]
        common: Common,
        inputs: Vec<String>,
    },
    /// Print a generated multigraph.
    Gen {
        /// Generator spec, e.g. `dipole:3`, `kbip:2,3`, `petersen`, `random:7:8:14`.
        spec: String,
        #[arg(long, value_enum, default_value_t = Format::Edgelist)]
        format: Format,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

/// An error carrying its exit code.
struct Failure {
    code: u8,
    message: String,
    diagnostic: Option<Value>,
}

impl Failure {
    fn usage(message: impl Into<String>) -> Failure {
        Failure { code: 2, message: message.into(), diagnostic: None }
    }

    fn input(message: impl Into<String>) -> Failure {
        Failure { code: 1, message: message.into(), diagnostic: None }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Failure {
        let message = e.to_string();
        match e {
            Error::LimitExceeded { count, limit } => Failure {
                code: 3,
                diagnostic: Some(json!({ "error": "limit_exceeded", "message": message, "count": count, "limit": limit })),
                message,
            },
            Error::OracleTooLarge { size, cap } => Failure {
                code: 3,
                diagnostic: Some(json!({ "error": "oracle_too_large", "message": message, "size": size, "cap": cap })),
                message,
            },
            _ => Failure::input(message),
        }
    }
}

type CliResult<T> = std::result::Result<T, Failure>;

fn parse_ells(text: &str) -> CliResult<RangeInclusive<usize>> {
    let bad = || Failure::usage(format!("--ell expects N or A..B, got {text:?}"));
    let num = |s: &str| s.trim().parse::<usize>().map_err(|_| bad());
    let range = match text.split_once("..") {
        Some((a, b)) => num(a)?..=num(b.trim_start_matches('='))?,
        None => {
            let n = num(text)?;
            n..=n
        }
    };
    if range.is_empty() {
        return Err(bad());
    }
    Ok(range)
}

fn load(input: &str) -> CliResult<Instance> {
    if let Some(spec) = input.strip_prefix('@') {
        return parse_generator(spec).map_err(|e| Failure::usage(e.to_string()));
    }
    let text = if input == "-" {
        let mut s = String::new();
        io::stdin().read_to_string(&mut s).map_err(|e| Failure::input(format!("standard input: {e}")))?;
        s
    } else {
        fs::read_to_string(input).map_err(|e| Failure::input(format!("{input}: {e}")))?
    };
    let name = Path::new(input).file_name().map_or(input.to_string(), |n| n.to_string_lossy().into_owned());
    Instance::from_edge_list(name, &text).map_err(|e| Failure::input(format!("{input}: {e}")))
}

fn emit(out: Option<&Path>, text: &str) -> CliResult<()> {
    match out {
        Some(p) => fs::write(p, text).map_err(|e| Failure::input(format!("{}: {e}", p.display()))),
        None => io::stdout().write_all(text.as_bytes()).map_err(|e| Failure::input(e.to_string())),
    }
}

fn pretty(v: &Value) -> String {
    serde_json::to_string_pretty(v).expect("JSON values serialise") + "\n"
}

fn render_graph(h: &LabeledGraph<'_>, format: Format) -> String {
    match format {
        Format::Json => pretty(&export::graph_json(h)),
        Format::Dot => export::graph_dot(h),
        Format::Edgelist => export::graph_edgelist(h),
    }
}

fn build(ell: usize, kind: Kind, format: Format, common: &Common, input: &str) -> CliResult<()> {
    let g = load(input)?.graph;
    let limits = common.limits();
    let text = match kind {
        Kind::Link => render_graph(&link_graph(&g, ell, limits.links)?, format),
        Kind::Path => render_graph(&path_graph(&g, ell, limits.links)?, format),
        Kind::Arc | Kind::Iterated => {
            let d = if matches!(kind, Kind::Arc) {
                arc_digraph(&g, ell, limits.links)?
            } else {
                iterated_line_digraph(&g, ell, limits.links)?
            };
            match format {
                Format::Json => pretty(&export::digraph_json(&d, &g)),
                Format::Dot => export::digraph_dot(&d, &g),
                Format::Edgelist => return Err(Failure::usage("digraphs have no edge-list format")),
            }
        }
    };
    emit(common.out.as_deref(), &text)
}

fn stats(ells: RangeInclusive<usize>, common: &Common, input: &str) -> CliResult<()> {
    let g = load(input)?.graph;
    let limits = common.limits();
    let mut levels = Vec::new();
    for ell in ells {
        let h = link_graph(&g, ell, limits.links)?;
        let connected = h.underlying_simple().is_connected();
        levels.push(json!({
            "ell": ell,
            "order": h.order(),
            "size": h.size(),
            "regular_degree": h.regular_degree(),
            "max_multiplicity": h.max_multiplicity(),
            "connected": connected,
            "hub_criterion": link_graph_connected(&g, ell, limits.links)?,
        }));
    }
    let v = json!({
        "order": g.order(),
        "size": g.size(),
        "max_degree": g.max_degree(),
        "degeneracy": g.degeneracy(),
        "girth": g.girth(),
        "connected": g.is_connected(),
        "biconnected": g.is_biconnected(),
        "levels": levels,
    });
    emit(common.out.as_deref(), &pretty(&v))
}

fn color(ell: usize, method: Method, common: &Common, input: &str) -> CliResult<()> {
    let g = load(input)?.graph;
    let limits = common.limits();
    let h = link_graph(&g, ell, limits.links)?;
    let simple = h.underlying_simple();
    let (name, coloring, extra): (&str, Coloring, Value) = match method {
        Method::Exact => {
            let (_, c) = exact_chromatic(&simple, limits.chromatic_oracle)?;
            ("exact", c, json!({}))
        }
        Method::Greedy => ("greedy", greedy_coloring(&simple), json!({})),
        Method::Recursive => {
            let rc = recursive_chromatic_bound(&g, ell, &limits)?;
            ("recursive", rc.coloring, json!({ "chain": rc.chain, "base_exact": rc.base_exact }))
        }
    };
    let proper = is_proper(&simple, &coloring)?;
    let mut v = json!({
        "ell": ell,
        "method": name,
        "colours": coloring.t(),
        "proper": proper,
        "coloring": export::coloring_json(&h, &coloring),
    });
    if let Value::Object(m) = extra {
        for (k, x) in m {
            v[k] = x;
        }
    }
    emit(common.out.as_deref(), &pretty(&v))
}

fn minor(ell: usize, common: &Common, input: &str) -> CliResult<()> {
    let g = load(input)?.graph;
    let limits = common.limits();
    let h = link_graph(&g, ell, limits.links)?;
    let b = hadwiger_lower_bound(&g, ell, &limits)?;
    let v = json!({
        "ell": ell,
        "bound": b.bound,
        "route": format!("{:?}", b.route),
        "routes": b.routes.iter().map(|(r, k)| (format!("{r:?}"), json!(k))).collect::<serde_json::Map<_, _>>(),
        "eta_g": b.eta_g,
        "degeneracy": b.degeneracy,
        "witness": export::witness_json(&h, &b.witness),
    });
    emit(common.out.as_deref(), &pretty(&v))
}

fn verify(
    claims: Option<Vec<String>>,
    ells: RangeInclusive<usize>,
    seed: u64,
    timing: bool,
    common: &Common,
    inputs: &[String],
) -> CliResult<bool> {
    let corpus = if inputs.is_empty() {
        Corpus { ells, ..default_corpus(seed) }
    } else {
        let instances = inputs.iter().map(|i| load(i)).collect::<CliResult<Vec<_>>>()?;
        Corpus { seed, instances, ells }
    };
    let report = verify_suite(&corpus, claims.as_deref(), &common.limits());
    emit(common.out.as_deref(), &report.to_json(timing))?;
    let t = report.tally();
    eprintln!("{} passed, {} failed, {} skipped", t.pass, t.fail, t.skip);
    Ok(report.all_pass())
}

fn gen(spec: &str, format: Format, out: Option<&Path>) -> CliResult<()> {
    let g: Multigraph = parse_generator(spec).map_err(|e| Failure::usage(e.to_string()))?.graph;
    let text = match format {
        Format::Edgelist => to_edge_list(&g),
        Format::Dot => to_dot(&g),
        Format::Json => pretty(&json!({
            "vertices": g.vertex_ids().iter().map(|v| v.0.clone()).collect::<Vec<_>>(),
            "edges": (0..g.size()).map(|e| {
                let (a, b) = g.endpoints(e);
                json!([g.edge_id(e).0, g.vertex_id(a).0, g.vertex_id(b).0])
            }).collect::<Vec<_>>(),
        })),
    };
    emit(out, &text)
}

fn run(cli: Cli) -> CliResult<bool> {
    match cli.command {
        Command::Build { ell, kind, format, common, input } => build(ell, kind, format, &common, &input)?,
        Command::Stats { ell, common, input } => stats(parse_ells(&ell)?, &common, &input)?,
        Command::Color { ell, method, common, input } => color(ell, method, &common, &input)?,
        Command::Minor { ell, common, input } => minor(ell, &common, &input)?,
        Command::Verify { claims, ell, seed, timing, common, inputs } => {
            return verify(claims, parse_ells(&ell)?, seed, timing, &common, &inputs)
        }
        Command::Gen { spec, format, out } => gen(&spec, format, out.as_deref())?,
    }
    Ok(true)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(f) => {
            match f.diagnostic {
                Some(d) => eprintln!("{}", serde_json::to_string(&d).expect("JSON values serialise")),
                None => eprintln!("linkgraph: {}", f.message),
            }
            ExitCode::from(f.code)
        }
    }
}
