//! Corpus, claim suites and JSON reports.

pub mod checks;
mod suite;

use std::ops::RangeInclusive;

use serde::Serialize;
use serde_json::Value;

use crate::error::{Error, Result};
use crate::multigraph::{
    complete, complete_bipartite, cycle, dipole, fig2a, parse_edge_list, path, petersen, random_multigraph,
    star, wheel, Multigraph,
};

pub use suite::{verify_instance, verify_suite};

/// Every claim id a suite can emit, in report order.
pub const CLAIMS: &[&str] = &[
    "Obs3.1", "Obs3.2", "Obs3.3", "Obs3.4", "Lem3.5", "Cor3.6", "Lem3.7", "Cor3.8", "Lem4.1", "Hom2",
    "Lem4.2", "Lem4.3", "Thm1.1", "Thm1.2", "Thm1.3", "Thm1.4", "Cor1.2", "Cor4.4", "Lem5.1", "Lem5.2",
    "Cor5.3", "Thm2", "Thm3.1", "Thm3.2", "Thm3.3", "Thm3.4", "Thm3.5", "Path2", "Iso2",
];

/// Results that are used as inequalities on instances rather than checked.
pub const OUT_OF_SCOPE: &[&str] = &[
    "Hadwiger's conjecture for line graphs of multigraphs (Reed and Seymour): only the inequality is checked per instance",
    "Hadwiger's conjecture for graphs of chromatic number at most 6 (Robertson, Seymour and Thomas): only the inequality is checked per instance",
    "Shannon's edge-colouring bound and the edge-colouring results of Juvan et al.: checked as inequalities on instances",
    "the characterisation of which graphs are l-link graphs",
    "asymptotic statements and claims about infinite families beyond the corpus",
];

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Family {
    Dipole(usize),
    Complete(usize),
    Bipartite(usize, usize),
    Cycle(usize),
    Path(usize),
    Star(usize),
    Petersen,
    Wheel(usize),
    Fig2a,
    Random { seed: u64, n: usize, m: usize },
    File,
}

#[derive(Clone, Debug)]
pub struct Instance {
    pub name: String,
    pub family: Family,
    pub graph: Multigraph,
}

fn numbers(text: &str, sep: char) -> Result<Vec<u64>> {
    text.split(sep)
        .map(|t| t.trim().parse::<u64>().map_err(|_| Error::Parse(format!("not a number: {t:?}"))))
        .collect()
}

/// Parses a generator spec such as `dipole:3`, `kbip:2,3`, `petersen` or
/// `random:SEED:N:M`.
pub fn parse_generator(spec: &str) -> Result<Instance> {
    let (kind, args) = spec.split_once(':').unwrap_or((spec, ""));
    let one = || -> Result<usize> {
        match numbers(args, ',')?.as_slice() {
            [x] => Ok(*x as usize),
            _ => Err(Error::Parse(format!("{kind} takes one parameter"))),
        }
    };
    let (family, graph) = match kind {
        "dipole" => {
            let t = one()?;
            (Family::Dipole(t), dipole(t)?)
        }
        "complete" | "k" => {
            let n = one()?;
            (Family::Complete(n), complete(n)?)
        }
        "kbip" | "bipartite" => match numbers(args, ',')?.as_slice() {
            &[n, m] => (Family::Bipartite(n as usize, m as usize), complete_bipartite(n as usize, m as usize)?),
            _ => return Err(Error::Parse("kbip takes two parameters, as kbip:N,M".into())),
        },
        "cycle" => {
            let n = one()?;
            (Family::Cycle(n), cycle(n)?)
        }
        "path" => {
            let n = one()?;
            (Family::Path(n), path(n)?)
        }
        "star" => {
            let n = one()?;
            (Family::Star(n), star(n)?)
        }
        "wheel" => {
            let n = one()?;
            (Family::Wheel(n), wheel(n)?)
        }
        "petersen" if args.is_empty() => (Family::Petersen, petersen()),
        "fig2a" if args.is_empty() => (Family::Fig2a, fig2a()),
        "random" => match numbers(args, ':')?.as_slice() {
            &[seed, n, m] => {
                let (n, m) = (n as usize, m as usize);
                (Family::Random { seed, n, m }, random_multigraph(seed, n, m)?)
            }
            _ => return Err(Error::Parse("random takes SEED:N:M".into())),
        },
        _ => return Err(Error::Parse(format!("unknown generator {spec:?}"))),
    };
    Ok(Instance { name: spec.to_string(), family, graph })
}

impl Instance {
    pub fn from_edge_list(name: impl Into<String>, text: &str) -> Result<Instance> {
        Ok(Instance { name: name.into(), family: Family::File, graph: parse_edge_list(text)? })
    }
}

/// Instances plus the range of `ell` each is checked at.
#[derive(Clone, Debug)]
pub struct Corpus {
    pub seed: u64,
    pub instances: Vec<Instance>,
    pub ells: RangeInclusive<usize>,
}

pub const DEFAULT_SEED: u64 = 20130501;

/// Dipoles, complete and complete bipartite graphs, cycles, paths, the
/// Petersen graph, two wheels, the Figure 2(a) graph and two random
/// multigraphs drawn from `seed`.
pub fn default_corpus(seed: u64) -> Corpus {
    let mut specs: Vec<String> = Vec::new();
    specs.extend((2..=5).map(|t| format!("dipole:{t}")));
    specs.extend((3..=6).map(|n| format!("complete:{n}")));
    for n in 2..=3 {
        specs.extend((2..=4).map(|m| format!("kbip:{n},{m}")));
    }
    specs.extend((3..=8).map(|n| format!("cycle:{n}")));
    specs.extend((3..=8).map(|n| format!("path:{n}")));
    specs.push("petersen".into());
    specs.extend(["wheel:5".into(), "wheel:6".into(), "fig2a".into()]);
    specs.push(format!("random:{seed}:7:12"));
    specs.push(format!("random:{}:8:14", seed.wrapping_add(1)));
    let instances = specs.iter().map(|s| parse_generator(s).expect("corpus specs are valid")).collect();
    Corpus { seed, instances, ells: 0..=5 }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Skip,
}

#[derive(Clone, Debug, Serialize)]
pub struct Record {
    pub claim: String,
    pub instance: String,
    pub ell: Option<usize>,
    pub status: Status,
    pub computed: Value,
    pub bounds: Value,
    #[serde(skip_serializing_if = "String::is_empty")]
    pub detail: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub reproduce: Option<String>,
    pub runtime_ms: u64,
}

impl Record {
    fn sort_key(&self) -> (usize, &str, Option<usize>) {
        let rank = CLAIMS.iter().position(|c| *c == self.claim).unwrap_or(CLAIMS.len());
        (rank, &self.instance, self.ell)
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct Report {
    pub report_version: u32,
    pub seed: u64,
    pub out_of_scope: Vec<String>,
    pub records: Vec<Record>,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Tally {
    pub pass: usize,
    pub fail: usize,
    pub skip: usize,
}

impl Report {
    pub fn new(seed: u64, mut records: Vec<Record>) -> Report {
        records.sort_by(|a, b| a.sort_key().cmp(&b.sort_key()));
        Report {
            report_version: 1,
            seed,
            out_of_scope: OUT_OF_SCOPE.iter().map(|s| s.to_string()).collect(),
            records,
        }
    }

    pub fn all_pass(&self) -> bool {
        self.records.iter().all(|r| r.status != Status::Fail)
    }

    pub fn tally(&self) -> Tally {
        let mut t = Tally::default();
        for r in &self.records {
            match r.status {
                Status::Pass => t.pass += 1,
                Status::Fail => t.fail += 1,
                Status::Skip => t.skip += 1,
            }
        }
        t
    }

    pub fn failures(&self) -> impl Iterator<Item = &Record> {
        self.records.iter().filter(|r| r.status == Status::Fail)
    }

    /// Pretty JSON; with `timing` off every `runtime_ms` is zeroed so that
    /// repeated runs give identical bytes.
    pub fn to_json(&self, timing: bool) -> String {
        let mut v = serde_json::to_value(self).expect("report serialises");
        if !timing {
            if let Some(records) = v["records"].as_array_mut() {
                for r in records {
                    r["runtime_ms"] = Value::from(0);
                }
            }
        }
        serde_json::to_string_pretty(&v).expect("report serialises") + "\n"
    }
}

/// Whether `claim` is selected by a filter entry, which may be a full id
/// (`Thm1.3`) or the part before the dot (`Thm1`).
pub fn claim_selected(filter: Option<&[String]>, claim: &str) -> bool {
    match filter {
        None => true,
        Some(list) => list.iter().any(|f| {
            f == claim || (claim.starts_with(f.as_str()) && claim[f.len()..].starts_with('.'))
        }),
    }
}
