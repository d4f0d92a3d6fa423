//! Command-line front end shared by the `minorkit` binary and the tests.
//!
//! Exit statuses: 0 when a decision is true or an extraction succeeded, 1
//! when a decision is false or nothing was found, 2 on usage errors,
//! unreadable inputs, violated preconditions and size guards. Reports put
//! explanations on `#` lines so any certificate they contain can be parsed
//! back with the functions in [`crate::io`].

use std::fmt::Write as _;

use clap::{Parser, ValueEnum};

use crate::chromatic::{chromatic_number, extract_clique_minor, extract_k3, extract_k4, hadwiger_scan, ScanMode};
use crate::connectivity::{fan, vertex_connectivity};
use crate::error::{GraphError, Result};
use crate::graph::{complete, complete_bipartite, cycle, path, petersen, wheel, Graph, Vertex};
use crate::io::{emit_dot, parse_graph, Highlight};
use crate::minor::{find_minor_model, minimize_minor_witness};
use crate::planarity::{is_planar, kuratowski_witness};
use crate::topo::find_subdivision;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Verb {
    CheckMinor,
    CheckSubdivision,
    Minimize,
    Planarity,
    Kuratowski,
    Connectivity,
    Fan,
    Chromatic,
    ExtractK3,
    ExtractK4,
    ExtractKminor,
    HadwigerScan,
    ToDot,
}

impl Verb {
    /// Allowed range of positional inputs.
    fn arity(self) -> (usize, usize) {
        match self {
            Verb::CheckMinor | Verb::CheckSubdivision | Verb::Minimize => (2, 2),
            Verb::ToDot => (1, 2),
            Verb::HadwigerScan => (2, 2),
            _ => (1, 1),
        }
    }
}

/// Graph-minor toolkit.
///
/// Inputs are edge-list files or named graphs: k5, k33, petersen, cN
/// (cycle), pN (path), kN (complete), kA,B (complete bipartite), wN (wheel
/// with N rim vertices). `hadwiger-scan` takes the largest order and the
/// largest clique size instead.
#[derive(Clone, Debug, PartialEq, Eq, Parser)]
#[command(name = "minorkit", version)]
pub struct Command {
    #[arg(value_enum)]
    pub verb: Verb,
    pub inputs: Vec<String>,
    /// Clique size for extract-kminor.
    #[arg(long)]
    pub k: Option<usize>,
    /// Fan centre.
    #[arg(long)]
    pub root: Option<Vertex>,
    /// Fan targets, comma separated (default: every other vertex).
    #[arg(long, value_delimiter = ',')]
    pub targets: Vec<Vertex>,
    /// Seed for sampled scans.
    #[arg(long)]
    pub seed: Option<u64>,
    /// Graphs per order for sampled scans.
    #[arg(long, default_value_t = 100)]
    pub samples: usize,
    /// Scan every labeled graph instead of sampling.
    #[arg(long)]
    pub exhaustive: bool,
    /// For to-dot with a pattern: highlight a subdivision instead of a
    /// minor model.
    #[arg(long)]
    pub subdivision: bool,
}

/// Exit status plus report text (LF terminated).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub status: i32,
    pub report: String,
}

impl Outcome {
    fn new(status: i32, report: impl Into<String>) -> Outcome {
        let mut report = report.into();
        if !report.ends_with('\n') {
            report.push('\n');
        }
        Outcome { status, report }
    }
}

fn named(token: &str) -> Option<Result<Graph>> {
    let num = |s: &str| s.parse::<usize>().ok();
    let g = match token {
        "k5" => complete(5),
        "k33" => complete_bipartite(3, 3),
        "petersen" => Ok(petersen()),
        _ => {
            let (head, rest) = token.split_at(1.min(token.len()));
            match (head, rest.split_once(',')) {
                ("k", Some((a, b))) => complete_bipartite(num(a)?, num(b)?),
                ("k", None) => complete(num(rest)?),
                ("c", None) => cycle(num(rest)?),
                ("p", None) => path(num(rest)?),
                ("w", None) => wheel(num(rest)?),
                _ => return None,
            }
        }
    };
    Some(g)
}

/// Resolves a named-graph token or reads an edge-list file.
pub fn load_graph(input: &str) -> Result<Graph> {
    if let Some(g) = named(input) {
        return g;
    }
    let text = std::fs::read_to_string(input)
        .map_err(|e| GraphError::InvalidParameter(format!("cannot read {input}: {e}")))?;
    parse_graph(&text).map_err(|e| match e {
        GraphError::Parse { line, message } => GraphError::Parse { line, message: format!("{input}: {message}") },
        other => other,
    })
}

impl Command {
    /// Checks the verb's arity.
    pub fn validate(&self) -> std::result::Result<(), String> {
        let (lo, hi) = self.verb.arity();
        if (lo..=hi).contains(&self.inputs.len()) {
            return Ok(());
        }
        let name = self.verb.to_possible_value().expect("no skipped verbs");
        let want = if lo == hi { lo.to_string() } else { format!("{lo} to {hi}") };
        Err(format!("{} takes {want} inputs, got {}", name.get_name(), self.inputs.len()))
    }

    /// Parses arguments (the first item is the program name) and checks the
    /// verb's arity.
    pub fn from_args<I, T>(args: I) -> std::result::Result<Command, String>
    where
        I: IntoIterator<Item = T>,
        T: Into<std::ffi::OsString> + Clone,
    {
        let cmd = Command::try_parse_from(args).map_err(|e| e.to_string())?;
        cmd.validate()?;
        Ok(cmd)
    }
}

/// Parses and runs in one go; help and version requests exit with 0.
pub fn run_args<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    use clap::error::ErrorKind;
    match Command::try_parse_from(args) {
        Err(e) if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) => {
            Outcome::new(0, e.to_string())
        }
        Err(e) => Outcome::new(2, e.to_string()),
        Ok(cmd) => match cmd.validate() {
            Ok(()) => run(&cmd),
            Err(msg) => Outcome::new(2, format!("error: {msg}")),
        },
    }
}

/// Executes a parsed command.
pub fn run(cmd: &Command) -> Outcome {
    match execute(cmd) {
        Ok(o) => o,
        Err(e) => Outcome::new(2, format!("error: {e}")),
    }
}

fn execute(cmd: &Command) -> Result<Outcome> {
    if cmd.verb == Verb::HadwigerScan {
        return scan(cmd);
    }
    let g = load_graph(&cmd.inputs[0])?;
    let second = cmd.inputs.get(1).map(|s| load_graph(s)).transpose()?;
    let out = match cmd.verb {
        Verb::CheckMinor => {
            let h = second.unwrap();
            match find_minor_model(&g, &h)? {
                Some(m) => Outcome::new(0, format!("# minor found\n{m}")),
                None => Outcome::new(1, "# no minor"),
            }
        }
        Verb::CheckSubdivision => {
            let h = second.unwrap();
            match find_subdivision(&g, &h)? {
                Some(e) => Outcome::new(0, format!("# subdivision found\n{e}")),
                None => Outcome::new(1, "# no subdivision"),
            }
        }
        Verb::Minimize => {
            let h = second.unwrap();
            match minimize_minor_witness(&g, &h)? {
                Some(w) => {
                    let mut r = String::from("# minimal witness\n# edges:");
                    for (u, v) in w.host_edges() {
                        write!(r, " {u}-{v}").unwrap();
                    }
                    r.push('\n');
                    for (i, s) in w.host_sets().iter().enumerate() {
                        let vs: Vec<String> = s.iter().map(ToString::to_string).collect();
                        writeln!(r, "set {i}: {}", vs.join(" ")).unwrap();
                    }
                    Outcome::new(0, r)
                }
                None => Outcome::new(1, "# no minor"),
            }
        }
        Verb::Planarity => {
            if is_planar(&g)? {
                Outcome::new(0, "planar")
            } else {
                Outcome::new(1, "non-planar")
            }
        }
        Verb::Kuratowski => match kuratowski_witness(&g)? {
            Some(w) => Outcome::new(0, format!("# non-planar\n{w}")),
            None => Outcome::new(1, "# planar"),
        },
        Verb::Connectivity => Outcome::new(0, format!("connectivity: {}", vertex_connectivity(&g))),
        Verb::Fan => {
            let center = cmd.root.ok_or_else(|| GraphError::InvalidParameter("fan needs --root".into()))?;
            g.check_vertex(center)?;
            let targets: Vec<Vertex> = if cmd.targets.is_empty() {
                g.vertices().filter(|&v| v != center).collect()
            } else {
                cmd.targets.clone()
            };
            let f = fan(&g, center, &targets)?;
            Outcome::new(if f.size() > 0 { 0 } else { 1 }, format!("# fan of size {}\n{f}", f.size()))
        }
        Verb::Chromatic => {
            let (chi, col) = chromatic_number(&g)?;
            let cs: Vec<String> = col.colors.iter().map(ToString::to_string).collect();
            Outcome::new(0, format!("chromatic number: {chi}\ncoloring: {}", cs.join(" ")))
        }
        Verb::ExtractK3 => Outcome::new(0, format!("# K3 minor\n{}", extract_k3(&g)?)),
        Verb::ExtractK4 => Outcome::new(0, format!("# K4 minor\n{}", extract_k4(&g)?)),
        Verb::ExtractKminor => {
            let k = cmd.k.ok_or_else(|| GraphError::InvalidParameter("extract-kminor needs --k".into()))?;
            Outcome::new(0, format!("# K{k} minor\n{}", extract_clique_minor(&g, k)?))
        }
        Verb::ToDot => {
            let dot = match &second {
                None => emit_dot(&g, None)?,
                Some(h) if cmd.subdivision => match find_subdivision(&g, h)? {
                    Some(e) => emit_dot(&g, Some(Highlight::Subdivision(&e)))?,
                    None => return Ok(Outcome::new(1, "# no subdivision")),
                },
                Some(h) => match find_minor_model(&g, h)? {
                    Some(m) => emit_dot(&g, Some(Highlight::Model(&m)))?,
                    None => return Ok(Outcome::new(1, "# no minor")),
                },
            };
            Outcome::new(0, dot)
        }
        Verb::HadwigerScan => unreachable!(),
    };
    Ok(out)
}

fn scan(cmd: &Command) -> Result<Outcome> {
    let parse = |s: &str| {
        s.parse::<usize>().map_err(|_| GraphError::InvalidParameter(format!("expected a number, found {s:?}")))
    };
    let (n_max, k_max) = (parse(&cmd.inputs[0])?, parse(&cmd.inputs[1])?);
    let mode = if cmd.exhaustive {
        ScanMode::Exhaustive
    } else {
        let seed = cmd
            .seed
            .ok_or_else(|| GraphError::InvalidParameter("sampled scans need --seed (or use --exhaustive)".into()))?;
        ScanMode::Sampled { samples: cmd.samples, seed }
    };
    let report = hadwiger_scan(n_max, k_max, mode)?;
    Ok(Outcome::new(if report.counterexamples.is_empty() { 0 } else { 1 }, report.to_string()))
}
