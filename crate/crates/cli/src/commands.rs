use std::fs;
use std::io::{self, Read, Write};
use std::time::{Duration, Instant};

use dagscope::{
    biasing_edges, check, d_connecting_path, list_minimal_adjustments, DiagramDocument, Error, MixedGraph, VertexSet,
};

use crate::{Cli, Command, Format};

pub const SUCCESS: u8 = 0;
pub const NOT_SATISFIED: u8 = 1;
pub const INPUT_ERROR: u8 = 2;
pub const PRECONDITION: u8 = 3;
pub const LIMIT: u8 = 4;

#[derive(Debug)]
struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn new(code: u8, message: impl Into<String>) -> Self {
        Failure {
            code,
            message: message.into(),
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::Parse(_) | Error::UnknownVertex(_) | Error::Cyclic(_) => INPUT_ERROR,
            Error::InvalidArgument(_) | Error::NotXLoopFree(_) => PRECONDITION,
            Error::BudgetExceeded(_) => LIMIT,
        };
        Failure::new(code, e.to_string())
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::new(INPUT_ERROR, e.to_string())
    }
}

/// Runs one invocation and returns its exit code.
pub fn run(cli: &Cli, stdin: &mut dyn Read, out: &mut dyn Write, err: &mut dyn Write) -> u8 {
    match execute(cli, stdin, out, err) {
        Ok(code) => code,
        Err(f) => {
            let _ = writeln!(err, "error: {}", f.message);
            f.code
        }
    }
}

fn execute(cli: &Cli, stdin: &mut dyn Read, out: &mut dyn Write, err: &mut dyn Write) -> Result<u8, Failure> {
    match &cli.command {
        Command::Check { file, adjust } => {
            let doc = load(file, stdin)?;
            let z = resolve(&doc.graph, adjust.as_deref(), &doc.roles.adjusted)?;
            cmd_check(&doc, &z, cli.format, out)
        }
        Command::Adjustments {
            file,
            max,
            latent,
            adjust,
            time_limit,
        } => {
            let doc = load(file, stdin)?;
            let l = resolve(&doc.graph, latent.as_deref(), &doc.roles.latent)?;
            let lookup = match adjust {
                Some(names) => Some(resolve(&doc.graph, Some(names), &VertexSet::new())?),
                None => None,
            };
            let limit = time_limit
                .map(|s| {
                    Duration::try_from_secs_f64(s)
                        .map_err(|_| Failure::new(INPUT_ERROR, format!("invalid time limit `{s}`")))
                })
                .transpose()?;
            cmd_adjustments(&doc, &l, *max, lookup.as_ref(), limit, cli.format, out, err)
        }
        Command::BiasEdges { file, adjust } => {
            let doc = load(file, stdin)?;
            let z = resolve(&doc.graph, adjust.as_deref(), &doc.roles.adjusted)?;
            cmd_bias_edges(&doc, &z, out, err)
        }
        Command::Dsep { file, given } => {
            let doc = load(file, stdin)?;
            let z = resolve(&doc.graph, Some(given), &VertexSet::new())?;
            cmd_dsep(&doc, &z, cli.format, out)
        }
    }
}

fn load(file: &str, stdin: &mut dyn Read) -> Result<DiagramDocument, Failure> {
    let text = if file == "-" {
        let mut text = String::new();
        stdin.read_to_string(&mut text)?;
        text
    } else {
        fs::read_to_string(file).map_err(|e| Failure::new(INPUT_ERROR, format!("{file}: {e}")))?
    };
    let label = if file == "-" { "<stdin>" } else { file };
    DiagramDocument::parse(&text).map_err(|e| {
        let code = if e.is_role_violation() {
            PRECONDITION
        } else {
            INPUT_ERROR
        };
        Failure::new(code, format!("{label}:{e}"))
    })
}

fn resolve(g: &MixedGraph, names: Option<&[String]>, default: &VertexSet) -> Result<VertexSet, Failure> {
    match names {
        None => Ok(default.clone()),
        Some(names) => {
            let names: Vec<&str> = names.iter().map(|n| n.trim()).filter(|n| !n.is_empty()).collect();
            Ok(g.vertex_set(&names)?)
        }
    }
}

fn require_query(doc: &DiagramDocument) -> Result<(), Failure> {
    doc.roles
        .require_query()
        .map_err(|e| Failure::new(PRECONDITION, e.to_string()))
}

/// Members in vertex order, comma-separated; `{}` for the empty set.
pub fn set_text(g: &MixedGraph, set: &VertexSet) -> String {
    if set.is_empty() {
        "{}".to_string()
    } else {
        g.names_of(set).join(", ")
    }
}

fn verdict(ok: bool) -> &'static str {
    if ok {
        "satisfied"
    } else {
        "violated"
    }
}

fn cmd_check(doc: &DiagramDocument, z: &VertexSet, format: Format, out: &mut dyn Write) -> Result<u8, Failure> {
    require_query(doc)?;
    let g = &doc.graph;
    let r = check(g, &doc.roles.exposure, &doc.roles.outcome, z)?;
    let witness = r.witness.as_ref().map(|p| p.display(g).to_string());
    match format {
        Format::Human => {
            writeln!(out, "adjusted set: {}", set_text(g, z))?;
            writeln!(out, "adjustment criterion: {}", verdict(r.adjustment_criterion))?;
            writeln!(out, "back-door criterion: {}", verdict(r.backdoor_criterion))?;
            writeln!(out, "moral criterion: {}", verdict(r.moral_criterion))?;
            writeln!(out, "X-loop-free: {}", if r.x_loop_free { "yes" } else { "no" })?;
            writeln!(out, "forbidden: {}", set_text(g, &r.forbidden))?;
            if let Some(w) = witness {
                writeln!(out, "open biasing path: {w}")?;
            }
        }
        Format::Lines => {
            writeln!(out, "adjusted={}", set_text(g, z))?;
            writeln!(out, "adjustment={}", r.adjustment_criterion)?;
            writeln!(out, "backdoor={}", r.backdoor_criterion)?;
            writeln!(out, "moral={}", r.moral_criterion)?;
            writeln!(out, "x_loop_free={}", r.x_loop_free)?;
            writeln!(out, "forbidden={}", set_text(g, &r.forbidden))?;
            if let Some(w) = witness {
                writeln!(out, "witness={w}")?;
            }
        }
    }
    Ok(if r.adjustment_criterion { SUCCESS } else { NOT_SATISFIED })
}

#[allow(clippy::too_many_arguments)]
fn cmd_adjustments(
    doc: &DiagramDocument,
    l: &VertexSet,
    max: usize,
    lookup: Option<&VertexSet>,
    limit: Option<Duration>,
    format: Format,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> Result<u8, Failure> {
    require_query(doc)?;
    let g = &doc.graph;
    let started = Instant::now();
    let stream = list_minimal_adjustments(g, &doc.roles.exposure, &doc.roles.outcome, l)?;
    if stream.no_adjustment_exists() {
        writeln!(
            err,
            "no adjustment set exists: a biasing path runs only through forbidden or latent vertices"
        )?;
        return Ok(NOT_SATISFIED);
    }
    let mut found = false;
    let mut count = 0;
    let mut code = SUCCESS;
    for z in stream {
        if count == max {
            match format {
                Format::Human => writeln!(out, "... more sets exist beyond --max {max}")?,
                Format::Lines => writeln!(out, "# truncated after {max}")?,
            }
            break;
        }
        writeln!(out, "{}", set_text(g, &z))?;
        out.flush()?;
        found |= lookup == Some(&z);
        count += 1;
        if limit.is_some_and(|d| started.elapsed() > d) {
            match format {
                Format::Human => writeln!(out, "... time limit reached ({count} listed)")?,
                Format::Lines => writeln!(out, "# time limit reached after {count}")?,
            }
            code = LIMIT;
            break;
        }
    }
    if let Some(z) = lookup {
        let shown = set_text(g, z);
        match format {
            Format::Human if found => writeln!(out, "{shown} is among the listed sets")?,
            Format::Human => writeln!(out, "{shown} is not among the listed sets")?,
            Format::Lines => writeln!(out, "# listed={found}")?,
        }
    }
    Ok(code)
}

fn cmd_bias_edges(
    doc: &DiagramDocument,
    z: &VertexSet,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> Result<u8, Failure> {
    require_query(doc)?;
    let g = &doc.graph;
    let report = biasing_edges(g, &doc.roles.exposure, &doc.roles.outcome, z)?;
    if report.adjusts_exposure_descendant {
        writeln!(
            err,
            "warning: the adjusted set contains a descendant of the exposure; \
             open paths leaving the exposure through its children are not listed"
        )?;
    }
    for (u, v) in report.edges {
        writeln!(out, "{} -> {}", g.name(u), g.name(v))?;
    }
    Ok(SUCCESS)
}

fn cmd_dsep(doc: &DiagramDocument, z: &VertexSet, format: Format, out: &mut dyn Write) -> Result<u8, Failure> {
    require_query(doc)?;
    let g = &doc.graph;
    match d_connecting_path(g, &doc.roles.exposure, &doc.roles.outcome, z)? {
        None => {
            writeln!(out, "d-separated")?;
            Ok(SUCCESS)
        }
        Some(p) => {
            writeln!(out, "d-connected")?;
            match format {
                Format::Human => writeln!(out, "open path: {}", p.display(g))?,
                Format::Lines => writeln!(out, "{}", p.display(g))?,
            }
            Ok(NOT_SATISFIED)
        }
    }
}
