//! One request, one full analysis. Pure apart from the clock.

use std::sync::atomic::{AtomicBool, Ordering};
use std::time::{Duration, Instant};

use dagscope::{
    biasing_edges, check, list_minimal_adjustments, DiagramDocument, Error, MixedGraph, ParseError, VertexSet,
};
use serde::{Deserialize, Serialize};

pub const DEFAULT_MAX_ADJUSTMENTS: usize = 20;
pub const DEFAULT_DEADLINE_MS: u64 = 2000;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase", deny_unknown_fields)]
pub struct AnalyzeRequest {
    /// Diagram source text.
    pub diagram: String,
    /// Replaces the diagram's adjusted vertices when present.
    #[serde(default)]
    pub adjusted: Option<Vec<String>>,
    #[serde(default = "default_max_adjustments")]
    pub max_adjustments: usize,
    /// Budget for the whole analysis; enumeration stops early when it runs out.
    #[serde(default = "default_deadline_ms")]
    pub deadline_ms: u64,
}

fn default_max_adjustments() -> usize {
    DEFAULT_MAX_ADJUSTMENTS
}

fn default_deadline_ms() -> u64 {
    DEFAULT_DEADLINE_MS
}

impl AnalyzeRequest {
    pub fn new(diagram: impl Into<String>) -> Self {
        AnalyzeRequest {
            diagram: diagram.into(),
            adjusted: None,
            max_adjustments: DEFAULT_MAX_ADJUSTMENTS,
            deadline_ms: DEFAULT_DEADLINE_MS,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Diagnostic {
    pub line: usize,
    pub column: usize,
    pub message: String,
}

impl From<&ParseError> for Diagnostic {
    fn from(e: &ParseError) -> Self {
        let text = e.to_string();
        let message = text
            .split_once(": ")
            .map_or(text.as_str(), |(_, rest)| rest)
            .to_string();
        Diagnostic {
            line: e.span.line,
            column: e.span.column,
            message,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct Verdicts {
    pub adjustment_criterion: bool,
    pub backdoor_criterion: bool,
    pub moral_criterion: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub enum Warning {
    /// The adjusted set contains a descendant of the exposure; biasing
    /// edges only cover paths that leave the exposure through a parent.
    AdjustedDescendantOfExposure,
    /// Enumeration needs a graph without exposure loops and was skipped.
    NotXLoopFree,
    /// Enumeration stopped at the deadline.
    DeadlineReached,
}

/// Microseconds spent per stage.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct Timing {
    pub parse_us: u64,
    pub criteria_us: u64,
    pub biasing_edges_us: u64,
    pub enumeration_us: u64,
    pub total_us: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct AnalyzeResponse {
    pub diagnostics: Vec<Diagnostic>,
    pub exposure: Vec<String>,
    pub outcome: Vec<String>,
    pub adjusted: Vec<String>,
    pub latent: Vec<String>,
    pub x_loop_free: bool,
    pub verdicts: Verdicts,
    pub forbidden: Vec<String>,
    /// An open biasing path, rendered like `a <- b -> c`.
    pub witness: Option<String>,
    pub biasing_edges: Vec<[String; 2]>,
    pub minimal_adjustments: Vec<Vec<String>>,
    pub truncated: bool,
    pub no_adjustment_exists: bool,
    pub warnings: Vec<Warning>,
    pub timing: Timing,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub enum ErrorKind {
    /// The request body is not a valid request.
    Request,
    /// The diagram text does not parse.
    Parse,
    /// Roles or the adjusted-set override are unusable.
    Roles,
    Internal,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ErrorBody {
    pub error: ErrorKind,
    pub message: String,
    pub diagnostics: Vec<Diagnostic>,
}

impl ErrorBody {
    pub fn new(error: ErrorKind, message: impl Into<String>) -> Self {
        ErrorBody {
            error,
            message: message.into(),
            diagnostics: Vec::new(),
        }
    }

    fn parse(e: &ParseError) -> Self {
        let kind = if e.is_role_violation() {
            ErrorKind::Roles
        } else {
            ErrorKind::Parse
        };
        ErrorBody {
            error: kind,
            message: e.to_string(),
            diagnostics: vec![e.into()],
        }
    }
}

fn micros(d: Duration) -> u64 {
    d.as_micros().try_into().unwrap_or(u64::MAX)
}

fn names(g: &MixedGraph, set: &VertexSet) -> Vec<String> {
    g.names_of(set).into_iter().map(String::from).collect()
}

fn roles_error(e: Error) -> ErrorBody {
    ErrorBody::new(ErrorKind::Roles, e.to_string())
}

/// Runs the analysis. Enumeration stops after `max_adjustments` sets, at
/// the deadline, or as soon as `cancel` is set.
pub fn analyze(req: &AnalyzeRequest, cancel: &AtomicBool) -> Result<AnalyzeResponse, ErrorBody> {
    let started = Instant::now();
    let deadline = started + Duration::from_millis(req.deadline_ms);

    let mut doc = DiagramDocument::parse(&req.diagram).map_err(|e| ErrorBody::parse(&e))?;
    let parsed = started.elapsed();
    doc.roles.require_query().map_err(roles_error)?;
    if let Some(override_names) = &req.adjusted {
        doc.roles.adjusted = doc.graph.vertex_set(override_names).map_err(roles_error)?;
        doc.roles.validate(&doc.graph).map_err(roles_error)?;
    }
    let (g, r) = (&doc.graph, &doc.roles);
    let (x, y, z) = (&r.exposure, &r.outcome, &r.adjusted);
    let internal = |e: Error| ErrorBody::new(ErrorKind::Internal, e.to_string());

    let report = check(g, x, y, z).map_err(internal)?;
    let checked = started.elapsed();
    let bias = biasing_edges(g, x, y, z).map_err(internal)?;
    let biased = started.elapsed();

    let mut warnings = Vec::new();
    if bias.adjusts_exposure_descendant {
        warnings.push(Warning::AdjustedDescendantOfExposure);
    }
    let mut minimal_adjustments = Vec::new();
    let mut truncated = false;
    let mut no_adjustment_exists = false;
    match list_minimal_adjustments(g, x, y, &r.latent) {
        Ok(mut stream) => {
            no_adjustment_exists = stream.no_adjustment_exists();
            loop {
                if Instant::now() >= deadline || cancel.load(Ordering::Relaxed) {
                    truncated = true;
                    warnings.push(Warning::DeadlineReached);
                    break;
                }
                let Some(set) = stream.next() else { break };
                if minimal_adjustments.len() == req.max_adjustments {
                    truncated = true;
                    break;
                }
                minimal_adjustments.push(names(g, &set));
            }
        }
        Err(Error::NotXLoopFree(_)) => warnings.push(Warning::NotXLoopFree),
        Err(e) => return Err(internal(e)),
    }
    let enumerated = started.elapsed();

    Ok(AnalyzeResponse {
        diagnostics: Vec::new(),
        exposure: names(g, x),
        outcome: names(g, y),
        adjusted: names(g, z),
        latent: names(g, &r.latent),
        x_loop_free: report.x_loop_free,
        verdicts: Verdicts {
            adjustment_criterion: report.adjustment_criterion,
            backdoor_criterion: report.backdoor_criterion,
            moral_criterion: report.moral_criterion,
        },
        forbidden: names(g, &report.forbidden),
        witness: report.witness.map(|p| p.display(g).to_string()),
        biasing_edges: bias
            .edges
            .iter()
            .map(|&(u, v)| [g.name(u).to_string(), g.name(v).to_string()])
            .collect(),
        minimal_adjustments,
        truncated,
        no_adjustment_exists,
        warnings,
        timing: Timing {
            parse_us: micros(parsed),
            criteria_us: micros(checked - parsed),
            biasing_edges_us: micros(biased - checked),
            enumeration_us: micros(enumerated - biased),
            total_us: micros(started.elapsed()),
        },
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use dagscope::model_io::fixtures;

    fn run(req: &AnalyzeRequest) -> Result<AnalyzeResponse, ErrorBody> {
        analyze(req, &AtomicBool::new(false))
    }

    fn pairs(list: &[[&str; 2]]) -> Vec<[String; 2]> {
        list.iter().map(|[u, v]| [u.to_string(), v.to_string()]).collect()
    }

    #[test]
    fn fig1_without_adjustment() {
        let resp = run(&AnalyzeRequest::new(fixtures::FIG1)).unwrap();
        assert_eq!(resp.biasing_edges, pairs(&[["FI", "LE"], ["FI", "MD"], ["MD", "D"]]));
        assert_eq!(resp.minimal_adjustments, vec![vec!["FI"], vec!["MR", "MD"]]);
        assert!(!resp.truncated && !resp.no_adjustment_exists);
        assert!(!resp.verdicts.adjustment_criterion);
        assert_eq!(resp.witness.as_deref(), Some("LE <- FI -> MD -> D"));
    }

    #[test]
    fn override_replaces_adjusted_roles() {
        let mut req = AnalyzeRequest::new(fixtures::FIG1);
        req.adjusted = Some(vec!["FI".into()]);
        let resp = run(&req).unwrap();
        assert!(resp.biasing_edges.is_empty());
        assert_eq!(resp.adjusted, vec!["FI"]);
        assert!(resp.verdicts.adjustment_criterion && resp.witness.is_none());
    }

    #[test]
    fn truncates_at_the_requested_count() {
        let mut req = AnalyzeRequest::new(fixtures::FIG1);
        req.max_adjustments = 1;
        let resp = run(&req).unwrap();
        assert_eq!(resp.minimal_adjustments, vec![vec!["FI"]]);
        assert!(resp.truncated);
        req.max_adjustments = 2;
        assert!(!run(&req).unwrap().truncated);
    }

    #[test]
    fn cancellation_stops_enumeration() {
        let resp = analyze(&AnalyzeRequest::new(fixtures::FIG1), &AtomicBool::new(true)).unwrap();
        assert!(resp.minimal_adjustments.is_empty());
        assert!(resp.truncated);
        assert_eq!(resp.warnings, vec![Warning::DeadlineReached]);
    }

    #[test]
    fn parse_failures_carry_positions() {
        let err = run(&AnalyzeRequest::new("dag { a -> a }")).unwrap_err();
        assert_eq!(err.error, ErrorKind::Parse);
        assert_eq!(err.diagnostics.len(), 1);
        assert_eq!(err.diagnostics[0].line, 1);
        assert!(err.diagnostics[0].message.contains("self-loop"), "{err:?}");
    }

    #[test]
    fn role_problems_are_reported_as_roles() {
        let conflict = run(&AnalyzeRequest::new("dag { a [exposure] a [outcome] }")).unwrap_err();
        assert_eq!(conflict.error, ErrorKind::Roles);
        let missing = run(&AnalyzeRequest::new("dag { a [exposure] b a -> b }")).unwrap_err();
        assert_eq!(missing.error, ErrorKind::Roles);
        for bad in ["nope", "LE"] {
            let mut req = AnalyzeRequest::new(fixtures::FIG1);
            req.adjusted = Some(vec![bad.into()]);
            assert_eq!(run(&req).unwrap_err().error, ErrorKind::Roles, "{bad}");
        }
    }

    #[test]
    fn exposure_loops_skip_enumeration() {
        let resp = run(&AnalyzeRequest::new(
            "dag { a [exposure] b [exposure] y [outcome] m  a -> m m -> b b -> y }",
        ))
        .unwrap();
        assert!(!resp.x_loop_free);
        assert_eq!(resp.warnings, vec![Warning::NotXLoopFree]);
        assert!(resp.minimal_adjustments.is_empty() && !resp.truncated);
    }

    #[test]
    fn unblockable_bias_is_not_an_error() {
        let resp = run(&AnalyzeRequest::new(
            "dag { x [exposure] y [outcome] u [latent]  u -> x u -> y x -> y }",
        ))
        .unwrap();
        assert!(resp.no_adjustment_exists);
        assert!(resp.minimal_adjustments.is_empty());
    }

    #[test]
    fn request_defaults() {
        let req: AnalyzeRequest = serde_json::from_str(r#"{"diagram": "dag {}"}"#).unwrap();
        assert_eq!(req, AnalyzeRequest::new("dag {}"));
        assert!(serde_json::from_str::<AnalyzeRequest>(r#"{"diagram": "", "bogus": 1}"#).is_err());
    }
}
