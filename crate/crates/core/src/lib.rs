//! Graph algorithms for covariate adjustment in causal diagrams.
//!
//! The crate parses diagrams, checks adjustment criteria, finds the edges
//! that bias an estimate and enumerates minimal adjustment sets with
//! polynomial delay.

pub mod criteria;
pub mod enumeration;
pub mod error;
pub mod fork;
pub mod graph;
pub mod model_io;
pub mod oracle;
pub mod roles;

pub use criteria::{
    causal_path_vertices, check, d_connecting_path, d_separated, forbidden_vertices, is_minimal, proper_backdoor_graph,
    satisfies, satisfies_adjustment_criterion, satisfies_backdoor, satisfies_moral, AdjustmentVerdict, Criterion,
    CriterionReport,
};
pub use enumeration::{
    latent_project, list_minimal_adjustments, list_minimal_separators, AdjustmentStream, LatentProjection,
    SeparatorStream, StreamStatus,
};
pub use error::{Error, ParseError, ParseErrorKind, Result, Span};
pub use fork::{
    biasing_edges, bottleneck_numbers, fork_graph, identify_fork_vertices, is_fork, BiasReport, BlockTree,
    BottleneckTable, ForkGraph,
};
pub use graph::{dag_from_edges, GraphBuilder, MixedGraph, Path, Step, Vertex, VertexSet};
pub use model_io::DiagramDocument;
pub use roles::{Role, RoleAssignment};
