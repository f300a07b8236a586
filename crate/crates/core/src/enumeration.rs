//! Listing minimal separators and minimal adjustment sets with polynomial
//! delay.
//!
//! Minimal adjustment sets of an X-loop-free DAG are exactly the minimal
//! `X`–`Y` separators of its ancestor moral graph once forbidden and latent
//! vertices have been projected out, so both listings share one separator
//! search.

use std::collections::HashSet;

use crate::criteria::{forbidden_mask, require_x_loop_free};
use crate::error::{Error, Result};
use crate::graph::{MixedGraph, Vertex, VertexSet};
use crate::roles::require_disjoint;

/// An undirected graph with some vertices removed, where any two remaining
/// vertices joined through removed ones become adjacent.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LatentProjection {
    graph: MixedGraph,
    kept: Vec<Vertex>,
    removed: VertexSet,
}

impl LatentProjection {
    /// The projected graph, with its own dense vertex ids.
    pub fn graph(&self) -> &MixedGraph {
        &self.graph
    }

    /// Original id of each projected vertex.
    pub fn original(&self, v: Vertex) -> Vertex {
        self.kept[v]
    }

    /// Projected id of an original vertex, unless it was removed.
    pub fn projected(&self, v: Vertex) -> Option<Vertex> {
        self.kept.binary_search(&v).ok()
    }

    /// Original ids of the removed vertices.
    pub fn removed(&self) -> &VertexSet {
        &self.removed
    }
}

fn require_undirected(g: &MixedGraph) -> Result<()> {
    if g.directed_edges().is_empty() {
        Ok(())
    } else {
        Err(Error::InvalidArgument("expected an undirected graph".into()))
    }
}

/// Removes `banned` from the undirected graph `gm`, turning the neighbourhood
/// of every connected group of banned vertices into a clique.
pub fn latent_project(gm: &MixedGraph, banned: &VertexSet, x: &VertexSet, y: &VertexSet) -> Result<LatentProjection> {
    require_undirected(gm)?;
    require_disjoint(gm, &[("X", x), ("Y", y)])?;
    require_disjoint(gm, &[("X", x), ("banned", banned)])?;
    require_disjoint(gm, &[("Y", y), ("banned", banned)])?;
    Ok(project(gm, &gm.mask(banned)?))
}

fn project(gm: &MixedGraph, banned: &[bool]) -> LatentProjection {
    let n = gm.vertex_count();
    let keep: Vec<bool> = banned.iter().map(|b| !b).collect();
    let (sub, kept) = gm.induced_subgraph(&keep);
    let mut new_id = vec![usize::MAX; n];
    for (i, &v) in kept.iter().enumerate() {
        new_id[v] = i;
    }
    let mut pairs = HashSet::new();
    let mut edges = Vec::new();
    let mut add = |u: Vertex, v: Vertex, edges: &mut Vec<(Vertex, Vertex)>| {
        let key = (u.min(v), u.max(v));
        if u != v && pairs.insert(key) {
            edges.push(key);
        }
    };
    for &(u, v) in sub.undirected_edges() {
        add(u, v, &mut edges);
    }
    let mut seen = vec![false; n];
    let mut border_mark = vec![usize::MAX; n];
    for root in (0..n).filter(|&v| banned[v]) {
        if seen[root] {
            continue;
        }
        seen[root] = true;
        let mut group = vec![root];
        let mut border = Vec::new();
        let mut i = 0;
        while i < group.len() {
            for &w in gm.neighbors(group[i]) {
                if banned[w] {
                    if !seen[w] {
                        seen[w] = true;
                        group.push(w);
                    }
                } else if border_mark[w] != root {
                    border_mark[w] = root;
                    border.push(new_id[w]);
                }
            }
            i += 1;
        }
        for (j, &a) in border.iter().enumerate() {
            for &b in &border[j + 1..] {
                add(a, b, &mut edges);
            }
        }
    }
    edges.sort_unstable();
    LatentProjection {
        graph: sub.with_edges(Vec::new(), edges),
        kept,
        removed: MixedGraph::set_of(banned),
    }
}

struct Frame {
    /// closed source side: the component of `X` once `sep` is removed
    side: Vec<bool>,
    /// vertices that must stay out of the source side
    fixed: Vec<bool>,
    sep: Vec<Vertex>,
}

/// Lazily enumerated minimal separators of an undirected graph.
///
/// Depth-first search over states `(A, R)` where `A` is a closed source side
/// and `R` holds vertices committed to the separator. Every state on the
/// stack has at least one solution, so the work between two outputs is
/// `O(n (n + m))`; the stack holds `O(n)` states of `O(n)` size each.
pub struct SeparatorStream {
    graph: MixedGraph,
    x: Vec<bool>,
    y: Vec<bool>,
    near_y: Vec<bool>,
    stack: Vec<Frame>,
}

impl SeparatorStream {
    fn new(graph: MixedGraph, x: Vec<bool>, y: Vec<bool>) -> Self {
        let n = graph.vertex_count();
        let mut near_y = y.clone();
        for v in (0..n).filter(|&v| y[v]) {
            for &w in graph.neighbors(v) {
                near_y[w] = true;
            }
        }
        let mut stream = SeparatorStream {
            graph,
            x,
            y,
            near_y,
            stack: Vec::new(),
        };
        let adjacent = (0..n).any(|v| stream.x[v] && stream.near_y[v]);
        let has_x = stream.x.iter().any(|&b| b);
        let has_y = stream.y.iter().any(|&b| b);
        if has_x && has_y && !adjacent {
            let seed = stream.x.clone();
            let (side, sep) = stream.close(&seed);
            stream.stack.push(Frame {
                side,
                fixed: vec![false; n],
                sep,
            });
        }
        stream
    }

    /// The minimal separator nearest to the sink side among those whose
    /// source component contains `seed`, with that component.
    fn close(&self, seed: &[bool]) -> (Vec<bool>, Vec<Vertex>) {
        let g = &self.graph;
        let n = g.vertex_count();
        let mut blocked = seed.to_vec();
        for v in (0..n).filter(|&v| seed[v]) {
            for &w in g.neighbors(v) {
                blocked[w] = true;
            }
        }
        let mut sink = vec![false; n];
        let mut stack: Vec<Vertex> = (0..n).filter(|&v| self.y[v]).collect();
        for &v in &stack {
            sink[v] = true;
        }
        let mut sep = vec![false; n];
        while let Some(v) = stack.pop() {
            for &w in g.neighbors(v) {
                if blocked[w] {
                    if !seed[w] {
                        sep[w] = true;
                    }
                } else if !sink[w] {
                    sink[w] = true;
                    stack.push(w);
                }
            }
        }
        let mut side = self.x.clone();
        let mut stack: Vec<Vertex> = (0..n).filter(|&v| self.x[v]).collect();
        while let Some(v) = stack.pop() {
            for &w in g.neighbors(v) {
                if !side[w] && !sep[w] {
                    side[w] = true;
                    stack.push(w);
                }
            }
        }
        (side, MixedGraph::set_of(&sep).into_iter().collect())
    }
}

impl Iterator for SeparatorStream {
    type Item = VertexSet;

    fn next(&mut self) -> Option<VertexSet> {
        while let Some(mut frame) = self.stack.pop() {
            let Some(&pivot) = frame.sep.iter().find(|&&v| !frame.fixed[v]) else {
                return Some(frame.sep.into_iter().collect());
            };
            if !self.near_y[pivot] {
                let mut seed = frame.side.clone();
                seed[pivot] = true;
                let (side, sep) = self.close(&seed);
                if !side.iter().zip(&frame.fixed).any(|(s, f)| *s && *f) {
                    self.stack.push(Frame {
                        side,
                        fixed: frame.fixed.clone(),
                        sep,
                    });
                }
            }
            frame.fixed[pivot] = true;
            self.stack.push(frame);
        }
        None
    }
}

/// Every inclusion-minimal set of vertices outside `x ∪ y` whose removal
/// disconnects `x` from `y`. Emits `∅` once when they are already
/// disconnected and nothing when they are adjacent.
pub fn list_minimal_separators(ug: &MixedGraph, x: &VertexSet, y: &VertexSet) -> Result<SeparatorStream> {
    require_undirected(ug)?;
    require_disjoint(ug, &[("X", x), ("Y", y)])?;
    Ok(SeparatorStream::new(ug.clone(), ug.mask(x)?, ug.mask(y)?))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum StreamStatus {
    /// More sets may follow.
    Open,
    /// Every minimal adjustment set has been emitted.
    Exhausted,
    /// Some biasing path runs only through forbidden or latent vertices.
    NoAdjustmentExists,
}

/// Resumable stream of minimal adjustment sets, in vertex ids of the DAG it
/// was created from.
pub struct AdjustmentStream {
    separators: SeparatorStream,
    /// DAG id of each vertex of the separator graph.
    back: Vec<Vertex>,
    emitted: usize,
    status: StreamStatus,
    #[cfg(debug_assertions)]
    audit: (MixedGraph, VertexSet, VertexSet),
}

impl AdjustmentStream {
    pub fn status(&self) -> StreamStatus {
        self.status
    }

    pub fn no_adjustment_exists(&self) -> bool {
        self.status == StreamStatus::NoAdjustmentExists
    }

    pub fn emitted(&self) -> usize {
        self.emitted
    }

    /// Up to `k` further sets; fewer only when the stream is exhausted.
    pub fn next_batch(&mut self, k: usize) -> Vec<VertexSet> {
        self.by_ref().take(k).collect()
    }

    #[cfg(debug_assertions)]
    fn audit(&self, z: &VertexSet) {
        use crate::criteria::{is_minimal, satisfies, Criterion};
        let (g, x, y) = &self.audit;
        for c in Criterion::ALL {
            debug_assert!(satisfies(g, x, y, z, c).unwrap(), "{c:?} fails for {z:?}");
        }
        debug_assert!(is_minimal(g, x, y, z, Criterion::Adjustment).unwrap());
    }
}

impl Iterator for AdjustmentStream {
    type Item = VertexSet;

    fn next(&mut self) -> Option<VertexSet> {
        if self.status != StreamStatus::Open {
            return None;
        }
        match self.separators.next() {
            Some(s) => {
                let z: VertexSet = s.into_iter().map(|v| self.back[v]).collect();
                #[cfg(debug_assertions)]
                self.audit(&z);
                self.emitted += 1;
                Some(z)
            }
            None => {
                self.status = StreamStatus::Exhausted;
                None
            }
        }
    }
}

/// Minimal adjustment sets for the effect of `x` on `y` that avoid the
/// latent vertices `l`.
///
/// The sets are the minimal separators of the ancestor moral graph of the
/// back-door graph after projecting out latent and forbidden vertices.
/// Requires an X-loop-free DAG.
pub fn list_minimal_adjustments(
    g: &MixedGraph,
    x: &VertexSet,
    y: &VertexSet,
    l: &VertexSet,
) -> Result<AdjustmentStream> {
    if !g.is_directed_only() {
        return Err(Error::InvalidArgument(
            "adjustment sets are defined on graphs with directed edges only".into(),
        ));
    }
    require_disjoint(g, &[("X", x), ("Y", y), ("latent", l)])?;
    if x.is_empty() || y.is_empty() {
        return Err(Error::InvalidArgument(
            "exposure and outcome sets must be non-empty".into(),
        ));
    }
    g.topological_numbering()?;
    let (xm, ym, lm) = (g.mask(x)?, g.mask(y)?, g.mask(l)?);
    require_x_loop_free(g, &xm)?;

    let (bd, _) = g.backdoor_graph_mask(&xm);
    let xy: Vec<bool> = xm.iter().zip(&ym).map(|(a, b)| *a || *b).collect();
    let (sub, back) = bd.induced_subgraph(&bd.ancestors_mask(&xy));
    let gm = sub.moralize()?;

    let forbidden = forbidden_mask(g, &xm, &ym);
    let banned: Vec<bool> = back.iter().map(|&v| (lm[v] || forbidden[v]) && !xy[v]).collect();
    let proj = project(&gm, &banned);
    let pg = proj.graph();
    let mut px = vec![false; pg.vertex_count()];
    let mut py = vec![false; pg.vertex_count()];
    for v in 0..pg.vertex_count() {
        let original = back[proj.original(v)];
        px[v] = xm[original];
        py[v] = ym[original];
    }
    let adjacent = (0..pg.vertex_count()).any(|v| px[v] && pg.neighbors(v).iter().any(|&w| py[w]));
    let back: Vec<Vertex> = (0..pg.vertex_count()).map(|v| back[proj.original(v)]).collect();
    Ok(AdjustmentStream {
        separators: SeparatorStream::new(pg.clone(), px, py),
        back,
        emitted: 0,
        status: if adjacent {
            StreamStatus::NoAdjustmentExists
        } else {
            StreamStatus::Open
        },
        #[cfg(debug_assertions)]
        audit: (g.clone(), x.clone(), y.clone()),
    })
}
