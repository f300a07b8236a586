//! Fork graphs, bottleneck numbers and the linear-time search for edges on
//! biasing paths.
//!
//! Conditioning on `Z` turns every path that is open given `Z` into a
//! *fork*: a path `x ← … ← a — … — b → … → y` in the fork graph. Finding the
//! vertices on forks needs one reverse-topological sweep, one block-cut tree
//! per undirected component and one forward search, so the whole pipeline is
//! linear in the size of the graph.

mod blocks;
mod bottleneck;

use std::collections::HashMap;

pub use blocks::{biconnected_components, BlockNode, BlockTree};
pub use bottleneck::{bottleneck_numbers, BottleneckTable};

use crate::error::{Error, Result};
use crate::graph::{MixedGraph, Path, Step, Vertex, VertexSet};
use crate::roles::require_disjoint;
use bottleneck::{sweep, Label};

/// A DAG after conditioning on `Z`: edges leaving `Z` dropped, edges into
/// `An(Z)` made undirected.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ForkGraph {
    graph: MixedGraph,
    directed_origin: Vec<usize>,
    undirected_origin: Vec<usize>,
    conditioned: VertexSet,
}

impl ForkGraph {
    pub fn graph(&self) -> &MixedGraph {
        &self.graph
    }

    pub fn conditioned(&self) -> &VertexSet {
        &self.conditioned
    }

    /// Index into the source DAG's directed edges for each directed edge.
    pub fn directed_origin(&self) -> &[usize] {
        &self.directed_origin
    }

    /// Index into the source DAG's directed edges for each undirected edge.
    pub fn undirected_origin(&self) -> &[usize] {
        &self.undirected_origin
    }
}

/// Fork graph of `g` without the edges in `cut`, given `z`. Origins index
/// into the directed edges of `g`.
fn build_fork_graph(g: &MixedGraph, z: &[bool], cut: impl Fn(Vertex, Vertex) -> bool) -> ForkGraph {
    let mut an_z = z.to_vec();
    let mut stack: Vec<Vertex> = (0..an_z.len()).filter(|&v| an_z[v]).collect();
    while let Some(v) = stack.pop() {
        for &p in g.parents(v) {
            if !an_z[p] && !cut(p, v) {
                an_z[p] = true;
                stack.push(p);
            }
        }
    }
    let m = g.directed_edges().len();
    let (mut directed, mut undirected) = (Vec::with_capacity(m), Vec::with_capacity(m));
    let (mut directed_origin, mut undirected_origin) = (Vec::with_capacity(m), Vec::with_capacity(m));
    for (i, &(v, w)) in g.directed_edges().iter().enumerate() {
        if z[v] || cut(v, w) {
            continue;
        }
        if an_z[w] {
            undirected.push((v, w));
            undirected_origin.push(i);
        } else {
            directed.push((v, w));
            directed_origin.push(i);
        }
    }
    ForkGraph {
        graph: g.with_edges(directed, undirected),
        directed_origin,
        undirected_origin,
        conditioned: MixedGraph::set_of(z),
    }
}

pub fn fork_graph(g: &MixedGraph, z: &VertexSet) -> Result<ForkGraph> {
    if !g.is_directed_only() {
        return Err(Error::InvalidArgument(
            "fork graphs are built from graphs with directed edges only".into(),
        ));
    }
    Ok(build_fork_graph(g, &g.mask(z)?, |_, _| false))
}

/// Does `p`, read from its `x` end, consist of backward steps, then
/// undirected steps, then forward steps? Any of the three runs may be empty.
pub fn is_fork(g: &MixedGraph, p: &Path, x: &VertexSet, y: &VertexSet) -> Result<bool> {
    for (pair, &step) in p.vertices().windows(2).zip(p.steps()) {
        if pair.iter().any(|&v| v >= g.vertex_count()) || g.step_between(pair[0], pair[1]) != Some(step) {
            return Err(Error::InvalidArgument("the path is not a path of the graph".into()));
        }
    }
    if !x.contains(&p.first()) || !y.contains(&p.last()) {
        return Err(Error::InvalidArgument(
            "the path must run from an exposure to an outcome".into(),
        ));
    }
    let rank = |s: &Step| match s {
        Step::Backward => 0,
        Step::Undirected => 1,
        Step::Forward => 2,
    };
    Ok(p.steps().windows(2).all(|w| rank(&w[0]) <= rank(&w[1])))
}

/// Vertices lying on at least one fork between `x` and `y` in the fork
/// graph `fg`.
pub fn identify_fork_vertices(fg: &MixedGraph, x: &VertexSet, y: &VertexSet) -> Result<VertexSet> {
    require_disjoint(fg, &[("X", x), ("Y", y)])?;
    let mask = fork_vertex_mask(fg, fg.topological_numbering()?, &fg.mask(x)?, &fg.mask(y)?);
    Ok(MixedGraph::set_of(&mask))
}

/// `t` is a topological numbering of the directed part of `fg`.
fn fork_vertex_mask(fg: &MixedGraph, t: Vec<usize>, x: &[bool], y: &[bool]) -> Vec<bool> {
    let n = fg.vertex_count();
    let sw = sweep(fg, t, x, y);
    // tops of forks that are entirely directed
    let mut on_fork: Vec<bool> = (0..n).map(|v| sw.table.is_own_bottleneck(v)).collect();

    // undirected middles: a vertex lies on a simple path between two
    // differently labelled vertices of its component iff the block-cut
    // tree path between the corresponding gadgets passes its block. Each
    // (component, label) pair gets a gadget s_i = n + 2i, t_i = n + 2i + 1
    // with t_i joined to every vertex of the component carrying the label.
    let mut component = vec![usize::MAX; n];
    let mut queue = Vec::new();
    for root in 0..n {
        if component[root] != usize::MAX || fg.neighbors(root).is_empty() {
            continue;
        }
        component[root] = root;
        queue.push(root);
        while let Some(v) = queue.pop() {
            for &w in fg.neighbors(v) {
                if component[w] == usize::MAX {
                    component[w] = root;
                    queue.push(w);
                }
            }
        }
    }
    let mut gadget: HashMap<(usize, Label), usize> = HashMap::new();
    let mut gadget_of = vec![usize::MAX; n];
    for v in 0..n {
        if let (c, Some(l)) = (component[v], sw.label(v)) {
            if c != usize::MAX {
                let next = gadget.len();
                gadget_of[v] = *gadget.entry((c, l)).or_insert(next);
            }
        }
    }
    let gadgets = gadget.len();
    let edges = fg
        .undirected_edges()
        .iter()
        .copied()
        .chain(
            (0..n)
                .filter(|&v| gadget_of[v] != usize::MAX)
                .map(|v| (n + 2 * gadget_of[v] + 1, v)),
        )
        .chain((0..gadgets).map(|i| (n + 2 * i, n + 2 * i + 1)));
    let mut tree = BlockTree::from_edge_iter(n + 2 * gadgets, edges);
    let terminal: Vec<bool> = tree
        .nodes()
        .iter()
        .map(|node| matches!(node, BlockNode::Block(vs) if vs.iter().any(|&v| v >= n && (v - n) % 2 == 0)))
        .collect();
    tree.label_between(&terminal);
    for v in tree.labelled_vertices().filter(|&v| v < n) {
        on_fork[v] = true;
    }

    // directed legs hanging below the tops and middles
    let mut stack: Vec<Vertex> = (0..n).filter(|&v| on_fork[v]).collect();
    while let Some(v) = stack.pop() {
        for &c in fg.children(v) {
            if !on_fork[c] && (sw.to_x[c] || sw.to_y[c]) {
                on_fork[c] = true;
                stack.push(c);
            }
        }
    }
    on_fork
}

/// Directed edges of the source DAG that lie on biasing paths.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BiasReport {
    /// Edges `(u, v)` meaning `u -> v`, in the DAG's edge order.
    pub edges: Vec<(Vertex, Vertex)>,
    /// Set when `Z` contains a descendant of `X`. Open paths that leave `X`
    /// through its children are not reported in that case.
    pub adjusts_exposure_descendant: bool,
}

/// Edges on paths from `x` to `y` that are open given `z` in the graph
/// without the edges leaving `x`.
pub fn biasing_edges(g: &MixedGraph, x: &VertexSet, y: &VertexSet, z: &VertexSet) -> Result<BiasReport> {
    if !g.is_directed_only() {
        return Err(Error::InvalidArgument(
            "biasing edges are defined on graphs with directed edges only".into(),
        ));
    }
    require_disjoint(g, &[("X", x), ("Y", y), ("Z", z)])?;
    // edges of g are a superset of the fork graph's directed edges
    let t = g.topological_numbering()?;
    let (xm, ym, zm) = (g.mask(x)?, g.mask(y)?, g.mask(z)?);
    let de_x = g.descendants_mask(&xm);
    let adjusts_exposure_descendant = (0..g.vertex_count()).any(|v| zm[v] && de_x[v]);

    // the back-door graph drops the edges leaving x
    let fg = build_fork_graph(g, &zm, |u, v| xm[u] && !xm[v]);
    let on_fork = fork_vertex_mask(&fg.graph, t, &xm, &ym);
    let mut kept: Vec<usize> = fg
        .graph
        .directed_edges()
        .iter()
        .zip(&fg.directed_origin)
        .chain(fg.graph.undirected_edges().iter().zip(&fg.undirected_origin))
        .filter(|((u, v), _)| on_fork[*u] && on_fork[*v])
        .map(|(_, &i)| i)
        .collect();
    kept.sort_unstable();
    Ok(BiasReport {
        edges: kept.into_iter().map(|i| g.directed_edges()[i]).collect(),
        adjusts_exposure_descendant,
    })
}
