//! Mixed graphs (directed plus undirected edges) and the surgeries and
//! reachability primitives the analyses are built from.
//!
//! Vertices are dense indices into the graph's name table, numbered in order
//! of first appearance. Every set-valued result is a [`VertexSet`], which
//! iterates in that order.

use std::collections::{BTreeSet, HashMap, HashSet, VecDeque};
use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};

pub type Vertex = usize;
pub type VertexSet = BTreeSet<Vertex>;

/// Orientation of one step along a [`Path`], relative to the walking direction.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Step {
    /// `a -> b`
    Forward,
    /// `a <- b`
    Backward,
    /// `a -- b`
    Undirected,
}

impl Step {
    fn arrow(self) -> &'static str {
        match self {
            Step::Forward => "->",
            Step::Backward => "<-",
            Step::Undirected => "--",
        }
    }
}

/// A simple path: no vertex occurs twice. Length-0 paths are allowed.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Path {
    vertices: Vec<Vertex>,
    steps: Vec<Step>,
}

impl Path {
    pub fn single(v: Vertex) -> Self {
        Path {
            vertices: vec![v],
            steps: Vec::new(),
        }
    }

    /// Builds a path from a vertex sequence, reading each step's orientation
    /// off `g`.
    pub fn from_vertices(g: &MixedGraph, vertices: &[Vertex]) -> Result<Self> {
        if vertices.is_empty() {
            return Err(Error::InvalidArgument("a path needs at least one vertex".into()));
        }
        g.check_vertices(vertices.iter().copied())?;
        let mut seen = HashSet::with_capacity(vertices.len());
        for &v in vertices {
            if !seen.insert(v) {
                return Err(Error::InvalidArgument(format!(
                    "vertex `{}` occurs twice on the path",
                    g.name(v)
                )));
            }
        }
        let mut steps = Vec::with_capacity(vertices.len() - 1);
        for pair in vertices.windows(2) {
            let step = g.step_between(pair[0], pair[1]).ok_or_else(|| {
                Error::InvalidArgument(format!(
                    "`{}` and `{}` are not adjacent",
                    g.name(pair[0]),
                    g.name(pair[1])
                ))
            })?;
            steps.push(step);
        }
        Ok(Path {
            vertices: vertices.to_vec(),
            steps,
        })
    }

    /// Builds a path from explicit parts. The caller guarantees consistency.
    pub(crate) fn from_parts(vertices: Vec<Vertex>, steps: Vec<Step>) -> Self {
        debug_assert_eq!(vertices.len(), steps.len() + 1);
        Path { vertices, steps }
    }

    pub fn vertices(&self) -> &[Vertex] {
        &self.vertices
    }

    pub fn steps(&self) -> &[Step] {
        &self.steps
    }

    /// Number of edges.
    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    pub fn first(&self) -> Vertex {
        self.vertices[0]
    }

    pub fn last(&self) -> Vertex {
        self.vertices[self.vertices.len() - 1]
    }

    /// True if every step points away from the first vertex.
    pub fn is_directed_forward(&self) -> bool {
        self.steps.iter().all(|s| *s == Step::Forward)
    }

    pub fn display<'a>(&'a self, g: &'a MixedGraph) -> PathDisplay<'a> {
        PathDisplay { path: self, graph: g }
    }
}

pub struct PathDisplay<'a> {
    path: &'a Path,
    graph: &'a MixedGraph,
}

impl fmt::Display for PathDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.graph.name(self.path.vertices[0]))?;
        for (step, v) in self.path.steps.iter().zip(&self.path.vertices[1..]) {
            write!(f, " {} {}", step.arrow(), self.graph.name(*v))?;
        }
        Ok(())
    }
}

/// Vertices plus directed and undirected edges.
///
/// DAGs, moral graphs and fork graphs all use this one type; acyclicity is a
/// checked precondition of the operations that need it. Graphs are immutable
/// once built (see [`GraphBuilder`]); derived graphs over the same vertex set
/// share the name table.
#[derive(Clone)]
pub struct MixedGraph {
    names: Arc<[String]>,
    index: Arc<HashMap<String, Vertex>>,
    directed: Vec<(Vertex, Vertex)>,
    undirected: Vec<(Vertex, Vertex)>,
    children: Adjacency,
    parents: Adjacency,
    neighbors: Adjacency,
}

/// Adjacency lists packed into one buffer; each list keeps edge order.
#[derive(Debug, Clone)]
struct Adjacency {
    offsets: Vec<usize>,
    targets: Vec<Vertex>,
}

impl Adjacency {
    fn new(n: usize, arcs: impl Iterator<Item = (Vertex, Vertex)> + Clone) -> Self {
        let mut offsets = vec![0; n + 1];
        for (u, _) in arcs.clone() {
            offsets[u + 1] += 1;
        }
        for i in 0..n {
            offsets[i + 1] += offsets[i];
        }
        let mut fill = offsets.clone();
        let mut targets = vec![0; offsets[n]];
        for (u, v) in arcs {
            targets[fill[u]] = v;
            fill[u] += 1;
        }
        Adjacency { offsets, targets }
    }

    fn degree(&self, v: Vertex) -> usize {
        self.offsets[v + 1] - self.offsets[v]
    }
}

impl std::ops::Index<Vertex> for Adjacency {
    type Output = [Vertex];

    fn index(&self, v: Vertex) -> &[Vertex] {
        &self.targets[self.offsets[v]..self.offsets[v + 1]]
    }
}

impl fmt::Debug for MixedGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let directed: Vec<_> = self
            .directed
            .iter()
            .map(|&(u, v)| format!("{}->{}", self.name(u), self.name(v)))
            .collect();
        let undirected: Vec<_> = self
            .undirected
            .iter()
            .map(|&(u, v)| format!("{}--{}", self.name(u), self.name(v)))
            .collect();
        f.debug_struct("MixedGraph")
            .field("vertices", &self.names)
            .field("directed", &directed)
            .field("undirected", &undirected)
            .finish()
    }
}

impl PartialEq for MixedGraph {
    fn eq(&self, other: &Self) -> bool {
        self.names == other.names && self.directed == other.directed && self.undirected == other.undirected
    }
}

impl Eq for MixedGraph {}

impl MixedGraph {
    /// Graph over `names` with the given edges; edges must already satisfy
    /// the no-self-loop and no-parallel-edge invariants.
    fn assemble(
        names: Arc<[String]>,
        index: Arc<HashMap<String, Vertex>>,
        directed: Vec<(Vertex, Vertex)>,
        undirected: Vec<(Vertex, Vertex)>,
    ) -> Self {
        let n = names.len();
        let children = Adjacency::new(n, directed.iter().copied());
        let parents = Adjacency::new(n, directed.iter().map(|&(u, v)| (v, u)));
        let neighbors = Adjacency::new(n, undirected.iter().flat_map(|&(u, v)| [(u, v), (v, u)]));
        MixedGraph {
            names,
            index,
            directed,
            undirected,
            children,
            parents,
            neighbors,
        }
    }

    /// Same vertex set, different edges.
    pub(crate) fn with_edges(&self, directed: Vec<(Vertex, Vertex)>, undirected: Vec<(Vertex, Vertex)>) -> Self {
        Self::assemble(self.names.clone(), self.index.clone(), directed, undirected)
    }

    pub fn vertex_count(&self) -> usize {
        self.names.len()
    }

    pub fn edge_count(&self) -> usize {
        self.directed.len() + self.undirected.len()
    }

    pub fn vertices(&self) -> impl Iterator<Item = Vertex> + '_ {
        0..self.names.len()
    }

    pub fn name(&self, v: Vertex) -> &str {
        &self.names[v]
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn vertex(&self, name: &str) -> Option<Vertex> {
        self.index.get(name).copied()
    }

    /// Resolves a list of names, failing on the first unknown one.
    pub fn vertex_set<S: AsRef<str>>(&self, names: &[S]) -> Result<VertexSet> {
        names
            .iter()
            .map(|n| {
                self.vertex(n.as_ref())
                    .ok_or_else(|| Error::UnknownVertex(n.as_ref().to_string()))
            })
            .collect()
    }

    pub fn names_of<'a>(&'a self, set: impl IntoIterator<Item = &'a Vertex>) -> Vec<&'a str> {
        set.into_iter().map(|&v| self.name(v)).collect()
    }

    /// Directed edges in insertion order.
    pub fn directed_edges(&self) -> &[(Vertex, Vertex)] {
        &self.directed
    }

    /// Undirected edges in insertion order.
    pub fn undirected_edges(&self) -> &[(Vertex, Vertex)] {
        &self.undirected
    }

    pub fn children(&self, v: Vertex) -> &[Vertex] {
        &self.children[v]
    }

    pub fn parents(&self, v: Vertex) -> &[Vertex] {
        &self.parents[v]
    }

    /// Undirected neighbours only.
    pub fn neighbors(&self, v: Vertex) -> &[Vertex] {
        &self.neighbors[v]
    }

    pub fn has_directed(&self, u: Vertex, v: Vertex) -> bool {
        self.children[u].contains(&v)
    }

    pub fn has_undirected(&self, u: Vertex, v: Vertex) -> bool {
        self.neighbors[u].contains(&v)
    }

    pub fn is_directed_only(&self) -> bool {
        self.undirected.is_empty()
    }

    /// Orientation of the edge between `a` and `b` when walking from `a`.
    pub fn step_between(&self, a: Vertex, b: Vertex) -> Option<Step> {
        if self.has_directed(a, b) {
            Some(Step::Forward)
        } else if self.has_directed(b, a) {
            Some(Step::Backward)
        } else if self.has_undirected(a, b) {
            Some(Step::Undirected)
        } else {
            None
        }
    }

    pub(crate) fn check_vertices(&self, vs: impl IntoIterator<Item = Vertex>) -> Result<()> {
        for v in vs {
            if v >= self.names.len() {
                return Err(Error::UnknownVertex(format!("#{v}")));
            }
        }
        Ok(())
    }

    pub(crate) fn mask(&self, set: &VertexSet) -> Result<Vec<bool>> {
        let mut mask = vec![false; self.vertex_count()];
        for &v in set {
            if v >= mask.len() {
                return Err(Error::UnknownVertex(format!("#{v}")));
            }
            mask[v] = true;
        }
        Ok(mask)
    }

    pub(crate) fn set_of(mask: &[bool]) -> VertexSet {
        mask.iter().enumerate().filter_map(|(v, &m)| m.then_some(v)).collect()
    }

    /// Marks everything reachable from `seeds` by following `next`.
    pub(crate) fn closure_mask<'g, F>(&'g self, seeds: &[bool], next: F) -> Vec<bool>
    where
        F: Fn(Vertex) -> &'g [Vertex],
    {
        let mut seen = seeds.to_vec();
        let mut stack: Vec<Vertex> = (0..seen.len()).filter(|&v| seen[v]).collect();
        while let Some(v) = stack.pop() {
            for &w in next(v) {
                if !seen[w] {
                    seen[w] = true;
                    stack.push(w);
                }
            }
        }
        seen
    }

    pub(crate) fn ancestors_mask(&self, seeds: &[bool]) -> Vec<bool> {
        self.closure_mask(seeds, |v| self.parents(v))
    }

    pub(crate) fn descendants_mask(&self, seeds: &[bool]) -> Vec<bool> {
        self.closure_mask(seeds, |v| self.children(v))
    }

    /// `An(w)`: every vertex with a directed path into `w`, including `w`.
    pub fn ancestors(&self, w: &VertexSet) -> Result<VertexSet> {
        let seeds = self.mask(w)?;
        Ok(Self::set_of(&self.ancestors_mask(&seeds)))
    }

    /// `De(w)`: every vertex reachable from `w` by a directed path, including `w`.
    pub fn descendants(&self, w: &VertexSet) -> Result<VertexSet> {
        let seeds = self.mask(w)?;
        Ok(Self::set_of(&self.descendants_mask(&seeds)))
    }

    /// Induced subgraph on the marked vertices, renumbered in inherited order.
    /// Also returns the map from new vertex ids to ids in `self`.
    pub fn induced_subgraph(&self, keep: &[bool]) -> (MixedGraph, Vec<Vertex>) {
        let mut new_id = vec![usize::MAX; self.vertex_count()];
        let mut back = Vec::new();
        for v in self.vertices().filter(|&v| keep[v]) {
            new_id[v] = back.len();
            back.push(v);
        }
        let names: Arc<[String]> = back.iter().map(|&v| self.names[v].clone()).collect();
        let index = Arc::new(
            names
                .iter()
                .enumerate()
                .map(|(i, n)| (n.clone(), i))
                .collect::<HashMap<_, _>>(),
        );
        let directed = self
            .directed
            .iter()
            .filter(|&&(u, v)| keep[u] && keep[v])
            .map(|&(u, v)| (new_id[u], new_id[v]))
            .collect();
        let undirected = self
            .undirected
            .iter()
            .filter(|&&(u, v)| keep[u] && keep[v])
            .map(|&(u, v)| (new_id[u], new_id[v]))
            .collect();
        (Self::assemble(names, index, directed, undirected), back)
    }

    /// The subgraph induced by `An(w)`.
    pub fn ancestor_graph(&self, w: &VertexSet) -> Result<MixedGraph> {
        let seeds = self.mask(w)?;
        Ok(self.induced_subgraph(&self.ancestors_mask(&seeds)).0)
    }

    /// Marries all co-parents, then drops every orientation.
    pub fn moralize(&self) -> Result<MixedGraph> {
        if !self.is_directed_only() {
            return Err(Error::InvalidArgument(
                "moralization needs a graph with directed edges only".into(),
            ));
        }
        let mut seen = HashSet::new();
        let mut undirected = Vec::new();
        let mut add = |u: Vertex, v: Vertex, out: &mut Vec<(Vertex, Vertex)>| {
            let key = (u.min(v), u.max(v));
            if seen.insert(key) {
                out.push((u, v));
            }
        };
        for &(u, v) in &self.directed {
            add(u, v, &mut undirected);
        }
        for v in self.vertices() {
            let ps = &self.parents[v];
            for (i, &p) in ps.iter().enumerate() {
                for &q in &ps[i + 1..] {
                    add(p, q, &mut undirected);
                }
            }
        }
        Ok(self.with_edges(Vec::new(), undirected))
    }

    /// Removes every edge `u -> v` with `u` in `x` and `v` outside `x`.
    pub fn backdoor_graph(&self, x: &VertexSet) -> Result<MixedGraph> {
        let xm = self.mask(x)?;
        Ok(self.backdoor_graph_mask(&xm).0)
    }

    /// Back-door graph plus, for each surviving directed edge, its index in `self`.
    pub(crate) fn backdoor_graph_mask(&self, xm: &[bool]) -> (MixedGraph, Vec<usize>) {
        let mut origin = Vec::with_capacity(self.directed.len());
        let directed = self
            .directed
            .iter()
            .enumerate()
            .filter(|&(_, &(u, v))| !(xm[u] && !xm[v]))
            .map(|(i, &e)| {
                origin.push(i);
                e
            })
            .collect();
        (self.with_edges(directed, self.undirected.clone()), origin)
    }

    /// Removes every directed edge entering `x` (the graph of `do(x)`).
    pub fn do_graph(&self, x: &VertexSet) -> Result<MixedGraph> {
        let xm = self.mask(x)?;
        Ok(self.do_graph_mask(&xm))
    }

    pub(crate) fn do_graph_mask(&self, xm: &[bool]) -> MixedGraph {
        let directed = self.directed.iter().copied().filter(|&(_, v)| !xm[v]).collect();
        self.with_edges(directed, self.undirected.clone())
    }

    /// Kahn's algorithm over the directed edges with a first-in first-out
    /// queue seeded with the sources in vertex order. Numbers start at 1.
    pub fn topological_numbering(&self) -> Result<Vec<usize>> {
        let n = self.vertex_count();
        let mut indegree: Vec<usize> = self.vertices().map(|v| self.parents.degree(v)).collect();
        let mut ready: VecDeque<Vertex> = (0..n).filter(|&v| indegree[v] == 0).collect();
        let mut number = vec![0; n];
        let mut next = 1;
        while let Some(v) = ready.pop_front() {
            number[v] = next;
            next += 1;
            for &c in &self.children[v] {
                indegree[c] -= 1;
                if indegree[c] == 0 {
                    ready.push_back(c);
                }
            }
        }
        if next <= n {
            return Err(Error::Cyclic(self.name(self.cycle_vertex(&number)).to_string()));
        }
        Ok(number)
    }

    /// Some vertex on a directed cycle, given the partial numbering left by
    /// Kahn's algorithm (unnumbered vertices all have an unnumbered parent).
    fn cycle_vertex(&self, number: &[usize]) -> Vertex {
        let start = (0..number.len()).find(|&v| number[v] == 0).expect("cycle exists");
        let mut visited = vec![false; number.len()];
        let mut v = start;
        while !visited[v] {
            visited[v] = true;
            v = *self.parents[v]
                .iter()
                .find(|&&p| number[p] == 0)
                .expect("unnumbered vertex keeps an unnumbered parent");
        }
        v
    }

    pub fn is_acyclic(&self) -> bool {
        self.topological_numbering().is_ok()
    }

    /// A directed path with at least two edges that starts and ends in `x`
    /// with every interior vertex outside `x`, if one exists.
    pub fn x_loop(&self, x: &VertexSet) -> Result<Option<Path>> {
        let xm = self.mask(x)?;
        Ok(self.x_loop_mask(&xm))
    }

    pub(crate) fn x_loop_mask(&self, xm: &[bool]) -> Option<Path> {
        let n = self.vertex_count();
        let mut pred = vec![usize::MAX; n];
        let mut queue = VecDeque::new();
        for x in (0..n).filter(|&v| xm[v]) {
            for &c in &self.children[x] {
                if !xm[c] && pred[c] == usize::MAX {
                    pred[c] = x;
                    queue.push_back(c);
                }
            }
        }
        while let Some(v) = queue.pop_front() {
            for &c in &self.children[v] {
                if xm[c] {
                    let mut vertices = vec![c, v];
                    let mut u = v;
                    while !xm[u] {
                        u = pred[u];
                        vertices.push(u);
                    }
                    vertices.reverse();
                    let steps = vec![Step::Forward; vertices.len() - 1];
                    return Some(Path::from_parts(vertices, steps));
                }
                if pred[c] == usize::MAX {
                    pred[c] = v;
                    queue.push_back(c);
                }
            }
        }
        None
    }

    pub fn is_x_loop_free(&self, x: &VertexSet) -> Result<bool> {
        Ok(self.x_loop(x)?.is_none())
    }
}

/// Incremental construction of a [`MixedGraph`] with invariant checks.
#[derive(Default)]
pub struct GraphBuilder {
    names: Vec<String>,
    index: HashMap<String, Vertex>,
    directed: Vec<(Vertex, Vertex)>,
    undirected: Vec<(Vertex, Vertex)>,
    /// Joined pairs, keyed smaller id first; the value is the orientation
    /// of a directed edge and `None` for an undirected one.
    pairs: HashMap<(Vertex, Vertex), Option<(Vertex, Vertex)>>,
}

impl GraphBuilder {
    pub fn new() -> Self {
        Self::default()
    }

    /// Returns the existing id when the name is already known.
    pub fn add_vertex(&mut self, name: &str) -> Vertex {
        if let Some(&v) = self.index.get(name) {
            return v;
        }
        let v = self.names.len();
        self.names.push(name.to_string());
        self.index.insert(name.to_string(), v);
        v
    }

    pub fn vertex(&self, name: &str) -> Option<Vertex> {
        self.index.get(name).copied()
    }

    pub fn vertex_count(&self) -> usize {
        self.names.len()
    }

    fn check_new_edge(&self, u: Vertex, v: Vertex) -> Result<()> {
        if u >= self.names.len() || v >= self.names.len() {
            return Err(Error::UnknownVertex(format!("#{}", u.max(v))));
        }
        if u == v {
            return Err(Error::InvalidArgument(format!("self-loop on `{}`", self.names[u])));
        }
        Ok(())
    }

    /// Adds `u -> v`. Re-adding an identical edge is a no-op and returns `false`.
    pub fn add_directed(&mut self, u: Vertex, v: Vertex) -> Result<bool> {
        self.check_new_edge(u, v)?;
        match self.pairs.get(&(u.min(v), u.max(v))) {
            Some(&Some(e)) if e == (u, v) => Ok(false),
            Some(_) => Err(self.already_joined(u, v)),
            None => {
                self.pairs.insert((u.min(v), u.max(v)), Some((u, v)));
                self.directed.push((u, v));
                Ok(true)
            }
        }
    }

    /// Adds `u -- v`. Re-adding an identical edge is a no-op and returns `false`.
    pub fn add_undirected(&mut self, u: Vertex, v: Vertex) -> Result<bool> {
        self.check_new_edge(u, v)?;
        match self.pairs.get(&(u.min(v), u.max(v))) {
            Some(None) => Ok(false),
            Some(Some(_)) => Err(self.already_joined(u, v)),
            None => {
                self.pairs.insert((u.min(v), u.max(v)), None);
                self.undirected.push((u, v));
                Ok(true)
            }
        }
    }

    fn already_joined(&self, u: Vertex, v: Vertex) -> Error {
        Error::InvalidArgument(format!(
            "`{}` and `{}` are already joined by another edge",
            self.names[u], self.names[v]
        ))
    }

    pub fn build(self) -> MixedGraph {
        MixedGraph::assemble(self.names.into(), Arc::new(self.index), self.directed, self.undirected)
    }
}

/// Convenience constructor used throughout the tests: vertices are named in
/// order of first appearance in `edges`, then `isolated`.
pub fn dag_from_edges(edges: &[(&str, &str)], isolated: &[&str]) -> Result<MixedGraph> {
    let mut b = GraphBuilder::new();
    for &(u, v) in edges {
        let u = b.add_vertex(u);
        let v = b.add_vertex(v);
        b.add_directed(u, v)?;
    }
    for name in isolated {
        b.add_vertex(name);
    }
    Ok(b.build())
}
