//! Brute-force reference implementations.
//!
//! Everything here enumerates paths or subsets explicitly and is only meant
//! for graphs with a handful of vertices. None of it reuses the fast
//! algorithms; only [`MixedGraph`] and its elementary operations are shared.

use std::collections::BTreeSet;
use std::time::{Duration, Instant};

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::criteria::Criterion;
use crate::error::{Error, Result};
use crate::fork::BottleneckTable;
use crate::graph::{GraphBuilder, MixedGraph, Path, Step, Vertex, VertexSet};
use crate::model_io::DiagramDocument;
use crate::roles::RoleAssignment;

/// Hard caps on oracle inputs and effort.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct OracleBudget {
    pub max_vertices: usize,
    pub max_paths: usize,
    pub time: Duration,
}

impl Default for OracleBudget {
    fn default() -> Self {
        OracleBudget {
            max_vertices: 9,
            max_paths: 1_000_000,
            time: Duration::from_secs(30),
        }
    }
}

impl OracleBudget {
    fn admit(&self, g: &MixedGraph) -> Result<Instant> {
        if g.vertex_count() > self.max_vertices {
            return Err(Error::BudgetExceeded(format!(
                "{} vertices, at most {} allowed",
                g.vertex_count(),
                self.max_vertices
            )));
        }
        Ok(Instant::now() + self.time)
    }
}

fn has(set: &VertexSet, v: Vertex) -> bool {
    set.contains(&v)
}

fn ancestors_of(g: &MixedGraph, set: &VertexSet) -> VertexSet {
    let mut out = set.clone();
    let mut todo: Vec<Vertex> = set.iter().copied().collect();
    while let Some(v) = todo.pop() {
        for &p in g.parents(v) {
            if out.insert(p) {
                todo.push(p);
            }
        }
    }
    out
}

fn descendants_of(g: &MixedGraph, set: &VertexSet, skip: &VertexSet) -> VertexSet {
    let mut out = set.clone();
    let mut todo: Vec<Vertex> = set.iter().copied().collect();
    while let Some(v) = todo.pop() {
        for &c in g.children(v) {
            if !skip.contains(&c) && out.insert(c) {
                todo.push(c);
            }
        }
    }
    out
}

fn adjacent(g: &MixedGraph, v: Vertex) -> Vec<Vertex> {
    let mut all: Vec<Vertex> = g
        .children(v)
        .iter()
        .chain(g.parents(v))
        .chain(g.neighbors(v))
        .copied()
        .collect();
    all.sort_unstable();
    all
}

/// Every simple path that starts in `x` and ends in `y`, by backtracking in
/// vertex order. Interior vertices are unrestricted, so a path may pass
/// through further members of `x` or `y`.
pub fn all_simple_paths(g: &MixedGraph, x: &VertexSet, y: &VertexSet, budget: &OracleBudget) -> Result<Vec<Path>> {
    let deadline = budget.admit(g)?;
    let mut out = Vec::new();
    let mut on_path = vec![false; g.vertex_count()];
    for &start in x {
        let mut vertices = vec![start];
        on_path[start] = true;
        extend(g, y, &mut vertices, &mut on_path, &mut out, budget, deadline)?;
        on_path[start] = false;
    }
    Ok(out)
}

fn extend(
    g: &MixedGraph,
    y: &VertexSet,
    vertices: &mut Vec<Vertex>,
    on_path: &mut [bool],
    out: &mut Vec<Path>,
    budget: &OracleBudget,
    deadline: Instant,
) -> Result<()> {
    let v = *vertices.last().expect("path is never empty");
    if vertices.len() > 1 && has(y, v) {
        if out.len() >= budget.max_paths {
            return Err(Error::BudgetExceeded(format!("more than {} paths", budget.max_paths)));
        }
        out.push(Path::from_vertices(g, vertices)?);
    }
    if Instant::now() > deadline {
        return Err(Error::BudgetExceeded("time budget exhausted".into()));
    }
    for w in adjacent(g, v) {
        if !on_path[w] {
            on_path[w] = true;
            vertices.push(w);
            extend(g, y, vertices, on_path, out, budget, deadline)?;
            vertices.pop();
            on_path[w] = false;
        }
    }
    Ok(())
}

fn check_path(g: &MixedGraph, p: &Path) -> Result<()> {
    for (pair, &step) in p.vertices().windows(2).zip(p.steps()) {
        let valid = pair.iter().all(|&v| v < g.vertex_count()) && g.step_between(pair[0], pair[1]) == Some(step);
        if !valid {
            return Err(Error::InvalidArgument("the path is not a path of the graph".into()));
        }
    }
    Ok(())
}

/// A path is open given `z` when every collider `a -> v <- b` on it has a
/// descendant in `z` (or is in `z`) and every other interior vertex is
/// outside `z`.
pub fn path_is_open(g: &MixedGraph, p: &Path, z: &VertexSet) -> Result<bool> {
    check_path(g, p)?;
    let an_z = ancestors_of(g, z);
    Ok(open_given(p, z, &an_z))
}

fn open_given(p: &Path, z: &VertexSet, an_z: &VertexSet) -> bool {
    let vs = p.vertices();
    let steps = p.steps();
    (1..vs.len().saturating_sub(1)).all(|i| {
        let collider = steps[i - 1] == Step::Forward && steps[i] == Step::Backward;
        if collider {
            has(an_z, vs[i])
        } else {
            !has(z, vs[i])
        }
    })
}

fn is_causal(p: &Path) -> bool {
    p.steps().iter().all(|&s| s == Step::Forward)
}

fn is_proper(p: &Path, x: &VertexSet) -> bool {
    p.vertices()[1..].iter().all(|v| !has(x, *v))
}

/// Everything needed to test many candidate sets against one query.
struct Query {
    forbidden: VertexSet,
    /// proper non-causal paths of the DAG
    noncausal: Vec<Path>,
    /// all paths of the back-door graph
    backdoor_paths: Vec<Path>,
    backdoor: MixedGraph,
    de_x: VertexSet,
    an_xy: VertexSet,
    moral: MixedGraph,
    /// moral graph vertex -> DAG vertex
    moral_back: Vec<Vertex>,
}

impl Query {
    fn new(g: &MixedGraph, x: &VertexSet, y: &VertexSet, budget: &OracleBudget) -> Result<Query> {
        let paths = all_simple_paths(g, x, y, budget)?;
        let mut causal_vertices = VertexSet::new();
        let mut noncausal = Vec::new();
        for p in paths.into_iter().filter(|p| is_proper(p, x)) {
            if is_causal(&p) {
                causal_vertices.extend(p.vertices()[1..].iter().copied());
            } else {
                noncausal.push(p);
            }
        }
        let forbidden = descendants_of(g, &causal_vertices, x);
        let backdoor = g.backdoor_graph(x)?;
        let backdoor_paths = all_simple_paths(&backdoor, x, y, budget)?;
        let xy: VertexSet = x.union(y).copied().collect();
        let (moral, moral_back) = {
            let keep_set = ancestors_of(&backdoor, &xy);
            let keep: Vec<bool> = g.vertices().map(|v| keep_set.contains(&v)).collect();
            let (sub, back) = backdoor.induced_subgraph(&keep);
            (sub.moralize()?, back)
        };
        Ok(Query {
            forbidden,
            noncausal,
            backdoor_paths,
            backdoor,
            de_x: descendants_of(g, x, &VertexSet::new()),
            an_xy: ancestors_of(g, &xy),
            moral,
            moral_back,
        })
    }

    fn adjustment(&self, g: &MixedGraph, z: &VertexSet) -> bool {
        if !z.is_disjoint(&self.forbidden) {
            return false;
        }
        let an_z = ancestors_of(g, z);
        self.noncausal.iter().all(|p| !open_given(p, z, &an_z))
    }

    fn backdoor(&self, z: &VertexSet) -> bool {
        if !z.is_disjoint(&self.de_x) {
            return false;
        }
        let an_z = ancestors_of(&self.backdoor, z);
        self.backdoor_paths.iter().all(|p| !open_given(p, z, &an_z))
    }

    fn moral(&self, x: &VertexSet, y: &VertexSet, z: &VertexSet) -> bool {
        if z.iter().any(|v| !self.an_xy.contains(v) || self.de_x.contains(v)) {
            return false;
        }
        let n = self.moral.vertex_count();
        let role = |v: Vertex, set: &VertexSet| set.contains(&self.moral_back[v]);
        let mut seen: Vec<bool> = (0..n).map(|v| role(v, x)).collect();
        let mut todo: Vec<Vertex> = (0..n).filter(|&v| seen[v]).collect();
        while let Some(v) = todo.pop() {
            if role(v, y) {
                return false;
            }
            for &w in self.moral.neighbors(v) {
                if !seen[w] && !role(w, z) {
                    seen[w] = true;
                    todo.push(w);
                }
            }
        }
        true
    }
}

/// Adjustment criterion by explicit path enumeration: no member of `z` lies
/// on or below a proper causal path, and every proper non-causal path is
/// blocked.
pub fn brute_adjustment(
    g: &MixedGraph,
    x: &VertexSet,
    y: &VertexSet,
    z: &VertexSet,
    budget: &OracleBudget,
) -> Result<bool> {
    Ok(Query::new(g, x, y, budget)?.adjustment(g, z))
}

/// Back-door criterion by explicit path enumeration in the back-door graph.
pub fn brute_backdoor(
    g: &MixedGraph,
    x: &VertexSet,
    y: &VertexSet,
    z: &VertexSet,
    budget: &OracleBudget,
) -> Result<bool> {
    Ok(Query::new(g, x, y, budget)?.backdoor(z))
}

/// Moral criterion by search in the explicitly built ancestor moral graph.
pub fn brute_moral(g: &MixedGraph, x: &VertexSet, y: &VertexSet, z: &VertexSet, budget: &OracleBudget) -> Result<bool> {
    Ok(Query::new(g, x, y, budget)?.moral(x, y, z))
}

/// Causal-path vertices and forbidden vertices from explicit enumeration of
/// proper causal paths.
pub fn brute_forbidden(g: &MixedGraph, x: &VertexSet, y: &VertexSet, budget: &OracleBudget) -> Result<VertexSet> {
    Ok(Query::new(g, x, y, budget)?.forbidden)
}

/// Is some path from `x` to `y` open given `z`?
pub fn brute_d_connected(
    g: &MixedGraph,
    x: &VertexSet,
    y: &VertexSet,
    z: &VertexSet,
    budget: &OracleBudget,
) -> Result<bool> {
    let an_z = ancestors_of(g, z);
    Ok(all_simple_paths(g, x, y, budget)?
        .iter()
        .any(|p| open_given(p, z, &an_z)))
}

fn subsets(candidates: &[Vertex]) -> impl Iterator<Item = VertexSet> + '_ {
    (0u32..1 << candidates.len()).map(move |bits| {
        candidates
            .iter()
            .enumerate()
            .filter(|(i, _)| bits >> i & 1 == 1)
            .map(|(_, &v)| v)
            .collect()
    })
}

fn inclusion_minimal(family: Vec<VertexSet>) -> BTreeSet<VertexSet> {
    family
        .iter()
        .filter(|s| !family.iter().any(|t| t != *s && t.is_subset(s)))
        .cloned()
        .collect()
}

/// Every inclusion-minimal adjustment set avoiding `l`, by testing all
/// subsets of the remaining vertices.
pub fn brute_minimal_adjustments(
    g: &MixedGraph,
    x: &VertexSet,
    y: &VertexSet,
    l: &VertexSet,
    budget: &OracleBudget,
) -> Result<BTreeSet<VertexSet>> {
    brute_minimal_sets(g, x, y, l, Criterion::Adjustment, budget)
}

/// Every inclusion-minimal set avoiding `l` that satisfies `criterion`, by
/// testing all subsets of the remaining vertices.
pub fn brute_minimal_sets(
    g: &MixedGraph,
    x: &VertexSet,
    y: &VertexSet,
    l: &VertexSet,
    criterion: Criterion,
    budget: &OracleBudget,
) -> Result<BTreeSet<VertexSet>> {
    budget.admit(g)?;
    if !g.is_x_loop_free(x)? {
        return Err(Error::NotXLoopFree("exposure set has a loop".into()));
    }
    let q = Query::new(g, x, y, budget)?;
    let candidates: Vec<Vertex> = g
        .vertices()
        .filter(|v| !x.contains(v) && !y.contains(v) && !l.contains(v))
        .collect();
    let valid: Vec<VertexSet> = subsets(&candidates)
        .filter(|z| match criterion {
            Criterion::Adjustment => q.adjustment(g, z),
            Criterion::Backdoor => q.backdoor(z),
            Criterion::Moral => q.moral(x, y, z),
        })
        .collect();
    Ok(inclusion_minimal(valid))
}

/// Union of the edges of all open paths from `x` to `y` in the back-door
/// graph, as directed edges of `g` in `g`'s edge order.
pub fn brute_biasing_edges(
    g: &MixedGraph,
    x: &VertexSet,
    y: &VertexSet,
    z: &VertexSet,
    budget: &OracleBudget,
) -> Result<Vec<(Vertex, Vertex)>> {
    let bd = g.backdoor_graph(x)?;
    let an_z = ancestors_of(&bd, z);
    let mut on_path = BTreeSet::new();
    for p in all_simple_paths(&bd, x, y, budget)? {
        if is_causal(&p) || !open_given(&p, z, &an_z) {
            continue;
        }
        for pair in p.vertices().windows(2) {
            on_path.insert((pair[0].min(pair[1]), pair[0].max(pair[1])));
        }
    }
    Ok(g.directed_edges()
        .iter()
        .copied()
        .filter(|&(u, v)| on_path.contains(&(u.min(v), u.max(v))))
        .collect())
}

fn directed_paths_to(
    g: &MixedGraph,
    v: Vertex,
    target: &VertexSet,
    path: &mut Vec<Vertex>,
    out: &mut Vec<Vec<Vertex>>,
) {
    path.push(v);
    if target.contains(&v) {
        out.push(path.clone());
    }
    for &c in g.children(v) {
        directed_paths_to(g, c, target, path, out);
    }
    path.pop();
}

fn common_vertices(paths: &[Vec<Vertex>]) -> Option<VertexSet> {
    let (first, rest) = paths.split_first()?;
    let mut common: VertexSet = first.iter().copied().collect();
    for p in rest {
        let here: VertexSet = p.iter().copied().collect();
        common = common.intersection(&here).copied().collect();
    }
    Some(common)
}

/// Bottleneck numbers by intersecting the vertex sets of all directed paths
/// from each vertex to `x` and to `y`. Undirected edges are ignored.
pub fn brute_bottlenecks(
    fg: &MixedGraph,
    x: &VertexSet,
    y: &VertexSet,
    budget: &OracleBudget,
) -> Result<BottleneckTable> {
    budget.admit(fg)?;
    let t = fg.topological_numbering()?;
    let b = fg
        .vertices()
        .map(|v| {
            let (mut to_x, mut to_y) = (Vec::new(), Vec::new());
            directed_paths_to(fg, v, x, &mut Vec::new(), &mut to_x);
            directed_paths_to(fg, v, y, &mut Vec::new(), &mut to_y);
            if to_x.is_empty() || to_y.is_empty() {
                return None;
            }
            to_x.extend(to_y);
            common_vertices(&to_x)?.iter().map(|&w| t[w]).max()
        })
        .collect();
    Ok(BottleneckTable { t, b })
}

/// Are there two vertex-disjoint directed paths from `v` (sharing only `v`)
/// to `x` and to `y`?
pub fn brute_disjoint_paths(fg: &MixedGraph, v: Vertex, x: &VertexSet, y: &VertexSet) -> bool {
    let (mut to_x, mut to_y) = (Vec::new(), Vec::new());
    directed_paths_to(fg, v, x, &mut Vec::new(), &mut to_x);
    directed_paths_to(fg, v, y, &mut Vec::new(), &mut to_y);
    to_x.iter().any(|p| {
        let used: VertexSet = p[1..].iter().copied().collect();
        to_y.iter().any(|q| q[1..].iter().all(|w| !used.contains(w)))
    })
}

/// A DAG on `n` vertices named `v0`, `v1`, …: vertices get random ranks and
/// every pair is joined, lower rank to higher, with probability `p`.
pub fn random_dag<R: Rng>(rng: &mut R, n: usize, p: f64) -> MixedGraph {
    let mut b = GraphBuilder::new();
    let ids: Vec<Vertex> = (0..n).map(|i| b.add_vertex(&format!("v{i}"))).collect();
    let mut rank = ids.clone();
    rank.shuffle(rng);
    for i in 0..n {
        for j in i + 1..n {
            if rng.gen_bool(p) {
                b.add_directed(rank[i], rank[j]).expect("forward pairs never clash");
            }
        }
    }
    b.build()
}

/// A random DAG with between 2 and `max_vertices` vertices, edge density in
/// `[0.1, 0.5]`, and sampled roles: one or two exposures and outcomes, each
/// remaining vertex adjusted with probability 0.3 and latent with 0.15.
pub fn random_instance(seed: u64, max_vertices: usize) -> DiagramDocument {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let n = rng.gen_range(2..=max_vertices.max(2));
    let p = rng.gen_range(0.1..=0.5);
    let graph = random_dag(&mut rng, n, p);
    let mut order: Vec<Vertex> = graph.vertices().collect();
    order.shuffle(&mut rng);
    let nx = rng.gen_range(1..=2.min(n - 1));
    let ny = rng.gen_range(1..=2.min(n - nx));
    let mut roles = RoleAssignment {
        exposure: order[..nx].iter().copied().collect(),
        outcome: order[nx..nx + ny].iter().copied().collect(),
        ..RoleAssignment::default()
    };
    for &v in &order[nx + ny..] {
        let r: f64 = rng.gen();
        if r < 0.3 {
            roles.adjusted.insert(v);
        } else if r < 0.45 {
            roles.latent.insert(v);
        }
    }
    DiagramDocument::new(graph, roles)
}

/// Searches small DAGs whose exposure set is not X-loop-free for one where
/// some set satisfies the adjustment criterion but no set satisfies the
/// back-door criterion. The hit carries that set as its adjusted vertices.
pub fn find_nonequivalence_counterexample(seed: u64) -> Option<DiagramDocument> {
    const TRIALS: usize = 20_000;
    let budget = OracleBudget::default();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..TRIALS {
        let n = rng.gen_range(4..=7);
        let p = rng.gen_range(0.2..=0.6);
        let g = random_dag(&mut rng, n, p);
        let mut order: Vec<Vertex> = g.vertices().collect();
        order.shuffle(&mut rng);
        let x: VertexSet = order[..2].iter().copied().collect();
        let y: VertexSet = order[2..3].iter().copied().collect();
        if g.is_x_loop_free(&x).ok()? {
            continue;
        }
        let q = Query::new(&g, &x, &y, &budget).ok()?;
        let rest = &order[3..];
        if subsets(rest).any(|z| q.backdoor(&z)) {
            continue;
        }
        let found = subsets(rest).find(|z| q.adjustment(&g, z));
        if let Some(z) = found {
            let roles = RoleAssignment {
                exposure: x,
                outcome: y,
                adjusted: z,
                latent: VertexSet::new(),
            };
            return Some(DiagramDocument::new(g, roles));
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model_io::fixtures;

    fn s(g: &MixedGraph, names: &[&str]) -> VertexSet {
        g.vertex_set(names).unwrap()
    }

    fn path(g: &MixedGraph, names: &[&str]) -> Path {
        let ids: Vec<Vertex> = names.iter().map(|n| g.vertex(n).unwrap()).collect();
        Path::from_vertices(g, &ids).unwrap()
    }

    #[test]
    fn simple_paths_of_the_fixtures() {
        let b = OracleBudget::default();
        let fig1 = fixtures::fig1().graph;
        let paths = all_simple_paths(&fig1, &s(&fig1, &["LE"]), &s(&fig1, &["D"]), &b).unwrap();
        let shown: Vec<String> = paths.iter().map(|p| p.display(&fig1).to_string()).collect();
        assert_eq!(shown, ["LE -> D", "LE <- FI -> MD -> D", "LE <- FI -> MD <- MR -> D"]);

        let chain = fixtures::chain().graph;
        let paths = all_simple_paths(&chain, &s(&chain, &["x"]), &s(&chain, &["y"]), &b).unwrap();
        assert_eq!(paths.len(), 1);
        assert_eq!(paths[0].display(&chain).to_string(), "x -> m -> y");

        let apart = crate::graph::dag_from_edges(&[], &["x", "y"]).unwrap();
        assert!(all_simple_paths(&apart, &s(&apart, &["x"]), &s(&apart, &["y"]), &b)
            .unwrap()
            .is_empty());
    }

    #[test]
    fn openness_follows_the_definition() {
        let coffee = fixtures::coffee().graph;
        let p = path(&coffee, &["C", "U", "S", "H"]);
        assert!(path_is_open(&coffee, &p, &VertexSet::new()).unwrap());
        assert!(!path_is_open(&coffee, &p, &s(&coffee, &["S"])).unwrap());

        let harvard = fixtures::harvard().graph;
        let p = path(&harvard, &["R", "H", "S"]);
        assert!(path_is_open(&harvard, &p, &s(&harvard, &["H"])).unwrap());
        assert!(!path_is_open(&harvard, &p, &VertexSet::new()).unwrap());
    }

    #[test]
    fn minimal_adjustments_by_brute_force() {
        let b = OracleBudget::default();
        let fig1 = fixtures::fig1().graph;
        let found =
            brute_minimal_adjustments(&fig1, &s(&fig1, &["LE"]), &s(&fig1, &["D"]), &VertexSet::new(), &b).unwrap();
        assert_eq!(found, BTreeSet::from([s(&fig1, &["FI"]), s(&fig1, &["MD", "MR"])]));

        let chain = fixtures::chain().graph;
        let found =
            brute_minimal_adjustments(&chain, &s(&chain, &["x"]), &s(&chain, &["y"]), &VertexSet::new(), &b).unwrap();
        assert_eq!(found, BTreeSet::from([VertexSet::new()]));

        let coffee = fixtures::coffee().graph;
        let found = brute_minimal_adjustments(
            &coffee,
            &s(&coffee, &["C"]),
            &s(&coffee, &["H"]),
            &s(&coffee, &["U"]),
            &b,
        )
        .unwrap();
        assert_eq!(found, BTreeSet::from([s(&coffee, &["S"])]));
    }

    #[test]
    fn biasing_edges_by_brute_force() {
        let b = OracleBudget::default();
        let fig1 = fixtures::fig1().graph;
        let (le, d) = (s(&fig1, &["LE"]), s(&fig1, &["D"]));
        let e = brute_biasing_edges(&fig1, &le, &d, &VertexSet::new(), &b).unwrap();
        let names: Vec<String> = e
            .iter()
            .map(|&(u, v)| format!("{}->{}", fig1.name(u), fig1.name(v)))
            .collect();
        assert_eq!(names, ["FI->LE", "FI->MD", "MD->D"]);
        assert!(brute_biasing_edges(&fig1, &le, &d, &s(&fig1, &["FI"]), &b)
            .unwrap()
            .is_empty());

        let chain = fixtures::chain().graph;
        assert!(
            brute_biasing_edges(&chain, &s(&chain, &["x"]), &s(&chain, &["y"]), &VertexSet::new(), &b)
                .unwrap()
                .is_empty()
        );
    }

    #[test]
    fn bottlenecks_by_path_intersection() {
        let b = OracleBudget::default();
        let g = crate::graph::dag_from_edges(&[("v", "w"), ("w", "x"), ("w", "y")], &[]).unwrap();
        let t = brute_bottlenecks(&g, &s(&g, &["x"]), &s(&g, &["y"]), &b).unwrap();
        let (v, w) = (g.vertex("v").unwrap(), g.vertex("w").unwrap());
        assert_eq!(t.b[v], Some(t.t[w]));

        let g = crate::graph::dag_from_edges(&[("v", "a"), ("v", "b"), ("a", "x"), ("b", "y")], &[]).unwrap();
        let t = brute_bottlenecks(&g, &s(&g, &["x"]), &s(&g, &["y"]), &b).unwrap();
        let v = g.vertex("v").unwrap();
        assert_eq!(t.b[v], Some(t.t[v]));

        let g = crate::graph::dag_from_edges(&[("v", "x")], &["y"]).unwrap();
        let t = brute_bottlenecks(&g, &s(&g, &["x"]), &s(&g, &["y"]), &b).unwrap();
        assert_eq!(t.b[g.vertex("v").unwrap()], None);
    }

    #[test]
    fn budget_refuses_large_graphs() {
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        let g = random_dag(&mut rng, 10, 0.3);
        let err = all_simple_paths(
            &g,
            &VertexSet::from([0]),
            &VertexSet::from([1]),
            &OracleBudget::default(),
        );
        assert!(matches!(err, Err(Error::BudgetExceeded(_))));
    }

    #[test]
    fn random_instances_are_reproducible() {
        assert_eq!(random_instance(7, 9), random_instance(7, 9));
        let doc = random_instance(11, 9);
        doc.roles.validate(&doc.graph).unwrap();
        assert!(doc.graph.is_acyclic());
    }
}
