//! d-separation and the covariate adjustment criteria.
//!
//! All checks run in time linear in the size of the graph; none of them
//! enumerates paths. The brute-force counterparts live in [`crate::oracle`].

use crate::error::{Error, Result};
use crate::graph::{MixedGraph, Path, Step, Vertex, VertexSet};
use crate::roles::require_disjoint;

/// Which adjustment criterion a set is checked against.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Criterion {
    /// Complete criterion: no forbidden vertex in `Z`, every non-causal path blocked.
    Adjustment,
    /// No descendant of `X` in `Z`, and `Z` d-separates `X` and `Y` in the back-door graph.
    Backdoor,
    /// `Z ⊆ An(X ∪ Y) \ De(X)` separates `X` and `Y` in the ancestor moral graph
    /// of the back-door graph.
    Moral,
}

impl Criterion {
    pub const ALL: [Criterion; 3] = [Criterion::Adjustment, Criterion::Backdoor, Criterion::Moral];
}

/// Every verdict about one `(X, Y, Z)` query.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CriterionReport {
    pub adjustment_criterion: bool,
    pub backdoor_criterion: bool,
    pub moral_criterion: bool,
    pub x_loop_free: bool,
    /// Descendants (edges into `X` removed) of vertices on proper causal paths.
    pub forbidden: VertexSet,
    /// An open non-causal path, when one exists.
    pub witness: Option<Path>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AdjustmentVerdict {
    pub satisfied: bool,
    /// Members of `Z` that are forbidden.
    pub forbidden_in_z: VertexSet,
    /// Lexicographically least open non-causal path, if any.
    pub witness: Option<Path>,
}

fn require_dag(g: &MixedGraph) -> Result<()> {
    if g.is_directed_only() {
        Ok(())
    } else {
        Err(Error::InvalidArgument(
            "criteria are defined on graphs with directed edges only".into(),
        ))
    }
}

struct Masks {
    x: Vec<bool>,
    y: Vec<bool>,
    z: Vec<bool>,
}

fn masks(g: &MixedGraph, x: &VertexSet, y: &VertexSet, z: &VertexSet) -> Result<Masks> {
    require_dag(g)?;
    require_disjoint(g, &[("X", x), ("Y", y), ("Z", z)])?;
    Ok(Masks {
        x: g.mask(x)?,
        y: g.mask(y)?,
        z: g.mask(z)?,
    })
}

fn require_query(x: &VertexSet, y: &VertexSet) -> Result<()> {
    if x.is_empty() || y.is_empty() {
        return Err(Error::InvalidArgument(
            "exposure and outcome sets must be non-empty".into(),
        ));
    }
    Ok(())
}

fn or(a: &[bool], b: &[bool]) -> Vec<bool> {
    a.iter().zip(b).map(|(p, q)| *p || *q).collect()
}

/// Vertices reachable from `from` in the moral graph of `g[within]` after
/// deleting `removed`. Co-parents are married lazily, once per child, which
/// keeps the search linear.
fn moral_reach(g: &MixedGraph, within: &[bool], from: &[bool], removed: &[bool]) -> Vec<bool> {
    let n = g.vertex_count();
    let mut seen = vec![false; n];
    let mut married = vec![false; n];
    let mut stack = Vec::new();
    for v in 0..n {
        if from[v] && within[v] && !removed[v] {
            seen[v] = true;
            stack.push(v);
        }
    }
    let visit = |w: Vertex, seen: &mut Vec<bool>, stack: &mut Vec<Vertex>| {
        if within[w] && !removed[w] && !seen[w] {
            seen[w] = true;
            stack.push(w);
        }
    };
    while let Some(v) = stack.pop() {
        for &p in g.parents(v) {
            visit(p, &mut seen, &mut stack);
        }
        for &c in g.children(v) {
            if !within[c] {
                continue;
            }
            visit(c, &mut seen, &mut stack);
            if !married[c] {
                married[c] = true;
                for &p in g.parents(c) {
                    visit(p, &mut seen, &mut stack);
                }
            }
        }
    }
    seen
}

pub(crate) fn d_separated_masks(g: &MixedGraph, x: &[bool], y: &[bool], z: &[bool]) -> bool {
    let within = g.ancestors_mask(&or(&or(x, y), z));
    let reached = moral_reach(g, &within, x, z);
    !reached.iter().zip(y).any(|(r, t)| *r && *t)
}

/// True iff every path between `x` and `y` is blocked by `z`.
///
/// Decided by separation in the moral graph of `G[An(x ∪ y ∪ z)]` with `z` removed.
pub fn d_separated(g: &MixedGraph, x: &VertexSet, y: &VertexSet, z: &VertexSet) -> Result<bool> {
    let m = masks(g, x, y, z)?;
    Ok(d_separated_masks(g, &m.x, &m.y, &m.z))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Arrival {
    Start,
    /// came along `prev -> v`
    FromParent,
    /// came along `prev <- v`
    FromChild,
}

struct OpenPathSearch<'a> {
    g: &'a MixedGraph,
    y: &'a [bool],
    z: &'a [bool],
    an_z: Vec<bool>,
}

impl OpenPathSearch<'_> {
    fn may_pass(&self, v: Vertex, arrival: Arrival, step: Step) -> bool {
        match (arrival, step) {
            (Arrival::Start, _) => true,
            (Arrival::FromParent, Step::Backward) => self.an_z[v],
            _ => !self.z[v],
        }
    }

    /// Is there an open walk from `start` (entered via `arrival`) to `y` that
    /// avoids `blocked`? An open walk exists iff an open simple path does.
    fn reaches_y(&self, start: Vertex, arrival: Arrival, blocked: &[bool]) -> bool {
        if self.y[start] {
            return true;
        }
        let n = self.g.vertex_count();
        let slot = |a: Arrival| match a {
            Arrival::FromParent => 0,
            _ => 1,
        };
        let mut seen = vec![[false; 2]; n];
        let mut stack = vec![(start, arrival)];
        while let Some((v, a)) = stack.pop() {
            let moves = self
                .g
                .children(v)
                .iter()
                .map(|&c| (c, Step::Forward, Arrival::FromParent))
                .chain(
                    self.g
                        .parents(v)
                        .iter()
                        .map(|&p| (p, Step::Backward, Arrival::FromChild)),
                );
            for (w, step, next) in moves {
                if blocked[w] || w == start || !self.may_pass(v, a, step) {
                    continue;
                }
                if self.y[w] {
                    return true;
                }
                if !seen[w][slot(next)] {
                    seen[w][slot(next)] = true;
                    stack.push((w, next));
                }
            }
        }
        false
    }

    /// Lexicographically least open path from `x` to `y`, extended greedily:
    /// each step takes the smallest neighbour from which the search above
    /// still reaches `y`.
    fn least_path(&self, x: &[bool]) -> Option<Path> {
        let n = self.g.vertex_count();
        let mut blocked = vec![false; n];
        for start in (0..n).filter(|&v| x[v]) {
            if !self.reaches_y(start, Arrival::Start, &blocked) {
                continue;
            }
            let mut vertices = vec![start];
            let mut steps = Vec::new();
            let mut arrival = Arrival::Start;
            let mut v = start;
            blocked[start] = true;
            while !self.y[v] {
                let mut options: Vec<(Vertex, Step, Arrival)> = self
                    .g
                    .children(v)
                    .iter()
                    .map(|&c| (c, Step::Forward, Arrival::FromParent))
                    .chain(
                        self.g
                            .parents(v)
                            .iter()
                            .map(|&p| (p, Step::Backward, Arrival::FromChild)),
                    )
                    .filter(|&(w, step, _)| !blocked[w] && self.may_pass(v, arrival, step))
                    .collect();
                options.sort_unstable_by_key(|o| o.0);
                let (w, step, next) = options
                    .into_iter()
                    .find(|&(w, _, next)| self.reaches_y(w, next, &blocked))
                    .expect("an open continuation exists");
                blocked[w] = true;
                vertices.push(w);
                steps.push(step);
                arrival = next;
                v = w;
            }
            return Some(Path::from_parts(vertices, steps));
        }
        None
    }
}

pub(crate) fn open_path_masks(g: &MixedGraph, x: &[bool], y: &[bool], z: &[bool]) -> Option<Path> {
    let search = OpenPathSearch {
        g,
        y,
        z,
        an_z: g.ancestors_mask(z),
    };
    search.least_path(x)
}

/// The lexicographically least (by vertex order) path between `x` and `y`
/// that is open given `z`, or `None` when `z` d-separates them.
pub fn d_connecting_path(g: &MixedGraph, x: &VertexSet, y: &VertexSet, z: &VertexSet) -> Result<Option<Path>> {
    let m = masks(g, x, y, z)?;
    Ok(open_path_masks(g, &m.x, &m.y, &m.z))
}

/// Vertices outside `x` on proper causal paths: directed paths that start in
/// `x`, end in `y` and visit `x` only at their start.
pub(crate) fn causal_mask(g: &MixedGraph, x: &[bool], y: &[bool]) -> Vec<bool> {
    let n = g.vertex_count();
    let mut from_x = vec![false; n];
    let mut stack = Vec::new();
    for v in (0..n).filter(|&v| x[v]) {
        for &c in g.children(v) {
            if !x[c] && !from_x[c] {
                from_x[c] = true;
                stack.push(c);
            }
        }
    }
    while let Some(v) = stack.pop() {
        for &c in g.children(v) {
            if !x[c] && !from_x[c] {
                from_x[c] = true;
                stack.push(c);
            }
        }
    }
    let mut to_y: Vec<bool> = (0..n).map(|v| y[v] && !x[v]).collect();
    let mut stack: Vec<Vertex> = (0..n).filter(|&v| to_y[v]).collect();
    while let Some(v) = stack.pop() {
        for &p in g.parents(v) {
            if !x[p] && !to_y[p] {
                to_y[p] = true;
                stack.push(p);
            }
        }
    }
    from_x.iter().zip(&to_y).map(|(a, b)| *a && *b).collect()
}

pub(crate) fn forbidden_mask(g: &MixedGraph, x: &[bool], y: &[bool]) -> Vec<bool> {
    let causal = causal_mask(g, x, y);
    // descendants in the graph with all edges into x removed
    let mut seen = causal;
    let mut stack: Vec<Vertex> = (0..seen.len()).filter(|&v| seen[v]).collect();
    while let Some(v) = stack.pop() {
        for &c in g.children(v) {
            if !x[c] && !seen[c] {
                seen[c] = true;
                stack.push(c);
            }
        }
    }
    seen
}

/// All vertices outside `x` that lie on a proper causal path from `x` to `y`.
pub fn causal_path_vertices(g: &MixedGraph, x: &VertexSet, y: &VertexSet) -> Result<VertexSet> {
    let m = masks(g, x, y, &VertexSet::new())?;
    Ok(MixedGraph::set_of(&causal_mask(g, &m.x, &m.y)))
}

/// Vertices no adjustment set may contain: descendants, in the graph with
/// the edges into `x` removed, of vertices on proper causal paths.
pub fn forbidden_vertices(g: &MixedGraph, x: &VertexSet, y: &VertexSet) -> Result<VertexSet> {
    let m = masks(g, x, y, &VertexSet::new())?;
    Ok(MixedGraph::set_of(&forbidden_mask(g, &m.x, &m.y)))
}

fn proper_backdoor_masks(g: &MixedGraph, x: &[bool], y: &[bool]) -> MixedGraph {
    let causal = causal_mask(g, x, y);
    let directed = g
        .directed_edges()
        .iter()
        .copied()
        .filter(|&(u, v)| !(x[u] && causal[v]))
        .collect();
    g.with_edges(directed, Vec::new())
}

/// `g` without the first edge of every proper causal path. Non-causal paths
/// from `x` to `y` in `g` are blocked exactly when `x` and `y` are
/// d-separated here.
pub fn proper_backdoor_graph(g: &MixedGraph, x: &VertexSet, y: &VertexSet) -> Result<MixedGraph> {
    let m = masks(g, x, y, &VertexSet::new())?;
    Ok(proper_backdoor_masks(g, &m.x, &m.y))
}

pub fn satisfies_adjustment_criterion(
    g: &MixedGraph,
    x: &VertexSet,
    y: &VertexSet,
    z: &VertexSet,
) -> Result<AdjustmentVerdict> {
    require_query(x, y)?;
    let m = masks(g, x, y, z)?;
    Ok(adjustment_masks(g, &m, true))
}

fn adjustment_masks(g: &MixedGraph, m: &Masks, want_witness: bool) -> AdjustmentVerdict {
    let forbidden = forbidden_mask(g, &m.x, &m.y);
    let forbidden_in_z: VertexSet = (0..g.vertex_count()).filter(|&v| m.z[v] && forbidden[v]).collect();
    let pbd = proper_backdoor_masks(g, &m.x, &m.y);
    let blocked = d_separated_masks(&pbd, &m.x, &m.y, &m.z);
    let witness = if !blocked && want_witness {
        open_path_masks(&pbd, &m.x, &m.y, &m.z)
    } else {
        None
    };
    AdjustmentVerdict {
        satisfied: forbidden_in_z.is_empty() && blocked,
        forbidden_in_z,
        witness,
    }
}

fn backdoor_masks(g: &MixedGraph, m: &Masks) -> bool {
    let de_x = g.descendants_mask(&m.x);
    if (0..g.vertex_count()).any(|v| m.z[v] && de_x[v]) {
        return false;
    }
    let (bd, _) = g.backdoor_graph_mask(&m.x);
    d_separated_masks(&bd, &m.x, &m.y, &m.z)
}

pub fn satisfies_backdoor(g: &MixedGraph, x: &VertexSet, y: &VertexSet, z: &VertexSet) -> Result<bool> {
    require_query(x, y)?;
    let m = masks(g, x, y, z)?;
    Ok(backdoor_masks(g, &m))
}

fn moral_masks(g: &MixedGraph, m: &Masks) -> bool {
    let xy = or(&m.x, &m.y);
    let an_xy = g.ancestors_mask(&xy);
    let de_x = g.descendants_mask(&m.x);
    if (0..g.vertex_count()).any(|v| m.z[v] && (!an_xy[v] || de_x[v])) {
        return false;
    }
    let (bd, _) = g.backdoor_graph_mask(&m.x);
    let within = bd.ancestors_mask(&xy);
    let reached = moral_reach(&bd, &within, &m.x, &m.z);
    !reached.iter().zip(&m.y).any(|(r, t)| *r && *t)
}

pub fn satisfies_moral(g: &MixedGraph, x: &VertexSet, y: &VertexSet, z: &VertexSet) -> Result<bool> {
    require_query(x, y)?;
    let m = masks(g, x, y, z)?;
    Ok(moral_masks(g, &m))
}

pub fn satisfies(g: &MixedGraph, x: &VertexSet, y: &VertexSet, z: &VertexSet, criterion: Criterion) -> Result<bool> {
    require_query(x, y)?;
    let m = masks(g, x, y, z)?;
    Ok(satisfies_masks(g, &m, criterion))
}

fn satisfies_masks(g: &MixedGraph, m: &Masks, criterion: Criterion) -> bool {
    match criterion {
        Criterion::Adjustment => adjustment_masks(g, m, false).satisfied,
        Criterion::Backdoor => backdoor_masks(g, m),
        Criterion::Moral => moral_masks(g, m),
    }
}

pub(crate) fn require_x_loop_free(g: &MixedGraph, x: &[bool]) -> Result<()> {
    match g.x_loop_mask(x) {
        None => Ok(()),
        Some(path) => Err(Error::NotXLoopFree(path.display(g).to_string())),
    }
}

/// Is `z` a minimal set satisfying `criterion`?
///
/// On X-loop-free graphs the minimal sets of all three criteria coincide, so
/// this holds iff `z` satisfies `criterion`, satisfies the moral criterion,
/// and no `z \ {v}` satisfies the moral criterion (moral separators are
/// upward closed within `An(X ∪ Y) \ De(X)`, so single removals suffice).
pub fn is_minimal(g: &MixedGraph, x: &VertexSet, y: &VertexSet, z: &VertexSet, criterion: Criterion) -> Result<bool> {
    require_query(x, y)?;
    let mut m = masks(g, x, y, z)?;
    require_x_loop_free(g, &m.x)?;
    if !satisfies_masks(g, &m, criterion) {
        return Err(Error::InvalidArgument(format!(
            "the set does not satisfy the {criterion:?} criterion"
        )));
    }
    if !moral_masks(g, &m) {
        return Ok(false);
    }
    for &v in z {
        m.z[v] = false;
        let smaller = moral_masks(g, &m);
        m.z[v] = true;
        if smaller {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Evaluates all three criteria, X-loop-freeness and the forbidden set.
pub fn check(g: &MixedGraph, x: &VertexSet, y: &VertexSet, z: &VertexSet) -> Result<CriterionReport> {
    require_query(x, y)?;
    let m = masks(g, x, y, z)?;
    let adjustment = adjustment_masks(g, &m, true);
    let backdoor = backdoor_masks(g, &m);
    let witness = match adjustment.witness {
        Some(p) => Some(p),
        None if !backdoor => {
            let (bd, _) = g.backdoor_graph_mask(&m.x);
            open_path_masks(&bd, &m.x, &m.y, &m.z)
        }
        None => None,
    };
    Ok(CriterionReport {
        adjustment_criterion: adjustment.satisfied,
        backdoor_criterion: backdoor,
        moral_criterion: moral_masks(g, &m),
        x_loop_free: g.x_loop_mask(&m.x).is_none(),
        forbidden: MixedGraph::set_of(&forbidden_mask(g, &m.x, &m.y)),
        witness,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::dag_from_edges;
    use crate::model_io::fixtures;

    fn s(g: &MixedGraph, names: &[&str]) -> VertexSet {
        g.vertex_set(names).unwrap()
    }

    #[test]
    fn d_separation_on_the_introductory_examples() {
        let coffee = fixtures::coffee().graph;
        let (c, h) = (s(&coffee, &["C"]), s(&coffee, &["H"]));
        assert!(!d_separated(&coffee, &c, &h, &VertexSet::new()).unwrap());
        assert!(d_separated(&coffee, &c, &h, &s(&coffee, &["S"])).unwrap());

        let harvard = fixtures::harvard().graph;
        let (r, sv) = (s(&harvard, &["R"]), s(&harvard, &["S"]));
        assert!(!d_separated(&harvard, &r, &sv, &s(&harvard, &["H"])).unwrap());
        assert!(d_separated(&harvard, &r, &sv, &VertexSet::new()).unwrap());
        let p = d_connecting_path(&harvard, &r, &sv, &s(&harvard, &["H"]))
            .unwrap()
            .unwrap();
        assert_eq!(p.display(&harvard).to_string(), "R -> H <- S");
    }

    #[test]
    fn overlapping_sets_are_rejected() {
        let g = fixtures::coffee().graph;
        let c = s(&g, &["C"]);
        assert!(matches!(
            d_separated(&g, &c, &c, &VertexSet::new()),
            Err(Error::InvalidArgument(_))
        ));
    }

    #[test]
    fn causal_and_forbidden_vertices() {
        let fig1 = fixtures::fig1().graph;
        let (le, d) = (s(&fig1, &["LE"]), s(&fig1, &["D"]));
        assert_eq!(causal_path_vertices(&fig1, &le, &d).unwrap(), d);
        assert_eq!(forbidden_vertices(&fig1, &le, &d).unwrap(), d);

        let chain = fixtures::chain().graph;
        let my = s(&chain, &["m", "y"]);
        let (x, y) = (s(&chain, &["x"]), s(&chain, &["y"]));
        assert_eq!(causal_path_vertices(&chain, &x, &y).unwrap(), my);
        assert_eq!(forbidden_vertices(&chain, &x, &y).unwrap(), my);

        let coffee = fixtures::coffee().graph;
        let (c, h) = (s(&coffee, &["C"]), s(&coffee, &["H"]));
        assert!(causal_path_vertices(&coffee, &c, &h).unwrap().is_empty());
        assert!(forbidden_vertices(&coffee, &c, &h).unwrap().is_empty());
    }

    #[test]
    fn adjustment_criterion_on_figure_one() {
        let g = fixtures::fig1().graph;
        let (le, d) = (s(&g, &["LE"]), s(&g, &["D"]));
        let ok = satisfies_adjustment_criterion(&g, &le, &d, &s(&g, &["FI"])).unwrap();
        assert!(ok.satisfied);
        assert!(ok.witness.is_none());

        let bad = satisfies_adjustment_criterion(&g, &le, &d, &s(&g, &["MD"])).unwrap();
        assert!(!bad.satisfied);
        assert_eq!(
            bad.witness.unwrap().display(&g).to_string(),
            "LE <- FI -> MD <- MR -> D"
        );

        let unadjusted = satisfies_adjustment_criterion(&g, &le, &d, &VertexSet::new()).unwrap();
        assert_eq!(
            unadjusted.witness.unwrap().display(&g).to_string(),
            "LE <- FI -> MD -> D"
        );
    }

    #[test]
    fn descendant_of_exposure_off_the_causal_path() {
        // z <- x -> y: adjustment criterion holds, back-door and moral do not
        let g = dag_from_edges(&[("x", "z"), ("x", "y")], &[]).unwrap();
        let (x, y, z) = (s(&g, &["x"]), s(&g, &["y"]), s(&g, &["z"]));
        assert!(satisfies_adjustment_criterion(&g, &x, &y, &z).unwrap().satisfied);
        assert!(!satisfies_backdoor(&g, &x, &y, &z).unwrap());
        assert!(!satisfies_moral(&g, &x, &y, &z).unwrap());
        assert!(!is_minimal(&g, &x, &y, &z, Criterion::Adjustment).unwrap());
        assert!(is_minimal(&g, &x, &y, &VertexSet::new(), Criterion::Adjustment).unwrap());
    }

    #[test]
    fn backdoor_and_moral_criteria() {
        let g = fixtures::fig1().graph;
        let (le, d) = (s(&g, &["LE"]), s(&g, &["D"]));
        let fi = s(&g, &["FI"]);
        assert!(satisfies_backdoor(&g, &le, &d, &fi).unwrap());
        assert!(satisfies_moral(&g, &le, &d, &fi).unwrap());
        let all = s(&g, &["FI", "MD", "MR"]);
        assert!(satisfies_moral(&g, &le, &d, &all).unwrap());
        assert!(!is_minimal(&g, &le, &d, &all, Criterion::Moral).unwrap());

        let coffee = fixtures::coffee().graph;
        let (c, h) = (s(&coffee, &["C"]), s(&coffee, &["H"]));
        assert!(satisfies_backdoor(&coffee, &c, &h, &s(&coffee, &["S"])).unwrap());
    }

    #[test]
    fn minimality() {
        let g = fixtures::fig1().graph;
        let (le, d) = (s(&g, &["LE"]), s(&g, &["D"]));
        for z in [&["FI"][..], &["MD", "MR"][..]] {
            for c in Criterion::ALL {
                assert!(is_minimal(&g, &le, &d, &s(&g, z), c).unwrap());
            }
        }
        let chain = fixtures::chain().graph;
        let (x, y) = (s(&chain, &["x"]), s(&chain, &["y"]));
        assert!(is_minimal(&chain, &x, &y, &VertexSet::new(), Criterion::Backdoor).unwrap());
        assert!(matches!(
            is_minimal(&g, &le, &d, &s(&g, &["MD"]), Criterion::Adjustment),
            Err(Error::InvalidArgument(_))
        ));

        let looped = dag_from_edges(&[("x1", "v"), ("v", "x2"), ("x2", "y")], &[]).unwrap();
        let err = is_minimal(
            &looped,
            &s(&looped, &["x1", "x2"]),
            &s(&looped, &["y"]),
            &VertexSet::new(),
            Criterion::Adjustment,
        )
        .unwrap_err();
        assert_eq!(err, Error::NotXLoopFree("x1 -> v -> x2".into()));
    }

    #[test]
    fn report_collects_everything() {
        let g = fixtures::fig1().graph;
        let (le, d) = (s(&g, &["LE"]), s(&g, &["D"]));
        let r = check(&g, &le, &d, &s(&g, &["MD"])).unwrap();
        assert!(!r.adjustment_criterion && !r.backdoor_criterion && !r.moral_criterion);
        assert!(r.x_loop_free);
        assert_eq!(r.forbidden, d);
        assert!(r.witness.is_some());

        let r = check(&g, &le, &d, &s(&g, &["FI"])).unwrap();
        assert!(r.adjustment_criterion && r.backdoor_criterion && r.moral_criterion);
        assert!(r.witness.is_none());
    }

    #[test]
    fn empty_exposure_is_rejected() {
        let g = fixtures::fig1().graph;
        assert!(check(&g, &VertexSet::new(), &s(&g, &["D"]), &VertexSet::new()).is_err());
    }
}
