use crate::error::Result;
use crate::graph::{MixedGraph, Vertex, VertexSet};
use crate::roles::require_disjoint;

/// Topological numbers `t` and bottleneck numbers `b`, indexed by vertex.
///
/// `b[v]` is the largest `t[w]` over vertices `w` (possibly `v`) shared by
/// every directed path from `v` to `X` and every directed path from `v` to
/// `Y`; it is `None` when `v` has no directed path to `X` or none to `Y`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BottleneckTable {
    pub t: Vec<usize>,
    pub b: Vec<Option<usize>>,
}

impl BottleneckTable {
    /// `B(v) = T(v)`: `v` reaches `X` and `Y` along two vertex-disjoint
    /// directed paths.
    pub fn is_own_bottleneck(&self, v: Vertex) -> bool {
        self.b[v] == Some(self.t[v])
    }
}

/// Directed reachability towards `X` and `Y` plus the bottleneck numbers.
pub(crate) struct Sweep {
    pub table: BottleneckTable,
    pub to_x: Vec<bool>,
    pub to_y: Vec<bool>,
}

impl Sweep {
    /// Finer than `b`: distinguishes vertices reaching only `X` from those
    /// reaching only `Y`.
    pub fn label(&self, v: Vertex) -> Option<Label> {
        match (self.to_x[v], self.to_y[v]) {
            (true, true) => Some(Label::Both(self.table.b[v].expect("reaches both"))),
            (true, false) => Some(Label::OnlyX),
            (false, true) => Some(Label::OnlyY),
            (false, false) => None,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub(crate) enum Label {
    OnlyX,
    OnlyY,
    Both(usize),
}

/// One sweep in reverse topological order over the directed edges of `g`,
/// numbered by `t`.
pub(crate) fn sweep(g: &MixedGraph, t: Vec<usize>, x: &[bool], y: &[bool]) -> Sweep {
    let n = g.vertex_count();
    let mut order = vec![0; n];
    for v in 0..n {
        order[n - t[v]] = v;
    }
    let mut to_x = vec![false; n];
    let mut to_y = vec![false; n];
    let mut b = vec![None; n];
    for v in order {
        to_x[v] = x[v] || g.children(v).iter().any(|&c| to_x[c]);
        to_y[v] = y[v] || g.children(v).iter().any(|&c| to_y[c]);
        if !(to_x[v] && to_y[v]) {
            continue;
        }
        if x[v] || y[v] {
            b[v] = Some(t[v]);
            continue;
        }
        // every path from v starts with an edge to a relevant child; a child
        // reaching only one side splits the paths apart at v
        let mut common = None;
        let mut own = false;
        for &c in g.children(v) {
            match (to_x[c], to_y[c]) {
                (false, false) => {}
                (true, true) => match common {
                    None => common = b[c],
                    Some(k) if b[c] == Some(k) => {}
                    Some(_) => own = true,
                },
                _ => own = true,
            }
        }
        b[v] = if own { Some(t[v]) } else { common };
    }
    Sweep {
        table: BottleneckTable { t, b },
        to_x,
        to_y,
    }
}

/// Bottleneck numbers over the directed edges of `g`; undirected edges are
/// ignored.
pub fn bottleneck_numbers(g: &MixedGraph, x: &VertexSet, y: &VertexSet) -> Result<BottleneckTable> {
    require_disjoint(g, &[("X", x), ("Y", y)])?;
    Ok(sweep(g, g.topological_numbering()?, &g.mask(x)?, &g.mask(y)?).table)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::dag_from_edges;

    fn table(edges: &[(&str, &str)]) -> (MixedGraph, BottleneckTable) {
        let g = dag_from_edges(edges, &[]).unwrap();
        let x = g.vertex_set(&["x"]).unwrap();
        let y = g.vertex_set(&["y"]).unwrap();
        let t = bottleneck_numbers(&g, &x, &y).unwrap();
        (g, t)
    }

    #[test]
    fn funnel_bottleneck_is_the_funnel() {
        let (g, t) = table(&[("v", "w"), ("w", "x"), ("w", "y")]);
        let (v, w) = (g.vertex("v").unwrap(), g.vertex("w").unwrap());
        assert_eq!(t.b[w], Some(t.t[w]));
        assert_eq!(t.b[v], Some(t.t[w]));
        assert!(!t.is_own_bottleneck(v));
    }

    #[test]
    fn diamond_is_its_own_bottleneck() {
        let (g, t) = table(&[("v", "a"), ("a", "x"), ("v", "b"), ("b", "y")]);
        assert!(t.is_own_bottleneck(g.vertex("v").unwrap()));
        assert_eq!(t.b[g.vertex("a").unwrap()], None);
    }

    #[test]
    fn one_sided_vertex_has_no_bottleneck() {
        let (g, t) = table(&[("v", "x"), ("u", "y")]);
        assert_eq!(t.b[g.vertex("v").unwrap()], None);
        assert_eq!(t.b[g.vertex("x").unwrap()], None);
    }

    #[test]
    fn paths_through_x_end_there() {
        // x -> y: x reaches both sides by itself
        let (g, t) = table(&[("v", "x"), ("x", "y")]);
        let (v, x) = (g.vertex("v").unwrap(), g.vertex("x").unwrap());
        assert_eq!(t.b[x], Some(t.t[x]));
        assert_eq!(t.b[v], Some(t.t[x]));
    }

    #[test]
    fn two_funnels_meet_at_v() {
        let (g, t) = table(&[
            ("v", "a"),
            ("v", "b"),
            ("a", "c"),
            ("a", "d"),
            ("c", "x"),
            ("d", "y"),
            ("b", "x"),
            ("b", "y"),
        ]);
        assert!(t.is_own_bottleneck(g.vertex("v").unwrap()));
        assert!(t.is_own_bottleneck(g.vertex("a").unwrap()));
    }
}
