use std::collections::BTreeSet;

use dagscope::oracle::random_instance;
use dagscope::{
    biasing_edges, d_separated, list_minimal_adjustments, list_minimal_separators, DiagramDocument, MixedGraph, Vertex,
    VertexSet,
};
use proptest::prelude::*;

fn instance() -> impl Strategy<Value = DiagramDocument> {
    (any::<u64>(), 2usize..=12).prop_map(|(seed, n)| random_instance(seed, n))
}

fn reaches(g: &MixedGraph, from: &VertexSet, to: &VertexSet, removed: &VertexSet) -> bool {
    let mut seen: BTreeSet<Vertex> = from.clone();
    let mut todo: Vec<Vertex> = from.iter().copied().collect();
    while let Some(v) = todo.pop() {
        if to.contains(&v) {
            return true;
        }
        for &w in g.neighbors(v) {
            if !removed.contains(&w) && seen.insert(w) {
                todo.push(w);
            }
        }
    }
    false
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn serialization_round_trips(doc in instance()) {
        let text = doc.serialize();
        let back = DiagramDocument::parse(&text).unwrap();
        prop_assert_eq!(&back, &doc);
        prop_assert_eq!(back.serialize(), text);
    }

    #[test]
    fn topological_numbering_is_a_linear_extension(doc in instance()) {
        let g = &doc.graph;
        let t = g.topological_numbering().unwrap();
        let mut sorted = t.clone();
        sorted.sort_unstable();
        prop_assert_eq!(sorted, (1..=g.vertex_count()).collect::<Vec<_>>());
        for &(u, v) in g.directed_edges() {
            prop_assert!(t[u] < t[v]);
        }
    }

    #[test]
    fn ancestors_and_descendants_are_dual(doc in instance(), pick in any::<prop::sample::Index>()) {
        let g = &doc.graph;
        let w: VertexSet = [pick.index(g.vertex_count())].into();
        let an = g.ancestors(&w).unwrap();
        prop_assert!(an.is_superset(&w));
        for v in g.vertices() {
            let de = g.descendants(&[v].into()).unwrap();
            prop_assert_eq!(an.contains(&v), !de.is_disjoint(&w));
            for &p in g.parents(v) {
                prop_assert!(!an.contains(&v) || an.contains(&p));
            }
        }
    }

    #[test]
    fn moral_graph_contains_the_skeleton(doc in instance()) {
        let g = &doc.graph;
        let m = g.moralize().unwrap();
        for &(u, v) in g.directed_edges() {
            prop_assert!(m.has_undirected(u, v) || m.has_undirected(v, u));
        }
        prop_assert!(m.directed_edges().is_empty());
    }

    #[test]
    fn emitted_separators_separate_minimally(doc in instance()) {
        let (x, y) = (&doc.roles.exposure, &doc.roles.outcome);
        let g = doc.graph.moralize().unwrap();
        let mut seen = BTreeSet::new();
        for s in list_minimal_separators(&g, x, y).unwrap().take(200) {
            prop_assert!(!reaches(&g, x, y, &s));
            for v in &s {
                let mut smaller = s.clone();
                smaller.remove(v);
                prop_assert!(reaches(&g, x, y, &smaller));
            }
            prop_assert!(seen.insert(s));
        }
    }

    #[test]
    fn batches_resume_without_loss(doc in instance(), k in 1usize..4) {
        let (g, r) = (&doc.graph, &doc.roles);
        prop_assume!(g.is_x_loop_free(&r.exposure).unwrap());
        let all: Vec<VertexSet> =
            list_minimal_adjustments(g, &r.exposure, &r.outcome, &r.latent).unwrap().collect();
        let mut stream = list_minimal_adjustments(g, &r.exposure, &r.outcome, &r.latent).unwrap();
        let mut batched = Vec::new();
        loop {
            let batch = stream.next_batch(k);
            let done = batch.len() < k;
            batched.extend(batch);
            if done {
                break;
            }
        }
        prop_assert_eq!(stream.emitted(), all.len());
        prop_assert_eq!(batched, all);
    }

    #[test]
    fn minimal_adjustments_close_every_biasing_path(doc in instance()) {
        let (g, r) = (&doc.graph, &doc.roles);
        prop_assume!(g.is_x_loop_free(&r.exposure).unwrap());
        let bd = g.backdoor_graph(&r.exposure).unwrap();
        for z in list_minimal_adjustments(g, &r.exposure, &r.outcome, &r.latent).unwrap().take(20) {
            let report = biasing_edges(g, &r.exposure, &r.outcome, &z).unwrap();
            prop_assert!(report.edges.is_empty());
            prop_assert!(d_separated(&bd, &r.exposure, &r.outcome, &z).unwrap());
        }
    }

    #[test]
    fn biasing_edges_are_edges_of_the_dag(doc in instance()) {
        let (g, r) = (&doc.graph, &doc.roles);
        let report = biasing_edges(g, &r.exposure, &r.outcome, &r.adjusted).unwrap();
        for (u, v) in report.edges {
            prop_assert!(g.has_directed(u, v));
            prop_assert!(!(r.exposure.contains(&u) && !r.exposure.contains(&v)));
        }
    }
}

fn token() -> impl Strategy<Value = &'static str> {
    prop::sample::select(vec![
        "dag", "{", "}", "[", "]", ",", "->", "-", ">", "a", "b", "x1", "_y", "exposure", "outcome", "adjusted",
        "latent", "#c\n", "\n", " ", "9", "é", "\"",
    ])
}

proptest! {
    #[test]
    fn parser_never_panics_on_token_soup(tokens in prop::collection::vec(token(), 0..40)) {
        let text = tokens.join(" ");
        if let Ok(doc) = DiagramDocument::parse(&text) {
            prop_assert_eq!(DiagramDocument::parse(&doc.serialize()).unwrap(), doc);
        }
    }

    #[test]
    fn parser_never_panics_on_arbitrary_text(text in ".{0,80}") {
        let _ = DiagramDocument::parse(&text);
    }
}
