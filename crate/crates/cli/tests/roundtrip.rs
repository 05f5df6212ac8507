use proptest::prelude::*;
use vfun_cli::parse::{
    parse_document, parse_graph, parse_ideal, parse_ring, render_document, render_graph,
};
use vfun_core::{AmbientRing, Graph, MonomialIdeal};

fn arb_names() -> impl Strategy<Value = Vec<String>> {
    prop::collection::btree_set("[a-z][a-z0-9_]{0,3}", 1..=5)
        .prop_filter("reserved word", |s| !s.contains("ring"))
        .prop_shuffle_names()
}

trait ShuffleNames {
    fn prop_shuffle_names(self) -> BoxedStrategy<Vec<String>>;
}

impl<S: Strategy<Value = std::collections::BTreeSet<String>> + 'static> ShuffleNames for S {
    fn prop_shuffle_names(self) -> BoxedStrategy<Vec<String>> {
        self.prop_map(|s| s.into_iter().collect::<Vec<_>>())
            .prop_shuffle()
            .boxed()
    }
}

fn arb_document() -> impl Strategy<Value = (Vec<String>, Vec<Vec<Vec<u32>>>)> {
    arb_names().prop_flat_map(|names| {
        let n = names.len();
        let ideal = prop::collection::vec(prop::collection::vec(0u32..=4, n), 0..=4);
        (Just(names), prop::collection::vec(ideal, 1..=3))
    })
}

proptest! {
    #[test]
    fn ideals_round_trip((names, ideals) in arb_document()) {
        let ring = AmbientRing::new(names.clone()).unwrap();
        let ideals: Vec<MonomialIdeal> = ideals
            .iter()
            .map(|g| MonomialIdeal::from_exponents(&ring, g).unwrap())
            .collect();
        let text = render_document(&ring, &ideals);
        let doc = parse_document(&text).unwrap();
        prop_assert!(!doc.ring_inferred);
        prop_assert_eq!(doc.ring.names(), ring.names());
        prop_assert_eq!(&doc.ideals, &ideals);
        for i in &ideals {
            prop_assert_eq!(&parse_ideal(&i.to_string(), &ring).unwrap(), i);
        }
        let reparsed = parse_ring(&ring.to_string()).unwrap();
        prop_assert_eq!(reparsed.names(), ring.names());
    }

    #[test]
    fn graphs_round_trip(names in arb_names(), edges in prop::collection::vec((0usize..5, 0usize..5), 0..8)) {
        let mut g = Graph::new(names.clone());
        for (a, b) in edges {
            let (a, b) = (a % names.len(), b % names.len());
            if a != b {
                g.add_edge(&names[a], &names[b]).unwrap();
            }
        }
        let back = parse_graph(&render_graph(&g)).unwrap();
        // vertex order follows the rendering, so compare edge sets by name
        let named = |h: &Graph| {
            let mut e: Vec<(String, String)> = h
                .edges()
                .iter()
                .map(|&(a, b)| {
                    let (x, y) = (h.vertices()[a].clone(), h.vertices()[b].clone());
                    if x < y { (x, y) } else { (y, x) }
                })
                .collect();
            e.sort();
            e
        };
        prop_assert_eq!(named(&back), named(&g));
        let mut vs = back.vertices().to_vec();
        vs.sort();
        let mut ws = g.vertices().to_vec();
        ws.sort();
        prop_assert_eq!(vs, ws);
    }
}

#[test]
fn inferred_ring_is_flagged() {
    let doc = parse_document("y*x, z").unwrap();
    assert!(doc.ring_inferred);
    assert_eq!(doc.ring.names(), ["y", "x", "z"]);
}
