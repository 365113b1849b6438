mod common;

use common::*;
use lpm::fence::{
    fence_of_snake, labellings_of_snake, linear_extension_graph, snake_cell_poset, Fence, Labelling,
};
use lpm::lpm::snake_from_composition;
use lpm::{Composition, Lpm};
use proptest::prelude::*;

fn arb_composition(max_total: usize) -> impl Strategy<Value = Composition> {
    prop::collection::vec(1usize..4, 0..5)
        .prop_filter("size", move |v| v.iter().sum::<usize>() <= max_total)
        .prop_map(|v| Composition::new(v).unwrap())
}

#[test]
fn fixture_from_labelled_snake_figure() {
    let alpha = Composition::new(vec![1, 1, 1, 1, 2]).unwrap();
    let s = snake_from_composition(&alpha, false);
    assert_eq!(s, Lpm::from_north_sets(8, &[1, 2, 4, 6, 7], &[2, 4, 6, 7, 8]).unwrap());
    let f = fence_of_snake(&s).unwrap();
    assert_eq!(f, Fence::new(alpha, false));
    let l = Labelling::new(vec![1, 7, 3, 5, 2, 4, 6]);
    assert!(f.poset().is_extension(&l));
    assert!(labellings_of_snake(&s).unwrap().contains(&l));
}

#[test]
fn every_snake_up_to_eight_elements() {
    for n in 1..=8 {
        for s in connected_lpms(n).into_iter().filter(Lpm::is_snake) {
            let ls = labellings_of_snake(&s).unwrap();
            let poset = snake_cell_poset(&s).unwrap();
            assert_eq!(ls, brute_extensions(&poset), "{s}");
            if n >= 2 {
                assert_eq!(ls, fence_of_snake(&s).unwrap().linear_extensions().unwrap(), "{s}");
            }
        }
    }
}

proptest! {
    #[test]
    fn extensions_match_brute_force(alpha in arb_composition(7), dual in any::<bool>()) {
        let f = Fence::new(alpha, dual);
        let exts = f.linear_extensions().unwrap();
        prop_assert_eq!(&exts, &brute_extensions(&f.poset()));
        prop_assert!(exts.iter().all(|l| f.poset().is_extension(l)));
    }

    #[test]
    fn dual_fence_reverses_labels(alpha in arb_composition(7)) {
        // reversing all labels is an anti-isomorphism between F and F*
        let f = Fence::new(alpha.clone(), false).linear_extensions().unwrap();
        let mut g: Vec<Labelling> = f
            .iter()
            .map(|l| Labelling::new(l.labels().iter().map(|&x| l.len() + 1 - x).collect()))
            .collect();
        g.sort();
        prop_assert_eq!(g, Fence::new(alpha, true).linear_extensions().unwrap());
    }

    #[test]
    fn extension_graph_is_connected(alpha in arb_composition(7), dual in any::<bool>()) {
        let g = linear_extension_graph(&Fence::new(alpha, dual).poset()).unwrap();
        prop_assert!(g.graph.is_connected());
        prop_assert!(g.graph.is_bipartite());
        for &(a, b) in g.graph.edges() {
            let diff = g.extensions[a]
                .labels()
                .iter()
                .zip(g.extensions[b].labels())
                .filter(|(x, y)| x != y)
                .count();
            prop_assert_eq!(diff, 2);
        }
    }
}
