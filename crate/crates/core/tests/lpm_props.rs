mod common;

use common::*;
use lpm::lpm::{snake_composition, snake_from_composition, snakes_inside};
use lpm::polytope::dimension;
use lpm::{Composition, LatticePath, Lpm};
use proptest::prelude::*;

#[test]
fn bases_match_elementwise_description() {
    for n in 1..=8 {
        for m in all_lpms(n) {
            let fast: Vec<Vec<usize>> = m.bases().iter().map(LatticePath::north_set).collect();
            assert_eq!(fast, brute_bases(&m), "{m}");
        }
    }
}

#[test]
fn path_connectivity_is_matroid_connectivity() {
    for n in 1..=7 {
        for m in all_lpms(n) {
            assert_eq!(m.is_connected(), brute_connected(&m), "{m}");
        }
    }
}

#[test]
fn minors_are_the_lpm_of_their_bases() {
    for n in 2..=7 {
        for m in all_lpms(n) {
            for i in 1..=n {
                assert_eq!(brute_bases(&m.delete(i).unwrap()), brute_delete(&m, i), "{m} \\ {i}");
                assert_eq!(brute_bases(&m.contract(i).unwrap()), brute_contract(&m, i), "{m} / {i}");
            }
        }
    }
}

#[test]
fn dimension_is_affine_dimension() {
    for n in 1..=7 {
        for m in all_lpms(n) {
            assert_eq!(Some(dimension(&m)), affine_dim(&vertex_matrix(&m)), "{m}");
        }
    }
}

#[test]
fn snake_composition_round_trip() {
    for n in 2..=8 {
        for m in connected_lpms(n).into_iter().filter(Lpm::is_snake) {
            let (alpha, starred) = snake_composition(&m).unwrap();
            assert_eq!(snake_from_composition(&alpha, starred), m);
        }
    }
}

#[test]
fn snakes_inside_are_exactly_the_contained_snakes() {
    for n in 1..=7 {
        let all = connected_lpms(n);
        for m in &all {
            let mut expected: Vec<&Lpm> = all
                .iter()
                .filter(|s| s.is_snake() && m.contains_path(s.upper()) && m.contains_path(s.lower()))
                .collect();
            expected.sort_by_key(|s| s.to_string());
            let got_raw = snakes_inside(m).unwrap();
            let mut got: Vec<&Lpm> = got_raw.iter().collect();
            got.sort_by_key(|s| s.to_string());
            assert_eq!(got, expected, "{m}");
        }
    }
}

fn arb_lpm(max_n: usize) -> impl Strategy<Value = Lpm> {
    (1..=max_n)
        .prop_flat_map(|n| (Just(n), 0..=n))
        .prop_flat_map(|(n, k)| {
            let sets = subsets(n, k);
            let len = sets.len();
            (Just(n), Just(sets), 0..len, 0..len)
        })
        .prop_filter_map("dominance", |(n, sets, a, b)| {
            let (x, y) = if a <= b { (a, b) } else { (b, a) };
            Lpm::from_north_sets(n, &sets[x], &sets[y]).ok()
        })
}

fn arb_composition() -> impl Strategy<Value = Composition> {
    prop::collection::vec(1usize..4, 0..6).prop_map(|v| Composition::new(v).unwrap())
}

proptest! {
    #[test]
    fn upper_and_lower_are_bases(m in arb_lpm(12)) {
        let b = m.bases();
        prop_assert_eq!(b.first(), Some(m.upper()));
        prop_assert_eq!(b.last(), Some(m.lower()));
        prop_assert!(b.windows(2).all(|w| w[0].north_set() < w[1].north_set()));
    }

    #[test]
    fn reflection_dualizes_bases(m in arb_lpm(10)) {
        let r = m.reflected();
        prop_assert_eq!(r.k(), m.n() - m.k());
        prop_assert_eq!(r.bases().len(), m.bases().len());
        for b in r.bases() {
            prop_assert!(m.contains_path(&b.reflected()));
        }
        prop_assert_eq!(r.is_connected(), m.is_connected());
    }

    #[test]
    fn direct_sum_multiplies_bases(a in arb_lpm(6), b in arb_lpm(6)) {
        let s = a.direct_sum(&b);
        prop_assert_eq!(s.bases().len(), a.bases().len() * b.bases().len());
        prop_assert_eq!(s.components(), a.components() + b.components());
    }

    #[test]
    fn grammar_round_trip(m in arb_lpm(12)) {
        prop_assert_eq!(m.to_string().parse::<Lpm>().unwrap(), m.clone());
        let steps = format!("U={}; L={}", m.upper(), m.lower());
        prop_assert_eq!(steps.parse::<Lpm>().unwrap(), m);
    }

    #[test]
    fn composition_snake_round_trip(alpha in arb_composition(), starred in any::<bool>()) {
        let s = snake_from_composition(&alpha, starred);
        prop_assert!(s.is_snake());
        prop_assert_eq!(s.n(), alpha.total() + 2);
        prop_assert_eq!(s.cells().len(), alpha.total() + 1);
        let starred = starred && !alpha.is_empty();
        prop_assert_eq!(snake_composition(&s).unwrap(), (alpha, starred));
    }

    #[test]
    fn json_round_trip(m in arb_lpm(10)) {
        let v = serde_json::to_string(&m).unwrap();
        prop_assert_eq!(serde_json::from_str::<Lpm>(&v).unwrap(), m);
    }
}
