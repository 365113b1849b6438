mod common;

use common::*;
use lpm::ehrhart::hstar_from_ehrhart;
use lpm::fence::labellings_of_snake;
use lpm::rank2::*;
use lpm::triangulation::{dual_graph, hstar_from_orientation, orient_away, volume_by_snakes};
use lpm::Lpm;

/// `x (x-1) ... (x-j+1) / j!` for any integer `x`.
fn binom_poly(x: i64, j: i64) -> i64 {
    let mut num: i128 = 1;
    let mut den: i128 = 1;
    for i in 0..j {
        num *= (x - i) as i128;
        den *= (i + 1) as i128;
    }
    (num / den) as i64
}

#[test]
fn one_descent_count_by_brute_force() {
    for m in 1..=10 {
        let mut perm: Vec<usize> = (1..=m).collect();
        let mut count = 0u64;
        loop {
            if (1..m).filter(|&i| perm[i - 1] > perm[i]).count() == 1 {
                count += 1;
            }
            if !next_permutation(&mut perm) {
                break;
            }
        }
        assert_eq!(count, eulerian_one_descent(m), "m={m}");
    }
}

#[test]
fn sigma_is_the_snake_volume() {
    for n in 4..=9 {
        for k in 1..=n - 2 {
            for l in k..=n - 2 {
                let m = rank2_lpm(n, k, l).unwrap();
                assert_eq!(sigma(n, k, l).unwrap() as u64, volume_by_snakes(&m).unwrap(), "n={n} k={k} l={l}");
            }
        }
    }
}

#[test]
fn straight_snakes_have_binomial_labellings() {
    for n in 4..=9 {
        for k in 1..=n - 2 {
            let s = rank2_lpm(n, k, k).unwrap();
            assert!(s.is_snake());
            let count = labellings_of_snake(&s).unwrap().len() as i64;
            assert_eq!(count, binom(n as i64 - 1, k as i64) - 1);
        }
    }
}

#[test]
fn recursion_by_direct_enumeration() {
    // count labellings of M_{n+1}[k,l] against the three-part decomposition
    // snakes M_n[j,j] with j > n-2 do not exist and contribute nothing
    let vol = |n: usize, k: usize, l: usize| -> i64 {
        let l = l.min(n - 2);
        if l < k {
            return 0;
        }
        volume_by_snakes(&rank2_lpm(n, k, l).unwrap()).unwrap() as i64
    };
    for n in 4..=8 {
        for k in 1..=n - 2 {
            for l in k + 1..=n - 1 {
                let lhs = vol(n + 1, k, l);
                let rhs = vol(n, k, l - 1) + vol(n, k, l) + binom(n as i64 - 1, k as i64 - 1) + (l - k) as i64;
                assert_eq!(lhs, rhs, "n={n} k={k} l={l}");
            }
        }
    }
}

#[test]
fn eulerian_splits_into_two_schubert_volumes() {
    for n in 4..=10 {
        for l in 1..=n - 3 {
            let s = sigma(n, 1, l).unwrap() + sigma(n, 1, n - l - 2).unwrap();
            assert_eq!(s as u64, eulerian_one_descent(n - 1));
        }
    }
}

#[test]
fn table_is_a_polynomial_in_n() {
    let t = sigma_table(8, 10).unwrap();
    for (n, row) in t.iter().enumerate() {
        for (li, &v) in row.iter().enumerate() {
            let l = li as i64 + 1;
            let poly: i64 = (1..=l).map(|j| binom_poly(n as i64 - 1, j) - 1).sum();
            assert_eq!(v, poly, "n={n} l={l}");
        }
    }
}

#[test]
fn finite_differences_vanish() {
    for k in 1..=3 {
        for l in k..=5 {
            // geometric range n >= l+2, long enough for l+1 differences
            let start = (l + 2).max(4);
            let mut seq: Vec<i64> = (start..start + l + 3).map(|n| sigma(n, k, l).unwrap()).collect();
            for _ in 0..=l {
                seq = seq.windows(2).map(|w| w[1] - w[0]).collect();
            }
            assert!(seq.iter().all(|&x| x == 0), "k={k} l={l}: {seq:?}");
        }
    }
}

#[test]
fn uniform_hstar_by_three_routes() {
    for n in 4..=8 {
        let m = Lpm::uniform(2, n).unwrap();
        let g = dual_graph(&m).unwrap();
        let base = g.find_simplex(&pi0_vertices(n).unwrap()).unwrap();
        let tri = hstar_from_orientation(&orient_away(&g, base).unwrap());
        assert_eq!(hstar_uniform_perms(n).unwrap(), hstar_uniform_closed(n).unwrap());
        assert_eq!(tri, hstar_uniform_closed(n).unwrap(), "n={n}");
        assert_eq!(hstar_from_ehrhart(&m).unwrap(), tri, "n={n}");
    }
    let ig0 = one_descent_permutations(5).iter().filter(|p| gap_stats(p).ig == 0).count();
    assert_eq!(ig0, 10);
}

#[test]
fn schubert_hstar_by_three_routes() {
    for n in 4..=8 {
        for l in 1..=n - 3 {
            let m = rank2_lpm(n, 1, l).unwrap();
            let g = dual_graph(&m).unwrap();
            let base = g.find_simplex(&pi0_vertices(n).unwrap()).unwrap();
            let tri = hstar_from_orientation(&orient_away(&g, base).unwrap());
            assert_eq!(hstar_schubert(n, l).unwrap(), tri, "n={n} l={l}");
            assert_eq!(hstar_from_ehrhart(&m).unwrap(), tri, "n={n} l={l}");
            assert_eq!(tri.iter().sum::<u64>() as i64, sigma(n, 1, l).unwrap());
        }
    }
}

#[test]
fn inclusion_exclusion_for_all_rank_two() {
    for n in 4..=8 {
        for k in 1..=n - 2 {
            for l in k..=n - 2 {
                let m = rank2_lpm(n, k, l).unwrap();
                assert_eq!(hstar_rank2(n, k, l).unwrap(), hstar_from_ehrhart(&m).unwrap(), "n={n} k={k} l={l}");
            }
        }
    }
}

#[test]
fn every_connected_rank_two_lpm_is_schubert_shaped() {
    for n in 3..=9 {
        for m in connected_lpms(n).into_iter().filter(|m| m.k() == 2) {
            let (nn, k, l) = rank2_params(&m).unwrap();
            assert_eq!(rank2_lpm(nn, k, l).unwrap(), m);
        }
    }
}

#[test]
fn range_errors() {
    assert!(hstar_schubert(6, 0).is_err());
    assert!(hstar_rank2(6, 3, 2).is_err());
    assert!(hstar_uniform_closed(3).is_err());
    assert!(sigma_table(0, 3).is_err());
    assert_eq!(sigma(70, 1, 1).unwrap_err(), lpm::Error::Range("n = 70 exceeds 60".into()));
}
