//! Invariants checked over every labeled graph on a few vertices and over
//! the named families.

use num_bigint::BigInt;
use num_traits::Zero;
use rayon::prelude::*;
use walkreg_core::algebra::spectrum::min_poly;
use walkreg_core::swr::{
    classify, swr_params_direct, swr_params_spectral, swr_profile, verify_identity, Classification, SwrProfile,
};
use walkreg_core::{construct_family, BigMatrix, Graph};

/// All labeled graphs on `n` vertices, indexed by their upper-triangle bits.
fn labeled(n: usize) -> impl ParallelIterator<Item = Graph> {
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|j| (0..j).map(move |i| (i, j))).collect();
    (0u32..1 << pairs.len()).into_par_iter().map(move |mask| {
        let edges = pairs.iter().enumerate().filter(|(b, _)| mask >> b & 1 == 1).map(|(_, &e)| e);
        Graph::from_edges(n, edges).unwrap()
    })
}

fn graph(spec: &str) -> Graph {
    construct_family(&spec.split_whitespace().collect::<Vec<_>>()).unwrap()
}

#[test]
fn direct_and_spectral_routes_agree() {
    for n in 1..=6 {
        labeled(n)
            .filter(|g| g.is_regular().is_some() && g.is_connected())
            .for_each(|g| {
                for ell in 2..=15 {
                    let direct = swr_params_direct(&g, ell).unwrap().ok();
                    let spectral = swr_params_spectral(&g, ell).unwrap();
                    match (&direct, &spectral) {
                        (Some(d), Some(s)) => assert!(d.agrees_with(s), "{g:?} l={ell}: {d} vs {s}"),
                        (None, None) => {}
                        _ => panic!("{g:?} l={ell}: direct {direct:?}, spectral {spectral:?}"),
                    }
                }
            });
    }
}

#[test]
fn positive_mu_forces_regular_and_connected() {
    for n in 1..=5 {
        labeled(n).for_each(|g| {
            for ell in 2..=7 {
                if let Ok(p) = swr_params_direct(&g, ell).unwrap() {
                    if p.mu.as_ref().is_some_and(|m| !m.is_zero()) {
                        assert!(g.is_regular().is_some() && g.is_connected(), "{g:?} l={ell}");
                    }
                }
            }
        });
    }
}

#[test]
fn even_lengths_need_at_most_three_eigenvalues() {
    for n in 1..=5 {
        labeled(n).for_each(|g| {
            let distinct = min_poly(&BigMatrix::adjacency(&g)).degree().unwrap_or(0);
            for ell in [2, 4, 6] {
                if swr_params_direct(&g, ell).unwrap().is_ok() {
                    assert!(distinct <= 3, "{g:?} l={ell}");
                }
            }
        });
    }
}

#[test]
fn profiles_match_the_direct_test() {
    for n in 1..=6 {
        labeled(n).for_each(|g| {
            let profile = swr_profile(&g, 15);
            for ell in 2..=15 {
                let direct = swr_params_direct(&g, ell).unwrap().is_ok();
                assert_eq!(profile.holds_at(ell), Some(direct), "{g:?} {profile} l={ell}");
            }
        });
    }
}

#[test]
fn family_profiles_match_the_direct_test() {
    for spec in [
        "petersen",
        "paley 13",
        "cycle 6",
        "cycle 7",
        "line-graph heawood",
        "hamming 3 3",
        "complement-kmm-km 2",
        "clique-ext cycle 5 3",
        "clique-ext paley 5 3",
        "heawood",
        "complete-bipartite 2 5",
    ] {
        let g = graph(spec);
        let profile = swr_profile(&g, 99);
        for ell in 2..=9 {
            let direct = swr_params_direct(&g, ell).unwrap();
            assert_eq!(profile.holds_at(ell), Some(direct.is_ok()), "{spec} {profile} l={ell}");
            if let Ok(p) = direct {
                if g.is_regular().is_some() && g.is_connected() {
                    let spectral = swr_params_spectral(&g, ell).unwrap().unwrap();
                    assert!(verify_identity(&g, &spectral).passed(), "{spec} l={ell}");
                    assert!(p.agrees_with(&spectral));
                }
            }
        }
    }
}

#[test]
fn paley_graphs_are_strongly_regular() {
    for q in [5usize, 13, 17] {
        let expected = Classification::StronglyRegular {
            v: q,
            k: (q - 1) / 2,
            lambda: (q - 5) / 4,
            mu: (q - 1) / 4,
        };
        let g = graph(&format!("paley {q}"));
        assert_eq!(classify(&g), expected);
        assert_eq!(swr_profile(&g, 99), SwrProfile::AllEll);
    }
}

#[test]
fn minimal_polynomial_annihilates_the_adjacency_matrix() {
    for spec in ["petersen", "cycle 7", "line-graph heawood", "hamming 2 4", "clique-ext cycle 5 3", "path 6"] {
        let a = BigMatrix::adjacency(&graph(spec));
        assert!(a.eval_poly(&a.char_poly()).is_zero(), "{spec}");
        let m = min_poly(&a);
        assert!(a.eval_poly(&m).is_zero(), "{spec}");
        // no proper factor of lower degree does
        let lower = m.degree().unwrap() - 1;
        assert!(!a.pow(lower as u64).is_zero() || lower == 0);
    }
}

#[test]
fn complete_bipartite_walks() {
    for m in 1..=5usize {
        let p = swr_params_direct(&graph(&format!("complete-bipartite {m} {m}")), 3).unwrap().unwrap();
        assert_eq!(p.lambda, Some(BigInt::from(m * m)));
        assert_eq!(p.nu, Some(BigInt::zero()));
        if m > 1 {
            assert_eq!(p.mu, Some(BigInt::zero()));
        }
    }
}
