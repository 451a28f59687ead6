//! Closed forms checked against brute-force enumeration that never touches
//! Euler's criterion: residues come from squaring, pairs are counted directly.

use std::collections::BTreeSet;

use lcordial_core::cordial::{
    cordial_target, count_edge_labels, count_edge_labels_under, is_cordial_direct,
    is_cordial_paper_algorithm, is_cordial_theorem,
};
use lcordial_core::legraph::{
    build_legendre_graph, degree_closed_form, eta_s, min_max_degree, omega_set, pi_set, psi,
    s1_sum, s2_sum, size_closed_form, LegendreGraph, VertexLabeling,
};
use lcordial_core::numtheory::sieve_primes;
use lcordial_core::{LegendreValue, OddPrime};
use proptest::prelude::*;

fn odd_primes(max: u64) -> Vec<OddPrime> {
    sieve_primes(max)
        .into_iter()
        .skip(1)
        .map(|p| OddPrime::new(p).unwrap())
        .collect()
}

/// +1 / -1 / 0 from the set of nonzero squares mod p.
fn brute_symbol(a: u64, p: u64) -> i64 {
    let a = a % p;
    if a == 0 {
        return 0;
    }
    if (1..p).any(|x| x * x % p == a) {
        1
    } else {
        -1
    }
}

fn brute_size(n: u64, p: u64, k: i64) -> usize {
    let mut count = 0;
    for i in 1..=n {
        for j in i + 1..=n {
            if brute_symbol(i + j, p) == k {
                count += 1;
            }
        }
    }
    count
}

fn brute_degree(label: u64, n: u64, p: u64, k: i64) -> u64 {
    (1..=n)
        .filter(|&u| u != label && brute_symbol(label + u, p) == k)
        .count() as u64
}

fn zero_sum_pairs(n: u64, p: u64) -> u64 {
    let mut c = 0;
    for i in 1..=n {
        for j in i + 1..=n {
            if (i + j) % p == 0 {
                c += 1;
            }
        }
    }
    c
}

fn split(n: u64, p: OddPrime) -> (u64, u64) {
    let q = n / p.get();
    (q, n - q * p.get())
}

#[test]
fn spot_values_from_the_oracle() {
    assert_eq!(brute_size(4, 3, 1), 2);
    assert_eq!(brute_size(4, 3, -1), 2);
    assert_eq!(brute_size(5, 3, 1), 3);
    assert_eq!(brute_size(4, 5, 1), 2);
    assert_eq!(brute_degree(2, 3, 3, 1), 0);
    assert_eq!(brute_degree(1, 3, 3, 1), 1);
}

#[test]
fn size_matches_enumeration() {
    for p in odd_primes(37) {
        for n in 2..=60 {
            for k in LegendreValue::BOTH {
                let b = size_closed_form(n, p, k).unwrap();
                let g = LegendreGraph::with_identity(n, p, k);
                assert_eq!(b.size as usize, g.size(), "L_{n}^{k}({p})");
                assert_eq!(
                    g.size(),
                    brute_size(n, p.get(), k.sign()),
                    "oracle L_{n}^{k}({p})"
                );
            }
        }
    }
}

#[test]
fn degrees_match_enumeration() {
    for p in odd_primes(37) {
        for n in 2..=60 {
            for k in LegendreValue::BOTH {
                let degrees = LegendreGraph::with_identity(n, p, k).degrees();
                for label in 1..=n {
                    let closed = degree_closed_form(label, n, p, k).unwrap();
                    assert_eq!(
                        closed as usize,
                        degrees[label as usize - 1],
                        "deg {label} in L_{n}^{k}({p})"
                    );
                    assert_eq!(closed, brute_degree(label, n, p.get(), k.sign()));
                }
            }
        }
    }
}

#[test]
fn pair_sums_partition_the_complete_graph() {
    for p in odd_primes(37) {
        for n in 2..=60 {
            let plus = size_closed_form(n, p, LegendreValue::Residue).unwrap().size;
            let minus = size_closed_form(n, p, LegendreValue::Nonresidue)
                .unwrap()
                .size;
            assert_eq!(plus + minus + zero_sum_pairs(n, p.get()), n * (n - 1) / 2);
        }
    }
}

#[test]
fn head_residue_sets_sum_to_a_full_block_count() {
    for p in odd_primes(37) {
        for n in 2..=60 {
            let (q, r) = split(n, p);
            for k in LegendreValue::BOTH {
                let total: u64 = (1..=q * p.get())
                    .map(|v| omega_set(v, n, p, k).unwrap().len() as u64)
                    .sum();
                assert_eq!(total, q * r * p.half(), "n={n} p={p} k={k}");
            }
        }
    }
}

#[test]
fn tail_residue_sets_sum_to_the_tail_formula() {
    for p in odd_primes(37) {
        for n in 2..=60 {
            let (q, r) = split(n, p);
            let s = s1_sum(n, p) + s2_sum(n, p);
            for k in LegendreValue::BOTH {
                let total: i64 = (q * p.get() + 1..=n)
                    .map(|v| pi_set(v, n, p, k).unwrap().len() as i64)
                    .sum();
                let twice = (r * r.saturating_sub(1)) as i64 - psi(n, p) as i64 + k.sign() * s;
                assert_eq!(2 * total, twice, "n={n} p={p} k={k}");
            }
        }
    }
}

#[test]
fn psi_counts_zero_sum_tail_pairs() {
    for p in odd_primes(37) {
        for n in 2..=60 {
            let (_, r) = split(n, p);
            let mut distinct = 0;
            let mut all = 0;
            for i in 1..=r {
                for c in 1..=r {
                    if (i + c) % p.get() == 0 {
                        all += 1;
                        if i != c {
                            distinct += 1;
                        }
                    }
                }
            }
            assert_eq!(psi(n, p), distinct, "n={n} p={p}");
            assert_eq!(all, distinct);
        }
    }
}

#[test]
fn eta_counts_ordered_pairs() {
    for p in odd_primes(37) {
        for n in 2..=60 {
            let (_, r) = split(n, p);
            for s in 2..=2 * r {
                let pairs = (1..=r).filter(|&i| s > i && s - i <= r).count() as u64;
                assert_eq!(eta_s(s, n, p).unwrap(), pairs, "s={s} n={n} p={p}");
            }
        }
    }
}

/// Direct signed sum over ordered distinct tail pairs whose sum is a unit.
fn brute_tail_symbol_sum(n: u64, p: u64) -> i64 {
    let r = n % p;
    let mut total = 0;
    for i in 1..=r {
        for c in 1..=r {
            if i != c {
                total += brute_symbol(i + c, p);
            }
        }
    }
    total
}

#[test]
fn tail_symbol_sum_uses_s_minus_one_minus_delta() {
    for p in odd_primes(37) {
        for n in 2..=60 {
            assert_eq!(
                s1_sum(n, p) + s2_sum(n, p),
                brute_tail_symbol_sum(n, p.get()),
                "n={n} p={p}"
            );
        }
    }
    // the (s - δ_s) coefficient in the first sum disagrees with enumeration, e.g. K_3 mod 7
    let p = OddPrime::new(7).unwrap();
    let alt: i64 = (2..=4u64)
        .map(|s| (s as i64 - (s % 2 == 0) as i64) * brute_symbol(s, 7))
        .sum();
    assert_ne!(alt + s2_sum(3, p), brute_tail_symbol_sum(3, 7));
}

#[test]
fn extreme_degrees_of_full_block_graphs() {
    for p in odd_primes(13) {
        for q in 1..=4 {
            let (lo, hi) = min_max_degree(q, p).unwrap();
            for k in LegendreValue::BOTH {
                let g = LegendreGraph::with_identity(q * p.get(), p, k);
                assert_eq!(g.min_degree(), Some(lo as usize), "q={q} p={p} k={k}");
                assert_eq!(g.max_degree(), Some(hi as usize), "q={q} p={p} k={k}");
            }
        }
    }
}

#[test]
fn three_deciders_agree() {
    for p in odd_primes(100) {
        for n in 2..=100 {
            let d = is_cordial_direct(n, p);
            let t = is_cordial_theorem(n, p);
            let a = is_cordial_paper_algorithm(n, p);
            assert_eq!(d.cordial, t.cordial, "K_{n} mod {p}: direct vs theorem");
            assert_eq!(t.cordial, a.cordial, "K_{n} mod {p}: theorem vs algorithm");
            assert_eq!((t.s_value, t.t_value), (a.s_value, a.t_value));

            let counts = d.counts.unwrap();
            let (s, target) = (t.s_value.unwrap(), t.t_value.unwrap());
            assert_eq!(target, cordial_target(n, p));
            assert_eq!((target - s) % 2, 0, "parity K_{n} mod {p}");
            assert_eq!(
                2 * counts.difference(),
                target - s,
                "e0 - e1 for K_{n} mod {p}"
            );
            let plus = size_closed_form(n, p, LegendreValue::Residue).unwrap().size;
            assert_eq!(counts.e1, plus);
            assert_eq!(counts.e0, n * (n - 1) / 2 - plus);
        }
    }
}

#[test]
fn corollary_matches_direct_decision() {
    for p in odd_primes(13) {
        for q in 1..=5 {
            let expected = is_cordial_direct(q * p.get(), p).cordial;
            assert_eq!(
                lcordial_core::cordial::corollary_qp_case(q, p),
                expected,
                "q={q} p={p}"
            );
        }
    }
}

fn labeling_strategy(max_n: usize) -> impl Strategy<Value = Vec<u64>> {
    (2..=max_n).prop_flat_map(|n| Just((1..=n as u64).collect::<Vec<_>>()).prop_shuffle())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn size_and_degree_multiset_ignore_the_labeling(labels in labeling_strategy(12), idx in 0usize..5, plus in any::<bool>()) {
        let p = odd_primes(13)[idx];
        let k = if plus { LegendreValue::Residue } else { LegendreValue::Nonresidue };
        let n = labels.len() as u64;
        let f = VertexLabeling::new(labels).unwrap();
        let g = build_legendre_graph(n, p, k, f.clone()).unwrap();
        prop_assert_eq!(g.size() as u64, size_closed_form(n, p, k).unwrap().size);
        let degrees = g.degrees();
        for (v, &d) in degrees.iter().enumerate() {
            prop_assert_eq!(d as u64, degree_closed_form(f.label(v), n, p, k).unwrap());
        }
        let labelled: BTreeSet<_> = g.label_edges().into_iter().collect();
        let identity: BTreeSet<_> = LegendreGraph::with_identity(n, p, k).label_edges().into_iter().collect();
        prop_assert_eq!(labelled, identity);
    }

    #[test]
    fn edge_label_counts_ignore_the_labeling(labels in labeling_strategy(9), idx in 0usize..5) {
        let p = odd_primes(13)[idx];
        let n = labels.len() as u64;
        let f = VertexLabeling::new(labels).unwrap();
        prop_assert_eq!(count_edge_labels_under(&f, p), count_edge_labels(n, p));
    }
}
