use sgvariety::semigroup::{canonical_table, enumerate_semigroups};
use sgvariety::FiniteSemigroup;
use std::collections::HashSet;

/// Every `n^(n²)` table, filtered for associativity by direct triple checks.
fn brute_force_tables(n: usize) -> Vec<Vec<u32>> {
    let cells = n * n;
    let total = n.pow(cells as u32);
    let mut out = Vec::new();
    for code in 0..total {
        let mut t = vec![0u32; cells];
        let mut c = code;
        for cell in t.iter_mut() {
            *cell = (c % n) as u32;
            c /= n;
        }
        let m = |a: usize, b: usize| t[a * n + b] as usize;
        let assoc = (0..n).all(|a| (0..n).all(|b| (0..n).all(|c| m(m(a, b), c) == m(a, m(b, c)))));
        if assoc {
            out.push(t);
        }
    }
    out.sort();
    out
}

#[test]
fn labeled_counts_match_exhaustive_filter() {
    for n in 1..=3 {
        let oracle = brute_force_tables(n);
        let enumerated: Vec<Vec<u32>> =
            enumerate_semigroups(n, false).iter().map(|s| s.table().to_vec()).collect();
        assert_eq!(enumerated, oracle, "order {n}");
    }
    assert_eq!(brute_force_tables(2).len(), 8);
    assert_eq!(brute_force_tables(3).len(), 113);
}

#[test]
fn iso_classes_match_oracle_dedup() {
    for n in 1..=3 {
        let oracle: HashSet<Vec<u32>> = brute_force_tables(n)
            .into_iter()
            .map(|t| canonical_table(&FiniteSemigroup::from_flat(n, &t, None).unwrap()))
            .collect();
        assert_eq!(enumerate_semigroups(n, true).len(), oracle.len(), "order {n}");
    }
}

#[test]
fn order_four_counts() {
    let labeled = enumerate_semigroups(4, false);
    assert_eq!(labeled.len(), 3492);
    for s in &labeled {
        s.check_associativity().unwrap();
    }
    assert_eq!(enumerate_semigroups(4, true).len(), 188);
    assert_eq!(enumerate_semigroups(3, true).len(), 24);
}

#[test]
fn enumerated_semigroups_carry_generating_sets() {
    for s in enumerate_semigroups(3, true) {
        let gens = s.generators().unwrap();
        assert_eq!(s.closure(gens).len(), s.order());
    }
}
