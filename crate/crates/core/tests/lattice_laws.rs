mod common;

use primlat::catalog;
use primlat::classify::{find_m3, find_n5};
use primlat::compose::{direct_product, direct_sum, exponential, ordinal_sum, ComposeLimits};
use primlat::enumerate::{census, enumerate_lattices};
use primlat::iso::is_isomorphic;
use primlat::{FiniteLattice, FinitePoset, Relation};
use proptest::prelude::*;

#[test]
fn laws_hold_on_every_small_lattice() {
    for n in 1..=7 {
        for l in enumerate_lattices(n).unwrap() {
            let bad = common::lattice_law_counterexamples(&l);
            assert!(bad.is_empty(), "n={n} {:?}: {bad:?}", l.labels());
            let bad = common::ortho_law_counterexamples(&l);
            assert!(bad.is_empty(), "n={n} {:?}: {bad:?}", l.labels());
        }
    }
}

#[test]
fn census_table() {
    let rows: Vec<(usize, usize, usize)> = (0..=7)
        .map(|n| {
            let c = census(&enumerate_lattices(n).unwrap());
            (c.lattices, c.modular, c.distributive)
        })
        .collect();
    assert_eq!(
        rows,
        [(1, 1, 1), (1, 1, 1), (1, 1, 1), (1, 1, 1), (2, 2, 2), (5, 4, 3), (15, 8, 5), (53, 16, 8)]
    );
}

#[test]
fn enumerated_classes_are_pairwise_distinct() {
    let ls = enumerate_lattices(6).unwrap();
    for (i, a) in ls.iter().enumerate() {
        for b in &ls[i + 1..] {
            assert!(is_isomorphic(a.poset(), b.poset()).is_none());
        }
    }
}

#[test]
fn forbidden_sublattices_in_catalog() {
    assert!(find_n5(&catalog::n5()).is_some());
    assert!(find_n5(&catalog::m3()).is_none());
    assert!(find_m3(&catalog::m3()).is_some());
    assert!(find_n5(&catalog::o6()).is_some());
    assert!(find_n5(&catalog::powerset(3)).is_none() && find_m3(&catalog::powerset(3)).is_none());
}

#[test]
fn antichain_is_not_a_lattice() {
    assert!(FiniteLattice::from_poset(catalog::antichain(4)).is_err());
}

/// Random order on `n` elements: an upper-triangular relation closed under transitivity.
fn poset_strategy(prefix: &'static str) -> impl Strategy<Value = FinitePoset> {
    (1usize..=3).prop_flat_map(move |n| {
        proptest::collection::vec(any::<bool>(), n * n).prop_map(move |bits| {
            let r = Relation::from_fn(n, |i, j| i == j || (i < j && bits[i * n + j]));
            let labels = (0..n).map(|i| format!("{prefix}{i}")).collect();
            FinitePoset::from_relation(labels, r.reflexive_transitive_closure()).unwrap()
        })
    })
}

fn iso(a: &FinitePoset, b: &FinitePoset) -> bool {
    a.len() == b.len() && is_isomorphic(a, b).is_some()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn cardinal_arithmetic(p in poset_strategy("p"), q in poset_strategy("q"), r in poset_strategy("r")) {
        let lim = ComposeLimits { max_elements: 1 << 20 };
        prop_assert!(iso(&direct_sum(&p, &q).unwrap(), &direct_sum(&q, &p).unwrap()));
        prop_assert!(iso(&direct_product(&p, &q, lim).unwrap(), &direct_product(&q, &p, lim).unwrap()));
        prop_assert!(iso(
            &direct_sum(&direct_sum(&p, &q).unwrap(), &r).unwrap(),
            &direct_sum(&p, &direct_sum(&q, &r).unwrap()).unwrap()
        ));
        prop_assert!(iso(
            &direct_product(&direct_product(&p, &q, lim).unwrap(), &r, lim).unwrap(),
            &direct_product(&p, &direct_product(&q, &r, lim).unwrap(), lim).unwrap()
        ));
        let qr = direct_sum(&q, &r).unwrap();
        let pq = direct_product(&p, &q, lim).unwrap();
        let pr = direct_product(&p, &r, lim).unwrap();
        prop_assert!(iso(&direct_product(&p, &qr, lim).unwrap(), &direct_sum(&pq, &pr).unwrap()));
        // R^(P+Q) = R^P x R^Q
        let pq_sum = direct_sum(&p, &q).unwrap();
        prop_assert!(iso(
            &exponential(&pq_sum, &r, lim).unwrap(),
            &direct_product(&exponential(&p, &r, lim).unwrap(), &exponential(&q, &r, lim).unwrap(), lim).unwrap()
        ));
        // (P^Q)^R = P^(Q x R)
        let pq_exp = exponential(&q, &p, lim).unwrap();
        prop_assert!(iso(
            &exponential(&r, &pq_exp, lim).unwrap(),
            &exponential(&direct_product(&q, &r, lim).unwrap(), &p, lim).unwrap()
        ));
    }

    #[test]
    fn ordinal_sum_is_associative(p in poset_strategy("p"), q in poset_strategy("q"), r in poset_strategy("r")) {
        prop_assert!(iso(
            &ordinal_sum(&ordinal_sum(&p, &q).unwrap(), &r).unwrap(),
            &ordinal_sum(&p, &ordinal_sum(&q, &r).unwrap()).unwrap()
        ));
    }

    #[test]
    fn closure_and_reduction_round_trip(p in poset_strategy("x")) {
        let covers = p.order().transitive_reduction();
        prop_assert_eq!(&covers.reflexive_transitive_closure(), p.order());
        prop_assert_eq!(&covers, p.cover_relation());
    }

    #[test]
    fn dilworth_partition_matches_width(p in poset_strategy("w")) {
        let (width, chains) = p.width_and_chains();
        prop_assert_eq!(chains.len(), width);
        prop_assert!(chains.iter().all(|c| p.is_chain(c)));
        let mut covered: Vec<usize> = chains.concat();
        covered.sort_unstable();
        prop_assert_eq!(covered, (0..p.len()).collect::<Vec<_>>());
    }
}
