mod common;

use std::collections::BTreeSet;

use common::oracle_reduce;
use primlat::boolean::full_mask;
use primlat::catalog;
use primlat::dposet::dposet_check;
use primlat::iso::is_isomorphic;
use primlat::primorial::{is_primorial, MemberKind, PrimorialFlags, PrimorialLattice, Strategy};
use primlat::projection::{Method, Projector};
use primlat::reduce::{carrier_difference, difference, inherited_ortho, reduce, reduce_brute_force};
use primlat::valuation::LatticeMetric;
use primlat::{Level, Mask, PrimorialError, Rational};

#[test]
fn reduction_matches_the_oracle() {
    for n in 2..=5 {
        let (tried, expected) = oracle_reduce(n);
        let got: BTreeSet<Vec<Mask>> =
            reduce(&Level::powerset(n), false).unwrap().iter().map(|l| l.carrier().to_vec()).collect();
        assert_eq!(got, expected, "n={n}");
        let census = reduce_brute_force(&Level::powerset(n)).unwrap();
        assert_eq!(census.candidates, tried);
    }
    assert_eq!(oracle_reduce(5).0, 6435);
    assert_eq!(oracle_reduce(5).1.len(), 50);
}

#[test]
fn reduction_needs_opt_in_above_five() {
    assert_eq!(
        reduce(&Level::powerset(6), false).unwrap_err(),
        PrimorialError::NeedsBestEffort { n: 6, max: 5 }
    );
}

#[test]
fn every_reduction_member_of_the_cube_gives_o6() {
    for l2 in reduce(&Level::powerset(3), false).unwrap() {
        let d = difference(&Level::powerset(3), &l2).unwrap();
        assert!(is_isomorphic(d.lattice().poset(), catalog::o6().poset()).is_some());
        let o = inherited_ortho(&d).unwrap();
        assert_eq!(o.class().as_str(), "orthocomplemented");
    }
}

#[test]
fn difference_levels_are_orthocomplemented() {
    for n in 3..=5 {
        let p = PrimorialLattice::generate(n, &Strategy::CanonicalFirst, false).unwrap();
        for d in p.diffs() {
            let o = inherited_ortho(d).unwrap();
            assert!(o.derived_laws().is_ok());
        }
    }
}

#[test]
fn family_shapes() {
    for n in 2..=5 {
        let p = PrimorialLattice::generate(n, &Strategy::CanonicalFirst, false).unwrap();
        assert_eq!(p.members().len(), 2 * n - 2);
        assert!(is_primorial(p.family()).is_some());
        if n >= 4 {
            assert!(PrimorialFlags::of(p.family()).all(), "n={n}");
        }
    }
    assert!(is_primorial(&catalog::primorial_divisors()).is_some());
    assert!(is_primorial(&catalog::powerset(3)).is_none());
}

#[test]
fn all_four_atom_chains_are_primorial() {
    let l3s = reduce(&Level::powerset(4), false).unwrap();
    for (i, l3) in l3s.iter().enumerate() {
        for j in 0..reduce(l3, false).unwrap().len() {
            let p = PrimorialLattice::generate(4, &Strategy::Explicit(vec![i, j, 0]), false).unwrap();
            assert!(is_primorial(p.family()).is_some());
        }
    }
}

#[test]
fn dposet_on_boolean_chains() {
    for n in 2..=5 {
        let p = PrimorialLattice::generate(n, &Strategy::CanonicalFirst, false).unwrap();
        let items: Vec<Vec<Mask>> = p.chain().iter().map(|l| l.carrier().to_vec()).collect();
        let full = full_mask(n);
        let subset = |a: &Vec<Mask>, b: &Vec<Mask>| a.iter().all(|m| b.binary_search(m).is_ok());
        let r = dposet_check(&items, subset, |y, x| carrier_difference(y, x, 0, full));
        assert!(r.passed(), "n={n}: {:?}", r.violations);
        assert_eq!(r.triples, n * (n + 1) * (n + 2) / 6);
    }
}

#[test]
fn projections_on_the_five_atom_family() {
    let p = PrimorialLattice::generate(5, &Strategy::CanonicalFirst, false).unwrap();
    let pr = Projector::new(&p);
    for m in p.members() {
        for x in 0..=full_mask(5) {
            let own = m.level.contains(x);
            let (maps, meets) = pr.sasaki_forms(&m.level, x);
            assert_eq!(maps, meets, "{} {x}", m.kind);
            for method in Method::ALL {
                let y = pr.project(&m.level, x, method).unwrap();
                assert!(m.level.contains(y));
                if own {
                    assert_eq!(y, x, "{} {method}", m.kind);
                }
            }
            if !own {
                assert_eq!(pr.zero(&m.level, x), 0);
            }
        }
    }
}

#[test]
fn ceiling_is_the_least_cover_when_one_exists() {
    let p = PrimorialLattice::generate(4, &Strategy::CanonicalFirst, false).unwrap();
    let pr = Projector::new(&p);
    for m in p.members() {
        for x in 0..=full_mask(4) {
            let ups: Vec<Mask> = m.level.carrier().iter().copied().filter(|&y| x & !y == 0).collect();
            if let Some(&least) = ups.iter().find(|&&u| ups.iter().all(|&y| u & !y == 0)) {
                assert_eq!(pr.ceiling(&m.level, x), least, "{} {x}", m.kind);
            }
        }
    }
}

#[test]
fn metrics_on_five_atom_chain_levels() {
    let p = PrimorialLattice::generate(5, &Strategy::CanonicalFirst, false).unwrap();
    for l in p.chain() {
        let d = LatticeMetric::<Rational>::height(l.lattice()).unwrap();
        assert!(d.axiom_violation().is_none());
    }
    let d5 = p.member(MemberKind::Difference(5)).unwrap();
    assert!(LatticeMetric::<Rational>::height(d5.level.lattice()).is_err());
}
