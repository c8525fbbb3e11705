#![allow(dead_code)]

use std::collections::BTreeSet;

use primlat::boolean::full_mask;
use primlat::classify::{complementation_class, find_m3, find_n5, is_distributive, is_modular, ComplementationClass};
use primlat::laws::{self, Tables};
use primlat::ortho::{find_orthocomplementations, OrthoLattice};
use primlat::{classify, FiniteLattice, Mask};

fn note(out: &mut Vec<String>, l: &FiniteLattice, r: laws::LawResult) {
    if let Err(v) = r {
        let w: Vec<&str> = v.witness.iter().map(|&i| l.label(i)).collect();
        out.push(format!("{} at {:?}", v.law, w));
    }
}

/// Every lattice-level law from the order, modularity, distributivity and Boolean theory.
pub fn lattice_law_counterexamples(l: &FiniteLattice) -> Vec<String> {
    let mut out = Vec::new();
    let t = Tables::from(l);
    note(&mut out, l, laws::lattice_axioms(&t));
    note(&mut out, l, laws::reduced_axioms(&t));
    note(&mut out, l, laws::order_agreement(l));
    note(&mut out, l, laws::monotony(l));
    if l.len() <= 8 {
        note(&mut out, l, laws::subset_monotony(l));
    }
    note(&mut out, l, laws::minimax_2x2(l));
    note(&mut out, l, laws::distributive_inequalities(l));
    note(&mut out, l, laws::modular_inequality(l));
    note(&mut out, l, laws::bound_identities(l));

    let report = classify(l);
    let modular = is_modular(l);
    let distributive = is_distributive(l);
    if modular != find_n5(l).is_none() {
        out.push("modularity disagrees with pentagon search".into());
    }
    if distributive != (find_n5(l).is_none() && find_m3(l).is_none()) {
        out.push("distributivity disagrees with pentagon/diamond search".into());
    }
    if laws::modular_identities(&t).is_ok() != modular {
        out.push("modular identities disagree with the definition".into());
    }
    if laws::modularity_forms(l).iter().any(|&f| f != modular) {
        out.push("modularity forms disagree".into());
    }
    if laws::distributivity_forms(l).iter().any(|&f| f != distributive) {
        out.push("distributivity forms disagree".into());
    }
    if distributive && !modular {
        out.push("distributive but not modular".into());
    }
    if distributive {
        note(&mut out, l, laws::cancellation(l));
    }
    if !laws::unique_complements_if_boolean(l) {
        out.push("distributive complemented lattice with several complements".into());
    }
    if complementation_class(l) == ComplementationClass::UniquelyComplemented
        && laws::huntington_properties(l, 4).any()
        && !distributive
    {
        out.push("uniquely complemented with a side condition but not distributive".into());
    }
    if report.is_boolean {
        match laws::first_complements(l) {
            Some(c) => {
                note(&mut out, l, laws::classic_boolean_properties(l, &c));
                note(&mut out, l, laws::huntington_fourth_set(l, &c));
            }
            None => out.push("Boolean lattice without complements".into()),
        }
    }
    out
}

/// Ortholattice laws for every orthocomplementation of `l`.
pub fn ortho_law_counterexamples(l: &FiniteLattice) -> Vec<String> {
    let mut out = Vec::new();
    for perp in find_orthocomplementations(l) {
        let o = match OrthoLattice::new(l.clone(), perp) {
            Ok(o) => o,
            Err(e) => {
                out.push(format!("orthocomplementation rejected: {e}"));
                continue;
            }
        };
        note(&mut out, l, o.derived_laws());
        note(&mut out, l, o.sasaki_laws());
        note(&mut out, l, o.relation_laws());
        let forms = o.symmetry_forms();
        if forms.iter().any(|&f| f != forms[0]) {
            out.push(format!("symmetry forms disagree: {forms:?}"));
        }
        if o.is_orthomodular() {
            note(&mut out, l, o.sasaki_commutation());
        }
        let class = o.class();
        if class.boolean && !class.modular || class.modular && !class.orthomodular {
            out.push(format!("ortho class chain broken: {class:?}"));
        }
    }
    out
}

/// Order-isomorphism to a powerset, decided from the atoms of the inclusion order.
pub fn oracle_is_boolean(carrier: &[Mask]) -> bool {
    let below = |a: Mask, b: Mask| a & !b == 0;
    let bottom = carrier.iter().copied().find(|&b| carrier.iter().all(|&x| below(b, x)));
    let Some(bottom) = bottom else { return false };
    let atoms: Vec<Mask> = carrier
        .iter()
        .copied()
        .filter(|&a| a != bottom && carrier.iter().all(|&x| x == bottom || x == a || !below(x, a)))
        .collect();
    if carrier.len() != 1 << atoms.len() {
        return false;
    }
    let signature = |x: Mask| -> usize {
        atoms.iter().enumerate().filter(|(_, &a)| below(a, x)).map(|(i, _)| 1 << i).sum()
    };
    let sigs: BTreeSet<usize> = carrier.iter().map(|&x| signature(x)).collect();
    sigs.len() == carrier.len()
        && carrier
            .iter()
            .all(|&x| carrier.iter().all(|&y| below(x, y) == (signature(x) & !signature(y) == 0)))
}

/// All selections of `2^(n-2) - 1` complement pairs (plus the bounds) from `L₂ⁿ` that are Boolean.
pub fn oracle_reduce(n: usize) -> (usize, BTreeSet<Vec<Mask>>) {
    let full = full_mask(n);
    let pairs: Vec<(Mask, Mask)> = (1..full).filter(|&m| m < full - m).map(|m| (m, full - m)).collect();
    let choose = (1usize << (n - 2)) - 1;
    let mut accepted = BTreeSet::new();
    let mut tried = 0;
    for sel in 0u32..(1 << pairs.len()) {
        if sel.count_ones() as usize != choose {
            continue;
        }
        tried += 1;
        let mut carrier = vec![0, full];
        for (i, &(a, b)) in pairs.iter().enumerate() {
            if sel >> i & 1 == 1 {
                carrier.extend([a, b]);
            }
        }
        carrier.sort_unstable();
        if oracle_is_boolean(&carrier) {
            accepted.insert(carrier);
        }
    }
    (tried, accepted)
}

