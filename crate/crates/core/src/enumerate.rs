//! Exhaustive enumeration of unlabelled lattices on small carriers.

use std::collections::BTreeMap;

use crate::classify::{complementation_class, find_m3, find_n5, ComplementationClass};
use crate::error::EnumerationError;
use crate::iso::{canonical_form, CanonicalForm};
use crate::lattice::FiniteLattice;
use crate::poset::{FinitePoset, Relation};

/// Largest supported carrier size.
pub const MAX_ENUMERATION_SIZE: usize = 7;

/// One representative per isomorphism class, sorted by canonical form.
///
/// Representatives are labelled `0`, `a`, `b`, ..., `1` in canonical arrangement.
pub fn enumerate_lattices(n: usize) -> Result<Vec<FiniteLattice>, EnumerationError> {
    if n > MAX_ENUMERATION_SIZE {
        return Err(EnumerationError::TooLarge { n, max: MAX_ENUMERATION_SIZE });
    }
    if n == 0 {
        let empty = FinitePoset::from_cover_indices(Vec::new(), &[]).expect("empty poset");
        return Ok(vec![FiniteLattice::from_poset(empty).expect("empty lattice")]);
    }
    if n == 1 {
        return Ok(vec![crate::catalog::chain(1)]);
    }
    let inner = n - 2;
    let mut classes: BTreeMap<CanonicalForm, FiniteLattice> = BTreeMap::new();
    for strict in naturally_labelled_posets(inner) {
        // Position 0 is the bottom, n - 1 the top, inner element i sits at i + 1.
        let leq = Relation::from_fn(n, |a, b| {
            let mid = |i: usize| i > 0 && i < n - 1;
            a == b || a == 0 || b == n - 1 || (mid(a) && mid(b) && strict.get(a - 1, b - 1))
        });
        let labels = (0..n).map(|i| format!("#{i}")).collect();
        let poset = FinitePoset::from_relation(labels, leq).expect("bounded extension is an order");
        if FiniteLattice::from_poset(poset.clone()).is_err() {
            continue;
        }
        let (form, arrangement) = canonical_form(&poset);
        classes.entry(form).or_insert_with(|| canonical_representative(&poset, &arrangement));
    }
    Ok(classes.into_values().collect())
}

fn canonical_representative(poset: &FinitePoset, arrangement: &[usize]) -> FiniteLattice {
    let n = arrangement.len();
    let labels: Vec<String> = (0..n)
        .map(|k| match k {
            0 => "0".to_string(),
            k if k == n - 1 => "1".to_string(),
            k => ((b'a' + (k - 1) as u8) as char).to_string(),
        })
        .collect();
    let rearranged = FinitePoset::from_order_fn(labels, |a, b| poset.leq(arrangement[a], arrangement[b]))
        .expect("rearranged order is valid");
    FiniteLattice::from_poset(rearranged).expect("isomorphic copy of a lattice")
}

/// Strict orders on `0..k` contained in the natural order `<`, i.e. every poset together with
/// one of its linear extensions.
fn naturally_labelled_posets(k: usize) -> Vec<Relation> {
    let mut out = Vec::new();
    let mut cur = Relation::empty(k);
    extend(0, k, &mut cur, &mut out);
    out
}

fn extend(j: usize, k: usize, cur: &mut Relation, out: &mut Vec<Relation>) {
    if j == k {
        out.push(cur.clone());
        return;
    }
    // Choose the down-set of j among 0..j; it must be closed downwards.
    for subset in 0u32..(1u32 << j) {
        let closed = (0..j).all(|i| subset >> i & 1 == 0 || (0..i).all(|h| !cur.get(h, i) || subset >> h & 1 == 1));
        if !closed {
            continue;
        }
        for i in 0..j {
            cur.set(i, j, subset >> i & 1 == 1);
        }
        extend(j + 1, k, cur, out);
    }
    for i in 0..j {
        cur.set(i, j, false);
    }
}

/// Counts by structural class for one carrier size.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub struct Census {
    pub n: usize,
    pub lattices: usize,
    pub modular: usize,
    pub distributive: usize,
    pub uniquely_complemented: usize,
    pub multiply_complemented: usize,
    pub non_complemented: usize,
}

pub fn census(lattices: &[FiniteLattice]) -> Census {
    let mut c = Census { n: lattices.first().map_or(0, FiniteLattice::len), ..Census::default() };
    for l in lattices {
        c.lattices += 1;
        let modular = find_n5(l).is_none();
        if modular {
            c.modular += 1;
            if find_m3(l).is_none() {
                c.distributive += 1;
            }
        }
        if l.is_empty() {
            continue;
        }
        match complementation_class(l) {
            ComplementationClass::UniquelyComplemented => c.uniquely_complemented += 1,
            ComplementationClass::MultiplyComplemented => c.multiply_complemented += 1,
            ComplementationClass::NonComplemented => c.non_complemented += 1,
        }
    }
    c
}
