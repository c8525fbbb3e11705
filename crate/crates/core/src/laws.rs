//! Executable lattice identities and inequalities.
//!
//! Each check returns the first violating tuple (in declared element order) or `Ok(())`.

use crate::classify::{complementation_class, is_distributive, is_modular, is_modular_pair, ComplementationClass};
use crate::lattice::FiniteLattice;
use crate::poset::FinitePoset;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LawViolation {
    pub law: &'static str,
    pub witness: Vec<usize>,
}

pub type LawResult = Result<(), LawViolation>;

fn fail(law: &'static str, witness: &[usize]) -> LawResult {
    Err(LawViolation { law, witness: witness.to_vec() })
}

pub(crate) fn check1(n: usize, law: &'static str, f: impl Fn(usize) -> bool) -> LawResult {
    match (0..n).find(|&x| !f(x)) {
        Some(x) => fail(law, &[x]),
        None => Ok(()),
    }
}

pub(crate) fn check2(n: usize, law: &'static str, f: impl Fn(usize, usize) -> bool) -> LawResult {
    for x in 0..n {
        for y in 0..n {
            if !f(x, y) {
                return fail(law, &[x, y]);
            }
        }
    }
    Ok(())
}

pub(crate) fn check3(n: usize, law: &'static str, f: impl Fn(usize, usize, usize) -> bool) -> LawResult {
    for x in 0..n {
        for y in 0..n {
            for z in 0..n {
                if !f(x, y, z) {
                    return fail(law, &[x, y, z]);
                }
            }
        }
    }
    Ok(())
}

/// Two binary operation tables on `0..n`, not assumed to come from an order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Tables {
    pub n: usize,
    pub join: Vec<usize>,
    pub meet: Vec<usize>,
}

impl Tables {
    pub fn j(&self, x: usize, y: usize) -> usize {
        self.join[x * self.n + y]
    }

    pub fn m(&self, x: usize, y: usize) -> usize {
        self.meet[x * self.n + y]
    }

    /// The order `x ≤ y ⟺ x ∧ y = x`, when the meet table induces one.
    pub fn induced_order(&self) -> Option<FinitePoset> {
        let labels = (0..self.n).map(|i| i.to_string()).collect();
        FinitePoset::from_order_fn(labels, |x, y| self.m(x, y) == x).ok()
    }
}

impl From<&FiniteLattice> for Tables {
    fn from(l: &FiniteLattice) -> Self {
        let n = l.len();
        let mut join = Vec::with_capacity(n * n);
        let mut meet = Vec::with_capacity(n * n);
        for x in 0..n {
            for y in 0..n {
                join.push(l.join(x, y));
                meet.push(l.meet(x, y));
            }
        }
        Tables { n, join, meet }
    }
}

/// Idempotent, commutative, associative and absorptive laws for both operations.
pub fn lattice_axioms(t: &Tables) -> LawResult {
    let n = t.n;
    check1(n, "join idempotent", |x| t.j(x, x) == x)?;
    check1(n, "meet idempotent", |x| t.m(x, x) == x)?;
    reduced_axioms(t)
}

/// Commutative, associative and absorptive laws only.
pub fn reduced_axioms(t: &Tables) -> LawResult {
    let n = t.n;
    check2(n, "join commutative", |x, y| t.j(x, y) == t.j(y, x))?;
    check2(n, "meet commutative", |x, y| t.m(x, y) == t.m(y, x))?;
    check3(n, "join associative", |x, y, z| t.j(t.j(x, y), z) == t.j(x, t.j(y, z)))?;
    check3(n, "meet associative", |x, y, z| t.m(t.m(x, y), z) == t.m(x, t.m(y, z)))?;
    check2(n, "join absorptive", |x, y| t.j(x, t.m(x, y)) == x)?;
    check2(n, "meet absorptive", |x, y| t.m(x, t.j(x, y)) == x)
}

/// The two identities characterising modular lattices among arbitrary algebras.
pub fn modular_identities(t: &Tables) -> LawResult {
    let n = t.n;
    check3(n, "modular identity 1", |x, y, z| {
        t.j(t.m(x, y), t.m(x, z)) == t.m(t.j(t.m(z, x), y), x)
    })?;
    check3(n, "modular identity 2", |x, y, z| t.m(t.j(x, t.j(y, z)), z) == z)
}

/// `x ≤ y ⟺ x ∧ y = x ⟺ x ∨ y = y`.
pub fn order_agreement(l: &FiniteLattice) -> LawResult {
    check2(l.len(), "order agreement", |x, y| {
        l.leq(x, y) == (l.meet(x, y) == x) && l.leq(x, y) == (l.join(x, y) == y)
    })
}

/// `a ≤ b, x ≤ y ⟹ a ∧ x ≤ b ∧ y, a ∨ x ≤ b ∨ y`.
pub fn monotony(l: &FiniteLattice) -> LawResult {
    let n = l.len();
    for a in 0..n {
        for b in (0..n).filter(|&b| l.leq(a, b)) {
            for x in 0..n {
                for y in (0..n).filter(|&y| l.leq(x, y)) {
                    if !l.leq(l.meet(a, x), l.meet(b, y)) || !l.leq(l.join(a, x), l.join(b, y)) {
                        return fail("monotony", &[a, b, x, y]);
                    }
                }
            }
        }
    }
    Ok(())
}

/// `A ⊆ B ⟹ ⋁A ≤ ⋁B` and `⋀A ≥ ⋀B`, over all nested subset pairs.
///
/// Witnesses are `[mask(A), mask(B)]`. Supports up to 16 elements.
pub fn subset_monotony(l: &FiniteLattice) -> LawResult {
    let n = l.len();
    assert!(n <= 16, "subset enumeration is limited to 16 elements");
    let members = |m: u32| (0..n).filter(move |i| m >> i & 1 == 1);
    for b in 0u32..(1 << n) {
        let (jb, mb) = (l.join_all(members(b)), l.meet_all(members(b)));
        // Iterate over submasks of b.
        let mut a = b;
        loop {
            let (ja, ma) = (l.join_all(members(a)), l.meet_all(members(a)));
            if !l.leq(ja, jb) || !l.leq(mb, ma) {
                return fail("subset monotony", &[a as usize, b as usize]);
            }
            if a == 0 {
                break;
            }
            a = (a - 1) & b;
        }
    }
    Ok(())
}

/// Maxmini below minimax for every 2×2 array `[[x11, x12], [x21, x22]]`.
pub fn minimax_2x2(l: &FiniteLattice) -> LawResult {
    let n = l.len();
    for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                for d in 0..n {
                    let maxmini = l.join(l.meet(a, b), l.meet(c, d));
                    let minimax = l.meet(l.join(a, c), l.join(b, d));
                    if !l.leq(maxmini, minimax) {
                        return fail("minimax", &[a, b, c, d]);
                    }
                }
            }
        }
    }
    Ok(())
}

/// Maxmini below minimax for an arbitrary `m × k` array given row-major.
pub fn minimax_holds(l: &FiniteLattice, rows: &[Vec<usize>]) -> bool {
    let maxmini = l.join_all(rows.iter().map(|r| l.meet_all(r.iter().copied())));
    let cols = rows.first().map_or(0, Vec::len);
    let minimax = l.meet_all((0..cols).map(|j| l.join_all(rows.iter().map(|r| r[j]))));
    l.leq(maxmini, minimax)
}

/// Join super-distributive, meet sub-distributive, and median inequalities.
pub fn distributive_inequalities(l: &FiniteLattice) -> LawResult {
    check3(l.len(), "join super-distributive", |x, y, z| {
        l.leq(l.join(l.meet(x, y), l.meet(x, z)), l.meet(x, l.join(y, z)))
    })?;
    check3(l.len(), "meet sub-distributive", |x, y, z| {
        l.leq(l.join(x, l.meet(y, z)), l.meet(l.join(x, y), l.join(x, z)))
    })?;
    check3(l.len(), "median inequality", |x, y, z| {
        l.leq(median_low(l, x, y, z), median_high(l, x, y, z))
    })
}

fn median_low(l: &FiniteLattice, x: usize, y: usize, z: usize) -> usize {
    l.join(l.join(l.meet(x, y), l.meet(x, z)), l.meet(y, z))
}

fn median_high(l: &FiniteLattice, x: usize, y: usize, z: usize) -> usize {
    l.meet(l.meet(l.join(x, y), l.join(x, z)), l.join(y, z))
}

/// `x ≤ y ⟹ x ∨ (y ∧ z) ≤ y ∧ (x ∨ z)`.
pub fn modular_inequality(l: &FiniteLattice) -> LawResult {
    check3(l.len(), "modular inequality", |x, y, z| {
        !l.leq(x, y) || l.leq(l.join(x, l.meet(y, z)), l.meet(y, l.join(x, z)))
    })
}

/// `x ∨ 1 = 1`, `x ∧ 0 = 0`, `x ∨ 0 = x`, `x ∧ 1 = x`.
pub fn bound_identities(l: &FiniteLattice) -> LawResult {
    if l.is_empty() {
        return Ok(());
    }
    let (o, i) = (l.bottom(), l.top());
    check1(l.len(), "bound identities", |x| {
        l.join(x, i) == i && l.meet(x, o) == o && l.join(x, o) == x && l.meet(x, i) == x
    })
}

/// Modularity by the pair relation and the three equational forms, in that order.
pub fn modularity_forms(l: &FiniteLattice) -> [bool; 4] {
    let n = l.len();
    let all3 = |f: &dyn Fn(usize, usize, usize) -> bool| {
        (0..n).all(|x| (0..n).all(|y| (0..n).all(|z| f(x, y, z))))
    };
    [
        (0..n).all(|x| (0..n).all(|y| is_modular_pair(l, x, y))),
        all3(&|x, y, z| !l.leq(x, y) || l.join(x, l.meet(z, y)) == l.meet(l.join(x, z), y)),
        all3(&|x, y, z| l.join(x, l.meet(l.join(x, y), z)) == l.meet(l.join(x, y), l.join(x, z))),
        all3(&|x, y, z| l.meet(x, l.join(l.meet(x, y), z)) == l.join(l.meet(x, y), l.meet(x, z))),
    ]
}

/// Distributivity as disjunctive, conjunctive and median identities.
pub fn distributivity_forms(l: &FiniteLattice) -> [bool; 3] {
    let n = l.len();
    let all3 = |f: &dyn Fn(usize, usize, usize) -> bool| {
        (0..n).all(|x| (0..n).all(|y| (0..n).all(|z| f(x, y, z))))
    };
    [
        all3(&|x, y, z| l.meet(x, l.join(y, z)) == l.join(l.meet(x, y), l.meet(x, z))),
        all3(&|x, y, z| l.join(x, l.meet(y, z)) == l.meet(l.join(x, y), l.join(x, z))),
        all3(&|x, y, z| median_low(l, x, y, z) == median_high(l, x, y, z)),
    ]
}

/// `x ∨ a = x ∨ b` and `x ∧ a = x ∧ b` imply `a = b`.
pub fn cancellation(l: &FiniteLattice) -> LawResult {
    check3(l.len(), "cancellation", |x, a, b| {
        !(l.join(x, a) == l.join(x, b) && l.meet(x, a) == l.meet(x, b)) || a == b
    })
}

/// Distributive and complemented implies uniquely complemented.
pub fn unique_complements_if_boolean(l: &FiniteLattice) -> bool {
    let class = complementation_class(l);
    !(is_distributive(l) && class.is_complemented())
        || class == ComplementationClass::UniquelyComplemented
}

/// The complement selection taking the first complement of each element, if complemented.
pub fn first_complements(l: &FiniteLattice) -> Option<Vec<usize>> {
    l.elements().map(|x| l.complements_of(x).first().copied()).collect()
}

/// The ten classic Boolean identity pairs, with `comp` as the complement map.
pub fn classic_boolean_properties(l: &FiniteLattice, comp: &[usize]) -> LawResult {
    if l.is_empty() {
        return Ok(());
    }
    let t = Tables::from(l);
    lattice_axioms(&t)?;
    bound_identities(l)?;
    let n = l.len();
    let (o, i) = (l.bottom(), l.top());
    check3(n, "distributive", |x, y, z| {
        l.join(x, l.meet(y, z)) == l.meet(l.join(x, y), l.join(x, z))
            && l.meet(x, l.join(y, z)) == l.join(l.meet(x, y), l.meet(x, z))
    })?;
    check1(n, "complemented", |x| l.join(x, comp[x]) == i && l.meet(x, comp[x]) == o)?;
    check2(n, "de morgan", |x, y| {
        comp[l.join(x, y)] == l.meet(comp[x], comp[y]) && comp[l.meet(x, y)] == l.join(comp[x], comp[y])
    })?;
    check1(n, "involutory", |x| comp[comp[x]] == x)
}

/// Idempotent, commutative and associative join plus `(x' ∨ y')' ∨ (x' ∨ y)' = x`.
pub fn huntington_fourth_set(l: &FiniteLattice, comp: &[usize]) -> LawResult {
    let n = l.len();
    check1(n, "join idempotent", |x| l.join(x, x) == x)?;
    check2(n, "join commutative", |x, y| l.join(x, y) == l.join(y, x))?;
    check3(n, "join associative", |x, y, z| l.join(l.join(x, y), z) == l.join(x, l.join(y, z)))?;
    check2(n, "huntington axiom", |x, y| {
        l.join(comp[l.join(comp[x], comp[y])], comp[l.join(comp[x], y)]) == x
    })
}

/// Every choice function picking one complement per element.
pub fn complement_selections(l: &FiniteLattice) -> Vec<Vec<usize>> {
    let options: Vec<Vec<usize>> = l.elements().map(|x| l.complements_of(x)).collect();
    if options.iter().any(Vec::is_empty) {
        return Vec::new();
    }
    let mut out = vec![Vec::new()];
    for opts in &options {
        out = out
            .into_iter()
            .flat_map(|prefix| {
                opts.iter().map(move |&c| {
                    let mut next = prefix.clone();
                    next.push(c);
                    next
                })
            })
            .collect();
    }
    out
}

/// Side conditions under which a uniquely complemented lattice must be distributive.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct HuntingtonProperties {
    pub modular: bool,
    pub atomic: bool,
    pub orthocomplementable: bool,
    pub width_within_cap: bool,
    pub de_morgan: bool,
}

impl HuntingtonProperties {
    pub fn any(&self) -> bool {
        self.modular || self.atomic || self.orthocomplementable || self.width_within_cap || self.de_morgan
    }
}

pub fn huntington_properties(l: &FiniteLattice, width_cap: usize) -> HuntingtonProperties {
    let de_morgan = first_complements(l).is_some_and(|c| {
        l.elements().all(|x| {
            l.elements().all(|y| c[l.join(x, y)] == l.meet(c[x], c[y]) && c[l.meet(x, y)] == l.join(c[x], c[y]))
        })
    });
    HuntingtonProperties {
        modular: is_modular(l),
        atomic: crate::classify::is_atomic(l),
        orthocomplementable: !crate::ortho::find_orthocomplementations(l).is_empty(),
        width_within_cap: l.poset().width_and_chains().0 <= width_cap,
        de_morgan,
    }
}
