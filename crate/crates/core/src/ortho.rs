//! Orthocomplemented lattices, Sasaki projections and the commutation relation.

use std::fmt;

use crate::classify::{classify, is_modular};
use crate::error::{OrthoAxiom, OrthoError};
use crate::lattice::FiniteLattice;
use crate::laws::{check1, check2, LawResult};
use crate::negation::{commutes, orthogonal, relations, Relations};

/// A bounded lattice together with a validated orthocomplement.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrthoLattice {
    lattice: FiniteLattice,
    perp: Vec<usize>,
}

fn err(l: &FiniteLattice, axiom: OrthoAxiom, x: usize, y: usize) -> OrthoError {
    OrthoError { axiom, witness: (l.label(x).to_string(), l.label(y).to_string()) }
}

/// First orthocomplement axiom violated by `perp`, if any.
pub fn check_orthocomplement(l: &FiniteLattice, perp: &[usize]) -> Result<(), OrthoError> {
    if l.is_empty() {
        return Err(OrthoError { axiom: OrthoAxiom::Bounded, witness: (String::new(), String::new()) });
    }
    if perp.len() != l.len() || perp.iter().any(|&p| p >= l.len()) {
        let at = perp.len().min(l.len() - 1);
        return Err(err(l, OrthoAxiom::Total, at, at));
    }
    if let Some(x) = l.elements().find(|&x| perp[perp[x]] != x) {
        return Err(err(l, OrthoAxiom::Involution, x, x));
    }
    if let Some(x) = l.elements().find(|&x| l.meet(x, perp[x]) != l.bottom()) {
        return Err(err(l, OrthoAxiom::NonContradiction, x, x));
    }
    for x in l.elements() {
        for y in l.elements() {
            if l.leq(x, y) && !l.leq(perp[y], perp[x]) {
                return Err(err(l, OrthoAxiom::Antitone, x, y));
            }
        }
    }
    Ok(())
}

impl OrthoLattice {
    /// Validates `perp` (indexed by element) and checks the derived boundary, De Morgan and
    /// excluded-middle laws.
    pub fn new(lattice: FiniteLattice, perp: Vec<usize>) -> Result<Self, OrthoError> {
        check_orthocomplement(&lattice, &perp)?;
        let ol = OrthoLattice { lattice, perp };
        if let Err(v) = ol.derived_laws() {
            panic!("orthocomplement passed validation but violates {}", v.law);
        }
        Ok(ol)
    }

    /// Builds the map from label pairs; each pair is applied in both directions.
    pub fn from_pairs<S: AsRef<str>>(lattice: FiniteLattice, pairs: &[(S, S)]) -> Result<Self, OrthoError> {
        let mut perp = vec![usize::MAX; lattice.len()];
        for (a, b) in pairs {
            let (Some(i), Some(j)) = (lattice.index_of(a.as_ref()), lattice.index_of(b.as_ref())) else {
                let name = if lattice.index_of(a.as_ref()).is_none() { a } else { b };
                let name = name.as_ref().to_string();
                return Err(OrthoError { axiom: OrthoAxiom::Total, witness: (name.clone(), name) });
            };
            for (u, v) in [(i, j), (j, i)] {
                if perp[u] != usize::MAX && perp[u] != v {
                    return Err(err(&lattice, OrthoAxiom::Involution, u, v));
                }
                perp[u] = v;
            }
        }
        if lattice.is_empty() {
            return Err(OrthoError { axiom: OrthoAxiom::Bounded, witness: (String::new(), String::new()) });
        }
        if let Some(x) = perp.iter().position(|&p| p == usize::MAX) {
            return Err(err(&lattice, OrthoAxiom::Total, x, x));
        }
        OrthoLattice::new(lattice, perp)
    }

    pub fn lattice(&self) -> &FiniteLattice {
        &self.lattice
    }

    pub fn perp_map(&self) -> &[usize] {
        &self.perp
    }

    pub fn perp(&self, x: usize) -> usize {
        self.perp[x]
    }

    pub fn len(&self) -> usize {
        self.lattice.len()
    }

    pub fn is_empty(&self) -> bool {
        self.lattice.is_empty()
    }

    fn j(&self, x: usize, y: usize) -> usize {
        self.lattice.join(x, y)
    }

    fn m(&self, x: usize, y: usize) -> usize {
        self.lattice.meet(x, y)
    }

    /// `φ_x(y) = (y ∨ x⊥) ∧ x`.
    pub fn sasaki(&self, x: usize, y: usize) -> usize {
        self.m(self.j(y, self.perp[x]), x)
    }

    pub fn orthogonal(&self, x: usize, y: usize) -> bool {
        orthogonal(&self.lattice, &self.perp, x, y)
    }

    pub fn commutes(&self, x: usize, y: usize) -> bool {
        commutes(&self.lattice, &self.perp, x, y)
    }

    pub fn relations(&self) -> Relations {
        relations(&self.lattice, &self.perp)
    }

    /// Elements `c` with `x ⊙ c` for every `x`.
    pub fn column_central(&self) -> Vec<usize> {
        let l = &self.lattice;
        l.elements().filter(|&c| l.elements().all(|x| self.commutes(x, c))).collect()
    }

    pub fn is_orthomodular(&self) -> bool {
        let l = &self.lattice;
        l.elements()
            .all(|x| l.elements().all(|y| !l.leq(x, y) || self.j(x, self.m(self.perp[x], y)) == y))
    }

    /// Whether `x ↦ (x ∧ c, x ∧ c⊥)` is an order isomorphism onto `[0, c] × [0, c⊥]`.
    pub fn decomposes_at(&self, c: usize) -> bool {
        let l = &self.lattice;
        let (o, cp) = (l.bottom(), self.perp[c]);
        let left = l.interval(o, c).len();
        let right = l.interval(o, cp).len();
        if left * right != l.len() {
            return false;
        }
        let theta = |x: usize| (self.m(x, c), self.m(x, cp));
        let images: Vec<_> = l.elements().map(theta).collect();
        let mut distinct = images.clone();
        distinct.sort_unstable();
        distinct.dedup();
        if distinct.len() != images.len() {
            return false;
        }
        l.elements().all(|x| {
            l.elements().all(|y| {
                let (a, b) = (images[x], images[y]);
                l.leq(x, y) == (l.leq(a.0, b.0) && l.leq(a.1, b.1))
            })
        })
    }

    pub fn elkan_law(&self) -> bool {
        let p = &self.perp;
        self.lattice.elements().all(|x| {
            self.lattice.elements().all(|y| p[self.m(x, p[y])] == self.j(y, self.m(p[x], p[y])))
        })
    }

    pub fn class(&self) -> OrthoClass {
        let orthomodular = self.is_orthomodular();
        let modular = orthomodular && is_modular(&self.lattice);
        let boolean = classify(&self.lattice).is_boolean;
        assert!(!boolean || modular, "Boolean ortholattice that is not modular");
        assert!(!modular || is_modular(&self.lattice));
        OrthoClass { orthomodular, modular, boolean }
    }

    /// Boundary, De Morgan and excluded-middle consequences of the axioms.
    pub fn derived_laws(&self) -> LawResult {
        let l = &self.lattice;
        let n = l.len();
        let p = &self.perp;
        let (o, i) = (l.bottom(), l.top());
        check1(n, "bounds swap", |x| x != o || (p[o] == i && p[i] == o))?;
        check2(n, "join de morgan", |x, y| p[self.j(x, y)] == self.m(p[x], p[y]))?;
        check2(n, "meet de morgan", |x, y| p[self.m(x, y)] == self.j(p[x], p[y]))?;
        check1(n, "excluded middle", |x| self.j(x, p[x]) == i)
    }

    /// Sasaki projection laws, including `φ_1(y) = y`.
    pub fn sasaki_laws(&self) -> LawResult {
        let l = &self.lattice;
        let n = l.len();
        let (o, i) = (l.bottom(), l.top());
        let boolean = classify(l).is_boolean;
        check2(n, "below gives x", |x, y| !l.leq(x, y) || self.sasaki(x, y) == x)?;
        check2(n, "above is sandwiched", |x, y| {
            !l.leq(y, x) || (l.leq(y, self.sasaki(x, y)) && l.leq(self.sasaki(x, y), x))
        })?;
        check2(n, "boolean fixes", |x, y| !boolean || !l.leq(y, x) || self.sasaki(x, y) == y)?;
        check1(n, "from bottom", |y| self.sasaki(o, y) == o)?;
        check1(n, "onto bottom", |x| self.sasaki(x, o) == o)?;
        check1(n, "from top", |y| self.sasaki(i, y) == y)?;
        check1(n, "onto top", |x| self.sasaki(x, i) == x)?;
        check1(n, "onto complement", |x| self.sasaki(x, self.perp[x]) == o)
    }

    /// Orthogonality and commutation laws valid in every ortholattice.
    pub fn relation_laws(&self) -> LawResult {
        let l = &self.lattice;
        let n = l.len();
        let p = &self.perp;
        let (o, i) = (l.bottom(), l.top());
        check2(n, "order gives excluded middle", |x, y| {
            !l.leq(x, y) || (self.j(p[x], y) == i && self.m(x, p[y]) == o)
        })?;
        check2(n, "orthogonality symmetric", |x, y| self.orthogonal(x, y) == self.orthogonal(y, x))?;
        check2(n, "orthogonal elements", |x, y| {
            !self.orthogonal(x, y) || (self.m(x, y) == o && self.j(p[x], p[y]) == i)
        })?;
        check1(n, "commutes with bounds", |x| {
            self.commutes(x, o) && self.commutes(o, x) && self.commutes(x, i) && self.commutes(i, x)
        })?;
        check1(n, "commutes with itself", |x| self.commutes(x, x))?;
        check2(n, "commutes with complement", |x, y| self.commutes(x, y) == self.commutes(x, p[y]))?;
        check2(n, "order commutes", |x, y| !l.leq(x, y) || self.commutes(x, y))?;
        check2(n, "orthogonal commutes", |x, y| !self.orthogonal(x, y) || self.commutes(x, y))?;
        let rel = self.relations();
        check1(n, "bounds central", |x| (x != o && x != i) || rel.center.contains(&x))
    }

    /// Five global conditions that are equivalent in every ortholattice: symmetry of `⊙`, the
    /// orthomodular identity, and three rearranged identities.
    pub fn symmetry_forms(&self) -> [bool; 5] {
        let l = &self.lattice;
        let p = &self.perp;
        let all = |f: &dyn Fn(usize, usize) -> bool| l.elements().all(|x| l.elements().all(|y| f(x, y)));
        [
            all(&|x, y| self.commutes(x, y) == self.commutes(y, x)),
            self.is_orthomodular(),
            all(&|x, y| !l.leq(x, y) || x == self.m(y, self.j(x, p[y]))),
            all(&|x, y| {
                let c = self.m(x, y);
                y == self.j(c, self.m(y, p[c]))
            }),
            all(&|x, y| {
                let d = self.j(x, y);
                x == self.m(d, self.j(x, p[d]))
            }),
        ]
    }

    /// In an orthomodular lattice, `x ⊙ y` iff both Sasaki projections equal `x ∧ y`.
    pub fn sasaki_commutation(&self) -> LawResult {
        check2(self.len(), "sasaki commutation", |x, y| {
            let mxy = self.m(x, y);
            self.commutes(x, y) == (self.sasaki(x, y) == mxy && self.sasaki(y, x) == mxy)
        })
    }

    pub fn render(&self) -> String {
        let l = &self.lattice;
        let mut s = String::new();
        for x in l.elements() {
            s.push_str(&format!("{}' = {}\n", l.label(x), l.label(self.perp[x])));
        }
        s.push_str(&format!("class: {}\n", self.class()));
        s
    }
}

/// Position in the chain Boolean ⟹ modular ⟹ orthomodular ⟹ orthocomplemented.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct OrthoClass {
    pub orthomodular: bool,
    pub modular: bool,
    pub boolean: bool,
}

impl OrthoClass {
    pub fn as_str(&self) -> &'static str {
        if self.boolean {
            "boolean"
        } else if self.modular {
            "modular-orthocomplemented"
        } else if self.orthomodular {
            "orthomodular"
        } else {
            "orthocomplemented"
        }
    }
}

impl fmt::Display for OrthoClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Every valid orthocomplement of `l`, as element-indexed maps in lexicographic order.
/// Validates `perp` on `l` and returns the combined structure; same as [`OrthoLattice::new`].
pub fn attach_ortho(l: FiniteLattice, perp: Vec<usize>) -> Result<OrthoLattice, OrthoError> {
    OrthoLattice::new(l, perp)
}

pub fn find_orthocomplementations(l: &FiniteLattice) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    if l.is_empty() {
        return out;
    }
    let n = l.len();
    let complements: Vec<Vec<usize>> = l.elements().map(|x| l.complements_of(x)).collect();
    let mut perp = vec![usize::MAX; n];
    search(l, &complements, 0, &mut perp, &mut out);
    out.sort();
    out
}

fn search(l: &FiniteLattice, comps: &[Vec<usize>], x: usize, perp: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
    let n = l.len();
    if x == n {
        if check_orthocomplement(l, perp).is_ok() {
            out.push(perp.clone());
        }
        return;
    }
    if perp[x] != usize::MAX {
        search(l, comps, x + 1, perp, out);
        return;
    }
    for &y in &comps[x] {
        if perp[y] != usize::MAX {
            continue;
        }
        perp[x] = y;
        perp[y] = x;
        let consistent = (0..n).filter(|&z| perp[z] != usize::MAX).all(|z| {
            [x, y].iter().all(|&w| {
                (!l.leq(z, w) || l.leq(perp[w], perp[z])) && (!l.leq(w, z) || l.leq(perp[z], perp[w]))
            })
        });
        if consistent {
            search(l, comps, x + 1, perp, out);
        }
        perp[x] = usize::MAX;
        perp[y] = usize::MAX;
    }
}
