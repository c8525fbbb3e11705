//! Negation maps on bounded lattices and the relations they induce.

use std::collections::BTreeSet;
use std::fmt;

use crate::lattice::FiniteLattice;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum NegationClass {
    Subminimal,
    Minimal,
    Intuitionistic,
    Fuzzy,
    DeMorgan,
    Kleene,
    Ortho,
    Orthomodular,
}

impl NegationClass {
    pub const ALL: [NegationClass; 8] = [
        NegationClass::Subminimal,
        NegationClass::Minimal,
        NegationClass::Intuitionistic,
        NegationClass::Fuzzy,
        NegationClass::DeMorgan,
        NegationClass::Kleene,
        NegationClass::Ortho,
        NegationClass::Orthomodular,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            NegationClass::Subminimal => "subminimal",
            NegationClass::Minimal => "minimal",
            NegationClass::Intuitionistic => "intuitionistic",
            NegationClass::Fuzzy => "fuzzy",
            NegationClass::DeMorgan => "de-morgan",
            NegationClass::Kleene => "kleene",
            NegationClass::Ortho => "ortho",
            NegationClass::Orthomodular => "orthomodular",
        }
    }
}

impl fmt::Display for NegationClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Individual axioms, evaluated once per map.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub struct NegationAxioms {
    pub antitone: bool,
    pub weak_double_negation: bool,
    pub non_contradiction: bool,
    pub boundary_top: bool,
    pub involution: bool,
    pub kleene: bool,
    pub orthomodular_identity: bool,
}

impl NegationAxioms {
    pub fn evaluate(l: &FiniteLattice, neg: &[usize]) -> NegationAxioms {
        assert_eq!(neg.len(), l.len(), "negation map must be total");
        let els = || l.elements();
        let (o, i) = (l.bottom(), l.top());
        NegationAxioms {
            antitone: els().all(|x| els().all(|y| !l.leq(x, y) || l.leq(neg[y], neg[x]))),
            weak_double_negation: els().all(|x| l.leq(x, neg[neg[x]])),
            non_contradiction: els().all(|x| l.meet(x, neg[x]) == o),
            boundary_top: neg[i] == o,
            involution: els().all(|x| neg[neg[x]] == x),
            kleene: els().all(|x| els().all(|y| l.leq(l.meet(x, neg[x]), l.join(y, neg[y])))),
            orthomodular_identity: els().all(|x| {
                els().all(|y| !l.leq(x, y) || l.join(x, l.meet(neg[x], y)) == y)
            }),
        }
    }

    pub fn classes(&self) -> BTreeSet<NegationClass> {
        use NegationClass::*;
        let mut out = BTreeSet::new();
        let minimal = self.antitone && self.weak_double_negation;
        let de_morgan = minimal && self.involution;
        let flags = [
            (Subminimal, self.antitone),
            (Minimal, minimal),
            (Intuitionistic, minimal && self.non_contradiction),
            (Fuzzy, minimal && self.boundary_top),
            (DeMorgan, de_morgan),
            (Kleene, de_morgan && self.kleene),
            (Ortho, de_morgan && self.non_contradiction),
            (Orthomodular, de_morgan && self.non_contradiction && self.orthomodular_identity),
        ];
        for (class, holds) in flags {
            if holds {
                out.insert(class);
            }
        }
        out
    }
}

/// A negation map with the full set of classes it satisfies.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NegationMap {
    pub lattice: FiniteLattice,
    pub neg: Vec<usize>,
    pub axioms: NegationAxioms,
    pub classes: BTreeSet<NegationClass>,
}

impl NegationMap {
    pub fn has(&self, class: NegationClass) -> bool {
        self.classes.contains(&class)
    }

    pub fn relations(&self) -> Relations {
        relations(&self.lattice, &self.neg)
    }

    pub fn logic_kinds(&self) -> Vec<LogicKind> {
        logic_kinds(self)
    }

    pub fn render(&self) -> String {
        let names: Vec<&str> = self.classes.iter().map(|c| c.as_str()).collect();
        let mut s = format!("classes: {}\n", if names.is_empty() { "-".to_string() } else { names.join(" ") });
        let logics: Vec<&str> = self.logic_kinds().iter().map(|k| k.as_str()).collect();
        s.push_str(&format!("logics: {}\n", if logics.is_empty() { "-".to_string() } else { logics.join(" ") }));
        s
    }
}

/// Classifies `neg` and checks the consequences that each satisfied class guarantees.
///
/// # Panics
/// When a guaranteed consequence fails, which would indicate an evaluation defect.
pub fn classify_negation(l: &FiniteLattice, neg: &[usize]) -> NegationMap {
    let axioms = NegationAxioms::evaluate(l, neg);
    let classes = axioms.classes();
    let broken = consequence_violations(l, neg, &classes);
    assert!(broken.is_empty(), "negation consequences fail: {broken:?}");
    NegationMap { lattice: l.clone(), neg: neg.to_vec(), axioms, classes }
}

/// Consequences that the satisfied classes imply but that fail for `neg`.
pub fn consequence_violations(l: &FiniteLattice, neg: &[usize], classes: &BTreeSet<NegationClass>) -> Vec<&'static str> {
    use NegationClass::*;
    let (o, i) = (l.bottom(), l.top());
    let els = || l.elements();
    let pairs = |f: &dyn Fn(usize, usize) -> bool| els().all(|x| els().all(|y| f(x, y)));
    let mut out = Vec::new();
    let has = |c| classes.contains(&c);
    if has(Fuzzy) && neg[o] != i {
        out.push("fuzzy: not 0 = 1");
    }
    if has(Intuitionistic) && !(neg[i] == o && neg[o] == i && has(Fuzzy)) {
        out.push("intuitionistic: boundary conditions");
    }
    if has(Minimal) {
        if !pairs(&|x, y| l.leq(l.join(neg[x], neg[y]), neg[l.meet(x, y)])) {
            out.push("minimal: conjunctive de morgan inequality");
        }
        if !pairs(&|x, y| l.leq(neg[l.join(x, y)], l.meet(neg[x], neg[y]))) {
            out.push("minimal: disjunctive de morgan inequality");
        }
    }
    let de_morgan_laws = || {
        pairs(&|x, y| neg[l.join(x, y)] == l.meet(neg[x], neg[y]) && neg[l.meet(x, y)] == l.join(neg[x], neg[y]))
    };
    if has(DeMorgan) && !de_morgan_laws() {
        out.push("de morgan: de morgan laws");
    }
    if has(Ortho) {
        if neg[o] != i || neg[i] != o {
            out.push("ortho: boundary conditions");
        }
        if !de_morgan_laws() {
            out.push("ortho: de morgan laws");
        }
        if !els().all(|x| l.join(x, neg[x]) == i) {
            out.push("ortho: excluded middle");
        }
        if !has(Kleene) {
            out.push("ortho: kleene condition");
        }
    }
    out
}

/// Logic kinds determined by lattice class and negation class alone.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum LogicKind {
    Logic,
    Fuzzy,
    Intuitionistic,
    DeMorgan,
    Kleene,
    Ortho,
    Boolean,
}

impl LogicKind {
    pub fn as_str(self) -> &'static str {
        match self {
            LogicKind::Logic => "logic",
            LogicKind::Fuzzy => "fuzzy",
            LogicKind::Intuitionistic => "intuitionistic",
            LogicKind::DeMorgan => "de-morgan",
            LogicKind::Kleene => "kleene",
            LogicKind::Ortho => "ortho",
            LogicKind::Boolean => "boolean",
        }
    }
}

pub fn logic_kinds(m: &NegationMap) -> Vec<LogicKind> {
    use NegationClass as N;
    let mut out = Vec::new();
    let pairs = [
        (LogicKind::Logic, N::Minimal),
        (LogicKind::Fuzzy, N::Fuzzy),
        (LogicKind::Intuitionistic, N::Intuitionistic),
        (LogicKind::DeMorgan, N::DeMorgan),
        (LogicKind::Kleene, N::Kleene),
        (LogicKind::Ortho, N::Ortho),
    ];
    for (kind, class) in pairs {
        if m.has(class) {
            out.push(kind);
        }
    }
    if m.has(N::Ortho) && crate::classify::classify(&m.lattice).is_boolean {
        out.push(LogicKind::Boolean);
    }
    out
}

/// Orthogonality, commutation and center of a lattice with a negation map.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Relations {
    /// Ordered pairs `(x, y)` with `x ≤ ¬y`.
    pub orthogonal: Vec<(usize, usize)>,
    /// Ordered pairs `(x, y)` with `x = (x ∧ y) ∨ (x ∧ ¬y)`.
    pub commutes: Vec<(usize, usize)>,
    /// Elements commuting with every element.
    pub center: Vec<usize>,
}

impl Relations {
    /// Orthogonal pairs with `x ≤ y` in declared order, counting `(x, x)` once.
    pub fn orthogonal_unordered(&self) -> Vec<(usize, usize)> {
        self.orthogonal.iter().copied().filter(|&(x, y)| x <= y).collect()
    }

    pub fn is_orthogonal(&self, x: usize, y: usize) -> bool {
        self.orthogonal.contains(&(x, y))
    }

    pub fn is_commuting(&self, x: usize, y: usize) -> bool {
        self.commutes.contains(&(x, y))
    }
}

pub fn orthogonal(l: &FiniteLattice, neg: &[usize], x: usize, y: usize) -> bool {
    l.leq(x, neg[y])
}

pub fn commutes(l: &FiniteLattice, neg: &[usize], x: usize, y: usize) -> bool {
    x == l.join(l.meet(x, y), l.meet(x, neg[y]))
}

pub fn relations(l: &FiniteLattice, neg: &[usize]) -> Relations {
    let mut orth = Vec::new();
    let mut comm = Vec::new();
    for x in l.elements() {
        for y in l.elements() {
            if orthogonal(l, neg, x, y) {
                orth.push((x, y));
            }
            if commutes(l, neg, x, y) {
                comm.push((x, y));
            }
        }
    }
    let center = l
        .elements()
        .filter(|&x| l.elements().all(|y| commutes(l, neg, x, y)))
        .collect();
    Relations { orthogonal: orth, commutes: comm, center }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;
    use NegationClass::*;

    fn o6_neg() -> (FiniteLattice, Vec<usize>) {
        let l = catalog::o6();
        let mut neg = vec![0; 6];
        for (a, b) in catalog::O6_ORTHO {
            neg[l.idx(a)] = l.idx(b);
            neg[l.idx(b)] = l.idx(a);
        }
        (l, neg)
    }

    #[test]
    fn o6_negation_classes() {
        let (l, neg) = o6_neg();
        let m = classify_negation(&l, &neg);
        let expected: BTreeSet<_> = [Subminimal, Minimal, Intuitionistic, Fuzzy, DeMorgan, Kleene, Ortho].into();
        assert_eq!(m.classes, expected);
    }

    #[test]
    fn three_chain_kleene() {
        let l = catalog::chain3();
        let m = classify_negation(&l, &[2, 1, 0]);
        let expected: BTreeSet<_> = [Subminimal, Minimal, Fuzzy, DeMorgan, Kleene].into();
        assert_eq!(m.classes, expected);
        assert!(!m.has(Intuitionistic));
    }

    #[test]
    fn constant_top_map() {
        let l = catalog::chain3();
        let m = classify_negation(&l, &[2, 2, 2]);
        let expected: BTreeSet<_> = [Subminimal, Minimal].into();
        assert_eq!(m.classes, expected);
        assert_eq!(m.logic_kinds(), vec![LogicKind::Logic]);
    }

    #[test]
    fn o6_relations() {
        let (l, neg) = o6_neg();
        let r = relations(&l, &neg);
        assert_eq!(r.orthogonal_unordered().len(), 9);
        let center: Vec<&str> = r.center.iter().map(|&c| l.label(c)).collect();
        assert_eq!(center, ["0", "p", "q", "1"]);
    }

    #[test]
    fn identity_map_is_not_a_negation() {
        let l = catalog::chain3();
        let m = classify_negation(&l, &[0, 1, 2]);
        assert!(m.classes.is_empty());
    }
}
