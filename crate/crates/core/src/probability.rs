//! Probability on lattices with negation, where additivity applies only to disjoint pairs whose
//! join distributes over every element.

use std::fmt;

use thiserror::Error;

use crate::classify::{classify, distributive_triple};
use crate::lattice::FiniteLattice;
use crate::negation::{classify_negation, NegationClass};
use crate::scalar::Scalar;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ProbabilityAxiom {
    Total,
    MinimalNegation,
    Nondegenerate,
    Normalized,
    Monotone,
    Additive,
}

impl fmt::Display for ProbabilityAxiom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ProbabilityAxiom::Total => "total assignment",
            ProbabilityAxiom::MinimalNegation => "minimal negation",
            ProbabilityAxiom::Nondegenerate => "nondegenerate",
            ProbabilityAxiom::Normalized => "normalized",
            ProbabilityAxiom::Monotone => "monotone",
            ProbabilityAxiom::Additive => "additive",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
#[error("probability axiom `{axiom}` fails at [{}]", witness.join(", "))]
pub struct ProbabilityViolation {
    pub axiom: ProbabilityAxiom,
    pub witness: Vec<String>,
}

/// Whether additivity is required for the pair: `x ∧ y = 0` and `(z, x, y)` distributive for
/// every `z`.
pub fn additivity_gate(l: &FiniteLattice, x: usize, y: usize) -> bool {
    l.meet(x, y) == l.bottom() && l.elements().all(|z| distributive_triple(l, z, x, y))
}

/// A validated assignment.
#[derive(Clone, Debug, PartialEq)]
pub struct ProbabilityAssignment<S> {
    lattice: FiniteLattice,
    neg: Vec<usize>,
    p: Vec<S>,
}

pub fn validate_probability<S: Scalar>(
    l: &FiniteLattice,
    neg: &[usize],
    p: Vec<S>,
) -> Result<ProbabilityAssignment<S>, ProbabilityViolation> {
    let fail = |axiom, w: &[usize]| ProbabilityViolation {
        axiom,
        witness: w.iter().map(|&i| l.label(i).to_string()).collect(),
    };
    if l.is_empty() || p.len() != l.len() || neg.len() != l.len() {
        return Err(ProbabilityViolation { axiom: ProbabilityAxiom::Total, witness: Vec::new() });
    }
    if !classify_negation(l, neg).has(NegationClass::Minimal) {
        return Err(ProbabilityViolation { axiom: ProbabilityAxiom::MinimalNegation, witness: Vec::new() });
    }
    let (o, i) = (l.bottom(), l.top());
    if !p[o].approx_eq(&S::zero()) {
        return Err(fail(ProbabilityAxiom::Nondegenerate, &[o]));
    }
    if !p[i].approx_eq(&S::one()) {
        return Err(fail(ProbabilityAxiom::Normalized, &[i]));
    }
    for x in l.elements() {
        for y in l.elements() {
            if l.leq(x, y) && !p[x].approx_le(&p[y]) {
                return Err(fail(ProbabilityAxiom::Monotone, &[x, y]));
            }
        }
    }
    for x in l.elements() {
        for y in l.elements() {
            if additivity_gate(l, x, y) && !p[l.join(x, y)].approx_eq(&(p[x].clone() + p[y].clone())) {
                return Err(fail(ProbabilityAxiom::Additive, &[x, y]));
            }
        }
    }
    let pa = ProbabilityAssignment { lattice: l.clone(), neg: neg.to_vec(), p };
    pa.assert_consequences();
    Ok(pa)
}

/// `p(x) = (sum of weights of atoms below x) / (sum of all weights)` on an atomic lattice.
///
/// # Panics
/// If every weight is zero or the lattice has no atoms.
pub fn from_atom_weights<S: Scalar>(l: &FiniteLattice, weights: &[S]) -> Vec<S> {
    let atoms = l.atoms();
    assert_eq!(atoms.len(), weights.len(), "one weight per atom");
    let total = weights.iter().cloned().fold(S::zero(), |a, b| a + b);
    assert!(!total.approx_eq(&S::zero()), "weights must not all vanish");
    l.elements()
        .map(|x| {
            let below = atoms
                .iter()
                .zip(weights)
                .filter(|(&a, _)| l.leq(a, x))
                .fold(S::zero(), |acc, (_, w)| acc + w.clone());
            below / total.clone()
        })
        .collect()
}

/// Outcome of one classical definition.
#[derive(Clone, Debug, PartialEq)]
pub struct DefinitionCheck<S> {
    pub name: &'static str,
    pub satisfied: bool,
    /// Elements whose additivity fails.
    pub witness: Vec<usize>,
    /// `p(join)` against the required sum at the witness.
    pub values: Option<(S, S)>,
}

impl<S: Scalar> ProbabilityAssignment<S> {
    pub fn lattice(&self) -> &FiniteLattice {
        &self.lattice
    }

    pub fn p(&self, x: usize) -> &S {
        &self.p[x]
    }

    pub fn values(&self) -> &[S] {
        &self.p
    }

    pub fn negation(&self) -> &[usize] {
        &self.neg
    }

    /// Bounds always; the complement rule and inclusion–exclusion on Boolean bases.
    fn assert_consequences(&self) {
        let l = &self.lattice;
        for x in l.elements() {
            assert!(
                S::zero().approx_le(&self.p[x]) && self.p[x].approx_le(&S::one()),
                "probability outside [0, 1] at {}",
                l.label(x)
            );
        }
        if classify(l).is_boolean {
            for x in l.elements() {
                let complement = S::one() - self.p[self.neg[x]].clone();
                assert!(self.p[x].approx_eq(&complement), "complement rule fails at {}", l.label(x));
                for y in l.elements() {
                    let (j, m) = (l.join(x, y), l.meet(x, y));
                    let sum = self.p[x].clone() + self.p[y].clone();
                    assert!(self.p[j].approx_eq(&(sum.clone() - self.p[m].clone())), "inclusion-exclusion");
                    assert!(self.p[j].approx_le(&sum), "Boole's inequality");
                }
            }
        }
    }

    /// Whether `p(x) = 1 − p(¬x)` holds everywhere; guaranteed only on Boolean bases.
    pub fn complement_rule(&self) -> Option<usize> {
        self.lattice
            .elements()
            .find(|&x| !self.p[x].approx_eq(&(S::one() - self.p[self.neg[x]].clone())))
    }

    fn pairwise(
        &self,
        name: &'static str,
        premise: impl Fn(usize, usize) -> bool,
        subtract_meet: bool,
    ) -> DefinitionCheck<S> {
        let l = &self.lattice;
        for x in l.elements() {
            for y in l.elements() {
                if !premise(x, y) {
                    continue;
                }
                let lhs = self.p[l.join(x, y)].clone();
                let mut rhs = self.p[x].clone() + self.p[y].clone();
                if subtract_meet {
                    rhs = rhs - self.p[l.meet(x, y)].clone();
                }
                if !lhs.approx_eq(&rhs) {
                    return DefinitionCheck { name, satisfied: false, witness: vec![x, y], values: Some((lhs, rhs)) };
                }
            }
        }
        DefinitionCheck { name, satisfied: true, witness: Vec::new(), values: None }
    }

    fn nonnegative(&self) -> Option<usize> {
        self.lattice.elements().find(|&x| !S::zero().approx_le(&self.p[x]))
    }

    /// Finite additivity over every family of pairwise disjoint non-zero elements.
    fn measure_theoretic(&self) -> DefinitionCheck<S> {
        let name = "measure-theoretic";
        if let Some(x) = self.nonnegative() {
            return DefinitionCheck { name, satisfied: false, witness: vec![x], values: None };
        }
        let l = &self.lattice;
        let nonzero: Vec<usize> = l.elements().filter(|&x| x != l.bottom()).collect();
        let mut family = Vec::new();
        match self.disjoint_families(&nonzero, 0, &mut family) {
            Some((w, lhs, rhs)) => DefinitionCheck { name, satisfied: false, witness: w, values: Some((lhs, rhs)) },
            None => DefinitionCheck { name, satisfied: true, witness: Vec::new(), values: None },
        }
    }

    fn disjoint_families(&self, pool: &[usize], start: usize, family: &mut Vec<usize>) -> Option<(Vec<usize>, S, S)> {
        let l = &self.lattice;
        if family.len() >= 2 {
            let join = l.join_all(family.iter().copied());
            let sum = family.iter().fold(S::zero(), |a, &x| a + self.p[x].clone());
            if !self.p[join].approx_eq(&sum) {
                return Some((family.clone(), self.p[join].clone(), sum));
            }
        }
        for k in start..pool.len() {
            let x = pool[k];
            if family.iter().all(|&f| l.meet(f, x) == l.bottom()) {
                family.push(x);
                if let Some(found) = self.disjoint_families(pool, k + 1, family) {
                    return Some(found);
                }
                family.pop();
            }
        }
        None
    }

    /// The four classical definitions plus the gated one, each with a witness on failure.
    pub fn report(&self) -> Vec<DefinitionCheck<S>> {
        let l = &self.lattice;
        let o = l.bottom();
        let mut out = vec![self.measure_theoretic()];
        let mut traditional = self.pairwise("traditional", |x, y| l.meet(x, y) == o, false);
        if let Some(x) = self.nonnegative() {
            traditional = DefinitionCheck { name: "traditional", satisfied: false, witness: vec![x], values: None };
        }
        out.push(traditional);
        out.push(self.pairwise("generalized", |_, _| true, true));
        out.push(self.pairwise("quantum", |x, y| l.leq(x, self.neg[y]), false));
        out.push(self.pairwise("gated", |x, y| additivity_gate(l, x, y), false));
        out
    }

    pub fn render_report(&self) -> String {
        let l = &self.lattice;
        let mut s = String::new();
        for c in self.report() {
            if c.satisfied {
                s.push_str(&format!("{}: satisfied\n", c.name));
            } else {
                let names: Vec<&str> = c.witness.iter().map(|&i| l.label(i)).collect();
                let detail = match &c.values {
                    Some((lhs, rhs)) => format!(" ({lhs} != {rhs})"),
                    None => String::new(),
                };
                s.push_str(&format!("{}: violated at {}{}\n", c.name, names.join(","), detail));
            }
        }
        s
    }
}
