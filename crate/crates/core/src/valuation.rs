//! Valuations, the metric they induce, and metric balls.

use crate::error::ValuationError;
use crate::lattice::FiniteLattice;
use crate::scalar::Scalar;

/// Outcome of checking a candidate valuation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ValuationCheck {
    pub is_valuation: bool,
    pub is_isotone: bool,
    /// First pair breaking `v(x∨y) + v(x∧y) = v(x) + v(y)`.
    pub valuation_witness: Option<(usize, usize)>,
    /// First pair with `x ≤ y` and `v(x) > v(y)`.
    pub isotone_witness: Option<(usize, usize)>,
}

pub fn check_valuation<S: Scalar>(l: &FiniteLattice, v: &[S]) -> Result<ValuationCheck, ValuationError> {
    if v.len() != l.len() {
        return Err(ValuationError::LengthMismatch { expected: l.len(), got: v.len() });
    }
    let mut valuation_witness = None;
    let mut isotone_witness = None;
    for x in l.elements() {
        for y in l.elements() {
            if valuation_witness.is_none() {
                let lhs = v[l.join(x, y)].clone() + v[l.meet(x, y)].clone();
                let rhs = v[x].clone() + v[y].clone();
                if !lhs.approx_eq(&rhs) {
                    valuation_witness = Some((x, y));
                }
            }
            if isotone_witness.is_none() && l.leq(x, y) && !v[x].approx_le(&v[y]) {
                isotone_witness = Some((x, y));
            }
        }
    }
    Ok(ValuationCheck {
        is_valuation: valuation_witness.is_none(),
        is_isotone: isotone_witness.is_none(),
        valuation_witness,
        isotone_witness,
    })
}

/// `h(x)`: length of the longest chain from the bottom to `x`.
pub fn height_valuation<S: Scalar>(l: &FiniteLattice) -> Vec<S> {
    l.heights().into_iter().map(S::from_usize).collect()
}

/// `d(x, y) = v(x ∨ y) − v(x ∧ y)` for an isotone valuation `v`.
#[derive(Clone, Debug, PartialEq)]
pub struct LatticeMetric<S> {
    lattice: FiniteLattice,
    values: Vec<S>,
    table: Vec<S>,
}

/// Which metric axiom failed, with the offending elements.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum MetricViolation {
    Negative(usize, usize),
    Degenerate(usize, usize),
    Asymmetric(usize, usize),
    Triangle(usize, usize, usize),
}

impl<S: Scalar> LatticeMetric<S> {
    /// Validates `v` and tabulates the metric.
    ///
    /// # Panics
    /// If the resulting table breaks a metric axiom, which cannot happen for an isotone valuation.
    pub fn from_valuation(l: &FiniteLattice, v: Vec<S>) -> Result<Self, ValuationError> {
        let check = check_valuation(l, &v)?;
        let name = |(x, y): (usize, usize)| (l.label(x).to_string(), l.label(y).to_string());
        if let Some(w) = check.valuation_witness {
            let (x, y) = name(w);
            return Err(ValuationError::NotAValuation { x, y });
        }
        if let Some(w) = check.isotone_witness {
            let (x, y) = name(w);
            return Err(ValuationError::NotIsotone { x, y });
        }
        let n = l.len();
        let mut table = Vec::with_capacity(n * n);
        for x in 0..n {
            for y in 0..n {
                table.push(v[l.join(x, y)].clone() - v[l.meet(x, y)].clone());
            }
        }
        let m = LatticeMetric { lattice: l.clone(), values: v, table };
        if let Some(bad) = m.axiom_violation() {
            panic!("isotone valuation produced a non-metric: {bad:?}");
        }
        Ok(m)
    }

    pub fn height(l: &FiniteLattice) -> Result<Self, ValuationError> {
        Self::from_valuation(l, height_valuation(l))
    }

    pub fn lattice(&self) -> &FiniteLattice {
        &self.lattice
    }

    pub fn valuation(&self) -> &[S] {
        &self.values
    }

    pub fn d(&self, x: usize, y: usize) -> &S {
        &self.table[x * self.lattice.len() + y]
    }

    /// First failing metric axiom, scanning pairs then triples in element order.
    pub fn axiom_violation(&self) -> Option<MetricViolation> {
        let n = self.lattice.len();
        let zero = S::zero();
        for x in 0..n {
            for y in 0..n {
                let d = self.d(x, y);
                if !zero.approx_le(d) {
                    return Some(MetricViolation::Negative(x, y));
                }
                if d.approx_eq(&zero) != (x == y) {
                    return Some(MetricViolation::Degenerate(x, y));
                }
                if !d.approx_eq(self.d(y, x)) {
                    return Some(MetricViolation::Asymmetric(x, y));
                }
            }
        }
        for x in 0..n {
            for y in 0..n {
                for z in 0..n {
                    let via = self.d(x, y).clone() + self.d(y, z).clone();
                    if !self.d(x, z).approx_le(&via) {
                        return Some(MetricViolation::Triangle(x, y, z));
                    }
                }
            }
        }
        None
    }

    /// `{y : d(x, y) ≤ r}` in element order.
    pub fn closed_ball(&self, x: usize, r: &S) -> Result<Vec<usize>, ValuationError> {
        if !S::zero().approx_le(r) {
            return Err(ValuationError::NegativeRadius);
        }
        Ok(self.lattice.elements().filter(|&y| self.d(x, y).approx_le(r)).collect())
    }

    /// `{y : d(x, y) < r}` in element order.
    pub fn open_ball(&self, x: usize, r: &S) -> Result<Vec<usize>, ValuationError> {
        if !S::zero().approx_le(r) {
            return Err(ValuationError::NegativeRadius);
        }
        Ok(self
            .lattice
            .elements()
            .filter(|&y| self.d(x, y).approx_le(r) && !self.d(x, y).approx_eq(r))
            .collect())
    }

    pub fn render(&self) -> String {
        let l = &self.lattice;
        let mut s = String::from("d");
        for y in l.elements() {
            s.push('\t');
            s.push_str(l.label(y));
        }
        s.push('\n');
        for x in l.elements() {
            s.push_str(l.label(x));
            for y in l.elements() {
                s.push_str(&format!("\t{}", self.d(x, y)));
            }
            s.push('\n');
        }
        s
    }
}
