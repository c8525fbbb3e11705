//! Projections of top-carrier elements and sequences onto members of a primorial family.

use std::fmt;
use std::str::FromStr;

use crate::boolean::{format_mask, Level, Mask};
use crate::error::SeqError;
use crate::primorial::{MemberKind, PrimorialLattice};
use crate::valuation::LatticeMetric;
use crate::Rational;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Method {
    Zero,
    Sasaki,
    Metric,
    /// Meet, in the target, of the target elements containing `x`: the least of them when one
    /// exists. A coarsening helper rather than one of the three projections proper.
    Ceiling,
}

impl Method {
    pub const ALL: [Method; 4] = [Method::Zero, Method::Sasaki, Method::Metric, Method::Ceiling];

    pub fn as_str(self) -> &'static str {
        match self {
            Method::Zero => "zero",
            Method::Sasaki => "sasaki",
            Method::Metric => "metric",
            Method::Ceiling => "ceiling",
        }
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Method {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Method::ALL
            .into_iter()
            .find(|m| m.as_str() == s)
            .ok_or_else(|| format!("unknown projection method `{s}` (expected zero, sasaki, metric or ceiling)"))
    }
}

/// Projection context for one primorial family, with the height metric of every chain level
/// tabulated once.
pub struct Projector<'a> {
    family: &'a PrimorialLattice,
    metrics: Vec<LatticeMetric<Rational>>,
}

impl<'a> Projector<'a> {
    pub fn new(family: &'a PrimorialLattice) -> Self {
        let metrics = family
            .chain()
            .iter()
            .map(|l| LatticeMetric::height(l.lattice()).expect("Boolean levels carry the height metric"))
            .collect();
        Projector { family, metrics }
    }

    pub fn family(&self) -> &PrimorialLattice {
        self.family
    }

    /// Resolves `L3`, `D4`, ... to the member carrier.
    pub fn target(&self, kind: MemberKind) -> Result<&'a Level, SeqError> {
        self.family.level(&kind.to_string()).map_err(|e| SeqError::NotInCarrier(e.to_string()))
    }

    fn check(&self, x: Mask) -> Result<(), SeqError> {
        if self.family.top().contains(x) {
            Ok(())
        } else {
            Err(SeqError::NotInCarrier(format_mask(x)))
        }
    }

    /// Index of the least chain level containing `x` and every element of `target`.
    fn enclosing(&self, target: &Level, x: Mask) -> usize {
        self.family
            .chain()
            .iter()
            .position(|l| l.contains(x) && target.is_subset_of(l))
            .expect("the top level contains everything")
    }

    pub fn zero(&self, target: &Level, x: Mask) -> Mask {
        if target.contains(x) {
            x
        } else {
            target.mask(target.lattice().bottom())
        }
    }

    /// Both the Sasaki-map form and the meet form, in that order.
    pub fn sasaki_forms(&self, target: &Level, x: Mask) -> (Mask, Mask) {
        let outer = &self.family.chain()[self.enclosing(target, x)];
        let ol = outer.lattice();
        let xi = outer.index(x).expect("x lies in the enclosing level");
        let mut via_maps = Vec::new();
        let mut via_meets = Vec::new();
        for &y in target.carrier() {
            let yi = outer.index(y).expect("target lies in the enclosing level");
            let yp = ol.complements_of(yi)[0];
            let phi = outer.mask(ol.meet(ol.join(xi, yp), yi));
            let meet = outer.mask(ol.meet(xi, yi));
            if let Some(t) = target.index(phi) {
                via_maps.push(t);
            }
            if let Some(t) = target.index(meet) {
                via_meets.push(t);
            }
        }
        let tl = target.lattice();
        (target.mask(tl.join_all(via_maps)), target.mask(tl.join_all(via_meets)))
    }

    pub fn sasaki(&self, target: &Level, x: Mask) -> Mask {
        let (a, b) = self.sasaki_forms(target, x);
        assert_eq!(a, b, "the two Sasaki forms disagree at {}", format_mask(x));
        a
    }

    /// Smallest radius whose closed ball meets the target, and the meet of that intersection.
    pub fn metric_with_radius(&self, target: &Level, x: Mask) -> (Rational, Mask) {
        let k = self.enclosing(target, x);
        let outer = &self.family.chain()[k];
        let metric = &self.metrics[k];
        let xi = outer.index(x).expect("x lies in the enclosing level");
        let radius = target
            .carrier()
            .iter()
            .map(|&y| *metric.d(xi, outer.index(y).expect("target lies in the enclosing level")))
            .min()
            .expect("targets are non-empty");
        let ball = metric.closed_ball(xi, &radius).expect("radius is non-negative");
        let hits: Vec<usize> = ball.into_iter().filter_map(|i| target.index(outer.mask(i))).collect();
        (radius, target.mask(target.lattice().meet_all(hits)))
    }

    pub fn metric(&self, target: &Level, x: Mask) -> Mask {
        self.metric_with_radius(target, x).1
    }

    pub fn ceiling(&self, target: &Level, x: Mask) -> Mask {
        let above: Vec<usize> = target.lattice().elements().filter(|&i| x & !target.mask(i) == 0).collect();
        target.mask(target.lattice().meet_all(above))
    }

    pub fn project(&self, target: &Level, x: Mask, method: Method) -> Result<Mask, SeqError> {
        self.check(x)?;
        Ok(match method {
            Method::Zero => self.zero(target, x),
            Method::Sasaki => self.sasaki(target, x),
            Method::Metric => self.metric(target, x),
            Method::Ceiling => self.ceiling(target, x),
        })
    }

    /// Pointwise projection; the output has the input's length.
    pub fn project_sequence(&self, target: &Level, seq: &[Mask], method: Method) -> Result<Vec<Mask>, SeqError> {
        seq.iter().map(|&x| self.project(target, x, method)).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::primorial::Strategy;

    fn cube_family() -> PrimorialLattice {
        // L2 = {∅, {1}, {2,3}, X}
        PrimorialLattice::generate(3, &Strategy::Carriers(vec![vec![0, 1, 6, 7], vec![0, 7]]), false).unwrap()
    }

    #[test]
    fn off_level_atom_onto_o6() {
        let p = cube_family();
        let pr = Projector::new(&p);
        let d3 = p.level("D3").unwrap();
        assert_eq!(d3.carrier(), &[0, 2, 3, 4, 5, 7]);
        assert_eq!(pr.sasaki_forms(d3, 0b001), (0, 0));
        assert_eq!(pr.metric_with_radius(d3, 0b001), (Rational::from_integer(1), 0));
        assert_eq!(pr.zero(d3, 0b001), 0);
        assert_eq!(pr.ceiling(d3, 0b001), 0);
    }

    #[test]
    fn identity_on_own_carrier() {
        let p = cube_family();
        let pr = Projector::new(&p);
        for m in p.members() {
            for &x in m.level.carrier() {
                for method in Method::ALL {
                    assert_eq!(pr.project(&m.level, x, method).unwrap(), x, "{} {method}", m.kind);
                }
            }
        }
    }

    #[test]
    fn sequences_and_errors() {
        let p = cube_family();
        let pr = Projector::new(&p);
        let l2 = p.level("L2").unwrap();
        assert_eq!(pr.project_sequence(l2, &[], Method::Zero).unwrap(), Vec::<Mask>::new());
        assert_eq!(pr.project_sequence(l2, &[0b010, 0b100], Method::Ceiling).unwrap(), vec![0b110, 0b110]);
        assert!(pr.project(l2, 0b1000, Method::Zero).is_err());
        assert_eq!("metric".parse::<Method>().unwrap(), Method::Metric);
        assert!("nearest".parse::<Method>().is_err());
    }
}
