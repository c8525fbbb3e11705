//! Structural classification of finite lattices.

use std::fmt::Write as _;

use crate::lattice::FiniteLattice;

/// Five elements `(0', a, b, p, 1')` forming a pentagon sublattice: `0' < a < b < 1'`,
/// `a ∨ p = b ∨ p = 1'`, `a ∧ p = b ∧ p = 0'`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct N5Witness {
    pub bottom: usize,
    pub a: usize,
    pub b: usize,
    pub p: usize,
    pub top: usize,
}

/// Five elements forming a diamond sublattice.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct M3Witness {
    pub bottom: usize,
    pub middles: [usize; 3],
    pub top: usize,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ForbiddenSublattice {
    N5(N5Witness),
    M3(M3Witness),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ComplementationClass {
    NonComplemented,
    UniquelyComplemented,
    MultiplyComplemented,
}

impl ComplementationClass {
    pub fn is_complemented(self) -> bool {
        self != ComplementationClass::NonComplemented
    }

    pub fn as_str(self) -> &'static str {
        match self {
            ComplementationClass::NonComplemented => "non-complemented",
            ComplementationClass::UniquelyComplemented => "uniquely complemented",
            ComplementationClass::MultiplyComplemented => "multiply complemented",
        }
    }
}

impl std::fmt::Display for ComplementationClass {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Searches for a pentagon sublattice; the first witness in declared order is returned.
pub fn find_n5(l: &FiniteLattice) -> Option<N5Witness> {
    for a in l.elements() {
        for b in l.elements() {
            if !l.lt(a, b) {
                continue;
            }
            for p in l.elements() {
                let top = l.join(a, p);
                let bottom = l.meet(a, p);
                if top == l.join(b, p) && bottom == l.meet(b, p) && !l.leq(p, b) && !l.leq(a, p) {
                    return Some(N5Witness { bottom, a, b, p, top });
                }
            }
        }
    }
    None
}

/// Searches for a diamond sublattice.
pub fn find_m3(l: &FiniteLattice) -> Option<M3Witness> {
    let n = l.len();
    for x in 0..n {
        for y in (x + 1)..n {
            if l.poset().comparable(x, y) {
                continue;
            }
            let bottom = l.meet(x, y);
            let top = l.join(x, y);
            for z in (y + 1)..n {
                if l.meet(x, z) == bottom
                    && l.meet(y, z) == bottom
                    && l.join(x, z) == top
                    && l.join(y, z) == top
                    && !l.poset().comparable(x, z)
                    && !l.poset().comparable(y, z)
                {
                    return Some(M3Witness { bottom, middles: [x, y, z], top });
                }
            }
        }
    }
    None
}

/// `x M y`: for every `a ≤ y`, `y ∧ (x ∨ a) = (y ∧ x) ∨ a`.
pub fn is_modular_pair(l: &FiniteLattice, x: usize, y: usize) -> bool {
    l.elements()
        .filter(|&a| l.leq(a, y))
        .all(|a| l.meet(y, l.join(x, a)) == l.join(l.meet(y, x), a))
}

/// `x M* y`: for every `a ≥ y`, `y ∨ (x ∧ a) = (y ∨ x) ∧ a`.
pub fn is_dual_modular_pair(l: &FiniteLattice, x: usize, y: usize) -> bool {
    l.elements()
        .filter(|&a| l.leq(y, a))
        .all(|a| l.join(y, l.meet(x, a)) == l.meet(l.join(y, x), a))
}

pub fn modular_pairs(l: &FiniteLattice) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    for x in l.elements() {
        for y in l.elements() {
            if is_modular_pair(l, x, y) {
                out.push((x, y));
            }
        }
    }
    out
}

pub fn is_modular(l: &FiniteLattice) -> bool {
    l.elements().all(|x| l.elements().all(|y| is_modular_pair(l, x, y)))
}

/// `x ∧ (y ∨ z) = (x ∧ y) ∨ (x ∧ z)`.
pub fn distributive_triple(l: &FiniteLattice, x: usize, y: usize, z: usize) -> bool {
    l.meet(x, l.join(y, z)) == l.join(l.meet(x, y), l.meet(x, z))
}

/// `x ∨ (y ∧ z) = (x ∨ y) ∧ (x ∨ z)`.
pub fn dual_distributive_triple(l: &FiniteLattice, x: usize, y: usize, z: usize) -> bool {
    l.join(x, l.meet(y, z)) == l.meet(l.join(x, y), l.join(x, z))
}

pub fn distributive_triples(l: &FiniteLattice) -> Vec<(usize, usize, usize)> {
    let mut out = Vec::new();
    for x in l.elements() {
        for y in l.elements() {
            for z in l.elements() {
                if distributive_triple(l, x, y, z) {
                    out.push((x, y, z));
                }
            }
        }
    }
    out
}

pub fn is_distributive(l: &FiniteLattice) -> bool {
    l.elements()
        .all(|x| l.elements().all(|y| l.elements().all(|z| distributive_triple(l, x, y, z))))
}

/// Every non-zero element is the join of the atoms below it.
pub fn is_atomic(l: &FiniteLattice) -> bool {
    if l.is_empty() {
        return true;
    }
    let atoms = l.atoms();
    l.elements().filter(|&x| x != l.bottom()).all(|x| {
        l.join_all(atoms.iter().copied().filter(|&a| l.leq(a, x))) == x
    })
}

/// Every non-one element is the meet of the coatoms above it.
pub fn is_coatomic(l: &FiniteLattice) -> bool {
    if l.is_empty() {
        return true;
    }
    let coatoms = l.coatoms();
    l.elements().filter(|&x| x != l.top()).all(|x| {
        l.meet_all(coatoms.iter().copied().filter(|&a| l.leq(x, a))) == x
    })
}

pub fn complementation_class(l: &FiniteLattice) -> ComplementationClass {
    let mut unique = true;
    for x in l.elements() {
        match l.complements_of(x).len() {
            0 => return ComplementationClass::NonComplemented,
            1 => {}
            _ => unique = false,
        }
    }
    if unique {
        ComplementationClass::UniquelyComplemented
    } else {
        ComplementationClass::MultiplyComplemented
    }
}

/// Full structural report of a finite lattice.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PropertyReport {
    pub is_lattice: bool,
    pub is_bounded: bool,
    pub bottom: Option<usize>,
    pub top: Option<usize>,
    pub atoms: Vec<usize>,
    pub coatoms: Vec<usize>,
    pub is_atomic: bool,
    pub is_coatomic: bool,
    pub heights: Vec<usize>,
    pub height: usize,
    pub width: usize,
    pub length: usize,
    pub chain_partition: Vec<Vec<usize>>,
    pub is_modular: bool,
    pub n5_witness: Option<N5Witness>,
    pub modular_pairs: Vec<(usize, usize)>,
    pub is_distributive: bool,
    pub distributive_witness: Option<ForbiddenSublattice>,
    pub distributive_triples: Vec<(usize, usize, usize)>,
    pub complements: Vec<Vec<usize>>,
    pub complementation: ComplementationClass,
    pub is_boolean: bool,
}

/// Computes every report field.
///
/// # Panics
/// If the definitional modularity/distributivity checks disagree with the forbidden-sublattice
/// searches, which would indicate a corrupted lattice table.
pub fn classify(l: &FiniteLattice) -> PropertyReport {
    let empty = l.is_empty();
    let (width, chain_partition) = l.poset().width_and_chains();
    let modular_pairs = modular_pairs(l);
    let is_modular = modular_pairs.len() == l.len() * l.len();
    let n5_witness = find_n5(l);
    assert_eq!(is_modular, n5_witness.is_none(), "modularity checks disagree");
    let distributive_triples = distributive_triples(l);
    let is_distributive = distributive_triples.len() == l.len().pow(3);
    let distributive_witness = n5_witness
        .map(ForbiddenSublattice::N5)
        .or_else(|| find_m3(l).map(ForbiddenSublattice::M3));
    assert_eq!(is_distributive, distributive_witness.is_none(), "distributivity checks disagree");
    let complementation = complementation_class(l);
    PropertyReport {
        is_lattice: true,
        is_bounded: !empty,
        bottom: (!empty).then(|| l.bottom()),
        top: (!empty).then(|| l.top()),
        atoms: l.atoms(),
        coatoms: l.coatoms(),
        is_atomic: is_atomic(l),
        is_coatomic: is_coatomic(l),
        heights: l.heights(),
        height: l.height(),
        width,
        length: l.poset().length(),
        chain_partition,
        is_modular,
        n5_witness,
        modular_pairs,
        is_distributive,
        distributive_witness,
        distributive_triples,
        complements: l.elements().map(|x| l.complements_of(x)).collect(),
        complementation,
        is_boolean: !empty && is_distributive && complementation.is_complemented(),
    }
}

impl PropertyReport {
    /// Line-oriented `key: value` rendering using the lattice's labels.
    pub fn render(&self, l: &FiniteLattice) -> String {
        let name = |i: usize| l.label(i).to_string();
        let set = |v: &[usize]| format!("{{{}}}", v.iter().map(|&i| name(i)).collect::<Vec<_>>().join(", "));
        let opt = |v: Option<usize>| v.map(name).unwrap_or_else(|| "-".into());
        let mut s = String::new();
        let _ = writeln!(s, "elements: {}", l.len());
        let _ = writeln!(s, "lattice: {}", self.is_lattice);
        let _ = writeln!(s, "bounded: {}", self.is_bounded);
        let _ = writeln!(s, "bottom: {}", opt(self.bottom));
        let _ = writeln!(s, "top: {}", opt(self.top));
        let _ = writeln!(s, "atoms: {}", set(&self.atoms));
        let _ = writeln!(s, "coatoms: {}", set(&self.coatoms));
        let _ = writeln!(s, "atomic: {}", self.is_atomic);
        let _ = writeln!(s, "coatomic: {}", self.is_coatomic);
        let heights: Vec<String> = self
            .heights
            .iter()
            .enumerate()
            .map(|(i, h)| format!("{}={}", name(i), h))
            .collect();
        let _ = writeln!(s, "heights: {}", heights.join(" "));
        let _ = writeln!(s, "height: {}", self.height);
        let _ = writeln!(s, "width: {}", self.width);
        let _ = writeln!(s, "length: {}", self.length);
        let chains: Vec<String> = self
            .chain_partition
            .iter()
            .map(|c| c.iter().map(|&i| name(i)).collect::<Vec<_>>().join("<"))
            .collect();
        let _ = writeln!(s, "chains: {}", chains.join(" | "));
        let _ = writeln!(s, "modular: {}", self.is_modular);
        if let Some(w) = self.n5_witness {
            let _ = writeln!(
                s,
                "n5-witness: {} < {} < {} < {}, {} beside",
                name(w.bottom),
                name(w.a),
                name(w.b),
                name(w.top),
                name(w.p)
            );
        }
        let _ = writeln!(s, "modular-pairs: {}/{}", self.modular_pairs.len(), l.len() * l.len());
        let _ = writeln!(s, "distributive: {}", self.is_distributive);
        match self.distributive_witness {
            Some(ForbiddenSublattice::N5(_)) => {
                let _ = writeln!(s, "distributive-witness: n5");
            }
            Some(ForbiddenSublattice::M3(w)) => {
                let _ = writeln!(
                    s,
                    "distributive-witness: m3 {} < {}, {}, {} < {}",
                    name(w.bottom),
                    name(w.middles[0]),
                    name(w.middles[1]),
                    name(w.middles[2]),
                    name(w.top)
                );
            }
            None => {}
        }
        let _ = writeln!(
            s,
            "distributive-triples: {}/{}",
            self.distributive_triples.len(),
            l.len().pow(3)
        );
        for (x, c) in self.complements.iter().enumerate() {
            let _ = writeln!(s, "complements {}: {}", name(x), set(c));
        }
        let _ = writeln!(s, "complementation: {}", self.complementation);
        let _ = writeln!(s, "boolean: {}", self.is_boolean);
        s
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;

    #[test]
    fn pentagon() {
        let l = catalog::n5();
        let r = classify(&l);
        assert!(!r.is_modular);
        assert!(!r.is_distributive);
        let w = r.n5_witness.unwrap();
        assert_eq!((w.bottom, w.a, w.b, w.p, w.top), (0, 1, 2, 3, 4));
        assert_eq!(r.complementation, ComplementationClass::MultiplyComplemented);
        assert!(!r.is_boolean);
    }

    #[test]
    fn diamond() {
        let r = classify(&catalog::m3());
        assert!(r.is_modular);
        assert!(!r.is_distributive);
        assert!(matches!(r.distributive_witness, Some(ForbiddenSublattice::M3(_))));
        let l = catalog::m3();
        assert!(!distributive_triple(&l, 1, 2, 3));
    }

    #[test]
    fn fig2_dimensions() {
        let r = classify(&catalog::fig2());
        assert_eq!(r.width, 4);
        assert_eq!(r.length, 3);
        assert_eq!(r.height, 3);
        assert_eq!(r.chain_partition.len(), 4);
    }

    #[test]
    fn powerset_is_boolean() {
        let r = classify(&catalog::powerset(3));
        assert!(r.is_boolean);
        assert_eq!(r.height, 3);
        assert!(r.is_atomic && r.is_coatomic);
        assert_eq!(r.complementation, ComplementationClass::UniquelyComplemented);
    }

    #[test]
    fn render_mentions_witness() {
        let l = catalog::n5();
        let text = classify(&l).render(&l);
        assert!(text.contains("modular: false"));
        assert!(text.contains("n5-witness: 0 < a < b < 1, p beside"));
    }

    #[test]
    fn chain_is_distributive_non_complemented() {
        let r = classify(&catalog::chain(4));
        assert!(r.is_distributive);
        assert_eq!(r.complementation, ComplementationClass::NonComplemented);
    }
}
