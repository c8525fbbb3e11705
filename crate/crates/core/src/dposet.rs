//! D-poset axioms for a partial difference on an ordered family.

/// First failing law and the `(x, y, z)` triple (indices into the item list) where it fails.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DPosetViolation {
    pub law: &'static str,
    pub witness: (usize, usize, usize),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DPosetReport {
    /// Chains `x ≤ y ≤ z` examined.
    pub triples: usize,
    /// First witness of each failing law, in law order.
    pub violations: Vec<DPosetViolation>,
}

impl DPosetReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn violation(&self, law: &str) -> Option<&DPosetViolation> {
        self.violations.iter().find(|v| v.law == law)
    }
}

pub const LAWS: [&str; 8] = [
    "difference below minuend",
    "double difference",
    "antitone in subtrahend",
    "difference of differences",
    "isotone in minuend",
    "subtrahend below complement",
    "cancellation of common subtrahend",
    "iterated difference",
];

/// Checks the four D-poset axioms and four derived laws over every chain `x ≤ y ≤ z` of
/// `items`. `diff(y, x)` stands for `y ∖ x` and is only called with `x ≤ y`; its value may
/// fall outside `items`, which is why `leq` and equality act on values rather than indices.
pub fn dposet_check<T: PartialEq>(
    items: &[T],
    leq: impl Fn(&T, &T) -> bool,
    diff: impl Fn(&T, &T) -> T,
) -> DPosetReport {
    let n = items.len();
    let mut triples = 0;
    let mut first: [Option<(usize, usize, usize)>; 8] = [None; 8];
    for xi in 0..n {
        for yi in 0..n {
            let (x, y) = (&items[xi], &items[yi]);
            if !leq(x, y) {
                continue;
            }
            for zi in 0..n {
                let z = &items[zi];
                if !leq(y, z) {
                    continue;
                }
                triples += 1;
                let yx = diff(y, x);
                let zx = diff(z, x);
                let zy = diff(z, y);
                let z_yx = diff(z, &yx);
                let holds = [
                    leq(&yx, y),
                    diff(y, &yx) == *x,
                    leq(&zy, &zx),
                    diff(&zx, &zy) == yx,
                    leq(&yx, &zx),
                    leq(x, &z_yx),
                    diff(&zx, &yx) == zy,
                    diff(&z_yx, x) == zy,
                ];
                for (slot, ok) in first.iter_mut().zip(holds) {
                    if !ok && slot.is_none() {
                        *slot = Some((xi, yi, zi));
                    }
                }
            }
        }
    }
    let violations = LAWS
        .iter()
        .zip(first)
        .filter_map(|(&law, w)| w.map(|witness| DPosetViolation { law, witness }))
        .collect();
    DPosetReport { triples, violations }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn powerset_with_set_difference() {
        let items: Vec<u32> = (0..8).collect();
        let r = dposet_check(&items, |a, b| a & !b == 0, |y, x| y & !x);
        assert!(r.passed());
        assert_eq!(r.triples, 64);
    }

    #[test]
    fn keeping_the_minuend_fails() {
        let items: Vec<u32> = (0..8).collect();
        let r = dposet_check(&items, |a, b| a & !b == 0, |y, _| *y);
        assert!(r.violation("difference below minuend").is_none());
        assert_eq!(r.violation("double difference").unwrap().witness, (0, 1, 1));
    }
}
