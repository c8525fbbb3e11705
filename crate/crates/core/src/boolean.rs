//! Powerset carriers encoded as bitmasks, and carrier subsets ("levels") with inherited order.

use crate::error::{NotALattice, ParseError};
use crate::lattice::FiniteLattice;
use crate::poset::FinitePoset;

/// Subset of `{1..N}`; bit `i` stands for atom `i + 1`.
pub type Mask = u32;

/// Largest atom count accepted for powerset carriers.
pub const MAX_CARRIER_ATOMS: usize = 12;

pub fn full_mask(n: usize) -> Mask {
    if n == 0 {
        0
    } else {
        Mask::MAX >> (Mask::BITS as usize - n)
    }
}

/// Renders a mask as a subset literal such as `{1,3}` or `{}`.
pub fn format_mask(m: Mask) -> String {
    let items: Vec<String> = (0..Mask::BITS)
        .filter(|b| m >> b & 1 == 1)
        .map(|b| (b + 1).to_string())
        .collect();
    format!("{{{}}}", items.join(","))
}

/// Parses a subset literal; whitespace inside the braces is ignored.
pub fn parse_mask(s: &str) -> Result<Mask, String> {
    let t = s.trim();
    let inner = t
        .strip_prefix('{')
        .and_then(|r| r.strip_suffix('}'))
        .ok_or_else(|| format!("`{t}` is not a subset literal"))?;
    let mut m: Mask = 0;
    for part in inner.split(',') {
        let part = part.trim();
        if part.is_empty() {
            continue;
        }
        let k: u32 = part.parse().map_err(|_| format!("`{part}` is not an atom number"))?;
        if k == 0 || k > Mask::BITS {
            return Err(format!("atom {k} out of range 1..={}", Mask::BITS));
        }
        m |= 1 << (k - 1);
    }
    Ok(m)
}

/// Reads whitespace-separated subset literals such as `{1,3} {} {2}`; `#` starts a comment.
pub fn parse_mask_list(src: &str) -> Result<Vec<Mask>, ParseError> {
    let mut out = Vec::new();
    for (ln, line) in src.lines().enumerate() {
        let line = line.split('#').next().unwrap_or("");
        let chars: Vec<(usize, char)> = line.chars().enumerate().collect();
        let mut k = 0;
        while k < chars.len() {
            let (col, c) = chars[k];
            if c.is_whitespace() {
                k += 1;
                continue;
            }
            let err = |message: String| ParseError { line: ln + 1, column: col + 1, message };
            if c != '{' {
                return Err(err(format!("expected a subset literal, found `{c}`")));
            }
            let end = chars[k..].iter().position(|&(_, c)| c == '}').ok_or_else(|| err("unclosed `{`".into()))?;
            let literal: String = chars[k..=k + end].iter().map(|&(_, c)| c).collect();
            out.push(parse_mask(&literal).map_err(err)?);
            k += end + 1;
        }
    }
    Ok(out)
}

/// The powerset of `{1..n}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct BooleanCarrier {
    n: usize,
}

impl BooleanCarrier {
    pub fn new(n: usize) -> Option<Self> {
        (n <= MAX_CARRIER_ATOMS).then_some(BooleanCarrier { n })
    }

    pub fn atom_count(&self) -> usize {
        self.n
    }

    pub fn full(&self) -> Mask {
        full_mask(self.n)
    }

    pub fn elements(&self) -> impl Iterator<Item = Mask> {
        0..=self.full()
    }

    pub fn complement(&self, m: Mask) -> Mask {
        self.full() & !m
    }

    pub fn level(&self) -> Level {
        Level::from_carrier(self.n, self.elements().collect()).expect("powerset is a lattice")
    }
}

/// A subset of a powerset carrier with the inherited inclusion order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Level {
    n: usize,
    carrier: Vec<Mask>,
    lattice: FiniteLattice,
}

impl Level {
    /// Sorts and deduplicates `masks`, then builds the induced-order lattice.
    pub fn from_carrier(n: usize, mut masks: Vec<Mask>) -> Result<Level, NotALattice> {
        masks.sort_unstable();
        masks.dedup();
        let labels = masks.iter().map(|&m| format_mask(m)).collect();
        let poset = FinitePoset::from_order_fn(labels, |a, b| masks[a] & !masks[b] == 0)
            .expect("inclusion is an order");
        let lattice = FiniteLattice::from_poset(poset)?;
        Ok(Level { n, carrier: masks, lattice })
    }

    pub fn powerset(n: usize) -> Level {
        BooleanCarrier::new(n).expect("atom count within carrier bound").level()
    }

    pub fn atom_count(&self) -> usize {
        self.n
    }

    pub fn full(&self) -> Mask {
        full_mask(self.n)
    }

    pub fn carrier(&self) -> &[Mask] {
        &self.carrier
    }

    pub fn lattice(&self) -> &FiniteLattice {
        &self.lattice
    }

    pub fn len(&self) -> usize {
        self.carrier.len()
    }

    pub fn is_empty(&self) -> bool {
        self.carrier.is_empty()
    }

    pub fn mask(&self, i: usize) -> Mask {
        self.carrier[i]
    }

    pub fn index(&self, m: Mask) -> Option<usize> {
        self.carrier.binary_search(&m).ok()
    }

    pub fn contains(&self, m: Mask) -> bool {
        self.index(m).is_some()
    }

    pub fn contains_bounds(&self) -> bool {
        self.contains(0) && self.contains(self.full())
    }

    pub fn is_subset_of(&self, other: &Level) -> bool {
        self.carrier.iter().all(|&m| other.contains(m))
    }

    /// Join in the inherited order, on masks.
    pub fn join(&self, a: Mask, b: Mask) -> Mask {
        let (i, j) = (self.expect_index(a), self.expect_index(b));
        self.carrier[self.lattice.join(i, j)]
    }

    /// Meet in the inherited order, on masks.
    pub fn meet(&self, a: Mask, b: Mask) -> Mask {
        let (i, j) = (self.expect_index(a), self.expect_index(b));
        self.carrier[self.lattice.meet(i, j)]
    }

    fn expect_index(&self, m: Mask) -> usize {
        self.index(m)
            .unwrap_or_else(|| panic!("{} is not in the level carrier", format_mask(m)))
    }

    /// Index map `i -> index(full ∖ carrier[i])`, when the carrier is closed under set complement.
    pub fn inherited_ortho(&self) -> Option<Vec<usize>> {
        self.carrier
            .iter()
            .map(|&m| self.index(self.full() & !m))
            .collect()
    }

    /// Number of atoms of the level lattice when it is Boolean, i.e. `log2(len)`.
    pub fn rank(&self) -> usize {
        self.lattice.height()
    }

    pub fn render(&self) -> String {
        self.carrier.iter().map(|&m| format_mask(m)).collect::<Vec<_>>().join(" ")
    }
}
