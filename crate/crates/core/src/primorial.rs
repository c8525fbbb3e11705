//! Primorial lattices: generation from a Boolean carrier, role recognition, and structural flags.

use std::fmt;

use crate::boolean::{format_mask, parse_mask_list, Level, Mask};
use crate::classify::{classify, complementation_class, is_atomic, ComplementationClass};
use crate::error::{ParseError, PrimorialError};
use crate::lattice::FiniteLattice;
use crate::ortho::{find_orthocomplementations, OrthoLattice};
use crate::poset::FinitePoset;
use crate::reduce::{difference, inherited_ortho, reduce};

/// How a reduction member is picked at each level.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub enum Strategy {
    /// The member with the lexicographically least sorted carrier.
    #[default]
    CanonicalFirst,
    /// One index into the sorted reduction per level, from `N` down to `2`.
    Explicit(Vec<usize>),
    /// One carrier per level, from `L(N-1)` down to `L1`; each must be a reduction member.
    Carriers(Vec<Vec<Mask>>),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum MemberKind {
    /// `L₂ⁿ`, the chain level with `n` atoms.
    Boolean(usize),
    /// `Dₙ = L₂ⁿ ⊘ L₂ⁿ⁻¹`.
    Difference(usize),
}

impl fmt::Display for MemberKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MemberKind::Boolean(n) => write!(f, "L{n}"),
            MemberKind::Difference(n) => write!(f, "D{n}"),
        }
    }
}

impl std::str::FromStr for MemberKind {
    type Err = PrimorialError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || PrimorialError::UnknownLevel(s.to_string());
        let (head, rest) = s.split_at_checked(1).ok_or_else(bad)?;
        let n: usize = rest.parse().map_err(|_| bad())?;
        match head {
            "L" | "l" => Ok(MemberKind::Boolean(n)),
            "D" | "d" => Ok(MemberKind::Difference(n)),
            _ => Err(bad()),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Member {
    pub kind: MemberKind,
    pub level: Level,
}

/// Role assignment witnessing the primorial shape: `y[n+1] = y[n] ∨ x[n]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PrimorialRoles {
    pub bottom: usize,
    pub y: Vec<usize>,
    pub x: Vec<usize>,
}

/// A chain of Boolean levels with their successive differences, all inside one powerset.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PrimorialLattice {
    n: usize,
    /// `chain[i]` has `i + 1` atoms.
    chain: Vec<Level>,
    /// `diffs[i]` is `D(i + 2)`.
    diffs: Vec<Level>,
    members: Vec<Member>,
    family: FiniteLattice,
    roles: PrimorialRoles,
}

impl PrimorialLattice {
    /// Generates the family from `L₂ᴺ`, checking that every difference level is
    /// orthocomplemented and that the family has the primorial shape.
    pub fn generate(n: usize, strategy: &Strategy, best_effort: bool) -> Result<Self, PrimorialError> {
        if !(2..=crate::boolean::MAX_CARRIER_ATOMS).contains(&n) {
            return Err(PrimorialError::AtomCount { n, min: 2, max: crate::boolean::MAX_CARRIER_ATOMS });
        }
        match strategy {
            Strategy::Explicit(c) if c.len() != n - 1 => {
                return Err(PrimorialError::ChoiceCount { expected: n - 1, got: c.len() })
            }
            Strategy::Carriers(c) if c.len() != n - 1 => {
                return Err(PrimorialError::ChoiceCount { expected: n - 1, got: c.len() })
            }
            _ => {}
        }
        let mut chain = vec![Level::powerset(n)];
        for (step, m) in (2..=n).rev().enumerate() {
            let parent = chain.last().expect("chain is never empty");
            let candidates = reduce(parent, best_effort)?;
            let chosen = match strategy {
                Strategy::CanonicalFirst => candidates.into_iter().next().ok_or(PrimorialError::NoCandidate(m))?,
                Strategy::Explicit(choices) => {
                    let available = candidates.len();
                    let choice = choices[step];
                    candidates
                        .into_iter()
                        .nth(choice)
                        .ok_or(PrimorialError::InvalidChoice { level: m, choice, available })?
                }
                Strategy::Carriers(carriers) => {
                    let mut want = carriers[step].clone();
                    want.sort_unstable();
                    want.dedup();
                    candidates
                        .into_iter()
                        .find(|c| c.carrier() == want.as_slice())
                        .ok_or(PrimorialError::NoCandidate(m))?
                }
            };
            chain.push(chosen);
        }
        chain.reverse();
        Self::from_chain(chain)
    }

    /// Assembles the family from a chain `L1 ⊂ … ⊂ LN` given bottom-up.
    pub fn from_chain(chain: Vec<Level>) -> Result<Self, PrimorialError> {
        let n = chain.len();
        if n < 2 {
            return Err(PrimorialError::AtomCount { n, min: 2, max: crate::boolean::MAX_CARRIER_ATOMS });
        }
        let top = chain[n - 1].atom_count();
        for (i, level) in chain.iter().enumerate() {
            if level.atom_count() != top {
                return Err(PrimorialError::OutsideTop(level.render()));
            }
            if level.len() != 1 << (i + 1) || !classify(level.lattice()).is_boolean {
                return Err(PrimorialError::NotBoolean);
            }
            if !level.contains_bounds() {
                return Err(PrimorialError::BoundsNotShared);
            }
        }
        if chain[n - 1].len() != 1 << top {
            return Err(PrimorialError::NotBoolean);
        }
        let mut diffs = Vec::with_capacity(n - 1);
        for m in 1..n {
            if !chain[m - 1].is_subset_of(&chain[m]) {
                return Err(PrimorialError::NotPrimorial);
            }
            let d = difference(&chain[m], &chain[m - 1])?;
            inherited_ortho(&d)?;
            diffs.push(d);
        }
        let mut members: Vec<Member> = chain
            .iter()
            .enumerate()
            .map(|(i, l)| Member { kind: MemberKind::Boolean(i + 1), level: l.clone() })
            .collect();
        // D2 has the same carrier as L2 and is not a separate family member.
        members.extend(
            diffs.iter().enumerate().skip(1).map(|(i, d)| Member { kind: MemberKind::Difference(i + 2), level: d.clone() }),
        );
        let labels = members.iter().map(|m| m.kind.to_string()).collect();
        let poset = FinitePoset::from_order_fn(labels, |a, b| members[a].level.is_subset_of(&members[b].level))
            .map_err(|_| PrimorialError::NotPrimorial)?;
        let family = FiniteLattice::from_poset(poset)?;
        let roles = is_primorial(&family).ok_or(PrimorialError::NotPrimorial)?;
        Ok(PrimorialLattice { n: top, chain, diffs, members, family, roles })
    }

    pub fn atom_count(&self) -> usize {
        self.n
    }

    pub fn chain(&self) -> &[Level] {
        &self.chain
    }

    /// `D₂ … Dₙ`, including `D₂` even though it coincides with `L₂²`.
    pub fn diffs(&self) -> &[Level] {
        &self.diffs
    }

    pub fn members(&self) -> &[Member] {
        &self.members
    }

    pub fn family(&self) -> &FiniteLattice {
        &self.family
    }

    pub fn roles(&self) -> &PrimorialRoles {
        &self.roles
    }

    pub fn top(&self) -> &Level {
        &self.chain[self.n - 1]
    }

    pub fn boolean(&self, n: usize) -> Option<&Level> {
        n.checked_sub(1).and_then(|i| self.chain.get(i))
    }

    pub fn member(&self, kind: MemberKind) -> Option<&Member> {
        self.members.iter().find(|m| m.kind == kind)
    }

    /// Looks up `L3`, `D4` and so on; `D2` resolves to the `L2` carrier.
    pub fn level(&self, name: &str) -> Result<&Level, PrimorialError> {
        let kind: MemberKind = name.parse()?;
        match kind {
            MemberKind::Difference(2) => self.boolean(2),
            MemberKind::Boolean(n) => self.boolean(n),
            MemberKind::Difference(n) => self.member(kind).map(|m| &m.level).filter(|_| n <= self.n),
        }
        .ok_or_else(|| PrimorialError::UnknownLevel(name.to_string()))
    }

    /// Difference levels with their inherited orthocomplement.
    pub fn ortho_levels(&self) -> Vec<(MemberKind, OrthoLattice)> {
        self.diffs
            .iter()
            .enumerate()
            .map(|(i, d)| (MemberKind::Difference(i + 2), inherited_ortho(d).expect("checked at construction")))
            .collect()
    }

    /// One member per line: name, then carrier subsets.
    pub fn render(&self) -> String {
        let mut s = String::new();
        for m in &self.members {
            s.push_str(&format!("{}\t{}\n", m.kind, m.level.render()));
        }
        s
    }
}

/// Finds roles `0`, atoms `y₀, x₀ … x_{K-1}` and joins `y_{n+1} = y_n ∨ x_n` covering every
/// element of an atomic lattice; the first assignment in declared order is returned.
pub fn is_primorial(l: &FiniteLattice) -> Option<PrimorialRoles> {
    let n = l.len();
    if n < 2 || n % 2 != 0 || !is_atomic(l) {
        return None;
    }
    let k = (n - 2) / 2;
    let atoms = l.atoms();
    if atoms.len() != k + 1 {
        return None;
    }
    let bottom = l.bottom();
    for &y0 in &atoms {
        let mut roles = PrimorialRoles { bottom, y: vec![y0], x: Vec::new() };
        let mut used = vec![false; n];
        used[bottom] = true;
        used[y0] = true;
        if extend(l, &atoms, k, &mut roles, &mut used) {
            return Some(roles);
        }
    }
    None
}

fn extend(l: &FiniteLattice, atoms: &[usize], k: usize, roles: &mut PrimorialRoles, used: &mut [bool]) -> bool {
    if roles.x.len() == k {
        return used.iter().all(|&u| u);
    }
    let y = *roles.y.last().expect("y0 assigned");
    for &x in atoms {
        if used[x] {
            continue;
        }
        let next = l.join(y, x);
        if used[next] || atoms.contains(&next) {
            continue;
        }
        used[x] = true;
        used[next] = true;
        roles.x.push(x);
        roles.y.push(next);
        if extend(l, atoms, k, roles, used) {
            return true;
        }
        roles.x.pop();
        roles.y.pop();
        used[x] = false;
        used[next] = false;
    }
    false
}

/// The structural flags claimed for primorial lattices with at least two x-atoms.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PrimorialFlags {
    pub non_distributive: bool,
    pub non_modular: bool,
    pub complemented: bool,
    pub multiply_complemented: bool,
    pub non_orthocomplementable: bool,
    pub non_boolean: bool,
}

impl PrimorialFlags {
    pub fn of(l: &FiniteLattice) -> Self {
        let report = classify(l);
        let class = complementation_class(l);
        PrimorialFlags {
            non_distributive: !report.is_distributive,
            non_modular: !report.is_modular,
            complemented: class.is_complemented(),
            multiply_complemented: class == ComplementationClass::MultiplyComplemented,
            non_orthocomplementable: find_orthocomplementations(l).is_empty(),
            non_boolean: !report.is_boolean,
        }
    }

    pub fn all(&self) -> bool {
        self.non_distributive
            && self.non_modular
            && self.complemented
            && self.multiply_complemented
            && self.non_orthocomplementable
            && self.non_boolean
    }
}

/// Reads a choices file: one line per level from `L(N-1)` down to `L1`, either all integer
/// indices into the sorted reduction or all carriers as subset literals. `#` starts a comment.
pub fn parse_choices(src: &str) -> Result<Strategy, ParseError> {
    let mut indices = Vec::new();
    let mut carriers = Vec::new();
    let mut first: Option<(usize, bool)> = None;
    for (ln, raw) in src.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("");
        let trimmed = line.trim();
        if trimmed.is_empty() {
            continue;
        }
        let column = line.len() - line.trim_start().len() + 1;
        let err = |message: String| ParseError { line: ln + 1, column, message };
        let is_index = !trimmed.starts_with('{');
        match first {
            None => first = Some((ln + 1, is_index)),
            Some((l0, kind)) if kind != is_index => {
                return Err(err(format!("mixes indices and carriers (line {l0} uses the other form)")))
            }
            _ => {}
        }
        if is_index {
            indices.push(trimmed.parse::<usize>().map_err(|_| err(format!("`{trimmed}` is not an index")))?);
        } else {
            let masks = parse_mask_list(line).map_err(|e| ParseError { line: ln + 1, ..e })?;
            carriers.push(masks);
        }
    }
    match first {
        None => Err(ParseError { line: 1, column: 1, message: "no choices given".into() }),
        Some((_, true)) => Ok(Strategy::Explicit(indices)),
        Some((_, false)) => Ok(Strategy::Carriers(carriers)),
    }
}

/// Renders a carrier as space-separated subset literals.
pub fn render_carrier(carrier: &[Mask]) -> String {
    carrier.iter().map(|&m| format_mask(m)).collect::<Vec<_>>().join(" ")
}
