use thiserror::Error;

/// Failures while building an ordered set.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OrderError {
    #[error("duplicate element `{0}`")]
    DuplicateElement(String),
    #[error("unknown element `{0}`")]
    UnknownElement(String),
    #[error("element `{0}` covers itself")]
    SelfCover(String),
    #[error("antisymmetry violated: `{0}` and `{1}` lie on a cycle")]
    Cycle(String, String),
    #[error("relation is not reflexive at `{0}`")]
    NotReflexive(String),
    #[error("relation is not transitive: `{0}` <= `{1}` <= `{2}`")]
    NotTransitive(String, String, String),
    #[error("relation and label list have different sizes ({relation} vs {labels})")]
    SizeMismatch { relation: usize, labels: usize },
}

/// The pair of elements that has no least upper bound or greatest lower bound.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("not a lattice: `{x}` and `{y}` have no {}", if *.missing_join { "least upper bound" } else { "greatest lower bound" })]
pub struct NotALattice {
    pub x: String,
    pub y: String,
    pub missing_join: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ComposeError {
    #[error("carriers are not disjoint: `{0}` appears in both operands")]
    NotDisjoint(String),
    #[error("result would have {size} elements, above the cap of {cap}")]
    SizeCap { size: u128, cap: usize },
    #[error(transparent)]
    Order(#[from] OrderError),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EnumerationError {
    #[error("lattice enumeration supports at most {max} elements, got {n}")]
    TooLarge { n: usize, max: usize },
}

/// Which orthocomplement axiom failed.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum OrthoAxiom {
    Total,
    Bounded,
    Involution,
    NonContradiction,
    Antitone,
}

impl std::fmt::Display for OrthoAxiom {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            OrthoAxiom::Total => "total map",
            OrthoAxiom::Bounded => "bounded lattice",
            OrthoAxiom::Involution => "involution",
            OrthoAxiom::NonContradiction => "non-contradiction",
            OrthoAxiom::Antitone => "antitone",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("orthocomplement axiom `{axiom}` fails at ({}, {})", witness.0, witness.1)]
pub struct OrthoError {
    pub axiom: OrthoAxiom,
    /// Labels of the offending element(s); both entries equal for unary axioms.
    pub witness: (String, String),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PrimorialError {
    #[error("Boolean carriers support between {min} and {max} atoms, got {n}")]
    AtomCount { n: usize, min: usize, max: usize },
    #[error("exact reduction supports at most {max} atoms; {n} needs the best-effort flag")]
    NeedsBestEffort { n: usize, max: usize },
    #[error("level is not a Boolean lattice under the inherited order")]
    NotBoolean,
    #[error("levels do not share the bounds 0 and 1")]
    BoundsNotShared,
    #[error("carrier element {0} lies outside the top Boolean lattice")]
    OutsideTop(String),
    #[error(transparent)]
    NotALattice(#[from] NotALattice),
    #[error("explicit choice {choice} at level {level} is out of range ({available} candidates)")]
    InvalidChoice { level: usize, choice: usize, available: usize },
    #[error("expected {expected} explicit choices, got {got}")]
    ChoiceCount { expected: usize, got: usize },
    #[error("no reduction candidate satisfies the requested constraint at level {0}")]
    NoCandidate(usize),
    #[error("difference level is not orthocomplemented: {0}")]
    NotOrthocomplemented(#[from] OrthoError),
    #[error("generated family is not primorial")]
    NotPrimorial,
    #[error("unknown level `{0}`")]
    UnknownLevel(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SeqError {
    #[error("empty input")]
    EmptyInput,
    #[error("line {line}: sequence data before the first `>` header")]
    MissingHeader { line: usize },
    #[error("record `{record}`, position {position} (line {line}, column {column}): symbol `{symbol}` is not in the alphabet")]
    UnknownSymbol {
        record: String,
        position: usize,
        line: usize,
        column: usize,
        symbol: char,
    },
    #[error("alphabet has {alphabet} symbols but the lattice has {atoms} atoms")]
    AlphabetMismatch { alphabet: usize, atoms: usize },
    #[error("duplicate alphabet symbol `{0}`")]
    DuplicateSymbol(char),
    #[error("sequence lengths differ: {0} vs {1}")]
    LengthMismatch(usize, usize),
    #[error("nothing to synthesize")]
    NoSequences,
    #[error("element {0} is not in the carrier")]
    NotInCarrier(String),
    #[error("i/o error: {0}")]
    Io(String),
}

/// Parse failure in the lattice text format, with a 1-based position.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("{line}:{column}: {message}")]
pub struct ParseError {
    pub line: usize,
    pub column: usize,
    pub message: String,
}

/// Failure building a lattice from cover pairs.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BuildError {
    #[error(transparent)]
    Order(#[from] OrderError),
    #[error(transparent)]
    NotALattice(#[from] NotALattice),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ValuationError {
    #[error("expected {expected} values, got {got}")]
    LengthMismatch { expected: usize, got: usize },
    #[error("not a valuation: v({x} ∨ {y}) + v({x} ∧ {y}) != v({x}) + v({y})")]
    NotAValuation { x: String, y: String },
    #[error("valuation is not isotone: {x} <= {y} but v({x}) > v({y})")]
    NotIsotone { x: String, y: String },
    #[error("negative radius")]
    NegativeRadius,
}
