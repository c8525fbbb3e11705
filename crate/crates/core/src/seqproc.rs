//! Symbol sequences over a primorial family: FASTA input, multi-level analysis and join synthesis.

use std::collections::BTreeMap;
use std::fmt;
use std::io::BufRead;
use std::str::FromStr;

use crate::boolean::{format_mask, full_mask, Level, Mask};
use crate::error::SeqError;
use crate::primorial::{MemberKind, PrimorialLattice, Strategy};
use crate::projection::{Method, Projector};
use crate::reduce::reduce;
use crate::Rational;

/// Symbols mapped bijectively onto the atoms `{1}, {2}, …` of the top carrier.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SymbolAlphabet {
    symbols: Vec<char>,
}

impl SymbolAlphabet {
    /// Symbols are stored upper-case; lookups ignore case.
    pub fn new(symbols: impl IntoIterator<Item = char>) -> Result<Self, SeqError> {
        let mut out: Vec<char> = Vec::new();
        for c in symbols {
            let c = c.to_ascii_uppercase();
            if out.contains(&c) {
                return Err(SeqError::DuplicateSymbol(c));
            }
            out.push(c);
        }
        Ok(SymbolAlphabet { symbols: out })
    }

    pub fn symbols(&self) -> &[char] {
        &self.symbols
    }

    pub fn len(&self) -> usize {
        self.symbols.len()
    }

    pub fn is_empty(&self) -> bool {
        self.symbols.is_empty()
    }

    pub fn position(&self, c: char) -> Option<usize> {
        let c = c.to_ascii_uppercase();
        self.symbols.iter().position(|&s| s == c)
    }

    pub fn atom(&self, c: char) -> Option<Mask> {
        self.position(c).map(|i| 1 << i)
    }

    pub fn encode(&self, tokens: &[char]) -> Result<Vec<Mask>, SeqError> {
        tokens
            .iter()
            .enumerate()
            .map(|(i, &c)| {
                self.atom(c).ok_or(SeqError::UnknownSymbol {
                    record: String::new(),
                    position: i + 1,
                    line: 0,
                    column: 0,
                    symbol: c,
                })
            })
            .collect()
    }

    /// Mask of the join of the given symbols.
    pub fn join_of(&self, symbols: &str) -> Result<Mask, SeqError> {
        let tokens: Vec<char> = symbols.chars().filter(|c| c.is_alphanumeric()).collect();
        Ok(self.encode(&tokens)?.into_iter().fold(0, |a, b| a | b))
    }

    /// `0`, `1`, or symbols joined with `|`, e.g. `A|T`.
    pub fn render(&self, m: Mask) -> String {
        if m == 0 {
            return "0".to_string();
        }
        if m == full_mask(self.len()) {
            return "1".to_string();
        }
        self.symbols
            .iter()
            .enumerate()
            .filter(|(i, _)| m >> i & 1 == 1)
            .map(|(_, c)| c.to_string())
            .collect::<Vec<_>>()
            .join("|")
    }
}

/// One FASTA record with its raw tokens.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FastaRecord {
    pub name: String,
    pub tokens: Vec<char>,
}

/// Reads FASTA records, ignoring whitespace and case; rejects symbols outside `alphabet`.
pub fn load_fasta<R: BufRead>(reader: R, alphabet: &SymbolAlphabet) -> Result<Vec<FastaRecord>, SeqError> {
    let mut records: Vec<FastaRecord> = Vec::new();
    for (ln, line) in reader.lines().enumerate() {
        let line = line.map_err(|e| SeqError::Io(e.to_string()))?;
        let line_no = ln + 1;
        if let Some(name) = line.strip_prefix('>') {
            records.push(FastaRecord { name: name.trim().to_string(), tokens: Vec::new() });
            continue;
        }
        if line.trim().is_empty() {
            continue;
        }
        let Some(rec) = records.last_mut() else {
            return Err(SeqError::MissingHeader { line: line_no });
        };
        for (col, c) in line.chars().enumerate() {
            if c.is_whitespace() {
                continue;
            }
            if alphabet.position(c).is_none() {
                return Err(SeqError::UnknownSymbol {
                    record: rec.name.clone(),
                    position: rec.tokens.len() + 1,
                    line: line_no,
                    column: col + 1,
                    symbol: c,
                });
            }
            rec.tokens.push(c.to_ascii_uppercase());
        }
    }
    if records.is_empty() {
        return Err(SeqError::EmptyInput);
    }
    Ok(records)
}

/// Elements of one level, named after their position in the input.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SymbolSequence {
    pub name: Option<String>,
    pub items: Vec<Mask>,
}

impl SymbolSequence {
    pub fn new(items: Vec<Mask>) -> Self {
        SymbolSequence { name: None, items }
    }

    pub fn len(&self) -> usize {
        self.items.len()
    }

    pub fn is_empty(&self) -> bool {
        self.items.is_empty()
    }

    pub fn count(&self, m: Mask) -> usize {
        self.items.iter().filter(|&&x| x == m).count()
    }

    pub fn histogram(&self) -> BTreeMap<Mask, usize> {
        let mut h = BTreeMap::new();
        for &x in &self.items {
            *h.entry(x).or_insert(0) += 1;
        }
        h
    }

    /// Fraction of positions equal to `m` in consecutive windows of `window` items; the last
    /// window may be shorter.
    pub fn windowed_fraction(&self, m: Mask, window: usize) -> Vec<Rational> {
        assert!(window > 0, "window must be positive");
        self.items
            .chunks(window)
            .map(|w| Rational::new(w.iter().filter(|&&x| x == m).count() as i64, w.len() as i64))
            .collect()
    }
}

/// Pointwise join in the top powerset.
pub fn synthesize(seqs: &[SymbolSequence]) -> Result<SymbolSequence, SeqError> {
    let first = seqs.first().ok_or(SeqError::NoSequences)?;
    let n = first.len();
    if let Some(other) = seqs.iter().find(|s| s.len() != n) {
        return Err(SeqError::LengthMismatch(n, other.len()));
    }
    let items = (0..n).map(|i| seqs.iter().fold(0, |acc, s| acc | s.items[i])).collect();
    Ok(SymbolSequence::new(items))
}

/// One projected sequence per (member, method).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PyramidRow {
    pub level: MemberKind,
    pub method: Method,
    pub sequence: SymbolSequence,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AnalysisPyramid {
    pub input: SymbolSequence,
    pub rows: Vec<PyramidRow>,
}

impl AnalysisPyramid {
    pub fn row(&self, level: MemberKind, method: Method) -> Option<&SymbolSequence> {
        self.rows.iter().find(|r| r.level == level && r.method == method).map(|r| &r.sequence)
    }

    /// Header `position input <level>:<method> …`, then one row per position.
    pub fn to_tsv(&self, alphabet: &SymbolAlphabet) -> String {
        let mut s = String::from("position\tinput");
        for r in &self.rows {
            s.push_str(&format!("\t{}:{}", r.level, r.method));
        }
        s.push('\n');
        for (i, &x) in self.input.items.iter().enumerate() {
            s.push_str(&format!("{}\t{}", i + 1, alphabet.render(x)));
            for r in &self.rows {
                s.push('\t');
                s.push_str(&alphabet.render(r.sequence.items[i]));
            }
            s.push('\n');
        }
        s
    }

    /// Per-row element histograms, plus windowed content fractions of `targets` on each row.
    pub fn summary(&self, alphabet: &SymbolAlphabet, targets: &[Mask], window: usize) -> String {
        let mut s = String::new();
        for r in &self.rows {
            let hist: Vec<String> = r
                .sequence
                .histogram()
                .into_iter()
                .map(|(m, c)| format!("{}={}", alphabet.render(m), c))
                .collect();
            s.push_str(&format!("{}:{}\t{}\n", r.level, r.method, hist.join(" ")));
            for &t in targets {
                let total = Rational::new(r.sequence.count(t) as i64, r.sequence.len().max(1) as i64);
                let windows: Vec<String> = r.sequence.windowed_fraction(t, window).iter().map(|f| f.to_string()).collect();
                s.push_str(&format!(
                    "{}:{}\t{} fraction {} windows[{}] {}\n",
                    r.level,
                    r.method,
                    alphabet.render(t),
                    total,
                    window,
                    windows.join(" ")
                ));
            }
        }
        s
    }
}

/// Encodes `tokens` and projects them onto every chain level and difference level.
pub fn analyze(
    family: &PrimorialLattice,
    alphabet: &SymbolAlphabet,
    tokens: &[char],
    methods: &[Method],
) -> Result<AnalysisPyramid, SeqError> {
    if alphabet.len() != family.atom_count() {
        return Err(SeqError::AlphabetMismatch { alphabet: alphabet.len(), atoms: family.atom_count() });
    }
    let input = SymbolSequence::new(alphabet.encode(tokens)?);
    let projector = Projector::new(family);
    let mut targets: Vec<MemberKind> = (1..=family.atom_count()).map(MemberKind::Boolean).collect();
    targets.extend((2..=family.atom_count()).map(MemberKind::Difference));
    let mut rows = Vec::new();
    for kind in targets {
        let level = projector.target(kind)?;
        for &method in methods {
            let items = projector.project_sequence(level, &input.items, method)?;
            rows.push(PyramidRow { level: kind, method, sequence: SymbolSequence::new(items) });
        }
    }
    Ok(AnalysisPyramid { input, rows })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GspPreset {
    /// `A, C, G, T` with the two-atom level `{0, A∨T, C∨G, 1}`.
    AcgtAtcg,
    /// `A, C, G, T, X` with a four-atom level whose atoms are the nucleobases.
    AcgtPlusX,
}

impl FromStr for GspPreset {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "acgt-atcg" => Ok(GspPreset::AcgtAtcg),
            "acgt-plus-x" => Ok(GspPreset::AcgtPlusX),
            _ => Err(format!("unknown preset `{s}` (expected acgt-atcg or acgt-plus-x)")),
        }
    }
}

impl fmt::Display for GspPreset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            GspPreset::AcgtAtcg => "acgt-atcg",
            GspPreset::AcgtPlusX => "acgt-plus-x",
        })
    }
}

/// First reduction member (in carrier order) satisfying `keep`.
fn pick(parent: &Level, keep: impl Fn(&Level) -> bool) -> Level {
    reduce(parent, false)
        .expect("preset carriers stay within exact reduction")
        .into_iter()
        .find(|l| keep(l))
        .expect("preset constraint is satisfiable")
}

pub fn gsp_preset(kind: GspPreset) -> (SymbolAlphabet, PrimorialLattice) {
    match kind {
        GspPreset::AcgtAtcg => {
            let alphabet = SymbolAlphabet::new("ACGT".chars()).expect("distinct symbols");
            let at = alphabet.join_of("AT").expect("known symbols");
            let cg = alphabet.join_of("CG").expect("known symbols");
            let coarse = vec![0, at, cg, full_mask(4)];
            let l3 = pick(&Level::powerset(4), |l| {
                reduce(l, false).expect("rank 3").iter().any(|c| c.carrier() == [0, cg, at, 15])
            });
            let mut sorted = coarse.clone();
            sorted.sort_unstable();
            let carriers = vec![l3.carrier().to_vec(), sorted, vec![0, full_mask(4)]];
            let family = PrimorialLattice::generate(4, &Strategy::Carriers(carriers), false)
                .expect("preset chain is a reduction chain");
            (alphabet, family)
        }
        GspPreset::AcgtPlusX => {
            let alphabet = SymbolAlphabet::new("ACGTX".chars()).expect("distinct symbols");
            let bases: Vec<Mask> = "ACGT".chars().map(|c| alphabet.atom(c).expect("known symbol")).collect();
            let l4 = pick(&Level::powerset(5), |l| bases.iter().all(|&b| l.contains(b)));
            let l3 = pick(&l4, |_| true);
            let l2 = pick(&l3, |_| true);
            let carriers = vec![l4.carrier().to_vec(), l3.carrier().to_vec(), l2.carrier().to_vec(), vec![0, full_mask(5)]];
            let family = PrimorialLattice::generate(5, &Strategy::Carriers(carriers), false)
                .expect("preset chain is a reduction chain");
            (alphabet, family)
        }
    }
}

/// Renders a level with alphabet names.
pub fn render_level(level: &Level, alphabet: &SymbolAlphabet) -> String {
    level.carrier().iter().map(|&m| alphabet.render(m)).collect::<Vec<_>>().join(" ")
}

/// Raw carrier literal form, for audit output.
pub fn render_level_literal(level: &Level) -> String {
    level.carrier().iter().map(|&m| format_mask(m)).collect::<Vec<_>>().join(" ")
}
