//! Line-based lattice text format.
//!
//! ```text
//! # the benzene ring
//! lattice o6
//! elements 0 p q q' p' 1
//! covers 0<p 0<q p<q' q<p' q'<1 p'<1
//! ortho 0:1 p:p' q:q'
//! ```
//!
//! Optional stanzas: `valuation e=r …`, `prob e=r …`, `negation a->b …`, with rationals written
//! `p/q` or as integers. Stanzas may repeat; their entries accumulate.

use std::collections::HashMap;

use crate::error::ParseError;
use crate::lattice::FiniteLattice;
use crate::poset::FinitePoset;
use crate::Rational;

#[derive(Clone, Debug, PartialEq)]
pub struct LatticeDoc {
    pub name: String,
    pub poset: FinitePoset,
    pub ortho: Option<Vec<usize>>,
    pub valuation: Option<Vec<Rational>>,
    pub prob: Option<Vec<Rational>>,
    pub negation: Option<Vec<usize>>,
}

impl LatticeDoc {
    pub fn lattice(&self) -> Result<FiniteLattice, crate::NotALattice> {
        FiniteLattice::from_poset(self.poset.clone())
    }

    pub fn to_text(&self) -> String {
        let p = &self.poset;
        let mut s = String::new();
        if !self.name.is_empty() {
            s.push_str(&format!("lattice {}\n", self.name));
        }
        s.push_str(&format!("elements {}\n", p.labels().join(" ")));
        let covers: Vec<String> =
            p.cover_pairs().iter().map(|&(a, b)| format!("{}<{}", p.label(a), p.label(b))).collect();
        if !covers.is_empty() {
            s.push_str(&format!("covers {}\n", covers.join(" ")));
        }
        if let Some(perp) = &self.ortho {
            let pairs: Vec<String> = (0..p.len())
                .filter(|&i| i <= perp[i])
                .map(|i| format!("{}:{}", p.label(i), p.label(perp[i])))
                .collect();
            s.push_str(&format!("ortho {}\n", pairs.join(" ")));
        }
        for (key, values) in [("valuation", &self.valuation), ("prob", &self.prob)] {
            if let Some(v) = values {
                let items: Vec<String> = v.iter().enumerate().map(|(i, r)| format!("{}={}", p.label(i), r)).collect();
                s.push_str(&format!("{key} {}\n", items.join(" ")));
            }
        }
        if let Some(neg) = &self.negation {
            let items: Vec<String> = neg.iter().enumerate().map(|(i, &j)| format!("{}->{}", p.label(i), p.label(j))).collect();
            s.push_str(&format!("negation {}\n", items.join(" ")));
        }
        s
    }
}

fn err(line: usize, column: usize, message: impl Into<String>) -> ParseError {
    ParseError { line, column, message: message.into() }
}

/// Whitespace-separated tokens with their 1-based character columns.
fn tokens(line: &str) -> Vec<(usize, &str)> {
    let mut out = Vec::new();
    let mut start: Option<(usize, usize)> = None;
    for (col, (byte, c)) in line.char_indices().enumerate() {
        match (c.is_whitespace(), start) {
            (false, None) => start = Some((col + 1, byte)),
            (true, Some((sc, sb))) => {
                out.push((sc, &line[sb..byte]));
                start = None;
            }
            _ => {}
        }
    }
    if let Some((sc, sb)) = start {
        out.push((sc, &line[sb..]));
    }
    out
}

struct Partial<T> {
    values: Vec<Option<T>>,
    /// Position of the first stanza keyword, for totality errors.
    at: (usize, usize),
}

impl<T: Clone> Partial<T> {
    fn finish(self, what: &str, labels: &[String]) -> Result<Vec<T>, ParseError> {
        match self.values.iter().position(Option::is_none) {
            Some(i) => Err(err(self.at.0, self.at.1, format!("{what} has no entry for `{}`", labels[i]))),
            None => Ok(self.values.into_iter().map(|v| v.expect("checked")).collect()),
        }
    }
}

fn set<T: PartialEq + Clone>(
    part: &mut Option<Partial<T>>,
    n: usize,
    at: (usize, usize),
    i: usize,
    v: T,
    what: &str,
    label: &str,
) -> Result<(), ParseError> {
    let p = part.get_or_insert_with(|| Partial { values: vec![None; n], at });
    match &p.values[i] {
        Some(old) if *old != v => Err(err(at.0, at.1, format!("conflicting {what} entries for `{label}`"))),
        _ => {
            p.values[i] = Some(v);
            Ok(())
        }
    }
}

pub fn parse_lattice_text(src: &str) -> Result<LatticeDoc, ParseError> {
    let mut name = String::new();
    let mut labels: Option<Vec<String>> = None;
    let mut index: HashMap<String, usize> = HashMap::new();
    let mut covers: Vec<(usize, usize)> = Vec::new();
    let mut covers_at = (1, 1);
    let mut ortho: Option<Partial<usize>> = None;
    let mut valuation: Option<Partial<Rational>> = None;
    let mut prob: Option<Partial<Rational>> = None;
    let mut negation: Option<Partial<usize>> = None;

    for (ln, raw) in src.lines().enumerate() {
        let line_no = ln + 1;
        let line = raw.split('#').next().unwrap_or("");
        let toks = tokens(line);
        let Some(&(kcol, keyword)) = toks.first() else { continue };
        let args = &toks[1..];
        if keyword == "lattice" {
            if args.len() != 1 {
                return Err(err(line_no, kcol, "`lattice` takes exactly one name"));
            }
            name = args[0].1.to_string();
            continue;
        }
        if keyword == "elements" {
            if labels.is_some() {
                return Err(err(line_no, kcol, "`elements` given twice"));
            }
            let mut ls = Vec::new();
            for &(col, t) in args {
                if index.insert(t.to_string(), ls.len()).is_some() {
                    return Err(err(line_no, col, format!("duplicate element `{t}`")));
                }
                ls.push(t.to_string());
            }
            if ls.is_empty() {
                return Err(err(line_no, kcol, "`elements` lists nothing"));
            }
            labels = Some(ls);
            continue;
        }
        let Some(ls) = &labels else {
            return Err(err(line_no, kcol, format!("`{keyword}` before `elements`")));
        };
        let n = ls.len();
        let lookup = |col: usize, t: &str| -> Result<usize, ParseError> {
            index.get(t).copied().ok_or_else(|| err(line_no, col, format!("unknown element `{t}`")))
        };
        let split = |col: usize, t: &str, sep: &str| -> Result<(String, String), ParseError> {
            match t.split_once(sep) {
                Some((a, b)) if !a.is_empty() && !b.is_empty() => Ok((a.to_string(), b.to_string())),
                _ => Err(err(line_no, col, format!("expected `a{sep}b`, found `{t}`"))),
            }
        };
        let at = (line_no, kcol);
        match keyword {
            "covers" => {
                if covers.is_empty() {
                    covers_at = at;
                }
                for &(col, t) in args {
                    let (a, b) = split(col, t, "<")?;
                    covers.push((lookup(col, &a)?, lookup(col, &b)?));
                }
            }
            "ortho" => {
                for &(col, t) in args {
                    let (a, b) = split(col, t, ":")?;
                    let (i, j) = (lookup(col, &a)?, lookup(col, &b)?);
                    set(&mut ortho, n, (line_no, col), i, j, "ortho", &a)?;
                    set(&mut ortho, n, (line_no, col), j, i, "ortho", &b)?;
                }
                if let Some(o) = &mut ortho {
                    o.at = o.at.min(at);
                }
            }
            "negation" => {
                for &(col, t) in args {
                    let (a, b) = split(col, t, "->")?;
                    let (i, j) = (lookup(col, &a)?, lookup(col, &b)?);
                    set(&mut negation, n, at, i, j, "negation", &a)?;
                }
            }
            "valuation" | "prob" => {
                let target = if keyword == "prob" { &mut prob } else { &mut valuation };
                for &(col, t) in args {
                    let (a, r) = split(col, t, "=")?;
                    let i = lookup(col, &a)?;
                    let value: Rational = r
                        .parse()
                        .map_err(|_| err(line_no, col + a.chars().count() + 1, format!("bad rational `{r}`")))?;
                    set(target, n, at, i, value, keyword, &a)?;
                }
            }
            other => return Err(err(line_no, kcol, format!("unknown stanza `{other}`"))),
        }
    }

    let labels = labels.ok_or_else(|| err(src.lines().count().max(1), 1, "missing `elements`"))?;
    let poset = FinitePoset::from_cover_indices(labels.clone(), &covers)
        .map_err(|e| err(covers_at.0, covers_at.1, e.to_string()))?;
    Ok(LatticeDoc {
        name,
        ortho: ortho.map(|p| p.finish("ortho", &labels)).transpose()?,
        valuation: valuation.map(|p| p.finish("valuation", &labels)).transpose()?,
        prob: prob.map(|p| p.finish("prob", &labels)).transpose()?,
        negation: negation.map(|p| p.finish("negation", &labels)).transpose()?,
        poset,
    })
}
