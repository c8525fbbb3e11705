//! Sums, products, exponentials and duals of finite ordered sets.

use std::collections::HashSet;

use crate::error::ComposeError;
use crate::poset::FinitePoset;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Composition {
    DirectSum,
    DirectProduct,
    OrdinalSum,
    OrdinalProduct,
    /// `Q^P`: order-preserving maps from the first operand into the second.
    Exponential,
    /// Dual of the first operand; the second is ignored.
    Dual,
}

impl std::str::FromStr for Composition {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Ok(match s {
            "direct-sum" | "sum" => Composition::DirectSum,
            "direct-product" | "product" => Composition::DirectProduct,
            "ordinal-sum" => Composition::OrdinalSum,
            "ordinal-product" => Composition::OrdinalProduct,
            "exponential" => Composition::Exponential,
            "dual" => Composition::Dual,
            other => return Err(format!("unknown composition `{other}`")),
        })
    }
}

/// Size bound for products and exponentials.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ComposeLimits {
    pub max_elements: usize,
}

impl Default for ComposeLimits {
    fn default() -> Self {
        ComposeLimits { max_elements: 4096 }
    }
}

pub fn compose(
    p: &FinitePoset,
    q: &FinitePoset,
    op: Composition,
    limits: ComposeLimits,
) -> Result<FinitePoset, ComposeError> {
    match op {
        Composition::DirectSum => direct_sum(p, q),
        Composition::DirectProduct => direct_product(p, q, limits),
        Composition::OrdinalSum => ordinal_sum(p, q),
        Composition::OrdinalProduct => ordinal_product(p, q, limits),
        Composition::Exponential => exponential(p, q, limits),
        Composition::Dual => Ok(p.dual()),
    }
}

fn check_disjoint(p: &FinitePoset, q: &FinitePoset) -> Result<(), ComposeError> {
    let seen: HashSet<&str> = p.labels().iter().map(String::as_str).collect();
    match q.labels().iter().find(|l| seen.contains(l.as_str())) {
        Some(l) => Err(ComposeError::NotDisjoint(l.clone())),
        None => Ok(()),
    }
}

fn check_cap(size: u128, limits: ComposeLimits) -> Result<(), ComposeError> {
    if size > limits.max_elements as u128 {
        Err(ComposeError::SizeCap { size, cap: limits.max_elements })
    } else {
        Ok(())
    }
}

fn concat_labels(p: &FinitePoset, q: &FinitePoset) -> Vec<String> {
    p.labels().iter().chain(q.labels()).cloned().collect()
}

/// Disjoint union; elements of different operands are incomparable.
pub fn direct_sum(p: &FinitePoset, q: &FinitePoset) -> Result<FinitePoset, ComposeError> {
    check_disjoint(p, q)?;
    let np = p.len();
    Ok(FinitePoset::from_order_fn(concat_labels(p, q), |a, b| match (a < np, b < np) {
        (true, true) => p.leq(a, b),
        (false, false) => q.leq(a - np, b - np),
        _ => false,
    })?)
}

/// Every element of the first operand lies below every element of the second.
pub fn ordinal_sum(p: &FinitePoset, q: &FinitePoset) -> Result<FinitePoset, ComposeError> {
    check_disjoint(p, q)?;
    let np = p.len();
    Ok(FinitePoset::from_order_fn(concat_labels(p, q), |a, b| match (a < np, b < np) {
        (true, true) => p.leq(a, b),
        (false, false) => q.leq(a - np, b - np),
        (true, false) => true,
        (false, true) => false,
    })?)
}

fn pair_labels(p: &FinitePoset, q: &FinitePoset) -> Vec<String> {
    let mut labels = Vec::with_capacity(p.len() * q.len());
    for x in p.labels() {
        for y in q.labels() {
            labels.push(format!("({x},{y})"));
        }
    }
    labels
}

/// Coordinatewise order on pairs, first coordinate major.
pub fn direct_product(p: &FinitePoset, q: &FinitePoset, limits: ComposeLimits) -> Result<FinitePoset, ComposeError> {
    check_cap(p.len() as u128 * q.len() as u128, limits)?;
    let nq = q.len();
    Ok(FinitePoset::from_order_fn(pair_labels(p, q), |a, b| {
        p.leq(a / nq, b / nq) && q.leq(a % nq, b % nq)
    })?)
}

/// Lexicographic order: compare first coordinates strictly, break ties by the second.
pub fn ordinal_product(p: &FinitePoset, q: &FinitePoset, limits: ComposeLimits) -> Result<FinitePoset, ComposeError> {
    check_cap(p.len() as u128 * q.len() as u128, limits)?;
    let nq = q.len();
    Ok(FinitePoset::from_order_fn(pair_labels(p, q), |a, b| {
        let (x1, y1, x2, y2) = (a / nq, a % nq, b / nq, b % nq);
        p.lt(x1, x2) || (x1 == x2 && q.leq(y1, y2))
    })?)
}

/// Order-preserving maps `p -> q` under the pointwise order.
///
/// Maps are listed in lexicographic order of their value vectors and labelled
/// `[f(x1),f(x2),...]` following the declared order of `p`.
pub fn exponential(p: &FinitePoset, q: &FinitePoset, limits: ComposeLimits) -> Result<FinitePoset, ComposeError> {
    let candidates = (q.len() as u128).checked_pow(p.len() as u32).unwrap_or(u128::MAX);
    check_cap(candidates, limits)?;
    let maps = order_preserving_maps(p, q);
    let labels = maps
        .iter()
        .map(|f| {
            let vals: Vec<&str> = f.iter().map(|&y| q.label(y)).collect();
            format!("[{}]", vals.join(","))
        })
        .collect();
    Ok(FinitePoset::from_order_fn(labels, |a, b| {
        maps[a].iter().zip(&maps[b]).all(|(&fa, &fb)| q.leq(fa, fb))
    })?)
}

/// All monotone maps as value vectors indexed by `p`'s elements.
pub fn order_preserving_maps(p: &FinitePoset, q: &FinitePoset) -> Vec<Vec<usize>> {
    fn go(p: &FinitePoset, q: &FinitePoset, i: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if i == p.len() {
            out.push(cur.clone());
            return;
        }
        for y in 0..q.len() {
            let ok = (0..i).all(|j| {
                (!p.leq(j, i) || q.leq(cur[j], y)) && (!p.leq(i, j) || q.leq(y, cur[j]))
            });
            if ok {
                cur.push(y);
                go(p, q, i + 1, cur, out);
                cur.pop();
            }
        }
    }
    let mut out = Vec::new();
    go(p, q, 0, &mut Vec::with_capacity(p.len()), &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;
    use crate::iso::is_isomorphic;

    fn chain(k: usize, prefix: &str) -> FinitePoset {
        catalog::chain(k).poset().with_prefix(prefix)
    }

    #[test]
    fn ordinal_sum_of_points_is_a_chain() {
        let s = ordinal_sum(&chain(1, "a"), &chain(1, "b")).unwrap();
        assert!(is_isomorphic(&s, &chain(2, "c")).is_some());
    }

    #[test]
    fn ordinal_product_of_two_chains() {
        let s = ordinal_product(&chain(2, "a"), &chain(2, "b"), ComposeLimits::default()).unwrap();
        assert!(is_isomorphic(&s, &chain(4, "c")).is_some());
    }

    #[test]
    fn exponential_of_two_chains() {
        let two = chain(2, "");
        let e = exponential(&two, &two, ComposeLimits::default()).unwrap();
        assert_eq!(e.labels(), ["[0,0]", "[0,1]", "[1,1]"]);
        assert!(is_isomorphic(&e, &chain(3, "")).is_some());
    }

    #[test]
    fn product_matches_square() {
        let sq = direct_product(&chain(2, "a"), &chain(2, "b"), ComposeLimits::default()).unwrap();
        assert!(is_isomorphic(&sq, catalog::powerset(2).poset()).is_some());
    }

    #[test]
    fn clashes_and_caps() {
        let a = chain(2, "");
        assert_eq!(direct_sum(&a, &a).unwrap_err(), ComposeError::NotDisjoint("0".into()));
        let big = catalog::antichain(13);
        let err = exponential(&big, &a, ComposeLimits::default()).unwrap_err();
        assert_eq!(err, ComposeError::SizeCap { size: 8192, cap: 4096 });
    }
}
