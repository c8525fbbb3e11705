//! Reduction of Boolean levels to half-size Boolean sub-levels, and the bounded difference.

use std::collections::HashMap;

use crate::boolean::{Level, Mask};
use crate::error::PrimorialError;
use crate::ortho::OrthoLattice;

/// Largest level rank reduced by exhaustive pair-subset search.
pub const MAX_EXACT_REDUCE_RANK: usize = 5;

/// Rank `k` when `carrier` under inclusion is order-isomorphic to the powerset of `k` atoms.
pub fn boolean_rank(carrier: &[Mask]) -> Option<usize> {
    let n = carrier.len();
    if n == 0 || !n.is_power_of_two() {
        return None;
    }
    let sub = |a: Mask, b: Mask| a & !b == 0;
    let bottom = *carrier.iter().find(|&&b| carrier.iter().all(|&m| sub(b, m)))?;
    let atoms: Vec<Mask> = carrier
        .iter()
        .copied()
        .filter(|&a| a != bottom && carrier.iter().all(|&m| m == a || m == bottom || !sub(m, a)))
        .collect();
    let k = atoms.len();
    if 1usize << k != n {
        return None;
    }
    let sets: Vec<u32> = carrier
        .iter()
        .map(|&m| atoms.iter().enumerate().filter(|(_, &a)| sub(a, m)).fold(0, |s, (i, _)| s | 1 << i))
        .collect();
    let mut seen = vec![false; n];
    for &s in &sets {
        if std::mem::replace(&mut seen[s as usize], true) {
            return None;
        }
    }
    for (i, &a) in carrier.iter().enumerate() {
        for (j, &b) in carrier.iter().enumerate() {
            if sub(a, b) != (sets[i] & !sets[j] == 0) {
                return None;
            }
        }
    }
    Some(k)
}

/// Parent complement of every carrier element, keyed by mask.
fn complements(parent: &Level) -> HashMap<Mask, Mask> {
    let l = parent.lattice();
    l.elements()
        .map(|i| {
            let c = l.complements_of(i);
            debug_assert_eq!(c.len(), 1, "Boolean levels are uniquely complemented");
            (parent.mask(i), parent.mask(c[0]))
        })
        .collect()
}

fn validated_rank(parent: &Level) -> Result<usize, PrimorialError> {
    let rank = boolean_rank(parent.carrier()).ok_or(PrimorialError::NotBoolean)?;
    if rank < 2 {
        return Err(PrimorialError::AtomCount { n: rank, min: 2, max: crate::boolean::MAX_CARRIER_ATOMS });
    }
    Ok(rank)
}

/// Whether `carrier` (sorted) satisfies the reduction conditions relative to `parent`.
pub fn is_reduction_member(parent: &Level, carrier: &[Mask]) -> bool {
    let Some(rank) = boolean_rank(parent.carrier()) else { return false };
    if rank == 0 || carrier.len() != 1 << (rank - 1) {
        return false;
    }
    let (lo, hi) = (parent.mask(parent.lattice().bottom()), parent.mask(parent.lattice().top()));
    if !carrier.iter().all(|&m| parent.contains(m)) || !carrier.contains(&lo) || !carrier.contains(&hi) {
        return false;
    }
    if boolean_rank(carrier).is_none() {
        return false;
    }
    let Ok(level) = Level::from_carrier(parent.atom_count(), carrier.to_vec()) else { return false };
    let comp = complements(parent);
    let l = level.lattice();
    l.elements().all(|i| l.complements_of(i).into_iter().all(|j| comp[&level.mask(i)] == level.mask(j)))
}

/// Outcome of the exhaustive pair-subset search.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReduceCensus {
    /// Complement pairs of the parent other than the bounds.
    pub pairs: usize,
    /// Pair selections of the required size.
    pub candidates: usize,
    pub accepted: Vec<Level>,
}

/// Tests every selection of `2^(N-2) - 1` parent complement pairs.
pub fn reduce_brute_force(parent: &Level) -> Result<ReduceCensus, PrimorialError> {
    let rank = validated_rank(parent)?;
    let comp = complements(parent);
    let (lo, hi) = (parent.mask(parent.lattice().bottom()), parent.mask(parent.lattice().top()));
    let pairs: Vec<(Mask, Mask)> = parent
        .carrier()
        .iter()
        .copied()
        .filter(|&m| m != lo && m != hi && m < comp[&m])
        .map(|m| (m, comp[&m]))
        .collect();
    let want = (1usize << (rank - 2)) - 1;
    let mut accepted = Vec::new();
    let mut candidates = 0;
    let mut pick = Vec::with_capacity(want);
    combinations(pairs.len(), want, 0, &mut pick, &mut |sel| {
        candidates += 1;
        let mut carrier = vec![lo, hi];
        for &p in sel {
            carrier.extend([pairs[p].0, pairs[p].1]);
        }
        carrier.sort_unstable();
        if is_reduction_member(parent, &carrier) {
            accepted.push(Level::from_carrier(parent.atom_count(), carrier).expect("Boolean carrier"));
        }
    });
    accepted.sort_by(|a, b| a.carrier().cmp(b.carrier()));
    Ok(ReduceCensus { pairs: pairs.len(), candidates, accepted })
}

fn combinations(n: usize, k: usize, start: usize, pick: &mut Vec<usize>, f: &mut dyn FnMut(&[usize])) {
    if pick.len() == k {
        f(pick);
        return;
    }
    let remaining = k - pick.len();
    for i in start..=n.saturating_sub(remaining) {
        if n < remaining {
            break;
        }
        pick.push(i);
        combinations(n, k, i + 1, pick, f);
        pick.pop();
    }
}

/// Builds each half-size Boolean sub-level directly as an order embedding of the powerset of
/// `N - 1` atoms, with atom images increasing to avoid duplicates.
pub fn reduce_backtracking(parent: &Level) -> Result<Vec<Level>, PrimorialError> {
    let rank = validated_rank(parent)?;
    let k = rank - 1;
    let comp = complements(parent);
    let (lo, hi) = (parent.mask(parent.lattice().bottom()), parent.mask(parent.lattice().top()));
    let full: u32 = (1 << k) - 1;
    let mut order: Vec<u32> = (1..full).collect();
    order.sort_by_key(|s| (s.count_ones(), *s));
    let order: Vec<u32> = {
        let mut seen = vec![false; 1 << k];
        order
            .into_iter()
            .filter(|&s| {
                let c = full & !s;
                if seen[s as usize] || seen[c as usize] {
                    return false;
                }
                seen[s as usize] = true;
                seen[c as usize] = true;
                true
            })
            .collect()
    };
    let mut image: Vec<Option<Mask>> = vec![None; 1 << k];
    image[0] = Some(lo);
    image[full as usize] = Some(hi);
    let candidates: Vec<Mask> = parent.carrier().iter().copied().filter(|&m| m != lo && m != hi).collect();
    let mut out = Vec::new();
    let ctx = Ctx { order: &order, candidates: &candidates, comp: &comp, full };
    backtrack(&ctx, 0, &mut image, &mut out);
    let mut levels: Vec<Level> = out
        .into_iter()
        .map(|c| Level::from_carrier(parent.atom_count(), c).expect("Boolean carrier"))
        .collect();
    levels.sort_by(|a, b| a.carrier().cmp(b.carrier()));
    levels.dedup();
    Ok(levels)
}

struct Ctx<'a> {
    order: &'a [u32],
    candidates: &'a [Mask],
    comp: &'a HashMap<Mask, Mask>,
    full: u32,
}

fn fits(image: &[Option<Mask>], s: u32, m: Mask) -> bool {
    image.iter().enumerate().all(|(t, img)| match img {
        None => true,
        Some(e) => {
            let t = t as u32;
            *e != m && (t & !s == 0) == (e & !m == 0) && (s & !t == 0) == (m & !e == 0)
        }
    })
}

fn backtrack(ctx: &Ctx<'_>, pos: usize, image: &mut Vec<Option<Mask>>, out: &mut Vec<Vec<Mask>>) {
    if pos == ctx.order.len() {
        let mut carrier: Vec<Mask> = image.iter().map(|m| m.expect("complete assignment")).collect();
        carrier.sort_unstable();
        out.push(carrier);
        return;
    }
    let s = ctx.order[pos];
    let c = ctx.full & !s;
    for &m in ctx.candidates {
        // Singletons receive increasing images; this removes atom relabellings.
        if s.count_ones() == 1 && s > 1 {
            let prev = image[(s >> 1) as usize].expect("previous atom assigned");
            if m <= prev {
                continue;
            }
        }
        let mc = ctx.comp[&m];
        if !fits(image, s, m) {
            continue;
        }
        image[s as usize] = Some(m);
        if fits(image, c, mc) {
            image[c as usize] = Some(mc);
            backtrack(ctx, pos + 1, image, out);
            image[c as usize] = None;
        }
        image[s as usize] = None;
    }
}

/// All members of the reduction of `parent`, sorted by carrier.
///
/// Ranks above [`MAX_EXACT_REDUCE_RANK`] need `best_effort`, which switches to the
/// backtracking search.
pub fn reduce(parent: &Level, best_effort: bool) -> Result<Vec<Level>, PrimorialError> {
    let rank = validated_rank(parent)?;
    if rank <= MAX_EXACT_REDUCE_RANK {
        return Ok(reduce_brute_force(parent)?.accepted);
    }
    if !best_effort {
        return Err(PrimorialError::NeedsBestEffort { n: rank, max: MAX_EXACT_REDUCE_RANK });
    }
    reduce_backtracking(parent)
}

/// `(X ∖ Y) ∪ {0, 1}` on sorted carriers.
pub fn carrier_difference(x: &[Mask], y: &[Mask], lo: Mask, hi: Mask) -> Vec<Mask> {
    let mut out: Vec<Mask> = x.iter().copied().filter(|m| y.binary_search(m).is_err()).collect();
    out.extend([lo, hi]);
    out.sort_unstable();
    out.dedup();
    out
}

/// Bounded difference `X ⊘ Y` with the inherited order.
pub fn difference(x: &Level, y: &Level) -> Result<Level, PrimorialError> {
    if x.atom_count() != y.atom_count() || !x.contains_bounds() || !y.contains_bounds() {
        return Err(PrimorialError::BoundsNotShared);
    }
    let carrier = carrier_difference(x.carrier(), y.carrier(), 0, x.full());
    Ok(Level::from_carrier(x.atom_count(), carrier)?)
}

/// Attaches set complement to a level closed under it.
pub fn inherited_ortho(level: &Level) -> Result<OrthoLattice, PrimorialError> {
    let perp = level.inherited_ortho().ok_or_else(|| {
        let m = level.carrier().iter().find(|&&m| !level.contains(level.full() & !m)).copied().unwrap_or(0);
        let name = crate::format_mask(m);
        PrimorialError::NotOrthocomplemented(crate::OrthoError {
            axiom: crate::OrthoAxiom::Total,
            witness: (name.clone(), name),
        })
    })?;
    Ok(OrthoLattice::new(level.lattice().clone(), perp)?)
}
