//! Order isomorphism and canonical forms.

use crate::poset::FinitePoset;

/// Isomorphism-invariant fingerprint of one element.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ElementKey {
    pub height: usize,
    pub below: usize,
    pub above: usize,
    pub lower_covers: usize,
    pub upper_covers: usize,
}

pub fn element_keys(p: &FinitePoset) -> Vec<ElementKey> {
    let heights = p.heights();
    (0..p.len())
        .map(|i| ElementKey {
            height: heights[i],
            below: (0..p.len()).filter(|&j| p.lt(j, i)).count(),
            above: (0..p.len()).filter(|&j| p.lt(i, j)).count(),
            lower_covers: p.lower_covers(i).len(),
            upper_covers: p.upper_covers(i).len(),
        })
        .collect()
}

/// An order isomorphism `f` with `f[i]` the image of `p`'s element `i` in `q`.
///
/// Backtracking over elements in declared order; candidates are tried in `q`'s declared order,
/// so the result is deterministic.
pub fn is_isomorphic(p: &FinitePoset, q: &FinitePoset) -> Option<Vec<usize>> {
    let n = p.len();
    if n != q.len() || p.cover_pairs().len() != q.cover_pairs().len() {
        return None;
    }
    let kp = element_keys(p);
    let kq = element_keys(q);
    let mut sp = kp.clone();
    let mut sq = kq.clone();
    sp.sort();
    sq.sort();
    if sp != sq {
        return None;
    }
    let mut map = vec![usize::MAX; n];
    let mut used = vec![false; n];
    fn go(
        i: usize,
        p: &FinitePoset,
        q: &FinitePoset,
        kp: &[ElementKey],
        kq: &[ElementKey],
        map: &mut [usize],
        used: &mut [bool],
    ) -> bool {
        if i == p.len() {
            return true;
        }
        for c in 0..q.len() {
            if used[c] || kp[i] != kq[c] {
                continue;
            }
            let consistent = (0..i).all(|j| {
                p.leq(j, i) == q.leq(map[j], c) && p.leq(i, j) == q.leq(c, map[j])
            });
            if !consistent {
                continue;
            }
            map[i] = c;
            used[c] = true;
            if go(i + 1, p, q, kp, kq, map, used) {
                return true;
            }
            used[c] = false;
        }
        false
    }
    go(0, p, q, &kp, &kq, &mut map, &mut used).then_some(map)
}

/// Label-free canonical encoding: element keys in sorted order followed by the order matrix
/// under the lexicographically least arrangement consistent with that key order.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CanonicalForm {
    pub keys: Vec<ElementKey>,
    pub matrix: Vec<bool>,
}

/// Canonical form plus an arrangement realising it (`arrangement[k]` is the element placed at
/// position `k`).
///
/// Cost grows with the product of factorials of key-class sizes; intended for small carriers.
pub fn canonical_form(p: &FinitePoset) -> (CanonicalForm, Vec<usize>) {
    let keys = element_keys(p);
    let mut order: Vec<usize> = (0..p.len()).collect();
    order.sort_by_key(|&i| (keys[i], i));
    let mut blocks: Vec<(usize, usize)> = Vec::new();
    let mut start = 0;
    for k in 1..=order.len() {
        if k == order.len() || keys[order[k]] != keys[order[start]] {
            blocks.push((start, k));
            start = k;
        }
    }
    let mut best: Option<(Vec<bool>, Vec<usize>)> = None;
    let mut arrangement = order.clone();
    search(p, &blocks, 0, &mut arrangement, &mut best);
    let (matrix, arrangement) = best.unwrap_or_default();
    let sorted_keys = order.iter().map(|&i| keys[i]).collect();
    (CanonicalForm { keys: sorted_keys, matrix }, arrangement)
}

fn search(
    p: &FinitePoset,
    blocks: &[(usize, usize)],
    b: usize,
    arr: &mut Vec<usize>,
    best: &mut Option<(Vec<bool>, Vec<usize>)>,
) {
    if b == blocks.len() {
        let n = arr.len();
        let mut m = Vec::with_capacity(n * n);
        for &i in arr.iter() {
            for &j in arr.iter() {
                m.push(p.leq(i, j));
            }
        }
        if best.as_ref().map_or(true, |(bm, _)| m < *bm) {
            *best = Some((m, arr.clone()));
        }
        return;
    }
    let (lo, hi) = blocks[b];
    permute(p, blocks, b, lo, hi, arr, best);
}

fn permute(
    p: &FinitePoset,
    blocks: &[(usize, usize)],
    b: usize,
    k: usize,
    hi: usize,
    arr: &mut Vec<usize>,
    best: &mut Option<(Vec<bool>, Vec<usize>)>,
) {
    if k + 1 >= hi {
        search(p, blocks, b + 1, arr, best);
        return;
    }
    for s in k..hi {
        arr.swap(k, s);
        permute(p, blocks, b, k + 1, hi, arr, best);
        arr.swap(k, s);
    }
}
