//! Small named lattices used throughout the crate and its tests.

use crate::boolean::format_mask;
use crate::lattice::FiniteLattice;
use crate::poset::FinitePoset;

fn build(labels: &[&str], covers: &[(&str, &str)]) -> FiniteLattice {
    FiniteLattice::from_covers(labels, covers).expect("catalog lattice is well formed")
}

/// The pentagon.
pub fn n5() -> FiniteLattice {
    build(
        &["0", "a", "b", "p", "1"],
        &[("0", "a"), ("a", "b"), ("b", "1"), ("0", "p"), ("p", "1")],
    )
}

/// The diamond.
pub fn m3() -> FiniteLattice {
    build(
        &["0", "p", "q", "r", "1"],
        &[("0", "p"), ("0", "q"), ("0", "r"), ("p", "1"), ("q", "1"), ("r", "1")],
    )
}

/// The benzene ring; `x'` is the orthocomplement of `x`.
pub fn o6() -> FiniteLattice {
    build(
        &["0", "p", "q", "q'", "p'", "1"],
        &[("0", "p"), ("0", "q"), ("p", "q'"), ("q", "p'"), ("p'", "1"), ("q'", "1")],
    )
}

/// Orthocomplement pairs of [`o6`].
pub const O6_ORTHO: [(&str, &str); 3] = [("0", "1"), ("p", "p'"), ("q", "q'")];

/// Four middle elements between 0 and 1.
pub fn m4() -> FiniteLattice {
    build(
        &["0", "a", "b", "a'", "b'", "1"],
        &[
            ("0", "a"),
            ("0", "b"),
            ("0", "a'"),
            ("0", "b'"),
            ("a", "1"),
            ("b", "1"),
            ("a'", "1"),
            ("b'", "1"),
        ],
    )
}

/// Orthocomplement pairs of [`m4`].
pub const M4_ORTHO: [(&str, &str); 3] = [("0", "1"), ("a", "a'"), ("b", "b'")];

/// Width-4, height-3 lattice whose maximal chains are 0<a<p<1, 0<b<p<1, 0<c<p<1, 0<c<q<1, 0<c<r<1.
pub fn fig2() -> FiniteLattice {
    build(
        &["0", "a", "b", "c", "p", "q", "r", "1"],
        &[
            ("0", "a"),
            ("0", "b"),
            ("0", "c"),
            ("a", "p"),
            ("b", "p"),
            ("c", "p"),
            ("c", "q"),
            ("c", "r"),
            ("p", "1"),
            ("q", "1"),
            ("r", "1"),
        ],
    )
}

/// Chain with `k` elements labelled `0..k`.
pub fn chain(k: usize) -> FiniteLattice {
    let labels: Vec<String> = (0..k).map(|i| i.to_string()).collect();
    let covers: Vec<(usize, usize)> = (1..k).map(|i| (i - 1, i)).collect();
    let poset = FinitePoset::from_cover_indices(labels, &covers).expect("chain is well formed");
    FiniteLattice::from_poset(poset).expect("chain is a lattice")
}

/// Three-element chain `0 < m < 1`.
pub fn chain3() -> FiniteLattice {
    build(&["0", "m", "1"], &[("0", "m"), ("m", "1")])
}

/// Powerset of `{1..n}` under inclusion, elements in increasing bitmask order.
pub fn powerset(n: usize) -> FiniteLattice {
    assert!(n <= 10, "powerset catalog is limited to 10 atoms");
    let size = 1usize << n;
    let labels: Vec<String> = (0..size).map(|m| format_mask(m as u32)).collect();
    let poset = FinitePoset::from_order_fn(labels, |a, b| a & !b == 0).expect("inclusion is an order");
    FiniteLattice::from_poset(poset).expect("powerset is a lattice")
}

/// `n` pairwise incomparable elements.
pub fn antichain(n: usize) -> FinitePoset {
    let labels: Vec<String> = (0..n).map(|i| format!("e{i}")).collect();
    FinitePoset::from_cover_indices(labels, &[]).expect("antichain is well formed")
}

/// Divisibility order on {1, 2, 3, 5, 7, 6, 30, 210}.
pub fn primorial_divisors() -> FiniteLattice {
    let values: [u64; 8] = [1, 2, 3, 5, 7, 6, 30, 210];
    let labels = values.iter().map(u64::to_string).collect();
    let poset = FinitePoset::from_order_fn(labels, |a, b| values[b] % values[a] == 0)
        .expect("divisibility is an order");
    FiniteLattice::from_poset(poset).expect("restricted divisibility order is a lattice")
}
