//! Small named lattices used throughout the test suites and the book.

use super::{build_lattice, FiniteLattice};

/// The `n`-element chain `0 < 1 < ... < n-1`. Panics when `n` is zero.
pub fn chain(n: usize) -> FiniteLattice {
    assert!(n > 0, "a chain needs at least one element");
    let names: Vec<String> = (0..n).map(|i| i.to_string()).collect();
    let refs: Vec<&str> = names.iter().map(|s| s.as_str()).collect();
    let pairs: Vec<(&str, &str)> = (1..n).map(|i| (refs[i - 1], refs[i])).collect();
    build_lattice(&format!("c{n}"), &refs, &pairs).expect("chains are lattices")
}

/// The two-element lattice `0 < 1`.
pub fn two() -> FiniteLattice {
    chain(2)
}

/// The product of two lattices; elements are named `(a,b)`.
pub fn product(a: &FiniteLattice, b: &FiniteLattice, name: &str) -> FiniteLattice {
    let mut names = Vec::new();
    for x in a.element_names() {
        for y in b.element_names() {
            names.push(format!("({x},{y})"));
        }
    }
    let refs: Vec<&str> = names.iter().map(|s| s.as_str()).collect();
    let mut pairs = Vec::new();
    for xa in 0..a.len() {
        for ya in 0..b.len() {
            for xb in 0..a.len() {
                for yb in 0..b.len() {
                    if a.leq(xa, xb) && b.leq(ya, yb) {
                        pairs.push((refs[xa * b.len() + ya], refs[xb * b.len() + yb]));
                    }
                }
            }
        }
    }
    build_lattice(name, &refs, &pairs).expect("products of lattices are lattices")
}

/// The four-element Boolean lattice, as the square `2 x 2`.
pub fn square() -> FiniteLattice {
    product(&two(), &two(), "2x2")
}

/// The six-element distributive lattice `2 x 3`.
pub fn two_by_three() -> FiniteLattice {
    product(&two(), &chain(3), "2x3")
}

/// The diamond `M3`: three incomparable atoms between bottom and top. The
/// smallest modular non-distributive lattice.
pub fn m3() -> FiniteLattice {
    build_lattice(
        "m3",
        &["0", "a", "b", "c", "1"],
        &[("0", "a"), ("0", "b"), ("0", "c"), ("a", "1"), ("b", "1"), ("c", "1")],
    )
    .expect("m3 is a lattice")
}

/// The pentagon `N5`: the smallest non-modular lattice.
pub fn n5() -> FiniteLattice {
    build_lattice(
        "n5",
        &["0", "a", "b", "c", "1"],
        &[("0", "a"), ("a", "c"), ("c", "1"), ("0", "b"), ("b", "1")],
    )
    .expect("n5 is a lattice")
}
