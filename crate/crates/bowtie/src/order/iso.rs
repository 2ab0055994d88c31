//! Isomorphism search for small finite structures.
//!
//! A [`Structure`] packages a carrier with named operation tables,
//! relations, and constants. [`find_isomorphism`] looks for a bijection
//! commuting with all of them by backtracking, pruned by iterated
//! fingerprints (degree counts and neighbourhood profiles, which subsume
//! the usual degree and height invariants). Carriers are expected to be
//! small; nothing here tries to be clever beyond that.

use std::collections::hash_map::DefaultHasher;
use std::hash::{Hash, Hasher};

use super::FiniteLattice;

/// A finite carrier with named tables to be preserved by isomorphisms.
#[derive(Debug, Clone)]
pub struct Structure {
    size: usize,
    binary: Vec<(String, Vec<usize>)>,
    unary: Vec<(String, Vec<usize>)>,
    relations: Vec<(String, Vec<bool>)>,
    constants: Vec<(String, usize)>,
}

impl Structure {
    /// An empty signature over `size` elements.
    pub fn new(size: usize) -> Self {
        Structure {
            size,
            binary: Vec::new(),
            unary: Vec::new(),
            relations: Vec::new(),
            constants: Vec::new(),
        }
    }

    /// Carrier size.
    pub fn size(&self) -> usize {
        self.size
    }

    /// Adds a binary operation given as a row-major `size * size` table.
    pub fn with_binary(mut self, name: &str, table: Vec<usize>) -> Self {
        assert_eq!(table.len(), self.size * self.size);
        self.binary.push((name.to_string(), table));
        self
    }

    /// Adds a unary operation.
    pub fn with_unary(mut self, name: &str, table: Vec<usize>) -> Self {
        assert_eq!(table.len(), self.size);
        self.unary.push((name.to_string(), table));
        self
    }

    /// Adds a binary relation given as a row-major boolean matrix.
    pub fn with_relation(mut self, name: &str, matrix: Vec<bool>) -> Self {
        assert_eq!(matrix.len(), self.size * self.size);
        self.relations.push((name.to_string(), matrix));
        self
    }

    /// Adds a distinguished element.
    pub fn with_constant(mut self, name: &str, element: usize) -> Self {
        assert!(element < self.size);
        self.constants.push((name.to_string(), element));
        self
    }

    /// The full lattice signature: meet, join, the order relation, and both
    /// bounds.
    pub fn of_lattice(l: &FiniteLattice) -> Self {
        let n = l.len();
        let mut meet = Vec::with_capacity(n * n);
        let mut join = Vec::with_capacity(n * n);
        let mut leq = Vec::with_capacity(n * n);
        for a in 0..n {
            for b in 0..n {
                meet.push(l.meet(a, b));
                join.push(l.join(a, b));
                leq.push(l.leq(a, b));
            }
        }
        Structure::new(n)
            .with_binary("meet", meet)
            .with_binary("join", join)
            .with_relation("leq", leq)
            .with_constant("bottom", l.bottom())
            .with_constant("top", l.top())
    }

    fn same_signature(&self, other: &Structure) -> bool {
        self.size == other.size
            && self.binary.len() == other.binary.len()
            && self.unary.len() == other.unary.len()
            && self.relations.len() == other.relations.len()
            && self.constants.len() == other.constants.len()
            && self
                .binary
                .iter()
                .zip(&other.binary)
                .all(|((a, _), (b, _))| a == b)
            && self
                .unary
                .iter()
                .zip(&other.unary)
                .all(|((a, _), (b, _))| a == b)
            && self
                .relations
                .iter()
                .zip(&other.relations)
                .all(|((a, _), (b, _))| a == b)
            && self
                .constants
                .iter()
                .zip(&other.constants)
                .all(|((a, _), (b, _))| a == b)
    }

    /// Iterated invariant fingerprints; isomorphic elements get equal values.
    fn fingerprints(&self) -> Vec<u64> {
        let n = self.size;
        let mut fp: Vec<u64> = (0..n)
            .map(|x| {
                let mut h = DefaultHasher::new();
                for (_, c) in &self.constants {
                    (*c == x).hash(&mut h);
                }
                for (_, u) in &self.unary {
                    (u[x] == x).hash(&mut h);
                }
                for (_, t) in &self.binary {
                    (t[x * n + x] == x).hash(&mut h);
                    let as_result = t.iter().filter(|&&r| r == x).count();
                    as_result.hash(&mut h);
                }
                for (_, r) in &self.relations {
                    let out = (0..n).filter(|&y| r[x * n + y]).count();
                    let inn = (0..n).filter(|&y| r[y * n + x]).count();
                    out.hash(&mut h);
                    inn.hash(&mut h);
                }
                h.finish()
            })
            .collect();
        for _ in 0..2 {
            fp = (0..n)
                .map(|x| {
                    let mut h = DefaultHasher::new();
                    fp[x].hash(&mut h);
                    for (_, u) in &self.unary {
                        fp[u[x]].hash(&mut h);
                    }
                    for (_, t) in &self.binary {
                        let mut row: Vec<u64> = (0..n).map(|y| fp[t[x * n + y]]).collect();
                        row.sort_unstable();
                        row.hash(&mut h);
                    }
                    for (_, r) in &self.relations {
                        let mut out: Vec<u64> =
                            (0..n).filter(|&y| r[x * n + y]).map(|y| fp[y]).collect();
                        out.sort_unstable();
                        out.hash(&mut h);
                        let mut inn: Vec<u64> =
                            (0..n).filter(|&y| r[y * n + x]).map(|y| fp[y]).collect();
                        inn.sort_unstable();
                        inn.hash(&mut h);
                    }
                    h.finish()
                })
                .collect();
        }
        fp
    }

    /// Full commutation check for a candidate bijection.
    fn respects(&self, other: &Structure, map: &[usize]) -> bool {
        let n = self.size;
        for ((_, c), (_, d)) in self.constants.iter().zip(&other.constants) {
            if map[*c] != *d {
                return false;
            }
        }
        for ((_, u), (_, v)) in self.unary.iter().zip(&other.unary) {
            for x in 0..n {
                if map[u[x]] != v[map[x]] {
                    return false;
                }
            }
        }
        for ((_, t), (_, s)) in self.binary.iter().zip(&other.binary) {
            for x in 0..n {
                for y in 0..n {
                    if map[t[x * n + y]] != s[map[x] * n + map[y]] {
                        return false;
                    }
                }
            }
        }
        for ((_, r), (_, q)) in self.relations.iter().zip(&other.relations) {
            for x in 0..n {
                for y in 0..n {
                    if r[x * n + y] != q[map[x] * n + map[y]] {
                        return false;
                    }
                }
            }
        }
        true
    }
}

/// All isomorphisms from `a` to `b`, as tables indexed by `a`-elements.
pub fn find_isomorphisms(a: &Structure, b: &Structure) -> Vec<Vec<usize>> {
    search(a, b, usize::MAX)
}

/// One isomorphism from `a` to `b`, if any exists.
pub fn find_isomorphism(a: &Structure, b: &Structure) -> Option<Vec<usize>> {
    search(a, b, 1).into_iter().next()
}

fn search(a: &Structure, b: &Structure, limit: usize) -> Vec<Vec<usize>> {
    if !a.same_signature(b) {
        return Vec::new();
    }
    let n = a.size;
    if n == 0 {
        return vec![Vec::new()];
    }
    let fa = a.fingerprints();
    let fb = b.fingerprints();
    let mut sa = fa.clone();
    let mut sb = fb.clone();
    sa.sort_unstable();
    sb.sort_unstable();
    if sa != sb {
        return Vec::new();
    }
    let candidates: Vec<Vec<usize>> = (0..n)
        .map(|x| (0..n).filter(|&y| fa[x] == fb[y]).collect())
        .collect();
    // Assign the most constrained elements first; ties keep index order so
    // the first mapping found is deterministic.
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&x| (candidates[x].len(), x));

    let mut map = vec![usize::MAX; n];
    let mut used = vec![false; n];
    let mut found = Vec::new();
    assign(a, b, &candidates, &order, 0, &mut map, &mut used, &mut found, limit);
    found
}

#[allow(clippy::too_many_arguments)]
fn assign(
    a: &Structure,
    b: &Structure,
    candidates: &[Vec<usize>],
    order: &[usize],
    depth: usize,
    map: &mut Vec<usize>,
    used: &mut Vec<bool>,
    found: &mut Vec<Vec<usize>>,
    limit: usize,
) {
    if found.len() >= limit {
        return;
    }
    if depth == order.len() {
        if a.respects(b, map) {
            found.push(map.clone());
        }
        return;
    }
    let x = order[depth];
    for &y in &candidates[x] {
        if used[y] {
            continue;
        }
        map[x] = y;
        used[y] = true;
        if consistent(a, b, map, x) {
            assign(a, b, candidates, order, depth + 1, map, used, found, limit);
        }
        used[y] = false;
        map[x] = usize::MAX;
    }
}

/// Checks every constraint touching `x` that is decidable on the partial map.
fn consistent(a: &Structure, b: &Structure, map: &[usize], x: usize) -> bool {
    let n = a.size;
    let fx = map[x];
    for ((_, c), (_, d)) in a.constants.iter().zip(&b.constants) {
        if *c == x && fx != *d {
            return false;
        }
        if *c != x && fx == *d && map[*c] == usize::MAX {
            // The constant's image is taken by a non-constant element.
            return false;
        }
    }
    for ((_, u), (_, v)) in a.unary.iter().zip(&b.unary) {
        for z in 0..n {
            if map[z] == usize::MAX {
                continue;
            }
            if map[u[z]] != usize::MAX && map[u[z]] != v[map[z]] {
                return false;
            }
        }
    }
    for ((_, t), (_, s)) in a.binary.iter().zip(&b.binary) {
        for z in 0..n {
            if map[z] == usize::MAX {
                continue;
            }
            for w in [x] {
                let (p, q) = (t[z * n + w], t[w * n + z]);
                if map[p] != usize::MAX && map[p] != s[map[z] * n + map[w]] {
                    return false;
                }
                if map[q] != usize::MAX && map[q] != s[map[w] * n + map[z]] {
                    return false;
                }
            }
        }
    }
    for ((_, r), (_, q)) in a.relations.iter().zip(&b.relations) {
        for z in 0..n {
            if map[z] == usize::MAX {
                continue;
            }
            if r[z * n + x] != q[map[z] * n + fx] || r[x * n + z] != q[fx * n + map[z]] {
                return false;
            }
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::super::fixtures::*;
    use super::*;

    #[test]
    fn chain_is_isomorphic_to_itself_uniquely() {
        let c = Structure::of_lattice(&chain(4));
        let all = find_isomorphisms(&c, &c);
        assert_eq!(all.len(), 1);
        assert_eq!(all[0], vec![0, 1, 2, 3]);
    }

    #[test]
    fn square_has_the_swap_automorphism() {
        let s = Structure::of_lattice(&square());
        let all = find_isomorphisms(&s, &s);
        // Identity and the coordinate swap.
        assert_eq!(all.len(), 2);
    }

    #[test]
    fn m3_automorphisms_are_the_atom_permutations() {
        let s = Structure::of_lattice(&m3());
        assert_eq!(find_isomorphisms(&s, &s).len(), 6);
    }

    #[test]
    fn chain_and_square_are_not_isomorphic() {
        let a = Structure::of_lattice(&chain(4));
        let b = Structure::of_lattice(&square());
        assert!(find_isomorphism(&a, &b).is_none());
    }

    #[test]
    fn m3_and_n5_are_not_isomorphic() {
        let a = Structure::of_lattice(&m3());
        let b = Structure::of_lattice(&n5());
        assert!(find_isomorphism(&a, &b).is_none());
    }

    #[test]
    fn relabelled_square_is_found_isomorphic() {
        use crate::order::build_lattice;
        let relabelled = build_lattice(
            "box",
            &["lo", "east", "west", "hi"],
            &[("lo", "east"), ("lo", "west"), ("east", "hi"), ("west", "hi")],
        )
        .unwrap();
        let a = Structure::of_lattice(&square());
        let b = Structure::of_lattice(&relabelled);
        let map = find_isomorphism(&a, &b).unwrap();
        assert_eq!(map[0], 0);
        assert_eq!(map[3], 3);
    }

    #[test]
    fn signature_mismatch_finds_nothing() {
        let a = Structure::of_lattice(&two());
        let b = Structure::new(2).with_constant("bottom", 0);
        assert!(find_isomorphism(&a, &b).is_none());
    }
}
