//! Finite lattices given by explicit order data.
//!
//! Everything downstream (twist algebras, Chu pairs, d-frames, semilattice
//! variables) is built over a [`FiniteLattice`]: a carrier of named elements
//! together with a full `leq` matrix and derived meet/join tables. Carriers
//! are expected to stay small (fixtures cap at twelve elements), so every
//! predicate here is an exhaustive scan and several are deliberately
//! exponential; see the individual docs.
//!
//! Elements are addressed by `usize` indices in declared order. All
//! iteration is in index order, which keeps witnesses and rendered tables
//! deterministic.

mod iso;

pub mod fixtures;

pub use iso::{find_isomorphism, find_isomorphisms, Structure};

use thiserror::Error;

/// Errors produced while building or querying lattices.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LatticeError {
    /// The reflexive-transitive closure of the declared pairs is not
    /// antisymmetric; the two named elements sit below each other.
    #[error("not a poset: {0} and {1} are below each other")]
    NotAPoset(String, String),
    /// The poset is missing a meet or join somewhere.
    #[error("not a lattice: {0}")]
    NotALattice(String),
    /// An element id appears twice in the declaration.
    #[error("duplicate element {0}")]
    DuplicateElement(String),
    /// A name lookup failed.
    #[error("unknown element {0}")]
    UnknownElement(String),
    /// Heyting implication was requested in a non-distributive lattice.
    #[error("not a Heyting algebra: distributivity fails at ({0}, {1}, {2})")]
    NotHeyting(String, String, String),
    /// A map declared as a homomorphism is not one.
    #[error("not a lattice homomorphism: {0}")]
    NotAHomomorphism(String),
    /// A map declared injective identifies two elements.
    #[error("not injective: {0} and {1} have the same image")]
    NotInjective(String, String),
}

/// A finite bounded lattice with explicit order and operation tables.
///
/// Construct one with [`build_lattice`], which closes the declared pairs
/// reflexively and transitively and checks that meets, joins, and bounds
/// exist. All tables are total once construction succeeds.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteLattice {
    name: String,
    elements: Vec<String>,
    leq: Vec<bool>,
    meet: Vec<usize>,
    join: Vec<usize>,
    bottom: usize,
    top: usize,
}

/// Builds a lattice from named elements and `a <= b` pairs.
///
/// The pairs are closed under reflexivity and transitivity before checking,
/// so only a generating set (for example the Hasse diagram) needs to be
/// declared. Fails with [`LatticeError::NotAPoset`] when the closure is not
/// antisymmetric and [`LatticeError::NotALattice`] when some pair of
/// elements has no meet or no join.
pub fn build_lattice(
    name: &str,
    elements: &[&str],
    pairs: &[(&str, &str)],
) -> Result<FiniteLattice, LatticeError> {
    let elements: Vec<String> = elements.iter().map(|s| s.to_string()).collect();
    let n = elements.len();
    if n == 0 {
        return Err(LatticeError::NotALattice("empty carrier".into()));
    }
    for (i, e) in elements.iter().enumerate() {
        if elements[..i].contains(e) {
            return Err(LatticeError::DuplicateElement(e.clone()));
        }
    }
    let index = |id: &str| -> Result<usize, LatticeError> {
        elements
            .iter()
            .position(|e| e == id)
            .ok_or_else(|| LatticeError::UnknownElement(id.to_string()))
    };

    let mut leq = vec![false; n * n];
    for i in 0..n {
        leq[i * n + i] = true;
    }
    for (a, b) in pairs {
        leq[index(a)? * n + index(b)?] = true;
    }
    // Warshall closure.
    for k in 0..n {
        for i in 0..n {
            if leq[i * n + k] {
                for j in 0..n {
                    if leq[k * n + j] {
                        leq[i * n + j] = true;
                    }
                }
            }
        }
    }
    for i in 0..n {
        for j in (i + 1)..n {
            if leq[i * n + j] && leq[j * n + i] {
                return Err(LatticeError::NotAPoset(
                    elements[i].clone(),
                    elements[j].clone(),
                ));
            }
        }
    }

    // Meets and joins by scanning for greatest lower / least upper bounds.
    let mut meet = vec![0usize; n * n];
    let mut join = vec![0usize; n * n];
    for a in 0..n {
        for b in 0..n {
            let lower: Vec<usize> = (0..n).filter(|&x| leq[x * n + a] && leq[x * n + b]).collect();
            match lower.iter().find(|&&g| lower.iter().all(|&x| leq[x * n + g])) {
                Some(&g) => meet[a * n + b] = g,
                None => {
                    return Err(LatticeError::NotALattice(format!(
                        "no meet for {} and {}",
                        elements[a], elements[b]
                    )))
                }
            }
            let upper: Vec<usize> = (0..n).filter(|&x| leq[a * n + x] && leq[b * n + x]).collect();
            match upper.iter().find(|&&l| upper.iter().all(|&x| leq[l * n + x])) {
                Some(&l) => join[a * n + b] = l,
                None => {
                    return Err(LatticeError::NotALattice(format!(
                        "no join for {} and {}",
                        elements[a], elements[b]
                    )))
                }
            }
        }
    }
    // A finite lattice is bounded: fold the total meet and join.
    let bottom = (0..n).fold(0, |acc, x| meet[acc * n + x]);
    let top = (0..n).fold(0, |acc, x| join[acc * n + x]);

    Ok(FiniteLattice {
        name: name.to_string(),
        elements,
        leq,
        meet,
        join,
        bottom,
        top,
    })
}

impl FiniteLattice {
    /// The lattice's declared name.
    pub fn name(&self) -> &str {
        &self.name
    }

    /// Number of elements.
    pub fn len(&self) -> usize {
        self.elements.len()
    }

    /// True when the carrier is empty; construction forbids this, so always
    /// false for built lattices.
    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    /// Element names in declared order.
    pub fn element_names(&self) -> &[String] {
        &self.elements
    }

    /// Name of element `i`.
    pub fn element_name(&self, i: usize) -> &str {
        &self.elements[i]
    }

    /// Index of the element named `id`.
    pub fn element_index(&self, id: &str) -> Result<usize, LatticeError> {
        self.elements
            .iter()
            .position(|e| e == id)
            .ok_or_else(|| LatticeError::UnknownElement(id.to_string()))
    }

    /// Order test.
    pub fn leq(&self, a: usize, b: usize) -> bool {
        self.leq[a * self.len() + b]
    }

    /// Greatest lower bound.
    pub fn meet(&self, a: usize, b: usize) -> usize {
        self.meet[a * self.len() + b]
    }

    /// Least upper bound.
    pub fn join(&self, a: usize, b: usize) -> usize {
        self.join[a * self.len() + b]
    }

    /// True when the two lattices have the same element names in the same
    /// order with the same order relation; the name field is ignored.
    pub fn same_structure(&self, other: &FiniteLattice) -> bool {
        self.elements == other.elements && self.leq == other.leq
    }

    /// Least element.
    pub fn bottom(&self) -> usize {
        self.bottom
    }

    /// Greatest element.
    pub fn top(&self) -> usize {
        self.top
    }

    /// First triple violating `a /\ (b \/ c) = (a /\ b) \/ (a /\ c)`, if any.
    pub fn distributivity_witness(&self) -> Option<(usize, usize, usize)> {
        let n = self.len();
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    let lhs = self.meet(a, self.join(b, c));
                    let rhs = self.join(self.meet(a, b), self.meet(a, c));
                    if lhs != rhs {
                        return Some((a, b, c));
                    }
                }
            }
        }
        None
    }

    /// Exhaustive distributivity test over all triples.
    pub fn is_distributive(&self) -> bool {
        self.distributivity_witness().is_none()
    }

    /// Relative pseudocomplement: the largest `x` with `a /\ x <= b`.
    ///
    /// Only distributive finite lattices have one for every pair; a
    /// non-distributive lattice yields [`LatticeError::NotHeyting`] carrying
    /// the violating triple.
    pub fn heyting_implies(&self, a: usize, b: usize) -> Result<usize, LatticeError> {
        if let Some((x, y, z)) = self.distributivity_witness() {
            return Err(LatticeError::NotHeyting(
                self.elements[x].clone(),
                self.elements[y].clone(),
                self.elements[z].clone(),
            ));
        }
        // In a finite distributive lattice the candidates are closed under
        // join, so their total join is the largest candidate.
        let mut best = self.bottom;
        for x in 0..self.len() {
            if self.leq(self.meet(a, x), b) {
                best = self.join(best, x);
            }
        }
        debug_assert!(self.leq(self.meet(a, best), b));
        Ok(best)
    }

    /// Complement of `a` if one exists: `x` with `a /\ x = 0`, `a \/ x = 1`.
    pub fn complement(&self, a: usize) -> Option<usize> {
        (0..self.len())
            .find(|&x| self.meet(a, x) == self.bottom && self.join(a, x) == self.top)
    }

    /// True when the lattice is distributive and every element has a
    /// complement.
    pub fn is_boolean(&self) -> bool {
        self.is_distributive() && (0..self.len()).all(|a| self.complement(a).is_some())
    }

    /// Way-below test: `k` is way below `l` when every directed subset whose
    /// join dominates `l` already contains an element above `k`.
    ///
    /// Enumerates all `2^n` subsets of the carrier, so keep carriers small.
    /// On a finite lattice every directed set has a maximum, which makes
    /// way-below coincide with the order itself; the enumeration is kept
    /// honest rather than shortcut so that the coincidence is something the
    /// tests can observe.
    pub fn way_below(&self, k: usize, l: usize) -> bool {
        let n = self.len();
        assert!(n <= 20, "way_below enumerates every subset of the carrier");
        'subsets: for mask in 1u64..(1 << n) {
            let members: Vec<usize> = (0..n).filter(|&i| mask & (1 << i) != 0).collect();
            for &a in &members {
                for &b in &members {
                    if !members.iter().any(|&u| self.leq(a, u) && self.leq(b, u)) {
                        continue 'subsets;
                    }
                }
            }
            let sup = members.iter().fold(self.bottom, |acc, &x| self.join(acc, x));
            if self.leq(l, sup) && !members.iter().any(|&a| self.leq(k, a)) {
                return false;
            }
        }
        true
    }

    /// The sublattice `{ x | x <= a }` as a fresh lattice, keeping element
    /// names. The pair also returns the embedding back into `self`.
    pub fn down_interval(&self, a: usize, name: &str) -> (FiniteLattice, Vec<usize>) {
        let members: Vec<usize> = (0..self.len()).filter(|&x| self.leq(x, a)).collect();
        let names: Vec<&str> = members.iter().map(|&i| self.elements[i].as_str()).collect();
        let mut pairs = Vec::new();
        for &x in &members {
            for &y in &members {
                if self.leq(x, y) {
                    pairs.push((self.elements[x].as_str(), self.elements[y].as_str()));
                }
            }
        }
        let lat = build_lattice(name, &names, &pairs)
            .expect("a principal downset of a lattice is a lattice");
        (lat, members)
    }

    /// Rendering helper: the full table of a binary operation, row-major in
    /// element order.
    pub fn render_table(&self, op: impl Fn(usize, usize) -> usize) -> String {
        let mut out = String::new();
        for a in 0..self.len() {
            let row: Vec<&str> = (0..self.len())
                .map(|b| self.elements[op(a, b)].as_str())
                .collect();
            out.push_str(&format!("{}: {}\n", self.elements[a], row.join(" ")));
        }
        out
    }
}

/// A function between two lattices, tabulated on the source carrier.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LatticeMap {
    /// Domain.
    pub source: FiniteLattice,
    /// Codomain.
    pub target: FiniteLattice,
    /// `table[i]` is the target index of source element `i`.
    pub table: Vec<usize>,
}

impl LatticeMap {
    /// Builds a map from name pairs, requiring totality on the source.
    pub fn from_pairs(
        source: FiniteLattice,
        target: FiniteLattice,
        sends: &[(&str, &str)],
    ) -> Result<LatticeMap, LatticeError> {
        let mut table = vec![usize::MAX; source.len()];
        for (a, b) in sends {
            table[source.element_index(a)?] = target.element_index(b)?;
        }
        if let Some(i) = table.iter().position(|&t| t == usize::MAX) {
            return Err(LatticeError::NotAHomomorphism(format!(
                "no image declared for {}",
                source.element_name(i)
            )));
        }
        Ok(LatticeMap { source, target, table })
    }

    /// The identity map on `l`.
    pub fn identity(l: &FiniteLattice) -> LatticeMap {
        LatticeMap {
            source: l.clone(),
            target: l.clone(),
            table: (0..l.len()).collect(),
        }
    }

    /// Applies the map.
    pub fn apply(&self, a: usize) -> usize {
        self.table[a]
    }

    /// Checks preservation of meets, joins, and both bounds, returning a
    /// witness description on failure.
    pub fn homomorphism_witness(&self) -> Option<String> {
        let s = &self.source;
        let t = &self.target;
        if self.table[s.bottom()] != t.bottom() {
            return Some(format!(
                "bottom maps to {}",
                t.element_name(self.table[s.bottom()])
            ));
        }
        if self.table[s.top()] != t.top() {
            return Some(format!("top maps to {}", t.element_name(self.table[s.top()])));
        }
        for a in 0..s.len() {
            for b in 0..s.len() {
                if self.table[s.meet(a, b)] != t.meet(self.table[a], self.table[b]) {
                    return Some(format!(
                        "meet of {} and {} is not preserved",
                        s.element_name(a),
                        s.element_name(b)
                    ));
                }
                if self.table[s.join(a, b)] != t.join(self.table[a], self.table[b]) {
                    return Some(format!(
                        "join of {} and {} is not preserved",
                        s.element_name(a),
                        s.element_name(b)
                    ));
                }
            }
        }
        None
    }

    /// True when the map preserves meets, joins, and bounds.
    pub fn is_homomorphism(&self) -> bool {
        self.homomorphism_witness().is_none()
    }

    /// The first pair of distinct source elements with equal images, if any.
    pub fn injectivity_witness(&self) -> Option<(usize, usize)> {
        for a in 0..self.source.len() {
            for b in (a + 1)..self.source.len() {
                if self.table[a] == self.table[b] {
                    return Some((a, b));
                }
            }
        }
        None
    }

    /// True when no two source elements share an image.
    pub fn is_injective(&self) -> bool {
        self.injectivity_witness().is_none()
    }

    /// True when every target element is hit.
    pub fn is_surjective(&self) -> bool {
        (0..self.target.len()).all(|t| self.table.contains(&t))
    }
}

#[cfg(test)]
mod tests {
    use super::fixtures::*;
    use super::*;

    #[test]
    fn closure_recovers_transitive_order() {
        // Only the Hasse pairs of the 3-chain are declared; transitivity and
        // reflexivity come from the closure.
        let l = build_lattice("c3", &["0", "1", "2"], &[("0", "1"), ("1", "2")]).unwrap();
        assert!(l.leq(0, 2));
        assert!(l.leq(1, 1));
        assert!(!l.leq(2, 0));
        assert_eq!(l.bottom(), 0);
        assert_eq!(l.top(), 2);
    }

    #[test]
    fn cycle_is_rejected() {
        let err = build_lattice("bad", &["a", "b"], &[("a", "b"), ("b", "a")]).unwrap_err();
        assert_eq!(err, LatticeError::NotAPoset("a".into(), "b".into()));
    }

    #[test]
    fn antichain_has_no_bounds() {
        let err = build_lattice("bad", &["x", "y"], &[]).unwrap_err();
        assert!(matches!(err, LatticeError::NotALattice(_)));
    }

    #[test]
    fn missing_meet_is_reported() {
        // Two maximal elements over two minimal ones: joins of the minimal
        // pair are ambiguous, so this is not a lattice.
        let err = build_lattice(
            "bad",
            &["a", "b", "c", "d"],
            &[("a", "c"), ("a", "d"), ("b", "c"), ("b", "d")],
        )
        .unwrap_err();
        assert!(matches!(err, LatticeError::NotALattice(_)));
    }

    #[test]
    fn duplicate_ids_are_rejected() {
        let err = build_lattice("bad", &["a", "a"], &[]).unwrap_err();
        assert_eq!(err, LatticeError::DuplicateElement("a".into()));
    }

    #[test]
    fn m3_join_and_distributivity() {
        let l = m3();
        let a = l.element_index("a").unwrap();
        let b = l.element_index("b").unwrap();
        assert_eq!(l.join(a, b), l.top());
        assert_eq!(l.meet(a, b), l.bottom());
        // a /\ (b \/ c) = a but (a /\ b) \/ (a /\ c) = 0.
        let w = l.distributivity_witness().unwrap();
        assert!(!l.is_distributive());
        let (x, y, z) = w;
        assert_ne!(
            l.meet(x, l.join(y, z)),
            l.join(l.meet(x, y), l.meet(x, z))
        );
    }

    #[test]
    fn n5_is_not_distributive() {
        assert!(!n5().is_distributive());
    }

    #[test]
    fn chains_and_products_are_distributive() {
        assert!(chain(4).is_distributive());
        assert!(square().is_distributive());
        assert!(two_by_three().is_distributive());
    }

    #[test]
    fn heyting_implication_in_the_three_chain() {
        // 0 < 1 < 2; writing h for the middle element: h -> 0 = 0,
        // 0 -> anything = top, 2 -> b = b.
        let l = chain(3);
        assert_eq!(l.heyting_implies(1, 0).unwrap(), 0);
        assert_eq!(l.heyting_implies(0, 0).unwrap(), 2);
        assert_eq!(l.heyting_implies(2, 1).unwrap(), 1);
        assert_eq!(l.heyting_implies(1, 1).unwrap(), 2);
    }

    #[test]
    fn heyting_implication_in_two() {
        let l = two();
        assert_eq!(l.heyting_implies(0, 0).unwrap(), 1);
        assert_eq!(l.heyting_implies(1, 0).unwrap(), 0);
        assert_eq!(l.heyting_implies(1, 1).unwrap(), 1);
    }

    #[test]
    fn heyting_fails_on_m3() {
        let l = m3();
        let a = l.element_index("a").unwrap();
        assert!(matches!(
            l.heyting_implies(a, l.bottom()),
            Err(LatticeError::NotHeyting(_, _, _))
        ));
    }

    #[test]
    fn residuation_of_heyting_implication() {
        // x <= a -> b iff a /\ x <= b, exhaustively on a distributive fixture.
        for l in [chain(4), square(), two_by_three()] {
            for a in 0..l.len() {
                for b in 0..l.len() {
                    let imp = l.heyting_implies(a, b).unwrap();
                    for x in 0..l.len() {
                        assert_eq!(l.leq(x, imp), l.leq(l.meet(a, x), b));
                    }
                }
            }
        }
    }

    #[test]
    fn boolean_recognition() {
        assert!(two().is_boolean());
        assert!(square().is_boolean());
        assert!(!chain(3).is_boolean());
        assert!(!m3().is_boolean());
    }

    #[test]
    fn way_below_is_the_order_on_finite_lattices() {
        for l in [two(), chain(3), chain(4), square(), m3()] {
            for k in 0..l.len() {
                for x in 0..l.len() {
                    assert_eq!(l.way_below(k, x), l.leq(k, x), "in {}", l.name());
                }
            }
        }
    }

    #[test]
    fn down_interval_of_square() {
        let l = square();
        let i = l.element_index("(1,0)").unwrap();
        let (sub, members) = l.down_interval(i, "half");
        assert_eq!(sub.len(), 2);
        assert_eq!(members, vec![l.element_index("(0,0)").unwrap(), i]);
    }

    #[test]
    fn homomorphism_and_injectivity_checks() {
        let inc = LatticeMap::from_pairs(two(), chain(3), &[("0", "0"), ("1", "2")]).unwrap();
        assert!(inc.is_homomorphism());
        assert!(inc.is_injective());
        assert!(!inc.is_surjective());

        let collapse =
            LatticeMap::from_pairs(chain(3), two(), &[("0", "0"), ("1", "1"), ("2", "1")])
                .unwrap();
        assert!(collapse.is_homomorphism());
        assert!(!collapse.is_injective());
        assert!(collapse.is_surjective());

        let skew = LatticeMap::from_pairs(two(), chain(3), &[("0", "1"), ("1", "2")]).unwrap();
        assert!(!skew.is_homomorphism());
    }
}
