//! Paired frames with consistency and totality relations.
//!
//! A [`DFrame`] keeps two finite distributive lattices separate (evidence
//! for in `plus`, evidence against in `minus`) and records which pairs are
//! consistent (`con`) and which are total (`tot`). The four axioms tie the
//! relations to the logical operations of the underlying twist product;
//! [`check_dframe`] verifies all of them exhaustively and names the axiom
//! any violation belongs to.
//!
//! Two relation families are built in: the twist relations (consistent
//! means the components meet to bottom, total means they join to top) and
//! the trivial ones (one component is a bound). Bitopological spaces give
//! a third source: opens of two topologies on the same points, with
//! disjointness and covering as the relations.
//!
//! All fields are public and nothing is revalidated on access: checkers
//! must be able to receive deliberately broken structures.

pub mod formula;
pub mod ndframe;
pub mod partial;

use thiserror::Error;

use crate::order::{build_lattice, FiniteLattice, Structure};
use crate::report::Report;

/// Errors from d-frame constructions.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DFrameError {
    /// Twist relations need both components to be the same lattice.
    #[error("twist relations need identical component lattices: {0}")]
    TwistNeedsSymmetric(String),
    /// An open-set family is not closed under union or intersection.
    #[error("not a topology: {0}")]
    NotATopology(String),
    /// A map fails to preserve meets, joins, or bounds.
    #[error("not a homomorphism: {0}")]
    NotAHomomorphism(String),
    /// A map identifies two distinct elements.
    #[error("not injective: {0}")]
    NotInjective(String),
    /// Recovering an injection needs `p(m(a)) = a` throughout.
    #[error("p after m is not the identity: {0}")]
    NotPMId(String),
    /// A component lattice has no implication.
    #[error("not a Heyting lattice: {0}")]
    NotHeyting(String),
    /// Name lookup failure in user input.
    #[error("bad arguments: {0}")]
    BadArguments(String),
}

/// Two frames and their consistency and totality relations, both stored as
/// row-major boolean matrices over `plus x minus`.
#[derive(Debug, Clone, PartialEq)]
pub struct DFrame {
    /// Display name.
    pub name: String,
    /// Positive component.
    pub plus: FiniteLattice,
    /// Negative component.
    pub minus: FiniteLattice,
    /// Consistency relation; index `a * minus.len() + b`.
    pub con: Vec<bool>,
    /// Totality relation; same indexing.
    pub tot: Vec<bool>,
}

impl DFrame {
    /// Wraps the pieces, checking only the matrix sizes.
    pub fn new(
        name: &str,
        plus: FiniteLattice,
        minus: FiniteLattice,
        con: Vec<bool>,
        tot: Vec<bool>,
    ) -> Self {
        assert_eq!(con.len(), plus.len() * minus.len());
        assert_eq!(tot.len(), plus.len() * minus.len());
        DFrame {
            name: name.to_string(),
            plus,
            minus,
            con,
            tot,
        }
    }

    fn idx(&self, a: usize, b: usize) -> usize {
        a * self.minus.len() + b
    }

    /// Consistency lookup.
    pub fn con(&self, a: usize, b: usize) -> bool {
        self.con[self.idx(a, b)]
    }

    /// Totality lookup.
    pub fn tot(&self, a: usize, b: usize) -> bool {
        self.tot[self.idx(a, b)]
    }

    /// Falsity `(0, 1)`.
    pub fn ff(&self) -> (usize, usize) {
        (self.plus.bottom(), self.minus.top())
    }

    /// Truth `(1, 0)`.
    pub fn tt(&self) -> (usize, usize) {
        (self.plus.top(), self.minus.bottom())
    }

    /// Logical conjunction of pairs.
    pub fn and(&self, x: (usize, usize), y: (usize, usize)) -> (usize, usize) {
        (self.plus.meet(x.0, y.0), self.minus.join(x.1, y.1))
    }

    /// Logical disjunction of pairs.
    pub fn or(&self, x: (usize, usize), y: (usize, usize)) -> (usize, usize) {
        (self.plus.join(x.0, y.0), self.minus.meet(x.1, y.1))
    }

    /// Information meet of pairs.
    pub fn meet(&self, x: (usize, usize), y: (usize, usize)) -> (usize, usize) {
        (self.plus.meet(x.0, y.0), self.minus.meet(x.1, y.1))
    }

    /// Information join of pairs.
    pub fn join(&self, x: (usize, usize), y: (usize, usize)) -> (usize, usize) {
        (self.plus.join(x.0, y.0), self.minus.join(x.1, y.1))
    }

    /// Information order on pairs.
    pub fn info_leq(&self, x: (usize, usize), y: (usize, usize)) -> bool {
        self.plus.leq(x.0, y.0) && self.minus.leq(x.1, y.1)
    }

    /// Logical order on pairs.
    pub fn logic_leq(&self, x: (usize, usize), y: (usize, usize)) -> bool {
        self.plus.leq(x.0, y.0) && self.minus.leq(y.1, x.1)
    }

    /// Printable pair name, `(plus,minus)`.
    pub fn pair_name(&self, x: (usize, usize)) -> String {
        format!(
            "({},{})",
            self.plus.element_name(x.0),
            self.minus.element_name(x.1)
        )
    }

    /// All pairs, row-major.
    pub fn pairs(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.plus.len() * self.minus.len());
        for a in 0..self.plus.len() {
            for b in 0..self.minus.len() {
                out.push((a, b));
            }
        }
        out
    }

    /// Consistent pairs, row-major.
    pub fn con_pairs(&self) -> Vec<(usize, usize)> {
        self.pairs().into_iter().filter(|&(a, b)| self.con(a, b)).collect()
    }

    /// The d-frame as a one-sorted structure for isomorphism search: the
    /// disjoint union of the two carriers with each order, `con`, and `tot`
    /// as binary relations. Reflexivity of each order pins which block an
    /// element belongs to, so no extra marker is needed.
    pub fn as_structure(&self) -> Structure {
        let np = self.plus.len();
        let nm = self.minus.len();
        let n = np + nm;
        let mut plus_le = vec![false; n * n];
        let mut minus_le = vec![false; n * n];
        let mut con = vec![false; n * n];
        let mut tot = vec![false; n * n];
        for a in 0..np {
            for b in 0..np {
                plus_le[a * n + b] = self.plus.leq(a, b);
            }
            for b in 0..nm {
                con[a * n + (np + b)] = self.con(a, b);
                tot[a * n + (np + b)] = self.tot(a, b);
            }
        }
        for a in 0..nm {
            for b in 0..nm {
                minus_le[(np + a) * n + (np + b)] = self.minus.leq(a, b);
            }
        }
        Structure::new(n)
            .with_relation("plus-le", plus_le)
            .with_relation("minus-le", minus_le)
            .with_relation("con", con)
            .with_relation("tot", tot)
            .with_constant("plus-bottom", self.plus.bottom())
            .with_constant("plus-top", self.plus.top())
            .with_constant("minus-bottom", np + self.minus.bottom())
            .with_constant("minus-top", np + self.minus.top())
    }
}

/// True when the two d-frames are isomorphic: a pair of order isomorphisms
/// of the components carrying `con` to `con` and `tot` to `tot`.
pub fn dframes_isomorphic(a: &DFrame, b: &DFrame) -> bool {
    crate::order::find_isomorphism(&a.as_structure(), &b.as_structure()).is_some()
}

/// Verifies the four axioms exhaustively. Entry names begin with the axiom
/// number they belong to.
pub fn check_dframe(d: &DFrame) -> Report {
    let mut report = Report::new(format!("d-frame axioms for {}", d.name));
    let pairs = d.pairs();
    let in_rel = |rel: &[bool], x: (usize, usize)| rel[x.0 * d.minus.len() + x.1];

    for (rel, rel_name) in [(&d.con, "con"), (&d.tot, "tot")] {
        let mut missing = Vec::new();
        if !in_rel(rel, d.ff()) {
            missing.push(format!("ff={}", d.pair_name(d.ff())));
        }
        if !in_rel(rel, d.tt()) {
            missing.push(format!("tt={}", d.pair_name(d.tt())));
        }
        report.check(
            format!("axiom1-{rel_name}-contains-constants"),
            missing.is_empty(),
            missing.join(", "),
        );
        let mut witness = None;
        'scan: for &x in &pairs {
            if !in_rel(rel, x) {
                continue;
            }
            for &y in &pairs {
                if !in_rel(rel, y) {
                    continue;
                }
                for (op, op_name) in [(d.and(x, y), "conjunction"), (d.or(x, y), "disjunction")] {
                    if !in_rel(rel, op) {
                        witness = Some(format!(
                            "{op_name} of {} and {} escapes to {}",
                            d.pair_name(x),
                            d.pair_name(y),
                            d.pair_name(op)
                        ));
                        break 'scan;
                    }
                }
            }
        }
        report.check(
            format!("axiom1-{rel_name}-logical-sublattice"),
            witness.is_none(),
            witness.unwrap_or_default(),
        );
    }

    let down = pairs.iter().find_map(|&x| {
        if !in_rel(&d.con, x) {
            return None;
        }
        pairs.iter().find_map(|&y| {
            (d.info_leq(y, x) && !in_rel(&d.con, y)).then(|| {
                format!("{} in con but {} below it is not", d.pair_name(x), d.pair_name(y))
            })
        })
    });
    report.check("axiom2-con-downward-closed", down.is_none(), down.unwrap_or_default());
    let up = pairs.iter().find_map(|&x| {
        if !in_rel(&d.tot, x) {
            return None;
        }
        pairs.iter().find_map(|&y| {
            (d.info_leq(x, y) && !in_rel(&d.tot, y)).then(|| {
                format!("{} in tot but {} above it is not", d.pair_name(x), d.pair_name(y))
            })
        })
    });
    report.check("axiom2-tot-upward-closed", up.is_none(), up.unwrap_or_default());

    // Finite directed sets have a greatest element, so the directed-join
    // axiom cannot fail here; the surrogate check is closure under joins of
    // comparable consistent pairs.
    let chains = pairs.iter().find_map(|&x| {
        if !in_rel(&d.con, x) {
            return None;
        }
        pairs.iter().find_map(|&y| {
            (in_rel(&d.con, y) && d.info_leq(x, y) && !in_rel(&d.con, d.join(x, y))).then(|| {
                format!(
                    "join of the chain {} below {} escapes con",
                    d.pair_name(x),
                    d.pair_name(y)
                )
            })
        })
    });
    report.check("axiom3-con-directed-joins", chains.is_none(), chains.unwrap_or_default());

    let mut minus_det = None;
    let mut plus_det = None;
    for a in 0..d.plus.len() {
        for b in 0..d.minus.len() {
            if !d.con(a, b) {
                continue;
            }
            if minus_det.is_none() {
                for c in 0..d.minus.len() {
                    if d.tot(a, c) && !d.minus.leq(b, c) {
                        minus_det = Some(format!(
                            "con({},{}) and tot({},{}) but {} is not below {}",
                            d.plus.element_name(a),
                            d.minus.element_name(b),
                            d.plus.element_name(a),
                            d.minus.element_name(c),
                            d.minus.element_name(b),
                            d.minus.element_name(c)
                        ));
                        break;
                    }
                }
            }
            if plus_det.is_none() {
                for c in 0..d.plus.len() {
                    if d.tot(c, b) && !d.plus.leq(a, c) {
                        plus_det = Some(format!(
                            "con({},{}) and tot({},{}) but {} is not below {}",
                            d.plus.element_name(a),
                            d.minus.element_name(b),
                            d.plus.element_name(c),
                            d.minus.element_name(b),
                            d.plus.element_name(a),
                            d.plus.element_name(c)
                        ));
                        break;
                    }
                }
            }
        }
    }
    report.check("axiom4-con-tot-bound-minus", minus_det.is_none(), minus_det.unwrap_or_default());
    report.check("axiom4-con-tot-bound-plus", plus_det.is_none(), plus_det.unwrap_or_default());
    report
}

/// The built-in relation families.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RelationKind {
    /// Consistent: meet is bottom. Total: join is top. Needs symmetry.
    Twist,
    /// Consistent: a component is bottom. Total: a component is top.
    Trivial,
}

impl RelationKind {
    /// Parses a command-line name.
    pub fn parse(s: &str) -> Option<RelationKind> {
        match s {
            "twist" => Some(RelationKind::Twist),
            "trivial" => Some(RelationKind::Trivial),
            _ => None,
        }
    }
}

/// Equips two lattices with one of the built-in relation families.
pub fn canonical_relations(
    plus: &FiniteLattice,
    minus: &FiniteLattice,
    kind: RelationKind,
) -> Result<DFrame, DFrameError> {
    if kind == RelationKind::Twist && !plus.same_structure(minus) {
        return Err(DFrameError::TwistNeedsSymmetric(format!(
            "{} and {}",
            plus.name(),
            minus.name()
        )));
    }
    let mut con = Vec::with_capacity(plus.len() * minus.len());
    let mut tot = Vec::with_capacity(plus.len() * minus.len());
    for a in 0..plus.len() {
        for b in 0..minus.len() {
            match kind {
                RelationKind::Twist => {
                    con.push(plus.meet(a, b) == plus.bottom());
                    tot.push(plus.join(a, b) == plus.top());
                }
                RelationKind::Trivial => {
                    con.push(a == plus.bottom() || b == minus.bottom());
                    tot.push(a == plus.top() || b == minus.top());
                }
            }
        }
    }
    let kind_name = match kind {
        RelationKind::Twist => "twist",
        RelationKind::Trivial => "trivial",
    };
    Ok(DFrame::new(
        &format!("{}-{}", plus.name(), kind_name),
        plus.clone(),
        minus.clone(),
        con,
        tot,
    ))
}

/// A finite set of points with two topologies, opens stored as bitmasks
/// over the declared point order.
#[derive(Debug, Clone)]
pub struct BitopSpace {
    /// Display name.
    pub name: String,
    /// Point names in declared order.
    pub points: Vec<String>,
    /// Opens of the positive topology, in declared order.
    pub plus_opens: Vec<u32>,
    /// Opens of the negative topology, in declared order.
    pub minus_opens: Vec<u32>,
}

impl BitopSpace {
    /// Printable open-set name in brace notation, points in declared order.
    pub fn open_name(&self, mask: u32) -> String {
        let inside: Vec<&str> = self
            .points
            .iter()
            .enumerate()
            .filter(|&(i, _)| mask & (1 << i) != 0)
            .map(|(_, p)| p.as_str())
            .collect();
        format!("{{{}}}", inside.join(","))
    }

    fn full(&self) -> u32 {
        if self.points.is_empty() {
            0
        } else {
            (1u32 << self.points.len()) - 1
        }
    }
}

fn check_topology(space: &BitopSpace, opens: &[u32], side: &str) -> Result<(), DFrameError> {
    let full = space.full();
    if !opens.contains(&0) {
        return Err(DFrameError::NotATopology(format!(
            "{side} family misses the empty set"
        )));
    }
    if !opens.contains(&full) {
        return Err(DFrameError::NotATopology(format!(
            "{side} family misses the full set"
        )));
    }
    for &u in opens {
        if u & !full != 0 {
            return Err(DFrameError::NotATopology(format!(
                "{side} family contains a set outside the points"
            )));
        }
        for &v in opens {
            for (w, op) in [(u | v, "union"), (u & v, "intersection")] {
                if !opens.contains(&w) {
                    return Err(DFrameError::NotATopology(format!(
                        "{side} family misses the {op} of {} and {}",
                        space.open_name(u),
                        space.open_name(v)
                    )));
                }
            }
        }
    }
    let mut seen = opens.to_vec();
    seen.sort_unstable();
    seen.dedup();
    if seen.len() != opens.len() {
        return Err(DFrameError::NotATopology(format!(
            "{side} family lists an open twice"
        )));
    }
    Ok(())
}

/// Builds a bitopological space from point and open-set names, validating
/// both families.
pub fn bitop_space(
    name: &str,
    points: &[&str],
    plus_opens: &[&[&str]],
    minus_opens: &[&[&str]],
) -> Result<BitopSpace, DFrameError> {
    assert!(points.len() <= 16, "point sets stay at desk scale");
    let point_index = |p: &str| -> Result<usize, DFrameError> {
        points
            .iter()
            .position(|q| *q == p)
            .ok_or_else(|| DFrameError::BadArguments(format!("unknown point {p}")))
    };
    let to_mask = |open: &[&str]| -> Result<u32, DFrameError> {
        let mut mask = 0u32;
        for p in open {
            mask |= 1 << point_index(p)?;
        }
        Ok(mask)
    };
    let space = BitopSpace {
        name: name.to_string(),
        points: points.iter().map(|p| p.to_string()).collect(),
        plus_opens: plus_opens.iter().map(|o| to_mask(o)).collect::<Result<_, _>>()?,
        minus_opens: minus_opens.iter().map(|o| to_mask(o)).collect::<Result<_, _>>()?,
    };
    check_topology(&space, &space.plus_opens, "positive")?;
    check_topology(&space, &space.minus_opens, "negative")?;
    Ok(space)
}

fn opens_lattice(space: &BitopSpace, opens: &[u32], name: &str) -> FiniteLattice {
    let names: Vec<String> = opens.iter().map(|&u| space.open_name(u)).collect();
    let name_refs: Vec<&str> = names.iter().map(|s| s.as_str()).collect();
    let mut pairs = Vec::new();
    for (i, &u) in opens.iter().enumerate() {
        for (j, &v) in opens.iter().enumerate() {
            if u & v == u {
                pairs.push((name_refs[i], name_refs[j]));
            }
        }
    }
    build_lattice(name, &name_refs, &pairs).expect("a topology is a lattice under inclusion")
}

/// The d-frame of a bitopological space: opens under inclusion, disjoint
/// pairs consistent, covering pairs total.
pub fn dframe_from_bispace(space: &BitopSpace) -> DFrame {
    let plus = opens_lattice(space, &space.plus_opens, &format!("{}-plus", space.name));
    let minus = opens_lattice(space, &space.minus_opens, &format!("{}-minus", space.name));
    let full = space.full();
    let mut con = Vec::with_capacity(space.plus_opens.len() * space.minus_opens.len());
    let mut tot = Vec::with_capacity(con.capacity());
    for &u in &space.plus_opens {
        for &v in &space.minus_opens {
            con.push(u & v == 0);
            tot.push(u | v == full);
        }
    }
    DFrame::new(&space.name, plus, minus, con, tot)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::order::fixtures::{chain, square, two};

    #[test]
    fn twist_relations_satisfy_the_axioms() {
        for l in [two(), chain(3), chain(4), square()] {
            let d = canonical_relations(&l, &l, RelationKind::Twist).unwrap();
            let report = check_dframe(&d);
            assert!(report.passed(), "{report}");
        }
    }

    #[test]
    fn trivial_relations_satisfy_the_axioms() {
        for l in [two(), chain(3), square()] {
            let d = canonical_relations(&l, &chain(3), RelationKind::Trivial).unwrap();
            let report = check_dframe(&d);
            assert!(report.passed(), "{report}");
        }
    }

    #[test]
    fn twist_relations_need_symmetry() {
        assert!(matches!(
            canonical_relations(&two(), &chain(3), RelationKind::Twist),
            Err(DFrameError::TwistNeedsSymmetric(_))
        ));
    }

    #[test]
    fn twist_con_over_two_is_the_meet_zero_filter() {
        let d = canonical_relations(&two(), &two(), RelationKind::Twist).unwrap();
        assert_eq!(d.con_pairs(), vec![(0, 0), (0, 1), (1, 0)]);
    }

    #[test]
    fn trivial_con_over_the_three_chain_has_five_pairs() {
        let c = chain(3);
        let d = canonical_relations(&c, &c, RelationKind::Trivial).unwrap();
        assert_eq!(d.con_pairs().len(), 5);
    }

    #[test]
    fn boolean_complements_are_consistent_in_the_square_twist() {
        let s = square();
        let d = canonical_relations(&s, &s, RelationKind::Twist).unwrap();
        for x in 0..s.len() {
            let c = s.complement(x).unwrap();
            assert!(d.con(x, c));
            assert!(d.tot(x, c));
        }
    }

    #[test]
    fn removing_falsity_from_con_breaks_the_first_axiom() {
        let mut d = canonical_relations(&two(), &two(), RelationKind::Twist).unwrap();
        let ff = d.ff();
        let i = ff.0 * d.minus.len() + ff.1;
        d.con[i] = false;
        let report = check_dframe(&d);
        assert!(!report.passed());
        assert!(report.first_failure().unwrap().name.starts_with("axiom1"));
    }

    #[test]
    fn breaking_downward_closure_names_the_second_axiom() {
        let c = chain(3);
        let mut d = canonical_relations(&c, &c, RelationKind::Twist).unwrap();
        // Remove (0,0) but keep (0,1) above it.
        d.con[0] = false;
        let report = check_dframe(&d);
        let names: Vec<&str> = report
            .entries
            .iter()
            .filter(|e| !e.passed)
            .map(|e| e.name.as_str())
            .collect();
        assert!(names.contains(&"axiom2-con-downward-closed"), "{report}");
    }

    #[test]
    fn inflating_con_breaks_the_fourth_axiom() {
        let mut d = canonical_relations(&two(), &two(), RelationKind::Twist).unwrap();
        // Declare the contradictory pair consistent: con(1,1) with tot(1,0)
        // forces 1 <= 0 in the minus component.
        let i = 1 * d.minus.len() + 1;
        d.con[i] = true;
        let report = check_dframe(&d);
        assert!(!report.passed());
        assert!(report
            .entries
            .iter()
            .any(|e| !e.passed && e.name.starts_with("axiom4")));
    }

    #[test]
    fn one_point_bispace_matches_the_hand_enumeration() {
        let x = bitop_space("pt", &["x"], &[&[], &["x"]], &[&[], &["x"]]).unwrap();
        let d = dframe_from_bispace(&x);
        assert!(check_dframe(&d).passed());
        let con = d.con_pairs();
        assert_eq!(con.len(), 3);
        // tot holds exactly when some component is everything.
        let full = d
            .pairs()
            .iter()
            .filter(|&&(a, b)| d.tot(a, b))
            .count();
        assert_eq!(full, 3);
    }

    #[test]
    fn empty_bispace_degenerates_to_single_elements() {
        let x = bitop_space("void", &[], &[&[]], &[&[]]).unwrap();
        let d = dframe_from_bispace(&x);
        assert_eq!(d.plus.len(), 1);
        assert_eq!(d.minus.len(), 1);
        assert!(d.con(0, 0) && d.tot(0, 0));
        assert!(check_dframe(&d).passed());
    }

    #[test]
    fn two_point_bispace_separates_con_and_tot() {
        let x = bitop_space(
            "pair",
            &["x", "y"],
            &[&[], &["x"], &["x", "y"]],
            &[&[], &["y"], &["x", "y"]],
        )
        .unwrap();
        let d = dframe_from_bispace(&x);
        assert!(check_dframe(&d).passed());
        let ux = d.plus.element_index("{x}").unwrap();
        let uy = d.minus.element_index("{y}").unwrap();
        assert!(d.con(ux, uy));
        assert!(d.tot(ux, uy));
    }

    #[test]
    fn non_topologies_are_rejected() {
        let missing_union = bitop_space(
            "bad",
            &["x", "y"],
            &[&[], &["x"], &["y"], &["x", "y"]],
            &[&[], &["x", "y"]],
        );
        assert!(missing_union.is_ok());
        let really_missing = bitop_space(
            "bad",
            &["x", "y", "z"],
            &[&[], &["x"], &["y"], &["x", "y", "z"]],
            &[&[], &["x", "y", "z"]],
        );
        assert!(matches!(really_missing, Err(DFrameError::NotATopology(_))));
    }

    #[test]
    fn isomorphism_respects_the_relations() {
        // On chains the two families coincide, so the square is the
        // smallest separating fixture.
        let s = square();
        let twist = canonical_relations(&s, &s, RelationKind::Twist).unwrap();
        let trivial = canonical_relations(&s, &s, RelationKind::Trivial).unwrap();
        assert!(dframes_isomorphic(&twist, &twist.clone()));
        assert!(!dframes_isomorphic(&twist, &trivial));
        let c = chain(3);
        let chain_twist = canonical_relations(&c, &c, RelationKind::Twist).unwrap();
        let chain_trivial = canonical_relations(&c, &c, RelationKind::Trivial).unwrap();
        assert_eq!(chain_twist.con, chain_trivial.con);
        assert_eq!(chain_twist.tot, chain_trivial.tot);
    }

    #[test]
    fn logic_order_recovery_from_information_order() {
        for l in [two(), chain(3), square()] {
            let d = canonical_relations(&l, &l, RelationKind::Twist).unwrap();
            let tt = d.tt();
            let ff = d.ff();
            for x in d.pairs() {
                for y in d.pairs() {
                    let recovered = d.info_leq(d.meet(x, tt), d.meet(y, tt))
                        && d.info_leq(d.meet(y, ff), d.meet(x, ff));
                    assert_eq!(d.logic_leq(x, y), recovered);
                }
            }
        }
    }
}
