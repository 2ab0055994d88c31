//! The consistent fragment of a d-frame and its precedence relation.
//!
//! Restricting a d-frame to its consistent pairs keeps the information
//! meet and both logical operations (closure follows from the axioms) and
//! carries a precedence relation: `x` precedes `y` when `tot(y+, x-)`. A
//! [`PartialFrame`] records exactly this data, and [`dframe_from_partial`]
//! rebuilds a d-frame from it: the component lattices reappear as the
//! intervals below truth and falsity, consistency as boundedness, and
//! totality as precedence. The round trip is an isomorphism.
//!
//! [`prec_suite`] checks what precedence supports on a negation d-frame:
//! both implications are valid along it, the two rules for moving a
//! negated conjunct across it hold, and so does the cut rule. The derived
//! order [`shulman_leq`] is exploratory; the suite computes it and reports
//! reflexivity and transitivity without asserting either.

use crate::dframe::formula::{imp, strong, var, Evaluator};
use crate::dframe::ndframe::NdFrame;
use crate::dframe::{DFrame, DFrameError};
use crate::order::build_lattice;
use crate::report::Report;

/// The consistent pairs of a d-frame with their inherited structure.
#[derive(Debug, Clone)]
pub struct PartialFrame {
    /// Display name.
    pub name: String,
    elements: Vec<(usize, usize)>,
    names: Vec<String>,
    info: Vec<bool>,
    prec: Vec<bool>,
    imeet: Vec<usize>,
    and_t: Vec<usize>,
    or_t: Vec<usize>,
    ff: usize,
    tt: usize,
    bot: usize,
}

impl PartialFrame {
    /// Number of consistent pairs.
    pub fn len(&self) -> usize {
        self.elements.len()
    }

    /// True when the carrier is empty; never holds for a lawful source.
    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    /// The underlying pairs, in row-major order of the source.
    pub fn elements(&self) -> &[(usize, usize)] {
        &self.elements
    }

    /// Printable name of element `i`.
    pub fn element_name(&self, i: usize) -> &str {
        &self.names[i]
    }

    /// Position of a pair in the carrier.
    pub fn index_of(&self, x: (usize, usize)) -> Option<usize> {
        self.elements.iter().position(|&y| y == x)
    }

    /// Information order.
    pub fn info_leq(&self, i: usize, j: usize) -> bool {
        self.info[i * self.len() + j]
    }

    /// Precedence.
    pub fn prec(&self, i: usize, j: usize) -> bool {
        self.prec[i * self.len() + j]
    }

    /// Information meet.
    pub fn imeet(&self, i: usize, j: usize) -> usize {
        self.imeet[i * self.len() + j]
    }

    /// Logical conjunction.
    pub fn and(&self, i: usize, j: usize) -> usize {
        self.and_t[i * self.len() + j]
    }

    /// Logical disjunction.
    pub fn or(&self, i: usize, j: usize) -> usize {
        self.or_t[i * self.len() + j]
    }

    /// Index of falsity.
    pub fn ff(&self) -> usize {
        self.ff
    }

    /// Index of truth.
    pub fn tt(&self) -> usize {
        self.tt
    }

    /// Index of the information bottom.
    pub fn bot(&self) -> usize {
        self.bot
    }
}

/// Restricts a d-frame to its consistent pairs. Closure of the carrier
/// under the three inherited operations follows from the axioms and is
/// asserted, not rechecked.
pub fn partial_frame(d: &DFrame) -> PartialFrame {
    let elements = d.con_pairs();
    let n = elements.len();
    let names: Vec<String> = elements.iter().map(|&x| d.pair_name(x)).collect();
    let index = |x: (usize, usize), op: &str| -> usize {
        elements
            .iter()
            .position(|&y| y == x)
            .unwrap_or_else(|| panic!("{op} of consistent pairs left con at {}", d.pair_name(x)))
    };
    let mut info = vec![false; n * n];
    let mut prec = vec![false; n * n];
    let mut imeet = Vec::with_capacity(n * n);
    let mut and_t = Vec::with_capacity(n * n);
    let mut or_t = Vec::with_capacity(n * n);
    for (i, &x) in elements.iter().enumerate() {
        for (j, &y) in elements.iter().enumerate() {
            info[i * n + j] = d.info_leq(x, y);
            prec[i * n + j] = d.tot(y.0, x.1);
            imeet.push(index(d.meet(x, y), "information meet"));
            and_t.push(index(d.and(x, y), "conjunction"));
            or_t.push(index(d.or(x, y), "disjunction"));
        }
    }
    let ff = index(d.ff(), "falsity");
    let tt = index(d.tt(), "truth");
    let bot = index((d.plus.bottom(), d.minus.bottom()), "bottom");
    PartialFrame {
        name: format!("{}-partial", d.name),
        elements,
        names,
        info,
        prec,
        imeet,
        and_t,
        or_t,
        ff,
        tt,
        bot,
    }
}

fn interval_lattice(p: &PartialFrame, top: usize, name: &str) -> (crate::order::FiniteLattice, Vec<usize>) {
    let members: Vec<usize> = (0..p.len()).filter(|&i| p.info_leq(i, top)).collect();
    let names: Vec<&str> = members.iter().map(|&i| p.element_name(i)).collect();
    let mut pairs = Vec::new();
    for (a, &i) in members.iter().enumerate() {
        for (b, &j) in members.iter().enumerate() {
            if p.info_leq(i, j) {
                pairs.push((names[a], names[b]));
            }
        }
    }
    let l = build_lattice(name, &names, &pairs)
        .expect("intervals of the information order are lattices");
    (l, members)
}

/// Rebuilds a d-frame from a partial frame: components are the intervals
/// below truth and falsity, a pair is consistent when something in the
/// carrier bounds both, and total when the falsity side precedes the
/// truth side.
pub fn dframe_from_partial(p: &PartialFrame) -> DFrame {
    let (plus, plus_members) = interval_lattice(p, p.tt(), &format!("{}-plus", p.name));
    let (minus, minus_members) = interval_lattice(p, p.ff(), &format!("{}-minus", p.name));
    let mut con = Vec::with_capacity(plus.len() * minus.len());
    let mut tot = Vec::with_capacity(plus.len() * minus.len());
    for &a in &plus_members {
        for &b in &minus_members {
            con.push((0..p.len()).any(|c| p.info_leq(a, c) && p.info_leq(b, c)));
            tot.push(p.prec(b, a));
        }
    }
    DFrame::new(&format!("{}-rebuilt", p.name), plus, minus, con, tot)
}

/// The derived order on pairs: `x` below `y` when the positive components
/// compare and `y- meet (m(y+) -> 0)` falls below `x-`. Needs an
/// implication on the negative lattice.
pub fn shulman_leq(
    n: &NdFrame,
    x: (usize, usize),
    y: (usize, usize),
) -> Result<bool, DFrameError> {
    let minus = &n.base.minus;
    let guard = minus
        .heyting_implies(n.m(y.0), minus.bottom())
        .map_err(|_| DFrameError::NotHeyting(minus.name().to_string()))?;
    Ok(n.base.plus.leq(x.0, y.0) && minus.leq(minus.meet(y.1, guard), x.1))
}

/// Checks what precedence supports over the consistent pairs: validity of
/// both implications along it, the two negation rules, and the cut rule.
/// The derived order is reported as notes only.
pub fn prec_suite(n: &NdFrame) -> Result<Report, DFrameError> {
    let d = &n.base;
    let ev = Evaluator::new(n)?;
    let mut report = Report::new(format!("precedence rules for {}", d.name));
    let p = partial_frame(d);
    let carrier = p.elements().to_vec();
    report.note("consistent-elements", p.len().to_string());

    // x precedes y, extended to arbitrary pairs; intermediate values of
    // the rules below need not be consistent.
    let raw_prec = |x: (usize, usize), y: (usize, usize)| d.tot(y.0, x.1);
    let neg = |x: (usize, usize)| (n.p(x.1), n.m(x.0));

    let weak = imp(var(0), var(1));
    let strong_imp = strong(var(0), var(1));
    let mut weak_witness = None;
    let mut strong_witness = None;
    for (i, &x) in carrier.iter().enumerate() {
        for (j, &y) in carrier.iter().enumerate() {
            if !p.prec(i, j) {
                continue;
            }
            if weak_witness.is_none() && !ev.valid_at(&weak, &[x, y]) {
                weak_witness = Some(format!(
                    "{} precedes {} but the implication evaluates to {}",
                    d.pair_name(x),
                    d.pair_name(y),
                    d.pair_name(ev.eval(&weak, &[x, y]))
                ));
            }
            if strong_witness.is_none() && !ev.valid_at(&strong_imp, &[x, y]) {
                strong_witness = Some(format!(
                    "{} precedes {} but the strong implication evaluates to {}",
                    d.pair_name(x),
                    d.pair_name(y),
                    d.pair_name(ev.eval(&strong_imp, &[x, y]))
                ));
            }
        }
    }
    report.check(
        "prec-weak-implication-valid",
        weak_witness.is_none(),
        weak_witness.unwrap_or_default(),
    );
    report.check(
        "prec-strong-implication-valid",
        strong_witness.is_none(),
        strong_witness.unwrap_or_default(),
    );

    let mut left_witness = None;
    let mut right_witness = None;
    for &x in &carrier {
        for &y in &carrier {
            for &z in &carrier {
                if left_witness.is_none()
                    && raw_prec(x, d.or(neg(y), z))
                    && !raw_prec(d.and(x, y), z)
                {
                    left_witness = Some(format!(
                        "x={} y={} z={}",
                        d.pair_name(x),
                        d.pair_name(y),
                        d.pair_name(z)
                    ));
                }
                if right_witness.is_none()
                    && raw_prec(d.and(x, neg(y)), z)
                    && !raw_prec(x, d.or(y, z))
                {
                    right_witness = Some(format!(
                        "x={} y={} z={}",
                        d.pair_name(x),
                        d.pair_name(y),
                        d.pair_name(z)
                    ));
                }
            }
        }
    }
    report.check(
        "prec-negation-rule-left",
        left_witness.is_none(),
        left_witness.unwrap_or_default(),
    );
    report.check(
        "prec-negation-rule-right",
        right_witness.is_none(),
        right_witness.unwrap_or_default(),
    );

    let mut cut_witness = None;
    'cut: for &x in &carrier {
        for &y in &carrier {
            for &z in &carrier {
                if !raw_prec(x, d.or(neg(neg(y)), z)) {
                    continue;
                }
                for &x2 in &carrier {
                    for &y2 in &carrier {
                        if raw_prec(d.and(z, neg(neg(x2))), y2)
                            && !raw_prec(d.and(x, x2), d.or(y, y2))
                        {
                            cut_witness = Some(format!(
                                "x={} y={} z={} x'={} y'={}",
                                d.pair_name(x),
                                d.pair_name(y),
                                d.pair_name(z),
                                d.pair_name(x2),
                                d.pair_name(y2)
                            ));
                            break 'cut;
                        }
                    }
                }
            }
        }
    }
    report.check(
        "prec-cut-rule",
        cut_witness.is_none(),
        cut_witness.unwrap_or_default(),
    );

    // The derived order is exploratory: compute it and describe what it
    // does here, claiming nothing.
    match carrier
        .iter()
        .map(|&x| {
            carrier
                .iter()
                .map(|&y| shulman_leq(n, x, y))
                .collect::<Result<Vec<bool>, _>>()
        })
        .collect::<Result<Vec<Vec<bool>>, _>>()
    {
        Ok(rows) => {
            let reflexive = (0..carrier.len()).all(|i| rows[i][i]);
            let transitive = (0..carrier.len()).all(|i| {
                (0..carrier.len()).all(|j| {
                    (0..carrier.len()).all(|k| !(rows[i][j] && rows[j][k]) || rows[i][k])
                })
            });
            report.note("shulman-reflexive", reflexive.to_string());
            report.note("shulman-transitive", transitive.to_string());
        }
        Err(_) => {
            report.note("shulman-reflexive", "not computed");
            report.note("shulman-transitive", "not computed");
        }
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dframe::ndframe::{identity_ndframe, ndframe_from_bispace};
    use crate::dframe::{bitop_space, canonical_relations, dframes_isomorphic, RelationKind};
    use crate::order::fixtures::{chain, square, two};

    fn twist(l: &crate::order::FiniteLattice) -> DFrame {
        canonical_relations(l, l, RelationKind::Twist).unwrap()
    }

    #[test]
    fn twist_over_two_matches_the_hand_enumeration() {
        let p = partial_frame(&twist(&two()));
        assert_eq!(p.len(), 3);
        let bot = p.index_of((0, 0)).unwrap();
        let f = p.index_of((0, 1)).unwrap();
        let t = p.index_of((1, 0)).unwrap();
        assert!(p.prec(f, f));
        assert!(p.prec(t, t));
        assert!(!p.prec(bot, bot));
        assert!(p.prec(bot, t));
        assert_eq!(p.ff(), f);
        assert_eq!(p.tt(), t);
        assert_eq!(p.bot(), bot);
    }

    #[test]
    fn trivial_relations_give_precedence_only_at_the_bounds() {
        let c = chain(3);
        let d = canonical_relations(&c, &c, RelationKind::Trivial).unwrap();
        let p = partial_frame(&d);
        for (i, &x) in p.elements().iter().enumerate() {
            for (j, &y) in p.elements().iter().enumerate() {
                let expect = y.0 == d.plus.top() || x.1 == d.minus.top();
                assert_eq!(p.prec(i, j), expect, "{} vs {}", d.pair_name(x), d.pair_name(y));
            }
        }
    }

    #[test]
    fn operations_restrict_to_the_carrier() {
        let d = twist(&chain(3));
        let p = partial_frame(&d);
        for i in 0..p.len() {
            for j in 0..p.len() {
                let (x, y) = (p.elements()[i], p.elements()[j]);
                assert_eq!(p.elements()[p.imeet(i, j)], d.meet(x, y));
                assert_eq!(p.elements()[p.and(i, j)], d.and(x, y));
                assert_eq!(p.elements()[p.or(i, j)], d.or(x, y));
            }
        }
    }

    #[test]
    fn round_trip_is_isomorphic_for_twists() {
        for l in [two(), chain(3)] {
            let d = twist(&l);
            let back = dframe_from_partial(&partial_frame(&d));
            assert!(dframes_isomorphic(&d, &back));
        }
    }

    #[test]
    fn round_trip_is_isomorphic_for_the_two_point_bispace() {
        let x = bitop_space(
            "pair",
            &["x", "y"],
            &[&[], &["x"], &["x", "y"]],
            &[&[], &["y"], &["x", "y"]],
        )
        .unwrap();
        let d = crate::dframe::dframe_from_bispace(&x);
        let back = dframe_from_partial(&partial_frame(&d));
        assert!(dframes_isomorphic(&d, &back));
    }

    #[test]
    fn round_trip_does_not_conflate_relation_families() {
        // Twist and trivial relations only differ off chains; the square
        // separates them.
        let s = square();
        let trivial = canonical_relations(&s, &s, RelationKind::Trivial).unwrap();
        let back = dframe_from_partial(&partial_frame(&trivial));
        assert!(dframes_isomorphic(&trivial, &back));
        assert!(!dframes_isomorphic(&twist(&s), &back));
    }

    #[test]
    fn prec_suite_passes_on_identity_twists() {
        for l in [two(), chain(3)] {
            let n = identity_ndframe(&l);
            let report = prec_suite(&n).unwrap();
            assert!(report.passed(), "{report}");
        }
    }

    #[test]
    fn prec_suite_passes_on_the_bispace_frame() {
        let x = bitop_space(
            "skew",
            &["x", "y"],
            &[&[], &["x"], &["x", "y"]],
            &[&[], &["x", "y"]],
        )
        .unwrap();
        let n = ndframe_from_bispace(&x);
        let report = prec_suite(&n).unwrap();
        assert!(report.passed(), "{report}");
    }

    #[test]
    fn derived_order_relates_falsity_to_truth_over_two() {
        let n = identity_ndframe(&two());
        assert!(shulman_leq(&n, (0, 1), (1, 0)).unwrap());
        assert!(!shulman_leq(&n, (1, 0), (0, 1)).unwrap());
    }

    #[test]
    fn derived_order_is_reflexive_and_transitive_here() {
        for l in [two(), chain(3), square()] {
            let n = identity_ndframe(&l);
            let report = prec_suite(&n).unwrap();
            let value = |name: &str| {
                report
                    .entries
                    .iter()
                    .find(|e| e.name == name)
                    .and_then(|e| e.witness.clone())
                    .unwrap()
            };
            assert_eq!(value("shulman-reflexive"), "true");
            assert_eq!(value("shulman-transitive"), "true");
        }
    }
}
