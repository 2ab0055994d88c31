//! D-frames with negation, and their exchange with lattice injections.
//!
//! An [`NdFrame`] adds two bridge maps to a d-frame: `m` sends positive
//! evidence to the negative side, `p` sends it back. Six axioms make the
//! maps meet-preserving interior-style operators compatible with `con` and
//! `tot`; [`check_ndframe`] verifies them all.
//!
//! The two directions of the exchange are [`ndframe_from_injection`], which
//! reads the relations and the `p` adjoint off an injective homomorphism,
//! and [`injection_from_ndframe`], which recovers the homomorphism whenever
//! `p` after `m` is the identity. On frames built from an injection the
//! round trip reproduces `con`, `tot`, and `p` literally, which
//! [`literal_diff`](NdFrame::literal_diff) makes checkable. Bitopological
//! spaces provide negation too, via largest-contained-open interior maps.


use crate::dframe::{check_dframe, DFrame, DFrameError};
use crate::order::{build_lattice, FiniteLattice, LatticeMap};
use crate::report::Report;

pub use crate::dframe::canonical_relations;

/// Result alias for this module.
type Result<T, E = DFrameError> = std::result::Result<T, E>;

/// A d-frame with bridge maps `m: plus -> minus` and `p: minus -> plus`.
#[derive(Debug, Clone, PartialEq)]
pub struct NdFrame {
    /// The underlying d-frame.
    pub base: DFrame,
    /// Backward bridge, from negative to positive evidence.
    pub p: LatticeMap,
    /// Forward bridge, from positive to negative evidence.
    pub m: LatticeMap,
}

impl NdFrame {
    /// Applies the backward bridge.
    pub fn p(&self, b: usize) -> usize {
        self.p.apply(b)
    }

    /// Applies the forward bridge.
    pub fn m(&self, a: usize) -> usize {
        self.m.apply(a)
    }

    /// True when `p` undoes `m` on every element.
    pub fn pm_is_identity(&self) -> bool {
        (0..self.base.plus.len()).all(|a| self.p(self.m(a)) == a)
    }

    /// True when `p` preserves binary joins.
    pub fn p_preserves_joins(&self) -> bool {
        let minus = &self.base.minus;
        let plus = &self.base.plus;
        (0..minus.len()).all(|b| {
            (0..minus.len()).all(|c| self.p(minus.join(b, c)) == plus.join(self.p(b), self.p(c)))
        })
    }

    /// Field-by-field comparison against another frame over the same
    /// component lattices: first difference in `con`, `tot`, `p`, or `m`,
    /// if any. Supports round-trip claims that are about literal equality
    /// rather than isomorphism.
    pub fn literal_diff(&self, other: &NdFrame) -> Option<String> {
        let d = &self.base;
        let e = &other.base;
        if !d.plus.same_structure(&e.plus) || !d.minus.same_structure(&e.minus) {
            return Some("component lattices differ".to_string());
        }
        for a in 0..d.plus.len() {
            for b in 0..d.minus.len() {
                if d.con(a, b) != e.con(a, b) {
                    return Some(format!(
                        "con disagrees at ({},{})",
                        d.plus.element_name(a),
                        d.minus.element_name(b)
                    ));
                }
                if d.tot(a, b) != e.tot(a, b) {
                    return Some(format!(
                        "tot disagrees at ({},{})",
                        d.plus.element_name(a),
                        d.minus.element_name(b)
                    ));
                }
            }
        }
        for b in 0..d.minus.len() {
            if self.p(b) != other.p(b) {
                return Some(format!("p disagrees at {}", d.minus.element_name(b)));
            }
        }
        for a in 0..d.plus.len() {
            if self.m(a) != other.m(a) {
                return Some(format!("m disagrees at {}", d.plus.element_name(a)));
            }
        }
        None
    }
}

/// The twist relations on two copies of `l` with identity bridges: the
/// degenerate case where both kinds of evidence coincide.
pub fn identity_ndframe(l: &FiniteLattice) -> NdFrame {
    let base = canonical_relations(l, l, crate::dframe::RelationKind::Twist)
        .expect("a lattice is symmetric with itself");
    NdFrame {
        base,
        p: LatticeMap::identity(l),
        m: LatticeMap::identity(l),
    }
}

/// Verifies the six bridge axioms on top of the d-frame axioms. The
/// underlying d-frame report is absorbed under the `dframe` prefix.
pub fn check_ndframe(n: &NdFrame) -> Report {
    let mut report = Report::new(format!("negation axioms for {}", n.base.name));
    report.absorb("dframe", check_dframe(&n.base));
    let plus = &n.base.plus;
    let minus = &n.base.minus;

    for (name, map, l) in [("p", &n.p, minus), ("m", &n.m, plus)] {
        let mut witness = None;
        'outer: for x in 0..l.len() {
            for y in 0..l.len() {
                let lhs = map.apply(l.meet(x, y));
                let rhs = map.target.meet(map.apply(x), map.apply(y));
                if lhs != rhs {
                    witness = Some(format!(
                        "{name}({} meet {}) = {} but the meet of images is {}",
                        l.element_name(x),
                        l.element_name(y),
                        map.target.element_name(lhs),
                        map.target.element_name(rhs)
                    ));
                    break 'outer;
                }
            }
        }
        report.check(
            format!("axiom1-{name}-preserves-meets"),
            witness.is_none(),
            witness.unwrap_or_default(),
        );
        report.check(
            format!("axiom2-{name}-preserves-top"),
            map.apply(l.top()) == map.target.top(),
            format!(
                "{name}(top) = {}",
                map.target.element_name(map.apply(l.top()))
            ),
        );
        report.check(
            format!("axiom3-{name}-preserves-bottom"),
            map.apply(l.bottom()) == map.target.bottom(),
            format!(
                "{name}(bottom) = {}",
                map.target.element_name(map.apply(l.bottom()))
            ),
        );
    }

    let pm = (0..plus.len()).find(|&a| !plus.leq(n.p(n.m(a)), a));
    report.check(
        "axiom4-pm-deflationary",
        pm.is_none(),
        pm.map(|a| {
            format!(
                "p(m({})) = {} is not below it",
                plus.element_name(a),
                plus.element_name(n.p(n.m(a)))
            )
        })
        .unwrap_or_default(),
    );
    let mp = (0..minus.len()).find(|&b| !minus.leq(n.m(n.p(b)), b));
    report.check(
        "axiom4-mp-deflationary",
        mp.is_none(),
        mp.map(|b| {
            format!(
                "m(p({})) = {} is not below it",
                minus.element_name(b),
                minus.element_name(n.m(n.p(b)))
            )
        })
        .unwrap_or_default(),
    );

    // con rules: (a and b, c) in con implies (a, m(b) and c) in con, and
    // (a, b and c) in con implies (a and p(b), c) in con. The first moves a
    // positive conjunct across, the second a negative one.
    let mut con_left = None;
    let mut con_right = None;
    for a in 0..plus.len() {
        for b in 0..plus.len() {
            for c in 0..minus.len() {
                if n.base.con(plus.meet(a, b), c) && !n.base.con(a, minus.meet(n.m(b), c)) {
                    con_left.get_or_insert(format!(
                        "con({} meet {}, {}) holds but moving {} across fails",
                        plus.element_name(a),
                        plus.element_name(b),
                        minus.element_name(c),
                        plus.element_name(b)
                    ));
                }
            }
        }
        for b in 0..minus.len() {
            for c in 0..minus.len() {
                if n.base.con(a, minus.meet(b, c)) && !n.base.con(plus.meet(a, n.p(b)), c) {
                    con_right.get_or_insert(format!(
                        "con({}, {} meet {}) holds but moving {} across fails",
                        plus.element_name(a),
                        minus.element_name(b),
                        minus.element_name(c),
                        minus.element_name(b)
                    ));
                }
            }
        }
    }
    report.check(
        "axiom5-con-transfer-left",
        con_left.is_none(),
        con_left.unwrap_or_default(),
    );
    report.check(
        "axiom5-con-transfer-right",
        con_right.is_none(),
        con_right.unwrap_or_default(),
    );

    // tot rules, mirror images of the con rules with joins.
    let mut tot_left = None;
    let mut tot_right = None;
    for a in 0..plus.len() {
        for b in 0..plus.len() {
            for c in 0..minus.len() {
                if n.base.tot(a, minus.join(n.m(b), c)) && !n.base.tot(plus.join(a, b), c) {
                    tot_left.get_or_insert(format!(
                        "tot({}, m({}) join {}) holds but moving {} back fails",
                        plus.element_name(a),
                        plus.element_name(b),
                        minus.element_name(c),
                        plus.element_name(b)
                    ));
                }
            }
        }
        for b in 0..minus.len() {
            for c in 0..minus.len() {
                if n.base.tot(plus.join(a, n.p(b)), c) && !n.base.tot(a, minus.join(b, c)) {
                    tot_right.get_or_insert(format!(
                        "tot({} join p({}), {}) holds but moving {} back fails",
                        plus.element_name(a),
                        minus.element_name(b),
                        minus.element_name(c),
                        minus.element_name(b)
                    ));
                }
            }
        }
    }
    report.check(
        "axiom6-tot-transfer-left",
        tot_left.is_none(),
        tot_left.unwrap_or_default(),
    );
    report.check(
        "axiom6-tot-transfer-right",
        tot_right.is_none(),
        tot_right.unwrap_or_default(),
    );
    report
}

/// Builds the negation d-frame of an injective homomorphism `m: L+ -> L-`:
/// `con(a,b)` iff `m(a) meet b = 0`, `tot(a,b)` iff `m(a) join b = 1`, and
/// `p` the right adjoint of `m`, sending `b` to the largest element whose
/// image stays below `b`.
pub fn ndframe_from_injection(m: &LatticeMap) -> Result<NdFrame> {
    if let Some(w) = m.homomorphism_witness() {
        return Err(DFrameError::NotAHomomorphism(w));
    }
    if let Some((x, y)) = m.injectivity_witness() {
        return Err(DFrameError::NotInjective(format!(
            "{} and {} share an image",
            m.source.element_name(x),
            m.source.element_name(y)
        )));
    }
    let plus = &m.source;
    let minus = &m.target;
    let mut con = Vec::with_capacity(plus.len() * minus.len());
    let mut tot = Vec::with_capacity(plus.len() * minus.len());
    for a in 0..plus.len() {
        for b in 0..minus.len() {
            con.push(minus.meet(m.apply(a), b) == minus.bottom());
            tot.push(minus.join(m.apply(a), b) == minus.top());
        }
    }
    // The adjoint exists because m preserves joins: candidates below b are
    // closed under joins, so their join is the witness. (Injectivity is not
    // needed for p itself, only for the axioms.)
    let mut p_table = Vec::with_capacity(minus.len());
    for b in 0..minus.len() {
        let mut best = plus.bottom();
        for a in 0..plus.len() {
            if minus.leq(m.apply(a), b) {
                best = plus.join(best, a);
            }
        }
        p_table.push(best);
    }
    let base = DFrame::new(
        &format!("{}-into-{}", plus.name(), minus.name()),
        plus.clone(),
        minus.clone(),
        con,
        tot,
    );
    Ok(NdFrame {
        base,
        p: LatticeMap {
            source: minus.clone(),
            target: plus.clone(),
            table: p_table,
        },
        m: m.clone(),
    })
}

/// Recovers the generating injection from a negation d-frame. Defined
/// exactly when `p` undoes `m`; the bridge `m` itself is the injection.
pub fn injection_from_ndframe(n: &NdFrame) -> Result<LatticeMap> {
    if let Some(a) = (0..n.base.plus.len()).find(|&a| n.p(n.m(a)) != a) {
        return Err(DFrameError::NotPMId(format!(
            "p(m({})) = {}",
            n.base.plus.element_name(a),
            n.base.plus.element_name(n.p(n.m(a)))
        )));
    }
    Ok(n.m.clone())
}

/// Splits a homomorphism into a surjection onto its image sublattice
/// followed by an inclusion. The image keeps the target's element names.
pub fn factor_homomorphism(h: &LatticeMap) -> Result<(LatticeMap, LatticeMap)> {
    if let Some(w) = h.homomorphism_witness() {
        return Err(DFrameError::NotAHomomorphism(w));
    }
    let mut image: Vec<usize> = (0..h.source.len()).map(|a| h.apply(a)).collect();
    image.sort_unstable();
    image.dedup();
    let names: Vec<&str> = image.iter().map(|&t| h.target.element_name(t)).collect();
    let mut pairs = Vec::new();
    for (i, &x) in image.iter().enumerate() {
        for (j, &y) in image.iter().enumerate() {
            if h.target.leq(x, y) {
                pairs.push((names[i], names[j]));
            }
        }
    }
    // The image of a homomorphism is closed under meets and joins, so the
    // restricted order is again a lattice.
    let mid = build_lattice(&format!("{}-image", h.source.name()), &names, &pairs)
        .expect("homomorphic images are sublattices");
    let position = |t: usize| image.iter().position(|&x| x == t).unwrap();
    let surj = LatticeMap {
        source: h.source.clone(),
        target: mid.clone(),
        table: (0..h.source.len()).map(|a| position(h.apply(a))).collect(),
    };
    let incl = LatticeMap {
        source: mid,
        target: h.target.clone(),
        table: image,
    };
    Ok((surj, incl))
}

/// The negation d-frame of a bitopological space: the bridges are interior
/// operators, sending an open of one topology to the largest open of the
/// other contained in it.
pub fn ndframe_from_bispace(space: &crate::dframe::BitopSpace) -> NdFrame {
    let base = crate::dframe::dframe_from_bispace(space);
    let interior = |opens_from: &[u32], into: &[u32]| -> Vec<usize> {
        opens_from
            .iter()
            .map(|&u| {
                let mut best_mask = 0u32;
                let mut best = 0usize;
                for (j, &v) in into.iter().enumerate() {
                    if v & !u == 0 && v | best_mask != best_mask {
                        best_mask |= v;
                        best = j;
                    }
                }
                // Unions of opens are open, so the accumulated mask is
                // itself a member; find it.
                if best_mask != into[best] {
                    best = into.iter().position(|&v| v == best_mask).unwrap();
                }
                best
            })
            .collect()
    };
    let m = LatticeMap {
        source: base.plus.clone(),
        target: base.minus.clone(),
        table: interior(&space.plus_opens, &space.minus_opens),
    };
    let p = LatticeMap {
        source: base.minus.clone(),
        target: base.plus.clone(),
        table: interior(&space.minus_opens, &space.plus_opens),
    };
    NdFrame { base, p, m }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dframe::bitop_space;
    use crate::order::fixtures::{chain, square, two};

    fn two_into_three() -> LatticeMap {
        LatticeMap::from_pairs(two(), chain(3), &[("0", "0"), ("1", "2")]).unwrap()
    }

    fn diagonal_two_into_square() -> LatticeMap {
        LatticeMap::from_pairs(two(), square(), &[("0", "(0,0)"), ("1", "(1,1)")]).unwrap()
    }

    #[test]
    fn identity_bridges_satisfy_all_axioms() {
        for l in [two(), chain(3), chain(4), square()] {
            let n = identity_ndframe(&l);
            let report = check_ndframe(&n);
            assert!(report.passed(), "{report}");
            assert!(n.pm_is_identity());
        }
    }

    #[test]
    fn constant_top_bridge_fails_bottom_preservation() {
        let c = chain(3);
        let mut n = identity_ndframe(&c);
        n.p.table = vec![c.top(); c.len()];
        let report = check_ndframe(&n);
        assert!(!report.passed());
        assert!(report
            .entries
            .iter()
            .any(|e| !e.passed && e.name == "axiom3-p-preserves-bottom"));
    }

    #[test]
    fn injections_generate_lawful_frames() {
        for m in [two_into_three(), diagonal_two_into_square()] {
            let n = ndframe_from_injection(&m).unwrap();
            let report = check_ndframe(&n);
            assert!(report.passed(), "{report}");
            assert!(n.pm_is_identity());
        }
    }

    #[test]
    fn adjoint_of_the_chain_injection_collapses_the_middle() {
        let n = ndframe_from_injection(&two_into_three()).unwrap();
        let mid = n.base.minus.element_index("1").unwrap();
        assert_eq!(n.p(mid), n.base.plus.bottom());
    }

    #[test]
    fn diagonal_injection_con_pins_the_bottom() {
        let n = ndframe_from_injection(&diagonal_two_into_square()).unwrap();
        let one = n.base.plus.element_index("1").unwrap();
        for b in 0..n.base.minus.len() {
            assert_eq!(n.base.con(one, b), b == n.base.minus.bottom());
        }
    }

    #[test]
    fn diagonal_adjoint_does_not_preserve_joins() {
        let n = ndframe_from_injection(&diagonal_two_into_square()).unwrap();
        assert!(n.pm_is_identity());
        assert!(!n.p_preserves_joins());
    }

    #[test]
    fn non_homomorphisms_are_rejected() {
        // 0 and 1 both to the top is monotone but misses the bottom.
        let bad = LatticeMap {
            source: two(),
            target: chain(3),
            table: vec![2, 2],
        };
        assert!(matches!(
            ndframe_from_injection(&bad),
            Err(DFrameError::NotAHomomorphism(_))
        ));
        let collapse = LatticeMap {
            source: chain(3),
            target: two(),
            table: vec![0, 1, 1],
        };
        assert!(matches!(
            ndframe_from_injection(&collapse),
            Err(DFrameError::NotInjective(_))
        ));
    }

    #[test]
    fn round_trip_restores_the_injection_literally() {
        for m in [two_into_three(), diagonal_two_into_square()] {
            let n = ndframe_from_injection(&m).unwrap();
            let back = injection_from_ndframe(&n).unwrap();
            assert_eq!(back.table, m.table);
            let again = ndframe_from_injection(&back).unwrap();
            assert_eq!(n.literal_diff(&again), None);
        }
    }

    #[test]
    fn identity_frame_round_trips_as_the_identity_injection() {
        let n = identity_ndframe(&two());
        let m = injection_from_ndframe(&n).unwrap();
        assert_eq!(m.table, vec![0, 1]);
    }

    fn asymmetric_bispace() -> crate::dframe::BitopSpace {
        bitop_space(
            "skew",
            &["x", "y"],
            &[&[], &["x"], &["x", "y"]],
            &[&[], &["x", "y"]],
        )
        .unwrap()
    }

    #[test]
    fn bispace_interior_bridges_satisfy_all_axioms() {
        let n = ndframe_from_bispace(&asymmetric_bispace());
        let report = check_ndframe(&n);
        assert!(report.passed(), "{report}");
    }

    #[test]
    fn interior_bridges_can_lose_information() {
        let n = ndframe_from_bispace(&asymmetric_bispace());
        // {x} collapses to the empty set on the negative side and stays
        // there on the way back.
        let ux = n.base.plus.element_index("{x}").unwrap();
        assert_eq!(n.m(ux), n.base.minus.bottom());
        assert!(!n.pm_is_identity());
        assert!(matches!(
            injection_from_ndframe(&n),
            Err(DFrameError::NotPMId(_))
        ));
    }

    #[test]
    fn factoring_splits_a_collapse_into_surjection_and_inclusion() {
        let h = LatticeMap::from_pairs(chain(3), two(), &[("0", "0"), ("1", "1"), ("2", "1")])
            .unwrap();
        let (surj, incl) = factor_homomorphism(&h).unwrap();
        assert!(surj.is_surjective());
        assert!(incl.is_injective());
        assert!(surj.is_homomorphism() && incl.is_homomorphism());
        for a in 0..h.source.len() {
            assert_eq!(incl.apply(surj.apply(a)), h.apply(a));
        }
        assert_eq!(surj.target.len(), 2);
    }

    #[test]
    fn factoring_an_injection_makes_the_surjection_bijective() {
        let (surj, incl) = factor_homomorphism(&diagonal_two_into_square()).unwrap();
        assert!(surj.is_injective() && surj.is_surjective());
        assert_eq!(incl.source.len(), 2);
    }
}
