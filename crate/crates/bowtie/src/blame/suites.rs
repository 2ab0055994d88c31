//! Exhaustive checks tying the four subtyping relations to cast
//! behaviour.
//!
//! The decomposition suite verifies two equations over every pair of
//! types up to a depth bound: standard subtyping is exactly positive and
//! negative subtyping together, and naive subtyping is positive one way
//! combined with negative the other way. The safety suite then runs
//! every cast it can build and confirms that the relations mean what
//! they claim: a positively subtyped cast never produces positive blame,
//! a negatively subtyped one never produces negative blame, and a
//! standard one stays silent altogether.

use std::collections::HashMap;

use super::eval::{eval_cast, values_of, CastTerm, Outcome, TermError, Value};
use super::subtype::{enumerate_types, subtype, CanonicalRules, Rel, SubtypeRules};
use super::{render_type, BlameLabel, Ty, TypeConfig};
use crate::report::Report;

fn rel_slot(rel: Rel) -> usize {
    match rel {
        Rel::Standard => 0,
        Rel::Naive => 1,
        Rel::Positive => 2,
        Rel::Negative => 3,
    }
}

/// All four relations tabulated over the depth-bounded type universe.
pub struct RelationTables {
    /// The universe, shallower types first.
    pub types: Vec<Ty>,
    tables: [Vec<bool>; 4],
}

impl RelationTables {
    /// Does `rel` hold between the types at these positions?
    pub fn holds(&self, rel: Rel, i: usize, j: usize) -> bool {
        self.tables[rel_slot(rel)][i * self.types.len() + j]
    }
}

/// Tabulates the relations induced by a rule set. Pairs are filled in
/// order of nesting depth, so every subproblem an arrow rule asks about
/// is already decided and each pair costs one rule application.
pub fn relation_tables_with(
    cfg: &TypeConfig,
    depth: usize,
    rules: &dyn SubtypeRules,
) -> RelationTables {
    let types = enumerate_types(cfg, depth);
    let n = types.len();
    let depths: Vec<usize> = types.iter().map(Ty::depth).collect();
    let index: HashMap<Ty, usize> = types
        .iter()
        .enumerate()
        .map(|(i, t)| (t.clone(), i))
        .collect();
    // Rule subproblems are almost always the components of the pair at
    // hand, so resolve those by pointer before falling back to hashing
    // the whole tree.
    let parts: Vec<Option<[(usize, *const Ty); 2]>> = types
        .iter()
        .map(|t| match t {
            Ty::Fun(a, b) => Some([(index[&**a], &**a as *const Ty), (index[&**b], &**b as *const Ty)]),
            _ => None,
        })
        .collect();
    let mut tables = [
        vec![false; n * n],
        vec![false; n * n],
        vec![false; n * n],
        vec![false; n * n],
    ];
    for level in 1..=depth {
        for i in 0..n {
            if depths[i] > level {
                continue;
            }
            for j in 0..n {
                if depths[j] > level || depths[i].max(depths[j]) != level {
                    continue;
                }
                let resolve = |x: &Ty| -> usize {
                    for side in [i, j] {
                        if let Some(pair) = &parts[side] {
                            for (at, ptr) in pair {
                                if std::ptr::eq(x, *ptr) {
                                    return *at;
                                }
                            }
                        }
                    }
                    index[x]
                };
                let mut decided = [false; 4];
                for rel in Rel::all() {
                    let value = {
                        let lookup = &mut |r: Rel, a: &Ty, b: &Ty| {
                            tables[rel_slot(r)][resolve(a) * n + resolve(b)]
                        };
                        rules.decide(rel, &types[i], &types[j], lookup)
                    };
                    decided[rel_slot(rel)] = value;
                }
                for slot in 0..4 {
                    tables[slot][i * n + j] = decided[slot];
                }
            }
        }
    }
    RelationTables { types, tables }
}

/// Tables for the intended rules.
pub fn relation_tables(cfg: &TypeConfig, depth: usize) -> RelationTables {
    relation_tables_with(cfg, depth, &CanonicalRules)
}

/// Checks both decomposition equations over every ordered pair of types
/// up to `depth`, under the given rule set.
pub fn check_decomposition_with(
    cfg: &TypeConfig,
    depth: usize,
    rules: &dyn SubtypeRules,
) -> Report {
    let rt = relation_tables_with(cfg, depth, rules);
    let n = rt.types.len();
    let mut report = Report::new("subtyping decomposition");
    report.note("types-enumerated", &n.to_string());
    report.note("pairs-checked", &(n * n).to_string());
    let mut standard_bad = None;
    let mut naive_bad = None;
    for i in 0..n {
        for j in 0..n {
            let std_ = rt.holds(Rel::Standard, i, j);
            let naive = rt.holds(Rel::Naive, i, j);
            let pos = rt.holds(Rel::Positive, i, j);
            let neg = rt.holds(Rel::Negative, i, j);
            let neg_back = rt.holds(Rel::Negative, j, i);
            if standard_bad.is_none() && std_ != (pos && neg) {
                standard_bad = Some(format!(
                    "S = {}, T = {}: standard={std_} positive={pos} negative={neg}",
                    render_type(cfg, &rt.types[i]),
                    render_type(cfg, &rt.types[j]),
                ));
            }
            if naive_bad.is_none() && naive != (pos && neg_back) {
                naive_bad = Some(format!(
                    "S = {}, T = {}: naive={naive} positive={pos} reverse-negative={neg_back}",
                    render_type(cfg, &rt.types[i]),
                    render_type(cfg, &rt.types[j]),
                ));
            }
        }
    }
    report.check(
        "standard-is-positive-and-negative",
        standard_bad.is_none(),
        standard_bad.as_deref().unwrap_or(""),
    );
    report.check(
        "naive-is-positive-with-negative-reversed",
        naive_bad.is_none(),
        naive_bad.as_deref().unwrap_or(""),
    );
    report
}

/// The decomposition suite under the intended rules.
pub fn check_decomposition(cfg: &TypeConfig, depth: usize) -> Report {
    check_decomposition_with(cfg, depth, &CanonicalRules)
}

/// Can a value of `s` be cast to `t` without the evaluator rejecting the
/// term outright? Shapes must agree wherever neither side is dynamic.
fn compatible(s: &Ty, t: &Ty) -> bool {
    match (s, t) {
        (Ty::Dyn, _) | (_, Ty::Dyn) => true,
        (Ty::Refine(c, _), Ty::Refine(d, _)) => c == d,
        (Ty::Fun(a, b), Ty::Fun(a2, b2)) => compatible(a2, a) && compatible(b, b2),
        _ => false,
    }
}

/// Drives a value of the given type through everything it can do:
/// functions are applied to every domain value and their results are
/// driven in turn. Blame raised along the way lands in `blames`.
fn exercise(
    cfg: &TypeConfig,
    value: &Value,
    ty: &Ty,
    blames: &mut Vec<BlameLabel>,
    probes: &mut usize,
) -> Result<(), TermError> {
    if let Ty::Fun(dom, cod) = ty {
        for arg in values_of(cfg, dom) {
            *probes += 1;
            let term = CastTerm::app(CastTerm::Value(value.clone()), CastTerm::Value(arg));
            match eval_cast(cfg, &term)? {
                Outcome::Result(r) => exercise(cfg, &r, cod, blames, probes)?,
                Outcome::Blame(l) => blames.push(l),
            }
        }
    }
    Ok(())
}

/// Casts every value of every type to every compatible type up to
/// `depth`, exercises the result exhaustively, and checks that blame
/// lands only where the relations permit it.
///
/// Arguments that have themselves been cast no longer compare equal to
/// table keys, so function-typed domains stop at depth two.
pub fn blame_safety_suite(cfg: &TypeConfig, depth: usize) -> Result<Report, TermError> {
    assert!(depth <= 2, "value exercising stops at depth two");
    let types = enumerate_types(cfg, depth);
    let label = BlameLabel::positive("p");
    let mut report = Report::new("blame safety");
    let mut pairs = 0usize;
    let mut probes = 0usize;
    let mut positive_bad = None;
    let mut negative_bad = None;
    let mut standard_bad = None;
    for s in &types {
        for t in &types {
            if !compatible(s, t) {
                continue;
            }
            pairs += 1;
            let shields_pos = subtype(Rel::Positive, s, t);
            let shields_neg = subtype(Rel::Negative, s, t);
            let shields_all = subtype(Rel::Standard, s, t);
            for v in values_of(cfg, s) {
                let term = CastTerm::cast(t.clone(), s.clone(), label.clone(), CastTerm::Value(v.clone()));
                let mut blames = Vec::new();
                probes += 1;
                match eval_cast(cfg, &term)? {
                    Outcome::Result(r) => exercise(cfg, &r, t, &mut blames, &mut probes)?,
                    Outcome::Blame(l) => blames.push(l),
                }
                let witness = |what: &BlameLabel| {
                    format!(
                        "S = {}, T = {}, value {}: {}",
                        render_type(cfg, s),
                        render_type(cfg, t),
                        v.render(cfg),
                        what.describe()
                    )
                };
                for b in &blames {
                    if b.name != label.name {
                        continue;
                    }
                    if shields_pos && b.positive && positive_bad.is_none() {
                        positive_bad = Some(witness(b));
                    }
                    if shields_neg && !b.positive && negative_bad.is_none() {
                        negative_bad = Some(witness(b));
                    }
                    if shields_all && standard_bad.is_none() {
                        standard_bad = Some(witness(b));
                    }
                }
            }
        }
    }
    report.note("compatible-pairs", &pairs.to_string());
    report.note("casts-and-applications", &probes.to_string());
    report.check(
        "positive-subtyping-shields-positive-blame",
        positive_bad.is_none(),
        positive_bad.as_deref().unwrap_or(""),
    );
    report.check(
        "negative-subtyping-shields-negative-blame",
        negative_bad.is_none(),
        negative_bad.as_deref().unwrap_or(""),
    );
    report.check(
        "standard-subtyping-shields-all-blame",
        standard_bad.is_none(),
        standard_bad.as_deref().unwrap_or(""),
    );
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::blame::subtype::subtype_with;

    #[test]
    fn tables_agree_with_direct_recursion() {
        let cfg = TypeConfig::bool_only();
        let rt = relation_tables(&cfg, 2);
        for (i, s) in rt.types.iter().enumerate() {
            for (j, t) in rt.types.iter().enumerate() {
                for rel in Rel::all() {
                    assert_eq!(rt.holds(rel, i, j), subtype(rel, s, t));
                }
            }
        }
    }

    #[test]
    fn both_decompositions_hold_at_depth_three() {
        let cfg = TypeConfig::depth3_default();
        let report = check_decomposition(&cfg, 3);
        assert!(report.passed(), "{report}");
    }

    #[test]
    fn both_decompositions_hold_for_booleans_at_depth_two() {
        let report = check_decomposition(&TypeConfig::bool_only(), 2);
        assert!(report.passed(), "{report}");
    }

    #[test]
    fn a_covariant_naive_mutant_is_caught_by_the_decomposition() {
        struct ContravariantNaive;
        impl SubtypeRules for ContravariantNaive {
            fn decide(
                &self,
                rel: Rel,
                s: &Ty,
                t: &Ty,
                sub: &mut dyn FnMut(Rel, &Ty, &Ty) -> bool,
            ) -> bool {
                if rel == Rel::Naive {
                    if let (Ty::Fun(a, b), Ty::Fun(a2, b2)) = (s, t) {
                        return sub(Rel::Naive, a2, a) && sub(Rel::Naive, b, b2);
                    }
                }
                CanonicalRules.decide(rel, s, t, sub)
            }
        }
        let cfg = TypeConfig::bool_only();
        let report = check_decomposition_with(&cfg, 2, &ContravariantNaive);
        assert!(!report.passed());
        let failure = report.first_failure().unwrap();
        assert_eq!(failure.name, "naive-is-positive-with-negative-reversed");
        // The mutant still agrees with itself outside arrows.
        let b = Ty::base(&cfg, 0);
        assert!(subtype_with(&ContravariantNaive, Rel::Naive, &b, &b));
    }

    #[test]
    fn blame_safety_holds_for_booleans_at_depth_two() {
        let cfg = TypeConfig::bool_only();
        let report = blame_safety_suite(&cfg, 2).unwrap();
        assert!(report.passed(), "{report}");
    }

    #[test]
    fn blame_safety_holds_at_depth_one_with_two_carriers() {
        let cfg = TypeConfig::depth3_default();
        let report = blame_safety_suite(&cfg, 1).unwrap();
        assert!(report.passed(), "{report}");
    }

    #[test]
    fn unrelated_casts_do_blame() {
        // Sanity for the suite: the shields are not vacuous. A cast from
        // the full carrier into a proper subset must blame positively
        // somewhere, and the relations say so in advance.
        let cfg = TypeConfig::bool_only();
        let all = Ty::base(&cfg, 0);
        let tt = Ty::refine(&cfg, "bool", &["tt"]).unwrap();
        assert!(!subtype(Rel::Positive, &all, &tt));
        let term = CastTerm::cast(
            tt,
            all,
            BlameLabel::positive("p"),
            CastTerm::Value(Value::ground(&cfg, "ff").unwrap()),
        );
        assert_eq!(
            eval_cast(&cfg, &term).unwrap(),
            Outcome::Blame(BlameLabel::positive("p"))
        );
    }

    fn transitive_over(rt: &RelationTables, rel: Rel, keep: &[usize]) -> Option<String> {
        // Bitset rows over the kept indices: rel is transitive exactly
        // when every related row is contained in the relating row.
        let n = keep.len();
        let words = n.div_ceil(64);
        let mut rows = vec![0u64; n * words];
        for (a, &i) in keep.iter().enumerate() {
            for (b, &j) in keep.iter().enumerate() {
                if rt.holds(rel, i, j) {
                    rows[a * words + b / 64] |= 1 << (b % 64);
                }
            }
        }
        for a in 0..n {
            for b in 0..n {
                if rows[a * words + b / 64] & (1 << (b % 64)) == 0 {
                    continue;
                }
                for w in 0..words {
                    if rows[b * words + w] & !rows[a * words + w] != 0 {
                        return Some(format!("broken through pair ({a}, {b})"));
                    }
                }
            }
        }
        None
    }

    #[test]
    fn standard_and_naive_are_transitive_at_depth_three() {
        let cfg = TypeConfig::bool_only();
        let rt = relation_tables(&cfg, 3);
        let keep: Vec<usize> = (0..rt.types.len()).collect();
        for rel in [Rel::Standard, Rel::Naive] {
            assert_eq!(transitive_over(&rt, rel, &keep), None, "{rel:?}");
        }
    }

    #[test]
    fn positive_and_negative_are_transitive_without_dyn_at_depth_three() {
        fn dyn_free(t: &Ty) -> bool {
            match t {
                Ty::Dyn => false,
                Ty::Refine(..) => true,
                Ty::Fun(a, b) => dyn_free(a) && dyn_free(b),
            }
        }
        let cfg = TypeConfig::bool_only();
        let rt = relation_tables(&cfg, 3);
        let keep: Vec<usize> = (0..rt.types.len())
            .filter(|&i| dyn_free(&rt.types[i]))
            .collect();
        for rel in [Rel::Positive, Rel::Negative] {
            assert_eq!(transitive_over(&rt, rel, &keep), None, "{rel:?}");
        }
    }
}
