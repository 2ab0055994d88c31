//! Four subtyping relations: standard, naive, positive, and negative.
//!
//! Standard subtyping is contravariant in function domains; naive
//! subtyping is covariant on both sides and matches the untrained eye.
//! The positive and negative relations track which side of a cast can be
//! blamed, and the two decompositions tie everything together: standard
//! subtyping is positive and negative combined, and naive subtyping is
//! positive one way and negative the other.
//!
//! The rule set sits behind a trait so a deliberately wrong variant can
//! be plugged in; the exhaustive suites must catch it.

use super::{Ty, TypeConfig};

/// Which subtyping relation is being asked.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Rel {
    /// Ordinary subtyping, contravariant in domains.
    Standard,
    /// Covariant on both sides of an arrow.
    Naive,
    /// The cast's own side is safe from blame.
    Positive,
    /// The cast's context is safe from blame.
    Negative,
}

impl Rel {
    /// All four relations, in a fixed order.
    pub fn all() -> [Rel; 4] {
        [Rel::Standard, Rel::Naive, Rel::Positive, Rel::Negative]
    }

    /// Lower-case name.
    pub fn name(self) -> &'static str {
        match self {
            Rel::Standard => "standard",
            Rel::Naive => "naive",
            Rel::Positive => "positive",
            Rel::Negative => "negative",
        }
    }

    /// Parses a relation name.
    pub fn parse(s: &str) -> Option<Rel> {
        Rel::all().into_iter().find(|r| r.name() == s)
    }
}

/// One step of a subtyping derivation. `sub` answers the subproblems, so
/// an implementation decides only the rule at the root; swapping in a
/// wrong rule here is how the detection suites are exercised.
pub trait SubtypeRules {
    /// Does `s` relate to `t` under `rel`, given answers for components?
    fn decide(&self, rel: Rel, s: &Ty, t: &Ty, sub: &mut dyn FnMut(Rel, &Ty, &Ty) -> bool)
        -> bool;
}

/// The intended rule set.
///
/// Refinements of the same carrier compare by inclusion, except that the
/// negative relation never blames a refinement's context, so it holds
/// outright. The dynamic type accepts everything in all four relations;
/// on the left it holds only negatively. Arrows are contravariant,
/// covariant, or mixed according to the relation.
pub struct CanonicalRules;

impl SubtypeRules for CanonicalRules {
    fn decide(
        &self,
        rel: Rel,
        s: &Ty,
        t: &Ty,
        sub: &mut dyn FnMut(Rel, &Ty, &Ty) -> bool,
    ) -> bool {
        match (s, t) {
            (_, Ty::Dyn) => true,
            (Ty::Dyn, _) => rel == Rel::Negative,
            (Ty::Refine(c, p), Ty::Refine(d, q)) => {
                c == d
                    && match rel {
                        Rel::Negative => true,
                        _ => p.is_subset(q),
                    }
            }
            (Ty::Fun(a, b), Ty::Fun(a2, b2)) => match rel {
                Rel::Standard => sub(Rel::Standard, a2, a) && sub(Rel::Standard, b, b2),
                Rel::Naive => sub(Rel::Naive, a, a2) && sub(Rel::Naive, b, b2),
                Rel::Positive => sub(Rel::Negative, a2, a) && sub(Rel::Positive, b, b2),
                Rel::Negative => sub(Rel::Positive, a2, a) && sub(Rel::Negative, b, b2),
            },
            _ => false,
        }
    }
}

/// Decides `rel` by recursing through a rule set.
pub fn subtype_with(rules: &dyn SubtypeRules, rel: Rel, s: &Ty, t: &Ty) -> bool {
    rules.decide(rel, s, t, &mut |r, a, b| subtype_with(rules, r, a, b))
}

/// Decides `rel` under the intended rules.
pub fn subtype(rel: Rel, s: &Ty, t: &Ty) -> bool {
    subtype_with(&CanonicalRules, rel, s, t)
}

/// All types up to the given nesting depth: the dynamic type, every
/// configured predicate, and arrows between shallower types. The order
/// is deterministic and shallower types come first.
pub fn enumerate_types(cfg: &TypeConfig, depth: usize) -> Vec<Ty> {
    assert!(depth >= 1, "depth counts atoms as one");
    let mut level: Vec<Ty> = vec![Ty::Dyn];
    for (c, set) in &cfg.predicates {
        level.push(Ty::Refine(*c, set.clone()));
    }
    for _ in 1..depth {
        let prev = level.clone();
        for a in &prev {
            for b in &prev {
                let f = Ty::fun(a.clone(), b.clone());
                if !level.contains(&f) {
                    level.push(f);
                }
            }
        }
    }
    level
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::blame::BaseCarrier;

    fn int(cfg: &TypeConfig) -> Ty {
        Ty::base(cfg, 0)
    }

    fn positives(cfg: &TypeConfig) -> Ty {
        Ty::refine(cfg, "int", &["1", "2", "3"]).unwrap()
    }

    #[test]
    fn refinements_compare_by_inclusion() {
        let cfg = TypeConfig::depth3_default();
        let (all, pos) = (int(&cfg), positives(&cfg));
        for rel in [Rel::Standard, Rel::Naive, Rel::Positive] {
            assert!(subtype(rel, &pos, &all));
            assert!(!subtype(rel, &all, &pos));
        }
        // A refinement cast can only reject the value it is given, never
        // anything supplied by the context.
        assert!(subtype(Rel::Negative, &all, &pos));
        assert!(subtype(Rel::Negative, &pos, &all));
    }

    #[test]
    fn distinct_carriers_never_relate() {
        let cfg = TypeConfig::depth3_default();
        let b = Ty::base(&cfg, 1);
        for rel in Rel::all() {
            assert!(!subtype(rel, &int(&cfg), &b));
            assert!(!subtype(rel, &b, &int(&cfg)));
        }
    }

    #[test]
    fn the_dynamic_type_absorbs_on_the_right() {
        let cfg = TypeConfig::depth3_default();
        for rel in Rel::all() {
            assert!(subtype(rel, &int(&cfg), &Ty::Dyn));
            assert!(subtype(rel, &Ty::Dyn, &Ty::Dyn));
        }
    }

    #[test]
    fn the_dynamic_type_on_the_left_holds_only_negatively() {
        let cfg = TypeConfig::depth3_default();
        let t = int(&cfg);
        assert!(subtype(Rel::Negative, &Ty::Dyn, &t));
        assert!(!subtype(Rel::Standard, &Ty::Dyn, &t));
        assert!(!subtype(Rel::Naive, &Ty::Dyn, &t));
        assert!(!subtype(Rel::Positive, &Ty::Dyn, &t));
    }

    #[test]
    fn standard_subtyping_is_contravariant_in_domains() {
        let cfg = TypeConfig::depth3_default();
        let (all, pos) = (int(&cfg), positives(&cfg));
        let wide = Ty::fun(all.clone(), pos.clone());
        let narrow = Ty::fun(pos.clone(), all.clone());
        assert!(subtype(Rel::Standard, &wide, &narrow));
        assert!(!subtype(Rel::Standard, &narrow, &wide));
        // Naive subtyping points the other way on the domain: shrinking
        // both sides looks like subtyping to it, but is not.
        let narrow_both = Ty::fun(pos.clone(), pos);
        let wide_both = Ty::fun(all.clone(), all);
        assert!(subtype(Rel::Naive, &narrow_both, &wide_both));
        assert!(!subtype(Rel::Standard, &narrow_both, &wide_both));
    }

    #[test]
    fn positive_and_negative_swap_under_the_arrow() {
        let cfg = TypeConfig::depth3_default();
        let (all, pos) = (int(&cfg), positives(&cfg));
        let narrow_both = Ty::fun(pos.clone(), pos.clone());
        let wide_both = Ty::fun(all.clone(), all.clone());
        // Claiming a wider type for a narrow function only widens what
        // it may return, so the function itself stays blameless; the
        // context can now pass arguments the function never accepted.
        assert!(subtype(Rel::Positive, &narrow_both, &wide_both));
        assert!(!subtype(Rel::Negative, &narrow_both, &wide_both));
        // The other direction narrows the promise instead.
        assert!(!subtype(Rel::Positive, &wide_both, &narrow_both));
        assert!(subtype(Rel::Negative, &wide_both, &narrow_both));
    }

    #[test]
    fn all_four_relations_are_reflexive_at_depth_three() {
        let cfg = TypeConfig::bool_only();
        for t in enumerate_types(&cfg, 3) {
            for rel in Rel::all() {
                assert!(subtype(rel, &t, &t), "{rel:?} not reflexive");
            }
        }
    }

    #[test]
    fn standard_and_naive_are_transitive_at_depth_two() {
        let cfg = TypeConfig::bool_only();
        let types = enumerate_types(&cfg, 2);
        for rel in [Rel::Standard, Rel::Naive] {
            for a in &types {
                for b in &types {
                    if !subtype(rel, a, b) {
                        continue;
                    }
                    for c in &types {
                        if subtype(rel, b, c) {
                            assert!(subtype(rel, a, c), "{rel:?} not transitive");
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn positive_and_negative_are_transitive_away_from_dyn() {
        // Through the dynamic type they are not: a function type is
        // negatively below dyn, dyn is negatively below everything, yet
        // the direct comparison of the two function types can fail its
        // contravariant positive premise. The composite chain below is
        // the smallest such break.
        let cfg = TypeConfig::depth3_default();
        let f = Ty::fun(Ty::base(&cfg, 0), Ty::base(&cfg, 0));
        let g = Ty::fun(Ty::Dyn, Ty::base(&cfg, 0));
        assert!(subtype(Rel::Negative, &f, &Ty::Dyn));
        assert!(subtype(Rel::Negative, &Ty::Dyn, &g));
        assert!(!subtype(Rel::Negative, &f, &g));

        fn dyn_free(t: &Ty) -> bool {
            match t {
                Ty::Dyn => false,
                Ty::Refine(..) => true,
                Ty::Fun(a, b) => dyn_free(a) && dyn_free(b),
            }
        }
        let types: Vec<Ty> = enumerate_types(&TypeConfig::bool_only(), 2)
            .into_iter()
            .filter(dyn_free)
            .collect();
        for rel in [Rel::Positive, Rel::Negative] {
            for a in &types {
                for b in &types {
                    if !subtype(rel, a, b) {
                        continue;
                    }
                    for c in &types {
                        if subtype(rel, b, c) {
                            assert!(subtype(rel, a, c), "{rel:?} not transitive");
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn enumeration_counts_atoms_and_arrows() {
        let cfg = TypeConfig::bool_only();
        // Dyn plus four predicates, then arrows over the atoms.
        assert_eq!(enumerate_types(&cfg, 1).len(), 5);
        assert_eq!(enumerate_types(&cfg, 2).len(), 30);
        assert_eq!(enumerate_types(&cfg, 3).len(), 905);
        let wide = TypeConfig::depth3_default();
        assert_eq!(enumerate_types(&wide, 1).len(), 6);
        assert_eq!(enumerate_types(&wide, 2).len(), 42);
        assert_eq!(enumerate_types(&wide, 3).len(), 1770);
    }

    #[test]
    fn a_covariant_mutant_disagrees_with_the_intended_rules() {
        struct CovariantStandard;
        impl SubtypeRules for CovariantStandard {
            fn decide(
                &self,
                rel: Rel,
                s: &Ty,
                t: &Ty,
                sub: &mut dyn FnMut(Rel, &Ty, &Ty) -> bool,
            ) -> bool {
                if rel == Rel::Standard {
                    if let (Ty::Fun(a, b), Ty::Fun(a2, b2)) = (s, t) {
                        return sub(Rel::Standard, a, a2) && sub(Rel::Standard, b, b2);
                    }
                }
                CanonicalRules.decide(rel, s, t, sub)
            }
        }
        let cfg = TypeConfig::depth3_default();
        let (all, pos) = (int(&cfg), positives(&cfg));
        // The mutant accepts shrinking both sides, which the intended
        // rules reject; it rejects the genuine subtyping where the
        // domain widens.
        let narrow_both = Ty::fun(pos.clone(), pos.clone());
        let wide_both = Ty::fun(all.clone(), all.clone());
        assert!(subtype_with(&CovariantStandard, Rel::Standard, &narrow_both, &wide_both));
        assert!(!subtype(Rel::Standard, &narrow_both, &wide_both));
        let wide_domain = Ty::fun(all, pos.clone());
        let narrow_domain = Ty::fun(pos, Ty::base(&cfg, 0));
        assert!(subtype(Rel::Standard, &wide_domain, &narrow_domain));
        assert!(!subtype_with(&CovariantStandard, Rel::Standard, &wide_domain, &narrow_domain));
    }

    #[test]
    fn depth_three_enumeration_stays_within_depth() {
        let cfg = TypeConfig::new(vec![BaseCarrier::new("bit", &["0", "1"])]);
        for t in enumerate_types(&cfg, 3) {
            assert!(t.depth() <= 3);
        }
    }
}
