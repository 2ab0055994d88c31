//! Propositional formulas over a negation d-frame and the theorem suite.
//!
//! Formulas are evaluated to pairs: conjunction and disjunction act
//! crosswise, the information connectives componentwise, negation through
//! the bridge maps, and implication takes the Heyting arrow on the plus
//! side with `m(x+) meet y-` on the minus side. A formula is valid when
//! its plus component is the top of the positive lattice under every
//! assignment.
//!
//! [`theorem_schemas`] lists the axiom schemas that hold in every negation
//! d-frame, together with the strengthened forms that mark where the
//! bridges carry extra structure: the starred-A strengthenings hold
//! exactly when `p` undoes `m`, the starred-B ones exactly when `p`
//! preserves binary joins, and Peirce's law exactly when the positive
//! lattice is Boolean. [`axiom_suite`] checks every schema, confirms modus
//! ponens over a generated family of instances, and verifies all three
//! equivalences in both directions.

use std::collections::HashSet;

use crate::dframe::ndframe::NdFrame;
use crate::dframe::DFrameError;
use crate::report::Report;

/// Propositional syntax. Variables are indexed; the suites use at most
/// three.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Formula {
    /// A propositional variable.
    Var(usize),
    /// Logical falsity, the pair `(0, 1)`.
    Ff,
    /// Logical truth, the pair `(1, 0)`.
    Tt,
    /// No information, the pair `(0, 0)`.
    Bot,
    /// Full information, the pair `(1, 1)`.
    Top,
    /// Negation through the bridge maps.
    Not(Box<Formula>),
    /// Logical conjunction.
    And(Box<Formula>, Box<Formula>),
    /// Logical disjunction.
    Or(Box<Formula>, Box<Formula>),
    /// Information meet.
    Meet(Box<Formula>, Box<Formula>),
    /// Information join.
    Join(Box<Formula>, Box<Formula>),
    /// Weak implication.
    Imp(Box<Formula>, Box<Formula>),
}

/// Variable `i`.
pub fn var(i: usize) -> Formula {
    Formula::Var(i)
}

/// Negation.
pub fn not_(f: Formula) -> Formula {
    Formula::Not(Box::new(f))
}

/// Logical conjunction.
pub fn and(a: Formula, b: Formula) -> Formula {
    Formula::And(Box::new(a), Box::new(b))
}

/// Logical disjunction.
pub fn or(a: Formula, b: Formula) -> Formula {
    Formula::Or(Box::new(a), Box::new(b))
}

/// Information meet.
pub fn meet(a: Formula, b: Formula) -> Formula {
    Formula::Meet(Box::new(a), Box::new(b))
}

/// Information join.
pub fn join(a: Formula, b: Formula) -> Formula {
    Formula::Join(Box::new(a), Box::new(b))
}

/// Weak implication.
pub fn imp(a: Formula, b: Formula) -> Formula {
    Formula::Imp(Box::new(a), Box::new(b))
}

/// Mutual implication, conjoined logically.
pub fn equiv(a: Formula, b: Formula) -> Formula {
    and(imp(a.clone(), b.clone()), imp(b, a))
}

/// Strong implication: weak implication conjoined with its contrapositive.
pub fn strong(a: Formula, b: Formula) -> Formula {
    and(imp(a.clone(), b.clone()), imp(not_(b), not_(a)))
}

impl Formula {
    /// Number of variables, counted as one past the largest index used.
    pub fn arity(&self) -> usize {
        match self {
            Formula::Var(i) => i + 1,
            Formula::Ff | Formula::Tt | Formula::Bot | Formula::Top => 0,
            Formula::Not(a) => a.arity(),
            Formula::And(a, b)
            | Formula::Or(a, b)
            | Formula::Meet(a, b)
            | Formula::Join(a, b)
            | Formula::Imp(a, b) => a.arity().max(b.arity()),
        }
    }

    /// Replaces `Var(i)` by `subs[i]` throughout.
    pub fn substitute(&self, subs: &[Formula]) -> Formula {
        match self {
            Formula::Var(i) => subs[*i].clone(),
            Formula::Ff | Formula::Tt | Formula::Bot | Formula::Top => self.clone(),
            Formula::Not(a) => not_(a.substitute(subs)),
            Formula::And(a, b) => and(a.substitute(subs), b.substitute(subs)),
            Formula::Or(a, b) => or(a.substitute(subs), b.substitute(subs)),
            Formula::Meet(a, b) => meet(a.substitute(subs), b.substitute(subs)),
            Formula::Join(a, b) => join(a.substitute(subs), b.substitute(subs)),
            Formula::Imp(a, b) => imp(a.substitute(subs), b.substitute(subs)),
        }
    }
}

/// Which pairs an assignment may take values in.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ValuationDomain {
    /// Every pair of the twist carrier.
    AllPairs,
    /// Only the consistent pairs.
    ConsistentOnly,
}

const VAR_NAMES: [&str; 3] = ["phi", "psi", "gamma"];

/// Evaluates formulas over a fixed negation d-frame. Construction fails
/// when the positive lattice has no implication.
pub struct Evaluator<'a> {
    n: &'a NdFrame,
    imp_plus: Vec<usize>,
}

impl<'a> Evaluator<'a> {
    /// Precomputes the Heyting arrow of the positive lattice.
    pub fn new(n: &'a NdFrame) -> Result<Self, DFrameError> {
        let plus = &n.base.plus;
        let mut imp_plus = Vec::with_capacity(plus.len() * plus.len());
        for a in 0..plus.len() {
            for b in 0..plus.len() {
                let arrow = plus
                    .heyting_implies(a, b)
                    .map_err(|_| DFrameError::NotHeyting(plus.name().to_string()))?;
                imp_plus.push(arrow);
            }
        }
        Ok(Evaluator { n, imp_plus })
    }

    /// The frame being evaluated over.
    pub fn frame(&self) -> &NdFrame {
        self.n
    }

    fn arrow(&self, a: usize, b: usize) -> usize {
        self.imp_plus[a * self.n.base.plus.len() + b]
    }

    /// Evaluates under an assignment of pairs to variables.
    pub fn eval(&self, f: &Formula, asg: &[(usize, usize)]) -> (usize, usize) {
        let d = &self.n.base;
        match f {
            Formula::Var(i) => asg[*i],
            Formula::Ff => d.ff(),
            Formula::Tt => d.tt(),
            Formula::Bot => (d.plus.bottom(), d.minus.bottom()),
            Formula::Top => (d.plus.top(), d.minus.top()),
            Formula::Not(a) => {
                let x = self.eval(a, asg);
                (self.n.p(x.1), self.n.m(x.0))
            }
            Formula::And(a, b) => d.and(self.eval(a, asg), self.eval(b, asg)),
            Formula::Or(a, b) => d.or(self.eval(a, asg), self.eval(b, asg)),
            Formula::Meet(a, b) => d.meet(self.eval(a, asg), self.eval(b, asg)),
            Formula::Join(a, b) => d.join(self.eval(a, asg), self.eval(b, asg)),
            Formula::Imp(a, b) => {
                let x = self.eval(a, asg);
                let y = self.eval(b, asg);
                (self.arrow(x.0, y.0), d.minus.meet(self.n.m(x.0), y.1))
            }
        }
    }

    /// True when the plus component is top under this assignment.
    pub fn valid_at(&self, f: &Formula, asg: &[(usize, usize)]) -> bool {
        self.eval(f, asg).0 == self.n.base.plus.top()
    }

    fn domain_pairs(&self, domain: ValuationDomain) -> Vec<(usize, usize)> {
        match domain {
            ValuationDomain::AllPairs => self.n.base.pairs(),
            ValuationDomain::ConsistentOnly => self.n.base.con_pairs(),
        }
    }

    /// First assignment falsifying the formula, rendered with variable
    /// names, or `None` when the formula is valid over the domain.
    pub fn invalid_witness(&self, f: &Formula, domain: ValuationDomain) -> Option<String> {
        let arity = f.arity();
        assert!(arity <= VAR_NAMES.len(), "suites use at most three variables");
        let pool = self.domain_pairs(domain);
        let mut asg = vec![(0usize, 0usize); arity];
        self.search(f, &pool, &mut asg, 0)
    }

    fn search(
        &self,
        f: &Formula,
        pool: &[(usize, usize)],
        asg: &mut Vec<(usize, usize)>,
        depth: usize,
    ) -> Option<String> {
        if depth == asg.len() {
            if self.valid_at(f, asg) {
                return None;
            }
            let bindings: Vec<String> = asg
                .iter()
                .enumerate()
                .map(|(i, &x)| format!("{}={}", VAR_NAMES[i], self.n.base.pair_name(x)))
                .collect();
            let value = self.eval(f, asg);
            return Some(if bindings.is_empty() {
                format!("value {}", self.n.base.pair_name(value))
            } else {
                format!("{} gives {}", bindings.join(" "), self.n.base.pair_name(value))
            });
        }
        for &x in pool {
            asg[depth] = x;
            if let Some(w) = self.search(f, pool, asg, depth + 1) {
                return Some(w);
            }
        }
        None
    }

    /// Validity over the domain.
    pub fn is_valid(&self, f: &Formula, domain: ValuationDomain) -> bool {
        self.invalid_witness(f, domain).is_none()
    }
}

/// Convenience wrapper: builds an evaluator and checks validity over all
/// pairs.
pub fn validate_formula(n: &NdFrame, f: &Formula) -> Result<bool, DFrameError> {
    Ok(Evaluator::new(n)?.is_valid(f, ValuationDomain::AllPairs))
}

/// Which optional strengthening a schema carries.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Star {
    /// No strengthening.
    None,
    /// Strengthening holds exactly when `p` undoes `m`.
    A,
    /// Strengthening holds exactly when `p` preserves binary joins.
    B,
}

/// A named axiom schema, possibly with a conditional strengthening.
pub struct Schema {
    /// Stable name used in report entries.
    pub name: &'static str,
    /// The form valid in every negation d-frame.
    pub formula: Formula,
    /// The stronger form that needs extra bridge structure.
    pub strengthening: Option<Formula>,
    /// Which condition the strengthening is equivalent to.
    pub star: Star,
}

fn schema(name: &'static str, formula: Formula) -> Schema {
    Schema {
        name,
        formula,
        strengthening: None,
        star: Star::None,
    }
}

fn starred(name: &'static str, formula: Formula, strengthening: Formula, star: Star) -> Schema {
    Schema {
        name,
        formula,
        strengthening: Some(strengthening),
        star,
    }
}

/// The axiom schemas valid in every negation d-frame.
pub fn theorem_schemas() -> Vec<Schema> {
    let p = || var(0);
    let q = || var(1);
    let r = || var(2);
    vec![
        schema("imp-k", imp(p(), imp(q(), p()))),
        schema(
            "imp-s",
            imp(
                imp(p(), imp(q(), r())),
                imp(imp(p(), q()), imp(p(), r())),
            ),
        ),
        starred(
            "double-negation-elim",
            imp(not_(not_(p())), p()),
            imp(p(), not_(not_(p()))),
            Star::A,
        ),
        schema("and-left-elim", imp(and(p(), q()), p())),
        schema("and-right-elim", imp(and(p(), q()), q())),
        schema("and-intro", imp(p(), imp(q(), and(p(), q())))),
        schema("truth-final", imp(p(), Formula::Tt)),
        schema("or-left-intro", imp(p(), or(p(), q()))),
        schema("or-right-intro", imp(q(), or(p(), q()))),
        schema(
            "or-elim",
            imp(
                imp(p(), r()),
                imp(imp(q(), r()), imp(or(p(), q()), r())),
            ),
        ),
        schema("falsity-initial", imp(Formula::Ff, p())),
        schema("meet-left-elim", imp(meet(p(), q()), p())),
        schema("meet-right-elim", imp(meet(p(), q()), q())),
        schema("meet-intro", imp(p(), imp(q(), meet(p(), q())))),
        schema("info-top-final", imp(p(), Formula::Top)),
        schema("join-left-intro", imp(p(), join(p(), q()))),
        schema("join-right-intro", imp(q(), join(p(), q()))),
        schema(
            "join-elim",
            imp(
                imp(p(), r()),
                imp(imp(q(), r()), imp(join(p(), q()), r())),
            ),
        ),
        schema("info-bottom-initial", imp(Formula::Bot, p())),
        starred(
            "neg-and-half",
            imp(or(not_(p()), not_(q())), not_(and(p(), q()))),
            imp(not_(and(p(), q())), or(not_(p()), not_(q()))),
            Star::B,
        ),
        schema(
            "neg-or",
            equiv(not_(or(p(), q())), and(not_(p()), not_(q()))),
        ),
        schema(
            "neg-meet",
            equiv(not_(meet(p(), q())), meet(not_(p()), not_(q()))),
        ),
        starred(
            "neg-join-half",
            imp(join(not_(p()), not_(q())), not_(join(p(), q()))),
            imp(not_(join(p(), q())), join(not_(p()), not_(q()))),
            Star::B,
        ),
        starred(
            "neg-imp",
            imp(not_(imp(p(), q())), and(p(), not_(q()))),
            imp(and(p(), not_(q())), not_(imp(p(), q()))),
            Star::A,
        ),
    ]
}

/// Peirce's law, valid exactly over Boolean positive lattices.
pub fn peirce() -> Formula {
    let p = || var(0);
    let q = || var(1);
    imp(imp(imp(p(), q()), p()), p())
}

const MP_BASE_NAMES: [&str; 7] = ["phi", "psi", "gamma", "not phi", "phi and psi", "ff", "tt"];

fn mp_base() -> Vec<Formula> {
    vec![
        var(0),
        var(1),
        var(2),
        not_(var(0)),
        and(var(0), var(1)),
        Formula::Ff,
        Formula::Tt,
    ]
}

struct MpOutcome {
    instances: usize,
    count: u64,
    violation: Option<String>,
}

/// Modus ponens over every schema body under every substitution of the
/// seven base formulas for its variables. Validity of each instance is
/// reduced to a per-assignment table of the schema body composed with the
/// base values, so the sweep stays cheap even on the larger fixtures.
fn modus_ponens(ev: &Evaluator, schemas: &[Schema]) -> MpOutcome {
    let d = &ev.n.base;
    let np = d.plus.len();
    let nm = d.minus.len();
    let npairs = np * nm;
    let total = npairs * npairs * npairs;
    let pair_of = |i: usize| (i / nm, i % nm);
    let index_of = |x: (usize, usize)| x.0 * nm + x.1;

    // Base-formula values at every three-variable assignment, as pair
    // indices.
    let base = mp_base();
    let mut base_vals: Vec<Vec<usize>> = vec![Vec::with_capacity(total); base.len()];
    let mut asg = [(0usize, 0usize); 3];
    for a in 0..total {
        asg[0] = pair_of(a / (npairs * npairs));
        asg[1] = pair_of((a / npairs) % npairs);
        asg[2] = pair_of(a % npairs);
        for (b, f) in base.iter().enumerate() {
            base_vals[b].push(index_of(ev.eval(f, &asg)));
        }
    }

    // Schema bodies as tables over value triples; only the plus component
    // matters for validity.
    let mut tables: Vec<Vec<usize>> = Vec::with_capacity(schemas.len());
    for s in schemas {
        let mut t = Vec::with_capacity(total);
        for a in 0..total {
            asg[0] = pair_of(a / (npairs * npairs));
            asg[1] = pair_of((a / npairs) % npairs);
            asg[2] = pair_of(a % npairs);
            t.push(ev.eval(&s.formula, &asg).0);
        }
        tables.push(t);
    }

    // Deduplicated instances: substituting base formulas into a body that
    // ignores some variables collapses many choices.
    let mut seen: HashSet<Formula> = HashSet::new();
    let mut instances: Vec<(usize, [usize; 3])> = Vec::new();
    for (si, s) in schemas.iter().enumerate() {
        for b0 in 0..base.len() {
            for b1 in 0..base.len() {
                for b2 in 0..base.len() {
                    let subs = [base[b0].clone(), base[b1].clone(), base[b2].clone()];
                    if seen.insert(s.formula.substitute(&subs)) {
                        instances.push((si, [b0, b1, b2]));
                    }
                }
            }
        }
    }

    // First falsifying assignment per instance; substitution commutes with
    // evaluation, so the instance's value is the body's table entry at the
    // base values.
    let top = d.plus.top();
    let first_nontop: Vec<Option<usize>> = instances
        .iter()
        .map(|&(si, [b0, b1, b2])| {
            (0..total).find(|&a| {
                let v0 = base_vals[b0][a];
                let v1 = base_vals[b1][a];
                let v2 = base_vals[b2][a];
                tables[si][(v0 * npairs + v1) * npairs + v2] != top
            })
        })
        .collect();

    let describe = |i: usize| {
        let (si, [b0, b1, b2]) = instances[i];
        format!(
            "{}[{}, {}, {}]",
            schemas[si].name, MP_BASE_NAMES[b0], MP_BASE_NAMES[b1], MP_BASE_NAMES[b2]
        )
    };

    let mut count = 0u64;
    let mut violation = None;
    for f in 0..instances.len() {
        if first_nontop[f].is_some() {
            continue;
        }
        for g in 0..instances.len() {
            // The premise is top at every assignment, so the implication
            // from it to g is valid exactly when g is top everywhere.
            let implication_valid = first_nontop[g].is_none();
            if !implication_valid {
                continue;
            }
            count += 1;
            let conclusion_valid = first_nontop[g].is_none();
            if !conclusion_valid && violation.is_none() {
                violation = Some(format!(
                    "premise {} and implication to {} hold but the conclusion fails",
                    describe(f),
                    describe(g)
                ));
            }
        }
    }
    MpOutcome {
        instances: instances.len(),
        count,
        violation,
    }
}

/// Checks every schema, modus ponens, and the three strengthening
/// equivalences over a negation d-frame.
pub fn axiom_suite(n: &NdFrame) -> Result<Report, DFrameError> {
    let ev = Evaluator::new(n)?;
    let mut report = Report::new(format!("implication theorems for {}", n.base.name));
    let schemas = theorem_schemas();
    for s in &schemas {
        let w = ev.invalid_witness(&s.formula, ValuationDomain::AllPairs);
        report.check(format!("schema-{}", s.name), w.is_none(), w.unwrap_or_default());
    }

    let mp = modus_ponens(&ev, &schemas);
    report.check(
        "modus-ponens-sound",
        mp.violation.is_none(),
        mp.violation.unwrap_or_default(),
    );
    report.note(
        "modus-ponens-instances",
        format!(
            "{} applications over {} distinct premise formulas",
            mp.count, mp.instances
        ),
    );

    let star_valid = |star: Star| {
        schemas
            .iter()
            .filter(|s| s.star == star)
            .all(|s| ev.is_valid(s.strengthening.as_ref().unwrap(), ValuationDomain::AllPairs))
    };
    let star_a = star_valid(Star::A);
    let pm_id = n.pm_is_identity();
    report.check(
        "negation-strengthening-iff-pm-identity",
        star_a == pm_id,
        format!("strengthened schemas valid: {star_a}, p after m is identity: {pm_id}"),
    );
    report.note("pm-identity", pm_id.to_string());

    let star_b = star_valid(Star::B);
    let p_joins = n.p_preserves_joins();
    report.check(
        "de-morgan-strengthening-iff-p-join-preserving",
        star_b == p_joins,
        format!("strengthened schemas valid: {star_b}, p preserves joins: {p_joins}"),
    );
    report.note("p-preserves-joins", p_joins.to_string());

    let peirce_valid = ev.is_valid(&peirce(), ValuationDomain::AllPairs);
    let boolean = n.base.plus.is_boolean();
    report.check(
        "peirce-iff-plus-boolean",
        peirce_valid == boolean,
        format!("Peirce valid: {peirce_valid}, positive lattice Boolean: {boolean}"),
    );
    report.note("plus-boolean", boolean.to_string());
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dframe::ndframe::{identity_ndframe, ndframe_from_bispace, ndframe_from_injection};
    use crate::dframe::bitop_space;
    use crate::order::fixtures::{chain, m3, square, two};
    use crate::order::LatticeMap;

    fn suite_passes(n: &NdFrame) {
        let report = axiom_suite(n).unwrap();
        assert!(report.passed(), "{report}");
    }

    #[test]
    fn schemas_hold_on_identity_twists() {
        for l in [two(), chain(3), chain(4)] {
            suite_passes(&identity_ndframe(&l));
        }
    }

    #[test]
    fn schemas_hold_on_injection_frames() {
        let into_three =
            LatticeMap::from_pairs(two(), chain(3), &[("0", "0"), ("1", "2")]).unwrap();
        let diagonal =
            LatticeMap::from_pairs(two(), square(), &[("0", "(0,0)"), ("1", "(1,1)")]).unwrap();
        for m in [into_three, diagonal] {
            suite_passes(&ndframe_from_injection(&m).unwrap());
        }
    }

    fn skew_bispace_frame() -> NdFrame {
        let x = bitop_space(
            "skew",
            &["x", "y"],
            &[&[], &["x"], &["x", "y"]],
            &[&[], &["x", "y"]],
        )
        .unwrap();
        ndframe_from_bispace(&x)
    }

    #[test]
    fn double_negation_strengthening_needs_pm_identity() {
        let n = skew_bispace_frame();
        assert!(!n.pm_is_identity());
        let ev = Evaluator::new(&n).unwrap();
        let weak = imp(not_(not_(var(0))), var(0));
        let strengthened = imp(var(0), not_(not_(var(0))));
        assert!(ev.is_valid(&weak, ValuationDomain::AllPairs));
        assert!(!ev.is_valid(&strengthened, ValuationDomain::AllPairs));
        // The equivalences themselves still hold, in the negative direction.
        suite_passes(&n);
        assert!(n.p_preserves_joins());
    }

    #[test]
    fn de_morgan_strengthening_needs_join_preservation() {
        let diagonal =
            LatticeMap::from_pairs(two(), square(), &[("0", "(0,0)"), ("1", "(1,1)")]).unwrap();
        let n = ndframe_from_injection(&diagonal).unwrap();
        assert!(n.pm_is_identity());
        assert!(!n.p_preserves_joins());
        let ev = Evaluator::new(&n).unwrap();
        let half = imp(or(not_(var(0)), not_(var(1))), not_(and(var(0), var(1))));
        let full = imp(not_(and(var(0), var(1))), or(not_(var(0)), not_(var(1))));
        assert!(ev.is_valid(&half, ValuationDomain::AllPairs));
        assert!(!ev.is_valid(&full, ValuationDomain::AllPairs));
        suite_passes(&n);
    }

    #[test]
    fn peirce_tracks_booleanness_of_the_positive_lattice() {
        for (l, expect) in [(two(), true), (square(), true), (chain(3), false)] {
            let n = identity_ndframe(&l);
            let ev = Evaluator::new(&n).unwrap();
            assert_eq!(ev.is_valid(&peirce(), ValuationDomain::AllPairs), expect);
            suite_passes(&n);
        }
    }

    #[test]
    fn internalized_consistency_separates_the_domains() {
        let n = identity_ndframe(&two());
        let ev = Evaluator::new(&n).unwrap();
        // The meet of a proposition with its negation is inconsistent
        // information; sending it to falsity is a law of consistent pairs
        // only.
        let f = imp(meet(var(0), not_(var(0))), Formula::Ff);
        assert!(!ev.is_valid(&f, ValuationDomain::AllPairs));
        assert!(ev.is_valid(&f, ValuationDomain::ConsistentOnly));
    }

    #[test]
    fn substitution_commutes_with_evaluation() {
        let n = identity_ndframe(&two());
        let ev = Evaluator::new(&n).unwrap();
        let body = theorem_schemas()[1].formula.clone();
        let subs = [not_(var(0)), Formula::Ff, and(var(0), var(1))];
        let instance = body.substitute(&subs);
        for x in n.base.pairs() {
            for y in n.base.pairs() {
                let outer = [x, y, (0, 0)];
                let inner = [
                    ev.eval(&subs[0], &outer),
                    ev.eval(&subs[1], &outer),
                    ev.eval(&subs[2], &outer),
                ];
                assert_eq!(ev.eval(&instance, &outer), ev.eval(&body, &inner));
            }
        }
    }

    #[test]
    fn non_distributive_positive_lattices_have_no_evaluator() {
        let n = identity_ndframe(&m3());
        assert!(matches!(
            Evaluator::new(&n),
            Err(DFrameError::NotHeyting(_))
        ));
    }

    #[test]
    fn validity_witnesses_name_the_assignment() {
        let n = identity_ndframe(&two());
        let ev = Evaluator::new(&n).unwrap();
        let w = ev
            .invalid_witness(&var(0), ValuationDomain::AllPairs)
            .unwrap();
        assert!(w.contains("phi=(0,0)"), "{w}");
    }
}
