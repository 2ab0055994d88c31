//! Linear-logic models of consistent pairs over a Heyting core.
//!
//! Over a finite distributive lattice `H`, the carrier collects the pairs
//! `(a+, a-)` whose components meet to bottom: evidence for and against
//! that never overlaps. The linear connectives all land back in this
//! carrier, and each of them is term definable from the twist-product
//! connectives over `H`. [`verify_term_definability`] and
//! [`verify_chu_identities`] check those facts exhaustively;
//! [`verify_closure`] checks the carrier is closed.
//!
//! Connectives are computed on demand from `H`'s cached implication table
//! rather than tabulated, keeping memory linear in the carrier size.

use thiserror::Error;

use crate::bilattice::{twist_construct, Pair, TwistAlgebra};
use crate::order::FiniteLattice;
use crate::report::Report;

/// Errors from model construction and evaluation.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ChuError {
    /// The core lattice has no implication: it is not distributive.
    #[error("not a Heyting lattice: {0}")]
    NotHeyting(String),
    /// An argument pair has overlapping components.
    #[error("not in the carrier: {0}")]
    NotInCarrier(String),
}

/// The model: a Heyting core plus its carrier of consistent pairs.
#[derive(Debug, Clone)]
pub struct ChuModel {
    heyting: FiniteLattice,
    implication: Vec<usize>,
    carrier: Vec<Pair>,
}

/// Builds the model over `h`, enumerating the carrier in row-major
/// declared-element order.
pub fn chu_carrier(h: &FiniteLattice) -> Result<ChuModel, ChuError> {
    if let Some((a, b, c)) = h.distributivity_witness() {
        return Err(ChuError::NotHeyting(format!(
            "distributivity fails in {} at {}, {}, {}",
            h.name(),
            h.element_name(a),
            h.element_name(b),
            h.element_name(c)
        )));
    }
    let n = h.len();
    let mut implication = Vec::with_capacity(n * n);
    for a in 0..n {
        for b in 0..n {
            implication.push(h.heyting_implies(a, b).expect("distributive"));
        }
    }
    let mut carrier = Vec::new();
    for a in 0..n {
        for b in 0..n {
            if h.meet(a, b) == h.bottom() {
                carrier.push((a, b));
            }
        }
    }
    Ok(ChuModel {
        heyting: h.clone(),
        implication,
        carrier,
    })
}

impl ChuModel {
    /// The Heyting core.
    pub fn heyting(&self) -> &FiniteLattice {
        &self.heyting
    }

    /// Carrier pairs in enumeration order.
    pub fn carrier(&self) -> &[Pair] {
        &self.carrier
    }

    /// Cached implication of the core.
    pub fn imp(&self, a: usize, b: usize) -> usize {
        self.implication[a * self.heyting.len() + b]
    }

    /// Truth `(1, 0)`.
    pub fn tt(&self) -> Pair {
        (self.heyting.top(), self.heyting.bottom())
    }

    /// Falsity `(0, 1)`.
    pub fn ff(&self) -> Pair {
        (self.heyting.bottom(), self.heyting.top())
    }

    /// Consistency: the components meet to bottom.
    pub fn contains(&self, p: Pair) -> bool {
        p.0 < self.heyting.len()
            && p.1 < self.heyting.len()
            && self.heyting.meet(p.0, p.1) == self.heyting.bottom()
    }

    /// Printable pair name, `(for,against)`.
    pub fn pair_name(&self, p: Pair) -> String {
        format!(
            "({},{})",
            self.heyting.element_name(p.0),
            self.heyting.element_name(p.1)
        )
    }

    /// The embedding of the core: `x` maps to `(x, x -> 0)`.
    pub fn embed(&self, x: usize) -> Pair {
        (x, self.imp(x, self.heyting.bottom()))
    }

    /// Twist algebra over the core, for cross-checking definability.
    pub fn twist(&self) -> TwistAlgebra {
        twist_construct(&self.heyting, &self.heyting)
    }

    fn require(&self, p: Pair) -> Result<(), ChuError> {
        if self.contains(p) {
            Ok(())
        } else {
            Err(ChuError::NotInCarrier(format!("({},{})", p.0, p.1)))
        }
    }
}

/// The linear connectives.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LinearConnective {
    /// Additive conjunction-flavoured sum.
    Oplus,
    /// Multiplicative conjunction.
    Tensor,
    /// Additive product.
    With,
    /// Multiplicative disjunction.
    Par,
    /// Involutive duality.
    Dual,
    /// Linear implication.
    Lolli,
    /// The "of course" modality.
    Bang,
    /// The "why not" modality.
    WhyNot,
}

impl LinearConnective {
    /// All connectives in rendering order.
    pub fn all() -> [LinearConnective; 8] {
        use LinearConnective::*;
        [Oplus, Tensor, With, Par, Dual, Lolli, Bang, WhyNot]
    }

    /// Stable command-line name.
    pub fn name(self) -> &'static str {
        use LinearConnective::*;
        match self {
            Oplus => "oplus",
            Tensor => "tensor",
            With => "with",
            Par => "par",
            Dual => "dual",
            Lolli => "lolli",
            Bang => "bang",
            WhyNot => "whynot",
        }
    }

    /// Parses a command-line name.
    pub fn parse(s: &str) -> Option<LinearConnective> {
        LinearConnective::all().into_iter().find(|c| c.name() == s)
    }

    /// Argument count.
    pub fn arity(self) -> usize {
        match self {
            LinearConnective::Dual | LinearConnective::Bang | LinearConnective::WhyNot => 1,
            _ => 2,
        }
    }
}

/// Evaluation of the linear connectives over a model.
///
/// Every method has a default implementation computing the standard
/// formula; implementors normally override nothing. The indirection exists
/// so the verification reports can be exercised against deliberately wrong
/// connectives.
pub trait LinearEval {
    /// The underlying model.
    fn model(&self) -> &ChuModel;

    /// `(a+ /\ b+, a- \/ b-)`.
    fn oplus(&self, a: Pair, b: Pair) -> Pair {
        let h = self.model().heyting();
        (h.meet(a.0, b.0), h.join(a.1, b.1))
    }

    /// `(a+ /\ b+, (a+ -> b-) /\ (b+ -> a-))`.
    fn tensor(&self, a: Pair, b: Pair) -> Pair {
        let m = self.model();
        let h = m.heyting();
        (h.meet(a.0, b.0), h.meet(m.imp(a.0, b.1), m.imp(b.0, a.1)))
    }

    /// `(a+ \/ b+, a- /\ b-)`.
    fn with(&self, a: Pair, b: Pair) -> Pair {
        let h = self.model().heyting();
        (h.join(a.0, b.0), h.meet(a.1, b.1))
    }

    /// `((a- -> b+) /\ (b- -> a+), a- /\ b-)`.
    fn par(&self, a: Pair, b: Pair) -> Pair {
        let m = self.model();
        let h = m.heyting();
        (h.meet(m.imp(a.1, b.0), m.imp(b.1, a.0)), h.meet(a.1, b.1))
    }

    /// Component swap.
    fn dual(&self, a: Pair) -> Pair {
        (a.1, a.0)
    }

    /// `((a+ -> b+) /\ (b- -> a-), a+ /\ b-)`.
    fn lolli(&self, a: Pair, b: Pair) -> Pair {
        let m = self.model();
        let h = m.heyting();
        (h.meet(m.imp(a.0, b.0), m.imp(b.1, a.1)), h.meet(a.0, b.1))
    }

    /// `(a+, a+ -> 0)`.
    fn bang(&self, a: Pair) -> Pair {
        let m = self.model();
        (a.0, m.imp(a.0, m.heyting().bottom()))
    }

    /// `(a- -> 0, a-)`.
    fn whynot(&self, a: Pair) -> Pair {
        let m = self.model();
        (m.imp(a.1, m.heyting().bottom()), a.1)
    }
}

/// The formulas exactly as written, with nothing overridden.
pub struct CanonicalLinear<'a>(pub &'a ChuModel);

impl LinearEval for CanonicalLinear<'_> {
    fn model(&self) -> &ChuModel {
        self.0
    }
}

/// Evaluates `connective` on `args` in the canonical model, checking
/// membership and asserting closure of the result.
pub fn chu_eval(m: &ChuModel, connective: LinearConnective, args: &[Pair]) -> Result<Pair, ChuError> {
    if args.len() != connective.arity() {
        return Err(ChuError::NotInCarrier(format!(
            "{} expects {} argument(s), got {}",
            connective.name(),
            connective.arity(),
            args.len()
        )));
    }
    for &p in args {
        m.require(p)?;
    }
    let eval = CanonicalLinear(m);
    use LinearConnective::*;
    let out = match connective {
        Oplus => eval.oplus(args[0], args[1]),
        Tensor => eval.tensor(args[0], args[1]),
        With => eval.with(args[0], args[1]),
        Par => eval.par(args[0], args[1]),
        Dual => eval.dual(args[0]),
        Lolli => eval.lolli(args[0], args[1]),
        Bang => eval.bang(args[0]),
        WhyNot => eval.whynot(args[0]),
    };
    assert!(m.contains(out), "connective escaped the carrier");
    Ok(out)
}

fn scan_unary(
    report: &mut Report,
    name: &str,
    m: &ChuModel,
    lhs: impl Fn(Pair) -> Pair,
    rhs: impl Fn(Pair) -> Pair,
) {
    let witness = m.carrier().iter().find_map(|&a| {
        let l = lhs(a);
        let r = rhs(a);
        (l != r).then(|| {
            format!(
                "at a={}: {} versus {}",
                m.pair_name(a),
                m.pair_name(l),
                m.pair_name(r)
            )
        })
    });
    report.check(name, witness.is_none(), witness.unwrap_or_default());
}

fn scan_binary(
    report: &mut Report,
    name: &str,
    m: &ChuModel,
    lhs: impl Fn(Pair, Pair) -> Pair,
    rhs: impl Fn(Pair, Pair) -> Pair,
) {
    let mut witness = None;
    'outer: for &a in m.carrier() {
        for &b in m.carrier() {
            let l = lhs(a, b);
            let r = rhs(a, b);
            if l != r {
                witness = Some(format!(
                    "at a={} b={}: {} versus {}",
                    m.pair_name(a),
                    m.pair_name(b),
                    m.pair_name(l),
                    m.pair_name(r)
                ));
                break 'outer;
            }
        }
    }
    report.check(name, witness.is_none(), witness.unwrap_or_default());
}

/// Checks that every linear connective is term definable from the twist
/// connectives over the core, exhaustively over the carrier.
pub fn verify_term_definability(eval: &dyn LinearEval) -> Report {
    let m = eval.model();
    let t = m.twist();
    let mut report = Report::new(format!("term definability over {}", m.heyting().name()));
    let not = |x| t.not(x).expect("symmetric");
    let imp = |x, y| t.implies(x, y).expect("implicative");
    let strong = |x, y| t.strong_implies(x, y).expect("implicative");
    scan_binary(&mut report, "oplus-is-conjunction", m, |a, b| eval.oplus(a, b), |a, b| t.and(a, b));
    scan_binary(&mut report, "with-is-disjunction", m, |a, b| eval.with(a, b), |a, b| t.or(a, b));
    scan_unary(&mut report, "dual-is-negation", m, |a| eval.dual(a), not);
    scan_binary(
        &mut report,
        "tensor-is-fusion",
        m,
        |a, b| eval.tensor(a, b),
        |a, b| not(strong(a, not(b))),
    );
    scan_binary(
        &mut report,
        "par-is-strong-implication-from-negation",
        m,
        |a, b| eval.par(a, b),
        |a, b| strong(not(a), b),
    );
    scan_binary(
        &mut report,
        "lolli-is-strong-implication",
        m,
        |a, b| eval.lolli(a, b),
        strong,
    );
    scan_unary(
        &mut report,
        "bang-via-weak-implication",
        m,
        |a| eval.bang(a),
        |a| not(imp(a, m.ff())),
    );
    scan_unary(
        &mut report,
        "whynot-via-weak-implication",
        m,
        |a| eval.whynot(a),
        |a| imp(not(a), m.ff()),
    );
    let k = m.carrier().len();
    report.note("pairs-checked", format!("{}", k * k));
    report
}

/// First violation of the duality `a par b = dual(tensor(dual a, dual b))`.
pub fn de_morgan_witness(eval: &dyn LinearEval) -> Option<String> {
    let m = eval.model();
    for &a in m.carrier() {
        for &b in m.carrier() {
            let l = eval.par(a, b);
            let r = eval.dual(eval.tensor(eval.dual(a), eval.dual(b)));
            if l != r {
                return Some(format!(
                    "at a={} b={}: {} versus {}",
                    m.pair_name(a),
                    m.pair_name(b),
                    m.pair_name(l),
                    m.pair_name(r)
                ));
            }
        }
    }
    None
}

/// Validity of a carrier pair: truth lies below it in the logical order.
/// For consistent pairs this pins the pair to truth itself.
fn valid(m: &ChuModel, p: Pair) -> bool {
    let h = m.heyting();
    h.leq(h.top(), p.0) && h.leq(p.1, h.bottom())
}

/// Appends the equivalence reading of an identity as a note: instead of
/// literal equality, both linear implications between the two sides must be
/// valid. Stated once per identity as a secondary column.
fn mutual_lolli_note(
    report: &mut Report,
    name: &str,
    m: &ChuModel,
    eval: &dyn LinearEval,
    instances: &[(Pair, Pair)],
) {
    let witness = instances.iter().find_map(|&(l, r)| {
        let fwd = valid(m, eval.lolli(l, r));
        let bwd = valid(m, eval.lolli(r, l));
        (!(fwd && bwd)).then(|| {
            format!(
                "fails between {} and {}",
                m.pair_name(l),
                m.pair_name(r)
            )
        })
    });
    report.note(
        format!("{name}-as-mutual-entailment"),
        witness.unwrap_or_else(|| "holds".into()),
    );
}

/// Checks the derived identities of the model, exhaustively over the
/// carrier. Each identity also carries its equivalence reading (mutual
/// linear entailment of the two sides) as a note.
pub fn verify_chu_identities(eval: &dyn LinearEval) -> Report {
    let m = eval.model();
    let h = m.heyting();
    let mut report = Report::new(format!("model identities over {}", h.name()));

    let mut pairs_of = |name: &str, lhs: &dyn Fn(Pair) -> Pair, rhs: &dyn Fn(Pair) -> Pair| {
        let instances: Vec<(Pair, Pair)> =
            m.carrier().iter().map(|&a| (lhs(a), rhs(a))).collect();
        let witness = m.carrier().iter().enumerate().find_map(|(i, &a)| {
            let (l, r) = instances[i];
            (l != r).then(|| {
                format!(
                    "at a={}: {} versus {}",
                    m.pair_name(a),
                    m.pair_name(l),
                    m.pair_name(r)
                )
            })
        });
        report.check(name, witness.is_none(), witness.unwrap_or_default());
        mutual_lolli_note(&mut report, name, m, eval, &instances);
    };

    pairs_of(
        "bang-alternative-form",
        &|a| eval.bang(a),
        &|a| (a.0, m.imp(a.0, a.1)),
    );
    pairs_of(
        "whynot-alternative-form",
        &|a| eval.whynot(a),
        &|a| (m.imp(a.1, a.0), a.1),
    );
    pairs_of(
        "dual-is-lolli-to-falsity",
        &|a| eval.dual(a),
        &|a| eval.lolli(a, m.ff()),
    );
    pairs_of(
        "bang-idempotent",
        &|a| eval.bang(eval.bang(a)),
        &|a| eval.bang(a),
    );
    pairs_of(
        "bang-is-self-tensor",
        &|a| eval.bang(a),
        &|a| eval.tensor(a, a),
    );

    {
        let mut witness = None;
        let mut instances = Vec::new();
        for &a in m.carrier() {
            for &b in m.carrier() {
                for &c in m.carrier() {
                    let l = eval.oplus(a, eval.with(b, c));
                    let r = eval.with(eval.oplus(a, b), eval.oplus(a, c));
                    instances.push((l, r));
                    if witness.is_none() && l != r {
                        witness = Some(format!(
                            "at a={} b={} c={}: {} versus {}",
                            m.pair_name(a),
                            m.pair_name(b),
                            m.pair_name(c),
                            m.pair_name(l),
                            m.pair_name(r)
                        ));
                    }
                }
            }
        }
        report.check(
            "oplus-distributes-over-with",
            witness.is_none(),
            witness.unwrap_or_default(),
        );
        mutual_lolli_note(&mut report, "oplus-distributes-over-with", m, eval, &instances);
    }

    {
        let t = m.twist();
        let mut witness = None;
        let mut instances = Vec::new();
        for x in 0..h.len() {
            let ex = m.embed(x);
            if !m.contains(ex) {
                witness = Some(format!("embedding of {} escapes the carrier", h.element_name(x)));
                break;
            }
            for y in 0..h.len() {
                let ey = m.embed(y);
                let l = eval.lolli(eval.bang(ex), ey);
                let r = t.implies(ex, ey).expect("implicative");
                instances.push((l, r));
                if witness.is_none() && l != r {
                    witness = Some(format!(
                        "at x={} y={}: {} versus {}",
                        h.element_name(x),
                        h.element_name(y),
                        m.pair_name(l),
                        m.pair_name(r)
                    ));
                }
            }
        }
        report.check(
            "embedding-internalises-weak-implication",
            witness.is_none(),
            witness.unwrap_or_default(),
        );
        mutual_lolli_note(
            &mut report,
            "embedding-internalises-weak-implication",
            m,
            eval,
            &instances,
        );
    }

    report
}

/// Checks that every connective maps carrier members back into the
/// carrier, exhaustively.
pub fn verify_closure(eval: &dyn LinearEval) -> Report {
    let m = eval.model();
    let mut report = Report::new(format!("carrier closure over {}", m.heyting().name()));
    report.check(
        "constants-in-carrier",
        m.contains(m.tt()) && m.contains(m.ff()),
        String::new(),
    );
    for conn in LinearConnective::all() {
        let name = format!("{}-closed", conn.name());
        let mut witness = None;
        'outer: for &a in m.carrier() {
            use LinearConnective::*;
            if conn.arity() == 1 {
                let out = match conn {
                    Dual => eval.dual(a),
                    Bang => eval.bang(a),
                    WhyNot => eval.whynot(a),
                    _ => unreachable!(),
                };
                if !m.contains(out) {
                    witness = Some(format!(
                        "{} of {} gives {}",
                        conn.name(),
                        m.pair_name(a),
                        m.pair_name(out)
                    ));
                    break 'outer;
                }
            } else {
                for &b in m.carrier() {
                    let out = match conn {
                        Oplus => eval.oplus(a, b),
                        Tensor => eval.tensor(a, b),
                        With => eval.with(a, b),
                        Par => eval.par(a, b),
                        Lolli => eval.lolli(a, b),
                        _ => unreachable!(),
                    };
                    if !m.contains(out) {
                        witness = Some(format!(
                            "{} of {} and {} gives {}",
                            conn.name(),
                            m.pair_name(a),
                            m.pair_name(b),
                            m.pair_name(out)
                        ));
                        break 'outer;
                    }
                }
            }
        }
        report.check(name, witness.is_none(), witness.unwrap_or_default());
    }
    report
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::order::fixtures::{chain, m3, square, two, two_by_three};

    fn model(h: &FiniteLattice) -> ChuModel {
        chu_carrier(h).unwrap()
    }

    #[test]
    fn carrier_of_two_has_three_members() {
        let m = model(&two());
        assert_eq!(m.carrier(), &[(0, 0), (0, 1), (1, 0)]);
    }

    #[test]
    fn carrier_of_the_three_chain_has_five_members() {
        let m = model(&chain(3));
        assert_eq!(m.carrier().len(), 5);
        for p in [(0, 0), (1, 0), (2, 0), (0, 1), (0, 2)] {
            assert!(m.contains(p));
        }
    }

    #[test]
    fn overlapping_pairs_are_excluded() {
        let m = model(&square());
        let top = m.heyting().top();
        assert!(!m.contains((top, top)));
        assert_eq!(m.carrier().len(), 9);
    }

    #[test]
    fn non_distributive_cores_are_rejected() {
        assert!(matches!(chu_carrier(&m3()), Err(ChuError::NotHeyting(_))));
    }

    #[test]
    fn truth_tensor_falsity_is_falsity() {
        let m = model(&two());
        let out = chu_eval(&m, LinearConnective::Tensor, &[m.tt(), m.ff()]).unwrap();
        assert_eq!(out, m.ff());
    }

    #[test]
    fn bang_fixes_the_middle_of_the_three_chain() {
        let m = model(&chain(3));
        let out = chu_eval(&m, LinearConnective::Bang, &[(1, 0)]).unwrap();
        assert_eq!(out, (1, 0));
    }

    #[test]
    fn dual_is_involutive() {
        let m = model(&square());
        for &a in m.carrier() {
            let d = chu_eval(&m, LinearConnective::Dual, &[a]).unwrap();
            let dd = chu_eval(&m, LinearConnective::Dual, &[d]).unwrap();
            assert_eq!(dd, a);
        }
    }

    #[test]
    fn eval_rejects_inconsistent_arguments() {
        let m = model(&two());
        assert!(matches!(
            chu_eval(&m, LinearConnective::Oplus, &[(1, 1), (0, 0)]),
            Err(ChuError::NotInCarrier(_))
        ));
    }

    #[test]
    fn embedding_of_the_middle_keeps_an_empty_complement() {
        let m = model(&chain(3));
        assert_eq!(m.embed(1), (1, 0));
    }

    #[test]
    fn definability_holds_on_all_cores() {
        for h in [two(), chain(3), chain(4), chain(5), square(), two_by_three()] {
            let m = model(&h);
            let report = verify_term_definability(&CanonicalLinear(&m));
            assert!(report.passed(), "{report}");
        }
    }

    #[test]
    fn identities_hold_on_all_cores() {
        for h in [two(), chain(3), chain(4), chain(5), square(), two_by_three()] {
            let m = model(&h);
            let report = verify_chu_identities(&CanonicalLinear(&m));
            assert!(report.passed(), "{report}");
        }
    }

    #[test]
    fn closure_holds_on_all_cores() {
        for h in [two(), chain(3), square(), two_by_three()] {
            let m = model(&h);
            let report = verify_closure(&CanonicalLinear(&m));
            assert!(report.passed(), "{report}");
        }
    }

    #[test]
    fn par_is_the_de_morgan_dual_of_tensor() {
        for h in [two(), chain(3), square()] {
            let m = model(&h);
            assert_eq!(de_morgan_witness(&CanonicalLinear(&m)), None);
        }
    }

    /// Tensor silently replaced by oplus; the checkers must notice.
    struct TensorAsOplus<'a>(&'a ChuModel);

    impl LinearEval for TensorAsOplus<'_> {
        fn model(&self) -> &ChuModel {
            self.0
        }

        fn tensor(&self, a: Pair, b: Pair) -> Pair {
            self.oplus(a, b)
        }
    }

    #[test]
    fn wrong_tensor_is_detected_with_a_witness() {
        let m = model(&two());
        let report = verify_term_definability(&TensorAsOplus(&m));
        assert!(!report.passed());
        let fail = report.first_failure().unwrap();
        assert_eq!(fail.name, "tensor-is-fusion");
        // The two operations agree on truth-falsity combinations; the first
        // divergence is the no-information pair against itself.
        assert!(fail.witness.as_deref().unwrap().contains("a=(0,0) b=(0,0)"));
        let identities = verify_chu_identities(&TensorAsOplus(&m));
        assert!(!identities.passed());
    }

    #[test]
    fn equivalence_notes_match_equality_on_the_canonical_model() {
        let m = model(&chain(3));
        let report = verify_chu_identities(&CanonicalLinear(&m));
        for entry in &report.entries {
            if entry.name.ends_with("-as-mutual-entailment") {
                assert_eq!(entry.witness.as_deref(), Some("holds"));
            }
        }
    }
}
