//! Twist products and bilattices: one carrier, two orders.
//!
//! A twist product pairs two lattices `(L+, L-)` into a single carrier
//! `L+ x L-` read as (evidence for, evidence against). Componentwise
//! meet/join give the information order `info_leq`; twisting the second
//! component gives the logical order `logic_leq` with its own conjunction
//! and disjunction. When both components are the same lattice, swapping the
//! components is a negation; when that lattice is moreover distributive
//! (hence Heyting on a finite carrier), a weak implication, a strong
//! implication, and a residuated fusion become term definable.
//!
//! [`AbstractBilattice`] is the table-driven counterpart: any pair of
//! operation families on a shared carrier, checked against the bilattice
//! axioms after the fact. It exists so that deliberately broken structures
//! can be fed to the checkers, and so that a structure matching the axioms
//! can be reconstructed as a twist product via [`AbstractBilattice::twist_representation`].

use thiserror::Error;

use crate::order::{build_lattice, FiniteLattice, Structure};
use crate::report::Report;

/// A point of a twist product: indices into the positive and negative
/// component lattices.
pub type Pair = (usize, usize);

/// Errors from twist and bilattice operations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BilatticeError {
    /// The requested connective needs structure this algebra lacks
    /// (symmetry for negation, a distributive shared lattice for the
    /// implications).
    #[error("connective unavailable: {0}")]
    ConnectiveUnavailable(String),
    /// An operation table violates a bilattice axiom.
    #[error("not a bilattice: {0}")]
    NotABilattice(String),
    /// The bilattice axioms hold but the two orders are not interlaced.
    #[error("not interlaced: {0}")]
    NotInterlaced(String),
    /// The reconstruction map failed to be an isomorphism.
    #[error("representation check failed: {0}")]
    RepresentationCheckFailed(String),
    /// Arity or membership error in dynamic evaluation.
    #[error("bad arguments: {0}")]
    BadArguments(String),
}

/// The twist product of two finite lattices.
#[derive(Debug, Clone)]
pub struct TwistAlgebra {
    plus: FiniteLattice,
    minus: FiniteLattice,
    /// Heyting implication table of the shared lattice, present exactly when
    /// the components coincide and are distributive.
    implication: Option<Vec<usize>>,
}

/// Builds the twist product `plus x minus`.
///
/// Negation is available when the two components are structurally equal;
/// the implications and fusion additionally need that shared lattice to be
/// distributive. Nothing fails here: availability is captured in the
/// returned algebra and surfaces as [`BilatticeError::ConnectiveUnavailable`]
/// from the affected operations.
pub fn twist_construct(plus: &FiniteLattice, minus: &FiniteLattice) -> TwistAlgebra {
    let implication = if plus.same_structure(minus) && plus.is_distributive() {
        let n = plus.len();
        let mut table = Vec::with_capacity(n * n);
        for a in 0..n {
            for b in 0..n {
                table.push(plus.heyting_implies(a, b).expect("distributive"));
            }
        }
        Some(table)
    } else {
        None
    };
    TwistAlgebra {
        plus: plus.clone(),
        minus: minus.clone(),
        implication,
    }
}

impl TwistAlgebra {
    /// Positive component lattice.
    pub fn plus(&self) -> &FiniteLattice {
        &self.plus
    }

    /// Negative component lattice.
    pub fn minus(&self) -> &FiniteLattice {
        &self.minus
    }

    /// True when both components are the same lattice, enabling negation.
    pub fn symmetric(&self) -> bool {
        self.plus.same_structure(&self.minus)
    }

    /// True when implication, strong implication, and fusion are available.
    pub fn implicative(&self) -> bool {
        self.implication.is_some()
    }

    /// Number of carrier pairs.
    pub fn pair_count(&self) -> usize {
        self.plus.len() * self.minus.len()
    }

    /// The carrier in row-major declared order.
    pub fn pairs(&self) -> Vec<Pair> {
        let mut out = Vec::with_capacity(self.pair_count());
        for a in 0..self.plus.len() {
            for b in 0..self.minus.len() {
                out.push((a, b));
            }
        }
        out
    }

    /// Printable name of a pair, `(positive,negative)`.
    pub fn pair_name(&self, p: Pair) -> String {
        format!(
            "({},{})",
            self.plus.element_name(p.0),
            self.minus.element_name(p.1)
        )
    }

    /// Pair lookup by component names.
    pub fn pair_by_names(&self, pos: &str, neg: &str) -> Result<Pair, BilatticeError> {
        let a = self
            .plus
            .element_index(pos)
            .map_err(|e| BilatticeError::BadArguments(e.to_string()))?;
        let b = self
            .minus
            .element_index(neg)
            .map_err(|e| BilatticeError::BadArguments(e.to_string()))?;
        Ok((a, b))
    }

    /// Logical falsity `(0, 1)`.
    pub fn ff(&self) -> Pair {
        (self.plus.bottom(), self.minus.top())
    }

    /// Logical truth `(1, 0)`.
    pub fn tt(&self) -> Pair {
        (self.plus.top(), self.minus.bottom())
    }

    /// No information `(0, 0)`.
    pub fn bot(&self) -> Pair {
        (self.plus.bottom(), self.minus.bottom())
    }

    /// Over-determined information `(1, 1)`.
    pub fn top(&self) -> Pair {
        (self.plus.top(), self.minus.top())
    }

    /// Information meet: componentwise meet.
    pub fn meet(&self, x: Pair, y: Pair) -> Pair {
        (self.plus.meet(x.0, y.0), self.minus.meet(x.1, y.1))
    }

    /// Information join: componentwise join.
    pub fn join(&self, x: Pair, y: Pair) -> Pair {
        (self.plus.join(x.0, y.0), self.minus.join(x.1, y.1))
    }

    /// Logical conjunction: meet the evidence for, join the evidence
    /// against.
    pub fn and(&self, x: Pair, y: Pair) -> Pair {
        (self.plus.meet(x.0, y.0), self.minus.join(x.1, y.1))
    }

    /// Logical disjunction: join the evidence for, meet the evidence
    /// against.
    pub fn or(&self, x: Pair, y: Pair) -> Pair {
        (self.plus.join(x.0, y.0), self.minus.meet(x.1, y.1))
    }

    /// Information order: both components grow.
    pub fn info_leq(&self, x: Pair, y: Pair) -> bool {
        self.plus.leq(x.0, y.0) && self.minus.leq(x.1, y.1)
    }

    /// Logical order: evidence for grows, evidence against shrinks.
    pub fn logic_leq(&self, x: Pair, y: Pair) -> bool {
        self.plus.leq(x.0, y.0) && self.minus.leq(y.1, x.1)
    }

    /// Negation swaps the components. Needs a symmetric twist.
    pub fn not(&self, x: Pair) -> Result<Pair, BilatticeError> {
        if !self.symmetric() {
            return Err(BilatticeError::ConnectiveUnavailable(
                "negation needs both components to be the same lattice".into(),
            ));
        }
        Ok((x.1, x.0))
    }

    fn shared_implies(&self, a: usize, b: usize) -> Result<usize, BilatticeError> {
        match &self.implication {
            Some(t) => Ok(t[a * self.plus.len() + b]),
            None => Err(BilatticeError::ConnectiveUnavailable(
                "implication needs a shared distributive component lattice".into(),
            )),
        }
    }

    /// Weak implication `(a+ -> b+, a+ /\ b-)`.
    pub fn implies(&self, x: Pair, y: Pair) -> Result<Pair, BilatticeError> {
        Ok((self.shared_implies(x.0, y.0)?, self.plus.meet(x.0, y.1)))
    }

    /// Strong implication `(x => y) = (x -> y) and (not y -> not x)`.
    pub fn strong_implies(&self, x: Pair, y: Pair) -> Result<Pair, BilatticeError> {
        let weak = self.implies(x, y)?;
        let contra = self.implies(self.not(y)?, self.not(x)?)?;
        Ok(self.and(weak, contra))
    }

    /// Fusion `x * y = not (y => not x)`; residuated for the strong
    /// implication.
    pub fn fusion(&self, x: Pair, y: Pair) -> Result<Pair, BilatticeError> {
        self.not(self.strong_implies(y, self.not(x)?)?)
    }
}

/// Connectives of a twist algebra, for table printing and dynamic
/// evaluation.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Connective {
    /// Information meet.
    Meet,
    /// Information join.
    Join,
    /// Logical conjunction.
    And,
    /// Logical disjunction.
    Or,
    /// Negation.
    Not,
    /// Weak implication.
    Implies,
    /// Strong implication.
    StrongImplies,
    /// Fusion.
    Fusion,
    /// Information order test.
    InfoLeq,
    /// Logical order test.
    LogicLeq,
}

impl Connective {
    /// All connectives in rendering order.
    pub fn all() -> [Connective; 10] {
        use Connective::*;
        [Meet, Join, And, Or, Not, Implies, StrongImplies, Fusion, InfoLeq, LogicLeq]
    }

    /// Stable command-line name.
    pub fn name(self) -> &'static str {
        use Connective::*;
        match self {
            Meet => "meet",
            Join => "join",
            And => "and",
            Or => "or",
            Not => "not",
            Implies => "implies",
            StrongImplies => "strong-implies",
            Fusion => "fusion",
            InfoLeq => "info-le",
            LogicLeq => "logic-le",
        }
    }

    /// Parses a command-line name.
    pub fn parse(s: &str) -> Option<Connective> {
        Connective::all().into_iter().find(|c| c.name() == s)
    }

    /// Argument count.
    pub fn arity(self) -> usize {
        match self {
            Connective::Not => 1,
            _ => 2,
        }
    }
}

/// Result of dynamically evaluating a connective.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EvalValue {
    /// A carrier pair.
    Pair(Pair),
    /// An order-test verdict.
    Bool(bool),
}

/// Evaluates `connective` on `args` in declared-order semantics.
pub fn bilattice_eval(
    t: &TwistAlgebra,
    connective: Connective,
    args: &[Pair],
) -> Result<EvalValue, BilatticeError> {
    if args.len() != connective.arity() {
        return Err(BilatticeError::BadArguments(format!(
            "{} expects {} argument(s), got {}",
            connective.name(),
            connective.arity(),
            args.len()
        )));
    }
    for p in args {
        if p.0 >= t.plus().len() || p.1 >= t.minus().len() {
            return Err(BilatticeError::BadArguments(format!(
                "pair ({},{}) outside the carrier",
                p.0, p.1
            )));
        }
    }
    use Connective::*;
    Ok(match connective {
        Meet => EvalValue::Pair(t.meet(args[0], args[1])),
        Join => EvalValue::Pair(t.join(args[0], args[1])),
        And => EvalValue::Pair(t.and(args[0], args[1])),
        Or => EvalValue::Pair(t.or(args[0], args[1])),
        Not => EvalValue::Pair(t.not(args[0])?),
        Implies => EvalValue::Pair(t.implies(args[0], args[1])?),
        StrongImplies => EvalValue::Pair(t.strong_implies(args[0], args[1])?),
        Fusion => EvalValue::Pair(t.fusion(args[0], args[1])?),
        InfoLeq => EvalValue::Bool(t.info_leq(args[0], args[1])),
        LogicLeq => EvalValue::Bool(t.logic_leq(args[0], args[1])),
    })
}

/// Checks that fusion is residuated for the strong implication:
/// `x * y logic_leq z` exactly when `x logic_leq (y => z)`, over every
/// triple of carrier pairs.
pub fn check_residuation(t: &TwistAlgebra) -> Result<Report, BilatticeError> {
    let fuse = |x, y| t.fusion(x, y).expect("checked implicative");
    if !t.implicative() {
        return Err(BilatticeError::ConnectiveUnavailable(
            "residuation needs fusion, hence a shared distributive lattice".into(),
        ));
    }
    let mut report = Report::new(format!("residuation over {}", t.plus().name()));
    match residuation_witness_with(t, fuse) {
        None => report.pass("fusion-residuation"),
        Some(w) => report.fail("fusion-residuation", w),
    }
    let n = t.pair_count();
    report.note("triples-checked", format!("{}", n * n * n));
    Ok(report)
}

/// Residuation scan against an arbitrary fusion-like operation; used to
/// confirm the checker notices a wrong operation.
pub(crate) fn residuation_witness_with(
    t: &TwistAlgebra,
    fuse: impl Fn(Pair, Pair) -> Pair,
) -> Option<String> {
    let pairs = t.pairs();
    for &x in &pairs {
        for &y in &pairs {
            let fxy = fuse(x, y);
            for &z in &pairs {
                let lhs = t.logic_leq(fxy, z);
                let rhs = t.logic_leq(x, t.strong_implies(y, z).expect("implicative"));
                if lhs != rhs {
                    return Some(format!(
                        "x={} y={} z={}: x*y below z is {lhs} but x below y=>z is {rhs}",
                        t.pair_name(x),
                        t.pair_name(y),
                        t.pair_name(z)
                    ));
                }
            }
        }
    }
    None
}

/// A bilattice given by raw operation tables on a shared carrier.
///
/// Nothing is validated at construction; run [`AbstractBilattice::check_axioms`]
/// or [`AbstractBilattice::is_interlaced`] to interrogate the tables. This
/// is deliberate: the checkers themselves are under test against corrupted
/// tables.
#[derive(Debug, Clone)]
pub struct AbstractBilattice {
    name: String,
    elements: Vec<String>,
    imeet: Vec<usize>,
    ijoin: Vec<usize>,
    and_t: Vec<usize>,
    or_t: Vec<usize>,
    neg: Vec<usize>,
    ff: usize,
    tt: usize,
    bot: usize,
    top: usize,
}

impl AbstractBilattice {
    /// Wraps raw tables. All tables are row-major over the element list.
    #[allow(clippy::too_many_arguments)]
    pub fn new(
        name: &str,
        elements: Vec<String>,
        imeet: Vec<usize>,
        ijoin: Vec<usize>,
        and_t: Vec<usize>,
        or_t: Vec<usize>,
        neg: Vec<usize>,
        ff: usize,
        tt: usize,
        bot: usize,
        top: usize,
    ) -> Self {
        let n = elements.len();
        assert!(imeet.len() == n * n && ijoin.len() == n * n);
        assert!(and_t.len() == n * n && or_t.len() == n * n);
        assert_eq!(neg.len(), n);
        AbstractBilattice {
            name: name.to_string(),
            elements,
            imeet,
            ijoin,
            and_t,
            or_t,
            neg,
            ff,
            tt,
            bot,
            top,
        }
    }

    /// Reads the tables off two order presentations of the same carrier:
    /// `info` supplies meet/join, `logic` supplies and/or, and `neg` lists
    /// `element -> image` by name. Element order follows `info`.
    pub fn from_orders(
        name: &str,
        info: &FiniteLattice,
        logic: &FiniteLattice,
        neg_pairs: &[(&str, &str)],
    ) -> Result<Self, BilatticeError> {
        let n = info.len();
        if logic.len() != n {
            return Err(BilatticeError::BadArguments(
                "orders have different carriers".into(),
            ));
        }
        let to_logic: Vec<usize> = info
            .element_names()
            .iter()
            .map(|e| {
                logic
                    .element_index(e)
                    .map_err(|_| BilatticeError::BadArguments(format!("{e} missing from logic order")))
            })
            .collect::<Result<_, _>>()?;
        let from_logic = {
            let mut v = vec![0usize; n];
            for (i, &l) in to_logic.iter().enumerate() {
                v[l] = i;
            }
            v
        };
        let mut neg = vec![usize::MAX; n];
        for (a, b) in neg_pairs {
            let i = info
                .element_index(a)
                .map_err(|e| BilatticeError::BadArguments(e.to_string()))?;
            neg[i] = info
                .element_index(b)
                .map_err(|e| BilatticeError::BadArguments(e.to_string()))?;
        }
        if let Some(i) = neg.iter().position(|&x| x == usize::MAX) {
            return Err(BilatticeError::BadArguments(format!(
                "negation undefined on {}",
                info.element_name(i)
            )));
        }
        let mut imeet = Vec::with_capacity(n * n);
        let mut ijoin = Vec::with_capacity(n * n);
        let mut and_t = Vec::with_capacity(n * n);
        let mut or_t = Vec::with_capacity(n * n);
        for a in 0..n {
            for b in 0..n {
                imeet.push(info.meet(a, b));
                ijoin.push(info.join(a, b));
                and_t.push(from_logic[logic.meet(to_logic[a], to_logic[b])]);
                or_t.push(from_logic[logic.join(to_logic[a], to_logic[b])]);
            }
        }
        Ok(AbstractBilattice::new(
            name,
            info.element_names().to_vec(),
            imeet,
            ijoin,
            and_t,
            or_t,
            neg,
            from_logic[logic.bottom()],
            from_logic[logic.top()],
            info.bottom(),
            info.top(),
        ))
    }

    /// Reads the tables off a symmetric twist algebra; carrier pairs become
    /// elements in row-major order.
    pub fn from_twist(t: &TwistAlgebra) -> Result<Self, BilatticeError> {
        if !t.symmetric() {
            return Err(BilatticeError::ConnectiveUnavailable(
                "an asymmetric twist has no negation, hence is not a bilattice".into(),
            ));
        }
        let pairs = t.pairs();
        let idx = |p: Pair| p.0 * t.minus().len() + p.1;
        let n = pairs.len();
        let mut imeet = Vec::with_capacity(n * n);
        let mut ijoin = Vec::with_capacity(n * n);
        let mut and_t = Vec::with_capacity(n * n);
        let mut or_t = Vec::with_capacity(n * n);
        for &x in &pairs {
            for &y in &pairs {
                imeet.push(idx(t.meet(x, y)));
                ijoin.push(idx(t.join(x, y)));
                and_t.push(idx(t.and(x, y)));
                or_t.push(idx(t.or(x, y)));
            }
        }
        let neg: Vec<usize> = pairs.iter().map(|&p| idx((p.1, p.0))).collect();
        Ok(AbstractBilattice::new(
            &format!("{}-twist", t.plus().name()),
            pairs.iter().map(|&p| t.pair_name(p)).collect(),
            imeet,
            ijoin,
            and_t,
            or_t,
            neg,
            idx(t.ff()),
            idx(t.tt()),
            idx(t.bot()),
            idx(t.top()),
        ))
    }

    /// Carrier size.
    pub fn len(&self) -> usize {
        self.elements.len()
    }

    /// True when the carrier is empty.
    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    /// The structure's name.
    pub fn name(&self) -> &str {
        &self.name
    }

    /// Element names in declared order.
    pub fn element_names(&self) -> &[String] {
        &self.elements
    }

    /// Information meet table lookup.
    pub fn imeet(&self, a: usize, b: usize) -> usize {
        self.imeet[a * self.len() + b]
    }

    /// Information join table lookup.
    pub fn ijoin(&self, a: usize, b: usize) -> usize {
        self.ijoin[a * self.len() + b]
    }

    /// Logical conjunction table lookup.
    pub fn and(&self, a: usize, b: usize) -> usize {
        self.and_t[a * self.len() + b]
    }

    /// Logical disjunction table lookup.
    pub fn or(&self, a: usize, b: usize) -> usize {
        self.or_t[a * self.len() + b]
    }

    /// Negation table lookup.
    pub fn neg(&self, a: usize) -> usize {
        self.neg[a]
    }

    /// Overrides the negation table; for checker-sensitivity experiments.
    pub fn with_negation(mut self, neg: Vec<usize>) -> Self {
        assert_eq!(neg.len(), self.len());
        self.neg = neg;
        self
    }

    /// Order induced by the information operations.
    pub fn info_leq(&self, a: usize, b: usize) -> bool {
        self.imeet(a, b) == a
    }

    /// Order induced by the logical operations.
    pub fn logic_leq(&self, a: usize, b: usize) -> bool {
        self.and(a, b) == a
    }

    fn lattice_laws(
        &self,
        report: &mut Report,
        prefix: &str,
        meet: &dyn Fn(usize, usize) -> usize,
        join: &dyn Fn(usize, usize) -> usize,
        lo: usize,
        hi: usize,
    ) {
        let n = self.len();
        let name = |i: usize| self.elements[i].as_str();
        let mut comm = None;
        let mut assoc = None;
        let mut idem = None;
        let mut absorb = None;
        for a in 0..n {
            if idem.is_none() && (meet(a, a) != a || join(a, a) != a) {
                idem = Some(format!("at {}", name(a)));
            }
            for b in 0..n {
                if comm.is_none() && (meet(a, b) != meet(b, a) || join(a, b) != join(b, a)) {
                    comm = Some(format!("at {} and {}", name(a), name(b)));
                }
                if absorb.is_none()
                    && (meet(a, join(a, b)) != a || join(a, meet(a, b)) != a)
                {
                    absorb = Some(format!("at {} and {}", name(a), name(b)));
                }
                for c in 0..n {
                    if assoc.is_none()
                        && (meet(meet(a, b), c) != meet(a, meet(b, c))
                            || join(join(a, b), c) != join(a, join(b, c)))
                    {
                        assoc = Some(format!("at {}, {}, {}", name(a), name(b), name(c)));
                    }
                }
            }
        }
        let bounds = (0..n)
            .find(|&a| meet(lo, a) != lo || join(lo, a) != a || meet(hi, a) != a || join(hi, a) != hi)
            .map(|a| format!("bounds misbehave at {}", name(a)));
        report.check(format!("{prefix}-commutative"), comm.is_none(), comm.unwrap_or_default());
        report.check(format!("{prefix}-associative"), assoc.is_none(), assoc.unwrap_or_default());
        report.check(format!("{prefix}-idempotent"), idem.is_none(), idem.unwrap_or_default());
        report.check(format!("{prefix}-absorptive"), absorb.is_none(), absorb.unwrap_or_default());
        report.check(format!("{prefix}-bounded"), bounds.is_none(), bounds.unwrap_or_default());
    }

    /// Checks the bilattice axioms: both operation families are bounded
    /// lattices, negation is monotone for the information order, antitone
    /// for the logical order, and involutive.
    pub fn check_axioms(&self) -> Report {
        let mut report = Report::new(format!("bilattice axioms for {}", self.name));
        self.lattice_laws(
            &mut report,
            "bi1-info",
            &|a, b| self.imeet(a, b),
            &|a, b| self.ijoin(a, b),
            self.bot,
            self.top,
        );
        self.lattice_laws(
            &mut report,
            "bi1-logic",
            &|a, b| self.and(a, b),
            &|a, b| self.or(a, b),
            self.ff,
            self.tt,
        );
        let n = self.len();
        let name = |i: usize| self.elements[i].as_str();
        let mut monotone = None;
        let mut antitone = None;
        let mut involutive = None;
        for a in 0..n {
            if involutive.is_none() && self.neg(self.neg(a)) != a {
                involutive = Some(format!("at {}", name(a)));
            }
            for b in 0..n {
                if monotone.is_none() && self.info_leq(a, b) && !self.info_leq(self.neg(a), self.neg(b)) {
                    monotone = Some(format!("{} below {} in the information order", name(a), name(b)));
                }
                if antitone.is_none() && self.logic_leq(a, b) && !self.logic_leq(self.neg(b), self.neg(a)) {
                    antitone = Some(format!("{} below {} in the logical order", name(a), name(b)));
                }
            }
        }
        report.check("bi2-negation-info-monotone", monotone.is_none(), monotone.unwrap_or_default());
        report.check("bi3-negation-logic-antitone", antitone.is_none(), antitone.unwrap_or_default());
        report.check("bi4-negation-involutive", involutive.is_none(), involutive.unwrap_or_default());
        report
    }

    /// First interlacing violation: each lattice operation must be monotone
    /// for the other family's order.
    pub fn interlacing_witness(&self) -> Option<String> {
        let n = self.len();
        let name = |i: usize| self.elements[i].as_str();
        for x in 0..n {
            for y in 0..n {
                if self.logic_leq(x, y) {
                    for z in 0..n {
                        if !self.logic_leq(self.imeet(x, z), self.imeet(y, z)) {
                            return Some(format!(
                                "{} logic-below {} but information meet with {} is not",
                                name(x), name(y), name(z)
                            ));
                        }
                        if !self.logic_leq(self.ijoin(x, z), self.ijoin(y, z)) {
                            return Some(format!(
                                "{} logic-below {} but information join with {} is not",
                                name(x), name(y), name(z)
                            ));
                        }
                    }
                }
                if self.info_leq(x, y) {
                    for z in 0..n {
                        if !self.info_leq(self.and(x, z), self.and(y, z)) {
                            return Some(format!(
                                "{} info-below {} but conjunction with {} is not",
                                name(x), name(y), name(z)
                            ));
                        }
                        if !self.info_leq(self.or(x, z), self.or(y, z)) {
                            return Some(format!(
                                "{} info-below {} but disjunction with {} is not",
                                name(x), name(y), name(z)
                            ));
                        }
                    }
                }
            }
        }
        None
    }

    /// Interlacing test. Fails with [`BilatticeError::NotABilattice`] when
    /// the basic axioms already fail, naming the broken axiom.
    pub fn is_interlaced(&self) -> Result<bool, BilatticeError> {
        let axioms = self.check_axioms();
        if let Some(e) = axioms.first_failure() {
            return Err(BilatticeError::NotABilattice(format!(
                "{}: {}",
                e.name,
                e.witness.as_deref().unwrap_or("")
            )));
        }
        Ok(self.interlacing_witness().is_none())
    }

    /// Reconstructs the bilattice as a twist product of the interval from
    /// bottom to logical truth.
    ///
    /// Returns the recovered component lattice `L` and the witnessing map
    /// sending each element `x` to `(x meet tt, not (x meet ff))`, both
    /// components read as indices into `L`. The map is verified to be a
    /// bijection onto `L x L` commuting with all five operations and the
    /// four constants; any mismatch is a
    /// [`BilatticeError::RepresentationCheckFailed`].
    pub fn twist_representation(&self) -> Result<(FiniteLattice, Vec<Pair>), BilatticeError> {
        if !self.is_interlaced()? {
            return Err(BilatticeError::NotInterlaced(
                self.interlacing_witness().unwrap_or_default(),
            ));
        }
        let n = self.len();
        // The positive core: everything informationally below logical truth.
        let members: Vec<usize> = (0..n).filter(|&x| self.info_leq(x, self.tt)).collect();
        let names: Vec<&str> = members.iter().map(|&i| self.elements[i].as_str()).collect();
        let mut order = Vec::new();
        for &x in &members {
            for &y in &members {
                if self.info_leq(x, y) {
                    order.push((self.elements[x].as_str(), self.elements[y].as_str()));
                }
            }
        }
        let core = build_lattice(&format!("{}-core", self.name), &names, &order)
            .map_err(|e| BilatticeError::RepresentationCheckFailed(e.to_string()))?;
        let core_index = |x: usize| -> Result<usize, BilatticeError> {
            members.iter().position(|&m| m == x).ok_or_else(|| {
                BilatticeError::RepresentationCheckFailed(format!(
                    "{} does not land in the positive core",
                    self.elements[x]
                ))
            })
        };
        let mut map = Vec::with_capacity(n);
        for x in 0..n {
            let pos = core_index(self.imeet(x, self.tt))?;
            let neg = core_index(self.neg(self.imeet(x, self.ff)))?;
            map.push((pos, neg));
        }
        if n != core.len() * core.len() {
            return Err(BilatticeError::RepresentationCheckFailed(format!(
                "carrier has {n} elements but the core squares to {}",
                core.len() * core.len()
            )));
        }
        for x in 0..n {
            for y in x + 1..n {
                if map[x] == map[y] {
                    return Err(BilatticeError::RepresentationCheckFailed(format!(
                        "{} and {} map to the same pair",
                        self.elements[x], self.elements[y]
                    )));
                }
            }
        }
        let expect = |what: &str, x: usize, got: Pair, want: Pair| {
            if got == want {
                Ok(())
            } else {
                Err(BilatticeError::RepresentationCheckFailed(format!(
                    "{what} not preserved at {}",
                    self.elements[x]
                )))
            }
        };
        for x in 0..n {
            for y in 0..n {
                let (xp, xm) = map[x];
                let (yp, ym) = map[y];
                expect("information meet", x, map[self.imeet(x, y)], (core.meet(xp, yp), core.meet(xm, ym)))?;
                expect("information join", x, map[self.ijoin(x, y)], (core.join(xp, yp), core.join(xm, ym)))?;
                expect("conjunction", x, map[self.and(x, y)], (core.meet(xp, yp), core.join(xm, ym)))?;
                expect("disjunction", x, map[self.or(x, y)], (core.join(xp, yp), core.meet(xm, ym)))?;
            }
            let (xp, xm) = map[x];
            expect("negation", x, map[self.neg(x)], (xm, xp))?;
        }
        expect("falsity", self.ff, map[self.ff], (core.bottom(), core.top()))?;
        expect("truth", self.tt, map[self.tt], (core.top(), core.bottom()))?;
        expect("information bottom", self.bot, map[self.bot], (core.bottom(), core.bottom()))?;
        expect("information top", self.top, map[self.top], (core.top(), core.top()))?;
        Ok((core, map))
    }

    /// The bilattice as a signature structure for isomorphism search.
    pub fn as_structure(&self) -> Structure {
        Structure::new(self.len())
            .with_binary("imeet", self.imeet.clone())
            .with_binary("ijoin", self.ijoin.clone())
            .with_binary("and", self.and_t.clone())
            .with_binary("or", self.or_t.clone())
            .with_unary("neg", self.neg.clone())
            .with_constant("ff", self.ff)
            .with_constant("tt", self.tt)
            .with_constant("bot", self.bot)
            .with_constant("top", self.top)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::order::fixtures::{chain, square, two};
    use crate::order::{find_isomorphism, LatticeError};

    fn four() -> TwistAlgebra {
        twist_construct(&two(), &two())
    }

    #[test]
    fn four_constants_and_orders() {
        let t = four();
        assert_eq!(t.ff(), (0, 1));
        assert_eq!(t.tt(), (1, 0));
        assert_eq!(t.bot(), (0, 0));
        assert_eq!(t.top(), (1, 1));
        // Logical order: ff below everything, tt above everything, the two
        // middle values incomparable.
        assert!(t.logic_leq(t.ff(), t.bot()));
        assert!(t.logic_leq(t.ff(), t.top()));
        assert!(t.logic_leq(t.bot(), t.tt()));
        assert!(!t.logic_leq(t.bot(), t.top()));
        assert!(!t.logic_leq(t.top(), t.bot()));
        // Information order: bot below everything, top above everything.
        assert!(t.info_leq(t.bot(), t.ff()));
        assert!(t.info_leq(t.tt(), t.top()));
        assert!(!t.info_leq(t.ff(), t.tt()));
    }

    #[test]
    fn four_negation_fixes_the_information_bounds() {
        let t = four();
        assert_eq!(t.not(t.top()).unwrap(), t.top());
        assert_eq!(t.not(t.bot()).unwrap(), t.bot());
        assert_eq!(t.not(t.tt()).unwrap(), t.ff());
    }

    #[test]
    fn truth_is_neutral_for_weak_implication() {
        let t = four();
        for p in t.pairs() {
            assert_eq!(t.implies(t.tt(), p).unwrap(), p);
        }
    }

    #[test]
    fn information_join_in_the_three_chain_twist() {
        let t = twist_construct(&chain(3), &chain(3));
        assert_eq!(t.join((1, 0), (0, 1)), (1, 1));
    }

    #[test]
    fn strong_implication_matches_its_closed_form() {
        // x => y = ((x+ -> y+) /\ (y- -> x-), x+ /\ y-), on every pair.
        for l in [two(), chain(3), chain(4), square()] {
            let t = twist_construct(&l, &l);
            for x in t.pairs() {
                for y in t.pairs() {
                    let direct = (
                        l.meet(
                            l.heyting_implies(x.0, y.0).unwrap(),
                            l.heyting_implies(y.1, x.1).unwrap(),
                        ),
                        l.meet(x.0, y.1),
                    );
                    assert_eq!(t.strong_implies(x, y).unwrap(), direct);
                }
            }
        }
    }

    #[test]
    fn fusion_matches_its_closed_form() {
        // x * y = (x+ /\ y+, (x+ -> y-) /\ (y+ -> x-)), on every pair.
        for l in [two(), chain(3), square()] {
            let t = twist_construct(&l, &l);
            for x in t.pairs() {
                for y in t.pairs() {
                    let direct = (
                        l.meet(x.0, y.0),
                        l.meet(
                            l.heyting_implies(x.0, y.1).unwrap(),
                            l.heyting_implies(y.0, x.1).unwrap(),
                        ),
                    );
                    assert_eq!(t.fusion(x, y).unwrap(), direct);
                }
            }
        }
    }

    #[test]
    fn residuation_holds_on_distributive_twists() {
        for l in [two(), chain(3), chain(4), square()] {
            let t = twist_construct(&l, &l);
            let report = check_residuation(&t).unwrap();
            assert!(report.passed(), "{report}");
        }
    }

    #[test]
    fn residuation_checker_notices_a_wrong_fusion() {
        // Replacing fusion by the information meet must produce a witness.
        let t = four();
        let witness = residuation_witness_with(&t, |x, y| t.meet(x, y));
        assert!(witness.is_some());
    }

    #[test]
    fn asymmetric_twists_have_no_negation() {
        let t = twist_construct(&two(), &chain(3));
        assert!(matches!(
            t.not((0, 0)),
            Err(BilatticeError::ConnectiveUnavailable(_))
        ));
        assert!(!t.implicative());
    }

    #[test]
    fn non_distributive_twists_have_no_implication() {
        let t = twist_construct(&crate::order::fixtures::m3(), &crate::order::fixtures::m3());
        assert!(t.symmetric());
        assert!(matches!(
            t.implies((0, 0), (0, 0)),
            Err(BilatticeError::ConnectiveUnavailable(_))
        ));
    }

    #[test]
    fn four_is_a_bilattice_and_interlaced() {
        let b = AbstractBilattice::from_twist(&four()).unwrap();
        let axioms = b.check_axioms();
        assert!(axioms.passed(), "{axioms}");
        assert!(b.is_interlaced().unwrap());
    }

    #[test]
    fn identity_negation_breaks_the_axioms() {
        let b = AbstractBilattice::from_twist(&four()).unwrap();
        let n = b.len();
        let broken = b.with_negation((0..n).collect());
        let axioms = broken.check_axioms();
        assert!(!axioms.passed());
        assert_eq!(axioms.first_failure().unwrap().name, "bi3-negation-logic-antitone");
        assert!(matches!(
            broken.is_interlaced(),
            Err(BilatticeError::NotABilattice(_))
        ));
    }

    /// A five-element bilattice satisfying the axioms whose orders are not
    /// interlaced: information order bot < {f,t} < m < top, logical order
    /// f < {bot,m,top} < t, negation swapping f and t.
    fn non_interlaced() -> AbstractBilattice {
        let info = crate::order::build_lattice(
            "info",
            &["bot", "f", "t", "m", "top"],
            &[("bot", "f"), ("bot", "t"), ("f", "m"), ("t", "m"), ("m", "top")],
        )
        .unwrap();
        let logic = crate::order::build_lattice(
            "logic",
            &["f", "bot", "m", "top", "t"],
            &[("f", "bot"), ("f", "m"), ("f", "top"), ("bot", "t"), ("m", "t"), ("top", "t")],
        )
        .unwrap();
        AbstractBilattice::from_orders(
            "pentagon",
            &info,
            &logic,
            &[("bot", "bot"), ("f", "t"), ("t", "f"), ("m", "m"), ("top", "top")],
        )
        .unwrap()
    }

    #[test]
    fn interlacing_is_not_implied_by_the_axioms() {
        let b = non_interlaced();
        assert!(b.check_axioms().passed());
        assert!(!b.is_interlaced().unwrap());
        assert!(matches!(
            b.twist_representation(),
            Err(BilatticeError::NotInterlaced(_))
        ));
    }

    #[test]
    fn representation_of_four_recovers_two() {
        let b = AbstractBilattice::from_twist(&four()).unwrap();
        let (core, map) = b.twist_representation().unwrap();
        assert_eq!(core.len(), 2);
        // Truth maps to (top, bottom), the contradictory value to (top, top).
        let tt_idx = b.element_names().iter().position(|e| e == "(1,0)").unwrap();
        let top_idx = b.element_names().iter().position(|e| e == "(1,1)").unwrap();
        assert_eq!(map[tt_idx], (core.top(), core.bottom()));
        assert_eq!(map[top_idx], (core.top(), core.top()));
    }

    #[test]
    fn representation_round_trips_through_the_twist() {
        for l in [two(), chain(3), square()] {
            let t = twist_construct(&l, &l);
            let b = AbstractBilattice::from_twist(&t).unwrap();
            let (core, _) = b.twist_representation().unwrap();
            let rebuilt = AbstractBilattice::from_twist(&twist_construct(&core, &core)).unwrap();
            assert!(
                find_isomorphism(&b.as_structure(), &rebuilt.as_structure()).is_some(),
                "round trip failed for {}",
                l.name()
            );
        }
    }

    #[test]
    fn representation_rejects_wrong_carrier_sizes() {
        // A three-element "bilattice" cannot square; use a chain with both
        // structures equal and identity negation. BI-3 fails first, so this
        // arrives as NotABilattice rather than a representation failure.
        let c = chain(3);
        let b = AbstractBilattice::from_orders(
            "c3",
            &c,
            &c,
            &[("0", "0"), ("1", "1"), ("2", "2")],
        )
        .unwrap();
        assert!(b.twist_representation().is_err());
    }

    #[test]
    fn eval_checks_arity_and_membership() {
        let t = four();
        assert!(matches!(
            bilattice_eval(&t, Connective::Not, &[(0, 0), (1, 1)]),
            Err(BilatticeError::BadArguments(_))
        ));
        assert!(matches!(
            bilattice_eval(&t, Connective::Meet, &[(0, 5), (0, 0)]),
            Err(BilatticeError::BadArguments(_))
        ));
        assert_eq!(
            bilattice_eval(&t, Connective::LogicLeq, &[t.ff(), t.tt()]).unwrap(),
            EvalValue::Bool(true)
        );
    }

    #[test]
    fn from_orders_rejects_mismatched_carriers() {
        let err = AbstractBilattice::from_orders("bad", &two(), &chain(3), &[]).unwrap_err();
        assert!(matches!(err, BilatticeError::BadArguments(_)));
        let _ = LatticeError::UnknownElement(String::new());
    }
}
