//! The acceptance suite: one test per exit criterion, each printing a
//! single `acceptance NN name: PASS/FAIL` verdict line before asserting.
//!
//! Every check in here is exhaustive over its finite fixture family, and
//! each criterion stays well under a minute. Oracles are independent of
//! the code under test wherever the claim allows it: hand-entered truth
//! tables, literal counterexamples, and mutated structures that suites
//! must reject.

use std::collections::BTreeSet;
use std::time::Instant;

use bowtie::bilattice::{check_residuation, twist_construct, AbstractBilattice, Pair};
use bowtie::blame::eval::{eval_cast, values_of, CastTerm, Outcome};
use bowtie::blame::subtype::{CanonicalRules, Rel, SubtypeRules};
use bowtie::blame::suites::{blame_safety_suite, check_decomposition, check_decomposition_with};
use bowtie::blame::{BaseCarrier, Ty, TypeConfig};
use bowtie::chu::{
    chu_carrier, de_morgan_witness, verify_chu_identities, verify_closure,
    verify_term_definability, CanonicalLinear, ChuModel, LinearEval,
};
use bowtie::dframe::formula::axiom_suite;
use bowtie::dframe::ndframe::{
    check_ndframe, identity_ndframe, injection_from_ndframe, ndframe_from_bispace,
    ndframe_from_injection, NdFrame,
};
use bowtie::dframe::partial::{dframe_from_partial, partial_frame, prec_suite};
use bowtie::dframe::{
    bitop_space, canonical_relations, check_dframe, dframe_from_bispace, dframes_isomorphic,
    BitopSpace, DFrame, RelationKind,
};
use bowtie::lvar::{determinism_check, freely_add_order, simulate, Op, Schedule, ThresholdSet};
use bowtie::order::fixtures::{chain, square, two, two_by_three};
use bowtie::order::{find_isomorphism, FiniteLattice, LatticeMap, Structure};
use bowtie::Report;

/// Runs one criterion body and prints its verdict line. The body returns
/// the list of failure descriptions; construction errors count as
/// failures rather than panicking past the verdict.
fn criterion(number: usize, name: &str, body: impl FnOnce() -> Result<Vec<String>, String>) {
    let failures = match body() {
        Ok(list) => list,
        Err(e) => vec![e],
    };
    let pass = failures.is_empty();
    println!(
        "acceptance {number:02} {name}: {}",
        if pass { "PASS" } else { "FAIL" }
    );
    assert!(pass, "criterion {number} failed:\n{}", failures.join("\n"));
}

/// The symmetric distributive twist components every bilattice criterion
/// ranges over.
fn twist_components() -> Vec<FiniteLattice> {
    vec![two(), chain(3), chain(4), square()]
}

/// The Heyting algebras the Chu criteria range over.
fn heyting_fixtures() -> Vec<FiniteLattice> {
    vec![two(), chain(3), chain(4), chain(5), square(), two_by_three()]
}

/// Bitopological spaces with at most three points.
fn bispace_fixtures() -> Vec<BitopSpace> {
    vec![
        bitop_space("point", &["p"], &[&[], &["p"]], &[&[], &["p"]]).expect("valid"),
        bitop_space(
            "skew",
            &["x", "y"],
            &[&[], &["x"], &["x", "y"]],
            &[&[], &["x", "y"]],
        )
        .expect("valid"),
        bitop_space(
            "steps",
            &["x", "y", "z"],
            &[&[], &["x"], &["x", "y"], &["x", "y", "z"]],
            &[&[], &["z"], &["y", "z"], &["x", "y", "z"]],
        )
        .expect("valid"),
    ]
}

/// Canonical twist and trivial d-frames over the lattice fixtures, plus
/// the bispace-derived ones.
fn dframe_fixtures() -> Vec<DFrame> {
    let mut out = Vec::new();
    for l in twist_components() {
        out.push(canonical_relations(&l, &l, RelationKind::Twist).expect("symmetric"));
        out.push(canonical_relations(&l, &l, RelationKind::Trivial).expect("symmetric"));
    }
    out.push(canonical_relations(&two(), &chain(3), RelationKind::Trivial).expect("any pair"));
    for s in bispace_fixtures() {
        out.push(dframe_from_bispace(&s));
    }
    out
}

fn two_into_three() -> LatticeMap {
    LatticeMap::from_pairs(two(), chain(3), &[("0", "0"), ("1", "2")]).expect("embedding")
}

fn diagonal_two_into_square() -> LatticeMap {
    LatticeMap::from_pairs(two(), square(), &[("0", "(0,0)"), ("1", "(1,1)")]).expect("embedding")
}

fn three_into_four() -> LatticeMap {
    LatticeMap::from_pairs(chain(3), chain(4), &[("0", "0"), ("1", "1"), ("2", "3")])
        .expect("embedding")
}

/// Identity twists and injection-built frames: the nd-frame family with
/// p after m the identity.
fn pm_identity_ndframes() -> Vec<NdFrame> {
    let mut out: Vec<NdFrame> = twist_components().iter().map(identity_ndframe).collect();
    out.push(ndframe_from_injection(&two_into_three()).expect("lawful"));
    out.push(ndframe_from_injection(&diagonal_two_into_square()).expect("lawful"));
    out
}

#[test]
fn acceptance_01_four_equivalence() {
    criterion(1, "four-equivalence", || {
        // Hand-entered four-valued structure in the order bot, f, t, top:
        // information meet and join, logical conjunction and disjunction,
        // and the negation fixing both bot and top while swapping f and t.
        // Entered from the two written orders, not computed.
        let (bot, f, t, top) = (0usize, 1usize, 2usize, 3usize);
        #[rustfmt::skip]
        let meet = vec![
            bot, bot, bot, bot,
            bot, f,   bot, f,
            bot, bot, t,   t,
            bot, f,   t,   top,
        ];
        #[rustfmt::skip]
        let join = vec![
            bot, f,   t,   top,
            f,   f,   top, top,
            t,   top, t,   top,
            top, top, top, top,
        ];
        #[rustfmt::skip]
        let and = vec![
            bot, f, bot, f,
            f,   f, f,   f,
            bot, f, t,   top,
            f,   f, top, top,
        ];
        #[rustfmt::skip]
        let or = vec![
            bot, bot, t, t,
            bot, f,   t, top,
            t,   t,   t, t,
            t,   top, t, top,
        ];
        let not = vec![bot, t, f, top];
        let hand = Structure::new(4)
            .with_binary("meet", meet)
            .with_binary("join", join)
            .with_binary("and", and)
            .with_binary("or", or)
            .with_unary("not", not);

        let twist = twist_construct(&two(), &two());
        let pairs = twist.pairs();
        let slot = |p: Pair| pairs.iter().position(|&q| q == p).unwrap();
        let mut meet2 = Vec::new();
        let mut join2 = Vec::new();
        let mut and2 = Vec::new();
        let mut or2 = Vec::new();
        let mut not2 = Vec::new();
        for &x in &pairs {
            not2.push(slot(twist.not(x).map_err(|e| e.to_string())?));
            for &y in &pairs {
                meet2.push(slot(twist.meet(x, y)));
                join2.push(slot(twist.join(x, y)));
                and2.push(slot(twist.and(x, y)));
                or2.push(slot(twist.or(x, y)));
            }
        }
        let built = Structure::new(4)
            .with_binary("meet", meet2)
            .with_binary("join", join2)
            .with_binary("and", and2)
            .with_binary("or", or2)
            .with_unary("not", not2);

        let mut failures = Vec::new();
        if find_isomorphism(&hand, &built).is_none() {
            failures.push("no isomorphism between the hand table and the twist".to_string());
        }
        Ok(failures)
    });
}

#[test]
fn acceptance_02_representation_round_trip() {
    criterion(2, "representation-round-trip", || {
        let mut failures = Vec::new();
        for l in twist_components() {
            let t = twist_construct(&l, &l);
            let b = AbstractBilattice::from_twist(&t).map_err(|e| e.to_string())?;
            if b.len() > 16 {
                failures.push(format!("{} exceeds the size cap", b.name()));
                continue;
            }
            let (component, _) = b.twist_representation().map_err(|e| e.to_string())?;
            let rebuilt = AbstractBilattice::from_twist(&twist_construct(&component, &component))
                .map_err(|e| e.to_string())?;
            if find_isomorphism(&b.as_structure(), &rebuilt.as_structure()).is_none() {
                failures.push(format!("{} does not round-trip", b.name()));
            }
        }
        Ok(failures)
    });
}

#[test]
fn acceptance_03_residuation() {
    criterion(3, "residuation", || {
        let mut failures = Vec::new();
        for l in twist_components() {
            let t = twist_construct(&l, &l);
            let report = check_residuation(&t).map_err(|e| e.to_string())?;
            if !report.passed() {
                failures.push(format!(
                    "{}: {}",
                    l.name(),
                    report.first_failure().expect("failed report").name
                ));
            }
        }
        Ok(failures)
    });
}

/// Collects the failing entry names of a report under a fixture label.
fn collect_failures(failures: &mut Vec<String>, label: &str, report: &Report) {
    for e in &report.entries {
        if !e.passed {
            failures.push(format!("{label}: {}", e.name));
        }
    }
}

#[test]
fn acceptance_04_term_definability() {
    criterion(4, "term-definability", || {
        let mut failures = Vec::new();
        for h in heyting_fixtures() {
            let m = chu_carrier(&h).map_err(|e| e.to_string())?;
            let eval = CanonicalLinear(&m);
            let definability = verify_term_definability(&eval);
            let identities = verify_chu_identities(&eval);
            let defined = definability
                .entries
                .iter()
                .filter(|e| e.kind == bowtie::report::EntryKind::Check)
                .count();
            let sides = identities
                .entries
                .iter()
                .filter(|e| e.kind == bowtie::report::EntryKind::Check)
                .count();
            if defined != 8 {
                failures.push(format!("{}: expected 8 identities, saw {defined}", h.name()));
            }
            if sides != 7 {
                failures.push(format!("{}: expected 7 side identities, saw {sides}", h.name()));
            }
            collect_failures(&mut failures, h.name(), &definability);
            collect_failures(&mut failures, h.name(), &identities);
            if let Some(w) = de_morgan_witness(&eval) {
                failures.push(format!("{}: de morgan duality fails {w}", h.name()));
            }
        }
        Ok(failures)
    });
}

#[test]
fn acceptance_05_chu_closure() {
    criterion(5, "chu-closure", || {
        let mut failures = Vec::new();
        for h in heyting_fixtures() {
            let m = chu_carrier(&h).map_err(|e| e.to_string())?;
            collect_failures(&mut failures, h.name(), &verify_closure(&CanonicalLinear(&m)));
        }
        Ok(failures)
    });
}

#[test]
fn acceptance_06_dframe_axioms() {
    criterion(6, "dframe-axioms", || {
        let mut failures = Vec::new();
        for d in dframe_fixtures() {
            collect_failures(&mut failures, &d.name.clone(), &check_dframe(&d));
        }

        // The deliberately broken frame: falsity dropped from con must be
        // caught by the first axiom, by name.
        let mut broken = canonical_relations(&two(), &two(), RelationKind::Twist)
            .map_err(|e| e.to_string())?;
        let ff = broken.ff();
        let idx = ff.0 * broken.minus.len() + ff.1;
        broken.con[idx] = false;
        let report = check_dframe(&broken);
        match report.first_failure() {
            None => failures.push("the broken frame passed".to_string()),
            Some(e) if e.name == "axiom1-con-contains-constants" => {}
            Some(e) => failures.push(format!("broken frame failed as {} instead", e.name)),
        }
        Ok(failures)
    });
}

#[test]
fn acceptance_07_implication_theorems() {
    criterion(7, "implication-theorems", || {
        let mut failures = Vec::new();
        for n in pm_identity_ndframes() {
            let label = n.base.name.clone();
            collect_failures(&mut failures, &label, &check_ndframe(&n));
            let suite = axiom_suite(&n).map_err(|e| e.to_string())?;
            if !suite.entries.iter().any(|e| e.name == "modus-ponens-sound") {
                failures.push(format!("{label}: modus ponens missing from the suite"));
            }
            collect_failures(&mut failures, &label, &suite);
        }
        Ok(failures)
    });
}

#[test]
fn acceptance_08_star_equivalences() {
    criterion(8, "star-equivalences", || {
        let mut failures = Vec::new();
        let mut family = pm_identity_ndframes();
        family.push(ndframe_from_bispace(&bispace_fixtures()[1]));

        let mut pm_seen = BTreeSet::new();
        let mut joins_seen = BTreeSet::new();
        let mut boolean_seen = BTreeSet::new();
        for n in &family {
            let label = n.base.name.clone();
            pm_seen.insert(n.pm_is_identity());
            joins_seen.insert(n.p_preserves_joins());
            boolean_seen.insert(n.base.plus.is_boolean());
            let suite = axiom_suite(n).map_err(|e| e.to_string())?;
            for iff in [
                "negation-strengthening-iff-pm-identity",
                "de-morgan-strengthening-iff-p-join-preserving",
                "peirce-iff-plus-boolean",
            ] {
                if !suite.entries.iter().any(|e| e.name == iff) {
                    failures.push(format!("{label}: {iff} missing"));
                }
            }
            collect_failures(&mut failures, &label, &suite);
        }
        // Both directions of each biconditional must actually occur in
        // the family, or the equivalences are vacuous.
        if pm_seen.len() != 2 {
            failures.push("family does not cover both p-after-m outcomes".to_string());
        }
        if joins_seen.len() != 2 {
            failures.push("family does not cover both join-preservation outcomes".to_string());
        }
        if boolean_seen.len() != 2 {
            failures.push("family does not cover Boolean and non-Boolean sides".to_string());
        }
        Ok(failures)
    });
}

#[test]
fn acceptance_09_injection_round_trip() {
    criterion(9, "injection-round-trip", || {
        let mut failures = Vec::new();
        for map in [two_into_three(), diagonal_two_into_square(), three_into_four()] {
            let label = format!("{} into {}", map.source.name(), map.target.name());
            let n = ndframe_from_injection(&map).map_err(|e| e.to_string())?;
            let back = injection_from_ndframe(&n).map_err(|e| e.to_string())?;
            if back.table != map.table {
                failures.push(format!("{label}: recovered map differs"));
            }
            let again = ndframe_from_injection(&back).map_err(|e| e.to_string())?;
            if let Some(diff) = n.literal_diff(&again) {
                failures.push(format!("{label}: {diff}"));
            }
        }
        // Identity frames are also p-after-m-identity members and must
        // round-trip through the identity injection.
        for l in twist_components() {
            let n = identity_ndframe(&l);
            let back = injection_from_ndframe(&n).map_err(|e| e.to_string())?;
            let expected: Vec<usize> = (0..l.len()).collect();
            if back.table != expected {
                failures.push(format!("identity over {} recovers a non-identity", l.name()));
            }
            let again = ndframe_from_injection(&back).map_err(|e| e.to_string())?;
            if let Some(diff) = n.literal_diff(&again) {
                failures.push(format!("identity over {}: {diff}", l.name()));
            }
        }
        Ok(failures)
    });
}

#[test]
fn acceptance_10_partial_frame_round_trip() {
    criterion(10, "partial-frame-round-trip", || {
        let mut failures = Vec::new();
        for d in dframe_fixtures() {
            let rebuilt = dframe_from_partial(&partial_frame(&d));
            if !dframes_isomorphic(&d, &rebuilt) {
                failures.push(format!("{}: rebuilt frame not isomorphic", d.name));
            }
        }
        let mut family = pm_identity_ndframes();
        family.push(ndframe_from_bispace(&bispace_fixtures()[1]));
        for n in &family {
            let suite = prec_suite(n).map_err(|e| e.to_string())?;
            collect_failures(&mut failures, &n.base.name.clone(), &suite);
        }
        Ok(failures)
    });
}

#[test]
fn acceptance_11_blame_decomposition() {
    criterion(11, "blame-decomposition", || {
        let started = Instant::now();
        let report = check_decomposition(&TypeConfig::depth3_default(), 3);
        let elapsed = started.elapsed();
        let note = |name: &str| {
            report
                .entries
                .iter()
                .find(|e| e.name == name)
                .and_then(|e| e.witness.clone())
                .unwrap_or_default()
        };
        println!(
            "  criterion 11 enumeration: {} types, {} ordered pairs, {:.2}s",
            note("types-enumerated"),
            note("pairs-checked"),
            elapsed.as_secs_f64()
        );
        let mut failures = Vec::new();
        collect_failures(&mut failures, "depth 3", &report);
        Ok(failures)
    });
}

#[test]
fn acceptance_12_blame_safety() {
    criterion(12, "blame-safety", || {
        let mut failures = Vec::new();
        let report =
            blame_safety_suite(&TypeConfig::depth3_default(), 2).map_err(|e| e.to_string())?;
        collect_failures(&mut failures, "depth 2", &report);

        // The signed-integer refinement: casting into the non-negative
        // subset blames the cast positively on exactly the negative
        // value, and never blames the context.
        let mut cfg = TypeConfig::new(vec![BaseCarrier::new("int", &["-1", "0", "1", "2"])]);
        let nonneg: BTreeSet<usize> = [1, 2, 3].into();
        cfg.predicates.push((0, nonneg.clone()));
        let int = Ty::Refine(0, (0..4).collect());
        let target = Ty::Refine(0, nonneg);
        for value in values_of(&cfg, &int) {
            let is_negative_value = value.render(&cfg) == "-1";
            let term = CastTerm::cast(
                target.clone(),
                int.clone(),
                bowtie::blame::BlameLabel::positive("p"),
                CastTerm::Value(value),
            );
            match eval_cast(&cfg, &term).map_err(|e| e.to_string())? {
                Outcome::Result(_) if is_negative_value => {
                    failures.push("-1 slipped through the refinement".to_string());
                }
                Outcome::Blame(l) if !l.positive => {
                    failures.push("the refinement blamed its context".to_string());
                }
                Outcome::Blame(_) if !is_negative_value => {
                    failures.push("an in-subset value was blamed".to_string());
                }
                _ => {}
            }
        }
        Ok(failures)
    });
}

#[test]
fn acceptance_13_lvar_determinism() {
    criterion(13, "lvar-determinism", || {
        let mut failures = Vec::new();
        let lat = freely_add_order(&["3", "5", "7"]).map_err(|e| e.to_string())?;
        let idx = |name: &str| lat.element_index(name).expect("fixture value");
        let get = |names: &[&str]| -> Result<Op, String> {
            let elements: Vec<usize> = names.iter().map(|n| idx(n)).collect();
            Ok(Op::Get(
                ThresholdSet::new(&lat, &elements).map_err(|e| e.to_string())?,
            ))
        };

        let conflict = Schedule {
            threads: vec![vec![Op::Put(idx("3"))], vec![Op::Put(idx("5"))]],
        };
        let schedules = vec![
            ("conflict", conflict.clone()),
            (
                "threshold",
                Schedule {
                    threads: vec![vec![Op::Put(idx("3"))], vec![get(&["3", "5"])?]],
                },
            ),
            (
                "fan-in",
                Schedule {
                    threads: vec![
                        vec![Op::Put(idx("3")), Op::Put(idx("3"))],
                        vec![get(&["3", "5"])?],
                        vec![get(&["3", "5"])?],
                    ],
                },
            ),
            (
                "stuck-read",
                Schedule {
                    threads: vec![vec![Op::Put(idx("3"))], vec![get(&["5"])?]],
                },
            ),
            (
                // Every write carries the same value, so the store never
                // moves past it and every read answers the same way.
                "same-writer-fan",
                Schedule {
                    threads: vec![
                        vec![Op::Put(idx("3")), Op::Put(idx("3"))],
                        vec![Op::Put(idx("3"))],
                        vec![get(&["3", "5"])?],
                        vec![get(&["3", "5"])?],
                    ],
                },
            ),
            (
                // The threshold is reachable only at the top, so both
                // reads observe the conflict no matter the order.
                "conflict-fan",
                Schedule {
                    threads: vec![
                        vec![Op::Put(idx("3"))],
                        vec![Op::Put(idx("5"))],
                        vec![get(&["7"])?],
                        vec![get(&["7"])?],
                    ],
                },
            ),
        ];
        for (label, schedule) in &schedules {
            if schedule.op_count() > 10 {
                failures.push(format!("{label}: too many operations"));
                continue;
            }
            let interleavings = schedule.all_interleavings();
            if interleavings.len() > 5000 {
                failures.push(format!("{label}: {} interleavings", interleavings.len()));
                continue;
            }
            let report = determinism_check(&lat, schedule);
            collect_failures(&mut failures, label, &report);
        }

        // The two incomparable writes must conflict to the top in every
        // single interleaving, not merely agree.
        for order in conflict.all_interleavings() {
            let trace = simulate(&lat, &conflict, &order).map_err(|e| e.to_string())?;
            if trace.final_name != "top" || !trace.conflicted {
                failures.push(format!("conflict run {order:?} missed the top"));
            }
        }
        Ok(failures)
    });
}

/// The wrong-tensor mutant: multiplicative conjunction replaced by the
/// additive one.
struct WrongTensor<'a>(&'a ChuModel);

impl LinearEval for WrongTensor<'_> {
    fn model(&self) -> &ChuModel {
        self.0
    }

    fn tensor(&self, a: Pair, b: Pair) -> Pair {
        let h = self.model().heyting();
        (h.meet(a.0, b.0), h.join(a.1, b.1))
    }
}

/// The naive rule made contravariant in domains, like the standard rule.
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

#[test]
fn acceptance_14_negative_controls() {
    criterion(14, "negative-controls", || {
        let mut failures = Vec::new();

        let m = chu_carrier(&two()).map_err(|e| e.to_string())?;
        let report = verify_term_definability(&WrongTensor(&m));
        match report.first_failure() {
            Some(e) if e.name == "tensor-is-fusion" => {}
            Some(e) => failures.push(format!("wrong tensor misattributed to {}", e.name)),
            None => failures.push("wrong tensor went undetected".to_string()),
        }

        let report = check_decomposition_with(&TypeConfig::bool_only(), 2, &ContravariantNaive);
        match report.first_failure() {
            Some(e) if e.name == "naive-is-positive-with-negative-reversed" => {}
            Some(e) => failures.push(format!("contravariant naive misattributed to {}", e.name)),
            None => failures.push("contravariant naive went undetected".to_string()),
        }

        // A join that sticks at its left argument is not associative and
        // must surface as interleaving-dependent final values.
        let lat = freely_add_order(&["1", "2", "3"])
            .map_err(|e| e.to_string())?
            .override_join(|a, b| if a != 0 { a } else { b });
        let schedule = Schedule {
            threads: vec![
                vec![Op::Put(1)],
                vec![Op::Put(2)],
            ],
        };
        let report = determinism_check(&lat, &schedule);
        match report.first_failure() {
            Some(e) if e.name == "final-value-agrees" => {}
            Some(e) => failures.push(format!("broken join misattributed to {}", e.name)),
            None => failures.push("broken join went undetected".to_string()),
        }

        let mut broken = canonical_relations(&two(), &two(), RelationKind::Twist)
            .map_err(|e| e.to_string())?;
        let ff = broken.ff();
        broken.con[ff.0 * broken.minus.len() + ff.1] = false;
        match check_dframe(&broken).first_failure() {
            Some(e) if e.name.starts_with("axiom1") => {}
            Some(e) => failures.push(format!("broken con misattributed to {}", e.name)),
            None => failures.push("broken con went undetected".to_string()),
        }

        Ok(failures)
    });
}
