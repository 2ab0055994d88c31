//! A big-step evaluator for casts over finite value universes.
//!
//! Every type in a configuration has a finite, enumerable value set:
//! ground values for refinements, total tables for function types, and
//! tagged ground values for the dynamic type. Because the universes are
//! finite, function values are literal tables and a cast's behaviour can
//! be checked by exhausting its inputs rather than by proof.
//!
//! Casting into a function type does nothing immediately; it wraps the
//! value, and an application unwraps it into an argument cast under the
//! negated label and a result cast under the original one. Casting into
//! the dynamic type tags the value with its ground shape (a carrier, or
//! "function"); projecting out checks the tag and then casts the payload
//! under the same label. A refinement cast is the only place a ground
//! value can fail: membership is decided right there and failure blames
//! the cast's label as written.

use thiserror::Error;

use super::{render_type, BlameLabel, Ty, TypeConfig};

/// Errors for terms the evaluator refuses to run. Blame is not an
/// error; it is a result.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TermError {
    /// Mismatched shapes outside a cast, a non-exhaustive table, or a
    /// cast between incompatible types.
    #[error("ill-formed term: {0}")]
    IllFormed(String),
}

/// The ground shape a dynamic tag records.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Shape {
    /// A base value of the named carrier.
    Carrier(usize),
    /// A function; the payload is cast to dyn-to-dyn first.
    Function,
}

/// A run-time value.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Value {
    /// A base value, identified by carrier and position.
    Ground { carrier: usize, value: usize },
    /// A function as a total table from domain values to result terms.
    Table { domain: Ty, rows: Vec<(Value, CastTerm)> },
    /// A function cast, waiting for an argument.
    Wrapped {
        target: Ty,
        source: Ty,
        label: BlameLabel,
        inner: Box<Value>,
    },
    /// A value injected into the dynamic type.
    Tagged { shape: Shape, inner: Box<Value> },
}

impl Value {
    /// A ground value by name.
    pub fn ground(cfg: &TypeConfig, name: &str) -> Result<Value, super::BlameError> {
        let (carrier, value) = cfg.value_by_name(name)?;
        Ok(Value::Ground { carrier, value })
    }

    /// Printable form: ground values by name, functions by kind.
    pub fn render(&self, cfg: &TypeConfig) -> String {
        match self {
            Value::Ground { carrier, value } => cfg.value_name(*carrier, *value).to_string(),
            Value::Table { domain, .. } => {
                format!("<function on {}>", render_type(cfg, domain))
            }
            Value::Wrapped { target, .. } => {
                format!("<function cast to {}>", render_type(cfg, target))
            }
            Value::Tagged { shape, inner } => match shape {
                Shape::Carrier(c) => format!(
                    "<dyn {}: {}>",
                    cfg.carriers[*c].name,
                    inner.render(cfg)
                ),
                Shape::Function => "<dyn function>".to_string(),
            },
        }
    }
}

/// A term to evaluate.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CastTerm {
    /// An already evaluated value.
    Value(Value),
    /// A function literal; rows must cover the domain's value set.
    FunTable { domain: Ty, rows: Vec<(Value, CastTerm)> },
    /// Application.
    App(Box<CastTerm>, Box<CastTerm>),
    /// A cast, target first.
    Cast {
        target: Ty,
        source: Ty,
        label: BlameLabel,
        body: Box<CastTerm>,
    },
}

impl CastTerm {
    /// A cast around a term.
    pub fn cast(target: Ty, source: Ty, label: BlameLabel, body: CastTerm) -> CastTerm {
        CastTerm::Cast {
            target,
            source,
            label,
            body: Box::new(body),
        }
    }

    /// An application.
    pub fn app(f: CastTerm, a: CastTerm) -> CastTerm {
        CastTerm::App(Box::new(f), Box::new(a))
    }
}

/// What evaluation produced: a value, or blame on a label.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Outcome {
    /// Normal termination.
    Result(Value),
    /// A cast failed and this label answers for it.
    Blame(BlameLabel),
}

/// Every value of a type, in a deterministic order. The dynamic type is
/// represented by its ground prototypes: one tagged value per carrier
/// element. Function types enumerate all total tables.
pub fn values_of(cfg: &TypeConfig, ty: &Ty) -> Vec<Value> {
    match ty {
        Ty::Dyn => {
            let mut out = Vec::new();
            for (ci, c) in cfg.carriers.iter().enumerate() {
                for vi in 0..c.values.len() {
                    out.push(Value::Tagged {
                        shape: Shape::Carrier(ci),
                        inner: Box::new(Value::Ground { carrier: ci, value: vi }),
                    });
                }
            }
            out
        }
        Ty::Refine(c, set) => set
            .iter()
            .map(|&v| Value::Ground { carrier: *c, value: v })
            .collect(),
        Ty::Fun(a, b) => {
            let args = values_of(cfg, a);
            let results = values_of(cfg, b);
            // All total tables: one choice of result per argument.
            let mut tables: Vec<Vec<(Value, CastTerm)>> = vec![Vec::new()];
            for arg in &args {
                let mut next = Vec::new();
                for t in &tables {
                    for r in &results {
                        let mut rows = t.clone();
                        rows.push((arg.clone(), CastTerm::Value(r.clone())));
                        next.push(rows);
                    }
                }
                tables = next;
            }
            tables
                .into_iter()
                .map(|rows| Value::Table { domain: (**a).clone(), rows })
                .collect()
        }
    }
}

/// Unwraps an evaluation step, propagating blame to the caller.
macro_rules! try_eval {
    ($step:expr) => {
        match $step? {
            Outcome::Result(v) => v,
            blame => return Ok(blame),
        }
    };
}

/// Runs a term to an outcome.
pub fn eval_cast(cfg: &TypeConfig, term: &CastTerm) -> Result<Outcome, TermError> {
    match term {
        CastTerm::Value(v) => Ok(Outcome::Result(v.clone())),
        CastTerm::FunTable { domain, rows } => {
            if matches!(domain, Ty::Fun(..)) {
                return Err(TermError::IllFormed(
                    "function-typed domains are not tabulated".to_string(),
                ));
            }
            let universe = values_of(cfg, domain);
            for v in &universe {
                if !rows.iter().any(|(k, _)| k == v) {
                    return Err(TermError::IllFormed(format!(
                        "table misses the domain value {}",
                        v.render(cfg)
                    )));
                }
            }
            if rows.len() != universe.len() {
                return Err(TermError::IllFormed(
                    "table has rows outside its domain".to_string(),
                ));
            }
            Ok(Outcome::Result(Value::Table {
                domain: domain.clone(),
                rows: rows.clone(),
            }))
        }
        CastTerm::App(f, a) => {
            let fv = try_eval!(eval_cast(cfg, f));
            let av = try_eval!(eval_cast(cfg, a));
            apply(cfg, fv, av)
        }
        CastTerm::Cast { target, source, label, body } => {
            let v = try_eval!(eval_cast(cfg, body));
            cast_value(cfg, target, source, label, v)
        }
    }
}

/// Applies a function value.
fn apply(cfg: &TypeConfig, fv: Value, av: Value) -> Result<Outcome, TermError> {
    match fv {
        Value::Table { rows, .. } => {
            let row = rows.iter().find(|(k, _)| *k == av);
            match row {
                Some((_, body)) => eval_cast(cfg, body),
                None => Err(TermError::IllFormed(format!(
                    "no table row for the argument {}",
                    av.render(cfg)
                ))),
            }
        }
        Value::Wrapped { target, source, label, inner } => {
            let (tdom, tcod) = match &target {
                Ty::Fun(a, b) => ((**a).clone(), (**b).clone()),
                _ => return Err(TermError::IllFormed("wrapped non-arrow".to_string())),
            };
            let (sdom, scod) = match &source {
                Ty::Fun(a, b) => ((**a).clone(), (**b).clone()),
                _ => return Err(TermError::IllFormed("wrapped non-arrow".to_string())),
            };
            // The argument crosses back into the source domain under the
            // negated label; the result comes out under the original.
            let arg = try_eval!(cast_value(cfg, &sdom, &tdom, &label.negate(), av));
            let out = try_eval!(apply(cfg, *inner, arg));
            cast_value(cfg, &tcod, &scod, &label, out)
        }
        other => Err(TermError::IllFormed(format!(
            "applied the non-function {}",
            other.render(cfg)
        ))),
    }
}

/// Casts a value from `source` to `target` under `label`.
fn cast_value(
    cfg: &TypeConfig,
    target: &Ty,
    source: &Ty,
    label: &BlameLabel,
    v: Value,
) -> Result<Outcome, TermError> {
    match (source, target) {
        // Injection into the dynamic type: tag the ground shape. A value
        // already dynamic stays as it is.
        (Ty::Dyn, Ty::Dyn) => Ok(Outcome::Result(v)),
        (Ty::Refine(c, _), Ty::Dyn) => {
            match &v {
                Value::Ground { carrier, .. } if carrier == c => {}
                _ => {
                    return Err(TermError::IllFormed(format!(
                        "{} is not a {} value",
                        v.render(cfg),
                        cfg.carriers[*c].name
                    )))
                }
            }
            Ok(Outcome::Result(Value::Tagged {
                shape: Shape::Carrier(*c),
                inner: Box::new(v),
            }))
        }
        (Ty::Fun(..), Ty::Dyn) => {
            // Functions round through the dyn-to-dyn shape first, so the
            // tag never has to remember the precise arrow.
            let bridge = Ty::fun(Ty::Dyn, Ty::Dyn);
            let wrapped = try_eval!(cast_value(cfg, &bridge, source, label, v));
            Ok(Outcome::Result(Value::Tagged {
                shape: Shape::Function,
                inner: Box::new(wrapped),
            }))
        }
        // Projection out of the dynamic type: check the tag, then cast
        // the payload under the same label.
        (Ty::Dyn, t) => {
            let (shape, inner) = match v {
                Value::Tagged { shape, inner } => (shape, inner),
                other => {
                    return Err(TermError::IllFormed(format!(
                        "{} was never injected into dyn",
                        other.render(cfg)
                    )))
                }
            };
            match (t, &shape) {
                (Ty::Refine(c, _), Shape::Carrier(d)) if c == d => {
                    cast_value(cfg, t, &Ty::base(cfg, *c), label, *inner)
                }
                (Ty::Fun(..), Shape::Function) => {
                    cast_value(cfg, t, &Ty::fun(Ty::Dyn, Ty::Dyn), label, *inner)
                }
                _ => Ok(Outcome::Blame(label.clone())),
            }
        }
        // The one place a ground value can fail: membership in the
        // target subset.
        (Ty::Refine(c, _), Ty::Refine(d, q)) => {
            if c != d {
                return Err(TermError::IllFormed(format!(
                    "cast between carriers {} and {}",
                    cfg.carriers[*c].name, cfg.carriers[*d].name
                )));
            }
            match &v {
                Value::Ground { carrier, value } if carrier == c => {
                    if q.contains(value) {
                        Ok(Outcome::Result(v))
                    } else {
                        Ok(Outcome::Blame(label.clone()))
                    }
                }
                _ => Err(TermError::IllFormed(format!(
                    "{} is not a {} value",
                    v.render(cfg),
                    cfg.carriers[*c].name
                ))),
            }
        }
        (Ty::Fun(..), Ty::Fun(..)) => match v {
            Value::Table { .. } | Value::Wrapped { .. } => Ok(Outcome::Result(Value::Wrapped {
                target: target.clone(),
                source: source.clone(),
                label: label.clone(),
                inner: Box::new(v),
            })),
            other => Err(TermError::IllFormed(format!(
                "{} is not a function",
                other.render(cfg)
            ))),
        },
        _ => Err(TermError::IllFormed(format!(
            "cast between incompatible shapes {} and {}",
            render_type(cfg, source),
            render_type(cfg, target)
        ))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn int_with_negative() -> TypeConfig {
        TypeConfig::new(vec![super::super::BaseCarrier::new(
            "int",
            &["-1", "0", "1", "2"],
        )])
    }

    fn label() -> BlameLabel {
        BlameLabel::positive("p")
    }

    #[test]
    fn a_full_carrier_cast_returns_the_value() {
        let cfg = int_with_negative();
        let t = CastTerm::cast(
            Ty::base(&cfg, 0),
            Ty::base(&cfg, 0),
            label(),
            CastTerm::Value(Value::ground(&cfg, "2").unwrap()),
        );
        assert_eq!(
            eval_cast(&cfg, &t).unwrap(),
            Outcome::Result(Value::ground(&cfg, "2").unwrap())
        );
    }

    #[test]
    fn a_failed_refinement_blames_the_cast_positively() {
        let cfg = int_with_negative();
        let nonneg = Ty::refine(&cfg, "int", &["0", "1", "2"]).unwrap();
        for (v, expect_blame) in [("-1", true), ("0", false), ("1", false), ("2", false)] {
            let t = CastTerm::cast(
                nonneg.clone(),
                Ty::base(&cfg, 0),
                label(),
                CastTerm::Value(Value::ground(&cfg, v).unwrap()),
            );
            let out = eval_cast(&cfg, &t).unwrap();
            if expect_blame {
                assert_eq!(out, Outcome::Blame(label()));
                if let Outcome::Blame(l) = out {
                    assert_eq!(l.describe(), "positive blame on p");
                }
            } else {
                assert_eq!(out, Outcome::Result(Value::ground(&cfg, v).unwrap()));
            }
        }
    }

    #[test]
    fn a_function_cast_rejects_bad_arguments_with_negative_blame() {
        let cfg = int_with_negative();
        let all = Ty::base(&cfg, 0);
        let nonneg = Ty::refine(&cfg, "int", &["0", "1", "2"]).unwrap();
        // The identity on nonnegative values, cast to a function on all
        // of int: the domain widens, so the argument check must blame
        // the context.
        let rows: Vec<(Value, CastTerm)> = values_of(&cfg, &nonneg)
            .into_iter()
            .map(|v| (v.clone(), CastTerm::Value(v)))
            .collect();
        let table = CastTerm::FunTable { domain: nonneg.clone(), rows };
        let widened = CastTerm::cast(
            Ty::fun(all.clone(), all.clone()),
            Ty::fun(nonneg.clone(), nonneg.clone()),
            label(),
            table,
        );
        let good = CastTerm::app(widened.clone(), CastTerm::Value(Value::ground(&cfg, "1").unwrap()));
        assert_eq!(
            eval_cast(&cfg, &good).unwrap(),
            Outcome::Result(Value::ground(&cfg, "1").unwrap())
        );
        let bad = CastTerm::app(widened, CastTerm::Value(Value::ground(&cfg, "-1").unwrap()));
        let out = eval_cast(&cfg, &bad).unwrap();
        assert_eq!(out, Outcome::Blame(label().negate()));
        if let Outcome::Blame(l) = out {
            assert_eq!(l.describe(), "negative blame on p");
        }
    }

    #[test]
    fn dyn_projection_checks_the_tag() {
        let cfg = TypeConfig::depth3_default();
        let int = Ty::base(&cfg, 0);
        let boolean = Ty::base(&cfg, 1);
        let through_dyn = |target: Ty, v: &str| {
            CastTerm::cast(
                target,
                Ty::Dyn,
                label(),
                CastTerm::cast(
                    Ty::Dyn,
                    int.clone(),
                    BlameLabel::positive("q"),
                    CastTerm::Value(Value::ground(&cfg, v).unwrap()),
                ),
            )
        };
        assert_eq!(
            eval_cast(&cfg, &through_dyn(int.clone(), "2")).unwrap(),
            Outcome::Result(Value::ground(&cfg, "2").unwrap())
        );
        // Wrong carrier: the projection's label answers, not the
        // injection's.
        assert_eq!(
            eval_cast(&cfg, &through_dyn(boolean, "2")).unwrap(),
            Outcome::Blame(label())
        );
        // A refined projection still checks membership.
        let evens = Ty::refine(&cfg, "int", &["0", "2"]).unwrap();
        assert_eq!(
            eval_cast(&cfg, &through_dyn(evens.clone(), "2")).unwrap(),
            Outcome::Result(Value::ground(&cfg, "2").unwrap())
        );
        assert_eq!(
            eval_cast(&cfg, &through_dyn(evens, "1")).unwrap(),
            Outcome::Blame(label())
        );
    }

    #[test]
    fn functions_survive_a_round_trip_through_dyn() {
        let cfg = TypeConfig::bool_only();
        let b = Ty::base(&cfg, 0);
        let not: Vec<(Value, CastTerm)> = vec![
            (
                Value::ground(&cfg, "tt").unwrap(),
                CastTerm::Value(Value::ground(&cfg, "ff").unwrap()),
            ),
            (
                Value::ground(&cfg, "ff").unwrap(),
                CastTerm::Value(Value::ground(&cfg, "tt").unwrap()),
            ),
        ];
        let arrow = Ty::fun(b.clone(), b.clone());
        let round = CastTerm::cast(
            arrow.clone(),
            Ty::Dyn,
            label(),
            CastTerm::cast(
                Ty::Dyn,
                arrow.clone(),
                label(),
                CastTerm::FunTable { domain: b.clone(), rows: not },
            ),
        );
        let applied = CastTerm::app(round, CastTerm::Value(Value::ground(&cfg, "tt").unwrap()));
        assert_eq!(
            eval_cast(&cfg, &applied).unwrap(),
            Outcome::Result(Value::ground(&cfg, "ff").unwrap())
        );
        // Projecting the same function at a base type trips the tag.
        let as_bool = CastTerm::cast(
            b.clone(),
            Ty::Dyn,
            label(),
            CastTerm::cast(
                Ty::Dyn,
                arrow,
                BlameLabel::positive("q"),
                CastTerm::FunTable {
                    domain: b.clone(),
                    rows: values_of(&cfg, &b)
                        .into_iter()
                        .map(|v| (v.clone(), CastTerm::Value(v)))
                        .collect(),
                },
            ),
        );
        assert_eq!(eval_cast(&cfg, &as_bool).unwrap(), Outcome::Blame(label()));
    }

    #[test]
    fn tables_must_cover_their_domain() {
        let cfg = TypeConfig::bool_only();
        let b = Ty::base(&cfg, 0);
        let partial = CastTerm::FunTable {
            domain: b,
            rows: vec![(
                Value::ground(&cfg, "tt").unwrap(),
                CastTerm::Value(Value::ground(&cfg, "tt").unwrap()),
            )],
        };
        assert!(matches!(
            eval_cast(&cfg, &partial),
            Err(TermError::IllFormed(_))
        ));
    }

    #[test]
    fn incompatible_casts_are_rejected_not_blamed() {
        let cfg = TypeConfig::depth3_default();
        let t = CastTerm::cast(
            Ty::base(&cfg, 1),
            Ty::base(&cfg, 0),
            label(),
            CastTerm::Value(Value::ground(&cfg, "0").unwrap()),
        );
        assert!(matches!(eval_cast(&cfg, &t), Err(TermError::IllFormed(_))));
    }

    #[test]
    fn value_universes_have_the_expected_sizes() {
        let cfg = TypeConfig::depth3_default();
        assert_eq!(values_of(&cfg, &Ty::base(&cfg, 0)).len(), 4);
        assert_eq!(values_of(&cfg, &Ty::Dyn).len(), 6);
        let evens = Ty::refine(&cfg, "int", &["0", "2"]).unwrap();
        let arrow = Ty::fun(evens.clone(), Ty::base(&cfg, 1));
        // Two arguments, two results each: four total tables.
        assert_eq!(values_of(&cfg, &arrow).len(), 4);
        let empty = Ty::Refine(0, std::collections::BTreeSet::new());
        assert_eq!(values_of(&cfg, &Ty::fun(empty, evens)).len(), 1);
    }

    #[test]
    fn applying_a_ground_value_is_ill_formed() {
        let cfg = TypeConfig::bool_only();
        let t = CastTerm::app(
            CastTerm::Value(Value::ground(&cfg, "tt").unwrap()),
            CastTerm::Value(Value::ground(&cfg, "ff").unwrap()),
        );
        assert!(matches!(eval_cast(&cfg, &t), Err(TermError::IllFormed(_))));
    }
}
