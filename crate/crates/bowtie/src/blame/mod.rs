//! Gradual types over finite carriers, with blame tracking.
//!
//! Types are the dynamic type, refinements of a base carrier by an
//! explicit value subset, and function types. A bare base type is the
//! refinement by the full carrier and is normalized to it, so predicates
//! are plain finite sets and subtyping questions reduce to inclusions.
//!
//! Blame labels carry a polarity; negating twice returns the original
//! label. A cast failure blames its label as written, and reports read
//! the polarity out loud: blame on a negated label is negative blame on
//! the base name.
//!
//! The submodules split the work: [`subtype`] fixes the four subtyping
//! relations behind a swappable rule set, [`eval`] runs casts over finite
//! value universes, [`suites`] checks the decomposition equations and
//! blame safety exhaustively, and [`parse`] reads the small type and term
//! grammars used by the command line.

pub mod eval;
pub mod parse;
pub mod subtype;
pub mod suites;

use std::collections::BTreeSet;

use thiserror::Error;

/// Errors from type construction and parsing.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BlameError {
    /// A carrier or value name is not in the configuration.
    #[error("unknown name: {0}")]
    UnknownName(String),
    /// A refinement mentions values outside its carrier.
    #[error("ill-formed type: {0}")]
    IllFormedType(String),
    /// Type or term text did not parse.
    #[error("syntax error: {0}")]
    BadSyntax(String),
}

/// A finite base type: a name and its ordered value list.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BaseCarrier {
    /// Type name, unique in a configuration.
    pub name: String,
    /// Value names, unique within the carrier.
    pub values: Vec<String>,
}

impl BaseCarrier {
    /// Builds a carrier from name and values.
    pub fn new(name: &str, values: &[&str]) -> Self {
        assert!(!values.is_empty(), "carriers are non-empty");
        BaseCarrier {
            name: name.to_string(),
            values: values.iter().map(|v| v.to_string()).collect(),
        }
    }
}

/// The carriers and refinement predicates a run works over. Predicates
/// are the subsets available to the type enumerator; casts may mention
/// any subset, listed or not.
#[derive(Debug, Clone, PartialEq)]
pub struct TypeConfig {
    /// Base carriers, unique by name.
    pub carriers: Vec<BaseCarrier>,
    /// Enumerable refinements as (carrier index, value subset).
    pub predicates: Vec<(usize, BTreeSet<usize>)>,
}

impl TypeConfig {
    /// A configuration over the given carriers with the full-carrier
    /// predicate for each; more can be pushed onto `predicates`.
    pub fn new(carriers: Vec<BaseCarrier>) -> Self {
        let mut names = BTreeSet::new();
        for c in &carriers {
            assert!(names.insert(c.name.clone()), "carrier names are unique");
        }
        let predicates = carriers
            .iter()
            .enumerate()
            .map(|(i, c)| (i, (0..c.values.len()).collect()))
            .collect();
        TypeConfig { carriers, predicates }
    }

    /// Two carriers and five predicates: a small integer range with its
    /// positive and even subsets, and booleans with the truth singleton.
    pub fn depth3_default() -> Self {
        let mut cfg = TypeConfig::new(vec![
            BaseCarrier::new("int", &["0", "1", "2", "3"]),
            BaseCarrier::new("bool", &["tt", "ff"]),
        ]);
        cfg.predicates.push((0, [1, 2, 3].into_iter().collect()));
        cfg.predicates.push((0, [0, 2].into_iter().collect()));
        cfg.predicates.push((1, [0].into_iter().collect()));
        cfg
    }

    /// One carrier, all four boolean predicates (including the empty one).
    pub fn bool_only() -> Self {
        let mut cfg = TypeConfig::new(vec![BaseCarrier::new("bool", &["tt", "ff"])]);
        cfg.predicates.push((0, BTreeSet::new()));
        cfg.predicates.push((0, [0].into_iter().collect()));
        cfg.predicates.push((0, [1].into_iter().collect()));
        cfg
    }

    /// Carrier index by name.
    pub fn carrier_index(&self, name: &str) -> Result<usize, BlameError> {
        self.carriers
            .iter()
            .position(|c| c.name == name)
            .ok_or_else(|| BlameError::UnknownName(name.to_string()))
    }

    /// Resolves a value name, requiring it to be unique across carriers.
    pub fn value_by_name(&self, name: &str) -> Result<(usize, usize), BlameError> {
        let mut found = None;
        for (ci, c) in self.carriers.iter().enumerate() {
            if let Some(vi) = c.values.iter().position(|v| v == name) {
                if found.is_some() {
                    return Err(BlameError::UnknownName(format!("{name} is ambiguous")));
                }
                found = Some((ci, vi));
            }
        }
        found.ok_or_else(|| BlameError::UnknownName(name.to_string()))
    }

    /// Printable value name.
    pub fn value_name(&self, carrier: usize, value: usize) -> &str {
        &self.carriers[carrier].values[value]
    }
}

/// A type over a configuration. Base types are represented as refinements
/// by the full carrier.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Ty {
    /// The dynamic type.
    Dyn,
    /// Values of a carrier restricted to a subset.
    Refine(usize, BTreeSet<usize>),
    /// Functions, domain to codomain.
    Fun(Box<Ty>, Box<Ty>),
}

impl Ty {
    /// The base type of a carrier: the refinement by everything.
    pub fn base(cfg: &TypeConfig, carrier: usize) -> Ty {
        Ty::Refine(carrier, (0..cfg.carriers[carrier].values.len()).collect())
    }

    /// A refinement from value names.
    pub fn refine(cfg: &TypeConfig, carrier: &str, values: &[&str]) -> Result<Ty, BlameError> {
        let ci = cfg.carrier_index(carrier)?;
        let mut set = BTreeSet::new();
        for v in values {
            let vi = cfg.carriers[ci]
                .values
                .iter()
                .position(|w| w == v)
                .ok_or_else(|| {
                    BlameError::IllFormedType(format!("{v} is not a value of {carrier}"))
                })?;
            set.insert(vi);
        }
        Ok(Ty::Refine(ci, set))
    }

    /// A function type.
    pub fn fun(dom: Ty, cod: Ty) -> Ty {
        Ty::Fun(Box::new(dom), Box::new(cod))
    }

    /// Nesting depth: atoms are depth one, functions one past their
    /// deeper side.
    pub fn depth(&self) -> usize {
        match self {
            Ty::Dyn | Ty::Refine(..) => 1,
            Ty::Fun(a, b) => 1 + a.depth().max(b.depth()),
        }
    }
}

/// Renders a type in the command-line grammar. Full-carrier refinements
/// print as the bare carrier name.
pub fn render_type(cfg: &TypeConfig, t: &Ty) -> String {
    match t {
        Ty::Dyn => "dyn".to_string(),
        Ty::Refine(c, set) => {
            let carrier = &cfg.carriers[*c];
            if set.len() == carrier.values.len() {
                carrier.name.clone()
            } else {
                let values: Vec<&str> = set.iter().map(|&v| carrier.values[v].as_str()).collect();
                format!("{{{}: {}}}", carrier.name, values.join(","))
            }
        }
        Ty::Fun(a, b) => format!("({} -> {})", render_type(cfg, a), render_type(cfg, b)),
    }
}

/// A blame label: a base name and a polarity.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BlameLabel {
    /// Base name, without polarity.
    pub name: String,
    /// True for the label as written, false for its negation.
    pub positive: bool,
}

impl BlameLabel {
    /// A positive label.
    pub fn positive(name: &str) -> Self {
        BlameLabel {
            name: name.to_string(),
            positive: true,
        }
    }

    /// The same label with opposite polarity.
    pub fn negate(&self) -> Self {
        BlameLabel {
            name: self.name.clone(),
            positive: !self.positive,
        }
    }

    /// Spoken form: `positive blame on p` or `negative blame on p`.
    pub fn describe(&self) -> String {
        if self.positive {
            format!("positive blame on {}", self.name)
        } else {
            format!("negative blame on {}", self.name)
        }
    }

    /// Written form: `p`, or `~p` for the negation.
    pub fn token(&self) -> String {
        if self.positive {
            self.name.clone()
        } else {
            format!("~{}", self.name)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn base_types_normalize_to_full_refinements() {
        let cfg = TypeConfig::depth3_default();
        let int = Ty::base(&cfg, 0);
        assert_eq!(int, Ty::Refine(0, [0, 1, 2, 3].into_iter().collect()));
        assert_eq!(render_type(&cfg, &int), "int");
    }

    #[test]
    fn proper_refinements_render_their_values() {
        let cfg = TypeConfig::depth3_default();
        let evens = Ty::refine(&cfg, "int", &["0", "2"]).unwrap();
        assert_eq!(render_type(&cfg, &evens), "{int: 0,2}");
        let arrow = Ty::fun(evens, Ty::Dyn);
        assert_eq!(render_type(&cfg, &arrow), "({int: 0,2} -> dyn)");
    }

    #[test]
    fn refinements_reject_foreign_values() {
        let cfg = TypeConfig::depth3_default();
        assert!(matches!(
            Ty::refine(&cfg, "int", &["tt"]),
            Err(BlameError::IllFormedType(_))
        ));
        assert!(matches!(
            Ty::refine(&cfg, "float", &["0"]),
            Err(BlameError::UnknownName(_))
        ));
    }

    #[test]
    fn label_negation_is_an_involution() {
        let p = BlameLabel::positive("p");
        assert_eq!(p.negate().negate(), p);
        assert_eq!(p.negate().describe(), "negative blame on p");
        assert_eq!(p.describe(), "positive blame on p");
    }

    #[test]
    fn value_lookup_requires_a_unique_name() {
        let cfg = TypeConfig::depth3_default();
        assert_eq!(cfg.value_by_name("tt").unwrap(), (1, 0));
        assert_eq!(cfg.value_by_name("3").unwrap(), (0, 3));
        assert!(cfg.value_by_name("zz").is_err());
        let clash = TypeConfig::new(vec![
            BaseCarrier::new("a", &["x"]),
            BaseCarrier::new("b", &["x"]),
        ]);
        assert!(clash.value_by_name("x").is_err());
    }

    #[test]
    fn depth_counts_function_nesting() {
        let cfg = TypeConfig::bool_only();
        let b = Ty::base(&cfg, 0);
        assert_eq!(b.depth(), 1);
        assert_eq!(Ty::fun(b.clone(), b.clone()).depth(), 2);
        assert_eq!(Ty::fun(Ty::fun(b.clone(), b.clone()), b).depth(), 3);
    }
}
