//! Text forms for types, labels, and cast terms.
//!
//! Types use a small infix grammar: `dyn`, a bare carrier name, a
//! refinement `{int: 0,2}`, or an arrow `(int -> bool)`. Terms are
//! s-expressions: `(value 2)`, `(fun bool (tt -> (value ff)) (ff ->
//! (value tt)))`, `(app f a)`, and `(cast target source label body)`
//! with the cast's target written first. A label is a bare name, or the
//! name prefixed with `~` for its negation. Lines starting with `#` are
//! comments.

use super::eval::{CastTerm, Value};
use super::{BlameError, BlameLabel, Ty, TypeConfig};

#[derive(Debug, Clone, PartialEq, Eq)]
enum Token {
    Open,
    Close,
    BraceOpen,
    BraceClose,
    Colon,
    Comma,
    Arrow,
    Atom(String),
}

fn tokenize(text: &str) -> Result<Vec<Token>, BlameError> {
    let chars: Vec<char> = text.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        // An arrow may be glued to its neighbours; a leading minus that
        // is not an arrow starts an atom, so names like -1 still work.
        let arrow = c == '-' && chars.get(i + 1) == Some(&'>');
        match c {
            '(' | ')' | '{' | '}' | ':' | ',' => {
                out.push(match c {
                    '(' => Token::Open,
                    ')' => Token::Close,
                    '{' => Token::BraceOpen,
                    '}' => Token::BraceClose,
                    ':' => Token::Colon,
                    _ => Token::Comma,
                });
                i += 1;
            }
            _ if c.is_whitespace() => i += 1,
            _ if arrow => {
                out.push(Token::Arrow);
                i += 2;
            }
            _ => {
                let mut atom = String::new();
                while i < chars.len() {
                    let c = chars[i];
                    if c.is_whitespace() || "(){}:,".contains(c) {
                        break;
                    }
                    if c == '-' && chars.get(i + 1) == Some(&'>') {
                        break;
                    }
                    atom.push(c);
                    i += 1;
                }
                out.push(Token::Atom(atom));
            }
        }
    }
    Ok(out)
}

struct Cursor {
    tokens: Vec<Token>,
    at: usize,
}

impl Cursor {
    fn next(&mut self) -> Result<Token, BlameError> {
        let t = self
            .tokens
            .get(self.at)
            .cloned()
            .ok_or_else(|| BlameError::BadSyntax("unexpected end of input".to_string()))?;
        self.at += 1;
        Ok(t)
    }

    fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.at)
    }

    fn expect(&mut self, want: Token, what: &str) -> Result<(), BlameError> {
        let got = self.next()?;
        if got == want {
            Ok(())
        } else {
            Err(BlameError::BadSyntax(format!("expected {what}, got {got:?}")))
        }
    }

    fn atom(&mut self, what: &str) -> Result<String, BlameError> {
        match self.next()? {
            Token::Atom(a) => Ok(a),
            other => Err(BlameError::BadSyntax(format!(
                "expected {what}, got {other:?}"
            ))),
        }
    }

    fn done(&self) -> bool {
        self.at == self.tokens.len()
    }
}

fn strip_comments(text: &str) -> String {
    text.lines()
        .filter(|l| !l.trim_start().starts_with('#'))
        .collect::<Vec<_>>()
        .join("\n")
}

fn type_at(cfg: &TypeConfig, cur: &mut Cursor) -> Result<Ty, BlameError> {
    match cur.next()? {
        Token::Atom(a) if a == "dyn" => Ok(Ty::Dyn),
        Token::Atom(a) => {
            let c = cfg.carrier_index(&a)?;
            Ok(Ty::base(cfg, c))
        }
        Token::BraceOpen => {
            let carrier = cur.atom("a carrier name")?;
            cur.expect(Token::Colon, "a colon")?;
            let mut values = vec![cur.atom("a value name")?];
            while cur.peek() == Some(&Token::Comma) {
                cur.next()?;
                values.push(cur.atom("a value name")?);
            }
            cur.expect(Token::BraceClose, "a closing brace")?;
            let refs: Vec<&str> = values.iter().map(String::as_str).collect();
            Ty::refine(cfg, &carrier, &refs)
        }
        Token::Open => {
            let dom = type_at(cfg, cur)?;
            cur.expect(Token::Arrow, "an arrow")?;
            let cod = type_at(cfg, cur)?;
            cur.expect(Token::Close, "a closing paren")?;
            Ok(Ty::fun(dom, cod))
        }
        other => Err(BlameError::BadSyntax(format!(
            "expected a type, got {other:?}"
        ))),
    }
}

/// Parses a type expression.
pub fn parse_type(cfg: &TypeConfig, text: &str) -> Result<Ty, BlameError> {
    let mut cur = Cursor {
        tokens: tokenize(&strip_comments(text))?,
        at: 0,
    };
    let t = type_at(cfg, &mut cur)?;
    if cur.done() {
        Ok(t)
    } else {
        Err(BlameError::BadSyntax("trailing tokens after type".to_string()))
    }
}

/// Parses a label: a name, or `~name` for its negation.
pub fn parse_label(text: &str) -> Result<BlameLabel, BlameError> {
    let text = text.trim();
    if text.is_empty() || text == "~" {
        return Err(BlameError::BadSyntax("empty label".to_string()));
    }
    Ok(match text.strip_prefix('~') {
        Some(name) => BlameLabel::positive(name).negate(),
        None => BlameLabel::positive(text),
    })
}

fn term_at(cfg: &TypeConfig, cur: &mut Cursor) -> Result<CastTerm, BlameError> {
    cur.expect(Token::Open, "an opening paren")?;
    let head = cur.atom("a term head")?;
    let term = match head.as_str() {
        "value" => {
            let name = cur.atom("a value name")?;
            CastTerm::Value(Value::ground(cfg, &name)?)
        }
        "fun" => {
            let domain = type_at(cfg, cur)?;
            let mut rows = Vec::new();
            while cur.peek() == Some(&Token::Open) {
                cur.next()?;
                let key = cur.atom("a domain value")?;
                cur.expect(Token::Arrow, "an arrow")?;
                let body = term_at(cfg, cur)?;
                cur.expect(Token::Close, "a closing paren")?;
                rows.push((Value::ground(cfg, &key)?, body));
            }
            CastTerm::FunTable { domain, rows }
        }
        "app" => {
            let f = term_at(cfg, cur)?;
            let a = term_at(cfg, cur)?;
            CastTerm::app(f, a)
        }
        "cast" => {
            let target = type_at(cfg, cur)?;
            let source = type_at(cfg, cur)?;
            let label = parse_label(&cur.atom("a label")?)?;
            let body = term_at(cfg, cur)?;
            CastTerm::Cast {
                target,
                source,
                label,
                body: Box::new(body),
            }
        }
        other => {
            return Err(BlameError::BadSyntax(format!(
                "unknown term head {other}"
            )))
        }
    };
    cur.expect(Token::Close, "a closing paren")?;
    Ok(term)
}

/// Writes a term back in the grammar [`parse_term`] reads. Only terms
/// the parser can produce render; run-time values (tags, wrappers) have
/// no written form.
pub fn render_term(cfg: &TypeConfig, term: &CastTerm) -> String {
    let value_name = |v: &Value| -> String {
        match v {
            Value::Ground { carrier, value } => cfg.value_name(*carrier, *value).to_string(),
            other => panic!("no written form for {other:?}"),
        }
    };
    match term {
        CastTerm::Value(v) => format!("(value {})", value_name(v)),
        CastTerm::FunTable { domain, rows } => {
            let mut out = format!("(fun {}", crate::blame::render_type(cfg, domain));
            for (k, body) in rows {
                out.push_str(&format!(" ({} -> {})", value_name(k), render_term(cfg, body)));
            }
            out.push(')');
            out
        }
        CastTerm::App(f, a) => format!("(app {} {})", render_term(cfg, f), render_term(cfg, a)),
        CastTerm::Cast { target, source, label, body } => format!(
            "(cast {} {} {} {})",
            crate::blame::render_type(cfg, target),
            crate::blame::render_type(cfg, source),
            label.token(),
            render_term(cfg, body)
        ),
    }
}

/// Parses a term file: one s-expression, comments allowed.
pub fn parse_term(cfg: &TypeConfig, text: &str) -> Result<CastTerm, BlameError> {
    let mut cur = Cursor {
        tokens: tokenize(&strip_comments(text))?,
        at: 0,
    };
    let t = term_at(cfg, &mut cur)?;
    if cur.done() {
        Ok(t)
    } else {
        Err(BlameError::BadSyntax("trailing tokens after term".to_string()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::blame::eval::{eval_cast, Outcome};
    use crate::blame::render_type;

    #[test]
    fn types_round_trip_through_their_rendering() {
        let cfg = TypeConfig::depth3_default();
        for text in ["dyn", "int", "bool", "{int: 0,2}", "(int -> (dyn -> {bool: tt}))"] {
            let t = parse_type(&cfg, text).unwrap();
            assert_eq!(render_type(&cfg, &t), text);
            assert_eq!(parse_type(&cfg, &render_type(&cfg, &t)).unwrap(), t);
        }
    }

    #[test]
    fn arrows_need_no_surrounding_spaces() {
        let cfg = TypeConfig::depth3_default();
        assert_eq!(
            parse_type(&cfg, "(int->bool)").unwrap(),
            parse_type(&cfg, "(int -> bool)").unwrap()
        );
    }

    #[test]
    fn negative_values_are_not_arrows() {
        let cfg = TypeConfig::new(vec![crate::blame::BaseCarrier::new(
            "int",
            &["-1", "0", "1", "2"],
        )]);
        let t = parse_type(&cfg, "{int: -1,0}").unwrap();
        assert_eq!(render_type(&cfg, &t), "{int: -1,0}");
    }

    #[test]
    fn labels_parse_with_polarity() {
        assert_eq!(parse_label("p").unwrap(), BlameLabel::positive("p"));
        assert_eq!(parse_label("~p").unwrap(), BlameLabel::positive("p").negate());
        assert!(parse_label("~").is_err());
    }

    #[test]
    fn a_parsed_term_evaluates() {
        let cfg = TypeConfig::bool_only();
        let term = parse_term(
            &cfg,
            "# negation, applied through a cast\n\
             (app (cast (bool -> bool) (bool -> bool) p\n\
                  (fun bool (tt -> (value ff)) (ff -> (value tt))))\n\
                  (value tt))",
        )
        .unwrap();
        let out = eval_cast(&cfg, &term).unwrap();
        assert_eq!(
            out,
            Outcome::Result(Value::ground(&cfg, "ff").unwrap())
        );
    }

    #[test]
    fn a_parsed_refinement_cast_blames() {
        let cfg = TypeConfig::bool_only();
        let term = parse_term(&cfg, "(cast {bool: tt} bool q (value ff))").unwrap();
        assert_eq!(
            eval_cast(&cfg, &term).unwrap(),
            Outcome::Blame(BlameLabel::positive("q"))
        );
    }

    #[test]
    fn terms_round_trip_through_their_rendering() {
        let cfg = TypeConfig::bool_only();
        let text = "(app (cast (bool -> bool) (bool -> bool) ~q (fun bool (tt -> (value ff)) (ff -> (value tt)))) (value tt))";
        let term = parse_term(&cfg, text).unwrap();
        assert_eq!(render_term(&cfg, &term), text);
        assert_eq!(parse_term(&cfg, &render_term(&cfg, &term)).unwrap(), term);
    }

    #[test]
    fn syntax_errors_name_the_problem() {
        let cfg = TypeConfig::bool_only();
        assert!(matches!(
            parse_type(&cfg, "(bool ->"),
            Err(BlameError::BadSyntax(_))
        ));
        assert!(matches!(
            parse_term(&cfg, "(frob 1 2)"),
            Err(BlameError::BadSyntax(_))
        ));
        assert!(matches!(
            parse_type(&cfg, "bool bool"),
            Err(BlameError::BadSyntax(_))
        ));
    }
}
