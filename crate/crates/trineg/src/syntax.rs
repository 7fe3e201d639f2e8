//! Concrete syntax for formulas with three negations.
//!
//! ASCII spellings: `!` contradictory, `#` opposite, `~` intermediary,
//! `&`, `|`, `->`. Unary negations bind tightest, then `&`, then `|`,
//! then `->` (right-associative); `&` and `|` are left-associative.
//! The Unicode glyphs `¬ ⌐ ∼ ∧ ∨ →` are accepted on input, never emitted.

use std::fmt;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Formula {
    Atom(String),
    ConNeg(Box<Formula>),
    OppNeg(Box<Formula>),
    IntNeg(Box<Formula>),
    And(Box<Formula>, Box<Formula>),
    Or(Box<Formula>, Box<Formula>),
    Implies(Box<Formula>, Box<Formula>),
}

impl Formula {
    pub fn atom(name: impl Into<String>) -> Formula {
        Formula::Atom(name.into())
    }

    pub fn con_neg(f: Formula) -> Formula {
        Formula::ConNeg(Box::new(f))
    }

    pub fn opp_neg(f: Formula) -> Formula {
        Formula::OppNeg(Box::new(f))
    }

    pub fn int_neg(f: Formula) -> Formula {
        Formula::IntNeg(Box::new(f))
    }

    pub fn and(a: Formula, b: Formula) -> Formula {
        Formula::And(Box::new(a), Box::new(b))
    }

    pub fn or(a: Formula, b: Formula) -> Formula {
        Formula::Or(Box::new(a), Box::new(b))
    }

    pub fn implies(a: Formula, b: Formula) -> Formula {
        Formula::Implies(Box::new(a), Box::new(b))
    }

    /// Atom names in sorted order, deduplicated.
    pub fn atoms(&self) -> Vec<String> {
        let mut out = Vec::new();
        self.collect_atoms(&mut out);
        out.sort();
        out.dedup();
        out
    }

    fn collect_atoms(&self, out: &mut Vec<String>) {
        match self {
            Formula::Atom(name) => out.push(name.clone()),
            Formula::ConNeg(f) | Formula::OppNeg(f) | Formula::IntNeg(f) => f.collect_atoms(out),
            Formula::And(a, b) | Formula::Or(a, b) | Formula::Implies(a, b) => {
                a.collect_atoms(out);
                b.collect_atoms(out);
            }
        }
    }

    /// Rewrites every contradictory negation `!G` into `#G | ~G`,
    /// bottom-up; the result contains no `ConNeg` node.
    pub fn expand_connegation(&self) -> Formula {
        match self {
            Formula::Atom(name) => Formula::Atom(name.clone()),
            Formula::ConNeg(f) => {
                let inner = f.expand_connegation();
                Formula::or(
                    Formula::opp_neg(inner.clone()),
                    Formula::int_neg(inner),
                )
            }
            Formula::OppNeg(f) => Formula::opp_neg(f.expand_connegation()),
            Formula::IntNeg(f) => Formula::int_neg(f.expand_connegation()),
            Formula::And(a, b) => Formula::and(a.expand_connegation(), b.expand_connegation()),
            Formula::Or(a, b) => Formula::or(a.expand_connegation(), b.expand_connegation()),
            Formula::Implies(a, b) => {
                Formula::implies(a.expand_connegation(), b.expand_connegation())
            }
        }
    }
}

const PREC_IMPLIES: u8 = 1;
const PREC_OR: u8 = 2;
const PREC_AND: u8 = 3;
const PREC_UNARY: u8 = 4;

fn precedence(f: &Formula) -> u8 {
    match f {
        Formula::Atom(_) => 5,
        Formula::ConNeg(_) | Formula::OppNeg(_) | Formula::IntNeg(_) => PREC_UNARY,
        Formula::And(..) => PREC_AND,
        Formula::Or(..) => PREC_OR,
        Formula::Implies(..) => PREC_IMPLIES,
    }
}

/// Minimal-parenthesis canonical text; `parse(render(f))` reproduces `f`.
pub fn render(f: &Formula) -> String {
    let mut out = String::new();
    write_formula(f, &mut out);
    out
}

fn write_child(child: &Formula, min: u8, out: &mut String) {
    if precedence(child) < min {
        out.push('(');
        write_formula(child, out);
        out.push(')');
    } else {
        write_formula(child, out);
    }
}

fn write_formula(f: &Formula, out: &mut String) {
    match f {
        Formula::Atom(name) => out.push_str(name),
        Formula::ConNeg(g) => {
            out.push('!');
            write_child(g, PREC_UNARY, out);
        }
        Formula::OppNeg(g) => {
            out.push('#');
            write_child(g, PREC_UNARY, out);
        }
        Formula::IntNeg(g) => {
            out.push('~');
            write_child(g, PREC_UNARY, out);
        }
        Formula::And(a, b) => {
            write_child(a, PREC_AND, out);
            out.push_str(" & ");
            write_child(b, PREC_AND + 1, out);
        }
        Formula::Or(a, b) => {
            write_child(a, PREC_OR, out);
            out.push_str(" | ");
            write_child(b, PREC_OR + 1, out);
        }
        Formula::Implies(a, b) => {
            write_child(a, PREC_IMPLIES + 1, out);
            out.push_str(" -> ");
            write_child(b, PREC_IMPLIES, out);
        }
    }
}

impl fmt::Display for Formula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&render(self))
    }
}

impl serde::Serialize for Formula {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.serialize_str(&render(self))
    }
}

impl<'de> serde::Deserialize<'de> for Formula {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let text = String::deserialize(deserializer)?;
        parse(&text).map_err(serde::de::Error::custom)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("syntax error at column {column}: found {found}, expected {}", expected.join(", "))]
pub struct ParseError {
    /// 1-based character column of the offending token.
    pub column: usize,
    pub found: String,
    pub expected: Vec<&'static str>,
}

#[derive(Debug, Clone, PartialEq)]
enum Token {
    Atom(String),
    Bang,
    Hash,
    Tilde,
    Amp,
    Pipe,
    Arrow,
    LParen,
    RParen,
}

impl Token {
    fn describe(&self) -> String {
        match self {
            Token::Atom(name) => format!("atom '{name}'"),
            Token::Bang => "'!'".into(),
            Token::Hash => "'#'".into(),
            Token::Tilde => "'~'".into(),
            Token::Amp => "'&'".into(),
            Token::Pipe => "'|'".into(),
            Token::Arrow => "'->'".into(),
            Token::LParen => "'('".into(),
            Token::RParen => "')'".into(),
        }
    }
}

fn lex(text: &str) -> Result<Vec<(Token, usize)>, ParseError> {
    let mut tokens = Vec::new();
    let chars: Vec<char> = text.chars().collect();
    let mut i = 0;
    while i < chars.len() {
        let col = i + 1;
        let c = chars[i];
        match c {
            ' ' | '\t' | '\r' | '\n' => i += 1,
            '!' | '¬' => {
                tokens.push((Token::Bang, col));
                i += 1;
            }
            '#' | '⌐' => {
                tokens.push((Token::Hash, col));
                i += 1;
            }
            '~' | '∼' => {
                tokens.push((Token::Tilde, col));
                i += 1;
            }
            '&' | '∧' => {
                tokens.push((Token::Amp, col));
                i += 1;
            }
            '|' | '∨' => {
                tokens.push((Token::Pipe, col));
                i += 1;
            }
            '→' => {
                tokens.push((Token::Arrow, col));
                i += 1;
            }
            '(' => {
                tokens.push((Token::LParen, col));
                i += 1;
            }
            ')' => {
                tokens.push((Token::RParen, col));
                i += 1;
            }
            '-' => {
                if chars.get(i + 1) == Some(&'>') {
                    tokens.push((Token::Arrow, col));
                    i += 2;
                } else {
                    return Err(ParseError {
                        column: col,
                        found: format!("'{c}'"),
                        expected: vec!["'->'"],
                    });
                }
            }
            c if c.is_ascii_alphabetic() => {
                let start = i;
                i += 1;
                while i < chars.len()
                    && (chars[i].is_ascii_alphanumeric() || chars[i] == '_')
                {
                    i += 1;
                }
                let name: String = chars[start..i].iter().collect();
                tokens.push((Token::Atom(name), col));
            }
            other => {
                return Err(ParseError {
                    column: col,
                    found: format!("'{other}'"),
                    expected: vec!["atom", "'!'", "'#'", "'~'", "'('"],
                });
            }
        }
    }
    Ok(tokens)
}

struct Parser {
    tokens: Vec<(Token, usize)>,
    pos: usize,
    end_column: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.pos).map(|(t, _)| t)
    }

    fn column(&self) -> usize {
        self.tokens
            .get(self.pos)
            .map(|&(_, c)| c)
            .unwrap_or(self.end_column)
    }

    fn found(&self) -> String {
        self.peek()
            .map(Token::describe)
            .unwrap_or_else(|| "end of input".into())
    }

    fn eat(&mut self, want: &Token, expected: &'static str) -> Result<(), ParseError> {
        if self.peek() == Some(want) {
            self.pos += 1;
            Ok(())
        } else {
            Err(ParseError {
                column: self.column(),
                found: self.found(),
                expected: vec![expected],
            })
        }
    }

    fn implies(&mut self) -> Result<Formula, ParseError> {
        let lhs = self.or()?;
        if self.peek() == Some(&Token::Arrow) {
            self.pos += 1;
            let rhs = self.implies()?;
            Ok(Formula::implies(lhs, rhs))
        } else {
            Ok(lhs)
        }
    }

    fn or(&mut self) -> Result<Formula, ParseError> {
        let mut lhs = self.and()?;
        while self.peek() == Some(&Token::Pipe) {
            self.pos += 1;
            let rhs = self.and()?;
            lhs = Formula::or(lhs, rhs);
        }
        Ok(lhs)
    }

    fn and(&mut self) -> Result<Formula, ParseError> {
        let mut lhs = self.unary()?;
        while self.peek() == Some(&Token::Amp) {
            self.pos += 1;
            let rhs = self.unary()?;
            lhs = Formula::and(lhs, rhs);
        }
        Ok(lhs)
    }

    fn unary(&mut self) -> Result<Formula, ParseError> {
        match self.peek() {
            Some(Token::Bang) => {
                self.pos += 1;
                Ok(Formula::con_neg(self.unary()?))
            }
            Some(Token::Hash) => {
                self.pos += 1;
                Ok(Formula::opp_neg(self.unary()?))
            }
            Some(Token::Tilde) => {
                self.pos += 1;
                Ok(Formula::int_neg(self.unary()?))
            }
            _ => self.primary(),
        }
    }

    fn primary(&mut self) -> Result<Formula, ParseError> {
        match self.peek().cloned() {
            Some(Token::Atom(name)) => {
                self.pos += 1;
                Ok(Formula::Atom(name))
            }
            Some(Token::LParen) => {
                self.pos += 1;
                let inner = self.implies()?;
                self.eat(&Token::RParen, "')'")?;
                Ok(inner)
            }
            _ => Err(ParseError {
                column: self.column(),
                found: self.found(),
                expected: vec!["atom", "'!'", "'#'", "'~'", "'('"],
            }),
        }
    }
}

/// Parses a formula; errors report a 1-based column and the expected tokens.
pub fn parse(text: &str) -> Result<Formula, ParseError> {
    let tokens = lex(text)?;
    let end_column = text.chars().count() + 1;
    let mut parser = Parser {
        tokens,
        pos: 0,
        end_column,
    };
    let formula = parser.implies()?;
    if parser.peek().is_some() {
        return Err(ParseError {
            column: parser.column(),
            found: parser.found(),
            expected: vec!["end of input"],
        });
    }
    Ok(formula)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn a(n: &str) -> Formula {
        Formula::atom(n)
    }

    #[test]
    fn parse_examples() {
        assert_eq!(
            parse("!(A & #A)").unwrap(),
            Formula::con_neg(Formula::and(a("A"), Formula::opp_neg(a("A"))))
        );
        assert_eq!(
            parse("A -> B -> C").unwrap(),
            Formula::implies(a("A"), Formula::implies(a("B"), a("C")))
        );
        assert_eq!(
            parse("~A | B & C").unwrap(),
            Formula::or(Formula::int_neg(a("A")), Formula::and(a("B"), a("C")))
        );
    }

    #[test]
    fn parse_unicode_aliases() {
        assert_eq!(parse("¬A ∧ ⌐B").unwrap(), parse("!A & #B").unwrap());
        assert_eq!(parse("∼A ∨ B").unwrap(), parse("~A | B").unwrap());
        assert_eq!(parse("A → B").unwrap(), parse("A -> B").unwrap());
    }

    #[test]
    fn and_or_left_associative() {
        assert_eq!(
            parse("A & B & C").unwrap(),
            Formula::and(Formula::and(a("A"), a("B")), a("C"))
        );
        assert_eq!(
            parse("A | B | C").unwrap(),
            Formula::or(Formula::or(a("A"), a("B")), a("C"))
        );
    }

    #[test]
    fn render_examples() {
        assert_eq!(render(&Formula::con_neg(a("A"))), "!A");
        assert_eq!(
            render(&Formula::implies(Formula::implies(a("A"), a("B")), a("C"))),
            "(A -> B) -> C"
        );
        assert_eq!(
            render(&Formula::and(a("A"), Formula::or(a("B"), a("C")))),
            "A & (B | C)"
        );
        assert_eq!(
            render(&Formula::or(a("A"), Formula::or(a("B"), a("C")))),
            "A | (B | C)"
        );
        assert_eq!(
            render(&Formula::int_neg(Formula::and(a("A"), a("B")))),
            "~(A & B)"
        );
    }

    #[test]
    fn parse_errors_carry_position() {
        let err = parse("A &").unwrap_err();
        assert_eq!(err.column, 4);
        assert_eq!(err.found, "end of input");

        let err = parse("(A").unwrap_err();
        assert_eq!(err.column, 3);

        let err = parse("A -> -> B").unwrap_err();
        assert_eq!(err.column, 6);

        let err = parse("A @ B").unwrap_err();
        assert_eq!(err.column, 3);

        let err = parse("1A").unwrap_err();
        assert_eq!(err.column, 1);

        assert!(parse("").is_err());
        assert!(parse("A B").is_err());
        assert!(parse("A - B").is_err());
    }

    #[test]
    fn atom_names() {
        assert_eq!(parse("abc_12").unwrap(), a("abc_12"));
        assert!(parse("_abc").is_err());
    }

    #[test]
    fn expand_connegation_examples() {
        assert_eq!(
            parse("!A").unwrap().expand_connegation(),
            parse("#A | ~A").unwrap()
        );
        assert_eq!(parse("A").unwrap().expand_connegation(), a("A"));
        assert_eq!(
            parse("!!A").unwrap().expand_connegation(),
            parse("#(#A | ~A) | ~(#A | ~A)").unwrap()
        );
    }

    #[test]
    fn expand_connegation_idempotent() {
        for text in ["!A", "!!A", "!(A & !B) -> !C | ~A", "#!A"] {
            let once = parse(text).unwrap().expand_connegation();
            assert_eq!(once.expand_connegation(), once);
        }
    }

    #[test]
    fn round_trip_handpicked() {
        for text in [
            "!(A & #A)",
            "A -> B -> C",
            "~A | B & C",
            "((A -> B) -> C) -> (B -> C)",
            "!#~A",
            "A & B & C | D",
        ] {
            let f = parse(text).unwrap();
            assert_eq!(parse(&render(&f)).unwrap(), f);
        }
    }
}
