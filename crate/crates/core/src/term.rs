//! Loop words: single-letter variables, the constant `1`, and binary products.
//!
//! # Grammar
//!
//! ```text
//! term   := factor factor*
//! factor := 'a'..'z' | '1' | '(' term ')'
//! ```
//!
//! Juxtaposition is the product and associates to the left, so `xyz` reads as
//! `(xy)z` while `x(yz)` needs its parentheses. Whitespace is ignored. This
//! convention is a choice of this crate; identities written with every product
//! parenthesized parse the same under any convention.

use alloc::boxed::Box;
use alloc::string::String;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Term {
    Var(char),
    /// The identity element of a loop.
    One,
    Product(Box<Term>, Box<Term>),
}

impl Term {
    pub fn var(name: char) -> Term {
        debug_assert!(name.is_ascii_lowercase());
        Term::Var(name)
    }

    pub fn product(left: Term, right: Term) -> Term {
        Term::Product(Box::new(left), Box::new(right))
    }

    /// Number of variable and constant occurrences.
    pub fn leaves(&self) -> usize {
        match self {
            Term::Var(_) | Term::One => 1,
            Term::Product(l, r) => l.leaves() + r.leaves(),
        }
    }

    /// Variables in order of first occurrence.
    pub fn variables(&self) -> Vec<char> {
        let mut out = Vec::new();
        self.collect_variables(&mut out);
        out
    }

    pub(crate) fn collect_variables(&self, out: &mut Vec<char>) {
        match self {
            Term::Var(c) => {
                if !out.contains(c) {
                    out.push(*c);
                }
            }
            Term::One => {}
            Term::Product(l, r) => {
                l.collect_variables(out);
                r.collect_variables(out);
            }
        }
    }

    pub fn contains_one(&self) -> bool {
        match self {
            Term::Var(_) => false,
            Term::One => true,
            Term::Product(l, r) => l.contains_one() || r.contains_one(),
        }
    }

    /// Replaces every variable `c` by `f(c)`.
    pub fn rename(&self, f: &impl Fn(char) -> char) -> Term {
        match self {
            Term::Var(c) => Term::Var(f(*c)),
            Term::One => Term::One,
            Term::Product(l, r) => Term::product(l.rename(f), r.rename(f)),
        }
    }

    fn rank(&self) -> u8 {
        match self {
            Term::One => 0,
            Term::Var(_) => 1,
            Term::Product(..) => 2,
        }
    }
}

/// Terms are ordered by leaf count first, then structurally.
impl Ord for Term {
    fn cmp(&self, other: &Self) -> Ordering {
        self.leaves().cmp(&other.leaves()).then_with(|| match (self, other) {
            (Term::Var(a), Term::Var(b)) => a.cmp(b),
            (Term::Product(a, b), Term::Product(c, d)) => a.cmp(c).then_with(|| b.cmp(d)),
            _ => self.rank().cmp(&other.rank()),
        })
    }
}

impl PartialOrd for Term {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Term {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Term::Var(c) => write!(f, "{c}"),
            Term::One => f.write_str("1"),
            Term::Product(l, r) => {
                write!(f, "{l}")?;
                if matches!(**r, Term::Product(..)) {
                    write!(f, "({r})")
                } else {
                    write!(f, "{r}")
                }
            }
        }
    }
}

/// Renders `t` with the fewest parentheses the grammar allows.
pub fn print_term(t: &Term) -> String {
    alloc::format!("{t}")
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ParseErrorKind {
    Empty,
    IllegalChar(char),
    /// An opening parenthesis that is never closed.
    Unclosed,
    /// A closing parenthesis with no matching opener.
    Unmatched,
    EmptyGroup,
    MissingEquals,
    ExtraEquals,
}

/// A syntax error at a byte offset of the input.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ParseError {
    pub offset: usize,
    pub kind: ParseErrorKind,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let at = self.offset;
        match self.kind {
            ParseErrorKind::Empty => write!(f, "empty term at byte {at}"),
            ParseErrorKind::IllegalChar(c) => write!(f, "illegal character {c:?} at byte {at}"),
            ParseErrorKind::Unclosed => write!(f, "unclosed parenthesis at byte {at}"),
            ParseErrorKind::Unmatched => write!(f, "unmatched ')' at byte {at}"),
            ParseErrorKind::EmptyGroup => write!(f, "empty parentheses at byte {at}"),
            ParseErrorKind::MissingEquals => write!(f, "identity has no '='"),
            ParseErrorKind::ExtraEquals => write!(f, "second '=' at byte {at}"),
        }
    }
}

impl core::error::Error for ParseError {}

struct Parser<'a> {
    src: &'a str,
    pos: usize,
    base: usize,
}

impl Parser<'_> {
    fn peek(&mut self) -> Option<char> {
        let rest = &self.src[self.pos..];
        let trimmed = rest.trim_start();
        self.pos += rest.len() - trimmed.len();
        trimmed.chars().next()
    }

    fn error(&self, kind: ParseErrorKind) -> ParseError {
        ParseError { offset: self.base + self.pos, kind }
    }

    fn term(&mut self) -> Result<Term, ParseError> {
        let mut acc = match self.factor()? {
            Some(t) => t,
            None => return Err(self.error(ParseErrorKind::Empty)),
        };
        while let Some(next) = self.factor()? {
            acc = Term::product(acc, next);
        }
        Ok(acc)
    }

    /// `Ok(None)` at end of input or before a `)`.
    fn factor(&mut self) -> Result<Option<Term>, ParseError> {
        let Some(c) = self.peek() else { return Ok(None) };
        match c {
            'a'..='z' => {
                self.pos += 1;
                Ok(Some(Term::Var(c)))
            }
            '1' => {
                self.pos += 1;
                Ok(Some(Term::One))
            }
            '(' => {
                let open = self.pos;
                self.pos += 1;
                match self.peek() {
                    Some(')') => return Err(self.error(ParseErrorKind::EmptyGroup)),
                    None => {
                        return Err(ParseError { offset: self.base + open, kind: ParseErrorKind::Unclosed })
                    }
                    Some(_) => {}
                }
                let inner = self.term()?;
                if self.peek() != Some(')') {
                    return Err(ParseError { offset: self.base + open, kind: ParseErrorKind::Unclosed });
                }
                self.pos += 1;
                Ok(Some(inner))
            }
            ')' => Ok(None),
            other => Err(self.error(ParseErrorKind::IllegalChar(other))),
        }
    }
}

fn parse_at(src: &str, base: usize) -> Result<Term, ParseError> {
    let mut p = Parser { src, pos: 0, base };
    let t = p.term()?;
    match p.peek() {
        None => Ok(t),
        Some(')') => Err(p.error(ParseErrorKind::Unmatched)),
        Some(c) => Err(p.error(ParseErrorKind::IllegalChar(c))),
    }
}

/// Parses a single loop word.
pub fn parse_term(text: &str) -> Result<Term, ParseError> {
    parse_at(text, 0)
}

/// An equation between two terms.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Identity {
    pub lhs: Term,
    pub rhs: Term,
    variables: Vec<char>,
}

impl Identity {
    pub fn new(lhs: Term, rhs: Term) -> Identity {
        let mut variables = lhs.variables();
        rhs.collect_variables(&mut variables);
        Identity { lhs, rhs, variables }
    }

    /// Variables of both sides in first-occurrence order, left side first.
    pub fn variables(&self) -> &[char] {
        &self.variables
    }

    pub fn uses_one(&self) -> bool {
        self.lhs.contains_one() || self.rhs.contains_one()
    }

    pub fn leaves(&self) -> usize {
        self.lhs.leaves() + self.rhs.leaves()
    }
}

impl fmt::Display for Identity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}={}", self.lhs, self.rhs)
    }
}

/// Parses `lhs = rhs`.
pub fn parse_identity(text: &str) -> Result<Identity, ParseError> {
    let mut eqs = text.match_indices('=').map(|(i, _)| i);
    let Some(eq) = eqs.next() else {
        return Err(ParseError { offset: text.len(), kind: ParseErrorKind::MissingEquals });
    };
    if let Some(second) = eqs.next() {
        return Err(ParseError { offset: second, kind: ParseErrorKind::ExtraEquals });
    }
    let lhs = parse_at(&text[..eq], 0)?;
    let rhs = parse_at(&text[eq + 1..], eq + 1)?;
    Ok(Identity::new(lhs, rhs))
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;

    fn v(c: char) -> Term {
        Term::var(c)
    }

    fn p(a: Term, b: Term) -> Term {
        Term::product(a, b)
    }

    #[test]
    fn parses_right_nested_product() {
        assert_eq!(parse_term("x(yz)").unwrap(), p(v('x'), p(v('y'), v('z'))));
    }

    #[test]
    fn juxtaposition_associates_left() {
        assert_eq!(parse_term("xyz").unwrap(), p(p(v('x'), v('y')), v('z')));
        assert_eq!(parse_term(" x y\tz ").unwrap(), parse_term("xyz").unwrap());
    }

    #[test]
    fn parses_explicit_left_nesting() {
        assert_eq!(parse_term("((xy)x)z").unwrap(), p(p(p(v('x'), v('y')), v('x')), v('z')));
    }

    #[test]
    fn parses_identities() {
        let comm = parse_identity("xy=yx").unwrap();
        assert_eq!(comm.variables(), &['x', 'y']);
        assert_eq!(comm.rhs, p(v('y'), v('x')));
        let key = parse_identity("x(xy)=y").unwrap();
        assert_eq!(key.lhs, p(v('x'), p(v('x'), v('y'))));
        let ones = parse_identity("1=1").unwrap();
        assert!(ones.variables().is_empty());
        assert!(ones.uses_one());
        assert_eq!(parse_identity("zy = (x1)").unwrap().variables(), &['z', 'y', 'x']);
    }

    #[test]
    fn syntax_errors_carry_offsets() {
        let err = |s: &str| parse_term(s).unwrap_err();
        assert_eq!(err(""), ParseError { offset: 0, kind: ParseErrorKind::Empty });
        assert_eq!(err("   ").kind, ParseErrorKind::Empty);
        assert_eq!(err("x(yz"), ParseError { offset: 1, kind: ParseErrorKind::Unclosed });
        assert_eq!(err("xy)z"), ParseError { offset: 2, kind: ParseErrorKind::Unmatched });
        assert_eq!(err("x()"), ParseError { offset: 2, kind: ParseErrorKind::EmptyGroup });
        assert_eq!(err("xY"), ParseError { offset: 1, kind: ParseErrorKind::IllegalChar('Y') });
        assert_eq!(err("x+y").kind, ParseErrorKind::IllegalChar('+'));
        assert_eq!(err(")").kind, ParseErrorKind::Empty);
        assert_eq!(err("x2").kind, ParseErrorKind::IllegalChar('2'));
    }

    #[test]
    fn identity_errors() {
        assert_eq!(parse_identity("xy").unwrap_err().kind, ParseErrorKind::MissingEquals);
        assert_eq!(
            parse_identity("x=y=z").unwrap_err(),
            ParseError { offset: 3, kind: ParseErrorKind::ExtraEquals }
        );
        assert_eq!(
            parse_identity("x=y(").unwrap_err(),
            ParseError { offset: 3, kind: ParseErrorKind::Unclosed }
        );
        assert_eq!(parse_identity("=x").unwrap_err().kind, ParseErrorKind::Empty);
    }

    #[test]
    fn prints_minimal_parentheses() {
        assert_eq!(print_term(&p(p(v('x'), v('y')), v('z'))), "xyz");
        assert_eq!(print_term(&p(v('x'), p(v('y'), v('z')))), "x(yz)");
        let id4 = parse_identity("(xz)(((xy)z)(yz))=((xz)((xy)z))(yz)").unwrap();
        assert_eq!(id4.to_string(), "xz(xyz(yz))=xz(xyz)(yz)");
        assert_eq!(parse_identity(&id4.to_string()).unwrap(), id4);
    }

    #[test]
    fn ordering_puts_smaller_terms_first() {
        let mut terms = [p(v('x'), v('y')), v('y'), Term::One, v('x')];
        terms.sort();
        assert_eq!(terms, [Term::One, v('x'), v('y'), p(v('x'), v('y'))]);
    }
}
