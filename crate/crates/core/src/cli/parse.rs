//! Reader for the one-algebra-per-file text format:
//!
//! ```text
//! # comment
//! dim 3
//! basis e h f
//! [e,h] = -2 e
//! [e,f] = h
//! [h,f] = -2 f
//! ```

use std::collections::HashSet;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use thiserror::Error;

use crate::exactlinalg::Scalar;
use crate::liecore::{Element, LieAlgebra, Terms};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseErrorKind {
    #[error("syntax error: {0}")]
    Syntax(String),
    #[error("unknown basis name `{0}`")]
    UnknownName(String),
    #[error("duplicate basis name `{0}`")]
    DuplicateName(String),
    #[error("bracket [{0},{1}] given twice")]
    DuplicatePair(String, String),
    #[error("diagonal bracket [{0},{0}] is always zero and may not be given")]
    DiagonalBracket(String),
    #[error("invalid rational `{0}`")]
    BadRational(String),
    #[error("expected {expected} values, found {found}")]
    CountMismatch { expected: usize, found: usize },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("line {line}, column {column}: {kind}")]
pub struct ParseError {
    pub line: usize,
    pub column: usize,
    pub kind: ParseErrorKind,
}

impl ParseError {
    fn new(line: usize, column: usize, kind: ParseErrorKind) -> Self {
        Self { line, column, kind }
    }
}

/// `p` or `p/q` with an optional leading sign and no inner whitespace.
pub fn parse_rational(text: &str) -> Option<Scalar> {
    let (num, den) = match text.split_once('/') {
        Some((n, d)) => (n, Some(d)),
        None => (text, None),
    };
    let digits = |s: &str| !s.is_empty() && s.bytes().all(|b| b.is_ascii_digit());
    let unsigned = num.strip_prefix(['-', '+']).unwrap_or(num);
    if !digits(unsigned) {
        return None;
    }
    let numer = BigInt::from_str(num.strip_prefix('+').unwrap_or(num)).ok()?;
    let denom = match den {
        Some(d) if digits(d) => BigInt::from_str(d).ok()?,
        Some(_) => return None,
        None => BigInt::one(),
    };
    if denom.is_zero() {
        return None;
    }
    Some(Scalar::new(numer, denom))
}

/// Comma-separated rationals, one per basis element, in basis order.
pub fn parse_element(text: &str, dim: usize) -> Result<Element, ParseError> {
    let trimmed = text.trim();
    let parts: Vec<&str> = if trimmed.is_empty() {
        Vec::new()
    } else {
        trimmed.split(',').collect()
    };
    if parts.len() != dim {
        return Err(ParseError::new(
            1,
            1,
            ParseErrorKind::CountMismatch {
                expected: dim,
                found: parts.len(),
            },
        ));
    }
    let mut coords = Vec::with_capacity(dim);
    let mut column = 1;
    for part in parts {
        let value = part.trim();
        let offset = part.len() - part.trim_start().len();
        coords.push(parse_rational(value).ok_or_else(|| {
            ParseError::new(
                1,
                column + offset,
                ParseErrorKind::BadRational(value.to_string()),
            )
        })?);
        column += part.chars().count() + 1;
    }
    Ok(Element::new(coords))
}

struct Cursor<'a> {
    chars: Vec<char>,
    pos: usize,
    line: usize,
    names: &'a [String],
}

impl Cursor<'_> {
    fn err(&self, kind: ParseErrorKind) -> ParseError {
        ParseError::new(self.line, self.pos + 1, kind)
    }

    fn syntax(&self, msg: &str) -> ParseError {
        self.err(ParseErrorKind::Syntax(msg.to_string()))
    }

    fn skip_ws(&mut self) {
        while self.peek().is_some_and(char::is_whitespace) {
            self.pos += 1;
        }
    }

    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).copied()
    }

    fn at_end(&mut self) -> bool {
        self.skip_ws();
        self.pos == self.chars.len()
    }

    fn expect(&mut self, c: char) -> Result<(), ParseError> {
        self.skip_ws();
        if self.peek() == Some(c) {
            self.pos += 1;
            Ok(())
        } else {
            Err(self.syntax(&format!("expected `{c}`")))
        }
    }

    fn ident(&mut self) -> Result<(String, usize), ParseError> {
        self.skip_ws();
        let start = self.pos;
        match self.peek() {
            Some(c) if c.is_alphabetic() || c == '_' => self.pos += 1,
            _ => return Err(self.syntax("expected a basis name")),
        }
        while self
            .peek()
            .is_some_and(|c| c.is_alphanumeric() || c == '_' || c == '\'')
        {
            self.pos += 1;
        }
        Ok((self.chars[start..self.pos].iter().collect(), start))
    }

    fn basis_index(&mut self) -> Result<(usize, String), ParseError> {
        let (name, start) = self.ident()?;
        match self.names.iter().position(|n| *n == name) {
            Some(i) => Ok((i, name)),
            None => Err(ParseError::new(
                self.line,
                start + 1,
                ParseErrorKind::UnknownName(name),
            )),
        }
    }

    /// Optional unsigned rational coefficient.
    fn coefficient(&mut self) -> Result<Option<Scalar>, ParseError> {
        self.skip_ws();
        let start = self.pos;
        while self.peek().is_some_and(|c| c.is_ascii_digit() || c == '/') {
            self.pos += 1;
        }
        if start == self.pos {
            return Ok(None);
        }
        let text: String = self.chars[start..self.pos].iter().collect();
        parse_rational(&text)
            .map(Some)
            .ok_or_else(|| ParseError::new(self.line, start + 1, ParseErrorKind::BadRational(text)))
    }

    fn terms(&mut self) -> Result<Terms, ParseError> {
        let mut terms = Vec::new();
        self.skip_ws();
        let rest: String = self.chars[self.pos..].iter().collect();
        if rest.trim() == "0" {
            self.pos = self.chars.len();
            return Ok(terms);
        }
        let mut first = true;
        loop {
            if self.at_end() {
                if first {
                    return Err(self.syntax("expected a right-hand side"));
                }
                break;
            }
            let negative = match self.peek() {
                Some('+') => {
                    self.pos += 1;
                    false
                }
                Some('-') => {
                    self.pos += 1;
                    true
                }
                _ if first => false,
                _ => return Err(self.syntax("expected `+` or `-` between terms")),
            };
            let c = self.coefficient()?.unwrap_or_else(Scalar::one);
            let (k, _) = self.basis_index()?;
            terms.push((k, if negative { -c } else { c }));
            first = false;
        }
        Ok(terms)
    }
}

/// Parses an algebra file. Unlisted brackets are zero. The Jacobi identity
/// is not checked here.
pub fn parse_algebra(text: &str) -> Result<LieAlgebra, ParseError> {
    let mut dim: Option<usize> = None;
    let mut names: Option<Vec<String>> = None;
    let mut entries: Vec<((usize, usize), Terms)> = Vec::new();
    let mut pairs_seen = HashSet::new();
    let mut last_line = 0;

    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        last_line = line;
        let trimmed = raw.trim();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        let indent = raw.chars().take_while(|c| c.is_whitespace()).count();
        let syntax = |column: usize, msg: &str| {
            ParseError::new(line, column, ParseErrorKind::Syntax(msg.to_string()))
        };
        let keyword = trimmed.split_whitespace().next().unwrap_or_default();
        match (keyword, dim.is_some(), names.is_some()) {
            ("dim", false, _) => {
                let rest: Vec<&str> = trimmed.split_whitespace().skip(1).collect();
                match rest.as_slice() {
                    [n] => match n.parse::<usize>() {
                        Ok(n) => dim = Some(n),
                        Err(_) => return Err(syntax(indent + 5, "expected a dimension")),
                    },
                    _ => return Err(syntax(indent + 4, "expected `dim <n>`")),
                }
            }
            ("dim", true, _) => return Err(syntax(indent + 1, "`dim` given twice")),
            (_, false, _) => return Err(syntax(indent + 1, "expected `dim <n>` first")),
            ("basis", true, false) => {
                let list: Vec<String> = trimmed
                    .split_whitespace()
                    .skip(1)
                    .map(str::to_string)
                    .collect();
                let expected = dim.expect("checked");
                if list.len() != expected {
                    return Err(ParseError::new(
                        line,
                        indent + 1,
                        ParseErrorKind::CountMismatch {
                            expected,
                            found: list.len(),
                        },
                    ));
                }
                let mut seen = HashSet::new();
                for name in &list {
                    let valid = name
                        .chars()
                        .next()
                        .is_some_and(|c| c.is_alphabetic() || c == '_')
                        && name
                            .chars()
                            .all(|c| c.is_alphanumeric() || c == '_' || c == '\'');
                    let column = raw
                        .find(name.as_str())
                        .map_or(1, |p| raw[..p].chars().count() + 1);
                    if !valid {
                        return Err(syntax(column, &format!("invalid basis name `{name}`")));
                    }
                    if !seen.insert(name.clone()) {
                        return Err(ParseError::new(
                            line,
                            column,
                            ParseErrorKind::DuplicateName(name.clone()),
                        ));
                    }
                }
                names = Some(list);
            }
            ("basis", true, true) => return Err(syntax(indent + 1, "`basis` given twice")),
            (_, true, false) => return Err(syntax(indent + 1, "expected `basis` line")),
            _ => {
                let basis = names.as_deref().expect("checked");
                let mut cur = Cursor {
                    chars: raw.chars().collect(),
                    pos: 0,
                    line,
                    names: basis,
                };
                cur.expect('[')?;
                let (i, ni) = cur.basis_index()?;
                cur.expect(',')?;
                let (j, nj) = cur.basis_index()?;
                cur.expect(']')?;
                cur.expect('=')?;
                if i == j {
                    return Err(ParseError::new(
                        line,
                        indent + 1,
                        ParseErrorKind::DiagonalBracket(ni),
                    ));
                }
                let key = (i.min(j), i.max(j));
                if !pairs_seen.insert(key) {
                    return Err(ParseError::new(
                        line,
                        indent + 1,
                        ParseErrorKind::DuplicatePair(ni, nj),
                    ));
                }
                let terms = cur.terms()?;
                entries.push(((i, j), terms));
            }
        }
    }
    let Some(dim) = dim else {
        return Err(ParseError::new(
            last_line.max(1),
            1,
            ParseErrorKind::Syntax("missing `dim` line".into()),
        ));
    };
    let names = match names {
        Some(n) => n,
        None if dim == 0 => Vec::new(),
        None => {
            return Err(ParseError::new(
                last_line.max(1),
                1,
                ParseErrorKind::Syntax("missing `basis` line".into()),
            ))
        }
    };
    LieAlgebra::new(names, entries)
        .map_err(|e| ParseError::new(last_line.max(1), 1, ParseErrorKind::Syntax(e.to_string())))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;
    use crate::exactlinalg::{frac, int};

    const SL2: &str =
        "# sl2 in the Chevalley basis\ndim 3\nbasis e h f\n[e,h] = -2 e\n[e,f] = h\n[h,f] = -2 f\n";

    #[test]
    fn parses_examples() {
        let l = parse_algebra("dim 1\nbasis x\n").unwrap();
        assert!(l.same_table(&catalog::abelian(1)));
        assert_eq!(parse_algebra(SL2).unwrap(), catalog::sl2());
        // reversed pairs and several terms
        let l = parse_algebra("dim 3\nbasis e h f\n[h,e] = 2e\n[e,f] = h\n[f,h] = 2 f\n").unwrap();
        assert_eq!(l, catalog::sl2());
        let l = parse_algebra("dim 2\nbasis a b\n[a,b] = 1/2 a - 3/4 b + b\n").unwrap();
        assert_eq!(l.bracket_basis(0, 1), vec![frac(1, 2), frac(1, 4)]);
        let l = parse_algebra("dim 2\nbasis a b\n[a,b] = 0\n").unwrap();
        assert!(l.same_table(&catalog::abelian(2)));
        assert_eq!(parse_algebra("dim 0\n").unwrap().dim(), 0);
    }

    #[test]
    fn diagonal_bracket_is_rejected() {
        let err = parse_algebra("dim 3\nbasis e h f\n[e,e] = h\n").unwrap_err();
        assert_eq!(err.kind, ParseErrorKind::DiagonalBracket("e".into()));
        assert_eq!(err.line, 3);
    }

    #[test]
    fn error_positions() {
        let err = parse_algebra("dim 2\nbasis a b\n[a,c] = a\n").unwrap_err();
        assert_eq!((err.line, err.column), (3, 4));
        assert_eq!(err.kind, ParseErrorKind::UnknownName("c".into()));

        let err = parse_algebra("dim 2\nbasis a b\n[a,b] = a\n[b,a] = b\n").unwrap_err();
        assert_eq!(
            err.kind,
            ParseErrorKind::DuplicatePair("b".into(), "a".into())
        );

        let err = parse_algebra("dim 2\nbasis a b\n[a,b] = 1/0 a\n").unwrap_err();
        assert_eq!((err.line, err.column), (3, 9));
        assert_eq!(err.kind, ParseErrorKind::BadRational("1/0".into()));

        let err = parse_algebra("dim 2\nbasis a b\n[a,b] = a b\n").unwrap_err();
        assert!(matches!(err.kind, ParseErrorKind::Syntax(_)));
        assert_eq!(err.column, 11);

        let err = parse_algebra("basis a b\n").unwrap_err();
        assert_eq!(err.line, 1);
        let err = parse_algebra("dim 2\nbasis a\n").unwrap_err();
        assert_eq!(
            err.kind,
            ParseErrorKind::CountMismatch {
                expected: 2,
                found: 1
            }
        );
        let err = parse_algebra("dim 2\nbasis a a\n").unwrap_err();
        assert_eq!(err.kind, ParseErrorKind::DuplicateName("a".into()));
        assert!(parse_algebra("dim 2\nbasis a b\n[a,b] =\n").is_err());
        assert!(parse_algebra("dim 2\nbasis a b\n[a b] = a\n").is_err());
    }

    #[test]
    fn rationals() {
        assert_eq!(parse_rational("-3"), Some(int(-3)));
        assert_eq!(parse_rational("+4/6"), Some(frac(2, 3)));
        for bad in ["", "1/", "/2", "1 /2", "--1", "1/-2", "x", "1.5"] {
            assert_eq!(parse_rational(bad), None, "{bad:?}");
        }
    }

    #[test]
    fn element_examples() {
        assert!(parse_element("0,0,0", 3).unwrap().is_zero());
        assert_eq!(
            parse_element("1,0,0", 3).unwrap(),
            catalog::sl2().named("e")
        );
        assert_eq!(
            parse_element("1/2,-3,0", 3).unwrap().coords(),
            &[frac(1, 2), int(-3), int(0)]
        );
        assert_eq!(
            parse_element("1,0", 3).unwrap_err().kind,
            ParseErrorKind::CountMismatch {
                expected: 3,
                found: 2
            }
        );
        let err = parse_element("1, x ,0", 3).unwrap_err();
        assert_eq!(err.kind, ParseErrorKind::BadRational("x".into()));
        assert_eq!(err.column, 4);
        assert_eq!(parse_element("", 0).unwrap().dim(), 0);
    }
}
