//! Recursive-descent parser for the path query language.
//!
//! ```text
//! expr    = term { "|" term }
//! term    = factor { [ "." | "~" ] factor }
//! factor  = atom { "*" | "+" | "?" | "{" integer "}" }
//! atom    = "[" part "," part "," part "]" | "(" expr ")" | "0" | "e"
//! part    = ident | "_" | "!" ident | "!{" ident { "," ident } "}"
//! ```
//!
//! Whitespace is insignificant and `#` comments run to end of line.

use alloc::collections::BTreeSet;
use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;

use super::ast::PathExpr;
use crate::algebra::{EdgePattern, PartPattern};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ParseErrorKind {
    /// Found something other than one of `expected`.
    Syntax {
        expected: Vec<&'static str>,
        found: String,
    },
    /// `_` used where an identifier is required.
    ReservedToken,
    /// Repetition count that is zero or does not fit.
    BadRepeat(String),
    UnexpectedChar(char),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParseError {
    pub kind: ParseErrorKind,
    /// 1-based.
    pub line: usize,
    /// 1-based, in characters.
    pub column: usize,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}: ", self.line, self.column)?;
        match &self.kind {
            ParseErrorKind::Syntax { expected, found } => {
                f.write_str("expected ")?;
                for (n, e) in expected.iter().enumerate() {
                    if n > 0 {
                        f.write_str(if n + 1 == expected.len() {
                            " or "
                        } else {
                            ", "
                        })?;
                    }
                    f.write_str(e)?;
                }
                write!(f, ", found {found}")
            }
            ParseErrorKind::ReservedToken => {
                f.write_str("`_` is reserved and cannot name a vertex or label")
            }
            ParseErrorKind::BadRepeat(n) => {
                write!(
                    f,
                    "repetition count must be a positive integer, found `{n}`"
                )
            }
            ParseErrorKind::UnexpectedChar(c) => write!(f, "unexpected character {c:?}"),
        }
    }
}

impl core::error::Error for ParseError {}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Tok {
    Word(String),
    Punct(char),
    End,
}

impl Tok {
    fn describe(&self) -> String {
        match self {
            Tok::Word(w) => alloc::format!("`{w}`"),
            Tok::Punct(c) => alloc::format!("`{c}`"),
            Tok::End => "end of input".to_string(),
        }
    }
}

#[derive(Clone, Debug)]
struct Spanned {
    tok: Tok,
    line: usize,
    column: usize,
}

fn is_word_char(c: char) -> bool {
    c.is_ascii_alphanumeric() || c == '_' || c == '-'
}

fn lex(text: &str) -> Result<Vec<Spanned>, ParseError> {
    let mut out = Vec::new();
    let mut line = 1;
    let mut column = 1;
    let mut chars = text.chars().peekable();
    while let Some(&c) = chars.peek() {
        let (l, col) = (line, column);
        match c {
            '\n' => {
                chars.next();
                line += 1;
                column = 1;
            }
            c if c.is_whitespace() => {
                chars.next();
                column += 1;
            }
            '#' => {
                while chars.peek().is_some_and(|&c| c != '\n') {
                    chars.next();
                    column += 1;
                }
            }
            c if is_word_char(c) => {
                let mut word = String::new();
                while let Some(&c) = chars.peek().filter(|&&c| is_word_char(c)) {
                    word.push(c);
                    chars.next();
                    column += 1;
                }
                out.push(Spanned {
                    tok: Tok::Word(word),
                    line: l,
                    column: col,
                });
            }
            '[' | ']' | ',' | '(' | ')' | '|' | '.' | '~' | '*' | '+' | '?' | '{' | '}' | '!' => {
                chars.next();
                column += 1;
                out.push(Spanned {
                    tok: Tok::Punct(c),
                    line: l,
                    column: col,
                });
            }
            other => {
                return Err(ParseError {
                    kind: ParseErrorKind::UnexpectedChar(other),
                    line: l,
                    column: col,
                })
            }
        }
    }
    out.push(Spanned {
        tok: Tok::End,
        line,
        column,
    });
    Ok(out)
}

struct Parser {
    toks: Vec<Spanned>,
    pos: usize,
}

impl Parser {
    fn peek(&self) -> &Spanned {
        &self.toks[self.pos]
    }

    fn bump(&mut self) -> Spanned {
        let t = self.toks[self.pos].clone();
        if self.pos + 1 < self.toks.len() {
            self.pos += 1;
        }
        t
    }

    fn error_at(&self, at: &Spanned, kind: ParseErrorKind) -> ParseError {
        ParseError {
            kind,
            line: at.line,
            column: at.column,
        }
    }

    fn unexpected(&self, expected: &[&'static str]) -> ParseError {
        let at = self.peek();
        self.error_at(
            at,
            ParseErrorKind::Syntax {
                expected: expected.to_vec(),
                found: at.tok.describe(),
            },
        )
    }

    fn is_punct(&self, c: char) -> bool {
        self.peek().tok == Tok::Punct(c)
    }

    fn expect(&mut self, c: char, name: &'static str) -> Result<(), ParseError> {
        if self.is_punct(c) {
            self.bump();
            Ok(())
        } else {
            Err(self.unexpected(&[name]))
        }
    }

    fn starts_factor(&self) -> bool {
        matches!(
            self.peek().tok,
            Tok::Punct('[') | Tok::Punct('(') | Tok::Word(_)
        )
    }

    fn expr(&mut self) -> Result<PathExpr, ParseError> {
        let mut lhs = self.term()?;
        while self.is_punct('|') {
            self.bump();
            let rhs = self.term()?;
            lhs = PathExpr::union(lhs, rhs);
        }
        Ok(lhs)
    }

    fn term(&mut self) -> Result<PathExpr, ParseError> {
        let mut lhs = self.factor()?;
        loop {
            if self.is_punct('.') {
                self.bump();
                lhs = PathExpr::join(lhs, self.factor()?);
            } else if self.is_punct('~') {
                self.bump();
                lhs = PathExpr::product(lhs, self.factor()?);
            } else if self.starts_factor() {
                lhs = PathExpr::join(lhs, self.factor()?);
            } else {
                return Ok(lhs);
            }
        }
    }

    fn factor(&mut self) -> Result<PathExpr, ParseError> {
        let mut x = self.atom()?;
        loop {
            match self.peek().tok {
                Tok::Punct('*') => {
                    self.bump();
                    x = PathExpr::star(x);
                }
                Tok::Punct('+') => {
                    self.bump();
                    x = PathExpr::plus(x);
                }
                Tok::Punct('?') => {
                    self.bump();
                    x = PathExpr::optional(x);
                }
                Tok::Punct('{') => {
                    self.bump();
                    let at = self.peek().clone();
                    let n = match &at.tok {
                        Tok::Word(w) if w.bytes().all(|b| b.is_ascii_digit()) => match w
                            .parse::<u32>()
                        {
                            Ok(n) if n > 0 => n,
                            _ => {
                                return Err(self.error_at(&at, ParseErrorKind::BadRepeat(w.clone())))
                            }
                        },
                        _ => return Err(self.unexpected(&["integer"])),
                    };
                    self.bump();
                    self.expect('}', "`}`")?;
                    x = PathExpr::repeat(x, n);
                }
                _ => return Ok(x),
            }
        }
    }

    fn atom(&mut self) -> Result<PathExpr, ParseError> {
        const EXPECTED: &[&str] = &["`[`", "`(`", "`0`", "`e`"];
        match &self.peek().tok {
            Tok::Punct('[') => {
                self.bump();
                let tail = self.part()?;
                self.expect(',', "`,`")?;
                let label = self.part()?;
                self.expect(',', "`,`")?;
                let head = self.part()?;
                self.expect(']', "`]`")?;
                Ok(PathExpr::Atom(EdgePattern::new(tail, label, head)))
            }
            Tok::Punct('(') => {
                self.bump();
                let x = self.expr()?;
                self.expect(')', "`)`")?;
                Ok(x)
            }
            Tok::Word(w) if w == "0" => {
                self.bump();
                Ok(PathExpr::Empty)
            }
            Tok::Word(w) if w == "e" => {
                self.bump();
                Ok(PathExpr::Epsilon)
            }
            _ => Err(self.unexpected(EXPECTED)),
        }
    }

    fn ident(&mut self) -> Result<String, ParseError> {
        let at = self.peek().clone();
        match &at.tok {
            Tok::Word(w) if w == "_" => Err(self.error_at(&at, ParseErrorKind::ReservedToken)),
            Tok::Word(w) => {
                self.bump();
                Ok(w.clone())
            }
            _ => Err(self.unexpected(&["identifier"])),
        }
    }

    fn part(&mut self) -> Result<PartPattern, ParseError> {
        match &self.peek().tok {
            Tok::Word(w) if w == "_" => {
                self.bump();
                Ok(PartPattern::Any)
            }
            Tok::Word(_) => Ok(PartPattern::Exact(self.ident()?)),
            Tok::Punct('!') => {
                self.bump();
                if self.is_punct('{') {
                    self.bump();
                    let mut set = BTreeSet::new();
                    set.insert(self.ident()?);
                    while self.is_punct(',') {
                        self.bump();
                        set.insert(self.ident()?);
                    }
                    self.expect('}', "`}`")?;
                    Ok(PartPattern::Not(set))
                } else if matches!(self.peek().tok, Tok::Word(_)) {
                    Ok(PartPattern::Not(BTreeSet::from([self.ident()?])))
                } else {
                    Err(self.unexpected(&["identifier", "`{`"]))
                }
            }
            _ => Err(self.unexpected(&["identifier", "`_`", "`!`"])),
        }
    }
}

/// Parses a path expression. Sugar (`+`, `?`, `{n}`) is kept in the tree;
/// see [`PathExpr::desugar`].
pub fn parse_query(text: &str) -> Result<PathExpr, ParseError> {
    let mut p = Parser {
        toks: lex(text)?,
        pos: 0,
    };
    let x = p.expr()?;
    if p.peek().tok != Tok::End {
        return Err(p.unexpected(&["`|`", "`.`", "`~`", "postfix operator", "end of input"]));
    }
    Ok(x)
}
