//! Expression grammar shared by the subcommands:
//!
//! ```text
//! expr   := '-'? term (('+' | '-') term)*
//! term   := factor (('*' | '/') factor)*
//! factor := atom ('^' int)?
//! atom   := 'D[' int ',' int ']' | 'e[' int ',' int ']' | 'Q[' uint '|' uint ']'
//!         | '{' int '}' | 'delta' | 's' | 'v' | integer | '(' expr ')'
//! ```
//!
//! Atoms must match the evaluation context (`D` in the torus, `Q` in the
//! annulus, `e` in the bracket algebra). Errors carry byte offsets.

use std::fmt;

use num_bigint::BigInt;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Context {
    Torus,
    Annulus,
    Bracket,
}

impl Context {
    pub fn name(&self) -> &'static str {
        match self {
            Context::Torus => "torus",
            Context::Annulus => "annulus",
            Context::Bracket => "bracket",
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct Expr {
    pub offset: usize,
    pub kind: ExprKind,
}

#[derive(Clone, Debug, PartialEq)]
pub enum ExprKind {
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    Div(Box<Expr>, Box<Expr>),
    Pow(Box<Expr>, i64),
    Neg(Box<Expr>),
    Gen(i64, i64),
    Curve(i64, i64),
    Hook(u32, u32),
    Brace(i64),
    Delta,
    S,
    V,
    Int(BigInt),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParseError {
    pub offset: usize,
    pub message: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "syntax error at byte {}: {}", self.offset, self.message)
    }
}

impl std::error::Error for ParseError {}

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
    LBracket,
    RBracket,
    LBrace,
    RBrace,
    Comma,
    Pipe,
    Int(BigInt),
    Ident(String),
}

fn lex(input: &str) -> Result<Vec<(usize, Tok)>, ParseError> {
    let bytes = input.as_bytes();
    let mut toks = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i] as char;
        let tok = match c {
            ' ' | '\t' | '\n' | '\r' => {
                i += 1;
                continue;
            }
            '+' => Tok::Plus,
            '-' => Tok::Minus,
            '*' => Tok::Star,
            '/' => Tok::Slash,
            '^' => Tok::Caret,
            '(' => Tok::LParen,
            ')' => Tok::RParen,
            '[' => Tok::LBracket,
            ']' => Tok::RBracket,
            '{' => Tok::LBrace,
            '}' => Tok::RBrace,
            ',' => Tok::Comma,
            '|' => Tok::Pipe,
            '0'..='9' => {
                let start = i;
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                let n: BigInt = input[start..i].parse().expect("digits parse");
                toks.push((start, Tok::Int(n)));
                continue;
            }
            'a'..='z' | 'A'..='Z' => {
                let start = i;
                while i < bytes.len() && bytes[i].is_ascii_alphabetic() {
                    i += 1;
                }
                toks.push((start, Tok::Ident(input[start..i].to_string())));
                continue;
            }
            other => {
                return Err(ParseError {
                    offset: i,
                    message: format!("unexpected character '{other}'"),
                })
            }
        };
        toks.push((i, tok));
        i += 1;
    }
    Ok(toks)
}

struct Parser {
    toks: Vec<(usize, Tok)>,
    pos: usize,
    end: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|(_, t)| t)
    }

    fn offset(&self) -> usize {
        self.toks.get(self.pos).map(|(o, _)| *o).unwrap_or(self.end)
    }

    fn bump(&mut self) -> Option<Tok> {
        let t = self.toks.get(self.pos).map(|(_, t)| t.clone());
        self.pos += 1;
        t
    }

    fn err<T>(&self, message: impl Into<String>) -> Result<T, ParseError> {
        Err(ParseError {
            offset: self.offset(),
            message: message.into(),
        })
    }

    fn expect(&mut self, tok: Tok, what: &str) -> Result<(), ParseError> {
        if self.peek() == Some(&tok) {
            self.pos += 1;
            Ok(())
        } else {
            self.err(format!("expected {what}"))
        }
    }

    fn int(&mut self, what: &str) -> Result<i64, ParseError> {
        let neg = if self.peek() == Some(&Tok::Minus) {
            self.pos += 1;
            true
        } else {
            false
        };
        let off = self.offset();
        match self.bump() {
            Some(Tok::Int(n)) => {
                let v: i64 = (&n).try_into().map_err(|_| ParseError {
                    offset: off,
                    message: format!("{what} out of range"),
                })?;
                Ok(if neg { -v } else { v })
            }
            _ => Err(ParseError {
                offset: off,
                message: format!("expected {what}"),
            }),
        }
    }

    fn uint(&mut self, what: &str) -> Result<u32, ParseError> {
        let off = self.offset();
        let v = self.int(what)?;
        u32::try_from(v).map_err(|_| ParseError {
            offset: off,
            message: format!("{what} must be nonnegative"),
        })
    }

    fn expr(&mut self) -> Result<Expr, ParseError> {
        let off = self.offset();
        let mut lhs = if self.peek() == Some(&Tok::Minus) {
            self.pos += 1;
            let t = self.term()?;
            Expr {
                offset: off,
                kind: ExprKind::Neg(Box::new(t)),
            }
        } else {
            self.term()?
        };
        loop {
            let op = match self.peek() {
                Some(Tok::Plus) => ExprKind::Add as fn(_, _) -> _,
                Some(Tok::Minus) => ExprKind::Sub as fn(_, _) -> _,
                _ => break,
            };
            let off = self.offset();
            self.pos += 1;
            let rhs = self.term()?;
            lhs = Expr {
                offset: off,
                kind: op(Box::new(lhs), Box::new(rhs)),
            };
        }
        Ok(lhs)
    }

    fn term(&mut self) -> Result<Expr, ParseError> {
        let mut lhs = self.factor()?;
        loop {
            let op = match self.peek() {
                Some(Tok::Star) => ExprKind::Mul as fn(_, _) -> _,
                Some(Tok::Slash) => ExprKind::Div as fn(_, _) -> _,
                _ => break,
            };
            let off = self.offset();
            self.pos += 1;
            let rhs = self.factor()?;
            lhs = Expr {
                offset: off,
                kind: op(Box::new(lhs), Box::new(rhs)),
            };
        }
        Ok(lhs)
    }

    fn factor(&mut self) -> Result<Expr, ParseError> {
        let atom = self.atom()?;
        if self.peek() == Some(&Tok::Caret) {
            let off = self.offset();
            self.pos += 1;
            let e = self.int("exponent")?;
            return Ok(Expr {
                offset: off,
                kind: ExprKind::Pow(Box::new(atom), e),
            });
        }
        Ok(atom)
    }

    fn atom(&mut self) -> Result<Expr, ParseError> {
        let off = self.offset();
        match self.bump() {
            Some(Tok::Ident(name)) => match name.as_str() {
                "D" | "e" => {
                    self.expect(Tok::LBracket, "'['")?;
                    let a = self.int("coordinate")?;
                    self.expect(Tok::Comma, "','")?;
                    let b = self.int("coordinate")?;
                    self.expect(Tok::RBracket, "']'")?;
                    let kind = if name == "D" {
                        ExprKind::Gen(a, b)
                    } else {
                        ExprKind::Curve(a, b)
                    };
                    Ok(Expr { offset: off, kind })
                }
                "Q" => {
                    self.expect(Tok::LBracket, "'['")?;
                    let arm = self.uint("arm")?;
                    self.expect(Tok::Pipe, "'|'")?;
                    let leg = self.uint("leg")?;
                    self.expect(Tok::RBracket, "']'")?;
                    Ok(Expr {
                        offset: off,
                        kind: ExprKind::Hook(arm, leg),
                    })
                }
                "delta" => Ok(Expr {
                    offset: off,
                    kind: ExprKind::Delta,
                }),
                "s" => Ok(Expr {
                    offset: off,
                    kind: ExprKind::S,
                }),
                "v" => Ok(Expr {
                    offset: off,
                    kind: ExprKind::V,
                }),
                other => Err(ParseError {
                    offset: off,
                    message: format!("unknown symbol '{other}'"),
                }),
            },
            Some(Tok::LBrace) => {
                let n = self.int("quantum integer")?;
                self.expect(Tok::RBrace, "'}'")?;
                Ok(Expr {
                    offset: off,
                    kind: ExprKind::Brace(n),
                })
            }
            Some(Tok::Int(n)) => Ok(Expr {
                offset: off,
                kind: ExprKind::Int(n),
            }),
            Some(Tok::LParen) => {
                let e = self.expr()?;
                self.expect(Tok::RParen, "')'")?;
                Ok(e)
            }
            _ => Err(ParseError {
                offset: off,
                message: "expected an atom".into(),
            }),
        }
    }
}

/// Parse an expression; the context only gates evaluation, not parsing,
/// except that atom kinds are checked against it in [`crate::eval`].
pub fn parse(input: &str) -> Result<Expr, ParseError> {
    let toks = lex(input)?;
    let mut p = Parser {
        toks,
        pos: 0,
        end: input.len(),
    };
    let e = p.expr()?;
    if p.pos != p.toks.len() {
        return p.err("trailing input");
    }
    Ok(e)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_torus_expression() {
        let e = parse("D[1,0]*D[0,2] - {2}*D[1,2]").unwrap();
        match e.kind {
            ExprKind::Sub(_, _) => {}
            other => panic!("expected subtraction at the top, got {other:?}"),
        }
    }

    #[test]
    fn parses_negative_indices_and_exponents() {
        assert!(parse("D[-1,0]^2").is_ok());
        assert!(parse("s^-2 + v^-1").is_ok());
        assert!(parse("(1 - s^2)/(s*v^-1 - 1)").is_ok());
    }

    #[test]
    fn reports_byte_offsets() {
        let err = parse("D[1,0] + %").unwrap_err();
        assert_eq!(err.offset, 9);
        let err = parse("D[1,0] *").unwrap_err();
        assert_eq!(err.offset, 8);
    }

    #[test]
    fn rejects_trailing_tokens() {
        assert!(parse("s s").is_err());
    }
}
