//! Parser for generator-name polynomial and matrix expressions.
//!
//! Grammar (whitespace-insensitive, ambiguity-free):
//!
//! ```text
//! expr     := term (('+' | '-') term)*
//! term     := factor ('*' factor)*
//! factor   := atom ('^' uint)?
//! atom     := rational | generator | '(' expr ')' | '-' atom
//! rational := uint ('/' uint)?
//! matrix   := '[' row (',' row)* ']'      row := '[' expr (',' expr)* ']'
//! ```
//!
//! Generators are the basis names of the ambient Lie algebra; `/` only
//! occurs inside rational literals (there is no general division). The
//! printers in [`crate::poly`] and [`crate::matpoly`] emit exactly this
//! syntax, so reports can be re-ingested.

use num_bigint::BigInt;
use num_traits::Zero;

use crate::error::KernelError;
use crate::lie::LieAlgebra;
use crate::matpoly::MatPoly;
use crate::poly::SymPoly;
use crate::rat::Rat;

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Int(BigInt),
    Name(String),
    Plus,
    Minus,
    Star,
    Caret,
    Slash,
    LParen,
    RParen,
    LBracket,
    RBracket,
    Comma,
    End,
}

#[derive(Clone, Debug)]
struct Spanned {
    tok: Tok,
    line: usize,
    col: usize,
}

fn lex(text: &str) -> Result<Vec<Spanned>, KernelError> {
    let mut out = Vec::new();
    let mut line = 1usize;
    let mut col = 1usize;
    let mut chars = text.chars().peekable();
    while let Some(&ch) = chars.peek() {
        let (tline, tcol) = (line, col);
        let bump = |c: char, line: &mut usize, col: &mut usize| {
            if c == '\n' {
                *line += 1;
                *col = 1;
            } else {
                *col += 1;
            }
        };
        match ch {
            c if c.is_whitespace() => {
                chars.next();
                bump(c, &mut line, &mut col);
            }
            c if c.is_ascii_digit() => {
                let mut digits = String::new();
                while let Some(&d) = chars.peek() {
                    if d.is_ascii_digit() {
                        digits.push(d);
                        chars.next();
                        bump(d, &mut line, &mut col);
                    } else {
                        break;
                    }
                }
                out.push(Spanned {
                    tok: Tok::Int(digits.parse().expect("digits")),
                    line: tline,
                    col: tcol,
                });
            }
            c if c.is_alphabetic() || c == '_' => {
                let mut name = String::new();
                while let Some(&d) = chars.peek() {
                    if d.is_alphanumeric() || d == '_' {
                        name.push(d);
                        chars.next();
                        bump(d, &mut line, &mut col);
                    } else {
                        break;
                    }
                }
                out.push(Spanned {
                    tok: Tok::Name(name),
                    line: tline,
                    col: tcol,
                });
            }
            _ => {
                let tok = match ch {
                    '+' => Tok::Plus,
                    '-' => Tok::Minus,
                    '*' => Tok::Star,
                    '^' => Tok::Caret,
                    '/' => Tok::Slash,
                    '(' => Tok::LParen,
                    ')' => Tok::RParen,
                    '[' => Tok::LBracket,
                    ']' => Tok::RBracket,
                    ',' => Tok::Comma,
                    other => {
                        return Err(KernelError::Parse {
                            line: tline,
                            col: tcol,
                            msg: format!("unexpected character `{other}`"),
                        })
                    }
                };
                chars.next();
                bump(ch, &mut line, &mut col);
                out.push(Spanned {
                    tok,
                    line: tline,
                    col: tcol,
                });
            }
        }
    }
    out.push(Spanned {
        tok: Tok::End,
        line,
        col,
    });
    Ok(out)
}

struct Parser<'a> {
    lie: &'a LieAlgebra,
    toks: Vec<Spanned>,
    pos: usize,
}

impl<'a> Parser<'a> {
    fn peek(&self) -> &Spanned {
        &self.toks[self.pos]
    }

    fn next(&mut self) -> Spanned {
        let t = self.toks[self.pos].clone();
        if self.pos + 1 < self.toks.len() {
            self.pos += 1;
        }
        t
    }

    fn err<T>(&self, msg: impl Into<String>) -> Result<T, KernelError> {
        let t = self.peek();
        Err(KernelError::Parse {
            line: t.line,
            col: t.col,
            msg: msg.into(),
        })
    }

    fn expect(&mut self, tok: Tok, what: &str) -> Result<(), KernelError> {
        if self.peek().tok == tok {
            self.next();
            Ok(())
        } else {
            self.err(format!("expected {what}"))
        }
    }

    fn expr(&mut self) -> Result<SymPoly, KernelError> {
        let mut acc = self.term()?;
        loop {
            match self.peek().tok {
                Tok::Plus => {
                    self.next();
                    acc = acc.add(&self.term()?);
                }
                Tok::Minus => {
                    self.next();
                    acc = acc.sub(&self.term()?);
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<SymPoly, KernelError> {
        let mut acc = self.factor()?;
        while self.peek().tok == Tok::Star {
            self.next();
            acc = acc.mul(&self.factor()?);
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<SymPoly, KernelError> {
        let base = self.atom()?;
        if self.peek().tok == Tok::Caret {
            self.next();
            match self.next().tok {
                Tok::Int(k) => {
                    let k: u32 = k.try_into().map_err(|_| KernelError::Parse {
                        line: self.peek().line,
                        col: self.peek().col,
                        msg: "exponent too large".to_string(),
                    })?;
                    let mut acc = SymPoly::one(self.lie.dim());
                    for _ in 0..k {
                        acc = acc.mul(&base);
                    }
                    Ok(acc)
                }
                _ => self.err("expected a nonnegative integer exponent"),
            }
        } else {
            Ok(base)
        }
    }

    fn atom(&mut self) -> Result<SymPoly, KernelError> {
        match self.peek().tok.clone() {
            Tok::Minus => {
                self.next();
                Ok(self.atom()?.neg())
            }
            Tok::Int(_) => {
                let num = match self.next().tok {
                    Tok::Int(v) => v,
                    _ => unreachable!(),
                };
                if self.peek().tok == Tok::Slash {
                    self.next();
                    match self.next().tok {
                        Tok::Int(den) if !den.is_zero() => Ok(SymPoly::constant(
                            self.lie.dim(),
                            Rat::new(num, den),
                        )),
                        _ => self.err("expected a nonzero integer denominator"),
                    }
                } else {
                    Ok(SymPoly::constant(self.lie.dim(), Rat::from_integer(num)))
                }
            }
            Tok::Name(name) => {
                self.next();
                match self.lie.generator_index(&name) {
                    Some(i) => Ok(SymPoly::generator(self.lie.dim(), i)),
                    None => Err(KernelError::UnknownGenerator(name)),
                }
            }
            Tok::LParen => {
                self.next();
                let inner = self.expr()?;
                self.expect(Tok::RParen, "`)`")?;
                Ok(inner)
            }
            _ => self.err("expected a rational, generator, `-`, or `(`"),
        }
    }

    fn matrix(&mut self) -> Result<MatPoly, KernelError> {
        self.expect(Tok::LBracket, "`[`")?;
        let mut rows: Vec<Vec<SymPoly>> = Vec::new();
        loop {
            self.expect(Tok::LBracket, "`[` opening a row")?;
            let mut row = vec![self.expr()?];
            while self.peek().tok == Tok::Comma {
                self.next();
                row.push(self.expr()?);
            }
            self.expect(Tok::RBracket, "`]` closing a row")?;
            rows.push(row);
            match self.peek().tok {
                Tok::Comma => {
                    self.next();
                }
                Tok::RBracket => {
                    self.next();
                    break;
                }
                _ => return self.err("expected `,` or `]` after a row"),
            }
        }
        let d = rows.len();
        if rows.iter().any(|r| r.len() != d) {
            return self.err("matrix must be square");
        }
        let entries: Vec<SymPoly> = rows.into_iter().flatten().collect();
        Ok(MatPoly::from_entries(d, entries))
    }
}

/// Either a scalar polynomial or a matrix of them.
#[derive(Clone, Debug)]
pub enum Parsed {
    Scalar(SymPoly),
    Matrix(MatPoly),
}

/// Parse a scalar polynomial expression.
pub fn parse_poly(lie: &LieAlgebra, text: &str) -> Result<SymPoly, KernelError> {
    let mut p = Parser {
        lie,
        toks: lex(text)?,
        pos: 0,
    };
    let out = p.expr()?;
    p.expect(Tok::End, "end of input")?;
    Ok(out)
}

/// Parse a bracketed row-major matrix of polynomial expressions.
pub fn parse_matrix(lie: &LieAlgebra, text: &str) -> Result<MatPoly, KernelError> {
    let mut p = Parser {
        lie,
        toks: lex(text)?,
        pos: 0,
    };
    let out = p.matrix()?;
    p.expect(Tok::End, "end of input")?;
    Ok(out)
}

/// Parse an expression that may or may not carry the matrix wrapper.
pub fn parse_any(lie: &LieAlgebra, text: &str) -> Result<Parsed, KernelError> {
    let trimmed = text.trim_start();
    if trimmed.starts_with('[') {
        Ok(Parsed::Matrix(parse_matrix(lie, text)?))
    } else {
        Ok(Parsed::Scalar(parse_poly(lie, text)?))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lie::sl2;
    use crate::rat::rat;

    #[test]
    fn parses_polynomials() {
        let lie = sl2();
        let p = parse_poly(&lie, "1/2*h + e*f - 2*e^2").unwrap();
        let expect = lie
            .gen_poly(2)
            .scale(&rat(1, 2))
            .add(&lie.mono_poly(&[1, 1, 0]))
            .sub(&lie.mono_poly(&[2, 0, 0]).scale(&rat(2, 1)));
        assert_eq!(p, expect);
        // parenthesized and unary minus
        let q = parse_poly(&lie, "-(e - f)*(e + f)").unwrap();
        let expect = lie
            .mono_poly(&[0, 2, 0])
            .sub(&lie.mono_poly(&[2, 0, 0]));
        assert_eq!(q, expect);
    }

    #[test]
    fn parses_matrices() {
        let lie = sl2();
        let m = parse_matrix(&lie, "[[1/2*h, f], [e, -1/2*h]]").unwrap();
        assert_eq!(m.dim(), 2);
        assert_eq!(*m.entry(0, 1), lie.gen_poly(1));
        assert_eq!(*m.entry(1, 1), lie.gen_poly(2).scale(&rat(-1, 2)));
    }

    #[test]
    fn display_round_trips_through_the_parser() {
        let lie = sl2();
        let names = lie.names().to_vec();
        for text in ["e^2*f - 1/2*h", "3 - e", "[[h, 1], [e*f, 0]]"] {
            match parse_any(&lie, text).unwrap() {
                Parsed::Scalar(p) => {
                    let printed = p.display(&names);
                    assert_eq!(parse_poly(&lie, &printed).unwrap(), p);
                }
                Parsed::Matrix(m) => {
                    let printed = m.display(&names);
                    assert_eq!(parse_matrix(&lie, &printed).unwrap(), m);
                }
            }
        }
    }

    #[test]
    fn errors_carry_positions() {
        let lie = sl2();
        match parse_poly(&lie, "e + %") {
            Err(KernelError::Parse { line, col, .. }) => {
                assert_eq!(line, 1);
                assert_eq!(col, 5);
            }
            other => panic!("expected parse error, got {other:?}"),
        }
        assert!(matches!(
            parse_poly(&lie, "e + zz"),
            Err(KernelError::UnknownGenerator(_))
        ));
        assert!(parse_poly(&lie, "1/0").is_err());
        assert!(parse_matrix(&lie, "[[e, f]]").is_err()); // not square
    }
}
