//! Surface syntax: a small expression language for elements of the free
//! algebra, plus the plain-text reduction-system format.
//!
//! Grammar (explicit `*` required, no juxtaposition):
//!
//! ```text
//! expr   := term (('+' | '-') term)*
//! term   := '-' term | prod
//! prod   := power (('*' | '/') power)*
//! power  := atom ('^' nonneg-integer)?
//! atom   := integer | 'q' | 'A' | 'B' | 'C' | 'g' | '(' expr ')' | '[' expr ',' expr ']'
//! ```
//!
//! `g` denotes γ, `[x, y]` the Lie bracket, and `/` requires a scalar
//! divisor. Precedence is `^` over `*` and `/` over unary minus over binary
//! `+`/`-`.

use num_bigint::BigInt;
use num_traits::ToPrimitive;
use thiserror::Error;

use crate::exactnum::QRat;
use crate::freealg::{Letter, NcPoly, Word};
use crate::rewrite::{ReductionRule, ReductionSystem, RewriteError};

#[derive(Error, Debug, Clone, PartialEq, Eq)]
#[error("{line}:{col}: {message}")]
pub struct ParseError {
    pub line: u32,
    pub col: u32,
    pub message: String,
}

impl ParseError {
    fn new(line: u32, col: u32, message: impl Into<String>) -> Self {
        ParseError {
            line,
            col,
            message: message.into(),
        }
    }
}

/// A parsed expression node with its source position.
#[derive(Clone, Debug, PartialEq)]
pub struct Expr {
    pub kind: ExprKind,
    pub line: u32,
    pub col: u32,
}

#[derive(Clone, Debug, PartialEq)]
pub enum ExprKind {
    Int(BigInt),
    QSym,
    Letter(Letter),
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    Div(Box<Expr>, Box<Expr>),
    Neg(Box<Expr>),
    Pow(Box<Expr>, u32),
    Bracket(Box<Expr>, Box<Expr>),
}

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Int(BigInt),
    QSym,
    Letter(Letter),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
    LBracket,
    RBracket,
    Comma,
}

#[derive(Clone, Debug)]
struct Token {
    tok: Tok,
    line: u32,
    col: u32,
}

fn lex(text: &str) -> Result<Vec<Token>, ParseError> {
    let chars: Vec<char> = text.chars().collect();
    let mut out = Vec::new();
    let mut line = 1u32;
    let mut col = 1u32;
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        let (tline, tcol) = (line, col);
        let advance = |i: &mut usize, line: &mut u32, col: &mut u32, c: char| {
            *i += 1;
            if c == '\n' {
                *line += 1;
                *col = 1;
            } else {
                *col += 1;
            }
        };
        if c.is_whitespace() {
            advance(&mut i, &mut line, &mut col, c);
            continue;
        }
        if c.is_ascii_digit() {
            let mut digits = String::new();
            while i < chars.len() && chars[i].is_ascii_digit() {
                digits.push(chars[i]);
                i += 1;
                col += 1;
            }
            let value: BigInt = digits.parse().expect("digit string");
            out.push(Token {
                tok: Tok::Int(value),
                line: tline,
                col: tcol,
            });
            continue;
        }
        let tok = match c {
            '+' => Tok::Plus,
            '-' => Tok::Minus,
            '*' => Tok::Star,
            '/' => Tok::Slash,
            '^' => Tok::Caret,
            '(' => Tok::LParen,
            ')' => Tok::RParen,
            '[' => Tok::LBracket,
            ']' => Tok::RBracket,
            ',' => Tok::Comma,
            'q' => Tok::QSym,
            _ => match Letter::from_char(c) {
                Some(l) => Tok::Letter(l),
                None => {
                    return Err(ParseError::new(
                        tline,
                        tcol,
                        format!("unknown symbol '{c}'"),
                    ))
                }
            },
        };
        advance(&mut i, &mut line, &mut col, c);
        out.push(Token {
            tok,
            line: tline,
            col: tcol,
        });
    }
    Ok(out)
}

struct Parser {
    tokens: Vec<Token>,
    pos: usize,
    end_line: u32,
    end_col: u32,
}

impl Parser {
    fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.pos)
    }

    fn next(&mut self) -> Option<Token> {
        let t = self.tokens.get(self.pos).cloned();
        if t.is_some() {
            self.pos += 1;
        }
        t
    }

    fn here(&self) -> (u32, u32) {
        self.peek()
            .map_or((self.end_line, self.end_col), |t| (t.line, t.col))
    }

    fn error_here(&self, message: impl Into<String>) -> ParseError {
        let (line, col) = self.here();
        ParseError::new(line, col, message)
    }

    fn expect(&mut self, tok: Tok, what: &str) -> Result<Token, ParseError> {
        match self.peek() {
            Some(t) if t.tok == tok => Ok(self.next().unwrap()),
            _ => Err(self.error_here(format!("expected {what}"))),
        }
    }

    fn expr(&mut self) -> Result<Expr, ParseError> {
        let mut lhs = self.term()?;
        while let Some(t) = self.peek() {
            let op = match t.tok {
                Tok::Plus => ExprKind::Add as fn(_, _) -> _,
                Tok::Minus => ExprKind::Sub as fn(_, _) -> _,
                _ => break,
            };
            let t = self.next().unwrap();
            let rhs = self.term()?;
            lhs = Expr {
                kind: op(Box::new(lhs), Box::new(rhs)),
                line: t.line,
                col: t.col,
            };
        }
        Ok(lhs)
    }

    fn term(&mut self) -> Result<Expr, ParseError> {
        if let Some(t) = self.peek() {
            if t.tok == Tok::Minus {
                let t = self.next().unwrap();
                let inner = self.term()?;
                return Ok(Expr {
                    kind: ExprKind::Neg(Box::new(inner)),
                    line: t.line,
                    col: t.col,
                });
            }
        }
        self.prod()
    }

    fn prod(&mut self) -> Result<Expr, ParseError> {
        let mut lhs = self.power()?;
        while let Some(t) = self.peek() {
            let op = match t.tok {
                Tok::Star => ExprKind::Mul as fn(_, _) -> _,
                Tok::Slash => ExprKind::Div as fn(_, _) -> _,
                _ => break,
            };
            let t = self.next().unwrap();
            let rhs = self.power()?;
            lhs = Expr {
                kind: op(Box::new(lhs), Box::new(rhs)),
                line: t.line,
                col: t.col,
            };
        }
        Ok(lhs)
    }

    fn power(&mut self) -> Result<Expr, ParseError> {
        let base = self.atom()?;
        if self.peek().is_some_and(|t| t.tok == Tok::Caret) {
            self.next();
            let (line, col) = self.here();
            match self.next() {
                Some(Token {
                    tok: Tok::Int(n), ..
                }) => {
                    let e = n.to_u32().ok_or_else(|| {
                        ParseError::new(line, col, "exponent too large")
                    })?;
                    return Ok(Expr {
                        line: base.line,
                        col: base.col,
                        kind: ExprKind::Pow(Box::new(base), e),
                    });
                }
                _ => {
                    return Err(ParseError::new(
                        line,
                        col,
                        "exponent must be a nonnegative integer literal",
                    ))
                }
            }
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<Expr, ParseError> {
        let Some(t) = self.next() else {
            return Err(self.error_here("unexpected end of input"));
        };
        let (line, col) = (t.line, t.col);
        let kind = match t.tok {
            Tok::Int(n) => ExprKind::Int(n),
            Tok::QSym => ExprKind::QSym,
            Tok::Letter(l) => ExprKind::Letter(l),
            Tok::LParen => {
                let inner = self.expr()?;
                self.expect(Tok::RParen, "')'")?;
                return Ok(inner);
            }
            Tok::LBracket => {
                let first = self.expr()?;
                self.expect(Tok::Comma, "',' between bracket arguments")?;
                let second = self.expr()?;
                self.expect(Tok::RBracket, "']'")?;
                ExprKind::Bracket(Box::new(first), Box::new(second))
            }
            _ => {
                return Err(ParseError::new(line, col, "expected an operand"));
            }
        };
        Ok(Expr { kind, line, col })
    }
}

/// Parses source text into an expression tree.
pub fn parse(text: &str) -> Result<Expr, ParseError> {
    let tokens = lex(text)?;
    let lines = text.lines().count().max(1) as u32;
    let last_len = text.lines().last().map_or(0, str::len) as u32;
    let mut p = Parser {
        tokens,
        pos: 0,
        end_line: lines,
        end_col: last_len + 1,
    };
    let e = p.expr()?;
    if let Some(t) = p.peek() {
        return Err(ParseError::new(t.line, t.col, "unexpected trailing input"));
    }
    Ok(e)
}

/// Evaluates an expression tree to an element of the free algebra.
pub fn elaborate(expr: &Expr) -> Result<NcPoly<QRat>, ParseError> {
    match &expr.kind {
        ExprKind::Int(n) => Ok(NcPoly::from_scalar(QRat::from_rational(
            num_rational::BigRational::from_integer(n.clone()),
        ))),
        ExprKind::QSym => Ok(NcPoly::from_scalar(QRat::q())),
        ExprKind::Letter(l) => Ok(NcPoly::from_letter(*l)),
        ExprKind::Add(a, b) => Ok(&elaborate(a)? + &elaborate(b)?),
        ExprKind::Sub(a, b) => Ok(&elaborate(a)? - &elaborate(b)?),
        ExprKind::Mul(a, b) => Ok(elaborate(a)?.multiply(&elaborate(b)?)),
        ExprKind::Div(a, b) => {
            let num = elaborate(a)?;
            let den = elaborate(b)?;
            let scalar = den.as_scalar().ok_or_else(|| {
                ParseError::new(b.line, b.col, "divisor must be a scalar")
            })?;
            if scalar.is_zero() {
                return Err(ParseError::new(b.line, b.col, "division by zero"));
            }
            Ok(num.scale(&scalar.inv()))
        }
        ExprKind::Neg(a) => Ok(-&elaborate(a)?),
        ExprKind::Pow(a, e) => Ok(elaborate(a)?.pow(*e)),
        ExprKind::Bracket(a, b) => Ok(elaborate(a)?.lie_bracket(&elaborate(b)?)),
    }
}

/// Parses and evaluates in one step.
pub fn parse_poly(text: &str) -> Result<NcPoly<QRat>, ParseError> {
    elaborate(&parse(text)?)
}

#[derive(Error, Debug)]
pub enum SystemParseError {
    #[error("line {line}: expected `name: LHS -> expr`")]
    MissingSeparator { line: usize },
    #[error("line {line}: '{ch}' is not a letter (use A, B, C, g)")]
    BadLetter { line: usize, ch: char },
    #[error("line {line}: {source}")]
    BadExpression { line: usize, source: ParseError },
    #[error(transparent)]
    BadRule(#[from] RewriteError),
}

/// Parses the plain-text reduction-system format: one `name: LHS -> expr`
/// per line, `#` comments and blank lines ignored. The LHS is a bare letter
/// string like `AB`; the right-hand side uses the expression grammar.
pub fn parse_system(name: &str, text: &str) -> Result<ReductionSystem<QRat>, SystemParseError> {
    let mut rules = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let (rule_name, rest) = line
            .split_once(':')
            .ok_or(SystemParseError::MissingSeparator { line: line_no })?;
        let (lhs_text, rhs_text) = rest
            .split_once("->")
            .ok_or(SystemParseError::MissingSeparator { line: line_no })?;
        let mut letters = Vec::new();
        for ch in lhs_text.chars() {
            if ch.is_whitespace() || ch == '*' {
                continue;
            }
            letters.push(
                Letter::from_char(ch).ok_or(SystemParseError::BadLetter { line: line_no, ch })?,
            );
        }
        let rhs = parse_poly(rhs_text).map_err(|source| SystemParseError::BadExpression {
            line: line_no,
            source,
        })?;
        rules.push(ReductionRule::new(
            rule_name.trim(),
            Word::from_letters(&letters),
            rhs,
        )?);
    }
    Ok(ReductionSystem::new(name, rules)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::freealg::Word;

    fn word(s: &str) -> Word {
        Word::from_letters(
            &s.chars()
                .map(|c| Letter::from_char(c).unwrap())
                .collect::<Vec<_>>(),
        )
    }

    #[test]
    fn parses_basic_combinations() {
        let p = parse_poly("A*B - q*B*A").unwrap();
        assert_eq!(p.coeff(&word("AB")), QRat::from_int(1));
        assert_eq!(p.coeff(&word("BA")), -QRat::q());
        assert_eq!(p.num_terms(), 2);
    }

    #[test]
    fn brackets_elaborate_via_the_lie_bracket() {
        let p = parse_poly("[A,[A,B]]").unwrap();
        assert_eq!(p.coeff(&word("AAB")), QRat::from_int(1));
        assert_eq!(p.coeff(&word("ABA")), QRat::from_int(-2));
        assert_eq!(p.coeff(&word("BAA")), QRat::from_int(1));
    }

    #[test]
    fn scalar_division_and_powers() {
        let p = parse_poly("(1/(1-q))*g - (q/(1-q))*C").unwrap();
        let inv = QRat::one_minus_q().inv();
        assert_eq!(p.coeff(&word("g")), inv);
        assert_eq!(p.coeff(&word("C")), -&(&QRat::q() * &inv));
        let p = parse_poly("q^3*A^2").unwrap();
        assert_eq!(p.coeff(&word("AA")), QRat::q_pow(3));
        assert_eq!(parse_poly("(A+B)^0").unwrap(), NcPoly::one());
    }

    #[test]
    fn error_positions_and_messages() {
        let err = parse("A*B +\n x").unwrap_err();
        assert_eq!((err.line, err.col), (2, 2));
        assert!(err.message.contains("unknown symbol"));
        let err = parse("A^-1").unwrap_err();
        assert!(err.message.contains("exponent"));
        let err = parse("A*(B").unwrap_err();
        assert!(err.message.contains("')'"));
        let err = parse_poly("A/B").unwrap_err();
        assert!(err.message.contains("divisor must be a scalar"));
        let err = parse_poly("A/(1-1)").unwrap_err();
        assert!(err.message.contains("division by zero"));
        let err = parse("").unwrap_err();
        assert!(err.message.contains("unexpected end of input"));
    }

    #[test]
    fn unary_minus_binds_below_product() {
        let p = parse_poly("-q*A").unwrap();
        assert_eq!(p.coeff(&word("A")), -QRat::q());
        let p = parse_poly("2 - -3").unwrap();
        assert_eq!(p.as_scalar(), Some(QRat::from_int(5)));
    }

    #[test]
    fn round_trips_pretty_output() {
        for text in [
            "A*B - q*B*A",
            "(1/(1-q))*g - (q/(1-q))*C",
            "[A,[A,B]] + 7",
            "g*C*B*A - 2*q^4*A",
        ] {
            let p = parse_poly(text).unwrap();
            let printed = p.pretty(false);
            let back = parse_poly(&printed).unwrap();
            assert_eq!(back, p, "round trip failed on {printed}");
        }
    }

    #[test]
    fn parses_reduction_system_files() {
        let text = "
            # the three-generator system
            lambda: AB -> g + q*B*A
            sigma:  Ag -> g*A
            tau:    Bg -> g*B
        ";
        let sys = parse_system("user", text).unwrap();
        assert_eq!(sys.rules().len(), 3);
        assert_eq!(sys.rule("lambda").unwrap().lhs(), &word("AB"));
        let ambs = sys.find_ambiguities();
        assert_eq!(ambs.len(), 1);
        // Bad inputs.
        assert!(matches!(
            parse_system("x", "no arrow here"),
            Err(SystemParseError::MissingSeparator { .. })
        ));
        assert!(matches!(
            parse_system("x", "r: AZ -> g"),
            Err(SystemParseError::BadLetter { .. })
        ));
        assert!(matches!(
            parse_system("x", "r: BA -> A*B"),
            Err(SystemParseError::BadRule(_))
        ));
    }
}
