//! Expression grammar shared by every subcommand.
//!
//! ```text
//! tensor := expr ('ox' expr){0,2}
//! expr   := '-'? term (('+'|'-') term)*
//! term   := factor ('*' factor)*
//! factor := primary ('^' uint)*
//! primary:= scalar | gen | '[' expr ',' expr ']' | '{' expr ',' expr '}' | '(' expr ')'
//! gen    := ('b'|'f') uint ('+'|'-') | 'g' | 'K+' | 'K-'
//! scalar := uint ('/' uint)?
//! ```
//!
//! Tokenization is longest-match, so the sign of a generator token binds to
//! the token: `b1+ + b1-` and `b1++b1-` parse identically.  Whitespace is
//! insignificant.  Parse errors carry line and column.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use parastat::Scalar;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Ast {
    Scalar(Scalar),
    Gen(String),
    Neg(Box<Ast>),
    Add(Box<Ast>, Box<Ast>),
    Sub(Box<Ast>, Box<Ast>),
    Mul(Box<Ast>, Box<Ast>),
    Pow(Box<Ast>, u32),
    Commutator(Box<Ast>, Box<Ast>),
    Anticommutator(Box<Ast>, Box<Ast>),
    Tensor(Vec<Ast>),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseError {
    pub line: usize,
    pub column: usize,
    pub message: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}: {}", self.line, self.column, self.message)
    }
}

impl std::error::Error for ParseError {}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Token {
    Int(String),
    Gen(String),
    Ox,
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    Comma,
    LBracket,
    RBracket,
    LBrace,
    RBrace,
    LParen,
    RParen,
}

impl Token {
    fn describe(&self) -> String {
        match self {
            Token::Int(s) => format!("integer `{s}`"),
            Token::Gen(s) => format!("generator `{s}`"),
            Token::Ox => "`ox`".into(),
            Token::Plus => "`+`".into(),
            Token::Minus => "`-`".into(),
            Token::Star => "`*`".into(),
            Token::Slash => "`/`".into(),
            Token::Caret => "`^`".into(),
            Token::Comma => "`,`".into(),
            Token::LBracket => "`[`".into(),
            Token::RBracket => "`]`".into(),
            Token::LBrace => "`{`".into(),
            Token::RBrace => "`}`".into(),
            Token::LParen => "`(`".into(),
            Token::RParen => "`)`".into(),
        }
    }
}

struct Lexer<'a> {
    src: &'a [u8],
    pos: usize,
    line: usize,
    column: usize,
}

impl<'a> Lexer<'a> {
    fn new(src: &'a str) -> Self {
        Lexer {
            src: src.as_bytes(),
            pos: 0,
            line: 1,
            column: 1,
        }
    }

    fn error(&self, message: impl Into<String>) -> ParseError {
        self.error_at(self.line, self.column, message)
    }

    fn error_at(&self, line: usize, column: usize, message: impl Into<String>) -> ParseError {
        ParseError {
            line,
            column,
            message: message.into(),
        }
    }

    fn bump(&mut self) -> u8 {
        let c = self.src[self.pos];
        self.pos += 1;
        if c == b'\n' {
            self.line += 1;
            self.column = 1;
        } else {
            self.column += 1;
        }
        c
    }

    fn tokenize(mut self) -> Result<Vec<(Token, usize, usize)>, ParseError> {
        let mut out = Vec::new();
        while self.pos < self.src.len() {
            let c = self.src[self.pos];
            if c.is_ascii_whitespace() {
                self.bump();
                continue;
            }
            let (line, column) = (self.line, self.column);
            let token = match c {
                b'0'..=b'9' => {
                    let mut digits = String::new();
                    while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
                        digits.push(self.bump() as char);
                    }
                    Token::Int(digits)
                }
                b'b' | b'f' => {
                    let prefix = self.bump() as char;
                    let mut digits = String::new();
                    while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
                        digits.push(self.bump() as char);
                    }
                    if digits.is_empty() {
                        return Err(self.error_at(
                            line,
                            column,
                            format!("expected a mode index after `{prefix}`"),
                        ));
                    }
                    let sign = match self.src.get(self.pos) {
                        Some(b'+') | Some(b'-') => self.bump() as char,
                        _ => {
                            return Err(self.error_at(
                                line,
                                column,
                                format!("generator `{prefix}{digits}` is missing its sign"),
                            ))
                        }
                    };
                    Token::Gen(format!("{prefix}{digits}{sign}"))
                }
                b'g' => {
                    self.bump();
                    Token::Gen("g".into())
                }
                b'K' => {
                    self.bump();
                    match self.src.get(self.pos) {
                        Some(b'+') | Some(b'-') => {
                            let sign = self.bump() as char;
                            Token::Gen(format!("K{sign}"))
                        }
                        _ => return Err(self.error("`K` must be followed by `+` or `-`")),
                    }
                }
                b'o' => {
                    self.bump();
                    if self.src.get(self.pos) == Some(&b'x') {
                        self.bump();
                        Token::Ox
                    } else {
                        return Err(self.error("unknown token starting with `o` (expected `ox`)"));
                    }
                }
                b'+' => {
                    self.bump();
                    Token::Plus
                }
                b'-' => {
                    self.bump();
                    Token::Minus
                }
                b'*' => {
                    self.bump();
                    Token::Star
                }
                b'/' => {
                    self.bump();
                    Token::Slash
                }
                b'^' => {
                    self.bump();
                    Token::Caret
                }
                b',' => {
                    self.bump();
                    Token::Comma
                }
                b'[' => {
                    self.bump();
                    Token::LBracket
                }
                b']' => {
                    self.bump();
                    Token::RBracket
                }
                b'{' => {
                    self.bump();
                    Token::LBrace
                }
                b'}' => {
                    self.bump();
                    Token::RBrace
                }
                b'(' => {
                    self.bump();
                    Token::LParen
                }
                b')' => {
                    self.bump();
                    Token::RParen
                }
                other => {
                    return Err(self.error(format!("unexpected character `{}`", other as char)))
                }
            };
            out.push((token, line, column));
        }
        Ok(out)
    }
}

struct Parser {
    tokens: Vec<(Token, usize, usize)>,
    pos: usize,
    end: (usize, usize),
}

impl Parser {
    fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.pos).map(|(t, _, _)| t)
    }

    fn here(&self) -> (usize, usize) {
        self.tokens
            .get(self.pos)
            .map(|(_, l, c)| (*l, *c))
            .unwrap_or(self.end)
    }

    fn error(&self, message: impl Into<String>) -> ParseError {
        let (line, column) = self.here();
        ParseError {
            line,
            column,
            message: message.into(),
        }
    }

    fn next(&mut self) -> Option<Token> {
        let t = self.tokens.get(self.pos).map(|(t, _, _)| t.clone());
        if t.is_some() {
            self.pos += 1;
        }
        t
    }

    fn expect(&mut self, want: Token) -> Result<(), ParseError> {
        match self.next() {
            Some(t) if t == want => Ok(()),
            Some(t) => Err(ParseError {
                line: self.tokens[self.pos - 1].1,
                column: self.tokens[self.pos - 1].2,
                message: format!("expected {}, found {}", want.describe(), t.describe()),
            }),
            None => Err(self.error(format!("expected {}, found end of input", want.describe()))),
        }
    }

    fn parse_expr(&mut self) -> Result<Ast, ParseError> {
        let mut node = if self.peek() == Some(&Token::Minus) {
            self.next();
            Ast::Neg(Box::new(self.parse_tensor_term()?))
        } else {
            self.parse_tensor_term()?
        };
        loop {
            match self.peek() {
                Some(Token::Plus) => {
                    self.next();
                    node = Ast::Add(Box::new(node), Box::new(self.parse_tensor_term()?));
                }
                Some(Token::Minus) => {
                    self.next();
                    node = Ast::Sub(Box::new(node), Box::new(self.parse_tensor_term()?));
                }
                _ => return Ok(node),
            }
        }
    }

    fn parse_tensor_term(&mut self) -> Result<Ast, ParseError> {
        let mut parts = vec![self.parse_term()?];
        while self.peek() == Some(&Token::Ox) {
            self.next();
            parts.push(self.parse_term()?);
            if parts.len() > 3 {
                return Err(self.error("tensors of rank above 3 are not supported"));
            }
        }
        Ok(if parts.len() == 1 {
            parts.pop().unwrap()
        } else {
            Ast::Tensor(parts)
        })
    }

    fn parse_term(&mut self) -> Result<Ast, ParseError> {
        let mut node = self.parse_factor()?;
        while self.peek() == Some(&Token::Star) {
            self.next();
            node = Ast::Mul(Box::new(node), Box::new(self.parse_factor()?));
        }
        Ok(node)
    }

    fn parse_factor(&mut self) -> Result<Ast, ParseError> {
        let mut node = self.parse_primary()?;
        while self.peek() == Some(&Token::Caret) {
            self.next();
            match self.next() {
                Some(Token::Int(digits)) => {
                    let exp: u32 = digits
                        .parse()
                        .map_err(|_| self.error(format!("exponent `{digits}` is out of range")))?;
                    node = Ast::Pow(Box::new(node), exp);
                }
                _ => return Err(self.error("expected a nonnegative integer exponent after `^`")),
            }
        }
        Ok(node)
    }

    fn parse_primary(&mut self) -> Result<Ast, ParseError> {
        match self.next() {
            Some(Token::Int(digits)) => {
                let numer = BigInt::from_str(&digits).unwrap();
                if self.peek() == Some(&Token::Slash) {
                    self.next();
                    match self.next() {
                        Some(Token::Int(d)) => {
                            let denom = BigInt::from_str(&d).unwrap();
                            if denom == BigInt::from(0) {
                                return Err(self.error("zero denominator"));
                            }
                            Ok(Ast::Scalar(Scalar::new(numer, denom)))
                        }
                        _ => Err(self.error("expected an integer denominator after `/`")),
                    }
                } else {
                    Ok(Ast::Scalar(Scalar::from(numer)))
                }
            }
            Some(Token::Gen(token)) => Ok(Ast::Gen(token)),
            Some(Token::LBracket) => {
                let left = self.parse_expr()?;
                self.expect(Token::Comma)?;
                let right = self.parse_expr()?;
                self.expect(Token::RBracket)?;
                Ok(Ast::Commutator(Box::new(left), Box::new(right)))
            }
            Some(Token::LBrace) => {
                let left = self.parse_expr()?;
                self.expect(Token::Comma)?;
                let right = self.parse_expr()?;
                self.expect(Token::RBrace)?;
                Ok(Ast::Anticommutator(Box::new(left), Box::new(right)))
            }
            Some(Token::LParen) => {
                let inner = self.parse_expr()?;
                self.expect(Token::RParen)?;
                Ok(inner)
            }
            Some(t) => Err(ParseError {
                line: self.tokens[self.pos - 1].1,
                column: self.tokens[self.pos - 1].2,
                message: format!("expected an expression, found {}", t.describe()),
            }),
            None => Err(self.error("expected an expression, found end of input")),
        }
    }
}

/// Parses a full expression (possibly a tensor).
pub fn parse(source: &str) -> Result<Ast, ParseError> {
    if source.trim().is_empty() {
        return Err(ParseError {
            line: 1,
            column: 1,
            message: "empty expression".into(),
        });
    }
    let lexer = Lexer::new(source);
    let end = {
        let lines: Vec<&str> = source.lines().collect();
        let line = lines.len().max(1);
        (line, lines.last().map(|l| l.len() + 1).unwrap_or(1))
    };
    let tokens = lexer.tokenize()?;
    let mut parser = Parser {
        tokens,
        pos: 0,
        end,
    };
    let ast = parser.parse_expr()?;
    if let Some(t) = parser.peek() {
        return Err(parser.error(format!("trailing input starting at {}", t.describe())));
    }
    Ok(ast)
}

fn precedence(ast: &Ast) -> u8 {
    match ast {
        Ast::Add(..) | Ast::Sub(..) | Ast::Neg(_) => 1,
        Ast::Tensor(_) => 2,
        Ast::Mul(..) => 3,
        Ast::Pow(..) => 4,
        Ast::Scalar(_) | Ast::Gen(_) | Ast::Commutator(..) | Ast::Anticommutator(..) => 5,
    }
}

fn print_at(ast: &Ast, min: u8, out: &mut String) {
    let wrap = precedence(ast) < min;
    if wrap {
        out.push('(');
    }
    match ast {
        Ast::Scalar(c) => out.push_str(&parastat::scalar::render(c)),
        Ast::Gen(t) => out.push_str(t),
        Ast::Neg(x) => {
            out.push('-');
            print_at(x, 2, out);
        }
        Ast::Add(l, r) => {
            print_at(l, 1, out);
            out.push_str(" + ");
            print_at(r, 2, out);
        }
        Ast::Sub(l, r) => {
            print_at(l, 1, out);
            out.push_str(" - ");
            print_at(r, 2, out);
        }
        Ast::Mul(l, r) => {
            print_at(l, 3, out);
            out.push('*');
            print_at(r, 4, out);
        }
        Ast::Pow(b, e) => {
            print_at(b, 5, out);
            out.push('^');
            out.push_str(&e.to_string());
        }
        Ast::Commutator(l, r) => {
            out.push('[');
            print_at(l, 1, out);
            out.push_str(", ");
            print_at(r, 1, out);
            out.push(']');
        }
        Ast::Anticommutator(l, r) => {
            out.push('{');
            print_at(l, 1, out);
            out.push_str(", ");
            print_at(r, 1, out);
            out.push('}');
        }
        Ast::Tensor(parts) => {
            for (i, p) in parts.iter().enumerate() {
                if i > 0 {
                    out.push_str(" ox ");
                }
                print_at(p, 3, out);
            }
        }
    }
    if wrap {
        out.push(')');
    }
}

/// Pretty-prints with minimal parentheses; `parse(print(x)) = x`.
pub fn print(ast: &Ast) -> String {
    let mut out = String::new();
    print_at(ast, 0, &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn roundtrip(src: &str) -> Ast {
        let ast = parse(src).unwrap();
        let printed = print(&ast);
        let again = parse(&printed).unwrap();
        assert_eq!(ast, again, "printed form `{printed}`");
        ast
    }

    #[test]
    fn worked_grammar_examples() {
        let ast = roundtrip("[{b1+,b1-},b1-]");
        assert_eq!(
            ast,
            Ast::Commutator(
                Box::new(Ast::Anticommutator(
                    Box::new(Ast::Gen("b1+".into())),
                    Box::new(Ast::Gen("b1-".into()))
                )),
                Box::new(Ast::Gen("b1-".into()))
            )
        );
        let ast = roundtrip("K+*K- - 1");
        assert_eq!(
            ast,
            Ast::Sub(
                Box::new(Ast::Mul(
                    Box::new(Ast::Gen("K+".into())),
                    Box::new(Ast::Gen("K-".into()))
                )),
                Box::new(Ast::Scalar(parastat::scalar::int(1)))
            )
        );
        let ast = roundtrip("b1+ ox 1 + g ox b1+");
        match ast {
            Ast::Add(l, r) => {
                assert!(matches!(*l, Ast::Tensor(ref parts) if parts.len() == 2));
                assert!(matches!(*r, Ast::Tensor(ref parts) if parts.len() == 2));
            }
            other => panic!("expected a sum of rank-2 tensors, got {other:?}"),
        }
    }

    #[test]
    fn longest_match_signs() {
        assert_eq!(parse("b1++b1-").unwrap(), parse("b1+ + b1-").unwrap());
        assert_eq!(parse("b1+-b1-").unwrap(), parse("b1+ - b1-").unwrap());
    }

    #[test]
    fn rendered_element_forms_parse() {
        roundtrip("-2*b1-");
        roundtrip("1/2*b1+*b1- + 1/2*b1-*b1+");
        roundtrip("-b1+ + 3*g");
        roundtrip("b1+^2*b1-^3");
        roundtrip("-2*b1- ox 1 - g ox b1+ ox g");
    }

    #[test]
    fn errors_carry_position() {
        let err = parse("b1+ + b2").unwrap_err();
        assert_eq!((err.line, err.column), (1, 7));
        let err = parse("[b1+, b1-").unwrap_err();
        assert!(err.message.contains("`]`"));
        let err = parse("1 ox 1 ox 1 ox 1").unwrap_err();
        assert!(err.message.contains("rank"));
        let err = parse("x").unwrap_err();
        assert_eq!(err.column, 1);
    }
}
