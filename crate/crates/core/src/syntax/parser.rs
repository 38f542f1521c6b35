use num_bigint::BigInt;

use super::lexer::{tokenize, Tok, Token};
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq)]
pub enum Expr {
    Int(BigInt),
    Sym(String),
    Add(Box<Node>, Box<Node>),
    Sub(Box<Node>, Box<Node>),
    Mul(Box<Node>, Box<Node>),
    Div(Box<Node>, Box<Node>),
    Neg(Box<Node>),
    Pow(Box<Node>, Box<Node>),
    Call(String, Vec<Node>),
}

/// An expression with the position of its first token.
#[derive(Clone, Debug, PartialEq)]
pub struct Node {
    pub expr: Expr,
    pub line: usize,
    pub column: usize,
}

pub fn parse(src: &str, line: usize) -> Result<Node> {
    let tokens = tokenize(src, line)?;
    let mut p = Parser { tokens, pos: 0 };
    let node = p.sum()?;
    match p.peek().tok {
        Tok::End => Ok(node),
        _ => Err(p.error("unexpected input after the expression")),
    }
}

struct Parser {
    tokens: Vec<Token>,
    pos: usize,
}

impl Parser {
    fn peek(&self) -> &Token {
        &self.tokens[self.pos]
    }

    fn next(&mut self) -> Token {
        let t = self.tokens[self.pos].clone();
        if self.pos + 1 < self.tokens.len() {
            self.pos += 1;
        }
        t
    }

    fn error(&self, message: &str) -> Error {
        let t = self.peek();
        let found = match &t.tok {
            Tok::End => "end of input".to_string(),
            other => format!("{other:?}"),
        };
        Error::Syntax {
            line: t.line,
            column: t.column,
            message: format!("{message}, found {found}"),
        }
    }

    fn expect(&mut self, tok: Tok, what: &str) -> Result<()> {
        if self.peek().tok == tok {
            self.next();
            Ok(())
        } else {
            Err(self.error(&format!("expected {what}")))
        }
    }

    fn node(t: &Token, expr: Expr) -> Node {
        Node {
            expr,
            line: t.line,
            column: t.column,
        }
    }

    fn sum(&mut self) -> Result<Node> {
        let start = self.peek().clone();
        let mut lhs = self.product()?;
        loop {
            let op = self.peek().tok.clone();
            match op {
                Tok::Plus | Tok::Minus => {
                    self.next();
                    let rhs = Box::new(self.product()?);
                    let expr = if op == Tok::Plus {
                        Expr::Add(Box::new(lhs), rhs)
                    } else {
                        Expr::Sub(Box::new(lhs), rhs)
                    };
                    lhs = Self::node(&start, expr);
                }
                _ => return Ok(lhs),
            }
        }
    }

    fn product(&mut self) -> Result<Node> {
        let start = self.peek().clone();
        let mut lhs = self.unary()?;
        loop {
            let op = self.peek().tok.clone();
            match op {
                Tok::Star | Tok::Slash => {
                    self.next();
                    let rhs = Box::new(self.unary()?);
                    let expr = if op == Tok::Star {
                        Expr::Mul(Box::new(lhs), rhs)
                    } else {
                        Expr::Div(Box::new(lhs), rhs)
                    };
                    lhs = Self::node(&start, expr);
                }
                _ => return Ok(lhs),
            }
        }
    }

    fn unary(&mut self) -> Result<Node> {
        let start = self.peek().clone();
        match start.tok {
            Tok::Minus => {
                self.next();
                let inner = self.unary()?;
                Ok(Self::node(&start, Expr::Neg(Box::new(inner))))
            }
            Tok::Plus => {
                self.next();
                self.unary()
            }
            _ => self.power(),
        }
    }

    fn power(&mut self) -> Result<Node> {
        let start = self.peek().clone();
        let base = self.primary()?;
        if self.peek().tok == Tok::Caret {
            self.next();
            let exp = self.unary()?;
            return Ok(Self::node(&start, Expr::Pow(Box::new(base), Box::new(exp))));
        }
        Ok(base)
    }

    fn primary(&mut self) -> Result<Node> {
        let t = self.peek().clone();
        match t.tok {
            Tok::Int(ref n) => {
                self.next();
                Ok(Self::node(&t, Expr::Int(n.clone())))
            }
            Tok::Ident(ref name) => {
                self.next();
                if self.peek().tok != Tok::LParen {
                    return Ok(Self::node(&t, Expr::Sym(name.clone())));
                }
                self.next();
                let mut args = Vec::new();
                if self.peek().tok != Tok::RParen {
                    loop {
                        args.push(self.sum()?);
                        if self.peek().tok == Tok::Comma {
                            self.next();
                            continue;
                        }
                        break;
                    }
                }
                self.expect(Tok::RParen, "')'")?;
                Ok(Self::node(&t, Expr::Call(name.clone(), args)))
            }
            Tok::LParen => {
                self.next();
                let inner = self.sum()?;
                self.expect(Tok::RParen, "')'")?;
                Ok(inner)
            }
            _ => Err(self.error("expected an expression")),
        }
    }
}
