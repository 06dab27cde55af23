//! Recursive-descent parser for the cograph expression grammar:
//!
//! ```text
//! expr   := term { "+" term }          disjoint union
//! term   := factor { "*" factor }      join
//! factor := INT                        INT isolated vertices
//!         | INT "(" expr ")"           INT disjoint copies of expr
//!         | "(" expr ")"
//! ```
//!
//! Whitespace is ignored; precedence is copy > `*` > `+`.

use super::{Cotree, CotreeError, InteriorKind, RawTree};

pub fn parse_expression(text: &str) -> Result<Cotree, CotreeError> {
    let chars: Vec<char> = text.chars().collect();
    let mut p = Parser { chars, pos: 0 };
    p.skip_ws();
    if p.at_end() {
        return Err(CotreeError::EmptyExpression);
    }
    let raw = p.expr()?;
    p.skip_ws();
    if !p.at_end() {
        return Err(CotreeError::Parse {
            pos: p.pos,
            msg: format!("unexpected `{}`", p.chars[p.pos]),
        });
    }
    Ok(Cotree::from_raw(raw))
}

struct Parser {
    chars: Vec<char>,
    pos: usize,
}

impl Parser {
    fn at_end(&self) -> bool {
        self.pos >= self.chars.len()
    }

    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).copied()
    }

    fn skip_ws(&mut self) {
        while matches!(self.peek(), Some(c) if c.is_whitespace()) {
            self.pos += 1;
        }
    }

    fn eat(&mut self, c: char) -> Result<(), CotreeError> {
        self.skip_ws();
        if self.peek() == Some(c) {
            self.pos += 1;
            Ok(())
        } else {
            Err(CotreeError::Parse {
                pos: self.pos,
                msg: format!("expected `{c}`"),
            })
        }
    }

    fn expr(&mut self) -> Result<RawTree, CotreeError> {
        let mut terms = vec![self.term()?];
        loop {
            self.skip_ws();
            if self.peek() == Some('+') {
                self.pos += 1;
                terms.push(self.term()?);
            } else {
                break;
            }
        }
        Ok(if terms.len() == 1 {
            terms.pop().unwrap()
        } else {
            RawTree::Interior(InteriorKind::Union, terms)
        })
    }

    fn term(&mut self) -> Result<RawTree, CotreeError> {
        let mut factors = vec![self.factor()?];
        loop {
            self.skip_ws();
            if self.peek() == Some('*') {
                self.pos += 1;
                factors.push(self.factor()?);
            } else {
                break;
            }
        }
        Ok(if factors.len() == 1 {
            factors.pop().unwrap()
        } else {
            RawTree::Interior(InteriorKind::Join, factors)
        })
    }

    fn factor(&mut self) -> Result<RawTree, CotreeError> {
        self.skip_ws();
        match self.peek() {
            Some('(') => {
                self.pos += 1;
                let inner = self.expr()?;
                self.eat(')')?;
                Ok(inner)
            }
            Some(c) if c.is_ascii_digit() => {
                let int_pos = self.pos;
                let count = self.integer()?;
                if count == 0 {
                    return Err(CotreeError::ZeroCopyCount { pos: int_pos });
                }
                self.skip_ws();
                if self.peek() == Some('(') {
                    self.pos += 1;
                    let inner = self.expr()?;
                    self.eat(')')?;
                    Ok(copies(count, inner))
                } else {
                    // INT isolated vertices
                    Ok(copies(count, RawTree::Leaf(None)))
                }
            }
            Some(c) => Err(CotreeError::Parse {
                pos: self.pos,
                msg: format!("expected factor, found `{c}`"),
            }),
            None => Err(CotreeError::Parse {
                pos: self.pos,
                msg: "expected factor, found end of input".into(),
            }),
        }
    }

    fn integer(&mut self) -> Result<usize, CotreeError> {
        let start = self.pos;
        while matches!(self.peek(), Some(c) if c.is_ascii_digit()) {
            self.pos += 1;
        }
        let s: String = self.chars[start..self.pos].iter().collect();
        s.parse().map_err(|_| CotreeError::Parse {
            pos: start,
            msg: format!("integer `{s}` out of range"),
        })
    }
}

fn copies(count: usize, tree: RawTree) -> RawTree {
    if count == 1 {
        tree
    } else {
        RawTree::Interior(
            InteriorKind::Union,
            std::iter::repeat_with(|| tree.clone()).take(count).collect(),
        )
    }
}
