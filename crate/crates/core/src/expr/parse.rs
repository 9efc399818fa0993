use alloc::boxed::Box;
use alloc::string::{String, ToString};
use alloc::vec::Vec;

use thiserror::Error;

use super::GraphExpr;

/// Byte offsets are into the input string.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("syntax error at {pos}: {message}")]
    Syntax { pos: usize, message: String },
    #[error("unknown function `{name}` at {pos}")]
    UnknownFunction { name: String, pos: usize },
    #[error("`{name}` at {pos} takes {expected} argument(s), got {got}")]
    Arity {
        name: &'static str,
        expected: usize,
        got: usize,
        pos: usize,
    },
    #[error("`{name}` at {pos}: parameter {value} below the minimum {min}")]
    OutOfRange {
        name: &'static str,
        value: usize,
        min: usize,
        pos: usize,
    },
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Tok {
    Ident(String),
    Int(usize),
    LParen,
    RParen,
    Comma,
    Plus,
    Star,
    End,
}

fn tokenize(text: &str) -> Result<Vec<(Tok, usize)>, ParseError> {
    let bytes = text.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i];
        let start = i;
        let tok = match c {
            b' ' | b'\t' | b'\n' | b'\r' => {
                i += 1;
                continue;
            }
            b'(' => Tok::LParen,
            b')' => Tok::RParen,
            b',' => Tok::Comma,
            b'+' => Tok::Plus,
            b'*' => Tok::Star,
            b'0'..=b'9' => {
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                let value = text[start..i].parse().map_err(|_| ParseError::Syntax {
                    pos: start,
                    message: "integer too large".to_string(),
                })?;
                out.push((Tok::Int(value), start));
                continue;
            }
            c if c.is_ascii_alphabetic() || c == b'_' => {
                while i < bytes.len() && (bytes[i].is_ascii_alphanumeric() || bytes[i] == b'_') {
                    i += 1;
                }
                out.push((Tok::Ident(text[start..i].to_string()), start));
                continue;
            }
            _ => {
                let ch = text[start..].chars().next().unwrap_or('?');
                return Err(ParseError::Syntax {
                    pos: start,
                    message: alloc::format!("unexpected character `{ch}`"),
                });
            }
        };
        out.push((tok, start));
        i += 1;
    }
    out.push((Tok::End, text.len()));
    Ok(out)
}

enum Arg {
    Int(usize, usize),
    Expr(GraphExpr, usize),
}

struct Parser {
    toks: Vec<(Tok, usize)>,
    at: usize,
}

impl Parser {
    fn peek(&self) -> &Tok {
        &self.toks[self.at].0
    }

    fn pos(&self) -> usize {
        self.toks[self.at].1
    }

    fn bump(&mut self) -> (Tok, usize) {
        let t = self.toks[self.at].clone();
        if t.0 != Tok::End {
            self.at += 1;
        }
        t
    }

    fn expect(&mut self, want: Tok, what: &str) -> Result<(), ParseError> {
        if *self.peek() == want {
            self.bump();
            Ok(())
        } else {
            Err(ParseError::Syntax {
                pos: self.pos(),
                message: alloc::format!("expected {what}"),
            })
        }
    }

    fn expr(&mut self) -> Result<GraphExpr, ParseError> {
        let mut lhs = self.term()?;
        while *self.peek() == Tok::Plus {
            self.bump();
            lhs = GraphExpr::Union(Box::new(lhs), Box::new(self.term()?));
        }
        Ok(lhs)
    }

    fn term(&mut self) -> Result<GraphExpr, ParseError> {
        let mut lhs = self.atom()?;
        while *self.peek() == Tok::Star {
            self.bump();
            lhs = GraphExpr::Join(Box::new(lhs), Box::new(self.atom()?));
        }
        Ok(lhs)
    }

    fn atom(&mut self) -> Result<GraphExpr, ParseError> {
        match self.bump() {
            (Tok::LParen, _) => {
                let e = self.expr()?;
                self.expect(Tok::RParen, "`)`")?;
                Ok(e)
            }
            (Tok::Ident(name), pos) => self.call(&name, pos),
            (_, pos) => Err(ParseError::Syntax {
                pos,
                message: "expected a graph constructor or `(`".to_string(),
            }),
        }
    }

    fn args(&mut self) -> Result<Vec<Arg>, ParseError> {
        self.expect(Tok::LParen, "`(`")?;
        let mut args = Vec::new();
        if *self.peek() == Tok::RParen {
            self.bump();
            return Ok(args);
        }
        loop {
            let pos = self.pos();
            if let Tok::Int(v) = *self.peek() {
                self.bump();
                args.push(Arg::Int(v, pos));
            } else {
                args.push(Arg::Expr(self.expr()?, pos));
            }
            match self.bump() {
                (Tok::Comma, _) => continue,
                (Tok::RParen, _) => return Ok(args),
                (_, pos) => {
                    return Err(ParseError::Syntax {
                        pos,
                        message: "expected `,` or `)`".to_string(),
                    })
                }
            }
        }
    }

    fn call(&mut self, name: &str, pos: usize) -> Result<GraphExpr, ParseError> {
        let (name, arity, min, takes_exprs): (&'static str, usize, usize, bool) = match name {
            "path" => ("path", 1, 1, false),
            "cycle" => ("cycle", 1, 3, false),
            "complete" => ("complete", 1, 1, false),
            "empty" => ("empty", 1, 0, false),
            "bipartite" => ("bipartite", 2, 1, false),
            "star" => ("star", 1, 1, false),
            "wheel" => ("wheel", 1, 4, false),
            "corona_k1" => ("corona_k1", 1, 0, true),
            "corona" => ("corona", 2, 0, true),
            _ => {
                return Err(ParseError::UnknownFunction {
                    name: name.to_string(),
                    pos,
                })
            }
        };
        let args = self.args()?;
        if args.len() != arity {
            return Err(ParseError::Arity {
                name,
                expected: arity,
                got: args.len(),
                pos,
            });
        }

        if takes_exprs {
            let mut exprs = Vec::with_capacity(arity);
            for a in args {
                match a {
                    Arg::Expr(e, _) => exprs.push(e),
                    Arg::Int(_, at) => {
                        return Err(ParseError::Syntax {
                            pos: at,
                            message: alloc::format!("`{name}` expects graph arguments"),
                        })
                    }
                }
            }
            let mut it = exprs.into_iter();
            let first = it.next().expect("arity checked");
            return Ok(match it.next() {
                None => GraphExpr::corona_k1(first),
                Some(second) => GraphExpr::corona(first, second),
            });
        }

        let mut ints = Vec::with_capacity(arity);
        for a in args {
            match a {
                Arg::Int(v, at) if v < min => {
                    return Err(ParseError::OutOfRange {
                        name,
                        value: v,
                        min,
                        pos: at,
                    })
                }
                Arg::Int(v, _) => ints.push(v),
                Arg::Expr(_, at) => {
                    return Err(ParseError::Syntax {
                        pos: at,
                        message: alloc::format!("`{name}` expects integer arguments"),
                    })
                }
            }
        }
        Ok(match name {
            "path" => GraphExpr::Path(ints[0]),
            "cycle" => GraphExpr::Cycle(ints[0]),
            "complete" => GraphExpr::Complete(ints[0]),
            "empty" => GraphExpr::Empty(ints[0]),
            "bipartite" => GraphExpr::CompleteBipartite(ints[0], ints[1]),
            "star" => GraphExpr::Star(ints[0]),
            _ => GraphExpr::Wheel(ints[0]),
        })
    }
}

/// Parses an expression; `*` (join) binds tighter than `+` (disjoint union)
/// and both associate to the left.
pub fn parse_expr(text: &str) -> Result<GraphExpr, ParseError> {
    let mut p = Parser {
        toks: tokenize(text)?,
        at: 0,
    };
    let e = p.expr()?;
    if *p.peek() != Tok::End {
        return Err(ParseError::Syntax {
            pos: p.pos(),
            message: "trailing input".to_string(),
        });
    }
    Ok(e)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Graph;
    use proptest::prelude::*;
    use GraphExpr::*;

    #[test]
    fn parses_constructors_and_operators() {
        assert_eq!(
            parse_expr("corona_k1(path(2))").unwrap(),
            GraphExpr::corona_k1(Path(2))
        );
        assert_eq!(
            parse_expr("empty(1) * cycle(5)").unwrap(),
            GraphExpr::join(Empty(1), Cycle(5))
        );
        assert_eq!(
            parse_expr("complete(3) + complete(3)").unwrap(),
            GraphExpr::union(Complete(3), Complete(3))
        );
        assert_eq!(
            parse_expr("corona(bipartite(2,3), star(1))").unwrap(),
            GraphExpr::corona(CompleteBipartite(2, 3), Star(1))
        );
    }

    #[test]
    fn precedence_and_associativity() {
        assert_eq!(
            parse_expr("path(1) + path(2) * path(3)").unwrap(),
            GraphExpr::union(Path(1), GraphExpr::join(Path(2), Path(3)))
        );
        assert_eq!(
            parse_expr("path(1) * path(2) * path(3)").unwrap(),
            GraphExpr::join(GraphExpr::join(Path(1), Path(2)), Path(3))
        );
        assert_eq!(
            parse_expr("(path(1) + path(2)) * path(3)").unwrap(),
            GraphExpr::join(GraphExpr::union(Path(1), Path(2)), Path(3))
        );
    }

    #[test]
    fn errors_carry_positions() {
        assert_eq!(
            parse_expr("cycle(2)"),
            Err(ParseError::OutOfRange {
                name: "cycle",
                value: 2,
                min: 3,
                pos: 6
            })
        );
        assert!(matches!(
            parse_expr("wheel(3)"),
            Err(ParseError::OutOfRange { min: 4, .. })
        ));
        assert!(matches!(
            parse_expr("bipartite(2)"),
            Err(ParseError::Arity {
                expected: 2,
                got: 1,
                ..
            })
        ));
        assert!(matches!(
            parse_expr("corona(path(2))"),
            Err(ParseError::Arity { .. })
        ));
        assert!(matches!(
            parse_expr("petersen(1)"),
            Err(ParseError::UnknownFunction { pos: 0, .. })
        ));
        assert!(matches!(
            parse_expr("path(3) +"),
            Err(ParseError::Syntax { pos: 9, .. })
        ));
        assert!(matches!(
            parse_expr("path(3))"),
            Err(ParseError::Syntax { pos: 7, .. })
        ));
        assert!(matches!(
            parse_expr("path(3) # x"),
            Err(ParseError::Syntax { pos: 8, .. })
        ));
        assert!(matches!(
            parse_expr("path(path(2))"),
            Err(ParseError::Syntax { .. })
        ));
        assert!(matches!(
            parse_expr("corona_k1(3)"),
            Err(ParseError::Syntax { .. })
        ));
        assert!(parse_expr("").is_err());
    }

    #[test]
    fn empty_zero_is_allowed() {
        assert_eq!(parse_expr("empty(0)").unwrap(), Empty(0));
        assert!(parse_expr("path(0)").is_err());
    }

    fn arb_expr() -> impl Strategy<Value = GraphExpr> {
        let leaf = prop_oneof![
            (1usize..6).prop_map(Path),
            (3usize..6).prop_map(Cycle),
            (1usize..6).prop_map(Complete),
            (0usize..6).prop_map(Empty),
            (1usize..4, 1usize..4).prop_map(|(m, n)| CompleteBipartite(m, n)),
            (1usize..5).prop_map(Star),
            (4usize..7).prop_map(Wheel),
        ];
        leaf.prop_recursive(4, 24, 2, |inner| {
            prop_oneof![
                (inner.clone(), inner.clone()).prop_map(|(a, b)| GraphExpr::union(a, b)),
                (inner.clone(), inner.clone()).prop_map(|(a, b)| GraphExpr::join(a, b)),
                inner.clone().prop_map(GraphExpr::corona_k1),
                (inner.clone(), inner).prop_map(|(a, b)| GraphExpr::corona(a, b)),
            ]
        })
    }

    proptest! {
        #[test]
        fn pretty_print_round_trips(e in arb_expr()) {
            let text = alloc::format!("{e}");
            prop_assert_eq!(parse_expr(&text).unwrap(), e);
        }
    }

    #[test]
    fn literal_has_no_surface_syntax() {
        let e = Literal(Graph::path(3).unwrap());
        assert!(parse_expr(&alloc::format!("{e}")).is_err());
    }
}
