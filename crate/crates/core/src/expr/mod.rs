//! Graph expressions: named families combined with disjoint union (`+`),
//! join (`*`) and corona products.
//!
//! ```text
//! expr := term { "+" term }
//! term := atom { "*" atom }
//! atom := func "(" args ")" | "(" expr ")"
//! ```
//!
//! `corona_k1(e)` attaches a pendant vertex to every vertex of `e`;
//! `corona(a, b)` attaches a copy of `b` to every vertex of `a`.

mod eval;
mod parse;

use alloc::boxed::Box;
use core::fmt;

pub use eval::{eval_poly, EvalError, Evaluation, Rule, Strategy, TraceStep};
pub use parse::{parse_expr, ParseError};

use crate::graph::{Graph, GraphError};
use crate::HARD_MAX_N;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GraphExpr {
    Path(usize),
    Cycle(usize),
    Complete(usize),
    Empty(usize),
    CompleteBipartite(usize, usize),
    /// `K_{1,n}` with `n` leaves.
    Star(usize),
    /// Hub joined to `C_{n-1}`; `n` vertices in total.
    Wheel(usize),
    Union(Box<GraphExpr>, Box<GraphExpr>),
    Join(Box<GraphExpr>, Box<GraphExpr>),
    CoronaK1(Box<GraphExpr>),
    Corona(Box<GraphExpr>, Box<GraphExpr>),
    Literal(Graph),
}

impl GraphExpr {
    pub fn union(a: GraphExpr, b: GraphExpr) -> GraphExpr {
        GraphExpr::Union(Box::new(a), Box::new(b))
    }

    pub fn join(a: GraphExpr, b: GraphExpr) -> GraphExpr {
        GraphExpr::Join(Box::new(a), Box::new(b))
    }

    pub fn corona_k1(a: GraphExpr) -> GraphExpr {
        GraphExpr::CoronaK1(Box::new(a))
    }

    pub fn corona(a: GraphExpr, b: GraphExpr) -> GraphExpr {
        GraphExpr::Corona(Box::new(a), Box::new(b))
    }

    /// Number of vertices, computed without building the graph. Saturates
    /// instead of overflowing.
    pub fn order(&self) -> usize {
        use GraphExpr::*;
        match self {
            Path(n) | Cycle(n) | Complete(n) | Empty(n) | Wheel(n) => *n,
            CompleteBipartite(m, n) => m.saturating_add(*n),
            Star(n) => n.saturating_add(1),
            Union(a, b) | Join(a, b) => a.order().saturating_add(b.order()),
            CoronaK1(a) => a.order().saturating_mul(2),
            Corona(a, b) => {
                let n = a.order();
                n.saturating_add(n.saturating_mul(b.order()))
            }
            Literal(g) => g.n(),
        }
    }

    /// Builds the explicit graph. Union and join place the left operand's
    /// vertices first.
    pub fn build(&self) -> Result<Graph, GraphError> {
        use GraphExpr::*;
        let n = self.order();
        if n > HARD_MAX_N {
            return Err(GraphError::TooManyVertices { n, max: HARD_MAX_N });
        }
        match self {
            Path(n) => Graph::path(*n),
            Cycle(n) => Graph::cycle(*n),
            Complete(n) => Graph::complete(*n),
            Empty(n) => Graph::empty(*n),
            CompleteBipartite(m, n) => Graph::complete_bipartite(*m, *n),
            Star(n) => Graph::star(*n),
            Wheel(n) => Graph::wheel(*n),
            Union(a, b) => a.build()?.disjoint_union(&b.build()?),
            Join(a, b) => a.build()?.join(&b.build()?),
            CoronaK1(a) => a.build()?.corona_k1(),
            Corona(a, b) => a.build()?.corona(&b.build()?),
            Literal(g) => Ok(g.clone()),
        }
    }

    fn precedence(&self) -> u8 {
        match self {
            GraphExpr::Union(..) => 0,
            GraphExpr::Join(..) => 1,
            _ => 2,
        }
    }
}

fn write_operand(f: &mut fmt::Formatter<'_>, e: &GraphExpr, min: u8) -> fmt::Result {
    if e.precedence() < min {
        write!(f, "({e})")
    } else {
        write!(f, "{e}")
    }
}

/// Prints the expression in the syntax accepted by [`parse_expr`], with the
/// parentheses needed to reproduce the same tree. Literal graphs have no
/// surface syntax and print as `<graph n=.. m=..>`.
impl fmt::Display for GraphExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        use GraphExpr::*;
        match self {
            Path(n) => write!(f, "path({n})"),
            Cycle(n) => write!(f, "cycle({n})"),
            Complete(n) => write!(f, "complete({n})"),
            Empty(n) => write!(f, "empty({n})"),
            CompleteBipartite(m, n) => write!(f, "bipartite({m}, {n})"),
            Star(n) => write!(f, "star({n})"),
            Wheel(n) => write!(f, "wheel({n})"),
            Union(a, b) => {
                write_operand(f, a, 0)?;
                f.write_str(" + ")?;
                write_operand(f, b, 1)
            }
            Join(a, b) => {
                write_operand(f, a, 1)?;
                f.write_str(" * ")?;
                write_operand(f, b, 2)
            }
            CoronaK1(a) => write!(f, "corona_k1({a})"),
            Corona(a, b) => write!(f, "corona({a}, {b})"),
            Literal(g) => write!(f, "<graph n={} m={}>", g.n(), g.edge_count()),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::count::{count_bruteforce, Limits};
    use std::string::ToString;

    #[test]
    fn orders() {
        assert_eq!(GraphExpr::Star(5).order(), 6);
        assert_eq!(GraphExpr::corona_k1(GraphExpr::Path(2)).order(), 4);
        assert_eq!(
            GraphExpr::corona(GraphExpr::Path(3), GraphExpr::Complete(2)).order(),
            9
        );
        let huge = GraphExpr::corona(GraphExpr::Path(usize::MAX), GraphExpr::Path(3));
        assert_eq!(huge.order(), usize::MAX);
    }

    #[test]
    fn built_graphs_match_by_polynomial() {
        let l = Limits::default();
        let count = |e: GraphExpr| count_bruteforce(&e.build().unwrap(), &l).unwrap();
        assert_eq!(
            count(GraphExpr::corona_k1(GraphExpr::Path(2))),
            count(GraphExpr::Path(4))
        );
        assert_eq!(
            count(GraphExpr::join(GraphExpr::Empty(2), GraphExpr::Empty(2))),
            count(GraphExpr::Cycle(4))
        );
        assert_eq!(
            GraphExpr::union(GraphExpr::Complete(1), GraphExpr::Complete(1))
                .build()
                .unwrap(),
            Graph::empty(2).unwrap()
        );
    }

    #[test]
    fn build_rejects_oversized() {
        let e = GraphExpr::corona_k1(GraphExpr::Path(17));
        assert!(matches!(
            e.build(),
            Err(GraphError::TooManyVertices { n: 34, .. })
        ));
    }

    #[test]
    fn display_parenthesises_minimally() {
        let e = GraphExpr::join(
            GraphExpr::union(GraphExpr::Path(2), GraphExpr::Empty(1)),
            GraphExpr::join(GraphExpr::Cycle(3), GraphExpr::Star(2)),
        );
        assert_eq!(e.to_string(), "(path(2) + empty(1)) * (cycle(3) * star(2))");
        let e = GraphExpr::union(
            GraphExpr::union(GraphExpr::Path(2), GraphExpr::Path(3)),
            GraphExpr::join(GraphExpr::Empty(1), GraphExpr::Cycle(5)),
        );
        assert_eq!(e.to_string(), "path(2) + path(3) + empty(1) * cycle(5)");
    }
}
