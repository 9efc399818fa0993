use alloc::string::{String, ToString};
use alloc::vec::Vec;

use thiserror::Error;

use super::GraphExpr;
use crate::closed_forms::{self, FormError};
use crate::count::{count_path_cycle_dp, CountError, Counter, Method, PathOrCycle};
use crate::graph::GraphError;
use crate::poly::DomPoly;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Strategy {
    /// Closed forms and the product, join and corona rules where they
    /// apply; enumeration for everything else.
    #[default]
    Auto,
    /// Fails on any node without a rule.
    RewriteOnly,
    /// Builds the whole graph and enumerates.
    EnumerateOnly,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EvalError {
    #[error("no rewrite rule for `{0}`")]
    Unrewritable(String),
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Count(#[from] CountError),
    #[error(transparent)]
    Form(#[from] FormError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Rule {
    /// Disjoint union: product of the parts.
    Product,
    /// Join of two nonempty graphs.
    Join,
    /// Join where one side has no vertices.
    JoinIdentity,
    /// `x^n (x+2)^n`.
    CoronaK1,
    Complete,
    Empty,
    CompleteBipartite,
    Star,
    Wheel,
    PathDp,
    CycleDp,
    EnumerateBruteforce,
    EnumerateInclusionExclusion,
}

impl Rule {
    pub fn as_str(self) -> &'static str {
        match self {
            Rule::Product => "product",
            Rule::Join => "join",
            Rule::JoinIdentity => "join_identity",
            Rule::CoronaK1 => "corona_k1",
            Rule::Complete => "complete",
            Rule::Empty => "empty",
            Rule::CompleteBipartite => "complete_bipartite",
            Rule::Star => "star",
            Rule::Wheel => "wheel",
            Rule::PathDp => "path_dp",
            Rule::CycleDp => "cycle_dp",
            Rule::EnumerateBruteforce => "enumerate_bruteforce",
            Rule::EnumerateInclusionExclusion => "enumerate_inclusion_exclusion",
        }
    }
}

/// One rule application; `node` is the printed subexpression.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TraceStep {
    pub rule: Rule,
    pub node: String,
    pub order: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Evaluation {
    pub poly: DomPoly,
    /// Rules in the order they fired (children before parents).
    pub trace: Vec<TraceStep>,
}

struct Evaluator<'a, C: ?Sized> {
    counter: &'a C,
    method: Method,
    strategy: Strategy,
    trace: Vec<TraceStep>,
}

impl<C: Counter + ?Sized> Evaluator<'_, C> {
    fn record(&mut self, rule: Rule, e: &GraphExpr) {
        self.trace.push(TraceStep {
            rule,
            node: e.to_string(),
            order: e.order(),
        });
    }

    fn enumerate(&mut self, e: &GraphExpr) -> Result<DomPoly, EvalError> {
        self.counter.limits().check(e.order())?;
        let g = e.build()?;
        let p = self.counter.count(&g, self.method)?;
        let rule = match self.method {
            Method::Bruteforce => Rule::EnumerateBruteforce,
            Method::InclusionExclusion => Rule::EnumerateInclusionExclusion,
        };
        self.record(rule, e);
        Ok(p)
    }

    fn eval(&mut self, e: &GraphExpr) -> Result<DomPoly, EvalError> {
        use GraphExpr::*;
        if self.strategy == Strategy::EnumerateOnly {
            return self.enumerate(e);
        }
        let limits = self.counter.limits();
        let (rule, p) = match e {
            Union(a, b) => {
                let pa = self.eval(a)?;
                let pb = self.eval(b)?;
                (Rule::Product, closed_forms::product(&[pa, pb]))
            }
            Join(a, b) => {
                let pa = self.eval(a)?;
                let pb = self.eval(b)?;
                match (a.order(), b.order()) {
                    (0, _) => (Rule::JoinIdentity, pb),
                    (_, 0) => (Rule::JoinIdentity, pa),
                    (na, nb) => (Rule::Join, closed_forms::join(&pa, na, &pb, nb)?),
                }
            }
            CoronaK1(a) => match a.order() {
                0 => (Rule::CoronaK1, DomPoly::one()),
                n => (Rule::CoronaK1, closed_forms::corona_k1(n)?),
            },
            Complete(n) => (Rule::Complete, closed_forms::complete(*n)?),
            Empty(n) => (Rule::Empty, closed_forms::empty(*n)),
            CompleteBipartite(m, n) => (
                Rule::CompleteBipartite,
                closed_forms::complete_bipartite(*m, *n)?,
            ),
            Star(n) => (Rule::Star, closed_forms::star(*n)?),
            Wheel(n) => {
                if *n < 4 {
                    return Err(FormError::OrderTooSmall {
                        family: "wheel",
                        min: 4,
                        got: *n,
                    }
                    .into());
                }
                let rim = count_path_cycle_dp(PathOrCycle::Cycle, n - 1, &limits)?;
                (Rule::Wheel, closed_forms::wheel(*n, &rim)?)
            }
            Path(n) => (
                Rule::PathDp,
                count_path_cycle_dp(PathOrCycle::Path, *n, &limits)?,
            ),
            Cycle(n) => (
                Rule::CycleDp,
                count_path_cycle_dp(PathOrCycle::Cycle, *n, &limits)?,
            ),
            Corona(..) | Literal(_) => {
                if self.strategy == Strategy::RewriteOnly {
                    return Err(EvalError::Unrewritable(e.to_string()));
                }
                return self.enumerate(e);
            }
        };
        self.record(rule, e);
        Ok(p)
    }
}

/// Computes `D(G, x)` for the graph described by `e`.
///
/// `method` selects the enumeration backend wherever enumeration happens.
pub fn eval_poly<C: Counter + ?Sized>(
    e: &GraphExpr,
    strategy: Strategy,
    method: Method,
    counter: &C,
) -> Result<Evaluation, EvalError> {
    let mut ev = Evaluator {
        counter,
        method,
        strategy,
        trace: Vec::new(),
    };
    let poly = ev.eval(e)?;
    Ok(Evaluation {
        poly,
        trace: ev.trace,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::count::Limits;
    use crate::expr::parse_expr;
    use crate::graph::Graph;

    fn eval(text: &str, strategy: Strategy) -> Result<Evaluation, EvalError> {
        eval_poly(
            &parse_expr(text).unwrap(),
            strategy,
            Method::Bruteforce,
            &Limits::default(),
        )
    }

    #[test]
    fn corona_of_triangle() {
        let ev = eval("corona_k1(complete(3))", Strategy::Auto).unwrap();
        assert_eq!(ev.poly, DomPoly::from_u64s(&[0, 0, 0, 8, 12, 6, 1]));
        assert_eq!(ev.trace.len(), 1);
        assert_eq!(ev.trace[0].rule, Rule::CoronaK1);
        assert_eq!(ev.trace[0].order, 6);
        let brute = eval("corona_k1(complete(3))", Strategy::EnumerateOnly).unwrap();
        assert_eq!(brute.poly, ev.poly);
    }

    #[test]
    fn wheel_by_join() {
        let ev = eval("empty(1) * cycle(4)", Strategy::Auto).unwrap();
        let c4 = DomPoly::from_u64s(&[0, 0, 6, 4, 1]);
        let expected = &DomPoly::binomial_power(4).shift(1) + &c4;
        assert_eq!(ev.poly, expected);
        let rules: Vec<_> = ev.trace.iter().map(|s| s.rule).collect();
        assert_eq!(rules, [Rule::Empty, Rule::CycleDp, Rule::Join]);
        assert_eq!(eval("wheel(5)", Strategy::Auto).unwrap().poly, expected);
    }

    #[test]
    fn rewrite_only_rejects_general_corona() {
        let err = eval("corona(path(2), path(2))", Strategy::RewriteOnly).unwrap_err();
        assert_eq!(
            err,
            EvalError::Unrewritable("corona(path(2), path(2))".into())
        );
        let auto = eval("corona(path(2), path(2))", Strategy::Auto).unwrap();
        assert_eq!(auto.trace[0].rule, Rule::EnumerateBruteforce);
    }

    #[test]
    fn literal_falls_back_to_enumeration() {
        let e = GraphExpr::Literal(Graph::path(4).unwrap());
        let ev = eval_poly(
            &e,
            Strategy::Auto,
            Method::InclusionExclusion,
            &Limits::default(),
        )
        .unwrap();
        assert_eq!(ev.poly, DomPoly::from_u64s(&[0, 0, 4, 4, 1]));
        assert_eq!(ev.trace[0].rule, Rule::EnumerateInclusionExclusion);
    }

    #[test]
    fn large_expressions_need_no_enumeration() {
        let ev = eval(
            "path(40) + complete(40) * corona_k1(cycle(50))",
            Strategy::RewriteOnly,
        )
        .unwrap();
        assert_eq!(ev.poly.degree(), Some(40 + 40 + 100));
        assert!(matches!(
            eval("path(40)", Strategy::EnumerateOnly),
            Err(EvalError::Count(CountError::TooLarge { n: 40, .. }))
        ));
    }

    #[test]
    fn empty_operands() {
        assert_eq!(
            eval("empty(0)", Strategy::Auto).unwrap().poly,
            DomPoly::one()
        );
        assert_eq!(
            eval("empty(0) * path(3)", Strategy::Auto).unwrap().poly,
            eval("path(3)", Strategy::Auto).unwrap().poly
        );
        assert_eq!(
            eval("corona_k1(empty(0))", Strategy::Auto).unwrap().poly,
            DomPoly::one()
        );
        assert_eq!(
            eval("empty(0)", Strategy::EnumerateOnly).unwrap().poly,
            DomPoly::one()
        );
    }
}
