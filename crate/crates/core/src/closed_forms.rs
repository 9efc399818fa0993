//! Closed formulas for structured graph families.

use thiserror::Error;

use crate::poly::DomPoly;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FormError {
    #[error("{family} needs order at least {min}, got {got}")]
    OrderTooSmall {
        family: &'static str,
        min: usize,
        got: usize,
    },
    #[error("polynomial of degree {degree} cannot belong to a graph of order {order}")]
    Inconsistent { degree: usize, order: usize },
}

fn require(family: &'static str, min: usize, got: usize) -> Result<(), FormError> {
    if got < min {
        Err(FormError::OrderTooSmall { family, min, got })
    } else {
        Ok(())
    }
}

/// `(1 + x)^n - 1`, the polynomial of `K_n`: every nonempty subset dominates.
pub fn complete(n: usize) -> Result<DomPoly, FormError> {
    require("complete graph", 1, n)?;
    Ok(nonempty_subsets(n))
}

fn nonempty_subsets(n: usize) -> DomPoly {
    DomPoly::binomial_power(n)
        .checked_sub(&DomPoly::one())
        .expect("(1+x)^n has constant term 1")
}

/// `x^n` for the edgeless graph.
pub fn empty(n: usize) -> DomPoly {
    DomPoly::monomial(n)
}

/// Polynomial of `G1 ∨ G2` from the polynomials and orders of the parts:
/// `((1+x)^n1 - 1)((1+x)^n2 - 1) + D(G1) + D(G2)`.
///
/// A set meeting both sides dominates the join; a set inside one side
/// dominates it exactly when it dominates that side.
pub fn join(p1: &DomPoly, n1: usize, p2: &DomPoly, n2: usize) -> Result<DomPoly, FormError> {
    for (p, n) in [(p1, n1), (p2, n2)] {
        require("join operand", 1, n)?;
        if let Some(degree) = p.degree() {
            if degree > n {
                return Err(FormError::Inconsistent { degree, order: n });
            }
        }
    }
    let across = &nonempty_subsets(n1) * &nonempty_subsets(n2);
    Ok(&(&across + p1) + p2)
}

/// `K_{m,n} = empty(m) ∨ empty(n)`.
pub fn complete_bipartite(m: usize, n: usize) -> Result<DomPoly, FormError> {
    join(&empty(m), m, &empty(n), n)
}

/// `K_{1,n}`: `x^n + x(1+x)^n`, on `n + 1` vertices.
pub fn star(n: usize) -> Result<DomPoly, FormError> {
    require("star", 1, n)?;
    Ok(&empty(n) + &DomPoly::binomial_power(n).shift(1))
}

/// `W_n = C_{n-1} ∨ K_1`: `x(1+x)^(n-1) + D(C_{n-1})`, for `n >= 4`.
pub fn wheel(n: usize, rim: &DomPoly) -> Result<DomPoly, FormError> {
    require("wheel", 4, n)?;
    join(rim, n - 1, &empty(1), 1)
}

/// `x^n (x+2)^n`, the polynomial of `G ∘ K_1` for any `G` of order `n`.
///
/// Coefficient of `x^m` is `C(n, m-n) 2^(2n-m)`.
pub fn corona_k1(n: usize) -> Result<DomPoly, FormError> {
    require("corona with K1", 1, n)?;
    let pendant_pair = DomPoly::from_u64s(&[2, 1]);
    Ok(core::iter::repeat_n(pendant_pair, n)
        .product::<DomPoly>()
        .shift(n))
}

/// Product over components.
pub fn product(parts: &[DomPoly]) -> DomPoly {
    parts.iter().cloned().product()
}
