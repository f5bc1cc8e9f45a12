//! Closed-form bounds and parity predicates.

use serde::Serialize;
use thiserror::Error;

use crate::graph::Graph;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TheoryError {
    #[error("no graph of odd order {order} has odd regularity {regularity}")]
    ImpossibleRegularGraph { order: usize, regularity: usize },
}

/// Upper bound on the largest index of an `r`-regular graph of even order
/// with odd `r`, kept as an exact fraction.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct RegularBound {
    pub order: usize,
    pub regularity: usize,
    /// Reduced numerator and denominator.
    pub numerator: usize,
    pub denominator: usize,
}

impl RegularBound {
    pub fn floor(&self) -> usize {
        self.numerator / self.denominator
    }

    pub fn is_integral(&self) -> bool {
        self.numerator.is_multiple_of(self.denominator)
    }

    /// Whether an integer index respects the bound.
    pub fn admits(&self, index: usize) -> bool {
        index <= self.floor()
    }
}

fn gcd(mut a: usize, mut b: usize) -> usize {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// Bound on the maximum index of a graph of the given order and regularity.
///
/// `None` for even `r`, where no bound is known. For odd `r` the bound is
/// `(r-1)n/(r+1)` when `n ≡ 0 (mod 4)` and `((r-1)n+4)/(r+1)` when
/// `n ≡ 2 (mod 4)`.
pub fn lemma3_bound(order: usize, regularity: usize) -> Result<Option<RegularBound>, TheoryError> {
    if regularity.is_multiple_of(2) {
        return Ok(None);
    }
    if order % 2 == 1 {
        return Err(TheoryError::ImpossibleRegularGraph { order, regularity });
    }
    let base = (regularity - 1) * order;
    let numerator = if order.is_multiple_of(4) {
        base
    } else {
        base + 4
    };
    let denominator = regularity + 1;
    let g = gcd(numerator, denominator);
    Ok(Some(RegularBound {
        order,
        regularity,
        numerator: numerator / g,
        denominator: denominator / g,
    }))
}

/// The bound applicable to `g`, if it is regular with odd degree.
pub fn lemma3_bound_for(g: &Graph) -> Result<Option<RegularBound>, TheoryError> {
    match g.regularity() {
        Some(r) => lemma3_bound(g.vertex_count(), r),
        None => Ok(None),
    }
}

/// Whether every vertex has odd degree, in which case no vertex can be
/// unlabeled and every index is even.
pub fn all_degrees_odd(g: &Graph) -> bool {
    g.degrees().all(|d| d % 2 == 1)
}

/// Parity conditions on the factor sizes, at least one of which holds
/// whenever G □ H or G[H] admits a strongly edge-balanced labeling.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct ProductParity {
    /// p(G) and p(H) both even.
    pub orders_even: bool,
    /// q(G) and q(H) both even.
    pub sizes_even: bool,
    /// p(G) and q(G) both even.
    pub left_even: bool,
    /// p(H) and q(H) both even.
    pub right_even: bool,
    /// All four of p(G), q(G), p(H), q(H) odd.
    pub all_odd: bool,
    pub any_holds: bool,
}

pub fn theorem3_conditions(g: &Graph, h: &Graph) -> ProductParity {
    let even = |x: usize| x.is_multiple_of(2);
    let (pg, qg) = (g.vertex_count(), g.edge_count());
    let (ph, qh) = (h.vertex_count(), h.edge_count());
    let orders_even = even(pg) && even(ph);
    let sizes_even = even(qg) && even(qh);
    let left_even = even(pg) && even(qg);
    let right_even = even(ph) && even(qh);
    let all_odd = [pg, qg, ph, qh].iter().all(|&x| !even(x));
    ProductParity {
        orders_even,
        sizes_even,
        left_even,
        right_even,
        all_odd,
        any_holds: orders_even || sizes_even || left_even || right_even || all_odd,
    }
}
