//! Polynomial functions on the curve in normal form.
//!
//! The coordinate functions `x = X/Z` and `y = Y/Z` satisfy
//! `x^{q+1} = y^q + y`, so every polynomial in them reduces uniquely to a
//! combination of monomials `x^i y^j` with `j <= q - 1` by replacing `y^q`
//! with `x^{q+1} - y`. In normal form the pole order at `P_inf` is simply
//! the largest monomial weight `iq + j(q+1)`: those weights are pairwise
//! distinct for `j <= q - 1`, so leading terms cannot cancel.

use std::collections::BTreeMap;

use crate::field::{FieldElement, FieldParams};

/// A function regular away from `P_inf`, as a normal-form polynomial in
/// `(x, y)` with `y`-degree at most `q - 1`. Zero coefficients are never
/// stored, so equality of maps is equality of functions.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CurveFunction {
    terms: BTreeMap<(u32, u32), FieldElement>,
}

impl CurveFunction {
    pub fn zero() -> CurveFunction {
        CurveFunction {
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(params: &FieldParams, c: FieldElement) -> CurveFunction {
        CurveFunction::monomial(params, 0, 0, c)
    }

    pub fn one(params: &FieldParams) -> CurveFunction {
        CurveFunction::constant(params, params.one())
    }

    /// The coordinate function `x`, with `v_inf(x) = -q`.
    pub fn x(params: &FieldParams) -> CurveFunction {
        CurveFunction::monomial(params, 1, 0, params.one())
    }

    /// The coordinate function `y`, with `v_inf(y) = -(q+1)`.
    pub fn y(params: &FieldParams) -> CurveFunction {
        CurveFunction::monomial(params, 0, 1, params.one())
    }

    /// `c * x^i y^j`, reduced to normal form if `j >= q`.
    pub fn monomial(params: &FieldParams, i: u32, j: u32, c: FieldElement) -> CurveFunction {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert((i, j), c);
        }
        let mut f = CurveFunction { terms };
        f.reduce(params);
        f
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(u32, u32), &FieldElement)> {
        self.terms.iter()
    }

    fn add_term(&mut self, params: &FieldParams, key: (u32, u32), c: FieldElement) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(key).or_insert_with(|| params.zero());
        *entry = params.add(*entry, c);
        if entry.is_zero() {
            self.terms.remove(&key);
        }
    }

    /// Rewrites `y^q` as `x^{q+1} - y` until every `y`-degree is `< q`.
    fn reduce(&mut self, params: &FieldParams) {
        let q = params.q() as u32;
        while let Some((&(i, j), &c)) = self.terms.iter().find(|(&(_, j), _)| j >= q) {
            self.terms.remove(&(i, j));
            self.add_term(params, (i + q + 1, j - q), c);
            self.add_term(params, (i, j - q + 1), params.neg(c));
        }
    }

    pub fn add(&self, params: &FieldParams, other: &CurveFunction) -> CurveFunction {
        let mut out = self.clone();
        for (&key, &c) in &other.terms {
            out.add_term(params, key, c);
        }
        out
    }

    pub fn neg(&self, params: &FieldParams) -> CurveFunction {
        let mut out = CurveFunction::zero();
        for (&key, &c) in &self.terms {
            out.terms.insert(key, params.neg(c));
        }
        out
    }

    pub fn sub(&self, params: &FieldParams, other: &CurveFunction) -> CurveFunction {
        self.add(params, &other.neg(params))
    }

    pub fn scale(&self, params: &FieldParams, c: FieldElement) -> CurveFunction {
        let mut out = CurveFunction::zero();
        for (&key, &t) in &self.terms {
            out.add_term(params, key, params.mul(t, c));
        }
        out
    }

    pub fn mul(&self, params: &FieldParams, other: &CurveFunction) -> CurveFunction {
        let mut out = CurveFunction::zero();
        for (&(i1, j1), &c1) in &self.terms {
            for (&(i2, j2), &c2) in &other.terms {
                out.add_term(params, (i1 + i2, j1 + j2), params.mul(c1, c2));
            }
        }
        out.reduce(params);
        out
    }

    pub fn pow(&self, params: &FieldParams, e: u32) -> CurveFunction {
        let mut out = CurveFunction::one(params);
        for _ in 0..e {
            out = out.mul(params, self);
        }
        out
    }

    /// The pole order at `P_inf`: the largest `iq + j(q+1)` over supported
    /// monomials. `None` for the zero function.
    pub fn pole_order_at_infinity(&self, params: &FieldParams) -> Option<u64> {
        let q = params.q();
        self.terms
            .keys()
            .map(|&(i, j)| i as u64 * q + j as u64 * (q + 1))
            .max()
    }

    /// Evaluates the function at an affine point.
    pub fn eval(
        &self,
        params: &FieldParams,
        alpha: FieldElement,
        beta: FieldElement,
    ) -> FieldElement {
        let mut out = params.zero();
        for (&(i, j), &c) in &self.terms {
            let term = params.mul(
                c,
                params.mul(params.pow(alpha, i as u64), params.pow(beta, j as u64)),
            );
            out = params.add(out, term);
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn normal_form_reduction() {
        let f = FieldParams::for_q(2).unwrap();
        // y^2 reduces to x^3 - y.
        let y2 = CurveFunction::y(&f).mul(&f, &CurveFunction::y(&f));
        let expected = CurveFunction::monomial(&f, 3, 0, f.one())
            .sub(&f, &CurveFunction::y(&f));
        assert_eq!(y2, expected);
        // Reduction is involutive with multiplication: (y^2)*y = y^3 also
        // lands in normal form with y-degree <= 1.
        let y3 = y2.mul(&f, &CurveFunction::y(&f));
        assert!(y3.terms().all(|(&(_, j), _)| j <= 1));
    }

    #[test]
    fn ring_identities() {
        let f = FieldParams::for_q(3).unwrap();
        let x = CurveFunction::x(&f);
        let y = CurveFunction::y(&f);
        let a = x.add(&f, &y).pow(&f, 2);
        let b = x
            .mul(&f, &x)
            .add(&f, &y.mul(&f, &y))
            .add(&f, &x.mul(&f, &y).scale(&f, f.from_int(2)));
        assert_eq!(a, b);
        assert!(a.sub(&f, &a).is_zero());
    }

    #[test]
    fn vanishing_on_curve_points() {
        // y^q + y - x^{q+1} reduces to the zero normal form.
        for q in [2u64, 3, 4] {
            let f = FieldParams::for_q(q).unwrap();
            let lhs = CurveFunction::y(&f)
                .pow(&f, q as u32)
                .add(&f, &CurveFunction::y(&f));
            let rhs = CurveFunction::x(&f).pow(&f, q as u32 + 1);
            assert!(lhs.sub(&f, &rhs).is_zero());
        }
    }

    #[test]
    fn pole_orders_are_distinct_monomial_weights() {
        let f = FieldParams::for_q(3).unwrap();
        let q = f.q();
        let mut seen = std::collections::BTreeSet::new();
        for i in 0..8u64 {
            for j in 0..q {
                assert!(seen.insert(i * q + j * (q + 1)), "weights must be distinct");
            }
        }
        let g = CurveFunction::monomial(&f, 2, 1, f.one());
        assert_eq!(g.pole_order_at_infinity(&f), Some(2 * q + (q + 1)));
        assert_eq!(CurveFunction::zero().pole_order_at_infinity(&f), None);
    }

    #[test]
    fn eval_matches_terms() {
        let f = FieldParams::for_q(2).unwrap();
        let w = f.from_index(2).unwrap();
        let func = CurveFunction::x(&f)
            .add(&f, &CurveFunction::y(&f).scale(&f, w))
            .add(&f, &CurveFunction::one(&f));
        // At (1, w): 1 + w*w + 1 = w^2.
        assert_eq!(func.eval(&f, f.one(), w), f.mul(w, w));
    }
}
