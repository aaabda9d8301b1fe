//! Local power-series expansions at affine points, and valuations.
//!
//! At every affine point `P_ab` the coordinate `t = x - a` is a local
//! parameter, because the `y`-partial of `y^q + y - x^{q+1}` is the nonzero
//! constant 1 in characteristic `p`. Writing `y = b + u`, the branch
//! equation becomes `u^q + u = (a + t)^{q+1} - a^{q+1}`, and since `u` has
//! positive valuation the fixed-point iteration `u <- R(t) - u^q` converges
//! `q`-adically fast: the error is raised to the `q`-th power each round.

use crate::curve::{on_curve, ProjectivePoint};
use crate::field::{FieldElement, FieldParams};
use crate::oracle::function::CurveFunction;
use crate::{Error, Result};

/// A truncated power series `c_0 + c_1 t + ... + c_{N-1} t^{N-1}` in the
/// local parameter `t = x - a` at an affine center.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LocalExpansion {
    pub center: ProjectivePoint,
    pub coeffs: Vec<FieldElement>,
}

impl LocalExpansion {
    pub fn precision(&self) -> usize {
        self.coeffs.len()
    }

    /// Index of the first nonzero coefficient, if any.
    pub fn leading_index(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }
}

fn series_mul(params: &FieldParams, a: &[FieldElement], b: &[FieldElement]) -> Vec<FieldElement> {
    let n = a.len();
    let mut out = vec![params.zero(); n];
    for (i, &ai) in a.iter().enumerate() {
        if ai.is_zero() {
            continue;
        }
        for (j, &bj) in b.iter().take(n - i).enumerate() {
            out[i + j] = params.add(out[i + j], params.mul(ai, bj));
        }
    }
    out
}

fn series_pow(params: &FieldParams, a: &[FieldElement], mut e: u64) -> Vec<FieldElement> {
    let mut out = vec![params.zero(); a.len()];
    out[0] = params.one();
    let mut base = a.to_vec();
    while e > 0 {
        if e & 1 == 1 {
            out = series_mul(params, &out, &base);
        }
        base = series_mul(params, &base, &base);
        e >>= 1;
    }
    out
}

/// The series of `y` in `t = x - alpha` at the branch through `(alpha, beta)`,
/// to precision `n`.
pub fn y_series_at(
    params: &FieldParams,
    alpha: FieldElement,
    beta: FieldElement,
    n: usize,
) -> Vec<FieldElement> {
    let q = params.q();
    // R(t) = (alpha + t)^{q+1} - alpha^{q+1}, vanishing at t = 0.
    let mut lin = vec![params.zero(); n];
    lin[0] = alpha;
    if n > 1 {
        lin[1] = params.one();
    }
    let mut r = series_pow(params, &lin, q + 1);
    r[0] = params.sub(r[0], params.pow(alpha, q + 1));
    debug_assert!(r[0].is_zero());

    let mut u = vec![params.zero(); n];
    for _ in 0..=(n + 1) {
        let uq = series_pow(params, &u, q);
        let next: Vec<FieldElement> = r
            .iter()
            .zip(uq.iter())
            .map(|(&rv, &uv)| params.sub(rv, uv))
            .collect();
        if next == u {
            u[0] = params.add(u[0], beta);
            return u;
        }
        u = next;
    }
    unreachable!("the branch iteration gains a factor q of precision per round");
}

/// Expands a normal-form function in the local parameter `t = x - a` at an
/// affine curve point, to precision `n`.
pub fn expand_at(
    params: &FieldParams,
    f: &CurveFunction,
    center: &ProjectivePoint,
    n: usize,
) -> Result<LocalExpansion> {
    let (alpha, beta) = center.affine_coords()?;
    if !on_curve(params, center) {
        return Err(Error::PointOffCurve);
    }
    let n = n.max(1);
    let y_ser = y_series_at(params, alpha, beta, n);
    let mut lin = vec![params.zero(); n];
    lin[0] = alpha;
    if n > 1 {
        lin[1] = params.one();
    }

    let max_i = f.terms().map(|(&(i, _), _)| i).max().unwrap_or(0) as usize;
    let max_j = f.terms().map(|(&(_, j), _)| j).max().unwrap_or(0) as usize;
    let mut xpows = Vec::with_capacity(max_i + 1);
    let mut one = vec![params.zero(); n];
    one[0] = params.one();
    xpows.push(one.clone());
    for i in 1..=max_i {
        let next = series_mul(params, &xpows[i - 1], &lin);
        xpows.push(next);
    }
    let mut ypows = Vec::with_capacity(max_j + 1);
    ypows.push(one);
    for j in 1..=max_j {
        let next = series_mul(params, &ypows[j - 1], &y_ser);
        ypows.push(next);
    }

    let mut coeffs = vec![params.zero(); n];
    for (&(i, j), &c) in f.terms() {
        let prod = series_mul(params, &xpows[i as usize], &ypows[j as usize]);
        for (o, &pv) in coeffs.iter_mut().zip(prod.iter()) {
            *o = params.add(*o, params.mul(c, pv));
        }
    }
    Ok(LocalExpansion {
        center: *center,
        coeffs,
    })
}

/// The valuation `v_P(f)` of a nonzero function: minus the largest monomial
/// weight at `P_inf`, and the order of vanishing of the local expansion at
/// an affine point, found with adaptively doubled precision. The order never
/// exceeds the pole order at infinity, which caps the search.
pub fn valuation(params: &FieldParams, f: &CurveFunction, p: &ProjectivePoint) -> Result<i64> {
    if f.is_zero() {
        return Err(Error::ZeroFunction);
    }
    let weight = f
        .pole_order_at_infinity(params)
        .expect("nonzero function") as i64;
    if p.is_infinity() {
        return Ok(-weight);
    }
    let cap = weight as usize + 1;
    let mut n = 8.min(cap);
    loop {
        let exp = expand_at(params, f, p, n)?;
        if let Some(k) = exp.leading_index() {
            return Ok(k as i64);
        }
        assert!(
            n < cap,
            "a nonzero function cannot vanish to order beyond its degree"
        );
        n = (2 * n).min(cap);
    }
}
