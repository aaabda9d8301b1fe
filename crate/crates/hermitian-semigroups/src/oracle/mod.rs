//! Brute-force Riemann-Roch machinery: the independent ground truth against
//! which the closed-form discrepancy tables are validated.
//!
//! Dimensions `dim L(aP + bQ + cR)` for a standard triangle
//! `{P_inf, P_00, P_ab}` are computed from first principles. Multiplying by
//! powers of the two-point functions `y_PQ` and `y_PR` (each with divisor
//! `m(B - P_inf)`) shifts all poles to `P_inf`; the space `L(A P_inf)` has
//! the explicit monomial basis `{x^i y^j : iq + j(q+1) <= A, j <= q-1}`; and
//! the required vanishing orders at `P_00` and `P_ab` become linear
//! constraints on power-series coefficients, solved by exact elimination.
//!
//! Nothing here consults the discrepancy tables, so agreement between the
//! two routes is a genuine cross-check.

mod expansion;
mod function;
mod linalg;

pub use expansion::{expand_at, valuation, y_series_at, LocalExpansion};
pub use function::CurveFunction;
pub use linalg::rank;

use crate::curve::{curve_points, on_curve, ProjectivePoint, Triangle};
use crate::discrepancy::Slot;
use crate::field::FieldParams;
use crate::{Error, Result};

/// The tangent-line function `y - b - a^q (x - a)` of an affine point
/// `B = P_ab`, whose divisor is `m(B - P_inf)` with `m = q + 1`.
pub fn two_point_function(params: &FieldParams, b: &ProjectivePoint) -> Result<CurveFunction> {
    let (alpha, beta) = b.affine_coords()?;
    if !on_curve(params, b) {
        return Err(Error::PointOffCurve);
    }
    let aq = params.pow(alpha, params.q());
    // y - a^q x + (a^{q+1} - b)
    let c0 = params.sub(params.mul(aq, alpha), beta);
    Ok(CurveFunction::y(params)
        .add(params, &CurveFunction::monomial(params, 1, 0, params.neg(aq)))
        .add(params, &CurveFunction::constant(params, c0)))
}

/// A triangle in standard form `{P_inf, P_00, P_ab}` with the two-point
/// functions the oracle needs, bound to fixed slots
/// `(P, Q, R) = (P_inf, P_00, P_ab)`.
#[derive(Clone, Debug)]
pub struct StandardTriangle {
    triangle: Triangle,
    p_inf: ProjectivePoint,
    q_00: ProjectivePoint,
    r_ab: ProjectivePoint,
    /// `y`, with divisor `m(P_00 - P_inf)`.
    y_pq: CurveFunction,
    /// Divisor `m(P_ab - P_inf)`.
    y_pr: CurveFunction,
}

impl StandardTriangle {
    /// Wraps a triangle that is already in standard form.
    pub fn new(params: &FieldParams, triangle: &Triangle) -> Result<StandardTriangle> {
        let r_ab = triangle
            .standard_vertex(params)
            .ok_or(Error::NotStandardTriangle)?;
        Ok(StandardTriangle {
            triangle: triangle.clone(),
            p_inf: ProjectivePoint::infinity(params),
            q_00: ProjectivePoint::affine(params, params.zero(), params.zero()),
            r_ab,
            y_pq: CurveFunction::y(params),
            y_pr: two_point_function(params, &r_ab)?,
        })
    }

    /// The deterministic standard triangle of type `d`.
    pub fn of_type(params: &FieldParams, d: u64) -> Result<StandardTriangle> {
        StandardTriangle::new(params, &crate::curve::standard_triangle_of_type(params, d)?)
    }

    pub fn triangle(&self) -> &Triangle {
        &self.triangle
    }

    /// The points in slot order `(P, Q, R)`.
    pub fn slots(&self) -> [&ProjectivePoint; 3] {
        [&self.p_inf, &self.q_00, &self.r_ab]
    }

    pub fn type_d(&self) -> u64 {
        self.triangle.type_d()
    }
}

fn ceil_div(x: i64, m: i64) -> i64 {
    -(-x).div_euclid(m)
}

/// `dim L(a P_inf + b P_00 + c P_ab)` by pole shifting, the monomial basis
/// of `L(A P_inf)`, and vanishing constraints solved exactly.
pub fn rr_dimension(params: &FieldParams, tri: &StandardTriangle, a: i64, b: i64, c: i64) -> usize {
    rr_dimension_with_headroom(params, tri, a, b, c, 0)
}

/// Same as [`rr_dimension`], but computes every local expansion with `extra`
/// spare coefficients beyond the constraints actually imposed. The result
/// must not depend on the headroom; tests exercise this.
pub fn rr_dimension_with_headroom(
    params: &FieldParams,
    tri: &StandardTriangle,
    a: i64,
    b: i64,
    c: i64,
    extra: usize,
) -> usize {
    let q = params.q() as i64;
    let m = q + 1;
    let g = (q * (q - 1)) / 2;
    // Minimal pole-shift exponents: f -> f * y_pq^s * y_pr^t moves every
    // allowed pole to P_inf.
    let s = ceil_div(b, m).max(0);
    let t = ceil_div(c, m).max(0);
    let cap = a + (s + t) * m;

    let mut basis: Vec<(u32, u32)> = Vec::new();
    if cap >= 0 {
        for j in 0..q {
            let mut i = 0;
            while i * q + j * m <= cap {
                basis.push((i as u32, j as u32));
                i += 1;
            }
        }
    }

    let n_q = (s * m - b).max(0) as usize;
    let n_r = (t * m - c).max(0) as usize;
    let dim = if basis.is_empty() {
        0
    } else if n_q + n_r == 0 {
        basis.len()
    } else {
        let expansions: Vec<(Vec<_>, Vec<_>)> = basis
            .iter()
            .map(|&(i, j)| {
                let mono = CurveFunction::monomial(params, i, j, params.one());
                let at_q = expand_at(params, &mono, &tri.q_00, n_q + extra)
                    .expect("standard vertex is affine and on the curve");
                let at_r = expand_at(params, &mono, &tri.r_ab, n_r + extra)
                    .expect("standard vertex is affine and on the curve");
                (at_q.coeffs, at_r.coeffs)
            })
            .collect();
        let mut rows = Vec::with_capacity(n_q + n_r);
        for k in 0..n_q {
            rows.push(expansions.iter().map(|(eq, _)| eq[k]).collect());
        }
        for k in 0..n_r {
            rows.push(expansions.iter().map(|(_, er)| er[k]).collect());
        }
        basis.len() - rank(params, rows)
    };

    let deg = a + b + c;
    if deg < 0 {
        assert_eq!(dim, 0, "negative degree forces dimension 0");
    }
    if deg >= 2 * g - 1 {
        assert_eq!(dim as i64, deg + 1 - g, "Riemann-Roch in the nonspecial range");
    }
    dim
}

fn drop_slot(triple: (i64, i64, i64), slot: Slot) -> (i64, i64, i64) {
    let (a, b, c) = triple;
    match slot {
        Slot::P => (a - 1, b, c),
        Slot::Q => (a, b - 1, c),
        Slot::R => (a, b, c - 1),
    }
}

/// Whether `a P + b Q + c R` is a discrepancy for the ordered pair of slots
/// `(S1, S2)`: `L(D) != L(D - S1)` together with `L(D - S2) = L(D - S1 - S2)`.
pub fn is_discrepancy(
    params: &FieldParams,
    tri: &StandardTriangle,
    triple: (i64, i64, i64),
    pair: (Slot, Slot),
) -> Result<bool> {
    let (s1, s2) = pair;
    if s1 == s2 {
        return Err(Error::SameSlots);
    }
    let dim = |t: (i64, i64, i64)| rr_dimension(params, tri, t.0, t.1, t.2);
    let d0 = dim(triple);
    let d1 = dim(drop_slot(triple, s1));
    let d2 = dim(drop_slot(triple, s2));
    let d12 = dim(drop_slot(drop_slot(triple, s1), s2));
    Ok(d0 != d1 && d2 == d12)
}

/// Certifies the pole-shifting function of a type-`d` triangle: a function
/// `w_d` with divisor `-qd P + d Q + d R + E`, `E >= 0` away from the
/// triangle.
///
/// For `d <= q` this is `w_d = (x-y)^d - (x-y-1)^d + (x-1)^d` (which
/// collapses to `x` for `d = 1`); for `d = q + 1` it is
/// `y_PQ * y_PR * y_PS^{q-2}` with `S` a fourth rational point. Both are
/// polynomial, so they have no pole away from `P_inf` and `E >= 0` holds
/// automatically; the three valuations are what needs checking.
pub fn verify_wd(params: &FieldParams, d: u64) -> Result<bool> {
    let q = params.q();
    let m = q + 1;
    if d == 0 || !m.is_multiple_of(d) {
        return Err(Error::TypeNotDivisor { d, q });
    }
    let tri = StandardTriangle::of_type(params, d)?;
    let w = if d < m {
        let x = CurveFunction::x(params);
        let y = CurveFunction::y(params);
        let one = CurveFunction::one(params);
        let xy = x.sub(params, &y);
        let xy1 = xy.sub(params, &one);
        let x1 = x.sub(params, &one);
        xy.pow(params, d as u32)
            .sub(params, &xy1.pow(params, d as u32))
            .add(params, &x1.pow(params, d as u32))
    } else {
        let s = curve_points(params)
            .into_iter()
            .find(|p| !p.is_infinity() && !tri.triangle().contains(p))
            .expect("the curve has more than four rational points");
        let y_ps = two_point_function(params, &s)?;
        tri.y_pq
            .mul(params, &tri.y_pr)
            .mul(params, &y_ps.pow(params, q as u32 - 2))
    };
    let v_p = valuation(params, &w, &tri.p_inf)?;
    let v_q = valuation(params, &w, &tri.q_00)?;
    let v_r = valuation(params, &w, &tri.r_ab)?;
    Ok(v_p == -((q * d) as i64) && v_q == d as i64 && v_r == d as i64)
}
