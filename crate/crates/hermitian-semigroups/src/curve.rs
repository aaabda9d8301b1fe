//! The Hermitian curve `X^{q+1} = Y^q Z + Y Z^q` over `F_{q^2}`: point
//! enumeration, the unitary form, explicit automorphisms, and the reduction
//! of point triples to standard form with their type invariant.
//!
//! The curve has `q^3 + 1` rational points: `P_inf = (0:1:0)` and the affine
//! points `P_ab = (a:b:1)` with `b^q + b = a^{q+1}`. Its automorphism group
//! acts doubly transitively on them, and every automorphism is induced by an
//! explicit 3x3 matrix built from two curve points and a nonzero scalar.
//!
//! A *triangle* is a set of three distinct rational points. Every triangle
//! can be moved by an automorphism into standard form
//! `{P_inf, P_00, P_ab}` with either `a = 0` (the collinear case) or
//! `a = b`; the multiplicative order `d` of `1 - a` then divides `q + 1`
//! and is the invariant that determines the Weierstrass semigroup.

use crate::field::{FieldElement, FieldParams};
use crate::{Error, Result};

/// A rational point of the curve in normalized homogeneous coordinates:
/// `Z = 1` when `Z != 0`, otherwise `Y = 1` (the only curve point on the
/// line at infinity is `(0:1:0)`), otherwise `X = 1`.
///
/// Normalization is unique per projective class, so derived equality and
/// ordering are projective equality and a total point order.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct ProjectivePoint {
    x: FieldElement,
    y: FieldElement,
    z: FieldElement,
}

impl ProjectivePoint {
    /// Normalizes homogeneous coordinates; errors on `(0:0:0)`.
    pub fn new(params: &FieldParams, x: FieldElement, y: FieldElement, z: FieldElement) -> Result<Self> {
        if !z.is_zero() {
            let zi = params.inv(z)?;
            Ok(ProjectivePoint {
                x: params.mul(x, zi),
                y: params.mul(y, zi),
                z: params.one(),
            })
        } else if !y.is_zero() {
            let yi = params.inv(y)?;
            Ok(ProjectivePoint {
                x: params.mul(x, yi),
                y: params.one(),
                z: params.zero(),
            })
        } else if !x.is_zero() {
            Ok(ProjectivePoint {
                x: params.one(),
                y: params.zero(),
                z: params.zero(),
            })
        } else {
            Err(Error::DegeneratePoints)
        }
    }

    /// The point at infinity `(0:1:0)`.
    pub fn infinity(params: &FieldParams) -> Self {
        ProjectivePoint {
            x: params.zero(),
            y: params.one(),
            z: params.zero(),
        }
    }

    /// The affine point `P_ab = (a:b:1)`.
    pub fn affine(params: &FieldParams, alpha: FieldElement, beta: FieldElement) -> Self {
        ProjectivePoint {
            x: alpha,
            y: beta,
            z: params.one(),
        }
    }

    pub fn is_infinity(&self) -> bool {
        self.z.is_zero()
    }

    pub fn coords(&self) -> [FieldElement; 3] {
        [self.x, self.y, self.z]
    }

    /// Affine coordinates `(alpha, beta)`; errors at infinity.
    pub fn affine_coords(&self) -> Result<(FieldElement, FieldElement)> {
        if self.is_infinity() {
            Err(Error::PointAtInfinity)
        } else {
            Ok((self.x, self.y))
        }
    }
}

/// Evaluates the defining form `F(X,Y,Z) = X^{q+1} - Y^q Z - Y Z^q`.
pub fn curve_equation(params: &FieldParams, v: &[FieldElement; 3]) -> FieldElement {
    let q = params.q();
    let xq1 = params.pow(v[0], q + 1);
    let yqz = params.mul(params.pow(v[1], q), v[2]);
    let yzq = params.mul(v[1], params.pow(v[2], q));
    params.sub(params.sub(xq1, yqz), yzq)
}

/// True iff the point satisfies the curve equation.
pub fn on_curve(params: &FieldParams, p: &ProjectivePoint) -> bool {
    curve_equation(params, &p.coords()).is_zero()
}

/// All `q^3 + 1` rational points: `P_inf` first, then `P_ab` ordered by the
/// index of `a` and the fiber order of `b`.
pub fn curve_points(params: &FieldParams) -> Vec<ProjectivePoint> {
    let mut points = vec![ProjectivePoint::infinity(params)];
    for alpha in params.elements() {
        for beta in params.hermitian_fiber(alpha) {
            points.push(ProjectivePoint::affine(params, alpha, beta));
        }
    }
    debug_assert_eq!(points.len() as u64, params.q().pow(3) + 1);
    points
}

/// The sesquilinear form `Psi(v, w) = v1^q w1 - v2^q w3 - v3^q w2` attached
/// to the curve; `Psi(v, v) = F(v)`.
pub fn unitary_form(
    params: &FieldParams,
    v: &[FieldElement; 3],
    w: &[FieldElement; 3],
) -> FieldElement {
    let q = params.q();
    let t1 = params.mul(params.pow(v[0], q), w[0]);
    let t2 = params.mul(params.pow(v[1], q), w[2]);
    let t3 = params.mul(params.pow(v[2], q), w[1]);
    params.sub(params.sub(t1, t2), t3)
}

/// An automorphism of the curve, stored as an invertible 3x3 matrix acting
/// on column coordinate vectors, canonicalized projectively so that the
/// first nonzero entry in row-major order is 1.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct CurveAutomorphism {
    m: [[FieldElement; 3]; 3],
}

impl CurveAutomorphism {
    fn canonicalize(params: &FieldParams, m: [[FieldElement; 3]; 3]) -> Self {
        let lead = m
            .iter()
            .flatten()
            .find(|c| !c.is_zero())
            .expect("automorphism matrix is nonzero");
        let s = params.inv(*lead).expect("nonzero entry");
        let mut out = m;
        for row in out.iter_mut() {
            for c in row.iter_mut() {
                *c = params.mul(*c, s);
            }
        }
        CurveAutomorphism { m: out }
    }

    pub fn identity(params: &FieldParams) -> Self {
        let mut m = [[params.zero(); 3]; 3];
        for (i, row) in m.iter_mut().enumerate() {
            row[i] = params.one();
        }
        CurveAutomorphism { m }
    }

    pub fn matrix(&self) -> &[[FieldElement; 3]; 3] {
        &self.m
    }

    pub fn det(&self, params: &FieldParams) -> FieldElement {
        let m = &self.m;
        let mut det = params.zero();
        for (c0, c1, c2, sign_neg) in [
            (0, 1, 2, false),
            (1, 2, 0, false),
            (2, 0, 1, false),
            (2, 1, 0, true),
            (1, 0, 2, true),
            (0, 2, 1, true),
        ] {
            let term = params.mul(params.mul(m[0][c0], m[1][c1]), m[2][c2]);
            det = if sign_neg {
                params.sub(det, term)
            } else {
                params.add(det, term)
            };
        }
        det
    }

    /// Image of a point, re-normalized.
    pub fn apply(&self, params: &FieldParams, p: &ProjectivePoint) -> ProjectivePoint {
        let v = p.coords();
        let mut out = [params.zero(); 3];
        for (i, row) in self.m.iter().enumerate() {
            for (j, c) in row.iter().enumerate() {
                out[i] = params.add(out[i], params.mul(*c, v[j]));
            }
        }
        ProjectivePoint::new(params, out[0], out[1], out[2])
            .expect("an invertible matrix does not kill a point")
    }

    /// Matrix product `self . other` (apply `other` first).
    pub fn compose(&self, params: &FieldParams, other: &CurveAutomorphism) -> CurveAutomorphism {
        let mut m = [[params.zero(); 3]; 3];
        for (row, self_row) in m.iter_mut().zip(self.m.iter()) {
            for (j, entry) in row.iter_mut().enumerate() {
                for (k, other_row) in other.m.iter().enumerate() {
                    *entry = params.add(*entry, params.mul(self_row[k], other_row[j]));
                }
            }
        }
        CurveAutomorphism::canonicalize(params, m)
    }

    /// Inverse via the adjugate.
    pub fn inverse(&self, params: &FieldParams) -> CurveAutomorphism {
        let m = &self.m;
        let minor = |r: usize, c: usize| {
            let rs: Vec<usize> = (0..3).filter(|&i| i != r).collect();
            let cs: Vec<usize> = (0..3).filter(|&j| j != c).collect();
            params.sub(
                params.mul(m[rs[0]][cs[0]], m[rs[1]][cs[1]]),
                params.mul(m[rs[0]][cs[1]], m[rs[1]][cs[0]]),
            )
        };
        let mut adj = [[params.zero(); 3]; 3];
        for (r, c) in (0..3).flat_map(|r| (0..3).map(move |c| (r, c))) {
            let cof = minor(r, c);
            adj[c][r] = if (r + c) % 2 == 0 {
                cof
            } else {
                params.neg(cof)
            };
        }
        // Projectively the determinant scale is irrelevant.
        CurveAutomorphism::canonicalize(params, adj)
    }

    /// Image of a triangle (validity is preserved by automorphisms).
    pub fn apply_triangle(&self, params: &FieldParams, t: &Triangle) -> Triangle {
        let pts = t.points();
        Triangle::new(
            params,
            [
                self.apply(params, &pts[0]),
                self.apply(params, &pts[1]),
                self.apply(params, &pts[2]),
            ],
        )
        .expect("automorphisms preserve triangles")
    }
}

/// The explicit automorphism attached to two distinct rational points
/// `A = (alpha:beta:gamma)`, `B = (lambda:mu:nu)` and a unit `eps`. It maps
/// `P_00` to `A` and `P_inf` to `B`, and every automorphism of the curve
/// arises this way.
pub fn automorphism(
    params: &FieldParams,
    a: &ProjectivePoint,
    b: &ProjectivePoint,
    eps: FieldElement,
) -> Result<CurveAutomorphism> {
    if a == b {
        return Err(Error::DegeneratePoints);
    }
    if eps.is_zero() {
        return Err(Error::ZeroScale);
    }
    if !on_curve(params, a) || !on_curve(params, b) {
        return Err(Error::PointOffCurve);
    }
    let q = params.q();
    let [alpha, beta, gamma] = a.coords();
    let [lambda, mu, nu] = b.coords();
    // xi = -Psi(B, A); nonzero for distinct curve points since a line meets
    // the curve in at most q+1 of the q^2+1 rational points of the line.
    let xi = params.sub(
        params.add(
            params.mul(params.pow(mu, q), gamma),
            params.mul(params.pow(nu, q), beta),
        ),
        params.mul(params.pow(lambda, q), alpha),
    );
    assert!(!xi.is_zero(), "unitary form vanished on two curve points");
    let exi = params.mul(params.pow(eps, q + 1), xi);
    let col0 = [
        params.mul(
            eps,
            params.pow(params.sub(params.mul(gamma, mu), params.mul(beta, nu)), q),
        ),
        params.mul(
            eps,
            params.pow(params.sub(params.mul(alpha, mu), params.mul(beta, lambda)), q),
        ),
        params.mul(
            eps,
            params.pow(params.sub(params.mul(gamma, lambda), params.mul(alpha, nu)), q),
        ),
    ];
    let m = [
        [col0[0], params.mul(exi, lambda), alpha],
        [col0[1], params.mul(exi, mu), beta],
        [col0[2], params.mul(exi, nu), gamma],
    ];
    Ok(CurveAutomorphism::canonicalize(params, m))
}

/// The two-point stabilizer `phi_eps : (X:Y:Z) -> (eps X : eps^{q+1} Y : Z)`,
/// fixing `P_00` and `P_inf`.
pub fn scaling(params: &FieldParams, eps: FieldElement) -> Result<CurveAutomorphism> {
    if eps.is_zero() {
        return Err(Error::ZeroScale);
    }
    let m = [
        [eps, params.zero(), params.zero()],
        [params.zero(), params.pow(eps, params.q() + 1), params.zero()],
        [params.zero(), params.zero(), params.one()],
    ];
    Ok(CurveAutomorphism::canonicalize(params, m))
}

/// A Hermitian triangle: a set of three distinct rational points, stored
/// sorted. The type `d` (a divisor of `q+1`, with `d = 1` exactly for
/// collinear triangles) is computed at construction.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Triangle {
    points: [ProjectivePoint; 3],
    type_d: u64,
}

impl Triangle {
    /// Validates the three points (distinct, rational, on the curve) and
    /// computes the type.
    pub fn new(params: &FieldParams, mut points: [ProjectivePoint; 3]) -> Result<Self> {
        points.sort();
        if points[0] == points[1] || points[1] == points[2] {
            return Err(Error::DegeneratePoints);
        }
        for p in &points {
            if !on_curve(params, p) {
                return Err(Error::PointOffCurve);
            }
        }
        let (_, _, type_d) = standard_reduce(params, &points)?;
        Ok(Triangle { points, type_d })
    }

    pub fn points(&self) -> &[ProjectivePoint; 3] {
        &self.points
    }

    pub fn contains(&self, p: &ProjectivePoint) -> bool {
        self.points.contains(p)
    }

    /// The type invariant `d | q + 1`; equals 1 iff the triangle is collinear.
    pub fn type_d(&self) -> u64 {
        self.type_d
    }

    /// Collinearity in `P^2`, by a coordinate determinant.
    pub fn is_collinear(&self, params: &FieldParams) -> bool {
        let [a, b, c] = &self.points;
        let det3 = |u: [FieldElement; 3], v: [FieldElement; 3], w: [FieldElement; 3]| {
            let mut det = params.zero();
            for (i, j, k, neg) in [
                (0, 1, 2, false),
                (1, 2, 0, false),
                (2, 0, 1, false),
                (2, 1, 0, true),
                (1, 0, 2, true),
                (0, 2, 1, true),
            ] {
                let term = params.mul(params.mul(u[i], v[j]), w[k]);
                det = if neg {
                    params.sub(det, term)
                } else {
                    params.add(det, term)
                };
            }
            det
        };
        det3(a.coords(), b.coords(), c.coords()).is_zero()
    }

    /// True when the point set is `{P_inf, P_00, P_ab}` with `a = 0` or
    /// `a = b`.
    pub fn is_standard(&self, params: &FieldParams) -> bool {
        self.standard_vertex(params).is_some()
    }

    /// For a standard triangle, the third vertex `P_ab`.
    pub fn standard_vertex(&self, params: &FieldParams) -> Option<ProjectivePoint> {
        let p_inf = ProjectivePoint::infinity(params);
        let p_00 = ProjectivePoint::affine(params, params.zero(), params.zero());
        if !self.contains(&p_inf) || !self.contains(&p_00) {
            return None;
        }
        let third = *self
            .points
            .iter()
            .find(|p| **p != p_inf && **p != p_00)
            .expect("three distinct points");
        let (alpha, beta) = third.affine_coords().expect("third vertex is affine");
        if alpha.is_zero() || alpha == beta {
            Some(third)
        } else {
            None
        }
    }
}

/// Shared reduction: maps the point triple into standard form and reports
/// `(automorphism, standard points, type d)`.
fn standard_reduce(
    params: &FieldParams,
    points: &[ProjectivePoint; 3],
) -> Result<(CurveAutomorphism, [ProjectivePoint; 3], u64)> {
    let p_inf = ProjectivePoint::infinity(params);
    let p_00 = ProjectivePoint::affine(params, params.zero(), params.zero());

    // Already standard: report the identity, preserving the triangle.
    let already = points.contains(&p_inf) && points.contains(&p_00) && {
        let third = points.iter().find(|p| **p != p_inf && **p != p_00).unwrap();
        let (alpha, beta) = third.affine_coords()?;
        alpha.is_zero() || alpha == beta
    };
    let (sigma, reduced) = if already {
        (CurveAutomorphism::identity(params), *points)
    } else {
        // Send points[0] to P_00 and points[1] to P_inf by inverting the
        // explicit automorphism that does the opposite; the first candidate
        // pair in sorted order always succeeds.
        let h = automorphism(params, &points[0], &points[1], params.one())?;
        let h_inv = h.inverse(params);
        let mapped = [
            h_inv.apply(params, &points[0]),
            h_inv.apply(params, &points[1]),
            h_inv.apply(params, &points[2]),
        ];
        debug_assert_eq!(mapped[0], p_00);
        debug_assert_eq!(mapped[1], p_inf);
        let (alpha, beta) = mapped[2].affine_coords()?;
        if alpha.is_zero() {
            (h_inv, mapped)
        } else {
            // Rescale so the third vertex becomes P_{a'a'}.
            let eps = params.pow(
                params.inv(params.mul(beta, params.inv(alpha)?))?,
                params.q(),
            );
            let phi = scaling(params, eps)?;
            let sigma = phi.compose(params, &h_inv);
            let mapped = [
                phi.apply(params, &mapped[0]),
                phi.apply(params, &mapped[1]),
                phi.apply(params, &mapped[2]),
            ];
            (sigma, mapped)
        }
    };

    let third = reduced
        .iter()
        .find(|p| **p != p_inf && **p != p_00)
        .ok_or(Error::DegeneratePoints)?;
    let (alpha, beta) = third.affine_coords()?;
    let type_d = if alpha.is_zero() {
        1
    } else {
        assert_eq!(alpha, beta, "standard reduction must end with a = 0 or a = b");
        params.element_order(params.sub(params.one(), alpha))?
    };
    debug_assert_eq!((params.q() + 1) % type_d, 0);
    Ok((sigma, reduced, type_d))
}

/// Reduces a triangle to standard form, returning the automorphism and its
/// image `{P_inf, P_00, P_ab}` with `a = 0` or `a = b`. A triangle already
/// standard is returned unchanged with the identity.
pub fn standard_form(params: &FieldParams, t: &Triangle) -> Result<(CurveAutomorphism, Triangle)> {
    let (sigma, pts, type_d) = standard_reduce(params, t.points())?;
    let mut points = pts;
    points.sort();
    Ok((sigma, Triangle { points, type_d }))
}

/// The type of a triangle: 1 iff collinear, otherwise the multiplicative
/// order of `1 - a` for its standard form `{P_inf, P_00, P_aa}`.
pub fn triangle_type(params: &FieldParams, t: &Triangle) -> u64 {
    let _ = params;
    t.type_d()
}

/// An automorphism acting as a 3-cycle on the triangle: with the ordering
/// `(P, Q, R)`, it maps `Q -> P -> R -> Q`. For the standard ordering
/// `(P_inf, P_00, P_ab)` this is the map with `P_00 -> P_inf -> P_ab -> P_00`.
pub fn three_cycle(
    params: &FieldParams,
    t: &Triangle,
    ordering: &[ProjectivePoint; 3],
) -> Result<CurveAutomorphism> {
    let mut sorted = *ordering;
    sorted.sort();
    if sorted != *t.points() {
        return Err(Error::DegeneratePoints);
    }
    let [p, q, r] = ordering;

    // Conjugate the standard-position construction: g carries (P_00, P_inf)
    // to (Q, P), and the base cycle acts on {P_inf, P_00, g^{-1}(R)}.
    let g = automorphism(params, q, p, params.one())?;
    let g_inv = g.inverse(params);
    let r0 = g_inv.apply(params, r);
    let (_, beta0) = r0.affine_coords()?;
    let eps = params.inv(params.pow(beta0, params.q()))?;
    let base = automorphism(params, &ProjectivePoint::infinity(params), &r0, eps)?;
    let sigma = g.compose(params, &base).compose(params, &g_inv);

    debug_assert_eq!(sigma.apply(params, q), *p);
    debug_assert_eq!(sigma.apply(params, p), *r);
    debug_assert_eq!(sigma.apply(params, r), *q);
    Ok(sigma)
}

/// Deterministic standard triangle of type `d`: `{P_inf, P_00, P_0b}` with
/// the least nonzero trace-zero `b` when `d = 1`, otherwise
/// `{P_inf, P_00, P_aa}` with `a = 1 - z` for the least-index `z` of
/// multiplicative order `d`.
pub fn standard_triangle_of_type(params: &FieldParams, d: u64) -> Result<Triangle> {
    if d == 0 || !(params.q() + 1).is_multiple_of(d) {
        return Err(Error::TypeNotDivisor {
            d,
            q: params.q(),
        });
    }
    let third = if d == 1 {
        let beta = params
            .hermitian_fiber(params.zero())
            .into_iter()
            .find(|b| !b.is_zero())
            .expect("the trace-zero kernel has q >= 2 elements");
        ProjectivePoint::affine(params, params.zero(), beta)
    } else {
        let zeta = params
            .elements()
            .find(|z| !z.is_zero() && params.element_order(*z).unwrap() == d)
            .expect("the cyclic group F_{q^2}^x has elements of each order dividing q^2 - 1");
        let alpha = params.sub(params.one(), zeta);
        ProjectivePoint::affine(params, alpha, alpha)
    };
    let t = Triangle::new(
        params,
        [
            ProjectivePoint::infinity(params),
            ProjectivePoint::affine(params, params.zero(), params.zero()),
            third,
        ],
    )?;
    debug_assert_eq!(t.type_d(), d);
    Ok(t)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f4() -> FieldParams {
        FieldParams::for_q(2).unwrap()
    }

    fn omega(f: &FieldParams) -> FieldElement {
        f.from_index(2).unwrap()
    }

    #[test]
    fn point_counts() {
        for (q, n) in [(2u64, 9usize), (3, 28), (4, 65)] {
            let f = FieldParams::for_q(q).unwrap();
            let pts = curve_points(&f);
            assert_eq!(pts.len(), n);
            for p in &pts {
                assert!(on_curve(&f, p));
            }
            let dedup: std::collections::BTreeSet<_> = pts.iter().collect();
            assert_eq!(dedup.len(), n);
        }
    }

    #[test]
    fn on_curve_examples() {
        let f = f4();
        let w = omega(&f);
        assert!(on_curve(&f, &ProjectivePoint::infinity(&f)));
        assert!(on_curve(
            &f,
            &ProjectivePoint::affine(&f, f.zero(), f.zero())
        ));
        // (1 : w : 1): w^2 + w = 1 = 1^3 holds in F_4.
        assert!(on_curve(&f, &ProjectivePoint::affine(&f, f.one(), w)));
        assert!(!on_curve(&f, &ProjectivePoint::affine(&f, f.one(), f.zero())));
    }

    #[test]
    fn unitary_form_examples() {
        let f = f4();
        let e_inf = [f.zero(), f.one(), f.zero()];
        let e_00 = [f.zero(), f.zero(), f.one()];
        assert!(unitary_form(&f, &e_inf, &e_inf).is_zero());
        assert_eq!(unitary_form(&f, &e_inf, &e_00), f.neg(f.one()));
        // Psi(v, v) = F(v) on every coordinate triple of F_4^3.
        for a in f.elements() {
            for b in f.elements() {
                for c in f.elements() {
                    let v = [a, b, c];
                    assert_eq!(unitary_form(&f, &v, &v), curve_equation(&f, &v));
                }
            }
        }
    }

    #[test]
    fn automorphism_moves_base_points_and_preserves_curve() {
        for q in [2u64, 3] {
            let f = FieldParams::for_q(q).unwrap();
            let pts = curve_points(&f);
            let p00 = ProjectivePoint::affine(&f, f.zero(), f.zero());
            let pinf = ProjectivePoint::infinity(&f);
            let eps_choices: Vec<_> = f.elements().filter(|e| !e.is_zero()).take(2).collect();
            for a in &pts {
                for b in &pts {
                    if a == b {
                        continue;
                    }
                    for &eps in &eps_choices {
                        let m = automorphism(&f, a, b, eps).unwrap();
                        assert_eq!(m.apply(&f, &p00), *a);
                        assert_eq!(m.apply(&f, &pinf), *b);
                        assert!(!m.det(&f).is_zero());
                        for p in pts.iter().take(5) {
                            assert!(on_curve(&f, &m.apply(&f, p)));
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn automorphism_moves_base_points_sampled_larger_q() {
        // Same property as above, sampled for q = 4 and 5.
        for q in [4u64, 5] {
            let f = FieldParams::for_q(q).unwrap();
            let pts = curve_points(&f);
            let p00 = ProjectivePoint::affine(&f, f.zero(), f.zero());
            let pinf = ProjectivePoint::infinity(&f);
            let eps = f.primitive_element();
            for (step, offset) in [(7usize, 1usize), (11, 3), (13, 5)] {
                for i in (offset..pts.len()).step_by(step) {
                    let a = pts[i];
                    let b = pts[(i * 5 + 2) % pts.len()];
                    if a == b {
                        continue;
                    }
                    let m = automorphism(&f, &a, &b, eps).unwrap();
                    assert_eq!(m.apply(&f, &p00), a);
                    assert_eq!(m.apply(&f, &pinf), b);
                    assert!(on_curve(&f, &m.apply(&f, &pts[i / 2])));
                }
            }
        }
    }

    #[test]
    fn types_are_send_and_sync() {
        // All domain values are immutable plain data, safe to share and
        // move across threads.
        fn assert_send_sync<T: Send + Sync>() {}
        assert_send_sync::<FieldParams>();
        assert_send_sync::<FieldElement>();
        assert_send_sync::<ProjectivePoint>();
        assert_send_sync::<CurveAutomorphism>();
        assert_send_sync::<Triangle>();
        assert_send_sync::<crate::discrepancy::SigmaTable>();
        assert_send_sync::<crate::census::GapCensus>();
        assert_send_sync::<crate::semigroup::GeneratingSet>();
        assert_send_sync::<crate::oracle::CurveFunction>();
        assert_send_sync::<crate::oracle::StandardTriangle>();
    }

    #[test]
    fn automorphism_determinant_formula() {
        // det M = eps^{q+2} xi^{q+2}, checked against the raw (uncanonicalized)
        // matrix for a sample of inputs.
        let f = FieldParams::for_q(3).unwrap();
        let q = f.q();
        let pts = curve_points(&f);
        for (a, b) in [(0usize, 1usize), (1, 5), (3, 9), (9, 27)] {
            let (a, b) = (&pts[a], &pts[b]);
            for eps in f.elements().filter(|e| !e.is_zero()).take(3) {
                let [alpha, beta, gamma] = a.coords();
                let [lambda, mu, nu] = b.coords();
                let xi = f.sub(
                    f.add(f.mul(f.pow(mu, q), gamma), f.mul(f.pow(nu, q), beta)),
                    f.mul(f.pow(lambda, q), alpha),
                );
                let exi = f.mul(f.pow(eps, q + 1), xi);
                let col0 = [
                    f.mul(eps, f.pow(f.sub(f.mul(gamma, mu), f.mul(beta, nu)), q)),
                    f.mul(eps, f.pow(f.sub(f.mul(alpha, mu), f.mul(beta, lambda)), q)),
                    f.mul(eps, f.pow(f.sub(f.mul(gamma, lambda), f.mul(alpha, nu)), q)),
                ];
                let m = CurveAutomorphism {
                    m: [
                        [col0[0], f.mul(exi, lambda), alpha],
                        [col0[1], f.mul(exi, mu), beta],
                        [col0[2], f.mul(exi, nu), gamma],
                    ],
                };
                let expected = f.mul(f.pow(eps, q + 2), f.pow(xi, q + 2));
                assert_eq!(m.det(&f), expected);
            }
        }
    }

    #[test]
    fn automorphism_rejects_bad_input() {
        let f = f4();
        let pts = curve_points(&f);
        assert_eq!(
            automorphism(&f, &pts[0], &pts[0], f.one()).unwrap_err(),
            Error::DegeneratePoints
        );
        assert_eq!(
            automorphism(&f, &pts[0], &pts[1], f.zero()).unwrap_err(),
            Error::ZeroScale
        );
    }

    #[test]
    fn compose_and_inverse() {
        let f = FieldParams::for_q(3).unwrap();
        let pts = curve_points(&f);
        let m = automorphism(&f, &pts[2], &pts[7], f.from_index(5).unwrap()).unwrap();
        let id = m.compose(&f, &m.inverse(&f));
        assert_eq!(id, CurveAutomorphism::identity(&f));
        for p in pts.iter().take(8) {
            assert_eq!(m.inverse(&f).apply(&f, &m.apply(&f, p)), *p);
        }
    }

    #[test]
    fn three_cycle_on_standard_triangle() {
        let f = f4();
        let w = omega(&f);
        let p = ProjectivePoint::infinity(&f);
        let q = ProjectivePoint::affine(&f, f.zero(), f.zero());
        let r = ProjectivePoint::affine(&f, w, w);
        let t = Triangle::new(&f, [p, q, r]).unwrap();
        let sigma = three_cycle(&f, &t, &[p, q, r]).unwrap();
        assert_eq!(sigma.apply(&f, &q), p);
        assert_eq!(sigma.apply(&f, &p), r);
        assert_eq!(sigma.apply(&f, &r), q);
        // sigma^3 restricted to T is the identity.
        let s3 = sigma.compose(&f, &sigma).compose(&f, &sigma);
        for v in t.points() {
            assert_eq!(s3.apply(&f, v), *v);
        }
    }

    #[test]
    fn three_cycle_on_general_triangles() {
        let f = FieldParams::for_q(3).unwrap();
        let pts = curve_points(&f);
        for (i, j, k) in [(0usize, 1usize, 2usize), (3, 11, 19), (5, 6, 27)] {
            let ordering = [pts[i], pts[j], pts[k]];
            let t = Triangle::new(&f, ordering).unwrap();
            let sigma = three_cycle(&f, &t, &ordering).unwrap();
            assert_eq!(sigma.apply(&f, &ordering[1]), ordering[0]);
            assert_eq!(sigma.apply(&f, &ordering[0]), ordering[2]);
            assert_eq!(sigma.apply(&f, &ordering[2]), ordering[1]);
        }
    }

    #[test]
    fn standard_form_examples() {
        let f = f4();
        let w = omega(&f);
        let w2 = f.from_index(3).unwrap();

        // Already standard: returned unchanged with the identity.
        let t = standard_triangle_of_type(&f, 3).unwrap();
        let (sigma, s) = standard_form(&f, &t).unwrap();
        assert_eq!(s, t);
        assert_eq!(sigma, CurveAutomorphism::identity(&f));

        // A general triangle reduces to a standard one of the same shape.
        let t = Triangle::new(
            &f,
            [
                ProjectivePoint::affine(&f, f.zero(), f.zero()),
                ProjectivePoint::affine(&f, f.zero(), f.one()),
                ProjectivePoint::affine(&f, w, w2),
            ],
        )
        .unwrap();
        let (sigma, s) = standard_form(&f, &t).unwrap();
        assert!(s.is_standard(&f));
        for p in s.points() {
            assert!(on_curve(&f, p));
        }
        // The automorphism really carries T onto the standard triangle.
        assert_eq!(sigma.apply_triangle(&f, &t), s);
        // If the reduced vertex is P_aa, then a satisfies a^{q+1} = a^q + a.
        let third = s.standard_vertex(&f).unwrap();
        let (alpha, _) = third.affine_coords().unwrap();
        if !alpha.is_zero() {
            assert_eq!(
                f.pow(alpha, f.q() + 1),
                f.add(f.pow(alpha, f.q()), alpha)
            );
        }
    }

    #[test]
    fn triangle_types() {
        let f = f4();
        let w = omega(&f);
        // Collinear: {P_inf, P_00, P_0b}.
        let t1 = Triangle::new(
            &f,
            [
                ProjectivePoint::infinity(&f),
                ProjectivePoint::affine(&f, f.zero(), f.zero()),
                ProjectivePoint::affine(&f, f.zero(), f.one()),
            ],
        )
        .unwrap();
        assert_eq!(t1.type_d(), 1);
        assert!(t1.is_collinear(&f));

        // {P_inf, P_00, P_ww}: 1 - w = w^2 has order 3.
        let t3 = Triangle::new(
            &f,
            [
                ProjectivePoint::infinity(&f),
                ProjectivePoint::affine(&f, f.zero(), f.zero()),
                ProjectivePoint::affine(&f, w, w),
            ],
        )
        .unwrap();
        assert_eq!(t3.type_d(), 3);
        assert!(!t3.is_collinear(&f));
    }

    #[test]
    fn type_is_galois_invariant() {
        for q in [3u64, 4] {
            let f = FieldParams::for_q(q).unwrap();
            let p_inf = ProjectivePoint::infinity(&f);
            let p_00 = ProjectivePoint::affine(&f, f.zero(), f.zero());
            for alpha in f.elements().filter(|a| !a.is_zero()) {
                if f.pow(alpha, q + 1) != f.add(f.pow(alpha, q), alpha) {
                    continue;
                }
                let t = Triangle::new(&f, [p_inf, p_00, ProjectivePoint::affine(&f, alpha, alpha)])
                    .unwrap();
                let conj = f.frobenius(alpha);
                let tc =
                    Triangle::new(&f, [p_inf, p_00, ProjectivePoint::affine(&f, conj, conj)])
                        .unwrap();
                assert_eq!(t.type_d(), tc.type_d());
            }
        }
    }

    #[test]
    fn collinearity_matches_type_one() {
        let f = FieldParams::for_q(3).unwrap();
        let pts = curve_points(&f);
        let mut seen_types = std::collections::BTreeSet::new();
        for i in 0..pts.len() {
            for j in (i + 1)..pts.len().min(i + 9) {
                for k in (j + 1)..pts.len().min(j + 9) {
                    let t = Triangle::new(&f, [pts[i], pts[j], pts[k]]).unwrap();
                    assert_eq!(t.type_d() == 1, t.is_collinear(&f));
                    seen_types.insert(t.type_d());
                }
            }
        }
        for d in &seen_types {
            assert_eq!((f.q() + 1) % d, 0);
        }
    }

    #[test]
    fn type_is_automorphism_invariant() {
        let f = f4();
        let pts = curve_points(&f);
        let mut triangles = Vec::new();
        for i in 0..pts.len() {
            for j in (i + 1)..pts.len() {
                for k in (j + 1)..pts.len() {
                    triangles.push(Triangle::new(&f, [pts[i], pts[j], pts[k]]).unwrap());
                }
            }
        }
        let eps = f.from_index(3).unwrap();
        for (a, b) in [(0usize, 1usize), (2, 5), (4, 8)] {
            let m = automorphism(&f, &pts[a], &pts[b], eps).unwrap();
            for t in &triangles {
                let image = m.apply_triangle(&f, t);
                assert_eq!(image.type_d(), t.type_d());
                assert_eq!(image.is_collinear(&f), t.is_collinear(&f));
            }
        }
    }

    #[test]
    fn every_divisor_type_is_realized() {
        for q in [2u64, 3, 4, 5] {
            let f = FieldParams::for_q(q).unwrap();
            let mut d = 1;
            while d <= q + 1 {
                if (q + 1) % d == 0 {
                    let t = standard_triangle_of_type(&f, d).unwrap();
                    assert_eq!(t.type_d(), d);
                    assert!(t.is_standard(&f));
                }
                d += 1;
            }
            assert!(standard_triangle_of_type(&f, q + 2).is_err());
        }
    }
}
