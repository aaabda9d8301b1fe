//! Closed-form discrepancy tables for Hermitian triangles, and the
//! Riemann-Roch dimension formula and base-point predicates they induce.
//!
//! For a triangle `{P, Q, R}` of type `d`, the discrepancy function
//! `sigma_ij` is the unique integer making `iP + jQ + sigma_ij R` a
//! discrepancy for the pair `(Q, R)`, i.e. a divisor `D` with
//! `L(D) != L(D - Q)` and `L(D - R) = L(D - Q - R)`. It satisfies the
//! periodicity `sigma_{i+sm, j+tm} = sigma_ij - sm - tm` with `m = q + 1`,
//! so a single `m x m` fundamental domain determines it everywhere. The
//! function is symmetric in the triangle's points and depends only on the
//! type `d`, which is what makes a purely combinatorial table possible.
//!
//! Every dimension `dim L(aP + bQ + cR)` is recovered from the table by a
//! lattice-point count, and gaps and pure gaps are read off from the
//! base-point criterion `sigma_ab > c`.

use crate::{Error, Result};

/// Which of the three points of an ordered triangle a predicate refers to.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Slot {
    P,
    Q,
    R,
}

/// Position of a pair `(i, j)` in the strip where the closed formula for
/// `sigma_ij` is stated: `Plus` and `Minus` mark the loci where the type-`d`
/// value differs from the collinear one by `+1` and `-1`.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum LambdaClass {
    Plus,
    Minus,
    Zero,
}

/// The discrepancy function of a triangle type, stored on the fundamental
/// domain `0 <= i, j < m` and extended by periodicity.
#[derive(Clone, Debug)]
pub struct SigmaTable {
    q: i64,
    m: i64,
    g: i64,
    d: i64,
    /// Collinear values on the fundamental domain: 0 for `j = 0`, otherwise
    /// `2g - 2 - jq + m*[j > i]`.
    base: Vec<Vec<i64>>,
    /// Type correction: `+1` where `i != 0 mod d` and `j = i mod m`, `-1`
    /// where `i != 0 mod d` and `j = i + 1 mod m`, else 0.
    epsilon: Vec<Vec<i8>>,
}

impl SigmaTable {
    /// Builds the table for a triangle of type `d` on the curve with
    /// parameter `q` (a prime power, with `d | q + 1`).
    pub fn new(q: u64, d: u64) -> Result<SigmaTable> {
        if crate::field::prime_power(q).is_none() {
            return Err(Error::NotPrimePower(q));
        }
        if d == 0 || !(q + 1).is_multiple_of(d) {
            return Err(Error::TypeNotDivisor { d, q });
        }
        let qi = q as i64;
        let m = qi + 1;
        let g = qi * (qi - 1) / 2;
        let di = d as i64;
        let mut base = vec![vec![0i64; m as usize]; m as usize];
        let mut epsilon = vec![vec![0i8; m as usize]; m as usize];
        for i in 0..m {
            for j in 0..m {
                base[i as usize][j as usize] = if j == 0 {
                    0
                } else {
                    2 * g - 2 - j * qi + if j > i { m } else { 0 }
                };
                if i % di != 0 {
                    if j == i {
                        epsilon[i as usize][j as usize] = 1;
                    } else if j == (i + 1) % m {
                        epsilon[i as usize][j as usize] = -1;
                    }
                }
            }
        }
        let table = SigmaTable {
            q: qi,
            m,
            g,
            d: di,
            base,
            epsilon,
        };
        table.assert_residue_bijection();
        Ok(table)
    }

    /// For each fixed `i`, `j -> sigma_ij mod m` must be a bijection on
    /// residues; this is what makes the dimension count well-defined.
    fn assert_residue_bijection(&self) {
        for i in 0..self.m {
            let mut seen = vec![false; self.m as usize];
            for j in 0..self.m {
                let r = self.sigma(i, j).rem_euclid(self.m) as usize;
                assert!(!seen[r], "sigma residues collide at i = {i}");
                seen[r] = true;
            }
        }
    }

    pub fn q(&self) -> i64 {
        self.q
    }

    /// The period `m = q + 1`.
    pub fn m(&self) -> i64 {
        self.m
    }

    /// The genus `q(q-1)/2`.
    pub fn genus(&self) -> i64 {
        self.g
    }

    /// The triangle type `d`.
    pub fn type_d(&self) -> i64 {
        self.d
    }

    /// `sigma_ij` for arbitrary integers, via the periodicity
    /// `sigma_{i+sm, j+tm} = sigma_ij - sm - tm`.
    pub fn sigma(&self, i: i64, j: i64) -> i64 {
        let i0 = i.rem_euclid(self.m);
        let j0 = j.rem_euclid(self.m);
        let s = (i - i0) / self.m;
        let t = (j - j0) / self.m;
        self.base[i0 as usize][j0 as usize] + self.epsilon[i0 as usize][j0 as usize] as i64
            - (s + t) * self.m
    }

    /// The combined fundamental-domain values `sigma_ij`, `0 <= i, j < m`,
    /// as rows indexed by `i`.
    pub fn fundamental_domain(&self) -> Vec<Vec<i64>> {
        (0..self.m)
            .map(|i| (0..self.m).map(|j| self.sigma(i, j)).collect())
            .collect()
    }

    /// Classifies `(i, j)` within the strip `1 <= j <= q + 1`,
    /// `1 <= i - j + 1 <= q + 1` on which the closed formula is stated (one
    /// sheared period of the lattice). Errors outside the strip.
    pub fn lambda_class(&self, i: i64, j: i64) -> Result<LambdaClass> {
        if j < 1 || j > self.m || i < j || i > j + self.q {
            return Err(Error::OutsideLambda { i, j });
        }
        if i.rem_euclid(self.d) != 0 {
            if j.rem_euclid(self.m) == i.rem_euclid(self.m) {
                return Ok(LambdaClass::Plus);
            }
            if j.rem_euclid(self.m) == (i + 1).rem_euclid(self.m) {
                return Ok(LambdaClass::Minus);
            }
        }
        Ok(LambdaClass::Zero)
    }

    /// `dim L(aP + bQ + cR)` by the closed lattice count
    ///
    /// ```text
    /// sum over residues j mod m with j + sigma_aj <= b + c of
    ///     floor((b - j)/m) + floor((c - sigma_aj)/m) + 1 .
    /// ```
    ///
    /// Negative coefficients are permitted (they arise in discrepancy
    /// checks); the result is checked against Riemann-Roch on both ends.
    pub fn dim_divisor(&self, a: i64, b: i64, c: i64) -> usize {
        let mut dim = 0i64;
        for j in 0..self.m {
            let s = self.sigma(a, j);
            if j + s <= b + c {
                let term = (b - j).div_euclid(self.m) + (c - s).div_euclid(self.m) + 1;
                debug_assert!(term >= 0, "summand must be nonnegative when included");
                dim += term;
            }
        }
        let deg = a + b + c;
        if deg < 0 {
            assert_eq!(dim, 0, "negative degree forces dimension 0");
        }
        if deg >= 2 * self.g - 1 {
            assert_eq!(dim, deg + 1 - self.g, "Riemann-Roch in the nonspecial range");
        }
        dim as usize
    }

    /// Whether `aP + bQ + cR` has a base point at the given slot, i.e. the
    /// corresponding discrepancy value exceeds the remaining coefficient:
    /// at `Q` iff `sigma_ab > c`, and cyclically `sigma_ca > b` at `P`,
    /// `sigma_bc > a` at `R`.
    pub fn has_basepoint(&self, triple: (i64, i64, i64), slot: Slot) -> Result<bool> {
        let (a, b, c) = triple;
        for v in [a, b, c] {
            if v < 0 {
                return Err(Error::NegativeCoefficient { value: v });
            }
        }
        Ok(match slot {
            Slot::P => self.sigma(c, a) > b,
            Slot::Q => self.sigma(a, b) > c,
            Slot::R => self.sigma(b, c) > a,
        })
    }

    /// A triple is a gap iff the divisor has a base point at one of the
    /// three points.
    pub fn is_gap(&self, triple: (i64, i64, i64)) -> Result<bool> {
        Ok(self.has_basepoint(triple, Slot::P)?
            || self.has_basepoint(triple, Slot::Q)?
            || self.has_basepoint(triple, Slot::R)?)
    }

    /// A gap is pure when the base point appears at all three points.
    pub fn is_pure_gap(&self, triple: (i64, i64, i64)) -> Result<bool> {
        Ok(self.has_basepoint(triple, Slot::P)?
            && self.has_basepoint(triple, Slot::Q)?
            && self.has_basepoint(triple, Slot::R)?)
    }
}
