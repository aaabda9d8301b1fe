//! Exact arithmetic in `F_{q^2}`, the quadratic extension of `F_q`, `q = p^e`.
//!
//! Elements are polynomial-basis coordinate vectors over the prime field
//! `F_p`, reduced modulo a deterministically chosen irreducible modulus of
//! degree `2e` (the lexicographically least one, scanning monic polynomials
//! in ascending base-`p` index of their low coefficients). Fixing the modulus
//! this way keeps element encodings stable across runs and platforms.
//!
//! Arithmetic is table-free: products are computed by convolution and
//! reduction on the spot, which is plenty at desk scale (`q <= 16`).

use std::fmt;

use crate::{Error, Result};

/// Largest supported extension degree `2e` (q = p^e <= 16 forces 2e <= 8).
pub const MAX_EXT_DEGREE: usize = 8;

/// Largest supported `q`.
pub const MAX_Q: u64 = 16;

/// An element of `F_{q^2}` in polynomial-basis coordinates.
///
/// Only the first `2e` entries are in use; the tail is zero, so derived
/// equality, ordering, and hashing agree with the mathematical element.
/// All coefficients are reduced into `[0, p)`. Operations live on
/// [`FieldParams`], which carries the modulus.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct FieldElement {
    coeffs: [u8; MAX_EXT_DEGREE],
}

impl FieldElement {
    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|&c| c == 0)
    }

    /// Coefficient of `t^i` in the polynomial basis.
    pub fn coeff(&self, i: usize) -> u8 {
        self.coeffs[i]
    }
}

impl fmt::Debug for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let top = self
            .coeffs
            .iter()
            .rposition(|&c| c != 0)
            .map_or(0, |i| i + 1);
        write!(f, "Fe{:?}", &self.coeffs[..top.max(1)])
    }
}

/// Parameters of a concrete field `F_{q^2}`: the prime `p`, the exponent `e`
/// with `q = p^e`, and the monic irreducible modulus of degree `2e` over
/// `F_p`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FieldParams {
    p: u64,
    e: u32,
    q: u64,
    ext_degree: usize,
    /// Low coefficients of the monic modulus, `modulus[i]` multiplying `t^i`.
    modulus: [u8; MAX_EXT_DEGREE],
}

impl FieldParams {
    /// Builds `F_{q^2}` for `q = p^e`.
    ///
    /// The modulus is the lexicographically least monic irreducible
    /// polynomial of degree `2e` over `F_p`, so element encodings are
    /// reproducible.
    pub fn new(p: u64, e: u32) -> Result<FieldParams> {
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        if e == 0 {
            return Err(Error::ZeroExponent);
        }
        let q = p
            .checked_pow(e)
            .filter(|&q| q <= MAX_Q)
            .ok_or(Error::TooLarge {
                what: "q = p^e",
                value: p.saturating_pow(e),
                max: MAX_Q,
            })?;
        let ext_degree = 2 * e as usize;
        let modulus = least_irreducible(p, ext_degree)
            .expect("an irreducible polynomial of each degree exists over F_p");
        Ok(FieldParams {
            p,
            e,
            q,
            ext_degree,
            modulus,
        })
    }

    /// Convenience constructor from a prime power `q <= 16`.
    pub fn for_q(q: u64) -> Result<FieldParams> {
        let (p, e) = prime_power(q).ok_or(Error::NotPrimePower(q))?;
        FieldParams::new(p, e)
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn e(&self) -> u32 {
        self.e
    }

    pub fn q(&self) -> u64 {
        self.q
    }

    /// Number of elements of the field, `q^2`.
    pub fn order(&self) -> u64 {
        self.q * self.q
    }

    /// Degree `2e` of the extension over the prime field.
    pub fn ext_degree(&self) -> usize {
        self.ext_degree
    }

    /// Low coefficients of the monic modulus.
    pub fn modulus(&self) -> &[u8] {
        &self.modulus[..self.ext_degree]
    }

    pub fn zero(&self) -> FieldElement {
        FieldElement {
            coeffs: [0; MAX_EXT_DEGREE],
        }
    }

    pub fn one(&self) -> FieldElement {
        self.from_int(1)
    }

    /// The element `n mod p` of the prime subfield.
    pub fn from_int(&self, n: u64) -> FieldElement {
        let mut coeffs = [0; MAX_EXT_DEGREE];
        coeffs[0] = (n % self.p) as u8;
        FieldElement { coeffs }
    }

    /// Decodes an element from its index `n = sum coeffs[i] * p^i`.
    pub fn from_index(&self, n: u64) -> Result<FieldElement> {
        if n >= self.order() {
            return Err(Error::IndexOutOfRange {
                index: n,
                order: self.order(),
            });
        }
        let mut coeffs = [0; MAX_EXT_DEGREE];
        let mut n = n;
        for c in coeffs.iter_mut().take(self.ext_degree) {
            *c = (n % self.p) as u8;
            n /= self.p;
        }
        Ok(FieldElement { coeffs })
    }

    /// The stable integer index of an element (base-`p` positional encoding
    /// of its coordinates). This is the serialization format used by the CLI.
    pub fn index(&self, z: FieldElement) -> u64 {
        let mut n = 0;
        for i in (0..self.ext_degree).rev() {
            n = n * self.p + z.coeffs[i] as u64;
        }
        n
    }

    /// All elements of the field in index order.
    pub fn elements(&self) -> impl Iterator<Item = FieldElement> + '_ {
        (0..self.order()).map(|n| self.from_index(n).expect("index in range"))
    }

    pub fn add(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        let mut coeffs = [0; MAX_EXT_DEGREE];
        for (i, c) in coeffs.iter_mut().take(self.ext_degree).enumerate() {
            *c = ((a.coeffs[i] as u64 + b.coeffs[i] as u64) % self.p) as u8;
        }
        FieldElement { coeffs }
    }

    pub fn neg(&self, a: FieldElement) -> FieldElement {
        let mut coeffs = [0; MAX_EXT_DEGREE];
        for (i, c) in coeffs.iter_mut().take(self.ext_degree).enumerate() {
            *c = ((self.p - a.coeffs[i] as u64) % self.p) as u8;
        }
        FieldElement { coeffs }
    }

    pub fn sub(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        self.add(a, self.neg(b))
    }

    pub fn mul(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        let n = self.ext_degree;
        let mut acc = [0u64; 2 * MAX_EXT_DEGREE];
        for i in 0..n {
            if a.coeffs[i] == 0 {
                continue;
            }
            let ai = a.coeffs[i] as u64;
            for j in 0..n {
                acc[i + j] += ai * b.coeffs[j] as u64;
            }
        }
        // Replace t^k by t^{k-n} * (-modulus), top degree first.
        for k in (n..2 * n - 1).rev() {
            let f = acc[k] % self.p;
            acc[k] = 0;
            if f != 0 {
                for i in 0..n {
                    acc[k - n + i] += f * ((self.p - self.modulus[i] as u64) % self.p);
                }
            }
        }
        let mut coeffs = [0; MAX_EXT_DEGREE];
        for i in 0..n {
            coeffs[i] = (acc[i] % self.p) as u8;
        }
        FieldElement { coeffs }
    }

    pub fn pow(&self, a: FieldElement, mut n: u64) -> FieldElement {
        let mut base = a;
        let mut out = self.one();
        while n > 0 {
            if n & 1 == 1 {
                out = self.mul(out, base);
            }
            base = self.mul(base, base);
            n >>= 1;
        }
        out
    }

    /// Multiplicative inverse.
    pub fn inv(&self, a: FieldElement) -> Result<FieldElement> {
        if a.is_zero() {
            return Err(Error::ZeroElement);
        }
        Ok(self.pow(a, self.order() - 2))
    }

    /// The `q`-power Frobenius `z -> z^q`, the Galois involution of
    /// `F_{q^2}` over `F_q`.
    pub fn frobenius(&self, z: FieldElement) -> FieldElement {
        self.pow(z, self.q)
    }

    /// True when `z` lies in the subfield `F_q`, i.e. `z^q = z`.
    pub fn in_base_field(&self, z: FieldElement) -> bool {
        self.frobenius(z) == z
    }

    /// Least `n >= 1` with `z^n = 1`; divides `q^2 - 1`.
    pub fn element_order(&self, z: FieldElement) -> Result<u64> {
        if z.is_zero() {
            return Err(Error::ZeroElement);
        }
        let group = self.order() - 1;
        let mut ord = group;
        for f in prime_factors(group) {
            while ord.is_multiple_of(f) && self.pow(z, ord / f) == self.one() {
                ord /= f;
            }
        }
        Ok(ord)
    }

    /// The least-index generator of the cyclic group `F_{q^2}^x`.
    pub fn primitive_element(&self) -> FieldElement {
        let group = self.order() - 1;
        self.elements()
            .find(|z| !z.is_zero() && self.element_order(*z).unwrap() == group)
            .expect("the multiplicative group of a finite field is cyclic")
    }

    /// The `q` solutions `beta` of the fiber equation
    /// `beta^q + beta = alpha^{q+1}`, in index order.
    ///
    /// The map `beta -> beta^q + beta` is `F_q`-linear onto `F_q` with kernel
    /// of size `q`, so every fiber has exactly `q` elements.
    pub fn hermitian_fiber(&self, alpha: FieldElement) -> Vec<FieldElement> {
        let target = self.pow(alpha, self.q + 1);
        let fiber: Vec<FieldElement> = self
            .elements()
            .filter(|&b| self.add(self.frobenius(b), b) == target)
            .collect();
        debug_assert_eq!(fiber.len() as u64, self.q);
        fiber
    }
}

/// Trial-division primality check, sufficient for `p <= 13`.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// Writes `q` as `p^e` with `p` prime, if possible.
pub fn prime_power(q: u64) -> Option<(u64, u32)> {
    if q < 2 {
        return None;
    }
    let mut p = 2;
    while p * p <= q {
        if q.is_multiple_of(p) {
            let mut rest = q;
            let mut e = 0;
            while rest.is_multiple_of(p) {
                rest /= p;
                e += 1;
            }
            return if rest == 1 { Some((p, e)) } else { None };
        }
        p += 1;
    }
    Some((q, 1))
}

/// Distinct prime factors of `n`, ascending.
pub fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            out.push(d);
            while n.is_multiple_of(d) {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

/// Lexicographically least monic irreducible of degree `deg` over `F_p`,
/// scanning low-coefficient vectors in ascending base-`p` index order.
/// Returns the low coefficients.
fn least_irreducible(p: u64, deg: usize) -> Option<[u8; MAX_EXT_DEGREE]> {
    let count = p.pow(deg as u32);
    for n in 0..count {
        let mut low = [0u8; MAX_EXT_DEGREE];
        let mut v = n;
        for c in low.iter_mut().take(deg) {
            *c = (v % p) as u8;
            v /= p;
        }
        if is_irreducible(&low, deg, p) {
            return Some(low);
        }
    }
    None
}

/// Irreducibility of a monic polynomial by trial division: no monic divisor
/// of degree `1..=deg/2` divides it. Cheap for `deg <= 8`, `p <= 13`.
fn is_irreducible(low: &[u8; MAX_EXT_DEGREE], deg: usize, p: u64) -> bool {
    let mut poly = vec![0u64; deg + 1];
    for (i, &c) in low.iter().take(deg).enumerate() {
        poly[i] = c as u64;
    }
    poly[deg] = 1;
    for div_deg in 1..=deg / 2 {
        let count = p.pow(div_deg as u32);
        for n in 0..count {
            let mut divisor = vec![0u64; div_deg + 1];
            let mut v = n;
            for c in divisor.iter_mut().take(div_deg) {
                *c = v % p;
                v /= p;
            }
            divisor[div_deg] = 1;
            if poly_rem_is_zero(&poly, &divisor, p) {
                return false;
            }
        }
    }
    true
}

/// True when `divisor` (monic) divides `poly` over `F_p`.
fn poly_rem_is_zero(poly: &[u64], divisor: &[u64], p: u64) -> bool {
    let mut rem = poly.to_vec();
    let dd = divisor.len() - 1;
    for k in (dd..rem.len()).rev() {
        let f = rem[k] % p;
        if f == 0 {
            continue;
        }
        for i in 0..=dd {
            rem[k - dd + i] = (rem[k - dd + i] + f * ((p - divisor[i] % p) % p)) % p;
        }
    }
    rem.iter().take(dd).all(|&c| c % p == 0)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f4() -> FieldParams {
        FieldParams::new(2, 1).unwrap()
    }

    #[test]
    fn field_sizes() {
        assert_eq!(FieldParams::new(2, 1).unwrap().order(), 4);
        assert_eq!(FieldParams::new(3, 1).unwrap().order(), 9);
        assert_eq!(FieldParams::new(2, 2).unwrap().order(), 16);
        assert_eq!(FieldParams::new(2, 2).unwrap().q(), 4);
    }

    #[test]
    fn rejects_bad_parameters() {
        assert_eq!(FieldParams::new(4, 1).unwrap_err(), Error::NotPrime(4));
        assert_eq!(FieldParams::new(2, 0).unwrap_err(), Error::ZeroExponent);
        assert!(matches!(
            FieldParams::new(2, 5).unwrap_err(),
            Error::TooLarge { .. }
        ));
        assert_eq!(FieldParams::for_q(6).unwrap_err(), Error::NotPrimePower(6));
        assert_eq!(FieldParams::for_q(12).unwrap_err(), Error::NotPrimePower(12));
    }

    #[test]
    fn f4_modulus_is_t2_t_1() {
        // Indices 0..2 give t^2, t^2+1, t^2+t, all reducible; index 3 works.
        let f = f4();
        assert_eq!(f.modulus(), &[1, 1]);
    }

    #[test]
    fn modulus_is_least_irreducible_for_all_desk_fields() {
        for q in [2u64, 3, 4, 5, 7, 8, 9, 11, 13, 16] {
            let f = FieldParams::for_q(q).unwrap();
            // Re-derive: every smaller monic polynomial of the same degree
            // must have a nontrivial monic divisor.
            let deg = f.ext_degree();
            let p = f.p();
            let mut idx = 0;
            for (i, &c) in f.modulus().iter().enumerate().rev() {
                let _ = i;
                idx = idx * p + c as u64;
            }
            for n in 0..idx {
                let mut low = [0u8; MAX_EXT_DEGREE];
                let mut v = n;
                for c in low.iter_mut().take(deg) {
                    *c = (v % p) as u8;
                    v /= p;
                }
                assert!(!is_irreducible(&low, deg, p), "q={q}: index {n} irreducible");
            }
        }
    }

    #[test]
    fn field_axioms_exhaustive_small() {
        for q in [2u64, 3] {
            let f = FieldParams::for_q(q).unwrap();
            let all: Vec<_> = f.elements().collect();
            for &a in &all {
                for &b in &all {
                    assert_eq!(f.mul(a, b), f.mul(b, a));
                    assert_eq!(f.add(a, b), f.add(b, a));
                    for &c in &all {
                        assert_eq!(f.mul(f.mul(a, b), c), f.mul(a, f.mul(b, c)));
                        assert_eq!(f.add(f.add(a, b), c), f.add(a, f.add(b, c)));
                        assert_eq!(
                            f.mul(a, f.add(b, c)),
                            f.add(f.mul(a, b), f.mul(a, c))
                        );
                    }
                }
            }
            for &a in &all {
                if !a.is_zero() {
                    assert_eq!(f.mul(a, f.inv(a).unwrap()), f.one());
                }
            }
        }
    }

    #[test]
    fn field_axioms_sampled_q4() {
        let f = FieldParams::for_q(4).unwrap();
        // A fixed stride keeps this deterministic and fast.
        let sample: Vec<_> = f.elements().step_by(3).collect();
        for &a in &sample {
            for &b in &sample {
                for &c in &sample {
                    assert_eq!(f.mul(f.mul(a, b), c), f.mul(a, f.mul(b, c)));
                    assert_eq!(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c)));
                }
            }
            if !a.is_zero() {
                assert_eq!(f.mul(a, f.inv(a).unwrap()), f.one());
            }
        }
    }

    #[test]
    fn element_order_examples() {
        let f = f4();
        assert_eq!(f.element_order(f.one()).unwrap(), 1);
        // omega = t has index 2 and order 3 in F_4.
        let omega = f.from_index(2).unwrap();
        assert_eq!(f.element_order(omega).unwrap(), 3);
        assert_eq!(f.element_order(f.zero()).unwrap_err(), Error::ZeroElement);

        // F_9: the cyclic group of order 8 has exactly 4 elements of order
        // dividing 4.
        let f9 = FieldParams::new(3, 1).unwrap();
        let count = f9
            .elements()
            .filter(|z| !z.is_zero() && 4 % f9.element_order(*z).unwrap() == 0)
            .count();
        assert_eq!(count, 4);
    }

    #[test]
    fn order_is_minimal_exhaustive() {
        for q in [2u64, 3, 4] {
            let f = FieldParams::for_q(q).unwrap();
            for z in f.elements().filter(|z| !z.is_zero()) {
                let ord = f.element_order(z).unwrap();
                assert_eq!(f.pow(z, ord), f.one());
                assert_eq!((f.order() - 1) % ord, 0);
                for k in 1..ord {
                    assert_ne!(f.pow(z, k), f.one());
                }
            }
        }
    }

    #[test]
    fn frobenius_is_a_galois_involution() {
        for q in [2u64, 3, 4] {
            let f = FieldParams::for_q(q).unwrap();
            assert!(f.frobenius(f.zero()).is_zero());
            let mut fixed = 0;
            for z in f.elements() {
                assert_eq!(f.frobenius(f.frobenius(z)), z);
                if f.frobenius(z) == z {
                    fixed += 1;
                }
            }
            // Frobenius fixes exactly the base field F_q.
            assert_eq!(fixed, f.q());
        }
    }

    #[test]
    fn hermitian_fiber_examples() {
        let f = f4();
        let fiber0 = f.hermitian_fiber(f.zero());
        assert_eq!(
            fiber0,
            vec![f.from_index(0).unwrap(), f.from_index(1).unwrap()]
        );
        // alpha = 1: the roots of b^2 + b = 1 in F_4 are omega and omega^2.
        let fiber1 = f.hermitian_fiber(f.one());
        assert_eq!(
            fiber1,
            vec![f.from_index(2).unwrap(), f.from_index(3).unwrap()]
        );
    }

    #[test]
    fn hermitian_fiber_properties() {
        for q in [2u64, 3, 4] {
            let f = FieldParams::for_q(q).unwrap();
            for alpha in f.elements() {
                let fiber = f.hermitian_fiber(alpha);
                assert_eq!(fiber.len() as u64, q);
                for (i, &a) in fiber.iter().enumerate() {
                    for &b in &fiber[i + 1..] {
                        assert_ne!(a, b);
                        let delta = f.sub(a, b);
                        assert!(f.add(f.frobenius(delta), delta).is_zero());
                    }
                }
            }
        }
    }

    #[test]
    fn index_round_trip() {
        for q in [2u64, 3, 4, 5, 8, 9, 16] {
            let f = FieldParams::for_q(q).unwrap();
            for n in 0..f.order() {
                assert_eq!(f.index(f.from_index(n).unwrap()), n);
            }
            assert!(f.from_index(f.order()).is_err());
        }
    }

    #[test]
    fn primitive_element_generates() {
        for q in [2u64, 3, 4, 5] {
            let f = FieldParams::for_q(q).unwrap();
            let w = f.primitive_element();
            assert_eq!(f.element_order(w).unwrap(), f.order() - 1);
        }
    }
}
