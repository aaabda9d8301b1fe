//! Minimal generating sets of the Weierstrass semigroups, and the closure
//! that recovers the full semigroup from them.
//!
//! The semigroup `H(P_1, ..., P_n)` is closed under coordinate-wise maxima
//! (`lub`), and is generated under `lub` by the union of the embedded
//! minimal generating sets of all point subsets. At one point the semigroup
//! is `<q, q+1>` for every rational point; at two points the minimal set is
//! the explicit family `{(-i + jm, iq - jm) : 0 <= i <= q, i < jm < iq}`;
//! at three points it is parameterized by a single integer `l` per stratum.
//! Each closed description is validated against a brute-force minimality
//! search straight from the definition.
//!
//! Minimal-set elements at two or more points must have strictly positive
//! coordinates; dropping that constraint would admit spurious elements that
//! happen to be discrepancies for every pair.

use std::collections::BTreeSet;

use crate::census::enumerate_gaps;
use crate::discrepancy::SigmaTable;
use crate::field::FieldParams;
use crate::oracle::{rr_dimension, StandardTriangle};
use crate::{Error, Result, Triple};

/// Coordinate-wise maximum of a nonempty list of triples.
pub fn lub(vs: &[Triple]) -> Result<Triple> {
    if vs.is_empty() {
        return Err(Error::EmptyList);
    }
    Ok(vs.iter().fold((0, 0, 0), |(a, b, c), &(x, y, z)| {
        (a.max(x), b.max(y), c.max(z))
    }))
}

/// Membership in the one-point semigroup `<q, q+1>`.
pub fn one_point_contains(q: u64, n: u64) -> bool {
    let m = q + 1;
    (0..=n / m).any(|j| (n - j * m).is_multiple_of(q))
}

/// The `g = q(q-1)/2` gaps of `<q, q+1>`; every coordinate of a two- or
/// three-point minimal generator lies here.
pub fn one_point_gaps(q: u64) -> BTreeSet<u32> {
    let g = q * (q - 1) / 2;
    let gaps: BTreeSet<u32> = (1..2 * g)
        .filter(|&n| !one_point_contains(q, n))
        .map(|n| n as u32)
        .collect();
    debug_assert_eq!(gaps.len() as u64, g);
    gaps
}

/// The minimal generating set of a two-point semigroup:
/// `{(-i + jm, iq - jm) : 0 <= i <= q, i < jm < iq}` with `m = q + 1`.
/// Independent of the choice of the two rational points.
pub fn gamma_two_point(q: u64) -> BTreeSet<(u32, u32)> {
    let m = q + 1;
    let mut out = BTreeSet::new();
    for i in 0..=q {
        for j in 1..=q {
            let jm = j * m;
            if i < jm && jm < i * q {
                out.insert(((jm - i) as u32, (i * q - jm) as u32));
            }
        }
    }
    out
}

/// Brute-force two-point minimal generating set from the definition, with
/// semigroup membership decided by the Riemann-Roch oracle:
/// `(a, b)` lies in `H(P, Q)` iff dropping either point changes the
/// dimension of `aP + bQ`.
pub fn gamma_two_point_bruteforce(params: &FieldParams) -> Result<BTreeSet<(u32, u32)>> {
    let q = params.q();
    let tri = StandardTriangle::of_type(params, 1)?;
    let bound = (q * (q - 1) - 1) as usize; // 2g - 1
    let mut member = vec![vec![false; bound + 1]; bound + 1];
    for (a, row) in member.iter_mut().enumerate() {
        for (b, entry) in row.iter_mut().enumerate() {
            let d0 = rr_dimension(params, &tri, a as i64, b as i64, 0);
            let dp = rr_dimension(params, &tri, a as i64 - 1, b as i64, 0);
            let dq = rr_dimension(params, &tri, a as i64, b as i64 - 1, 0);
            *entry = d0 != dp && d0 != dq;
        }
    }
    let mut out = BTreeSet::new();
    for a in 1..=bound {
        for b in 1..=bound {
            if !member[a][b] {
                continue;
            }
            let min_fiber_a = (0..b).all(|y| !member[a][y]);
            let min_fiber_b = (0..a).all(|x| !member[x][b]);
            if min_fiber_a || min_fiber_b {
                out.insert((a as u32, b as u32));
            }
        }
    }
    Ok(out)
}

/// The minimal generating set `Gamma^+(P, Q, R)` of a type-`d` triangle,
/// by its closed parameterization: writing `(a, b, c) = (i, j, k) + m *
/// (a1, b1, c1)` with residues in `[0, m)`, the element lies in the set iff
/// `a1 + b1 + c1 = q - 2 - l` for some `l` in `{1, ..., q-2}` with
///
/// * `(i, j, k) = (l, l, l)` when `l = 0 mod d`, or
/// * `(i, j, k)` a permutation of `(l+1, l, l)` when `l != 0 mod d`,
///
/// keeping only strictly positive triples.
///
/// The stratum `l = 0` is excluded: there `sigma_00 = 0` pins the
/// multiplier sum to zero, so the all-zero residue class meets `Z_{>0}^3`
/// only in triples that fail the discrepancy criterion (visible from q = 5
/// on, e.g. (6,6,6); the brute-force search below confirms the exclusion).
pub fn gamma_three_point(q: u64, d: u64) -> Result<BTreeSet<Triple>> {
    if crate::field::prime_power(q).is_none() {
        return Err(Error::NotPrimePower(q));
    }
    if d == 0 || !(q + 1).is_multiple_of(d) {
        return Err(Error::TypeNotDivisor { d, q });
    }
    let m = q + 1;
    let mut out = BTreeSet::new();
    for l in 1..=q.saturating_sub(2) {
        let sum = q - 2 - l;
        let residues: Vec<(u64, u64, u64)> = if l % d == 0 {
            vec![(l, l, l)]
        } else {
            vec![(l + 1, l, l), (l, l + 1, l), (l, l, l + 1)]
        };
        for (i, j, k) in residues {
            for a1 in 0..=sum {
                for b1 in 0..=(sum - a1) {
                    let c1 = sum - a1 - b1;
                    let t = (i + a1 * m, j + b1 * m, k + c1 * m);
                    if t.0 > 0 && t.1 > 0 && t.2 > 0 {
                        out.insert((t.0 as u32, t.1 as u32, t.2 as u32));
                    }
                }
            }
        }
    }
    Ok(out)
}

/// Brute-force `Gamma^+(P, Q, R)` straight from the definition: strictly
/// positive semigroup elements minimal in some coordinate fiber, searched
/// over the box `[1, 2g-1]^3` (every coordinate of a minimal generator is a
/// one-point gap, hence below `2g`). Membership comes from the gap
/// predicate. Feasible for `q <= 5`.
pub fn minimal_elements_bruteforce(q: u64, d: u64) -> Result<BTreeSet<Triple>> {
    if q > 5 {
        return Err(Error::TooLarge {
            what: "q for brute-force minimality",
            value: q,
            max: 5,
        });
    }
    let table = SigmaTable::new(q, d)?;
    let bound = (2 * table.genus() - 1) as usize;
    let n = bound + 1;
    let mut member = vec![false; n * n * n];
    let idx = |a: usize, b: usize, c: usize| (a * n + b) * n + c;
    for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                member[idx(a, b, c)] =
                    !table.is_gap((a as i64, b as i64, c as i64)).expect("nonnegative");
            }
        }
    }
    let mut out = BTreeSet::new();
    for a in 1..n {
        for b in 1..n {
            for c in 1..n {
                if !member[idx(a, b, c)] {
                    continue;
                }
                let fiber_a = || {
                    (0..=b).all(|y| {
                        (0..=c).all(|z| (y, z) == (b, c) || !member[idx(a, y, z)])
                    })
                };
                let fiber_b = || {
                    (0..=a).all(|x| {
                        (0..=c).all(|z| (x, z) == (a, c) || !member[idx(x, b, z)])
                    })
                };
                let fiber_c = || {
                    (0..=a).all(|x| {
                        (0..=b).all(|y| (x, y) == (a, b) || !member[idx(x, y, c)])
                    })
                };
                if fiber_a() || fiber_b() || fiber_c() {
                    out.insert((a as u32, b as u32, c as u32));
                }
            }
        }
    }
    Ok(out)
}

/// The minimal generating data of `H(P, Q, R)` for a type-`d` triangle.
#[derive(Clone, Debug)]
pub struct GeneratingSet {
    pub q: u64,
    pub d: u64,
    /// Generators of the one-point semigroup `H(P) = <q, q+1>`.
    pub gamma1: (u64, u64),
    /// The two-point minimal generating set (same for every pair).
    pub gamma2: BTreeSet<(u32, u32)>,
    /// The three-point minimal generating set.
    pub gamma3: BTreeSet<Triple>,
}

impl GeneratingSet {
    pub fn build(q: u64, d: u64) -> Result<GeneratingSet> {
        Ok(GeneratingSet {
            q,
            d,
            gamma1: (q, q + 1),
            gamma2: gamma_two_point(q),
            gamma3: gamma_three_point(q, d)?,
        })
    }

    /// The union `Gamma(P, Q, R)` of all coordinate embeddings, truncated to
    /// the box `[0, bound]^3` (one-point semigroup elements are embedded
    /// only up to the bound; the finite two- and three-point sets lie below
    /// `2g` already).
    pub fn embedded_in_box(&self, bound: u32) -> BTreeSet<Triple> {
        let mut out = BTreeSet::new();
        for h in 0..=bound {
            if one_point_contains(self.q, h as u64) {
                out.insert((h, 0, 0));
                out.insert((0, h, 0));
                out.insert((0, 0, h));
            }
        }
        for &(u, v) in &self.gamma2 {
            out.insert((u, v, 0));
            out.insert((u, 0, v));
            out.insert((0, u, v));
        }
        for &t in &self.gamma3 {
            out.insert(t);
        }
        out
    }
}

/// `H(P, Q, R)` intersected with the box `[0, bound]^3`, for `bound >= 2g`,
/// computed two ways that must agree: as the complement of the enumerated
/// gap set, and as the `lub`-closure of the embedded minimal generating
/// sets.
pub fn semigroup_box(q: u64, d: u64, bound: u64) -> Result<BTreeSet<Triple>> {
    let table = SigmaTable::new(q, d)?;
    let min = 2 * table.genus() as u64;
    if bound < min {
        return Err(Error::BoundTooSmall { bound, min });
    }
    let bound = bound as u32;

    let gaps = enumerate_gaps(&table);
    let mut complement = BTreeSet::new();
    for a in 0..=bound {
        for b in 0..=bound {
            for c in 0..=bound {
                if !gaps.contains(&(a, b, c)) {
                    complement.insert((a, b, c));
                }
            }
        }
    }

    let gamma = GeneratingSet::build(q, d)?.embedded_in_box(bound);
    let gamma: Vec<Triple> = gamma.into_iter().collect();
    let mut pair_lubs = BTreeSet::new();
    for &u in &gamma {
        for &v in &gamma {
            pair_lubs.insert(lub(&[u, v]).expect("nonempty"));
        }
    }
    let mut closure = BTreeSet::new();
    for &uv in &pair_lubs {
        for &w in &gamma {
            let t = lub(&[uv, w]).expect("nonempty");
            if t.0 <= bound && t.1 <= bound && t.2 <= bound {
                closure.insert(t);
            }
        }
    }

    assert_eq!(
        closure, complement,
        "lub-closure of the generating set must equal the gap complement (q={q}, d={d})"
    );
    Ok(complement)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::census::divisors;
    use crate::discrepancy::Slot;
    use crate::oracle::is_discrepancy;

    #[test]
    fn lub_basics() {
        assert_eq!(lub(&[(1, 0, 0)]).unwrap(), (1, 0, 0));
        assert_eq!(lub(&[(1, 0, 2), (0, 3, 1)]).unwrap(), (1, 3, 2));
        assert_eq!(lub(&[]).unwrap_err(), Error::EmptyList);
        // Idempotent, commutative, associative on a deterministic sample.
        let sample = [(1u32, 5u32, 2u32), (4, 0, 3), (2, 2, 2), (0, 7, 1)];
        for &a in &sample {
            assert_eq!(lub(&[a, a]).unwrap(), a);
            for &b in &sample {
                assert_eq!(lub(&[a, b]).unwrap(), lub(&[b, a]).unwrap());
                for &c in &sample {
                    let ab_c = lub(&[lub(&[a, b]).unwrap(), c]).unwrap();
                    let a_bc = lub(&[a, lub(&[b, c]).unwrap()]).unwrap();
                    assert_eq!(ab_c, a_bc);
                }
            }
        }
    }

    #[test]
    fn one_point_semigroup() {
        // q = 2: <2, 3> misses exactly 1.
        assert_eq!(one_point_gaps(2), [1u32].into_iter().collect());
        // q = 4: g = 6 gaps.
        assert_eq!(
            one_point_gaps(4),
            [1u32, 2, 3, 6, 7, 11].into_iter().collect()
        );
        assert!(one_point_contains(4, 4));
        assert!(one_point_contains(4, 5));
        assert!(one_point_contains(4, 13));
    }

    #[test]
    fn gamma_two_point_examples() {
        assert_eq!(gamma_two_point(2), [(1u32, 1u32)].into_iter().collect());
        // Every coordinate is a one-point gap.
        for q in [2u64, 3, 4, 5, 7] {
            let gaps = one_point_gaps(q);
            let g2 = gamma_two_point(q);
            assert!(!g2.is_empty() || q == 2);
            for &(a, b) in &g2 {
                assert!(gaps.contains(&a) && gaps.contains(&b), "q={q} ({a},{b})");
            }
        }
    }

    #[test]
    fn gamma_two_point_matches_bruteforce() {
        for q in [2u64, 3, 4] {
            let params = FieldParams::for_q(q).unwrap();
            assert_eq!(
                gamma_two_point_bruteforce(&params).unwrap(),
                gamma_two_point(q),
                "q={q}"
            );
        }
    }

    #[test]
    fn gamma_three_point_examples() {
        // q = 2: the only candidate stratum is l = 0 with zero residues,
        // which positivity empties.
        for d in [1u64, 3] {
            assert!(gamma_three_point(2, d).unwrap().is_empty());
        }
        // q = 4, d = 1: {(2,2,2)} plus the permutations of (6,1,1).
        let expected: BTreeSet<Triple> = [(2, 2, 2), (6, 1, 1), (1, 6, 1), (1, 1, 6)]
            .into_iter()
            .collect();
        assert_eq!(gamma_three_point(4, 1).unwrap(), expected);
        assert!(gamma_three_point(4, 2).is_err());
        assert!(gamma_three_point(6, 1).is_err());
    }

    #[test]
    fn gamma_three_point_properties() {
        for (q, d) in [(3u64, 1u64), (3, 2), (3, 4), (4, 5), (5, 2), (5, 6)] {
            let g3 = gamma_three_point(q, d).unwrap();
            let gaps = one_point_gaps(q);
            let table = SigmaTable::new(q, d).unwrap();
            for &(a, b, c) in &g3 {
                // S3-symmetric, strictly positive, one-point-gap coordinates,
                // and inside the semigroup.
                for t in [(a, c, b), (b, a, c), (b, c, a), (c, a, b), (c, b, a)] {
                    assert!(g3.contains(&t));
                }
                assert!(a > 0 && b > 0 && c > 0);
                for v in [a, b, c] {
                    assert!(gaps.contains(&v));
                }
                assert!(!table.is_gap((a as i64, b as i64, c as i64)).unwrap());
            }
        }
    }

    #[test]
    fn gamma_three_point_elements_are_discrepancies_for_all_pairs() {
        for q in [2u64, 3] {
            let params = FieldParams::for_q(q).unwrap();
            for d in divisors(q + 1) {
                let tri = StandardTriangle::of_type(&params, d).unwrap();
                for &(a, b, c) in &gamma_three_point(q, d).unwrap() {
                    let t = (a as i64, b as i64, c as i64);
                    for pair in [(Slot::P, Slot::Q), (Slot::P, Slot::R), (Slot::Q, Slot::R)] {
                        assert!(
                            is_discrepancy(&params, &tri, t, pair).unwrap(),
                            "q={q} d={d} {t:?} {pair:?}"
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn bruteforce_matches_closed_form() {
        for q in [2u64, 3, 4] {
            for d in divisors(q + 1) {
                assert_eq!(
                    minimal_elements_bruteforce(q, d).unwrap(),
                    gamma_three_point(q, d).unwrap(),
                    "q={q} d={d}"
                );
            }
        }
        assert!(matches!(
            minimal_elements_bruteforce(7, 1).unwrap_err(),
            Error::TooLarge { .. }
        ));
    }

    #[test]
    fn bruteforce_matches_closed_form_q5() {
        // q = 5 is the first case where the all-zero residue stratum would
        // contribute strictly positive triples (e.g. (6,6,6)) if it were
        // kept; the definition-level search confirms it must not be.
        for d in divisors(6) {
            let brute = minimal_elements_bruteforce(5, d).unwrap();
            assert_eq!(brute, gamma_three_point(5, d).unwrap(), "d={d}");
            assert!(!brute.contains(&(6, 6, 6)));
        }
    }

    #[test]
    fn semigroup_box_q2() {
        // Everything except the three unit vectors.
        let b = semigroup_box(2, 1, 3).unwrap();
        let mut expected = BTreeSet::new();
        for a in 0..=3u32 {
            for y in 0..=3u32 {
                for c in 0..=3u32 {
                    if [(1, 0, 0), (0, 1, 0), (0, 0, 1)].contains(&(a, y, c)) {
                        continue;
                    }
                    expected.insert((a, y, c));
                }
            }
        }
        assert_eq!(b, expected);
        assert!(matches!(
            semigroup_box(2, 1, 1).unwrap_err(),
            Error::BoundTooSmall { .. }
        ));
    }

    #[test]
    fn semigroup_box_contains_expected_elements() {
        for (q, d) in [(3u64, 2u64), (4, 1), (4, 5)] {
            let g = q * (q - 1) / 2;
            let b = semigroup_box(q, d, 2 * g).unwrap();
            assert!(b.contains(&(0, 0, 0)));
            assert!(b.contains(&(q as u32, 0, 0)));
            assert!(b.contains(&(0, (q + 1) as u32, 0)));
        }
    }

    #[test]
    fn lub_closure_holds_at_q5() {
        // The closure/complement agreement is asserted inside semigroup_box;
        // q = 5 exercises every type of the largest feasible brute-force q.
        for d in divisors(6) {
            assert!(semigroup_box(5, d, 20).is_ok(), "d={d}");
        }
    }

    #[test]
    fn two_point_discrepancy_family() {
        // i(qQ - P) + j(mP - mQ) is a discrepancy for (P, Q) for 0 <= i <= q
        // and small j; these two-point divisors generate the lattice pattern
        // behind gamma_two_point.
        for q in [2u64, 3] {
            let params = FieldParams::for_q(q).unwrap();
            let tri = StandardTriangle::of_type(&params, 1).unwrap();
            let (qi, m) = (q as i64, (q + 1) as i64);
            for i in 0..=qi {
                for j in -1..=2i64 {
                    let a = -i + j * m;
                    let b = i * qi - j * m;
                    assert!(
                        is_discrepancy(&params, &tri, (a, b, 0), (Slot::P, Slot::Q)).unwrap(),
                        "q={q} i={i} j={j}"
                    );
                }
            }
        }
    }
}
