//! Enumeration and closed-form counting of gaps, pure gaps, and divisors
//! with prescribed base points, together with the semigroup classification
//! count.
//!
//! Every enumeration here is performed twice, by independent routes that
//! must agree:
//!
//! * a direct scan of the simplex `a + b + c <= 2g - 1` (divisors of degree
//!   at least `2g` are base-point free, so the simplex certifiably contains
//!   every gap), and
//! * a per-residue lattice count: writing `a = i + a1 m` etc., the gap
//!   condition becomes a bound on `a1 + b1 + c1` expressed through the
//!   quantity `s_d(i, j, k) = floor((sigma_ij - k - 1)/m)` and its cyclic
//!   shifts.
//!
//! The closed forms are evaluated in exact integer arithmetic with explicit
//! divisibility assertions, so a transcription error cannot hide behind
//! rounding.

use std::collections::BTreeSet;

use crate::discrepancy::{SigmaTable, Slot};
use crate::{Error, Result, Triple};

/// Positive divisors of `n`, ascending.
pub fn divisors(n: u64) -> Vec<u64> {
    (1..=n).filter(|d| n.is_multiple_of(*d)).collect()
}

/// `floor((sigma_ij - k - 1)/m)` for residues `0 <= i, j, k < m`: the
/// largest coefficient-sum `a1 + b1 + c1` for which `(i + a1 m, j + b1 m,
/// k + c1 m)` still has a base point at the second point. Negative values
/// mean no contribution.
pub fn s_d(table: &SigmaTable, i: i64, j: i64, k: i64) -> Result<i64> {
    let m = table.m();
    for v in [i, j, k] {
        if !(0..m).contains(&v) {
            return Err(Error::ResidueOutOfRange { value: v, modulus: m });
        }
    }
    Ok((table.sigma(i, j) - k - 1).div_euclid(m))
}

/// Binomial coefficient `C(n + 3, 3)` clamped at zero: the number of
/// nonnegative integer triples with sum at most `n`.
fn simplex_count(n: i64) -> u64 {
    if n < 0 {
        0
    } else {
        let n = n as u64;
        (n + 1) * (n + 2) * (n + 3) / 6
    }
}

/// The three cyclic shifts of `s_d` entering the gap criterion.
fn cyclic_s(table: &SigmaTable, i: i64, j: i64, k: i64) -> [i64; 3] {
    [
        s_d(table, i, j, k).expect("residues in range"),
        s_d(table, k, i, j).expect("residues in range"),
        s_d(table, j, k, i).expect("residues in range"),
    ]
}

fn residue_enumeration(table: &SigmaTable, pure: bool) -> BTreeSet<Triple> {
    let m = table.m();
    let mut out = BTreeSet::new();
    let mut expected_total = 0u64;
    for i in 0..m {
        for j in 0..m {
            for k in 0..m {
                let s = cyclic_s(table, i, j, k);
                let bound = if pure {
                    *s.iter().min().unwrap()
                } else {
                    *s.iter().max().unwrap()
                };
                expected_total += simplex_count(bound);
                for a1 in 0..=bound.max(-1) {
                    for b1 in 0..=(bound - a1) {
                        for c1 in 0..=(bound - a1 - b1) {
                            out.insert((
                                (i + a1 * m) as u32,
                                (j + b1 * m) as u32,
                                (k + c1 * m) as u32,
                            ));
                        }
                    }
                }
            }
        }
    }
    // Distinct residue classes and distinct multipliers give distinct
    // triples, so the binomial contributions must add up exactly.
    assert_eq!(out.len() as u64, expected_total);
    out
}

fn simplex_scan(table: &SigmaTable, pure: bool) -> BTreeSet<Triple> {
    let bound = 2 * table.genus() - 1;
    let mut out = BTreeSet::new();
    for a in 0..=bound {
        for b in 0..=(bound - a) {
            for c in 0..=(bound - a - b) {
                let hit = if pure {
                    table.is_pure_gap((a, b, c)).expect("nonnegative")
                } else {
                    table.is_gap((a, b, c)).expect("nonnegative")
                };
                if hit {
                    out.insert((a as u32, b as u32, c as u32));
                }
            }
        }
    }
    out
}

/// The full gap set `G(P, Q, R)`, computed by simplex scan and by residue
/// lattice enumeration; the two must agree.
pub fn enumerate_gaps(table: &SigmaTable) -> BTreeSet<Triple> {
    let scan = simplex_scan(table, false);
    let residue = residue_enumeration(table, false);
    assert_eq!(
        scan, residue,
        "simplex scan and residue enumeration disagree on gaps"
    );
    scan
}

/// The pure gap set, computed the same two ways.
pub fn enumerate_pure_gaps(table: &SigmaTable) -> BTreeSet<Triple> {
    let scan = simplex_scan(table, true);
    let residue = residue_enumeration(table, true);
    assert_eq!(
        scan, residue,
        "simplex scan and residue enumeration disagree on pure gaps"
    );
    scan
}

/// Counts effective divisors with base points at `r` specified points, by a
/// direct simplex scan. For `r = 1` the point is `Q`; for `r = 2` the points
/// are `P` and `Q`; `r = 3` is the pure gap count.
pub fn count_basepoint_divisors_enumerated(table: &SigmaTable, r: u8) -> Result<u64> {
    let slots: &[Slot] = match r {
        1 => &[Slot::Q],
        2 => &[Slot::P, Slot::Q],
        3 => &[Slot::P, Slot::Q, Slot::R],
        _ => {
            return Err(Error::Parse(format!(
                "r must be 1, 2, or 3, got {r}"
            )))
        }
    };
    let bound = 2 * table.genus() - 1;
    let mut count = 0;
    for a in 0..=bound {
        for b in 0..=(bound - a) {
            for c in 0..=(bound - a - b) {
                if slots
                    .iter()
                    .all(|&s| table.has_basepoint((a, b, c), s).expect("nonnegative"))
                {
                    count += 1;
                }
            }
        }
    }
    Ok(count)
}

fn exact_div(num: i64, den: i64, what: &str) -> i64 {
    assert_eq!(num % den, 0, "{what}: {num} not divisible by {den}");
    num / den
}

/// `h_d(q) = (d-1)(q+1)(2q^2 - 5q + 5 - d) / (12d)`, the per-type defect
/// entering every type-dependent count. Zero for `d = 1`.
pub fn h_d(q: u64, d: u64) -> Result<u64> {
    if crate::field::prime_power(q).is_none() {
        return Err(Error::NotPrimePower(q));
    }
    if d == 0 || !(q + 1).is_multiple_of(d) {
        return Err(Error::TypeNotDivisor { d, q });
    }
    let (q, d) = (q as i64, d as i64);
    let num = (d - 1) * (q + 1) * (2 * q * q - 5 * q + 5 - d);
    Ok(exact_div(num, 12 * d, "h_d") as u64)
}

/// Closed-form gap count: for collinear triangles
/// `N(T_1) = (2q^6 - 6q^5 + 9q^4 + 12q^3 - 35q^2 + 18q) / 24`, and
/// `N(T_d) = N(T_1) - 2 h_d(q)` in general.
pub fn count_gaps_closed(q: u64, d: u64) -> Result<u64> {
    let h = h_d(q, d)? as i64;
    let x = q as i64;
    let n1 = exact_div(
        2 * x.pow(6) - 6 * x.pow(5) + 9 * x.pow(4) + 12 * x.pow(3) - 35 * x.pow(2) + 18 * x,
        24,
        "N(T_1)",
    );
    let n = n1 - 2 * h;
    assert!(n >= 0);
    Ok(n as u64)
}

/// Closed-form count of effective divisors with base points at `r`
/// specified points of the triangle:
///
/// * `N_1 = (q^6 - 2q^5 + 4q^3 - q^2 - 2q) / 24` (independent of `d`),
/// * `N_2 = (2q^6 + q^5 - 20q^4 - 25q^3 + 138q^2 - 96q) / 120 + h_d(q)`,
/// * `N_3 = (q^6 + 3q^5 - 15q^4 - 75q^3 + 254q^2 - 168q) / 120 + h_d(q)`,
///
/// where `N_3` is the number of pure gaps.
pub fn count_basepoint_divisors_closed(q: u64, d: u64, r: u8) -> Result<u64> {
    let h = h_d(q, d)? as i64;
    let x = q as i64;
    let n = match r {
        1 => exact_div(
            x.pow(6) - 2 * x.pow(5) + 4 * x.pow(3) - x.pow(2) - 2 * x,
            24,
            "N_1",
        ),
        2 => {
            exact_div(
                2 * x.pow(6) + x.pow(5) - 20 * x.pow(4) - 25 * x.pow(3) + 138 * x.pow(2) - 96 * x,
                120,
                "N_2",
            ) + h
        }
        3 => {
            exact_div(
                x.pow(6) + 3 * x.pow(5) - 15 * x.pow(4) - 75 * x.pow(3) + 254 * x.pow(2) - 168 * x,
                120,
                "N_3",
            ) + h
        }
        _ => return Err(Error::Parse(format!("r must be 1, 2, or 3, got {r}"))),
    };
    assert!(n >= 0);
    Ok(n as u64)
}

/// Gap and pure-gap data of a triangle type, with the closed-form counts it
/// was reconciled against.
#[derive(Clone, Debug)]
pub struct GapCensus {
    pub q: u64,
    pub d: u64,
    /// The full finite gap set `G(P, Q, R)`.
    pub gaps: BTreeSet<Triple>,
    /// The pure gaps, where all three points are base points.
    pub pure_gaps: BTreeSet<Triple>,
    /// Closed-form `N(T_d)`; always equals `gaps.len()`.
    pub n_closed: u64,
    /// Closed-form `(N_1, N_2, N_3)`.
    pub n_r: [u64; 3],
    /// The defect `h_d(q)`.
    pub h_d: u64,
}

impl GapCensus {
    /// Enumerates and cross-checks all counts for the type `d` on the curve
    /// with parameter `q`.
    pub fn build(q: u64, d: u64) -> Result<GapCensus> {
        let table = SigmaTable::new(q, d)?;
        let gaps = enumerate_gaps(&table);
        let pure_gaps = enumerate_pure_gaps(&table);
        let n_closed = count_gaps_closed(q, d)?;
        let n_r = [
            count_basepoint_divisors_closed(q, d, 1)?,
            count_basepoint_divisors_closed(q, d, 2)?,
            count_basepoint_divisors_closed(q, d, 3)?,
        ];
        let g2 = 2 * table.genus() as u32;
        assert!(gaps.iter().all(|&(a, b, c)| a + b + c < g2));
        assert!(pure_gaps.is_subset(&gaps));
        assert_eq!(gaps.len() as u64, n_closed, "gap enumeration vs closed form");
        assert_eq!(
            pure_gaps.len() as u64,
            n_r[2],
            "pure gap enumeration vs closed form"
        );
        assert_eq!(
            3 * n_r[0] as i64 - 3 * n_r[1] as i64 + n_r[2] as i64,
            n_closed as i64,
            "inclusion-exclusion"
        );
        Ok(GapCensus {
            q,
            d,
            gaps,
            pure_gaps,
            n_closed,
            n_r,
            h_d: h_d(q, d)?,
        })
    }
}

/// Number of distinct gap sets over all types `d | q + 1`. Equals the
/// number of divisors of `q + 1` for `q > 3`, and 1 resp. 2 for `q = 2, 3`.
pub fn classify_semigroups(q: u64) -> Result<usize> {
    if crate::field::prime_power(q).is_none() {
        return Err(Error::NotPrimePower(q));
    }
    if q > crate::field::MAX_Q {
        return Err(Error::TooLarge {
            what: "q",
            value: q,
            max: crate::field::MAX_Q,
        });
    }
    let mut distinct: BTreeSet<BTreeSet<Triple>> = BTreeSet::new();
    for d in divisors(q + 1) {
        let table = SigmaTable::new(q, d)?;
        distinct.insert(enumerate_gaps(&table));
    }
    Ok(distinct.len())
}
