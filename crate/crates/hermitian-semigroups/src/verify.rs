//! The self-verification suite: every published claim the crate relies on,
//! checked end to end at its stated tolerance (always exact) and within a
//! wall-clock budget.
//!
//! The same checks back the `verify` CLI subcommand and the `acceptance`
//! integration test, so there is exactly one definition of "green".

use std::fmt::Write as _;
use std::time::{Duration, Instant};

use crate::census::{
    classify_semigroups, count_basepoint_divisors_closed, count_gaps_closed, divisors,
    enumerate_gaps, enumerate_pure_gaps, s_d,
};
use crate::discrepancy::{SigmaTable, Slot};
use crate::field::FieldParams;
use crate::oracle::{is_discrepancy, rr_dimension, verify_wd, StandardTriangle};
use crate::orbits::{enumerate_automorphisms, expected_group_order, orbit_count};
use crate::semigroup::{
    gamma_three_point, gamma_two_point, gamma_two_point_bruteforce, minimal_elements_bruteforce,
    semigroup_box,
};
use crate::{Result, Triple};

/// One verification criterion: a named check with a time budget.
pub struct Criterion {
    pub id: usize,
    pub name: &'static str,
    pub budget: Duration,
    run: fn() -> std::result::Result<(), String>,
}

/// Outcome of one criterion run.
#[derive(Clone, Debug)]
pub struct CriterionReport {
    pub id: usize,
    pub name: &'static str,
    pub passed: bool,
    pub elapsed: Duration,
    pub budget: Duration,
    /// Failure detail; empty on success.
    pub detail: String,
}

impl CriterionReport {
    /// The one-line rendering used by the CLI and the acceptance test.
    pub fn line(&self) -> String {
        format!(
            "{}  {:2}  {:<28}  {:>8.3}s / {}s{}",
            if self.passed { "PASS" } else { "FAIL" },
            self.id,
            self.name,
            self.elapsed.as_secs_f64(),
            self.budget.as_secs(),
            if self.detail.is_empty() {
                String::new()
            } else {
                format!("  ({})", self.detail)
            }
        )
    }
}

/// Runs one criterion, enforcing its budget.
pub fn run_criterion(c: &Criterion) -> CriterionReport {
    let start = Instant::now();
    let outcome = (c.run)();
    let elapsed = start.elapsed();
    let (mut passed, mut detail) = match outcome {
        Ok(()) => (true, String::new()),
        Err(msg) => (false, msg),
    };
    if passed && elapsed > c.budget {
        passed = false;
        detail = format!("exceeded budget: {:.3}s", elapsed.as_secs_f64());
    }
    CriterionReport {
        id: c.id,
        name: c.name,
        passed,
        elapsed,
        budget: c.budget,
        detail,
    }
}

/// All criteria, in order.
pub fn criteria() -> Vec<Criterion> {
    vec![
        Criterion {
            id: 1,
            name: "q2-gap-exactness",
            budget: Duration::from_secs(1),
            run: c01_q2_gap_exactness,
        },
        Criterion {
            id: 2,
            name: "q3-counts-and-coincidence",
            budget: Duration::from_secs(1),
            run: c02_q3_counts,
        },
        Criterion {
            id: 3,
            name: "closed-form-reconciliation",
            budget: Duration::from_secs(30),
            run: c03_closed_forms,
        },
        Criterion {
            id: 4,
            name: "semigroup-classification",
            budget: Duration::from_secs(30),
            run: c04_classification,
        },
        Criterion {
            id: 5,
            name: "oracle-dimension-equivalence",
            budget: Duration::from_secs(60),
            run: c05_oracle_equivalence,
        },
        Criterion {
            id: 6,
            name: "discrepancy-soundness",
            budget: Duration::from_secs(60),
            run: c06_discrepancy_soundness,
        },
        Criterion {
            id: 7,
            name: "pole-shift-certification",
            budget: Duration::from_secs(10),
            run: c07_wd_certification,
        },
        Criterion {
            id: 8,
            name: "minimal-generating-sets",
            budget: Duration::from_secs(60),
            run: c08_minimal_generating_sets,
        },
        Criterion {
            id: 9,
            name: "lub-closure",
            budget: Duration::from_secs(60),
            run: c09_lub_closure,
        },
        Criterion {
            id: 10,
            name: "orbit-structure",
            budget: Duration::from_secs(120),
            run: c10_orbit_structure,
        },
        Criterion {
            id: 11,
            name: "count-correction-consistency",
            budget: Duration::from_secs(10),
            run: c11_count_corrections,
        },
    ]
}

/// Parses a suite selector: `all`, or a comma-separated list of criterion
/// ids or names.
pub fn select(selector: &str) -> Result<Vec<Criterion>> {
    let all = criteria();
    if selector.trim().eq_ignore_ascii_case("all") {
        return Ok(all);
    }
    let mut picked = Vec::new();
    for token in selector.split(',') {
        let token = token.trim();
        let found = criteria().into_iter().find(|c| {
            token.parse::<usize>().map(|n| n == c.id).unwrap_or(false) || token == c.name
        });
        match found {
            Some(c) => picked.push(c),
            None => {
                return Err(crate::Error::Parse(format!(
                    "unknown criterion '{token}' (use 'all', an id 1..=11, or a name)"
                )))
            }
        }
    }
    Ok(picked)
}

fn check(cond: bool, msg: impl FnOnce() -> String) -> std::result::Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn c01_q2_gap_exactness() -> std::result::Result<(), String> {
    let expected: std::collections::BTreeSet<Triple> =
        [(1, 0, 0), (0, 1, 0), (0, 0, 1)].into_iter().collect();
    for d in [1u64, 3] {
        let table = SigmaTable::new(2, d).map_err(|e| e.to_string())?;
        let gaps = enumerate_gaps(&table);
        check(gaps == expected, || {
            format!("q=2 d={d}: gap set {gaps:?} differs from the three unit vectors")
        })?;
    }
    Ok(())
}

fn c02_q3_counts() -> std::result::Result<(), String> {
    let sets: Vec<_> = [1u64, 2, 4]
        .iter()
        .map(|&d| enumerate_gaps(&SigmaTable::new(3, d).unwrap()))
        .collect();
    check(sets[0].len() == 33, || {
        format!("q=3 d=1: |G| = {} instead of 33", sets[0].len())
    })?;
    check(sets[1].len() == 31 && sets[2].len() == 31, || {
        format!(
            "q=3: |G(T_2)| = {}, |G(T_4)| = {} instead of 31",
            sets[1].len(),
            sets[2].len()
        )
    })?;
    check(sets[1] == sets[2], || {
        "q=3: gap sets of types 2 and 4 differ".to_string()
    })
}

fn c03_closed_forms() -> std::result::Result<(), String> {
    for q in [2u64, 3, 4, 5, 7, 8, 9] {
        for d in divisors(q + 1) {
            let table = SigmaTable::new(q, d).map_err(|e| e.to_string())?;
            let gaps = enumerate_gaps(&table).len() as u64;
            let closed = count_gaps_closed(q, d).map_err(|e| e.to_string())?;
            check(gaps == closed, || {
                format!("q={q} d={d}: enumerated {gaps} gaps, closed form {closed}")
            })?;
            let pure = enumerate_pure_gaps(&table).len() as u64;
            let n3 = count_basepoint_divisors_closed(q, d, 3).map_err(|e| e.to_string())?;
            check(pure == n3, || {
                format!("q={q} d={d}: enumerated {pure} pure gaps, closed form {n3}")
            })?;
            let n1 = count_basepoint_divisors_closed(q, d, 1).unwrap() as i64;
            let n2 = count_basepoint_divisors_closed(q, d, 2).unwrap() as i64;
            check(3 * n1 - 3 * n2 + n3 as i64 == closed as i64, || {
                format!("q={q} d={d}: inclusion-exclusion 3*{n1} - 3*{n2} + {n3} != {closed}")
            })?;
        }
    }
    Ok(())
}

fn c04_classification() -> std::result::Result<(), String> {
    for (q, expected) in [(2u64, 1usize), (3, 2), (4, 2), (5, 4), (7, 4), (8, 3), (9, 4)] {
        let got = classify_semigroups(q).map_err(|e| e.to_string())?;
        let tau = divisors(q + 1).len();
        if q > 3 {
            check(expected == tau, || {
                format!("internal: expected count for q={q} should be tau(q+1)")
            })?;
        }
        check(got == expected, || {
            format!("q={q}: {got} distinct semigroups, expected {expected}")
        })?;
    }
    Ok(())
}

fn c05_oracle_equivalence() -> std::result::Result<(), String> {
    for q in [2u64, 3] {
        let params = FieldParams::for_q(q).map_err(|e| e.to_string())?;
        let m = (q + 1) as i64;
        for d in divisors(q + 1) {
            let tri = StandardTriangle::of_type(&params, d).map_err(|e| e.to_string())?;
            let table = SigmaTable::new(q, d).unwrap();
            for a in -1..=(2 * m) {
                for b in -1..=(2 * m) {
                    for c in -1..=(2 * m) {
                        let oracle = rr_dimension(&params, &tri, a, b, c);
                        let closed = table.dim_divisor(a, b, c);
                        check(oracle == closed, || {
                            format!(
                                "q={q} d={d} ({a},{b},{c}): oracle {oracle} vs closed {closed}"
                            )
                        })?;
                    }
                }
            }
        }
    }
    Ok(())
}

fn c06_discrepancy_soundness() -> std::result::Result<(), String> {
    // Every fundamental-domain divisor iP + jQ + sigma_ij R must be a
    // discrepancy for (Q, R) under all six orderings of the triangle's
    // points; slot permutations reassign the coefficients.
    let orderings: [[usize; 3]; 6] = [
        [0, 1, 2],
        [0, 2, 1],
        [1, 0, 2],
        [1, 2, 0],
        [2, 0, 1],
        [2, 1, 0],
    ];
    let slots = [Slot::P, Slot::Q, Slot::R];
    for q in [2u64, 3] {
        let params = FieldParams::for_q(q).map_err(|e| e.to_string())?;
        for d in divisors(q + 1) {
            let tri = StandardTriangle::of_type(&params, d).map_err(|e| e.to_string())?;
            let table = SigmaTable::new(q, d).unwrap();
            for i in 0..table.m() {
                for j in 0..table.m() {
                    let s = table.sigma(i, j);
                    for ord in orderings {
                        // ord[t] is the slot holding the t-th coefficient of
                        // (i, j, sigma_ij).
                        let mut coeffs = [0i64; 3];
                        coeffs[ord[0]] = i;
                        coeffs[ord[1]] = j;
                        coeffs[ord[2]] = s;
                        let pair = (slots[ord[1]], slots[ord[2]]);
                        let ok = is_discrepancy(
                            &params,
                            &tri,
                            (coeffs[0], coeffs[1], coeffs[2]),
                            pair,
                        )
                        .map_err(|e| e.to_string())?;
                        check(ok, || {
                            format!(
                                "q={q} d={d} (i,j)=({i},{j}) ordering {ord:?}: \
                                 {coeffs:?} not a discrepancy for {pair:?}"
                            )
                        })?;
                    }
                }
            }
        }
    }
    Ok(())
}

fn c07_wd_certification() -> std::result::Result<(), String> {
    for q in [3u64, 4, 5] {
        let params = FieldParams::for_q(q).map_err(|e| e.to_string())?;
        for d in divisors(q + 1) {
            let ok = verify_wd(&params, d).map_err(|e| e.to_string())?;
            check(ok, || format!("q={q} d={d}: pole-shift valuations failed"))?;
        }
    }
    Ok(())
}

fn c08_minimal_generating_sets() -> std::result::Result<(), String> {
    for q in [2u64, 3, 4] {
        for d in divisors(q + 1) {
            let closed = gamma_three_point(q, d).map_err(|e| e.to_string())?;
            let brute = minimal_elements_bruteforce(q, d).map_err(|e| e.to_string())?;
            check(closed == brute, || {
                format!("q={q} d={d}: three-point generating sets differ: {closed:?} vs {brute:?}")
            })?;
        }
    }
    for q in [2u64, 3] {
        let params = FieldParams::for_q(q).map_err(|e| e.to_string())?;
        let closed = gamma_two_point(q);
        let brute = gamma_two_point_bruteforce(&params).map_err(|e| e.to_string())?;
        check(closed == brute, || {
            format!("q={q}: two-point generating sets differ: {closed:?} vs {brute:?}")
        })?;
    }
    Ok(())
}

fn c09_lub_closure() -> std::result::Result<(), String> {
    for q in [2u64, 3, 4] {
        for d in divisors(q + 1) {
            let g = q * (q - 1) / 2;
            // semigroup_box computes the complement and the lub-closure and
            // panics if they disagree; run it through catch_unwind so a
            // mismatch reports as a failed criterion rather than an abort.
            let outcome = std::panic::catch_unwind(|| semigroup_box(q, d, 2 * g));
            match outcome {
                Ok(Ok(_)) => {}
                Ok(Err(e)) => return Err(format!("q={q} d={d}: {e}")),
                Err(_) => {
                    return Err(format!(
                        "q={q} d={d}: lub-closure disagrees with the gap complement"
                    ))
                }
            }
        }
    }
    Ok(())
}

fn c10_orbit_structure() -> std::result::Result<(), String> {
    for q in [2u64, 3, 4] {
        let params = FieldParams::for_q(q).map_err(|e| e.to_string())?;
        let got = orbit_count(&params).map_err(|e| e.to_string())?;
        let expected = 1 + (q as usize).div_ceil(2);
        check(got == expected, || {
            format!("q={q}: {got} orbits, expected {expected}")
        })?;
    }
    let params = FieldParams::for_q(2).unwrap();
    let group = enumerate_automorphisms(&params).map_err(|e| e.to_string())?;
    check(group.len() as u64 == expected_group_order(2), || {
        format!(
            "q=2: {} distinct automorphisms from {} parameterizations",
            group.len(),
            expected_group_order(2)
        )
    })
}

fn c11_count_corrections() -> std::result::Result<(), String> {
    for q in [2u64, 3, 4, 5, 7, 8, 9] {
        let t1 = SigmaTable::new(q, 1).unwrap();
        for d in divisors(q + 1) {
            let td = SigmaTable::new(q, d).unwrap();
            let m = t1.m();
            for i in 0..m {
                for j in 0..m {
                    for k in 0..m {
                        let s1 = s_d(&t1, i, j, k).unwrap();
                        let sd = s_d(&td, i, j, k).unwrap();
                        // The three-case characterization of where the
                        // type-d count deviates from the collinear one.
                        let expected = if d > 1 && (i, j, k) == (t1.q(), 0, t1.q()) {
                            // The wrap case pins both values exactly.
                            check(s1 == -1, || {
                                format!("q={q} d={d}: s_1(q,0,q) = {s1}, expected -1")
                            })?;
                            -2
                        } else if i % (d as i64) != 0 && j == i + 1 && k == i {
                            s1 - 1
                        } else if i % (d as i64) != 0 && j == i && k == i {
                            s1 + 1
                        } else {
                            s1
                        };
                        check(sd == expected, || {
                            format!("q={q} d={d} ({i},{j},{k}): s_d={sd}, expected {expected}")
                        })?;
                        // A cyclic shift maximizing both counts at once.
                        let shifts = [(i, j, k), (k, i, j), (j, k, i)];
                        let v1: Vec<i64> = shifts
                            .iter()
                            .map(|&(a, b, c)| s_d(&t1, a, b, c).unwrap())
                            .collect();
                        let vd: Vec<i64> = shifts
                            .iter()
                            .map(|&(a, b, c)| s_d(&td, a, b, c).unwrap())
                            .collect();
                        let max1 = *v1.iter().max().unwrap();
                        let maxd = *vd.iter().max().unwrap();
                        check(
                            (0..3).any(|t| v1[t] == max1 && vd[t] == maxd),
                            || format!("q={q} d={d} ({i},{j},{k}): no simultaneous maximizer"),
                        )?;
                    }
                }
            }
        }
    }
    Ok(())
}

/// Runs the selected criteria and renders one line each into `out`.
/// Returns true iff everything passed.
pub fn run_suite(selector: &str, out: &mut String) -> Result<bool> {
    let selected = select(selector)?;
    let mut all_passed = true;
    for c in &selected {
        let report = run_criterion(c);
        all_passed &= report.passed;
        writeln!(out, "{}", report.line()).expect("writing to a String cannot fail");
    }
    Ok(all_passed)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn selector_parsing() {
        assert_eq!(select("all").unwrap().len(), 11);
        let picked = select("1, q3-counts-and-coincidence, 11").unwrap();
        assert_eq!(
            picked.iter().map(|c| c.id).collect::<Vec<_>>(),
            vec![1, 2, 11]
        );
        assert!(select("nope").is_err());
    }

    #[test]
    fn fast_criteria_pass() {
        // The cheap criteria run here; the full suite is the acceptance
        // integration test.
        for c in criteria().into_iter().filter(|c| [1, 2, 7].contains(&c.id)) {
            let report = run_criterion(&c);
            assert!(report.passed, "{}", report.line());
        }
    }
}
