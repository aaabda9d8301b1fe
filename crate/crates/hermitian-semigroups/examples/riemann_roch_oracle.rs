//! The brute-force Riemann-Roch oracle: valuations, local expansions,
//! dimensions by exact linear algebra, and discrepancy certification.
//!
//! This machinery never consults the closed-form tables, so agreement
//! between the two is a real cross-check (and is enforced wholesale by the
//! verification suite).
//!
//! Run with: cargo run --example riemann_roch_oracle

use hermitian_semigroups::curve::ProjectivePoint;
use hermitian_semigroups::discrepancy::{SigmaTable, Slot};
use hermitian_semigroups::field::FieldParams;
use hermitian_semigroups::oracle::{
    expand_at, is_discrepancy, rr_dimension, two_point_function, valuation, verify_wd,
    CurveFunction, StandardTriangle,
};

fn main() {
    let f = FieldParams::for_q(2).unwrap();
    let p00 = ProjectivePoint::affine(&f, f.zero(), f.zero());
    let inf = ProjectivePoint::infinity(&f);

    println!("--- Coordinate functions and their divisors (q = 2) ---");
    let x = CurveFunction::x(&f);
    let y = CurveFunction::y(&f);
    println!("v_inf(x) = {}  (pole order q)", valuation(&f, &x, &inf).unwrap());
    println!("v_inf(y) = {}  (pole order q + 1)", valuation(&f, &y, &inf).unwrap());
    println!(
        "v_P00(y) = {}  (y cuts the tangent line at P_00 with full contact)",
        valuation(&f, &y, &p00).unwrap()
    );
    println!();

    println!("--- Local expansion of y at P_00 in t = x ---");
    let series = expand_at(&f, &y, &p00, 8).unwrap();
    let rendered: Vec<String> = series
        .coeffs
        .iter()
        .enumerate()
        .filter(|(_, c)| !c.is_zero())
        .map(|(k, c)| format!("{}*t^{k}", f.index(*c)))
        .collect();
    println!("y = {} + O(t^8)", rendered.join(" + "));
    println!();

    println!("--- Two-point functions y_PB with divisor m(B - P_inf) ---");
    let w = f.primitive_element();
    let pww = ProjectivePoint::affine(&f, w, w);
    let y_pb = two_point_function(&f, &pww).unwrap();
    println!(
        "B = (2,2): v_B = {}, v_inf = {}",
        valuation(&f, &y_pb, &pww).unwrap(),
        valuation(&f, &y_pb, &inf).unwrap()
    );
    println!();

    println!("--- Dimensions by exact elimination vs the closed table ---");
    let tri = StandardTriangle::of_type(&f, 3).unwrap();
    let table = SigmaTable::new(2, 3).unwrap();
    println!("q = 2, type d = 3:");
    for (a, b, c) in [(0i64, 0i64, 0i64), (1, 1, 1), (2, 1, 0), (-1, 2, 2), (3, 3, 3)] {
        let oracle = rr_dimension(&f, &tri, a, b, c);
        let closed = table.dim_divisor(a, b, c);
        println!("dim L({a}P + {b}Q + {c}R): oracle {oracle}, table {closed}");
        assert_eq!(oracle, closed);
    }
    println!();

    println!("--- Discrepancy certification ---");
    // iP + jQ + sigma_ij R is a discrepancy for (Q, R); its neighbors are not.
    let (i, j) = (1, 2);
    let s = table.sigma(i, j);
    for (c, expect) in [(s, true), (s + 1, false), (s - 1, false)] {
        let got = is_discrepancy(&f, &tri, (i, j, c), (Slot::Q, Slot::R)).unwrap();
        println!("({i}, {j}, {c}): discrepancy for (Q, R) = {got} (expected {expect})");
        assert_eq!(got, expect);
    }
    println!();

    println!("--- Pole-shifting functions w_d ---");
    for q in [3u64, 4, 5] {
        let f = FieldParams::for_q(q).unwrap();
        let types: Vec<u64> = (1..=q + 1).filter(|d| (q + 1) % d == 0).collect();
        for d in types {
            println!("q = {q}, d = {d}: certified = {}", verify_wd(&f, d).unwrap());
        }
    }
}
