//! The Hermitian curve X^{q+1} = Y^q Z + Y Z^q and its rational points.
//!
//! Demonstrates:
//! - enumerating all q^3 + 1 rational points
//! - evaluating the defining form and the attached unitary form
//! - explicit automorphisms moving the two base points anywhere
//!
//! Run with: cargo run --example curve_points

use hermitian_semigroups::curve::{
    automorphism, curve_equation, curve_points, on_curve, unitary_form, ProjectivePoint,
};
use hermitian_semigroups::field::FieldParams;

fn main() {
    for q in [2u64, 3, 4] {
        let f = FieldParams::for_q(q).unwrap();
        let pts = curve_points(&f);
        println!(
            "q = {}: genus {}, {} rational points (q^3 + 1 = {})",
            q,
            q * (q - 1) / 2,
            pts.len(),
            q * q * q + 1
        );
    }
    println!();

    let f = FieldParams::for_q(2).unwrap();
    let pts = curve_points(&f);
    println!("--- All points for q = 2 (elements as indices) ---");
    for p in &pts {
        let [x, y, z] = p.coords();
        println!(
            "({}:{}:{})  on curve: {}",
            f.index(x),
            f.index(y),
            f.index(z),
            on_curve(&f, p)
        );
    }
    println!();

    println!("--- The unitary form Psi(v, w) = v1^q w1 - v2^q w3 - v3^q w2 ---");
    let p_inf = ProjectivePoint::infinity(&f);
    let p_00 = ProjectivePoint::affine(&f, f.zero(), f.zero());
    println!(
        "Psi(P_inf, P_inf) = {} = F(P_inf) (points are isotropic vectors)",
        f.index(unitary_form(&f, &p_inf.coords(), &p_inf.coords()))
    );
    println!(
        "Psi(P_inf, P_00) = index {} (nonzero: the two points are not orthogonal)",
        f.index(unitary_form(&f, &p_inf.coords(), &p_00.coords()))
    );
    println!(
        "F(1, 0, 1) = index {} (not a curve point)",
        f.index(curve_equation(&f, &[f.one(), f.zero(), f.one()]))
    );
    println!();

    println!("--- An automorphism sending (P_00, P_inf) to a chosen pair ---");
    let a = pts[5];
    let b = pts[8];
    let m = automorphism(&f, &a, &b, f.one()).unwrap();
    let show = |p: &ProjectivePoint| {
        let [x, y, z] = p.coords();
        format!("({}:{}:{})", f.index(x), f.index(y), f.index(z))
    };
    println!("chosen A = {}, B = {}", show(&a), show(&b));
    println!("M(P_00) = {}", show(&m.apply(&f, &p_00)));
    println!("M(P_inf) = {}", show(&m.apply(&f, &p_inf)));
    let all_images_on_curve = pts.iter().all(|p| on_curve(&f, &m.apply(&f, p)));
    println!("every image lies on the curve: {all_images_on_curve}");
}
