//! Triangles of rational points: standard form, the type invariant, and
//! the 3-cycle automorphism.
//!
//! Every 3-set of rational points can be moved by an automorphism into
//! standard form {P_inf, P_00, P_ab} with a = 0 (collinear) or a = b; the
//! multiplicative order d of 1 - a divides q + 1 and determines the
//! Weierstrass semigroup.
//!
//! Run with: cargo run --example triangle_classification

use hermitian_semigroups::curve::{
    curve_points, standard_form, standard_triangle_of_type, three_cycle, ProjectivePoint, Triangle,
};
use hermitian_semigroups::field::{FieldParams, FieldElement};

fn show(f: &FieldParams, p: &ProjectivePoint) -> String {
    if p.is_infinity() {
        "inf".into()
    } else {
        let (a, b) = p.affine_coords().unwrap();
        format!("({},{})", f.index(a), f.index(b))
    }
}

fn main() {
    let f = FieldParams::for_q(3).unwrap();
    let pts = curve_points(&f);

    println!("--- Reducing arbitrary triangles to standard form (q = 3) ---");
    for (i, j, k) in [(1usize, 2usize, 3usize), (0, 5, 20), (4, 9, 27), (7, 13, 17)] {
        let t = Triangle::new(&f, [pts[i], pts[j], pts[k]]).unwrap();
        let (sigma, std_t) = standard_form(&f, &t).unwrap();
        println!(
            "{{{}, {}, {}}}  ->  {{{}, {}, {}}}   type d = {}{}",
            show(&f, &pts[i]),
            show(&f, &pts[j]),
            show(&f, &pts[k]),
            show(&f, &std_t.points()[0]),
            show(&f, &std_t.points()[1]),
            show(&f, &std_t.points()[2]),
            t.type_d(),
            if t.is_collinear(&f) { " (collinear)" } else { "" }
        );
        assert_eq!(sigma.apply_triangle(&f, &t), std_t);
    }
    println!();

    println!("--- One standard representative per type ---");
    for q in [2u64, 3, 4, 5] {
        let f = FieldParams::for_q(q).unwrap();
        let types: Vec<u64> = (1..=q + 1).filter(|d| (q + 1) % d == 0).collect();
        print!("q = {q}: ");
        for (n, d) in types.iter().enumerate() {
            let t = standard_triangle_of_type(&f, *d).unwrap();
            let third = t.standard_vertex(&f).unwrap();
            if n > 0 {
                print!(", ");
            }
            print!("d = {} via {}", d, show(&f, &third));
        }
        println!();
    }
    println!();

    println!("--- A 3-cycle on a triangle (q = 2) ---");
    let f = FieldParams::for_q(2).unwrap();
    let w: FieldElement = f.primitive_element();
    let p = ProjectivePoint::infinity(&f);
    let q00 = ProjectivePoint::affine(&f, f.zero(), f.zero());
    let r = ProjectivePoint::affine(&f, w, w);
    let t = Triangle::new(&f, [p, q00, r]).unwrap();
    let sigma = three_cycle(&f, &t, &[p, q00, r]).unwrap();
    println!("T = {{inf, (0,0), (2,2)}}, type {}", t.type_d());
    for v in [q00, p, r] {
        println!("sigma: {} -> {}", show(&f, &v), show(&f, &sigma.apply(&f, &v)));
    }
    let s3 = sigma.compose(&f, &sigma).compose(&f, &sigma);
    println!(
        "sigma^3 fixes the triangle pointwise: {}",
        t.points().iter().all(|v| s3.apply(&f, v) == *v)
    );
}
