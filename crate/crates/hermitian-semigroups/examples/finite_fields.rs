//! Exact arithmetic in F_{q^2}.
//!
//! Demonstrates:
//! - building the quadratic extension with its deterministic modulus
//! - the stable integer-index encoding of elements
//! - Frobenius, multiplicative orders, and the fiber equation
//!   `b^q + b = a^{q+1}` that carves out the Hermitian curve
//!
//! Run with: cargo run --example finite_fields

use hermitian_semigroups::field::FieldParams;

fn main() {
    let f = FieldParams::new(2, 1).expect("q = 2");
    println!("=== F_{{q^2}} for q = {} ===", f.q());
    println!(
        "prime p = {}, extension degree {} over F_p, {} elements",
        f.p(),
        f.ext_degree(),
        f.order()
    );
    println!(
        "modulus low coefficients (t^0, t^1, ...): {:?}  (t^2 + t + 1)",
        f.modulus()
    );
    println!();

    println!("--- Elements by index ---");
    for z in f.elements() {
        let order = if z.is_zero() {
            "-".to_string()
        } else {
            f.element_order(z).unwrap().to_string()
        };
        println!(
            "index {}  coeffs ({}, {})  multiplicative order {}",
            f.index(z),
            z.coeff(0),
            z.coeff(1),
            order
        );
    }
    println!();

    let w = f.primitive_element();
    println!("--- Frobenius z -> z^q ---");
    println!("w = index {} generates the multiplicative group", f.index(w));
    println!(
        "w^q = index {} (the conjugate), (w^q)^q = index {} (back to w)",
        f.index(f.frobenius(w)),
        f.index(f.frobenius(f.frobenius(w)))
    );
    let fixed = f.elements().filter(|&z| f.frobenius(z) == z).count();
    println!("Frobenius fixes exactly {} elements: the subfield F_q", fixed);
    println!();

    println!("--- Hermitian fibers: solutions of b^q + b = a^{{q+1}} ---");
    for alpha in f.elements() {
        let fiber: Vec<u64> = f
            .hermitian_fiber(alpha)
            .into_iter()
            .map(|b| f.index(b))
            .collect();
        println!("a = index {}: {} solutions, indices {:?}", f.index(alpha), fiber.len(), fiber);
    }
    println!();

    // A slightly larger field: F_256 over F_16 (q = 16 is the desk-scale cap).
    let big = FieldParams::for_q(16).expect("q = 16");
    println!(
        "q = 16: F_{} with modulus low coefficients {:?}",
        big.order(),
        big.modulus()
    );
}
