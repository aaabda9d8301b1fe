//! Automorphism classes of triangles, counted exhaustively.
//!
//! The group (of order (q^3+1) q^3 (q^2-1)) acts on 3-subsets of rational
//! points; the orbits are counted by breadth-first search under a certified
//! generating family. There are 1 + ceil(q/2) classes, more than the number
//! of distinct semigroups once Galois-conjugate types merge.
//!
//! Run with: cargo run --example orbit_classification
//! (q = 4 takes a few seconds in debug builds; --release is instant.)

use hermitian_semigroups::census::divisors;
use hermitian_semigroups::field::FieldParams;
use hermitian_semigroups::orbits::{enumerate_automorphisms, expected_group_order, orbit_count};

fn main() {
    println!("--- Full group enumeration (every parameter triple distinct) ---");
    for q in [2u64, 3] {
        let f = FieldParams::for_q(q).unwrap();
        let group = enumerate_automorphisms(&f).unwrap();
        println!(
            "q = {q}: {} automorphisms from (q^3+1) q^3 (q^2-1) = {} parameterizations",
            group.len(),
            expected_group_order(q)
        );
    }
    println!();

    println!("--- Orbit counts of 3-subsets ---");
    for q in [2u64, 3, 4] {
        let f = FieldParams::for_q(q).unwrap();
        let n = orbit_count(&f).unwrap();
        println!(
            "q = {q}: {n} automorphism classes (1 + ceil(q/2) = {}), \
             vs {} distinct semigroup types",
            1 + (q as usize).div_ceil(2),
            divisors(q + 1).len()
        );
    }
}
