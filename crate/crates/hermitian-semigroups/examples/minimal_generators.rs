//! Minimal generating sets and the lub-closure that rebuilds the semigroup.
//!
//! The semigroup H(P, Q, R) is generated, under coordinate-wise maxima,
//! by the embedded minimal generating sets of its point subsets: the
//! one-point semigroup <q, q+1>, the explicit two-point family, and the
//! finite three-point set parameterized per type.
//!
//! Run with: cargo run --example minimal_generators

use hermitian_semigroups::census::divisors;
use hermitian_semigroups::semigroup::{
    gamma_three_point, gamma_two_point, lub, minimal_elements_bruteforce, one_point_gaps,
    semigroup_box, GeneratingSet,
};

fn main() {
    println!("--- One-point data: H(P) = <q, q+1> ---");
    for q in [2u64, 3, 4, 5] {
        println!("q = {q}: gaps of <{q}, {}> = {:?}", q + 1, one_point_gaps(q));
    }
    println!();

    println!("--- Two-point minimal generating sets ---");
    for q in [2u64, 3, 4, 5] {
        println!("q = {q}: {:?}", gamma_two_point(q));
    }
    println!();

    println!("--- Three-point minimal generating sets per type ---");
    for q in [2u64, 3, 4, 5] {
        for d in divisors(q + 1) {
            let g3 = gamma_three_point(q, d).unwrap();
            println!("q = {q}, d = {d}: {:?}", g3);
        }
    }
    println!("(q = 2 is empty: strict positivity excludes every candidate)");
    println!();

    println!("--- Closed form vs definition-level brute force (q = 4) ---");
    for d in divisors(5) {
        let closed = gamma_three_point(4, d).unwrap();
        let brute = minimal_elements_bruteforce(4, d).unwrap();
        println!("d = {d}: agree = {}", closed == brute);
    }
    println!();

    println!("--- lub generation ---");
    let u = (1, 1, 0);
    let v = (1, 0, 1);
    println!("lub({u:?}, {v:?}) = {:?} (a semigroup element built from pairs)",
        lub(&[u, v]).unwrap());
    let gs = GeneratingSet::build(4, 1).unwrap();
    let embedded = gs.embedded_in_box(12);
    println!(
        "q = 4, d = 1: |Gamma| within [0, 12]^3 = {} embedded generators",
        embedded.len()
    );
    let members = semigroup_box(4, 1, 12).unwrap();
    println!(
        "lub-closure fills the box: {} members of H among {} triples (complement: {} gaps)",
        members.len(),
        13u64.pow(3),
        13u64.pow(3) - members.len() as u64
    );
}
