//! Gap sets, pure gaps, closed-form counts, and the classification of
//! three-point semigroups by triangle type.
//!
//! Run with: cargo run --example gap_census

use hermitian_semigroups::census::{classify_semigroups, divisors, GapCensus};

fn main() {
    println!("--- q = 2: a single semigroup, three gaps ---");
    for d in [1u64, 3] {
        let census = GapCensus::build(2, d).unwrap();
        println!("d = {}: gaps = {:?}", d, census.gaps);
    }
    println!();

    println!("--- Counts per type (enumeration == closed form, asserted) ---");
    println!("{:>3} {:>3} {:>7} {:>7} {:>7} {:>7} {:>6}", "q", "d", "N", "N1", "N2", "N3", "h_d");
    for q in [2u64, 3, 4, 5, 7, 8, 9] {
        for d in divisors(q + 1) {
            let c = GapCensus::build(q, d).unwrap();
            println!(
                "{:>3} {:>3} {:>7} {:>7} {:>7} {:>7} {:>6}",
                q, d, c.n_closed, c.n_r[0], c.n_r[1], c.n_r[2], c.h_d
            );
        }
    }
    println!();

    println!("--- Sample pure gaps for q = 4, d = 5 ---");
    let census = GapCensus::build(4, 5).unwrap();
    let sample: Vec<_> = census.pure_gaps.iter().take(8).collect();
    println!(
        "{} pure gaps among {} gaps; first few: {:?}",
        census.pure_gaps.len(),
        census.gaps.len(),
        sample
    );
    println!();

    println!("--- Number of distinct semigroups vs divisors of q + 1 ---");
    for q in [2u64, 3, 4, 5, 7, 8, 9] {
        let tau = divisors(q + 1).len();
        let distinct = classify_semigroups(q).unwrap();
        println!(
            "q = {q}: {distinct} distinct semigroups, tau(q+1) = {tau}{}",
            if distinct == tau { "" } else { "  (small-q coincidence)" }
        );
    }
}
