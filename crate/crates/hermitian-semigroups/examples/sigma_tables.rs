//! Discrepancy tables: the function sigma_ij from which every dimension is
//! read off.
//!
//! iP + jQ + sigma_ij R is the unique divisor of its shape that is a
//! discrepancy for the pair (Q, R). The table is periodic with
//! sigma_{i+sm, j+tm} = sigma_ij - sm - tm, depends only on the type d of
//! the triangle, and yields dim L(aP + bQ + cR), base points, gaps, and
//! pure gaps in O(q) per query.
//!
//! Run with: cargo run --example sigma_tables

use hermitian_semigroups::discrepancy::{SigmaTable, Slot};

fn main() {
    let table = SigmaTable::new(3, 2).unwrap();
    println!(
        "=== sigma for q = {}, type d = {} (genus {}, period m = {}) ===",
        table.q(),
        table.type_d(),
        table.genus(),
        table.m()
    );
    println!();
    print!("      ");
    for j in 0..table.m() {
        print!("j={j:>3} ");
    }
    println!();
    for (i, row) in table.fundamental_domain().iter().enumerate() {
        print!("i={i}:  ");
        for v in row {
            print!("{v:>5} ");
        }
        println!();
    }
    println!();

    println!("--- Periodicity ---");
    let (i, j) = (1, 2);
    for (s, t) in [(1i64, 0i64), (0, 1), (2, 1)] {
        println!(
            "sigma({}, {}) = {}  =  sigma({i}, {j}) - {}m = {}",
            i + s * table.m(),
            j + t * table.m(),
            table.sigma(i + s * table.m(), j + t * table.m()),
            s + t,
            table.sigma(i, j) - (s + t) * table.m()
        );
    }
    println!();

    println!("--- Dimensions of L(aP + bQ + cR) ---");
    for (a, b, c) in [(0, 0, 0), (1, 1, 1), (2, 0, 1), (3, 3, 3), (5, 4, 2)] {
        println!(
            "dim L({a}P + {b}Q + {c}R) = {}",
            table.dim_divisor(a, b, c)
        );
    }
    let g = table.genus();
    println!(
        "degree 2g - 1 = {} is nonspecial: dim = g = {}",
        2 * g - 1,
        table.dim_divisor(2 * g - 1, 0, 0)
    );
    println!();

    println!("--- Base points and gaps ---");
    for triple in [(1, 0, 0), (0, 1, 0), (1, 1, 1), (2, 2, 2), (0, 2, 1)] {
        let bp: Vec<&str> = [(Slot::P, "P"), (Slot::Q, "Q"), (Slot::R, "R")]
            .iter()
            .filter(|(s, _)| table.has_basepoint(triple, *s).unwrap())
            .map(|(_, n)| *n)
            .collect();
        println!(
            "{:?}: gap = {}, pure gap = {}, base points at {:?}",
            triple,
            table.is_gap(triple).unwrap(),
            table.is_pure_gap(triple).unwrap(),
            bp
        );
    }
}
