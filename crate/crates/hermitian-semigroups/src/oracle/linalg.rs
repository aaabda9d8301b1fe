//! Exact Gaussian elimination over `F_{q^2}`.

use crate::field::{FieldElement, FieldParams};

/// Rank of a dense matrix by row reduction with deterministic pivoting
/// (first nonzero entry in column order).
pub fn rank(params: &FieldParams, mut rows: Vec<Vec<FieldElement>>) -> usize {
    if rows.is_empty() {
        return 0;
    }
    let ncols = rows[0].len();
    let mut rank = 0;
    for col in 0..ncols {
        let Some(pivot) = (rank..rows.len()).find(|&r| !rows[r][col].is_zero()) else {
            continue;
        };
        rows.swap(rank, pivot);
        let inv = params
            .inv(rows[rank][col])
            .expect("pivot entry is nonzero");
        for entry in rows[rank][col..].iter_mut() {
            *entry = params.mul(*entry, inv);
        }
        let pivot_row = rows[rank].clone();
        for (r, row) in rows.iter_mut().enumerate() {
            if r != rank && !row[col].is_zero() {
                let factor = row[col];
                for (entry, p) in row[col..].iter_mut().zip(pivot_row[col..].iter()) {
                    *entry = params.sub(*entry, params.mul(factor, *p));
                }
            }
        }
        rank += 1;
        if rank == rows.len() {
            break;
        }
    }
    rank
}
