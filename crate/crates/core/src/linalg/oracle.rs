use alloc::vec::Vec;

use super::ExactMatrix;
use crate::exact::Scalar;

/// Rank by textbook Gaussian elimination over the field.
///
/// Shares no code with [`ExactMatrix::rank`]: no denominator clearing, no
/// fraction-free updates. Each column is pivoted by swapping in the first row
/// with a nonzero entry, and rows below are reduced with field division.
pub fn oracle_rank(m: &ExactMatrix) -> usize {
    let mut a: Vec<Vec<Scalar>> = m.row_vecs();
    let rows = m.rows();
    let cols = m.cols();
    let mut rank = 0;
    for c in 0..cols {
        let mut pivot = None;
        for i in rank..rows {
            if !a[i][c].is_zero() {
                pivot = Some(i);
                break;
            }
        }
        let Some(p) = pivot else { continue };
        a.swap(rank, p);
        let inv = a[rank][c].inv().expect("pivot is nonzero");
        for i in (rank + 1)..rows {
            if a[i][c].is_zero() {
                continue;
            }
            let factor = &a[i][c] * &inv;
            for j in c..cols {
                let sub = &factor * &a[rank][j];
                a[i][j] = &a[i][j] - &sub;
            }
        }
        rank += 1;
        if rank == rows {
            break;
        }
    }
    rank
}
