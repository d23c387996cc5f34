//! Exact rank computation over ℚ by Gaussian elimination.

use crate::rational::Coeff;
use num::Zero;

/// Rank of the row span. Consumes the rows; exact, no pivot tolerance.
pub fn rank(mut rows: Vec<Vec<Coeff>>) -> usize {
    let ncols = rows.iter().map(|r| r.len()).max().unwrap_or(0);
    for r in &mut rows {
        r.resize(ncols, Coeff::zero());
    }
    let mut rank = 0;
    for col in 0..ncols {
        let Some(pivot) = (rank..rows.len()).find(|&r| !rows[r][col].is_zero()) else {
            continue;
        };
        rows.swap(rank, pivot);
        let inv = rows[rank][col].recip();
        for r in rank + 1..rows.len() {
            if rows[r][col].is_zero() {
                continue;
            }
            let factor = &rows[r][col] * &inv;
            for c in col..ncols {
                let delta = &factor * &rows[rank][c];
                rows[r][c] = &rows[r][c] - &delta;
            }
        }
        rank += 1;
        if rank == rows.len() {
            break;
        }
    }
    rank
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{q_int, q_ratio};

    #[test]
    fn rank_of_dependent_rows() {
        let rows = vec![
            vec![q_int(1), q_int(2)],
            vec![q_int(2), q_int(4)],
            vec![q_int(0), q_ratio(1, 3)],
        ];
        assert_eq!(rank(rows), 2);
    }

    #[test]
    fn rank_of_zero_and_empty() {
        assert_eq!(rank(vec![]), 0);
        assert_eq!(rank(vec![vec![q_int(0), q_int(0)]]), 0);
    }
}
