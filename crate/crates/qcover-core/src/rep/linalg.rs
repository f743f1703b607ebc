//! Exact linear algebra over the rational function field `Q(q)`.
//!
//! The fraction-level coefficient ring has zero divisors, so eigenspace and
//! kernel computations happen after specializing `p -> +1` or `p -> -1`,
//! where the scalars form a genuine field.

use crate::pi_ring::RatFunc;

/// Row-reduce in place, returning the rank.
#[allow(clippy::needless_range_loop)]
pub fn rank(mut mat: Vec<Vec<RatFunc>>) -> usize {
    let rows = mat.len();
    if rows == 0 {
        return 0;
    }
    let cols = mat[0].len();
    let mut rank = 0;
    for col in 0..cols {
        let Some(pivot) = (rank..rows).find(|r| !mat[*r][col].is_zero()) else {
            continue;
        };
        mat.swap(rank, pivot);
        let inv = mat[rank][col].inverse().expect("pivot nonzero");
        for c in col..cols {
            mat[rank][c] = mat[rank][c].mul(&inv);
        }
        for r in 0..rows {
            if r != rank && !mat[r][col].is_zero() {
                let factor = mat[r][col].clone();
                for c in col..cols {
                    let delta = mat[rank][c].mul(&factor);
                    mat[r][c] = mat[r][c].sub(&delta);
                }
            }
        }
        rank += 1;
        if rank == rows {
            break;
        }
    }
    rank
}

/// Dimension of the kernel of a `rows x cols` matrix.
pub fn kernel_dimension(mat: Vec<Vec<RatFunc>>) -> usize {
    if mat.is_empty() {
        return 0;
    }
    let cols = mat[0].len();
    cols - rank(mat)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::pi_ring::LaurentPoly;

    fn rf(n: i64) -> RatFunc {
        RatFunc::from_int(n)
    }

    fn q() -> RatFunc {
        RatFunc::from_laurent(&LaurentPoly::q_pow(1))
    }

    #[test]
    fn rank_and_kernel() {
        // rows (1, q), (q, q^2) are proportional
        let mat = vec![vec![rf(1), q()], vec![q(), q().mul(&q())]];
        assert_eq!(rank(mat.clone()), 1);
        assert_eq!(kernel_dimension(mat), 1);
        let id = vec![vec![rf(1), rf(0)], vec![rf(0), rf(1)]];
        assert_eq!(kernel_dimension(id), 0);
    }
}
