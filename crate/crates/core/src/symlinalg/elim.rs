//! Exact elimination: fraction-free (Bareiss) rank and determinant over any
//! integral domain, and Gaussian kernels/solves over fields.

use super::{LinAlgError, Mat};
use crate::exactmath::{ArithError, FieldElem, RingElem};

/// Result of fraction-free elimination: the rank and the pivot columns in
/// elimination order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RankProfile {
    pub rank: usize,
    pub pivot_columns: Vec<usize>,
}

/// Fraction-free Bareiss elimination over an integral domain; every division
/// is exact by construction.
///
/// Pivoting is deterministic: columns are scanned left to right, and within a
/// column the first nonzero entry in row order (smallest row index) pivots.
/// Returns the rank and pivot columns. An inexact division is reported as
/// [`LinAlgError::ExactDivisionFailure`] and indicates a scalar bug, not bad
/// input.
pub fn bareiss_rank<T: RingElem>(m: &Mat<T>) -> Result<RankProfile, LinAlgError> {
    bareiss(m).map(|out| out.profile)
}

struct BareissOutcome<T> {
    profile: RankProfile,
    /// Last pivot value (equals `±det` for full-rank square input).
    last_pivot: Option<T>,
    /// Parity of row swaps performed.
    swap_sign_negative: bool,
}

fn bareiss<T: RingElem>(m: &Mat<T>) -> Result<BareissOutcome<T>, LinAlgError> {
    let (rows, cols) = (m.rows(), m.cols());
    let mut w = m.clone();
    let mut prev: Option<T> = None; // None stands for the initial pivot 1
    let mut rank = 0usize;
    let mut pivot_columns = Vec::new();
    let mut swap_sign_negative = false;

    for col in 0..cols {
        if rank == rows {
            break;
        }
        let Some(pivot_row) = (rank..rows).find(|&r| !w.at(r, col).is_zero()) else {
            continue;
        };
        if pivot_row != rank {
            for c in 0..cols {
                let a = w.at(rank, c).clone();
                let b = w.at(pivot_row, c).clone();
                w.set(rank, c, b);
                w.set(pivot_row, c, a);
            }
            swap_sign_negative = !swap_sign_negative;
        }
        let pivot = w.at(rank, col).clone();
        for r in rank + 1..rows {
            let lead = w.at(r, col).clone();
            for c in col + 1..cols {
                let num = pivot
                    .times(w.at(r, c))
                    .minus(&lead.times(w.at(rank, c)));
                let val = match &prev {
                    None => num,
                    Some(p) => num
                        .exact_div(p)
                        .map_err(LinAlgError::ExactDivisionFailure)?,
                };
                w.set(r, c, val);
            }
            w.set(r, col, pivot.zero_like());
        }
        prev = Some(pivot);
        pivot_columns.push(col);
        rank += 1;
    }

    Ok(BareissOutcome {
        profile: RankProfile {
            rank,
            pivot_columns,
        },
        last_pivot: prev,
        swap_sign_negative,
    })
}

/// Exact determinant of a square matrix by fraction-free elimination.
///
/// Over `Q[x1..xk]` this computes symbolic determinants without ever leaving
/// the polynomial ring. For a rank-deficient matrix the result is the zero
/// of the entry ring.
pub fn sym_det<T: RingElem>(m: &Mat<T>) -> Result<T, LinAlgError> {
    if m.rows() != m.cols() {
        return Err(LinAlgError::ShapeMismatch {
            detail: format!("determinant of {}x{}", m.rows(), m.cols()),
        });
    }
    let out = bareiss(m)?;
    let zero = m.at(0, 0).zero_like();
    if out.profile.rank < m.rows() {
        return Ok(zero);
    }
    // Full rank: with the Bareiss recurrence the final pivot IS the
    // determinant of the row-permuted matrix.
    let det = out.last_pivot.expect("full rank implies a pivot");
    Ok(if out.swap_sign_negative {
        det.negated()
    } else {
        det
    })
}

/// Reduced row echelon form over a field; returns (rref, pivot columns).
fn rref<T: FieldElem>(m: &Mat<T>) -> Result<(Mat<T>, Vec<usize>), ArithError> {
    rref_limited(m, m.cols())
}

/// Row reduction that only ever pivots in the first `pivot_limit` columns;
/// later columns are carried along (the standard augmented-system reduction).
fn rref_limited<T: FieldElem>(
    m: &Mat<T>,
    pivot_limit: usize,
) -> Result<(Mat<T>, Vec<usize>), ArithError> {
    let (rows, cols) = (m.rows(), m.cols());
    let mut w = m.clone();
    let mut pivots = Vec::new();
    let mut rank = 0usize;
    for col in 0..pivot_limit.min(cols) {
        if rank == rows {
            break;
        }
        let Some(pivot_row) = (rank..rows).find(|&r| !w.at(r, col).is_zero()) else {
            continue;
        };
        if pivot_row != rank {
            for c in 0..cols {
                let a = w.at(rank, c).clone();
                let b = w.at(pivot_row, c).clone();
                w.set(rank, c, b);
                w.set(pivot_row, c, a);
            }
        }
        let inv = w.at(rank, col).invert()?;
        for c in col..cols {
            w.set(rank, c, w.at(rank, c).times(&inv));
        }
        for r in 0..rows {
            if r != rank && !w.at(r, col).is_zero() {
                let f = w.at(r, col).clone();
                for c in col..cols {
                    let v = w.at(r, c).minus(&f.times(w.at(rank, c)));
                    w.set(r, c, v);
                }
            }
        }
        pivots.push(col);
        rank += 1;
    }
    Ok((w, pivots))
}

/// Basis of the right null space `{v : m v = 0}` over a field.
///
/// Returns `cols - rank` vectors, one per free column in ascending column
/// order, each with a `1` in its free coordinate. The empty list means the
/// kernel is trivial.
pub fn kernel_basis<T: FieldElem>(m: &Mat<T>) -> Result<Vec<Vec<T>>, LinAlgError> {
    let (r, pivots) = rref(m).map_err(LinAlgError::Arith)?;
    let zero = m.at(0, 0).zero_like();
    let one = m.at(0, 0).one_like();
    let cols = m.cols();
    let pivot_set: Vec<Option<usize>> = {
        let mut v = vec![None; cols];
        for (row, &col) in pivots.iter().enumerate() {
            v[col] = Some(row);
        }
        v
    };
    let mut basis = Vec::new();
    for free in 0..cols {
        if pivot_set[free].is_some() {
            continue;
        }
        let mut v = vec![zero.clone(); cols];
        v[free] = one.clone();
        for (col, row) in pivot_set.iter().enumerate() {
            if let Some(row) = row {
                v[col] = r.at(*row, free).negated();
            }
        }
        basis.push(v);
    }
    Ok(basis)
}

/// Solves `m x = b` over a field. Returns `None` when inconsistent; when the
/// system is underdetermined, returns the solution with all free coordinates
/// zero.
pub fn lin_solve<T: FieldElem>(m: &Mat<T>, b: &[T]) -> Result<Option<Vec<T>>, LinAlgError> {
    if b.len() != m.rows() {
        return Err(LinAlgError::ShapeMismatch {
            detail: format!("solve of {}x{} with rhs of {}", m.rows(), m.cols(), b.len()),
        });
    }
    // Augment, reduce, and read off.
    let aug = Mat::from_fn(m.rows(), m.cols() + 1, |r, c| {
        if c < m.cols() {
            m.at(r, c).clone()
        } else {
            b[r].clone()
        }
    });
    let (r, pivots) = rref(&aug).map_err(LinAlgError::Arith)?;
    if pivots.contains(&m.cols()) {
        return Ok(None); // pivot in the augmented column: inconsistent
    }
    let zero = m.at(0, 0).zero_like();
    let mut x = vec![zero; m.cols()];
    for (row, &col) in pivots.iter().enumerate() {
        x[col] = r.at(row, m.cols()).clone();
    }
    Ok(Some(x))
}

/// Solves `m x = b` for every column `b` of `rhs` with a single elimination
/// pass. Entry `j` of the result is `None` when that column is inconsistent;
/// underdetermined solutions pin free coordinates to zero, as in
/// [`lin_solve`].
pub fn lin_solve_columns<T: FieldElem>(
    m: &Mat<T>,
    rhs: &Mat<T>,
) -> Result<Vec<Option<Vec<T>>>, LinAlgError> {
    if rhs.rows() != m.rows() {
        return Err(LinAlgError::ShapeMismatch {
            detail: format!(
                "solve of {}x{} with rhs of {}x{}",
                m.rows(),
                m.cols(),
                rhs.rows(),
                rhs.cols()
            ),
        });
    }
    let n = m.cols();
    let aug = Mat::from_fn(m.rows(), n + rhs.cols(), |r, c| {
        if c < n {
            m.at(r, c).clone()
        } else {
            rhs.at(r, c - n).clone()
        }
    });
    let (w, pivots) = rref_limited(&aug, n).map_err(LinAlgError::Arith)?;
    let rank = pivots.len();
    let zero = m.at(0, 0).zero_like();
    let mut out = Vec::with_capacity(rhs.cols());
    for j in 0..rhs.cols() {
        // Consistent iff the column is zero on every pivot-free row.
        if (rank..m.rows()).any(|r| !w.at(r, n + j).is_zero()) {
            out.push(None);
            continue;
        }
        let mut x = vec![zero.clone(); n];
        for (row, &col) in pivots.iter().enumerate() {
            x[col] = w.at(row, n + j).clone();
        }
        out.push(Some(x));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmath::{PolyQ, Rat};

    fn rq(n: i64) -> Rat {
        Rat::from_int(n)
    }

    #[test]
    fn identity_rank() {
        let id: Mat<Rat> = Mat::identity(4, &Rat::one());
        let p = bareiss_rank(&id).unwrap();
        assert_eq!(p.rank, 4);
        assert_eq!(p.pivot_columns, vec![0, 1, 2, 3]);
    }

    #[test]
    fn proportional_polynomial_rows_have_rank_one() {
        // rows (x1, x2) and (2*x1, 2*x2) over Q[x1,x2]
        let x1 = PolyQ::var(2, 0);
        let x2 = PolyQ::var(2, 1);
        let two = Rat::from_int(2);
        let m = Mat::from_rows(vec![
            vec![x1.clone(), x2.clone()],
            vec![x1.scale(&two), x2.scale(&two)],
        ])
        .unwrap();
        let p = bareiss_rank(&m).unwrap();
        assert_eq!(p.rank, 1);
        assert_eq!(p.pivot_columns, vec![0]);
    }

    #[test]
    fn sym_det_two_by_two_generic() {
        // det [[a,b],[c,d]] = ad - bc with four independent variables
        let v = |i| PolyQ::var(4, i);
        let m = Mat::from_rows(vec![vec![v(0), v(1)], vec![v(2), v(3)]]).unwrap();
        let det = sym_det(&m).unwrap();
        let expect = v(0).mul(&v(3)).unwrap().sub(&v(1).mul(&v(2)).unwrap()).unwrap();
        assert_eq!(det, expect);
    }

    #[test]
    fn sym_det_rational_matrix_with_swaps() {
        // first column forces a row swap; det = -( -2*3 ) ... compute directly
        let m = Mat::from_rows(vec![
            vec![rq(0), rq(2), rq(1)],
            vec![rq(3), rq(-1), rq(4)],
            vec![rq(0), rq(0), rq(5)],
        ])
        .unwrap();
        // expansion along first column: -3 * det [[2,1],[0,5]] = -30
        assert_eq!(sym_det(&m).unwrap(), rq(-30));
    }

    #[test]
    fn sym_det_singular_is_zero() {
        let m = Mat::from_rows(vec![
            vec![rq(1), rq(2)],
            vec![rq(2), rq(4)],
        ])
        .unwrap();
        assert!(sym_det(&m).unwrap().is_zero());
    }

    #[test]
    fn kernel_of_rank_one_projector() {
        // m = [[1,1],[1,1]] has kernel spanned by (1,-1) up to scaling;
        // our convention: free column = 1, vector (-1, 1).
        let m = Mat::from_rows(vec![vec![rq(1), rq(1)], vec![rq(1), rq(1)]]).unwrap();
        let k = kernel_basis(&m).unwrap();
        assert_eq!(k.len(), 1);
        assert_eq!(k[0], vec![rq(-1), rq(1)]);
        // and m * v = 0
        assert!(m.mul_vec(&k[0]).unwrap().iter().all(Rat::is_zero));
    }

    #[test]
    fn kernel_of_full_rank_matrix_is_empty() {
        let id: Mat<Rat> = Mat::identity(3, &Rat::one());
        assert!(kernel_basis(&id).unwrap().is_empty());
    }

    #[test]
    fn kernel_size_matches_rank_nullity() {
        let m = Mat::from_rows(vec![
            vec![rq(1), rq(2), rq(3), rq(4)],
            vec![rq(2), rq(4), rq(6), rq(8)],
            vec![rq(0), rq(1), rq(1), rq(0)],
        ])
        .unwrap();
        let rank = bareiss_rank(&m).unwrap().rank;
        let k = kernel_basis(&m).unwrap();
        assert_eq!(k.len(), m.cols() - rank);
        for v in &k {
            assert!(m.mul_vec(v).unwrap().iter().all(Rat::is_zero));
        }
    }

    #[test]
    fn lin_solve_unique_and_inconsistent() {
        let m = Mat::from_rows(vec![vec![rq(2), rq(0)], vec![rq(0), rq(4)]]).unwrap();
        let x = lin_solve(&m, &[rq(6), rq(8)]).unwrap().unwrap();
        assert_eq!(x, vec![rq(3), rq(2)]);

        let sing = Mat::from_rows(vec![vec![rq(1), rq(1)], vec![rq(1), rq(1)]]).unwrap();
        assert!(lin_solve(&sing, &[rq(1), rq(2)]).unwrap().is_none());
        // consistent underdetermined: free coordinate pinned to zero
        let x = lin_solve(&sing, &[rq(5), rq(5)]).unwrap().unwrap();
        assert_eq!(x, vec![rq(5), rq(0)]);
    }

    #[test]
    fn lin_solve_columns_matches_single_solves() {
        let m = Mat::from_rows(vec![
            vec![rq(1), rq(1)],
            vec![rq(1), rq(1)],
            vec![rq(0), rq(2)],
        ])
        .unwrap();
        // column 0 solvable, column 1 inconsistent, column 2 solvable
        let rhs = Mat::from_rows(vec![
            vec![rq(3), rq(1), rq(0)],
            vec![rq(3), rq(2), rq(0)],
            vec![rq(2), rq(0), rq(4)],
        ])
        .unwrap();
        let many = lin_solve_columns(&m, &rhs).unwrap();
        assert_eq!(many.len(), 3);
        for j in 0..3 {
            let b: Vec<Rat> = (0..3).map(|r| rhs.at(r, j).clone()).collect();
            assert_eq!(many[j], lin_solve(&m, &b).unwrap(), "column {j}");
        }
        assert_eq!(many[0], Some(vec![rq(2), rq(1)]));
        assert!(many[1].is_none());
    }
}
