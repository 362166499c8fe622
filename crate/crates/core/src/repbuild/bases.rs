//! Concrete basis constructions: special linear, odd orthogonal (block
//! form), and the exceptional 14-dimensional algebra inside 7×7 matrices.

use super::{LieBasis, RepError};
use crate::catalog::LieFamily;
use crate::exactmath::{Rat, RingElem};
use crate::symlinalg::Mat;

fn unit_mat(d: usize, r: usize, c: usize) -> Mat<Rat> {
    Mat::from_fn(d, d, |i, j| {
        if (i, j) == (r, c) {
            Rat::one()
        } else {
            Rat::zero()
        }
    })
}

/// Basis of the traceless `n×n` matrices: the `n−1` diagonal differences
/// `E_{ii} − E_{i+1,i+1}` first, then for each pair `i < j` the two units
/// `E_{ij}`, `E_{ji}` in that interleaved order.
pub fn basis_sl(n: u32) -> Result<LieBasis, RepError> {
    let family = LieFamily::sl(n)?;
    let d = n as usize;
    let mut matrices = Vec::with_capacity(d * d - 1);
    let mut labels = Vec::with_capacity(d * d - 1);
    for i in 0..d - 1 {
        let mut m = unit_mat(d, i, i);
        m.set(i + 1, i + 1, -Rat::one());
        matrices.push(m);
        labels.push(format!("H{}", i + 1));
    }
    for i in 0..d {
        for j in i + 1..d {
            matrices.push(unit_mat(d, i, j));
            labels.push(format!("E[{},{}]", i + 1, j + 1));
            matrices.push(unit_mat(d, j, i));
            labels.push(format!("E[{},{}]", j + 1, i + 1));
        }
    }
    LieBasis::new(family, matrices, labels)
}

/// The invariant bilinear form of the odd orthogonal algebra in the block
/// convention used here: `J = [[0, I_n, 0], [I_n, 0, 0], [0, 0, 1]]`.
/// Membership means `ᵗM·J + J·M = 0`.
pub fn so_odd_form_matrix<T: RingElem>(n: usize, one: &T) -> Mat<T> {
    let size = 2 * n + 1;
    Mat::from_fn(size, size, |r, c| {
        let hit = (r < n && c == n + r) || (n <= r && r < 2 * n && c == r - n) || (r == 2 * n && c == 2 * n);
        if hit {
            one.clone()
        } else {
            one.zero_like()
        }
    })
}

/// Exact membership test for the odd orthogonal algebra in the block
/// convention of [`so_odd_form_matrix`]; works over any coefficient ring
/// (rational matrices and symbolic polynomial matrices alike).
pub fn in_so_odd<T: RingElem>(m: &Mat<T>) -> Result<bool, RepError> {
    let size = m.rows();
    if m.cols() != size || size < 5 || size % 2 == 0 {
        return Err(RepError::WrongShape {
            detail: format!("{}x{} is not an odd orthogonal shape", m.rows(), m.cols()),
        });
    }
    let n = (size - 1) / 2;
    let one = m.at(0, 0).one_like();
    let j = so_odd_form_matrix(n, &one);
    Ok(m.transpose().mul(&j)?.add(&j.mul(m)?)?.is_zero())
}

/// Basis of the odd orthogonal algebra of `(2n+1)×(2n+1)` matrices
/// `[[A, B, −ᵗF], [C, −ᵗA, −ᵗE], [E, F, 0]]` with `B`, `C` skew: emitted as
/// the `n²` elementary `A`s, the `n(n−1)/2` skew `B`s, the `n(n−1)/2` skew
/// `C`s, the `n` rows `E`, and the `n` rows `F` — `2n² + n` in total.
pub fn basis_so_odd(n: u32) -> Result<LieBasis, RepError> {
    if n < 2 {
        return Err(RepError::BadParameter {
            detail: format!("odd orthogonal basis needs block size n >= 2, got {n}"),
        });
    }
    let family = LieFamily::so_odd(2 * n + 1)?;
    let n = n as usize;
    let size = 2 * n + 1;
    let mut matrices = Vec::new();
    let mut labels = Vec::new();

    for p in 0..n {
        for q in 0..n {
            let mut m = unit_mat(size, p, q);
            m.set(n + q, n + p, -Rat::one());
            matrices.push(m);
            labels.push(format!("A[{},{}]", p + 1, q + 1));
        }
    }
    for p in 0..n {
        for q in p + 1..n {
            let mut m = unit_mat(size, p, n + q);
            m.set(q, n + p, -Rat::one());
            matrices.push(m);
            labels.push(format!("B[{},{}]", p + 1, q + 1));
        }
    }
    for p in 0..n {
        for q in p + 1..n {
            let mut m = unit_mat(size, n + p, q);
            m.set(n + q, p, -Rat::one());
            matrices.push(m);
            labels.push(format!("C[{},{}]", p + 1, q + 1));
        }
    }
    for p in 0..n {
        let mut m = unit_mat(size, 2 * n, p);
        m.set(n + p, 2 * n, -Rat::one());
        matrices.push(m);
        labels.push(format!("E[{}]", p + 1));
    }
    for p in 0..n {
        let mut m = unit_mat(size, 2 * n, n + p);
        m.set(p, 2 * n, -Rat::one());
        matrices.push(m);
        labels.push(format!("F[{}]", p + 1));
    }
    LieBasis::new(family, matrices, labels)
}

/// A 7×7 matrix from a sparse list of `(row, col, value)` with 1-based
/// indices.
fn sparse7(entries: &[(usize, usize, i64)]) -> Mat<Rat> {
    let mut m = Mat::zeros(7, 7, &Rat::zero());
    for &(r, c, v) in entries {
        m.set(r - 1, c - 1, Rat::from_int(v));
    }
    m
}

fn diag7(values: [i64; 7]) -> Mat<Rat> {
    Mat::from_fn(7, 7, |r, c| {
        if r == c {
            Rat::from_int(values[r])
        } else {
            Rat::zero()
        }
    })
}

/// The 14-dimensional exceptional Lie algebra as 7×7 matrices: the two
/// diagonal elements, the raising generators `X1`, `X2`, and lowering
/// generators `Y1`, `Y2` are transcribed literally; `X3..X6` and `Y3..Y6`
/// come from the commutator recipes
/// `X3 = [X1,X2]`, `X4 = ½[X1,X3]`, `X5 = −⅓[X1,X4]`, `X6 = −[X2,X5]`,
/// `Y3 = −[Y1,Y2]`, `Y4 = −½[Y1,Y3]`, `Y5 = ⅓[Y1,Y4]`, `Y6 = [Y2,Y5]`.
///
/// The transcription is accepted only if the full basis invariants hold
/// (independence, closure, dimension 14, tracelessness) — they are rigid
/// enough to arbitrate any ambiguous glyph in the source listing.
pub fn basis_g2() -> Result<LieBasis, RepError> {
    let h1 = diag7([1, -1, 2, 0, -2, 1, -1]);
    let h2 = diag7([0, 1, -1, 0, 1, -1, 0]);
    let x1 = sparse7(&[(1, 2, 1), (3, 4, 2), (4, 5, 1), (6, 7, -1)]);
    let x2 = sparse7(&[(2, 3, -1), (5, 6, 1)]);
    let y1 = sparse7(&[(2, 1, 1), (4, 3, 1), (5, 4, 2), (7, 6, -1)]);
    let y2 = sparse7(&[(3, 2, -1), (6, 5, 1)]);

    let half = Rat::new(1, 2);
    let third = Rat::new(1, 3);
    let x3 = x1.commutator(&x2)?;
    let x4 = x1.commutator(&x3)?.scale(&half);
    let x5 = x1.commutator(&x4)?.scale(&-&third);
    let x6 = x2.commutator(&x5)?.scale(&-Rat::one());
    let y3 = y1.commutator(&y2)?.scale(&-Rat::one());
    let y4 = y1.commutator(&y3)?.scale(&-&half);
    let y5 = y1.commutator(&y4)?.scale(&third);
    let y6 = y2.commutator(&y5)?;

    let matrices = vec![
        h1, h2, x1, x2, x3, x4, x5, x6, y1, y2, y3, y4, y5, y6,
    ];
    let labels = [
        "H1", "H2", "X1", "X2", "X3", "X4", "X5", "X6", "Y1", "Y2", "Y3", "Y4", "Y5", "Y6",
    ]
    .iter()
    .map(|s| s.to_string())
    .collect();
    LieBasis::new(LieFamily::G2, matrices, labels).map_err(|e| match e {
        RepError::Catalog(e) => RepError::Catalog(e),
        other => RepError::TranscriptionInvalid {
            detail: other.to_string(),
        },
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sl_counts_and_order() {
        let b2 = basis_sl(2).unwrap();
        assert_eq!(b2.dim(), 3);
        let b6 = basis_sl(6).unwrap();
        assert_eq!(b6.dim(), 35);
        assert_eq!(b6.mat_size(), 6);
        // order: 5 diagonal differences, then E[1,2], E[2,1], E[1,3], ...
        assert_eq!(&b6.labels()[..7], &["H1", "H2", "H3", "H4", "H5", "E[1,2]", "E[2,1]"]);
        // closure spot check: [E12, E21] = H1
        let e12 = &b6.matrices()[5];
        let e21 = &b6.matrices()[6];
        assert_eq!(&e12.commutator(e21).unwrap(), &b6.matrices()[0]);
        assert_eq!(b6.consts().coeff(5, 6, 0), &Rat::one());
        // invalid parameter
        assert!(basis_sl(1).is_err());
    }

    #[test]
    fn so_odd_counts_blocks_and_membership() {
        let b = basis_so_odd(2).unwrap();
        assert_eq!(b.dim(), 10);
        assert_eq!(b.mat_size(), 5);
        assert_eq!(b.labels().len(), 10);
        assert_eq!(b.labels()[0], "A[1,1]");
        assert_eq!(b.labels()[4], "B[1,2]");
        assert_eq!(b.labels()[5], "C[1,2]");
        assert_eq!(b.labels()[6], "E[1]");
        assert_eq!(b.labels()[8], "F[1]");
        for (m, label) in b.matrices().iter().zip(b.labels()) {
            assert!(in_so_odd(m).unwrap(), "{label} fails the form identity");
            // block shape: lower-left n×n of the (1,1)/(2,2) pair is minus
            // the transpose of the upper-left
            let n = 2;
            for r in 0..n {
                for c in 0..n {
                    assert_eq!(m.at(n + r, n + c), &-m.at(c, r), "{label}");
                }
            }
        }
        let b3 = basis_so_odd(3).unwrap();
        assert_eq!(b3.dim(), 21);
        let b4 = basis_so_odd(4).unwrap();
        assert_eq!(b4.dim(), 36);
        assert!(basis_so_odd(1).is_err());
    }

    #[test]
    fn in_so_odd_rejects_non_members_and_bad_shapes() {
        let not_member = unit_mat(5, 0, 0);
        assert!(!in_so_odd(&not_member).unwrap());
        let even = unit_mat(4, 0, 1);
        assert!(in_so_odd(&even).is_err());
    }

    #[test]
    fn g2_transcription_passes_and_matches_derived_forms() {
        let b = basis_g2().unwrap();
        assert_eq!(b.dim(), 14);
        assert_eq!(b.mat_size(), 7);
        // the two diagonal elements commute
        assert!(b.matrices()[0].commutator(&b.matrices()[1]).unwrap().is_zero());
        // derived generators come out to the expected sparse forms
        let expect = [
            ("X3", sparse7(&[(1, 3, -1), (2, 4, 2), (4, 6, 1), (5, 7, 1)])),
            ("X4", sparse7(&[(1, 4, 2), (2, 5, -1), (3, 6, 1), (4, 7, 1)])),
            ("X5", sparse7(&[(1, 5, 1), (3, 7, -1)])),
            ("X6", sparse7(&[(1, 6, 1), (2, 7, -1)])),
            ("Y3", sparse7(&[(3, 1, -1), (4, 2, 1), (6, 4, 2), (7, 5, 1)])),
            ("Y4", sparse7(&[(4, 1, 1), (5, 2, -1), (6, 3, 1), (7, 4, 2)])),
            ("Y5", sparse7(&[(5, 1, 1), (7, 3, -1)])),
            ("Y6", sparse7(&[(6, 1, 1), (7, 2, -1)])),
        ];
        for (label, want) in &expect {
            let idx = b.labels().iter().position(|l| l == label).unwrap();
            assert_eq!(&b.matrices()[idx], want, "{label}");
        }
    }

    #[test]
    fn g2_transcription_is_rigid_against_sign_slips() {
        // flipping one sign in X1 must break the invariants
        let h1 = diag7([1, -1, 2, 0, -2, 1, -1]);
        let h2 = diag7([0, 1, -1, 0, 1, -1, 0]);
        let x1_bad = sparse7(&[(1, 2, 1), (3, 4, 2), (4, 5, 1), (6, 7, 1)]);
        let x2 = sparse7(&[(2, 3, -1), (5, 6, 1)]);
        let y1 = sparse7(&[(2, 1, 1), (4, 3, 1), (5, 4, 2), (7, 6, -1)]);
        let y2 = sparse7(&[(3, 2, -1), (6, 5, 1)]);
        let half = Rat::new(1, 2);
        let third = Rat::new(1, 3);
        let x3 = x1_bad.commutator(&x2).unwrap();
        let x4 = x1_bad.commutator(&x3).unwrap().scale(&half);
        let x5 = x1_bad.commutator(&x4).unwrap().scale(&-&third);
        let x6 = x2.commutator(&x5).unwrap().scale(&-Rat::one());
        let y3 = y1.commutator(&y2).unwrap().scale(&-Rat::one());
        let y4 = y1.commutator(&y3).unwrap().scale(&-&half);
        let y5 = y1.commutator(&y4).unwrap().scale(&third);
        let y6 = y2.commutator(&y5).unwrap();
        let matrices = vec![
            h1, h2, x1_bad, x2, x3, x4, x5, x6, y1, y2, y3, y4, y5, y6,
        ];
        let labels = (0..14).map(|i| format!("g{i}")).collect();
        assert!(LieBasis::new(LieFamily::G2, matrices, labels).is_err());
    }
}
