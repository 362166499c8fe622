//! Derivation action on the third exterior power of the 6-dimensional
//! standard module, in the lexicographic 3-subset basis.

use super::RepError;
use crate::exactmath::Rat;
use crate::symlinalg::Mat;

/// The 20 three-element subsets of `{0, .., 5}` in lexicographic order —
/// the basis `e_a ∧ e_b ∧ e_c` (`a < b < c`) of the exterior cube.
pub fn lex_3_subsets() -> Vec<[usize; 3]> {
    let mut out = Vec::with_capacity(20);
    for a in 0..6 {
        for b in a + 1..6 {
            for c in b + 1..6 {
                out.push([a, b, c]);
            }
        }
    }
    out
}

/// Sorts a triple with distinct entries, returning the permutation sign;
/// `None` when two entries coincide (the wedge vanishes).
fn sort_with_sign(mut t: [usize; 3]) -> Option<([usize; 3], Rat)> {
    let mut negative = false;
    // three-element bubble sort: at most three adjacent swaps
    for _ in 0..3 {
        for p in 0..2 {
            if t[p] == t[p + 1] {
                return None;
            }
            if t[p] > t[p + 1] {
                t.swap(p, p + 1);
                negative = !negative;
            }
        }
    }
    Some((t, if negative { -Rat::one() } else { Rat::one() }))
}

/// Derivation action of a 6×6 matrix on the exterior cube:
/// `X·(e_a∧e_b∧e_c) = Xe_a∧e_b∧e_c + e_a∧Xe_b∧e_c + e_a∧e_b∧Xe_c`,
/// expressed in the lexicographic subset basis with sort-parity signs
/// (even permutation `+`, transposition `−`). Functorial for the
/// commutator, which makes it a Lie algebra morphism.
pub fn wedge3_action_sl6(x: &Mat<Rat>) -> Result<Mat<Rat>, RepError> {
    if x.rows() != 6 || x.cols() != 6 {
        return Err(RepError::WrongShape {
            detail: format!("{}x{} input, expected 6x6", x.rows(), x.cols()),
        });
    }
    let subsets = lex_3_subsets();
    let index_of = |t: &[usize; 3]| -> usize {
        subsets.binary_search(t).expect("sorted triple of distinct indices")
    };
    let mut out = Mat::zeros(20, 20, &Rat::zero());
    for (col, t) in subsets.iter().enumerate() {
        for pos in 0..3 {
            for r in 0..6 {
                let coeff = x.at(r, t[pos]);
                if coeff.is_zero() {
                    continue;
                }
                let mut replaced = *t;
                replaced[pos] = r;
                if let Some((sorted, sign)) = sort_with_sign(replaced) {
                    let row = index_of(&sorted);
                    let v = out.at(row, col) + &(&sign * coeff);
                    out.set(row, col, v);
                }
            }
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::super::basis_sl;
    use super::*;

    #[test]
    fn subset_basis_is_lexicographic() {
        let s = lex_3_subsets();
        assert_eq!(s.len(), 20);
        assert_eq!(s[0], [0, 1, 2]);
        assert_eq!(s[1], [0, 1, 3]);
        assert_eq!(s[19], [3, 4, 5]);
        assert!(s.windows(2).all(|w| w[0] < w[1]));
    }

    #[test]
    fn weight_zero_and_signed_examples() {
        let b = basis_sl(6).unwrap();
        // H1 = E11 − E22 on e1∧e2∧e3: weight 1 + (−1) + 0 = 0
        let h1 = wedge3_action_sl6(&b.matrices()[0]).unwrap();
        for row in 0..20 {
            assert!(h1.at(row, 0).is_zero());
        }
        // E41 on e1∧e2∧e3 → e4∧e2∧e3 = +e2∧e3∧e4 (even sort)
        let e41_idx = b.labels().iter().position(|l| l == "E[4,1]").unwrap();
        let e41 = wedge3_action_sl6(&b.matrices()[e41_idx]).unwrap();
        let target = lex_3_subsets().iter().position(|t| t == &[1, 2, 3]).unwrap();
        for row in 0..20 {
            let expect = if row == target { Rat::one() } else { Rat::zero() };
            assert_eq!(e41.at(row, 0), &expect, "row {row}");
        }
    }

    #[test]
    fn odd_sorts_pick_up_a_sign() {
        // E21 on e1∧e3∧e4 → e2∧e3∧e4 (already sorted, +); on e1∧e2∧e5 the
        // image replaces e1 by e2, giving a repeated index → 0.
        let b = basis_sl(6).unwrap();
        let e21_idx = b.labels().iter().position(|l| l == "E[2,1]").unwrap();
        let a = wedge3_action_sl6(&b.matrices()[e21_idx]).unwrap();
        let s = lex_3_subsets();
        let col_134 = s.iter().position(|t| t == &[0, 2, 3]).unwrap();
        let row_234 = s.iter().position(|t| t == &[1, 2, 3]).unwrap();
        assert_eq!(a.at(row_234, col_134), &Rat::one());
        let col_125 = s.iter().position(|t| t == &[0, 1, 4]).unwrap();
        for row in 0..20 {
            assert!(a.at(row, col_125).is_zero());
        }
        // a genuine transposition: E31 on e1∧e2∧e4 → e3∧e2∧e4 = −e2∧e3∧e4
        let e31_idx = b.labels().iter().position(|l| l == "E[3,1]").unwrap();
        let a31 = wedge3_action_sl6(&b.matrices()[e31_idx]).unwrap();
        let col_124 = s.iter().position(|t| t == &[0, 1, 3]).unwrap();
        assert_eq!(a31.at(row_234, col_124), &-Rat::one());
    }

    #[test]
    fn wedge_action_is_a_lie_algebra_morphism() {
        // exact identity Λ³([X,Y]) = [Λ³X, Λ³Y] on all 35×35 basis pairs
        let b = basis_sl(6).unwrap();
        let images: Vec<Mat<Rat>> = b
            .matrices()
            .iter()
            .map(|x| wedge3_action_sl6(x).unwrap())
            .collect();
        for (i, xi) in b.matrices().iter().enumerate() {
            for (j, xj) in b.matrices().iter().enumerate() {
                let lhs = wedge3_action_sl6(&xi.commutator(xj).unwrap()).unwrap();
                let rhs = images[i].commutator(&images[j]).unwrap();
                assert_eq!(lhs, rhs, "pair ({i},{j})");
            }
        }
    }

    #[test]
    fn shape_is_enforced() {
        let five = Mat::zeros(5, 5, &Rat::zero());
        assert!(wedge3_action_sl6(&five).is_err());
    }
}
