//! Pre-Lie products, their induced brackets, truncated enveloping algebras
//! with PBW straightening, the correspondence between pre-Lie products and
//! left ideals, and the extension of a pre-Lie product to the symmetric
//! coalgebra.
//!
//! A *pre-Lie* (left-symmetric) product on a vector space satisfies
//!
//! ```text
//! (x ⋆ y) ⋆ z − x ⋆ (y ⋆ z) = (y ⋆ x) ⋆ z − y ⋆ (x ⋆ z),
//! ```
//!
//! which forces `[x, y] = x ⋆ y − y ⋆ x` to be a Lie bracket. Everything here
//! is finite-dimensional and exact: products are given by coefficient tables
//! over `ℚ`, and enveloping-algebra computations run in a hard degree-capped
//! truncation that errors (never silently truncates) past the cap.

mod ideal;
mod oudom_guin;
mod uea;

pub use ideal::{prelie_from_ideal, IdealReport};
pub use oudom_guin::{oudom_guin_product, oudom_guin_star, prop6_checks, Prop6Report};
pub use uea::{
    monomials_of_degree, sym_mul, uea_coproduct, uea_mul, uea_mul_with_strategy, PbwMono,
    StraightenStrategy, UEAElem,
};

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::exactmath::{ArithError, Rat};
use crate::symlinalg::LinAlgError;

/// Errors from pre-Lie / enveloping-algebra computations.
#[derive(Debug, Error)]
pub enum PrelieError {
    #[error("dimension mismatch: {left} vs {right}")]
    DimMismatch { left: usize, right: usize },

    #[error("degree cap mismatch: {left} vs {right}")]
    CapMismatch { left: u32, right: u32 },

    #[error("degree cap exceeded: computation needs degree {needed}, cap is {cap}")]
    CapExceeded { needed: u32, cap: u32 },

    #[error("bad table: {detail}")]
    BadTable { detail: String },

    #[error("bad input: {detail}")]
    BadInput { detail: String },

    #[error("candidate table does not induce the Lie bracket: t[i][j] - t[j][i] != c[i][j]")]
    BracketMismatch,

    #[error("internal consistency check failed: {detail}")]
    InternalInconsistency { detail: String },

    #[error(transparent)]
    Arith(#[from] ArithError),

    #[error(transparent)]
    LinAlg(#[from] LinAlgError),
}

/// A cubic array of rational coefficients, shape-checked on construction.
fn check_cubic(dim: usize, a: &[Vec<Vec<Rat>>], what: &str) -> Result<(), PrelieError> {
    if a.len() != dim
        || a.iter()
            .any(|p| p.len() != dim || p.iter().any(|r| r.len() != dim))
    {
        return Err(PrelieError::BadTable {
            detail: format!("{what} must be a {dim}x{dim}x{dim} array"),
        });
    }
    Ok(())
}

/// Structure constants of a Lie algebra over a fixed basis:
/// `c[i][j][k]` is the coefficient of `x_k` in `[x_i, x_j]`.
///
/// Construction validates antisymmetry and the Jacobi identity exactly;
/// a `StructConsts` value is therefore always a genuine Lie algebra.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(into = "RawConsts")]
pub struct StructConsts {
    dim: usize,
    c: Vec<Vec<Vec<Rat>>>,
}

#[derive(Serialize, Deserialize, Clone)]
struct RawConsts {
    dim: usize,
    c: Vec<Vec<Vec<Rat>>>,
}

impl From<StructConsts> for RawConsts {
    fn from(s: StructConsts) -> Self {
        RawConsts { dim: s.dim, c: s.c }
    }
}

impl TryFrom<RawConsts> for StructConsts {
    type Error = PrelieError;
    fn try_from(raw: RawConsts) -> Result<Self, Self::Error> {
        StructConsts::new(raw.dim, raw.c)
    }
}

impl<'de> Deserialize<'de> for StructConsts {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let raw = RawConsts::deserialize(deserializer)?;
        StructConsts::try_from(raw).map_err(serde::de::Error::custom)
    }
}

impl StructConsts {
    /// Validates shape, antisymmetry `c[i][j][k] = −c[j][i][k]`, and the
    /// Jacobi identity `[x_i,[x_j,x_k]] + [x_j,[x_k,x_i]] + [x_k,[x_i,x_j]] = 0`.
    pub fn new(dim: usize, c: Vec<Vec<Vec<Rat>>>) -> Result<Self, PrelieError> {
        if dim == 0 {
            return Err(PrelieError::BadTable {
                detail: "dimension must be positive".into(),
            });
        }
        check_cubic(dim, &c, "structure constants")?;
        for i in 0..dim {
            for j in 0..dim {
                for k in 0..dim {
                    if c[i][j][k] != -&c[j][i][k] {
                        return Err(PrelieError::BadTable {
                            detail: format!(
                                "antisymmetry fails at [{i}][{j}][{k}]: {} vs -({})",
                                c[i][j][k], c[j][i][k]
                            ),
                        });
                    }
                }
            }
        }
        let consts = StructConsts { dim, c };
        for i in 0..dim {
            for j in (i + 1)..dim {
                for k in (j + 1)..dim {
                    let mut total = vec![Rat::zero(); dim];
                    for (a, b, cc) in [(i, j, k), (j, k, i), (k, i, j)] {
                        // [x_a, [x_b, x_c]]
                        let inner = consts.bracket_coeffs(b, cc).to_vec();
                        let outer = consts.bracket_vec(a, &inner);
                        for (t, o) in total.iter_mut().zip(outer) {
                            *t += &o;
                        }
                    }
                    if total.iter().any(|r| !r.is_zero()) {
                        return Err(PrelieError::BadTable {
                            detail: format!("Jacobi identity fails on triple ({i},{j},{k})"),
                        });
                    }
                }
            }
        }
        Ok(consts)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Coefficients of `[x_i, x_j]` over the basis.
    pub fn bracket_coeffs(&self, i: usize, j: usize) -> &[Rat] {
        &self.c[i][j]
    }

    pub fn coeff(&self, i: usize, j: usize, k: usize) -> &Rat {
        &self.c[i][j][k]
    }

    /// `[x_i, v]` for a coefficient vector `v`.
    pub fn bracket_vec(&self, i: usize, v: &[Rat]) -> Vec<Rat> {
        let mut out = vec![Rat::zero(); self.dim];
        for (m, vm) in v.iter().enumerate() {
            if vm.is_zero() {
                continue;
            }
            for k in 0..self.dim {
                out[k] += &(vm * &self.c[i][m][k]);
            }
        }
        out
    }

    /// The abelian Lie algebra of the given dimension.
    pub fn abelian(dim: usize) -> Self {
        StructConsts::new(dim, zero_cubic(dim)).expect("abelian constants are valid")
    }

    /// The 2-dimensional non-abelian Lie algebra on basis `(x, y)` with
    /// `[x, y] = x`.
    pub fn aff1() -> Self {
        let mut c = zero_cubic(2);
        c[0][1][0] = Rat::one();
        c[1][0][0] = -Rat::one();
        StructConsts::new(2, c).expect("aff(1) constants are valid")
    }

    /// `sl(2)` on the basis `(e, h, f)`: `[h,e] = 2e`, `[e,f] = h`,
    /// `[h,f] = −2f`.
    pub fn sl2() -> Self {
        let mut c = zero_cubic(3);
        let two = Rat::from_int(2);
        c[1][0][0] = two.clone(); // [h,e] = 2e
        c[0][1][0] = -&two;
        c[0][2][1] = Rat::one(); // [e,f] = h
        c[2][0][1] = -Rat::one();
        c[1][2][2] = -&two; // [h,f] = -2f
        c[2][1][2] = two;
        StructConsts::new(3, c).expect("sl2 constants are valid")
    }
}

fn zero_cubic(dim: usize) -> Vec<Vec<Vec<Rat>>> {
    vec![vec![vec![Rat::zero(); dim]; dim]; dim]
}

/// A candidate pre-Lie product over a fixed basis: `t[i][j][k]` is the
/// coefficient of `x_k` in `x_i ⋆ x_j`.
///
/// No intrinsic axiom is enforced — validity is exactly what
/// [`prelie_defect`] reports.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(into = "RawTable")]
pub struct PreLieTable {
    dim: usize,
    t: Vec<Vec<Vec<Rat>>>,
}

#[derive(Serialize, Deserialize, Clone)]
struct RawTable {
    dim: usize,
    t: Vec<Vec<Vec<Rat>>>,
}

impl From<PreLieTable> for RawTable {
    fn from(s: PreLieTable) -> Self {
        RawTable { dim: s.dim, t: s.t }
    }
}

impl TryFrom<RawTable> for PreLieTable {
    type Error = PrelieError;
    fn try_from(raw: RawTable) -> Result<Self, Self::Error> {
        PreLieTable::new(raw.dim, raw.t)
    }
}

impl<'de> Deserialize<'de> for PreLieTable {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let raw = RawTable::deserialize(deserializer)?;
        PreLieTable::try_from(raw).map_err(serde::de::Error::custom)
    }
}

impl PreLieTable {
    pub fn new(dim: usize, t: Vec<Vec<Vec<Rat>>>) -> Result<Self, PrelieError> {
        if dim == 0 {
            return Err(PrelieError::BadTable {
                detail: "dimension must be positive".into(),
            });
        }
        check_cubic(dim, &t, "pre-Lie table")?;
        Ok(PreLieTable { dim, t })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Coefficients of `x_i ⋆ x_j` over the basis.
    pub fn star_coeffs(&self, i: usize, j: usize) -> &[Rat] {
        &self.t[i][j]
    }

    pub fn coeff(&self, i: usize, j: usize, k: usize) -> &Rat {
        &self.t[i][j][k]
    }

    /// `x_i ⋆ v` for a coefficient vector `v`.
    pub fn star_gen_vec(&self, i: usize, v: &[Rat]) -> Vec<Rat> {
        let mut out = vec![Rat::zero(); self.dim];
        for (m, vm) in v.iter().enumerate() {
            if vm.is_zero() {
                continue;
            }
            for k in 0..self.dim {
                out[k] += &(vm * &self.t[i][m][k]);
            }
        }
        out
    }

    /// `v ⋆ x_j` for a coefficient vector `v`.
    pub fn star_vec_gen(&self, v: &[Rat], j: usize) -> Vec<Rat> {
        let mut out = vec![Rat::zero(); self.dim];
        for (l, vl) in v.iter().enumerate() {
            if vl.is_zero() {
                continue;
            }
            for k in 0..self.dim {
                out[k] += &(vl * &self.t[l][j][k]);
            }
        }
        out
    }

    /// Antisymmetrizes the table into structure constants, validating the
    /// Jacobi identity from scratch (never assuming the table is pre-Lie).
    pub fn induced_consts(&self) -> Result<StructConsts, PrelieError> {
        let mut c = zero_cubic(self.dim);
        for i in 0..self.dim {
            for j in 0..self.dim {
                for k in 0..self.dim {
                    c[i][j][k] = &self.t[i][j][k] - &self.t[j][i][k];
                }
            }
        }
        StructConsts::new(self.dim, c)
    }

    /// The zero product (pre-Lie over an abelian algebra).
    pub fn zero(dim: usize) -> Self {
        PreLieTable::new(dim, zero_cubic(dim)).expect("zero table is valid")
    }

    /// The pre-Lie product on the basis `(x, y)` of [`StructConsts::aff1`]:
    /// `y ⋆ x = −x`, all other basis products zero.
    pub fn aff1() -> Self {
        let mut t = zero_cubic(2);
        t[1][0][0] = -Rat::one();
        PreLieTable::new(2, t).expect("aff(1) table is valid")
    }
}

/// One failing instance of the left-symmetry axiom.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DefectEntry {
    pub i: usize,
    pub j: usize,
    pub k: usize,
    /// Coefficients of
    /// `(x_i⋆x_j)⋆x_k − x_i⋆(x_j⋆x_k) − (x_j⋆x_i)⋆x_k + x_j⋆(x_i⋆x_k)`.
    pub defect: Vec<Rat>,
}

/// Brute-forces the left-symmetry axiom over all basis triples; the result
/// is empty exactly when `t` is a pre-Lie product.
pub fn prelie_defect(t: &PreLieTable) -> Vec<DefectEntry> {
    let dim = t.dim();
    let mut out = Vec::new();
    for i in 0..dim {
        for j in 0..dim {
            for k in 0..dim {
                let lhs1 = t.star_vec_gen(t.star_coeffs(i, j), k);
                let lhs2 = t.star_gen_vec(i, t.star_coeffs(j, k));
                let rhs1 = t.star_vec_gen(t.star_coeffs(j, i), k);
                let rhs2 = t.star_gen_vec(j, t.star_coeffs(i, k));
                let defect: Vec<Rat> = (0..dim)
                    .map(|l| &(&lhs1[l] - &lhs2[l]) - &(&rhs1[l] - &rhs2[l]))
                    .collect();
                if defect.iter().any(|r| !r.is_zero()) {
                    out.push(DefectEntry { i, j, k, defect });
                }
            }
        }
    }
    out
}

/// True iff `t[i][j][k] − t[j][i][k] = c[i][j][k]` for all indices, i.e. the
/// table's antisymmetrization is exactly the given bracket.
pub fn induced_bracket_check(t: &PreLieTable, c: &StructConsts) -> Result<bool, PrelieError> {
    if t.dim() != c.dim() {
        return Err(PrelieError::DimMismatch {
            left: t.dim(),
            right: c.dim(),
        });
    }
    let dim = t.dim();
    for i in 0..dim {
        for j in 0..dim {
            for k in 0..dim {
                if &(t.coeff(i, j, k) - t.coeff(j, i, k)) != c.coeff(i, j, k) {
                    return Ok(false);
                }
            }
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn aff1_table_is_prelie() {
        assert!(prelie_defect(&PreLieTable::aff1()).is_empty());
    }

    #[test]
    fn associative_tables_are_prelie() {
        // y ⋆ y = y on a 2-dimensional space, all other products zero:
        // associative, hence pre-Lie (both axiom sides vanish identically).
        let mut t = zero_cubic(2);
        t[1][1][1] = Rat::one();
        let t = PreLieTable::new(2, t).unwrap();
        for i in 0..2 {
            for j in 0..2 {
                for k in 0..2 {
                    let lhs = t.star_vec_gen(t.star_coeffs(i, j), k);
                    let rhs = t.star_gen_vec(i, t.star_coeffs(j, k));
                    assert_eq!(lhs, rhs, "associativity at ({i},{j},{k})");
                }
            }
        }
        assert!(prelie_defect(&t).is_empty());
    }

    #[test]
    fn a_non_prelie_table_has_nonzero_defect() {
        // x ⋆ x = y, x ⋆ y = x: the defect at (x, y, x) is
        // (x⋆y)⋆x + y⋆(x⋆x) = x⋆x + y⋆y = y ≠ 0.
        let mut t = zero_cubic(2);
        t[0][0][1] = Rat::one();
        t[0][1][0] = Rat::one();
        let t = PreLieTable::new(2, t).unwrap();
        let defects = prelie_defect(&t);
        assert!(!defects.is_empty());
        assert!(defects
            .iter()
            .any(|d| (d.i, d.j, d.k) == (0, 1, 0)
                && d.defect == vec![Rat::zero(), Rat::one()]));
        // a sign flip on the aff(1) entry stays pre-Lie (the family
        // y ⋆ x = αx satisfies the axiom for every α) but its bracket no
        // longer matches aff(1)'s
        let mut flipped = zero_cubic(2);
        flipped[1][0][0] = Rat::one();
        let flipped = PreLieTable::new(2, flipped).unwrap();
        assert!(prelie_defect(&flipped).is_empty());
        assert!(!induced_bracket_check(&flipped, &StructConsts::aff1()).unwrap());
    }

    #[test]
    fn bracket_check_examples() {
        assert!(induced_bracket_check(&PreLieTable::aff1(), &StructConsts::aff1()).unwrap());
        assert!(induced_bracket_check(&PreLieTable::zero(2), &StructConsts::abelian(2)).unwrap());
        assert!(!induced_bracket_check(&PreLieTable::zero(3), &StructConsts::sl2()).unwrap());
        assert!(induced_bracket_check(&PreLieTable::zero(2), &StructConsts::sl2()).is_err());
    }

    #[test]
    fn struct_consts_validation() {
        // antisymmetry violation
        let mut c = zero_cubic(2);
        c[0][1][0] = Rat::one(); // missing the mirrored −1
        assert!(StructConsts::new(2, c).is_err());

        // Jacobi violation: [x,y] = z, [y,z] = x, [z,x] = x
        let mut c = zero_cubic(3);
        c[0][1][2] = Rat::one();
        c[1][0][2] = -Rat::one();
        c[1][2][0] = Rat::one();
        c[2][1][0] = -Rat::one();
        c[2][0][0] = Rat::one();
        c[0][2][0] = -Rat::one();
        let err = StructConsts::new(3, c).unwrap_err();
        assert!(err.to_string().contains("Jacobi"));

        // sl2 passes
        let sl2 = StructConsts::sl2();
        assert_eq!(sl2.bracket_coeffs(1, 0), &[Rat::from_int(2), Rat::zero(), Rat::zero()]);
    }

    #[test]
    fn defect_empty_implies_jacobi_rederived() {
        // The induced bracket of a pre-Lie table passes the independent
        // Jacobi validation in StructConsts::new.
        let t = PreLieTable::aff1();
        assert!(prelie_defect(&t).is_empty());
        let c = t.induced_consts().unwrap();
        assert_eq!(c, StructConsts::aff1());
    }

    #[test]
    fn serde_round_trips_as_cubic_string_arrays() {
        let c = StructConsts::sl2();
        let json = serde_json::to_string(&c).unwrap();
        assert!(json.contains("\"2\""), "rationals serialize as strings: {json}");
        let back: StructConsts = serde_json::from_str(&json).unwrap();
        assert_eq!(back, c);

        let t = PreLieTable::aff1();
        let json = serde_json::to_string(&t).unwrap();
        let back: PreLieTable = serde_json::from_str(&json).unwrap();
        assert_eq!(back, t);

        // deserialization re-validates
        let bad = r#"{"dim":2,"c":[[["1","0"],["0","0"]],[["0","0"],["0","0"]]]}"#;
        assert!(serde_json::from_str::<StructConsts>(bad).is_err());
    }
}
