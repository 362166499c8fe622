//! Explicit matrix realizations of the Lie algebras the verification needs —
//! special linear, odd orthogonal, and the 14-dimensional exceptional one —
//! together with the module constructions built on them: validated bases
//! with extracted structure constants, exterior-cube actions, matrix-space
//! modules, and pointed-module specifications.

mod bases;
mod wedge;

pub use bases::{basis_g2, basis_sl, basis_so_odd, in_so_odd};
pub use wedge::{lex_3_subsets, wedge3_action_sl6};

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::catalog::{CatalogError, LieFamily};
use crate::exactmath::{ArithError, PolyQ, Rat};
use crate::prelie::{PrelieError, StructConsts};
use crate::symlinalg::{bareiss_rank, lin_solve_columns, LinAlgError, Mat};

/// Errors from basis construction and module validation.
#[derive(Debug, Error)]
pub enum RepError {
    #[error("bad parameter: {detail}")]
    BadParameter { detail: String },

    #[error("expected {expected} basis elements, got {got}")]
    WrongCount { expected: usize, got: usize },

    #[error("shape mismatch: {detail}")]
    WrongShape { detail: String },

    #[error("basis element {label} is not traceless")]
    NotTraceless { label: String },

    #[error("matrices are not linearly independent: rank {rank} < {expected}")]
    NotIndependent { rank: usize, expected: usize },

    #[error("bracket of basis elements {i} and {j} does not lie in the span")]
    NotClosed { i: usize, j: usize },

    #[error("transcribed generators fail the basis invariants: {detail}")]
    TranscriptionInvalid { detail: String },

    #[error("actions violate the representation identity at pair ({i}, {j})")]
    NotARepresentation { i: usize, j: usize },

    #[error("point length {got} does not match module dimension {expected}")]
    PointLength { expected: usize, got: usize },

    #[error("extracted structure constants are invalid: {0}")]
    Consts(#[from] PrelieError),

    #[error(transparent)]
    Catalog(#[from] CatalogError),

    #[error(transparent)]
    LinAlg(#[from] LinAlgError),

    #[error(transparent)]
    Arith(#[from] ArithError),
}

/// A validated matrix basis of a Lie algebra: the matrices are linearly
/// independent, traceless, exactly as many as the family's dimension, and
/// their span is closed under the commutator — with the structure constants
/// of that closure extracted and themselves validated (antisymmetry and
/// Jacobi).
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(into = "RawLieBasis")]
pub struct LieBasis {
    name: LieFamily,
    matrices: Vec<Mat<Rat>>,
    labels: Vec<String>,
    consts: StructConsts,
}

#[derive(Serialize, Deserialize, Clone)]
struct RawLieBasis {
    name: LieFamily,
    matrices: Vec<Mat<Rat>>,
    labels: Vec<String>,
}

impl From<LieBasis> for RawLieBasis {
    fn from(b: LieBasis) -> Self {
        RawLieBasis {
            name: b.name,
            matrices: b.matrices,
            labels: b.labels,
        }
    }
}

impl TryFrom<RawLieBasis> for LieBasis {
    type Error = RepError;
    fn try_from(raw: RawLieBasis) -> Result<Self, Self::Error> {
        LieBasis::new(raw.name, raw.matrices, raw.labels)
    }
}

impl<'de> Deserialize<'de> for LieBasis {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let raw = RawLieBasis::deserialize(deserializer)?;
        LieBasis::try_from(raw).map_err(serde::de::Error::custom)
    }
}

impl LieBasis {
    /// Validates the full invariant set and extracts structure constants.
    pub fn new(
        name: LieFamily,
        matrices: Vec<Mat<Rat>>,
        labels: Vec<String>,
    ) -> Result<Self, RepError> {
        let name = name.validated()?;
        let expected = name.dim() as usize;
        if matrices.len() != expected {
            return Err(RepError::WrongCount {
                expected,
                got: matrices.len(),
            });
        }
        if labels.len() != expected {
            return Err(RepError::WrongShape {
                detail: format!("{} labels for {} matrices", labels.len(), expected),
            });
        }
        let d = matrices[0].rows();
        for (m, label) in matrices.iter().zip(&labels) {
            if m.rows() != d || m.cols() != d {
                return Err(RepError::WrongShape {
                    detail: format!(
                        "{label} is {}x{}, expected {d}x{d}",
                        m.rows(),
                        m.cols()
                    ),
                });
            }
            if !m.trace()?.is_zero() {
                return Err(RepError::NotTraceless {
                    label: label.clone(),
                });
            }
        }

        // Independence: the flattened matrices stack to full row rank.
        let stack = Mat::from_fn(expected, d * d, |k, e| {
            matrices[k].at(e / d, e % d).clone()
        });
        let rank = bareiss_rank(&stack)?.rank;
        if rank != expected {
            return Err(RepError::NotIndependent { rank, expected });
        }

        // Closure: decompose every commutator over the basis in one
        // elimination pass; the columns of the unknowns are the basis
        // matrices, the right-hand sides all d² commutators.
        let cols = stack.transpose();
        let mut commutators = Vec::with_capacity(expected * expected);
        for xi in &matrices {
            for xj in &matrices {
                commutators.push(xi.commutator(xj)?);
            }
        }
        let rhs = Mat::from_fn(d * d, expected * expected, |e, pair| {
            commutators[pair].at(e / d, e % d).clone()
        });
        let sols = lin_solve_columns(&cols, &rhs)?;
        let mut c = vec![vec![vec![Rat::zero(); expected]; expected]; expected];
        for i in 0..expected {
            for j in 0..expected {
                match &sols[i * expected + j] {
                    Some(sol) => {
                        for k in 0..expected {
                            c[i][j][k] = sol[k].clone();
                        }
                    }
                    None => return Err(RepError::NotClosed { i, j }),
                }
            }
        }
        let consts = StructConsts::new(expected, c)?;

        Ok(LieBasis {
            name,
            matrices,
            labels,
            consts,
        })
    }

    pub fn family(&self) -> &LieFamily {
        &self.name
    }

    pub fn matrices(&self) -> &[Mat<Rat>] {
        &self.matrices
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    /// Structure constants of the basis: `[X_i, X_j] = Σ_k c_{ijk} X_k`.
    pub fn consts(&self) -> &StructConsts {
        &self.consts
    }

    /// Number of basis elements (the Lie algebra dimension).
    pub fn dim(&self) -> usize {
        self.matrices.len()
    }

    /// Side length of the defining matrices.
    pub fn mat_size(&self) -> usize {
        self.matrices[0].rows()
    }
}

/// The distinguished point of a pointed module: an exact rational vector or
/// a fully symbolic one (one polynomial variable per coordinate).
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ModulePoint {
    Rational(Vec<Rat>),
    Symbolic(Vec<PolyQ>),
}

impl ModulePoint {
    /// The canonical fully symbolic point of a `dim`-dimensional module:
    /// coordinate `k` is the variable `x_k` of a `dim`-variable polynomial
    /// ring.
    pub fn symbolic(dim: usize) -> Self {
        ModulePoint::Symbolic((0..dim).map(|k| PolyQ::var(dim, k)).collect())
    }

    pub fn len(&self) -> usize {
        match self {
            ModulePoint::Rational(v) => v.len(),
            ModulePoint::Symbolic(v) => v.len(),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// The point as polynomials; rational coordinates become constants of a
    /// ring with one variable per coordinate, so both variants are directly
    /// comparable.
    pub fn as_poly_vec(&self) -> Vec<PolyQ> {
        match self {
            ModulePoint::Rational(v) => {
                let n = v.len();
                v.iter().map(|c| PolyQ::constant(n, c.clone())).collect()
            }
            ModulePoint::Symbolic(v) => v.clone(),
        }
    }
}

/// A module over a Lie algebra together with a distinguished point: the
/// per-basis-element action matrices, validated to satisfy
/// `action([X_i, X_j]) = action(X_i)·action(X_j) − action(X_j)·action(X_i)`
/// with the bracket resolved through the structure constants.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct PointedModuleSpec {
    algebra: LieFamily,
    module_dim: usize,
    actions: Vec<Mat<Rat>>,
    point: ModulePoint,
    description: String,
}

impl PointedModuleSpec {
    pub fn new(
        algebra: LieFamily,
        consts: &StructConsts,
        actions: Vec<Mat<Rat>>,
        point: ModulePoint,
        description: impl Into<String>,
    ) -> Result<Self, RepError> {
        let g_dim = consts.dim();
        if actions.len() != g_dim {
            return Err(RepError::WrongCount {
                expected: g_dim,
                got: actions.len(),
            });
        }
        let module_dim = actions[0].rows();
        for (k, a) in actions.iter().enumerate() {
            if a.rows() != module_dim || a.cols() != module_dim {
                return Err(RepError::WrongShape {
                    detail: format!(
                        "action {k} is {}x{}, expected {module_dim}x{module_dim}",
                        a.rows(),
                        a.cols()
                    ),
                });
            }
        }
        if point.len() != module_dim {
            return Err(RepError::PointLength {
                expected: module_dim,
                got: point.len(),
            });
        }
        // Representation identity on every unordered pair (antisymmetry
        // makes the swapped pair equivalent and the diagonal trivial).
        for i in 0..g_dim {
            for j in i + 1..g_dim {
                let direct = actions[i].commutator(&actions[j])?;
                let mut via_consts = Mat::zeros(module_dim, module_dim, &Rat::zero());
                for (k, coeff) in consts.bracket_coeffs(i, j).iter().enumerate() {
                    if !coeff.is_zero() {
                        via_consts = via_consts.add(&actions[k].scale(coeff))?;
                    }
                }
                if direct != via_consts {
                    return Err(RepError::NotARepresentation { i, j });
                }
            }
        }
        Ok(PointedModuleSpec {
            algebra,
            module_dim,
            actions,
            point,
            description: description.into(),
        })
    }

    pub fn algebra(&self) -> &LieFamily {
        &self.algebra
    }

    pub fn module_dim(&self) -> usize {
        self.module_dim
    }

    pub fn actions(&self) -> &[Mat<Rat>] {
        &self.actions
    }

    pub fn point(&self) -> &ModulePoint {
        &self.point
    }

    pub fn description(&self) -> &str {
        &self.description
    }

    /// The same module with a different distinguished point. The
    /// representation identity does not depend on the point, so only the
    /// length is re-checked.
    pub fn with_point(&self, point: ModulePoint) -> Result<Self, RepError> {
        if point.len() != self.module_dim {
            return Err(RepError::PointLength {
                expected: self.module_dim,
                got: point.len(),
            });
        }
        let mut out = self.clone();
        out.point = point;
        Ok(out)
    }
}

/// The module of `d × copies` matrices under left multiplication by the
/// basis, flattened column-major (entry `(r, c)` at flat index `c·d + r`),
/// with the fully symbolic point. `copies = 1` is the standard (defining)
/// module.
pub fn matrix_module(basis: &LieBasis, copies: usize) -> Result<PointedModuleSpec, RepError> {
    if copies == 0 {
        return Err(RepError::BadParameter {
            detail: "matrix module needs at least one column".into(),
        });
    }
    let d = basis.mat_size();
    let module_dim = d * copies;
    let actions = basis
        .matrices()
        .iter()
        .map(|x| {
            // Left multiplication acts on each column independently:
            // block-diagonal with `copies` copies of x.
            Mat::from_fn(module_dim, module_dim, |r, c| {
                if r / d == c / d {
                    x.at(r % d, c % d).clone()
                } else {
                    Rat::zero()
                }
            })
        })
        .collect();
    PointedModuleSpec::new(
        basis.family().clone(),
        basis.consts(),
        actions,
        ModulePoint::symbolic(module_dim),
        format!(
            "{d}x{copies} matrices over {} under left multiplication, symbolic point",
            basis.family()
        ),
    )
}
