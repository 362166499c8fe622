//! Obstruction verdicts for pointed modules.
//!
//! The central object is the evaluation map of a pointed module: fixing a
//! point `m`, every algebra element `x` is sent to `x·m`. A pointed module is
//! *very good* when that map is bijective, and *good* when it is surjective;
//! a simple algebra admits a compatible prelie product exactly when some
//! pointed module is very good. This module assembles the evaluation map as
//! an exact polynomial matrix (one variable per module coordinate), renders
//! obstruction verdicts — "no choice of point makes the map surjective onto
//! this module" — and carries two certificate flavours:
//!
//! * probabilistic rank certificates by prime-field specialization
//!   ([`pit_rank_certify`]), optionally backed by an exact symbolic
//!   determinant, and
//! * exact kernel identities: a nonzero algebra element annihilating the
//!   symbolic point, which certifies degeneracy at every specialization.
//!
//! The odd orthogonal families get a deterministic witness of the second
//! kind ([`so_odd_witness`]), and every adjoint module degenerates for the
//! trivial reason that the point brackets to zero with itself
//! ([`adjoint_not_very_good`]).

use serde::Serialize;
use thiserror::Error;

use crate::catalog::LieFamily;
use crate::exactmath::{ArithError, PolyQ, Rat};
use crate::repbuild::{
    basis_so_odd, in_so_odd, LieBasis, ModulePoint, PointedModuleSpec, RepError,
};
use crate::symlinalg::{pit_rank_certify, sym_det, LinAlgError, Mat, RankCertificate};

/// Errors from obstruction analysis.
#[derive(Debug, Error)]
pub enum VeryGoodError {
    /// A parameter is outside the operation's domain.
    #[error("bad input: {detail}")]
    BadInput { detail: String },

    /// The skew block `B` of the odd orthogonal witness is not
    /// skew-symmetric.
    #[error("the block B must be skew-symmetric")]
    BNotSkew,

    /// The skew block `B` of the odd orthogonal witness is zero; the witness
    /// matrix would be zero, which certifies nothing.
    #[error("the block B must be nonzero; a zero block yields the zero matrix, not a kernel witness")]
    BZero,

    /// A mathematically provable identity failed to hold, indicating a bug
    /// in this crate rather than bad input.
    #[error("internal inconsistency: {detail}")]
    InternalInconsistency { detail: String },

    /// Module or basis construction failed.
    #[error(transparent)]
    Rep(#[from] RepError),

    /// Exact linear algebra failed (including refuted-claim propagation for
    /// callers that use the raw certificate path).
    #[error(transparent)]
    LinAlg(#[from] LinAlgError),

    /// Scalar arithmetic failed.
    #[error(transparent)]
    Arith(#[from] ArithError),
}

/// Outcome of an obstruction analysis.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    /// No choice of point makes the evaluation map surjective onto this
    /// module: its generic rank is certified below the module dimension.
    Obstructed,
    /// A specialization exceeded the claimed rank bound, so the module is
    /// not obstructed (a generic point evaluates surjectively).
    NotObstructed,
    /// Bijectivity was demanded but the module dimension differs from the
    /// algebra dimension, so no evaluation map can be bijective.
    DimensionMismatch,
}

/// One piece of evidence inside an [`ObstructionReport`].
#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Certificate {
    /// Probabilistic certificate that the generic rank stays within the
    /// claim, from repeated prime-field specialization.
    Rank(RankCertificate),
    /// A specialization that exceeded the claimed rank, refuting it.
    RefutedRank {
        claimed_max_rank: usize,
        observed_rank: usize,
        trial: u32,
        point: Vec<u64>,
    },
    /// Exact symbolic determinant of a square evaluation map: `is_zero`
    /// records whether it is the zero polynomial.
    SymbolicDet { is_zero: bool },
    /// An exact polynomial identity exhibiting a nonzero annihilator of the
    /// symbolic point, certifying degeneracy at every specialization.
    KernelIdentity { description: String },
}

/// Verdict plus supporting evidence for one pointed module.
///
/// Invariant: an [`Verdict::Obstructed`] verdict requires
/// `claimed_max_rank < rows` (the map cannot be surjective onto the module)
/// together with at least one upholding certificate; [`Self::validate`]
/// checks this.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ObstructionReport {
    pub algebra: LieFamily,
    pub module_description: String,
    /// `(rows, cols)` of the evaluation map: module dimension by algebra
    /// dimension.
    pub map_shape: (usize, usize),
    pub claimed_max_rank: usize,
    pub certificates: Vec<Certificate>,
    pub verdict: Verdict,
}

impl ObstructionReport {
    /// Checks the report invariant: `Obstructed` demands a claim strictly
    /// below the row count and a certificate that actually upholds it (a
    /// rank certificate whose every observed rank respects the claim, a zero
    /// symbolic determinant of a square map, or an exact kernel identity).
    pub fn validate(&self) -> Result<(), VeryGoodError> {
        if self.verdict != Verdict::Obstructed {
            return Ok(());
        }
        let (rows, cols) = self.map_shape;
        if self.claimed_max_rank >= rows {
            return Err(VeryGoodError::InternalInconsistency {
                detail: format!(
                    "obstructed verdict with claimed rank {} not below row count {rows}",
                    self.claimed_max_rank
                ),
            });
        }
        let upheld = self.certificates.iter().any(|c| match c {
            Certificate::Rank(rc) => {
                rc.claimed_max_rank == self.claimed_max_rank
                    && rc.trials > 0
                    && rc.observed_ranks.len() == rc.trials as usize
                    && rc.observed_ranks.iter().all(|&r| r <= rc.claimed_max_rank)
            }
            Certificate::SymbolicDet { is_zero } => *is_zero && rows == cols,
            Certificate::KernelIdentity { .. } => true,
            Certificate::RefutedRank { .. } => false,
        });
        if upheld {
            Ok(())
        } else {
            Err(VeryGoodError::InternalInconsistency {
                detail: "obstructed verdict without an upholding certificate".into(),
            })
        }
    }
}

/// The evaluation map of a pointed module as an exact polynomial matrix:
/// column `j` is `actions[j]·point`, so the matrix is
/// `module_dim × dim(algebra)` with entries homogeneous of degree ≤ 1 in the
/// point coordinates. A rational point yields a constant matrix; the fully
/// symbolic point yields the generic map whose rank bounds hold at every
/// specialization.
pub fn upsilon_matrix(spec: &PointedModuleSpec) -> Result<Mat<PolyQ>, VeryGoodError> {
    let point = spec.point().as_poly_vec();
    let rows = spec.module_dim();
    let arity = spec.module_dim();
    let cols: Vec<Vec<PolyQ>> = spec
        .actions()
        .iter()
        .map(|a| {
            let mut col = vec![PolyQ::zero(arity); rows];
            for r in 0..rows {
                for (c, p) in point.iter().enumerate() {
                    let coeff = a.at(r, c);
                    if !coeff.is_zero() {
                        col[r] = col[r].add(&p.scale(coeff))?;
                    }
                }
            }
            Ok::<_, ArithError>(col)
        })
        .collect::<Result<_, _>>()?;
    Ok(Mat::from_fn(rows, cols.len(), |r, j| cols[j][r].clone()))
}

/// Renders an obstruction verdict for one pointed module.
///
/// When `demand_bijective` is set and the module dimension differs from the
/// algebra dimension the verdict is [`Verdict::DimensionMismatch`] with no
/// certificates. Otherwise the claim is `module_dim − 1` — surjectivity onto
/// the module is impossible exactly when the generic rank stays below the
/// row count — certified by [`pit_rank_certify`] over `F_prime` with the
/// given `trials` and `seed`. A refuted claim becomes
/// [`Verdict::NotObstructed`] carrying the witness specialization.
///
/// With `symbolic_det` set and a square map, the exact determinant is also
/// computed: a zero determinant joins the report as a deterministic
/// certificate, and a nonzero one overrides the probabilistic path (the
/// exact computation outranks it) with a [`Verdict::NotObstructed`]. The
/// determinant is skipped when the probabilistic path already refuted the
/// claim, since the witness specialization is stronger evidence than a
/// nonzero polynomial.
pub fn obstruction_verdict(
    spec: &PointedModuleSpec,
    demand_bijective: bool,
    trials: u32,
    prime: u64,
    seed: u64,
    symbolic_det: bool,
) -> Result<ObstructionReport, VeryGoodError> {
    let rows = spec.module_dim();
    let cols = spec.actions().len();
    let claim = rows - 1;
    if demand_bijective && rows != cols {
        return Ok(ObstructionReport {
            algebra: *spec.algebra(),
            module_description: spec.description().to_string(),
            map_shape: (rows, cols),
            claimed_max_rank: claim,
            certificates: Vec::new(),
            verdict: Verdict::DimensionMismatch,
        });
    }

    let upsilon = upsilon_matrix(spec)?;
    let mut certificates = Vec::new();
    let verdict = match pit_rank_certify(&upsilon, claim, trials, prime, seed) {
        Ok(cert) => {
            certificates.push(Certificate::Rank(cert));
            if symbolic_det && rows == cols {
                let is_zero = sym_det(&upsilon)?.is_zero();
                certificates.push(Certificate::SymbolicDet { is_zero });
                if is_zero {
                    Verdict::Obstructed
                } else {
                    Verdict::NotObstructed
                }
            } else {
                Verdict::Obstructed
            }
        }
        Err(LinAlgError::ClaimRefuted {
            claimed_max_rank,
            observed_rank,
            trial,
            point,
        }) => {
            certificates.push(Certificate::RefutedRank {
                claimed_max_rank,
                observed_rank,
                trial,
                point,
            });
            Verdict::NotObstructed
        }
        Err(e) => return Err(e.into()),
    };

    let report = ObstructionReport {
        algebra: *spec.algebra(),
        module_description: spec.description().to_string(),
        map_shape: (rows, cols),
        claimed_max_rank: claim,
        certificates,
        verdict,
    };
    report.validate()?;
    Ok(report)
}

/// An `n×n` matrix of `n²` distinct polynomial variables, row-major: the
/// generic square matrix used as the symbolic `Y′` block of the odd
/// orthogonal witness.
pub fn symbolic_square(n: usize) -> Mat<PolyQ> {
    Mat::from_fn(n, n, |r, c| PolyQ::var(n * n, r * n + c))
}

/// The odd orthogonal kernel witness.
///
/// For the algebra of `(2n+1)×(2n+1)` matrices in the block convention of
/// [`in_so_odd`], acting on `n` stacked copies of the standard module, every
/// point can be moved into the normal form `m′ = (I_n; Y′; z′)` (identity
/// block, arbitrary square block, arbitrary last row). Given any nonzero
/// skew-symmetric rational `B`, the block matrix
///
/// ```text
/// A = ( −B·Y′        B        0 )
///     ( ᵗY′·B·Y′   −ᵗY′·B     0 )
///     (    0          0       0 )
/// ```
///
/// lies in the algebra for *every* `Y′` and annihilates `m′` identically —
/// so the evaluation map at any such point has nontrivial kernel and is
/// never bijective. Returns `A` (over a polynomial ring extended by `n`
/// fresh variables for the symbolic last row `z′`, which the identity never
/// constrains) together with whether `A·m′` vanished identically.
///
/// The orbit reduction to the normal form is adopted as the starting point,
/// not replayed; reports built from this witness say so.
pub fn so_odd_witness(
    n: usize,
    y_prime: &Mat<PolyQ>,
    b: &Mat<Rat>,
) -> Result<(Mat<PolyQ>, bool), VeryGoodError> {
    if n < 2 {
        return Err(VeryGoodError::BadInput {
            detail: format!("the odd orthogonal witness needs block size n >= 2, got {n}"),
        });
    }
    if y_prime.rows() != n || y_prime.cols() != n {
        return Err(VeryGoodError::BadInput {
            detail: format!(
                "Y' must be {n}x{n}, got {}x{}",
                y_prime.rows(),
                y_prime.cols()
            ),
        });
    }
    if b.rows() != n || b.cols() != n {
        return Err(VeryGoodError::BadInput {
            detail: format!("B must be {n}x{n}, got {}x{}", b.rows(), b.cols()),
        });
    }
    if !b.transpose().add(b)?.is_zero() {
        return Err(VeryGoodError::BNotSkew);
    }
    if b.is_zero() {
        return Err(VeryGoodError::BZero);
    }

    // One shared polynomial ring: Y′'s variables first, then n fresh
    // variables for the symbolic last row z′.
    let y_arity = y_prime.entries().iter().map(PolyQ::arity).max().unwrap_or(0);
    let arity = y_arity + n;
    let y = y_prime.try_map(|e| e.pad_arity(arity))?;
    let b_poly = b.map(|c| PolyQ::constant(arity, c.clone()));

    let by = b_poly.mul(&y)?;
    let ytb = y.transpose().mul(&b_poly)?;
    let ytby = ytb.mul(&y)?;
    let size = 2 * n + 1;
    let zero = PolyQ::zero(arity);
    let a = Mat::from_fn(size, size, |r, c| {
        if r < n && c < n {
            by.at(r, c).neg()
        } else if r < n && c < 2 * n {
            b_poly.at(r, c - n).clone()
        } else if r < 2 * n && c < n {
            ytby.at(r - n, c).clone()
        } else if r < 2 * n && c < 2 * n {
            ytb.at(r - n, c - n).neg()
        } else {
            zero.clone()
        }
    });

    if !in_so_odd(&a)? {
        return Err(VeryGoodError::InternalInconsistency {
            detail: "the witness block matrix left the odd orthogonal algebra".into(),
        });
    }

    let m_prime = Mat::from_fn(size, n, |r, c| {
        if r < n {
            if r == c {
                PolyQ::constant(arity, Rat::one())
            } else {
                zero.clone()
            }
        } else if r < 2 * n {
            y.at(r - n, c).clone()
        } else {
            PolyQ::var(arity, y_arity + c)
        }
    });
    let is_zero_on_point = a.mul(&m_prime)?.is_zero();
    Ok((a, is_zero_on_point))
}

/// Obstruction report for the odd orthogonal algebra of `(2n+1)×(2n+1)`
/// matrices acting on `n` stacked copies of its standard module — the square
/// case where the module dimension `n(2n+1)` equals the algebra dimension,
/// so bijectivity is dimensionally possible and must be excluded by the
/// exact kernel witness instead of a probabilistic certificate.
pub fn so_odd_obstruction_report(n: u32) -> Result<ObstructionReport, VeryGoodError> {
    let basis = basis_so_odd(n)?;
    let n = n as usize;
    // n stacked copies of the (2n+1)-dimensional standard module; the
    // certificate below is the kernel identity, which never touches the
    // action matrices, so the module itself is not materialized here.
    let module_dim = (2 * n + 1) * n;
    if module_dim != basis.dim() {
        return Err(VeryGoodError::InternalInconsistency {
            detail: format!(
                "expected a square evaluation map, got {module_dim} by {}",
                basis.dim()
            ),
        });
    }

    // Fixed nonzero skew block: +1 at (0,1), −1 at (1,0).
    let mut b = Mat::zeros(n, n, &Rat::zero());
    b.set(0, 1, Rat::one());
    b.set(1, 0, -Rat::one());
    let (_, is_zero) = so_odd_witness(n, &symbolic_square(n), &b)?;
    if !is_zero {
        return Err(VeryGoodError::InternalInconsistency {
            detail: "the odd orthogonal kernel identity failed to vanish".into(),
        });
    }

    let report = ObstructionReport {
        algebra: *basis.family(),
        module_description: format!(
            "{n} stacked copies of the standard module, analyzed at the normal-form point \
             (I; Y'; z') with symbolic Y' and z'; the orbit reduction moving an arbitrary \
             point into this form is adopted, not replayed",
        ),
        map_shape: (module_dim, module_dim),
        claimed_max_rank: module_dim - 1,
        certificates: vec![Certificate::KernelIdentity {
            description: format!(
                "a nonzero algebra element A(Y'), built from a fixed skew block, satisfies \
                 A·(I; Y'; z') = 0 identically in the {} entries of Y' and the {n} entries \
                 of z', so the evaluation map at every normal-form point has nontrivial \
                 kernel and is never bijective",
                n * n
            ),
        }],
        verdict: Verdict::Obstructed,
    };
    report.validate()?;
    Ok(report)
}

/// The adjoint pointed module of a basis: the algebra acting on itself by
/// bracket, with the fully symbolic point. Action `i` sends basis vector `j`
/// to the bracket `[x_i, x_j]` expanded through the structure constants; the
/// representation identity this must satisfy is re-checked on construction
/// (it is exactly the Jacobi identity).
pub fn adjoint_module(basis: &LieBasis) -> Result<PointedModuleSpec, VeryGoodError> {
    let consts = basis.consts();
    let d = consts.dim();
    let actions: Vec<Mat<Rat>> = (0..d)
        .map(|i| Mat::from_fn(d, d, |k, j| consts.coeff(i, j, k).clone()))
        .collect();
    Ok(PointedModuleSpec::new(
        *basis.family(),
        consts,
        actions,
        ModulePoint::symbolic(d),
        format!(
            "adjoint module of {}: the algebra acting on itself by bracket, symbolic point",
            basis.family()
        ),
    )?)
}

/// Certifies that the adjoint module is never very good: the symbolic point
/// `m` satisfies `Υ(m)·m = [m, m] = 0` identically, a nonzero kernel vector
/// at every specialization, so the square evaluation map has determinant
/// zero as a polynomial. Returns `true` when the identity holds (failure
/// would indicate a transcription bug, not a mathematical possibility).
pub fn adjoint_not_very_good(basis: &LieBasis) -> Result<bool, VeryGoodError> {
    let spec = adjoint_module(basis)?;
    let upsilon = upsilon_matrix(&spec)?;
    let point = spec.point().as_poly_vec();
    let image = upsilon.mul_vec(&point)?;
    Ok(image.iter().all(PolyQ::is_zero))
}

/// Obstruction report for an adjoint module, certified by the exact kernel
/// identity rather than a probabilistic rank bound.
pub fn adjoint_obstruction_report(basis: &LieBasis) -> Result<ObstructionReport, VeryGoodError> {
    if !adjoint_not_very_good(basis)? {
        return Err(VeryGoodError::InternalInconsistency {
            detail: "the adjoint kernel identity failed to vanish".into(),
        });
    }
    let d = basis.dim();
    let report = ObstructionReport {
        algebra: *basis.family(),
        module_description: format!(
            "adjoint module of {}: the algebra acting on itself by bracket, symbolic point",
            basis.family()
        ),
        map_shape: (d, d),
        claimed_max_rank: d - 1,
        certificates: vec![Certificate::KernelIdentity {
            description: "the symbolic point m satisfies Υ(m)·m = [m, m] = 0 identically, \
                          so m itself is a nonzero kernel vector of the evaluation map at \
                          every specialization and the determinant is the zero polynomial"
                .into(),
        }],
        verdict: Verdict::Obstructed,
    };
    report.validate()?;
    Ok(report)
}
