//! Probabilistic rank certification by Schwartz–Zippel specialization.

use rand_chacha::rand_core::{RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use super::{bareiss_rank, LinAlgError, Mat};
use crate::exactmath::{fp_reduce, FpScalar, PolyQ, Rat};

/// Certificate that a polynomial matrix has generic rank at most
/// `claimed_max_rank`, supported by `trials` independent random
/// specializations over `F_prime`.
///
/// Semantics: "generic rank ≤ r" means every (r+1)-minor is the zero
/// polynomial; the claim over `Q` transfers verbatim to any extension field.
/// If the claim were false, a random specialization would exceed `r` except
/// with probability at most `totalDegreeBound/prime` per trial
/// (Schwartz–Zippel, for entries of degree ≤ 1 where an (r+1)-minor has
/// total degree ≤ r+1). `error_bound_log2` is a conservative exact bound:
/// `trials * (ceil(log2(claimed_max_rank + 1)) - floor(log2(prime)))`.
///
/// For matrices with entries of degree > 1 the stated per-trial bound is
/// optimistic by the entry-degree factor; callers with such matrices should
/// scale `trials` accordingly. Every Υ matrix in this crate has entries of
/// degree ≤ 1.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RankCertificate {
    pub claimed_max_rank: usize,
    pub trials: u32,
    pub prime: u64,
    /// Observed rank per trial, in trial order; all ≤ `claimed_max_rank`.
    pub observed_ranks: Vec<usize>,
    /// Exact upper bound on log2 of the probability that a false claim
    /// survives all trials.
    pub error_bound_log2: Rat,
    pub seed: u64,
}

/// Per-trial random stream, derived deterministically from `(seed, trial)`.
fn trial_rng(seed: u64, trial: u32) -> ChaCha8Rng {
    let mut key = [0u8; 32];
    key[..8].copy_from_slice(&seed.to_le_bytes());
    key[8..12].copy_from_slice(&trial.to_le_bytes());
    key[12..24].copy_from_slice(b"rank-certify");
    ChaCha8Rng::from_seed(key)
}

/// Uniform draw from `[0, p)` by rejection, so the distribution is exact and
/// independent of any library's range-sampling details.
fn uniform_mod(rng: &mut ChaCha8Rng, p: u64) -> u64 {
    let bound = u64::MAX - u64::MAX % p;
    loop {
        let v = rng.next_u64();
        if v < bound {
            return v % p;
        }
    }
}

fn floor_log2(n: u64) -> i64 {
    (63 - n.leading_zeros()) as i64
}

fn ceil_log2(n: u64) -> i64 {
    if n <= 1 {
        0
    } else {
        floor_log2(n - 1) + 1
    }
}

/// Certifies `rank(m) ≤ claimed_max_rank` by `trials` random specializations
/// of the matrix over `F_prime`, with per-trial streams derived from
/// `(seed, trial index)`.
///
/// All variables of the entries are specialized uniformly and independently
/// per trial; each specialized rank is computed exactly over `F_prime`.
/// Returns the certificate when every observed rank is within the claim;
/// returns [`LinAlgError::ClaimRefuted`] with the witness specialization
/// otherwise, and [`LinAlgError::BadPrime`] when a coefficient denominator
/// vanishes mod `prime`. Deterministic given `(seed, prime, trials)`.
pub fn pit_rank_certify(
    m: &Mat<PolyQ>,
    claimed_max_rank: usize,
    trials: u32,
    prime: u64,
    seed: u64,
) -> Result<RankCertificate, LinAlgError> {
    let arity = m.entries().iter().map(PolyQ::arity).max().unwrap_or(0);
    if let Some(bad) = m.entries().iter().find(|e| e.arity() != arity) {
        return Err(LinAlgError::ShapeMismatch {
            detail: format!(
                "entries must share one variable set: found arities {} and {}",
                bad.arity(),
                arity
            ),
        });
    }
    let reduced = m
        .try_map(|e| fp_reduce(e, prime))
        .map_err(LinAlgError::BadPrime)?;

    let mut observed_ranks = Vec::with_capacity(trials as usize);
    for trial in 0..trials {
        let mut rng = trial_rng(seed, trial);
        let point_raw: Vec<u64> = (0..arity).map(|_| uniform_mod(&mut rng, prime)).collect();
        let point: Vec<FpScalar> = point_raw
            .iter()
            .map(|&v| FpScalar::new(v, prime))
            .collect();
        let specialized: Mat<FpScalar> = reduced
            .try_map(|e| e.eval(&point))
            .map_err(LinAlgError::Arith)?;
        let rank = bareiss_rank(&specialized)?.rank;
        if rank > claimed_max_rank {
            return Err(LinAlgError::ClaimRefuted {
                claimed_max_rank,
                observed_rank: rank,
                trial,
                point: point_raw,
            });
        }
        observed_ranks.push(rank);
    }

    let total_degree_bound = claimed_max_rank as u64 + 1;
    let per_trial = ceil_log2(total_degree_bound) - floor_log2(prime);
    let error_bound_log2 = Rat::from_int(trials as i64 * per_trial);

    Ok(RankCertificate {
        claimed_max_rank,
        trials,
        prime,
        observed_ranks,
        error_bound_log2,
        seed,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmath::PRIMES;

    fn diag_x(n: usize) -> Mat<PolyQ> {
        // diag(x1, x1, ..., x1): generic rank n, every specialization with
        // x1 != 0 has rank n.
        let x1 = PolyQ::var(1, 0);
        Mat::from_fn(n, n, |r, c| {
            if r == c {
                x1.clone()
            } else {
                PolyQ::zero(1)
            }
        })
    }

    #[test]
    fn refutes_an_undersized_claim() {
        let m = diag_x(3);
        let err = pit_rank_certify(&m, 2, 8, PRIMES[0], 7).unwrap_err();
        match err {
            LinAlgError::ClaimRefuted {
                claimed_max_rank,
                observed_rank,
                trial,
                point,
            } => {
                assert_eq!(claimed_max_rank, 2);
                assert_eq!(observed_rank, 3);
                assert_eq!(trial, 0);
                assert_eq!(point.len(), 1);
                assert_ne!(point[0], 0);
            }
            other => panic!("expected ClaimRefuted, got {other:?}"),
        }
    }

    #[test]
    fn certifies_a_true_claim_deterministically() {
        // rank of [[x1, x2], [2*x1, 2*x2]] is 1 everywhere
        let x1 = PolyQ::var(2, 0);
        let x2 = PolyQ::var(2, 1);
        let two = Rat::from_int(2);
        let m = Mat::from_rows(vec![
            vec![x1.clone(), x2.clone()],
            vec![x1.scale(&two), x2.scale(&two)],
        ])
        .unwrap();
        let a = pit_rank_certify(&m, 1, 12, PRIMES[3], 99).unwrap();
        let b = pit_rank_certify(&m, 1, 12, PRIMES[3], 99).unwrap();
        assert_eq!(a, b);
        assert_eq!(a.observed_ranks.len(), 12);
        assert!(a.observed_ranks.iter().all(|&r| r <= 1));
        // log2 bound: 12 * (ceil(log2 2) - floor(log2 M61)) = 12 * (1 - 60)
        assert_eq!(a.error_bound_log2, Rat::from_int(12 * (1 - 60)));
    }

    #[test]
    fn different_seeds_draw_different_points() {
        let mut r1 = trial_rng(1, 0);
        let mut r2 = trial_rng(2, 0);
        let mut r1b = trial_rng(1, 0);
        let a = uniform_mod(&mut r1, PRIMES[3]);
        let b = uniform_mod(&mut r2, PRIMES[3]);
        let a2 = uniform_mod(&mut r1b, PRIMES[3]);
        assert_eq!(a, a2);
        assert_ne!(a, b); // astronomically unlikely to collide
    }

    #[test]
    fn bad_prime_reported() {
        let p = PRIMES[0];
        let coeff = Rat::checked_new(1.into(), (p as i64).into()).unwrap();
        let m = Mat::new(1, 1, vec![PolyQ::from_rat(1, coeff)]).unwrap();
        assert!(matches!(
            pit_rank_certify(&m, 0, 2, p, 0),
            Err(LinAlgError::BadPrime(_))
        ));
    }

    #[test]
    fn log2_helpers() {
        assert_eq!(floor_log2(1), 0);
        assert_eq!(floor_log2(2), 1);
        assert_eq!(floor_log2(3), 1);
        assert_eq!(ceil_log2(1), 0);
        assert_eq!(ceil_log2(2), 1);
        assert_eq!(ceil_log2(20), 5);
        assert_eq!(floor_log2(PRIMES[3]), 60); // 2^61 - 1
    }
}
