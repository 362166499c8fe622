//! Simple Lie algebra catalog: Weyl dimension formulas, enumeration of
//! *small* simple modules, and feasibility of module-dimension
//! decompositions.
//!
//! A simple module is *small* for `g` when it is nontrivial, not the adjoint,
//! and of dimension strictly below `dim g`. Any faithful candidate module
//! whose dimension equals `dim g` must decompose into small pieces, so the
//! search space is controlled by [`small_modules`] + [`feasible_decomps`].
//!
//! Dimensions for the classical families come from closed-form Weyl products
//! over the `l`-vector of a highest weight; the exceptional families carry
//! their handful of tabulated rows statically. All arithmetic is exact; a
//! non-integer Weyl product is a bug in the formulas, never rounded away.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::ToPrimitive;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use thiserror::Error;

use crate::exactmath::Rat;

/// A dominant integral highest weight in fundamental-weight coordinates,
/// one entry per node of the Dynkin diagram.
pub type Weight = Vec<u32>;

/// Errors from the catalog layer.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CatalogError {
    #[error("bad family parameter: {detail}")]
    BadFamilyParameter { detail: String },

    #[error("weight length {got} does not match rank {expected}")]
    WeightLengthMismatch { expected: usize, got: usize },

    #[error("Weyl product for {family} at {weight:?} is not a positive integer: {value}; dimension formula transcription bug")]
    NonIntegerDimension {
        family: String,
        weight: Weight,
        value: String,
    },

    #[error("dimension of {family} at {weight:?} is {value}, which exceeds the u64 range; use dim_irrep_big")]
    DimensionOverflow {
        family: String,
        weight: Weight,
        value: String,
    },

    #[error("{family} carries only tabulated weights; {weight:?} is not among them")]
    UnsupportedWeight { family: String, weight: Weight },

    #[error("bad dimension list: {detail}")]
    BadDims { detail: String },

    #[error("internal consistency check failed: {detail}")]
    InternalCheckFailed { detail: String },
}

/// The simple complex Lie algebras, tagged by family.
///
/// Classical parameters are the defining matrix size: `Sl(6)` is `sl(6)`
/// (rank 5), `Sp(6)` is `sp(6)` (rank 3), `SoEven(8)` is `so(8)` (rank 4),
/// `SoOdd(5)` is `so(5)` (rank 2). Validity: `Sl(n≥2)`, `Sp(2n, n≥2)`,
/// `SoEven(2n, n≥3)`, `SoOdd(2n+1, n≥2)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum LieFamily {
    Sl(u32),
    Sp(u32),
    SoEven(u32),
    SoOdd(u32),
    G2,
    F4,
    E6,
    E7,
    E8,
}

impl LieFamily {
    pub fn sl(n: u32) -> Result<Self, CatalogError> {
        LieFamily::Sl(n).validated()
    }

    pub fn sp(size: u32) -> Result<Self, CatalogError> {
        LieFamily::Sp(size).validated()
    }

    pub fn so_even(size: u32) -> Result<Self, CatalogError> {
        LieFamily::SoEven(size).validated()
    }

    pub fn so_odd(size: u32) -> Result<Self, CatalogError> {
        LieFamily::SoOdd(size).validated()
    }

    /// Checks the family's parameter constraints, returning the family
    /// itself so constructors can chain on it.
    pub fn validated(self) -> Result<Self, CatalogError> {
        let bad = |detail: String| Err(CatalogError::BadFamilyParameter { detail });
        match self {
            LieFamily::Sl(n) if n < 2 => bad(format!("sl({n}): need n >= 2")),
            LieFamily::Sp(m) if m % 2 != 0 || m < 4 => {
                bad(format!("sp({m}): need even size >= 4"))
            }
            LieFamily::SoEven(m) if m % 2 != 0 || m < 6 => {
                bad(format!("so({m}) even: need even size >= 6"))
            }
            LieFamily::SoOdd(m) if m % 2 != 1 || m < 5 => {
                bad(format!("so({m}) odd: need odd size >= 5"))
            }
            ok => Ok(ok),
        }
    }

    /// Number of fundamental weights.
    pub fn rank(&self) -> usize {
        match *self {
            LieFamily::Sl(n) => n as usize - 1,
            LieFamily::Sp(m) | LieFamily::SoEven(m) => m as usize / 2,
            LieFamily::SoOdd(m) => (m as usize - 1) / 2,
            LieFamily::G2 => 2,
            LieFamily::F4 => 4,
            LieFamily::E6 => 6,
            LieFamily::E7 => 7,
            LieFamily::E8 => 8,
        }
    }

    /// `dim g` (the dimension of the adjoint module).
    pub fn dim(&self) -> u64 {
        match *self {
            LieFamily::Sl(n) => (n as u64) * (n as u64) - 1,
            LieFamily::Sp(m) => {
                let n = m as u64 / 2;
                n * (2 * n + 1)
            }
            LieFamily::SoEven(m) => {
                let n = m as u64 / 2;
                n * (2 * n - 1)
            }
            LieFamily::SoOdd(m) => {
                let n = (m as u64 - 1) / 2;
                n * (2 * n + 1)
            }
            LieFamily::G2 => 14,
            LieFamily::F4 => 52,
            LieFamily::E6 => 78,
            LieFamily::E7 => 133,
            LieFamily::E8 => 248,
        }
    }

    pub fn is_classical(&self) -> bool {
        matches!(
            self,
            LieFamily::Sl(_) | LieFamily::Sp(_) | LieFamily::SoEven(_) | LieFamily::SoOdd(_)
        )
    }

    /// Highest weight of the adjoint representation, for the classical
    /// families (used to exclude the adjoint from small-module enumerations,
    /// cross-checked against `dim`).
    ///
    /// Low-rank cases deviate from the generic patterns: `sl(2)` has adjoint
    /// `(2)`; `so(5)` has adjoint `(0,2)` (the generic `(0,1,…)` is its spin
    /// module); `so(6)` has adjoint `(0,1,1)`.
    pub fn adjoint_weight(&self) -> Option<Weight> {
        let rank = self.rank();
        match *self {
            LieFamily::Sl(2) => Some(vec![2]),
            LieFamily::Sl(_) => {
                let mut w = vec![0; rank];
                w[0] = 1;
                w[rank - 1] = 1;
                Some(w)
            }
            LieFamily::Sp(_) => {
                let mut w = vec![0; rank];
                w[0] = 2;
                Some(w)
            }
            LieFamily::SoOdd(5) => Some(vec![0, 2]),
            LieFamily::SoEven(6) => Some(vec![0, 1, 1]),
            LieFamily::SoOdd(_) | LieFamily::SoEven(_) => {
                let mut w = vec![0; rank];
                w[1] = 1;
                Some(w)
            }
            _ => None,
        }
    }

    /// Tabulated rows for the exceptional families: `(weight, dim)` pairs of
    /// every small module. `e8` has none (its smallest nontrivial module is
    /// the 248-dimensional adjoint).
    fn exceptional_small_rows(&self) -> Option<Vec<(Weight, u64)>> {
        match *self {
            LieFamily::G2 => Some(vec![(vec![1, 0], 7)]),
            LieFamily::F4 => Some(vec![(vec![1, 0, 0, 0], 26)]),
            LieFamily::E6 => Some(vec![(vec![1, 0, 0, 0, 0, 0], 27)]),
            LieFamily::E7 => Some(vec![(vec![1, 0, 0, 0, 0, 0, 0], 56)]),
            LieFamily::E8 => Some(vec![]),
            _ => None,
        }
    }
}

impl fmt::Display for LieFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            LieFamily::Sl(n) => write!(f, "sl{n}"),
            LieFamily::Sp(m) => write!(f, "sp{m}"),
            LieFamily::SoEven(m) | LieFamily::SoOdd(m) => write!(f, "so{m}"),
            LieFamily::G2 => write!(f, "g2"),
            LieFamily::F4 => write!(f, "f4"),
            LieFamily::E6 => write!(f, "e6"),
            LieFamily::E7 => write!(f, "e7"),
            LieFamily::E8 => write!(f, "e8"),
        }
    }
}

impl FromStr for LieFamily {
    type Err = CatalogError;

    /// Parses names like `sl6`, `sp6`, `so8` (parity decides even/odd), `g2`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || CatalogError::BadFamilyParameter {
            detail: format!("cannot parse Lie family from {s:?}"),
        };
        let s = s.trim().to_ascii_lowercase();
        match s.as_str() {
            "g2" => return Ok(LieFamily::G2),
            "f4" => return Ok(LieFamily::F4),
            "e6" => return Ok(LieFamily::E6),
            "e7" => return Ok(LieFamily::E7),
            "e8" => return Ok(LieFamily::E8),
            _ => {}
        }
        let (prefix, num) = s.split_at(s.len().min(2));
        let n: u32 = num.parse().map_err(|_| bad())?;
        match prefix {
            "sl" => LieFamily::sl(n),
            "sp" => LieFamily::sp(n),
            "so" if n % 2 == 0 => LieFamily::so_even(n),
            "so" => LieFamily::so_odd(n),
            _ => Err(bad()),
        }
    }
}

impl Serialize for LieFamily {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for LieFamily {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// One small module: its highest weight and exact dimension.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SmallModule {
    pub weight: Weight,
    pub dim: u64,
}

// ---------------------------------------------------------------------------
// Weyl dimension formulas
// ---------------------------------------------------------------------------

fn rat_u32(n: u32) -> Rat {
    Rat::from_int(n as i64)
}

fn factorial(n: u64) -> Rat {
    let mut acc = BigInt::from(1);
    for k in 2..=n {
        acc *= BigInt::from(k);
    }
    Rat::from_bigint(acc)
}

/// `sl(n)`: product over `1 <= i < j <= n` of `(a_i + … + a_{j-1} + j - i)/(j - i)`.
fn dim_sl(a: &[u32]) -> Rat {
    let n = a.len() + 1;
    let mut res = Rat::one();
    for i in 1..n {
        for j in (i + 1)..=n {
            let s: u32 = a[(i - 1)..(j - 1)].iter().sum();
            let num = rat_u32(s + (j - i) as u32);
            let den = rat_u32((j - i) as u32);
            res = &res * &rat_div(&num, &den);
        }
    }
    res
}

/// `sp(2n)`: `l_k = a_k + … + a_n + n - k`; dimension is
/// `Π_{i<j} (l_i - l_j)(l_i + l_j + 2) · Π_j (l_j + 1) / Π_{j=0}^{n-1} (2n-2j-1)!`.
fn dim_sp(a: &[u32]) -> Rat {
    let n = a.len();
    let l: Vec<Rat> = (1..=n)
        .map(|k| {
            let s: u32 = a[(k - 1)..].iter().sum();
            rat_u32(s + (n - k) as u32)
        })
        .collect();
    let mut num = Rat::one();
    for i in 0..n {
        for j in (i + 1)..n {
            num = &num * &(&l[i] - &l[j]);
            num = &num * &(&(&l[i] + &l[j]) + &Rat::from_int(2));
        }
    }
    for lj in &l {
        num = &num * &(lj + &Rat::one());
    }
    let mut den = Rat::one();
    for j in 0..n as u64 {
        den = &den * &factorial(2 * n as u64 - 2 * j - 1);
    }
    rat_div(&num, &den)
}

/// `so(2n+1)`: `l_k = a_k + … + a_n - a_n/2 + n - k`; dimension is
/// `Π_{i<j} (l_i - l_j)(l_i + l_j + 1) · Π_j (2 l_j + 1) / Π_{j=0}^{n-1} (2n-2j-1)!`.
fn dim_so_odd(a: &[u32]) -> Rat {
    let n = a.len();
    let half_last = Rat::new(a[n - 1] as i64, 2);
    let l: Vec<Rat> = (1..=n)
        .map(|k| {
            let s: u32 = a[(k - 1)..].iter().sum();
            &(&rat_u32(s) - &half_last) + &rat_u32((n - k) as u32)
        })
        .collect();
    let mut num = Rat::one();
    for i in 0..n {
        for j in (i + 1)..n {
            num = &num * &(&l[i] - &l[j]);
            num = &num * &(&(&l[i] + &l[j]) + &Rat::one());
        }
    }
    for lj in &l {
        num = &num * &(&(lj * &Rat::from_int(2)) + &Rat::one());
    }
    let mut den = Rat::one();
    for j in 0..n as u64 {
        den = &den * &factorial(2 * n as u64 - 2 * j - 1);
    }
    rat_div(&num, &den)
}

/// `so(2n)`: for `k <= n-2`, `l_k = a_k + … + a_{n-2} + (a_{n-1} + a_n)/2 + n - k`;
/// then `l_{n-1} = (a_{n-1} + a_n)/2 + 1` and `l_n = (a_n - a_{n-1})/2`.
/// Dimension is `Π_{i<j} (l_i - l_j)(l_i + l_j) / Π_{j=1}^{n-1} (2n-2j)! · 2^{n-1}`.
fn dim_so_even(a: &[u32]) -> Rat {
    let n = a.len();
    let half_pen = Rat::new(a[n - 2] as i64, 2);
    let half_last = Rat::new(a[n - 1] as i64, 2);
    let mut l: Vec<Rat> = (1..=n - 2)
        .map(|k| {
            let s: u32 = a[(k - 1)..(n - 2)].iter().sum();
            &(&(&rat_u32(s) + &half_pen) + &half_last) + &rat_u32((n - k) as u32)
        })
        .collect();
    l.push(&(&half_pen + &half_last) + &Rat::one());
    l.push(&half_last - &half_pen);
    let mut num = Rat::one();
    for i in 0..n {
        for j in (i + 1)..n {
            num = &num * &(&l[i] - &l[j]);
            num = &num * &(&l[i] + &l[j]);
        }
    }
    let mut den = Rat::one();
    for j in 1..n as u64 {
        den = &den * &factorial(2 * n as u64 - 2 * j);
    }
    let pow2 = Rat::from_int(1i64 << (n - 1));
    &rat_div(&num, &den) * &pow2
}

/// Division that panics on zero; the Weyl product denominators are nonzero
/// by construction.
fn rat_div(num: &Rat, den: &Rat) -> Rat {
    use crate::exactmath::RingElem;
    num.exact_div(den)
        .expect("Weyl product denominators are nonzero")
}

/// Exact dimension of the irreducible module of highest weight `weight`, as
/// an arbitrary-precision integer — never overflows, whatever the weight.
///
/// Classical families use the Weyl closed forms; a non-integer or
/// non-positive product is reported as [`CatalogError::NonIntegerDimension`]
/// (it indicates a formula transcription bug, and is never rounded).
/// Exceptional families carry only their tabulated weights (zero, the small
/// fundamental(s), and for `g2` the adjoint `(0,1)`); anything else errors
/// with [`CatalogError::UnsupportedWeight`].
pub fn dim_irrep_big(family: LieFamily, weight: &[u32]) -> Result<BigInt, CatalogError> {
    let family = family.validated()?;
    if weight.len() != family.rank() {
        return Err(CatalogError::WeightLengthMismatch {
            expected: family.rank(),
            got: weight.len(),
        });
    }
    let value = match family {
        LieFamily::Sl(_) => dim_sl(weight),
        LieFamily::Sp(_) => dim_sp(weight),
        LieFamily::SoOdd(_) => dim_so_odd(weight),
        LieFamily::SoEven(_) => dim_so_even(weight),
        _ => {
            if weight.iter().all(|&c| c == 0) {
                return Ok(BigInt::from(1));
            }
            if family == LieFamily::G2 && weight == [0, 1] {
                return Ok(BigInt::from(14)); // adjoint
            }
            let rows = family
                .exceptional_small_rows()
                .expect("exceptional families have static rows");
            return rows
                .into_iter()
                .find(|(w, _)| w == weight)
                .map(|(_, d)| BigInt::from(d))
                .ok_or_else(|| CatalogError::UnsupportedWeight {
                    family: family.to_string(),
                    weight: weight.to_vec(),
                });
        }
    };
    if value.is_integer() && !value.is_negative() && !value.is_zero() {
        Ok(value.numer().clone())
    } else {
        Err(CatalogError::NonIntegerDimension {
            family: family.to_string(),
            weight: weight.to_vec(),
            value: value.to_string(),
        })
    }
}

/// [`dim_irrep_big`] narrowed to `u64`; dimensions beyond the `u64` range —
/// which the box enumerations reach for high-rank spin-heavy weights — error
/// with [`CatalogError::DimensionOverflow`] instead of being truncated.
pub fn dim_irrep(family: LieFamily, weight: &[u32]) -> Result<u64, CatalogError> {
    let value = dim_irrep_big(family, weight)?;
    value
        .to_u64()
        .ok_or_else(|| CatalogError::DimensionOverflow {
            family: family.to_string(),
            weight: weight.to_vec(),
            value: value.to_string(),
        })
}

// ---------------------------------------------------------------------------
// small-module enumeration
// ---------------------------------------------------------------------------

/// Re-verifies the enumeration window: each weight `(0,…,3,…,0)` already
/// exceeds `dim g`. Every weight outside the `{0,1,2}` box dominates one of
/// these componentwise, so by monotonicity of the dimension formulas its
/// dimension lies strictly above `dim g`.
fn coordinate3_guard(family: LieFamily) -> Result<(), CatalogError> {
    let rank = family.rank();
    let dim_g = BigInt::from(family.dim());
    for pos in 0..rank {
        let mut w = vec![0u32; rank];
        w[pos] = 3;
        let d = dim_irrep_big(family, &w)?;
        if d <= dim_g {
            return Err(CatalogError::InternalCheckFailed {
                detail: format!(
                    "coordinate-3 guard failed for {family}: weight {w:?} has dimension {d} <= {dim_g}"
                ),
            });
        }
    }
    Ok(())
}

/// All weights in `{0,1,2}^rank` in lexicographic order (first coordinate
/// most significant), excluding zero.
fn coordinate_box(rank: usize) -> impl Iterator<Item = Weight> {
    let total = 3u64.pow(rank as u32);
    (1..total).map(move |mut idx| {
        let mut w = vec![0u32; rank];
        for c in (0..rank).rev() {
            w[c] = (idx % 3) as u32;
            idx /= 3;
        }
        w
    })
}

/// Enumerates the small simple modules of `family`: every highest weight with
/// all coordinates ≤ 2 whose dimension is strictly below `dim g`, excluding
/// the trivial and adjoint modules.
///
/// The coordinate bound suffices because Weyl dimensions are monotone in each
/// coordinate: the enumeration re-verifies, per call, that each weight
/// `(0,…,3,…,0)` already exceeds `dim g`, and that the hardcoded adjoint
/// weight has dimension exactly `dim g`. Exceptional families return their
/// static tabulated rows. Output is sorted by weight, lexicographically.
pub fn small_modules(family: LieFamily) -> Result<Vec<SmallModule>, CatalogError> {
    let family = family.validated()?;
    if let Some(rows) = family.exceptional_small_rows() {
        return Ok(rows
            .into_iter()
            .map(|(weight, dim)| SmallModule { weight, dim })
            .collect());
    }
    let rank = family.rank();
    let dim_g = family.dim();

    // Adjoint cross-check: the excluded weight really is the adjoint.
    let adjoint = family
        .adjoint_weight()
        .expect("classical families have an adjoint weight");
    let adj_dim = dim_irrep(family, &adjoint)?;
    if adj_dim != dim_g {
        return Err(CatalogError::InternalCheckFailed {
            detail: format!(
                "adjoint weight {adjoint:?} of {family} has dimension {adj_dim}, expected {dim_g}"
            ),
        });
    }

    coordinate3_guard(family)?;

    let dim_g_big = BigInt::from(dim_g);
    let mut out = Vec::new();
    for w in coordinate_box(rank) {
        if w == adjoint {
            continue;
        }
        // Big comparison first: high-rank boxes contain weights whose
        // dimension exceeds u64. Anything small, by contrast, always fits.
        let d = dim_irrep_big(family, &w)?;
        if d < dim_g_big {
            let d = d.to_u64().expect("dimension below dim g fits in u64");
            out.push(SmallModule { weight: w, dim: d });
        }
    }
    Ok(out)
}

// ---------------------------------------------------------------------------
// feasibility of decompositions
// ---------------------------------------------------------------------------

/// All multisets over `dims` summing exactly to `target_dim`.
///
/// Each multiset is returned in ascending order; the list itself is in
/// lexicographic order. An empty `dims` list yields no decompositions (the
/// `e8` case: no small modules at all). Zero entries are rejected; the search
/// is exhaustive, with multiplicities bounded automatically by
/// `target_dim / min(dims)`.
pub fn feasible_decomps(target_dim: u64, dims: &[u64]) -> Result<Vec<Vec<u64>>, CatalogError> {
    if target_dim == 0 {
        return Err(CatalogError::BadDims {
            detail: "target dimension must be positive".into(),
        });
    }
    if dims.iter().any(|&d| d == 0) {
        return Err(CatalogError::BadDims {
            detail: "module dimensions must be positive".into(),
        });
    }
    let mut uniq: Vec<u64> = dims.to_vec();
    uniq.sort_unstable();
    uniq.dedup();

    fn rec(dims: &[u64], start: usize, remaining: u64, cur: &mut Vec<u64>, out: &mut Vec<Vec<u64>>) {
        if remaining == 0 {
            out.push(cur.clone());
            return;
        }
        for i in start..dims.len() {
            if dims[i] <= remaining {
                cur.push(dims[i]);
                rec(dims, i, remaining - dims[i], cur, out);
                cur.pop();
            }
        }
    }

    let mut out = Vec::new();
    rec(&uniq, 0, target_dim, &mut Vec::new(), &mut out);
    Ok(out)
}

// ---------------------------------------------------------------------------
// equal-dimension guard
// ---------------------------------------------------------------------------

/// Non-adjoint highest weights whose module dimension equals `dim g` exactly,
/// for the classical families (`None` for the exceptional families, whose
/// module data is tabulated rather than generated by a dimension formula).
///
/// A module with a bijective action map has dimension exactly `dim g`, so a
/// simple summand of dimension `≥ dim g` would force the module to be that
/// single simple. An empty result here — together with the separate adjoint
/// exclusion — closes that case, leaving only direct sums of small modules.
/// The same coordinate-3 guard as [`small_modules`] extends the `{0,1,2}`
/// window to all weights: everything outside the box has dimension strictly
/// above `dim g`.
pub fn dim_matching_weights(family: LieFamily) -> Result<Option<Vec<Weight>>, CatalogError> {
    let family = family.validated()?;
    if !family.is_classical() {
        return Ok(None);
    }
    coordinate3_guard(family)?;
    let adjoint = family
        .adjoint_weight()
        .expect("classical families have an adjoint weight");
    let dim_g = BigInt::from(family.dim());
    let mut out = Vec::new();
    for w in coordinate_box(family.rank()) {
        if w != adjoint && dim_irrep_big(family, &w)? == dim_g {
            out.push(w);
        }
    }
    Ok(Some(out))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn family_parameter_validation() {
        assert!(LieFamily::sl(1).is_err());
        assert!(LieFamily::sp(5).is_err());
        assert!(LieFamily::sp(2).is_err());
        assert!(LieFamily::so_even(4).is_err());
        assert!(LieFamily::so_odd(3).is_err());
        assert!(LieFamily::sl(2).is_ok());
        assert!(LieFamily::sp(4).is_ok());
        assert!(LieFamily::so_even(6).is_ok());
        assert!(LieFamily::so_odd(5).is_ok());
    }

    #[test]
    fn family_names_round_trip() {
        for name in ["sl6", "sp6", "so8", "so5", "g2", "f4", "e6", "e7", "e8"] {
            let f: LieFamily = name.parse().unwrap();
            assert_eq!(f.to_string(), name);
        }
        assert!("sl1".parse::<LieFamily>().is_err());
        assert!("su3".parse::<LieFamily>().is_err());
    }

    #[test]
    fn dims_of_g() {
        assert_eq!(LieFamily::Sl(6).dim(), 35);
        assert_eq!(LieFamily::Sp(6).dim(), 21);
        assert_eq!(LieFamily::SoEven(12).dim(), 66);
        assert_eq!(LieFamily::SoOdd(5).dim(), 10);
        assert_eq!(LieFamily::E8.dim(), 248);
    }

    #[test]
    fn dim_irrep_spot_values() {
        // standard, wedge-cube, symplectic 14, spin-4, and adjoints
        assert_eq!(dim_irrep(LieFamily::Sl(6), &[1, 0, 0, 0, 0]).unwrap(), 6);
        assert_eq!(dim_irrep(LieFamily::Sl(6), &[0, 0, 1, 0, 0]).unwrap(), 20);
        assert_eq!(dim_irrep(LieFamily::Sp(6), &[0, 1, 0]).unwrap(), 14);
        assert_eq!(dim_irrep(LieFamily::SoOdd(5), &[0, 1]).unwrap(), 4);
        assert_eq!(dim_irrep(LieFamily::Sl(2), &[2]).unwrap(), 3);
        assert_eq!(dim_irrep(LieFamily::SoOdd(5), &[0, 2]).unwrap(), 10);
        assert_eq!(dim_irrep(LieFamily::SoEven(6), &[0, 1, 1]).unwrap(), 15);
        assert_eq!(dim_irrep(LieFamily::G2, &[1, 0]).unwrap(), 7);
        assert_eq!(dim_irrep(LieFamily::G2, &[0, 1]).unwrap(), 14);
    }

    #[test]
    fn dim_irrep_zero_weight_is_one() {
        for f in [
            LieFamily::Sl(4),
            LieFamily::Sp(6),
            LieFamily::SoOdd(7),
            LieFamily::SoEven(8),
            LieFamily::E7,
        ] {
            assert_eq!(dim_irrep(f, &vec![0; f.rank()]).unwrap(), 1);
        }
    }

    #[test]
    fn adjoint_dimensions_match_dim_g() {
        for f in [
            LieFamily::Sl(2),
            LieFamily::Sl(3),
            LieFamily::Sl(6),
            LieFamily::Sp(4),
            LieFamily::Sp(8),
            LieFamily::SoOdd(5),
            LieFamily::SoOdd(9),
            LieFamily::SoEven(6),
            LieFamily::SoEven(8),
            LieFamily::SoEven(12),
        ] {
            let adj = f.adjoint_weight().unwrap();
            assert_eq!(dim_irrep(f, &adj).unwrap(), f.dim(), "family {f}");
        }
    }

    #[test]
    fn weight_length_is_enforced() {
        assert!(matches!(
            dim_irrep(LieFamily::Sl(6), &[1, 0, 0]),
            Err(CatalogError::WeightLengthMismatch { .. })
        ));
    }

    #[test]
    fn exceptional_weights_outside_table_are_rejected() {
        assert!(matches!(
            dim_irrep(LieFamily::E6, &[0, 1, 0, 0, 0, 0]),
            Err(CatalogError::UnsupportedWeight { .. })
        ));
    }

    #[test]
    fn monotonicity_in_each_coordinate() {
        // Weyl dimensions strictly increase when any coordinate increases.
        for f in [LieFamily::Sl(5), LieFamily::Sp(6), LieFamily::SoOdd(7), LieFamily::SoEven(8)] {
            let rank = f.rank();
            for pos in 0..rank {
                let mut lo = vec![1u32; rank];
                let mut hi = lo.clone();
                hi[pos] += 1;
                let dlo = dim_irrep(f, &lo).unwrap();
                let dhi = dim_irrep(f, &hi).unwrap();
                assert!(dhi > dlo, "family {f}, position {pos}");
                lo[pos] = 0;
                let dzero = dim_irrep(f, &lo).unwrap();
                assert!(dlo > dzero, "family {f}, position {pos}");
            }
        }
    }

    #[test]
    fn small_modules_sl6_includes_symmetric_square() {
        let rows = small_modules(LieFamily::Sl(6)).unwrap();
        let dims: Vec<u64> = rows.iter().map(|r| r.dim).collect();
        let mut sorted = dims.clone();
        sorted.sort_unstable();
        sorted.dedup();
        assert_eq!(sorted, vec![6, 15, 20, 21]);
        // the two symmetric squares (2,0,0,0,0) and (0,0,0,0,2)
        assert!(rows.iter().any(|r| r.weight == [2, 0, 0, 0, 0] && r.dim == 21));
        assert!(rows.iter().any(|r| r.weight == [0, 0, 0, 0, 2] && r.dim == 21));
        // the adjoint (1,0,0,0,1) is absent
        assert!(rows.iter().all(|r| r.weight != [1, 0, 0, 0, 1]));
    }

    #[test]
    fn small_modules_so5_has_spin_and_vector() {
        let rows = small_modules(LieFamily::SoOdd(5)).unwrap();
        let set: Vec<(Weight, u64)> = rows.iter().map(|r| (r.weight.clone(), r.dim)).collect();
        assert_eq!(set, vec![(vec![0, 1], 4), (vec![1, 0], 5)]);
    }

    #[test]
    fn small_modules_exceptional_static_rows() {
        assert_eq!(
            small_modules(LieFamily::G2).unwrap(),
            vec![SmallModule { weight: vec![1, 0], dim: 7 }]
        );
        assert!(small_modules(LieFamily::E8).unwrap().is_empty());
    }

    #[test]
    fn feasible_decomps_exhaustive_small_case() {
        // 35 over {6,15,20,21}: only 15+20
        let d = feasible_decomps(35, &[6, 15, 20, 21]).unwrap();
        assert_eq!(d, vec![vec![15, 20]]);
        // 14 over {7}: only 7+7
        let d = feasible_decomps(14, &[7]).unwrap();
        assert_eq!(d, vec![vec![7, 7]]);
        // duplicates in input change nothing
        let d = feasible_decomps(14, &[7, 7, 7]).unwrap();
        assert_eq!(d, vec![vec![7, 7]]);
    }

    #[test]
    fn feasible_decomps_empty_and_errors() {
        assert!(feasible_decomps(248, &[]).unwrap().is_empty());
        assert!(feasible_decomps(0, &[3]).is_err());
        assert!(feasible_decomps(10, &[0, 3]).is_err());
    }

    #[test]
    fn feasible_decomps_multiset_order() {
        let d = feasible_decomps(6, &[2, 3]).unwrap();
        assert_eq!(d, vec![vec![2, 2, 2], vec![3, 3]]);
    }

    #[test]
    fn no_classical_family_has_an_equal_dimension_impostor() {
        for family in [
            LieFamily::Sl(2),
            LieFamily::Sl(4),
            LieFamily::Sl(6),
            LieFamily::Sl(9),
            LieFamily::Sp(4),
            LieFamily::Sp(8),
            LieFamily::SoOdd(5),
            LieFamily::SoOdd(9),
            LieFamily::SoOdd(15),
            LieFamily::SoEven(6),
            LieFamily::SoEven(12),
            LieFamily::SoEven(16),
        ] {
            let hits = dim_matching_weights(family).unwrap();
            assert_eq!(hits, Some(vec![]), "{family} has an unexpected match");
        }
        // Exceptional families carry tabulated data only.
        assert_eq!(dim_matching_weights(LieFamily::G2).unwrap(), None);
        assert_eq!(dim_matching_weights(LieFamily::E8).unwrap(), None);
    }

    #[test]
    fn oversized_dimensions_overflow_cleanly_and_never_break_enumeration() {
        // so15's coordinate box contains spin-heavy weights whose dimension
        // exceeds u64; the big-integer path must carry them and the narrowed
        // query must say so rather than mislabel them.
        let family = LieFamily::SoOdd(15);
        let w = vec![0, 0, 2, 2, 2, 2, 2];
        let big = dim_irrep_big(family, &w).unwrap();
        assert!(big > BigInt::from(u64::MAX));
        match dim_irrep(family, &w) {
            Err(CatalogError::DimensionOverflow { value, .. }) => {
                assert_eq!(value, big.to_string());
            }
            other => panic!("expected DimensionOverflow, got {other:?}"),
        }
        // The enumeration itself just treats such weights as not small.
        let smalls = small_modules(family).unwrap();
        assert_eq!(
            smalls,
            vec![SmallModule {
                weight: vec![1, 0, 0, 0, 0, 0, 0],
                dim: 15,
            }]
        );
    }
}
