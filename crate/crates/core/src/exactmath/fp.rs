//! Word-sized prime fields `F_p`.

use std::fmt;

use super::{ArithError, FieldElem, RingElem};

/// Fixed list of published primes used for prime-field specializations.
///
/// All are at least `2^31` (so Schwartz–Zippel bounds of the form `d/p` are
/// tiny for the matrix sizes in this crate) and fit in a `u64` (so products
/// can be reduced through `u128` without overflow). The entries, in order:
///
/// * `2^31 + 11`  — smallest prime above `2^31`
/// * `2^32 + 15`  — smallest prime above `2^32`
/// * `2^53 + 5`   — smallest prime above `2^53`
/// * `2^61 − 1`   — the Mersenne prime M61
/// * `2^64 − 59`  — largest prime below `2^64`
pub const PRIMES: [u64; 5] = [
    2_147_483_659,
    4_294_967_311,
    9_007_199_254_740_997,
    2_305_843_009_213_693_951,
    18_446_744_073_709_551_557,
];

/// Deterministic seed-controlled choice from [`PRIMES`].
pub fn prime_for_seed(seed: u64) -> u64 {
    PRIMES[(seed % PRIMES.len() as u64) as usize]
}

/// An element of `F_p` for a word-sized prime `p` carried alongside the value.
///
/// Operations between elements of different moduli are a programming error
/// and panic.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct FpScalar {
    value: u64,
    modulus: u64,
}

impl FpScalar {
    /// `value mod p` in `F_p`. `p` must be an odd prime from the caller's
    /// side; primality is not re-checked per element (see [`is_prime_u64`]).
    pub fn new(value: u64, modulus: u64) -> Self {
        debug_assert!(modulus > 2, "modulus must be an odd prime");
        FpScalar {
            value: value % modulus,
            modulus,
        }
    }

    pub fn value(&self) -> u64 {
        self.value
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    pub fn is_zero(&self) -> bool {
        self.value == 0
    }

    fn check_same(&self, rhs: &Self) {
        assert_eq!(
            self.modulus, rhs.modulus,
            "FpScalar operation across moduli {} and {}",
            self.modulus, rhs.modulus
        );
    }

    pub fn add(&self, rhs: &Self) -> Self {
        self.check_same(rhs);
        let s = (self.value as u128 + rhs.value as u128) % self.modulus as u128;
        FpScalar {
            value: s as u64,
            modulus: self.modulus,
        }
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        self.check_same(rhs);
        let s = (self.modulus as u128 + self.value as u128 - rhs.value as u128)
            % self.modulus as u128;
        FpScalar {
            value: s as u64,
            modulus: self.modulus,
        }
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        self.check_same(rhs);
        let s = (self.value as u128 * rhs.value as u128) % self.modulus as u128;
        FpScalar {
            value: s as u64,
            modulus: self.modulus,
        }
    }

    pub fn neg(&self) -> Self {
        FpScalar {
            value: if self.value == 0 {
                0
            } else {
                self.modulus - self.value
            },
            modulus: self.modulus,
        }
    }

    pub fn pow(&self, mut exp: u64) -> Self {
        let mut base = *self;
        let mut acc = FpScalar {
            value: 1,
            modulus: self.modulus,
        };
        while exp > 0 {
            if exp & 1 == 1 {
                acc = acc.mul(&base);
            }
            base = base.mul(&base);
            exp >>= 1;
        }
        acc
    }

    /// Multiplicative inverse via Fermat's little theorem (`p` prime).
    pub fn inv(&self) -> Result<Self, ArithError> {
        if self.value == 0 {
            return Err(ArithError::DivisionByZero);
        }
        Ok(self.pow(self.modulus - 2))
    }
}

impl RingElem for FpScalar {
    fn zero_like(&self) -> Self {
        FpScalar {
            value: 0,
            modulus: self.modulus,
        }
    }
    fn one_like(&self) -> Self {
        FpScalar {
            value: 1,
            modulus: self.modulus,
        }
    }
    fn plus(&self, rhs: &Self) -> Self {
        self.add(rhs)
    }
    fn minus(&self, rhs: &Self) -> Self {
        self.sub(rhs)
    }
    fn times(&self, rhs: &Self) -> Self {
        self.mul(rhs)
    }
    fn negated(&self) -> Self {
        self.neg()
    }
    fn is_zero(&self) -> bool {
        FpScalar::is_zero(self)
    }
    fn exact_div(&self, rhs: &Self) -> Result<Self, ArithError> {
        Ok(self.mul(&rhs.inv()?))
    }
}

impl FieldElem for FpScalar {
    fn invert(&self) -> Result<Self, ArithError> {
        self.inv()
    }
}

impl fmt::Display for FpScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value)
    }
}

impl fmt::Debug for FpScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} (mod {})", self.value, self.modulus)
    }
}

/// Deterministic Miller–Rabin primality test, exact for all `u64`.
///
/// Uses the witness set {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}, which
/// is known to be deterministic below 3.3·10^24. Used to validate
/// user-supplied primes at the CLI boundary.
pub fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for p in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n == p {
            return true;
        }
        if n % p == 0 {
            return false;
        }
    }
    let mut d = n - 1;
    let mut r = 0u32;
    while d % 2 == 0 {
        d /= 2;
        r += 1;
    }
    let pow_mod = |mut base: u64, mut exp: u64| -> u64 {
        let mut acc: u64 = 1;
        base %= n;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = ((acc as u128 * base as u128) % n as u128) as u64;
            }
            base = ((base as u128 * base as u128) % n as u128) as u64;
            exp >>= 1;
        }
        acc
    };
    'witness: for a in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = pow_mod(a, d);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 0..r - 1 {
            x = ((x as u128 * x as u128) % n as u128) as u64;
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}
