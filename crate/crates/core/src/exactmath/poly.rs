//! Sparse multivariate polynomials with a graded-lexicographic term order.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::{ArithError, FpScalar, Rat, RingElem};

/// A monomial, stored as its exponent vector. The vector length is the
/// polynomial's arity; variable `i` (0-based) prints as `x{i+1}`.
///
/// `Ord` is graded lexicographic: lower total degree sorts first, ties are
/// broken lexicographically with `x1 > x2 > …` (so within one degree,
/// `x2^2 < x1*x2 < x1^2`). The maximum in this order is the leading monomial.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Monomial(Vec<u32>);

impl Monomial {
    pub fn new(exps: Vec<u32>) -> Self {
        Monomial(exps)
    }

    /// The constant monomial in `arity` variables.
    pub fn unit(arity: usize) -> Self {
        Monomial(vec![0; arity])
    }

    /// The monomial `x{i+1}` (0-based `i`).
    pub fn var(arity: usize, i: usize) -> Self {
        assert!(i < arity, "variable index {i} out of range for arity {arity}");
        let mut e = vec![0; arity];
        e[i] = 1;
        Monomial(e)
    }

    pub fn arity(&self) -> usize {
        self.0.len()
    }

    pub fn exps(&self) -> &[u32] {
        &self.0
    }

    pub fn total_degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn is_unit(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    /// Componentwise sum (the product of the monomials).
    pub fn mul(&self, rhs: &Self) -> Result<Self, ArithError> {
        self.check_arity(rhs)?;
        Ok(Monomial(
            self.0.iter().zip(&rhs.0).map(|(a, b)| a + b).collect(),
        ))
    }

    /// Componentwise difference, if `rhs` divides `self`.
    pub fn try_div(&self, rhs: &Self) -> Result<Option<Self>, ArithError> {
        self.check_arity(rhs)?;
        let mut out = Vec::with_capacity(self.0.len());
        for (a, b) in self.0.iter().zip(&rhs.0) {
            if a < b {
                return Ok(None);
            }
            out.push(a - b);
        }
        Ok(Some(Monomial(out)))
    }

    fn check_arity(&self, rhs: &Self) -> Result<(), ArithError> {
        if self.0.len() != rhs.0.len() {
            return Err(ArithError::ArityMismatch {
                left: self.0.len(),
                right: rhs.0.len(),
            });
        }
        Ok(())
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.total_degree()
            .cmp(&other.total_degree())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

/// A sparse multivariate polynomial over `C`.
///
/// Invariants: every stored coefficient is nonzero; every stored exponent
/// vector has length `arity`; the term map is keyed by graded-lex order, so
/// structural equality is semantic equality.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Poly<C> {
    arity: usize,
    terms: BTreeMap<Monomial, C>,
}

/// Polynomials with rational coefficients.
pub type PolyQ = Poly<Rat>;
/// Polynomials with prime-field coefficients.
pub type PolyFp = Poly<FpScalar>;

impl<C: RingElem> Poly<C> {
    pub fn zero(arity: usize) -> Self {
        Poly {
            arity,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(arity: usize, c: C) -> Self {
        let mut p = Poly::zero(arity);
        if !c.is_zero() {
            p.terms.insert(Monomial::unit(arity), c);
        }
        p
    }

    /// The variable `x{i+1}` with coefficient `one`. Coefficient rings whose
    /// constants need context (`F_p`) take it from the provided element.
    pub fn var_with_one(arity: usize, i: usize, one: C) -> Self {
        let mut p = Poly::zero(arity);
        p.terms.insert(Monomial::var(arity, i), one);
        p
    }

    /// Builds from raw terms: validates arities, merges duplicates, drops zeros.
    pub fn from_terms(
        arity: usize,
        terms: impl IntoIterator<Item = (Monomial, C)>,
    ) -> Result<Self, ArithError> {
        let mut p = Poly::zero(arity);
        for (m, c) in terms {
            if m.arity() != arity {
                return Err(ArithError::ArityMismatch {
                    left: arity,
                    right: m.arity(),
                });
            }
            p.add_term(m, c);
        }
        Ok(p)
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Terms in ascending graded-lex order.
    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &C)> {
        self.terms.iter()
    }

    /// Total degree; `None` for the zero polynomial.
    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(Monomial::total_degree).max()
    }

    /// Leading (graded-lex greatest) term.
    pub fn leading_term(&self) -> Option<(&Monomial, &C)> {
        self.terms.iter().next_back()
    }

    pub fn coeff(&self, m: &Monomial) -> Option<&C> {
        self.terms.get(m)
    }

    fn add_term(&mut self, m: Monomial, c: C) {
        if c.is_zero() {
            return;
        }
        match self.terms.remove(&m) {
            Some(old) => {
                let s = old.plus(&c);
                if !s.is_zero() {
                    self.terms.insert(m, s);
                }
            }
            None => {
                self.terms.insert(m, c);
            }
        }
    }

    fn check_arity(&self, rhs: &Self) -> Result<(), ArithError> {
        if self.arity != rhs.arity {
            return Err(ArithError::ArityMismatch {
                left: self.arity,
                right: rhs.arity,
            });
        }
        Ok(())
    }

    pub fn add(&self, rhs: &Self) -> Result<Self, ArithError> {
        self.check_arity(rhs)?;
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn sub(&self, rhs: &Self) -> Result<Self, ArithError> {
        self.add(&rhs.neg())
    }

    pub fn neg(&self) -> Self {
        Poly {
            arity: self.arity,
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.clone(), c.negated()))
                .collect(),
        }
    }

    pub fn scale(&self, k: &C) -> Self {
        if k.is_zero() {
            return Poly::zero(self.arity);
        }
        let mut out = Poly::zero(self.arity);
        for (m, c) in &self.terms {
            out.add_term(m.clone(), c.times(k));
        }
        out
    }

    /// Reinterprets the polynomial over a larger variable set; exponent
    /// vectors are zero-padded on the right. Fails if `new_arity` is smaller
    /// than the current arity.
    pub fn pad_arity(&self, new_arity: usize) -> Result<Self, ArithError> {
        if new_arity < self.arity {
            return Err(ArithError::ArityMismatch {
                left: self.arity,
                right: new_arity,
            });
        }
        let mut out = Poly::zero(new_arity);
        for (m, c) in &self.terms {
            let mut exps = m.exps().to_vec();
            exps.resize(new_arity, 0);
            out.add_term(Monomial::new(exps), c.clone());
        }
        Ok(out)
    }

    pub fn mul(&self, rhs: &Self) -> Result<Self, ArithError> {
        self.check_arity(rhs)?;
        let mut out = Poly::zero(self.arity);
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                out.add_term(ma.mul(mb)?, ca.times(cb));
            }
        }
        Ok(out)
    }

    /// Exact evaluation at a point (one value per variable).
    pub fn eval(&self, point: &[C]) -> Result<C, ArithError> {
        if point.len() != self.arity {
            return Err(ArithError::ArityMismatch {
                left: self.arity,
                right: point.len(),
            });
        }
        let zero = match (self.terms.values().next(), point.first()) {
            (Some(c), _) => c.zero_like(),
            (None, Some(v)) => v.zero_like(),
            // zero polynomial in zero variables over an unknowable ring: the
            // caller must have at least one coordinate or one term; arity 0
            // with no terms only arises for Poly::zero(0), whose value we
            // cannot represent without a sample element.
            (None, None) => panic!("cannot evaluate the arity-0 zero polynomial without context"),
        };
        let mut acc = zero.clone();
        for (m, c) in &self.terms {
            let mut term = c.clone();
            for (i, &e) in m.exps().iter().enumerate() {
                for _ in 0..e {
                    term = term.times(&point[i]);
                }
            }
            acc = acc.plus(&term);
        }
        Ok(acc)
    }

    /// Leading-term exact division: returns `q` with `q * rhs == self` or
    /// `NotDivisible`. For an exact quotient over an integral domain the
    /// greedy leading-term loop always succeeds, because the leading term of
    /// a product is the product of leading terms.
    pub fn exact_div(&self, rhs: &Self) -> Result<Self, ArithError> {
        self.check_arity(rhs)?;
        let (lm_d, lc_d) = rhs.leading_term().ok_or(ArithError::DivisionByZero)?;
        let mut rem = self.clone();
        let mut quot = Poly::zero(self.arity);
        while let Some((lm_r, lc_r)) = rem.leading_term() {
            let m = match lm_r.try_div(lm_d)? {
                Some(m) => m,
                None => {
                    return Err(ArithError::NotDivisible {
                        detail: format!("leading monomial not divisible: {rem} by {rhs}"),
                    })
                }
            };
            let c = lc_r.exact_div(lc_d)?;
            let piece = Poly::from_terms(self.arity, [(m, c)])?;
            rem = rem.sub(&piece.mul(rhs)?)?;
            quot = quot.add(&piece)?;
        }
        Ok(quot)
    }
}

impl<C: RingElem> RingElem for Poly<C> {
    fn zero_like(&self) -> Self {
        Poly::zero(self.arity)
    }
    fn one_like(&self) -> Self {
        let one = match self.terms.values().next() {
            Some(c) => c.one_like(),
            None => panic!("one_like on a zero polynomial without a sample coefficient"),
        };
        Poly::constant(self.arity, one)
    }
    fn plus(&self, rhs: &Self) -> Self {
        self.add(rhs).expect("polynomial arity mismatch")
    }
    fn minus(&self, rhs: &Self) -> Self {
        self.sub(rhs).expect("polynomial arity mismatch")
    }
    fn times(&self, rhs: &Self) -> Self {
        self.mul(rhs).expect("polynomial arity mismatch")
    }
    fn negated(&self) -> Self {
        self.neg()
    }
    fn is_zero(&self) -> bool {
        Poly::is_zero(self)
    }
    fn exact_div(&self, rhs: &Self) -> Result<Self, ArithError> {
        Poly::exact_div(self, rhs)
    }
}

impl PolyQ {
    /// The variable `x{i+1}` over `Q`.
    pub fn var(arity: usize, i: usize) -> Self {
        Poly::var_with_one(arity, i, Rat::one())
    }

    /// Constant polynomial over `Q`.
    pub fn from_rat(arity: usize, c: Rat) -> Self {
        Poly::constant(arity, c)
    }

    pub fn from_int(arity: usize, n: i64) -> Self {
        Poly::constant(arity, Rat::from_int(n))
    }
}

/// Reduces a rational polynomial modulo `p`, coefficientwise.
///
/// Errors with [`ArithError::BadPrime`] if any denominator is divisible by
/// `p` (the coefficient has no image in `F_p`).
pub fn fp_reduce(p: &PolyQ, prime: u64) -> Result<PolyFp, ArithError> {
    let reduce_bigint = |n: &num_bigint::BigInt| -> u64 {
        use num_traits::ToPrimitive;
        let m = num_bigint::BigInt::from(prime);
        let r = ((n % &m) + &m) % &m;
        r.to_u64().expect("residue fits u64 by construction")
    };
    let mut out = Poly::zero(p.arity());
    for (m, c) in p.terms() {
        let den = reduce_bigint(c.denom());
        if den == 0 {
            return Err(ArithError::BadPrime {
                prime,
                value: c.to_string(),
            });
        }
        let num = FpScalar::new(reduce_bigint(c.numer()), prime);
        let den = FpScalar::new(den, prime);
        out.add_term(m.clone(), num.mul(&den.inv()?));
    }
    Ok(out)
}

// ---------------------------------------------------------------------------
// text form: `c1*x1^e11*...*xk^e1k + c2*... + ...`
// ---------------------------------------------------------------------------

impl<C: RingElem> fmt::Display for Poly<C> {
    /// Canonical text form. Terms appear leading-first (descending graded-lex);
    /// every term carries an explicit coefficient; exponent 1 omits the `^`,
    /// exponent 0 omits the variable. The zero polynomial prints as `0`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (m, c) in self.terms.iter().rev() {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            write!(f, "{c}")?;
            for (i, &e) in m.exps().iter().enumerate() {
                match e {
                    0 => {}
                    1 => write!(f, "*x{}", i + 1)?,
                    _ => write!(f, "*x{}^{}", i + 1, e)?,
                }
            }
        }
        Ok(())
    }
}

impl PolyQ {
    /// Parses the text form produced by `Display`.
    ///
    /// The arity must be supplied because a string like `"3"` carries no
    /// variable information. Variables beyond the arity are rejected.
    pub fn parse(s: &str, arity: usize) -> Result<Self, ArithError> {
        let parse_err = |detail: String| ArithError::Parse {
            kind: "PolyQ",
            input: s.to_string(),
            detail,
        };
        let s = s.trim();
        if s.is_empty() {
            return Err(parse_err("empty input".into()));
        }
        if s == "0" {
            return Ok(Poly::zero(arity));
        }
        let mut out = Poly::zero(arity);
        for term in s.split(" + ") {
            let mut coeff: Option<Rat> = None;
            let mut exps = vec![0u32; arity];
            for factor in term.split('*') {
                let factor = factor.trim();
                if let Some(rest) = factor.strip_prefix('x') {
                    let (var_str, exp_str) = match rest.split_once('^') {
                        Some((v, e)) => (v, Some(e)),
                        None => (rest, None),
                    };
                    let var: usize = var_str
                        .parse()
                        .map_err(|e| parse_err(format!("bad variable in {factor:?}: {e}")))?;
                    if var == 0 || var > arity {
                        return Err(parse_err(format!(
                            "variable x{var} out of range for arity {arity}"
                        )));
                    }
                    let exp: u32 = match exp_str {
                        Some(e) => e
                            .parse()
                            .map_err(|e| parse_err(format!("bad exponent in {factor:?}: {e}")))?,
                        None => 1,
                    };
                    exps[var - 1] += exp;
                } else {
                    let c: Rat = factor
                        .parse()
                        .map_err(|e| parse_err(format!("bad coefficient {factor:?}: {e}")))?;
                    coeff = Some(match coeff {
                        Some(prev) => &prev * &c,
                        None => c,
                    });
                }
            }
            let c = coeff.unwrap_or_else(Rat::one);
            out.add_term(Monomial::new(exps), c);
        }
        Ok(out)
    }
}

/// Serialized as `{ "arity": k, "text": "..." }`; the text form alone does not
/// determine the arity.
impl Serialize for PolyQ {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut st = serializer.serialize_struct("PolyQ", 2)?;
        st.serialize_field("arity", &self.arity)?;
        st.serialize_field("text", &self.to_string())?;
        st.end()
    }
}

impl<'de> Deserialize<'de> for PolyQ {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        #[derive(Deserialize)]
        struct Repr {
            arity: usize,
            text: String,
        }
        let r = Repr::deserialize(deserializer)?;
        PolyQ::parse(&r.text, r.arity).map_err(serde::de::Error::custom)
    }
}

impl FromStr for PolyQ {
    type Err = ArithError;

    /// Parses with the arity inferred as the largest variable index used
    /// (at least 1). Prefer [`PolyQ::parse`] when the arity matters.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let mut max_var = 1usize;
        for piece in s.split(['*', ' ', '+']) {
            if let Some(rest) = piece.trim().strip_prefix('x') {
                let idx_part = rest.split('^').next().unwrap_or("");
                if let Ok(v) = idx_part.parse::<usize>() {
                    max_var = max_var.max(v);
                }
            }
        }
        PolyQ::parse(s, max_var)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn x(i: usize) -> PolyQ {
        PolyQ::var(3, i)
    }

    #[test]
    fn graded_lex_order() {
        // degree dominates, then lex with x1 > x2 > x3
        let one = Monomial::unit(3);
        let x1 = Monomial::var(3, 0);
        let x3 = Monomial::var(3, 2);
        let x1x2 = Monomial::new(vec![1, 1, 0]);
        let x2sq = Monomial::new(vec![0, 2, 0]);
        let x1sq = Monomial::new(vec![2, 0, 0]);
        assert!(one < x3);
        assert!(x3 < x1);
        assert!(x1 < x2sq);
        assert!(x2sq < x1x2);
        assert!(x1x2 < x1sq);
    }

    #[test]
    fn mul_matches_hand_expansion() {
        // (x1 + x2)(x1 - x2) = x1^2 - x2^2
        let a = x(0).add(&x(1)).unwrap();
        let b = x(0).sub(&x(1)).unwrap();
        let prod = a.mul(&b).unwrap();
        let expect = x(0)
            .mul(&x(0))
            .unwrap()
            .sub(&x(1).mul(&x(1)).unwrap())
            .unwrap();
        assert_eq!(prod, expect);
    }

    #[test]
    fn pad_arity_preserves_values() {
        let p = x(0).mul(&x(1)).unwrap().add(&PolyQ::from_int(3, 7)).unwrap();
        let q = p.pad_arity(5).unwrap();
        assert_eq!(q.arity(), 5);
        let point3 = vec![Rat::from_int(2), Rat::from_int(3), Rat::from_int(4)];
        let mut point5 = point3.clone();
        point5.push(Rat::from_int(9));
        point5.push(Rat::from_int(11));
        assert_eq!(p.eval(&point3).unwrap(), q.eval(&point5).unwrap());
        assert!(p.pad_arity(2).is_err());
    }

    #[test]
    fn zero_terms_are_never_stored() {
        let a = x(0).add(&x(1)).unwrap();
        let b = x(0).neg();
        let s = a.add(&b).unwrap();
        assert_eq!(s, x(1));
        assert_eq!(s.num_terms(), 1);
        let z = s.sub(&x(1)).unwrap();
        assert!(z.is_zero());
        assert_eq!(z.num_terms(), 0);
    }

    #[test]
    fn display_round_trip() {
        let p = x(0)
            .mul(&x(0))
            .unwrap()
            .scale(&Rat::new(3, 2))
            .sub(&x(2))
            .unwrap()
            .add(&PolyQ::from_int(3, 5))
            .unwrap();
        let s = p.to_string();
        assert_eq!(s, "3/2*x1^2 + -1*x3 + 5");
        let back = PolyQ::parse(&s, 3).unwrap();
        assert_eq!(back, p);
    }

    #[test]
    fn display_of_zero_and_constants() {
        assert_eq!(PolyQ::zero(2).to_string(), "0");
        assert_eq!(PolyQ::from_int(2, -7).to_string(), "-7");
        assert_eq!(PolyQ::parse("0", 2).unwrap(), PolyQ::zero(2));
        assert_eq!(PolyQ::parse("-7", 2).unwrap(), PolyQ::from_int(2, -7));
    }

    #[test]
    fn eval_is_a_ring_morphism_spot() {
        // p = x1*x2 - 2*x3 at (1/2, 4, 3/2) -> 2 - 3 = -1
        let p = x(0)
            .mul(&x(1))
            .unwrap()
            .sub(&x(2).scale(&Rat::from_int(2)))
            .unwrap();
        let point = [Rat::new(1, 2), Rat::from_int(4), Rat::new(3, 2)];
        assert_eq!(p.eval(&point).unwrap(), Rat::from_int(-1));
    }

    #[test]
    fn eval_arity_mismatch() {
        let p = x(0);
        assert!(matches!(
            p.eval(&[Rat::one()]),
            Err(ArithError::ArityMismatch { .. })
        ));
    }

    #[test]
    fn exact_division_succeeds_on_products() {
        // (x1 + x2)^2 / (x1 + x2) = x1 + x2
        let a = x(0).add(&x(1)).unwrap();
        let sq = a.mul(&a).unwrap();
        assert_eq!(sq.exact_div(&a).unwrap(), a);
    }

    #[test]
    fn exact_division_rejects_non_multiples() {
        let a = x(0).add(&PolyQ::from_int(3, 1)).unwrap();
        let b = x(1);
        assert!(matches!(
            b.exact_div(&a),
            Err(ArithError::NotDivisible { .. })
        ));
    }

    #[test]
    fn fp_reduce_maps_coefficients() {
        let p = x(0).scale(&Rat::new(1, 2)); // (1/2) x1
        let q = fp_reduce(&p, 2_147_483_659).unwrap();
        let (_, c) = q.leading_term().unwrap();
        // 1/2 mod p = (p+1)/2
        assert_eq!(c.value(), (2_147_483_659 + 1) / 2);
    }

    #[test]
    fn fp_reduce_bad_prime() {
        // coefficient 1/p has no image mod p
        let coeff = Rat::checked_new(1.into(), 2_147_483_659i64.into()).unwrap();
        let p = PolyQ::from_rat(1, coeff);
        let err = fp_reduce(&p, 2_147_483_659).unwrap_err();
        assert!(matches!(err, ArithError::BadPrime { .. }));
    }

    #[test]
    fn serde_round_trip() {
        let p = x(0).mul(&x(1)).unwrap().sub(&PolyQ::from_int(3, 2)).unwrap();
        let json = serde_json::to_string(&p).unwrap();
        let back: PolyQ = serde_json::from_str(&json).unwrap();
        assert_eq!(back, p);
    }
}
