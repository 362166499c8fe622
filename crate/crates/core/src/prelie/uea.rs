//! Degree-capped elements of the enveloping algebra `U(g)` (and, with the
//! commutative product, of the symmetric algebra `S(g)`), in the PBW basis
//! of plain ordered monomials `x_1^{a_1} ⋯ x_d^{a_d}`.
//!
//! Monomials are stored in plain form, not divided powers; the coproduct
//! consequently carries binomial coefficients: `Δ(x^n) = Σ C(n,k) x^k ⊗ x^{n−k}`,
//! extended multiplicatively across distinct generators. The two conventions
//! differ by the diagonal rescaling `a!`, which every identity tested here
//! survives.
//!
//! Every element carries a hard degree cap; any operation that would need a
//! monomial of length beyond the cap fails with
//! [`PrelieError::CapExceeded`] instead of silently truncating — a silent
//! truncation would corrupt ideal-membership answers.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_integer::binomial;

use super::{PrelieError, StructConsts};
use crate::exactmath::{Monomial, Rat};

/// A PBW monomial: the exponent vector over the ordered basis, with length
/// `l(a) = Σ a_i` its total degree.
pub type PbwMono = Monomial;

/// An exact element of the degree-capped `U(g)` / `S(g)`.
///
/// Invariants: every stored monomial has arity `dim` and total degree at most
/// `cap`; no zero coefficients are stored.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UEAElem {
    dim: usize,
    cap: u32,
    terms: BTreeMap<PbwMono, Rat>,
}

impl UEAElem {
    pub fn zero(dim: usize, cap: u32) -> Self {
        UEAElem {
            dim,
            cap,
            terms: BTreeMap::new(),
        }
    }

    /// The unit `1` (the empty monomial).
    pub fn one(dim: usize, cap: u32) -> Self {
        let mut e = UEAElem::zero(dim, cap);
        e.add_term(PbwMono::unit(dim), Rat::one());
        e
    }

    /// The generator `x_i` (0-based).
    pub fn generator(dim: usize, cap: u32, i: usize) -> Result<Self, PrelieError> {
        if i >= dim {
            return Err(PrelieError::BadInput {
                detail: format!("generator index {i} out of range for dimension {dim}"),
            });
        }
        let mut e = UEAElem::zero(dim, cap);
        e.checked_add_term(PbwMono::var(dim, i), Rat::one())?;
        Ok(e)
    }

    /// A single monomial with coefficient.
    pub fn from_monomial(dim: usize, cap: u32, m: PbwMono, coeff: Rat) -> Result<Self, PrelieError> {
        if m.arity() != dim {
            return Err(PrelieError::DimMismatch {
                left: m.arity(),
                right: dim,
            });
        }
        let mut e = UEAElem::zero(dim, cap);
        e.checked_add_term(m, coeff)?;
        Ok(e)
    }

    /// The linear element `Σ v_k x_k`.
    pub fn from_g_vec(cap: u32, v: &[Rat]) -> Result<Self, PrelieError> {
        let dim = v.len();
        let mut e = UEAElem::zero(dim, cap);
        for (k, c) in v.iter().enumerate() {
            if !c.is_zero() {
                e.checked_add_term(PbwMono::var(dim, k), c.clone())?;
            }
        }
        Ok(e)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn cap(&self) -> u32 {
        self.cap
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Terms in ascending graded-lex order.
    pub fn terms(&self) -> impl Iterator<Item = (&PbwMono, &Rat)> {
        self.terms.iter()
    }

    pub fn coeff(&self, m: &PbwMono) -> Rat {
        self.terms.get(m).cloned().unwrap_or_else(Rat::zero)
    }

    pub fn min_degree(&self) -> Option<u32> {
        self.terms.keys().map(|m| m.total_degree()).min()
    }

    pub fn max_degree(&self) -> Option<u32> {
        self.terms.keys().map(|m| m.total_degree()).max()
    }

    /// The degree-`n` homogeneous component.
    pub fn degree_component(&self, n: u32) -> Self {
        UEAElem {
            dim: self.dim,
            cap: self.cap,
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.total_degree() == n)
                .map(|(m, c)| (m.clone(), c.clone()))
                .collect(),
        }
    }

    /// True when every term has degree at least `n` (membership in the span
    /// of monomials of length ≥ n; for `n = 2` this is `S_{≥2}`).
    pub fn in_degree_at_least(&self, n: u32) -> bool {
        self.terms.keys().all(|m| m.total_degree() >= n)
    }

    /// Coefficients of the degree-1 component over the basis.
    pub fn g_part(&self) -> Vec<Rat> {
        let mut v = vec![Rat::zero(); self.dim];
        for (m, c) in &self.terms {
            if m.total_degree() == 1 {
                let i = m.exps().iter().position(|&e| e == 1).expect("degree-1 monomial");
                v[i] = c.clone();
            }
        }
        v
    }

    pub fn constant_part(&self) -> Rat {
        self.coeff(&PbwMono::unit(self.dim))
    }

    pub fn add(&self, rhs: &Self) -> Result<Self, PrelieError> {
        self.check_compatible(rhs)?;
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn sub(&self, rhs: &Self) -> Result<Self, PrelieError> {
        self.add(&rhs.neg())
    }

    pub fn neg(&self) -> Self {
        UEAElem {
            dim: self.dim,
            cap: self.cap,
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }

    pub fn scale(&self, k: &Rat) -> Self {
        if k.is_zero() {
            return UEAElem::zero(self.dim, self.cap);
        }
        UEAElem {
            dim: self.dim,
            cap: self.cap,
            terms: self.terms.iter().map(|(m, c)| (m.clone(), c * k)).collect(),
        }
    }

    fn check_compatible(&self, rhs: &Self) -> Result<(), PrelieError> {
        if self.dim != rhs.dim {
            return Err(PrelieError::DimMismatch {
                left: self.dim,
                right: rhs.dim,
            });
        }
        if self.cap != rhs.cap {
            return Err(PrelieError::CapMismatch {
                left: self.cap,
                right: rhs.cap,
            });
        }
        Ok(())
    }

    /// Adds a term, purging on cancellation. The monomial must already obey
    /// the cap (enforced at every construction site via
    /// [`UEAElem::checked_add_term`]).
    fn add_term(&mut self, m: PbwMono, c: Rat) {
        debug_assert!(m.total_degree() <= self.cap);
        debug_assert_eq!(m.arity(), self.dim);
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += &c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    fn checked_add_term(&mut self, m: PbwMono, c: Rat) -> Result<(), PrelieError> {
        if m.total_degree() > self.cap {
            return Err(PrelieError::CapExceeded {
                needed: m.total_degree(),
                cap: self.cap,
            });
        }
        self.add_term(m, c);
        Ok(())
    }
}

impl fmt::Display for UEAElem {
    /// Leading term first, explicit coefficients, `x{i}` 1-based —
    /// e.g. `1*x1*x3 + -1*x2`.
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
                if e == 0 {
                    continue;
                }
                write!(f, "*x{}", i + 1)?;
                if e > 1 {
                    write!(f, "^{e}")?;
                }
            }
        }
        Ok(())
    }
}

/// All degree-`deg` monomials in `dim` variables, ascending graded-lex.
pub fn monomials_of_degree(dim: usize, deg: u32) -> Vec<PbwMono> {
    fn rec(dim: usize, pos: usize, left: u32, cur: &mut Vec<u32>, out: &mut Vec<PbwMono>) {
        if pos == dim - 1 {
            cur.push(left);
            out.push(PbwMono::new(cur.clone()));
            cur.pop();
            return;
        }
        for e in 0..=left {
            cur.push(e);
            rec(dim, pos + 1, left - e, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(dim, 0, deg, &mut Vec::new(), &mut out);
    out.sort();
    out
}

/// Commutative (symmetric-algebra) product.
pub fn sym_mul(a: &UEAElem, b: &UEAElem) -> Result<UEAElem, PrelieError> {
    a.check_compatible(b)?;
    let mut out = UEAElem::zero(a.dim, a.cap);
    for (ma, ca) in &a.terms {
        for (mb, cb) in &b.terms {
            let m = ma.mul(mb)?;
            out.checked_add_term(m, ca * cb)?;
        }
    }
    Ok(out)
}

/// Which adjacent inversion the straightener rewrites next. The result is
/// independent of the choice (confluence); both are kept so tests can compare
/// them.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum StraightenStrategy {
    FirstInversion,
    LastInversion,
}

/// The word of a PBW monomial: generator indices in nondecreasing order.
fn word_of(m: &PbwMono) -> Vec<usize> {
    let mut w = Vec::with_capacity(m.total_degree() as usize);
    for (i, &e) in m.exps().iter().enumerate() {
        for _ in 0..e {
            w.push(i);
        }
    }
    w
}

fn mono_of_word(dim: usize, w: &[usize]) -> PbwMono {
    let mut exps = vec![0u32; dim];
    for &i in w {
        exps[i] += 1;
    }
    PbwMono::new(exps)
}

/// Straightens an arbitrary generator word into the PBW basis by repeatedly
/// rewriting `x_j x_i = x_i x_j + [x_j, x_i]` at an adjacent inversion.
fn straighten_word(
    dim: usize,
    cap: u32,
    word: Vec<usize>,
    coeff: Rat,
    c: &StructConsts,
    strategy: StraightenStrategy,
    out: &mut UEAElem,
) -> Result<(), PrelieError> {
    if word.len() as u32 > cap {
        return Err(PrelieError::CapExceeded {
            needed: word.len() as u32,
            cap,
        });
    }
    let mut work = vec![(word, coeff)];
    while let Some((w, r)) = work.pop() {
        if r.is_zero() {
            continue;
        }
        let inversions: Vec<usize> = (0..w.len().saturating_sub(1))
            .filter(|&p| w[p] > w[p + 1])
            .collect();
        let p = match strategy {
            StraightenStrategy::FirstInversion => inversions.first().copied(),
            StraightenStrategy::LastInversion => inversions.last().copied(),
        };
        match p {
            None => out.add_term(mono_of_word(dim, &w), r),
            Some(p) => {
                let (j, i) = (w[p], w[p + 1]);
                let mut swapped = w.clone();
                swapped.swap(p, p + 1);
                for k in 0..dim {
                    let ck = c.coeff(j, i, k);
                    if ck.is_zero() {
                        continue;
                    }
                    let mut shorter = Vec::with_capacity(w.len() - 1);
                    shorter.extend_from_slice(&w[..p]);
                    shorter.push(k);
                    shorter.extend_from_slice(&w[p + 2..]);
                    work.push((shorter, &r * ck));
                }
                work.push((swapped, r));
            }
        }
    }
    Ok(())
}

/// Noncommutative product in `U(g)`: concatenates PBW words and straightens
/// back to the canonical order using the bracket. Errors with
/// [`PrelieError::CapExceeded`] when a product monomial would exceed the cap.
pub fn uea_mul(a: &UEAElem, b: &UEAElem, c: &StructConsts) -> Result<UEAElem, PrelieError> {
    uea_mul_with_strategy(a, b, c, StraightenStrategy::FirstInversion)
}

/// [`uea_mul`] with an explicit rewriting strategy; all strategies agree
/// (tested), so this exists for confluence cross-checks.
pub fn uea_mul_with_strategy(
    a: &UEAElem,
    b: &UEAElem,
    c: &StructConsts,
    strategy: StraightenStrategy,
) -> Result<UEAElem, PrelieError> {
    a.check_compatible(b)?;
    if a.dim != c.dim() {
        return Err(PrelieError::DimMismatch {
            left: a.dim,
            right: c.dim(),
        });
    }
    let mut out = UEAElem::zero(a.dim, a.cap);
    for (ma, ra) in &a.terms {
        for (mb, rb) in &b.terms {
            let mut word = word_of(ma);
            word.extend(word_of(mb));
            straighten_word(a.dim, a.cap, word, ra * rb, c, strategy, &mut out)?;
        }
    }
    Ok(out)
}

/// The full coproduct of a single monomial, as `(coefficient, left, right)`
/// triples: `Δ(x^n) = Σ_k C(n,k) x^k ⊗ x^{n−k}` per generator, extended
/// multiplicatively. Includes the two trivial splittings.
pub fn coproduct_splits(m: &PbwMono) -> Vec<(Rat, PbwMono, PbwMono)> {
    let exps = m.exps();
    let mut out: Vec<(Rat, Vec<u32>, Vec<u32>)> = vec![(Rat::one(), Vec::new(), Vec::new())];
    for &e in exps {
        let mut next = Vec::with_capacity(out.len() * (e as usize + 1));
        for (coef, left, right) in &out {
            for k in 0..=e {
                let b = binomial(BigInt::from(e), BigInt::from(k));
                let mut l = left.clone();
                let mut r = right.clone();
                l.push(k);
                r.push(e - k);
                next.push((coef * &Rat::from_bigint(b), l, r));
            }
        }
        out = next;
    }
    out.into_iter()
        .map(|(coef, l, r)| (coef, PbwMono::new(l), PbwMono::new(r)))
        .collect()
}

/// The full coproduct of an element, as a list of
/// `(coefficient, left monomial, right monomial)` with each side wrapped as a
/// monic single-term element. Deterministic order: terms ascending, splits in
/// odometer order over the left exponents.
pub fn uea_coproduct(a: &UEAElem) -> Vec<(Rat, UEAElem, UEAElem)> {
    let mut out = Vec::new();
    for (m, r) in &a.terms {
        for (coef, l, rt) in coproduct_splits(m) {
            let left = UEAElem::from_monomial(a.dim, a.cap, l, Rat::one())
                .expect("split degree never exceeds the original");
            let right = UEAElem::from_monomial(a.dim, a.cap, rt, Rat::one())
                .expect("split degree never exceeds the original");
            out.push((r * &coef, left, right));
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gen(dim: usize, cap: u32, i: usize) -> UEAElem {
        UEAElem::generator(dim, cap, i).unwrap()
    }

    /// Collapse a coproduct term list into a map (left, right) → coefficient.
    fn tensor_map(
        terms: &[(Rat, UEAElem, UEAElem)],
    ) -> BTreeMap<(PbwMono, PbwMono), Rat> {
        let mut out: BTreeMap<(PbwMono, PbwMono), Rat> = BTreeMap::new();
        for (r, l, rt) in terms {
            assert_eq!(l.num_terms(), 1);
            assert_eq!(rt.num_terms(), 1);
            let (lm, lc) = l.terms().next().unwrap();
            let (rm, rc) = rt.terms().next().unwrap();
            let coeff = &(r * lc) * rc;
            let e = out.entry((lm.clone(), rm.clone())).or_insert_with(Rat::zero);
            *e += &coeff;
            if e.is_zero() {
                out.remove(&(lm.clone(), rm.clone()));
            }
        }
        out
    }

    #[test]
    fn sl2_straightening_f_times_e() {
        // basis (e, h, f): f·e = ef − h
        let c = StructConsts::sl2();
        let prod = uea_mul(&gen(3, 4, 2), &gen(3, 4, 0), &c).unwrap();
        let ef = PbwMono::new(vec![1, 0, 1]);
        let h = PbwMono::new(vec![0, 1, 0]);
        assert_eq!(prod.coeff(&ef), Rat::one());
        assert_eq!(prod.coeff(&h), -Rat::one());
        assert_eq!(prod.num_terms(), 2);
    }

    #[test]
    fn unit_is_neutral() {
        let c = StructConsts::sl2();
        let u = uea_mul(&gen(3, 4, 1), &gen(3, 4, 2), &c).unwrap();
        let one = UEAElem::one(3, 4);
        assert_eq!(uea_mul(&one, &u, &c).unwrap(), u);
        assert_eq!(uea_mul(&u, &one, &c).unwrap(), u);
    }

    #[test]
    fn abelian_multiplication_adds_exponents() {
        let c = StructConsts::abelian(2);
        let x = gen(2, 5, 0);
        let x2 = sym_mul(&x, &x).unwrap();
        let prod = uea_mul(&x2, &x, &c).unwrap();
        assert_eq!(prod.coeff(&PbwMono::new(vec![3, 0])), Rat::one());
        assert_eq!(prod.num_terms(), 1);
    }

    #[test]
    fn cap_exceeded_is_a_hard_error() {
        let c = StructConsts::abelian(1);
        let x = gen(1, 2, 0);
        let x2 = uea_mul(&x, &x, &c).unwrap();
        let err = uea_mul(&x2, &x, &c).unwrap_err();
        assert!(matches!(err, PrelieError::CapExceeded { needed: 3, cap: 2 }));
    }

    #[test]
    fn straightening_strategies_agree() {
        // exhaustive over all monomial pairs of degree ≤ 2 in U(sl2), cap 4
        let c = StructConsts::sl2();
        let mut monos = vec![PbwMono::unit(3)];
        monos.extend(monomials_of_degree(3, 1));
        monos.extend(monomials_of_degree(3, 2));
        for ma in &monos {
            for mb in &monos {
                let a = UEAElem::from_monomial(3, 4, ma.clone(), Rat::one()).unwrap();
                let b = UEAElem::from_monomial(3, 4, mb.clone(), Rat::one()).unwrap();
                let p1 = uea_mul_with_strategy(&a, &b, &c, StraightenStrategy::FirstInversion)
                    .unwrap();
                let p2 =
                    uea_mul_with_strategy(&a, &b, &c, StraightenStrategy::LastInversion).unwrap();
                assert_eq!(p1, p2, "strategies disagree on {ma:?}·{mb:?}");
            }
        }
    }

    #[test]
    fn uea_mul_is_associative_on_sl2_generators() {
        let c = StructConsts::sl2();
        for i in 0..3 {
            for j in 0..3 {
                for k in 0..3 {
                    let ab_c = uea_mul(&uea_mul(&gen(3, 3, i), &gen(3, 3, j), &c).unwrap(), &gen(3, 3, k), &c)
                        .unwrap();
                    let a_bc = uea_mul(&gen(3, 3, i), &uea_mul(&gen(3, 3, j), &gen(3, 3, k), &c).unwrap(), &c)
                        .unwrap();
                    assert_eq!(ab_c, a_bc, "associativity fails at ({i},{j},{k})");
                }
            }
        }
    }

    #[test]
    fn coproduct_of_a_generator_is_primitive() {
        let x = gen(2, 3, 0);
        let tm = tensor_map(&uea_coproduct(&x));
        let unit = PbwMono::unit(2);
        let xm = PbwMono::var(2, 0);
        assert_eq!(tm.len(), 2);
        assert_eq!(tm[&(xm.clone(), unit.clone())], Rat::one());
        assert_eq!(tm[&(unit, xm)], Rat::one());
    }

    #[test]
    fn coproduct_of_a_square_has_binomial_two() {
        let x = gen(1, 3, 0);
        let x2 = sym_mul(&x, &x).unwrap();
        let tm = tensor_map(&uea_coproduct(&x2));
        let unit = PbwMono::unit(1);
        let xm = PbwMono::var(1, 0);
        let x2m = PbwMono::new(vec![2]);
        assert_eq!(tm[&(xm.clone(), xm)], Rat::from_int(2));
        assert_eq!(tm[&(x2m.clone(), unit.clone())], Rat::one());
        assert_eq!(tm[&(unit, x2m)], Rat::one());
    }

    #[test]
    fn coproduct_of_ef_extends_multiplicatively() {
        // Δ̃(ef) = e⊗f + f⊗e in U(sl2)
        let c = StructConsts::sl2();
        let ef = uea_mul(&gen(3, 3, 0), &gen(3, 3, 2), &c).unwrap();
        let tm = tensor_map(&uea_coproduct(&ef));
        let e = PbwMono::var(3, 0);
        let f = PbwMono::var(3, 2);
        assert_eq!(tm[&(e.clone(), f.clone())], Rat::one());
        assert_eq!(tm[&(f, e)], Rat::one());
        assert_eq!(tm.len(), 4); // the two reduced terms plus ef⊗1, 1⊗ef
    }

    #[test]
    fn coproduct_is_an_algebra_morphism() {
        // Δ(f·e) = Δ(f)·Δ(e) in U(sl2), products taken componentwise.
        let c = StructConsts::sl2();
        let f = gen(3, 4, 2);
        let e = gen(3, 4, 0);
        let lhs = tensor_map(&uea_coproduct(&uea_mul(&f, &e, &c).unwrap()));

        let mut rhs: BTreeMap<(PbwMono, PbwMono), Rat> = BTreeMap::new();
        for (rf, lf, rtf) in uea_coproduct(&f) {
            for (re, le, rte) in uea_coproduct(&e) {
                let l = uea_mul(&lf, &le, &c).unwrap();
                let r = uea_mul(&rtf, &rte, &c).unwrap();
                for (lm, lc) in l.terms() {
                    for (rm, rc) in r.terms() {
                        let coeff = &(&(&rf * &re) * lc) * rc;
                        let entry = rhs
                            .entry((lm.clone(), rm.clone()))
                            .or_insert_with(Rat::zero);
                        *entry += &coeff;
                        if entry.is_zero() {
                            rhs.remove(&(lm.clone(), rm.clone()));
                        }
                    }
                }
            }
        }
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn monomial_enumeration_is_complete_and_sorted() {
        let m2 = monomials_of_degree(3, 2);
        assert_eq!(m2.len(), 6); // C(3+2-1, 2)
        assert!(m2.windows(2).all(|w| w[0] < w[1]));
        assert!(m2.iter().all(|m| m.total_degree() == 2));
    }

    #[test]
    fn g_part_and_components() {
        let c = StructConsts::sl2();
        let fe = uea_mul(&gen(3, 4, 2), &gen(3, 4, 0), &c).unwrap(); // ef − h
        assert_eq!(
            fe.g_part(),
            vec![Rat::zero(), -Rat::one(), Rat::zero()]
        );
        assert!(fe.degree_component(2).in_degree_at_least(2));
        assert_eq!(fe.min_degree(), Some(1));
        assert_eq!(fe.max_degree(), Some(2));
        assert_eq!(fe.to_string(), "1*x1*x3 + -1*x2");
    }
}
