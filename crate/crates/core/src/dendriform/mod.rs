//! The tensor coalgebra on a finite alphabet, with deconcatenation as the
//! coproduct and the shuffle product as the stock Hopf structure.
//!
//! Words over the alphabet form a basis; the coproduct splits a word into
//! all prefix/suffix pairs. With the shuffle product this is a Hopf algebra,
//! and the span of words of length ≥ 2 is a left ideal — the two hypotheses
//! under which a product induces a dendriform pair of half-products (see
//! [`prec_from_star`](crate::dendriform::prec_from_star)). User-supplied
//! products enter through a validated product table ([`ProductTable`]);
//! the same Hopf checks that justify the construction run on them first.

mod pair;

pub use pair::{
    axiom_instance_counts, brace_product, dendriform_axiom_check, omega_word, prec_from_star,
    prop30_checks, succ_from_star, Violation,
};

use std::collections::BTreeMap;
use std::fmt;

use serde::{Serialize, Serializer};
use thiserror::Error;

use crate::exactmath::Rat;

/// Errors from tensor-coalgebra constructions.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DendriformError {
    /// A parameter is outside the operation's domain.
    #[error("bad input: {detail}")]
    BadInput { detail: String },

    /// An argument that must be primitive (a combination of single letters)
    /// has longer words.
    #[error("argument is not primitive: {detail}")]
    NotPrimitive { detail: String },

    /// A user-supplied product table failed the Hopf validation that the
    /// half-product construction presumes.
    #[error("product table is not a Hopf product: {detail}")]
    HopfViolation { detail: String },
}

/// A word over the alphabet: a finite sequence of letter indices. Free —
/// every sequence is valid, including the empty word (the coalgebra unit).
///
/// Ordered by length first, then lexicographically, so iteration over a
/// [`TensorElem`] visits terms degree by degree.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Word(Vec<u32>);

impl Word {
    pub fn empty() -> Self {
        Word(Vec::new())
    }

    pub fn single(letter: u32) -> Self {
        Word(vec![letter])
    }

    pub fn from_letters(letters: &[u32]) -> Self {
        Word(letters.to_vec())
    }

    pub fn letters(&self) -> &[u32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut letters = self.0.clone();
        letters.extend_from_slice(&other.0);
        Word(letters)
    }

    /// The word with one letter appended at the end.
    pub fn push_letter(&self, letter: u32) -> Word {
        let mut letters = self.0.clone();
        letters.push(letter);
        Word(letters)
    }

    /// Splits off the last letter: `(prefix, last)`. `None` on the empty
    /// word.
    pub fn split_last(&self) -> Option<(Word, u32)> {
        let (&last, prefix) = self.0.split_last()?;
        Some((Word(prefix.to_vec()), last))
    }
}

impl Ord for Word {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.0
            .len()
            .cmp(&other.0.len())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Word {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Word {
    /// Letters 0..25 render as `a`..`z`, larger ones as `{i}`; the empty
    /// word renders as `1` (the coalgebra unit).
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "1");
        }
        for &l in &self.0 {
            if l < 26 {
                write!(f, "{}", (b'a' + l as u8) as char)?;
            } else {
                write!(f, "{{{l}}}")?;
            }
        }
        Ok(())
    }
}

impl Serialize for Word {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

/// An element of the tensor algebra: a finite linear combination of words
/// with exact rational coefficients. Invariant: no explicit zero
/// coefficients are stored.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct TensorElem {
    terms: BTreeMap<Word, Rat>,
}

impl TensorElem {
    pub fn zero() -> Self {
        TensorElem::default()
    }

    pub fn from_word(w: Word) -> Self {
        Self::from_term(w, Rat::one())
    }

    pub fn from_term(w: Word, coeff: Rat) -> Self {
        let mut t = TensorElem::zero();
        t.add_term(w, coeff);
        t
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in (length, lexicographic) order.
    pub fn terms(&self) -> impl Iterator<Item = (&Word, &Rat)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coeff(&self, w: &Word) -> Rat {
        self.terms.get(w).cloned().unwrap_or_else(Rat::zero)
    }

    /// Adds `coeff·w` in place, dropping the entry if it cancels.
    pub fn add_term(&mut self, w: Word, coeff: Rat) {
        if coeff.is_zero() {
            return;
        }
        let entry = self.terms.entry(w);
        match entry {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(coeff);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let sum = &*o.get() + &coeff;
                if sum.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = sum;
                }
            }
        }
    }

    pub fn add(&self, other: &TensorElem) -> TensorElem {
        let mut out = self.clone();
        for (w, c) in other.terms() {
            out.add_term(w.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &TensorElem) -> TensorElem {
        let mut out = self.clone();
        for (w, c) in other.terms() {
            out.add_term(w.clone(), -c);
        }
        out
    }

    pub fn scale(&self, k: &Rat) -> TensorElem {
        if k.is_zero() {
            return TensorElem::zero();
        }
        TensorElem {
            terms: self.terms.iter().map(|(w, c)| (w.clone(), c * k)).collect(),
        }
    }

    /// The component of one word length (the projection onto `Tⁿ`).
    pub fn component(&self, len: usize) -> TensorElem {
        TensorElem {
            terms: self
                .terms
                .iter()
                .filter(|(w, _)| w.len() == len)
                .map(|(w, c)| (w.clone(), c.clone()))
                .collect(),
        }
    }

    /// The primitive part: the projection onto single-letter words.
    pub fn primitive_part(&self) -> TensorElem {
        self.component(1)
    }

    /// Largest word length present; `None` when zero.
    pub fn max_len(&self) -> Option<usize> {
        self.terms.keys().next_back().map(Word::len)
    }

    /// Smallest word length present; `None` when zero.
    pub fn min_len(&self) -> Option<usize> {
        self.terms.keys().next().map(Word::len)
    }

    /// True when every word is a single letter (zero counts as primitive).
    pub fn is_primitive(&self) -> bool {
        self.terms.keys().all(|w| w.len() == 1)
    }
}

impl fmt::Display for TensorElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (w, c)) in self.terms.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            write!(f, "{c}*{w}")?;
        }
        Ok(())
    }
}

impl Serialize for TensorElem {
    /// Serializes as the map word → coefficient, both rendered as strings.
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_map(self.terms.iter().map(|(w, c)| (w.to_string(), c)))
    }
}

/// An element of the two-fold tensor product of the word algebra with
/// itself: a linear combination of `w₁ ⊗ w₂` pairs. Used for coproduct
/// identities.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Tensor2 {
    terms: BTreeMap<(Word, Word), Rat>,
}

impl Tensor2 {
    pub fn zero() -> Self {
        Tensor2::default()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(Word, Word), &Rat)> {
        self.terms.iter()
    }

    pub fn add_term(&mut self, left: Word, right: Word, coeff: Rat) {
        if coeff.is_zero() {
            return;
        }
        let entry = self.terms.entry((left, right));
        match entry {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(coeff);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let sum = &*o.get() + &coeff;
                if sum.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = sum;
                }
            }
        }
    }

    pub fn add(&self, other: &Tensor2) -> Tensor2 {
        let mut out = self.clone();
        for ((l, r), c) in other.terms() {
            out.add_term(l.clone(), r.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Tensor2) -> Tensor2 {
        let mut out = self.clone();
        for ((l, r), c) in other.terms() {
            out.add_term(l.clone(), r.clone(), -c);
        }
        out
    }

    /// `x ⊗ y` for two algebra elements, expanded multilinearly.
    pub fn of(x: &TensorElem, y: &TensorElem) -> Tensor2 {
        let mut out = Tensor2::zero();
        for (wx, cx) in x.terms() {
            for (wy, cy) in y.terms() {
                out.add_term(wx.clone(), wy.clone(), cx * cy);
            }
        }
        out
    }
}

impl fmt::Display for Tensor2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, ((l, r), c)) in self.terms.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            write!(f, "{c}*{l}(x){r}")?;
        }
        Ok(())
    }
}

/// All `l(w)+1` prefix/suffix splittings of a word, including the two
/// trivial ones with an empty side — the full deconcatenation coproduct on
/// the word basis.
pub fn deconcat(w: &Word) -> Vec<(Word, Word)> {
    (0..=w.len())
        .map(|i| {
            (
                Word::from_letters(&w.letters()[..i]),
                Word::from_letters(&w.letters()[i..]),
            )
        })
        .collect()
}

/// The reduced coproduct on the word basis: the splittings with both sides
/// nonempty. Empty for the empty word and for single letters (which are
/// exactly the primitives).
pub fn deconcat_reduced(w: &Word) -> Vec<(Word, Word)> {
    if w.len() < 2 {
        return Vec::new();
    }
    (1..w.len())
        .map(|i| {
            (
                Word::from_letters(&w.letters()[..i]),
                Word::from_letters(&w.letters()[i..]),
            )
        })
        .collect()
}

/// The reduced coproduct extended linearly to algebra elements.
pub fn reduced_coproduct(t: &TensorElem) -> Tensor2 {
    let mut out = Tensor2::zero();
    for (w, c) in t.terms() {
        for (l, r) in deconcat_reduced(w) {
            out.add_term(l, r, c.clone());
        }
    }
    out
}

/// The shuffle of two words: the sum over all interleavings preserving both
/// letter orders, with multiplicities (equal letters make interleavings
/// coincide and their coefficients accumulate). The empty word is the unit.
pub fn shuffle(a: &Word, b: &Word) -> TensorElem {
    fn rec(a: &[u32], b: &[u32], prefix: &mut Vec<u32>, out: &mut TensorElem) {
        if a.is_empty() {
            let mut letters = prefix.clone();
            letters.extend_from_slice(b);
            out.add_term(Word::from_letters(&letters), Rat::one());
            return;
        }
        if b.is_empty() {
            let mut letters = prefix.clone();
            letters.extend_from_slice(a);
            out.add_term(Word::from_letters(&letters), Rat::one());
            return;
        }
        prefix.push(a[0]);
        rec(&a[1..], b, prefix, out);
        prefix.pop();
        prefix.push(b[0]);
        rec(a, &b[1..], prefix, out);
        prefix.pop();
    }
    let mut out = TensorElem::zero();
    rec(a.letters(), b.letters(), &mut Vec::new(), &mut out);
    out
}

/// A bilinear associative product on the word algebra for which
/// deconcatenation is multiplicative — the input of the half-product
/// construction. Implementations define it on basis words; the bilinear
/// extension is provided.
pub trait StarProduct {
    /// Product of two basis words.
    fn star_words(&self, a: &Word, b: &Word) -> TensorElem;

    /// Short human-readable name for reports.
    fn name(&self) -> &str;

    /// Bilinear extension to algebra elements.
    fn star(&self, x: &TensorElem, y: &TensorElem) -> TensorElem {
        let mut out = TensorElem::zero();
        for (wx, cx) in x.terms() {
            for (wy, cy) in y.terms() {
                out = out.add(&self.star_words(wx, wy).scale(&(cx * cy)));
            }
        }
        out
    }
}

/// The stock instance: the shuffle product.
#[derive(Debug, Clone, Copy, Default)]
pub struct ShuffleProduct;

impl StarProduct for ShuffleProduct {
    fn star_words(&self, a: &Word, b: &Word) -> TensorElem {
        shuffle(a, b)
    }

    fn name(&self) -> &str {
        "shuffle"
    }
}

/// Violations found by [`hopf_checks`], with the offending words.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct HopfCheckReport {
    /// Pairs where the empty word failed to act as a unit.
    pub unit_violations: Vec<Word>,
    /// Triples `(x, y, z)` with `(x∗y)∗z ≠ x∗(y∗z)`.
    pub associativity_violations: Vec<(Word, Word, Word)>,
    /// Words where `(Δ̃⊗Id)Δ̃ ≠ (Id⊗Δ̃)Δ̃` — a property of deconcatenation
    /// itself, independent of the product.
    pub coassociativity_violations: Vec<Word>,
    /// Pairs `(a, b)` where `Δ(a∗b) ≠ Δ(a)∗Δ(b)` in the twofold tensor
    /// product.
    pub morphism_violations: Vec<(Word, Word)>,
    /// Pairs whose product has a term longer than the summed lengths —
    /// products must be length-homogeneous for window checks to be exact.
    pub homogeneity_violations: Vec<(Word, Word)>,
}

impl HopfCheckReport {
    pub fn is_clean(&self) -> bool {
        self.unit_violations.is_empty()
            && self.associativity_violations.is_empty()
            && self.coassociativity_violations.is_empty()
            && self.morphism_violations.is_empty()
            && self.homogeneity_violations.is_empty()
    }
}

/// All words over the first `alphabet` letters with length in
/// `[min_len, max_len]`, in (length, lexicographic) order.
pub fn words_in_range(alphabet: usize, min_len: usize, max_len: usize) -> Vec<Word> {
    let mut out = Vec::new();
    for len in min_len..=max_len {
        if len > 0 && alphabet == 0 {
            continue;
        }
        let mut current = vec![0u32; len];
        'words: loop {
            out.push(Word::from_letters(&current));
            // Odometer increment over base-`alphabet` digits.
            let mut pos = len;
            while pos > 0 {
                pos -= 1;
                if current[pos] + 1 < alphabet as u32 {
                    current[pos] += 1;
                    current[pos + 1..].fill(0);
                    continue 'words;
                }
            }
            break;
        }
    }
    out
}

/// Exhaustive Hopf-structure checks for a product within a length window:
/// unit (empty word), associativity on word triples with lengths summing to
/// at most `max_len`, coassociativity of deconcatenation on words of length
/// ≤ `max_len`, the coproduct-is-multiplicative identity on word pairs with
/// lengths summing to at most `max_len`, and length-homogeneity of products.
pub fn hopf_checks(star: &dyn StarProduct, alphabet: usize, max_len: usize) -> HopfCheckReport {
    let mut report = HopfCheckReport {
        unit_violations: Vec::new(),
        associativity_violations: Vec::new(),
        coassociativity_violations: Vec::new(),
        morphism_violations: Vec::new(),
        homogeneity_violations: Vec::new(),
    };
    let empty = Word::empty();
    let all = words_in_range(alphabet, 1, max_len);

    for w in &all {
        let as_elem = TensorElem::from_word(w.clone());
        if star.star_words(&empty, w) != as_elem || star.star_words(w, &empty) != as_elem {
            report.unit_violations.push(w.clone());
        }
    }

    for a in &all {
        for b in &all {
            if a.len() + b.len() > max_len {
                continue;
            }
            let prod = star.star_words(a, b);
            if prod.max_len().is_some_and(|l| l > a.len() + b.len()) {
                report.homogeneity_violations.push((a.clone(), b.clone()));
            }
            // Coproduct multiplicativity: Δ(a∗b) = Δ(a)∗Δ(b), computed with
            // the full coproduct (trivial splits included) in T ⊗ T.
            let mut lhs = Tensor2::zero();
            for (w, c) in prod.terms() {
                for (l, r) in deconcat(w) {
                    lhs.add_term(l, r, c.clone());
                }
            }
            let mut rhs = Tensor2::zero();
            for (a1, a2) in deconcat(a) {
                for (b1, b2) in deconcat(b) {
                    let left = star.star_words(&a1, &b1);
                    let right = star.star_words(&a2, &b2);
                    rhs = rhs.add(&Tensor2::of(&left, &right));
                }
            }
            if lhs != rhs {
                report.morphism_violations.push((a.clone(), b.clone()));
            }
        }
    }

    for a in &all {
        for b in &all {
            for c in &all {
                if a.len() + b.len() + c.len() > max_len {
                    continue;
                }
                let ab_c = star.star(&star.star_words(a, b), &TensorElem::from_word(c.clone()));
                let a_bc = star.star(&TensorElem::from_word(a.clone()), &star.star_words(b, c));
                if ab_c != a_bc {
                    report
                        .associativity_violations
                        .push((a.clone(), b.clone(), c.clone()));
                }
            }
        }
    }

    // Coassociativity of the reduced coproduct: compare the two iterates as
    // maps into the threefold tensor product, encoded as (Word, Word, Word)
    // multisets.
    for w in &all {
        let mut left: BTreeMap<(Word, Word, Word), Rat> = BTreeMap::new();
        let mut right: BTreeMap<(Word, Word, Word), Rat> = BTreeMap::new();
        for (w1, w2) in deconcat_reduced(w) {
            for (u1, u2) in deconcat_reduced(&w1) {
                *left.entry((u1, u2, w2.clone())).or_insert_with(Rat::zero) += &Rat::one();
            }
            for (u1, u2) in deconcat_reduced(&w2) {
                *right.entry((w1.clone(), u1, u2)).or_insert_with(Rat::zero) += &Rat::one();
            }
        }
        left.retain(|_, c| !c.is_zero());
        right.retain(|_, c| !c.is_zero());
        if left != right {
            report.coassociativity_violations.push(w.clone());
        }
    }

    report
}

/// A user-supplied product given by an explicit table on basis words within
/// a length window, validated on construction: the table must cover every
/// pair with lengths summing to at most `max_len`, and the resulting product
/// must pass [`hopf_checks`] (unit, associativity, coproduct
/// multiplicativity, homogeneity) on that window.
#[derive(Debug, Clone)]
pub struct ProductTable {
    alphabet: usize,
    max_len: usize,
    name: String,
    entries: BTreeMap<(Word, Word), TensorElem>,
}

impl ProductTable {
    pub fn new(
        alphabet: usize,
        max_len: usize,
        name: impl Into<String>,
        entries: BTreeMap<(Word, Word), TensorElem>,
    ) -> Result<Self, DendriformError> {
        let all = words_in_range(alphabet, 1, max_len);
        for a in &all {
            for b in &all {
                if a.len() + b.len() <= max_len && !entries.contains_key(&(a.clone(), b.clone())) {
                    return Err(DendriformError::BadInput {
                        detail: format!("product table misses the pair ({a}, {b})"),
                    });
                }
            }
        }
        let table = ProductTable {
            alphabet,
            max_len,
            name: name.into(),
            entries,
        };
        let report = hopf_checks(&table, alphabet, max_len);
        if !report.is_clean() {
            return Err(DendriformError::HopfViolation {
                detail: format!(
                    "{} unit, {} associativity, {} coproduct-morphism, {} homogeneity violations",
                    report.unit_violations.len(),
                    report.associativity_violations.len(),
                    report.morphism_violations.len(),
                    report.homogeneity_violations.len()
                ),
            });
        }
        Ok(table)
    }

    pub fn alphabet(&self) -> usize {
        self.alphabet
    }

    pub fn max_len(&self) -> usize {
        self.max_len
    }
}

impl StarProduct for ProductTable {
    /// Table entries inside the window; the unit rule for empty words. Pairs
    /// outside the window have no defined product and return zero — callers
    /// stay within `max_len` by construction.
    fn star_words(&self, a: &Word, b: &Word) -> TensorElem {
        if a.is_empty() {
            return TensorElem::from_word(b.clone());
        }
        if b.is_empty() {
            return TensorElem::from_word(a.clone());
        }
        self.entries
            .get(&(a.clone(), b.clone()))
            .cloned()
            .unwrap_or_else(TensorElem::zero)
    }

    fn name(&self) -> &str {
        &self.name
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(letters: &[u32]) -> Word {
        Word::from_letters(letters)
    }

    #[test]
    fn deconcat_matches_the_splitting_formula() {
        // xy → (1, xy), (x, y), (xy, 1).
        let xy = w(&[0, 1]);
        assert_eq!(
            deconcat(&xy),
            vec![
                (Word::empty(), xy.clone()),
                (w(&[0]), w(&[1])),
                (xy.clone(), Word::empty()),
            ]
        );
        // Single letters are primitive: reduced coproduct empty.
        assert!(deconcat_reduced(&w(&[0])).is_empty());
        assert_eq!(deconcat(&w(&[0])).len(), 2);
        // Empty word: one splitting.
        assert_eq!(deconcat(&Word::empty()).len(), 1);
        assert_eq!(deconcat_reduced(&xy).len(), 1);
    }

    #[test]
    fn shuffle_small_examples() {
        // x ⧢ y = xy + yx.
        let s = shuffle(&w(&[0]), &w(&[1]));
        assert_eq!(s.num_terms(), 2);
        assert_eq!(s.coeff(&w(&[0, 1])), Rat::one());
        assert_eq!(s.coeff(&w(&[1, 0])), Rat::one());

        // xy ⧢ z = xyz + xzy + zxy.
        let s = shuffle(&w(&[0, 1]), &w(&[2]));
        assert_eq!(s.num_terms(), 3);
        for word in [[0, 1, 2], [0, 2, 1], [2, 0, 1]] {
            assert_eq!(s.coeff(&w(&word)), Rat::one());
        }

        // 1 ⧢ w = w.
        let s = shuffle(&Word::empty(), &w(&[0, 1]));
        assert_eq!(s, TensorElem::from_word(w(&[0, 1])));

        // Equal letters accumulate: x ⧢ x = 2·xx.
        let s = shuffle(&w(&[0]), &w(&[0]));
        assert_eq!(s.num_terms(), 1);
        assert_eq!(s.coeff(&w(&[0, 0])), Rat::from_int(2));
    }

    #[test]
    fn word_order_is_graded() {
        let mut words = [w(&[1]), w(&[0, 0]), w(&[0]), w(&[1, 0])];
        words.sort();
        assert_eq!(words, [w(&[0]), w(&[1]), w(&[0, 0]), w(&[1, 0])]);
        assert_eq!(words_in_range(2, 1, 2).len(), 2 + 4);
        assert_eq!(words_in_range(3, 2, 2).len(), 9);
    }

    #[test]
    fn shuffle_passes_the_hopf_checks_and_is_commutative() {
        let report = hopf_checks(&ShuffleProduct, 2, 4);
        assert!(report.is_clean(), "violations: {report:?}");

        // Commutativity is specific to the shuffle (not part of the Hopf
        // checks): exhaustive on pairs with lengths summing to ≤ 4.
        let all = words_in_range(2, 1, 3);
        for a in &all {
            for b in &all {
                if a.len() + b.len() <= 4 {
                    assert_eq!(shuffle(a, b), shuffle(b, a));
                }
            }
        }
    }

    #[test]
    fn degree_at_least_two_is_a_left_ideal_for_shuffle() {
        // x ⧢ w has no degree-1 terms when l(w) ≥ 2 (all terms have length
        // l(x) + l(w)); exhaustive with lengths summing to ≤ 4.
        let all = words_in_range(2, 1, 3);
        for x in &all {
            for target in words_in_range(2, 2, 3) {
                if x.len() + target.len() > 4 {
                    continue;
                }
                let prod = shuffle(x, &target);
                assert!(prod.min_len().is_some_and(|l| l >= 2));
            }
        }
    }

    #[test]
    fn tensor_arithmetic_keeps_no_zero_terms() {
        let a = TensorElem::from_word(w(&[0]));
        let diff = a.sub(&a);
        assert!(diff.is_zero());
        assert_eq!(diff.num_terms(), 0);
        let combo = a.scale(&Rat::new(2, 3)).add(&a.scale(&Rat::new(-2, 3)));
        assert!(combo.is_zero());
        assert_eq!(a.scale(&Rat::zero()), TensorElem::zero());
    }

    #[test]
    fn product_table_of_shuffle_validates_and_reproduces_it() {
        let all = words_in_range(2, 1, 3);
        let mut entries = BTreeMap::new();
        for a in &all {
            for b in &all {
                if a.len() + b.len() <= 3 {
                    entries.insert((a.clone(), b.clone()), shuffle(a, b));
                }
            }
        }
        let table = ProductTable::new(2, 3, "tabulated shuffle", entries).unwrap();
        assert_eq!(table.star_words(&w(&[0]), &w(&[1])), shuffle(&w(&[0]), &w(&[1])));
        assert_eq!(
            table.star_words(&Word::empty(), &w(&[0, 1])),
            TensorElem::from_word(w(&[0, 1]))
        );
    }

    #[test]
    fn product_table_rejects_a_non_hopf_product() {
        // Concatenation is associative and unital but deconcatenation is not
        // multiplicative for it (the morphism check fails), so the table
        // must be rejected.
        let all = words_in_range(2, 1, 3);
        let mut entries = BTreeMap::new();
        for a in &all {
            for b in &all {
                if a.len() + b.len() <= 3 {
                    entries.insert(
                        (a.clone(), b.clone()),
                        TensorElem::from_word(a.concat(b)),
                    );
                }
            }
        }
        let err = ProductTable::new(2, 3, "concatenation", entries).unwrap_err();
        assert!(matches!(err, DendriformError::HopfViolation { .. }));
    }

    #[test]
    fn product_table_rejects_missing_pairs() {
        let err = ProductTable::new(2, 2, "empty", BTreeMap::new()).unwrap_err();
        assert!(matches!(err, DendriformError::BadInput { .. }));
    }

    #[test]
    fn display_renders_words_and_elements() {
        assert_eq!(w(&[0, 1, 2]).to_string(), "abc");
        assert_eq!(Word::empty().to_string(), "1");
        let e = TensorElem::from_term(w(&[1, 0]), Rat::from_int(2))
            .add(&TensorElem::from_word(w(&[0])));
        assert_eq!(e.to_string(), "1*a + 2*ba");
        assert_eq!(TensorElem::zero().to_string(), "0");
    }
}
