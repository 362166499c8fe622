//! Half-products induced by a Hopf product on the word coalgebra.
//!
//! Given an associative product `∗` for which deconcatenation is
//! multiplicative and the span of words of length ≥ 2 is a left ideal, the
//! closed form
//!
//! ```text
//! (v₁…v_n) ≺ w = ((v₁…v_{n−1}) ∗ w)·v_n      (single letter: v ≺ w = w·v)
//! ```
//!
//! and its complement `≻ = ∗ − ≺` split the product into a dendriform pair:
//! the five axioms checked by [`dendriform_axiom_check`] hold. This file
//! carries that construction plus the nested-product word map, the induced
//! brace products, and the decomposition/left-ideal rank checks.

use serde::Serialize;

use super::{
    deconcat_reduced, reduced_coproduct, words_in_range, DendriformError, StarProduct, Tensor2,
    TensorElem, Word,
};
use crate::exactmath::Rat;
use crate::symlinalg::{bareiss_rank, LinAlgError, Mat};

/// The left half-product of `star` on two nonempty words: the product of
/// `a`'s prefix with `b`, concatenated with `a`'s last letter. For a single
/// letter `v` the prefix is empty and this reduces to `v ≺ w = w·v`.
pub fn prec_from_star(
    star: &dyn StarProduct,
    a: &Word,
    b: &Word,
) -> Result<TensorElem, DendriformError> {
    if a.is_empty() || b.is_empty() {
        return Err(DendriformError::BadInput {
            detail: "half-products are defined on nonempty words only".into(),
        });
    }
    let (prefix, last) = a.split_last().expect("nonempty word splits");
    let mut out = TensorElem::zero();
    for (w, c) in star.star_words(&prefix, b).terms() {
        out.add_term(w.push_letter(last), c.clone());
    }
    Ok(out)
}

/// The right half-product: `a ≻ b = a ∗ b − a ≺ b` on nonempty words.
pub fn succ_from_star(
    star: &dyn StarProduct,
    a: &Word,
    b: &Word,
) -> Result<TensorElem, DendriformError> {
    Ok(star.star_words(a, b).sub(&prec_from_star(star, a, b)?))
}

/// Bilinear extension of a half-product to algebra elements.
fn lift(
    f: &dyn Fn(&Word, &Word) -> TensorElem,
    x: &TensorElem,
    y: &TensorElem,
) -> TensorElem {
    let mut out = TensorElem::zero();
    for (wx, cx) in x.terms() {
        for (wy, cy) in y.terms() {
            out = out.add(&f(wx, wy).scale(&(cx * cy)));
        }
    }
    out
}

/// One failed axiom instance, with both sides rendered exactly.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Violation {
    /// Axiom number 1–5.
    pub axiom: u8,
    /// The instantiating words: three for axioms 1–3, two for 4–5.
    pub words: Vec<Word>,
    pub lhs: String,
    pub rhs: String,
}

/// Exhaustively checks the five dendriform axioms for a pair of
/// half-products, on all word tuples over `alphabet` letters with lengths
/// summing to at most `max_len`; `star` is reconstructed as `prec + succ`.
///
/// The three product axioms on triples `(x, y, z)`:
///
/// ```text
/// (x ≺ y) ≺ z = x ≺ (y ∗ z)          (1)
/// (x ≻ y) ≺ z = x ≻ (y ≺ z)          (2)
/// (x ∗ y) ≻ z = x ≻ (y ≻ z)          (3)
/// ```
///
/// and the two coproduct compatibilities on pairs `(a, b)`, where `(a′, a″)`
/// runs over the reduced coproduct of `a` (analogously for `b`):
///
/// ```text
/// Δ̃(a ≺ b) = a′∗b′ ⊗ a″≺b″ + a′∗b ⊗ a″ + b′ ⊗ a≺b″ + a′ ⊗ a″≺b + b ⊗ a   (4)
/// Δ̃(a ≻ b) = a′∗b′ ⊗ a″≻b″ + a∗b′ ⊗ b″ + b′ ⊗ a≻b″ + a′ ⊗ a″≻b + a ⊗ b   (5)
/// ```
///
/// Every violated instance is returned with both sides; an empty result
/// means the pair is dendriform on the window.
pub fn dendriform_axiom_check(
    prec: &dyn Fn(&Word, &Word) -> TensorElem,
    succ: &dyn Fn(&Word, &Word) -> TensorElem,
    alphabet: usize,
    max_len: usize,
) -> Vec<Violation> {
    let star = |a: &Word, b: &Word| prec(a, b).add(&succ(a, b));
    let word_elem = |w: &Word| TensorElem::from_word(w.clone());
    let mut violations = Vec::new();
    let all = words_in_range(alphabet, 1, max_len);

    for x in &all {
        for y in &all {
            for z in &all {
                if x.len() + y.len() + z.len() > max_len {
                    continue;
                }
                let ze = word_elem(z);
                let xe = word_elem(x);

                let lhs1 = lift(&prec, &prec(x, y), &ze);
                let rhs1 = lift(&prec, &xe, &star(y, z));
                if lhs1 != rhs1 {
                    violations.push(Violation {
                        axiom: 1,
                        words: vec![x.clone(), y.clone(), z.clone()],
                        lhs: lhs1.to_string(),
                        rhs: rhs1.to_string(),
                    });
                }

                let lhs2 = lift(&prec, &succ(x, y), &ze);
                let rhs2 = lift(&succ, &xe, &prec(y, z));
                if lhs2 != rhs2 {
                    violations.push(Violation {
                        axiom: 2,
                        words: vec![x.clone(), y.clone(), z.clone()],
                        lhs: lhs2.to_string(),
                        rhs: rhs2.to_string(),
                    });
                }

                let lhs3 = lift(&succ, &star(x, y), &ze);
                let rhs3 = lift(&succ, &xe, &succ(y, z));
                if lhs3 != rhs3 {
                    violations.push(Violation {
                        axiom: 3,
                        words: vec![x.clone(), y.clone(), z.clone()],
                        lhs: lhs3.to_string(),
                        rhs: rhs3.to_string(),
                    });
                }
            }
        }
    }

    for a in &all {
        for b in &all {
            if a.len() + b.len() > max_len {
                continue;
            }
            let da = deconcat_reduced(a);
            let db = deconcat_reduced(b);

            let lhs4 = reduced_coproduct(&prec(a, b));
            let mut rhs4 = Tensor2::zero();
            for (a1, a2) in &da {
                for (b1, b2) in &db {
                    rhs4 = rhs4.add(&Tensor2::of(&star(a1, b1), &prec(a2, b2)));
                }
                rhs4 = rhs4.add(&Tensor2::of(&star(a1, b), &word_elem(a2)));
                rhs4 = rhs4.add(&Tensor2::of(&word_elem(a1), &prec(a2, b)));
            }
            for (b1, b2) in &db {
                rhs4 = rhs4.add(&Tensor2::of(&word_elem(b1), &prec(a, b2)));
            }
            rhs4.add_term(b.clone(), a.clone(), Rat::one());
            if lhs4 != rhs4 {
                violations.push(Violation {
                    axiom: 4,
                    words: vec![a.clone(), b.clone()],
                    lhs: lhs4.to_string(),
                    rhs: rhs4.to_string(),
                });
            }

            let lhs5 = reduced_coproduct(&succ(a, b));
            let mut rhs5 = Tensor2::zero();
            for (a1, a2) in &da {
                for (b1, b2) in &db {
                    rhs5 = rhs5.add(&Tensor2::of(&star(a1, b1), &succ(a2, b2)));
                }
                rhs5 = rhs5.add(&Tensor2::of(&word_elem(a1), &succ(a2, b)));
            }
            for (b1, b2) in &db {
                rhs5 = rhs5.add(&Tensor2::of(&star(a, b1), &word_elem(b2)));
                rhs5 = rhs5.add(&Tensor2::of(&word_elem(b1), &succ(a, b2)));
            }
            rhs5.add_term(a.clone(), b.clone(), Rat::one());
            if lhs5 != rhs5 {
                violations.push(Violation {
                    axiom: 5,
                    words: vec![a.clone(), b.clone()],
                    lhs: lhs5.to_string(),
                    rhs: rhs5.to_string(),
                });
            }
        }
    }

    violations
}

/// How many base instances [`dendriform_axiom_check`] enumerates on a window:
/// `(triples, pairs)`, where each word triple with `|x|+|y|+|z| ≤ max_len`
/// exercises the three half-product equations and each word pair with
/// `|a|+|b| ≤ max_len` exercises the two coproduct compatibilities.
pub fn axiom_instance_counts(alphabet: usize, max_len: usize) -> (usize, usize) {
    let all = words_in_range(alphabet, 1, max_len);
    let mut triples = 0;
    let mut pairs = 0;
    for x in &all {
        for y in &all {
            if x.len() + y.len() <= max_len {
                pairs += 1;
            }
            for z in &all {
                if x.len() + y.len() + z.len() <= max_len {
                    triples += 1;
                }
            }
        }
    }
    (triples, pairs)
}

/// The nested half-product of single letters:
///
/// ```text
/// ω(v₁, …, v_n) = v_n ≺ (v_{n−1} ≺ (⋯ ≺ (v₂ ≺ v₁)…))
/// ```
///
/// For the shuffle-derived pair this is the concatenation word `v₁…v_n`, so
/// the word-to-algebra map it induces is the identity.
pub fn omega_word(star: &dyn StarProduct, letters: &[u32]) -> Result<TensorElem, DendriformError> {
    let Some((&first, rest)) = letters.split_first() else {
        return Err(DendriformError::BadInput {
            detail: "the nested half-product needs at least one letter".into(),
        });
    };
    let mut acc = TensorElem::from_word(Word::single(first));
    for &letter in rest {
        let left = Word::single(letter);
        let mut next = TensorElem::zero();
        for (w, c) in acc.terms() {
            next = next.add(&prec_from_star(star, &left, w)?.scale(c));
        }
        acc = next;
    }
    Ok(acc)
}

/// Concatenation product of two algebra elements, expanded multilinearly.
fn concat_bilinear(x: &TensorElem, y: &TensorElem) -> TensorElem {
    let mut out = TensorElem::zero();
    for (wx, cx) in x.terms() {
        for (wy, cy) in y.terms() {
            out.add_term(wx.concat(wy), cx * cy);
        }
    }
    out
}

/// The brace product of primitive elements:
///
/// ```text
/// ⟨a₁, …, a_n⟩ = π_V((a₁ ⋯ a_{n−1}) ∗ a_n)
/// ```
///
/// where `a₁ ⋯ a_{n−1}` is the concatenation (an element of the `(n−1)`-th
/// graded piece) and `π_V` projects onto single letters. Requires `n ≥ 2`
/// and all arguments primitive. For the shuffle product every brace
/// vanishes: all shuffle terms have length `n ≥ 2`.
pub fn brace_product(
    star: &dyn StarProduct,
    args: &[TensorElem],
) -> Result<TensorElem, DendriformError> {
    if args.len() < 2 {
        return Err(DendriformError::BadInput {
            detail: format!("brace products need at least 2 arguments, got {}", args.len()),
        });
    }
    for (i, a) in args.iter().enumerate() {
        if !a.is_primitive() {
            return Err(DendriformError::NotPrimitive {
                detail: format!("argument {i} has words of length != 1: {a}"),
            });
        }
    }
    let mut word_part = args[0].clone();
    for a in &args[1..args.len() - 1] {
        word_part = concat_bilinear(&word_part, a);
    }
    Ok(star.star(&word_part, &args[args.len() - 1]).primitive_part())
}

/// Checks the decomposition and left-ideal structure of the half-product
/// span, exhaustively on the window of words of length ≤ `max_len` over
/// `alphabet` letters, by exact rank computations:
///
/// 1. the span of `{a ≺ b}` contains no primitive component and has full
///    rank on the words of length ≥ 2 — so the augmentation part decomposes
///    as primitives ⊕ span;
/// 2. every product `x ∗ (y ≺ z)` lies back in the span (left ideal).
///
/// Errors on a product that leaves the window (the construction presumes
/// length-homogeneous products, which [`super::ProductTable`] enforces).
pub fn prop30_checks(
    star: &dyn StarProduct,
    alphabet: usize,
    max_len: usize,
) -> Result<bool, DendriformError> {
    if alphabet == 0 || max_len < 2 {
        return Err(DendriformError::BadInput {
            detail: format!(
                "need a nonempty alphabet and max_len >= 2, got alphabet {alphabet}, max_len {max_len}"
            ),
        });
    }
    let basis = words_in_range(alphabet, 1, max_len);
    let dim = basis.len();
    let n_prim = alphabet;
    let to_vec = |t: &TensorElem| -> Result<Vec<Rat>, DendriformError> {
        let mut v = vec![Rat::zero(); dim];
        for (w, c) in t.terms() {
            match basis.binary_search(w) {
                Ok(i) => v[i] = c.clone(),
                Err(_) => {
                    return Err(DendriformError::BadInput {
                        detail: format!("product term {w} leaves the length-{max_len} window"),
                    })
                }
            }
        }
        Ok(v)
    };

    // Span of all half-products within the window.
    let mut span_rows: Vec<Vec<Rat>> = Vec::new();
    for a in &basis {
        for b in &basis {
            if a.len() + b.len() <= max_len {
                span_rows.push(to_vec(&prec_from_star(star, a, b)?)?);
            }
        }
    }
    let no_primitive_leak = span_rows
        .iter()
        .all(|row| row[..n_prim].iter().all(Rat::is_zero));
    let span = Mat::from_fn(span_rows.len(), dim, |r, c| span_rows[r][c].clone());
    let span_rank = bareiss_rank(&span).map_err(linalg)?.rank;
    let covers_degree_two_and_up = span_rank == dim - n_prim;

    // Left ideal: stack every x ∗ (y ≺ z) under the span; the rank must not
    // grow.
    let mut product_rows: Vec<Vec<Rat>> = Vec::new();
    for x in &basis {
        for y in &basis {
            for z in &basis {
                if x.len() + y.len() + z.len() > max_len {
                    continue;
                }
                let inner = prec_from_star(star, y, z)?;
                let prod = star.star(&TensorElem::from_word(x.clone()), &inner);
                product_rows.push(to_vec(&prod)?);
            }
        }
    }
    let ideal_ok = if product_rows.is_empty() {
        true
    } else {
        let products = Mat::from_fn(product_rows.len(), dim, |r, c| product_rows[r][c].clone());
        let stacked = span.vcat(&products).map_err(linalg)?;
        bareiss_rank(&stacked).map_err(linalg)?.rank == span_rank
    };

    Ok(no_primitive_leak && covers_degree_two_and_up && ideal_ok)
}

fn linalg(e: LinAlgError) -> DendriformError {
    DendriformError::BadInput {
        detail: format!("exact linear algebra failed: {e}"),
    }
}
