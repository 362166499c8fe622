//! Frozen expected values: the catalogued small-module table, the
//! decomposition-count instances, and the default family bounds for the
//! not-prelie pipeline.
//!
//! These are the *expected* answers the claims compare live computations
//! against. They are data, deliberately spelled out row by row; a disagreement
//! between this file and the generating code is a refutation, never something
//! to patch silently on one side.

use crate::catalog::{LieFamily, Weight};

/// One catalogued family: its small modules as `(highest weight, dimension)`
/// rows, sorted by weight (first coordinate most significant) — the exact
/// order `small_modules` emits.
#[derive(Debug, Clone)]
pub struct CatalogueRow {
    pub family: LieFamily,
    pub smalls: Vec<(Weight, u64)>,
}

fn row(family: LieFamily, smalls: &[(&[u32], u64)]) -> CatalogueRow {
    CatalogueRow {
        family,
        smalls: smalls.iter().map(|(w, d)| (w.to_vec(), *d)).collect(),
    }
}

/// The full frozen table of small modules, every tabulated family instance.
///
/// Classical families follow the generic patterns — standard and its dual
/// (`n`), second wedge and dual (`n(n−1)/2`), symmetric square and dual
/// (`n(n+1)/2`) for the special linear family, with wedge powers entering at
/// low rank; vector plus (half-)spin modules for the orthogonal families
/// until the spin dimension `2^k` outgrows `dim g`; vector plus the
/// `(2n+1)(n−1)`-dimensional module for the symplectic family. Exceptional
/// families carry their single catalogued small module (none for the largest
/// one).
pub fn catalogued_rows() -> Vec<CatalogueRow> {
    vec![
        row(LieFamily::Sl(2), &[(&[1], 2)]),
        row(
            LieFamily::Sl(3),
            &[(&[0, 1], 3), (&[0, 2], 6), (&[1, 0], 3), (&[2, 0], 6)],
        ),
        row(
            LieFamily::Sl(4),
            &[
                (&[0, 0, 1], 4),
                (&[0, 0, 2], 10),
                (&[0, 1, 0], 6),
                (&[1, 0, 0], 4),
                (&[2, 0, 0], 10),
            ],
        ),
        row(
            LieFamily::Sl(5),
            &[
                (&[0, 0, 0, 1], 5),
                (&[0, 0, 0, 2], 15),
                (&[0, 0, 1, 0], 10),
                (&[0, 1, 0, 0], 10),
                (&[1, 0, 0, 0], 5),
                (&[2, 0, 0, 0], 15),
            ],
        ),
        row(
            LieFamily::Sl(6),
            &[
                (&[0, 0, 0, 0, 1], 6),
                (&[0, 0, 0, 0, 2], 21),
                (&[0, 0, 0, 1, 0], 15),
                (&[0, 0, 1, 0, 0], 20),
                (&[0, 1, 0, 0, 0], 15),
                (&[1, 0, 0, 0, 0], 6),
                (&[2, 0, 0, 0, 0], 21),
            ],
        ),
        row(
            LieFamily::Sl(7),
            &[
                (&[0, 0, 0, 0, 0, 1], 7),
                (&[0, 0, 0, 0, 0, 2], 28),
                (&[0, 0, 0, 0, 1, 0], 21),
                (&[0, 0, 0, 1, 0, 0], 35),
                (&[0, 0, 1, 0, 0, 0], 35),
                (&[0, 1, 0, 0, 0, 0], 21),
                (&[1, 0, 0, 0, 0, 0], 7),
                (&[2, 0, 0, 0, 0, 0], 28),
            ],
        ),
        row(
            LieFamily::Sl(8),
            &[
                (&[0, 0, 0, 0, 0, 0, 1], 8),
                (&[0, 0, 0, 0, 0, 0, 2], 36),
                (&[0, 0, 0, 0, 0, 1, 0], 28),
                (&[0, 0, 0, 0, 1, 0, 0], 56),
                (&[0, 0, 1, 0, 0, 0, 0], 56),
                (&[0, 1, 0, 0, 0, 0, 0], 28),
                (&[1, 0, 0, 0, 0, 0, 0], 8),
                (&[2, 0, 0, 0, 0, 0, 0], 36),
            ],
        ),
        row(
            LieFamily::Sl(9),
            &[
                (&[0, 0, 0, 0, 0, 0, 0, 1], 9),
                (&[0, 0, 0, 0, 0, 0, 0, 2], 45),
                (&[0, 0, 0, 0, 0, 0, 1, 0], 36),
                (&[0, 1, 0, 0, 0, 0, 0, 0], 36),
                (&[1, 0, 0, 0, 0, 0, 0, 0], 9),
                (&[2, 0, 0, 0, 0, 0, 0, 0], 45),
            ],
        ),
        row(LieFamily::Sp(4), &[(&[0, 1], 5), (&[1, 0], 4)]),
        row(
            LieFamily::Sp(6),
            &[(&[0, 0, 1], 14), (&[0, 1, 0], 14), (&[1, 0, 0], 6)],
        ),
        row(LieFamily::Sp(8), &[(&[0, 1, 0, 0], 27), (&[1, 0, 0, 0], 8)]),
        row(
            LieFamily::Sp(10),
            &[(&[0, 1, 0, 0, 0], 44), (&[1, 0, 0, 0, 0], 10)],
        ),
        row(LieFamily::SoOdd(5), &[(&[0, 1], 4), (&[1, 0], 5)]),
        row(LieFamily::SoOdd(7), &[(&[0, 0, 1], 8), (&[1, 0, 0], 7)]),
        row(
            LieFamily::SoOdd(9),
            &[(&[0, 0, 0, 1], 16), (&[1, 0, 0, 0], 9)],
        ),
        row(
            LieFamily::SoOdd(11),
            &[(&[0, 0, 0, 0, 1], 32), (&[1, 0, 0, 0, 0], 11)],
        ),
        row(
            LieFamily::SoOdd(13),
            &[(&[0, 0, 0, 0, 0, 1], 64), (&[1, 0, 0, 0, 0, 0], 13)],
        ),
        row(LieFamily::SoOdd(15), &[(&[1, 0, 0, 0, 0, 0, 0], 15)]),
        row(
            LieFamily::SoEven(6),
            &[
                (&[0, 0, 1], 4),
                (&[0, 0, 2], 10),
                (&[0, 1, 0], 4),
                (&[0, 2, 0], 10),
                (&[1, 0, 0], 6),
            ],
        ),
        row(
            LieFamily::SoEven(8),
            &[
                (&[0, 0, 0, 1], 8),
                (&[0, 0, 1, 0], 8),
                (&[1, 0, 0, 0], 8),
            ],
        ),
        row(
            LieFamily::SoEven(10),
            &[
                (&[0, 0, 0, 0, 1], 16),
                (&[0, 0, 0, 1, 0], 16),
                (&[1, 0, 0, 0, 0], 10),
            ],
        ),
        row(
            LieFamily::SoEven(12),
            &[
                (&[0, 0, 0, 0, 0, 1], 32),
                (&[0, 0, 0, 0, 1, 0], 32),
                (&[1, 0, 0, 0, 0, 0], 12),
            ],
        ),
        row(
            LieFamily::SoEven(14),
            &[
                (&[0, 0, 0, 0, 0, 0, 1], 64),
                (&[0, 0, 0, 0, 0, 1, 0], 64),
                (&[1, 0, 0, 0, 0, 0, 0], 14),
            ],
        ),
        row(LieFamily::SoEven(16), &[(&[1, 0, 0, 0, 0, 0, 0, 0], 16)]),
        row(LieFamily::G2, &[(&[1, 0], 7)]),
        row(LieFamily::F4, &[(&[1, 0, 0, 0], 26)]),
        row(LieFamily::E6, &[(&[1, 0, 0, 0, 0, 0], 27)]),
        row(LieFamily::E7, &[(&[1, 0, 0, 0, 0, 0, 0], 56)]),
        row(LieFamily::E8, &[]),
    ]
}

/// One decomposition-count instance: which multisets of small-module
/// dimensions sum to `dim g`.
#[derive(Debug, Clone)]
pub struct NumerologyInstance {
    pub family: LieFamily,
    pub target: u64,
    pub dims: Vec<u64>,
    /// Expected multisets, each ascending, list in lexicographic order.
    pub expected: Vec<Vec<u64>>,
}

fn instance(
    family: LieFamily,
    target: u64,
    dims: &[u64],
    expected: &[&[u64]],
) -> NumerologyInstance {
    NumerologyInstance {
        family,
        target,
        dims: dims.to_vec(),
        expected: expected.iter().map(|d| d.to_vec()).collect(),
    }
}

/// The frozen decomposition-count instances. Empty expectations certify that
/// no candidate module of the right dimension exists at all; the two
/// nonempty ones are exactly the cases that need an explicit obstruction.
pub fn numerology_instances() -> Vec<NumerologyInstance> {
    vec![
        instance(LieFamily::Sl(9), 80, &[9, 36, 45], &[]),
        instance(LieFamily::Sp(8), 36, &[8, 27], &[]),
        instance(LieFamily::SoEven(12), 66, &[12, 32], &[]),
        instance(LieFamily::Sp(6), 21, &[6, 14], &[]),
        instance(LieFamily::E6, 78, &[27], &[]),
        instance(LieFamily::E7, 133, &[56], &[]),
        instance(LieFamily::E8, 248, &[], &[]),
        instance(LieFamily::Sl(6), 35, &[6, 15, 20, 21], &[&[15, 20]]),
        instance(LieFamily::G2, 14, &[7], &[&[7, 7]]),
    ]
}

/// Default family bounds for the not-prelie pipeline: every classical
/// instance small enough to settle within the default budgets, plus all five
/// exceptional families. Larger instances remain reachable through the
/// individual operations (the odd orthogonal witness accepts any block size).
pub fn pipeline_families() -> Vec<LieFamily> {
    vec![
        LieFamily::Sl(2),
        LieFamily::Sl(3),
        LieFamily::Sl(4),
        LieFamily::Sl(5),
        LieFamily::Sl(6),
        LieFamily::Sl(7),
        LieFamily::Sl(8),
        LieFamily::Sl(9),
        LieFamily::SoOdd(5),
        LieFamily::SoEven(6),
        LieFamily::SoOdd(7),
        LieFamily::SoEven(8),
        LieFamily::SoOdd(9),
        LieFamily::SoEven(10),
        LieFamily::SoEven(12),
        LieFamily::SoEven(14),
        LieFamily::SoEven(16),
        LieFamily::Sp(4),
        LieFamily::Sp(6),
        LieFamily::Sp(8),
        LieFamily::Sp(10),
        LieFamily::G2,
        LieFamily::F4,
        LieFamily::E6,
        LieFamily::E7,
        LieFamily::E8,
    ]
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn frozen_rows_are_internally_consistent() {
        let rows = catalogued_rows();
        // one row per family, weights sorted and strictly increasing,
        // dimensions strictly below dim g, weight lengths equal the rank
        for r in &rows {
            let rank = r.family.rank();
            let dim_g = r.family.dim();
            for (w, d) in &r.smalls {
                assert_eq!(w.len(), rank, "{}", r.family);
                assert!(*d < dim_g, "{}: {d} not below {dim_g}", r.family);
            }
            for pair in r.smalls.windows(2) {
                assert!(pair[0].0 < pair[1].0, "{} rows out of order", r.family);
            }
        }
        let mut families: Vec<String> = rows.iter().map(|r| r.family.to_string()).collect();
        families.sort();
        families.dedup();
        assert_eq!(families.len(), rows.len());
    }

    #[test]
    fn numerology_targets_equal_family_dimensions() {
        for inst in numerology_instances() {
            assert_eq!(inst.target, inst.family.dim(), "{}", inst.family);
            // expected multisets really sum to the target and use listed dims
            for m in &inst.expected {
                assert_eq!(m.iter().sum::<u64>(), inst.target);
                assert!(m.iter().all(|d| inst.dims.contains(d)));
            }
        }
    }

    #[test]
    fn pipeline_bounds_are_covered_by_the_frozen_table() {
        let tabulated: Vec<LieFamily> = catalogued_rows().iter().map(|r| r.family).collect();
        for f in pipeline_families() {
            assert!(tabulated.contains(&f), "{f} missing from the frozen table");
        }
    }
}
