//! Reference values published in the literature for the six Ramsey variants.
//!
//! The toolkit never treats these as ground truth: computed verdicts are
//! compared against them and disagreements are flagged. One printed cell,
//! w(4,3) = 6, is inconsistent with the chain s(m,n) <= w(m,n) and
//! s(4,3) = 8; the comparison machinery exists largely to surface it.

use crate::variant::{RamseyVariant, VariantLetter};

/// The `(m, n)` rows of the published table, in print order.
pub const PUBLISHED_ROWS: [(usize, usize); 12] = [
    (3, 3),
    (3, 4),
    (4, 3),
    (3, 5),
    (5, 3),
    (3, 6),
    (6, 3),
    (3, 7),
    (7, 3),
    (3, 8),
    (8, 3),
    (4, 4),
];

/// Printed value for a variant, if the table gives an exact one. Cells the
/// table only bounds (t and v at (7,3) and (8,3)) return `None`, as does the
/// r-column cell of the (4,4) row, whose printed label repeats r(3,4) with a
/// contradictory value.
pub fn published_value(v: &RamseyVariant) -> Option<usize> {
    use VariantLetter::*;
    let val = match (v.letter, v.m, v.n) {
        (S, 3, 3) | (W, 3, 3) | (U, 3, 3) | (T, 3, 3) | (V, 3, 3) | (R, 3, 3) => 6,
        (S, 3, 4) | (W, 3, 4) | (U, 3, 4) => 8,
        (T, 3, 4) | (V, 3, 4) | (R, 3, 4) => 9,
        (W, 4, 3) => 6,
        (S, 4, 3) | (U, 4, 3) | (T, 4, 3) | (V, 4, 3) => 8,
        (R, 4, 3) => 9,
        (S, 3, 5) | (W, 3, 5) | (U, 3, 5) | (T, 3, 5) | (V, 3, 5) => 12,
        (R, 3, 5) => 14,
        (S, 5, 3) | (W, 5, 3) | (U, 5, 3) => 12,
        (T, 5, 3) | (V, 5, 3) => 13,
        (R, 5, 3) => 14,
        (S, 3, 6) | (W, 3, 6) | (U, 3, 6) | (T, 3, 6) | (V, 3, 6) => 15,
        (S, 6, 3) | (W, 6, 3) | (U, 6, 3) | (T, 6, 3) | (V, 6, 3) => 15,
        (R, 3, 6) | (R, 6, 3) => 18,
        (S, 3, 7) | (W, 3, 7) | (U, 3, 7) | (T, 3, 7) | (V, 3, 7) => 18,
        (S, 7, 3) | (W, 7, 3) | (U, 7, 3) => 18,
        (R, 3, 7) | (R, 7, 3) => 23,
        (S, 3, 8) | (W, 3, 8) | (U, 3, 8) => 21,
        (T, 3, 8) | (V, 3, 8) => 22,
        (S, 8, 3) | (W, 8, 3) | (U, 8, 3) => 21,
        (R, 3, 8) | (R, 8, 3) => 28,
        (S, 4, 4) | (W, 4, 4) | (U, 4, 4) => 13,
        (T, 4, 4) | (V, 4, 4) => 14,
        _ => return None,
    };
    Some(val)
}
