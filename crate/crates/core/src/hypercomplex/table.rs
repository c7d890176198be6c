//! Signed multiplication table of the octonion basis `e0..e7`.
//!
//! The table is generated from the seven oriented triples `(i, j, k)` with
//! `f_ijk = +1`; every other nonzero structure constant follows from total
//! antisymmetry. The quaternion units `e1, e2, e3` form the first triple, so
//! the quaternion table is the upper-left 4×4 block.

use std::fmt;

/// Oriented triples with `f_ijk = +1`.
pub const OCTONION_TRIPLES: [[usize; 3]; 7] = [
    [1, 2, 3],
    [1, 4, 5],
    [2, 4, 6],
    [3, 4, 7],
    [6, 1, 7],
    [7, 2, 5],
    [5, 3, 6],
];

/// `e_i e_j = sign * e_index`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct BasisProduct {
    pub sign: i8,
    pub index: usize,
}

impl BasisProduct {
    const UNSET: BasisProduct = BasisProduct { sign: 0, index: 0 };
}

impl fmt::Display for BasisProduct {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sign = if self.sign < 0 { '-' } else { '+' };
        write!(f, "{sign}e{}", self.index)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StructureConstants {
    table: [[BasisProduct; 8]; 8],
}

impl StructureConstants {
    pub const fn octonion() -> Self {
        let mut table = [[BasisProduct::UNSET; 8]; 8];
        let mut i = 0;
        while i < 8 {
            table[0][i] = BasisProduct { sign: 1, index: i };
            table[i][0] = BasisProduct { sign: 1, index: i };
            if i > 0 {
                table[i][i] = BasisProduct { sign: -1, index: 0 };
            }
            i += 1;
        }
        let mut t = 0;
        while t < OCTONION_TRIPLES.len() {
            let [a, b, c] = OCTONION_TRIPLES[t];
            // cyclic rotations are +1, transpositions -1
            table[a][b] = BasisProduct { sign: 1, index: c };
            table[b][c] = BasisProduct { sign: 1, index: a };
            table[c][a] = BasisProduct { sign: 1, index: b };
            table[b][a] = BasisProduct { sign: -1, index: c };
            table[c][b] = BasisProduct { sign: -1, index: a };
            table[a][c] = BasisProduct { sign: -1, index: b };
            t += 1;
        }
        StructureConstants { table }
    }

    #[inline]
    pub fn product(&self, i: usize, j: usize) -> BasisProduct {
        self.table[i][j]
    }

    /// The structure constant `f_ijk` for imaginary indices `1..=7`.
    pub fn f(&self, i: usize, j: usize, k: usize) -> i8 {
        assert!((1..8).contains(&i) && (1..8).contains(&j) && (1..8).contains(&k));
        let p = self.table[i][j];
        if i != j && p.index == k {
            p.sign
        } else {
            0
        }
    }
}

pub static OCTONION_TABLE: StructureConstants = StructureConstants::octonion();

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn every_cell_is_set() {
        for i in 0..8 {
            for j in 0..8 {
                assert_ne!(OCTONION_TABLE.product(i, j).sign, 0, "cell ({i},{j})");
            }
        }
    }

    #[test]
    fn listed_examples() {
        let t = &OCTONION_TABLE;
        assert_eq!(t.product(1, 2), BasisProduct { sign: 1, index: 3 });
        assert_eq!(t.product(2, 4), BasisProduct { sign: 1, index: 6 });
        assert_eq!(t.product(7, 2), BasisProduct { sign: 1, index: 5 });
        assert_eq!(t.product(2, 1), BasisProduct { sign: -1, index: 3 });
    }

    #[test]
    fn total_antisymmetry() {
        let t = &OCTONION_TABLE;
        for i in 1..8 {
            for j in 1..8 {
                for k in 1..8 {
                    let f = t.f(i, j, k);
                    assert_eq!(f, -t.f(j, i, k));
                    assert_eq!(f, -t.f(i, k, j));
                    assert_eq!(f, t.f(j, k, i));
                }
            }
        }
    }

    #[test]
    fn exactly_seven_positive_cyclic_classes() {
        let t = &OCTONION_TABLE;
        let mut positive = 0;
        for i in 1..8 {
            for j in 1..8 {
                for k in 1..8 {
                    if t.f(i, j, k) == 1 {
                        positive += 1;
                    }
                }
            }
        }
        // 7 triples, 3 cyclic orientations each
        assert_eq!(positive, 21);
        for [a, b, c] in OCTONION_TRIPLES {
            assert_eq!(t.f(a, b, c), 1);
        }
    }

    #[test]
    fn rows_are_signed_permutations() {
        for i in 0..8 {
            let mut seen = [false; 8];
            for j in 0..8 {
                seen[OCTONION_TABLE.product(i, j).index] = true;
            }
            assert!(seen.iter().all(|&s| s));
        }
    }
}
