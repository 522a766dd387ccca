use std::collections::BTreeMap;

use num_traits::{One, Zero};

use super::{Coords, Rational};

type SparseRow = BTreeMap<usize, Rational>;

/// Incremental exact solver for sparse linear systems `A x = b`.
///
/// Rows are kept fully reduced: every stored row has a pivot column equal to
/// its smallest nonzero column, with coefficient one, and no other stored row
/// touches that column. The stored rows are therefore the reduced row echelon
/// form of the system, independent of insertion order.
#[derive(Debug, Clone)]
pub struct LinearSystem {
    unknowns: usize,
    rows: BTreeMap<usize, (SparseRow, Rational)>,
    inconsistent: bool,
}

/// Solution set `particular + span(kernel)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AffineSolution {
    pub particular: Coords,
    pub kernel: Vec<Coords>,
    /// Free columns, in the order of `kernel`.
    pub free: Vec<usize>,
}

impl LinearSystem {
    pub fn new(unknowns: usize) -> Self {
        LinearSystem { unknowns, rows: BTreeMap::new(), inconsistent: false }
    }

    pub fn unknowns(&self) -> usize {
        self.unknowns
    }

    pub fn add_equation<I>(&mut self, coeffs: I, rhs: Rational)
    where
        I: IntoIterator<Item = (usize, Rational)>,
    {
        let mut row = SparseRow::new();
        for (col, c) in coeffs {
            debug_assert!(col < self.unknowns);
            if c.is_zero() {
                continue;
            }
            let entry = row.entry(col).or_insert_with(Rational::zero);
            *entry += c;
            if entry.is_zero() {
                row.remove(&col);
            }
        }
        let mut rhs = rhs;
        // Substitute existing pivots.
        let pivot_hits: Vec<usize> = row.keys().filter(|c| self.rows.contains_key(c)).copied().collect();
        for p in pivot_hits {
            let Some(f) = row.get(&p).cloned() else { continue };
            let (prow, prhs) = &self.rows[&p];
            for (col, v) in prow {
                let entry = row.entry(*col).or_insert_with(Rational::zero);
                *entry -= &f * v;
                if entry.is_zero() {
                    row.remove(col);
                }
            }
            rhs -= &f * prhs;
        }
        let Some((&pivot, _)) = row.iter().next() else {
            if !rhs.is_zero() {
                self.inconsistent = true;
            }
            return;
        };
        let inv = row[&pivot].recip();
        for v in row.values_mut() {
            *v *= &inv;
        }
        rhs *= &inv;
        for (other, orhs) in self.rows.values_mut() {
            if let Some(f) = other.get(&pivot).cloned() {
                for (col, v) in &row {
                    let entry = other.entry(*col).or_insert_with(Rational::zero);
                    *entry -= &f * v;
                    if entry.is_zero() {
                        other.remove(col);
                    }
                }
                *orhs -= &f * &rhs;
            }
        }
        self.rows.insert(pivot, (row, rhs));
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn is_consistent(&self) -> bool {
        !self.inconsistent
    }

    pub fn solve(&self) -> Option<AffineSolution> {
        if self.inconsistent {
            return None;
        }
        let mut particular = Coords::zeros(self.unknowns);
        for (&p, (_, rhs)) in &self.rows {
            particular.0[p] = rhs.clone();
        }
        let free: Vec<usize> = (0..self.unknowns).filter(|c| !self.rows.contains_key(c)).collect();
        let kernel = free
            .iter()
            .map(|&f| {
                let mut v = Coords::zeros(self.unknowns);
                v.0[f] = Rational::one();
                for (&p, (row, _)) in &self.rows {
                    if let Some(c) = row.get(&f) {
                        v.0[p] = -c.clone();
                    }
                }
                v
            })
            .collect();
        Some(AffineSolution { particular, kernel, free })
    }
}
