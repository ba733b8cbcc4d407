//! Exact rank over the Gaussian rationals.

use std::collections::BTreeMap;

use crate::scalar::Gauss;

/// Sparse row: column index to nonzero entry.
pub type SparseRow = BTreeMap<usize, Gauss>;

/// Rank of the matrix whose rows are given, by Gaussian elimination.
pub fn rank(rows: Vec<SparseRow>) -> usize {
    // pivot column -> reduced row with leading entry 1 at that column
    let mut pivots: BTreeMap<usize, SparseRow> = BTreeMap::new();
    for mut row in rows {
        row.retain(|_, v| !v.is_zero());
        while let Some((&lead, _)) = row.iter().next() {
            match pivots.get(&lead) {
                Some(prow) => {
                    let f = row[&lead].clone();
                    for (c, v) in prow {
                        let nv = row.get(c).cloned().unwrap_or_else(Gauss::zero).sub(&v.mul(&f));
                        if nv.is_zero() {
                            row.remove(c);
                        } else {
                            row.insert(*c, nv);
                        }
                    }
                }
                None => {
                    let inv = row[&lead].inv().expect("nonzero lead");
                    for v in row.values_mut() {
                        *v = v.mul(&inv);
                    }
                    pivots.insert(lead, row);
                    break;
                }
            }
        }
    }
    pivots.len()
}
