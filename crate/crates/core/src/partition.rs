//! Young diagrams: conjugates, box complements, Schur dimensions and
//! Littlewood-Richardson coefficients.

use std::fmt;

use num::{BigUint, ToPrimitive};

use crate::error::{Error, Result};

/// Weakly decreasing list of positive parts. Orders lexicographically.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Partition(Vec<u32>);

impl Partition {
    /// Build from parts; trailing zeros are dropped.
    pub fn new(parts: Vec<u32>) -> Result<Self> {
        let mut parts = parts;
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if parts.windows(2).any(|w| w[0] < w[1]) || parts.contains(&0) {
            return Err(Error::InvalidPartition(format!("{parts:?}")));
        }
        Ok(Partition(parts))
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    /// `rows` copies of `width`.
    pub fn rectangle(rows: u32, width: u32) -> Self {
        if width == 0 {
            return Partition::empty();
        }
        Partition(vec![width; rows as usize])
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn size(&self) -> u32 {
        self.0.iter().sum()
    }

    /// Part `i` (0-based), zero past the end.
    pub fn part(&self, i: usize) -> u32 {
        self.0.get(i).copied().unwrap_or(0)
    }

    pub fn fits_in_box(&self, rows: u32, cols: u32) -> bool {
        self.0.len() as u32 <= rows && self.part(0) <= cols
    }

    pub fn contains(&self, other: &Partition) -> bool {
        (0..other.len()).all(|i| self.part(i) >= other.part(i))
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, x) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{x}")?;
        }
        write!(f, "]")
    }
}

pub fn conjugate(lambda: &Partition) -> Partition {
    let width = lambda.part(0);
    Partition(
        (0..width)
            .map(|c| lambda.0.iter().filter(|&&r| r > c).count() as u32)
            .collect(),
    )
}

/// `(q - lambda_p, ..., q - lambda_1)` inside the `p x q` box.
pub fn complement_in_box(lambda: &Partition, p: u32, q: u32) -> Result<Partition> {
    if !lambda.fits_in_box(p, q) {
        return Err(Error::NotInBox(lambda.to_string(), p, q));
    }
    Partition::new((0..p as usize).rev().map(|i| q - lambda.part(i)).collect())
}

/// Dimension of the Schur functor `S_lambda(C^n)` by the hook-content formula.
pub fn schur_dim(lambda: &Partition, n: u32) -> u128 {
    if lambda.len() as u32 > n {
        return 0;
    }
    let conj = conjugate(lambda);
    let mut num = BigUint::from(1u32);
    let mut den = BigUint::from(1u32);
    for (r, &row) in lambda.0.iter().enumerate() {
        for c in 0..row as usize {
            let content = n as i64 + c as i64 - r as i64;
            num *= BigUint::from(content as u64);
            let hook = (row as usize - c) + (conj.0[c] as usize - r) - 1;
            den *= BigUint::from(hook as u64);
        }
    }
    (num / den).to_u128().expect("dimension fits in u128")
}

/// All partitions of `n` with at most `max_rows` rows and parts at most `max_part`,
/// in lexicographic order.
pub fn partitions_in_box(n: u32, max_rows: u32, max_part: u32) -> Vec<Partition> {
    fn go(n: u32, rows: u32, cap: u32, cur: &mut Vec<u32>, out: &mut Vec<Partition>) {
        if n == 0 {
            out.push(Partition(cur.clone()));
            return;
        }
        if rows == 0 {
            return;
        }
        for x in 1..=cap.min(n) {
            cur.push(x);
            go(n - x, rows - 1, x, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(n, max_rows, max_part, &mut Vec::new(), &mut out);
    out.sort();
    out
}

/// Partitions of `r` fitting in the `p x q` box; they index the summands
/// `S_lambda(V+) (x) S_{lambda*}(V-)*` of the degree-`r` exterior power.
pub fn exterior_decomposition(p: u32, q: u32, r: u32) -> Vec<Partition> {
    partitions_in_box(r, p, q)
}

/// Number of Littlewood-Richardson tableaux of shape `nu/lambda` and content `mu`.
pub fn lr_coefficient(lambda: &Partition, mu: &Partition, nu: &Partition) -> u64 {
    if lambda.size() + mu.size() != nu.size() || !nu.contains(lambda) || !nu.contains(mu) {
        return 0;
    }
    let rows = nu.len();
    // Filling of row r occupies columns lambda_r..nu_r; entries are 1-based content labels.
    let mut fill: Vec<Vec<u32>> = (0..rows)
        .map(|r| vec![0; (nu.part(r) - lambda.part(r)) as usize])
        .collect();
    let mut counts = vec![0u32; mu.len() + 1];
    let mut total = 0u64;
    lr_fill(lambda, mu, nu, 0, None, &mut fill, &mut counts, &mut total);
    total
}

// Fill cells in reading order: rows top to bottom, each row right to left.
#[allow(clippy::too_many_arguments)]
fn lr_fill(
    lambda: &Partition,
    mu: &Partition,
    nu: &Partition,
    row: usize,
    pos: Option<usize>,
    fill: &mut Vec<Vec<u32>>,
    counts: &mut Vec<u32>,
    total: &mut u64,
) {
    if row == nu.len() {
        if (1..=mu.len()).all(|v| counts[v] == mu.part(v - 1)) {
            *total += 1;
        }
        return;
    }
    let width = fill[row].len();
    let k = match pos {
        None if width == 0 => return lr_fill(lambda, mu, nu, row + 1, None, fill, counts, total),
        None => width - 1,
        Some(0) => return lr_fill(lambda, mu, nu, row + 1, None, fill, counts, total),
        Some(k) => k - 1,
    };
    let col = lambda.part(row) as usize + k;
    // weakly increasing along the row: entry <= its right neighbour
    let hi = if k + 1 < width {
        fill[row][k + 1]
    } else {
        mu.len() as u32
    };
    // strictly increasing down columns
    let lo = if row > 0 && col >= lambda.part(row - 1) as usize && col < nu.part(row - 1) as usize {
        fill[row - 1][col - lambda.part(row - 1) as usize] + 1
    } else {
        1
    };
    for v in lo..=hi {
        let vi = v as usize;
        if counts[vi] >= mu.part(vi - 1) {
            continue;
        }
        if vi > 1 && counts[vi] + 1 > counts[vi - 1] {
            continue;
        }
        counts[vi] += 1;
        fill[row][k] = v;
        lr_fill(lambda, mu, nu, row, Some(k), fill, counts, total);
        counts[vi] -= 1;
    }
    fill[row][k] = 0;
}

/// Dimension of the space of K-maps from the rectangle K-type `(b x q, a x q)` into
/// the special part of the degree-`nq` exterior power, computed from
/// Littlewood-Richardson coefficients.
pub fn special_hom_dimension(p: u32, q: u32, a: u32, b: u32, n: u32) -> Result<u64> {
    if a + b > p || n > p {
        return Err(Error::OutOfRange(format!(
            "need a+b <= p and n <= p (p={p}, a={a}, b={b}, n={n})"
        )));
    }
    let mut nu_parts = vec![2 * q; b as usize];
    nu_parts.extend(std::iter::repeat_n(q, (p - a - b) as usize));
    let nu = Partition::new(nu_parts)?;
    let mut total = 0;
    for big_a in 0..=n.min(p) {
        let big_b = n - big_a;
        if big_b > p {
            continue;
        }
        let lambda = Partition::rectangle(big_b, q);
        let mu = Partition::rectangle(p - big_a, q);
        total += lr_coefficient(&lambda, &mu, &nu);
    }
    Ok(total)
}

/// The closed-form answer: 1 iff `n - a - b = 2k` with `0 <= k <= p - a - b`.
pub fn special_hom_dimension_rule(p: u32, a: u32, b: u32, n: u32) -> u64 {
    if n < a + b {
        return 0;
    }
    let d = n - a - b;
    u64::from(d.is_multiple_of(2) && d / 2 <= p - a - b)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn part(v: &[u32]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    #[test]
    fn conjugate_examples() {
        assert_eq!(conjugate(&part(&[3, 1])), part(&[2, 1, 1]));
        assert_eq!(conjugate(&Partition::empty()), Partition::empty());
        assert_eq!(conjugate(&Partition::rectangle(2, 3)), Partition::rectangle(3, 2));
    }

    #[test]
    fn rejects_increasing() {
        assert!(Partition::new(vec![1, 2]).is_err());
        assert_eq!(Partition::new(vec![2, 0]).unwrap(), part(&[2]));
    }

    #[test]
    fn complement_examples() {
        assert_eq!(complement_in_box(&part(&[2, 1]), 2, 3).unwrap(), part(&[2, 1]));
        assert_eq!(
            complement_in_box(&Partition::empty(), 3, 2).unwrap(),
            Partition::rectangle(3, 2)
        );
        assert_eq!(
            complement_in_box(&Partition::rectangle(3, 2), 3, 2).unwrap(),
            Partition::empty()
        );
        assert!(complement_in_box(&part(&[4]), 2, 3).is_err());
    }

    #[test]
    fn schur_dim_examples() {
        assert_eq!(schur_dim(&part(&[1]), 5), 5);
        assert_eq!(schur_dim(&part(&[1, 1]), 2), 1);
        assert_eq!(schur_dim(&part(&[2, 1]), 3), 8);
        assert_eq!(schur_dim(&part(&[1, 1, 1]), 2), 0);
    }

    fn count_ssyt(shape: &Partition, n: u32) -> u128 {
        // brute force: fill cell by cell in row-major order
        let cells: Vec<(usize, usize)> = shape
            .parts()
            .iter()
            .enumerate()
            .flat_map(|(r, &w)| (0..w as usize).map(move |c| (r, c)))
            .collect();
        fn go(cells: &[(usize, usize)], i: usize, t: &mut Vec<Vec<u32>>, n: u32) -> u128 {
            if i == cells.len() {
                return 1;
            }
            let (r, c) = cells[i];
            let lo_row = if c > 0 { t[r][c - 1] } else { 1 };
            let lo_col = if r > 0 { t[r - 1][c] + 1 } else { 1 };
            let mut s = 0;
            for v in lo_row.max(lo_col)..=n {
                t[r][c] = v;
                s += go(cells, i + 1, t, n);
            }
            s
        }
        let mut t: Vec<Vec<u32>> = shape.parts().iter().map(|&w| vec![0; w as usize]).collect();
        go(&cells, 0, &mut t, n)
    }

    #[test]
    fn schur_dim_matches_tableau_count() {
        for n in 1..=4 {
            for size in 0..=5 {
                for lam in partitions_in_box(size, 5, 5) {
                    assert_eq!(schur_dim(&lam, n), count_ssyt(&lam, n), "{lam} n={n}");
                }
            }
        }
    }

    #[test]
    fn lr_examples() {
        assert_eq!(lr_coefficient(&part(&[1]), &part(&[1]), &part(&[2])), 1);
        assert_eq!(lr_coefficient(&part(&[1]), &part(&[1, 1]), &part(&[2, 1])), 1);
        assert_eq!(lr_coefficient(&part(&[2, 1]), &part(&[2, 1]), &part(&[3, 2, 1])), 2);
        assert_eq!(lr_coefficient(&part(&[1]), &part(&[1]), &part(&[3])), 0);
    }

    #[test]
    fn exterior_decomposition_examples() {
        assert_eq!(exterior_decomposition(2, 2, 2), vec![part(&[1, 1]), part(&[2])]);
        assert_eq!(exterior_decomposition(3, 2, 0), vec![Partition::empty()]);
        assert_eq!(exterior_decomposition(3, 2, 6), vec![Partition::rectangle(3, 2)]);
    }

    #[test]
    fn special_hom_dimension_examples() {
        assert_eq!(special_hom_dimension(3, 2, 1, 1, 2).unwrap(), 1);
        assert_eq!(special_hom_dimension(3, 2, 1, 1, 3).unwrap(), 0);
        assert_eq!(special_hom_dimension(3, 2, 1, 0, 3).unwrap(), 1);
        assert!(special_hom_dimension(2, 1, 2, 1, 1).is_err());
    }

    fn binomial(n: u64, k: u64) -> u128 {
        (0..k).fold(1u128, |acc, i| acc * (n - i) as u128 / (i + 1) as u128)
    }

    #[test]
    fn cauchy_identity_for_symmetric_powers() {
        for p in 1..=3u32 {
            for b in 1..=3u32 {
                for d in 0..=4u32 {
                    let s: u128 = partitions_in_box(d, p.min(b), d.max(1))
                        .iter()
                        .map(|l| schur_dim(l, p) * schur_dim(l, b))
                        .sum();
                    assert_eq!(s, binomial((p * b + d - 1) as u64, d as u64));
                }
            }
        }
    }

    fn arb_partition(max_rows: usize, max_part: u32) -> impl Strategy<Value = Partition> {
        prop::collection::vec(0..=max_part, 0..=max_rows).prop_map(|mut v| {
            v.sort_unstable_by(|a, b| b.cmp(a));
            Partition::new(v).unwrap()
        })
    }

    proptest! {
        #[test]
        fn conjugate_is_involution(l in arb_partition(6, 6)) {
            prop_assert_eq!(conjugate(&conjugate(&l)), l.clone());
            prop_assert_eq!(conjugate(&l).size(), l.size());
        }

        #[test]
        fn complement_is_involution(l in arb_partition(4, 4)) {
            let c = complement_in_box(&l, 4, 4).unwrap();
            prop_assert_eq!(complement_in_box(&c, 4, 4).unwrap(), l);
        }

        #[test]
        fn lr_symmetry(l in arb_partition(3, 3), m in arb_partition(3, 3), extra in 0usize..8) {
            let n = l.size() + m.size();
            let nus = partitions_in_box(n, 6, 6);
            if !nus.is_empty() {
                let nu = &nus[extra % nus.len()];
                prop_assert_eq!(lr_coefficient(&l, &m, nu), lr_coefficient(&m, &l, nu));
            }
        }
    }
}
