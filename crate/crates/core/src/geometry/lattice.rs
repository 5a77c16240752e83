//! Exact integer linear algebra: row echelon form by Euclidean row
//! operations, rank, affine rank and the integer-span test.

use super::SignedPoint;

/// Row echelon form over `Z` using only unimodular row operations, so the
/// nonzero rows form a basis of the row lattice. Pivots are positive.
pub fn integer_row_echelon(rows: &[Vec<i64>]) -> Vec<Vec<i64>> {
    let mut m: Vec<Vec<i64>> = rows.to_vec();
    let cols = m.first().map_or(0, Vec::len);
    let mut top = 0;
    for col in 0..cols {
        if top == m.len() {
            break;
        }
        loop {
            // smallest nonzero |entry| in this column at or below `top`
            let pivot = (top..m.len())
                .filter(|&r| m[r][col] != 0)
                .min_by_key(|&r| m[r][col].unsigned_abs());
            let Some(p) = pivot else { break };
            m.swap(top, p);
            let mut done = true;
            for r in top + 1..m.len() {
                if m[r][col] != 0 {
                    let q = m[r][col].div_euclid(m[top][col]);
                    let (head, tail) = m.split_at_mut(r);
                    for (x, y) in tail[0].iter_mut().zip(&head[top]) {
                        *x -= q * y;
                    }
                    if tail[0][col] != 0 {
                        done = false;
                    }
                }
            }
            if done {
                break;
            }
        }
        if m[top][col] != 0 {
            if m[top][col] < 0 {
                for x in m[top].iter_mut() {
                    *x = -*x;
                }
            }
            top += 1;
        }
    }
    m.truncate(top);
    m
}

pub fn rank(rows: &[Vec<i64>]) -> usize {
    integer_row_echelon(rows).len()
}

/// Dimension of the affine hull of `points`; `None` for an empty set.
pub fn affine_rank(points: &[Vec<i64>]) -> Option<usize> {
    let (first, rest) = points.split_first()?;
    let diffs: Vec<Vec<i64>> = rest
        .iter()
        .map(|p| p.iter().zip(first).map(|(a, b)| a - b).collect())
        .collect();
    Some(rank(&diffs))
}

/// Whether the points generate all of `Z^n` as a group.
pub fn integer_span_check(points: &[SignedPoint]) -> bool {
    let Some(n) = points.first().map(SignedPoint::dim) else {
        return false;
    };
    let rows: Vec<Vec<i64>> = points.iter().map(SignedPoint::as_i64).collect();
    let echelon = integer_row_echelon(&rows);
    // full rank, and the echelon basis is unitriangular up to the pivot product
    echelon.len() == n
        && echelon.iter().enumerate().all(|(k, row)| row[k] == 1)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sp(c: &[i8]) -> SignedPoint {
        SignedPoint(c.to_vec())
    }

    #[test]
    fn span_examples() {
        assert!(!integer_span_check(&[SignedPoint(vec![2])]));
        assert!(integer_span_check(&[sp(&[1, 0, 0]), sp(&[0, 1, 0]), sp(&[0, 0, 1])]));
        // (1,1),(1,-1) span an index-2 sublattice
        assert!(!integer_span_check(&[sp(&[1, 1]), sp(&[1, -1])]));
        assert!(integer_span_check(&[sp(&[1, 1]), sp(&[1, -1]), sp(&[0, 1])]));
        assert!(!integer_span_check(&[]));
    }

    #[test]
    fn ranks() {
        assert_eq!(rank(&[vec![2, 4], vec![1, 2]]), 1);
        assert_eq!(rank(&[vec![3, 5], vec![5, 3]]), 2);
        assert_eq!(affine_rank(&[vec![0, 0], vec![1, 1], vec![2, 2]]), Some(1));
        assert_eq!(affine_rank(&[vec![1, 1]]), Some(0));
        assert_eq!(affine_rank(&[]), None);
    }

    #[test]
    fn echelon_preserves_lattice_index() {
        // det = 3*3 - 5*5 = -16
        let e = integer_row_echelon(&[vec![3, 5], vec![5, 3]]);
        assert_eq!((e[0][0] * e[1][1]).abs(), 16);
        assert_eq!(e[1][0], 0);
    }
}
