//! Small dense integer matrices and their Smith invariants, from which rank
//! and lattice index follow.
//!
//! Matrices are row-major `Vec<Vec<Int>>`. Sizes here never exceed a few
//! dozen entries, so plain elimination over `i128` is used throughout.

use crate::arith::ext_gcd;
use crate::group_ring::Int;

pub type Matrix = Vec<Vec<Int>>;

/// Builds the `rows × gens.len()` matrix whose columns are `gens`.
pub fn from_columns(rows: usize, gens: &[Vec<Int>]) -> Matrix {
    let mut m = vec![vec![0; gens.len()]; rows];
    for (j, g) in gens.iter().enumerate() {
        assert_eq!(g.len(), rows, "column length mismatch");
        for i in 0..rows {
            m[i][j] = g[i];
        }
    }
    m
}

/// Nonzero Smith invariant factors `s₁ | s₂ | …`, each positive.
#[allow(clippy::needless_range_loop)]
pub fn smith_invariants(matrix: &Matrix) -> Vec<Int> {
    let mut a = matrix.clone();
    let rows = a.len();
    let cols = if rows == 0 { 0 } else { a[0].len() };
    let mut diag = Vec::new();
    let mut t = 0;
    while t < rows.min(cols) {
        // pivot: smallest nonzero absolute value in the remaining block
        let pivot = (t..rows)
            .flat_map(|i| (t..cols).map(move |j| (i, j)))
            .filter(|&(i, j)| a[i][j] != 0)
            .min_by_key(|&(i, j)| a[i][j].abs());
        let Some((pi, pj)) = pivot else { break };
        a.swap(t, pi);
        for row in a.iter_mut() {
            row.swap(t, pj);
        }
        // the pivot only changes when it strictly shrinks, so this terminates
        loop {
            let mut dirty = false;
            // clear column t
            for i in t + 1..rows {
                if a[i][t] != 0 && a[i][t] % a[t][t] == 0 {
                    let k = a[i][t] / a[t][t];
                    for j in t..cols {
                        a[i][j] -= k * a[t][j];
                    }
                } else if a[i][t] != 0 {
                    let (g, s, u) = ext_gcd(a[t][t], a[i][t]);
                    let (p, q) = (a[t][t] / g, a[i][t] / g);
                    for j in t..cols {
                        let (x, y) = (a[t][j], a[i][j]);
                        a[t][j] = s * x + u * y;
                        a[i][j] = -q * x + p * y;
                    }
                }
            }
            // clear row t
            for j in t + 1..cols {
                if a[t][j] != 0 && a[t][j] % a[t][t] == 0 {
                    let k = a[t][j] / a[t][t];
                    for i in t..rows {
                        a[i][j] -= k * a[i][t];
                    }
                } else if a[t][j] != 0 {
                    let (g, s, u) = ext_gcd(a[t][t], a[t][j]);
                    let (p, q) = (a[t][t] / g, a[t][j] / g);
                    for i in t..rows {
                        let (x, y) = (a[i][t], a[i][j]);
                        a[i][t] = s * x + u * y;
                        a[i][j] = -q * x + p * y;
                    }
                    dirty = true;
                }
            }
            if dirty && (t + 1..rows).any(|i| a[i][t] != 0) {
                continue;
            }
            // divisibility: fold a non-multiple into the pivot row
            let d = a[t][t];
            let offender = (t + 1..rows)
                .flat_map(|i| (t + 1..cols).map(move |j| (i, j)))
                .find(|&(i, j)| a[i][j] % d != 0);
            match offender {
                Some((i, _)) => {
                    for j in t..cols {
                        a[t][j] += a[i][j];
                    }
                }
                None => break,
            }
        }
        diag.push(a[t][t].abs());
        t += 1;
    }
    diag
}

pub fn rank(matrix: &Matrix) -> usize {
    smith_invariants(matrix).len()
}

/// Index in `Z^rows` of the lattice spanned by `gens`, or `None` when the
/// span has rank below `rows`.
pub fn lattice_index(rows: usize, gens: &[Vec<Int>]) -> Option<Int> {
    if rows == 0 {
        return Some(1);
    }
    let inv = smith_invariants(&from_columns(rows, gens));
    (inv.len() == rows).then(|| inv.iter().product())
}

/// Integer determinant by fraction-free (Bareiss) elimination.
pub fn determinant(matrix: &Matrix) -> Int {
    let n = matrix.len();
    if n == 0 {
        return 1;
    }
    let mut a = matrix.clone();
    let mut sign = 1;
    let mut prev = 1;
    for k in 0..n - 1 {
        if a[k][k] == 0 {
            match (k + 1..n).find(|&i| a[i][k] != 0) {
                Some(i) => {
                    a.swap(k, i);
                    sign = -sign;
                }
                None => return 0,
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
            }
        }
        prev = a[k][k];
    }
    sign * a[n - 1][n - 1]
}
