//! Dense exact linear algebra over a [`Field`].

use super::field::Field;

pub type Matrix<F> = Vec<Vec<F>>;

pub fn identity<F: Field>(n: usize) -> Matrix<F> {
    (0..n)
        .map(|i| (0..n).map(|j| if i == j { F::one_elem() } else { F::zero_elem() }).collect())
        .collect()
}

pub fn transpose<F: Field>(m: &Matrix<F>) -> Matrix<F> {
    let rows = m.len();
    let cols = m.first().map_or(0, Vec::len);
    (0..cols)
        .map(|j| (0..rows).map(|i| m[i][j].clone()).collect())
        .collect()
}

pub fn mat_mul<F: Field>(a: &Matrix<F>, b: &Matrix<F>) -> Matrix<F> {
    let inner = b.len();
    let cols = b.first().map_or(0, Vec::len);
    a.iter()
        .map(|row| {
            assert_eq!(row.len(), inner, "dimension mismatch");
            (0..cols)
                .map(|j| {
                    (0..inner).fold(F::zero_elem(), |acc, k| acc + row[k].clone() * b[k][j].clone())
                })
                .collect()
        })
        .collect()
}

pub fn mat_vec<F: Field>(a: &Matrix<F>, v: &[F]) -> Vec<F> {
    a.iter()
        .map(|row| {
            row.iter()
                .zip(v)
                .fold(F::zero_elem(), |acc, (x, y)| acc + x.clone() * y.clone())
        })
        .collect()
}

/// Row echelon form by Gauss-Jordan elimination on an augmented copy.
/// Returns the reduced matrix and the pivot columns.
fn reduce<F: Field>(mut m: Matrix<F>) -> (Matrix<F>, Vec<usize>) {
    let rows = m.len();
    let cols = m.first().map_or(0, Vec::len);
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !m[i][c].is_zero_elem()) else {
            continue;
        };
        m.swap(r, p);
        let inv = F::one_elem() / m[r][c].clone();
        for x in m[r].iter_mut() {
            *x = x.clone() * inv.clone();
        }
        for i in 0..rows {
            if i != r && !m[i][c].is_zero_elem() {
                let f = m[i][c].clone();
                for j in 0..cols {
                    let v = m[r][j].clone();
                    m[i][j] = m[i][j].clone() - f.clone() * v;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    (m, pivots)
}

pub fn rank<F: Field>(m: &Matrix<F>) -> usize {
    reduce(m.clone()).1.len()
}

/// Inverse of a square matrix, `None` if singular.
pub fn inverse<F: Field>(m: &Matrix<F>) -> Option<Matrix<F>> {
    let n = m.len();
    let aug: Matrix<F> = m
        .iter()
        .zip(identity::<F>(n))
        .map(|(row, id)| {
            assert_eq!(row.len(), n, "inverse of a non-square matrix");
            row.iter().cloned().chain(id).collect()
        })
        .collect();
    let (red, pivots) = reduce(aug);
    if pivots.len() < n || pivots[n - 1] >= n {
        return None;
    }
    Some(red.into_iter().map(|row| row[n..].to_vec()).collect())
}

/// Solves `m x = rhs` for square nonsingular `m`.
pub fn solve<F: Field>(m: &Matrix<F>, rhs: &[F]) -> Option<Vec<F>> {
    inverse(m).map(|inv| mat_vec(&inv, rhs))
}
