//! Dense exact linear algebra over the rationals.

use super::Rat;
use crate::error::{Error, Result};
use num_traits::Zero;

pub type QMatrix = Vec<Vec<Rat>>;

pub fn zeros(rows: usize, cols: usize) -> QMatrix {
    vec![vec![Rat::zero(); cols]; rows]
}

pub fn identity(n: usize) -> QMatrix {
    let mut m = zeros(n, n);
    for (i, row) in m.iter_mut().enumerate() {
        row[i] = super::rat_int(1);
    }
    m
}

pub fn mat_mul(a: &QMatrix, b: &QMatrix) -> QMatrix {
    let (n, k, m) = (a.len(), b.len(), b[0].len());
    let mut out = zeros(n, m);
    for i in 0..n {
        for l in 0..k {
            if a[i][l].is_zero() {
                continue;
            }
            for j in 0..m {
                if !b[l][j].is_zero() {
                    out[i][j] += &a[i][l] * &b[l][j];
                }
            }
        }
    }
    out
}

pub fn mat_vec(a: &QMatrix, v: &[Rat]) -> Vec<Rat> {
    a.iter()
        .map(|row| {
            row.iter()
                .zip(v)
                .map(|(c, x)| c * x)
                .fold(Rat::zero(), |acc, t| acc + t)
        })
        .collect()
}

/// Reduces `m` to row echelon form in place; returns the rank.
pub fn row_reduce(m: &mut QMatrix) -> usize {
    let rows = m.len();
    if rows == 0 {
        return 0;
    }
    let cols = m[0].len();
    let mut rank = 0;
    for col in 0..cols {
        if rank == rows {
            break;
        }
        let pivot = (rank..rows).find(|&r| !m[r][col].is_zero());
        let Some(p) = pivot else { continue };
        m.swap(rank, p);
        let inv = m[rank][col].recip();
        for c in col..cols {
            let v = &m[rank][c] * &inv;
            m[rank][c] = v;
        }
        for r in 0..rows {
            if r != rank && !m[r][col].is_zero() {
                let f = m[r][col].clone();
                for c in col..cols {
                    let t = &m[rank][c] * &f;
                    m[r][c] -= t;
                }
            }
        }
        rank += 1;
    }
    rank
}

pub fn rank(m: &QMatrix) -> usize {
    let mut c = m.clone();
    row_reduce(&mut c)
}

pub fn det(m: &QMatrix) -> Rat {
    let n = m.len();
    let mut a = m.clone();
    let mut d = super::rat_int(1);
    for col in 0..n {
        let pivot = (col..n).find(|&r| !a[r][col].is_zero());
        let Some(p) = pivot else { return Rat::zero() };
        if p != col {
            a.swap(col, p);
            d = -d;
        }
        d *= a[col][col].clone();
        let inv = a[col][col].recip();
        for r in col + 1..n {
            if a[r][col].is_zero() {
                continue;
            }
            let f = &a[r][col] * &inv;
            for c in col..n {
                let t = &a[col][c] * &f;
                a[r][c] -= t;
            }
        }
    }
    d
}

pub fn inverse(m: &QMatrix) -> Result<QMatrix> {
    let n = m.len();
    let mut aug = zeros(n, 2 * n);
    for i in 0..n {
        aug[i][..n].clone_from_slice(&m[i]);
        aug[i][n + i] = super::rat_int(1);
    }
    row_reduce(&mut aug);
    for (i, row) in aug.iter().enumerate() {
        for (j, v) in row[..n].iter().enumerate() {
            let expect_one = i == j;
            if (expect_one && v != &super::rat_int(1)) || (!expect_one && !v.is_zero()) {
                return Err(Error::SingularMatrix);
            }
        }
    }
    Ok(aug.into_iter().map(|row| row[n..].to_vec()).collect())
}

/// Basis of the right null space of `m`.
pub fn null_space(m: &QMatrix) -> Vec<Vec<Rat>> {
    let cols = if m.is_empty() { 0 } else { m[0].len() };
    let mut red = m.clone();
    row_reduce(&mut red);
    let mut pivot_of_col = vec![None; cols];
    for (r, row) in red.iter().enumerate() {
        if let Some(c) = row.iter().position(|x| !x.is_zero()) {
            pivot_of_col[c] = Some(r);
        }
    }
    let mut basis = Vec::new();
    for free in 0..cols {
        if pivot_of_col[free].is_some() {
            continue;
        }
        let mut v = vec![Rat::zero(); cols];
        v[free] = super::rat_int(1);
        for (c, p) in pivot_of_col.iter().enumerate() {
            if let Some(r) = p {
                v[c] = -red[*r][free].clone();
            }
        }
        basis.push(v);
    }
    basis
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat_int;

    #[test]
    fn det_and_inverse() {
        let m = vec![
            vec![rat_int(2), rat_int(1)],
            vec![rat_int(1), rat_int(1)],
        ];
        assert_eq!(det(&m), rat_int(1));
        let inv = inverse(&m).unwrap();
        assert_eq!(mat_mul(&m, &inv), identity(2));
        let sing = vec![
            vec![rat_int(1), rat_int(2)],
            vec![rat_int(2), rat_int(4)],
        ];
        assert_eq!(det(&sing), Rat::zero());
        assert!(inverse(&sing).is_err());
    }

    #[test]
    fn null_space_of_rank_one() {
        let m = vec![vec![rat_int(1), rat_int(2), rat_int(3)]];
        let ns = null_space(&m);
        assert_eq!(ns.len(), 2);
        for v in ns {
            let val = mat_vec(&m, &v);
            assert!(val[0].is_zero());
        }
    }
}
