//! Dense linear algebra over a field, rows as `Vec`s.

use super::FieldCoeff;
use crate::error::{Error, Result};

/// Reduces `rows` in place to reduced row echelon form over the first
/// `ncols` columns and returns the pivot columns.
pub fn rref<F: FieldCoeff>(rows: &mut [Vec<F>], ncols: usize) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        if r == rows.len() {
            break;
        }
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][c].is_zero_elt()) else {
            continue;
        };
        rows.swap(r, p);
        let inv = rows[r][c].inv().expect("nonzero pivot");
        for x in rows[r].iter_mut() {
            *x = x.mul_ref(&inv);
        }
        let pivot_row = rows[r].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i == r || row[c].is_zero_elt() {
                continue;
            }
            let f = row[c].clone();
            for (x, y) in row.iter_mut().zip(&pivot_row) {
                *x = x.sub_ref(&f.mul_ref(y));
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

/// The unique `x` with `A x = b`; `A` may have more rows than columns as
/// long as the system is consistent.
pub fn solve<F: FieldCoeff>(a: &[Vec<F>], b: &[F]) -> Result<Vec<F>> {
    let ncols = a.first().map_or(0, |r| r.len());
    if a.len() != b.len() {
        return Err(Error::Internal("row count mismatch".into()));
    }
    let mut aug: Vec<Vec<F>> = a
        .iter()
        .zip(b)
        .map(|(row, bi)| {
            let mut r = row.clone();
            r.push(bi.clone());
            r
        })
        .collect();
    let pivots = rref(&mut aug, ncols + 1);
    if pivots.last() == Some(&ncols) {
        return Err(Error::SingularSystem);
    }
    if pivots.len() < ncols {
        return Err(Error::SingularSystem);
    }
    Ok((0..ncols).map(|i| aug[i][ncols].clone()).collect())
}

/// A basis of `{x : A x = 0}`.
pub fn nullspace<F: FieldCoeff>(a: &[Vec<F>], ncols: usize, proto: &F) -> Vec<Vec<F>> {
    let mut m = a.to_vec();
    let pivots = rref(&mut m, ncols);
    let free: Vec<usize> = (0..ncols).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut v = vec![proto.zero_like(); ncols];
            v[f] = proto.one_like();
            for (i, &p) in pivots.iter().enumerate() {
                v[p] = -m[i][f].clone();
            }
            v
        })
        .collect()
}

pub fn rank<F: FieldCoeff>(a: &[Vec<F>], ncols: usize) -> usize {
    let mut m = a.to_vec();
    rref(&mut m, ncols).len()
}
