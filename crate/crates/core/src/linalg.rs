//! Exact rank of small integer matrices over the rationals or a prime field.
//!
//! Boundary and coboundary matrices in this crate have entries in {-1, 0, 1},
//! so ranks over `QQ` use fraction-free integer elimination with row-content
//! reduction. The `i64` path bails out on overflow and the computation is
//! redone with big integers.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

use crate::field::Field;

/// Dense integer matrix, stored by rows.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    data: Vec<i64>,
}

impl IntMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntMatrix { rows, cols, data: vec![0; rows * cols] }
    }

    pub fn from_rows(rows: &[Vec<i64>]) -> Self {
        let cols = rows.first().map_or(0, Vec::len);
        let mut m = IntMatrix::zeros(rows.len(), cols);
        for (r, row) in rows.iter().enumerate() {
            assert_eq!(row.len(), cols, "ragged matrix");
            m.data[r * cols..(r + 1) * cols].copy_from_slice(row);
        }
        m
    }

    pub fn nrows(&self) -> usize {
        self.rows
    }

    pub fn ncols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> i64 {
        self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: i64) {
        self.data[r * self.cols + c] = v;
    }

    fn row_vecs(&self) -> Vec<Vec<i64>> {
        self.data.chunks(self.cols.max(1)).take(self.rows).map(<[i64]>::to_vec).collect()
    }

    /// Exact rank over `field`.
    pub fn rank(&self, field: Field) -> usize {
        if self.rows == 0 || self.cols == 0 {
            return 0;
        }
        match field {
            Field::Prime(p) => rank_mod_p(self.row_vecs(), p as u64),
            Field::Rational => rank_i64(self.row_vecs())
                .unwrap_or_else(|| rank_bigint(self.row_vecs())),
        }
    }
}

fn rank_mod_p(rows: Vec<Vec<i64>>, p: u64) -> usize {
    let pi = p as i64;
    let mut rows: Vec<Vec<u64>> = rows
        .into_iter()
        .map(|r| r.into_iter().map(|v| v.rem_euclid(pi) as u64).collect())
        .collect();
    let ncols = rows[0].len();
    let mut rank = 0;
    for col in 0..ncols {
        let Some(piv) = (rank..rows.len()).find(|&r| rows[r][col] != 0) else {
            continue;
        };
        rows.swap(rank, piv);
        let inv = mod_pow(rows[rank][col], p - 2, p);
        for v in &mut rows[rank][col..ncols] {
            *v = *v * inv % p;
        }
        let (head, tail) = rows.split_at_mut(rank + 1);
        let pivot = &head[rank];
        for row in tail.iter_mut() {
            let f = row[col];
            if f == 0 {
                continue;
            }
            for c in col..ncols {
                row[c] = (row[c] + (p - f) * pivot[c]) % p;
            }
        }
        rank += 1;
        if rank == rows.len() {
            break;
        }
    }
    rank
}

fn mod_pow(mut b: u64, mut e: u64, p: u64) -> u64 {
    let mut acc = 1 % p;
    b %= p;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * b % p;
        }
        b = b * b % p;
        e >>= 1;
    }
    acc
}

fn rank_i64(mut rows: Vec<Vec<i64>>) -> Option<usize> {
    let ncols = rows[0].len();
    let mut rank = 0;
    for col in 0..ncols {
        let Some(piv) = (rank..rows.len())
            .filter(|&r| rows[r][col] != 0)
            .min_by_key(|&r| rows[r][col].unsigned_abs())
        else {
            continue;
        };
        rows.swap(rank, piv);
        let (head, tail) = rows.split_at_mut(rank + 1);
        let pivot = &head[rank];
        let pv = pivot[col];
        for row in tail.iter_mut() {
            let e = row[col];
            if e == 0 {
                continue;
            }
            let g = pv.gcd(&e);
            let (mp, me) = (pv / g, e / g);
            let mut content = 0i64;
            for c in col..ncols {
                let v = row[c].checked_mul(mp)?.checked_sub(pivot[c].checked_mul(me)?)?;
                row[c] = v;
                content = content.gcd(&v);
            }
            if content > 1 {
                row[col..].iter_mut().for_each(|v| *v /= content);
            }
        }
        rank += 1;
        if rank == rows.len() {
            break;
        }
    }
    Some(rank)
}

fn rank_bigint(rows: Vec<Vec<i64>>) -> usize {
    let mut rows: Vec<Vec<BigInt>> = rows
        .into_iter()
        .map(|r| r.into_iter().map(BigInt::from).collect())
        .collect();
    let ncols = rows[0].len();
    let mut rank = 0;
    for col in 0..ncols {
        let Some(piv) = (rank..rows.len())
            .filter(|&r| !rows[r][col].is_zero())
            .min_by(|&a, &b| rows[a][col].abs().cmp(&rows[b][col].abs()))
        else {
            continue;
        };
        rows.swap(rank, piv);
        let (head, tail) = rows.split_at_mut(rank + 1);
        let pivot = &head[rank];
        let pv = pivot[col].clone();
        for row in tail.iter_mut() {
            if row[col].is_zero() {
                continue;
            }
            let g = pv.gcd(&row[col]);
            let mp = &pv / &g;
            let me = &row[col] / &g;
            let mut content = BigInt::zero();
            for c in col..ncols {
                row[c] = &row[c] * &mp - &pivot[c] * &me;
                content = content.gcd(&row[c]);
            }
            if content > BigInt::from(1) {
                row[col..].iter_mut().for_each(|v| *v = &*v / &content);
            }
        }
        rank += 1;
        if rank == rows.len() {
            break;
        }
    }
    rank
}
