//! Small dense matrices over a [`Scalar`] field, stored as `Vec<Vec<S>>`.

use crate::scalar::Scalar;

pub type Matrix<S> = Vec<Vec<S>>;

pub fn zeros<S: Scalar>(rows: usize, cols: usize) -> Matrix<S> {
    vec![vec![S::zero(); cols]; rows]
}

pub fn identity<S: Scalar>(n: usize) -> Matrix<S> {
    let mut m = zeros(n, n);
    for (i, row) in m.iter_mut().enumerate() {
        row[i] = S::one();
    }
    m
}

pub fn from_i64<S: Scalar>(rows: &[&[i64]]) -> Matrix<S> {
    rows.iter()
        .map(|r| r.iter().map(|&v| S::from_i64(v)).collect())
        .collect()
}

pub fn is_square<S>(m: &Matrix<S>, n: usize) -> bool {
    m.len() == n && m.iter().all(|r| r.len() == n)
}

pub fn transpose<S: Scalar>(m: &Matrix<S>) -> Matrix<S> {
    if m.is_empty() {
        return Vec::new();
    }
    (0..m[0].len())
        .map(|j| m.iter().map(|r| r[j].clone()).collect())
        .collect()
}

pub fn mul<S: Scalar>(a: &Matrix<S>, b: &Matrix<S>) -> Matrix<S> {
    let cols = b.first().map_or(0, Vec::len);
    a.iter()
        .map(|row| {
            let mut out = vec![S::zero(); cols];
            for (k, x) in row.iter().enumerate() {
                if x.is_zero() {
                    continue;
                }
                for (j, y) in b[k].iter().enumerate() {
                    out[j] = out[j].clone() + &(x.clone() * y);
                }
            }
            out
        })
        .collect()
}

pub fn add<S: Scalar>(a: &Matrix<S>, b: &Matrix<S>) -> Matrix<S> {
    a.iter()
        .zip(b)
        .map(|(x, y)| x.iter().zip(y).map(|(u, v)| u.clone() + v).collect())
        .collect()
}

pub fn scale<S: Scalar>(a: &Matrix<S>, c: &S) -> Matrix<S> {
    a.iter()
        .map(|r| r.iter().map(|v| v.clone() * c).collect())
        .collect()
}

pub fn trace<S: Scalar>(a: &Matrix<S>) -> S {
    a.iter()
        .enumerate()
        .fold(S::zero(), |acc, (i, r)| acc + &r[i])
}

pub fn pow<S: Scalar>(a: &Matrix<S>, p: u32) -> Matrix<S> {
    let mut out = identity(a.len());
    for _ in 0..p {
        out = mul(&out, a);
    }
    out
}

pub fn is_antisymmetric<S: Scalar>(m: &Matrix<S>) -> bool {
    let n = m.len();
    (0..n).all(|i| (0..n).all(|j| (m[i][j].clone() + &m[j][i]).is_zero()))
}

/// Row echelon form in place; returns pivot columns.
fn echelon<S: Scalar>(m: &mut Matrix<S>) -> Vec<usize> {
    let rows = m.len();
    let cols = m.first().map_or(0, Vec::len);
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        let inv = m[r][c].inv().expect("nonzero pivot");
        for v in m[r].iter_mut() {
            *v = v.clone() * &inv;
        }
        for i in 0..rows {
            if i != r && !m[i][c].is_zero() {
                let f = m[i][c].clone();
                for j in c..cols {
                    let d = f.clone() * &m[r][j];
                    m[i][j] = m[i][j].clone() - &d;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

pub fn rank<S: Scalar>(m: &Matrix<S>) -> usize {
    let mut a = m.clone();
    echelon(&mut a).len()
}

/// Basis of `{x : m x = 0}`.
pub fn kernel<S: Scalar>(m: &Matrix<S>, cols: usize) -> Vec<Vec<S>> {
    let mut a = m.clone();
    let pivots = echelon(&mut a);
    let free: Vec<usize> = (0..cols).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut x = vec![S::zero(); cols];
            x[f] = S::one();
            for (r, &pc) in pivots.iter().enumerate() {
                x[pc] = -a[r][f].clone();
            }
            x
        })
        .collect()
}

pub fn det<S: Scalar>(m: &Matrix<S>) -> S {
    let n = m.len();
    let mut a = m.clone();
    let mut acc = S::one();
    for c in 0..n {
        let Some(p) = (c..n).find(|&i| !a[i][c].is_zero()) else {
            return S::zero();
        };
        if p != c {
            a.swap(p, c);
            acc = -acc;
        }
        acc = acc * &a[c][c];
        let inv = a[c][c].inv().expect("nonzero pivot");
        for i in c + 1..n {
            if a[i][c].is_zero() {
                continue;
            }
            let f = a[i][c].clone() * &inv;
            for j in c..n {
                let d = f.clone() * &a[c][j];
                a[i][j] = a[i][j].clone() - &d;
            }
        }
    }
    acc
}

/// Coefficients `s_1..s_n` of `det(t - A) = t^n - s_1 t^{n-1} + s_2 t^{n-2} - ...`
/// from power traces via Newton's identities.
pub fn newton_coefficients<S: Scalar>(traces: &[S]) -> Vec<S> {
    let mut e: Vec<S> = vec![S::one()];
    for k in 1..=traces.len() {
        let mut acc = S::zero();
        for i in 1..=k {
            let term = e[k - i].clone() * &traces[i - 1];
            acc = if i % 2 == 1 { acc + &term } else { acc - &term };
        }
        e.push(acc * &S::from_ratio(1, k as i64));
    }
    e.remove(0);
    e
}
