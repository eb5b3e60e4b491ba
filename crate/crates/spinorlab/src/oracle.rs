//! Dense `2^N x 2^N` integer matrices for ladder and gamma operators, built
//! one Kronecker product at a time. They serve as an independent reference for
//! the sparse sign rule and are only practical for small `N`.

use crate::fock::FockState;
use crate::scalar::{GaussRat, Scalar};

/// Row-major integer matrix.
pub type Mat = Vec<Vec<i64>>;

fn kron(a: &Mat, b: &Mat) -> Mat {
    let (ra, rb) = (a.len(), b.len());
    let mut out = vec![vec![0; ra * rb]; ra * rb];
    for i in 0..ra {
        for j in 0..ra {
            for k in 0..rb {
                for l in 0..rb {
                    out[i * rb + k][j * rb + l] = a[i][j] * b[k][l];
                }
            }
        }
    }
    out
}

/// Mode `i` is the `i`-th least significant tensor factor. Lower modes
/// contribute a parity string, higher ones the identity.
pub fn ladder(modes: usize, mode: usize, create: bool) -> Mat {
    let id = vec![vec![1, 0], vec![0, 1]];
    let parity = vec![vec![1, 0], vec![0, -1]];
    let local = if create {
        vec![vec![0, 0], vec![1, 0]]
    } else {
        vec![vec![0, 1], vec![0, 0]]
    };
    let mut out = vec![vec![1]];
    for k in (1..=modes).rev() {
        let f = match k.cmp(&mode) {
            std::cmp::Ordering::Greater => &id,
            std::cmp::Ordering::Equal => &local,
            std::cmp::Ordering::Less => &parity,
        };
        out = kron(&out, f);
    }
    out
}

pub fn apply(m: &Mat, v: &[i64]) -> Vec<i64> {
    m.iter()
        .map(|row| row.iter().zip(v).map(|(a, b)| a * b).sum())
        .collect()
}

pub fn add(a: &Mat, b: &Mat, sign: i64) -> Mat {
    a.iter()
        .zip(b)
        .map(|(r, s)| r.iter().zip(s).map(|(x, y)| x + sign * y).collect())
        .collect()
}

pub fn mul(a: &Mat, b: &Mat) -> Mat {
    let n = a.len();
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| (0..n).map(|k| a[i][k] * b[k][j]).sum())
                .collect()
        })
        .collect()
}

/// `Γ_I` for `I` in `1..=2N`.
pub fn gamma(modes: usize, index: usize) -> Mat {
    let (i, sign) = if index > modes {
        (index - modes, -1)
    } else {
        (index, 1)
    };
    add(&ladder(modes, i, true), &ladder(modes, i, false), sign)
}

/// Column `col` of `m` as an exact state.
pub fn column(m: &Mat, col: usize, modes: usize) -> FockState<GaussRat> {
    FockState::from_terms(
        modes,
        m.iter()
            .enumerate()
            .map(|(r, row)| (r as u32, GaussRat::from_i64(row[col]))),
    )
    .expect("mode count")
}

/// Integer amplitudes as an exact state; index `m` is the bitmask.
pub fn state_of(amps: &[i64], modes: usize) -> FockState<GaussRat> {
    FockState::from_terms(
        modes,
        amps.iter()
            .enumerate()
            .map(|(m, &c)| (m as u32, GaussRat::from_i64(c))),
    )
    .expect("mode count")
}

pub fn is_scalar_multiple_of_identity(m: &Mat, c: i64) -> bool {
    m.iter().enumerate().all(|(r, row)| {
        row.iter()
            .enumerate()
            .all(|(k, &x)| x == if r == k { c } else { 0 })
    })
}
