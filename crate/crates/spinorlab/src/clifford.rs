//! Gamma operators, the chirality grading, and Spin-group actions on spinors.

use crate::error::{Error, Result};
use crate::fock::{FockState, LadderOp};
use crate::linalg::{self, Matrix};
use crate::scalar::Scalar;

/// `Γ_i = p^i + n_i` for `i <= N`, `Γ_{i+N} = p^i - n_i`.
pub fn gamma_apply<S: Scalar>(index: usize, state: &FockState<S>) -> Result<FockState<S>> {
    let n = state.modes();
    if index == 0 || index > 2 * n {
        return Err(Error::GammaOutOfRange { index, max: 2 * n });
    }
    let i = if index > n { index - n } else { index };
    let p = state.apply_unchecked(LadderOp::create(i));
    let a = state.apply_unchecked(LadderOp::annihilate(i));
    Ok(if index > n { p.minus(&a) } else { p.plus(&a) })
}

/// Applies `Γ_{i1} Γ_{i2} ... Γ_{ik}` (rightmost first).
pub fn gamma_word<S: Scalar>(indices: &[usize], state: &FockState<S>) -> Result<FockState<S>> {
    indices
        .iter()
        .rev()
        .try_fold(state.clone(), |s, &i| gamma_apply(i, &s))
}

/// The grading `Π_i [n_i, p^i] = (-1)^{N(N-1)/2} Γ_1 ... Γ_{2N}`.
pub fn grading<S: Scalar>(state: &FockState<S>) -> FockState<S> {
    let n = state.modes();
    let idx: Vec<usize> = (1..=2 * n).collect();
    let out = gamma_word(&idx, state).expect("indices in range");
    if (n * (n - 1) / 2) % 2 == 1 {
        out.scale(&-S::one())
    } else {
        out
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Chirality {
    Positive,
    Negative,
    Mixed,
    Zero,
}

impl Chirality {
    pub fn sign(self) -> Option<i32> {
        match self {
            Chirality::Positive => Some(1),
            Chirality::Negative => Some(-1),
            _ => None,
        }
    }
}

pub fn chirality<S: Scalar>(state: &FockState<S>) -> Chirality {
    let mut even = false;
    let mut odd = false;
    for m in state.terms().keys() {
        if m.count_ones() % 2 == 0 {
            even = true;
        } else {
            odd = true;
        }
    }
    match (even, odd) {
        (false, false) => Chirality::Zero,
        (true, false) => Chirality::Positive,
        (false, true) => Chirality::Negative,
        (true, true) => Chirality::Mixed,
    }
}

/// Parameters of `ŝ = ½A_i^j[p^i,n_j] + ½B_ij p^i p^j + ½C^ij n_i n_j`,
/// with `a[i][j]` multiplying `p^{i+1} n_{j+1}`.
#[derive(Clone, Debug, PartialEq)]
pub struct SpinGenerator<S> {
    pub a: Matrix<S>,
    pub b: Matrix<S>,
    pub c: Matrix<S>,
}

fn check_dim<S>(m: &Matrix<S>, n: usize) -> Result<()> {
    if linalg::is_square(m, n) {
        Ok(())
    } else {
        Err(Error::Dimension {
            rows: m.len(),
            cols: m.first().map_or(0, Vec::len),
            expected: n,
        })
    }
}

fn check_antisym<S: Scalar>(m: &Matrix<S>, n: usize, name: &'static str) -> Result<()> {
    check_dim(m, n)?;
    if linalg::is_antisymmetric(m) {
        Ok(())
    } else {
        Err(Error::NotAntisymmetric(name))
    }
}

impl<S: Scalar> SpinGenerator<S> {
    pub fn new(a: Matrix<S>, b: Matrix<S>, c: Matrix<S>) -> Result<Self> {
        let n = a.len();
        check_dim(&a, n)?;
        check_antisym(&b, n, "B")?;
        check_antisym(&c, n, "C")?;
        Ok(SpinGenerator { a, b, c })
    }

    pub fn zero(n: usize) -> Self {
        SpinGenerator {
            a: linalg::zeros(n, n),
            b: linalg::zeros(n, n),
            c: linalg::zeros(n, n),
        }
    }

    pub fn dim(&self) -> usize {
        self.a.len()
    }

    /// The 2N x 2N orthogonal-algebra matrix acting on the operator basis
    /// `ê_I = (n_1..n_N, p^1..p^N)` through `[ŝ, ê_I] = ê_J s^J_I`.
    pub fn vector_matrix(&self) -> Matrix<S> {
        let n = self.dim();
        let mut s = linalg::zeros(2 * n, 2 * n);
        for i in 0..n {
            for k in 0..n {
                // [ŝ, n_k] = -A_k^i n_i + B_ik p^i,  [ŝ, p^k] = A_i^k p^i + C^ik n_i
                s[i][k] = -self.a[k][i].clone();
                s[n + i][k] = self.b[i][k].clone();
                s[n + i][n + k] = self.a[i][k].clone();
                s[i][n + k] = self.c[i][k].clone();
            }
        }
        s
    }
}

/// `ŝ|ψ>` including the `-½Tr(A)` shift.
pub fn apply_generator<S: Scalar>(
    gen: &SpinGenerator<S>,
    state: &FockState<S>,
) -> Result<FockState<S>> {
    let n = state.modes();
    check_dim(&gen.a, n)?;
    check_antisym(&gen.b, n, "B")?;
    check_antisym(&gen.c, n, "C")?;
    let half = S::from_ratio(1, 2);
    let mut out = state.scale(&-(linalg::trace(&gen.a) * &half));
    for i in 1..=n {
        for j in 1..=n {
            let a = &gen.a[i - 1][j - 1];
            if !a.is_zero() {
                let t = state
                    .apply_unchecked(LadderOp::annihilate(j))
                    .apply_unchecked(LadderOp::create(i));
                out = out.plus(&t.scale(a));
            }
        }
    }
    out = out.plus(&pair_raise(&gen.b, state));
    out = out.plus(&pair_lower(&gen.c, state));
    Ok(out)
}

// Σ_{i<j} B_ij p^i p^j ψ
fn pair_raise<S: Scalar>(b: &Matrix<S>, state: &FockState<S>) -> FockState<S> {
    let n = state.modes();
    let mut out = FockState::zero(n).expect("valid modes");
    for i in 1..=n {
        for j in i + 1..=n {
            let c = &b[i - 1][j - 1];
            if !c.is_zero() {
                let t = state
                    .apply_unchecked(LadderOp::create(j))
                    .apply_unchecked(LadderOp::create(i));
                out = out.plus(&t.scale(c));
            }
        }
    }
    out
}

// Σ_{i<j} C^ij n_i n_j ψ
fn pair_lower<S: Scalar>(c: &Matrix<S>, state: &FockState<S>) -> FockState<S> {
    let n = state.modes();
    let mut out = FockState::zero(n).expect("valid modes");
    for i in 1..=n {
        for j in i + 1..=n {
            let v = &c[i - 1][j - 1];
            if !v.is_zero() {
                let t = state
                    .apply_unchecked(LadderOp::annihilate(j))
                    .apply_unchecked(LadderOp::annihilate(i));
                out = out.plus(&t.scale(v));
            }
        }
    }
    out
}

fn nilpotent_exp<S: Scalar>(
    state: &FockState<S>,
    step: impl Fn(&FockState<S>) -> FockState<S>,
) -> FockState<S> {
    let mut out = state.clone();
    let mut term = state.clone();
    let mut k = 1i64;
    loop {
        term = step(&term).scale(&S::from_ratio(1, k));
        if term.is_zero() {
            return out;
        }
        out = out.plus(&term);
        k += 1;
    }
}

/// `exp(½B_ij p^i p^j)|ψ>`; the series terminates since the exponent raises particle number by two.
pub fn b_transform<S: Scalar>(b: &Matrix<S>, state: &FockState<S>) -> Result<FockState<S>> {
    check_antisym(b, state.modes(), "B")?;
    Ok(nilpotent_exp(state, |s| pair_raise(b, s)))
}

/// `exp(½C^ij n_i n_j)|ψ>`.
pub fn c_transform<S: Scalar>(c: &Matrix<S>, state: &FockState<S>) -> Result<FockState<S>> {
    check_antisym(c, state.modes(), "C")?;
    Ok(nilpotent_exp(state, |s| pair_lower(c, s)))
}

/// Particle-number preserving map `p^i -> p^j S[j][i]` on a homogeneous state.
/// Only unit-determinant `S` is accepted so the density prefactor is 1.
pub fn gl_sector_transform<S: Scalar>(s: &Matrix<S>, state: &FockState<S>) -> Result<FockState<S>> {
    let n = state.modes();
    check_dim(s, n)?;
    if state.particle_sectors().len() > 1 {
        return Err(Error::Inhomogeneous);
    }
    if linalg::det(s) != S::one() {
        return Err(Error::DeterminantNotOne);
    }
    let mut out = FockState::zero(n)?;
    for (mask, c) in state.terms() {
        let mut t = FockState::vacuum(n)?.scale(c);
        // ascending product: the highest mode is created first
        for i in (1..=n).rev().filter(|i| mask >> (i - 1) & 1 == 1) {
            let mut next = FockState::zero(n)?;
            for j in 1..=n {
                let f = &s[j - 1][i - 1];
                if !f.is_zero() {
                    next = next.plus(&t.apply_unchecked(LadderOp::create(j)).scale(f));
                }
            }
            t = next;
        }
        out = out.plus(&t);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::GaussRat;

    type St = FockState<GaussRat>;

    #[test]
    fn gamma_basics() {
        let v = St::vacuum(2).unwrap();
        assert_eq!(gamma_apply(1, &v).unwrap(), v.create(1).unwrap());
        let s = St::product(2, &[1, 2], GaussRat::int(1)).unwrap();
        // Γ_1 p^1 p^{1̄}|0> = p^{1̄}|0>, with 1̄ = 2 here
        assert_eq!(gamma_apply(1, &s).unwrap(), v.create(2).unwrap());
        assert!(gamma_apply(5, &v).is_err());
    }

    #[test]
    fn chirality_cases() {
        let v = St::vacuum(3).unwrap();
        assert_eq!(chirality(&v), Chirality::Positive);
        assert_eq!(chirality(&v.create(1).unwrap()), Chirality::Negative);
        assert_eq!(chirality(&v.plus(&v.create(1).unwrap())), Chirality::Mixed);
        assert_eq!(chirality(&St::zero(3).unwrap()), Chirality::Zero);
    }

    #[test]
    fn b_and_c_small() {
        let b: Matrix<GaussRat> = linalg::from_i64(&[&[0, 3], &[-3, 0]]);
        let v = St::vacuum(2).unwrap();
        let out = b_transform(&b, &v).unwrap();
        assert_eq!(out.coeff(0), GaussRat::int(1));
        assert_eq!(out.coeff(0b11), GaussRat::int(3));
        let g = SpinGenerator::new(linalg::zeros(2, 2), b.clone(), linalg::zeros(2, 2)).unwrap();
        assert_eq!(
            apply_generator(&g, &v).unwrap().coeff(0b11),
            GaussRat::int(3)
        );
        let c: Matrix<GaussRat> = linalg::from_i64(&[&[0, 2], &[-2, 0]]);
        let top = St::top(2).unwrap();
        let out = c_transform(&c, &top).unwrap();
        // n_1 n_2 p^1 p^2|0> = -|0>
        assert_eq!(out.coeff(0), GaussRat::int(-2));
        assert_eq!(out.coeff(0b11), GaussRat::int(1));
        let bad: Matrix<GaussRat> = linalg::from_i64(&[&[0, 1], &[1, 0]]);
        assert!(b_transform(&bad, &v).is_err());
    }

    #[test]
    fn gl_sector_examples() {
        let p1 = St::vacuum(2).unwrap().create(1).unwrap();
        let mut d: Matrix<GaussRat> = linalg::identity(2);
        d[0][0] = GaussRat::int(2);
        d[1][1] = GaussRat::ratio(1, 2);
        assert_eq!(
            gl_sector_transform(&d, &p1).unwrap(),
            p1.scale(&GaussRat::int(2))
        );
        let swap: Matrix<GaussRat> = linalg::from_i64(&[&[0, -1], &[1, 0]]);
        let out = gl_sector_transform(&swap, &p1).unwrap();
        assert_eq!(out.coeff(0b10), GaussRat::int(1));
        assert_eq!(out.len(), 1);
        let not_unit: Matrix<GaussRat> = linalg::from_i64(&[&[2, 0], &[0, 1]]);
        assert_eq!(
            gl_sector_transform(&not_unit, &p1),
            Err(Error::DeterminantNotOne)
        );
    }
}
