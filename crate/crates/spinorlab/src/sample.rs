//! Seeded random inputs for property checks and the verification suites.

use num_bigint::BigInt;
use num_rational::BigRational;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::embed::QubitState;
use crate::fock::FockState;
use crate::linalg::Matrix;
use crate::scalar::{GaussRat, Scalar};

pub type SeededRng = ChaCha8Rng;

pub fn rng(seed: u64) -> SeededRng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Small rational, mostly integers in `-5..=5`, sometimes a fraction.
pub fn rational(rng: &mut impl Rng) -> BigRational {
    let num: i64 = rng.gen_range(-5..=5);
    let den: i64 = if rng.gen_bool(0.2) {
        rng.gen_range(2..=3)
    } else {
        1
    };
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

pub fn real(rng: &mut impl Rng) -> GaussRat {
    GaussRat::real(rational(rng))
}

pub fn gauss(rng: &mut impl Rng) -> GaussRat {
    let re = rational(rng);
    let im = if rng.gen_bool(0.5) {
        rational(rng)
    } else {
        BigRational::from_integer(0.into())
    };
    GaussRat::new(re, im)
}

pub fn nonzero_gauss(rng: &mut impl Rng) -> GaussRat {
    loop {
        let v = gauss(rng);
        if !v.is_zero() {
            return v;
        }
    }
}

/// Random state over `modes` with each monomial present with probability `density`.
/// `parity`: `Some(0)` even sector only, `Some(1)` odd only.
pub fn state(
    rng: &mut impl Rng,
    modes: usize,
    density: f64,
    parity: Option<u32>,
) -> FockState<GaussRat> {
    let mut s = FockState::zero(modes).expect("mode count");
    for m in 0u32..1 << modes {
        if parity.is_some_and(|p| m.count_ones() % 2 != p) {
            continue;
        }
        if rng.gen_bool(density) {
            s.add_term(m, gauss(rng));
        }
    }
    s
}

/// Random state supported on `k`-particle monomials only.
pub fn sector_state(rng: &mut impl Rng, modes: usize, k: u32, density: f64) -> FockState<GaussRat> {
    let mut s = FockState::zero(modes).expect("mode count");
    for m in 0u32..1 << modes {
        if m.count_ones() == k && rng.gen_bool(density) {
            s.add_term(m, gauss(rng));
        }
    }
    s
}

pub fn qubit_state(rng: &mut impl Rng, n: usize) -> QubitState<GaussRat> {
    QubitState::new(n, (0..1 << n).map(|_| gauss(rng)).collect()).expect("qubit count")
}

pub fn matrix(rng: &mut impl Rng, n: usize) -> Matrix<GaussRat> {
    (0..n)
        .map(|_| (0..n).map(|_| gauss(rng)).collect())
        .collect()
}

pub fn antisymmetric(rng: &mut impl Rng, n: usize, density: f64) -> Matrix<GaussRat> {
    let mut m = vec![vec![GaussRat::zero(); n]; n];
    for i in 0..n {
        for j in i + 1..n {
            if rng.gen_bool(density) {
                let v = gauss(rng);
                m[j][i] = -v.clone();
                m[i][j] = v;
            }
        }
    }
    m
}

/// Random 2x2 matrix with determinant exactly 1.
pub fn sl2(rng: &mut impl Rng) -> Matrix<GaussRat> {
    // product of a lower and an upper unipotent times a diagonal
    let a = gauss(rng);
    let b = gauss(rng);
    let d = nonzero_gauss(rng);
    let di = d.inv().expect("nonzero");
    let one = GaussRat::one();
    let l = vec![vec![one.clone(), GaussRat::zero()], vec![a, one.clone()]];
    let u = vec![vec![one.clone(), b], vec![GaussRat::zero(), one]];
    let dm = vec![vec![d, GaussRat::zero()], vec![GaussRat::zero(), di]];
    crate::linalg::mul(&crate::linalg::mul(&l, &u), &dm)
}
