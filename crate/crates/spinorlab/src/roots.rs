//! Root-system power sums, semisimple representatives, and the eight-parameter family `G(y)`.

use rayon::prelude::*;

use crate::clifford::gamma_word;
use crate::covariants::{z_tensor, PairMatrix};
use crate::embed::QubitState;
use crate::error::{Error, Result};
use crate::fock::FockState;
use crate::invariants::{fourqubit_invariants, PairContraction};
use crate::linalg::{self, Matrix};
use crate::scalar::Scalar;

/// A finite set of linear forms over `k` variables, stored as doubled integer coefficients.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RootSet {
    vars: usize,
    doubled: Vec<Vec<i64>>,
}

impl RootSet {
    /// `±2x_i` and the sixteen `±x_1±x_2±x_3±x_4`.
    pub fn f4() -> Self {
        let mut doubled = Vec::with_capacity(24);
        for i in 0..4 {
            for s in [2, -2] {
                let mut v = vec![0; 4];
                v[i] = 2 * s;
                doubled.push(v);
            }
        }
        for signs in 0..16u32 {
            doubled.push(
                (0..4)
                    .map(|i| if signs >> i & 1 == 1 { -2 } else { 2 })
                    .collect(),
            );
        }
        RootSet { vars: 4, doubled }
    }

    /// `±x_i±x_j` and `½(±x_1…±x_8)` with an even number of minus signs.
    pub fn e8() -> Self {
        let mut doubled = Vec::with_capacity(240);
        for i in 0..8 {
            for j in i + 1..8 {
                for (a, b) in [(2, 2), (2, -2), (-2, 2), (-2, -2)] {
                    let mut v = vec![0; 8];
                    v[i] = a;
                    v[j] = b;
                    doubled.push(v);
                }
            }
        }
        for signs in 0..256u32 {
            if signs.count_ones() % 2 == 0 {
                doubled.push(
                    (0..8)
                        .map(|i| if signs >> i & 1 == 1 { -1 } else { 1 })
                        .collect(),
                );
            }
        }
        RootSet { vars: 8, doubled }
    }

    pub fn len(&self) -> usize {
        self.doubled.len()
    }

    pub fn is_empty(&self) -> bool {
        self.doubled.is_empty()
    }

    pub fn vars(&self) -> usize {
        self.vars
    }

    /// Coefficients of each form, doubled so they stay integral.
    pub fn doubled_forms(&self) -> &[Vec<i64>] {
        &self.doubled
    }

    /// `Σ_s e_s(x)^{2p}`.
    pub fn power_sum<S: Scalar>(&self, x: &[S], p: u32) -> Result<S> {
        if x.len() != self.vars {
            return Err(Error::Shape {
                expected: format!("{} coordinates", self.vars),
                got: x.len().to_string(),
            });
        }
        let half = S::from_ratio(1, 2);
        Ok(self
            .doubled
            .par_iter()
            .map(|f| {
                let e = f.iter().zip(x).fold(S::zero(), |acc, (c, v)| {
                    acc + &(v.clone() * &S::from_i64(*c))
                });
                (e * &half).pow(2 * p)
            })
            .reduce(S::zero, |a, b| a + &b))
    }
}

/// `π_{2p}(x)` over the 24 forms.
pub fn pi_2p<S: Scalar>(x: &[S], p: u32) -> Result<S> {
    RootSet::f4().power_sum(x, p)
}

/// `Π_{2p}(x)` over the 240 roots.
pub fn big_pi_2p<S: Scalar>(x: &[S], p: u32) -> Result<S> {
    RootSet::e8().power_sum(x, p)
}

fn require_len<S>(v: &[S], n: usize) -> Result<()> {
    if v.len() == n {
        Ok(())
    } else {
        Err(Error::Shape {
            expected: format!("{n} parameters"),
            got: v.len().to_string(),
        })
    }
}

/// Converts the Bell-basis parameters `x` of a semisimple four-qubit state to the
/// coefficients `y` of `|0000>+|1111>`, `|0011>+|1100>`, `|0101>+|1010>`, `|0110>+|1001>`.
pub fn semisimple_y_of_x<S: Scalar>(x: &[S]) -> Result<[S; 4]> {
    require_len(x, 4)?;
    let half = S::from_ratio(1, 2);
    Ok([
        (x[0].clone() + &x[3]) * &half,
        (x[0].clone() - &x[3]) * &half,
        (x[1].clone() + &x[2]) * &half,
        (x[2].clone() - &x[1]) * &half,
    ])
}

pub fn semisimple_x_of_y<S: Scalar>(y: &[S]) -> Result<[S; 4]> {
    require_len(y, 4)?;
    Ok([
        y[0].clone() + &y[1],
        y[2].clone() - &y[3],
        y[2].clone() + &y[3],
        y[0].clone() - &y[1],
    ])
}

/// `Σ_α x_α |φ_α>|φ_α>` with the Bell states
/// `φ_1 = |00>+|11>`, `φ_2 = |01>-|10>`, `φ_3 = |01>+|10>`, `φ_4 = |00>-|11>`, each halved.
pub fn semisimple_qubit_state<S: Scalar>(x: &[S]) -> Result<QubitState<S>> {
    require_len(x, 4)?;
    let bell: [[i64; 4]; 4] = [[1, 0, 0, 1], [0, 1, -1, 0], [0, 1, 1, 0], [1, 0, 0, -1]];
    let half = S::from_ratio(1, 2);
    let mut amps = vec![S::zero(); 16];
    for (xa, c) in x.iter().zip(bell) {
        let w = xa.clone() * &half;
        for i in 0..4 {
            for j in 0..4 {
                let s = c[i] * c[j];
                if s != 0 {
                    amps[4 * i + j] = amps[4 * i + j].clone() + &(w.clone() * &S::from_i64(s));
                }
            }
        }
    }
    QubitState::new(4, amps)
}

/// Ordered creator products spanning the states `E_1 … E_8` of the family `G(y)`.
pub const G_TERMS: [[&[usize]; 2]; 8] = [
    [&[1, 2, 3, 4], &[5, 6, 7, 8]],
    [&[1, 2, 7, 8], &[5, 6, 3, 4]],
    [&[1, 6, 3, 8], &[5, 2, 7, 4]],
    [&[1, 6, 7, 4], &[5, 2, 3, 8]],
    [&[1, 5, 4, 8], &[2, 6, 3, 7]],
    [&[1, 5, 3, 7], &[2, 6, 4, 8]],
    [&[1, 5, 2, 6], &[3, 7, 4, 8]],
    [&[], &[1, 2, 3, 4, 5, 6, 7, 8]],
];

/// `|E_α>` for `α` in `1..=8`.
pub fn e_state<S: Scalar>(alpha: usize) -> Result<FockState<S>> {
    if !(1..=8).contains(&alpha) {
        return Err(Error::Invalid(format!("E index {alpha} outside 1..=8")));
    }
    let [a, b] = G_TERMS[alpha - 1];
    Ok(FockState::product(8, a, S::one())?.plus(&FockState::product(8, b, S::one())?))
}

/// `G(y) = Σ y_α |E_α>`, a positive-chirality spinor on eight modes.
pub fn g_state<S: Scalar>(y: &[S]) -> Result<FockState<S>> {
    require_len(y, 8)?;
    let mut out = FockState::zero(8)?;
    for (alpha, ya) in y.iter().enumerate() {
        out = out.plus(&e_state::<S>(alpha + 1)?.scale(ya));
    }
    Ok(out)
}

/// `Ω = Γ_1 Γ_2 Γ_3 Γ_4`.
pub fn omega<S: Scalar>(state: &FockState<S>) -> Result<FockState<S>> {
    gamma_word(&[1, 2, 3, 4], state)
}

const Y_OF_X: [[i64; 8]; 8] = [
    [1, 1, 1, 1, -1, -1, -1, -1],
    [1, 1, -1, -1, -1, -1, 1, 1],
    [1, -1, 1, -1, -1, 1, -1, 1],
    [1, -1, -1, 1, -1, 1, 1, -1],
    [1, -1, -1, 1, 1, -1, -1, 1],
    [1, -1, 1, -1, 1, -1, 1, -1],
    [1, 1, -1, -1, 1, 1, -1, -1],
    [1, 1, 1, 1, 1, 1, 1, 1],
];

/// `y = ½ H x` for the signed Hadamard-type matrix `H`.
pub fn y_of_x<S: Scalar>(x: &[S]) -> Result<Vec<S>> {
    require_len(x, 8)?;
    let half = S::from_ratio(1, 2);
    Ok(Y_OF_X
        .iter()
        .map(|row| {
            row.iter().zip(x).fold(S::zero(), |acc, (c, v)| {
                acc + &(v.clone() * &S::from_i64(*c))
            }) * &half
        })
        .collect())
}

/// Inverse of [`y_of_x`]: the rows of `H` are orthogonal with norm 8, so `x = Hᵀy / 4`.
pub fn x_of_y<S: Scalar>(y: &[S]) -> Result<Vec<S>> {
    require_len(y, 8)?;
    let quarter = S::from_ratio(1, 4);
    Ok((0..8)
        .map(|c| {
            (0..8).fold(S::zero(), |acc, r| {
                acc + &(y[r].clone() * &S::from_i64(Y_OF_X[r][c]))
            }) * &quarter
        })
        .collect())
}

/// `ℛ^{IJ}_{KL}` of `G(y)` from closed-form matrix elements in the self-dual four-form and `y_8`.
pub fn g_state_r_tensor<S: Scalar>(y: &[S]) -> Result<PairMatrix<S>> {
    require_len(y, 8)?;
    let mut four = y.to_vec();
    four[7] = S::zero();
    let z = z_tensor(&g_state(&four)?)?;
    let zt = |a: usize, b: usize, c: usize, d: usize| &z[((a * 8 + b) * 8 + c) * 8 + d];
    let y8 = &y[7];
    let y8sq = y8.clone() * y8;
    let norm = y.iter().fold(S::zero(), |acc, v| acc + &(v.clone() * v));
    let delta = |a: usize, b: usize| a == b;

    // the all-lowercase block
    let mut low = vec![S::zero(); 8usize.pow(4)];
    let at = |i: usize, j: usize, k: usize, l: usize| ((i * 8 + j) * 8 + k) * 8 + l;
    for i in 0..8 {
        for j in 0..8 {
            for k in 0..8 {
                for l in 0..8 {
                    let mut v = S::zero();
                    if delta(i, l) && delta(j, k) {
                        v = v + &y8sq;
                    }
                    if delta(i, k) && delta(j, l) {
                        v = v - &y8sq;
                    }
                    for a in 0..8 {
                        for b in a + 1..8 {
                            let x = zt(i, j, a, b);
                            if !x.is_zero() {
                                v = v + &(x.clone() * zt(a, b, l, k));
                            }
                        }
                    }
                    low[at(i, j, k, l)] = v;
                }
            }
        }
    }
    let r = |i: usize, j: usize, k: usize, l: usize| &low[at(i, j, k, l)];

    let mut out = PairMatrix::zeros(16);
    let two_y8 = y8.clone() * &S::from_i64(2);
    let half = S::from_ratio(1, 2);
    for i in 0..8 {
        for j in 0..8 {
            for k in 0..8 {
                for l in 0..8 {
                    let (ih, jh, kh, lh) = (i + 8, j + 8, k + 8, l + 8);
                    out.set(i, j, k, l, r(i, j, k, l).clone());
                    out.set(ih, jh, kh, lh, r(k, l, i, j).clone());
                    let raise = two_y8.clone() * zt(i, j, k, l);
                    out.set(i, j, kh, lh, raise.clone());
                    out.set(ih, jh, k, l, raise);
                    // ℛ^{i j̄}_{k̄ l} and its images under the pair antisymmetries
                    let mut mixed = -r(i, k, j, l).clone();
                    if delta(i, l) && delta(k, j) {
                        mixed = mixed + &norm;
                    }
                    if delta(i, j) && delta(k, l) {
                        mixed = mixed - &(norm.clone() * &half);
                    }
                    out.set(i, jh, kh, l, mixed.clone());
                    out.set(jh, i, kh, l, -mixed.clone());
                    out.set(i, jh, l, kh, -mixed.clone());
                    out.set(jh, i, l, kh, mixed);
                }
            }
        }
    }
    Ok(out)
}

/// `𝓘_{2p}(y)` through the closed-form tensor of [`g_state_r_tensor`].
pub fn g_state_invariants<S: Scalar>(
    y: &[S],
    orders: &[usize],
    contraction: PairContraction,
) -> Result<Vec<S>> {
    let r = g_state_r_tensor(y)?;
    let m = match contraction {
        PairContraction::Restricted => r.restricted_matrix(),
        PairContraction::Unrestricted => r.unrestricted_matrix(),
    };
    let max_p = orders.iter().copied().max().unwrap_or(0);
    let t = S::trace_powers(&m, max_p);
    Ok(orders.iter().map(|&p| t[p - 1].clone()).collect())
}

/// `Σ_{α<β} (y_α + y_β)^{2p} + (y_α - y_β)^{2p}`.
pub fn wallach_g<S: Scalar>(y: &[S], p: u32) -> Result<S> {
    require_len(y, 4)?;
    let mut acc = S::zero();
    for a in 0..4 {
        for b in a + 1..4 {
            acc = acc + &(y[a].clone() + &y[b]).pow(2 * p) + &(y[a].clone() - &y[b]).pow(2 * p);
        }
    }
    Ok(acc)
}

/// `(𝓕_2, 𝓕_6, 𝓕_8, 𝓕_12)` from the basic four-qubit invariants.
pub fn f_closed<S: Scalar>(q: &QubitState<S>) -> Result<[S; 4]> {
    let i = fourqubit_invariants(q)?;
    let c = |v: i64| S::from_i64(v);
    let (h, gm, sg, pi) = (&i.h, &i.gamma, &i.sigma, &i.pi);
    let third = S::from_ratio(4, 3);
    let f2 = c(2) * h;
    let f6 = (c(3) * &h.pow(3) - &(c(4) * gm)) * &c(4);
    let f8 = (c(33) * &h.pow(4) - &(c(104) * h * gm) + &(c(40) * sg)) * &third;
    let f12 = (c(513) * &h.pow(6) - &(c(3012) * &h.pow(3) * gm)
        + &(c(2180) * &h.pow(2) * sg)
        + &(c(488) * gm * gm)
        + &(c(480) * pi))
        * &third;
    Ok([f2, f6, f8, f12])
}

/// A polynomial in `k` variables, given as an evaluator plus a bound on its degree.
pub struct Polynomial<'a, S> {
    pub degree: usize,
    pub eval: Box<dyn Fn(&[S]) -> S + Sync + 'a>,
}

impl<'a, S: Scalar> Polynomial<'a, S> {
    pub fn new(degree: usize, eval: impl Fn(&[S]) -> S + Sync + 'a) -> Self {
        Polynomial {
            degree,
            eval: Box::new(eval),
        }
    }

    /// `∂f/∂x_v` at `point`: interpolate `t ↦ f(point + t e_v)` on `t = 0..=degree`
    /// and read off the linear coefficient.
    pub fn partial(&self, point: &[S], v: usize) -> S {
        let d = self.degree;
        let values: Vec<S> = (0..=d)
            .map(|t| {
                let mut p = point.to_vec();
                p[v] = p[v].clone() + &S::from_i64(t as i64);
                (self.eval)(&p)
            })
            .collect();
        // derivative at 0 of the Lagrange interpolant on nodes 0..=d
        let mut acc = S::zero();
        for (j, fj) in values.iter().enumerate().skip(1) {
            // ℓ_j'(0) = (-1)^{j+1} d! / (j · j! (d-j)!) ... written as a ratio of small integers
            let num = factorial(d) as i128;
            let den = (j as i128) * factorial(j) as i128 * factorial(d - j) as i128;
            let sign = if j % 2 == 1 { 1 } else { -1 };
            let w = S::from_ratio(
                (sign * num / gcd(num, den)) as i64,
                (den / gcd(num, den)) as i64,
            );
            acc = acc + &(fj.clone() * &w);
        }
        // ℓ_0'(0) = -H_d
        let mut h0 = S::zero();
        for k in 1..=d {
            h0 = h0 + &S::from_ratio(1, k as i64);
        }
        acc - &(values[0].clone() * &h0)
    }
}

fn factorial(n: usize) -> u128 {
    (1..=n as u128).product()
}

fn gcd(a: i128, b: i128) -> i128 {
    if b == 0 {
        a.abs()
    } else {
        gcd(b, a % b)
    }
}

/// Exact Jacobian of `polys` at `point`, rows per polynomial.
pub fn jacobian<S: Scalar>(polys: &[Polynomial<'_, S>], point: &[S]) -> Matrix<S> {
    polys
        .par_iter()
        .map(|f| (0..point.len()).map(|v| f.partial(point, v)).collect())
        .collect()
}

/// Rank of the Jacobian at `point`. Full rank certifies algebraic independence;
/// a deficient rank may just mean an unlucky point.
pub fn jacobian_rank<S: Scalar>(polys: &[Polynomial<'_, S>], point: &[S]) -> usize {
    linalg::rank(&jacobian(polys, point))
}

/// Jacobian of `y ↦ Tr M(y)^p` for the restricted closed-form tensor of `G(y)`.
/// `M` is quadratic in `y`, so its directional derivative is `(M(y+e) - M(y-e))/2`
/// and `∂ Tr M^p = p Tr(M^{p-1} M')`.
pub fn g_state_trace_jacobian<S: Scalar>(y: &[S], orders: &[usize]) -> Result<Matrix<S>> {
    require_len(y, 8)?;
    let m = g_state_r_tensor(y)?.restricted_matrix();
    let max_p = orders.iter().copied().max().unwrap_or(1);
    let mut powers: Vec<Matrix<S>> = vec![linalg::identity(m.len())];
    for _ in 1..max_p {
        let next = par_mul(powers.last().expect("nonempty"), &m);
        powers.push(next);
    }
    let half = S::from_ratio(1, 2);
    let directions: Vec<Matrix<S>> = (0..8)
        .into_par_iter()
        .map(|v| {
            let mut up = y.to_vec();
            let mut down = y.to_vec();
            up[v] = up[v].clone() + &S::one();
            down[v] = down[v].clone() - &S::one();
            let a = g_state_r_tensor(&up).expect("8 params").restricted_matrix();
            let b = g_state_r_tensor(&down)
                .expect("8 params")
                .restricted_matrix();
            linalg::scale(&linalg::add(&a, &linalg::scale(&b, &-S::one())), &half)
        })
        .collect();
    Ok(orders
        .iter()
        .map(|&p| {
            let pw = &powers[p - 1];
            directions
                .iter()
                .map(|dm| trace_of_product(pw, dm) * &S::from_i64(p as i64))
                .collect()
        })
        .collect())
}

fn trace_of_product<S: Scalar>(a: &Matrix<S>, b: &Matrix<S>) -> S {
    let mut acc = S::zero();
    for (i, row) in a.iter().enumerate() {
        for (k, x) in row.iter().enumerate() {
            if !x.is_zero() && !b[k][i].is_zero() {
                acc = acc + &(x.clone() * &b[k][i]);
            }
        }
    }
    acc
}

fn par_mul<S: Scalar>(a: &Matrix<S>, b: &Matrix<S>) -> Matrix<S> {
    a.par_iter()
        .map(|row| linalg::mul(&vec![row.clone()], b).pop().expect("one row"))
        .collect()
}
