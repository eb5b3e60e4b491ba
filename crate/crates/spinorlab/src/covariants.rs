//! Covariants built from the pairing: `K_I`, `𝒦^I_J`, the four-index tensors
//! `𝒦^{IJ}_{KL}` and `ℛ^{IJ}_{KL}`, the 28x28 view for eight modes, and reduced densities.
//!
//! Capital indices are 0-based over `0..2N`: `ê_I = n_{I+1}` for `I < N` and
//! `ê_I = p^{I-N+1}` above, while `ê^I` swaps the two halves.

use rayon::prelude::*;

use crate::embed::QubitState;
use crate::error::{Error, Result};
use crate::fock::{mask_of, perm_sign, FockState, LadderOp};
use crate::linalg::{self, Matrix};
use crate::pairing::mukai_unchecked;
use crate::scalar::Scalar;

/// `ê_I`.
pub fn e_lower(index: usize, modes: usize) -> LadderOp {
    if index < modes {
        LadderOp::annihilate(index + 1)
    } else {
        LadderOp::create(index - modes + 1)
    }
}

/// `ê^I = g^{IJ} ê_J`.
pub fn e_upper(index: usize, modes: usize) -> LadderOp {
    if index < modes {
        LadderOp::create(index + 1)
    } else {
        LadderOp::annihilate(index - modes + 1)
    }
}

/// `g_{IJ}`, equal to `g^{IJ}`.
pub fn metric(i: usize, j: usize, modes: usize) -> bool {
    i.abs_diff(j) == modes
}

fn word_on<S: Scalar>(ops: &[LadderOp], state: &FockState<S>) -> FockState<S> {
    ops.iter()
        .rev()
        .fold(state.clone(), |s, op| s.apply_unchecked(*op))
}

fn commutator_on<S: Scalar>(a: LadderOp, b: LadderOp, state: &FockState<S>) -> FockState<S> {
    word_on(&[a, b], state).minus(&word_on(&[b, a], state))
}

/// Four-index tensor over `dim` single indices, stored densely with ordered pairs.
#[derive(Clone, Debug, PartialEq)]
pub struct PairMatrix<S> {
    dim: usize,
    entries: Vec<S>,
}

impl<S: Scalar> PairMatrix<S> {
    pub fn zeros(dim: usize) -> Self {
        PairMatrix {
            dim,
            entries: vec![S::zero(); dim.pow(4)],
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    fn at(&self, i: usize, j: usize, k: usize, l: usize) -> usize {
        ((i * self.dim + j) * self.dim + k) * self.dim + l
    }

    /// Entry `T^{ij}_{kl}`.
    pub fn get(&self, i: usize, j: usize, k: usize, l: usize) -> &S {
        &self.entries[self.at(i, j, k, l)]
    }

    pub fn set(&mut self, i: usize, j: usize, k: usize, l: usize, v: S) {
        let at = self.at(i, j, k, l);
        self.entries[at] = v;
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Scalar::is_zero)
    }

    /// Antisymmetric in the upper pair and in the lower pair.
    pub fn is_pair_antisymmetric(&self) -> bool {
        let d = self.dim;
        (0..d).all(|i| {
            (0..d).all(|j| {
                (0..d).all(|k| {
                    (0..d).all(|l| {
                        let v = self.get(i, j, k, l);
                        (v.clone() + self.get(j, i, k, l)).is_zero()
                            && (v.clone() + self.get(i, j, l, k)).is_zero()
                    })
                })
            })
        })
    }

    /// The `d² x d²` matrix with rows `(i,j)` and columns `(k,l)`; its trace powers
    /// are the unrestricted (Einstein) contractions.
    pub fn unrestricted_matrix(&self) -> Matrix<S> {
        let d2 = self.dim * self.dim;
        self.entries.chunks(d2).map(<[S]>::to_vec).collect()
    }

    /// Rows and columns over pairs `i < j` drawn from `indices`, in lexicographic order.
    pub fn restricted_matrix_on(&self, indices: &[usize]) -> Matrix<S> {
        let pairs = ordered_pairs(indices);
        pairs
            .iter()
            .map(|&(i, j)| {
                pairs
                    .iter()
                    .map(|&(k, l)| self.get(i, j, k, l).clone())
                    .collect()
            })
            .collect()
    }

    /// Pairs `i < j` over all indices.
    pub fn restricted_matrix(&self) -> Matrix<S> {
        let all: Vec<usize> = (0..self.dim).collect();
        self.restricted_matrix_on(&all)
    }
}

fn ordered_pairs(indices: &[usize]) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    for (a, &i) in indices.iter().enumerate() {
        for &j in &indices[a + 1..] {
            out.push((i, j));
        }
    }
    out
}

/// `K_I = (ψ, ê_I ψ)`.
pub fn k_vector<S: Scalar>(state: &FockState<S>) -> Vec<S> {
    let n = state.modes();
    (0..2 * n)
        .map(|i| mukai_unchecked(state, &state.apply_unchecked(e_lower(i, n))))
        .collect()
}

/// `𝒦^I_J = (ψ, ê^I ê_J ψ)`, row `I`, column `J`.
pub fn k_matrix<S: Scalar>(state: &FockState<S>) -> Matrix<S> {
    let n = state.modes();
    (0..2 * n)
        .map(|i| {
            (0..2 * n)
                .map(|j| mukai_unchecked(state, &word_on(&[e_upper(i, n), e_lower(j, n)], state)))
                .collect()
        })
        .collect()
}

fn fill_pairs<S: Scalar>(
    dim: usize,
    entry: impl Fn(usize, usize, usize, usize) -> S + Sync,
    antisymmetric: bool,
) -> PairMatrix<S> {
    let rows: Vec<(usize, usize)> = (0..dim)
        .flat_map(|i| (0..dim).map(move |j| (i, j)))
        .filter(|&(i, j)| !antisymmetric || i < j)
        .collect();
    let computed: Vec<((usize, usize), Vec<S>)> = rows
        .par_iter()
        .map(|&(i, j)| {
            let mut row = vec![S::zero(); dim * dim];
            for k in 0..dim {
                for l in 0..dim {
                    if antisymmetric && k >= l {
                        continue;
                    }
                    row[k * dim + l] = entry(i, j, k, l);
                }
            }
            ((i, j), row)
        })
        .collect();
    let mut out = PairMatrix::zeros(dim);
    for ((i, j), row) in computed {
        for k in 0..dim {
            for l in 0..dim {
                let v = &row[k * dim + l];
                if v.is_zero() {
                    continue;
                }
                out.set(i, j, k, l, v.clone());
                if antisymmetric {
                    out.set(j, i, k, l, -v.clone());
                    out.set(i, j, l, k, -v.clone());
                    out.set(j, i, l, k, v.clone());
                }
            }
        }
    }
    out
}

/// `𝒦^{IJ}_{KL} = (ψ, ê^I ê^J ê_K ê_L ψ)` by literal operator application.
pub fn k4_tensor<S: Scalar>(state: &FockState<S>) -> PairMatrix<S> {
    let n = state.modes();
    let d = 2 * n;
    let right: Vec<FockState<S>> = (0..d * d)
        .map(|kl| word_on(&[e_lower(kl / d, n), e_lower(kl % d, n)], state))
        .collect();
    fill_pairs(
        d,
        |i, j, k, l| {
            let v = word_on(&[e_upper(i, n), e_upper(j, n)], &right[k * d + l]);
            mukai_unchecked(state, &v)
        },
        false,
    )
}

fn require_residue(modes: usize, required: usize) -> Result<()> {
    if modes % required == 0 {
        Ok(())
    } else {
        Err(Error::Residue { modes, required })
    }
}

/// `ℛ^{IJ}_{KL} = -¼([ê^I, ê^J]ψ, [ê_K, ê_L]ψ)`. Needs `N ≡ 0 (mod 4)`.
pub fn r_tensor<S: Scalar>(state: &FockState<S>) -> Result<PairMatrix<S>> {
    let n = state.modes();
    require_residue(n, 4)?;
    let d = 2 * n;
    let upper: Vec<FockState<S>> = (0..d * d)
        .map(|ij| commutator_on(e_upper(ij / d, n), e_upper(ij % d, n), state))
        .collect();
    let lower: Vec<FockState<S>> = (0..d * d)
        .map(|kl| commutator_on(e_lower(kl / d, n), e_lower(kl % d, n), state))
        .collect();
    let quarter = S::from_ratio(-1, 4);
    Ok(fill_pairs(
        d,
        |i, j, k, l| {
            let (a, b) = (&upper[i * d + j], &lower[k * d + l]);
            if a.is_zero() || b.is_zero() {
                return S::zero();
            }
            mukai_unchecked(a, b) * &quarter
        },
        true,
    ))
}

/// The all-lowercase part `ℛ^{ij}_{kl} = (ψ, p^i p^j n_k n_l ψ)` over `i, j, k, l < N`.
pub fn r_lower<S: Scalar>(state: &FockState<S>) -> Result<PairMatrix<S>> {
    let n = state.modes();
    require_residue(n, 4)?;
    let killed: Vec<FockState<S>> = (0..n * n)
        .map(|kl| {
            word_on(
                &[
                    LadderOp::annihilate(kl / n + 1),
                    LadderOp::annihilate(kl % n + 1),
                ],
                state,
            )
        })
        .collect();
    Ok(fill_pairs(
        n,
        |i, j, k, l| {
            let v = word_on(
                &[LadderOp::create(i + 1), LadderOp::create(j + 1)],
                &killed[k * n + l],
            );
            mukai_unchecked(state, &v)
        },
        true,
    ))
}

/// `ρ^{ij}_{kl} = ½<ψ| p^i p^j n_k n_l ψ>`.
pub fn rho_tensor<S: Scalar>(state: &FockState<S>) -> PairMatrix<S> {
    let n = state.modes();
    let half = S::from_ratio(1, 2);
    let killed: Vec<FockState<S>> = (0..n * n)
        .map(|kl| {
            word_on(
                &[
                    LadderOp::annihilate(kl / n + 1),
                    LadderOp::annihilate(kl % n + 1),
                ],
                state,
            )
        })
        .collect();
    fill_pairs(
        n,
        |i, j, k, l| {
            let v = word_on(
                &[LadderOp::create(i + 1), LadderOp::create(j + 1)],
                &killed[k * n + l],
            );
            state.hermitian_inner(&v).expect("same modes") * &half
        },
        true,
    )
}

/// Antisymmetric coefficients `Z_{ijkl}` of a four-particle state
/// `ψ = (1/4!) Z_{ijkl} p^i p^j p^k p^l |0>`, flattened as `((i*N+j)*N+k)*N+l`.
pub fn z_tensor<S: Scalar>(state: &FockState<S>) -> Result<Vec<S>> {
    let n = state.modes();
    if state.terms().keys().any(|m| m.count_ones() != 4) {
        return Err(Error::Inhomogeneous);
    }
    let mut z = vec![S::zero(); n.pow(4)];
    for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                for d in 0..n {
                    let seq = [a + 1, b + 1, c + 1, d + 1];
                    if let Some(odd) = perm_sign(&seq) {
                        let v = state.coeff(mask_of(&seq));
                        z[((a * n + b) * n + c) * n + d] = if odd { -v } else { v };
                    }
                }
            }
        }
    }
    Ok(z)
}

/// Pair labels of the 28x28 view, 1-based modes, as ordered pairs.
/// Six groups of four, one per qubit pair, then the four conjugate pairs.
pub fn pair_order_28() -> Vec<(usize, usize)> {
    let mut out = Vec::with_capacity(28);
    for (a, b) in QUBIT_PAIRS {
        if (a, b) == (1, 3) {
            // rows follow 𝓜, whose row index has qubit 3 as the major bit
            out.extend([(a, b), (a + 4, b), (a, b + 4), (a + 4, b + 4)]);
        } else {
            out.extend([(a, b), (a, b + 4), (a + 4, b), (a + 4, b + 4)]);
        }
    }
    out.extend((1..=4).map(|i| (i, i + 4)));
    out
}

/// Qubit pairs in block order.
pub const QUBIT_PAIRS: [(usize, usize); 6] = [(1, 2), (3, 4), (1, 3), (2, 4), (1, 4), (2, 3)];

fn require_four_fermion_eight<S: Scalar>(state: &FockState<S>) -> Result<()> {
    if state.modes() != 8 {
        return Err(Error::Shape {
            expected: "8 modes".into(),
            got: format!("{} modes", state.modes()),
        });
    }
    if state.terms().keys().any(|m| m.count_ones() != 4) {
        return Err(Error::Inhomogeneous);
    }
    Ok(())
}

fn view_28<S: Scalar>(t: &PairMatrix<S>, factor: &S) -> Matrix<S> {
    let order = pair_order_28();
    order
        .iter()
        .map(|&(i, j)| {
            order
                .iter()
                .map(|&(k, l)| t.get(i - 1, j - 1, l - 1, k - 1).clone() * factor)
                .collect()
        })
        .collect()
}

/// The 28x28 matrix with entries `½ℛ^{ij}_{lk}` (lower pair swapped), rows in [`pair_order_28`].
pub fn katanova_28<S: Scalar>(state: &FockState<S>) -> Result<Matrix<S>> {
    require_four_fermion_eight(state)?;
    Ok(view_28(&r_lower(state)?, &S::from_ratio(1, 2)))
}

/// The 28x28 matrix with entries `2ρ^{ij}_{lk}`: the pair-folded unrestricted density,
/// whose six qubit-pair blocks are transposed two-qubit reduced densities.
pub fn density_28<S: Scalar>(state: &FockState<S>) -> Result<Matrix<S>> {
    require_four_fermion_eight(state)?;
    Ok(view_28(&rho_tensor(state), &S::from_i64(2)))
}

/// Seven diagonal 4x4 blocks of a 28x28 view, ordered 12, 34, 13, 24, 14, 23, then the
/// conjugate-pair block.
#[derive(Clone, Debug, PartialEq)]
pub struct BlockMatrix28<S> {
    pub blocks: Vec<Matrix<S>>,
    /// Whether every entry outside the seven blocks vanishes.
    pub block_diagonal: bool,
}

impl<S: Scalar> BlockMatrix28<S> {
    pub fn from_view(view: &Matrix<S>, factor: &S) -> Result<Self> {
        if !linalg::is_square(view, 28) {
            return Err(Error::Dimension {
                rows: view.len(),
                cols: view.first().map_or(0, Vec::len),
                expected: 28,
            });
        }
        let blocks = (0..7)
            .map(|b| {
                (0..4)
                    .map(|r| {
                        (0..4)
                            .map(|c| view[4 * b + r][4 * b + c].clone() * factor)
                            .collect()
                    })
                    .collect()
            })
            .collect();
        let block_diagonal =
            (0..28).all(|r| (0..28).all(|c| r / 4 == c / 4 || view[r][c].is_zero()));
        Ok(BlockMatrix28 {
            blocks,
            block_diagonal,
        })
    }

    pub fn zero_block_vanishes(&self) -> bool {
        self.blocks[6].iter().flatten().all(Scalar::is_zero)
    }
}

/// The blocks `ℛ_{ab}` of the Katanova view, undoing its factor ½.
pub fn seven_blocks<S: Scalar>(state: &FockState<S>) -> Result<BlockMatrix28<S>> {
    BlockMatrix28::from_view(&katanova_28(state)?, &S::from_i64(2))
}

/// `ε ⊗ ε` with `ε = [[0,1],[-1,0]]`.
pub fn eps_eps<S: Scalar>() -> Matrix<S> {
    linalg::from_i64(&[&[0, 0, 0, 1], &[0, 0, -1, 0], &[0, -1, 0, 0], &[1, 0, 0, 0]])
}

/// `(εε A εε Aᵀ, εε Aᵀ εε A)`: the two blocks an amplitude matrix contributes.
pub fn block_pair_from<S: Scalar>(a: &Matrix<S>) -> (Matrix<S>, Matrix<S>) {
    let e = eps_eps::<S>();
    let at = linalg::transpose(a);
    let first = linalg::mul(&linalg::mul(&linalg::mul(&e, a), &e), &at);
    let second = linalg::mul(&linalg::mul(&linalg::mul(&e, &at), &e), a);
    (first, second)
}

/// Two-qubit reduced density of an embedded four-qubit state, basis `|μ_a μ_b>`
/// with `a < b` and qubit `a` as the major bit. The trace is `<ψ|ψ>`.
pub fn reduced_density<S: Scalar>(state: &FockState<S>, pair: (usize, usize)) -> Result<Matrix<S>> {
    require_four_fermion_eight(state)?;
    let (a, b) = pair;
    if !(1..=4).contains(&a) || !(a + 1..=4).contains(&b) {
        return Err(Error::Invalid(format!(
            "qubit pair ({a},{b}) needs 1 <= a < b <= 4"
        )));
    }
    let rho = rho_tensor(state);
    let two = S::from_i64(2);
    let mode = |q: usize, mu: usize| q + 4 * mu - 1;
    Ok((0..4)
        .map(|r| {
            (0..4)
                .map(|c| {
                    let (ma, mb, na, nb) = (r >> 1, r & 1, c >> 1, c & 1);
                    rho.get(mode(a, na), mode(b, nb), mode(b, mb), mode(a, ma))
                        .clone()
                        * &two
                })
                .collect()
        })
        .collect())
}

/// `(𝓛, 𝓜, 𝓝)`: amplitudes of a four-qubit state arranged as `ψ_{μ1μ2,μ3μ4}`,
/// `ψ_{μ3μ1,μ2μ4}` and `ψ_{μ1μ4,μ2μ3}`.
pub fn lmn_matrices<S: Scalar>(q: &QubitState<S>) -> Result<[Matrix<S>; 3]> {
    if q.qubits() != 4 {
        return Err(Error::QubitCount(q.qubits()));
    }
    let amp = |m: [usize; 4]| q.amp(8 * m[0] + 4 * m[1] + 2 * m[2] + m[3]).clone();
    let build = |f: &dyn Fn(usize, usize) -> [usize; 4]| -> Matrix<S> {
        (0..4)
            .map(|r| (0..4).map(|c| amp(f(r, c))).collect())
            .collect()
    };
    let l = build(&|r, c| [r >> 1, r & 1, c >> 1, c & 1]);
    let m = build(&|r, c| [r & 1, c >> 1, r >> 1, c & 1]);
    let nn = build(&|r, c| [r >> 1, c >> 1, c & 1, r & 1]);
    Ok([l, m, nn])
}
