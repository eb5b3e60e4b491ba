//! Annihilator subspaces and the pure-spinor test.

use std::collections::BTreeMap;

use rand::seq::index::sample as pick_indices;

use crate::clifford::b_transform;
use crate::covariants::e_lower;
use crate::error::{Error, Result};
use crate::fock::{mask_of, FockState};
use crate::linalg;
use crate::sample;
use crate::scalar::{GaussRat, Scalar};

/// Basis of `{x : x̂ψ = 0}` where `x̂ = Σ_I x^I ê_I`, with `ê_I = (n_1..n_N, p^1..p^N)`.
#[derive(Clone, Debug, PartialEq)]
pub struct AnnihilatorBasis<S> {
    pub vectors: Vec<Vec<S>>,
}

impl<S: Scalar> AnnihilatorBasis<S> {
    pub fn nullity(&self) -> usize {
        self.vectors.len()
    }
}

/// `g(x, x') = Σ_i x^i x'^{i+N} + x^{i+N} x'^i`.
pub fn isotropy_form<S: Scalar>(x: &[S], y: &[S]) -> S {
    let n = x.len() / 2;
    (0..n).fold(S::zero(), |acc, i| {
        acc + &(x[i].clone() * &y[i + n]) + &(x[i + n].clone() * &y[i])
    })
}

pub fn annihilator_basis<S: Scalar>(state: &FockState<S>) -> Result<AnnihilatorBasis<S>> {
    if state.is_zero() {
        return Err(Error::ZeroState);
    }
    let n = state.modes();
    let images: Vec<FockState<S>> = (0..2 * n)
        .map(|i| state.apply_unchecked(e_lower(i, n)))
        .collect();
    // one row per monomial reached by some ê_I ψ
    let mut rows: BTreeMap<u32, Vec<S>> = BTreeMap::new();
    for (col, img) in images.iter().enumerate() {
        for (m, c) in img.terms() {
            rows.entry(*m).or_insert_with(|| vec![S::zero(); 2 * n])[col] = c.clone();
        }
    }
    let matrix: Vec<Vec<S>> = rows.into_values().collect();
    Ok(AnnihilatorBasis {
        vectors: linalg::kernel(&matrix, 2 * n),
    })
}

/// Pure means the annihilator is maximal: nullity `N`.
pub fn is_pure_spinor<S: Scalar>(state: &FockState<S>) -> Result<bool> {
    Ok(annihilator_basis(state)?.nullity() == state.modes())
}

/// `λ e^{B̂} p^{i_1}…p^{i_k}|0>` with seeded random `λ`, `B` and occupied modes.
pub fn random_pure_spinor(modes: usize, k: usize, seed: u64) -> Result<FockState<GaussRat>> {
    if k > modes {
        return Err(Error::Invalid(format!("{k} occupied modes out of {modes}")));
    }
    let mut rng = sample::rng(seed);
    let mut occupied: Vec<usize> = pick_indices(&mut rng, modes, k)
        .into_iter()
        .map(|i| i + 1)
        .collect();
    occupied.sort_unstable();
    let lambda = sample::nonzero_gauss(&mut rng);
    let b = sample::antisymmetric(&mut rng, modes, 0.5);
    let slater = FockState::basis(modes, mask_of(&occupied), lambda)?;
    b_transform(&b, &slater)
}
