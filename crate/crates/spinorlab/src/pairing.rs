//! The Spin-invariant bilinear form, word transposition, and the spin flip.

use crate::error::{Error, Result};
use crate::fock::{FockState, LadderOp, LadderWord};
use crate::scalar::Scalar;

/// `(-1)^{N(N-1)/2}`: the pairing is symmetric for `N ≡ 0,1 (mod 4)`.
pub fn pairing_symmetry(modes: usize) -> i32 {
    if (modes * modes.saturating_sub(1) / 2) % 2 == 0 {
        1
    } else {
        -1
    }
}

/// Reverses the factor order and keeps the coefficient.
pub fn transpose_word<S: Scalar>(word: &LadderWord<S>) -> LadderWord<S> {
    LadderWord {
        coeff: word.coeff.clone(),
        factors: word.factors.iter().rev().copied().collect(),
    }
}

/// Sign with which `(p^A, p^B)` contributes when `B` is the complement of `A`:
/// `(-1)^{|A|(|A|-1)/2}` times the parity of pairs `a ∈ A, b ∈ B` with `a > b`.
pub fn complement_sign(mask: u32, modes: usize) -> bool {
    let full = if modes == 32 {
        u32::MAX
    } else {
        (1u32 << modes) - 1
    };
    let comp = full & !mask;
    let k = mask.count_ones();
    let mut odd = (k * k.saturating_sub(1) / 2) % 2 == 1;
    let mut rest = mask;
    while rest != 0 {
        let bit = rest.trailing_zeros();
        rest &= rest - 1;
        if (comp & ((1u32 << bit) - 1)).count_ones() % 2 == 1 {
            odd = !odd;
        }
    }
    odd
}

/// The bilinear pairing `(a, b)`, evaluated as a signed sum over complementary monomials.
pub fn mukai<S: Scalar>(a: &FockState<S>, b: &FockState<S>) -> Result<S> {
    if a.modes() != b.modes() {
        return Err(Error::ModeMismatch(a.modes(), b.modes()));
    }
    Ok(mukai_unchecked(a, b))
}

pub(crate) fn mukai_unchecked<S: Scalar>(a: &FockState<S>, b: &FockState<S>) -> S {
    let n = a.modes();
    let full = a.full_mask();
    let mut acc = S::zero();
    for (m, x) in a.terms() {
        if let Some(y) = b.terms().get(&(full ^ m)) {
            let t = x.clone() * y;
            acc = if complement_sign(*m, n) {
                acc - &t
            } else {
                acc + &t
            };
        }
    }
    acc
}

/// The pairing from its operator definition:
/// `(-1)^{N(N-1)/2}` times the vacuum coefficient of `n_1 ... n_N Ψᵀ Φ |0>`.
/// Slow; kept as the reference the fast form is checked against.
pub fn mukai_by_words<S: Scalar>(a: &FockState<S>, b: &FockState<S>) -> Result<S> {
    let n = a.modes();
    if n != b.modes() {
        return Err(Error::ModeMismatch(n, b.modes()));
    }
    let kill = LadderWord::unit((1..=n).map(LadderOp::annihilate).collect());
    let mut acc = S::zero();
    for (m, x) in a.terms() {
        // Ψ for this term is x p^{i1} ... p^{ik}; its transpose reverses the creators
        let ascending: Vec<LadderOp> = (1..=n)
            .filter(|i| m >> (i - 1) & 1 == 1)
            .map(LadderOp::create)
            .collect();
        let word = transpose_word(&LadderWord::new(x.clone(), ascending));
        let v = b.apply_word(&word)?.apply_word(&kill)?;
        acc = acc + &v.coeff(0);
    }
    Ok(if pairing_symmetry(n) < 0 { -acc } else { acc })
}

/// The antilinear flip `ψ̃` with `<ψ̃|φ> = (ψ, φ)` for every `φ`.
pub fn spin_flip<S: Scalar>(state: &FockState<S>) -> FockState<S> {
    let n = state.modes();
    let full = state.full_mask();
    let mut out = FockState::zero(n).expect("valid modes");
    for (m, c) in state.terms() {
        let v = c.conj();
        out.add_term(full ^ m, if complement_sign(*m, n) { -v } else { v });
    }
    out
}

/// Reality condition `ψ̃ = ψ`.
pub fn is_majorana<S: Scalar>(state: &FockState<S>) -> bool {
    let f = spin_flip(state);
    let keys: std::collections::BTreeSet<u32> = f
        .terms()
        .keys()
        .chain(state.terms().keys())
        .copied()
        .collect();
    keys.iter().all(|m| f.coeff(*m).close_to(&state.coeff(*m)))
}
