//! Trace invariants of the four-index covariants and the classical four-qubit set.

use std::collections::BTreeMap;
use std::fmt;

use crate::clifford::{chirality, Chirality};
use crate::covariants::{block_pair_from, katanova_28, lmn_matrices, r_lower, r_tensor};
use crate::embed::{embed_single, QubitState};
use crate::error::{Error, Result};
use crate::fock::FockState;
use crate::linalg::{self, Matrix};
use crate::pairing::mukai_unchecked;
use crate::scalar::Scalar;

/// Orders `p` of the independent `I_{2p}` for four fermions on eight modes.
pub const SL8_ORDERS: [usize; 7] = [1, 3, 4, 5, 6, 7, 9];
/// Orders `p` of the independent `𝓘_{2p}` for eight-mode Weyl spinors.
pub const SPIN16_ORDERS: [usize; 8] = [1, 4, 6, 7, 9, 10, 12, 15];

/// How the pair indices of a four-index tensor are summed in a trace power.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum PairContraction {
    /// Each unordered pair once (`I < J`). The invariant relations below hold in this form.
    #[default]
    Restricted,
    /// Every ordered pair. Differs from the restricted trace of order `p` by `2^p`.
    Unrestricted,
}

/// `(ψ, ψ)`.
pub fn quadratic_form<S: Scalar>(state: &FockState<S>) -> S {
    mukai_unchecked(state, state)
}

/// `U·V = U⁰V³ - U¹V² - U²V¹ + U³V⁰`.
pub fn eps_dot<S: Scalar>(u: &[S], v: &[S]) -> S {
    u[0].clone() * &v[3] - u[1].clone() * &v[2] - u[2].clone() * &v[1] + u[3].clone() * &v[0]
}

fn require_four<S: Scalar>(q: &QubitState<S>) -> Result<()> {
    if q.qubits() == 4 {
        Ok(())
    } else {
        Err(Error::QubitCount(q.qubits()))
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct FourQubitInvariants<S> {
    pub h: S,
    pub l: S,
    pub m: S,
    pub n: S,
    pub d: S,
    pub e: S,
    pub f: S,
    /// `L² + M² + N²`
    pub sigma: S,
    /// `D + E + F`
    pub gamma: S,
    /// `(L - M)(M - N)(N - L)`
    pub pi: S,
    pub s1: S,
    pub s2: S,
    pub s3: S,
    pub s4: S,
}

fn rows<S: Scalar>(q: &QubitState<S>) -> [Vec<S>; 4] {
    let a = q.amps();
    [0, 1, 2, 3].map(|r| a[4 * r..4 * r + 4].to_vec())
}

/// `H = U·Z - V·W`.
pub fn h_invariant<S: Scalar>(q: &QubitState<S>) -> Result<S> {
    require_four(q)?;
    let [u, v, w, z] = rows(q);
    Ok(eps_dot(&u, &z) - eps_dot(&v, &w))
}

/// The sextic coefficient `s3` from two 3x3 Gram determinants of the rows `U, V, W, Z`.
pub fn s3_gram<S: Scalar>(q: &QubitState<S>) -> Result<S> {
    require_four(q)?;
    let [u, v, w, z] = rows(q);
    let d = eps_dot::<S>;
    let g1 = vec![
        vec![d(&u, &u), d(&u, &v), d(&u, &z)],
        vec![d(&u, &w), d(&v, &w), d(&w, &z)],
        vec![d(&u, &z), d(&v, &z), d(&z, &z)],
    ];
    let g2 = vec![
        vec![d(&u, &v), d(&v, &v), d(&v, &w)],
        vec![d(&u, &w), d(&v, &w), d(&w, &w)],
        vec![d(&u, &z), d(&v, &z), d(&w, &z)],
    ];
    Ok((linalg::det(&g1) - linalg::det(&g2)) * &S::from_i64(2))
}

pub fn fourqubit_invariants<S: Scalar>(q: &QubitState<S>) -> Result<FourQubitInvariants<S>> {
    let h = h_invariant(q)?;
    let [lm, mm, nm] = lmn_matrices(q)?;
    let (l, m, n) = (linalg::det(&lm), linalg::det(&mm), linalg::det(&nm));
    let s3 = s3_gram(q)?;
    let hl = h.clone() * &l;
    let d = (s3.clone() - hl.clone() * &S::from_i64(2)) * &S::from_ratio(1, 4);
    let e = d.clone() + &hl;
    let f = e.clone() + &(h.clone() * &n);
    let sigma = l.clone() * &l + &(m.clone() * &m) + &(n.clone() * &n);
    let gamma = d.clone() + &e + &f;
    let pi = (l.clone() - &m) * &(m.clone() - &n) * &(n.clone() - &l);
    Ok(FourQubitInvariants {
        s1: h.clone() * &S::from_i64(2),
        s2: h.clone() * &h + &((m.clone() - &n) * &S::from_i64(2)),
        s3,
        s4: l.clone() * &l,
        h,
        l,
        m,
        n,
        d,
        e,
        f,
        sigma,
        gamma,
        pi,
    })
}

/// Which amplitude arrangement feeds the 4x4 block `R`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum AmplitudeMatrix {
    L,
    M,
    N,
}

impl AmplitudeMatrix {
    pub fn all() -> [AmplitudeMatrix; 3] {
        [AmplitudeMatrix::L, AmplitudeMatrix::M, AmplitudeMatrix::N]
    }
}

/// `R = (ε⊗ε) A (ε⊗ε) Aᵀ` for the chosen amplitude matrix.
pub fn r_block<S: Scalar>(q: &QubitState<S>, which: AmplitudeMatrix) -> Result<Matrix<S>> {
    let [l, m, n] = lmn_matrices(q)?;
    let a = match which {
        AmplitudeMatrix::L => l,
        AmplitudeMatrix::M => m,
        AmplitudeMatrix::N => n,
    };
    Ok(block_pair_from(&a).0)
}

/// `½Tr R^p` for `p = 1..=max_p`.
pub fn half_traces<S: Scalar>(
    q: &QubitState<S>,
    which: AmplitudeMatrix,
    max_p: usize,
) -> Result<Vec<S>> {
    let r = r_block(q, which)?;
    let half = S::from_ratio(1, 2);
    Ok(S::trace_powers(&r, max_p)
        .into_iter()
        .map(|t| t * &half)
        .collect())
}

/// Characteristic coefficients `(s1, s2, s3, s4)` of `R`, through Newton's identities.
pub fn char_poly_s<S: Scalar>(q: &QubitState<S>, which: AmplitudeMatrix) -> Result<[S; 4]> {
    let r = r_block(q, which)?;
    let s = linalg::newton_coefficients(&S::trace_powers(&r, 4));
    Ok([s[0].clone(), s[1].clone(), s[2].clone(), s[3].clone()])
}

/// `g_{2p} = ½ Σ Tr ℛ_ab^p` over the six qubit-pair blocks, keyed by `p`.
pub fn g_invariants<S: Scalar>(q: &QubitState<S>, orders: &[usize]) -> Result<BTreeMap<usize, S>> {
    let [l, m, n] = lmn_matrices(q)?;
    let max_p = orders.iter().copied().max().unwrap_or(0);
    let mut sums = vec![S::zero(); max_p];
    for a in [l, m, n] {
        let (first, second) = block_pair_from(&a);
        for block in [first, second] {
            for (acc, t) in sums.iter_mut().zip(S::trace_powers(&block, max_p)) {
                *acc = acc.clone() + &t;
            }
        }
    }
    let half = S::from_ratio(1, 2);
    Ok(orders
        .iter()
        .map(|&p| (p, sums[p - 1].clone() * &half))
        .collect())
}

/// `f′_{2p} = Tr K^p` for the 28x28 Katanova view of the embedded state.
pub fn f_prime_invariants<S: Scalar>(
    q: &QubitState<S>,
    orders: &[usize],
) -> Result<BTreeMap<usize, S>> {
    require_four(q)?;
    let view = katanova_28(&embed_single(q))?;
    Ok(pick_orders(&view, orders))
}

fn pick_orders<S: Scalar>(m: &Matrix<S>, orders: &[usize]) -> BTreeMap<usize, S> {
    let max_p = orders.iter().copied().max().unwrap_or(0);
    let traces = S::trace_powers(m, max_p);
    orders.iter().map(|&p| (p, traces[p - 1].clone())).collect()
}

fn check_orders(orders: &[usize]) -> Result<()> {
    if orders.contains(&0) {
        return Err(Error::Invalid("orders start at 1".into()));
    }
    Ok(())
}

/// `I_{2p}`: trace powers of `ℛ^{ij}_{kl}` over lowercase pairs, for four fermions on eight modes.
pub fn sl8_trace_invariants<S: Scalar>(
    state: &FockState<S>,
    orders: &[usize],
    contraction: PairContraction,
) -> Result<BTreeMap<usize, S>> {
    check_orders(orders)?;
    if state.modes() != 8 {
        return Err(Error::Shape {
            expected: "8 modes".into(),
            got: format!("{} modes", state.modes()),
        });
    }
    if let Some(m) = state.terms().keys().find(|m| m.count_ones() != 4) {
        return Err(Error::Shape {
            expected: "four-particle terms only".into(),
            got: format!("a {}-particle term", m.count_ones()),
        });
    }
    let r = r_lower(state)?;
    let m = match contraction {
        PairContraction::Restricted => r.restricted_matrix(),
        PairContraction::Unrestricted => r.unrestricted_matrix(),
    };
    Ok(pick_orders(&m, orders))
}

/// `𝓘_{2p}`: trace powers of the full `ℛ^{IJ}_{KL}` of an eight-mode Weyl spinor.
pub fn spin16_invariants<S: Scalar>(
    state: &FockState<S>,
    orders: &[usize],
    contraction: PairContraction,
) -> Result<BTreeMap<usize, S>> {
    check_orders(orders)?;
    if state.modes() != 8 {
        return Err(Error::Shape {
            expected: "8 modes".into(),
            got: format!("{} modes", state.modes()),
        });
    }
    if chirality(state) == Chirality::Mixed {
        return Err(Error::MixedChirality);
    }
    let r = r_tensor(state)?;
    let m = match contraction {
        PairContraction::Restricted => r.restricted_matrix(),
        PairContraction::Unrestricted => r.unrestricted_matrix(),
    };
    Ok(pick_orders(&m, orders))
}

/// Closed forms of `g_{2p}` in the basic invariants, for `p <= 6`.
pub fn g_closed_form<S: Scalar>(inv: &FourQubitInvariants<S>, p: usize) -> Option<S> {
    let c = |v: i64| S::from_i64(v);
    let (h, gm, sg, pi) = (&inv.h, &inv.gamma, &inv.sigma, &inv.pi);
    let hp = |k: u32| h.pow(k);
    Some(match p {
        1 => c(6) * h,
        2 => c(6) * &hp(2),
        3 => c(6) * &hp(3) + &(c(12) * gm),
        4 => c(6) * &hp(4) + &(c(32) * h * gm) + &(c(20) * sg),
        5 => c(6) * &hp(5) + &(c(90) * h * sg) + &(c(60) * &hp(2) * gm),
        6 => {
            c(6) * &hp(6) + &(c(96) * &hp(3) * gm) + &(c(250) * &hp(2) * sg) + &(c(16) * gm * gm)
                - &(c(60) * pi)
        }
        _ => return None,
    })
}

/// Closed forms of `½Tr R^p` for the block built from `𝓛`, `p <= 6`.
pub fn half_trace_closed_form<S: Scalar>(inv: &FourQubitInvariants<S>, p: usize) -> Option<S> {
    let c = |v: i64| S::from_i64(v);
    let h = &inv.h;
    let nm = inv.n.clone() - &inv.m;
    let de = inv.d.clone() + &inv.e;
    let l2 = inv.l.clone() * &inv.l;
    let hp = |k: u32| h.pow(k);
    Some(match p {
        1 => h.clone(),
        2 => hp(2) + &(c(2) * &nm),
        3 => hp(3) + &(c(6) * h * &nm) + &(c(3) * &de),
        4 => {
            hp(4) + &(c(12) * &hp(2) * &nm) + &(c(8) * h * &de) + &(c(4) * &nm * &nm)
                - &(c(2) * &l2)
        }
        5 => {
            hp(5) + &(c(20) * &hp(3) * &nm) + &(c(15) * &hp(2) * &de) - &(c(5) * h * &l2)
                + &(c(20) * h * &nm * &nm)
                + &(c(10) * &de * &nm)
        }
        6 => {
            hp(6) + &(c(30) * &hp(4) * &nm) + &(c(24) * &hp(3) * &de) - &(c(9) * &hp(2) * &l2)
                + &(c(60) * &hp(2) * &nm * &nm)
                + &(c(48) * h * &de * &nm)
                + &(c(6) * &de * &de)
                + &(c(8) * &nm.pow(3))
                - &(c(6) * &l2 * &nm)
        }
        _ => return None,
    })
}

/// Where a reported value came from.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Provenance {
    TracePath,
    ClosedForm,
    Oracle,
}

impl fmt::Display for Provenance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Provenance::TracePath => "trace-path",
            Provenance::ClosedForm => "closed-form",
            Provenance::Oracle => "oracle",
        })
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct InvariantEntry<S> {
    pub label: String,
    pub value: S,
    pub provenance: Provenance,
}

#[derive(Clone, Debug, PartialEq)]
pub struct InvariantReport<S> {
    pub entries: Vec<InvariantEntry<S>>,
}

impl<S: Scalar> InvariantReport<S> {
    pub fn push(&mut self, label: impl Into<String>, value: S, provenance: Provenance) {
        self.entries.push(InvariantEntry {
            label: label.into(),
            value,
            provenance,
        });
    }

    pub fn get(&self, label: &str) -> Option<&S> {
        self.entries
            .iter()
            .find(|e| e.label == label)
            .map(|e| &e.value)
    }

    /// The basic four-qubit invariants with `g_{2p}` for the requested orders.
    pub fn four_qubit(q: &QubitState<S>, orders: &[usize]) -> Result<Self> {
        let inv = fourqubit_invariants(q)?;
        let mut out = InvariantReport {
            entries: Vec::new(),
        };
        for (label, v) in [
            ("H", &inv.h),
            ("L", &inv.l),
            ("M", &inv.m),
            ("N", &inv.n),
            ("D", &inv.d),
            ("E", &inv.e),
            ("F", &inv.f),
            ("Sigma", &inv.sigma),
            ("Gamma", &inv.gamma),
            ("Pi", &inv.pi),
        ] {
            out.push(label, v.clone(), Provenance::ClosedForm);
        }
        for (p, g) in g_invariants(q, orders)? {
            out.push(format!("g{}", 2 * p), g, Provenance::TracePath);
        }
        Ok(out)
    }
}
