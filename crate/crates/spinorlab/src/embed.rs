//! Qubit registers embedded in Fock space by single, double and mixed occupancy.
//!
//! With `N = 2n` modes, box `k` holds modes `k` and `k̄ = k + n`. A qubit index
//! bit `μ_k = 1` means the box-`k` particle sits in `k̄`. Double occupancy for a
//! box is reached by applying `Γ_k`.

use std::collections::HashMap;
use std::fmt;

use crate::clifford::gamma_apply;
use crate::error::{Error, Result};
use crate::fock::{perm_sign, FockState};
use crate::linalg::{self, Matrix};
use crate::scalar::Scalar;

/// Amplitudes `ψ_{μ1…μn}`; `μ1` is the most significant bit of the array index.
#[derive(Clone, Debug, PartialEq)]
pub struct QubitState<S> {
    n: usize,
    amps: Vec<S>,
}

impl<S: Scalar> QubitState<S> {
    pub fn new(n: usize, amps: Vec<S>) -> Result<Self> {
        if !(1..=4).contains(&n) {
            return Err(Error::QubitCount(n));
        }
        if amps.len() != 1 << n {
            return Err(Error::Shape {
                expected: format!("{} amplitudes", 1 << n),
                got: amps.len().to_string(),
            });
        }
        Ok(QubitState { n, amps })
    }

    pub fn zero(n: usize) -> Result<Self> {
        Self::new(n, vec![S::zero(); 1usize << n.min(8)])
    }

    pub fn basis(n: usize, index: usize) -> Result<Self> {
        let mut q = Self::zero(n)?;
        q.amps[index] = S::one();
        Ok(q)
    }

    pub fn qubits(&self) -> usize {
        self.n
    }

    pub fn amps(&self) -> &[S] {
        &self.amps
    }

    pub fn amp(&self, index: usize) -> &S {
        &self.amps[index]
    }

    pub fn set(&mut self, index: usize, v: S) {
        self.amps[index] = v;
    }

    /// `μ_k` of an index, `k` counted from 1.
    pub fn bit(&self, index: usize, k: usize) -> usize {
        index >> (self.n - k) & 1
    }

    pub fn scale(&self, c: &S) -> Self {
        QubitState {
            n: self.n,
            amps: self.amps.iter().map(|a| a.clone() * c).collect(),
        }
    }
}

/// Per-box occupancy choice: 0 single, 1 double.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct OccupancyPattern {
    bits: Vec<u8>,
}

impl OccupancyPattern {
    pub fn new(bits: Vec<u8>) -> Result<Self> {
        if !(1..=4).contains(&bits.len()) || bits.iter().any(|&b| b > 1) {
            return Err(Error::Invalid(format!("bad occupancy pattern {bits:?}")));
        }
        Ok(OccupancyPattern { bits })
    }

    pub fn single(n: usize) -> Self {
        OccupancyPattern { bits: vec![0; n] }
    }

    pub fn double(n: usize) -> Self {
        OccupancyPattern { bits: vec![1; n] }
    }

    pub fn all(n: usize) -> Vec<Self> {
        (0..1usize << n)
            .map(|v| OccupancyPattern {
                bits: (0..n).map(|k| (v >> (n - 1 - k) & 1) as u8).collect(),
            })
            .collect()
    }

    pub fn bits(&self) -> &[u8] {
        &self.bits
    }

    pub fn len(&self) -> usize {
        self.bits.len()
    }

    pub fn is_empty(&self) -> bool {
        self.bits.is_empty()
    }

    pub fn doubles(&self) -> usize {
        self.bits.iter().filter(|&&b| b == 1).count()
    }
}

impl std::str::FromStr for OccupancyPattern {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let bits = s
            .chars()
            .map(|c| match c {
                '0' => Ok(0),
                '1' => Ok(1),
                _ => Err(Error::Invalid(format!(
                    "pattern must be 0/1 digits, got {s:?}"
                ))),
            })
            .collect::<Result<Vec<u8>>>()?;
        OccupancyPattern::new(bits)
    }
}

impl fmt::Display for OccupancyPattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for b in &self.bits {
            write!(f, "{b}")?;
        }
        Ok(())
    }
}

/// Ordered creator list `(a_1, …, a_n)` with `a_k = k + n μ_k`.
pub fn single_modes(n: usize, index: usize) -> Vec<usize> {
    (1..=n).map(|k| k + n * (index >> (n - k) & 1)).collect()
}

/// `|μ1…μn> ↦ p^{a1} ⋯ p^{an}|0>`.
pub fn embed_single<S: Scalar>(q: &QubitState<S>) -> FockState<S> {
    let n = q.n;
    let mut out = FockState::zero(2 * n).expect("2n <= 8");
    for (idx, a) in q.amps.iter().enumerate() {
        if a.is_zero() {
            continue;
        }
        let modes = single_modes(n, idx);
        let odd = perm_sign(&modes).expect("distinct modes");
        out.add_term(
            modes.iter().fold(0, |m, &i| m | 1 << (i - 1)),
            if odd { -a.clone() } else { a.clone() },
        );
    }
    out
}

/// Single-occupancy embedding followed by `Γ_1^{μ1} ⋯ Γ_n^{μn}`.
pub fn embed_pattern<S: Scalar>(
    q: &QubitState<S>,
    pattern: &OccupancyPattern,
) -> Result<FockState<S>> {
    if pattern.len() != q.n {
        return Err(Error::Shape {
            expected: format!("pattern of length {}", q.n),
            got: pattern.to_string(),
        });
    }
    let mut s = embed_single(q);
    for k in (1..=q.n).rev() {
        if pattern.bits[k - 1] == 1 {
            s = gamma_apply(k, &s)?;
        }
    }
    Ok(s)
}

/// Image mask and sign of each qubit basis vector under `embed_pattern`.
fn pattern_images(n: usize, pattern: &OccupancyPattern) -> Vec<(u32, bool)> {
    (0..1usize << n)
        .map(|idx| {
            let q = QubitState::<crate::scalar::GaussRat>::basis(n, idx).expect("n in range");
            let s = embed_pattern(&q, pattern).expect("pattern length");
            let (m, c) = s.terms().iter().next().expect("single monomial");
            (*m, c.re < num_rational::BigRational::from_integer(0.into()))
        })
        .collect()
}

/// Inverse of [`embed_pattern`] on its image.
pub fn extract_qubit<S: Scalar>(
    state: &FockState<S>,
    pattern: &OccupancyPattern,
) -> Result<QubitState<S>> {
    let n = pattern.len();
    if state.modes() != 2 * n {
        return Err(Error::Shape {
            expected: format!("{} modes", 2 * n),
            got: state.modes().to_string(),
        });
    }
    let lookup: HashMap<u32, (usize, bool)> = pattern_images(n, pattern)
        .into_iter()
        .enumerate()
        .map(|(idx, (m, neg))| (m, (idx, neg)))
        .collect();
    let mut q = QubitState::zero(n)?;
    let mut stray = Vec::new();
    for (m, c) in state.terms() {
        match lookup.get(m) {
            Some(&(idx, neg)) => q.amps[idx] = if neg { -c.clone() } else { c.clone() },
            None => stray.push(*m),
        }
    }
    if stray.is_empty() {
        Ok(q)
    } else {
        Err(Error::Support(stray))
    }
}

/// Wootters flip `ψ̃_μ = ε^{μ1ν1}⋯ε^{μnνn} conj(ψ_ν)` with `ε^{01} = 1`.
pub fn wootters_flip<S: Scalar>(q: &QubitState<S>) -> QubitState<S> {
    let full = (1usize << q.n) - 1;
    let amps = (0..=full)
        .map(|mu| {
            let v = q.amps[full ^ mu].conj();
            if mu.count_ones() % 2 == 1 {
                -v
            } else {
                v
            }
        })
        .collect();
    QubitState { n: q.n, amps }
}

/// The `S_n ⋉ SL(2)^n` action: legs are permuted first (output leg `k` is
/// input leg `perm[k]`, 0-based), then `locals[k]` acts on leg `k`.
pub fn qubit_slocc_apply<S: Scalar>(
    q: &QubitState<S>,
    locals: &[Matrix<S>],
    perm: &[usize],
) -> Result<QubitState<S>> {
    let n = q.n;
    let mut seen = vec![false; n];
    if perm.len() != n
        || perm
            .iter()
            .any(|&p| p >= n || std::mem::replace(&mut seen[p], true))
    {
        return Err(Error::Invalid(format!(
            "not a permutation of {n} legs: {perm:?}"
        )));
    }
    if locals.len() != n {
        return Err(Error::Shape {
            expected: format!("{n} local matrices"),
            got: locals.len().to_string(),
        });
    }
    for l in locals {
        if !linalg::is_square(l, 2) {
            return Err(Error::Dimension {
                rows: l.len(),
                cols: l.first().map_or(0, Vec::len),
                expected: 2,
            });
        }
        if linalg::det(l) != S::one() {
            return Err(Error::DeterminantNotOne);
        }
    }
    let bit = |idx: usize, k: usize| idx >> (n - 1 - k) & 1;
    let mut permuted = vec![S::zero(); 1 << n];
    for (nu, slot) in permuted.iter_mut().enumerate() {
        let mu = (0..n).fold(0, |m, k| m | bit(nu, k) << (n - 1 - perm[k]));
        *slot = q.amps[mu].clone();
    }
    let mut cur = permuted;
    for (k, l) in locals.iter().enumerate() {
        let mut next = vec![S::zero(); 1 << n];
        for (idx, v) in cur.iter().enumerate() {
            if v.is_zero() {
                continue;
            }
            let b = bit(idx, k);
            let base = idx & !(1 << (n - 1 - k));
            for r in 0..2 {
                let f = &l[r][b];
                if !f.is_zero() {
                    let t = base | r << (n - 1 - k);
                    next[t] = next[t].clone() + &(f.clone() * v);
                }
            }
        }
        cur = next;
    }
    QubitState::new(n, cur)
}

/// Direction of the three-qubit mirror map.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MirrorDirection {
    /// `Γ_1Γ_2Γ_3` from the odd sector to the even one.
    Forward,
    /// The inverse map `Γ_3Γ_2Γ_1`.
    Backward,
}

/// `Γ_1Γ_2Γ_3|ψ>` at `N = 6` (or its inverse).
pub fn mirror_three_qubit<S: Scalar>(
    state: &FockState<S>,
    direction: MirrorDirection,
) -> Result<FockState<S>> {
    if state.modes() != 6 {
        return Err(Error::Shape {
            expected: "6 modes".into(),
            got: state.modes().to_string(),
        });
    }
    let order: [usize; 3] = match direction {
        MirrorDirection::Forward => [1, 2, 3],
        MirrorDirection::Backward => [3, 2, 1],
    };
    crate::clifford::gamma_word(&order, state)
}

/// Amplitude labels of an odd spinor at `N = 6`:
/// `U_i p^i + (1/3!) Z_ijk p^ijk + (1/5!) W^i ε_{ijklmn} p^{jklmn}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum OddAmp {
    U(usize),
    Z(usize, usize, usize),
    W(usize),
}

/// Amplitude labels of an even spinor at `N = 6`:
/// `η + (1/2!) Y_ij p^ij + (1/2!4!) X^ij ε_{ijklmn} p^{klmn} + ξ p^{123456}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum EvenAmp {
    Eta,
    Y(usize, usize),
    X(usize, usize),
    Xi,
}

fn box_label(i: usize) -> String {
    if i > 3 {
        format!("{}̄", i - 3)
    } else {
        i.to_string()
    }
}

impl fmt::Display for OddAmp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            OddAmp::U(i) => write!(f, "U_{}", box_label(i)),
            OddAmp::W(i) => write!(f, "W^{}", box_label(i)),
            OddAmp::Z(i, j, k) => write!(f, "Z_{}{}{}", box_label(i), box_label(j), box_label(k)),
        }
    }
}

impl fmt::Display for EvenAmp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            EvenAmp::Eta => write!(f, "η"),
            EvenAmp::Xi => write!(f, "ξ"),
            EvenAmp::Y(i, j) => write!(f, "Y_{}{}", box_label(i), box_label(j)),
            EvenAmp::X(i, j) => write!(f, "X^{}{}", box_label(i), box_label(j)),
        }
    }
}

/// `ε` with `ε_{123456} = 1`; zero on repeats.
fn eps_sign(seq: &[usize]) -> Option<bool> {
    perm_sign(seq)
}

fn complement6(idx: &[usize]) -> Vec<usize> {
    (1..=6).filter(|k| !idx.contains(k)).collect()
}

impl OddAmp {
    pub fn all() -> Vec<OddAmp> {
        let mut v: Vec<OddAmp> = (1..=6).map(OddAmp::U).collect();
        for i in 1..=6 {
            for j in i + 1..=6 {
                for k in j + 1..=6 {
                    v.push(OddAmp::Z(i, j, k));
                }
            }
        }
        v.extend((1..=6).map(OddAmp::W));
        v
    }

    /// Monomial and sign this amplitude multiplies.
    pub fn monomial(self) -> (u32, bool) {
        match self {
            OddAmp::U(i) => (1 << (i - 1), false),
            OddAmp::Z(i, j, k) => ((1 << (i - 1)) | (1 << (j - 1)) | (1 << (k - 1)), false),
            OddAmp::W(i) => {
                let rest = complement6(&[i]);
                let mut seq = vec![i];
                seq.extend(&rest);
                let odd = eps_sign(&seq).expect("permutation");
                (rest.iter().fold(0, |m, r| m | 1 << (r - 1)), odd)
            }
        }
    }
}

impl EvenAmp {
    pub fn all() -> Vec<EvenAmp> {
        let mut v = vec![EvenAmp::Eta];
        for i in 1..=6 {
            for j in i + 1..=6 {
                v.push(EvenAmp::Y(i, j));
            }
        }
        for i in 1..=6 {
            for j in i + 1..=6 {
                v.push(EvenAmp::X(i, j));
            }
        }
        v.push(EvenAmp::Xi);
        v
    }

    /// Label and sign reading the coefficient of an even monomial.
    pub fn from_monomial(mask: u32) -> (EvenAmp, bool) {
        let modes = crate::fock::modes_of(mask);
        match modes.len() {
            0 => (EvenAmp::Eta, false),
            6 => (EvenAmp::Xi, false),
            2 => (EvenAmp::Y(modes[0], modes[1]), false),
            4 => {
                let pair = complement6(&modes);
                let mut seq = pair.clone();
                seq.extend(&modes);
                (
                    EvenAmp::X(pair[0], pair[1]),
                    eps_sign(&seq).expect("permutation"),
                )
            }
            _ => unreachable!("odd monomial in the even sector"),
        }
    }
}

/// One row of the mirror dictionary: `output = ±input`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct MirrorEntry {
    pub output: EvenAmp,
    pub negative: bool,
    pub input: OddAmp,
}

impl fmt::Display for MirrorEntry {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = if self.negative { "-" } else { "" };
        write!(f, "{} = {}{}", self.output, s, self.input)
    }
}

/// The forward mirror map as a signed permutation of amplitude labels,
/// generated by pushing each input basis state through `Γ_1Γ_2Γ_3`.
pub fn mirror_table() -> Vec<MirrorEntry> {
    use crate::scalar::GaussRat;
    let mut out: Vec<MirrorEntry> = OddAmp::all()
        .into_iter()
        .map(|input| {
            let (mask, neg_in) = input.monomial();
            let one = if neg_in {
                -GaussRat::one()
            } else {
                GaussRat::one()
            };
            let s = FockState::basis(6, mask, one).expect("six modes");
            let img = mirror_three_qubit(&s, MirrorDirection::Forward).expect("six modes");
            let (m, c) = img.terms().iter().next().expect("single monomial");
            let (output, neg_out) = EvenAmp::from_monomial(*m);
            let neg_c = c.re < num_rational::BigRational::from_integer(0.into());
            MirrorEntry {
                output,
                negative: neg_c != neg_out,
                input,
            }
        })
        .collect();
    out.sort_by_key(|e| e.output);
    out
}
