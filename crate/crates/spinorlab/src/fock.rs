//! Occupation-number basis and ladder operators.
//!
//! Mode `i` (1-based) lives in bit `i - 1` of a `u32` mask. A mask stands for
//! the ascending product `p^{i1} p^{i2} ... p^{ik} |0>` with `i1 < ... < ik`.

use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::scalar::Scalar;

pub const MAX_MODES: usize = 16;

/// Overline partner of mode `i` when the `2n` modes are split as `1..n, 1̄..n̄`.
pub fn overline(i: usize, n: usize) -> usize {
    if i <= n {
        i + n
    } else {
        i - n
    }
}

/// Parity of the occupied modes strictly below `mode`.
#[inline]
pub fn sign_below(mask: u32, mode: usize) -> bool {
    (mask & ((1u32 << (mode - 1)) - 1)).count_ones() % 2 == 1
}

pub fn mask_of(modes: &[usize]) -> u32 {
    modes.iter().fold(0, |m, &i| m | 1 << (i - 1))
}

pub fn modes_of(mask: u32) -> Vec<usize> {
    (0..32)
        .filter(|b| mask >> b & 1 == 1)
        .map(|b| b + 1)
        .collect()
}

/// Sign of the permutation sorting `seq`, or `None` on repeats.
pub fn perm_sign(seq: &[usize]) -> Option<bool> {
    let mut odd = false;
    for a in 0..seq.len() {
        for b in a + 1..seq.len() {
            if seq[a] == seq[b] {
                return None;
            }
            if seq[a] > seq[b] {
                odd = !odd;
            }
        }
    }
    Some(odd)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum LadderKind {
    Create,
    Annihilate,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct LadderOp {
    pub kind: LadderKind,
    pub mode: usize,
}

impl LadderOp {
    pub fn create(mode: usize) -> Self {
        LadderOp {
            kind: LadderKind::Create,
            mode,
        }
    }

    pub fn annihilate(mode: usize) -> Self {
        LadderOp {
            kind: LadderKind::Annihilate,
            mode,
        }
    }
}

impl fmt::Display for LadderOp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.kind {
            LadderKind::Create => write!(f, "p{}", self.mode),
            LadderKind::Annihilate => write!(f, "n{}", self.mode),
        }
    }
}

/// `coeff * factors[0] * factors[1] * ...`; the rightmost factor acts first.
#[derive(Clone, Debug, PartialEq)]
pub struct LadderWord<S> {
    pub coeff: S,
    pub factors: Vec<LadderOp>,
}

impl<S: Scalar> LadderWord<S> {
    pub fn new(coeff: S, factors: Vec<LadderOp>) -> Self {
        LadderWord { coeff, factors }
    }

    pub fn unit(factors: Vec<LadderOp>) -> Self {
        LadderWord::new(S::one(), factors)
    }
}

/// Sparse spinor over `modes` fermionic modes. Zero coefficients are never stored.
#[derive(Clone, PartialEq)]
pub struct FockState<S> {
    modes: usize,
    terms: BTreeMap<u32, S>,
}

impl<S: Scalar> fmt::Debug for FockState<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "FockState[{}]{{", self.modes)?;
        for (i, (m, c)) in self.terms.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{:?}: {:?}", modes_of(*m), c)?;
        }
        write!(f, "}}")
    }
}

fn check_modes(n: usize) -> Result<()> {
    if (1..=MAX_MODES).contains(&n) {
        Ok(())
    } else {
        Err(Error::ModeCount(n))
    }
}

impl<S: Scalar> FockState<S> {
    pub fn zero(modes: usize) -> Result<Self> {
        check_modes(modes)?;
        Ok(FockState {
            modes,
            terms: BTreeMap::new(),
        })
    }

    pub fn vacuum(modes: usize) -> Result<Self> {
        let mut s = Self::zero(modes)?;
        s.terms.insert(0, S::one());
        Ok(s)
    }

    /// `p^1 p^2 ... p^N |0>`.
    pub fn top(modes: usize) -> Result<Self> {
        let mut s = Self::zero(modes)?;
        s.terms.insert(s.full_mask(), S::one());
        Ok(s)
    }

    /// Single basis monomial with the given coefficient.
    pub fn basis(modes: usize, mask: u32, coeff: S) -> Result<Self> {
        let mut s = Self::zero(modes)?;
        if mask >> modes != 0 {
            return Err(Error::ModeOutOfRange {
                mode: 32 - mask.leading_zeros() as usize,
                modes,
            });
        }
        s.add_term(mask, coeff);
        Ok(s)
    }

    /// `coeff * p^{m0} p^{m1} ... |0>` with the creators in the given (possibly unsorted) order.
    pub fn product(modes: usize, ordered: &[usize], coeff: S) -> Result<Self> {
        let mut s = Self::zero(modes)?;
        for &m in ordered {
            if m == 0 || m > modes {
                return Err(Error::ModeOutOfRange { mode: m, modes });
            }
        }
        if let Some(odd) = perm_sign(ordered) {
            s.add_term(mask_of(ordered), if odd { -coeff } else { coeff });
        }
        Ok(s)
    }

    pub fn from_terms(modes: usize, terms: impl IntoIterator<Item = (u32, S)>) -> Result<Self> {
        let mut s = Self::zero(modes)?;
        for (m, c) in terms {
            if m >> modes != 0 {
                return Err(Error::ModeOutOfRange {
                    mode: 32 - m.leading_zeros() as usize,
                    modes,
                });
            }
            s.add_term(m, c);
        }
        Ok(s)
    }

    pub fn modes(&self) -> usize {
        self.modes
    }

    pub fn full_mask(&self) -> u32 {
        if self.modes == 32 {
            u32::MAX
        } else {
            (1u32 << self.modes) - 1
        }
    }

    pub fn terms(&self) -> &BTreeMap<u32, S> {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, mask: u32) -> S {
        self.terms.get(&mask).cloned().unwrap_or_else(S::zero)
    }

    /// Adds `c` to the coefficient of `mask`, pruning zeros.
    pub fn add_term(&mut self, mask: u32, c: S) {
        if c.is_zero() {
            return;
        }
        match self.terms.remove(&mask) {
            Some(old) => {
                let v = old + &c;
                if !v.is_zero() {
                    self.terms.insert(mask, v);
                }
            }
            None => {
                self.terms.insert(mask, c);
            }
        }
    }

    fn same_modes(&self, other: &Self) -> Result<()> {
        if self.modes == other.modes {
            Ok(())
        } else {
            Err(Error::ModeMismatch(self.modes, other.modes))
        }
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        self.same_modes(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(*m, c.clone());
        }
        Ok(out)
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self> {
        self.same_modes(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(*m, -c.clone());
        }
        Ok(out)
    }

    /// Sum; panics on a mode-count mismatch.
    pub fn plus(&self, other: &Self) -> Self {
        self.try_add(other).expect("mode counts differ")
    }

    /// Difference; panics on a mode-count mismatch.
    pub fn minus(&self, other: &Self) -> Self {
        self.try_sub(other).expect("mode counts differ")
    }

    pub fn scale(&self, c: &S) -> Self {
        let mut out = FockState {
            modes: self.modes,
            terms: BTreeMap::new(),
        };
        for (m, v) in &self.terms {
            out.add_term(*m, v.clone() * c);
        }
        out
    }

    pub fn map_coeffs(&self, f: impl Fn(u32, &S) -> S) -> Self {
        let mut out = FockState {
            modes: self.modes,
            terms: BTreeMap::new(),
        };
        for (m, v) in &self.terms {
            out.add_term(*m, f(*m, v));
        }
        out
    }

    fn check_mode(&self, mode: usize) -> Result<()> {
        if mode == 0 || mode > self.modes {
            Err(Error::ModeOutOfRange {
                mode,
                modes: self.modes,
            })
        } else {
            Ok(())
        }
    }

    pub fn apply(&self, op: LadderOp) -> Result<Self> {
        self.check_mode(op.mode)?;
        Ok(self.apply_unchecked(op))
    }

    pub(crate) fn apply_unchecked(&self, op: LadderOp) -> Self {
        let bit = 1u32 << (op.mode - 1);
        let want_set = op.kind == LadderKind::Annihilate;
        let mut out = FockState {
            modes: self.modes,
            terms: BTreeMap::new(),
        };
        for (m, c) in &self.terms {
            if (m & bit != 0) != want_set {
                continue;
            }
            let v = if sign_below(*m, op.mode) {
                -c.clone()
            } else {
                c.clone()
            };
            out.terms.insert(m ^ bit, v);
        }
        out
    }

    pub fn create(&self, mode: usize) -> Result<Self> {
        self.apply(LadderOp::create(mode))
    }

    pub fn annihilate(&self, mode: usize) -> Result<Self> {
        self.apply(LadderOp::annihilate(mode))
    }

    pub fn apply_word(&self, word: &LadderWord<S>) -> Result<Self> {
        for op in &word.factors {
            self.check_mode(op.mode)?;
        }
        let mut s = self.clone();
        for op in word.factors.iter().rev() {
            s = s.apply_unchecked(*op);
        }
        Ok(s.scale(&word.coeff))
    }

    /// Splits by particle number; the sectors sum back to `self`.
    pub fn particle_sectors(&self) -> BTreeMap<usize, Self> {
        let mut out: BTreeMap<usize, Self> = BTreeMap::new();
        for (m, c) in &self.terms {
            out.entry(m.count_ones() as usize)
                .or_insert_with(|| FockState {
                    modes: self.modes,
                    terms: BTreeMap::new(),
                })
                .terms
                .insert(*m, c.clone());
        }
        out
    }

    /// `<self|other>`, antilinear in `self`.
    pub fn hermitian_inner(&self, other: &Self) -> Result<S> {
        self.same_modes(other)?;
        let (small, big, conj_small) = if self.len() <= other.len() {
            (self, other, true)
        } else {
            (other, self, false)
        };
        let mut acc = S::zero();
        for (m, a) in &small.terms {
            if let Some(b) = big.terms.get(m) {
                acc = if conj_small {
                    acc + &(a.conj() * b)
                } else {
                    acc + &(b.conj() * a)
                };
            }
        }
        Ok(acc)
    }

    /// Entry-wise complex conjugate.
    pub fn conj(&self) -> Self {
        self.map_coeffs(|_, c| c.conj())
    }

    /// Same amplitudes on a larger mode count.
    pub fn widen(&self, modes: usize) -> Result<Self> {
        check_modes(modes)?;
        if modes < self.modes {
            return Err(Error::ModeMismatch(self.modes, modes));
        }
        Ok(FockState {
            modes,
            terms: self.terms.clone(),
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::GaussRat;

    type St = FockState<GaussRat>;

    #[test]
    fn vacuum_and_top() {
        let v = St::vacuum(2).unwrap();
        assert_eq!(v.terms().len(), 1);
        assert_eq!(v.coeff(0), GaussRat::int(1));
        assert!(v.annihilate(1).unwrap().is_zero());
        assert_eq!(St::top(2).unwrap().coeff(0b11), GaussRat::int(1));
        assert!(St::vacuum(0).is_err());
        assert!(St::vacuum(17).is_err());
        let sectors = St::vacuum(8).unwrap().particle_sectors();
        assert_eq!(sectors.keys().copied().collect::<Vec<_>>(), vec![0]);
    }

    #[test]
    fn top_annihilated_in_ascending_word_order() {
        for n in 1..=8usize {
            // n_1 n_2 ... n_N: rightmost n_N acts first
            let w = LadderWord::unit((1..=n).map(LadderOp::annihilate).collect());
            let out = St::top(n).unwrap().apply_word(&w).unwrap();
            let s = if (n * (n - 1) / 2) % 2 == 1 { -1 } else { 1 };
            assert_eq!(out, St::vacuum(n).unwrap().scale(&GaussRat::int(s)));
        }
        // n_4 n_3 n_2 n_1 on top(4) gives +vacuum
        let w = LadderWord::unit((1..=4).rev().map(LadderOp::annihilate).collect());
        assert_eq!(
            St::top(4).unwrap().apply_word(&w).unwrap(),
            St::vacuum(4).unwrap()
        );
    }

    #[test]
    fn ladder_signs() {
        let v = St::vacuum(2).unwrap();
        let p1 = v.create(1).unwrap();
        assert_eq!(p1.coeff(0b01), GaussRat::int(1));
        assert!(p1.create(1).unwrap().is_zero());
        // n_1 p^2 p^1 |0> = -p^2 |0>
        let s = v.create(1).unwrap().create(2).unwrap();
        assert_eq!(s.annihilate(1).unwrap().coeff(0b10), GaussRat::int(-1));
        // p^1 p^2 |0> is the ascending monomial, p^2 p^1 |0> its negative
        let w = LadderWord::unit(vec![LadderOp::create(1), LadderOp::create(2)]);
        assert_eq!(v.apply_word(&w).unwrap().coeff(0b11), GaussRat::int(1));
        let w = LadderWord::unit(vec![LadderOp::create(2), LadderOp::create(1)]);
        assert_eq!(v.apply_word(&w).unwrap().coeff(0b11), GaussRat::int(-1));
        assert!(v.create(3).is_err());
    }

    #[test]
    fn product_orders() {
        let a = St::product(4, &[2, 1], GaussRat::int(1)).unwrap();
        assert_eq!(a.coeff(0b11), GaussRat::int(-1));
        assert!(St::product(4, &[2, 2], GaussRat::int(1)).unwrap().is_zero());
    }

    #[test]
    fn sectors_partition() {
        let s = St::from_terms(
            4,
            [
                (0, GaussRat::int(1)),
                (0b11, GaussRat::int(2)),
                (0b111, GaussRat::int(3)),
            ],
        )
        .unwrap();
        let sec = s.particle_sectors();
        assert_eq!(sec.keys().copied().collect::<Vec<_>>(), vec![0, 2, 3]);
        let back = sec.values().fold(St::zero(4).unwrap(), |a, b| a.plus(b));
        assert_eq!(back, s);
    }

    #[test]
    fn inner_product() {
        let v = St::vacuum(3).unwrap();
        let t = St::top(3).unwrap();
        assert_eq!(v.hermitian_inner(&v).unwrap(), GaussRat::int(1));
        assert!(t.hermitian_inner(&v).unwrap().is_zero());
        let i = GaussRat::imag_unit();
        let s = v.scale(&i);
        assert_eq!(s.hermitian_inner(&v).unwrap(), -i.clone());
        assert_eq!(v.hermitian_inner(&s).unwrap(), i);
    }
}
