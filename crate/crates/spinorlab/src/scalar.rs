//! Scalar fields a [`FockState`](crate::FockState) can carry.
//!
//! [`GaussRat`] is the exact backend and the one every identity check runs on.
//! [`Complex64`] is there for quick numerical sanity runs only.

use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_bigint::BigInt;
pub use num_complex::Complex64;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use rayon::prelude::*;

/// Relative tolerance for float comparisons.
pub const FLOAT_RTOL: f64 = 1e-9;

/// Arithmetic needed by the library. Implemented for [`GaussRat`] and [`Complex64`].
pub trait Scalar:
    Clone
    + fmt::Debug
    + PartialEq
    + Send
    + Sync
    + 'static
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
    + for<'a> Add<&'a Self, Output = Self>
    + for<'a> Sub<&'a Self, Output = Self>
    + for<'a> Mul<&'a Self, Output = Self>
{
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn from_i64(v: i64) -> Self;
    fn from_ratio(num: i64, den: i64) -> Self;
    fn imag_unit() -> Self;
    fn conj(&self) -> Self;
    /// Multiplicative inverse, `None` for zero.
    fn inv(&self) -> Option<Self>;
    /// Equality for exact backends, relative closeness for floats.
    fn close_to(&self, other: &Self) -> bool;

    /// `[Tr A, Tr A², …, Tr A^max_p]` for a square matrix.
    fn trace_powers(m: &[Vec<Self>], max_p: usize) -> Vec<Self> {
        generic_trace_powers(m, max_p)
    }

    fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one();
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * &base;
            }
            base = base.clone() * &base;
            e >>= 1;
        }
        acc
    }
}

fn generic_trace_powers<S: Scalar>(m: &[Vec<S>], max_p: usize) -> Vec<S> {
    let n = m.len();
    let mut out = Vec::with_capacity(max_p);
    if max_p == 0 {
        return out;
    }
    let mut p = m.to_vec();
    out.push(trace(&p));
    for _ in 1..max_p {
        p = (0..n)
            .into_par_iter()
            .map(|i| {
                let mut row = vec![S::zero(); n];
                for (k, a) in p[i].iter().enumerate() {
                    if a.is_zero() {
                        continue;
                    }
                    for (j, b) in m[k].iter().enumerate() {
                        if !b.is_zero() {
                            row[j] = row[j].clone() + &(a.clone() * b);
                        }
                    }
                }
                row
            })
            .collect();
        out.push(trace(&p));
    }
    out
}

fn trace<S: Scalar>(m: &[Vec<S>]) -> S {
    m.iter()
        .enumerate()
        .fold(S::zero(), |acc, (i, r)| acc + &r[i])
}

/// Exact complex number with arbitrary-precision rational parts.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct GaussRat {
    pub re: BigRational,
    pub im: BigRational,
}

impl GaussRat {
    pub fn new(re: BigRational, im: BigRational) -> Self {
        GaussRat { re, im }
    }

    pub fn real(re: BigRational) -> Self {
        GaussRat {
            re,
            im: BigRational::zero(),
        }
    }

    pub fn int(v: i64) -> Self {
        Self::real(BigRational::from_integer(v.into()))
    }

    pub fn ratio(num: i64, den: i64) -> Self {
        Self::real(BigRational::new(num.into(), den.into()))
    }

    pub fn is_real(&self) -> bool {
        self.im.is_zero()
    }

    pub fn norm_sqr(&self) -> BigRational {
        &self.re * &self.re + &self.im * &self.im
    }
}

impl fmt::Debug for GaussRat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for GaussRat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.im.is_zero() {
            write!(f, "{}", self.re)
        } else if self.re.is_zero() {
            write!(f, "{}i", self.im)
        } else if self.im.is_negative() {
            write!(f, "{}-{}i", self.re, -&self.im)
        } else {
            write!(f, "{}+{}i", self.re, self.im)
        }
    }
}

impl From<i64> for GaussRat {
    fn from(v: i64) -> Self {
        GaussRat::int(v)
    }
}

impl From<BigRational> for GaussRat {
    fn from(v: BigRational) -> Self {
        GaussRat::real(v)
    }
}

impl Add<&GaussRat> for &GaussRat {
    type Output = GaussRat;
    fn add(self, o: &GaussRat) -> GaussRat {
        GaussRat::new(&self.re + &o.re, &self.im + &o.im)
    }
}

impl Sub<&GaussRat> for &GaussRat {
    type Output = GaussRat;
    fn sub(self, o: &GaussRat) -> GaussRat {
        GaussRat::new(&self.re - &o.re, &self.im - &o.im)
    }
}

impl Mul<&GaussRat> for &GaussRat {
    type Output = GaussRat;
    fn mul(self, o: &GaussRat) -> GaussRat {
        if self.im.is_zero() && o.im.is_zero() {
            return GaussRat::real(&self.re * &o.re);
        }
        GaussRat::new(
            &self.re * &o.re - &self.im * &o.im,
            &self.re * &o.im + &self.im * &o.re,
        )
    }
}

macro_rules! forward_binop {
    ($tr:ident, $f:ident) => {
        impl $tr<GaussRat> for GaussRat {
            type Output = GaussRat;
            fn $f(self, o: GaussRat) -> GaussRat {
                (&self).$f(&o)
            }
        }
        impl<'a> $tr<&'a GaussRat> for GaussRat {
            type Output = GaussRat;
            fn $f(self, o: &'a GaussRat) -> GaussRat {
                (&self).$f(o)
            }
        }
        impl<'a> $tr<GaussRat> for &'a GaussRat {
            type Output = GaussRat;
            fn $f(self, o: GaussRat) -> GaussRat {
                self.$f(&o)
            }
        }
    };
}
forward_binop!(Add, add);
forward_binop!(Sub, sub);
forward_binop!(Mul, mul);

impl AddAssign<&GaussRat> for GaussRat {
    fn add_assign(&mut self, o: &GaussRat) {
        self.re += &o.re;
        self.im += &o.im;
    }
}

impl SubAssign<&GaussRat> for GaussRat {
    fn sub_assign(&mut self, o: &GaussRat) {
        self.re -= &o.re;
        self.im -= &o.im;
    }
}

impl Neg for GaussRat {
    type Output = GaussRat;
    fn neg(self) -> GaussRat {
        GaussRat::new(-self.re, -self.im)
    }
}

impl Neg for &GaussRat {
    type Output = GaussRat;
    fn neg(self) -> GaussRat {
        GaussRat::new(-&self.re, -&self.im)
    }
}

impl Scalar for GaussRat {
    fn zero() -> Self {
        GaussRat::default()
    }
    fn one() -> Self {
        GaussRat::int(1)
    }
    fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }
    fn from_i64(v: i64) -> Self {
        GaussRat::int(v)
    }
    fn from_ratio(num: i64, den: i64) -> Self {
        GaussRat::ratio(num, den)
    }
    fn imag_unit() -> Self {
        GaussRat::new(BigRational::zero(), BigRational::one())
    }
    fn conj(&self) -> Self {
        GaussRat::new(self.re.clone(), -&self.im)
    }
    fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        let n = self.norm_sqr();
        Some(GaussRat::new(&self.re / &n, -&self.im / &n))
    }
    fn close_to(&self, other: &Self) -> bool {
        self == other
    }

    fn trace_powers(m: &[Vec<Self>], max_p: usize) -> Vec<Self> {
        exact_trace_powers(m, max_p)
    }
}

// Clear denominators once, run the powers over big integers (real-only when
// possible), then divide the traces back out.
fn exact_trace_powers(m: &[Vec<GaussRat>], max_p: usize) -> Vec<GaussRat> {
    if max_p == 0 {
        return Vec::new();
    }
    let mut den = BigInt::one();
    for r in m {
        for v in r {
            den = den.lcm(v.re.denom());
            den = den.lcm(v.im.denom());
        }
    }
    let scale = |q: &BigRational| -> BigInt { q.numer() * (&den / q.denom()) };
    let real = m.iter().all(|r| r.iter().all(GaussRat::is_real));
    let traces: Vec<(BigInt, BigInt)> = if real {
        let a: Vec<Vec<BigInt>> = m
            .iter()
            .map(|r| r.iter().map(|v| scale(&v.re)).collect())
            .collect();
        int_trace_powers(&a, max_p)
            .into_iter()
            .map(|t| (t, BigInt::zero()))
            .collect()
    } else {
        let a: Vec<Vec<(BigInt, BigInt)>> = m
            .iter()
            .map(|r| r.iter().map(|v| (scale(&v.re), scale(&v.im))).collect())
            .collect();
        gauss_int_trace_powers(&a, max_p)
    };
    let mut d = BigInt::one();
    traces
        .into_iter()
        .map(|(re, im)| {
            d *= &den;
            GaussRat::new(
                BigRational::new(re, d.clone()),
                BigRational::new(im, d.clone()),
            )
        })
        .collect()
}

fn sparsity<T>(a: &[Vec<T>], nz: impl Fn(&T) -> bool) -> Vec<Vec<usize>> {
    a.iter()
        .map(|r| (0..r.len()).filter(|&j| nz(&r[j])).collect())
        .collect()
}

fn int_trace_powers(a: &[Vec<BigInt>], max_p: usize) -> Vec<BigInt> {
    let n = a.len();
    let cols = sparsity(a, |v| !v.is_zero());
    let tr = |p: &[Vec<BigInt>]| (0..n).fold(BigInt::zero(), |s, i| s + &p[i][i]);
    let mut p = a.to_vec();
    let mut out = vec![tr(&p)];
    for step in 1..max_p {
        let last = step + 1 == max_p;
        let rows = |i: usize| {
            let mut row = vec![BigInt::zero(); n];
            for (k, x) in p[i].iter().enumerate() {
                if x.is_zero() {
                    continue;
                }
                for &j in &cols[k] {
                    row[j] += x * &a[k][j];
                }
            }
            row
        };
        if last {
            // only the diagonal is needed on the final step
            let t = (0..n)
                .into_par_iter()
                .map(|i| {
                    p[i].iter()
                        .enumerate()
                        .filter(|(_, x)| !x.is_zero())
                        .fold(BigInt::zero(), |s, (k, x)| s + x * &a[k][i])
                })
                .reduce(BigInt::zero, |x, y| x + y);
            out.push(t);
        } else {
            p = (0..n).into_par_iter().map(rows).collect();
            out.push(tr(&p));
        }
    }
    out
}

type GInt = (BigInt, BigInt);

fn gauss_int_trace_powers(a: &[Vec<GInt>], max_p: usize) -> Vec<GInt> {
    let n = a.len();
    let cols = sparsity(a, |v| !(v.0.is_zero() && v.1.is_zero()));
    let zero = || (BigInt::zero(), BigInt::zero());
    let tr = |p: &[Vec<GInt>]| (0..n).fold(zero(), |s, i| (s.0 + &p[i][i].0, s.1 + &p[i][i].1));
    let mut p = a.to_vec();
    let mut out = vec![tr(&p)];
    for _ in 1..max_p {
        p = (0..n)
            .into_par_iter()
            .map(|i| {
                let mut row = vec![zero(); n];
                for (k, x) in p[i].iter().enumerate() {
                    if x.0.is_zero() && x.1.is_zero() {
                        continue;
                    }
                    for &j in &cols[k] {
                        let y = &a[k][j];
                        row[j].0 += &x.0 * &y.0 - &x.1 * &y.1;
                        row[j].1 += &x.0 * &y.1 + &x.1 * &y.0;
                    }
                }
                row
            })
            .collect();
        out.push(tr(&p));
    }
    out
}

impl Scalar for Complex64 {
    fn zero() -> Self {
        Complex64::new(0.0, 0.0)
    }
    fn one() -> Self {
        Complex64::new(1.0, 0.0)
    }
    fn is_zero(&self) -> bool {
        self.re == 0.0 && self.im == 0.0
    }
    fn from_i64(v: i64) -> Self {
        Complex64::new(v as f64, 0.0)
    }
    fn from_ratio(num: i64, den: i64) -> Self {
        Complex64::new(num as f64 / den as f64, 0.0)
    }
    fn imag_unit() -> Self {
        Complex64::new(0.0, 1.0)
    }
    fn conj(&self) -> Self {
        Complex64::conj(self)
    }
    fn inv(&self) -> Option<Self> {
        if Scalar::is_zero(self) {
            None
        } else {
            Some(Complex64::inv(self))
        }
    }
    fn close_to(&self, other: &Self) -> bool {
        let d = (self - other).norm();
        d <= FLOAT_RTOL * self.norm().max(other.norm()).max(1.0)
    }
}
