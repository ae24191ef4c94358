//! Truncated formal power series in `q` with exact integer coefficients.
//!
//! A [`Series`] stores every coefficient of `q^0 ..= q^trunc` densely. Anything
//! above `trunc` is unknown, and asking for it is an error rather than a zero.
//! Binary operations carry the smaller of the two truncation orders.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SeriesError {
    #[error("constant term {constant} is not a unit of the integers")]
    NonUnitConstantTerm { constant: BigInt },
    #[error("exponent {exponent} is beyond truncation order {trunc}")]
    ExponentBeyondTruncation { exponent: usize, trunc: usize },
}

/// Sparse exponent -> coefficient map used to write down explicit polynomials.
///
/// Zero coefficients are never stored; inserting at an existing exponent adds.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct TermList {
    terms: BTreeMap<usize, BigInt>,
}

impl TermList {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn insert(&mut self, exponent: usize, coeff: impl Into<BigInt>) {
        let coeff = coeff.into();
        if coeff.is_zero() {
            return;
        }
        let slot = self.terms.entry(exponent).or_insert_with(BigInt::zero);
        *slot += coeff;
        if slot.is_zero() {
            self.terms.remove(&exponent);
        }
    }

    pub fn get(&self, exponent: usize) -> Option<&BigInt> {
        self.terms.get(&exponent)
    }

    pub fn iter(&self) -> impl Iterator<Item = (usize, &BigInt)> {
        self.terms.iter().map(|(&e, c)| (e, c))
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.terms.keys().next_back().copied()
    }
}

impl<C: Into<BigInt>> FromIterator<(usize, C)> for TermList {
    fn from_iter<I: IntoIterator<Item = (usize, C)>>(iter: I) -> Self {
        let mut list = TermList::new();
        for (e, c) in iter {
            list.insert(e, c);
        }
        list
    }
}

/// The monomial `a = ±q^e` inside a q-Pochhammer symbol `(a; q)`.
///
/// Each factor is `1 - a q^i`, so `Plus` gives `(1 - q^..)` and `Minus`
/// gives `(1 + q^..)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    fn factor_coeff(self) -> i64 {
        match self {
            Sign::Plus => -1,
            Sign::Minus => 1,
        }
    }
}

/// `sum_{n=0}^{trunc} c_n q^n + O(q^{trunc+1})`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Series {
    coeffs: Vec<BigInt>,
}

impl Series {
    pub fn zero(trunc: usize) -> Self {
        Series {
            coeffs: vec![BigInt::zero(); trunc + 1],
        }
    }

    pub fn one(trunc: usize) -> Self {
        Self::monomial(1, 0, trunc)
    }

    /// `c q^e`, or the zero series when `e > trunc`.
    pub fn monomial(coeff: impl Into<BigInt>, exponent: usize, trunc: usize) -> Self {
        let mut s = Self::zero(trunc);
        if exponent <= trunc {
            s.coeffs[exponent] = coeff.into();
        }
        s
    }

    /// Dense constructor; `trunc` is `coeffs.len() - 1`.
    ///
    /// Panics on an empty vector, which has no truncation order.
    pub fn from_coeffs(coeffs: Vec<BigInt>) -> Self {
        assert!(!coeffs.is_empty(), "a series stores at least q^0");
        Series { coeffs }
    }

    pub fn from_i64s(coeffs: &[i64]) -> Self {
        Self::from_coeffs(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn from_terms(terms: &TermList, trunc: usize) -> Self {
        let mut s = Self::zero(trunc);
        for (e, c) in terms.iter().take_while(|&(e, _)| e <= trunc) {
            s.coeffs[e] = c.clone();
        }
        s
    }

    pub fn trunc(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn coeff(&self, n: usize) -> Result<&BigInt, SeriesError> {
        self.coeffs.get(n).ok_or(SeriesError::ExponentBeyondTruncation {
            exponent: n,
            trunc: self.trunc(),
        })
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    /// Drops every coefficient above `trunc`. Never extends.
    pub fn truncate(&self, trunc: usize) -> Self {
        let keep = trunc.min(self.trunc()) + 1;
        Series {
            coeffs: self.coeffs[..keep].to_vec(),
        }
    }

    pub fn add(&self, other: &Series) -> Series {
        let trunc = self.trunc().min(other.trunc());
        Series {
            coeffs: (0..=trunc).map(|n| &self.coeffs[n] + &other.coeffs[n]).collect(),
        }
    }

    pub fn sub(&self, other: &Series) -> Series {
        let trunc = self.trunc().min(other.trunc());
        Series {
            coeffs: (0..=trunc).map(|n| &self.coeffs[n] - &other.coeffs[n]).collect(),
        }
    }

    pub fn neg(&self) -> Series {
        Series {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }

    pub fn scale(&self, c: impl Into<BigInt>) -> Series {
        let c = c.into();
        Series {
            coeffs: self.coeffs.iter().map(|x| x * &c).collect(),
        }
    }

    /// Schoolbook Cauchy product, truncated at the smaller order.
    pub fn mul(&self, other: &Series) -> Series {
        let trunc = self.trunc().min(other.trunc());
        let mut out = vec![BigInt::zero(); trunc + 1];
        for (i, a) in self.coeffs[..=trunc].iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs[..=trunc - i].iter().enumerate() {
                if !b.is_zero() {
                    out[i + j] += a * b;
                }
            }
        }
        Series { coeffs: out }
    }

    /// Multiplication by `q^e`.
    pub fn shift(&self, e: usize) -> Series {
        let trunc = self.trunc();
        let mut out = vec![BigInt::zero(); trunc + 1];
        if e <= trunc {
            out[e..].clone_from_slice(&self.coeffs[..=trunc - e]);
        }
        Series { coeffs: out }
    }

    /// Reciprocal series. Only `±1` constant terms are invertible over the
    /// integers.
    pub fn invert(&self) -> Result<Series, SeriesError> {
        let a0 = &self.coeffs[0];
        if a0.abs() != BigInt::one() {
            return Err(SeriesError::NonUnitConstantTerm { constant: a0.clone() });
        }
        let trunc = self.trunc();
        let support: Vec<usize> = (1..=trunc).filter(|&k| !self.coeffs[k].is_zero()).collect();
        let mut out: Vec<BigInt> = Vec::with_capacity(trunc + 1);
        // 1/a0 == a0 for a unit.
        out.push(a0.clone());
        for n in 1..=trunc {
            let mut acc = BigInt::zero();
            for &k in support.iter().take_while(|&&k| k <= n) {
                acc += &self.coeffs[k] * &out[n - k];
            }
            out.push(-(a0 * acc));
        }
        Ok(Series { coeffs: out })
    }

    /// In-place multiplication by the binomial `1 + c q^e`.
    pub(crate) fn mul_binomial_assign(&mut self, c: i64, e: usize) {
        if e == 0 {
            let factor = BigInt::from(1 + c);
            self.coeffs.iter_mut().for_each(|x| *x *= &factor);
            return;
        }
        for n in (e..self.coeffs.len()).rev() {
            let add = &self.coeffs[n - e] * c;
            self.coeffs[n] += add;
        }
    }

    /// In-place multiplication by the trinomial `1 + q^e + q^{2e}`, `e >= 1`.
    pub(crate) fn mul_trinomial_assign(&mut self, e: usize) {
        debug_assert!(e >= 1);
        for n in (e..self.coeffs.len()).rev() {
            let mut add = self.coeffs[n - e].clone();
            if n >= 2 * e {
                add += &self.coeffs[n - 2 * e];
            }
            self.coeffs[n] += add;
        }
    }

    /// `1 / (1 - q^m)`.
    pub fn geometric(m: usize, trunc: usize) -> Series {
        assert!(m >= 1, "geometric series needs m >= 1");
        Series {
            coeffs: (0..=trunc)
                .map(|n| if n % m == 0 { BigInt::one() } else { BigInt::zero() })
                .collect(),
        }
    }

    /// `(±q^base; q)_n = prod_{i=0}^{n-1} (1 - (±q^base) q^i)`.
    pub fn pochhammer_finite(base_exp: usize, sign: Sign, n: usize, trunc: usize) -> Series {
        let mut s = Series::one(trunc);
        let c = sign.factor_coeff();
        for i in 0..n {
            let e = base_exp + i;
            if e > trunc && e > 0 {
                // remaining factors are 1 modulo q^{trunc+1}
                break;
            }
            s.mul_binomial_assign(c, e);
        }
        s
    }

    /// `prod_{j>=0} (1 - (±q^base) q^{j*step})`, every factor with exponent
    /// at most `trunc` included.
    pub fn pochhammer_infinite(base_exp: usize, sign: Sign, step: usize, trunc: usize) -> Series {
        assert!(base_exp >= 1, "infinite product needs base exponent >= 1");
        assert!(step >= 1, "infinite product needs step >= 1");
        let mut s = Series::one(trunc);
        let c = sign.factor_coeff();
        let mut e = base_exp;
        while e <= trunc {
            s.mul_binomial_assign(c, e);
            e += step;
        }
        s
    }
}

impl fmt::Display for Series {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (n, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if c.is_negative() { '-' } else { '+' })?;
            }
            first = false;
            match (n, mag.is_one()) {
                (0, _) => write!(f, "{mag}")?,
                (1, true) => write!(f, "q")?,
                (1, false) => write!(f, "{mag}q")?,
                (_, true) => write!(f, "q^{n}")?,
                (_, false) => write!(f, "{mag}q^{n}")?,
            }
        }
        if first {
            write!(f, "0")?;
        }
        write!(f, " + O(q^{})", self.trunc() + 1)
    }
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident) => {
        impl $trait<&Series> for &Series {
            type Output = Series;
            fn $method(self, rhs: &Series) -> Series {
                Series::$method(self, rhs)
            }
        }
        impl $trait<Series> for Series {
            type Output = Series;
            fn $method(self, rhs: Series) -> Series {
                Series::$method(&self, &rhs)
            }
        }
        impl $trait<&Series> for Series {
            type Output = Series;
            fn $method(self, rhs: &Series) -> Series {
                Series::$method(&self, rhs)
            }
        }
        impl $trait<Series> for &Series {
            type Output = Series;
            fn $method(self, rhs: Series) -> Series {
                Series::$method(self, &rhs)
            }
        }
    };
}

forward_binop!(Add, add);
forward_binop!(Sub, sub);
forward_binop!(Mul, mul);

impl Neg for &Series {
    type Output = Series;
    fn neg(self) -> Series {
        Series::neg(self)
    }
}

impl Neg for Series {
    type Output = Series;
    fn neg(self) -> Series {
        Series::neg(&self)
    }
}
