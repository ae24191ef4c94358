//! Named generating functions and auxiliary series, each assembled from its
//! defining formula with the [`crate::series`] primitives.
//!
//! Nothing here is built from a simplified equivalent of another entry. When
//! two formulas are supposed to agree (the simplified `B22`, the two forms of
//! `F`, the Sylvester-type expansions) both sides are constructed separately
//! and compared in [`crate::verify`].

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use thiserror::Error;

use crate::series::{Series, Sign, TermList};

/// Builders compute at least this order so the degree-13 polynomial `Phi`
/// is never cut short internally.
pub const MIN_BUILD_TRUNC: usize = 13;

/// Raw `q^1, q^2, q^3` boundary terms left over when `B22 - B21` is written
/// as prefix sums of `d3`.
pub const TELESCOPED_HEAD: [i64; 4] = [0, -2, -1, -1];

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum IdentityError {
    #[error("unknown series name `{0}`")]
    UnknownName(String),
    #[error("d3 table covers 0..={have} but index {need} is required")]
    InsufficientTable { need: usize, have: isize },
    #[error("closed form is stated for n > 4, got n = {0}")]
    OutsideRange(usize),
}

macro_rules! names {
    ($($variant:ident => $s:literal, $formula:literal;)*) => {
        /// Catalog of buildable series.
        #[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
        pub enum Name {
            $($variant,)*
        }

        impl Name {
            pub const ALL: &'static [Name] = &[$(Name::$variant,)*];

            pub fn as_str(self) -> &'static str {
                match self {
                    $(Name::$variant => $s,)*
                }
            }

            /// The defining formula, in plain text.
            pub fn formula(self) -> &'static str {
                match self {
                    $(Name::$variant => $formula,)*
                }
            }
        }

        impl FromStr for Name {
            type Err = IdentityError;

            fn from_str(s: &str) -> Result<Self, Self::Err> {
                match s {
                    $($s => Ok(Name::$variant),)*
                    _ => Err(IdentityError::UnknownName(s.to_string())),
                }
            }
        }
    };
}

names! {
    B21 => "B21", "1/(q;q^2)_inf * (q/(1-q) - q^2/(1-q^2))";
    B22 => "B22", "1/(q;q^2)_inf * (q^2 + q^3/(1-q^2) + q^6/(1-q^4))";
    B22Simplified => "B22_simplified", "(-q^3;q)_inf * (q^2+2q^3+q^4+q^5+q^6)/(1-q^2)";
    B32 => "B32", "(q^3;q^3)_inf/(q;q)_inf * C(q)";
    C => "C", "q^2/(1-q) + q^2/(1-q^2) - 2q^3/(1-q^3)";
    R => "R", "(q^2+2q^3+q^4+q^5+q^6)/(1-q^2)";
    P => "P", "prod_{m>=1} (1+q^m+q^{2m})";
    PC => "PC", "(1-q^6) C(q)";
    PR => "PR", "(1-q^6) R(q)";
    M => "M", "(1+q+q^2)(1+q^2+q^4)";
    Phi => "Phi", "M(q) PC(q) - PR(q) - q^3";
    S => "S", "P(q) - M(q) (-q^3;q)_inf";
    F => "F", "(1-q^6) G(q)";
    G => "G", "B32(q) - B22(q)";
    E => "E", "q^2 - q^3 + 3q^4 + q^6";
    H => "H", "(-q^3;q)_inf";
    EulerLhs => "euler_lhs", "(-q;q)_inf";
    EulerRhs => "euler_rhs", "1/(q;q^2)_inf";
    SylvesterLhs => "sylvester_lhs", "(-xq;q)_inf at x = 1";
    SylvesterRhs => "sylvester_rhs", "sum_n (-xq;q)_n/(q;q)_n (1+xq^{2n+1}) x^n q^{n(3n+1)/2} at x = 1";
    Syl3Lhs => "syl3_lhs", "(1-q)(-q^3;q)_inf";
    Syl3Rhs => "syl3_rhs", "1 - q + q^3 + sum_{n>=2} (-q^3;q)_{n-2}/(q^2;q)_{n-1} (1+q^{2n+1}) q^{(3n^2+n)/2}";
    Lem1Lhs => "lem1_lhs", "(1-q)(-q^3;q)_inf = d3(0) + sum_{n>=1} (d3(n)-d3(n-1)) q^n";
}

impl fmt::Display for Name {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NamedSeries {
    pub name: Name,
    pub series: Series,
    pub formula: &'static str,
}

/// Builds `name` exactly from its formula, truncated at `trunc`.
pub fn build(name: Name, trunc: usize) -> NamedSeries {
    let work = trunc.max(MIN_BUILD_TRUNC);
    let series = match name {
        Name::B21 => b21(work),
        Name::B22 => b22(work),
        Name::B22Simplified => b22_simplified(work),
        Name::B32 => b32(work),
        Name::C => c_series(work),
        Name::R => r_series(work),
        Name::P => p_series(work),
        Name::PC => pc(work),
        Name::PR => pr(work),
        Name::M => m_poly(work),
        Name::Phi => phi(work),
        Name::S => s_series(work),
        Name::F => f_series(work),
        Name::G => g_series(work),
        Name::E => e_poly(work),
        Name::H => h_series(work),
        Name::EulerLhs => euler_lhs(work),
        Name::EulerRhs => euler_rhs(work),
        Name::SylvesterLhs => sylvester_lhs(0, work),
        Name::SylvesterRhs => sylvester_rhs(0, work),
        Name::Syl3Lhs => syl3_lhs(work),
        Name::Syl3Rhs => syl3_rhs(work),
        Name::Lem1Lhs => lem1_lhs(work),
    };
    NamedSeries {
        name,
        series: series.truncate(trunc),
        formula: name.formula(),
    }
}

pub fn build_by_name(name: &str, trunc: usize) -> Result<NamedSeries, IdentityError> {
    Ok(build(name.parse()?, trunc))
}

fn poly(terms: &[(usize, i64)], trunc: usize) -> Series {
    Series::from_terms(&terms.iter().copied().collect::<TermList>(), trunc)
}

fn unit_inverse(s: &Series) -> Series {
    s.invert().expect("q-Pochhammer products have constant term 1")
}

/// `1/(q;q^2)_inf`, the odd-part partition generating function.
fn odd_parts(trunc: usize) -> Series {
    unit_inverse(&Series::pochhammer_infinite(1, Sign::Plus, 2, trunc))
}

/// `q^e / (1 - q^m)`
fn shifted_geometric(e: usize, m: usize, trunc: usize) -> Series {
    Series::geometric(m, trunc).shift(e)
}

pub fn b21(trunc: usize) -> Series {
    let inner = shifted_geometric(1, 1, trunc) - shifted_geometric(2, 2, trunc);
    odd_parts(trunc) * inner
}

pub fn b22(trunc: usize) -> Series {
    let inner = poly(&[(2, 1)], trunc) + shifted_geometric(3, 2, trunc) + shifted_geometric(6, 4, trunc);
    odd_parts(trunc) * inner
}

pub fn b22_simplified(trunc: usize) -> Series {
    h_series(trunc) * r_series(trunc)
}

pub fn b32(trunc: usize) -> Series {
    let cubes = Series::pochhammer_infinite(3, Sign::Plus, 3, trunc);
    let all = unit_inverse(&Series::pochhammer_infinite(1, Sign::Plus, 1, trunc));
    cubes * all * c_series(trunc)
}

pub fn c_series(trunc: usize) -> Series {
    shifted_geometric(2, 1, trunc) + shifted_geometric(2, 2, trunc) - shifted_geometric(3, 3, trunc).scale(2)
}

pub fn r_series(trunc: usize) -> Series {
    poly(&[(2, 1), (3, 2), (4, 1), (5, 1), (6, 1)], trunc) * Series::geometric(2, trunc)
}

pub fn p_series(trunc: usize) -> Series {
    let mut s = Series::one(trunc);
    for m in 1..=trunc {
        s.mul_trinomial_assign(m);
    }
    s
}

fn one_minus_q6(trunc: usize) -> Series {
    poly(&[(0, 1), (6, -1)], trunc)
}

pub fn pc(trunc: usize) -> Series {
    one_minus_q6(trunc) * c_series(trunc)
}

pub fn pr(trunc: usize) -> Series {
    one_minus_q6(trunc) * r_series(trunc)
}

pub fn m_poly(trunc: usize) -> Series {
    poly(&[(0, 1), (1, 1), (2, 1)], trunc) * poly(&[(0, 1), (2, 1), (4, 1)], trunc)
}

pub fn phi(trunc: usize) -> Series {
    m_poly(trunc) * pc(trunc) - pr(trunc) - poly(&[(3, 1)], trunc)
}

pub fn s_series(trunc: usize) -> Series {
    p_series(trunc) - m_poly(trunc) * h_series(trunc)
}

pub fn g_series(trunc: usize) -> Series {
    b32(trunc) - b22(trunc)
}

pub fn f_series(trunc: usize) -> Series {
    one_minus_q6(trunc) * g_series(trunc)
}

/// `F` as `P PC - (-q^3;q)_inf PR`.
pub fn f_product_form(trunc: usize) -> Series {
    p_series(trunc) * pc(trunc) - h_series(trunc) * pr(trunc)
}

/// `E = sum_{j in J} alpha_j q^j - c q^r` with `J = {2, 4, 6}`, `r = 3`, `c = 1`.
pub fn e_terms() -> TermList {
    [(2usize, 1i64), (3, -1), (4, 3), (6, 1)].into_iter().collect()
}

pub fn e_poly(trunc: usize) -> Series {
    Series::from_terms(&e_terms(), trunc)
}

/// `(-q^3;q)_inf = sum d3(n) q^n`.
pub fn h_series(trunc: usize) -> Series {
    Series::pochhammer_infinite(3, Sign::Minus, 1, trunc)
}

pub fn euler_lhs(trunc: usize) -> Series {
    Series::pochhammer_infinite(1, Sign::Minus, 1, trunc)
}

pub fn euler_rhs(trunc: usize) -> Series {
    odd_parts(trunc)
}

/// `(-xq;q)_inf` with `x = q^{x_exp}`.
pub fn sylvester_lhs(x_exp: usize, trunc: usize) -> Series {
    Series::pochhammer_infinite(1 + x_exp, Sign::Minus, 1, trunc)
}

fn pentagonal_plus(n: usize) -> usize {
    n * (3 * n + 1) / 2
}

/// Sylvester's expansion of `(-xq;q)_inf` with `x = q^{x_exp}`.
///
/// Summation stops once the lowest exponent of a summand,
/// `n(3n+1)/2 + n x_exp`, exceeds `trunc`.
pub fn sylvester_rhs(x_exp: usize, trunc: usize) -> Series {
    let mut total = Series::zero(trunc);
    for n in 0.. {
        let lowest = pentagonal_plus(n) + n * x_exp;
        if lowest > trunc {
            break;
        }
        let num = Series::pochhammer_finite(1 + x_exp, Sign::Minus, n, trunc);
        let den = unit_inverse(&Series::pochhammer_finite(1, Sign::Plus, n, trunc));
        let tail = poly(&[(0, 1), (2 * n + 1 + x_exp, 1)], trunc);
        total = total + (num * den * tail).shift(lowest);
    }
    total
}

pub fn syl3_lhs(trunc: usize) -> Series {
    poly(&[(0, 1), (1, -1)], trunc) * h_series(trunc)
}

pub fn lem1_lhs(trunc: usize) -> Series {
    syl3_lhs(trunc)
}

/// Sum over `n >= 2` of `num(n)/(q^2;q)_{n-1} (1+q^{2n+1}) q^{(3n^2+n)/2}`,
/// shared by the two Sylvester-derived expansions.
fn sylvester_tail(trunc: usize, num: impl Fn(usize) -> Series) -> Series {
    let mut total = Series::zero(trunc);
    for n in 2.. {
        let lowest = pentagonal_plus(n);
        if lowest > trunc {
            break;
        }
        let den = unit_inverse(&Series::pochhammer_finite(2, Sign::Plus, n - 1, trunc));
        let tail = poly(&[(0, 1), (2 * n + 1, 1)], trunc);
        total = total + (num(n) * den * tail).shift(lowest);
    }
    total
}

pub fn syl3_rhs(trunc: usize) -> Series {
    let head = poly(&[(0, 1), (1, -1), (3, 1)], trunc);
    head + sylvester_tail(trunc, |n| Series::pochhammer_finite(3, Sign::Minus, n - 2, trunc))
}

/// `1/(q^3;q^2)_inf * q^2(1-q)/(1-q^2)^2`
pub fn syl2_lhs(trunc: usize) -> Series {
    let odd_from_3 = unit_inverse(&Series::pochhammer_infinite(3, Sign::Plus, 2, trunc));
    let g2 = Series::geometric(2, trunc);
    odd_from_3 * poly(&[(2, 1), (3, -1)], trunc) * &g2 * g2
}

/// `-q^3 - q^5 + q^2(1+q^2)/(1-q^2)
///   + q^2/(1-q^2) sum_{n>=2} (-q^2;q)_{n-1}/(q^2;q)_{n-1} (1+q^{2n+1}) q^{(3n^2+n)/2}`
pub fn syl2_rhs(trunc: usize) -> Series {
    let g2 = Series::geometric(2, trunc);
    let head = poly(&[(3, -1), (5, -1)], trunc) + poly(&[(2, 1), (4, 1)], trunc) * &g2;
    let sum = sylvester_tail(trunc, |n| Series::pochhammer_finite(2, Sign::Minus, n - 1, trunc));
    head + g2.shift(2) * sum
}

fn table_entry(d3: &[BigInt], i: usize) -> Result<&BigInt, IdentityError> {
    d3.get(i).ok_or(IdentityError::InsufficientTable {
        need: i,
        have: d3.len() as isize - 1,
    })
}

/// `c(n) = sum_{i=0}^{n} d3(i)`.
pub fn cumulative_c(d3: &[BigInt], n: usize) -> Result<BigInt, IdentityError> {
    table_entry(d3, n)?;
    Ok(d3[..=n].iter().sum())
}

/// `sum_{i=0}^{n-5} d3(i) - d3(n-1)` for `n > 4`.
pub fn corollary_rhs(n: usize, d3: &[BigInt]) -> Result<BigInt, IdentityError> {
    if n <= 4 {
        return Err(IdentityError::OutsideRange(n));
    }
    let last = table_entry(d3, n - 1)?;
    Ok(cumulative_c(d3, n - 5)? - last)
}

/// Coefficient of `q^n` in `B22 - B21` after rewriting it through prefix
/// sums of `d3`:
///
/// `c(n) - d3(n) - 2 d3(n-1) - d3(n-2) - d3(n-3) - d3(n-4)` for `n >= 4`,
/// and `c(n) - d3(n)` plus [`TELESCOPED_HEAD`] below that.
pub fn telescoped_coeff(n: usize, d3: &[BigInt]) -> Result<BigInt, IdentityError> {
    let base = cumulative_c(d3, n)? - &d3[n];
    if n < 4 {
        return Ok(base + TELESCOPED_HEAD[n]);
    }
    let weights = [2, 1, 1, 1];
    let mut acc = base;
    for (lag, w) in (1..=4).zip(weights) {
        acc -= &d3[n - lag] * w;
    }
    Ok(acc)
}

/// Coefficients of `(-q^3;q)_inf`, i.e. `d3(0..=trunc)`.
pub fn d3_table(trunc: usize) -> Vec<BigInt> {
    h_series(trunc).coeffs().to_vec()
}

/// `d3(n) - d3(n-1)` with `d3(-1) = 0`.
pub fn d3_difference(d3: &[BigInt], n: usize) -> BigInt {
    if n == 0 {
        d3[0].clone()
    } else {
        &d3[n] - &d3[n - 1]
    }
}
