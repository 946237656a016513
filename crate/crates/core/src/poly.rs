//! Dense univariate polynomials over the rationals and rational generating
//! series `h(t) / (1 - t)^d`.
//!
//! Coefficients are stored lowest degree first. The zero polynomial stores no
//! coefficients and has no degree (`degree()` returns `None`).
//!
//! The text format used throughout the crate is a comma separated list of
//! exact rationals, lowest degree first, each written `p` or `p/q`:
//! `"1,0,1"` is `1 + t^2` and `"1/2,1"` is `1/2 + t`.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Exact rational number in canonical form (positive denominator, reduced).
pub type Rational = BigRational;

pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn frac(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// Parses `p` or `p/q`. Surrounding whitespace is ignored.
pub fn parse_rational(s: &str) -> Result<Rational> {
    let s = s.trim();
    let err = |detail: &str| Error::Parse {
        what: format!("rational {s:?}"),
        detail: detail.to_string(),
    };
    if s.is_empty() {
        return Err(err("empty entry"));
    }
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s, "1"),
    };
    let num: BigInt = num.parse().map_err(|_| err("bad numerator"))?;
    let den: BigInt = den.parse().map_err(|_| err("bad denominator"))?;
    if den.is_zero() {
        return Err(err("zero denominator"));
    }
    Ok(Rational::new(num, den))
}

/// Canonical text for a rational: `p` when integral, `p/q` otherwise.
pub fn format_rational(q: &Rational) -> String {
    q.to_string()
}

/// Binomial coefficient `C(n, k)` for `n >= 0`; zero when `k > n`.
pub fn binomial(n: u64, k: u64) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for j in 0..k {
        acc *= BigInt::from(n - j);
        acc /= BigInt::from(j + 1);
    }
    acc
}

#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Polynomial {
    coeffs: Vec<Rational>,
}

impl Polynomial {
    pub fn new(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Polynomial { coeffs }
    }

    pub fn from_ints(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| rat(c)).collect())
    }

    pub fn from_bigints(coeffs: &[BigInt]) -> Self {
        Self::new(coeffs.iter().cloned().map(Rational::from_integer).collect())
    }

    pub fn zero() -> Self {
        Polynomial { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        Self::new(vec![c])
    }

    /// `c * t^k`.
    pub fn monomial(c: Rational, k: usize) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![Rational::zero(); k + 1];
        coeffs[k] = c;
        Polynomial { coeffs }
    }

    /// The polynomial `t`.
    pub fn t() -> Self {
        Self::monomial(Rational::one(), 1)
    }

    /// `1 + t + ... + t^(r-1)`.
    pub fn geometric(r: usize) -> Self {
        Self::new(vec![Rational::one(); r])
    }

    /// Monic polynomial with the given roots.
    pub fn from_roots(roots: &[Rational]) -> Self {
        roots.iter().fold(Self::one(), |acc, root| {
            &acc * &Self::new(vec![-root.clone(), Rational::one()])
        })
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    /// Coefficient of `t^j`, zero beyond the stored range.
    pub fn coeff(&self, j: usize) -> Rational {
        self.coeffs.get(j).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// True for nonzero constants.
    pub fn is_constant(&self) -> bool {
        self.coeffs.len() == 1
    }

    pub fn leading_coeff(&self) -> Option<&Rational> {
        self.coeffs.last()
    }

    pub fn eval(&self, x: &Rational) -> Rational {
        self.coeffs
            .iter()
            .rev()
            .fold(Rational::zero(), |acc, c| acc * x + c)
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(j, c)| c * rat(j as i64))
                .collect(),
        )
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Self::new(self.coeffs.iter().map(|x| x * c).collect())
    }

    /// `t^k * self`.
    pub fn shift_up(&self, k: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![Rational::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        Polynomial { coeffs }
    }

    /// `self(t^r)` for `r >= 1`.
    pub fn compose_power(&self, r: usize) -> Self {
        assert!(r >= 1, "compose_power needs r >= 1");
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![Rational::zero(); (self.coeffs.len() - 1) * r + 1];
        for (j, c) in self.coeffs.iter().enumerate() {
            coeffs[j * r] = c.clone();
        }
        Polynomial { coeffs }
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Truncation modulo `t^n`.
    pub fn truncate(&self, n: usize) -> Self {
        Self::new(self.coeffs.iter().take(n).cloned().collect())
    }

    /// Euclidean division. Panics on a zero divisor.
    pub fn div_rem(&self, divisor: &Self) -> (Self, Self) {
        let lead = divisor
            .leading_coeff()
            .expect("polynomial division by zero")
            .clone();
        let dd = divisor.coeffs.len() - 1;
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return (Self::zero(), self.clone());
        }
        let mut quot = vec![Rational::zero(); rem.len() - dd];
        for k in (0..quot.len()).rev() {
            let c = &rem[k + dd] / &lead;
            if !c.is_zero() {
                for (j, dc) in divisor.coeffs.iter().enumerate() {
                    rem[k + j] -= &c * dc;
                }
            }
            quot[k] = c;
        }
        rem.truncate(dd);
        (Self::new(quot), Self::new(rem))
    }

    /// Exact quotient; panics if the division leaves a remainder.
    pub fn exact_div(&self, divisor: &Self) -> Self {
        let (q, r) = self.div_rem(divisor);
        assert!(r.is_zero(), "exact_div left a nonzero remainder");
        q
    }

    pub fn monic(&self) -> Self {
        match self.leading_coeff() {
            None => Self::zero(),
            Some(lc) => self.scale(&lc.recip()),
        }
    }

    /// Monic greatest common divisor; `gcd(0, 0) = 0`.
    pub fn gcd(&self, other: &Self) -> Self {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b);
            a = b;
            b = r.monic();
        }
        a.monic()
    }

    /// Integer coefficient vector `c * self` with `c > 0` chosen so the
    /// entries are coprime integers. The sign pattern is preserved.
    pub fn primitive_integer_coeffs(&self) -> Vec<BigInt> {
        if self.is_zero() {
            return Vec::new();
        }
        let lcm = self
            .coeffs
            .iter()
            .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let ints: Vec<BigInt> = self
            .coeffs
            .iter()
            .map(|c| c.numer() * (&lcm / c.denom()))
            .collect();
        let g = ints.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c));
        ints.into_iter().map(|c| c / &g).collect()
    }

    /// Coefficients as `i64`, when every coefficient is an integer in range.
    pub fn to_i64s(&self) -> Option<Vec<i64>> {
        self.coeffs
            .iter()
            .map(|c| if c.is_integer() { c.numer().to_i64() } else { None })
            .collect()
    }

    pub fn has_nonnegative_coeffs(&self) -> bool {
        self.coeffs.iter().all(|c| !c.is_negative())
    }

    pub fn is_integral(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_integer())
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return f.write_str("0");
        }
        for (j, c) in self.coeffs.iter().enumerate() {
            if j > 0 {
                f.write_str(",")?;
            }
            write!(f, "{c}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Polynomial[{self}]")
    }
}

impl FromStr for Polynomial {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        if s.trim().is_empty() {
            return Err(Error::Parse {
                what: "polynomial".into(),
                detail: "empty input".into(),
            });
        }
        let coeffs = s
            .split(',')
            .map(parse_rational)
            .collect::<Result<Vec<_>>>()?;
        Ok(Polynomial::new(coeffs))
    }
}

impl<'a> Add<&'a Polynomial> for &'a Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &'a Polynomial) -> Polynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Polynomial::new((0..n).map(|j| self.coeff(j) + rhs.coeff(j)).collect())
    }
}

impl<'a> Sub<&'a Polynomial> for &'a Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &'a Polynomial) -> Polynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Polynomial::new((0..n).map(|j| self.coeff(j) - rhs.coeff(j)).collect())
    }
}

impl<'a> Mul<&'a Polynomial> for &'a Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &'a Polynomial) -> Polynomial {
        if self.is_zero() || rhs.is_zero() {
            return Polynomial::zero();
        }
        let mut out = vec![Rational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Polynomial::new(out)
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        Polynomial::new(self.coeffs.iter().map(|c| -c).collect())
    }
}

macro_rules! forward_owned_binop {
    ($tr:ident, $method:ident) => {
        impl $tr<Polynomial> for Polynomial {
            type Output = Polynomial;
            fn $method(self, rhs: Polynomial) -> Polynomial {
                (&self).$method(&rhs)
            }
        }
        impl<'a> $tr<&'a Polynomial> for Polynomial {
            type Output = Polynomial;
            fn $method(self, rhs: &'a Polynomial) -> Polynomial {
                (&self).$method(rhs)
            }
        }
    };
}

forward_owned_binop!(Add, add);
forward_owned_binop!(Sub, sub);
forward_owned_binop!(Mul, mul);

impl Neg for Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        -&self
    }
}

impl std::iter::Sum for Polynomial {
    fn sum<I: Iterator<Item = Polynomial>>(iter: I) -> Polynomial {
        iter.fold(Polynomial::zero(), |acc, p| &acc + &p)
    }
}

/// The series `numerator(t) / (1 - t)^den_exponent`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RationalGenSeries {
    pub numerator: Polynomial,
    pub den_exponent: usize,
}

impl RationalGenSeries {
    pub fn new(numerator: Polynomial, den_exponent: usize) -> Self {
        RationalGenSeries {
            numerator,
            den_exponent,
        }
    }

    /// The coefficient `a_n`, via `a_n = sum_j h_j C(n - j + d - 1, d - 1)`.
    pub fn coeff(&self, n: usize) -> Rational {
        let d = self.den_exponent as u64;
        if d == 0 {
            return self.numerator.coeff(n);
        }
        self.numerator
            .coeffs()
            .iter()
            .enumerate()
            .take(n + 1)
            .filter(|(_, h)| !h.is_zero())
            .map(|(j, h)| h * Rational::from_integer(binomial((n - j) as u64 + d - 1, d - 1)))
            .sum()
    }

    /// `a_0, ..., a_{n_max}`.
    pub fn coeffs(&self, n_max: usize) -> Vec<Rational> {
        (0..=n_max).map(|n| self.coeff(n)).collect()
    }
}

/// Free-function form of [`RationalGenSeries::coeffs`].
pub fn series_coeffs(series: &RationalGenSeries, n_max: usize) -> Vec<Rational> {
    series.coeffs(n_max)
}

/// Recovers the numerator `h` of `h(t) / (1 - t)^d` from the first `d + 1`
/// coefficients of the series.
///
/// The values are read in the binomial basis
/// `a_n = sum_j h_j C(n - j + d - 1, d - 1)`, a unit lower-triangular system
/// solved by forward substitution. Values beyond the first `d + 1` are not
/// used to fit `h` but must be reproduced by it.
pub fn numerator_from_values(values: &[Rational], d: usize) -> Result<Polynomial> {
    if values.len() < d + 1 {
        return Err(Error::LengthMismatch {
            expected: d + 1,
            got: values.len(),
        });
    }
    let weights: Vec<Rational> = (0..=d)
        .map(|k| {
            if d == 0 {
                Rational::one()
            } else {
                Rational::from_integer(binomial((k + d - 1) as u64, (d - 1) as u64))
            }
        })
        .collect();
    let mut h: Vec<Rational> = Vec::with_capacity(d + 1);
    for n in 0..=d {
        let mut acc = values[n].clone();
        if d > 0 {
            for (j, hj) in h.iter().enumerate() {
                acc -= hj * &weights[n - j];
            }
        }
        h.push(acc);
    }
    let h = Polynomial::new(h);
    let series = RationalGenSeries::new(h.clone(), d);
    for (index, v) in values.iter().enumerate().skip(d + 1) {
        if &series.coeff(index) != v {
            return Err(Error::InconsistentValues { index });
        }
    }
    Ok(h)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Polynomial {
        s.parse().unwrap()
    }

    #[test]
    fn arithmetic_examples() {
        assert_eq!(&p("1,1") * &p("1,1"), p("1,2,1"));
        assert_eq!(p("1,2,1").derivative(), p("2,2"));
        assert_eq!(p("1,7,1").eval(&rat(-1)), rat(-5));
        assert_eq!(&p("1,2") - &p("1,2"), Polynomial::zero());
        assert!(Polynomial::zero().degree().is_none());
    }

    #[test]
    fn text_format() {
        assert_eq!(p("1,0,1"), Polynomial::from_ints(&[1, 0, 1]));
        assert_eq!(p("1/2, 1").coeff(0), frac(1, 2));
        assert_eq!(p("2/4,0,0").to_string(), "1/2");
        assert_eq!(p("0").to_string(), "0");
        assert!("1,,2".parse::<Polynomial>().is_err());
        assert!("1/0".parse::<Polynomial>().is_err());
        assert!("".parse::<Polynomial>().is_err());
        assert!("x".parse::<Polynomial>().is_err());
    }

    #[test]
    fn division_and_gcd() {
        let f = p("1,3,3,1");
        let g = p("1,1");
        let (q, r) = f.div_rem(&g);
        assert_eq!(q, p("1,2,1"));
        assert!(r.is_zero());
        assert_eq!(p("2,3,1").gcd(&p("3,4,1")), p("1,1"));
        assert_eq!(p("1,0,1").gcd(&p("1,1")), Polynomial::one());
    }

    #[test]
    fn primitive_form_keeps_sign() {
        let f = p("-1/2,1/3");
        let ints = f.primitive_integer_coeffs();
        assert_eq!(ints, vec![BigInt::from(-3), BigInt::from(2)]);
    }

    #[test]
    fn series_examples() {
        let s = RationalGenSeries::new(Polynomial::one(), 2);
        assert_eq!(s.coeffs(3), vec![rat(1), rat(2), rat(3), rat(4)]);
        let s = RationalGenSeries::new(p("1,1"), 1);
        assert_eq!(s.coeffs(3), vec![rat(1), rat(2), rat(2), rat(2)]);
        let s = RationalGenSeries::new(p("0,0,1"), 3);
        assert_eq!(s.coeffs(4), vec![rat(0), rat(0), rat(1), rat(3), rat(6)]);
    }

    #[test]
    fn numerator_examples() {
        let ones = vec![rat(1), rat(1)];
        assert_eq!(numerator_from_values(&ones, 1).unwrap(), Polynomial::one());
        let squares: Vec<_> = [0, 1, 4, 9].iter().map(|&v| rat(v)).collect();
        assert_eq!(numerator_from_values(&squares, 3).unwrap(), p("0,1,1"));
        let tri: Vec<_> = [1, 3, 6, 10].iter().map(|&v| rat(v)).collect();
        assert_eq!(numerator_from_values(&tri, 3).unwrap(), Polynomial::one());
    }

    #[test]
    fn numerator_errors() {
        assert_eq!(
            numerator_from_values(&[rat(1)], 2),
            Err(Error::LengthMismatch { expected: 3, got: 1 })
        );
        let bad: Vec<_> = [1, 2, 3, 5].iter().map(|&v| rat(v)).collect();
        assert_eq!(
            numerator_from_values(&bad, 2),
            Err(Error::InconsistentValues { index: 3 })
        );
    }

    #[test]
    fn binomials() {
        assert_eq!(binomial(5, 2), BigInt::from(10));
        assert_eq!(binomial(2, 5), BigInt::zero());
        assert_eq!(binomial(0, 0), BigInt::one());
    }
}
