//! Ehrhart data of lattice and rational polytopes: lattice-point counts,
//! `h*`-polynomials, dilation through the Veronese transform and the
//! constituents of Ehrhart quasi-polynomials.

mod polytope;

pub use polytope::{count_points, FileFormat, Halfspace, LatticePolytope, Polytope, PolytopeFile, RationalPolytope};

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::error::{out_of_range, Error, Result};
use crate::poly::{numerator_from_values, Polynomial, Rational, RationalGenSeries};
use crate::sections::section;
use crate::veronese::{veronese_numerator, VeroneseParams};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EhrhartData {
    pub dim: usize,
    /// `E(0), ..., E(dim + 1)`.
    pub counts: Vec<u64>,
    /// The counting function as a polynomial in `n`.
    #[serde(serialize_with = "crate::serde_util::poly")]
    pub ehrhart_poly: Polynomial,
    /// Numerator of `sum E(n) t^n` over `(1 - t)^(dim + 1)`.
    #[serde(serialize_with = "crate::serde_util::poly")]
    pub h_star: Polynomial,
}

fn q(n: u64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Newton forward-difference interpolation through `(k, values[k])`.
fn interpolate(values: &[Rational]) -> Polynomial {
    let mut diffs = values.to_vec();
    let mut leading = Vec::with_capacity(values.len());
    while let Some(first) = diffs.first() {
        leading.push(first.clone());
        diffs = diffs.windows(2).map(|w| &w[1] - &w[0]).collect();
    }
    let mut basis = Polynomial::one();
    let mut result = Polynomial::zero();
    for (k, c) in leading.iter().enumerate() {
        result = &result + &basis.scale(c);
        // C(n, k+1) = C(n, k) (n - k) / (k + 1)
        let step = Polynomial::new(vec![-q(k as u64), Rational::one()]);
        basis = (&basis * &step).scale(&q(k as u64 + 1).recip());
    }
    result
}

fn counts(p: &Polytope, n_max: u64, shift: Option<&[Rational]>) -> Result<Vec<u64>> {
    (0..=n_max).map(|n| count_points(p, n, shift)).collect()
}

/// Counts, Ehrhart polynomial and `h*` of `P`, or of the translated count
/// `n -> |(nP - v) ∩ Z^m|` when a shift is given. The positivity invariants
/// of `h*` are only checked without a shift.
pub fn ehrhart_data(p: &Polytope, shift: Option<&[Rational]>) -> Result<EhrhartData> {
    let d = p.dim();
    let counts = counts(p, d as u64 + 1, shift)?;
    let values: Vec<Rational> = counts.iter().map(|&c| q(c)).collect();
    let ehrhart_poly = interpolate(&values[..=d]);
    let predicted = ehrhart_poly.eval(&q(d as u64 + 1));
    if predicted != values[d + 1] {
        return Err(Error::Interpolation {
            n: d + 1,
            expected: predicted.to_string(),
            got: counts[d + 1].to_string(),
        });
    }
    let h_star = numerator_from_values(&values, d + 1)?;
    if shift.is_none() && p.is_lattice() {
        if h_star.coeff(0) != Rational::one() {
            return Err(Error::Invariant(format!("h*(0) = {} for a lattice polytope", h_star.coeff(0))));
        }
        if !h_star.is_integral() || !h_star.has_nonnegative_coeffs() {
            return Err(Error::Invariant(format!("h* = {h_star} is not a nonnegative integer polynomial")));
        }
        if h_star.degree().unwrap_or(0) > d {
            return Err(Error::Invariant(format!("deg h* exceeds dimension {d}")));
        }
    }
    Ok(EhrhartData {
        dim: d,
        counts,
        ehrhart_poly,
        h_star,
    })
}

/// `h*(rP)` computed from `h*(P)` as `U_{r,0}^{dim+1} h*(P)`.
pub fn hstar_dilate(p: &LatticePolytope, r: u64) -> Result<Polynomial> {
    let data = ehrhart_data(p, None)?;
    Ok(veronese_numerator(&data.h_star, VeroneseParams::new(p.dim() + 1, r as usize, 0)?))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DilationCheck {
    pub r: u64,
    #[serde(serialize_with = "crate::serde_util::poly")]
    pub transformed: Polynomial,
    #[serde(serialize_with = "crate::serde_util::poly")]
    pub recounted: Polynomial,
    pub agree: bool,
}

/// Compares `hstar_dilate(P, r)` with `h*` of `rP` counted from scratch.
pub fn dilation_check(p: &LatticePolytope, r: u64) -> Result<DilationCheck> {
    let transformed = hstar_dilate(p, r)?;
    let recounted = ehrhart_data(&p.dilate(r), None)?.h_star;
    Ok(DilationCheck {
        r,
        agree: transformed == recounted,
        transformed,
        recounted,
    })
}

/// `h^<l,i>`: the numerator over `(1 - t)^d` of the series of the `i`-th
/// constituent `n -> f(ln + i)`, where `sum f(n) t^n = h / (1 - t^l)^d`.
pub fn quasi_constituent_numerator(h: &Polynomial, l: usize, d: usize, i: usize) -> Result<Polynomial> {
    if d == 0 {
        return Err(out_of_range("d", 0, ">= 1"));
    }
    section(h, l, i)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RationalEhrhart {
    /// Numerator of `sum E(nP) t^n` over `(1 - t^l)^d`.
    #[serde(serialize_with = "crate::serde_util::poly")]
    pub h: Polynomial,
    pub l: u64,
    /// Exponent of the denominator, `dim + 1`.
    pub d: usize,
    pub counts: Vec<u64>,
}

/// Coefficients `0..n` of `1 / (1 - t^l)^d`.
fn inverse_power_series(l: usize, d: usize, n: usize) -> Vec<Rational> {
    let base = RationalGenSeries::new(Polynomial::one(), d);
    let mut out = vec![Rational::zero(); n];
    for (k, c) in base.coeffs((n.saturating_sub(1)) / l).into_iter().enumerate() {
        if k * l < n {
            out[k * l] = c;
        }
    }
    out
}

fn mul_truncated(a: &[Rational], b: &[Rational], n: usize) -> Vec<Rational> {
    let mut out = vec![Rational::zero(); n];
    for (i, x) in a.iter().enumerate().take(n) {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate().take(n - i) {
            out[i + j] += x * y;
        }
    }
    out
}

/// `h`, `l`, `d` with `sum E(nP) t^n = h / (1 - t^l)^d`, `d = dim + 1` and
/// `deg h < l d`. One extra period of counts is checked against the result.
pub fn rational_ehrhart(p: &RationalPolytope) -> Result<RationalEhrhart> {
    let l = p.period_l as usize;
    let d = p.dim() + 1;
    let n_fit = l * d;
    let n_all = n_fit + l;
    let counts = counts(p, n_all as u64 - 1, None)?;
    let values: Vec<Rational> = counts.iter().map(|&c| q(c)).collect();
    let denominator = Polynomial::new(vec![Rational::one()]) - Polynomial::monomial(Rational::one(), l);
    let den = denominator.pow(d as u32);
    let h = Polynomial::new(mul_truncated(den.coeffs(), &values, n_fit));
    let predicted = mul_truncated(h.coeffs(), &inverse_power_series(l, d, n_all), n_all);
    if let Some(n) = (0..n_all).find(|&n| predicted[n] != values[n]) {
        return Err(Error::Interpolation {
            n,
            expected: predicted[n].to_string(),
            got: counts[n].to_string(),
        });
    }
    Ok(RationalEhrhart {
        h,
        l: l as u64,
        d,
        counts,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct QuasiCheck {
    pub r: u64,
    pub i: u64,
    #[serde(serialize_with = "crate::serde_util::poly")]
    pub constituent: Polynomial,
    /// `U_{r,0}^d h^<l,i>`.
    #[serde(serialize_with = "crate::serde_util::poly")]
    pub transformed: Polynomial,
    /// Numerator of `sum E((rln + i)P) t^n` over `(1 - t)^d` from fresh counts.
    #[serde(serialize_with = "crate::serde_util::poly")]
    pub recounted: Polynomial,
    pub agree: bool,
}

/// Transforms the `i`-th constituent numerator by `U_{r,0}^d` and compares it
/// with the numerator fitted to the counts of `(rln + i)P`.
pub fn quasi_check(p: &RationalPolytope, r: u64, i: u64) -> Result<QuasiCheck> {
    let data = rational_ehrhart(p)?;
    let l = data.l;
    if i >= l {
        return Err(out_of_range("i", i, format!("0 <= i < l = {l}")));
    }
    let constituent = quasi_constituent_numerator(&data.h, l as usize, data.d, i as usize)?;
    let transformed = veronese_numerator(&constituent, VeroneseParams::new(data.d, r as usize, 0)?);
    let values = (0..=data.d as u64 + 1)
        .map(|n| count_points(p, r * l * n + i, None).map(q))
        .collect::<Result<Vec<_>>>()?;
    let recounted = numerator_from_values(&values, data.d)?;
    Ok(QuasiCheck {
        r,
        i,
        agree: transformed == recounted,
        constituent,
        transformed,
        recounted,
    })
}

/// `h*_1 >= h*_d` with `d = dim P` (absent coefficients read as zero).
pub fn h1_hd_check(p: &LatticePolytope) -> Result<bool> {
    let h = ehrhart_data(p, None)?.h_star;
    Ok(h.coeff(1) >= h.coeff(p.dim()))
}
