//! Eulerian polynomials and how far the scaled `a`-family and scaled
//! transforms are from their large-`r` limits.

use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use serde::Serialize;

use crate::error::{out_of_range, Error, Result};
use crate::poly::{numerator_from_values, Polynomial, Rational};
use crate::realroots::{classify_real_rooted, default_eps, isolate_real_roots, max_abs_distance};
use crate::veronese::{a_poly, veronese_numerator, VeroneseParams};

/// `A_k`, the numerator of `sum_n n^k t^n = A_k(t) / (1 - t)^(k+1)`.
pub fn eulerian(k: usize) -> Polynomial {
    let values: Vec<Rational> = (0..=k + 1)
        .map(|n| Rational::from_integer(BigInt::from(n).pow(k as u32)))
        .collect();
    numerator_from_values(&values, k + 1).expect("k + 2 values for exponent k + 1")
}

fn factorial(n: usize) -> BigInt {
    (1..=n).fold(BigInt::from(1), |acc, k| acc * BigInt::from(k))
}

/// `A_{d-1} / (d-1)!`.
pub fn eulerian_limit(d: usize) -> Polynomial {
    eulerian(d - 1).scale(&Rational::from_integer(factorial(d - 1)).recip())
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DeviationReport {
    pub r: usize,
    /// Largest coefficientwise gap to the limit polynomial.
    #[serde(serialize_with = "crate::serde_util::rational")]
    pub max_abs_coeff_deviation: Rational,
    /// Sum of the coefficientwise gaps.
    #[serde(serialize_with = "crate::serde_util::rational")]
    pub sum_abs_coeff_deviation: Rational,
    /// Upper bounds on `|root_j(scaled) - root_j(limit)|`, roots paired in
    /// ascending order, when both sides are real-rooted of equal degree.
    #[serde(serialize_with = "crate::serde_util::opt_rationals")]
    pub root_distances: Option<Vec<Rational>>,
}

fn coefficient_gaps(a: &Polynomial, b: &Polynomial) -> (Rational, Rational) {
    let n = a.coeffs().len().max(b.coeffs().len());
    let gaps: Vec<Rational> = (0..n).map(|j| (a.coeff(j) - b.coeff(j)).abs()).collect();
    let max = gaps.iter().max().cloned().unwrap_or_else(Rational::zero);
    let sum = gaps.into_iter().sum();
    (max, sum)
}

fn root_distances(a: &Polynomial, b: &Polynomial) -> Result<Option<Vec<Rational>>> {
    if a.is_zero() || b.is_zero() || a.degree() != b.degree() {
        return Ok(None);
    }
    if !classify_real_rooted(a).is_real_rooted() || !classify_real_rooted(b).is_real_rooted() {
        return Ok(None);
    }
    let eps = default_eps();
    let ia = isolate_real_roots(a, &eps)?;
    let ib = isolate_real_roots(b, &eps)?;
    let (ea, eb) = (ia.expanded(), ib.expanded());
    Ok(Some(
        ea.iter()
            .zip(eb.iter())
            .map(|(x, y)| max_abs_distance(x, y))
            .collect(),
    ))
}

fn report(r: usize, scaled: &Polynomial, limit: &Polynomial, with_roots: bool) -> Result<DeviationReport> {
    let (max, sum) = coefficient_gaps(scaled, limit);
    Ok(DeviationReport {
        r,
        max_abs_coeff_deviation: max,
        sum_abs_coeff_deviation: sum,
        root_distances: if with_roots {
            root_distances(scaled, limit)?
        } else {
            None
        },
    })
}

fn check(d: usize, i: usize, r: usize) -> Result<()> {
    if d == 0 {
        return Err(out_of_range("d", 0, ">= 1"));
    }
    if r <= i {
        return Err(out_of_range("r", r, format!("> i = {i}")));
    }
    Ok(())
}

fn r_scale(r: usize, d: usize) -> Rational {
    Rational::from_integer(BigInt::from(r).pow((d - 1) as u32)).recip()
}

/// Deviation of `a_d^<r,i> / r^(d-1)` from `A_{d-1} / (d-1)!`.
pub fn a_limit_deviation(d: usize, i: usize, r: usize) -> Result<DeviationReport> {
    check(d, i, r)?;
    let scaled = a_poly(d, r, i)?.scale(&r_scale(r, d));
    report(r, &scaled, &eulerian_limit(d), true)
}

/// Deviation of `t a_d^<r,r-i> / r^(d-1)` from `A_{d-1} / (d-1)!`, for
/// `i >= 1` (the shift `r - i` must lie in `[0, r)`).
pub fn a_limit_deviation_shifted(d: usize, i: usize, r: usize) -> Result<DeviationReport> {
    check(d, i, r)?;
    if i == 0 {
        return Err(out_of_range("i", 0, ">= 1 for the shifted limit"));
    }
    let scaled = a_poly(d, r, r - i)?.shift_up(1).scale(&r_scale(r, d));
    report(r, &scaled, &eulerian_limit(d), true)
}

/// Deviation of `U_{r,i}^d h / r^(d-1)` from `h(1) A_{d-1} / (d-1)!`.
/// Root distances are only reported when `h(1) != 0`.
pub fn veronese_limit_deviation(h: &Polynomial, d: usize, i: usize, r: usize) -> Result<DeviationReport> {
    check(d, i, r)?;
    if h.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let p = VeroneseParams::new(d, r, i)?;
    let scaled = veronese_numerator(h, p).scale(&r_scale(r, d));
    let h1 = h.eval(&Rational::from_integer(BigInt::from(1)));
    let limit = eulerian_limit(d).scale(&h1);
    report(r, &scaled, &limit, !h1.is_zero())
}
