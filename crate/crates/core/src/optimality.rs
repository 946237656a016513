//! Witnesses showing the bounds on `r` for real-rootedness of
//! `U_{r,i}^d h` cannot be lowered: a non-real-rooted transform one step below
//! the bound, and a transform with a double root at the boundary for
//! distinct roots.

use num_bigint::BigInt;
use num_traits::{One, Signed};
use serde::Serialize;

use crate::error::{out_of_range, Error, Result};
use crate::poly::{Polynomial, Rational};
use crate::realroots::{classify_real_rooted, rational_root_test, RationalRootCertificate, RootClassification, Verdict};
use crate::veronese::{a_poly, veronese_numerator, VeroneseParams};

/// Largest exponent `k` tried in the scale search `M = 2^k`.
pub const MAX_SCALE_EXPONENT: u32 = 40;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct WitnessReport {
    pub s: usize,
    pub d: usize,
    pub i: usize,
    pub r: usize,
    #[serde(serialize_with = "crate::serde_util::poly")]
    pub witness_h: Polynomial,
    /// `U_{r,i}^d witness_h`.
    #[serde(serialize_with = "crate::serde_util::poly")]
    pub transformed: Polynomial,
    pub verdict: RootClassification,
    /// The coefficient `M` of `t^s` for non-real witnesses.
    #[serde(serialize_with = "crate::serde_util::opt_rational")]
    pub scale: Option<Rational>,
    /// The double root for double-root witnesses.
    #[serde(serialize_with = "crate::serde_util::opt_rational")]
    pub alpha: Option<Rational>,
    /// Classification of the same `h` transformed with `r + 1`.
    pub verdict_next_r: Option<RootClassification>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "outcome", rename_all = "snake_case")]
pub enum WitnessOutcome {
    Found(WitnessReport),
    /// No `M <= 2^MAX_SCALE_EXPONENT` gave a non-real-rooted transform.
    NotFound { s: usize, d: usize, i: usize, r: usize },
    /// `a_d^<s,i>` has no negative rational root, so no rational witness of
    /// this shape exists.
    NoRationalRoot {
        s: usize,
        d: usize,
        i: usize,
        #[serde(serialize_with = "crate::serde_util::poly")]
        a_poly: Polynomial,
        certificate: RationalRootCertificate,
    },
}

impl WitnessOutcome {
    pub fn report(&self) -> Option<&WitnessReport> {
        match self {
            WitnessOutcome::Found(r) => Some(r),
            _ => None,
        }
    }
}

/// Searches `h = 1 + M t^s`, `M = 1, 2, 4, ..., 2^40`, for which
/// `U_{s-i-1,i}^d h` is not real-rooted. Requires `s - i > i + 1`.
pub fn nonreal_witness(s: usize, d: usize, i: usize) -> Result<WitnessOutcome> {
    if d == 0 {
        return Err(out_of_range("d", 0, ">= 1"));
    }
    if s < i + i + 2 {
        return Err(out_of_range("s", s, format!("s - i > i + 1, i.e. s >= {}", 2 * i + 2)));
    }
    let r = s - i - 1;
    let params = VeroneseParams::new(d, r, i)?;
    let next = VeroneseParams::new(d, r + 1, i)?;
    for k in 0..=MAX_SCALE_EXPONENT {
        let m = Rational::from_integer(BigInt::one() << k);
        let h = Polynomial::one() + Polynomial::monomial(m.clone(), s);
        let transformed = veronese_numerator(&h, params);
        let verdict = classify_real_rooted(&transformed);
        if verdict.verdict == Verdict::NotRealRooted {
            let verdict_next_r = Some(classify_real_rooted(&veronese_numerator(&h, next)));
            return Ok(WitnessOutcome::Found(WitnessReport {
                s,
                d,
                i,
                r,
                witness_h: h,
                transformed,
                verdict,
                scale: Some(m),
                alpha: None,
                verdict_next_r,
            }));
        }
    }
    Ok(WitnessOutcome::NotFound { s, d, i, r })
}

/// With `r = s` and `alpha < 0` a rational root of `a_d^<s,i>`, the
/// polynomial `h = 1 - t^s / alpha` has `U_{s,i}^d h = (1 - t/alpha) a_d^<s,i>`,
/// which has a double root at `alpha`. The root closest to zero is used.
pub fn double_root_witness(s: usize, d: usize, i: usize) -> Result<WitnessOutcome> {
    if s < 2 {
        return Err(out_of_range("s", s, ">= 2"));
    }
    if i >= s {
        return Err(out_of_range("i", i, format!("0 <= i < s = {s}")));
    }
    let a = a_poly(d, s, i)?;
    let certificate = rational_root_test(&a)?;
    let Some(alpha) = certificate.roots.iter().filter(|x| x.is_negative()).max().cloned() else {
        return Ok(WitnessOutcome::NoRationalRoot {
            s,
            d,
            i,
            a_poly: a,
            certificate,
        });
    };
    let inv = alpha.recip();
    let h = Polynomial::one() - Polynomial::monomial(inv.clone(), s);
    let transformed = veronese_numerator(&h, VeroneseParams::new(d, s, i)?);
    let expected = &Polynomial::new(vec![Rational::one(), -inv]) * &a;
    if transformed != expected {
        return Err(Error::Invariant(format!(
            "U h = {transformed} differs from (1 - t/alpha) a = {expected}"
        )));
    }
    let verdict = classify_real_rooted(&transformed);
    Ok(WitnessOutcome::Found(WitnessReport {
        s,
        d,
        i,
        r: s,
        witness_h: h,
        transformed,
        verdict,
        scale: None,
        alpha: Some(alpha),
        verdict_next_r: None,
    }))
}

/// Whether `a_d^<s,i>` has a real root.
pub fn a_has_real_root(d: usize, s: usize, i: usize) -> Result<bool> {
    let a = a_poly(d, s, i)?;
    let c = classify_real_rooted(&a);
    Ok(c.is_real_rooted() && a.degree().unwrap_or(0) > 0)
}
