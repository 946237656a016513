//! The rational root test: every rational root `p/q` (lowest terms) of a
//! primitive integer polynomial has `p | a_low` and `q | a_high`.

use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::poly::{Polynomial, Rational};
use crate::realroots::sturm::int_sign_at;

/// Record of an exhaustive rational root test.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RationalRootCertificate {
    /// Primitive integer coefficients of the tested polynomial.
    #[serde(serialize_with = "crate::serde_util::bigints")]
    pub integer_coeffs: Vec<BigInt>,
    /// Every candidate `±p/q` that was evaluated (zero excluded).
    #[serde(serialize_with = "crate::serde_util::rationals")]
    pub candidates: Vec<Rational>,
    /// The candidates (and zero, if `t` divides the polynomial) that are roots.
    #[serde(serialize_with = "crate::serde_util::rationals")]
    pub roots: Vec<Rational>,
}

/// Largest absolute value accepted for trial-division factoring.
const MAX_FACTOR: u64 = 1 << 40;

fn divisors(n: &BigInt) -> Result<Vec<u64>> {
    let n = n
        .abs()
        .to_u64()
        .filter(|&n| n <= MAX_FACTOR)
        .ok_or_else(|| Error::InvalidParameter(format!("coefficient {n} too large for the rational root test")))?;
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut k = 1u64;
    while k * k <= n {
        if n % k == 0 {
            small.push(k);
            if k * k != n {
                large.push(n / k);
            }
        }
        k += 1;
    }
    small.extend(large.into_iter().rev());
    Ok(small)
}

pub fn rational_root_test(f: &Polynomial) -> Result<RationalRootCertificate> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let integer_coeffs = f.primitive_integer_coeffs();
    let low = integer_coeffs
        .iter()
        .position(|c| !c.is_zero())
        .expect("nonzero polynomial");
    let reduced = &integer_coeffs[low..];
    let mut roots = Vec::new();
    let mut candidates = Vec::new();
    if reduced.len() > 1 {
        let ps = divisors(&reduced[0])?;
        let qs = divisors(reduced.last().expect("nonempty"))?;
        for q in &qs {
            for p in &ps {
                let x = Rational::new(BigInt::from(*p), BigInt::from(*q));
                if x.denom() != &BigInt::from(*q) {
                    continue; // not in lowest terms, already covered
                }
                for cand in [-x.clone(), x] {
                    if int_sign_at(reduced, &cand) == 0 {
                        roots.push(cand.clone());
                    }
                    candidates.push(cand);
                }
            }
        }
    }
    if low > 0 {
        roots.push(Rational::zero());
    }
    roots.sort();
    Ok(RationalRootCertificate {
        integer_coeffs,
        candidates,
        roots,
    })
}
