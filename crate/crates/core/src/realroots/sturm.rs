use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::poly::{Polynomial, Rational};
use crate::realroots::squarefree::squarefree_part;

/// An endpoint on the extended real line.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Bound {
    NegInf,
    Finite(Rational),
    PosInf,
}

impl Bound {
    fn rank(&self) -> u8 {
        match self {
            Bound::NegInf => 0,
            Bound::Finite(_) => 1,
            Bound::PosInf => 2,
        }
    }
}

impl PartialOrd for Bound {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Bound {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self, other) {
            (Bound::Finite(a), Bound::Finite(b)) => a.cmp(b),
            _ => self.rank().cmp(&other.rank()),
        }
    }
}

impl fmt::Display for Bound {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Bound::NegInf => f.write_str("-inf"),
            Bound::Finite(q) => write!(f, "{q}"),
            Bound::PosInf => f.write_str("inf"),
        }
    }
}

impl From<Rational> for Bound {
    fn from(q: Rational) -> Self {
        Bound::Finite(q)
    }
}

/// Sign of an integer-coefficient polynomial at a rational point, computed as
/// the sign of `q^n f(p/q)` so that no rational arithmetic is needed.
pub(crate) fn int_sign_at(coeffs: &[BigInt], x: &Rational) -> i8 {
    let Some((lead, rest)) = coeffs.split_last() else {
        return 0;
    };
    let (p, q) = (x.numer(), x.denom());
    let mut acc = lead.clone();
    let mut qpow = BigInt::one();
    for c in rest.iter().rev() {
        qpow *= q;
        acc = acc * p + c * &qpow;
    }
    sign_of(&acc)
}

fn sign_of(x: &BigInt) -> i8 {
    if x.is_positive() {
        1
    } else if x.is_negative() {
        -1
    } else {
        0
    }
}

fn int_sign_at_bound(coeffs: &[BigInt], b: &Bound) -> i8 {
    match b {
        Bound::Finite(x) => int_sign_at(coeffs, x),
        Bound::PosInf => coeffs.last().map_or(0, sign_of),
        Bound::NegInf => {
            let s = coeffs.last().map_or(0, sign_of);
            if coeffs.len().is_multiple_of(2) {
                -s
            } else {
                s
            }
        }
    }
}

/// The Sturm chain `f, f', -rem(f, f'), ...` of a squarefree polynomial, each
/// term rescaled by a positive constant to primitive integer coefficients.
#[derive(Clone, Debug)]
pub struct SturmSequence {
    chain: Vec<Vec<BigInt>>,
}

impl SturmSequence {
    /// `f` must be nonzero; for a non-squarefree `f` the counts refer to the
    /// distinct roots only away from multiple roots, so callers pass the
    /// squarefree part.
    pub fn new(f: &Polynomial) -> Result<Self> {
        if f.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        let mut chain = vec![f.primitive_integer_coeffs()];
        let mut prev = Polynomial::from_bigints(&chain[0]);
        let mut cur = prev.derivative();
        while !cur.is_zero() {
            let ints = cur.primitive_integer_coeffs();
            let cur_int = Polynomial::from_bigints(&ints);
            chain.push(ints);
            let (_, rem) = prev.div_rem(&cur_int);
            prev = cur_int;
            cur = -rem;
        }
        Ok(SturmSequence { chain })
    }

    /// Primitive integer coefficients of the subject polynomial.
    pub fn subject(&self) -> &[BigInt] {
        &self.chain[0]
    }

    pub fn sign_at(&self, x: &Rational) -> i8 {
        int_sign_at(&self.chain[0], x)
    }

    pub fn is_root(&self, x: &Rational) -> bool {
        self.sign_at(x) == 0
    }

    /// Number of sign changes in the chain at `b`, zeros skipped.
    pub fn variations(&self, b: &Bound) -> usize {
        let mut last = 0i8;
        let mut changes = 0;
        for term in &self.chain {
            let s = int_sign_at_bound(term, b);
            if s != 0 {
                if last != 0 && s != last {
                    changes += 1;
                }
                last = s;
            }
        }
        changes
    }

    /// Distinct roots in the half-open interval `(lo, hi]`.
    pub fn count(&self, lo: &Bound, hi: &Bound) -> usize {
        self.variations(lo).saturating_sub(self.variations(hi))
    }

    /// Distinct roots in the open interval `(lo, hi)` with finite endpoints.
    pub fn count_open(&self, lo: &Rational, hi: &Rational) -> usize {
        let n = self.count(&Bound::Finite(lo.clone()), &Bound::Finite(hi.clone()));
        n - usize::from(self.is_root(hi))
    }
}

/// Number of distinct real roots of `f` in `(lo, hi]`.
pub fn count_real_roots(f: &Polynomial, lo: &Bound, hi: &Bound) -> Result<usize> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if lo >= hi {
        return Err(Error::EmptyInterval {
            lo: lo.to_string(),
            hi: hi.to_string(),
        });
    }
    let seq = SturmSequence::new(&squarefree_part(f)?)?;
    Ok(seq.count(lo, hi))
}

/// Strict bound `B` with every root inside `(-B, B)`:
/// `1 + max |a_j / a_n|` (Cauchy).
pub fn cauchy_bound(coeffs: &[BigInt]) -> Rational {
    let Some((lead, rest)) = coeffs.split_last() else {
        return Rational::one();
    };
    let lead = lead.abs();
    let max = rest
        .iter()
        .map(|c| Rational::new(c.abs(), lead.clone()))
        .max()
        .unwrap_or_else(Rational::zero);
    max + Rational::one()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::rat;

    fn p(s: &str) -> Polynomial {
        s.parse().unwrap()
    }

    #[test]
    fn count_examples() {
        let all = (Bound::NegInf, Bound::PosInf);
        assert_eq!(count_real_roots(&p("1,2"), &all.0, &all.1).unwrap(), 1);
        assert_eq!(count_real_roots(&p("1,0,1"), &all.0, &all.1).unwrap(), 0);
        assert_eq!(
            count_real_roots(&p("1,7,1"), &Bound::NegInf, &Bound::Finite(rat(0))).unwrap(),
            2
        );
    }

    #[test]
    fn half_open_endpoint_convention() {
        // roots at -1 and 2
        let f = p("-2,-1,1");
        let c = |lo: i64, hi: i64| {
            count_real_roots(&f, &Bound::Finite(rat(lo)), &Bound::Finite(rat(hi))).unwrap()
        };
        assert_eq!(c(-1, 2), 1);
        assert_eq!(c(-2, -1), 1);
        assert_eq!(c(-1, 1), 0);
        assert_eq!(c(-3, 3), 2);
    }

    #[test]
    fn multiple_roots_count_once() {
        let f = p("1,1").pow(3) * p("-1,1");
        assert_eq!(count_real_roots(&f, &Bound::NegInf, &Bound::PosInf).unwrap(), 2);
    }

    #[test]
    fn count_errors() {
        assert_eq!(
            count_real_roots(&Polynomial::zero(), &Bound::NegInf, &Bound::PosInf),
            Err(Error::ZeroPolynomial)
        );
        assert!(matches!(
            count_real_roots(&p("1,1"), &Bound::Finite(rat(1)), &Bound::Finite(rat(1))),
            Err(Error::EmptyInterval { .. })
        ));
        assert!(count_real_roots(&p("1,1"), &Bound::PosInf, &Bound::NegInf).is_err());
    }

    #[test]
    fn integer_sign_evaluation_matches_rational() {
        let f = p("3/2,-7,0,2/3");
        let ints = f.primitive_integer_coeffs();
        for x in [rat(-3), rat(0), "1/5".parse::<Rational>().unwrap(), rat(4)] {
            let v = f.eval(&x);
            let expect = if v.is_positive() { 1 } else if v.is_negative() { -1 } else { 0 };
            assert_eq!(int_sign_at(&ints, &x), expect);
        }
    }
}
