use serde::Serialize;

use crate::error::{Error, Result};
use crate::poly::{Polynomial, Rational};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SquarefreeFactor {
    #[serde(serialize_with = "crate::serde_util::poly")]
    pub factor: Polynomial,
    pub multiplicity: usize,
}

/// `f = content * prod factor_k ^ multiplicity_k`, factors monic, squarefree
/// and pairwise coprime, multiplicities strictly increasing.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SquarefreeDecomposition {
    #[serde(serialize_with = "crate::serde_util::rational")]
    pub content: Rational,
    pub factors: Vec<SquarefreeFactor>,
}

impl SquarefreeDecomposition {
    pub fn reconstruct(&self) -> Polynomial {
        self.factors
            .iter()
            .fold(Polynomial::constant(self.content.clone()), |acc, sf| {
                &acc * &sf.factor.pow(sf.multiplicity as u32)
            })
    }

    /// Product of the distinct factors, monic.
    pub fn squarefree_part(&self) -> Polynomial {
        self.factors
            .iter()
            .fold(Polynomial::one(), |acc, sf| &acc * &sf.factor)
    }
}

/// Yun's algorithm over the rationals.
pub fn squarefree_decompose(f: &Polynomial) -> Result<SquarefreeDecomposition> {
    let content = f.leading_coeff().ok_or(Error::ZeroPolynomial)?.clone();
    let mut factors = Vec::new();
    if f.is_constant() {
        return Ok(SquarefreeDecomposition { content, factors });
    }
    let f = f.monic();
    let df = f.derivative();
    let g = f.gcd(&df);
    let mut a = f.exact_div(&g);
    let mut b = df.exact_div(&g);
    let mut multiplicity = 1;
    loop {
        let c = &b - &a.derivative();
        if c.is_zero() {
            if !a.is_constant() {
                factors.push(SquarefreeFactor {
                    factor: a,
                    multiplicity,
                });
            }
            break;
        }
        let d = a.gcd(&c);
        if !d.is_constant() {
            factors.push(SquarefreeFactor {
                factor: d.clone(),
                multiplicity,
            });
        }
        a = a.exact_div(&d);
        b = c.exact_div(&d);
        multiplicity += 1;
        if a.is_constant() {
            break;
        }
    }
    Ok(SquarefreeDecomposition { content, factors })
}

/// `f / gcd(f, f')`, monic.
pub fn squarefree_part(f: &Polynomial) -> Result<Polynomial> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if f.is_constant() {
        return Ok(Polynomial::one());
    }
    Ok(f.exact_div(&f.gcd(&f.derivative())).monic())
}
