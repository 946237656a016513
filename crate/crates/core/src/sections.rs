//! The r-section operator: every polynomial splits uniquely as
//! `f(t) = f_0(t^r) + t f_1(t^r) + ... + t^(r-1) f_{r-1}(t^r)`,
//! and `section(f, r, i)` returns `f_i`.

use crate::error::{out_of_range, Error, Result};
use crate::poly::Polynomial;

/// Coefficient `j` of the result is coefficient `r * j + i` of `f`.
pub fn section(f: &Polynomial, r: usize, i: usize) -> Result<Polynomial> {
    if r == 0 {
        return Err(out_of_range("r", 0, ">= 1"));
    }
    if i >= r {
        return Err(out_of_range("i", i, format!("0 <= i < {r}")));
    }
    Ok(Polynomial::new(
        f.coeffs().iter().skip(i).step_by(r).cloned().collect(),
    ))
}

/// All `r` sections, `(f^<r,0>, ..., f^<r,r-1>)`.
pub fn sections(f: &Polynomial, r: usize) -> Result<Vec<Polynomial>> {
    (0..r.max(1)).map(|i| section(f, r, i)).collect()
}

/// `sum_i t^i parts[i](t^r)` with `r = parts.len()`.
pub fn reconstruct(parts: &[Polynomial]) -> Result<Polynomial> {
    if parts.is_empty() {
        return Err(Error::EmptyParts);
    }
    let r = parts.len();
    Ok(parts
        .iter()
        .enumerate()
        .map(|(i, part)| part.compose_power(r).shift_up(i))
        .sum())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Polynomial {
        s.parse().unwrap()
    }

    #[test]
    fn section_examples() {
        assert_eq!(section(&p("1,2,3,4,5"), 3, 1).unwrap(), p("2,5"));
        let f = p("3,-1,4,1/5");
        assert_eq!(section(&f, 1, 0).unwrap(), f);
        assert_eq!(section(&p("1,2,2,2,1"), 2, 0).unwrap(), p("1,2,1"));
        assert_eq!(section(&Polynomial::zero(), 4, 2).unwrap(), Polynomial::zero());
        // index past the degree yields zero
        assert_eq!(section(&p("1,1"), 5, 3).unwrap(), Polynomial::zero());
    }

    #[test]
    fn section_rejects_bad_shift() {
        assert!(matches!(section(&p("1"), 3, 3), Err(Error::OutOfRange { name: "i", .. })));
        assert!(matches!(section(&p("1"), 0, 0), Err(Error::OutOfRange { name: "r", .. })));
    }

    #[test]
    fn reconstruct_examples() {
        assert_eq!(reconstruct(&[p("1,1"), p("2")]).unwrap(), p("1,2,1"));
        let f = p("1,2,3,2,1");
        assert_eq!(reconstruct(std::slice::from_ref(&f)).unwrap(), f);
        let parts = sections(&f, 3).unwrap();
        assert_eq!(reconstruct(&parts).unwrap(), f);
        assert_eq!(reconstruct(&[]), Err(Error::EmptyParts));
    }
}
