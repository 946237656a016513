//! The Veronese transform `U_{r,i}^d` and the polynomial family
//! `a_d^<r,i> = ((1 + t + ... + t^(r-1))^d)^<r,i>` it is built from.
//!
//! If `sum a_n t^n = h(t) / (1 - t)^d` then
//! `sum a_{rn+i} t^n = U_{r,i}^d h(t) / (1 - t)^d`. Three independent
//! computations of `U` are provided and are expected to agree exactly:
//! sectioning the product `h (1 + ... + t^(r-1))^d`, the bilinear expansion in
//! the sections of `h` and the `a`-family, and (when `r >= deg h - i`) the
//! scalar combination of `a`-polynomials.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::error::{out_of_range, Error, Result};
use crate::poly::Polynomial;
use crate::sections::{section, sections};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct VeroneseParams {
    pub d: usize,
    pub r: usize,
    pub i: usize,
}

impl VeroneseParams {
    pub fn new(d: usize, r: usize, i: usize) -> Result<Self> {
        if r == 0 {
            return Err(out_of_range("r", 0, ">= 1"));
        }
        if i >= r {
            return Err(out_of_range("i", i, format!("0 <= i < {r}")));
        }
        Ok(VeroneseParams { d, r, i })
    }
}

fn check_d(d: usize) -> Result<()> {
    if d == 0 {
        return Err(out_of_range("d", 0, ">= 1"));
    }
    Ok(())
}

/// `(a_d^<r,0>, ..., a_d^<r,r-1>)` by sectioning the expanded power.
/// Accepts `d = 0`, where the family is `(1, 0, ..., 0)`.
pub(crate) fn a_family_direct(d: usize, r: usize) -> Vec<Polynomial> {
    let power = Polynomial::geometric(r).pow(d as u32);
    sections(&power, r).expect("r >= 1 checked by caller")
}

/// `a_d^<r,i>`, the `i`-th `r`-section of `(1 + t + ... + t^(r-1))^d`.
pub fn a_poly(d: usize, r: usize, i: usize) -> Result<Polynomial> {
    check_d(d)?;
    VeroneseParams::new(d, r, i)?;
    section(&Polynomial::geometric(r).pow(d as u32), r, i)
}

/// The whole `a`-family for `(d, r)`, built from the all-ones family at
/// `d = 1` by iterating `g_l = f_0 + ... + f_l + t (f_{l+1} + ... + f_{r-1})`.
pub fn a_family_recursive(d: usize, r: usize) -> Result<Vec<Polynomial>> {
    check_d(d)?;
    if r == 0 {
        return Err(out_of_range("r", 0, ">= 1"));
    }
    let mut family = vec![Polynomial::one(); r];
    for _ in 1..d {
        family = interlacing_recursion_step(&family);
    }
    Ok(family)
}

/// One application of `g_l = f_0 + ... + f_l + t (f_{l+1} + ... + f_{r-1})`.
pub fn interlacing_recursion_step(fs: &[Polynomial]) -> Vec<Polynomial> {
    let total: Polynomial = fs.iter().cloned().sum();
    let mut prefix = Polynomial::zero();
    fs.iter()
        .map(|f| {
            prefix = &prefix + f;
            let rest = &total - &prefix;
            &prefix + &rest.shift_up(1)
        })
        .collect()
}

/// `U_{r,i}^d h = (h(t) (1 + ... + t^(r-1))^d)^<r,i>`.
pub fn veronese_numerator(h: &Polynomial, p: VeroneseParams) -> Polynomial {
    let product = h * &Polynomial::geometric(p.r).pow(p.d as u32);
    section(&product, p.r, p.i).expect("params validated on construction")
}

/// `U_{r,i}^d h = sum_{k+l=i} h^<r,k> a^<r,l> + t sum_{k+l=i+r} h^<r,k> a^<r,l>`.
pub fn veronese_numerator_linear(h: &Polynomial, p: VeroneseParams) -> Polynomial {
    let a = a_family_direct(p.d, p.r);
    let hs = sections(h, p.r).expect("r >= 1");
    let low: Polynomial = (0..=p.i).map(|k| &hs[k] * &a[p.i - k]).sum();
    let high: Polynomial = (p.i + 1..p.r).map(|k| &hs[k] * &a[p.r + p.i - k]).sum();
    &low + &high.shift_up(1)
}

/// The scalar form valid for `r >= deg h - i`:
/// `h_0 a^<r,i> + ... + h_i a^<r,0> + t (h_{i+1} a^<r,r-1> + ... + h_{r+i} a^<r,0>)`.
/// Returns `None` when `r < deg h - i`.
pub fn veronese_numerator_lincomb(h: &Polynomial, p: VeroneseParams) -> Option<Polynomial> {
    let s = match h.degree() {
        None => return Some(Polynomial::zero()),
        Some(s) => s,
    };
    if p.r + p.i < s {
        return None;
    }
    let a = a_family_direct(p.d, p.r);
    let low: Polynomial = (0..=p.i).map(|j| a[p.i - j].scale(&h.coeff(j))).sum();
    let high: Polynomial = (p.i + 1..=p.r + p.i)
        .map(|j| a[p.r + p.i - j].scale(&h.coeff(j)))
        .sum();
    Some(&low + &high.shift_up(1))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Method {
    Hecke,
    Linear,
    Lincomb,
}

impl Method {
    pub const ALL: [Method; 3] = [Method::Hecke, Method::Linear, Method::Lincomb];

    pub fn name(self) -> &'static str {
        match self {
            Method::Hecke => "hecke",
            Method::Linear => "linear",
            Method::Lincomb => "lincomb",
        }
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Method {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "hecke" => Ok(Method::Hecke),
            "linear" => Ok(Method::Linear),
            "lincomb" => Ok(Method::Lincomb),
            other => Err(Error::Parse {
                what: "method".into(),
                detail: format!("unknown method {other:?}"),
            }),
        }
    }
}

/// Computes `U` by the requested path. The `lincomb` path is only defined
/// when `r >= deg h - i`; otherwise this returns an error.
pub fn veronese_numerator_by(h: &Polynomial, p: VeroneseParams, method: Method) -> Result<Polynomial> {
    match method {
        Method::Hecke => Ok(veronese_numerator(h, p)),
        Method::Linear => Ok(veronese_numerator_linear(h, p)),
        Method::Lincomb => veronese_numerator_lincomb(h, p).ok_or_else(|| {
            Error::InvalidParameter(format!(
                "lincomb needs r >= deg h - i, got r = {}, deg h = {}, i = {}",
                p.r,
                h.degree().unwrap_or(0),
                p.i
            ))
        }),
    }
}

/// Results of every applicable path.
#[derive(Clone, Debug)]
pub struct PathAgreement {
    pub hecke: Polynomial,
    pub linear: Polynomial,
    pub lincomb: Option<Polynomial>,
}

impl PathAgreement {
    pub fn agree(&self) -> bool {
        self.hecke == self.linear && self.lincomb.as_ref().is_none_or(|l| *l == self.hecke)
    }
}

pub fn veronese_all_paths(h: &Polynomial, p: VeroneseParams) -> PathAgreement {
    PathAgreement {
        hecke: veronese_numerator(h, p),
        linear: veronese_numerator_linear(h, p),
        lincomb: veronese_numerator_lincomb(h, p),
    }
}
