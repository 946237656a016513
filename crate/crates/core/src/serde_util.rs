//! Serialization helpers: polynomials and rationals are emitted in the
//! shared text format rather than as structured numbers.

use serde::Serializer;

use crate::poly::{Polynomial, Rational};

pub fn poly<S: Serializer>(p: &Polynomial, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str(&p.to_string())
}

pub fn rational<S: Serializer>(q: &Rational, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str(&q.to_string())
}

pub fn rationals<S: Serializer>(qs: &[Rational], s: S) -> Result<S::Ok, S::Error> {
    s.collect_seq(qs.iter().map(|q| q.to_string()))
}

pub fn opt_rationals<S: Serializer>(qs: &Option<Vec<Rational>>, s: S) -> Result<S::Ok, S::Error> {
    match qs {
        Some(qs) => s.collect_seq(qs.iter().map(|q| q.to_string())),
        None => s.serialize_none(),
    }
}

pub fn bigints<S: Serializer>(xs: &[num_bigint::BigInt], s: S) -> Result<S::Ok, S::Error> {
    s.collect_seq(xs.iter().map(|x| x.to_string()))
}

pub fn opt_rational<S: Serializer>(q: &Option<Rational>, s: S) -> Result<S::Ok, S::Error> {
    match q {
        Some(q) => s.serialize_some(&q.to_string()),
        None => s.serialize_none(),
    }
}
