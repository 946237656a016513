mod common;

use common::*;
use proptest::prelude::*;
use veronese::poly::{binomial, format_rational, parse_rational};
use veronese::sections::{reconstruct, section, sections};
use veronese::{numerator_from_values, series_coeffs, Error, Polynomial, RationalGenSeries};

proptest! {
    #[test]
    fn text_format_round_trips(f in rational_poly(8)) {
        let text = f.to_string();
        prop_assert_eq!(text.parse::<Polynomial>().unwrap(), f);
    }

    #[test]
    fn rational_text_round_trips(n in -1000i64..1000, d in 1i64..50) {
        let x = qq(n, d);
        prop_assert_eq!(parse_rational(&format_rational(&x)).unwrap(), x);
    }

    #[test]
    fn series_matches_long_division(h in rational_poly(6), d in 0usize..6) {
        let series = RationalGenSeries::new(h.clone(), d);
        prop_assert_eq!(series_coeffs(&series, 14), series_by_division(&h, d, 15));
    }

    #[test]
    fn numerator_recovers_itself(h in rational_poly(5), d in 0usize..7, extra in 0usize..4) {
        prop_assume!(h.degree().unwrap_or(0) <= d);
        let values = series_by_division(&h, d, d + 1 + extra);
        prop_assert_eq!(numerator_from_values(&values, d).unwrap(), h);
    }

    #[test]
    fn sections_reconstruct(f in rational_poly(12), r in 1usize..6) {
        let parts = sections(&f, r).unwrap();
        prop_assert_eq!(parts.len(), r);
        prop_assert_eq!(reconstruct(&parts).unwrap(), f.clone());
        for (i, part) in parts.iter().enumerate() {
            for j in 0..=part.degree().unwrap_or(0) {
                prop_assert_eq!(part.coeff(j), f.coeff(r * j + i));
            }
        }
    }

    #[test]
    fn multiplication_is_evaluation_compatible(f in rational_poly(5), g in rational_poly(5), x in -6i64..6) {
        let x = q(x);
        prop_assert_eq!((&f * &g).eval(&x), f.eval(&x) * g.eval(&x));
        prop_assert_eq!((&f + &g).eval(&x), f.eval(&x) + g.eval(&x));
    }

    #[test]
    fn division_identity(f in rational_poly(7), g in rational_poly(4)) {
        prop_assume!(!g.is_zero());
        let (quot, rem) = f.div_rem(&g);
        prop_assert_eq!(&(&quot * &g) + &rem, f);
        prop_assert!(rem.degree().is_none_or(|dr| dr < g.degree().unwrap()));
    }
}

#[test]
fn binomial_values() {
    assert_eq!(binomial(5, 2), 10.into());
    assert_eq!(binomial(3, 5), 0.into());
    assert_eq!(binomial(30, 15), 155117520.into());
}

#[test]
fn series_examples() {
    let geometric = RationalGenSeries::new(Polynomial::one(), 1);
    assert_eq!(series_coeffs(&geometric, 4), vec![q(1); 5]);
    let naturals = RationalGenSeries::new(Polynomial::one(), 2);
    assert_eq!(series_coeffs(&naturals, 4), (1..=5).map(q).collect::<Vec<_>>());
    let squares = numerator_from_values(&[q(0), q(1), q(4), q(9), q(16)], 3).unwrap();
    assert_eq!(squares, p("0,1,1"));
}

#[test]
fn inconsistent_values_are_rejected() {
    let err = numerator_from_values(&[q(1), q(2), q(3), q(5)], 2).unwrap_err();
    assert_eq!(err, Error::InconsistentValues { index: 3 });
    assert!(matches!(numerator_from_values(&[q(1)], 2), Err(Error::LengthMismatch { .. })));
}

#[test]
fn section_examples() {
    assert_eq!(section(&p("1,2,3,4,5"), 2, 0).unwrap(), p("1,3,5"));
    assert_eq!(section(&p("1,2,3,4,5"), 2, 1).unwrap(), p("2,4"));
    assert_eq!(section(&p("1,2"), 5, 3).unwrap(), Polynomial::zero());
    assert!(section(&p("1"), 0, 0).is_err());
    assert!(section(&p("1"), 3, 3).is_err());
    assert_eq!(reconstruct(&[]), Err(Error::EmptyParts));
}

#[test]
fn parse_errors() {
    assert!("1,,2".parse::<Polynomial>().is_err());
    assert!("1/0".parse::<Polynomial>().is_err());
    assert!("x".parse::<Polynomial>().is_err());
    assert_eq!("0".parse::<Polynomial>().unwrap(), Polynomial::zero());
    assert_eq!(Polynomial::zero().to_string(), "0");
    assert_eq!("2/4,0".parse::<Polynomial>().unwrap().to_string(), "1/2");
}
