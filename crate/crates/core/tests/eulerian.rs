mod common;

use common::*;
use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use veronese::eulerian::{a_limit_deviation, a_limit_deviation_shifted, eulerian, eulerian_limit, veronese_limit_deviation};
use veronese::poly::binomial;
use veronese::realroots::{classify_real_rooted, Verdict};
use veronese::veronese::a_poly;
use veronese::{Polynomial, Rational};

/// Coefficient `m` of the numerator of `sum n^k t^n` by inclusion-exclusion.
fn eulerian_coefficient(k: u32, m: usize) -> BigInt {
    (0..=m)
        .map(|j| {
            let term = binomial(u64::from(k) + 1, j as u64) * BigInt::from(m - j).pow(k);
            if j % 2 == 0 { term } else { -term }
        })
        .sum()
}

#[test]
fn eulerian_matches_inclusion_exclusion() {
    for k in 0..=8u32 {
        let a = eulerian(k as usize);
        for m in 0..=k as usize + 1 {
            assert_eq!(a.coeff(m), Rational::from_integer(eulerian_coefficient(k, m)), "k={k} m={m}");
        }
    }
    assert_eq!(eulerian(3), p("0,1,4,1"));
}

#[test]
fn eulerian_value_at_one_and_palindromy() {
    for k in 0..=8 {
        let a = eulerian(k);
        assert_eq!(a.eval(&q(1)), Rational::from_integer(factorial(k as u64)));
        if k >= 1 {
            // t^(k+1) A_k(1/t) = A_k(t)
            for m in 0..=k + 1 {
                assert_eq!(a.coeff(m), a.coeff(k + 1 - m), "k={k}");
            }
        }
    }
}

#[test]
fn eulerian_is_real_rooted() {
    for k in 1..=8 {
        let c = classify_real_rooted(&eulerian(k));
        if k == 1 {
            assert_eq!(c.verdict, Verdict::RealRootedDistinct);
        }
        assert!(c.has_distinct_real_roots() && c.roots_nonpositive(), "k={k}");
    }
}

#[test]
fn quadratic_deviation_closed_form() {
    // a_2^<r,0> = 1 + (r - 1) t, scaled by 1/r against A_1 = t
    for r in 2..=30 {
        let rep = a_limit_deviation(2, 0, r).unwrap();
        assert_eq!(a_poly(2, r, 0).unwrap(), Polynomial::from_ints(&[1, r as i64 - 1]));
        assert_eq!(rep.max_abs_coeff_deviation, qq(1, r as i64));
        assert_eq!(rep.sum_abs_coeff_deviation, qq(2, r as i64));
    }
}

#[test]
fn deviation_decreases_with_r() {
    for d in 1..=4 {
        for i in 0..=2 {
            let devs: Vec<Rational> = [10, 20, 40, 80, 160]
                .iter()
                .map(|&r| a_limit_deviation(d, i, r).unwrap().max_abs_coeff_deviation)
                .collect();
            for w in devs.windows(2) {
                assert!(w[1] <= w[0], "d={d} i={i} {devs:?}");
            }
            if d == 1 {
                assert!(devs.iter().all(Zero::is_zero));
            }
        }
    }
    assert!(a_limit_deviation(3, 0, 200).unwrap().max_abs_coeff_deviation < qq(1, 50));
}

#[test]
fn cubic_family_roots_approach_eulerian_roots() {
    let rep = a_limit_deviation(3, 0, 200).unwrap();
    let dist = rep.root_distances.expect("both sides real-rooted of equal degree");
    assert_eq!(dist.len(), 2);
    for x in &dist {
        assert!(x < &qq(1, 20), "{x}");
    }
    assert_eq!(eulerian_limit(3), p("0,1/2,1/2"));
}

#[test]
fn shifted_family_limit() {
    for d in 2..=4 {
        for i in 1..=2 {
            let coarse = a_limit_deviation_shifted(d, i, 20).unwrap().max_abs_coeff_deviation;
            let fine = a_limit_deviation_shifted(d, i, 160).unwrap().max_abs_coeff_deviation;
            assert!(fine <= coarse && fine < qq(1, 10), "d={d} i={i}");
        }
    }
    assert!(a_limit_deviation_shifted(2, 0, 10).is_err());
}

#[test]
fn transform_limit_scales_with_h_of_one() {
    let h = p("1,3,2");
    for d in 2..=4 {
        let dev = veronese_limit_deviation(&h, d, 0, 200).unwrap();
        assert!(dev.max_abs_coeff_deviation.abs() < qq(1, 10), "d={d}");
    }
    assert!(veronese_limit_deviation(&Polynomial::zero(), 2, 0, 5).is_err());
}
