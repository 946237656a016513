mod common;

use common::*;
use proptest::prelude::*;
use veronese::optimality::{a_has_real_root, double_root_witness, nonreal_witness, WitnessOutcome};
use veronese::realroots::{classify_real_rooted, Verdict};
use veronese::veronese::{veronese_numerator, VeroneseParams};

#[test]
fn nonreal_witness_examples() {
    let rep = nonreal_witness(4, 2, 0).unwrap().report().cloned().unwrap();
    assert_eq!((rep.r, rep.scale.clone()), (3, Some(q(1))));
    assert_eq!(rep.witness_h, p("1,0,0,0,1"));
    assert_eq!(rep.transformed, p("1,2,3"));
    assert_eq!(rep.verdict.verdict, Verdict::NotRealRooted);
    let at_four = veronese_numerator(&rep.witness_h, VeroneseParams::new(2, 4, 0).unwrap());
    assert!(classify_real_rooted(&at_four).is_real_rooted());
    assert!(rep.verdict_next_r.unwrap().is_real_rooted());

    let rep = nonreal_witness(3, 1, 0).unwrap().report().cloned().unwrap();
    assert_eq!(rep.transformed, p("1,0,1"));

    let rep = nonreal_witness(5, 2, 1).unwrap().report().cloned().unwrap();
    assert_eq!(rep.r, 3);
    assert_eq!(rep.verdict.verdict, Verdict::NotRealRooted);
}

#[test]
fn nonreal_witnesses_are_consistent() {
    for s in 2..=7 {
        for i in 0..s {
            if s < 2 * i + 2 {
                assert!(nonreal_witness(s, 2, i).is_err());
                continue;
            }
            for d in 1..=4 {
                let rep = match nonreal_witness(s, d, i).unwrap() {
                    WitnessOutcome::Found(rep) => rep,
                    other => panic!("s={s} d={d} i={i}: {other:?}"),
                };
                assert_eq!(rep.r, s - i - 1);
                let redo = transform_by_subsequence(&rep.witness_h, d, rep.r, i);
                assert_eq!(redo, rep.transformed, "s={s} d={d} i={i}");
                assert_eq!(classify_real_rooted(&redo).verdict, Verdict::NotRealRooted);
            }
        }
    }
}

#[test]
fn double_root_witness_examples() {
    let rep = double_root_witness(2, 2, 0).unwrap().report().cloned().unwrap();
    assert_eq!((rep.alpha.clone(), rep.witness_h.clone()), (Some(q(-1)), p("1,0,1")));
    assert_eq!(rep.transformed, p("1,2,1"));

    let rep = double_root_witness(2, 3, 0).unwrap().report().cloned().unwrap();
    assert_eq!(rep.alpha, Some(qq(-1, 3)));
    assert_eq!(rep.witness_h, p("1,0,3"));
    assert_eq!(rep.transformed, p("1,6,9"));
    assert_eq!(rep.verdict.verdict, Verdict::RealRootedRepeated);

    match double_root_witness(3, 3, 0).unwrap() {
        WitnessOutcome::NoRationalRoot { a_poly, certificate, .. } => {
            assert_eq!(a_poly, p("1,7,1"));
            assert!(certificate.roots.is_empty());
        }
        other => panic!("{other:?}"),
    }
    assert!(double_root_witness(1, 2, 0).is_err());
    assert!(double_root_witness(3, 2, 3).is_err());
}

#[test]
fn double_root_witnesses_have_a_repeated_factor() {
    for s in 2..=6 {
        for d in 2..=5 {
            for i in 0..s {
                if let WitnessOutcome::Found(rep) = double_root_witness(s, d, i).unwrap() {
                    let f = &rep.transformed;
                    let g = f.gcd(&f.derivative());
                    assert!(g.degree().unwrap_or(0) >= 1, "s={s} d={d} i={i}");
                    assert_eq!(rep.transformed, transform_by_subsequence(&rep.witness_h, d, s, i));
                    assert_eq!(rep.verdict.verdict, Verdict::RealRootedRepeated);
                }
            }
        }
    }
}

#[test]
fn boundary_family_has_real_roots() {
    for s in 2..=8 {
        for i in 0..s {
            for d in 3..=6 {
                assert!(a_has_real_root(d, s, i).unwrap(), "d={d} s={s} i={i}");
            }
            assert_eq!(a_has_real_root(2, s, i).unwrap(), i + 2 <= s, "s={s} i={i}");
        }
    }
}

proptest! {
    #[test]
    fn first_order_transform_is_linear(h in nonneg_poly(6, 9), i_seed in 0usize..16, extra in 0usize..4) {
        let s = h.degree().unwrap();
        prop_assume!(s >= 1);
        let i = i_seed % s;
        let r = (s - i).max(i + 1) + extra;
        let u = veronese_numerator(&h, VeroneseParams::new(1, r, i).unwrap());
        prop_assert!(u.degree().unwrap_or(0) <= 1);
        prop_assert!(classify_real_rooted(&u).is_real_rooted());
    }
}
