#![allow(dead_code)]

use num_bigint::BigInt;
use num_traits::{One, Zero};
use proptest::prelude::*;
use veronese::{Polynomial, Rational};

pub fn q(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn qq(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

pub fn p(s: &str) -> Polynomial {
    s.parse().unwrap()
}

/// Coefficients `0..n` of `h / (1 - t)^d`, by `d` rounds of prefix sums
/// (each round divides by `1 - t`).
pub fn series_by_division(h: &Polynomial, d: usize, n: usize) -> Vec<Rational> {
    let mut a: Vec<Rational> = (0..n).map(|j| h.coeff(j)).collect();
    for _ in 0..d {
        let mut acc = Rational::zero();
        for x in a.iter_mut() {
            acc += &*x;
            *x = acc.clone();
        }
    }
    a
}

/// Numerator of `sum b_n t^n` over `(1 - t)^d` given enough terms: multiplies
/// by `(1 - t)^d` and checks that coefficients `len..terms` vanish.
pub fn numerator_by_multiplication(b: &[Rational], d: usize, len: usize) -> Polynomial {
    let mut c = b.to_vec();
    for _ in 0..d {
        for j in (1..c.len()).rev() {
            let prev = c[j - 1].clone();
            c[j] -= prev;
        }
    }
    for (j, x) in c.iter().enumerate().skip(len) {
        assert!(x.is_zero(), "coefficient {j} of the numerator is {x}, expected 0");
    }
    c.truncate(len);
    Polynomial::new(c)
}

/// `U_{r,i}^d h` from its defining property: take the subsequence
/// `a_{rn+i}` of `h / (1 - t)^d` and multiply back by `(1 - t)^d`.
pub fn transform_by_subsequence(h: &Polynomial, d: usize, r: usize, i: usize) -> Polynomial {
    let s = h.degree().unwrap_or(0);
    let len = s + d + 1;
    let terms = len + d + 4;
    let a = series_by_division(h, d, r * terms + i + 1);
    let b: Vec<Rational> = (0..terms).map(|n| a[r * n + i].clone()).collect();
    numerator_by_multiplication(&b, d, len)
}

pub fn from_roots(roots: &[Rational], lead: &Rational) -> Polynomial {
    Polynomial::from_roots(roots).scale(lead)
}

/// A point strictly inside `(lo, hi)`, at fraction `w / 16` of the way.
pub fn strictly_between(lo: &Rational, hi: &Rational, w: u8) -> Rational {
    let w = qq(i64::from(w.clamp(1, 15)), 16);
    lo + (hi - lo) * w
}

pub fn nonneg_poly(max_deg: usize, max_coeff: i64) -> impl Strategy<Value = Polynomial> {
    proptest::collection::vec(0..=max_coeff, 1..=max_deg + 1).prop_filter_map("nonzero", move |mut c| {
        let last = c.len() - 1;
        if c[last] == 0 {
            c[last] = 1;
        }
        Some(Polynomial::from_ints(&c))
    })
}

pub fn rational_poly(max_deg: usize) -> impl Strategy<Value = Polynomial> {
    proptest::collection::vec((-20i64..=20, 1i64..=6), 0..=max_deg + 1)
        .prop_map(|c| Polynomial::new(c.into_iter().map(|(n, d)| qq(n, d)).collect()))
}

/// Distinct negative rationals in descending order, spaced at least 1 apart.
pub fn descending_negative_roots(count: usize) -> impl Strategy<Value = Vec<Rational>> {
    proptest::collection::vec((1i64..=4, 0i64..=3), count).prop_map(|steps| {
        let mut x = q(0);
        steps
            .into_iter()
            .map(|(gap, frac)| {
                x = &x - q(gap) - qq(frac, 4);
                x.clone()
            })
            .collect()
    })
}

/// Roots for a polynomial strictly interlaced by one with roots `u`
/// (`u` descending, negative): one root in `(u_1, 0)`, one in each gap and,
/// when `extra`, one below `u_m`.
pub fn strict_upper_interlacer(u: &[Rational], weights: &[u8], extra: bool) -> Vec<Rational> {
    let mut out = Vec::new();
    let mut above = q(0);
    for (j, uj) in u.iter().enumerate() {
        out.push(strictly_between(uj, &above, weights[j % weights.len()]));
        above = uj.clone();
    }
    if extra {
        let bottom = u.last().cloned().unwrap_or_else(|| q(0));
        out.push(&bottom - q(1) - qq(i64::from(weights[0] % 4), 4));
    }
    out
}

/// Like [`strict_upper_interlacer`] but some roots sit on the endpoints.
pub fn weak_upper_interlacer(u: &[Rational], weights: &[u8], extra: bool, touch: &[bool]) -> Vec<Rational> {
    let mut roots = strict_upper_interlacer(u, weights, extra);
    for (j, uj) in u.iter().enumerate() {
        if touch[j % touch.len()] {
            roots[j] = uj.clone();
        }
    }
    roots
}

/// Roots for a polynomial that strictly interlaces one with roots `t`
/// (`t` descending, negative, nonempty): one root in each gap and, when
/// `same_degree`, one below `t_l`.
pub fn strict_lower_interlacer(t: &[Rational], weights: &[u8], same_degree: bool) -> Vec<Rational> {
    let mut out = Vec::new();
    for j in 1..t.len() {
        out.push(strictly_between(&t[j], &t[j - 1], weights[j % weights.len()]));
    }
    if same_degree {
        let bottom = t.last().expect("nonempty");
        out.push(bottom - qq(1 + i64::from(weights[0] % 3), 2));
    }
    out
}

/// A strictly mutually interlacing family `f_{r-1} ≺ ... ≺ f_0` with
/// negative roots, returned as `[f_0, ..., f_{r-1}]`. Every member has `m`
/// roots; the first `long` members get one more root below all others.
pub fn mutually_interlacing_family(
    m: usize,
    r: usize,
    long: usize,
    gaps: &[u8],
    leads: &[u8],
) -> Vec<Polynomial> {
    let total = m * r + long;
    let mut sorted = Vec::with_capacity(total);
    let mut x = q(0);
    for k in 0..total {
        x = &x - qq(1 + i64::from(gaps[k % gaps.len()] % 5), 2);
        sorted.push(x.clone());
    }
    (0..r)
        .map(|k| {
            let mut roots: Vec<Rational> = (0..m).map(|j| sorted[j * r + k].clone()).collect();
            if k < long {
                roots.push(sorted[m * r + k].clone());
            }
            let lead = q(1 + i64::from(leads[k % leads.len()] % 7));
            from_roots(&roots, &lead)
        })
        .collect()
}

pub fn factorial(n: u64) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, k| acc * BigInt::from(k))
}

/// Clauses of the real-rootedness theorem that fail for `U_{r,i}^d h`, where
/// `h != 0` has nonnegative coefficients and `s = deg h`. Empty when the
/// transform behaves as claimed or `r < s - i`.
pub fn theorem_violations(h: &Polynomial, d: usize, r: usize, i: usize) -> Vec<String> {
    use veronese::realroots::classify_real_rooted;
    use veronese::veronese::{veronese_numerator, VeroneseParams};

    let s = h.degree().expect("nonzero");
    if r + i < s {
        return Vec::new();
    }
    let u = veronese_numerator(h, VeroneseParams::new(d, r, i).unwrap());
    let c = classify_real_rooted(&u);
    let mut out = Vec::new();
    let tag = |clause: &str| format!("{clause}: h={h} d={d} r={r} i={i} U={u} {:?} {:?}", c.verdict, c.sign_summary);
    if !(c.is_real_rooted() && c.roots_nonpositive()) {
        out.push(tag("nonpositive real roots"));
    }
    let some_low = (0..=i.min(s)).any(|j| h.coeff(j) > Rational::zero());
    if c.is_real_rooted() && c.roots_negative() != some_low {
        out.push(tag("negativity"));
    }
    let intermediate = (1..s).any(|j| h.coeff(j) > Rational::zero());
    if (r > s || (r == s && (s == 1 || intermediate))) && !c.has_distinct_real_roots() {
        out.push(tag("distinct roots"));
    }
    out
}

pub fn fixture(name: &str) -> veronese::ehrhart::PolytopeFile {
    let path = std::path::Path::new(env!("CARGO_MANIFEST_DIR")).join("fixtures").join(name);
    veronese::ehrhart::PolytopeFile::load(&path).unwrap()
}

pub const LATTICE_FIXTURES: [&str; 8] = [
    "segment.json",
    "unit_square.toml",
    "triangle.json",
    "triangle3.json",
    "tetrahedron.json",
    "cube.json",
    "octahedron.json",
    "reeve3.json",
];

pub const RATIONAL_FIXTURES: [&str; 4] =
    ["half_segment.json", "half_segment_plane.toml", "half_triangle.json", "third_triangle.json"];

pub fn lattice_fixture(name: &str) -> veronese::ehrhart::LatticePolytope {
    veronese::ehrhart::LatticePolytope::from_polytope(fixture(name).polytope).unwrap()
}

pub fn rational_fixture(name: &str) -> veronese::ehrhart::RationalPolytope {
    veronese::ehrhart::RationalPolytope::from_polytope(fixture(name).polytope)
}
