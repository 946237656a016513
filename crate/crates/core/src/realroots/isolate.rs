use num_bigint::BigInt;
use num_traits::{One, Signed};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::poly::{Polynomial, Rational};
use crate::realroots::squarefree::squarefree_decompose;
use crate::realroots::sturm::{cauchy_bound, SturmSequence};

/// Default width of reported isolating intervals, `2^-20`.
pub fn default_eps() -> Rational {
    Rational::new(BigInt::one(), BigInt::one() << 20)
}

/// A closed interval holding exactly one distinct real root. `lo == hi`
/// means the root is the rational `lo` itself.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RootInterval {
    #[serde(serialize_with = "crate::serde_util::rational")]
    pub lo: Rational,
    #[serde(serialize_with = "crate::serde_util::rational")]
    pub hi: Rational,
    pub multiplicity: usize,
}

impl RootInterval {
    pub fn is_exact(&self) -> bool {
        self.lo == self.hi
    }

    pub fn width(&self) -> Rational {
        &self.hi - &self.lo
    }

    pub fn contains(&self, x: &Rational) -> bool {
        &self.lo <= x && x <= &self.hi
    }
}

/// Disjoint isolating intervals sorted ascending.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RootIsolation {
    pub intervals: Vec<RootInterval>,
}

impl RootIsolation {
    pub fn root_count_with_multiplicity(&self) -> usize {
        self.intervals.iter().map(|iv| iv.multiplicity).sum()
    }

    pub fn distinct_root_count(&self) -> usize {
        self.intervals.len()
    }

    /// Intervals repeated by multiplicity, ascending.
    pub fn expanded(&self) -> Vec<&RootInterval> {
        self.intervals
            .iter()
            .flat_map(|iv| std::iter::repeat_n(iv, iv.multiplicity))
            .collect()
    }
}

/// Working interval: exact root, or open interval `(lo, hi)` with exactly one
/// root of the owner polynomial strictly inside.
#[derive(Clone, Debug)]
pub(crate) struct Cell {
    pub lo: Rational,
    pub hi: Rational,
    pub owner: usize,
}

impl Cell {
    fn exact(x: Rational, owner: usize) -> Self {
        Cell {
            lo: x.clone(),
            hi: x,
            owner,
        }
    }

    pub fn is_exact(&self) -> bool {
        self.lo == self.hi
    }
}

fn midpoint(a: &Rational, b: &Rational) -> Rational {
    (a + b) / Rational::from_integer(BigInt::from(2))
}

/// Simplest rational (smallest denominator) in the closed interval `[a, b]`.
pub fn simplest_rational(a: &Rational, b: &Rational) -> Rational {
    debug_assert!(a <= b);
    let fl = a.floor();
    if &fl == a {
        return fl;
    }
    if &(&fl + Rational::one()) <= b {
        return fl + Rational::one();
    }
    // a, b in (fl, fl + 1)
    let lo = (b - &fl).recip();
    let hi = (a - &fl).recip();
    fl + simplest_rational(&lo, &hi).recip()
}

/// Halve an open isolating cell, keeping the root. Returns an exact cell if
/// the midpoint is the root.
fn bisect_once(seq: &SturmSequence, cell: &Cell) -> Cell {
    let mid = midpoint(&cell.lo, &cell.hi);
    if seq.is_root(&mid) {
        return Cell::exact(mid, cell.owner);
    }
    if seq.count_open(&cell.lo, &mid) == 1 {
        Cell {
            lo: cell.lo.clone(),
            hi: mid,
            owner: cell.owner,
        }
    } else {
        Cell {
            lo: mid,
            hi: cell.hi.clone(),
            owner: cell.owner,
        }
    }
}

/// Narrow a single-root cell to width at most `eps`. With `detect_rational`,
/// the cell is further narrowed below `1 / lc^2` (lc the leading coefficient of
/// the primitive integer form) where at most one fraction with denominator
/// `<= |lc|` fits, and the simplest rational in it is tested exactly.
fn refine(seq: &SturmSequence, mut cell: Cell, eps: &Rational, detect_rational: bool) -> Cell {
    let lc = seq.subject().last().expect("nonzero").abs();
    let separation = Rational::new(BigInt::one(), &lc * &lc);
    loop {
        if cell.is_exact() {
            return cell;
        }
        let w = &cell.hi - &cell.lo;
        let narrow = &w <= eps;
        if narrow && !detect_rational {
            return cell;
        }
        if narrow && w < separation {
            let cand = simplest_rational(&cell.lo, &cell.hi);
            if cand > cell.lo && cand < cell.hi && seq.is_root(&cand) {
                return Cell::exact(cand, cell.owner);
            }
            return cell;
        }
        cell = bisect_once(seq, &cell);
    }
}

/// Isolate the distinct real roots of a squarefree polynomial.
pub(crate) fn isolate_squarefree(
    seq: &SturmSequence,
    owner: usize,
    eps: &Rational,
    detect_rational: bool,
) -> Vec<Cell> {
    let b = cauchy_bound(seq.subject());
    let mut out = Vec::new();
    let mut stack = vec![(-b.clone(), b)];
    while let Some((lo, hi)) = stack.pop() {
        let n = seq.count_open(&lo, &hi);
        match n {
            0 => {}
            1 => out.push(refine(
                seq,
                Cell { lo, hi, owner },
                eps,
                detect_rational,
            )),
            _ => {
                let mid = midpoint(&lo, &hi);
                if seq.is_root(&mid) {
                    out.push(Cell::exact(mid.clone(), owner));
                }
                stack.push((mid.clone(), hi));
                stack.push((lo, mid));
            }
        }
    }
    out
}

/// Sort cells and refine until their closed hulls are pairwise disjoint.
pub(crate) fn separate(cells: &mut [Cell], seqs: &[SturmSequence]) {
    loop {
        cells.sort_by(|a, b| a.lo.cmp(&b.lo).then(a.hi.cmp(&b.hi)));
        let mut touched = false;
        for k in 1..cells.len() {
            if cells[k - 1].hi >= cells[k].lo {
                touched = true;
                for j in [k - 1, k] {
                    if !cells[j].is_exact() {
                        cells[j] = bisect_once(&seqs[cells[j].owner], &cells[j]);
                    }
                }
            }
        }
        if !touched {
            return;
        }
    }
}

/// Isolate every real root of `f`, with multiplicities taken from the
/// squarefree decomposition. Non-degenerate intervals have width `<= eps`;
/// rational roots are reported exactly.
pub fn isolate_real_roots(f: &Polynomial, eps: &Rational) -> Result<RootIsolation> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if !eps.is_positive() {
        return Err(Error::InvalidParameter(format!("eps must be positive, got {eps}")));
    }
    let decomposition = squarefree_decompose(f)?;
    let seqs = decomposition
        .factors
        .iter()
        .map(|sf| SturmSequence::new(&sf.factor))
        .collect::<Result<Vec<_>>>()?;
    let mut cells: Vec<Cell> = seqs
        .iter()
        .enumerate()
        .flat_map(|(owner, seq)| isolate_squarefree(seq, owner, eps, true))
        .collect();
    separate(&mut cells, &seqs);
    let intervals = cells
        .into_iter()
        .map(|c| RootInterval {
            multiplicity: decomposition.factors[c.owner].multiplicity,
            lo: c.lo,
            hi: c.hi,
        })
        .collect();
    Ok(RootIsolation { intervals })
}

/// Upper bound on the distance between any point of `a` and any point of `b`.
pub fn max_abs_distance(a: &RootInterval, b: &RootInterval) -> Rational {
    let d1 = (&a.hi - &b.lo).abs();
    let d2 = (&b.hi - &a.lo).abs();
    d1.max(d2)
}
