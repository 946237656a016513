use std::fmt;

use num_traits::One;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::poly::{Polynomial, Rational};
use crate::realroots::classify::classify_real_rooted;
use crate::realroots::isolate::{isolate_squarefree, separate, Cell};
use crate::realroots::squarefree::{squarefree_decompose, squarefree_part};
use crate::realroots::sturm::SturmSequence;

/// Strongest interlacing relation between two polynomials.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum InterlacingVerdict {
    None,
    WeakOnly,
    Strict,
}

impl InterlacingVerdict {
    pub fn name(self) -> &'static str {
        match self {
            InterlacingVerdict::None => "none",
            InterlacingVerdict::WeakOnly => "weak_only",
            InterlacingVerdict::Strict => "strict",
        }
    }

    /// At least weak interlacing.
    pub fn holds(self) -> bool {
        self != InterlacingVerdict::None
    }
}

impl fmt::Display for InterlacingVerdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Multiplicity of the root inside `cell` as a root of the factored
/// polynomial described by `(sturm sequence, multiplicity)` pairs.
fn multiplicity_in(cell: &Cell, factors: &[(SturmSequence, usize)]) -> usize {
    factors
        .iter()
        .filter(|(seq, _)| {
            if cell.is_exact() {
                seq.is_root(&cell.lo)
            } else {
                seq.count_open(&cell.lo, &cell.hi) > 0
            }
        })
        .map(|(_, m)| *m)
        .sum()
}

fn factor_sequences(f: &Polynomial) -> Result<Vec<(SturmSequence, usize)>> {
    squarefree_decompose(f)?
        .factors
        .iter()
        .map(|sf| Ok((SturmSequence::new(&sf.factor)?, sf.multiplicity)))
        .collect()
}

/// Decides whether `g` interlaces `f` (`g ⪯ f`), and whether strictly.
///
/// With roots `t_1 >= ... >= t_l` of `f` and `s_1 >= ... >= s_m` of `g`
/// (listed with multiplicity) this requires `l - m ∈ {0, 1}` and
/// `t_1 >= s_1 >= t_2 >= s_2 >= ...`; strict when every inequality is strict.
/// A constant `g` interlaces every `f` of degree at most one, strictly.
/// Roots are compared by their rank among the distinct real roots of
/// `f * g`, so equal roots are detected exactly and no floating point is used.
pub fn interlaces(g: &Polynomial, f: &Polynomial) -> Result<InterlacingVerdict> {
    let (Some(df), Some(dg)) = (f.degree(), g.degree()) else {
        return Err(Error::ZeroPolynomial);
    };
    if df < dg || df - dg > 1 {
        return Ok(InterlacingVerdict::None);
    }
    if !classify_real_rooted(f).is_real_rooted() || !classify_real_rooted(g).is_real_rooted() {
        return Ok(InterlacingVerdict::None);
    }
    if dg == 0 {
        return Ok(InterlacingVerdict::Strict);
    }

    let union = squarefree_part(&(f * g))?;
    let union_seq = SturmSequence::new(&union)?;
    let mut cells = isolate_squarefree(&union_seq, 0, &Rational::one(), false);
    separate(&mut cells, std::slice::from_ref(&union_seq));

    let f_factors = factor_sequences(f)?;
    let g_factors = factor_sequences(g)?;
    // descending ranks, repeated by multiplicity
    let mut f_roots = Vec::with_capacity(df);
    let mut g_roots = Vec::with_capacity(dg);
    for (rank, cell) in cells.iter().enumerate().rev() {
        f_roots.extend(std::iter::repeat_n(rank, multiplicity_in(cell, &f_factors)));
        g_roots.extend(std::iter::repeat_n(rank, multiplicity_in(cell, &g_factors)));
    }
    if f_roots.len() != df || g_roots.len() != dg {
        return Err(Error::Invariant(format!(
            "root bookkeeping mismatch: found {} and {} roots for degrees {df} and {dg}",
            f_roots.len(),
            g_roots.len()
        )));
    }

    let merged: Vec<usize> = (0..df + dg)
        .map(|k| if k % 2 == 0 { f_roots[k / 2] } else { g_roots[k / 2] })
        .collect();
    if merged.windows(2).all(|w| w[0] > w[1]) {
        Ok(InterlacingVerdict::Strict)
    } else if merged.windows(2).all(|w| w[0] >= w[1]) {
        Ok(InterlacingVerdict::WeakOnly)
    } else {
        Ok(InterlacingVerdict::None)
    }
}

/// The strongest relation under which every earlier entry interlaces every
/// later one: `fs[i] ⪯ fs[j]` for all `i < j`.
pub fn mutual_interlacing(fs: &[Polynomial]) -> Result<InterlacingVerdict> {
    if fs.iter().any(Polynomial::is_zero) {
        return Err(Error::ZeroPolynomial);
    }
    let mut weakest = InterlacingVerdict::Strict;
    for (i, g) in fs.iter().enumerate() {
        for f in &fs[i + 1..] {
            weakest = weakest.min(interlaces(g, f)?);
            if weakest == InterlacingVerdict::None {
                return Ok(weakest);
            }
        }
    }
    Ok(weakest)
}
