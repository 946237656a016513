use std::fmt;

use num_traits::Zero;
use serde::Serialize;

use crate::poly::{Polynomial, Rational};
use crate::realroots::squarefree::squarefree_decompose;
use crate::realroots::sturm::{Bound, SturmSequence};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    ZeroPolynomial,
    Constant,
    RealRootedDistinct,
    RealRootedRepeated,
    NotRealRooted,
}

/// Location of the real roots relative to zero.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum SignSummary {
    /// Every real root is `< 0`.
    AllNegative,
    /// Every real root is `<= 0` and `0` is one of them.
    AllNonpositiveWithZero,
    /// Some real root is `> 0`.
    HasNonnegativeRoot,
    /// No real roots at all.
    Vacuous,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct RootClassification {
    pub verdict: Verdict,
    pub sign_summary: SignSummary,
}

impl RootClassification {
    /// Real-rooted in the sense used by the theorem suites: every complex root
    /// is real. Constants qualify vacuously.
    pub fn is_real_rooted(&self) -> bool {
        matches!(
            self.verdict,
            Verdict::Constant | Verdict::RealRootedDistinct | Verdict::RealRootedRepeated
        )
    }

    /// Real-rooted without repeated roots (constants included).
    pub fn has_distinct_real_roots(&self) -> bool {
        matches!(self.verdict, Verdict::Constant | Verdict::RealRootedDistinct)
    }

    /// All real roots `< 0` (vacuously true without roots).
    pub fn roots_negative(&self) -> bool {
        matches!(self.sign_summary, SignSummary::AllNegative | SignSummary::Vacuous)
    }

    /// All real roots `<= 0`.
    pub fn roots_nonpositive(&self) -> bool {
        self.sign_summary != SignSummary::HasNonnegativeRoot
    }
}

impl Verdict {
    pub fn name(self) -> &'static str {
        match self {
            Verdict::ZeroPolynomial => "zero_polynomial",
            Verdict::Constant => "constant",
            Verdict::RealRootedDistinct => "real_rooted_distinct",
            Verdict::RealRootedRepeated => "real_rooted_repeated",
            Verdict::NotRealRooted => "not_real_rooted",
        }
    }
}

impl SignSummary {
    pub fn name(self) -> &'static str {
        match self {
            SignSummary::AllNegative => "all_negative",
            SignSummary::AllNonpositiveWithZero => "all_nonpositive_with_zero",
            SignSummary::HasNonnegativeRoot => "has_nonnegative_root",
            SignSummary::Vacuous => "vacuous",
        }
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl fmt::Display for SignSummary {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Decides real-rootedness and root signs from Sturm counts on the
/// squarefree factors; no interval refinement is needed.
pub fn classify_real_rooted(f: &Polynomial) -> RootClassification {
    let degree = match f.degree() {
        None => {
            return RootClassification {
                verdict: Verdict::ZeroPolynomial,
                sign_summary: SignSummary::Vacuous,
            }
        }
        Some(0) => {
            return RootClassification {
                verdict: Verdict::Constant,
                sign_summary: SignSummary::Vacuous,
            }
        }
        Some(d) => d,
    };
    let decomposition = squarefree_decompose(f).expect("nonzero");
    let zero = Bound::Finite(Rational::zero());
    let mut real_with_mult = 0;
    let mut repeated = false;
    let mut positive = 0;
    let mut total_distinct = 0;
    for sf in &decomposition.factors {
        let seq = SturmSequence::new(&sf.factor).expect("nonzero factor");
        let n = seq.count(&Bound::NegInf, &Bound::PosInf);
        real_with_mult += n * sf.multiplicity;
        total_distinct += n;
        if n > 0 && sf.multiplicity > 1 {
            repeated = true;
        }
        positive += seq.count(&zero, &Bound::PosInf);
    }
    let verdict = if real_with_mult == degree {
        if repeated {
            Verdict::RealRootedRepeated
        } else {
            Verdict::RealRootedDistinct
        }
    } else {
        Verdict::NotRealRooted
    };
    let sign_summary = if total_distinct == 0 {
        SignSummary::Vacuous
    } else if positive > 0 {
        SignSummary::HasNonnegativeRoot
    } else if f.coeff(0).is_zero() {
        SignSummary::AllNonpositiveWithZero
    } else {
        SignSummary::AllNegative
    };
    RootClassification {
        verdict,
        sign_summary,
    }
}
