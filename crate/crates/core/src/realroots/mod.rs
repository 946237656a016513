//! Exact real-root certification: squarefree decomposition, Sturm counts,
//! root isolation by bisection, real-rootedness classification and
//! interlacing of real-rooted polynomials.

mod classify;
mod interlace;
mod isolate;
mod rational;
mod squarefree;
mod sturm;

pub use classify::{classify_real_rooted, RootClassification, SignSummary, Verdict};
pub use interlace::{interlaces, mutual_interlacing, InterlacingVerdict};
pub use isolate::{
    default_eps, isolate_real_roots, max_abs_distance, simplest_rational, RootInterval,
    RootIsolation,
};
pub use rational::{rational_root_test, RationalRootCertificate};
pub use squarefree::{squarefree_decompose, squarefree_part, SquarefreeDecomposition, SquarefreeFactor};
pub use sturm::{cauchy_bound, count_real_roots, Bound, SturmSequence};
