//! Exact Hurwitz stability tests for real polynomials.
//!
//! Three independent exact methods decide whether every root of
//! `f(x) = a_0 + a_1 x + ... + a_n x^n` lies in the open left half-plane:
//!
//! * [`routh`]: the reduction `f -> f~` with `c = p(0)/q(0)`, where
//!   `f(x) = p(x^2) + x q(x^2)`;
//! * [`hurwitz`]: positivity of the leading principal minors of the Hurwitz
//!   matrix, its factorization `H(f) = J(c_1) ... J(c_n) H(b)`, and a
//!   brute-force total nonnegativity scan;
//! * [`hermite_biehler`]: real, simple, negative, interlacing zeros of `p`
//!   and `q`, decided with exact Sturm sequences.
//!
//! A floating-point [`oracle`] and the seeded [`generate`] module supply
//! ground truth and inputs for cross-validation.
//!
//! ```
//! use hurwitzkit::{is_stable_routh, Polynomial};
//!
//! let f = Polynomial::from_ints(&[6, 11, 6, 1]).unwrap(); // (x+1)(x+2)(x+3)
//! assert!(is_stable_routh(&f).unwrap().is_stable());
//! ```

pub mod analysis;
pub mod error;
pub mod generate;
pub mod hermite_biehler;
pub mod hurwitz;
pub mod matrix;
pub mod oracle;
pub mod poly;
pub mod report;
pub mod routh;
pub mod sturm;

pub use analysis::{analyze, Analysis};
pub use error::{Error, Result};
pub use generate::{corpus, expand_roots, gen_random, gen_stable, Generated, Kind};
pub use hermite_biehler::{
    combination, combination_real_rooted, condition_b, interlacing_check, phase_sign, InterlacingReport, PhaseSign,
    Precondition,
};
pub use hurwitz::{
    all_minors_nonnegative, factorization_factors, factorization_product, hurwitz_truncation, j_truncation,
    leading_principal_minors, minor_criterion, verify_full_factorization, verify_step_factorization, MinorSequence,
    MinorViolation, TnnOutcome,
};
pub use matrix::RationalMatrix;
pub use oracle::{all_roots, oracle_stability, OracleClass, OracleVerdict, RootSet, DEFAULT_TOLERANCE};
pub use poly::{EvenOddPair, Polynomial, Scalar};
pub use report::{Method, Note, StabilityReport, Verdict, Witness};
pub use routh::{is_stable_routh, routh_chain, routh_step, ChainFailure, Failure, RouthChain};
pub use sturm::{count_real_roots, isolate_real_roots, sturm_sequence, RootInterval, RootIsolation};
