//! Constructive corona and ideal-membership machinery for the subalgebra
//! `H∞_I(D)` of bounded analytic functions on the unit disk, at rational
//! desk scale.
//!
//! The crate is organized around six pieces:
//!
//! * [`poly`] / [`rational`] — complex polynomials and pole-free rational
//!   functions on the closed disk, the concrete stand-ins for `H∞(D)`.
//! * [`ideal`] / [`tuple`] — finite-zero-set ideals `I(Z)`, function tuples,
//!   and the constant + ideal-part decomposition of subalgebra elements.
//! * [`kernel`] — the sparse kernel matrix `Q_A` (two nonzeros per column)
//!   with its defining operator identities, kernel property, and norm.
//! * [`bezout`] — extended Euclidean / Bezout solving over the polynomial
//!   ring: the constructive source of corona and ideal solutions.
//! * [`transfer`] — conversion of a plain corona/ideal solution into a
//!   subalgebra solution via the Q-matrix correction term, with residual,
//!   membership, and norm-transfer verification.
//! * [`norm`] / [`scenario`] — two-sided sup-norm estimation on the disk,
//!   bound functions, and the scenario runner / corpus generator behind the
//!   `corona-lab` CLI.

pub mod bezout;
pub mod error;
pub mod ideal;
pub mod kernel;
pub mod norm;
pub mod poly;
pub mod rational;
pub mod scenario;
pub mod tol;
pub mod transfer;
pub mod tuple;

pub use bezout::{
    bezout_tuple, corona_bezout, extended_euclid, ideal_solve, minimal_pointwise_solution,
    BezoutCertificate,
};
pub use error::CoronaError;
pub use ideal::{decompose_fn, ideal_from_zeros, SubalgebraFn, ZeroIdeal};
pub use kernel::{
    build_q, build_q_truncated, q_identity_pair, q_identity_self, q_kernel_check, q_norm,
    singular_values, KernelMatrix,
};
pub use norm::{
    check_treil_hypothesis, check_wolff_hypothesis, inf_gramian, psi_integral_check, sup_norm,
    sup_norm_tuple, treil_psi, uchiyama_bound, DiskGrid, HypothesisWitness, NormInterval,
    PsiIntegralReport,
};
pub use poly::Poly;
pub use rational::RationalFn;
pub use scenario::{
    gen_corpus, run_scenario, run_scenario_file, write_corpus, CheckRecord, GenKind, GenParams,
    PsiSpec, Scenario, ScenarioKind, VerificationReport,
};
pub use transfer::{
    eq4_residual, lemma22_check, transfer_corona, transfer_ideal, wolff_pipeline, Lemma22Report,
    TransferResult,
};
pub use tuple::{decompose_tuple, FnTuple, SubalgebraTuple, TupleEval};

pub use num_complex::Complex64;
