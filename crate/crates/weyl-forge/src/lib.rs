//! Constructive realizations for eigenvalue interlacing.
//!
//! Given two real-rooted monic polynomials `f` and `g` whose root lists
//! satisfy a two-sided interlacing relation with budgets `(p, q)`, this crate
//! builds real symmetric matrices `A` and `B` with characteristic polynomials
//! `f` and `g` such that `B - A` is a sum of at most `p` positive and `q`
//! negative rank-one terms. It also builds bordered extensions: a symmetric
//! matrix whose leading principal block is a prescribed diagonal matrix for
//! `f` and whose full characteristic polynomial is `g`.
//!
//! The pieces:
//!
//! - [`poly`]: root-list polynomials (monic, stored as sorted real roots)
//!   with evaluation, coefficient expansion, common-factor extraction, and
//!   derivative roots.
//! - [`interlace`]: the `(p, q)`-interlacing predicate, its root-counting
//!   equivalent, minimal budgets, violation reports, the degree-`d` split of
//!   a pair into an intermediate polynomial, and seeded instance generators.
//! - [`linalg`]: dense symmetric matrices, a cyclic Jacobi eigensolver,
//!   inertia counts, and eigenvector alignment between congruent matrices.
//! - [`realize`]: the constructions — rank-one updates, one-sided chains,
//!   the general two-sided realization, and bordered extensions.
//! - [`verify`]: independent certificate checking with explicit residuals
//!   and thresholds for every claim a certificate makes.
//! - [`suites`]: seeded bulk test suites shared by the acceptance tests and
//!   the CLI selftest.
//!
//! All floating-point tolerances are explicit: construction takes a root
//! equality tolerance, and verification takes a [`verify::TolProfile`].
//! Every random draw is seeded, so suites and the CLI are deterministic.

pub mod error;
pub mod interlace;
pub mod linalg;
pub mod poly;
pub mod realize;
pub mod suites;
pub mod verify;

pub use error::{Error, Result};
