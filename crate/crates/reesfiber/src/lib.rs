//! Combinatorial toolkit for divisorial filtrations on two-dimensional
//! normal local singularities.
//!
//! The input is the dual graph of a resolution: exceptional curves with
//! their negative definite intersection matrix, arithmetic genera and
//! residue degrees, plus external prime divisors known through their
//! intersection vectors. On top of that data the crate computes
//!
//! * the local Zariski decomposition `Delta = D + B` of an effective
//!   Q-divisor ([`zariski`]),
//! * exact degree / Euler characteristic / cohomology-vanishing bounds on
//!   the exceptional curves ([`riemann_roch`]),
//! * the stable base locus as annotated components of the zero-intersection
//!   subgraph, and the finite-generation verdict ([`base_locus`]),
//! * the minimal primes over `m_R` in the Rees algebra and the analytic
//!   spread trichotomy ([`fiber_cone`]),
//! * the scheme structure of Proj of the Rees algebra: kept, contracted and
//!   removed curves, properness and Noetherianity, valuation centers and
//!   the gamma invariant ([`proj`]),
//! * a brute-force monomial-ideal oracle over `k[[x,y]]` for desk-scale
//!   verification of all of the above ([`monomial`]).
//!
//! All arithmetic is exact: coefficients are arbitrary-precision rationals
//! and every decision procedure reduces to integer sign tests. There is no
//! floating point anywhere in the crate.

pub mod base_locus;
pub mod dualgraph;
pub mod error;
pub mod fiber_cone;
pub mod json;
mod linalg;
pub mod monomial;
pub mod proj;
pub mod rat;
pub mod riemann_roch;
pub mod zariski;

/// Exact rational scalar used for all divisor coefficients.
pub type Rational = num_rational::BigRational;

pub use base_locus::{is_finitely_generated, resolve_sbl, zero_locus_components, SblProvider, SblSet};
pub use dualgraph::{DualGraph, ExceptionalCurve, ExternalDivisor, QDivisor, ValidationReport};
pub use error::{Error, ErrorClass};
pub use fiber_cone::{analytic_spread, prime_class, radical_decomposition, FiberConeReport, PrimeClass};
pub use proj::{build_proj, gamma_exceptional, has_center, CenterSpec, FiberShape, GammaResult, ProjDescription};
pub use zariski::{solve_contact, zariski_decompose, ZariskiDecomposition};
