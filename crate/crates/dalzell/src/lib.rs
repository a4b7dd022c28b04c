//! Exact error bounds for the partial sums of the Gregory-Leibniz series and
//! the alternating harmonic series, derived from the integrals
//! `∫₀¹ xᵐ(1−x)ⁿ/(1+x²) dx`.
//!
//! Everything is computed in arbitrary-precision rational arithmetic; the only
//! transcendental inputs are certified rational enclosures of π and ln 2, so
//! every inequality reported by this crate reduces to an exact integer
//! comparison.
//!
//! Module map:
//!
//! - [`exactnum`] — rationals, enclosures of π and ln 2, correctly rounded
//!   decimal rendering.
//! - [`integral`] — symbolic evaluation of the integrals, Backhouse
//!   classification, one-sided rational approximations of π and ln 2.
//! - [`bounds`] — partial sums, the generic integral-derived error bounds,
//!   the six closed-form propositions, and the classical Leibniz, Calabrese
//!   and Johnsonbaugh comparison bounds.
//! - [`report`] — comparison tables, render formats, and the invariant check
//!   suite behind the `check` subcommand.

pub mod bounds;
pub mod exactnum;
pub mod integral;
pub mod report;

pub use bounds::{
    calabrese_bounds, certified_error_interval, dalzell_bounds, forward_difference,
    johnsonbaugh_bounds, leibniz_bound, partial_sum, proposition_bounds, side_of_partial_sum,
    true_error, BoundMethod, BoundPair, BoundsError, SeriesKind, SumSide, TargetConstant,
};
pub use exactnum::{
    ln2_enclosure, parse_decimal, pi_enclosure, sign_of_affine_combination, to_decimal, AffineSign,
    ConstantEnclosure, ConstantTarget, DecimalString, ExactRational,
};
pub use integral::{
    classify, constant_approximation, dalzell_integral, divide_by_circle, expand_integrand,
    integrate_unit, ApproxError, ApproxSide, BackhouseClass, DalzellValue, Polynomial,
    RationalApproximation,
};
pub use report::{
    build_table, preset, render, run_check_suite, CheckLimits, CheckReport, RenderFormat,
    TableResult, TableSide, TableSpec,
};
