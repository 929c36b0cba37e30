//! Closed formulas and transfer recursions for dimer counts on 2×n strips.
//!
//! This crate packages the "pencil and paper" side of the toolkit:
//!
//! * explicit coefficient tables for the weight polynomials of the square and
//!   hexagon strips ([`a_hex`], [`b_sq`], [`b_sq_refined`], [`CoefficientTable`]);
//! * direct constructions of the signed weight polynomials from those tables
//!   ([`newton_sq`], [`newton_hex`]) plus an independent product recursion
//!   ([`newton_sq_recursive`]) and exact closed-form point evaluation
//!   ([`newton_closed_form_eval`]);
//! * the one-dimensional monomer–dimer transfer systems that generate the same
//!   coefficients ([`MonomerDimer1D`], [`FugacityPoly3`]);
//! * the closed-form count of minimal feedback arc sets on the square strip's
//!   dual digraph ([`fas_count_formula`]);
//! * generating-function identity checks with structured pass/fail reports
//!   ([`generating_function_check`]).
//!
//! Everything except the explicitly float-based sampling checks is exact
//! integer or rational arithmetic.

mod checks;
mod fas;
mod monomer;
mod newton;
mod tables;

use thiserror::Error;

pub use checks::{
    generating_function_check, reports_to_json, CheckStatus, GfReport, GfTarget, QSqrt2,
};
pub use fas::fas_count_formula;
pub use monomer::{
    md_cycle_single, md_cycle_three, md_free_single, md_free_three, Boundary, FugacityPoly3,
    MdFlavor, MdPolynomial, MonomerDimer1D,
};
pub use newton::{
    newton_closed_form_eval, newton_hex, newton_hex_printed, newton_hex_z_part, newton_sq,
    newton_sq_printed, newton_sq_recursive, newton_sq_z_part, StripKind,
};
pub use tables::{a_hex, b_sq, b_sq_refined, CoefficientTable, TableKind};

/// Errors reported by the formula layer.
#[derive(Debug, Error, PartialEq, Eq)]
pub enum FormulaError {
    /// A size argument violates its stated requirement.
    #[error("{param} = {value} is invalid: {requirement}")]
    InvalidDimension {
        param: &'static str,
        value: i64,
        requirement: &'static str,
    },
    /// Closed-form evaluation needs a nonzero base point.
    #[error("evaluation point z0 must be nonzero")]
    ZeroEvaluationPoint,
    /// Series checks are capped to keep float sampling meaningful.
    #[error("series order {order} exceeds the supported limit {limit}")]
    OrderTooLarge { order: usize, limit: usize },
}
