//! Coefficient tables and the checks relating the unified invariant to ADO.

mod checks;
mod pipeline;
mod table;

pub use checks::{
    check_unified_vs_ado, congruence_report, corollary_report, factorization_report, lemma_report,
    mod_r_congruence_check, unified_side, valuation_mod_r, valuation_report, LemmaReport, MarginEntry, Report, Status,
    Valuation,
};
pub use pipeline::{c_table, cl_digits, cl_digits_via_unit, cl_reconstruct, d_reconstruct, d_table};
pub use table::{CoefficientTable, TableKind};
