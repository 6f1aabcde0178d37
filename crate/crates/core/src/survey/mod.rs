//! Exhaustive, orbit-pruned surveys of monomial Togliatti systems and the
//! harness that checks classification statements against them.

pub mod bounds;
pub mod enumerate;
pub mod families;
pub mod reproduce;
pub mod table;

pub use bounds::{closed_form_mu_s, mu_bounds, MuBounds};
pub use enumerate::{enumerate, raw_subset_count, EnumerationConfig, Filter};
pub use families::{family, Family};
pub use reproduce::{reproduce, target_names, targets, ReproductionTarget, TargetVerdict};
pub use table::{survey_row, write_csv, SurveyRow};
