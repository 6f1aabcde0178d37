//! Monomial Togliatti systems: artinian monomial ideals generated in one
//! degree, their failure of the weak Lefschetz property, minimality,
//! toric smoothness and syzygy bundle stability.

pub mod cache;
pub mod error;
pub mod lefschetz;
pub mod linalg;
pub mod monomial;
pub mod polynomial;
pub mod report;
pub mod serde_util;
pub mod smoothness;
pub mod stability;
pub mod survey;
pub mod togliatti;

pub use error::{Error, Result};
pub use monomial::{Monomial, MonomialIdeal};
