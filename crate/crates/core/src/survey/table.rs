//! Per-`(n, d, mu)` orbit counts.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::monomial::{is_trivial, is_trivial_type_b, MonomialIdeal};
use crate::smoothness::is_smooth;
use crate::togliatti::{is_minimal, is_togliatti};

use super::enumerate::{enumerate, EnumerationConfig};

/// Counts over canonical orbit representatives with exactly `mu`
/// generators. `trivial` and `trivial_type_b` count minimal orbits.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SurveyRow {
    pub n: usize,
    pub d: u32,
    pub mu: usize,
    pub total: usize,
    pub togliatti: usize,
    pub minimal: usize,
    pub minimal_smooth: usize,
    pub trivial: usize,
    pub trivial_type_b: usize,
    /// Minimal orbits, inline syntax, separated by `;`.
    pub minimal_representatives: String,
    pub minimal_smooth_representatives: String,
}

struct Flags {
    togliatti: bool,
    minimal: bool,
    smooth: bool,
    trivial: bool,
    type_b: bool,
}

fn classify(ideal: &MonomialIdeal) -> Flags {
    let togliatti = is_togliatti(ideal);
    let minimal = togliatti && is_minimal(ideal).map(|r| r.is_minimal).unwrap_or(false);
    Flags {
        togliatti,
        minimal,
        smooth: minimal && is_smooth(ideal).is_smooth,
        trivial: minimal && is_trivial(ideal).is_some(),
        type_b: minimal && is_trivial_type_b(ideal).is_some(),
    }
}

pub fn survey_row(n: usize, d: u32, mu: usize, config: &EnumerationConfig) -> Result<SurveyRow> {
    if mu < n + 1 {
        return Err(Error::InvalidArgument(format!("mu = {mu} is below the n + 1 = {} pure powers", n + 1)));
    }
    let config = EnumerationConfig {
        up_to_symmetry: true,
        ..config.clone()
    };
    let orbits = enumerate(n, d, mu - (n + 1), &[], &config)?;
    let flags: Vec<Flags> = orbits.par_iter().map(classify).collect();
    let count = |f: fn(&Flags) -> bool| flags.iter().filter(|x| f(x)).count();
    let reps = |f: fn(&Flags) -> bool| {
        orbits
            .iter()
            .zip(&flags)
            .filter(|(_, x)| f(x))
            .map(|(i, _)| i.to_inline())
            .collect::<Vec<_>>()
            .join(";")
    };
    Ok(SurveyRow {
        n,
        d,
        mu,
        total: orbits.len(),
        togliatti: count(|f| f.togliatti),
        minimal: count(|f| f.minimal),
        minimal_smooth: count(|f| f.smooth),
        trivial: count(|f| f.trivial),
        trivial_type_b: count(|f| f.type_b),
        minimal_representatives: reps(|f| f.minimal),
        minimal_smooth_representatives: reps(|f| f.smooth),
    })
}

/// Writes rows as CSV with a header line.
pub fn write_csv<W: std::io::Write>(rows: &[SurveyRow], out: W) -> Result<()> {
    let mut w = csv::Writer::from_writer(out);
    for row in rows {
        w.serialize(row).map_err(|e| Error::Io(std::io::Error::other(e)))?;
    }
    w.flush()?;
    Ok(())
}
