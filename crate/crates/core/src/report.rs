//! One-stop analysis of a single ideal, as printed by `togliatti analyze`.

use std::fmt::Write as _;
use std::time::Instant;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::lefschetz::{wlp_report, WlpReport};
use crate::monomial::{canonical_form_with_perm, is_trivial, is_trivial_type_b, IdealJson, MonomialIdeal};
use crate::smoothness::{is_smooth, SmoothnessReport};
use crate::stability::{stability_class, StabilityReport, StabilityVerdict};
use crate::togliatti::{togliatti_report, TogliattiReport};

pub const TOOL_VERSION: &str = env!("CARGO_PKG_VERSION");

/// Which sub-reports to compute.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Checks {
    pub wlp: bool,
    pub togliatti: bool,
    pub smoothness: bool,
    pub stability: bool,
}

impl Checks {
    pub const ALL: Checks = Checks {
        wlp: true,
        togliatti: true,
        smoothness: true,
        stability: true,
    };

    /// `all`, or a comma-separated subset of `wlp,togliatti,smoothness,stability`.
    pub fn parse(text: &str) -> Result<Checks> {
        let mut c = Checks {
            wlp: false,
            togliatti: false,
            smoothness: false,
            stability: false,
        };
        for item in text.split(',').map(str::trim).filter(|s| !s.is_empty()) {
            match item {
                "all" => c = Checks::ALL,
                "wlp" => c.wlp = true,
                "togliatti" | "minimal" => c.togliatti = true,
                "smoothness" | "smooth" => c.smoothness = true,
                "stability" => c.stability = true,
                other => return Err(Error::InvalidArgument(format!("unknown check `{other}`"))),
            }
        }
        Ok(c)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Tags {
    pub trivial: bool,
    pub trivial_type_b: bool,
    /// `None` when the Togliatti check was not run.
    pub minimal: Option<bool>,
    /// `None` unless both the Togliatti and smoothness checks ran.
    pub smooth_minimal: Option<bool>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct InputIdeal {
    pub as_given: IdealJson,
    pub canonical: IdealJson,
    /// `canonical` is `as_given` under `x_i -> x_{permutation[i]}`.
    pub permutation: Vec<usize>,
    pub inline: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AnalysisReport {
    pub tool_version: String,
    pub input: InputIdeal,
    pub n: usize,
    pub d: u32,
    pub r: usize,
    pub generator_bound: usize,
    pub artinian: bool,
    pub wlp: Option<WlpReport>,
    pub togliatti: Option<TogliattiReport>,
    pub smoothness: Option<SmoothnessReport>,
    pub stability: Option<StabilityReport>,
    /// Why stability was skipped, when it was requested but not applicable.
    pub stability_note: Option<String>,
    pub tags: Tags,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub elapsed_ms: Option<u64>,
}

pub fn analyze(ideal: &MonomialIdeal, checks: Checks) -> AnalysisReport {
    let start = Instant::now();
    let (canonical, permutation) = canonical_form_with_perm(ideal);
    let togliatti = checks.togliatti.then(|| togliatti_report(ideal));
    let smoothness = checks.smoothness.then(|| is_smooth(ideal));
    let (stability, stability_note) = if checks.stability {
        match stability_class(ideal) {
            Ok(s) => (Some(s), None),
            Err(e) => (None, Some(e.to_string())),
        }
    } else {
        (None, None)
    };
    let minimal = togliatti.as_ref().map(|t| t.is_minimal);
    let smooth_minimal = match (&minimal, &smoothness) {
        (Some(m), Some(s)) => Some(*m && s.is_smooth),
        _ => None,
    };
    AnalysisReport {
        tool_version: TOOL_VERSION.to_string(),
        input: InputIdeal {
            as_given: ideal.to_json(),
            canonical: canonical.to_json(),
            permutation,
            inline: ideal.to_inline(),
        },
        n: ideal.n(),
        d: ideal.d(),
        r: ideal.num_generators(),
        generator_bound: ideal.generator_bound(),
        artinian: true,
        wlp: checks.wlp.then(|| wlp_report(ideal)),
        togliatti,
        smoothness,
        stability,
        stability_note,
        tags: Tags {
            trivial: is_trivial(ideal).is_some(),
            trivial_type_b: is_trivial_type_b(ideal).is_some(),
            minimal,
            smooth_minimal,
        },
        elapsed_ms: Some(start.elapsed().as_millis() as u64),
    }
}

impl AnalysisReport {
    /// The same report without timing, for byte-stable output.
    pub fn without_timing(mut self) -> Self {
        self.elapsed_ms = None;
        self
    }

    pub fn verdict(&self) -> Option<StabilityVerdict> {
        self.stability.as_ref().map(|s| s.verdict)
    }

    /// Header and row for the flat CSV rendering.
    pub fn csv_record(&self) -> (Vec<&'static str>, Vec<String>) {
        let opt = |b: Option<bool>| b.map_or(String::new(), |b| b.to_string());
        let header = vec![
            "ideal",
            "n",
            "d",
            "r",
            "has_wlp",
            "failing_degrees",
            "togliatti",
            "kernel_dimension",
            "minimal",
            "smooth",
            "stability",
            "trivial",
            "trivial_type_b",
            "smooth_minimal",
        ];
        let row = vec![
            self.input.inline.clone(),
            self.n.to_string(),
            self.d.to_string(),
            self.r.to_string(),
            opt(self.wlp.as_ref().map(|w| w.has_wlp)),
            self.wlp.as_ref().map_or(String::new(), |w| {
                w.failing_degrees.iter().map(|j| j.to_string()).collect::<Vec<_>>().join(" ")
            }),
            opt(self.togliatti.as_ref().map(|t| t.is_togliatti)),
            self.togliatti.as_ref().map_or(String::new(), |t| t.kernel_dimension.to_string()),
            opt(self.tags.minimal),
            opt(self.smoothness.as_ref().map(|s| s.is_smooth)),
            self.verdict().map_or(String::new(), verdict_name),
            self.tags.trivial.to_string(),
            self.tags.trivial_type_b.to_string(),
            opt(self.tags.smooth_minimal),
        ];
        (header, row)
    }

    pub fn to_text(&self) -> String {
        let mut s = String::new();
        let _ = writeln!(s, "ideal       {}", self.input.inline);
        let _ = writeln!(s, "n, d, r     {}, {}, {} (bound {})", self.n, self.d, self.r, self.generator_bound);
        if let Some(w) = &self.wlp {
            let _ = writeln!(s, "wlp         {} (failing degrees {:?})", w.has_wlp, w.failing_degrees);
        }
        if let Some(t) = &self.togliatti {
            let _ = writeln!(s, "togliatti   {} (kernel dimension {})", t.is_togliatti, t.kernel_dimension);
            let _ = writeln!(s, "minimal     {}", t.is_minimal);
            if !t.blocking_points.is_empty() {
                let pts: Vec<String> = t.blocking_points.iter().map(|m| m.to_string()).collect();
                let _ = writeln!(s, "blocking    {}", pts.join(", "));
            }
            if let Some(c) = &t.certificate_text {
                let _ = writeln!(s, "certificate {c}");
            }
        }
        if let Some(sm) = &self.smoothness {
            let _ = writeln!(s, "smooth      {}", sm.is_smooth);
            for f in &sm.failures {
                let _ = writeln!(s, "  {:?} on face of dim {}: {}", f.condition, f.face_dim, f.detail);
            }
            if let Some(c) = &sm.caveat {
                let _ = writeln!(s, "  caveat: {c}");
            }
        }
        if let Some(st) = &self.stability {
            let _ = writeln!(s, "stability   {} (slope {})", verdict_name(st.verdict), st.slope_of_e);
            if let Some(w) = &st.witness {
                let subset: Vec<String> = w.subset.iter().map(|m| m.to_string()).collect();
                let _ = writeln!(s, "  min value {} at {{{}}}", w.value, subset.join(", "));
            }
        }
        if let Some(note) = &self.stability_note {
            let _ = writeln!(s, "stability   skipped: {note}");
        }
        let _ = writeln!(
            s,
            "tags        trivial={} type_b={} minimal={} smooth_minimal={}",
            self.tags.trivial,
            self.tags.trivial_type_b,
            self.tags.minimal.map_or("-".into(), |b| b.to_string()),
            self.tags.smooth_minimal.map_or("-".into(), |b| b.to_string()),
        );
        s
    }
}

pub fn verdict_name(v: StabilityVerdict) -> String {
    match v {
        StabilityVerdict::Stable => "stable",
        StabilityVerdict::ProperlySemistable => "properly_semistable",
        StabilityVerdict::Unstable => "unstable",
    }
    .to_string()
}
