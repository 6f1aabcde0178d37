//! Acceptance criteria, one PASS/FAIL line each.
//!
//! A criterion listed in `KNOWN` prints FAIL with its reason but does not
//! fail the run; any other failure exits nonzero.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use rand::rngs::StdRng;
use rand::seq::SliceRandom;
use rand::SeedableRng;

use togliatti::lefschetz::{fails_wlp_in_degree, hyperplane_dependence, wlp_report};
use togliatti::monomial::{canonical_form, is_trivial, is_trivial_type_b};
use togliatti::report::{analyze, AnalysisReport, Checks};
use togliatti::smoothness::is_smooth;
use togliatti::stability::{stability_class, stability_oracle, STABILITY_ORACLE_LIMIT};
use togliatti::survey::bounds::cubic_partition_minimum;
use togliatti::survey::{closed_form_mu_s, enumerate, mu_bounds, reproduce, EnumerationConfig, Filter};
use togliatti::togliatti::{is_minimal, kernel_dimension, minimality_oracle, MINIMALITY_ORACLE_LIMIT};
use togliatti::MonomialIdeal;

type Outcome = Result<String, String>;
type Criterion = (u32, &'static str, fn() -> Outcome);

/// Criteria expected to fail: number, reason, and the exact failure text.
/// A different failure of the same criterion still counts as unexpected.
const KNOWN: &[(u32, &str, &str)] = &[
    (
        4,
        "(2,7) has a fourth non-trivial smooth minimal orbit with six generators",
        "thm-3-next-n2d7: unexpected (x0^7,x0^4*x1^2*x2,x0^2*x1*x2^4,x0*x1^4*x2^2,x1^7,x2^7)",
    ),
    (
        8,
        "the same extra (2,7) orbit is stable, so the stable list is incomplete",
        "stability-thm: (x0^7,x0^4*x1^2*x2,x0^2*x1*x2^4,x0*x1^4*x2^2,x1^7,x2^7) is Stable, expected Unstable",
    ),
];

fn targets(names: &[&str], limit: Duration) -> Outcome {
    let start = Instant::now();
    let mut failed = Vec::new();
    for name in names {
        let v = reproduce(name).map_err(|e| format!("{name}: {e}"))?;
        if !v.passed {
            let diffs: Vec<String> = v.checks.iter().flat_map(|c| c.diffs.clone()).collect();
            failed.push(format!("{name}: {}", diffs.join("; ")));
        }
    }
    let took = start.elapsed();
    if !failed.is_empty() {
        return Err(failed.join(" | "));
    }
    if took > limit {
        return Err(format!("took {took:.2?}, limit {limit:?}"));
    }
    Ok(format!("{} targets", names.len()))
}

fn each_under(names: &[&str], limit: Duration) -> Outcome {
    for name in names {
        targets(&[name], limit)?;
    }
    Ok(format!("{} targets, each under {limit:?}", names.len()))
}

fn c1() -> Outcome {
    each_under(&["certificate-ex35"], Duration::from_secs(1))
}

fn c2() -> Outcome {
    each_under(&["certificate-f3", "certificate-f4"], Duration::from_secs(1))
}

fn c3() -> Outcome {
    targets(
        &[
            "thm-3-main-n2d4",
            "thm-3-main-n2d5",
            "thm-3-main-n2d6",
            "thm-3-main-n2d7",
            "thm-3-main-n3d4",
            "thm-3-main-n3d5",
            "thm-3-main-n4d4",
        ],
        Duration::from_secs(300),
    )
}

fn c4() -> Outcome {
    targets(
        &[
            "thm-3-next-n2d4",
            "thm-3-next-n2d5",
            "thm-3-next-n2d6",
            "thm-3-next-n2d7",
            "thm-3-next-n3d4",
        ],
        Duration::from_secs(600),
    )
}

fn c5() -> Outcome {
    targets(&["interval-n2d5", "interval-n2d6", "interval-n2d7"], Duration::from_secs(60))?;
    for d in 5..=7 {
        let b = mu_bounds(2, d).map_err(|e| e.to_string())?;
        let rho = b.rho.map(|v| v.value);
        if b.generator_bound as u64 != d as u64 + 1 || rho != Some(d as u64 + 1) {
            return Err(format!("d = {d}: bound {}, rho {rho:?}", b.generator_bound));
        }
    }
    Ok("interval members verified; rho(2,d) = d + 1 = generator bound".into())
}

fn c6() -> Outcome {
    targets(&["gap-2n3-n3d4"], Duration::from_secs(900))
}

fn c7() -> Outcome {
    targets(&["cubics-n4"], Duration::from_secs(600))
}

fn c8() -> Outcome {
    targets(&["stability-thm"], Duration::from_secs(600))
}

fn corpus(cases: &[(usize, u32, usize)], filters: &[Filter]) -> Result<Vec<MonomialIdeal>, String> {
    let config = EnumerationConfig::default();
    let mut out = Vec::new();
    for &(n, d, extra) in cases {
        out.extend(enumerate(n, d, extra, filters, &config).map_err(|e| e.to_string())?);
    }
    Ok(out)
}

const ORACLE_CASES: &[(usize, u32, usize)] = &[
    (2, 3, 1),
    (2, 4, 1),
    (2, 4, 2),
    (2, 4, 3),
    (2, 5, 1),
    (2, 5, 2),
    (2, 5, 3),
    (2, 6, 3),
    (2, 7, 3),
    (3, 3, 1),
    (3, 3, 2),
    (3, 3, 3),
    (3, 4, 3),
    (3, 4, 4),
];

fn c9() -> Outcome {
    let all = corpus(ORACLE_CASES, &[])?;
    let mut three_way = 0;
    for i in all.iter().filter(|i| i.satisfies_generator_bound()) {
        let wlp = fails_wlp_in_degree(i, i.d() - 1);
        let laplace = kernel_dimension(i) > 0;
        let restriction = hyperplane_dependence(i).is_some();
        if wlp != laplace || wlp != restriction {
            return Err(format!("(a) {i}: wlp {wlp}, kernel {laplace}, restriction {restriction}"));
        }
        three_way += 1;
    }
    let mut minimal = 0;
    for i in all.iter().filter(|i| i.satisfies_generator_bound() && kernel_dimension(i) > 0) {
        if i.num_generators() > MINIMALITY_ORACLE_LIMIT {
            continue;
        }
        let fast = is_minimal(i).map_err(|e| e.to_string())?.is_minimal;
        let slow = minimality_oracle(i).map_err(|e| e.to_string())?;
        if fast != slow {
            return Err(format!("(b) {i}: certificate says {fast}, oracle {slow}"));
        }
        minimal += 1;
    }
    let mut stability = 0;
    for i in all.iter().filter(|i| (3..=STABILITY_ORACLE_LIMIT).contains(&i.num_generators())) {
        let fast = stability_class(i).map_err(|e| e.to_string())?;
        let slow = stability_oracle(i).map_err(|e| e.to_string())?;
        if fast.verdict != slow.verdict || fast.min_value() != slow.min_value() {
            return Err(format!("(c) {i}: {:?} vs {:?}", fast.verdict, slow.verdict));
        }
        stability += 1;
    }
    let closed = closed_form_mu_s(4, 3).map_err(|e| e.to_string())?;
    let partition = cubic_partition_minimum(4).map(|p| p.0);
    if closed != 13 || partition != Some(13) {
        return Err(format!("(d) closed form {closed}, partition minimum {partition:?}"));
    }
    Ok(format!(
        "(a) {three_way} ideals, (b) {minimal} Togliatti systems, (c) {stability} bundles, (d) 13"
    ))
}

/// Every permutation-invariant field of a report, flattened.
fn fingerprint(r: &AnalysisReport) -> String {
    let w = r.wlp.as_ref().expect("wlp ran");
    let t = r.togliatti.as_ref().expect("togliatti ran");
    let s = r.smoothness.as_ref().expect("smoothness ran");
    let degrees: Vec<(usize, usize, usize, bool)> =
        w.degrees.iter().map(|d| (d.dim_source, d.dim_target, d.rank, d.maximal)).collect();
    let stab = r.stability.as_ref().map(|s| (s.verdict, s.min_value(), s.slope_of_e.to_string()));
    format!(
        "{:?} {:?} {:?} | {} {} {} {} {} | {} {} {} | {:?} | {:?} | {}",
        w.has_wlp,
        w.failing_degrees,
        degrees,
        t.satisfies_generator_bound,
        t.is_togliatti,
        t.kernel_dimension,
        t.is_minimal,
        t.blocking_points.len(),
        s.is_smooth,
        s.dimension,
        s.num_vertices,
        stab,
        r.tags,
        serde_json::to_string(&r.input.canonical).unwrap(),
    )
}

fn c10() -> Outcome {
    let mut ideals = corpus(&[(2, 4, 2), (2, 5, 2), (2, 5, 3), (3, 3, 2), (3, 4, 3)], &[Filter::Minimal])?;
    ideals.extend(corpus(&[(2, 4, 1), (3, 3, 1)], &[])?);
    for spec in [
        "x0^3,x0^2*x1,x0*x1^2,x1^3,x2^3,x2^2*x3,x2*x3^2,x3^3",
        "x0^7,x1^7,x2^7,x0^4*x1^2*x2,x0^2*x1*x2^4,x0*x1^4*x2^2",
        "x0^4,x1^4,x2^4,x3^4,x0^3*x1,x0^3*x2,x0^3*x3",
    ] {
        ideals.push(MonomialIdeal::parse_inline(spec, None).map_err(|e| e.to_string())?);
    }
    let mut rng = StdRng::seed_from_u64(0x7061_7065);
    let mut checked = 0;
    for ideal in &ideals {
        let base = fingerprint(&analyze(ideal, Checks::ALL));
        let trivial = (is_trivial(ideal).is_some(), is_trivial_type_b(ideal).is_some());
        let mut perm: Vec<usize> = (0..ideal.num_vars()).collect();
        for _ in 0..100 {
            perm.shuffle(&mut rng);
            let image = ideal.permuted(&perm);
            let got = fingerprint(&analyze(&image, Checks::ALL));
            if got != base {
                return Err(format!("{ideal} under {perm:?}:\n  {base}\n  {got}"));
            }
            if canonical_form(&image) != canonical_form(ideal)
                || (is_trivial(&image).is_some(), is_trivial_type_b(&image).is_some()) != trivial
                || is_smooth(&image).is_smooth != is_smooth(ideal).is_smooth
                || wlp_report(&image).failing_degrees != wlp_report(ideal).failing_degrees
            {
                return Err(format!("{ideal} under {perm:?}: direct checks differ"));
            }
            checked += 1;
        }
    }
    Ok(format!("{} ideals, {checked} permuted reports", ideals.len()))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 10] = [
        (1, "hyperquadric certificate", c1),
        (2, "cubic and quartic certificates", c2),
        (3, "2n+1 classification", c3),
        (4, "2n+2 smooth classification", c4),
        (5, "interval family and rho(2,d)", c5),
        (6, "no smooth minimal system with 2n+3 generators at (3,4)", c6),
        (7, "cubic ladder at n = 4", c7),
        (8, "stability trichotomy", c8),
        (9, "oracle equivalences", c9),
        (10, "permutation invariance", c10),
    ];
    let mut unexpected = 0;
    for (k, title, check) in criteria {
        let start = Instant::now();
        let outcome = check();
        let took = start.elapsed();
        let known = KNOWN.iter().find(|(c, _, _)| *c == k);
        match (outcome, known) {
            (Ok(detail), None) => println!("PASS {k:>2} {title} [{took:.2?}] {detail}"),
            (Ok(detail), Some(_)) => {
                println!("PASS {k:>2} {title} [{took:.2?}] {detail} (listed as a known discrepancy; update KNOWN)")
            }
            (Err(detail), Some((_, why, expected))) if detail == *expected => {
                println!("FAIL {k:>2} {title} [{took:.2?}] known discrepancy: {why}");
                println!("        {detail}");
            }
            (Err(detail), _) => {
                unexpected += 1;
                println!("FAIL {k:>2} {title} [{took:.2?}] {detail}");
            }
        }
    }
    if unexpected > 0 {
        println!("{unexpected} unexpected failure(s)");
        ExitCode::FAILURE
    } else {
        ExitCode::SUCCESS
    }
}
