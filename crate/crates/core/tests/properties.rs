use std::sync::OnceLock;

use proptest::prelude::*;

use togliatti::lefschetz::{fails_wlp_in_degree, hyperplane_dependence};
use togliatti::monomial::{canonical_form, monomials, permutations, Monomial};
use togliatti::report::{analyze, Checks};
use togliatti::smoothness::is_smooth;
use togliatti::survey::{enumerate, EnumerationConfig, Filter};
use togliatti::stability::{stability_class, stability_oracle};
use togliatti::togliatti::{is_minimal, kernel_dimension, minimality_oracle};
use togliatti::MonomialIdeal;

/// Pure powers plus a random handful of other monomials, n <= 3, d <= 5.
fn ideal() -> impl Strategy<Value = MonomialIdeal> {
    (1usize..=3, 2u32..=5)
        .prop_flat_map(|(n, d)| {
            let pool: Vec<Monomial> = monomials(n + 1, d).into_iter().filter(|m| !m.is_pure_power()).collect();
            let k = pool.len().min(6);
            (Just((n, d)), proptest::sample::subsequence(pool, 0..=k))
        })
        .prop_map(|((n, d), extra)| MonomialIdeal::with_pure_powers(n, d, extra).unwrap())
}

fn with_perm() -> impl Strategy<Value = (MonomialIdeal, Vec<usize>)> {
    ideal().prop_flat_map(|i| {
        let k = i.num_vars();
        (Just(i), Just((0..k).collect::<Vec<usize>>()).prop_shuffle())
    })
}

/// Togliatti systems are rare among random ideals, so these are drawn from
/// small enumerations and then relabelled.
fn togliatti_system() -> impl Strategy<Value = (MonomialIdeal, Vec<usize>)> {
    static CORPUS: OnceLock<Vec<MonomialIdeal>> = OnceLock::new();
    let corpus = CORPUS.get_or_init(|| {
        let config = EnumerationConfig::default();
        [(2, 4, 2), (2, 5, 3), (2, 6, 3), (3, 3, 2), (3, 4, 3)]
            .into_iter()
            .flat_map(|(n, d, extra)| enumerate(n, d, extra, &[Filter::Togliatti], &config).unwrap())
            .collect()
    });
    proptest::sample::select(corpus.clone()).prop_flat_map(|i| {
        let k = i.num_vars();
        (Just(i), Just((0..k).collect::<Vec<usize>>()).prop_shuffle())
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn inline_and_json_roundtrip(i in ideal()) {
        prop_assert_eq!(MonomialIdeal::parse_inline(&i.to_inline(), Some(i.n())).unwrap(), i.clone());
        let json = serde_json::to_string(&i).unwrap();
        prop_assert_eq!(MonomialIdeal::from_json_str(&json).unwrap(), i);
    }

    #[test]
    fn canonical_form_is_an_orbit_invariant((i, p) in with_perm()) {
        let c = canonical_form(&i);
        prop_assert_eq!(canonical_form(&c), c.clone());
        prop_assert_eq!(canonical_form(&i.permuted(&p)), c.clone());
        // It is the largest image.
        for q in permutations(i.num_vars()) {
            prop_assert!(i.permuted(&q).generators() <= c.generators());
        }
    }

    #[test]
    fn three_descriptions_of_a_togliatti_system(i in ideal()) {
        prop_assume!(i.satisfies_generator_bound());
        let wlp = fails_wlp_in_degree(&i, i.d() - 1);
        prop_assert_eq!(kernel_dimension(&i) > 0, wlp);
        prop_assert_eq!(hyperplane_dependence(&i).is_some(), wlp);
    }

    #[test]
    fn minimality_agrees_with_deletion((i, p) in togliatti_system()) {
        let i = i.permuted(&p);
        prop_assert!(kernel_dimension(&i) > 0);
        prop_assert_eq!(is_minimal(&i).unwrap().is_minimal, minimality_oracle(&i).unwrap());
    }

    #[test]
    fn pruned_stability_scan_agrees((i, p) in with_perm()) {
        prop_assume!(i.num_generators() >= 3);
        let fast = stability_class(&i).unwrap();
        let slow = stability_oracle(&i).unwrap();
        prop_assert_eq!(fast.verdict, slow.verdict);
        prop_assert_eq!(fast.min_value(), slow.min_value());
        prop_assert_eq!(stability_class(&i.permuted(&p)).unwrap().verdict, fast.verdict);
    }

    #[test]
    fn report_tags_follow_sub_reports((i, p) in with_perm()) {
        prop_assume!(i.n() <= 2);
        let r = analyze(&i, Checks::ALL);
        let t = r.togliatti.as_ref().unwrap();
        let s = r.smoothness.as_ref().unwrap();
        prop_assert_eq!(r.tags.minimal, Some(t.is_minimal));
        prop_assert_eq!(r.tags.smooth_minimal, Some(t.is_minimal && s.is_smooth));
        prop_assert!(!t.is_minimal || t.is_togliatti);
        prop_assert_eq!(is_smooth(&i.permuted(&p)).is_smooth, s.is_smooth);
    }
}
