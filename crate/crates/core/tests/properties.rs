mod common;

use std::collections::HashSet;

use proptest::prelude::*;

use dscmetrics::analytics::{
    coauthorship_distribution, committee_share_of_top, composition, rank_researchers,
    select_top_quantile, top_quantile_size,
};
use dscmetrics::indicators::{indicator_points, indicator_value_over, DEFAULT_SCORING_KINDS};
use dscmetrics::ingest::{load_corpus, write_corpus};
use dscmetrics::{
    check_eligibility, indicator_value, AuthorRef, Corpus, CountingScheme, IndicatorKind, RuleSet,
    YearWindow,
};

fn corpus(seed: u64) -> Corpus {
    let (r, p) = common::random_records(seed, 12, 80);
    Corpus::build(r, p, YearWindow::default()).unwrap()
}

fn summed_kinds() -> impl Iterator<Item = IndicatorKind> {
    IndicatorKind::ALL
        .into_iter()
        .filter(|&k| k != IndicatorKind::HIndex)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn dedup_is_idempotent(seed in any::<u64>()) {
        let c = corpus(seed);
        let ids: HashSet<_> = c.publications().iter().map(|p| &p.pub_id).collect();
        prop_assert_eq!(ids.len(), c.publications().len());

        let dir = tempfile::tempdir().unwrap();
        let (rf, pf) = (dir.path().join("r.csv"), dir.path().join("p.jsonl"));
        write_corpus(&c, &rf, &pf).unwrap();
        let again = load_corpus(&rf, &pf, c.window()).unwrap();
        prop_assert_eq!(again.publications(), c.publications());
        prop_assert_eq!(again.researchers(), c.researchers());
        prop_assert!(again.conflicts().is_empty());
    }

    #[test]
    fn window_filter_keeps_only_window_years(seed in any::<u64>(), start in 2009..2016i32, len in 0..6i32) {
        let (r, p) = common::random_records(seed, 8, 60);
        let window = YearWindow::new(start, start + len).unwrap();
        let c = Corpus::build(r, p.clone(), window).unwrap();
        prop_assert!(c.publications().iter().all(|p| window.contains(p.year)));
        let expected: HashSet<_> = p.iter().filter(|p| window.contains(p.year)).map(|p| p.pub_id.clone()).collect();
        let kept: HashSet<_> = c.publications().iter().map(|p| p.pub_id.clone()).collect();
        prop_assert_eq!(kept, expected);
    }

    #[test]
    fn every_publication_is_attributed(seed in any::<u64>()) {
        let c = corpus(seed);
        for p in c.publications() {
            let committee = c.committee_of_publication(p).unwrap();
            let member_committees: Vec<_> = p
                .member_ids()
                .map(|id| c.researcher(id).unwrap().committee)
                .collect();
            prop_assert!(member_committees.contains(&committee));
        }
        let dist = coauthorship_distribution(&c).unwrap();
        prop_assert_eq!(dist.overall.total(), c.publications().len());
        let per_committee: usize = dist.committees.values().map(|b| b.total()).sum();
        prop_assert_eq!(per_committee, c.publications().len());
    }

    #[test]
    fn indicator_values_are_additive(seed in any::<u64>(), split in 0usize..40) {
        let c = corpus(seed);
        for scheme in CountingScheme::ALL {
            for r in c.researchers() {
                let pubs: Vec<_> = c.publications_of(&r.researcher_id).collect();
                let cut = split.min(pubs.len());
                for kind in summed_kinds() {
                    let whole = indicator_value_over(r, pubs.iter().copied(), kind, scheme).unwrap();
                    let a = indicator_value_over(r, pubs[..cut].iter().copied(), kind, scheme).unwrap();
                    let b = indicator_value_over(r, pubs[cut..].iter().copied(), kind, scheme).unwrap();
                    prop_assert!((whole - (a + b)).abs() <= 1e-9 * whole.max(1.0));
                }
            }
        }
    }

    #[test]
    fn points_are_linear(value in 0.0..1e6f64, minimum in 1e-3..1e4f64, k in 0.0..100.0f64) {
        let p = indicator_points(value, minimum).unwrap();
        let scaled = indicator_points(k * value, minimum).unwrap();
        prop_assert!((scaled - k * p).abs() <= 1e-9 * scaled.abs().max(1.0));
        prop_assert!((indicator_points(minimum, minimum).unwrap() - 1.0).abs() < 1e-15);
    }

    #[test]
    fn lower_minima_never_reject(seed in any::<u64>(), factor in 0.0..1.0f64) {
        let c = corpus(seed);
        let strict = RuleSet::bundled("proposed").unwrap();
        let mut lenient = strict.clone();
        for req in &mut lenient.requirements {
            req.minimum = (req.minimum * factor).max(1e-6);
        }
        for r in c.researchers() {
            let s = check_eligibility(r, &c, &strict, CountingScheme::Integer).unwrap();
            let l = check_eligibility(r, &c, &lenient, CountingScheme::Integer).unwrap();
            prop_assert!(!s.eligible || l.eligible);
            for (so, lo) in s.outcomes.iter().zip(&l.outcomes) {
                prop_assert!(!so.passed || lo.passed);
            }
        }
    }

    #[test]
    fn more_publications_never_reject(seed in any::<u64>(), extra in 1usize..30, citations in 0u64..50) {
        let (roster, pubs) = common::random_records(seed, 4, 200);
        let rules = RuleSet::bundled("proposed").unwrap();
        let base = Corpus::build(roster.clone(), pubs.clone(), YearWindow::default()).unwrap();
        let id = roster[0].researcher_id.clone();
        let mut more = pubs;
        more.extend((0..extra).map(|i| common::article(&format!("X{i}"), &[id.as_str()], 1, citations)));
        let grown = Corpus::build(roster, more, YearWindow::default()).unwrap();
        let r = base.researcher(&id).unwrap();
        let before = check_eligibility(r, &base, &rules, CountingScheme::Fractional).unwrap();
        let after = check_eligibility(r, &grown, &rules, CountingScheme::Fractional).unwrap();
        prop_assert!(!before.eligible || after.eligible);
        for (b, a) in before.outcomes.iter().zip(&after.outcomes) {
            prop_assert!(a.value >= b.value);
        }
    }

    #[test]
    fn top_groups_are_nested(seed in any::<u64>(), q1 in 0.01..=1.0f64, q2 in 0.01..=1.0f64) {
        let c = corpus(seed);
        let rules = RuleSet::bundled("proposed").unwrap();
        let ranking = rank_researchers(&c, CountingScheme::Fractional, &DEFAULT_SCORING_KINDS, &rules).unwrap();
        let (lo, hi) = if q1 <= q2 { (q1, q2) } else { (q2, q1) };
        let small = select_top_quantile(&ranking, lo).unwrap();
        let large = select_top_quantile(&ranking, hi).unwrap();
        prop_assert!(small.len() <= large.len());
        prop_assert_eq!(small, &large[..small.len()]);
        prop_assert_eq!(small.len(), top_quantile_size(ranking.len(), lo).unwrap());
    }

    #[test]
    fn quantile_size_is_the_ceiling(n in 1usize..5000, q in 0.001..=1.0f64) {
        let k = top_quantile_size(n, q).unwrap();
        prop_assert!(k <= n);
        prop_assert!(k as f64 >= q * n as f64 - 1e-6);
        prop_assert!((k as f64) < q * n as f64 + 1.0);
    }

    #[test]
    fn rankings_cover_the_same_researchers(seed in any::<u64>()) {
        let c = corpus(seed);
        let rules = RuleSet::bundled("proposed").unwrap();
        let mut seen = Vec::new();
        for scheme in CountingScheme::ALL {
            let ranking = rank_researchers(&c, scheme, &DEFAULT_SCORING_KINDS, &rules).unwrap();
            let mut ids: Vec<_> = ranking.entries.iter().map(|e| e.researcher_id.clone()).collect();
            prop_assert!(ranking.entries.iter().enumerate().all(|(i, e)| e.rank == i + 1));
            prop_assert!(ranking.entries.windows(2).all(|w| w[0].cumulative >= w[1].cumulative - 1e-9));
            ids.sort();
            seen.push(ids);
        }
        prop_assert!(seen.windows(2).all(|w| w[0] == w[1]));
    }

    #[test]
    fn schemes_agree_on_single_authored_corpora(seed in any::<u64>()) {
        let (r, mut p) = common::random_records(seed, 10, 60);
        for pub_ in &mut p {
            let first = pub_.member_ids().next().unwrap().to_string();
            pub_.authors = vec![AuthorRef::Member(first)];
            pub_.author_count = 1;
        }
        let c = Corpus::build(r, p, YearWindow::default()).unwrap();
        for r in c.researchers() {
            for kind in IndicatorKind::ALL {
                let base = indicator_value(r, &c, kind, CountingScheme::Integer).unwrap();
                for scheme in CountingScheme::ALL {
                    prop_assert_eq!(indicator_value(r, &c, kind, scheme).unwrap(), base);
                }
            }
        }
    }

    #[test]
    fn composition_rows_sum_to_the_group(seed in any::<u64>(), q in 0.05..=1.0f64) {
        let c = corpus(seed);
        let rules = RuleSet::bundled("proposed").unwrap();
        let ranking = rank_researchers(&c, CountingScheme::Integer, &DEFAULT_SCORING_KINDS, &rules).unwrap();
        let top = select_top_quantile(&ranking, q).unwrap();
        let comp = composition(top, &c);
        prop_assert_eq!(comp.rows.iter().map(|r| r.count).sum::<usize>(), top.len());
        let pct: f64 = comp.rows.iter().map(|r| r.percent).sum();
        prop_assert!((pct - 100.0).abs() < 1e-9);
        let share = committee_share_of_top(top, &c);
        prop_assert_eq!(share.rows.iter().map(|r| r.in_group).sum::<usize>(), top.len());
        prop_assert!(share.rows.iter().all(|r| r.in_group <= r.committee_size));
        prop_assert_eq!(share.rows.len() + share.omitted.len(), 9);
    }
}
