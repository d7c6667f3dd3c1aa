//! Group-by counts on a roster shaped like the section's membership.

mod common;

use dscmetrics::analytics::percent;
use dscmetrics::{Committee, Corpus, YearWindow};

// members analysed and printed share of the section
const SECTION: [(Committee, usize, f64); 9] = [
    (Committee::Geochemistry, 95, 13.90),
    (Committee::Geodesy, 45, 6.59),
    (Committee::Geology, 51, 7.47),
    (Committee::Geophysics, 65, 9.52),
    (Committee::Meteorology, 69, 10.10),
    (Committee::Mining, 40, 5.86),
    (Committee::Palaeontology, 37, 5.42),
    (Committee::PhysicalGeography, 110, 16.10),
    (Committee::SocialGeography, 171, 25.04),
];

#[test]
fn committee_sizes_and_shares() {
    let roster = SECTION
        .iter()
        .flat_map(|&(c, n, _)| (0..n).map(move |i| common::researcher(&format!("{c}-{i}"), c)))
        .collect();
    let corpus = Corpus::build(roster, Vec::new(), YearWindow::default()).unwrap();
    let sizes = corpus.committee_sizes();
    let total: usize = sizes.values().sum();
    assert_eq!(total, 683);
    for (committee, n, printed) in SECTION {
        assert_eq!(sizes[&committee], n);
        let share = percent(n, total);
        assert!(
            (share - printed).abs() <= 0.01,
            "{committee}: {share} vs {printed}"
        );
    }
}
