use std::collections::BTreeMap;

use serde::{Serialize, Serializer};

use crate::analytics::composition::percent;
use crate::error::{Error, Result};
use crate::model::{Committee, Corpus};

/// Co-authorship size classes. The last class is open-ended and starts at
/// 501, so every author count ≥ 1 falls in exactly one class.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum CoauthorBin {
    Single,
    Two,
    ThreeToFive,
    SixToTen,
    ElevenToTwenty,
    TwentyOneToFifty,
    FiftyOneToHundred,
    HundredOneToFiveHundred,
    FiveHundredOneOrMore,
}

impl CoauthorBin {
    pub const ALL: [CoauthorBin; 9] = [
        CoauthorBin::Single,
        CoauthorBin::Two,
        CoauthorBin::ThreeToFive,
        CoauthorBin::SixToTen,
        CoauthorBin::ElevenToTwenty,
        CoauthorBin::TwentyOneToFifty,
        CoauthorBin::FiftyOneToHundred,
        CoauthorBin::HundredOneToFiveHundred,
        CoauthorBin::FiveHundredOneOrMore,
    ];

    pub fn of(author_count: u32) -> Option<CoauthorBin> {
        Some(match author_count {
            0 => return None,
            1 => CoauthorBin::Single,
            2 => CoauthorBin::Two,
            3..=5 => CoauthorBin::ThreeToFive,
            6..=10 => CoauthorBin::SixToTen,
            11..=20 => CoauthorBin::ElevenToTwenty,
            21..=50 => CoauthorBin::TwentyOneToFifty,
            51..=100 => CoauthorBin::FiftyOneToHundred,
            101..=500 => CoauthorBin::HundredOneToFiveHundred,
            _ => CoauthorBin::FiveHundredOneOrMore,
        })
    }

    pub fn label(self) -> &'static str {
        match self {
            CoauthorBin::Single => "1",
            CoauthorBin::Two => "2",
            CoauthorBin::ThreeToFive => "3-5",
            CoauthorBin::SixToTen => "6-10",
            CoauthorBin::ElevenToTwenty => "11-20",
            CoauthorBin::TwentyOneToFifty => "21-50",
            CoauthorBin::FiftyOneToHundred => "51-100",
            CoauthorBin::HundredOneToFiveHundred => "101-500",
            CoauthorBin::FiveHundredOneOrMore => ">=501",
        }
    }

    fn index(self) -> usize {
        self as usize
    }
}

impl Serialize for CoauthorBin {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(self.label())
    }
}

/// Publication counts per co-authorship class.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct BinCounts([usize; 9]);

impl BinCounts {
    pub fn add(&mut self, bin: CoauthorBin) {
        self.0[bin.index()] += 1;
    }

    pub fn get(&self, bin: CoauthorBin) -> usize {
        self.0[bin.index()]
    }

    pub fn total(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn percent(&self, bin: CoauthorBin) -> f64 {
        percent(self.get(bin), self.total())
    }

    pub fn percents(&self) -> [f64; 9] {
        CoauthorBin::ALL.map(|b| self.percent(b))
    }
}

impl Serialize for BinCounts {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeMap;
        let mut map = s.serialize_map(Some(9))?;
        for b in CoauthorBin::ALL {
            map.serialize_entry(b.label(), &self.get(b))?;
        }
        map.end()
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CoauthorshipDistribution {
    /// Committees with at least one attributed publication.
    pub committees: BTreeMap<Committee, BinCounts>,
    pub overall: BinCounts,
}

/// Bins every publication by author count under its attributed committee.
pub fn coauthorship_distribution(corpus: &Corpus) -> Result<CoauthorshipDistribution> {
    let mut committees: BTreeMap<Committee, BinCounts> = BTreeMap::new();
    let mut overall = BinCounts::default();
    for p in corpus.publications() {
        let committee = corpus.committee_of_publication(p)?;
        let bin = CoauthorBin::of(p.author_count).ok_or(Error::ZeroAuthors)?;
        committees.entry(committee).or_default().add(bin);
        overall.add(bin);
    }
    Ok(CoauthorshipDistribution {
        committees,
        overall,
    })
}
