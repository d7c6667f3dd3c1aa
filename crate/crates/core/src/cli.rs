//! The `dscmetrics` command line.
//!
//! Exit codes: 0 success, 1 domain failure (fatal validation findings,
//! unknown researcher, rejected application), 2 input or I/O failure.
//! Every global flag can also be set through a `DSCMETRICS_*` variable.

use std::fs;
use std::path::{Path, PathBuf};
use std::str::FromStr;

use clap::{Args, Parser, Subcommand};

use crate::analytics::{
    coauthorship_distribution, committee_share_of_top, committee_summary, composition,
    mean_annual_rate, rank_researchers, scheme_delta, select_top_quantile, years_to_threshold,
    Ranking,
};
use crate::crediting::CountingScheme;
use crate::error::{Error, Result};
use crate::indicators::{IndicatorKind, DEFAULT_SCORING_KINDS};
use crate::ingest::load_corpus;
use crate::model::{Committee, Corpus, YearWindow};
use crate::report::{self, format_decimal, json_string, OutputFormat, Table};
use crate::ruleset::RuleSet;
use crate::scoring::{check_eligibility, score_researcher};
use crate::validate::validate_corpus;

pub const EXIT_OK: u8 = 0;
pub const EXIT_DOMAIN: u8 = 1;
pub const EXIT_INPUT: u8 = 2;

#[derive(Debug, Parser)]
#[command(
    name = "dscmetrics",
    version,
    about = "Researcher performance indicators under integer and fractional counting"
)]
pub struct Cli {
    #[command(flatten)]
    pub global: GlobalArgs,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args)]
pub struct GlobalArgs {
    /// Researcher CSV (researcher_id,name,committee,degree_year)
    #[arg(long, global = true, env = "DSCMETRICS_RESEARCHERS")]
    pub researchers: Option<PathBuf>,

    /// Publication JSON Lines file
    #[arg(long, global = true, env = "DSCMETRICS_PUBLICATIONS")]
    pub publications: Option<PathBuf>,

    /// Inclusive publication-year window, START:END
    #[arg(
        long,
        global = true,
        env = "DSCMETRICS_WINDOW",
        default_value = "2011:2020"
    )]
    pub window: YearWindow,

    /// integer, fractional, arithmetic, geometric, harmonic, first-author or both
    #[arg(long, global = true, env = "DSCMETRICS_SCHEME")]
    pub scheme: Option<SchemeChoice>,

    /// Bundled rule set name or path to a rule set JSON file
    #[arg(
        long,
        global = true,
        env = "DSCMETRICS_RULESET",
        default_value = "proposed"
    )]
    pub ruleset: String,

    /// Comma-separated scoring kinds (default: the four analysis indicators)
    #[arg(long, global = true, env = "DSCMETRICS_KINDS", value_delimiter = ',')]
    pub kinds: Vec<IndicatorKind>,

    /// Top-group fraction of the ranking
    #[arg(
        long,
        global = true,
        env = "DSCMETRICS_QUANTILE",
        default_value_t = 0.25
    )]
    pub quantile: f64,

    #[arg(long, global = true, env = "DSCMETRICS_FORMAT", default_value = "csv")]
    pub format: OutputFormat,

    /// Output directory
    #[arg(long, global = true, env = "DSCMETRICS_OUT", default_value = ".")]
    pub out: PathBuf,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Load and check the corpus; writes validation.json
    Validate,
    /// Co-authorship distribution and committee summary tables
    Stats,
    /// Rankings, top group composition and committee shares
    Rank,
    /// Per-researcher score cards
    Score,
    /// Check one researcher against every minimum of the rule set
    Eligibility { researcher_id: String },
    /// Years needed to reach an indicator minimum
    Project {
        /// Target value (default: the rule set minimum for --kind)
        #[arg(long)]
        minimum: Option<f64>,
        /// Yearly rate; when absent it is measured on the corpus
        #[arg(long)]
        rate: Option<f64>,
        /// Committee whose top-group members set the measured rate
        #[arg(long)]
        committee: Option<Committee>,
        #[arg(long, default_value = "indexed_articles")]
        kind: IndicatorKind,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SchemeChoice {
    One(CountingScheme),
    Both,
}

impl SchemeChoice {
    pub fn schemes(self) -> Vec<CountingScheme> {
        match self {
            SchemeChoice::One(s) => vec![s],
            SchemeChoice::Both => vec![CountingScheme::Integer, CountingScheme::Fractional],
        }
    }
}

impl FromStr for SchemeChoice {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        if s == "both" {
            Ok(SchemeChoice::Both)
        } else {
            s.parse().map(SchemeChoice::One)
        }
    }
}

/// Runs a parsed command line and returns the process exit code.
pub fn run(cli: &Cli) -> u8 {
    match dispatch(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            if e.is_input_error() {
                EXIT_INPUT
            } else {
                EXIT_DOMAIN
            }
        }
    }
}

fn dispatch(cli: &Cli) -> Result<u8> {
    let g = &cli.global;
    match &cli.command {
        Command::Validate => cmd_validate(g),
        Command::Stats => cmd_stats(g),
        Command::Rank => cmd_rank(g),
        Command::Score => cmd_score(g),
        Command::Eligibility { researcher_id } => cmd_eligibility(g, researcher_id),
        Command::Project {
            minimum,
            rate,
            committee,
            kind,
        } => cmd_project(g, *minimum, *rate, *committee, *kind),
    }
}

impl GlobalArgs {
    fn corpus(&self) -> Result<Corpus> {
        let researchers = self
            .researchers
            .as_ref()
            .ok_or_else(|| Error::Usage("--researchers is required".into()))?;
        let publications = self
            .publications
            .as_ref()
            .ok_or_else(|| Error::Usage("--publications is required".into()))?;
        load_corpus(researchers, publications, self.window)
    }

    fn out_dir(&self) -> Result<&Path> {
        fs::create_dir_all(&self.out).map_err(|e| Error::io(&self.out, e))?;
        Ok(&self.out)
    }

    fn kinds(&self) -> Vec<IndicatorKind> {
        if self.kinds.is_empty() {
            DEFAULT_SCORING_KINDS.to_vec()
        } else {
            self.kinds.clone()
        }
    }

    fn schemes(&self, default: SchemeChoice) -> Vec<CountingScheme> {
        self.scheme.unwrap_or(default).schemes()
    }
}

fn emit(dir: &Path, stem: &str, table: &Table, format: OutputFormat) -> Result<()> {
    let path = table.write(dir, stem, format)?;
    println!("{}", path.display());
    Ok(())
}

fn cmd_validate(g: &GlobalArgs) -> Result<u8> {
    let corpus = g.corpus()?;
    let report = validate_corpus(&corpus);
    let dir = g.out_dir()?;
    let path = dir.join("validation.json");
    let json = json_string(&serde_json::to_value(&report).expect("report serializes"));
    fs::write(&path, json).map_err(|e| Error::io(&path, e))?;
    println!("{}", path.display());
    eprintln!(
        "{} fatal, {} warnings",
        report.fatal().count(),
        report.warnings().count()
    );
    Ok(if report.has_fatal() {
        EXIT_DOMAIN
    } else {
        EXIT_OK
    })
}

fn cmd_stats(g: &GlobalArgs) -> Result<u8> {
    let corpus = g.corpus()?;
    let dist = coauthorship_distribution(&corpus)?;
    let summary = committee_summary(&corpus)?;
    let dir = g.out_dir()?;
    match g.format {
        OutputFormat::Plotdata => {
            emit(
                dir,
                "coauthorship_plot",
                &report::coauthorship_plot(&dist),
                g.format,
            )?;
        }
        format => {
            emit(
                dir,
                "coauthorship",
                &report::coauthorship_table(&dist),
                format,
            )?;
            emit(
                dir,
                "coauthorship_overall",
                &report::coauthorship_overall_table(&dist),
                format,
            )?;
            emit(
                dir,
                "committee_summary",
                &report::summary_table(&summary),
                format,
            )?;
        }
    }
    Ok(EXIT_OK)
}

fn cmd_rank(g: &GlobalArgs) -> Result<u8> {
    let corpus = g.corpus()?;
    let ruleset = RuleSet::resolve(&g.ruleset)?;
    let kinds = g.kinds();
    let schemes = g.schemes(SchemeChoice::Both);
    let dir = g.out_dir()?;

    // plotdata mode keeps rankings as plain CSV and replaces the two
    // composition tables with one tidy file
    let table_format = match g.format {
        OutputFormat::Plotdata => OutputFormat::Csv,
        f => f,
    };

    let rankings: Vec<Ranking> = schemes
        .iter()
        .map(|&s| rank_researchers(&corpus, s, &kinds, &ruleset))
        .collect::<Result<_>>()?;

    let mut plot_groups = Vec::new();
    for ranking in &rankings {
        let s = ranking.scheme;
        let top = select_top_quantile(ranking, g.quantile)?;
        let comp = composition(top, &corpus);
        let share = committee_share_of_top(top, &corpus);
        for c in &share.omitted {
            eprintln!("warning: committee {c} has no members; share omitted");
        }

        emit(
            dir,
            &format!("ranking_{s}"),
            &report::ranking_table(ranking),
            table_format,
        )?;
        let top_ranking = Ranking {
            scheme: s,
            entries: top.to_vec(),
        };
        emit(
            dir,
            &format!("top_{s}"),
            &report::ranking_table(&top_ranking),
            table_format,
        )?;
        if g.format == OutputFormat::Plotdata {
            plot_groups.push((s, comp, share));
        } else {
            emit(
                dir,
                &format!("composition_{s}"),
                &report::composition_table(&comp),
                g.format,
            )?;
            emit(
                dir,
                &format!("share_{s}"),
                &report::share_table(&share),
                g.format,
            )?;
        }
    }

    if !plot_groups.is_empty() {
        let refs: Vec<_> = plot_groups.iter().map(|(s, c, sh)| (*s, c, sh)).collect();
        emit(
            dir,
            "composition_plot",
            &report::composition_plot(&refs),
            OutputFormat::Plotdata,
        )?;
    }

    if let [baseline, alternative, ..] = rankings.as_slice() {
        let delta = scheme_delta(
            (baseline.scheme, select_top_quantile(baseline, g.quantile)?),
            (
                alternative.scheme,
                select_top_quantile(alternative, g.quantile)?,
            ),
            &corpus,
        );
        emit(dir, "delta", &report::delta_table(&delta), table_format)?;
    }
    Ok(EXIT_OK)
}

fn cmd_score(g: &GlobalArgs) -> Result<u8> {
    let corpus = g.corpus()?;
    let ruleset = RuleSet::resolve(&g.ruleset)?;
    let kinds = g.kinds();
    let dir = g.out_dir()?;
    let format = match g.format {
        OutputFormat::Plotdata => OutputFormat::Csv,
        f => f,
    };
    for scheme in g.schemes(SchemeChoice::One(CountingScheme::Integer)) {
        let cards = corpus
            .researchers()
            .iter()
            .map(|r| {
                Ok((
                    r.committee,
                    score_researcher(r, &corpus, scheme, &kinds, &ruleset)?,
                ))
            })
            .collect::<Result<Vec<_>>>()?;
        emit(
            dir,
            &format!("scores_{scheme}"),
            &report::scores_table(&cards, &kinds),
            format,
        )?;
    }
    Ok(EXIT_OK)
}

fn cmd_eligibility(g: &GlobalArgs, researcher_id: &str) -> Result<u8> {
    let corpus = g.corpus()?;
    let ruleset = RuleSet::resolve(&g.ruleset)?;
    let researcher = corpus
        .researcher(researcher_id)
        .ok_or_else(|| Error::UnknownResearcher(researcher_id.to_string()))?;
    let scheme = match g.scheme {
        None => CountingScheme::Integer,
        Some(SchemeChoice::One(s)) => s,
        Some(SchemeChoice::Both) => {
            return Err(Error::Usage("eligibility takes a single --scheme".into()))
        }
    };
    let report = check_eligibility(researcher, &corpus, &ruleset, scheme)?;

    let dir = g.out_dir()?;
    let stem = format!("eligibility_{researcher_id}");
    match g.format {
        OutputFormat::Json => {
            let path = dir.join(format!("{stem}.json"));
            fs::write(&path, report::eligibility_json(&report)).map_err(|e| Error::io(&path, e))?;
            println!("{}", path.display());
        }
        _ => emit(
            dir,
            &stem,
            &report::eligibility_table(&report),
            OutputFormat::Csv,
        )?,
    }

    if report.eligible {
        eprintln!("{researcher_id}: eligible under {}", ruleset.name);
        Ok(EXIT_OK)
    } else {
        let failing: Vec<&str> = report.failing_kinds().map(IndicatorKind::as_str).collect();
        eprintln!(
            "{researcher_id}: rejected under {} (below minimum: {})",
            ruleset.name,
            failing.join(", ")
        );
        Ok(EXIT_DOMAIN)
    }
}

fn cmd_project(
    g: &GlobalArgs,
    minimum: Option<f64>,
    rate: Option<f64>,
    committee: Option<Committee>,
    kind: IndicatorKind,
) -> Result<u8> {
    let minimum = match minimum {
        Some(m) => m,
        None => RuleSet::resolve(&g.ruleset)?.require(kind)?,
    };
    let scheme = match g.scheme {
        None => CountingScheme::Integer,
        Some(SchemeChoice::One(s)) => s,
        Some(SchemeChoice::Both) => {
            return Err(Error::Usage("project takes a single --scheme".into()))
        }
    };

    let rate = match (rate, committee) {
        (Some(r), _) => r,
        (None, Some(committee)) => {
            let corpus = g.corpus()?;
            let ruleset = RuleSet::resolve(&g.ruleset)?;
            let ranking = rank_researchers(&corpus, scheme, &g.kinds(), &ruleset)?;
            let top = select_top_quantile(&ranking, g.quantile)?;
            let ids = top.iter().map(|e| e.researcher_id.as_str());
            mean_annual_rate(&corpus, ids, committee, kind, scheme)?.ok_or_else(|| {
                Error::Usage(format!("no top-group members in committee {committee}"))
            })?
        }
        (None, None) => return Err(Error::Usage("pass --rate or --committee".into())),
    };
    let years = years_to_threshold(minimum, rate)?;

    let mut t = Table::new(["kind", "minimum", "annual_rate", "years"]);
    t.push(vec![
        report::Cell::text(kind.as_str()),
        report::Cell::score(minimum),
        report::Cell::score(rate),
        report::Cell::Dec(years, 1),
    ]);
    let format = match g.format {
        OutputFormat::Plotdata => OutputFormat::Csv,
        f => f,
    };
    let dir = g.out_dir()?;
    emit(dir, "projection", &t, format)?;
    eprintln!(
        "{} years to reach {} {kind} at {} per year",
        format_decimal(years, 1),
        format_decimal(minimum, 2),
        format_decimal(rate, 2)
    );
    Ok(EXIT_OK)
}
