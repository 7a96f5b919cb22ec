//! Machine-readable reports.
//!
//! Exact counts are carried as decimal strings so no consumer ever sees a
//! rounded big integer. Reals are cut to 10 significant digits before
//! serialisation; text tables truncate to 4 decimals.

use std::fmt::Write as _;

use rmatch_core::asymptotics::{truncate_decimals, ClosedFormMatch, ConstantsRecord, GrowthConstant};
use rmatch_core::extremal::{SearchReport, TransformOutcome};
use rmatch_core::{BigCount, CanonicalCode};
use serde::Serialize;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, clap::ValueEnum)]
pub enum Format {
    #[default]
    Text,
    Json,
    Csv,
}

/// Rounds to 10 significant digits.
pub fn sig10(x: f64) -> f64 {
    if !x.is_finite() || x == 0.0 {
        return x;
    }
    format!("{x:.9e}").parse().expect("formatted float parses")
}

fn sig10_opt(x: f64) -> Option<f64> {
    x.is_finite().then(|| sig10(x))
}

fn codes(list: &[CanonicalCode]) -> Vec<String> {
    list.iter().map(ToString::to_string).collect()
}

pub trait Report: Serialize {
    fn text(&self) -> String;
    fn csv(&self) -> String;

    fn render(&self, format: Format) -> String {
        match format {
            Format::Text => self.text(),
            Format::Csv => self.csv(),
            Format::Json => {
                let mut s = serde_json::to_string_pretty(self).expect("report serialises");
                s.push('\n');
                s
            }
        }
    }
}

fn csv_rows<R: Serialize>(rows: impl IntoIterator<Item = R>) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    for row in rows {
        w.serialize(row).expect("in-memory csv");
    }
    String::from_utf8(w.into_inner().expect("in-memory csv")).expect("utf-8 csv")
}

#[derive(Debug, Clone, Serialize)]
pub struct CountReport {
    pub r: u32,
    pub n: usize,
    pub method: &'static str,
    pub count: String,
}

impl CountReport {
    pub fn new(r: u32, n: usize, brute_force: bool, count: &BigCount) -> Self {
        CountReport {
            r,
            n,
            method: if brute_force { "brute-force" } else { "dp" },
            count: count.to_string(),
        }
    }
}

impl Report for CountReport {
    fn text(&self) -> String {
        format!("{}\n", self.count)
    }

    fn csv(&self) -> String {
        csv_rows([self])
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct PathSeriesReport {
    pub r: u32,
    pub n_max: usize,
    /// `values[n]` for `n = 0..=n_max`.
    pub values: Vec<String>,
}

impl PathSeriesReport {
    pub fn new(r: u32, values: &[BigCount]) -> Self {
        PathSeriesReport {
            r,
            n_max: values.len() - 1,
            values: values.iter().map(ToString::to_string).collect(),
        }
    }
}

impl Report for PathSeriesReport {
    fn text(&self) -> String {
        let mut out = String::new();
        for (n, v) in self.values.iter().enumerate() {
            writeln!(out, "{n}\t{v}").unwrap();
        }
        out
    }

    fn csv(&self) -> String {
        let mut out = String::from("n,s_r(P_n)\n");
        for (n, v) in self.values.iter().enumerate() {
            writeln!(out, "{n},{v}").unwrap();
        }
        out
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct ConstantsRow {
    pub r: u32,
    pub s: f64,
    pub alpha: f64,
    pub beta: f64,
    pub a: usize,
    pub spider_growth: f64,
    pub c_empirical: f64,
    pub c_paper: f64,
    pub c_alt: f64,
}

impl From<&ConstantsRecord> for ConstantsRow {
    fn from(rec: &ConstantsRecord) -> Self {
        ConstantsRow {
            r: rec.r,
            s: sig10(rec.s),
            alpha: sig10(rec.alpha),
            beta: sig10(rec.beta),
            a: rec.best_a,
            spider_growth: sig10(rec.spider_growth),
            c_empirical: sig10(rec.c_empirical),
            c_paper: sig10(rec.c_paper),
            c_alt: sig10(rec.c_alt),
        }
    }
}

const TABLE_HEADER: &str = " r       s   alpha    beta   a  growth\n";

fn table_line(out: &mut String, row: &ConstantsRow) {
    let t = |x| truncate_decimals(x, 4);
    writeln!(
        out,
        "{:>2}  {:.4}  {:.4}  {:.4}  {:>2}  {:.4}",
        row.r,
        t(row.s),
        t(row.alpha),
        t(row.beta),
        row.a,
        t(row.spider_growth)
    )
    .unwrap();
}

#[derive(Debug, Clone, Serialize)]
pub struct TableReport {
    pub rows: Vec<ConstantsRow>,
}

impl Report for TableReport {
    fn text(&self) -> String {
        let mut out = String::from(TABLE_HEADER);
        for row in &self.rows {
            table_line(&mut out, row);
        }
        out
    }

    fn csv(&self) -> String {
        csv_rows(&self.rows)
    }
}

fn form_name(m: ClosedFormMatch) -> &'static str {
    match m {
        ClosedFormMatch::Paper => "beta^(2r)/(beta^r+r+1)",
        ClosedFormMatch::Alt => "beta^(2r+1)/(beta^r+r+1)",
        ClosedFormMatch::Both => "both",
        ClosedFormMatch::Neither => "neither",
    }
}

/// Tolerance for deciding which closed form the empirical ratio matches.
pub const FORM_TOL: f64 = 1e-6;

#[derive(Debug, Clone, Serialize)]
pub struct ConstantsReport {
    #[serde(flatten)]
    pub row: ConstantsRow,
    pub n_probe: usize,
    pub matching_form: &'static str,
}

impl ConstantsReport {
    pub fn new(rec: &ConstantsRecord, growth: &GrowthConstant) -> Self {
        ConstantsReport {
            row: rec.into(),
            n_probe: growth.n_probe,
            matching_form: form_name(growth.matching_form(FORM_TOL)),
        }
    }
}

impl Report for ConstantsReport {
    fn text(&self) -> String {
        let mut out = String::from(TABLE_HEADER);
        table_line(&mut out, &self.row);
        let row = &self.row;
        writeln!(out, "C_r empirical (n = {}): {}", self.n_probe, row.c_empirical).unwrap();
        writeln!(out, "  beta^(2r)/(beta^r+r+1)   = {}", row.c_paper).unwrap();
        writeln!(out, "  beta^(2r+1)/(beta^r+r+1) = {}", row.c_alt).unwrap();
        writeln!(out, "  matching form: {}", self.matching_form).unwrap();
        out
    }

    fn csv(&self) -> String {
        let r = &self.row;
        let mut out =
            String::from("r,s,alpha,beta,a,spider_growth,c_empirical,c_paper,c_alt,n_probe,matching_form\n");
        writeln!(
            out,
            "{},{},{},{},{},{},{},{},{},{},{}",
            r.r,
            r.s,
            r.alpha,
            r.beta,
            r.a,
            r.spider_growth,
            r.c_empirical,
            r.c_paper,
            r.c_alt,
            self.n_probe,
            self.matching_form
        )
        .unwrap();
        out
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct SpiderReport {
    pub r: u32,
    pub a: usize,
    /// Legs of the spider that was counted; the witness when searching.
    pub b: Option<usize>,
    pub b_max: Option<usize>,
    pub n: Option<usize>,
    pub spider_count: Option<String>,
    pub path_count: Option<String>,
    pub spider_beats_path: bool,
    pub growth_estimate: Option<f64>,
    pub leg_growth: f64,
}

impl Report for SpiderReport {
    fn text(&self) -> String {
        let mut out = String::new();
        match (self.b_max, self.b) {
            (Some(b_max), None) => {
                writeln!(out, "no b <= {b_max} with spider({}, b) beating the path", self.a).unwrap()
            }
            (Some(_), Some(b)) => writeln!(out, "witness b = {b}").unwrap(),
            _ => {}
        }
        if let (Some(b), Some(n), Some(sc), Some(pc)) = (self.b, self.n, &self.spider_count, &self.path_count) {
            writeln!(out, "spider({}, {b}) on {n} vertices: {sc}", self.a).unwrap();
            writeln!(out, "path on {n} vertices: {pc}").unwrap();
        }
        if let Some(g) = self.growth_estimate {
            writeln!(out, "per-edge growth: {g}").unwrap();
        }
        writeln!(out, "limiting leg growth: {}", self.leg_growth).unwrap();
        out
    }

    fn csv(&self) -> String {
        csv_rows([self])
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct SearchReportDto {
    pub n: usize,
    pub r: u32,
    pub max_count: String,
    pub min_count: String,
    pub argmax_codes: Vec<String>,
    pub argmin_codes: Vec<String>,
    pub path_count: String,
    pub path_is_max: bool,
    pub trees_examined: u64,
}

impl From<&SearchReport> for SearchReportDto {
    fn from(rep: &SearchReport) -> Self {
        SearchReportDto {
            n: rep.n,
            r: rep.r,
            max_count: rep.max_count.to_string(),
            min_count: rep.min_count.to_string(),
            argmax_codes: codes(&rep.argmax_codes),
            argmin_codes: codes(&rep.argmin_codes),
            path_count: rep.path_count.to_string(),
            path_is_max: rep.path_is_max,
            trees_examined: rep.trees_examined,
        }
    }
}

#[derive(Serialize)]
struct SearchCsvRow<'a> {
    n: usize,
    r: u32,
    max: &'a str,
    min: &'a str,
    path_count: &'a str,
    path_is_max: bool,
    trees_examined: u64,
}

impl<'a> From<&'a SearchReportDto> for SearchCsvRow<'a> {
    fn from(d: &'a SearchReportDto) -> Self {
        SearchCsvRow {
            n: d.n,
            r: d.r,
            max: &d.max_count,
            min: &d.min_count,
            path_count: &d.path_count,
            path_is_max: d.path_is_max,
            trees_examined: d.trees_examined,
        }
    }
}

fn search_text(out: &mut String, d: &SearchReportDto) {
    writeln!(
        out,
        "n = {}, r = {}: {} trees, max {} ({} class{}), min {} ({} class{}), path {}{}",
        d.n,
        d.r,
        d.trees_examined,
        d.max_count,
        d.argmax_codes.len(),
        if d.argmax_codes.len() == 1 { "" } else { "es" },
        d.min_count,
        d.argmin_codes.len(),
        if d.argmin_codes.len() == 1 { "" } else { "es" },
        d.path_count,
        if d.path_is_max { " = max" } else { " < max" },
    )
    .unwrap();
    for code in &d.argmax_codes {
        writeln!(out, "  argmax {code}").unwrap();
    }
}

impl Report for SearchReportDto {
    fn text(&self) -> String {
        let mut out = String::new();
        search_text(&mut out, self);
        out
    }

    fn csv(&self) -> String {
        csv_rows([SearchCsvRow::from(self)])
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct ProbeReport {
    pub r: u32,
    pub n_max: usize,
    pub reports: Vec<SearchReportDto>,
    /// Orders at which some tree beats the path.
    pub path_beaten_at: Vec<usize>,
}

impl ProbeReport {
    pub fn new(r: u32, n_max: usize, reports: &[SearchReport]) -> Self {
        ProbeReport {
            r,
            n_max,
            reports: reports.iter().map(Into::into).collect(),
            path_beaten_at: reports.iter().filter(|s| !s.path_is_max).map(|s| s.n).collect(),
        }
    }
}

impl Report for ProbeReport {
    fn text(&self) -> String {
        let mut out = String::new();
        for d in &self.reports {
            search_text(&mut out, d);
        }
        if self.path_beaten_at.is_empty() {
            writeln!(out, "path attains the maximum for every n <= {}", self.n_max).unwrap();
        } else {
            writeln!(out, "path is beaten at n = {:?}", self.path_beaten_at).unwrap();
        }
        out
    }

    fn csv(&self) -> String {
        csv_rows(self.reports.iter().map(SearchCsvRow::from))
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct BoundsReport {
    pub r: u32,
    pub n: usize,
    pub s: f64,
    pub alpha: f64,
    pub ln_upper_bound: f64,
    pub ln_lower_bound: f64,
    /// `None` when the value overflows a double.
    pub upper_bound: Option<f64>,
    pub lower_bound: Option<f64>,
    pub path_count: String,
}

impl BoundsReport {
    pub fn new(r: u32, n: usize, s: f64, alpha: f64, ln_ub: f64, ln_lb: f64, path: &BigCount) -> Self {
        BoundsReport {
            r,
            n,
            s: sig10(s),
            alpha: sig10(alpha),
            ln_upper_bound: sig10(ln_ub),
            ln_lower_bound: sig10(ln_lb),
            upper_bound: sig10_opt(ln_ub.exp()),
            lower_bound: sig10_opt(ln_lb.exp()),
            path_count: path.to_string(),
        }
    }
}

impl Report for BoundsReport {
    fn text(&self) -> String {
        let show = |v: Option<f64>, ln: f64| v.map_or(format!("exp({ln})"), |v| v.to_string());
        format!(
            "r = {}, n = {}, s = {}, alpha = {}\nupper bound: {}\nlower bound: {}\npath count: {}\n",
            self.r,
            self.n,
            self.s,
            self.alpha,
            show(self.upper_bound, self.ln_upper_bound),
            show(self.lower_bound, self.ln_lower_bound),
            self.path_count
        )
    }

    fn csv(&self) -> String {
        csv_rows([self])
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct TransformReport {
    pub r: u32,
    pub applicable: bool,
    pub reason: Option<String>,
    pub input_code: String,
    pub output_code: Option<String>,
    pub input_count: String,
    pub output_count: Option<String>,
    pub strict: Option<bool>,
    /// Output tree in the tree file format.
    pub output_tree: Option<String>,
}

impl TransformReport {
    pub fn applied(r: u32, out: &TransformOutcome) -> Self {
        TransformReport {
            r,
            applicable: true,
            reason: None,
            input_code: out.input_code.to_string(),
            output_code: Some(out.output_code.to_string()),
            input_count: out.input_count.to_string(),
            output_count: Some(out.output_count.to_string()),
            strict: Some(out.strict),
            output_tree: Some(crate::io::format_tree(&out.output)),
        }
    }

    pub fn not_applicable(r: u32, code: &CanonicalCode, count: &BigCount, reason: String) -> Self {
        TransformReport {
            r,
            applicable: false,
            reason: Some(reason),
            input_code: code.to_string(),
            output_code: None,
            input_count: count.to_string(),
            output_count: None,
            strict: None,
            output_tree: None,
        }
    }
}

impl Report for TransformReport {
    fn text(&self) -> String {
        match (&self.output_count, &self.output_tree) {
            (Some(oc), Some(tree)) => format!(
                "{} -> {}{}\n{}",
                self.input_count,
                oc,
                if self.strict == Some(true) { " (strict)" } else { "" },
                tree
            ),
            _ => format!(
                "not applicable: {}\n",
                self.reason.as_deref().unwrap_or("unknown")
            ),
        }
    }

    fn csv(&self) -> String {
        #[derive(Serialize)]
        struct Row<'a> {
            r: u32,
            applicable: bool,
            input_code: &'a str,
            output_code: Option<&'a str>,
            input_count: &'a str,
            output_count: Option<&'a str>,
            strict: Option<bool>,
        }
        csv_rows([Row {
            r: self.r,
            applicable: self.applicable,
            input_code: &self.input_code,
            output_code: self.output_code.as_deref(),
            input_count: &self.input_count,
            output_count: self.output_count.as_deref(),
            strict: self.strict,
        }])
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

#[derive(Debug, Clone, Serialize)]
pub struct VerifyReport {
    pub suite: String,
    pub passed: bool,
    pub checks: Vec<Check>,
}

impl VerifyReport {
    pub fn new(suite: &str, checks: Vec<Check>) -> Self {
        VerifyReport {
            suite: suite.to_owned(),
            passed: checks.iter().all(|c| c.passed),
            checks,
        }
    }
}

impl Report for VerifyReport {
    fn text(&self) -> String {
        let mut out = String::new();
        for c in &self.checks {
            let tag = if c.passed { "PASS" } else { "FAIL" };
            writeln!(out, "{tag} {}: {}", c.name, c.detail).unwrap();
        }
        let failed = self.checks.iter().filter(|c| !c.passed).count();
        writeln!(
            out,
            "{}: {} of {} checks passed",
            self.suite,
            self.checks.len() - failed,
            self.checks.len()
        )
        .unwrap();
        out
    }

    fn csv(&self) -> String {
        csv_rows(&self.checks)
    }
}
