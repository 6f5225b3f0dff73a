//! The `zcz` command-line frontend.
//!
//! ```text
//! zcz generate --construction {zcz|frank} --n <int> --variant {floor|ceiling} --d <int> --format {json|csv} --out <path>
//! zcz profile  --in <path> --method {direct|transform} --tol <real> --out <path>
//! zcz verify   --n-min <int> --n-max <int> --variant {floor|ceiling} --tol <real> --report <path>
//! ```
//!
//! Sequence files come in two formats. JSON:
//!
//! ```text
//! {"modulus":6,"exponents":[0,0,0,1,...],"meta":{"construction":"zcz","n":0,"variant":"floor"}}
//! ```
//!
//! CSV, with the modulus on a leading comment line:
//!
//! ```text
//! # modulus=6
//! index,exponent
//! 0,0
//! ...
//! ```

use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::analysis::{verify_zcz_claims, ClaimReport};
use crate::aop::AopReport;
use crate::construction::{
    build_frank_sequence, build_zcz_array, build_zcz_sequence, RoundingVariant, Sequence,
    MAX_SUPPORTED_N,
};
use crate::correlation::{auto_profile, CorrelationMethod, CorrelationProfile, Tolerance};
use crate::error::{Error, Result};

#[derive(Debug, Parser)]
#[command(
    name = "zcz",
    version,
    about = "Periodic ZCZ sequences over roots of unity"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Write a ZCZ or Frank sequence to a file.
    Generate(GenerateArgs),
    /// Autocorrelation profile of a sequence file, as CSV.
    Profile(ProfileArgs),
    /// Check the off-peak claims and both AOP conditions over a range of n.
    Verify(VerifyArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Construction {
    Zcz,
    Frank,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum FileFormat {
    Json,
    Csv,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum VariantArg {
    Floor,
    Ceiling,
}

impl From<VariantArg> for RoundingVariant {
    fn from(v: VariantArg) -> Self {
        match v {
            VariantArg::Floor => RoundingVariant::Floor,
            VariantArg::Ceiling => RoundingVariant::Ceiling,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum MethodArg {
    Direct,
    Transform,
}

impl From<MethodArg> for CorrelationMethod {
    fn from(m: MethodArg) -> Self {
        match m {
            MethodArg::Direct => CorrelationMethod::Direct,
            MethodArg::Transform => CorrelationMethod::Transform,
        }
    }
}

#[derive(Debug, clap::Args)]
pub struct GenerateArgs {
    #[arg(long, value_enum, default_value = "zcz")]
    pub construction: Construction,
    #[arg(long, allow_hyphen_values = true)]
    pub n: Option<i64>,
    #[arg(long, value_enum, default_value = "floor")]
    pub variant: VariantArg,
    #[arg(long, allow_hyphen_values = true)]
    pub d: Option<i64>,
    #[arg(long, value_enum, default_value = "json")]
    pub format: FileFormat,
    /// Output path; stdout when omitted.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, clap::Args)]
pub struct ProfileArgs {
    #[arg(long = "in")]
    pub input: PathBuf,
    #[arg(long, value_enum, default_value = "direct")]
    pub method: MethodArg,
    /// Absolute zero threshold; defaults to 1e-9 * L.
    #[arg(long)]
    pub tol: Option<f64>,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, clap::Args)]
pub struct VerifyArgs {
    #[arg(long, default_value_t = 0, allow_hyphen_values = true)]
    pub n_min: i64,
    #[arg(long, default_value_t = 10, allow_hyphen_values = true)]
    pub n_max: i64,
    #[arg(long, value_enum, default_value = "floor")]
    pub variant: VariantArg,
    /// Absolute zero threshold; defaults to 1e-9 * L (sequences) and 1e-9 * R (array columns).
    #[arg(long)]
    pub tol: Option<f64>,
    #[arg(long)]
    pub report: Option<PathBuf>,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct SequenceMeta {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub construction: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub n: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub variant: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub d: Option<u64>,
}

/// On-disk form of a sequence.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SequenceFile {
    pub modulus: u64,
    pub exponents: Vec<u64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub meta: Option<SequenceMeta>,
}

const CSV_MODULUS_PREFIX: &str = "# modulus=";

impl SequenceFile {
    pub fn from_sequence(sequence: &Sequence, meta: Option<SequenceMeta>) -> Self {
        Self {
            modulus: sequence.modulus(),
            exponents: sequence.exponents().to_vec(),
            meta,
        }
    }

    pub fn to_sequence(&self) -> Result<Sequence> {
        Sequence::new(self.modulus, self.exponents.clone())
    }

    pub fn to_json(&self) -> Result<String> {
        let mut s = serde_json::to_string(self)?;
        s.push('\n');
        Ok(s)
    }

    pub fn to_csv(&self) -> Result<String> {
        let mut out = format!("{CSV_MODULUS_PREFIX}{}\n", self.modulus);
        let mut writer = csv::Writer::from_writer(Vec::new());
        writer.write_record(["index", "exponent"])?;
        for (i, e) in self.exponents.iter().enumerate() {
            writer.serialize((i, e))?;
        }
        let body = writer.into_inner().map_err(|e| Error::Io(e.into_error()))?;
        out.push_str(std::str::from_utf8(&body).expect("csv output is ascii"));
        Ok(out)
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let file: SequenceFile = serde_json::from_str(text)?;
        file.validate()?;
        Ok(file)
    }

    pub fn from_csv(text: &str) -> Result<Self> {
        let mut lines = text.lines();
        let first = lines.next().unwrap_or_default().trim();
        let modulus: u64 = first
            .strip_prefix(CSV_MODULUS_PREFIX)
            .ok_or_else(|| {
                Error::Format(format!(
                    "expected `{CSV_MODULUS_PREFIX}N` on the first line"
                ))
            })?
            .trim()
            .parse()
            .map_err(|e| Error::Format(format!("bad modulus: {e}")))?;
        let rest = &text[text.find('\n').map_or(text.len(), |p| p + 1)..];
        let mut reader = csv::ReaderBuilder::new()
            .trim(csv::Trim::All)
            .from_reader(rest.as_bytes());
        let headers = reader.headers()?.clone();
        if headers.iter().collect::<Vec<_>>() != ["index", "exponent"] {
            return Err(Error::Format("expected header `index,exponent`".into()));
        }
        let mut exponents = Vec::new();
        for (row, record) in reader.deserialize::<(usize, u64)>().enumerate() {
            let (index, exponent) = record?;
            if index != row {
                return Err(Error::Format(format!("row {row} has index {index}")));
            }
            exponents.push(exponent);
        }
        let file = SequenceFile {
            modulus,
            exponents,
            meta: None,
        };
        file.validate()?;
        Ok(file)
    }

    /// Detects the format from the first non-blank character.
    pub fn parse(text: &str) -> Result<Self> {
        if text.trim_start().starts_with('{') {
            Self::from_json(text)
        } else {
            Self::from_csv(text)
        }
    }

    pub fn load(path: &Path) -> Result<Self> {
        Self::parse(&fs::read_to_string(path)?)
    }

    fn validate(&self) -> Result<()> {
        self.to_sequence().map(|_| ())
    }
}

fn write_output(out: Option<&Path>, contents: &str) -> Result<()> {
    match out {
        Some(path) => fs::write(path, contents)?,
        None => io::stdout().lock().write_all(contents.as_bytes())?,
    }
    Ok(())
}

fn non_negative(name: &str, value: Option<i64>) -> Result<u64> {
    match value {
        None => Err(Error::InvalidArgument(format!("--{name} is required"))),
        Some(v) if v < 0 => Err(Error::InvalidArgument(format!(
            "--{name} must be non-negative, got {v}"
        ))),
        Some(v) => Ok(v as u64),
    }
}

/// Builds the requested sequence and renders it in the requested format.
pub fn generate(args: &GenerateArgs) -> Result<String> {
    let file = match args.construction {
        Construction::Zcz => {
            let n = non_negative("n", args.n)?;
            let variant = RoundingVariant::from(args.variant);
            let sequence = build_zcz_sequence(n, variant)?;
            SequenceFile::from_sequence(
                &sequence,
                Some(SequenceMeta {
                    construction: Some("zcz".into()),
                    n: Some(n),
                    variant: Some(variant.to_string()),
                    d: None,
                }),
            )
        }
        Construction::Frank => {
            let d = non_negative("d", args.d)?;
            if d == 0 {
                return Err(Error::ZeroDivisor);
            }
            let sequence = build_frank_sequence(d as usize)?;
            SequenceFile::from_sequence(
                &sequence,
                Some(SequenceMeta {
                    construction: Some("frank".into()),
                    d: Some(d),
                    ..SequenceMeta::default()
                }),
            )
        }
    };
    match args.format {
        FileFormat::Json => file.to_json(),
        FileFormat::Csv => file.to_csv(),
    }
}

pub fn cmd_generate(args: &GenerateArgs) -> Result<()> {
    let text = generate(args)?;
    write_output(args.out.as_deref(), &text)
}

/// Renders a profile as `shift,re,im,abs,is_zero` CSV.
pub fn profile_csv(profile: &CorrelationProfile) -> Result<String> {
    let mut writer = csv::Writer::from_writer(Vec::new());
    writer.write_record(["shift", "re", "im", "abs", "is_zero"])?;
    let tol = profile.tolerance();
    for (shift, v) in profile.values().iter().enumerate() {
        let abs = v.norm();
        writer.serialize((shift, v.re, v.im, abs, abs < tol))?;
    }
    let bytes = writer.into_inner().map_err(|e| Error::Io(e.into_error()))?;
    Ok(String::from_utf8(bytes).expect("csv output is ascii"))
}

pub fn profile(args: &ProfileArgs) -> Result<String> {
    let sequence = SequenceFile::load(&args.input)?.to_sequence()?;
    let tol = args
        .tol
        .map_or_else(Tolerance::default, Tolerance::Absolute);
    let profile = auto_profile(&sequence, args.method.into()).with_tolerance(tol);
    profile_csv(&profile)
}

pub fn cmd_profile(args: &ProfileArgs) -> Result<()> {
    let text = profile(args)?;
    write_output(args.out.as_deref(), &text)
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct AopSummary {
    pub condition1_holds: bool,
    pub condition1_violation_count: usize,
    pub condition2_exceptions: Vec<usize>,
    pub expected_exceptions: Vec<usize>,
    pub condition2_match: bool,
    pub report: AopReport,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct VerifyEntry {
    pub n: u64,
    pub passed: bool,
    pub claims: ClaimReport,
    pub aop: AopSummary,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct VerifyReport {
    pub variant: RoundingVariant,
    pub tolerance: Tolerance,
    pub passed: bool,
    pub results: Vec<VerifyEntry>,
}

fn verify_one(n: u64, variant: RoundingVariant, tol: Option<f64>) -> Result<VerifyEntry> {
    let tol = tol.map_or_else(Tolerance::default, Tolerance::Absolute);
    let claims = verify_zcz_claims(n, variant, tol)?;
    let array = build_zcz_array(n, variant)?;
    let report = AopReport::evaluate(&array, tol);
    let unit = (2 * n + 1) as usize;
    let expected_exceptions = vec![3 * unit, 9 * unit];
    let condition2_exceptions = report.exception_kappas();
    let aop = AopSummary {
        condition1_holds: report.condition1_holds(),
        condition1_violation_count: report.condition1_violations.len(),
        condition2_match: condition2_exceptions == expected_exceptions,
        condition2_exceptions,
        expected_exceptions,
        report,
    };
    Ok(VerifyEntry {
        n,
        passed: claims.passed() && aop.condition1_holds && aop.condition2_match,
        claims,
        aop,
    })
}

pub fn verify(args: &VerifyArgs) -> Result<VerifyReport> {
    let n_min = non_negative("n-min", Some(args.n_min))?;
    let n_max = non_negative("n-max", Some(args.n_max))?;
    if n_min > n_max {
        return Err(Error::InvalidArgument(format!(
            "--n-min {n_min} exceeds --n-max {n_max}"
        )));
    }
    if n_max > MAX_SUPPORTED_N {
        return Err(Error::UnsupportedN {
            n: n_max,
            max: MAX_SUPPORTED_N,
        });
    }
    if let Some(t) = args.tol {
        if t.is_nan() || t < 0.0 {
            return Err(Error::InvalidArgument(format!(
                "--tol must be non-negative, got {t}"
            )));
        }
    }
    let variant = RoundingVariant::from(args.variant);
    let results = (n_min..=n_max)
        .into_par_iter()
        .map(|n| verify_one(n, variant, args.tol))
        .collect::<Result<Vec<_>>>()?;
    Ok(VerifyReport {
        variant,
        tolerance: args
            .tol
            .map_or_else(Tolerance::default, Tolerance::Absolute),
        passed: results.iter().all(|r| r.passed),
        results,
    })
}

/// Runs `verify`, writes the JSON report and returns whether every check passed.
pub fn cmd_verify(args: &VerifyArgs) -> Result<bool> {
    let report = verify(args)?;
    let mut text = serde_json::to_string_pretty(&report)?;
    text.push('\n');
    write_output(args.report.as_deref(), &text)?;
    for entry in &report.results {
        eprintln!(
            "n={:<3} L={:<6} shifts={:?} value={:+.9} aop1={} aop2={:?} {}",
            entry.n,
            entry.claims.period,
            entry.claims.measured_shifts,
            entry.claims.values[0].re,
            entry.aop.condition1_holds,
            entry.aop.condition2_exceptions,
            if entry.passed { "ok" } else { "FAIL" }
        );
    }
    Ok(report.passed)
}

/// Dispatches a parsed command line; returns the process exit code.
pub fn run(cli: &Cli) -> Result<i32> {
    match &cli.command {
        Command::Generate(args) => cmd_generate(args).map(|_| 0),
        Command::Profile(args) => cmd_profile(args).map(|_| 0),
        Command::Verify(args) => cmd_verify(args).map(|ok| if ok { 0 } else { 1 }),
    }
}
