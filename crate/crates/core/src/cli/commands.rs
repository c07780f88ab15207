use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

use super::report::{
    DimensionRow, HilbertRow, HomologyRow, PatternRow, PolynomialRow, ReportDocument, SupportRow, VerificationSummary,
};
use super::spec::parse_spec;
use crate::monocech::{LocalCohomology, MonomialIdeal, SupportSweep};
use crate::verify::{random_instances, run_corpus, run_spec, sweep, two_tail_search, weyl_oracle_checks, SuiteOptions};
use crate::weylact::{derham_homology, koszul_homology_x, y_socle, CechModule, Homology};

/// Exit status for a run that completed and found nothing wrong.
pub const EXIT_OK: i32 = 0;
/// A verification check failed.
pub const EXIT_FAILED: i32 = 1;
/// Malformed input or an invalid flag combination.
pub const EXIT_INPUT: i32 = 2;

#[derive(Parser, Debug)]
#[command(name = "lclab", version, about = "Graded local cohomology of monomial ideals")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug)]
struct Common {
    /// Ideal spec file (JSON)
    spec: PathBuf,
    /// Emit a JSON report instead of text
    #[arg(long)]
    json: bool,
}

/// An inclusive degree range written `n` or `a..b`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct DegreeRange(pub i64, pub i64);

impl DegreeRange {
    fn iter(self) -> impl Iterator<Item = i64> {
        self.0..=self.1
    }
}

fn parse_int(s: &str) -> Result<i64, String> {
    s.trim()
        .replace('\u{2212}', "-")
        .parse()
        .map_err(|_| format!("not an integer: {s:?}"))
}

fn parse_range(s: &str) -> Result<DegreeRange, String> {
    match s.split_once("..") {
        Some((a, b)) => {
            let (a, b) = (parse_int(a)?, parse_int(b)?);
            if a > b {
                return Err(format!("empty range {s:?}"));
            }
            Ok(DegreeRange(a, b))
        }
        None => parse_int(s).map(|n| DegreeRange(n, n)),
    }
}

/// A comma-separated multidegree in the degree-0 variables.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Strand(pub Vec<i64>);

fn parse_strand(s: &str) -> Result<Strand, String> {
    if s.trim().is_empty() {
        return Ok(Strand(Vec::new()));
    }
    s.split(',').map(parse_int).collect::<Result<_, _>>().map(Strand)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum KoszulKind {
    Mult,
    Derham,
    Ysocle,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Degree-set shape and contributing sign patterns of H^i
    Pattern {
        #[command(flatten)]
        common: Common,
        /// Cohomological index
        #[arg(short = 'i', long = "cohomdeg", conflicts_with = "all")]
        index: Option<usize>,
        /// Every index up to the generator count (the default)
        #[arg(long)]
        all: bool,
    },
    /// dim_K of graded pieces
    Dim {
        #[command(flatten)]
        common: Common,
        #[arg(short = 'i', long = "cohomdeg")]
        index: usize,
        /// Degree or range a..b
        #[arg(short = 'n', long = "degree", allow_hyphen_values = true, value_parser = parse_range)]
        degree: DegreeRange,
        /// Comma-separated degree-0 multidegree, required when there are degree-0 variables
        #[arg(long, allow_hyphen_values = true, value_parser = parse_strand)]
        strand: Option<Strand>,
    },
    /// Hilbert polynomials of both tails
    Hilbert {
        #[command(flatten)]
        common: Common,
        #[arg(short = 'i', long = "cohomdeg")]
        index: usize,
    },
    /// Minimal primes and dimension of the support over the coefficient ring
    Support {
        #[command(flatten)]
        common: Common,
        #[arg(short = 'i', long = "cohomdeg")]
        index: usize,
        #[arg(short = 'n', long = "degree", allow_hyphen_values = true, value_parser = parse_range)]
        degree: DegreeRange,
    },
    /// Koszul, de Rham, or degree-0 socle homology of H^i
    Koszul {
        #[command(flatten)]
        common: Common,
        #[arg(short = 'i', long = "cohomdeg")]
        index: usize,
        #[arg(short = 'n', long = "degree", allow_hyphen_values = true, value_parser = parse_range)]
        degree: DegreeRange,
        #[arg(long, value_enum, default_value = "mult")]
        kind: KoszulKind,
        /// Degree-1 variable, required for mult and derham
        #[arg(long)]
        var: Option<String>,
    },
    /// Run the verification harness
    Verify {
        /// Ideal spec file; its "expect" list is checked too
        spec: Option<PathBuf>,
        /// Run the built-in corpus
        #[arg(long, conflicts_with_all = ["spec", "random"])]
        corpus: bool,
        /// Run the suite on this many seeded random ideals
        #[arg(long, conflicts_with = "spec")]
        random: Option<usize>,
        #[arg(long, default_value_t = 1, requires = "random")]
        seed: u64,
        /// Largest d + m for random ideals
        #[arg(long, default_value_t = 7, requires = "random")]
        max_vars: usize,
        #[arg(long)]
        json: bool,
    },
}

struct Failure(i32, String);

fn input_error(msg: impl Into<String>) -> Failure {
    Failure(EXIT_INPUT, msg.into())
}

fn load(common: &Common) -> Result<MonomialIdeal, Failure> {
    parse_spec(&common.spec)
        .map(|(_, ideal)| ideal)
        .map_err(|e| input_error(format!("{}: {e}", common.spec.display())))
}

fn x_var(ideal: &MonomialIdeal, name: Option<&str>) -> Result<usize, Failure> {
    let name = name.ok_or_else(|| input_error("--var is required for mult and derham"))?;
    let ctx = ideal.context();
    match ctx.index_of(name) {
        Some(v) if ctx.is_x(v) => Ok(v),
        Some(_) => Err(input_error(format!(
            "{name} is a degree-0 variable; --var needs a degree-1 variable"
        ))),
        None => Err(input_error(format!("unknown variable {name:?}"))),
    }
}

fn homology_row(index: usize, kind: &str, var: &str, degree: i64, h: Homology, ideal: &MonomialIdeal) -> HomologyRow {
    let ctx = ideal.context();
    let mut patterns: Vec<String> = h
        .h1_patterns
        .iter()
        .chain(&h.h0_patterns)
        .map(|s| s.display(ctx))
        .collect();
    patterns.dedup();
    HomologyRow {
        index,
        kind: kind.into(),
        var: Some(var.into()),
        degree,
        h1: Some(h.h1),
        h0: Some(h.h0),
        socle: None,
        patterns,
    }
}

fn execute(cli: Cli) -> Result<(ReportDocument, bool, i32), Failure> {
    match cli.command {
        Command::Pattern { common, index, .. } => {
            let ideal = load(&common)?;
            let lc = LocalCohomology::new(&ideal);
            let mut doc = ReportDocument::new("pattern", Some(&ideal));
            let indices: Vec<usize> = match index {
                Some(i) => vec![i],
                None => (0..=lc.max_index()).collect(),
            };
            for i in indices {
                let report = lc.pattern_report(i).map_err(|e| Failure(EXIT_FAILED, e.to_string()))?;
                doc.patterns.push(PatternRow::new(&report));
            }
            Ok((doc, common.json, EXIT_OK))
        }
        Command::Dim {
            common,
            index,
            degree,
            strand,
        } => {
            let ideal = load(&common)?;
            let lc = LocalCohomology::new(&ideal);
            let d = ideal.context().d();
            if d > 0 && strand.is_none() {
                return Err(input_error(format!("there are {d} degree-0 variables; pass --strand")));
            }
            let strand = strand.map(|s| s.0);
            let mut doc = ReportDocument::new("dim", Some(&ideal));
            for n in degree.iter() {
                let dim = match &strand {
                    Some(y) => lc.strand_dimension(index, y, n),
                    None => lc.piece_dimension(index, n),
                }
                .map_err(|e| input_error(e.to_string()))?;
                doc.dimensions.push(DimensionRow {
                    index,
                    degree: n,
                    strand: strand.clone(),
                    dim,
                });
            }
            Ok((doc, common.json, EXIT_OK))
        }
        Command::Hilbert { common, index } => {
            let ideal = load(&common)?;
            let (f, g) = LocalCohomology::new(&ideal)
                .hilbert_pair(index)
                .map_err(|e| input_error(e.to_string()))?;
            let mut doc = ReportDocument::new("hilbert", Some(&ideal));
            doc.hilbert.push(HilbertRow {
                index,
                f: PolynomialRow::new(&f),
                g: PolynomialRow::new(&g),
            });
            Ok((doc, common.json, EXIT_OK))
        }
        Command::Support { common, index, degree } => {
            let ideal = load(&common)?;
            let sweep = SupportSweep::new(&ideal);
            let mut doc = ReportDocument::new("support", Some(&ideal));
            for n in degree.iter() {
                doc.support.push(SupportRow {
                    index,
                    degree: n,
                    min_primes: sweep
                        .min_primes(index, n)
                        .iter()
                        .map(|p| p.display(ideal.context()))
                        .collect(),
                    dim: sweep.support_dim(index, n),
                });
            }
            Ok((doc, common.json, EXIT_OK))
        }
        Command::Koszul {
            common,
            index,
            degree,
            kind,
            var,
        } => {
            let ideal = load(&common)?;
            let module = CechModule::new(&ideal, index);
            let mut doc = ReportDocument::new("koszul", Some(&ideal));
            match kind {
                KoszulKind::Ysocle => {
                    if var.is_some() {
                        return Err(input_error("--var does not apply to ysocle"));
                    }
                    for n in degree.iter() {
                        let socle = y_socle(&module, n).map_err(|e| input_error(e.to_string()))?;
                        doc.homology.push(HomologyRow {
                            index,
                            kind: "ysocle".into(),
                            var: None,
                            degree: n,
                            h1: None,
                            h0: None,
                            socle: Some(socle),
                            patterns: Vec::new(),
                        });
                    }
                }
                KoszulKind::Mult | KoszulKind::Derham => {
                    let v = x_var(&ideal, var.as_deref())?;
                    let name = ideal.context().name(v).to_string();
                    for n in degree.iter() {
                        let (label, h) = if kind == KoszulKind::Mult {
                            ("mult", koszul_homology_x(&module, v, n))
                        } else {
                            ("derham", derham_homology(&module, v, n))
                        };
                        let h = h.map_err(|e| input_error(e.to_string()))?;
                        doc.homology.push(homology_row(index, label, &name, n, h, &ideal));
                    }
                }
            }
            Ok((doc, common.json, EXIT_OK))
        }
        Command::Verify {
            spec,
            corpus,
            random,
            seed,
            max_vars,
            json,
        } => {
            let (doc, report, failures_only, extra) = if corpus {
                (
                    ReportDocument::new("verify", None),
                    run_corpus(&SuiteOptions::default()),
                    false,
                    None,
                )
            } else if let Some(count) = random {
                if !(2..=MAX_RANDOM_VARS).contains(&max_vars) {
                    return Err(input_error(format!("--max-vars must be in 2..={MAX_RANDOM_VARS}")));
                }
                let ideals = random_instances(seed, count, max_vars);
                let summary = sweep(&ideals, &SuiteOptions::default());
                let extra = serde_json::json!({
                    "instances": summary.instances,
                    "shapes": summary.shapes,
                    "two_tails_with_m1": summary.two_tails_with_m1,
                    "nonneg_only": summary.nonneg_only,
                    "two_tail_search": two_tail_search(seed, count, max_vars),
                });
                (ReportDocument::new("verify", None), summary.report, true, Some(extra))
            } else if let Some(path) = spec {
                let (spec, ideal) = parse_spec(&path).map_err(|e| input_error(format!("{}: {e}", path.display())))?;
                let mut report = run_spec(&spec, &ideal, &SuiteOptions::default());
                report.extend(weyl_oracle_checks(&ideal, -3..=3));
                (ReportDocument::new("verify", Some(&ideal)), report, false, None)
            } else {
                return Err(input_error("pass a spec file, --corpus, or --random N"));
            };
            let mut doc = doc;
            let code = if report.all_passed() { EXIT_OK } else { EXIT_FAILED };
            let mut summary = VerificationSummary::new(&report, failures_only);
            summary.extra = extra;
            doc.verification = Some(summary);
            Ok((doc, json, code))
        }
    }
}

const MAX_RANDOM_VARS: usize = 7;

/// Worker count from `LCLAB_THREADS`, if set to a positive integer.
pub fn thread_limit() -> Option<usize> {
    std::env::var("LCLAB_THREADS")
        .ok()?
        .trim()
        .parse()
        .ok()
        .filter(|&n| n > 0)
}

/// Runs the command line and returns the exit code. Never panics on
/// malformed input.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INPUT } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if e.use_stderr() {
                write!(err, "{text}")
            } else {
                write!(out, "{text}")
            };
            return code;
        }
    };
    let mut builder = rayon::ThreadPoolBuilder::new();
    if let Some(n) = thread_limit() {
        builder = builder.num_threads(n);
    }
    let result = match builder.build() {
        Ok(pool) => pool.install(|| execute(cli)),
        Err(_) => execute(cli),
    };
    match result {
        Ok((doc, json, code)) => {
            let text = if json { doc.to_json() + "\n" } else { doc.to_text() };
            let _ = out.write_all(text.as_bytes());
            if code == EXIT_FAILED && !json {
                let _ = writeln!(err, "verification failed");
            }
            code
        }
        Err(Failure(code, msg)) => {
            let _ = writeln!(err, "error: {msg}");
            code
        }
    }
}

/// Convenience for callers that only need the report as text.
pub fn run_to_string<I, T>(args: I) -> (i32, String, String)
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let (mut out, mut err) = (Vec::new(), Vec::new());
    let code = run(args, &mut out, &mut err);
    (
        code,
        String::from_utf8_lossy(&out).into_owned(),
        String::from_utf8_lossy(&err).into_owned(),
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn degree_ranges() {
        assert_eq!(parse_range("-3").unwrap(), DegreeRange(-3, -3));
        assert_eq!(parse_range("-5..5").unwrap(), DegreeRange(-5, 5));
        assert_eq!(parse_range("\u{2212}2..0").unwrap(), DegreeRange(-2, 0));
        assert!(parse_range("3..1").is_err());
        assert!(parse_range("x").is_err());
        assert_eq!(parse_strand("-1,0").unwrap(), Strand(vec![-1, 0]));
    }

    #[test]
    fn usage_errors_exit_2() {
        let (code, _, err) = run_to_string(["lclab", "dim"]);
        assert_eq!(code, EXIT_INPUT);
        assert!(!err.is_empty());
        let (code, out, _) = run_to_string(["lclab", "--help"]);
        assert_eq!(code, EXIT_OK);
        assert!(out.contains("pattern"));
    }
}
