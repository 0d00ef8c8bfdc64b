//! `punctual` command-line front end.
//!
//! Exit codes: 0 success, 2 parse/config/range error, 3 ideal not
//! zero-dimensional, 4 a checked identity failed.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rayon::prelude::*;
use serde::Serialize;

use punctual::report::{csv_field, render_table, VerificationReport};
use punctual::verify::{
    analyze_ideal, random_ideal_sample, semicontinuity_check, stratification_census, verify_lemma_b2,
    verify_theorem1, verify_theorem2, IdealAnalysis, SamplerConfig, StratificationCensus, DEFAULT_CROSSCHECK_CUTOFF,
};
use punctual::{Error, Field, MonomialOrder, OrderKind, VarPrecedence};

const FIELD_ENV: &str = "PUNCTUAL_FIELD";
const DEFAULT_SAMPLE_FIELD: Field = Field::Prime(32003);

#[derive(Parser)]
#[command(name = "punctual", version, about = "Local invariants of zero-dimensional ideals in k[x, y]")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Per-component invariants of one ideal.
    Analyze {
        #[command(flatten)]
        input: IdealInput,
        #[command(flatten)]
        algebra: AlgebraArgs,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Partition counts of n by number of inner corners.
    Census {
        #[arg(long, value_name = "LO..HI")]
        n: String,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Check the identities on one ideal, or the partition bound over a range of n.
    Verify {
        #[command(flatten)]
        input: OptionalIdealInput,
        #[arg(long, value_name = "LO..HI", conflicts_with_all = ["ideal", "file"])]
        n: Option<String>,
        #[command(flatten)]
        algebra: AlgebraArgs,
        #[arg(long, default_value_t = DEFAULT_CROSSCHECK_CUTOFF)]
        crosscheck_cutoff: u32,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Partition bound and census for every n in a range.
    Sweep {
        #[arg(long, value_name = "LO..HI")]
        n: String,
        #[arg(long, default_value_t = DEFAULT_CROSSCHECK_CUTOFF)]
        crosscheck_cutoff: u32,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Random ideals over F_p through the origin.
    Sample {
        /// Defaults to Fp:32003. Sampling over QQ is not supported.
        #[arg(long, env = FIELD_ENV)]
        field: Option<String>,
        #[arg(long, default_value_t = 3)]
        degree: u32,
        #[arg(long, default_value_t = 100)]
        count: usize,
        #[arg(long)]
        seed: u64,
        /// Generators per ideal.
        #[arg(long, default_value_t = 2)]
        generators: usize,
        /// Lowest degree of the random terms.
        #[arg(long, default_value_t = 1)]
        min_degree: u32,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
}

#[derive(Args)]
#[group(required = true, multiple = false)]
struct IdealInput {
    /// Comma-separated generators, e.g. "x^2, x*y, y^2".
    #[arg(long)]
    ideal: Option<String>,
    /// File with one generator per line; `#` starts a comment.
    #[arg(long)]
    file: Option<PathBuf>,
}

#[derive(Args)]
#[group(required = false, multiple = false)]
struct OptionalIdealInput {
    #[arg(long)]
    ideal: Option<String>,
    #[arg(long)]
    file: Option<PathBuf>,
}

#[derive(Args)]
struct AlgebraArgs {
    /// QQ or Fp:<prime>. Defaults to QQ.
    #[arg(long, env = FIELD_ENV)]
    field: Option<String>,
    #[arg(long, value_enum, default_value_t = OrderArg::Degrevlex)]
    order: OrderArg,
    #[arg(long, value_enum, default_value_t = VarsArg::Xy)]
    vars: VarsArg,
}

#[derive(Clone, Copy, ValueEnum)]
enum OrderArg {
    Lex,
    Deglex,
    Degrevlex,
}

#[derive(Clone, Copy, ValueEnum)]
enum VarsArg {
    Xy,
    Yx,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Text,
    Csv,
}

enum Failure {
    Usage(String),
    NotZeroDimensional,
    Check(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::NotZeroDimensional => Failure::NotZeroDimensional,
            Error::LemmaViolation { .. } => Failure::Check(e.to_string()),
            other => Failure::Usage(other.to_string()),
        }
    }
}

type Outcome = Result<Output, Failure>;

/// Rendered output and whether every check passed.
struct Output {
    text: String,
    passed: bool,
}

impl AlgebraArgs {
    fn field(&self) -> Result<Field, Failure> {
        match &self.field {
            Some(s) => Ok(s.parse()?),
            None => Ok(Field::Rationals),
        }
    }

    fn order(&self) -> MonomialOrder {
        let kind = match self.order {
            OrderArg::Lex => OrderKind::Lex,
            OrderArg::Deglex => OrderKind::DegLex,
            OrderArg::Degrevlex => OrderKind::DegRevLex,
        };
        let vars = match self.vars {
            VarsArg::Xy => VarPrecedence::XY,
            VarsArg::Yx => VarPrecedence::YX,
        };
        MonomialOrder::new(kind, vars)
    }
}

fn read_ideal(ideal: &Option<String>, file: &Option<PathBuf>) -> Result<Option<String>, Failure> {
    match (ideal, file) {
        (Some(text), _) => Ok(Some(text.clone())),
        (None, Some(path)) => std::fs::read_to_string(path)
            .map(Some)
            .map_err(|e| Failure::Usage(format!("cannot read {}: {e}", path.display()))),
        (None, None) => Ok(None),
    }
}

/// `"lo..hi"` or a single `"n"`, with `1 ≤ lo ≤ hi`.
fn parse_range(s: &str) -> Result<(u32, u32), Failure> {
    let bad = || Failure::Usage(format!("invalid range `{s}`: expected <lo>..<hi> with 1 <= lo <= hi"));
    let (lo, hi) = match s.split_once("..") {
        Some((a, b)) => (a.trim().parse().map_err(|_| bad())?, b.trim().parse().map_err(|_| bad())?),
        None => {
            let n = s.trim().parse().map_err(|_| bad())?;
            (n, n)
        }
    };
    if lo == 0 || lo > hi {
        return Err(bad());
    }
    Ok((lo, hi))
}

fn analysis_text(a: &IdealAnalysis) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "ideal:    {}", a.ideal);
    let _ = writeln!(out, "field:    {}", a.field);
    let _ = writeln!(out, "order:    {}", a.order);
    let _ = writeln!(out, "basis:    {}", a.groebner_basis.join(", "));
    let _ = writeln!(out, "colength: {}", a.colength);
    if a.non_rational_length > 0 {
        let _ = writeln!(out, "non-rational length: {}", a.non_rational_length);
    }
    let headers: Vec<String> = ["point", "n_p", "r", "e", "b1", "b2", "e-1", "mu", "mu<=n_p"]
        .iter()
        .map(|s| s.to_string())
        .collect();
    let rows: Vec<Vec<String>> = a
        .components
        .iter()
        .map(|c| {
            vec![
                c.point.clone(),
                c.local_length.to_string(),
                c.nilpotency_index.to_string(),
                c.e.to_string(),
                c.b1.to_string(),
                c.b2_socle.to_string(),
                c.b2_generators.to_string(),
                c.mu.to_string(),
                if c.haiman_holds { "yes" } else { "NO" }.to_string(),
            ]
        })
        .collect();
    out.push_str(&render_table(&headers, &rows));
    let _ = writeln!(out, "verdict:  {}", a.verdict);
    out
}

const ANALYZE_CSV_HEADER: &str = "ideal,point,n_p,r,e,b1,b2_socle,b2_generators,mu,mu_le_n_p,mu_eq_n_p";

fn analysis_csv(a: &IdealAnalysis) -> String {
    let mut out = format!("{ANALYZE_CSV_HEADER}\n");
    for c in &a.components {
        let _ = writeln!(
            out,
            "{},{},{},{},{},{},{},{},{},{},{}",
            csv_field(&a.ideal),
            csv_field(&c.point),
            c.local_length,
            c.nilpotency_index,
            c.e,
            c.b1,
            c.b2_socle,
            c.b2_generators,
            c.mu,
            c.haiman_holds,
            c.mu_equals_length
        );
    }
    out
}

fn analyze(input: &IdealInput, algebra: &AlgebraArgs, format: Format) -> Outcome {
    let text = read_ideal(&input.ideal, &input.file)?.expect("clap requires an input");
    let a = analyze_ideal(&text, algebra.field()?, algebra.order())?;
    let text = match format {
        Format::Json => a.to_json() + "\n",
        Format::Text => analysis_text(&a),
        Format::Csv => analysis_csv(&a),
    };
    Ok(Output {
        text,
        passed: a.verdict.is_pass(),
    })
}

fn render_reports(reports: &[VerificationReport], format: Format) -> String {
    match format {
        Format::Json => serde_json::to_string_pretty(reports).expect("reports serialize") + "\n",
        Format::Text => reports.iter().map(VerificationReport::to_text).collect::<Vec<_>>().join("\n"),
        Format::Csv => {
            let mut out = format!("{}\n", VerificationReport::csv_header());
            for r in reports {
                out.push_str(&r.to_csv_rows());
            }
            out
        }
    }
}

fn reports_output(reports: Vec<VerificationReport>, format: Format) -> Output {
    Output {
        passed: reports.iter().all(VerificationReport::passed),
        text: render_reports(&reports, format),
    }
}

fn census(n: &str, format: Format) -> Outcome {
    let (lo, hi) = parse_range(n)?;
    let all = (lo..=hi)
        .into_par_iter()
        .map(stratification_census)
        .collect::<Result<Vec<_>, _>>()?;
    let text = match format {
        Format::Json => serde_json::to_string_pretty(&all).expect("census serializes") + "\n",
        Format::Text => {
            let headers: Vec<String> = ["n", "partitions", "counts by b2", "max", "bound"]
                .iter()
                .map(|s| s.to_string())
                .collect();
            let rows: Vec<Vec<String>> = all
                .iter()
                .map(|c| {
                    vec![
                        c.n.to_string(),
                        c.total.to_string(),
                        counts_text(&c.counts),
                        c.max_index.to_string(),
                        c.bound.to_string(),
                    ]
                })
                .collect();
            render_table(&headers, &rows)
        }
        Format::Csv => {
            let mut out = String::from("n,b2,count\n");
            for c in &all {
                for (i, k) in &c.counts {
                    let _ = writeln!(out, "{},{i},{k}", c.n);
                }
            }
            out
        }
    };
    Ok(Output {
        text,
        passed: all.iter().all(StratificationCensus::consistent),
    })
}

fn counts_text(counts: &BTreeMap<usize, u64>) -> String {
    counts.iter().map(|(i, k)| format!("{i}:{k}")).collect::<Vec<_>>().join(" ")
}

fn verify(
    input: &OptionalIdealInput,
    n: &Option<String>,
    algebra: &AlgebraArgs,
    cutoff: u32,
    format: Format,
) -> Outcome {
    if let Some(range) = n {
        let (lo, hi) = parse_range(range)?;
        let reports = (lo..=hi)
            .into_par_iter()
            .map(|n| verify_theorem2(n, cutoff))
            .collect::<Result<Vec<_>, _>>()?;
        return Ok(reports_output(reports, format));
    }
    let text = read_ideal(&input.ideal, &input.file)?
        .ok_or_else(|| Failure::Usage("verify needs --ideal, --file or --n".into()))?;
    let field = algebra.field()?;
    let order = algebra.order();
    let mut reports = vec![verify_lemma_b2(&text, field, order)?, verify_theorem1(&text, field, order)?];
    match semicontinuity_check(&text, field, &MonomialOrder::all()) {
        Ok(r) => reports.push(r),
        Err(Error::SupportNotLocal) => {}
        Err(e) => return Err(e.into()),
    }
    Ok(reports_output(reports, format))
}

#[derive(Serialize)]
struct SweepLine {
    n: u32,
    partitions: u64,
    max_b2: usize,
    bound: u32,
    census: BTreeMap<usize, u64>,
    verdict: String,
}

fn sweep(n: &str, cutoff: u32, format: Format) -> Outcome {
    let (lo, hi) = parse_range(n)?;
    let lines = (lo..=hi)
        .into_par_iter()
        .map(|n| -> Result<SweepLine, Error> {
            let report = verify_theorem2(n, cutoff)?;
            let census = stratification_census(n)?;
            let ok = report.passed() && census.consistent() && census.total == report.rows.len() as u64;
            Ok(SweepLine {
                n,
                partitions: census.total,
                max_b2: census.max_index,
                bound: census.bound,
                census: census.counts,
                verdict: if ok { "pass" } else { "fail" }.to_string(),
            })
        })
        .collect::<Result<Vec<_>, _>>()?;
    let text = match format {
        Format::Json => serde_json::to_string_pretty(&lines).expect("sweep serializes") + "\n",
        Format::Text => {
            let headers: Vec<String> = ["n", "partitions", "max_b2", "bound", "census", "verdict"]
                .iter()
                .map(|s| s.to_string())
                .collect();
            let rows: Vec<Vec<String>> = lines
                .iter()
                .map(|l| {
                    vec![
                        l.n.to_string(),
                        l.partitions.to_string(),
                        l.max_b2.to_string(),
                        l.bound.to_string(),
                        counts_text(&l.census),
                        l.verdict.clone(),
                    ]
                })
                .collect();
            render_table(&headers, &rows)
        }
        Format::Csv => {
            let mut out = String::from("n,partitions,max_b2,bound,verdict\n");
            for l in &lines {
                let _ = writeln!(out, "{},{},{},{},{}", l.n, l.partitions, l.max_b2, l.bound, l.verdict);
            }
            out
        }
    };
    Ok(Output {
        text,
        passed: lines.iter().all(|l| l.verdict == "pass"),
    })
}

struct SampleArgs {
    degree: u32,
    count: usize,
    seed: u64,
    generators: usize,
    min_degree: u32,
}

fn sample(field: &Option<String>, args: SampleArgs, format: Format) -> Outcome {
    let field = match field {
        Some(s) => s.parse()?,
        None => DEFAULT_SAMPLE_FIELD,
    };
    let prime = match field {
        Field::Prime(p) => p,
        Field::Rationals => {
            return Err(Failure::Usage(
                "sampling over QQ is not supported (coefficients grow without bound); use Fp:<prime>".into(),
            ))
        }
    };
    let cfg = SamplerConfig {
        generators: args.generators,
        min_degree: args.min_degree,
        ..SamplerConfig::new(prime, args.degree, args.count, args.seed)
    };
    let report = random_ideal_sample(&cfg)?;
    Ok(reports_output(vec![report], format))
}

fn run(cli: &Cli) -> Outcome {
    match &cli.command {
        Command::Analyze { input, algebra, format } => analyze(input, algebra, *format),
        Command::Census { n, format } => census(n, *format),
        Command::Verify {
            input,
            n,
            algebra,
            crosscheck_cutoff,
            format,
        } => verify(input, n, algebra, *crosscheck_cutoff, *format),
        Command::Sweep {
            n,
            crosscheck_cutoff,
            format,
        } => sweep(n, *crosscheck_cutoff, *format),
        Command::Sample {
            field,
            degree,
            count,
            seed,
            generators,
            min_degree,
            format,
        } => sample(
            field,
            SampleArgs {
                degree: *degree,
                count: *count,
                seed: *seed,
                generators: *generators,
                min_degree: *min_degree,
            },
            *format,
        ),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(out) => {
            print!("{}", out.text);
            if out.passed {
                ExitCode::SUCCESS
            } else {
                eprintln!("error: check failed");
                ExitCode::from(4)
            }
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::NotZeroDimensional) => {
            eprintln!("error: not zero-dimensional");
            ExitCode::from(3)
        }
        Err(Failure::Check(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(4)
        }
    }
}
