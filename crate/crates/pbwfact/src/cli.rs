//! Command-line front end: one thin binary dispatching to the library
//! suites. Exit codes: 0 pass, 1 verification failure, 2 usage error.

use crate::enveloping::{radford_to_pbw_experiment, Enveloping, RadfordFamily};
use crate::error::Error;
use crate::factorization::{
    diagonal_series, diff_tensors, lyndon_factor_sequence, schuetzenberger_product_for_factors,
    ProductOrder, SfReport,
};
use crate::lie::LieAlgebra;
use crate::lyndon::lyndon_up_to;
use crate::pbw::PbwBasis;
use crate::report::Report;
use crate::stuffle::{self, YPoly, YWord};
use crate::tensor::TensorPoly;
use crate::trace::{Independence, TraceMonoid};
use crate::word::Alphabet;
use clap::{Args, Parser, Subcommand, ValueEnum};
use std::collections::BTreeSet;
use std::ffi::OsString;
use std::path::PathBuf;

#[derive(Parser)]
#[command(name = "pbwfact", version, about = "Exact verification of PBW/dual bases and diagonal-series factorizations")]
struct Cli {
    /// Emit the report as JSON instead of human-readable text.
    #[arg(long, global = true)]
    json: bool,
    /// Fan independent checks out over threads (deterministic reports).
    #[arg(long, global = true)]
    parallel: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Lyndon word utilities.
    Lyndon {
        #[command(subcommand)]
        command: LyndonCommand,
    },
    /// The PBW family P_w.
    Pbw {
        #[command(subcommand)]
        command: PbwCommand,
    },
    /// The dual family S_w.
    Dual {
        #[command(subcommand)]
        command: DualCommand,
    },
    /// Factorization verifiers.
    Verify {
        #[command(subcommand)]
        command: VerifyCommand,
    },
    /// Quasi-shuffle algebra suites.
    Stuffle {
        #[command(subcommand)]
        command: StuffleCommand,
    },
    /// Partially commutative monoid suites.
    Trace {
        #[command(subcommand)]
        command: TraceCommand,
    },
    /// Enveloping-algebra suites for structure-constant Lie algebras.
    Lie {
        #[command(subcommand)]
        command: LieCommand,
    },
}

#[derive(Subcommand)]
enum LyndonCommand {
    /// List all Lyndon words of length ≤ max-len, one per line, in
    /// lexicographic order.
    List {
        /// Letter string; the order of letters is their position.
        #[arg(long)]
        alphabet: String,
        #[arg(long, default_value_t = 4)]
        max_len: usize,
    },
}

#[derive(Subcommand)]
enum PbwCommand {
    /// Print P_w as a JSON object mapping words to rational coefficients.
    Show {
        #[arg(long)]
        word: String,
        /// Defaults to the distinct letters of the word in character order.
        #[arg(long)]
        alphabet: Option<String>,
    },
    /// Triangularity and δ-duality audit up to a length bound.
    Verify {
        #[arg(long)]
        alphabet: String,
        #[arg(long, default_value_t = 4)]
        max_len: usize,
    },
}

#[derive(Subcommand)]
enum DualCommand {
    /// Print S_w as a JSON object mapping words to rational coefficients.
    Show {
        #[arg(long)]
        word: String,
        #[arg(long)]
        alphabet: Option<String>,
    },
}

#[derive(Subcommand)]
enum VerifyCommand {
    /// Compare ∏^↘ exp(S_l⊗P_l) against Σ w⊗w at a truncation degree.
    Sf(SfArgs),
}

#[derive(Args)]
struct SfArgs {
    #[arg(long)]
    alphabet: String,
    #[arg(long, default_value_t = 4)]
    degree: usize,
    /// Write both truncated tensors to this path as JSON.
    #[arg(long)]
    emit_tensors: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = OrderArg::Decreasing)]
    product_order: OrderArg,
}

#[derive(Subcommand)]
enum StuffleCommand {
    /// Duality, Hopf axioms, projector primitivity and dimension audit.
    Verify {
        #[arg(long, default_value_t = 4)]
        max_weight: u32,
    },
    /// Print log_*(I) applied to a word; `--word 4` means y4 and
    /// `--word 1,2` means y1y2.
    Logstar {
        #[arg(long)]
        word: String,
    },
}

#[derive(Subcommand)]
enum TraceCommand {
    /// Partially commutative factorization audit.
    Verify {
        #[arg(long)]
        alphabet: String,
        /// Independence pairs, e.g. `--theta a,c` or `--theta ac,bd`.
        #[arg(long)]
        theta: Vec<String>,
        #[arg(long, default_value_t = 4)]
        degree: usize,
        /// Drop the connectedness requirement on pc-Lyndon traces.
        #[arg(long)]
        no_connectedness: bool,
    },
}

#[derive(Subcommand)]
enum LieCommand {
    /// Run enveloping-algebra checks against a structure-constant config.
    Verify {
        #[arg(long)]
        config: PathBuf,
        #[arg(long, default_value_t = 4)]
        degree: u32,
        #[arg(long, value_enum, default_value_t = CheckArg::All)]
        check: CheckArg,
        #[arg(long, value_enum, default_value_t = OrderArg::Decreasing)]
        product_order: OrderArg,
        /// Dual-basis family for the theorem2 experiment.
        #[arg(long, value_enum, default_value_t = FamilyArg::Pbw)]
        family: FamilyArg,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum OrderArg {
    Decreasing,
    Increasing,
}

impl From<OrderArg> for ProductOrder {
    fn from(value: OrderArg) -> Self {
        match value {
            OrderArg::Decreasing => ProductOrder::Decreasing,
            OrderArg::Increasing => ProductOrder::Increasing,
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum CheckArg {
    Radford,
    Theorem1,
    Theorem2,
    All,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum FamilyArg {
    Pbw,
    Perturbed,
}

/// Parses and runs; returns the process exit code.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return e.exit_code();
        }
    };
    match dispatch(&cli) {
        Ok(Output::Lines(lines)) => {
            for line in lines {
                println!("{line}");
            }
            0
        }
        Ok(Output::Json(value)) => {
            println!("{}", serde_json::to_string_pretty(&value).expect("json"));
            0
        }
        Ok(Output::Suite(report)) => {
            if cli.json {
                println!("{}", report.to_json());
            } else {
                println!("{report}");
            }
            report.exit_code()
        }
        Err(e) => {
            eprintln!("error: {e}");
            2
        }
    }
}

enum Output {
    Lines(Vec<String>),
    Json(serde_json::Value),
    Suite(Report),
}

fn dispatch(cli: &Cli) -> Result<Output, Error> {
    match &cli.command {
        Command::Lyndon { command: LyndonCommand::List { alphabet, max_len } } => {
            let alphabet = Alphabet::new(alphabet)?;
            let words: Vec<String> = lyndon_up_to(&alphabet, *max_len)
                .iter()
                .map(|w| alphabet.format_word(w))
                .collect();
            if cli.json {
                Ok(Output::Json(serde_json::json!({
                    "suite": "lyndon-list",
                    "parameters": {"max_len": max_len.to_string()},
                    "words": words,
                })))
            } else {
                Ok(Output::Lines(words))
            }
        }
        Command::Pbw { command: PbwCommand::Show { word, alphabet } } => {
            let (alphabet, w) = resolve_word(word, alphabet.as_deref())?;
            let poly = PbwBasis::new(&alphabet).p(&w);
            Ok(Output::Json(poly.to_json()))
        }
        Command::Dual { command: DualCommand::Show { word, alphabet } } => {
            let (alphabet, w) = resolve_word(word, alphabet.as_deref())?;
            let poly = PbwBasis::new(&alphabet).s(&w);
            Ok(Output::Json(poly.to_json()))
        }
        Command::Pbw { command: PbwCommand::Verify { alphabet, max_len } } => {
            let alphabet = Alphabet::new(alphabet)?;
            let mut basis = PbwBasis::new(&alphabet);
            let duality = basis.check_duality(*max_len, cli.parallel);
            let mut report = Report::new("pbw-verify")
                .parameter("alphabet", letters(&alphabet))
                .parameter("max_len", max_len)
                .parameter("parallel", cli.parallel)
                .checks(duality.pairs_checked + alphabet.words_up_to(*max_len).len() as u64)
                .with_detail(&duality);
            for v in &duality.violations {
                report.violation(format!("<S_{}, P_{}>", v.u, v.v), &v.expected, &v.actual);
            }
            for w in alphabet.words_up_to(*max_len) {
                if !basis.check_triangular(&w) {
                    report.violation(
                        format!("triangularity at {}", alphabet.format_word(&w)),
                        "triangular",
                        "not triangular",
                    );
                }
            }
            Ok(Output::Suite(report.finish()))
        }
        Command::Verify { command: VerifyCommand::Sf(args) } => {
            let alphabet = Alphabet::new(&args.alphabet)?;
            let order = ProductOrder::from(args.product_order);
            let factors = lyndon_factor_sequence(&alphabet, args.degree, order);
            let product = schuetzenberger_product_for_factors(&alphabet, args.degree, &factors);
            let diagonal = diagonal_series(&alphabet, args.degree);
            let sf = SfReport {
                degree: args.degree,
                lyndon_count: factors.len(),
                terms_lhs: product.num_terms(),
                terms_rhs: diagonal.num_terms(),
                mismatches: diff_tensors(&alphabet, &product, &diagonal),
            };
            if let Some(path) = &args.emit_tensors {
                let payload = serde_json::json!({
                    "product": tensor_entries(&product),
                    "diagonal": tensor_entries(&diagonal),
                });
                std::fs::write(path, serde_json::to_string_pretty(&payload)?)?;
            }
            let mut report = Report::new("verify-sf")
                .parameter("alphabet", letters(&alphabet))
                .parameter("degree", args.degree)
                .parameter(
                    "product_order",
                    if order == ProductOrder::Decreasing { "decreasing" } else { "increasing" },
                )
                .checks((product.num_terms() + diagonal.num_terms()) as u64)
                .with_detail(&sf);
            for m in &sf.mismatches {
                report.violation(format!("{}⊗{}", m.left, m.right), &m.diagonal, &m.product);
            }
            Ok(Output::Suite(report.finish()))
        }
        Command::Stuffle { command: StuffleCommand::Verify { max_weight } } => {
            let suite = stuffle::verify_suite(*max_weight);
            let mut report = Report::new("stuffle-verify")
                .parameter("max_weight", max_weight)
                .checks(suite.checks_run)
                .with_detail(&suite);
            for v in &suite.violations {
                report.violation(&v.location, &v.expected, &v.actual);
            }
            Ok(Output::Suite(report.finish()))
        }
        Command::Stuffle { command: StuffleCommand::Logstar { word } } => {
            let indices: Vec<u32> = word
                .split(',')
                .map(|part| {
                    part.trim()
                        .parse::<u32>()
                        .ok()
                        .filter(|&s| s >= 1)
                        .ok_or_else(|| Error::Config(format!("bad letter index '{part}'")))
                })
                .collect::<Result<_, _>>()?;
            let image = stuffle::log_star_word(&YWord::new(indices));
            if cli.json {
                Ok(Output::Json(ypoly_json(&image)))
            } else {
                Ok(Output::Lines(vec![image.to_string()]))
            }
        }
        Command::Trace { command } => {
            let TraceCommand::Verify { alphabet, theta, degree, no_connectedness } = command;
            let alphabet = Alphabet::new(alphabet)?;
            let pairs = parse_theta(theta)?;
            let independence = Independence::from_letter_pairs(&alphabet, &pairs)?;
            let monoid = TraceMonoid::with_caps(&alphabet, independence, (*degree).max(6), 4)?
                .with_connectedness(!no_connectedness);
            let trace_report = monoid.verify_sf_trace(*degree);
            let mut report = Report::new("trace-verify")
                .parameter("alphabet", letters(&alphabet))
                .parameter("degree", degree)
                .parameter("theta", trace_report.theta.join(";"))
                .parameter("connectedness", !no_connectedness)
                .checks((trace_report.terms_lhs + trace_report.terms_rhs) as u64)
                .with_detail(&trace_report);
            for m in &trace_report.mismatches {
                report.violation(format!("{}⊗{}", m.left, m.right), &m.diagonal, &m.product);
            }
            Ok(Output::Suite(report.finish()))
        }
        Command::Lie { command } => {
            let LieCommand::Verify { config, degree, check, product_order, family } = command;
            let lie = LieAlgebra::from_path(config)?;
            let env = Enveloping::new(lie);
            let order = ProductOrder::from(*product_order);
            let mut report = Report::new("lie-verify")
                .parameter("config", config.display())
                .parameter("degree", degree)
                .parameter(
                    "check",
                    match check {
                        CheckArg::Radford => "radford",
                        CheckArg::Theorem1 => "theorem1",
                        CheckArg::Theorem2 => "theorem2",
                        CheckArg::All => "all",
                    },
                );
            let mut checks = 0u64;
            if matches!(check, CheckArg::Radford | CheckArg::All) {
                let radford = env.verify_radford_multiplicativity(*degree);
                checks += radford.checks_run;
                for v in &radford.violations {
                    report.violation(
                        format!("(S_{} * S_{})(B^{})", v.alpha, v.beta, v.gamma),
                        &v.expected,
                        &v.actual,
                    );
                }
                report.detail.insert("radford".into(), serde_json::to_value(&radford)?);
            }
            if matches!(check, CheckArg::Theorem1 | CheckArg::All) {
                let theorem1 = env.verify_theorem1(*degree, order);
                checks += theorem1.checks_run;
                for m in &theorem1.mismatches {
                    report.violation(
                        format!("S_{} ⊗ B^{}", m.left, m.right),
                        &m.diagonal,
                        &m.product,
                    );
                }
                for failure in &theorem1.phi_failures {
                    report.violation(failure.clone(), "identity", "different endomorphism");
                }
                report.parameters.insert(
                    "product_order".into(),
                    theorem1.order.clone(),
                );
                report.detail.insert("theorem1".into(), serde_json::to_value(&theorem1)?);
            }
            if matches!(check, CheckArg::Theorem2 | CheckArg::All) {
                let family = match family {
                    FamilyArg::Pbw => RadfordFamily::pbw(&env, *degree),
                    FamilyArg::Perturbed => RadfordFamily::perturbed_pbw(&env, *degree),
                };
                match radford_to_pbw_experiment(&env, &family, *degree) {
                    Ok(experiment) => {
                        checks += experiment.validation_checks + experiment.products_checked;
                        for failure in &experiment.primitive_failures {
                            report.violation(failure.clone(), "primitive", "not primitive");
                        }
                        if !experiment.independent {
                            report.violation("independence of the B[e_i]", "independent", "dependent");
                        }
                        for alpha in &experiment.product_mismatches {
                            report.violation(
                                format!("product recovery at {alpha}"),
                                "ordered product equals B[α]",
                                "differs",
                            );
                        }
                        report.detail.insert("theorem2".into(), serde_json::to_value(&experiment)?);
                    }
                    Err(Error::FamilyValidation(msg)) => {
                        report.violation("family validation", "valid Radford family", &msg);
                    }
                    Err(other) => return Err(other),
                }
            }
            Ok(Output::Suite(report.checks(checks).finish()))
        }
    }
}

fn letters(alphabet: &Alphabet) -> String {
    (0..alphabet.len()).map(|i| alphabet.letter(i)).collect()
}

/// Alphabet for `show` commands: explicit, or the word's distinct letters
/// in character order.
fn resolve_word(word: &str, alphabet: Option<&str>) -> Result<(Alphabet, crate::word::Word), Error> {
    let alphabet = match alphabet {
        Some(s) => Alphabet::new(s)?,
        None => {
            let distinct: BTreeSet<char> = word.chars().collect();
            Alphabet::from_chars(distinct)?
        }
    };
    let w = alphabet.word(word)?;
    Ok((alphabet, w))
}

/// Accepts `a,c` (one pair per occurrence) and `ac,bd` (two-letter tokens).
fn parse_theta(values: &[String]) -> Result<Vec<(char, char)>, Error> {
    let mut pairs = Vec::new();
    for value in values {
        let tokens: Vec<&str> = value.split(',').map(str::trim).filter(|t| !t.is_empty()).collect();
        if tokens.iter().all(|t| t.chars().count() == 1) {
            if tokens.len() % 2 != 0 {
                return Err(Error::Config(format!("odd number of letters in theta '{value}'")));
            }
            for chunk in tokens.chunks(2) {
                pairs.push((
                    chunk[0].chars().next().unwrap(),
                    chunk[1].chars().next().unwrap(),
                ));
            }
        } else if tokens.iter().all(|t| t.chars().count() == 2) {
            for token in tokens {
                let mut it = token.chars();
                pairs.push((it.next().unwrap(), it.next().unwrap()));
            }
        } else {
            return Err(Error::Config(format!("cannot parse theta '{value}'")));
        }
    }
    Ok(pairs)
}

fn tensor_entries(t: &TensorPoly) -> Vec<serde_json::Value> {
    let alphabet = t.alphabet();
    t.terms_map()
        .iter()
        .map(|((l, r), c)| {
            serde_json::json!({
                "left": alphabet.format_word(l),
                "right": alphabet.format_word(r),
                "coeff": c.to_string(),
            })
        })
        .collect()
}

fn ypoly_json(p: &YPoly) -> serde_json::Value {
    let map: std::collections::BTreeMap<String, String> = p
        .terms()
        .map(|(w, c)| (w.to_string(), c.to_string()))
        .collect();
    serde_json::to_value(map).expect("string map serializes")
}
