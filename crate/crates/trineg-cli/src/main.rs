//! Command-line surface: negation evaluation, truth tables, validity and
//! entailment checks, proof checking, algebra audits, crisp trichotomy,
//! and the decision pipeline. Text or JSON output; identical invocations
//! produce byte-identical output.

use std::collections::BTreeMap;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use trineg::audit::{audit_pointwise, audit_set_algebra, classify_negation, GridSpec};
use trineg::decision::{
    builtin_rules, builtin_table, decide, IntegratedDataTable, PipelineConfig, Scenario,
};
use trineg::degree::{con_neg, int_neg, opp_neg, Lambda, NegationConfig, NegationVariant, TruthDegree};
use trineg::proof::{builtin_schemas, check_corpus, load_corpus, parse_corpus, TheoremRegistry};
use trineg::semantics::{
    audit_axioms, entails, eval, is_valid, truth_table, Assignment, SemanticsConfig,
    TruthValue3,
};
use trineg::set::{FuzzySet, NegationKind};
use trineg::syntax::parse;
use trineg::trichotomy::ConceptTripleData;

#[derive(Parser)]
#[command(name = "trineg", version, about = "three-negation fuzzy sets and logic")]
struct Cli {
    #[command(flatten)]
    common: Common,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone)]
struct Common {
    /// Threshold parameter in (0, 1).
    #[arg(long, global = true, default_value_t = 0.5)]
    lambda: f64,
    /// Intermediary-negation variant.
    #[arg(long, global = true, value_enum, default_value_t = VariantArg::Verbatim)]
    variant: VariantArg,
    /// Implication table for the three-valued semantics.
    #[arg(long, global = true, value_enum, default_value_t = SemanticsArg::Paper)]
    semantics: SemanticsArg,
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = FormatArg::Text)]
    format: FormatArg,
    /// Seed for randomized audits.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum VariantArg {
    Verbatim,
    Symmetric,
}

impl From<VariantArg> for NegationVariant {
    fn from(v: VariantArg) -> Self {
        match v {
            VariantArg::Verbatim => NegationVariant::Verbatim,
            VariantArg::Symmetric => NegationVariant::Symmetric,
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum SemanticsArg {
    Paper,
    Goedel,
}

impl From<SemanticsArg> for SemanticsConfig {
    fn from(v: SemanticsArg) -> Self {
        match v {
            SemanticsArg::Paper => SemanticsConfig::paper(),
            SemanticsArg::Goedel => SemanticsConfig::goedel(),
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum FormatArg {
    Text,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Compute the three negations of a degree or of a fuzzy set.
    Neg {
        /// Membership degree in [0, 1].
        degree: Option<f64>,
        /// JSON fuzzy-set file to negate pointwise.
        #[arg(long)]
        set: Option<PathBuf>,
    },
    /// Evaluate a formula under an assignment like "A=1,B=1/2".
    Eval {
        formula: String,
        #[arg(long)]
        assign: String,
    },
    /// Print the full three-valued truth table of a formula.
    TruthTable { formula: String },
    /// Check three-valued validity by exhaustive enumeration.
    Valid { formula: String },
    /// Check entailment from premises to a conclusion.
    Entails {
        /// Premise formula; repeatable.
        #[arg(long = "premise")]
        premises: Vec<String>,
        conclusion: String,
    },
    /// Check the builtin proof corpus, or extra scripts from a file.
    CheckProof {
        /// JSON proof-script file checked after the builtin corpus.
        #[arg(long)]
        proofs: Option<PathBuf>,
    },
    /// Algebra and axiom audits.
    #[command(subcommand)]
    Audit (AuditCommand),
    /// Partition a universe into species, opposite, and intermediary.
    Trichotomy {
        /// JSON file {"universe": [...], "positive": [...], "opposite": [...]}.
        #[arg(long)]
        data: PathBuf,
    },
    /// Run the decision pipeline on an income/savings scenario.
    Decide {
        #[arg(long)]
        income: f64,
        #[arg(long)]
        savings: f64,
        /// Integrated-data CSV; the builtin table when omitted.
        #[arg(long)]
        data: Option<PathBuf>,
        /// TOML overrides for elasticities and lambda.
        #[arg(long)]
        config: Option<PathBuf>,
    },
}

#[derive(Subcommand)]
enum AuditCommand {
    /// Grid, set-algebra, and classification audit of the negations.
    Scoi {
        /// Random fuzzy-set triples for the set-algebra audit.
        #[arg(long, default_value_t = 1000)]
        samples: usize,
        /// Universe size for the random sets.
        #[arg(long, default_value_t = 16)]
        universe_size: usize,
        /// Grid pitch over [0, 1].
        #[arg(long, default_value_t = 1e-3)]
        step: f64,
    },
    /// Validity audit of the axiom schemas plus the modus-ponens check.
    Axioms,
}

struct Failure {
    code: &'static str,
    message: String,
}

impl Failure {
    fn new(code: &'static str, message: impl Into<String>) -> Failure {
        Failure {
            code,
            message: message.into(),
        }
    }
}

macro_rules! domain {
    ($code:literal) => {
        |e| Failure::new($code, e.to_string())
    };
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(err) => {
            // clap renders its own usage text; keep its stream conventions
            let _ = err.print();
            return ExitCode::from(2);
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(failure) => {
            eprintln!("error[{}]: {}", failure.code, failure.message);
            ExitCode::from(1)
        }
    }
}

fn negation_config(common: &Common) -> Result<NegationConfig, Failure> {
    let lambda = Lambda::new(common.lambda).map_err(domain!("lambda"))?;
    Ok(NegationConfig::with_variant(lambda, common.variant.into()))
}

fn parse_formula(text: &str) -> Result<trineg::Formula, Failure> {
    parse(text).map_err(domain!("parse"))
}

fn parse_assignment(text: &str) -> Result<Assignment, Failure> {
    let mut out = Assignment::new();
    for part in text.split(',').filter(|p| !p.trim().is_empty()) {
        let (name, value) = part
            .split_once('=')
            .ok_or_else(|| Failure::new("assign", format!("expected name=value, got {part:?}")))?;
        let value = match value.trim() {
            "0" => TruthValue3::Zero,
            "1/2" | "0.5" => TruthValue3::Half,
            "1" => TruthValue3::One,
            other => {
                return Err(Failure::new(
                    "assign",
                    format!("truth value must be 0, 1/2, or 1, got {other:?}"),
                ))
            }
        };
        out.insert(name.trim().to_string(), value);
    }
    Ok(out)
}

fn print_json<T: serde::Serialize>(value: &T) -> Result<(), Failure> {
    let text = serde_json::to_string_pretty(value).map_err(domain!("json"))?;
    println!("{text}");
    Ok(())
}

fn trim6(x: f64) -> String {
    let rounded = (x * 1e6).round() / 1e6;
    let mut s = format!("{rounded:.6}");
    while s.ends_with('0') {
        s.pop();
    }
    if s.ends_with('.') {
        s.pop();
    }
    s
}

fn run(cli: Cli) -> Result<(), Failure> {
    let common = cli.common.clone();
    let json = common.format == FormatArg::Json;
    match cli.command {
        Command::Neg { degree, set } => {
            let cfg = negation_config(&common)?;
            match (degree, set) {
                (Some(d), None) => {
                    let d = TruthDegree::new(d).map_err(domain!("degree"))?;
                    let (o, i, c) = (opp_neg(d), int_neg(d, cfg), con_neg(d, cfg));
                    if json {
                        print_json(&serde_json::json!({
                            "degree": d.value(),
                            "lambda": cfg.lambda.value(),
                            "variant": cfg.variant.to_string(),
                            "opposite": o.value(),
                            "intermediary": i.value(),
                            "contradictory": c.value(),
                        }))?;
                    } else {
                        println!(
                            "opposite {}, intermediary {}, contradictory {}",
                            trim6(o.value()),
                            trim6(i.value()),
                            trim6(c.value())
                        );
                    }
                    Ok(())
                }
                (None, Some(path)) => {
                    let text = std::fs::read_to_string(&path).map_err(domain!("io"))?;
                    let set: FuzzySet = serde_json::from_str(&text).map_err(domain!("set"))?;
                    let out = serde_json::json!({
                        "opposite": set.lift_negation(NegationKind::Opposite, cfg),
                        "intermediary": set.lift_negation(NegationKind::Intermediary, cfg),
                        "contradictory": set.lift_negation(NegationKind::Contradictory, cfg),
                    });
                    if json {
                        print_json(&out)?;
                    } else {
                        for kind in ["opposite", "intermediary", "contradictory"] {
                            println!("{kind}: {}", serde_json::to_string(&out[kind]).unwrap());
                        }
                    }
                    Ok(())
                }
                _ => Err(Failure::new(
                    "usage",
                    "pass exactly one of a degree or --set <file>",
                )),
            }
        }
        Command::Eval { formula, assign } => {
            let f = parse_formula(&formula)?;
            let a = parse_assignment(&assign)?;
            let v = eval(&f, &a, common.semantics.into()).map_err(domain!("eval"))?;
            if json {
                print_json(&serde_json::json!({"formula": formula, "value": v.to_string()}))?;
            } else {
                println!("{v}");
            }
            Ok(())
        }
        Command::TruthTable { formula } => {
            let f = parse_formula(&formula)?;
            let table = truth_table(&f, common.semantics.into()).map_err(domain!("semantics"))?;
            if json {
                print_json(&table)?;
            } else {
                print!("{}", table.render_text());
            }
            Ok(())
        }
        Command::Valid { formula } => {
            let f = parse_formula(&formula)?;
            let r = is_valid(&f, common.semantics.into()).map_err(domain!("semantics"))?;
            if json {
                print_json(&r)?;
            } else if r.is_valid() {
                println!(
                    "valid ({}/{} assignments)",
                    r.assignments_checked, r.assignments_checked
                );
            } else {
                println!("invalid; first counterexamples:");
                for a in &r.counterexamples {
                    println!("  {}", render_assignment(a));
                }
            }
            Ok(())
        }
        Command::Entails {
            premises,
            conclusion,
        } => {
            let premises = premises
                .iter()
                .map(|p| parse_formula(p))
                .collect::<Result<Vec<_>, _>>()?;
            let goal = parse_formula(&conclusion)?;
            let r = entails(&premises, &goal, common.semantics.into())
                .map_err(domain!("semantics"))?;
            if json {
                print_json(&r)?;
            } else if r.is_valid() {
                println!(
                    "valid deduction ({} assignments)",
                    r.assignments_checked
                );
            } else {
                println!("invalid deduction; first counterexamples:");
                for a in &r.counterexamples {
                    println!("  {}", render_assignment(a));
                }
            }
            Ok(())
        }
        Command::CheckProof { proofs } => {
            let schemas = builtin_schemas();
            let mut registry = TheoremRegistry::new();
            let mut reports = check_corpus(&load_corpus(), &schemas, &mut registry);
            if let Some(path) = proofs {
                let text = std::fs::read_to_string(&path).map_err(domain!("io"))?;
                let extra = parse_corpus(&text).map_err(domain!("proofs"))?;
                reports.extend(check_corpus(&extra, &schemas, &mut registry));
            }
            if json {
                print_json(&reports)?;
            } else {
                for report in &reports {
                    println!(
                        "{}: {}",
                        report.name,
                        if report.accepted { "accepted" } else { "not accepted" }
                    );
                    for line in &report.lines {
                        let verdict = if line.checks { "checks" } else { "FAILS" };
                        match &line.failure {
                            Some(reason) => println!(
                                "  ({}) {:<40} {} [{}]",
                                line.index, line.formula, verdict, reason
                            ),
                            None => println!("  ({}) {:<40} {}", line.index, line.formula, verdict),
                        }
                    }
                }
            }
            Ok(())
        }
        Command::Audit(AuditCommand::Scoi {
            samples,
            universe_size,
            step,
        }) => {
            let cfg = negation_config(&common)?;
            let grid = GridSpec::new(vec![cfg.lambda], step, 1e-9).map_err(domain!("grid"))?;
            let pointwise = audit_pointwise(&grid, cfg.variant);
            let sets = audit_set_algebra(samples, universe_size, cfg, common.seed)
                .map_err(domain!("audit"))?;
            let classifications: Vec<_> = [
                NegationKind::Opposite,
                NegationKind::Intermediary,
                NegationKind::Contradictory,
            ]
            .into_iter()
            .map(|kind| classify_negation(kind, cfg.lambda, &grid, cfg.variant))
            .collect();
            if json {
                print_json(&serde_json::json!({
                    "pointwise": pointwise,
                    "set_algebra": sets,
                    "classification": classifications,
                }))?;
            } else {
                println!("pointwise claims:");
                print!("{}", pointwise.render_text());
                println!("set-algebra claims:");
                print!("{}", sets.render_text());
                println!("classification:");
                for c in &classifications {
                    println!(
                        "  {:<14} strict={} strong={} equilibrium(first)={:?}",
                        c.which.to_string(),
                        c.is_strict,
                        c.is_strong,
                        c.equilibrium_points.first()
                    );
                }
            }
            Ok(())
        }
        Command::Audit(AuditCommand::Axioms) => {
            let report = audit_axioms(&builtin_schemas(), common.semantics.into(), common.seed)
                .map_err(domain!("semantics"))?;
            if json {
                print_json(&report)?;
            } else {
                println!(
                    "implication table: {}; modus ponens preserves designated value: {}",
                    report.implication, report.mp_preserves_designated
                );
                for s in &report.schemas {
                    let verdict = if s.result.is_valid() {
                        "valid".to_string()
                    } else {
                        format!(
                            "invalid ({} counterexample{})",
                            s.result.counterexamples.len(),
                            if s.result.counterexamples.len() == 1 { "" } else { "s" }
                        )
                    };
                    println!("  {:<8} {:<44} {}", s.name, s.canonical, verdict);
                    for a in s.result.counterexamples.iter().take(1) {
                        println!("           counterexample: {}", render_assignment(a));
                    }
                }
            }
            Ok(())
        }
        Command::Trichotomy { data } => {
            let text = std::fs::read_to_string(&data).map_err(domain!("io"))?;
            let data: ConceptTripleData = serde_json::from_str(&text).map_err(domain!("data"))?;
            let triple = data.build().map_err(domain!("trichotomy"))?;
            let intermediary = triple.intermediary();
            let star = triple.verify_star_identity();
            if json {
                print_json(&serde_json::json!({
                    "positive": triple.positive(),
                    "opposite": triple.opposite(),
                    "intermediary": intermediary,
                    "star_identity_holds": star.holds,
                }))?;
            } else {
                println!("positive:     {:?}", triple.positive());
                println!("opposite:     {:?}", triple.opposite());
                println!("intermediary: {intermediary:?}");
                println!("star identity holds: {}", star.holds);
            }
            Ok(())
        }
        Command::Decide {
            income,
            savings,
            data,
            config,
        } => {
            let table = match data {
                Some(path) => IntegratedDataTable::from_csv_path(&path).map_err(domain!("data"))?,
                None => builtin_table(),
            };
            let overrides = match config {
                Some(path) => {
                    let text = std::fs::read_to_string(&path).map_err(domain!("io"))?;
                    PipelineConfig::from_toml_str(&text).map_err(domain!("config"))?
                }
                None => PipelineConfig::default(),
            };
            let report = decide(
                Scenario { income, savings },
                &builtin_rules(),
                &table,
                common.variant.into(),
                &overrides,
            )
            .map_err(domain!("decide"))?;
            if json {
                print_json(&report)?;
            } else {
                print!("{}", report.render_text());
            }
            Ok(())
        }
    }
}

fn render_assignment(a: &BTreeMap<String, TruthValue3>) -> String {
    a.iter()
        .map(|(name, v)| format!("{name}={v}"))
        .collect::<Vec<_>>()
        .join(", ")
}
