//! Multi-attribute fuzzy decision pipeline: integrated survey data in,
//! distance-ratio memberships, derived thresholds, production rules, and
//! a final recommendation out.
//!
//! For each attribute the table's extreme values anchor a clamped linear
//! ramp ("high" membership). "Low" is the opposite negation of "high",
//! "moderate" is the intermediary negation at the derived threshold
//! lambda. A rule fires when every premise degree meets its threshold.
//! Reports print three decimals (round half up) but every comparison
//! uses the unrounded values.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::path::Path;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::degree::{int_neg, Lambda, NegationConfig, NegationVariant, TruthDegree};

#[derive(Debug, Error)]
pub enum DecisionError {
    #[error("csv: {0}")]
    Csv(#[from] csv::Error),
    #[error("io: {0}")]
    Io(#[from] std::io::Error),
    #[error("config: {0}")]
    Config(#[from] toml::de::Error),
    #[error("table has no rows")]
    EmptyTable,
    #[error("row {province}: {reason}")]
    BadRow { province: String, reason: String },
    #[error("degenerate ramp: low anchor {low} must stay below high anchor {high}")]
    DegenerateRamp { low: f64, high: f64 },
    #[error("derived lambda {0} is outside (0, 1)")]
    BadLambda(f64),
    #[error("no rules supplied")]
    NoRules,
    #[error("scenario values must be non-negative, got {0}")]
    NegativeScenario(f64),
}

/// The two decision attributes.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Attribute {
    Income,
    Savings,
}

impl std::fmt::Display for Attribute {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Attribute::Income => write!(f, "income"),
            Attribute::Savings => write!(f, "savings"),
        }
    }
}

/// Per-province integrated survey row (currency amounts).
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ProvinceRow {
    pub province: String,
    pub high_income: f64,
    pub low_income: f64,
    pub high_deposit: f64,
    pub low_deposit: f64,
}

/// Elasticity margins applied to the table extremes.
#[derive(Debug, Clone, Copy, Serialize, Deserialize)]
pub struct Elasticities {
    pub high_income: f64,
    pub low_income: f64,
    pub high_deposit: f64,
    pub low_deposit: f64,
}

impl Default for Elasticities {
    fn default() -> Self {
        Elasticities {
            high_income: 500.0,
            low_income: 100.0,
            high_deposit: 20_000.0,
            low_deposit: 10_000.0,
        }
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct IntegratedDataTable {
    pub rows: Vec<ProvinceRow>,
    pub elasticities: Elasticities,
}

impl IntegratedDataTable {
    pub fn new(rows: Vec<ProvinceRow>, elasticities: Elasticities) -> Result<Self, DecisionError> {
        if rows.is_empty() {
            return Err(DecisionError::EmptyTable);
        }
        for row in &rows {
            if row.low_income >= row.high_income {
                return Err(DecisionError::BadRow {
                    province: row.province.clone(),
                    reason: "low income bound must stay below the high income bound".into(),
                });
            }
            if row.low_deposit >= row.high_deposit {
                return Err(DecisionError::BadRow {
                    province: row.province.clone(),
                    reason: "low deposit bound must stay below the high deposit bound".into(),
                });
            }
        }
        Ok(IntegratedDataTable { rows, elasticities })
    }

    /// Reads `province,high_income,low_income,high_deposit,low_deposit`.
    pub fn from_csv_str(text: &str) -> Result<Self, DecisionError> {
        let mut reader = csv::ReaderBuilder::new()
            .trim(csv::Trim::All)
            .from_reader(text.as_bytes());
        let mut rows = Vec::new();
        for record in reader.deserialize::<ProvinceRow>() {
            rows.push(record?);
        }
        IntegratedDataTable::new(rows, Elasticities::default())
    }

    pub fn from_csv_path(path: &Path) -> Result<Self, DecisionError> {
        IntegratedDataTable::from_csv_str(&std::fs::read_to_string(path)?)
    }

    fn high_bound(&self, attribute: Attribute, row: &ProvinceRow) -> f64 {
        match attribute {
            Attribute::Income => row.high_income,
            Attribute::Savings => row.high_deposit,
        }
    }
}

/// The integrated data table shipped with the crate.
pub fn builtin_table() -> IntegratedDataTable {
    IntegratedDataTable::from_csv_str(include_str!("../../../data/table2.csv"))
        .expect("builtin table parses")
}

/// Optional overrides: elasticities and per-attribute lambda.
#[derive(Debug, Clone, Default, Deserialize)]
pub struct PipelineConfig {
    pub elasticities: Option<Elasticities>,
    pub lambda_income: Option<f64>,
    pub lambda_savings: Option<f64>,
}

impl PipelineConfig {
    pub fn from_toml_str(text: &str) -> Result<Self, DecisionError> {
        Ok(toml::from_str(text)?)
    }
}

/// Ramp anchors for one attribute's "high" membership.
#[derive(Debug, Clone, Copy, Serialize)]
pub struct MembershipSpec {
    pub alpha_t: f64,
    pub eps_t: f64,
    pub alpha_f: f64,
    pub eps_f: f64,
}

impl MembershipSpec {
    pub fn new(alpha_t: f64, eps_t: f64, alpha_f: f64, eps_f: f64) -> Result<Self, DecisionError> {
        let spec = MembershipSpec {
            alpha_t,
            eps_t,
            alpha_f,
            eps_f,
        };
        if spec.ramp_low() >= spec.ramp_high() {
            return Err(DecisionError::DegenerateRamp {
                low: spec.ramp_low(),
                high: spec.ramp_high(),
            });
        }
        Ok(spec)
    }

    pub fn ramp_low(&self) -> f64 {
        self.alpha_f + self.eps_f
    }

    pub fn ramp_high(&self) -> f64 {
        self.alpha_t - self.eps_t
    }
}

/// Builds the membership spec for an attribute: the maximum of the high
/// column anchors the top of the ramp, the minimum of the low column the
/// bottom, widened by the elasticities.
pub fn derive_spec(
    table: &IntegratedDataTable,
    attribute: Attribute,
) -> Result<MembershipSpec, DecisionError> {
    if table.rows.is_empty() {
        return Err(DecisionError::EmptyTable);
    }
    let (highs, lows, eps_t, eps_f): (Vec<f64>, Vec<f64>, f64, f64) = match attribute {
        Attribute::Income => (
            table.rows.iter().map(|r| r.high_income).collect(),
            table.rows.iter().map(|r| r.low_income).collect(),
            table.elasticities.high_income,
            table.elasticities.low_income,
        ),
        Attribute::Savings => (
            table.rows.iter().map(|r| r.high_deposit).collect(),
            table.rows.iter().map(|r| r.low_deposit).collect(),
            table.elasticities.high_deposit,
            table.elasticities.low_deposit,
        ),
    };
    let alpha_t = highs.iter().cloned().fold(f64::MIN, f64::max);
    let alpha_f = lows.iter().cloned().fold(f64::MAX, f64::min);
    MembershipSpec::new(alpha_t, eps_t, alpha_f, eps_f)
}

/// Distance-ratio membership in the "high" set: 0 below the ramp, a
/// linear ratio inside it, 1 at or above its top.
pub fn membership_high(x: f64, spec: &MembershipSpec) -> Result<TruthDegree, DecisionError> {
    if x < 0.0 || x.is_nan() {
        return Err(DecisionError::NegativeScenario(x));
    }
    let low = spec.ramp_low();
    let high = spec.ramp_high();
    let v = if x <= low {
        0.0
    } else if x >= high {
        1.0
    } else {
        (x - low) / (high - low)
    };
    Ok(TruthDegree::clamped(v))
}

/// Membership in the "low" set: the opposite negation of "high".
pub fn membership_low(x: f64, spec: &MembershipSpec) -> Result<TruthDegree, DecisionError> {
    Ok(crate::degree::opp_neg(membership_high(x, spec)?))
}

/// Membership in the "moderate" set: the intermediary negation of "high"
/// at the attribute's threshold lambda.
pub fn membership_moderate(
    x: f64,
    spec: &MembershipSpec,
    cfg: NegationConfig,
) -> Result<TruthDegree, DecisionError> {
    Ok(int_neg(membership_high(x, spec)?, cfg))
}

/// General thresholds for one attribute: the high/low gate and the
/// moderate band `(lambda, 1 - lambda)`.
#[derive(Debug, Clone, Copy, Serialize)]
pub struct ThresholdSet {
    pub lambda_high: f64,
    pub lambda_low: f64,
    pub band: (f64, f64),
}

#[derive(Debug, Clone, Serialize)]
pub struct ThresholdReport {
    pub attribute: Attribute,
    pub per_province: Vec<(String, f64)>,
    pub general: ThresholdSet,
}

/// Derives the thresholds: per province the average of the clamped
/// membership of its own "high" bound and 1; the general lambda is the
/// mean over provinces, and the band is `(lambda, 1 - lambda)`.
pub fn derive_thresholds(
    table: &IntegratedDataTable,
    spec: &MembershipSpec,
    attribute: Attribute,
) -> Result<ThresholdReport, DecisionError> {
    if table.rows.is_empty() {
        return Err(DecisionError::EmptyTable);
    }
    let mut per_province = Vec::with_capacity(table.rows.len());
    for row in &table.rows {
        let bound = table.high_bound(attribute, row);
        let m = membership_high(bound, spec)?.value();
        per_province.push((row.province.clone(), (m + 1.0) / 2.0));
    }
    let lambda_high =
        per_province.iter().map(|(_, t)| t).sum::<f64>() / per_province.len() as f64;
    if !(0.0..=1.0).contains(&lambda_high) || lambda_high == 0.0 || lambda_high == 1.0 {
        return Err(DecisionError::BadLambda(lambda_high));
    }
    Ok(ThresholdReport {
        attribute,
        per_province,
        general: ThresholdSet {
            lambda_high,
            lambda_low: lambda_high,
            band: (lambda_high, 1.0 - lambda_high),
        },
    })
}

/// Which membership a rule premise gates on.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    High,
    Low,
    Moderate,
}

impl std::fmt::Display for Mode {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Mode::High => write!(f, "high"),
            Mode::Low => write!(f, "low"),
            Mode::Moderate => write!(f, "moderate"),
        }
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct Premise {
    pub attribute: Attribute,
    pub mode: Mode,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ProductionRule {
    pub name: String,
    pub premises: Vec<Premise>,
    pub conclusion: String,
    pub belief: f64,
}

impl ProductionRule {
    pub fn new(
        name: &str,
        premises: Vec<(Attribute, Mode)>,
        conclusion: &str,
    ) -> ProductionRule {
        ProductionRule {
            name: name.to_string(),
            premises: premises
                .into_iter()
                .map(|(attribute, mode)| Premise { attribute, mode })
                .collect(),
            conclusion: conclusion.to_string(),
            belief: 1.0,
        }
    }
}

/// The four alternative schemes of the worked savings/income example.
pub fn builtin_rules() -> Vec<ProductionRule> {
    use Attribute::*;
    use Mode::*;
    vec![
        ProductionRule::new("(a)", vec![(Savings, Low)], "Bank(surplus)"),
        ProductionRule::new("(b)", vec![(Savings, High), (Income, High)], "Consume(surplus)"),
        ProductionRule::new(
            "(c)",
            vec![(Savings, High), (Income, Moderate)],
            "More(Consume(surplus), Bank(surplus))",
        ),
        ProductionRule::new(
            "(d)",
            vec![(Savings, Moderate), (Income, Moderate)],
            "More(Bank(surplus), Consume(surplus))",
        ),
    ]
}

#[derive(Debug, Clone, Copy, Serialize)]
pub struct Scenario {
    pub income: f64,
    pub savings: f64,
}

#[derive(Debug, Clone, Serialize)]
pub struct PremiseEvaluation {
    pub attribute: Attribute,
    pub mode: Mode,
    pub degree: f64,
    /// Threshold the degree was compared against; a band for moderate.
    pub threshold: (f64, Option<f64>),
    pub satisfied: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct RuleEvaluation {
    pub name: String,
    pub conclusion: String,
    pub belief: f64,
    pub fired: bool,
    pub premises: Vec<PremiseEvaluation>,
}

#[derive(Debug, Clone, Serialize)]
pub struct DecisionReport {
    pub scenario: Scenario,
    pub thresholds: Vec<ThresholdReport>,
    pub rules: Vec<RuleEvaluation>,
    pub recommendation: Option<String>,
    pub fired: Vec<String>,
    pub tie: bool,
}

/// Rounds half-up to three decimals, for display only.
pub fn round3(x: f64) -> f64 {
    (x * 1000.0 + 0.5).floor() / 1000.0
}

impl DecisionReport {
    pub fn render_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(
            out,
            "scenario: income {} savings {}",
            self.scenario.income, self.scenario.savings
        );
        for t in &self.thresholds {
            let _ = writeln!(out, "{} thresholds:", t.attribute);
            for (province, v) in &t.per_province {
                let _ = writeln!(out, "  {province:<12} {:.3}", round3(*v));
            }
            let _ = writeln!(
                out,
                "  general lambda {:.3}, band ({:.3}, {:.3})",
                round3(t.general.lambda_high),
                round3(t.general.band.0),
                round3(t.general.band.1)
            );
        }
        for r in &self.rules {
            let _ = writeln!(
                out,
                "rule {} -> {}: {}",
                r.name,
                r.conclusion,
                if r.fired { "fired" } else { "not fired" }
            );
            for p in &r.premises {
                let gate = match p.threshold.1 {
                    Some(upper) => format!("in [{:.3}, {:.3}]", round3(p.threshold.0), round3(upper)),
                    None => format!(">= {:.3}", round3(p.threshold.0)),
                };
                let _ = writeln!(
                    out,
                    "  {} {}: degree {:.3} {} -> {}",
                    p.attribute,
                    p.mode,
                    round3(p.degree),
                    gate,
                    if p.satisfied { "ok" } else { "violated" }
                );
            }
        }
        let _ = match &self.recommendation {
            Some(name) => writeln!(
                out,
                "recommendation: {name}{}",
                if self.tie { " (tie)" } else { "" }
            ),
            None => writeln!(out, "recommendation: none"),
        };
        out
    }
}

/// Intermediate products of the pipeline, for callers that need the
/// specs and thresholds alongside the report.
#[derive(Debug, Clone)]
pub struct Pipeline {
    pub income_spec: MembershipSpec,
    pub savings_spec: MembershipSpec,
    pub income_thresholds: ThresholdReport,
    pub savings_thresholds: ThresholdReport,
    pub variant: NegationVariant,
}

impl Pipeline {
    pub fn build(table: &IntegratedDataTable, variant: NegationVariant) -> Result<Self, DecisionError> {
        Self::build_with_overrides(table, variant, &PipelineConfig::default())
    }

    pub fn build_with_overrides(
        table: &IntegratedDataTable,
        variant: NegationVariant,
        overrides: &PipelineConfig,
    ) -> Result<Self, DecisionError> {
        let income_spec = derive_spec(table, Attribute::Income)?;
        let savings_spec = derive_spec(table, Attribute::Savings)?;
        let mut income_thresholds = derive_thresholds(table, &income_spec, Attribute::Income)?;
        let mut savings_thresholds = derive_thresholds(table, &savings_spec, Attribute::Savings)?;
        if let Some(l) = overrides.lambda_income {
            if !(0.0 < l && l < 1.0) {
                return Err(DecisionError::BadLambda(l));
            }
            income_thresholds.general = ThresholdSet {
                lambda_high: l,
                lambda_low: l,
                band: (l, 1.0 - l),
            };
        }
        if let Some(l) = overrides.lambda_savings {
            if !(0.0 < l && l < 1.0) {
                return Err(DecisionError::BadLambda(l));
            }
            savings_thresholds.general = ThresholdSet {
                lambda_high: l,
                lambda_low: l,
                band: (l, 1.0 - l),
            };
        }
        Ok(Pipeline {
            income_spec,
            savings_spec,
            income_thresholds,
            savings_thresholds,
            variant,
        })
    }

    fn spec(&self, attribute: Attribute) -> &MembershipSpec {
        match attribute {
            Attribute::Income => &self.income_spec,
            Attribute::Savings => &self.savings_spec,
        }
    }

    fn thresholds(&self, attribute: Attribute) -> &ThresholdSet {
        match attribute {
            Attribute::Income => &self.income_thresholds.general,
            Attribute::Savings => &self.savings_thresholds.general,
        }
    }

    fn negation_config(&self, attribute: Attribute) -> Result<NegationConfig, DecisionError> {
        let lambda = self.thresholds(attribute).lambda_high;
        Ok(NegationConfig::with_variant(
            Lambda::new(lambda).map_err(|_| DecisionError::BadLambda(lambda))?,
            self.variant,
        ))
    }

    /// Evaluates one rule against a scenario; the rule fires when every
    /// premise degree meets its threshold condition.
    pub fn evaluate_rule(
        &self,
        rule: &ProductionRule,
        scenario: Scenario,
    ) -> Result<RuleEvaluation, DecisionError> {
        let mut premises = Vec::with_capacity(rule.premises.len());
        let mut fired = true;
        for premise in &rule.premises {
            let x = match premise.attribute {
                Attribute::Income => scenario.income,
                Attribute::Savings => scenario.savings,
            };
            let spec = self.spec(premise.attribute);
            let thresholds = self.thresholds(premise.attribute);
            let (degree, threshold, satisfied) = match premise.mode {
                Mode::High => {
                    let d = membership_high(x, spec)?.value();
                    (d, (thresholds.lambda_high, None), d >= thresholds.lambda_high)
                }
                Mode::Low => {
                    let d = membership_low(x, spec)?.value();
                    (d, (thresholds.lambda_low, None), d >= thresholds.lambda_low)
                }
                Mode::Moderate => {
                    let cfg = self.negation_config(premise.attribute)?;
                    let d = membership_moderate(x, spec, cfg)?.value();
                    let (upper, lower) = thresholds.band;
                    (d, (lower, Some(upper)), lower <= d && d <= upper)
                }
            };
            fired &= satisfied;
            premises.push(PremiseEvaluation {
                attribute: premise.attribute,
                mode: premise.mode,
                degree,
                threshold,
                satisfied,
            });
        }
        Ok(RuleEvaluation {
            name: rule.name.clone(),
            conclusion: rule.conclusion.clone(),
            belief: rule.belief,
            fired,
            premises,
        })
    }
}

/// Runs the whole pipeline and reports every rule evaluation plus the
/// recommendation: the unique fired rule's conclusion, all fired rules
/// with a tie flag, or none.
pub fn decide(
    scenario: Scenario,
    rules: &[ProductionRule],
    table: &IntegratedDataTable,
    variant: NegationVariant,
    overrides: &PipelineConfig,
) -> Result<DecisionReport, DecisionError> {
    if rules.is_empty() {
        return Err(DecisionError::NoRules);
    }
    if scenario.income < 0.0 || scenario.savings < 0.0 {
        return Err(DecisionError::NegativeScenario(
            scenario.income.min(scenario.savings),
        ));
    }
    let mut effective = table.clone();
    if let Some(e) = overrides.elasticities {
        effective.elasticities = e;
    }
    let pipeline = Pipeline::build_with_overrides(&effective, variant, overrides)?;
    let evaluations = rules
        .iter()
        .map(|r| pipeline.evaluate_rule(r, scenario))
        .collect::<Result<Vec<_>, _>>()?;
    let fired: Vec<String> = evaluations
        .iter()
        .filter(|e| e.fired)
        .map(|e| e.name.clone())
        .collect();
    let recommendation = fired.first().cloned();
    let tie = fired.len() > 1;
    Ok(DecisionReport {
        scenario,
        thresholds: vec![
            pipeline.income_thresholds.clone(),
            pipeline.savings_thresholds.clone(),
        ],
        rules: evaluations,
        recommendation,
        fired,
        tie,
    })
}

/// Per-province threshold map, rounded for display.
pub fn rounded_thresholds(report: &ThresholdReport) -> BTreeMap<String, f64> {
    report
        .per_province
        .iter()
        .map(|(p, v)| (p.clone(), round3(*v)))
        .collect()
}
