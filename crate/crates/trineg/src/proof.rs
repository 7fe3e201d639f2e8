//! Data-driven Hilbert proof checking: axiom-schema matching, rule
//! application, a theorem registry, and a regression corpus of published
//! derivations.
//!
//! Checking is purely structural; no truth values are computed here.
//! A line checks when its justification reproduces its formula:
//!
//! * `premise i`: the formula equals the i-th script premise;
//! * `mp [i, j]`: one earlier line is `G`, the other `G -> F`, and the
//!   line is `F`;
//! * `axiom`/`lemma`: a substitution applied to the schema pattern (or
//!   registry goal) yields the line, optionally after peeling a chain of
//!   modus-ponens steps whose antecedents are earlier lines. A lemma with
//!   premises additionally needs each substituted premise to appear among
//!   the earlier lines or the script premises.
//!
//! Several published axioms are typeset with ambiguous negation glyphs;
//! each disputed schema ships a default transcription plus an `_alt`
//! reading so that no disputed text is silently canonized.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::syntax::{parse, render, Formula, ParseError};

/// Substitution from metavariable names (`A`, `B`, `C`) to formulas.
pub type Substitution = BTreeMap<String, Formula>;

pub const METAVARIABLES: [&str; 3] = ["A", "B", "C"];

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Provenance {
    Paper,
    AlternateReading,
}

/// An axiom schema over the metavariables `A`, `B`, `C`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct AxiomSchema {
    pub name: String,
    pub pattern: Formula,
    pub provenance: Provenance,
}

impl AxiomSchema {
    fn new(name: &str, pattern: &str, provenance: Provenance) -> AxiomSchema {
        AxiomSchema {
            name: name.to_string(),
            pattern: parse(pattern).expect("builtin schema parses"),
            provenance,
        }
    }
}

/// The thirteen axioms in their default transcription, plus alternate
/// readings for the schemas whose printed negation glyphs are ambiguous.
pub fn builtin_schemas() -> Vec<AxiomSchema> {
    use Provenance::*;
    vec![
        AxiomSchema::new("a1", "A -> (B -> A)", Paper),
        AxiomSchema::new("a2", "(A -> (A -> B)) -> (A -> B)", Paper),
        AxiomSchema::new("a3", "(A -> B) -> ((B -> C) -> (A -> C))", Paper),
        AxiomSchema::new("a4", "(A -> !B) -> (B -> !A)", Paper),
        AxiomSchema::new("a4_alt", "(A -> #B) -> (B -> #A)", AlternateReading),
        AxiomSchema::new("a5", "(A -> #B) -> (B -> #A)", Paper),
        AxiomSchema::new("a5_alt", "(A -> #A) -> (B -> #A)", AlternateReading),
        AxiomSchema::new("a6", "#A -> (A -> B)", Paper),
        AxiomSchema::new("a6_alt", "!A -> (A -> B)", AlternateReading),
        AxiomSchema::new("a7", "((A -> #A) -> B) -> ((A -> B) -> B)", Paper),
        AxiomSchema::new("a7_alt", "((A -> !A) -> B) -> ((A -> B) -> B)", AlternateReading),
        AxiomSchema::new("a8", "A -> A | B", Paper),
        AxiomSchema::new("a9", "B -> A | B", Paper),
        AxiomSchema::new("a10", "A & B -> A", Paper),
        AxiomSchema::new("a11", "A & B -> B", Paper),
        AxiomSchema::new("a12", "#A -> !A & !~A", Paper),
        AxiomSchema::new("a12_alt", "!A -> #A & !~A", AlternateReading),
        AxiomSchema::new("a13", "~A -> !A & !#A", Paper),
        AxiomSchema::new("a13_alt", "~A -> #A & !!A", AlternateReading),
    ]
}

/// Structural schema matching: finds the substitution under which the
/// pattern yields `target` exactly, binding repeated metavariables
/// consistently. Atoms named `A`, `B`, `C` in the pattern are the
/// metavariables; any other pattern atom must match itself.
pub fn match_schema(pattern: &Formula, target: &Formula) -> Option<Substitution> {
    let mut subst = Substitution::new();
    if match_into(pattern, target, &mut subst) {
        Some(subst)
    } else {
        None
    }
}

fn match_into(pattern: &Formula, target: &Formula, subst: &mut Substitution) -> bool {
    match (pattern, target) {
        (Formula::Atom(name), t) if METAVARIABLES.contains(&name.as_str()) => {
            match subst.get(name) {
                Some(bound) => bound == t,
                None => {
                    subst.insert(name.clone(), t.clone());
                    true
                }
            }
        }
        (Formula::Atom(a), Formula::Atom(b)) => a == b,
        (Formula::ConNeg(p), Formula::ConNeg(t)) => match_into(p, t, subst),
        (Formula::OppNeg(p), Formula::OppNeg(t)) => match_into(p, t, subst),
        (Formula::IntNeg(p), Formula::IntNeg(t)) => match_into(p, t, subst),
        (Formula::And(p1, p2), Formula::And(t1, t2))
        | (Formula::Or(p1, p2), Formula::Or(t1, t2))
        | (Formula::Implies(p1, p2), Formula::Implies(t1, t2)) => {
            match_into(p1, t1, subst) && match_into(p2, t2, subst)
        }
        _ => false,
    }
}

/// Applies a substitution to a pattern: metavariable atoms are replaced,
/// everything else is rebuilt unchanged.
pub fn apply_substitution(pattern: &Formula, subst: &Substitution) -> Formula {
    match pattern {
        Formula::Atom(name) => subst
            .get(name)
            .cloned()
            .unwrap_or_else(|| pattern.clone()),
        Formula::ConNeg(g) => Formula::con_neg(apply_substitution(g, subst)),
        Formula::OppNeg(g) => Formula::opp_neg(apply_substitution(g, subst)),
        Formula::IntNeg(g) => Formula::int_neg(apply_substitution(g, subst)),
        Formula::And(a, b) => Formula::and(
            apply_substitution(a, subst),
            apply_substitution(b, subst),
        ),
        Formula::Or(a, b) => Formula::or(
            apply_substitution(a, subst),
            apply_substitution(b, subst),
        ),
        Formula::Implies(a, b) => Formula::implies(
            apply_substitution(a, subst),
            apply_substitution(b, subst),
        ),
    }
}

/// Per-line justification. `mp` lists earlier lines consumed as
/// modus-ponens antecedents after instantiating the axiom or lemma.
#[derive(Debug, Clone, PartialEq)]
pub enum Justification {
    Axiom {
        name: String,
        subst: Option<Substitution>,
        mp: Vec<usize>,
    },
    Premise {
        index: usize,
    },
    Mp {
        from: (usize, usize),
    },
    Lemma {
        name: String,
        subst: Option<Substitution>,
        mp: Vec<usize>,
    },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum LineExpectation {
    Checks,
    Fails,
}

#[derive(Debug, Clone)]
pub struct ProofLine {
    pub formula: Formula,
    pub just: Justification,
}

#[derive(Debug, Clone)]
pub struct ProofScript {
    pub name: String,
    pub premises: Vec<Formula>,
    pub lines: Vec<ProofLine>,
    pub goal: Formula,
    /// Recorded per-line verdicts; the regression suite asserts the
    /// realized verdicts equal these.
    pub expected: Option<Vec<LineExpectation>>,
}

/// A corpus entry: either a full script or a bare statement accepted
/// without proof (the text proves it "by the same method").
#[derive(Debug, Clone)]
pub enum CorpusEntry {
    Script(ProofScript),
    Assumed {
        name: String,
        premises: Vec<Formula>,
        goal: Formula,
    },
}

impl CorpusEntry {
    pub fn name(&self) -> &str {
        match self {
            CorpusEntry::Script(s) => &s.name,
            CorpusEntry::Assumed { name, .. } => name,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum EntryProvenance {
    Proved,
    Assumed,
}

#[derive(Debug, Clone)]
pub struct RegistryEntry {
    pub premises: Vec<Formula>,
    pub goal: Formula,
    pub provenance: EntryProvenance,
}

/// Accepted theorems in acceptance order. Entries are never retracted;
/// lemma references can only reach entries accepted earlier.
#[derive(Debug, Default, Clone)]
pub struct TheoremRegistry {
    order: Vec<String>,
    entries: BTreeMap<String, RegistryEntry>,
}

impl TheoremRegistry {
    pub fn new() -> Self {
        TheoremRegistry::default()
    }

    pub fn get(&self, name: &str) -> Option<&RegistryEntry> {
        self.entries.get(name)
    }

    pub fn insert(&mut self, name: &str, entry: RegistryEntry) {
        if self.entries.insert(name.to_string(), entry).is_none() {
            self.order.push(name.to_string());
        }
    }

    pub fn names(&self) -> &[String] {
        &self.order
    }

    pub fn len(&self) -> usize {
        self.order.len()
    }

    pub fn is_empty(&self) -> bool {
        self.order.is_empty()
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct LineReport {
    pub index: usize,
    pub formula: String,
    pub checks: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub failure: Option<String>,
    /// The substitution the checker inferred or verified, rendered.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub substitution: Option<BTreeMap<String, String>>,
}

#[derive(Debug, Clone, Serialize)]
pub struct ProofReport {
    pub name: String,
    pub accepted: bool,
    pub lines: Vec<LineReport>,
    pub goal_matches_last_line: bool,
}

fn render_subst(subst: &Substitution) -> BTreeMap<String, String> {
    subst.iter().map(|(k, v)| (k.clone(), render(v))).collect()
}

/// Folds `mp` line references and the line formula into the implication
/// chain the instantiated schema must equal:
/// `lines[m1] -> (lines[m2] -> ... -> formula)`.
fn chain_target(lines: &[Formula], mp: &[usize], formula: &Formula) -> Option<Formula> {
    let mut target = formula.clone();
    for &r in mp.iter().rev() {
        if r == 0 || r > lines.len() {
            return None;
        }
        target = Formula::implies(lines[r - 1].clone(), target);
    }
    Some(target)
}

struct LineChecker<'a> {
    schemas: &'a [AxiomSchema],
    registry: &'a TheoremRegistry,
    premises: &'a [Formula],
    earlier: &'a [Formula],
}

impl LineChecker<'_> {
    fn check(&self, line: &ProofLine, index: usize) -> (bool, Option<String>, Option<Substitution>) {
        match &line.just {
            Justification::Premise { index: p } => {
                if *p == 0 || *p > self.premises.len() {
                    return (false, Some(format!("premise {p} does not exist")), None);
                }
                if self.premises[p - 1] == line.formula {
                    (true, None, None)
                } else {
                    (
                        false,
                        Some(format!("line differs from premise {p}")),
                        None,
                    )
                }
            }
            Justification::Mp { from: (i, j) } => {
                if *i >= index || *j >= index || *i == 0 || *j == 0 {
                    return (
                        false,
                        Some("modus ponens must reference strictly earlier lines".into()),
                        None,
                    );
                }
                let fi = &self.earlier[i - 1];
                let fj = &self.earlier[j - 1];
                let fits = |imp: &Formula, ant: &Formula| match imp {
                    Formula::Implies(a, b) => {
                        a.as_ref() == ant && b.as_ref() == &line.formula
                    }
                    _ => false,
                };
                if fits(fi, fj) || fits(fj, fi) {
                    (true, None, None)
                } else {
                    (
                        false,
                        Some(format!(
                            "lines {i} and {j} are not an implication and its antecedent for this line"
                        )),
                        None,
                    )
                }
            }
            Justification::Axiom { name, subst, mp } => {
                let Some(schema) = self.schemas.iter().find(|s| &s.name == name) else {
                    return (false, Some(format!("unknown axiom {name}")), None);
                };
                self.check_pattern(&schema.pattern, &[], subst, mp, &line.formula)
            }
            Justification::Lemma { name, subst, mp } => {
                let Some(entry) = self.registry.get(name) else {
                    return (
                        false,
                        Some(format!("lemma {name} is not an accepted registry entry")),
                        None,
                    );
                };
                self.check_pattern(&entry.goal, &entry.premises, subst, mp, &line.formula)
            }
        }
    }

    fn check_pattern(
        &self,
        pattern: &Formula,
        pattern_premises: &[Formula],
        subst: &Option<Substitution>,
        mp: &[usize],
        formula: &Formula,
    ) -> (bool, Option<String>, Option<Substitution>) {
        let Some(target) = chain_target(self.earlier, mp, formula) else {
            return (
                false,
                Some("modus-ponens chain references a line that does not exist yet".into()),
                None,
            );
        };
        let found = match subst {
            Some(given) => {
                if apply_substitution(pattern, given) == target {
                    Some(given.clone())
                } else {
                    None
                }
            }
            None => match_schema(pattern, &target),
        };
        let Some(subst) = found else {
            return (
                false,
                Some("no substitution instantiates the schema to this line".into()),
                None,
            );
        };
        for p in pattern_premises {
            let needed = apply_substitution(p, &subst);
            let available = self.earlier.contains(&needed) || self.premises.contains(&needed);
            if !available {
                return (
                    false,
                    Some(format!(
                        "lemma premise {} is not available as an earlier line or script premise",
                        render(&needed)
                    )),
                    Some(subst),
                );
            }
        }
        (true, None, Some(subst))
    }
}

/// Checks every line of a script. Malformed references are reported per
/// line without aborting the rest. On full acceptance the script's
/// `(premises, goal)` is inserted into the registry.
pub fn check_proof(
    script: &ProofScript,
    schemas: &[AxiomSchema],
    registry: &mut TheoremRegistry,
) -> ProofReport {
    let mut earlier: Vec<Formula> = Vec::with_capacity(script.lines.len());
    let mut reports = Vec::with_capacity(script.lines.len());
    let mut all_check = true;
    for (k, line) in script.lines.iter().enumerate() {
        let index = k + 1;
        let checker = LineChecker {
            schemas,
            registry,
            premises: &script.premises,
            earlier: &earlier,
        };
        let (checks, failure, subst) = checker.check(line, index);
        all_check &= checks;
        reports.push(LineReport {
            index,
            formula: render(&line.formula),
            checks,
            failure,
            substitution: subst.as_ref().map(render_subst),
        });
        earlier.push(line.formula.clone());
    }
    let goal_matches = script
        .lines
        .last()
        .map(|l| l.formula == script.goal)
        .unwrap_or(false);
    let accepted = all_check && goal_matches;
    if accepted {
        registry.insert(
            &script.name,
            RegistryEntry {
                premises: script.premises.clone(),
                goal: script.goal.clone(),
                provenance: EntryProvenance::Proved,
            },
        );
    }
    ProofReport {
        name: script.name.clone(),
        accepted,
        lines: reports,
        goal_matches_last_line: goal_matches,
    }
}

/// Runs a corpus in order: assumed entries are registered directly,
/// scripts are checked and registered on acceptance.
pub fn check_corpus(
    corpus: &[CorpusEntry],
    schemas: &[AxiomSchema],
    registry: &mut TheoremRegistry,
) -> Vec<ProofReport> {
    let mut reports = Vec::new();
    for entry in corpus {
        match entry {
            CorpusEntry::Assumed {
                name,
                premises,
                goal,
            } => {
                registry.insert(
                    name,
                    RegistryEntry {
                        premises: premises.clone(),
                        goal: goal.clone(),
                        provenance: EntryProvenance::Assumed,
                    },
                );
            }
            CorpusEntry::Script(script) => {
                reports.push(check_proof(script, schemas, registry));
            }
        }
    }
    reports
}

#[derive(Debug, Error)]
pub enum CorpusError {
    #[error("corpus JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error("formula {text:?} in {context}: {source}")]
    BadFormula {
        text: String,
        context: String,
        source: ParseError,
    },
    #[error("{0}")]
    BadJustification(String),
}

#[derive(Deserialize)]
struct RawJust {
    kind: String,
    #[serde(default)]
    name: Option<String>,
    #[serde(default)]
    index: Option<usize>,
    #[serde(default)]
    from: Option<Vec<usize>>,
    #[serde(default)]
    subst: Option<BTreeMap<String, String>>,
    #[serde(default)]
    mp: Option<Vec<usize>>,
}

#[derive(Deserialize)]
struct RawLine {
    formula: String,
    just: RawJust,
}

#[derive(Deserialize)]
struct RawEntry {
    name: String,
    #[serde(default)]
    premises: Vec<String>,
    goal: String,
    #[serde(default)]
    lines: Vec<RawLine>,
    #[serde(default)]
    assumed: bool,
    #[serde(default)]
    expected: Option<Vec<LineExpectation>>,
}

fn parse_in(text: &str, context: &str) -> Result<Formula, CorpusError> {
    parse(text).map_err(|source| CorpusError::BadFormula {
        text: text.to_string(),
        context: context.to_string(),
        source,
    })
}

fn convert_just(raw: RawJust, context: &str) -> Result<Justification, CorpusError> {
    let subst = match raw.subst {
        None => None,
        Some(map) => {
            let mut out = Substitution::new();
            for (k, v) in map {
                out.insert(k, parse_in(&v, context)?);
            }
            Some(out)
        }
    };
    let mp = raw.mp.unwrap_or_default();
    match raw.kind.as_str() {
        "axiom" => Ok(Justification::Axiom {
            name: raw.name.ok_or_else(|| {
                CorpusError::BadJustification(format!("{context}: axiom needs a name"))
            })?,
            subst,
            mp,
        }),
        "lemma" => Ok(Justification::Lemma {
            name: raw.name.ok_or_else(|| {
                CorpusError::BadJustification(format!("{context}: lemma needs a name"))
            })?,
            subst,
            mp,
        }),
        "premise" => Ok(Justification::Premise {
            index: raw.index.ok_or_else(|| {
                CorpusError::BadJustification(format!("{context}: premise needs an index"))
            })?,
        }),
        "mp" => {
            let from = raw.from.ok_or_else(|| {
                CorpusError::BadJustification(format!("{context}: mp needs 'from'"))
            })?;
            if from.len() != 2 {
                return Err(CorpusError::BadJustification(format!(
                    "{context}: mp 'from' needs exactly two line references"
                )));
            }
            Ok(Justification::Mp {
                from: (from[0], from[1]),
            })
        }
        other => Err(CorpusError::BadJustification(format!(
            "{context}: unknown justification kind {other:?}"
        ))),
    }
}

/// Parses corpus entries from their JSON file format.
pub fn parse_corpus(json: &str) -> Result<Vec<CorpusEntry>, CorpusError> {
    let raw: Vec<RawEntry> = serde_json::from_str(json)?;
    let mut out = Vec::with_capacity(raw.len());
    for entry in raw {
        let context = format!("entry {}", entry.name);
        let premises = entry
            .premises
            .iter()
            .map(|p| parse_in(p, &context))
            .collect::<Result<Vec<_>, _>>()?;
        let goal = parse_in(&entry.goal, &context)?;
        if entry.assumed {
            out.push(CorpusEntry::Assumed {
                name: entry.name,
                premises,
                goal,
            });
            continue;
        }
        let mut lines = Vec::with_capacity(entry.lines.len());
        for (k, raw_line) in entry.lines.into_iter().enumerate() {
            let line_context = format!("{context} line {}", k + 1);
            lines.push(ProofLine {
                formula: parse_in(&raw_line.formula, &line_context)?,
                just: convert_just(raw_line.just, &line_context)?,
            });
        }
        out.push(CorpusEntry::Script(ProofScript {
            name: entry.name,
            premises,
            lines,
            goal,
            expected: entry.expected,
        }));
    }
    Ok(out)
}

const CORPUS_JSON: &str = include_str!("../data/corpus.json");

/// The transcribed theorem corpus shipped with the crate.
pub fn load_corpus() -> Vec<CorpusEntry> {
    parse_corpus(CORPUS_JSON).expect("builtin corpus parses")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn schema(name: &str) -> AxiomSchema {
        builtin_schemas()
            .into_iter()
            .find(|s| s.name == name)
            .unwrap()
    }

    #[test]
    fn match_schema_examples() {
        let a1 = schema("a1");
        let s = match_schema(&a1.pattern, &parse("p -> (q -> p)").unwrap()).unwrap();
        assert_eq!(s["A"], parse("p").unwrap());
        assert_eq!(s["B"], parse("q").unwrap());

        let s = match_schema(&a1.pattern, &parse("A -> (A -> A)").unwrap()).unwrap();
        assert_eq!(s["A"], parse("A").unwrap());
        assert_eq!(s["B"], parse("A").unwrap());

        assert!(match_schema(&a1.pattern, &parse("p -> (q -> r)").unwrap()).is_none());
    }

    #[test]
    fn match_binds_compound_formulas() {
        let a2 = schema("a2");
        let target = parse("((X -> Y) -> ((X -> Y) -> Z)) -> ((X -> Y) -> Z)").unwrap();
        let s = match_schema(&a2.pattern, &target).unwrap();
        assert_eq!(s["A"], parse("X -> Y").unwrap());
        assert_eq!(s["B"], parse("Z").unwrap());
        assert_eq!(apply_substitution(&a2.pattern, &s), target);
    }

    fn line(formula: &str, just: Justification) -> ProofLine {
        ProofLine {
            formula: parse(formula).unwrap(),
            just,
        }
    }

    fn axiom(name: &str) -> Justification {
        Justification::Axiom {
            name: name.into(),
            subst: None,
            mp: vec![],
        }
    }

    #[test]
    fn three_line_identity_proof_checks() {
        let script = ProofScript {
            name: "identity".into(),
            premises: vec![],
            lines: vec![
                line("(A -> (A -> A)) -> (A -> A)", axiom("a2")),
                line("A -> (A -> A)", axiom("a1")),
                line("A -> A", Justification::Mp { from: (1, 2) }),
            ],
            goal: parse("A -> A").unwrap(),
            expected: None,
        };
        let mut registry = TheoremRegistry::new();
        let report = check_proof(&script, &builtin_schemas(), &mut registry);
        assert!(report.accepted, "{report:?}");
        assert!(report.lines.iter().all(|l| l.checks));
        assert!(registry.get("identity").is_some());
    }

    #[test]
    fn self_referential_mp_fails() {
        let script = ProofScript {
            name: "bogus".into(),
            premises: vec![],
            lines: vec![line("B", Justification::Mp { from: (1, 1) })],
            goal: parse("B").unwrap(),
            expected: None,
        };
        let mut registry = TheoremRegistry::new();
        let report = check_proof(&script, &builtin_schemas(), &mut registry);
        assert!(!report.accepted);
        assert!(!report.lines[0].checks);
        assert!(registry.get("bogus").is_none());
    }

    #[test]
    fn forward_reference_fails_without_aborting() {
        let script = ProofScript {
            name: "forward".into(),
            premises: vec![],
            lines: vec![
                line("B -> B", Justification::Mp { from: (2, 3) }),
                line("A -> (B -> A)", axiom("a1")),
            ],
            goal: parse("A -> (B -> A)").unwrap(),
            expected: None,
        };
        let mut registry = TheoremRegistry::new();
        let report = check_proof(&script, &builtin_schemas(), &mut registry);
        assert!(!report.lines[0].checks);
        assert!(report.lines[1].checks);
        assert!(!report.accepted);
    }

    #[test]
    fn lemma_with_mp_chain() {
        let mut registry = TheoremRegistry::new();
        registry.insert(
            "T2.14",
            RegistryEntry {
                premises: vec![],
                goal: parse("(A -> B) -> ((A -> !B) -> !A)").unwrap(),
                provenance: EntryProvenance::Assumed,
            },
        );
        let script = ProofScript {
            name: "noncontradiction".into(),
            premises: vec![],
            lines: vec![
                line("A & !A -> A", axiom("a10")),
                line("A & !A -> !A", axiom("a11")),
                line(
                    "!(A & !A)",
                    Justification::Lemma {
                        name: "T2.14".into(),
                        subst: None,
                        mp: vec![1, 2],
                    },
                ),
            ],
            goal: parse("!(A & !A)").unwrap(),
            expected: None,
        };
        let report = check_proof(&script, &builtin_schemas(), &mut registry);
        assert!(report.accepted, "{report:#?}");
        let subst = report.lines[2].substitution.as_ref().unwrap();
        assert_eq!(subst["A"], "A & !A");
        assert_eq!(subst["B"], "A");
    }

    #[test]
    fn lemma_premises_must_be_discharged() {
        let mut registry = TheoremRegistry::new();
        registry.insert(
            "from_premise",
            RegistryEntry {
                premises: vec![parse("A").unwrap()],
                goal: parse("##A").unwrap(),
                provenance: EntryProvenance::Assumed,
            },
        );
        // premise available as an earlier line
        let good = ProofScript {
            name: "good".into(),
            premises: vec![parse("p").unwrap()],
            lines: vec![
                line("p", Justification::Premise { index: 1 }),
                line(
                    "##p",
                    Justification::Lemma {
                        name: "from_premise".into(),
                        subst: None,
                        mp: vec![],
                    },
                ),
            ],
            goal: parse("##p").unwrap(),
            expected: None,
        };
        let report = check_proof(&good, &builtin_schemas(), &mut registry);
        assert!(report.accepted, "{report:#?}");

        // premise absent
        let bad = ProofScript {
            name: "bad".into(),
            premises: vec![],
            lines: vec![line(
                "##q",
                Justification::Lemma {
                    name: "from_premise".into(),
                    subst: None,
                    mp: vec![],
                },
            )],
            goal: parse("##q").unwrap(),
            expected: None,
        };
        let report = check_proof(&bad, &builtin_schemas(), &mut registry);
        assert!(!report.accepted);
    }

    #[test]
    fn explicit_substitution_is_verified() {
        let mut registry = TheoremRegistry::new();
        let mut subst = Substitution::new();
        subst.insert("A".into(), parse("p").unwrap());
        subst.insert("B".into(), parse("q").unwrap());
        let good = ProofScript {
            name: "explicit".into(),
            premises: vec![],
            lines: vec![line(
                "p -> (q -> p)",
                Justification::Axiom {
                    name: "a1".into(),
                    subst: Some(subst.clone()),
                    mp: vec![],
                },
            )],
            goal: parse("p -> (q -> p)").unwrap(),
            expected: None,
        };
        assert!(check_proof(&good, &builtin_schemas(), &mut registry).accepted);

        let mut wrong = subst;
        wrong.insert("B".into(), parse("r").unwrap());
        let bad = ProofScript {
            name: "explicit_wrong".into(),
            premises: vec![],
            lines: vec![line(
                "p -> (q -> p)",
                Justification::Axiom {
                    name: "a1".into(),
                    subst: Some(wrong),
                    mp: vec![],
                },
            )],
            goal: parse("p -> (q -> p)").unwrap(),
            expected: None,
        };
        assert!(!check_proof(&bad, &builtin_schemas(), &mut registry).accepted);
    }

    #[test]
    fn goal_must_equal_last_line() {
        let script = ProofScript {
            name: "wrong_goal".into(),
            premises: vec![],
            lines: vec![line("A -> (B -> A)", axiom("a1"))],
            goal: parse("B -> A").unwrap(),
            expected: None,
        };
        let mut registry = TheoremRegistry::new();
        let report = check_proof(&script, &builtin_schemas(), &mut registry);
        assert!(report.lines[0].checks);
        assert!(!report.goal_matches_last_line);
        assert!(!report.accepted);
    }

    #[test]
    fn unknown_lemma_reported() {
        let script = ProofScript {
            name: "missing".into(),
            premises: vec![],
            lines: vec![line(
                "A -> A",
                Justification::Lemma {
                    name: "nowhere".into(),
                    subst: None,
                    mp: vec![],
                },
            )],
            goal: parse("A -> A").unwrap(),
            expected: None,
        };
        let mut registry = TheoremRegistry::new();
        let report = check_proof(&script, &builtin_schemas(), &mut registry);
        assert!(!report.lines[0].checks);
        assert!(report.lines[0]
            .failure
            .as_deref()
            .unwrap()
            .contains("nowhere"));
    }
}
