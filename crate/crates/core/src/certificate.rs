//! Replayable proof certificates.
//!
//! A certificate is an ordered list of [`Step`]s. Each step names a [`Rule`],
//! the integer or rational inputs it consumed, and the output it asserts.
//! Arithmetic rules are re-evaluated from their recorded inputs by
//! [`Step::check`]. Geometric facts that are not arithmetic enter as
//! [`Rule::Hypothesis`] steps, and known discrepancies between printed and
//! computed values as [`Rule::DeviationNote`] steps; both are reported as
//! cited rather than verified.
//!
//! The JSON form (schema version `"1"`) is the serde representation of
//! [`ProofCertificate`]: struct fields in declaration order, step inputs in
//! key order.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::formulas::{self, ChiValue};
use crate::gf2::griesmer_min_length;
use crate::surface::{b2_resolution, EvenSetParity};

pub const SCHEMA_VERSION: &str = "1";

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Rule {
    /// Cited geometric fact; not re-evaluated.
    Hypothesis,
    /// Records a printed value that differs from the computed one.
    DeviationNote,
    /// Weights `w > 0` with `lower < w < upper` and `w ≡ residue (mod modulus)`.
    Divisibility,
    /// The residue `r` mod 4 such that `χ(s, v, w)` is an integer iff `w ≡ r`.
    ChiIntegrality,
    ChiEval,
    SerreDual,
    /// `h⁰ ≥ χ − h²` given an upper bound on `h²` (`h¹ ≥ 0`).
    H0LowerBound,
    /// `h⁰ ≥ ⌈χ/2⌉` when the twist is its own Serre dual, so `h² = h⁰`.
    SelfDualH0Bound,
    /// `weight < bound`, where `bound` is forced on sets unstable in the twist degree.
    InstabilityExclusion,
    PlaneConclusion,
    QuadricConclusion,
    /// Weight cut out by a smooth cubic (weak) or quartic (strict).
    SmoothContactWeight,
    /// `max(0, ⌈μ − b₂/2⌉)`.
    BettiDimension,
    GriesmerLength,
    /// `lhs > rhs`.
    Comparison,
    /// No nonzero admissible weight `a` has `a + support_weight` admissible,
    /// so nothing is disjoint from the chosen word.
    TrivialKernel,
    /// Weights divisible by `2d` project to weights divisible by `d`.
    ProjectionDivisibility,
    /// Self-orthogonal codes of length `n` have dimension at most `n/2`.
    SelfOrthogonalBound,
    /// Matching lower and upper bounds pin the value.
    DimensionSqueeze,
}

impl Rule {
    pub fn as_str(self) -> &'static str {
        match self {
            Rule::Hypothesis => "hypothesis",
            Rule::DeviationNote => "deviation-note",
            Rule::Divisibility => "divisibility",
            Rule::ChiIntegrality => "chi-integrality",
            Rule::ChiEval => "chi-eval",
            Rule::SerreDual => "serre-dual",
            Rule::H0LowerBound => "h0-lower-bound",
            Rule::SelfDualH0Bound => "self-dual-h0-bound",
            Rule::InstabilityExclusion => "instability-exclusion",
            Rule::PlaneConclusion => "plane-conclusion",
            Rule::QuadricConclusion => "quadric-conclusion",
            Rule::SmoothContactWeight => "smooth-contact-weight",
            Rule::BettiDimension => "betti-dimension",
            Rule::GriesmerLength => "griesmer-length",
            Rule::Comparison => "comparison",
            Rule::TrivialKernel => "trivial-kernel",
            Rule::ProjectionDivisibility => "projection-divisibility",
            Rule::SelfOrthogonalBound => "self-orthogonal-bound",
            Rule::DimensionSqueeze => "dimension-squeeze",
        }
    }

    pub fn is_cited(self) -> bool {
        matches!(self, Rule::Hypothesis | Rule::DeviationNote)
    }
}

/// Step input or output. Integral rationals are always stored as `Int`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Value {
    Bool(bool),
    Int(i64),
    List(Vec<i64>),
    Rational(ChiValue),
}

impl From<bool> for Value {
    fn from(b: bool) -> Self {
        Value::Bool(b)
    }
}

impl From<i64> for Value {
    fn from(n: i64) -> Self {
        Value::Int(n)
    }
}

impl From<Vec<i64>> for Value {
    fn from(v: Vec<i64>) -> Self {
        Value::List(v)
    }
}

impl From<ChiValue> for Value {
    fn from(c: ChiValue) -> Self {
        match c.to_integer() {
            Some(n) => Value::Int(n),
            None => Value::Rational(c),
        }
    }
}

impl std::fmt::Display for Value {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Value::Bool(b) => write!(f, "{b}"),
            Value::Int(n) => write!(f, "{n}"),
            Value::Rational(r) => write!(f, "{r}"),
            Value::List(v) => {
                let items: Vec<String> = v.iter().map(|x| x.to_string()).collect();
                write!(f, "[{}]", items.join(", "))
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum StepError {
    #[error("{rule}: missing input `{key}`")]
    MissingInput { rule: &'static str, key: String },
    #[error("{rule}: input `{key}` has the wrong type")]
    WrongType { rule: &'static str, key: String },
    #[error("{rule}: asserted {asserted}, recomputed {expected}")]
    Mismatch {
        rule: &'static str,
        asserted: String,
        expected: String,
    },
    #[error("{rule}: {detail}")]
    Precondition { rule: &'static str, detail: String },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum StepStatus {
    Verified,
    Cited,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Step {
    pub rule: Rule,
    pub inputs: BTreeMap<String, Value>,
    pub asserted_output: Value,
    pub statement: String,
}

impl Step {
    pub fn new<K, I>(
        rule: Rule,
        inputs: I,
        asserted_output: impl Into<Value>,
        statement: impl Into<String>,
    ) -> Self
    where
        K: Into<String>,
        I: IntoIterator<Item = (K, Value)>,
    {
        Step {
            rule,
            inputs: inputs.into_iter().map(|(k, v)| (k.into(), v)).collect(),
            asserted_output: asserted_output.into(),
            statement: statement.into(),
        }
    }

    fn input(&self, key: &str) -> Result<&Value, StepError> {
        self.inputs.get(key).ok_or_else(|| StepError::MissingInput {
            rule: self.rule.as_str(),
            key: key.to_string(),
        })
    }

    fn int(&self, key: &str) -> Result<i64, StepError> {
        match self.input(key)? {
            Value::Int(n) => Ok(*n),
            _ => Err(self.wrong_type(key)),
        }
    }

    fn list(&self, key: &str) -> Result<&[i64], StepError> {
        match self.input(key)? {
            Value::List(v) => Ok(v),
            _ => Err(self.wrong_type(key)),
        }
    }

    fn rational(&self, key: &str) -> Result<ChiValue, StepError> {
        match self.input(key)? {
            Value::Int(n) => Ok(ChiValue::from_integer(*n)),
            Value::Rational(r) => Ok(*r),
            _ => Err(self.wrong_type(key)),
        }
    }

    fn integral_chi(&self) -> Result<i64, StepError> {
        self.rational("chi")?
            .to_integer()
            .ok_or_else(|| StepError::Precondition {
                rule: self.rule.as_str(),
                detail: "chi is not an integer".into(),
            })
    }

    fn wrong_type(&self, key: &str) -> StepError {
        StepError::WrongType {
            rule: self.rule.as_str(),
            key: key.to_string(),
        }
    }

    fn precondition(&self, detail: impl Into<String>) -> StepError {
        StepError::Precondition {
            rule: self.rule.as_str(),
            detail: detail.into(),
        }
    }

    /// Re-evaluates the step from its inputs.
    pub fn check(&self) -> Result<StepStatus, StepError> {
        if self.rule.is_cited() {
            return Ok(StepStatus::Cited);
        }
        let expected = self.recompute()?;
        if expected != self.asserted_output {
            return Err(StepError::Mismatch {
                rule: self.rule.as_str(),
                asserted: self.asserted_output.to_string(),
                expected: expected.to_string(),
            });
        }
        Ok(StepStatus::Verified)
    }

    /// The output the rule produces for the recorded inputs.
    pub fn recompute(&self) -> Result<Value, StepError> {
        let value = match self.rule {
            Rule::Hypothesis | Rule::DeviationNote => self.asserted_output.clone(),
            Rule::Divisibility => {
                let modulus = self.int("modulus")?;
                let residue = self.int("residue")?;
                let lower = self.int("lower")?;
                let upper = self.int("upper")?;
                if modulus <= 0 {
                    return Err(self.precondition("modulus must be positive"));
                }
                Value::List(lattice_weights(modulus, residue, lower, upper))
            }
            Rule::ChiIntegrality => {
                let s = self.int("degree")?;
                let v = self.int("twist")?;
                let residues: Vec<i64> = (0..4)
                    .filter(|&r| formulas::chi(s, v, r).is_integer())
                    .collect();
                match residues.as_slice() {
                    [r] => Value::Int(*r),
                    _ => {
                        return Err(self.precondition(format!(
                            "integral residues {residues:?} are not unique"
                        )))
                    }
                }
            }
            Rule::ChiEval => {
                formulas::chi(self.int("degree")?, self.int("twist")?, self.int("weight")?).into()
            }
            Rule::SerreDual => {
                let s = self.int("degree")?;
                let v = self.int("twist")?;
                let dual = formulas::serre_dual_twist(s, v);
                if formulas::chi(s, v, 0) != formulas::chi(s, dual, 0) {
                    return Err(self.precondition("chi is not symmetric under the dual twist"));
                }
                Value::Int(dual)
            }
            Rule::H0LowerBound => Value::Int(self.integral_chi()? - self.int("h2_upper")?),
            Rule::SelfDualH0Bound => {
                let chi = self.integral_chi()?;
                Value::Int(num_integer::Integer::div_ceil(&chi, &2))
            }
            Rule::InstabilityExclusion => {
                let s = self.int("degree")?;
                let v = self.int("twist")?;
                let bound = formulas::unstable_lower_bound(s, v)
                    .map_err(|e| self.precondition(e.to_string()))?;
                if bound != self.int("bound")? {
                    return Err(self.precondition(format!("recorded bound differs from {bound}")));
                }
                Value::Bool(self.int("weight")? < bound)
            }
            Rule::PlaneConclusion => {
                Value::Int(formulas::plane_contact_weight(self.int("degree")?))
            }
            Rule::QuadricConclusion => {
                Value::Int(formulas::quadric_contact_weight(self.int("degree")?))
            }
            Rule::SmoothContactWeight => {
                let s = self.int("degree")?;
                match self.int("contact_degree")? {
                    3 => Value::Int(formulas::smooth_cubic_weight(s)),
                    4 => Value::Int(formulas::smooth_quartic_weight(s)),
                    other => {
                        return Err(
                            self.precondition(format!("contact degree {other} is not 3 or 4"))
                        )
                    }
                }
            }
            Rule::BettiDimension => {
                let s = self.int("degree")?;
                let b2 = self.int("b2")?;
                if s < 1 || b2 != b2_resolution(s) {
                    return Err(self.precondition(format!("b2 {b2} does not match degree {s}")));
                }
                let twice = 2 * self.int("nodes")? - b2;
                Value::Int(num_integer::Integer::div_ceil(&twice, &2).max(0))
            }
            Rule::GriesmerLength => {
                let k = self.int("k")?;
                let d = self.int("d")?;
                if k < 1 || d < 1 {
                    return Err(self.precondition("k and d must be positive"));
                }
                Value::Int(griesmer_min_length(k as usize, d as u64) as i64)
            }
            Rule::Comparison => Value::Bool(self.int("lhs")? > self.int("rhs")?),
            Rule::TrivialKernel => {
                let w = self.int("support_weight")?;
                let weights = self.list("weights")?;
                if !weights.contains(&w) {
                    return Err(self.precondition(format!("{w} is not an admissible weight")));
                }
                Value::Bool(weights.iter().all(|a| !weights.contains(&(a + w))))
            }
            Rule::ProjectionDivisibility => {
                let m = self.int("modulus")?;
                if m <= 0 || m % 2 != 0 {
                    return Err(self.precondition("modulus must be positive and even"));
                }
                Value::Int(m / 2)
            }
            Rule::SelfOrthogonalBound => Value::Int(self.int("length")? / 2),
            Rule::DimensionSqueeze => {
                let lower = self.int("lower")?;
                let upper = self.int("upper")?;
                if lower != upper {
                    return Err(
                        self.precondition(format!("bounds {lower} and {upper} do not meet"))
                    );
                }
                Value::Int(lower)
            }
        };
        Ok(value)
    }
}

/// Positive weights strictly between `lower` and `upper` congruent to `residue`.
pub fn lattice_weights(modulus: i64, residue: i64, lower: i64, upper: i64) -> Vec<i64> {
    ((lower + 1).max(1)..upper)
        .filter(|w| (w - residue).rem_euclid(modulus) == 0)
        .collect()
}

/// Outcome of a per-degree derivation of minimal weight and weight gaps.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GapReport {
    pub degree: i64,
    pub parity: EvenSetParity,
    pub min_weight: i64,
    /// Admissible weights strictly between `min_weight` and `upper_endpoint`.
    pub excluded_weights: Vec<i64>,
    /// `max(min_weight, smooth contact weight)`.
    pub upper_endpoint: i64,
    /// Weights are `≡ residue (mod modulus)`.
    pub modulus: i64,
    pub residue: i64,
    /// Every admissible weight below this value went through the χ/h⁰ chain.
    pub threshold: i64,
    pub chain_weights: Vec<i64>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum Conclusion {
    Gaps(GapReport),
    Dimension { value: i64 },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ProofCertificate {
    pub schema_version: String,
    pub degree: i64,
    pub parity: EvenSetParity,
    pub subject: String,
    pub steps: Vec<Step>,
    pub conclusion: Conclusion,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CertificateError {
    #[error("step {index}: {source}")]
    Step { index: usize, source: StepError },
    #[error("conclusion: {0}")]
    Conclusion(String),
    #[error("unsupported schema version {0:?}")]
    Schema(String),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default, Serialize)]
pub struct ValidationSummary {
    pub verified: usize,
    pub cited: usize,
}

impl ProofCertificate {
    pub fn gap_report(&self) -> Option<&GapReport> {
        match &self.conclusion {
            Conclusion::Gaps(g) => Some(g),
            Conclusion::Dimension { .. } => None,
        }
    }

    pub fn steps_with_rule(&self, rule: Rule) -> impl Iterator<Item = &Step> {
        self.steps.iter().filter(move |s| s.rule == rule)
    }

    /// Re-checks every step, then ties the conclusion back to step outputs.
    pub fn validate(&self) -> Result<ValidationSummary, CertificateError> {
        if self.schema_version != SCHEMA_VERSION {
            return Err(CertificateError::Schema(self.schema_version.clone()));
        }
        let mut summary = ValidationSummary::default();
        for (index, step) in self.steps.iter().enumerate() {
            match step
                .check()
                .map_err(|source| CertificateError::Step { index, source })?
            {
                StepStatus::Verified => summary.verified += 1,
                StepStatus::Cited => summary.cited += 1,
            }
        }
        // Predicate steps carry the argument only when they hold.
        for (index, step) in self.steps.iter().enumerate() {
            let predicate = matches!(
                step.rule,
                Rule::Comparison | Rule::InstabilityExclusion | Rule::TrivialKernel
            );
            if predicate && step.asserted_output != Value::Bool(true) {
                return Err(CertificateError::Conclusion(format!(
                    "step {index} ({}) does not hold",
                    step.rule.as_str()
                )));
            }
        }
        match &self.conclusion {
            Conclusion::Gaps(report) => self.validate_gaps(report)?,
            Conclusion::Dimension { value } => {
                let last = self
                    .steps_with_rule(Rule::DimensionSqueeze)
                    .last()
                    .ok_or_else(|| {
                        CertificateError::Conclusion("no dimension-squeeze step".into())
                    })?;
                if last.asserted_output != Value::Int(*value) {
                    return Err(CertificateError::Conclusion(format!(
                        "dimension {value} differs from squeezed value {}",
                        last.asserted_output
                    )));
                }
            }
        }
        Ok(summary)
    }

    fn validate_gaps(&self, r: &GapReport) -> Result<(), CertificateError> {
        let fail = |msg: String| Err(CertificateError::Conclusion(msg));
        if r.degree != self.degree || r.parity != self.parity {
            return fail("report header differs from certificate header".into());
        }
        let conclusion_rule = match r.parity {
            EvenSetParity::Strict => Rule::QuadricConclusion,
            EvenSetParity::Weak => Rule::PlaneConclusion,
        };
        if !self
            .steps_with_rule(conclusion_rule)
            .any(|s| s.asserted_output == Value::Int(r.min_weight))
        {
            return fail(format!(
                "no {} step yields {}",
                conclusion_rule.as_str(),
                r.min_weight
            ));
        }
        let smooth = self
            .steps_with_rule(Rule::SmoothContactWeight)
            .find_map(|s| match s.asserted_output {
                Value::Int(n) => Some(n),
                _ => None,
            });
        match smooth {
            Some(n) if n.max(r.min_weight) == r.upper_endpoint => {}
            _ => {
                return fail(format!(
                    "upper endpoint {} is not backed by a smooth-contact step",
                    r.upper_endpoint
                ))
            }
        }
        let closed_form = lattice_weights(r.modulus, r.residue, r.min_weight, r.upper_endpoint);
        if closed_form != r.excluded_weights {
            return fail(format!(
                "excluded weights {:?} differ from the lattice {:?}",
                r.excluded_weights, closed_form
            ));
        }
        let chain_gaps: Vec<i64> = r
            .chain_weights
            .iter()
            .copied()
            .filter(|&w| w > r.min_weight)
            .collect();
        if chain_gaps != r.excluded_weights {
            return fail(format!(
                "per-weight chain excludes {:?} above the minimum, closed form gives {:?}",
                chain_gaps, r.excluded_weights
            ));
        }
        if !r.chain_weights.contains(&r.min_weight) {
            return fail(format!(
                "minimum {} is not an admissible weight of the chain",
                r.min_weight
            ));
        }
        if lattice_weights(r.modulus, r.residue, 0, r.threshold) != r.chain_weights {
            return fail("chain weights are not the admissible weights below the threshold".into());
        }
        if !self
            .steps_with_rule(Rule::Divisibility)
            .any(|s| s.asserted_output == Value::List(r.excluded_weights.clone()))
        {
            return fail("no divisibility step lists the excluded weights".into());
        }
        for &w in &r.chain_weights {
            let has_chi = self
                .steps_with_rule(Rule::ChiEval)
                .any(|s| s.inputs.get("weight") == Some(&Value::Int(w)));
            if !has_chi {
                return fail(format!("chain weight {w} has no chi evaluation"));
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn chi_step(s: i64, v: i64, w: i64, out: impl Into<Value>) -> Step {
        Step::new(
            Rule::ChiEval,
            [
                ("degree", s.into()),
                ("twist", v.into()),
                ("weight", w.into()),
            ],
            out,
            "",
        )
    }

    #[test]
    fn chi_eval_rechecks() {
        assert_eq!(chi_step(4, 2, 8, 2).check(), Ok(StepStatus::Verified));
        assert!(matches!(
            chi_step(4, 2, 8, 3).check(),
            Err(StepError::Mismatch { .. })
        ));
        assert_eq!(
            chi_step(4, 2, 9, ChiValue::new(7, 4)).check(),
            Ok(StepStatus::Verified)
        );
    }

    #[test]
    fn missing_and_mistyped_inputs() {
        let s = Step::new(Rule::ChiEval, [("degree", Value::Int(4))], 2, "");
        assert!(matches!(s.check(), Err(StepError::MissingInput { .. })));
        let s = Step::new(
            Rule::Comparison,
            [("lhs", Value::Bool(true)), ("rhs", Value::Int(1))],
            true,
            "",
        );
        assert!(matches!(s.check(), Err(StepError::WrongType { .. })));
    }

    #[test]
    fn cited_steps_are_not_evaluated() {
        let s = Step::new(
            Rule::Hypothesis,
            Vec::<(String, Value)>::new(),
            true,
            "cited",
        );
        assert_eq!(s.check(), Ok(StepStatus::Cited));
    }

    #[test]
    fn lattice() {
        assert_eq!(lattice_weights(4, 3, 15, 27), vec![19, 23]);
        assert_eq!(lattice_weights(8, 0, 80, 120), vec![88, 96, 104, 112]);
        assert_eq!(lattice_weights(8, 0, 24, 24), Vec::<i64>::new());
        assert_eq!(lattice_weights(4, 1, -3, 6), vec![1, 5]);
    }

    #[test]
    fn value_serialization() {
        let v: Vec<Value> = vec![
            true.into(),
            3.into(),
            vec![1, 2].into(),
            ChiValue::new(9, 4).into(),
        ];
        let json = serde_json::to_string(&v).unwrap();
        assert_eq!(json, r#"[true,3,[1,2],"9/4"]"#);
        let back: Vec<Value> = serde_json::from_str(&json).unwrap();
        assert_eq!(back, v);
        assert_eq!(Value::from(ChiValue::from_integer(5)), Value::Int(5));
    }

    #[test]
    fn rule_names_match_serde() {
        for rule in [
            Rule::H0LowerBound,
            Rule::ChiEval,
            Rule::DeviationNote,
            Rule::SelfDualH0Bound,
        ] {
            assert_eq!(serde_json::to_value(rule).unwrap(), rule.as_str());
        }
    }
}
