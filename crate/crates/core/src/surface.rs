//! Nodal surfaces in projective 3-space and the codes of their even sets.
//!
//! Node indices are 0-based: node `P_i` of the usual 1-based labelling is
//! coordinate `i - 1` of a [`BitWord`].

use std::fmt;
use std::str::FromStr;

use num_integer::Integer;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::certificate::{Conclusion, ProofCertificate, Rule, Step, Value, SCHEMA_VERSION};
use crate::formulas;
use crate::gf2::{griesmer_min_length, BitWord, LinearCode};

/// Largest known node counts for degrees 1 through 6.
const MAX_NODES: [i64; 6] = [0, 1, 4, 16, 31, 65];

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SurfaceError {
    #[error("maximal node count is only tabulated for degrees 1..=6, got {0}")]
    DegreeOutsideTable(i64),
    #[error("degree must be at least {min}, got {degree}")]
    DegreeTooSmall { degree: i64, min: i64 },
    #[error("a degree {degree} surface has at most {max} nodes, got {nodes}")]
    TooManyNodes { degree: i64, nodes: i64, max: i64 },
    #[error("node count must be non-negative, got {0}")]
    NegativeNodes(i64),
    #[error("weakly even sets only exist on surfaces of even degree, got {0}")]
    WeakOnOddDegree(i64),
    #[error("no unique integral residue of chi at twist 1 for degree {0}")]
    NoUniqueResidue(i64),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum EvenSetParity {
    Strict,
    Weak,
}

impl EvenSetParity {
    pub fn as_str(self) -> &'static str {
        match self {
            EvenSetParity::Strict => "strict",
            EvenSetParity::Weak => "weak",
        }
    }
}

impl fmt::Display for EvenSetParity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for EvenSetParity {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "strict" => Ok(EvenSetParity::Strict),
            "weak" => Ok(EvenSetParity::Weak),
            other => Err(format!("unknown parity {other:?}, expected strict or weak")),
        }
    }
}

/// A surface of degree `s` with `μ` ordinary double points.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct NodalSurface {
    degree: i64,
    node_count: i64,
}

impl NodalSurface {
    pub fn new(degree: i64, node_count: i64) -> Result<Self, SurfaceError> {
        if degree < 1 {
            return Err(SurfaceError::DegreeTooSmall { degree, min: 1 });
        }
        if node_count < 0 {
            return Err(SurfaceError::NegativeNodes(node_count));
        }
        if degree <= 6 {
            let max = max_nodes(degree)?;
            if node_count > max {
                return Err(SurfaceError::TooManyNodes {
                    degree,
                    nodes: node_count,
                    max,
                });
            }
        }
        Ok(Self { degree, node_count })
    }

    pub fn degree(&self) -> i64 {
        self.degree
    }

    pub fn node_count(&self) -> i64 {
        self.node_count
    }

    pub fn profile(&self) -> SurfaceCodeProfile {
        let even = self.degree % 2 == 0;
        SurfaceCodeProfile {
            degree: self.degree,
            node_count: self.node_count,
            b2: b2_resolution(self.degree),
            dim_lower_bound_strict: dim_lower_bound(self, EvenSetParity::Strict)
                .expect("strict bound is total"),
            dim_lower_bound_even: even
                .then(|| dim_lower_bound(self, EvenSetParity::Weak).expect("degree is even")),
            strict_modulus: strict_weight_modulus(self.degree),
            weak_residue: if even && self.degree >= 2 {
                weak_weight_residue(self.degree).ok()
            } else {
                None
            },
        }
    }
}

/// Code-level constraints implied by a surface's degree and node count.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SurfaceCodeProfile {
    pub degree: i64,
    pub node_count: i64,
    pub b2: i64,
    pub dim_lower_bound_strict: i64,
    /// Bound for the code of all (strictly or weakly) even sets; even degree only.
    pub dim_lower_bound_even: Option<i64>,
    pub strict_modulus: i64,
    pub weak_residue: Option<i64>,
}

pub fn max_nodes(degree: i64) -> Result<i64, SurfaceError> {
    if (1..=6).contains(&degree) {
        Ok(MAX_NODES[(degree - 1) as usize])
    } else {
        Err(SurfaceError::DegreeOutsideTable(degree))
    }
}

/// Second Betti number of the minimal resolution, `s³ − 4s² + 6s − 2`.
pub fn b2_resolution(s: i64) -> i64 {
    s * s * s - 4 * s * s + 6 * s - 2
}

/// `max(0, ⌈μ − b₂/2⌉)` for strict sets, `max(0, ⌈μ + 1 − b₂/2⌉)` for all even sets.
pub fn dim_lower_bound(surface: &NodalSurface, parity: EvenSetParity) -> Result<i64, SurfaceError> {
    let extra = match parity {
        EvenSetParity::Strict => 0,
        EvenSetParity::Weak if surface.degree % 2 == 0 => 1,
        EvenSetParity::Weak => return Err(SurfaceError::WeakOnOddDegree(surface.degree)),
    };
    let twice = 2 * (surface.node_count + extra) - b2_resolution(surface.degree);
    Ok(Integer::div_ceil(&twice, &2).max(0))
}

/// Every strictly even set has weight divisible by this.
pub fn strict_weight_modulus(s: i64) -> i64 {
    if s % 2 == 0 {
        8
    } else {
        4
    }
}

/// The residue `r` with `χ(s, 1, w)` integral exactly when `w ≡ r (mod 4)`.
pub fn weak_weight_residue(s: i64) -> Result<i64, SurfaceError> {
    if s % 2 != 0 {
        return Err(SurfaceError::WeakOnOddDegree(s));
    }
    if s < 2 {
        return Err(SurfaceError::DegreeTooSmall { degree: s, min: 2 });
    }
    let residues: Vec<i64> = (0..4)
        .filter(|&r| formulas::chi(s, 1, r).is_integer())
        .collect();
    match residues.as_slice() {
        [r] => Ok(*r),
        _ => Err(SurfaceError::NoUniqueResidue(s)),
    }
}

fn code_from_strings(rows: &[&str]) -> LinearCode {
    let rows: Vec<BitWord> = rows
        .iter()
        .map(|r| r.parse().expect("literal rows are binary"))
        .collect();
    LinearCode::from_rows(rows).expect("literal rows have equal length")
}

pub const KUMMER_ROWS: [&str; 5] = [
    "1111111100000000",
    "1111000011110000",
    "1100110011001100",
    "1010101010101010",
    "1111111111111111",
];

pub const TOGLIATTI_ROWS: [&str; 5] = [
    "1111111111111111000000000000000",
    "1111111100000000111111110000000",
    "1111000011110000111100001111000",
    "1100110011001100110011001100110",
    "1010101010101010101010101010101",
];

/// The [16, 5, 8] code of strictly even sets on a 16-nodal quartic.
pub fn kummer_code() -> LinearCode {
    code_from_strings(&KUMMER_ROWS)
}

/// The [31, 5, 16] code of strictly even sets on a 31-nodal quintic.
pub fn togliatti_code() -> LinearCode {
    code_from_strings(&TOGLIATTI_ROWS)
}

/// The 4-nodal cubic: one even set containing every node.
pub fn cayley_code() -> LinearCode {
    code_from_strings(&["1111"])
}

/// Simplex code of dimension `m`: column `j` is the binary expansion of `j + 1`.
pub fn simplex_code(m: usize) -> LinearCode {
    assert!((1..=20).contains(&m), "simplex dimension {m} out of range");
    let n = (1usize << m) - 1;
    let rows = (0..m)
        .map(|bit| BitWord::from_bits((1..=n).map(|col| (col >> bit) & 1 == 1)))
        .collect();
    LinearCode::from_rows_with_length(n, rows).expect("rows have length 2^m - 1")
}

/// Replayable argument that the strict code of a 65-nodal sextic has dimension 12.
pub fn sextic_dim_certificate() -> ProofCertificate {
    let (s, mu) = (6, 65);
    let b2 = b2_resolution(s);
    let mut steps = Vec::new();

    let lower = Integer::div_ceil(&(2 * mu - b2), &2).max(0);
    steps.push(Step::new(
        Rule::BettiDimension,
        [
            ("degree", s.into()),
            ("nodes", mu.into()),
            ("b2", b2.into()),
        ],
        lower,
        "the strict code has dimension at least mu - b2/2",
    ));

    let admissible = vec![24, 32, 40, 56];
    steps.push(Step::new(
        Rule::Hypothesis,
        [("nodes", Value::Int(mu))],
        admissible.clone(),
        "nonzero strictly even sets on a 65-nodal sextic have weight 24, 32, 40 or 56",
    ));
    let weights = vec![24, 32, 40];
    steps.push(Step::new(
        Rule::Hypothesis,
        [("excluded", Value::Int(56))],
        weights.clone(),
        "assume the code has no word of weight 56",
    ));

    let (k, d) = (lower, 32);
    let griesmer = griesmer_min_length(k as usize, d as u64) as i64;
    steps.push(Step::new(
        Rule::GriesmerLength,
        [("k", k.into()), ("d", d.into())],
        griesmer,
        "minimal length of a binary code with this dimension and minimum distance",
    ));
    steps.push(Step::new(
        Rule::Comparison,
        [("lhs", griesmer.into()), ("rhs", mu.into())],
        griesmer > mu,
        "a code of length 65 cannot have minimum distance 32, so some word w has weight 24",
    ));

    let w = weights[0];
    steps.push(Step::new(
        Rule::TrivialKernel,
        [
            ("support_weight", w.into()),
            ("weights", weights.clone().into()),
        ],
        weights.iter().all(|a| !weights.contains(&(a + w))),
        "a nonzero word disjoint from w would add to a word of weight outside the admissible set",
    ));
    let modulus = strict_weight_modulus(s);
    steps.push(Step::new(
        Rule::ProjectionDivisibility,
        [("modulus", modulus.into())],
        modulus / 2,
        "projection onto supp(w) is injective with doubly even image of length 24",
    ));
    let upper = w / 2;
    steps.push(Step::new(
        Rule::SelfOrthogonalBound,
        [("length", w.into())],
        upper,
        "a doubly even code is self-orthogonal, so its dimension is at most half its length",
    ));
    steps.push(Step::new(
        Rule::DimensionSqueeze,
        [("lower", lower.into()), ("upper", upper.into())],
        lower,
        "lower and upper bounds agree",
    ));

    ProofCertificate {
        schema_version: SCHEMA_VERSION.to_string(),
        degree: s,
        parity: EvenSetParity::Strict,
        subject: "code-dimension".to_string(),
        steps,
        conclusion: Conclusion::Dimension { value: lower },
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::certificate::StepStatus;
    use crate::gf2::ParityClass;

    fn surface(s: i64, mu: i64) -> NodalSurface {
        NodalSurface::new(s, mu).unwrap()
    }

    #[test]
    fn node_table() {
        assert_eq!(max_nodes(1), Ok(0));
        assert_eq!(max_nodes(4), Ok(16));
        assert_eq!(max_nodes(6), Ok(65));
        assert!(max_nodes(0).is_err());
        assert!(max_nodes(7).is_err());
        assert!(matches!(
            NodalSurface::new(4, 17),
            Err(SurfaceError::TooManyNodes { max: 16, .. })
        ));
        assert!(NodalSurface::new(7, 99).is_ok());
    }

    #[test]
    fn betti_numbers() {
        let pinned = [(3, 7), (4, 22), (5, 53), (6, 106)];
        for (s, b2) in pinned {
            assert_eq!(b2_resolution(s), b2);
        }
    }

    #[test]
    fn dimension_bounds() {
        assert_eq!(
            dim_lower_bound(&surface(4, 16), EvenSetParity::Strict),
            Ok(5)
        );
        assert_eq!(
            dim_lower_bound(&surface(6, 65), EvenSetParity::Strict),
            Ok(12)
        );
        assert_eq!(
            dim_lower_bound(&surface(5, 31), EvenSetParity::Strict),
            Ok(5)
        );
        assert_eq!(
            dim_lower_bound(&surface(3, 4), EvenSetParity::Strict),
            Ok(1)
        );
        assert_eq!(
            dim_lower_bound(&surface(3, 0), EvenSetParity::Strict),
            Ok(0)
        );
        assert_eq!(
            dim_lower_bound(&surface(5, 31), EvenSetParity::Weak),
            Err(SurfaceError::WeakOnOddDegree(5))
        );
    }

    #[test]
    fn weak_bound_exceeds_strict_by_one_when_unclamped() {
        for s in (2..=12).step_by(2) {
            let b2 = b2_resolution(s);
            for mu in (b2 / 2)..(b2 / 2 + 40) {
                let x = NodalSurface {
                    degree: s,
                    node_count: mu,
                };
                let strict = dim_lower_bound(&x, EvenSetParity::Strict).unwrap();
                let weak = dim_lower_bound(&x, EvenSetParity::Weak).unwrap();
                assert_eq!(weak, strict + 1, "s={s} mu={mu}");
            }
        }
    }

    #[test]
    fn residues() {
        assert_eq!(strict_weight_modulus(6), 8);
        assert_eq!(strict_weight_modulus(5), 4);
        assert_eq!(strict_weight_modulus(7), 4);
        assert_eq!(weak_weight_residue(4), Ok(2));
        assert_eq!(weak_weight_residue(6), Ok(3));
        assert_eq!(weak_weight_residue(8), Ok(0));
        assert!(weak_weight_residue(5).is_err());
    }

    #[test]
    fn residue_characterizes_integrality() {
        for s in [4, 6, 8, 10] {
            let r = weak_weight_residue(s).unwrap();
            for w in 0..200 {
                assert_eq!(formulas::chi(s, 1, w).is_integer(), (w - r) % 4 == 0);
            }
        }
    }

    #[test]
    fn profile_shape() {
        let p = surface(6, 65).profile();
        assert_eq!(p.strict_modulus, 8);
        assert_eq!(p.dim_lower_bound_strict, 12);
        assert_eq!(p.dim_lower_bound_even, Some(13));
        assert_eq!(p.weak_residue, Some(3));
        let q = surface(5, 31).profile();
        assert_eq!(
            (q.strict_modulus, q.dim_lower_bound_even, q.weak_residue),
            (4, None, None)
        );
    }

    #[test]
    fn example_codes() {
        let k = kummer_code();
        assert_eq!((k.length(), k.dimension()), (16, 5));
        assert_eq!(k.minimum_distance().unwrap(), 8);
        assert_eq!(k.classify_parity().unwrap(), ParityClass::DoublyEven);
        assert!(k.is_self_orthogonal());
        for (w, _) in k.weight_distribution().unwrap().counts {
            assert_eq!(w % strict_weight_modulus(4) as usize, 0);
        }

        let t = togliatti_code();
        assert_eq!((t.length(), t.dimension()), (31, 5));
        assert_eq!(t.minimum_distance().unwrap(), 16);
        assert_eq!(t.dual().dimension(), 26);
        assert_eq!(t.classify_parity().unwrap(), ParityClass::DoublyEven);
        assert!(t.is_self_orthogonal());
        for row in TOGLIATTI_ROWS {
            assert_eq!(row.len(), 31);
            assert_eq!(row.parse::<BitWord>().unwrap().weight(), 16);
        }

        let c = cayley_code();
        assert_eq!(c.dimension(), 1);
        assert_eq!(c.minimum_distance().unwrap(), 4);
    }

    #[test]
    fn togliatti_matches_simplex_construction() {
        let t = togliatti_code();
        let s = simplex_code(5);
        assert_eq!(
            t.weight_distribution().unwrap(),
            s.weight_distribution().unwrap()
        );
        // The transcribed rows have column j equal to the 5-bit vector 31 - j.
        let rows: Vec<BitWord> = TOGLIATTI_ROWS.iter().map(|r| r.parse().unwrap()).collect();
        for j in 0..31 {
            let col: usize = rows.iter().fold(0, |acc, r| (acc << 1) | r.get(j) as usize);
            assert_eq!(col, 31 - j);
        }
    }

    #[test]
    fn sextic_certificate() {
        let cert = sextic_dim_certificate();
        let summary = cert.validate().unwrap();
        assert_eq!(summary.cited, 2);
        assert_eq!(cert.conclusion, Conclusion::Dimension { value: 12 });
        assert_eq!(cert.steps[0].asserted_output, Value::Int(12));
        let g = cert.steps_with_rule(Rule::GriesmerLength).next().unwrap();
        assert_eq!(g.asserted_output, Value::Int(69));
        assert_eq!(g.check(), Ok(StepStatus::Verified));
        let cmp = cert.steps_with_rule(Rule::Comparison).next().unwrap();
        assert_eq!(cmp.asserted_output, Value::Bool(true));
    }
}
