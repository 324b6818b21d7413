//! Exact arithmetic for contact surfaces and even sets of nodes.
//!
//! Everything here is integer or rational arithmetic; no floating point.
//! Degrees are `s` (the nodal surface) and `v` (the contact surface or the
//! twist of the line bundle `(v·H − E_w)/2` on the resolved surface).

use std::fmt;

use num_integer::Integer;
use num_rational::Ratio;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use thiserror::Error;

/// Degrees for which the minimal strictly even weight is established.
pub const PROVEN_STRICT_DEGREES: [i64; 7] = [3, 4, 5, 6, 7, 8, 10];
/// Degrees for which the minimal weakly even weight is established.
pub const PROVEN_WEAK_DEGREES: [i64; 4] = [2, 4, 6, 8];

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FormulaError {
    #[error("degree {degree} is below the minimum {min}")]
    DegreeTooSmall { degree: i64, min: i64 },
    #[error("contact degree {twist} must satisfy 1 <= v < s = {degree}")]
    TwistOutOfRange { degree: i64, twist: i64 },
    #[error("instability bound needs 2v in {{s, s+1, s+2}}; got s = {degree}, v = {twist}")]
    UnstableTwist { degree: i64, twist: i64 },
    #[error(
        "minimal {parity} weight is not established for degree {degree}; known degrees: {known}. \
         The closed form is expected but unproven in other degrees"
    )]
    UnprovenDegree {
        degree: i64,
        parity: &'static str,
        known: String,
    },
}

/// An exact value of the holomorphic Euler characteristic, as a reduced fraction.
///
/// The denominator always divides 8.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ChiValue(Ratio<i64>);

impl ChiValue {
    pub fn from_integer(n: i64) -> Self {
        ChiValue(Ratio::from_integer(n))
    }

    pub fn new(numerator: i64, denominator: i64) -> Self {
        ChiValue(Ratio::new(numerator, denominator))
    }

    pub fn numerator(&self) -> i64 {
        *self.0.numer()
    }

    pub fn denominator(&self) -> i64 {
        *self.0.denom()
    }

    pub fn is_integer(&self) -> bool {
        self.0.is_integer()
    }

    pub fn to_integer(&self) -> Option<i64> {
        self.is_integer().then(|| self.numerator())
    }

    pub fn ratio(&self) -> Ratio<i64> {
        self.0
    }
}

impl fmt::Display for ChiValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_integer() {
            write!(f, "{}", self.numerator())
        } else {
            write!(f, "{}/{}", self.numerator(), self.denominator())
        }
    }
}

impl std::str::FromStr for ChiValue {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let parse = |t: &str| t.trim().parse::<i64>().map_err(|e| format!("{s:?}: {e}"));
        match s.split_once('/') {
            Some((n, d)) => {
                let d = parse(d)?;
                if d == 0 {
                    return Err(format!("{s:?}: zero denominator"));
                }
                Ok(ChiValue::new(parse(n)?, d))
            }
            None => Ok(ChiValue::from_integer(parse(s)?)),
        }
    }
}

/// Integers serialize as JSON numbers, proper fractions as `"p/q"` strings.
impl Serialize for ChiValue {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        match self.to_integer() {
            Some(n) => serializer.serialize_i64(n),
            None => serializer.collect_str(self),
        }
    }
}

impl<'de> Deserialize<'de> for ChiValue {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Repr {
            Int(i64),
            Text(String),
        }
        match Repr::deserialize(deserializer)? {
            Repr::Int(n) => Ok(ChiValue::from_integer(n)),
            Repr::Text(t) => t.parse().map_err(serde::de::Error::custom),
        }
    }
}

/// `C(n, 3)`, taken to be 0 when `n < 3`.
fn binomial3(n: i64) -> i64 {
    if n < 3 {
        0
    } else {
        n * (n - 1) * (n - 2) / 6
    }
}

/// Riemann-Roch on the resolved surface for the bundle `(v·H − E_w)/2`:
///
/// `χ = (s·v/8)(v − 2s + 8) + C(s−1, 3) + 1 − |w|/4`.
///
/// Defined for every integer twist, negative ones included.
pub fn chi(s: i64, v: i64, weight: i64) -> ChiValue {
    let eighths = s * v * (v - 2 * s + 8) + 8 * binomial3(s - 1) + 8 - 2 * weight;
    ChiValue::new(eighths, 8)
}

/// The twist `v' = 2(s − 4) − v` paired with `v` by Serre duality
/// (`K = (s − 4)H` on the resolution); `h²(v) = h⁰(v')` and `χ(v) = χ(v')`.
pub fn serre_dual_twist(s: i64, v: i64) -> i64 {
    2 * (s - 4) - v
}

/// Tests `q(t − sing) = m·n·(m − n)` for two hypersurfaces of degrees `m`, `n`
/// in contact of order `q`, whose singular loci on the contact variety have
/// degrees `t` and `sing`.
pub fn gallarati_check(m: i64, n: i64, q: i64, t: i64, sing: i64) -> bool {
    q * (t - sing) == m * n * (m - n)
}

/// Nodes cut out by an irreducible contact surface of degree `v` with `beta`
/// extra singular points: `s·v·(s − v)/2 + β`. Exact when the contact
/// surface is nodal, a lower bound otherwise.
pub fn contact_count_nodal(s: i64, v: i64, beta: i64) -> Result<i64, FormulaError> {
    if v < 1 || s <= v {
        return Err(FormulaError::TwistOutOfRange {
            degree: s,
            twist: v,
        });
    }
    // one of s, v, s - v is always even
    Ok(s * v * (s - v) / 2 + beta)
}

/// Lower bound `⌈s·v·(s − v)/2⌉` for the weight cut out by a reduced contact
/// surface of total degree `v` whose components all have degree below `s`.
pub fn reduced_contact_lower_bound(s: i64, v: i64) -> Result<i64, FormulaError> {
    if v < 1 || s <= v {
        return Err(FormulaError::TwistOutOfRange {
            degree: s,
            twist: v,
        });
    }
    Ok(Integer::div_ceil(&(s * v * (s - v)), &2))
}

/// Weight of the even set cut out by a plane: `s(s − 1)/2`.
pub fn plane_contact_weight(s: i64) -> i64 {
    s * (s - 1) / 2
}

/// Weight of the even set cut out by a reduced quadric:
/// `s(s − 2)` for even `s`, `(s − 1)²` for odd `s`.
pub fn quadric_contact_weight(s: i64) -> i64 {
    if s % 2 == 0 {
        s * (s - 2)
    } else {
        (s - 1) * (s - 1)
    }
}

/// Weight forced on an even set that is unstable in degree `v`.
///
/// * `2v = s`: exactly `s³/8`.
/// * `2v = s + 1` or `2v = s + 2`: at least `s·v·(s − v)/2`, the reduced
///   contact bound at that degree.
pub fn unstable_lower_bound(s: i64, v: i64) -> Result<i64, FormulaError> {
    if 2 * v == s {
        Ok(s * s * s / 8)
    } else if 2 * v == s + 1 || 2 * v == s + 2 {
        reduced_contact_lower_bound(s, v)
    } else {
        Err(FormulaError::UnstableTwist {
            degree: s,
            twist: v,
        })
    }
}

/// The alternative closed forms `s(s−1)²/8` (for `2v = s + 1`) and
/// `s(s−2)²/8` (for `2v = s + 2`) that are sometimes quoted for the
/// unstable bound. They disagree with `s·v·(s − v)/2`; kept so certificates
/// can record the difference.
pub fn squared_unstable_bound(s: i64, v: i64) -> Result<ChiValue, FormulaError> {
    if 2 * v == s + 1 {
        Ok(ChiValue::new(s * (s - 1) * (s - 1), 8))
    } else if 2 * v == s + 2 {
        Ok(ChiValue::new(s * (s - 2) * (s - 2), 8))
    } else {
        Err(FormulaError::UnstableTwist {
            degree: s,
            twist: v,
        })
    }
}

fn known_list(degrees: &[i64]) -> String {
    degrees
        .iter()
        .map(|d| d.to_string())
        .collect::<Vec<_>>()
        .join(", ")
}

/// Minimal weight of a nonzero strictly even set on a nodal surface of degree `s`.
pub fn e_min(s: i64) -> Result<i64, FormulaError> {
    if !PROVEN_STRICT_DEGREES.contains(&s) {
        return Err(FormulaError::UnprovenDegree {
            degree: s,
            parity: "strictly even",
            known: known_list(&PROVEN_STRICT_DEGREES),
        });
    }
    Ok(quadric_contact_weight(s))
}

/// Minimal weight of a nonzero weakly even set on a nodal surface of degree `s`.
pub fn e_bar_min(s: i64) -> Result<i64, FormulaError> {
    if !PROVEN_WEAK_DEGREES.contains(&s) {
        return Err(FormulaError::UnprovenDegree {
            degree: s,
            parity: "weakly even",
            known: known_list(&PROVEN_WEAK_DEGREES),
        });
    }
    Ok(plane_contact_weight(s))
}

/// Weight of a weakly even set cut out by a smooth cubic: `3s(s − 3)/2`.
pub fn smooth_cubic_weight(s: i64) -> i64 {
    3 * s * (s - 3) / 2
}

/// Weight of a strictly even set cut out by a smooth quartic: `2s(s − 4)`.
pub fn smooth_quartic_weight(s: i64) -> i64 {
    2 * s * (s - 4)
}
