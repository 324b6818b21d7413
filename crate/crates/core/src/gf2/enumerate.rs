//! Exhaustive codeword enumeration.
//!
//! Two traversals exist. [`Codewords`] yields words in lexicographic order of
//! message vectors: message index `m` runs over `0..2^k` and basis row `i`
//! is included when bit `k - 1 - i` of `m` is set, so row 0 is the most
//! significant message bit. Aggregates (weight distribution, minimum
//! distance, parity) use a Gray-code walk instead, which costs one row XOR
//! per word, and split the message space across rayon workers for large
//! dimensions. Aggregation is a sum of counts, so the result does not depend
//! on the partition.

use std::collections::BTreeMap;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::{BitWord, CodeError, LinearCode};

/// Default largest dimension that may be enumerated (2^30 codewords).
pub const DEFAULT_MAX_DIMENSION: usize = 30;

/// Dimension at which aggregate traversals start splitting work across threads.
const PARALLEL_MIN_DIMENSION: usize = 16;
/// Number of leading message bits fixed per parallel chunk.
const PARALLEL_SPLIT_BITS: usize = 6;

/// Refusal threshold for exhaustive enumeration.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct EnumerationLimit {
    pub max_dimension: usize,
}

impl Default for EnumerationLimit {
    fn default() -> Self {
        Self {
            max_dimension: DEFAULT_MAX_DIMENSION,
        }
    }
}

/// How far up the divisibility ladder all codeword weights go.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum ParityClass {
    NotEven,
    Even,
    DoublyEven,
}

impl ParityClass {
    pub fn as_str(self) -> &'static str {
        match self {
            ParityClass::NotEven => "not-even",
            ParityClass::Even => "even",
            ParityClass::DoublyEven => "doubly-even",
        }
    }
}

impl std::fmt::Display for ParityClass {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Number of codewords of each weight. Only weights that occur are stored.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WeightDistribution {
    pub length: usize,
    pub counts: BTreeMap<usize, u64>,
}

impl WeightDistribution {
    pub fn count(&self, weight: usize) -> u64 {
        self.counts.get(&weight).copied().unwrap_or(0)
    }

    pub fn total(&self) -> u64 {
        self.counts.values().sum()
    }

    pub fn min_nonzero_weight(&self) -> Option<usize> {
        self.counts.keys().copied().find(|&w| w > 0)
    }

    pub fn weights(&self) -> impl Iterator<Item = usize> + '_ {
        self.counts.keys().copied()
    }

    /// Strongest parity class consistent with every weight present.
    pub fn parity(&self) -> ParityClass {
        if self.weights().all(|w| w % 4 == 0) {
            ParityClass::DoublyEven
        } else if self.weights().all(|w| w % 2 == 0) {
            ParityClass::Even
        } else {
            ParityClass::NotEven
        }
    }
}

/// Lexicographic codeword stream; see the module docs for the order.
pub struct Codewords<'a> {
    code: &'a LinearCode,
    next: u64,
    end: u64,
}

impl Iterator for Codewords<'_> {
    type Item = BitWord;

    fn next(&mut self) -> Option<BitWord> {
        if self.next >= self.end {
            return None;
        }
        let m = self.next;
        self.next += 1;
        let k = self.code.dimension();
        let mut word = BitWord::zeros(self.code.length());
        for (i, row) in self.code.basis().iter().enumerate() {
            if (m >> (k - 1 - i)) & 1 == 1 {
                word.xor_assign_unchecked(row);
            }
        }
        Some(word)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let rest = (self.end - self.next) as usize;
        (rest, Some(rest))
    }
}

impl ExactSizeIterator for Codewords<'_> {}

impl EnumerationLimit {
    pub fn new(max_dimension: usize) -> Self {
        Self { max_dimension }
    }

    fn check(&self, code: &LinearCode) -> Result<(), CodeError> {
        if code.dimension() > self.max_dimension {
            return Err(CodeError::DimensionAboveCap {
                dimension: code.dimension(),
                cap: self.max_dimension,
            });
        }
        Ok(())
    }

    pub fn codewords<'a>(&self, code: &'a LinearCode) -> Result<Codewords<'a>, CodeError> {
        self.check(code)?;
        Ok(Codewords {
            code,
            next: 0,
            end: 1u64 << code.dimension(),
        })
    }

    pub fn weight_distribution(&self, code: &LinearCode) -> Result<WeightDistribution, CodeError> {
        self.check(code)?;
        let mut histogram = vec![0u64; code.length() + 1];
        for (w, c) in histogram_by_gray_walk(code).into_iter().enumerate() {
            histogram[w] += c;
        }
        let counts = histogram
            .into_iter()
            .enumerate()
            .filter(|&(_, c)| c > 0)
            .collect();
        Ok(WeightDistribution {
            length: code.length(),
            counts,
        })
    }

    /// Minimum weight over nonzero codewords.
    pub fn minimum_distance(&self, code: &LinearCode) -> Result<usize, CodeError> {
        self.check(code)?;
        if code.dimension() == 0 {
            return Err(CodeError::NoNonzeroWords);
        }
        let chunks = partition(code);
        let min = chunks
            .into_par_iter()
            .map(|chunk| {
                let mut best = usize::MAX;
                chunk.walk(code, |limbs| {
                    let w = popcount(limbs);
                    if w > 0 && w < best {
                        best = w;
                    }
                });
                best
            })
            .min()
            .unwrap_or(usize::MAX);
        Ok(min)
    }

    /// Checks every codeword, not just the generators.
    pub fn classify_parity(&self, code: &LinearCode) -> Result<ParityClass, CodeError> {
        Ok(self.weight_distribution(code)?.parity())
    }
}

impl LinearCode {
    /// Every codeword in lexicographic message order, under the default cap.
    pub fn codewords(&self) -> Result<Codewords<'_>, CodeError> {
        EnumerationLimit::default().codewords(self)
    }

    pub fn weight_distribution(&self) -> Result<WeightDistribution, CodeError> {
        EnumerationLimit::default().weight_distribution(self)
    }

    pub fn minimum_distance(&self) -> Result<usize, CodeError> {
        EnumerationLimit::default().minimum_distance(self)
    }

    pub fn classify_parity(&self) -> Result<ParityClass, CodeError> {
        EnumerationLimit::default().classify_parity(self)
    }
}

/// A slice of the message space: the leading `fixed` message bits are set to
/// `prefix`, the remaining rows are walked in Gray order.
struct Chunk {
    fixed: usize,
    prefix: u64,
}

impl Chunk {
    fn walk(&self, code: &LinearCode, mut visit: impl FnMut(&[u64])) {
        let basis = code.basis();
        let mut word = BitWord::zeros(code.length());
        for (i, row) in basis[..self.fixed].iter().enumerate() {
            if (self.prefix >> (self.fixed - 1 - i)) & 1 == 1 {
                word.xor_assign_unchecked(row);
            }
        }
        let free = &basis[self.fixed..];
        visit(word.limbs());
        let steps = 1u64 << free.len();
        for t in 1..steps {
            word.xor_assign_unchecked(&free[t.trailing_zeros() as usize]);
            visit(word.limbs());
        }
    }
}

fn partition(code: &LinearCode) -> Vec<Chunk> {
    let k = code.dimension();
    let fixed = if k >= PARALLEL_MIN_DIMENSION {
        PARALLEL_SPLIT_BITS
    } else {
        0
    };
    (0..1u64 << fixed)
        .map(|prefix| Chunk { fixed, prefix })
        .collect()
}

fn histogram_by_gray_walk(code: &LinearCode) -> Vec<u64> {
    let n = code.length();
    partition(code)
        .into_par_iter()
        .map(|chunk| {
            let mut h = vec![0u64; n + 1];
            chunk.walk(code, |limbs| h[popcount(limbs)] += 1);
            h
        })
        .reduce(
            || vec![0u64; n + 1],
            |mut a, b| {
                for (x, y) in a.iter_mut().zip(b) {
                    *x += y;
                }
                a
            },
        )
}

#[inline]
fn popcount(limbs: &[u64]) -> usize {
    limbs.iter().map(|l| l.count_ones() as usize).sum()
}
