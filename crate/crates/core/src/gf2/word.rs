use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::CodeError;

const LIMB_BITS: usize = 64;

/// A fixed-length vector over GF(2), packed into 64-bit limbs.
///
/// Coordinate `i` is stored in bit `i % 64` of limb `i / 64`. Bits beyond
/// `len` in the last limb are always zero, so limb-wise comparison and
/// popcount are exact.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BitWord {
    len: usize,
    limbs: Vec<u64>,
}

impl BitWord {
    /// The zero word of the given length.
    pub fn zeros(len: usize) -> Self {
        Self {
            len,
            limbs: vec![0; len.div_ceil(LIMB_BITS)],
        }
    }

    /// The all-ones word of the given length.
    pub fn ones(len: usize) -> Self {
        let mut w = Self::zeros(len);
        for limb in w.limbs.iter_mut() {
            *limb = u64::MAX;
        }
        w.mask_tail();
        w
    }

    pub fn from_bits<I: IntoIterator<Item = bool>>(bits: I) -> Self {
        let bits: Vec<bool> = bits.into_iter().collect();
        let mut w = Self::zeros(bits.len());
        for (i, b) in bits.into_iter().enumerate() {
            if b {
                w.set(i, true);
            }
        }
        w
    }

    /// Word of length `len` with ones exactly at `indices`.
    pub fn from_support(len: usize, indices: &[usize]) -> Result<Self, CodeError> {
        let mut w = Self::zeros(len);
        for &i in indices {
            if i >= len {
                return Err(CodeError::IndexOutOfRange {
                    index: i,
                    length: len,
                });
            }
            w.set(i, true);
        }
        Ok(w)
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.len
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    #[inline]
    pub fn get(&self, i: usize) -> bool {
        assert!(
            i < self.len,
            "coordinate {i} out of range for length {}",
            self.len
        );
        (self.limbs[i / LIMB_BITS] >> (i % LIMB_BITS)) & 1 == 1
    }

    #[inline]
    pub fn set(&mut self, i: usize, value: bool) {
        assert!(
            i < self.len,
            "coordinate {i} out of range for length {}",
            self.len
        );
        let mask = 1u64 << (i % LIMB_BITS);
        if value {
            self.limbs[i / LIMB_BITS] |= mask;
        } else {
            self.limbs[i / LIMB_BITS] &= !mask;
        }
    }

    /// Number of 1-coordinates.
    #[inline]
    pub fn weight(&self) -> usize {
        self.limbs.iter().map(|l| l.count_ones() as usize).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.limbs.iter().all(|&l| l == 0)
    }

    /// Coordinate-wise XOR, i.e. symmetric difference of supports.
    pub fn add(&self, other: &BitWord) -> Result<BitWord, CodeError> {
        self.check_len(other)?;
        let mut out = self.clone();
        out.xor_assign_unchecked(other);
        Ok(out)
    }

    /// `|v ∩ w|`, the number of coordinates where both words are 1.
    pub fn intersection_weight(&self, other: &BitWord) -> Result<usize, CodeError> {
        self.check_len(other)?;
        Ok(self
            .limbs
            .iter()
            .zip(&other.limbs)
            .map(|(a, b)| (a & b).count_ones() as usize)
            .sum())
    }

    /// Coordinate-wise AND.
    pub fn intersection(&self, other: &BitWord) -> Result<BitWord, CodeError> {
        self.check_len(other)?;
        Ok(BitWord {
            len: self.len,
            limbs: self
                .limbs
                .iter()
                .zip(&other.limbs)
                .map(|(a, b)| a & b)
                .collect(),
        })
    }

    /// GF(2) inner product.
    pub fn dot(&self, other: &BitWord) -> Result<bool, CodeError> {
        Ok(self.intersection_weight(other)? % 2 == 1)
    }

    /// Ascending 0-based indices of the 1-coordinates.
    pub fn support(&self) -> Vec<usize> {
        self.ones_iter().collect()
    }

    pub fn ones_iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.limbs.iter().enumerate().flat_map(|(li, &limb)| {
            let mut rest = limb;
            std::iter::from_fn(move || {
                if rest == 0 {
                    return None;
                }
                let tz = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                Some(li * LIMB_BITS + tz)
            })
        })
    }

    /// Keeps only the coordinates listed in `indices`, in that order.
    pub fn restrict(&self, indices: &[usize]) -> BitWord {
        BitWord::from_bits(indices.iter().map(|&i| self.get(i)))
    }

    /// Lowest index holding a 1.
    pub fn leading_one(&self) -> Option<usize> {
        self.limbs
            .iter()
            .enumerate()
            .find(|(_, &l)| l != 0)
            .map(|(i, l)| i * LIMB_BITS + l.trailing_zeros() as usize)
    }

    #[inline]
    pub(crate) fn xor_assign_unchecked(&mut self, other: &BitWord) {
        debug_assert_eq!(self.len, other.len);
        for (a, b) in self.limbs.iter_mut().zip(&other.limbs) {
            *a ^= b;
        }
    }

    pub(crate) fn limbs(&self) -> &[u64] {
        &self.limbs
    }

    fn check_len(&self, other: &BitWord) -> Result<(), CodeError> {
        if self.len != other.len {
            return Err(CodeError::LengthMismatch {
                left: self.len,
                right: other.len,
            });
        }
        Ok(())
    }

    fn mask_tail(&mut self) {
        let rem = self.len % LIMB_BITS;
        if rem != 0 {
            if let Some(last) = self.limbs.last_mut() {
                *last &= (1u64 << rem) - 1;
            }
        }
    }
}

impl fmt::Display for BitWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.len {
            f.write_str(if self.get(i) { "1" } else { "0" })?;
        }
        Ok(())
    }
}

impl fmt::Debug for BitWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BitWord({self})")
    }
}

impl FromStr for BitWord {
    type Err = CodeError;

    /// Parses a string of `0`/`1` characters; coordinate 0 is the first character.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bits = s
            .chars()
            .enumerate()
            .map(|(pos, c)| match c {
                '0' => Ok(false),
                '1' => Ok(true),
                other => Err(CodeError::InvalidBit {
                    position: pos,
                    found: other,
                }),
            })
            .collect::<Result<Vec<_>, _>>()?;
        Ok(BitWord::from_bits(bits))
    }
}

impl Serialize for BitWord {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for BitWord {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn w(s: &str) -> BitWord {
        s.parse().unwrap()
    }

    #[test]
    fn weights() {
        assert_eq!(w("0000").weight(), 0);
        assert_eq!(w("1111111111111111").weight(), 16);
        assert_eq!(w("1100110011001100").weight(), 8);
    }

    #[test]
    fn xor_and_self_inverse() {
        assert_eq!(w("1100").add(&w("0110")).unwrap(), w("1010"));
        let v = w("1011001");
        assert!(v.add(&v).unwrap().is_zero());
    }

    #[test]
    fn intersections() {
        assert_eq!(w("1100").intersection_weight(&w("0110")).unwrap(), 1);
        let v = w("1011001");
        assert_eq!(v.intersection_weight(&v).unwrap(), v.weight());
    }

    #[test]
    fn length_mismatch_is_an_error() {
        assert!(matches!(
            w("110").add(&w("1100")),
            Err(CodeError::LengthMismatch { left: 3, right: 4 })
        ));
        assert!(w("110").intersection_weight(&w("1100")).is_err());
    }

    #[test]
    fn supports() {
        assert!(w("0000").support().is_empty());
        assert_eq!(w("1010").support(), vec![0, 2]);
        assert_eq!(
            w("1100110011001100").support(),
            vec![0, 1, 4, 5, 8, 9, 12, 13]
        );
    }

    #[test]
    fn multi_limb_words() {
        let mut v = BitWord::zeros(130);
        v.set(0, true);
        v.set(64, true);
        v.set(129, true);
        assert_eq!(v.weight(), 3);
        assert_eq!(v.support(), vec![0, 64, 129]);
        assert_eq!(BitWord::ones(130).weight(), 130);
        assert_eq!(v.to_string().parse::<BitWord>().unwrap(), v);
    }

    #[test]
    fn rejects_bad_characters() {
        assert!(matches!(
            "10x1".parse::<BitWord>(),
            Err(CodeError::InvalidBit {
                position: 2,
                found: 'x'
            })
        ));
    }

    proptest! {
        #[test]
        fn weight_identity(bits in prop::collection::vec(any::<(bool, bool)>(), 1..200)) {
            let v = BitWord::from_bits(bits.iter().map(|p| p.0));
            let u = BitWord::from_bits(bits.iter().map(|p| p.1));
            let sum = v.add(&u).unwrap();
            prop_assert_eq!(
                sum.weight() + 2 * v.intersection_weight(&u).unwrap(),
                v.weight() + u.weight()
            );
        }

        #[test]
        fn display_round_trip(bits in prop::collection::vec(any::<bool>(), 0..150)) {
            let v = BitWord::from_bits(bits);
            prop_assert_eq!(v.to_string().parse::<BitWord>().unwrap(), v);
        }
    }
}
