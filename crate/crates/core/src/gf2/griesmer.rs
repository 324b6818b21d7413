use super::CodeError;

/// Smallest length allowed by the Griesmer bound for a binary `[n, k, d]`
/// code: `Σ_{i<k} ⌈d / 2^i⌉`. An empty sum (`k = 0`) is 0.
pub fn griesmer_min_length(k: usize, d: u64) -> u64 {
    (0..k)
        .map(|i| {
            if i >= 64 {
                u64::from(d > 0)
            } else {
                d.div_ceil(1u64 << i)
            }
        })
        .sum()
}

/// Largest `k` with `griesmer_min_length(k, d) <= n`.
pub fn griesmer_max_dim(n: u64, d: u64) -> Result<usize, CodeError> {
    if d == 0 || d > n {
        return Err(CodeError::InvalidGriesmerArguments { n, d });
    }
    // Every summand is at least 1, so k never exceeds n.
    let mut k = 1;
    while griesmer_min_length(k + 1, d) <= n {
        k += 1;
    }
    Ok(k)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    /// Oracle: smallest n such that the sum, built term by term with
    /// floating ceilings, fits.
    fn oracle_max_dim(n: u64, d: u64) -> usize {
        let mut k = 0;
        loop {
            let len: u64 = (0..=k)
                .map(|i| (d as f64 / 2f64.powi(i as i32)).ceil() as u64)
                .sum();
            if len > n {
                return k;
            }
            k += 1;
        }
    }

    #[test]
    fn min_lengths() {
        assert_eq!(griesmer_min_length(5, 16), 31);
        assert_eq!(griesmer_min_length(5, 8), 8 + 4 + 2 + 1 + 1);
        assert_eq!(griesmer_min_length(1, 7), 7);
        assert_eq!(
            griesmer_min_length(12, 32),
            32 + 16 + 8 + 4 + 2 + 1 + 1 + 1 + 1 + 1 + 1 + 1
        );
        assert_eq!(griesmer_min_length(12, 32), 69);
        assert_eq!(griesmer_min_length(0, 5), 0);
    }

    #[test]
    fn max_dims() {
        assert_eq!(griesmer_max_dim(16, 8).unwrap(), 5);
        assert_eq!(griesmer_max_dim(31, 16).unwrap(), 5);
        assert_eq!(griesmer_max_dim(65, 32).unwrap(), oracle_max_dim(65, 32));
        assert_eq!(griesmer_max_dim(65, 32).unwrap(), 8);
        assert!(matches!(
            griesmer_max_dim(16, 17),
            Err(CodeError::InvalidGriesmerArguments { n: 16, d: 17 })
        ));
    }

    proptest! {
        #[test]
        fn monotone_in_k_and_d(k in 1usize..40, d in 1u64..500) {
            prop_assert!(griesmer_min_length(k + 1, d) > griesmer_min_length(k, d));
            prop_assert!(griesmer_min_length(k, d + 1) >= griesmer_min_length(k, d));
        }

        #[test]
        fn max_dim_inverts_min_length(k in 1usize..30, d in 1u64..300) {
            let n = griesmer_min_length(k, d);
            prop_assert!(griesmer_max_dim(n, d).unwrap() >= k);
        }

        #[test]
        fn max_dim_matches_oracle(n in 1u64..300, d in 1u64..300) {
            prop_assume!(d <= n);
            prop_assert_eq!(griesmer_max_dim(n, d).unwrap(), oracle_max_dim(n, d));
        }
    }
}
