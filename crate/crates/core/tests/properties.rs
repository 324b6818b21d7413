use evenset_core::formulas::{chi, serre_dual_twist};
use evenset_core::gf2::{griesmer_max_dim, griesmer_min_length};
use evenset_core::surface::{kummer_code, togliatti_code, weak_weight_residue};
use evenset_core::{BitWord, LinearCode, ParityClass};
use proptest::prelude::*;

fn subcode(code: &LinearCode, mask: u8) -> LinearCode {
    let rows: Vec<BitWord> = code
        .basis()
        .iter()
        .enumerate()
        .filter(|(i, _)| mask >> i & 1 == 1)
        .map(|(_, r)| r.clone())
        .collect();
    LinearCode::from_rows_with_length(code.length(), rows).unwrap()
}

prop_compose! {
    fn arb_code(max_n: usize, max_k: usize)(n in 1..=max_n)(
        n in Just(n),
        rows in prop::collection::vec(prop::collection::vec(any::<bool>(), n), 0..=max_k)
    ) -> LinearCode {
        LinearCode::from_rows_with_length(n, rows.into_iter().map(BitWord::from_bits).collect()).unwrap()
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn doubly_even_codes_are_self_orthogonal(c in arb_code(31, 12)) {
        if c.classify_parity().unwrap() == ParityClass::DoublyEven {
            prop_assert!(c.is_self_orthogonal());
        }
    }

    #[test]
    fn minimum_distance_agrees_with_distribution(c in arb_code(24, 10)) {
        prop_assume!(c.dimension() > 0);
        let wd = c.weight_distribution().unwrap();
        prop_assert_eq!(c.minimum_distance().unwrap(), wd.min_nonzero_weight().unwrap());
        prop_assert_eq!(wd.total(), 1u64 << c.dimension());
    }

    #[test]
    fn projection_halves_divisibility(mask in 1u8..32, pick in 0usize..32, which in any::<bool>()) {
        let base = if which { kummer_code() } else { togliatti_code() };
        let sub = subcode(&base, mask);
        let words: Vec<BitWord> = sub.codewords().unwrap().collect();
        let w = &words[pick % words.len()];
        let d = if which { 4 } else { 8 };
        let p = sub.project_onto_support(w).unwrap();
        for v in p.image.codewords().unwrap() {
            prop_assert_eq!(v.weight() % d, 0);
        }
    }

    #[test]
    fn griesmer_monotone(k in 1usize..20, d in 1u64..200) {
        prop_assert!(griesmer_min_length(k + 1, d) > griesmer_min_length(k, d));
        prop_assert!(griesmer_min_length(k, d + 1) >= griesmer_min_length(k, d));
        let n = griesmer_min_length(k, d);
        prop_assert!(griesmer_max_dim(n, d).unwrap() >= k);
    }

    #[test]
    fn serre_symmetry_random(s in 2i64..40, v in -50i64..100, w in 0i64..10_000) {
        prop_assert_eq!(chi(s, v, w), chi(s, serre_dual_twist(s, v), w));
    }
}

#[test]
fn weak_residue_matches_listed_weights() {
    let listed = [
        (4, [2, 6, 10, 14]),
        (6, [3, 7, 11, 15]),
        (8, [4, 8, 12, 16]),
    ];
    for (s, weights) in listed {
        let r = weak_weight_residue(s).unwrap();
        for w in weights {
            assert_eq!(w % 4, r);
            assert!(chi(s, 1, w).is_integer());
        }
    }
}
