//! Acceptance criteria, one line each. Expected values are literals taken
//! from the published examples and tables, not from the library.

use std::collections::BTreeMap;
use std::process::Command;

use evenset_core::engine::{
    derive_gaps, verify_concluding_table, verify_corollary_gaps, verify_theorem_main,
};
use evenset_core::formulas::{chi, serre_dual_twist, ChiValue};
use evenset_core::gf2::griesmer_max_dim;
use evenset_core::surface::{
    b2_resolution, dim_lower_bound, kummer_code, sextic_dim_certificate, togliatti_code,
};
use evenset_core::{
    BitWord, Conclusion, EvenSetParity, LinearCode, NodalSurface, ParityClass, Rule, Value,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn ensure(cond: bool, msg: impl Into<String>) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg.into())
    }
}

fn counts(code: &LinearCode) -> Result<BTreeMap<usize, u64>, String> {
    code.weight_distribution()
        .map(|w| w.counts)
        .map_err(|e| e.to_string())
}

fn kummer() -> Outcome {
    let k = kummer_code();
    let expected: BTreeMap<usize, u64> = [(0, 1), (8, 30), (16, 1)].into();
    let got = counts(&k)?;
    ensure(got == expected, format!("distribution {got:?}"))?;
    let d = k.minimum_distance().map_err(|e| e.to_string())?;
    ensure(d == 8, format!("minimum distance {d}"))?;
    ensure(
        k.classify_parity() == Ok(ParityClass::DoublyEven),
        "not doubly even",
    )?;
    ensure(k.is_self_orthogonal(), "not self-orthogonal")?;
    Ok("{0:1, 8:30, 16:1}, d=8, doubly even, self-orthogonal".into())
}

fn togliatti() -> Outcome {
    let expected: BTreeMap<usize, u64> = [(0, 1), (16, 31)].into();
    let got = counts(&togliatti_code())?;
    ensure(got == expected, format!("distribution {got:?}"))?;
    Ok("{0:1, 16:31}".into())
}

fn griesmer() -> Outcome {
    let a = griesmer_max_dim(16, 8).map_err(|e| e.to_string())?;
    let b = griesmer_max_dim(31, 16).map_err(|e| e.to_string())?;
    ensure((a, b) == (5, 5), format!("got {a}, {b}"))?;
    Ok("max dim (16,8)=5, (31,16)=5".into())
}

fn betti_and_dimension() -> Outcome {
    for (s, b2) in [(3, 7), (4, 22), (5, 53), (6, 106)] {
        ensure(
            b2_resolution(s) == b2,
            format!("b2({s}) = {}", b2_resolution(s)),
        )?;
    }
    for (s, mu, bound) in [(4, 16, 5), (5, 31, 5), (6, 65, 12), (3, 4, 1)] {
        let x = NodalSurface::new(s, mu).map_err(|e| e.to_string())?;
        let got = dim_lower_bound(&x, EvenSetParity::Strict).map_err(|e| e.to_string())?;
        ensure(got == bound, format!("dim bound s={s}: {got}"))?;
    }
    Ok("b2 = 7, 22, 53, 106; bounds 5, 5, 12, 1".into())
}

fn sextic() -> Outcome {
    let cert = sextic_dim_certificate();
    cert.validate().map_err(|e| e.to_string())?;
    ensure(
        cert.conclusion == Conclusion::Dimension { value: 12 },
        "conclusion is not 12",
    )?;
    let g = cert
        .steps_with_rule(Rule::GriesmerLength)
        .next()
        .ok_or("no griesmer step")?;
    ensure(
        g.asserted_output == Value::Int(69),
        format!("griesmer length {}", g.asserted_output),
    )?;
    let cmp = cert
        .steps_with_rule(Rule::Comparison)
        .next()
        .ok_or("no comparison")?;
    ensure(
        cmp.inputs.get("lhs") == Some(&Value::Int(69))
            && cmp.inputs.get("rhs") == Some(&Value::Int(65)),
        "comparison is not 69 vs 65",
    )?;
    Ok("dim = 12, Griesmer length 69 > 65".into())
}

fn chi_regression() -> Outcome {
    // (s, v, numerator a, denominator q): chi = a/q - w/4.
    let forms = [
        (4, 1, 10, 4),
        (6, 1, 35, 4),
        (6, 3, 35, 4),
        (8, 3, 21, 1),
        (8, 5, 21, 1),
        (5, 2, 5, 1),
        (6, 2, 8, 1),
        (7, 4, 14, 1),
        (8, 4, 20, 1),
        (10, 6, 40, 1),
    ];
    let weights = [
        [2, 6],
        [3, 23],
        [7, 15],
        [28, 56],
        [4, 32],
        [8, 16],
        [16, 24],
        [36, 40],
        [48, 56],
        [80, 112],
    ];
    let mut n = 0;
    for ((s, v, a, q), ws) in forms.iter().zip(weights) {
        for w in ws {
            let expected = ChiValue::new(4 * a - q * w, 4 * q);
            let got = chi(*s, *v, w);
            ensure(
                got == expected,
                format!("chi({s},{v},{w}) = {got}, expected {expected}"),
            )?;
            n += 1;
        }
    }
    ensure(n == 20, "sample size")?;
    Ok(format!("{n} triples across 8 closed forms"))
}

fn theorem_main() -> Outcome {
    let strict = [(3, 4), (4, 8), (5, 16), (6, 24), (7, 36), (8, 48), (10, 80)];
    let weak = [(2, 1), (4, 6), (6, 15), (8, 28)];
    let cases = strict
        .iter()
        .map(|&(s, m)| (s, EvenSetParity::Strict, m))
        .chain(weak.iter().map(|&(s, m)| (s, EvenSetParity::Weak, m)));
    let mut n = 0;
    for (s, p, m) in cases {
        let cert = derive_gaps(s, p).map_err(|e| e.to_string())?;
        cert.validate().map_err(|e| format!("{p} s={s}: {e}"))?;
        let got = cert.gap_report().ok_or("no gap report")?.min_weight;
        ensure(got == m, format!("{p} s={s}: minimum {got}, expected {m}"))?;
        n += 1;
    }
    let report = verify_theorem_main();
    ensure(
        report.all_passed() && report.checks.len() == 11,
        "verify_theorem_main",
    )?;
    Ok(format!("{n} pairs"))
}

fn gap_table() -> Outcome {
    let table: [(EvenSetParity, i64, &[i64]); 6] = [
        (EvenSetParity::Weak, 6, &[19, 23]),
        (EvenSetParity::Weak, 8, &[32, 36, 40, 44, 48, 52, 56]),
        (EvenSetParity::Strict, 6, &[]),
        (EvenSetParity::Strict, 7, &[40]),
        (EvenSetParity::Strict, 8, &[56]),
        (EvenSetParity::Strict, 10, &[88, 96, 104, 112]),
    ];
    for (p, s, expected) in table {
        let cert = derive_gaps(s, p).map_err(|e| e.to_string())?;
        let got = &cert.gap_report().ok_or("no gap report")?.excluded_weights;
        ensure(got.as_slice() == expected, format!("{p} s={s}: {got:?}"))?;
    }
    ensure(
        verify_corollary_gaps().all_passed(),
        "verify_corollary_gaps",
    )?;
    Ok("6 cells".into())
}

fn concluding_table() -> Outcome {
    let report = verify_concluding_table();
    let failed: Vec<_> = report.failures().map(|c| c.label.clone()).collect();
    ensure(failed.is_empty(), format!("{failed:?}"))?;
    Ok(format!("{} checks", report.checks.len()))
}

fn random_word(rng: &mut ChaCha8Rng, n: usize) -> BitWord {
    BitWord::from_bits((0..n).map(|_| rng.random::<bool>()))
}

fn properties() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    for _ in 0..10_000 {
        let n = rng.random_range(1..=200);
        let (v, w) = (random_word(&mut rng, n), random_word(&mut rng, n));
        let sum = v.add(&w).map_err(|e| e.to_string())?;
        let meet = v.intersection_weight(&w).map_err(|e| e.to_string())?;
        ensure(
            sum.weight() + 2 * meet == v.weight() + w.weight(),
            "weight identity",
        )?;
    }

    let mut doubly_even = 0;
    for _ in 0..1_000 {
        let n = rng.random_range(1..=24);
        let k = rng.random_range(0..=10);
        let rows = (0..k).map(|_| random_word(&mut rng, n)).collect();
        let c = LinearCode::from_rows_with_length(n, rows).map_err(|e| e.to_string())?;
        let d = c.dual();
        ensure(c.dimension() + d.dimension() == n, "dual dimension law")?;
        ensure(d.dual() == c, "double dual")?;
        if c.classify_parity() == Ok(ParityClass::DoublyEven) {
            doubly_even += 1;
            ensure(
                c.is_self_orthogonal(),
                "doubly even but not self-orthogonal",
            )?;
        }
    }

    let k = kummer_code();
    let words: Vec<BitWord> = k
        .codewords()
        .map_err(|e| e.to_string())?
        .filter(|w| w.weight() == 8)
        .collect();
    ensure(words.len() == 30, format!("{} weight-8 words", words.len()))?;
    for w in &words {
        let p = k.project_onto_support(w).map_err(|e| e.to_string())?;
        let image = counts(&p.image)?;
        ensure(
            image.keys().all(|x| x % 4 == 0),
            format!("projection weights {image:?}"),
        )?;
    }

    let mut triples = 0;
    for s in 2..=12i64 {
        for v in -5..=2 * s {
            for w in (0..=4 * s * s).step_by(4) {
                ensure(
                    chi(s, v, w) == chi(s, serre_dual_twist(s, v), w),
                    format!("symmetry s={s} v={v} w={w}"),
                )?;
                triples += 1;
            }
        }
    }
    Ok(format!(
        "10000 word pairs, 1000 codes ({doubly_even} doubly even), 30 projections, {triples} chi triples"
    ))
}

fn determinism() -> Outcome {
    let bin = env!("CARGO_BIN_EXE_evenset");
    let once = |threads: &str| {
        Command::new(bin)
            .args(["verify", "paper", "--json"])
            .env("RAYON_NUM_THREADS", threads)
            .output()
    };
    let a = once("4").map_err(|e| e.to_string())?;
    let b = once("4").map_err(|e| e.to_string())?;
    let single = once("1").map_err(|e| e.to_string())?;
    ensure(
        a.status.success() && b.status.success(),
        "verify paper did not pass",
    )?;
    ensure(a.stdout == b.stdout, "consecutive outputs differ")?;
    ensure(a.stdout == single.stdout, "single-threaded output differs")?;
    Ok(format!(
        "{} identical bytes, also with one thread",
        a.stdout.len()
    ))
}

#[test]
fn acceptance_criteria() {
    let criteria: [Criterion; 11] = [
        ("kummer code", kummer),
        ("togliatti code", togliatti),
        ("griesmer dimensions", griesmer),
        ("betti numbers and dimension bounds", betti_and_dimension),
        ("sextic dimension certificate", sextic),
        ("chi closed forms", chi_regression),
        ("minimal weights", theorem_main),
        ("weight gap table", gap_table),
        ("known weights table", concluding_table),
        ("property suites", properties),
        ("determinism", determinism),
    ];
    let mut failures = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        match check() {
            Ok(detail) => println!("criterion {:>2} PASS {name}: {detail}", i + 1),
            Err(why) => {
                failures += 1;
                println!("criterion {:>2} FAIL {name}: {why}", i + 1);
            }
        }
    }
    assert_eq!(failures, 0, "{failures} acceptance criteria failed");
}
