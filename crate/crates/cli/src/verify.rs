//! The `verify paper` suite: every tabulated value the library reproduces.

use std::collections::BTreeMap;

use evenset_core::certificate::Rule;
use evenset_core::engine::{self, derive_all};
use evenset_core::formulas;
use evenset_core::gf2::matrix_format::{format_generator_matrix, parse_generator_matrix};
use evenset_core::gf2::{griesmer_max_dim, griesmer_min_length};
use evenset_core::surface::{
    b2_resolution, cayley_code, dim_lower_bound, kummer_code, max_nodes, sextic_dim_certificate,
    simplex_code, strict_weight_modulus, togliatti_code, weak_weight_residue,
};
use evenset_core::{
    CheckReport, Conclusion, EvenSetParity, LinearCode, NodalSurface, ParityClass, Value,
    WeightDistribution,
};
use serde_json::json;

use crate::{Report, Status};

pub const KUMMER_DATA: &str = include_str!("../data/kummer.txt");
pub const TOGLIATTI_DATA: &str = include_str!("../data/togliatti.txt");

/// The two example codes under test; replaceable for mutation testing.
#[derive(Clone, Debug)]
pub struct ExampleCodes {
    pub kummer: LinearCode,
    pub togliatti: LinearCode,
}

impl ExampleCodes {
    pub fn builtin() -> Self {
        Self {
            kummer: kummer_code(),
            togliatti: togliatti_code(),
        }
    }
}

fn dist(pairs: &[(usize, u64)]) -> BTreeMap<usize, u64> {
    pairs.iter().copied().collect()
}

fn distribution(code: &LinearCode) -> Option<WeightDistribution> {
    code.weight_distribution().ok()
}

fn round_trip(data: &str) -> Option<LinearCode> {
    let rows = parse_generator_matrix(data).ok()?;
    let again = parse_generator_matrix(&format_generator_matrix(&rows)).ok()?;
    (again == rows)
        .then(|| LinearCode::from_rows(rows).ok())
        .flatten()
}

fn code_checks(
    r: &mut CheckReport,
    name: &str,
    code: &LinearCode,
    n: usize,
    k: usize,
    d: usize,
    wd: &[(usize, u64)],
) {
    let got = distribution(code);
    r.expect_eq(
        format!("{name} length and dimension"),
        (n, k),
        (code.length(), code.dimension()),
    );
    r.expect_eq(
        format!("{name} weight distribution"),
        Some(dist(wd)),
        got.as_ref().map(|w| w.counts.clone()),
    );
    r.expect_eq(
        format!("{name} minimum distance"),
        Some(d),
        got.as_ref().and_then(|w| w.min_nonzero_weight()),
    );
    r.expect_eq(
        format!("{name} dual dimension"),
        n - k,
        code.dual().dimension(),
    );
}

fn example_codes(codes: &ExampleCodes) -> CheckReport {
    let mut r = CheckReport::new("example-codes");
    let k = &codes.kummer;
    code_checks(&mut r, "kummer", k, 16, 5, 8, &[(0, 1), (8, 30), (16, 1)]);
    r.expect_eq(
        "kummer parity",
        Ok(ParityClass::DoublyEven),
        k.classify_parity(),
    );
    r.expect_eq("kummer self-orthogonal", true, k.is_self_orthogonal());
    r.expect_eq(
        "kummer data file matches",
        true,
        round_trip(KUMMER_DATA).as_ref() == Some(k),
    );
    let words: Vec<_> = k
        .codewords()
        .map(|ws| ws.filter(|w| w.weight() == 8).collect())
        .unwrap_or_default();
    let doubly_even_images = words
        .iter()
        .filter(|w| {
            k.project_onto_support(w)
                .ok()
                .and_then(|p| distribution(&p.image))
                .is_some_and(|wd| wd.weights().all(|x| x % 4 == 0))
        })
        .count();
    r.expect_eq(
        "kummer projections onto weight-8 words with doubly even image",
        (30, 30),
        (words.len(), doubly_even_images),
    );

    let t = &codes.togliatti;
    code_checks(&mut r, "togliatti", t, 31, 5, 16, &[(0, 1), (16, 31)]);
    r.expect_eq(
        "togliatti parity",
        Ok(ParityClass::DoublyEven),
        t.classify_parity(),
    );
    r.expect_eq("togliatti self-orthogonal", true, t.is_self_orthogonal());
    r.expect_eq(
        "togliatti data file matches",
        true,
        round_trip(TOGLIATTI_DATA).as_ref() == Some(t),
    );
    r.expect_eq(
        "togliatti distribution matches simplex construction",
        distribution(&simplex_code(5)).map(|w| w.counts),
        distribution(t).map(|w| w.counts),
    );

    let c = cayley_code();
    code_checks(&mut r, "cayley", &c, 4, 1, 4, &[(0, 1), (4, 1)]);
    r
}

fn griesmer() -> CheckReport {
    let mut r = CheckReport::new("griesmer");
    r.expect_eq("max dimension n=16 d=8", Ok(5), griesmer_max_dim(16, 8));
    r.expect_eq("max dimension n=31 d=16", Ok(5), griesmer_max_dim(31, 16));
    r.expect_eq("min length k=5 d=16", 31, griesmer_min_length(5, 16));
    r.expect_eq("min length k=5 d=8", 16, griesmer_min_length(5, 8));
    r.expect_eq("min length k=12 d=32", 69, griesmer_min_length(12, 32));
    r
}

fn surfaces() -> CheckReport {
    let mut r = CheckReport::new("surfaces");
    for (s, b2) in [(3, 7), (4, 22), (5, 53), (6, 106)] {
        r.expect_eq(format!("b2 degree {s}"), b2, b2_resolution(s));
    }
    let table: Vec<i64> = (1..=6).map(|d| max_nodes(d).unwrap_or(-1)).collect();
    r.expect_eq(
        "maximal node counts degrees 1..6",
        vec![0, 1, 4, 16, 31, 65],
        table,
    );
    for (s, mu, bound) in [(3, 4, 1), (4, 16, 5), (5, 31, 5), (6, 65, 12)] {
        let got = NodalSurface::new(s, mu)
            .ok()
            .and_then(|x| dim_lower_bound(&x, EvenSetParity::Strict).ok());
        r.expect_eq(
            format!("strict dimension bound s={s} nodes={mu}"),
            Some(bound),
            got,
        );
    }
    for (s, m) in [(5, 4), (6, 8), (7, 4)] {
        r.expect_eq(
            format!("strict weight modulus s={s}"),
            m,
            strict_weight_modulus(s),
        );
    }
    for (s, res) in [(4, 2), (6, 3), (8, 0)] {
        r.expect_eq(
            format!("weak weight residue s={s}"),
            Ok(res),
            weak_weight_residue(s),
        );
    }
    r
}

fn formula_values() -> CheckReport {
    use formulas::*;
    let mut r = CheckReport::new("formulas");
    for (s, v, w, x) in [
        (4, 1, 6, 1),
        (8, 3, 28, 14),
        (10, 6, 80, 20),
        (6, 1, 15, 5),
        (4, 2, 8, 2),
    ] {
        r.expect_eq(
            format!("chi({s},{v},{w})"),
            ChiValue::from_integer(x),
            chi(s, v, w),
        );
    }
    for (s, v, d) in [(8, 5, 3), (6, 1, 3), (10, 6, 6)] {
        r.expect_eq(format!("dual twist s={s} v={v}"), d, serre_dual_twist(s, v));
    }
    for (s, w) in [(4, 6), (6, 15), (8, 28)] {
        r.expect_eq(format!("plane weight s={s}"), w, plane_contact_weight(s));
    }
    for (s, w) in [(5, 16), (6, 24), (7, 36)] {
        r.expect_eq(
            format!("quadric weight s={s}"),
            w,
            quadric_contact_weight(s),
        );
    }
    for (s, v, b) in [(6, 3, 27), (7, 4, 42), (8, 5, 60)] {
        r.expect_eq(
            format!("instability bound s={s} v={v}"),
            Ok(b),
            unstable_lower_bound(s, v),
        );
    }
    for (s, v, b) in [(8, 5, 60), (7, 4, 42), (10, 6, 120)] {
        r.expect_eq(
            format!("reduced contact bound s={s} v={v}"),
            Ok(b),
            reduced_contact_lower_bound(s, v),
        );
    }
    for (s, v, beta, c) in [(4, 1, 0, 6), (5, 2, 1, 16), (6, 3, 0, 27)] {
        r.expect_eq(
            format!("nodal contact count s={s} v={v} beta={beta}"),
            Ok(c),
            contact_count_nodal(s, v, beta),
        );
    }
    for (s, e) in [(6, 24), (7, 36), (10, 80)] {
        r.expect_eq(format!("strict minimum s={s}"), Ok(e), e_min(s));
    }
    for (s, e) in [(2, 1), (4, 6), (8, 28)] {
        r.expect_eq(format!("weak minimum s={s}"), Ok(e), e_bar_min(s));
    }
    r
}

fn sextic() -> CheckReport {
    let mut r = CheckReport::new("sextic-dimension");
    let cert = sextic_dim_certificate();
    let valid = cert.validate();
    r.push(
        "certificate validates",
        valid.is_ok(),
        match &valid {
            Ok(s) => format!("{} verified, {} cited", s.verified, s.cited),
            Err(e) => e.to_string(),
        },
    );
    let output = |rule| {
        cert.steps_with_rule(rule)
            .next()
            .map(|s| s.asserted_output.clone())
    };
    r.expect_eq(
        "dimension lower bound",
        Some(Value::Int(12)),
        output(Rule::BettiDimension),
    );
    r.expect_eq(
        "griesmer length k=12 d=32",
        Some(Value::Int(69)),
        output(Rule::GriesmerLength),
    );
    r.expect_eq(
        "69 exceeds 65",
        Some(Value::Bool(true)),
        output(Rule::Comparison),
    );
    r.expect_eq(
        "concluded dimension",
        Conclusion::Dimension { value: 12 },
        cert.conclusion.clone(),
    );
    r
}

/// Runs every section against the given example codes.
pub fn verify_paper_with(codes: &ExampleCodes) -> Report {
    let sections = vec![
        example_codes(codes),
        griesmer(),
        surfaces(),
        formula_values(),
        engine::verify_chi_closed_forms(),
        engine::verify_example_cohomology_tables(),
        engine::verify_theorem_main(),
        engine::verify_corollary_gaps(),
        engine::verify_concluding_table(),
        sextic(),
    ];
    let total: usize = sections.iter().map(|s| s.checks.len()).sum();
    let failed: usize = sections.iter().map(|s| s.failures().count()).sum();
    let notes: Vec<String> = derive_all()
        .iter()
        .flat_map(|c| {
            c.steps_with_rule(Rule::DeviationNote)
                .map(move |s| format!("{} s={}: {}", c.parity, c.degree, s.statement))
        })
        .collect();
    let status = if failed == 0 {
        Status::Pass
    } else {
        Status::Fail
    };
    Report::new(
        "verify paper",
        status,
        json!({ "checks": total, "failed": failed, "sections": sections, "notes": notes }),
    )
    .expect("verification payload serializes")
}

pub fn verify_paper() -> Report {
    verify_paper_with(&ExampleCodes::builtin())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn builtin_codes_pass() {
        let r = verify_paper();
        assert_eq!(r.status, Status::Pass, "{}", crate::render::text(&r));
    }

    #[test]
    fn data_files_match_constructors() {
        assert_eq!(round_trip(KUMMER_DATA), Some(kummer_code()));
        assert_eq!(round_trip(TOGLIATTI_DATA), Some(togliatti_code()));
    }
}
