//! Acceptance suite: one PASS/FAIL line per criterion. A criterion that is
//! known not to hold prints FAIL; the run succeeds when every status matches
//! its expected value.

use std::process::Command;
use std::sync::OnceLock;
use std::time::Instant;

use alt_hecke::chars::equiv_class_check;
use alt_hecke::combinat::Partition;
use alt_hecke::verify::{self, SuiteReport};
use num_complex::Complex64;
use rayon::prelude::*;

struct Outcome {
    pass: bool,
    detail: String,
}

fn from_reports(reports: &[SuiteReport]) -> Outcome {
    let pass = reports.iter().all(SuiteReport::passed);
    let mut parts = Vec::new();
    for r in reports {
        parts.push(format!("{} {}/{}", r.name, r.checks - r.failed, r.checks));
        parts.extend(r.failures.iter().take(2).cloned());
        parts.extend(r.notes.iter().cloned());
    }
    Outcome {
        pass,
        detail: parts.join("; "),
    }
}

fn unwrap<T>(r: alt_hecke::Result<T>) -> T {
    r.unwrap_or_else(|e| panic!("computation failed: {e}"))
}

fn tau_sweep() -> &'static (SuiteReport, SuiteReport) {
    static SWEEP: OnceLock<(SuiteReport, SuiteReport)> = OnceLock::new();
    SWEEP.get_or_init(|| unwrap(verify::tau_sweep(7)))
}

fn c1() -> Outcome {
    from_reports(&[tau_sweep().0.clone()])
}

fn c2() -> Outcome {
    from_reports(&[tau_sweep().1.clone()])
}

fn c3() -> Outcome {
    let rows = unwrap(verify::second_example());
    let v = verify::example_verdict(&rows);
    let doc = serde_json::to_string_pretty(&verify::example_document(&rows)).unwrap() + "\n";
    let golden = include_str!("golden/n9_examples.json");
    let mut detail = format!(
        "first example {}; recursion=oracle {}; u~w, v≁w in A_9 {}; A column {} ({} after doubling); \
         B column {} ({} after doubling, {} doubled with ± exchanged); golden {}",
        v.first_matches_reference,
        v.recursion_matches_oracle,
        v.conjugacy,
        v.a_literal,
        v.a_doubled,
        v.b_literal,
        v.b_doubled,
        v.b_doubled_swapped,
        doc == golden,
    );
    for r in &rows {
        use alt_hecke::scalars::pretty::render_tower;
        detail.push_str(&format!(
            "\n      {} {}: computed B± = [{}] | [{}]; published B± = [{}] | [{}]",
            r.name,
            r.class,
            render_tower(&r.b[0]),
            render_tower(&r.b[1]),
            render_tower(&r.ref_b[0]),
            render_tower(&r.ref_b[1]),
        ));
    }
    assert_eq!(
        doc, golden,
        "n = 9 example document drifted from the golden file"
    );
    Outcome {
        pass: v.passed(),
        detail,
    }
}

fn c4() -> Outcome {
    from_reports(&[unwrap(verify::recursion(5, 7))])
}

fn c5() -> Outcome {
    from_reports(&[unwrap(verify::classpoly(5))])
}

fn c6() -> Outcome {
    let mut report = unwrap(verify::basis(5));
    report.notes.clear();
    let tally = verify::b_action_tally(5);
    let literal = tally.gated == tally.total;
    let mut out = from_reports(&[report]);
    out.detail.push_str(&format!(
        "; literal product rule {}/{}, with B_rz unconditional {}/{}",
        tally.gated, tally.total, tally.unconditional, tally.total
    ));
    out.pass = out.pass && literal;
    out
}

fn c7() -> Outcome {
    from_reports(&[
        unwrap(verify::rep(6)),
        unwrap(verify::mitsuhashi(5)),
        unwrap(verify::super_decomposition(4)),
        unwrap(verify::relations(6)),
    ])
}

fn c8() -> Outcome {
    let mut out = from_reports(&[
        unwrap(verify::greene(200, 7)),
        unwrap(verify::cute(5)),
        unwrap(verify::equiv(7)),
    ]);
    let lam = Partition::new(vec![6, 3, 2, 1, 1, 1]).unwrap();
    let mut worked = true;
    for z in 1..=2 {
        let r = unwrap(equiv_class_check(&lam, &[7, 7], z));
        worked &= r.transposable == 384
            && r.bijective == r.classes()
            && r.matched + r.unlabelled == r.classes();
        out.detail.push_str(&format!(
            "; worked example z={z}: {} tableaux, {} classes, {} matched, {} non-semilinear",
            r.transposable,
            r.classes(),
            r.matched,
            r.unlabelled
        ));
    }
    out.pass &= worked;
    out
}

fn c9() -> Outcome {
    let mut out = from_reports(&[unwrap(verify::classical(5))]);
    let mut worst = 0.0f64;
    for n in 3..=5 {
        worst = worst.max(unwrap(verify::classical_deviation(n)));
    }
    let root = Complex64::new(0.0, 3f64.sqrt());
    let want = [
        (Complex64::new(-1.0, 0.0) + root) / 2.0,
        (Complex64::new(-1.0, 0.0) - root) / 2.0,
    ];
    let a3 = unwrap(verify::a3_split_values());
    let a3_ok = a3.iter().all(|pair| {
        let d = |a: Complex64, b: Complex64| (a - b).norm() < verify::CLASSICAL_TOLERANCE;
        (d(pair[0], want[0]) && d(pair[1], want[1])) || (d(pair[0], want[1]) && d(pair[1], want[0]))
    });
    out.pass &= worst < verify::CLASSICAL_TOLERANCE && a3_ok;
    let shown: Vec<String> = a3
        .iter()
        .map(|p| {
            p.iter()
                .map(|z| format!("{:.6}{:+.6}i", z.re, z.im))
                .collect::<Vec<_>>()
                .join(", ")
        })
        .collect();
    out.detail.push_str(&format!(
        "; max deviation n=3..5 {worst:.1e}; A_3 split rows on (3)± [{}]",
        shown.join("] [")
    ));
    out
}

fn c10() -> Outcome {
    let run = || {
        Command::new(env!("CARGO_BIN_EXE_alt-hecke"))
            .args(["table", "-n", "5", "--format", "json"])
            .env_remove("ALT_HECKE_CACHE")
            .output()
            .expect("binary runs")
    };
    let (a, b) = (run(), run());
    let golden = include_str!("golden/table_n5.json");
    let same = a.status.success() && a.stdout == b.stdout;
    let matches_golden = a.stdout == golden.as_bytes();
    Outcome {
        pass: same && matches_golden,
        detail: format!(
            "{} bytes, identical {same}, matches golden {matches_golden}",
            a.stdout.len()
        ),
    }
}

type Criterion = (usize, &'static str, fn() -> Outcome, bool);

const CRITERIA: [Criterion; 10] = [
    (1, "closed formula = γ-sum = trace oracle, n ≤ 7", c1, true),
    (2, "vanishing exactly off h(λ), n ≤ 7", c2, true),
    (3, "n = 9 examples for λ = (3,3,3)", c3, false),
    (
        4,
        "recursion = oracle on S_n, n ≤ 5; w⁻ negates w⁺, n ≤ 7",
        c4,
        true,
    ),
    (
        5,
        "class polynomial reconstruction and degree bounds, n ≤ 5",
        c5,
        true,
    ),
    (
        6,
        "B-basis triangularity, invariance and product rule, n ≤ 5",
        c6,
        false,
    ),
    (
        7,
        "representation, Mitsuhashi and super decomposition suites",
        c7,
        true,
    ),
    (
        8,
        "Greene, cute identity, per-class reduction n ≤ 7, worked example",
        c8,
        true,
    ),
    (
        9,
        "q = 1 table against the classical A_n table, n = 3, 4, 5",
        c9,
        true,
    ),
    (
        10,
        "table -n 5 --format json is byte-identical across runs",
        c10,
        true,
    ),
];

fn main() {
    let results: Vec<(Outcome, f64)> = CRITERIA
        .par_iter()
        .map(|(_, _, f, _)| {
            let t = Instant::now();
            let o = f();
            (o, t.elapsed().as_secs_f64())
        })
        .collect();
    let mut unexpected = Vec::new();
    for ((k, name, _, expected), (o, secs)) in CRITERIA.iter().zip(&results) {
        let status = if o.pass { "PASS" } else { "FAIL" };
        let tag = if o.pass == *expected {
            ""
        } else {
            " (UNEXPECTED)"
        };
        println!("criterion {k:>2}: {status}{tag} {name} [{secs:.1}s]");
        println!("      {}", o.detail);
        if o.pass != *expected {
            unexpected.push(*k);
        }
    }
    if !unexpected.is_empty() {
        eprintln!("criteria with unexpected status: {unexpected:?}");
        std::process::exit(1);
    }
}
