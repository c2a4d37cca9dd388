//! Acceptance suite: one PASS/FAIL line per criterion, non-zero exit if any
//! criterion fails. Runs without the libtest harness so the lines always
//! print.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use takiff::report_to_json;
use takiff_core::catalog;
use takiff_core::family;
use takiff_core::lie;
use takiff_core::nilfiber::{self, LevelVerdict};
use takiff_core::report::Status;
use takiff_core::takiff as tk;
use takiff_core::verify::{self, VerifyOptions};

const SEED: u64 = 0;

type ReportRun = Box<dyn Fn() -> String>;

/// Name, check, and time limit in seconds.
type Criterion = (&'static str, fn() -> Outcome, Option<u64>);

struct Outcome {
    ok: bool,
    detail: String,
}

fn pass(detail: impl Into<String>) -> Outcome {
    Outcome {
        ok: true,
        detail: detail.into(),
    }
}

fn fail(detail: impl Into<String>) -> Outcome {
    Outcome {
        ok: false,
        detail: detail.into(),
    }
}

fn within(outcome: Outcome, elapsed: Duration, limit: Duration) -> Outcome {
    if outcome.ok && elapsed > limit {
        fail(format!(
            "{} but took {:.1?} (limit {:?})",
            outcome.detail, elapsed, limit
        ))
    } else {
        Outcome {
            detail: format!("{} in {:.1?}", outcome.detail, elapsed),
            ..outcome
        }
    }
}

const INDEX_PAIRS: [&str; 5] = ["sl2", "sl3", "heis1", "heis2", "slnV2"];

/// Families for criteria 2 and 3: (entry, largest m).
const FAMILIES: [(&str, usize); 5] = [
    ("sl2", 3),
    ("sl3", 1),
    ("heis1", 3),
    ("heis2", 3),
    ("slnV2", 2),
];

fn index_formula() -> Outcome {
    let mut pairs = 0;
    for name in INDEX_PAIRS {
        let e = catalog::load(name).unwrap();
        let ind = lie::index(&e.algebra, 5, SEED);
        for m in 1..=3 {
            let lm = tk::takiff(&e.algebra, m).unwrap();
            let ind_m = lie::index(&lm, 5, SEED);
            if ind_m != (m + 1) * ind {
                return fail(format!(
                    "{name} m={m}: ind = {ind_m}, expected {}",
                    (m + 1) * ind
                ));
            }
            pairs += 1;
        }
    }
    pass(format!("{pairs}/15 pairs exact"))
}

fn symbolic_invariance() -> Outcome {
    let mut certified = 0;
    for (name, max_m) in FAMILIES {
        let e = catalog::load(name).unwrap();
        for m in 1..=max_m {
            let lm = tk::takiff(&e.algebra, m).unwrap();
            let fam = family::build_family(&lm, &e.invariants).unwrap();
            for (i, j, f) in fam.entries() {
                if let Some((b, bracket)) = lie::invariance_witness(&lm, f).unwrap() {
                    return fail(format!(
                        "{name} m={m}: {{F_{}^{j}, {}}} = {bracket}",
                        i + 1,
                        lm.basis()[b]
                    ));
                }
                certified += 1;
            }
        }
    }
    pass(format!(
        "{certified} polynomials Poisson-commute with every basis element"
    ))
}

fn triangularity_and_degrees() -> Outcome {
    let mut identities = Vec::new();
    for (name, max_m) in FAMILIES {
        let e = catalog::load(name).unwrap();
        let b = lie::magic_number(&e.algebra, 5, SEED).unwrap() as u32;
        for m in 1..=max_m {
            let lm = tk::takiff(&e.algebra, m).unwrap();
            let fam = family::build_family(&lm, &e.invariants).unwrap();
            if let Some((i, j, v)) = family::triangularity_violations(&lm, &fam).unwrap().first() {
                return fail(format!(
                    "{name} m={m}: F_{}^{j} depends on {}",
                    i + 1,
                    lm.basis()[*v]
                ));
            }
            if let Some((i, j, d)) = family::degree_violations(&fam).first() {
                return fail(format!("{name} m={m}: deg F_{}^{j} = {d:?}", i + 1));
            }
            if e.invariants.degree_sum() == b {
                let expected = (m as u32 + 1) * b;
                if fam.degree_sum() != expected {
                    return fail(format!(
                        "{name} m={m}: degree sum {} != {expected}",
                        fam.degree_sum()
                    ));
                }
                identities.push(format!("{name}<{m}>"));
            }
        }
    }
    pass(format!(
        "grades and degrees exact; degree-sum identity on {}",
        identities.join(" ")
    ))
}

fn transfer(kind: &str) -> Outcome {
    let options = VerifyOptions::with_seed(SEED);
    let mut pairs = 0;
    for name in INDEX_PAIRS {
        let e = catalog::load(name).unwrap();
        for m in 1..=3 {
            let check = match kind {
                "omega" => verify::omega_transfer(&e.algebra, &e.invariants, m, &options),
                _ => verify::regularity_transfer(&e.algebra, m, &options),
            }
            .unwrap();
            if check.status != Status::Pass {
                return fail(format!(
                    "{name} m={m}: agreements {}",
                    check.witness_value("agreements").unwrap_or("?")
                ));
            }
            pairs += 1;
        }
    }
    pass(format!("100/100 agreement on each of {pairs} pairs"))
}

fn codim2_refutations() -> Outcome {
    let expected = [("slnV2", "2 < 4"), ("heis1", "1 < 2"), ("heis2", "1 < 3")];
    let mut seen = Vec::new();
    for (name, cmp) in expected {
        let e = catalog::load(name).unwrap();
        let r = verify::wonderful_diagnostic(&e.algebra, &e.invariants, 5, SEED);
        let note = r.check("degree-sum").and_then(|c| c.witness_value("note"));
        let want = format!("codim-2 refuted: {cmp}");
        if note != Some(want.as_str()) {
            return fail(format!("{name}: note {note:?}, expected {want:?}"));
        }
        seen.push(format!("{name} {cmp}"));
    }
    pass(seen.join(", "))
}

fn n1_run() -> (takiff_core::Report, nilfiber::N1Tally) {
    let e = catalog::load("sl2").unwrap();
    let cone = e
        .parametrizations
        .iter()
        .find(|p| p.name == "sl2.nilcone.regular")
        .unwrap();
    nilfiber::check_n1_characterization(&e.algebra, &e.invariants, cone, 50, SEED).unwrap()
}

fn n1_characterization() -> Outcome {
    let (_, tally) = n1_run();
    let detail = format!(
        "{}/{} agree ({} on N<1>)",
        tally.agreements, tally.samples, tally.members
    );
    if tally.samples == 50 && tally.agreements == 50 {
        pass(detail)
    } else {
        fail(detail)
    }
}

fn chain() -> Outcome {
    let e = catalog::load("sl2").unwrap();
    let (_, levels) = nilfiber::run_chain(&e, 3, SEED).unwrap();
    let l1 = &levels[0];
    let regular = l1
        .strata
        .iter()
        .find(|s| s.name == "sl2.nilcone.regular")
        .unwrap();
    if l1.verdict != LevelVerdict::NoExcess || (regular.total_dim, regular.target_dim) != (4, 4) {
        return fail(format!(
            "level 1: {:?}, {} vs {}",
            l1.verdict, regular.total_dim, regular.target_dim
        ));
    }
    let l2 = &levels[1];
    let at_8: Vec<_> = l2
        .strata
        .iter()
        .filter(|s| s.total_dim == 8 && s.target_dim == 8)
        .collect();
    let avoiding = at_8.iter().filter(|s| s.avoids_omega()).count();
    if l2.verdict != LevelVerdict::Reducible || at_8.len() != 2 || avoiding != 1 {
        return fail(format!(
            "level 2: {:?}, {} witnesses at 8, {avoiding} avoiding omega",
            l2.verdict,
            at_8.len()
        ));
    }
    let l3 = &levels[2];
    let bad = l3
        .strata
        .iter()
        .find(|s| s.name == "sl2<1,1>.null.over-D")
        .unwrap();
    if l3.verdict != LevelVerdict::Excess || (bad.total_dim, bad.target_dim) != (17, 16) {
        return fail(format!(
            "level 3: {:?}, {} vs {}",
            l3.verdict, bad.total_dim, bad.target_dim
        ));
    }
    pass("level 1 4 = 4; level 2 two witnesses at 8, one avoiding omega; level 3 17 > 16")
}

fn lemma_bounds() -> Outcome {
    let (_, tally) = n1_run();
    let detail = format!(
        "{} points on N<1>, {} violations",
        tally.lemma_checked, tally.lemma_violations
    );
    if tally.lemma_checked > 0 && tally.lemma_violations == 0 {
        pass(detail)
    } else {
        fail(detail)
    }
}

fn determinism() -> Outcome {
    let runs: [(&str, ReportRun); 4] = [
        (
            "verify sl2 m=1",
            Box::new(|| {
                let e = catalog::load("sl2").unwrap();
                report_to_json(&verify::verify_main_theorem(
                    &e.algebra,
                    &e.invariants,
                    1,
                    &VerifyOptions::default(),
                ))
            }),
        ),
        (
            "verify heis2 m=3",
            Box::new(|| {
                let e = catalog::load("heis2").unwrap();
                report_to_json(&verify::verify_main_theorem(
                    &e.algebra,
                    &e.invariants,
                    3,
                    &VerifyOptions::default(),
                ))
            }),
        ),
        (
            "verify sl2 multi=[1,1]",
            Box::new(|| {
                let e = catalog::load("sl2").unwrap();
                report_to_json(&verify::verify_multi_current(
                    &e.algebra,
                    &e.invariants,
                    &[1, 1],
                    &VerifyOptions::default(),
                ))
            }),
        ),
        (
            "nilfiber sl2 levels=3",
            Box::new(|| {
                let e = catalog::load("sl2").unwrap();
                report_to_json(&nilfiber::run_nilfiber(&e, 3, SEED).unwrap().0)
            }),
        ),
    ];
    for (label, run) in &runs {
        if run() != run() {
            return fail(format!("{label}: reports differ between runs"));
        }
    }
    pass(format!(
        "{} reports byte-identical on repetition",
        runs.len()
    ))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 10] = [
        ("1 index formula", index_formula, Some(10)),
        ("2 symbolic invariance", symbolic_invariance, Some(60)),
        (
            "3 triangularity and degrees",
            triangularity_and_degrees,
            None,
        ),
        ("4 omega transfer", || transfer("omega"), None),
        ("5 regularity transfer", || transfer("regularity"), None),
        ("6 codim-2 refutations", codim2_refutations, None),
        ("7 N<1> characterization", n1_characterization, None),
        ("8 sl2 three-level null-fibre chain", chain, Some(120)),
        ("9 stratum containment bounds", lemma_bounds, None),
        ("10 determinism", determinism, None),
    ];
    let mut failures = 0;
    for (name, run, limit) in criteria {
        let start = Instant::now();
        let outcome = run();
        let elapsed = start.elapsed();
        let outcome = match limit {
            Some(secs) => within(outcome, elapsed, Duration::from_secs(secs)),
            None => Outcome {
                detail: format!("{} in {:.1?}", outcome.detail, elapsed),
                ..outcome
            },
        };
        if !outcome.ok {
            failures += 1;
        }
        println!(
            "criterion {name}: {}: {}",
            if outcome.ok { "PASS" } else { "FAIL" },
            outcome.detail
        );
    }
    println!("acceptance: {}/10 criteria passed", 10 - failures);
    if failures == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
