//! Acceptance run: one line per criterion, nonzero exit if any fails.

use std::time::Instant;

use qalt_core::alt::{b_relations, enumerate_even_basis, even_closure_failures, odd_words, verify_crossed_product_h};
use qalt_core::combinatorics::predicted_dimensions;
use qalt_core::hecke::relations::{t_relations, tprime_relations};
use qalt_core::report::{Status, SuiteReport};
use qalt_core::suites::{suite_alt_centralizer, suite_schur_weyl, suite_specialization, SuiteOptions};
use qalt_core::tensor::{pi_generators, rho_generators, GradedSpace};
use qalt_core::Result;

/// Outcome of one criterion: a verdict and a short note.
struct Verdict {
    ok: bool,
    note: String,
}

impl Verdict {
    fn new(ok: bool, note: impl Into<String>) -> Self {
        Self { ok, note: note.into() }
    }
}

fn failing(rep: &SuiteReport) -> String {
    rep.failures().map(|c| c.name.clone()).collect::<Vec<_>>().join("; ")
}

fn require(rep: &SuiteReport, names: &[&str]) -> std::result::Result<(), String> {
    for n in names {
        match rep.check(n) {
            Some(c) if c.status == Status::Pass => {}
            Some(c) => return Err(format!("{n}: expected {}, got {}", c.expected, c.actual)),
            None => return Err(format!("{n}: missing")),
        }
    }
    if !rep.passed() {
        return Err(format!("failing checks: {}", failing(rep)));
    }
    Ok(())
}

fn relations() -> Result<Verdict> {
    let mut total = 0;
    let mut bad = Vec::new();
    for r in 2..=6 {
        let mut all = t_relations(r)?;
        all.extend(tprime_relations(r)?);
        if r >= 3 {
            all.extend(b_relations(r)?);
        }
        total += all.len();
        bad.extend(all.into_iter().filter(|i| !i.holds).map(|i| format!("r={r} {} {}", i.relation, i.label)));
    }
    Ok(Verdict::new(
        bad.is_empty(),
        format!("{} of {total} relation instances hold for r <= 6 {}", total - bad.len(), bad.join(", ")),
    ))
}

fn counting() -> Result<Verdict> {
    let mut notes = Vec::new();
    let mut ok = true;
    for r in 2..=6 {
        let half = (1..=r).product::<usize>() / 2;
        let (e, o) = (enumerate_even_basis(r)?.len(), odd_words(r)?.len());
        ok &= e == half && o == half;
        notes.push(format!("r={r}: {e}/{o}"));
    }
    for r in 2..=5 {
        let bad = even_closure_failures(r)?;
        ok &= bad.is_empty();
        if !bad.is_empty() {
            notes.push(format!("closure fails at r={r} on {} pairs", bad.len()));
        }
    }
    notes.push("even closure checked on all pairs for r <= 5".into());
    Ok(Verdict::new(ok, notes.join(", ")))
}

fn crossed_product_h() -> Result<Verdict> {
    let mut ok = true;
    let mut notes = Vec::new();
    for r in 2..=4 {
        let checks = verify_crossed_product_h(r, 0)?;
        let bad: Vec<String> = checks.iter().filter(|c| !c.passed()).map(|c| c.name.clone()).collect();
        let law = checks
            .iter()
            .find(|c| c.name == "multiplication law u_-1 * u_-1")
            .map(|c| c.actual.clone())
            .unwrap_or_default();
        ok &= bad.is_empty();
        notes.push(format!("r={r}: {} checks, u_-1*u_-1 {law}{}", checks.len(), if bad.is_empty() { String::new() } else { format!(" FAILED {}", bad.join("; ")) }));
    }
    Ok(Verdict::new(ok, notes.join(", ")))
}

fn commutation() -> Result<Verdict> {
    let mut ok = true;
    let mut notes = Vec::new();
    for (m, n, r) in [(1, 1, 2), (1, 1, 3), (2, 1, 2), (1, 2, 2), (2, 2, 2), (2, 0, 3)] {
        let space = GradedSpace::new(m, n, r)?;
        let rho = rho_generators(&space)?;
        let mut pairs = 0;
        let mut bad = 0;
        for t in pi_generators(&space)? {
            for (_, x) in &rho {
                pairs += 1;
                if !t.commutator(x)?.is_zero() {
                    bad += 1;
                }
            }
        }
        ok &= bad == 0;
        notes.push(format!("({m},{n},{r}) {}/{pairs}", pairs - bad));
    }
    Ok(Verdict::new(ok, notes.join(", ")))
}

const DOUBLE_COMMUTANT: [&str; 3] = [
    "commutant of the Hecke image equals the superalgebra image",
    "commutant of the superalgebra image equals the Hecke image",
    "dimension of the Hecke image matches the hook formula",
];

const EQUAL_GRADING: [&str; 7] = [
    "phi tensor power squares to the sign",
    "phi anticommutes with every T'",
    "alternating commutant is the commutant plus its phi translate",
    "alternating commutant has twice the dimension of the commutant",
    "omega squares to the identity on the commutant",
    "crossed system: cocycle identity",
    "multiplication law u_-1 * u_-1",
];

const ALT_DOUBLE_COMMUTANT: &str = "commutant of the alternating commutant equals the alternating image";

fn verdict_from(results: Vec<(String, std::result::Result<(), String>)>) -> Verdict {
    let ok = results.iter().all(|(_, r)| r.is_ok());
    let note = results
        .iter()
        .map(|(label, r)| match r {
            Ok(()) => format!("{label} ok"),
            Err(e) => format!("{label} {e}"),
        })
        .collect::<Vec<_>>()
        .join(", ");
    Verdict::new(ok, note)
}

fn dim_of(rep: &SuiteReport, name: &str) -> String {
    rep.check(name).map(|c| c.actual.clone()).unwrap_or_else(|| "?".into())
}

fn main() {
    let exact = SuiteOptions::exact();
    let specialized = SuiteOptions::default();
    let mut certified: Vec<SuiteReport> = Vec::new();
    let mut verdicts: Vec<(usize, &str, Verdict, f64)> = Vec::new();
    let mut timed = |k: usize, title: &'static str, f: &mut dyn FnMut() -> Result<Verdict>| {
        let start = Instant::now();
        let v = f().unwrap_or_else(|e| Verdict::new(false, format!("error: {e}")));
        verdicts.push((k, title, v, start.elapsed().as_secs_f64()));
        let (k, title, v, secs) = verdicts.last().unwrap();
        println!(
            "criterion {k:>2} [{}] {title} ({secs:.1}s): {}",
            if v.ok { "PASS" } else { "FAIL" },
            v.note
        );
    };

    timed(1, "Hecke and alternating relations", &mut relations);
    timed(2, "basis counts and even closure", &mut counting);
    timed(3, "Hecke algebra as a crossed product", &mut crossed_product_h);
    timed(4, "Hecke and superalgebra actions commute", &mut commutation);

    timed(5, "double commutant and hook dimension", &mut || {
        let mut results = Vec::new();
        for (m, n, r) in [(1, 1, 2), (1, 1, 3), (2, 0, 3), (1, 0, 2)] {
            let rep = suite_schur_weyl(m, n, r, &exact)?;
            let label = format!("({m},{n},{r}) dimA={}", dim_of(&rep, DOUBLE_COMMUTANT[2]));
            results.push((label, require(&rep, &DOUBLE_COMMUTANT)));
            certified.push(rep);
        }
        Ok(verdict_from(results))
    });

    let mut alt_reports: Vec<SuiteReport> = Vec::new();
    timed(6, "equal-grading crossed product structure", &mut || {
        let mut results = Vec::new();
        for (m, n, r, opts, mode) in [
            (1, 1, 2, &exact, "exact"),
            (1, 1, 3, &exact, "exact"),
            (2, 2, 2, &specialized, "specialized"),
        ] {
            let rep = suite_alt_centralizer(m, n, r, opts)?;
            let label = format!(
                "({m},{n},{r}) {mode} dimD={}",
                dim_of(&rep, "alternating commutant has twice the dimension of the commutant")
            );
            results.push((label, require(&rep, &EQUAL_GRADING)));
            alt_reports.push(rep);
        }
        Ok(verdict_from(results))
    });

    timed(7, "alternating double commutant", &mut || {
        let results = alt_reports
            .iter()
            .filter(|rep| rep.parameters.get("m") == Some(&"1".to_string()))
            .map(|rep| {
                let label = format!("(1,1,{})", rep.parameters["r"]);
                (label, require(rep, &[ALT_DOUBLE_COMMUTANT]))
            })
            .collect::<Vec<_>>();
        Ok(verdict_from(results))
    });
    certified.append(&mut alt_reports);

    timed(8, "general-case dimensions for m=2 n=0 r=3", &mut || {
        let d = predicted_dimensions(2, 0, 3)?;
        let formula = (d.dim_a, d.dim_c, d.dim_a0, d.dim_c0, d.dim_a1, d.dim_c1) == (5, 3, 4, 2, 1, 1);
        let rep = suite_alt_centralizer(2, 0, 3, &exact)?;
        let matrices = require(
            &rep,
            &[
                "dimension of the alternating image matches the hook formula",
                "dimension of the Hecke image matches the hook formula",
                "predicted dimensions satisfy the pairing identities",
                ALT_DOUBLE_COMMUTANT,
            ],
        );
        let note = format!(
            "formula dimA={} dimC={} dimA0={} dimC0={} dimA1={} dimC1={}; matrix dimA={} dimC={}",
            d.dim_a,
            d.dim_c,
            d.dim_a0,
            d.dim_c0,
            d.dim_a1,
            d.dim_c1,
            dim_of(&rep, "dimension of the Hecke image matches the hook formula"),
            dim_of(&rep, "dimension of the alternating image matches the hook formula"),
        );
        let ok = formula && matrices.is_ok();
        certified.push(rep);
        Ok(Verdict::new(ok, match matrices {
            Ok(()) => note,
            Err(e) => format!("{note}; {e}"),
        }))
    });

    timed(9, "Hecke image equals alternating image for m=2 n=0 r=5", &mut || {
        let rep = suite_alt_centralizer(2, 0, 5, &exact)?;
        let res = require(
            &rep,
            &[
                "Hecke image equals the alternating image",
                "dimension of the alternating image matches the hook formula",
                "rank certificate of the alternating image",
            ],
        );
        let note = format!(
            "dimC={} at q={}",
            dim_of(&rep, "dimension of the alternating image matches the hook formula"),
            rep.parameters.get("points").cloned().unwrap_or_default()
        );
        certified.push(rep);
        Ok(verdict_from(vec![(note, res)]))
    });

    timed(10, "classical limit and rank certificates", &mut || {
        let rep = suite_specialization(1, 1, 3, &exact)?;
        let classical = require(&rep, &["T generators at q=1 are signed permutations"]);
        certified.push(rep);
        let mut certs = 0;
        let mut bad = Vec::new();
        for rep in &certified {
            let points: Vec<&str> = rep.parameters.get("points").map(|p| p.split(',').collect()).unwrap_or_default();
            let distinct = points.len() == 2 && points[0] != points[1];
            for c in rep.checks.iter().filter(|c| c.name.starts_with("rank certificate")) {
                certs += 1;
                if c.status != Status::Pass || !distinct {
                    bad.push(format!("{} {:?}: {}", rep.suite, rep.parameters, c.name));
                }
            }
        }
        let ok = classical.is_ok() && bad.is_empty() && certs > 0;
        Ok(Verdict::new(
            ok,
            format!(
                "q=1 signed permutations {}; {} of {certs} rank certificates agree at two points {}",
                if classical.is_ok() { "match" } else { "differ" },
                certs - bad.len(),
                bad.join(", ")
            ),
        ))
    });

    let failed: Vec<usize> = verdicts.iter().filter(|(_, _, v, _)| !v.ok).map(|(k, ..)| *k).collect();
    println!(
        "acceptance: {} of {} criteria pass",
        verdicts.len() - failed.len(),
        verdicts.len()
    );
    if !failed.is_empty() {
        std::process::exit(1);
    }
}
