//! Acceptance criteria, one line each. Exact integer comparisons throughout.

mod common;

use std::process::ExitCode;
use std::time::Instant;

use quotient::automata::equivalent;
use quotient::ideals::{closure, min_generator, IdealType};
use quotient::verify::{
    bound_value, check_tightness, fuzz_upper_bounds, reproduce_tables, BoundParams, BoundTag,
    CheckResult, FuzzOp, Verdict,
};
use quotient::witnesses::{make_witness, Role, SearchBudget, WitnessParams, WitnessTag};

use common::checks::{derivative_closed_forms, membership_agreement};

type Outcome = Result<String, String>;

const FUZZ_SEED: u64 = 2010;
const REGEX_SEED: u64 = 77;

fn budget() -> SearchBudget {
    SearchBudget::default()
}

fn failures(r: &CheckResult) -> String {
    let bad: Vec<String> = r
        .entries
        .iter()
        .filter(|e| !matches!(e.verdict, Verdict::TightMet | Verdict::Skipped))
        .map(|e| {
            format!(
                "{} {} predicted {} computed {:?} {}",
                e.tag,
                e.params,
                e.predicted,
                e.computed,
                e.verdict.name()
            )
        })
        .collect();
    format!("{}: {}", r.label, bad.join("; "))
}

/// Runs `check_tightness` and requires a pass; returns (entries, skipped).
fn tight(tag: WitnessTag, n: std::ops::RangeInclusive<usize>, m: Option<std::ops::RangeInclusive<usize>>) -> Result<(usize, usize), String> {
    let r = check_tightness(tag, n, m, &budget()).map_err(|e| e.to_string())?;
    if !r.pass {
        return Err(failures(&r));
    }
    let skipped = r.entries.iter().filter(|e| e.verdict == Verdict::Skipped).count();
    Ok((r.entries.len(), skipped))
}

fn computed(tag: WitnessTag, n: usize) -> Result<u64, String> {
    let r = check_tightness(tag, n..=n, None, &budget()).map_err(|e| e.to_string())?;
    r.entries
        .first()
        .and_then(|e| e.computed)
        .ok_or_else(|| format!("{tag} n={n}: no value"))
}

fn closure_tightness() -> Outcome {
    use WitnessTag::*;
    let mut total = 0;
    for tag in [T1, T7, T2, T3, T4, T5, T6, T8, T9, T10] {
        let (entries, skipped) = tight(tag, 2..=8, None)?;
        if skipped > 0 {
            return Err(format!("{tag}: {skipped} points without a witness"));
        }
        total += entries;
    }
    for (tag, expected) in [(T2, 16), (T3, 13), (T4, 9)] {
        let got = computed(tag, 5)?;
        if got != expected {
            return Err(format!("{tag} n=5: {got}, expected {expected}"));
        }
    }
    Ok(format!("{total} points tight"))
}

fn generator_extraction() -> Outcome {
    use WitnessTag::*;
    let (a, _) = tight(T11, 1..=8, None)?;
    let (b, _) = tight(T13, 1..=8, None)?;
    let (c, _) = tight(T12, 3..=8, None)?;
    let got = computed(T12, 5)?;
    if got != 12 {
        return Err(format!("T12 n=5: {got}, expected 12"));
    }
    let cases = (1..=8)
        .map(|n| (T11, n, IdealType::Right))
        .chain((1..=8).flat_map(|n| {
            [(T13, n, IdealType::TwoSided), (T13, n, IdealType::AllSided)]
        }))
        .chain((3..=8).map(|n| (T12, n, IdealType::Left)));
    let mut round_trips = 0;
    for (tag, n, t) in cases {
        let w = make_witness(tag, WitnessParams::n(n)).map_err(|e| e.to_string())?;
        let l = w.get(Role::L);
        let g = min_generator(l, t).map_err(|e| e.to_string())?.generator;
        let back = closure(&g, t).map_err(|e| e.to_string())?;
        if !equivalent(&back, l).expect("same alphabet") {
            return Err(format!("{tag} n={n}: closure of the generator differs from L"));
        }
        round_trips += 1;
    }
    Ok(format!("{} points tight, {round_trips} round trips", a + b + c))
}

fn operations() -> Outcome {
    use WitnessTag::*;
    let mut total = 0;
    let mut skipped = 0;
    for (tag, n, m) in [
        (T14, 2..=5, Some(2..=5)),
        (T14LeftUnion, 2..=5, Some(2..=5)),
        (T15, 3..=6, Some(3..=6)),
    ] {
        let (e, s) = tight(tag, n, m)?;
        total += e;
        skipped += s;
    }
    let star = check_tightness(T16, 2..=7, None, &budget()).map_err(|e| e.to_string())?;
    if !star.pass {
        return Err(failures(&star));
    }
    let searched: Vec<String> = star
        .entries
        .iter()
        .filter(|e| e.note.contains("searched"))
        .map(|e| format!("T16 {}: {}", e.params, e.note))
        .collect();
    if !searched.is_empty() {
        return Err(format!("printed star witness short of the bound: {}", searched.join("; ")));
    }
    total += star.entries.len();
    for tag in [T17, T18, T19, T20] {
        let (e, s) = tight(tag, 2..=7, None)?;
        total += e;
        skipped += s;
    }
    Ok(format!("{total} points, {skipped} skipped at search budget"))
}

fn unary_closed_forms() -> Outcome {
    let (entries, skipped) = tight(WitnessTag::P3, 1..=8, Some(1..=8))?;
    if skipped > 0 {
        return Err(format!("{skipped} unary points skipped"));
    }
    Ok(format!("{entries} points tight"))
}

fn upper_bound_fuzz() -> Outcome {
    let mut cells = 0;
    let mut entries = 0;
    let mut violations = Vec::new();
    for (class, op) in FuzzOp::cells() {
        let r = fuzz_upper_bounds(class, op, 1_000, 6, FUZZ_SEED).map_err(|e| e.to_string())?;
        cells += 1;
        entries += r.entries.len();
        if op == FuzzOp::Remark1 {
            if let Some(e) = r.entries.iter().find(|e| e.computed != Some(0)) {
                violations.push(format!("Remark1 {} failures {:?}", e.params, e.computed));
            }
        }
        for e in r.entries.iter().filter(|e| e.verdict == Verdict::Violation) {
            let class = class.map_or("regular".to_string(), |t| t.to_string());
            violations.push(format!(
                "{class} {op}: {} {} computed {:?} > {}",
                e.tag, e.params, e.computed, e.predicted
            ));
        }
    }
    if violations.is_empty() {
        Ok(format!("{cells} cells, {entries} bound points, no violation"))
    } else {
        Err(format!(
            "{} VIOLATION points over {cells} cells: {}",
            violations.len(),
            violations.join("; ")
        ))
    }
}

fn oracle_equivalence() -> Outcome {
    let a = membership_agreement(500, 5, 8, REGEX_SEED)?;
    let b = derivative_closed_forms(60, 4, REGEX_SEED)?;
    Ok(format!("{a}; {b}"))
}

fn table_reproduction() -> Outcome {
    let report = reproduce_tables(6, 5, &budget());
    if !report.pass() {
        let bad: Vec<String> = report
            .entries
            .iter()
            .filter(|e| !matches!(e.verdict, Verdict::TightMet | Verdict::WithinBound))
            .map(|e| format!("{:?} {} {}", e.cell, e.params, e.verdict.name()))
            .collect();
        return Err(bad.join("; "));
    }
    let star: Vec<_> = report
        .entries
        .iter()
        .filter(|e| e.cell.as_deref() == Some("table2/unary/K*"))
        .collect();
    let flagged: Vec<_> = star
        .iter()
        .filter(|e| e.verdict == Verdict::MismatchVsPaper)
        .collect();
    for e in &flagged {
        let exact = bound_value(BoundTag::UnaryStar, BoundParams::n(e.params.n)).ok();
        if e.reference != exact || e.computed != exact || e.computed == Some(e.predicted) {
            return Err(format!("unary K* at {} lacks both values: {e:?}", e.params));
        }
    }
    let expected: Vec<usize> = (3..=6).collect();
    let ns: Vec<usize> = flagged.iter().map(|e| e.params.n).collect();
    if ns != expected {
        return Err(format!("unary K* flagged at n={ns:?}, expected {expected:?}"));
    }
    Ok(format!(
        "{} entries: {} tight-met, {} within-bound, {} mismatch-vs-paper at unary K*",
        report.entries.len(),
        report.count(Verdict::TightMet),
        report.count(Verdict::WithinBound),
        flagged.len()
    ))
}

fn main() -> ExitCode {
    let criteria: [(&str, fn() -> Outcome); 7] = [
        ("closure tightness", closure_tightness),
        ("generator extraction", generator_extraction),
        ("operations", operations),
        ("unary closed forms", unary_closed_forms),
        ("upper-bound fuzz", upper_bound_fuzz),
        ("oracle equivalence", oracle_equivalence),
        ("table reproduction", table_reproduction),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = run();
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!("criterion {} {name}: PASS ({detail}) [{secs:.1}s]", i + 1),
            Err(detail) => {
                failed += 1;
                println!("criterion {} {name}: FAIL ({detail}) [{secs:.1}s]", i + 1);
            }
        }
    }
    println!(
        "acceptance: {} of {} criteria pass",
        criteria.len() - failed,
        criteria.len()
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
