//! Acceptance run: one PASS/FAIL line per criterion. Exits non-zero if any
//! criterion fails.

use std::collections::HashMap;
use std::time::{Duration, Instant};

use dualbraid::congruence::{cube_check, ComplementTable, Congruence, DEFAULT_STEP_BOUND};
use dualbraid::coxeter::CoxeterDatum;
use dualbraid::embedding::{verify_classical_from_dual, verify_dual_relations_in_group};
use dualbraid::garside::{group_normal_form, halfturn_fixed_check, normal_form, positive_normal_form};
use dualbraid::interval::{enumerate_interval, GarsideData};
use dualbraid::presentation::{
    complete_dual, completed_dual_presentation, dual_presentation, garside_word, Atom, SignedWord, Word,
};
use dualbraid::table::{classical_count_enumerated, dual_count_interval, dual_count_rewriting};
use dualbraid::CoxeterType::{self, *};

const SERIES_CELL_LIMIT: Duration = Duration::from_secs(5);
const EXCEPTIONAL_CELL_LIMIT: Duration = Duration::from_secs(60);
const E78_CELL_LIMIT: Duration = Duration::from_secs(15 * 60);
const CROSS_ENGINE_LIMIT: Duration = Duration::from_secs(120);
const CUBE_LIMIT: Duration = Duration::from_secs(600);
const EMBEDDING_LIMIT: Duration = Duration::from_secs(300);
const EXHAUSTIVE_LATTICE_SIZE: usize = 300;
const SAMPLED_PAIRS: usize = 10_000;
const NF_WORD_LENGTH: usize = 4;
const NF_SIGNED_LENGTH: usize = 3;

fn binomial(n: u128, k: u128) -> u128 {
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

fn factorial(n: u128) -> u128 {
    (1..=n).product()
}

/// Dual counts from the closed forms.
fn dual_oracle(ty: CoxeterType) -> u128 {
    match ty {
        A(n) => binomial(2 * n as u128 + 2, n as u128 + 1) / (n as u128 + 2),
        B(n) => binomial(2 * n as u128, n as u128),
        D(n) => binomial(2 * n as u128, n as u128) - binomial(2 * n as u128 - 2, n as u128 - 1),
        I2(m) => m as u128 + 2,
        _ => unreachable!(),
    }
}

fn classical_oracle(ty: CoxeterType) -> u128 {
    match ty {
        A(n) => factorial(n as u128 + 1),
        B(n) => (1 << n) * factorial(n as u128),
        D(n) => (1 << (n - 1)) * factorial(n as u128),
        I2(m) => 2 * m as u128,
        H3 => 120,
        F4 => 1152,
        H4 => 14400,
        E6 => 51840,
        E7 => 2903040,
        E8 => 696729600,
    }
}

/// Product of the degrees, for the orders not enumerated.
fn degree_product(ty: CoxeterType) -> u128 {
    let degrees: &[u128] = match ty {
        E7 => &[2, 6, 8, 10, 12, 14, 18],
        E8 => &[2, 8, 12, 14, 18, 20, 24, 30],
        _ => unreachable!(),
    };
    degrees.iter().product()
}

fn series() -> Vec<CoxeterType> {
    let mut v: Vec<CoxeterType> = (1..=7).map(A).collect();
    v.extend((2..=6).map(B));
    v.extend((3..=6).map(D));
    v.extend((3..=12).map(I2));
    v
}

struct Outcome {
    pass: bool,
    detail: String,
}

fn outcome(failures: Vec<String>, summary: String) -> Outcome {
    Outcome {
        pass: failures.is_empty(),
        detail: if failures.is_empty() {
            summary
        } else {
            format!("{summary}; failures: {}", failures.join("; "))
        },
    }
}

fn timed<T>(f: impl FnOnce() -> T) -> (T, Duration) {
    let start = Instant::now();
    let out = f();
    (out, start.elapsed())
}

fn c1_dual_series() -> Outcome {
    let literal: HashMap<CoxeterType, u128> = [
        (A(1), 2), (A(2), 5), (A(3), 14), (A(4), 42), (A(5), 132), (A(6), 429), (A(7), 1430),
        (B(2), 6), (B(3), 20), (B(4), 70), (B(5), 252), (B(6), 924),
        (D(3), 14), (D(4), 50), (D(5), 182), (D(6), 672),
    ]
    .into_iter()
    .collect();
    let mut failures = Vec::new();
    let mut slowest = Duration::ZERO;
    for ty in series() {
        let expected = dual_oracle(ty);
        if literal.get(&ty).is_some_and(|&v| v != expected) {
            failures.push(format!("{ty}: oracle {expected} disagrees with table value"));
        }
        let (got, t) = timed(|| dual_count_interval(ty));
        slowest = slowest.max(t);
        match got {
            Ok(c) if c == expected && t < SERIES_CELL_LIMIT => {}
            Ok(c) => failures.push(format!("{ty}: {c} vs {expected} in {t:?}")),
            Err(e) => failures.push(format!("{ty}: {e}")),
        }
    }
    outcome(failures, format!("{} cells, slowest {slowest:.2?}", series().len()))
}

fn c2_dual_exceptional() -> Outcome {
    let cells = [
        (H3, 32, EXCEPTIONAL_CELL_LIMIT),
        (F4, 105, EXCEPTIONAL_CELL_LIMIT),
        (H4, 280, EXCEPTIONAL_CELL_LIMIT),
        (E6, 833, EXCEPTIONAL_CELL_LIMIT),
        (E7, 4160, E78_CELL_LIMIT),
        (E8, 25080, E78_CELL_LIMIT),
    ];
    let mut failures = Vec::new();
    let mut times = Vec::new();
    for (ty, expected, limit) in cells {
        let (got, t) = timed(|| dual_count_interval(ty));
        times.push(format!("{ty} {t:.1?}"));
        match got {
            Ok(c) if c == expected && t < limit => {}
            Ok(c) => failures.push(format!("{ty}: {c} vs {expected} in {t:?}")),
            Err(e) => failures.push(format!("{ty}: {e}")),
        }
    }
    outcome(failures, times.join(", "))
}

fn c3_classical() -> Outcome {
    let mut types = series();
    types.extend([H3, F4, H4, E6]);
    let mut failures = Vec::new();
    for &ty in &types {
        let expected = classical_oracle(ty);
        match classical_count_enumerated(ty) {
            Ok(c) if c == expected => {}
            Ok(c) => failures.push(format!("{ty}: {c} vs {expected}")),
            Err(e) => failures.push(format!("{ty}: {e}")),
        }
    }
    for ty in [E7, E8] {
        if degree_product(ty) != classical_oracle(ty) {
            failures.push(format!("{ty}: degree product {} vs {}", degree_product(ty), classical_oracle(ty)));
        }
    }
    outcome(failures, format!("{} enumerated, E7/E8 by degrees", types.len()))
}

fn c4_cross_engine() -> Outcome {
    let mut types: Vec<CoxeterType> = (1..=4).map(A).collect();
    types.extend((2..=4).map(B));
    types.extend((3..=4).map(D));
    types.extend((3..=8).map(I2));
    let mut failures = Vec::new();
    let (_, t) = timed(|| {
        for &ty in &types {
            match (dual_count_rewriting(ty), dual_count_interval(ty)) {
                (Ok(r), Ok(i)) if r == i => {}
                (Ok(r), Ok(i)) => failures.push(format!("{ty}: rewriting {r}, interval {i}")),
                (r, i) => failures.push(format!("{ty}: {r:?} / {i:?}")),
            }
        }
    });
    if t >= CROSS_ENGINE_LIMIT {
        failures.push(format!("took {t:?}"));
    }
    outcome(failures, format!("{} types in {t:.2?}", types.len()))
}

fn expected_delta(ty: CoxeterType) -> Word {
    let n = ty.rank() as u16;
    let mut w: Vec<Atom> = (2..=n).rev().map(|k| Atom::alpha(k, k - 1)).collect();
    w.push(match ty {
        B(_) => Atom::tau(1),
        _ => Atom::beta(2, 1),
    });
    Word(w)
}

fn c5_garside_element() -> Outcome {
    let mut failures = Vec::new();
    for ty in [B(2), B(3), B(4), D(3), D(4)] {
        let run = || -> dualbraid::Result<Vec<String>> {
            let mut f = Vec::new();
            let delta = garside_word(ty)?;
            if delta != expected_delta(ty) {
                f.push(format!("{ty}: delta is {delta}"));
            }
            let report = Congruence::new(&completed_dual_presentation(ty)?).is_garside_element(&delta)?;
            if !report.pass {
                f.push(format!("{ty}: {report:?}"));
            }
            let datum = CoxeterDatum::new(ty)?;
            if &datum.word_image(&delta)? != datum.coxeter_element() {
                f.push(format!("{ty}: image of delta is not c"));
            }
            Ok(f)
        };
        match run() {
            Ok(f) => failures.extend(f),
            Err(e) => failures.push(format!("{ty}: {e}")),
        }
    }
    outcome(failures, "B(2..4), D(3..4)".into())
}

fn c6_cube() -> Outcome {
    let mut failures = Vec::new();
    let ((), t) = timed(|| {
        let mut jobs = vec![(completed_dual_presentation(B(5)), B(5)), (completed_dual_presentation(D(6)), D(6))];
        for ty in (2..=4).map(A).chain((3..=8).map(I2)) {
            jobs.push((dual_presentation(ty), ty));
        }
        for (p, ty) in jobs {
            match p.and_then(|p| cube_check(&p, DEFAULT_STEP_BOUND)) {
                Ok(r) if r.pass => {}
                Ok(r) => failures.push(format!("{ty}: {} failures", r.failures.len())),
                Err(e) => failures.push(format!("{ty}: {e}")),
            }
        }
    });
    let missing = dual_presentation(B(3))
        .and_then(|p| ComplementTable::new(&p))
        .map(|t| t.missing().len());
    match &missing {
        Ok(m) if *m >= 1 => {}
        other => failures.push(format!("uncompleted B(3) missing pairs: {other:?}")),
    }
    if t >= CUBE_LIMIT {
        failures.push(format!("took {t:?}"));
    }
    outcome(
        failures,
        format!("B(5), D(6), A(2..4), I2(3..8) in {t:.1?}; uncompleted B(3) missing {}", missing.unwrap_or(0)),
    )
}

fn c7_completion() -> Outcome {
    let mut failures = Vec::new();
    let mut checked = 0;
    for ty in [B(3), B(4), D(3), D(4)] {
        let mut run = || -> dualbraid::Result<Vec<String>> {
            let mut f = Vec::new();
            let completion = complete_dual(ty)?;
            let report = &completion.report;
            if !report.pass || !report.rejected.is_empty() {
                f.push(format!("{ty}: rejected {:?}", report.rejected));
            }
            if matches!(ty, B(_)) && report.duplicate_terms.is_empty() {
                f.push(format!("{ty}: duplicated chain term not reported"));
            }
            // Independent recheck of every relation against the base.
            let base = Congruence::new(&dual_presentation(ty)?);
            for r in completion.presentation.relations() {
                checked += 1;
                if !base.derivable(r)? {
                    f.push(format!("{ty}: {r} not derivable"));
                }
            }
            Ok(f)
        };
        match run() {
            Ok(f) => failures.extend(f),
            Err(e) => failures.push(format!("{ty}: {e}")),
        }
    }
    outcome(failures, format!("{checked} relations derivable"))
}

fn c8_embedding() -> Outcome {
    let mut failures = Vec::new();
    let ((), t) = timed(|| {
        for ty in [A(2), A(3), B(2), B(3), D(3)] {
            match verify_dual_relations_in_group(ty) {
                Ok(r) if r.pass => {}
                Ok(r) => failures.push(format!("{ty}: {:?}", r.failures)),
                Err(e) => failures.push(format!("{ty}: {e}")),
            }
        }
        for ty in [B(2), B(3), D(3)] {
            match verify_classical_from_dual(ty) {
                Ok(r) if r.pass => {}
                Ok(r) => failures.push(format!("{ty} classical: {:?}", r.failures)),
                Err(e) => failures.push(format!("{ty} classical: {e}")),
            }
        }
    });
    if t >= EMBEDDING_LIMIT {
        failures.push(format!("took {t:?}"));
    }
    outcome(failures, format!("{t:.2?}"))
}

fn c9_halfturn() -> Outcome {
    let mut failures = Vec::new();
    for n in [2, 3] {
        match halfturn_fixed_check(n) {
            Ok(r) if r.pass && r.images.iter().all(|i| i.fixed) => {}
            Ok(r) => failures.push(format!("n={n}: {:?}", r.failures)),
            Err(e) => failures.push(format!("n={n}: {e}")),
        }
    }
    outcome(failures, "n = 2, 3".into())
}

fn c10_lattice() -> Outcome {
    let mut types = series();
    types.extend([H3, F4, H4, E6, E7, E8]);
    let mut failures = Vec::new();
    let (mut exhaustive, mut sampled) = (0, 0);
    for &ty in &types {
        let report = match CoxeterDatum::new(ty).and_then(|d| enumerate_interval(&d)) {
            Ok(p) => p.verify_lattice(),
            Err(e) => {
                failures.push(format!("{ty}: {e}"));
                continue;
            }
        };
        if report.exhaustive {
            exhaustive += 1;
        } else {
            sampled += 1;
            if report.pairs_checked < SAMPLED_PAIRS {
                failures.push(format!("{ty}: only {} pairs sampled", report.pairs_checked));
            }
        }
        if report.elements <= EXHAUSTIVE_LATTICE_SIZE && !report.exhaustive {
            failures.push(format!("{ty}: not checked exhaustively"));
        }
        if report.violations != 0 || !report.pass {
            failures.push(format!("{ty}: {} violations", report.violations));
        }
    }
    outcome(failures, format!("{exhaustive} exhaustive, {sampled} sampled"))
}

fn words(atoms: &[Atom], max_len: usize) -> Vec<Word> {
    let mut all = vec![Word(Vec::new())];
    let mut layer = all.clone();
    for _ in 0..max_len {
        layer = layer
            .iter()
            .flat_map(|w| {
                atoms.iter().map(move |a| {
                    let mut v = w.0.clone();
                    v.push(*a);
                    Word(v)
                })
            })
            .collect();
        all.extend(layer.iter().cloned());
    }
    all
}

fn signed_words(atoms: &[Atom], max_len: usize) -> Vec<SignedWord> {
    let letters: Vec<(Atom, i8)> = atoms.iter().flat_map(|&a| [(a, 1), (a, -1)]).collect();
    let mut all = vec![SignedWord(Vec::new())];
    let mut layer = all.clone();
    for _ in 0..max_len {
        layer = layer
            .iter()
            .flat_map(|w| {
                letters.iter().map(move |&l| {
                    let mut v = w.0.clone();
                    v.push(l);
                    SignedWord(v)
                })
            })
            .collect();
        all.extend(layer.iter().cloned());
    }
    all
}

fn nf_sweep(ty: CoxeterType) -> dualbraid::Result<(usize, Vec<String>)> {
    let data = GarsideData::dual(ty)?;
    let p = completed_dual_presentation(ty)?;
    let oracle = Congruence::new(&p);
    let mut f = Vec::new();
    let mut checks = 0;

    // Positive words: concatenation and agreement with the congruence.
    let mut nf_to_class: HashMap<_, Word> = HashMap::new();
    let mut class_to_nf: HashMap<Word, _> = HashMap::new();
    for w in words(p.atoms(), NF_WORD_LENGTH) {
        let nf = positive_normal_form(&data, &w)?;
        for i in 0..=w.len() {
            let (u, v) = (Word(w.0[..i].to_vec()), Word(w.0[i..].to_vec()));
            let mut simples = positive_normal_form(&data, &u)?.to_simples(&data).unwrap();
            simples.extend(positive_normal_form(&data, &v)?.to_simples(&data).unwrap());
            checks += 1;
            if normal_form(&data, &simples)? != nf {
                f.push(format!("{ty}: concatenation fails at {w} | {i}"));
            }
        }
        let rep = oracle.class(&w)?.representative;
        checks += 1;
        if let Some(prev) = nf_to_class.insert(nf.clone(), rep.clone()) {
            if prev != rep {
                f.push(format!("{ty}: one normal form for classes of {prev} and {rep}"));
            }
        }
        if let Some(prev) = class_to_nf.insert(rep.clone(), nf.clone()) {
            if prev != nf {
                f.push(format!("{ty}: class of {rep} has two normal forms"));
            }
        }
    }

    // Group words: idempotence and concatenation.
    for w in signed_words(p.atoms(), NF_SIGNED_LENGTH) {
        let nf = group_normal_form(&data, &w)?;
        let again = group_normal_form(&data, &nf.to_signed_word(&data).unwrap())?;
        checks += 1;
        if again != nf {
            f.push(format!("{ty}: normal form of {w} is not idempotent"));
        }
        for i in 0..=w.len() {
            let (u, v) = (SignedWord(w.0[..i].to_vec()), SignedWord(w.0[i..].to_vec()));
            let nu = group_normal_form(&data, &u)?.to_signed_word(&data).unwrap();
            let nv = group_normal_form(&data, &v)?.to_signed_word(&data).unwrap();
            checks += 1;
            if group_normal_form(&data, &nu.then(&nv))? != nf {
                f.push(format!("{ty}: concatenation fails at {w} | {i}"));
            }
        }
    }
    f.truncate(5);
    Ok((checks, f))
}

fn c11_normal_forms() -> Outcome {
    let mut failures = Vec::new();
    let mut checks = 0;
    for ty in [B(2), B(3), D(3)] {
        match nf_sweep(ty) {
            Ok((c, f)) => {
                checks += c;
                failures.extend(f);
            }
            Err(e) => failures.push(format!("{ty}: {e}")),
        }
    }
    outcome(failures, format!("{checks} checks"))
}

fn main() {
    type Criterion = (&'static str, fn() -> Outcome);
    let criteria: [Criterion; 11] = [
        ("dual counts, series", c1_dual_series),
        ("dual counts, exceptional", c2_dual_exceptional),
        ("classical counts", c3_classical),
        ("rewriting agrees with interval", c4_cross_engine),
        ("Garside element", c5_garside_element),
        ("cube condition", c6_cube),
        ("completion soundness", c7_completion),
        ("embedding", c8_embedding),
        ("halfturn fixed submonoid", c9_halfturn),
        ("lattice property", c10_lattice),
        ("normal-form properties", c11_normal_forms),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let (o, t) = timed(run);
        if !o.pass {
            failed += 1;
        }
        println!(
            "{} {:>2} {name}: {} [{t:.1?}]",
            if o.pass { "PASS" } else { "FAIL" },
            i + 1,
            o.detail
        );
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed > 0 {
        std::process::exit(1);
    }
}
