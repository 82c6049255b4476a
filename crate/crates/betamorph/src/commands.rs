//! One command applied to one β.

use std::sync::Arc;

use betamorph_core::markov::{certify_isomorphism, check_r1, detect_markov, Certificate, TransitionMatrix};
use betamorph_core::monotone::{decompose, parity_profile, verify_census, CensusReport};
use betamorph_core::orbit::{orbit_order_check, s_closed_form, verify_orbit_parity};
use betamorph_core::report::Report;
use betamorph_core::verdict::{obstruction_check, Verdict, Witness};
use betamorph_core::{classify_beta, AlgebraicField, BetaClass, BetaSpec, Error, FieldElement, Orientation, PLMap};
use serde_json::{json, Value};

use crate::args::{Command, MapChoice, Options, Target};
use crate::document::{report_json, Document, Table};

/// Significant digits of decimal approximations.
pub const DECIMAL_DIGITS: u32 = 12;
pub const DEFAULT_ORBIT_DEPTH: usize = 10;
pub const DEFAULT_MARKOV_DEPTH: usize = 50;

struct Body {
    code: i32,
    text: String,
    json: Value,
    table: Table,
}

/// Runs `command` on the β described by `spec`.
pub fn run(command: &Command, spec: &str, options: &Options) -> Document {
    let name = command.name();
    let parsed: BetaSpec = match spec.parse() {
        Ok(s) => s,
        Err(e) => return Document::failure(name, spec.trim().to_string(), None, 2, e.to_string()),
    };
    let spec_text = parsed.to_string();
    let field = match parsed.field() {
        Ok(f) => f,
        Err(e) => return Document::failure(name, spec_text, None, 2, e.to_string()),
    };
    let class = match classify_beta(&field) {
        Ok(c) => c,
        Err(e) => return Document::failure(name, spec_text, None, 2, e.to_string()),
    };
    let regime = Some(class.to_string());
    let result = match command {
        Command::Certify => certify(&field, class, options),
        Command::Verify { target } => verify(&field, class, *target, options),
        Command::Spectrum => spectrum(&field, class, options),
        Command::Markov => markov(&field, options),
        Command::Orbit => orbit(&field, options),
    };
    match result {
        Ok(b) => Document {
            command: name,
            beta_spec: spec_text,
            regime,
            exit_code: b.code,
            error: None,
            text: b.text,
            json: b.json,
            table: b.table,
        },
        Err(e) => {
            let code = error_code(command, &e);
            Document::failure(name, spec_text, regime, code, e.to_string())
        }
    }
}

fn is_input_error(e: &Error) -> bool {
    matches!(
        e,
        Error::InvalidArgument(_)
            | Error::Parse(_)
            | Error::NoRoot
            | Error::AmbiguousRoot { .. }
            | Error::Uncertified(_)
            | Error::Domain(_)
            | Error::Range(_)
            | Error::Hypothesis(_)
            | Error::BranchBudget { .. }
            | Error::Classification(_)
            | Error::WrongRegime(_)
            | Error::DivisionByZero
    )
}

fn error_code(command: &Command, e: &Error) -> i32 {
    match command {
        Command::Certify if is_input_error(e) => 2,
        Command::Certify => 3,
        Command::Verify { .. } if is_input_error(e) => 2,
        Command::Verify { .. } => 1,
        _ => 2,
    }
}

fn decimal(x: &FieldElement) -> Result<String, Error> {
    x.to_decimal(DECIMAL_DIGITS)
}

fn value_json(x: &FieldElement) -> Result<Value, Error> {
    Ok(json!({ "exact": x.to_poly_string(), "decimal": decimal(x)? }))
}

fn orientation(map: MapChoice) -> Orientation {
    match map {
        MapChoice::T => Orientation::Positive,
        MapChoice::S => Orientation::Negative,
    }
}

fn matrix_json(m: &TransitionMatrix) -> Value {
    json!(m.entries)
}

fn matrix_text(m: &TransitionMatrix) -> String {
    m.entries
        .iter()
        .map(|r| format!("  {}\n", r.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" ")))
        .collect()
}

fn certify(field: &Arc<AlgebraicField>, class: BetaClass, options: &Options) -> Result<Body, Error> {
    let verdict = obstruction_check(field, options.n)?;
    let mut checks = Report::new("consistency checks");
    match class {
        BetaClass::Exact(n) => {
            checks.extend(verify_orbit_parity(field, n)?.report);
        }
        _ => {
            for o in [Orientation::Positive, Orientation::Negative] {
                let c = verify_census(field, o, None)?;
                checks.push(format!("{o} type census matches closed form"), c.all_match(), census_summary(&c));
            }
        }
    }
    let mut body = match &verdict {
        Verdict::IsomorphicMultinacci(cert) => certificate_body(cert)?,
        Verdict::NotIsomorphic { iterate, class, witnesses, case, predicted, consistent } => {
            if !predicted.is_empty() {
                checks.push(
                    "witness agrees with the case analysis",
                    *consistent,
                    format!("predicted {predicted:?}, found {:?}", witnesses.iter().map(|w| w.k).collect::<Vec<_>>()),
                );
            }
            let lead = witnesses.iter().find(|w| predicted.contains(&w.k)).unwrap_or(&witnesses[0]);
            let mut text = format!(
                "NOT ISOMORPHIC: n={iterate}, witness k={}, λ(I⁺)={}, λ(I⁻)={}\n",
                lead.k,
                lead.length_plus.to_poly_string(),
                lead.length_minus.to_poly_string()
            );
            if let Some(c) = case {
                text.push_str(&format!("case: {}\n", c.tag()));
            }
            text.push_str("witnesses (k: length under T, length under S):\n");
            let mut table = Table::new(&["k", "length_plus", "length_minus", "length_plus_approx", "length_minus_approx"]);
            let mut wj = Vec::new();
            for w in witnesses {
                text.push_str(&format!("  k={}: {} , {}\n", w.k, witness_side(&w.length_plus)?, witness_side(&w.length_minus)?));
                table.push(vec![
                    w.k.to_string(),
                    w.length_plus.to_poly_string(),
                    w.length_minus.to_poly_string(),
                    decimal(&w.length_plus)?,
                    decimal(&w.length_minus)?,
                ]);
                wj.push(witness_json(w)?);
            }
            Body {
                code: 0,
                text,
                json: json!({
                    "verdict": "not-isomorphic",
                    "class": class.to_string(),
                    "n": iterate,
                    "witnesses": wj,
                    "case_tag": case.map(|c| c.tag()),
                    "predicted": predicted,
                    "consistent": consistent,
                }),
                table,
            }
        }
        Verdict::Inconclusive { iterate, class } => {
            // Only the automatically chosen iterate is expected to separate.
            if options.n.is_none() {
                checks.push("some level set separates the maps", false, format!("none at n = {iterate}"));
            }
            Body {
                code: 0,
                text: format!("INCONCLUSIVE: n={iterate}, no separating level set\n"),
                json: json!({ "verdict": "inconclusive", "class": class.to_string(), "n": iterate }),
                table: Table::new(&["k", "length_plus", "length_minus"]),
            }
        }
    };
    if !checks.all_passed() {
        body.code = 3;
    }
    body.text.push_str(&checks.to_string());
    if let Value::Object(m) = &mut body.json {
        m.insert("checks".into(), report_json(&checks));
    }
    Ok(body)
}

fn witness_side(x: &FieldElement) -> Result<String, Error> {
    if x.is_zero() {
        Ok("0".into())
    } else {
        Ok(format!("{} ≈ {}", x.to_poly_string(), decimal(x)?))
    }
}

fn witness_json(w: &Witness) -> Result<Value, Error> {
    Ok(json!({
        "k": w.k,
        "length_plus": value_json(&w.length_plus)?,
        "length_minus": value_json(&w.length_minus)?,
    }))
}

fn census_summary(c: &CensusReport) -> String {
    c.rows
        .iter()
        .map(|r| format!("m={}: {:?}", r.m, r.observed))
        .collect::<Vec<_>>()
        .join("; ")
}

fn states_json(states: &[(FieldElement, FieldElement)]) -> Result<Value, Error> {
    let mut v = Vec::new();
    for (i, (a, b)) in states.iter().enumerate() {
        v.push(json!({ "state": format!("E{}", i + 1), "left": value_json(a)?, "right": value_json(b)? }));
    }
    Ok(Value::Array(v))
}

fn states_text(name: &str, states: &[(FieldElement, FieldElement)]) -> Result<String, Error> {
    let mut s = format!("{name} states:\n");
    for (i, (a, b)) in states.iter().enumerate() {
        s.push_str(&format!("  E{} = ({}, {})\n", i + 1, decimal(a)?, decimal(b)?));
    }
    Ok(s)
}

fn certificate_body(cert: &Certificate) -> Result<Body, Error> {
    let n = cert.n;
    let report = cert.report()?;
    let mut text = if cert.matrices_equal {
        format!("ISOMORPHIC (n={n}): identical {n}×{n} Markov matrices\n")
    } else {
        format!("ISOMORPHIC (n={n}): Markov matrices differ under the default labelings\n")
    };
    text.push_str("matrix:\n");
    text.push_str(&matrix_text(&cert.matrix_t));
    text.push_str(&states_text("T", &cert.states_t)?);
    text.push_str(&states_text("S", &cert.states_s)?);
    text.push_str(&format!(
        "entropy in [{}, {}], log beta in [{}, {}]\n",
        betamorph_core::field::format_decimal(&cert.entropy.lo, 14),
        betamorph_core::field::format_decimal(&cert.entropy.hi, 14),
        betamorph_core::field::format_decimal(&cert.log_beta.lo, 14),
        betamorph_core::field::format_decimal(&cert.log_beta.hi, 14),
    ));
    text.push_str(&report.to_string());
    let r1 = |r: &betamorph_core::markov::R1Report| {
        json!({
            "irreducible": r.irreducible,
            "contiguous": r.contiguous,
            "spectral_radius_ok": r.spectral_radius_ok(),
        })
    };
    let json = json!({
        "verdict": "isomorphic",
        "n": n,
        "matrix": matrix_json(&cert.matrix_t),
        "matrix_s": matrix_json(&cert.matrix_s),
        "matrices_equal": cert.matrices_equal,
        "standard_pattern": cert.standard_pattern,
        "cut_points": { "T": states_json(&cert.states_t)?, "S": states_json(&cert.states_s)? },
        "r1": { "T": r1(&cert.r1_t), "S": r1(&cert.r1_s) },
        "entropy": { "lo": cert.entropy.lo.to_string(), "hi": cert.entropy.hi.to_string() },
        "log_beta": { "lo": cert.log_beta.lo.to_string(), "hi": cert.log_beta.hi.to_string() },
        "certificate": report_json(&report),
    });
    let mut table = Table::new(&["row"]);
    table.header = (1..=n).map(|j| format!("E{j}")).collect();
    table.header.insert(0, "state".into());
    for (i, row) in cert.matrix_t.entries.iter().enumerate() {
        let mut r = vec![format!("E{}", i + 1)];
        r.extend(row.iter().map(|x| x.to_string()));
        table.push(r);
    }
    Ok(Body { code: 0, text, json, table })
}

fn report_body(report: Report, extra_text: String, extra_json: Value) -> Body {
    let code = if report.all_passed() { 0 } else { 1 };
    let mut json = report_json(&report);
    if let (Value::Object(m), Value::Object(x)) = (&mut json, extra_json) {
        m.extend(x);
    }
    Body { code, text: format!("{report}{extra_text}"), table: Table::from_report(&report), json }
}

fn verify(field: &Arc<AlgebraicField>, class: BetaClass, target: Target, options: &Options) -> Result<Body, Error> {
    match target {
        Target::OrbitParity => {
            let n = match (options.n, class) {
                (Some(n), _) => n,
                (None, BetaClass::Exact(n)) => n,
                (None, BetaClass::Gap(n)) if n > 2 => n - 1,
                _ => return Err(Error::Hypothesis("beta below the golden ratio; pass --n".into())),
            };
            let r = verify_orbit_parity(field, n)?;
            let note = if r.equality { format!("equality at k={}\n", n - 1) } else { String::new() };
            Ok(report_body(r.report, note, json!({ "n": n, "equality": r.equality, "strict": r.strict })))
        }
        Target::ClosedForm => {
            let kmax = match (options.n, class) {
                (Some(k), _) => k,
                (None, BetaClass::Exact(n)) => n - 1,
                (None, BetaClass::Gap(n)) if n > 2 => n - 2,
                _ => return Err(Error::Range("no k has a closed form below the golden ratio".into())),
            };
            let orbit = PLMap::negative(field).orbit_of_one(kmax)?;
            let mut report = Report::new(format!("closed form of S^k(1), k = 1..{kmax}"));
            for k in 1..=kmax {
                let c = s_closed_form(field, k)?;
                report.push(format!("S^{k}(1)"), c == orbit.points[k], c.to_poly_string());
            }
            Ok(report_body(report, String::new(), json!({ "k_max": kmax })))
        }
        Target::Kappa | Target::Iota => {
            let o = if target == Target::Kappa { Orientation::Positive } else { Orientation::Negative };
            census_body(&verify_census(field, o, options.n)?, target, options.m)
        }
        Target::Parity => {
            let n = options.n.unwrap_or(class.index());
            let sp = decompose(&PLMap::positive(field), n)?.spectrum();
            Ok(report_body(parity_profile(&sp)?, String::new(), json!({ "n": n })))
        }
        Target::OrbitOrder => {
            let r = orbit_order_check(field)?;
            let order: Vec<String> = r.sorted.iter().map(|k| format!("S^{k}(1)")).collect();
            let note = format!("order: {}\n", order.join(" < "));
            Ok(report_body(r.report, note, json!({ "order": order })))
        }
        Target::Markov => {
            let cert = certify_isomorphism(field)?;
            let mut b = certificate_body(&cert)?;
            b.table = Table::from_report(&cert.report()?);
            Ok(b)
        }
    }
}

fn census_body(c: &CensusReport, target: Target, only: Option<usize>) -> Result<Body, Error> {
    let sym = if target == Target::Kappa { "κ" } else { "ι" };
    let rows: Vec<_> = c.rows.iter().filter(|r| only.is_none_or(|m| r.m == m)).collect();
    if rows.is_empty() {
        return Err(Error::InvalidArgument(format!("m must lie in 1..={}", c.n)));
    }
    let mut report = Report::new(format!("{} type census, n = {}", c.orientation, c.n));
    let mut table = Table::new(&["m", "observed", "expected", "branches", "passed"]);
    let tuple = |v: &[u64]| format!("({})", v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(","));
    let mut rj = Vec::new();
    for r in &rows {
        report.push(
            format!("m={}: {sym} = {}", r.m, tuple(&r.observed)),
            r.matches(),
            format!("closed form {}, {} branches", tuple(&r.expected), r.branches),
        );
        table.push(vec![
            r.m.to_string(),
            tuple(&r.observed),
            tuple(&r.expected),
            r.branches.to_string(),
            r.matches().to_string(),
        ]);
        rj.push(json!({ "m": r.m, "observed": r.observed, "expected": r.expected, "branches": r.branches }));
    }
    if only.is_none() {
        for c in c.report.checks.iter().filter(|c| !c.name.starts_with("m = ")) {
            report.push(c.name.clone(), c.passed, c.detail.clone());
        }
    }
    let code = if report.all_passed() { 0 } else { 1 };
    let json = json!({
        "n": c.n,
        "case_tag": c.case.map(|x| x.tag()),
        "rows": rj,
        "report": report_json(&report),
    });
    let mut text = String::new();
    if let Some(case) = c.case {
        text.push_str(&format!("case: {}\n", case.tag()));
    }
    text.push_str(&report.to_string());
    Ok(Body { code, text, json, table })
}

fn spectrum(field: &Arc<AlgebraicField>, class: BetaClass, options: &Options) -> Result<Body, Error> {
    let map = PLMap::new(field, orientation(options.map.unwrap_or(MapChoice::T)));
    let n = options.n.unwrap_or(class.index());
    let sp = decompose(&map, n)?.spectrum();
    let mut table = Table::new(&[
        "cell_left_approx",
        "cell_right_approx",
        "value",
        "cell_left_exact",
        "cell_right_exact",
        "cell_left_label",
        "cell_right_label",
    ]);
    let mut text = format!("psi_{n} for {} ({} cells, max {})\n", map.orientation(), sp.len(), sp.max_value());
    let mut cells = Vec::new();
    for (i, (a, b, v)) in sp.cells().enumerate() {
        let (la, lb) = (sp.breakpoint_name(i), sp.breakpoint_name(i + 1));
        let (da, db) = (decimal(a)?, decimal(b)?);
        text.push_str(&format!("  ({la}, {lb}) = ({da}, {db}): {v}\n"));
        table.push(vec![da.clone(), db.clone(), v.to_string(), a.to_poly_string(), b.to_poly_string(), la.clone(), lb.clone()]);
        cells.push(json!({
            "left": { "exact": a.to_poly_string(), "decimal": da, "label": la },
            "right": { "exact": b.to_poly_string(), "decimal": db, "label": lb },
            "value": v,
        }));
    }
    let mass = sp.mass_identity_holds();
    text.push_str(&format!("mass identity: {}\n", if mass { "holds" } else { "FAILS" }));
    let json = json!({
        "map": map.orientation().symbol(),
        "n": n,
        "cells": cells,
        "max_value": sp.max_value(),
        "mass_identity": mass,
    });
    Ok(Body { code: 0, text, json, table })
}

fn markov(field: &Arc<AlgebraicField>, options: &Options) -> Result<Body, Error> {
    let depth = options.depth.unwrap_or(DEFAULT_MARKOV_DEPTH);
    let maps: Vec<MapChoice> = match options.map {
        Some(m) => vec![m],
        None => vec![MapChoice::T, MapChoice::S],
    };
    let mut text = String::new();
    let mut out = serde_json::Map::new();
    let mut table = Table::new(&["map", "state", "left_approx", "right_approx", "left_exact", "right_exact", "row"]);
    for choice in maps {
        let map = PLMap::new(field, orientation(choice));
        let sym = map.orientation().symbol();
        let Some(part) = detect_markov(&map, depth)? else {
            text.push_str(&format!("{sym}: no Markov partition from the orbit of 1 within depth {depth}\n"));
            out.insert(sym.into(), Value::Null);
            continue;
        };
        let m = part.transition_matrix();
        let r1 = check_r1(&m, field)?;
        text.push_str(&format!("{sym}: Markov partition with {} states\n", part.states()));
        let mut states = Vec::new();
        for s in 0..part.states() {
            let (a, b) = part.state_interval(s);
            let row: String = m.entries[s].iter().map(|x| x.to_string()).collect();
            text.push_str(&format!("  E{} = ({}, {})  row {row}\n", s + 1, decimal(&a)?, decimal(&b)?));
            table.push(vec![
                sym.into(),
                format!("E{}", s + 1),
                decimal(&a)?,
                decimal(&b)?,
                a.to_poly_string(),
                b.to_poly_string(),
                row,
            ]);
            states.push(json!({ "state": format!("E{}", s + 1), "left": value_json(&a)?, "right": value_json(&b)? }));
        }
        let r = r1.to_report();
        text.push_str(&r.to_string());
        out.insert(
            sym.into(),
            json!({ "states": states, "matrix": matrix_json(&m), "r1": report_json(&r) }),
        );
    }
    out.insert("depth".into(), json!(depth));
    Ok(Body { code: 0, text, json: Value::Object(out), table })
}

fn orbit(field: &Arc<AlgebraicField>, options: &Options) -> Result<Body, Error> {
    let depth = options.depth.unwrap_or(DEFAULT_ORBIT_DEPTH);
    let map = PLMap::new(field, orientation(options.map.unwrap_or(MapChoice::S)));
    let sym = map.orientation().symbol();
    let orbit = map.orbit_of_one(depth)?;
    let mut table = Table::new(&["k", "exact", "decimal"]);
    let mut text = format!("orbit of 1 under {sym}\n");
    let mut points = Vec::new();
    for (k, p) in orbit.points.iter().enumerate() {
        let d = decimal(p)?;
        text.push_str(&format!("  {sym}^{k}(1) = {} ≈ {d}\n", p.to_poly_string()));
        table.push(vec![k.to_string(), p.to_poly_string(), d.clone()]);
        points.push(json!({ "k": k, "exact": p.to_poly_string(), "decimal": d }));
    }
    Ok(Body { code: 0, text, json: json!({ "map": sym, "points": points }), table })
}
