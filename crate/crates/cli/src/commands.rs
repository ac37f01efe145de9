//! The four subcommands: decompose, tableaux, verify, invariants.

use std::collections::BTreeMap;

use supersym::combinat::{Multiset, MultisetPartition, Partition};
use supersym::invariants::{
    check_relations, component_within_cap, count_invariants, normal_form, reduce_power_sum,
    verify_spanning, PExpression,
};
use supersym::superpoly::{module_character, multiplicity_from_traces, Dims, DEFAULT_BASIS_CAP};
use supersym::symfunc::{module_frobenius, schur_multiplicities};
use supersym::tableaux::{self, MultisetTableau};
use supersym::verify::{run_all_suites, GridBounds};

use crate::config::{Component, Flags, Format, UsageError};

pub const EXIT_OK: i32 = 0;
pub const EXIT_VERIFICATION_FAILED: i32 = 1;

/// `decompose`: multiplicity of every irreducible in one component, by one
/// of the three pipelines or by all of them with a consistency diff.
pub fn cmd_decompose(flags: &Flags) -> Result<i32, UsageError> {
    // fixed-entries mode: count tableaux with the given non-blank labels
    if let Some(entries) = flags.get("entries") {
        let shape = flags
            .partition("shape")?
            .ok_or_else(|| UsageError("--entries requires --shape".into()))?;
        let n = flags.usize_or("n", shape.size())?;
        if shape.size() != n {
            return Err(UsageError(format!(
                "shape {shape} is not a partition of n = {n}"
            )));
        }
        let pi: MultisetPartition = entries
            .parse()
            .map_err(|e| UsageError(format!("--entries: {e}")))?;
        let count = tableaux::count_with_entry_multiset(&shape, &pi, n);
        match flags.format()? {
            Format::Json => println!(
                "{}",
                serde_json::json!({"shape": shape.parts(), "entries": pi.to_string(), "n": n, "count": count})
            ),
            Format::Text => println!("shape {shape} entries {pi}: {count}"),
        }
        return Ok(EXIT_OK);
    }

    let component = Component::from_flags(flags)?;
    let cap = flags.usize_or("cap", DEFAULT_BASIS_CAP)?;
    let method = flags.get("method").unwrap_or("tableaux");
    let check = flags.switch("check");
    let lambdas = supersym::combinat::enumerate_partitions(component.n, None);

    let by_tableaux = || -> BTreeMap<Partition, i64> {
        supersym::verify::multiplicity_table(component.n, &component.content)
            .into_iter()
            .map(|(l, m)| (l, m as i64))
            .collect()
    };
    let by_symbolic = || -> BTreeMap<Partition, i64> {
        let frob = module_frobenius(
            component.n,
            &component.content.alpha,
            &component.content.beta,
        );
        let table = schur_multiplicities(&frob);
        lambdas
            .iter()
            .map(|l| (l.clone(), table.get(l).copied().unwrap_or(0)))
            .collect()
    };
    let dims = Dims::new(component.n, component.m, component.m_bar);
    let brute_ok =
        component_within_cap(dims, &component.content.alpha, &component.content.beta, cap);
    let by_brute = || -> BTreeMap<Partition, i64> {
        let traces = module_character(dims, &component.content.alpha, &component.content.beta);
        lambdas
            .iter()
            .map(|l| (l.clone(), multiplicity_from_traces(&traces, l)))
            .collect()
    };

    if check {
        let mut tables: Vec<(&str, BTreeMap<Partition, i64>)> =
            vec![("tableaux", by_tableaux()), ("symbolic", by_symbolic())];
        if brute_ok {
            tables.push(("brute", by_brute()));
        } else {
            eprintln!(
                "warning: component dimension exceeds cap {cap}; brute pipeline disabled, comparing the two symbolic pipelines"
            );
        }
        let mut diffs = Vec::new();
        for lambda in &lambdas {
            let values: Vec<i64> = tables.iter().map(|(_, t)| t[lambda]).collect();
            if values.windows(2).any(|w| w[0] != w[1]) {
                let detail: Vec<String> = tables
                    .iter()
                    .map(|(name, t)| format!("{name}={}", t[lambda]))
                    .collect();
                diffs.push(format!("lambda {lambda}: {}", detail.join(" ")));
            }
        }
        if !diffs.is_empty() {
            for d in &diffs {
                eprintln!("mismatch: {d}");
            }
            return Ok(EXIT_VERIFICATION_FAILED);
        }
        print_multiplicities(flags, &component, "all-agree", &tables[0].1)?;
        return Ok(EXIT_OK);
    }

    let table = match method {
        "tableaux" => by_tableaux(),
        "symbolic" => by_symbolic(),
        "brute" => {
            if !brute_ok {
                return Err(UsageError(format!(
                    "component dimension exceeds cap {cap}; raise --cap or pick another method"
                )));
            }
            by_brute()
        }
        other => {
            return Err(UsageError(format!(
                "--method must be tableaux, symbolic or brute, got {other:?}"
            )))
        }
    };
    print_multiplicities(flags, &component, method, &table)?;
    Ok(EXIT_OK)
}

fn print_multiplicities(
    flags: &Flags,
    component: &Component,
    method: &str,
    table: &BTreeMap<Partition, i64>,
) -> Result<(), UsageError> {
    match flags.format()? {
        Format::Json => {
            let rows: Vec<serde_json::Value> = table
                .iter()
                .map(|(l, m)| serde_json::json!({"lambda": l.parts(), "multiplicity": m}))
                .collect();
            println!(
                "{}",
                serde_json::json!({
                    "component": component.json(),
                    "method": method,
                    "multiplicities": rows,
                })
            );
        }
        Format::Text => {
            println!(
                "n={} alpha={:?} beta={:?} ({method})",
                component.n, component.content.alpha, component.content.beta
            );
            for (lambda, m) in table {
                println!("  {lambda}  {m}");
            }
        }
    }
    Ok(())
}

/// `tableaux`: enumerate, count or validate.
pub fn cmd_tableaux(flags: &Flags) -> Result<i32, UsageError> {
    if let Some(path) = flags.get("validate") {
        let text = std::fs::read_to_string(path)
            .map_err(|e| UsageError(format!("cannot read {path}: {e}")))?;
        let value: serde_json::Value = serde_json::from_str(&text)
            .map_err(|e| UsageError(format!("{path} is not JSON: {e}")))?;
        let tableau =
            MultisetTableau::from_json(&value).map_err(|e| UsageError(format!("{path}: {e}")))?;
        return match tableau.validate() {
            Ok(()) => {
                println!("ok");
                Ok(EXIT_OK)
            }
            Err(violation) => {
                println!("invalid: {violation}");
                Ok(EXIT_VERIFICATION_FAILED)
            }
        };
    }

    let shape = flags
        .partition("shape")?
        .ok_or_else(|| UsageError("--shape is required".into()))?;
    let component = {
        // n defaults to the shape size for this command
        let alpha = flags.vector_or("alpha", Vec::new())?;
        let beta = flags.vector_or("beta", Vec::new())?;
        supersym::combinat::DegreeVector::new(alpha, beta)
    };
    let tableaux = tableaux::enumerate(&shape, &component);
    match flags.format()? {
        Format::Json => {
            let listed: Vec<serde_json::Value> = if flags.switch("count-only") {
                Vec::new()
            } else {
                tableaux.iter().map(|t| t.to_json()).collect()
            };
            println!(
                "{}",
                serde_json::json!({
                    "shape": shape.parts(),
                    "alpha": component.alpha,
                    "beta": component.beta,
                    "count": tableaux.len(),
                    "tableaux": listed,
                })
            );
        }
        Format::Text => {
            println!("{} tableaux of shape {shape}", tableaux.len());
            if !flags.switch("count-only") {
                for t in &tableaux {
                    println!();
                    println!("{}", t.render());
                }
            }
        }
    }
    Ok(EXIT_OK)
}

/// `verify`: run the identity suites over a grid.
pub fn cmd_verify(flags: &Flags) -> Result<i32, UsageError> {
    let defaults = GridBounds::default();
    let bounds = GridBounds {
        max_n: flags.usize_or("max-n", defaults.max_n)?,
        max_m: flags.usize_or("max-m", defaults.max_m)?,
        max_m_bar: flags.usize_or("max-mbar", defaults.max_m_bar)?,
        max_weight: flags.usize_or("max-weight", defaults.max_weight)?,
        max_mu: flags.usize_or("max-mu", defaults.max_mu)?,
    };
    let jobs = flags.usize_or("jobs", 1)?;
    let results = run_all_suites(&bounds, jobs);
    let ok = results.iter().all(|r| r.ok());
    match flags.format()? {
        Format::Json => {
            let suites: Vec<serde_json::Value> = results
                .iter()
                .map(|r| {
                    serde_json::json!({
                        "name": r.name,
                        "cases": r.cases,
                        "failures": r.failures,
                    })
                })
                .collect();
            println!(
                "{}",
                serde_json::json!({
                    "bounds": {
                        "max_n": bounds.max_n,
                        "max_m": bounds.max_m,
                        "max_mbar": bounds.max_m_bar,
                        "max_weight": bounds.max_weight,
                        "max_mu": bounds.max_mu,
                    },
                    "suites": suites,
                    "ok": ok,
                })
            );
        }
        Format::Text => {
            for r in &results {
                let status = if r.ok() { "pass" } else { "FAIL" };
                println!("{status}  {:<24} {} cases", r.name, r.cases);
                for f in &r.failures {
                    println!("      {f}");
                }
            }
            println!(
                "{}",
                if ok {
                    "all suites passed"
                } else {
                    "FAILURES FOUND"
                }
            );
        }
    }
    Ok(if ok {
        EXIT_OK
    } else {
        EXIT_VERIFICATION_FAILED
    })
}

/// `invariants`: count, span, reduce, relations.
pub fn cmd_invariants(flags: &Flags) -> Result<i32, UsageError> {
    let action = flags
        .positional
        .first()
        .map(String::as_str)
        .ok_or_else(|| {
            UsageError("invariants needs an action: count, span, reduce or relations".into())
        })?;
    match action {
        "count" => {
            let component = Component::from_flags(flags)?;
            let count = count_invariants(component.n, &component.content);
            match flags.format()? {
                Format::Json => println!(
                    "{}",
                    serde_json::json!({"component": component.json(), "dimension": count})
                ),
                Format::Text => println!("{count}"),
            }
            Ok(EXIT_OK)
        }
        "span" => {
            let component = Component::from_flags(flags)?;
            let dims = Dims::new(component.n, component.m, component.m_bar);
            let report = verify_spanning(component.n, &component.content, dims);
            match flags.format()? {
                Format::Json => println!(
                    "{}",
                    serde_json::json!({
                        "component": component.json(),
                        "dimension": report.expected_dimension,
                        "rank": report.basis_rank,
                        "generated_rank": report.generated_rank,
                        "generators_used": report
                            .generators_used
                            .iter()
                            .map(|s| s.to_string())
                            .collect::<Vec<_>>(),
                        "ok": report.ok(),
                    })
                ),
                Format::Text => println!("{report}"),
            }
            Ok(if report.ok() {
                EXIT_OK
            } else {
                EXIT_VERIFICATION_FAILED
            })
        }
        "reduce" => {
            let n = flags.require_usize("n")?;
            let raw = flags
                .get("multiset")
                .or_else(|| flags.get("S"))
                .ok_or_else(|| UsageError("reduce needs --multiset {..}".into()))?;
            let s: Multiset = raw
                .parse()
                .map_err(|e| UsageError(format!("--multiset: {e}")))?;
            if let (Some(m), Some(m_bar)) = (flags.get("m"), flags.get("mbar")) {
                let alphabet = supersym::combinat::Alphabet::new(
                    m.parse()
                        .map_err(|_| UsageError("--m expects an integer".into()))?,
                    m_bar
                        .parse()
                        .map_err(|_| UsageError("--mbar expects an integer".into()))?,
                );
                if !alphabet.admits(&s) {
                    return Err(UsageError(format!(
                        "{s} uses letters outside the declared alphabet"
                    )));
                }
            }
            let reduced = reduce_power_sum(&s, n).map_err(|e| UsageError(e.to_string()))?;
            let (nf, applied) = normal_form(&PExpression::symbol(&s), n);
            match flags.format()? {
                Format::Json => println!(
                    "{}",
                    serde_json::json!({
                        "n": n,
                        "multiset": s.to_string(),
                        "reduction": reduced.to_string(),
                        "normal_form": nf.to_string(),
                        "reductions_applied": applied.iter().map(|m| m.to_string()).collect::<Vec<_>>(),
                        "parts_bounded": nf.max_part_size() <= n,
                    })
                ),
                Format::Text => {
                    println!("p{s} = {reduced}");
                    if nf != reduced {
                        println!("normal form: {nf}");
                    }
                }
            }
            Ok(EXIT_OK)
        }
        "relations" => {
            let n = flags.usize_or("n", 3)?;
            let m = flags.usize_or("m", 2)?;
            let m_bar = flags.usize_or("mbar", 2)?;
            let max_size = flags.usize_or("max-size", 3)?;
            let report = check_relations(Dims::new(n, m, m_bar), max_size);
            match flags.format()? {
                Format::Json => println!(
                    "{}",
                    serde_json::json!({
                        "cases": report.cases,
                        "failures": report.failures,
                        "ok": report.ok(),
                    })
                ),
                Format::Text => {
                    println!(
                        "{} relation checks: {}",
                        report.cases,
                        if report.ok() { "all hold" } else { "FAILURES" }
                    );
                    for f in &report.failures {
                        println!("  {f}");
                    }
                }
            }
            Ok(if report.ok() {
                EXIT_OK
            } else {
                EXIT_VERIFICATION_FAILED
            })
        }
        other => Err(UsageError(format!(
            "unknown invariants action {other:?} (want count, span, reduce or relations)"
        ))),
    }
}
