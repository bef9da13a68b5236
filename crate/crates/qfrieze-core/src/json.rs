//! JSON documents for every value the tools emit.
//!
//! All documents carry `"schema": "qfrieze-1"`. Integer coefficients are
//! serialized as JSON numbers of unbounded precision (never floats or
//! strings), ν-polynomials as ascending `[exponent, coefficient]` pairs,
//! and torus elements as term lists in descending lexicographic order of
//! the exponent vector — the same canonical orders the `Display`
//! implementations use, so output is byte-identical across runs.

use std::str::FromStr;

use num_bigint::BigInt;
use serde_json::{json, Number, Value};

use crate::coefficients::NuPoly;
use crate::frieze::FriezeGrid;
use crate::seed::QuantumSeed;
use crate::torus::TorusElement;
use crate::verify::{Report, VerificationReport};

/// Schema identifier stamped on every top-level document.
pub const SCHEMA: &str = "qfrieze-1";

fn integer(value: &BigInt) -> Value {
    Value::Number(
        Number::from_str(&value.to_string()).expect("an integer literal is a valid JSON number"),
    )
}

/// `[[k, c_k], …]` with exponents ascending.
pub fn nu_poly_value(p: &NuPoly) -> Value {
    Value::Array(p.iter().map(|(k, c)| json!([k, integer(c)])).collect())
}

/// `[{"exp": [...], "coeff": [[k, c], …]}, …]` with exponent vectors in
/// descending lexicographic order.
pub fn torus_value(e: &TorusElement) -> Value {
    Value::Array(
        e.iter_desc()
            .map(|(exp, coeff)| {
                json!({
                    "exp": exp.as_slice(),
                    "coeff": nu_poly_value(coeff),
                })
            })
            .collect(),
    )
}

/// A frieze window: all populated entries in column-major order.
pub fn grid_document(grid: &FriezeGrid) -> Value {
    let entries: Vec<Value> = grid
        .entries()
        .map(|(c, value)| {
            json!({
                "i": c.i,
                "j": c.j,
                "value": torus_value(value),
            })
        })
        .collect();
    json!({
        "schema": SCHEMA,
        "kind": "frieze",
        "n": grid.rank(),
        "j_min": grid.j_min(),
        "j_max": grid.j_max(),
        "entries": entries,
    })
}

/// A seed: both matrices row-major plus the cluster.
pub fn seed_document(seed: &QuantumSeed) -> Value {
    json!({
        "schema": SCHEMA,
        "kind": "seed",
        "n": seed.rank(),
        "b": seed.exchange_matrix().rows(),
        "lambda": seed.lambda().rows(),
        "cluster": seed.cluster().iter().map(torus_value).collect::<Vec<_>>(),
    })
}

/// A single continuant value.
pub fn continuant_document(n: usize, m: usize, i: usize, value: &TorusElement) -> Value {
    json!({
        "schema": SCHEMA,
        "kind": "continuant",
        "n": n,
        "m": m,
        "i": i,
        "value": torus_value(value),
    })
}

fn report_value(report: &Report) -> Value {
    json!({
        "name": report.name(),
        "passed": report.passed(),
        "notes": report.notes(),
        "failures": report.failures(),
    })
}

/// A full verification run.
pub fn verification_document(report: &VerificationReport) -> Value {
    json!({
        "schema": SCHEMA,
        "kind": "verification",
        "n": report.rank(),
        "all_passed": report.all_passed(),
        "summary": report.summary(),
        "checks": report.checks().iter().map(report_value).collect::<Vec<_>>(),
    })
}
