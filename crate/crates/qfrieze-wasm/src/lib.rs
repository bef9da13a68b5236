//! Browser-facing wrappers around the core library.
//!
//! The exported operations mirror the command-line tool: compute a frieze
//! window, mutate the initial seed along a sequence, evaluate a continuant,
//! and run verification checks. Each operation is available as a JSON
//! document (schema `qfrieze-1`, identical to the CLI's `--format json`
//! output) and as preformatted text (identical to `--format text`).
//!
//! The functions in this module are ordinary Rust and compile and test on
//! any host target; the `#[wasm_bindgen]` layer in [`bindings`] only exists
//! when compiling for `wasm32`.

use qfrieze_core::continuant::ContinuantTable;
use qfrieze_core::frieze::frieze_of_variables;
use qfrieze_core::seed::QuantumSeed;
use qfrieze_core::verify::{run_suite, DEFAULT_CHECKS, OPTIONAL_CHECKS};
use qfrieze_core::{json, render};

fn require_even_rank(n: usize) -> Result<(), String> {
    if n < 2 || n % 2 != 0 {
        return Err(format!("the rank must be an even integer >= 2, got {n}"));
    }
    Ok(())
}

fn parse_sequence(seq: &str, n: usize) -> Result<Vec<usize>, String> {
    let mut dirs = Vec::new();
    for piece in seq.split(',').map(str::trim).filter(|p| !p.is_empty()) {
        let k: usize = piece
            .parse()
            .map_err(|_| format!("'{piece}' is not a mutation direction"))?;
        if k < 1 || k > n {
            return Err(format!("direction {k} lies outside 1..={n}"));
        }
        dirs.push(k);
    }
    Ok(dirs)
}

fn parse_checks(checks: &str) -> Result<Option<Vec<String>>, String> {
    let names: Vec<String> = checks
        .split(',')
        .map(str::trim)
        .filter(|p| !p.is_empty())
        .map(str::to_string)
        .collect();
    if names.is_empty() {
        return Ok(None);
    }
    let known: Vec<&str> = DEFAULT_CHECKS.iter().chain(OPTIONAL_CHECKS.iter()).copied().collect();
    if let Some(bad) = names.iter().find(|name| !known.contains(&name.as_str())) {
        return Err(format!("unknown check '{bad}'; valid checks: {}", known.join(", ")));
    }
    Ok(Some(names))
}

fn to_json(value: &serde_json::Value) -> String {
    serde_json::to_string(value).expect("documents serialize")
}

/// Frieze window as a `qfrieze-1` JSON document.
pub fn frieze_json(n: usize, j_min: i64, j_max: i64) -> Result<String, String> {
    require_even_rank(n)?;
    let grid = frieze_of_variables(n, j_min, j_max).map_err(|e| e.to_string())?;
    Ok(to_json(&json::grid_document(&grid)))
}

/// Frieze window as plain text, one `f(i, j) = …` line per entry.
pub fn frieze_text(n: usize, j_min: i64, j_max: i64) -> Result<String, String> {
    require_even_rank(n)?;
    let grid = frieze_of_variables(n, j_min, j_max).map_err(|e| e.to_string())?;
    Ok(render::frieze_text(&grid))
}

fn mutated_seed(n: usize, seq: &str) -> Result<QuantumSeed, String> {
    require_even_rank(n)?;
    let dirs = parse_sequence(seq, n)?;
    QuantumSeed::initial(n)
        .and_then(|s| s.mutate_sequence(&dirs))
        .map_err(|e| e.to_string())
}

/// Seed after a comma-separated mutation sequence, as JSON.
pub fn mutate_json(n: usize, seq: &str) -> Result<String, String> {
    Ok(to_json(&json::seed_document(&mutated_seed(n, seq)?)))
}

/// Seed after a comma-separated mutation sequence, as plain text.
pub fn mutate_text(n: usize, seq: &str) -> Result<String, String> {
    Ok(render::seed_text(&mutated_seed(n, seq)?))
}

fn continuant_table(n: usize, m: usize, i: usize) -> Result<ContinuantTable, String> {
    require_even_rank(n)?;
    let table = ContinuantTable::new(n).map_err(|e| e.to_string())?;
    table.get(m, i).map_err(|e| e.to_string())?;
    Ok(table)
}

/// One continuant `P(m, i)` as JSON.
pub fn continuant_json(n: usize, m: usize, i: usize) -> Result<String, String> {
    let table = continuant_table(n, m, i)?;
    let value = table.get(m, i).expect("validated");
    Ok(to_json(&json::continuant_document(n, m, i, value)))
}

/// One continuant `P(m, i)` as plain text.
pub fn continuant_text(n: usize, m: usize, i: usize) -> Result<String, String> {
    let table = continuant_table(n, m, i)?;
    let value = table.get(m, i).expect("validated");
    Ok(render::continuant_text(m, i, value))
}

/// Verification report as JSON; `checks` is a comma-separated list of
/// names, empty for the default suite.
pub fn verify_json(n: usize, checks: &str) -> Result<String, String> {
    require_even_rank(n)?;
    let filter = parse_checks(checks)?;
    let report = run_suite(n, filter.as_deref()).map_err(|e| e.to_string())?;
    Ok(to_json(&json::verification_document(&report)))
}

/// Verification report as plain text.
pub fn verify_text(n: usize, checks: &str) -> Result<String, String> {
    require_even_rank(n)?;
    let filter = parse_checks(checks)?;
    let report = run_suite(n, filter.as_deref()).map_err(|e| e.to_string())?;
    Ok(render::verification_text(&report))
}

/// All valid check names as a JSON array (defaults first).
pub fn available_checks() -> String {
    let names: Vec<&str> = DEFAULT_CHECKS.iter().chain(OPTIONAL_CHECKS.iter()).copied().collect();
    to_json(&serde_json::json!(names))
}

/// The `#[wasm_bindgen]` exports. Compiled only for `wasm32`; the wrapped
/// functions above carry all the logic and are tested on the host.
#[cfg(target_arch = "wasm32")]
mod bindings {
    use wasm_bindgen::prelude::*;

    #[wasm_bindgen]
    pub fn frieze_json(n: usize, j_min: i32, j_max: i32) -> Result<String, JsError> {
        crate::frieze_json(n, j_min.into(), j_max.into()).map_err(|e| JsError::new(&e))
    }

    #[wasm_bindgen]
    pub fn frieze_text(n: usize, j_min: i32, j_max: i32) -> Result<String, JsError> {
        crate::frieze_text(n, j_min.into(), j_max.into()).map_err(|e| JsError::new(&e))
    }

    #[wasm_bindgen]
    pub fn mutate_json(n: usize, seq: &str) -> Result<String, JsError> {
        crate::mutate_json(n, seq).map_err(|e| JsError::new(&e))
    }

    #[wasm_bindgen]
    pub fn mutate_text(n: usize, seq: &str) -> Result<String, JsError> {
        crate::mutate_text(n, seq).map_err(|e| JsError::new(&e))
    }

    #[wasm_bindgen]
    pub fn continuant_json(n: usize, m: usize, i: usize) -> Result<String, JsError> {
        crate::continuant_json(n, m, i).map_err(|e| JsError::new(&e))
    }

    #[wasm_bindgen]
    pub fn continuant_text(n: usize, m: usize, i: usize) -> Result<String, JsError> {
        crate::continuant_text(n, m, i).map_err(|e| JsError::new(&e))
    }

    #[wasm_bindgen]
    pub fn verify_json(n: usize, checks: &str) -> Result<String, JsError> {
        crate::verify_json(n, checks).map_err(|e| JsError::new(&e))
    }

    #[wasm_bindgen]
    pub fn verify_text(n: usize, checks: &str) -> Result<String, JsError> {
        crate::verify_text(n, checks).map_err(|e| JsError::new(&e))
    }

    #[wasm_bindgen]
    pub fn available_checks() -> String {
        crate::available_checks()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn frieze_json_matches_core_document() {
        let rendered = frieze_json(2, 0, 3).unwrap();
        let grid = frieze_of_variables(2, 0, 3).unwrap();
        let expected = serde_json::to_string(&json::grid_document(&grid)).unwrap();
        assert_eq!(rendered, expected);
    }

    #[test]
    fn frieze_text_lists_entries() {
        let text = frieze_text(2, 0, 1).unwrap();
        assert!(text.starts_with("n = 2, columns 0..=1\n"));
        assert!(text.contains("f(1, 1) = X^(-1,1) + X^(-1,0)\n"));
    }

    #[test]
    fn rank_validation() {
        assert!(frieze_json(3, 0, 1).unwrap_err().contains("even"));
        assert!(mutate_json(0, "").unwrap_err().contains("even"));
        assert!(verify_json(7, "").unwrap_err().contains("even"));
    }

    #[test]
    fn mutate_parses_sequences() {
        let doc: serde_json::Value =
            serde_json::from_str(&mutate_json(4, " 1, 2 ,3 ").unwrap()).unwrap();
        assert_eq!(doc["kind"], "seed");
        assert!(mutate_json(4, "1,5").unwrap_err().contains("outside"));
        assert!(mutate_json(4, "1,x").unwrap_err().contains("not a mutation direction"));
        let identity: serde_json::Value =
            serde_json::from_str(&mutate_json(2, "").unwrap()).unwrap();
        assert_eq!(identity["b"], serde_json::json!([[0, 1], [-1, 0]]));
    }

    #[test]
    fn continuant_text_matches_cli_rendering() {
        assert_eq!(
            continuant_text(2, 2, 1).unwrap(),
            "P(2, 1) = X^(0,-1) + X^(-1,0) + X^(-1,-1)\n"
        );
        assert!(continuant_json(2, 3, 1).unwrap_err().contains("outside"));
    }

    #[test]
    fn verify_runs_default_and_filtered_suites() {
        let doc: serde_json::Value = serde_json::from_str(&verify_json(2, "").unwrap()).unwrap();
        assert_eq!(doc["all_passed"], true);
        assert_eq!(doc["checks"].as_array().unwrap().len(), 10);
        let filtered: serde_json::Value =
            serde_json::from_str(&verify_json(2, "bijection").unwrap()).unwrap();
        assert_eq!(filtered["checks"].as_array().unwrap().len(), 1);
        assert!(verify_json(2, "nope").unwrap_err().contains("unknown check"));
    }

    #[test]
    fn check_catalogue_is_json() {
        let names: Vec<String> = serde_json::from_str(&available_checks()).unwrap();
        assert!(names.contains(&"frieze-relations".to_string()));
        assert!(names.contains(&"diagnostics".to_string()));
        assert_eq!(names.len(), 11);
    }
}
