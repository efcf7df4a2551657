//! Bundled worked examples with their recorded results.

use std::fmt::Write as _;

use quasif_core::construct::PartitionSpec;
use quasif_core::{
    construct_with, facet_complex, hilbert_function_from_fvector, hilbert_series_from_fvector, is_f_ideal,
    quasi_type, stanley_reisner_complex, type_bounds, Ideal, Monomial, Result,
};
use serde::Deserialize;
use serde_json::{json, Value};

use crate::Report;

const BUNDLED: &str = include_str!("../fixtures/examples.json");

#[derive(Debug, Clone, Deserialize)]
pub struct Fixture {
    pub id: String,
    /// `published` when the values appear in print, `recomputed` otherwise.
    pub origin: String,
    pub note: String,
    pub n: usize,
    #[serde(default)]
    pub generators: Option<Vec<Vec<usize>>>,
    #[serde(default)]
    pub construct: Option<ConstructRecipe>,
    pub expect: Expected,
}

#[derive(Debug, Clone, Deserialize)]
pub struct ConstructRecipe {
    pub b: i64,
    pub part: Vec<usize>,
    pub padding: Vec<Vec<usize>>,
}

#[derive(Debug, Clone, Default, Deserialize)]
pub struct Expected {
    pub is_f_ideal: Option<bool>,
    #[serde(rename = "type")]
    pub quasi_type: Option<Vec<i64>>,
    pub facet_fvector: Option<Vec<u64>>,
    pub nonface_fvector: Option<Vec<u64>>,
    pub generator_count: Option<usize>,
    pub bounds: Option<(i64, i64)>,
    pub series_terms: Option<String>,
    pub hilbert_function: Option<Vec<(i64, u128)>>,
}

pub fn bundled() -> Vec<Fixture> {
    serde_json::from_str(BUNDLED).expect("bundled fixtures parse")
}

#[derive(Debug, Clone)]
pub struct FixtureResult {
    pub id: String,
    pub origin: String,
    pub mismatches: Vec<String>,
}

impl FixtureResult {
    pub fn passed(&self) -> bool {
        self.mismatches.is_empty()
    }
}

#[derive(Debug, Clone)]
pub struct FixtureReport {
    pub results: Vec<FixtureResult>,
}

impl FixtureReport {
    pub fn failed(&self) -> usize {
        self.results.iter().filter(|r| !r.passed()).count()
    }

    pub fn to_report(&self) -> Report {
        let mut text = String::new();
        for r in &self.results {
            let status = if r.passed() { "PASS" } else { "FAIL" };
            writeln!(text, "{status} {} [{}]", r.id, r.origin).unwrap();
            for m in &r.mismatches {
                writeln!(text, "  {m}").unwrap();
            }
        }
        let json = json!({
            "passed": self.results.len() - self.failed(),
            "failed": self.failed(),
            "fixtures": self.results.iter().map(|r| json!({
                "id": r.id,
                "origin": r.origin,
                "passed": r.passed(),
                "mismatches": r.mismatches,
            })).collect::<Vec<Value>>(),
        });
        Report { text, json }
    }
}

pub fn run_fixtures() -> FixtureReport {
    FixtureReport { results: bundled().iter().map(check_fixture).collect() }
}

pub fn check_fixture(fixture: &Fixture) -> FixtureResult {
    let mismatches = match compare(fixture) {
        Ok(m) => m,
        Err(e) => vec![format!("error[{}]: {e}", e.name())],
    };
    FixtureResult { id: fixture.id.clone(), origin: fixture.origin.clone(), mismatches }
}

fn expect_eq<T: PartialEq + std::fmt::Debug>(what: &str, got: T, want: &Option<T>, out: &mut Vec<String>) {
    if let Some(want) = want {
        if &got != want {
            out.push(format!("{what}: computed {got:?}, recorded {want:?}"));
        }
    }
}

fn fixture_ideal(fixture: &Fixture) -> Result<Ideal> {
    let n = fixture.n;
    if let Some(recipe) = &fixture.construct {
        let spec = PartitionSpec::from_indices(n, &recipe.part)?;
        let padding = recipe
            .padding
            .iter()
            .map(|p| Monomial::from_indices(p, n))
            .collect::<Result<Vec<_>>>()?;
        return Ok(construct_with(n, recipe.b, Some(spec), Some(padding))?.ideal);
    }
    Ideal::from_index_lists(n, fixture.generators.as_deref().unwrap_or_default())
}

fn compare(fixture: &Fixture) -> Result<Vec<String>> {
    let want = &fixture.expect;
    let ideal = fixture_ideal(fixture)?;
    let mut out = Vec::new();
    let outcome = quasi_type(&ideal)?;
    expect_eq("type", outcome.quasi_type().map(|t| t.entries().to_vec()), &want.quasi_type.clone().map(Some), &mut out);
    expect_eq("is_f_ideal", is_f_ideal(&ideal)?, &want.is_f_ideal, &mut out);
    expect_eq("facet f-vector", facet_complex(&ideal)?.f_vector()?.entries().to_vec(), &want.facet_fvector, &mut out);
    let nonface = stanley_reisner_complex(&ideal)?.f_vector()?;
    expect_eq("nonface f-vector", nonface.entries().to_vec(), &want.nonface_fvector, &mut out);
    expect_eq("generator count", ideal.generators().len(), &want.generator_count, &mut out);
    if want.bounds.is_some() {
        expect_eq("bounds", type_bounds(fixture.n)?, &want.bounds, &mut out);
    }
    expect_eq(
        "series",
        hilbert_series_from_fvector(&nonface).term_sum_string(),
        &want.series_terms,
        &mut out,
    );
    for &(m, value) in want.hilbert_function.iter().flatten() {
        expect_eq(&format!("H({m})"), hilbert_function_from_fvector(&nonface, m)?, &Some(value), &mut out);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bundled_fixtures_all_pass() {
        let report = run_fixtures();
        assert_eq!(report.results.len(), 4);
        for r in &report.results {
            assert!(r.passed(), "{}: {:?}", r.id, r.mismatches);
        }
    }

    #[test]
    fn every_fixture_records_origin() {
        for f in bundled() {
            assert!(matches!(f.origin.as_str(), "published" | "recomputed"), "{}", f.id);
            assert!(!f.note.is_empty());
        }
    }

    #[test]
    fn altered_expectation_is_reported() {
        let mut f = bundled().remove(0);
        f.expect.facet_fvector = Some(vec![5, 8, 3]);
        let r = check_fixture(&f);
        assert_eq!(r.mismatches.len(), 1);
        assert!(r.mismatches[0].starts_with("facet f-vector"));
    }
}
