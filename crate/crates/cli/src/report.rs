//! Machine-readable reports.
//!
//! Every invocation emits one self-contained JSON document with a fixed
//! key order: `command`, `inputs`, `results`, `verdict`. All maps indexed
//! by divisors iterate ascending, and nothing in a report depends on time
//! or environment, so identical invocations are byte-identical. Exact
//! rationals are rendered as lowest-terms `"p/q"` strings; integer-valued
//! rationals drop the `"/1"`. Arbitrary-precision integers (the power
//! spectrum values) are rendered as decimal strings.

use std::collections::BTreeMap;

use serde::Serialize;
use ztile_core::Rational;

/// Envelope shared by all subcommands.
#[derive(Serialize)]
pub struct Report<I: Serialize, R: Serialize> {
    pub command: &'static str,
    pub inputs: I,
    pub results: R,
    pub verdict: String,
}

impl<I: Serialize, R: Serialize> Report<I, R> {
    /// The full document, or just the verdict line under `--quiet`.
    pub fn render(&self, quiet: bool) -> String {
        if quiet {
            self.verdict.clone()
        } else {
            serde_json::to_string_pretty(self).expect("report serialization cannot fail")
        }
    }
}

/// Lowest-terms rendering; integer values are printed without `/1`.
pub fn rational_str(x: &Rational) -> String {
    if x.is_integer() {
        x.numer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

// ---------------------------------------------------------------- inputs

#[derive(Serialize)]
pub struct VerifyInputs {
    pub a: String,
    pub b: String,
    pub modulus: u64,
}

#[derive(Serialize)]
pub struct ConditionsInputs {
    pub a: String,
}

#[derive(Serialize)]
pub struct IdentityInputs {
    pub a: String,
    pub b: String,
    pub modulus: u64,
}

#[derive(Serialize)]
pub struct ConstantInputs {
    pub a: String,
    pub b: String,
    pub modulus: u64,
    pub level: u64,
    pub point: Option<i64>,
}

#[derive(Serialize)]
pub struct SearchInputs {
    pub a: String,
    pub max_modulus: u64,
    pub limit: usize,
}

#[derive(Serialize)]
pub struct Theorem1Inputs {
    pub a: String,
    pub b: String,
    pub p: u64,
    pub q: u64,
    pub r: u64,
}

#[derive(Serialize)]
pub struct CorpusInputs {
    pub max_modulus: u64,
    pub output: String,
}

#[derive(Serialize)]
pub struct DecomposeInputs {
    pub a: String,
    pub b: String,
    pub modulus: u64,
    pub prime: u64,
}

// --------------------------------------------------------------- results

#[derive(Serialize)]
pub struct SandsJson {
    pub divisors_a: Vec<u64>,
    pub divisors_b: Vec<u64>,
    pub shared: Vec<u64>,
    pub disjoint: bool,
    pub product_is_modulus: bool,
    pub implies_tiling: bool,
}

#[derive(Serialize)]
pub struct VerifyResults {
    /// Direct counting verdict.
    pub direct: bool,
    /// Mask-polynomial verdict (always agrees with `direct`).
    pub polynomial: bool,
    pub sands: SandsJson,
}

#[derive(Serialize)]
pub struct T1Json {
    pub holds: bool,
    pub cardinality: u64,
    pub support_product: u64,
}

#[derive(Serialize)]
pub struct T2Json {
    pub holds: bool,
    pub witnesses: Vec<u128>,
}

#[derive(Serialize)]
pub struct ConditionsResults {
    /// Prime powers `s` with `Φ_s` dividing the mask polynomial.
    pub support: Vec<u64>,
    pub t1: T1Json,
    pub t2: T2Json,
}

#[derive(Serialize)]
pub struct IdentityResults {
    pub difference_spectrum_a: BTreeMap<u64, u64>,
    pub difference_spectrum_b: BTreeMap<u64, u64>,
    pub power_spectrum_a: BTreeMap<u64, String>,
    pub power_spectrum_b: BTreeMap<u64, String>,
    pub lhs: String,
    pub rhs: String,
    pub equal: bool,
}

#[derive(Serialize)]
pub struct PointValue {
    pub c: i64,
    pub value: String,
}

#[derive(Serialize)]
pub struct ConstantResults {
    pub values: Vec<PointValue>,
    pub constant: bool,
    /// The common value when `constant` is true and any point was admissible.
    pub value: Option<String>,
}

#[derive(Serialize)]
pub struct FoundComplement {
    pub modulus: u64,
    pub b: String,
}

#[derive(Serialize)]
pub struct SearchResults {
    pub complements: Vec<FoundComplement>,
    pub count: usize,
}

#[derive(Serialize)]
pub struct Theorem1Results {
    pub divides_p: bool,
    pub divides_q: bool,
    pub divides_r: bool,
    pub divides_pq: bool,
    pub divides_pr: bool,
    pub divides_qr: bool,
    pub divides_pqr: bool,
    pub hypotheses_hold: bool,
    pub conclusion_holds: bool,
    pub consistent: bool,
}

#[derive(Serialize)]
pub struct CorpusResults {
    pub records: u64,
    pub output: String,
}

#[derive(Serialize)]
pub struct DecomposeResults {
    pub prime: u64,
    pub parts: Vec<String>,
    pub offsets: Vec<i64>,
    pub reduced_parts: Vec<String>,
    pub reduced_complement: String,
    pub reduced_modulus: u64,
    pub equal_part_sizes: bool,
    pub parts_tile: bool,
    pub equal_supports: bool,
    pub support_recomposition: bool,
    pub all_valid: bool,
}

/// One line of a corpus file.
#[derive(Serialize)]
pub struct CorpusRecord {
    pub modulus: u64,
    pub a: String,
    pub b: String,
    pub support_a: Vec<u64>,
    pub support_b: Vec<u64>,
    pub t1_a: bool,
    pub t2_a: bool,
    pub t1_b: bool,
    pub t2_b: bool,
}

#[cfg(test)]
mod tests {
    use super::*;
    use ztile_core::rational;

    #[test]
    fn rational_rendering() {
        assert_eq!(rational_str(&rational(3, 2)), "3/2");
        assert_eq!(rational_str(&rational(4, 2)), "2");
        assert_eq!(rational_str(&rational(-3, 6)), "-1/2");
        assert_eq!(rational_str(&rational(0, 5)), "0");
    }

    #[test]
    fn envelope_key_order_is_fixed() {
        let report = Report {
            command: "conditions",
            inputs: ConditionsInputs { a: "{0}".to_string() },
            results: ConditionsResults {
                support: vec![],
                t1: T1Json { holds: true, cardinality: 1, support_product: 1 },
                t2: T2Json { holds: true, witnesses: vec![] },
            },
            verdict: "conditions-hold".to_string(),
        };
        let text = report.render(false);
        let command_at = text.find("\"command\"").unwrap();
        let inputs_at = text.find("\"inputs\"").unwrap();
        let results_at = text.find("\"results\"").unwrap();
        let verdict_at = text.find("\"verdict\"").unwrap();
        assert!(command_at < inputs_at && inputs_at < results_at && results_at < verdict_at);
        assert_eq!(report.render(true), "conditions-hold");
    }

    #[test]
    fn wide_witnesses_serialize() {
        let t2 = T2Json { holds: false, witnesses: vec![u128::from(u64::MAX) * 3] };
        let text = serde_json::to_string(&t2).unwrap();
        assert!(text.contains("55340232221128654845"));
    }
}
