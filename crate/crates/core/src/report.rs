//! The JSON report document (schema version 1).
//!
//! Reports never contain floating-point values: characteristic polynomial
//! coefficients are decimal strings, eigenvalue bounds are exact rational
//! pairs, and everything else is integers, booleans, or text. The input
//! descriptor carries a SHA-256 of the canonical form, so isomorphic inputs
//! hash identically regardless of labelling or source format.

use num_rational::BigRational;
use serde::Serialize;
use sha2::{Digest, Sha256};

use crate::canon::canonical_form;
use crate::graph::Graph;
use crate::pipeline::ClassificationVerdict;
use crate::regularity::{RegularityReport, WitnessRecord};
use crate::roots::RootInterval;
use crate::spectrum::Spectrum;

pub const SCHEMA_VERSION: u32 = 1;

/// An exact rational as a pair of decimal strings.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RationalString {
    pub numerator: String,
    pub denominator: String,
}

impl RationalString {
    pub fn of(r: &BigRational) -> Self {
        RationalString {
            numerator: r.numer().to_string(),
            denominator: r.denom().to_string(),
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct InputDescriptor {
    /// Where the graph came from: a file path, `-` for standard input, or
    /// `constructed:<family>` for built-in families.
    pub source: String,
    pub format: String,
    pub vertices: usize,
    pub edges: usize,
    /// SHA-256 over the canonical form bytes, hex-encoded; a labelling-
    /// independent fingerprint of the isomorphism class.
    pub canonical_sha256: String,
}

impl InputDescriptor {
    pub fn new(source: impl Into<String>, format: impl Into<String>, g: &Graph) -> Self {
        InputDescriptor {
            source: source.into(),
            format: format.into(),
            vertices: g.n(),
            edges: g.edge_count(),
            canonical_sha256: canonical_hash(g),
        }
    }
}

/// Hex SHA-256 of the canonical form bytes.
pub fn canonical_hash(g: &Graph) -> String {
    let form = canonical_form(g);
    let digest = Sha256::digest(form.bytes());
    digest.iter().map(|b| format!("{b:02x}")).collect()
}

/// One distinct eigenvalue: an isolating interval with exact rational
/// endpoints, the exact value when the eigenvalue is rational, and the
/// multiplicity.
#[derive(Clone, Debug, Serialize)]
pub struct EigenvalueEntry {
    pub lower: RationalString,
    pub upper: RationalString,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub exact: Option<RationalString>,
    pub multiplicity: usize,
}

impl EigenvalueEntry {
    fn of(root: &RootInterval, multiplicity: usize) -> Self {
        EigenvalueEntry {
            lower: RationalString::of(root.lo()),
            upper: RationalString::of(root.hi()),
            exact: root.exact_value().map(RationalString::of),
            multiplicity,
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct SpectrumSection {
    /// Coefficients of the characteristic polynomial in ascending degree
    /// order, as decimal strings (they overflow i64 well before n = 40).
    pub char_poly_coefficients: Vec<String>,
    pub distinct_count: usize,
    /// Distinct eigenvalues in descending order.
    pub eigenvalues: Vec<EigenvalueEntry>,
}

impl SpectrumSection {
    pub fn of(spectrum: &Spectrum) -> Self {
        SpectrumSection {
            char_poly_coefficients: spectrum
                .char_poly()
                .coeffs()
                .iter()
                .map(|c| c.to_string())
                .collect(),
            distinct_count: spectrum.distinct_count(),
            eigenvalues: spectrum
                .entries()
                .iter()
                .map(|e| EigenvalueEntry::of(&e.value, e.multiplicity))
                .collect(),
        }
    }
}

/// The versioned report emitted by `--json`. Sections are present only
/// when the invoked command produced them.
#[derive(Clone, Debug, Serialize)]
pub struct ReportDocument {
    pub schema_version: u32,
    pub input: InputDescriptor,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub regularity: Option<RegularityReport>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub spectrum: Option<SpectrumSection>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub verdicts: Option<Vec<ClassificationVerdict>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witnesses: Option<Vec<WitnessRecord>>,
}

impl ReportDocument {
    pub fn new(input: InputDescriptor) -> Self {
        ReportDocument {
            schema_version: SCHEMA_VERSION,
            input,
            regularity: None,
            spectrum: None,
            verdicts: None,
            witnesses: None,
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report types serialize infallibly")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::pipeline::classify_theorem_1_3;
    use crate::regularity::analyze;

    fn sample_report(g: &Graph) -> ReportDocument {
        let regularity = analyze(g).unwrap();
        let mut doc = ReportDocument::new(InputDescriptor::new("test", "constructed", g));
        doc.witnesses = Some(regularity.witnesses.clone());
        doc.regularity = Some(regularity);
        doc.spectrum = Some(SpectrumSection::of(&Spectrum::of(g).unwrap()));
        doc.verdicts = Some(vec![classify_theorem_1_3(g)]);
        doc
    }

    #[test]
    fn report_has_no_floating_point_values() {
        let doc = sample_report(&Graph::grid(4, 3));
        let json = doc.to_json();
        let value: serde_json::Value = serde_json::from_str(&json).unwrap();
        assert_no_floats(&value);
        // Sanity on content: the charpoly constant term of grid(4,3).
        assert!(json.contains("char_poly_coefficients"));
    }

    fn assert_no_floats(v: &serde_json::Value) {
        match v {
            serde_json::Value::Number(n) => {
                assert!(
                    n.is_u64() || n.is_i64(),
                    "found non-integer number {n} in report"
                );
            }
            serde_json::Value::Array(xs) => xs.iter().for_each(assert_no_floats),
            serde_json::Value::Object(m) => m.values().for_each(assert_no_floats),
            _ => {}
        }
    }

    #[test]
    fn canonical_hash_is_labelling_invariant() {
        let g = Graph::grid(4, 3);
        let mut edges = Vec::new();
        for (u, v) in g.edges() {
            edges.push(((5 * u + 3) % 12, (5 * v + 3) % 12));
        }
        let h = Graph::from_edge_list(12, &edges).unwrap();
        assert_eq!(canonical_hash(&g), canonical_hash(&h));
        assert_ne!(canonical_hash(&g), canonical_hash(&Graph::cycle(12)));
        // 64 hex characters.
        assert_eq!(canonical_hash(&g).len(), 64);
    }

    #[test]
    fn eigenvalue_entries_expose_exact_rationals_when_available() {
        let doc = sample_report(&Graph::petersen());
        let spec = doc.spectrum.unwrap();
        // Petersen: 3, 1, -2, all rational.
        assert_eq!(spec.distinct_count, 3);
        for e in &spec.eigenvalues {
            let exact = e.exact.as_ref().expect("integer eigenvalue");
            assert_eq!(exact.denominator, "1");
        }
        assert_eq!(spec.eigenvalues[0].exact.as_ref().unwrap().numerator, "3");
        assert_eq!(spec.eigenvalues[2].exact.as_ref().unwrap().numerator, "-2");
        assert_eq!(spec.eigenvalues[2].multiplicity, 4);

        // The pentagon has two irrational eigenvalues; their entries carry
        // bounds only.
        let doc = sample_report(&Graph::cycle(5));
        let spec = doc.spectrum.unwrap();
        assert!(spec.eigenvalues[1].exact.is_none());
        assert!(spec.eigenvalues[1].lower.denominator.parse::<u64>().unwrap() >= 1);
    }

    #[test]
    fn empty_sections_are_omitted() {
        let g = Graph::cycle(5);
        let doc = ReportDocument::new(InputDescriptor::new("-", "graph6", &g));
        let json = doc.to_json();
        assert!(!json.contains("regularity"));
        assert!(!json.contains("spectrum"));
        assert!(!json.contains("verdicts"));
        assert!(json.contains("schema_version"));
        assert!(json.contains("canonical_sha256"));
    }
}
