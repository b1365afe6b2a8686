//! Machine-readable reports.
//!
//! Floats are printed with 17 significant digits so that serialized reports
//! round-trip losslessly and can double as regression fixtures. A check is
//! stored in already-slacked form: the permitted slack is folded into `rhs`
//! when the check is built, so `pass == (lhs <= rhs)` holds exactly on the
//! stored fields.

use std::collections::BTreeMap;
use std::io;

use serde::{Deserialize, Serialize};

use crate::fdiv::DragomirBounds;

/// One inequality `lhs ≤ rhs`, with slack already folded into `rhs`.
#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
pub struct Check {
    pub name: String,
    pub lhs: f64,
    pub rhs: f64,
    pub pass: bool,
}

impl Check {
    /// `lhs ≤ rhs` with relative slack `1e-9·max(1, |scale|)` folded in.
    pub fn leq(name: impl Into<String>, lhs: f64, rhs: f64, scale: f64) -> Self {
        let rhs = rhs + 1e-9 * scale.abs().max(1.0);
        Self {
            name: name.into(),
            lhs,
            rhs,
            pass: lhs <= rhs,
        }
    }

    /// `residual ≤ tolerance`, with no extra slack.
    pub fn residual(name: impl Into<String>, residual: f64, tolerance: f64) -> Self {
        Self {
            name: name.into(),
            lhs: residual,
            rhs: tolerance,
            pass: residual <= tolerance,
        }
    }

    /// A check recorded as skipped (trivially passing), e.g. certificates on
    /// a degenerate pair.
    pub fn skipped(name: impl Into<String>) -> Self {
        Self {
            name: name.into(),
            lhs: 0.0,
            rhs: 0.0,
            pass: true,
        }
    }

    /// How far the check is from failing; negative excess means it passes.
    pub fn excess(&self) -> f64 {
        self.lhs - self.rhs
    }
}

/// Value/E/A/B for one measure, as stored in a report.
#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
pub struct BoundsEntry {
    pub value: f64,
    pub e: f64,
    pub a: f64,
    pub b: Option<f64>,
}

impl From<DragomirBounds> for BoundsEntry {
    fn from(b: DragomirBounds) -> Self {
        Self {
            value: b.value,
            e: b.e,
            a: b.a,
            b: b.b,
        }
    }
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
pub struct Metadata {
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub r: Option<f64>,
    #[serde(rename = "R", skip_serializing_if = "Option::is_none", default)]
    pub big_r: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub n: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub seed: Option<u64>,
    pub version: String,
}

impl Metadata {
    pub fn new() -> Self {
        Self {
            r: None,
            big_r: None,
            n: None,
            seed: None,
            version: env!("CARGO_PKG_VERSION").to_string(),
        }
    }

    pub fn for_pair(pair: &crate::simplex::DistributionPair) -> Self {
        Self {
            r: Some(pair.ratio_min()),
            big_r: Some(pair.ratio_max()),
            n: Some(pair.len()),
            ..Self::new()
        }
    }
}

impl Default for Metadata {
    fn default() -> Self {
        Self::new()
    }
}

/// The report emitted by every command: measure values, bound bundles,
/// checks, and run metadata.
#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Default)]
pub struct Report {
    #[serde(skip_serializing_if = "BTreeMap::is_empty", default)]
    pub measures: BTreeMap<String, f64>,
    #[serde(skip_serializing_if = "BTreeMap::is_empty", default)]
    pub bounds: BTreeMap<String, BoundsEntry>,
    #[serde(skip_serializing_if = "Vec::is_empty", default)]
    pub checks: Vec<Check>,
    #[serde(default)]
    pub metadata: Metadata,
}

impl Report {
    pub fn all_pass(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }

    pub fn to_json(&self) -> String {
        to_json_string(self)
    }

    pub fn from_json(text: &str) -> Result<Self, serde_json::Error> {
        serde_json::from_str(text)
    }
}

struct SigDigitFormatter;

impl serde_json::ser::Formatter for SigDigitFormatter {
    fn write_f64<W>(&mut self, writer: &mut W, value: f64) -> io::Result<()>
    where
        W: ?Sized + io::Write,
    {
        write!(writer, "{value:.16e}")
    }
}

/// Serialize with 17-significant-digit floats (lossless f64 round-trip).
pub fn to_json_string<T: Serialize>(value: &T) -> String {
    let mut out = Vec::new();
    let mut ser = serde_json::Serializer::with_formatter(&mut out, SigDigitFormatter);
    value
        .serialize(&mut ser)
        .expect("report serialization cannot fail");
    String::from_utf8(out).expect("serializer emits UTF-8")
}

/// The float form used in CSV output, matching the JSON precision.
pub fn format_value(value: f64) -> String {
    format!("{value:.16e}")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sample_report() -> Report {
        let mut measures = BTreeMap::new();
        measures.insert("chi2".to_string(), 1.0 / 3.0);
        measures.insert("kl".to_string(), 0.143_841_036_225_890_46);
        let mut bounds = BTreeMap::new();
        bounds.insert(
            "chi2".to_string(),
            BoundsEntry {
                value: 1.0 / 3.0,
                e: 2.0 / 3.0,
                a: 8.0 / 9.0,
                b: Some(1.0 / 3.0),
            },
        );
        bounds.insert(
            "kl".to_string(),
            BoundsEntry {
                value: 0.0,
                e: 0.0,
                a: 0.0,
                b: None,
            },
        );
        Report {
            measures,
            bounds,
            checks: vec![
                Check::leq("bounds.chi2.value_le_e", 1.0 / 3.0, 2.0 / 3.0, 8.0 / 9.0),
                Check::residual("identity.j_kl_sum", 1.1e-17, 1e-12),
            ],
            metadata: Metadata {
                r: Some(2.0 / 3.0),
                big_r: Some(2.0),
                n: Some(2),
                seed: None,
                ..Metadata::new()
            },
        }
    }

    #[test]
    fn json_round_trips_exactly() {
        let report = sample_report();
        let text = report.to_json();
        let parsed = Report::from_json(&text).unwrap();
        assert_eq!(parsed, report);
        // And byte-for-byte on re-serialization.
        assert_eq!(parsed.to_json(), text);
    }

    #[test]
    fn floats_survive_17_digit_printing() {
        for &v in &[
            1.0 / 3.0,
            2.0 / 15.0,
            0.274_653_072_167_027_42,
            1e-300,
            123_456_789.123_456_78,
            -0.0,
            5.0,
        ] {
            let text = format_value(v);
            let back: f64 = text.parse().unwrap();
            assert_eq!(back.to_bits(), v.to_bits(), "{v} -> {text} -> {back}");
        }
    }

    #[test]
    fn check_constructors_apply_slack_policy() {
        // leq folds slack into rhs, so a hairline violation still passes...
        let c = Check::leq("x", 1.0 + 1e-12, 1.0, 1.0);
        assert!(c.pass);
        // ...but a real violation does not.
        let c = Check::leq("x", 1.0 + 1e-6, 1.0, 1.0);
        assert!(!c.pass);
        assert!(c.excess() > 0.0);
        // residual comparisons are exact.
        let c = Check::residual("x", 2e-12, 1e-12);
        assert!(!c.pass);
    }

    #[test]
    fn pass_flags_match_stored_fields() {
        let report = sample_report();
        for c in &report.checks {
            assert_eq!(c.pass, c.lhs <= c.rhs, "{}", c.name);
        }
    }
}
