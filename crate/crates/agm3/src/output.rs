//! Machine-readable output records for the command-line front end.
//!
//! JSON is emitted flat with snake_case keys in a fixed order and floats
//! printed with 17 significant digits, so a record survives a
//! parse/re-serialize round trip byte for byte. CSV carries the iteration
//! trace with columns n,a,b,c,kappa,lambda.

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::extended::{moduli_from_triple, MeanResult};
use crate::types::Triple;
use crate::verify::CrossCheck;

/// 17 significant digits: enough to reproduce any binary64 value exactly.
pub fn format_float(x: f64) -> String {
    format!("{x:.16e}")
}

/// One row of the iteration trace.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TraceRow {
    pub n: usize,
    pub a: f64,
    pub b: f64,
    pub c: f64,
    pub kappa: f64,
    pub lambda: f64,
}

/// Everything one command run reports: the input echo, the starting
/// moduli, the mean, and optionally residuals and the trace.
#[derive(Debug, Clone, PartialEq)]
pub struct OutputRecord {
    pub a: f64,
    pub b: f64,
    pub c: f64,
    pub kappa0: f64,
    pub lambda0: f64,
    pub mean: f64,
    pub iterations: usize,
    pub converged: bool,
    /// Present exactly when verification ran.
    pub residuals: Option<Vec<(String, f64)>>,
    /// Present exactly when a trace was requested.
    pub trace: Option<Vec<TraceRow>>,
}

/// Trace rows of a mean computation, ending with the converged state.
pub fn trace_rows(result: &MeanResult) -> Vec<TraceRow> {
    let mut rows: Vec<TraceRow> = result
        .trace
        .iter()
        .map(|s| TraceRow {
            n: s.index,
            a: s.triple.a(),
            b: s.triple.b(),
            c: s.triple.c(),
            kappa: s.moduli.kappa(),
            lambda: s.moduli.lambda(),
        })
        .collect();
    let last = result.final_state;
    let final_moduli = match result.trace.last() {
        Some(step) => step.next_moduli,
        None => moduli_from_triple(last).expect("converged state has moduli"),
    };
    rows.push(TraceRow {
        n: result.iterations,
        a: last.a(),
        b: last.b(),
        c: last.c(),
        kappa: final_moduli.kappa(),
        lambda: final_moduli.lambda(),
    });
    rows
}

impl OutputRecord {
    pub fn from_mean(t: Triple, result: &MeanResult, with_trace: bool) -> Result<Self> {
        let moduli = moduli_from_triple(t)?;
        Ok(OutputRecord {
            a: t.a(),
            b: t.b(),
            c: t.c(),
            kappa0: moduli.kappa(),
            lambda0: moduli.lambda(),
            mean: result.mean,
            iterations: result.iterations,
            converged: result.converged,
            residuals: None,
            trace: with_trace.then(|| trace_rows(result)),
        })
    }

    pub fn from_cross_check(t: Triple, check: &CrossCheck, with_trace: bool) -> Result<Self> {
        let mut record = Self::from_mean(t, &check.mean, with_trace)?;
        record.residuals = Some(
            check
                .residuals
                .iter()
                .map(|&(name, value)| (name.to_string(), value))
                .collect(),
        );
        Ok(record)
    }

    /// Canonical JSON: fixed key order, 17-significant-digit floats.
    pub fn to_json(&self) -> String {
        let mut out = String::new();
        let _ = write!(
            out,
            "{{\"a\":{},\"b\":{},\"c\":{},\"kappa0\":{},\"lambda0\":{},\"mean\":{},\
             \"iterations\":{},\"converged\":{}",
            format_float(self.a),
            format_float(self.b),
            format_float(self.c),
            format_float(self.kappa0),
            format_float(self.lambda0),
            format_float(self.mean),
            self.iterations,
            self.converged,
        );
        if let Some(residuals) = &self.residuals {
            out.push_str(",\"residuals\":{");
            for (i, (name, value)) in residuals.iter().enumerate() {
                if i > 0 {
                    out.push(',');
                }
                let _ = write!(out, "\"{name}\":{}", format_float(*value));
            }
            out.push('}');
        }
        if let Some(trace) = &self.trace {
            out.push_str(",\"trace\":[");
            for (i, row) in trace.iter().enumerate() {
                if i > 0 {
                    out.push(',');
                }
                let _ = write!(
                    out,
                    "{{\"n\":{},\"a\":{},\"b\":{},\"c\":{},\"kappa\":{},\"lambda\":{}}}",
                    row.n,
                    format_float(row.a),
                    format_float(row.b),
                    format_float(row.c),
                    format_float(row.kappa),
                    format_float(row.lambda),
                );
            }
            out.push(']');
        }
        out.push('}');
        out
    }

    /// Parse a record emitted by [`to_json`]. Key order is preserved, so
    /// re-serializing reproduces the input bytes.
    pub fn from_json(text: &str) -> Result<Self> {
        let value: serde_json::Value =
            serde_json::from_str(text).map_err(|e| Error::ParamError {
                reason: format!("invalid JSON record: {e}"),
            })?;
        let object = value.as_object().ok_or_else(|| Error::ParamError {
            reason: "JSON record must be an object".to_string(),
        })?;
        let float = |key: &str| -> Result<f64> {
            object
                .get(key)
                .and_then(|v| v.as_f64())
                .ok_or_else(|| Error::ParamError {
                    reason: format!("missing or non-numeric field '{key}'"),
                })
        };
        let residuals = match object.get("residuals") {
            None => None,
            Some(v) => {
                let map = v.as_object().ok_or_else(|| Error::ParamError {
                    reason: "'residuals' must be an object".to_string(),
                })?;
                let mut pairs = Vec::with_capacity(map.len());
                for (name, value) in map {
                    let value = value.as_f64().ok_or_else(|| Error::ParamError {
                        reason: format!("residual '{name}' is not numeric"),
                    })?;
                    pairs.push((name.clone(), value));
                }
                Some(pairs)
            }
        };
        let trace = match object.get("trace") {
            None => None,
            Some(v) => {
                let rows = v.as_array().ok_or_else(|| Error::ParamError {
                    reason: "'trace' must be an array".to_string(),
                })?;
                let mut parsed = Vec::with_capacity(rows.len());
                for row in rows {
                    let get = |key: &str| -> Result<f64> {
                        row.get(key)
                            .and_then(|v| v.as_f64())
                            .ok_or_else(|| Error::ParamError {
                                reason: format!("trace row missing field '{key}'"),
                            })
                    };
                    parsed.push(TraceRow {
                        n: row.get("n").and_then(|v| v.as_u64()).ok_or_else(|| {
                            Error::ParamError {
                                reason: "trace row missing field 'n'".to_string(),
                            }
                        })? as usize,
                        a: get("a")?,
                        b: get("b")?,
                        c: get("c")?,
                        kappa: get("kappa")?,
                        lambda: get("lambda")?,
                    });
                }
                Some(parsed)
            }
        };
        Ok(OutputRecord {
            a: float("a")?,
            b: float("b")?,
            c: float("c")?,
            kappa0: float("kappa0")?,
            lambda0: float("lambda0")?,
            mean: float("mean")?,
            iterations: object
                .get("iterations")
                .and_then(|v| v.as_u64())
                .ok_or_else(|| Error::ParamError {
                    reason: "missing or non-integer field 'iterations'".to_string(),
                })? as usize,
            converged: object
                .get("converged")
                .and_then(|v| v.as_bool())
                .ok_or_else(|| Error::ParamError {
                    reason: "missing or non-boolean field 'converged'".to_string(),
                })?,
            residuals,
            trace,
        })
    }

    /// CSV rendering of the trace: header plus one row per state.
    pub fn to_csv(&self) -> Result<String> {
        let trace = self.trace.as_ref().ok_or_else(|| Error::ParamError {
            reason: "CSV output requires a trace".to_string(),
        })?;
        let mut out = String::from("n,a,b,c,kappa,lambda\n");
        for row in trace {
            let _ = writeln!(
                out,
                "{},{},{},{},{},{}",
                row.n,
                format_float(row.a),
                format_float(row.b),
                format_float(row.c),
                format_float(row.kappa),
                format_float(row.lambda),
            );
        }
        Ok(out)
    }

    /// Plain-text rendering for terminals.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "input: a = {}, b = {}, c = {}", self.a, self.b, self.c);
        let _ = writeln!(
            out,
            "moduli: kappa0 = {}, lambda0 = {}",
            self.kappa0, self.lambda0
        );
        let _ = writeln!(out, "mean: {}", self.mean);
        let _ = writeln!(
            out,
            "iterations: {} ({})",
            self.iterations,
            if self.converged {
                "converged"
            } else {
                "not converged"
            }
        );
        if let Some(residuals) = &self.residuals {
            let _ = writeln!(out, "residuals:");
            for (name, value) in residuals {
                let _ = writeln!(out, "  {name:<28} {value:.3e}");
            }
        }
        if let Some(trace) = &self.trace {
            let _ = writeln!(out, "trace:");
            let _ = writeln!(
                out,
                "  {:>2}  {:<22} {:<22} {:<22} {:<22} {:<22}",
                "n", "a", "b", "c", "kappa", "lambda"
            );
            for row in trace {
                let _ = writeln!(
                    out,
                    "  {:>2}  {:<22} {:<22} {:<22} {:<22} {:<22}",
                    row.n, row.a, row.b, row.c, row.kappa, row.lambda
                );
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::extended::extended_mean;
    use crate::verify::cross_check;
    use crate::DEFAULT_TOL;

    fn sample_record(with_trace: bool) -> OutputRecord {
        let t = Triple::new(1.0, 0.5, 0.2).unwrap();
        let check = cross_check(t, DEFAULT_TOL).unwrap();
        OutputRecord::from_cross_check(t, &check, with_trace).unwrap()
    }

    #[test]
    fn floats_round_trip_through_seventeen_digits() {
        for x in [0.7250921711406717, 0.2, 1.0, 0.0, 4.9e-324, 1.37e308] {
            let parsed: f64 = format_float(x).parse().unwrap();
            assert_eq!(parsed, x, "value {x}");
        }
    }

    #[test]
    fn json_round_trip_is_byte_identical() {
        for record in [sample_record(false), sample_record(true)] {
            let json = record.to_json();
            let reparsed = OutputRecord::from_json(&json).unwrap();
            assert_eq!(reparsed.to_json(), json);
            assert_eq!(reparsed, record);
        }
    }

    #[test]
    fn plain_mean_record_omits_optional_sections() {
        let t = Triple::new(1.0, 0.5, 0.2).unwrap();
        let result = extended_mean(t, DEFAULT_TOL).unwrap();
        let record = OutputRecord::from_mean(t, &result, false).unwrap();
        let json = record.to_json();
        assert!(!json.contains("residuals"));
        assert!(!json.contains("trace"));
        assert_eq!(OutputRecord::from_json(&json).unwrap().to_json(), json);
    }

    #[test]
    fn csv_has_header_and_final_row() {
        let t = Triple::new(1.0, 0.5, 0.2).unwrap();
        let result = extended_mean(t, DEFAULT_TOL).unwrap();
        let record = OutputRecord::from_mean(t, &result, true).unwrap();
        let csv = record.to_csv().unwrap();
        let lines: Vec<&str> = csv.lines().collect();
        assert_eq!(lines[0], "n,a,b,c,kappa,lambda");
        // one row per executed step plus the converged state
        assert_eq!(lines.len(), result.iterations + 2);
        assert!(lines[1].starts_with("0,"));
    }

    #[test]
    fn csv_without_trace_is_an_error() {
        let record = sample_record(false);
        assert!(record.to_csv().is_err());
    }
}
