//! JSON model files holding a source, a channel, or both.
//!
//! ```json
//! {
//!   "name": "example",
//!   "source":  { "u": ["1", "0"], "v": ["1", "0"], "p": [[0.3333, 0.1667], [0.1667, 0.3333]] },
//!   "channel": {
//!     "x1": ["0", "1"], "x2": ["0", "1"], "y": ["1", "0"],
//!     "input_order": ["11", "10", "01", "00"],
//!     "p": [[1, 0.5, 0.5, 0], [0, 0.5, 0.5, 1]]
//!   }
//! }
//! ```
//!
//! `channel.p` has one row per output symbol and one column per composite
//! input, in the order given by `input_order`. Composite labels are either
//! `"x1,x2"` or the two labels concatenated when that split is unambiguous.
//! Without `input_order`, columns are read in canonical `x₁`-major order, or
//! in the table order `11 10 01 00` when the table-order option is set.
//! Internally the columns are always stored `x₁`-major.
//!
//! Matrices whose sums are off by at most 1e-9 are renormalized; larger
//! deviations are rejected.

use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::matrix::Matrix;
use crate::probcore::{Alphabet, ChannelModel, JointDistribution};

/// Largest deviation from unit mass the parser silently repairs.
pub const RENORMALIZE_TOL: f64 = 1e-9;

/// Table order used when `input_order` is absent and table order is requested.
pub const TABLE_INPUT_ORDER: [&str; 4] = ["11", "10", "01", "00"];

#[derive(Debug, Clone, Default, PartialEq)]
pub struct ModelFile {
    pub name: Option<String>,
    pub source: Option<JointDistribution>,
    pub channel: Option<ChannelModel>,
}

#[derive(Debug, Default, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawModel {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    name: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    source: Option<RawSource>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    channel: Option<RawChannel>,
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawSource {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    u: Option<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    v: Option<Vec<String>>,
    p: Vec<Vec<f64>>,
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawChannel {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    x1: Option<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    x2: Option<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    y: Option<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    input_order: Option<Vec<String>>,
    p: Vec<Vec<f64>>,
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct ParseOptions {
    /// Read channel columns as `11 10 01 00` when `input_order` is missing.
    pub table_order: bool,
}

pub fn parse_model(path: impl AsRef<Path>, opts: ParseOptions) -> Result<ModelFile> {
    let text = std::fs::read_to_string(path)?;
    parse_model_str(&text, opts)
}

pub fn parse_model_str(text: &str, opts: ParseOptions) -> Result<ModelFile> {
    let raw: RawModel = serde_json::from_str(text).map_err(|e| Error::Parse {
        line: e.line(),
        column: e.column(),
        message: e.to_string(),
    })?;
    Ok(ModelFile {
        name: raw.name,
        source: raw.source.map(build_source).transpose()?,
        channel: raw.channel.map(|c| build_channel(c, opts)).transpose()?,
    })
}

fn rect(rows: &[Vec<f64>], what: &str) -> Result<Matrix> {
    let cols = rows.first().map_or(0, Vec::len);
    if rows.is_empty() || cols == 0 || rows.iter().any(|r| r.len() != cols) {
        return Err(Error::InvariantViolation(format!("{what} must be a non-empty rectangular array")));
    }
    let m = Matrix::from_rows(rows);
    if let Some(v) = m.as_slice().iter().find(|v| !v.is_finite() || **v < 0.0) {
        return Err(Error::InvariantViolation(format!("{what} has entry {v}, expected a probability")));
    }
    Ok(m)
}

fn alphabet(labels: Option<Vec<String>>, len: usize, what: &str) -> Result<Alphabet> {
    match labels {
        None => Ok(Alphabet::indexed(len)),
        Some(l) if l.len() == len => Alphabet::new(l),
        Some(l) => Err(Error::InvariantViolation(format!(
            "{what} has {} labels but the matrix needs {len}",
            l.len()
        ))),
    }
}

fn build_source(raw: RawSource) -> Result<JointDistribution> {
    let m = rect(&raw.p, "source.p")?;
    let total = m.sum();
    if (total - 1.0).abs() > RENORMALIZE_TOL {
        return Err(Error::InvariantViolation(format!("source.p sums to {total}, expected 1")));
    }
    let u = alphabet(raw.u, m.rows(), "source.u")?;
    let v = alphabet(raw.v, m.cols(), "source.v")?;
    JointDistribution::new(u, v, m.scale(1.0 / total))
}

fn split_composite(label: &str, x1: &Alphabet, x2: &Alphabet) -> Result<(usize, usize)> {
    let bad = |msg: &str| Error::InvariantViolation(format!("input label {label:?}: {msg}"));
    if let Some((a, b)) = label.split_once(',') {
        let i = x1.index_of(a.trim()).ok_or_else(|| bad("unknown x1 symbol"))?;
        let j = x2.index_of(b.trim()).ok_or_else(|| bad("unknown x2 symbol"))?;
        return Ok((i, j));
    }
    let mut found = None;
    for (cut, _) in label.char_indices().skip(1) {
        let (a, b) = label.split_at(cut);
        if let (Some(i), Some(j)) = (x1.index_of(a), x2.index_of(b)) {
            if found.is_some() {
                return Err(bad("ambiguous split, use \"x1,x2\""));
            }
            found = Some((i, j));
        }
    }
    found.ok_or_else(|| bad("does not split into known x1 and x2 symbols"))
}

fn build_channel(raw: RawChannel, opts: ParseOptions) -> Result<ChannelModel> {
    let m = rect(&raw.p, "channel.p")?;
    let k = m.cols();
    let x1 = match raw.x1 {
        Some(l) => Alphabet::new(l)?,
        None if k == 4 => Alphabet::new(["0", "1"])?,
        None => return Err(Error::InvariantViolation("channel.x1 labels are required unless inputs are binary".into())),
    };
    let x2 = match raw.x2 {
        Some(l) => Alphabet::new(l)?,
        None if k == 4 => Alphabet::new(["0", "1"])?,
        None => return Err(Error::InvariantViolation("channel.x2 labels are required unless inputs are binary".into())),
    };
    if x1.len() * x2.len() != k {
        return Err(Error::InvariantViolation(format!(
            "channel.p has {k} columns but |X1|·|X2| = {}",
            x1.len() * x2.len()
        )));
    }
    let y = alphabet(raw.y, m.rows(), "channel.y")?;

    let order: Vec<String> = match raw.input_order {
        Some(o) => o,
        None if opts.table_order => {
            if k != 4 {
                return Err(Error::InvariantViolation("table input order needs binary inputs".into()));
            }
            TABLE_INPUT_ORDER.iter().map(|s| s.to_string()).collect()
        }
        None => x1
            .symbols()
            .iter()
            .flat_map(|a| x2.symbols().iter().map(move |b| format!("{a},{b}")))
            .collect(),
    };
    if order.len() != k {
        return Err(Error::InvariantViolation(format!(
            "input_order lists {} inputs, channel.p has {k} columns",
            order.len()
        )));
    }
    let mut perm = vec![usize::MAX; k];
    for (file_col, label) in order.iter().enumerate() {
        let (i, j) = split_composite(label, &x1, &x2)?;
        let canonical = i * x2.len() + j;
        if perm[canonical] != usize::MAX {
            return Err(Error::InvariantViolation(format!("input {label:?} listed twice")));
        }
        perm[canonical] = file_col;
    }

    let mut t = Matrix::zeros(m.rows(), k);
    for (canonical, &file_col) in perm.iter().enumerate() {
        let col = m.col(file_col);
        let s: f64 = col.iter().sum();
        if (s - 1.0).abs() > RENORMALIZE_TOL {
            return Err(Error::InvariantViolation(format!(
                "channel column {:?} sums to {s}, expected 1",
                order[file_col]
            )));
        }
        for (r, v) in col.into_iter().enumerate() {
            t[(r, canonical)] = v / s;
        }
    }
    ChannelModel::new(x1, x2, y, t)
}

/// Serializes a model with explicit labels and canonical `"x1,x2"` input order.
pub fn emit_model(model: &ModelFile) -> String {
    let raw = RawModel {
        name: model.name.clone(),
        source: model.source.as_ref().map(|s| RawSource {
            u: Some(s.row_alphabet().symbols().to_vec()),
            v: Some(s.col_alphabet().symbols().to_vec()),
            p: s.matrix().to_rows(),
        }),
        channel: model.channel.as_ref().map(|c| RawChannel {
            x1: Some(c.x1_alphabet().symbols().to_vec()),
            x2: Some(c.x2_alphabet().symbols().to_vec()),
            y: Some(c.y_alphabet().symbols().to_vec()),
            input_order: Some(
                c.x1_alphabet()
                    .symbols()
                    .iter()
                    .flat_map(|a| c.x2_alphabet().symbols().iter().map(move |b| format!("{a},{b}")))
                    .collect(),
            ),
            p: c.transition().to_rows(),
        }),
    };
    serde_json::to_string_pretty(&raw).expect("model serializes")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;

    const SYMMETRIC: &str = r#"{
        "name": "symmetric",
        "source": { "u": ["1", "0"], "v": ["1", "0"],
                    "p": [[0.3333333333333333, 0.16666666666666666],
                          [0.16666666666666666, 0.3333333333333333]] }
    }"#;

    #[test]
    fn parses_source() {
        let m = parse_model_str(SYMMETRIC, ParseOptions::default()).unwrap();
        let s = m.source.unwrap();
        assert!(s.matrix().max_abs_diff(catalog::symmetric_source().matrix()) < 1e-15);
        assert_eq!(m.name.as_deref(), Some("symmetric"));
        assert!(m.channel.is_none());
    }

    #[test]
    fn table_order_maps_to_canonical_columns() {
        let text = r#"{ "channel": { "y": ["0", "1"], "p": [[0, 0.5, 0.5, 1], [1, 0.5, 0.5, 0]] } }"#;
        let m = parse_model_str(text, ParseOptions { table_order: true }).unwrap();
        assert_eq!(m.channel.unwrap(), catalog::averaging_channel());

        let explicit = r#"{ "channel": { "y": ["0", "1"], "input_order": ["11", "10", "01", "00"],
                            "p": [[0, 0.5, 0.5, 1], [1, 0.5, 0.5, 0]] } }"#;
        let m = parse_model_str(explicit, ParseOptions::default()).unwrap();
        assert_eq!(m.channel.unwrap(), catalog::averaging_channel());

        let canonical = r#"{ "channel": { "p": [[1, 0.5, 0.5, 0], [0, 0.5, 0.5, 1]] } }"#;
        let m = parse_model_str(canonical, ParseOptions::default()).unwrap();
        assert_eq!(m.channel.unwrap(), catalog::averaging_channel());
    }

    #[test]
    fn rejects_large_mass_errors() {
        let text = r#"{ "source": { "p": [[0.5, 0.5], [0.25, 0.25]] } }"#;
        assert!(matches!(parse_model_str(text, ParseOptions::default()), Err(Error::InvariantViolation(_))));
        let text = r#"{ "channel": { "p": [[1.0, 0.5, 0.5, 0.0], [0.0, 0.5, 1.0, 1.0]] } }"#;
        assert!(matches!(parse_model_str(text, ParseOptions::default()), Err(Error::InvariantViolation(_))));
    }

    #[test]
    fn renormalizes_tiny_mass_errors() {
        let text = r#"{ "source": { "p": [[0.25, 0.25], [0.25, 0.250000000001]] } }"#;
        let s = parse_model_str(text, ParseOptions::default()).unwrap().source.unwrap();
        assert!((s.matrix().sum() - 1.0).abs() < 1e-15);
    }

    #[test]
    fn parse_errors_carry_position() {
        let err = parse_model_str("{\n  \"source\": [1, \n", ParseOptions::default()).unwrap_err();
        match err {
            Error::Parse { line, .. } => assert!(line >= 2),
            other => panic!("unexpected {other:?}"),
        }
        assert!(matches!(
            parse_model_str(r#"{ "sauce": {} }"#, ParseOptions::default()),
            Err(Error::Parse { .. })
        ));
    }

    #[test]
    fn composite_labels() {
        let x1 = Alphabet::new(["a", "ab"]).unwrap();
        let x2 = Alphabet::new(["b", "bb"]).unwrap();
        assert!(split_composite("abb", &x1, &x2).is_err());
        assert_eq!(split_composite("ab,b", &x1, &x2).unwrap(), (1, 0));
        assert_eq!(split_composite("abbb", &x1, &x2).unwrap(), (1, 1));
    }

    #[test]
    fn emitted_model_reparses() {
        let model = ModelFile {
            name: Some("all".into()),
            source: Some(catalog::skewed_source()),
            channel: Some(catalog::averaging_channel()),
        };
        let back = parse_model_str(&emit_model(&model), ParseOptions { table_order: true }).unwrap();
        assert_eq!(back, model);
    }
}
