//! JSON form of fixed-point data.
//!
//! ```json
//! {
//!   "half_dim": 4,
//!   "monotone": true,
//!   "components": [
//!     {"dim": 0, "betti": [1], "signature": 1, "lambda": 0,
//!      "moment_value": -5, "weights": [1, 1, 1, 2]}
//!   ]
//! }
//! ```
//!
//! `lambda` is half the Morse–Bott index, i.e. the number of negative
//! weights. `moment_value` is an integer or a `"p/q"` string; it and
//! `weights` may be omitted. `monotone` and `spin` default to false.

use serde::{Deserialize, Serialize};
use symloc::fixloc::{FixedComponent, FixedPointData, FixlocError};

use crate::json::JsonRational;

/// Largest accepted `half_dim`; localized Betti lists have `2n + 1` entries.
pub const MAX_HALF_DIM: u32 = 4096;
/// Bound on Betti numbers, signatures and weights so sums stay in range.
pub const MAX_ENTRY: u64 = 1 << 40;

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct Document {
    half_dim: u32,
    #[serde(default)]
    monotone: bool,
    #[serde(default)]
    spin: bool,
    components: Vec<Component>,
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct Component {
    dim: u32,
    betti: Vec<u64>,
    signature: i64,
    lambda: u32,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    moment_value: Option<JsonRational>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    weights: Option<Vec<i64>>,
}

/// Strict parse. Errors carry the JSON position or the offending component.
pub fn parse_fpd(text: &str) -> Result<FixedPointData, String> {
    let doc: Document = serde_json::from_str(text).map_err(|e| e.to_string())?;
    if doc.half_dim > MAX_HALF_DIM {
        return Err(format!("half_dim {} exceeds the supported maximum {MAX_HALF_DIM}", doc.half_dim));
    }
    if doc.components.is_empty() {
        return Err(FixlocError::NoComponents.to_string());
    }
    let mut components = Vec::with_capacity(doc.components.len());
    for (i, c) in doc.components.into_iter().enumerate() {
        let too_big = c.betti.iter().any(|&b| b > MAX_ENTRY)
            || c.signature.unsigned_abs() > MAX_ENTRY
            || c.weights.iter().flatten().any(|w| w.unsigned_abs() > MAX_ENTRY);
        if too_big {
            return Err(format!("components[{i}]: entries must not exceed 2^40 in absolute value"));
        }
        let b = &c.betti;
        if let Some(k) = (0..b.len()).find(|&k| b[k] != b[b.len() - 1 - k]) {
            return Err(format!(
                "components[{i}]: Betti numbers {b:?} violate Poincare duality (b_{k} = {} but b_{} = {})",
                b[k],
                b.len() - 1 - k,
                b[b.len() - 1 - k]
            ));
        }
        let mut comp = FixedComponent::new(c.dim, c.betti, c.signature, c.lambda);
        if let Some(h) = c.moment_value {
            comp = comp.with_moment(h.0);
        }
        if let Some(w) = c.weights {
            comp = comp.with_weights(w);
        }
        components.push(comp);
    }
    let fpd = FixedPointData::new(doc.half_dim, components).map_err(|e| shape_error(&e))?;
    Ok(fpd.with_monotone(doc.monotone).with_spin(doc.spin))
}

fn shape_error(e: &FixlocError) -> String {
    match e {
        FixlocError::OddComponentDimension { index, dim } => format!("components[{index}]: dimension {dim} is odd"),
        FixlocError::ComponentTooLarge { index, dim, ambient } => {
            format!("components[{index}]: dimension {dim} exceeds ambient dimension {ambient}")
        }
        FixlocError::BettiLength { index, expected, found } => {
            format!("components[{index}]: expected {expected} Betti numbers, found {found}")
        }
        FixlocError::LambdaOutOfRange { index, lambda, max } => {
            format!("components[{index}]: lambda {lambda} exceeds n - dim/2 = {max}")
        }
        other => other.to_string(),
    }
}

/// Pretty-printed document that [`parse_fpd`] reads back to the same value.
pub fn fpd_to_json(fpd: &FixedPointData) -> String {
    let doc = Document {
        half_dim: fpd.half_dim(),
        monotone: fpd.monotone(),
        spin: fpd.spin(),
        components: fpd
            .components()
            .iter()
            .map(|c| Component {
                dim: c.dim,
                betti: c.betti.clone(),
                signature: c.signature,
                lambda: c.lambda,
                moment_value: c.moment_value.clone().map(JsonRational),
                weights: c.weights.clone(),
            })
            .collect(),
    };
    serde_json::to_string_pretty(&doc).expect("document is serializable")
}
