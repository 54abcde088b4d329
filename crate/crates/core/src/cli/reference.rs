//! Reference polynomials stored as expanded coefficient lists.

use std::path::Path;

use serde::Deserialize;

use crate::error::{Error, Result};
use crate::exact::{parse_rational, UniPoly};
use crate::zeta::NPoly;

#[derive(Debug, Clone, PartialEq, Eq, Deserialize)]
pub struct ReferencePoly {
    pub label: String,
    pub m: u64,
    pub s: i64,
    pub star: bool,
    /// Human-readable factored form, for display only.
    pub factored: String,
    /// `"p/q"` strings, ascending powers of `n`.
    pub coefficients: Vec<String>,
}

impl ReferencePoly {
    pub fn npoly(&self) -> Result<NPoly> {
        let coeffs = self
            .coefficients
            .iter()
            .map(|c| parse_rational(c))
            .collect::<Result<Vec<_>>>()?;
        Ok(NPoly(UniPoly::new(coeffs)))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Deserialize)]
pub struct ReferenceSet {
    pub coefficient_order: String,
    pub entries: Vec<ReferencePoly>,
}

impl ReferenceSet {
    pub fn find(&self, m: u64, s: i64, star: bool) -> Option<&ReferencePoly> {
        self.entries
            .iter()
            .find(|e| e.m == m && e.s == s && e.star == star)
    }
}

pub fn load_references(path: &Path) -> Result<ReferenceSet> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Error::InvalidArgument(format!("cannot read {}: {e}", path.display())))?;
    let set: ReferenceSet = serde_json::from_str(&text).map_err(|e| {
        Error::InvalidArgument(format!("bad reference file {}: {e}", path.display()))
    })?;
    if set.coefficient_order != "ascending powers of n" {
        return Err(Error::InvalidArgument(format!(
            "unsupported coefficient order {:?}",
            set.coefficient_order
        )));
    }
    Ok(set)
}
