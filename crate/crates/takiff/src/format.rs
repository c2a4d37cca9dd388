//! Algebra and family JSON files.
//!
//! Basis indices are 0-based. Structure constants are keyed by basis name
//! and written as exact `"p/q"` strings.

use std::collections::BTreeMap;

use anyhow::{bail, Context, Result};
use serde::{Deserialize, Serialize};
use takiff_core::catalog::Flags;
use takiff_core::poly::parse_rational;
use takiff_core::{InvariantFamily, InvariantSet, LieAlgebra, Polynomial};

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BracketEntry {
    pub pair: [usize; 2],
    pub coeffs: BTreeMap<String, CoeffText>,
}

/// A rational written as a string, or a plain JSON integer.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum CoeffText {
    Text(String),
    Int(i64),
}

#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
pub struct FlagsFile {
    #[serde(default)]
    pub no_proper_semiinvariants: bool,
}

/// Grading metadata, written for Takiff algebras and ignored on input.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct GradingFile {
    pub base_label: String,
    pub base_dim: usize,
    pub depth: usize,
    pub grade_of: BTreeMap<String, usize>,
    pub base_name_of: BTreeMap<String, String>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct AlgebraFile {
    pub label: String,
    pub basis: Vec<String>,
    #[serde(default)]
    pub brackets: Vec<BracketEntry>,
    #[serde(default)]
    pub invariants: Vec<String>,
    #[serde(default)]
    pub flags: FlagsFile,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub grading: Option<GradingFile>,
}

impl AlgebraFile {
    pub fn from_algebra(algebra: &LieAlgebra, invariants: &[Polynomial], flags: Flags) -> Self {
        let basis = algebra.basis().to_vec();
        let brackets = algebra
            .brackets()
            .map(|(&(i, j), coeffs)| BracketEntry {
                pair: [i, j],
                coeffs: coeffs
                    .iter()
                    .map(|(k, c)| (basis[*k].clone(), CoeffText::Text(c.to_string())))
                    .collect(),
            })
            .collect();
        let grading = algebra.grading().map(|g| GradingFile {
            base_label: g.base().label().to_string(),
            base_dim: g.base_dim(),
            depth: g.depth(),
            grade_of: (0..algebra.dim())
                .map(|v| (basis[v].clone(), g.grade_of(v)))
                .collect(),
            base_name_of: (0..algebra.dim())
                .map(|v| (basis[v].clone(), g.base_name_of(v).to_string()))
                .collect(),
        });
        Self {
            label: algebra.label().to_string(),
            basis,
            brackets,
            invariants: invariants.iter().map(ToString::to_string).collect(),
            flags: FlagsFile {
                no_proper_semiinvariants: flags.no_proper_semiinvariants,
            },
            grading,
        }
    }

    /// Builds and validates the algebra and its invariants. Any `grading`
    /// block is ignored: the result is a plain algebra.
    pub fn into_algebra(self) -> Result<(LieAlgebra, InvariantSet, Flags)> {
        let index: BTreeMap<&str, usize> = self
            .basis
            .iter()
            .enumerate()
            .map(|(k, name)| (name.as_str(), k))
            .collect();
        let mut brackets = Vec::with_capacity(self.brackets.len());
        for entry in &self.brackets {
            let mut coeffs = Vec::with_capacity(entry.coeffs.len());
            for (name, value) in &entry.coeffs {
                let Some(&k) = index.get(name.as_str()) else {
                    bail!(
                        "bracket ({}, {}) refers to unknown basis element `{name}`",
                        entry.pair[0],
                        entry.pair[1]
                    );
                };
                let c = match value {
                    CoeffText::Text(t) => parse_rational(t)
                        .with_context(|| format!("coefficient `{t}` of `{name}`"))?,
                    CoeffText::Int(n) => takiff_core::poly::int(*n),
                };
                coeffs.push((k, c));
            }
            brackets.push(((entry.pair[0], entry.pair[1]), coeffs));
        }
        let algebra = LieAlgebra::new(self.label, self.basis.clone(), brackets)?;
        let texts: Vec<&str> = self.invariants.iter().map(String::as_str).collect();
        let invariants = InvariantSet::parse(&algebra, &texts)?;
        let flags = Flags {
            no_proper_semiinvariants: self.flags.no_proper_semiinvariants,
            ..Flags::default()
        };
        Ok((algebra, invariants, flags))
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct FamilyEntry {
    pub i: usize,
    pub j: usize,
    pub degree: u32,
    pub poly: String,
}

/// The table `F_i^j` on `q<m>`, with 0-based `i`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct FamilyFile {
    pub algebra: String,
    pub takiff: String,
    pub m: usize,
    pub base_invariants: Vec<String>,
    pub entries: Vec<FamilyEntry>,
}

impl FamilyFile {
    pub fn new(base: &LieAlgebra, takiff: &LieAlgebra, family: &InvariantFamily) -> Self {
        Self {
            algebra: base.label().to_string(),
            takiff: takiff.label().to_string(),
            m: family.depth(),
            base_invariants: family
                .base()
                .polys()
                .iter()
                .map(ToString::to_string)
                .collect(),
            entries: family
                .entries()
                .map(|(i, j, f)| FamilyEntry {
                    i,
                    j,
                    degree: family.base().degrees()[i],
                    poly: f.to_string(),
                })
                .collect(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use takiff_core::catalog;

    #[test]
    fn catalog_round_trip() {
        for (name, _) in catalog::list() {
            let e = catalog::load(name).unwrap();
            let file = AlgebraFile::from_algebra(&e.algebra, e.invariants.polys(), e.flags);
            let text = serde_json::to_string(&file).unwrap();
            let back: AlgebraFile = serde_json::from_str(&text).unwrap();
            let (a, fs, flags) = back.into_algebra().unwrap();
            assert_eq!(a.basis(), e.algebra.basis());
            assert_eq!(
                a.brackets().collect::<Vec<_>>(),
                e.algebra.brackets().collect::<Vec<_>>()
            );
            assert_eq!(fs.polys(), e.invariants.polys(), "{name}");
            assert_eq!(
                flags.no_proper_semiinvariants,
                e.flags.no_proper_semiinvariants
            );
        }
    }

    #[test]
    fn rejects_unknown_names_and_bad_rationals() {
        let text =
            r#"{"label":"t","basis":["x","y"],"brackets":[{"pair":[0,1],"coeffs":{"w":"1"}}]}"#;
        let file: AlgebraFile = serde_json::from_str(text).unwrap();
        assert!(file.into_algebra().is_err());
        let text =
            r#"{"label":"t","basis":["x","y"],"brackets":[{"pair":[0,1],"coeffs":{"y":"1/0"}}]}"#;
        let file: AlgebraFile = serde_json::from_str(text).unwrap();
        assert!(file.into_algebra().is_err());
    }

    #[test]
    fn integer_coefficients_accepted() {
        let text =
            r#"{"label":"aff","basis":["x","y"],"brackets":[{"pair":[0,1],"coeffs":{"y":1}}]}"#;
        let file: AlgebraFile = serde_json::from_str(text).unwrap();
        let (a, fs, _) = file.into_algebra().unwrap();
        assert_eq!(a.sparse_to_string(a.bracket(0, 1)), "y");
        assert!(fs.is_empty());
    }
}
