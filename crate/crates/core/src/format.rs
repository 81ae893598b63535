//! The on-disk algebra format: canonical JSON with rationals as strings.
//! Emission is canonical (fixed key order, sorted entries, reduced scalars),
//! so emit -> parse -> emit is byte-identical.

use crate::algebra::{BuildError, ColorCommAlgebra, GradedBasis, RinehartPair, ThreeLieColorAlgebra};
use crate::grading::{BiCharForm, BiCharacter, GradingError, GradingGroup};
use crate::scalar::{format_q, parse_q, Q};
use crate::subspace::{zero_vec, Vector};
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum FormatError {
    #[error("JSON parse error: {0}")]
    Json(#[from] serde_json::Error),
    #[error("scalar: {0}")]
    Scalar(String),
    #[error(transparent)]
    Grading(#[from] GradingError),
    #[error(transparent)]
    Build(#[from] BuildError),
    #[error("{0}")]
    Malformed(String),
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
pub struct BasisEntry {
    pub name: String,
    pub degree: Vec<u32>,
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
pub struct TableEntry {
    pub args: Vec<String>,
    pub value: BTreeMap<String, String>,
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
pub struct AlgebraFile {
    pub group: GradingGroup,
    pub epsilon: BiCharForm,
    pub l_basis: Vec<BasisEntry>,
    pub a_basis: Vec<BasisEntry>,
    #[serde(default)]
    pub bracket: Vec<TableEntry>,
    #[serde(default)]
    pub product: Vec<TableEntry>,
    #[serde(default)]
    pub action: Vec<TableEntry>,
    #[serde(default)]
    pub rho: Vec<TableEntry>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub cartan: Option<Vec<String>>,
}

pub fn parse_file(text: &str) -> Result<AlgebraFile, FormatError> {
    Ok(serde_json::from_str(text)?)
}

fn vector_from_map(
    map: &BTreeMap<String, String>,
    basis: &GradedBasis,
) -> Result<Vector<Q>, FormatError> {
    let mut v = zero_vec(basis.dim());
    for (name, scalar) in map {
        let idx = basis
            .index_of(name)
            .ok_or_else(|| FormatError::Build(BuildError::UnknownBasisName(name.clone())))?;
        v[idx] = parse_q(scalar).map_err(FormatError::Scalar)?;
    }
    Ok(v)
}

fn resolve(basis: &GradedBasis, name: &str) -> Result<usize, FormatError> {
    basis
        .index_of(name)
        .ok_or_else(|| FormatError::Build(BuildError::UnknownBasisName(name.to_string())))
}

/// Build a structurally validated pair from a parsed file: degrees checked,
/// orientations completed by the color sign laws, conflicting or forced-zero
/// entries rejected.
pub fn build_pair(file: &AlgebraFile) -> Result<RinehartPair<Q>, FormatError> {
    let group = GradingGroup::new(file.group.moduli.clone())?;
    let eps = match &file.epsilon {
        BiCharForm::Exponent { exponent_matrix } => {
            BiCharacter::exponent(group.clone(), exponent_matrix.clone())?
        }
        BiCharForm::Table { table } => BiCharacter::table(group.clone(), table.clone())?,
    };
    let mut l_entries = Vec::new();
    for e in &file.l_basis {
        group.check(&e.degree)?;
        l_entries.push((e.name.clone(), e.degree.clone()));
    }
    let mut a_entries = Vec::new();
    for e in &file.a_basis {
        group.check(&e.degree)?;
        a_entries.push((e.name.clone(), e.degree.clone()));
    }
    let l_basis = GradedBasis::new(l_entries)?;
    let a_basis = GradedBasis::new(a_entries)?;

    let mut l = ThreeLieColorAlgebra::new(l_basis, eps.clone());
    // explicit zero entries take part in conflict detection
    let mut seen_zero: Vec<[usize; 3]> = Vec::new();
    for entry in &file.bracket {
        if entry.args.len() != 3 {
            return Err(FormatError::Malformed(format!(
                "bracket entry needs 3 arguments, got {:?}",
                entry.args
            )));
        }
        let key = [
            resolve(&l.basis, &entry.args[0])?,
            resolve(&l.basis, &entry.args[1])?,
            resolve(&l.basis, &entry.args[2])?,
        ];
        let value = vector_from_map(&entry.value, &l.basis)?;
        if crate::subspace::is_zero_vec(&value) {
            let mut sorted = key;
            sorted.sort_unstable();
            if l.bracket.contains_key(&sorted) {
                return Err(FormatError::Build(BuildError::OrientationConflict {
                    table: "bracket",
                    key: format!("{:?}", entry.args),
                }));
            }
            seen_zero.push(sorted);
            continue;
        }
        let mut sorted = key;
        sorted.sort_unstable();
        if seen_zero.contains(&sorted) {
            return Err(FormatError::Build(BuildError::OrientationConflict {
                table: "bracket",
                key: format!("{:?}", entry.args),
            }));
        }
        l.insert_bracket(key, value)?;
    }

    let mut a = ColorCommAlgebra::new(a_basis, eps);
    for entry in &file.product {
        if entry.args.len() != 2 {
            return Err(FormatError::Malformed(format!(
                "product entry needs 2 arguments, got {:?}",
                entry.args
            )));
        }
        let key = [resolve(&a.basis, &entry.args[0])?, resolve(&a.basis, &entry.args[1])?];
        let value = vector_from_map(&entry.value, &a.basis)?;
        a.insert_product(key, value)?;
    }

    let mut pair = RinehartPair::new(l, a)?;
    for entry in &file.action {
        if entry.args.len() != 2 {
            return Err(FormatError::Malformed(format!(
                "action entry needs 2 arguments (a, x), got {:?}",
                entry.args
            )));
        }
        let ai = resolve(&pair.a.basis, &entry.args[0])?;
        let li = resolve(&pair.l.basis, &entry.args[1])?;
        let value = vector_from_map(&entry.value, &pair.l.basis)?;
        pair.insert_action(ai, li, value)?;
    }
    for entry in &file.rho {
        if entry.args.len() != 3 {
            return Err(FormatError::Malformed(format!(
                "rho entry needs 3 arguments (x, y, a), got {:?}",
                entry.args
            )));
        }
        let i = resolve(&pair.l.basis, &entry.args[0])?;
        let j = resolve(&pair.l.basis, &entry.args[1])?;
        let k = resolve(&pair.a.basis, &entry.args[2])?;
        let value = vector_from_map(&entry.value, &pair.a.basis)?;
        pair.insert_rho(i, j, k, value)?;
    }
    if let Some(cartan) = &file.cartan {
        for name in cartan {
            resolve(&pair.l.basis, name)?;
        }
    }
    Ok(pair)
}

fn map_from_vector(v: &[Q], basis: &GradedBasis) -> BTreeMap<String, String> {
    let mut map = BTreeMap::new();
    for (i, c) in v.iter().enumerate() {
        if !num_traits::Zero::is_zero(c) {
            map.insert(basis.name(i).to_string(), format_q(c));
        }
    }
    map
}

/// Canonical file for a pair: entries iterate the canonical tables in key
/// order, values carry reduced scalar strings.
pub fn to_file(pair: &RinehartPair<Q>, cartan: Option<Vec<String>>) -> AlgebraFile {
    let l_basis = pair
        .l
        .basis
        .names
        .iter()
        .zip(&pair.l.basis.degrees)
        .map(|(n, d)| BasisEntry {
            name: n.clone(),
            degree: d.clone(),
        })
        .collect();
    let a_basis = pair
        .a
        .basis
        .names
        .iter()
        .zip(&pair.a.basis.degrees)
        .map(|(n, d)| BasisEntry {
            name: n.clone(),
            degree: d.clone(),
        })
        .collect();
    let bracket = pair
        .l
        .bracket
        .iter()
        .map(|(key, value)| TableEntry {
            args: key.iter().map(|&i| pair.l.basis.name(i).to_string()).collect(),
            value: map_from_vector(value, &pair.l.basis),
        })
        .collect();
    let product = pair
        .a
        .product
        .iter()
        .map(|(key, value)| TableEntry {
            args: key.iter().map(|&i| pair.a.basis.name(i).to_string()).collect(),
            value: map_from_vector(value, &pair.a.basis),
        })
        .collect();
    let action = pair
        .action
        .iter()
        .map(|((ai, li), value)| TableEntry {
            args: vec![
                pair.a.basis.name(*ai).to_string(),
                pair.l.basis.name(*li).to_string(),
            ],
            value: map_from_vector(value, &pair.l.basis),
        })
        .collect();
    let mut rho = Vec::new();
    for (key, cols) in &pair.rho {
        for (k, col) in cols.iter().enumerate() {
            if crate::subspace::is_zero_vec(col) {
                continue;
            }
            rho.push(TableEntry {
                args: vec![
                    pair.l.basis.name(key[0]).to_string(),
                    pair.l.basis.name(key[1]).to_string(),
                    pair.a.basis.name(k).to_string(),
                ],
                value: map_from_vector(col, &pair.a.basis),
            });
        }
    }
    AlgebraFile {
        group: pair.eps().group.clone(),
        epsilon: pair.eps().form.clone(),
        l_basis,
        a_basis,
        bracket,
        product,
        action,
        rho,
        cartan,
    }
}

pub fn emit_string(file: &AlgebraFile) -> String {
    let mut s = serde_json::to_string_pretty(file).expect("serializable");
    s.push('\n');
    s
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::axioms::{all_passed, validate_all};
    use crate::builtins;

    #[test]
    fn builtins_round_trip_byte_stable() {
        for name in builtins::BUILTIN_NAMES {
            let pair = builtins::builtin(name).unwrap();
            let file = to_file(&pair, builtins::builtin_cartan(name));
            let text = emit_string(&file);
            let reparsed = parse_file(&text).unwrap();
            let rebuilt = build_pair(&reparsed).unwrap();
            let text2 = emit_string(&to_file(&rebuilt, reparsed.cartan.clone()));
            assert_eq!(text, text2, "round trip for {name}");
            assert!(all_passed(&validate_all(&rebuilt)));
        }
    }

    #[test]
    fn conflicting_orientations_are_rejected() {
        let pair = builtins::b1();
        let mut file = to_file(&pair, None);
        // skew forces [e2,e1,e3] = -e4; claim +e4
        file.bracket.push(TableEntry {
            args: vec!["e2".into(), "e1".into(), "e3".into()],
            value: BTreeMap::from([("e4".into(), "1".into())]),
        });
        let err = build_pair(&file).unwrap_err();
        assert!(matches!(err, FormatError::Build(BuildError::OrientationConflict { .. })));
    }

    #[test]
    fn explicit_zero_conflicts_with_nonzero_orientation() {
        let pair = builtins::b1();
        let mut file = to_file(&pair, None);
        file.bracket.push(TableEntry {
            args: vec!["e1".into(), "e2".into(), "e3".into()],
            value: BTreeMap::new(),
        });
        let err = build_pair(&file).unwrap_err();
        assert!(matches!(err, FormatError::Build(BuildError::OrientationConflict { .. })));
    }

    #[test]
    fn unknown_names_and_bad_scalars_are_rejected() {
        let pair = builtins::b0();
        let mut file = to_file(&pair, None);
        file.bracket.push(TableEntry {
            args: vec!["e1".into(), "e2".into(), "nope".into()],
            value: BTreeMap::new(),
        });
        assert!(build_pair(&file).is_err());

        let mut file = to_file(&builtins::b0(), None);
        file.product.push(TableEntry {
            args: vec!["u".into(), "u".into()],
            value: BTreeMap::from([("u".into(), "1/0".into())]),
        });
        assert!(matches!(build_pair(&file).unwrap_err(), FormatError::Scalar(_)));
    }

    #[test]
    fn degree_violations_are_build_errors() {
        let text = r#"{
          "group": {"moduli": [2]},
          "epsilon": {"exponent_matrix": [[1]]},
          "l_basis": [{"name": "x", "degree": [1]}, {"name": "y", "degree": [0]}, {"name": "z", "degree": [0]}],
          "a_basis": [{"name": "u", "degree": [0]}],
          "bracket": [{"args": ["x", "y", "z"], "value": {"y": "1"}}]
        }"#;
        let file = parse_file(text).unwrap();
        assert!(matches!(
            build_pair(&file).unwrap_err(),
            FormatError::Build(BuildError::DegreeViolation { .. })
        ));
    }
}
