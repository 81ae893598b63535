//! Builtin example instances, pinned by structure constants and re-validated
//! by the test suite rather than trusted.

use crate::algebra::{
    direct_sum, relabel, ColorCommAlgebra, GradedBasis, LieColorAlgebra, RinehartPair,
    ThreeLieColorAlgebra,
};
use crate::grading::{BiCharacter, GradingGroup};
use crate::scalar::{Scalar, Q};
use crate::subspace::{zero_vec, Vector};
use std::collections::BTreeMap;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
#[error("unknown builtin {0:?} (expected one of B0, B1, B2, B3, B3sum)")]
pub struct UnknownBuiltin(pub String);

pub const BUILTIN_NAMES: [&str; 5] = ["B0", "B1", "B2", "B3", "B3sum"];

/// The Cartan declaration that accompanies a builtin, when it has one.
pub fn builtin_cartan(name: &str) -> Option<Vec<String>> {
    match name {
        "B0" => Some(vec!["e1".into(), "e2".into()]),
        "B3" => Some(vec!["h1".into(), "h2".into()]),
        "B3sum" => Some(vec!["h1_1".into(), "h2_1".into(), "h1_2".into(), "h2_2".into()]),
        _ => None,
    }
}

pub fn builtin(name: &str) -> Result<RinehartPair<Q>, UnknownBuiltin> {
    match name {
        "B0" => Ok(b0()),
        "B1" => Ok(b1()),
        "B2" => Ok(b2()),
        "B3" => Ok(b3()),
        "B3sum" => Ok(b3sum()),
        other => Err(UnknownBuiltin(other.to_string())),
    }
}

fn trivial_basis(names: &[&str]) -> GradedBasis {
    GradedBasis::new(names.iter().map(|n| (n.to_string(), vec![0])).collect()).unwrap()
}

fn unit<S: Scalar>(n: usize, i: usize, c: i64) -> Vector<S> {
    let mut v = zero_vec(n);
    v[i] = S::from_int(c);
    v
}

/// Two-dimensional abelian L, one-dimensional A with zero product, trivial
/// group; everything vanishes.
pub fn b0() -> RinehartPair<Q> {
    let l = ThreeLieColorAlgebra::new(trivial_basis(&["e1", "e2"]), BiCharacter::trivial());
    let a = ColorCommAlgebra::new(trivial_basis(&["u"]), BiCharacter::trivial());
    RinehartPair::new(l, a).unwrap()
}

/// The simple four-dimensional 3-Lie algebra with all-plus structure
/// constants, zero anchor, unital one-dimensional A acting as zero.
pub fn b1() -> RinehartPair<Q> {
    let mut l = ThreeLieColorAlgebra::new(trivial_basis(&["e1", "e2", "e3", "e4"]), BiCharacter::trivial());
    l.insert_bracket([0, 1, 2], unit(4, 3, 1)).unwrap();
    l.insert_bracket([0, 1, 3], unit(4, 2, 1)).unwrap();
    l.insert_bracket([0, 2, 3], unit(4, 1, 1)).unwrap();
    l.insert_bracket([1, 2, 3], unit(4, 0, 1)).unwrap();
    let mut a = ColorCommAlgebra::new(trivial_basis(&["u"]), BiCharacter::trivial());
    a.insert_product([0, 0], unit(1, 0, 1)).unwrap();
    let mut pair = RinehartPair::new(l, a).unwrap();
    for li in 0..4 {
        pair.insert_action(0, li, unit(4, li, 1)).unwrap();
    }
    pair
}

/// Trace construction over Z2 x Z2: a Heisenberg-like color Lie algebra with
/// [e1, e2] = z and central trace element h gives the ternary bracket
/// [h, e1, e2] = z.
pub fn b2() -> RinehartPair<Q> {
    let group = GradingGroup::new(vec![2, 2]).unwrap();
    let eps = BiCharacter::exponent(group, vec![vec![0, 1], vec![1, 0]]).unwrap();
    let basis = GradedBasis::new(vec![
        ("h".into(), vec![0, 0]),
        ("e1".into(), vec![1, 0]),
        ("e2".into(), vec![0, 1]),
        ("z".into(), vec![1, 1]),
    ])
    .unwrap();
    let mut lc = LieColorAlgebra::new(basis, eps.clone());
    lc.insert_bracket([1, 2], unit(4, 3, 1)).unwrap();
    let a_basis = GradedBasis::new(vec![("u".into(), vec![0, 0])]).unwrap();
    let a = ColorCommAlgebra::new(a_basis, eps);
    let tau: Vec<Q> = vec![Q::from_int(1), Q::from_int(0), Q::from_int(0), Q::from_int(0)];
    crate::algebra::tau_construct(&lc, &a, &BTreeMap::new(), &[], &tau)
        .expect("B2 trace construction is valid")
}

/// Split pair: 2-dim Cartan H = span{h1, h2}, root vectors x+- with
/// [h1, h2, x+-] = +-x+-, weight vectors a+- with rho(h1, h2)(a+-) = +-a+-,
/// plus the unit w of A (needed so that AA = A and Ann(A) = 0).
pub fn b3() -> RinehartPair<Q> {
    b3_named(|n| n.to_string())
}

fn b3_named(rename: impl Fn(&str) -> String) -> RinehartPair<Q> {
    let l_basis = GradedBasis::new(
        ["h1", "h2", "x+", "x-"].iter().map(|n| (rename(n), vec![0])).collect(),
    )
    .unwrap();
    let a_basis = GradedBasis::new(
        ["w", "a+", "a-"].iter().map(|n| (rename(n), vec![0])).collect(),
    )
    .unwrap();
    let mut l = ThreeLieColorAlgebra::new(l_basis, BiCharacter::trivial());
    l.insert_bracket([0, 1, 2], unit(4, 2, 1)).unwrap();
    l.insert_bracket([0, 1, 3], unit(4, 3, -1)).unwrap();
    let mut a = ColorCommAlgebra::new(a_basis, BiCharacter::trivial());
    a.insert_product([0, 0], unit(3, 0, 1)).unwrap();
    a.insert_product([0, 1], unit(3, 1, 1)).unwrap();
    a.insert_product([0, 2], unit(3, 2, 1)).unwrap();
    let mut pair = RinehartPair::new(l, a).unwrap();
    pair.insert_rho(0, 1, 1, unit(3, 1, 1)).unwrap();
    pair.insert_rho(0, 1, 2, unit(3, 2, -1)).unwrap();
    // w acts as the identity; a+- map h1 into the root lines
    for li in 0..4 {
        pair.insert_action(0, li, unit(4, li, 1)).unwrap();
    }
    pair.insert_action(1, 0, unit(4, 2, 1)).unwrap();
    pair.insert_action(2, 0, unit(4, 3, 1)).unwrap();
    pair
}

/// Direct sum of two relabeled copies of B3 (suffixes `_1`, `_2`).
pub fn b3sum() -> RinehartPair<Q> {
    let left = b3_named(|n| format!("{n}_1"));
    let right = b3_named(|n| format!("{n}_2"));
    direct_sum(&left, &right).expect("disjoint names")
}

/// Relabel helper re-exported for tests building custom sums.
pub fn renamed(p: &RinehartPair<Q>, suffix: &str) -> RinehartPair<Q> {
    relabel(p, |n| format!("{n}{suffix}"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::axioms::{all_passed, validate_all};

    #[test]
    fn all_builtins_validate() {
        for name in BUILTIN_NAMES {
            let p = builtin(name).unwrap();
            let checks = validate_all(&p);
            assert!(
                all_passed(&checks),
                "builtin {name} fails: {:?}",
                checks
                    .iter()
                    .filter(|c| !c.passed())
                    .map(|c| c.summary())
                    .collect::<Vec<_>>()
            );
        }
    }

    #[test]
    fn unknown_builtin_is_an_error() {
        assert!(builtin("B9").is_err());
    }

    #[test]
    fn b2_bracket_recovers_binary_bracket() {
        let p = b2();
        // [h, e1, e2] = z
        assert_eq!(p.l.br(0, 1, 2), Some(unit(4, 3, 1)));
        // swapping e1, e2 costs -eps(e1,e2) = +1 in the color setting
        assert_eq!(p.l.br(0, 2, 1), Some(unit(4, 3, 1)));
        // swapping h past e1 costs -eps = -1 as usual
        assert_eq!(p.l.br(1, 0, 2), Some(unit(4, 3, -1)));
    }

    #[test]
    fn b3sum_doubles_dimensions() {
        let p = b3sum();
        assert_eq!(p.dim_l(), 8);
        assert_eq!(p.dim_a(), 6);
    }
}
