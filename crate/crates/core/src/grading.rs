//! Finite abelian grading groups and skew-symmetric bi-characters.
//!
//! A grading group is a finite product of cyclic groups Z_{m_1} x ... x Z_{m_r};
//! an element is a tuple of residues. The bi-character supplies every sign in
//! the color identities and is restricted to values +-1 so that all arithmetic
//! stays rational.

use crate::report::Check;
use crate::scalar::Scalar;
use serde::{Deserialize, Serialize};
use thiserror::Error;

pub type GroupElement = Vec<u32>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GradingError {
    #[error("modulus must be positive")]
    ZeroModulus,
    #[error("element has {got} residues, group has rank {expected}")]
    RankMismatch { expected: usize, got: usize },
    #[error("residue {value} out of range for modulus {modulus}")]
    ResidueOutOfRange { value: u32, modulus: u32 },
    #[error("exponent matrix must be {rank}x{rank}")]
    BadExponentMatrix { rank: usize },
    #[error("bi-character table must be {order}x{order}")]
    BadTable { order: usize },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GradingGroup {
    pub moduli: Vec<u32>,
}

impl GradingGroup {
    pub fn new(moduli: Vec<u32>) -> Result<Self, GradingError> {
        if moduli.iter().any(|&m| m == 0) {
            return Err(GradingError::ZeroModulus);
        }
        Ok(GradingGroup { moduli })
    }

    pub fn trivial() -> Self {
        GradingGroup { moduli: vec![1] }
    }

    pub fn rank(&self) -> usize {
        self.moduli.len()
    }

    pub fn order(&self) -> usize {
        self.moduli.iter().map(|&m| m as usize).product()
    }

    pub fn zero(&self) -> GroupElement {
        vec![0; self.rank()]
    }

    pub fn check(&self, g: &GroupElement) -> Result<(), GradingError> {
        if g.len() != self.rank() {
            return Err(GradingError::RankMismatch {
                expected: self.rank(),
                got: g.len(),
            });
        }
        for (&value, &modulus) in g.iter().zip(&self.moduli) {
            if value >= modulus {
                return Err(GradingError::ResidueOutOfRange { value, modulus });
            }
        }
        Ok(())
    }

    pub fn add(&self, a: &GroupElement, b: &GroupElement) -> GroupElement {
        a.iter()
            .zip(b)
            .zip(&self.moduli)
            .map(|((&x, &y), &m)| (x + y) % m)
            .collect()
    }

    pub fn neg(&self, a: &GroupElement) -> GroupElement {
        a.iter()
            .zip(&self.moduli)
            .map(|(&x, &m)| (m - x) % m)
            .collect()
    }

    pub fn sum3(&self, a: &GroupElement, b: &GroupElement, c: &GroupElement) -> GroupElement {
        self.add(&self.add(a, b), c)
    }

    /// All elements in lexicographic order (first coordinate most significant).
    pub fn elements(&self) -> Vec<GroupElement> {
        let mut out = vec![self.zero()];
        for (i, &m) in self.moduli.iter().enumerate() {
            let prev = std::mem::take(&mut out);
            for e in prev {
                for v in 0..m {
                    let mut e2 = e.clone();
                    e2[i] = v;
                    out.push(e2);
                }
            }
        }
        out
    }

    /// Index of an element in [`elements`](Self::elements) order.
    pub fn index_of(&self, g: &GroupElement) -> usize {
        let mut idx = 0usize;
        for (&v, &m) in g.iter().zip(&self.moduli) {
            idx = idx * m as usize + v as usize;
        }
        idx
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum BiCharForm {
    Exponent { exponent_matrix: Vec<Vec<i64>> },
    Table { table: Vec<Vec<i64>> },
}

/// A (claimed) skew-symmetric bi-character on a finite grading group.
///
/// Either an exponent matrix M with eps(g,h) = (-1)^(sum_ij M_ij g_i h_j),
/// or an explicit |G| x |G| integer table indexed in element order. Tables
/// are kept as given so the validator can exhibit non-unit values.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BiCharacter {
    pub group: GradingGroup,
    #[serde(flatten)]
    pub form: BiCharForm,
}

impl BiCharacter {
    pub fn exponent(group: GradingGroup, matrix: Vec<Vec<i64>>) -> Result<Self, GradingError> {
        let r = group.rank();
        if matrix.len() != r || matrix.iter().any(|row| row.len() != r) {
            return Err(GradingError::BadExponentMatrix { rank: r });
        }
        Ok(BiCharacter {
            group,
            form: BiCharForm::Exponent {
                exponent_matrix: matrix,
            },
        })
    }

    pub fn table(group: GradingGroup, table: Vec<Vec<i64>>) -> Result<Self, GradingError> {
        let n = group.order();
        if table.len() != n || table.iter().any(|row| row.len() != n) {
            return Err(GradingError::BadTable { order: n });
        }
        Ok(BiCharacter { group, form: BiCharForm::Table { table } })
    }

    pub fn trivial() -> Self {
        BiCharacter::exponent(GradingGroup::trivial(), vec![vec![0]]).unwrap()
    }

    /// The super sign on Z_2: eps(x, y) = (-1)^(x y).
    pub fn super_sign() -> Self {
        BiCharacter::exponent(GradingGroup::new(vec![2]).unwrap(), vec![vec![1]]).unwrap()
    }

    /// Raw integer value; a valid bi-character only ever yields +-1.
    pub fn eps_int(&self, g: &GroupElement, h: &GroupElement) -> i64 {
        match &self.form {
            BiCharForm::Exponent { exponent_matrix } => {
                let mut e = 0i64;
                for (i, &gi) in g.iter().enumerate() {
                    for (j, &hj) in h.iter().enumerate() {
                        e += exponent_matrix[i][j] * gi as i64 * hj as i64;
                    }
                }
                if e.rem_euclid(2) == 0 {
                    1
                } else {
                    -1
                }
            }
            BiCharForm::Table { table } => table[self.group.index_of(g)][self.group.index_of(h)],
        }
    }

    pub fn eps<S: Scalar>(&self, g: &GroupElement, h: &GroupElement) -> S {
        S::from_int(self.eps_int(g, h))
    }

    /// Exhaustive check of Definition-level bi-character laws:
    /// values are +-1, eps(g,h)eps(h,g) = 1, and multiplicativity in each slot.
    pub fn validate(&self) -> Check {
        let elems = self.group.elements();
        let mut check = Check::new("bicharacter");
        for g in &elems {
            for h in &elems {
                check.checked += 1;
                let v = self.eps_int(g, h);
                if v != 1 && v != -1 {
                    check.violate(
                        vec![format!("{g:?}"), format!("{h:?}")],
                        format!("eps = {v}"),
                        "value in {+1, -1}".into(),
                    );
                }
            }
        }
        for g in &elems {
            for h in &elems {
                check.checked += 1;
                let lhs = self.eps_int(g, h) * self.eps_int(h, g);
                if lhs != 1 {
                    check.violate(
                        vec![format!("{g:?}"), format!("{h:?}")],
                        format!("eps(g,h)eps(h,g) = {lhs}"),
                        "1".into(),
                    );
                }
            }
        }
        for g in &elems {
            for h in &elems {
                for f in &elems {
                    check.checked += 2;
                    let gh = self.group.add(g, h);
                    let left = self.eps_int(&gh, f);
                    let right = self.eps_int(g, f) * self.eps_int(h, f);
                    if left != right {
                        check.violate(
                            vec![format!("{g:?}"), format!("{h:?}"), format!("{f:?}")],
                            format!("eps(g+h,f) = {left}"),
                            format!("eps(g,f)eps(h,f) = {right}"),
                        );
                    }
                    let hf = self.group.add(h, f);
                    let left = self.eps_int(g, &hf);
                    let right = self.eps_int(g, h) * self.eps_int(g, f);
                    if left != right {
                        check.violate(
                            vec![format!("{g:?}"), format!("{h:?}"), format!("{f:?}")],
                            format!("eps(g,h+f) = {left}"),
                            format!("eps(g,h)eps(g,f) = {right}"),
                        );
                    }
                }
            }
        }
        check
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::Q;

    #[test]
    fn eps_of_zero_is_one() {
        let b = BiCharacter::super_sign();
        for g in b.group.elements() {
            assert_eq!(b.eps_int(&g, &b.group.zero()), 1);
            assert_eq!(b.eps_int(&b.group.zero(), &g), 1);
        }
    }

    #[test]
    fn super_sign_on_odd_pair() {
        let b = BiCharacter::super_sign();
        assert_eq!(b.eps_int(&vec![1], &vec![1]), -1);
        assert_eq!(b.eps::<Q>(&vec![1], &vec![1]), -Q::from_int(1));
    }

    #[test]
    fn z2xz2_off_diagonal_matrix() {
        let g = GradingGroup::new(vec![2, 2]).unwrap();
        let b = BiCharacter::exponent(g, vec![vec![0, 1], vec![1, 0]]).unwrap();
        assert_eq!(b.eps_int(&vec![1, 0], &vec![0, 1]), -1);
        assert_eq!(b.eps_int(&vec![1, 0], &vec![1, 0]), 1);
        assert!(b.validate().passed());
    }

    #[test]
    fn trivial_and_super_validate() {
        assert!(BiCharacter::trivial().validate().passed());
        assert!(BiCharacter::super_sign().validate().passed());
    }

    #[test]
    fn non_unit_table_value_is_flagged() {
        let g = GradingGroup::new(vec![2]).unwrap();
        let b = BiCharacter::table(g, vec![vec![1, 1], vec![1, 2]]).unwrap();
        let check = b.validate();
        assert!(!check.passed());
        assert!(check
            .violations
            .iter()
            .any(|v| v.left.contains("eps = 2") || v.left.contains("eps(g,h)eps(h,g)")));
    }

    #[test]
    fn z3_with_odd_exponent_fails_multiplicativity() {
        let g = GradingGroup::new(vec![3]).unwrap();
        let b = BiCharacter::exponent(g, vec![vec![1]]).unwrap();
        assert!(!b.validate().passed());
    }

    #[test]
    fn element_enumeration_and_indexing() {
        let g = GradingGroup::new(vec![2, 3]).unwrap();
        let elems = g.elements();
        assert_eq!(elems.len(), 6);
        for (i, e) in elems.iter().enumerate() {
            assert_eq!(g.index_of(e), i);
        }
        assert_eq!(g.add(&vec![1, 2], &vec![1, 2]), vec![0, 1]);
        assert_eq!(g.neg(&vec![1, 2]), vec![1, 1]);
    }
}
