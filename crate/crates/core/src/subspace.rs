//! Dense exact vectors and the subspace lattice.
//!
//! A [`Subspace`] is stored as a reduced row-echelon basis inside a fixed
//! ambient coordinate space, so two subspaces are equal iff their stored rows
//! are identical. All lattice operations (sum, intersection, membership,
//! complement) are exact; no tolerances anywhere.

use crate::scalar::Scalar;
use thiserror::Error;

pub type Vector<S> = Vec<S>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum LinalgError {
    #[error("ambient dimension mismatch: expected {expected}, got {got}")]
    DimMismatch { expected: usize, got: usize },
    #[error("subspace is not contained in the claimed enclosing space")]
    NotContained,
}

pub fn zero_vec<S: Scalar>(dim: usize) -> Vector<S> {
    vec![S::zero(); dim]
}

pub fn unit_vec<S: Scalar>(dim: usize, i: usize) -> Vector<S> {
    let mut v = zero_vec(dim);
    v[i] = S::one();
    v
}

pub fn is_zero_vec<S: Scalar>(v: &[S]) -> bool {
    v.iter().all(|x| x.is_zero())
}

pub fn add_assign<S: Scalar>(dst: &mut [S], src: &[S]) {
    for (d, s) in dst.iter_mut().zip(src) {
        *d = d.clone() + s.clone();
    }
}

pub fn add_assign_scaled<S: Scalar>(dst: &mut [S], src: &[S], c: &S) {
    if c.is_zero() {
        return;
    }
    for (d, s) in dst.iter_mut().zip(src) {
        *d = d.clone() + c.clone() * s.clone();
    }
}

pub fn scale_vec<S: Scalar>(v: &[S], c: &S) -> Vector<S> {
    v.iter().map(|x| x.clone() * c.clone()).collect()
}

/// In-place reduced row echelon form. Returns the pivot columns.
fn rref_in_place<S: Scalar>(rows: &mut Vec<Vector<S>>) -> Vec<usize> {
    let ncols = rows.first().map_or(0, |r| r.len());
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        let inv = S::one() / rows[r][c].clone();
        rows[r] = scale_vec(&rows[r], &inv);
        for i in 0..rows.len() {
            if i != r && !rows[i][c].is_zero() {
                let f = -rows[i][c].clone();
                let row = rows[r].clone();
                add_assign_scaled(&mut rows[i], &row, &f);
            }
        }
        pivots.push(c);
        r += 1;
        if r == rows.len() {
            break;
        }
    }
    rows.truncate(r);
    pivots
}

/// A subspace of a fixed ambient coordinate space, kept in RREF.
#[derive(Debug, Clone, PartialEq)]
pub struct Subspace<S: Scalar> {
    ambient_dim: usize,
    rows: Vec<Vector<S>>,
    pivots: Vec<usize>,
}

impl<S: Scalar> Subspace<S> {
    pub fn zero(ambient_dim: usize) -> Self {
        Subspace {
            ambient_dim,
            rows: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub fn full(ambient_dim: usize) -> Self {
        let rows = (0..ambient_dim).map(|i| unit_vec(ambient_dim, i)).collect();
        Subspace {
            ambient_dim,
            rows,
            pivots: (0..ambient_dim).collect(),
        }
    }

    /// Row-reduce the given spanning set.
    pub fn span(ambient_dim: usize, rows: Vec<Vector<S>>) -> Result<Self, LinalgError> {
        for row in &rows {
            if row.len() != ambient_dim {
                return Err(LinalgError::DimMismatch {
                    expected: ambient_dim,
                    got: row.len(),
                });
            }
        }
        let mut rows = rows;
        let pivots = rref_in_place(&mut rows);
        Ok(Subspace {
            ambient_dim,
            rows,
            pivots,
        })
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn is_zero(&self) -> bool {
        self.rows.is_empty()
    }

    pub fn basis_rows(&self) -> &[Vector<S>] {
        &self.rows
    }

    fn check_dim(&self, other: &Self) -> Result<(), LinalgError> {
        if self.ambient_dim != other.ambient_dim {
            return Err(LinalgError::DimMismatch {
                expected: self.ambient_dim,
                got: other.ambient_dim,
            });
        }
        Ok(())
    }

    pub fn sum(&self, other: &Self) -> Result<Self, LinalgError> {
        self.check_dim(other)?;
        let rows = self.rows.iter().chain(&other.rows).cloned().collect();
        Subspace::span(self.ambient_dim, rows)
    }

    /// Zassenhaus: RREF of [S|S; T|0]; rows with zero left half span S ∩ T.
    pub fn intersect(&self, other: &Self) -> Result<Self, LinalgError> {
        self.check_dim(other)?;
        let d = self.ambient_dim;
        let mut stacked: Vec<Vector<S>> = Vec::with_capacity(self.dim() + other.dim());
        for row in &self.rows {
            let mut wide = row.clone();
            wide.extend_from_slice(row);
            stacked.push(wide);
        }
        for row in &other.rows {
            let mut wide = row.clone();
            wide.extend(zero_vec::<S>(d));
            stacked.push(wide);
        }
        rref_in_place(&mut stacked);
        let inter_rows: Vec<Vector<S>> = stacked
            .into_iter()
            .filter(|w| is_zero_vec(&w[..d]))
            .map(|w| w[d..].to_vec())
            .collect();
        Subspace::span(d, inter_rows)
    }

    /// Residue of `v` after reduction against the RREF basis; zero iff member.
    pub fn reduce(&self, v: &[S]) -> Result<Vector<S>, LinalgError> {
        if v.len() != self.ambient_dim {
            return Err(LinalgError::DimMismatch {
                expected: self.ambient_dim,
                got: v.len(),
            });
        }
        let mut w = v.to_vec();
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            if !w[p].is_zero() {
                let f = -w[p].clone();
                add_assign_scaled(&mut w, row, &f);
            }
        }
        Ok(w)
    }

    pub fn contains_vec(&self, v: &[S]) -> Result<bool, LinalgError> {
        Ok(is_zero_vec(&self.reduce(v)?))
    }

    pub fn contains(&self, other: &Self) -> Result<bool, LinalgError> {
        self.check_dim(other)?;
        for row in &other.rows {
            if !self.contains_vec(row)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Deterministic complement of `self` inside `within`: greedily extend
    /// this basis by rows of `within`, keeping those that enlarge the span.
    pub fn complement_in(&self, within: &Self) -> Result<Self, LinalgError> {
        self.check_dim(within)?;
        if !within.contains(self)? {
            return Err(LinalgError::NotContained);
        }
        let mut current = self.clone();
        let mut picked: Vec<Vector<S>> = Vec::new();
        for row in &within.rows {
            if !current.contains_vec(row)? {
                picked.push(row.clone());
                current = current.sum(&Subspace::span(self.ambient_dim, vec![row.clone()])?)?;
            }
        }
        Subspace::span(self.ambient_dim, picked)
    }
}

/// Nullspace of the linear map given by `rows` acting on column vectors:
/// { x : Σ_j rows[i][j] x_j = 0 for all i }, as a subspace of F^ncols.
pub fn kernel<S: Scalar>(rows: &[Vector<S>], ncols: usize) -> Subspace<S> {
    let mut m: Vec<Vector<S>> = rows.to_vec();
    let pivots = rref_in_place(&mut m);
    let pivot_set: Vec<bool> = {
        let mut s = vec![false; ncols];
        for &p in &pivots {
            s[p] = true;
        }
        s
    };
    let mut basis = Vec::new();
    for free in 0..ncols {
        if pivot_set[free] {
            continue;
        }
        let mut v = zero_vec::<S>(ncols);
        v[free] = S::one();
        for (row, &p) in m.iter().zip(&pivots) {
            v[p] = -row[free].clone();
        }
        basis.push(v);
    }
    Subspace::span(ncols, basis).expect("kernel rows have ambient length")
}
