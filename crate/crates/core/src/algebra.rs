//! Structure-constant containers for the 3-Lie color algebra L, the color
//! commutative algebra A, the anchor rho and the A-action on L, plus the
//! constructors: trace construction, trivial anchor, direct sums.
//!
//! Tables are stored on canonically oriented keys (sorted index tuples) and
//! other orientations are derived through the bi-character signs. Raw table
//! access stays public so tests can inject single-constant faults; the
//! validating constructors never produce non-canonical entries.

use crate::grading::{BiCharacter, GradingError, GroupElement};
use crate::scalar::Scalar;
use crate::subspace::{add_assign_scaled, is_zero_vec, zero_vec, Vector};
use std::collections::BTreeMap;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum BuildError {
    #[error("unknown basis name {0:?}")]
    UnknownBasisName(String),
    #[error("duplicate basis name {0:?}")]
    DuplicateName(String),
    #[error(transparent)]
    Grading(#[from] GradingError),
    #[error("bi-character fails its defining laws: {0}")]
    BadBicharacter(String),
    #[error("L and A must share one grading group and bi-character")]
    EpsilonMismatch,
    #[error("{table} entry {key:?}: degree additivity violated at output coordinate {coord:?}")]
    DegreeViolation {
        table: &'static str,
        key: String,
        coord: String,
    },
    #[error("{table} entry {key:?} contradicts an entry for another orientation")]
    OrientationConflict { table: &'static str, key: String },
    #[error("{table} entry {key:?} must vanish: the sign laws force it to equal its own negative")]
    ForcedZero { table: &'static str, key: String },
    #[error("value vector for {table} has length {got}, expected {expected}")]
    ValueLength {
        table: &'static str,
        expected: usize,
        got: usize,
    },
}

#[derive(Debug, Clone, PartialEq)]
pub struct GradedBasis {
    pub names: Vec<String>,
    pub degrees: Vec<GroupElement>,
}

impl GradedBasis {
    pub fn new(entries: Vec<(String, GroupElement)>) -> Result<Self, BuildError> {
        let mut names = Vec::with_capacity(entries.len());
        let mut degrees = Vec::with_capacity(entries.len());
        for (name, degree) in entries {
            if names.contains(&name) {
                return Err(BuildError::DuplicateName(name));
            }
            names.push(name);
            degrees.push(degree);
        }
        Ok(GradedBasis { names, degrees })
    }

    pub fn dim(&self) -> usize {
        self.names.len()
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    pub fn degree(&self, i: usize) -> &GroupElement {
        &self.degrees[i]
    }

    pub fn name(&self, i: usize) -> &str {
        &self.names[i]
    }
}

/// How a binary table transforms under swapping its two arguments.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SwapLaw {
    /// ab = eps(a,b) ba  (color-commutative product)
    CommEps,
    /// [a,b] = -eps(a,b) [b,a]  (color-skew bracket, anchor slots)
    SkewEps,
}

/// Canonicalize a pair key; returns (sorted key, sign, forced_zero).
fn canonical2(
    degrees: &[GroupElement],
    eps: &BiCharacter,
    key: [usize; 2],
    law: SwapLaw,
) -> ([usize; 2], i64, bool) {
    let [i, j] = key;
    let swap_sign = |a: usize, b: usize| -> i64 {
        let e = eps.eps_int(&degrees[a], &degrees[b]);
        match law {
            SwapLaw::CommEps => e,
            SwapLaw::SkewEps => -e,
        }
    };
    let (key, sign) = if i <= j {
        ([i, j], 1)
    } else {
        ([j, i], swap_sign(i, j))
    };
    let forced = if key[0] == key[1] {
        // x*x = s x*x with s the self-swap sign; s = -1 forces zero
        swap_sign(key[0], key[0]) == -1
    } else {
        false
    };
    (key, sign, forced)
}

/// Canonicalize a bracket triple; returns (sorted key, sign, forced_zero).
/// Both adjacent-swap laws carry the factor -eps of the swapped degrees.
fn canonical3(
    degrees: &[GroupElement],
    eps: &BiCharacter,
    key: [usize; 3],
) -> ([usize; 3], i64, bool) {
    let mut arr = key;
    let mut sign = 1i64;
    loop {
        let mut swapped = false;
        for p in 0..2 {
            if arr[p] > arr[p + 1] {
                sign *= -eps.eps_int(&degrees[arr[p]], &degrees[arr[p + 1]]);
                arr.swap(p, p + 1);
                swapped = true;
            }
        }
        if !swapped {
            break;
        }
    }
    let self_forces = |i: usize| -eps.eps_int(&degrees[i], &degrees[i]) == -1;
    let forced = (arr[0] == arr[1] && self_forces(arr[0])) || (arr[1] == arr[2] && self_forces(arr[1]));
    (arr, sign, forced)
}

fn check_value_degrees<S: Scalar>(
    table: &'static str,
    key_desc: String,
    expected: &GroupElement,
    out_basis: &GradedBasis,
    value: &[S],
) -> Result<(), BuildError> {
    for (l, c) in value.iter().enumerate() {
        if !c.is_zero() && out_basis.degree(l) != expected {
            return Err(BuildError::DegreeViolation {
                table,
                key: key_desc,
                coord: out_basis.name(l).to_string(),
            });
        }
    }
    Ok(())
}

fn scaled<S: Scalar>(v: &[S], sign: i64) -> Vector<S> {
    if sign == 1 {
        v.to_vec()
    } else {
        v.iter().map(|x| -x.clone()).collect()
    }
}

fn store_entry<S: Scalar, K: Ord + Copy + std::fmt::Debug>(
    table: &'static str,
    map: &mut BTreeMap<K, Vector<S>>,
    key: K,
    value: Vector<S>,
) -> Result<(), BuildError> {
    if let Some(existing) = map.get(&key) {
        if *existing != value {
            return Err(BuildError::OrientationConflict {
                table,
                key: format!("{key:?}"),
            });
        }
        return Ok(());
    }
    if !is_zero_vec(&value) {
        map.insert(key, value);
    }
    Ok(())
}

/// 3-Lie color algebra over a graded basis, bracket in structure constants.
#[derive(Debug, Clone, PartialEq)]
pub struct ThreeLieColorAlgebra<S: Scalar> {
    pub basis: GradedBasis,
    pub eps: BiCharacter,
    /// Canonical keys after building; tests may plant arbitrary keys.
    pub bracket: BTreeMap<[usize; 3], Vector<S>>,
}

impl<S: Scalar> ThreeLieColorAlgebra<S> {
    pub fn new(basis: GradedBasis, eps: BiCharacter) -> Self {
        ThreeLieColorAlgebra {
            basis,
            eps,
            bracket: BTreeMap::new(),
        }
    }

    pub fn dim(&self) -> usize {
        self.basis.dim()
    }

    /// Insert `[e_i, e_j, e_k] = value`, completing the orientation by the
    /// color skew laws and rejecting conflicting or forced-zero entries.
    pub fn insert_bracket(&mut self, key: [usize; 3], value: Vector<S>) -> Result<(), BuildError> {
        if value.len() != self.dim() {
            return Err(BuildError::ValueLength {
                table: "bracket",
                expected: self.dim(),
                got: value.len(),
            });
        }
        let (ckey, sign, forced) = canonical3(&self.basis.degrees, &self.eps, key);
        if forced {
            if !is_zero_vec(&value) {
                return Err(BuildError::ForcedZero {
                    table: "bracket",
                    key: format!("{key:?}"),
                });
            }
            return Ok(());
        }
        let expected = self.basis.degrees[key[0]].clone();
        let expected = key[1..]
            .iter()
            .fold(expected, |acc, &i| self.eps.group.add(&acc, &self.basis.degrees[i]));
        check_value_degrees("bracket", format!("{key:?}"), &expected, &self.basis, &value)?;
        store_entry("bracket", &mut self.bracket, ckey, scaled(&value, sign))
    }

    /// `[e_i, e_j, e_k]`; None means zero. Exact stored keys take precedence
    /// over sign derivation so planted faults stay visible to the validators.
    pub fn br(&self, i: usize, j: usize, k: usize) -> Option<Vector<S>> {
        if let Some(v) = self.bracket.get(&[i, j, k]) {
            return Some(v.clone());
        }
        let (ckey, sign, forced) = canonical3(&self.basis.degrees, &self.eps, [i, j, k]);
        if forced || ckey == [i, j, k] {
            return None;
        }
        self.bracket.get(&ckey).map(|v| scaled(v, sign))
    }

    /// `[e_i, e_j, w]` for a coordinate vector w.
    pub fn br_vec3(&self, i: usize, j: usize, w: &[S]) -> Vector<S> {
        let mut out = zero_vec(self.dim());
        for (k, c) in w.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if let Some(v) = self.br(i, j, k) {
                add_assign_scaled(&mut out, &v, c);
            }
        }
        out
    }

    /// `[e_i, w, e_k]` for a coordinate vector w in the middle slot.
    pub fn br_vec2(&self, i: usize, w: &[S], k: usize) -> Vector<S> {
        let mut out = zero_vec(self.dim());
        for (j, c) in w.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if let Some(v) = self.br(i, j, k) {
                add_assign_scaled(&mut out, &v, c);
            }
        }
        out
    }

    /// `[u, e_j, e_k]` for a coordinate vector u.
    pub fn br_vec1(&self, u: &[S], j: usize, k: usize) -> Vector<S> {
        let mut out = zero_vec(self.dim());
        for (i, c) in u.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if let Some(v) = self.br(i, j, k) {
                add_assign_scaled(&mut out, &v, c);
            }
        }
        out
    }

    /// Full trilinear bracket of coordinate vectors.
    pub fn br_vec(&self, u: &[S], v: &[S], w: &[S]) -> Vector<S> {
        let mut out = zero_vec(self.dim());
        for (i, a) in u.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in v.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                let ab = a.clone() * b.clone();
                for (k, c) in w.iter().enumerate() {
                    if c.is_zero() {
                        continue;
                    }
                    if let Some(val) = self.br(i, j, k) {
                        let coeff = ab.clone() * c.clone();
                        add_assign_scaled(&mut out, &val, &coeff);
                    }
                }
            }
        }
        out
    }
}

/// Color commutative associative algebra in structure constants.
#[derive(Debug, Clone, PartialEq)]
pub struct ColorCommAlgebra<S: Scalar> {
    pub basis: GradedBasis,
    pub eps: BiCharacter,
    pub product: BTreeMap<[usize; 2], Vector<S>>,
}

impl<S: Scalar> ColorCommAlgebra<S> {
    pub fn new(basis: GradedBasis, eps: BiCharacter) -> Self {
        ColorCommAlgebra {
            basis,
            eps,
            product: BTreeMap::new(),
        }
    }

    pub fn dim(&self) -> usize {
        self.basis.dim()
    }

    pub fn insert_product(&mut self, key: [usize; 2], value: Vector<S>) -> Result<(), BuildError> {
        if value.len() != self.dim() {
            return Err(BuildError::ValueLength {
                table: "product",
                expected: self.dim(),
                got: value.len(),
            });
        }
        let (ckey, sign, forced) = canonical2(&self.basis.degrees, &self.eps, key, SwapLaw::CommEps);
        if forced {
            if !is_zero_vec(&value) {
                return Err(BuildError::ForcedZero {
                    table: "product",
                    key: format!("{key:?}"),
                });
            }
            return Ok(());
        }
        let expected = self
            .eps
            .group
            .add(&self.basis.degrees[key[0]], &self.basis.degrees[key[1]]);
        check_value_degrees("product", format!("{key:?}"), &expected, &self.basis, &value)?;
        store_entry("product", &mut self.product, ckey, scaled(&value, sign))
    }

    pub fn prod(&self, i: usize, j: usize) -> Option<Vector<S>> {
        if let Some(v) = self.product.get(&[i, j]) {
            return Some(v.clone());
        }
        let (ckey, sign, forced) = canonical2(&self.basis.degrees, &self.eps, [i, j], SwapLaw::CommEps);
        if forced || ckey == [i, j] {
            return None;
        }
        self.product.get(&ckey).map(|v| scaled(v, sign))
    }

    pub fn prod_vec(&self, u: &[S], v: &[S]) -> Vector<S> {
        let mut out = zero_vec(self.dim());
        for (i, a) in u.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in v.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                if let Some(val) = self.prod(i, j) {
                    let coeff = a.clone() * b.clone();
                    add_assign_scaled(&mut out, &val, &coeff);
                }
            }
        }
        out
    }
}

/// Binary Lie color algebra; input to the trace construction.
#[derive(Debug, Clone, PartialEq)]
pub struct LieColorAlgebra<S: Scalar> {
    pub basis: GradedBasis,
    pub eps: BiCharacter,
    pub bracket: BTreeMap<[usize; 2], Vector<S>>,
}

impl<S: Scalar> LieColorAlgebra<S> {
    pub fn new(basis: GradedBasis, eps: BiCharacter) -> Self {
        LieColorAlgebra {
            basis,
            eps,
            bracket: BTreeMap::new(),
        }
    }

    pub fn dim(&self) -> usize {
        self.basis.dim()
    }

    pub fn insert_bracket(&mut self, key: [usize; 2], value: Vector<S>) -> Result<(), BuildError> {
        if value.len() != self.dim() {
            return Err(BuildError::ValueLength {
                table: "lie bracket",
                expected: self.dim(),
                got: value.len(),
            });
        }
        let (ckey, sign, forced) = canonical2(&self.basis.degrees, &self.eps, key, SwapLaw::SkewEps);
        if forced {
            if !is_zero_vec(&value) {
                return Err(BuildError::ForcedZero {
                    table: "lie bracket",
                    key: format!("{key:?}"),
                });
            }
            return Ok(());
        }
        let expected = self
            .eps
            .group
            .add(&self.basis.degrees[key[0]], &self.basis.degrees[key[1]]);
        check_value_degrees("lie bracket", format!("{key:?}"), &expected, &self.basis, &value)?;
        store_entry("lie bracket", &mut self.bracket, ckey, scaled(&value, sign))
    }

    pub fn br(&self, i: usize, j: usize) -> Option<Vector<S>> {
        if let Some(v) = self.bracket.get(&[i, j]) {
            return Some(v.clone());
        }
        let (ckey, sign, forced) = canonical2(&self.basis.degrees, &self.eps, [i, j], SwapLaw::SkewEps);
        if forced || ckey == [i, j] {
            return None;
        }
        self.bracket.get(&ckey).map(|v| scaled(v, sign))
    }

    pub fn br_vec(&self, u: &[S], v: &[S]) -> Vector<S> {
        let mut out = zero_vec(self.dim());
        for (i, a) in u.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in v.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                if let Some(val) = self.br(i, j) {
                    let coeff = a.clone() * b.clone();
                    add_assign_scaled(&mut out, &val, &coeff);
                }
            }
        }
        out
    }

    /// Exhaustive check of the color Leibniz form of the Jacobi identity:
    /// [x,[y,z]] = [[x,y],z] + eps(x,y)[y,[x,z]].
    pub fn jacobi_holds(&self) -> bool {
        let n = self.dim();
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    let inner = self.br(j, k).unwrap_or_else(|| zero_vec(n));
                    let mut lhs = zero_vec(n);
                    for (l, c) in inner.iter().enumerate() {
                        if !c.is_zero() {
                            if let Some(v) = self.br(i, l) {
                                add_assign_scaled(&mut lhs, &v, c);
                            }
                        }
                    }
                    let mut rhs = zero_vec(n);
                    if let Some(xy) = self.br(i, j) {
                        for (l, c) in xy.iter().enumerate() {
                            if !c.is_zero() {
                                if let Some(v) = self.br(l, k) {
                                    add_assign_scaled(&mut rhs, &v, c);
                                }
                            }
                        }
                    }
                    let e: S = self
                        .eps
                        .eps(&self.basis.degrees[i], &self.basis.degrees[j]);
                    if let Some(xz) = self.br(i, k) {
                        for (l, c) in xz.iter().enumerate() {
                            if !c.is_zero() {
                                if let Some(v) = self.br(j, l) {
                                    let coeff = e.clone() * c.clone();
                                    add_assign_scaled(&mut rhs, &v, &coeff);
                                }
                            }
                        }
                    }
                    for (a, b) in lhs.iter().zip(&rhs) {
                        if a != b {
                            return false;
                        }
                    }
                }
            }
        }
        true
    }
}

/// The full structure: L, A, the bi-character, the A-action on L, and the
/// anchor rho given by rho(e_i, e_j)(a_k) = sum_l r_{ijk}^l a_l.
#[derive(Debug, Clone, PartialEq)]
pub struct RinehartPair<S: Scalar> {
    pub l: ThreeLieColorAlgebra<S>,
    pub a: ColorCommAlgebra<S>,
    /// (a index, l index) -> L-vector
    pub action: BTreeMap<(usize, usize), Vector<S>>,
    /// canonical L-pair -> image of each A basis vector
    pub rho: BTreeMap<[usize; 2], Vec<Vector<S>>>,
}

impl<S: Scalar> RinehartPair<S> {
    /// Assemble without any validation; loaders validate at insert time and
    /// tests use this to plant faults for the axiom checkers to find.
    pub fn assemble_unchecked(
        l: ThreeLieColorAlgebra<S>,
        a: ColorCommAlgebra<S>,
        action: BTreeMap<(usize, usize), Vector<S>>,
        rho: BTreeMap<[usize; 2], Vec<Vector<S>>>,
    ) -> Self {
        RinehartPair { l, a, action, rho }
    }

    pub fn new(l: ThreeLieColorAlgebra<S>, a: ColorCommAlgebra<S>) -> Result<Self, BuildError> {
        if l.eps != a.eps {
            return Err(BuildError::EpsilonMismatch);
        }
        let bichar = l.eps.validate();
        if !bichar.passed() {
            return Err(BuildError::BadBicharacter(bichar.summary()));
        }
        Ok(RinehartPair {
            l,
            a,
            action: BTreeMap::new(),
            rho: BTreeMap::new(),
        })
    }

    pub fn eps(&self) -> &BiCharacter {
        &self.l.eps
    }

    pub fn dim_l(&self) -> usize {
        self.l.dim()
    }

    pub fn dim_a(&self) -> usize {
        self.a.dim()
    }

    pub fn insert_action(&mut self, a_idx: usize, l_idx: usize, value: Vector<S>) -> Result<(), BuildError> {
        if value.len() != self.dim_l() {
            return Err(BuildError::ValueLength {
                table: "action",
                expected: self.dim_l(),
                got: value.len(),
            });
        }
        let expected = self
            .eps()
            .group
            .add(&self.a.basis.degrees[a_idx], &self.l.basis.degrees[l_idx]);
        check_value_degrees(
            "action",
            format!("({a_idx},{l_idx})"),
            &expected,
            &self.l.basis,
            &value,
        )?;
        store_entry("action", &mut self.action, (a_idx, l_idx), value)
    }

    /// Insert rho(e_i, e_j)(a_k) = value, with the color-skew completion in
    /// the two L slots.
    pub fn insert_rho(&mut self, i: usize, j: usize, k: usize, value: Vector<S>) -> Result<(), BuildError> {
        if value.len() != self.dim_a() {
            return Err(BuildError::ValueLength {
                table: "rho",
                expected: self.dim_a(),
                got: value.len(),
            });
        }
        let (ckey, sign, forced) =
            canonical2(&self.l.basis.degrees, self.eps(), [i, j], SwapLaw::SkewEps);
        if forced {
            if !is_zero_vec(&value) {
                return Err(BuildError::ForcedZero {
                    table: "rho",
                    key: format!("({i},{j})"),
                });
            }
            return Ok(());
        }
        let expected = self.eps().group.sum3(
            &self.l.basis.degrees[i],
            &self.l.basis.degrees[j],
            &self.a.basis.degrees[k],
        );
        check_value_degrees("rho", format!("({i},{j},{k})"), &expected, &self.a.basis, &value)?;
        let canon_value = scaled(&value, sign);
        if let Some(cols) = self.rho.get_mut(&ckey) {
            if !is_zero_vec(&cols[k]) && cols[k] != canon_value {
                return Err(BuildError::OrientationConflict {
                    table: "rho",
                    key: format!("({i},{j},{k})"),
                });
            }
            cols[k] = canon_value;
            return Ok(());
        }
        if is_zero_vec(&canon_value) {
            return Ok(());
        }
        let na = self.a.basis.dim();
        let mut cols = vec![zero_vec(na); na];
        cols[k] = canon_value;
        self.rho.insert(ckey, cols);
        Ok(())
    }

    pub fn act(&self, a_idx: usize, l_idx: usize) -> Option<Vector<S>> {
        self.action.get(&(a_idx, l_idx)).cloned()
    }

    /// a dot x for coordinate vectors (a over the A basis, x over L).
    pub fn act_vec(&self, a: &[S], x: &[S]) -> Vector<S> {
        let mut out = zero_vec(self.dim_l());
        for (i, c) in a.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            for (j, d) in x.iter().enumerate() {
                if d.is_zero() {
                    continue;
                }
                if let Some(v) = self.act(i, j) {
                    let coeff = c.clone() * d.clone();
                    add_assign_scaled(&mut out, &v, &coeff);
                }
            }
        }
        out
    }

    /// rho(e_i, e_j)(a_k); None means zero.
    pub fn rho_apply(&self, i: usize, j: usize, k: usize) -> Option<Vector<S>> {
        if let Some(cols) = self.rho.get(&[i, j]) {
            if !is_zero_vec(&cols[k]) {
                return Some(cols[k].clone());
            }
            // an exact stored (possibly fault-injected) key wins outright
            return None;
        }
        let (ckey, sign, forced) =
            canonical2(&self.l.basis.degrees, self.eps(), [i, j], SwapLaw::SkewEps);
        if forced || ckey == [i, j] {
            return None;
        }
        self.rho.get(&ckey).and_then(|cols| {
            if is_zero_vec(&cols[k]) {
                None
            } else {
                Some(scaled(&cols[k], sign))
            }
        })
    }

    /// rho(u, v)(b) for coordinate vectors u, v over L and b over A.
    pub fn rho_vec(&self, u: &[S], v: &[S], b: &[S]) -> Vector<S> {
        let mut out = zero_vec(self.dim_a());
        for (i, x) in u.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in v.iter().enumerate() {
                if y.is_zero() {
                    continue;
                }
                let xy = x.clone() * y.clone();
                for (k, z) in b.iter().enumerate() {
                    if z.is_zero() {
                        continue;
                    }
                    if let Some(img) = self.rho_apply(i, j, k) {
                        let coeff = xy.clone() * z.clone();
                        add_assign_scaled(&mut out, &img, &coeff);
                    }
                }
            }
        }
        out
    }

    /// rho(e_i, e_j) applied to an A coordinate vector.
    pub fn rho_apply_vec(&self, i: usize, j: usize, b: &[S]) -> Vector<S> {
        let mut out = zero_vec(self.dim_a());
        for (k, z) in b.iter().enumerate() {
            if z.is_zero() {
                continue;
            }
            if let Some(img) = self.rho_apply(i, j, k) {
                add_assign_scaled(&mut out, &img, z);
            }
        }
        out
    }
}

/// Build a pair with zero anchor from L, A and an action table
/// (Example-style "3-Lie A-color algebra").
pub fn trivial_action<S: Scalar>(
    l: ThreeLieColorAlgebra<S>,
    a: ColorCommAlgebra<S>,
    action_entries: Vec<((usize, usize), Vector<S>)>,
) -> Result<RinehartPair<S>, BuildError> {
    let mut pair = RinehartPair::new(l, a)?;
    for ((ai, li), value) in action_entries {
        pair.insert_action(ai, li, value)?;
    }
    Ok(pair)
}

#[derive(Debug, Error, Clone, PartialEq)]
pub enum TauError {
    #[error("color trace must be even: tau is nonzero on {0:?} of nonzero degree")]
    NotEven(String),
    #[error("color trace does not kill the bracket: tau([{0}, {1}]) != 0")]
    TraceOnBracket(String, String),
    #[error("trace compatibility tau(a x) y = tau(x) a y fails on (a, x, y) = ({0}, {1}, {2})")]
    TraceCompat(String, String, String),
    #[error("input is not a Lie-Rinehart color pair: {0}")]
    InputPairInvalid(String),
    #[error(transparent)]
    Build(#[from] BuildError),
}

/// The trace construction: from a Lie-Rinehart color pair and a color trace,
/// build the 3-Lie-Rinehart pair with
/// [x1,x2,x3] = tau(x1)[x2,x3] - eps(x1,x2) tau(x2)[x1,x3]
///            + eps(x3, x1+x2) tau(x3)[x1,x2]
/// and rho(x,y) = tau(x) rho1(y) - eps(x,y) tau(y) rho1(x).
pub fn tau_construct<S: Scalar>(
    lc: &LieColorAlgebra<S>,
    a: &ColorCommAlgebra<S>,
    rho1: &BTreeMap<usize, Vec<Vector<S>>>,
    action_entries: &[((usize, usize), Vector<S>)],
    tau: &[S],
) -> Result<RinehartPair<S>, TauError> {
    let n = lc.dim();
    let na = a.dim();
    let eps = &lc.eps;
    let zero_deg = eps.group.zero();

    // trace conditions
    for (i, t) in tau.iter().enumerate() {
        if !t.is_zero() && lc.basis.degrees[i] != zero_deg {
            return Err(TauError::NotEven(lc.basis.name(i).to_string()));
        }
    }
    let tau_of = |v: &[S]| -> S {
        v.iter()
            .zip(tau)
            .fold(S::zero(), |acc, (c, t)| acc + c.clone() * t.clone())
    };
    for i in 0..n {
        for j in 0..n {
            if let Some(v) = lc.br(i, j) {
                if !tau_of(&v).is_zero() {
                    return Err(TauError::TraceOnBracket(
                        lc.basis.name(i).to_string(),
                        lc.basis.name(j).to_string(),
                    ));
                }
            }
        }
    }

    // stage the action into a scratch pair (zero ternary bracket for now)
    let mut pair = RinehartPair::new(
        ThreeLieColorAlgebra::new(lc.basis.clone(), eps.clone()),
        a.clone(),
    )
    .map_err(TauError::Build)?;
    for ((ai, li), value) in action_entries {
        pair.insert_action(*ai, *li, value.clone())?;
    }

    // tau(a x) y = tau(x) (a y) on all basis triples
    for ai in 0..na {
        for x in 0..n {
            for y in 0..n {
                let ax = pair.act(ai, x).unwrap_or_else(|| zero_vec(n));
                let lhs: Vector<S> = {
                    let t = tau_of(&ax);
                    let mut v = zero_vec(n);
                    v[y] = t;
                    v
                };
                let ay = pair.act(ai, y).unwrap_or_else(|| zero_vec(n));
                let rhs = crate::subspace::scale_vec(&ay, &tau[x]);
                if lhs != rhs {
                    return Err(TauError::TraceCompat(
                        a.basis.name(ai).to_string(),
                        lc.basis.name(x).to_string(),
                        lc.basis.name(y).to_string(),
                    ));
                }
            }
        }
    }

    // binary Lie-Rinehart laws on the input
    validate_binary_pair(lc, a, rho1, &pair).map_err(TauError::InputPairInvalid)?;

    let rho1_apply = |x: usize, k: usize| -> Option<&Vector<S>> {
        rho1.get(&x).map(|cols| &cols[k])
    };

    // ternary bracket, all orientations (conflicts would flag a broken input)
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                let mut value = zero_vec(n);
                if !tau[i].is_zero() {
                    if let Some(v) = lc.br(j, k) {
                        add_assign_scaled(&mut value, &v, &tau[i]);
                    }
                }
                if !tau[j].is_zero() {
                    let e: S = eps.eps(&lc.basis.degrees[i], &lc.basis.degrees[j]);
                    if let Some(v) = lc.br(i, k) {
                        let c = -(e * tau[j].clone());
                        add_assign_scaled(&mut value, &v, &c);
                    }
                }
                if !tau[k].is_zero() {
                    let dij = eps.group.add(&lc.basis.degrees[i], &lc.basis.degrees[j]);
                    let e: S = eps.eps(&lc.basis.degrees[k], &dij);
                    if let Some(v) = lc.br(i, j) {
                        let c = e * tau[k].clone();
                        add_assign_scaled(&mut value, &v, &c);
                    }
                }
                pair.l.insert_bracket([i, j, k], value)?;
            }
        }
    }

    // anchor rho_tau, all orientations
    for i in 0..n {
        for j in 0..n {
            for k in 0..na {
                let mut img = zero_vec(na);
                if !tau[i].is_zero() {
                    if let Some(v) = rho1_apply(j, k) {
                        add_assign_scaled(&mut img, v, &tau[i]);
                    }
                }
                if !tau[j].is_zero() {
                    let e: S = eps.eps(&lc.basis.degrees[i], &lc.basis.degrees[j]);
                    if let Some(v) = rho1_apply(i, k) {
                        let c = -(e * tau[j].clone());
                        add_assign_scaled(&mut img, v, &c);
                    }
                }
                pair.insert_rho(i, j, k, img)?;
            }
        }
    }

    Ok(pair)
}

/// Check the binary Lie-Rinehart color laws for the trace-construction input.
fn validate_binary_pair<S: Scalar>(
    lc: &LieColorAlgebra<S>,
    a: &ColorCommAlgebra<S>,
    rho1: &BTreeMap<usize, Vec<Vector<S>>>,
    staged: &RinehartPair<S>,
) -> Result<(), String> {
    let n = lc.dim();
    let na = a.dim();
    let eps = &lc.eps;
    if !lc.jacobi_holds() {
        return Err("color Jacobi identity fails".into());
    }
    let rho_img = |x: usize, b: &[S]| -> Vector<S> {
        let mut out = zero_vec(na);
        if let Some(cols) = rho1.get(&x) {
            for (k, c) in b.iter().enumerate() {
                if !c.is_zero() {
                    add_assign_scaled(&mut out, &cols[k], c);
                }
            }
        }
        out
    };
    let rho_img_vec = |v: &[S], b: &[S]| -> Vector<S> {
        let mut out = zero_vec(na);
        for (x, c) in v.iter().enumerate() {
            if !c.is_zero() {
                let img = rho_img(x, b);
                add_assign_scaled(&mut out, &img, c);
            }
        }
        out
    };
    let unit_a = |k: usize| -> Vector<S> {
        let mut v = zero_vec(na);
        v[k] = S::one();
        v
    };
    // representation: rho([x,y]) = rho(x)rho(y) - eps(x,y) rho(y)rho(x)
    for x in 0..n {
        for y in 0..n {
            let bxy = lc.br(x, y).unwrap_or_else(|| zero_vec(n));
            for k in 0..na {
                let b = unit_a(k);
                let lhs = rho_img_vec(&bxy, &b);
                let mut rhs = rho_img(x, &rho_img(y, &b));
                let e: S = eps.eps(&lc.basis.degrees[x], &lc.basis.degrees[y]);
                let second = rho_img(y, &rho_img(x, &b));
                add_assign_scaled(&mut rhs, &second, &(-e));
                if lhs != rhs {
                    return Err(format!(
                        "anchor representation law fails on ({}, {}, {})",
                        lc.basis.name(x),
                        lc.basis.name(y),
                        a.basis.name(k)
                    ));
                }
            }
        }
    }
    // derivations: rho(x)(bc) = rho(x)(b) c + eps(x,b) b rho(x)(c)
    for x in 0..n {
        for bi in 0..na {
            for ci in 0..na {
                let bc = a.prod(bi, ci).unwrap_or_else(|| zero_vec(na));
                let lhs = rho_img(x, &bc);
                let mut rhs = a.prod_vec(&rho_img(x, &unit_a(bi)), &unit_a(ci));
                let e: S = eps.eps(&lc.basis.degrees[x], &a.basis.degrees[bi]);
                let t = a.prod_vec(&unit_a(bi), &rho_img(x, &unit_a(ci)));
                add_assign_scaled(&mut rhs, &t, &e);
                if lhs != rhs {
                    return Err(format!(
                        "anchor is not a color derivation on ({}, {}, {})",
                        lc.basis.name(x),
                        a.basis.name(bi),
                        a.basis.name(ci)
                    ));
                }
            }
        }
    }
    // compatibility: [x, a y] = eps(a, x) a [x, y] + rho(x)(a) y
    for x in 0..n {
        for ai in 0..na {
            for y in 0..n {
                let ay = staged.act(ai, y).unwrap_or_else(|| zero_vec(n));
                let lhs = {
                    let mut out = zero_vec(n);
                    for (l, c) in ay.iter().enumerate() {
                        if !c.is_zero() {
                            if let Some(v) = lc.br(x, l) {
                                add_assign_scaled(&mut out, &v, c);
                            }
                        }
                    }
                    out
                };
                let e: S = eps.eps(&a.basis.degrees[ai], &lc.basis.degrees[x]);
                let mut rhs = staged.act_vec(&unit_a(ai), &lc.br(x, y).unwrap_or_else(|| zero_vec(n)));
                rhs = crate::subspace::scale_vec(&rhs, &e);
                let rho_xa = rho_img(x, &unit_a(ai));
                let mut uy = zero_vec(n);
                uy[y] = S::one();
                let t = staged.act_vec(&rho_xa, &uy);
                crate::subspace::add_assign(&mut rhs, &t);
                if lhs != rhs {
                    return Err(format!(
                        "binary compatibility fails on ({}, {}, {})",
                        lc.basis.name(x),
                        a.basis.name(ai),
                        lc.basis.name(y)
                    ));
                }
            }
        }
    }
    // rho(a x) = a rho(x)
    for ai in 0..na {
        for x in 0..n {
            let ax = staged.act(ai, x).unwrap_or_else(|| zero_vec(n));
            for k in 0..na {
                let lhs = rho_img_vec(&ax, &unit_a(k));
                let rhs = a.prod_vec(&unit_a(ai), &rho_img(x, &unit_a(k)));
                if lhs != rhs {
                    return Err(format!(
                        "rho(a x) = a rho(x) fails on ({}, {}, {})",
                        a.basis.name(ai),
                        lc.basis.name(x),
                        a.basis.name(k)
                    ));
                }
            }
        }
    }
    // module law: (a b) x = a (b x)
    for ai in 0..na {
        for bi in 0..na {
            for x in 0..n {
                let ab = a.prod(ai, bi).unwrap_or_else(|| zero_vec(na));
                let mut ux = zero_vec(n);
                ux[x] = S::one();
                let lhs = staged.act_vec(&ab, &ux);
                let bx = staged.act(bi, x).unwrap_or_else(|| zero_vec(n));
                let rhs = staged.act_vec(&unit_a(ai), &bx);
                if lhs != rhs {
                    return Err(format!(
                        "module associativity fails on ({}, {}, {})",
                        a.basis.name(ai),
                        a.basis.name(bi),
                        lc.basis.name(x)
                    ));
                }
            }
        }
    }
    Ok(())
}

/// External direct sum: cross brackets, products, action and anchor all zero;
/// basis names must be disjoint (relabel a copy before summing).
pub fn direct_sum<S: Scalar>(
    p1: &RinehartPair<S>,
    p2: &RinehartPair<S>,
) -> Result<RinehartPair<S>, BuildError> {
    if p1.eps() != p2.eps() {
        return Err(BuildError::EpsilonMismatch);
    }
    let nl1 = p1.dim_l();
    let na1 = p1.dim_a();
    let mut l_entries = Vec::new();
    let mut a_entries = Vec::new();
    for (name, deg) in p1.l.basis.names.iter().zip(&p1.l.basis.degrees) {
        l_entries.push((name.clone(), deg.clone()));
    }
    for (name, deg) in p2.l.basis.names.iter().zip(&p2.l.basis.degrees) {
        l_entries.push((name.clone(), deg.clone()));
    }
    for (name, deg) in p1.a.basis.names.iter().zip(&p1.a.basis.degrees) {
        a_entries.push((name.clone(), deg.clone()));
    }
    for (name, deg) in p2.a.basis.names.iter().zip(&p2.a.basis.degrees) {
        a_entries.push((name.clone(), deg.clone()));
    }
    let l_basis = GradedBasis::new(l_entries)?;
    let a_basis = GradedBasis::new(a_entries)?;
    let nl = l_basis.dim();
    let na = a_basis.dim();

    let embed_l = |v: &Vector<S>, offset: usize| -> Vector<S> {
        let mut out = zero_vec(nl);
        for (i, c) in v.iter().enumerate() {
            out[i + offset] = c.clone();
        }
        out
    };
    let embed_a = |v: &Vector<S>, offset: usize| -> Vector<S> {
        let mut out = zero_vec(na);
        for (i, c) in v.iter().enumerate() {
            out[i + offset] = c.clone();
        }
        out
    };

    let mut l = ThreeLieColorAlgebra::new(l_basis, p1.eps().clone());
    for (k, v) in &p1.l.bracket {
        l.bracket.insert(*k, embed_l(v, 0));
    }
    for (k, v) in &p2.l.bracket {
        l.bracket.insert([k[0] + nl1, k[1] + nl1, k[2] + nl1], embed_l(v, nl1));
    }
    let mut a = ColorCommAlgebra::new(a_basis, p1.eps().clone());
    for (k, v) in &p1.a.product {
        a.product.insert(*k, embed_a(v, 0));
    }
    for (k, v) in &p2.a.product {
        a.product.insert([k[0] + na1, k[1] + na1], embed_a(v, na1));
    }
    let mut pair = RinehartPair::new(l, a)?;
    for ((ai, li), v) in &p1.action {
        pair.action.insert((*ai, *li), embed_l(v, 0));
    }
    for ((ai, li), v) in &p2.action {
        pair.action.insert((*ai + na1, *li + nl1), embed_l(v, nl1));
    }
    for (k, cols) in &p1.rho {
        let mut new_cols = vec![zero_vec(na); na];
        for (ci, col) in cols.iter().enumerate() {
            new_cols[ci] = embed_a(col, 0);
        }
        pair.rho.insert(*k, new_cols);
    }
    for (k, cols) in &p2.rho {
        let mut new_cols = vec![zero_vec(na); na];
        for (ci, col) in cols.iter().enumerate() {
            new_cols[ci + na1] = embed_a(col, na1);
        }
        pair.rho.insert([k[0] + nl1, k[1] + nl1], new_cols);
    }
    Ok(pair)
}

/// Relabel every basis name through `f` (used to build disjoint copies).
pub fn relabel<S: Scalar>(p: &RinehartPair<S>, f: impl Fn(&str) -> String) -> RinehartPair<S> {
    let mut out = p.clone();
    for name in &mut out.l.basis.names {
        *name = f(name);
    }
    for name in &mut out.a.basis.names {
        *name = f(name);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::grading::GradingGroup;
    use crate::scalar::Q;

    fn qv(xs: &[i64]) -> Vector<Q> {
        xs.iter().map(|&x| Q::from_int(x)).collect()
    }

    fn trivial_basis(names: &[&str]) -> GradedBasis {
        GradedBasis::new(names.iter().map(|n| (n.to_string(), vec![0])).collect()).unwrap()
    }

    #[test]
    fn skew_completion_all_orientations() {
        let basis = trivial_basis(&["e1", "e2", "e3", "e4"]);
        let mut l = ThreeLieColorAlgebra::<Q>::new(basis, BiCharacter::trivial());
        l.insert_bracket([0, 1, 2], qv(&[0, 0, 0, 1])).unwrap();
        assert_eq!(l.br(0, 1, 2), Some(qv(&[0, 0, 0, 1])));
        assert_eq!(l.br(1, 0, 2), Some(qv(&[0, 0, 0, -1])));
        assert_eq!(l.br(2, 0, 1), Some(qv(&[0, 0, 0, 1])));
        assert_eq!(l.br(2, 1, 0), Some(qv(&[0, 0, 0, -1])));
        assert_eq!(l.br(0, 0, 2), None);
    }

    #[test]
    fn conflicting_orientation_is_rejected() {
        let basis = trivial_basis(&["e1", "e2", "e3", "e4"]);
        let mut l = ThreeLieColorAlgebra::<Q>::new(basis, BiCharacter::trivial());
        l.insert_bracket([0, 1, 2], qv(&[0, 0, 0, 1])).unwrap();
        // skew forces [e2,e1,e3] = -e4; claiming +e4 must conflict
        let err = l.insert_bracket([1, 0, 2], qv(&[0, 0, 0, 1])).unwrap_err();
        assert!(matches!(err, BuildError::OrientationConflict { .. }));
        // restating the derived orientation is fine
        l.insert_bracket([1, 0, 2], qv(&[0, 0, 0, -1])).unwrap();
    }

    #[test]
    fn repeated_argument_forced_zero_with_trivial_color() {
        let basis = trivial_basis(&["e1", "e2", "e3", "e4"]);
        let mut l = ThreeLieColorAlgebra::<Q>::new(basis, BiCharacter::trivial());
        let err = l.insert_bracket([0, 0, 2], qv(&[0, 0, 0, 1])).unwrap_err();
        assert!(matches!(err, BuildError::ForcedZero { .. }));
    }

    #[test]
    fn odd_degrees_permit_symmetric_entries() {
        let group = GradingGroup::new(vec![2]).unwrap();
        let eps = BiCharacter::super_sign();
        let basis = GradedBasis::new(vec![
            ("x".into(), vec![1]),
            ("y".into(), vec![1]),
            ("z".into(), vec![0]),
        ])
        .unwrap();
        let _ = group;
        let mut l = ThreeLieColorAlgebra::<Q>::new(basis, eps);
        // [x,x,y] is allowed when eps(x,x) = -1, and is symmetric in the x's
        l.insert_bracket([0, 0, 1], qv(&[0, 1, 0])).unwrap();
        assert_eq!(l.br(0, 0, 1), Some(qv(&[0, 1, 0])));
        // swapping the two odd arguments costs -eps(x,x) = +1
        assert_eq!(l.br(0, 1, 0), Some(qv(&[0, 1, 0])));
    }

    #[test]
    fn degree_additivity_enforced() {
        let eps = BiCharacter::super_sign();
        let basis = GradedBasis::new(vec![
            ("x".into(), vec![1]),
            ("y".into(), vec![0]),
            ("z".into(), vec![0]),
        ])
        .unwrap();
        let mut l = ThreeLieColorAlgebra::<Q>::new(basis, eps);
        // |x|+|y|+|z| = 1 but the output coordinate y has degree 0
        let err = l.insert_bracket([0, 1, 2], qv(&[0, 1, 0])).unwrap_err();
        assert!(matches!(err, BuildError::DegreeViolation { .. }));
    }

    #[test]
    fn product_commutative_completion() {
        let basis = trivial_basis(&["u", "v"]);
        let mut a = ColorCommAlgebra::<Q>::new(basis, BiCharacter::trivial());
        a.insert_product([0, 1], qv(&[1, 0])).unwrap();
        assert_eq!(a.prod(1, 0), Some(qv(&[1, 0])));
    }

    #[test]
    fn tau_construction_recovers_binary_bracket() {
        // 4-dim trivially graded Lie algebra: [e1,e2] = z, h central, tau(h)=1
        let basis = GradedBasis::new(vec![
            ("h".into(), vec![0]),
            ("e1".into(), vec![0]),
            ("e2".into(), vec![0]),
            ("z".into(), vec![0]),
        ])
        .unwrap();
        let eps = BiCharacter::trivial();
        let mut lc = LieColorAlgebra::<Q>::new(basis.clone(), eps.clone());
        lc.insert_bracket([1, 2], qv(&[0, 0, 0, 1])).unwrap();
        assert!(lc.jacobi_holds());
        let a_basis = GradedBasis::new(vec![("u".into(), vec![0])]).unwrap();
        let a = ColorCommAlgebra::<Q>::new(a_basis, eps);
        let tau = qv(&[1, 0, 0, 0]);
        let pair = tau_construct(&lc, &a, &BTreeMap::new(), &[], &tau).unwrap();
        assert_eq!(pair.l.br(0, 1, 2), Some(qv(&[0, 0, 0, 1])));
        assert_eq!(pair.l.br(1, 2, 3), None);
        assert_eq!(pair.l.br(1, 0, 2), Some(qv(&[0, 0, 0, -1])));
    }

    #[test]
    fn tau_zero_gives_zero_bracket() {
        let basis = GradedBasis::new(vec![("e1".into(), vec![0]), ("e2".into(), vec![0])]).unwrap();
        let eps = BiCharacter::trivial();
        let mut lc = LieColorAlgebra::<Q>::new(basis, eps.clone());
        lc.insert_bracket([0, 1], qv(&[0, 0])).unwrap();
        let a = ColorCommAlgebra::<Q>::new(GradedBasis::new(vec![("u".into(), vec![0])]).unwrap(), eps);
        let pair = tau_construct(&lc, &a, &BTreeMap::new(), &[], &qv(&[0, 0])).unwrap();
        assert!(pair.l.bracket.is_empty());
        assert!(pair.rho.is_empty());
    }

    #[test]
    fn non_even_trace_rejected() {
        let eps = BiCharacter::super_sign();
        let basis = GradedBasis::new(vec![("x".into(), vec![1])]).unwrap();
        let lc = LieColorAlgebra::<Q>::new(basis, eps.clone());
        let a = ColorCommAlgebra::<Q>::new(GradedBasis::new(vec![("u".into(), vec![0])]).unwrap(), eps);
        let err = tau_construct(&lc, &a, &BTreeMap::new(), &[], &qv(&[1])).unwrap_err();
        assert!(matches!(err, TauError::NotEven(_)));
    }

    #[test]
    fn trivial_action_builds_a_pair_with_zero_anchor() {
        let basis = trivial_basis(&["e1", "e2"]);
        let l = ThreeLieColorAlgebra::<Q>::new(basis, BiCharacter::trivial());
        let a = ColorCommAlgebra::<Q>::new(trivial_basis(&["u"]), BiCharacter::trivial());
        let p = trivial_action(l, a, vec![((0, 0), qv(&[1, 0]))]).unwrap();
        assert!(p.rho.is_empty());
        assert_eq!(p.act(0, 0), Some(qv(&[1, 0])));
    }

    #[test]
    fn trivial_action_rejects_degree_violations() {
        let eps = BiCharacter::super_sign();
        let basis = GradedBasis::new(vec![("x".into(), vec![1]), ("y".into(), vec![0])]).unwrap();
        let l = ThreeLieColorAlgebra::<Q>::new(basis, eps.clone());
        let a = ColorCommAlgebra::<Q>::new(
            GradedBasis::new(vec![("u".into(), vec![0])]).unwrap(),
            eps,
        );
        // u . x has degree 1 but the value sits on y of degree 0
        let err = trivial_action(l, a, vec![((0, 0), qv(&[0, 1]))]).unwrap_err();
        assert!(matches!(err, BuildError::DegreeViolation { .. }));
    }

    #[test]
    fn direct_sum_doubles_dimensions() {
        let basis = trivial_basis(&["e1", "e2"]);
        let l = ThreeLieColorAlgebra::<Q>::new(basis, BiCharacter::trivial());
        let a = ColorCommAlgebra::<Q>::new(trivial_basis(&["u"]), BiCharacter::trivial());
        let p = RinehartPair::new(l, a).unwrap();
        let q = relabel(&p, |n| format!("{n}_2"));
        let s = direct_sum(&p, &q).unwrap();
        assert_eq!(s.dim_l(), 4);
        assert_eq!(s.dim_a(), 2);
        assert!(s.l.bracket.is_empty());
    }

    #[test]
    fn direct_sum_group_mismatch_rejected() {
        let p = {
            let l = ThreeLieColorAlgebra::<Q>::new(trivial_basis(&["e1"]), BiCharacter::trivial());
            let a = ColorCommAlgebra::<Q>::new(trivial_basis(&["u"]), BiCharacter::trivial());
            RinehartPair::new(l, a).unwrap()
        };
        let q = {
            let eps = BiCharacter::super_sign();
            let basis = GradedBasis::new(vec![("f1".into(), vec![0])]).unwrap();
            let l = ThreeLieColorAlgebra::<Q>::new(basis, eps.clone());
            let a = ColorCommAlgebra::<Q>::new(
                GradedBasis::new(vec![("v".into(), vec![0])]).unwrap(),
                eps,
            );
            RinehartPair::new(l, a).unwrap()
        };
        assert!(matches!(
            direct_sum(&p, &q).unwrap_err(),
            BuildError::EpsilonMismatch
        ));
    }

    #[test]
    fn tau_trace_compat_violation_reports_the_pair() {
        // a nonzero action with tau(h) = 1 breaks tau(a x) y = tau(x) a y:
        // for x = y = h the right side is tau(h) (u.h) = e1 while the left
        // side is tau(u.h) h = 0
        let basis = GradedBasis::new(vec![("h".into(), vec![0]), ("e1".into(), vec![0])]).unwrap();
        let eps = BiCharacter::trivial();
        let lc = LieColorAlgebra::<Q>::new(basis, eps.clone());
        let a = ColorCommAlgebra::<Q>::new(GradedBasis::new(vec![("u".into(), vec![0])]).unwrap(), eps);
        let action = vec![((0usize, 0usize), qv(&[0, 1]))];
        let err = tau_construct(&lc, &a, &BTreeMap::new(), &action, &qv(&[1, 0])).unwrap_err();
        assert!(matches!(err, TauError::TraceCompat(_, _, _)));
    }

    #[test]
    fn direct_sum_name_collision_rejected() {
        let basis = trivial_basis(&["e1"]);
        let l = ThreeLieColorAlgebra::<Q>::new(basis, BiCharacter::trivial());
        let a = ColorCommAlgebra::<Q>::new(trivial_basis(&["u"]), BiCharacter::trivial());
        let p = RinehartPair::new(l, a).unwrap();
        assert!(matches!(
            direct_sum(&p, &p).unwrap_err(),
            BuildError::DuplicateName(_)
        ));
    }
}
