//! Split structure: extract the root system of L and the weight system of A
//! relative to a declared splitting Cartan subalgebra, and evaluate the
//! structural predicates (closure, symmetry, maximal length,
//! root-multiplicativity).

use crate::algebra::RinehartPair;
use crate::grading::GroupElement;
use crate::report::Check;
use crate::scalar::Scalar;
use crate::subspace::{is_zero_vec, unit_vec, zero_vec, Subspace};
use thiserror::Error;

/// A root or weight: the exact matrix of its values on pairs of Cartan basis
/// vectors.
#[derive(Debug, Clone, PartialEq)]
pub struct Functional<S: Scalar> {
    pub values: Vec<Vec<S>>,
}

impl<S: Scalar> Functional<S> {
    pub fn zero(d: usize) -> Self {
        Functional {
            values: vec![vec![S::zero(); d]; d],
        }
    }

    pub fn dim(&self) -> usize {
        self.values.len()
    }

    pub fn is_zero(&self) -> bool {
        self.values.iter().all(|row| row.iter().all(|x| x.is_zero()))
    }

    pub fn add(&self, other: &Self) -> Self {
        Functional {
            values: self
                .values
                .iter()
                .zip(&other.values)
                .map(|(r, s)| r.iter().zip(s).map(|(a, b)| a.clone() + b.clone()).collect())
                .collect(),
        }
    }

    pub fn neg(&self) -> Self {
        Functional {
            values: self
                .values
                .iter()
                .map(|r| r.iter().map(|a| -a.clone()).collect())
                .collect(),
        }
    }

    /// Deterministic total order via entrywise comparison.
    pub fn cmp_key(&self, other: &Self) -> std::cmp::Ordering {
        for (r, s) in self.values.iter().zip(&other.values) {
            for (a, b) in r.iter().zip(s) {
                match a.partial_cmp(b) {
                    Some(std::cmp::Ordering::Equal) | None => continue,
                    Some(o) => return o,
                }
            }
        }
        std::cmp::Ordering::Equal
    }

    pub fn render(&self) -> String {
        let rows: Vec<String> = self
            .values
            .iter()
            .map(|r| {
                let cells: Vec<String> = r.iter().map(|x| x.to_string()).collect();
                format!("[{}]", cells.join(","))
            })
            .collect();
        format!("[{}]", rows.join(","))
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SplitError {
    #[error("unknown Cartan basis name {0:?}")]
    UnknownCartanName(String),
    #[error("Cartan subalgebra is not abelian: [{0}, {1}, {2}] != 0")]
    NonAbelianCartan(String, String, String),
    #[error("not adapted: [{h1}, {h2}, {x}] = {value} is not a multiple of {x}")]
    NotAdapted {
        h1: String,
        h2: String,
        x: String,
        value: String,
    },
    #[error("basis vector {0} outside the Cartan has zero root (violates L_0 = H)")]
    ZeroRootOutsideCartan(String),
    #[error("not adapted on A: rho({h1}, {h2})({a}) = {value} is not a multiple of {a}")]
    NotAdaptedWeight {
        h1: String,
        h2: String,
        a: String,
        value: String,
    },
}

/// The extracted split structure: Cartan, roots with their spaces, weights
/// with theirs, plus per-grade supports.
#[derive(Debug, Clone)]
pub struct SplitDatum<S: Scalar> {
    pub pair: RinehartPair<S>,
    pub cartan_indices: Vec<usize>,
    /// per L basis vector: None = Cartan member, Some(root id)
    pub root_of: Vec<Option<usize>>,
    pub roots: Vec<Functional<S>>,
    pub root_members: Vec<Vec<usize>>,
    /// per A basis vector: None = zero weight matrix (A_0), Some(weight id)
    pub weight_of: Vec<Option<usize>>,
    pub weights: Vec<Functional<S>>,
    pub weight_members: Vec<Vec<usize>>,
}

impl<S: Scalar> SplitDatum<S> {
    pub fn cartan_dim(&self) -> usize {
        self.cartan_indices.len()
    }

    pub fn cartan_subspace(&self) -> Subspace<S> {
        let n = self.pair.dim_l();
        Subspace::span(
            n,
            self.cartan_indices.iter().map(|&i| unit_vec(n, i)).collect(),
        )
        .unwrap()
    }

    pub fn root_subspace(&self, rid: usize) -> Subspace<S> {
        let n = self.pair.dim_l();
        Subspace::span(
            n,
            self.root_members[rid].iter().map(|&i| unit_vec(n, i)).collect(),
        )
        .unwrap()
    }

    pub fn weight_subspace(&self, wid: usize) -> Subspace<S> {
        let m = self.pair.dim_a();
        Subspace::span(
            m,
            self.weight_members[wid].iter().map(|&i| unit_vec(m, i)).collect(),
        )
        .unwrap()
    }

    /// A_0: the zero-weight part of A.
    pub fn a_zero_subspace(&self) -> Subspace<S> {
        let m = self.pair.dim_a();
        Subspace::span(
            m,
            (0..m)
                .filter(|&i| self.weight_of[i].is_none())
                .map(|i| unit_vec(m, i))
                .collect(),
        )
        .unwrap()
    }

    pub fn root_id_of(&self, f: &Functional<S>) -> Option<usize> {
        self.roots.iter().position(|r| r == f)
    }

    pub fn weight_id_of(&self, f: &Functional<S>) -> Option<usize> {
        self.weights.iter().position(|w| w == f)
    }

    /// The functional attached to an L basis vector (zero for Cartan members).
    pub fn root_functional(&self, idx: usize) -> Functional<S> {
        match self.root_of[idx] {
            Some(rid) => self.roots[rid].clone(),
            None => Functional::zero(self.cartan_dim()),
        }
    }

    pub fn weight_functional(&self, idx: usize) -> Functional<S> {
        match self.weight_of[idx] {
            Some(wid) => self.weights[wid].clone(),
            None => Functional::zero(self.cartan_dim()),
        }
    }

    /// Grades carrying a given root: the set of degrees of its member basis
    /// vectors (the support Pi^g reading of the root).
    pub fn root_grades(&self, rid: usize) -> Vec<GroupElement> {
        let mut out: Vec<GroupElement> = Vec::new();
        for &i in &self.root_members[rid] {
            let g = self.pair.l.basis.degree(i).clone();
            if !out.contains(&g) {
                out.push(g);
            }
        }
        out
    }
}

/// Verify the declared Cartan is abelian and adapted, then read off every
/// root and weight matrix.
pub fn extract_split<S: Scalar>(
    p: &RinehartPair<S>,
    cartan_names: &[String],
) -> Result<SplitDatum<S>, SplitError> {
    let mut cartan_indices = Vec::new();
    for name in cartan_names {
        let idx = p
            .l
            .basis
            .index_of(name)
            .ok_or_else(|| SplitError::UnknownCartanName(name.clone()))?;
        cartan_indices.push(idx);
    }
    let d = cartan_indices.len();
    let n = p.dim_l();
    let m = p.dim_a();
    let lname = |i: usize| p.l.basis.name(i).to_string();
    let aname = |i: usize| p.a.basis.name(i).to_string();

    for &i in &cartan_indices {
        for &j in &cartan_indices {
            for &k in &cartan_indices {
                if let Some(v) = p.l.br(i, j, k) {
                    if !is_zero_vec(&v) {
                        return Err(SplitError::NonAbelianCartan(lname(i), lname(j), lname(k)));
                    }
                }
            }
        }
    }

    let mut root_of: Vec<Option<usize>> = vec![None; n];
    let mut roots: Vec<Functional<S>> = Vec::new();
    let mut root_members: Vec<Vec<usize>> = Vec::new();
    for x in 0..n {
        if cartan_indices.contains(&x) {
            continue;
        }
        let mut f = Functional::zero(d);
        for (ii, &hi) in cartan_indices.iter().enumerate() {
            for (jj, &hj) in cartan_indices.iter().enumerate() {
                let v = p.l.br(hi, hj, x).unwrap_or_else(|| zero_vec(n));
                for (l, c) in v.iter().enumerate() {
                    if l != x && !c.is_zero() {
                        return Err(SplitError::NotAdapted {
                            h1: lname(hi),
                            h2: lname(hj),
                            x: lname(x),
                            value: format!("{c}*{}+...", lname(l)),
                        });
                    }
                }
                f.values[ii][jj] = v[x].clone();
            }
        }
        if f.is_zero() {
            return Err(SplitError::ZeroRootOutsideCartan(lname(x)));
        }
        let rid = match roots.iter().position(|r| *r == f) {
            Some(rid) => rid,
            None => {
                roots.push(f);
                root_members.push(Vec::new());
                roots.len() - 1
            }
        };
        root_of[x] = Some(rid);
        root_members[rid].push(x);
    }

    let mut weight_of: Vec<Option<usize>> = vec![None; m];
    let mut weights: Vec<Functional<S>> = Vec::new();
    let mut weight_members: Vec<Vec<usize>> = Vec::new();
    for a in 0..m {
        let mut f = Functional::zero(d);
        for (ii, &hi) in cartan_indices.iter().enumerate() {
            for (jj, &hj) in cartan_indices.iter().enumerate() {
                let v = p.rho_apply(hi, hj, a).unwrap_or_else(|| zero_vec(m));
                for (l, c) in v.iter().enumerate() {
                    if l != a && !c.is_zero() {
                        return Err(SplitError::NotAdaptedWeight {
                            h1: lname(hi),
                            h2: lname(hj),
                            a: aname(a),
                            value: format!("{c}*{}+...", aname(l)),
                        });
                    }
                }
                f.values[ii][jj] = v[a].clone();
            }
        }
        if f.is_zero() {
            continue; // zero weight matrix: a lives in A_0
        }
        let wid = match weights.iter().position(|w| *w == f) {
            Some(wid) => wid,
            None => {
                weights.push(f);
                weight_members.push(Vec::new());
                weights.len() - 1
            }
        };
        weight_of[a] = Some(wid);
        weight_members[wid].push(a);
    }

    Ok(SplitDatum {
        pair: p.clone(),
        cartan_indices,
        root_of,
        roots,
        root_members,
        weight_of,
        weights,
        weight_members,
    })
}

/// All four closure statements: brackets, A-products, the action and anchor
/// images land in the spaces indexed by the sums of the roots/weights
/// involved (with matching grades).
pub fn check_prop_closure<S: Scalar>(s: &SplitDatum<S>) -> Vec<Check> {
    let p = &s.pair;
    let n = p.dim_l();
    let m = p.dim_a();
    let group = &p.eps().group;
    let lname = |i: usize| p.l.basis.name(i).to_string();
    let aname = |i: usize| p.a.basis.name(i).to_string();

    let l_target_ok = |value: &[S], expected: &Functional<S>, grade: &GroupElement| -> Option<String> {
        for (l, c) in value.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let f = s.root_functional(l);
            if f != *expected {
                return Some(format!(
                    "component {} carries root {} instead of {}",
                    lname(l),
                    f.render(),
                    expected.render()
                ));
            }
            if p.l.basis.degree(l) != grade {
                return Some(format!(
                    "component {} has grade {:?} instead of {:?}",
                    lname(l),
                    p.l.basis.degree(l),
                    grade
                ));
            }
        }
        None
    };
    let a_target_ok = |value: &[S], expected: &Functional<S>, grade: &GroupElement| -> Option<String> {
        for (l, c) in value.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let f = s.weight_functional(l);
            if f != *expected {
                return Some(format!(
                    "component {} carries weight {} instead of {}",
                    aname(l),
                    f.render(),
                    expected.render()
                ));
            }
            if p.a.basis.degree(l) != grade {
                return Some(format!(
                    "component {} has grade {:?} instead of {:?}",
                    aname(l),
                    p.a.basis.degree(l),
                    grade
                ));
            }
        }
        None
    };

    let mut brackets = Check::new("closure-bracket");
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                brackets.checked += 1;
                if let Some(v) = p.l.br(i, j, k) {
                    let expected = s.root_functional(i).add(&s.root_functional(j)).add(&s.root_functional(k));
                    let grade = group.sum3(p.l.basis.degree(i), p.l.basis.degree(j), p.l.basis.degree(k));
                    if let Some(msg) = l_target_ok(&v, &expected, &grade) {
                        brackets.violate(vec![lname(i), lname(j), lname(k)], msg, "closure".into());
                    }
                }
            }
        }
    }
    let mut products = Check::new("closure-product");
    for i in 0..m {
        for j in 0..m {
            products.checked += 1;
            if let Some(v) = p.a.prod(i, j) {
                let expected = s.weight_functional(i).add(&s.weight_functional(j));
                let grade = group.add(p.a.basis.degree(i), p.a.basis.degree(j));
                if let Some(msg) = a_target_ok(&v, &expected, &grade) {
                    products.violate(vec![aname(i), aname(j)], msg, "closure".into());
                }
            }
        }
    }
    let mut action = Check::new("closure-action");
    for ai in 0..m {
        for li in 0..n {
            action.checked += 1;
            if let Some(v) = p.act(ai, li) {
                let expected = s.weight_functional(ai).add(&s.root_functional(li));
                let grade = group.add(p.a.basis.degree(ai), p.l.basis.degree(li));
                if let Some(msg) = l_target_ok(&v, &expected, &grade) {
                    action.violate(vec![aname(ai), lname(li)], msg, "closure".into());
                }
            }
        }
    }
    let mut anchor = Check::new("closure-anchor");
    for i in 0..n {
        for j in 0..n {
            for k in 0..m {
                anchor.checked += 1;
                if let Some(v) = p.rho_apply(i, j, k) {
                    let expected = s.root_functional(i).add(&s.root_functional(j)).add(&s.weight_functional(k));
                    let grade = group.sum3(p.l.basis.degree(i), p.l.basis.degree(j), p.a.basis.degree(k));
                    if let Some(msg) = a_target_ok(&v, &expected, &grade) {
                        anchor.violate(vec![lname(i), lname(j), aname(k)], msg, "closure".into());
                    }
                }
            }
        }
    }
    for c in [&mut brackets, &mut products, &mut action, &mut anchor] {
        c.sort_violations();
    }
    vec![brackets, products, action, anchor]
}

/// Are Pi and Lambda symmetric (closed under negation)?
pub fn check_symmetry<S: Scalar>(s: &SplitDatum<S>) -> Check {
    let mut check = Check::new("symmetry");
    for r in &s.roots {
        check.checked += 1;
        let neg = r.neg();
        if !s.roots.iter().any(|x| *x == neg) {
            check.violate(vec![r.render()], "root in Pi".into(), "-root missing from Pi".into());
        }
    }
    for w in &s.weights {
        check.checked += 1;
        let neg = w.neg();
        if !s.weights.iter().any(|x| *x == neg) {
            check.violate(vec![w.render()], "weight in Lambda".into(), "-weight missing from Lambda".into());
        }
    }
    check
}

/// Maximal length: every nonzero homogeneous root or weight space
/// (one root/weight, one grade) is one-dimensional.
pub fn check_maximal_length<S: Scalar>(s: &SplitDatum<S>) -> Check {
    let mut check = Check::new("maximal-length");
    for (rid, members) in s.root_members.iter().enumerate() {
        for g in s.root_grades(rid) {
            check.checked += 1;
            let count = members
                .iter()
                .filter(|&&i| *s.pair.l.basis.degree(i) == g)
                .count();
            if count != 1 {
                check.violate(
                    vec![s.roots[rid].render(), format!("{g:?}")],
                    format!("dim L_alpha^g = {count}"),
                    "1".into(),
                );
            }
        }
    }
    for (wid, members) in s.weight_members.iter().enumerate() {
        let mut grades: Vec<GroupElement> = Vec::new();
        for &i in members {
            let g = s.pair.a.basis.degree(i).clone();
            if !grades.contains(&g) {
                grades.push(g);
            }
        }
        for g in grades {
            check.checked += 1;
            let count = members
                .iter()
                .filter(|&&i| *s.pair.a.basis.degree(i) == g)
                .count();
            if count != 1 {
                check.violate(
                    vec![s.weights[wid].render(), format!("{g:?}")],
                    format!("dim A_lambda^g = {count}"),
                    "1".into(),
                );
            }
        }
    }
    check
}

/// Root-multiplicativity: whenever a sum of roots/weights is again a
/// root/weight, the corresponding product of spaces is nonzero.
pub fn check_root_multiplicative<S: Scalar>(s: &SplitDatum<S>) -> Check {
    let mut check = Check::new("root-multiplicative");
    let p = &s.pair;
    let in_pi = |f: &Functional<S>| s.roots.iter().any(|r| r == f);
    let in_lambda = |f: &Functional<S>| s.weights.iter().any(|w| w == f);

    for (i, a) in s.roots.iter().enumerate() {
        for (j, b) in s.roots.iter().enumerate() {
            for (k, c) in s.roots.iter().enumerate() {
                let sum = a.add(b).add(c);
                if sum.is_zero() || !in_pi(&sum) {
                    continue;
                }
                check.checked += 1;
                let mut nonzero = false;
                'outer: for &x in &s.root_members[i] {
                    for &y in &s.root_members[j] {
                        for &z in &s.root_members[k] {
                            if let Some(v) = p.l.br(x, y, z) {
                                if !is_zero_vec(&v) {
                                    nonzero = true;
                                    break 'outer;
                                }
                            }
                        }
                    }
                }
                if !nonzero {
                    check.violate(
                        vec![a.render(), b.render(), c.render()],
                        "[L_a, L_b, L_c] = 0".into(),
                        format!("nonzero (sum {} lies in Pi)", sum.render()),
                    );
                }
            }
        }
    }
    for (i, lam) in s.weights.iter().enumerate() {
        for (j, alpha) in s.roots.iter().enumerate() {
            let sum = lam.add(alpha);
            if sum.is_zero() || !in_pi(&sum) {
                continue;
            }
            check.checked += 1;
            let mut nonzero = false;
            'outer2: for &a in &s.weight_members[i] {
                for &x in &s.root_members[j] {
                    if let Some(v) = p.act(a, x) {
                        if !is_zero_vec(&v) {
                            nonzero = true;
                            break 'outer2;
                        }
                    }
                }
            }
            if !nonzero {
                check.violate(
                    vec![lam.render(), alpha.render()],
                    "A_lambda L_alpha = 0".into(),
                    format!("nonzero (sum {} lies in Pi)", sum.render()),
                );
            }
        }
    }
    for (i, lam) in s.weights.iter().enumerate() {
        for (j, mu) in s.weights.iter().enumerate() {
            let sum = lam.add(mu);
            if sum.is_zero() || !in_lambda(&sum) {
                continue;
            }
            check.checked += 1;
            let mut nonzero = false;
            'outer3: for &a in &s.weight_members[i] {
                for &b in &s.weight_members[j] {
                    if let Some(v) = p.a.prod(a, b) {
                        if !is_zero_vec(&v) {
                            nonzero = true;
                            break 'outer3;
                        }
                    }
                }
            }
            if !nonzero {
                check.violate(
                    vec![lam.render(), mu.render()],
                    "A_lambda A_mu = 0".into(),
                    format!("nonzero (sum {} lies in Lambda)", sum.render()),
                );
            }
        }
    }
    check
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::Zero;
    use crate::builtins;
    use crate::scalar::Q;

    fn names(v: &[&str]) -> Vec<String> {
        v.iter().map(|s| s.to_string()).collect()
    }

    #[test]
    fn b0_whole_l_cartan_has_empty_systems() {
        let s = extract_split(&builtins::b0(), &names(&["e1", "e2"])).unwrap();
        assert!(s.roots.is_empty());
        assert!(s.weights.is_empty());
        assert_eq!(s.a_zero_subspace().dim(), 1);
    }

    #[test]
    fn b3_split_matches_the_paper_shape() {
        let s = extract_split(&builtins::b3(), &names(&["h1", "h2"])).unwrap();
        assert_eq!(s.roots.len(), 2);
        assert_eq!(s.weights.len(), 2);
        let one = Q::from_int(1);
        // alpha(h1, h2) = 1 and lambda(h1, h2) = 1 on some root/weight
        assert!(s.roots.iter().any(|r| r.values[0][1] == one));
        assert!(s.weights.iter().any(|w| w.values[0][1] == one));
        // alpha = [[0,1],[-1,0]] shape: skew with zero diagonal
        for r in &s.roots {
            assert!(r.values[0][0].is_zero() && r.values[1][1].is_zero());
            assert_eq!(r.values[1][0], -r.values[0][1].clone());
        }
        // lambda equals a root as a functional
        assert!(s.weights.iter().all(|w| s.roots.iter().any(|r| r == w)));
        assert!(check_symmetry(&s).passed());
        assert!(check_maximal_length(&s).passed());
        for c in check_prop_closure(&s) {
            assert!(c.passed(), "{}", c.summary());
        }
    }

    #[test]
    fn b1_with_one_element_cartan_reports_zero_roots() {
        let err = extract_split(&builtins::b1(), &names(&["e1"])).unwrap_err();
        assert!(matches!(err, SplitError::ZeroRootOutsideCartan(_)));
    }

    #[test]
    fn b1_with_two_element_cartan_is_not_adapted() {
        let err = extract_split(&builtins::b1(), &names(&["e1", "e2"])).unwrap_err();
        assert!(matches!(err, SplitError::NotAdapted { .. }));
    }

    #[test]
    fn unknown_cartan_name_errors() {
        let err = extract_split(&builtins::b3(), &names(&["nope"])).unwrap_err();
        assert!(matches!(err, SplitError::UnknownCartanName(_)));
    }

    #[test]
    fn extraction_is_deterministic() {
        let a = extract_split(&builtins::b3sum(), &names(&["h1_1", "h2_1", "h1_2", "h2_2"])).unwrap();
        let b = extract_split(&builtins::b3sum(), &names(&["h1_1", "h2_1", "h1_2", "h2_2"])).unwrap();
        assert_eq!(a.roots, b.roots);
        assert_eq!(a.root_members, b.root_members);
        assert_eq!(a.weights, b.weights);
    }

    #[test]
    fn b3sum_roots_extend_by_zero() {
        let s = extract_split(&builtins::b3sum(), &names(&["h1_1", "h2_1", "h1_2", "h2_2"])).unwrap();
        assert_eq!(s.roots.len(), 4);
        assert!(check_maximal_length(&s).passed());
        // block-1 roots vanish on the block-2 Cartan pairs
        for r in &s.roots {
            let block1 = !r.values[0][1].is_zero();
            let block2 = !r.values[2][3].is_zero();
            assert!(block1 ^ block2);
        }
    }

    #[test]
    fn b3_root_multiplicativity_fails_on_the_bracket_condition() {
        // alpha + alpha + (-alpha) = alpha lies in Pi but [L_a, L_a, L_-a] = 0
        // with one-dimensional root spaces and trivial color
        let s = extract_split(&builtins::b3(), &names(&["h1", "h2"])).unwrap();
        let c = check_root_multiplicative(&s);
        assert!(!c.passed());
        assert!(c.violations.iter().all(|v| v.left.contains("[L_a, L_b, L_c]")));
    }

    #[test]
    fn planted_closure_violation_is_reported() {
        // move the action value a+ . h1 into the wrong root space
        let mut p = builtins::b3();
        let idx_xm = p.l.basis.index_of("x-").unwrap();
        let mut v = zero_vec::<Q>(4);
        v[idx_xm] = Q::from_int(1);
        p.action.insert((1, 0), v);
        let s = extract_split(&p, &names(&["h1", "h2"])).unwrap();
        let checks = check_prop_closure(&s);
        let action = checks.iter().find(|c| c.id == "closure-action").unwrap();
        assert!(!action.passed());
    }
}
