//! Exhaustive exact validators for every defining identity of a
//! 3-Lie-Rinehart color algebra. Each checker enumerates all basis tuples of
//! its arity, compares both sides of the identity exactly, and reports every
//! violating tuple with the two values.

use crate::algebra::RinehartPair;
use crate::report::Check;
use crate::scalar::Scalar;
use crate::subspace::{add_assign, add_assign_scaled, is_zero_vec, scale_vec, zero_vec, Vector};

fn fmt_vec<S: Scalar>(names: &[String], v: &[S]) -> String {
    let mut parts = Vec::new();
    for (i, c) in v.iter().enumerate() {
        if !c.is_zero() {
            parts.push(format!("{}*{}", c, names[i]));
        }
    }
    if parts.is_empty() {
        "0".into()
    } else {
        parts.join(" + ")
    }
}

/// Degree additivity of every nonzero structure constant, scanned over the
/// raw tables (so planted faults stay visible).
pub fn check_bracket_grading<S: Scalar>(p: &RinehartPair<S>) -> Check {
    let mut check = Check::new("grading");
    let group = &p.eps().group;
    let ldeg = |i: usize| p.l.basis.degree(i).clone();
    let adeg = |i: usize| p.a.basis.degree(i).clone();
    for (key, value) in &p.l.bracket {
        check.checked += 1;
        let expected = group.sum3(&ldeg(key[0]), &ldeg(key[1]), &ldeg(key[2]));
        for (l, c) in value.iter().enumerate() {
            if !c.is_zero() && *p.l.basis.degree(l) != expected {
                check.violate(
                    key.iter().map(|&i| p.l.basis.name(i).to_string()).collect(),
                    format!("bracket hits {} of degree {:?}", p.l.basis.name(l), p.l.basis.degree(l)),
                    format!("degree {expected:?}"),
                );
            }
        }
    }
    for (key, value) in &p.a.product {
        check.checked += 1;
        let expected = group.add(&adeg(key[0]), &adeg(key[1]));
        for (l, c) in value.iter().enumerate() {
            if !c.is_zero() && *p.a.basis.degree(l) != expected {
                check.violate(
                    key.iter().map(|&i| p.a.basis.name(i).to_string()).collect(),
                    format!("product hits {} of degree {:?}", p.a.basis.name(l), p.a.basis.degree(l)),
                    format!("degree {expected:?}"),
                );
            }
        }
    }
    for ((ai, li), value) in &p.action {
        check.checked += 1;
        let expected = group.add(&adeg(*ai), &ldeg(*li));
        for (l, c) in value.iter().enumerate() {
            if !c.is_zero() && *p.l.basis.degree(l) != expected {
                check.violate(
                    vec![p.a.basis.name(*ai).into(), p.l.basis.name(*li).into()],
                    format!("action hits {} of degree {:?}", p.l.basis.name(l), p.l.basis.degree(l)),
                    format!("degree {expected:?}"),
                );
            }
        }
    }
    for (key, cols) in &p.rho {
        for (k, col) in cols.iter().enumerate() {
            if is_zero_vec(col) {
                continue;
            }
            check.checked += 1;
            let expected = group.sum3(&ldeg(key[0]), &ldeg(key[1]), &adeg(k));
            for (l, c) in col.iter().enumerate() {
                if !c.is_zero() && *p.a.basis.degree(l) != expected {
                    check.violate(
                        vec![
                            p.l.basis.name(key[0]).into(),
                            p.l.basis.name(key[1]).into(),
                            p.a.basis.name(k).into(),
                        ],
                        format!("rho hits {} of degree {:?}", p.a.basis.name(l), p.a.basis.degree(l)),
                        format!("degree {expected:?}"),
                    );
                }
            }
        }
    }
    check.sort_violations();
    check
}

/// Both adjacent-swap color skew relations on all basis triples.
pub fn check_skew<S: Scalar>(p: &RinehartPair<S>) -> Check {
    let mut check = Check::new("skew");
    let n = p.dim_l();
    let names = &p.l.basis.names;
    let eps = p.eps();
    let deg = |i: usize| &p.l.basis.degrees[i];
    let get = |i, j, k| p.l.br(i, j, k).unwrap_or_else(|| zero_vec(n));
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                check.checked += 1;
                let base = get(i, j, k);
                let e12: S = eps.eps(deg(i), deg(j));
                let swapped = scale_vec(&get(j, i, k), &-e12);
                if base != swapped {
                    check.violate(
                        vec![names[i].clone(), names[j].clone(), names[k].clone()],
                        fmt_vec(names, &base),
                        format!("-eps(x1,x2)[x2,x1,x3] = {}", fmt_vec(names, &swapped)),
                    );
                }
                let e23: S = eps.eps(deg(j), deg(k));
                let swapped = scale_vec(&get(i, k, j), &-e23);
                if base != swapped {
                    check.violate(
                        vec![names[i].clone(), names[j].clone(), names[k].clone()],
                        fmt_vec(names, &base),
                        format!("-eps(x2,x3)[x1,x3,x2] = {}", fmt_vec(names, &swapped)),
                    );
                }
            }
        }
    }
    check.sort_violations();
    check
}

/// The eps-fundamental identity on all basis 5-tuples (n^5 checks).
pub fn check_fi<S: Scalar>(p: &RinehartPair<S>) -> Check {
    let mut check = Check::new("fundamental-identity");
    let n = p.dim_l();
    let names = &p.l.basis.names;
    let eps = p.eps();
    let group = &eps.group;
    let deg = |i: usize| &p.l.basis.degrees[i];
    for x1 in 0..n {
        for x2 in 0..n {
            let d12 = group.add(deg(x1), deg(x2));
            for y1 in 0..n {
                let e1: S = eps.eps(&d12, deg(y1));
                for y2 in 0..n {
                    let d_y12 = group.add(deg(y1), deg(y2));
                    let e2: S = eps.eps(&d12, &d_y12);
                    for y3 in 0..n {
                        check.checked += 1;
                        let inner = p.l.br(y1, y2, y3);
                        let t1 = p.l.br(x1, x2, y1);
                        let t2 = p.l.br(x1, x2, y2);
                        let t3 = p.l.br(x1, x2, y3);
                        if inner.is_none() && t1.is_none() && t2.is_none() && t3.is_none() {
                            continue;
                        }
                        let lhs = match &inner {
                            Some(v) => p.l.br_vec3(x1, x2, v),
                            None => zero_vec(n),
                        };
                        let mut rhs = match &t1 {
                            Some(v) => p.l.br_vec1(v, y2, y3),
                            None => zero_vec(n),
                        };
                        if let Some(v) = &t2 {
                            let mid = p.l.br_vec2(y1, v, y3);
                            add_assign_scaled(&mut rhs, &mid, &e1);
                        }
                        if let Some(v) = &t3 {
                            let last = p.l.br_vec3(y1, y2, v);
                            add_assign_scaled(&mut rhs, &last, &e2);
                        }
                        if lhs != rhs {
                            check.violate(
                                vec![
                                    names[x1].clone(),
                                    names[x2].clone(),
                                    names[y1].clone(),
                                    names[y2].clone(),
                                    names[y3].clone(),
                                ],
                                fmt_vec(names, &lhs),
                                fmt_vec(names, &rhs),
                            );
                        }
                    }
                }
            }
        }
    }
    check.sort_violations();
    check
}

/// Color commutativity and associativity of A.
pub fn check_a_comm_assoc<S: Scalar>(p: &RinehartPair<S>) -> Check {
    let mut check = Check::new("a-comm-assoc");
    let m = p.dim_a();
    let names = &p.a.basis.names;
    let eps = p.eps();
    let deg = |i: usize| &p.a.basis.degrees[i];
    let get = |i, j| p.a.prod(i, j).unwrap_or_else(|| zero_vec(m));
    for i in 0..m {
        for j in 0..m {
            check.checked += 1;
            let ab = get(i, j);
            let e: S = eps.eps(deg(i), deg(j));
            let ba = scale_vec(&get(j, i), &e);
            if ab != ba {
                check.violate(
                    vec![names[i].clone(), names[j].clone()],
                    fmt_vec(names, &ab),
                    format!("eps(a,b) b a = {}", fmt_vec(names, &ba)),
                );
            }
        }
    }
    let unit = |i: usize| {
        let mut v = zero_vec::<S>(m);
        v[i] = S::one();
        v
    };
    for i in 0..m {
        for j in 0..m {
            let ab = get(i, j);
            for k in 0..m {
                check.checked += 1;
                let lhs = p.a.prod_vec(&ab, &unit(k));
                let rhs = p.a.prod_vec(&unit(i), &get(j, k));
                if lhs != rhs {
                    check.violate(
                        vec![names[i].clone(), names[j].clone(), names[k].clone()],
                        fmt_vec(names, &lhs),
                        fmt_vec(names, &rhs),
                    );
                }
            }
        }
    }
    check.sort_violations();
    check
}

/// rho(u, e_j)(a_k) for a coordinate vector u in the first anchor slot.
fn rho_lvec<S: Scalar>(p: &RinehartPair<S>, u: &[S], j: usize, k: usize) -> Vector<S> {
    let mut out = zero_vec(p.dim_a());
    for (i, c) in u.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        if let Some(img) = p.rho_apply(i, j, k) {
            add_assign_scaled(&mut out, &img, c);
        }
    }
    out
}

/// Both module identities for the anchor, applied to every A basis vector.
pub fn check_rep<S: Scalar>(p: &RinehartPair<S>) -> Check {
    let mut check = Check::new("representation");
    let n = p.dim_l();
    let m = p.dim_a();
    let lnames = &p.l.basis.names;
    let anames = &p.a.basis.names;
    let eps = p.eps();
    let group = &eps.group;
    let deg = |i: usize| &p.l.basis.degrees[i];
    let unit_a = |k: usize| {
        let mut v = zero_vec::<S>(m);
        v[k] = S::one();
        v
    };
    for x1 in 0..n {
        for x2 in 0..n {
            let d12 = group.add(deg(x1), deg(x2));
            for x3 in 0..n {
                let d23 = group.add(deg(x2), deg(x3));
                let b123 = p.l.br(x1, x2, x3);
                for x4 in 0..n {
                    check.checked += 1;
                    let d34 = group.add(deg(x3), deg(x4));
                    let e_1234: S = eps.eps(&d12, &d34);
                    let e_34: S = eps.eps(deg(x3), deg(x4));
                    let b124 = p.l.br(x1, x2, x4);
                    for k in 0..m {
                        let a = unit_a(k);
                        let inner34 = p.rho_apply_vec(x3, x4, &a);
                        let t1 = p.rho_apply_vec(x1, x2, &inner34);
                        let inner12 = p.rho_apply_vec(x1, x2, &a);
                        let t2 = p.rho_apply_vec(x3, x4, &inner12);
                        let mut lhs22 = t1.clone();
                        add_assign_scaled(&mut lhs22, &t2, &-e_1234.clone());
                        let r1 = match &b123 {
                            Some(v) => rho_lvec(p, v, x4, k),
                            None => zero_vec(m),
                        };
                        let mut rhs22 = r1.clone();
                        if let Some(v) = &b124 {
                            let r2 = rho_lvec(p, v, x3, k);
                            add_assign_scaled(&mut rhs22, &r2, &-e_34.clone());
                        }
                        if lhs22 != rhs22 {
                            check.violate(
                                vec![
                                    lnames[x1].clone(),
                                    lnames[x2].clone(),
                                    lnames[x3].clone(),
                                    lnames[x4].clone(),
                                    anames[k].clone(),
                                ],
                                format!("first module identity lhs = {}", fmt_vec(anames, &lhs22)),
                                fmt_vec(anames, &rhs22),
                            );
                        }
                        // second identity
                        let e_a: S = eps.eps(deg(x1), &d23);
                        let e_b: S = eps.eps(&d12, deg(x3));
                        let mut rhs23 = t1;
                        let inner14 = p.rho_apply_vec(x1, x4, &a);
                        let s2 = p.rho_apply_vec(x2, x3, &inner14);
                        add_assign_scaled(&mut rhs23, &s2, &e_a);
                        let inner24 = p.rho_apply_vec(x2, x4, &a);
                        let s3 = p.rho_apply_vec(x3, x1, &inner24);
                        add_assign_scaled(&mut rhs23, &s3, &e_b);
                        if r1 != rhs23 {
                            check.violate(
                                vec![
                                    lnames[x1].clone(),
                                    lnames[x2].clone(),
                                    lnames[x3].clone(),
                                    lnames[x4].clone(),
                                    anames[k].clone(),
                                ],
                                format!("second module identity lhs = {}", fmt_vec(anames, &r1)),
                                fmt_vec(anames, &rhs23),
                            );
                        }
                    }
                }
            }
        }
    }
    check.sort_violations();
    check
}

/// rho(L, L) consists of color derivations of A:
/// rho(x,y)(ab) = rho(x,y)(a) b + eps(|x|+|y|, |a|) a rho(x,y)(b).
pub fn check_der<S: Scalar>(p: &RinehartPair<S>) -> Check {
    let mut check = Check::new("derivation");
    let n = p.dim_l();
    let m = p.dim_a();
    let lnames = &p.l.basis.names;
    let anames = &p.a.basis.names;
    let eps = p.eps();
    let group = &eps.group;
    let unit_a = |k: usize| {
        let mut v = zero_vec::<S>(m);
        v[k] = S::one();
        v
    };
    for x in 0..n {
        for y in 0..n {
            let dxy = group.add(&p.l.basis.degrees[x], &p.l.basis.degrees[y]);
            for ai in 0..m {
                let e: S = eps.eps(&dxy, &p.a.basis.degrees[ai]);
                for bi in 0..m {
                    check.checked += 1;
                    let ab = p.a.prod(ai, bi).unwrap_or_else(|| zero_vec(m));
                    let lhs = p.rho_apply_vec(x, y, &ab);
                    let da = p.rho_apply_vec(x, y, &unit_a(ai));
                    let mut rhs = p.a.prod_vec(&da, &unit_a(bi));
                    let db = p.rho_apply_vec(x, y, &unit_a(bi));
                    let t = p.a.prod_vec(&unit_a(ai), &db);
                    add_assign_scaled(&mut rhs, &t, &e);
                    if lhs != rhs {
                        check.violate(
                            vec![
                                lnames[x].clone(),
                                lnames[y].clone(),
                                anames[ai].clone(),
                                anames[bi].clone(),
                            ],
                            fmt_vec(anames, &lhs),
                            fmt_vec(anames, &rhs),
                        );
                    }
                }
            }
        }
    }
    check.sort_violations();
    check
}

/// Both compatibility laws tying bracket, action and anchor together.
pub fn check_compat<S: Scalar>(p: &RinehartPair<S>) -> Check {
    let mut check = Check::new("compatibility");
    let n = p.dim_l();
    let m = p.dim_a();
    let lnames = &p.l.basis.names;
    let anames = &p.a.basis.names;
    let eps = p.eps();
    let group = &eps.group;
    let ldeg = |i: usize| &p.l.basis.degrees[i];
    let adeg = |i: usize| &p.a.basis.degrees[i];
    let unit_a = |k: usize| {
        let mut v = zero_vec::<S>(m);
        v[k] = S::one();
        v
    };
    let unit_l = |k: usize| {
        let mut v = zero_vec::<S>(n);
        v[k] = S::one();
        v
    };
    // [x, y, a z] = eps(a, x+y) a [x, y, z] + rho(x, y)(a) z
    for x in 0..n {
        for y in 0..n {
            let dxy = group.add(ldeg(x), ldeg(y));
            for ai in 0..m {
                let e: S = eps.eps(adeg(ai), &dxy);
                for z in 0..n {
                    check.checked += 1;
                    let az = p.act(ai, z).unwrap_or_else(|| zero_vec(n));
                    let lhs = p.l.br_vec3(x, y, &az);
                    let bxyz = p.l.br(x, y, z).unwrap_or_else(|| zero_vec(n));
                    let mut rhs = scale_vec(&p.act_vec(&unit_a(ai), &bxyz), &e);
                    let rho_a = p.rho_apply_vec(x, y, &unit_a(ai));
                    let t = p.act_vec(&rho_a, &unit_l(z));
                    add_assign(&mut rhs, &t);
                    if lhs != rhs {
                        check.violate(
                            vec![
                                lnames[x].clone(),
                                lnames[y].clone(),
                                anames[ai].clone(),
                                lnames[z].clone(),
                            ],
                            format!("[x,y,az] = {}", fmt_vec(lnames, &lhs)),
                            fmt_vec(lnames, &rhs),
                        );
                    }
                }
            }
        }
    }
    // rho(a x, y) = eps(a, x) rho(x, a y) = a rho(x, y)
    for ai in 0..m {
        for x in 0..n {
            let e: S = eps.eps(adeg(ai), ldeg(x));
            for y in 0..n {
                check.checked += 1;
                let ax = p.act(ai, x).unwrap_or_else(|| zero_vec(n));
                let ay = p.act(ai, y).unwrap_or_else(|| zero_vec(n));
                for k in 0..m {
                    let m1 = {
                        let mut out = zero_vec(m);
                        for (l, c) in ax.iter().enumerate() {
                            if !c.is_zero() {
                                if let Some(img) = p.rho_apply(l, y, k) {
                                    add_assign_scaled(&mut out, &img, c);
                                }
                            }
                        }
                        out
                    };
                    let m2 = {
                        let mut out = zero_vec(m);
                        for (l, c) in ay.iter().enumerate() {
                            if !c.is_zero() {
                                if let Some(img) = p.rho_apply(x, l, k) {
                                    add_assign_scaled(&mut out, &img, c);
                                }
                            }
                        }
                        scale_vec(&out, &e)
                    };
                    let m3 = {
                        let img = p.rho_apply(x, y, k).unwrap_or_else(|| zero_vec(m));
                        p.a.prod_vec(&unit_a(ai), &img)
                    };
                    if m1 != m2 {
                        check.violate(
                            vec![
                                anames[ai].clone(),
                                lnames[x].clone(),
                                lnames[y].clone(),
                                anames[k].clone(),
                            ],
                            format!("rho(ax,y) = {}", fmt_vec(anames, &m1)),
                            format!("eps(a,x) rho(x,ay) = {}", fmt_vec(anames, &m2)),
                        );
                    }
                    if m1 != m3 {
                        check.violate(
                            vec![
                                anames[ai].clone(),
                                lnames[x].clone(),
                                lnames[y].clone(),
                                anames[k].clone(),
                            ],
                            format!("rho(ax,y) = {}", fmt_vec(anames, &m1)),
                            format!("a rho(x,y) = {}", fmt_vec(anames, &m3)),
                        );
                    }
                }
            }
        }
    }
    check.sort_violations();
    check
}

/// L is an A-module: (a b) x = a (b x), plus action degree additivity.
pub fn check_module<S: Scalar>(p: &RinehartPair<S>) -> Check {
    let mut check = Check::new("module");
    let n = p.dim_l();
    let m = p.dim_a();
    let lnames = &p.l.basis.names;
    let anames = &p.a.basis.names;
    let unit_a = |k: usize| {
        let mut v = zero_vec::<S>(m);
        v[k] = S::one();
        v
    };
    let unit_l = |k: usize| {
        let mut v = zero_vec::<S>(n);
        v[k] = S::one();
        v
    };
    for ai in 0..m {
        for bi in 0..m {
            let ab = p.a.prod(ai, bi).unwrap_or_else(|| zero_vec(m));
            for x in 0..n {
                check.checked += 1;
                let lhs = p.act_vec(&ab, &unit_l(x));
                let bx = p.act(bi, x).unwrap_or_else(|| zero_vec(n));
                let rhs = p.act_vec(&unit_a(ai), &bx);
                if lhs != rhs {
                    check.violate(
                        vec![anames[ai].clone(), anames[bi].clone(), lnames[x].clone()],
                        format!("(ab)x = {}", fmt_vec(lnames, &lhs)),
                        format!("a(bx) = {}", fmt_vec(lnames, &rhs)),
                    );
                }
            }
        }
    }
    check.sort_violations();
    check
}

/// Run every checker, including the bi-character laws. Overall pass iff all pass.
pub fn validate_all<S: Scalar>(p: &RinehartPair<S>) -> Vec<Check> {
    vec![
        p.eps().validate(),
        check_bracket_grading(p),
        check_skew(p),
        check_fi(p),
        check_a_comm_assoc(p),
        check_rep(p),
        check_der(p),
        check_compat(p),
        check_module(p),
    ]
}

pub fn all_passed(checks: &[Check]) -> bool {
    checks.iter().all(|c| c.passed())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{ColorCommAlgebra, GradedBasis, ThreeLieColorAlgebra};
    use crate::grading::BiCharacter;
    use crate::scalar::Q;
    use std::collections::BTreeMap;

    fn qv(xs: &[i64]) -> Vector<Q> {
        xs.iter().map(|&x| Q::from_int(x)).collect()
    }

    fn abelian_pair(nl: usize, na: usize) -> RinehartPair<Q> {
        let lb = GradedBasis::new((0..nl).map(|i| (format!("e{i}"), vec![0])).collect()).unwrap();
        let ab = GradedBasis::new((0..na).map(|i| (format!("u{i}"), vec![0])).collect()).unwrap();
        RinehartPair::new(
            ThreeLieColorAlgebra::new(lb, BiCharacter::trivial()),
            ColorCommAlgebra::new(ab, BiCharacter::trivial()),
        )
        .unwrap()
    }

    #[test]
    fn abelian_pair_passes_everything() {
        let p = abelian_pair(2, 1);
        let checks = validate_all(&p);
        assert!(all_passed(&checks), "{:?}", checks.iter().map(|c| c.summary()).collect::<Vec<_>>());
        let fi = checks.iter().find(|c| c.id == "fundamental-identity").unwrap();
        assert_eq!(fi.checked, 32); // 2^5
    }

    #[test]
    fn planted_skew_violation_is_caught() {
        let mut p = abelian_pair(4, 1);
        p.l.bracket.insert([0, 1, 2], qv(&[0, 0, 0, 1]));
        // forcing the wrong orientation value: skew demands -e4 here
        p.l.bracket.insert([1, 0, 2], qv(&[0, 0, 0, 1]));
        assert!(!check_skew(&p).passed());
    }

    #[test]
    fn planted_repeated_argument_value_is_caught() {
        let mut p = abelian_pair(3, 1);
        // [e0,e0,e1] must vanish with trivial color
        p.l.bracket.insert([0, 0, 1], qv(&[0, 0, 1]));
        assert!(!check_skew(&p).passed());
    }

    #[test]
    fn broken_fi_is_caught() {
        // [e0,e1,e2] = e3, [e0,e1,e3] = e2, [e0,e2,e3] = e3: the tuple
        // (e0,e1,e0,e2,e3) gives lhs [e0,e1,e3] = e2 with vanishing right side
        let mut p = abelian_pair(4, 1);
        p.l.bracket.insert([0, 1, 2], qv(&[0, 0, 0, 1]));
        p.l.bracket.insert([0, 1, 3], qv(&[0, 0, 1, 0]));
        p.l.bracket.insert([0, 2, 3], qv(&[0, 0, 0, 1]));
        let fi = check_fi(&p);
        assert!(!fi.passed());
        assert_eq!(fi.checked, 1024);
    }

    #[test]
    fn non_assoc_product_is_caught() {
        let mut p = abelian_pair(2, 2);
        // u0 u0 = u1, u0 u1 = u0: (u0 u0) u1 = u0 u1 = u0; u0 (u0 u1) = u0 u0 = u1
        p.a.product.insert([0, 0], qv(&[0, 1]));
        p.a.product.insert([0, 1], qv(&[1, 0]));
        assert!(!check_a_comm_assoc(&p).passed());
    }

    #[test]
    fn scaled_product_comm_violation_is_caught() {
        let mut p = abelian_pair(2, 2);
        p.a.product.insert([0, 1], qv(&[1, 0]));
        p.a.product.insert([1, 0], qv(&[2, 0]));
        assert!(!check_a_comm_assoc(&p).passed());
    }

    #[test]
    fn module_violation_is_caught() {
        let mut p = abelian_pair(2, 2);
        // u0 u0 = u0 but u0 acts nilpotently: (u0 u0) e0 = e1 while u0 (u0 e0) = 0
        p.a.product.insert([0, 0], qv(&[1, 0]));
        p.action.insert((0, 0), qv(&[0, 1]));
        assert!(!check_module(&p).passed());
    }

    #[test]
    fn grading_violation_is_caught() {
        let lb = GradedBasis::new(vec![
            ("e0".into(), vec![0]),
            ("e1".into(), vec![0]),
            ("e2".into(), vec![1]),
        ])
        .unwrap();
        let ab = GradedBasis::new(vec![("u".into(), vec![0])]).unwrap();
        let mut p = RinehartPair::new(
            ThreeLieColorAlgebra::new(lb, BiCharacter::super_sign()),
            ColorCommAlgebra::new(ab, BiCharacter::super_sign()),
        )
        .unwrap();
        // |e0|+|e1|+|e2| = 1 but output e1 has degree 0
        p.l.bracket.insert([0, 1, 2], qv(&[0, 1, 0]));
        assert!(!check_bracket_grading(&p).passed());
        let _ = BTreeMap::<u8, u8>::new();
    }
}
