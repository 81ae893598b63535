//! Connections of roots (pair-step reachability) and weights (single-step
//! reachability), with machine-checkable witnesses and equivalence-class
//! partitions.

use crate::report::Check;
use crate::scalar::Scalar;
use crate::split::{Functional, SplitDatum};
use serde::Serialize;
use std::collections::VecDeque;
use thiserror::Error;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Mode {
    /// The definition exactly as printed: only the pair-step partial sums are
    /// constrained to lie in the root system.
    Verbatim,
    /// Additionally requires the one-element partial sum s + gamma to lie in
    /// the combined root/weight system, blocking pure cancellation; direct
    /// sums then stay separate.
    Strict,
}

impl std::str::FromStr for Mode {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "strict" => Ok(Mode::Strict),
            "verbatim" => Ok(Mode::Verbatim),
            other => Err(format!("unknown mode {other:?} (expected strict|verbatim)")),
        }
    }
}

impl std::fmt::Display for Mode {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Mode::Strict => write!(f, "strict"),
            Mode::Verbatim => write!(f, "verbatim"),
        }
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ConnectError {
    #[error("functional is not a root of the split datum")]
    NotARoot,
    #[error("functional is not a weight of the split datum")]
    NotAWeight,
}

/// A connection witness: the chain {a1, a2, ..., a_{2k+1}} (roots) or
/// {l1, ..., lk} (weights) together with its partial sums.
#[derive(Debug, Clone)]
pub struct ConnectionWitness<S: Scalar> {
    pub chain: Vec<Functional<S>>,
    pub partial_sums: Vec<Functional<S>>,
}

fn contains<S: Scalar>(set: &[Functional<S>], f: &Functional<S>) -> bool {
    set.iter().any(|x| x == f)
}

fn plus_minus<S: Scalar>(set: &[Functional<S>]) -> Vec<Functional<S>> {
    let mut out: Vec<Functional<S>> = Vec::new();
    for f in set {
        if !contains(&out, f) {
            out.push(f.clone());
        }
        let n = f.neg();
        if !contains(&out, &n) {
            out.push(n);
        }
    }
    out
}

/// The move pool for root connections.
fn root_pool<S: Scalar>(s: &SplitDatum<S>) -> Vec<Functional<S>> {
    let mut pool = plus_minus(&s.roots);
    for f in plus_minus(&s.weights) {
        if !contains(&pool, &f) {
            pool.push(f);
        }
    }
    let zero = Functional::zero(s.cartan_dim());
    if !contains(&pool, &zero) {
        pool.push(zero);
    }
    pool
}

/// The move pool for weight connections (no zero element).
fn weight_pool<S: Scalar>(s: &SplitDatum<S>) -> Vec<Functional<S>> {
    let mut pool = plus_minus(&s.roots);
    for f in plus_minus(&s.weights) {
        if !contains(&pool, &f) {
            pool.push(f);
        }
    }
    pool
}

/// Replay a root connection witness against the definition.
pub fn validate_root_witness<S: Scalar>(
    s: &SplitDatum<S>,
    alpha: &Functional<S>,
    beta: &Functional<S>,
    w: &ConnectionWitness<S>,
    mode: Mode,
) -> bool {
    if w.chain.is_empty() || w.chain.len() % 2 == 0 {
        return false;
    }
    if w.chain[0] != *alpha {
        return false;
    }
    let pm_pi = plus_minus(&s.roots);
    let pool = root_pool(s);
    if !w.chain.iter().all(|f| contains(&pool, f)) {
        return false;
    }
    let k = (w.chain.len() - 1) / 2;
    let mut sum = w.chain[0].clone();
    if w.partial_sums.first() != Some(&sum) {
        return false;
    }
    if k == 0 {
        return *beta == sum || *beta == sum.neg();
    }
    for step in 0..k {
        let gamma = &w.chain[1 + 2 * step];
        let mu = &w.chain[2 + 2 * step];
        if mode == Mode::Strict {
            let mid = sum.add(gamma);
            if !contains(&weight_pool(s), &mid) {
                return false;
            }
        }
        sum = sum.add(gamma).add(mu);
        if w.partial_sums.get(step + 1) != Some(&sum) {
            return false;
        }
        let last = step == k - 1;
        if last {
            if sum != *beta && sum != beta.neg() {
                return false;
            }
        } else if !contains(&pm_pi, &sum) {
            return false;
        }
    }
    true
}

/// Replay a weight connection witness.
pub fn validate_weight_witness<S: Scalar>(
    s: &SplitDatum<S>,
    lambda: &Functional<S>,
    mu: &Functional<S>,
    w: &ConnectionWitness<S>,
) -> bool {
    if w.chain.is_empty() || w.chain[0] != *lambda {
        return false;
    }
    if w.chain.len() == 1 {
        return *mu == w.chain[0] || *mu == w.chain[0].neg();
    }
    let pool = weight_pool(s);
    if !w.chain.iter().all(|f| contains(&pool, f)) {
        return false;
    }
    let pm_lambda = plus_minus(&s.weights);
    let mut sum = w.chain[0].clone();
    if w.partial_sums.first() != Some(&sum) {
        return false;
    }
    for (i, eta) in w.chain.iter().enumerate().skip(1) {
        sum = sum.add(eta);
        if w.partial_sums.get(i) != Some(&sum) {
            return false;
        }
        let last = i == w.chain.len() - 1;
        if last {
            if sum != *mu && sum != mu.neg() {
                return false;
            }
        } else if !contains(&pm_lambda, &sum) {
            return false;
        }
    }
    true
}

/// Breadth-first search for a connection from root alpha to root beta.
/// States live in +-Pi; a move appends a pair (gamma, mu) from the pool.
pub fn root_connected<S: Scalar>(
    s: &SplitDatum<S>,
    alpha_id: usize,
    beta_id: usize,
    mode: Mode,
) -> Result<Option<ConnectionWitness<S>>, ConnectError> {
    if alpha_id >= s.roots.len() || beta_id >= s.roots.len() {
        return Err(ConnectError::NotARoot);
    }
    let alpha = s.roots[alpha_id].clone();
    let beta = s.roots[beta_id].clone();
    let witness = root_bfs(s, &alpha, &beta, mode);
    if let Some(w) = &witness {
        debug_assert!(validate_root_witness(s, &alpha, &beta, w, mode));
    }
    Ok(witness)
}

fn root_bfs<S: Scalar>(
    s: &SplitDatum<S>,
    alpha: &Functional<S>,
    beta: &Functional<S>,
    mode: Mode,
) -> Option<ConnectionWitness<S>> {
    if *beta == *alpha || *beta == alpha.neg() {
        return Some(ConnectionWitness {
            chain: vec![alpha.clone()],
            partial_sums: vec![alpha.clone()],
        });
    }
    let states = plus_minus(&s.roots);
    let pool = root_pool(s);
    let strict_pool = weight_pool(s);
    let find = |f: &Functional<S>| states.iter().position(|x| x == f);
    let start = find(alpha)?;
    let mut parent: Vec<Option<(usize, usize, usize)>> = vec![None; states.len()];
    let mut seen = vec![false; states.len()];
    seen[start] = true;
    let mut queue = VecDeque::new();
    queue.push_back(start);
    let mut goal = None;
    'bfs: while let Some(cur) = queue.pop_front() {
        for (gi, gamma) in pool.iter().enumerate() {
            let mid = states[cur].add(gamma);
            if mode == Mode::Strict && !contains(&strict_pool, &mid) {
                continue;
            }
            for (mi, mu) in pool.iter().enumerate() {
                let next = mid.add(mu);
                let Some(ni) = find(&next) else { continue };
                if seen[ni] {
                    continue;
                }
                seen[ni] = true;
                parent[ni] = Some((cur, gi, mi));
                if next == *beta || next == beta.neg() {
                    goal = Some(ni);
                    break 'bfs;
                }
                queue.push_back(ni);
            }
        }
    }
    let goal = goal?;
    let mut steps = Vec::new();
    let mut cur = goal;
    while let Some((prev, gi, mi)) = parent[cur] {
        steps.push((gi, mi));
        cur = prev;
    }
    steps.reverse();
    let mut chain = vec![alpha.clone()];
    let mut partial_sums = vec![alpha.clone()];
    let mut sum = alpha.clone();
    for (gi, mi) in steps {
        chain.push(pool[gi].clone());
        chain.push(pool[mi].clone());
        sum = sum.add(&pool[gi]).add(&pool[mi]);
        partial_sums.push(sum.clone());
    }
    Some(ConnectionWitness { chain, partial_sums })
}

/// Breadth-first search for a weight connection (single steps, no zero move).
pub fn weight_connected<S: Scalar>(
    s: &SplitDatum<S>,
    lambda_id: usize,
    mu_id: usize,
) -> Result<Option<ConnectionWitness<S>>, ConnectError> {
    if lambda_id >= s.weights.len() || mu_id >= s.weights.len() {
        return Err(ConnectError::NotAWeight);
    }
    let lambda = s.weights[lambda_id].clone();
    let mu = s.weights[mu_id].clone();
    if mu == lambda || mu == lambda.neg() {
        return Ok(Some(ConnectionWitness {
            chain: vec![lambda.clone()],
            partial_sums: vec![lambda],
        }));
    }
    let states = plus_minus(&s.weights);
    let pool = weight_pool(s);
    let find = |f: &Functional<S>| states.iter().position(|x| x == f);
    let Some(start) = find(&lambda) else {
        return Ok(None);
    };
    let mut parent: Vec<Option<(usize, usize)>> = vec![None; states.len()];
    let mut seen = vec![false; states.len()];
    seen[start] = true;
    let mut queue = VecDeque::new();
    queue.push_back(start);
    let mut goal = None;
    'bfs: while let Some(cur) = queue.pop_front() {
        for (ei, eta) in pool.iter().enumerate() {
            let next = states[cur].add(eta);
            let Some(ni) = find(&next) else { continue };
            if seen[ni] {
                continue;
            }
            seen[ni] = true;
            parent[ni] = Some((cur, ei));
            if next == mu || next == mu.neg() {
                goal = Some(ni);
                break 'bfs;
            }
            queue.push_back(ni);
        }
    }
    let Some(goal) = goal else { return Ok(None) };
    let mut steps = Vec::new();
    let mut cur = goal;
    while let Some((prev, ei)) = parent[cur] {
        steps.push(ei);
        cur = prev;
    }
    steps.reverse();
    let mut chain = vec![lambda.clone()];
    let mut partial_sums = vec![lambda.clone()];
    let mut sum = lambda.clone();
    for ei in steps {
        chain.push(pool[ei].clone());
        sum = sum.add(&pool[ei]);
        partial_sums.push(sum.clone());
    }
    let w = ConnectionWitness { chain, partial_sums };
    debug_assert!(validate_weight_witness(s, &lambda, &mu, &w));
    Ok(Some(w))
}

/// Equivalence classes of the connection relation, with the relation's
/// reflexivity/symmetry/transitivity re-verified exhaustively.
#[derive(Debug, Clone)]
pub struct ClassPartition<S: Scalar> {
    /// classes of root/weight ids, deterministically ordered
    pub classes: Vec<Vec<usize>>,
    pub equivalence: Check,
    pub witnesses: Vec<(usize, usize, ConnectionWitness<S>)>,
}

fn partition_from_relation(n: usize, related: &dyn Fn(usize, usize) -> bool) -> (Vec<Vec<usize>>, Check) {
    let mut check = Check::new("equivalence");
    let mut r = vec![vec![false; n]; n];
    for i in 0..n {
        for j in 0..n {
            r[i][j] = related(i, j);
        }
    }
    for (i, row) in r.iter().enumerate() {
        check.checked += 1;
        if !row[i] {
            check.violate(vec![format!("{i}")], "not reflexive".into(), "reflexive".into());
        }
    }
    for i in 0..n {
        for j in 0..n {
            check.checked += 1;
            if r[i][j] != r[j][i] {
                check.violate(
                    vec![format!("{i}"), format!("{j}")],
                    "not symmetric".into(),
                    "symmetric".into(),
                );
            }
            for k in 0..n {
                check.checked += 1;
                if r[i][j] && r[j][k] && !r[i][k] {
                    check.violate(
                        vec![format!("{i}"), format!("{j}"), format!("{k}")],
                        "not transitive".into(),
                        "transitive".into(),
                    );
                }
            }
        }
    }
    // components of the symmetric closure
    let mut class_of: Vec<Option<usize>> = vec![None; n];
    let mut classes: Vec<Vec<usize>> = Vec::new();
    for i in 0..n {
        if class_of[i].is_some() {
            continue;
        }
        let cid = classes.len();
        let mut stack = vec![i];
        let mut members = Vec::new();
        class_of[i] = Some(cid);
        while let Some(x) = stack.pop() {
            members.push(x);
            for y in 0..n {
                if class_of[y].is_none() && (r[x][y] || r[y][x]) {
                    class_of[y] = Some(cid);
                    stack.push(y);
                }
            }
        }
        members.sort_unstable();
        classes.push(members);
    }
    (classes, check)
}

pub fn root_classes<S: Scalar>(s: &SplitDatum<S>, mode: Mode) -> ClassPartition<S> {
    let n = s.roots.len();
    let mut witnesses = Vec::new();
    let mut table = vec![vec![false; n]; n];
    for i in 0..n {
        for j in 0..n {
            if let Some(w) = root_connected(s, i, j, mode).unwrap() {
                table[i][j] = true;
                witnesses.push((i, j, w));
            }
        }
    }
    let (classes, equivalence) = partition_from_relation(n, &|i, j| table[i][j]);
    ClassPartition {
        classes: sort_classes(s, classes, true),
        equivalence,
        witnesses,
    }
}

pub fn weight_classes<S: Scalar>(s: &SplitDatum<S>) -> ClassPartition<S> {
    let n = s.weights.len();
    let mut witnesses = Vec::new();
    let mut table = vec![vec![false; n]; n];
    for i in 0..n {
        for j in 0..n {
            if let Some(w) = weight_connected(s, i, j).unwrap() {
                table[i][j] = true;
                witnesses.push((i, j, w));
            }
        }
    }
    let (classes, mut equivalence) = partition_from_relation(n, &|i, j| table[i][j]);
    // closure property: within a class, adding any eta that stays in Lambda
    // stays in the class
    let pool = weight_pool(s);
    for class in &classes {
        for &i in class {
            for eta in &pool {
                let sum = s.weights[i].add(eta);
                if let Some(k) = s.weight_id_of(&sum) {
                    equivalence.checked += 1;
                    if !class.contains(&k) {
                        equivalence.violate(
                            vec![s.weights[i].render(), eta.render()],
                            "sum escapes its class".into(),
                            "class closed under in-system shifts".into(),
                        );
                    }
                }
            }
        }
    }
    ClassPartition {
        classes: sort_classes(s, classes, false),
        equivalence,
        witnesses,
    }
}

fn sort_classes<S: Scalar>(s: &SplitDatum<S>, mut classes: Vec<Vec<usize>>, roots: bool) -> Vec<Vec<usize>> {
    let key = |id: usize| -> &Functional<S> {
        if roots {
            &s.roots[id]
        } else {
            &s.weights[id]
        }
    };
    for class in &mut classes {
        class.sort_by(|&a, &b| key(a).cmp_key(key(b)));
    }
    classes.sort_by(|a, b| key(a[0]).cmp_key(key(b[0])));
    classes
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::Zero;
    use crate::builtins;
    use crate::split::extract_split;

    fn names(v: &[&str]) -> Vec<String> {
        v.iter().map(|s| s.to_string()).collect()
    }

    fn b3_split() -> SplitDatum<crate::scalar::Q> {
        extract_split(&builtins::b3(), &names(&["h1", "h2"])).unwrap()
    }

    fn b3sum_split() -> SplitDatum<crate::scalar::Q> {
        extract_split(&builtins::b3sum(), &names(&["h1_1", "h2_1", "h1_2", "h2_2"])).unwrap()
    }

    #[test]
    fn base_case_connects_alpha_to_itself_and_its_negative() {
        let s = b3_split();
        for mode in [Mode::Strict, Mode::Verbatim] {
            let w = root_connected(&s, 0, 0, mode).unwrap().unwrap();
            assert_eq!(w.chain.len(), 1);
            let w = root_connected(&s, 0, 1, mode).unwrap().unwrap();
            assert_eq!(w.chain.len(), 1, "-alpha is reached by the k=1 case");
        }
    }

    #[test]
    fn b3_has_one_root_class_and_one_weight_class() {
        let s = b3_split();
        for mode in [Mode::Strict, Mode::Verbatim] {
            let part = root_classes(&s, mode);
            assert_eq!(part.classes.len(), 1);
            assert!(part.equivalence.passed());
        }
        let wpart = weight_classes(&s);
        assert_eq!(wpart.classes.len(), 1);
        assert!(wpart.equivalence.passed());
    }

    #[test]
    fn b3sum_strict_separates_blocks_verbatim_joins_them() {
        let s = b3sum_split();
        let strict = root_classes(&s, Mode::Strict);
        assert_eq!(strict.classes.len(), 2);
        assert!(strict.equivalence.passed());
        let verbatim = root_classes(&s, Mode::Verbatim);
        assert_eq!(verbatim.classes.len(), 1);
        assert!(verbatim.equivalence.passed());
        let weights = weight_classes(&s);
        assert_eq!(weights.classes.len(), 2);
    }

    #[test]
    fn cross_block_verbatim_witness_replays_in_verbatim_only() {
        let s = b3sum_split();
        // find a cross-block pair
        let mut cross = None;
        'outer: for i in 0..s.roots.len() {
            for j in 0..s.roots.len() {
                let b1 = !s.roots[i].values[0][1].is_zero();
                let b2 = !s.roots[j].values[0][1].is_zero();
                if b1 != b2 {
                    cross = Some((i, j));
                    break 'outer;
                }
            }
        }
        let (i, j) = cross.unwrap();
        assert!(root_connected(&s, i, j, Mode::Strict).unwrap().is_none());
        let w = root_connected(&s, i, j, Mode::Verbatim).unwrap().unwrap();
        assert!(validate_root_witness(&s, &s.roots[i], &s.roots[j], &w, Mode::Verbatim));
        assert!(!validate_root_witness(&s, &s.roots[i], &s.roots[j], &w, Mode::Strict));
    }

    #[test]
    fn out_of_range_root_is_an_error() {
        let s = b3_split();
        assert!(root_connected(&s, 7, 0, Mode::Strict).is_err());
        assert!(weight_connected(&s, 0, 9).is_err());
    }

    #[test]
    fn empty_weight_system_has_empty_partition() {
        let s = extract_split(&builtins::b0(), &names(&["e1", "e2"])).unwrap();
        let part = weight_classes(&s);
        assert!(part.classes.is_empty());
    }
}
