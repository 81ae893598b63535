//! Command implementations and the machine-readable run report.

use serde::Serialize;
use sha2::{Digest, Sha256};
use std::path::Path;
use trilie::axioms;
use trilie::builtins;
use trilie::connect::{root_classes, weight_classes, Mode};
use trilie::decompose::{
    check_tight, decompose_a, decompose_l, pairing, radicals, simplicity_probe,
};
use trilie::format::{build_pair, emit_string, parse_file, to_file};
use trilie::report::Check;
use trilie::split::{
    check_maximal_length, check_prop_closure, check_root_multiplicative, check_symmetry,
    extract_split, SplitDatum,
};
use trilie::{Pair, Q};

pub const PASS: u8 = 0;
pub const CHECK_FAILED: u8 = 1;
pub const INPUT_ERROR: u8 = 2;

#[derive(Serialize)]
struct CheckOut {
    id: String,
    passed: bool,
    checked: u64,
    violation_count: usize,
    violations: Vec<trilie::report::Violation>,
    notes: Vec<String>,
}

impl From<&Check> for CheckOut {
    fn from(c: &Check) -> Self {
        CheckOut {
            id: c.id.clone(),
            passed: c.passed(),
            checked: c.checked,
            violation_count: c.violations.len(),
            violations: c.violations.clone(),
            notes: c.notes.clone(),
        }
    }
}

#[derive(Serialize)]
struct RunReport {
    tool_version: String,
    input_digest: String,
    mode: Option<String>,
    checks: Vec<CheckOut>,
    facts: serde_json::Value,
    verdict: String,
}

impl RunReport {
    fn new(digest: String, mode: Option<Mode>) -> Self {
        RunReport {
            tool_version: env!("CARGO_PKG_VERSION").to_string(),
            input_digest: digest,
            mode: mode.map(|m| m.to_string()),
            checks: Vec::new(),
            facts: serde_json::Value::Null,
            verdict: String::new(),
        }
    }

    fn push_checks(&mut self, checks: &[Check]) {
        for c in checks {
            println!("{}", c.summary());
            self.checks.push(c.into());
        }
    }

    fn finish(&mut self, json: Option<&Path>) -> u8 {
        let failed = self.checks.iter().any(|c| !c.passed);
        self.verdict = if failed { "fail".into() } else { "pass".into() };
        if let Some(path) = json {
            let text = serde_json::to_string_pretty(self).expect("serializable report");
            if let Err(e) = std::fs::write(path, text) {
                eprintln!("error: cannot write report: {e}");
                return INPUT_ERROR;
            }
        }
        if failed {
            CHECK_FAILED
        } else {
            PASS
        }
    }
}

fn read_input(path: &Path) -> Result<(Pair, Option<Vec<String>>, String), String> {
    let bytes = std::fs::read(path).map_err(|e| format!("cannot read {}: {e}", path.display()))?;
    let digest = format!("sha256:{:x}", Sha256::digest(&bytes));
    let text = String::from_utf8(bytes).map_err(|e| format!("not utf-8: {e}"))?;
    let file = parse_file(&text).map_err(|e| e.to_string())?;
    let pair = build_pair(&file).map_err(|e| e.to_string())?;
    Ok((pair, file.cartan, digest))
}

fn split_input(path: &Path) -> Result<(SplitDatum<Q>, String), (u8, String)> {
    let (pair, cartan, digest) = read_input(path).map_err(|e| (INPUT_ERROR, e))?;
    let Some(cartan) = cartan else {
        return Err((INPUT_ERROR, "the file declares no cartan".into()));
    };
    let datum = extract_split(&pair, &cartan).map_err(|e| (CHECK_FAILED, e.to_string()))?;
    Ok((datum, digest))
}

pub fn cmd_validate(path: &Path, json: Option<&Path>) -> u8 {
    let (pair, _, digest) = match read_input(path) {
        Ok(v) => v,
        Err(e) => {
            eprintln!("error: {e}");
            return INPUT_ERROR;
        }
    };
    let mut report = RunReport::new(digest, None);
    let checks = axioms::validate_all(&pair);
    report.push_checks(&checks);
    report.finish(json)
}

pub fn cmd_split(path: &Path, json: Option<&Path>) -> u8 {
    let (datum, digest) = match split_input(path) {
        Ok(v) => v,
        Err((code, e)) => {
            eprintln!("error: {e}");
            return code;
        }
    };
    let mut report = RunReport::new(digest, None);
    println!("cartan dimension: {}", datum.cartan_dim());
    println!("roots ({}):", datum.roots.len());
    let pair = &datum.pair;
    for (rid, root) in datum.roots.iter().enumerate() {
        let members: Vec<&str> = datum.root_members[rid]
            .iter()
            .map(|&i| pair.l.basis.name(i))
            .collect();
        let grades: Vec<String> = datum.root_grades(rid).iter().map(|g| format!("{g:?}")).collect();
        println!(
            "  {} on {:?} (grades {})",
            root.render(),
            members,
            grades.join(", ")
        );
    }
    println!("weights ({}):", datum.weights.len());
    for (wid, weight) in datum.weights.iter().enumerate() {
        let members: Vec<&str> = datum.weight_members[wid]
            .iter()
            .map(|&i| pair.a.basis.name(i))
            .collect();
        println!("  {} on {:?}", weight.render(), members);
    }
    println!("dim A_0 = {}", datum.a_zero_subspace().dim());
    let mut checks = check_prop_closure(&datum);
    checks.push(check_symmetry(&datum));
    report.facts = serde_json::json!({
        "roots": datum.roots.iter().map(|r| r.render()).collect::<Vec<_>>(),
        "weights": datum.weights.iter().map(|w| w.render()).collect::<Vec<_>>(),
        "a0_dim": datum.a_zero_subspace().dim(),
    });
    report.push_checks(&checks);
    report.finish(json)
}

pub fn cmd_decompose(path: &Path, mode: Mode, only_l: bool, only_a: bool, json: Option<&Path>) -> u8 {
    let (datum, digest) = match split_input(path) {
        Ok(v) => v,
        Err((code, e)) => {
            eprintln!("error: {e}");
            return code;
        }
    };
    let mut report = RunReport::new(digest, Some(mode));
    let mut facts = serde_json::Map::new();
    if !only_a {
        match decompose_l(&datum, mode) {
            Ok((dec, ideal_checks)) => {
                println!(
                    "L: complement dim {} + {} class ideal(s) {:?} (mode {mode})",
                    dec.complement.dim(),
                    dec.ideals.len(),
                    dec.ideals.iter().map(|i| i.total.dim()).collect::<Vec<_>>()
                );
                println!("  directness: {}", dec.directness.hypothesis_note);
                println!(
                    "  pairwise intersections zero: {}; sum direct: {}",
                    dec.directness.pairwise_zero, dec.directness.sum_direct
                );
                facts.insert(
                    "l_ideal_dims".into(),
                    serde_json::json!(dec.ideals.iter().map(|i| i.total.dim()).collect::<Vec<_>>()),
                );
                facts.insert("l_complement_dim".into(), serde_json::json!(dec.complement.dim()));
                facts.insert(
                    "l_directness_asserted".into(),
                    serde_json::json!(dec.directness.asserted_and_direct()),
                );
                let mut checks = vec![dec.classes.equivalence.clone(), dec.cross.clone(), dec.accounting.clone()];
                for (i, ic) in ideal_checks.iter().enumerate() {
                    let mut summary = Check::new(format!("ideal-{i}"));
                    summary.checked = ic.bracket.checked + ic.action.checked + ic.rho_into_l.checked;
                    if !ic.is_ideal() {
                        summary.violate(vec![format!("class {i}")], "not an ideal".into(), "ideal".into());
                    }
                    for note in &ic.rho_as_printed.notes {
                        summary.note(note.clone());
                    }
                    checks.push(summary);
                }
                report.push_checks(&checks);
            }
            Err(e) => {
                eprintln!("error: {e}");
                return CHECK_FAILED;
            }
        }
    }
    if !only_l {
        match decompose_a(&datum) {
            Ok((dec, ideal_checks)) => {
                println!(
                    "A: complement dim {} + {} class ideal(s) {:?}",
                    dec.complement.dim(),
                    dec.ideals.len(),
                    dec.ideals.iter().map(|i| i.total.dim()).collect::<Vec<_>>()
                );
                println!("  directness: {}", dec.directness.hypothesis_note);
                println!(
                    "  pairwise intersections zero: {}; sum direct: {}",
                    dec.directness.pairwise_zero, dec.directness.sum_direct
                );
                facts.insert(
                    "a_ideal_dims".into(),
                    serde_json::json!(dec.ideals.iter().map(|i| i.total.dim()).collect::<Vec<_>>()),
                );
                facts.insert("a_complement_dim".into(), serde_json::json!(dec.complement.dim()));
                let mut checks = vec![dec.cross.clone(), dec.accounting.clone()];
                checks.extend(ideal_checks.iter().cloned());
                report.push_checks(&checks);
            }
            Err(e) => {
                eprintln!("error: {e}");
                return CHECK_FAILED;
            }
        }
    }
    report.facts = serde_json::Value::Object(facts);
    report.finish(json)
}

pub fn cmd_analyze(path: &Path, mode: Mode, json: Option<&Path>) -> u8 {
    let (datum, digest) = match split_input(path) {
        Ok(v) => v,
        Err((code, e)) => {
            eprintln!("error: {e}");
            return code;
        }
    };
    let mut report = RunReport::new(digest, Some(mode));
    let rad = radicals(&datum.pair);
    println!(
        "radicals: dim Ann(L) = {}, dim ker rho = {}, dim Z_rho(L) = {}, dim Z_L(A) = {}, dim Ann(A) = {}",
        rad.ann_l.dim(),
        rad.ker_rho.dim(),
        rad.z_rho.dim(),
        rad.z_l_of_a.dim(),
        rad.ann_a.dim()
    );
    let tight = check_tight(&datum);
    println!("tight: {}", tight.tight());
    for d in &tight.details {
        println!("  {d}");
    }
    let pairing_report = match pairing(&datum, mode) {
        Ok(p) => p,
        Err(e) => {
            eprintln!("error: {e}");
            return CHECK_FAILED;
        }
    };
    match &pairing_report.refused {
        Some(reason) => println!("pairing: refused — {reason}"),
        None => println!(
            "pairing: unique = {}, bijection = {}, partners = {:?}",
            pairing_report.unique, pairing_report.bijection, pairing_report.partners
        ),
    }
    let rc = root_classes(&datum, mode);
    let wc = weight_classes(&datum);
    println!("root classes ({mode}): {}", rc.classes.len());
    println!("weight classes: {}", wc.classes.len());
    let maximal = check_maximal_length(&datum);
    let multiplicative = check_root_multiplicative(&datum);
    let symmetric = check_symmetry(&datum);
    let probe = match simplicity_probe(&datum, mode) {
        Ok(p) => p,
        Err(e) => {
            eprintln!("error: {e}");
            return CHECK_FAILED;
        }
    };
    println!("pair probe: {}", probe.pair_probe.verdict);
    for (cid, _, verdict) in &probe.l_ideal_probes {
        println!("  L class ideal {cid}: {verdict}");
    }
    for (cid, _, verdict) in &probe.a_ideal_probes {
        println!("  A class ideal {cid}: {verdict}");
    }
    match probe.conclusion_pattern {
        Some(ok) => println!("simple-components pattern (hypotheses met): {ok}"),
        None => println!("simple-components pattern: hypotheses not met; not asserted"),
    }
    let witness_json = |w: &trilie::connect::ConnectionWitness<trilie::Q>| {
        serde_json::json!({
            "chain": w.chain.iter().map(|f| f.render()).collect::<Vec<_>>(),
            "partial_sums": w.partial_sums.iter().map(|f| f.render()).collect::<Vec<_>>(),
        })
    };
    let root_class_json: Vec<serde_json::Value> = rc
        .classes
        .iter()
        .map(|class| {
            serde_json::json!(class
                .iter()
                .map(|&rid| datum.roots[rid].render())
                .collect::<Vec<_>>())
        })
        .collect();
    let weight_class_json: Vec<serde_json::Value> = wc
        .classes
        .iter()
        .map(|class| {
            serde_json::json!(class
                .iter()
                .map(|&wid| datum.weights[wid].render())
                .collect::<Vec<_>>())
        })
        .collect();
    let root_witnesses: Vec<serde_json::Value> = rc
        .witnesses
        .iter()
        .map(|(i, j, w)| {
            serde_json::json!({
                "from": datum.roots[*i].render(),
                "to": datum.roots[*j].render(),
                "witness": witness_json(w),
            })
        })
        .collect();
    report.facts = serde_json::json!({
        "radicals": {
            "ann_l": rad.ann_l.dim(),
            "ker_rho": rad.ker_rho.dim(),
            "z_rho": rad.z_rho.dim(),
            "z_l_of_a": rad.z_l_of_a.dim(),
            "ann_a": rad.ann_a.dim(),
        },
        "tight": {
            "overall": tight.tight(),
            "z_rho_zero": tight.z_rho_zero,
            "ann_a_zero": tight.ann_a_zero,
            "aa_equals_a": tight.aa_equals_a,
            "al_equals_l": tight.al_equals_l,
            "h_display": tight.h_display,
            "a0_display": tight.a0_display,
        },
        "pairing": {
            "refused": pairing_report.refused,
            "partners": pairing_report.partners,
            "unique": pairing_report.unique,
            "bijection": pairing_report.bijection,
        },
        "root_classes": root_class_json,
        "weight_classes": weight_class_json,
        "root_connection_witnesses": root_witnesses,
        "pair_probe": probe.pair_probe.verdict,
    });
    report.push_checks(&[maximal, multiplicative, symmetric]);
    report.finish(json)
}

pub fn cmd_builtin(name: &str, emit: Option<&Path>) -> u8 {
    let pair = match builtins::builtin(name) {
        Ok(p) => p,
        Err(e) => {
            eprintln!("error: {e}");
            return INPUT_ERROR;
        }
    };
    let file = to_file(&pair, builtins::builtin_cartan(name));
    let text = emit_string(&file);
    match emit {
        Some(path) => {
            if let Err(e) = std::fs::write(path, text) {
                eprintln!("error: cannot write {}: {e}", path.display());
                return INPUT_ERROR;
            }
            println!("wrote {name} to {}", path.display());
        }
        None => print!("{text}"),
    }
    PASS
}
