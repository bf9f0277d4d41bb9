use std::fmt::Write as _;

use exuniv::lr::{lr_coefficient, lr_expand_bounded, product_set_capped};
use exuniv::partition::{parse_family_members, parse_partition, Partition, PartitionFamily};
use exuniv::repn::{alternating_intertwiner, Permutation, RepMatrix, YoungBasis};
use exuniv::schur_weyl::{efficiency_table, physical_basis_map};
use exuniv::tableau::{dimension, weyl_dimension};
use exuniv::universality::{
    ancilla_suggestion, cartan_target, family_universal, minimal_universal_families_with_budget,
    UniversalityVerdict,
};
use exuniv::Error;
use serde_json::{json, Value};

use crate::config::CliConfig;

pub const EXIT_OK: i32 = 0;
pub const EXIT_INTERNAL: i32 = 1;
pub const EXIT_REJECTED: i32 = 2;
pub const EXIT_NOT_UNIVERSAL: i32 = 3;

/// What a subcommand prints and how the process exits.
#[derive(Debug)]
pub struct Outcome {
    pub text: String,
    pub json: Value,
    pub code: i32,
}

impl Outcome {
    pub fn ok(text: String, json: Value) -> Self {
        Outcome { text, json, code: EXIT_OK }
    }
}

#[derive(Debug)]
pub enum CliError {
    Rejected(String),
    Internal(String),
}

impl CliError {
    pub fn code(&self) -> i32 {
        match self {
            CliError::Rejected(_) => EXIT_REJECTED,
            CliError::Internal(_) => EXIT_INTERNAL,
        }
    }

    pub fn message(&self) -> &str {
        match self {
            CliError::Rejected(m) | CliError::Internal(m) => m,
        }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        match e {
            Error::BudgetExceeded(_) | Error::Degenerate { .. } => CliError::Internal(e.to_string()),
            other => CliError::Rejected(other.to_string()),
        }
    }
}

pub type CmdResult = Result<Outcome, CliError>;

pub fn partition_arg(text: &str) -> Result<Partition, CliError> {
    Ok(parse_partition(text)?)
}

/// Parses a family and picks `d`, defaulting to the largest member row count.
pub fn family_arg(text: &str, d: Option<usize>) -> Result<PartitionFamily, CliError> {
    let members = parse_family_members(text)?;
    let d = d.unwrap_or_else(|| members.iter().map(Partition::rows).max().unwrap_or(0));
    Ok(PartitionFamily::new(members, d)?)
}

fn family_strings(f: &PartitionFamily) -> Vec<String> {
    f.members().iter().map(ToString::to_string).collect()
}

pub fn dim(p: &Partition) -> CmdResult {
    let d = dimension(p);
    Ok(Outcome::ok(format!("{d}\n"), json!({ "partition": p, "dimension": d })))
}

pub fn conj(p: &Partition) -> CmdResult {
    let c = p.conjugate();
    Ok(Outcome::ok(format!("{c}\n"), json!({ "partition": p, "conjugate": c })))
}

pub fn classify(p: &Partition) -> CmdResult {
    let c = p.classify();
    let kind = serde_json::to_value(c.kind).map_err(internal)?;
    let text = format!(
        "kind: {}\nself-conjugate: {}\nrows: {}\ncols: {}\ndiagonal length: {}\n",
        kind.as_str().unwrap_or_default(),
        c.self_conjugate,
        c.rows,
        c.cols,
        c.diagonal_length
    );
    Ok(Outcome::ok(text, json!({ "partition": p, "class": c })))
}

pub fn lr(lambda: &Partition, mu: &Partition, nu: Option<&Partition>, cfg: &CliConfig) -> CmdResult {
    let total = lambda.size() + mu.size();
    if total > cfg.lr_cap {
        return Err(Error::SizeLimit { size: total, cap: cfg.lr_cap }.into());
    }
    if let Some(nu) = nu {
        let c = lr_coefficient(lambda, mu, nu);
        return Ok(Outcome::ok(
            format!("{c}\n"),
            json!({ "lambda": lambda, "mu": mu, "nu": nu, "coefficient": c }),
        ));
    }
    let e = lr_expand_bounded(lambda, mu, total, cfg.lr_cap)?;
    let mut text = String::new();
    let mut terms = Vec::new();
    for (nu, c) in &e {
        let _ = writeln!(text, "{nu} {c}");
        terms.push(json!({ "nu": nu, "coefficient": c }));
    }
    Ok(Outcome::ok(text, json!({ "lambda": lambda, "mu": mu, "terms": terms })))
}

pub fn product_set_cmd(family: &PartitionFamily, cfg: &CliConfig) -> CmdResult {
    let d = family.d();
    let ps = product_set_capped(family, d, cfg.lr_cap)?;
    let hooks = ps.hooks();
    let conj = ps.conjugate_witnesses();
    let mut text = String::new();
    for e in &ps.coefficients {
        let _ = writeln!(text, "{} {}", e.nu, e.coefficient);
    }
    let _ = writeln!(text, "hooks: {}", join(&hooks));
    let _ = writeln!(text, "self-conjugate or conjugate present: {}", join(&conj));
    Ok(Outcome::ok(
        text,
        json!({
            "family": family_strings(family),
            "d": d,
            "entries": ps.coefficients,
            "hooks": hooks,
            "conjugate_witnesses": conj,
        }),
    ))
}

fn join(ps: &[Partition]) -> String {
    if ps.is_empty() {
        return "none".into();
    }
    ps.iter().map(ToString::to_string).collect::<Vec<_>>().join(" ")
}

fn verdict_text(v: &UniversalityVerdict) -> String {
    let mut text = String::new();
    let label = if v.is_universal() { "universal" } else { "not universal" };
    let _ = writeln!(text, "{label} (d = {})", v.d);
    for step in &v.rule_trace {
        let _ = writeln!(text, "  {}: {}", step.rule, step.reason);
    }
    if let Some(w) = &v.witness_partitions {
        let _ = writeln!(text, "  witnesses: {}", join(w));
    }
    text
}

fn verdict_json(family: &PartitionFamily, v: &UniversalityVerdict) -> Result<Value, CliError> {
    let mut j = serde_json::to_value(v).map_err(internal)?;
    if let Value::Object(map) = &mut j {
        map.insert("family".into(), json!(family_strings(family)));
        map.insert("universal".into(), json!(v.is_universal()));
        map.insert("deciding_rule".into(), json!(v.deciding_rule()));
        let reasons: Vec<&str> = v.rule_trace.iter().map(|s| s.reason.as_str()).collect();
        map.insert("reason".into(), json!(reasons.join("; ")));
    }
    Ok(j)
}

pub fn universal(family: &PartitionFamily) -> CmdResult {
    let v = family_universal(family, family.d())?;
    let code = if v.is_universal() { EXIT_OK } else { EXIT_NOT_UNIVERSAL };
    Ok(Outcome { text: verdict_text(&v), json: verdict_json(family, &v)?, code })
}

pub fn minimal_families(d: usize, cfg: &CliConfig) -> CmdResult {
    let set = minimal_universal_families_with_budget(d, cfg.time_budget())?;
    let lines: Vec<String> = set.families.iter().map(ToString::to_string).collect();
    let mut text = lines.join("\n");
    if !text.is_empty() {
        text.push('\n');
    }
    Ok(Outcome::ok(text, json!({ "d": d, "count": lines.len(), "families": lines })))
}

pub fn efficiency(n_max: usize, ds: &[usize]) -> CmdResult {
    if n_max > 40 {
        return Err(CliError::Rejected(format!("n-max {n_max} exceeds 40")));
    }
    if let Some(&bad) = ds.iter().find(|&&d| d < 2) {
        return Err(CliError::Rejected(format!("d = {bad} must be at least 2")));
    }
    let rows = efficiency_table(3..=n_max, ds);
    let mut text = String::from("n\td\tpartition\tD\tE\n");
    for r in &rows {
        let _ = writeln!(text, "{}\t{}\t{}\t{}\t{:.2}", r.n, r.d, r.best_partition, r.dim, r.efficiency);
    }
    Ok(Outcome::ok(text, json!({ "rows": rows })))
}

pub struct RepnRequest<'a> {
    pub perm: Option<&'a str>,
    pub jm: Option<usize>,
    pub intertwiner: bool,
}

pub fn repn(p: &Partition, req: &RepnRequest<'_>, cfg: &CliConfig) -> CmdResult {
    let n = p.size();
    if n > cfg.enumeration_cap {
        return Err(Error::SizeLimit { size: n, cap: cfg.enumeration_cap }.into());
    }
    let basis = YoungBasis::with_cap(p, cfg.enumeration_cap)?;
    let mut named: Vec<(String, RepMatrix)> = Vec::new();
    if let Some(cycles) = req.perm {
        let s = Permutation::from_cycles(n, cycles)?;
        named.push((format!("rho({s})"), RepMatrix::square(&basis, basis.permutation(&s))));
    }
    if let Some(k) = req.jm {
        if k == 0 || k > n {
            return Err(Error::IndexOutOfRange { index: k, max: n }.into());
        }
        named.push((format!("X_{k}"), RepMatrix::square(&basis, basis.jucys_murphy(k))));
    }
    if req.intertwiner {
        named.push(("M".into(), alternating_intertwiner(p)?));
    }
    if req.perm.is_none() && req.jm.is_none() && !req.intertwiner {
        for i in 1..n {
            named.push((format!("rho(s_{i})"), RepMatrix::square(&basis, basis.adjacent(i))));
        }
    }
    let mut text = String::new();
    let _ = writeln!(text, "basis:");
    for (i, t) in basis.tableaux().iter().enumerate() {
        let _ = writeln!(text, "  T{i} = {t}");
    }
    let mut mats = Vec::new();
    for (name, m) in &named {
        let _ = writeln!(text, "{name}:");
        text.push_str(&m.render(cfg.precision));
        mats.push(json!({ "name": name, "matrix": m }));
    }
    Ok(Outcome::ok(text, json!({ "shape": p, "basis": basis.tableaux(), "matrices": mats })))
}

pub fn basis_map(p: &Partition, cfg: &CliConfig) -> CmdResult {
    let map = physical_basis_map(p)?;
    let views = map.views();
    let mut text = String::new();
    let prec = cfg.precision;
    for v in &views {
        let terms: Vec<String> = v.terms.iter().map(|t| format!("{:+.prec$}|{}>", t.coefficient, t.ket)).collect();
        let _ = writeln!(text, "{} m={:+} -> {}", v.tableau, v.m, terms.join(" "));
    }
    Ok(Outcome::ok(
        text,
        json!({ "shape": p, "n": map.n, "weyl_dimension": weyl_dimension(p, 2), "vectors": views }),
    ))
}

pub fn ancilla(family: &PartitionFamily) -> CmdResult {
    let a = ancilla_suggestion(family, family.d())?;
    let text = format!("{}\n  reason: {}\n{}", a.ancilla, a.reason, verdict_text(&a.verdict));
    Ok(Outcome::ok(
        text,
        json!({ "family": family_strings(family), "d": family.d(), "ancilla": a.ancilla, "reason": a.reason, "verdict": a.verdict }),
    ))
}

pub fn cartan(family: &PartitionFamily) -> CmdResult {
    let (nu, v) = cartan_target(family)?;
    let text = format!("{nu}\n{}", verdict_text(&v));
    Ok(Outcome::ok(
        text,
        json!({ "family": family_strings(family), "target": nu, "verdict": v }),
    ))
}

pub fn internal<E: std::fmt::Display>(e: E) -> CliError {
    CliError::Internal(e.to_string())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    #[test]
    fn dim_and_lr_examples() {
        assert_eq!(dim(&p("[4,3]")).unwrap().text, "14\n");
        let cfg = CliConfig::default();
        let out = lr(&p("[2,1]"), &p("[2,1]"), Some(&p("[4,1,1]")), &cfg).unwrap();
        assert_eq!(out.text, "1\n");
    }

    #[test]
    fn universal_reports_conjugates() {
        let f = family_arg("[2,1];[2,1]", Some(3)).unwrap();
        let out = universal(&f).unwrap();
        assert_eq!(out.code, EXIT_NOT_UNIVERSAL);
        assert!(out.json["rule_trace"].is_array());
        let reason = out.json["reason"].as_str().unwrap();
        assert!(reason.contains("self-conjugate") && reason.contains("conjugates"), "{reason}");
    }

    #[test]
    fn default_d_is_max_rows() {
        let f = family_arg("[2,1];[2,1,1]", None).unwrap();
        assert_eq!(f.d(), 3);
    }

    #[test]
    fn json_partitions_round_trip() {
        let f = family_arg("[3,2,1];[2,2]", Some(3)).unwrap();
        let out = product_set_cmd(&f, &CliConfig::default()).unwrap();
        for e in out.json["entries"].as_array().unwrap() {
            let nu: Partition = serde_json::from_value(e["nu"].clone()).unwrap();
            assert_eq!(serde_json::to_value(&nu).unwrap(), e["nu"]);
            assert_eq!(parse_partition(&nu.to_string()).unwrap(), nu);
        }
        let fj = serde_json::to_string(&f).unwrap();
        let back: PartitionFamily = serde_json::from_str(&fj).unwrap();
        assert_eq!(back, f);
        let names: Vec<String> = out.json["family"].as_array().unwrap().iter().map(|v| v.as_str().unwrap().to_string()).collect();
        assert_eq!(family_arg(&names.join(";"), Some(3)).unwrap(), f);
    }

    #[test]
    fn rejections_map_to_exit_two() {
        assert_eq!(partition_arg("[1,2]").unwrap_err().code(), EXIT_REJECTED);
        assert_eq!(family_arg("[2,1]", Some(1)).unwrap_err().code(), EXIT_REJECTED);
        let f = family_arg("[2,1]", Some(2)).unwrap();
        assert_eq!(cartan(&f).unwrap_err().code(), EXIT_REJECTED);
        let mut cfg = CliConfig::default();
        cfg.enumeration_cap = 4;
        let req = RepnRequest { perm: None, jm: None, intertwiner: false };
        assert_eq!(repn(&p("[3,2]"), &req, &cfg).unwrap_err().code(), EXIT_REJECTED);
    }

    #[test]
    fn repn_prints_intertwiner() {
        let req = RepnRequest { perm: Some("(1 2)"), jm: Some(3), intertwiner: true };
        let out = repn(&p("[2,1]"), &req, &CliConfig::default()).unwrap();
        let mats = out.json["matrices"].as_array().unwrap();
        assert_eq!(mats.len(), 3);
        assert_eq!(mats[2]["matrix"]["entries"], json!([[0.0, 1.0], [-1.0, 0.0]]));
    }
}
