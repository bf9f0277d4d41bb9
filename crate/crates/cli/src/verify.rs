use std::fmt::Write as _;

use exuniv::lr::{lr_coefficient, lr_expand, multi_lr_coefficient, product_set, weyl_bounds};
use exuniv::partition::{partitions_bounded, partitions_of, Partition, PartitionFamily};
use exuniv::repn::{verify_structure_with, CheckReport, VerifyOptions};
use exuniv::schur_weyl::{check_physical_basis_map, collective_noise_check, physical_basis_map};
use exuniv::tableau::dimension;
use exuniv::universality::{pair_universal, set_scan_verdict};
use rand::rngs::StdRng;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rayon::prelude::*;
use serde::Serialize;
use serde_json::json;

use crate::commands::{CliError, CmdResult, Outcome, EXIT_INTERNAL, EXIT_OK};
use crate::config::CliConfig;

const RANDOM_SAMPLES: usize = 64;
const BASIS_MAP_MAX_N: usize = 8;

#[derive(Clone, Debug)]
enum Job {
    Structure(Partition),
    LrSymmetry(usize),
    CrossValidation(usize),
    BasisMap(Partition),
    RandomProducts,
}

#[derive(Serialize)]
struct Summary<'a> {
    max_n: usize,
    seed: u64,
    tolerance: f64,
    passed: usize,
    failed: usize,
    checks: &'a [CheckReport],
}

pub fn verify(max_n: usize, cfg: &CliConfig) -> CmdResult {
    if max_n > cfg.enumeration_cap {
        return Err(CliError::Rejected(format!(
            "max-n {max_n} exceeds the enumeration cap {}",
            cfg.enumeration_cap
        )));
    }
    let mut jobs: Vec<Job> = (1..=max_n).flat_map(partitions_of).map(Job::Structure).collect();
    jobs.extend((0..=max_n).map(Job::LrSymmetry));
    jobs.extend((4..=max_n).map(Job::CrossValidation));
    jobs.extend(
        (1..=max_n.min(BASIS_MAP_MAX_N))
            .flat_map(|n| partitions_bounded(n, n, 2))
            .map(Job::BasisMap),
    );
    if max_n >= 2 {
        jobs.push(Job::RandomProducts);
    }
    let results: Vec<Result<Vec<CheckReport>, CliError>> = jobs.par_iter().map(|j| run_job(j, max_n, cfg)).collect();
    let mut reports = Vec::new();
    for r in results {
        reports.extend(r?);
    }
    reports.sort_by(|a, b| a.name.cmp(&b.name));
    let failed = reports.iter().filter(|r| !r.passed).count();
    let passed = reports.len() - failed;

    let mut text = String::new();
    for r in &reports {
        let status = if r.passed { "PASS" } else { "FAIL" };
        let _ = writeln!(
            text,
            "{status} {} (max violation {:.3e}, tolerance {:.1e}) {}",
            r.name, r.max_violation, r.tolerance, r.details
        );
    }
    let _ = writeln!(text, "{passed} passed, {failed} failed");
    let summary = Summary { max_n, seed: cfg.seed, tolerance: cfg.tolerance, passed, failed, checks: &reports };
    let json = serde_json::to_value(&summary).unwrap_or_else(|e| json!({ "error": e.to_string() }));
    let code = if failed == 0 { EXIT_OK } else { EXIT_INTERNAL };
    Ok(Outcome { text, json, code })
}

fn run_job(job: &Job, max_n: usize, cfg: &CliConfig) -> Result<Vec<CheckReport>, CliError> {
    match job {
        Job::Structure(shape) => {
            let opts = VerifyOptions { element_tol: cfg.tolerance, product_tol: 10.0 * cfg.tolerance, cap: cfg.enumeration_cap };
            let reports = verify_structure_with(shape, &opts)?;
            Ok(reports
                .into_iter()
                .map(|mut r| {
                    r.name = format!("structure {shape:<16} {}", r.name);
                    r
                })
                .collect())
        }
        Job::LrSymmetry(total) => Ok(vec![lr_symmetry(*total)?]),
        Job::CrossValidation(total) => cross_validation(*total),
        Job::BasisMap(shape) => {
            let map = physical_basis_map(shape)?;
            let mut reports = check_physical_basis_map(&map)?;
            reports.push(collective_noise_check(&map));
            Ok(reports
                .into_iter()
                .map(|mut r| {
                    r.name = format!("basis-map {shape:<16} {}", r.name);
                    r
                })
                .collect())
        }
        Job::RandomProducts => Ok(vec![random_products(max_n, cfg.seed)?]),
    }
}

/// Symmetry, Cartan and Weyl-bound checks over all pairs with `|λ| + |μ| = total`.
fn lr_symmetry(total: usize) -> Result<CheckReport, CliError> {
    let mut violations = 0usize;
    let mut first = String::new();
    let mut note = |msg: String| {
        if violations == 0 {
            first = msg;
        }
        violations += 1;
    };
    for a in 0..=total {
        for l in partitions_of(a) {
            for m in partitions_of(total - a) {
                let e = lr_expand(&l, &m)?;
                if e != lr_expand(&m, &l)? {
                    note(format!("{l}*{m} is not symmetric"));
                }
                let conj = lr_expand(&l.conjugate(), &m.conjugate())?;
                for (nu, &c) in &e {
                    if conj.get(&nu.conjugate()).copied() != Some(c) {
                        note(format!("conjugate mismatch at {l} {m} {nu}"));
                    }
                    let d = nu.rows().max(l.rows()).max(m.rows());
                    for (k, (lo, hi)) in weyl_bounds(&l, &m, d).into_iter().enumerate() {
                        let v = nu.part(k + 1);
                        if v < lo || v > hi {
                            note(format!("Weyl bound at {l} {m} {nu} row {}", k + 1));
                        }
                    }
                }
                if lr_coefficient(&l, &m, &l.partwise_sum(&m)) != 1 {
                    note(format!("Cartan coefficient of {l} {m} is not 1"));
                }
            }
        }
    }
    let details = if violations == 0 { format!("all pairs of total size {total}") } else { first };
    Ok(CheckReport::new(format!("lr-identities total={total:02}"), violations as f64, 0.0, details))
}

/// Closed-form pair decisions against product-set scans for `|λ| + |μ| = total`.
fn cross_validation(total: usize) -> Result<Vec<CheckReport>, CliError> {
    let mut out = Vec::new();
    for d in [3usize, 4] {
        let mut disagreements = 0usize;
        let mut count = 0usize;
        let mut first = String::new();
        for a in 2..=total / 2 {
            let left: Vec<Partition> = partitions_bounded(a, a, d).into_iter().filter(|p| dimension(p) > 1).collect();
            let right: Vec<Partition> =
                partitions_bounded(total - a, total - a, d).into_iter().filter(|p| dimension(p) > 1).collect();
            for l in &left {
                for m in &right {
                    if a * 2 == total && m < l {
                        continue;
                    }
                    count += 1;
                    let arith = pair_universal(l, m, d)?.is_universal();
                    let fam = PartitionFamily::new(vec![l.clone(), m.clone()], d)?;
                    let scan = set_scan_verdict(&fam, d)?.is_universal();
                    if arith != scan {
                        if disagreements == 0 {
                            first = format!("{l};{m}: arithmetic {arith}, scan {scan}");
                        }
                        disagreements += 1;
                    }
                }
            }
        }
        let details = if disagreements == 0 { format!("{count} pairs agree") } else { first };
        out.push(CheckReport::new(
            format!("cross-validation d={d} total={total:02}"),
            disagreements as f64,
            0.0,
            details,
        ));
    }
    Ok(out)
}

/// Seeded random families: Cartan coefficient and order independence of multi-LR products.
fn random_products(max_n: usize, seed: u64) -> Result<CheckReport, CliError> {
    let mut rng = StdRng::seed_from_u64(seed);
    let mut violations = 0usize;
    let mut first = String::new();
    let budget = max_n.min(9);
    for _ in 0..RANDOM_SAMPLES {
        let k = rng.gen_range(2..=3usize);
        let mut members = Vec::new();
        for _ in 0..k {
            let size = rng.gen_range(1..=(budget / k).max(1));
            let choices = partitions_of(size);
            members.push(choices.choose(&mut rng).cloned().unwrap_or_default());
        }
        let fam = PartitionFamily::with_default_d(members.clone());
        let total = fam.total_size();
        let cartan = members.iter().fold(Partition::empty(), |acc, m| acc.partwise_sum(m));
        if multi_lr_coefficient(&fam, &cartan) != 1 {
            violations += 1;
            first = format!("Cartan coefficient of {fam} is not 1");
        }
        let mut shuffled = members.clone();
        shuffled.shuffle(&mut rng);
        let fam2 = PartitionFamily::with_default_d(shuffled);
        let ps = product_set(&fam, total.max(1))?;
        for nu in &ps.members {
            if multi_lr_coefficient(&fam2, nu) != ps.coefficient(nu) {
                violations += 1;
                first = format!("order dependence for {fam} at {nu}");
            }
        }
    }
    let details = if violations == 0 { format!("{RANDOM_SAMPLES} random families, seed {seed}") } else { first };
    Ok(CheckReport::new("random-products", violations as f64, 0.0, details))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_suite_passes() {
        let out = verify(5, &CliConfig::default()).unwrap();
        assert_eq!(out.code, EXIT_OK, "{}", out.text);
        assert_eq!(out.json["failed"], 0);
    }

    #[test]
    fn vacuous_suite_passes() {
        assert_eq!(verify(1, &CliConfig::default()).unwrap().code, EXIT_OK);
    }

    #[test]
    fn tight_tolerance_fails() {
        let cfg = CliConfig { tolerance: 1e-20, ..CliConfig::default() };
        let out = verify(4, &cfg).unwrap();
        assert_eq!(out.code, EXIT_INTERNAL);
        assert!(out.json["failed"].as_u64().unwrap() > 0);
    }

    #[test]
    fn output_is_sorted_and_seeded() {
        let a = verify(4, &CliConfig::default()).unwrap();
        let b = verify(4, &CliConfig::default()).unwrap();
        assert_eq!(a.text, b.text);
        let names: Vec<&str> = a.json["checks"].as_array().unwrap().iter().map(|c| c["name"].as_str().unwrap()).collect();
        let mut sorted = names.clone();
        sorted.sort();
        assert_eq!(names, sorted);
    }

    #[test]
    fn over_cap_is_rejected() {
        let cfg = CliConfig { enumeration_cap: 4, ..CliConfig::default() };
        assert!(verify(5, &cfg).is_err());
    }
}
