//! Decision procedures for exchange-only universality of partition families,
//! enumeration of minimal universal families, and ancilla and Cartan-target
//! suggestions.
//!
//! Each verdict carries a rule trace naming the criterion that decided it.
//! Rule ids:
//!
//! - `single-partition`: a lone partition is universal unless it is a deep hook
//!   or a proper self-conjugate partition other than `[2,2]`.
//! - `two-rows`: every family is universal when `d ≤ 2`.
//! - `two-partition-arithmetic`: closed-form test for pairs, combining
//!   `hook-rule` with `no-conjugates`.
//! - `no-conjugates`: for self-conjugate `λ`, `μ`, the product set avoids
//!   conjugates exactly when `max_{i+j=d+1}(λ_i + μ_j) > d`.
//! - `hook-rule`: the product set contains a hook exactly when every member is a
//!   hook and `Σ μ′_1 < N + d`; a hook in the product set blocks universality.
//! - `non-self-conjugate-family`: without hooks, a family that is not
//!   member-wise self-conjugate is universal.
//! - `large-size`: without hooks, a family with more than `d²` cells is universal.
//! - `product-set-scan`: the product set is scanned for hooks and for
//!   partitions whose conjugate is also present.
//! - `small-dimension`: a product of dimension at most 2 is always universal.

use std::collections::{BTreeSet, HashMap};
use std::time::{Duration, Instant};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::lr::{product_set, weyl_corner};
use crate::partition::{canonical_order, partitions_bounded, Partition, PartitionFamily};
use crate::repn::CheckReport;
use crate::tableau::dimension;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Decision {
    Universal,
    NotUniversal,
}

/// One step of a decision.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RuleStep {
    pub rule: String,
    pub reason: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct UniversalityVerdict {
    pub decision: Decision,
    pub d: usize,
    pub rule_trace: Vec<RuleStep>,
    /// Partitions of the product set that blocked universality, when a scan decided.
    pub witness_partitions: Option<Vec<Partition>>,
}

impl UniversalityVerdict {
    pub fn is_universal(&self) -> bool {
        self.decision == Decision::Universal
    }

    /// Id of the rule that decided the verdict.
    pub fn deciding_rule(&self) -> &str {
        &self.rule_trace.last().expect("trace is never empty").rule
    }
}

struct Trace {
    d: usize,
    steps: Vec<RuleStep>,
}

impl Trace {
    fn new(d: usize) -> Self {
        Trace { d, steps: Vec::new() }
    }

    fn note(&mut self, rule: &str, reason: impl Into<String>) {
        self.steps.push(RuleStep { rule: rule.into(), reason: reason.into() });
    }

    fn finish(mut self, rule: &str, reason: impl Into<String>, decision: Decision, witnesses: Option<Vec<Partition>>) -> UniversalityVerdict {
        self.note(rule, reason);
        UniversalityVerdict { decision, d: self.d, rule_trace: self.steps, witness_partitions: witnesses }
    }
}

fn decision(universal: bool) -> Decision {
    if universal {
        Decision::Universal
    } else {
        Decision::NotUniversal
    }
}

/// Whether a single partition is universal on its own irreducible.
pub fn single_universal(mu: &Partition) -> UniversalityVerdict {
    let class = mu.classify();
    let d = mu.rows();
    let trace = Trace::new(d);
    let (universal, reason) = if class.kind.is_trivial() {
        (true, format!("{mu} is trivial"))
    } else if class.kind.is_hook() {
        match class.kind {
            crate::partition::PartitionKind::ShallowHook => (true, format!("{mu} is a shallow hook")),
            _ => (false, format!("{mu} is a deep hook")),
        }
    } else if *mu == Partition::from_unsorted(vec![2, 2]) {
        (true, "[2,2] is universal".to_string())
    } else if class.self_conjugate {
        (false, format!("{mu} is proper and self-conjugate"))
    } else {
        (true, format!("{mu} is proper and not self-conjugate"))
    };
    trace.finish("single-partition", reason, decision(universal), None)
}

fn check_rows(members: &[Partition], d: usize) -> Result<()> {
    if let Some(p) = members.iter().find(|p| p.rows() > d) {
        return Err(Error::RowBound { partition: p.to_string(), rows: p.rows(), d });
    }
    Ok(())
}

fn check_nontrivial(members: &[Partition]) -> Result<()> {
    if let Some(p) = members.iter().find(|p| dimension(p) <= 1) {
        return Err(Error::TrivialPartition(p.to_string()));
    }
    Ok(())
}

/// Closed-form decision for a pair of nontrivial partitions.
pub fn pair_universal(lambda: &Partition, mu: &Partition, d: usize) -> Result<UniversalityVerdict> {
    let members = [lambda.clone(), mu.clone()];
    check_nontrivial(&members)?;
    check_rows(&members, d)?;
    let mut trace = Trace::new(d);
    if d <= 2 {
        return Ok(trace.finish("two-rows", format!("d = {d} ≤ 2"), Decision::Universal, None));
    }
    let mut ok = true;
    if lambda.part(2).max(mu.part(2)) == 1 {
        let rows = lambda.rows() + mu.rows();
        if rows <= d + 1 {
            ok = false;
            trace.note(
                "hook-rule",
                format!("both members are hooks and λ′_1 + μ′_1 = {rows} ≤ d + 1 = {}: the product set contains a hook", d + 1),
            );
        } else {
            trace.note("hook-rule", format!("both members are hooks but λ′_1 + μ′_1 = {rows} > d + 1: no hooks"));
        }
    } else {
        trace.note("hook-rule", "a proper member excludes hooks");
    }
    if lambda.is_self_conjugate() && mu.is_self_conjugate() {
        let corner = weyl_corner(lambda, mu, d);
        if corner > d {
            trace.note(
                "no-conjugates",
                format!("self-conjugate pair; max over i+j = d+1 of λ_i + μ_j is {corner} > d = {d}: no conjugates"),
            );
        } else {
            ok = false;
            trace.note(
                "no-conjugates",
                format!(
                    "self-conjugate pair; max over i+j = d+1 of λ_i + μ_j is {corner} ≤ d = {d}: the product set contains conjugates"
                ),
            );
        }
    } else {
        trace.note("no-conjugates", "the pair is not member-wise self-conjugate");
    }
    let reason = if ok { "both conditions hold" } else { "a condition fails" };
    Ok(trace.finish("two-partition-arithmetic", reason, decision(ok), None))
}

/// Whether every member of a family is a hook and the product set contains a hook.
pub fn has_hooks_arithmetic(members: &[Partition], d: usize) -> bool {
    let all_hooks = members.iter().all(|m| m.part(2) == 1);
    let rows: usize = members.iter().map(Partition::rows).sum();
    all_hooks && rows < members.len() + d
}

/// Decides universality by scanning the product set directly.
///
/// A family fails when the product set contains a hook, or, for a member-wise
/// self-conjugate family, a partition whose conjugate is also present.
pub fn set_scan_verdict(family: &PartitionFamily, d: usize) -> Result<UniversalityVerdict> {
    let ps = product_set(family, d)?;
    let mut trace = Trace::new(d);
    let mut witnesses = ps.hooks();
    trace.note(
        "product-set-scan",
        format!("product set of {} partitions contains {} hook(s)", ps.members.len(), witnesses.len()),
    );
    if family.all_members_self_conjugate() {
        let conj = ps.conjugate_witnesses();
        trace.note(
            "product-set-scan",
            format!(
                "self-conjugate family; {} partition(s) of the product set are self-conjugate or have their conjugate present",
                conj.len()
            ),
        );
        witnesses.extend(conj);
    } else {
        trace.note("product-set-scan", "family is not member-wise self-conjugate; conjugates allowed");
    }
    witnesses.sort();
    witnesses.dedup();
    if witnesses.is_empty() {
        Ok(trace.finish("product-set-scan", "no blocking partitions", Decision::Universal, None))
    } else {
        let list: Vec<String> = witnesses.iter().map(|w| w.to_string()).collect();
        Ok(trace.finish(
            "product-set-scan",
            format!("blocked by {}", list.join(", ")),
            Decision::NotUniversal,
            Some(witnesses),
        ))
    }
}

/// Full decision pipeline for a family at row bound `d`.
pub fn family_universal(family: &PartitionFamily, d: usize) -> Result<UniversalityVerdict> {
    let members = family.members();
    if members.is_empty() {
        return Err(Error::EmptyFamily);
    }
    check_rows(members, d)?;
    if members.len() == 1 {
        let mut v = single_universal(&members[0]);
        v.d = d;
        return Ok(v);
    }
    check_nontrivial(members)?;
    let mut trace = Trace::new(d);
    if d <= 2 {
        return Ok(trace.finish("two-rows", format!("d = {d} ≤ 2"), Decision::Universal, None));
    }
    trace.note("two-rows", format!("d = {d} > 2"));
    if members.len() == 2 {
        let mut v = pair_universal(&members[0], &members[1], d)?;
        trace.steps.append(&mut v.rule_trace);
        v.rule_trace = trace.steps;
        return Ok(v);
    }
    let product_dim: u128 = members.iter().map(dimension).product();
    if product_dim <= 2 {
        return Ok(trace.finish(
            "small-dimension",
            format!("product dimension {product_dim} ≤ 2"),
            Decision::Universal,
            None,
        ));
    }
    let n = members.len();
    if has_hooks_arithmetic(members, d) {
        let rows: usize = members.iter().map(Partition::rows).sum();
        return Ok(trace.finish(
            "hook-rule",
            format!("all members are hooks and Σ μ′_1 = {rows} < N + d = {}", n + d),
            Decision::NotUniversal,
            None,
        ));
    }
    trace.note("hook-rule", "product set has no hooks");
    if !family.all_members_self_conjugate() {
        return Ok(trace.finish(
            "non-self-conjugate-family",
            "some member differs from its conjugate",
            Decision::Universal,
            None,
        ));
    }
    trace.note("non-self-conjugate-family", "every member is self-conjugate");
    let total = family.total_size();
    if total > d * d {
        return Ok(trace.finish(
            "large-size",
            format!("Σ|μ| = {total} > d² = {}", d * d),
            Decision::Universal,
            None,
        ));
    }
    trace.note("large-size", format!("Σ|μ| = {total} ≤ d² = {}", d * d));
    let mut v = set_scan_verdict(family, d)?;
    trace.steps.append(&mut v.rule_trace);
    v.rule_trace = trace.steps;
    Ok(v)
}

/// The minimal universal families of multiple nontrivial self-conjugate partitions.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MinimalFamilySet {
    pub d: usize,
    pub families: Vec<PartitionFamily>,
}

/// Nontrivial self-conjugate partitions with at most `d` rows, in canonical order.
pub fn self_conjugate_candidates(d: usize) -> Vec<Partition> {
    let mut out: Vec<Partition> = (0..=d * d)
        .flat_map(|n| partitions_bounded(n, d, d))
        .filter(|p| p.is_self_conjugate() && dimension(p) > 1)
        .collect();
    out.sort_by(canonical_order);
    out
}

/// Multiset containment for families given as sorted index lists.
fn contains_multiset(big: &[usize], small: &[usize]) -> bool {
    let mut i = 0;
    for &x in small {
        while i < big.len() && big[i] < x {
            i += 1;
        }
        if i == big.len() || big[i] != x {
            return false;
        }
        i += 1;
    }
    true
}

/// Enumerates the minimal universal families for `d` with the default budget.
pub fn minimal_universal_families(d: usize) -> Result<MinimalFamilySet> {
    minimal_universal_families_with_budget(d, Duration::from_secs(300))
}

/// Searches multisets of candidates level by level.
///
/// A multiset of size `N` is minimal when it is universal and contains no
/// smaller minimal family; only multisets all of whose `(N−1)`-submultisets are
/// non-universal need to be examined. The search stops at the first level with
/// no non-universal multisets.
pub fn minimal_universal_families_with_budget(d: usize, budget: Duration) -> Result<MinimalFamilySet> {
    let start = Instant::now();
    let cands = self_conjugate_candidates(d);
    let m = cands.len();
    let mut found: Vec<Vec<usize>> = Vec::new();
    let mut frontier: Vec<Vec<usize>> = (0..m).map(|i| vec![i]).collect();
    while !frontier.is_empty() {
        let frontier_set: BTreeSet<&Vec<usize>> = frontier.iter().collect();
        let mut candidates: Vec<Vec<usize>> = Vec::new();
        for f in &frontier {
            let last = *f.last().expect("nonempty");
            for next in last..m {
                let mut g = f.clone();
                g.push(next);
                // Every (level−1)-submultiset must be in the non-universal frontier.
                let all_sub = (0..g.len()).all(|skip| {
                    let sub: Vec<usize> = g.iter().enumerate().filter(|&(i, _)| i != skip).map(|(_, &x)| x).collect();
                    frontier_set.contains(&sub)
                });
                if all_sub && !found.iter().any(|h| contains_multiset(&g, h)) {
                    candidates.push(g);
                }
            }
        }
        candidates.sort();
        candidates.dedup();
        if start.elapsed() > budget {
            return Err(Error::BudgetExceeded(budget.as_millis() as u64));
        }
        let verdicts: Vec<Result<bool>> = candidates
            .par_iter()
            .map(|g| {
                let fam = PartitionFamily::new(g.iter().map(|&i| cands[i].clone()).collect(), d)?;
                Ok(family_universal(&fam, d)?.is_universal())
            })
            .collect();
        let mut next_frontier = Vec::new();
        for (g, v) in candidates.into_iter().zip(verdicts) {
            if v? {
                found.push(g);
            } else {
                next_frontier.push(g);
            }
        }
        frontier = next_frontier;
        if start.elapsed() > budget {
            return Err(Error::BudgetExceeded(budget.as_millis() as u64));
        }
    }
    let mut families: Vec<PartitionFamily> = found
        .into_iter()
        .map(|g| PartitionFamily::new(g.into_iter().map(|i| cands[i].clone()).collect(), d).map(|f| f.canonical()))
        .collect::<Result<_>>()?;
    families.sort_by(family_order);
    Ok(MinimalFamilySet { d, families })
}

/// Families ordered by member count, then member-wise in canonical order.
pub fn family_order(a: &PartitionFamily, b: &PartitionFamily) -> std::cmp::Ordering {
    let (x, y) = (a.sorted_members(), b.sorted_members());
    x.len().cmp(&y.len()).then_with(|| {
        x.iter()
            .zip(&y)
            .map(|(p, q)| canonical_order(p, q))
            .find(|o| o.is_ne())
            .unwrap_or(std::cmp::Ordering::Equal)
    })
}

/// A partition to append to a family so that it becomes universal.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AncillaSuggestion {
    pub ancilla: Partition,
    pub reason: String,
    /// Verdict on the extended family.
    pub verdict: UniversalityVerdict,
}

/// Suggests the smallest ancilla among `[2]`, `[2,2]` and `[3,2]`.
///
/// `[2]` is offered when the family has a proper member: the product set then has
/// no hooks, and the trivial row makes the family non-self-conjugate. The engine
/// rejects trivial members, so this case is argued by rule rather than rerun.
/// Otherwise `[2,2]` and then `[3,2]` are tried and confirmed by the engine.
pub fn ancilla_suggestion(family: &PartitionFamily, d: usize) -> Result<AncillaSuggestion> {
    let members = family.members();
    if members.is_empty() {
        return Err(Error::EmptyFamily);
    }
    check_rows(members, d)?;
    check_nontrivial(members)?;
    if members.iter().any(Partition::is_proper) {
        let ancilla = Partition::row(2);
        let mut trace = Trace::new(d);
        trace.note("hook-rule", "a proper member excludes hooks from the product set");
        let verdict = trace.finish(
            "non-self-conjugate-family",
            "the ancilla [2] is not self-conjugate, so the extended family is not self-conjugate",
            Decision::Universal,
            None,
        );
        return Ok(AncillaSuggestion {
            ancilla,
            reason: "family has a proper member; a trivial row breaks self-conjugacy".into(),
            verdict,
        });
    }
    for (parts, reason) in [
        (vec![2, 2], "all members are hooks; [2,2] excludes hooks from the product set"),
        (vec![3, 2], "[3,2] is proper and not self-conjugate"),
    ] {
        let ancilla = Partition::from_unsorted(parts);
        let extended = PartitionFamily::new(members.iter().cloned().chain([ancilla.clone()]).collect(), d)?;
        let verdict = family_universal(&extended, d)?;
        if verdict.is_universal() {
            return Ok(AncillaSuggestion { ancilla, reason: reason.into(), verdict });
        }
    }
    Err(Error::HypothesisViolated(format!("no ancilla made {family} universal at d = {d}")))
}

/// The part-wise sum of the members, and the verdict on it alone.
pub fn cartan_target(family: &PartitionFamily) -> Result<(Partition, UniversalityVerdict)> {
    let members = family.members();
    if members.len() < 2 {
        return Err(Error::SingleMember);
    }
    check_nontrivial(members)?;
    let nu = members.iter().fold(Partition::empty(), |acc, m| acc.partwise_sum(m));
    let proper = nu.is_proper();
    let non_sc = !nu.is_self_conjugate() || !family.all_members_self_conjugate();
    let single = single_universal(&nu);
    let mut trace = Trace::new(family.d().max(nu.rows()));
    trace.note("single-partition", single.rule_trace[0].reason.clone());
    let ok = proper && non_sc && single.is_universal();
    let verdict = trace.finish(
        "cartan-target",
        format!(
            "highest-weight component {nu} of the product: proper = {proper}, not self-conjugate = {}",
            !nu.is_self_conjugate()
        ),
        decision(ok),
        None,
    );
    Ok((nu, verdict))
}

/// Checks that a universal subfamily with at least two members forces the family
/// to be universal.
pub fn upward_closed_check(family: &PartitionFamily, d: usize) -> Result<CheckReport> {
    let mut memo = HashMap::new();
    upward_closed_check_memo(family, d, &mut memo)
}

/// As [`upward_closed_check`], sharing verdicts across calls.
pub fn upward_closed_check_memo(family: &PartitionFamily, d: usize, memo: &mut HashMap<Vec<Partition>, bool>) -> Result<CheckReport> {
    let members = family.sorted_members();
    let n = members.len();
    let eval = |ms: Vec<Partition>, memo: &mut HashMap<Vec<Partition>, bool>| -> Result<bool> {
        if let Some(&v) = memo.get(&ms) {
            return Ok(v);
        }
        let v = family_universal(&PartitionFamily::new(ms.clone(), d)?, d)?.is_universal();
        memo.insert(ms, v);
        Ok(v)
    };
    let whole = eval(members.clone(), memo)?;
    let mut universal_subs = Vec::new();
    if n > 2 {
        let mut seen = BTreeSet::new();
        for mask in 1u64..(1u64 << n) - 1 {
            if mask.count_ones() < 2 {
                continue;
            }
            let sub: Vec<Partition> = (0..n).filter(|i| mask >> i & 1 == 1).map(|i| members[i].clone()).collect();
            if !seen.insert(sub.clone()) {
                continue;
            }
            if eval(sub.clone(), memo)? {
                universal_subs.push(sub);
            }
        }
    }
    let violated = !whole && !universal_subs.is_empty();
    let details = if violated {
        let s: Vec<String> = universal_subs[0].iter().map(|p| p.to_string()).collect();
        format!("{family} is not universal but its subfamily {} is", s.join(";"))
    } else {
        format!(
            "{family}: universal = {whole}, universal subfamilies = {}",
            universal_subs.len()
        )
    };
    Ok(CheckReport::new("upward-closure", f64::from(u8::from(violated)), 0.0, details))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partition::parse_family_members;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    fn fam(s: &str, d: usize) -> PartitionFamily {
        PartitionFamily::new(parse_family_members(s).unwrap(), d).unwrap()
    }

    #[test]
    fn single_partitions() {
        assert!(single_universal(&p("[4,2,1]")).is_universal());
        assert!(!single_universal(&p("[3,1,1]")).is_universal());
        assert!(single_universal(&p("[2,2]")).is_universal());
        assert!(!single_universal(&p("[3,2,1]")).is_universal());
        assert!(!single_universal(&p("[4,1,1]")).is_universal());
        assert!(single_universal(&p("[2,1]")).is_universal());
        assert!(single_universal(&p("[5]")).is_universal());
        assert!(single_universal(&p("[3,1]")).is_universal());
        assert!(single_universal(&p("[2,1,1,1]")).is_universal());
        assert!(!single_universal(&p("[3,3,2]")).is_universal());
    }

    #[test]
    fn pairs() {
        let v = pair_universal(&p("[2,1]"), &p("[3,1]"), 3).unwrap();
        assert!(!v.is_universal());
        assert!(v.rule_trace.iter().any(|s| s.rule == "hook-rule" && s.reason.contains("contains a hook")));
        assert!(pair_universal(&p("[2,2]"), &p("[2,2]"), 3).unwrap().is_universal());
        assert!(!pair_universal(&p("[2,2]"), &p("[2,2]"), 4).unwrap().is_universal());
        assert!(pair_universal(&p("[2,1]"), &p("[2,1]"), 2).unwrap().is_universal());
        assert!(matches!(pair_universal(&p("[3]"), &p("[2,1]"), 3), Err(Error::TrivialPartition(_))));
        assert!(matches!(pair_universal(&p("[2,1,1]"), &p("[2,1]"), 2), Err(Error::RowBound { .. })));
    }

    #[test]
    fn families() {
        let v = family_universal(&fam("[2,1];[2,1]", 3), 3).unwrap();
        assert!(!v.is_universal());
        let s = set_scan_verdict(&fam("[2,1];[2,1]", 3), 3).unwrap();
        assert!(s.witness_partitions.unwrap().contains(&p("[3,2,1]")));
        assert!(family_universal(&fam("[2,2];[2,1];[2,1]", 3), 3).unwrap().is_universal());
        assert!(family_universal(&fam("[2,1];[2,1];[2,1];[2,1]", 3), 3).unwrap().is_universal());
        let v = family_universal(&fam("[2,1];[2,1];[2,1]", 3), 3).unwrap();
        assert!(!v.is_universal());
        assert!(v.witness_partitions.unwrap().contains(&p("[3,3,3]")));
        assert!(matches!(
            family_universal(&fam("[2,1];[3]", 3), 3),
            Err(Error::TrivialPartition(_))
        ));
        assert!(matches!(
            family_universal(&PartitionFamily::with_default_d(vec![]), 3),
            Err(Error::EmptyFamily)
        ));
        assert!(!family_universal(&fam("[3,1,1]", 3), 3).unwrap().is_universal());
    }

    #[test]
    fn two_row_families() {
        for s in ["[2,1];[2,1]", "[3,1];[2,2];[4,2]", "[2,1];[2,1];[5,1]"] {
            assert!(family_universal(&fam(s, 2), 2).unwrap().is_universal(), "{s}");
        }
    }

    #[test]
    fn minimal_families_two_rows() {
        let set = minimal_universal_families(2).unwrap();
        let want: Vec<PartitionFamily> = ["[2,1];[2,1]", "[2,1];[2,2]", "[2,2];[2,2]"].iter().map(|s| fam(s, 2)).collect();
        assert_eq!(set.families, want);
    }

    #[test]
    fn candidates() {
        let c: Vec<String> = self_conjugate_candidates(3).iter().map(|p| p.to_string()).collect();
        assert_eq!(c, vec!["[2,1]", "[2,2]", "[3,1,1]", "[3,2,1]", "[3,3,2]", "[3,3,3]"]);
        assert_eq!(self_conjugate_candidates(4).len(), 14);
    }

    #[test]
    fn ancillas() {
        let a = ancilla_suggestion(&fam("[2,1];[2,1]", 3), 3).unwrap();
        assert_eq!(a.ancilla, p("[2,2]"));
        assert!(a.verdict.is_universal());
        let a = ancilla_suggestion(&fam("[3,2,1];[3,2,1]", 3), 3).unwrap();
        assert_eq!(a.ancilla, p("[2]"));
        let a = ancilla_suggestion(&fam("[3,1];[3,1,1]", 3), 3).unwrap();
        assert_eq!(a.ancilla, p("[2,2]"));
    }

    #[test]
    fn cartan_targets() {
        let (nu, v) = cartan_target(&fam("[2,1];[2,1]", 3)).unwrap();
        assert_eq!(nu, p("[4,2]"));
        assert!(v.is_universal());
        let (nu, v) = cartan_target(&fam("[2,2];[2,2]", 3)).unwrap();
        assert_eq!(nu, p("[4,4]"));
        assert!(v.is_universal());
        assert!(matches!(cartan_target(&fam("[1];[2,1]", 3)), Err(Error::TrivialPartition(_))));
        assert!(matches!(cartan_target(&fam("[2,1]", 3)), Err(Error::SingleMember)));
    }

    #[test]
    fn upward_closure_examples() {
        let r = upward_closed_check(&fam("[2,2];[2,2];[2,1]", 3), 3).unwrap();
        assert!(r.passed);
        let r = upward_closed_check(&fam("[2,1];[2,1];[5,1]", 2), 2).unwrap();
        assert!(r.passed);
        assert!(family_universal(&fam("[2,1];[2,1];[5,1]", 2), 2).unwrap().is_universal());
    }
}
