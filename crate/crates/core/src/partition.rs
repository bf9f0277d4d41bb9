//! Integer partitions, their conjugates and classification, and families of
//! partitions labelling encoded qudits.

use std::cmp::Ordering;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A weakly decreasing sequence of positive integers.
///
/// Zero parts are never stored, so the empty sequence is the unique partition of 0.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "PartsRepr", into = "PartsRepr")]
pub struct Partition {
    parts: Vec<usize>,
}

#[derive(Serialize, Deserialize)]
struct PartsRepr {
    parts: Vec<usize>,
}

impl TryFrom<PartsRepr> for Partition {
    type Error = Error;
    fn try_from(r: PartsRepr) -> Result<Self> {
        Partition::new(r.parts)
    }
}

impl From<Partition> for PartsRepr {
    fn from(p: Partition) -> Self {
        PartsRepr { parts: p.parts }
    }
}

impl Partition {
    /// Builds a partition from weakly decreasing parts; trailing zeros are dropped.
    pub fn new(mut parts: Vec<usize>) -> Result<Self> {
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::NotDecreasing(format!("{parts:?}")));
        }
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Ok(Partition { parts })
    }

    /// Builds a partition from parts in any order, sorting them.
    pub fn from_unsorted(mut parts: Vec<usize>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition { parts }
    }

    pub(crate) fn from_parts_unchecked(parts: Vec<usize>) -> Self {
        debug_assert!(parts.windows(2).all(|w| w[0] >= w[1]));
        debug_assert!(parts.iter().all(|&p| p > 0));
        Partition { parts }
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    /// The single-row partition `[n]`.
    pub fn row(n: usize) -> Self {
        Partition::from_unsorted(vec![n])
    }

    /// The single-column partition `[1^n]`.
    pub fn column(n: usize) -> Self {
        Partition { parts: vec![1; n] }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// The number being partitioned, |λ|.
    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    /// Number of rows, λ′_1.
    pub fn rows(&self) -> usize {
        self.parts.len()
    }

    /// Number of columns, λ_1.
    pub fn cols(&self) -> usize {
        self.parts.first().copied().unwrap_or(0)
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Part λ_i with 1-based `i`; parts past the end read as 0.
    pub fn part(&self, i: usize) -> usize {
        if i == 0 {
            return 0;
        }
        self.parts.get(i - 1).copied().unwrap_or(0)
    }

    pub fn conjugate(&self) -> Partition {
        let cols = self.cols();
        let parts = (1..=cols)
            .map(|i| self.parts.iter().take_while(|&&p| p >= i).count())
            .collect();
        Partition { parts }
    }

    pub fn is_self_conjugate(&self) -> bool {
        *self == self.conjugate()
    }

    /// Length of the main diagonal, the number of i with λ_i ≥ i.
    pub fn diagonal_length(&self) -> usize {
        self.parts
            .iter()
            .enumerate()
            .take_while(|(i, &p)| p > *i)
            .count()
    }

    /// True for `[n]` and `[1^n]` (including `[]` and `[1]`).
    pub fn is_trivial(&self) -> bool {
        self.rows() <= 1 || self.cols() <= 1
    }

    /// True for `[n−r, 1^r]` with 0 < r < n−1.
    pub fn is_hook(&self) -> bool {
        !self.is_trivial() && self.part(2) == 1
    }

    /// True when the second row has more than one cell.
    pub fn is_proper(&self) -> bool {
        self.part(2) > 1
    }

    pub fn classify(&self) -> PartitionClass {
        let n = self.size();
        let kind = if self.rows() <= 1 {
            PartitionKind::TrivialRow
        } else if self.cols() <= 1 {
            PartitionKind::TrivialColumn
        } else if self.is_proper() {
            PartitionKind::Proper
        } else {
            let r = self.rows() - 1;
            if r == 1 || r + 2 == n {
                PartitionKind::ShallowHook
            } else {
                PartitionKind::DeepHook
            }
        };
        PartitionClass {
            kind,
            self_conjugate: self.is_self_conjugate(),
            rows: self.rows(),
            cols: self.cols(),
            diagonal_length: self.diagonal_length(),
        }
    }

    /// Part-wise sum, reading missing parts as 0.
    pub fn partwise_sum(&self, other: &Partition) -> Partition {
        let len = self.rows().max(other.rows());
        let parts = (1..=len).map(|i| self.part(i) + other.part(i)).collect();
        Partition { parts }
    }

    /// True when every part of `self` is at most the matching part of `other`.
    pub fn is_contained_in(&self, other: &Partition) -> bool {
        self.rows() <= other.rows() && self.parts.iter().zip(&other.parts).all(|(a, b)| a <= b)
    }

    /// Hook length of cell `(r, c)`, 0-based.
    pub fn hook_length(&self, r: usize, c: usize) -> usize {
        let arm = self.parts[r] - c - 1;
        let leg = self.parts[r + 1..].iter().take_while(|&&p| p > c).count();
        arm + leg + 1
    }

    /// Cells `(row, col)` in row-major order, 0-based.
    pub fn cells(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.parts
            .iter()
            .enumerate()
            .flat_map(|(r, &len)| (0..len).map(move |c| (r, c)))
    }
}

/// Parses `[3,2,2]` or `[2,1^3]`, ignoring whitespace.
pub fn parse_partition(text: &str) -> Result<Partition> {
    Partition::new(parse_terms(text)?)
}

/// Like [`parse_partition`] but sorts the parts instead of rejecting rising input.
pub fn parse_partition_sorted(text: &str) -> Result<Partition> {
    Ok(Partition::from_unsorted(parse_terms(text)?))
}

fn parse_terms(text: &str) -> Result<Vec<usize>> {
    let s: String = text.chars().filter(|c| !c.is_whitespace()).collect();
    let inner = s
        .strip_prefix('[')
        .and_then(|t| t.strip_suffix(']'))
        .ok_or_else(|| Error::Parse(format!("expected brackets around parts in {text:?}")))?;
    let mut parts = Vec::new();
    if inner.is_empty() {
        return Ok(parts);
    }
    for term in inner.split(',') {
        let (base, exp) = match term.split_once('^') {
            Some((b, e)) => (b, e),
            None => (term, "1"),
        };
        let base: usize = base
            .parse()
            .map_err(|_| Error::Parse(format!("bad part {term:?} in {text:?}")))?;
        let exp: usize = exp
            .parse()
            .map_err(|_| Error::Parse(format!("bad exponent {term:?} in {text:?}")))?;
        parts.extend(std::iter::repeat(base).take(exp));
    }
    Ok(parts)
}

impl FromStr for Partition {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        parse_partition(s)
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, "]")
    }
}

/// Shape category of a partition.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum PartitionKind {
    TrivialRow,
    TrivialColumn,
    ShallowHook,
    DeepHook,
    Proper,
}

impl PartitionKind {
    pub fn is_hook(self) -> bool {
        matches!(self, PartitionKind::ShallowHook | PartitionKind::DeepHook)
    }

    pub fn is_trivial(self) -> bool {
        matches!(self, PartitionKind::TrivialRow | PartitionKind::TrivialColumn)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PartitionClass {
    pub kind: PartitionKind,
    pub self_conjugate: bool,
    pub rows: usize,
    pub cols: usize,
    pub diagonal_length: usize,
}

/// All partitions of `n`, in reverse lexicographic order (`[n]` first).
pub fn partitions_of(n: usize) -> Vec<Partition> {
    partitions_bounded(n, n, usize::MAX)
}

/// Partitions of `n` with at most `max_rows` rows and parts at most `max_part`.
pub fn partitions_bounded(n: usize, max_part: usize, max_rows: usize) -> Vec<Partition> {
    fn rec(rem: usize, max_part: usize, rows_left: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if rem == 0 {
            out.push(Partition::from_parts_unchecked(cur.clone()));
            return;
        }
        if rows_left == 0 {
            return;
        }
        for p in (1..=max_part.min(rem)).rev() {
            cur.push(p);
            rec(rem - p, p, rows_left - 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, max_part, max_rows, &mut Vec::new(), &mut out);
    out
}

/// An ordered collection of partitions with a bound `d` on the number of rows.
///
/// Order is kept as given, but equality and hashing use the sorted members.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct PartitionFamily {
    members: Vec<Partition>,
    d: usize,
}

impl PartitionFamily {
    /// Builds a family, rejecting members with more than `d` rows.
    pub fn new(members: Vec<Partition>, d: usize) -> Result<Self> {
        if let Some(p) = members.iter().find(|p| p.rows() > d) {
            return Err(Error::RowBound { partition: p.to_string(), rows: p.rows(), d });
        }
        Ok(PartitionFamily { members, d })
    }

    /// Builds a family whose bound is the largest member row count.
    pub fn with_default_d(members: Vec<Partition>) -> Self {
        let d = members.iter().map(Partition::rows).max().unwrap_or(0);
        PartitionFamily { members, d }
    }

    pub fn members(&self) -> &[Partition] {
        &self.members
    }

    pub fn d(&self) -> usize {
        self.d
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn total_size(&self) -> usize {
        self.members.iter().map(Partition::size).sum()
    }

    /// True when the multiset of members equals the multiset of their conjugates.
    pub fn is_self_conjugate(&self) -> bool {
        let mut conj: Vec<Partition> = self.members.iter().map(Partition::conjugate).collect();
        conj.sort();
        conj == self.sorted_members()
    }

    /// True when every member equals its own conjugate.
    pub fn all_members_self_conjugate(&self) -> bool {
        self.members.iter().all(Partition::is_self_conjugate)
    }

    /// Members in canonical order: by size, then lexicographically.
    pub fn sorted_members(&self) -> Vec<Partition> {
        let mut m = self.members.clone();
        m.sort_by(canonical_order);
        m
    }

    /// The same family with members in canonical order.
    pub fn canonical(&self) -> PartitionFamily {
        PartitionFamily { members: self.sorted_members(), d: self.d }
    }

    /// The same members with a different row bound.
    pub fn with_d(&self, d: usize) -> Result<PartitionFamily> {
        PartitionFamily::new(self.members.clone(), d)
    }

    /// Appends a member, keeping the row bound.
    pub fn extended(&self, extra: Partition) -> Result<PartitionFamily> {
        let mut m = self.members.clone();
        m.push(extra);
        PartitionFamily::new(m, self.d)
    }
}

/// Order used to list family members: by size, then lexicographically.
pub fn canonical_order(a: &Partition, b: &Partition) -> Ordering {
    a.size().cmp(&b.size()).then_with(|| a.cmp(b))
}

impl PartialEq for PartitionFamily {
    fn eq(&self, other: &Self) -> bool {
        self.d == other.d && self.sorted_members() == other.sorted_members()
    }
}

impl Eq for PartitionFamily {}

impl Hash for PartitionFamily {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.d.hash(state);
        self.sorted_members().hash(state);
    }
}

impl fmt::Display for PartitionFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, p) in self.members.iter().enumerate() {
            if i > 0 {
                write!(f, ";")?;
            }
            write!(f, "{p}")?;
        }
        Ok(())
    }
}

/// Parses semicolon-separated partitions such as `"[2,1];[2,1]"`.
pub fn parse_family_members(text: &str) -> Result<Vec<Partition>> {
    text.split(';')
        .filter(|t| !t.trim().is_empty())
        .map(parse_partition)
        .collect()
}
