//! Littlewood–Richardson coefficients, iterated products over families, the
//! row-bounded product set `P^(d)`, and Weyl inequality bounds.

use std::collections::{BTreeMap, HashMap};
use std::sync::{Arc, OnceLock, RwLock};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::partition::{Partition, PartitionFamily};

/// Default cap on the total number of cells in a product.
pub const DEFAULT_LR_CAP: usize = 30;

/// A skew diagram `ν∖λ`: the cells of `ν` outside `λ`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SkewShape {
    pub outer: Partition,
    pub inner: Partition,
}

impl SkewShape {
    pub fn new(outer: Partition, inner: Partition) -> Option<Self> {
        inner.is_contained_in(&outer).then_some(SkewShape { outer, inner })
    }

    /// Cells `(row, col)` in row-major order, 0-based.
    pub fn cells(&self) -> Vec<(usize, usize)> {
        (1..=self.outer.rows())
            .flat_map(|r| (self.inner.part(r)..self.outer.part(r)).map(move |c| (r - 1, c)))
            .collect()
    }
}

/// A semistandard filling of a skew shape whose reverse reading word is a lattice word.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SkewLRTableau {
    pub shape: SkewShape,
    /// Entries of each row of the skew shape, left to right.
    pub rows: Vec<Vec<usize>>,
}

impl SkewLRTableau {
    /// The partition whose k-th part counts the entries equal to k.
    pub fn weight(&self) -> Partition {
        let mut counts: Vec<usize> = Vec::new();
        for &x in self.rows.iter().flatten() {
            if counts.len() < x {
                counts.resize(x, 0);
            }
            counts[x - 1] += 1;
        }
        Partition::from_unsorted(counts)
    }
}

/// Walks every LR tableau of shape `ν∖λ` and weight `μ` by adding, for each
/// `k`, a horizontal strip of `μ_k` cells labelled `k`.
///
/// `cnt[r][k]` counts the entries `k` (0-based) in row `r`. The reverse reading
/// word stays a lattice word when, after each row, the k's in rows `≤ r` do not
/// outnumber the (k−1)'s in rows `< r`.
/// Receives each completed filling as `(outer shape, cnt)`.
type Emit<'e> = &'e mut dyn FnMut(&[usize], &[Vec<usize>]);

struct StripWalker<'a> {
    mu: &'a [usize],
    outer: Option<&'a Partition>,
    max_rows: usize,
}

impl StripWalker<'_> {
    fn walk(&self, shape: &mut Vec<usize>, cnt: &mut Vec<Vec<usize>>, k: usize, emit: Emit<'_>) {
        if k == self.mu.len() {
            emit(shape, cnt);
            return;
        }
        let old = shape.clone();
        let rows = (old.len() + 1).min(self.max_rows);
        if let Some(o) = self.outer {
            if o.rows() < old.len() {
                return;
            }
        }
        self.strip(&old, shape, cnt, k, 0, self.mu[k], 0, 0, rows, emit);
    }

    #[allow(clippy::too_many_arguments)]
    fn strip(
        &self,
        old: &[usize],
        shape: &mut Vec<usize>,
        cnt: &mut Vec<Vec<usize>>,
        k: usize,
        r: usize,
        remaining: usize,
        prev_k: usize,
        prev_km1: usize,
        rows: usize,
        emit: Emit<'_>,
    ) {
        if remaining == 0 {
            let len = shape.len();
            shape.retain(|&x| x > 0);
            self.walk(shape, cnt, k + 1, emit);
            shape.resize(len, 0);
            return;
        }
        if r >= rows {
            return;
        }
        let cur = old.get(r).copied().unwrap_or(0);
        let above = if r == 0 { usize::MAX } else { old[r - 1] };
        let mut hi = above.saturating_sub(cur).min(remaining);
        if let Some(o) = self.outer {
            hi = hi.min(o.part(r + 1).saturating_sub(cur));
        }
        // Lattice bound: k's in rows ≤ r may not exceed (k−1)'s in rows < r.
        if k > 0 {
            hi = hi.min(prev_km1.saturating_sub(prev_k));
        }
        if r + 1 == rows && hi < remaining {
            return;
        }
        if shape.len() <= r {
            shape.resize(r + 1, 0);
        }
        if cnt.len() <= r {
            cnt.resize(r + 1, vec![0; self.mu.len()]);
        }
        let km1_here = if k > 0 { cnt[r][k - 1] } else { 0 };
        for add in (0..=hi).rev() {
            shape[r] = cur + add;
            cnt[r][k] = add;
            self.strip(old, shape, cnt, k, r + 1, remaining - add, prev_k + add, prev_km1 + km1_here, rows, emit);
        }
        shape[r] = cur;
        cnt[r][k] = 0;
    }
}

fn walk_lr(lambda: &Partition, mu: &Partition, outer: Option<&Partition>, max_rows: usize, emit: Emit<'_>) {
    if lambda.rows() > max_rows {
        return;
    }
    let walker = StripWalker { mu: mu.parts(), outer, max_rows };
    let mut shape = lambda.parts().to_vec();
    let mut cnt = vec![vec![0; mu.rows()]; lambda.rows()];
    walker.walk(&mut shape, &mut cnt, 0, emit);
}

/// `c_{λμ}^ν`, the number of LR tableaux of shape `ν∖λ` and weight `μ`.
pub fn lr_coefficient(lambda: &Partition, mu: &Partition, nu: &Partition) -> u64 {
    if nu.size() != lambda.size() + mu.size() || !lambda.is_contained_in(nu) {
        return 0;
    }
    let mut count = 0u64;
    walk_lr(lambda, mu, Some(nu), nu.rows(), &mut |shape, _| {
        if shape == nu.parts() {
            count += 1;
        }
    });
    count
}

/// All LR tableaux of shape `ν∖λ` and weight `μ`.
pub fn lr_tableaux(lambda: &Partition, mu: &Partition, nu: &Partition) -> Vec<SkewLRTableau> {
    let mut out = Vec::new();
    let Some(skew) = SkewShape::new(nu.clone(), lambda.clone()) else {
        return out;
    };
    if nu.size() != lambda.size() + mu.size() {
        return out;
    }
    walk_lr(lambda, mu, Some(nu), nu.rows(), &mut |shape, cnt| {
        if shape != nu.parts() {
            return;
        }
        let rows = cnt
            .iter()
            .map(|row| row.iter().enumerate().flat_map(|(k, &c)| std::iter::repeat(k + 1).take(c)).collect())
            .collect();
        out.push(SkewLRTableau { shape: skew.clone(), rows });
    });
    out
}

/// Expansion `λ ⊗ μ = Σ c_{λμ}^ν ν`, with the default cap.
pub fn lr_expand(lambda: &Partition, mu: &Partition) -> Result<BTreeMap<Partition, u64>> {
    lr_expand_bounded(lambda, mu, usize::MAX, DEFAULT_LR_CAP)
}

/// Expansion restricted to `ν` with at most `max_rows` rows.
pub fn lr_expand_bounded(lambda: &Partition, mu: &Partition, max_rows: usize, cap: usize) -> Result<BTreeMap<Partition, u64>> {
    let size = lambda.size() + mu.size();
    if size > cap {
        return Err(Error::SizeLimit { size, cap });
    }
    let mut out: BTreeMap<Partition, u64> = BTreeMap::new();
    walk_lr(lambda, mu, None, max_rows, &mut |shape, _| {
        *out.entry(Partition::from_parts_unchecked(shape.to_vec())).or_insert(0) += 1;
    });
    Ok(out)
}

type ExpandKey = (Partition, Partition, usize);

/// Thread-safe memo of pairwise expansions.
#[derive(Default)]
pub struct LrCache {
    map: RwLock<HashMap<ExpandKey, Arc<BTreeMap<Partition, u64>>>>,
}

impl LrCache {
    pub fn new() -> Self {
        Self::default()
    }

    /// Process-wide cache shared by the free functions.
    pub fn global() -> &'static LrCache {
        static CACHE: OnceLock<LrCache> = OnceLock::new();
        CACHE.get_or_init(LrCache::new)
    }

    pub fn expand(&self, lambda: &Partition, mu: &Partition, max_rows: usize, cap: usize) -> Result<Arc<BTreeMap<Partition, u64>>> {
        // The product is symmetric, so key on the ordered pair.
        let size = lambda.size() + mu.size();
        if size > cap {
            return Err(Error::SizeLimit { size, cap });
        }
        let (a, b) = if lambda <= mu { (lambda, mu) } else { (mu, lambda) };
        let key = (a.clone(), b.clone(), max_rows);
        if let Some(v) = self.map.read().expect("lr cache poisoned").get(&key) {
            return Ok(v.clone());
        }
        let v = Arc::new(lr_expand_bounded(a, b, max_rows, cap)?);
        self.map.write().expect("lr cache poisoned").insert(key, v.clone());
        Ok(v)
    }

    pub fn len(&self) -> usize {
        self.map.read().expect("lr cache poisoned").len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}

/// Iterated expansion of `μ^(1) ⊗ ⋯ ⊗ μ^(N)` keeping only partitions with at
/// most `max_rows` rows.
///
/// Intermediate partitions are contained in every final one, so discarding
/// intermediates with too many rows loses nothing.
pub fn multi_lr_expand(members: &[Partition], max_rows: usize, cap: usize) -> Result<BTreeMap<Partition, u64>> {
    multi_lr_expand_with(LrCache::global(), members, max_rows, cap)
}

pub fn multi_lr_expand_with(cache: &LrCache, members: &[Partition], max_rows: usize, cap: usize) -> Result<BTreeMap<Partition, u64>> {
    let total: usize = members.iter().map(Partition::size).sum();
    if total > cap {
        return Err(Error::SizeLimit { size: total, cap });
    }
    let mut acc: BTreeMap<Partition, u64> = BTreeMap::new();
    acc.insert(Partition::empty(), 1);
    for m in members {
        let mut next: BTreeMap<Partition, u64> = BTreeMap::new();
        for (inter, &c) in &acc {
            for (nu, &e) in cache.expand(inter, m, max_rows, cap)?.iter() {
                *next.entry(nu.clone()).or_insert(0) += c * e;
            }
        }
        acc = next;
    }
    Ok(acc)
}

/// Unpruned iterated expansion, filtered by rows only at the end.
pub fn multi_lr_expand_unpruned(members: &[Partition], max_rows: usize) -> BTreeMap<Partition, u64> {
    let mut acc: BTreeMap<Partition, u64> = BTreeMap::new();
    acc.insert(Partition::empty(), 1);
    for m in members {
        let mut next: BTreeMap<Partition, u64> = BTreeMap::new();
        for (inter, &c) in &acc {
            for (nu, e) in lr_expand_bounded(inter, m, usize::MAX, usize::MAX).expect("no cap") {
                *next.entry(nu).or_insert(0) += c * e;
            }
        }
        acc = next;
    }
    acc.retain(|nu, _| nu.rows() <= max_rows);
    acc
}

/// `c^ν_{μ^(1)⋯μ^(N)}`, summing over intermediate partitions.
pub fn multi_lr_coefficient(family: &PartitionFamily, nu: &Partition) -> u64 {
    if nu.size() != family.total_size() {
        return 0;
    }
    let mut members = family.sorted_members();
    members.reverse();
    multi_coefficient_rec(&Partition::empty(), &members, nu, &mut HashMap::new())
}

/// Memoized on (intermediate partition, number of members already used).
fn multi_coefficient_rec(cur: &Partition, rest: &[Partition], nu: &Partition, memo: &mut HashMap<(Partition, usize), u64>) -> u64 {
    if rest.is_empty() {
        return u64::from(cur == nu);
    }
    let key = (cur.clone(), rest.len());
    if let Some(&v) = memo.get(&key) {
        return v;
    }
    let cache = LrCache::global();
    let mut total = 0;
    let expansion = cache
        .expand(cur, &rest[0], nu.rows(), usize::MAX)
        .expect("no cap on coefficient queries");
    for (next, &c) in expansion.iter() {
        if next.is_contained_in(nu) {
            total += c * multi_coefficient_rec(next, &rest[1..], nu, memo);
        }
    }
    memo.insert(key, total);
    total
}

/// One entry of a product set.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ProductEntry {
    pub nu: Partition,
    pub coefficient: u64,
}

/// The partitions `ν` with at most `d` rows occurring in the product of a family.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LRProductSet {
    pub family: PartitionFamily,
    pub d: usize,
    pub members: Vec<Partition>,
    pub coefficients: Vec<ProductEntry>,
}

impl LRProductSet {
    pub fn contains(&self, nu: &Partition) -> bool {
        self.members.binary_search(nu).is_ok()
    }

    pub fn coefficient(&self, nu: &Partition) -> u64 {
        self.members
            .binary_search(nu)
            .map(|i| self.coefficients[i].coefficient)
            .unwrap_or(0)
    }

    /// Members that are hooks.
    pub fn hooks(&self) -> Vec<Partition> {
        self.members.iter().filter(|nu| nu.is_hook()).cloned().collect()
    }

    /// Members `ν` with `ν = ν′` or `ν′` also present.
    pub fn conjugate_witnesses(&self) -> Vec<Partition> {
        self.members
            .iter()
            .filter(|nu| {
                let c = nu.conjugate();
                c == **nu || self.contains(&c)
            })
            .cloned()
            .collect()
    }
}

/// `P^(d)` of a family with the default cap.
pub fn product_set(family: &PartitionFamily, d: usize) -> Result<LRProductSet> {
    product_set_capped(family, d, DEFAULT_LR_CAP)
}

pub fn product_set_capped(family: &PartitionFamily, d: usize, cap: usize) -> Result<LRProductSet> {
    let expansion = multi_lr_expand(family.members(), d, cap)?;
    let members: Vec<Partition> = expansion.keys().cloned().collect();
    let coefficients = expansion
        .into_iter()
        .map(|(nu, coefficient)| ProductEntry { nu, coefficient })
        .collect();
    Ok(LRProductSet { family: family.clone(), d, members, coefficients })
}

/// Weyl bounds `(max_{i+j=k+d}(λ_i+μ_j), min_{i+j=k+1}(λ_i+μ_j))` for `k = 1..d`.
pub fn weyl_bounds(lambda: &Partition, mu: &Partition, d: usize) -> Vec<(usize, usize)> {
    (1..=d)
        .map(|k| {
            let lower = (1..=d)
                .filter_map(|i| (k + d).checked_sub(i).filter(|j| (1..=d).contains(j)).map(|j| lambda.part(i) + mu.part(j)))
                .max()
                .unwrap_or(0);
            let upper = (1..=k).map(|i| lambda.part(i) + mu.part(k + 1 - i)).min().unwrap_or(0);
            (lower, upper)
        })
        .collect()
}

/// `max_{i+j=1+d}(λ_i + μ_j)`.
pub fn weyl_corner(lambda: &Partition, mu: &Partition, d: usize) -> usize {
    (1..=d).map(|i| lambda.part(i) + mu.part(d + 1 - i)).max().unwrap_or(0)
}

/// For self-conjugate `λ`, `μ`: whether their row-bounded product set avoids
/// self-conjugate partitions and conjugate pairs, decided arithmetically.
pub fn no_conjugates_pair(lambda: &Partition, mu: &Partition, d: usize) -> Result<bool> {
    for p in [lambda, mu] {
        if !p.is_self_conjugate() {
            return Err(Error::HypothesisViolated(format!("{p} is not self-conjugate")));
        }
    }
    Ok(weyl_corner(lambda, mu, d) > d)
}
