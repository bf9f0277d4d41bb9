//! Coding efficiency of partition encodings, isotypic dimension bookkeeping,
//! and explicit maps from tableaux to computational-basis vectors for
//! two-state systems.

use std::cmp::Reverse;
use std::collections::VecDeque;
use std::ops::RangeInclusive;

use nalgebra::DMatrix;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::lr::multi_lr_coefficient;
use crate::partition::{partitions_bounded, Partition, PartitionFamily};
use crate::repn::{CheckReport, YoungBasis};
use crate::tableau::{dimension, StandardTableau};
use crate::universality::single_universal;

/// Largest number of two-state systems for [`physical_basis_map`].
pub const MAX_PHYSICAL_SITES: usize = 10;

const NULL_THRESHOLD: f64 = 1e-8;

/// `log_d(dim λ) / |λ|`.
pub fn coding_efficiency(d: usize, lambda: &Partition) -> f64 {
    let n = lambda.size();
    if n == 0 {
        return 0.0;
    }
    (dimension(lambda) as f64).ln() / (d as f64).ln() / n as f64
}

/// Best universal encoding of `n` cells with at most `d` rows.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct EfficiencyRow {
    pub n: usize,
    pub d: usize,
    pub best_partition: Partition,
    pub dim: u128,
    pub efficiency: f64,
}

/// For each `n` and `d`, the universal partition of `n` with at most `d` rows
/// of largest dimension.
///
/// Ties go to the smallest bounding box (fewest rows, then fewest columns),
/// then to the lexicographically largest partition.
pub fn efficiency_table(n_range: RangeInclusive<usize>, d_list: &[usize]) -> Vec<EfficiencyRow> {
    let mut rows = Vec::new();
    for n in n_range {
        for &d in d_list {
            let best = partitions_bounded(n, n, d)
                .into_iter()
                .filter(|p| single_universal(p).is_universal())
                .map(|p| (dimension(&p), Reverse(p.rows()), Reverse(p.cols()), p))
                .max();
            if let Some((dim, _, _, p)) = best {
                let efficiency = coding_efficiency(d, &p);
                rows.push(EfficiencyRow { n, d, best_partition: p, dim, efficiency });
            }
        }
    }
    rows
}

/// `Π dim(μ^(i)) · c^ν_{μ^(1)⋯μ^(N)}`.
pub fn isotypic_dimension(family: &PartitionFamily, nu: &Partition) -> u128 {
    let dims: u128 = family.members().iter().map(dimension).product();
    dims * multi_lr_coefficient(family, nu) as u128
}

/// One basis vector: tableau index, twice the weight, and amplitudes over `2^n` kets.
#[derive(Clone, Debug, PartialEq)]
pub struct BasisVector {
    pub tableau: usize,
    pub m2: i32,
    pub coefficients: Vec<f64>,
}

/// Images of `(tableau, weight)` pairs in `(C²)^{⊗n}`.
///
/// Kets are bitstrings with particle 1 leftmost; `0` has weight `+1/2`.
#[derive(Clone, Debug)]
pub struct PhysicalBasisMap {
    pub shape: Partition,
    pub n: usize,
    pub basis: Vec<StandardTableau>,
    /// Sorted by weight descending, then tableau index.
    pub vectors: Vec<BasisVector>,
}

/// A nonzero amplitude, keyed by its bitstring.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct KetTerm {
    pub ket: String,
    pub coefficient: f64,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct BasisVectorView {
    pub tableau: StandardTableau,
    pub m: f64,
    pub terms: Vec<KetTerm>,
}

impl PhysicalBasisMap {
    pub fn vector(&self, tableau: usize, m2: i32) -> Option<&[f64]> {
        self.vectors
            .iter()
            .find(|v| v.tableau == tableau && v.m2 == m2)
            .map(|v| v.coefficients.as_slice())
    }

    /// Twice the highest weight, `λ_1 − λ_2`.
    pub fn top_m2(&self) -> i32 {
        (self.shape.part(1) - self.shape.part(2)) as i32
    }

    pub fn ket_label(&self, x: usize) -> String {
        (1..=self.n).map(|k| if bit(x, k, self.n) == 1 { '1' } else { '0' }).collect()
    }

    /// Nonzero amplitudes of every vector, for display.
    pub fn views(&self) -> Vec<BasisVectorView> {
        self.vectors
            .iter()
            .map(|v| BasisVectorView {
                tableau: self.basis[v.tableau].clone(),
                m: v.m2 as f64 / 2.0,
                terms: v
                    .coefficients
                    .iter()
                    .enumerate()
                    .filter(|(_, c)| c.abs() > 1e-12)
                    .map(|(x, &c)| KetTerm { ket: self.ket_label(x), coefficient: c })
                    .collect(),
            })
            .collect()
    }
}

/// Bit of particle `k` (1-based, leftmost first) in ket `x` over `n` sites.
fn bit(x: usize, k: usize, n: usize) -> usize {
    (x >> (n - k)) & 1
}

fn swap_sites(x: usize, a: usize, b: usize, n: usize) -> usize {
    let (ba, bb) = (bit(x, a, n), bit(x, b, n));
    if ba == bb {
        x
    } else {
        x ^ (1 << (n - a)) ^ (1 << (n - b))
    }
}

fn apply_swap(v: &[f64], a: usize, b: usize, n: usize) -> Vec<f64> {
    let mut out = vec![0.0; v.len()];
    for (x, &c) in v.iter().enumerate() {
        out[swap_sites(x, a, b, n)] += c;
    }
    out
}

/// `Σ_k σ⁻_k`, sending `0 → 1` at each site.
fn lower(v: &[f64], n: usize) -> Vec<f64> {
    let mut out = vec![0.0; v.len()];
    for (x, &c) in v.iter().enumerate() {
        if c == 0.0 {
            continue;
        }
        for k in 1..=n {
            if bit(x, k, n) == 0 {
                out[x | (1 << (n - k))] += c;
            }
        }
    }
    out
}

fn flip_all(v: &[f64]) -> Vec<f64> {
    let mask = v.len() - 1;
    let mut out = vec![0.0; v.len()];
    for (x, &c) in v.iter().enumerate() {
        out[x ^ mask] = c;
    }
    out
}

fn norm(v: &[f64]) -> f64 {
    v.iter().map(|x| x * x).sum::<f64>().sqrt()
}

fn normalized(mut v: Vec<f64>) -> Vec<f64> {
    let s = norm(&v);
    v.iter_mut().for_each(|x| *x /= s);
    v
}

fn dot(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

fn max_diff(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).fold(0.0f64, |m, (x, y)| m.max((x - y).abs()))
}

/// Twice the `S_z` eigenvalue of ket `x`: `#0 − #1`.
fn ket_m2(x: usize, n: usize) -> i32 {
    let ones = x.count_ones() as i32;
    n as i32 - 2 * ones
}

/// Tableau images for a shape with at most two rows on `n ≤ 10` sites.
///
/// Highest-weight vectors are the joint eigenvectors of the Jucys–Murphy
/// operators with the tableau's contents. Lower nonnegative weights come from
/// the collective lowering operator; negative weights are bit-flips of the
/// matching positive weight.
pub fn physical_basis_map(shape: &Partition) -> Result<PhysicalBasisMap> {
    let n = shape.size();
    if shape.rows() > 2 {
        return Err(Error::Unsupported(format!("{shape} has more than two rows")));
    }
    if n > MAX_PHYSICAL_SITES {
        return Err(Error::SizeLimit { size: n, cap: MAX_PHYSICAL_SITES });
    }
    if n == 0 {
        return Err(Error::Unsupported("empty shape".into()));
    }
    let basis = YoungBasis::new(shape)?;
    let top = (shape.part(1) - shape.part(2)) as i32;
    let weight_space: Vec<usize> = (0..1usize << n).filter(|&x| ket_m2(x, n) == top).collect();
    let pos: std::collections::HashMap<usize, usize> = weight_space.iter().enumerate().map(|(i, &x)| (x, i)).collect();
    let w = weight_space.len();

    // Jucys–Murphy operators restricted to the weight space.
    let jm: Vec<DMatrix<f64>> = (1..=n)
        .map(|k| {
            let mut m = DMatrix::zeros(w, w);
            for (col, &x) in weight_space.iter().enumerate() {
                for i in 1..k {
                    m[(pos[&swap_sites(x, i, k, n)], col)] += 1.0;
                }
            }
            m
        })
        .collect();

    let null_vector = |t: &StandardTableau| -> Result<Vec<f64>> {
        let mut a = DMatrix::zeros(n * w, w);
        for (k, x) in jm.iter().enumerate() {
            let c = t.content(k + 1) as f64;
            for r in 0..w {
                for col in 0..w {
                    a[(k * w + r, col)] = x[(r, col)] - if r == col { c } else { 0.0 };
                }
            }
        }
        let svd = a.svd(false, true);
        let v_t = svd.v_t.expect("right singular vectors requested");
        let null: Vec<usize> = (0..svd.singular_values.len())
            .filter(|&i| svd.singular_values[i] < NULL_THRESHOLD)
            .collect();
        if null.len() != 1 {
            return Err(Error::Degenerate { tableau: t.to_string(), dim: null.len() });
        }
        let mut full = vec![0.0; 1 << n];
        for (i, &x) in weight_space.iter().enumerate() {
            full[x] = v_t[(null[0], i)];
        }
        Ok(normalized(full))
    };

    let dim = basis.dim();
    let mut top_vectors: Vec<Option<Vec<f64>>> = vec![None; dim];
    let mut first = null_vector(&basis.tableaux()[0])?;
    if let Some(&lead) = first.iter().find(|c| c.abs() > 1e-9) {
        if lead < 0.0 {
            first.iter_mut().for_each(|x| *x = -*x);
        }
    }
    top_vectors[0] = Some(first);
    let mut queue = VecDeque::from([0usize]);
    while let Some(ti) = queue.pop_front() {
        let t = basis.tableaux()[ti].clone();
        let v = top_vectors[ti].clone().expect("visited");
        for i in 1..n {
            let Some(s) = t.swap_adjacent(i) else { continue };
            let si = basis.index_of(&s).expect("in basis");
            if top_vectors[si].is_some() {
                continue;
            }
            let d = t.axial_distance(i, i + 1) as f64;
            let pv = apply_swap(&v, i, i + 1, n);
            let c = (1.0 - 1.0 / (d * d)).sqrt();
            let propagated: Vec<f64> = pv.iter().zip(&v).map(|(p, x)| (p - x / d) / c).collect();
            let mut solved = null_vector(&s)?;
            if dot(&solved, &propagated) < 0.0 {
                solved.iter_mut().for_each(|x| *x = -*x);
            }
            top_vectors[si] = Some(solved);
            queue.push_back(si);
        }
    }

    let tops: Vec<Vec<f64>> = top_vectors.into_iter().map(|v| v.expect("basis is connected")).collect();
    let mut vectors = Vec::new();
    let mut current = tops.clone();
    let mut m2 = top;
    let mut nonneg: Vec<(i32, Vec<Vec<f64>>)> = Vec::new();
    loop {
        nonneg.push((m2, current.clone()));
        if m2 < 2 {
            break;
        }
        current = current.iter().map(|v| normalized(lower(v, n))).collect();
        m2 -= 2;
    }
    for (m2, vs) in &nonneg {
        for (ti, v) in vs.iter().enumerate() {
            vectors.push(BasisVector { tableau: ti, m2: *m2, coefficients: v.clone() });
        }
    }
    for (m2, vs) in nonneg.iter().rev() {
        if *m2 == 0 {
            continue;
        }
        for (ti, v) in vs.iter().enumerate() {
            vectors.push(BasisVector { tableau: ti, m2: -m2, coefficients: flip_all(v) });
        }
    }
    Ok(PhysicalBasisMap { shape: shape.clone(), n, basis: basis.tableaux().to_vec(), vectors })
}

/// Orthonormality, swap-equivariance and weight checks for a basis map.
pub fn check_physical_basis_map(map: &PhysicalBasisMap) -> Result<Vec<CheckReport>> {
    let n = map.n;
    let basis = YoungBasis::new(&map.shape)?;
    let gens = basis.generators();
    let mut orth = 0.0f64;
    for (a, va) in map.vectors.iter().enumerate() {
        for vb in &map.vectors[a..] {
            let want = if va.tableau == vb.tableau && va.m2 == vb.m2 { 1.0 } else { 0.0 };
            orth = orth.max((dot(&va.coefficients, &vb.coefficients) - want).abs());
        }
    }
    let mut equiv = 0.0f64;
    for v in &map.vectors {
        for i in 1..n {
            let lhs = apply_swap(&v.coefficients, i, i + 1, n);
            let mut rhs = vec![0.0; lhs.len()];
            for (s, _) in basis.tableaux().iter().enumerate() {
                let coeff = gens[i - 1][(s, v.tableau)];
                if coeff != 0.0 {
                    let vs = map.vector(s, v.m2).expect("all tableaux at every weight");
                    rhs.iter_mut().zip(vs).for_each(|(r, x)| *r += coeff * x);
                }
            }
            equiv = equiv.max(max_diff(&lhs, &rhs));
        }
    }
    let mut sz = 0.0f64;
    for v in &map.vectors {
        for (x, &c) in v.coefficients.iter().enumerate() {
            let diff = (ket_m2(x, n) - v.m2) as f64 / 2.0;
            sz = sz.max((diff * c).abs());
        }
    }
    let label = map.shape.to_string();
    Ok(vec![
        CheckReport::new("basis-orthonormality", orth, 1e-9, format!("{label}: {} vectors", map.vectors.len())),
        CheckReport::new("basis-equivariance", equiv, 1e-9, format!("{label}: adjacent swaps act by the orthogonal form")),
        CheckReport::new("basis-weight", sz, 1e-12, format!("{label}: S_z eigenvalue equals the weight")),
    ])
}

/// Checks that flipping every bit sends the `(T, m)` vector to `±` the
/// `(T, −m)` vector obtained by lowering, with one sign per weight.
pub fn collective_noise_check(map: &PhysicalBasisMap) -> CheckReport {
    let n = map.n;
    let top = map.top_m2();
    let dim = map.basis.len();
    let mut lowered: Vec<(i32, Vec<Vec<f64>>)> = Vec::new();
    let mut current: Vec<Vec<f64>> = (0..dim)
        .map(|t| map.vector(t, top).expect("highest weight present").to_vec())
        .collect();
    let mut m2 = top;
    loop {
        lowered.push((m2, current.clone()));
        if m2 <= -top {
            break;
        }
        current = current.iter().map(|v| normalized(lower(v, n))).collect();
        m2 -= 2;
    }
    let mut worst = 0.0f64;
    for (m2, vs) in &lowered {
        let mut sign = 0.0;
        for (t, target) in vs.iter().enumerate() {
            let Some(src) = map.vector(t, -m2) else {
                worst = f64::INFINITY;
                continue;
            };
            let flipped = flip_all(src);
            if sign == 0.0 {
                sign = if dot(&flipped, target) < 0.0 { -1.0 } else { 1.0 };
            }
            let scaled: Vec<f64> = target.iter().map(|x| sign * x).collect();
            worst = worst.max(max_diff(&flipped, &scaled));
        }
    }
    CheckReport::new(
        "collective-bit-flip",
        worst,
        1e-9,
        format!("{}: global bit-flip preserves the tableau index at every weight", map.shape),
    )
}

/// Pairs `(T, T∖n)` restricting each tableau of `shape` to the shape without `n`.
pub fn branching_restriction(shape: &Partition) -> Result<Vec<(StandardTableau, StandardTableau)>> {
    let basis = YoungBasis::new(shape)?;
    Ok(basis.tableaux().iter().map(|t| (t.clone(), t.remove_largest())).collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    fn ket_vec(n: usize, terms: &[(&str, f64)], scale: f64) -> Vec<f64> {
        let mut v = vec![0.0; 1 << n];
        for (k, c) in terms {
            v[usize::from_str_radix(k, 2).unwrap()] = c / scale;
        }
        v
    }

    #[test]
    fn efficiencies() {
        assert!((coding_efficiency(2, &p("[2,1]")) - 1.0 / 3.0).abs() < 1e-12);
        assert!((coding_efficiency(3, &p("[4,2,1]")) - 0.4620).abs() < 1e-3);
        assert_eq!(coding_efficiency(3, &p("[5]")), 0.0);
    }

    #[test]
    fn table_rows() {
        let rows = efficiency_table(7..=7, &[2]);
        assert_eq!((rows[0].best_partition.clone(), rows[0].dim), (p("[4,3]"), 14));
        let rows = efficiency_table(11..=11, &[3]);
        assert_eq!((rows[0].best_partition.clone(), rows[0].dim), (p("[5,4,2]"), 990));
        let rows = efficiency_table(9..=9, &[4]);
        assert_eq!((rows[0].best_partition.clone(), rows[0].dim), (p("[4,3,1,1]"), 216));
        for row in efficiency_table(3..=3, &[2, 3, 4, 5]) {
            assert_eq!((row.best_partition, row.dim), (p("[2,1]"), 2));
        }
    }

    #[test]
    fn isotypic_dimensions() {
        let f = PartitionFamily::new(vec![p("[2,1]"), p("[2,1]")], 3).unwrap();
        assert_eq!(isotypic_dimension(&f, &p("[3,2,1]")), 8);
        assert_eq!(isotypic_dimension(&f, &p("[4,2]")), 4);
        let single = PartitionFamily::new(vec![p("[3,2]")], 2).unwrap();
        assert_eq!(isotypic_dimension(&single, &p("[3,2]")), 5);
    }

    #[test]
    fn two_one_vectors() {
        let map = physical_basis_map(&p("[2,1]")).unwrap();
        let s2 = 2f64.sqrt();
        let s6 = 6f64.sqrt();
        let want = [
            (0, 1, ket_vec(3, &[("010", 1.0), ("100", -1.0)], s2)),
            (0, -1, ket_vec(3, &[("101", 1.0), ("011", -1.0)], s2)),
            (1, 1, ket_vec(3, &[("001", 2.0), ("100", -1.0), ("010", -1.0)], s6)),
            (1, -1, ket_vec(3, &[("110", 2.0), ("011", -1.0), ("101", -1.0)], s6)),
        ];
        for (t, m2, v) in want {
            assert!(max_diff(map.vector(t, m2).unwrap(), &v) < 1e-9, "T{t} m2={m2}");
        }
        for r in check_physical_basis_map(&map).unwrap() {
            assert!(r.passed, "{r:?}");
        }
        assert!(collective_noise_check(&map).passed);
    }

    #[test]
    fn two_two_vectors() {
        let map = physical_basis_map(&p("[2,2]")).unwrap();
        let a = ket_vec(4, &[("0101", 1.0), ("0110", -1.0), ("1001", -1.0), ("1010", 1.0)], 2.0);
        let b = ket_vec(
            4,
            &[("0011", 2.0), ("1100", 2.0), ("0101", -1.0), ("0110", -1.0), ("1001", -1.0), ("1010", -1.0)],
            12f64.sqrt(),
        );
        assert!(max_diff(map.vector(0, 0).unwrap(), &a) < 1e-9);
        assert!(max_diff(map.vector(1, 0).unwrap(), &b) < 1e-9);
        assert_eq!(map.vectors.len(), 2);
        assert!(collective_noise_check(&map).passed);
    }

    #[test]
    fn trivial_shape_map() {
        let map = physical_basis_map(&p("[3]")).unwrap();
        assert_eq!(map.vectors.len(), 4);
        assert!(collective_noise_check(&map).passed);
        for r in check_physical_basis_map(&map).unwrap() {
            assert!(r.passed);
        }
    }

    #[test]
    fn rejects_unsupported_shapes() {
        assert!(matches!(physical_basis_map(&p("[2,1,1]")), Err(Error::Unsupported(_))));
        assert!(matches!(physical_basis_map(&p("[6,5]")), Err(Error::SizeLimit { .. })));
    }

    #[test]
    fn views_list_nonzero_kets() {
        let map = physical_basis_map(&p("[2,1]")).unwrap();
        let views = map.views();
        assert_eq!(views[0].terms.len(), 2);
        assert_eq!(views[0].terms[0].ket, "010");
        assert_eq!(views[0].m, 0.5);
    }

    #[test]
    fn ququint_restriction() {
        let pairs = branching_restriction(&p("[3,2]")).unwrap();
        let rows = |t: &StandardTableau| t.rows().to_vec();
        let got: Vec<(Vec<Vec<usize>>, Vec<Vec<usize>>)> = pairs.iter().map(|(a, b)| (rows(b), rows(a))).collect();
        let want = vec![
            (vec![vec![1, 3], vec![2, 4]], vec![vec![1, 3, 5], vec![2, 4]]),
            (vec![vec![1, 2], vec![3, 4]], vec![vec![1, 2, 5], vec![3, 4]]),
            (vec![vec![1, 3, 4], vec![2]], vec![vec![1, 3, 4], vec![2, 5]]),
            (vec![vec![1, 2, 4], vec![3]], vec![vec![1, 2, 4], vec![3, 5]]),
            (vec![vec![1, 2, 3], vec![4]], vec![vec![1, 2, 3], vec![4, 5]]),
        ];
        for w in &want {
            assert!(got.contains(w), "{w:?}");
        }
        // The generators of S_4 act block-diagonally as [2,2] ⊕ [3,1].
        let big = YoungBasis::new(&p("[3,2]")).unwrap();
        let b22 = YoungBasis::new(&p("[2,2]")).unwrap();
        let b31 = YoungBasis::new(&p("[3,1]")).unwrap();
        for i in 1..4 {
            let q = big.adjacent(i);
            for (a, (ta, ra)) in pairs.iter().enumerate() {
                for (b, (tb, rb)) in pairs.iter().enumerate() {
                    let _ = (ta, tb);
                    let want = if ra.shape() != rb.shape() {
                        0.0
                    } else {
                        let small = if ra.shape() == &p("[2,2]") { &b22 } else { &b31 };
                        small.adjacent(i)[(small.index_of(ra).unwrap(), small.index_of(rb).unwrap())]
                    };
                    assert!((q[(a, b)] - want).abs() < 1e-12);
                }
            }
        }
    }
}
