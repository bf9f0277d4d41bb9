//! Library kernels against independent brute-force computations.

use std::collections::BTreeMap;

use exuniv::lr::{lr_coefficient, lr_expand, multi_lr_expand, multi_lr_expand_unpruned, weyl_bounds};
use exuniv::partition::{partitions_bounded, partitions_of, Partition};
use exuniv::tableau::{dimension, enumerate_standard, weyl_dimension};

fn p(s: &str) -> Partition {
    s.parse().unwrap()
}

/// Counts standard fillings by trying every placement of 1..n cell by cell.
fn brute_standard_count(shape: &Partition) -> u128 {
    fn rec(filled: &mut Vec<usize>, shape: &[usize], k: usize, n: usize) -> u128 {
        if k == n {
            return 1;
        }
        let mut total = 0;
        for r in 0..shape.len() {
            let c = filled[r];
            if c < shape[r] && (r == 0 || filled[r - 1] > c) {
                filled[r] += 1;
                total += rec(filled, shape, k + 1, n);
                filled[r] -= 1;
            }
        }
        total
    }
    rec(&mut vec![0; shape.rows()], shape.parts(), 0, shape.size())
}

/// Counts semistandard fillings by entries 1..d, cell by cell in row-major order.
fn brute_weyl_count(shape: &Partition, d: usize) -> u128 {
    let cells: Vec<(usize, usize)> = shape.cells().collect();
    let mut grid: Vec<Vec<usize>> = shape.parts().iter().map(|&l| vec![0; l]).collect();
    fn rec(i: usize, cells: &[(usize, usize)], grid: &mut Vec<Vec<usize>>, d: usize) -> u128 {
        if i == cells.len() {
            return 1;
        }
        let (r, c) = cells[i];
        let lo_row = if c > 0 { grid[r][c - 1] } else { 1 };
        let lo_col = if r > 0 { grid[r - 1][c] + 1 } else { 1 };
        let lo = lo_row.max(lo_col).max(1);
        let mut total = 0;
        for v in lo..=d {
            grid[r][c] = v;
            total += rec(i + 1, cells, grid, d);
        }
        grid[r][c] = 0;
        total
    }
    rec(0, &cells, &mut grid, d)
}

/// Counts LR tableaux by filling every skew cell independently and checking
/// semistandardness, weight and the lattice condition on the reverse reading word.
fn brute_lr(lambda: &Partition, mu: &Partition, nu: &Partition) -> u64 {
    if nu.size() != lambda.size() + mu.size() || !lambda.is_contained_in(nu) {
        return 0;
    }
    let cells: Vec<(usize, usize)> = (0..nu.rows())
        .flat_map(|r| (lambda.part(r + 1)..nu.part(r + 1)).map(move |c| (r, c)))
        .collect();
    let k = mu.rows().max(1);
    let mut fill = vec![1usize; cells.len()];
    let mut count = 0;
    loop {
        let mut grid: BTreeMap<(usize, usize), usize> = BTreeMap::new();
        for (cell, &v) in cells.iter().zip(&fill) {
            grid.insert(*cell, v);
        }
        let semistandard = cells.iter().all(|&(r, c)| {
            let v = grid[&(r, c)];
            let left_ok = grid.get(&(r, c.wrapping_sub(1))).map_or(true, |&x| x <= v);
            let up_ok = r == 0 || grid.get(&(r - 1, c)).map_or(true, |&x| x < v);
            left_ok && up_ok
        });
        let mut weight = vec![0usize; k];
        for &v in &fill {
            weight[v - 1] += 1;
        }
        let weight_ok = (0..k).all(|i| weight[i] == mu.part(i + 1));
        let mut lattice = true;
        if semistandard && weight_ok {
            let mut seen = vec![0usize; k + 1];
            for r in 0..nu.rows() {
                for c in (lambda.part(r + 1)..nu.part(r + 1)).rev() {
                    let v = grid[&(r, c)];
                    seen[v] += 1;
                    if v > 1 && seen[v] > seen[v - 1] {
                        lattice = false;
                    }
                }
            }
            if lattice {
                count += 1;
            }
        }
        // Next filling in base k.
        let mut i = 0;
        loop {
            if i == fill.len() {
                return count;
            }
            if fill[i] < k {
                fill[i] += 1;
                break;
            }
            fill[i] = 1;
            i += 1;
        }
    }
}

#[test]
fn hook_length_matches_enumeration_up_to_twelve_cells() {
    for n in 0..=12 {
        for shape in partitions_of(n) {
            let d = dimension(&shape);
            assert_eq!(d, brute_standard_count(&shape), "{shape}");
            if n <= 9 {
                assert_eq!(enumerate_standard(&shape).unwrap().len() as u128, d, "{shape}");
            }
        }
    }
}

#[test]
fn hook_dimensions_are_binomials() {
    for n in 3..=12usize {
        for r in 1..n - 1 {
            let mut parts = vec![n - r];
            parts.extend(std::iter::repeat(1).take(r));
            let hook = Partition::new(parts).unwrap();
            let binom = (1..=r as u128).fold(1u128, |acc, i| acc * (n as u128 - i) / i);
            assert_eq!(dimension(&hook), binom, "{hook}");
        }
    }
}

#[test]
fn enumeration_has_no_duplicates() {
    for n in 1..=8 {
        for shape in partitions_of(n) {
            let ts = enumerate_standard(&shape).unwrap();
            let mut words: Vec<Vec<usize>> = ts.iter().map(|t| t.row_word()).collect();
            let sorted_desc = words.windows(2).all(|w| w[0] > w[1]);
            assert!(sorted_desc, "{shape}");
            words.dedup();
            assert_eq!(words.len(), ts.len());
        }
    }
}

#[test]
fn weyl_dimension_matches_enumeration() {
    for n in 0..=8 {
        for shape in partitions_of(n) {
            for d in 1..=4 {
                assert_eq!(weyl_dimension(&shape, d), brute_weyl_count(&shape, d), "{shape} d={d}");
            }
        }
    }
}

#[test]
fn schur_weyl_dimension_identity() {
    for n in 0..=8u32 {
        for d in [2usize, 3, 4] {
            let total: u128 = partitions_bounded(n as usize, n as usize, d)
                .iter()
                .map(|l| dimension(l) * weyl_dimension(l, d))
                .sum();
            assert_eq!(total, (d as u128).pow(n), "n={n} d={d}");
        }
    }
}

#[test]
fn lr_coefficients_match_brute_force() {
    for a in 0..=4 {
        for b in 0..=4 {
            for l in partitions_of(a) {
                for m in partitions_of(b) {
                    for nu in partitions_of(a + b) {
                        assert_eq!(lr_coefficient(&l, &m, &nu), brute_lr(&l, &m, &nu), "{l} {m} {nu}");
                    }
                }
            }
        }
    }
}

#[test]
fn expansion_agrees_with_coefficients() {
    for a in 1..=5 {
        for b in 1..=4 {
            for l in partitions_of(a) {
                for m in partitions_of(b) {
                    let e = lr_expand(&l, &m).unwrap();
                    for nu in partitions_of(a + b) {
                        let c = e.get(&nu).copied().unwrap_or(0);
                        assert_eq!(c, lr_coefficient(&l, &m, &nu), "{l} {m} {nu}");
                    }
                }
            }
        }
    }
}

#[test]
fn lr_symmetries_exhaustive() {
    for total in 0..=10 {
        for a in 0..=total {
            for l in partitions_of(a) {
                for m in partitions_of(total - a) {
                    let e = lr_expand(&l, &m).unwrap();
                    let swapped = lr_expand(&m, &l).unwrap();
                    assert_eq!(e, swapped, "{l} {m}");
                    let conj = lr_expand(&l.conjugate(), &m.conjugate()).unwrap();
                    for (nu, c) in &e {
                        assert_eq!(conj.get(&nu.conjugate()), Some(c), "{l} {m} {nu}");
                        for i in 1..=nu.rows() {
                            assert!(nu.part(i) >= l.part(i).max(m.part(i)));
                        }
                    }
                    assert_eq!(e.len(), conj.len());
                    assert_eq!(e.get(&l.partwise_sum(&m)), Some(&1));
                }
            }
        }
    }
}

#[test]
fn weyl_bounds_hold_exhaustively() {
    for total in 2..=10 {
        for a in 1..total {
            for l in partitions_of(a) {
                for m in partitions_of(total - a) {
                    for (nu, _) in lr_expand(&l, &m).unwrap() {
                        for d in nu.rows()..=nu.rows() + 1 {
                            if l.rows() > d || m.rows() > d {
                                continue;
                            }
                            for (k, (lo, hi)) in weyl_bounds(&l, &m, d).into_iter().enumerate() {
                                let v = nu.part(k + 1);
                                assert!(lo <= v && v <= hi, "{l} {m} {nu} d={d} k={}", k + 1);
                            }
                        }
                    }
                }
            }
        }
    }
}

#[test]
fn row_pruned_products_match_unpruned() {
    let fams: Vec<Vec<Partition>> = vec![
        vec![p("[2,1]"), p("[2,1]"), p("[2,1]")],
        vec![p("[2,2]"), p("[3,1,1]"), p("[2,1]")],
        vec![p("[3,2,1]"), p("[2,2]")],
        vec![p("[2,1]"), p("[2,1]"), p("[2,1]"), p("[2,1]")],
        vec![p("[4,1,1,1]"), p("[2,2]"), p("[2,2]")],
    ];
    for f in fams {
        for d in 2..=5 {
            assert_eq!(multi_lr_expand(&f, d, 30).unwrap(), multi_lr_expand_unpruned(&f, d), "{f:?} d={d}");
        }
    }
}
