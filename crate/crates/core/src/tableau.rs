//! Standard and semistandard Young tableaux: enumeration, counting, contents
//! and reconstruction from content vectors.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::partition::Partition;

/// Default cap on the number of cells for tableau enumeration.
pub const DEFAULT_ENUMERATION_CAP: usize = 20;

/// A standard Young tableau, stored as rows of entries `1..=n`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<Vec<usize>>", into = "Vec<Vec<usize>>")]
pub struct StandardTableau {
    shape: Partition,
    rows: Vec<Vec<usize>>,
    /// `pos[k-1]` is the 0-based `(row, col)` holding `k`.
    pos: Vec<(usize, usize)>,
}

impl StandardTableau {
    /// Builds a tableau from its rows, checking that it is standard.
    pub fn from_rows(rows: Vec<Vec<usize>>) -> Result<Self> {
        let shape = Partition::new(rows.iter().map(Vec::len).collect())
            .map_err(|_| Error::Parse(format!("rows {rows:?} do not form a diagram")))?;
        if rows.iter().any(Vec::is_empty) {
            return Err(Error::Parse(format!("empty row in {rows:?}")));
        }
        let n = shape.size();
        let mut pos = vec![(usize::MAX, usize::MAX); n];
        for (r, row) in rows.iter().enumerate() {
            for (c, &k) in row.iter().enumerate() {
                if k == 0 || k > n || pos[k - 1].0 != usize::MAX {
                    return Err(Error::Parse(format!("{rows:?} is not a filling by 1..{n}")));
                }
                pos[k - 1] = (r, c);
                let left_ok = c == 0 || row[c - 1] < k;
                let up_ok = r == 0 || rows[r - 1][c] < k;
                if !left_ok || !up_ok {
                    return Err(Error::Parse(format!("{rows:?} is not standard")));
                }
            }
        }
        Ok(StandardTableau { shape, rows, pos })
    }

    fn from_positions(shape: &Partition, pos: Vec<(usize, usize)>) -> Self {
        let mut rows: Vec<Vec<usize>> = shape.parts().iter().map(|&l| vec![0; l]).collect();
        for (k, &(r, c)) in pos.iter().enumerate() {
            rows[r][c] = k + 1;
        }
        StandardTableau { shape: shape.clone(), rows, pos }
    }

    pub fn shape(&self) -> &Partition {
        &self.shape
    }

    pub fn rows(&self) -> &[Vec<usize>] {
        &self.rows
    }

    pub fn size(&self) -> usize {
        self.pos.len()
    }

    /// 0-based row of entry `k`.
    pub fn row_of(&self, k: usize) -> usize {
        self.pos[k - 1].0
    }

    /// 0-based column of entry `k`.
    pub fn col_of(&self, k: usize) -> usize {
        self.pos[k - 1].1
    }

    /// The word `(r_T(1), …, r_T(n))` of 0-based row indices.
    pub fn row_word(&self) -> Vec<usize> {
        self.pos.iter().map(|&(r, _)| r).collect()
    }

    /// Content `c_T(k) − r_T(k)` of entry `k`.
    pub fn content(&self, k: usize) -> i64 {
        let (r, c) = self.pos[k - 1];
        c as i64 - r as i64
    }

    /// Axial distance `content(j) − content(i)`.
    pub fn axial_distance(&self, i: usize, j: usize) -> i64 {
        self.content(j) - self.content(i)
    }

    pub fn content_vector(&self) -> ContentVector {
        ContentVector { values: (1..=self.size()).map(|k| self.content(k)).collect() }
    }

    /// Number of pairs `i < j` with `r_T(i) > r_T(j)`.
    pub fn row_inversions(&self) -> usize {
        let w = self.row_word();
        let mut inv = 0;
        for i in 0..w.len() {
            for j in i + 1..w.len() {
                if w[i] > w[j] {
                    inv += 1;
                }
            }
        }
        inv
    }

    /// The sign `(−1)^{row inversions}`.
    pub fn sign(&self) -> i32 {
        if self.row_inversions() % 2 == 0 {
            1
        } else {
            -1
        }
    }

    pub fn transpose(&self) -> StandardTableau {
        let pos = self.pos.iter().map(|&(r, c)| (c, r)).collect();
        StandardTableau::from_positions(&self.shape.conjugate(), pos)
    }

    /// The tableau with `i` and `i+1` exchanged, if that is still standard.
    pub fn swap_adjacent(&self, i: usize) -> Option<StandardTableau> {
        let (a, b) = (self.pos[i - 1], self.pos[i]);
        if a.0 == b.0 || a.1 == b.1 {
            return None;
        }
        let mut pos = self.pos.clone();
        pos.swap(i - 1, i);
        Some(StandardTableau::from_positions(&self.shape, pos))
    }

    /// The tableau with entry `n` removed.
    pub fn remove_largest(&self) -> StandardTableau {
        let mut pos = self.pos.clone();
        let (r, _) = pos.pop().expect("nonempty tableau");
        let mut parts = self.shape.parts().to_vec();
        parts[r] -= 1;
        StandardTableau::from_positions(&Partition::from_unsorted(parts), pos)
    }
}

impl TryFrom<Vec<Vec<usize>>> for StandardTableau {
    type Error = Error;
    fn try_from(rows: Vec<Vec<usize>>) -> Result<Self> {
        StandardTableau::from_rows(rows)
    }
}

impl From<StandardTableau> for Vec<Vec<usize>> {
    fn from(t: StandardTableau) -> Self {
        t.rows
    }
}

impl fmt::Display for StandardTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, row) in self.rows.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "[")?;
            for (j, k) in row.iter().enumerate() {
                if j > 0 {
                    write!(f, ",")?;
                }
                write!(f, "{k}")?;
            }
            write!(f, "]")?;
        }
        write!(f, "]")
    }
}

/// The sequence of contents `(x_1, …, x_n)` of a standard tableau.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ContentVector {
    pub values: Vec<i64>,
}

/// All standard tableaux of `shape` in canonical order, with the default cap.
pub fn enumerate_standard(shape: &Partition) -> Result<Vec<StandardTableau>> {
    enumerate_standard_capped(shape, DEFAULT_ENUMERATION_CAP)
}

/// All standard tableaux of `shape` in canonical order.
///
/// Canonical order sorts by the row word `(r_T(1), …, r_T(n))`, lexicographically
/// descending, so `[[1,3],[2]]` precedes `[[1,2],[3]]`.
pub fn enumerate_standard_capped(shape: &Partition, cap: usize) -> Result<Vec<StandardTableau>> {
    let n = shape.size();
    if n > cap {
        return Err(Error::SizeLimit { size: n, cap });
    }
    let mut out = Vec::new();
    let mut pos = vec![(0, 0); n];
    let mut lens = shape.parts().to_vec();
    place(&mut lens, n, &mut pos, &mut |p| out.push(StandardTableau::from_positions(shape, p.to_vec())));
    out.sort_by_cached_key(|t| std::cmp::Reverse(t.row_word()));
    Ok(out)
}

/// Places `k, k−1, …, 1` at removable corners of the shape `lens`.
fn place(lens: &mut Vec<usize>, k: usize, pos: &mut [(usize, usize)], emit: &mut impl FnMut(&[(usize, usize)])) {
    if k == 0 {
        emit(pos);
        return;
    }
    for r in 0..lens.len() {
        let l = lens[r];
        if l == 0 {
            continue;
        }
        let next = lens.get(r + 1).copied().unwrap_or(0);
        if l > next {
            lens[r] -= 1;
            pos[k - 1] = (r, l - 1);
            place(lens, k - 1, pos, emit);
            lens[r] += 1;
        }
    }
}

/// Number of standard tableaux, by the hook-length formula.
pub fn dimension(shape: &Partition) -> u128 {
    let n = shape.size();
    let num: Vec<u128> = (1..=n as u128).collect();
    let den: Vec<u128> = shape.cells().map(|(r, c)| shape.hook_length(r, c) as u128).collect();
    exact_quotient(num, den)
}

/// Number of semistandard tableaux with entries in `1..=d`.
pub fn weyl_dimension(shape: &Partition, d: usize) -> u128 {
    if shape.rows() > d {
        return 0;
    }
    let num: Vec<u128> = shape.cells().map(|(r, c)| (d + c - r) as u128).collect();
    let den: Vec<u128> = shape.cells().map(|(r, c)| shape.hook_length(r, c) as u128).collect();
    exact_quotient(num, den)
}

/// Computes `Π num / Π den`, known to be an integer, without overflow at desk scale.
fn exact_quotient(mut num: Vec<u128>, den: Vec<u128>) -> u128 {
    for mut h in den {
        for x in num.iter_mut() {
            if h == 1 {
                break;
            }
            let g = gcd(*x, h);
            *x /= g;
            h /= g;
        }
        debug_assert_eq!(h, 1);
    }
    num.into_iter().product()
}

fn gcd(mut a: u128, mut b: u128) -> u128 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// Count of semistandard fillings of a shape by `1..=d`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WeylTableauCount {
    pub shape: Partition,
    pub d: usize,
    pub count: u128,
}

pub fn weyl_tableau_count(shape: &Partition, d: usize) -> WeylTableauCount {
    WeylTableauCount { shape: shape.clone(), d, count: weyl_dimension(shape, d) }
}

/// Content of entry `k` in `t`.
pub fn content(t: &StandardTableau, k: usize) -> i64 {
    t.content(k)
}

/// Axial distance `content(j) − content(i)` in `t`.
pub fn axial_distance(t: &StandardTableau, i: usize, j: usize) -> i64 {
    t.axial_distance(i, j)
}

/// Rebuilds the unique standard tableau with the given content vector.
pub fn tableau_from_content_vector(cv: &ContentVector) -> Result<StandardTableau> {
    let bad = || Error::Inconsistent(cv.values.clone());
    let mut rows: Vec<usize> = Vec::new();
    let mut pos = Vec::with_capacity(cv.values.len());
    for &x in &cv.values {
        // Cells on diagonal x fill from the top-left; the next one sits after the
        // cells already there.
        let on_diag = pos.iter().filter(|&&(r, c): &&(usize, usize)| c as i64 - r as i64 == x).count();
        let (r, c) = if x >= 0 {
            (on_diag, on_diag + x as usize)
        } else {
            (on_diag + (-x) as usize, on_diag)
        };
        let row_len = rows.get(r).copied().unwrap_or(0);
        if row_len != c {
            return Err(bad());
        }
        if r > 0 && rows.get(r - 1).copied().unwrap_or(0) <= c {
            return Err(bad());
        }
        if r == rows.len() {
            rows.push(0);
        } else if r > rows.len() {
            return Err(bad());
        }
        rows[r] += 1;
        pos.push((r, c));
    }
    let shape = Partition::new(rows).map_err(|_| bad())?;
    Ok(StandardTableau::from_positions(&shape, pos))
}
