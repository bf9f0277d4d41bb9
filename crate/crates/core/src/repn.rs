//! Young's orthogonal form, Jucys–Murphy matrices, the alternating intertwiner
//! between a shape and its conjugate, and numeric checks of their structure.

use std::collections::HashMap;
use std::fmt;

use nalgebra::DMatrix;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::partition::Partition;
use crate::tableau::{enumerate_standard_capped, StandardTableau, DEFAULT_ENUMERATION_CAP};

/// Default tolerance for single-matrix checks.
pub const ELEMENT_TOL: f64 = 1e-9;
/// Default tolerance for checks on composed products.
pub const PRODUCT_TOL: f64 = 1e-8;

/// Canonically ordered standard tableaux of a shape with an index by row word.
#[derive(Clone, Debug)]
pub struct YoungBasis {
    shape: Partition,
    tableaux: Vec<StandardTableau>,
    index: HashMap<Vec<usize>, usize>,
}

impl YoungBasis {
    pub fn new(shape: &Partition) -> Result<Self> {
        Self::with_cap(shape, DEFAULT_ENUMERATION_CAP)
    }

    pub fn with_cap(shape: &Partition, cap: usize) -> Result<Self> {
        let tableaux = enumerate_standard_capped(shape, cap)?;
        let index = tableaux.iter().enumerate().map(|(i, t)| (t.row_word(), i)).collect();
        Ok(YoungBasis { shape: shape.clone(), tableaux, index })
    }

    pub fn shape(&self) -> &Partition {
        &self.shape
    }

    pub fn tableaux(&self) -> &[StandardTableau] {
        &self.tableaux
    }

    pub fn dim(&self) -> usize {
        self.tableaux.len()
    }

    pub fn index_of(&self, t: &StandardTableau) -> Option<usize> {
        self.index.get(&t.row_word()).copied()
    }

    /// Matrix of `(i, i+1)` in Young's orthogonal form.
    pub fn adjacent(&self, i: usize) -> DMatrix<f64> {
        let dim = self.dim();
        let mut m = DMatrix::zeros(dim, dim);
        for (col, t) in self.tableaux.iter().enumerate() {
            let d = t.axial_distance(i, i + 1) as f64;
            m[(col, col)] = 1.0 / d;
            if let Some(s) = t.swap_adjacent(i) {
                let row = self.index_of(&s).expect("swapped tableau is in the basis");
                m[(row, col)] = (1.0 - 1.0 / (d * d)).sqrt();
            }
        }
        m
    }

    /// All adjacent generators `(1 2), …, (n−1 n)`, indexed from 0.
    pub fn generators(&self) -> Vec<DMatrix<f64>> {
        (1..self.shape.size()).map(|i| self.adjacent(i)).collect()
    }

    /// Image of a permutation as a product of generators along its bubble-sort word.
    pub fn permutation(&self, s: &Permutation) -> DMatrix<f64> {
        let gens = self.generators();
        let dim = self.dim();
        s.adjacent_word()
            .iter()
            .fold(DMatrix::identity(dim, dim), |acc, &i| acc * &gens[i - 1])
    }

    fn permutation_with(&self, gens: &[DMatrix<f64>], s: &Permutation) -> DMatrix<f64> {
        let dim = self.dim();
        s.adjacent_word()
            .iter()
            .fold(DMatrix::identity(dim, dim), |acc, &i| acc * &gens[i - 1])
    }

    /// Sum of `(i k)` over `i < k`.
    pub fn jucys_murphy(&self, k: usize) -> DMatrix<f64> {
        let gens = self.generators();
        self.jucys_murphy_with(&gens, k)
    }

    fn jucys_murphy_with(&self, gens: &[DMatrix<f64>], k: usize) -> DMatrix<f64> {
        let n = self.shape.size();
        let dim = self.dim();
        let mut m = DMatrix::zeros(dim, dim);
        for i in 1..k {
            m += self.permutation_with(gens, &Permutation::transposition(n, i, k));
        }
        m
    }
}

/// A dense real matrix over canonical tableau bases.
///
/// Columns are indexed by the tableaux of `shape`; rows by those of `target`,
/// which equals `shape` except for the intertwiner.
#[derive(Clone, Debug)]
pub struct RepMatrix {
    pub shape: Partition,
    pub target: Partition,
    pub basis: Vec<StandardTableau>,
    pub target_basis: Vec<StandardTableau>,
    pub entries: DMatrix<f64>,
}

impl RepMatrix {
    /// A square matrix over the basis of `basis`.
    pub fn square(basis: &YoungBasis, entries: DMatrix<f64>) -> Self {
        RepMatrix {
            shape: basis.shape.clone(),
            target: basis.shape.clone(),
            basis: basis.tableaux.clone(),
            target_basis: basis.tableaux.clone(),
            entries,
        }
    }

    pub fn dim(&self) -> usize {
        self.entries.nrows()
    }

    /// Row-major entries.
    pub fn rows(&self) -> Vec<Vec<f64>> {
        (0..self.entries.nrows())
            .map(|r| self.entries.row(r).iter().copied().collect())
            .collect()
    }

    /// Text rendering with the given number of decimals.
    pub fn render(&self, precision: usize) -> String {
        let width = precision + 4;
        let mut out = String::new();
        for row in self.rows() {
            let cells: Vec<String> = row.iter().map(|x| format!("{:>width$.precision$}", clean(*x))).collect();
            out.push_str(&cells.join(" "));
            out.push('\n');
        }
        out
    }
}

fn clean(x: f64) -> f64 {
    if x.abs() < 1e-15 {
        0.0
    } else {
        x
    }
}

#[derive(Serialize)]
struct RepMatrixJson<'a> {
    shape: &'a Partition,
    target: &'a Partition,
    basis: &'a [StandardTableau],
    target_basis: &'a [StandardTableau],
    entries: Vec<Vec<f64>>,
}

impl Serialize for RepMatrix {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        RepMatrixJson {
            shape: &self.shape,
            target: &self.target,
            basis: &self.basis,
            target_basis: &self.target_basis,
            entries: self.rows(),
        }
        .serialize(s)
    }
}

/// A permutation of `{1..n}` in one-line form: `image[i-1] = s(i)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Permutation {
    image: Vec<usize>,
}

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Permutation { image: (1..=n).collect() }
    }

    pub fn from_one_line(image: Vec<usize>) -> Result<Self> {
        let n = image.len();
        let mut seen = vec![false; n];
        for &x in &image {
            if x == 0 || x > n || seen[x - 1] {
                return Err(Error::InvalidPermutation(format!("{image:?} is not a bijection")));
            }
            seen[x - 1] = true;
        }
        Ok(Permutation { image })
    }

    /// The transposition `(a b)` of degree `n`.
    pub fn transposition(n: usize, a: usize, b: usize) -> Self {
        let mut image: Vec<usize> = (1..=n).collect();
        image.swap(a - 1, b - 1);
        Permutation { image }
    }

    /// Product `s_{w_1} s_{w_2} ⋯` of adjacent transpositions `s_i = (i i+1)`.
    pub fn from_adjacent_word(n: usize, word: &[usize]) -> Result<Self> {
        let mut p = Permutation::identity(n);
        for &i in word {
            if i == 0 || i >= n {
                return Err(Error::IndexOutOfRange { index: i, max: n.saturating_sub(1) });
            }
            p = p.compose(&Permutation::transposition(n, i, i + 1));
        }
        Ok(p)
    }

    /// Parses cycle notation such as `(1 3)(2 4)` or `(1,2,3)`; `()` is the identity.
    pub fn from_cycles(n: usize, text: &str) -> Result<Self> {
        let bad = || Error::InvalidPermutation(format!("cannot parse cycles {text:?}"));
        let mut image: Vec<usize> = (1..=n).collect();
        let mut seen = vec![false; n];
        let mut rest = text.trim();
        while !rest.is_empty() {
            let open = rest.strip_prefix('(').ok_or_else(bad)?;
            let close = open.find(')').ok_or_else(bad)?;
            let body = &open[..close];
            rest = open[close + 1..].trim_start();
            let cycle: Vec<usize> = body
                .split(|c: char| c == ',' || c.is_whitespace())
                .filter(|t| !t.is_empty())
                .map(|t| t.parse::<usize>().map_err(|_| bad()))
                .collect::<Result<_>>()?;
            for &x in &cycle {
                if x == 0 || x > n || seen[x - 1] {
                    return Err(Error::InvalidPermutation(format!(
                        "entry {x} repeated or outside 1..={n} in {text:?}"
                    )));
                }
                seen[x - 1] = true;
            }
            for (j, &x) in cycle.iter().enumerate() {
                image[x - 1] = cycle[(j + 1) % cycle.len()];
            }
        }
        Ok(Permutation { image })
    }

    pub fn degree(&self) -> usize {
        self.image.len()
    }

    pub fn apply(&self, i: usize) -> usize {
        self.image[i - 1]
    }

    pub fn one_line(&self) -> &[usize] {
        &self.image
    }

    /// `(self ∘ other)(i) = self(other(i))`.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        Permutation { image: other.image.iter().map(|&j| self.image[j - 1]).collect() }
    }

    pub fn inverse(&self) -> Permutation {
        let mut image = vec![0; self.image.len()];
        for (i, &x) in self.image.iter().enumerate() {
            image[x - 1] = i + 1;
        }
        Permutation { image }
    }

    /// Word `w` with `self = s_{w_1} s_{w_2} ⋯`, read off a bubble sort of the one-line form.
    pub fn adjacent_word(&self) -> Vec<usize> {
        let mut a = self.image.clone();
        let mut swaps = Vec::new();
        let n = a.len();
        for pass in 0..n {
            for j in 0..n.saturating_sub(pass + 1) {
                if a[j] > a[j + 1] {
                    a.swap(j, j + 1);
                    swaps.push(j + 1);
                }
            }
        }
        swaps.reverse();
        swaps
    }

    /// Sign `(−1)^{inversions}`.
    pub fn sign(&self) -> i32 {
        if self.adjacent_word().len() % 2 == 0 {
            1
        } else {
            -1
        }
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let n = self.image.len();
        let mut seen = vec![false; n];
        let mut any = false;
        for start in 1..=n {
            if seen[start - 1] || self.image[start - 1] == start {
                continue;
            }
            any = true;
            write!(f, "(")?;
            let mut x = start;
            let mut first = true;
            while !seen[x - 1] {
                seen[x - 1] = true;
                if !first {
                    write!(f, " ")?;
                }
                write!(f, "{x}")?;
                first = false;
                x = self.image[x - 1];
            }
            write!(f, ")")?;
        }
        if !any {
            write!(f, "()")?;
        }
        Ok(())
    }
}

/// Matrix of `(i, i+1)` on `shape` in Young's orthogonal form.
pub fn adjacent_matrix(shape: &Partition, i: usize) -> Result<RepMatrix> {
    let n = shape.size();
    if i == 0 || i >= n {
        return Err(Error::IndexOutOfRange { index: i, max: n.saturating_sub(1) });
    }
    let basis = YoungBasis::new(shape)?;
    let m = basis.adjacent(i);
    Ok(RepMatrix::square(&basis, m))
}

pub fn permutation_matrix(shape: &Partition, s: &Permutation) -> Result<RepMatrix> {
    if s.degree() != shape.size() {
        return Err(Error::DegreeMismatch { perm: s.degree(), shape: shape.size() });
    }
    let basis = YoungBasis::new(shape)?;
    let m = basis.permutation(s);
    Ok(RepMatrix::square(&basis, m))
}

pub fn jucys_murphy_matrix(shape: &Partition, k: usize) -> Result<RepMatrix> {
    let n = shape.size();
    if k == 0 || k > n {
        return Err(Error::IndexOutOfRange { index: k, max: n });
    }
    let basis = YoungBasis::new(shape)?;
    let m = basis.jucys_murphy(k);
    Ok(RepMatrix::square(&basis, m))
}

/// The map `T ↦ w(T) T′` from `shape` to its conjugate, `w(T)` the row-inversion sign.
pub fn alternating_intertwiner(shape: &Partition) -> Result<RepMatrix> {
    let src = YoungBasis::new(shape)?;
    let dst = YoungBasis::new(&shape.conjugate())?;
    let m = intertwiner_matrix(&src, &dst);
    Ok(RepMatrix {
        shape: shape.clone(),
        target: dst.shape.clone(),
        basis: src.tableaux.clone(),
        target_basis: dst.tableaux.clone(),
        entries: m,
    })
}

fn intertwiner_matrix(src: &YoungBasis, dst: &YoungBasis) -> DMatrix<f64> {
    let dim = src.dim();
    let mut m = DMatrix::zeros(dim, dim);
    for (col, t) in src.tableaux.iter().enumerate() {
        let row = dst.index_of(&t.transpose()).expect("transpose lies in the conjugate basis");
        m[(row, col)] = t.sign() as f64;
    }
    m
}

/// Outcome of one numeric check.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CheckReport {
    pub name: String,
    pub passed: bool,
    pub max_violation: f64,
    pub tolerance: f64,
    pub details: String,
}

impl CheckReport {
    pub fn new(name: impl Into<String>, max_violation: f64, tolerance: f64, details: impl Into<String>) -> Self {
        CheckReport {
            name: name.into(),
            passed: max_violation <= tolerance,
            max_violation,
            tolerance,
            details: details.into(),
        }
    }
}

/// Tolerances and cap used by [`verify_structure_with`].
#[derive(Clone, Copy, Debug)]
pub struct VerifyOptions {
    pub element_tol: f64,
    pub product_tol: f64,
    pub cap: usize,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions { element_tol: ELEMENT_TOL, product_tol: PRODUCT_TOL, cap: DEFAULT_ENUMERATION_CAP }
    }
}

fn max_abs(m: &DMatrix<f64>) -> f64 {
    m.iter().fold(0.0f64, |a, x| a.max(x.abs()))
}

/// Structural checks on the orthogonal form of `shape` with default tolerances.
pub fn verify_structure(shape: &Partition) -> Result<Vec<CheckReport>> {
    verify_structure_with(shape, &VerifyOptions::default())
}

/// Runs the checks:
/// orthogonality and involution of generators, braid and commutation relations,
/// Jucys–Murphy diagonality with content eigenvalues, the conjugation relation
/// `M ρ_λ(s) M⁻¹ = −ρ_λ′(s)ᵀ`, and for self-conjugate shapes the bilinear-form
/// condition `XᵀM + MX = 0` and the symmetry of `M`.
pub fn verify_structure_with(shape: &Partition, opts: &VerifyOptions) -> Result<Vec<CheckReport>> {
    let n = shape.size();
    if n > opts.cap {
        return Err(Error::SizeLimit { size: n, cap: opts.cap });
    }
    let basis = YoungBasis::with_cap(shape, opts.cap)?;
    let dim = basis.dim();
    let id = DMatrix::<f64>::identity(dim, dim);
    let gens = basis.generators();
    let label = shape.to_string();
    let mut reports = Vec::new();

    let mut orth = 0.0f64;
    let mut sym = 0.0f64;
    for q in &gens {
        orth = orth.max(max_abs(&(q.transpose() * q - &id)));
        orth = orth.max(max_abs(&(q * q - &id)));
        sym = sym.max(max_abs(&(q - q.transpose())));
    }
    reports.push(CheckReport::new(
        "generator-orthogonality",
        orth.max(sym),
        opts.element_tol,
        format!("{label}: QᵀQ = Q² = I and Q = Qᵀ for {} generators", gens.len()),
    ));

    let mut braid = 0.0f64;
    for i in 0..gens.len() {
        if i + 1 < gens.len() {
            let (a, b) = (&gens[i], &gens[i + 1]);
            braid = braid.max(max_abs(&(a * b * a - b * a * b)));
        }
        for j in i + 2..gens.len() {
            braid = braid.max(max_abs(&(&gens[i] * &gens[j] - &gens[j] * &gens[i])));
        }
    }
    reports.push(CheckReport::new(
        "braid-relations",
        braid,
        opts.product_tol,
        format!("{label}: braid and far-commutation relations"),
    ));

    let jm: Vec<DMatrix<f64>> = (1..=n).map(|k| basis.jucys_murphy_with(&gens, k)).collect();
    let mut jm_dev = 0.0f64;
    for (k, x) in jm.iter().enumerate() {
        for r in 0..dim {
            for c in 0..dim {
                let want = if r == c { basis.tableaux[c].content(k + 1) as f64 } else { 0.0 };
                jm_dev = jm_dev.max((x[(r, c)] - want).abs());
            }
        }
    }
    for a in 0..jm.len() {
        for b in a + 1..jm.len() {
            jm_dev = jm_dev.max(max_abs(&(&jm[a] * &jm[b] - &jm[b] * &jm[a])));
        }
    }
    reports.push(CheckReport::new(
        "jucys-murphy-contents",
        jm_dev,
        opts.element_tol,
        format!("{label}: X_k diagonal with content eigenvalues, pairwise commuting"),
    ));

    let conj_basis = YoungBasis::with_cap(&shape.conjugate(), opts.cap)?;
    let conj_gens = conj_basis.generators();
    let m = intertwiner_matrix(&basis, &conj_basis);
    let m_inv = m.transpose();
    let mut rel = max_abs(&(&m * &m_inv - &id));
    for (q, qc) in gens.iter().zip(&conj_gens) {
        rel = rel.max(max_abs(&(&m * q * &m_inv + qc.transpose())));
    }
    reports.push(CheckReport::new(
        "intertwiner-conjugation",
        rel,
        opts.product_tol,
        format!("{label}: M ρ(s) M⁻¹ = −ρ′(s)ᵀ on generators"),
    ));

    if shape.is_self_conjugate() {
        let transpositions: Vec<DMatrix<f64>> = (1..=n)
            .flat_map(|a| (a + 1..=n).map(move |b| (a, b)))
            .map(|(a, b)| basis.permutation_with(&gens, &Permutation::transposition(n, a, b)))
            .collect();
        let form = |x: &DMatrix<f64>| max_abs(&(x.transpose() * &m + &m * x));
        let mut osp = 0.0f64;
        let mut samples = 0usize;
        for i in 0..transpositions.len() {
            for j in i + 1..transpositions.len() {
                let (a, b) = (&transpositions[i], &transpositions[j]);
                osp = osp.max(form(&(a - b)));
                osp = osp.max(form(&(a * b - b * a)));
                samples += 2;
            }
        }
        if dim == 2 {
            let paulis = [
                DMatrix::from_row_slice(2, 2, &[0.0, 1.0, 1.0, 0.0]),
                DMatrix::from_row_slice(2, 2, &[0.0, -1.0, 1.0, 0.0]),
                DMatrix::from_row_slice(2, 2, &[1.0, 0.0, 0.0, -1.0]),
            ];
            for x in &paulis {
                osp = osp.max(form(x));
                samples += 1;
            }
        }
        reports.push(CheckReport::new(
            "intertwiner-form",
            osp,
            opts.product_tol,
            format!("{label}: XᵀM + MX = 0 on {samples} sample elements"),
        ));

        let b = shape.diagonal_length();
        let symmetric = (n - b) % 4 == 0;
        let dev = if symmetric {
            max_abs(&(&m - m.transpose()))
        } else {
            max_abs(&(&m + m.transpose()))
        };
        reports.push(CheckReport::new(
            "intertwiner-symmetry",
            dev,
            opts.element_tol,
            format!(
                "{label}: |λ| − b(λ) = {}, M expected {}",
                n - b,
                if symmetric { "symmetric" } else { "antisymmetric" }
            ),
        ));
    }
    Ok(reports)
}
