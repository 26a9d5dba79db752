//! Exact integer/rational linear algebra over a lattice with a symmetric
//! bilinear form: pairings, restricted Gram matrices, determinants, inertia,
//! dual bases, saturated orthogonal complements and generation tests.
//!
//! The intersection form of a rational surface is the running example: a
//! unimodular symmetric form of signature `(1, rank-1)`.

use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::arith::{self, Int, Rat};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum LatticeError {
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("matrix is not symmetric")]
    NotSymmetric,
    #[error("matrix is not square")]
    NotSquare,
    #[error("Gram matrix of the given vectors is singular")]
    SingularGram,
    #[error("candidate vector lies outside the rational span of the sublattice")]
    CandidateOutsideSublattice,
}

pub type Result<T> = std::result::Result<T, LatticeError>;

/// Divisor class in the ambient basis, with integer coordinates.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct ClassVector {
    #[serde(with = "arith::serde_int_vec")]
    pub coords: Vec<Int>,
}

impl ClassVector {
    pub fn new(coords: Vec<Int>) -> Self {
        ClassVector { coords }
    }

    pub fn from_i64(coords: &[i64]) -> Self {
        ClassVector::new(arith::ints(coords))
    }

    pub fn zero(rank: usize) -> Self {
        ClassVector::new(vec![Int::zero(); rank])
    }

    pub fn rank(&self) -> usize {
        self.coords.len()
    }

    pub fn is_zero(&self) -> bool {
        arith::is_zero_vec(&self.coords)
    }

    pub fn add(&self, other: &ClassVector) -> ClassVector {
        ClassVector::new(
            self.coords
                .iter()
                .zip(&other.coords)
                .map(|(a, b)| a + b)
                .collect(),
        )
    }

    pub fn sub(&self, other: &ClassVector) -> ClassVector {
        ClassVector::new(
            self.coords
                .iter()
                .zip(&other.coords)
                .map(|(a, b)| a - b)
                .collect(),
        )
    }

    pub fn neg(&self) -> ClassVector {
        ClassVector::new(arith::neg_vec(&self.coords))
    }

    pub fn scale(&self, c: &Int) -> ClassVector {
        ClassVector::new(self.coords.iter().map(|a| a * c).collect())
    }
}

/// Divisor class with rational coordinates (dual-basis elements before
/// integrality is confirmed). Coordinates are kept in lowest terms with
/// positive denominators, which `BigRational` maintains by construction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RationalClassVector {
    pub coords: Vec<Rat>,
}

impl RationalClassVector {
    pub fn new(coords: Vec<Rat>) -> Self {
        RationalClassVector { coords }
    }

    pub fn from_integer(v: &ClassVector) -> Self {
        RationalClassVector::new(arith::rat_vec(&v.coords))
    }

    pub fn rank(&self) -> usize {
        self.coords.len()
    }

    /// True when every coordinate is an integer.
    pub fn is_integral(&self) -> bool {
        arith::all_integral(&self.coords)
    }

    /// Integer form of an integral vector; `None` when any coordinate has a
    /// nontrivial denominator.
    pub fn to_integer(&self) -> Option<ClassVector> {
        if !self.is_integral() {
            return None;
        }
        Some(ClassVector::new(
            self.coords.iter().map(|x| x.numer().clone()).collect(),
        ))
    }
}

/// Symmetric integer Gram matrix of a fixed ambient basis of the lattice.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct IntersectionForm {
    pub rank: usize,
    pub basis_labels: Vec<String>,
    #[serde(with = "arith::serde_int_mat")]
    pub gram: Vec<Vec<Int>>,
}

impl IntersectionForm {
    /// Builds a form, checking symmetry and dimension consistency.
    pub fn new(basis_labels: Vec<String>, gram: Vec<Vec<Int>>) -> Result<Self> {
        let rank = gram.len();
        if basis_labels.len() != rank {
            return Err(LatticeError::DimensionMismatch {
                expected: rank,
                got: basis_labels.len(),
            });
        }
        for row in &gram {
            if row.len() != rank {
                return Err(LatticeError::NotSquare);
            }
        }
        for i in 0..rank {
            for j in 0..i {
                if gram[i][j] != gram[j][i] {
                    return Err(LatticeError::NotSymmetric);
                }
            }
        }
        Ok(IntersectionForm {
            rank,
            basis_labels,
            gram,
        })
    }

    pub fn diagonal(labels: Vec<String>, diag: &[i64]) -> Self {
        let rank = diag.len();
        let mut gram = vec![vec![Int::zero(); rank]; rank];
        for (i, &d) in diag.iter().enumerate() {
            gram[i][i] = Int::from(d);
        }
        IntersectionForm::new(labels, gram).expect("diagonal form is symmetric")
    }

    fn check_rank(&self, v: &ClassVector) -> Result<()> {
        if v.rank() != self.rank {
            return Err(LatticeError::DimensionMismatch {
                expected: self.rank,
                got: v.rank(),
            });
        }
        Ok(())
    }

    /// The intersection product `u . v = u^T G v`.
    pub fn pair(&self, u: &ClassVector, v: &ClassVector) -> Result<Int> {
        self.check_rank(u)?;
        self.check_rank(v)?;
        let mut acc = Int::zero();
        for (i, ui) in u.coords.iter().enumerate() {
            if ui.is_zero() {
                continue;
            }
            acc += ui * arith::dot(&self.gram[i], &v.coords);
        }
        Ok(acc)
    }

    pub fn self_pair(&self, v: &ClassVector) -> Result<Int> {
        self.pair(v, v)
    }

    /// `u . v` where `v` has rational coordinates.
    pub fn pair_rational(&self, u: &ClassVector, v: &RationalClassVector) -> Result<Rat> {
        if u.rank() != self.rank || v.rank() != self.rank {
            return Err(LatticeError::DimensionMismatch {
                expected: self.rank,
                got: u.rank().max(v.rank()),
            });
        }
        let mut acc = Rat::zero();
        for (i, ui) in u.coords.iter().enumerate() {
            if ui.is_zero() {
                continue;
            }
            let mut row = Rat::zero();
            for (g, x) in self.gram[i].iter().zip(&v.coords) {
                row += x * g;
            }
            acc += row * Rat::from_integer(ui.clone());
        }
        Ok(acc)
    }

    /// Restricted Gram matrix `[v_i . v_j]`.
    pub fn gram_of(&self, vectors: &[ClassVector]) -> Result<Vec<Vec<Int>>> {
        for v in vectors {
            self.check_rank(v)?;
        }
        let k = vectors.len();
        let mut out = vec![vec![Int::zero(); k]; k];
        for i in 0..k {
            for j in 0..=i {
                let p = self.pair(&vectors[i], &vectors[j])?;
                out[i][j] = p.clone();
                out[j][i] = p;
            }
        }
        Ok(out)
    }

    /// The functional `x -> x . v` as a plain coordinate covector `G v`.
    pub fn functional(&self, v: &ClassVector) -> Result<Vec<Int>> {
        self.check_rank(v)?;
        Ok((0..self.rank)
            .map(|i| arith::dot(&self.gram[i], &v.coords))
            .collect())
    }

    /// Recovers the class `h` with `G h = covector`. Exact only when the
    /// form is unimodular, which holds for every Picard lattice here.
    pub fn class_of_functional(&self, covector: &[Int]) -> Result<ClassVector> {
        if covector.len() != self.rank {
            return Err(LatticeError::DimensionMismatch {
                expected: self.rank,
                got: covector.len(),
            });
        }
        let rhs: Vec<Vec<Rat>> = covector
            .iter()
            .map(|c| vec![Rat::from_integer(c.clone())])
            .collect();
        let sol = solve_rational(&self.gram, &rhs).ok_or(LatticeError::SingularGram)?;
        let coords: Vec<Rat> = sol.into_iter().map(|row| row[0].clone()).collect();
        RationalClassVector::new(coords)
            .to_integer()
            .ok_or(LatticeError::SingularGram)
    }

    /// Gram-inverse dual basis: vectors `B*_i` with `B*_i . B_j = delta_ij`.
    pub fn dual_basis(&self, basis: &[ClassVector]) -> Result<Vec<RationalClassVector>> {
        if basis.len() != self.rank {
            return Err(LatticeError::DimensionMismatch {
                expected: self.rank,
                got: basis.len(),
            });
        }
        let gram = self.gram_of(basis)?;
        let inv = invert_rational(&gram).ok_or(LatticeError::SingularGram)?;
        // B*_i = sum_k inv[i][k] B_k, expressed in ambient coordinates.
        let mut duals = Vec::with_capacity(self.rank);
        for row in &inv {
            let mut coords = vec![Rat::zero(); self.rank];
            for (c, b) in row.iter().zip(basis) {
                if c.is_zero() {
                    continue;
                }
                for (acc, x) in coords.iter_mut().zip(&b.coords) {
                    *acc += c * x;
                }
            }
            duals.push(RationalClassVector::new(coords));
        }
        Ok(duals)
    }

    /// Basis of the saturated sublattice `{x : x . v = 0 for all v}`.
    ///
    /// The integer kernel of a pairing map is automatically saturated; the
    /// returned basis is the Hermite-reduced canonical one.
    pub fn orthogonal_complement(&self, vectors: &[ClassVector]) -> Result<Vec<ClassVector>> {
        let mut rows = Vec::with_capacity(vectors.len());
        for v in vectors {
            rows.push(self.functional(v)?);
        }
        let kernel = integer_kernel(&rows, self.rank);
        Ok(kernel.into_iter().map(ClassVector::new).collect())
    }

    /// Tests whether the integer span of `candidates` equals the sublattice
    /// spanned by `sublattice_basis`, with the index (determinant ratio of
    /// the two lattices) as certificate.
    pub fn is_generated_by(
        &self,
        sublattice_basis: &[ClassVector],
        candidates: &[ClassVector],
    ) -> Result<GenerationCertificate> {
        for v in sublattice_basis.iter().chain(candidates) {
            self.check_rank(v)?;
        }
        let k = sublattice_basis.len();
        if k == 0 {
            let all_zero = candidates.iter().all(ClassVector::is_zero);
            return if all_zero {
                Ok(GenerationCertificate {
                    generates: true,
                    index: Some(Rat::one()),
                })
            } else {
                Err(LatticeError::CandidateOutsideSublattice)
            };
        }

        // Coordinates of each candidate with respect to the sublattice basis,
        // solved over the rationals in the ambient space.
        let basis_cols: Vec<Vec<Rat>> = (0..self.rank)
            .map(|i| {
                (0..k)
                    .map(|j| Rat::from_integer(sublattice_basis[j].coords[i].clone()))
                    .collect()
            })
            .collect();
        let mut coord_rows: Vec<Vec<Rat>> = Vec::with_capacity(candidates.len());
        for c in candidates {
            let rhs = arith::rat_vec(&c.coords);
            let coeffs = solve_overdetermined(&basis_cols, &rhs)
                .ok_or(LatticeError::CandidateOutsideSublattice)?;
            coord_rows.push(coeffs);
        }

        // The candidates generate the sublattice iff the lattice spanned by
        // the coordinate rows is all of Z^k.
        let mut scale = Int::one();
        for row in &coord_rows {
            for x in row {
                scale = scale.lcm(x.denom());
            }
        }
        let integer_rows: Vec<Vec<Int>> = coord_rows
            .iter()
            .map(|row| row.iter().map(|x| x.numer() * (&scale / x.denom())).collect())
            .collect();
        let h = hermite_normal_form(&integer_rows);
        if h.len() < k {
            return Ok(GenerationCertificate {
                generates: false,
                index: None,
            });
        }
        // det of the row lattice in the scaled coordinates, divided by the
        // scale per dimension, gives the true index.
        let mut det = Rat::one();
        for (i, row) in h.iter().enumerate() {
            det *= Rat::new(row[i].clone(), scale.clone());
        }
        let det = det.abs();
        Ok(GenerationCertificate {
            generates: det.is_one(),
            index: Some(det),
        })
    }
}

/// Outcome of [`IntersectionForm::is_generated_by`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GenerationCertificate {
    pub generates: bool,
    /// `[sublattice : candidate span]` as a determinant ratio; `None` when
    /// the candidates do not span the sublattice rationally.
    pub index: Option<Rat>,
}

/// Inertia of a symmetric matrix: `(positives, negatives, zeros)`.
pub fn signature(matrix: &[Vec<Int>]) -> Result<(usize, usize, usize)> {
    check_symmetric(matrix)?;
    let n = matrix.len();
    let mut a: Vec<Vec<Rat>> = matrix
        .iter()
        .map(|row| arith::rat_vec(row))
        .collect();

    let mut pos = 0usize;
    let mut neg = 0usize;
    let mut active: Vec<usize> = (0..n).collect();

    // Symmetric Gaussian reduction with exact pivoting; a zero diagonal with
    // a nonzero off-diagonal entry is handled by the congruence move
    // row_i += row_j / col_i += col_j, which makes the diagonal nonzero.
    while !active.is_empty() {
        let pivot = active.iter().copied().find(|&i| !a[i][i].is_zero());
        let pivot = match pivot {
            Some(p) => p,
            None => {
                let mut found = None;
                'outer: for (s, &i) in active.iter().enumerate() {
                    for &j in &active[s + 1..] {
                        if !a[i][j].is_zero() {
                            found = Some((i, j));
                            break 'outer;
                        }
                    }
                }
                match found {
                    Some((i, j)) => {
                        for col in 0..n {
                            let v = a[j][col].clone();
                            a[i][col] += v;
                        }
                        for row in 0..n {
                            let v = a[row][j].clone();
                            a[row][i] += v;
                        }
                        i
                    }
                    None => break, // remaining block is zero
                }
            }
        };

        if a[pivot][pivot].is_positive() {
            pos += 1;
        } else {
            neg += 1;
        }

        let others: Vec<usize> = active.iter().copied().filter(|&i| i != pivot).collect();
        let d = a[pivot][pivot].clone();
        for &i in &others {
            if a[i][pivot].is_zero() {
                continue;
            }
            let f = &a[i][pivot] / &d;
            for col in 0..n {
                let v = &a[pivot][col] * &f;
                a[i][col] -= v;
            }
            for row in 0..n {
                let v = &a[row][pivot] * &f;
                a[row][i] -= v;
            }
        }
        active = others;
    }

    let zeros = n - pos - neg;
    Ok((pos, neg, zeros))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Definiteness {
    NegativeDefinite,
    NegativeSemidefinite,
    Other,
}

pub fn definiteness(matrix: &[Vec<Int>]) -> Result<Definiteness> {
    let n = matrix.len();
    let (pos, neg, zeros) = signature(matrix)?;
    Ok(if pos == 0 && zeros == 0 && neg == n {
        Definiteness::NegativeDefinite
    } else if pos == 0 && zeros > 0 {
        Definiteness::NegativeSemidefinite
    } else {
        Definiteness::Other
    })
}

/// Exact determinant by fraction-free (Bareiss) elimination.
pub fn determinant(matrix: &[Vec<Int>]) -> Result<Int> {
    let n = matrix.len();
    for row in matrix {
        if row.len() != n {
            return Err(LatticeError::NotSquare);
        }
    }
    if n == 0 {
        return Ok(Int::one());
    }
    let mut a: Vec<Vec<Int>> = matrix.to_vec();
    let mut sign = 1i32;
    let mut prev = Int::one();
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            match (k + 1..n).find(|&r| !a[r][k].is_zero()) {
                Some(r) => {
                    a.swap(k, r);
                    sign = -sign;
                }
                None => return Ok(Int::zero()),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = &a[i][j] * &a[k][k] - &a[i][k] * &a[k][j];
                a[i][j] = &num / &prev;
            }
        }
        prev = a[k][k].clone();
    }
    let mut det = a[n - 1][n - 1].clone();
    if sign < 0 {
        det = -det;
    }
    Ok(det)
}

pub fn is_unimodular(matrix: &[Vec<Int>]) -> Result<bool> {
    let det = determinant(matrix)?;
    Ok(det.abs().is_one())
}

fn check_symmetric(matrix: &[Vec<Int>]) -> Result<()> {
    let n = matrix.len();
    for row in matrix {
        if row.len() != n {
            return Err(LatticeError::NotSquare);
        }
    }
    for i in 0..n {
        for j in 0..i {
            if matrix[i][j] != matrix[j][i] {
                return Err(LatticeError::NotSymmetric);
            }
        }
    }
    Ok(())
}

/// Solves `A X = B` for square rational `A` given as integer matrix; `None`
/// when `A` is singular.
fn solve_rational(a: &[Vec<Int>], b: &[Vec<Rat>]) -> Option<Vec<Vec<Rat>>> {
    let n = a.len();
    let cols = if n == 0 { 0 } else { b[0].len() };
    let mut m: Vec<Vec<Rat>> = (0..n)
        .map(|i| {
            let mut row = arith::rat_vec(&a[i]);
            row.extend(b[i].iter().cloned());
            row
        })
        .collect();

    for col in 0..n {
        let pivot = (col..n).find(|&r| !m[r][col].is_zero())?;
        m.swap(col, pivot);
        let d = m[col][col].clone();
        for x in m[col].iter_mut() {
            *x = &*x / &d;
        }
        for r in 0..n {
            if r == col || m[r][col].is_zero() {
                continue;
            }
            let f = m[r][col].clone();
            let (head, tail) = m.split_at_mut(r.max(col));
            let (src, dst) = if r > col {
                (&head[col], &mut tail[0])
            } else {
                (&tail[0], &mut head[r])
            };
            for (x, s) in dst.iter_mut().zip(src.iter()) {
                *x -= &f * s;
            }
        }
    }
    Some(
        (0..n)
            .map(|i| m[i][n..n + cols].to_vec())
            .collect(),
    )
}

fn invert_rational(a: &[Vec<Int>]) -> Option<Vec<Vec<Rat>>> {
    let n = a.len();
    let id: Vec<Vec<Rat>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| if i == j { Rat::one() } else { Rat::zero() })
                .collect()
        })
        .collect();
    solve_rational(a, &id)
}

/// Least-squares-free exact solve of the overdetermined system
/// `basis_cols * x = rhs` (rows indexed by ambient coordinates); `None`
/// when inconsistent.
fn solve_overdetermined(rows: &[Vec<Rat>], rhs: &[Rat]) -> Option<Vec<Rat>> {
    let m = rows.len();
    let k = if m == 0 { 0 } else { rows[0].len() };
    let mut aug: Vec<Vec<Rat>> = (0..m)
        .map(|i| {
            let mut row = rows[i].clone();
            row.push(rhs[i].clone());
            row
        })
        .collect();

    let mut pivot_row = 0usize;
    let mut pivots: Vec<usize> = Vec::new();
    for col in 0..k {
        let r = (pivot_row..m).find(|&r| !aug[r][col].is_zero());
        let r = match r {
            Some(r) => r,
            None => continue,
        };
        aug.swap(pivot_row, r);
        let d = aug[pivot_row][col].clone();
        for x in aug[pivot_row].iter_mut() {
            *x = &*x / &d;
        }
        for rr in 0..m {
            if rr == pivot_row || aug[rr][col].is_zero() {
                continue;
            }
            let f = aug[rr][col].clone();
            let src = aug[pivot_row].clone();
            for (x, s) in aug[rr].iter_mut().zip(&src) {
                *x -= &f * s;
            }
        }
        pivots.push(col);
        pivot_row += 1;
        if pivot_row == m {
            break;
        }
    }
    // Consistency: no row of the form (0 ... 0 | nonzero).
    for row in &aug[pivot_row..] {
        if row[..k].iter().all(Zero::is_zero) && !row[k].is_zero() {
            return None;
        }
    }
    // Free variables would make the solution non-unique; the callers only
    // pass linearly independent bases, but guard anyway by setting them to 0.
    let mut x = vec![Rat::zero(); k];
    for (r, &col) in pivots.iter().enumerate() {
        x[col] = aug[r][k].clone();
    }
    // Verify (free variables at zero must still satisfy the system).
    for (row, b) in rows.iter().zip(rhs) {
        let mut acc = Rat::zero();
        for (a, xi) in row.iter().zip(&x) {
            acc += a * xi;
        }
        if &acc != b {
            return None;
        }
    }
    Some(x)
}

/// Basis of `{x in Z^n : rows * x = 0}`, Hermite-reduced for determinism.
/// The kernel of an integer matrix is saturated by construction.
pub fn integer_kernel(rows: &[Vec<Int>], n: usize) -> Vec<Vec<Int>> {
    // Column reduction of `rows` while tracking the unimodular column
    // transform on an identity block.
    let m = rows.len();
    let mut a: Vec<Vec<Int>> = rows.to_vec();
    let mut u: Vec<Vec<Int>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| if i == j { Int::one() } else { Int::zero() })
                .collect()
        })
        .collect();
    // u is kept column-major conceptually: u[i][j] = entry (i, j); column
    // operations act on the j index of both a and u.
    let mut pivot_cols: Vec<usize> = Vec::new();
    let mut next_col = 0usize;
    for row in 0..m {
        if next_col >= n {
            break;
        }
        loop {
            // Euclidean reduction across the free columns of this row.
            let mut min_col: Option<usize> = None;
            for j in next_col..n {
                if a[row][j].is_zero() {
                    continue;
                }
                min_col = match min_col {
                    None => Some(j),
                    Some(mc) => {
                        if a[row][j].abs() < a[row][mc].abs() {
                            Some(j)
                        } else {
                            Some(mc)
                        }
                    }
                };
            }
            let mc = match min_col {
                Some(mc) => mc,
                None => break, // row already zero on free columns
            };
            let mut finished = true;
            for j in next_col..n {
                if j == mc || a[row][j].is_zero() {
                    continue;
                }
                let q = div_round(&a[row][j], &a[row][mc]);
                if !q.is_zero() {
                    for r in 0..m {
                        let v = &a[r][mc] * &q;
                        a[r][j] -= v;
                    }
                    for r in 0..n {
                        let v = &u[r][mc] * &q;
                        u[r][j] -= v;
                    }
                }
                if !a[row][j].is_zero() {
                    finished = false;
                }
            }
            if finished {
                // Move the pivot column into position `next_col`.
                for r in 0..m {
                    a[r].swap(next_col, mc);
                }
                for r in 0..n {
                    u[r].swap(next_col, mc);
                }
                pivot_cols.push(next_col);
                next_col += 1;
                break;
            }
        }
    }
    // Columns that stayed zero across all rows span the kernel.
    let mut kernel: Vec<Vec<Int>> = Vec::new();
    for j in next_col..n {
        if (0..m).all(|r| a[r][j].is_zero()) {
            kernel.push((0..n).map(|r| u[r][j].clone()).collect());
        }
    }
    let h = hermite_normal_form(&kernel);
    h
}

fn div_round(a: &Int, b: &Int) -> Int {
    // Nearest-integer division keeps the Euclidean reduction steps small.
    let (q, r) = a.div_rem(b);
    let two_r = &r * 2i32;
    if two_r.abs() > b.abs() {
        if (r.is_negative()) == (b.is_negative()) {
            q + 1
        } else {
            q - 1
        }
    } else {
        q
    }
}

/// Row-style Hermite normal form of the lattice spanned by the given rows:
/// the canonical basis returned is upper-triangular on its pivot columns
/// with positive pivots and reduced entries above them. Zero rows are
/// dropped.
pub fn hermite_normal_form(rows: &[Vec<Int>]) -> Vec<Vec<Int>> {
    let mut work: Vec<Vec<Int>> = rows.iter().filter(|r| !arith::is_zero_vec(r)).cloned().collect();
    if work.is_empty() {
        return Vec::new();
    }
    let n = work[0].len();
    let mut basis: Vec<Vec<Int>> = Vec::new();
    let mut row_ix = 0usize;
    for col in 0..n {
        // Reduce all remaining rows on this column via the Euclidean
        // algorithm until at most one has a nonzero entry there.
        loop {
            let mut nonzero: Vec<usize> = (row_ix..work.len())
                .filter(|&r| !work[r][col].is_zero())
                .collect();
            if nonzero.len() <= 1 {
                break;
            }
            nonzero.sort_by(|&a, &b| work[a][col].abs().cmp(&work[b][col].abs()));
            let small = nonzero[0];
            for &r in &nonzero[1..] {
                let q = div_round(&work[r][col], &work[small][col]);
                let src = work[small].clone();
                for (x, s) in work[r].iter_mut().zip(&src) {
                    *x -= &q * s;
                }
            }
        }
        if let Some(r) = (row_ix..work.len()).find(|&r| !work[r][col].is_zero()) {
            work.swap(row_ix, r);
            if work[row_ix][col].is_negative() {
                for x in work[row_ix].iter_mut() {
                    *x = -&*x;
                }
            }
            // Reduce the rows already in the basis above this pivot.
            let pivot = work[row_ix][col].clone();
            let src = work[row_ix].clone();
            for b in basis.iter_mut() {
                let q = b[col].div_floor(&pivot);
                if !q.is_zero() {
                    for (x, s) in b.iter_mut().zip(&src) {
                        *x -= &q * s;
                    }
                }
            }
            basis.push(src);
            row_ix += 1;
        }
    }
    basis
}

/// Discriminant (absolute Gram determinant) of the lattice spanned by the
/// given vectors.
pub fn discriminant(form: &IntersectionForm, vectors: &[ClassVector]) -> Result<Int> {
    let g = form.gram_of(vectors)?;
    Ok(determinant(&g)?.abs())
}
