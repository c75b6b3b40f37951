//! Exact integer and rational linear algebra on small dense matrices.
//!
//! Everything here is arbitrary precision; there is no floating point.
//! Matrices are desk scale (at most a few hundred rows), so plain
//! elimination is good enough.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

pub type Int = BigInt;
pub type Rat = BigRational;

pub fn int(v: i64) -> Int {
    Int::from(v)
}

pub fn rat(v: i64) -> Rat {
    Rat::from_integer(int(v))
}

/// Divide a vector by the gcd of its entries (no-op on the zero vector).
pub fn primitivize(v: &mut [Int]) {
    let mut g = Int::zero();
    for x in v.iter() {
        g = g.gcd(x);
    }
    if g > Int::one() {
        for x in v.iter_mut() {
            *x /= &g;
        }
    }
}

pub fn dot(a: &[Int], b: &[Int]) -> Int {
    debug_assert_eq!(a.len(), b.len());
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

/// Dense row-major matrix of arbitrary precision integers.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Int>,
}

impl IntMatrix {
    pub fn new(rows: usize, cols: usize, data: Vec<Int>) -> Self {
        assert_eq!(data.len(), rows * cols, "entry count must be rows*cols");
        IntMatrix { rows, cols, data }
    }

    pub fn zero(rows: usize, cols: usize) -> Self {
        IntMatrix::new(rows, cols, vec![Int::zero(); rows * cols])
    }

    pub fn identity(n: usize) -> Self {
        let mut m = IntMatrix::zero(n, n);
        for i in 0..n {
            m[(i, i)] = Int::one();
        }
        m
    }

    pub fn from_rows(rows: &[Vec<Int>]) -> Result<Self> {
        if rows.is_empty() {
            return Ok(IntMatrix::zero(0, 0));
        }
        let cols = rows[0].len();
        if rows.iter().any(|r| r.len() != cols) {
            return Err(Error::RaggedInput);
        }
        Ok(IntMatrix::new(
            rows.len(),
            cols,
            rows.iter().flatten().cloned().collect(),
        ))
    }

    pub fn from_i64_rows(rows: &[Vec<i64>]) -> Result<Self> {
        IntMatrix::from_rows(
            &rows
                .iter()
                .map(|r| r.iter().map(|&x| int(x)).collect())
                .collect::<Vec<_>>(),
        )
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, i: usize) -> &[Int] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn transpose(&self) -> IntMatrix {
        let mut t = IntMatrix::zero(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t[(j, i)] = self[(i, j)].clone();
            }
        }
        t
    }

    pub fn mul(&self, other: &IntMatrix) -> IntMatrix {
        assert_eq!(self.cols, other.rows);
        let mut out = IntMatrix::zero(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                if self[(i, k)].is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let t = &self[(i, k)] * &other[(k, j)];
                    out[(i, j)] += t;
                }
            }
        }
        out
    }

    pub fn to_rat(&self) -> RatMatrix {
        RatMatrix::new(
            self.rows,
            self.cols,
            self.data
                .iter()
                .map(|x| Rat::from_integer(x.clone()))
                .collect(),
        )
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    /// row[dst] += f * row[src]
    fn add_row_multiple(&mut self, dst: usize, src: usize, f: &Int) {
        if f.is_zero() {
            return;
        }
        for j in 0..self.cols {
            let t = f * &self[(src, j)];
            self[(dst, j)] += t;
        }
    }

    fn negate_row(&mut self, i: usize) {
        for j in 0..self.cols {
            let t = -self[(i, j)].clone();
            self[(i, j)] = t;
        }
    }

    /// Exact determinant by fraction-free Bareiss elimination.
    pub fn determinant(&self) -> Result<Int> {
        if self.rows != self.cols {
            return Err(Error::NonSquare {
                rows: self.rows,
                cols: self.cols,
            });
        }
        let n = self.rows;
        if n == 0 {
            return Ok(Int::one());
        }
        let mut m = self.clone();
        let mut sign = 1i64;
        let mut prev = Int::one();
        for k in 0..n - 1 {
            if m[(k, k)].is_zero() {
                match (k + 1..n).find(|&i| !m[(i, k)].is_zero()) {
                    Some(i) => {
                        m.swap_rows(i, k);
                        sign = -sign;
                    }
                    None => return Ok(Int::zero()),
                }
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let t = &m[(k, k)] * &m[(i, j)] - &m[(i, k)] * &m[(k, j)];
                    m[(i, j)] = &t / &prev;
                }
                m[(i, k)] = Int::zero();
            }
            prev = m[(k, k)].clone();
        }
        let d = m[(n - 1, n - 1)].clone();
        Ok(if sign < 0 { -d } else { d })
    }

    /// Row-style Hermite normal form: returns (H, U) with U unimodular,
    /// U * self = H, pivots positive, entries above a pivot in [0, pivot).
    pub fn hermite_normal_form(&self) -> (IntMatrix, IntMatrix) {
        let mut h = self.clone();
        let mut u = IntMatrix::identity(self.rows);
        let mut pivot_row = 0;
        let mut pivots: Vec<(usize, usize)> = Vec::new();
        for col in 0..self.cols {
            if pivot_row == self.rows {
                break;
            }
            // clear the column below pivot_row via gcd row operations
            loop {
                let nz: Vec<usize> = (pivot_row..self.rows)
                    .filter(|&i| !h[(i, col)].is_zero())
                    .collect();
                if nz.is_empty() {
                    break;
                }
                if nz.len() == 1 {
                    h.swap_rows(pivot_row, nz[0]);
                    u.swap_rows(pivot_row, nz[0]);
                    break;
                }
                // pick the row with the smallest nonzero |entry| and reduce the others
                let best = *nz
                    .iter()
                    .min_by(|&&a, &&b| h[(a, col)].abs().cmp(&h[(b, col)].abs()))
                    .unwrap();
                h.swap_rows(pivot_row, best);
                u.swap_rows(pivot_row, best);
                for i in pivot_row + 1..self.rows {
                    if h[(i, col)].is_zero() {
                        continue;
                    }
                    let q = -h[(i, col)].div_floor(&h[(pivot_row, col)]);
                    h.add_row_multiple(i, pivot_row, &q);
                    u.add_row_multiple(i, pivot_row, &q);
                }
            }
            if !h[(pivot_row, col)].is_zero() {
                if h[(pivot_row, col)].is_negative() {
                    h.negate_row(pivot_row);
                    u.negate_row(pivot_row);
                }
                pivots.push((pivot_row, col));
                pivot_row += 1;
            }
        }
        // reduce entries above each pivot into [0, pivot)
        for &(r, c) in &pivots {
            for i in 0..r {
                if h[(i, c)].is_zero() {
                    continue;
                }
                let q = -h[(i, c)].div_floor(&h[(r, c)]);
                h.add_row_multiple(i, r, &q);
                u.add_row_multiple(i, r, &q);
            }
        }
        (h, u)
    }

    /// Smith normal form: returns (U, S, V) with U, V unimodular,
    /// U * self * V = S, S diagonal with nonnegative d1 | d2 | ... .
    pub fn smith_normal_form(&self) -> (IntMatrix, IntMatrix, IntMatrix) {
        let mut s = self.clone();
        let mut u = IntMatrix::identity(self.rows);
        let mut v = IntMatrix::identity(self.cols);
        let n = self.rows.min(self.cols);
        for t in 0..n {
            loop {
                // find a nonzero entry in the remaining block, smallest |.|
                let mut pivot: Option<(usize, usize)> = None;
                for i in t..self.rows {
                    for j in t..self.cols {
                        if s[(i, j)].is_zero() {
                            continue;
                        }
                        match pivot {
                            Some((pi, pj)) if s[(pi, pj)].abs() <= s[(i, j)].abs() => {}
                            _ => pivot = Some((i, j)),
                        }
                    }
                }
                let (pi, pj) = match pivot {
                    Some(p) => p,
                    None => break,
                };
                s.swap_rows(t, pi);
                u.swap_rows(t, pi);
                swap_cols(&mut s, t, pj);
                swap_cols(&mut v, t, pj);
                // clear row and column t
                let mut dirty = false;
                for i in t + 1..self.rows {
                    if s[(i, t)].is_zero() {
                        continue;
                    }
                    let q = -s[(i, t)].div_floor(&s[(t, t)]);
                    s.add_row_multiple(i, t, &q);
                    u.add_row_multiple(i, t, &q);
                    if !s[(i, t)].is_zero() {
                        dirty = true;
                    }
                }
                for j in t + 1..self.cols {
                    if s[(t, j)].is_zero() {
                        continue;
                    }
                    let q = -s[(t, j)].div_floor(&s[(t, t)]);
                    add_col_multiple(&mut s, j, t, &q);
                    add_col_multiple(&mut v, j, t, &q);
                    if !s[(t, j)].is_zero() {
                        dirty = true;
                    }
                }
                if dirty {
                    continue;
                }
                // ensure the pivot divides the rest of the block
                let mut bad: Option<usize> = None;
                for i in t + 1..self.rows {
                    for j in t + 1..self.cols {
                        if !(&s[(i, j)] % &s[(t, t)]).is_zero() {
                            bad = Some(i);
                            break;
                        }
                    }
                    if bad.is_some() {
                        break;
                    }
                }
                match bad {
                    Some(i) => {
                        // fold row i into row t and redo
                        s.add_row_multiple(t, i, &Int::one());
                        u.add_row_multiple(t, i, &Int::one());
                    }
                    None => break,
                }
            }
            if s[(t, t)].is_negative() {
                s.negate_row(t);
                u.negate_row(t);
            }
        }
        (u, s, v)
    }
}

impl std::ops::Index<(usize, usize)> for IntMatrix {
    type Output = Int;
    fn index(&self, (i, j): (usize, usize)) -> &Int {
        &self.data[i * self.cols + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for IntMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Int {
        &mut self.data[i * self.cols + j]
    }
}

fn swap_cols(m: &mut IntMatrix, a: usize, b: usize) {
    if a == b {
        return;
    }
    for i in 0..m.rows() {
        let x = m[(i, a)].clone();
        m[(i, a)] = m[(i, b)].clone();
        m[(i, b)] = x;
    }
}

/// col[dst] += f * col[src]
fn add_col_multiple(m: &mut IntMatrix, dst: usize, src: usize, f: &Int) {
    if f.is_zero() {
        return;
    }
    for i in 0..m.rows() {
        let t = f * &m[(i, src)];
        m[(i, dst)] += t;
    }
}

/// Dense row-major matrix of exact rationals.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RatMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Rat>,
}

impl RatMatrix {
    pub fn new(rows: usize, cols: usize, data: Vec<Rat>) -> Self {
        assert_eq!(data.len(), rows * cols, "entry count must be rows*cols");
        RatMatrix { rows, cols, data }
    }

    pub fn zero(rows: usize, cols: usize) -> Self {
        RatMatrix::new(rows, cols, vec![Rat::zero(); rows * cols])
    }

    pub fn from_rows(rows: &[Vec<Rat>]) -> Result<Self> {
        if rows.is_empty() {
            return Ok(RatMatrix::zero(0, 0));
        }
        let cols = rows[0].len();
        if rows.iter().any(|r| r.len() != cols) {
            return Err(Error::RaggedInput);
        }
        Ok(RatMatrix::new(
            rows.len(),
            cols,
            rows.iter().flatten().cloned().collect(),
        ))
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn transpose(&self) -> RatMatrix {
        let mut t = RatMatrix::zero(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t[(j, i)] = self[(i, j)].clone();
            }
        }
        t
    }

    /// Exact rank over the rationals by Gaussian elimination.
    pub fn rank(&self) -> usize {
        let mut m = self.clone();
        let mut rank = 0;
        for col in 0..m.cols {
            if rank == m.rows {
                break;
            }
            let piv = match (rank..m.rows).find(|&i| !m[(i, col)].is_zero()) {
                Some(p) => p,
                None => continue,
            };
            for j in 0..m.cols {
                m.data.swap(rank * m.cols + j, piv * m.cols + j);
            }
            for i in rank + 1..m.rows {
                if m[(i, col)].is_zero() {
                    continue;
                }
                let f = &m[(i, col)] / &m[(rank, col)];
                for j in col..m.cols {
                    let t = &f * &m[(rank, j)];
                    let x = &m[(i, j)] - t;
                    m[(i, j)] = x;
                }
            }
            rank += 1;
        }
        rank
    }
}

impl std::ops::Index<(usize, usize)> for RatMatrix {
    type Output = Rat;
    fn index(&self, (i, j): (usize, usize)) -> &Rat {
        &self.data[i * self.cols + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for RatMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Rat {
        &mut self.data[i * self.cols + j]
    }
}

/// Outcome of an exact linear solve.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SolveOutcome {
    /// The system has exactly one solution.
    Unique(Vec<Rat>),
    /// The system is consistent but underdetermined; one solution is given.
    Underdetermined(Vec<Rat>),
    Inconsistent,
}

impl SolveOutcome {
    pub fn solution(&self) -> Option<&[Rat]> {
        match self {
            SolveOutcome::Unique(v) | SolveOutcome::Underdetermined(v) => Some(v),
            SolveOutcome::Inconsistent => None,
        }
    }
}

/// Solve a x = b exactly over the rationals.
pub fn solve_exact(a: &RatMatrix, b: &[Rat]) -> Result<SolveOutcome> {
    if a.rows() != b.len() {
        return Err(Error::DimensionMismatch {
            expected: a.rows(),
            got: b.len(),
        });
    }
    let rows = a.rows();
    let cols = a.cols();
    // augmented elimination
    let mut m = RatMatrix::zero(rows, cols + 1);
    for i in 0..rows {
        for j in 0..cols {
            m[(i, j)] = a[(i, j)].clone();
        }
        m[(i, cols)] = b[i].clone();
    }
    let mut pivots: Vec<(usize, usize)> = Vec::new();
    let mut rank = 0;
    for col in 0..cols {
        if rank == rows {
            break;
        }
        let piv = match (rank..rows).find(|&i| !m[(i, col)].is_zero()) {
            Some(p) => p,
            None => continue,
        };
        for j in 0..=cols {
            let x = m[(rank, j)].clone();
            m[(rank, j)] = m[(piv, j)].clone();
            m[(piv, j)] = x;
        }
        for i in 0..rows {
            if i == rank || m[(i, col)].is_zero() {
                continue;
            }
            let f = &m[(i, col)] / &m[(rank, col)];
            for j in col..=cols {
                let t = &f * &m[(rank, j)];
                let x = &m[(i, j)] - t;
                m[(i, j)] = x;
            }
        }
        pivots.push((rank, col));
        rank += 1;
    }
    // inconsistent iff a zero row has nonzero rhs
    for i in rank..rows {
        if !m[(i, cols)].is_zero() {
            return Ok(SolveOutcome::Inconsistent);
        }
    }
    let mut x = vec![Rat::zero(); cols];
    for &(r, c) in &pivots {
        x[c] = &m[(r, cols)] / &m[(r, c)];
    }
    if rank == cols {
        Ok(SolveOutcome::Unique(x))
    } else {
        Ok(SolveOutcome::Underdetermined(x))
    }
}

/// Z-basis of the saturation span_Q(generators) ∩ Z^n.
///
/// Computed from the Smith normal form of the generator column matrix:
/// the first `rank` columns of U^{-1} span the saturation.
pub fn saturate(generators: &[Vec<Int>], ambient_dim: usize) -> Result<Vec<Vec<Int>>> {
    for g in generators {
        if g.len() != ambient_dim {
            return Err(Error::DimensionMismatch {
                expected: ambient_dim,
                got: g.len(),
            });
        }
    }
    if generators.is_empty() || ambient_dim == 0 {
        return Ok(Vec::new());
    }
    // columns = generators
    let mut m = IntMatrix::zero(ambient_dim, generators.len());
    for (j, g) in generators.iter().enumerate() {
        for i in 0..ambient_dim {
            m[(i, j)] = g[i].clone();
        }
    }
    let (u, s, _v) = m.smith_normal_form();
    let rank = (0..ambient_dim.min(generators.len()))
        .filter(|&i| !s[(i, i)].is_zero())
        .count();
    let u_inv = unimodular_inverse(&u);
    let mut basis = Vec::with_capacity(rank);
    for j in 0..rank {
        basis.push((0..ambient_dim).map(|i| u_inv[(i, j)].clone()).collect());
    }
    Ok(basis)
}

/// Inverse of a unimodular integer matrix (exact, stays integral).
pub fn unimodular_inverse(m: &IntMatrix) -> IntMatrix {
    let n = m.rows();
    assert_eq!(n, m.cols());
    let det = m.determinant().expect("square");
    assert!(det.abs().is_one(), "matrix is not unimodular");
    let adj = adjugate(m);
    if det.is_one() {
        adj
    } else {
        let mut neg = adj;
        for i in 0..n {
            for j in 0..n {
                let t = -neg[(i, j)].clone();
                neg[(i, j)] = t;
            }
        }
        neg
    }
}

/// Adjugate matrix (transpose of cofactors), so m * adj(m) = det(m) * I.
pub fn adjugate(m: &IntMatrix) -> IntMatrix {
    let n = m.rows();
    assert_eq!(n, m.cols());
    if n == 0 {
        return IntMatrix::zero(0, 0);
    }
    if n == 1 {
        return IntMatrix::identity(1);
    }
    let mut adj = IntMatrix::zero(n, n);
    for i in 0..n {
        for j in 0..n {
            // minor deleting row i, col j
            let mut sub = IntMatrix::zero(n - 1, n - 1);
            for (si, mi) in (0..n).filter(|&r| r != i).enumerate() {
                for (sj, mj) in (0..n).filter(|&c| c != j).enumerate() {
                    sub[(si, sj)] = m[(mi, mj)].clone();
                }
            }
            let mut c = sub.determinant().expect("square");
            if (i + j) % 2 == 1 {
                c = -c;
            }
            adj[(j, i)] = c;
        }
    }
    adj
}
