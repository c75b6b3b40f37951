//! Jet matrices of monomial embeddings, k-jet spannedness and the degree
//! of jet separation.

use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::linalg::{unimodular_inverse, Int, IntMatrix, Rat, RatMatrix};
use crate::polytope::LatticePolytope;

/// A finite set of monomial exponents in Z^n (a basis of global sections).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PointConfiguration {
    ambient_dim: usize,
    exponents: Vec<Vec<Int>>,
}

impl PointConfiguration {
    /// Keeps the given order, dropping later duplicates.
    pub fn new(ambient_dim: usize, exponents: Vec<Vec<Int>>) -> Result<Self> {
        if exponents.is_empty() {
            return Err(Error::EmptyInput);
        }
        if exponents.iter().any(|e| e.len() != ambient_dim) {
            return Err(Error::RaggedInput);
        }
        let mut seen: Vec<Vec<Int>> = Vec::new();
        for e in exponents {
            if !seen.contains(&e) {
                seen.push(e);
            }
        }
        Ok(PointConfiguration {
            ambient_dim,
            exponents: seen,
        })
    }

    pub fn from_polytope(p: &LatticePolytope) -> Self {
        PointConfiguration {
            ambient_dim: p.ambient_dim(),
            exponents: p.lattice_points(),
        }
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn exponents(&self) -> &[Vec<Int>] {
        &self.exponents
    }

    pub fn len(&self) -> usize {
        self.exponents.len()
    }

    pub fn is_empty(&self) -> bool {
        self.exponents.is_empty()
    }
}

/// Evaluation point of a jet matrix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum JetPoint {
    /// The general point of the torus; entries are the integer
    /// falling-factorial coefficients with the monomial scalings
    /// factored out.
    Generic,
    Rational(Vec<Rat>),
}

/// The matrix of the k-jet evaluation map: rows are multi-indices
/// |u| <= k in graded lexicographic order, columns are the exponents.
#[derive(Debug, Clone)]
pub struct JetMatrix {
    pub order: usize,
    pub config: PointConfiguration,
    pub point: JetPoint,
    pub multi_indices: Vec<Vec<usize>>,
    pub matrix: RatMatrix,
    pub full_rank_target: usize,
}

impl JetMatrix {
    pub fn rank(&self) -> usize {
        self.matrix.rank()
    }
}

/// Multi-indices u >= 0 with |u| <= k, graded lexicographic
/// (by total degree, then lexicographically descending).
pub fn multi_indices(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    for deg in 0..=k {
        let mut cur = vec![0usize; n];
        gen_degree(n, deg, 0, &mut cur, &mut out);
    }
    out
}

fn gen_degree(n: usize, rem: usize, i: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
    if i == n {
        if rem == 0 {
            out.push(cur.clone());
        }
        return;
    }
    if i == n - 1 {
        cur[i] = rem;
        out.push(cur.clone());
        cur[i] = 0;
        return;
    }
    for v in (0..=rem).rev() {
        cur[i] = v;
        gen_degree(n, rem - v, i + 1, cur, out);
    }
    cur[i] = 0;
}

pub fn binomial(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut r: usize = 1;
    for i in 0..k {
        r = r * (n - i) / (i + 1);
    }
    r
}

/// Falling factorial a (a-1) ... (a-m+1); equals 1 when m = 0.
pub fn falling_factorial(a: &Int, m: usize) -> Int {
    let mut r = Int::one();
    for i in 0..m {
        r *= a - Int::from(i as i64);
    }
    r
}

/// The jet matrix of the configuration at order k.
///
/// At a rational point the entry for multi-index u and exponent a is the
/// Taylor coefficient prod_j (a_j)_(u_j) p_j^(a_j - u_j), with 0^0 = 1.
/// Negative exponents are allowed as long as no coordinate of p that
/// meets one is zero.
pub fn jet_matrix(config: &PointConfiguration, k: usize, point: &JetPoint) -> Result<JetMatrix> {
    let n = config.ambient_dim();
    if let JetPoint::Rational(p) = point {
        if p.len() != n {
            return Err(Error::DimensionMismatch {
                expected: n,
                got: p.len(),
            });
        }
    }
    let rows = multi_indices(n, k);
    let target = binomial(n + k, k);
    debug_assert_eq!(rows.len(), target);
    let mut data: Vec<Rat> = Vec::with_capacity(rows.len() * config.len());
    for u in &rows {
        for a in config.exponents() {
            data.push(jet_entry(a, u, point)?);
        }
    }
    Ok(JetMatrix {
        order: k,
        config: config.clone(),
        point: point.clone(),
        multi_indices: rows.clone(),
        matrix: RatMatrix::new(rows.len(), config.len(), data),
        full_rank_target: target,
    })
}

fn jet_entry(a: &[Int], u: &[usize], point: &JetPoint) -> Result<Rat> {
    let mut coeff = Int::one();
    for (aj, &uj) in a.iter().zip(u) {
        coeff *= falling_factorial(aj, uj);
        if coeff.is_zero() {
            return Ok(Rat::zero());
        }
    }
    match point {
        JetPoint::Generic => Ok(Rat::from_integer(coeff)),
        JetPoint::Rational(p) => {
            let mut val = Rat::from_integer(coeff);
            for ((aj, &uj), pj) in a.iter().zip(u).zip(p) {
                let e = aj - Int::from(uj as i64);
                if e.is_zero() {
                    continue; // 0^0 = 1
                }
                if pj.is_zero() {
                    if e.is_negative() {
                        return Err(Error::PointNotInDomain);
                    }
                    return Ok(Rat::zero());
                }
                val *= rat_pow(pj, &e);
            }
            Ok(val)
        }
    }
}

fn rat_pow(base: &Rat, e: &Int) -> Rat {
    let mut exp = e.clone();
    let mut b = base.clone();
    if exp.is_negative() {
        b = b.recip();
        exp = -exp;
    }
    let mut r = Rat::one();
    while exp.is_positive() {
        r *= &b;
        exp -= Int::one();
    }
    r
}

/// True iff the jet matrix has the full rank binom(n+k, k).
pub fn is_jet_spanned(config: &PointConfiguration, k: usize, point: &JetPoint) -> Result<bool> {
    let jm = jet_matrix(config, k, point)?;
    Ok(jm.rank() == jm.full_rank_target)
}

/// The largest k such that the configuration is k-jet spanned at the
/// point. Errors if every monomial vanishes at the point.
pub fn degree_of_jet_separation(config: &PointConfiguration, point: &JetPoint) -> Result<usize> {
    if !is_jet_spanned(config, 0, point)? {
        return Err(Error::PointNotInDomain);
    }
    let n = config.ambient_dim();
    let mut k = 0;
    loop {
        let next = k + 1;
        if binomial(n + next, next) > config.len() {
            return Ok(k);
        }
        if !is_jet_spanned(config, next, point)? {
            return Ok(k);
        }
        k = next;
    }
}

/// Degree of jet separation at a vertex of a smooth polytope: move the
/// vertex to the origin, map its primitive edge directions to the
/// standard basis, and evaluate at zero.
pub fn jet_separation_at_vertex(p: &LatticePolytope, v: &[Int]) -> Result<usize> {
    if p.dim() != p.ambient_dim() || p.ambient_dim() == 0 {
        return Err(Error::NotFullDimensional);
    }
    if !p.is_smooth_at(v)? {
        return Err(Error::NotSmoothAlongFace);
    }
    let n = p.ambient_dim();
    let dirs = p.primitive_edge_directions(v)?;
    // columns = edge directions; U = D^{-1} sends them to the basis
    let mut dmat = IntMatrix::zero(n, n);
    for (j, dir) in dirs.iter().enumerate() {
        for i in 0..n {
            dmat[(i, j)] = dir[i].clone();
        }
    }
    let u = unimodular_inverse(&dmat);
    let transformed: Vec<Vec<Int>> = p
        .lattice_points()
        .iter()
        .map(|pt| {
            (0..n)
                .map(|i| (0..n).map(|j| &u[(i, j)] * (&pt[j] - &v[j])).sum())
                .collect()
        })
        .collect();
    let config = PointConfiguration::new(n, transformed)?;
    let zero = JetPoint::Rational(vec![Rat::zero(); n]);
    degree_of_jet_separation(&config, &zero)
}
