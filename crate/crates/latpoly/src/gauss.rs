//! Image and general fiber of the order-k Gauss map of a monomially
//! embedded toric variety.
//!
//! On the torus, the Pluecker coordinate of the k-th osculating space
//! attached to a column subset S of the jet matrix factors as a nonzero
//! constant times t^sigma(S) with sigma(S) the sum of the exponents in S,
//! so the whole computation reduces to integer determinants.

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::jets::{binomial, falling_factorial, multi_indices, PointConfiguration};
use crate::linalg::{saturate, Int, IntMatrix, Rat};

/// Image exponents and general-fiber exponent classes of the order-k
/// Gauss map.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GaussMapResult {
    pub order: usize,
    /// Raw sigma(S) sums over the nonsingular column subsets, sorted.
    pub image_exponents: Vec<Vec<Int>>,
    /// Exponents of the general fiber in quotient coordinates,
    /// translated so the componentwise minimum is 0.
    pub fiber_exponents: Vec<Vec<Int>>,
    pub image_dim: usize,
    pub fiber_dim: usize,
}

/// The integer generic jet coefficient matrix [(a)_u].
fn generic_coefficients(config: &PointConfiguration, k: usize) -> IntMatrix {
    let n = config.ambient_dim();
    let rows = multi_indices(n, k);
    let mut m = IntMatrix::zero(rows.len(), config.len());
    for (i, u) in rows.iter().enumerate() {
        for (j, a) in config.exponents().iter().enumerate() {
            let mut c = Int::from(1);
            for (aj, &uj) in a.iter().zip(u) {
                c *= falling_factorial(aj, uj);
                if c.is_zero() {
                    break;
                }
            }
            m[(i, j)] = c;
        }
    }
    m
}

/// Column index sets of all bases of the column matroid of `m`, in
/// lexicographic order (rank-pruned combination scan).
pub fn column_bases(m: &IntMatrix) -> Vec<Vec<usize>> {
    let r = m.to_rat().rank();
    let cols: Vec<Vec<Rat>> = (0..m.cols())
        .map(|j| (0..m.rows()).map(|i| Rat::from_integer(m[(i, j)].clone())).collect())
        .collect();
    let mut out = Vec::new();
    let mut chosen = Vec::new();
    let mut echelon: Vec<(usize, Vec<Rat>)> = Vec::new();
    scan(&cols, 0, r, &mut chosen, &mut echelon, &mut out);
    out
}

fn scan(
    cols: &[Vec<Rat>],
    start: usize,
    r: usize,
    chosen: &mut Vec<usize>,
    echelon: &mut Vec<(usize, Vec<Rat>)>,
    out: &mut Vec<Vec<usize>>,
) {
    if chosen.len() == r {
        out.push(chosen.clone());
        return;
    }
    let need = r - chosen.len();
    for j in start..cols.len() {
        if cols.len() - j < need {
            break;
        }
        if let Some(entry) = reduce(&cols[j], echelon) {
            echelon.push(entry);
            chosen.push(j);
            scan(cols, j + 1, r, chosen, echelon, out);
            chosen.pop();
            echelon.pop();
        }
    }
}

/// Reduce a column against the echelon basis; Some((pivot, residue))
/// when the residue is nonzero, None when the column is dependent.
fn reduce(col: &[Rat], echelon: &[(usize, Vec<Rat>)]) -> Option<(usize, Vec<Rat>)> {
    let mut v = col.to_vec();
    for (piv, basis) in echelon {
        if v[*piv].is_zero() {
            continue;
        }
        let f = &v[*piv] / &basis[*piv];
        for (x, b) in v.iter_mut().zip(basis) {
            let t = &f * b;
            *x -= t;
        }
    }
    v.iter().position(|x| !x.is_zero()).map(|p| (p, v))
}

/// Full image/fiber data of the order-k Gauss map.
pub fn gauss_k(config: &PointConfiguration, k: usize) -> Result<GaussMapResult> {
    let n = config.ambient_dim();
    let r = binomial(n + k, k);
    let c = generic_coefficients(config, k);
    if c.to_rat().rank() != r {
        return Err(Error::GaussMapUndefined(k));
    }
    let bases = column_bases(&c);
    debug_assert!(!bases.is_empty());

    let sigma = |s: &[usize]| -> Vec<Int> {
        let mut v = vec![Int::zero(); n];
        for &j in s {
            for (x, a) in v.iter_mut().zip(&config.exponents()[j]) {
                *x += a;
            }
        }
        v
    };

    let mut image: Vec<Vec<Int>> = bases.iter().map(|s| sigma(s)).collect();
    image.sort();
    image.dedup();

    // difference lattice against the lexicographically smallest basis
    let sigma0 = sigma(&bases[0]);
    let diffs: Vec<Vec<Int>> = image
        .iter()
        .map(|s| s.iter().zip(&sigma0).map(|(a, b)| a - b).collect())
        .collect();
    let lattice = saturate(&diffs, n)?;
    let rho = lattice.len();

    // projection Z^n -> Z^(n - rho) with kernel exactly the saturation:
    // with U M W = [I; 0] for the generator column matrix M, the last
    // n - rho coordinates of U x work
    let fiber_raw: Vec<Vec<Int>> = if rho == 0 {
        config.exponents().to_vec()
    } else {
        let mut m = IntMatrix::zero(n, rho);
        for (j, b) in lattice.iter().enumerate() {
            for i in 0..n {
                m[(i, j)] = b[i].clone();
            }
        }
        let (u, s, _) = m.smith_normal_form();
        for i in 0..rho {
            debug_assert_eq!(s[(i, i)], Int::from(1), "saturated lattice has trivial SNF");
        }
        config
            .exponents()
            .iter()
            .map(|a| {
                (rho..n)
                    .map(|i| (0..n).map(|j| &u[(i, j)] * &a[j]).sum())
                    .collect()
            })
            .collect()
    };

    let q = n - rho;
    let mut fiber: Vec<Vec<Int>> = fiber_raw;
    fiber.sort();
    fiber.dedup();
    if q > 0 {
        for j in 0..q {
            let min: Int = fiber.iter().map(|f| f[j].clone()).min().unwrap();
            for f in &mut fiber {
                f[j] -= &min;
            }
        }
        fiber.sort();
    }

    Ok(GaussMapResult {
        order: k,
        image_exponents: image,
        fiber_exponents: fiber,
        image_dim: rho,
        fiber_dim: q,
    })
}

pub fn gauss_k_image(config: &PointConfiguration, k: usize) -> Result<Vec<Vec<Int>>> {
    Ok(gauss_k(config, k)?.image_exponents)
}

pub fn gauss_k_fiber(config: &PointConfiguration, k: usize) -> Result<Vec<Vec<Int>>> {
    Ok(gauss_k(config, k)?.fiber_exponents)
}

/// Classical (order 1) Gauss map image.
pub fn gauss_image(config: &PointConfiguration) -> Result<Vec<Vec<Int>>> {
    gauss_k_image(config, 1)
}

/// Classical (order 1) Gauss map fiber.
pub fn gauss_fiber(config: &PointConfiguration) -> Result<Vec<Vec<Int>>> {
    gauss_k_fiber(config, 1)
}
