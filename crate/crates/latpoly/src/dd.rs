//! Double description method: extreme rays of a pointed polyhedral cone
//! { y : A y >= 0 } with exact integer arithmetic.

use num_traits::{Signed, Zero};

use crate::linalg::{adjugate, dot, primitivize, Int, IntMatrix, RatMatrix};

/// Small dynamic bitset used for the zero sets of rays.
#[derive(Debug, Clone, PartialEq, Eq)]
struct Bitset(Vec<u64>);

impl Bitset {
    fn new(bits: usize) -> Self {
        Bitset(vec![0; bits.div_ceil(64)])
    }

    fn set(&mut self, i: usize) {
        self.0[i / 64] |= 1 << (i % 64);
    }

    fn intersection(&self, other: &Bitset) -> Bitset {
        Bitset(self.0.iter().zip(&other.0).map(|(a, b)| a & b).collect())
    }

    fn is_subset_of(&self, other: &Bitset) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a & !b == 0)
    }
}

#[derive(Debug, Clone)]
struct Ray {
    vec: Vec<Int>,
    zeros: Bitset,
}

/// Extreme rays of { y : <row, y> >= 0 for all rows }, primitivized.
///
/// Returns `None` when the cone is not pointed (the rows do not have full
/// column rank), in which case the double description invariants do not
/// hold and the caller must fall back to a feasibility argument.
pub fn extreme_rays(rows: &[Vec<Int>], dim: usize) -> Option<Vec<Vec<Int>>> {
    debug_assert!(rows.iter().all(|r| r.len() == dim));
    if dim == 0 {
        return Some(Vec::new());
    }
    let initial = independent_rows(rows, dim)?;

    // simplicial start cone from dim independent rows: the columns of the
    // (sign-corrected) adjugate satisfy B * c_j = |det| * e_j >= 0
    let mut b = IntMatrix::zero(dim, dim);
    for (i, &r) in initial.iter().enumerate() {
        for j in 0..dim {
            b[(i, j)] = rows[r][j].clone();
        }
    }
    let det = b.determinant().expect("square");
    let adj = adjugate(&b);
    let neg = det.is_negative();
    let mut rays: Vec<Ray> = (0..dim)
        .map(|j| {
            let mut v: Vec<Int> = (0..dim)
                .map(|i| {
                    if neg {
                        -adj[(i, j)].clone()
                    } else {
                        adj[(i, j)].clone()
                    }
                })
                .collect();
            primitivize(&mut v);
            Ray {
                vec: v,
                zeros: Bitset::new(rows.len()),
            }
        })
        .collect();

    let mut processed: Vec<usize> = initial.clone();
    for ray in &mut rays {
        for &r in &processed {
            if dot(&rows[r], &ray.vec).is_zero() {
                ray.zeros.set(r);
            }
        }
    }

    for r in 0..rows.len() {
        if initial.contains(&r) {
            continue;
        }
        let vals: Vec<Int> = rays.iter().map(|ray| dot(&rows[r], &ray.vec)).collect();
        let pos: Vec<usize> = (0..rays.len()).filter(|&i| vals[i].is_positive()).collect();
        let neg_idx: Vec<usize> = (0..rays.len()).filter(|&i| vals[i].is_negative()).collect();

        let mut new_rays: Vec<Ray> = Vec::new();
        for &p in &pos {
            for &q in &neg_idx {
                let t = rays[p].zeros.intersection(&rays[q].zeros);
                let adjacent = !rays.iter().enumerate().any(|(s, ray)| {
                    s != p && s != q && t.is_subset_of(&ray.zeros)
                });
                if !adjacent {
                    continue;
                }
                // vals[p] * ray_q - vals[q] * ray_p lies on the hyperplane
                let mut v: Vec<Int> = (0..dim)
                    .map(|j| &vals[p] * &rays[q].vec[j] - &vals[q] * &rays[p].vec[j])
                    .collect();
                primitivize(&mut v);
                let mut zeros = Bitset::new(rows.len());
                for &pr in &processed {
                    if dot(&rows[pr], &v).is_zero() {
                        zeros.set(pr);
                    }
                }
                zeros.set(r);
                new_rays.push(Ray { vec: v, zeros });
            }
        }

        let mut kept: Vec<Ray> = Vec::new();
        for (i, mut ray) in rays.into_iter().enumerate() {
            if vals[i].is_negative() {
                continue;
            }
            if vals[i].is_zero() {
                ray.zeros.set(r);
            }
            kept.push(ray);
        }
        kept.extend(new_rays);
        rays = kept;
        processed.push(r);
    }

    debug_assert!(rays
        .iter()
        .all(|ray| rows.iter().all(|row| !dot(row, &ray.vec).is_negative())));
    Some(rays.into_iter().map(|r| r.vec).collect())
}

/// Greedily select `dim` linearly independent rows; None if rank < dim.
fn independent_rows(rows: &[Vec<Int>], dim: usize) -> Option<Vec<usize>> {
    let mut chosen: Vec<usize> = Vec::new();
    for i in 0..rows.len() {
        if chosen.len() == dim {
            break;
        }
        let mut cand: Vec<Vec<_>> = chosen.iter().map(|&c| rows[c].clone()).collect();
        cand.push(rows[i].clone());
        let m = IntMatrix::from_rows(&cand).expect("equal lengths");
        if RatMatrix::rank(&m.to_rat()) == cand.len() {
            chosen.push(i);
        }
    }
    if chosen.len() == dim {
        Some(chosen)
    } else {
        None
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::int;

    fn rays_sorted(rows: &[Vec<i64>], dim: usize) -> Vec<Vec<Int>> {
        let rows: Vec<Vec<Int>> = rows
            .iter()
            .map(|r| r.iter().map(|&x| int(x)).collect())
            .collect();
        let mut rays = extreme_rays(&rows, dim).expect("pointed");
        rays.sort();
        rays
    }

    #[test]
    fn quadrant() {
        let rays = rays_sorted(&[vec![1, 0], vec![0, 1]], 2);
        assert_eq!(rays, vec![vec![int(0), int(1)], vec![int(1), int(0)]]);
    }

    #[test]
    fn square_cone() {
        // homogenization of the square [-1,1]^2: rays (x, y, 1) scaled
        let rows = vec![
            vec![-1, 0, 1],
            vec![1, 0, 1],
            vec![0, -1, 1],
            vec![0, 1, 1],
            vec![0, 0, 1],
        ];
        let mut rays = rays_sorted(&rows, 3);
        rays.sort();
        assert_eq!(rays.len(), 4);
        for r in rays {
            assert_eq!(r[2], int(1));
            assert_eq!(r[0].clone().abs(), int(1));
            assert_eq!(r[1].clone().abs(), int(1));
        }
    }

    #[test]
    fn not_pointed() {
        let rows: Vec<Vec<Int>> = vec![vec![int(1), int(0)]];
        assert!(extreme_rays(&rows, 2).is_none());
    }

    #[test]
    fn redundant_rows_are_harmless() {
        let rows = vec![vec![1, 0], vec![0, 1], vec![1, 1], vec![2, 1]];
        let rays = rays_sorted(&rows, 2);
        assert_eq!(rays, vec![vec![int(0), int(1)], vec![int(1), int(0)]]);
    }
}
