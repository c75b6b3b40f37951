//! Cayley structures, Cayley sums and polytopal toric blow-ups.

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::linalg::{dot, solve_exact, Int, Rat, RatMatrix, SolveOutcome};
use crate::polytope::{Face, Halfspace, LatticePolytope};

/// A witness that every lattice point of P lies on one of two parallel
/// adjacent lattice hyperplanes <u, x> = c and <u, x> = c + 1.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CayleyStructure {
    pub functional: Vec<Int>,
    pub offset: Int,
    pub slice0: Vec<Vec<Int>>,
    pub slice1: Vec<Vec<Int>>,
}

/// Detect a Cayley structure (equivalently, lattice width 1).
///
/// Picks n+1 affinely independent lattice points and solves the linear
/// system <u, p_i> - c = a_i for every 0/1 assignment a. Any width-1
/// functional restricts to such an assignment, so the search is complete.
pub fn is_cayley(p: &LatticePolytope) -> Result<Option<CayleyStructure>> {
    let n = p.ambient_dim();
    if p.dim() != n || n == 0 {
        return Err(Error::NotFullDimensional);
    }
    let points = p.lattice_points();
    let base = affinely_independent(&points, n);
    debug_assert_eq!(base.len(), n + 1);

    // rows (p_i, -1) applied to the unknown (u, c)
    let mut rows: Vec<Vec<Rat>> = Vec::with_capacity(n + 1);
    for &i in &base {
        let mut row: Vec<Rat> = points[i]
            .iter()
            .map(|x| Rat::from_integer(x.clone()))
            .collect();
        row.push(-Rat::one());
        rows.push(row);
    }
    let m = RatMatrix::from_rows(&rows)?;

    for bits in 0u32..(1u32 << (n + 1)) {
        let rhs: Vec<Rat> = (0..=n)
            .map(|i| {
                if bits >> i & 1 == 1 {
                    Rat::one()
                } else {
                    Rat::zero()
                }
            })
            .collect();
        let sol = match solve_exact(&m, &rhs)? {
            SolveOutcome::Unique(s) => s,
            _ => {
                return Err(Error::InternalInconsistency(
                    "affinely independent points gave a singular system".into(),
                ))
            }
        };
        if !sol.iter().all(|x| x.is_integer()) {
            continue;
        }
        let u: Vec<Int> = sol[..n].iter().map(|x| x.to_integer()).collect();
        if u.iter().all(|x| x.is_zero()) {
            continue;
        }
        let c = sol[n].to_integer();
        let mut slice0 = Vec::new();
        let mut slice1 = Vec::new();
        let mut ok = true;
        for pt in &points {
            let v = dot(&u, pt) - &c;
            if v.is_zero() {
                slice0.push(pt.clone());
            } else if v.is_one() {
                slice1.push(pt.clone());
            } else {
                ok = false;
                break;
            }
        }
        if ok && !slice0.is_empty() && !slice1.is_empty() {
            return Ok(Some(CayleyStructure {
                functional: u,
                offset: c,
                slice0,
                slice1,
            }));
        }
    }
    Ok(None)
}

fn affinely_independent(points: &[Vec<Int>], n: usize) -> Vec<usize> {
    let mut chosen: Vec<usize> = vec![0];
    for i in 1..points.len() {
        if chosen.len() == n + 1 {
            break;
        }
        let base = &points[chosen[0]];
        let mut diffs: Vec<Vec<Rat>> = chosen[1..]
            .iter()
            .map(|&c| rat_diff(&points[c], base))
            .collect();
        diffs.push(rat_diff(&points[i], base));
        let m = RatMatrix::from_rows(&diffs).expect("equal lengths");
        if m.rank() == diffs.len() {
            chosen.push(i);
        }
    }
    chosen
}

fn rat_diff(a: &[Int], b: &[Int]) -> Vec<Rat> {
    a.iter()
        .zip(b)
        .map(|(x, y)| Rat::from_integer(x - y))
        .collect()
}

/// Cayley sum: the hull of P_0 x {0} and P_i x {s e_i} in R^(d + m - 1).
pub fn cayley_sum(ps: &[LatticePolytope], s: u64) -> Result<LatticePolytope> {
    if ps.len() < 2 {
        return Err(Error::InvalidArgument(
            "a Cayley sum needs at least two summands".into(),
        ));
    }
    if s < 1 {
        return Err(Error::InvalidArgument("scale must be >= 1".into()));
    }
    let d = ps[0].ambient_dim();
    if ps.iter().any(|p| p.ambient_dim() != d) {
        return Err(Error::DimensionMismatch {
            expected: d,
            got: ps.iter().find(|p| p.ambient_dim() != d).unwrap().ambient_dim(),
        });
    }
    let m = ps.len();
    let mut points: Vec<Vec<Int>> = Vec::new();
    for (i, p) in ps.iter().enumerate() {
        for v in p.vertices() {
            let mut lifted = v.clone();
            lifted.extend(vec![Int::zero(); m - 1]);
            if i > 0 {
                lifted[d + i - 1] = Int::from(s);
            }
            points.push(lifted);
        }
    }
    LatticePolytope::from_vertices(&points)
}

/// Cut off the face Q at depth k: intersect P with the halfspace whose
/// normal is the sum of the primitive normals of the facets containing Q,
/// offset by k. The result is the polytope of the blow-up along Q,
/// polarized by the pullback bundle minus k times the exceptional divisor.
pub fn toric_blow_up(p: &LatticePolytope, q: &Face, k: u64) -> Result<LatticePolytope> {
    let n = p.ambient_dim();
    if p.dim() != n || n == 0 {
        return Err(Error::NotFullDimensional);
    }
    if k < 1 {
        return Err(Error::InvalidArgument("blow-up depth must be >= 1".into()));
    }
    if q.dim >= p.dim() || q.vertex_indices.is_empty() {
        return Err(Error::NotAFace);
    }
    if q.vertex_indices.iter().any(|&i| i >= p.vertices().len()) {
        return Err(Error::NotAFace);
    }
    for &i in &q.vertex_indices {
        if !p.is_smooth_at(&p.vertices()[i])? {
            return Err(Error::NotSmoothAlongFace);
        }
    }
    if q.tight_facets.is_empty() {
        return Err(Error::NotAFace);
    }

    let mut normal = vec![Int::zero(); n];
    let mut offset = Int::zero();
    for &f in &q.tight_facets {
        let facet = &p.facets()[f];
        for (a, b) in normal.iter_mut().zip(&facet.normal) {
            *a += b;
        }
        offset += &facet.offset;
    }
    offset -= Int::from(k);

    // the cut may only remove the region near Q
    for (i, v) in p.vertices().iter().enumerate() {
        if q.vertex_indices.contains(&i) {
            continue;
        }
        if dot(&normal, v) > offset {
            return Err(Error::InvalidBlowUpDepth);
        }
    }

    let mut halfspaces: Vec<Halfspace> = p.facets().to_vec();
    halfspaces.push(Halfspace { normal, offset });
    match LatticePolytope::from_inequalities(&halfspaces, &[], n) {
        Ok(bp) => {
            if bp.dim() != p.dim() {
                Err(Error::InvalidBlowUpDepth)
            } else {
                Ok(bp)
            }
        }
        Err(Error::EmptyIntersection) | Err(Error::NonLatticeVertex) => {
            Err(Error::InvalidBlowUpDepth)
        }
        Err(e) => Err(e),
    }
}

/// The face of `p` whose vertex set is exactly the given indices.
pub fn face_from_vertex_indices(p: &LatticePolytope, indices: &[usize]) -> Result<Face> {
    let mut want: Vec<usize> = indices.to_vec();
    want.sort();
    want.dedup();
    for d in 0..p.dim() {
        for f in p.faces_of_dim(d)? {
            if f.vertex_indices == want {
                return Ok(f);
            }
        }
    }
    Err(Error::NotAFace)
}
