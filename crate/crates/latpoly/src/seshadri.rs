//! Combinatorial bounds for the Seshadri constant of a polarized toric
//! surface at a general point.
//!
//! Lower bound: the Seshadri constant dominates s(dL; x)/d for every
//! dilation d, where s is the degree of jet separation at the general
//! point. Upper bound: the fibers of the lattice projection along a
//! width direction u sweep out curves through the general point with
//! L.C = width_u(P) and multiplicity 1.

use num_rational::BigRational;

use crate::error::{Error, Result};
use crate::jets::{degree_of_jet_separation, JetPoint, PointConfiguration};
use crate::linalg::{Int, Rat};
use crate::polytope::LatticePolytope;

pub const DEFAULT_DILATION_CAP: u64 = 3;

/// Exact rational lower/upper bounds with their witnesses.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EpsilonBounds {
    pub lower: Rat,
    pub upper: Rat,
    /// (dilation d, jet degree s) achieving lower = s/d.
    pub lower_witness: (u64, usize),
    /// Width direction achieving the upper bound, with its width.
    pub upper_witness: (Vec<Int>, Int),
}

/// Bounds for the Seshadri constant at a general point; `n` controls the
/// width-direction search box and (capped by `dilation_cap`) the
/// dilation search.
pub fn epsilon_bounds_with_cap(
    p: &LatticePolytope,
    n: u64,
    dilation_cap: u64,
) -> Result<EpsilonBounds> {
    if p.dim() != 2 || p.ambient_dim() != 2 {
        return Err(Error::NotASurface);
    }
    if n < 1 {
        return Err(Error::InvalidArgument("search bound must be >= 1".into()));
    }
    let max_d = n.min(dilation_cap).max(1);
    let mut lower = BigRational::from_integer(Int::from(0));
    let mut lower_witness = (1u64, 0usize);
    for d in 1..=max_d {
        let dp = p.dilate(d)?;
        let config = PointConfiguration::from_polytope(&dp);
        let s = degree_of_jet_separation(&config, &JetPoint::Generic)?;
        let bound = BigRational::new(Int::from(s as i64), Int::from(d as i64));
        if bound > lower {
            lower = bound;
            lower_witness = (d, s);
        }
    }

    let (width, direction) = p.lattice_width(n)?;
    let upper = BigRational::from_integer(width.clone());

    if lower > upper {
        return Err(Error::InternalInconsistency(format!(
            "jet lower bound {lower} exceeds width upper bound {upper}"
        )));
    }
    Ok(EpsilonBounds {
        lower,
        upper,
        lower_witness,
        upper_witness: (direction, width),
    })
}

pub fn epsilon_bounds(p: &LatticePolytope, n: u64) -> Result<EpsilonBounds> {
    epsilon_bounds_with_cap(p, n, DEFAULT_DILATION_CAP)
}

/// The classical bound sqrt(L^2), for context only: floating point,
/// never part of the exact bounds.
pub fn sqrt_degree_diagnostic(p: &LatticePolytope) -> Result<f64> {
    let vol = p.normalized_volume_2d()?;
    let v: f64 = vol.to_string().parse().expect("integer literal");
    Ok(v.sqrt())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::{int, rat};

    fn poly(rows: &[Vec<i64>]) -> LatticePolytope {
        LatticePolytope::from_vertices_i64(rows).unwrap()
    }

    #[test]
    fn square_o22_bounds() {
        let square = poly(&[vec![-1, -1], vec![1, -1], vec![-1, 1], vec![1, 1]]);
        let b = epsilon_bounds(&square, 17).unwrap();
        assert_eq!(b.lower, rat(2));
        assert_eq!(b.upper, rat(2));
    }

    #[test]
    fn dilated_simplex() {
        let simplex = poly(&[vec![0, 0], vec![1, 0], vec![0, 1]]);
        for d in 1..=3u64 {
            let dp = simplex.dilate(d).unwrap();
            let b = epsilon_bounds(&dp, 5).unwrap();
            assert_eq!(b.lower, rat(d as i64));
            assert_eq!(b.upper, rat(d as i64));
        }
    }

    #[test]
    fn thin_rectangle() {
        let rect = poly(&[vec![0, 0], vec![1, 0], vec![0, 3], vec![1, 3]]);
        let b = epsilon_bounds(&rect, 5).unwrap();
        assert_eq!(b.upper, rat(1));
        assert!(b.lower <= b.upper);
    }

    #[test]
    fn diagnostics() {
        let square = poly(&[vec![-1, -1], vec![1, -1], vec![-1, 1], vec![1, 1]]);
        assert!((sqrt_degree_diagnostic(&square).unwrap() - 8f64.sqrt()).abs() < 1e-12);
        let simplex = poly(&[vec![0, 0], vec![1, 0], vec![0, 1]]);
        assert_eq!(sqrt_degree_diagnostic(&simplex).unwrap(), 1.0);
        let two = poly(&[vec![0, 0], vec![2, 0], vec![0, 2]]);
        assert_eq!(sqrt_degree_diagnostic(&two).unwrap(), 2.0);
    }

    #[test]
    fn non_surface_rejected() {
        let seg = poly(&[vec![0, 0], vec![1, 0]]);
        assert!(matches!(epsilon_bounds(&seg, 5), Err(Error::NotASurface)));
        let _ = int(0);
    }
}
