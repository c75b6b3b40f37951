//! Enumeration of smooth lattice polygons with a bounded number of
//! lattice points, and a loader for external 3D classification data.
//!
//! Every smooth complete surface fan is an iterated star subdivision of
//! the fan of P^2 or of a Hirzebruch surface F_a, so the polygons are
//! generated fan-first: enumerate the fans, then the ample edge-length
//! assignments whose lattice point count fits the budget.

use std::collections::BTreeMap;

use rayon::prelude::*;
use serde::Deserialize;

use crate::cayley::is_cayley;
use crate::error::{Error, Result};
use crate::linalg::int;
use crate::polytope::LatticePolytope;

pub const DEFAULT_HIRZEBRUCH_CAP: i64 = 12;

/// A smooth complete fan in Z^2: cyclically ordered primitive rays with
/// consecutive determinant 1.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SmoothFan2D {
    pub rays: Vec<(i64, i64)>,
}

impl SmoothFan2D {
    pub fn consecutive_dets_are_one(&self) -> bool {
        let d = self.rays.len();
        (0..d).all(|i| {
            let (ax, ay) = self.rays[i];
            let (bx, by) = self.rays[(i + 1) % d];
            ax * by - ay * bx == 1
        })
    }

    /// Lexicographic minimum over all rotations and both orientations of
    /// the ray list mapped so the leading consecutive pair becomes the
    /// standard basis.
    pub fn canonical_rays(&self) -> Vec<(i64, i64)> {
        let d = self.rays.len();
        let mut best: Option<Vec<(i64, i64)>> = None;
        for start in 0..d {
            for rev in [false, true] {
                let seq: Vec<(i64, i64)> = (0..d)
                    .map(|i| {
                        if rev {
                            self.rays[(start + d - i) % d]
                        } else {
                            self.rays[(start + i) % d]
                        }
                    })
                    .collect();
                let (ax, ay) = seq[0];
                let (bx, by) = seq[1];
                let det = ax * by - ay * bx;
                debug_assert_eq!(det.abs(), 1);
                // inverse of [[ax, bx], [ay, by]] scaled by det
                let t = |&(x, y): &(i64, i64)| -> (i64, i64) {
                    ((by * x - bx * y) / det, (ax * y - ay * x) / det)
                };
                let cand: Vec<(i64, i64)> = seq.iter().map(t).collect();
                match &best {
                    Some(b) if *b <= cand => {}
                    _ => best = Some(cand),
                }
            }
        }
        best.expect("at least one candidate")
    }

    /// All fans obtained by one star subdivision (inserting u_i + u_{i+1}).
    fn subdivisions(&self) -> Vec<SmoothFan2D> {
        let d = self.rays.len();
        (0..d)
            .map(|i| {
                let (ax, ay) = self.rays[i];
                let (bx, by) = self.rays[(i + 1) % d];
                let mut rays = self.rays.clone();
                rays.insert(i + 1, (ax + bx, ay + by));
                SmoothFan2D { rays }
            })
            .collect()
    }
}

fn p2_fan() -> SmoothFan2D {
    SmoothFan2D {
        rays: vec![(1, 0), (0, 1), (-1, -1)],
    }
}

fn hirzebruch_fan(a: i64) -> SmoothFan2D {
    SmoothFan2D {
        rays: vec![(1, 0), (0, 1), (-1, a), (0, -1)],
    }
}

/// All smooth complete 2D fans with at most `max_rays` rays, up to
/// lattice automorphism, grown by star subdivision from P^2 and the
/// Hirzebruch fans F_a (0 <= a <= hirzebruch_cap).
pub fn enumerate_smooth_fans_2d(max_rays: usize, hirzebruch_cap: i64) -> Vec<SmoothFan2D> {
    let mut seeds: Vec<SmoothFan2D> = Vec::new();
    if max_rays >= 3 {
        seeds.push(p2_fan());
    }
    if max_rays >= 4 {
        for a in 0..=hirzebruch_cap {
            seeds.push(hirzebruch_fan(a));
        }
    }
    let mut seen: std::collections::BTreeSet<Vec<(i64, i64)>> = std::collections::BTreeSet::new();
    let mut out: Vec<SmoothFan2D> = Vec::new();
    let mut queue: Vec<SmoothFan2D> = Vec::new();
    for f in seeds {
        debug_assert!(f.consecutive_dets_are_one());
        if seen.insert(f.canonical_rays()) {
            queue.push(f.clone());
            out.push(f);
        }
    }
    while let Some(f) = queue.pop() {
        if f.rays.len() >= max_rays {
            continue;
        }
        for sub in f.subdivisions() {
            debug_assert!(sub.consecutive_dets_are_one());
            if seen.insert(sub.canonical_rays()) {
                queue.push(sub.clone());
                out.push(sub);
            }
        }
    }
    out.sort();
    out
}

/// All lattice polygons with outer normal fan exactly `fan` and at most
/// `max_points` lattice points, one per translation class.
pub fn polygons_from_fan(fan: &SmoothFan2D, max_points: usize) -> Vec<LatticePolytope> {
    let d = fan.rays.len();
    // edge vector for outer normal u, counterclockwise traversal
    let edges: Vec<(i64, i64)> = fan.rays.iter().map(|&(x, y)| (-y, x)).collect();
    let mut out = Vec::new();
    let mut lengths = vec![0i64; d];
    enumerate_lengths(&edges, 0, max_points as i64, (0, 0), &mut lengths, &mut |l| {
        // vertices are the partial sums
        let mut verts: Vec<Vec<i64>> = Vec::with_capacity(d);
        let mut pos = (0i64, 0i64);
        for i in 0..d {
            verts.push(vec![pos.0, pos.1]);
            pos.0 += l[i] * edges[i].0;
            pos.1 += l[i] * edges[i].1;
        }
        debug_assert_eq!(pos, (0, 0), "edge loop closes");
        let mut area2 = 0i64;
        for i in 0..d {
            let a = &verts[i];
            let b = &verts[(i + 1) % d];
            area2 += a[0] * b[1] - b[0] * a[1];
        }
        debug_assert!(area2 > 0, "counterclockwise traversal");
        let boundary: i64 = l.iter().sum();
        // Pick: total = I + B = area2/2 + B/2 + 1
        let total = (area2 + boundary) / 2 + 1;
        if total as usize <= max_points {
            out.push(LatticePolytope::from_vertices_i64(&verts).expect("valid polygon"));
        }
    });
    out
}

fn enumerate_lengths(
    edges: &[(i64, i64)],
    i: usize,
    budget: i64,
    pos: (i64, i64),
    lengths: &mut Vec<i64>,
    emit: &mut impl FnMut(&[i64]),
) {
    let d = edges.len();
    if i == d {
        if pos == (0, 0) {
            emit(lengths);
        }
        return;
    }
    let remaining_min = (d - i - 1) as i64; // later edges need length >= 1
    let mut l = 1i64;
    while l + remaining_min <= budget {
        lengths[i] = l;
        enumerate_lengths(
            edges,
            i + 1,
            budget - l,
            (pos.0 + l * edges[i].0, pos.1 + l * edges[i].1),
            lengths,
            emit,
        );
        l += 1;
    }
    lengths[i] = 0;
}

/// One entry of a smooth classification.
#[derive(Debug, Clone)]
pub struct ClassificationRecord {
    /// The polytope in normal form.
    pub polytope: LatticePolytope,
    pub lattice_point_count: usize,
    pub is_smooth: bool,
    pub is_cayley: bool,
}

/// All smooth lattice polygons with at most `max_points` lattice points,
/// in normal form, sorted by (lattice point count, vertex matrix).
pub fn list_smooth_2d(max_points: usize) -> Result<Vec<ClassificationRecord>> {
    list_smooth_2d_with_caps(max_points, max_points, DEFAULT_HIRZEBRUCH_CAP)
}

pub fn list_smooth_2d_with_caps(
    max_points: usize,
    max_rays: usize,
    hirzebruch_cap: i64,
) -> Result<Vec<ClassificationRecord>> {
    if max_points < 3 {
        return Err(Error::InvalidArgument(
            "a lattice polygon has at least 3 lattice points".into(),
        ));
    }
    let fans = enumerate_smooth_fans_2d(max_rays, hirzebruch_cap);
    let mut normal_forms: Vec<LatticePolytope> = fans
        .par_iter()
        .map(|fan| {
            polygons_from_fan(fan, max_points)
                .iter()
                .map(|p| p.normal_form().expect("full-dimensional polygon"))
                .collect::<Vec<_>>()
        })
        .reduce(Vec::new, |mut a, b| {
            a.extend(b);
            a
        });
    normal_forms.sort_by(|a, b| a.vertices().cmp(b.vertices()));
    normal_forms.dedup_by(|a, b| a.vertices() == b.vertices());

    let mut records: Vec<ClassificationRecord> = normal_forms
        .into_iter()
        .map(|p| {
            let count = p.lattice_points().len();
            let cayley = is_cayley(&p)?.is_some();
            let smooth = p.is_smooth();
            debug_assert!(smooth, "fan construction only yields smooth polygons");
            Ok(ClassificationRecord {
                polytope: p,
                lattice_point_count: count,
                is_smooth: smooth,
                is_cayley: cayley,
            })
        })
        .collect::<Result<_>>()?;
    records.sort_by(|a, b| {
        a.lattice_point_count
            .cmp(&b.lattice_point_count)
            .then_with(|| a.polytope.vertices().cmp(b.polytope.vertices()))
    });
    Ok(records)
}

/// Lattice point count tally of a classification.
pub fn tally_lattice_points(records: &[ClassificationRecord]) -> BTreeMap<usize, usize> {
    let mut tally = BTreeMap::new();
    for r in records {
        *tally.entry(r.lattice_point_count).or_insert(0) += 1;
    }
    tally
}

/// Cayley/non-Cayley tally of a classification.
pub fn tally_cayley(records: &[ClassificationRecord]) -> BTreeMap<bool, usize> {
    let mut tally = BTreeMap::new();
    for r in records {
        *tally.entry(r.is_cayley).or_insert(0) += 1;
    }
    tally
}

#[derive(Deserialize)]
struct PolytopeEntry {
    vertices: Vec<Vec<i64>>,
}

/// Load and validate an external 3D classification: a JSON array of
/// objects {"vertices": [[x,y,z], ...]}. Every entry must be a smooth
/// 3-dimensional lattice polytope with at most 16 lattice points.
pub fn load_classification_3d(json: &str) -> Result<Vec<ClassificationRecord>> {
    let entries: Vec<PolytopeEntry> =
        serde_json::from_str(json).map_err(|e| Error::Parse(e.to_string()))?;
    let mut records = Vec::with_capacity(entries.len());
    for (index, entry) in entries.iter().enumerate() {
        let fail = |reason: &str| Error::ClassificationEntry {
            index,
            reason: reason.to_string(),
        };
        if entry.vertices.iter().any(|v| v.len() != 3) {
            return Err(fail("vertices must have 3 coordinates"));
        }
        let p = LatticePolytope::from_vertices(
            &entry
                .vertices
                .iter()
                .map(|v| v.iter().map(|&x| int(x)).collect())
                .collect::<Vec<_>>(),
        )
        .map_err(|e| fail(&e.to_string()))?;
        if p.dim() != 3 {
            return Err(fail("not 3-dimensional"));
        }
        if !p.is_smooth() {
            return Err(fail("not smooth"));
        }
        let count = p.lattice_points().len();
        if count > 16 {
            return Err(fail("more than 16 lattice points"));
        }
        let nf = p.normal_form().map_err(|e| fail(&e.to_string()))?;
        let cayley = is_cayley(&nf)?.is_some();
        records.push(ClassificationRecord {
            polytope: nf,
            lattice_point_count: count,
            is_smooth: true,
            is_cayley: cayley,
        });
    }
    Ok(records)
}
