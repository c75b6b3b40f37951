//! Lattice polytopes with exact dual descriptions.

use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::dd;
use crate::error::{Error, Result};
use crate::linalg::{
    dot, int, primitivize, saturate, Int, IntMatrix, Rat,
};

/// A halfspace <normal, x> <= offset with primitive integer normal.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct Halfspace {
    pub normal: Vec<Int>,
    pub offset: Int,
}

/// An affine-hull equation <normal, x> = value.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct Equation {
    pub normal: Vec<Int>,
    pub value: Int,
}

/// A face of a polytope, identified by the vertices lying on it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Face {
    pub vertex_indices: Vec<usize>,
    pub dim: usize,
    pub tight_facets: Vec<usize>,
}

/// A convex lattice polytope in Z^n with both vertex and halfspace
/// descriptions, immutable after construction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LatticePolytope {
    ambient_dim: usize,
    dim: usize,
    vertices: Vec<Vec<Int>>,
    facets: Vec<Halfspace>,
    equations: Vec<Equation>,
}

impl LatticePolytope {
    /// Convex hull of a set of lattice points.
    pub fn from_vertices(points: &[Vec<Int>]) -> Result<Self> {
        if points.is_empty() {
            return Err(Error::EmptyInput);
        }
        let n = points[0].len();
        if points.iter().any(|p| p.len() != n) {
            return Err(Error::RaggedInput);
        }
        let mut pts: Vec<Vec<Int>> = points.to_vec();
        pts.sort();
        pts.dedup();

        if n == 0 {
            return Ok(LatticePolytope {
                ambient_dim: 0,
                dim: 0,
                vertices: vec![vec![]],
                facets: vec![],
                equations: vec![],
            });
        }

        let v0 = pts[0].clone();
        let diffs: Vec<Vec<Int>> = pts
            .iter()
            .map(|p| p.iter().zip(&v0).map(|(a, b)| a - b).collect())
            .collect();
        let basis = saturate(&diffs, n)?;
        let d = basis.len();

        if d == 0 {
            // a single point
            let equations = (0..n)
                .map(|i| {
                    let mut normal = vec![Int::zero(); n];
                    normal[i] = Int::one();
                    Equation {
                        value: v0[i].clone(),
                        normal,
                    }
                })
                .collect();
            return Ok(LatticePolytope {
                ambient_dim: n,
                dim: 0,
                vertices: vec![v0],
                facets: vec![],
                equations,
            });
        }

        // lattice-preserving coordinates on the affine hull: U unimodular
        // with U * (saturated difference lattice) = Z^d x 0
        let u = if d == n {
            IntMatrix::identity(n)
        } else {
            let mut m = IntMatrix::zero(n, d);
            for (j, b) in basis.iter().enumerate() {
                for i in 0..n {
                    m[(i, j)] = b[i].clone();
                }
            }
            let (us, s, _) = m.smith_normal_form();
            for i in 0..d {
                debug_assert!(s[(i, i)].is_one(), "saturated lattice has trivial SNF");
            }
            us
        };

        let project = |p: &[Int]| -> Vec<Int> {
            (0..d)
                .map(|i| (0..n).map(|j| &u[(i, j)] * (&p[j] - &v0[j])).sum())
                .collect()
        };
        let ys: Vec<Vec<Int>> = pts.iter().map(|p| project(p)).collect();
        if d < n {
            for (p, _) in pts.iter().zip(&ys) {
                for i in d..n {
                    let r: Int = (0..n).map(|j| &u[(i, j)] * (&p[j] - &v0[j])).sum();
                    debug_assert!(r.is_zero(), "point outside affine hull coordinates");
                }
            }
        }

        let (vertex_idx, y_facets) = hull_full_dim(&ys, d)?;

        let mut vertices: Vec<Vec<Int>> =
            vertex_idx.iter().map(|&i| pts[i].clone()).collect();
        vertices.sort();

        let mut facets: Vec<Halfspace> = y_facets
            .into_iter()
            .map(|(w, c)| {
                // lift: <w, (U(x-v0))_{1..d}> <= c
                let normal: Vec<Int> = (0..n)
                    .map(|j| (0..d).map(|i| &w[i] * &u[(i, j)]).sum())
                    .collect();
                let offset = &c + dot(&normal, &v0);
                Halfspace { normal, offset }
            })
            .collect();
        facets.sort();

        let mut equations: Vec<Equation> = (d..n)
            .map(|i| {
                let normal: Vec<Int> = (0..n).map(|j| u[(i, j)].clone()).collect();
                let value = dot(&normal, &v0);
                Equation { normal, value }
            })
            .collect();
        equations.sort();

        Ok(LatticePolytope {
            ambient_dim: n,
            dim: d,
            vertices,
            facets,
            equations,
        })
    }

    pub fn from_vertices_i64(points: &[Vec<i64>]) -> Result<Self> {
        LatticePolytope::from_vertices(
            &points
                .iter()
                .map(|p| p.iter().map(|&x| int(x)).collect())
                .collect::<Vec<_>>(),
        )
    }

    /// Bounded intersection of halfspaces (and optional equations);
    /// vertices must be lattice points.
    pub fn from_inequalities(
        halfspaces: &[Halfspace],
        equations: &[Equation],
        ambient_dim: usize,
    ) -> Result<Self> {
        let n = ambient_dim;
        for h in halfspaces {
            if h.normal.len() != n {
                return Err(Error::RaggedInput);
            }
        }
        for e in equations {
            if e.normal.len() != n {
                return Err(Error::RaggedInput);
            }
        }
        if n == 0 {
            return LatticePolytope::from_vertices(&[vec![]]);
        }
        // homogenize: cone {(x,t) : <u,x> <= c*t, t >= 0}
        let mut rows: Vec<Vec<Int>> = Vec::new();
        for h in halfspaces {
            let mut row: Vec<Int> = h.normal.iter().map(|x| -x.clone()).collect();
            row.push(h.offset.clone());
            rows.push(row);
        }
        for e in equations {
            let mut row: Vec<Int> = e.normal.iter().map(|x| -x.clone()).collect();
            row.push(e.value.clone());
            rows.push(row.clone());
            rows.push(row.iter().map(|x| -x.clone()).collect());
        }
        let mut t_row = vec![Int::zero(); n];
        t_row.push(Int::one());
        rows.push(t_row);

        let rays = match dd::extreme_rays(&rows, n + 1) {
            Some(r) => r,
            None => {
                // lineality present: unbounded when feasible
                return if feasible(halfspaces, equations, n) {
                    Err(Error::Unbounded)
                } else {
                    Err(Error::EmptyIntersection)
                };
            }
        };

        let mut verts: Vec<Vec<Int>> = Vec::new();
        let mut recession = false;
        for ray in rays {
            let t = &ray[n];
            if t.is_zero() {
                recession = true;
            } else {
                let mut v = Vec::with_capacity(n);
                for x in &ray[..n] {
                    let (q, r) = x.div_rem(t);
                    if !r.is_zero() {
                        return Err(Error::NonLatticeVertex);
                    }
                    v.push(q);
                }
                verts.push(v);
            }
        }
        if verts.is_empty() {
            return Err(Error::EmptyIntersection);
        }
        if recession {
            return Err(Error::Unbounded);
        }
        LatticePolytope::from_vertices(&verts)
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn vertices(&self) -> &[Vec<Int>] {
        &self.vertices
    }

    pub fn facets(&self) -> &[Halfspace] {
        &self.facets
    }

    pub fn equations(&self) -> &[Equation] {
        &self.equations
    }

    pub fn contains(&self, p: &[Int]) -> bool {
        p.len() == self.ambient_dim
            && self.equations.iter().all(|e| dot(&e.normal, p) == e.value)
            && self.facets.iter().all(|f| dot(&f.normal, p) <= f.offset)
    }

    /// All lattice points, in lexicographic order.
    pub fn lattice_points(&self) -> Vec<Vec<Int>> {
        if self.ambient_dim == 0 {
            return vec![vec![]];
        }
        let n = self.ambient_dim;
        let lo: Vec<Int> = (0..n)
            .map(|j| self.vertices.iter().map(|v| v[j].clone()).min().unwrap())
            .collect();
        let hi: Vec<Int> = (0..n)
            .map(|j| self.vertices.iter().map(|v| v[j].clone()).max().unwrap())
            .collect();
        let mut out = Vec::new();
        let mut cur = lo.clone();
        'scan: loop {
            if self.contains(&cur) {
                out.push(cur.clone());
            }
            // lexicographic increment within the box
            let mut i = n;
            loop {
                if i == 0 {
                    break 'scan;
                }
                i -= 1;
                if cur[i] < hi[i] {
                    cur[i] += 1;
                    for j in i + 1..n {
                        cur[j] = lo[j].clone();
                    }
                    break;
                }
            }
        }
        out
    }

    /// All faces of intrinsic dimension `d`.
    pub fn faces_of_dim(&self, d: usize) -> Result<Vec<Face>> {
        if d > self.dim {
            return Err(Error::FaceDimOutOfRange(d));
        }
        let nv = self.vertices.len();
        let incidences: Vec<Vec<usize>> = self
            .facets
            .iter()
            .map(|f| {
                (0..nv)
                    .filter(|&i| dot(&f.normal, &self.vertices[i]) == f.offset)
                    .collect()
            })
            .collect();
        // all faces arise as intersections of facet vertex sets (plus P itself)
        let mut sets: Vec<Vec<usize>> = vec![(0..nv).collect()];
        sets.extend(incidences.iter().cloned());
        sets.retain(|s| !s.is_empty());
        sets.sort();
        sets.dedup();
        loop {
            let mut grew = false;
            let mut new_sets = Vec::new();
            for s in &sets {
                for inc in &incidences {
                    let t: Vec<usize> =
                        s.iter().filter(|i| inc.contains(i)).cloned().collect();
                    if !t.is_empty() && !sets.contains(&t) && !new_sets.contains(&t) {
                        new_sets.push(t);
                        grew = true;
                    }
                }
            }
            sets.extend(new_sets);
            if !grew {
                break;
            }
            sets.sort();
            sets.dedup();
        }
        sets.sort();
        let mut faces = Vec::new();
        for s in sets {
            let fdim = self.affine_rank_of(&s);
            if fdim != d {
                continue;
            }
            let tight_facets: Vec<usize> = (0..self.facets.len())
                .filter(|&f| s.iter().all(|i| incidences[f].contains(i)))
                .collect();
            faces.push(Face {
                vertex_indices: s,
                dim: fdim,
                tight_facets,
            });
        }
        Ok(faces)
    }

    fn affine_rank_of(&self, vertex_indices: &[usize]) -> usize {
        if vertex_indices.len() <= 1 {
            return 0;
        }
        let base = &self.vertices[vertex_indices[0]];
        let diffs: Vec<Vec<Int>> = vertex_indices[1..]
            .iter()
            .map(|&i| {
                self.vertices[i]
                    .iter()
                    .zip(base)
                    .map(|(a, b)| a - b)
                    .collect()
            })
            .collect();
        IntMatrix::from_rows(&diffs).expect("equal lengths").to_rat().rank()
    }

    /// Primitive generators of the edges leaving the vertex `v`.
    pub fn primitive_edge_directions(&self, v: &[Int]) -> Result<Vec<Vec<Int>>> {
        let vi = self
            .vertices
            .iter()
            .position(|w| w.as_slice() == v)
            .ok_or(Error::NotAVertex)?;
        if self.dim == 0 {
            return Ok(vec![]);
        }
        let mut dirs = Vec::new();
        for edge in self.faces_of_dim(1)? {
            if !edge.vertex_indices.contains(&vi) {
                continue;
            }
            debug_assert_eq!(edge.vertex_indices.len(), 2);
            let other = *edge.vertex_indices.iter().find(|&&i| i != vi).unwrap();
            let mut dir: Vec<Int> = self.vertices[other]
                .iter()
                .zip(v)
                .map(|(a, b)| a - b)
                .collect();
            primitivize(&mut dir);
            dirs.push(dir);
        }
        dirs.sort();
        Ok(dirs)
    }

    /// True iff the primitive edge directions at every vertex form a basis
    /// of the lattice (evaluated inside the affine hull when dim < n).
    pub fn is_smooth(&self) -> bool {
        if self.dim < self.ambient_dim {
            return self.project_to_affine_hull().is_smooth();
        }
        let n = self.dim;
        for v in &self.vertices {
            let dirs = self.primitive_edge_directions(v).expect("is a vertex");
            if dirs.len() != n {
                return false;
            }
            let m = IntMatrix::from_rows(&dirs).expect("equal lengths");
            if !m.determinant().expect("square").abs().is_one() {
                return false;
            }
        }
        true
    }

    /// True iff the vertex `v` has exactly n edges whose primitive
    /// directions form a lattice basis (full-dimensional polytopes only).
    pub fn is_smooth_at(&self, v: &[Int]) -> Result<bool> {
        if self.dim < self.ambient_dim {
            return Err(Error::NotFullDimensional);
        }
        let dirs = self.primitive_edge_directions(v)?;
        if dirs.len() != self.dim {
            return Ok(false);
        }
        let m = IntMatrix::from_rows(&dirs)?;
        Ok(m.determinant()?.abs().is_one())
    }

    /// Re-embed a lower-dimensional polytope into Z^dim via a
    /// lattice-preserving affine map of its affine hull.
    pub fn project_to_affine_hull(&self) -> LatticePolytope {
        if self.dim == self.ambient_dim {
            return self.clone();
        }
        if self.dim == 0 {
            return LatticePolytope::from_vertices(&[vec![]])
                .expect("point polytope");
        }
        let n = self.ambient_dim;
        let v0 = &self.vertices[0];
        let diffs: Vec<Vec<Int>> = self
            .vertices
            .iter()
            .map(|p| p.iter().zip(v0).map(|(a, b)| a - b).collect())
            .collect();
        let basis = saturate(&diffs, n).expect("valid dims");
        let d = basis.len();
        let mut m = IntMatrix::zero(n, d);
        for (j, b) in basis.iter().enumerate() {
            for i in 0..n {
                m[(i, j)] = b[i].clone();
            }
        }
        let (u, _, _) = m.smith_normal_form();
        let ys: Vec<Vec<Int>> = self
            .vertices
            .iter()
            .map(|p| {
                (0..d)
                    .map(|i| (0..n).map(|j| &u[(i, j)] * (&p[j] - &v0[j])).sum())
                    .collect()
            })
            .collect();
        LatticePolytope::from_vertices(&ys).expect("nonempty")
    }

    /// Spread max<u,P> - min<u,P> of a functional on the polytope.
    pub fn spread(&self, u: &[Int]) -> Int {
        let vals: Vec<Int> = self.vertices.iter().map(|v| dot(u, v)).collect();
        let max = vals.iter().max().unwrap().clone();
        let min = vals.iter().min().unwrap();
        max - min
    }

    /// Minimum spread over primitive directions with max-norm <= bound;
    /// an upper bound for the true lattice width, exact when the true
    /// minimizer lies in the box. Ties resolved lexicographically.
    pub fn lattice_width(&self, bound: u64) -> Result<(Int, Vec<Int>)> {
        if bound == 0 {
            return Err(Error::InvalidArgument("width search bound must be >= 1".into()));
        }
        if self.ambient_dim == 0 {
            return Err(Error::InvalidArgument(
                "lattice width needs a positive ambient dimension".into(),
            ));
        }
        let mut best: Option<(Int, Vec<Int>)> = None;
        for u in primitive_directions(self.ambient_dim, bound as i64) {
            let w = self.spread(&u);
            match &best {
                Some((bw, bu)) if *bw < w || (*bw == w && *bu <= u) => {}
                _ => best = Some((w, u)),
            }
        }
        Ok(best.expect("at least one direction"))
    }

    /// Canonical representative of the affine unimodular equivalence class.
    pub fn normal_form(&self) -> Result<LatticePolytope> {
        if self.dim != self.ambient_dim || self.ambient_dim == 0 {
            return Err(Error::NotFullDimensional);
        }
        let n = self.ambient_dim;
        let mut best: Option<Vec<Vec<Int>>> = None;
        for v in &self.vertices {
            let dirs = self.primitive_edge_directions(v)?;
            for tuple in ordered_tuples(&dirs, n) {
                let mut dmat = IntMatrix::zero(n, n);
                for (j, dir) in tuple.iter().enumerate() {
                    for i in 0..n {
                        dmat[(i, j)] = dir[i].clone();
                    }
                }
                if dmat.determinant()?.is_zero() {
                    continue;
                }
                // U * D = H with U unimodular; H depends only on the class
                let (_, umap) = dmat.hermite_normal_form();
                let mut images: Vec<Vec<Int>> = self
                    .vertices
                    .iter()
                    .map(|w| {
                        (0..n)
                            .map(|i| {
                                (0..n).map(|j| &umap[(i, j)] * (&w[j] - &v[j])).sum()
                            })
                            .collect()
                    })
                    .collect();
                // shift to componentwise minimum 0
                for j in 0..n {
                    let m: Int = images.iter().map(|p| p[j].clone()).min().unwrap();
                    for p in &mut images {
                        p[j] -= &m;
                    }
                }
                images.sort();
                match &best {
                    Some(b) if *b <= images => {}
                    _ => best = Some(images),
                }
            }
        }
        LatticePolytope::from_vertices(&best.expect("smooth or not, some basis tuple exists"))
    }

    /// Twice the Euclidean area of a polygon (the degree of the surface).
    pub fn normalized_volume_2d(&self) -> Result<Int> {
        if self.dim != 2 {
            return Err(Error::NotASurface);
        }
        if self.ambient_dim != 2 {
            return self.project_to_affine_hull().normalized_volume_2d();
        }
        let cyc = cyclic_order_2d(&self.vertices);
        let k = cyc.len();
        let mut s = Int::zero();
        for i in 0..k {
            let a = &self.vertices[cyc[i]];
            let b = &self.vertices[cyc[(i + 1) % k]];
            s += &a[0] * &b[1] - &b[0] * &a[1];
        }
        Ok(s.abs())
    }

    /// Dilation d * P.
    pub fn dilate(&self, d: u64) -> Result<LatticePolytope> {
        if d < 1 {
            return Err(Error::InvalidArgument("dilation factor must be >= 1".into()));
        }
        let f = int(d as i64);
        let scaled: Vec<Vec<Int>> = self
            .vertices
            .iter()
            .map(|v| v.iter().map(|x| x * &f).collect())
            .collect();
        LatticePolytope::from_vertices(&scaled)
    }
}

/// Hull of a full-dimensional point set in Z^d (d >= 1): indices of the
/// extreme points and the facet inequalities (w, c) meaning <w, y> <= c.
fn hull_full_dim(points: &[Vec<Int>], d: usize) -> Result<(Vec<usize>, Vec<(Vec<Int>, Int)>)> {
    // facets of conv(points) are the extreme rays of the polar cone
    // {(a,b) : <p,a> + b >= 0 for all points p}
    let rows: Vec<Vec<Int>> = points
        .iter()
        .map(|p| {
            let mut r = p.clone();
            r.push(Int::one());
            r
        })
        .collect();
    let rays = dd::extreme_rays(&rows, d + 1).ok_or_else(|| {
        Error::InternalInconsistency("affinely spanning set gave a non-pointed dual cone".into())
    })?;
    let mut facets: Vec<(Vec<Int>, Int)> = Vec::new();
    for ray in rays {
        let mut w: Vec<Int> = ray[..d].iter().map(|x| -x.clone()).collect();
        let mut c = ray[d].clone();
        let mut g = Int::zero();
        for x in &w {
            g = g.gcd(x);
        }
        if g > Int::one() {
            debug_assert!((&c % &g).is_zero(), "lattice facet offset divisible by gcd");
            for x in &mut w {
                *x /= &g;
            }
            c /= &g;
        }
        facets.push((w, c));
    }
    let mut vertex_idx = Vec::new();
    for (i, p) in points.iter().enumerate() {
        let tight: Vec<Vec<Int>> = facets
            .iter()
            .filter(|(w, c)| dot(w, p) == *c)
            .map(|(w, _)| w.clone())
            .collect();
        if !tight.is_empty()
            && IntMatrix::from_rows(&tight)?.to_rat().rank() == d
        {
            vertex_idx.push(i);
        }
    }
    Ok((vertex_idx, facets))
}

/// All primitive vectors with max-norm <= bound, first nonzero entry
/// positive, in lexicographic order.
pub fn primitive_directions(n: usize, bound: i64) -> Vec<Vec<Int>> {
    let mut out = Vec::new();
    let mut cur = vec![0i64; n];
    enumerate_dirs(&mut cur, 0, bound, &mut out);
    out
}

fn enumerate_dirs(cur: &mut Vec<i64>, i: usize, bound: i64, out: &mut Vec<Vec<Int>>) {
    if i == cur.len() {
        let g = cur.iter().fold(0i64, |a, &b| a.gcd(&b));
        if g == 1 {
            if let Some(first) = cur.iter().find(|&&x| x != 0) {
                if *first > 0 {
                    out.push(cur.iter().map(|&x| int(x)).collect());
                }
            }
        }
        return;
    }
    for v in -bound..=bound {
        cur[i] = v;
        enumerate_dirs(cur, i + 1, bound, out);
    }
    cur[i] = 0;
}

/// Ordered n-tuples of distinct entries from `items`.
fn ordered_tuples<'a>(items: &'a [Vec<Int>], n: usize) -> Vec<Vec<&'a Vec<Int>>> {
    let mut out = Vec::new();
    let mut cur: Vec<&Vec<Int>> = Vec::new();
    let mut used = vec![false; items.len()];
    fn rec<'a>(
        items: &'a [Vec<Int>],
        n: usize,
        used: &mut Vec<bool>,
        cur: &mut Vec<&'a Vec<Int>>,
        out: &mut Vec<Vec<&'a Vec<Int>>>,
    ) {
        if cur.len() == n {
            out.push(cur.clone());
            return;
        }
        for i in 0..items.len() {
            if used[i] {
                continue;
            }
            used[i] = true;
            cur.push(&items[i]);
            rec(items, n, used, cur, out);
            cur.pop();
            used[i] = false;
        }
    }
    rec(items, n, &mut used, &mut cur, &mut out);
    out
}

/// Indices of a convex polygon's vertices in counterclockwise order.
fn cyclic_order_2d(verts: &[Vec<Int>]) -> Vec<usize> {
    let k = int(verts.len() as i64);
    let cx: Rat = BigRational::new(verts.iter().map(|v| v[0].clone()).sum(), k.clone());
    let cy: Rat = BigRational::new(verts.iter().map(|v| v[1].clone()).sum(), k);
    let dir = |i: usize| -> (Rat, Rat) {
        (
            Rat::from_integer(verts[i][0].clone()) - &cx,
            Rat::from_integer(verts[i][1].clone()) - &cy,
        )
    };
    let half = |d: &(Rat, Rat)| -> u8 {
        if d.1 > Rat::zero() || (d.1.is_zero() && d.0 > Rat::zero()) {
            0
        } else {
            1
        }
    };
    let mut idx: Vec<usize> = (0..verts.len()).collect();
    idx.sort_by(|&a, &b| {
        let da = dir(a);
        let db = dir(b);
        half(&da).cmp(&half(&db)).then_with(|| {
            let cross = &da.0 * &db.1 - &db.0 * &da.1;
            if cross > Rat::zero() {
                std::cmp::Ordering::Less
            } else if cross < Rat::zero() {
                std::cmp::Ordering::Greater
            } else {
                std::cmp::Ordering::Equal
            }
        })
    });
    idx
}

/// Exact Fourier-Motzkin feasibility test for a system of inequalities
/// and equations; only used on degenerate inputs.
fn feasible(halfspaces: &[Halfspace], equations: &[Equation], n: usize) -> bool {
    let mut ineqs: Vec<(Vec<Rat>, Rat)> = Vec::new();
    for h in halfspaces {
        ineqs.push((
            h.normal.iter().map(|x| Rat::from_integer(x.clone())).collect(),
            Rat::from_integer(h.offset.clone()),
        ));
    }
    for e in equations {
        let a: Vec<Rat> = e.normal.iter().map(|x| Rat::from_integer(x.clone())).collect();
        let b = Rat::from_integer(e.value.clone());
        ineqs.push((a.clone(), b.clone()));
        ineqs.push((a.iter().map(|x| -x.clone()).collect(), -b));
    }
    fm_feasible(ineqs, n)
}

fn fm_feasible(ineqs: Vec<(Vec<Rat>, Rat)>, nvars: usize) -> bool {
    if nvars == 0 {
        return ineqs.iter().all(|(_, b)| !b.is_negative());
    }
    let k = nvars - 1;
    let mut pos = Vec::new();
    let mut neg = Vec::new();
    let mut zero = Vec::new();
    for (a, b) in ineqs {
        if a[k].is_zero() {
            zero.push((a[..k].to_vec(), b));
        } else if a[k] > Rat::zero() {
            pos.push((a, b));
        } else {
            neg.push((a, b));
        }
    }
    let mut next = zero;
    for (ap, bp) in &pos {
        for (an, bn) in &neg {
            // eliminate x_k between <ap,x> <= bp (coef > 0) and (coef < 0)
            let fp = &ap[k];
            let fn_ = &an[k];
            let a: Vec<Rat> = (0..k)
                .map(|j| &ap[j] / fp - &an[j] / fn_)
                .collect();
            let b = bp / fp - bn / fn_;
            next.push((a, b));
        }
    }
    fm_feasible(next, k)
}
