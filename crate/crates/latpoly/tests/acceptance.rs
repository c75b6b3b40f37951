//! Acceptance gate: one pass/fail line per criterion (run with
//! `cargo test --test acceptance -- --nocapture` to see lines for
//! passing criteria as well).

use std::collections::BTreeMap;

use num_traits::{One, Signed, Zero};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use latpoly::cayley::{face_from_vertex_indices, is_cayley, toric_blow_up};
use latpoly::classify::{list_smooth_2d, list_smooth_2d_with_caps, tally_lattice_points};
use latpoly::gauss::gauss_k;
use latpoly::jets::{
    degree_of_jet_separation, jet_matrix, JetPoint, PointConfiguration,
};
use latpoly::linalg::{dot, int, solve_exact, SolveOutcome};
use latpoly::seshadri::{epsilon_bounds, epsilon_bounds_with_cap};
use latpoly::{Int, IntMatrix, LatticePolytope, Rat, RatMatrix};

fn criterion(n: usize, what: &str, ok: bool) {
    println!(
        "criterion {n} ({what}): {}",
        if ok { "PASS" } else { "FAIL" }
    );
    assert!(ok, "criterion {n} ({what}) failed");
}

fn poly(rows: &[Vec<i64>]) -> LatticePolytope {
    LatticePolytope::from_vertices_i64(rows).unwrap()
}

fn vi(rows: &[Vec<i64>]) -> Vec<Vec<Int>> {
    rows.iter()
        .map(|r| r.iter().map(|&x| int(x)).collect())
        .collect()
}

fn square11() -> LatticePolytope {
    poly(&[vec![-1, -1], vec![1, -1], vec![-1, 1], vec![1, 1]])
}

#[test]
fn criterion_1_classification_tally() {
    let records = list_smooth_2d(12).unwrap();
    let tally = tally_lattice_points(&records);
    let expect: BTreeMap<usize, usize> =
        [(3, 1), (4, 1), (5, 1), (6, 3), (7, 3), (8, 4), (9, 5), (10, 7), (11, 6), (12, 10)]
            .into_iter()
            .collect();
    criterion(
        1,
        "smooth polygon tally at 12 lattice points",
        records.len() == 41 && tally == expect,
    );
}

#[test]
fn criterion_2_blow_up_golden() {
    let square = square11();
    let i = square
        .vertices()
        .iter()
        .position(|v| *v == vec![int(-1), int(-1)])
        .unwrap();
    let q = face_from_vertex_indices(&square, &[i]).unwrap();
    let bp = toric_blow_up(&square, &q, 1).unwrap();
    let expect = vi(&[vec![-1, 0], vec![-1, 1], vec![0, -1], vec![1, -1], vec![1, 1]]);
    criterion(2, "blow-up of the square at a corner", bp.vertices() == expect);
}

#[test]
fn criterion_3_jet_degree() {
    let config = PointConfiguration::from_polytope(&square11());
    let at = JetPoint::Rational(vec![Rat::one(), Rat::one()]);
    let deg = degree_of_jet_separation(&config, &at).unwrap();
    criterion(3, "jet degree of the square at (1,1)", deg == 2);
}

#[test]
fn criterion_4_seshadri_bounds() {
    let b = epsilon_bounds(&square11(), 17).unwrap();
    criterion(
        4,
        "epsilon bounds of the square",
        b.lower == Rat::from_integer(int(2)) && b.upper == Rat::from_integer(int(2)),
    );
}

#[test]
fn criterion_5_gauss_order_2() {
    let p = poly(&[vec![0, 0], vec![1, 0], vec![3, 1], vec![0, 2]]);
    let res = gauss_k(&PointConfiguration::from_polytope(&p), 2).unwrap();
    criterion(
        5,
        "order-2 Gauss map image and fiber",
        res.image_exponents == vi(&[vec![4, 5], vec![5, 5], vec![6, 5], vec![7, 5]])
            && res.fiber_exponents == vi(&[vec![0], vec![1], vec![2]]),
    );
}

/// Exhaustive width-1 oracle: P (full-dimensional, vertices known) has a
/// Cayley structure iff some integral functional u has spread exactly 1.
/// Any such u takes values in {-1, 0, 1} on three independent vertex
/// differences, so solving for all 27 sign patterns is exhaustive.
fn width_one_oracle(p: &LatticePolytope) -> bool {
    let n = p.ambient_dim();
    let verts = p.vertices();
    let base = &verts[0];
    let mut diffs: Vec<Vec<Rat>> = Vec::new();
    for v in &verts[1..] {
        let d: Vec<Rat> = v
            .iter()
            .zip(base)
            .map(|(a, b)| Rat::from_integer(a - b))
            .collect();
        let mut trial = diffs.clone();
        trial.push(d.clone());
        if RatMatrix::from_rows(&trial).unwrap().rank() == trial.len() {
            diffs.push(d);
        }
        if diffs.len() == n {
            break;
        }
    }
    assert_eq!(diffs.len(), n);
    let m = RatMatrix::from_rows(&diffs).unwrap();

    let mut pattern = vec![0i64; n];
    loop {
        let rhs: Vec<Rat> = pattern.iter().map(|&x| Rat::from_integer(int(x))).collect();
        if let Ok(SolveOutcome::Unique(sol)) = solve_exact(&m, &rhs) {
            if sol.iter().all(|x| x.is_integer()) {
                let u: Vec<Int> = sol.iter().map(|x| x.to_integer()).collect();
                if !u.iter().all(|x| x.is_zero()) && p.spread(&u) == int(1) {
                    return true;
                }
            }
        }
        // next pattern in {-1, 0, 1}^n
        let mut i = 0;
        while i < n && pattern[i] == 1 {
            pattern[i] = -1;
            i += 1;
        }
        if i == n {
            return false;
        }
        pattern[i] += 1;
    }
}

#[test]
fn criterion_6_cayley_vs_width_oracle() {
    // substitute for the external 3D dataset tally: isCayley must agree
    // with the exhaustive width oracle on random 3-polytopes
    let mut rng = StdRng::seed_from_u64(6);
    let mut tested = 0;
    let mut agreed = 0;
    while tested < 200 {
        let k = rng.gen_range(4..=8);
        let pts: Vec<Vec<i64>> = (0..k)
            .map(|_| (0..3).map(|_| rng.gen_range(0..=3)).collect())
            .collect();
        let p = match LatticePolytope::from_vertices_i64(&pts) {
            Ok(p) if p.dim() == 3 => p,
            _ => continue,
        };
        tested += 1;
        let lib = is_cayley(&p).unwrap().is_some();
        if lib == width_one_oracle(&p) {
            agreed += 1;
        }
    }
    criterion(6, "isCayley vs exhaustive width oracle, 200 random 3-polytopes", agreed == tested);
}

fn random_unimodular(n: usize, rng: &mut StdRng) -> IntMatrix {
    let mut u = IntMatrix::identity(n);
    for _ in 0..4 {
        let i = rng.gen_range(0..n);
        let mut j = rng.gen_range(0..n);
        while j == i {
            j = rng.gen_range(0..n);
        }
        match rng.gen_range(0..3) {
            0 => {
                // row_j += k * row_i
                let k = int(rng.gen_range(-2..=2));
                for c in 0..n {
                    let t = &u[(i, c)] * &k;
                    u[(j, c)] += t;
                }
            }
            1 => {
                for c in 0..n {
                    let t = u[(i, c)].clone();
                    u[(i, c)] = u[(j, c)].clone();
                    u[(j, c)] = t;
                }
            }
            _ => {
                for c in 0..n {
                    let t = -u[(i, c)].clone();
                    u[(i, c)] = t;
                }
            }
        }
    }
    debug_assert!(u.determinant().unwrap().abs() == int(1));
    u
}

fn transform(p: &LatticePolytope, u: &IntMatrix, shift: &[Int]) -> LatticePolytope {
    let n = p.ambient_dim();
    let verts: Vec<Vec<Int>> = p
        .vertices()
        .iter()
        .map(|v| {
            (0..n)
                .map(|i| (0..n).map(|j| &u[(i, j)] * &v[j]).sum::<Int>() + &shift[i])
                .collect()
        })
        .collect();
    LatticePolytope::from_vertices(&verts).unwrap()
}

fn random_polytope(n: usize, lo: i64, hi: i64, k: usize, rng: &mut StdRng) -> LatticePolytope {
    loop {
        let pts: Vec<Vec<i64>> = (0..k)
            .map(|_| (0..n).map(|_| rng.gen_range(lo..=hi)).collect())
            .collect();
        if let Ok(p) = LatticePolytope::from_vertices_i64(&pts) {
            if p.dim() == n {
                return p;
            }
        }
    }
}

#[test]
fn criterion_7a_unimodular_invariance() {
    let mut rng = StdRng::seed_from_u64(70);
    let samples = [
        square11(),
        poly(&[vec![0, 0], vec![1, 0], vec![0, 1]]),
        poly(&[vec![0, 0], vec![3, 0], vec![0, 2], vec![2, 2]]),
        poly(&[vec![0, 0], vec![1, 0], vec![3, 1], vec![0, 2]]),
    ];
    let mut ok = true;
    for trial in 0..100 {
        let p = &samples[trial % samples.len()];
        let u = random_unimodular(2, &mut rng);
        let shift = vec![int(rng.gen_range(-3..=3)), int(rng.gen_range(-3..=3))];
        let q = transform(p, &u, &shift);

        ok &= p.is_smooth() == q.is_smooth();
        ok &= is_cayley(p).unwrap().is_some() == is_cayley(&q).unwrap().is_some();
        // the entries of U are small, so a generous search box sees the
        // transformed optimum on both sides
        ok &= p.lattice_width(60).unwrap().0 == q.lattice_width(60).unwrap().0;
        ok &= p.lattice_points().len() == q.lattice_points().len();
        let jp = degree_of_jet_separation(
            &PointConfiguration::from_polytope(p),
            &JetPoint::Generic,
        );
        let jq = degree_of_jet_separation(
            &PointConfiguration::from_polytope(&q),
            &JetPoint::Generic,
        );
        ok &= jp.unwrap() == jq.unwrap();
        let bp = epsilon_bounds(p, 60).unwrap();
        let bq = epsilon_bounds(&q, 60).unwrap();
        ok &= bp.lower == bq.lower && bp.upper == bq.upper;
        if !ok {
            break;
        }
    }
    criterion(7, "7a unimodular invariance of the main invariants", ok);
}

#[test]
fn criterion_7b_hv_roundtrip_and_lattice_points() {
    let mut rng = StdRng::seed_from_u64(71);
    let mut ok = true;
    for n in 2..=4usize {
        for _ in 0..12 {
            let p = random_polytope(n, -3, 3, n + 3, &mut rng);
            let back =
                LatticePolytope::from_inequalities(p.facets(), &[], n).unwrap();
            ok &= back.vertices() == p.vertices();

            // brute-force oracle: test every box point against the
            // facet inequalities directly
            let mut expect: Vec<Vec<Int>> = Vec::new();
            let mut cur = vec![-3i64; n];
            'scan: loop {
                let pt: Vec<Int> = cur.iter().map(|&x| int(x)).collect();
                if p
                    .facets()
                    .iter()
                    .all(|f| dot(&f.normal, &pt) <= f.offset)
                {
                    expect.push(pt);
                }
                let mut i = 0;
                while i < n && cur[i] == 3 {
                    cur[i] = -3;
                    i += 1;
                }
                if i == n {
                    break 'scan;
                }
                cur[i] += 1;
            }
            expect.sort();
            ok &= p.lattice_points() == expect;
            if !ok {
                break;
            }
        }
    }
    criterion(7, "7b H/V roundtrip and brute-force lattice points, dims 2-4", ok);
}

#[test]
fn criterion_7c_gauss_dims_and_minor_oracle() {
    let mut rng = StdRng::seed_from_u64(72);
    let mut ok = true;
    let mut done = 0;
    while done < 50 {
        let k = rng.gen_range(4..=10);
        let pts: Vec<Vec<i64>> = (0..k)
            .map(|_| (0..2).map(|_| rng.gen_range(0..=4)).collect())
            .collect();
        let config = match PointConfiguration::new(2, vi(&pts)) {
            Ok(c) => c,
            Err(_) => continue,
        };
        let res = match gauss_k(&config, 1) {
            Ok(r) => r,
            Err(_) => continue, // not 1-jet spanned; no Gauss map
        };
        done += 1;
        ok &= res.image_dim + res.fiber_dim == 2;

        // minor oracle: at a random point with large prime coordinates
        // the nonsingular 3-column subsets of the jet matrix are exactly
        // the generic ones, and their exponent sums fill the image
        let primes = [32003i64, 32009, 32027, 32029];
        let at = JetPoint::Rational(vec![
            Rat::from_integer(int(primes[rng.gen_range(0..primes.len())])),
            Rat::from_integer(int(primes[rng.gen_range(0..primes.len())])),
        ]);
        let jm = jet_matrix(&config, 1, &at).unwrap();
        let mut sums: Vec<Vec<Int>> = Vec::new();
        let m = config.len();
        for a in 0..m {
            for b in a + 1..m {
                for c in b + 1..m {
                    let sub: Vec<Vec<Rat>> = (0..3)
                        .map(|i| {
                            [a, b, c]
                                .iter()
                                .map(|&j| jm.matrix[(i, j)].clone())
                                .collect()
                        })
                        .collect();
                    if RatMatrix::from_rows(&sub).unwrap().rank() == 3 {
                        let e = config.exponents();
                        let s: Vec<Int> = (0..2)
                            .map(|i| &e[a][i] + &e[b][i] + &e[c][i])
                            .collect();
                        sums.push(s);
                    }
                }
            }
        }
        sums.sort();
        sums.dedup();
        ok &= sums == res.image_exponents;
        if !ok {
            break;
        }
    }
    criterion(7, "7c Gauss dimension identity and minor oracle, 50 configs", ok);
}

#[test]
fn criterion_7d_normal_form() {
    let mut rng = StdRng::seed_from_u64(73);
    let mut ok = true;
    for _ in 0..40 {
        let p = random_polytope(2, -3, 3, 5, &mut rng);
        let nf = p.normal_form().unwrap();
        ok &= nf.normal_form().unwrap() == nf;
        let u = random_unimodular(2, &mut rng);
        let shift = vec![int(rng.gen_range(-4..=4)), int(rng.gen_range(-4..=4))];
        ok &= transform(&p, &u, &shift).normal_form().unwrap() == nf;
        if !ok {
            break;
        }
    }
    criterion(7, "7d normal form idempotence and class collapse", ok);
}

#[test]
fn criterion_7e_torus_point_rank_matches_generic() {
    let mut rng = StdRng::seed_from_u64(74);
    let primes = [32003i64, 32009, 32027, 32029, 32051];
    let mut ok = true;
    for _ in 0..25 {
        let p = random_polytope(2, 0, 3, 5, &mut rng);
        let config = PointConfiguration::from_polytope(&p);
        for k in 0..=2usize {
            let generic = jet_matrix(&config, k, &JetPoint::Generic).unwrap();
            let at = JetPoint::Rational(vec![
                Rat::from_integer(int(primes[rng.gen_range(0..primes.len())])),
                Rat::from_integer(int(primes[rng.gen_range(0..primes.len())])),
            ]);
            let special = jet_matrix(&config, k, &at).unwrap();
            ok &= generic.rank() == special.rank();
        }
        if !ok {
            break;
        }
    }
    criterion(7, "7e torus-point jet rank equals generic rank", ok);
}

#[test]
fn criterion_7f_bounds_ordered_on_smooth_polygons() {
    let mut rng = StdRng::seed_from_u64(75);
    let base = list_smooth_2d(10).unwrap();
    let mut ok = true;
    for trial in 0..100 {
        let p = &base[trial % base.len()].polytope;
        // a single shear keeps coordinates small enough that the dilated
        // jet matrices stay cheap
        let k = rng.gen_range(-1..=1i64);
        let m = rng.gen_range(-1..=1i64);
        let u = IntMatrix::from_i64_rows(&[vec![1 + k * m, k], vec![m, 1]]).unwrap();
        let shift = vec![int(rng.gen_range(-2..=2)), int(rng.gen_range(-2..=2))];
        let q = transform(p, &u, &shift);
        let b = epsilon_bounds_with_cap(&q, 20, 2).unwrap();
        ok &= b.lower <= b.upper;
        if !ok {
            break;
        }
    }
    criterion(7, "7f lower <= upper on 100 random smooth polygons", ok);
}

#[test]
fn criterion_7g_dilated_simplex_family() {
    let simplex = poly(&[vec![0, 0], vec![1, 0], vec![0, 1]]);
    let mut ok = true;
    for d in 1..=3u64 {
        let dp = simplex.dilate(d).unwrap();
        let config = PointConfiguration::from_polytope(&dp);
        ok &= degree_of_jet_separation(&config, &JetPoint::Generic).unwrap() == d as usize;
        let b = epsilon_bounds(&dp, 5).unwrap();
        let want = Rat::from_integer(int(d as i64));
        ok &= b.lower == want && b.upper == want;
    }
    criterion(7, "7g dilated simplices: jet degree d, bounds (d, d)", ok);
}

#[test]
fn classification_is_stable_under_larger_caps() {
    // a polygon with <= N lattice points has <= N edges, so the ray cap
    // never needs to exceed the point budget; check it empirically on a
    // smaller budget where a generous cap is still cheap
    let small = list_smooth_2d_with_caps(8, 8, 12).unwrap();
    let small_generous = list_smooth_2d_with_caps(8, 12, 18).unwrap();
    assert_eq!(
        small.iter().map(|r| &r.polytope).collect::<Vec<_>>(),
        small_generous.iter().map(|r| &r.polytope).collect::<Vec<_>>()
    );

    // Hirzebruch-parameter stability at the full budget
    let default = list_smooth_2d(12).unwrap();
    let generous = list_smooth_2d_with_caps(12, 12, 20).unwrap();
    assert_eq!(
        default.iter().map(|r| &r.polytope).collect::<Vec<_>>(),
        generous.iter().map(|r| &r.polytope).collect::<Vec<_>>()
    );
}
