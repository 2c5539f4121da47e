//! Shared corpus and independent oracles for the integration suites.
//!
//! The oracles here deliberately avoid the library's decision paths: the
//! grid searcher works in plain `i64`, the certificate checker only verifies
//! a concrete point against the raw rows, and the minor-gcd chain for the
//! Smith form is computed by brute-force minor enumeration.

#![allow(dead_code)]

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

use xsigma::geometry::{h_to_v, Cell, HalfSpace, RayPoint, Relation, SphSet};
use xsigma::group::{catalog_lookup, Coefficient, Flags, GroupDescriptor, SigmaData, Tri};

pub type Int = BigInt;

pub fn iv(v: &[i64]) -> Vec<Int> {
    v.iter().map(|&x| Int::from(x)).collect()
}

pub fn ray(v: &[i64]) -> RayPoint {
    RayPoint::new(&iv(v)).expect("nonzero test ray")
}

pub fn cell(dim: usize, rows: &[(&[i64], Relation)]) -> Cell {
    let constraints = rows
        .iter()
        .map(|(n, r)| HalfSpace::new(&iv(n), *r).unwrap())
        .collect();
    Cell::new(dim, constraints).unwrap()
}

pub fn sphset(dim: usize, cells: Vec<Cell>) -> SphSet {
    SphSet::new(dim, cells).unwrap()
}

fn synthetic_descriptor(name: &str, rank: usize) -> GroupDescriptor {
    let flags = Flags {
        is_fg: Tri::True,
        is_fp2: Tri::True,
        is_fp: Tri::True,
        gprime_fg: Tri::Unknown,
        gprime_ab_fg: Tri::Unknown,
        gprime_fp: Tri::Unknown,
        gprime_fp2: Tri::Unknown,
        is_nonabelian_limit_group: Tri::Unknown,
    };
    let gens = (0..rank).map(|i| format!("g{}", i + 1)).collect();
    GroupDescriptor::from_presentation(name, gens, vec![], flags).unwrap()
}

fn with_sigma(
    g: GroupDescriptor,
    sigma1c: SphSet,
    sigma2c_z: SphSet,
    sigma2c_htpy: SphSet,
) -> SigmaData {
    SigmaData::new(
        g,
        Some(sigma1c),
        BTreeMap::from([
            (Coefficient::Z, sigma2c_z),
            (Coefficient::Htpy, sigma2c_htpy),
        ]),
    )
    .unwrap()
}

/// dim 1: both complements are the nonpositive ray.
pub fn halfline_data() -> SigmaData {
    let (g, _) = catalog_lookup("bs(1,2)").unwrap();
    let set = sphset(1, vec![cell(1, &[(&[-1], Relation::Ge)])]);
    with_sigma(g, set.clone(), set.clone(), set)
}

/// dim 2: sigma1 is the closed third quadrant, sigma2 grows to the union of
/// two half-planes (integral) plus the diagonal (homotopical).
pub fn quadrant_data() -> SigmaData {
    let g = synthetic_descriptor("synthetic_quadrant", 2);
    let s1 = sphset(
        2,
        vec![cell(2, &[(&[-1, 0], Relation::Ge), (&[0, -1], Relation::Ge)])],
    );
    let s2z = sphset(
        2,
        vec![
            cell(2, &[(&[-1, 0], Relation::Ge)]),
            cell(2, &[(&[0, -1], Relation::Ge)]),
        ],
    );
    let s2h = s2z
        .union(&sphset(2, vec![cell(2, &[(&[1, -1], Relation::Eq)])]))
        .unwrap();
    with_sigma(g, s1, s2z, s2h)
}

/// dim 2: a hyperplane piece plus a quadrant piece, to exercise equality
/// cells everywhere.
pub fn mixed_data() -> SigmaData {
    let g = synthetic_descriptor("synthetic_mixed", 2);
    let s1 = sphset(
        2,
        vec![
            cell(2, &[(&[1, 0], Relation::Eq)]),
            cell(2, &[(&[1, 0], Relation::Ge), (&[0, -1], Relation::Ge)]),
        ],
    );
    let s2z = s1
        .union(&sphset(2, vec![cell(2, &[(&[0, 1], Relation::Eq)])]))
        .unwrap();
    let s2h = s2z
        .union(&sphset(
            2,
            vec![cell(2, &[(&[-1, 0], Relation::Ge), (&[0, -1], Relation::Ge)])],
        ))
        .unwrap();
    with_sigma(g, s1, s2z, s2h)
}

/// dim 3: a half-space complement.
pub fn halfspace3_data() -> SigmaData {
    let g = synthetic_descriptor("synthetic_halfspace3", 3);
    let s1 = sphset(3, vec![cell(3, &[(&[0, 0, -1], Relation::Ge)])]);
    let s2h = s1
        .union(&sphset(3, vec![cell(3, &[(&[1, -1, 0], Relation::Eq)])]))
        .unwrap();
    with_sigma(g, s1.clone(), s1, s2h)
}

/// Named sigma datasets, all of character rank at most 3, used by every
/// corpus-wide suite.
pub fn corpus() -> Vec<(&'static str, SigmaData)> {
    vec![
        ("free2", catalog_lookup("free(2)").unwrap().1),
        ("free3", catalog_lookup("free(3)").unwrap().1),
        ("z2", catalog_lookup("free_abelian(2)").unwrap().1),
        ("z3", catalog_lookup("free_abelian(3)").unwrap().1),
        ("limit2", catalog_lookup("nonabelian_limit_placeholder(2)").unwrap().1),
        ("halfline", halfline_data()),
        ("quadrant", quadrant_data()),
        ("mixed", mixed_data()),
        ("halfspace3", halfspace3_data()),
    ]
}

/// All primitive integer directions with coordinates in `[-max_abs, max_abs]`.
pub fn grid_rays(dim: usize, max_abs: i64) -> Vec<RayPoint> {
    let mut out = std::collections::BTreeSet::new();
    let mut v = vec![-max_abs; dim];
    loop {
        if v.iter().any(|&x| x != 0) {
            out.insert(ray_from(&v));
        }
        let mut axis = 0;
        loop {
            if axis == dim {
                return out.into_iter().collect();
            }
            v[axis] += 1;
            if v[axis] <= max_abs {
                break;
            }
            v[axis] = -max_abs;
            axis += 1;
        }
    }
}

fn ray_from(v: &[i64]) -> RayPoint {
    let coords: Vec<Int> = v.iter().map(|&x| Int::from(x)).collect();
    RayPoint::new(&coords).unwrap()
}

/// `count` seeded random rays with coordinates in `[-9, 9]`.
pub fn random_rays(dim: usize, count: usize, seed: u64) -> Vec<RayPoint> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::with_capacity(count);
    while out.len() < count {
        let coords: Vec<Int> = (0..dim)
            .map(|_| Int::from(rng.gen_range(-9i64..=9)))
            .collect();
        if let Ok(r) = RayPoint::new(&coords) {
            out.push(r);
        }
    }
    out
}

/// A random feasibility-system row set for the grid-vs-symbolic comparison:
/// small dimensions, tiny coefficients, mixed relations.
pub fn random_system(rng: &mut ChaCha8Rng, dim: usize, rows: usize) -> Vec<(Vec<i64>, Relation)> {
    let mut out = Vec::new();
    for _ in 0..rows {
        let normal: Vec<i64> = (0..dim).map(|_| rng.gen_range(-2i64..=2)).collect();
        if normal.iter().all(|&x| x == 0) {
            continue;
        }
        let rel = match rng.gen_range(0u8..6) {
            0 => Relation::Eq,
            1 | 2 => Relation::Gt,
            _ => Relation::Ge,
        };
        out.push((normal, rel));
    }
    out
}

fn holds_i64(normal: &[i64], rel: Relation, x: &[i64]) -> bool {
    let v: i64 = normal.iter().zip(x).map(|(a, b)| a * b).sum();
    match rel {
        Relation::Ge => v >= 0,
        Relation::Eq => v == 0,
        Relation::Gt => v > 0,
    }
}

/// Exhaustive search over integer directions with bounded coordinates;
/// finding a witness proves feasibility, finding none proves nothing.
pub fn grid_witness(rows: &[(Vec<i64>, Relation)], dim: usize, bound: i64) -> Option<Vec<i64>> {
    let mut v = vec![-bound; dim];
    loop {
        if v.iter().any(|&x| x != 0) && rows.iter().all(|(n, r)| holds_i64(n, *r, &v)) {
            return Some(v);
        }
        let mut axis = 0;
        loop {
            if axis == dim {
                return None;
            }
            v[axis] += 1;
            if v[axis] <= bound {
                break;
            }
            v[axis] = -bound;
            axis += 1;
        }
    }
}

/// Attempts to exhibit a nonzero point of the system: a relative-interior
/// point of the closure (sum of its generators). The returned point is only
/// trusted after the exact row check below.
pub fn interior_candidate(rows: &[(Vec<i64>, Relation)], dim: usize) -> Option<Vec<Int>> {
    let relaxed: Vec<HalfSpace> = rows
        .iter()
        .map(|(n, r)| {
            let rel = if *r == Relation::Gt { Relation::Ge } else { *r };
            HalfSpace::new(&iv(n), rel).unwrap()
        })
        .collect();
    let closure = Cell::new(dim, relaxed).ok()?;
    let cone = h_to_v(&closure).ok()?;
    let mut candidate = vec![Int::zero(); dim];
    for g in cone.rays().iter().chain(cone.lineality()) {
        for (c, x) in candidate.iter_mut().zip(g) {
            *c += x;
        }
    }
    if candidate.iter().all(Zero::is_zero) {
        None
    } else {
        Some(candidate)
    }
}

/// Exact check of a candidate point against the raw rows.
pub fn satisfies_rows(rows: &[(Vec<i64>, Relation)], point: &[Int]) -> bool {
    rows.iter().all(|(n, r)| {
        let mut acc = Int::zero();
        for (a, b) in n.iter().zip(point) {
            acc += Int::from(*a) * b;
        }
        match r {
            Relation::Ge => !acc.is_negative(),
            Relation::Eq => acc.is_zero(),
            Relation::Gt => acc.is_positive(),
        }
    })
}

/// gcd of all `k x k` minors of an integer matrix; 0 when every minor is 0.
pub fn minor_gcd(a: &[Vec<Int>], k: usize) -> Int {
    let m = a.len();
    let n = a.first().map_or(0, Vec::len);
    let rows = combinations(m, k);
    let cols = combinations(n, k);
    let mut g = Int::zero();
    for rs in &rows {
        for cs in &cols {
            let d = det(a, rs, cs);
            g = g.gcd(&d);
        }
    }
    g
}

fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::new();
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            rec(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    rec(0, n, k, &mut cur, &mut out);
    out
}

/// Laplace expansion; fine for the tiny minors used in tests.
fn det(a: &[Vec<Int>], rows: &[usize], cols: &[usize]) -> Int {
    let k = rows.len();
    if k == 0 {
        return Int::from(1);
    }
    if k == 1 {
        return a[rows[0]][cols[0]].clone();
    }
    let mut acc = Int::zero();
    for (i, &r) in rows.iter().enumerate() {
        let sub_rows: Vec<usize> = rows.iter().copied().filter(|&x| x != r).collect();
        let term = &a[r][cols[0]] * det(a, &sub_rows, &cols[1..]);
        if i % 2 == 0 {
            acc += term;
        } else {
            acc -= term;
        }
    }
    acc
}
