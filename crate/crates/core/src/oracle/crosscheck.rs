//! Seeded cross-checks: evaluate a pointwise predicate against a constructed
//! polyhedral set on a deterministic sample of rays and report every
//! disagreement verbatim.

use std::collections::BTreeSet;

use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::geometry::{RayPoint, SphSet};
use crate::group::SigmaData;
use crate::num::Int;
use crate::{Error, Result};

/// How rays are drawn. Forced rays are always included.
#[derive(Clone, Debug)]
pub enum SampleSpec {
    /// Every primitive integer direction with coordinates in
    /// `[-max_abs, max_abs]`.
    Grid { max_abs: i64 },
    /// `count` seeded draws with coordinates in `[-9, 9]`.
    Random { count: usize },
}

/// Outcome of a cross-check; reproducible from the seed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CrossCheckReport {
    pub samples: usize,
    pub mismatches: Vec<RayPoint>,
    pub seed: u64,
}

impl CrossCheckReport {
    pub fn passed(&self) -> bool {
        self.mismatches.is_empty()
    }
}

/// Compares `pointwise(chi)` (membership of the named sigma-invariant)
/// against `!member(chi, constructed)` (the stored complement) on the sample
/// set; any ray where the two disagree is a mismatch.
pub fn cross_check(
    constructed: &SphSet,
    pointwise: impl Fn(&RayPoint) -> Result<bool>,
    spec: &SampleSpec,
    seed: u64,
    forced: &[RayPoint],
) -> Result<CrossCheckReport> {
    let dim = constructed.dim();
    let mut rays: BTreeSet<RayPoint> = BTreeSet::new();
    for f in forced {
        if f.dim() != dim {
            return Err(Error::DimensionMismatch {
                expected: dim,
                got: f.dim(),
            });
        }
        rays.insert(f.clone());
    }
    match spec {
        SampleSpec::Grid { max_abs } => {
            let mut v = vec![-max_abs; dim];
            loop {
                let coords: Vec<Int> = v.iter().map(|&x| Int::from(x)).collect();
                if let Ok(ray) = RayPoint::new(&coords) {
                    rays.insert(ray);
                }
                let mut axis = 0;
                loop {
                    if axis == dim {
                        break;
                    }
                    v[axis] += 1;
                    if v[axis] <= *max_abs {
                        break;
                    }
                    v[axis] = -max_abs;
                    axis += 1;
                }
                if axis == dim {
                    break;
                }
            }
        }
        SampleSpec::Random { count } => {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let mut produced = 0;
            while produced < *count {
                let coords: Vec<Int> = (0..dim)
                    .map(|_| Int::from(rng.gen_range(-9i64..=9)))
                    .collect();
                if let Ok(ray) = RayPoint::new(&coords) {
                    rays.insert(ray);
                    produced += 1;
                }
            }
        }
    }

    let mut mismatches = Vec::new();
    let samples = rays.len();
    for ray in rays {
        let in_sigma = pointwise(&ray)?;
        let in_complement = constructed.member(&ray)?;
        if in_sigma == in_complement {
            mismatches.push(ray);
        }
    }
    Ok(CrossCheckReport {
        samples,
        mismatches,
        seed,
    })
}

/// Boundary families for cross-checks in the `X(G)` character space:
/// rays with a zeroed coordinate block, diagonal rays, and pairs whose
/// difference lies on a facet hyperplane of the stored sigma^1 complement.
pub fn xg_boundary_samples(s: &SigmaData, seed: u64, per_family: usize) -> Result<Vec<RayPoint>> {
    let n = s.char_dim();
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x626f756e64617279);
    let mut out = Vec::new();
    let mut push = |coords: Vec<Int>| {
        if let Ok(ray) = RayPoint::new(&coords) {
            out.push(ray);
        }
    };
    let draw = |rng: &mut ChaCha8Rng| -> Vec<Int> {
        (0..n).map(|_| Int::from(rng.gen_range(-5i64..=5))).collect()
    };

    for _ in 0..per_family {
        let u = draw(&mut rng);
        let v = draw(&mut rng);
        let zero = vec![Int::from(0); n];
        let block = |a: &[Int], b: &[Int]| {
            let mut c = a.to_vec();
            c.extend_from_slice(b);
            c
        };
        push(block(&u, &zero));
        push(block(&zero, &v));
        push(block(&u, &u));
        push(block(&v, &v));
    }

    // chi_1 - chi_2 on a facet: for each stored facet normal f, pick t with
    // <f, t> = 0 and sample (u, u - t).
    if let Some(s1) = s.sigma1c_opt() {
        let mut facets: BTreeSet<Vec<Int>> = BTreeSet::new();
        for cell in s1.cells() {
            for c in cell.constraints() {
                facets.insert(c.normal().to_vec());
            }
        }
        for f in facets {
            for _ in 0..per_family {
                let r = draw(&mut rng);
                // Project r onto the hyperplane of f, scaled exactly:
                // t = <f,f> r - <f,r> f.
                let ff = crate::num::dot(&f, &f);
                let fr = crate::num::dot(&f, &r);
                let t: Vec<Int> = r
                    .iter()
                    .zip(&f)
                    .map(|(ri, fi)| &ff * ri - &fr * fi)
                    .collect();
                let u = draw(&mut rng);
                let mut chi = u.clone();
                chi.extend(u.iter().zip(&t).map(|(ui, ti)| ui - ti));
                push(chi);
                let mut swapped: Vec<Int> =
                    u.iter().zip(&t).map(|(ui, ti)| ui - ti).collect();
                swapped.extend(u.iter().cloned());
                push(swapped);
            }
        }
    }
    Ok(out)
}
