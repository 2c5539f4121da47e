//! Direct-product formulas: the complement of sigma^n of a product is the
//! union over splittings of joins of the factors' complements. Valid in all
//! dimensions over a field, and in dimensions 1 and 2 over the integers.

use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::result::{Exactness, SigmaResult};
use crate::geometry::{RayPoint, SphSet};
use crate::group::{Coefficient, SigmaData};
use crate::num::Int;
use crate::{Error, Result};

fn check_product_coeff(coeff: Coefficient, n: usize) -> Result<()> {
    match coeff {
        Coefficient::FieldQ => Ok(()),
        Coefficient::Z if n <= 2 => Ok(()),
        Coefficient::Z => Err(Error::UnsupportedDimension(format!(
            "the integral product formula holds only for n <= 2, got n = {n}"
        ))),
        Coefficient::Htpy => Err(Error::UnsupportedDimension(
            "no homotopical product formula is available".into(),
        )),
    }
}

/// `union over p of join(sigma^p(G1)^c, sigma^(n-p)(G2)^c)`, with the
/// convention sigma^0 complement = empty (its join term embeds the other
/// factor).
pub fn product_sigma_complement(
    a: &SigmaData,
    b: &SigmaData,
    n: usize,
    coeff: Coefficient,
) -> Result<SigmaResult> {
    if n == 0 || n > 2 {
        return Err(Error::UnsupportedDimension(format!(
            "stored sigma data covers n in {{1, 2}}, got n = {n}"
        )));
    }
    check_product_coeff(coeff, n)?;
    let dim = a.char_dim() + b.char_dim();
    let mut acc = SphSet::empty(dim);
    for p in 0..=n {
        let left = a.sigma_nc(p, coeff)?;
        let right = b.sigma_nc(n - p, coeff)?;
        acc = acc.union(&left.join(&right)?)?;
    }
    Ok(SigmaResult::new(
        acc,
        Exactness::Exact,
        format!("product_formula({}, n={n})", coeff.as_str()),
    ))
}

/// Complements of sigma^p for p = 0..=max, the working object of iterated
/// product folds.
#[derive(Clone, Debug)]
pub struct SigmaProfile {
    dim: usize,
    /// `levels[p]` is the sigma^p complement.
    levels: Vec<SphSet>,
}

impl SigmaProfile {
    pub fn new(dim: usize, levels: Vec<SphSet>) -> Result<Self> {
        for l in &levels {
            if l.dim() != dim {
                return Err(Error::DimensionMismatch {
                    expected: dim,
                    got: l.dim(),
                });
            }
        }
        Ok(Self { dim, levels })
    }

    /// Profile of a rank-2 free group: empty at level 0, the full sphere in
    /// every positive dimension.
    pub fn free2(up_to: usize) -> Self {
        let mut levels = vec![SphSet::empty(2)];
        levels.extend(std::iter::repeat(SphSet::full(2)).take(up_to));
        Self { dim: 2, levels }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn max_level(&self) -> usize {
        self.levels.len() - 1
    }

    pub fn level(&self, p: usize) -> &SphSet {
        &self.levels[p]
    }

    /// Product profile via the join formula, up to the common max level.
    pub fn product(&self, other: &SigmaProfile) -> Result<SigmaProfile> {
        let up_to = self.max_level().min(other.max_level());
        let dim = self.dim + other.dim;
        let mut levels = Vec::with_capacity(up_to + 1);
        for q in 0..=up_to {
            let mut acc = SphSet::empty(dim);
            for p in 0..=q {
                acc = acc.union(&self.levels[p].join(&other.levels[q - p])?)?;
            }
            levels.push(acc);
        }
        SigmaProfile::new(dim, levels)
    }
}

/// Verifies the expected sigma pattern of the `s`-fold product of rank-2
/// free groups: every sampled character that is nonzero on exactly `n`
/// blocks lies in sigma^(n-1) and outside sigma^n. Uses integral
/// coefficients for n <= 2 and field coefficients (where the iterated
/// product formula remains valid) for n >= 3.
pub fn f2s_pattern_check(s: usize, n: usize, seed: u64) -> Result<bool> {
    if n == 0 || n > s {
        return Err(Error::UnsupportedDimension(format!(
            "need 1 <= n <= s, got n = {n}, s = {s}"
        )));
    }
    let mut profile = SigmaProfile::free2(n);
    for _ in 1..s {
        profile = SigmaProfile::free2(n).product(&profile)?;
    }
    let sigma_n = profile.level(n);
    let sigma_prev = if n >= 1 { profile.level(n - 1) } else { unreachable!() };

    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for blocks in subsets_of_size(s, n) {
        let mut samples: Vec<Vec<Int>> = Vec::new();
        // One deterministic sample, then a few random ones per subset.
        samples.push(block_sample(s, &blocks, |_, _| (1, 1)));
        for _ in 0..4 {
            let mut draws = Vec::new();
            for _ in 0..blocks.len() {
                loop {
                    let x = rng.gen_range(-5i64..=5);
                    let y = rng.gen_range(-5i64..=5);
                    if x != 0 || y != 0 {
                        draws.push((x, y));
                        break;
                    }
                }
            }
            samples.push(block_sample(s, &blocks, |i, _| draws[i]));
        }
        for coords in samples {
            let chi = RayPoint::new(&coords)?;
            if sigma_prev.member(&chi)? {
                return Ok(false);
            }
            if !sigma_n.member(&chi)? {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

fn block_sample(s: usize, blocks: &[usize], mut value: impl FnMut(usize, usize) -> (i64, i64)) -> Vec<Int> {
    let mut coords = vec![Int::from(0); 2 * s];
    for (i, &b) in blocks.iter().enumerate() {
        let (x, y) = value(i, b);
        coords[2 * b] = Int::from(x);
        coords[2 * b + 1] = Int::from(y);
    }
    coords
}

fn subsets_of_size(s: usize, n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut current = Vec::new();
    fn rec(start: usize, s: usize, n: usize, current: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if current.len() == n {
            out.push(current.clone());
            return;
        }
        for i in start..s {
            current.push(i);
            rec(i + 1, s, n, current, out);
            current.pop();
        }
    }
    rec(0, s, n, &mut current, &mut out);
    out
}
