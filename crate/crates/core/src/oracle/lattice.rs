//! Connectivity probe for the nonnegative part of the standard lattice:
//! theory forces the nonnegative subgraph of Z^n to stay connected for every
//! character, so the probe returning true on every instance is a sanity
//! check, not a discovery.

use std::collections::{HashSet, VecDeque};

use num_traits::{Signed, Zero};

use crate::num::{Int, Rat};
use crate::{Error, Result};

/// BFS on the induced subgraph of the `Z^n` lattice over
/// `{v : chi(v) >= 0, |v|_inf <= radius}`; true iff every such vertex with
/// `|v|_inf <= radius - 1` is reached from the origin.
pub fn lattice_probe(n: usize, chi: &[Rat], radius: i64) -> Result<bool> {
    if chi.len() != n {
        return Err(Error::DimensionMismatch {
            expected: n,
            got: chi.len(),
        });
    }
    if chi.iter().all(Zero::is_zero) {
        return Err(Error::ZeroVector);
    }
    if radius < 1 {
        return Err(Error::InvalidArgument("radius must be at least 1".into()));
    }
    // Clear denominators once; signs are all that matter.
    let mut weights = Vec::with_capacity(n);
    let mut lcm = Int::from(1);
    for c in chi {
        lcm = num_integer::lcm(lcm, c.denom().clone());
    }
    for c in chi {
        weights.push(c.numer() * (&lcm / c.denom()));
    }
    let value = |v: &[i64]| -> Int {
        let mut acc = Int::zero();
        for (w, x) in weights.iter().zip(v) {
            acc += w * Int::from(*x);
        }
        acc
    };

    let origin = vec![0i64; n];
    let mut seen: HashSet<Vec<i64>> = HashSet::new();
    let mut queue = VecDeque::new();
    seen.insert(origin.clone());
    queue.push_back(origin);
    while let Some(v) = queue.pop_front() {
        for axis in 0..n {
            for step in [1i64, -1] {
                let mut w = v.clone();
                w[axis] += step;
                if w[axis].abs() > radius || seen.contains(&w) {
                    continue;
                }
                if value(&w).is_negative() {
                    continue;
                }
                seen.insert(w.clone());
                queue.push_back(w);
            }
        }
    }

    // Every admissible vertex of the inner box must have been reached.
    let inner = radius - 1;
    let mut v = vec![-inner; n];
    loop {
        if !value(&v).is_negative() && !seen.contains(&v) {
            return Ok(false);
        }
        let mut axis = 0;
        loop {
            if axis == n {
                return Ok(true);
            }
            v[axis] += 1;
            if v[axis] <= inner {
                break;
            }
            v[axis] = -inner;
            axis += 1;
        }
    }
}
