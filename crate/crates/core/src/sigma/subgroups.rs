//! Finite-generation tests for subgroups above the commutator: a subgroup
//! `N` with annihilator subspace `U` of characters is of type F_n/FP_n
//! exactly when `U` meets the cone over the sigma^n complement only at the
//! origin.

use num_traits::Zero;

use crate::geometry::{Relation, SphSet};
use crate::group::{xg_space, CharMap, Coefficient, SigmaData};
use crate::num::{Int, Rat};
use crate::RatMatrix;
use crate::{Error, Result};

use super::xg_ops::xg_sigma1_complement;

/// Does the span of `u_span` meet the closed cone over `set` outside the
/// origin? Encodes membership in the span by equality constraints from a
/// basis of its orthogonal complement, then asks nonzero feasibility per
/// cell.
pub fn subspace_meets_set(set: &SphSet, u_span: &[Vec<Rat>]) -> Result<bool> {
    let dim = set.dim();
    for u in u_span {
        if u.len() != dim {
            return Err(Error::DimensionMismatch {
                expected: dim,
                got: u.len(),
            });
        }
    }
    let ortho = orthogonal_complement(dim, u_span)?;
    for cell in set.cells() {
        let mut rows: Vec<(Vec<Int>, Relation)> = cell
            .constraints()
            .iter()
            .map(|c| (c.normal().to_vec(), c.relation()))
            .collect();
        for w in &ortho {
            rows.push((w.clone(), Relation::Eq));
        }
        if crate::geometry::feasible(&crate::geometry::FeasibilitySystem::new(
            dim,
            rows.into_iter()
                .map(|(n, r)| crate::geometry::HalfSpace::new(&n, r))
                .collect::<Result<Vec<_>>>()?,
        )?)? {
            return Ok(true);
        }
    }
    Ok(false)
}

/// Integer basis of `{x : <x, u> = 0 for all u in u_span}`.
fn orthogonal_complement(dim: usize, u_span: &[Vec<Rat>]) -> Result<Vec<Vec<Int>>> {
    let nonzero: Vec<Vec<Rat>> = u_span
        .iter()
        .filter(|u| !u.iter().all(Zero::is_zero))
        .cloned()
        .collect();
    if nonzero.is_empty() {
        // The span is {0}: its complement is everything, encoded by the
        // standard basis.
        return Ok((0..dim)
            .map(|i| {
                let mut e = vec![Int::zero(); dim];
                e[i] = Int::from(1);
                e
            })
            .collect());
    }
    Ok(RatMatrix::new(nonzero)?.null_space())
}

/// True iff the subgroup with character annihilator `span(u_span)` passes
/// the sigma^n criterion: `span(u_span)` avoids the cone of the stored
/// sigma^n complement except at the origin.
pub fn fg_subgroup_test(
    s: &SigmaData,
    n: usize,
    coeff: Coefficient,
    u_span: &[Vec<Rat>],
) -> Result<bool> {
    let set = s.sigma_nc(n, coeff)?;
    Ok(!subspace_meets_set(&set, u_span)?)
}

/// Verdicts for a subgroup `N` of `X(G)` containing the commutator, tested
/// through the three retraction images and directly.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FgReport {
    pub pi1: bool,
    pub pi2: bool,
    pub pi3: bool,
    /// Conjunction of the three projection verdicts.
    pub overall: bool,
    /// Direct verdict against the computed sigma^1 complement of `X(G)`.
    /// Must agree with `overall`.
    pub direct: bool,
}

/// Tests finite generation of `N <= X(G)` (with `X(G)' <= N`) two ways:
/// through finite generation of the retraction images `pi_i(N)` in `G`, and
/// directly against the sigma^1 complement of `X(G)`. `u_span` spans the
/// annihilator of `N` inside the `2n`-dimensional character space.
pub fn b2_report(s: &SigmaData, u_span: &[Vec<Rat>]) -> Result<FgReport> {
    let x = xg_space(s.owner())?;
    let dim = x.dim();
    for u in u_span {
        if u.len() != dim {
            return Err(Error::DimensionMismatch {
                expected: dim,
                got: u.len(),
            });
        }
    }
    let pis = [&x.pi1_star, &x.pi2_star, &x.pi3_star];
    let mut verdicts = [false; 3];
    for (i, pi) in pis.iter().enumerate() {
        let u_i = pullback_subspace(pi, u_span, dim)?;
        verdicts[i] = fg_subgroup_test(s, 1, Coefficient::Z, &u_i)?;
    }
    let sigma1_x = xg_sigma1_complement(s)?.set;
    let direct = !subspace_meets_set(&sigma1_x, u_span)?;
    Ok(FgReport {
        pi1: verdicts[0],
        pi2: verdicts[1],
        pi3: verdicts[2],
        overall: verdicts.iter().all(|v| *v),
        direct,
    })
}

/// Basis of `{chi : pi(chi) in span(u_span)}`: the kernel of the composite
/// of `pi` with projection onto the orthogonal complement of the span.
fn pullback_subspace(pi: &CharMap, u_span: &[Vec<Rat>], dim: usize) -> Result<Vec<Vec<Rat>>> {
    let ortho = orthogonal_complement(dim, u_span)?;
    let mut rows = Vec::new();
    for b in &ortho {
        let b_rat: Vec<Rat> = b.iter().map(|x| Rat::from(x.clone())).collect();
        rows.push(pi.matrix().row_vec_times(&b_rat)?);
    }
    if rows.is_empty() {
        return Ok(identity_rows(pi.source_dim()));
    }
    let kernel = RatMatrix::new(rows)?.null_space();
    Ok(kernel
        .into_iter()
        .map(|v| v.into_iter().map(Rat::from).collect())
        .collect())
}

fn identity_rows(n: usize) -> Vec<Vec<Rat>> {
    (0..n)
        .map(|i| {
            let mut e = vec![Rat::zero(); n];
            e[i] = Rat::from(Int::from(1));
            e
        })
        .collect()
}
