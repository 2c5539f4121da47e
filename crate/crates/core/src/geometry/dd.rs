//! Double description: converting between half-space systems and
//! generator (ray + lineality) representations of closed polyhedral cones.
//!
//! Equalities are removed first by restricting to their solution subspace;
//! inequalities are then inserted one at a time, with the combinatorial
//! adjacency test keeping the ray set minimal.

use num_traits::{Signed, Zero};

use super::halfspace::{Cell, HalfSpace, Relation};
use crate::num::{canonical_sign, combine, dot, is_zero_vec, primitive, Int};
use crate::{Error, Result};
use crate::RatMatrix;

/// Generator form of a closed polyhedral cone:
/// `{ sum t_i r_i + sum s_j l_j : t_i >= 0, s_j real }`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConeV {
    dim: usize,
    rays: Vec<Vec<Int>>,
    lineality: Vec<Vec<Int>>,
}

impl ConeV {
    pub fn new(dim: usize, rays: Vec<Vec<Int>>, lineality: Vec<Vec<Int>>) -> Result<Self> {
        let mut rs = Vec::with_capacity(rays.len());
        for r in rays {
            if r.len() != dim {
                return Err(Error::DimensionMismatch {
                    expected: dim,
                    got: r.len(),
                });
            }
            rs.push(primitive(&r)?);
        }
        let mut ls = Vec::with_capacity(lineality.len());
        for l in lineality {
            if l.len() != dim {
                return Err(Error::DimensionMismatch {
                    expected: dim,
                    got: l.len(),
                });
            }
            ls.push(canonical_sign(&primitive(&l)?));
        }
        rs.sort();
        rs.dedup();
        ls.sort();
        ls.dedup();
        Ok(Self {
            dim,
            rays: rs,
            lineality: ls,
        })
    }

    pub fn zero(dim: usize) -> Self {
        Self {
            dim,
            rays: Vec::new(),
            lineality: Vec::new(),
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn rays(&self) -> &[Vec<Int>] {
        &self.rays
    }

    pub fn lineality(&self) -> &[Vec<Int>] {
        &self.lineality
    }

    pub fn is_zero_cone(&self) -> bool {
        self.rays.is_empty() && self.lineality.is_empty()
    }
}

/// Generators of the closed cone cut out by a cell (origin included).
pub fn h_to_v(cell: &Cell) -> Result<ConeV> {
    let dim = cell.dim();
    let eq_rows: Vec<Vec<Int>> = cell
        .constraints()
        .iter()
        .filter(|c| c.relation() == Relation::Eq)
        .map(|c| c.normal().to_vec())
        .collect();
    let ge_rows: Vec<Vec<Int>> = cell
        .constraints()
        .iter()
        .filter(|c| c.relation() == Relation::Ge)
        .map(|c| c.normal().to_vec())
        .collect();

    // Restrict to the equality subspace: x = S y with S's columns a basis.
    let subspace: Vec<Vec<Int>> = if eq_rows.is_empty() {
        (0..dim)
            .map(|i| {
                let mut e = vec![Int::zero(); dim];
                e[i] = Int::from(1);
                e
            })
            .collect()
    } else {
        RatMatrix::from_int_rows(&eq_rows).null_space()
    };
    let s = subspace.len();
    if s == 0 {
        return Ok(ConeV::zero(dim));
    }

    // Transform inequality normals into subspace coordinates.
    let mut rows = Vec::new();
    for a in &ge_rows {
        let transformed: Vec<Int> = subspace.iter().map(|col| dot(a, col)).collect();
        if !is_zero_vec(&transformed) {
            rows.push(primitive(&transformed)?);
        }
    }

    let (rays_y, lin_y) = dd_inequalities(s, &rows);

    let back = |y: &[Int]| -> Vec<Int> {
        let mut x = vec![Int::zero(); dim];
        for (coef, col) in y.iter().zip(&subspace) {
            for (xi, ci) in x.iter_mut().zip(col) {
                *xi += coef * ci;
            }
        }
        x
    };
    ConeV::new(
        dim,
        rays_y.iter().map(|r| back(r)).collect(),
        lin_y.iter().map(|l| back(l)).collect(),
    )
}

/// A GE/EQ system cutting out exactly the closed cone generated by `cone`.
/// Dualize: the polar of the generated cone is itself an H-cone whose
/// generators are the constraints of the original.
pub fn v_to_h(cone: &ConeV) -> Result<Cell> {
    let dim = cone.dim();
    let mut dual_constraints = Vec::new();
    for r in cone.rays() {
        dual_constraints.push(HalfSpace::new(r, Relation::Ge)?);
    }
    for l in cone.lineality() {
        dual_constraints.push(HalfSpace::new(l, Relation::Eq)?);
    }
    let dual_cell = Cell::new(dim, dual_constraints)?;
    let dual_gen = h_to_v(&dual_cell)?;
    let mut rows = Vec::new();
    for r in dual_gen.rays() {
        rows.push((r.clone(), Relation::Ge));
    }
    for l in dual_gen.lineality() {
        rows.push((l.clone(), Relation::Eq));
    }
    Cell::from_raw(dim, rows)
}

/// Incremental double description for a pure inequality system, starting
/// from the full space.
fn dd_inequalities(dim: usize, rows: &[Vec<Int>]) -> (Vec<Vec<Int>>, Vec<Vec<Int>>) {
    let mut lineality: Vec<Vec<Int>> = (0..dim)
        .map(|i| {
            let mut e = vec![Int::zero(); dim];
            e[i] = Int::from(1);
            e
        })
        .collect();
    let mut rays: Vec<Vec<Int>> = Vec::new();
    let mut processed: Vec<Vec<Int>> = Vec::new();

    for v in rows {
        if let Some(idx) = lineality.iter().position(|l| !dot(v, l).is_zero()) {
            // A lineality generator leaves the lineality space and is
            // released as a ray on the positive side of v.
            let mut l0 = lineality.remove(idx);
            if dot(v, &l0).is_negative() {
                l0 = l0.iter().map(|x| -x).collect();
            }
            let c0 = dot(v, &l0);
            for l in lineality.iter_mut() {
                let c = dot(v, l);
                *l = primitive(&combine(&c0, l, &(-c), &l0)).expect("independent basis");
            }
            for r in rays.iter_mut() {
                let c = dot(v, r);
                *r = primitive(&combine(&c0, r, &(-c), &l0)).expect("nonzero ray");
            }
            rays.push(l0);
            dedup_rays(&mut rays);
        } else {
            let evals: Vec<Int> = rays.iter().map(|r| dot(v, r)).collect();
            let has_neg = evals.iter().any(Signed::is_negative);
            if has_neg {
                let mut next: Vec<Vec<Int>> = Vec::new();
                for (r, e) in rays.iter().zip(&evals) {
                    if !e.is_negative() {
                        next.push(r.clone());
                    }
                }
                for (pi, pe) in evals.iter().enumerate() {
                    if !pe.is_positive() {
                        continue;
                    }
                    for (ni, ne) in evals.iter().enumerate() {
                        if !ne.is_negative() {
                            continue;
                        }
                        if !adjacent(pi, ni, &rays, &processed) {
                            continue;
                        }
                        let comb = combine(pe, &rays[ni], &(-ne.clone()), &rays[pi]);
                        if !is_zero_vec(&comb) {
                            next.push(primitive(&comb).expect("nonzero"));
                        }
                    }
                }
                rays = next;
                dedup_rays(&mut rays);
            }
        }
        processed.push(v.clone());
    }
    (rays, lineality)
}

fn dedup_rays(rays: &mut Vec<Vec<Int>>) {
    rays.sort();
    rays.dedup();
}

/// Combinatorial adjacency: rays `p` and `n` are adjacent iff no other ray
/// is tight on every processed constraint both of them are tight on.
fn adjacent(p: usize, n: usize, rays: &[Vec<Int>], processed: &[Vec<Int>]) -> bool {
    let zp = zero_set(&rays[p], processed);
    let zn = zero_set(&rays[n], processed);
    let common: Vec<u64> = zp.iter().zip(&zn).map(|(a, b)| a & b).collect();
    for (i, w) in rays.iter().enumerate() {
        if i == p || i == n {
            continue;
        }
        let zw = zero_set(w, processed);
        if common.iter().zip(&zw).all(|(c, z)| c & !z == 0) {
            return false;
        }
    }
    true
}

fn zero_set(ray: &[Int], processed: &[Vec<Int>]) -> Vec<u64> {
    let mut bits = vec![0u64; processed.len() / 64 + 1];
    for (i, row) in processed.iter().enumerate() {
        if dot(row, ray).is_zero() {
            bits[i / 64] |= 1 << (i % 64);
        }
    }
    bits
}
