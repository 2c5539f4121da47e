//! Minkowski sums of cones over sphere subsets, the join of subsets of two
//! character spheres, and pullback along a rational linear map.

use num_traits::Zero;

use super::dd::{h_to_v, v_to_h, ConeV};
use super::halfspace::{Cell, Relation, SphSet};
use crate::num::{rat_vec_to_primitive, Int, Rat};
use crate::RatMatrix;
use crate::{Error, Result};

impl SphSet {
    /// Points `u + v` with `u` in the closed cone over `self`, `v` in the
    /// closed cone over `other`, `u + v` nonzero. The cone over the empty
    /// set is the origin, so the empty set is the neutral element.
    pub fn cone_sum(&self, other: &SphSet) -> Result<SphSet> {
        if self.dim() != other.dim() {
            return Err(Error::DimensionMismatch {
                expected: self.dim(),
                got: other.dim(),
            });
        }
        if self.is_empty_set() {
            return Ok(other.clone());
        }
        if other.is_empty_set() {
            return Ok(self.clone());
        }
        let mut cells = Vec::new();
        for a in self.cells() {
            let ca = h_to_v(a)?;
            for b in other.cells() {
                let cb = h_to_v(b)?;
                cells.push(sum_cell(&ca, &cb)?);
            }
        }
        SphSet::new(self.dim(), cells)
    }

    /// The join inside the sphere of the product: `self` embeds on the first
    /// coordinate block, `other` on the second, and cones are summed.
    pub fn join(&self, other: &SphSet) -> Result<SphSet> {
        let (m, n) = (self.dim(), other.dim());
        let dim = m + n;
        if self.is_empty_set() && other.is_empty_set() {
            return Ok(SphSet::empty(dim));
        }
        if self.is_empty_set() {
            return embed(other, m, 0);
        }
        if other.is_empty_set() {
            return embed(self, 0, n);
        }
        let mut cells = Vec::new();
        for a in self.cells() {
            let ca = pad_cone(&h_to_v(a)?, 0, n);
            for b in other.cells() {
                let cb = pad_cone(&h_to_v(b)?, m, 0);
                cells.push(sum_cell(&ca, &cb)?);
            }
        }
        SphSet::new(dim, cells)
    }

    /// Pullback along `map` (from a `map.cols()`-dimensional character space
    /// to a `map.rows()`-dimensional one): each normal `v` becomes `v * map`.
    ///
    /// Cone semantics: the result contains every nonzero `x` with
    /// `map(x)` in the closed cone of some cell, INCLUDING `x` in the kernel
    /// of `map`. Callers intersect with a kernel or diagonal subspace cell
    /// where those extra rays collapse to the origin.
    pub fn preimage(&self, map: &RatMatrix) -> Result<SphSet> {
        if self.dim() != map.rows() {
            return Err(Error::DimensionMismatch {
                expected: self.dim(),
                got: map.rows(),
            });
        }
        let dim = map.cols();
        let mut cells = Vec::new();
        for cell in self.cells() {
            let mut rows = Vec::new();
            for c in cell.constraints() {
                let v: Vec<Rat> = c.normal().iter().map(|x| Rat::from(x.clone())).collect();
                let composed = map.row_vec_times(&v)?;
                let normal = if composed.iter().all(Zero::is_zero) {
                    vec![Int::zero(); dim]
                } else {
                    rat_vec_to_primitive(&composed)?
                };
                rows.push((normal, c.relation()));
            }
            cells.push(Cell::from_raw(dim, rows)?);
        }
        SphSet::new(dim, cells)
    }
}

fn sum_cell(a: &ConeV, b: &ConeV) -> Result<Cell> {
    let mut rays = a.rays().to_vec();
    rays.extend_from_slice(b.rays());
    let mut lineality = a.lineality().to_vec();
    lineality.extend_from_slice(b.lineality());
    v_to_h(&ConeV::new(a.dim(), rays, lineality)?)
}

/// Pads generators with `left` zero coordinates before and `right` after.
fn pad_cone(c: &ConeV, left: usize, right: usize) -> ConeV {
    let pad = |v: &Vec<Int>| -> Vec<Int> {
        let mut out = vec![Int::zero(); left];
        out.extend(v.iter().cloned());
        out.extend(std::iter::repeat(Int::zero()).take(right));
        out
    };
    ConeV::new(
        c.dim() + left + right,
        c.rays().iter().map(&pad).collect(),
        c.lineality().iter().map(&pad).collect(),
    )
    .expect("padding preserves nonzero generators")
}

/// The image of `s` inside the padded sphere: points whose added block is
/// zero and whose original block lies in `s`.
fn embed(s: &SphSet, left: usize, right: usize) -> Result<SphSet> {
    let dim = s.dim() + left + right;
    let mut cells = Vec::new();
    for cell in s.cells() {
        let mut rows: Vec<(Vec<Int>, Relation)> = Vec::new();
        for c in cell.constraints() {
            let mut normal = vec![Int::zero(); left];
            normal.extend(c.normal().iter().cloned());
            normal.extend(std::iter::repeat(Int::zero()).take(right));
            rows.push((normal, c.relation()));
        }
        for i in (0..left).chain(left + s.dim()..dim) {
            let mut e = vec![Int::zero(); dim];
            e[i] = Int::from(1);
            rows.push((e, Relation::Eq));
        }
        cells.push(Cell::from_raw(dim, rows)?);
    }
    SphSet::new(dim, cells)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::{HalfSpace, RayPoint};
    use crate::num::{int, rat};

    fn ray(v: &[i64]) -> RayPoint {
        let w: Vec<Int> = v.iter().map(|&x| int(x)).collect();
        RayPoint::new(&w).unwrap()
    }

    fn halfline(sign: i64) -> SphSet {
        SphSet::from_cell(Cell::new(1, vec![HalfSpace::ge(&[sign])]).unwrap()).unwrap()
    }

    #[test]
    fn cone_sum_of_axes_is_quadrant() {
        let ex = SphSet::from_cell(
            Cell::new(2, vec![HalfSpace::ge(&[1, 0]), HalfSpace::eq(&[0, 1])]).unwrap(),
        )
        .unwrap();
        let ey = SphSet::from_cell(
            Cell::new(2, vec![HalfSpace::eq(&[1, 0]), HalfSpace::ge(&[0, 1])]).unwrap(),
        )
        .unwrap();
        let sum = ex.cone_sum(&ey).unwrap();
        let quadrant = SphSet::from_cell(
            Cell::new(2, vec![HalfSpace::ge(&[1, 0]), HalfSpace::ge(&[0, 1])]).unwrap(),
        )
        .unwrap();
        assert!(sum.equal(&quadrant).unwrap());
    }

    #[test]
    fn cone_sum_with_empty_is_identity() {
        let s = SphSet::from_cell(Cell::new(2, vec![HalfSpace::ge(&[1, 2])]).unwrap()).unwrap();
        assert_eq!(s.cone_sum(&SphSet::empty(2)).unwrap(), s);
        assert_eq!(SphSet::empty(2).cone_sum(&s).unwrap(), s);
    }

    #[test]
    fn join_of_positive_rays_is_quadrant() {
        let sum = halfline(1).join(&halfline(1)).unwrap();
        let quadrant = SphSet::from_cell(
            Cell::new(2, vec![HalfSpace::ge(&[1, 0]), HalfSpace::ge(&[0, 1])]).unwrap(),
        )
        .unwrap();
        assert!(sum.equal(&quadrant).unwrap());
    }

    #[test]
    fn join_with_empty_embeds() {
        let joined = SphSet::full(1).join(&SphSet::empty(1)).unwrap();
        let line = SphSet::from_cell(Cell::new(2, vec![HalfSpace::eq(&[0, 1])]).unwrap()).unwrap();
        assert!(joined.equal(&line).unwrap());
        assert!(joined.member(&ray(&[1, 0])).unwrap());
        assert!(joined.member(&ray(&[-1, 0])).unwrap());
        assert!(!joined.member(&ray(&[0, 1])).unwrap());

        let empty = SphSet::empty(1).join(&SphSet::empty(1)).unwrap();
        assert!(empty.is_empty_set());
        assert_eq!(empty.dim(), 2);
    }

    #[test]
    fn preimage_along_projection() {
        // First-coordinate projection from dim 2 to dim 1.
        let proj = RatMatrix::new(vec![vec![rat(1, 1), rat(0, 1)]]).unwrap();
        let pre = halfline(1).preimage(&proj).unwrap();
        let expected =
            SphSet::from_cell(Cell::new(2, vec![HalfSpace::ge(&[1, 0])]).unwrap()).unwrap();
        assert!(pre.equal(&expected).unwrap());
        // Kernel rays are included by design.
        assert!(pre.member(&ray(&[0, 1])).unwrap());
        assert!(pre.member(&ray(&[0, -1])).unwrap());

        let empty = SphSet::empty(1).preimage(&proj).unwrap();
        assert!(empty.is_empty_set());
        assert_eq!(empty.dim(), 2);
    }
}
